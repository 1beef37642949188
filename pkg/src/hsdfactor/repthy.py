"""Explicit realizations of the spin representations and their projectors.

Simplicial monogenic polynomial spaces realize the half-integral
irreducibles; their dimensions are cross-checked against an independent
Weyl dimension oracle.  The tensor product of an integral irreducible
with the spinor space is realized as simplicial harmonics tensored with
spinor columns, and the quadratic Casimir splits it into isotypic
pieces via Lagrange spectral projectors, all exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .clifford import gamma_rep
from .gaussian import QQi, QQI_ONE, QQI_ZERO
from .linalg import Mat, ResourceCapError, SpanSolver
from .polyspace import (
    Compose,
    CoordOp,
    Dirac,
    LaplaceOp,
    MixedEuler,
    MixedLaplace,
    ScalarMix,
    SpinorMat,
    SpinorPoly,
    apply,
    exponents,
    operator_matrix,
    spinor_unit,
)
from .weights import Weight, is_dominant, summand_weights

DEFAULT_CELL_CAP = 4_000_000


def _rank_of(m: int) -> int:
    return (m - 1) // 2


def pad_weight(w: Weight, n: int) -> Weight:
    if w.rank > n:
        raise ValueError(f"weight {w} does not fit rank {n}")
    return Weight(w.entries + (0,) * (n - w.rank), w.spin)


def rho(m: int) -> tuple:
    n = _rank_of(m)
    return tuple(Fraction(m - 2 * (i + 1), 2) for i in range(n))


def weyl_dim(w: Weight, m: int) -> int:
    """Weyl dimension formula for the odd orthogonal algebra, exact.

    Positive roots are eps_i (short) and eps_i +/- eps_j for i < j.
    The weight is padded with zeros to the full rank.
    """
    n = _rank_of(m)
    w = pad_weight(w, n)
    if not is_dominant(w):
        raise ValueError(f"{w} is not dominant")
    r = rho(m)
    a = [v + ri for v, ri in zip(w.values(), r)]
    num = Fraction(1)
    den = Fraction(1)
    for i in range(n):
        num *= a[i]
        den *= r[i]
        for j in range(i + 1, n):
            num *= (a[i] - a[j]) * (a[i] + a[j])
            den *= (r[i] - r[j]) * (r[i] + r[j])
    dim = num / den
    if dim.denominator != 1 or dim <= 0:
        raise AssertionError(f"Weyl dimension came out non-integral: {dim}")
    return int(dim)


def casimir_eigenvalue(kappa: Weight, m: int) -> Fraction:
    """<kappa, kappa + 2 rho> for the quadratic Casimir, exact."""
    n = _rank_of(m)
    kappa = pad_weight(kappa, n)
    vals = kappa.values()
    return sum((v * (v + 2 * ri) for v, ri in zip(vals, rho(m))), Fraction(0))


@dataclass
class RealizedSpace:
    """Explicit polynomial model of one space of values.

    label is the padded highest weight (half-integral for spin modules,
    integral for the tensor-with-spinors ambient); basis elements are
    polynomials in the dummy variables only (x-degree 0).
    """

    label: Weight
    m: int
    k: int
    degrees: tuple
    basis: list
    _solver: SpanSolver = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def solver(self) -> SpanSolver:
        if self._solver is None:
            self._solver = SpanSolver([b.coordinates() for b in self.basis])
        return self._solver


def _scalar_component_basis(m: int, k: int, degrees) -> list:
    """Monomials times the first spinor unit: a scalar-polynomial stand-in."""
    dim = 2 ** _rank_of(m)
    groups = [list(exponents(m, d)) for d in (0,) + tuple(degrees)]

    def combine(idx):
        if idx == len(groups):
            yield ()
            return
        for head in groups[idx]:
            for tail in combine(idx + 1):
                yield head + tail

    vec = tuple(QQI_ONE if s == 0 else QQI_ZERO for s in range(dim))
    return [SpinorPoly(m, k, {exp: vec}) for exp in combine(0)]


def _stacked_nullspace(specs, domain, cap):
    """Joint kernel of several operators on an explicit basis."""
    from .linalg import sparse_nullspace

    rows = []
    row_index = {}
    ncols = len(domain)
    for si, spec in enumerate(specs):
        for j, b in enumerate(domain):
            image = apply(spec, b)
            for key, val in image.coordinates().items():
                tagged = (si, key)
                i = row_index.setdefault(tagged, len(row_index))
                while len(rows) <= i:
                    rows.append({})
                rows[i][j] = val
    if len(rows) * ncols > cap:
        raise ResourceCapError(
            f"elimination size {len(rows)}x{ncols} exceeds cap {cap}"
        )
    vectors = sparse_nullspace(rows, ncols)
    out = []
    for vec in vectors:
        poly = SpinorPoly(domain[0].m, domain[0].k)
        for j, c in vec.items():
            poly = poly + domain[j].scale(c)
        out.append(poly)
    return out


@lru_cache(maxsize=None)
def simplicial_monogenic_basis(lam: Weight, m: int, cap: int = DEFAULT_CELL_CAP) -> RealizedSpace:
    """Exact basis of the simplicial monogenic component of shape lam.

    The space carries homogeneity degrees (lam_1, ..., lam_k) in the
    dummy variables and is cut out by all Dirac(u_p) together with the
    mixed Euler operators u_p . d_q for p < q.  Its dimension must equal
    the Weyl dimension of the spin-shifted label; that equality is
    asserted here because the two computations are fully independent.
    """
    if lam.spin:
        raise ValueError("simplicial shapes are integral weights")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    n = _rank_of(m)
    degrees = tuple(e for e in lam.entries if e > 0)
    k = len(degrees)
    if k > n:
        raise ValueError(f"{lam} has more than n = {n} nonzero rows")
    label = pad_weight(lam, n).spin_shifted()
    if k == 0:
        basis = [spinor_unit(m, 0, s) for s in range(2 ** n)]
        return RealizedSpace(label, m, 0, (), basis)
    domain = []
    dim = 2 ** n
    groups = [list(exponents(m, d)) for d in (0,) + degrees]

    def combine(idx):
        if idx == len(groups):
            yield ()
            return
        for head in groups[idx]:
            for tail in combine(idx + 1):
                yield head + tail

    for exp in combine(0):
        for s in range(dim):
            vec = tuple(QQI_ONE if t == s else QQI_ZERO for t in range(dim))
            domain.append(SpinorPoly(m, k, {exp: vec}))
    specs = [Dirac(p) for p in range(1, k + 1)]
    specs += [MixedEuler(p, q) for p in range(1, k + 1) for q in range(p + 1, k + 1)]
    basis = _stacked_nullspace(specs, domain, cap)
    expected = weyl_dim(label, m)
    if len(basis) != expected:
        raise AssertionError(
            f"simplicial monogenic dimension {len(basis)} != Weyl dimension {expected} for {lam}, m={m}"
        )
    return RealizedSpace(label, m, k, degrees, basis)


def simplicial_harmonic_ambient(lam: Weight, m: int, cap: int = DEFAULT_CELL_CAP) -> RealizedSpace:
    """Realization of (integral irreducible of shape lam) tensor spinors.

    Scalar simplicial harmonics: each u_p harmonic, cross-harmonic in
    every pair, and killed by the mixed Euler operators for p < q.  The
    constraints are scalar, so the basis is (scalar harmonics) tensor
    (spinor units); the scalar dimension is checked against the Weyl
    oracle for the integral label.
    """
    if lam.spin:
        raise ValueError("ambient shapes are integral weights")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    n = _rank_of(m)
    degrees = tuple(e for e in lam.entries if e > 0)
    k = len(degrees)
    if k > n:
        raise ValueError(f"{lam} has more than n = {n} nonzero rows")
    label = pad_weight(lam, n)
    dim = 2 ** n
    if k == 0:
        basis = [spinor_unit(m, 0, s) for s in range(dim)]
        return RealizedSpace(label, m, 0, (), basis)
    scalar_domain = _scalar_component_basis(m, k, degrees)
    specs = [LaplaceOp(p) for p in range(1, k + 1)]
    specs += [MixedLaplace(p, q) for p in range(1, k + 1) for q in range(p + 1, k + 1)]
    specs += [MixedEuler(p, q) for p in range(1, k + 1) for q in range(p + 1, k + 1)]
    scalars = _stacked_nullspace(specs, scalar_domain, cap)
    expected = weyl_dim(label, m)
    if len(scalars) != expected:
        raise AssertionError(
            f"simplicial harmonic dimension {len(scalars)} != Weyl dimension {expected} for {lam}, m={m}"
        )
    basis = []
    for h in scalars:
        for s in range(dim):
            terms = {}
            for exp, vec in h.terms.items():
                c = vec[0]
                terms[exp] = tuple(c if t == s else QQI_ZERO for t in range(dim))
            basis.append(SpinorPoly(m, k, terms))
    return RealizedSpace(label, m, k, degrees, basis)


def so_generator_spec(a: int, b: int, m: int, k: int):
    """L_ab acting on dummy-variable polynomials with spinor values.

    Orbital part sum_p (u_{p,b} d_{p,a} - u_{p,a} d_{p,b}) plus the spin
    part gamma_a gamma_b / 2; indices a, b are 0-based coordinates.  The
    orbital sign is fixed by requiring both parts to close under the
    same brackets ([L_12, L_13] = L_23), which the eigenvalue match in
    the projector construction then confirms."""
    parts = []
    for p in range(1, k + 1):
        base = p * m
        parts.append((Fraction(1), CoordOp(base + b, base + a)))
        parts.append((Fraction(-1), CoordOp(base + a, base + b)))
    gam = gamma_rep(m)
    half = QQi(Fraction(1, 2))
    spin_mat = (gam.generators[a] * gam.generators[b]).scale(half)
    parts.append((Fraction(1), SpinorMat(tuple(tuple(row) for row in spin_mat.rows))))
    return ScalarMix(tuple(parts))


def casimir_spec(m: int, k: int):
    """Quadratic Casimir, normalized so eigenvalues are <k, k + 2 rho>."""
    parts = []
    for a in range(m):
        for b in range(a + 1, m):
            lab = so_generator_spec(a, b, m, k)
            parts.append((Fraction(-1), Compose((lab, lab))))
    return ScalarMix(tuple(parts))


@dataclass
class ProjectorSet:
    """Casimir spectral projectors of one ambient realization."""

    ambient: RealizedSpace
    weights: list          # dominant half-integral summand labels
    eigenvalues: list      # matching Casimir eigenvalues
    projectors: list       # matching Mat, acting on ambient coordinates
    casimir: Mat

    def projector(self, kappa: Weight) -> Mat:
        for w, p in zip(self.weights, self.projectors):
            if w == kappa:
                return p
        raise KeyError(f"{kappa} is not a summand")


def casimir_matrix(ambient: RealizedSpace) -> Mat:
    spec = casimir_spec(ambient.m, ambient.k)
    lin = operator_matrix(spec, ambient.basis, ambient.basis)
    return Mat([[lin.entry(i, j) for j in range(ambient.dim)] for i in range(ambient.dim)])


@lru_cache(maxsize=None)
def casimir_projectors(lam: Weight, m: int, cap: int = DEFAULT_CELL_CAP) -> ProjectorSet:
    """Spectral projectors of the Casimir on the lam-tensor-spinor ambient.

    One projector per dominant summand weight, built by Lagrange
    interpolation over the predicted eigenvalues; idempotence, mutual
    orthogonality, completeness and the spectral property are all
    verified exactly, and an eigenvalue collision is a hard error.
    """
    n = _rank_of(m)
    lam_full = pad_weight(lam, n)
    summands = summand_weights(lam_full)
    kappas = [w for w, _ in summands]
    eigs = [casimir_eigenvalue(w, m) for w in kappas]
    if len(set(eigs)) != len(eigs):
        raise ArithmeticError(
            f"Casimir eigenvalue collision among summands of {lam}: {eigs}"
        )
    ambient = simplicial_harmonic_ambient(lam, m, cap=cap)
    cas = casimir_matrix(ambient)
    d = ambient.dim
    ident = Mat.identity(d)
    projectors = []
    for kappa, ck in zip(kappas, eigs):
        proj = ident
        for other in eigs:
            if other == ck:
                continue
            proj = (cas - ident.scale(QQi(other))) * proj
            proj = proj.scale(QQi(1) / QQi(ck - other))
        projectors.append(proj)
    # exact structural checks
    total = Mat.zero(d, d)
    for kappa, ck, p in zip(kappas, eigs, projectors):
        if p * p != p:
            raise AssertionError(f"projector for {kappa} is not idempotent")
        if cas * p != p.scale(QQi(ck)):
            raise AssertionError(f"projector for {kappa} misses its eigenvalue")
        total = total + p
    for i in range(len(projectors)):
        for j in range(len(projectors)):
            if i != j and not (projectors[i] * projectors[j]).is_zero():
                raise AssertionError("projectors are not mutually orthogonal")
    if total != ident:
        raise AssertionError("projectors do not sum to the identity")
    return ProjectorSet(ambient, kappas, eigs, projectors, cas)


class AmbientOperator:
    """A matrix on an ambient value space, lifted to polynomial functions.

    The lift acts on each x-monomial coefficient separately: the
    dummy-variable part is coordinatized in the ambient basis, hit with
    the matrix, and rebuilt.  Inputs must take values in the ambient.
    """

    def __init__(self, ambient: RealizedSpace, mat: Mat):
        self.ambient = ambient
        self.mat = mat

    def __call__(self, f: SpinorPoly) -> SpinorPoly:
        amb = self.ambient
        m = amb.m
        if f.is_zero():
            return f
        by_x = {}
        for exp, vec in f.terms.items():
            xpart = exp[:m]
            upart = (0,) * m + exp[m:]
            by_x.setdefault(xpart, {})[upart] = vec
        solver = amb.solver()
        out = SpinorPoly(m, amb.k)
        for xpart, uterms in by_x.items():
            coords = {}
            for uexp, vec in uterms.items():
                for s, c in enumerate(vec):
                    if c:
                        coords[(uexp, s)] = c
            coeffs = self.mat.matvec(solver.coords(coords))
            for j, c in enumerate(coeffs):
                if not c:
                    continue
                piece = amb.basis[j].scale(c)
                shifted = {xpart + exp[m:]: vec for exp, vec in piece.terms.items()}
                out = out + SpinorPoly(m, amb.k, shifted)
        return out
