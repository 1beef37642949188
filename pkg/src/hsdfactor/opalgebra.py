"""Formal algebra of twistor / higher-spin Dirac / Laplace symbols.

Words are composable chains of raw twistor generators T(target<-source)
and HSD generators R(at), with a central Laplace power attached per
word.  Rewriting implements three families of relations:

  * adjacent twistor steps in distinct coordinates swap with a sign
    flip; when the alternate intermediate weight is non-dominant the
    whole word collapses to zero (every symbol at a non-dominant weight
    is zero by convention),
  * an HSD symbol moves right past a twistor with a sign flip,
  * Laplace symbols are central and tracked as a single exponent.

Raw generators anticommute across elementary squares, so path
operators built from them are path-dependent up to sign.  The explicit
normalization sign (-1)^(mu_{p+1} + ... + mu_n) attached to the step
raising coordinate p at mu makes every square commute; path operators
carry the product of these signs and become path-independent.

The Laplace expander eliminates a Laplace symbol at a dominant weight k
through the module's fixed convention

    Lap(k) = -R(k)^2 - sum_i T(k <- k-e_i) T(k-e_i <- k),

the sum running over the dominant lowerings of k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .weights import (
    Weight,
    Path,
    box,
    bruhat_leq,
    canonical_path,
    enumerate_paths,
    is_dominant,
    manhattan_distance,
)
from .reports import Check, Report


@dataclass(frozen=True)
class TwistorSym:
    target: Weight
    source: Weight

    def __post_init__(self):
        if not (self.target.spin and self.source.spin):
            raise ValueError("twistor symbols live on half-integral weights")
        if manhattan_distance(self.target, self.source) != 1:
            raise ValueError(f"twistor endpoints {self.target}, {self.source} not at distance 1")

    @property
    def step(self) -> tuple[int, int]:
        """(0-based coordinate, +1 or -1) from source to target."""
        for i, (t, s) in enumerate(zip(self.target.entries, self.source.entries)):
            if t != s:
                return i, t - s
        raise AssertionError("degenerate twistor")

    def __str__(self):
        return f"T[{self.target}<-{self.source}]"


@dataclass(frozen=True)
class HsdSym:
    at: Weight

    def __post_init__(self):
        if not self.at.spin:
            raise ValueError("HSD symbols live on half-integral weights")

    @property
    def target(self) -> Weight:
        return self.at

    @property
    def source(self) -> Weight:
        return self.at

    def __str__(self):
        return f"R[{self.at}]"


@dataclass(frozen=True)
class OperatorWord:
    """Composable symbol chain with a central Laplace power."""

    target: Weight
    source: Weight
    syms: tuple = ()
    lap: int = 0

    def __post_init__(self):
        if self.lap < 0:
            raise ValueError("negative Laplace power")
        if self.syms:
            if self.syms[0].target != self.target or self.syms[-1].source != self.source:
                raise ValueError("word endpoints do not match its symbols")
            for left, right in zip(self.syms, self.syms[1:]):
                if left.source != right.target:
                    raise ValueError(f"non-composable symbols {left} * {right}")
        elif self.target != self.source:
            raise ValueError("empty word must have equal endpoints")

    def sort_key(self):
        return (self.lap, len(self.syms), str(self))

    def __str__(self):
        parts = [str(s) for s in self.syms]
        if self.lap:
            parts.append(f"Lap[{self.source}]^{self.lap}")
        return "*".join(parts) if parts else f"Id[{self.source}]"


class OperatorExpr:
    """Exact-rational linear combination of words with common endpoints."""

    __slots__ = ("terms", "target", "source")

    def __init__(self, terms=None, target=None, source=None):
        self.terms = {}
        if terms:
            for word, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    self.terms[word] = coeff
        if self.terms:
            first = next(iter(self.terms))
            self.target = first.target
            self.source = first.source
            for word in self.terms:
                if word.target != self.target or word.source != self.source:
                    raise ValueError("mixed endpoints in one expression")
        else:
            self.target = target
            self.source = source

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if (self.target, self.source) != (other.target, other.source):
            raise ValueError("cannot add expressions with different endpoints")
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = terms.get(word, Fraction(0)) + coeff
            if acc:
                terms[word] = acc
            elif word in terms:
                del terms[word]
        return OperatorExpr(terms, self.target, self.source)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "OperatorExpr":
        c = Fraction(c)
        if not c:
            return OperatorExpr()
        return OperatorExpr({w: c * v for w, v in self.terms.items()}, self.target, self.source)

    def __mul__(self, other):
        """Composition: self applied after other."""
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return OperatorExpr()
        if self.source != other.target:
            raise ValueError(f"cannot compose {self.source} after {other.target}")
        terms = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                word = OperatorWord(wa.target, wb.source, wa.syms + wb.syms, wa.lap + wb.lap)
                acc = terms.get(word, Fraction(0)) + ca * cb
                if acc:
                    terms[word] = acc
                elif word in terms:
                    del terms[word]
        return OperatorExpr(terms, self.target, other.source)

    def __eq__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"({c})*{w}" for w, c in self.sorted_terms())


ZERO = OperatorExpr()


def identity_expr(at: Weight) -> OperatorExpr:
    if not is_dominant(at):
        return ZERO
    return OperatorExpr({OperatorWord(at, at): Fraction(1)})


def normalization_sign(mu: Weight, p: int) -> int:
    """Sign attached to the step raising coordinate p (1-based) at mu.

    Chosen as (-1)^(mu_{p+1} + ... + mu_n); with this rescaling every
    elementary square of twistor steps commutes, which is exactly what
    path independence needs.
    """
    if not 1 <= p <= mu.rank:
        raise ValueError(f"coordinate {p} out of range for rank {mu.rank}")
    if not is_dominant(mu):
        raise ValueError(f"{mu} is not dominant")
    raised = mu.shifted(p - 1, 1)
    if not is_dominant(raised):
        raise ValueError(f"{mu} + eps_{p} is not dominant")
    return -1 if sum(mu.entries[p:]) % 2 else 1


def twistor(target: Weight, source: Weight) -> OperatorExpr:
    """Normalized twistor symbol; zero when either weight is non-dominant."""
    if target.spin != source.spin or not target.spin:
        raise ValueError("twistor endpoints must both be half-integral")
    if manhattan_distance(target, source) != 1:
        raise ValueError(f"twistor endpoints {target}, {source} not at distance 1")
    if not (is_dominant(target) and is_dominant(source)):
        return ZERO
    sym = TwistorSym(target, source)
    idx, delta = sym.step
    lower = source if delta > 0 else target
    sign = normalization_sign(lower.integral_part(), idx + 1)
    return OperatorExpr({OperatorWord(target, source, (sym,)): Fraction(sign)})


def hsd_sym(at: Weight) -> OperatorExpr:
    if not at.spin:
        raise ValueError("HSD symbols live on half-integral weights")
    if not is_dominant(at):
        return ZERO
    return OperatorExpr({OperatorWord(at, at, (HsdSym(at),)): Fraction(1)})


def laplace_sym(at: Weight, power: int = 1) -> OperatorExpr:
    if not at.spin:
        raise ValueError("Laplace symbols live on half-integral weights")
    if not is_dominant(at):
        return ZERO
    return OperatorExpr({OperatorWord(at, at, (), power): Fraction(1)})


def make_symbol(kind: str, *ws: Weight) -> OperatorExpr:
    """Uniform constructor: kind in {'twistor', 'hsd', 'laplace'}."""
    kind = kind.lower()
    if kind == "twistor":
        target, source = ws
        return twistor(target, source)
    if kind == "hsd":
        (at,) = ws
        return hsd_sym(at)
    if kind == "laplace":
        (at,) = ws
        return laplace_sym(at)
    raise ValueError(f"unknown symbol kind {kind!r}")


# ---------------------------------------------------------------------------
# normal form


def _dominant_entries(entries) -> bool:
    return all(entries[i] >= entries[i + 1] for i in range(len(entries) - 1)) and entries[-1] >= 0


def _word_normal_form(word: OperatorWord):
    """Return (sign, canonical word) or (0, None) when the word dies.

    HSD symbols migrate to the source end (sign flip per twistor
    passed).  The twistor chain then sorts into non-decreasing change
    order as seen from the source; the sign picks up the parity of the
    distinct-coordinate inversions removed.

    Zero detection: adjacent distinct-coordinate steps swap freely, and
    a swap whose alternate intermediate weight is non-dominant kills
    the word.  Steps on one coordinate never pass each other, so the
    reachable reorderings are exactly the interleavings preserving each
    coordinate's internal order, and every such walk is determined
    pointwise by how many steps of each coordinate it has consumed.
    The chain therefore dies if and only if some count vector on that
    grid lands on a non-dominant weight.
    """
    sign = 1
    n_hsd = 0
    trailing_twistors = 0
    for sym in reversed(word.syms):
        if isinstance(sym, TwistorSym):
            trailing_twistors += 1
        else:
            n_hsd += 1
            if trailing_twistors % 2:
                sign = -sign
    app_steps = [sym.step for sym in reversed(word.syms) if isinstance(sym, TwistorSym)]
    src = word.source.entries

    per_coord: dict[int, list[int]] = {}
    for idx, delta in app_steps:
        per_coord.setdefault(idx, []).append(delta)
    coords = sorted(per_coord)
    prefixes = {}
    for c in coords:
        acc = [0]
        for d in per_coord[c]:
            acc.append(acc[-1] + d)
        prefixes[c] = acc

    # enumerate the full count grid (product of per-coordinate ranges)
    def grid_points():
        if not coords:
            yield ()
            return
        ranges = [range(len(per_coord[c]) + 1) for c in coords]

        def rec(i, acc):
            if i == len(coords):
                yield tuple(acc)
                return
            for k in ranges[i]:
                yield from rec(i + 1, acc + [k])

        yield from rec(0, [])

    for counts in grid_points():
        entries = list(src)
        for c, k in zip(coords, counts):
            entries[c] += prefixes[c][k]
        if not _dominant_entries(entries):
            return 0, None

    inversions = 0
    for i in range(len(app_steps)):
        for j in range(i + 1, len(app_steps)):
            if app_steps[i][0] > app_steps[j][0]:
                inversions += 1
    if inversions % 2:
        sign = -sign

    sorted_steps = [(c, d) for c in coords for d in per_coord[c]]
    spin = word.source.spin
    nodes = [Weight(tuple(src), spin)]
    cur = list(src)
    for idx, delta in sorted_steps:
        cur[idx] += delta
        nodes.append(Weight(tuple(cur), spin))
    chain = tuple(
        TwistorSym(nodes[t + 1], nodes[t]) for t in reversed(range(len(sorted_steps)))
    )
    syms = chain + (HsdSym(word.source),) * n_hsd
    return sign, OperatorWord(word.target, word.source, syms, word.lap)


def normal_form(expr: OperatorExpr) -> OperatorExpr:
    """Confluent normal form of an expression (total function)."""
    if expr.is_zero():
        return ZERO
    terms = {}
    for word, coeff in expr.terms.items():
        sign, nf = _word_normal_form(word)
        if not sign:
            continue
        acc = terms.get(nf, Fraction(0)) + sign * coeff
        if acc:
            terms[nf] = acc
        elif nf in terms:
            del terms[nf]
    if not terms:
        return ZERO
    return OperatorExpr(terms, expr.target, expr.source)


def path_operator(path: Path) -> OperatorExpr:
    """Composition of normalized twistor symbols along a path.

    Accepts paths of integral weights (shifted to their half-integral
    forms) or of half-integral weights directly.  The reverse path gives
    the reversed composition.
    """
    nodes = [w if w.spin else w.spin_shifted() for w in path.nodes]
    expr = identity_expr(nodes[0])
    for a, b in zip(nodes, nodes[1:]):
        expr = twistor(b, a) * expr
    return expr


# ---------------------------------------------------------------------------
# verification helpers


def verify_path_independence(nu: Weight, mu: Weight, cap: int = 10000) -> Report:
    """All paths (and all reverse paths) give one normal form each way."""
    if not bruhat_leq(nu, mu):
        raise ValueError(f"{nu} is not below {mu}")
    enum = enumerate_paths(nu, mu, cap=cap)
    checks = []
    forward_forms = []
    reverse_forms = []
    for p in enum.paths:
        forward_forms.append(normal_form(path_operator(p)))
        reverse_forms.append(normal_form(path_operator(p.reversed())))
    fwd_ok = all(f == forward_forms[0] for f in forward_forms) if forward_forms else True
    rev_ok = all(r == reverse_forms[0] for r in reverse_forms) if reverse_forms else True
    checks.append(Check("forward_paths_agree", fwd_ok, {"count": len(forward_forms)}))
    checks.append(Check("reverse_paths_agree", rev_ok, {"count": len(reverse_forms)}))
    if enum.truncated:
        checks.append(Check("enumeration_complete", False, {"cap": cap}))
    return Report(
        title="path_independence",
        params={"nu": nu, "mu": mu, "cap": cap},
        checks=checks,
        results={
            "path_count": len(enum.paths),
            "truncated": enum.truncated,
            "change_sequences": [list(p.changes) for p in enum.paths],
            "normal_form": str(forward_forms[0]) if forward_forms else "0",
        },
    )


@dataclass
class VanishTrace:
    """Record of how a path operator outside the box is annihilated."""

    mu: Weight
    lam: Weight
    pivot: int                 # 1-based index i with lam_i < mu_{i+1}
    lam_minus: Weight
    lam_zero: Weight
    lam_plus: Weight
    alternate: Weight          # the non-dominant alternate intermediate
    route_normal_form: OperatorExpr
    canonical_normal_form: OperatorExpr
    reverse_normal_form: OperatorExpr

    @property
    def vanished(self) -> bool:
        return (
            self.route_normal_form.is_zero()
            and self.canonical_normal_form.is_zero()
            and self.reverse_normal_form.is_zero()
        )

    def to_jsonable(self):
        from .reports import jsonable

        return {
            "mu": jsonable(self.mu),
            "lambda": jsonable(self.lam),
            "pivot_index": self.pivot,
            "triple": [jsonable(w) for w in (self.lam_minus, self.lam_zero, self.lam_plus)],
            "non_dominant_intermediate": jsonable(self.alternate),
            "vanished": self.vanished,
        }


def vanish_outside_box(mu: Weight, lam: Weight) -> VanishTrace:
    """Trace the annihilation of P(mu <- lam) for lam below mu, outside its box.

    The route passes through the triple lam_minus -> lam_zero -> lam_plus
    around the failing coordinate; the two-step composition across that
    corner has a non-dominant alternate intermediate and is therefore
    zero, which the rewriting engine detects on its own.
    """
    if not bruhat_leq(lam, mu):
        raise ValueError(f"{lam} is not below {mu}")
    if lam in box(mu):
        raise ValueError(f"{lam} lies in the box of {mu}; no vanishing to trace")
    n = mu.rank
    pivot = None
    for i in range(n - 1, 0, -1):  # 1-based index i, largest violator first
        if lam.entries[i - 1] < mu.entries[i]:
            pivot = i
            break
    if pivot is None:
        raise AssertionError("box membership test and violation search disagree")
    i = pivot
    mu_next = mu.entries[i]        # mu_{i+1} in 1-based terms
    ents = list(mu.entries)
    ents[i - 1] = mu_next - 1
    ents[i] = mu_next - 1
    lam_minus = Weight(tuple(ents))
    lam_zero = lam_minus.shifted(i - 1, 1)
    lam_plus = lam_zero.shifted(i, 1)
    alternate = lam_minus.shifted(i, 1)
    if is_dominant(alternate):
        raise AssertionError("alternate intermediate unexpectedly dominant")
    route = (
        path_operator(canonical_path(lam_plus, mu))
        * twistor(lam_plus.spin_shifted(), lam_zero.spin_shifted())
        * twistor(lam_zero.spin_shifted(), lam_minus.spin_shifted())
        * path_operator(canonical_path(lam, lam_minus))
    )
    canonical = path_operator(canonical_path(lam, mu))
    reverse = path_operator(canonical_path(lam, mu).reversed())
    return VanishTrace(
        mu=mu,
        lam=lam,
        pivot=pivot,
        lam_minus=lam_minus,
        lam_zero=lam_zero,
        lam_plus=lam_plus,
        alternate=alternate,
        route_normal_form=normal_form(route),
        canonical_normal_form=normal_form(canonical),
        reverse_normal_form=normal_form(reverse),
    )


# ---------------------------------------------------------------------------
# Laplace-power expansion


@dataclass
class FactorizationCertificate:
    """Data of one factorization Lap^p = R * middle * R + residual.

    coefficients maps each surviving integral weight lam to its constant
    (in the normalized path-operator convention); middle is the
    assembled operator between the two R factors.  For p > mu_1 the
    residual is empty and the support lies inside the box of mu.
    """

    mu: Weight
    power: int
    coefficients: dict
    middle: OperatorExpr
    residual: OperatorExpr

    def support(self):
        return sorted(self.coefficients, key=lambda w: w.entries, reverse=True)

    def to_jsonable(self):
        from .reports import jsonable

        return {
            "mu": jsonable(self.mu),
            "power": self.power,
            "coefficients": [
                {"lambda": jsonable(lam), "value": jsonable(self.coefficients[lam])}
                for lam in self.support()
            ],
            "middle": expr_jsonable(self.middle),
            "residual": expr_jsonable(self.residual),
        }


def expr_jsonable(expr: OperatorExpr):
    from .reports import jsonable

    terms = []
    for word, coeff in expr.sorted_terms():
        syms = []
        for sym in word.syms:
            if isinstance(sym, TwistorSym):
                syms.append({"kind": "twistor", "target": jsonable(sym.target), "source": jsonable(sym.source)})
            else:
                syms.append({"kind": "hsd", "at": jsonable(sym.at)})
        terms.append(
            {
                "coeff": jsonable(coeff),
                "symbols": syms,
                "laplace_power": word.lap,
                "target": jsonable(word.target),
                "source": jsonable(word.source),
            }
        )
    return {"terms": terms}


def expand_laplace_power(mu: Weight, p: int) -> FactorizationCertificate:
    """Expand Lap(mu)^p through the HSD sandwich.

    Repeatedly splits one Laplace factor at the innermost weight into
    -R^2 - sum TT, closes the R^2 branches by moving both factors out
    through the accumulated twistor chains (one sign per step), and
    recurses on the TT branches.  Branches whose chains die by the
    non-dominant-intermediate rule contribute nothing, which is what
    confines the support to the box.
    """
    if mu.spin:
        raise ValueError("expand_laplace_power takes an integral weight")
    if not is_dominant(mu):
        raise ValueError(f"{mu} is not dominant")
    if p < 1:
        raise ValueError("power must be >= 1")
    mu_s = mu.spin_shifted()
    n = mu.rank

    coefficients: dict[Weight, Fraction] = {}
    cache: dict[Weight, tuple] = {}
    residual = ZERO
    # term: (coeff, up-chain syms lam->mu, lam, remaining power, down-chain syms mu->lam)
    stack = [(Fraction(1), (), mu, p, ())]
    while stack:
        coeff, up, lam, e, down = stack.pop()
        lam_s = lam.spin_shifted()
        sigma = _chain_sign(mu_s, lam_s, up) * _chain_sign(lam_s, mu_s, down)
        if sigma == 0:
            continue  # dead chain; extending it can never revive it
        if e == 0:
            word = OperatorWord(mu_s, mu_s, up + down, 0)
            residual = residual + OperatorExpr({word: coeff})
            continue
        # R^2 branch: -R(lam) Lap^(e-1) R(lam), both R factors moved out to mu
        closed = -coeff * (-1) ** (len(up) + len(down))
        if lam not in cache:
            cpath = canonical_path(lam, mu)
            fwd = path_operator(cpath)
            rev = path_operator(cpath.reversed())
            # the reverse-path word is generally not in normal form; its
            # normal-form sign enters the change of basis to path operators
            rev_word = next(iter(rev.terms))
            rev_sigma, _ = _word_normal_form(rev_word)
            cache[lam] = (fwd, rev, rev_sigma)
        fwd, rev, rev_sigma = cache[lam]
        contrib = closed * sigma * rev_sigma * _single_coeff(fwd) * _single_coeff(rev)
        acc = coefficients.get(lam, Fraction(0)) + contrib
        if acc:
            coefficients[lam] = acc
        elif lam in coefficients:
            del coefficients[lam]
        # TT branches: descend one coordinate
        for i in range(n - 1, -1, -1):
            lower = lam.shifted(i, -1)
            if not is_dominant(lower):
                continue
            low_s = lower.spin_shifted()
            t_down = TwistorSym(low_s, lam_s)
            t_up = TwistorSym(lam_s, low_s)
            stack.append((-coeff, up + (t_up,), lower, e - 1, (t_down,) + down))

    middle = ZERO
    for lam, c in coefficients.items():
        fwd, rev, _ = cache[lam]
        e = p - manhattan_distance(mu, lam) - 1
        middle = middle + (fwd * laplace_sym(lam.spin_shifted(), e) * rev).scale(c)
    residual = normal_form(residual)

    if p > mu.entries[0]:
        if not residual.is_zero():
            raise AssertionError("residual failed to vanish for p > mu_1")
        inside = set(box(mu))
        stray = [lam for lam in coefficients if lam not in inside]
        if stray:
            raise AssertionError(f"coefficients outside the box: {stray}")
    return FactorizationCertificate(mu, p, coefficients, middle, residual)


def _chain_sign(target: Weight, source: Weight, syms: tuple) -> int:
    """Sign relating a raw twistor chain to its canonical form (0 if it dies)."""
    if not syms:
        return 1
    sign, nf = _word_normal_form(OperatorWord(target, source, syms, 0))
    return sign


def _single_coeff(expr: OperatorExpr) -> Fraction:
    if len(expr.terms) != 1:
        raise AssertionError("expected a single-word expression")
    return next(iter(expr.terms.values()))


def _bottom_position(word: OperatorWord):
    """Chain position of the lowest weight, nearest the source on ties.

    Laplace factors are central, so they may be slid to any position
    before substituting; the expander always substitutes at the current
    descended weight, i.e. at the bottom of the chain, and the
    re-expansion check has to follow the same convention.
    """
    best_j, best_w = 0, word.target
    for j in range(1, len(word.syms) + 1):
        w = word.syms[j - 1].source
        if sum(w.entries) <= sum(best_w.entries):
            best_j, best_w = j, w
    return best_j, best_w


def eliminate_laplace(expr: OperatorExpr) -> OperatorExpr:
    """Rewrite every Laplace power away via the expander's convention.

    Each elimination slides one Laplace factor to the chain's bottom
    weight w and replaces it by -R(w)^2 - sum_i T(w <- w-e_i)
    T(w-e_i <- w); the result is a pure twistor/HSD expression in
    normal form, suitable for exact equality checks.
    """
    pending = list(expr.terms.items())
    done: dict[OperatorWord, Fraction] = {}
    while pending:
        word, coeff = pending.pop()
        if word.lap == 0:
            acc = done.get(word, Fraction(0)) + coeff
            if acc:
                done[word] = acc
            elif word in done:
                del done[word]
            continue
        j, w = _bottom_position(word)
        head, tail = word.syms[:j], word.syms[j:]
        r = HsdSym(w)
        pending.append(
            (OperatorWord(word.target, word.source, head + (r, r) + tail, word.lap - 1), -coeff)
        )
        for i in range(w.rank):
            lower = w.shifted(i, -1)
            if not is_dominant(lower):
                continue
            t_up = TwistorSym(w, lower)
            t_dn = TwistorSym(lower, w)
            pending.append(
                (OperatorWord(word.target, word.source, head + (t_up, t_dn) + tail, word.lap - 1), -coeff)
            )
    return normal_form(OperatorExpr(done, expr.target, expr.source))


def certificate_reexpands(cert: FactorizationCertificate) -> bool:
    """Exact check: R * middle * R + residual re-expands to Lap(mu)^power."""
    mu_s = cert.mu.spin_shifted()
    assembled = hsd_sym(mu_s) * cert.middle * hsd_sym(mu_s) + cert.residual
    lhs = eliminate_laplace(laplace_sym(mu_s, cert.power))
    rhs = eliminate_laplace(assembled)
    return lhs == rhs
