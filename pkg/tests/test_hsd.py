import pytest
from fractions import Fraction

from hsdfactor.gaussian import QQi
from hsdfactor.hsd import (
    DerivOp,
    double_monogenic_basis,
    explicit_hsd,
    generic_twistor_hsd,
    kernel_basis,
    polyharmonic_order,
    twistor_inversion,
    verify_factorization_numeric,
    verify_identities,
    verify_induction_dims,
    x_shift,
)
from hsdfactor.polyspace import Compose, Dirac, ScalarMix, SpinorPoly, VectorMult, apply, laplace, spinor_unit
from hsdfactor.weights import Weight, weight


def test_explicit_coefficients_shape_k():
    op = explicit_hsd(weight(1), 3)
    mix = op.spec
    assert isinstance(mix, ScalarMix)
    assert mix.parts[0][0] == Fraction(1)
    assert mix.parts[1][0] == Fraction(1, 3)  # 1/(2k+m-2) at k=1, m=3


def test_explicit_coefficients_shape_kl():
    op = explicit_hsd(weight(1, 1), 5)
    outer = op.spec
    assert isinstance(outer, Compose)
    f1, f2, dx = outer.specs
    assert f1.parts[1][0] == Fraction(1, 5)  # 1/(2k+m-2)
    assert f2.parts[1][0] == Fraction(1, 3)  # 1/(2l+m-4)
    assert dx == Dirac(0)


def test_explicit_shape_zero_is_plain_dirac():
    op = explicit_hsd(weight(0), 3)
    assert op.spec == Dirac(0)


def test_value_preservation():
    op = explicit_hsd(weight(1), 3)
    for b in op.domain_basis(2):
        image = op.apply(b)
        assert apply(Dirac(1), image).is_zero()


def test_value_preservation_two_row_shape():
    from hsdfactor.polyspace import MixedEuler

    op = explicit_hsd(weight(1, 1), 5)
    for b in op.domain_basis(1)[:8]:
        image = op.apply(b)
        assert apply(Dirac(1), image).is_zero()
        assert apply(Dirac(2), image).is_zero()
        assert apply(MixedEuler(1, 2), image).is_zero()


def test_operator_matrix_per_degree():
    op = explicit_hsd(weight(1), 3)
    mat = op.matrix(1)
    assert mat.shape == (4, 12)
    assert mat.rank() == 12 - len(kernel_basis(op, 1))
    ops = generic_twistor_hsd(weight(1), 3)
    t = next(o for o in ops if o.label != o.source_label)
    tmat = t.matrix(1)
    assert tmat.shape[1] == 3 * len(t.source_basis)


def test_kernel_dims_match_monogenics():
    op0 = explicit_hsd(weight(0), 3)
    for h in range(4):
        assert len(kernel_basis(op0, h)) == 2 * (h + 1)
    # degree 0: whole value space
    op1 = explicit_hsd(weight(1), 3)
    assert len(kernel_basis(op1, 0)) == op1.value_space.dim


def test_generic_operators_and_agreement():
    ops = generic_twistor_hsd(weight(1), 3)
    pairs = {(o.label.entries, o.source_label.entries) for o in ops}
    assert pairs == {((1,), (1,)), ((1,), (0,)), ((0,), (1,)), ((0,), (0,))}
    gen_r1 = next(o for o in ops if o.label == o.source_label == Weight((1,), spin=True))
    exp_r1 = explicit_hsd(weight(1), 3)
    ratios = set()
    for h in (1, 2, 3):
        ratio = None
        for b in exp_r1.domain_basis(h):
            got = gen_r1.apply(b)
            want = exp_r1.apply(b)
            if want.is_zero():
                assert got.is_zero()
                continue
            key = next(iter(want.coordinates()))
            r = got.coordinates().get(key, QQi(0)) / want.coordinates()[key]
            assert (got - want.scale(r)).is_zero()
            ratio = r if ratio is None else ratio
            assert r == ratio
        ratios.add(repr(ratio))
    assert len(ratios) == 1  # one degree-independent scalar


def test_generic_operators_nonzero_m5():
    ops = generic_twistor_hsd(weight(1), 5)
    assert len(ops) == 4
    for op in ops:
        assert not op.deriv_op.is_zero()


def test_generic_single_summand_is_dirac():
    ops = generic_twistor_hsd(weight(0), 3)
    assert len(ops) == 1
    op = ops[0]
    for b in op.domain_basis(2):
        assert (op.apply(b) - apply(Dirac(0), b)).is_zero()


def test_twistor_maps_kernels_to_kernels():
    # edge anticommutation implies T sends ker R(source) into ker R(target)
    ops = generic_twistor_hsd(weight(1), 3)
    by_pair = {(o.label.entries, o.source_label.entries): o for o in ops}
    t_down = by_pair[((0,), (1,))]
    r_up = by_pair[((1,), (1,))]
    r_down = by_pair[((0,), (0,))]
    for f in kernel_basis(r_up, 2):
        assert r_down.apply(t_down.apply(f)).is_zero()


@pytest.mark.parametrize("lam,m", [((0,), 3), ((1,), 3)])
def test_identities_quick(lam, m):
    rep = verify_identities(Weight(lam), m, 3)
    assert rep.passed


def test_identities_match_explicit_matrix_route():
    """Tie the termwise identity check to literal matrices on one degree."""
    from hsdfactor.hsd import laplace_deriv_op, twisted_dirac_op
    from hsdfactor.repthy import casimir_projectors

    ps = casimir_projectors(weight(1), 3)
    dop = twisted_dirac_op(ps.ambient)
    top = Weight((1,), spin=True)
    proj = ps.projector(top)
    lhs = laplace_deriv_op(ps.ambient).restricted(proj).scale(-1)
    blocks = {}
    for k in ps.weights:
        for i in ps.weights:
            blocks[(k, i)] = DerivOp.constant(3, ps.projector(k)).compose(dop).restricted(ps.projector(i))
    rhs = blocks[(top, top)].compose(blocks[(top, top)])
    bottom = Weight((0,), spin=True)
    rhs = rhs + blocks[(top, bottom)].compose(blocks[(bottom, top)])
    # evaluate both on the full degree-2 component
    for alpha in [(2, 0, 0), (1, 1, 0), (0, 1, 1)]:
        for col in range(ps.ambient.dim):
            w = [QQi(1) if t == col else QQi(0) for t in range(ps.ambient.dim)]
            assert lhs.apply_monomial(alpha, w) == rhs.apply_monomial(alpha, w)


def test_polyharmonic_order_examples():
    m = 3
    h = SpinorPoly(m, 0, {(1, 1, 0): (QQi(1), QQi(0))})  # x1 x2, harmonic
    assert polyharmonic_order(h) == 1
    r2 = SpinorPoly(m, 0, {(2, 0, 0): (QQi(1), QQi(0)),
                           (0, 2, 0): (QQi(1), QQi(0)),
                           (0, 0, 2): (QQi(1), QQi(0))})
    assert polyharmonic_order(r2) == 2


def test_kernel_polyharmonicity_bound_and_sharpness():
    op = explicit_hsd(weight(1), 3)
    seen_sharp = False
    for h in range(4):
        for f in kernel_basis(op, h):
            order = polyharmonic_order(f)
            assert order <= 2
            assert laplace(0, laplace(0, f)).is_zero()
            seen_sharp = seen_sharp or order == 2
    assert seen_sharp


def test_twistor_inversion_roundtrip():
    g = spinor_unit(3, 1, 0)  # constant spinor in ker_0 R_0
    f = twistor_inversion(g, 3)
    assert f.degree(0) == 1 and f.degree(1) == 1
    assert apply(Dirac(1), f).is_zero()
    assert (apply(Dirac(0), f) - apply(VectorMult(1), g)).is_zero()


def test_twistor_inversion_zero_and_bad_input():
    z = twistor_inversion(SpinorPoly(3, 1), 3)
    assert z.is_zero()
    bad = SpinorPoly(3, 1, {(1, 0, 0, 0, 0, 0): (QQi(1), QQi(0))})  # x1 s, not in ker R_0
    with pytest.raises(ValueError):
        twistor_inversion(bad, 3)


def test_induction_dims_small():
    for k in (0, 1, 2):
        for h in (0, 1, 2):
            rep = verify_induction_dims(k, h, 3)
            assert rep.passed, (k, h, rep.results)


def test_induction_dims_m5():
    rep = verify_induction_dims(1, 2, 5)
    assert rep.passed, rep.results


def test_double_monogenics_are_in_kernel():
    op = explicit_hsd(weight(1), 3)
    for f in double_monogenic_basis(3, 2, 1):
        assert op.apply(f).is_zero()


def test_factorization_numeric_base_case():
    rep = verify_factorization_numeric(weight(0), 1, 3, 2)
    assert rep.passed
    assert rep.results["solved_scalars"] == {"(0)": "-1"}


def test_factorization_numeric_rarita_schwinger():
    rep = verify_factorization_numeric(weight(1), 2, 3, 4)
    assert rep.passed
    assert rep.results["residual_empty"]


def test_factorization_numeric_preconditions():
    with pytest.raises(ValueError):
        verify_factorization_numeric(weight(1), 1, 3, 4)  # p must exceed mu_1
    with pytest.raises(ValueError):
        verify_factorization_numeric(weight(1), 2, 3, 3)  # degree too small
    from hsdfactor.linalg import ResourceCapError
    with pytest.raises(ResourceCapError):
        verify_factorization_numeric(weight(2), 3, 3, 6)  # needs mu_1 <= 1


def test_x_shift():
    b = spinor_unit(3, 1, 0)
    shifted = x_shift(b, (2, 0, 1))
    assert shifted.degree(0) == 3 and shifted.degree(1) == 0
