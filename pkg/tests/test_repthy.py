import pytest
from fractions import Fraction

from hsdfactor.linalg import Mat
from hsdfactor.polyspace import Dirac, MixedEuler, apply, operator_matrix
from hsdfactor.repthy import (
    casimir_eigenvalue,
    casimir_projectors,
    pad_weight,
    simplicial_monogenic_basis,
    so_generator_spec,
    weyl_dim,
)
from hsdfactor.weights import Weight, weight


def test_weyl_dim_frozen_values():
    assert weyl_dim(weight(0, 0, spin=True), 5) == 4
    assert weyl_dim(weight(1, 0, spin=True), 5) == 16
    assert weyl_dim(weight(2, 1, spin=True), 5) == 64
    assert weyl_dim(weight(1, spin=True), 5) == 16  # padded automatically
    assert weyl_dim(weight(0, spin=True), 3) == 2
    assert weyl_dim(weight(1), 5) == 5
    assert weyl_dim(weight(1, 1), 5) == 10
    assert weyl_dim(weight(2, 1), 5) == 35
    with pytest.raises(ValueError):
        weyl_dim(weight(1, 2), 5)


def test_casimir_eigenvalues_frozen():
    assert casimir_eigenvalue(weight(1, 0, spin=True), 5) == Fraction(15, 2)
    assert casimir_eigenvalue(weight(0, 0, spin=True), 5) == Fraction(5, 2)
    assert casimir_eigenvalue(weight(1, 1, spin=True), 5) == Fraction(21, 2)
    assert casimir_eigenvalue(weight(1, spin=True), 3) == Fraction(15, 4)


@pytest.mark.parametrize(
    "lam,m,expected",
    [((0,), 5, 4), ((1,), 5, 16), ((2,), 5, 40), ((1, 1), 5, 20), ((2, 1), 5, 64), ((1,), 3, 4)],
)
def test_simplicial_dimensions(lam, m, expected):
    space = simplicial_monogenic_basis(Weight(lam), m)
    assert space.dim == expected
    assert space.dim == weyl_dim(space.label, m)


def test_simplicial_basis_satisfies_defining_equations():
    space = simplicial_monogenic_basis(weight(1, 1), 5)
    for f in space.basis:
        assert apply(Dirac(1), f).is_zero()
        assert apply(Dirac(2), f).is_zero()
        assert apply(MixedEuler(1, 2), f).is_zero()


def test_ambient_dimension_and_projectors():
    ps = casimir_projectors(weight(1), 5)
    assert [w.entries for w in ps.weights] == [(1, 0), (0, 0)]
    assert ps.eigenvalues == [Fraction(15, 2), Fraction(5, 2)]
    assert [p.rank() for p in ps.projectors] == [16, 4]
    total = ps.projectors[0] + ps.projectors[1]
    assert total == Mat.identity(ps.ambient.dim)


def test_single_summand_projector_is_identity():
    ps = casimir_projectors(weight(0), 3)
    assert len(ps.projectors) == 1
    assert ps.projectors[0] == Mat.identity(2)


def test_three_summand_projectors():
    ps = casimir_projectors(weight(1, 1), 5)
    assert [w.entries for w in ps.weights] == [(1, 1), (1, 0), (0, 0)]
    ranks = [p.rank() for p in ps.projectors]
    assert ranks == [weyl_dim(w, 5) for w in ps.weights]
    assert sum(ranks) == ps.ambient.dim == 40


def test_casimir_commutes_with_rotations():
    ps = casimir_projectors(weight(1), 5)
    amb = ps.ambient
    for a in range(5):
        for b in range(a + 1, 5):
            spec = so_generator_spec(a, b, 5, amb.k)
            lin = operator_matrix(spec, amb.basis, amb.basis)
            L = Mat([[lin.entry(i, j) for j in range(amb.dim)] for i in range(amb.dim)])
            assert ps.casimir.commutator(L).is_zero()


def test_pad_weight():
    assert pad_weight(weight(1), 2) == weight(1, 0)
    with pytest.raises(ValueError):
        pad_weight(weight(1, 0, 0), 2)
