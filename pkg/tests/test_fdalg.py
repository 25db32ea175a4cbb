from fractions import Fraction

import pytest

from lmalg.errors import TableError
from lmalg.exactnum import ScalarField
from lmalg.fdalg import AlgebraProfile, StructureTable, center_basis, radical_dim

Q = ScalarField()


def dual_numbers():
    # F[t]/(t^2): basis 1, t
    one = Fraction(1)
    return StructureTable(2, {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}}, {0: one}, Q, ["1", "t"])


def upper_triangular():
    # span of E11, E12, E22 in M_2
    one = Fraction(1)
    p = {(0, 0): {0: one}, (0, 1): {1: one}, (1, 2): {1: one}, (2, 2): {2: one}}
    return StructureTable(3, p, {0: one, 2: one}, Q)


def test_planted_radicals():
    assert radical_dim(dual_numbers()) == 1
    assert radical_dim(upper_triangular()) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matrix_algebra_is_semisimple_with_scalar_center(n):
    M = StructureTable.matrix_algebra(n)
    assert radical_dim(M) == 0
    cent = center_basis(M)
    assert len(cent) == 1
    # the center is spanned by the identity
    c = cent[0]
    ratio = {c[k] / v for k, v in M.unit.items()}
    assert len(ratio) == 1 and set(c) == set(M.unit)


def test_center_of_commutative_algebra_is_everything():
    assert len(center_basis(dual_numbers())) == 2


def test_checks_reject_broken_tables():
    M = StructureTable.matrix_algebra(2)
    with pytest.raises(TableError):
        radical_dim(M.with_product(0, 1, {}))
    bad_unit = StructureTable(M.dim, M.products, {0: Fraction(1)}, Q)
    with pytest.raises(TableError):
        bad_unit.check_unit()


def test_from_basis_rejects_non_closed_span():
    M = StructureTable.matrix_algebra(2)
    # E12 * E21 = E11 leaves span{E12, E21}
    with pytest.raises(TableError):
        StructureTable.from_basis([{1: Fraction(1)}, {2: Fraction(1)}], M.mul, Q, unit={1: Fraction(1)})
    # span{E11, E12} is closed, but E11 is only a left unit there
    T = StructureTable.from_basis([{0: Fraction(1)}, {1: Fraction(1)}], M.mul, Q, unit={0: Fraction(1)})
    with pytest.raises(TableError):
        T.check_unit()


def test_table_elements():
    M = StructureTable.matrix_algebra(2)
    e = M.basis()
    assert e[1] * e[2] == e[0]
    assert e[2] * e[1] == e[3]
    assert e[1] * e[1] == 0
    assert (e[0] + e[3]) == M.one()


def test_profile():
    p = AlgebraProfile([3, 1, 3])
    assert p.blocks == (1, 3, 3) and p.dim == 19
    with pytest.raises(ValueError):
        AlgebraProfile([])
