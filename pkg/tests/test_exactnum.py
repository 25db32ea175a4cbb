import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lmalg.errors import OrderMismatch
from lmalg.exactnum import (Cyclotomic, IntMatrix, ScalarField, brute_force_kernel, cyclo_arith, cyclotomic_poly,
                            integer_root, kernel_mod, smith_normal_form)
from oracles import cyclotomic_mobius, pmul


@pytest.mark.parametrize("l", range(1, 61))
def test_cyclotomic_poly_matches_mobius_formula(l):
    assert list(cyclotomic_poly(l)) == cyclotomic_mobius(l)


@pytest.mark.parametrize("l", range(1, 31))
def test_product_over_divisors_is_x_l_minus_1(l):
    acc = [1]
    for d in range(1, l + 1):
        if l % d == 0:
            acc = pmul(acc, list(cyclotomic_poly(d)))
    assert acc == [-1] + [0] * (l - 1) + [1]


def test_small_examples():
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    i = Cyclotomic.zeta(4)
    assert i * i == -1
    z3 = Cyclotomic.zeta(3)
    assert 1 + z3 + z3 * z3 == 0
    assert Cyclotomic.zeta(12, 3) ** 2 == -1


ORDERS = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 12])
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyclo_pairs(draw):
    l = draw(ORDERS)
    deg = len(cyclotomic_poly(l)) - 1
    mk = lambda: Cyclotomic(l, draw(st.lists(fracs, min_size=deg, max_size=deg)))
    return mk(), mk(), mk()


@given(cyclo_pairs())
def test_field_axioms(t):
    a, b, c = t
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 and a + 0 == a and a * 1 == a
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b
        assert a ** -2 * a ** 2 == 1


@given(cyclo_pairs())
def test_cyclo_arith_dispatch(t):
    a, b, _ = t
    assert cyclo_arith(a, b, "add") == a + b
    assert cyclo_arith(a, b, "sub") == a - b
    assert cyclo_arith(a, b, "mul") == a * b
    if b:
        assert cyclo_arith(a, b, "div") == a / b
    else:
        with pytest.raises(ZeroDivisionError):
            cyclo_arith(a, b, "div")


@pytest.mark.parametrize("l", [1, 2, 3, 5, 7, 8, 10, 12, 15])
def test_zeta_has_exact_order(l):
    z = Cyclotomic.zeta(l)
    powers = [z ** k for k in range(l)]
    assert z ** l == 1
    assert len(set(powers)) == l


def test_rational_embedding_and_hash():
    q = Cyclotomic.from_rational(5, Fraction(3, 4))
    assert q == Fraction(3, 4) and q.is_rational()
    assert hash(q) == hash(Fraction(3, 4))
    assert Cyclotomic(6, [2]) == 2


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        Cyclotomic.zeta(3) + Cyclotomic.zeta(4)


def test_scalar_field():
    Q = ScalarField()
    assert Q(3) == Fraction(3) and Q.name == "Q"
    F = ScalarField(8)
    assert F.contains_i() and not ScalarField(6).contains_i()
    assert len(F.roots_of_unity()) == 8
    assert len(ScalarField(3).roots_of_unity()) == 6
    roots = F.nth_roots(-1, 4)
    assert len(roots) == 4 and all(r ** 4 == -1 for r in roots)
    assert ScalarField(4).nth_roots(-1, 4) == []
    assert sorted(Q.nth_roots(Fraction(9, 4), 2)) == [Fraction(-3, 2), Fraction(3, 2)]
    assert Q.nth_roots(2, 2) == []


def test_integer_root():
    assert integer_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert integer_root(2, 2) is None
    assert integer_root(-4, 2) is None


small_int_matrix = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


def _det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(n))


@given(small_int_matrix)
def test_smith_normal_form(rows):
    M = IntMatrix(rows)
    D, U, V = smith_normal_form(M)
    assert U @ M @ V == D
    assert abs(_det(U.tolist())) == 1 and abs(_det(V.tolist())) == 1
    diag = [D[i, i] for i in range(min(D.rows, D.cols))]
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j:
                assert D[i, j] == 0
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0)


@given(small_int_matrix, st.integers(2, 9))
def test_kernel_mod_against_enumeration(rows, l):
    M = IntMatrix(rows)
    sol = kernel_mod(M, l)
    brute = brute_force_kernel(M, l)
    assert sol.count == len(brute)
    assert sol.elements() == brute


def test_kernel_mod_exhaustive_small():
    # every K-type system up to l^m <= 10^5
    from lmalg.genclifford import k_matrix
    for l in range(2, 11):
        for m in itertools.count(1):
            if l ** m > 10 ** 5:
                break
            K = k_matrix(m)
            assert kernel_mod(K, l).elements() == brute_force_kernel(K, l)
