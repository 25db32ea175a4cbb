from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lmalg.clifford import (DiagonalForm, Multivector, Subspace, center, centralizer, grade_split, indices_of,
                            is_split, lemma22_check, mask_of, mv_mul, orthogonalize, structure_id,
                            subalgebra_basis)
from lmalg.errors import DegenerateForm, DomainError, FormMismatch, NonSplitForm
from lmalg.exactnum import ScalarField
from lmalg.linalg import Echelon
from oracles import clifford_word_product, dense_rank

nonzero = st.integers(-3, 3).filter(bool)


@st.composite
def form_and_elements(draw, count=2):
    n = draw(st.integers(1, 5))
    diag = draw(st.lists(nonzero, min_size=n, max_size=n))
    form = DiagonalForm(diag)
    elems = []
    for _ in range(count):
        terms = draw(st.dictionaries(st.integers(0, (1 << n) - 1), st.integers(-4, 4), max_size=5))
        elems.append(Multivector(form, terms))
    return form, elems


def naive_mul(form, a, b):
    out = {}
    for A, ca in a.terms.items():
        for B, cb in b.terms.items():
            c, word = clifford_word_product(indices_of(A) + indices_of(B), form.diag)
            k = mask_of(word)
            out[k] = out.get(k, 0) + ca * cb * c
    return Multivector(form, out)


@given(form_and_elements())
def test_product_matches_word_rewriting(t):
    form, (a, b) = t
    assert mv_mul(a, b) == naive_mul(form, a, b)


@given(form_and_elements(count=3))
def test_associativity_and_distributivity(t):
    _, (a, b, c) = t
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(form_and_elements(count=1), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_vectors_square_to_form_value(t, coords):
    form, _ = t
    v = Multivector.vector(form, coords[:form.n])
    assert v * v == Multivector.scalar(form, form.value(coords[:form.n]))
    # polar form convention f(u, v) = f(u + v) - f(u) - f(v) = uv + vu
    u = Multivector.gen(form, 1)
    e1 = [1] + [0] * (form.n - 1)
    assert u * v + v * u == Multivector.scalar(form, form.polar(e1, coords[:form.n]))


def test_examples():
    form = DiagonalForm([2, 3, 5])
    e1, e2, e3 = (Multivector.gen(form, i) for i in (1, 2, 3))
    assert e1 * e1 == 2
    assert (e1 * e2) * (e1 * e2) == -6
    assert e2 * e1 == -(e1 * e2)
    assert Multivector.blade(form, [2, 1]) == -(e1 * e2)
    even, odd = grade_split(1 + e1 + e1 * e2)
    assert even == 1 + e1 * e2 and odd == e1
    with pytest.raises(FormMismatch):
        e1 * Multivector.gen(DiagonalForm([1, 1, 1]), 1)
    with pytest.raises(DegenerateForm):
        DiagonalForm([1, 0])


def brute_centralizer_dim(form, S):
    # dense commutator matrix built from the rewriting oracle
    cols = []
    for A in range(form.dim):
        e = Multivector(form, {A: 1})
        col = []
        for s in S:
            comm = naive_mul(form, e, s) - naive_mul(form, s, e)
            col += [comm.terms.get(B, 0) for B in range(form.dim)]
        cols.append(col)
    rows = [list(r) for r in zip(*cols)]
    return form.dim - dense_rank(rows)


@given(form_and_elements(count=2))
def test_centralizer_against_dense_solve(t):
    form, S = t
    basis = centralizer(form, S)
    assert len(basis) == brute_centralizer_dim(form, S)
    for a in basis:
        for s in S:
            assert a * s == s * a


def test_centralizer_of_single_generator():
    form = DiagonalForm([1, 1, 1])
    got = {next(iter(m.terms)) for m in centralizer(form, [Multivector.gen(form, 1)])}
    assert got == {0, 0b001, 0b110, 0b111}


@pytest.mark.parametrize("n", range(1, 7))
def test_center_dimension(n):
    form = DiagonalForm([1] * n)
    assert len(center(form)) == (1 if n % 2 == 0 else 2)


def test_subalgebra_basis_is_closed():
    form = DiagonalForm([1, 2, 3, -1])
    W = Subspace(4, [[1, 1, 0, 0], [0, 1, 1, 1]])
    basis = subalgebra_basis(form, W)
    assert len(basis) == 4
    ech = Echelon([b.terms for b in basis])
    assert ech.rank == 4
    for a in basis:
        for b in basis:
            assert ech.contains((a * b).terms)
    for v in W.basis:
        assert ech.contains(Multivector.vector(form, v).terms)


def test_orthogonalize_handles_isotropic_pairs_and_degeneracy():
    form = DiagonalForm([1, -1])
    out = orthogonalize(form, [[1, 1], [1, -1]])
    assert len(out) == 2 and form._dot(out[0], out[1]) == 0
    assert all(form.value(v) for v in out)
    with pytest.raises(DegenerateForm) as exc:
        orthogonalize(form, [[1, 1]])
    assert exc.value.index == 1


@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (4, 1), (5, 1), (5, 3), (6, 1), (4, 3), (6, 3)])
def test_lemma22(n, k):
    r = lemma22_check(DiagonalForm([1] * n, 4), list(range(1, k + 1)))
    assert r.match and r.lhs_dim == r.rhs_dim == 2 ** (n - k)


def test_lemma22_preconditions():
    form = DiagonalForm([1, 1, 2])
    with pytest.raises(DomainError):
        lemma22_check(form, [1, 2])
    with pytest.raises(DomainError):
        lemma22_check(form, [3])


@pytest.mark.parametrize("n,field,blocks", [
    (0, None, [1]), (2, None, [2]), (4, None, [4]), (6, None, [8]), (1, None, [1, 1]),
    (3, None, [2, 2]), (3, 4, [2, 2]), (5, 4, [4, 4]), (2, 4, [2]),
])
def test_structure_id(n, field, blocks):
    diag = [1 if i % 2 == 0 else -1 for i in range(n)]
    assert list(structure_id(DiagonalForm(diag, field)).blocks) == blocks


def test_structure_over_gaussian_field_allows_any_signs():
    assert list(structure_id(DiagonalForm([-1, -1], 4)).blocks) == [2]
    assert list(structure_id(DiagonalForm([1, 1, 1], 4)).blocks) == [2, 2]


def test_non_split_forms_are_refused():
    with pytest.raises(NonSplitForm):
        structure_id(DiagonalForm([-1, -1]))
    with pytest.raises(NonSplitForm):
        structure_id(DiagonalForm([1, 2]))
    assert not is_split(DiagonalForm([1, 1]))
    assert is_split(DiagonalForm([1, 1], ScalarField(4)))


def test_rational_coefficients():
    form = DiagonalForm([Fraction(1, 2), 3])
    e1 = Multivector.gen(form, 1)
    assert (e1 / 2) * e1 == Fraction(1, 4)
