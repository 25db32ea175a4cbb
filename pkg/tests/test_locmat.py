import math
import random

import pytest
from hypothesis import given, strategies as st

from lmalg.clifford import DiagonalForm, Multivector
from lmalg.errors import ChainError, DomainError
from lmalg.exactnum import ScalarField
from lmalg.fdalg import StructureTable
from lmalg.genclifford import GCParams, pullback
from lmalg.locmat import (EmbeddingChain, check_matrix_units, d_membership, isomorphic_countable,
                          standard_matrix_units, steinitz_of_chain, steinitz_realization, tensor,
                          unital_embedding_exists, universally_equivalent)
from lmalg.reports import chain_for, random_chain, random_steinitz
from lmalg.steinitz import INF, SteinitzNumber, TOP, st_mul

E = EmbeddingChain


def test_chain_validation():
    with pytest.raises(ChainError):
        E([2, 3])
    with pytest.raises(ChainError):
        E([])
    with pytest.raises(ChainError):
        E([2], tail=1)
    with pytest.raises(ChainError):
        E([0])
    assert E([2, 4], 3).terms(5) == [2, 4, 12, 36, 108]


def test_steinitz_of_chain_examples():
    assert steinitz_of_chain(E([2, 4, 8], 2)) == SteinitzNumber({2: INF})
    assert steinitz_of_chain(E([1])) == 1
    assert steinitz_of_chain(E([6], 6)) == SteinitzNumber({2: INF, 3: INF})
    # truncations of 6, 36, ...: the lcm of the first ten terms is 6^10
    assert math.lcm(*E([6], 6).terms(10)) == 6 ** 10


def test_d_membership_examples():
    assert d_membership(4, E([2, 4, 8]))
    assert not d_membership(3, E([2], 2))
    assert d_membership(1, E([5]))
    assert d_membership(1024, E([2], 2))
    with pytest.raises(DomainError):
        d_membership(0, E([2]))


def test_tensor_examples():
    c = tensor(E([2], 2), E([3], 3))
    assert c.sizes == (6,) and c.tail == 6
    assert steinitz_of_chain(c) == SteinitzNumber({2: INF, 3: INF})
    a = E([2, 4], 5)
    assert steinitz_of_chain(tensor(a, E([1]))) == steinitz_of_chain(a)
    c = tensor(E([2, 4]), E([3, 9]))
    assert c.sizes == (6, 36) and c.tail is None
    assert tensor(E([2, 4, 8]), E([3], 3)).sizes == (6, 12, 24)


def test_decision_examples():
    assert universally_equivalent(E([2], 2), E([4], 4))
    assert not universally_equivalent(E([2], 2), E([2], 6))
    c = E([3, 6], 2)
    assert universally_equivalent(c, c)
    assert isomorphic_countable(E([2], 2), E([8], 2))
    assert isomorphic_countable(E([2, 4]), E([4]))
    assert not isomorphic_countable(E([2]), E([3]))


def test_unital_embedding_examples():
    assert unital_embedding_exists(2, [4, 6])
    assert not unital_embedding_exists(2, [4, 3])
    assert unital_embedding_exists(1, [7])


def test_realization_examples():
    c = steinitz_realization(SteinitzNumber({2: INF}))
    assert (c.sizes, c.tail) == ((2,), 2)
    c = steinitz_realization(SteinitzNumber({2: 3, 3: INF}))
    assert (c.sizes, c.tail) == ((24,), 3)
    c = steinitz_realization(SteinitzNumber({2: INF, 5: INF}))
    assert (c.sizes, c.tail) == ((10,), 10)
    assert math.lcm(*c.terms(10)) == 10 ** 10
    with pytest.raises(DomainError):
        steinitz_realization(TOP)
    with pytest.raises(DomainError):
        steinitz_realization(SteinitzNumber(12))


seeds = st.integers(0, 10 ** 9)


@given(seeds)
def test_tensor_multiplies_steinitz_numbers(seed):
    rng = random.Random(seed)
    a, b = random_chain(rng), random_chain(rng)
    assert steinitz_of_chain(tensor(a, b)) == st_mul(steinitz_of_chain(a), steinitz_of_chain(b))


@given(seeds)
def test_decisions_agree_and_match_probes(seed):
    rng = random.Random(seed)
    tau = random_steinitz(rng)
    a = chain_for(tau, rng)
    b = chain_for(tau if rng.random() < 0.5 else random_steinitz(rng), rng)
    dec = universally_equivalent(a, b)
    assert dec == isomorphic_countable(a, b)
    probes_agree = all(d_membership(n, a) == d_membership(n, b) for n in range(1, 65))
    assert dec == probes_agree


@given(seeds, st.integers(1, 200), st.integers(1, 200))
def test_d_membership_is_divisor_closed(seed, n, k):
    c = random_chain(random.Random(seed))
    if d_membership(n * k, c):
        assert d_membership(n, c) and d_membership(k, c)


@given(seeds)
def test_realization_round_trips(seed):
    rng = random.Random(seed)
    tau = random_steinitz(rng, inf_prob=0.5)
    if all(e != INF for e in tau.exponents.values()):
        tau = st_mul(tau, SteinitzNumber({rng.choice([2, 3, 5, 7]): INF}))
    assert steinitz_of_chain(steinitz_realization(tau)) == tau


# -- matrix units

@pytest.mark.parametrize("n", range(1, 6))
def test_standard_units_accepted(n):
    M = StructureTable.matrix_algebra(n)
    assert check_matrix_units(standard_matrix_units(M, n)).ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_every_single_product_perturbation_is_rejected(n):
    M = StructureTable.matrix_algebra(n)
    one = ScalarField().one
    for a in range(n * n):
        for b in range(n * n):
            old = M.products.get((a, b), {})
            new = {} if old else {0: one}
            P = M.with_product(a, b, new)
            r = check_matrix_units(standard_matrix_units(P, n))
            assert not r.ok
            i, j, t, s = r.violation[1]
            assert ((i - 1) * n + j - 1, (t - 1) * n + s - 1) == (a, b)


def test_unit_sum_violation_is_cited():
    # the units of M_2 sitting in the corner of M_3: products fine, E11 + E22 != 1
    M = StructureTable.matrix_algebra(3)
    units = [[M.element({i * 3 + j: 1}) for j in range(2)] for i in range(2)]
    r = check_matrix_units(units)
    assert not r.ok and r.violation == ("unit_sum",)


def test_non_square_input():
    M = StructureTable.matrix_algebra(2)
    with pytest.raises(DomainError):
        check_matrix_units([[M.one()], [M.one()]])
    with pytest.raises(DomainError):
        standard_matrix_units(M, 3)


@pytest.mark.parametrize("l", [2, 3])
def test_pulled_back_units_in_generalized_clifford(l):
    p = GCParams(l, 2)
    units = [[pullback(p, {(i, j): p.field.one}) for j in range(l)] for i in range(l)]
    assert check_matrix_units(units).ok
    units[0][l - 1] = units[0][l - 1] * 2
    assert not check_matrix_units(units).ok


def test_multivector_units():
    # Cl(1,-1) = M_2: e11 = (1 + e1)/2, e22 = (1 - e1)/2, e12 = e11 e2, e21 = -e2 e11 (e2^2 = -1)
    form = DiagonalForm([1, -1])
    e1, e2 = Multivector.gen(form, 1), Multivector.gen(form, 2)
    e11 = (1 + e1) / 2
    e22 = (1 - e1) / 2
    units = [[e11, e11 * e2], [-(e2 * e11), e22]]
    assert check_matrix_units(units).ok
    units[1][1] = e11
    assert not check_matrix_units(units).ok
