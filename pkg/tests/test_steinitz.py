import math
import pickle

import pytest
from hypothesis import given, strategies as st

from lmalg.steinitz import (INF, ONE, TOP, SteinitzNumber, factorize, st_divides, st_gcd, st_lcm, st_lcm_of_set,
                            st_mul)

PRIMES = [2, 3, 5, 7, 11]
exponent = st.one_of(st.integers(0, 4), st.just(INF))
steinitz = st.one_of(
    st.dictionaries(st.sampled_from(PRIMES), exponent, max_size=4).map(SteinitzNumber),
    st.just(TOP),
)
finite = st.integers(1, 10 ** 6)


def test_examples():
    assert SteinitzNumber(12) * SteinitzNumber(18) == SteinitzNumber({2: 3, 3: 3})
    assert st_lcm(SteinitzNumber(4), SteinitzNumber(6)) == 12
    assert st_lcm_of_set([2], tail=2) == SteinitzNumber({2: INF})
    assert st_lcm_of_set([6], tail=6) == SteinitzNumber({2: INF, 3: INF})
    assert str(SteinitzNumber({2: INF, 3: 1})) == "2^inf * 3"
    assert str(TOP) == "I" and str(ONE) == "1"
    assert SteinitzNumber(2) * SteinitzNumber({2: INF}) == SteinitzNumber({2: INF})


def test_truncations_approach_the_tail_limit():
    # lcm of the first k terms of 6, 36, 216, ... grows in both primes without bound
    terms = [6 ** k for k in range(1, 11)]
    exps = factorize(math.lcm(*terms))
    assert exps == {2: 10, 3: 10}
    limit = st_lcm_of_set([6], tail=6)
    assert all(st_divides(SteinitzNumber(t), limit) for t in terms)


def test_validation():
    with pytest.raises(ValueError):
        SteinitzNumber({4: 1})
    with pytest.raises(ValueError):
        SteinitzNumber(0)
    with pytest.raises(ValueError):
        SteinitzNumber({2: -1})
    with pytest.raises(AttributeError):
        ONE.is_top = True
    with pytest.raises(ValueError):
        SteinitzNumber({2: INF}).to_int()


@given(finite, finite)
def test_finite_cases_match_integers(a, b):
    A, B = SteinitzNumber(a), SteinitzNumber(b)
    assert (A * B).to_int() == a * b
    assert st_lcm(A, B).to_int() == math.lcm(a, b)
    assert st_gcd(A, B).to_int() == math.gcd(a, b)
    assert st_divides(A, B) == (b % a == 0)


@given(steinitz, steinitz, steinitz)
def test_lattice_laws(a, b, c):
    assert st_mul(a, b) == st_mul(b, a)
    assert st_mul(st_mul(a, b), c) == st_mul(a, st_mul(b, c))
    assert st_mul(a, ONE) == a
    assert st_lcm(a, st_gcd(a, b)) == a and st_gcd(a, st_lcm(a, b)) == a
    assert st_gcd(a, st_lcm(b, c)) == st_lcm(st_gcd(a, b), st_gcd(a, c))
    assert st_divides(a, b) == (st_lcm(a, b) == b) == (st_gcd(a, b) == a)
    assert st_divides(a, st_mul(a, b))
    assert st_divides(ONE, a) and st_divides(a, TOP)
    if st_divides(a, b) and st_divides(b, c):
        assert st_divides(a, c)
    if st_divides(a, b) and st_divides(b, a):
        assert a == b


@given(steinitz)
def test_pickle_and_hash(a):
    b = pickle.loads(pickle.dumps(a))
    assert a == b and hash(a) == hash(b)
    assert SteinitzNumber(a) == a
