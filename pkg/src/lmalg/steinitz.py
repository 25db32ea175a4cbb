"""Steinitz (supernatural) numbers.

A Steinitz number is a formal product over all primes p of p^r_p with
r_p in {0, 1, 2, ..., INF}.  Only finitely supported numbers and the
greatest element ``TOP`` (every exponent infinite) are representable; those
are exactly the values produced from finite data plus periodic tails.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterable, Optional

INF = math.inf

__all__ = [
    "INF",
    "SteinitzNumber",
    "ONE",
    "TOP",
    "st_mul",
    "st_divides",
    "st_lcm",
    "st_gcd",
    "st_lcm_of_set",
    "factorize",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict:
    """Prime factorization of a positive integer by trial division."""
    if n < 1:
        raise ValueError("only positive integers factor into Steinitz numbers, got %r" % (n,))
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _check_exponent(e):
    if e == INF:
        return INF
    if isinstance(e, bool) or int(e) != e or e < 0:
        raise ValueError("Steinitz exponents are naturals or INF, got %r" % (e,))
    return int(e)


class SteinitzNumber:
    """Immutable supernatural number in canonical form.

    >>> SteinitzNumber(12) * SteinitzNumber({2: INF, 5: 1})
    SteinitzNumber(2^inf * 3 * 5)
    """

    __slots__ = ("_exps", "is_top")

    def __init__(self, value=1, top: bool = False):
        if top:
            exps = ()
        elif isinstance(value, SteinitzNumber):
            exps, top = value._exps, value.is_top
        elif isinstance(value, int) and not isinstance(value, bool):
            exps = tuple(sorted(factorize(value).items()))
        elif isinstance(value, dict) or isinstance(value, (list, tuple)):
            items = value.items() if isinstance(value, dict) else value
            acc = {}
            for p, e in items:
                p = int(p)
                if not is_prime(p):
                    raise ValueError("%r is not prime" % (p,))
                acc[p] = acc.get(p, 0) + _check_exponent(e)
            exps = tuple(sorted((p, e) for p, e in acc.items() if e))
        else:
            raise TypeError("cannot build a Steinitz number from %r" % (value,))
        object.__setattr__(self, "_exps", exps)
        object.__setattr__(self, "is_top", bool(top))

    def __setattr__(self, name, value):
        raise AttributeError("SteinitzNumber is immutable")

    @classmethod
    def top(cls) -> "SteinitzNumber":
        return cls(top=True)

    @property
    def exponents(self) -> dict:
        """Prime -> exponent for the support (empty for TOP and for 1)."""
        return dict(self._exps)

    def exponent(self, p: int):
        if self.is_top:
            return INF
        return dict(self._exps).get(p, 0)

    def support(self):
        return [p for p, _ in self._exps]

    def is_finite(self) -> bool:
        return not self.is_top and all(e != INF for _, e in self._exps)

    def to_int(self) -> int:
        if not self.is_finite():
            raise ValueError("%s is an infinite Steinitz number" % (self,))
        return math.prod(p ** e for p, e in self._exps)

    # -- arithmetic and lattice operations
    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return st_mul(self, other)

    __rmul__ = __mul__

    def divides(self, other) -> bool:
        return st_divides(self, _coerce(other))

    def lcm(self, other):
        return st_lcm(self, _coerce(other))

    def gcd(self, other):
        return st_gcd(self, _coerce(other))

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.is_top == other.is_top and self._exps == other._exps

    def __hash__(self):
        return hash((self.is_top, self._exps))

    def __str__(self):
        if self.is_top:
            return "I"
        if not self._exps:
            return "1"
        return " * ".join(str(p) if e == 1 else "%d^%s" % (p, "inf" if e == INF else e)
                          for p, e in self._exps)

    def __repr__(self):
        return "SteinitzNumber(%s)" % self

    def __reduce__(self):
        return (SteinitzNumber, (dict(self._exps), self.is_top))


def _coerce(x) -> Optional[SteinitzNumber]:
    if isinstance(x, SteinitzNumber):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return SteinitzNumber(x)
    return None


ONE = SteinitzNumber(1)
TOP = SteinitzNumber.top()


def _merge(a, b, op):
    ea, eb = a.exponents, b.exponents
    return SteinitzNumber({p: op(ea.get(p, 0), eb.get(p, 0)) for p in set(ea) | set(eb)})


def st_mul(a: SteinitzNumber, b: SteinitzNumber) -> SteinitzNumber:
    """Prime-wise exponent addition; INF absorbs, TOP absorbs everything."""
    if a.is_top or b.is_top:
        return TOP
    return _merge(a, b, lambda x, y: x + y)


def st_divides(v: SteinitzNumber, u: SteinitzNumber) -> bool:
    """True iff v | u, i.e. u = v * w for some Steinitz number w."""
    if u.is_top:
        return True
    if v.is_top:
        return False
    return all(e <= u.exponent(p) for p, e in v._exps)


def st_lcm(a: SteinitzNumber, b: SteinitzNumber) -> SteinitzNumber:
    if a.is_top or b.is_top:
        return TOP
    return _merge(a, b, max)


def st_gcd(a: SteinitzNumber, b: SteinitzNumber) -> SteinitzNumber:
    if a.is_top:
        return b
    if b.is_top:
        return a
    return _merge(a, b, min)


def st_lcm_of_set(values: Iterable[int], tail: Optional[int] = None) -> SteinitzNumber:
    """lcm of finitely many positive integers, optionally times t^k as k grows.

    With a periodic multiplier ``tail`` every prime of the tail gets exponent
    INF, which is the limit of lcm(values) * tail^k.
    """
    values = list(values)
    if not values:
        raise ValueError("need at least one value")
    if any(int(v) != v or v < 1 for v in values):
        raise ValueError("values must be positive integers")
    base = SteinitzNumber(reduce(math.lcm, (int(v) for v in values)))
    if tail is None:
        return base
    if int(tail) != tail or tail < 2:
        raise ValueError("tail multiplier must be an integer >= 2, got %r" % (tail,))
    limit = SteinitzNumber({p: INF for p in factorize(int(tail))})
    return st_lcm(base, limit)
