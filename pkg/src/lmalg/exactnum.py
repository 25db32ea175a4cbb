"""Exact scalars: rationals, cyclotomic fields Q(zeta_l), integer kernels mod l.

Rationals are :class:`fractions.Fraction`.  A :class:`Cyclotomic` is a
residue class of Q[x] modulo the l-th cyclotomic polynomial, stored in the
power basis 1, zeta, ..., zeta^(phi(l)-1), so equality is equality of
coefficient vectors.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import NamedTuple, Sequence

from .errors import OrderMismatch

Rational = Fraction

__all__ = [
    "Rational",
    "Cyclotomic",
    "ScalarField",
    "IntMatrix",
    "KernelMod",
    "cyclotomic_poly",
    "cyclo_arith",
    "smith_normal_form",
    "kernel_mod",
    "integer_root",
]


# ---------------------------------------------------------------------------
# integer polynomials (coefficient lists, lowest degree first)

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(num, den):
    """Division in Q[x]; exact integer division when ``den`` is monic."""
    num = list(num)
    den = _poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], _poly_trim(num)
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if not c:
            continue
        c = c // lead if (lead in (1, -1) and isinstance(c, int)) else Fraction(c) / lead
        quot[k - dd] = c
        for j, d in enumerate(den):
            num[k - dd + j] -= c * d
    return quot, _poly_trim(num[:dd])


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(l: int) -> tuple:
    """Integer coefficients of Phi_l, lowest degree first.

    Computed as (x^l - 1) divided exactly by the product of Phi_d over the
    proper divisors d of l.
    """
    if l < 1:
        raise ValueError("order must be positive, got %r" % (l,))
    num = [-1] + [0] * (l - 1) + [1]
    den = [1]
    for d in _divisors(l)[:-1]:
        den = _poly_mul(den, cyclotomic_poly(d))
    quot, rem = _poly_divmod(num, den)
    assert not rem, "x^l - 1 not divisible by the product of Phi_d"
    return tuple(int(c) for c in _poly_trim(quot))


@lru_cache(maxsize=None)
def _reduction_table(l):
    """Rows r_k = x^k mod Phi_l for k = 0..l-1, each of length phi(l)."""
    phi = cyclotomic_poly(l)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(l):
        rows.append(tuple(cur))
        # multiply by x and reduce with the monic Phi_l
        top = cur[-1] if deg else 0
        cur = [0] + cur[:-1] if deg else []
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


def _iroot(n, k):
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** k == n else None


def integer_root(q, k):
    """The nonnegative rational r with r**k == q, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = _iroot(q.numerator, k), _iroot(q.denominator, k)
    if a is None or b is None:
        return None
    return Fraction(a, b)


# ---------------------------------------------------------------------------
# cyclotomic numbers

def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("not a rational scalar: %r" % (x,))


class Cyclotomic:
    """Element of Q(zeta_l), immutable."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Sequence = ()):
        if order < 1:
            raise ValueError("order must be positive")
        table = _reduction_table(order)
        deg = len(table[0])
        acc = [Fraction(0)] * deg
        for k, c in enumerate(coeffs):
            c = _frac(c)
            if c:
                for j, r in enumerate(table[k % order]):
                    if r:
                        acc[j] += c * r
        self.order = order
        self.coeffs = tuple(acc)
        self._hash = None

    @classmethod
    def _raw(cls, order, coeffs):
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        return _zeta_power(order, power % order)

    @classmethod
    def from_rational(cls, order: int, q) -> "Cyclotomic":
        deg = len(_reduction_table(order)[0])
        return cls._raw(order, (_frac(q),) + (Fraction(0),) * (deg - 1))

    # -- coercion
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise OrderMismatch("cyclotomic orders differ: %d vs %d" % (self.order, other.order))
            return other
        if isinstance(other, (int, _RationalABC)):
            return Cyclotomic.from_rational(self.order, other)
        return None

    # -- predicates
    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("%s is not rational" % (self,))
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    # -- ring operations
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            if not other:
                return Cyclotomic.from_rational(self.order, 0)
            return Cyclotomic._raw(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not any(a[1:]):
            return other * a[0]
        if not any(b[1:]):
            return self * b[0]
        table = _reduction_table(self.order)
        order = self.order
        acc = [Fraction(0)] * len(a)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                c = x * y
                for t, r in enumerate(table[(i + j) % order]):
                    if r:
                        acc[t] += c * r
        return Cyclotomic._raw(order, tuple(acc))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.order)
        if self.is_rational():
            return Cyclotomic.from_rational(self.order, 1 / self.coeffs[0])
        # extended Euclid: s*a + t*Phi = g with g a nonzero constant
        phi = [Fraction(c) for c in cyclotomic_poly(self.order)]
        r0, r1 = phi, _poly_trim(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        g = r1[0]
        return Cyclotomic(self.order, [c / g for c in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic._raw(self.order, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.from_rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return "Cyclotomic(%d, %s)" % (self.order, self)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if k == 0 else ("z" if k == 1 else "z^%d" % k)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append("%s*%s" % (c, mon))
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)]) or [Fraction(0)]


@lru_cache(maxsize=None)
def _zeta_power(order, power):
    table = _reduction_table(order)
    return Cyclotomic._raw(order, tuple(Fraction(c) for c in table[power]))


def cyclo_arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    if not isinstance(a, Cyclotomic) or not isinstance(b, Cyclotomic):
        raise TypeError("cyclo_arith expects two Cyclotomic values")
    if a.order != b.order:
        raise OrderMismatch("cyclotomic orders differ: %d vs %d" % (a.order, b.order))
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown operation %r" % (op,))


class ScalarField:
    """Coefficient field: Q (``order=None``) or Q(zeta_order)."""

    def __init__(self, order=None):
        if order is not None and order < 1:
            raise ValueError("field order must be positive")
        self.order = order

    @property
    def name(self):
        return "Q" if self.order is None else "Q(zeta_%d)" % self.order

    def __eq__(self, other):
        return isinstance(other, ScalarField) and self.order == other.order

    def __hash__(self):
        return hash(("ScalarField", self.order))

    def __repr__(self):
        return "ScalarField(%r)" % (self.order,)

    def __call__(self, x):
        if self.order is None:
            if isinstance(x, Cyclotomic):
                return x.to_rational()
            return _frac(x)
        if isinstance(x, Cyclotomic):
            if x.order != self.order:
                raise OrderMismatch("scalar in Q(zeta_%d) used in %s" % (x.order, self.name))
            return x
        return Cyclotomic.from_rational(self.order, x)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def zeta(self, power=1):
        if self.order is None:
            if power % 2:
                raise ValueError("Q contains no primitive roots of unity beyond -1")
            return Fraction(1)
        return Cyclotomic.zeta(self.order, power)

    def contains_i(self):
        return self.order is not None and self.order % 4 == 0

    def roots_of_unity(self):
        """Every root of unity lying in the field."""
        if self.order is None:
            return [Fraction(1), Fraction(-1)]
        powers = [self.zeta(s) for s in range(self.order)]
        if self.order % 2:
            powers += [-z for z in powers]
        return powers

    def nth_roots(self, c, k):
        """All k-th roots of ``c`` in the field of the form rational * root of unity.

        Complete whenever ``c`` is itself a rational times a root of unity
        and its roots are too, which covers every scalar this package
        needs to root (squares of Clifford pseudoscalars, powers of
        central monomials).
        """
        c = self(c)
        if not c:
            return [self.zero]
        units = self.roots_of_unity()
        q = None
        for eta in units:
            t = c / eta
            if self.order is None or t.is_rational():
                q = t if self.order is None else t.to_rational()
                break
        if q is None:
            return []
        r = integer_root(abs(q), k)
        if r is None:
            return []
        found = []
        for eps in units:
            cand = self(r) * eps
            if cand ** k == c and cand not in found:
                found.append(cand)
        return found


# ---------------------------------------------------------------------------
# integer matrices, Smith normal form, kernels over Z/lZ

class IntMatrix:
    """Rectangular matrix of Python integers (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = [list(map(int, r)) for r in entries]
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("IntMatrix rows must all have length %d" % cols)
        self.rows = len(entries)
        self.cols = cols
        self.entries = tuple(tuple(r) for r in entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and (self.rows, self.cols, self.entries) == (
            other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "IntMatrix(%r)" % ([list(r) for r in self.entries],)

    def tolist(self):
        return [list(r) for r in self.entries]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries],
                         cols=other.cols)

    def apply(self, vec):
        return [sum(a * b for a, b in zip(r, vec)) for r in self.entries]

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)


def smith_normal_form(M: IntMatrix):
    """Return (D, U, V) with U*M*V == D, U and V unimodular, D diagonal.

    The diagonal entries d_0 | d_1 | ... are nonnegative.
    """
    m, n = M.rows, M.cols
    A = [list(r) for r in M.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return IntMatrix(A, cols=n), IntMatrix(U, cols=m), IntMatrix(V, cols=n)


class KernelMod(NamedTuple):
    """Solutions of M k = 0 over Z/lZ: a generating set and the group order."""

    generators: tuple
    count: int
    modulus: int

    def elements(self):
        """Enumerate the whole solution group, sorted."""
        l = self.modulus
        n = len(self.generators[0]) if self.generators else None
        if n is None:
            return []
        seen = {tuple([0] * n)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for v in frontier:
                for g in self.generators:
                    w = tuple((a + b) % l for a, b in zip(v, g))
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return sorted(seen)


def kernel_mod(M: IntMatrix, l: int) -> KernelMod:
    """Solve M k = 0 (mod l) through the Smith normal form over Z.

    With U M V = D, the substitution k = V y diagonalizes the system into
    d_i y_i = 0 (mod l), whose solutions are the multiples of l / gcd(d_i, l).
    """
    if l < 2:
        raise ValueError("modulus must be at least 2")
    if not isinstance(M, IntMatrix):
        M = IntMatrix(M)
    D, _, V = smith_normal_form(M)
    n = M.cols
    gens = []
    count = 1
    for i in range(n):
        d = D[i, i] if i < D.rows else 0
        g = math.gcd(d, l)
        count *= g
        if g == 1:
            continue
        step = l // g
        vec = tuple((V[r, i] * step) % l for r in range(n))
        if any(vec):
            gens.append(vec)
    result = KernelMod(tuple(gens), count, l)
    if count == 1 or not gens:
        return result._replace(generators=(tuple([0] * n),) if n else ())
    return result


def brute_force_kernel(M: IntMatrix, l: int):
    """All k in (Z/lZ)^cols with M k = 0 mod l, by enumeration."""
    if not isinstance(M, IntMatrix):
        M = IntMatrix(M)
    return sorted(k for k in itertools.product(range(l), repeat=M.cols)
                  if all(x % l == 0 for x in M.apply(k)))
