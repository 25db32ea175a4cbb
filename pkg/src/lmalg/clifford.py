"""Clifford algebras Cl(V, f) of diagonal quadratic forms over Q or Q(zeta_l).

Basis monomials e_A are indexed by bit masks: generator e_i (1-based) is bit
``1 << (i - 1)``.  With f(e_i) = d_i and orthogonal generators,

    e_A * e_B = sign(A, B) * prod(d_i for i in A & B) * e_(A ^ B)

where sign(A, B) = (-1)^#{(i, j) : i in A, j in B, i > j}.  The polar form
follows the convention f(u, v) = f(u + v) - f(u) - f(v), so f(v, v) = 2 f(v)
and vw + wv = f(v, w) * 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (ConsistencyError, DegenerateForm, DomainError, FormMismatch,
                     NonSplitForm)
from .exactnum import ScalarField
from .fdalg import AlgebraProfile, StructureTable, center_basis, radical_dim
from .linalg import Echelon, add_scaled, nullspace, span_equal

__all__ = [
    "DiagonalForm",
    "Multivector",
    "Subspace",
    "mv_mul",
    "reorder_sign",
    "grade_split",
    "orthogonalize",
    "subalgebra_basis",
    "centralizer",
    "center",
    "lemma22_check",
    "Lemma22Report",
    "structure_id",
    "is_split",
    "clifford_table",
]


def _as_field(field):
    if isinstance(field, ScalarField):
        return field
    return ScalarField(field)


class DiagonalForm:
    """Nondegenerate diagonal quadratic form f(x) = sum d_i x_i^2."""

    def __init__(self, diag: Sequence, field=None):
        self.field = _as_field(field)
        self.diag = tuple(self.field(d) for d in diag)
        for i, d in enumerate(self.diag, 1):
            if not d:
                raise DegenerateForm("diagonal entry d_%d is zero" % i, index=i)
        self._metric = {0: self.field.one}

    @property
    def n(self) -> int:
        return len(self.diag)

    @property
    def dim(self) -> int:
        return 1 << self.n

    def __eq__(self, other):
        return isinstance(other, DiagonalForm) and self.field == other.field and self.diag == other.diag

    def __hash__(self):
        return hash((self.field, self.diag))

    def __repr__(self):
        return "DiagonalForm(%s, field=%s)" % ([str(d) for d in self.diag], self.field.name)

    def metric(self, mask: int):
        """Product of d_i over the generators in ``mask``."""
        m = self._metric.get(mask)
        if m is None:
            low = mask & -mask
            m = self.metric(mask ^ low) * self.diag[low.bit_length() - 1]
            self._metric[mask] = m
        return m

    def value(self, v: Sequence):
        """f(v) for a coordinate vector."""
        acc = self.field.zero
        for d, x in zip(self.diag, v):
            if x:
                acc = acc + d * x * x
        return acc

    def polar(self, u: Sequence, v: Sequence):
        """f(u, v) = f(u + v) - f(u) - f(v) = 2 sum d_i u_i v_i."""
        return 2 * self._dot(u, v)

    def _dot(self, u, v):
        acc = self.field.zero
        for d, x, y in zip(self.diag, u, v):
            if x and y:
                acc = acc + d * x * y
        return acc


@lru_cache(maxsize=1 << 16)
def reorder_sign(a: int, b: int) -> int:
    """(-1)^(number of pairs i in a, j in b with i > j)."""
    a >>= 1
    s = 0
    while a:
        s += (a & b).bit_count()
        a >>= 1
    return -1 if s & 1 else 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> list:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def _mul_terms(form, x: dict, y: dict) -> dict:
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            c = ca * cb * form.metric(a & b)
            if reorder_sign(a, b) < 0:
                c = -c
            k = a ^ b
            w = out.get(k)
            w = c if w is None else w + c
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


class Multivector:
    """Element of Cl(V, f): a sparse map from basis masks to scalars."""

    __slots__ = ("form", "terms")

    def __init__(self, form: DiagonalForm, terms=None):
        self.form = form
        terms = terms or {}
        limit = form.dim
        clean = {}
        for mask, c in terms.items():
            if not 0 <= mask < limit:
                raise ValueError("mask %r outside Cl of dimension %d" % (mask, form.n))
            c = form.field(c)
            if c:
                clean[mask] = c
        self.terms = clean

    @classmethod
    def _raw(cls, form, terms):
        obj = object.__new__(cls)
        obj.form = form
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, form, c=1):
        return cls(form, {0: c})

    @classmethod
    def gen(cls, form, i: int):
        if not 1 <= i <= form.n:
            raise IndexError("generator index %d out of range 1..%d" % (i, form.n))
        return cls(form, {1 << (i - 1): 1})

    @classmethod
    def blade(cls, form, indices: Sequence[int], coeff=1):
        """The ordered product e_i1 e_i2 ... (any order, repeats allowed)."""
        out = cls.scalar(form, coeff)
        for i in indices:
            out = out * cls.gen(form, i)
        return out

    @classmethod
    def vector(cls, form, coords: Sequence):
        return cls(form, {1 << i: c for i, c in enumerate(coords)})

    def _check(self, other):
        if other.form != self.form:
            raise FormMismatch("multivectors belong to different Clifford algebras")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.form, other)
        self._check(other)
        return Multivector._raw(self.form, add_scaled(dict(self.terms), other.terms, 1))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.form, other)
        self._check(other)
        return Multivector._raw(self.form, add_scaled(dict(self.terms), other.terms, -1))

    def __rsub__(self, other):
        return Multivector.scalar(self.form, other) - self

    def __neg__(self):
        return Multivector._raw(self.form, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mv_mul(self, other)
        c = self.form.field(other)
        if not c:
            return Multivector._raw(self.form, {})
        return Multivector._raw(self.form, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        c = self.form.field(other)
        return self * (1 / c)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.form == other.form and self.terms == other.terms
        if other == 0:
            return not self.terms
        try:
            return self.terms == Multivector.scalar(self.form, other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.form, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def scalar_part(self):
        return self.terms.get(0, self.form.field.zero)

    def is_scalar(self):
        return all(k == 0 for k in self.terms)

    def is_homogeneous(self):
        return len({bin(k).count("1") & 1 for k in self.terms}) <= 1

    def parity(self):
        """0 or 1 for homogeneous nonzero elements; None otherwise."""
        par = {bin(k).count("1") & 1 for k in self.terms}
        return par.pop() if len(par) == 1 else None

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda m: (bin(m).count("1"), m)):
            c = self.terms[k]
            name = "".join("e%d" % i for i in indices_of(k))
            if not name:
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            else:
                parts.append("(%s)*%s" % (c, name))
        return " + ".join(parts)


def mv_mul(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear extension of the basis product with the reordering sign."""
    a._check(b)
    return Multivector._raw(a.form, _mul_terms(a.form, a.terms, b.terms))


def grade_split(a: Multivector):
    """(even part, odd part) by parity of the number of generators."""
    even = {k: c for k, c in a.terms.items() if not bin(k).count("1") & 1}
    odd = {k: c for k, c in a.terms.items() if bin(k).count("1") & 1}
    return Multivector._raw(a.form, even), Multivector._raw(a.form, odd)


class Subspace:
    """Subspace of V = F^n given by independent coordinate vectors."""

    def __init__(self, n: int, basis: Sequence[Sequence], field=None):
        self.n = n
        self.field = _as_field(field)
        self.basis = [tuple(self.field(x) for x in v) for v in basis]
        if any(len(v) != n for v in self.basis):
            raise ValueError("basis vectors must have length %d" % n)
        rows = [{i: x for i, x in enumerate(v) if x} for v in self.basis]
        if Echelon(rows).rank != len(rows):
            raise ValueError("subspace basis vectors are linearly dependent")

    @property
    def dim(self):
        return len(self.basis)

    @classmethod
    def coordinate(cls, n, indices, field=None):
        """span(e_i : i in indices), indices 1-based."""
        f = _as_field(field)
        return cls(n, [[f.one if j == i - 1 else f.zero for j in range(n)] for i in indices], f)


def orthogonalize(form: DiagonalForm, vectors: Sequence[Sequence]) -> list:
    """Exact Gram-Schmidt for f restricted to span(vectors).

    Returns an orthogonal basis of anisotropic vectors.  When every
    remaining vector is isotropic, a pair with nonzero polar value is
    merged first; if none exists the restriction is degenerate.
    """
    field = form.field
    rem = [(k, [field(x) for x in v]) for k, v in enumerate(vectors, 1)]
    out = []
    while rem:
        pick = next((t for t, (_, v) in enumerate(rem) if form.value(v)), None)
        if pick is None:
            pair = next(((s, t) for s in range(len(rem)) for t in range(s + 1, len(rem))
                         if form._dot(rem[s][1], rem[t][1])), None)
            if pair is None:
                k = rem[0][0]
                raise DegenerateForm("basis vector %d is isotropic and orthogonal to all others" % k, index=k)
            s, t = pair
            k, v = rem[s]
            rem[s] = (k, [x + y for x, y in zip(v, rem[t][1])])
            pick = s
        _, r = rem.pop(pick)
        rr = form._dot(r, r)
        projected = []
        for k, v in rem:
            c = form._dot(v, r) / rr
            projected.append((k, [x - c * y for x, y in zip(v, r)]))
        rem = projected
        out.append(r)
    return out


def _subalgebra_products(form, vectors):
    """(subset mask, ordered product) for every subset of the given vectors."""
    gens = [Multivector.vector(form, v) for v in vectors]
    out = []
    for s in range(1 << len(gens)):
        m = Multivector.scalar(form)
        for t, g in enumerate(gens):
            if s >> t & 1:
                m = m * g
        out.append((s, m))
    return out


def subalgebra_basis(form: DiagonalForm, W: Subspace) -> list:
    """Basis of Cl(W, f|W) inside Cl(V, f): ordered products of an orthogonal basis of W."""
    if W.n != form.n:
        raise ValueError("subspace lives in F^%d, form has dimension %d" % (W.n, form.n))
    return [m for _, m in _subalgebra_products(form, orthogonalize(form, W.basis))]


def centralizer(form: DiagonalForm, S: Sequence[Multivector]) -> list:
    """Basis of {a : a s = s a for all s in S}, by an exact linear solve."""
    rows = {}
    for t, s in enumerate(S):
        if s.form != form:
            raise FormMismatch("element of S lives in a different algebra")
        for A in range(form.dim):
            e = {A: form.field.one}
            comm = add_scaled(_mul_terms(form, s.terms, e), _mul_terms(form, e, s.terms), -1)
            for B, c in comm.items():
                rows.setdefault((t, B), {})[A] = c
    return [Multivector(form, v) for v in nullspace(list(rows.values()), range(form.dim))]


def center(form: DiagonalForm) -> list:
    return centralizer(form, [Multivector.gen(form, i) for i in range(1, form.n + 1)])


@dataclass(frozen=True)
class Lemma22Report:
    n: int
    indices: tuple
    lhs_dim: int
    rhs_dim: int
    match: bool


def lemma22_check(form: DiagonalForm, v_indices: Sequence[int]) -> Lemma22Report:
    """Compare C(v_1) n ... n C(v_k) with v_1...v_k Cl(W)_even + Cl(W)_even.

    W is the common orthogonal complement of the v_i = e_i, which must
    satisfy f(v_i) = 1; k must be odd.
    """
    idx = tuple(v_indices)
    k = len(idx)
    if k == 0 or k % 2 == 0:
        raise DomainError("the centralizer identity needs an odd number of vectors, got %d" % k)
    if len(set(idx)) != k or any(not 1 <= i <= form.n for i in idx):
        raise DomainError("indices must be distinct and in 1..%d" % form.n)
    for i in idx:
        if form.diag[i - 1] != 1:
            raise DomainError("f(e_%d) = %s, expected 1" % (i, form.diag[i - 1]))
    gens = [Multivector.gen(form, i) for i in idx]
    lhs = centralizer(form, gens)

    one = form.field.one
    constraints = [{i - 1: form.diag[i - 1] * one} for i in idx]
    perp = nullspace(constraints, range(form.n))
    W = [[v.get(j, form.field.zero) for j in range(form.n)] for v in perp]
    even = [m for s, m in _subalgebra_products(form, orthogonalize(form, W)) if not bin(s).count("1") & 1]
    v = Multivector.scalar(form)
    for g in gens:
        v = v * g
    rhs = [v * b for b in even] + even

    lhs_vecs = [m.terms for m in lhs]
    rhs_vecs = [m.terms for m in rhs]
    rhs_dim = Echelon(rhs_vecs).rank
    return Lemma22Report(form.n, idx, len(lhs), rhs_dim, span_equal(lhs_vecs, rhs_vecs))


def is_split(form: DiagonalForm) -> bool:
    """Whether the form meets the splitting rule under which the structure is checked.

    Over a field containing i every diagonal of +-1 qualifies (rescaling a
    generator by i flips its sign).  Otherwise the diagonal must be a run
    of hyperbolic pairs {1, -1}, plus a final 1 when n is odd.
    """
    d = form.diag
    if form.field.contains_i():
        return all(x == 1 or x == -1 for x in d)
    pairs, rest = d[: form.n - form.n % 2], d[form.n - form.n % 2:]
    for t in range(0, len(pairs), 2):
        if sorted((pairs[t], pairs[t + 1])) != [-1, 1]:
            return False
    return all(x == 1 for x in rest)


def clifford_table(form: DiagonalForm) -> StructureTable:
    one = form.field.one
    basis = [{m: one} for m in range(form.dim)]
    labels = ["".join("e%d" % i for i in indices_of(m)) or "1" for m in range(form.dim)]
    return StructureTable.from_basis(basis, lambda x, y: _mul_terms(form, x, y), form.field,
                                     unit={0: one}, labels=labels)


def _summand_table(form, e):
    span = Echelon()
    for A in range(form.dim):
        span.add(_mul_terms(form, e.terms, {A: form.field.one}))
    return StructureTable.from_basis(span.basis(), lambda x, y: _mul_terms(form, x, y),
                                     form.field, unit=e.terms)


def structure_id(form: DiagonalForm) -> AlgebraProfile:
    """Wedderburn profile of Cl(V, f), verified by exact computation.

    Even n: trivial center and zero radical give one block 2^(n/2).
    Odd n: the two central idempotents (1 +- w/s)/2, where w = e_1...e_n and
    s^2 = w^2, split the algebra into two simple summands of dimension
    2^(n-1) each.
    """
    n = form.n
    if n == 0:
        return AlgebraProfile([1])
    if not is_split(form):
        raise NonSplitForm("form %s is not split over %s" % ([str(x) for x in form.diag], form.field.name))
    if radical_dim(clifford_table(form)) != 0:
        raise ConsistencyError("nonzero radical in a Clifford algebra of a nondegenerate form")
    cent = center(form)
    if n % 2 == 0:
        if len(cent) != 1:
            raise ConsistencyError("center of dimension %d, expected 1" % len(cent))
        return AlgebraProfile([1 << (n // 2)])

    if len(cent) != 2:
        raise ConsistencyError("center of dimension %d, expected 2" % len(cent))
    w = Multivector(form, {form.dim - 1: 1})
    w2 = w * w
    if not w2.is_scalar():
        raise ConsistencyError("pseudoscalar square is not scalar")
    roots = form.field.nth_roots(w2.scalar_part(), 2)
    if not roots:
        raise NonSplitForm("the center needs sqrt(%s), absent from %s" % (w2.scalar_part(), form.field.name),
                           value=w2.scalar_part())
    s = roots[0]
    half = form.field(1) / 2
    idems = [(1 + w / s) * half, (1 - w / s) * half]
    e1, e2 = idems
    if e1 * e1 != e1 or e2 * e2 != e2 or e1 * e2 != 0 or e1 + e2 != 1:
        raise ConsistencyError("central idempotents failed verification")
    size = 1 << ((n - 1) // 2)
    for e in idems:
        t = _summand_table(form, e)
        if t.dim != 1 << (n - 1):
            raise ConsistencyError("summand of dimension %d, expected %d" % (t.dim, 1 << (n - 1)))
        if len(center_basis(t)) != 1:
            raise ConsistencyError("summand center is not one-dimensional")
    return AlgebraProfile([size, size])
