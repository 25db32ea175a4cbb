"""Generalized Clifford algebras Clg(l, m).

Generators x_1..x_m satisfy x_i^l = 1 and x_j x_i = xi x_i x_j for i < j,
with xi a primitive l-th root of unity.  Ordered monomials
x_1^k_1 ... x_m^k_m (0 <= k_i < l) form a basis, keyed here by the exponent
tuple k.  Moving the right factor's variables leftwards gives

    x^a * x^b = xi^(sum_{i<j} a_j b_i) * x^((a + b) mod l).

Coefficients live in Q(zeta_l) by default; ``field_order`` (a multiple of
l) selects a larger cyclotomic field when a construction needs roots that
Q(zeta_l) lacks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Optional, Sequence

from .errors import ConsistencyError, DomainError, FieldExtensionRequired, NotInvariant, OrderMismatch
from .exactnum import IntMatrix, ScalarField, kernel_mod
from .fdalg import AlgebraProfile, StructureTable, center_basis as table_center
from .fdalg import radical_dim as table_radical_dim
from .linalg import Echelon, add_scaled, scale, solve

__all__ = [
    "GCParams",
    "GCElement",
    "gc_mul",
    "phi",
    "extract_components",
    "invariant_span_check",
    "InvariantSpanReport",
    "k_matrix",
    "center_basis",
    "brute_force_center",
    "gc_table",
    "radical_dim",
    "clock_shift_rep",
    "wedderburn",
]


@dataclass(frozen=True)
class GCParams:
    l: int
    m: int
    field_order: Optional[int] = dc_field(default=None, compare=True)

    def __post_init__(self):
        if self.l < 2:
            raise DomainError("l must be at least 2, got %d" % self.l)
        if self.m < 1:
            raise DomainError("m must be at least 1, got %d" % self.m)
        if self.field_order is not None and self.field_order % self.l:
            raise DomainError("field order %d is not a multiple of l = %d" % (self.field_order, self.l))

    @cached_property
    def field(self) -> ScalarField:
        return ScalarField(self.field_order or self.l)

    @cached_property
    def xi_powers(self) -> tuple:
        step = (self.field_order or self.l) // self.l
        return tuple(self.field.zeta(step * s) for s in range(self.l))

    def xi(self, e=1):
        return self.xi_powers[e % self.l]

    @property
    def dim(self) -> int:
        return self.l ** self.m

    def monomials(self):
        return itertools.product(range(self.l), repeat=self.m)


def _phase(a, b, l):
    acc = 0
    prefix = 0
    for aj, bj in zip(a, b):
        acc += aj * prefix
        prefix += bj
    return acc % l


def _mul_terms(params, x: dict, y: dict) -> dict:
    l = params.l
    xi = params.xi_powers
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            k = tuple((s + t) % l for s, t in zip(a, b))
            e = _phase(a, b, l)
            c = ca * cb if e == 0 else ca * cb * xi[e]
            w = out.get(k)
            w = c if w is None else w + c
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


class GCElement:
    """Element of Clg(l, m): exponent tuple -> nonzero scalar."""

    __slots__ = ("params", "terms")

    def __init__(self, params: GCParams, terms=None):
        self.params = params
        clean = {}
        for k, c in (terms or {}).items():
            k = tuple(int(e) % params.l for e in k)
            if len(k) != params.m:
                raise ValueError("exponent vector %r has length %d, expected %d" % (k, len(k), params.m))
            c = params.field(c)
            if c:
                w = clean.get(k)
                w = c if w is None else w + c
                if w:
                    clean[k] = w
                else:
                    clean.pop(k)
        self.terms = clean

    @classmethod
    def _raw(cls, params, terms):
        obj = object.__new__(cls)
        obj.params = params
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, params, exps, coeff=1):
        return cls(params, {tuple(exps): coeff})

    @classmethod
    def one(cls, params):
        return cls.monomial(params, (0,) * params.m)

    @classmethod
    def gen(cls, params, i: int):
        if not 1 <= i <= params.m:
            raise IndexError("generator index %d out of range 1..%d" % (i, params.m))
        return cls.monomial(params, tuple(int(j == i - 1) for j in range(params.m)))

    def _check(self, other):
        if other.params != self.params:
            raise OrderMismatch("elements of different generalized Clifford algebras")

    def _lift(self, other):
        if isinstance(other, GCElement):
            self._check(other)
            return other
        return GCElement(self.params, {(0,) * self.params.m: other})

    def __add__(self, other):
        other = self._lift(other)
        return GCElement._raw(self.params, add_scaled(dict(self.terms), other.terms, 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return GCElement._raw(self.params, add_scaled(dict(self.terms), other.terms, -1))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return GCElement._raw(self.params, scale(self.terms, -1))

    def __mul__(self, other):
        if isinstance(other, GCElement):
            return gc_mul(self, other)
        return GCElement._raw(self.params, scale(self.terms, self.params.field(other)))

    def __rmul__(self, other):
        return GCElement._raw(self.params, scale(self.terms, self.params.field(other)))

    def __truediv__(self, other):
        return self * (1 / self.params.field(other))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = GCElement.one(self.params)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GCElement):
            return self.params == other.params and self.terms == other.terms
        if other == 0:
            return not self.terms
        try:
            return self.terms == self._lift(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.params, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_scalar(self):
        return all(not any(k) for k in self.terms)

    def scalar_part(self):
        return self.terms.get((0,) * self.params.m, self.params.field.zero)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            mon = "*".join(("x%d" % (i + 1)) + ("^%d" % e if e > 1 else "") for i, e in enumerate(k) if e)
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            else:
                parts.append("(%s)*%s" % (c, mon))
        return " + ".join(parts)


def gc_mul(a: GCElement, b: GCElement) -> GCElement:
    a._check(b)
    return GCElement._raw(a.params, _mul_terms(a.params, a.terms, b.terms))


def _check_index(params, i):
    if not 1 <= i <= params.m:
        raise DomainError("generator index %d out of range 1..%d" % (i, params.m))


def phi(i: int, a: GCElement) -> GCElement:
    """Automorphism x_j -> xi^(delta_ij) x_j: scales x^k by xi^(k_i)."""
    _check_index(a.params, i)
    p = a.params
    return GCElement._raw(p, {k: c * p.xi(k[i - 1]) for k, c in a.terms.items()})


def extract_components(a: GCElement, i: int) -> list:
    """Split a = sum_k x_i^k v_k, with v_k free of x_i, returning [x_i^k v_k].

    The images phi_i^s(a) = sum_k xi^(sk) x_i^k v_k (s = 0..l-1) form a
    Vandermonde system whose inverse is (1/l) (xi^(-sk)).
    """
    _check_index(a.params, i)
    p = a.params
    images = [a]
    for _ in range(p.l - 1):
        images.append(phi(i, images[-1]))
    inv_l = p.field(1) / p.l
    out = []
    for k in range(p.l):
        acc = {}
        for s, img in enumerate(images):
            add_scaled(acc, img.terms, p.xi(-s * k) * inv_l)
        out.append(GCElement._raw(p, acc))
    return out


@dataclass(frozen=True)
class InvariantSpanReport:
    input_dim: int
    monomial_dim: int
    monomials: tuple
    equal: bool


def invariant_span_check(basis: Sequence[GCElement]) -> InvariantSpanReport:
    """Check that a phi-invariant subspace is spanned by the monomials it contains."""
    if not basis:
        raise DomainError("empty basis")
    p = basis[0].params
    span = Echelon()
    for b in basis:
        b._check(basis[0])
        span.add(b.terms)
    for i in range(1, p.m + 1):
        for b in basis:
            img = phi(i, b)
            if not span.contains(img.terms):
                raise NotInvariant("span is not invariant under phi_%d" % i, generator=i, vector=b)

    pieces = [b for b in basis if b]
    for i in range(1, p.m + 1):
        pieces = [c for b in pieces for c in extract_components(b, i) if c]
    monos = sorted({next(iter(c.terms)) for c in pieces})
    for c in pieces:
        if len(c.terms) != 1:
            raise ConsistencyError("component extraction left a non-monomial %r" % (c,))
    mono_vecs = [{k: p.field.one} for k in monos]
    inside = all(span.contains(v) for v in mono_vecs)
    mono_dim = Echelon(mono_vecs).rank
    return InvariantSpanReport(span.rank, mono_dim, tuple(monos), inside and mono_dim == span.rank)


def k_matrix(m: int) -> IntMatrix:
    """The m x m matrix with 0 on the diagonal, +1 above and -1 below."""
    return IntMatrix([[0 if i == j else (1 if j > i else -1) for j in range(m)] for i in range(m)])


def _commutes_with_generators(params, k):
    x = {tuple(k): params.field.one}
    for i in range(params.m):
        g = {tuple(int(j == i) for j in range(params.m)): params.field.one}
        if _mul_terms(params, x, g) != _mul_terms(params, g, x):
            return False
    return True


def center_basis(params: GCParams) -> list:
    """Central monomials x^k, k in the kernel of K over Z/lZ.

    Conjugating x^k by x_i scales it by xi^(-k_1-...-k_(i-1)+k_(i+1)+...+k_m),
    so x^k is central iff K k = 0 (mod l).
    """
    sol = kernel_mod(k_matrix(params.m), params.l)
    out = []
    for k in sol.elements():
        if not _commutes_with_generators(params, k):
            raise ConsistencyError("kernel vector %r gives a non-central monomial" % (k,))
        out.append(GCElement.monomial(params, k))
    if len(out) != sol.count:
        raise ConsistencyError("kernel enumeration disagrees with the Smith count")
    return out


def brute_force_center(params: GCParams) -> list:
    """Exponent vectors of monomials commuting with every generator, by enumeration."""
    return [k for k in params.monomials() if _commutes_with_generators(params, k)]


def gc_table(params: GCParams) -> StructureTable:
    one = params.field.one
    monos = list(params.monomials())
    basis = [{k: one} for k in monos]
    return StructureTable.from_basis(basis, lambda x, y: _mul_terms(params, x, y), params.field,
                                     unit={(0,) * params.m: one}, labels=monos)


def radical_dim(structure, samples=200, seed=0) -> int:
    """Jacobson radical dimension of a StructureTable (or of Clg(l, m) for GCParams)."""
    if isinstance(structure, GCParams):
        structure = gc_table(structure)
    return table_radical_dim(structure, samples=samples, seed=seed)


# ---------------------------------------------------------------------------
# explicit matrix representation

def _smul(A, B):
    rows = {}
    for (r, c), v in B.items():
        rows.setdefault(r, []).append((c, v))
    out = {}
    for (r, k), a in A.items():
        for c, b in rows.get(k, ()):
            w = out.get((r, c))
            w = a * b if w is None else w + a * b
            if w:
                out[r, c] = w
            else:
                out.pop((r, c))
    return out


def _skron(A, nb, B):
    out = {}
    for (r1, c1), a in A.items():
        for (r2, c2), b in B.items():
            out[r1 * nb + r2, c1 * nb + c2] = a * b
    return out


def _sident(n, one):
    return {(i, i): one for i in range(n)}


def _dense(A, n, zero):
    return [[A.get((r, c), zero) for c in range(n)] for r in range(n)]


def _slot_operators(params):
    l, f = params.l, params.field
    one = f.one
    X = {((j + 1) % l, j): one for j in range(l)}
    Z = {(j, j): params.xi(j) for j in range(l)}
    # string operator c * X^(-1) Z anticommutes (up to xi) with both X and Z
    W = {((j - 1) % l, j): params.xi(j) for j in range(l)}
    return X, Z, W


def _clock_shift_sparse(params):
    if params.m % 2:
        raise DomainError("clock-shift representation needs even m, got %d" % params.m)
    l, k = params.l, params.m // 2
    f = params.field
    X, Z, W = _slot_operators(params)
    if k > 1:
        # (X^-1 Z)^l = xi^(-l(l-1)/2), i.e. -1 for even l; rescale so the string has order l
        power = _sident(l, f.one)
        for _ in range(l):
            power = _smul(power, W)
        scalar = power[0, 0]
        roots = f.nth_roots(1 / scalar, l)
        if not roots:
            raise FieldExtensionRequired(
                "the twisting string needs an l-th root of %s, absent from %s" % (1 / scalar, f.name),
                value=1 / scalar)
        c = roots[0]
        W = {key: c * v for key, v in W.items()}
    I = _sident(l, f.one)
    gens = []
    for s in range(k):
        for op in (X, Z):
            mat = {(0, 0): f.one}
            size = 1
            for t in range(k):
                part = W if t < s else (op if t == s else I)
                mat = _skron(mat, l, part)
                size *= l
            gens.append(mat)
    return gens, l ** k


def _monomial_images(params, gens, n):
    """Sparse images of every ordered monomial x^k."""
    f = params.field
    powers = []
    for g in gens:
        p = [_sident(n, f.one)]
        for _ in range(params.l - 1):
            p.append(_smul(p[-1], g))
        powers.append(p)
    images = {}
    for k in params.monomials():
        mat = _sident(n, f.one)
        for i, e in enumerate(k):
            if e:
                mat = _smul(mat, powers[i][e])
        images[k] = mat
    return images


def clock_shift_rep(params: GCParams, verify=True) -> list:
    """Matrices of size l^(m/2) realizing Clg(l, m) for even m.

    Pair i of generators acts by the shift X (x_(2i-1)) and the clock
    Z = diag(1, xi, ..., xi^(l-1)) (x_(2i)) in tensor slot i.  Earlier slots
    carry the string c * X^(-1) Z, which makes generators from different
    pairs xi-commute as the presentation demands; c is 1 for odd l and an
    l-th root of -1 for even l (needed only when m >= 4).
    """
    gens, n = _clock_shift_sparse(params)
    if verify:
        _verify_rep(params, gens, n)
    zero = params.field.zero
    return [_dense(g, n, zero) for g in gens]


def _verify_rep(params, gens, n):
    f = params.field
    ident = _sident(n, f.one)
    for i, g in enumerate(gens, 1):
        p = ident
        for _ in range(params.l):
            p = _smul(p, g)
        if p != ident:
            raise ConsistencyError("image of x_%d does not have order l" % i)
    xi = params.xi(1)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            lhs = _smul(gens[j], gens[i])
            rhs = {key: xi * v for key, v in _smul(gens[i], gens[j]).items()}
            if lhs != rhs:
                raise ConsistencyError("x_%d x_%d != xi x_%d x_%d in the representation" % (j + 1, i + 1, i + 1, j + 1))
    images = _monomial_images(params, gens, n)
    rank = Echelon(images.values()).rank
    if rank != params.dim:
        raise ConsistencyError("monomial images span rank %d, expected %d" % (rank, params.dim))
    return images


def rep_span_rank(params: GCParams) -> int:
    gens, n = _clock_shift_sparse(params)
    return Echelon(_monomial_images(params, gens, n).values()).rank


def pullback(params: GCParams, matrix: dict) -> GCElement:
    """The element of Clg(l, m) whose clock-shift image is ``matrix`` (sparse)."""
    gens, n = _clock_shift_sparse(params)
    images = _monomial_images(params, gens, n)
    keys = list(images)
    coeffs = solve([images[k] for k in keys], matrix)
    if coeffs is None:
        raise ConsistencyError("matrix is outside the image of the representation")
    return GCElement(params, {k: c for k, c in zip(keys, coeffs) if c})


def _summand_table(params, e):
    span = Echelon()
    for k in params.monomials():
        span.add(_mul_terms(params, e.terms, {k: params.field.one}))
    return StructureTable.from_basis(span.basis(), lambda x, y: _mul_terms(params, x, y),
                                     params.field, unit=e.terms)


def central_idempotents(params: GCParams) -> list:
    """The l orthogonal central idempotents of Clg(l, m), m odd.

    z = x^(1,-1,1,...,1) is central with z^l a scalar c; after dividing z by
    an l-th root of c, e_k = (1/l) sum_s xi^(-ks) z^s.
    """
    if params.m % 2 == 0:
        raise DomainError("central idempotents exist only for odd m")
    l = params.l
    exps = tuple((1 if t % 2 == 0 else l - 1) for t in range(params.m))
    z = GCElement.monomial(params, exps)
    zl = z ** l
    if not zl.is_scalar() or not zl:
        raise ConsistencyError("z^l = %r is not a nonzero scalar" % (zl,))
    c = zl.scalar_part()
    roots = params.field.nth_roots(c, l)
    if not roots:
        raise FieldExtensionRequired("normalizing z needs an l-th root of %s, absent from %s"
                                     % (c, params.field.name), value=c)
    zt = z / roots[0]
    powers = [GCElement.one(params)]
    for _ in range(l - 1):
        powers.append(powers[-1] * zt)
    inv_l = params.field(1) / l
    idems = []
    for k in range(l):
        acc = {}
        for s, zs in enumerate(powers):
            add_scaled(acc, zs.terms, params.xi(-k * s) * inv_l)
        idems.append(GCElement._raw(params, acc))
    return idems


def wedderburn(params: GCParams) -> AlgebraProfile:
    """Wedderburn profile of Clg(l, m), each claim verified exactly.

    Even m: the clock-shift representation is checked to be an isomorphism
    onto M_(l^(m/2)).  Odd m: the center has l monomials and the algebra
    splits along l central idempotents into summands of dimension l^(m-1),
    each with zero radical and one-dimensional center.
    """
    l, m = params.l, params.m
    if m % 2 == 0:
        clock_shift_rep(params, verify=True)
        return AlgebraProfile([l ** (m // 2)])

    cent = center_basis(params)
    if len(cent) != l:
        raise ConsistencyError("center has %d monomials, expected %d" % (len(cent), l))
    idems = central_idempotents(params)
    one = GCElement.one(params)
    total = GCElement(params)
    for a, e in enumerate(idems):
        if e * e != e:
            raise ConsistencyError("e_%d is not idempotent" % a)
        for b in range(a + 1, l):
            if e * idems[b] != 0:
                raise ConsistencyError("e_%d e_%d != 0" % (a, b))
        total = total + e
    if total != one:
        raise ConsistencyError("central idempotents do not sum to 1")
    size = l ** ((m - 1) // 2)
    for a, e in enumerate(idems):
        t = _summand_table(params, e)
        if t.dim != l ** (m - 1):
            raise ConsistencyError("summand %d has dimension %d, expected %d" % (a, t.dim, l ** (m - 1)))
        if table_radical_dim(t) != 0:
            raise ConsistencyError("summand %d has a nonzero radical" % a)
        if len(table_center(t)) != 1:
            raise ConsistencyError("summand %d has a center of dimension > 1" % a)
    return AlgebraProfile([size] * l)
