"""Finite-dimensional algebras given by structure constants.

A :class:`StructureTable` stores b_i * b_j = sum_k c^k_ij b_k sparsely and is
the common currency for radical, center and matrix-unit computations on
Clifford algebras, generalized Clifford algebras and their summands.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import TableError
from .exactnum import ScalarField
from .linalg import Echelon, add_scaled, nullspace, scale


@dataclass(frozen=True, init=False)
class AlgebraProfile:
    """Wedderburn data: the multiset of matrix block sizes."""

    blocks: tuple

    def __init__(self, blocks):
        blocks = tuple(sorted(int(b) for b in blocks))
        if not blocks or any(b < 1 for b in blocks):
            raise ValueError("a profile needs at least one positive block size")
        object.__setattr__(self, "blocks", blocks)

    @property
    def dim(self) -> int:
        return sum(b * b for b in self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)


class StructureTable:
    """Algebra with basis b_0..b_{n-1}; vectors are dicts index -> scalar."""

    def __init__(self, dim: int, products: dict, unit: dict, field: ScalarField, labels=None):
        self.dim = dim
        self.products = products
        self.unit = dict(unit)
        self.field = field
        self.labels = list(labels) if labels is not None else list(range(dim))
        self._traces = None

    # -- construction
    @classmethod
    def from_basis(cls, basis: Sequence, mul: Callable, field: ScalarField, unit=None, labels=None):
        """Structure constants of the span of ``basis`` (ambient dict vectors).

        ``mul`` multiplies two ambient vectors.  Products must stay in the
        span; ``unit`` is the ambient identity of the subalgebra.
        """
        basis = [dict(v) for v in basis]
        ech = Echelon(track=True)
        for k, v in enumerate(basis):
            if not ech.add(v, tag=k):
                raise ValueError("basis vector %d is linearly dependent" % k)

        monomial = all(len(v) == 1 and next(iter(v.values())) == 1 for v in basis)
        index = {next(iter(v)): k for k, v in enumerate(basis)} if monomial else None

        def coords(v):
            if index is not None:
                try:
                    return {index[key]: c for key, c in v.items()}
                except KeyError:
                    raise TableError("product leaves the span of the basis") from None
            combo = {}
            if ech.reduce(v, combo):
                raise TableError("product leaves the span of the basis")
            return {k: -c for k, c in combo.items() if c}

        products = {}
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                p = coords(mul(a, b))
                if p:
                    products[i, j] = p
        unit_coords = coords(unit) if unit is not None else None
        if unit_coords is None:
            raise ValueError("a unit element is required")
        return cls(len(basis), products, unit_coords, field, labels=labels)

    @classmethod
    def matrix_algebra(cls, n: int, field: ScalarField = ScalarField()):
        """M_n with basis E_ij at index i*n + j."""
        one = field.one
        products = {}
        for i in range(n):
            for j in range(n):
                for s in range(n):
                    products[i * n + j, j * n + s] = {i * n + s: one}
        unit = {i * n + i: one for i in range(n)}
        labels = ["E%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)]
        return cls(n * n, products, unit, field, labels=labels)

    # -- arithmetic on coordinate vectors
    def mul(self, u: dict, v: dict) -> dict:
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                p = self.products.get((i, j))
                if p:
                    add_scaled(out, p, a * b)
        return out

    def basis_vector(self, i):
        return {i: self.field.one}

    def element(self, coords=None):
        return TableElement(self, coords or {})

    def one(self):
        return TableElement(self, self.unit)

    def basis(self):
        return [TableElement(self, self.basis_vector(i)) for i in range(self.dim)]

    def with_product(self, i, j, value: dict) -> "StructureTable":
        """Copy with the single product b_i * b_j replaced."""
        products = dict(self.products)
        if value:
            products[i, j] = dict(value)
        else:
            products.pop((i, j), None)
        return StructureTable(self.dim, products, self.unit, self.field, self.labels)

    # -- invariants
    def traces(self):
        """tr(L_{b_k}) for every basis element, in the regular representation."""
        if self._traces is None:
            t = [self.field.zero] * self.dim
            for (i, j), p in self.products.items():
                c = p.get(j)
                if c:
                    t[i] = t[i] + c
            self._traces = t
        return self._traces

    def trace(self, v: dict):
        t = self.traces()
        acc = self.field.zero
        for k, c in v.items():
            if t[k]:
                acc = acc + c * t[k]
        return acc

    def check_unit(self):
        for i in range(self.dim):
            b = self.basis_vector(i)
            if self.mul(self.unit, b) != b or self.mul(b, self.unit) != b:
                raise TableError("unit fails on basis element %s" % (self.labels[i],))

    def check_associative(self, samples=200, seed=0):
        """Check (b_i b_j) b_k = b_i (b_j b_k) on sampled (or all small) triples."""
        n = self.dim
        if n ** 3 <= samples:
            triples = [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]
        else:
            rng = random.Random(seed)
            triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
        for i, j, k in triples:
            a, b, c = (self.basis_vector(x) for x in (i, j, k))
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise TableError("not associative on basis triple %r" % ((self.labels[i], self.labels[j],
                                                                        self.labels[k]),))


class TableElement:
    __slots__ = ("table", "coords")

    def __init__(self, table, coords):
        self.table = table
        self.coords = {k: v for k, v in coords.items() if v}

    def __add__(self, other):
        return TableElement(self.table, add_scaled(dict(self.coords), other.coords, 1))

    def __sub__(self, other):
        return TableElement(self.table, add_scaled(dict(self.coords), other.coords, -1))

    def __neg__(self):
        return TableElement(self.table, scale(self.coords, -1))

    def __mul__(self, other):
        if isinstance(other, TableElement):
            return TableElement(self.table, self.table.mul(self.coords, other.coords))
        return TableElement(self.table, scale(self.coords, other))

    def __rmul__(self, c):
        return TableElement(self.table, scale(self.coords, c))

    def __eq__(self, other):
        if isinstance(other, TableElement):
            return self.coords == other.coords
        if other == 0:
            return not self.coords
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def __repr__(self):
        labels = self.table.labels
        return "TableElement(%s)" % (" + ".join("%s*%s" % (c, labels[k]) for k, c in sorted(self.coords.items())) or "0")


def trace_form_gram(table: StructureTable):
    """Rows of the Gram matrix T(b_i, b_j) = tr(L_{b_i b_j})."""
    t = table.traces()
    rows = [dict() for _ in range(table.dim)]
    for (i, j), p in table.products.items():
        acc = table.field.zero
        for k, c in p.items():
            if t[k]:
                acc = acc + c * t[k]
        if acc:
            rows[i][j] = acc
    return rows


def radical_dim(table: StructureTable, samples=200, seed=0) -> int:
    """Dimension of the Jacobson radical, as the kernel of the trace form.

    Valid in characteristic 0, where the radical is exactly the kernel of
    (a, b) -> tr(L_{ab}).  The table is first checked to be unital and
    associative on sampled triples.
    """
    table.check_unit()
    table.check_associative(samples=samples, seed=seed)
    return table.dim - Echelon(trace_form_gram(table)).rank


def center_basis(table: StructureTable) -> list:
    """Coordinate vectors spanning {x : x b_j = b_j x for all j}."""
    # equation (j, k): sum_i x_i (c^k_ij - c^k_ji) = 0
    eqs = {}
    for (i, j), p in table.products.items():
        for k, c in p.items():
            add_scaled(eqs.setdefault((j, k), {}), {i: c}, 1)
            add_scaled(eqs.setdefault((i, k), {}), {j: c}, -1)
    return nullspace([r for r in eqs.values() if r], range(table.dim))
