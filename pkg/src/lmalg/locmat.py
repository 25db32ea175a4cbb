"""Unital locally matrix algebras modelled as embedding chains.

A chain n_1 | n_2 | ... | n_r (optionally continued by n_r * t^k forever)
stands for the direct limit of M_(n_1)(F) -> M_(n_2)(F) -> ...  A unital
copy of M_n sits inside M_(n_k) exactly when n | n_k, so D(A) is the set of
divisors of chain terms and its lcm is the Steinitz number of A.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import ChainError, ConsistencyError, DomainError
from .fdalg import AlgebraProfile, StructureTable, TableElement
from .steinitz import INF, SteinitzNumber, st_divides, st_lcm_of_set, st_mul

__all__ = [
    "EmbeddingChain",
    "steinitz_of_chain",
    "d_membership",
    "tensor",
    "universally_equivalent",
    "isomorphic_countable",
    "unital_embedding_exists",
    "check_matrix_units",
    "MatrixUnitReport",
    "standard_matrix_units",
    "steinitz_realization",
    "DEFAULT_PROBES",
]

DEFAULT_PROBES = tuple(range(1, 65))


@dataclass(frozen=True, init=False)
class EmbeddingChain:
    sizes: tuple
    tail: Optional[int]
    label: str

    def __init__(self, sizes: Iterable[int], tail: Optional[int] = None, label: str = ""):
        sizes = tuple(sizes)
        if not sizes:
            raise ChainError("a chain needs at least one size")
        for n in sizes:
            if isinstance(n, bool) or not isinstance(n, int) or n < 1:
                raise ChainError("chain sizes must be positive integers, got %r" % (n,))
        for a, b in zip(sizes, sizes[1:]):
            if b % a:
                raise ChainError("%d does not divide %d: M_%d has no unital embedding into M_%d" % (a, b, a, b))
        if tail is not None:
            if isinstance(tail, bool) or not isinstance(tail, int) or tail < 2:
                raise ChainError("tail multiplier must be an integer >= 2, got %r" % (tail,))
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "label", str(label))

    @property
    def infinite(self) -> bool:
        return self.tail is not None

    def terms(self, count: int) -> list:
        """The first ``count`` chain terms (tail terms included)."""
        out = list(self.sizes[:count])
        while len(out) < count and self.tail is not None:
            out.append(out[-1] * self.tail)
        return out

    def __str__(self):
        s = " | ".join(map(str, self.sizes))
        if self.tail is not None:
            s += " | ... (x%d)" % self.tail
        return s


def steinitz_of_chain(c: EmbeddingChain) -> SteinitzNumber:
    """lcm of D(A); with a tail every prime of the multiplier is unbounded."""
    return st_lcm_of_set(c.sizes, c.tail)


def d_membership(n: int, c: EmbeddingChain) -> bool:
    """Whether M_n(F) embeds unitally in the limit, i.e. n divides some term."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError("n must be a positive integer, got %r" % (n,))
    return st_divides(SteinitzNumber(n), steinitz_of_chain(c))


def tensor(a: EmbeddingChain, b: EmbeddingChain) -> EmbeddingChain:
    """Chain of the tensor product: termwise products of aligned sizes."""
    r = max(len(a.sizes), len(b.sizes))
    sa = list(a.sizes) + [a.sizes[-1]] * (r - len(a.sizes))
    sb = list(b.sizes) + [b.sizes[-1]] * (r - len(b.sizes))
    if a.tail is not None and b.tail is not None:
        tail = a.tail * b.tail
    else:
        tail = a.tail if a.tail is not None else b.tail
    label = "%s (x) %s" % (a.label, b.label) if a.label or b.label else ""
    out = EmbeddingChain([x * y for x, y in zip(sa, sb)], tail, label)
    if steinitz_of_chain(out) != st_mul(steinitz_of_chain(a), steinitz_of_chain(b)):
        raise ConsistencyError("Steinitz number of a tensor product is not the product")
    return out


def universally_equivalent(a: EmbeddingChain, b: EmbeddingChain, probes: Iterable[int] = DEFAULT_PROBES) -> bool:
    """Equal Steinitz numbers; on a positive answer D(A) and D(B) are compared on ``probes``."""
    same = steinitz_of_chain(a) == steinitz_of_chain(b)
    if same:
        for n in probes:
            if d_membership(n, a) != d_membership(n, b):
                raise ConsistencyError("equal Steinitz numbers but M_%d embeds in only one algebra" % n)
    return same


def isomorphic_countable(a: EmbeddingChain, b: EmbeddingChain, probes: Iterable[int] = DEFAULT_PROBES) -> bool:
    # chains are countable-dimensional, where isomorphism is again Steinitz equality
    return universally_equivalent(a, b, probes)


def unital_embedding_exists(n: int, profile) -> bool:
    """Is there a unital homomorphism M_n(F) -> M_(m_1) + ... + M_(m_k)?"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError("n must be a positive integer, got %r" % (n,))
    if not isinstance(profile, AlgebraProfile):
        profile = AlgebraProfile(profile)
    return all(m % n == 0 for m in profile.blocks)


class MatrixUnitReport(NamedTuple):
    ok: bool
    n: int
    violation: Optional[tuple] = None

    def __bool__(self):
        return self.ok


def _unit_of(x):
    if isinstance(x, TableElement):
        return x.table.one()
    if hasattr(x, "form"):
        return type(x).scalar(x.form, 1)
    if hasattr(x, "params"):
        return type(x).one(x.params)
    raise DomainError("cannot determine the identity for %r; pass one=" % (x,))


def check_matrix_units(units: Sequence[Sequence], one=None) -> MatrixUnitReport:
    """Check x_ij x_ts = delta_jt x_is for all indices and sum_i x_ii = 1.

    ``units`` is an n x n array of algebra elements (TableElement,
    Multivector, GCElement or anything with +, * and ==).  A failing check
    reports the first violated relation: ('product', (i, j, t, s)) with
    1-based indices, or ('unit_sum',).
    """
    n = len(units)
    if n == 0 or any(len(row) != n for row in units):
        raise DomainError("matrix units must form a nonempty square array")
    if one is None:
        one = _unit_of(units[0][0])
    zero = one - one
    for i in range(n):
        for j in range(n):
            for t in range(n):
                for s in range(n):
                    lhs = units[i][j] * units[t][s]
                    rhs = units[i][s] if j == t else zero
                    if lhs != rhs:
                        return MatrixUnitReport(False, n, ("product", (i + 1, j + 1, t + 1, s + 1)))
    total = zero
    for i in range(n):
        total = total + units[i][i]
    if total != one:
        return MatrixUnitReport(False, n, ("unit_sum",))
    return MatrixUnitReport(True, n)


def standard_matrix_units(table: StructureTable, n: int) -> list:
    """E_ij of ``StructureTable.matrix_algebra(n)`` as table elements."""
    if table.dim != n * n:
        raise DomainError("table of dimension %d is not M_%d" % (table.dim, n))
    return [[table.element({i * n + j: table.field.one}) for j in range(n)] for i in range(n)]


def steinitz_realization(tau: SteinitzNumber) -> EmbeddingChain:
    """A chain with Steinitz number ``tau`` (which needs an infinite exponent)."""
    if tau.is_top:
        raise DomainError("I has infinite support and is not realizable by a finite chain description")
    exps = tau.exponents
    inf_primes = [p for p, e in exps.items() if e == INF]
    if not inf_primes:
        raise DomainError("%s has no infinite exponent" % (tau,))
    tail = math.prod(inf_primes)
    first = tail * math.prod(p ** e for p, e in exps.items() if e != INF)
    out = EmbeddingChain([first], tail, label=str(tau))
    if steinitz_of_chain(out) != tau:
        raise ConsistencyError("realized chain has Steinitz number %s, not %s" % (steinitz_of_chain(out), tau))
    return out
