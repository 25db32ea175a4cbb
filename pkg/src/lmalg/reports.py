"""Batch verification suites behind ``lmalg report``.

Each suite returns rows {"case", "pass", "detail"}; parameter grids are
pinned so a run is reproducible from the command line alone.
"""

from __future__ import annotations

import random

from .clifford import DiagonalForm, center, lemma22_check, structure_id
from .errors import DomainError
from .exactnum import ScalarField
from .genclifford import GCParams, center_basis, clock_shift_rep, rep_span_rank, radical_dim, wedderburn
from .locmat import EmbeddingChain, steinitz_of_chain, tensor
from .steinitz import INF, SteinitzNumber, st_mul

EVEN_PAIRS = [(2, 2), (2, 4), (3, 2), (3, 4), (4, 2), (4, 4), (6, 2)]
ODD_PAIRS = [(2, 1), (2, 3), (3, 1), (3, 3), (4, 3)]
LEMMA22_CASES = [(2, 1), (3, 1), (4, 1), (5, 1), (5, 3), (6, 1)]

# finite exponents stay below these so divisors up to 64 tell chains apart
CHAIN_PRIMES = {2: 5, 3: 2, 5: 1, 7: 1}


def _row(case, ok, detail=""):
    return {"case": case, "pass": bool(ok), "detail": detail}


def _guard(case, fn):
    try:
        ok, detail = fn()
    except DomainError as exc:
        return _row(case, False, "%s: %s" % (type(exc).__name__, exc))
    return _row(case, ok, detail)


def alternating_form(n, field=None):
    return DiagonalForm([1 if i % 2 == 0 else -1 for i in range(n)], field)


def theorem4():
    rows = []
    for n, field, expect in [(2, None, [2]), (4, None, [4]), (6, None, [8]), (3, 4, [2, 2]), (5, 4, [4, 4])]:
        def run(n=n, field=field, expect=expect):
            form = alternating_form(n, field)
            blocks = list(structure_id(form).blocks)
            cdim = len(center(form))
            want_c = 1 if n % 2 == 0 else 2
            return blocks == expect and cdim == want_c, "blocks %s, center dim %d" % (blocks, cdim)
        rows.append(_guard("n=%d over %s" % (n, ScalarField(field).name), run))
    return rows


def theorem5():
    rows = []
    for l, m in EVEN_PAIRS:
        def run(l=l, m=m):
            p = GCParams(l, m)
            blocks = list(wedderburn(p).blocks)
            clock_shift_rep(p, verify=True)
            rank = rep_span_rank(p)
            return blocks == [l ** (m // 2)] and rank == l ** m, "blocks %s, span rank %d" % (blocks, rank)
        rows.append(_guard("Clg(%d,%d) simple" % (l, m), run))
    for l, m in ODD_PAIRS:
        def run(l=l, m=m):
            p = GCParams(l, m)
            cent = sorted(next(iter(c.terms)) for c in center_basis(p))
            want = sorted(tuple((i if t % 2 == 0 else -i) % l for t in range(m)) for i in range(l))
            blocks = list(wedderburn(p).blocks)
            ok = cent == want and blocks == [l ** ((m - 1) // 2)] * l
            return ok, "center %s, blocks %s" % (cent, blocks)
        rows.append(_guard("Clg(%d,%d) center and summands" % (l, m), run))
    for l, m in EVEN_PAIRS + ODD_PAIRS:
        rows.append(_guard("radical of Clg(%d,%d)" % (l, m),
                           lambda l=l, m=m: (lambda d: (d == 0, "dim %d" % d))(radical_dim(GCParams(l, m)))))
    return rows


def lemma22():
    rows = []
    for n, k in LEMMA22_CASES:
        def run(n=n, k=k):
            form = DiagonalForm([1] * n, 4)
            r = lemma22_check(form, list(range(1, k + 1)))
            want = 2 ** (n - k)
            ok = r.match and r.lhs_dim == want and r.rhs_dim == want
            return ok, "dims %d / %d, expected %d" % (r.lhs_dim, r.rhs_dim, want)
        rows.append(_guard("n=%d k=%d" % (n, k), run))
    return rows


def random_steinitz(rng, inf_prob=0.3):
    exps = {}
    for p, cap in CHAIN_PRIMES.items():
        r = rng.random()
        if r < inf_prob:
            exps[p] = INF
        elif r < inf_prob + 0.4:
            exps[p] = rng.randint(1, cap)
    return SteinitzNumber(exps)


def chain_for(tau: SteinitzNumber, rng, label="") -> EmbeddingChain:
    """A random presentation of a chain with Steinitz number ``tau`` (finite support)."""
    exps = tau.exponents
    inf = [p for p, e in exps.items() if e == INF]
    final = 1
    for p, e in exps.items():
        final *= p ** (rng.randint(0, 2) if e == INF else e)
    # random divisor chain ending at final
    sizes = [final]
    for _ in range(rng.randint(0, 2)):
        head = sizes[0]
        divs = [d for d in range(1, head + 1) if head % d == 0]
        sizes.insert(0, rng.choice(divs))
    tail = None
    if inf:
        tail = 1
        for p in inf:
            tail *= p ** rng.randint(1, 2)
    return EmbeddingChain(sizes, tail, label)


def random_chain_pair(rng):
    """Two chains; half the time presentations of the same Steinitz number."""
    tau = random_steinitz(rng)
    a = chain_for(tau, rng, "a")
    b = chain_for(tau if rng.random() < 0.5 else random_steinitz(rng), rng, "b")
    return a, b


def random_chain(rng):
    return chain_for(random_steinitz(rng), rng)


def prop2(seed=0, count=50):
    rng = random.Random(seed)
    rows = []
    for t in range(count):
        a, b = random_chain(rng), random_chain(rng)
        lhs = steinitz_of_chain(tensor(a, b))
        rhs = st_mul(steinitz_of_chain(a), steinitz_of_chain(b))
        rows.append(_row("pair %d: (%s) x (%s)" % (t, a, b), lhs == rhs, str(lhs)))
    return rows


SUITES = {"theorem4": theorem4, "theorem5": theorem5, "lemma22": lemma22, "prop2": prop2}
