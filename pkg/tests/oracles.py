"""Slow, independent reference computations used only by the tests."""

from fractions import Fraction


# -- integer polynomials (lowest degree first)

def pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def pdiv_exact(num, den):
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        q[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    assert not any(num), "division was not exact"
    return q


def mobius(n):
    mu, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
        p += 1
    return -mu if n > 1 else mu


def cyclotomic_mobius(n):
    """Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)."""
    num, den = [1], [1]
    for d in range(1, n + 1):
        if n % d == 0:
            f = [-1] + [0] * (d - 1) + [1]
            mu = mobius(n // d)
            if mu == 1:
                num = pmul(num, f)
            elif mu == -1:
                den = pmul(den, f)
    return pdiv_exact(num, den)


# -- dense Gaussian elimination

def dense_rank(rows):
    rows = [list(r) for r in rows]
    rank, cols = 0, len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c] * inv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def dense_nullity(rows, ncols):
    return ncols - dense_rank(rows) if rows else ncols


# -- Clifford products by rewriting words of generators

def clifford_word_product(word, diag):
    """Reduce e_w1 e_w2 ... to (coeff, sorted tuple) by adjacent swaps and contractions."""
    word = list(word)
    coeff = Fraction(1)
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            a, b = word[k], word[k + 1]
            if a == b:
                coeff *= diag[a - 1]
                del word[k:k + 2]
                changed = True
                break
            if a > b:
                word[k], word[k + 1] = b, a
                coeff = -coeff
                changed = True
                break
    return coeff, tuple(word)


# -- generalized Clifford products by rewriting

def gc_word_product(word, l):
    """Reduce a word of generator indices using x_j x_i = xi x_i x_j (i < j), x_i^l = 1.

    Returns (power of xi, exponent tuple over indices 1..max).
    """
    word = list(word)
    phase = 0
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                word[k], word[k + 1] = word[k + 1], word[k]
                phase += 1
                changed = True
                break
    return phase % l, word


def monomial_word(exps):
    w = []
    for i, e in enumerate(exps, 1):
        w += [i] * e
    return w


def gc_monomial_product(a, b, l):
    phase, word = gc_word_product(monomial_word(a) + monomial_word(b), l)
    exps = [0] * len(a)
    for i in word:
        exps[i - 1] += 1
    return phase, tuple(e % l for e in exps)


def central_by_rewriting(k, l):
    """Exponent vector k is central iff x^k x_i and x_i x^k agree for every i."""
    m = len(k)
    for i in range(m):
        g = tuple(int(j == i) for j in range(m))
        if gc_monomial_product(k, g, l) != gc_monomial_product(g, k, l):
            return False
    return True
