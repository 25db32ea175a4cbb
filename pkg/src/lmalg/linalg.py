"""Sparse exact linear algebra over any field of exact scalars.

Vectors are dicts mapping hashable, mutually comparable keys (bit masks,
exponent tuples, matrix positions) to nonzero scalars.  Scalars only need
``+ - * /`` and truthiness, so Fractions and Cyclotomics both work.
"""

from __future__ import annotations


def add_scaled(target: dict, src: dict, c) -> dict:
    """target += c * src, in place; zero entries are dropped."""
    if not c:
        return target
    for k, v in src.items():
        w = target.get(k)
        w = c * v if w is None else w + c * v
        if w:
            target[k] = w
        else:
            target.pop(k, None)
    return target


def scale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def clean(v: dict) -> dict:
    return {k: x for k, x in v.items() if x}


class Echelon:
    """A reduced row echelon basis grown one vector at a time.

    Every stored row has coefficient 1 at its pivot and 0 at every other
    pivot, so coordinates of a vector in the span can be read off at the
    pivots.  With ``track=True`` each row also records which input
    vectors it combines, which is what :func:`solve` needs.
    """

    def __init__(self, vectors=(), track=False):
        self.rows = {}
        self.track = track
        self.combos = {}
        self._count = 0
        for v in vectors:
            self.add(v)

    @property
    def rank(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def reduce(self, v, combo=None):
        w = dict(v)
        hits = [p for p in w if p in self.rows]
        for p in hits:
            c = w.get(p)
            if c:
                add_scaled(w, self.rows[p], -c)
                if combo is not None:
                    add_scaled(combo, self.combos[p], -c)
        return w

    def add(self, v, tag=None) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        if tag is None:
            tag = self._count
        self._count += 1
        combo = {tag: 1} if self.track else None
        w = self.reduce(v, combo)
        if not w:
            return False
        p = min(w)
        inv = 1 / w[p]
        w = scale(w, inv)
        if combo is not None:
            combo = scale(combo, inv)
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                add_scaled(row, w, -c)
                if self.track:
                    add_scaled(self.combos[q], combo, -c)
        self.rows[p] = w
        if self.track:
            self.combos[p] = combo
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def coords(self, v) -> dict:
        """Coefficients (keyed by pivot) expressing ``v`` in the stored rows."""
        r = self.reduce(v)
        if r:
            raise ValueError("vector is not in the span")
        return {p: v[p] for p in self.rows if v.get(p)}

    def basis(self):
        return [dict(self.rows[p]) for p in self.pivots]


def rank(vectors) -> int:
    return Echelon(vectors).rank


def span_equal(a, b) -> bool:
    ea = Echelon(a)
    if ea.rank != rank(b):
        return False
    return all(ea.contains(v) for v in b)


def nullspace(rows, columns) -> list:
    """Basis of {x : row . x = 0 for every row}; x is keyed by ``columns``."""
    e = Echelon(rows)
    free = [c for c in sorted(columns) if c not in e.rows]
    out = []
    for f in free:
        x = {f: 1}
        for p, row in e.rows.items():
            c = row.get(f)
            if c:
                x[p] = -c
        out.append(x)
    return out


def solve(vectors, target):
    """Coefficients c (list aligned with ``vectors``) with sum c_k v_k = target, or None."""
    e = Echelon(track=True)
    for k, v in enumerate(vectors):
        e.add(v, tag=k)
    combo = {}
    r = e.reduce(target, combo)
    if r:
        return None
    # target - sum(c_p row_p) = 0 with combo accumulating -c_p * combos[p]
    coeffs = [0] * len(vectors)
    for k, c in combo.items():
        coeffs[k] = -c
    return coeffs
