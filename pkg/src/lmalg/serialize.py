"""JSON encodings of every exposed value.

Rationals are "p/q" strings; cyclotomic scalars are {"order", "coeffs"}.
``load_*`` functions raise :class:`SchemaError` naming the offending field.
"""

from __future__ import annotations

from fractions import Fraction

from .clifford import DiagonalForm, Multivector, indices_of
from .errors import SchemaError
from .exactnum import Cyclotomic, IntMatrix, ScalarField
from .fdalg import AlgebraProfile
from .genclifford import GCElement, GCParams
from .locmat import EmbeddingChain
from .steinitz import INF, SteinitzNumber, TOP

__all__ = [
    "dump_rational", "load_rational",
    "dump_scalar", "load_scalar",
    "dump_steinitz", "load_steinitz",
    "dump_form", "load_form",
    "dump_multivector", "load_multivector",
    "dump_gc", "load_gc",
    "dump_chain", "load_chain",
    "dump_profile", "load_profile",
    "dump_intmatrix", "load_intmatrix",
    "dump_matrix",
]


def _need(obj, key, where, kind=None):
    if not isinstance(obj, dict):
        raise SchemaError("expected a JSON object", where)
    if key not in obj:
        raise SchemaError("missing field", "%s.%s" % (where, key) if where else key)
    v = obj[key]
    if kind is not None and not isinstance(v, kind):
        raise SchemaError("expected %s" % getattr(kind, "__name__", kind), "%s.%s" % (where, key) if where else key)
    return v


def _int(v, where):
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError("expected an integer, got %r" % (v,), where)
    return v


# -- scalars

def dump_rational(q) -> str:
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


def load_rational(s, where="value") -> Fraction:
    if isinstance(s, bool):
        raise SchemaError("expected a rational, got %r" % (s,), where)
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise SchemaError("expected an integer or a 'p/q' string, got %r" % (s,), where)


def dump_scalar(x):
    if isinstance(x, Cyclotomic):
        return {"order": x.order, "coeffs": [dump_rational(c) for c in x.coeffs]}
    return dump_rational(x)


def load_scalar(s, field: ScalarField = ScalarField(), where="value"):
    if isinstance(s, dict):
        order = _int(_need(s, "order", where), where + ".order")
        coeffs = _need(s, "coeffs", where, list)
        if order < 1:
            raise SchemaError("order must be positive", where + ".order")
        x = Cyclotomic(order, [load_rational(c, "%s.coeffs[%d]" % (where, i)) for i, c in enumerate(coeffs)])
        if field.order is None:
            if not x.is_rational():
                raise SchemaError("irrational scalar in a rational context", where)
            return x.to_rational()
        if order != field.order:
            if x.is_rational():
                return field(x.to_rational())
            raise SchemaError("scalar of order %d used in %s" % (order, field.name), where)
        return x
    return field(load_rational(s, where))


# -- Steinitz numbers

def dump_steinitz(s: SteinitzNumber) -> dict:
    if s.is_top:
        return {"factors": [], "top": True}
    return {"factors": [[p, "inf" if e == INF else e] for p, e in sorted(s.exponents.items())], "top": False}


def load_steinitz(obj, where="steinitz") -> SteinitzNumber:
    if isinstance(obj, bool):
        raise SchemaError("expected a Steinitz number", where)
    if isinstance(obj, int):
        if obj < 1:
            raise SchemaError("a Steinitz number must be positive", where)
        return SteinitzNumber(obj)
    if isinstance(obj, str) and obj.strip().upper() in ("I", "TOP"):
        return TOP
    top = obj.get("top", False) if isinstance(obj, dict) else None
    if not isinstance(top, bool):
        raise SchemaError("expected a boolean", where + ".top")
    factors = _need(obj, "factors", where, list)
    if top:
        return TOP
    pairs = []
    for i, f in enumerate(factors):
        fw = "%s.factors[%d]" % (where, i)
        if not isinstance(f, list) or len(f) != 2:
            raise SchemaError("expected [prime, exponent]", fw)
        p = _int(f[0], fw)
        e = f[1]
        if e == "inf":
            e = INF
        else:
            e = _int(e, fw)
        pairs.append((p, e))
    try:
        return SteinitzNumber(pairs)
    except ValueError as exc:
        raise SchemaError(str(exc), where + ".factors") from None


# -- Clifford

def _field_from(obj, where):
    name = obj.get("field", "Q")
    if name == "Q":
        return ScalarField()
    if name == "Qzeta":
        order = _int(_need(obj, "l", where), where + ".l")
        if order < 1:
            raise SchemaError("field order must be positive", where + ".l")
        return ScalarField(order)
    raise SchemaError("field must be 'Q' or 'Qzeta', got %r" % (name,), where + ".field")


def dump_form(form: DiagonalForm) -> dict:
    out = {"diag": [dump_scalar(d) for d in form.diag],
           "field": "Q" if form.field.order is None else "Qzeta"}
    if form.field.order is not None:
        out["l"] = form.field.order
    return out


def load_form(obj, where="form") -> DiagonalForm:
    field = _field_from(obj, where)
    diag = _need(obj, "diag", where, list)
    return DiagonalForm([load_scalar(d, field, "%s.diag[%d]" % (where, i)) for i, d in enumerate(diag)], field)


def dump_multivector(a: Multivector) -> dict:
    return {"form": dump_form(a.form),
            "terms": [{"mask": indices_of(m), "coeff": dump_scalar(c)} for m, c in sorted(a.terms.items())]}


def _terms_list(obj, where):
    terms = _need(obj, "terms", where, list)
    for i, t in enumerate(terms):
        if not isinstance(t, dict):
            raise SchemaError("expected a term object", "%s.terms[%d]" % (where, i))
    return terms


def load_multivector(obj, where="multivector", form=None) -> Multivector:
    if form is None:
        form = load_form(_need(obj, "form", where, dict), where + ".form")
    acc = Multivector(form)
    for i, t in enumerate(_terms_list(obj, where)):
        tw = "%s.terms[%d]" % (where, i)
        idx = _need(t, "mask", tw, list)
        for j in idx:
            if _int(j, tw + ".mask") < 1 or j > form.n:
                raise SchemaError("generator index %r out of range 1..%d" % (j, form.n), tw + ".mask")
        c = load_scalar(_need(t, "coeff", tw), form.field, tw + ".coeff")
        # listed indices are taken in the given order, so unsorted lists pick up the reordering sign
        acc = acc + Multivector.blade(form, idx, c)
    return acc


# -- generalized Clifford

def dump_gc(a: GCElement) -> dict:
    p = a.params
    out = {"l": p.l, "m": p.m}
    if p.field_order is not None:
        out["field_order"] = p.field_order
    out["terms"] = [{"exps": list(k), "coeff": dump_scalar(c)} for k, c in sorted(a.terms.items())]
    return out


def load_gc_params(obj, where="element") -> GCParams:
    l = _int(_need(obj, "l", where), where + ".l")
    m = _int(_need(obj, "m", where), where + ".m")
    fo = obj.get("field_order")
    if fo is not None:
        fo = _int(fo, where + ".field_order")
    if l < 2 or m < 1 or (fo is not None and (fo < 1 or fo % l)):
        raise SchemaError("need l >= 2, m >= 1 and field_order a multiple of l", where)
    return GCParams(l, m, fo)


def load_gc(obj, where="element", params=None) -> GCElement:
    if params is None:
        params = load_gc_params(obj, where)
    terms = {}
    for i, t in enumerate(_terms_list(obj, where)):
        tw = "%s.terms[%d]" % (where, i)
        exps = _need(t, "exps", tw, list)
        if len(exps) != params.m:
            raise SchemaError("expected %d exponents" % params.m, tw + ".exps")
        k = tuple(_int(e, tw + ".exps") % params.l for e in exps)
        c = load_scalar(_need(t, "coeff", tw), params.field, tw + ".coeff")
        terms[k] = terms[k] + c if k in terms else c
    return GCElement(params, terms)


# -- chains, profiles, integer matrices

def dump_chain(c: EmbeddingChain) -> dict:
    return {"sizes": list(c.sizes), "tail": c.tail, "label": c.label}


def load_chain(obj, where="chain") -> EmbeddingChain:
    if isinstance(obj, list):
        obj = {"sizes": obj}
    sizes = _need(obj, "sizes", where, list)
    sizes = [_int(n, "%s.sizes[%d]" % (where, i)) for i, n in enumerate(sizes)]
    tail = obj.get("tail")
    if tail is not None:
        tail = _int(tail, where + ".tail")
    label = obj.get("label", "")
    if not isinstance(label, str):
        raise SchemaError("expected a string", where + ".label")
    return EmbeddingChain(sizes, tail, label)


def dump_profile(p: AlgebraProfile) -> dict:
    return {"blocks": list(p.blocks)}


def load_profile(obj, where="profile") -> AlgebraProfile:
    if isinstance(obj, list):
        obj = {"blocks": obj}
    blocks = _need(obj, "blocks", where, list)
    blocks = [_int(b, "%s.blocks[%d]" % (where, i)) for i, b in enumerate(blocks)]
    if not blocks or min(blocks) < 1:
        raise SchemaError("need at least one positive block", where + ".blocks")
    return AlgebraProfile(blocks)


def dump_intmatrix(M: IntMatrix) -> list:
    return M.tolist()


def load_intmatrix(rows, where="matrix") -> IntMatrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise SchemaError("expected a nonempty list of rows", where)
    width = len(rows[0])
    for i, r in enumerate(rows):
        if len(r) != width:
            raise SchemaError("ragged row", "%s[%d]" % (where, i))
        for x in r:
            _int(x, "%s[%d]" % (where, i))
    return IntMatrix(rows)


def dump_matrix(rows) -> list:
    """Dense scalar matrix as nested lists of encoded scalars."""
    return [[dump_scalar(x) for x in row] for row in rows]
