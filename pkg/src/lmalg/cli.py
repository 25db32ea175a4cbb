"""Command-line front end: ``lmalg <group> <op> [operands...]``.

Operands are JSON values given positionally, or a JSON list read with
``--input``.  Results are printed as JSON.  Exit status: 0 on success, 1 on
a domain error (or a failing report), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import clifford, genclifford, locmat, reports
from . import serialize as ser
from .errors import DomainError, SchemaError
from .steinitz import st_divides, st_gcd, st_lcm, st_mul

OPS = {
    "steinitz": ["mul", "divides", "lcm", "gcd", "of-chain"],
    "clifford": ["mul", "center", "centralizer", "structure", "lemma22"],
    "gclifford": ["mul", "center", "wedderburn", "clockshift", "radical", "extract"],
    "chain": ["tensor", "equiv", "iso", "embeds", "realize"],
    "report": sorted(reports.SUITES),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SchemaError(message)


def build_parser():
    p = _Parser(prog="lmalg", description="Locally matrix algebras, Clifford algebras and Steinitz numbers.")
    sub = p.add_subparsers(dest="group", metavar="group")
    sub.required = True
    for group, ops in OPS.items():
        g = sub.add_parser(group, help="%s operations" % group)
        g.add_argument("op", choices=ops)
        g.add_argument("operands", nargs="*", help="JSON operands")
        g.add_argument("--l", type=int)
        g.add_argument("--m", type=int)
        g.add_argument("--n", type=int)
        g.add_argument("--input", help="JSON file holding the operand list ('-' for stdin)")
        g.add_argument("--output", help="write the result here instead of stdout ('-' for stdout)")
        g.add_argument("--probe-set", help="probe sizes for chain decisions, e.g. '1-64' or '2,3,12'")
        g.add_argument("--seed", type=int, default=0)
    return p


def _parse_probes(text):
    if text is None:
        return locmat.DEFAULT_PROBES
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part:
                lo, hi = part.split("-")
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise SchemaError("malformed probe set %r" % text, "--probe-set") from None
    if not out or min(out) < 1:
        raise SchemaError("probe sizes must be positive", "--probe-set")
    return tuple(out)


def _operands(args):
    if args.input is not None:
        try:
            if args.input == "-":
                data = json.load(sys.stdin)
            else:
                with open(args.input) as fh:
                    data = json.load(fh)
        except OSError as exc:
            raise SchemaError(str(exc), "--input") from None
        except json.JSONDecodeError as exc:
            raise SchemaError("invalid JSON: %s" % exc, "--input") from None
        return data if isinstance(data, list) else [data]
    out = []
    for i, text in enumerate(args.operands):
        try:
            out.append(json.loads(text))
        except json.JSONDecodeError:
            raise SchemaError("invalid JSON %r" % text, "operand[%d]" % i) from None
    return out


def _arity(ops, k, name):
    if len(ops) != k:
        raise SchemaError("expected %d operand(s), got %d" % (k, len(ops)), name)


def _gc_params(args, ops, name):
    if args.l is not None or args.m is not None:
        if args.l is None or args.m is None:
            raise SchemaError("--l and --m go together", name)
        if args.l < 2 or args.m < 1:
            raise SchemaError("need l >= 2 and m >= 1", name)
        return genclifford.GCParams(args.l, args.m)
    if ops and isinstance(ops[0], dict) and "l" in ops[0]:
        return ser.load_gc_params(ops[0], "operand[0]")
    raise SchemaError("give --l and --m", name)


def _form(args, ops, name):
    if ops and isinstance(ops[0], dict):
        obj = ops[0].get("form", ops[0])
        return ser.load_form(obj, "operand[0]")
    if args.n is not None:
        if args.n < 0:
            raise SchemaError("n must be nonnegative", "--n")
        return clifford.DiagonalForm([1] * args.n)
    raise SchemaError("give a form operand or --n", name)


def _steinitz(args, ops):
    op = args.op
    if op == "of-chain":
        _arity(ops, 1, op)
        return ser.dump_steinitz(locmat.steinitz_of_chain(ser.load_chain(ops[0], "operand[0]")))
    _arity(ops, 2, op)
    a, b = (ser.load_steinitz(x, "operand[%d]" % i) for i, x in enumerate(ops))
    if op == "divides":
        return {"divides": st_divides(a, b)}
    fn = {"mul": st_mul, "lcm": st_lcm, "gcd": st_gcd}[op]
    return ser.dump_steinitz(fn(a, b))


def _clifford(args, ops):
    op = args.op
    if op == "mul":
        _arity(ops, 2, op)
        a = ser.load_multivector(ops[0], "operand[0]")
        b = ser.load_multivector(ops[1], "operand[1]", form=None if "form" in ops[1] else a.form)
        return ser.dump_multivector(a * b)
    form = _form(args, ops, op)
    if op == "center":
        return {"basis": [ser.dump_multivector(x) for x in clifford.center(form)]}
    if op == "centralizer":
        S = [ser.load_multivector(x, "operand[%d]" % i, form=None if "form" in x else form)
             for i, x in enumerate(ops[1:], 1)]
        return {"basis": [ser.dump_multivector(x) for x in clifford.centralizer(form, S)]}
    if op == "structure":
        return ser.dump_profile(clifford.structure_id(form))
    if op == "lemma22":
        _arity(ops, 2, op)
        if not isinstance(ops[1], list):
            raise SchemaError("expected a list of generator indices", "operand[1]")
        r = clifford.lemma22_check(form, ops[1])
        return {"n": r.n, "indices": list(r.indices), "lhs_dim": r.lhs_dim, "rhs_dim": r.rhs_dim, "match": r.match}


def _gclifford(args, ops):
    op = args.op
    if op == "mul":
        _arity(ops, 2, op)
        a = ser.load_gc(ops[0], "operand[0]")
        b = ser.load_gc(ops[1], "operand[1]", params=None if "l" in ops[1] else a.params)
        return ser.dump_gc(a * b)
    if op == "extract":
        if not ops:
            raise SchemaError("expected an element operand", op)
        a = ser.load_gc(ops[0], "operand[0]")
        i = args.n if len(ops) < 2 else ops[1]
        if isinstance(i, bool) or not isinstance(i, int):
            raise SchemaError("give the generator index as a second operand or --n", op)
        return {"components": [ser.dump_gc(c) for c in genclifford.extract_components(a, i)]}
    p = _gc_params(args, ops, op)
    if op == "center":
        basis = genclifford.center_basis(p)
        return {"exps": [list(next(iter(c.terms))) for c in basis], "count": len(basis)}
    if op == "wedderburn":
        return ser.dump_profile(genclifford.wedderburn(p))
    if op == "clockshift":
        mats = genclifford.clock_shift_rep(p, verify=True)
        return {"size": len(mats[0]), "generators": [ser.dump_matrix(m) for m in mats]}
    if op == "radical":
        return {"radical_dim": genclifford.radical_dim(p)}


def _chain(args, ops):
    op = args.op
    if op == "realize":
        _arity(ops, 1, op)
        return ser.dump_chain(locmat.steinitz_realization(ser.load_steinitz(ops[0], "operand[0]")))
    _arity(ops, 2, op)
    if op == "embeds":
        n = ops[0]
        if isinstance(n, bool) or not isinstance(n, int):
            raise SchemaError("expected a positive integer", "operand[0]")
        target = ops[1]
        if isinstance(target, dict) and "blocks" in target:
            return {"embeds": locmat.unital_embedding_exists(n, ser.load_profile(target, "operand[1]"))}
        return {"embeds": locmat.d_membership(n, ser.load_chain(target, "operand[1]"))}
    a, b = (ser.load_chain(x, "operand[%d]" % i) for i, x in enumerate(ops))
    if op == "tensor":
        c = locmat.tensor(a, b)
        out = ser.dump_chain(c)
        out["steinitz"] = ser.dump_steinitz(locmat.steinitz_of_chain(c))
        return out
    probes = _parse_probes(args.probe_set)
    if op == "equiv":
        return {"equivalent": locmat.universally_equivalent(a, b, probes)}
    return {"isomorphic": locmat.isomorphic_countable(a, b, probes)}


def _report(args, ops):
    fn = reports.SUITES[args.op]
    rows = fn(seed=args.seed) if args.op == "prop2" else fn()
    return {"suite": args.op, "rows": rows, "passed": sum(r["pass"] for r in rows), "total": len(rows)}


HANDLERS = {"steinitz": _steinitz, "clifford": _clifford, "gclifford": _gclifford,
            "chain": _chain, "report": _report}


def _emit(result, args):
    text = json.dumps(result, separators=(",", ":"))
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = HANDLERS[args.group](args, _operands(args))
        _emit(result, args)
    except SchemaError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (DomainError, ZeroDivisionError) as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1
    if args.group == "report" and result["passed"] != result["total"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
