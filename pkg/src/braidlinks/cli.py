"""
Command line front end.

Words and half-twist expressions share one grammar (``s2 s1^-1``,
``Z[1,3]^2``, ``Zb[2,4]^2``, ``Z[1,2] ^ { Z[2,3]^2 }``, primes for doubled
labels). The strand count is always given with ``-n``; it is never inferred.

Exit codes: 0 success, 1 a check or comparison failed, 2 usage or parse
error, 3 unsupported feature.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import braid as b
from . import halftwist as ht
from . import links as L
from . import monodromy as m
from . import suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _word(text: str, n: int) -> b.BraidWord:
    try:
        return ht.evaluate(text, n)
    except ht.ParseError as exc:
        caret = " " * exc.position + "^"
        raise UsageError(f"parse error: {exc}\n  {text}\n  {caret}") from exc
    except b.BraidError as exc:
        raise UsageError(str(exc)) from exc


def _word_report(w: b.BraidWord) -> dict:
    red = b.free_reduce(w)
    return {
        "word": b.format_word(w),
        "reduced": b.format_word(red),
        "normal_form": str(b.normal_form(w)),
        "permutation": str(b.permutation_image(w)),
        "exponent_sum": b.exponent_sum(w),
        "strands": w.strands,
    }


def _summary_report(w: b.BraidWord) -> dict:
    if w.strands > L.MAX_BRACKET_STRANDS:
        raise UsageError(f"Jones polynomial needs at most {L.MAX_BRACKET_STRANDS} strands, word has {w.strands}")
    out = L.summarize(w).to_json()
    out["jones_text"] = L.format_jones(L.jones(w))
    return out


# ------------------------------------------------------------------ commands


def cmd_eval(args) -> tuple[int, dict]:
    return EXIT_OK, _word_report(_word(args.expr, args.n))


def cmd_nf(args) -> tuple[int, dict]:
    w = _word(args.expr, args.n)
    nf = b.normal_form(w)
    return EXIT_OK, {"normal_form": str(nf), "delta_power": nf.delta_power, "canonical_length": nf.canonical_length}


def cmd_eq(args) -> tuple[int, dict]:
    lhs, rhs = _word(args.lhs, args.n), _word(args.rhs, args.n)
    same = b.equal(lhs, rhs)
    return (EXIT_OK if same else EXIT_FAIL), {"equal": same, "lhs": str(b.normal_form(lhs)), "rhs": str(b.normal_form(rhs))}


def cmd_closure(args) -> tuple[int, dict]:
    return EXIT_OK, _summary_report(_word(args.expr, args.n))


def cmd_jones(args) -> tuple[int, dict]:
    w = _word(args.expr, args.n)
    v = L.jones(w)
    return EXIT_OK, {"jones": L.jones_to_json(v), "jones_text": L.format_jones(v)}


def _parse_cable(text: str) -> L.CableSpec:
    try:
        comp, p, t = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"cable spec must be COMPONENT:P:T, got {text!r}") from None
    return L.CableSpec(comp, p, t)


def cmd_cable(args) -> tuple[int, dict]:
    w = _word(args.expr, args.n)
    specs = [_parse_cable(s) for s in args.spec]
    try:
        cabled = L.cable_many(w, specs)
        framings = {str(s.component): L.blackboard_framing(w, s.component) for s in specs}
    except (b.BraidError, IndexError) as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK, {
        "cabled": b.format_word(cabled),
        "strands": cabled.strands,
        "blackboard_framing": framings,
        "summary": _summary_report(cabled),
    }


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_regen(args) -> tuple[int, dict]:
    if args.config in m.BUILTIN:
        config = m.builtin(args.config)
    elif args.config in m.DIAGRAMS:
        return EXIT_OK, _diagram_report(m.DIAGRAMS[args.config]())
    elif os.path.exists(args.config):
        data = _load_json(args.config)
        if "vertices" in data:
            return EXIT_OK, _diagram_report(_load_diagram(data))
        try:
            config = m.configuration_from_json(data)
        except m.UnsupportedFeature:
            raise
        except b.BraidError as exc:
            raise UsageError(str(exc)) from exc
    else:
        known = ", ".join([*m.BUILTIN, *m.DIAGRAMS])
        raise UsageError(f"{args.config!r} is neither a file nor a built-in name ({known})")
    try:
        fac = config.factorization()
    except b.BraidError as exc:
        raise UsageError(str(exc)) from exc
    product = m.table_product(fac)
    report = {
        "configuration": config.name,
        "factors": [{"label": label, "word": b.format_word(w)} for label, w in fac.factors],
        "product": _word_report(product),
        "expected_degree": config.expected_degree(),
    }
    if product.strands <= L.MAX_BRACKET_STRANDS:
        report["summary"] = _summary_report(product)
    return EXIT_OK, report


def _diagram_report(d: m.DegenerationDiagram) -> dict:
    rows = []
    for v in range(len(d.vertices)):
        try:
            found = m.classify_k_points(d, [v])
        except m.UnsupportedFeature as exc:
            rows.append({"vertex": d.name(v), "k": None, "type": "unsupported", "note": str(exc)})
            continue
        except b.BraidError as exc:
            raise UsageError(str(exc)) from exc
        rows.extend({"vertex": d.name(k.vertex), "k": k.k, "type": k.kind} for k in found)
    return {
        "vertex_order": [d.name(v) for v in m.lex_order_vertices(d)],
        "line_order": [f"{d.name(d.edges[e][0])}-{d.name(d.edges[e][1])}" for e in m.lex_order_lines(d)],
        "k_points": rows,
    }


def _load_diagram(data: dict) -> m.DegenerationDiagram:
    try:
        return m.DegenerationDiagram.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:  # BraidError is a ValueError
        raise UsageError(f"bad degeneration diagram: {exc}") from exc


def cmd_suite(args) -> tuple[int, dict]:
    results = suite.run(args.filter, jobs=args.jobs)
    failed = [r.id for r in results if not r.passed]
    payload = {"results": {r.id: r.to_json() for r in results}, "passed": len(results) - len(failed), "failed": failed}
    return (EXIT_FAIL if failed else EXIT_OK), payload


# ------------------------------------------------------------------- output


def _print_human(op: str, payload: dict) -> None:
    if op == "suite":
        for rid, row in payload["results"].items():
            mark = "ok  " if row["passed"] else "FAIL"
            print(f"{mark} {rid:32s} {row['detail']}")
        print(f"{payload['passed']} passed, {len(payload['failed'])} failed")
        return
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{key}:")
            for k2, v2 in value.items():
                print(f"  {k2}: {v2}")
        elif isinstance(value, list):
            print(f"{key}:")
            for item in value:
                print(f"  {item}")
        else:
            print(f"{key}: {value}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidlinks", description="Braid monodromy words and their closures.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_n(name: str, help_text: str, *positional: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("-n", type=int, required=True, help="number of strands")
        for pos in positional:
            sp.add_argument(pos)
        sp.add_argument("--json", action="store_true")
        return sp

    with_n("eval", "compile an expression and show its normal form", "expr")
    with_n("nf", "Garside normal form", "expr")
    with_n("eq", "decide equality of two words", "lhs", "rhs")
    with_n("closure", "invariants of the closed braid", "expr")
    with_n("jones", "Jones polynomial of the closure", "expr")
    sp = with_n("cable", "cable closure components", "expr")
    sp.add_argument("--spec", action="append", required=True, metavar="COMPONENT:P:T",
                    help="component index (0-based), parallel copies, half twists; repeatable")

    sp = sub.add_parser("regen", help="factorization of a configuration, or the k-points of a degeneration diagram")
    sp.add_argument("config")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("suite", help="run the regression checks")
    sp.add_argument("--filter", default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    return p


COMMANDS = {
    "eval": cmd_eval,
    "nf": cmd_nf,
    "eq": cmd_eq,
    "closure": cmd_closure,
    "jones": cmd_jones,
    "cable": cmd_cable,
    "regen": cmd_regen,
    "suite": cmd_suite,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code, payload = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except m.UnsupportedFeature as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if args.json:
        report = {
            "operation": args.command,
            "input": {k: v for k, v in vars(args).items() if k not in ("command", "json")},
            "result": payload,
            "elapsed_seconds": round(time.perf_counter() - start, 6),
        }
        print(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        _print_human(args.command, payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
