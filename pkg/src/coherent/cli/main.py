"""Command-line front end.

Exit codes: 0 success or equal, 1 definite negative, 2 input or type
error, 3 search budget exhausted.  Errors go to stderr as one JSON record.
"""

from __future__ import annotations

import argparse
import json
import sys

from .. import relgraph as rg
from ..decide import Equal, NotEqual, arrow_exists_lc, arrow_exists_lcmu, equal, scopes
from ..errors import CoherentError, NormalizationBudgetExceeded
from ..relgraph import Relation
from ..rewrite import DEFAULT_BUDGET, enumerate_arrows, equivalent_bounded, normalize, sweep
from ..semantics import graph
from ..terms.theories import THEORY_NAMES, get_theory
from ..terms.typing import infer_type
from .parse import parse_arrow, parse_object

OK, NEGATIVE, INPUT_ERROR, BUDGET = 0, 1, 2, 3


def _dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def dot(R, name="G"):
    """Two-row diagram: source points on top, target points below."""
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    lines.append("  { rank=same; " + " ".join(f"s{i};" for i in range(R.src)) + " }")
    lines.append("  { rank=same; " + " ".join(f"t{j};" for j in range(R.tgt)) + " }")
    lines += [f"  s{i} -> t{j};" for i, j in R.pairs]
    lines.append("}")
    return "\n".join(lines)


def cmd_graph(args, out):
    th = get_theory(args.theory)
    f = parse_arrow(args.term)
    R = graph(f, th)
    rec = R.record()
    rec["category"] = th.target
    rec["member"] = rg.member_of(R, th.target)
    print(_dumps(rec), file=out)
    if args.dot:
        print(dot(R), file=out)
    return OK


def cmd_eq(args, out):
    th = get_theory(args.theory)
    verdict = equal(parse_arrow(args.f), parse_arrow(args.g), th)
    if isinstance(verdict, Equal):
        print("equal", file=out)
        return OK
    if isinstance(verdict, NotEqual):
        i, j = verdict.witness
        print(f"not equal: witness ({i},{j}) in {verdict.present_in} graph", file=out)
        return NEGATIVE
    print(f"type mismatch: {verdict.detail}", file=out)
    return INPUT_ERROR


def cmd_exists(args, out):
    A, B = parse_object(args.src), parse_object(args.tgt)
    decide = arrow_exists_lc if args.lemma == "lc" else arrow_exists_lcmu
    answer = decide(A, B)
    print("true" if answer else "false", file=out)
    print(_dumps({"source": scopes(A).record(), "target": scopes(B).record()}), file=out)
    return OK if answer else NEGATIVE


def cmd_decompose(args, out):
    try:
        R = Relation.from_record(json.loads(args.rel))
    except (ValueError, KeyError, TypeError) as exc:
        raise _InputError(f"bad relation record: {exc}") from None
    t = rg.decompose(R)
    print(f"nu={_dumps(list(t.nu))} mu={_dumps(list(t.mu))} beta={_dumps(list(t.beta))}", file=out)
    ok = rg.recompose(t) == R and rg.is_coordinated(t)
    print("check ok" if ok else "check FAILED", file=out)
    return OK if ok else NEGATIVE


def cmd_oracle(args, out):
    th = get_theory(args.theory)
    result = equivalent_bounded(parse_arrow(args.f), parse_arrow(args.g), th, budget=args.budget, max_size=args.max_size)
    if result:
        print("Equivalent", file=out)
        for step in result.path:
            print(f"  {step}", file=out)
            print(f"    = {step.result}", file=out)
        return OK
    print(f"Unknown ({result.visited} terms visited)", file=out)
    return BUDGET


def cmd_normalize(args, out):
    th = get_theory(args.theory)
    fz = normalize(parse_arrow(args.term), th)
    for stage in fz.stages:
        print(f"{stage.label}: {stage.term}", file=out)
    return OK


def cmd_axioms_check(args, out):
    reports = sweep(args.theory, max_weight=args.max_measure, per_schema=args.per_schema, seed=args.seed)
    failed = 0
    for rep in reports:
        status = "pass" if rep.ok else "FAIL"
        failed += not rep.ok
        print(f"{status} {rep.name} ({rep.instances} instances)", file=out)
        for bad in rep.failures[:2]:
            print(f"    {bad[0]}  vs  {bad[1]}", file=out)
    return NEGATIVE if failed else OK


def cmd_enumerate(args, out):
    th = get_theory(args.theory)
    A, B = parse_object(args.src), parse_object(args.tgt)
    terms = enumerate_arrows(A, B, th, args.max_size)
    for t in terms:
        infer_type(t, th)
        print(t, file=out)
    return OK if terms else NEGATIVE


class _InputError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(prog="coherent", description="Decide equality of canonical arrows by their graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_theory(p):
        p.add_argument("--theory", required=True, choices=THEORY_NAMES)
        return p

    p = with_theory(sub.add_parser("graph", help="print the graph of an arrow term"))
    p.add_argument("term")
    p.add_argument("--dot", action="store_true", help="also print a two-row diagram")
    p.set_defaults(run=cmd_graph)

    p = with_theory(sub.add_parser("eq", help="decide equality of two arrow terms"))
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(run=cmd_eq)

    p = sub.add_parser("exists", help="decide whether an arrow A -> B exists")
    p.add_argument("--lemma", required=True, choices=("lc", "lcmu"))
    p.add_argument("src")
    p.add_argument("tgt")
    p.set_defaults(run=cmd_exists)

    p = sub.add_parser("decompose", help="split a relation into a coordinated triple")
    p.add_argument("--rel", required=True, help='JSON record {"src":n,"tgt":m,"pairs":[[i,j],...]}')
    p.set_defaults(run=cmd_decompose)

    p = with_theory(sub.add_parser("oracle", help="search for a rewrite derivation"))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(run=cmd_oracle)

    p = with_theory(sub.add_parser("normalize", help="print the stage factorization"))
    p.add_argument("term")
    p.set_defaults(run=cmd_normalize)

    p = with_theory(sub.add_parser("axioms-check", help="check every equation on its graph"))
    p.add_argument("--max-measure", type=int, default=3)
    p.add_argument("--per-schema", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_axioms_check)

    p = with_theory(sub.add_parser("enumerate", help="list all terms A -> B up to a size"))
    p.add_argument("--src", required=True)
    p.add_argument("--tgt", required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.set_defaults(run=cmd_enumerate)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.run(args, out)
    except NormalizationBudgetExceeded as exc:
        print(_dumps(exc.record()), file=err)
        return BUDGET
    except CoherentError as exc:
        print(_dumps(exc.record()), file=err)
        return INPUT_ERROR
    except _InputError as exc:
        print(_dumps({"error": "input", "detail": str(exc)}), file=err)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
