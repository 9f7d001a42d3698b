"""Command-line front end.

Exit codes: 0 ok, 1 parse or input error, 2 representation-infinite,
3 unsupported class or not right 2-Nakayama, 4 budget exceeded,
5 an oracle invariant failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import BudgetExceeded, NotTwoNakayama, ParseError, RepresentationInfinite, UnsupportedAlgebra

EXIT_OK, EXIT_PARSE, EXIT_INFINITE, EXIT_UNSUPPORTED, EXIT_BUDGET, EXIT_INVARIANT = range(6)


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _load(args):
    from .dsl import load_algebra

    return load_algebra(args.file, p=args.field)


def cmd_classify(args):
    from .classify import classify

    alg = _load(args)
    rep = classify(alg, max_rank=args.max_rank)
    if args.json:
        _emit(rep.as_dict())
        return EXIT_OK
    print(rep.summary())
    print(f"backend: {rep.backend}")
    print(f"indecomposables: {len(rep.table)}")
    print("factor-index multiset: " + ", ".join(f"{k}x{v}" for k, v in rep.index_multiset().items()))
    if args.table:
        print()
        print(rep.render_table())
        print()
        print("opposite algebra:")
        print(rep.render_table(left=True))
    return EXIT_OK


def cmd_module(args):
    from .dsl import load_algebra, load_module
    from .module import module_report

    alg = load_algebra(args.file, p=args.field) if args.module else None
    path = args.module or args.file
    m = load_module(path, algebra=alg, p=args.field)
    rep = module_report(m)
    if args.json:
        _emit(rep)
        return EXIT_OK
    for key in ("dimVector", "length", "loewyLength", "local", "uniserial", "factorIndex", "cofactorIndex",
                "radicalLayerDims", "socleLayerDims"):
        print(f"{key}: {json.dumps(rep[key])}")
    return EXIT_OK


def cmd_strings(args):
    from .strings import enumerate_strings

    alg = _load(args)
    words = enumerate_strings(alg)
    if args.json:
        _emit([str(w) for w in words])
    else:
        for w in words:
            print(w)
        print(f"{len(words)} strings")
    return EXIT_OK


def cmd_ar(args):
    from .ar import build_ar_quiver

    alg = _load(args)
    graph = build_ar_quiver(alg, verify=args.verify)
    if args.dot:
        Path(args.dot).write_text(graph.to_dot(), encoding="utf-8")
    if args.json:
        _emit(graph.as_dict())
        return EXIT_OK
    print(f"nodes: {len(graph.nodes)}")
    print(f"edges: {len(graph.edges)}")
    print(f"tau: {len(graph.tau)}")
    for seq in graph.sequences:
        print(seq.describe())
    return EXIT_OK


def cmd_check2(args):
    from .classify import is_right_2_nakayama_syntactic

    alg = _load(args)
    rep = is_right_2_nakayama_syntactic(alg)
    if args.json:
        _emit(rep.as_dict())
    else:
        for c, ok in rep.conditions.items():
            line = f"({c}) {'holds' if ok else 'fails'}"
            if not ok:
                line += f": {rep.witnesses[c]}"
            print(line)
        print("right 2-Nakayama" if rep else "not right 2-Nakayama")
    return EXIT_OK if rep else EXIT_UNSUPPORTED


def cmd_oracle(args):
    from .oracle import run_oracle

    alg = _load(args)
    results, n = run_oracle(alg, budget=args.budget)
    if args.json:
        _emit({"modules": n, "invariants": {r.name: {"checked": r.checked, "passed": r.passed,
                                                       "counterexample": repr(r.failures[0]) if r.failures else None}
                                              for r in results}})
    else:
        print(f"{n} modules checked")
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_INVARIANT


def cmd_hereditary(args):
    from .classify import classify
    from .hereditary import all_orientations, orientation, positive_roots, predicted_index

    if args.type:
        algs = all_orientations(args.type, p=args.field or 2) if args.all else [
            orientation(args.type, args.orientation, p=args.field or 2)]
    elif args.file:
        algs = [_load(args)]
    else:
        raise ParseError("give an algebra file or --type")
    rows = []
    for alg in algs:
        pred = predicted_index(alg)
        rep = classify(alg, max_rank=args.max_rank)
        rows.append({
            "arrows": [[a.name, a.source, a.target] for a in alg.arrows],
            "positiveRoots": len(positive_roots(alg)),
            "indecomposables": len(rep.table),
            "predicted": pred,
            "enumerated": {"right": rep.right_index, "left": rep.left_index},
        })
    if args.json:
        _emit(rows)
    else:
        for r in rows:
            arrows = ", ".join(f"{s}->{t}" for _, s, t in r["arrows"]) or "no arrows"
            print(f"{arrows}: roots {r['positiveRoots']}, indecomposables {r['indecomposables']}, "
                  f"predicted right {r['predicted']['right']} left {r['predicted']['left']}, "
                  f"enumerated right {r['enumerated']['right']} left {r['enumerated']['left']}")
    agree = all(r["predicted"] == r["enumerated"] and r["positiveRoots"] == r["indecomposables"] for r in rows)
    return EXIT_OK if agree else EXIT_INVARIANT


def build_parser():
    parser = argparse.ArgumentParser(prog="nakalab", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=int, default=None, metavar="P", help="prime field override")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="right/left Nakayama indices")
    p.add_argument("file")
    p.add_argument("--table", action="store_true", help="print the per-module table")
    p.add_argument("--max-rank", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("module", parents=[common], help="index report for one module")
    p.add_argument("file", help="algebra file, or a module file with a 'use' line")
    p.add_argument("module", nargs="?", default=None)
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("strings", parents=[common], help="list the strings of a string algebra")
    p.add_argument("file")
    p.set_defaults(func=cmd_strings)

    p = sub.add_parser("ar", parents=[common], help="AR quiver of a right 2-Nakayama algebra")
    p.add_argument("file")
    p.add_argument("--dot", metavar="PATH", default=None)
    p.add_argument("--verify", action="store_true", help="verify every almost split sequence")
    p.set_defaults(func=cmd_ar)

    p = sub.add_parser("check2", parents=[common], help="syntactic right 2-Nakayama test")
    p.add_argument("file")
    p.set_defaults(func=cmd_check2)

    p = sub.add_parser("oracle", parents=[common], help="invariant suite against the submodule oracle")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=1 << 12, help="maximal p^dim for submodule enumeration")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("hereditary", parents=[common], help="closed forms vs enumeration for Dynkin quivers")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--type", default=None, help="Dynkin type such as D4")
    p.add_argument("--orientation", type=int, default=0, help="edge bitmask")
    p.add_argument("--all", action="store_true", help="every orientation of --type")
    p.add_argument("--max-rank", type=int, default=None)
    p.set_defaults(func=cmd_hereditary)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", 1) is not None and getattr(args, "budget", 1) <= 0:
        parser.error("--budget must be positive")
    if getattr(args, "max_rank", 1) is not None and getattr(args, "max_rank", 1) <= 0:
        parser.error("--max-rank must be positive")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RepresentationInfinite as exc:
        print(f"representation-infinite: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"band: {exc.witness}" if not isinstance(exc.witness, str) else f"witness: {exc.witness}")
        return EXIT_INFINITE
    except NotTwoNakayama as exc:
        print(f"not right 2-Nakayama: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except UnsupportedAlgebra as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
