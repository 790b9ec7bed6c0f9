"""Command-line interface: ``tamv <subcommand> ...`` (or ``python -m tamv``).

Exit status is 0 on success, 1 when a check or count fails, 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import deque

from . import harness
from .bijections import ballot_from_tree, dualize, tam_class_of_ballot, tree_from_pair
from .errors import TamariError
from .paths import check_path, lex_key, rational_base_path, tam_covers
from .poset import MAX_TREE_SIZE, build_tam_poset
from .trees import canopy, complete, format_tree, pair_paths, parse_tree, tree_to_json

CHECK_DEFAULTS = {
    "lattice": [7],
    "duality": [7],
    "partition": [4],
    "lemmas": [9],
    "m-equiv": [2, 3],
}


class UsageError(Exception):
    pass


def path_arg(text: str) -> str:
    try:
        return check_path(text.upper())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def bottom_up(v: str, elements: list[str]) -> list[str]:
    """Elements by cover distance from the minimum ``v``, lexicographic within a layer."""
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in tam_covers(u, v):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return sorted(elements, key=lambda u: (dist[u], lex_key(u)))


def _emit(args, text_lines, payload=None):
    if args.json and payload is not None:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_elements(args):
    P = build_tam_poset(args.v)
    elems = bottom_up(args.v, P.elements)
    _emit(args, elems, {"v": args.v, "elements": elems})


def cmd_covers(args):
    covers = tam_covers(args.u, args.v)
    _emit(args, covers, {"v": args.v, "u": args.u, "covers": covers})


def cmd_hasse(args):
    P = build_tam_poset(args.v)
    if args.dot:
        sys.stdout.write(P.to_dot(name="tam"))
    else:
        print(P.to_json())


def cmd_meet_join(args):
    P = build_tam_poset(args.v)
    for p in (args.x, args.y):
        if p not in P.index:
            raise TamariError(f"{p!r} is not an element of Tam({args.v})")
    result = P.meet(args.x, args.y) if args.command == "meet" else P.join(args.x, args.y)
    _emit(args, [result], {"v": args.v, args.command: result})


def cmd_check(args):
    bounds = list(args.bounds) or list(CHECK_DEFAULTS[args.what])
    if args.max_size is not None:
        bounds[0] = args.max_size
    name = args.what
    if name == "lattice":
        out = harness.verify_lattice(bounds[0], workers=args.workers)
    elif name == "duality":
        out = harness.verify_duality(bounds[0], workers=args.workers)
    elif name == "partition":
        if bounds[0] > MAX_TREE_SIZE:
            raise UsageError(f"partition size {bounds[0]} exceeds {MAX_TREE_SIZE}")
        out = harness.verify_partition(bounds[0])
    elif name == "lemmas":
        out = harness.verify_lemmas(bounds[0], monotone_max=min(bounds[0], MAX_TREE_SIZE))
    else:
        if len(bounds) != 2:
            raise UsageError("m-equiv takes two bounds: m n")
        out = harness.verify_m_equivalence(*bounds)
    if args.json:
        print(out.to_json())
    else:
        status = "pass" if out.passed else "FAIL"
        extras = [f"{k}={v}" for k, v in {**out.params, **out.details}.items()]
        if out.counterexample:
            extras.append(f"witness={out.counterexample}")
        print(" ".join([status, name, *extras]))
    return 0 if out.passed else 1


def cmd_intervals(args):
    n = build_tam_poset(args.v).intervals_count()
    _emit(args, [str(n)], {"v": args.v, "intervals": n})


def cmd_intervals_all(args):
    vs = harness.words(args.n)
    total = 0
    rows = []
    if args.workers > 1:
        counts = harness._pmap(harness.tam_intervals, vs, args.workers)
    else:
        counts = map(harness.tam_intervals, vs)
    for v, c in zip(vs, counts):
        total += c
        rows.append({"v": v, "intervals": c})
        if not args.json:
            print(f"{v or '-'} {c}", flush=True)
    if args.json:
        print(json.dumps({"n": args.n, "rows": rows, "total": total}))
    else:
        print(f"total {total}")


def cmd_count(args):
    if args.tamari is not None:
        rep = harness.count_tamari(args.tamari)
    elif args.m_tamari is not None:
        rep = harness.count_m_tamari(*args.m_tamari)
    elif args.labelled is not None:
        rep = harness.count_labelled(*args.labelled)
    else:
        rep = harness.count_total(args.total, workers=args.workers)
    if args.json:
        print(json.dumps(rep.to_dict()))
    else:
        status = "pass" if rep.matched else "FAIL"
        print(f"{status} {rep.context} brute={rep.brute_count} formula={rep.formula_value}")
    return 0 if rep.matched else 1


def _tree(text):
    tree = parse_tree(text)
    if tree is None:
        raise TamariError("the empty tree is not allowed here")
    return tree


def cmd_biject(args):
    if args.kind == "tree-to-pair":
        (text,) = _arity(args, 1)
        u, v = pair_paths(_tree(text))
        _emit(args, [u, v], {"u": u, "v": v})
    elif args.kind == "pair-to-tree":
        u, v = (check_path(a.upper()) for a in _arity(args, 2))
        tree = tree_from_pair(u, v)
        _emit(args, [format_tree(tree)], tree_to_json(tree))
    elif args.kind == "ballot":
        (text,) = _arity(args, 1)
        d = ballot_from_tree(complete(_tree(text)))
        _emit(args, [d], {"ballot": d})
    else:
        (d,) = _arity(args, 1)
        v, u = tam_class_of_ballot(check_path(d.upper()))
        _emit(args, [v, u], {"v": v, "u": u})


def _arity(args, k):
    if len(args.operands) != k:
        raise UsageError(f"biject {args.kind} takes {k} operand(s)")
    return args.operands


def cmd_canopy(args):
    c = canopy(_tree(args.tree))
    _emit(args, [c], {"canopy": c})


def cmd_rational(args):
    p = rational_base_path(args.a, args.b)
    _emit(args, [p], {"a": args.a, "b": args.b, "path": p})


def cmd_dualize(args):
    d = dualize(args.u, args.v)
    _emit(args, [d], {"v": args.v, "u": args.u, "dual": d})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--workers", type=int, default=1, metavar="K")
    common.add_argument("--max-size", type=int, default=None, metavar="K")

    parser = argparse.ArgumentParser(prog="tamv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("elements", parents=[common], help="list Tam(v) bottom-up")
    p.add_argument("v", type=path_arg)
    p.set_defaults(func=cmd_elements)

    p = sub.add_parser("covers", parents=[common], help="upper covers of u in Tam(v)")
    p.add_argument("v", type=path_arg)
    p.add_argument("u", type=path_arg)
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("hasse", help="Hasse diagram of Tam(v)")
    p.add_argument("v", type=path_arg)
    fmt = p.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hasse)

    for name in ("meet", "join"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of x and y in Tam(v)")
        p.add_argument("v", type=path_arg)
        p.add_argument("x", type=path_arg)
        p.add_argument("y", type=path_arg)
        p.set_defaults(func=cmd_meet_join)

    p = sub.add_parser("check", parents=[common], help="exhaustive structural checks")
    p.add_argument("what", choices=sorted(CHECK_DEFAULTS))
    p.add_argument("bounds", type=int, nargs="*")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("intervals", parents=[common], help="number of intervals of Tam(v)")
    p.add_argument("v", type=path_arg)
    p.set_defaults(func=cmd_intervals)

    p = sub.add_parser("intervals-all", parents=[common], help="intervals of Tam(v) for all |v| = n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_intervals_all)

    p = sub.add_parser("count", parents=[common], help="brute-force count vs closed formula")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--tamari", type=int, metavar="N")
    which.add_argument("--m-tamari", type=int, nargs=2, metavar=("M", "N"))
    which.add_argument("--labelled", type=int, nargs=2, metavar=("M", "N"))
    which.add_argument("--total", type=int, metavar="N")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("biject", parents=[common], help="tree/path bijections")
    p.add_argument("kind", choices=["tree-to-pair", "pair-to-tree", "ballot", "class"])
    p.add_argument("operands", nargs="+")
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("canopy", parents=[common], help="canopy of a binary tree")
    p.add_argument("tree")
    p.set_defaults(func=cmd_canopy)

    p = sub.add_parser("rational", parents=[common], help="base path of the (a, b) rational case")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_rational)

    p = sub.add_parser("dualize", parents=[common], help="image of u in Tam(reverse_complement(v))")
    p.add_argument("v", type=path_arg)
    p.add_argument("u", type=path_arg)
    p.set_defaults(func=cmd_dualize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args) or 0
    except UsageError as exc:
        parser.error(str(exc))
    except (TamariError, ValueError) as exc:
        shown = " ".join(argv if argv is not None else sys.argv[1:])
        print(f"tamv: error: {exc} (input: {shown})", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
