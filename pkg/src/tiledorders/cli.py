"""Command-line frontend: order files in, text / DOT / JSON out.

Order files are JSON objects with the single key "alpha" holding the square
integer matrix; "-" reads from stdin.  All indices in input and output are
1-based.  Exit codes: 0 for an answered question (including negative answers
where the command defines them), 1 for axiom violations / size guards /
"not isomorphic", 2 for file, parse and usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import (
    MalformedSyntax,
    OutOfRange,
    RepeatedElement,
    TiledOrderError,
    TooLarge,
)
from .exponent import ExponentMatrix, hereditary_order, validate
from .lifting import (
    SEMIDIRECT_STRUCTURE,
    LiftableGroup,
    MonomialLift,
    StructureReport,
    aut_structure_report,
    first_inconsistent_pair,
    lift_matrix,
    orders_isomorphic,
    preserves_valuation,
    solve_lift_system,
)
from .perm import is_automorphism, parse_perm
from .quiver import link_graph, valued_quiver


class OrderFileError(ValueError):
    """Structural problem with an order file (bad JSON, keys or entry types)."""


def load_order_rows(path: str) -> list[list[int]]:
    """Read an order file (or stdin for "-") and return the raw matrix."""
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise OrderFileError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OrderFileError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise OrderFileError("order file must be a JSON object")
    if set(doc) != {"alpha"}:
        raise OrderFileError('order file must have exactly the key "alpha"')
    rows = doc["alpha"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise OrderFileError('"alpha" must be a list of rows')
    for r in rows:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool):
                raise OrderFileError(f'"alpha" entries must be integers, got {v!r}')
    return rows


def order_to_json(a: ExponentMatrix) -> str:
    return json.dumps({"alpha": [list(row) for row in a.alpha]}, separators=(",", ": "))


def _fmt_vector(x: Sequence[int]) -> str:
    return "(" + ", ".join(str(v) for v in x) + ")"


def _matrix_lines(lift: MonomialLift, symbol: str) -> list[str]:
    return ["[" + " ".join(row) + "]" for row in lift_matrix(lift, symbol=symbol)]


def _group_flavor(g: LiftableGroup) -> str:
    if g.is_cyclic:
        return "cyclic"
    if g.is_abelian:
        return "abelian"
    return "nonabelian"


def cmd_validate(args: argparse.Namespace) -> int:
    a = validate(load_order_rows(args.path))
    print(f"valid, n={a.n}")
    return 0


def cmd_quiver(args: argparse.Namespace) -> int:
    a = validate(load_order_rows(args.path))
    if args.valued:
        vq = valued_quiver(a)
        arrows = [(i, j, vq.value[(i, j)]) for i, j in vq.quiver.sorted_arrows()]
    else:
        arrows = [(i, j, None) for i, j in link_graph(a).sorted_arrows()]
    if args.dot:
        print("digraph Q {")
        for v in range(1, a.n + 1):
            print(f"  {v};")
        for i, j, v in arrows:
            label = f' [label="v={v}"]' if v is not None else ""
            print(f"  {i} -> {j}{label};")
        print("}")
    else:
        for i, j, v in arrows:
            suffix = f" [v={v}]" if v is not None else ""
            print(f"{i} -> {j}{suffix}")
    return 0


def cmd_lift(args: argparse.Namespace) -> int:
    a = validate(load_order_rows(args.path))
    sigma = parse_perm(args.perm, a.n)
    symbol = "π" if args.unicode else "pi"
    member = is_automorphism(link_graph(a), sigma)
    print(f"quiver automorphism: {'yes' if member else 'no'}")
    x = solve_lift_system(a, sigma)
    if x is None:
        i, j = first_inconsistent_pair(a, sigma)
        print(f"not liftable: first inconsistent ordered pair ({i}, {j})")
        return 0
    print(f"liftable: x = {_fmt_vector(x.x)}")
    print("lift matrix:")
    for line in _matrix_lines(MonomialLift.for_order(a, sigma, x.x), symbol):
        print(line)
    if member:
        keeps = preserves_valuation(a, sigma)
        print(f"valuation-preserving: {'yes' if keeps else 'no'}")
    return 0


def cmd_group(args: argparse.Namespace) -> int:
    a = validate(load_order_rows(args.path))
    report = aut_structure_report(a, max_n=args.max_n, workers=args.workers)
    symbol = "π" if args.unicode else "pi"
    g = report.group
    print(f"|Aut(Q)|={report.aut_q_order}, |O_Lambda|={g.order}, {_group_flavor(g)}")
    print(f"all liftable: {'yes' if report.all_liftable else 'no'}")
    for gen in g.generators:
        print(f"generator: {gen.sigma.cycle_string()}, x = {_fmt_vector(gen.x.x)}")
        for line in _matrix_lines(gen, symbol):
            print(line)
    return 0


def build_report_document(report: StructureReport) -> dict:
    """The JSON-facing document; generators are re-verified before emission."""
    a = report.group.order_matrix
    for gen in report.group.generators:
        if not gen.verify(a):
            raise RuntimeError("generator failed conjugation re-verification")
    return {
        "n": report.n,
        "valid": report.valid,
        "basic": report.basic,
        "zero_one": report.zero_one,
        "quiver": [[i, j] for i, j in report.quiver.sorted_arrows()],
        "valued_arrows": [
            [i, j, report.valued.value[(i, j)]]
            for i, j in report.quiver.sorted_arrows()
        ],
        "aut_q_order": report.aut_q_order,
        "o_lambda_order": report.group.order,
        "all_liftable": report.all_liftable,
        "generators": [
            {"perm": list(gen.sigma.image), "x": list(gen.x.x)}
            for gen in report.group.generators
        ],
        "structure": SEMIDIRECT_STRUCTURE,
    }


def cmd_report(args: argparse.Namespace) -> int:
    a = validate(load_order_rows(args.path))
    report = aut_structure_report(a, max_n=args.max_n, workers=args.workers)
    if args.json:
        doc = build_report_document(report)
        print(json.dumps(doc, sort_keys=True, separators=(",", ": ")))
        return 0
    symbol = "π" if args.unicode else "pi"
    g = report.group
    print(f"n = {report.n}")
    print("valid: yes")
    print(f"basic: {'yes' if report.basic else 'no'}")
    print(f"zero-one: {'yes' if report.zero_one else 'no'}")
    print("arrows:")
    for i, j in report.quiver.sorted_arrows():
        print(f"{i} -> {j} [v={report.valued.value[(i, j)]}]")
    print(f"|Aut(Q)| = {report.aut_q_order}")
    print(f"|O_Lambda| = {g.order}")
    print(f"all liftable: {'yes' if report.all_liftable else 'no'}")
    print(f"cyclic: {'yes' if g.is_cyclic else 'no'}")
    print(f"abelian: {'yes' if g.is_abelian else 'no'}")
    print(f"structure: {SEMIDIRECT_STRUCTURE}")
    print("generators:")
    for gen in g.generators:
        print(f"{gen.sigma.cycle_string()}, x = {_fmt_vector(gen.x.x)}")
        for line in _matrix_lines(gen, symbol):
            print(line)
    return 0


def cmd_iso(args: argparse.Namespace) -> int:
    # Contract: 0 isomorphic, 1 not isomorphic, 2 for every kind of error
    # (bad files, invalid orders, size mismatch, size guard).
    try:
        a = validate(load_order_rows(args.path_a))
        b = validate(load_order_rows(args.path_b))
        if a.n != b.n:
            raise OrderFileError(f"orders have different sizes: {a.n} vs {b.n}")
        witness = orders_isomorphic(a, b, max_n=args.max_n)
    except (TiledOrderError, OrderFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if witness is None:
        print("not isomorphic")
        return 1
    sigma, x = witness
    print(f"isomorphic: sigma = {sigma.cycle_string()}, x = {_fmt_vector(x.x)}")
    return 0


def cmd_hereditary(args: argparse.Namespace) -> int:
    print(order_to_json(hereditary_order(args.n)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tiledorders",
        description="Tiled orders given by exponent matrices: quivers, lifts, groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the order axioms of a file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("quiver", help="print the link graph")
    p.add_argument("path")
    p.add_argument("--valued", action="store_true", help="attach arrow values")
    p.add_argument("--dot", action="store_true", help="emit a DOT digraph")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("lift", help="test liftability of one permutation")
    p.add_argument("path")
    p.add_argument("--perm", required=True, metavar="TEXT",
                   help='cycle notation "(1 2 3)" or one-line "[2,3,1]"')
    p.add_argument("--unicode", action="store_true", help="render pi as a Greek letter")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("group", help="compute the monomial-lift group")
    p.add_argument("path")
    p.add_argument("--max-n", type=int, default=9, dest="max_n")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--unicode", action="store_true")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("report", help="full structure report (text or JSON)")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-n", type=int, default=9, dest="max_n")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--unicode", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("iso", help="decide conjugacy of two orders")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--max-n", type=int, default=9, dest="max_n")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("hereditary", help="emit the triangular hereditary order")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_hereditary)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}; raise --max-n to allow larger orders", file=sys.stderr)
        return 1
    except TiledOrderError as exc:
        # Axiom violations answer "invalid" (exit 1); parse-level permutation
        # and range errors are usage problems (exit 2).
        if isinstance(exc, (MalformedSyntax, OutOfRange, RepeatedElement)):
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(str(exc))
        return 1
    except OrderFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
