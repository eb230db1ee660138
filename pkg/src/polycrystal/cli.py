"""``polycrystal`` command line.

Exit codes: 0 success, 1 invalid input, 2 verification mismatch,
3 budget exhausted under ``--strict``.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import character as ch
from .config import ConfigError, ProblemConfig, load_config
from .crystal import ZVector, crystal_edges, demazure_crystal, enumerate_image, padded
from .extremal import extremal_oracle, solve_extremal
from .polyhedral import box_from_points, enumerate_truncated, format_form, generate_Xi_lambda

OK, INVALID, MISMATCH, EXHAUSTED = 0, 1, 2, 3


def _tuple(x: ZVector, width: int, paper_order: bool) -> list[int]:
    row = list(padded(x, width))
    return row[::-1] if paper_order else row


def _fmt(row: list[int]) -> str:
    return "(" + ", ".join(str(v) for v in row) + ")"


def _emit(args, text_lines: list[str], payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


def cmd_validate(cfg: ProblemConfig, args) -> int:
    _emit(args, ["ok"], {"ok": True})
    return OK


def cmd_demazure(cfg: ProblemConfig, args) -> int:
    ctx = cfg.context()
    points = demazure_crystal(ctx, cfg.word)
    width = max(len(cfg.word), max(len(p) for p in points))
    rows = [(_tuple(p, width, args.paper_order), ctx.wt(p).c) for p in points]
    lines = [f"word: {cfg.word.display()}  letters {list(cfg.word.letters)}",
             f"|B_w(lambda)| = {len(points)}"]
    lines += [f"{_fmt(r)}  wt = {ch.format_offset(c)}" for r, c in rows]
    payload = {"word": list(cfg.word.letters), "size": len(points), "paper_order": args.paper_order,
               "elements": [{"x": r, "wt_offset": list(c)} for r, c in rows]}
    _emit(args, lines, payload)
    return OK


def cmd_extremal(cfg: ProblemConfig, args) -> int:
    x = solve_extremal(cfg.cartan, cfg.iota, cfg.lam, cfg.word)
    width = max(len(cfg.word), len(x))
    row = _tuple(x, width, args.paper_order)
    lines = [f"x_w = {_fmt(row)}"]
    payload = {"word": list(cfg.word.letters), "x": row, "paper_order": args.paper_order}
    code = OK
    if args.oracle:
        y = extremal_oracle(cfg.cartan, cfg.iota, cfg.lam, cfg.word)
        match = x == y
        lines.append(f"oracle: {_fmt(_tuple(y, width, args.paper_order))} {'match' if match else 'MISMATCH'}")
        payload["oracle"] = {"x": _tuple(y, width, args.paper_order), "match": match}
        code = OK if match else MISMATCH
    _emit(args, lines, payload)
    return code


def cmd_polytope(cfg: ProblemConfig, args) -> int:
    b = cfg.budgets
    xi = generate_Xi_lambda(cfg.iota, cfg.cartan, cfg.lam, b.var_cutoff, b.count_cutoff)
    ample = all(phi.const >= 0 for phi in xi)
    verdict = f"ample: {str(ample).lower()}" + ("" if xi.closed else " (up to cutoff)")
    lines = [xi.status(), verdict] + [format_form(phi) for phi in xi]
    payload = {"closed": xi.closed, "var_cutoff": b.var_cutoff, "count_cutoff": b.count_cutoff,
               "ample": ample, "forms": [format_form(phi) for phi in xi]}
    code = OK
    if not xi.closed and args.strict:
        code = EXHAUSTED
    if args.verify:
        ctx = cfg.context()
        if cfg.word.letters:
            reference, complete = demazure_crystal(ctx, cfg.word), True
            L = len(cfg.word)
        else:
            full = enumerate_image(ctx, b.max_elements, b.max_depth)
            reference, complete = full.points, full.complete
            L = max((len(p) for p in reference), default=0)
        points = enumerate_truncated(xi, L, box_from_points(reference, L))
        match = points == reference
        label = "match" if match else "MISMATCH"
        lines.append(f"{label}: {len(points)} points" + ("" if match else f" vs {len(reference)} by BFS"))
        if not complete:
            lines.append("BFS incomplete: budget exhausted")
        payload["verify"] = {"match": match, "points": len(points), "reference": len(reference),
                             "complete": complete}
        if not match:
            code = MISMATCH
        elif not complete and args.strict:
            code = EXHAUSTED
    _emit(args, lines, payload)
    return code


def cmd_character(cfg: ProblemConfig, args) -> int:
    ctx = cfg.context()
    points = demazure_crystal(ctx, cfg.word)
    crystal_side = ch.character_of(ctx, points)
    operator_side = ch.demazure_D_w(cfg.cartan, cfg.word, ch.Character.highest(cfg.lam))
    equal = crystal_side == operator_side
    lines = [f"ch(B_w(lambda)) = {ch.format_character(crystal_side)}",
             f"D_w(e^lambda)   = {ch.format_character(operator_side)}",
             "EQUAL" if equal else "DIFFER"]
    payload = {"crystal": [[list(c), v] for c, v in crystal_side.items()],
               "operator": [[list(c), v] for c, v in operator_side.items()],
               "equal": equal}
    _emit(args, lines, payload)
    return OK if equal else MISMATCH


def cmd_graph(cfg: ProblemConfig, args) -> int:
    ctx = cfg.context()
    complete = True
    if args.full:
        full = enumerate_image(ctx, cfg.budgets.max_elements, cfg.budgets.max_depth)
        points, complete = full.points, full.complete
    else:
        points = demazure_crystal(ctx, cfg.word)
    width = max((len(p) for p in points), default=0)
    ids = {p: n for n, p in enumerate(points)}
    edges = crystal_edges(ctx, points)
    if args.format == "json":
        payload = {"nodes": [_tuple(p, width, args.paper_order) for p in points],
                   "edges": [[ids[s], ids[t], i] for s, i, t in edges], "complete": complete}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        out = ["digraph crystal {"]
        for p in points:
            out.append(f'  n{ids[p]} [label="{_fmt(_tuple(p, width, args.paper_order))}"];')
        for s, i, t in edges:
            out.append(f'  n{ids[s]} -> n{ids[t]} [label="{i}"];')
        out.append("}")
        print("\n".join(out))
    return EXHAUSTED if (args.strict and not complete) else OK


COMMANDS = {
    "validate": cmd_validate,
    "demazure": cmd_demazure,
    "extremal": cmd_extremal,
    "polytope": cmd_polytope,
    "character": cmd_character,
    "graph": cmd_graph,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="JSON problem description")
    common.add_argument("--paper-order", action="store_true", help="print tuples as (..., x_2, x_1)")
    common.add_argument("--verify", action="store_true", help="cross-check lattice points against BFS")
    common.add_argument("--oracle", action="store_true", help="also run the f_max recursion")
    common.add_argument("--strict", action="store_true", help="exit 3 when a budget is exhausted")
    common.add_argument("--format", choices=("text", "json", "dot"), default=None)
    parser = argparse.ArgumentParser(prog="polycrystal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "graph":
            p.add_argument("--full", action="store_true", help="whole B(lambda) instead of B_w(lambda)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "dot" if args.command == "graph" else "text"
    if args.format == "dot" and args.command != "graph":
        print("error: --format dot is only available for 'graph'", file=sys.stderr)
        return INVALID
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        for p in exc.problems:
            print(f"error: {p}", file=sys.stderr)
        return INVALID
    args.paper_order = args.paper_order or cfg.paper_order
    return COMMANDS[args.command](cfg, args)


if __name__ == "__main__":
    sys.exit(main())
