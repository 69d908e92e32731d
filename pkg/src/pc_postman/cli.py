"""Command line entry point ``pc-postman``.

Exit codes: 0 success / feasible, 1 infeasible or invalid (a legitimate
answer), 2 bad input or unsupported request, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import InvariantError, PostmanError
from .euler import ClosedWalk, pc_euler_trail, verify_closed_pc_walk
from .formats import emit_instance, emit_solution, emit_walk, format_weight, read_instance, read_walk
from .generate import MODES, GeneratorConfig, generate
from .graph import is_color_balanced
from .oracle import oracle_cpp, oracle_euler, oracle_fev_trail, oracle_trail_connected
from .solver import check_feasible, solve

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _witness(w):
    return None if w is None else [w[0] + 1, w[1] + 1]


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _status(g):
    bal = is_color_balanced(g)
    feas = check_feasible(g)
    return bal, feas


def cmd_check(args) -> int:
    g = read_instance(args.instance)
    bal, feas = _status(g)
    if args.format == "json":
        _emit_json({"balanced": bal.balanced, "trailConnected": feas.trail_connected,
                    "feasible": feas.feasible, "weight": None,
                    "witness": _witness(feas.witness)})
    else:
        tc = _yn(feas.trail_connected)
        if feas.witness:
            tc += f" (witness arcs {feas.witness[0] + 1}→{feas.witness[1] + 1})"
        print(f"balanced: {_yn(bal.balanced)}, trail-connected: {tc}, "
              f"feasible: {_yn(feas.feasible)}")
        if feas.local is not None:
            print(f"necessary conditions: {'ok' if feas.local.ok else 'failed'} "
                  f"({feas.local.diagnostic})")
    return EXIT_OK if feas.feasible else EXIT_INFEASIBLE


def cmd_euler(args) -> int:
    g = read_instance(args.instance)
    bal, feas = _status(g)
    if g.color_count == 2:
        walk = pc_euler_trail(g)
        method = "characterization"
    else:
        ids = oracle_euler(g)
        walk = None if ids is None else ClosedWalk(tuple(ids), g.weight_of(ids))
        method = "exhaustive search"
    if args.format == "json":
        _emit_json({"balanced": bal.balanced, "trailConnected": feas.trail_connected,
                    "feasible": walk is not None,
                    "weight": None if walk is None else format_weight(walk.weight),
                    "witness": _witness(feas.witness),
                    "walk": None if walk is None else [k + 1 for k in walk.arc_ids]})
    elif walk is None:
        print("INFEASIBLE")
        print(f"balanced: {_yn(bal.balanced)}, trail-connected: "
              f"{_yn(feas.trail_connected)}, PC Euler: no ({method})")
    else:
        sys.stdout.write(emit_walk(walk))
    return EXIT_OK if walk is not None else EXIT_INFEASIBLE


def cmd_solve(args) -> int:
    g = read_instance(args.instance)
    sol = solve(g, threads=args.threads)
    if sol is None:
        feas = check_feasible(g)
        if args.format == "json":
            _emit_json({"balanced": is_color_balanced(g).balanced,
                        "trailConnected": feas.trail_connected, "feasible": False,
                        "weight": None, "witness": _witness(feas.witness)})
        else:
            print("INFEASIBLE")
            if feas.witness:
                print(f"no PC trail from arc {feas.witness[0] + 1} to arc {feas.witness[1] + 1}")
        return EXIT_INFEASIBLE
    if args.format == "json":
        _emit_json({"balanced": is_color_balanced(g).balanced, "trailConnected": True,
                    "feasible": True, "weight": format_weight(sol.total_weight),
                    "witness": None, "walk": [k + 1 for k in sol.walk.arc_ids],
                    "duplicated": {str(k + 1): n for k, n in sorted(sol.duplicated.items())}})
    else:
        sys.stdout.write(emit_solution(sol))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_instance(args.instance)
    walk = read_walk(args.walk, g)
    report = verify_closed_pc_walk(g, walk.arc_ids, require_cover_all=not args.no_cover,
                                   require_trail=args.trail, claimed_weight=walk.weight)
    if report.valid:
        print("VALID")
        return EXIT_OK
    print("INVALID")
    for v in report.violations:
        print(f"  {v}")
    return EXIT_INFEASIBLE


def _weights(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi or lo)


def cmd_gen(args) -> int:
    cfg = GeneratorConfig(mode=args.mode, n=args.n, m=args.m, c=args.c,
                          weight_range=args.weights, seed=args.seed, trails=args.trails,
                          duplicates=args.duplicates, petals=args.petals)
    g = generate(cfg)
    text = emit_instance(g, comment=f"generated: mode={cfg.mode} seed={cfg.seed}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _colors(text):
    return None if text is None else [int(t) for t in text.split(",") if t]


def cmd_oracle(args) -> int:
    g = read_instance(args.instance)
    if args.which == "cpp":
        res = oracle_cpp(g)
        if res is None:
            print("INFEASIBLE")
            return EXIT_INFEASIBLE
        w, ids = res
        sys.stdout.write(emit_walk(ClosedWalk(tuple(ids), w)))
    elif args.which == "euler":
        ids = oracle_euler(g)
        if ids is None:
            print("INFEASIBLE")
            return EXIT_INFEASIBLE
        sys.stdout.write(emit_walk(ClosedWalk(tuple(ids), g.weight_of(ids))))
    elif args.which == "trail-connected":
        ok = oracle_trail_connected(g)
        print(f"trail-connected: {_yn(ok)}")
        return EXIT_OK if ok else EXIT_INFEASIBLE
    else:
        res = oracle_fev_trail(g, args.s - 1, args.t - 1, _colors(args.start_colors),
                               _colors(args.end_colors))
        if res is None:
            print("NONE")
            return EXIT_INFEASIBLE
        w, ids = res
        print(f"t {format_weight(w)} {len(ids)}")
        print(" ".join(str(k + 1) for k in ids))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pc-postman",
                                description="Chinese Postman on arc-colored digraphs")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    for name, func, helptext in (("check", cmd_check, "balance / trail-connectivity report"),
                                 ("euler", cmd_euler, "PC Euler trail or INFEASIBLE"),
                                 ("solve", cmd_solve, "optimal covering PC closed walk")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("instance")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(func=func)
        if name == "solve":
            sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("verify", help="check a walk against an instance")
    sp.add_argument("instance")
    sp.add_argument("walk")
    sp.add_argument("--trail", action="store_true", help="also forbid repeated arcs")
    sp.add_argument("--no-cover", action="store_true", help="do not require full coverage")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="write a generated instance")
    sp.add_argument("--mode", choices=MODES, default="uniform")
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--m", type=int, default=8)
    sp.add_argument("--c", type=int, default=2)
    sp.add_argument("--weights", type=_weights, default=(1, 10), metavar="LO:HI")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trails", type=int, default=2)
    sp.add_argument("--duplicates", type=int, default=0)
    sp.add_argument("--petals", type=int, default=3)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("oracle", help="exhaustive reference solvers (small instances)")
    sp.add_argument("which", choices=("cpp", "euler", "trail-connected", "fev"))
    sp.add_argument("instance")
    sp.add_argument("--s", type=int, default=1, help="fev: start vertex (1-based)")
    sp.add_argument("--t", type=int, default=1, help="fev: end vertex (1-based)")
    sp.add_argument("--start-colors", help="fev: comma-separated colors")
    sp.add_argument("--end-colors", help="fev: comma-separated colors")
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (PostmanError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
