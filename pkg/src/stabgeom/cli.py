"""Command-line front end with a stable JSON contract.

Exit codes: 0 on success, 1 when a checking command reaches a negative
mathematical verdict (an equivalence mismatch, a failed verification),
2 on usage, schema, or input errors. Rationals are always serialized as
strings "p/q" (integers as "p"); output bytes are deterministic for a
fixed input and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cohsys import (
    SystemType,
    alpha_semistable_config,
    alpha_stable_config,
    critical_values,
    destabilizing_example_config,
    equivalence_check,
    subsystem_types_from_config,
)
from .errors import FrameDegenerateError
from .exactgeom import PointConfiguration, format_scalar, parse_scalar
from .gale import gale_transform, is_self_associated
from .gitstab import classify, worst_subspace
from .modhyp import duality_check, incidence_15_3
from .verify import check_igusa, check_segre_nodes, run_all

__all__ = ["main"]


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _fail(exc: BaseException) -> int:
    payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    print(json.dumps(payload, indent=2), file=sys.stderr)
    return 2


def _load_config(path: str) -> PointConfiguration:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    return PointConfiguration.from_json_dict(data)


def _cmd_git_classify(args: argparse.Namespace) -> int:
    config = _load_config(args.input)
    g = parse_scalar(args.g)
    verdict = classify(config, g)
    try:
        _, margin = worst_subspace(config, g)
        margin_str = format_scalar(margin)
    except ValueError:
        # ambient rank 1: no proper subspace exists
        margin_str = None
    _emit(
        {
            "class": verdict.classification.value,
            "witness": verdict.witness.to_json() if verdict.witness else None,
            "margin": margin_str,
        }
    )
    return 0


def _cmd_critical_values(args: argparse.Namespace) -> int:
    walls = critical_values(
        SystemType(args.r, args.d, args.k),
        degree_bound=args.degree_bound,
        section_bound=args.section_bound,
    )
    _emit({"values": [format_scalar(v) for v in walls.values]})
    return 0


def _cmd_alpha_check(args: argparse.Namespace) -> int:
    config = _load_config(args.input)
    g = parse_scalar(args.g)
    alpha = parse_scalar(args.alpha)
    _emit(
        {
            "g": format_scalar(g),
            "alpha": format_scalar(alpha),
            "semistable": alpha_semistable_config(config, g, alpha),
            "stable": alpha_stable_config(config, g, alpha),
            "subsystem_types": [
                {"r": t.r, "d": t.d, "k": t.k}
                for t in subsystem_types_from_config(config)
            ],
        }
    )
    return 0


def _cmd_equivalence(args: argparse.Namespace) -> int:
    config = _load_config(args.input)
    report = equivalence_check(config, parse_scalar(args.g))
    payload = report.to_json()
    payload["witness"] = report.git.witness.to_json() if report.git.witness else None
    _emit(payload)
    return 0 if report.agree else 1


def _cmd_destable_example(args: argparse.Namespace) -> int:
    lambdas = None
    if args.lambdas is not None:
        lambdas = [parse_scalar(part) for part in args.lambdas.split(",")]
    config = destabilizing_example_config(args.genus, lambdas)
    _emit(config.to_json_dict())
    return 0


def _cmd_gale(args: argparse.Namespace) -> int:
    config = _load_config(args.input)
    data = gale_transform(config, seed=args.seed)
    payload = data.to_json()
    try:
        payload["self_associated"] = is_self_associated(config, seed=args.seed)
    except FrameDegenerateError:
        # transform exists but the frame comparison is undefined
        payload["self_associated"] = None
    _emit(payload)
    return 0


def _cmd_hypersurface_verify(args: argparse.Namespace) -> int:
    if args.target == "segre":
        search = 10_000 if args.samples is None else args.samples
        result = check_segre_nodes(search, args.seed)
        _emit(result.to_json())
        return 0 if result.passed else 1
    if args.target == "igusa":
        result = check_igusa()
        _emit(result.to_json())
        return 0 if result.passed else 1
    samples = 200 if args.samples is None else args.samples
    report = duality_check(samples, args.seed)
    _emit(report.to_json())
    return 0 if report.passed else 1


def _cmd_incidence(args: argparse.Namespace) -> int:
    structure = incidence_15_3()
    points = [list(p) for p in structure.points]
    lines = [[list(pair) for pair in m] for m in structure.lines]
    flags = sorted(
        (structure.points.index(p), structure.lines.index(l))
        for p, l in structure.flags
    )
    _emit(
        {
            "points": points,
            "lines": lines,
            "flags": [list(f) for f in flags],
            "point_degree": 3,
            "line_degree": 3,
        }
    )
    return 0


def _cmd_verify_all(args: argparse.Namespace) -> int:
    report = run_all(samples=args.samples, seed=args.seed)
    _emit(report.to_json())
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stab",
        description="Exact stability, Gale, and hypersurface computations "
        "for point configurations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("git-classify", help="span-criterion stability class")
    p.add_argument("--g", required=True, help="positive rational weight, e.g. 2 or 5/2")
    p.add_argument("--input", required=True, help="configuration JSON file, or - for stdin")
    p.set_defaults(func=_cmd_git_classify)

    p = sub.add_parser("critical-values", help="walls for a system type")
    p.add_argument("-r", type=int, required=True, help="rank")
    p.add_argument("-d", type=int, required=True, help="degree")
    p.add_argument("-k", type=int, required=True, help="section count")
    p.add_argument("--degree-bound", type=int, default=None, help="override d' upper bound")
    p.add_argument("--section-bound", type=int, default=None, help="override k' upper bound")
    p.set_defaults(func=_cmd_critical_values)

    p = sub.add_parser("alpha-check", help="alpha-(semi)stability of a configuration")
    p.add_argument("--g", required=True, help="positive integer weight")
    p.add_argument("--alpha", required=True, help="positive rational parameter")
    p.add_argument("--input", required=True, help="configuration JSON file, or - for stdin")
    p.set_defaults(func=_cmd_alpha_check)

    p = sub.add_parser(
        "equivalence",
        help="compare the span criterion with the alpha test past the threshold",
    )
    p.add_argument("--g", required=True, help="positive integer weight")
    p.add_argument("--input", required=True, help="configuration JSON file, or - for stdin")
    p.set_defaults(func=_cmd_equivalence)

    p = sub.add_parser("destable-example", help="emit the stable line configuration")
    p.add_argument("--genus", type=int, required=True, help="weight g >= 2")
    p.add_argument(
        "--lambdas",
        default=None,
        help="comma-separated nonzero distinct rationals, g+1 of them",
    )
    p.set_defaults(func=_cmd_destable_example)

    p = sub.add_parser("gale", help="Gale transform and self-association test")
    p.add_argument("--input", required=True, help="configuration JSON file, or - for stdin")
    p.add_argument("--seed", type=int, default=0, help="seed for basis recombination")
    p.set_defaults(func=_cmd_gale)

    p = sub.add_parser("hypersurface", help="cubic/quartic verification commands")
    hsub = p.add_subparsers(dest="hypersurface_command", required=True)
    pv = hsub.add_parser("verify", help="verify singular loci or polar duality")
    pv.add_argument("target", choices=("segre", "igusa", "duality"))
    pv.add_argument(
        "--samples",
        type=int,
        default=None,
        help="search points for segre (default 10000), sample count for duality (default 200)",
    )
    pv.add_argument("--seed", type=int, default=0)
    pv.set_defaults(func=_cmd_hypersurface_verify)

    p = sub.add_parser("incidence", help="the 15_3 point-line structure")
    p.set_defaults(func=_cmd_incidence)

    p = sub.add_parser("verify-all", help="run the full verification suite")
    p.add_argument("--samples", type=int, default=200, help="0 skips the randomized checks")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        # StabgeomError and json.JSONDecodeError are both ValueErrors
        return _fail(exc)
