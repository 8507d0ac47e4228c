"""Command-line interface.

Three subcommands: ``invariant`` computes the two-variable polynomial
of a singular link, ``homfly`` evaluates a classical word, and
``check`` runs the seeded verification suites.  Exit codes: 0 success,
1 check failure, 2 parse error, 3 bound exceeded, 4 precondition
violated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__
from .braid import parse_link
from .checks import SUITE_NAMES, run_suites
from .errors import BoundError, ParseError, PreconditionError
from .homfly import DEFAULT_MAX_CROSSINGS, homfly
from .rings import Ring
from .skein import (
    DEFAULT_MAX_SING,
    OrderedSkeinElement,
    SkeinPolynomial,
    invariant_ordered,
    project_unordered,
)

__all__ = ["RunConfig", "main"]


@dataclass
class RunConfig:
    """Resolved options shared by all subcommands."""

    ring: Ring
    jobs: int = 1
    crossing_bound: int = DEFAULT_MAX_CROSSINGS
    sing_bound: int = DEFAULT_MAX_SING
    output: str = "text"
    seed: int = 0
    ordered: bool = False

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.crossing_bound < 1 or self.sing_bound < 1:
            raise ValueError("bounds must be at least 1")


def _ring_from_spec(text: str) -> Ring:
    if text == "generic":
        return Ring.get()
    if text == "conway":
        return Ring.get(conway=True)
    if text.startswith("gf:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ParseError(f"bad prime in ring spec {text!r}")
        try:
            return Ring.get(p)
        except ValueError as exc:
            raise ParseError(str(exc))
    raise ParseError(f"unknown ring {text!r}; use generic, conway, or gf:<p>")


def _default_jobs() -> int:
    env = os.environ.get("SKEINFORGE_JOBS")
    if env is None:
        return 1
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--ring",
        default="generic",
        metavar="MODE",
        help="coefficients: generic, conway, or gf:<p> (default: generic)",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=_default_jobs(),
        metavar="N",
        help="worker processes for resolution cubes (default: $SKEINFORGE_JOBS or 1)",
    )
    parser.add_argument(
        "--max-crossings",
        type=int,
        default=DEFAULT_MAX_CROSSINGS,
        metavar="N",
        help=f"refuse words with more crossings (default: {DEFAULT_MAX_CROSSINGS})",
    )
    parser.add_argument(
        "--max-sing",
        type=int,
        default=DEFAULT_MAX_SING,
        metavar="N",
        help=f"refuse links with more singular crossings (default: {DEFAULT_MAX_SING})",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument(
        "--seed", type=int, default=0, metavar="S", help="seed for check suites"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeinforge",
        description="Exact two-variable skein invariants of closed singular braids.",
    )
    parser.add_argument("--version", action="version", version=f"skeinforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariant", help="invariant of a singular link")
    p_inv.add_argument("word", help="singular braid word, e.g. '3: t1 s2^-1 t2 | o = 2 1'")
    p_inv.add_argument(
        "--ordered",
        action="store_true",
        help="also print the labeled coordinates",
    )
    _add_common(p_inv)
    p_inv.set_defaults(handler=_cmd_invariant)

    p_hom = sub.add_parser("homfly", help="polynomial of a classical word")
    p_hom.add_argument("word", help="classical braid word, e.g. '2: s1 s1 s1'")
    _add_common(p_hom)
    p_hom.set_defaults(handler=_cmd_homfly)

    p_chk = sub.add_parser("check", help="run a verification suite")
    p_chk.add_argument("suite", choices=SUITE_NAMES, help="suite name or 'all'")
    _add_common(p_chk)
    p_chk.set_defaults(handler=_cmd_check)

    return parser


def _config_from_args(args) -> RunConfig:
    try:
        return RunConfig(
            ring=_ring_from_spec(args.ring),
            jobs=args.jobs,
            crossing_bound=args.max_crossings,
            sing_bound=args.max_sing,
            output="json" if args.json else "text",
            seed=args.seed,
            ordered=getattr(args, "ordered", False),
        )
    except ValueError as exc:
        raise ParseError(str(exc))


def _with_pool(config: RunConfig):
    if config.jobs > 1:
        return ProcessPoolExecutor(max_workers=config.jobs)
    return None


def _coeff_obj(key, scalar) -> dict:
    i, j = key
    return {"i": i, "j": j, "num": str(scalar.num), "dpow": scalar.dpow}


def _invariant_payload(element: OrderedSkeinElement, poly: SkeinPolynomial, ordered: bool) -> dict:
    payload = {
        "d": element.d,
        "coeffs": [_coeff_obj(key, poly.coeffs[key]) for key in sorted(poly.coeffs)],
    }
    if ordered:
        payload["ordered"] = [
            {
                "eps": "".join(str(b) for b in bits),
                "num": str(element.coords[bits].num),
                "dpow": element.coords[bits].dpow,
            }
            for bits in sorted(element.coords)
        ]
    return payload


def _cmd_invariant(args) -> int:
    config = _config_from_args(args)
    link = parse_link(args.word)
    pool = _with_pool(config)
    try:
        element = invariant_ordered(
            link,
            config.ring,
            max_sing=config.sing_bound,
            max_crossings=config.crossing_bound,
            pool=pool,
        )
    finally:
        if pool is not None:
            pool.shutdown()
    poly = project_unordered(element)
    if config.output == "json":
        print(json.dumps(_invariant_payload(element, poly, config.ordered)))
    else:
        print(poly)
        if config.ordered:
            print(element)
    return 0


def _cmd_homfly(args) -> int:
    config = _config_from_args(args)
    word = parse_link(args.word).word
    value = homfly(word, config.ring, max_crossings=config.crossing_bound)
    if config.output == "json":
        payload = {
            "d": 0,
            "coeffs": [{"i": 0, "j": 0, "num": str(value), "dpow": 0}],
        }
        print(json.dumps(payload))
    else:
        print(value)
    return 0


def _cmd_check(args) -> int:
    config = _config_from_args(args)
    pool = _with_pool(config)
    try:
        reports = run_suites([args.suite], config.seed, pool)
    finally:
        if pool is not None:
            pool.shutdown()
    if config.output == "json":
        print(
            json.dumps(
                [
                    {
                        "suite": r.name,
                        "cases": r.cases,
                        "failures": r.failures,
                        "seed": r.seed,
                        "counterexample": r.counterexample,
                    }
                    for r in reports
                ]
            )
        )
    else:
        for report in reports:
            print(report.format())
    return 0 if all(r.ok for r in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except BoundError as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
