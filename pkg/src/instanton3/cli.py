"""Command-line front end.

Four subcommands: ``chi`` evaluates the Euler characteristic of a twisted
sheaf with given Chern classes, ``table`` prints the natural-cohomology
table over a twist window, ``spectra`` enumerates candidate spectra with
their predicted cohomology, and ``verify-paper`` replays the full claim
checklist.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 model obstruction (no natural table exists for the given classes).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .chern import ChernData, euler_characteristic, validate_parity
from .cohomtable import natural_table
from .errors import DomainError, NotNaturalizable, ParityViolation, ToolkitError
from .spectrum import enumerate_spectra, h1_from_spectrum, h2_from_spectrum, is_instanton_spectrum
from .verify import report_json_dict, report_text, run_all

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_MODEL = 3

#: Twist magnitudes past this produce tables nobody reads; refuse them.
MAX_TWIST = 100
#: Ceiling on the enumeration search space before filtering.
MAX_SEARCH_SPACE = 1_000_000


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _chern_from_args(args: argparse.Namespace) -> ChernData:
    return ChernData(args.rank, args.c1, args.c2, args.c3)


def _check_twist(value: int, name: str) -> None:
    if abs(value) > MAX_TWIST:
        raise DomainError(f"{name} = {value} is out of range; |{name}| must be at most {MAX_TWIST}")


def cmd_chi(args: argparse.Namespace) -> int:
    data = _chern_from_args(args)
    _check_twist(args.m, "m")
    chi = euler_characteristic(data, args.m)
    if args.format == "json":
        _print_json({"chern": [data.rank, data.c1, data.c2, data.c3], "m": args.m, "chi": chi})
    else:
        print(chi)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    data = _chern_from_args(args)
    _check_twist(args.t_min, "t_min")
    _check_twist(args.t_max, "t_max")
    if args.t_min > args.t_max:
        raise DomainError(f"empty twist window: t_min = {args.t_min} exceeds t_max = {args.t_max}")
    if data.rank == 3 and not validate_parity(data):
        raise ParityViolation(
            f"classes ({data.rank}, {data.c1}, {data.c2}, {data.c3}) violate the parity "
            "constraint c3 = c1*c2 mod 2"
        )
    tbl = natural_table(data, args.t_min, args.t_max)
    if args.format == "json":
        _print_json(tbl.to_json_dict())
    else:
        print(tbl.to_text())
    return EXIT_OK


def cmd_spectra(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise DomainError(f"spectrum length must be positive, got {args.n}")
    if not 1 <= args.bound <= MAX_TWIST:
        raise DomainError(f"bound must be between 1 and {MAX_TWIST}, got {args.bound}")
    if math.comb(2 * args.bound + args.n, args.n) > MAX_SEARCH_SPACE:
        raise DomainError(
            f"enumerating length-{args.n} spectra with bound {args.bound} exceeds the "
            f"search-space ceiling of {MAX_SEARCH_SPACE} candidates"
        )
    found = enumerate_spectra(args.n, args.bound)
    entries = []
    for sp in found:
        entries.append(
            {
                "ks": list(sp.ks),
                "h1_minus2": h1_from_spectrum(sp, -2),
                "h2_minus2": h2_from_spectrum(sp, -2),
                "instanton": is_instanton_spectrum(sp),
            }
        )
    if args.format == "json":
        _print_json({"n": args.n, "bound": args.bound, "spectra": entries})
    else:
        for entry_ in entries:
            ks = ",".join(str(k) for k in entry_["ks"])
            flag = "yes" if entry_["instanton"] else "no"
            print(f"({ks}): h1(-2)={entry_['h1_minus2']} h2(-2)={entry_['h2_minus2']} instanton={flag}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_all()
    if args.format == "json":
        _print_json(report_json_dict(results))
    else:
        print(report_text(results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY_FAILED


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text", help="output format")


def _add_chern_positionals(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("rank", type=int, help="rank of the sheaf")
    parser.add_argument("c1", type=int, help="first Chern class")
    parser.add_argument("c2", type=int, help="second Chern class")
    parser.add_argument("c3", type=int, help="third Chern class")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="instanton3",
        description="Exact Chern-class arithmetic for rank-3 bundles on projective 3-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_chi = sub.add_parser("chi", help="Euler characteristic of a twisted sheaf")
    _add_chern_positionals(p_chi)
    p_chi.add_argument("--m", type=int, default=0, help="twist to evaluate at (default 0)")
    _add_format(p_chi)
    p_chi.set_defaults(func=cmd_chi)

    p_table = sub.add_parser("table", help="natural-cohomology table over a twist window")
    _add_chern_positionals(p_table)
    p_table.add_argument("t_min", type=int, help="first twist of the window")
    p_table.add_argument("t_max", type=int, help="last twist of the window")
    _add_format(p_table)
    p_table.set_defaults(func=cmd_table)

    p_spectra = sub.add_parser("spectra", help="enumerate zero-sum spectra and their predictions")
    p_spectra.add_argument("n", type=int, help="spectrum length (the charge)")
    p_spectra.add_argument("--bound", type=int, default=1, help="entry bound of the search box (default 1)")
    _add_format(p_spectra)
    p_spectra.set_defaults(func=cmd_spectra)

    p_verify = sub.add_parser("verify-paper", help="replay the published claim checklist")
    _add_format(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except NotNaturalizable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except (ToolkitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())
