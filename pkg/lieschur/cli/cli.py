"""
Command-line surface:

    lieschur witt N DMAX
    lieschur free N C [--constants]
    lieschur multiplier (PATH | --builtin SPEC) [--verbose]
    lieschur report (PATH | --builtin SPEC)
    lieschur verify [--max-n N] [--max-class C]

Exit codes: 0 success, 1 computation or verification failure, 2 usage or parse error.
"""
import sys
import json
import argparse
from fractions import Fraction
from typing import Any, Dict, List, Optional

import pandas as pd

from lieschur.bounds import compare
from lieschur.catalog import from_spec, parse, serialize
from lieschur.cli.verification import run_verification
from lieschur.exceptions import InvalidParameterError, LieSchurError, ParseError, SemanticError
from lieschur.free_lie import free_nilpotent
from lieschur.lie_core import LieAlgebra, graded_dimensions, min_generators, nilpotency_class
from lieschur.log_manager import LogManager
from lieschur.multiplier import homology_profile, lambda3_columns
from lieschur.witt import witt_table

FORMAT_VERSION = "lieschur/1"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class VerificationFailed(LieSchurError):
    pass


class GuardrailRefused(LieSchurError):
    pass


def _json_default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    raise TypeError(f"Cannot encode {value!r}")


def _emit(args: argparse.Namespace, record: Dict[str, Any], human: str) -> None:
    if args.format == "machine":
        payload = {"format": FORMAT_VERSION, "command": args.command, **record}
        print(json.dumps(payload, sort_keys=True, default=_json_default))
    else:
        print(human)


def _load_algebra(args: argparse.Namespace) -> LieAlgebra:
    if args.builtin:
        return from_spec(args.builtin)
    with open(args.path, "r", encoding="utf-8") as f:
        return parse(f.read())


def _inputs(args: argparse.Namespace) -> Dict[str, Any]:
    return {"builtin": args.builtin} if args.builtin else {"path": args.path}


def cmd_witt(args: argparse.Namespace, log=None) -> int:
    table = witt_table(args.n, args.dmax)
    rows = [{"d": d, "l": value, "cumulative": total} for (d, value), total in zip(table.values, table.cumulative)]
    log.debug(f"witt table n={args.n} up to {args.dmax}")
    _emit(args, {"inputs": {"n": args.n, "dmax": args.dmax}, "rows": rows},
          pd.DataFrame(rows, columns=["d", "l", "cumulative"]).rename(columns={"l": f"l_{args.n}(d)"}).to_string(index=False))
    return EXIT_OK


def cmd_free(args: argparse.Namespace, log=None) -> int:
    L = free_nilpotent(args.n, args.c)
    graded = graded_dimensions(L)
    c, n = nilpotency_class(L), min_generators(L)
    record = {"inputs": {"n": args.n, "c": args.c}, "dim": L.dim, "graded": graded, "class": c, "generators": n}
    human = f"dim {L.dim}, graded {'+'.join(str(g) for g in graded)}, class {c}, generators {n}"
    if args.constants:
        record["constants"] = serialize(L)
        human += "\n" + serialize(L).rstrip("\n")
    _emit(args, record, human)
    return EXIT_OK


def cmd_multiplier(args: argparse.Namespace, log=None) -> int:
    L = _load_algebra(args)
    guardrail = LogManager().config.compute_config.column_guardrail
    columns = lambda3_columns(L.dim)
    if columns > guardrail and not args.force:
        log.pwarning(f"Exterior cube has {columns} columns (limit {guardrail}); rerun with --force to compute anyway")
        raise GuardrailRefused(f"{columns} columns exceed the guardrail of {guardrail}")
    profile = homology_profile(L)
    record: Dict[str, Any] = {"inputs": _inputs(args), "multiplier_dim": profile.multiplier}
    human = str(profile.multiplier)
    if args.verbose:
        details = {"dim": L.dim, "nullity_d2": profile.nullity_boundary_2, "rank_d3": profile.rank_boundary_3,
                   "dim_derived": profile.rank_boundary_2}
        try:
            details.update({"class": nilpotency_class(L), "generators": min_generators(L)})
        except LieSchurError as e:
            log.pwarning(f"class and generators unavailable: {e}")
            details.update({"class": None, "generators": None})
        record.update(details)
        human = LogManager.get_log_string({"multiplier_dim": profile.multiplier, **details})
    _emit(args, record, human)
    return EXIT_OK


def cmd_report(args: argparse.Namespace, log=None) -> int:
    L = _load_algebra(args)
    name = args.builtin or args.path
    report = compare(L, name)
    _emit(args, {"inputs": _inputs(args), "report": report.as_dict()}, LogManager.get_log_string(report.as_dict()))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, log=None) -> int:
    compute_config = LogManager().config.compute_config
    results = run_verification(args.max_n, args.max_class, compute_config.homology_dim_limit, compute_config.random_seed)
    rows = [r.as_dict() for r in results]
    table = pd.DataFrame([{k: v for k, v in row.items() if k != "failures"} for row in rows])
    human = table.to_string(index=False)
    failures = [f"{r.name}: {failure}" for r in results for failure in r.failures]
    if failures:
        human += "\nFAILED\n" + "\n".join(failures)
    else:
        human += "\nall checks passed"
    _emit(args, {"inputs": {"max_n": args.max_n, "max_class": args.max_class}, "checks": rows,
                 "passed": not failures}, human)
    if failures:
        raise VerificationFailed(f"{len(failures)} failing case(s) in {', '.join(sorted({r.name for r in results if not r.passed}))}")
    return EXIT_OK


COMMANDS = {"witt": cmd_witt, "free": cmd_free, "multiplier": cmd_multiplier, "report": cmd_report, "verify": cmd_verify}


def _add_global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value: Any) -> Any:
        return argparse.SUPPRESS if suppress else value
    parser.add_argument("--format", choices=["human", "machine"], default=default("human"), help="output format")
    parser.add_argument("--force", action="store_true", default=default(False), help="run beyond the size guardrail")
    parser.add_argument("--log-dir", default=default(None), help="write log files to this folder")
    parser.add_argument("--log-level", default=default("WARNING"), help="console log level when no log folder is given")
    parser.add_argument("--profile", choices=["function", "line"], default=default(None), help="profile the command")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lieschur", description="Schur multipliers of nilpotent Lie algebras")
    _add_global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_options(common, suppress=True)
    subparsers = parser.add_subparsers(dest="command", required=True)

    witt = subparsers.add_parser("witt", parents=[common], help="table of l_n(d)")
    witt.add_argument("n", type=_positive_int)
    witt.add_argument("dmax", type=_positive_int)

    free = subparsers.add_parser("free", parents=[common], help="free nilpotent algebra F/F^(c+1)")
    free.add_argument("n", type=_positive_int)
    free.add_argument("c", type=_positive_int)
    free.add_argument("--constants", action="store_true", help="print the structure-constant file")

    for name, help_text in (("multiplier", "dimension of the Schur multiplier"), ("report", "bounds report")):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("path", nargs="?", help="structure-constant file")
        sub.add_argument("--builtin", help="builtin spec such as free:2,3 or abelian:4")
        if name == "multiplier":
            sub.add_argument("--verbose", action="store_true", help="show ranks, class and generators")

    verify = subparsers.add_parser("verify", parents=[common], help="run the property suite")
    verify.add_argument("--max-n", type=_positive_int, default=2)
    verify.add_argument("--max-class", type=_positive_int, default=4)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("multiplier", "report") and bool(args.path) == bool(args.builtin):
        parser.error(f"{args.command} needs exactly one of PATH or --builtin")

    manager = LogManager()
    try:
        manager.setup(log_config={"root_log_path": args.log_dir, "console_level": args.log_level})
    except LieSchurError as e:
        parser.error(str(e))

    handler = manager.get_log("lieschur.cli", enable_profiling=args.profile,
                              expected_errors=(LieSchurError, OSError))(COMMANDS[args.command])
    try:
        return handler(args)
    except (ParseError, SemanticError, InvalidParameterError, OSError) as e:
        print(f"lieschur: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except LieSchurError as e:
        print(f"lieschur: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILURE
