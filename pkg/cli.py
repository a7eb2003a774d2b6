"""Command-line entry point of the asymptotic series engine.

Usage:
  # Exact b-coefficients of a built-in or custom sequence
  python cli.py expand --sequence wallis --order 5
  python cli.py expand --sequence my_relation.txt --format json

  # Check an expansion against exact values (exit 0 iff every check passes)
  python cli.py verify --sequence beta_integral --order 3 --n 10

  # Estimate/exact/error table
  python cli.py table --sequence wallis --n 11 --k 1 2 3 4 5 --format csv

  # Built-in sequences
  python cli.py list --format json

Exit codes: 0 success, 1 verification failed, 2 input error,
3 normalization violation, 4 capability error.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from catalog import SequenceSpec, list_specs, resolve
from errors import AsymptoticError, InputError
from numerics.emit import render_expansion, render_list, render_report, render_table
from numerics.tables import error_table
from numerics.verify import verify_sequence
from schemas import CliConfig
from settings import CONVERGENCE_N0, DEFAULT_ORDER, configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_INPUT = InputError.exit_code

DEFAULT_TABLE_N = [10]


def _order(config: CliConfig, spec: SequenceSpec) -> int:
    if config.order is not None:
        return config.order
    if spec.declared_order is not None:
        return spec.declared_order
    return DEFAULT_ORDER


def cmd_expand(config: CliConfig) -> int:
    spec = resolve(config.sequence)
    b = spec.expand(_order(config, spec))
    sys.stdout.write(render_expansion(spec, b, config.format))
    return EXIT_OK


def cmd_verify(config: CliConfig) -> int:
    spec = resolve(config.sequence)
    spec.require_evaluators()
    n_values = config.n_values or [CONVERGENCE_N0]
    report = verify_sequence(spec, _order(config, spec), n_values, config.precision)
    sys.stdout.write(render_report(report))
    return EXIT_OK if report.passed else EXIT_CHECKS_FAILED


def cmd_table(config: CliConfig) -> int:
    spec = resolve(config.sequence)
    spec.require_evaluators()
    order = _order(config, spec)
    k_values = config.k_values or list(range(order + 1))
    n_values = config.n_values or DEFAULT_TABLE_N
    b = spec.expand(order)
    table = error_table(spec, b, n_values, k_values, config.precision)
    sys.stdout.write(render_table(table, config.format))
    return EXIT_OK


def cmd_list(config: CliConfig) -> int:
    sys.stdout.write(render_list(list_specs(), config.format))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[CliConfig], int]] = {
    "expand": cmd_expand,
    "verify": cmd_verify,
    "table": cmd_table,
    "list": cmd_list,
}


def _add_common(parser: argparse.ArgumentParser, *, needs_sequence: bool = True) -> None:
    if needs_sequence:
        parser.add_argument(
            "--sequence", required=True, help="Built-in name or path to a custom coefficient file"
        )
        parser.add_argument("--order", type=int, default=None, help=f"Expansion order m (default {DEFAULT_ORDER})")
        parser.add_argument("--precision", type=int, default=None, help="Working precision in decimal digits")
        parser.add_argument("--n", dest="n_values", type=int, nargs="+", action="extend", default=[])
        parser.add_argument("--k", dest="k_values", type=int, nargs="+", action="extend", default=[])
    parser.add_argument("--format", choices=["plain", "csv", "json"], default=None)


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Asymptotic power series for difference, product and ratio relations"
    )
    sub = parser.add_subparsers(dest="command")

    _add_common(sub.add_parser("expand", help="Print the exact coefficients b_0..b_m"))
    _add_common(sub.add_parser("verify", help="Check an expansion against exact values"))
    _add_common(sub.add_parser("table", help="Estimate/exact/error table over n and k"))
    _add_common(sub.add_parser("list", help="List the built-in sequences"), needs_sequence=False)

    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    fields = {key: value for key, value in vars(args).items() if value is not None}
    return CliConfig(**fields)


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    parser = _build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT

    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_INPUT

    try:
        config = _config_from_args(args)
        return COMMANDS[config.command](config)
    except ValidationError as exc:
        problems = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
        print(f"error: invalid options: {problems}", file=sys.stderr)
        return EXIT_INPUT
    except AsymptoticError as exc:
        logger.warning("%s failed: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
