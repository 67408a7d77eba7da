"""Command-line front end.

Every subcommand prints one JSON document (or a plain-text rendering) on
stdout. Exit status is 0 on success, 1 on errors and 2 when a verification
finds a mismatch.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any, NoReturn

from gradedbezout.bounds.closed import bound_closed
from gradedbezout.bounds.general import bound_general
from gradedbezout.bounds.harness import check_bound_against_system
from gradedbezout.bounds.jacobi import jacobi_number
from gradedbezout.core.binomial_core import to_expanded_str
from gradedbezout.core.kolchin import brute_count, canonicalize, dimension_polynomial
from gradedbezout.core.minimizing import (
    MinimizingTrace,
    is_in_w,
    minimizing_coefficients,
)
from gradedbezout.errors import GradedBezoutError, InputError
from gradedbezout.graded.charpoly import (
    characteristic,
    compare_with_oracle,
    invariants_of,
)
from gradedbezout.io.loaders import (
    load_jacobi,
    load_matrix,
    load_polynomial,
    load_system,
    provider_for,
)
from gradedbezout.logging_config import setup_logging
from gradedbezout.settings import Settings, load_settings
from gradedbezout.utils.json_utils import dumps
from gradedbezout.witness import example_system, expected_typical_dimension

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


@dataclass
class Outcome:
    """Report of one subcommand and its exit status."""

    payload: dict[str, Any]
    status: int = EXIT_OK


def parse_orders(text: str) -> list[int]:
    """Parse ``e1,e2,...`` into non-negative integers."""
    try:
        orders = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Invalid order list: {text}") from e
    if not orders or any(e < 0 for e in orders):
        raise argparse.ArgumentTypeError(
            "Orders must be a non-empty list of non-negative integers"
        )
    return orders


class CommandParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as ``InputError``.

    Subparsers are built with the same class.
    """

    def error(self, message: str) -> NoReturn:
        raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    parser = CommandParser(
        prog="gradedbezout",
        description="Dimension polynomials and Bezout-type bounds for graded systems",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "text"],
        default="json",
        help="Output format",
    )
    common.add_argument(
        "--log-level",
        type=str,
        default=None,
        help="Logging level (overrides GRADEDBEZOUT_LOG_LEVEL)",
    )

    with_input = argparse.ArgumentParser(add_help=False, parents=[common])
    with_input.add_argument(
        "--input",
        "-i",
        type=str,
        required=True,
        help="Path to the input file, or an inline JSON document",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "dimpoly", parents=[with_input], help="Kolchin dimension polynomial"
    )
    p.add_argument(
        "--verify-upto",
        type=int,
        default=None,
        metavar="S",
        help="Compare with a brute-force count from the stability bound to S",
    )

    p = sub.add_parser(
        "mincoeffs", parents=[with_input], help="Minimizing coefficients"
    )
    p.add_argument(
        "--trace", action="store_true", help="Include the intermediate polynomials"
    )

    sub.add_parser("in-w", parents=[with_input], help="Decide membership in W")

    p = sub.add_parser(
        "charpoly", parents=[with_input], help="Characteristic polynomial"
    )
    p.add_argument(
        "--verify-upto",
        type=int,
        nargs="?",
        const=-1,
        default=None,
        metavar="S",
        help="Cross-check with the rank oracle up to degree S",
    )

    p = sub.add_parser("bound", parents=[common], help="Typical-dimension bound")
    p.add_argument("--codim", type=int, required=True, help="Codimension")
    p.add_argument(
        "--orders", type=parse_orders, required=True, help="Orders e1[,e2,...]"
    )
    p.add_argument(
        "--general", action="store_true", help="Use the general derivation"
    )
    p.add_argument(
        "--trace", action="store_true", help="Include the derivation trace"
    )

    sub.add_parser("jacobi", parents=[with_input], help="Jacobi number")
    sub.add_parser(
        "verify", parents=[with_input], help="Check a system against its bound"
    )

    p = sub.add_parser(
        "example-ex", parents=[common], help="Codimension-3 achieving example"
    )
    p.add_argument("--k", type=int, required=True, help="Parameter k >= 1")
    return parser


def run_dimpoly(args: argparse.Namespace, settings: Settings) -> Outcome:
    E = load_matrix(provider_for(args.input))
    result = dimension_polynomial(E, settings.max_antichain_rows)
    poly = result.polynomial
    payload: dict[str, Any] = {
        "m": E.m,
        "antichain": canonicalize(E).to_json()["rows"],
        "polynomial": poly.to_json(),
        "binomial_form": str(poly),
        "expanded_form": to_expanded_str(poly),
        "stability_bound": result.stability_bound,
    }
    status = EXIT_OK
    if args.verify_upto is not None:
        checked = [
            {"s": s, "count": brute_count(E, s), "polynomial": poly(s)}
            for s in range(result.stability_bound, args.verify_upto + 1)
        ]
        match = all(row["count"] == row["polynomial"] for row in checked)
        payload["verify"] = {"upto": args.verify_upto, "rows": checked, "match": match}
        status = EXIT_OK if match else EXIT_MISMATCH
    return Outcome(payload, status)


def run_mincoeffs(args: argparse.Namespace, settings: Settings) -> Outcome:
    omega = load_polynomial(provider_for(args.input))
    trace = MinimizingTrace() if args.trace else None
    coeffs = minimizing_coefficients(omega, trace)
    payload: dict[str, Any] = {"minimizing": coeffs.to_json()}
    if trace is not None:
        payload["stages"] = [
            {
                "degree": stage.degree,
                "leading": stage.leading,
                "standard_coeffs": list(stage.polynomial.standard_coeffs),
            }
            for stage in trace.stages
        ]
    return Outcome(payload)


def run_in_w(args: argparse.Namespace, settings: Settings) -> Outcome:
    omega = load_polynomial(provider_for(args.input))
    return Outcome(is_in_w(omega).to_json())


def run_charpoly(args: argparse.Namespace, settings: Settings) -> Outcome:
    system = load_system(provider_for(args.input))
    result = characteristic(system, settings.max_antichain_rows)
    payload = result.to_json()
    payload["binomial_form"] = str(result.polynomial)
    payload["expanded_form"] = to_expanded_str(result.polynomial)
    payload["invariants"] = invariants_of(result.polynomial, system.m).to_json()
    status = EXIT_OK
    if args.verify_upto is not None:
        s_max = settings.hilbert_smax if args.verify_upto < 0 else args.verify_upto
        comparison = compare_with_oracle(result, system, s_max)
        payload["verify"] = comparison.to_json()
        status = EXIT_OK if comparison.holds else EXIT_MISMATCH
    return Outcome(payload, status)


def run_bound(args: argparse.Namespace, settings: Settings) -> Outcome:
    if args.general:
        if len(args.orders) != 1:
            raise InputError("The general derivation takes exactly one order")
        report = bound_general(args.codim, args.orders[0])
    else:
        report = bound_closed(args.codim, args.orders)
    return Outcome(report.to_json(include_trace=args.trace))


def run_jacobi(args: argparse.Namespace, settings: Settings) -> Outcome:
    matrix = load_jacobi(provider_for(args.input))
    return Outcome({"jacobi_number": jacobi_number(matrix)})


def run_verify(args: argparse.Namespace, settings: Settings) -> Outcome:
    system = load_system(provider_for(args.input))
    verdict = check_bound_against_system(system, settings.max_antichain_rows)
    status = EXIT_MISMATCH if verdict.holds is False else EXIT_OK
    return Outcome(verdict.to_json(), status)


def run_example_ex(args: argparse.Namespace, settings: Settings) -> Outcome:
    system = example_system(args.k)
    chi = characteristic(system, settings.max_antichain_rows).polynomial
    expected = expected_typical_dimension(args.k)
    value: Any = chi.leading if chi.degree == 0 else chi.to_json()
    match = chi.degree == 0 and chi.leading == expected
    payload = {"charpoly": value, "expected": expected, "match": match}
    return Outcome(payload, EXIT_OK if match else EXIT_MISMATCH)


COMMANDS: dict[str, Callable[[argparse.Namespace, Settings], Outcome]] = {
    "dimpoly": run_dimpoly,
    "mincoeffs": run_mincoeffs,
    "in-w": run_in_w,
    "charpoly": run_charpoly,
    "bound": run_bound,
    "jacobi": run_jacobi,
    "verify": run_verify,
    "example-ex": run_example_ex,
}


def render_text(payload: dict[str, Any]) -> str:
    """One ``key: value`` line per top-level field, nested values as JSON."""
    lines = []
    for key in sorted(payload):
        value = payload[key]
        shown = dumps(value) if isinstance(value, dict | list) else value
        lines.append(f"{key}: {shown}")
    return "\n".join(lines)


def emit(payload: dict[str, Any], fmt: str) -> None:
    print(render_text(payload) if fmt == "text" else dumps(payload))


def error_document(e: Exception) -> dict[str, Any]:
    return {"error": {"type": type(e).__name__, "message": str(e)}}


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit status."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        args = build_parser().parse_args(argv)
    except InputError as e:
        logger.error("Invalid arguments", extra={"error": str(e)})
        emit(error_document(e), "json")
        return EXIT_ERROR

    try:
        settings = load_settings()
        level = settings.level
        if args.log_level is not None:
            level = Settings(log_level=args.log_level).level
        setup_logging(level, settings.log_dir)
        logger.info("Running command", extra={"command": args.command})
        outcome = COMMANDS[args.command](args, settings)
    except (GradedBezoutError, ValueError) as e:
        logger.error(
            "Command failed",
            extra={"command": args.command, "error": str(e)},
        )
        emit(error_document(e), args.format)
        return EXIT_ERROR

    emit(outcome.payload, args.format)
    return outcome.status


if __name__ == "__main__":
    sys.exit(main())
