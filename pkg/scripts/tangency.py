"""
Tangency Command Line
=====================

Batch front end for the tangency-criterion toolkit.

Commands:
    check <file>      decide the geometric criterion (exit 0 holds, 3 fails)
    reduce <file>     print the Whitehead-minimal form and its trace
    oracle <file>     certify the reduction by brute-force exploration
    models --genus g  list the finite catalogue of model classes
    campaign          certify the reduction on seeded random instances

Exit Codes:
    0 criterion holds / success, 1 error, 2 usage, 3 criterion fails,
    4 exploration budget exceeded

Usage:
    python -m scripts.tangency check data/genus2_three_curves.txt --trace
    python -m scripts.tangency check - --json < words.txt
    python -m scripts.tangency models --genus 2
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NoReturn, Optional

from services.criterion_service import verdict_for_set
from services.document_parser import document_from_set, load, render, to_tangency_set
from services.errors import BudgetExceeded, ExitCode, TangencyError
from services.model_catalog import catalog_note, enumerate_models, models_frame
from services.oracle_service import (
    DEFAULT_CAMPAIGN_SIZE,
    DEFAULT_MAX_GENUS,
    DEFAULT_MAX_LENGTH,
    campaign_passed,
    certify,
    resolve_node_budget,
    resolve_threads,
    run_campaign,
)
from services.report_service import (
    campaign_document,
    campaign_text,
    certification_document,
    certification_text,
    error_document,
    models_document,
    models_text,
    reduction_document,
    reduction_text,
    to_json,
    verdict_document,
    verdict_text,
)
from services.whitehead_service import reduce

# ---------------------------------------------------------------------------
# Logging Configuration
# ---------------------------------------------------------------------------
logger = logging.getLogger(__name__)

ORIENTATION_NOTE = """\
input format:
  genus <g>                header, first significant line
  x1 x2 x1^-1              one word per line (token form), or
  abA                      compact form: a..z = x1..x26, A..Z = inverses
  1                        an inessential t-curve (empty word)
  # ...                    comment

orientation:
  Words are not oriented automatically. Read each t-curve as oriented as
  the boundary of the exit (dark) region, recording x_i when it crosses
  the i-th cut disk positively and x_i^-1 when it crosses negatively.
  Reversing the orientation of every curve at once never changes the verdict.
"""


@dataclass(frozen=True)
class ParserExit(Exception):
    code: int
    message: str = ""


class ThrowingArgumentParser(argparse.ArgumentParser):
    def exit(self, status: int = 0, message: Optional[str] = None) -> NoReturn:  # type: ignore[override]
        if message:
            self._print_message(message, sys.stderr if status else sys.stdout)
        raise ParserExit(status, message or "")

    def error(self, message: str) -> NoReturn:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self._print_message(f"{self.prog}: error: {message}\n", sys.stderr)
        raise ParserExit(2, f"{self.prog}: error: {message}\n")


def positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from exc
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def nonnegative_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from exc
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


# =========================================================================
# Handlers: each returns (exit code, stdout text)
# =========================================================================

def handle_check(args: argparse.Namespace) -> tuple[int, str]:
    document = load(args.file)
    v = verdict_for_set(to_tangency_set(document))
    code = ExitCode.CRITERION_HOLDS if v.criterion_holds else ExitCode.CRITERION_FAILS
    if args.json:
        return int(code), to_json(verdict_document(v))
    return int(code), verdict_text(v, show_trace=args.trace, source=document.source)


def handle_reduce(args: argparse.Namespace) -> tuple[int, str]:
    document = load(args.file)
    s = to_tangency_set(document)
    s_min, trace = reduce(s)
    if args.emit:
        Path(args.emit).write_text(render(document_from_set(s_min, source=args.emit)), encoding="utf-8")
        logger.info("reduce: wrote S_min to %s", args.emit)
    if args.json:
        return int(ExitCode.CRITERION_HOLDS), to_json(reduction_document(s, s_min, trace))
    return int(ExitCode.CRITERION_HOLDS), reduction_text(s, s_min, trace)


def handle_oracle(args: argparse.Namespace) -> tuple[int, str]:
    s = to_tangency_set(load(args.file))
    budget = resolve_node_budget(args.budget)
    cert = certify(s, args.cap, budget, modulo_symmetry=args.symmetry)
    code = ExitCode.CRITERION_HOLDS if cert.passed else ExitCode.CRITERION_FAILS
    if args.json:
        return int(code), to_json(certification_document(s, cert, budget))
    return int(code), certification_text(s, cert, budget)


def handle_models(args: argparse.Namespace) -> tuple[int, str]:
    classes = enumerate_models(args.genus)
    note = catalog_note(args.genus, classes)
    if args.csv:
        models_frame(classes).to_csv(args.csv, index=False)
    if args.json:
        return int(ExitCode.CRITERION_HOLDS), to_json(models_document(args.genus, classes, note))
    return int(ExitCode.CRITERION_HOLDS), models_text(args.genus, classes, note)


def handle_campaign(args: argparse.Namespace) -> tuple[int, str]:
    df = run_campaign(count=args.count, max_genus=args.max_genus, max_length=args.max_length,
                      seed=args.seed, threads=resolve_threads(args.threads), node_budget=args.budget)
    passed = campaign_passed(df)
    if args.csv:
        df.to_csv(args.csv, index=False)
    code = ExitCode.CRITERION_HOLDS if passed else ExitCode.CRITERION_FAILS
    if args.json:
        return int(code), to_json(campaign_document(df, passed))
    return int(code), campaign_text(df, passed)


# =========================================================================
# Parser
# =========================================================================

def build_parser() -> ThrowingArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    common.add_argument("--threads", type=positive_int, default=None,
                        help="worker threads for campaigns (default: TANGENCY_THREADS or 1)")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="log to stderr (-v info, -vv debug)")

    parser = ThrowingArgumentParser(
        prog="tangency",
        description="Decide the geometric criterion of an isolating-block handlebody "
                    "from the words read off its tangency curves.",
        epilog=ORIENTATION_NOTE,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ThrowingArgumentParser)

    check = sub.add_parser("check", parents=[common], help="decide the criterion for a document",
                           epilog=ORIENTATION_NOTE, formatter_class=argparse.RawDescriptionHelpFormatter)
    check.add_argument("file", help="tangency document, or - for stdin")
    check.add_argument("--trace", action="store_true", help="include the move-by-move log")
    check.set_defaults(_handler=handle_check)

    red = sub.add_parser("reduce", parents=[common], help="print S_min and the reduction trace")
    red.add_argument("file", help="tangency document, or - for stdin")
    red.add_argument("--emit", metavar="PATH", help="also write S_min as a tangency document")
    red.set_defaults(_handler=handle_reduce)

    oracle = sub.add_parser("oracle", parents=[common], help="brute-force certification report")
    oracle.add_argument("file", help="tangency document, or - for stdin")
    oracle.add_argument("--cap", type=nonnegative_int, default=None,
                        help="length cap for exploration (default: input length)")
    oracle.add_argument("--budget", type=positive_int, default=None,
                        help="node budget (default: TANGENCY_NODE_BUDGET or 1000000)")
    oracle.add_argument("--symmetry", action="store_true",
                        help="identify states up to signed generator permutations")
    oracle.set_defaults(_handler=handle_oracle)

    models = sub.add_parser("models", parents=[common], help="list model classes for a genus")
    models.add_argument("--genus", type=nonnegative_int, required=True)
    models.add_argument("--csv", metavar="PATH", help="also write the catalogue as CSV")
    models.set_defaults(_handler=handle_models)

    campaign = sub.add_parser("campaign", parents=[common], help="seeded random certification campaign")
    campaign.add_argument("--count", type=nonnegative_int, default=DEFAULT_CAMPAIGN_SIZE)
    campaign.add_argument("--max-genus", type=positive_int, default=DEFAULT_MAX_GENUS)
    campaign.add_argument("--max-length", type=positive_int, default=DEFAULT_MAX_LENGTH)
    campaign.add_argument("--seed", type=int, default=0)
    campaign.add_argument("--budget", type=positive_int, default=None, help="node budget per exploration")
    campaign.add_argument("--csv", metavar="PATH", help="also write the result table as CSV")
    campaign.set_defaults(_handler=handle_campaign)

    return parser


def _configure_logging(verbosity: int) -> None:
    # without -v, warnings reach stderr through logging's last-resort handler
    if not verbosity:
        return
    level = logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def _fail(exc: BaseException, code: ExitCode, json_mode: bool) -> int:
    print(f"error: {exc}", file=sys.stderr)
    if json_mode:
        sys.stdout.write(to_json(error_document(exc, int(code))))
    return int(code)


def main(argv: Optional[Iterable[str]] = None) -> int:
    argv_list = list(argv) if argv is not None else sys.argv[1:]
    json_mode = "--json" in argv_list
    try:
        args = build_parser().parse_args(argv_list)
        _configure_logging(args.verbose)
        code, output = args._handler(args)
    except ParserExit as exc:
        return int(ExitCode.CRITERION_HOLDS if exc.code == 0 else ExitCode.USAGE)
    except BudgetExceeded as exc:
        return _fail(exc, ExitCode.BUDGET_EXCEEDED, json_mode)
    except (TangencyError, OSError, ValueError) as exc:
        return _fail(exc, ExitCode.ERROR, json_mode)
    sys.stdout.write(output)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
