#!/usr/bin/env python3
"""
Command-line front end for the nullsatz toolkit.

Every command reads a problem file (``vars:`` header, one generator per line,
optional ``? <poly>`` query) or, for ``certify-check``, a certificate JSON file.
The result document goes to stdout; logs and structured errors go to stderr.

Exit codes: 0 decided/computed, 1 negative answer, 2 parse or schema error,
3 unsupported input, 4 retry cap exhausted.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from .algebra.ideal import Ideal
from .algebra.parser import Problem, parse_problem
from .services.certificates import (
    CertificateDocument,
    Empty,
    HilbertFunctionTable,
    Member,
    NoProjectiveZeros,
    Yes,
    hilbert_table,
    ideal_membership_bounded,
    radical_membership,
    verify_certificate,
    weak_nss,
    weak_projective_nss,
)
from .services.elimination import back_substitute, hentzelt_chain, kronecker_resolvent
from .services.reporting import ReportGenerator
from .services.uresolvent import extract_points, u_resolvent
from .utils.common import (
    DEFAULT_CAP,
    DEFAULT_FORMAT,
    DEFAULT_LOG_LEVEL,
    DEFAULT_SEED,
    EngineSettings,
    get_engine_settings,
    resolve_setting,
)
from .utils.errors import (
    CertificateSchemaError,
    NonHomogeneousError,
    NullsatzError,
    PolynomialParseError,
    RetryExhaustedError,
    SizeLimitError,
    UnknownVariableError,
    UnsupportedInputError,
)
from .utils.file_logger import end_logging_session, get_file_logger, start_logging_session
from .utils.file_utils import read_text_input, save_csv

logger = logging.getLogger(__name__)

COMMANDS = ("resolvent", "hentzelt", "solve", "wnss", "radical", "member", "hilbert", "wpnss", "certify-check")
DEFAULT_NU = list(range(0, 6))

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_RETRY = 4


class JobSpec(BaseModel):
    """One CLI invocation."""
    command: Literal["resolvent", "hentzelt", "solve", "wnss", "radical", "member",
                     "hilbert", "wpnss", "certify-check"]
    input_path: str
    seed: int = DEFAULT_SEED
    cap: int = Field(default=DEFAULT_CAP, ge=0)
    nu: Optional[List[int]] = None
    format: Literal["json", "text"] = "json"
    method: Literal["uresolvent", "backsub"] = "uresolvent"
    minimize: bool = False
    csv: Optional[str] = None


@dataclass
class JobOutcome:
    exit_code: int
    stdout: str = ""
    stderr: str = ""
    report: Optional[Dict[str, Any]] = None


def parse_nu(text: str) -> List[int]:
    """Parse ``"3"``, ``"0..5"`` or ``"0,1,2"`` into a list of degrees."""
    text = text.strip()
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            values = list(range(int(low), int(high) + 1))
        else:
            values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"invalid degree range {text!r}") from None
    if not values or any(v < 0 for v in values):
        raise ValueError(f"invalid degree range {text!r}")
    return values


def _nu_arg(text: str) -> List[int]:
    try:
        return parse_nu(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def error_document(error: BaseException) -> str:
    doc: Dict[str, Any] = {"error": type(error).__name__, "message": str(error)}
    if isinstance(error, PolynomialParseError):
        doc["position"] = error.position
        if error.line is not None:
            doc["line"] = error.line
    return json.dumps(doc, sort_keys=True)


def _require_query(problem: Problem, command: str):
    if problem.query is None:
        raise PolynomialParseError(f"{command} needs a '? <poly>' query line")
    return problem.query


def _dispatch(job: JobSpec, problem: Problem, settings: EngineSettings,
              reporter: ReportGenerator) -> Tuple[int, Dict[str, Any], Optional[HilbertFunctionTable]]:
    ideal = Ideal(problem.ctx, problem.generators)
    command = job.command

    if command == "resolvent":
        chain = kronecker_resolvent(ideal, job.seed, settings=settings)
        return EXIT_OK, reporter.resolvent_report(chain), None

    if command == "hentzelt":
        chain = hentzelt_chain(ideal, job.seed, settings=settings)
        return EXIT_OK, reporter.hentzelt_report(chain), None

    if command == "solve":
        if job.method == "backsub":
            chain = kronecker_resolvent(ideal, job.seed, settings=settings)
            result = back_substitute(chain, ideal)
            if result.positive_dimensional:
                raise UnsupportedInputError("the system has infinitely many zeros")
            points = [p.to_dict() for p in result.points]
            return EXIT_OK, reporter.solve_report("backsub", points, backsub=result), None
        ur = u_resolvent(ideal, job.seed)
        if ur.positive_dimensional:
            raise UnsupportedInputError("the system has infinitely many zeros")
        log: List[dict] = []
        points = [p.to_dict() for p in extract_points(ur, log)]
        return EXIT_OK, reporter.solve_report("uresolvent", points, ur=ur, log=log), None

    if command == "wnss":
        result = weak_nss(ideal, job.seed, settings=settings)
        code = EXIT_OK if isinstance(result, Empty) else EXIT_NEGATIVE
        return code, reporter.wnss_report(result), None

    if command == "radical":
        f = _require_query(problem, command)
        cap = job.cap if job.minimize else None
        result = radical_membership(f, ideal, job.seed, minimize=job.minimize, cap=cap, settings=settings)
        code = EXIT_OK if isinstance(result, Yes) else EXIT_NEGATIVE
        return code, reporter.radical_report(result), None

    if command == "member":
        f = _require_query(problem, command)
        result = ideal_membership_bounded(f, ideal, job.cap)
        code = EXIT_OK if isinstance(result, Member) else EXIT_NEGATIVE
        return code, reporter.member_report(result), None

    if command == "hilbert":
        table = hilbert_table(ideal, job.nu or DEFAULT_NU)
        if job.csv:
            path = save_csv(table.to_frame(), job.csv)
            logger.info(f"💾 Hilbert function saved to {path}")
        return EXIT_OK, reporter.hilbert_report(table), table

    if command == "wpnss":
        result = weak_projective_nss(ideal, job.seed, settings=settings)
        code = EXIT_OK if isinstance(result, NoProjectiveZeros) else EXIT_NEGATIVE
        return code, reporter.wpnss_report(result), None

    raise UnsupportedInputError(f"unknown command {command}")


def certify_check(path: str, output_format: str = "json") -> JobOutcome:
    """
    Re-verify a certificate file against its embedded generators.

    Returns:
        Outcome with exit code 0 iff the identity holds, 2 on a schema violation
    """
    reporter = ReportGenerator()
    try:
        payload = json.loads(read_text_input(path))
        doc = CertificateDocument.load(payload)
        cert, ideal = doc.to_certificate()
        ok = verify_certificate(cert, ideal)
    except (json.JSONDecodeError, CertificateSchemaError, OSError) as e:
        logger.error(f"❌ Certificate file rejected: {e}")
        return JobOutcome(EXIT_PARSE, stderr=error_document(e))
    report = reporter.certify_report(doc, ok)
    logger.info("✅ Certificate verified" if ok else "❌ Certificate identity fails")
    text = reporter.render_json(report) if output_format == "json" else reporter.render_text(report)
    return JobOutcome(EXIT_OK if ok else EXIT_NEGATIVE, stdout=text, report=report)


def run(job: JobSpec, settings: Optional[EngineSettings] = None) -> JobOutcome:
    """Execute one job and return its exit code and rendered output."""
    if job.command == "certify-check":
        return certify_check(job.input_path, job.format)
    settings = settings or get_engine_settings()
    reporter = ReportGenerator()
    try:
        problem = parse_problem(read_text_input(job.input_path))
        code, report, table = _dispatch(job, problem, settings, reporter)
    except (PolynomialParseError, UnknownVariableError, OSError) as e:
        logger.error(f"❌ Input error: {e}")
        return JobOutcome(EXIT_PARSE, stderr=error_document(e))
    except (UnsupportedInputError, NonHomogeneousError, SizeLimitError) as e:
        logger.error(f"❌ Unsupported input: {e}")
        return JobOutcome(EXIT_UNSUPPORTED, stderr=error_document(e))
    except RetryExhaustedError as e:
        logger.error(f"❌ {e}")
        return JobOutcome(EXIT_RETRY, stderr=error_document(e))
    except NullsatzError as e:
        logger.error(f"❌ {job.command} failed: {e}")
        return JobOutcome(EXIT_NEGATIVE, stderr=error_document(e))

    if job.format == "json":
        text = reporter.render_json(report)
    else:
        text = reporter.render_text(report, table)
    return JobOutcome(code, stdout=text, report=report)


def _summary(outcome: JobOutcome) -> Dict[str, Any]:
    if outcome.report is None:
        return {"error": outcome.stderr}
    return {k: v for k, v in outcome.report.items() if k in ("answer", "complete_resolvent", "terminal", "r", "rho")}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('input', help="Problem file ('-' for stdin)")
    common.add_argument('--seed', type=int, help='Seed for generic coordinates (default: NULLSATZ_SEED or 0)')
    common.add_argument('--format', choices=['json', 'text'], help='Output format (default: NULLSATZ_FORMAT or json)')
    common.add_argument('--log-dir', help='Write session logs under this directory (default: NULLSATZ_LOG_DIR)')
    common.add_argument('--log-level', help='Console log level (default: NULLSATZ_LOG_LEVEL or INFO)')
    common.add_argument('--retry-cap', type=int, help='Linear changes to try before giving up')
    common.add_argument('--max-minors', type=int, help='Limit on minors enumerated per Hentzelt stage')

    parser = argparse.ArgumentParser(
        prog="nullsatz",
        description="Exact elimination and Nullstellensatz certificates",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    nullsatz resolvent macaulay.txt
    nullsatz hentzelt macaulay.txt --format text
    nullsatz solve circles.txt --method backsub
    nullsatz wnss inconsistent.txt
    nullsatz radical conics.txt --minimize --cap 4
    nullsatz member conics.txt --cap 5
    nullsatz hilbert forms.txt --nu 0..5 --csv results/hilbert.csv
    nullsatz wpnss forms.txt
    nullsatz certify-check certificate.json

Problem file:
    vars: x y
    x^2 + y^2 - 1
    x^2 + 4*y^2 - 1
    ? y

Environment Variables:
    NULLSATZ_SEED, NULLSATZ_CAP, NULLSATZ_RETRY_CAP, NULLSATZ_MAX_MINORS,
    NULLSATZ_FORMAT, NULLSATZ_LOG_LEVEL, NULLSATZ_LOG_DIR
        """
    )
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    subparsers.add_parser('resolvent', parents=[common], help='Complete resolvent with cofactors')
    subparsers.add_parser('hentzelt', parents=[common], help='Hentzelt minor-ideal chain')
    solve_parser = subparsers.add_parser('solve', parents=[common], help='Rational zeros of a zero-dimensional system')
    solve_parser.add_argument('--method', choices=['uresolvent', 'backsub'], default='uresolvent',
                              help='Point recovery route')
    subparsers.add_parser('wnss', parents=[common], help='Decide emptiness; certificate when empty')
    radical_parser = subparsers.add_parser('radical', parents=[common], help='Radical membership of the query')
    radical_parser.add_argument('--minimize', action='store_true', help='Search for a smaller exponent')
    radical_parser.add_argument('--cap', type=int, help='Degree cap for --minimize')
    member_parser = subparsers.add_parser('member', parents=[common], help='Degree-capped membership of the query')
    member_parser.add_argument('--cap', type=int, help='Cofactor degree cap (default: NULLSATZ_CAP or 8)')
    hilbert_parser = subparsers.add_parser('hilbert', parents=[common], help='Hilbert function of a homogeneous ideal')
    hilbert_parser.add_argument('--nu', type=_nu_arg, help="Degrees: '3', '0..5' or '0,1,2' (default 0..5)")
    hilbert_parser.add_argument('--csv', help='Also save the table as CSV')
    subparsers.add_parser('wpnss', parents=[common], help='Decide projective emptiness of a homogeneous ideal')
    subparsers.add_parser('certify-check', parents=[common], help='Verify a certificate JSON file')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI function."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK

    if not args.command:
        parser.print_help()
        return EXIT_PARSE

    level = str(resolve_setting(args.log_level, 'log_level', DEFAULT_LOG_LEVEL)).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    log_dir = resolve_setting(args.log_dir, 'log_dir')
    if log_dir:
        start_logging_session(log_dir, session_name=args.command)

    try:
        job = JobSpec(
            command=args.command,
            input_path=args.input,
            seed=resolve_setting(args.seed, 'seed', DEFAULT_SEED),
            cap=resolve_setting(getattr(args, 'cap', None), 'cap', DEFAULT_CAP),
            nu=getattr(args, 'nu', None),
            format=resolve_setting(args.format, 'format', DEFAULT_FORMAT),
            method=getattr(args, 'method', 'uresolvent'),
            minimize=getattr(args, 'minimize', False),
            csv=getattr(args, 'csv', None),
        )
    except ValidationError as e:
        sys.stderr.write(json.dumps({"error": "ValidationError", "message": str(e)}, sort_keys=True) + "\n")
        end_logging_session()
        return EXIT_PARSE

    file_logger = get_file_logger()
    try:
        logger.info(f"🚀 nullsatz {job.command} on {job.input_path}")
        if file_logger:
            file_logger.log_job_start(job.command, job.input_path, job.model_dump(exclude={'command', 'input_path'}))
        settings = get_engine_settings(retry_cap=args.retry_cap, max_minors=args.max_minors)
        outcome = run(job, settings)
        if outcome.stdout:
            print(outcome.stdout)
        if outcome.stderr:
            sys.stderr.write(outcome.stderr + "\n")
            if file_logger:
                file_logger.log_error(job.command, job.input_path, outcome.stderr)
        if file_logger:
            file_logger.log_job_result(job.command, outcome.exit_code, _summary(outcome))
        return outcome.exit_code
    except KeyboardInterrupt:
        logger.info("⚠️  Operation cancelled by user")
        return EXIT_NEGATIVE
    finally:
        end_logging_session()


if __name__ == "__main__":
    sys.exit(main())
