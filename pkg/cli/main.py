"""
Command-line entry point.

    crcartan validate   --surface mlc
    crcartan invariants --surface "..." --points pts.json
    crcartan classify   --surface @surface.json
    crcartan verify     --suite all --seed 42

Exit codes: 0 success, 1 failed check or rejected surface, 2 unparsable
input, 3 not model equivalent, 4 inconclusive.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config import settings
from config.logging_setup import get_logger, set_level
from expr.errors import CrCartanError, HypersurfaceValidationError, ParseError
from expr.parser import parse_expr
from expr.sampling import sample_points
from expr.scalars import ScalarMode, is_close, scalar_is_zero
from hypersurface.surface import Hypersurface, validate
from invariants.verdicts import InvariantValues, Verdict, classify, invariants_at
from invariants.identities import check_lifted
from invariants.lifted import S6_WEIGHTS
from invariants.primary import I0_expr, Q0_expr, V0_expr

from .jobs import JobSpec, describe_surface, load_points, resolve_surface, sample_spec
from .reports import error_report, make_report, render_text, to_json
from .suites import SURFACE_SUITES, run_suite

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_NOT_EQUIVALENT = 3
EXIT_INCONCLUSIVE = 4

VERDICT_EXIT = {
    Verdict.MODEL_EQUIVALENT: EXIT_OK,
    Verdict.NOT_MODEL_EQUIVALENT: EXIT_NOT_EQUIVALENT,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

Outcome = Tuple[str, Dict[str, Any], int]


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--surface",
        default="mlc",
        help="catalog name (mlc, tube-cone, ...), builtin:NAME, @file.json or a DSL expression",
    )
    parser.add_argument("--points", help="JSON file with a list of points")
    parser.add_argument("--samples", type=int, help="number of sample points")
    parser.add_argument("--seed", type=int, help="sampling seed (default: CRCARTAN_SEED)")
    parser.add_argument("--mode", choices=settings.SCALAR_MODES, default="exact")
    parser.add_argument("--output", choices=settings.OUTPUT_FORMATS, default="json")
    parser.add_argument("--orientation", type=int, choices=(1, -1), default=1)
    parser.add_argument("--precision", type=int, help="float-mode precision in bits")
    parser.add_argument("--timing", action="store_true", help="include wall-clock timing")
    parser.add_argument("--verbose", action="store_true", help="debug logging and full text tables")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crcartan",
        description="Exact verification of invariants of rigid Levi-rank-1 hypersurfaces in C^3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the hypotheses on a surface")
    _add_common(p)

    p = sub.add_parser("invariants", help="evaluate I0, V0, Q0 at points")
    _add_common(p)

    p = sub.add_parser("classify", help="decide equivalence to the light-cone model")
    _add_common(p)
    p.add_argument("--perturb-i0", dest="perturb_i0", help="DSL expression added to I0 (fault injection)")

    p = sub.add_parser("verify", help="run verification suites")
    _add_common(p)
    p.add_argument("--suite", choices=settings.VERIFY_SUITES, default="all")
    return parser


def _job(args: argparse.Namespace) -> JobSpec:
    return JobSpec(
        command=args.command,
        surface=args.surface,
        points_source=args.points,
        sample=sample_spec(args.samples, args.seed),
        mode=args.mode,
        output=args.output,
        suite=getattr(args, "suite", "all"),
        orientation=args.orientation,
        timing=args.timing,
        precision=args.precision,
        perturb_i0=getattr(args, "perturb_i0", None),
    )


def _validated(F, job: JobSpec) -> Tuple[Optional[Hypersurface], Dict[str, Any]]:
    result = validate(F, job.sample, raise_on_failure=False)
    if isinstance(result, Hypersurface):
        return result, result.report.to_dict()
    return None, result.to_dict()


def cmd_validate(job: JobSpec, F) -> Outcome:
    H, validation = _validated(F, job)
    if H is None:
        return "rejected", {"validation": validation}, EXIT_FAILURE
    return "validated", {"validation": validation}, EXIT_OK


def _point_ok(row: InvariantValues, mode: ScalarMode) -> bool:
    if not row.q0_real:
        return False
    for delta in row.deltas().values():
        if mode is ScalarMode.EXACT and not scalar_is_zero(delta):
            return False
        if mode is ScalarMode.FLOAT and not is_close(delta, 0):
            return False
    return True


def cmd_invariants(job: JobSpec, F) -> Outcome:
    H, validation = _validated(F, job)
    if H is None:
        return "rejected", {"validation": validation}, EXIT_FAILURE
    points = job.points
    if points is None:
        exprs = [*H.domain_quantities().values(), I0_expr(H), V0_expr(H), Q0_expr(H)]
        points = sample_points(exprs, job.sample, ("z1", "z2"))
    mode = ScalarMode(job.mode)
    rows = invariants_at(H, points, mode)
    ok = all(_point_ok(r, mode) for r in rows if isinstance(r, InvariantValues))
    lifted = check_lifted(H, job.sample)
    body: Dict[str, Any] = {
        "validation": validation,
        "points": [r.to_dict() for r in rows],
        "v0_normalization": {
            "asserted": "cbar2",
            "readings": list(S6_WEIGHTS),
            "checks": lifted.to_dict(),
        },
    }
    return ("ok" if ok else "mismatch"), body, EXIT_OK if ok else EXIT_FAILURE


def cmd_classify(job: JobSpec, F) -> Outcome:
    H, validation = _validated(F, job)
    if H is None:
        return "rejected", {"validation": validation}, EXIT_FAILURE
    perturbation = parse_expr(job.perturb_i0) if job.perturb_i0 else None
    verdict = classify(H, job.sample, perturb_i0=perturbation)
    body = {"validation": validation, "verdict": verdict.to_dict()}
    return verdict.verdict.value, body, VERDICT_EXIT[verdict.verdict]


def cmd_verify(job: JobSpec, F) -> Outcome:
    H, validation = _validated(F, job)
    body: Dict[str, Any] = {"validation": validation}
    if H is None and (job.suite in SURFACE_SUITES or job.suite == "all"):
        return "rejected", body, EXIT_FAILURE
    report = run_suite(job.suite, H, job.sample, job.orientation)
    body["checks"] = report.to_dict()
    body["failures"] = report.failures()
    if report.passed:
        return "passed", body, EXIT_OK
    logger.info("%d failing checks", len(body["failures"]))
    return "failed", body, EXIT_FAILURE


COMMANDS = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "classify": cmd_classify,
    "verify": cmd_verify,
}


def run(job: JobSpec) -> Dict[str, Any]:
    """Execute a job and return its report; never raises for user errors."""
    started = time.perf_counter()
    try:
        _, F = resolve_surface(job.surface)
        if job.points_source is not None:
            job.points = load_points(job.points_source)
        if job.perturb_i0:
            parse_expr(job.perturb_i0)
    except ParseError as exc:
        logger.info("parse error: %s", exc)
        return error_report(job, "ParseError", str(exc), EXIT_PARSE, position=exc.position)
    except (KeyError, OSError) as exc:
        return error_report(job, type(exc).__name__, str(exc).strip("'\""), EXIT_PARSE)

    try:
        status, body, code = COMMANDS[job.command](job, F)
    except HypersurfaceValidationError as exc:
        return error_report(job, "HypersurfaceValidationError", str(exc), EXIT_FAILURE)
    except CrCartanError as exc:
        logger.info("%s: %s", type(exc).__name__, exc)
        return error_report(job, type(exc).__name__, str(exc), EXIT_FAILURE)
    elapsed = time.perf_counter() - started if job.timing else None
    return make_report(job, status, body, code, describe_surface(F), elapsed)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_level("DEBUG")
    if args.precision is not None:
        settings.PRECISION_BITS = max(60, args.precision)
    job = _job(args)
    report = run(job)
    if job.output == "json":
        sys.stdout.write(to_json(report) + "\n")
    else:
        render_text(report, verbose=args.verbose)
    return report["exit_code"]


__all__ = [
    "COMMANDS",
    "EXIT_FAILURE",
    "EXIT_INCONCLUSIVE",
    "EXIT_NOT_EQUIVALENT",
    "EXIT_OK",
    "EXIT_PARSE",
    "build_parser",
    "cmd_classify",
    "cmd_invariants",
    "cmd_validate",
    "cmd_verify",
    "main",
    "run",
]
