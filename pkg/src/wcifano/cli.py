"""Command line front end.

Subcommands: check one candidate, enumerate a (dim, index, codim)
slice, verify a classification case, apply a transform.  Data rows go
to stdout; diagnostics and the enumeration summary go to stderr, so
stdout stays machine-parseable (one JSON record per line by default).

Exit codes: 0 success / all filters passed / verified; 1 filter
failure, transform error or refuted case; 2 malformed input; 3
inconclusive verification (weight cap touched).

The default enumeration weight cap is 4 * (dim + codim + index); the
environment variable WCI_DEFAULT_MAX_WEIGHT overrides it when
--max-weight is absent.
"""

from __future__ import annotations

import argparse
import os
import sys

from .core import Candidate, CandidateError, NotNormalized, new_candidate, normalize
from .enumerator import EnumerationQuery, InvalidQuery, enumerate_candidates
from .filters import (
    CALABI_YAU_PROFILE,
    FILTER_ORDER,
    FilterId,
    SMOOTH_FANO_PROFILE,
    run_all,
)
from .output import OutputRecord, encode_csv, encode_jsonl, encode_table
from .transforms import (
    TransformError,
    TransformKind,
    TransformTrace,
    hyperplane_section,
    unconize,
    wellformize,
)
from .verify import (
    Verdict,
    VerificationResult,
    VerifyCase,
    survey_codim,
    verify_case_i,
    verify_case_ii,
    verify_case_iii,
    verify_hypersurface_remark,
)

__all__ = ["main", "run"]

ENV_DEFAULT_CAP = "WCI_DEFAULT_MAX_WEIGHT"

_PROFILE_NAMES = {
    "smooth-fano": SMOOTH_FANO_PROFILE,
    "calabi-yau": CALABI_YAU_PROFILE,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags; keep 0 for --help.
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (CandidateError, InvalidQuery, ValueError) as exc:
        if isinstance(exc, TransformError) or isinstance(exc, NotNormalized):
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wcifano",
        description="Screen, enumerate and classify Fano weighted complete intersection candidates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run the filter profile on one candidate")
    p_check.add_argument("--weights", required=True, help="comma-separated positive integers")
    p_check.add_argument("--degrees", default="", help="comma-separated positive integers (may be empty)")
    p_check.add_argument("--profile", default="smooth-fano", help="smooth-fano, calabi-yau, or comma-separated filter ids")
    p_check.add_argument("--format", choices=("jsonl", "csv", "table"), default="jsonl")
    p_check.set_defaults(handler=_cmd_check)

    p_enum = sub.add_parser("enumerate", help="enumerate survivors for one (dim, index, codim) slice")
    p_enum.add_argument("--dim", type=int, required=True)
    p_enum.add_argument("--index", type=int, required=True)
    p_enum.add_argument("--codim", type=int, required=True)
    p_enum.add_argument("--max-weight", type=int, default=None)
    p_enum.add_argument("--profile", default="smooth-fano")
    p_enum.add_argument("--format", choices=("jsonl", "csv", "table"), default="jsonl")
    p_enum.add_argument("--workers", type=int, default=1)
    p_enum.set_defaults(handler=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="check a classification case against the enumeration")
    p_verify.add_argument("--case", required=True, choices=[c.value for c in VerifyCase])
    p_verify.add_argument("--dim", default=None, help="dimension or range A..B (case-specific default)")
    p_verify.add_argument("--index", default=None, help="index or range A..B (survey: single value)")
    p_verify.add_argument("--max-weight", type=int, default=None)
    p_verify.set_defaults(handler=_cmd_verify)

    p_tr = sub.add_parser("transform", help="apply a tuple surgery and print its trace")
    p_tr.add_argument("kind", choices=("wellformize", "unconize", "section"))
    p_tr.add_argument("--weights", required=True)
    p_tr.add_argument("--degrees", default="")
    p_tr.set_defaults(handler=_cmd_transform)

    return parser


def _parse_int_list(text: str, label: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            out.append(int(part))
        except ValueError:
            raise CandidateError(f"{label} entry {part!r} is not an integer") from None
    return tuple(out)


def _parse_profile(text: str) -> frozenset[FilterId]:
    if text in _PROFILE_NAMES:
        return _PROFILE_NAMES[text]
    ids = []
    by_value = {fid.value: fid for fid in FILTER_ORDER}
    for part in text.split(","):
        part = part.strip()
        if part not in by_value:
            raise ValueError(f"unknown filter id {part!r}")
        ids.append(by_value[part])
    return frozenset(ids)


def _parse_span(text: str, label: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"{label} range {text!r} is empty")
    return lo, hi


def _emit_records(records: list[OutputRecord], fmt: str, profile: frozenset[FilterId]) -> None:
    if fmt == "jsonl":
        lines = encode_jsonl(records)
    elif fmt == "csv":
        lines = encode_csv(records, profile)
    else:
        lines = encode_table(records)
    for line in lines:
        sys.stdout.write(line + "\n")


def _cmd_check(args) -> int:
    weights = _parse_int_list(args.weights, "weights")
    degrees = _parse_int_list(args.degrees, "degrees")
    profile = _parse_profile(args.profile)
    candidate = normalize(new_candidate(weights, degrees))
    report = run_all(candidate, profile)
    _emit_records([OutputRecord.from_report(report)], args.format, profile)
    return 0 if report.survives else 1


def _cmd_enumerate(args) -> int:
    profile = _parse_profile(args.profile)
    cap = args.max_weight
    if cap is None and os.environ.get(ENV_DEFAULT_CAP):
        cap = int(os.environ[ENV_DEFAULT_CAP])
    query = EnumerationQuery(
        n=args.dim, index=args.index, k=args.codim, max_weight=cap, profile=profile
    )
    if args.workers < 1:
        raise InvalidQuery(f"workers must be >= 1, got {args.workers}")
    result = enumerate_candidates(query, workers=args.workers)
    records = [OutputRecord.from_report(run_all(c, profile)) for c in result.survivors]
    _emit_records(records, args.format, profile)
    summary = (
        f"survivors={len(result.survivors)}"
        f" nodes={result.stats.nodes}"
        f" tested={result.stats.tested}"
        f" cap_touched={str(result.cap_touched).lower()}"
        f" complete_within_cap={str(result.complete_within_cap).lower()}"
        f" max_weight={query.max_weight}"
    )
    if result.prefix_infeasible:
        summary += " prefix_infeasible=true (codimension exceeds the admissible bound for this index)"
    print(summary, file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    cap = args.max_weight
    case = VerifyCase(args.case)
    if case is VerifyCase.CASE_I:
        n_range = _parse_span(args.dim, "dim") if args.dim else (2, 6)
        i_range = _parse_span(args.index, "index") if args.index else None
        result = verify_case_i(n_range, i_range, cap=cap if cap else 15)
    elif case is VerifyCase.CASE_II:
        n_range = _parse_span(args.dim, "dim") if args.dim else (2, 6)
        result = verify_case_ii(n_range, cap=cap if cap else 15)
    elif case is VerifyCase.CASE_III:
        n_range = _parse_span(args.dim, "dim") if args.dim else (3, 6)
        result = verify_case_iii(n_range, cap=cap if cap else 15)
    elif case is VerifyCase.HYPERSURFACE:
        n_range = _parse_span(args.dim, "dim") if args.dim else (3, 6)
        result = verify_hypersurface_remark(n_range, cap=cap if cap else 50)
    else:
        if args.dim is None or args.index is None:
            raise ValueError("survey needs --dim and --index")
        n_lo, n_hi = _parse_span(args.dim, "dim")
        i_lo, i_hi = _parse_span(args.index, "index")
        if n_lo != n_hi or i_lo != i_hi:
            raise ValueError("survey takes a single dimension and a single index")
        result = survey_codim(n_lo, i_lo, cap=cap if cap else 20)
    _print_verification(result)
    if result.verdict is Verdict.VERIFIED:
        return 0
    if result.verdict is Verdict.REFUTED:
        return 1
    return 3


def _print_verification(result: VerificationResult) -> None:
    print(f"case {result.case_id.value}  cap={result.cap}")
    for outcome in result.slices:
        line = (
            f"slice n={outcome.n} i={outcome.index} k={outcome.k}:"
            f" survivors={len(outcome.result.survivors)}"
            f" expected={len(outcome.expected)}"
            f" cap_touched={str(outcome.result.cap_touched).lower()}"
            f" status={outcome.status.value}"
        )
        if outcome.counterexample is not None:
            line += (
                f" counterexample=({','.join(map(str, outcome.counterexample.weights))};"
                f"{','.join(map(str, outcome.counterexample.degrees))})"
            )
        print(line)
    for note in result.notes:
        print(f"note: {note}")
    print(f"verdict: {result.verdict.value}")


def _cmd_transform(args) -> int:
    weights = _parse_int_list(args.weights, "weights")
    degrees = _parse_int_list(args.degrees, "degrees")
    candidate = new_candidate(weights, degrees)
    if args.kind == "wellformize":
        trace = wellformize(candidate)
    elif args.kind == "unconize":
        trace = unconize(candidate)
    else:
        trace = hyperplane_section(candidate)
    _print_trace(trace)
    return 0


def _print_trace(trace: TransformTrace) -> None:
    def fmt(c: Candidate) -> str:
        return (
            f"weights={','.join(map(str, c.weights))}"
            f" degrees={','.join(map(str, c.degrees)) if c.degrees else '-'}"
        )

    print(f"transform: {trace.kind.value}")
    print(f"before: {fmt(trace.before)}")
    for number, step in enumerate(trace.steps, start=1):
        if trace.kind is TransformKind.WELLFORMIZE:
            positions = ",".join(map(str, step.divided_positions))
            print(f"step {number}: divide weights at positions {positions} and all degrees by {step.factor}")
        elif trace.kind is TransformKind.UNCONIZE:
            print(
                f"step {number}: remove degree at position {step.degree_pos} matching "
                f"weight at position {step.weight_pos} (value {step.value})"
            )
        else:
            print(f"step {number}: drop unit weight at position {step.removed_pos}")
    print(f"after: {fmt(trace.after)}")
