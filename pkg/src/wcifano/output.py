"""Flat output records and their JSONL / CSV / table encodings.

A record is self-contained: re-parsing a JSON line and re-running the
filters on its (weights, degrees) reproduces its verdict map.  Field
names and order are fixed: weights, degrees, dim, codim, fano_index,
verdicts, witnesses.  Witnesses appear for failing filters only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Candidate
from .filters import FILTER_ORDER, FilterId, FilterReport

__all__ = [
    "OutputRecord",
    "encode_csv",
    "encode_jsonl",
    "encode_table",
    "parse_jsonl_line",
    "profile_columns",
]

RECORD_FIELDS = ("weights", "degrees", "dim", "codim", "fano_index", "verdicts", "witnesses")


@dataclass(frozen=True)
class OutputRecord:
    weights: tuple[int, ...]
    degrees: tuple[int, ...]
    dim: int
    codim: int
    fano_index: int
    verdicts: dict
    witnesses: dict

    @classmethod
    def from_report(cls, report: FilterReport) -> "OutputRecord":
        c = report.candidate
        verdicts = {v.filter_id.value: v.passed for v in report.verdicts}
        witnesses = {
            v.filter_id.value: v.witness
            for v in report.verdicts
            if not v.passed and v.witness is not None
        }
        return cls(
            weights=c.weights,
            degrees=c.degrees,
            dim=c.dim,
            codim=c.codim,
            fano_index=sum(c.weights) - sum(c.degrees),
            verdicts=verdicts,
            witnesses=witnesses,
        )

    @property
    def candidate(self) -> Candidate:
        return Candidate(self.weights, self.degrees)

    def to_json_line(self) -> str:
        payload = {
            "weights": list(self.weights),
            "degrees": list(self.degrees),
            "dim": self.dim,
            "codim": self.codim,
            "fano_index": self.fano_index,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
        }
        return json.dumps(payload, separators=(",", ":"))


def parse_jsonl_line(line: str) -> OutputRecord:
    data = json.loads(line)
    return OutputRecord(
        weights=tuple(data["weights"]),
        degrees=tuple(data["degrees"]),
        dim=data["dim"],
        codim=data["codim"],
        fano_index=data["fano_index"],
        verdicts=data["verdicts"],
        witnesses=data["witnesses"],
    )


def profile_columns(profile: frozenset[FilterId]) -> list[str]:
    """Filter column names for this profile, in canonical order."""
    return [fid.value for fid in FILTER_ORDER if fid in profile]


def encode_jsonl(records: list[OutputRecord]) -> list[str]:
    return [r.to_json_line() for r in records]


def encode_csv(records: list[OutputRecord], profile: frozenset[FilterId]) -> list[str]:
    """Header plus one row per record; tuple cells are space-separated."""
    columns = ["weights", "degrees", "dim", "codim", "fano_index", *profile_columns(profile)]
    lines = [",".join(columns)]
    for r in records:
        row = [
            " ".join(map(str, r.weights)),
            " ".join(map(str, r.degrees)),
            str(r.dim),
            str(r.codim),
            str(r.fano_index),
        ]
        row.extend(str(r.verdicts.get(name, "")).lower() for name in profile_columns(profile))
        lines.append(",".join(row))
    return lines


def encode_table(records: list[OutputRecord]) -> list[str]:
    """Fixed-width text table with a verdict summary column."""
    headers = ["weights", "degrees", "dim", "codim", "index", "result"]
    rows = []
    for r in records:
        failing = [name for name, ok in r.verdicts.items() if not ok]
        result = "pass" if not failing else "fail: " + ",".join(failing)
        rows.append(
            [
                "(" + ",".join(map(str, r.weights)) + ")",
                "(" + ",".join(map(str, r.degrees)) + ")",
                str(r.dim),
                str(r.codim),
                str(r.fano_index),
                result,
            ]
        )
    widths = [
        max(len(headers[col]), *(len(row[col]) for row in rows)) if rows else len(headers[col])
        for col in range(len(headers))
    ]
    lines = [
        "  ".join(headers[col].ljust(widths[col]) for col in range(len(headers))).rstrip(),
        "  ".join("-" * widths[col] for col in range(len(headers))).rstrip(),
    ]
    for row in rows:
        lines.append("  ".join(row[col].ljust(widths[col]) for col in range(len(headers))).rstrip())
    return lines
