"""Flat report records and their CSV/JSON serialization.

Every suite emits :class:`BoundReport` rows with one fixed column order so
that sweeps from different suites concatenate cleanly:

    suite, theorem_id, p, family, size_A, size_B, size_C, m,
    lhs, rhs, ratio, holds, exponent, seed

CSV uses RFC-4180 quoting (CRLF row endings); JSON mirrors the rows as an
array of flat objects with sorted keys.  Serialization is deterministic:
identical records give byte-identical files.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["BoundReport", "COLUMNS", "sort_records", "write_csv", "write_json"]

COLUMNS = [
    "suite",
    "theorem_id",
    "p",
    "family",
    "size_A",
    "size_B",
    "size_C",
    "m",
    "lhs",
    "rhs",
    "ratio",
    "holds",
    "exponent",
    "seed",
]


@dataclass(frozen=True)
class BoundReport:
    """One evaluation record: exact sides, their ratio, and a pass flag.

    ``holds`` is None for ratio-only statements (no explicit constant);
    ``exponent`` is the empirical growth exponent log(max side)/log|A| - 1,
    or None when |A| <= 1 makes it undefined.
    """

    suite: str
    theorem_id: str
    p: int | None = None
    family: str = ""
    size_a: int | None = None
    size_b: int | None = None
    size_c: int | None = None
    m: int | None = None
    lhs: object = None  # int, Fraction or float
    rhs: object = None  # Fraction or float
    ratio: float | None = None
    holds: bool | None = None
    exponent: float | None = None
    seed: int | None = None

    def sort_key(self):
        return (
            self.suite,
            self.theorem_id,
            self.p if self.p is not None else -1,
            self.seed if self.seed is not None else -1,
            self.family,
            self.size_a if self.size_a is not None else -1,
            self.size_b if self.size_b is not None else -1,
            self.size_c if self.size_c is not None else -1,
        )


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value)
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _row(rec: BoundReport) -> list[str]:
    return [
        rec.suite,
        rec.theorem_id,
        _fmt(rec.p),
        rec.family,
        _fmt(rec.size_a),
        _fmt(rec.size_b),
        _fmt(rec.size_c),
        _fmt(rec.m),
        _fmt(rec.lhs),
        _fmt(rec.rhs),
        _fmt(rec.ratio),
        _fmt(rec.holds),
        _fmt(rec.exponent),
        _fmt(rec.seed),
    ]


def sort_records(records) -> list[BoundReport]:
    return sorted(records, key=BoundReport.sort_key)


def write_csv(records, path) -> None:
    records = sort_records(records)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")
        writer.writerow(COLUMNS)
        for rec in records:
            writer.writerow(_row(rec))


def write_json(records, path) -> None:
    records = sort_records(records)
    payload = [dict(zip(COLUMNS, _row(rec))) for rec in records]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True, ensure_ascii=False)
        fh.write("\n")
