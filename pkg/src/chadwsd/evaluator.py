"""Precision against gold sense annotations, Table-style reports and traces."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .disambiguator import UNKNOWN_RANK, run_chain
from .errors import AlignmentError, FormatError
from .lexicon import CONTENT_POS, Lexicon, PosTag, format_pos_filter, parse_pos_filter
from .measures import MeasureKind

TABLE_COLUMNS = ("File", "Words", "Dice", "Jaccard", "Overlap", "WN1")
_MEASURE_COLUMNS = (("Dice", MeasureKind.DICE), ("Jaccard", MeasureKind.JACCARD),
                    ("Overlap", MeasureKind.OVERLAP))
NA = "NA"


@dataclass
class PrecisionReport:
    file_label: str
    pos_filter: frozenset
    evaluated: int
    correct: int
    precision: Optional[float]
    per_measure: dict = field(default_factory=dict)
    baseline_precision: Optional[float] = None

    @property
    def defined(self) -> bool:
        return self.precision is not None

    def to_dict(self) -> dict:
        return {"file": self.file_label,
                "pos": format_pos_filter(self.pos_filter),
                "evaluated": self.evaluated, "correct": self.correct,
                "precision": self.precision,
                "per_measure": {k.value: v for k, v in
                                sorted(self.per_measure.items(), key=lambda kv: kv[0].value)},
                "baseline": self.baseline_precision}

    @classmethod
    def from_dict(cls, d) -> "PrecisionReport":
        return cls(d["file"], parse_pos_filter(d["pos"]), d["evaluated"],
                   d["correct"], d["precision"],
                   {MeasureKind.parse(k): v for k, v in d["per_measure"].items()},
                   d["baseline"])


@dataclass(frozen=True)
class ProgressPoint:
    index: int
    running_precision: float


def _align(assignments, gold, pos_filter):
    if pos_filter is not None:
        gold = [t for t in gold if t.pos in pos_filter]
    if len(assignments) != len(gold):
        raise AlignmentError(
            f"{len(assignments)} assignments for {len(gold)} gold tokens")
    return list(zip(assignments, gold))


def _outcomes(assignments, gold, pos_filter, include_unknown):
    """True/False per evaluated token, in order."""
    out = []
    for a, g in _align(assignments, gold, pos_filter):
        if g.gold_sense is None:
            continue
        if a.sense_rank == UNKNOWN_RANK and not include_unknown:
            continue
        out.append(a.sense_rank == g.gold_sense)
    return out


def precision(assignments: Sequence, gold: Sequence,
              pos_filter: Optional[Iterable[PosTag]] = None,
              file_label: str = "", include_unknown: bool = False) -> PrecisionReport:
    """Score assignments against gold tokens.

    ``gold`` is filtered by ``pos_filter`` (when given) before alignment.
    Rank-0 (unknown) assignments are left out of the denominator unless
    ``include_unknown`` is set, in which case they count as wrong.
    """
    pf = frozenset(pos_filter) if pos_filter is not None else None
    hits = _outcomes(assignments, gold, pf, include_unknown)
    n, k = len(hits), sum(hits)
    return PrecisionReport(file_label, pf if pf is not None else frozenset(CONTENT_POS),
                           n, k, k / n if n else None)


def progress_trace(assignments: Sequence, gold: Sequence,
                   pos_filter: Optional[Iterable[PosTag]] = None,
                   include_unknown: bool = False) -> list:
    pf = frozenset(pos_filter) if pos_filter is not None else None
    points, correct = [], 0
    for i, hit in enumerate(_outcomes(assignments, gold, pf, include_unknown), 1):
        correct += hit
        points.append(ProgressPoint(i, correct / i))
    return points


def run_all_measures(sentences, lexicon: Lexicon,
                     pos_filter: Iterable[PosTag] = CONTENT_POS,
                     scope: str = "document"):
    """Run CHAD under every measure plus the first-sense baseline.

    ``sentences`` is a list of token lists (a flat token list is treated as
    one sentence). Returns ``(gold, runs)``: the POS-filtered gold tokens and
    a dict mapping each MeasureKind, and ``"baseline"``, to a flat
    assignment list aligned with ``gold``.
    """
    if sentences and not isinstance(sentences[0], (list, tuple)):
        sentences = [sentences]
    pf = frozenset(pos_filter)
    gold = [t for s in sentences for t in s if t.pos in pf]
    runs = {}
    for kind in MeasureKind:
        runs[kind] = [a for s in run_chain(sentences, lexicon, kind, pf, scope)
                      for a in s]
    runs["baseline"] = [a for s in run_chain(sentences, lexicon, pos_filter=pf,
                                             baseline=True) for a in s]
    return gold, runs


def report_from_runs(gold, runs, pos_filter, file_label="",
                     measure: MeasureKind = MeasureKind.OVERLAP,
                     include_unknown: bool = False) -> PrecisionReport:
    pf = frozenset(pos_filter)
    per = {kind: precision(runs[kind], gold, pf, file_label, include_unknown)
           for kind in MeasureKind}
    base = precision(runs["baseline"], gold, pf, file_label, include_unknown)
    head = per[measure]
    return PrecisionReport(file_label, pf, head.evaluated, head.correct,
                           head.precision,
                           {k: r.precision for k, r in per.items()},
                           base.precision)


def compare_measures(sentences, lexicon: Lexicon,
                     pos_filter: Iterable[PosTag] = CONTENT_POS,
                     file_label: str = "", measure: MeasureKind = MeasureKind.OVERLAP,
                     scope: str = "document",
                     include_unknown: bool = False) -> PrecisionReport:
    """Dice, Jaccard, Overlap and first-sense precision on one corpus.

    The headline ``precision``/``correct`` fields use ``measure``.
    """
    gold, runs = run_all_measures(sentences, lexicon, pos_filter, scope)
    return report_from_runs(gold, runs, pos_filter, file_label, measure,
                            include_unknown)


def _fmt(x) -> str:
    return NA if x is None else repr(float(x))


def _parse(text: str):
    return None if text == NA else float(text)


def sort_reports(reports: Iterable[PrecisionReport]) -> list:
    """Descending by Overlap precision (undefined last), then by label."""
    def key(r):
        p = r.per_measure.get(MeasureKind.OVERLAP)
        return (p is None, -(p or 0.0), r.file_label)
    return sorted(reports, key=key)


def report_rows(reports: Iterable[PrecisionReport]) -> list:
    rows = [list(TABLE_COLUMNS)]
    for r in reports:
        rows.append([r.file_label, str(r.evaluated)]
                    + [_fmt(r.per_measure.get(k)) for _, k in _MEASURE_COLUMNS]
                    + [_fmt(r.baseline_precision)])
    return rows


def write_report_tsv(reports: Iterable[PrecisionReport], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = csv.writer(f, delimiter="\t", lineterminator="\n")
        w.writerows(report_rows(reports))


def read_report_tsv(path) -> list:
    """Parse a table written by :func:`write_report_tsv`.

    Only the table columns survive the round trip; ``correct`` and the
    headline precision are not part of the layout and come back as the
    Overlap column.
    """
    with open(path, encoding="utf-8", newline="") as f:
        rows = list(csv.reader(f, delimiter="\t"))
    if not rows or tuple(rows[0]) != TABLE_COLUMNS:
        raise FormatError(f"report header must be {'/'.join(TABLE_COLUMNS)}", path, 1)
    out = []
    for lineno, row in enumerate(rows[1:], 2):
        if len(row) != len(TABLE_COLUMNS):
            raise FormatError(f"expected {len(TABLE_COLUMNS)} columns", path, lineno)
        try:
            per = {k: _parse(v) for (_, k), v in zip(_MEASURE_COLUMNS, row[2:5])}
            out.append(PrecisionReport(row[0], frozenset(CONTENT_POS), int(row[1]), 0,
                                       per[MeasureKind.OVERLAP], per, _parse(row[5])))
        except ValueError as e:
            raise FormatError(str(e), path, lineno) from None
    return out


def write_report_json(reports: Iterable[PrecisionReport], path) -> None:
    Path(path).write_text(
        json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n",
        encoding="utf-8")


def read_report_json(path) -> list:
    return [PrecisionReport.from_dict(d)
            for d in json.loads(Path(path).read_text(encoding="utf-8"))]


def write_trace_tsv(points: Iterable[ProgressPoint], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write("index\tprecision\n")
        for p in points:
            f.write(f"{p.index}\t{p.running_precision!r}\n")


def read_trace_tsv(path) -> list:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [ProgressPoint(int(i), float(v))
            for i, v in (ln.split("\t") for ln in lines[1:] if ln)]
