"""
Report records and their JSON / JSONL / CSV serialization.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, field as dc_field, fields
from datetime import datetime
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from .errors import BudgetExceeded, GenericityFailure, LeflabError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

STATUS_OK = "ok"
STATUS_MISMATCH = "mismatch"
STATUS_ERROR = "error"
STATUS_GENERICITY = "genericity-failure"
STATUS_BUDGET = "budget-exceeded"


def status_for(exc: BaseException) -> str:
    if isinstance(exc, GenericityFailure):
        return STATUS_GENERICITY
    if isinstance(exc, BudgetExceeded):
        return STATUS_BUDGET
    return STATUS_ERROR


@dataclass
class ReportRecord:
    """One analysis of one algebra: inputs, computed data, predictions and their comparison."""
    command: str
    input: Dict[str, Any]
    field: str
    modulus: Optional[int]
    seed: int
    hvector: Optional[List[int]] = None
    loci: List[Dict[str, Any]] = dc_field(default_factory=list)
    locus: Optional[Dict[str, Any]] = None
    wlp: Optional[Dict[str, Any]] = None
    jordan: Optional[Dict[str, Any]] = None
    predictions: Dict[str, Any] = dc_field(default_factory=dict)
    comparisons: List[Dict[str, Any]] = dc_field(default_factory=list)
    mismatches: List[Dict[str, Any]] = dc_field(default_factory=list)
    status: str = STATUS_OK
    error: Optional[Dict[str, str]] = None
    extras: Dict[str, Any] = dc_field(default_factory=dict)
    timings: Dict[str, Any] = dc_field(default_factory=dict)

    def compare(self, quantity: str, computed: Any, predicted: Any) -> bool:
        match = computed == predicted
        entry = {"quantity": quantity, "computed": computed, "predicted": predicted, "match": match}
        self.comparisons.append(entry)
        if not match:
            self.mismatches.append(entry)
            if self.status == STATUS_OK:
                self.status = STATUS_MISMATCH
            logger.warning(f"{self.command} {self.input}: {quantity} computed {computed}, predicted {predicted}")
        return match

    def compare_locus(self, label: str, prediction, empty: bool, codim: int, degree: Optional[int]) -> bool:
        """Compare a Prediction against computed emptiness, codimension and (when predicted) degree."""
        ok = self.compare(f"{label}.empty", empty, prediction.empty)
        if not prediction.empty and not empty:
            ok = self.compare(f"{label}.codim", codim, prediction.codim) and ok
            if prediction.degree is not None:
                ok = self.compare(f"{label}.degree", degree, prediction.degree) and ok
        return ok

    def record_error(self, exc: BaseException) -> None:
        self.status = status_for(exc)
        self.error = {"type": type(exc).__name__, "message": str(exc)}

    def time(self, stage: str, seconds: float) -> None:
        self.timings[stage] = round(seconds, 6)

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportRecord":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["schema_version"] = SCHEMA_VERSION
        data["timings"] = dict(self.timings)
        return data


def new_record(command: str, input: Dict[str, Any], field, seed: int) -> ReportRecord:
    record = ReportRecord(command=command, input=input, field=str(field), modulus=field.modulus, seed=seed)
    record.timings["generated_at"] = datetime.now().isoformat(timespec="seconds")
    return record


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, default=str)


def save_report(records: Iterable[ReportRecord], path: str) -> None:
    """Write a single record as an object, several as a list."""
    records = list(records)
    payload = records[0].to_dict() if len(records) == 1 else [r.to_dict() for r in records]
    with open(path, "w") as f:
        f.write(dumps(payload))
        f.write("\n")
    logger.info(f"Report saved to {path}")


def strip_timings(data: Dict[str, Any]) -> Dict[str, Any]:
    return {k: v for k, v in data.items() if k != "timings"}


def records_to_frame(records: Iterable[ReportRecord]) -> pd.DataFrame:
    """One row per per-degree locus report (one row per record when there are none); timings excluded."""
    rows = []
    for r in records:
        base = {
            "command": r.command,
            "input": json.dumps(r.input, sort_keys=True, default=str),
            "field": r.field,
            "seed": r.seed,
            "hvector": ",".join(str(v) for v in r.hvector) if r.hvector else "",
            "status": r.status,
            "mismatches": len(r.mismatches),
        }
        if not r.loci:
            rows.append(base)
            continue
        for locus in r.loci:
            row = dict(base)
            row.update({f"locus_{k}": (json.dumps(v) if isinstance(v, list) else v) for k, v in locus.items()})
            rows.append(row)
    return pd.DataFrame(rows)


def save_csv(records: Iterable[ReportRecord], path: str) -> None:
    records_to_frame(records).to_csv(path, index=False)
    logger.info(f"CSV saved to {path}")


def read_jsonl(path: str) -> List[Dict[str, Any]]:
    """Records of a JSONL file; an unparsable (interrupted) line is skipped."""
    records = []
    if not os.path.exists(path):
        return records
    with open(path, "r") as f:
        for number, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError:
                logger.warning(f"{path}:{number}: skipping unparsable record")
    return records


class JsonlWriter:
    """Append-only JSONL sink, flushed after every record."""

    def __init__(self, path: str):
        self.path = path
        needs_newline = False
        if os.path.exists(path) and os.path.getsize(path) > 0:
            with open(path, "rb") as f:
                f.seek(-1, os.SEEK_END)
                needs_newline = f.read(1) != b"\n"
        self._file = open(path, "a")
        if needs_newline:
            self._file.write("\n")

    def write(self, data: Dict[str, Any]) -> None:
        self._file.write(json.dumps(data, sort_keys=True, default=str))
        self._file.write("\n")
        self._file.flush()

    def close(self) -> None:
        self._file.close()

    def __enter__(self) -> "JsonlWriter":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def describe_error(exc: LeflabError) -> str:
    return f"{type(exc).__name__}: {exc}"
