"""
Census of random complete intersections: compute the non-Lefschetz locus for
every sorted degree tuple up to a bound and compare with the closed forms.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import pandas as pd
from tqdm import tqdm

from .artinian import random_ci
from .config import load_settings
from .errors import ConfigError, LeflabError
from .exactfield import FieldSpec, derive_seed
from .locus import non_lefschetz_locus
from .predict import Prediction, ci3_prediction, ci4_prediction, codim2_prediction, conjecture_prediction
from .reports import JsonlWriter, ReportRecord, describe_error, new_record, read_jsonl

logger = logging.getLogger(__name__)

CENSUS_VARIABLES = (2, 3, 4)


def degree_tuples(n: int, bound: int) -> List[Tuple[int, ...]]:
    return list(combinations_with_replacement(range(2, bound + 1), n))


def ci_prediction(degrees: Sequence[int]) -> Prediction:
    """The proven closed form for two, three or four variables, the conjectured one otherwise."""
    n = len(degrees)
    if n == 2:
        return codim2_prediction(degrees=degrees)
    if n == 3:
        return ci3_prediction(*degrees)
    if n == 4:
        return ci4_prediction(*degrees)
    return conjecture_prediction(degrees)


def analyze_ci(degrees: Sequence[int], field: FieldSpec, seed: int, minor_cap: Optional[int] = None,
               budget: Optional[int] = None, command: str = "census") -> ReportRecord:
    """Random complete intersection of the given type, its locus, and the comparison with the predictions."""
    degrees = tuple(sorted(degrees))
    record = new_record(command, {"degrees": list(degrees)}, field, seed)
    try:
        start = time.perf_counter()
        A = random_ci(degrees, field=field, seed=seed)
        record.hvector = A.hvector.to_list()
        record.time("build", time.perf_counter() - start)

        start = time.perf_counter()
        locus = non_lefschetz_locus(A, gorenstein_hint=True, seed=seed, minor_cap=minor_cap, budget=budget)
        record.time("locus", time.perf_counter() - start)
        record.loci = [r.to_dict() for r in locus.reports]
        report = locus.reports[0]

        prediction = ci_prediction(degrees)
        record.predictions["theorem"] = prediction.to_dict()
        record.compare_locus("theorem", prediction, report.empty, report.computed_codim, report.computed_degree)
        if len(degrees) >= 3:
            conjecture = conjecture_prediction(degrees)
            record.predictions["conjecture"] = conjecture.to_dict()
            record.compare_locus("conjecture", conjecture, report.empty, report.computed_codim,
                                 report.computed_degree)
        if report.expected_achieved and not report.empty:
            record.compare("expected_degree", report.computed_degree, report.expected_degree)
    except LeflabError as e:
        logger.error(f"{degrees}: {describe_error(e)}")
        record.record_error(e)
    return record


def _census_item(payload: Tuple[Tuple[int, ...], FieldSpec, int, Optional[int], Optional[int], str]) -> Dict[str, Any]:
    degrees, field, seed, minor_cap, budget, command = payload
    return analyze_ci(degrees, field, seed, minor_cap=minor_cap, budget=budget, command=command).to_dict()


def _check_census(n: int, bound: int) -> None:
    if n not in CENSUS_VARIABLES:
        raise ValueError(f"census supports n in {CENSUS_VARIABLES}, got {n}")
    cap = load_settings().census_cap
    if bound > cap:
        raise ConfigError("LEFLAB_CENSUS_CAP", bound, f"degree bound exceeds the safety cap {cap}")
    if bound < 2:
        raise ValueError(f"degree bound must be at least 2, got {bound}")


def census_records(n: int, bound: int, field: FieldSpec, base_seed: int, jobs: int = 1,
                   skip: Sequence[Tuple[int, ...]] = (), minor_cap: Optional[int] = None,
                   budget: Optional[int] = None, command: str = "census") -> Iterator[Dict[str, Any]]:
    """Records for every tuple not in ``skip``, in tuple order."""
    _check_census(n, bound)
    skip = set(tuple(s) for s in skip)
    todo = [t for t in degree_tuples(n, bound) if t not in skip]
    payloads = [(t, field, derive_seed(base_seed, "census", t), minor_cap, budget, command) for t in todo]
    if jobs <= 1:
        for payload in tqdm(payloads, desc=f"{command} n={n}", unit="tuple"):
            yield _census_item(payload)
        return
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        results = executor.map(_census_item, payloads, chunksize=1)
        for data in tqdm(results, total=len(payloads), desc=f"{command} n={n}", unit="tuple"):
            yield data


def census_sweep(n: int, bound: int, field: FieldSpec, base_seed: int, jobs: int = 1,
                 out: str = "census.jsonl", minor_cap: Optional[int] = None,
                 budget: Optional[int] = None) -> str:
    """Append one JSONL record per sorted tuple to ``out``, skipping tuples already present."""
    done = [tuple(r["input"]["degrees"]) for r in read_jsonl(out)
            if r.get("input", {}).get("degrees") and len(r["input"]["degrees"]) == n]
    if done:
        logger.info(f"resuming {out}: {len(done)} tuple(s) already recorded")
    written = 0
    with JsonlWriter(out) as writer:
        for data in census_records(n, bound, field, base_seed, jobs=jobs, skip=done,
                                   minor_cap=minor_cap, budget=budget):
            writer.write(data)
            written += 1
    logger.info(f"census n={n} bound={bound}: {written} new record(s) in {out}")
    return out


def summarize_census(path: str) -> pd.DataFrame:
    """Counts per n and regime: records, matches, mismatches and failures."""
    rows = []
    for r in read_jsonl(path):
        theorem = r.get("predictions", {}).get("theorem", {})
        rows.append({
            "n": len(r.get("input", {}).get("degrees", [])),
            "regime": theorem.get("regime", "n/a"),
            "status": r.get("status", "error"),
        })
    if not rows:
        return pd.DataFrame(columns=["n", "regime", "records", "matches", "mismatches", "failures"])
    frame = pd.DataFrame(rows)
    summary = frame.groupby(["n", "regime"]).agg(
        records=("status", "size"),
        matches=("status", lambda s: int((s == "ok").sum())),
        mismatches=("status", lambda s: int((s == "mismatch").sum())),
        failures=("status", lambda s: int((~s.isin(["ok", "mismatch"])).sum())),
    )
    return summary.reset_index()
