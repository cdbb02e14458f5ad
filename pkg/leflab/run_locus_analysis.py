#!/usr/bin/env python3
"""
Command-line interface for non-Lefschetz locus analysis
"""

import argparse
import logging
import os
import sys
import time
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from leflab.artinian import (GradedAlgebra, HVector, LinearForm, build_algebra, ci_hvector,
                             gorenstein_from_dual_form, gorenstein_from_points, monomial_ci, random_ci)
from leflab.census import analyze_ci, census_records, census_sweep, ci_prediction, summarize_census
from leflab.config import Settings, load_settings, setup_logging
from leflab.errors import LeflabError, NonHomogeneousGenerator, ParseError
from leflab.exactfield import FieldSpec, derive_seed, make_rng
from leflab.lefjordan import (dual_partition, has_wlp, is_strong_lefschetz, jordan_type,
                              monomial_jordan_prediction)
from leflab.locus import (is_in_locus, middle_degree, monomial_radical_components, non_lefschetz_locus,
                          sample_membership)
from leflab.multipoly import parse_polynomial
from leflab.paper_suite import all_passed, list_checks, reproduce_paper_suite
from leflab.predict import (codim2_prediction, conjecture_prediction, dim_gor, gor3_prediction, is_si_sequence,
                            large_dn_case, monomial_locus_summary)
from leflab.reports import ReportRecord, STATUS_MISMATCH, new_record, save_csv, save_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


# --- input files ---

def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _split_generators(text: str, offset: int) -> List[Tuple[str, int]]:
    """Comma-separated pieces with the 0-based column where each starts."""
    pieces = []
    start = 0
    for k, ch in enumerate(text + ","):
        if ch == ",":
            piece = text[start:k]
            if piece.strip():
                pieces.append((piece, offset + start))
            start = k + 1
    return pieces


def parse_ideal_file(path: str, default_field: Optional[FieldSpec] = None) -> Dict[str, Any]:
    """
    Read an ideal file.

    Format::

        n=3
        field=fp:32003
        gens: x1^3, x2^3, x3^3

    ``field`` is optional; without it the generators are read over
    ``default_field`` (F_32003 when that is None). Several ``gens:`` lines append.
    Lines starting with ``#`` are comments.
    """
    n = None
    field = None
    pending: List[Tuple[str, int, int]] = []
    with open(path, "r") as f:
        for number, raw in enumerate(f, 1):
            line = _strip_comment(raw)
            if not line.strip():
                continue
            body = line.strip()
            if body.startswith("n="):
                try:
                    n = int(body[2:])
                except ValueError:
                    raise ParseError(f"invalid variable count {body[2:]!r}", number, line.index("n=") + 3)
                if n < 1:
                    raise ParseError("the variable count must be positive", number, line.index("n=") + 3)
            elif body.startswith("field="):
                try:
                    field = FieldSpec.parse(body[len("field="):])
                except LeflabError as e:
                    raise ParseError(str(e), number, line.index("field=") + 7)
            elif body.startswith("gens:"):
                offset = line.index("gens:") + len("gens:")
                for piece, column in _split_generators(line[offset:], offset):
                    pending.append((piece, number, column))
            else:
                raise ParseError(f"expected 'n=', 'field=' or 'gens:', got {body!r}", number, 1)
    if n is None:
        raise ParseError(f"{path}: missing 'n=' line")
    if not pending:
        raise ParseError(f"{path}: missing 'gens:' line")
    field = field or default_field or FieldSpec.prime()
    generators = []
    for piece, number, column in pending:
        try:
            poly = parse_polynomial(piece, n, field, prefixes=("x",), line=number)
        except ParseError as e:
            raise type(e)(e.message, number, None if e.column is None else e.column + column)
        if poly.homogeneous_degree() is None:
            raise NonHomogeneousGenerator(f"generator {piece.strip()!r} is not homogeneous", number, column + 1)
        generators.append(poly)
    return {"n": n, "field": field, "generators": generators}


def parse_points_file(path: str, default_field: Optional[FieldSpec] = None) -> Dict[str, Any]:
    """One point per line as comma-separated coordinates; an optional ``field=`` line."""
    field = None
    rows = []
    with open(path, "r") as f:
        for number, raw in enumerate(f, 1):
            line = _strip_comment(raw).strip()
            if not line:
                continue
            if line.startswith("field="):
                field = FieldSpec.parse(line[len("field="):])
                continue
            rows.append((number, [c.strip() for c in line.split(",")]))
    if not rows:
        raise ParseError(f"{path}: no points")
    field = field or default_field or FieldSpec.prime()
    points = []
    for number, coords in rows:
        if len(coords) != len(rows[0][1]):
            raise ParseError(f"point has {len(coords)} coordinates, expected {len(rows[0][1])}", number, 1)
        try:
            points.append([field.coerce(c) for c in coords])
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"invalid coordinate: {e}", number, 1)
    return {"field": field, "points": points}


def parse_degrees(text: str) -> Tuple[int, ...]:
    try:
        degrees = tuple(int(d) for d in text.split(",") if d.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not degrees or any(d < 1 for d in degrees):
        raise argparse.ArgumentTypeError(f"degrees must be positive, got {text!r}")
    return degrees


def parse_sweep(text: str) -> int:
    if not text.startswith("n="):
        raise argparse.ArgumentTypeError(f"expected n=<int>, got {text!r}")
    try:
        return int(text[2:])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n=<int>, got {text!r}")


# --- algebra selection ---

def _has_algebra(args) -> bool:
    return any(getattr(args, k, None) for k in ("ci", "monomial", "ideal", "points", "dual_form"))


def build_from_args(args, field: FieldSpec, settings: Settings) -> Tuple[GradedAlgebra, Dict[str, Any]]:
    """The algebra selected on the command line and the input echo for its record."""
    if args.ci:
        degrees = tuple(sorted(args.ci))
        A = random_ci(degrees, field=field, seed=derive_seed(settings.seed, "census", degrees))
        return A, {"ci": list(degrees)}
    if args.monomial:
        return monomial_ci(args.monomial, field=field), {"monomial": list(args.monomial)}
    if args.ideal:
        parsed = parse_ideal_file(args.ideal, default_field=field)
        A = build_algebra(parsed["n"], parsed["field"], parsed["generators"],
                          artinian_cap=settings.artinian_cap, name=os.path.basename(args.ideal))
        return A, {"ideal": args.ideal, "generators": A.generators_digest()}
    if args.points:
        if args.socle_degree is None:
            raise ParseError("--points needs --socle-degree")
        parsed = parse_points_file(args.points, default_field=field)
        A = gorenstein_from_points(parsed["points"], args.socle_degree, field=parsed["field"],
                                   seed=settings.seed)
        return A, {"points": args.points, "socle_degree": args.socle_degree, "generators": A.generators_digest()}
    if args.dual_form:
        if args.n is None:
            raise ParseError("--dual-form needs --n")
        form = parse_polynomial(args.dual_form, args.n, field, prefixes=("x",))
        A = gorenstein_from_dual_form(form)
        return A, {"dual_form": args.dual_form, "n": args.n}
    raise ParseError("no algebra given: use --ci, --monomial, --ideal, --points or --dual-form")


def _linear_form(args, A: GradedAlgebra) -> Optional[LinearForm]:
    if getattr(args, "linear_form", None):
        return LinearForm.parse(args.linear_form, A.n, A.field)
    return None


# --- subcommands ---

def run_hf(args, field, settings) -> List[ReportRecord]:
    A, echo = build_from_args(args, field, settings)
    record = new_record("hf", echo, A.field, settings.seed)
    record.hvector = A.hvector.to_list()
    record.extras["gorenstein"] = A.is_gorenstein()
    record.extras["socle_degree"] = A.socle_degree
    if args.ci:
        record.compare("hvector", record.hvector, ci_hvector(args.ci).to_list())
    print(f"h-vector of {A.label()}: {A.hvector}")
    return [record]


def run_wlp(args, field, settings) -> List[ReportRecord]:
    A, echo = build_from_args(args, field, settings)
    record = new_record("wlp", echo, A.field, settings.seed)
    record.hvector = A.hvector.to_list()
    ell = _linear_form(args, A)
    if ell is not None:
        failing = [i for i in range(A.socle_degree) if is_in_locus(A, i, ell)]
        record.wlp = {"verdict": not failing, "witness": ell.to_json(), "certified": True,
                      "trials": 1, "failing_degrees": failing}
        print(f"{ell.to_string()} is {'a' if not failing else 'not a'} weak Lefschetz element"
              + (f" (fails in degrees {failing})" if failing else ""))
        return [record]
    verdict = has_wlp(A, seed=settings.seed, trials=args.trials)
    record.wlp = verdict.to_dict()
    if verdict.verdict:
        print(f"WLP holds; witness {verdict.witness.to_string()}")
    else:
        certainty = "certified" if verdict.certified else "not certified"
        print(f"No weak Lefschetz element found ({certainty}): {verdict.reason}")
    return [record]


def _middle_report(locus, A: GradedAlgebra):
    target = middle_degree(A)
    return next((r for r in locus.reports if r.degree == target), locus.reports[0])


def _locus_record(args, field, settings, command: str) -> Tuple[ReportRecord, GradedAlgebra, Any]:
    A, echo = build_from_args(args, field, settings)
    record = new_record(command, echo, A.field, settings.seed)
    record.hvector = A.hvector.to_list()
    hint = not args.all_degrees and A.is_gorenstein()
    start = time.perf_counter()
    locus = non_lefschetz_locus(A, gorenstein_hint=hint, intersect=args.intersect, seed=settings.seed,
                                minor_cap=settings.minor_cap, budget=settings.gb_budget)
    record.time("locus", time.perf_counter() - start)
    record.loci = [r.to_dict() for r in locus.reports]
    record.locus = locus.to_dict()
    report = _middle_report(locus, A)
    if args.ci:
        prediction = ci_prediction(tuple(sorted(args.ci)))
        record.predictions["theorem"] = prediction.to_dict()
        record.compare_locus("theorem", prediction, report.empty, report.computed_codim, report.computed_degree)
    elif args.monomial:
        prediction = monomial_locus_summary(args.monomial)
        record.predictions["monomial"] = prediction.to_dict()
        record.compare_locus("monomial", prediction, report.empty, report.computed_codim, report.computed_degree)
    return record, A, locus


def run_locus(args, field, settings) -> List[ReportRecord]:
    record, A, locus = _locus_record(args, field, settings, "locus")
    for r in locus.reports:
        state = "empty" if r.empty else f"dim {r.computed_dimension}, degree {r.computed_degree}"
        flag = " (unsaturated)" if r.saturation_flag else ""
        print(f"  degree {r.degree} {r.shape[0]}x{r.shape[1]}: {state}{flag}")
    if locus.empty:
        print("Non-Lefschetz locus: empty")
    else:
        degree = "n/a" if locus.degree is None else locus.degree
        print(f"Non-Lefschetz locus: dim {locus.dimension}, degree {degree}")
    return [record]


def _all_supports(n: int):
    for size in range(1, n + 1):
        yield from combinations(range(1, n + 1), size)


def run_jordan(args, field, settings) -> List[ReportRecord]:
    A, echo = build_from_args(args, field, settings)
    record = new_record("jordan", echo, A.field, settings.seed)
    record.hvector = A.hvector.to_list()
    expected = dual_partition(A.hvector)
    if args.all_supports:
        if not args.monomial:
            raise ParseError("--all-supports needs --monomial")
        rows = []
        for support in _all_supports(A.n):
            ell = LinearForm.from_support(A.n, A.field, support)
            computed = jordan_type(A, ell)
            predicted = monomial_jordan_prediction(args.monomial, support)
            record.compare(f"jordan{list(support)}", computed.to_list(), predicted.to_list())
            rows.append({"support": list(support), "partition": computed.to_list(),
                         "strong_lefschetz": computed == expected})
            print(f"  support {list(support)}: {computed.exponent_notation()}")
        record.jordan = {"supports": rows, "dual_partition": expected.to_list()}
        return [record]
    ell = _linear_form(args, A) or LinearForm.random(A.n, A.field, make_rng(settings.seed, "jordan"))
    partition = jordan_type(A, ell)
    strong = is_strong_lefschetz(A, ell)
    record.jordan = {"linear_form": ell.to_json(), "partition": partition.to_list(),
                     "dual_partition": expected.to_list(), "strong_lefschetz": strong}
    record.compare("jordan.size", partition.size, A.dimension)
    print(f"Jordan type of {ell.to_string()}: {partition.exponent_notation()}"
          f" ({'strong Lefschetz' if strong else 'not strong Lefschetz'})")
    return [record]


def _hvector_predictions(h: HVector) -> Dict[str, Any]:
    predictions = {}
    if h[1] == 2:
        predictions["codim2"] = codim2_prediction(h=h).to_dict()
    if h[1] == 3 and h.is_symmetric():
        ok, g = is_si_sequence(h)
        predictions["si_sequence"] = {"si": ok, "g": g.to_list()}
        if ok:
            predictions["gorenstein"] = gor3_prediction(h).to_dict()
    if h[1] <= 3 and h.is_symmetric() and h.socle_degree % 2 == 1:
        predictions["dim_gor"] = dim_gor(h)
    return predictions


def run_predict(args, field, settings) -> List[ReportRecord]:
    if args.ci:
        degrees = tuple(sorted(args.ci))
        record = new_record("predict", {"ci": list(degrees)}, field, settings.seed)
        record.hvector = ci_hvector(degrees).to_list()
        record.predictions["theorem"] = ci_prediction(degrees).to_dict()
        if len(degrees) >= 3:
            record.predictions["conjecture"] = conjecture_prediction(degrees).to_dict()
        record.extras["large_dn_case"] = large_dn_case(degrees)
    elif args.monomial:
        record = new_record("predict", {"monomial": list(args.monomial)}, field, settings.seed)
        record.hvector = ci_hvector(args.monomial).to_list()
        record.predictions["monomial"] = monomial_locus_summary(args.monomial).to_dict()
        record.extras["radical_components"] = [sorted(t) for t in monomial_radical_components(args.monomial)]
    elif args.hvector:
        h = HVector(tuple(args.hvector))
        record = new_record("predict", {"hvector": h.to_list()}, field, settings.seed)
        record.hvector = h.to_list()
        record.predictions.update(_hvector_predictions(h))
    else:
        raise ParseError("predict needs --ci, --monomial or --hvector")
    for label, value in record.predictions.items():
        print(f"  {label}: {value}")
    return [record]


def run_verify(args, field, settings) -> List[ReportRecord]:
    if args.sweep is not None:
        records = [ReportRecord.from_dict(d) for d in census_records(
            args.sweep, args.max_degree, field, settings.seed, jobs=settings.jobs,
            minor_cap=settings.minor_cap, budget=settings.gb_budget, command="verify")]
        mismatched = sum(1 for r in records if r.status == STATUS_MISMATCH)
        failed = sum(1 for r in records if not r.ok and r.status != STATUS_MISMATCH)
        print(f"Verified {len(records)} tuple(s): {mismatched} mismatch(es), {failed} failure(s)")
        return records
    if args.ci:
        degrees = tuple(sorted(args.ci))
        record = analyze_ci(degrees, field, derive_seed(settings.seed, "census", degrees),
                            minor_cap=settings.minor_cap, budget=settings.gb_budget, command="verify")
        print(f"{list(degrees)}: {record.status}, {len(record.mismatches)} mismatch(es)")
        return [record]
    if args.monomial:
        record, A, locus = _locus_record(args, field, settings, "verify")
        components = monomial_radical_components(args.monomial)
        record.extras["radical_components"] = [sorted(t) for t in components]
        sampled = sample_membership(A, _middle_report(locus, A).degree, components,
                                    count=args.samples, seed=settings.seed)
        record.extras["membership"] = sampled
        record.compare("membership.discrepancies", len(sampled["discrepancies"]), 0)
        for support in _all_supports(A.n):
            ell = LinearForm.from_support(A.n, A.field, support)
            record.compare(f"jordan{list(support)}", jordan_type(A, ell).to_list(),
                           monomial_jordan_prediction(args.monomial, support).to_list())
        print(f"{list(args.monomial)}: {record.status}, {len(record.mismatches)} mismatch(es)")
        return [record]
    raise ParseError("verify needs --ci, --monomial or --sweep")


def run_paper(args, field, settings) -> int:
    if args.list:
        for name, description in list_checks():
            print(f"  {name:<24} {description}")
        return EXIT_OK
    rows = reproduce_paper_suite(field, seed=settings.seed, only=args.only)
    print(pd.DataFrame(rows).to_string(index=False))
    if args.out:
        pd.DataFrame(rows).to_json(args.out, orient="records", indent=2)
        print(f"\n✅ Suite complete! Table saved to: {args.out}")
    if all_passed(rows):
        return EXIT_OK
    if any(r["status"] == "fail" for r in rows):
        return EXIT_MISMATCH
    return EXIT_ERROR


def run_census(args, field, settings) -> int:
    out = args.out or f"census_n{args.n}.jsonl"
    census_sweep(args.n, args.bound, field, settings.seed, jobs=settings.jobs, out=out,
                 minor_cap=settings.minor_cap, budget=settings.gb_budget)
    print(f"\n✅ Census complete! Records saved to: {out}")
    if args.summary:
        print(summarize_census(out).to_string(index=False))
    return EXIT_OK


RECORD_COMMANDS = {
    "hf": run_hf,
    "wlp": run_wlp,
    "locus": run_locus,
    "jordan": run_jordan,
    "predict": run_predict,
    "verify": run_verify,
}


def exit_code(records: Sequence[ReportRecord]) -> int:
    if any(r.status == STATUS_MISMATCH for r in records):
        return EXIT_MISMATCH
    if any(not r.ok for r in records):
        return EXIT_ERROR
    return EXIT_OK


def save_records(records: Sequence[ReportRecord], out: str, fmt: str) -> None:
    if fmt == "csv":
        save_csv(records, out)
    else:
        save_report(records, out)


# --- parser ---

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="Base seed (default: LEFLAB_SEED or 0)")
    common.add_argument("--field", help="Coefficient field, q or fp:<prime> (default: LEFLAB_FIELD or fp:32003)")
    common.add_argument("--jobs", type=int, help="Worker processes for sweeps (default: LEFLAB_JOBS or 1)")
    common.add_argument("--minor-cap", type=int, help="Maximum number of maximal minors per degree")
    common.add_argument("--gb-budget", type=int, help="Maximum number of S-pair reductions")
    common.add_argument("--out", help="Output file")
    common.add_argument("--format", choices=["json", "csv"], default="json", help="Report format (default: json)")
    common.add_argument("--log-file", help="Also write logs to this file")
    common.add_argument("--verbose", "-v", action="store_true", help="Verbose output")
    return common


def _algebra_options() -> argparse.ArgumentParser:
    algebra = argparse.ArgumentParser(add_help=False)
    group = algebra.add_argument_group("algebra")
    group.add_argument("--ci", type=parse_degrees, help="Random complete intersection of these degrees, e.g. 2,2,3")
    group.add_argument("--monomial", type=parse_degrees, help="Monomial complete intersection, e.g. 2,2,3,3")
    group.add_argument("--ideal", help="Ideal file (n=, field=, gens: lines)")
    group.add_argument("--points", help="Point file for a Gorenstein quotient of the coordinate ring")
    group.add_argument("--socle-degree", type=int, help="Socle degree for --points")
    group.add_argument("--dual-form", help="Dual form F in x1..xn; the algebra is R/Ann(F)")
    group.add_argument("--n", type=int, help="Number of variables for --dual-form")
    return algebra


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Non-Lefschetz loci of graded artinian algebras",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Locus of a random complete intersection of type (2,2,2,2): 20 points
  python analyze_locus.py locus --ci 2,2,2,2 --out locus_2222.json

  # Jordan types of every support of the monomial complete intersection (2,2,2,2)
  python analyze_locus.py jordan --monomial 2,2,2,2 --all-supports

  # Compare every type with d3 <= 5 in three variables against the closed forms
  python analyze_locus.py verify --sweep n=3 --max-degree 5

  # Resumable census of four-variable complete intersections
  python analyze_locus.py census --n 4 --bound 3 --out census_n4.jsonl --summary

  # Run one named check of the reproducibility suite
  python analyze_locus.py paper --only monomial-444
        """
    )
    common = _common_options()
    algebra = _algebra_options()
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("hf", parents=[common, algebra], help="Hilbert function")

    wlp = sub.add_parser("wlp", parents=[common, algebra], help="Weak Lefschetz property")
    wlp.add_argument("--linear-form", help="Test this linear form, e.g. 'x1 + 2*x2'")
    wlp.add_argument("--trials", type=int, default=5, help="Random linear forms to try (default: 5)")

    locus = sub.add_parser("locus", parents=[common, algebra], help="Non-Lefschetz locus")
    locus.add_argument("--all-degrees", action="store_true",
                       help="Compute every degree even for a Gorenstein algebra")
    locus.add_argument("--intersect", action="store_true", help="Intersect the per-degree ideals")

    jordan = sub.add_parser("jordan", parents=[common, algebra], help="Jordan type of a multiplication map")
    jordan.add_argument("--linear-form", help="Linear form (default: random)")
    jordan.add_argument("--all-supports", action="store_true",
                        help="Every support of a monomial complete intersection, checked against the prediction")

    predict = sub.add_parser("predict", parents=[common], help="Closed-form predictions only")
    predict.add_argument("--ci", type=parse_degrees, help="Complete intersection degrees")
    predict.add_argument("--monomial", type=parse_degrees, help="Monomial complete intersection degrees")
    predict.add_argument("--hvector", type=parse_degrees, help="h-vector, e.g. 1,3,6,7,6,3,1")

    verify = sub.add_parser("verify", parents=[common, algebra], help="Computation against prediction")
    verify.add_argument("--sweep", type=parse_sweep, help="Sweep all types in n variables, e.g. n=3")
    verify.add_argument("--max-degree", type=int, default=4, help="Largest degree in a sweep (default: 4)")
    verify.add_argument("--samples", type=int, default=200,
                        help="Sampled linear forms for monomial membership (default: 200)")
    verify.set_defaults(all_degrees=False, intersect=False)

    paper = sub.add_parser("paper", parents=[common], help="Reproducibility suite")
    paper.add_argument("--list", action="store_true", help="List the named checks")
    paper.add_argument("--only", action="append", help="Run only this check (repeatable)")

    census = sub.add_parser("census", parents=[common], help="Resumable census of complete intersections")
    census.add_argument("--n", type=int, required=True, choices=[2, 3, 4], help="Number of variables")
    census.add_argument("--bound", type=int, required=True, help="Largest degree")
    census.add_argument("--summary", action="store_true", help="Print a summary table afterwards")
    return parser


def resolve_settings(args) -> Settings:
    return load_settings().with_overrides(
        seed=args.seed,
        field=args.field,
        jobs=args.jobs,
        minor_cap=args.minor_cap,
        gb_budget=args.gb_budget,
        log_level="DEBUG" if args.verbose else None,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command in ("hf", "wlp", "locus", "jordan") and not _has_algebra(args):
        parser.error(f"{args.command} needs --ci, --monomial, --ideal, --points or --dual-form")

    try:
        settings = resolve_settings(args)
        setup_logging(settings.log_level, args.log_file)
        field = FieldSpec.parse(settings.field)
        print(f"Initializing leflab {args.command} over {field} (seed {settings.seed})...")

        if args.command == "paper":
            code = run_paper(args, field, settings)
        elif args.command == "census":
            code = run_census(args, field, settings)
        else:
            records = RECORD_COMMANDS[args.command](args, field, settings)
            out = args.out or f"leflab_{args.command}.{args.format}"
            save_records(records, out, args.format)
            code = exit_code(records)
            mark = "✅" if code == EXIT_OK else "⚠️"
            print(f"\n{mark} Analysis complete! Report saved to: {out}")
    except (LeflabError, ValueError, KeyError, OSError) as e:
        print(f"❌ Error during analysis: {type(e).__name__}: {e}")
        if args.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
