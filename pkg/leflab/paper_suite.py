"""
Named reproducibility checks: each builds its algebras from a derived seed,
runs the computation and compares with the closed form it illustrates.
"""

import logging
import time
from collections import OrderedDict
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .artinian import HVector, LinearForm, ci_hvector, gorenstein_from_points, monomial_ci, random_ci
from .census import analyze_ci
from .errors import LeflabError
from .exactfield import FieldSpec, derive_seed, make_rng
from .lefjordan import is_weak_lefschetz, jordan_type, monomial_jordan_prediction
from .locus import (dual_matrix, is_in_locus, locus_in_degree, middle_degree, minor_ideal,
                    monomial_radical_components, sample_membership, verify_inclusion)
from .predict import (ci4_middle_difference, dim_gor, dim_gor_difference, gor3_prediction,
                      macaulay_bound, monomial_lefschetz_classifier)
from .reports import describe_error, status_for

logger = logging.getLogger(__name__)

CheckResult = Tuple[bool, str]
CHECKS: "OrderedDict[str, Tuple[str, Callable[[FieldSpec, int], CheckResult]]]" = OrderedDict()
ALIASES = {"monomial-443": "monomial-444"}

TWISTED_CUBIC_POINTS = [(1, t, t ** 3) for t in range(7)]
COLLINEAR_POINTS = [(1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 3, 0), (0, 0, 1)]


def check(name: str, description: str):
    def register(fn: Callable[[FieldSpec, int], CheckResult]):
        CHECKS[name] = (description, fn)
        return fn
    return register


def _support_form(n: int, field: FieldSpec, support: Sequence[int]) -> LinearForm:
    return LinearForm.from_support(n, field, support)


def _m_primary(G) -> bool:
    pure = {j for m in G.leading_monomials for j in range(G.n) if m[j] == sum(m)}
    return len(pure) == G.n


@check("ci-2222", "random complete intersection (2,2,2,2): 20 points")
def check_ci_2222(field: FieldSpec, seed: int) -> CheckResult:
    A = random_ci((2, 2, 2, 2), field=field, seed=derive_seed(seed, "ci-2222"))
    report = locus_in_degree(A, middle_degree(A), seed=seed)
    return (report.computed_dimension == 0 and report.computed_degree == 20,
            f"dim {report.computed_dimension}, degree {report.computed_degree}")


@check("ci-3333", "random complete intersection (3,3,3,3): empty locus, minors contain a power of m")
def check_ci_3333(field: FieldSpec, seed: int) -> CheckResult:
    A = random_ci((3, 3, 3, 3), field=field, seed=derive_seed(seed, "ci-3333"))
    report = locus_in_degree(A, middle_degree(A), seed=seed)
    return report.empty and _m_primary(report.groebner), f"empty={report.empty}, {report.distinct_minors} minors"


@check("monomial-444", "monomial (4,4,4): middle determinant is c (a1 a2 a3)^4")
def check_monomial_444(field: FieldSpec, seed: int) -> CheckResult:
    A = monomial_ci((4, 4, 4), field=field)
    ideal = minor_ideal(dual_matrix(A, middle_degree(A), seed=seed))
    if len(ideal.generators) != 1:
        return False, f"{len(ideal.generators)} distinct minors"
    det = ideal.generators[0]
    return list(det.terms) == [(4, 4, 4)], det.to_string("a")


@check("monomial-2233-radical", "monomial (2,2,3,3): membership matches {a3=0} u {a4=0} u {a1=a2=0}")
def check_monomial_2233(field: FieldSpec, seed: int) -> CheckResult:
    degrees = (2, 2, 3, 3)
    components = monomial_radical_components(degrees)
    expected = sorted([frozenset({3}), frozenset({4}), frozenset({1, 2})], key=lambda t: (len(t), sorted(t)))
    if components != expected:
        return False, f"components {[sorted(c) for c in components]}"
    A = monomial_ci(degrees, field=field)
    result = sample_membership(A, middle_degree(A), components, count=200, seed=seed)
    return not result["discrepancies"], f"{result['samples']} samples, {len(result['discrepancies'])} discrepancies"


JORDAN_2222 = {
    (1, 2, 3, 4): [5, 3, 3, 3, 1, 1],
    (1, 2, 3): [4, 4, 2, 2, 2, 2],
    (1, 2): [3, 3, 3, 3, 1, 1, 1, 1],
    (1,): [2] * 8,
}


@check("jordan-2222", "Jordan types of monomial (2,2,2,2) for the four canonical supports")
def check_jordan_2222(field: FieldSpec, seed: int) -> CheckResult:
    A = monomial_ci((2, 2, 2, 2), field=field)
    wrong = [s for s, parts in JORDAN_2222.items() if jordan_type(A, _support_form(4, field, s)).to_list() != parts]
    return not wrong, f"wrong supports: {wrong}" if wrong else "4 partitions match"


@check("jordan-exhaustive", "Jordan type prediction for every monomial CI with n <= 4, d <= 3 and every support")
def check_jordan_exhaustive(field: FieldSpec, seed: int) -> CheckResult:
    checked, wrong = 0, []
    for n in range(1, 5):
        for degrees in combinations_with_replacement(range(2, 4), n):
            A = monomial_ci(degrees, field=field)
            for size in range(1, n + 1):
                for support in combinations(range(1, n + 1), size):
                    checked += 1
                    if jordan_type(A, _support_form(n, field, support)) != monomial_jordan_prediction(degrees, support):
                        wrong.append((degrees, support))
    return not wrong, f"{checked} cases, {len(wrong)} disagreements"


@check("classifier-sweep", "monomial classifier vs direct ranks for n <= 4, d <= 4")
def check_classifier(field: FieldSpec, seed: int) -> CheckResult:
    checked, wrong = 0, []
    for n in range(1, 5):
        for degrees in combinations_with_replacement(range(2, 5), n):
            A = monomial_ci(degrees, field=field)
            for size in range(1, n + 1):
                for support in combinations(range(1, n + 1), size):
                    checked += 1
                    direct = is_weak_lefschetz(A, _support_form(n, field, support))
                    if direct != monomial_lefschetz_classifier(degrees, support):
                        wrong.append((degrees, support))
    return not wrong, f"{checked} cases, {len(wrong)} disagreements"


def _sweep(n: int, bound: int, field: FieldSpec, seed: int) -> CheckResult:
    bad = []
    total = 0
    for degrees in combinations_with_replacement(range(2, bound + 1), n):
        total += 1
        record = analyze_ci(degrees, field, derive_seed(seed, "census", degrees), command="paper")
        if not record.ok:
            bad.append((degrees, record.status))
    return not bad, f"{total} tuples, mismatches at {bad}" if bad else f"{total} tuples match"


@check("ci3-sweep", "random complete intersections in 3 variables, degrees <= 5, vs the closed form")
def check_ci3_sweep(field: FieldSpec, seed: int) -> CheckResult:
    return _sweep(3, 5, field, seed)


@check("ci4-hvector", "middle values and differences in 4 variables vs the h-vector, degrees <= 6")
def check_ci4_hvector(field: FieldSpec, seed: int) -> CheckResult:
    wrong = []
    tuples = list(combinations_with_replacement(range(2, 7), 4))
    for degrees in tuples:
        h = ci_hvector(degrees)
        e = h.socle_degree
        direct = h[(e - 1) // 2] if e % 2 else h[e // 2] - h[e // 2 - 1]
        if ci4_middle_difference(*degrees) != direct:
            wrong.append(degrees)
    return not wrong, f"{len(tuples)} tuples, wrong: {wrong}" if wrong else f"{len(tuples)} tuples match"


def random_si_hvector(rng, r: int) -> HVector:
    """Random symmetric codimension-three h-vector of socle degree 2r + 1 with an O-sequence g."""
    g = [1, 2]
    for i in range(1, r):
        g.append(rng.randint(0, macaulay_bound(g[i], i)))
    half = []
    total = 0
    for v in g[: r + 1]:
        total += v
        half.append(total)
    return HVector(tuple(half + half[::-1]))


@check("dim-gor", "Gorenstein family dimension and its middle-drop difference")
def check_dim_gor(field: FieldSpec, seed: int) -> CheckResult:
    d = 4
    anchor = dim_gor(HVector((1, 3, 5, 5, 3, 1)))
    if anchor != comb(2 * d - 1, 2) - d - 2:
        return False, f"dim_gor(1,3,5,5,3,1) = {anchor}"
    rng = make_rng(seed, "dim-gor")
    for _ in range(20):
        dim_gor_difference(random_si_hvector(rng, rng.randint(1, 4)))
    return True, f"dim_gor(1,3,5,5,3,1) = {anchor}; 20 differences audited"


@check("gorenstein-points", "Gorenstein algebras from points: decreasing and non-decreasing g")
def check_gorenstein_points(field: FieldSpec, seed: int) -> CheckResult:
    details = []
    ok = True
    for label, points, h_expected in (
        ("twisted", TWISTED_CUBIC_POINTS, (1, 3, 6, 7, 6, 3, 1)),
        ("collinear", COLLINEAR_POINTS, (1, 3, 4, 5, 4, 3, 1)),
    ):
        A = gorenstein_from_points(points, 6, field=field, seed=derive_seed(seed, "points", label))
        if A.hvector.values != h_expected:
            return False, f"{label}: h-vector {A.hvector}"
        report = locus_in_degree(A, middle_degree(A), seed=seed)
        prediction = gor3_prediction(A.hvector)
        match = report.computed_codim == prediction.codim and (
            prediction.degree is None or report.computed_degree == prediction.degree)
        ok = ok and match
        details.append(f"{label}: codim {report.computed_codim} degree {report.computed_degree} vs {prediction}")
    return ok, "; ".join(details)


@check("codim2-sweep", "random complete intersections in 2 variables, degrees <= 5")
def check_codim2_sweep(field: FieldSpec, seed: int) -> CheckResult:
    bad = []
    for d1, d2 in combinations_with_replacement(range(2, 6), 2):
        A = random_ci((d1, d2), field=field, seed=derive_seed(seed, "codim2", d1, d2))
        report = locus_in_degree(A, middle_degree(A), seed=seed)
        if report.empty != (d1 == d2) or (not report.empty and report.computed_degree != d1):
            bad.append((d1, d2))
    return not bad, f"mismatches at {bad}" if bad else "10 tuples match"


def _gorenstein_examples(field: FieldSpec, seed: int):
    yield "ci-2222", random_ci((2, 2, 2, 2), field=field, seed=derive_seed(seed, "ci-2222"))
    yield "ci-223", random_ci((2, 2, 3), field=field, seed=derive_seed(seed, "census", (2, 2, 3)))
    yield "ci-24", random_ci((2, 4), field=field, seed=derive_seed(seed, "codim2", 2, 4))
    yield "monomial-444", monomial_ci((4, 4, 4), field=field)
    yield "points-twisted", gorenstein_from_points(TWISTED_CUBIC_POINTS, 6, field=field,
                                                   seed=derive_seed(seed, "points", "twisted"))
    yield "points-collinear", gorenstein_from_points(COLLINEAR_POINTS, 6, field=field,
                                                     seed=derive_seed(seed, "points", "collinear"))


@check("inclusions", "degree-(i+1) minors lie in the degree-i minor ideal where the hypothesis holds")
def check_inclusions(field: FieldSpec, seed: int) -> CheckResult:
    applied, failures = 0, []
    for label, A in _gorenstein_examples(field, seed):
        for i in range(A.socle_degree - 1):
            result = verify_inclusion(A, i, seed=seed)
            if result.applies:
                applied += 1
                if not result.holds:
                    failures.append((label, i))
    return not failures, f"{applied} applicable degrees, failures: {failures}"


@check("properties", "partition sums, mirrored-degree duality, expected degrees, determinism")
def check_properties(field: FieldSpec, seed: int) -> CheckResult:
    rng = make_rng(seed, "properties")
    algebras = [
        random_ci((2, 2, 3), field=field, seed=derive_seed(seed, "census", (2, 2, 3))),
        monomial_ci((3, 3, 3), field=field),
        monomial_ci((2, 2, 2, 2), field=field),
    ]
    for A in algebras:
        for _ in range(3):
            ell = LinearForm.random(A.n, field, rng)
            if jordan_type(A, ell).size != A.dimension:
                return False, f"{A.label()}: partition size differs from dim A"
        e = A.socle_degree
        for _ in range(30):
            support = [j for j in range(1, A.n + 1) if rng.random() < 0.6] or [1]
            ell = LinearForm.from_support(A.n, field, support, [field.random_element(rng, nonzero=True)
                                                                for _ in support])
            for i in range(e):
                if is_in_locus(A, i, ell) != is_in_locus(A, e - 1 - i, ell):
                    return False, f"{A.label()}: degrees {i} and {e - 1 - i} disagree at {ell.to_string()}"
    for degrees in ((2, 2, 2, 2), (2, 2, 3), (2, 3, 3)):
        A = random_ci(degrees, field=field, seed=derive_seed(seed, "census", degrees))
        first = locus_in_degree(A, middle_degree(A), seed=seed)
        second = locus_in_degree(A, middle_degree(A), seed=seed)
        if first.to_dict() != second.to_dict():
            return False, f"{degrees}: repeated runs differ"
        if first.expected_achieved and not first.empty and first.computed_degree != first.expected_degree:
            return False, f"{degrees}: degree {first.computed_degree} vs expected {first.expected_degree}"
    return True, "all properties hold"


def list_checks() -> List[Tuple[str, str]]:
    return [(name, description) for name, (description, _) in CHECKS.items()]


def resolve(names: Optional[Sequence[str]]) -> List[str]:
    if not names:
        return list(CHECKS)
    resolved = []
    for name in names:
        name = ALIASES.get(name, name)
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}; use --list")
        resolved.append(name)
    return resolved


def reproduce_paper_suite(field: FieldSpec, seed: int = 0, only: Optional[Sequence[str]] = None) -> List[Dict]:
    """Run the named checks; each row carries check, status, detail and seconds."""
    rows = []
    for name in resolve(only):
        description, fn = CHECKS[name]
        start = time.perf_counter()
        try:
            passed, detail = fn(field, seed)
            status = "pass" if passed else "fail"
        except LeflabError as e:
            status = status_for(e)
            detail = describe_error(e)
            logger.error(f"check {name}: {detail}")
        elapsed = time.perf_counter() - start
        logger.info(f"check {name}: {status} in {elapsed:.1f}s")
        rows.append({"check": name, "status": status, "detail": detail, "seconds": round(elapsed, 3)})
    return rows


def all_passed(rows: Sequence[Dict]) -> bool:
    return all(r["status"] == "pass" for r in rows)
