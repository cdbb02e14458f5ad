"""
Non-Lefschetz loci as determinantal schemes in the dual projective space.

For a linear form l = a_1 x_1 + ... + a_n x_n, multiplication by l from
[A]_i to [A]_{i+1} is the matrix B_i = sum_j a_j X_j of linear forms in the
dual variables. The locus in degree i is cut out by the maximal minors of B_i.
"""

import logging
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .artinian import GradedAlgebra, LinearForm
from .config import load_settings
from .errors import AuditFailure, DegreeOutOfRange, HintRejected, TooManyMinors
from .exactfield import FieldSpec, make_rng
from .groebner import (GroebnerBasis, buchberger, dimension_degree,
                       ideal_intersection, normal_form)
from .matrix import ExactMatrix, evaluate_minors, matmul_mod, row_space_basis
from .multipoly import Monomial, Polynomial, monomial_basis, unit_vector

logger = logging.getLogger(__name__)

DUAL_AUDIT_POINTS = 10


def expected_codim_degree(h_i: int, h_next: int) -> Dict[str, int]:
    """Codimension |h_{i+1} - h_i| + 1 and degree C(max, min - 1) of a generic determinantal locus."""
    if h_i <= 0 or h_next <= 0:
        raise ValueError(f"both dimensions must be positive, got {h_i}, {h_next}")
    small, large = sorted((h_i, h_next))
    return {"codim": large - small + 1, "degree": comb(large, small - 1)}


class DualMatrix:
    """B_i: entry (r, c) = sum_j tensor[j, r, c] * a_j; rows index [A]_{i+1}, columns [A]_i."""

    def __init__(self, field: FieldSpec, degree: int, tensor: np.ndarray,
                 row_labels: Sequence[Monomial], column_labels: Sequence[Monomial]):
        self.field = field
        self.degree = degree
        self.tensor = tensor
        self.row_labels = tuple(row_labels)
        self.column_labels = tuple(column_labels)

    @property
    def n(self) -> int:
        return self.tensor.shape[0]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.tensor.shape[1], self.tensor.shape[2]

    def entry(self, r: int, c: int) -> Polynomial:
        n = self.n
        return Polynomial(n, self.field, {unit_vector(n, j): self._raw(self.tensor[j, r, c]) for j in range(n)})

    def entries(self) -> List[List[Polynomial]]:
        rows, cols = self.shape
        return [[self.entry(r, c) for c in range(cols)] for r in range(rows)]

    def _raw(self, value):
        return int(value) if self.field.is_prime_field else value

    def specialize(self, linear_form: LinearForm) -> ExactMatrix:
        f = self.field
        n, rows, cols = self.tensor.shape
        point = np.array([list(linear_form.coefficients)], dtype=self.tensor.dtype)
        flat = self.tensor.reshape(n, rows * cols)
        if f.is_prime_field:
            values = matmul_mod(point, flat, f.modulus)
        else:
            values = np.dot(point, flat)
        return ExactMatrix(f, values.reshape(rows, cols))

    def to_strings(self) -> List[List[str]]:
        return [[e.to_string("a") for e in row] for row in self.entries()]


def dual_matrix(A: GradedAlgebra, i: int, seed: int = 0, audit_points: int = DUAL_AUDIT_POINTS) -> DualMatrix:
    """B_i built from the variable multiplication matrices, audited against multiplication_matrix."""
    if not 0 <= i < A.socle_degree:
        raise DegreeOutOfRange(f"degree {i} outside 0..{A.socle_degree - 1}")
    tensor = np.stack(A.variable_matrices(i))
    B = DualMatrix(A.field, i, tensor, A.cobasis(i + 1), A.cobasis(i))
    rng = make_rng(seed, "dual-audit", i)
    for k in range(audit_points):
        ell = LinearForm.random(A.n, A.field, rng) if k else LinearForm.from_support(A.n, A.field, [1])
        if B.specialize(ell) != A.multiplication_matrix(ell, i):
            raise AuditFailure(f"B_{i} specialized at {ell.to_string()} disagrees with the multiplication map")
    return B


@dataclass
class MinorIdeal:
    n: int
    field: FieldSpec
    size: int
    generators: List[Polynomial]
    minor_count: int
    span_rank: int
    span: np.ndarray = dc_field(repr=False, default=None)

    @property
    def spans_everything(self) -> bool:
        """True when the minors span all forms of their degree (the ideal contains m^size)."""
        return self.span_rank == len(monomial_basis(self.n, self.size))


def _normalize_key(field: FieldSpec, coeffs: Sequence[int]) -> Tuple:
    lead = next(c for c in coeffs if c != 0)
    inv = field.inv(field.coerce(lead))
    return tuple(field.mul(field.coerce(c), inv) for c in coeffs)


def minor_ideal(B: DualMatrix, cap: Optional[int] = None) -> MinorIdeal:
    """
    All maximal minors of B as polynomials in the dual variables.

    When B has more columns than rows its transpose is used, so the minors
    have size min(h_i, h_{i+1}). Zero minors and scalar multiples are dropped.
    """
    if cap is None:
        cap = load_settings().minor_cap
    f = B.field
    tensor = B.tensor
    rows, cols = B.shape
    if rows < cols:
        tensor = np.transpose(tensor, (0, 2, 1)).copy()
        rows, cols = cols, rows
    count = comb(rows, cols)
    if count > cap:
        raise TooManyMinors(count, cap)
    n = B.n
    subsets = list(combinations(range(rows), cols))
    logger.info(f"B_{B.degree}: {count} maximal minors of size {cols} in {n} dual variables")
    coeffs = evaluate_minors(f, tensor, subsets, label=f"B{B.degree}")
    seen = set()
    gens: List[Polynomial] = []
    for vec in coeffs:
        values = [int(c) if f.is_prime_field else c for c in vec]
        if all(v == 0 for v in values):
            continue
        key = _normalize_key(f, values)
        if key in seen:
            continue
        seen.add(key)
        gens.append(Polynomial.from_dense(n, cols, f, values))
    span, pivots = row_space_basis(f, coeffs) if len(gens) else (coeffs[:0], [])
    return MinorIdeal(n, f, cols, gens, count, len(pivots), span)


def _span_generators(ideal: MinorIdeal) -> List[Polynomial]:
    # interreduced linear span of the minors: same ideal, fewer and sparser generators
    f = ideal.field
    return [Polynomial.from_dense(ideal.n, ideal.size, f, [int(c) if f.is_prime_field else c for c in row])
            for row in ideal.span]


def minor_groebner(ideal: MinorIdeal, budget: Optional[int] = None) -> GroebnerBasis:
    """GB of the minor ideal; the power of the maximal ideal is written down directly when the minors span it."""
    f = ideal.field
    if not ideal.generators:
        return GroebnerBasis(n=ideal.n, field=f, order="grevlex", generators=(), leading_monomials=())
    if ideal.spans_everything:
        monos = monomial_basis(ideal.n, ideal.size)
        gens = tuple(Polynomial._raw(ideal.n, f, {m: f.one}) for m in monos)
        return GroebnerBasis(n=ideal.n, field=f, order="grevlex", generators=gens, leading_monomials=tuple(monos))
    return buchberger(_span_generators(ideal), budget=budget)


@dataclass
class LocusReport:
    degree: int
    shape: Tuple[int, int]
    expected_codim: int
    expected_degree: Optional[int]
    expected_empty: bool
    computed_dimension: int
    computed_codim: int
    computed_degree: int
    empty: bool
    minor_count: int
    distinct_minors: int
    saturation_flag: bool
    modulus: Optional[int]
    seed: int
    hypersurface_polynomial: Optional[Polynomial] = None
    hilbert_numerator: List[int] = dc_field(default_factory=list)
    groebner: Optional[GroebnerBasis] = dc_field(default=None, repr=False)
    minors: List[Polynomial] = dc_field(default_factory=list, repr=False)

    @property
    def expected_achieved(self) -> bool:
        return self.computed_codim == self.expected_codim or (self.expected_empty and self.empty)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "shape": list(self.shape),
            "expected_codim": self.expected_codim,
            "expected_degree": self.expected_degree,
            "expected_empty": self.expected_empty,
            "computed_dimension": self.computed_dimension,
            "computed_codim": self.computed_codim,
            "computed_degree": self.computed_degree,
            "empty": self.empty,
            "minor_count": self.minor_count,
            "distinct_minors": self.distinct_minors,
            "saturation_flag": self.saturation_flag,
            "modulus": self.modulus,
            "seed": self.seed,
            "hypersurface_polynomial": (self.hypersurface_polynomial.to_string("a")
                                        if self.hypersurface_polynomial is not None else None),
            "hilbert_numerator": list(self.hilbert_numerator),
            "groebner_size": len(self.groebner) if self.groebner is not None else None,
        }


def locus_in_degree(A: GradedAlgebra, i: int, seed: int = 0, minor_cap: Optional[int] = None,
                    budget: Optional[int] = None) -> LocusReport:
    """Minor ideal, Groebner basis and dimension/degree of the locus where x l fails maximal rank from degree i."""
    B = dual_matrix(A, i, seed=seed)
    h_i, h_next = A.dim(i), A.dim(i + 1)
    n = A.n
    expected = expected_codim_degree(h_i, h_next)
    expected_empty = expected["codim"] >= n
    ideal = minor_ideal(B, cap=minor_cap)
    G = minor_groebner(ideal, budget=budget)
    # no nonzero minor: the whole dual space fails, and the empty basis reports exactly that
    dd = dimension_degree(G)
    hypersurface = None
    if h_i == h_next and ideal.generators:
        hypersurface = ideal.generators[0]
    codim = dd.codimension
    achieved = codim == expected["codim"] or (expected_empty and dd.is_empty)
    report = LocusReport(
        degree=i,
        shape=(h_i, h_next),
        expected_codim=expected["codim"],
        expected_degree=None if expected_empty else expected["degree"],
        expected_empty=expected_empty,
        computed_dimension=dd.projective_dimension,
        computed_codim=codim,
        computed_degree=dd.degree,
        empty=dd.is_empty,
        minor_count=ideal.minor_count,
        distinct_minors=len(ideal.generators),
        saturation_flag=not achieved,
        modulus=A.field.modulus,
        seed=seed,
        hypersurface_polynomial=hypersurface,
        hilbert_numerator=dd.hilbert_series_numerator,
        groebner=G,
        minors=ideal.generators,
    )
    if report.saturation_flag:
        logger.warning(f"degree {i}: codim {codim} differs from expected {expected['codim']}; "
                       f"degree {dd.degree} is the unsaturated top-dimensional degree")
    logger.info(f"locus in degree {i}: dim {report.computed_dimension}, degree {report.computed_degree}")
    return report


@dataclass
class NonLefschetzLocus:
    reports: List[LocusReport]
    total: Optional[GroebnerBasis]
    dimension: int
    degree: Optional[int]
    empty: bool
    gorenstein: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "reports": [r.to_dict() for r in self.reports],
            "dimension": self.dimension,
            "degree": self.degree,
            "empty": self.empty,
            "gorenstein": self.gorenstein,
            "total_groebner_size": len(self.total) if self.total is not None else None,
        }


def middle_degree(A: GradedAlgebra) -> int:
    return (A.socle_degree - 1) // 2


def non_lefschetz_locus(A: GradedAlgebra, gorenstein_hint: bool = False, intersect: bool = False,
                        seed: int = 0, minor_cap: Optional[int] = None,
                        budget: Optional[int] = None) -> NonLefschetzLocus:
    """
    The non-Lefschetz locus of A.

    With ``gorenstein_hint`` (checked: symmetric h-vector, one-dimensional
    socle in the top degree only) only the degree floor((e-1)/2) is computed.
    Otherwise every degree is computed; ``intersect`` also forms the ideal of
    the union by intersecting the per-degree ideals.
    """
    if A.socle_degree < 1:
        raise DegreeOutOfRange("an algebra concentrated in degree 0 has no multiplication maps")
    if gorenstein_hint:
        if not A.is_gorenstein():
            raise HintRejected(f"{A.label()} with h-vector {A.hvector} is not Gorenstein")
        report = locus_in_degree(A, middle_degree(A), seed=seed, minor_cap=minor_cap, budget=budget)
        return NonLefschetzLocus([report], report.groebner, report.computed_dimension,
                                 None if report.empty else report.computed_degree, report.empty, True)
    reports = [locus_in_degree(A, i, seed=seed, minor_cap=minor_cap, budget=budget)
               for i in range(A.socle_degree)]
    nonempty = [r for r in reports if not r.empty]
    if not nonempty:
        return NonLefschetzLocus(reports, None, -1, None, True, False)
    dimension = max(r.computed_dimension for r in nonempty)
    total = None
    degree = None
    if intersect:
        total = nonempty[0].groebner
        for r in nonempty[1:]:
            total = ideal_intersection(total, r.groebner, budget=budget)
        degree = dimension_degree(total).degree
    else:
        top = [r for r in nonempty if r.computed_dimension == dimension]
        # mirrored degrees of a Gorenstein algebra share one reduced basis
        if len({frozenset(r.groebner.generators) for r in top}) == 1:
            degree = top[0].computed_degree
    return NonLefschetzLocus(reports, total, dimension, degree, False, False)


def is_in_locus(A: GradedAlgebra, i: int, linear_form: LinearForm,
                minors: Optional[Sequence[Polynomial]] = None) -> bool:
    """Pointwise test: x l : [A]_i -> [A]_{i+1} fails maximal rank. Given minors are checked for agreement."""
    rank = A.multiplication_matrix(linear_form, i).rank()
    failing = rank < min(A.dim(i), A.dim(i + 1))
    if minors is not None:
        vanish = all(g.evaluate(linear_form.coefficients) == 0 for g in minors)
        if vanish != failing:
            raise AuditFailure(f"degree {i}: rank test says {failing}, minors say {vanish} at {linear_form.to_string()}")
    return failing


@dataclass
class InclusionCheck:
    degree: int
    applies: bool
    holds: Optional[bool]
    witness: Optional[Polynomial] = None
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "applies": self.applies,
            "holds": self.holds,
            "witness": self.witness.to_string("a") if self.witness is not None else None,
            "reason": self.reason,
        }


def verify_inclusion(A: GradedAlgebra, i: int, seed: int = 0, minor_cap: Optional[int] = None,
                     budget: Optional[int] = None) -> InclusionCheck:
    """Check that the degree-(i+1) minors lie in the degree-i minor ideal when the hypothesis holds."""
    if i < 0 or i + 2 > A.socle_degree:
        raise DegreeOutOfRange(f"inclusion check needs 0 <= i and i + 2 <= {A.socle_degree}")
    h = A.hvector
    if not h[i] <= h[i + 1] <= h[i + 2]:
        return InclusionCheck(i, False, None, reason=f"h-vector {h[i]},{h[i + 1]},{h[i + 2]} is not non-decreasing")
    if A.socle_dimension(i) != 0:
        return InclusionCheck(i, False, None, reason=f"socle in degree {i}")
    lower = minor_ideal(dual_matrix(A, i, seed=seed), cap=minor_cap)
    upper = minor_ideal(dual_matrix(A, i + 1, seed=seed), cap=minor_cap)
    G = minor_groebner(lower, budget=budget)
    for g in upper.generators:
        if G.is_zero() or not normal_form(g, G).is_zero():
            return InclusionCheck(i, True, False, witness=g, reason="generator outside the lower minor ideal")
    return InclusionCheck(i, True, True)


# --- monomial complete intersections ---

def monomial_radical_components(degrees: Sequence[int]) -> List[FrozenSet[int]]:
    """
    Coordinate subspaces {a_j = 0 for j in T} whose union is the reduced
    non-Lefschetz locus of the monomial complete intersection.
    """
    from .predict import monomial_lefschetz_classifier
    n = len(degrees)
    full = frozenset(range(1, n + 1))
    failing = []
    for size in range(1, n + 1):
        for support in combinations(range(1, n + 1), size):
            if not monomial_lefschetz_classifier(degrees, support):
                failing.append(frozenset(support))
    maximal = [s for s in failing if not any(s < t for t in failing)]
    return sorted((full - s for s in maximal), key=lambda t: (len(t), sorted(t)))


def predicted_in_components(linear_form: LinearForm, components: Sequence[FrozenSet[int]]) -> bool:
    zeros = {j + 1 for j, c in enumerate(linear_form.coefficients) if c == 0}
    return any(t <= zeros for t in components)


def sample_membership(A: GradedAlgebra, i: int, components: Sequence[FrozenSet[int]],
                      count: int = 200, seed: int = 0) -> Dict[str, Any]:
    """Compare rank-based membership with a predicted union of coordinate subspaces on random supports."""
    rng = make_rng(seed, "membership", i, count)
    n = A.n
    discrepancies = []
    in_locus = 0
    for k in range(count):
        support = [j for j in range(1, n + 1) if rng.random() < 0.6]
        if not support:
            support = [rng.randint(1, n)]
        values = [A.field.random_element(rng, nonzero=True) for _ in support]
        ell = LinearForm.from_support(n, A.field, support, values)
        actual = is_in_locus(A, i, ell)
        predicted = predicted_in_components(ell, components)
        in_locus += actual
        if actual != predicted:
            discrepancies.append({"linear_form": ell.to_string(), "rank_test": actual, "predicted": predicted})
    return {"samples": count, "in_locus": in_locus, "discrepancies": discrepancies}
