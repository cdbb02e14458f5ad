"""
Closed-form predictions for non-Lefschetz loci.

Covers monomial complete intersections, general complete intersections
(with the exact answers in three and four variables), codimension three
Gorenstein algebras through their g-sequences, and two variables through
common factors of graded pieces.
"""

import logging
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import sympy

from .artinian import GradedAlgebra, HVector, ci_hvector
from .errors import AuditFailure, EmptySupport
from .exactfield import FieldSpec
from .locus import expected_codim_degree
from .matrix import row_space_basis, to_array
from .multipoly import Polynomial, monomial_basis

logger = logging.getLogger(__name__)

REGIME_ODD = "odd-socle-degree"
REGIME_FLAT_MIDDLE = "flat-middle"
REGIME_PAIRS_OF_POINTS = "pairs-of-points"
REGIME_SPECIAL_CASE = "proven-special-case"
REGIME_CONJECTURE = "conjecture"


@dataclass
class Prediction:
    """Predicted codimension and degree of a non-Lefschetz locus in P^{n-1}."""
    n: int
    codim: int
    degree: Optional[int]
    regime: str
    notes: List[str] = dc_field(default_factory=list)
    extras: Dict[str, Any] = dc_field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return self.codim >= self.n

    @classmethod
    def of(cls, n: int, codim: int, degree: Optional[int], regime: str, **kwargs) -> "Prediction":
        codim = min(codim, n)
        return cls(n, codim, None if codim >= n else degree, regime, **kwargs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "codim": self.codim,
            "empty": self.empty,
            "degree": self.degree,
            "regime": self.regime,
            "notes": list(self.notes),
            "extras": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.extras.items()},
        }

    def __str__(self) -> str:
        if self.empty:
            return f"Empty [{self.regime}]"
        degree = "n/a" if self.degree is None else self.degree
        return f"codim {self.codim}, degree {degree} [{self.regime}]"


@dataclass(frozen=True)
class GSequence:
    """g_i = h_i - h_{i-1} for 0 <= i <= floor(e/2)."""
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values or values[0] != 1:
            raise ValueError(f"g-sequence must start with 1, got {values}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_hvector(cls, h: HVector) -> "GSequence":
        half = h.socle_degree // 2
        return cls(tuple(h[i] - h[i - 1] if i else 1 for i in range(half + 1)))

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def to_list(self) -> List[int]:
        return list(self.values)


def _socle_degree(degrees: Sequence[int]) -> int:
    return sum(d - 1 for d in degrees)


def _check_degrees(degrees: Sequence[int], minimum_n: int = 1) -> List[int]:
    degrees = [int(d) for d in degrees]
    if len(degrees) < minimum_n:
        raise ValueError(f"need at least {minimum_n} degrees, got {degrees}")
    if any(d < 2 for d in degrees):
        raise ValueError(f"generator degrees must be at least 2, got {degrees}")
    return degrees


# --- monomial complete intersections ---

def _monomial_case(degrees: Sequence[int]) -> int:
    e = _socle_degree(degrees)
    if max(degrees) > (e + 1) // 2:
        return 1
    return 2 if e % 2 == 0 else 3


def monomial_lefschetz_classifier(degrees: Sequence[int], support: Sequence[int]) -> bool:
    """
    Whether sum_{j in support} a_j x_j (a_j nonzero, 1-based support) is a
    Lefschetz element of k[x]/(x_1^{d_1}, ..., x_n^{d_n}).
    """
    degrees = _check_degrees(degrees)
    support = set(support)
    if not support:
        raise EmptySupport("support must contain at least one index")
    n = len(degrees)
    e = _socle_degree(degrees)
    half = (e + 1) // 2
    case = _monomial_case(degrees)
    if case == 1:
        return any(degrees[j - 1] > half for j in support)
    if case == 2:
        zeros = n - len(support)
        return zeros <= 1 and all(j + 1 in support for j, d in enumerate(degrees) if d > 2)
    return len(support) == n


def divisible_middle(n: int, d: int) -> Dict[str, Any]:
    """Middle value h_{(e-1)/2} of n equal degrees d and its quotient by n."""
    h = ci_hvector([d] * n)
    e = h.socle_degree
    middle = h[(e - 1) // 2]
    alpha = Fraction(middle, n)
    return {
        "middle": middle,
        "alpha": int(alpha) if alpha.denominator == 1 else alpha,
        "divisible": middle % n == 0,
    }


def monomial_locus_summary(degrees: Sequence[int]) -> Prediction:
    """Codimension of the reduced locus of a monomial complete intersection, from the classifier."""
    degrees = _check_degrees(degrees)
    n = len(degrees)
    e = _socle_degree(degrees)
    failing = [len(s) for size in range(1, n + 1)
               for s in combinations(range(1, n + 1), size)
               if not monomial_lefschetz_classifier(degrees, s)]
    codim = n - max(failing) if failing else n
    h = ci_hvector(degrees)
    degree = h[(e - 1) // 2] if e % 2 else None
    pred = Prediction.of(n, codim, degree, f"monomial-case-{_monomial_case(degrees)}")
    if len(set(degrees)) == 1 and n % 2 == 1 and degrees[0] % 2 == 0:
        middle = divisible_middle(n, degrees[0])
        alpha = middle["alpha"]
        pred.extras["alpha"] = alpha
        pred.extras["defining_monomial"] = f"({'*'.join(f'a{j}' for j in range(1, n + 1))})^{alpha}"
        if degrees[0] == 2:
            pred.extras["middle_binomial"] = comb(n, (n - 1) // 2)
    return pred


# --- general complete intersections ---

def large_dn_case(degrees: Sequence[int]) -> Optional[int]:
    """
    Which large-d_n regime the sorted degrees fall into, with s the sum of
    the other degrees: 1 if d_n >= s - n + 3, 2 if d_n = s - n + 2,
    3 if d_n = s - n + 1, 4 if d_n = s - n, otherwise None.
    """
    degrees = sorted(_check_degrees(degrees, 2))
    n = len(degrees)
    s = sum(degrees[:-1])
    dn = degrees[-1]
    if dn >= s - n + 3:
        return 1
    return {s - n + 2: 2, s - n + 1: 3, s - n: 4}.get(dn)


def conjecture_prediction(degrees: Sequence[int]) -> Prediction:
    """Expected codimension and degree of the locus of a general complete intersection."""
    degrees = sorted(_check_degrees(degrees, 2))
    n = len(degrees)
    h = ci_hvector(degrees)
    e = h.socle_degree
    case = large_dn_case(degrees)
    notes = [f"h-vector {h}"]
    if case is not None:
        notes.append(f"large d_n case {case}")
    if e % 2:
        pred = Prediction.of(n, 1, h[(e - 1) // 2], REGIME_ODD, notes=notes)
        if case == 3:
            pred.extras["points_minus_one"] = prod(degrees[:-1]) - 1
        return pred
    mid = e // 2
    diff = h[mid] - h[mid - 1]
    regime = {1: REGIME_FLAT_MIDDLE, 2: REGIME_PAIRS_OF_POINTS, 4: REGIME_SPECIAL_CASE}.get(case, REGIME_CONJECTURE)
    pred = Prediction.of(n, diff + 1, comb(h[mid], diff + 1), regime, notes=notes)
    pred.extras["middle_difference"] = diff
    return pred


def ci3_prediction(d1: int, d2: int, d3: int) -> Prediction:
    """Locus of a general complete intersection in three variables."""
    d1, d2, d3 = sorted(_check_degrees([d1, d2, d3]))
    e = d1 + d2 + d3 - 3
    quad = 2 * d1 * d2 + 2 * d1 * d3 + 2 * d2 * d3 - d1 * d1 - d2 * d2 - d3 * d3
    if e % 2:
        if d3 >= d1 + d2:
            return Prediction.of(3, 1, d1 * d2, "n3-odd-large-d3")
        return Prediction.of(3, 1, quad // 4, "n3-odd")
    if d3 >= d1 + d2 + 1:
        return Prediction.of(3, 1, d1 * d2, "n3-even-large-d3")
    points = (quad + 1) // 4
    return Prediction.of(3, 2, comb(points, 2), "n3-even", extras={"n_I": points})


def _comb3(m: int) -> int:
    return comb(m, 3) if m >= 3 else 0


def ci4_middle_difference(d1: int, d2: int, d3: int, d4: int) -> int:
    """
    For even socle degree, h_{e/2} - h_{e/2-1} of a complete intersection of
    type (d1, d2, d3, d4). For odd socle degree, the middle value h_{(e-1)/2}.
    """
    d1, d2, d3, d4 = sorted(_check_degrees([d1, d2, d3, d4]))
    total = d1 + d2 + d3
    if (total + d4 - 4) % 2:
        return d1 * d2 * d3 - (_comb3(total - d4 + 1) - _comb3(total - 2 * d1 - d4 + 1)) // 4
    if d4 >= total:
        return 0
    if d4 <= -d1 + d2 + d3:
        return d1
    return (total - d4) // 2


def ci4_prediction(d1: int, d2: int, d3: int, d4: int) -> Prediction:
    """Locus of a general complete intersection in four variables."""
    degrees = sorted(_check_degrees([d1, d2, d3, d4]))
    e = _socle_degree(degrees)
    value = ci4_middle_difference(*degrees)
    if e % 2:
        return Prediction.of(4, 1, value, "n4-odd")
    h = ci_hvector(degrees)
    return Prediction.of(4, value + 1, comb(h[e // 2], value + 1), "n4-even",
                         extras={"middle_difference": value})


# --- Gorenstein algebras of codimension three ---

def _check_gorenstein_shape(h: HVector) -> int:
    if not h.is_symmetric():
        raise ValueError(f"h-vector {h} is not symmetric")
    if h.socle_degree % 2 == 0:
        raise ValueError(f"h-vector {h} has even socle degree")
    if h[1] > 3:
        raise ValueError(f"h-vector {h} has codimension above three")
    return (h.socle_degree - 1) // 2


def dim_gor(h: HVector) -> int:
    """Dimension of the family of Gorenstein algebras of codimension at most three with odd socle degree."""
    r = _check_gorenstein_shape(h)
    e = h.socle_degree

    def at(j: int) -> int:
        return h[j] if j >= 0 else 0

    total = sum(at(i) * (at(i) - 3 * at(i - 1) + 3 * at(i - 2) - at(i - 3)) for i in range(e + 1))
    twice = 3 * at(r) + at(r - 1) - total
    if twice % 2:
        raise AuditFailure(f"odd value {twice} for twice the family dimension of {h}")
    return twice // 2


def dim_gor_difference(h: HVector) -> int:
    """
    Drop in family dimension when h_r and h_{r+1} are both lowered by one,
    h_{r+1} - 2 h_{r+3} + h_{r+4} + 1, checked against dim_gor.
    """
    r = _check_gorenstein_shape(h)
    if h[r] < 2:
        raise ValueError(f"cannot lower the middle of {h}")
    value = h[r + 1] - 2 * h[r + 3] + h[r + 4] + 1
    lowered = h.to_list()
    lowered[r] -= 1
    lowered[r + 1] -= 1
    direct = dim_gor(h) - dim_gor(HVector(tuple(lowered)))
    if direct != value:
        raise AuditFailure(f"difference formula gives {value}, direct dimensions give {direct} for {h}")
    return value


def aci_dimension_counts(d: int) -> Dict[str, int]:
    """Parameter counts for four forms of degree d and for those failing in the middle."""
    if d < 2:
        raise ValueError(f"degree must be at least 2, got {d}")
    dim_a = 2 * d * d + 6 * d - 12
    dim_b = 2 * d * d + 5 * d - 13
    difference = dim_a - dim_b
    if difference != ci4_middle_difference(d, d, d, d) + 1:
        raise AuditFailure(f"d={d}: dimension difference {difference} disagrees with the middle difference")
    return {"dimA": dim_a, "dimB": dim_b, "difference": difference}


def _binomial_representation(h: int, i: int) -> List[Tuple[int, int]]:
    # h = C(k_i, i) + C(k_{i-1}, i-1) + ... with k_i > k_{i-1} > ... >= j >= 1
    rep = []
    while h > 0 and i > 0:
        k = i
        while comb(k + 1, i) <= h:
            k += 1
        rep.append((k, i))
        h -= comb(k, i)
        i -= 1
    return rep


def macaulay_bound(h: int, i: int) -> int:
    """Largest h_{i+1} allowed after h_i = h by Macaulay's growth condition."""
    if h < 0 or i < 1:
        raise ValueError(f"need h >= 0 and i >= 1, got h={h}, i={i}")
    return sum(comb(k + 1, j + 1) for k, j in _binomial_representation(h, i))


def is_si_sequence(h: HVector, codim3: bool = True) -> Tuple[bool, GSequence]:
    """Symmetric h whose first half of differences is an O-sequence."""
    if codim3 and h[1] != 3:
        raise ValueError(f"expected h_1 = 3, got {h}")
    g = GSequence.from_hvector(h)
    if not h.is_symmetric():
        return False, g
    if any(v < 0 for v in g.values):
        return False, g
    for i in range(1, len(g) - 1):
        if g[i + 1] > macaulay_bound(g[i], i):
            return False, g
    return True, g


def is_decreasing_type(g: GSequence) -> bool:
    """(1, 2, ..., k), then possibly flat at k, then strictly decreasing."""
    values = g.values
    idx = 0
    while idx < len(values) and values[idx] == idx + 1:
        idx += 1
    if idx == 0:
        return False
    peak = values[idx - 1]
    while idx < len(values) and values[idx] == peak:
        idx += 1
    previous = peak
    for v in values[idx:]:
        if v >= previous:
            return False
        previous = v
    return True


def gor3_prediction(h: HVector) -> Prediction:
    """Locus of a general Gorenstein algebra of codimension three with SI h-vector h."""
    ok, g = is_si_sequence(h)
    if not ok:
        raise ValueError(f"{h} is not an SI-sequence")
    e = h.socle_degree
    notes = [f"g = {tuple(g.values)}"]
    if e % 2 or g[e // 2] == 0:
        return Prediction.of(3, 1, h[(e - 1) // 2], "gorenstein-flat-middle", notes=notes)
    middle = g[e // 2]
    if not is_decreasing_type(g):
        flat = [i for i in range(1, e // 2) if g[i] == g[i + 1]]
        if flat:
            notes.append(f"flat g away from the middle at {flat}")
        return Prediction.of(3, 1, None, "gorenstein-not-decreasing", notes=notes)
    if middle == 1:
        return Prediction.of(3, 2, comb(h[e // 2], 2), "gorenstein-decreasing", notes=notes)
    return Prediction.of(3, middle + 1, None, "gorenstein-decreasing", notes=notes)


# --- two variables ---

_X, _Y = sympy.symbols("x y")


def _sympy_options(field: FieldSpec) -> Dict[str, Any]:
    return {"modulus": field.modulus} if field.is_prime_field else {"domain": "QQ"}


def _to_sympy_coefficient(field: FieldSpec, c):
    return int(c) if field.is_prime_field else sympy.Rational(c.numerator, c.denominator)


def _from_sympy_coefficient(field: FieldSpec, c):
    if field.is_prime_field:
        return int(c) % field.modulus
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def _dehomogenize(form: Polynomial) -> Tuple[int, sympy.Poly]:
    # set x2 = 1; returns the x2-adic valuation and a univariate polynomial in x1
    f = form.field
    valuation = min(m[1] for m in form.terms)
    rep = {(m[0],): _to_sympy_coefficient(f, c) for m, c in form.terms.items()}
    return valuation, sympy.Poly.from_dict(rep, _X, **_sympy_options(f))


def _homogenize(poly: sympy.Poly, field: FieldSpec, extra_y: int = 0) -> Polynomial:
    k = poly.degree()
    terms = {(a[0], k - a[0] + extra_y): _from_sympy_coefficient(field, c) for a, c in poly.as_dict().items()}
    return Polynomial(2, field, terms)


def degree_piece(generators: Sequence[Polynomial], i: int) -> List[Polynomial]:
    """A basis of [I]_i spanned by monomial multiples of the generators."""
    if not generators:
        return []
    n, f = generators[0].n, generators[0].field
    rows = []
    for g in generators:
        d = g.degree
        if d > i:
            continue
        for m in monomial_basis(n, i - d):
            rows.append(g.multiply_monomial(m).dense(i))
    if not rows:
        return []
    basis, _ = row_space_basis(f, to_array(f, rows))
    return [Polynomial.from_dense(n, i, f, [int(c) if f.is_prime_field else c for c in row]) for row in basis]


def codim2_gcd_analysis(ideal: Union[GradedAlgebra, Sequence[Polynomial]], i: int) -> Dict[str, Any]:
    """Common factor of [I]_i for an ideal of k[x1, x2]; a nonconstant factor means maximal rank fails."""
    generators = list(ideal.generators) if isinstance(ideal, GradedAlgebra) else list(ideal)
    if not generators or generators[0].n != 2:
        raise ValueError("common-factor analysis needs generators in two variables")
    field = generators[0].field
    piece = degree_piece(generators, i)
    if not piece:
        raise ValueError(f"[I]_{i} is zero")
    valuation = None
    gcd = None
    for form in piece:
        v, p = _dehomogenize(form)
        valuation = v if valuation is None else min(valuation, v)
        gcd = p if gcd is None else gcd.gcd(p)
    common = _homogenize(gcd, field, valuation)
    factors = []
    if valuation:
        factors.append({"factor": "x2", "multiplicity": valuation, "linear": True})
    if gcd.degree() > 0:
        _, pieces = gcd.factor_list()
        for factor, k in pieces:
            factors.append({"factor": _homogenize(factor, field).to_string("x"),
                            "multiplicity": k, "linear": factor.degree() == 1})
    degree = common.degree if not common.is_zero() else 0
    return {
        "degree": i,
        "gcd": common.to_string("x"),
        "gcd_degree": degree,
        "maximal_rank_fails": degree > 0,
        "gcd_factors": factors,
        "splits": all(f["linear"] for f in factors),
    }


def codim2_prediction(h: Optional[HVector] = None, degrees: Optional[Sequence[int]] = None) -> Prediction:
    """Locus in P^1 for a general algebra with h-vector h, or a general complete intersection of type (d1, d2)."""
    if (h is None) == (degrees is None):
        raise ValueError("pass exactly one of h or degrees")
    if degrees is not None:
        if len(degrees) != 2:
            raise ValueError(f"two degrees expected, got {degrees}")
        d1, d2 = sorted(_check_degrees(degrees))
        if d1 == d2:
            return Prediction.of(2, 2, None, "codim2-equal-degrees")
        return Prediction.of(2, 1, d1, "codim2-ci", extras={"flat_steps": list(range(d1, d2))})
    flat = [i for i in range(1, h.socle_degree + 1) if h[i - 1] == h[i]]
    if not flat:
        return Prediction.of(2, 2, None, "codim2-no-flat-step")
    return Prediction.of(2, 1, None, "codim2-flat-step", extras={"flat_steps": flat})


def four_lines_example() -> Dict[str, int]:
    """Expected codimension and degree for a 3 x 4 dual matrix."""
    return expected_codim_degree(3, 4)
