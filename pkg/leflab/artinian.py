"""
Graded artinian algebras A = R/I over an exact field.

Each graded piece [I]_d is the row space of a Macaulay matrix (x_k times a
basis of [I]_{d-1}, plus the generators of degree d) in the grevlex monomial
basis of [R]_d. Its RREF pivots are the leading monomials of [I]_d; the
remaining monomials form the standard cobasis of [A]_d.
"""

import hashlib
import logging
from dataclasses import dataclass
from math import factorial
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .config import load_settings
from .errors import (ArityMismatch, DegreeOutOfRange, DuplicatePoints, FieldMismatch,
                     GenericityFailure, NonHomogeneousGenerator, NotArtinian)
from .exactfield import FieldSpec, Raw, Scalar, make_rng
from .matrix import (ExactMatrix, field_dtype, matmul_mod, reduce_array, row_space_basis,
                     rref_rank_kernel, to_array)
from .multipoly import (Monomial, Polynomial, monomial_basis, monomial_index,
                        mono_mul, parse_polynomial, unit_vector)

logger = logging.getLogger(__name__)

GENERICITY_RETRIES = 5


@dataclass(frozen=True)
class HVector:
    """Hilbert function (1, h_1, ..., h_e) of an artinian graded algebra."""
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values or values[0] != 1:
            raise ValueError(f"h-vector must start with 1, got {values}")
        if any(v <= 0 for v in values):
            raise ValueError(f"h-vector entries must be positive, got {values}")

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def codimension(self) -> int:
        return self[1]

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def to_list(self) -> List[int]:
        return list(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


def ci_hvector(degrees: Sequence[int]) -> HVector:
    """Coefficients of prod_j (1 + t + ... + t^(d_j - 1))."""
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError(f"degrees must be positive, got {degrees}")
    poly = np.array([1], dtype=object)
    for d in degrees:
        poly = np.convolve(poly, np.ones(d, dtype=object))
    return HVector(tuple(int(v) for v in poly))


class LinearForm:
    """l = a_1 x_1 + ... + a_n x_n, compared up to a nonzero scalar."""

    __slots__ = ("field", "coefficients")

    def __init__(self, field: FieldSpec, coefficients: Sequence[Any]):
        coeffs = tuple(field.coerce(c) for c in coefficients)
        if not coeffs or all(c == 0 for c in coeffs):
            raise ValueError("a linear form needs a nonzero coefficient")
        self.field = field
        self.coefficients = coeffs

    @classmethod
    def from_support(cls, n: int, field: FieldSpec, support: Iterable[int],
                     values: Optional[Sequence[Any]] = None) -> "LinearForm":
        """Sum of x_j over the 1-based support, optionally with given coefficients."""
        coeffs = [0] * n
        for k, j in enumerate(sorted(set(support))):
            if not 1 <= j <= n:
                raise ArityMismatch(f"support index {j} outside 1..{n}")
            coeffs[j - 1] = values[k] if values is not None else 1
        return cls(field, coeffs)

    @classmethod
    def parse(cls, text: str, n: int, field: FieldSpec) -> "LinearForm":
        poly = parse_polynomial(text, n, field, prefixes=("x",))
        if poly.homogeneous_degree() != 1:
            raise NonHomogeneousGenerator(f"{text!r} is not a linear form")
        return cls.from_polynomial(poly)

    @classmethod
    def from_polynomial(cls, poly: Polynomial) -> "LinearForm":
        coeffs = [poly.terms.get(unit_vector(poly.n, j), 0) for j in range(poly.n)]
        return cls(poly.field, coeffs)

    @classmethod
    def random(cls, n: int, field: FieldSpec, rng, nonzero: bool = True) -> "LinearForm":
        return cls(field, [field.random_element(rng, nonzero=nonzero) for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def support(self) -> Tuple[int, ...]:
        return tuple(j + 1 for j, c in enumerate(self.coefficients) if c != 0)

    def scalars(self) -> Tuple[Scalar, ...]:
        return tuple(Scalar(self.field, c) for c in self.coefficients)

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.n, self.field, {unit_vector(self.n, j): c for j, c in enumerate(self.coefficients)})

    def normalized(self) -> Tuple[Raw, ...]:
        f = self.field
        lead = next(c for c in self.coefficients if c != 0)
        inv = f.inv(lead)
        return tuple(f.mul(c, inv) for c in self.coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.field == other.field and self.normalized() == other.normalized()

    def __hash__(self):
        return hash((self.field, self.normalized()))

    def to_string(self) -> str:
        return self.as_polynomial().to_string("x")

    def to_json(self) -> List[Any]:
        return [self.field.to_json(c) for c in self.coefficients]

    def __repr__(self) -> str:
        return f"LinearForm({self.to_string()})"


@dataclass
class _Piece:
    degree: int
    ideal_rows: np.ndarray
    pivots: List[int]
    cobasis: Tuple[Monomial, ...]
    cobasis_columns: List[int]

    @property
    def dim(self) -> int:
        return len(self.cobasis)


class GradedAlgebra:
    """
    An artinian quotient R/I with graded bases cached up to the socle degree.

    Args:
        n: Number of variables.
        field: Coefficient field.
        generators: Homogeneous generators of I.
        artinian_cap: Degree bound for inputs whose generator count differs from n.
        name: Optional label used in reports.
    """

    def __init__(self, n: int, field: FieldSpec, generators: Sequence[Polynomial],
                 artinian_cap: Optional[int] = None, name: Optional[str] = None):
        self.n = n
        self.field = field
        self.name = name
        gens = []
        for g in generators:
            if g.n != n:
                raise ArityMismatch(f"generator in {g.n} variables, algebra has {n}")
            if g.field != field:
                raise FieldMismatch(f"generator over {g.field}, algebra over {field}")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise NonHomogeneousGenerator(f"generator {g.to_string()} is not homogeneous")
            gens.append(g)
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        if artinian_cap is None:
            artinian_cap = load_settings().artinian_cap
        if len(gens) == n:
            self.degree_bound = sum(g.degree - 1 for g in gens) + 1
        else:
            self.degree_bound = artinian_cap
        self._pieces: Dict[int, _Piece] = {}
        self._var_cache: Dict[int, List[np.ndarray]] = {}
        self._build()

    # --- construction ---

    def _shift_tables(self, d: int) -> List[np.ndarray]:
        # column index in degree d-1 -> column index of x_k * m in degree d
        target = monomial_index(self.n, d)
        source = monomial_basis(self.n, d - 1)
        return [np.array([target[mono_mul(m, unit_vector(self.n, k))] for m in source], dtype=np.intp)
                for k in range(self.n)]

    def _build(self) -> None:
        if len(self.generators) < self.n:
            raise NotArtinian(f"{len(self.generators)} generators cannot cut out an artinian quotient of "
                              f"a ring in {self.n} variables")
        by_degree: Dict[int, List[Polynomial]] = {}
        for g in self.generators:
            by_degree.setdefault(g.degree, []).append(g)
        f = self.field
        dtype = field_dtype(f)
        previous: Optional[np.ndarray] = None
        d = 0
        while True:
            size = len(monomial_basis(self.n, d))
            blocks = []
            if previous is not None and previous.shape[0]:
                for shift in self._shift_tables(d):
                    block = np.zeros((previous.shape[0], size), dtype=dtype)
                    if dtype is object:
                        block[...] = f.zero
                    block[:, shift] = previous
                    blocks.append(block)
            if by_degree.get(d):
                blocks.append(to_array(f, [g.dense(d) for g in by_degree[d]]))
            if blocks:
                rows, pivots = row_space_basis(f, np.concatenate(blocks, axis=0))
            else:
                rows = np.zeros((0, size), dtype=dtype)
                pivots = []
            pivot_set = set(pivots)
            columns = [c for c in range(size) if c not in pivot_set]
            basis = monomial_basis(self.n, d)
            piece = _Piece(d, rows, pivots, tuple(basis[c] for c in columns), columns)
            if piece.dim == 0:
                if d == 0:
                    raise NotArtinian("the ideal is the whole ring")
                self.socle_degree = d - 1
                logger.debug(f"algebra {self.label()} vanishes from degree {d}")
                break
            self._pieces[d] = piece
            previous = rows
            d += 1
            if d > self.degree_bound:
                raise NotArtinian(f"[A]_{d - 1} is still nonzero at the degree bound {self.degree_bound}")
        self.hvector = HVector(tuple(self._pieces[k].dim for k in range(self.socle_degree + 1)))
        logger.info(f"built algebra {self.label()} with h-vector {self.hvector}")

    # --- inspection ---

    def label(self) -> str:
        if self.name:
            return self.name
        return f"n={self.n}, {len(self.generators)} generators"

    def cobasis(self, d: int) -> Tuple[Monomial, ...]:
        piece = self._pieces.get(d)
        return piece.cobasis if piece else ()

    def dim(self, d: int) -> int:
        return self.hvector[d]

    @property
    def dimension(self) -> int:
        return self.hvector.total

    def ideal_dim(self, d: int) -> int:
        return len(monomial_basis(self.n, d)) - self.dim(d)

    def generators_digest(self) -> str:
        text = ";".join(g.to_string() for g in self.generators)
        return hashlib.sha256(f"{self.field}|{self.n}|{text}".encode("utf-8")).hexdigest()[:16]

    # --- normal forms ---

    def reduce_dense(self, d: int, vectors: np.ndarray) -> np.ndarray:
        """Cobasis coordinates of the normal forms of dense degree-d vectors (one per row)."""
        piece = self._pieces.get(d)
        if piece is None:
            return np.zeros((vectors.shape[0], 0), dtype=vectors.dtype)
        f = self.field
        if piece.pivots:
            lead = vectors[:, piece.pivots]
            if f.is_prime_field and vectors.dtype != object:
                vectors = (vectors - matmul_mod(lead, piece.ideal_rows, f.modulus)) % f.modulus
            else:
                vectors = reduce_array(f, vectors - np.dot(lead, piece.ideal_rows))
        return vectors[:, piece.cobasis_columns]

    def coordinates(self, poly: Polynomial) -> List[Raw]:
        """Normal form of a homogeneous polynomial as cobasis coordinates."""
        d = poly.homogeneous_degree()
        if d is None:
            if poly.is_zero():
                return []
            raise NonHomogeneousGenerator("coordinates need a homogeneous polynomial")
        row = to_array(self.field, [poly.dense(d)])
        coords = self.reduce_dense(d, row)[0]
        return [self.field.coerce(int(c)) if self.field.is_prime_field else c for c in coords]

    def _check_degree(self, i: int) -> None:
        if not 0 <= i < self.socle_degree:
            raise DegreeOutOfRange(f"degree {i} outside 0..{self.socle_degree - 1}")

    def _products(self, i: int, factor: Dict[int, Raw]) -> np.ndarray:
        """Dense degree-(i+1) vectors of (sum_k factor[k] x_k) * m for each cobasis m of degree i."""
        f = self.field
        size = len(monomial_basis(self.n, i + 1))
        index = monomial_index(self.n, i + 1)
        out = np.zeros((self.dim(i), size), dtype=field_dtype(f))
        if out.dtype == object:
            out[...] = f.zero
        for c, m in enumerate(self.cobasis(i)):
            for k, a in factor.items():
                col = index[mono_mul(m, unit_vector(self.n, k))]
                out[c, col] = f.add(out[c, col], a) if out.dtype == object else (int(out[c, col]) + a) % f.modulus
        return out

    def variable_matrices(self, i: int) -> List[np.ndarray]:
        """X_j: the h_{i+1} x h_i matrices of multiplication by x_j."""
        if i not in self._var_cache:
            self._check_degree(i)
            mats = []
            for k in range(self.n):
                coords = self.reduce_dense(i + 1, self._products(i, {k: self.field.one}))
                mats.append(coords.T.copy())
            self._var_cache[i] = mats
        return self._var_cache[i]

    def multiplication_matrix(self, linear_form: LinearForm, i: int) -> ExactMatrix:
        """Matrix of x l : [A]_i -> [A]_{i+1}; column c is the normal form of l * m_c."""
        self._check_degree(i)
        if linear_form.n != self.n:
            raise ArityMismatch(f"linear form in {linear_form.n} variables, algebra has {self.n}")
        factor = {k: a for k, a in enumerate(linear_form.coefficients) if a != 0}
        coords = self.reduce_dense(i + 1, self._products(i, factor))
        return ExactMatrix(self.field, coords.T.copy())

    def power_matrix(self, linear_form: LinearForm, i: int, k: int) -> ExactMatrix:
        """Matrix of x l^k : [A]_i -> [A]_{i+k}."""
        if k < 1 or i + k > self.socle_degree:
            raise DegreeOutOfRange(f"x l^{k} from degree {i} leaves 0..{self.socle_degree}")
        result = self.multiplication_matrix(linear_form, i)
        for step in range(1, k):
            result = self.multiplication_matrix(linear_form, i + step) @ result
        return result

    def socle_dimension(self, i: int) -> int:
        if not 0 <= i <= self.socle_degree:
            raise DegreeOutOfRange(f"degree {i} outside 0..{self.socle_degree}")
        if i == self.socle_degree:
            return self.dim(i)
        stacked = np.concatenate(self.variable_matrices(i), axis=0)
        return self.dim(i) - ExactMatrix(self.field, stacked).rank()

    def is_gorenstein(self) -> bool:
        if not self.hvector.is_symmetric():
            return False
        if self.socle_dimension(self.socle_degree) != 1:
            return False
        return all(self.socle_dimension(i) == 0 for i in range(self.socle_degree))

    def describe(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "field": str(self.field),
            "generators": [g.to_string() for g in self.generators],
            "hvector": self.hvector.to_list(),
            "socle_degree": self.socle_degree,
        }

    def __repr__(self) -> str:
        return f"GradedAlgebra({self.label()}, h={self.hvector})"


def build_algebra(n: int, field: FieldSpec, generators: Sequence[Polynomial],
                  artinian_cap: Optional[int] = None, name: Optional[str] = None) -> GradedAlgebra:
    return GradedAlgebra(n, field, generators, artinian_cap=artinian_cap, name=name)


def monomial_ci(degrees: Sequence[int], field: Optional[FieldSpec] = None) -> GradedAlgebra:
    """The monomial complete intersection (x_1^d_1, ..., x_n^d_n)."""
    field = field or FieldSpec.prime()
    n = len(degrees)
    gens = [Polynomial(n, field, {tuple(d if k == j else 0 for k in range(n)): 1}) for j, d in enumerate(degrees)]
    return GradedAlgebra(n, field, gens, name="monomial " + ",".join(map(str, degrees)))


def random_form(n: int, d: int, field: FieldSpec, rng) -> Polynomial:
    return Polynomial.from_dense(n, d, field, [field.random_element(rng) for _ in monomial_basis(n, d)])


def random_ci(degrees: Sequence[int], field: Optional[FieldSpec] = None, seed: int = 0,
              retries: int = GENERICITY_RETRIES) -> GradedAlgebra:
    """
    A general complete intersection of the given degrees.

    Every coefficient is drawn from the field with a seed derived from
    (seed, degrees, attempt). The h-vector is checked against ci_hvector and
    the draw is repeated up to ``retries`` times.
    """
    field = field or FieldSpec.prime()
    degrees = tuple(int(d) for d in degrees)
    n = len(degrees)
    expected = ci_hvector(degrees)
    for attempt in range(retries):
        rng = make_rng(seed, "random-ci", degrees, attempt)
        gens = [random_form(n, d, field, rng) for d in degrees]
        name = "random ci " + ",".join(map(str, degrees))
        try:
            algebra = GradedAlgebra(n, field, gens, name=name)
        except NotArtinian:
            logger.warning(f"random ci {degrees} attempt {attempt} is not artinian, reseeding")
            continue
        if algebra.hvector == expected:
            return algebra
        logger.warning(f"random ci {degrees} attempt {attempt} has h-vector {algebra.hvector}, "
                       f"expected {expected}; reseeding")
    raise GenericityFailure(f"no general complete intersection of type {degrees} over {field} "
                            f"after {retries} attempts")


# --- apolarity ---

def _check_characteristic(field: FieldSpec, e: int) -> None:
    if field.is_prime_field and field.modulus <= e:
        raise GenericityFailure(f"differentiation pairing needs p > {e}, got p = {field.modulus}")


def catalecticant(form: Polynomial, i: int) -> np.ndarray:
    """Matrix of the pairing [R]_i x [R]_{e-i} -> k, (u, v) -> (u v)(d) applied to the form."""
    e = form.homogeneous_degree()
    f = form.field
    n = form.n
    rows = monomial_basis(n, i)
    cols = monomial_basis(n, e - i)
    weights: Dict[Monomial, Raw] = {}
    for beta, c in form.terms.items():
        weight = 1
        for b in beta:
            weight *= factorial(b)
        weights[beta] = f.mul(c, f.coerce(weight))
    table = [[weights.get(mono_mul(a, b), 0) for b in cols] for a in rows]
    return to_array(f, table)


def gorenstein_from_dual_form(form: Polynomial, name: Optional[str] = None) -> GradedAlgebra:
    """
    A = R/Ann(F) for a nonzero homogeneous dual form F.

    [Ann F]_i is the left kernel of the degree-i catalecticant; h_A(i) is its
    rank. Over F_p the characteristic must exceed deg F.
    """
    e = form.homogeneous_degree()
    if form.is_zero() or e is None:
        raise NonHomogeneousGenerator("the dual form must be nonzero and homogeneous")
    f = form.field
    n = form.n
    _check_characteristic(f, e)
    gens: List[Polynomial] = []
    ranks = []
    for i in range(1, e + 2):
        if i <= e:
            cat = ExactMatrix(f, catalecticant(form, i))
            result = rref_rank_kernel(cat.transpose())
            ranks.append(result.rank)
            for vec in result.kernel:
                gens.append(Polynomial.from_dense(n, i, f, vec))
        else:
            gens.extend(Polynomial(n, f, {m: 1}) for m in monomial_basis(n, i))
    algebra = GradedAlgebra(n, f, gens, artinian_cap=e + 2, name=name or f"Ann(F), deg F = {e}")
    expected = HVector(tuple([1] + ranks))
    if algebra.hvector != expected:
        raise GenericityFailure(f"annihilator h-vector {algebra.hvector} differs from catalecticant ranks {expected}")
    return algebra


def _projective_key(field: FieldSpec, point: Sequence[Raw]) -> Tuple[Raw, ...]:
    lead = next((c for c in point if c != 0), None)
    if lead is None:
        raise DuplicatePoints("the zero vector is not a projective point")
    inv = field.inv(lead)
    return tuple(field.mul(c, inv) for c in point)


def points_hilbert_function(points: Sequence[Sequence[Any]], max_degree: int,
                            field: Optional[FieldSpec] = None) -> List[int]:
    """HF_Z(0..max_degree) of a reduced point set, by ranks of evaluation matrices."""
    field = field or FieldSpec.prime()
    pts = [[field.coerce(c) for c in p] for p in points]
    n = len(pts[0])
    values = []
    for d in range(max_degree + 1):
        monos = monomial_basis(n, d)
        table = [[_evaluate_monomial(field, p, m) for m in monos] for p in pts]
        values.append(ExactMatrix(field, to_array(field, table)).rank())
    return values


def _evaluate_monomial(field: FieldSpec, point: Sequence[Raw], mono: Monomial) -> Raw:
    value = field.one
    for x, e in zip(point, mono):
        if e:
            value = field.mul(value, field.power(x, e))
    return value


def gorenstein_from_points(points: Sequence[Sequence[Any]], e: int,
                           field: Optional[FieldSpec] = None, seed: int = 0,
                           retries: int = GENERICITY_RETRIES) -> GradedAlgebra:
    """
    Gorenstein quotient of the coordinate ring of a point set.

    F = sum_j c_j L_j^e with L_j the dual linear form of point j and random
    nonzero c_j. The result must have h_i = min(HF_Z(i), HF_Z(e - i)).
    """
    field = field or FieldSpec.prime()
    if not points:
        raise ValueError("need at least one point")
    n = len(points[0])
    pts = []
    seen = set()
    for p in points:
        if len(p) != n:
            raise ArityMismatch("points must share one ambient dimension")
        raw = tuple(field.coerce(c) for c in p)
        key = _projective_key(field, raw)
        if key in seen:
            raise DuplicatePoints(f"point {tuple(p)} repeats an earlier point")
        seen.add(key)
        pts.append(raw)
    _check_characteristic(field, e)
    hf = points_hilbert_function(pts, e, field)
    expected = HVector(tuple(min(hf[i], hf[e - i]) for i in range(e + 1)))
    dual_powers = []
    for p in pts:
        linear = Polynomial(n, field, {unit_vector(n, k): c for k, c in enumerate(p)})
        dual_powers.append(linear ** e)
    for attempt in range(retries):
        rng = make_rng(seed, "points", len(pts), e, attempt)
        form = Polynomial.zero(n, field)
        for power in dual_powers:
            form = form + power.scale(field.random_element(rng, nonzero=True))
        if form.is_zero():
            continue
        algebra = gorenstein_from_dual_form(form, name=f"{len(pts)} points, e={e}")
        if algebra.hvector == expected:
            return algebra
        logger.warning(f"points attempt {attempt}: h-vector {algebra.hvector}, expected {expected}; reseeding")
    raise GenericityFailure(f"no Gorenstein quotient with h-vector {expected} after {retries} attempts")
