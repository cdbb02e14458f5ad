"""
Dense exact linear algebra over Q and F_p.

F_p matrices are numpy int64 arrays reduced mod p (moduli below 2**31 keep
every product inside int64); Q matrices are numpy object arrays of
``Fraction``. Determinants of matrices of linear forms are recovered by
evaluation at principal-lattice points followed by exact interpolation.
"""

import logging
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ArityMismatch, FieldMismatch, GenericityFailure, InterpolationInconsistent
from .exactfield import FieldSpec, Raw, Scalar, derive_seed, make_rng
from .multipoly import Polynomial, monomial_basis

logger = logging.getLogger(__name__)

INT64_SAFE_MODULUS = 1 << 31
VERIFY_POINTS = 5


def field_dtype(field: FieldSpec):
    if field.is_prime_field and field.modulus < INT64_SAFE_MODULUS:
        return np.int64
    return object


def to_array(field: FieldSpec, values: Any) -> np.ndarray:
    """Convert nested sequences of raw/int/Fraction values into a field array."""
    arr = np.array(values, dtype=object)
    if arr.size:
        arr = np.vectorize(field.coerce, otypes=[object])(arr)
    if field_dtype(field) is np.int64:
        return arr.astype(np.int64)
    return arr


def reduce_array(field: FieldSpec, arr: np.ndarray) -> np.ndarray:
    return arr % field.modulus if field.is_prime_field else arr


def inverse_array(values: np.ndarray, p: int) -> np.ndarray:
    """Elementwise inverse mod p by vectorized exponentiation; zeros stay zero."""
    result = np.ones_like(values)
    base = values % p
    e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product mod p without int64 overflow."""
    if a.dtype == object or b.dtype == object:
        return np.dot(a, b) % p
    k = a.shape[-1]
    if (p - 1) * (p - 1) * max(k, 1) < (1 << 63):
        return (a @ b) % p
    lo = b & 0xFFFF
    hi = b >> 16
    return ((a @ lo) % p + ((a @ hi) % p) * (1 << 16)) % p


def _rref(field: FieldSpec, a: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    a = a.copy()
    rows, cols = a.shape
    prime = field.is_prime_field
    p = field.modulus
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c] != 0)[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = field.inv(a[r, c] if not prime else int(a[r, c]))
        a[r] = a[r] * inv % p if prime else a[r] * inv
        column = a[:, c].copy()
        column[r] = 0
        targets = np.nonzero(column != 0)[0]
        if targets.size:
            update = np.outer(column[targets], a[r])
            a[targets] = (a[targets] - update) % p if prime else a[targets] - update
        pivots.append(c)
        r += 1
    return a, pivots


class ExactMatrix:
    """A rectangular matrix with entries in one exact field."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data: np.ndarray):
        if data.ndim != 2:
            raise ArityMismatch("ExactMatrix needs a 2-d array")
        self.field = field
        self.data = data

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> "ExactMatrix":
        if not rows:
            return cls.zeros(field, 0, cols or 0)
        return cls(field, to_array(field, [list(r) for r in rows]))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "ExactMatrix":
        dtype = field_dtype(field)
        data = np.zeros((rows, cols), dtype=dtype)
        if dtype is object:
            data[...] = field.zero
        return cls(field, data)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def entry(self, r: int, c: int) -> Scalar:
        v = self.data[r, c]
        return Scalar(self.field, int(v) if self.field.is_prime_field else v)

    def to_lists(self) -> List[List[Raw]]:
        if self.field.is_prime_field:
            return [[int(v) for v in row] for row in self.data]
        return [list(row) for row in self.data]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.data.T.copy())

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.field.is_prime_field:
            return ExactMatrix(self.field, matmul_mod(self.data, other.data, self.field.modulus))
        return ExactMatrix(self.field, np.dot(self.data, other.data))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(np.all(self.data == other.data))

    def rank(self) -> int:
        if 0 in self.shape:
            return 0
        return len(_rref(self.field, self.data)[1])

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols} over {self.field})"


@dataclass
class RrefResult:
    rank: int
    pivots: List[int]
    rref: ExactMatrix
    kernel: List[Tuple[Raw, ...]] = dc_field(default_factory=list)


def rref_rank_kernel(m: ExactMatrix) -> RrefResult:
    """
    Reduced row echelon form, rank, pivot columns and a right-kernel basis.

    Kernel vectors are checked against the input before returning.
    """
    f = m.field
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        r, pivots = m.data.copy(), []
    else:
        r, pivots = _rref(f, m.data)
    rank = len(pivots)
    kernel = []
    free = [c for c in range(cols) if c not in set(pivots)]
    for fc in free:
        v = [f.zero] * cols
        v[fc] = f.one
        for row, pc in enumerate(pivots):
            v[pc] = f.neg(f.coerce(int(r[row, fc]) if f.is_prime_field else r[row, fc]))
        kernel.append(tuple(v))
    if kernel and rows:
        check = ExactMatrix(f, m.data) @ ExactMatrix(f, to_array(f, [list(v) for v in kernel]).T)
        if np.any(check.data != 0):
            raise InterpolationInconsistent("kernel vector does not annihilate the matrix")
    return RrefResult(rank=rank, pivots=pivots, rref=ExactMatrix(f, r), kernel=kernel)


def row_space_basis(field: FieldSpec, a: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Nonzero rows of the RREF together with their pivot columns."""
    if a.shape[0] == 0:
        return a, []
    r, pivots = _rref(field, a)
    return r[: len(pivots)], pivots


def determinant(field: FieldSpec, a: np.ndarray) -> Raw:
    return batch_determinant(field, a[None, :, :])[0]


def batch_determinant(field: FieldSpec, mats: np.ndarray) -> List[Raw]:
    """Determinants of a stack of square matrices, shape (batch, t, t)."""
    if field.is_prime_field and mats.dtype != object:
        return [int(v) for v in batch_determinant_mod_p(mats, field.modulus)]
    return [_determinant_generic(field, m) for m in mats]


def _determinant_generic(field: FieldSpec, m: np.ndarray) -> Raw:
    a = m.copy()
    t = a.shape[0]
    det = field.one
    for c in range(t):
        nz = [r for r in range(c, t) if a[r, c] != 0]
        if not nz:
            return field.zero
        k = nz[0]
        if k != c:
            a[[c, k]] = a[[k, c]]
            det = field.neg(det)
        pivot = a[c, c]
        det = field.mul(det, pivot)
        inv = field.inv(pivot)
        for r in range(c + 1, t):
            if a[r, c] != 0:
                factor = field.mul(a[r, c], inv)
                for j in range(c, t):
                    a[r, j] = field.sub(a[r, j], field.mul(factor, a[c, j]))
    return det


def batch_determinant_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Vectorized Gaussian elimination over F_p on a (batch, t, t) int64 stack."""
    a = np.array(mats, dtype=np.int64) % p
    batch, t, _ = a.shape
    det = np.ones(batch, dtype=np.int64)
    idx = np.arange(batch)
    for c in range(t):
        nonzero = a[:, c:, c] != 0
        has = nonzero.any(axis=1)
        piv = c + np.argmax(nonzero, axis=1)
        swap = has & (piv != c)
        if swap.any():
            b = idx[swap]
            pr = piv[swap]
            row_c = a[b, c, :].copy()
            a[b, c, :] = a[b, pr, :]
            a[b, pr, :] = row_c
            det[b] = (p - det[b]) % p
        pivots = a[:, c, c]
        det = det * pivots % p
        if c + 1 == t:
            break
        inv = inverse_array(pivots, p)
        factors = a[:, c + 1:, c] * inv[:, None] % p
        a[:, c + 1:, c:] = (a[:, c + 1:, c:] - factors[:, :, None] * a[:, c, None, c:]) % p
    return det


# --- determinants of matrices of linear forms ---

@lru_cache(maxsize=None)
def lattice_points(m: int, t: int) -> Tuple[Tuple[int, ...], ...]:
    """Exponent vectors of degree t in m variables, used as interpolation nodes."""
    return monomial_basis(m, t)


@lru_cache(maxsize=64)
def _interpolation_inverse(field: FieldSpec, m: int, t: int) -> np.ndarray:
    points = lattice_points(m, t)
    monos = monomial_basis(m, t)
    v = to_array(field, [[_power_product(pt, mono) for mono in monos] for pt in points])
    n = len(monos)
    eye = ExactMatrix.zeros(field, n, n).data
    for k in range(n):
        eye[k, k] = field.one
    aug = np.concatenate([v, eye], axis=1)
    r, pivots = _rref(field, aug)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise GenericityFailure(f"interpolation nodes degenerate over {field} for degree {t}")
    logger.debug(f"interpolation inverse ready for m={m}, t={t} ({n} nodes)")
    return r[:, n:]


def _power_product(point: Sequence[int], mono: Sequence[int]) -> int:
    value = 1
    for x, e in zip(point, mono):
        value *= x ** e
    return value


def linear_matrix_tensor(entries: Sequence[Sequence[Polynomial]], m: int, field: FieldSpec) -> np.ndarray:
    """Coefficient tensor T[j, r, c] with entry (r, c) = sum_j T[j, r, c] * a_j."""
    rows = len(entries)
    cols = len(entries[0]) if rows else 0
    t = np.zeros((m, rows, cols), dtype=field_dtype(field))
    if t.dtype == object:
        t[...] = field.zero
    for r, row in enumerate(entries):
        for c, entry in enumerate(row):
            for mono, coeff in entry.terms.items():
                if sum(mono) != 1:
                    raise ArityMismatch(f"entry ({r}, {c}) is not a linear form")
                t[mono.index(1), r, c] = coeff
    return t


def evaluate_tensor(field: FieldSpec, tensor: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Stack of specialized matrices: result[k] = sum_j points[k, j] * tensor[j]."""
    m, rows, cols = tensor.shape
    flat = tensor.reshape(m, rows * cols)
    if field.is_prime_field:
        values = matmul_mod(points % field.modulus, flat, field.modulus)
    else:
        values = np.dot(points, flat)
    return values.reshape(points.shape[0], rows, cols)


def _interpolate(field: FieldSpec, values: np.ndarray, m: int, t: int) -> np.ndarray:
    """Coefficients (against monomial_basis(m, t)) from values at the lattice nodes; values is (k, N)."""
    inv = _interpolation_inverse(field, m, t)
    if field.is_prime_field:
        return matmul_mod(values, inv.T.copy(), field.modulus)
    return np.dot(values, inv.T)


def _verification_points(field: FieldSpec, m: int, t: int, label: str) -> np.ndarray:
    rng = make_rng(derive_seed(0, "det-verify", label, m, t))
    pts = [[field.random_element(rng) for _ in range(m)] for _ in range(VERIFY_POINTS)]
    return to_array(field, pts)


def _evaluate_coefficients(field: FieldSpec, coeffs: np.ndarray, m: int, t: int, points: np.ndarray) -> np.ndarray:
    monos = monomial_basis(m, t)
    table = to_array(field, [[_field_power_product(field, pt, mono) for pt in points] for mono in monos])
    if field.is_prime_field:
        return matmul_mod(coeffs, table, field.modulus)
    return np.dot(coeffs, table)


def _field_power_product(field: FieldSpec, point: Sequence[Any], mono: Sequence[int]) -> Raw:
    value = field.one
    for x, e in zip(point, mono):
        if e:
            value = field.mul(value, field.power(field.coerce(int(x) if field.is_prime_field else x), e))
    return value


def evaluate_minors(field: FieldSpec, tensor: np.ndarray, subsets: Sequence[Sequence[int]],
                    label: str = "minors") -> np.ndarray:
    """
    Interpolate every maximal minor of a tall matrix of linear forms.

    Args:
        field: Coefficient field.
        tensor: Coefficient tensor (m, rows, cols) with rows >= cols.
        subsets: Row subsets of size cols.
        label: Seeds the re-verification points.

    Returns:
        Array (len(subsets), N) of coefficients against monomial_basis(m, cols).
    """
    m, rows, cols = tensor.shape
    t = cols
    nodes = to_array(field, [list(pt) for pt in lattice_points(m, t)])
    specialized = evaluate_tensor(field, tensor, nodes)
    values = np.stack([
        np.array(batch_determinant(field, specialized[:, list(rows_sel), :]), dtype=specialized.dtype)
        for rows_sel in subsets
    ]) if subsets else np.zeros((0, len(nodes)), dtype=specialized.dtype)
    coeffs = _interpolate(field, values, m, t)

    check_pts = _verification_points(field, m, t, label)
    check_mats = evaluate_tensor(field, tensor, check_pts)
    predicted = _evaluate_coefficients(field, coeffs, m, t, check_pts)
    for k, rows_sel in enumerate(subsets):
        direct = batch_determinant(field, check_mats[:, list(rows_sel), :])
        if any(field.coerce(int(a) if field.is_prime_field else a) != d for a, d in zip(predicted[k], direct)):
            raise InterpolationInconsistent(f"minor on rows {tuple(rows_sel)} failed re-verification")
    return coeffs


def det_linear_tensor(field: FieldSpec, tensor: np.ndarray) -> Polynomial:
    m, rows, cols = tensor.shape
    if rows != cols:
        raise ArityMismatch(f"determinant needs a square matrix, got {rows}x{cols}")
    if rows == 0:
        return Polynomial.constant(m, field, 1)
    coeffs = evaluate_minors(field, tensor, [tuple(range(rows))], label="det")[0]
    return Polynomial.from_dense(m, rows, field, [int(c) if field.is_prime_field else c for c in coeffs])


def det_linear_matrix(entries: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant of a square matrix whose entries are linear forms."""
    if not entries:
        raise ArityMismatch("empty matrix")
    first = entries[0][0]
    tensor = linear_matrix_tensor(entries, first.n, first.field)
    return det_linear_tensor(first.field, tensor)
