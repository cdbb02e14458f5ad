"""
Pointwise Lefschetz tests and Jordan types of multiplication maps.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .artinian import GradedAlgebra, HVector, LinearForm, ci_hvector
from .errors import ArityMismatch, CriteriaDisagree, EmptySupport, TooManyMinors
from .exactfield import make_rng
from .locus import dual_matrix, is_in_locus, minor_ideal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        return cls(tuple(sorted((p for p in parts if p > 0), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        width = self.parts[0] if self.parts else 0
        return Partition(tuple(sum(1 for p in self.parts if p > k) for k in range(width)))

    def repeat(self, k: int) -> "Partition":
        """Every part repeated k times."""
        return Partition.from_parts([p for p in self.parts for _ in range(k)])

    def to_list(self) -> List[int]:
        return list(self.parts)

    def exponent_notation(self) -> str:
        counts = Counter(self.parts)
        return "[" + " ".join(f"{p}^{c}" if c > 1 else f"{p}" for p, c in sorted(counts.items(), reverse=True)) + "]"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def dual_partition(h: HVector) -> Partition:
    return Partition.from_parts(h.to_list()).conjugate()


def is_weak_lefschetz(A: GradedAlgebra, linear_form: LinearForm) -> bool:
    return not any(is_in_locus(A, i, linear_form) for i in range(A.socle_degree))


@dataclass
class WlpVerdict:
    verdict: bool
    witness: Optional[LinearForm]
    certified: bool
    trials: int
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "certified": self.certified,
            "trials": self.trials,
            "reason": self.reason,
        }


def _full_failure_degree(A: GradedAlgebra, seed: int) -> Optional[int]:
    # a degree whose maximal minors all vanish identically
    for i in range(A.socle_degree):
        try:
            if not minor_ideal(dual_matrix(A, i, seed=seed)).generators:
                return i
        except TooManyMinors as e:
            logger.warning(f"degree {i}: {e}; no certificate from this degree")
    return None


def has_wlp(A: GradedAlgebra, seed: int = 0, trials: int = 5) -> WlpVerdict:
    """
    Sample linear forms looking for a weak Lefschetz element.

    A witness certifies the WLP. Failure is only certified when some degree
    has an identically vanishing minor ideal; otherwise the verdict is an
    uncertified "no witness found".
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    for t in range(trials):
        ell = LinearForm.random(A.n, A.field, make_rng(seed, "wlp-trial", t))
        if is_weak_lefschetz(A, ell):
            logger.info(f"WLP witness after {t + 1} trial(s): {ell.to_string()}")
            return WlpVerdict(True, ell, True, t + 1)
    degree = _full_failure_degree(A, seed)
    if degree is not None:
        return WlpVerdict(False, None, True, trials,
                          reason=f"the locus in degree {degree} is the whole dual space")
    return WlpVerdict(False, None, False, trials, reason=f"no witness found in {trials} trials")


def _multiplication_matrices(A: GradedAlgebra, linear_form: LinearForm):
    return [A.multiplication_matrix(linear_form, i) for i in range(A.socle_degree)]


def slp_rank_table(A: GradedAlgebra, linear_form: LinearForm) -> Dict[Tuple[int, int], Dict[str, int]]:
    """rank of x l^k : [A]_i -> [A]_{i+k} for all i, k >= 1 with i + k <= e."""
    e = A.socle_degree
    mats = _multiplication_matrices(A, linear_form)
    table = {}
    for i in range(e):
        power = None
        for k in range(1, e - i + 1):
            power = mats[i] if power is None else mats[i + k - 1] @ power
            rank = power.rank()
            table[(i, k)] = {"rank": rank, "maximal": rank == min(A.dim(i), A.dim(i + k))}
    return table


def _rank_filtration(A: GradedAlgebra, table: Dict[Tuple[int, int], Dict[str, int]]) -> List[int]:
    e = A.socle_degree
    ranks = [A.dimension]
    for k in range(1, e + 1):
        ranks.append(sum(table[(i, k)]["rank"] for i in range(e - k + 1)))
    ranks.append(0)
    return ranks


def _jordan_from_ranks(ranks: Sequence[int]) -> Partition:
    # number of parts >= k is r_{k-1} - r_k
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return Partition.from_parts(at_least).conjugate()


def jordan_type(A: GradedAlgebra, linear_form: LinearForm) -> Partition:
    """Jordan type of the nilpotent operator x l on A."""
    return _jordan_from_ranks(_rank_filtration(A, slp_rank_table(A, linear_form)))


def is_strong_lefschetz(A: GradedAlgebra, linear_form: LinearForm) -> bool:
    table = slp_rank_table(A, linear_form)
    by_partition = _jordan_from_ranks(_rank_filtration(A, table)) == dual_partition(A.hvector)
    by_ranks = all(entry["maximal"] for entry in table.values())
    if by_partition != by_ranks:
        raise CriteriaDisagree(f"Jordan type says {by_partition}, ranks of powers say {by_ranks} "
                               f"for {linear_form.to_string()}")
    return by_partition


def monomial_jordan_prediction(degrees: Sequence[int], support: Sequence[int]) -> Partition:
    """
    Jordan type of the sum of x_j over ``support`` (1-based) on the monomial
    complete intersection with the given degrees: the dual partition of the
    selected degrees, every part repeated prod(all) / prod(selected) times.
    """
    selected = sorted(set(support))
    if not selected:
        raise EmptySupport("support must contain at least one index")
    if any(not 1 <= j <= len(degrees) for j in selected):
        raise ArityMismatch(f"support {selected} outside 1..{len(degrees)}")
    chosen = [degrees[j - 1] for j in selected]
    repeat = prod(degrees) // prod(chosen)
    return dual_partition(ci_hvector(chosen)).repeat(repeat)
