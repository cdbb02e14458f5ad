"""
A small Buchberger engine for homogeneous ideals.

Polynomials are handled internally as dicts ``monomial -> coefficient`` kept
monic. Pairs are chosen by the normal strategy (smallest lcm first) and
pruned with the product criterion and the Gebauer-Moeller chain criterion.
"""

import heapq
import logging
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .config import load_settings
from .errors import ArityMismatch, AuditFailure, BudgetExceeded, FieldMismatch
from .exactfield import FieldSpec, Raw
from .multipoly import Monomial, Polynomial, mono_div, mono_divides, mono_lcm, mono_mul

logger = logging.getLogger(__name__)

GREVLEX = "grevlex"
ELIMINATION = "elim"

Terms = Dict[Monomial, Raw]


def _grevlex_heap_key(m: Monomial) -> Tuple:
    # smallest heap key = largest grevlex monomial
    return (-sum(m), tuple(reversed(m)))


def _elim_heap_key(m: Monomial) -> Tuple:
    # the auxiliary variable sits at index 0 and outranks everything else
    return (-m[0], -sum(m[1:]), tuple(reversed(m[1:])))


def _heap_key(order: str) -> Callable[[Monomial], Tuple]:
    return _elim_heap_key if order == ELIMINATION else _grevlex_heap_key


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class GroebnerBasis:
    n: int
    field: FieldSpec
    order: str
    generators: Tuple[Polynomial, ...]
    leading_monomials: Tuple[Monomial, ...]
    steps: int = 0

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials)

    def is_zero(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)


@dataclass
class DimensionDegree:
    """Projective dimension and degree of Proj(S/I); dimension -1 means empty."""
    krull_dimension: int
    degree: int
    hilbert_series_numerator: List[int] = dc_field(default_factory=list)
    ambient: int = 0

    @property
    def projective_dimension(self) -> int:
        return self.krull_dimension - 1

    @property
    def codimension(self) -> int:
        """Codimension in projective (ambient-1)-space; ambient when empty."""
        return self.ambient - self.krull_dimension

    @property
    def is_empty(self) -> bool:
        return self.krull_dimension <= 0


class _Engine:
    def __init__(self, n: int, field: FieldSpec, order: str, budget: int):
        self.n = n
        self.field = field
        self.order = order
        self.key = _heap_key(order)
        self.budget = budget
        self.steps = 0
        self.polys: List[Terms] = []
        self.leads: List[Monomial] = []

    # --- polynomial helpers ---

    def lead(self, terms: Terms) -> Monomial:
        return min(terms, key=self.key)

    def monic(self, terms: Terms) -> Terms:
        f = self.field
        inv = f.inv(terms[self.lead(terms)])
        return {m: f.mul(c, inv) for m, c in terms.items()}

    def find_divisor(self, m: Monomial, active: Sequence[int]) -> Optional[int]:
        for k in active:
            if mono_divides(self.leads[k], m):
                return k
        return None

    def reduce(self, terms: Terms, active: Sequence[int], full: bool = True) -> Terms:
        """Normal form of ``terms`` modulo the monic polynomials indexed by ``active``."""
        f = self.field
        key = self.key
        work = dict(terms)
        heap = [(key(m), m) for m in work]
        heapq.heapify(heap)
        remainder: Terms = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m, None)
            if c is None:
                continue
            k = self.find_divisor(m, active)
            if k is None:
                remainder[m] = c
                if not full:
                    remainder.update(work)
                    return remainder
                continue
            g = self.polys[k]
            glead = self.leads[k]
            q = mono_div(m, glead)
            for gm, gc in g.items():
                if gm == glead:
                    continue
                mm = mono_mul(gm, q)
                old = work.get(mm)
                new = f.sub(old if old is not None else f.zero, f.mul(c, gc))
                if old is None:
                    heapq.heappush(heap, (key(mm), mm))
                if new == 0:
                    work.pop(mm, None)
                else:
                    work[mm] = new
        return remainder

    def spoly(self, i: int, j: int) -> Terms:
        f = self.field
        lcm = mono_lcm(self.leads[i], self.leads[j])
        qi = mono_div(lcm, self.leads[i])
        qj = mono_div(lcm, self.leads[j])
        out: Terms = {}
        for m, c in self.polys[i].items():
            out[mono_mul(m, qi)] = c
        for m, c in self.polys[j].items():
            mm = mono_mul(m, qj)
            v = f.sub(out.get(mm, f.zero), c)
            if v == 0:
                out.pop(mm, None)
            else:
                out[mm] = v
        return out

    def add(self, terms: Terms) -> int:
        terms = self.monic(terms)
        self.polys.append(terms)
        self.leads.append(self.lead(terms))
        return len(self.polys) - 1

    # --- Buchberger ---

    def update(self, active: List[int], pairs: List[Tuple[int, int]], h: int):
        lh = self.leads[h]
        candidates = [(h, g) for g in active]
        kept = []
        while candidates:
            pair = candidates.pop(0)
            g1 = pair[1]
            lcm1 = mono_lcm(lh, self.leads[g1])
            if _coprime(lh, self.leads[g1]):
                kept.append(pair)
                continue
            dominated = any(mono_divides(mono_lcm(lh, self.leads[g2]), lcm1)
                            for _, g2 in candidates + kept)
            if not dominated:
                kept.append(pair)
        new_pairs = [(a, b) for a, b in kept if not _coprime(lh, self.leads[b])]
        survivors = []
        for g1, g2 in pairs:
            lcm12 = mono_lcm(self.leads[g1], self.leads[g2])
            if (mono_divides(lh, lcm12)
                    and mono_lcm(self.leads[g1], lh) != lcm12
                    and mono_lcm(lh, self.leads[g2]) != lcm12):
                continue
            survivors.append((g1, g2))
        survivors.extend(new_pairs)
        new_active = [g for g in active if not mono_divides(lh, self.leads[g])]
        new_active.append(h)
        return new_active, survivors

    def pair_key(self, pair: Tuple[int, int]) -> Tuple:
        lcm = mono_lcm(self.leads[pair[0]], self.leads[pair[1]])
        weight = sum(lcm[1:]) if self.order == ELIMINATION else sum(lcm)
        return (weight, self.key(lcm), pair)

    def run(self, inputs: Sequence[Terms]) -> List[int]:
        active: List[int] = []
        pairs: List[Tuple[int, int]] = []
        ordered = sorted((t for t in inputs if t), key=lambda t: self.key(self.lead(t)), reverse=True)
        for terms in ordered:
            reduced = self.reduce(terms, active)
            if reduced:
                h = self.add(reduced)
                active, pairs = self.update(active, pairs, h)
        while pairs:
            pairs.sort(key=self.pair_key)
            i, j = pairs.pop(0)
            self.steps += 1
            if self.steps > self.budget:
                raise BudgetExceeded(f"Buchberger exceeded {self.budget} pair reductions", self.steps)
            h_terms = self.reduce(self.spoly(i, j), active)
            if h_terms:
                h = self.add(h_terms)
                active, pairs = self.update(active, pairs, h)
        return active

    def reduced_basis(self, active: List[int]) -> List[Terms]:
        minimal = [k for k in active
                   if not any(o != k and mono_divides(self.leads[o], self.leads[k])
                              and (self.leads[o] != self.leads[k] or o < k) for o in active)]
        result = []
        for k in minimal:
            others = [o for o in minimal if o != k]
            lead = self.leads[k]
            tail = {m: c for m, c in self.polys[k].items() if m != lead}
            reduced_tail = self.reduce(tail, others) if tail else {}
            reduced_tail[lead] = self.polys[k][lead]
            result.append(reduced_tail)
        result.sort(key=lambda t: self.key(self.lead(t)))
        return result


def _to_terms(poly: Polynomial) -> Terms:
    return dict(poly.terms)


def _check_inputs(gens: Sequence[Polynomial]) -> Tuple[int, FieldSpec]:
    if not gens:
        raise ArityMismatch("need at least one generator to fix the ambient ring")
    n, f = gens[0].n, gens[0].field
    for g in gens:
        if g.n != n:
            raise ArityMismatch(f"{g.n} vs {n} variables")
        if g.field != f:
            raise FieldMismatch(f"{g.field} vs {f}")
    return n, f


def _basis_from_terms(n: int, field: FieldSpec, order: str, engine: _Engine, terms_list: List[Terms]) -> GroebnerBasis:
    polys = tuple(Polynomial._raw(n, field, t) for t in terms_list)
    leads = tuple(engine.lead(t) for t in terms_list)
    return GroebnerBasis(n=n, field=field, order=order, generators=polys, leading_monomials=leads, steps=engine.steps)


def buchberger(gens: Sequence[Polynomial], budget: Optional[int] = None, order: str = GREVLEX,
               n: Optional[int] = None, field: Optional[FieldSpec] = None) -> GroebnerBasis:
    """
    Reduced Groebner basis of the ideal generated by ``gens``.

    Args:
        gens: Generators, all in the same ring.
        budget: Maximum number of S-pair reductions (default from settings).
        order: ``grevlex``, or ``elim`` for the block order with variable 0 first.
        n, field: Ambient ring, needed only when ``gens`` is empty.

    Returns:
        The reduced GroebnerBasis.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        if n is None or field is None:
            raise ArityMismatch("an empty generator list needs an explicit ring")
        return GroebnerBasis(n=n, field=field, order=order, generators=(), leading_monomials=())
    n, f = _check_inputs(gens)
    if budget is None:
        budget = load_settings().gb_budget
    engine = _Engine(n, f, order, budget)
    active = engine.run([_to_terms(g) for g in gens])
    reduced = engine.reduced_basis(active)
    logger.debug(f"Groebner basis: {len(reduced)} elements after {engine.steps} pair reductions")
    return _basis_from_terms(n, f, order, engine, reduced)


def _engine_for(G: GroebnerBasis) -> Tuple[_Engine, List[int]]:
    engine = _Engine(G.n, G.field, G.order, budget=0)
    for g in G.generators:
        engine.polys.append(dict(g.terms))
        engine.leads.append(engine.lead(g.terms))
    return engine, list(range(len(engine.polys)))


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of f modulo G; zero iff f lies in the ideal."""
    if f.n != G.n:
        raise ArityMismatch(f"{f.n} vs {G.n} variables")
    if f.field != G.field:
        raise FieldMismatch(f"{f.field} vs {G.field}")
    if f.is_zero() or not G.generators:
        return f
    engine, active = _engine_for(G)
    return Polynomial._raw(f.n, f.field, engine.reduce(dict(f.terms), active))


def contains(G: GroebnerBasis, f: Polynomial) -> bool:
    return normal_form(f, G).is_zero()


def audit_basis(G: GroebnerBasis) -> None:
    """Check that every S-polynomial of G reduces to zero."""
    engine, active = _engine_for(G)
    for a in range(len(active)):
        for b in range(a + 1, len(active)):
            if _coprime(engine.leads[a], engine.leads[b]):
                continue
            if engine.reduce(engine.spoly(a, b), active):
                raise AuditFailure(f"S-polynomial of generators {a} and {b} does not reduce to zero")


def _lift(poly: Polynomial, t_exponent: int) -> Terms:
    return {(t_exponent,) + m: c for m, c in poly.terms.items()}


def ideal_intersection(G1: GroebnerBasis, G2: GroebnerBasis, budget: Optional[int] = None) -> GroebnerBasis:
    """
    Groebner basis of I1 intersected with I2.

    Eliminates t from t*I1 + (1-t)*I2 with a block order that puts t first.
    t has weight zero, so homogeneous inputs stay weighted-homogeneous.
    """
    if G1.n != G2.n:
        raise ArityMismatch(f"{G1.n} vs {G2.n} variables")
    if G1.field != G2.field:
        raise FieldMismatch(f"{G1.field} vs {G2.field}")
    n, f = G1.n, G1.field
    if not G1.generators or not G2.generators:
        return GroebnerBasis(n=n, field=f, order=GREVLEX, generators=(), leading_monomials=())
    if budget is None:
        budget = load_settings().gb_budget
    inputs: List[Terms] = [_lift(g, 1) for g in G1.generators]
    for g in G2.generators:
        terms = _lift(g, 0)
        for m, c in g.terms.items():
            terms[(1,) + m] = f.neg(c)
        inputs.append(terms)
    engine = _Engine(n + 1, f, ELIMINATION, budget)
    active = engine.run(inputs)
    reduced = engine.reduced_basis(active)
    kept = [Polynomial._raw(n, f, {m[1:]: c for m, c in t.items()})
            for t in reduced if engine.lead(t)[0] == 0]
    logger.debug(f"intersection: {len(kept)} of {len(reduced)} elimination elements are t-free")
    return buchberger(kept, budget=budget, n=n, field=f)


# --- Hilbert series of monomial ideals ---

def _minimalize(monos: Sequence[Monomial]) -> List[Monomial]:
    result: List[Monomial] = []
    for m in sorted(set(monos), key=sum):
        if not any(mono_divides(g, m) for g in result):
            result.append(m)
    return result


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: List[int], b: List[int]) -> List[int]:
    size = max(len(a), len(b))
    return [(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(size)]


def _shift(a: List[int], k: int) -> List[int]:
    return [0] * k + a


def _one_minus_t_power(k: int) -> List[int]:
    out = [0] * (k + 1)
    out[0] += 1
    out[k] -= 1
    return out


def _pure_power_numerator(monos: Sequence[Monomial]) -> List[int]:
    result = [1]
    for m in monos:
        result = _poly_mul(result, _one_minus_t_power(sum(m)))
    return result


def _is_pure_power(m: Monomial) -> bool:
    return sum(1 for e in m if e) <= 1


def _colon(monos: Sequence[Monomial], p: Monomial) -> List[Monomial]:
    return _minimalize([tuple(max(a - b, 0) for a, b in zip(m, p)) for m in monos])


def hilbert_numerator(monos: Sequence[Monomial], n: int) -> List[int]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^n of S/(monos)."""
    gens = _minimalize(monos)
    if any(sum(m) == 0 for m in gens):
        return [0]
    nontrivial = [m for m in gens if not _is_pure_power(m)]
    if not nontrivial:
        return _pure_power_numerator(gens)
    if len(nontrivial) == 1:
        powers = [m for m in gens if _is_pure_power(m)]
        m = nontrivial[0]
        base = _pure_power_numerator(powers)
        colon = _colon(powers, m)
        if any(sum(c) == 0 for c in colon):
            return base
        return _poly_sub(base, _shift(_pure_power_numerator(colon), sum(m)))
    # pivot on the variable dividing the most non-pure-power generators
    counts = [sum(1 for m in nontrivial if m[j]) for j in range(n)]
    j = max(range(n), key=lambda k: counts[k])
    p = tuple(1 if k == j else 0 for k in range(n))
    left = _minimalize([m for m in gens if not m[j]] + [p])
    right = _colon(gens, p)
    return _poly_add(hilbert_numerator(left, n), _shift(hilbert_numerator(right, n), 1))


def _poly_add(a: List[int], b: List[int]) -> List[int]:
    size = max(len(a), len(b))
    return [(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(size)]


def _trim(a: List[int]) -> List[int]:
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def dimension_degree(G: GroebnerBasis) -> DimensionDegree:
    """
    Krull dimension and degree of S/I from the initial ideal of G.

    The numerator N(t) is divided by (1 - t) while t = 1 is a root; the
    quotient evaluated at 1 is the degree. Empty projective schemes (unit or
    irrelevant ideals) report krull_dimension <= 0 and degree 0.
    """
    n = G.n
    numerator = _trim(hilbert_numerator(G.leading_monomials, n)) if G.generators else [1]
    if all(c == 0 for c in numerator):
        return DimensionDegree(krull_dimension=0, degree=0, hilbert_series_numerator=[0], ambient=n)
    q = list(numerator)
    divisions = 0
    while sum(q) == 0:
        # synthetic division by (1 - t)
        out = []
        acc = 0
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = out
        divisions += 1
    krull = n - divisions
    if krull <= 0:
        return DimensionDegree(krull_dimension=0, degree=0, hilbert_series_numerator=numerator, ambient=n)
    return DimensionDegree(krull_dimension=krull, degree=sum(q), hilbert_series_numerator=numerator, ambient=n)
