"""
Sparse homogeneous polynomials over an exact field.

Monomials are exponent tuples. The monomial order is graded reverse
lexicographic everywhere, with x1 > x2 > ... > xn.
"""

import re
import logging
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ArityMismatch, FieldMismatch, ParseError, UnknownVariable
from .exactfield import FieldSpec, Raw, Scalar

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


def grevlex_key(m: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: a larger key is a larger monomial in grevlex."""
    return (sum(m), tuple(-e for e in reversed(m)))


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> Tuple[Monomial, ...]:
    """All C(d+n-1, n-1) monomials of degree d in n variables, grevlex-descending."""
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    monos = []
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for j in combo:
            exps[j] += 1
        monos.append(tuple(exps))
    monos.sort(key=grevlex_key, reverse=True)
    return tuple(monos)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> Dict[Monomial, int]:
    return {m: k for k, m in enumerate(monomial_basis(n, d))}


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def unit_vector(n: int, j: int) -> Monomial:
    return tuple(1 if k == j else 0 for k in range(n))


class Polynomial:
    """A polynomial in n variables with raw coefficients in ``field``."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: FieldSpec, terms: Optional[Dict[Monomial, Any]] = None):
        self.n = n
        self.field = field
        self.terms: Dict[Monomial, Raw] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != n:
                    raise ArityMismatch(f"monomial {m} has {len(m)} exponents, expected {n}")
                c = field.coerce(c)
                if c != 0:
                    self.terms[tuple(m)] = c

    @classmethod
    def _raw(cls, n: int, field: FieldSpec, terms: Dict[Monomial, Raw]) -> "Polynomial":
        # trusted constructor: coefficients already canonical, zeros removed
        p = cls.__new__(cls)
        p.n = n
        p.field = field
        p.terms = terms
        return p

    @classmethod
    def zero(cls, n: int, field: FieldSpec) -> "Polynomial":
        return cls._raw(n, field, {})

    @classmethod
    def constant(cls, n: int, field: FieldSpec, c: Any) -> "Polynomial":
        return cls(n, field, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, field: FieldSpec, j: int) -> "Polynomial":
        """The j-th variable, 0-based."""
        return cls._raw(n, field, {unit_vector(n, j): field.one})

    @classmethod
    def from_dense(cls, n: int, d: int, field: FieldSpec, coeffs: Sequence[Any]) -> "Polynomial":
        basis = monomial_basis(n, d)
        if len(coeffs) != len(basis):
            raise ArityMismatch(f"{len(coeffs)} coefficients for {len(basis)} monomials")
        return cls(n, field, dict(zip(basis, coeffs)))

    # --- inspection ---

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_degree(self) -> Optional[int]:
        degrees = {sum(m) for m in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def leading_monomial(self) -> Monomial:
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self) -> Raw:
        return self.terms[self.leading_monomial()]

    def coefficient(self, m: Monomial) -> Scalar:
        return Scalar(self.field, self.terms.get(tuple(m), self.field.zero))

    def dense(self, d: int) -> List[Raw]:
        """Coefficients against monomial_basis(n, d)."""
        zero = self.field.zero
        return [self.terms.get(m, zero) for m in monomial_basis(self.n, d)]

    # --- arithmetic ---

    def _check(self, other: "Polynomial") -> None:
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.n != self.n:
            raise ArityMismatch(f"{self.n} vs {other.n} variables")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(terms.get(m, f.zero), c)
            if s == 0:
                terms.pop(m, None)
            else:
                terms[m] = s
        return Polynomial._raw(self.n, f, terms)

    def __neg__(self) -> "Polynomial":
        f = self.field
        return Polynomial._raw(self.n, f, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.field
        terms: Dict[Monomial, Raw] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                terms[m] = f.add(terms.get(m, f.zero), f.mul(c1, c2))
        return Polynomial._raw(self.n, f, {m: c for m, c in terms.items() if c != 0})

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial.constant(self.n, self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Any) -> "Polynomial":
        f = self.field
        c = f.coerce(c)
        if c == 0:
            return Polynomial.zero(self.n, f)
        return Polynomial._raw(self.n, f, {m: f.mul(v, c) for m, v in self.terms.items()})

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading_coefficient()))

    def multiply_monomial(self, m: Monomial, c: Raw = None) -> "Polynomial":
        f = self.field
        if c is None:
            return Polynomial._raw(self.n, f, {mono_mul(k, m): v for k, v in self.terms.items()})
        return Polynomial._raw(self.n, f, {mono_mul(k, m): f.mul(v, c) for k, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.field, frozenset(self.terms.items())))

    # --- evaluation ---

    def evaluate(self, point: Sequence[Any]) -> Raw:
        if len(point) != self.n:
            raise ArityMismatch(f"point has {len(point)} coordinates, expected {self.n}")
        f = self.field
        values = [f.coerce(v) for v in point]
        total = f.zero
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term = f.mul(term, f.power(v, e))
            total = f.add(total, term)
        return total

    def substitute_linear(self, p: Sequence[Any], q: Sequence[Any]) -> "Polynomial":
        """Restrict to the line s*p + t*q; the result is a binary form in (s, t)."""
        if len(p) != self.n or len(q) != self.n:
            raise ArityMismatch("line direction vectors must have n coordinates")
        f = self.field
        forms = [Polynomial(2, f, {(1, 0): pj, (0, 1): qj}) for pj, qj in zip(p, q)]
        powers: Dict[Tuple[int, int], Polynomial] = {}
        result = Polynomial.zero(2, f)
        for m, c in self.terms.items():
            term = Polynomial.constant(2, f, c)
            for j, e in enumerate(m):
                if e:
                    if (j, e) not in powers:
                        powers[(j, e)] = forms[j] ** e
                    term = term * powers[(j, e)]
            result = result + term
        return result

    # --- display ---

    def to_string(self, prefix: str = "x") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.field.to_display(self.terms[m])
            factors = []
            for j, e in enumerate(m):
                if e == 1:
                    factors.append(f"{prefix}{j + 1}")
                elif e > 1:
                    factors.append(f"{prefix}{j + 1}^{e}")
            if not factors:
                pieces.append(c)
            elif c == "1":
                pieces.append("*".join(factors))
            elif c == "-1":
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(c + "*" + "*".join(factors))
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()})"


def poly_op(op: str, *args: Any):
    """Dispatch add/mul/scale/eval/substitute_linear by name."""
    if op == "add":
        f, g = args
        return f + g
    if op == "mul":
        f, g = args
        return f * g
    if op == "scale":
        f, c = args
        return f.scale(c)
    if op == "eval":
        f, point = args
        return Scalar(f.field, f.evaluate(point))
    if op == "substitute_linear":
        f, p, q = args
        return f.substitute_linear(p, q)
    raise ValueError(f"unknown polynomial operation {op!r}")


# --- text grammar ---

_TOKEN_RE = re.compile(
    r"(?P<space>\s+)|(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z]+\d+)|(?P<op>[-+*^])"
)


def _tokenize(text: str, line: Optional[int]) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = match.lastgroup
        if kind != "space":
            tokens.append((kind, match.group(), pos + 1))
        pos = match.end()
    return tokens


def parse_polynomial(text: str, n: int, field: FieldSpec,
                     prefixes: Iterable[str] = ("x", "a"),
                     line: Optional[int] = None) -> Polynomial:
    """
    Parse a polynomial such as ``3*x1^2*x3 - 1/2*x2^3 + x1*x2*x3``.

    Args:
        text: The polynomial text.
        n: Number of variables; indices run 1..n.
        field: Coefficient field.
        prefixes: Accepted variable prefixes.
        line: Line number reported in errors.

    Returns:
        The parsed Polynomial.
    """
    prefixes = tuple(prefixes)
    tokens = _tokenize(text, line)
    if not tokens:
        raise ParseError("empty polynomial", line, 1)
    result: Dict[Monomial, Raw] = {}
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def column_at_end():
        return len(text) + 1

    while pos < len(tokens):
        sign = 1
        kind, value, col = tokens[pos]
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            pos += 1
        elif result or pos > 0:
            raise ParseError(f"expected '+' or '-' before {value!r}", line, col)
        coeff = field.coerce(sign)
        exps = [0] * n
        expect_factor = True
        while expect_factor:
            tok = peek()
            if tok is None:
                raise ParseError("expected a coefficient or variable", line, column_at_end())
            kind, value, col = tok
            pos += 1
            if kind == "num":
                coeff = field.mul(coeff, field.coerce(value))
            elif kind == "var":
                name = value.rstrip("0123456789")
                index = int(value[len(name):])
                if name not in prefixes or not 1 <= index <= n:
                    raise UnknownVariable(f"unknown variable {value!r}", line, col)
                power = 1
                nxt = peek()
                if nxt is not None and nxt[1] == "^":
                    pos += 1
                    exp_tok = peek()
                    if exp_tok is None or exp_tok[0] != "num" or "/" in exp_tok[1]:
                        where = exp_tok[2] if exp_tok else column_at_end()
                        raise ParseError("expected an integer exponent after '^'", line, where)
                    power = int(exp_tok[1])
                    pos += 1
                exps[index - 1] += power
            else:
                raise ParseError(f"unexpected {value!r}", line, col)
            nxt = peek()
            if nxt is not None and nxt[1] == "*":
                pos += 1
            else:
                expect_factor = False
        nxt = peek()
        if nxt is not None and nxt[0] != "op":
            raise ParseError(f"expected an operator before {nxt[1]!r}", line, nxt[2])
        if nxt is not None and nxt[1] not in "+-":
            raise ParseError(f"unexpected {nxt[1]!r}", line, nxt[2])
        m = tuple(exps)
        result[m] = field.add(result.get(m, field.zero), coeff)

    return Polynomial._raw(n, field, {m: c for m, c in result.items() if c != 0})
