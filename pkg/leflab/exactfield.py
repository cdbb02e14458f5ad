"""
Exact coefficient fields: the rationals and prime fields F_p.

Internally coefficients travel as raw Python values (``Fraction`` for Q,
``int`` residues in ``[0, p)`` for F_p) and every field operation goes through
the owning ``FieldSpec``. ``Scalar`` wraps a raw value with its field for the
public API.
"""

import hashlib
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Union

from sympy import isprime

from .errors import ConfigError, DivisionByZero, FieldMismatch

logger = logging.getLogger(__name__)

RATIONALS = "q"
PRIME_FIELD = "fp"

# sampling range for random rationals
Q_NUMERATOR_BOUND = 16
Q_DENOMINATOR_BOUND = 16

Raw = Union[int, Fraction]


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == PRIME_FIELD:
            if self.modulus is None or self.modulus <= 2 or not isprime(self.modulus):
                raise ValueError(f"modulus must be a prime > 2, got {self.modulus}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``q`` or ``fp:<prime>``."""
        spec = text.strip().lower()
        if spec == RATIONALS:
            return cls(RATIONALS)
        if spec.startswith("fp:"):
            try:
                modulus = int(spec[3:])
            except ValueError:
                raise ConfigError("field", text, "modulus is not an integer")
            try:
                return cls(PRIME_FIELD, modulus)
            except ValueError as e:
                raise ConfigError("field", text, str(e))
        raise ConfigError("field", text, "expected 'q' or 'fp:<prime>'")

    @classmethod
    def prime(cls, p: int = 32003) -> "FieldSpec":
        return cls(PRIME_FIELD, p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    @property
    def characteristic(self) -> int:
        return self.modulus if self.is_prime_field else 0

    def __str__(self) -> str:
        return f"fp:{self.modulus}" if self.is_prime_field else RATIONALS

    # --- raw arithmetic ---

    @property
    def zero(self) -> Raw:
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.is_prime_field else Fraction(1)

    def coerce(self, value: Any) -> Raw:
        """Map an int, Fraction or ``"p/q"`` string into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"cannot coerce {value.field} element into {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if not self.is_prime_field:
            return Fraction(value)
        p = self.modulus
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise DivisionByZero(f"denominator {value.denominator} vanishes mod {p}")
            return value.numerator * pow(den, -1, p) % p
        return int(value) % p

    def is_zero(self, x: Raw) -> bool:
        return x == 0

    def add(self, x: Raw, y: Raw) -> Raw:
        return (x + y) % self.modulus if self.is_prime_field else x + y

    def sub(self, x: Raw, y: Raw) -> Raw:
        return (x - y) % self.modulus if self.is_prime_field else x - y

    def mul(self, x: Raw, y: Raw) -> Raw:
        return x * y % self.modulus if self.is_prime_field else x * y

    def neg(self, x: Raw) -> Raw:
        return -x % self.modulus if self.is_prime_field else -x

    def inv(self, x: Raw) -> Raw:
        if x == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.is_prime_field:
            return pow(x, -1, self.modulus)
        return 1 / Fraction(x)

    def div(self, x: Raw, y: Raw) -> Raw:
        return self.mul(x, self.inv(y))

    def power(self, x: Raw, k: int) -> Raw:
        if self.is_prime_field:
            return pow(x, k, self.modulus)
        return Fraction(x) ** k

    def random_element(self, rng: random.Random, nonzero: bool = False) -> Raw:
        """Draw a uniform residue, or a rational num/den with |num| <= 16, 1 <= den <= 16."""
        if self.is_prime_field:
            low = 1 if nonzero else 0
            return rng.randrange(low, self.modulus)
        while True:
            num = rng.randint(-Q_NUMERATOR_BOUND, Q_NUMERATOR_BOUND)
            den = rng.randint(1, Q_DENOMINATOR_BOUND)
            if num != 0 or not nonzero:
                return Fraction(num, den)

    def to_display(self, x: Raw) -> str:
        if self.is_prime_field:
            # symmetric representative reads better in printed polynomials
            return str(x - self.modulus if x > self.modulus // 2 else x)
        return str(x)

    def to_json(self, x: Raw) -> Union[int, str]:
        if self.is_prime_field:
            return int(x)
        return str(x)


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field."""
    field: FieldSpec
    value: Raw

    @classmethod
    def of(cls, field: FieldSpec, value: Any) -> "Scalar":
        return cls(field, field.coerce(value))

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return str(self.value)


_BINARY_OPS = {"add", "sub", "mul", "div"}
_UNARY_OPS = {"inv", "neg"}


def field_arith(op: str, x: Scalar, y: Optional[Scalar] = None) -> Scalar:
    """Apply one field operation by name."""
    if op in _BINARY_OPS:
        if y is None:
            raise ValueError(f"{op} needs two operands")
        if op == "add":
            return x + y
        if op == "sub":
            return x - y
        if op == "mul":
            return x * y
        return x / y
    if op in _UNARY_OPS:
        if y is not None:
            raise ValueError(f"{op} takes one operand")
        return x.inverse() if op == "inv" else -x
    raise ValueError(f"unknown field operation {op!r}")


def random_scalar(spec: FieldSpec, rng: random.Random, nonzero: bool = False) -> Scalar:
    return Scalar(spec, spec.random_element(rng, nonzero=nonzero))


def derive_seed(base: int, *labels: Any) -> int:
    """Stable 63-bit seed from a base seed and arbitrary printable labels."""
    material = repr((int(base),) + tuple(labels)).encode("utf-8")
    digest = hashlib.sha256(material).digest()
    return int.from_bytes(digest[:8], "big") & ((1 << 63) - 1)


def make_rng(seed: int, *labels: Any) -> random.Random:
    if labels:
        seed = derive_seed(seed, *labels)
    return random.Random(seed)
