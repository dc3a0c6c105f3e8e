"""Base ring configuration and exact scalar arithmetic.

Two backends are supported: the ring of integers (morphisms are integer
matrices) and the lower-triangular m x m matrix algebra over an exact
field (morphisms are block-scalar matrices).  Scalars are plain Python
values: ``int`` for the integers and for prime fields (always reduced
into ``[0, p)``), ``fractions.Fraction`` for the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError

MAX_TRIANGULAR_SIZE = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Scalars:
    """Exact arithmetic on plain scalar values."""

    name: str
    is_field: bool

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def from_int(self, n: int):
        raise NotImplementedError


class IntegerScalars(Scalars):
    name = "ZZ"
    is_field = False

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n: int):
        return int(n)

    def __repr__(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntegerScalars)

    def __hash__(self):
        return hash("ZZ")


class RationalScalars(Scalars):
    name = "QQ"
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def from_int(self, n: int):
        return Fraction(n)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalScalars)

    def __hash__(self):
        return hash("QQ")


class PrimeFieldScalars(Scalars):
    is_field = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValidationError(f"prime field modulus must be prime, got {p}")
        self.p = p
        self.name = f"GF({p})"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n: int):
        return n % self.p

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeFieldScalars) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


ZZ = IntegerScalars()
QQ = RationalScalars()


def GF(p: int) -> PrimeFieldScalars:
    return PrimeFieldScalars(p)


@dataclass(frozen=True)
class RingConfig:
    """Selects the base category: ``proj Z`` or ``proj`` of the triangular algebra.

    ``kind`` is ``"z"`` or ``"tri"``; for the triangular backend ``m`` is the
    matrix size and ``field`` the coefficient field.
    """

    kind: str
    m: int = 0
    field: Scalars | None = None

    def __post_init__(self):
        if self.kind == "z":
            if self.m or self.field is not None:
                raise ValidationError("the integer ring takes no parameters")
        elif self.kind == "tri":
            if not (1 <= self.m <= MAX_TRIANGULAR_SIZE):
                raise ValidationError(
                    f"triangular size must be in [1, {MAX_TRIANGULAR_SIZE}], got {self.m}"
                )
            if self.field is None or not self.field.is_field:
                raise ValidationError("triangular backend needs a field")
        else:
            raise ValidationError(f"unknown ring kind {self.kind!r}")

    @property
    def is_integers(self) -> bool:
        return self.kind == "z"

    @property
    def is_triangular(self) -> bool:
        return self.kind == "tri"

    @property
    def scalars(self) -> Scalars:
        return ZZ if self.kind == "z" else self.field  # type: ignore[return-value]

    def shorthand(self) -> str:
        if self.kind == "z":
            return "z"
        f = "q" if isinstance(self.field, RationalScalars) else f"p{self.field.p}"  # type: ignore[union-attr]
        return f"tri:m={self.m}:f={f}"


INTEGER_RING = RingConfig("z")


def triangular(m: int, field: Scalars) -> RingConfig:
    return RingConfig("tri", m=m, field=field)


def parse_ring_shorthand(text: str) -> RingConfig:
    """Parse ``z``, ``tri:m=3:f=q`` or ``tri:m=4:f=p5``."""
    text = text.strip().lower()
    if text == "z":
        return INTEGER_RING
    parts = text.split(":")
    if parts[0] != "tri":
        raise ValidationError(f"unknown ring shorthand {text!r}")
    m = None
    field: Scalars | None = None
    for part in parts[1:]:
        if "=" not in part:
            raise ValidationError(f"bad ring shorthand component {part!r}")
        key, value = part.split("=", 1)
        if key == "m":
            m = int(value)
        elif key == "f":
            if value == "q":
                field = QQ
            elif value.startswith("p"):
                field = GF(int(value[1:]))
            else:
                raise ValidationError(f"unknown field shorthand {value!r}")
        else:
            raise ValidationError(f"unknown ring shorthand key {key!r}")
    if m is None or field is None:
        raise ValidationError("triangular shorthand needs m= and f= components")
    return triangular(m, field)
