"""Exact scalar fields: the rationals and prime fields F_p.

Linear maps store raw values (``int``/``Fraction`` for Q, ``int`` in
``[0, p)`` for F_p) together with a :class:`Field`; the field owns
normalization.  :class:`Scalar` is the tagged value used at the public
boundary, where mixing fields must be an error.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatch, NotPrime, SchemaError, ZeroDivision

MAX_PRIME = 1 << 16


class Field:
    tag = "?"

    zero = 0
    one = 1

    def reduce(self, x):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def encode(self, x):
        raise NotImplementedError

    def decode(self, v, path=""):
        raise NotImplementedError

    def header(self) -> dict:
        raise NotImplementedError

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def __call__(self, x) -> "Scalar":
        return Scalar(self, self.coerce(x))


class Rationals(Field):
    tag = "Q"

    def reduce(self, x):
        # keep integers as plain ints: most maps here are 0/1 matrices
        if type(x) is int:
            return x
        if x.denominator == 1:
            return int(x.numerator)
        return x

    def coerce(self, x):
        if isinstance(x, Scalar):
            if x.field is not self:
                raise FieldMismatch(f"cannot coerce {x.field} element into Q")
            return x.value
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, str):
            try:
                x = Fraction(x.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"bad rational literal {x!r}") from e
        if isinstance(x, (int, Fraction)):
            return self.reduce(Fraction(x)) if not isinstance(x, int) else x
        raise TypeError(f"cannot coerce {type(x).__name__} into Q")

    def inv(self, x):
        if x == 0:
            raise ZeroDivision("inverse of zero in Q")
        return self.reduce(Fraction(1) / x)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivision("division by zero in Q")
        return self.reduce(Fraction(a) / b)

    def encode(self, x):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def decode(self, v, path=""):
        if isinstance(v, bool) or not isinstance(v, (str, int)):
            raise SchemaError(path, f"rational must be a string 'num/den' or an integer, got {v!r}")
        try:
            return self.coerce(v)
        except ValueError as e:
            raise SchemaError(path, str(e)) from None

    def header(self):
        return {"field": "Q"}

    def random_element(self, rng):
        num = rng.randint(-5, 5)
        den = rng.randint(1, 4)
        return self.reduce(Fraction(num, den))

    def __repr__(self):
        return "QQ"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if isinstance(p, bool) or not isinstance(p, int):
            raise NotPrime(f"modulus must be an integer, got {p!r}")
        if p > MAX_PRIME:
            raise NotPrime(f"modulus {p} exceeds supported bound {MAX_PRIME}")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.tag = f"F{p}"

    def reduce(self, x):
        return x % self.p

    def coerce(self, x):
        if isinstance(x, Scalar):
            if x.field is not self:
                raise FieldMismatch(f"cannot coerce {x.field} element into {self}")
            return x.value
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, Fraction):
            return self.reduce(x.numerator) * self.inv(self.reduce(x.denominator)) % self.p
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivision(f"inverse of zero in {self}")
        return pow(x, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def encode(self, x):
        return int(x)

    def decode(self, v, path=""):
        if isinstance(v, bool) or not isinstance(v, int):
            raise SchemaError(path, f"F_{self.p} element must be an integer, got {v!r}")
        if not 0 <= v < self.p:
            raise SchemaError(path, f"F_{self.p} element {v} out of range [0, {self.p})")
        return v

    def header(self):
        return {"field": "Fp", "p": self.p}

    def random_element(self, rng):
        return rng.randrange(self.p)

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    # cached so that `GF(5) is GF(5)`; field identity is how mismatches are detected
    return PrimeField(p)


def field_from_header(doc, path="") -> Field:
    if not isinstance(doc, dict) or "field" not in doc:
        raise SchemaError(path + "/field", "missing field declaration")
    tag = doc["field"]
    if tag == "Q":
        return QQ
    if tag == "Fp":
        p = doc.get("p")
        if isinstance(p, bool) or not isinstance(p, int):
            raise SchemaError(path + "/p", "prime field needs an integer 'p'")
        try:
            return GF(p)
        except NotPrime as e:
            raise SchemaError(path + "/p", str(e)) from None
    raise SchemaError(path + "/field", f"unknown field {tag!r} (expected 'Q' or 'Fp')")


def parse_field(spec: str) -> Field:
    """Parse a command-line field name: ``q``, ``f5``, ``fp5`` or ``gf5``."""
    s = spec.strip().lower()
    if s in ("q", "qq", "rationals"):
        return QQ
    for prefix in ("gf", "fp", "f"):
        if s.startswith(prefix) and s[len(prefix):].isdigit():
            return GF(int(s[len(prefix):]))
    raise ValueError(f"unknown field {spec!r}")


@dataclass(frozen=True)
class Scalar:
    field: Field
    value: object

    def _check(self, other):
        if not isinstance(other, Scalar):
            other = Scalar(self.field, self.field.coerce(other))
        if other.field is not self.field:
            raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Scalar(self.field, self.field.reduce(self.value + other.value))

    def __sub__(self, other):
        other = self._check(other)
        return Scalar(self.field, self.field.reduce(self.value - other.value))

    def __mul__(self, other):
        other = self._check(other)
        return Scalar(self.field, self.field.reduce(self.value * other.value))

    def __neg__(self):
        return Scalar(self.field, self.field.reduce(-self.value))

    def __truediv__(self, other):
        other = self._check(other)
        return Scalar(self.field, self.field.div(self.value, other.value))

    def inv(self):
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.value == 0

    def __repr__(self):
        return f"{self.field!r}({self.field.encode(self.value)})"

    def __str__(self):
        return str(self.field.encode(self.value))


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_neg(a: Scalar) -> Scalar:
    return -a


def scalar_inv(a: Scalar) -> Scalar:
    return a.inv()
