"""Exact scalar arithmetic: the rational field and prime fields.

Every other module is generic over a :class:`FieldSpec`.  Rational scalars are
``gmpy2.mpq`` when gmpy2 is importable and :class:`fractions.Fraction`
otherwise; prime-field scalars are :class:`FpElement` wrappers around ints.
Both kinds support ``+ - * /``, unary ``-``, ``==`` and truthiness (zero is
falsy), which is all the matrix kernel uses.
"""

from __future__ import annotations

from typing import Union

try:  # pragma: no cover - exercised implicitly by the whole suite
    from gmpy2 import mpq as _mpq

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    from fractions import Fraction as _mpq

    _HAVE_GMPY2 = False


class FpElement:
    """An element of the prime field F_p.

    Immutable.  Arithmetic stays within the same prime; mixing primes raises.
    Integers mix freely (they are reduced mod p first).
    """

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _coerce(self, other: Union["FpElement", int]) -> "FpElement":
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"mixed primes {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpElement(self.p, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.p, self.v + other.v)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.p, self.v - other.v)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.p, other.v - self.v)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.p, self.v * other.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.p, self.v * pow(other.v, -1, self.p))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return FpElement(self.p, -self.v)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v}"


def _is_prime(n: int) -> bool:
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


class FieldSpec:
    """The ground field of a whole computation: Q or F_p.

    Instances are immutable value objects; use :meth:`rationals` and
    :meth:`prime_field` to construct them.  All scalar creation and parsing
    goes through the instance so that callers never touch the concrete scalar
    representation.
    """

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int = 0):
        if kind not in ("Q", "Fp"):
            raise ValueError(f"unknown field kind {kind!r}")
        if kind == "Fp" and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.kind = kind
        self.p = p

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("Q")

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls("Fp", p)

    @property
    def is_rational(self) -> bool:
        return self.kind == "Q"

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    def zero(self):
        return _mpq(0) if self.kind == "Q" else FpElement(self.p, 0)

    def one(self):
        return _mpq(1) if self.kind == "Q" else FpElement(self.p, 1)

    def from_int(self, n: int):
        return _mpq(n) if self.kind == "Q" else FpElement(self.p, n)

    def from_fraction(self, num: int, den: int):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if self.kind == "Q":
            return _mpq(num, den)
        return FpElement(self.p, num) / FpElement(self.p, den)

    def parse(self, text: str):
        """Parse an exact scalar literal: an integer or ``num/den``."""
        text = text.strip()
        if "/" in text:
            num_s, den_s = text.split("/", 1)
            return self.from_fraction(int(num_s), int(den_s))
        return self.from_int(int(text))

    def to_str(self, x) -> str:
        """Exact string form, e.g. ``3/2`` over Q or the residue over F_p."""
        return str(x)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "Q" if self.kind == "Q" else f"F{self.p}"


QQ = FieldSpec.rationals()
