"""Arithmetic in the prime field GF(q) for odd prime q.

Elements are canonical residues in [0, q). The hot paths of the package
(cost tables, batched linear complexity) work on raw integers; these types
exist for the places where the field structure matters explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from kerrlc.params import is_prime

MAX_MODULUS = 2**31


class FieldMismatchError(ValueError):
    """Operands belong to different prime fields."""


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not (3 <= self.q < MAX_MODULUS) or not is_prime(self.q):
            raise ValueError(f"q={self.q} is not an odd prime below 2^31")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.q, self)

    def __iter__(self):
        return (FieldElement(v, self) for v in range(self.q))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return x + y

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return x - y

    def neg(self, x: FieldElement) -> FieldElement:
        return -x

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return x * y

    def inv(self, x: FieldElement) -> FieldElement:
        return x.inverse()

    def pow(self, x: FieldElement, e: int) -> FieldElement:
        return x**e


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.field.q}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.q != self.field.q:
                raise FieldMismatchError(
                    f"cannot combine elements of GF({self.field.q}) and GF({other.field.q})"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(v % self.field.q, self.field)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __neg__(self):
        return self._wrap(-self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.field.q})")
        return self._wrap(pow(self.value, self.field.q - 2, self.field.q))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * self._wrap(o).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        # square-and-multiply
        result, base = 1, self.value
        while e:
            if e & 1:
                result = result * base % self.field.q
            base = base * base % self.field.q
            e >>= 1
        return self._wrap(result)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.q == other.field.q and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.q
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.q))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.q})"


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def neg(x: FieldElement) -> FieldElement:
    return -x


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def pow_(x: FieldElement, e: int) -> FieldElement:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return x**e
