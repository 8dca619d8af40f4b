"""Parameter validation for period-2p^n sequences over GF(q).

The algorithms require p and q to be distinct odd primes with q a primitive
root modulo p^2, i.e. ord_{p^2}(q) = p(p - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

# Deterministic Miller-Rabin witnesses for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class ParamsError(ValueError):
    """Base class for rejected (p, n, q) triples."""


class NotOddPrimeError(ParamsError):
    def __init__(self, name: str, value: int):
        self.name, self.value = name, value
        super().__init__(f"{name} is not an odd prime (got {value})")


class EqualPrimesError(ParamsError):
    def __init__(self, p: int):
        super().__init__(f"p and q must differ (both are {p})")


class NotPrimitiveRootError(ParamsError):
    def __init__(self, p: int, q: int, order: int):
        self.order = order
        super().__init__(
            f"q is not a primitive root mod p^2: ord_{p * p}({q}) = {order} != {p * (p - 1)}"
        )


class NegativeExponentError(ParamsError):
    def __init__(self, n: int):
        super().__init__(f"n must be nonnegative (got {n})")


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    for b in _MR_BASES:
        if m % b == 0:
            return m == b
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division; parameters here are small."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def euler_phi(m: int) -> int:
    result = m
    for f in factorize(m):
        result -= result // f
    return result


def multiplicative_order(a: int, m: int) -> int:
    """Least e >= 1 with a^e = 1 (mod m).

    Starts from the group order phi(m) and strips prime factors while the
    power still equals one.
    """
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1, order undefined")
    order = euler_phi(m)
    for f in factorize(order):
        while order % f == 0 and pow(a, order // f, m) == 1:
            order //= f
    return order


def is_primitive_root_mod_p2(q: int, p: int) -> bool:
    return multiplicative_order(q, p * p) == p * (p - 1)


@dataclass(frozen=True)
class SequenceParams:
    p: int
    n: int
    q: int

    @property
    def N(self) -> int:
        return 2 * self.p**self.n

    @property
    def half(self) -> int:
        """p^n, half of the period."""
        return self.p**self.n

    def __str__(self):
        return f"p={self.p} n={self.n} q={self.q}"


def validate_params(p: int, n: int, q: int) -> SequenceParams:
    for name, v in (("p", p), ("q", q)):
        if v % 2 == 0 or not is_prime(v):
            raise NotOddPrimeError(name, v)
    if n < 0:
        raise NegativeExponentError(n)
    if p == q:
        raise EqualPrimesError(p)
    order = multiplicative_order(q, p * p)
    if order != p * (p - 1):
        raise NotPrimitiveRootError(p, q, order)
    return SequenceParams(p, n, q)
