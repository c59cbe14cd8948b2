"""Coefficient domains: the integers, the rationals and prime fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``|n|`` by trial division."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class IntegerRing:
    is_field = False
    characteristic = 0

    def convert(self, c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise DomainError(f"{c} is not an integer")
            return c.numerator
        return int(c)

    def __str__(self):
        return "ZZ"


@dataclass(frozen=True)
class RationalField:
    is_field = True
    characteristic = 0

    def convert(self, c):
        return Fraction(c)

    def __str__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    p: int
    is_field = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.p >= 2**63:
            raise DomainError("prime must fit in a machine word")

    @property
    def characteristic(self) -> int:
        return self.p

    def convert(self, c):
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def __str__(self):
        return f"GF({self.p})"


ZZ = IntegerRing()
QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_of_characteristic(p: int):
    """Rationals for ``p == 0``, otherwise the prime field of order ``p``."""
    return QQ if p == 0 else PrimeField(p)
