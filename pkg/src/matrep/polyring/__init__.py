"""Exact sparse polynomial arithmetic and small finite fields."""

from .det import determinant
from .domains import GF, QQ, ZZ, DomainError, IntegerRing, PrimeField, RationalField, field_of_characteristic, is_prime, prime_factors
from .finite import FiniteField, finite_field
from .kernel import BACKEND
from .ring import ORDERS, PolyRing, Polynomial, map_domain, parse_polynomial

__all__ = [
    "BACKEND",
    "DomainError",
    "FiniteField",
    "GF",
    "IntegerRing",
    "ORDERS",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "QQ",
    "RationalField",
    "ZZ",
    "determinant",
    "field_of_characteristic",
    "finite_field",
    "is_prime",
    "map_domain",
    "parse_polynomial",
    "prime_factors",
]
