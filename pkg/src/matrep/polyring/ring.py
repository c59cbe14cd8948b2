"""Sparse multivariate polynomials over ZZ, QQ and GF(p).

Monomials are packed into Python ints laid out so that integer comparison is
the monomial order (see ``_pykernel`` for the encoding contract).  Each
exponent occupies a 16-bit field whose top bit is a guard for divisibility
tests; degrevlex keeps the total degree in an extra field above the others.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from . import kernel
from .domains import QQ, ZZ, DomainError, IntegerRing, PrimeField, RationalField

FIELD_BITS = 16
_FIELD_MASK = (1 << FIELD_BITS) - 1
_GUARD_BIT = 1 << (FIELD_BITS - 1)
MAX_EXPONENT = _GUARD_BIT - 1

ORDERS = ("degrevlex", "lex")


class PolyRing:
    """Polynomial ring over ``domain`` in ``names`` (first name is largest)."""

    def __init__(self, names: Sequence[str], domain=ZZ, order: str = "degrevlex"):
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.domain = domain
        self.order = order
        self._index = {s: i for i, s in enumerate(self.names)}
        n = self.nvars
        B = FIELD_BITS
        if order == "degrevlex":
            # variable i in field i, total degree in field n; low fields flipped
            self._shifts = tuple(B * i for i in range(n))
            self.xmask = (1 << (B * n)) - 1
            self.guard = sum(_GUARD_BIT << (B * i) for i in range(n + 1))
            self._deg_shift = B * n
        else:
            # variable 0 most significant
            self._shifts = tuple(B * (n - 1 - i) for i in range(n))
            self.xmask = 0
            self.guard = sum(_GUARD_BIT << (B * i) for i in range(n))
            self._deg_shift = None
        self.off = self.xmask
        self.one_monomial = self.monomial((0,) * n)
        self.p = domain.p if isinstance(domain, PrimeField) else 0

    # -- identity -----------------------------------------------------------

    def _key(self):
        return (self.names, self.domain, self.order)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"PolyRing({list(self.names)}, {self.domain}, {self.order!r})"

    def clone(self, names=None, domain=None, order=None) -> "PolyRing":
        return PolyRing(
            self.names if names is None else names,
            self.domain if domain is None else domain,
            self.order if order is None else order,
        )

    def extend(self, extra: Sequence[str]) -> "PolyRing":
        """Ring with ``extra`` variables appended (smallest in the order)."""
        return self.clone(names=self.names + tuple(extra))

    # -- monomials ----------------------------------------------------------

    def monomial(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        e = 0
        for x, s in zip(exps, self._shifts):
            if x < 0 or x > MAX_EXPONENT:
                raise OverflowError(f"exponent {x} out of range")
            e |= x << s
        if self._deg_shift is not None:
            d = sum(exps)
            if d > MAX_EXPONENT:
                raise OverflowError(f"degree {d} out of range")
            e |= d << self._deg_shift
        return e ^ self.xmask

    def exponents(self, m: int) -> tuple[int, ...]:
        e = m ^ self.xmask
        return tuple((e >> s) & _FIELD_MASK for s in self._shifts)

    def mono_mul(self, a: int, b: int) -> int:
        return a + b - self.off

    def mono_div(self, a: int, b: int) -> int:
        """``a / b``; caller guarantees divisibility."""
        return a - b + self.off

    def mono_divides(self, a: int, b: int) -> bool:
        g = self.guard
        return (((b ^ self.xmask) | g) - (a ^ self.xmask)) & g == g

    def mono_lcm(self, a: int, b: int) -> int:
        return self.monomial([max(x, y) for x, y in zip(self.exponents(a), self.exponents(b))])

    def mono_coprime(self, a: int, b: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.exponents(a), self.exponents(b)))

    def mono_degree(self, m: int) -> int:
        if self._deg_shift is not None:
            return ((m ^ self.xmask) >> self._deg_shift) & _FIELD_MASK
        return sum(self.exponents(m))

    def mono_str(self, m: int) -> str:
        parts = []
        for name, x in zip(self.names, self.exponents(m)):
            if x == 1:
                parts.append(name)
            elif x:
                parts.append(f"{name}^{x}")
        return "*".join(parts) if parts else "1"

    # -- elements -----------------------------------------------------------

    def _norm(self, c):
        return self.domain.convert(c)

    def from_terms(self, terms: Mapping[int, object] | Iterable[tuple[int, object]]) -> "Polynomial":
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[int, object] = {}
        for m, c in items:
            d[m] = d.get(m, 0) + c
        conv = self.domain.convert
        return Polynomial(self, {m: c for m, c in ((m, conv(c)) for m, c in d.items()) if c})

    def from_dict(self, exps_to_coeff: Mapping[tuple, object]) -> "Polynomial":
        return self.from_terms((self.monomial(e), c) for e, c in exps_to_coeff.items())

    def constant(self, c) -> "Polynomial":
        c = self._norm(c)
        return Polynomial(self, {self.one_monomial: c} if c else {})

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def var(self, name: str | int) -> "Polynomial":
        i = name if isinstance(name, int) else self._index[name]
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {self.monomial(exps): self._norm(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def index(self, name: str) -> int:
        return self._index[name]


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps monomial keys to coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- inspection ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def LM(self) -> int:
        return max(self.terms)

    @property
    def LC(self):
        return self.terms[max(self.terms)]

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.one_monomial in self.terms)

    def is_monomial(self) -> bool:
        """Single term (any coefficient)."""
        return len(self.terms) == 1

    def constant_value(self):
        return self.terms.get(self.ring.one_monomial, 0)

    def sorted_terms(self) -> list[tuple[int, object]]:
        return sorted(self.terms.items(), reverse=True)

    def degree(self) -> int:
        return max((self.ring.mono_degree(m) for m in self.terms), default=-1)

    def variables(self) -> set[str]:
        used = set()
        for m in self.terms:
            for name, x in zip(self.ring.names, self.ring.exponents(m)):
                if x:
                    used.add(name)
        return used

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise DomainError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.constant(other)

    def _mk(self, d: dict) -> "Polynomial":
        return Polynomial(self.ring, d)

    def __add__(self, other):
        g = self._coerce(other)
        return self._mk(kernel.combine(self.terms, 1, g.terms, -1, 0, self.ring.p))

    __radd__ = __add__

    def __sub__(self, other):
        g = self._coerce(other)
        return self._mk(kernel.combine(self.terms, 1, g.terms, 1, 0, self.ring.p))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        p = self.ring.p
        if p:
            return self._mk({m: (-c) % p for m, c in self.terms.items()})
        return self._mk({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            g = self._coerce(other)
            return self._mk(kernel.mul(self.terms, g.terms, self.ring.off, self.ring.p))
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = self.ring.domain.convert(c)
        if not c:
            return self.ring.zero
        p = self.ring.p
        if p:
            return self._mk({m: v * c % p for m, v in self.terms.items()})
        return self._mk({m: v * c for m, v in self.terms.items()})

    def mul_term(self, coeff, monomial: int) -> "Polynomial":
        delta = monomial - self.ring.off
        return self._mk(kernel.combine({}, 1, self.terms, -coeff, delta, self.ring.p)) if coeff else self.ring.zero

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- normalizations -----------------------------------------------------

    def content(self) -> int:
        """gcd of integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c))
            if g == 1:
                break
        return g

    def primitive(self) -> tuple[int, "Polynomial"]:
        """Content and primitive part over ZZ, with positive leading coefficient."""
        if not isinstance(self.ring.domain, IntegerRing):
            raise DomainError("primitive part is defined over ZZ only")
        if not self.terms:
            return 0, self
        c = self.content()
        if self.LC < 0:
            c = -c
        return c, self._mk({m: v // c for m, v in self.terms.items()})

    def monic(self) -> "Polynomial":
        dom = self.ring.domain
        if not dom.is_field:
            raise DomainError("monic requires a field")
        if not self.terms:
            return self
        lc = self.LC
        if isinstance(dom, PrimeField):
            inv = pow(lc, -1, dom.p)
            return self._mk({m: v * inv % dom.p for m, v in self.terms.items()})
        return self._mk({m: v / lc for m, v in self.terms.items()})

    def sign_normalized(self) -> "Polynomial":
        """Negated if the leading coefficient is negative (ZZ/QQ); unchanged otherwise."""
        if self.terms and self.ring.p == 0 and self.LC < 0:
            return -self
        return self

    def to_domain(self, domain) -> "Polynomial":
        """Coefficient-wise image in another domain (ring homomorphism from ZZ)."""
        ring = self.ring.clone(domain=domain)
        return ring.from_terms(self.terms)

    def to_ring(self, ring: PolyRing) -> "Polynomial":
        """Re-embed into ``ring`` (which must contain every variable in use)."""
        src = self.ring
        if ring == src:
            return self
        idx = [ring.index(name) for name in src.names]
        out = {}
        for m, c in self.terms.items():
            exps = [0] * ring.nvars
            for i, x in zip(idx, src.exponents(m)):
                exps[i] = x
            out[ring.monomial(exps)] = c
        return ring.from_terms(out)

    # -- evaluation & rendering ---------------------------------------------

    def evaluate(self, assignment: Mapping[str, object], field=None):
        """Value at ``assignment``.

        With ``field`` (a :class:`~matrep.polyring.finite.FiniteField`), values
        are field elements and integer coefficients are reduced through the
        prime subfield; without it, plain Python arithmetic is used.
        """
        used = self.variables()
        missing = sorted(used - set(assignment))
        if missing:
            raise KeyError(f"assignment is missing {', '.join(missing)}")
        names = self.ring.names
        if field is None:
            total = 0
            for m, c in self.terms.items():
                v = c
                for name, x in zip(names, self.ring.exponents(m)):
                    if x:
                        v = v * assignment[name] ** x
                total += v
            return total
        total = field.zero
        for m, c in self.terms.items():
            v = field.from_int(int(c) if not isinstance(c, Fraction) else _frac_to_int(c, field.p))
            for name, x in zip(names, self.ring.exponents(m)):
                if x:
                    v = field.mul(v, field.pow(assignment[name], x))
            total = field.add(total, v)
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = ring.p == 0 and c < 0
            a = -c if neg else c
            mono = ring.mono_str(m)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


def _frac_to_int(c: Fraction, p: int) -> int:
    return c.numerator * pow(c.denominator, -1, p) % p


def map_domain(f: Polynomial, domain) -> Polynomial:
    """Image of an integer polynomial in ``domain`` (reduction mod p or injection)."""
    if not isinstance(f.ring.domain, IntegerRing):
        raise DomainError("map_domain expects an integer polynomial")
    return f.to_domain(domain)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse the stable text rendering back into ``ring``."""
    s = text.replace(" ", "")
    if not s or s == "0":
        return ring.zero
    if s[0] not in "+-":
        s = "+" + s
    result = {}
    i = 0
    while i < len(s):
        sign = -1 if s[i] == "-" else 1
        j = i + 1
        while j < len(s) and s[j] not in "+-":
            j += 1
        chunk = s[i + 1 : j]
        i = j
        coeff: object = 1
        exps = [0] * ring.nvars
        for factor in chunk.split("*"):
            if factor[0].isdigit():
                coeff = coeff * Fraction(factor) if "/" in factor else coeff * int(factor)
            else:
                name, _, power = factor.partition("^")
                exps[ring.index(name)] += int(power) if power else 1
        m = ring.monomial(exps)
        result[m] = result.get(m, 0) + sign * coeff
    return ring.from_terms(result)


__all__ = [
    "PolyRing",
    "Polynomial",
    "map_domain",
    "parse_polynomial",
    "ORDERS",
    "QQ",
    "ZZ",
    "RationalField",
]
