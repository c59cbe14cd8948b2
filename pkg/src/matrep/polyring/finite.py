"""Small finite fields GF(q) by lookup tables, for evaluation and verification.

Elements are ints ``0..q-1``; for ``q = p**k`` the digit ``a_i`` of an element
in base ``p`` is its coefficient of ``g**i`` for the generator ``g`` of the
defining polynomial.  GF(4) uses ``e**2 + e + 1``, so ``2`` is ``e`` and ``3``
is ``e + 1``.
"""

from __future__ import annotations

from functools import lru_cache

from .domains import is_prime

# low-to-high coefficients of monic irreducible polynomials
_MODULI = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 1, 1),
    27: (1, 2, 0, 1),
}


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1 or not is_prime(p):
                break
            return p, k
    raise ValueError(f"{q} is not a prime power")


class FiniteField:
    def __init__(self, q: int):
        p, k = _prime_power(q)
        if k > 1 and q not in _MODULI:
            raise ValueError(f"GF({q}) is not supported")
        self.q, self.p, self.degree = q, p, k
        self.zero, self.one = 0, 1
        digits = [self._digits(a) for a in range(q)]
        self._add = [[self._undigits([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)] for a in range(q)]
        self._mul = [[self._polymul(digits[a], digits[b]) for b in range(q)] for a in range(q)]
        self._neg = [self._undigits([(-x) % p for x in digits[a]]) for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def _polymul(self, x, y) -> int:
        p, k = self.p, self.degree
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                prod[i + j] = (prod[i + j] + a * b) % p
        if k > 1:
            mod = _MODULI[self.q]
            for i in range(len(prod) - 1, k - 1, -1):
                c = prod[i]
                if c:
                    for j in range(k + 1):
                        prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
        return self._undigits(prod[:k])

    def __repr__(self):
        return f"FiniteField({self.q})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def pow(self, a, k: int):
        r = 1
        for _ in range(k):
            r = self._mul[r][a]
        return r

    def from_int(self, n: int) -> int:
        return n % self.p

    def parse(self, token: str) -> int:
        """Parse ``0``, ``3``, ``e``, ``e+1``, ``2e+1``, ``e^2`` style elements."""
        token = token.replace(" ", "").replace("epsilon", "e")
        if self.degree == 1:
            return int(token) % self.p
        total = 0
        for part in token.split("+"):
            if not part:
                raise ValueError(f"bad field element {token!r}")
            if "e" in part:
                coef, _, power = part.partition("e")
                c = int(coef.rstrip("*")) if coef.rstrip("*") else 1
                k = int(power.lstrip("^")) if power else 1
                term = self.mul(self.from_int(c), self.pow(self.p, k))
            else:
                term = self.from_int(int(part))
            total = self.add(total, term)
        return total

    def format(self, a: int) -> str:
        if self.degree == 1:
            return str(a)
        parts = []
        for i, d in reversed(list(enumerate(self._digits(a)))):
            if not d:
                continue
            c = "" if d == 1 or i == 0 else str(d)
            if i == 0:
                parts.append(str(d))
            elif i == 1:
                parts.append(f"{c}e")
            else:
                parts.append(f"{c}e^{i}")
        return "+".join(parts) if parts else "0"

    def rank(self, rows: list[list[int]]) -> int:
        """Rank of a matrix given as a list of rows."""
        m = [list(r) for r in rows]
        rank = 0
        ncols = len(m[0]) if m else 0
        for col in range(ncols):
            piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = self.inv(m[rank][col])
            prow = [self.mul(inv, x) for x in m[rank]]
            m[rank] = prow
            for i in range(len(m)):
                if i != rank and m[i][col]:
                    f = m[i][col]
                    m[i] = [self.sub(x, self.mul(f, y)) for x, y in zip(m[i], prow)]
            rank += 1
        return rank


@lru_cache(maxsize=None)
def finite_field(q: int) -> FiniteField:
    return FiniteField(q)
