"""Buchberger's algorithm over GF(p), QQ and ZZ; ideal and radical membership.

Over the rationals the engine works with primitive integer polynomials and
fraction-free reduction, normalizing to monic only in the reduced output.

Over the integers it computes strong Groebner bases (S- and GCD-polynomials
for every pair).  Contents of new polynomials are divided out and recorded:
the result is then a basis over ZZ[1/N], N the product of recorded
divisors, so membership found here holds in every characteristic not
dividing N.  Pure integer constants are kept as they are.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Sequence

from .polyring import kernel
from .polyring.domains import IntegerRing, PrimeField, RationalField, prime_factors
from .polyring.ring import PolyRing, Polynomial

# Post-hoc Buchberger-criterion check on every computed basis (test builds).
CHECK_BASES = bool(os.environ.get("MATREP_CHECK_BASES"))


class ResourceLimitExceeded(RuntimeError):
    def __init__(self, limit: str, value: int):
        super().__init__(f"resource limit exceeded: {limit} ({value})")
        self.limit = limit
        self.value = value


@dataclass(frozen=True)
class Limits:
    max_basis: int = 4000
    max_terms: int = 400_000
    max_coeff_bits: int = 4096

    def __post_init__(self):
        if min(self.max_basis, self.max_terms, self.max_coeff_bits) <= 0:
            raise ValueError("limits must be positive")

    @classmethod
    def from_env(cls, env=None) -> "Limits":
        """Defaults overridable by ``MATREP_MAX_BASIS`` / ``_TERMS`` / ``_COEFF_BITS``."""
        env = os.environ if env is None else env
        kw = {}
        for key, attr in (("MATREP_MAX_BASIS", "max_basis"), ("MATREP_MAX_TERMS", "max_terms"), ("MATREP_MAX_COEFF_BITS", "max_coeff_bits")):
            if env.get(key):
                kw[attr] = int(env[key])
        return cls(**kw)


@dataclass
class EngineStats:
    pairs: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    skipped: int = 0

    def merge(self, other: "EngineStats") -> None:
        self.pairs += other.pairs
        self.reductions += other.reductions
        self.zero_reductions += other.zero_reductions
        self.skipped += other.skipped


Trace = Callable[[str], None]


@dataclass
class GroebnerBasis:
    ring: PolyRing
    elements: tuple[Polynomial, ...]
    division_record: tuple[int, ...] = ()
    stats: EngineStats = field(default_factory=EngineStats)

    @property
    def domain(self):
        return self.ring.domain

    @property
    def order(self) -> str:
        return self.ring.order

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_membership(f, self)

    def contains_one(self) -> bool:
        return contains_one(self)

    def integer_constants(self) -> list[int]:
        return [int(g.constant_value()) for g in self.elements if g.is_constant()]


# -- helpers ----------------------------------------------------------------


def _common_ring(polys: Sequence[Polynomial]) -> PolyRing:
    if not polys:
        raise ValueError("no generators")
    ring = polys[0].ring
    for f in polys:
        if f.ring != ring:
            raise ValueError("generators live in different rings")
    return ring


def _int_primitive(d: dict) -> tuple[int, dict]:
    c = 0
    for v in d.values():
        c = gcd(c, v)
        if c == 1:
            break
    if d[max(d)] < 0:
        c = -c
    if c == 1:
        return 1, d
    return c, {k: v // c for k, v in d.items()}


def _clear_denominators(f: Polynomial) -> dict:
    den = 1
    for c in f.terms.values():
        den = lcm(den, Fraction(c).denominator)
    d = {m: int(Fraction(c) * den) for m, c in f.terms.items()}
    return _int_primitive(d)[1] if d else d


def _monic_modp(d: dict, p: int) -> dict:
    inv = pow(d[max(d)], -1, p)
    if inv == 1:
        return d
    return {k: v * inv % p for k, v in d.items()}


class _Checker:
    def __init__(self, limits: Limits):
        self.limits = limits
        self.total_terms = 0

    def admit(self, d: dict, nbasis: int):
        lim = self.limits
        if nbasis > lim.max_basis:
            raise ResourceLimitExceeded("max_basis", nbasis)
        self.total_terms += len(d)
        if self.total_terms > lim.max_terms:
            raise ResourceLimitExceeded("max_terms", self.total_terms)
        bits = max(abs(v).bit_length() for v in d.values())
        if bits > lim.max_coeff_bits:
            raise ResourceLimitExceeded("max_coeff_bits", bits)


# -- field engine -----------------------------------------------------------


class _FieldEngine:
    """Buchberger with Gebauer-Moeller pair updates and the normal strategy."""

    def __init__(self, ring: PolyRing, limits: Limits, trace: Trace | None):
        self.ring = ring
        self.p = ring.p
        self.limits = limits
        self.trace = trace
        self.check = _Checker(limits)
        self.polys: list[dict] = []
        self.lms: list[int] = []
        self.lms_e: list[int] = []
        self.G: list[int] = []
        self.B: dict[tuple[int, int], int] = {}
        self.heap: list = []
        self.stats = EngineStats()
        self.unit = False

    # basis-element normalization
    def _normalize(self, d: dict) -> dict:
        if self.p:
            return _monic_modp(d, self.p)
        return _int_primitive(d)[1]

    def _reduce(self, d: dict) -> dict:
        G = self.G
        lms = [self.lms[i] for i in G]
        lms_e = [self.lms_e[i] for i in G]
        polys = [self.polys[i] for i in G]
        xm, gd = self.ring.xmask, self.ring.guard
        if self.p:
            return kernel.nf_field(d, lms, lms_e, polys, xm, gd, self.p)
        return kernel.nf_fraction_free(d, lms, lms_e, polys, xm, gd)

    def _spoly(self, i: int, j: int, L: int) -> dict:
        f, g = self.polys[i], self.polys[j]
        lf, lg = self.lms[i], self.lms[j]
        sf = {k + L - lf: v for k, v in f.items()}
        if self.p:
            return kernel.combine(sf, 1, g, 1, L - lg, self.p)
        a, b = g[lg], f[lf]
        d = gcd(a, b)
        return kernel.combine(sf, a // d, g, b // d, L - lg, 0)

    def _append(self, d: dict) -> int:
        ring = self.ring
        self.check.admit(d, len(self.G) + 1)
        idx = len(self.polys)
        lm = max(d)
        self.polys.append(d)
        self.lms.append(lm)
        self.lms_e.append(lm ^ ring.xmask)
        return idx

    def seed(self, basis: Iterable[dict]) -> None:
        """Install an already-Groebner set without forming its internal pairs."""
        for d in basis:
            if not d:
                continue
            d = self._normalize(d)
            idx = self._append(d)
            self.G.append(idx)
            if max(d) == self.ring.one_monomial:
                self.unit = True

    def add(self, d: dict) -> None:
        d = self._reduce(d) if self.G else d
        if not d:
            return
        d = self._normalize(d)
        idx = self._append(d)
        if max(d) == self.ring.one_monomial:
            self.unit = True
            return
        self._update(idx)

    def _update(self, h: int) -> None:
        ring = self.ring
        mh = self.lms[h]
        lms = self.lms
        mlcm = ring.mono_lcm
        mdiv = ring.mono_divides
        cands = [(g, mlcm(mh, lms[g])) for g in self.G]
        D = []
        for k, (g, L) in enumerate(cands):
            coprime = ring.mono_mul(mh, lms[g]) == L
            if coprime:
                D.append((g, L, True))
                continue
            later = any(mdiv(L2, L) for _, L2 in cands[k + 1 :])
            earlier = any(mdiv(L2, L) for _, L2, _ in D)
            if not later and not earlier:
                D.append((g, L, False))
        # drop pairs with equal lcm chains already represented, and coprime pairs
        E = []
        seen_lcm = set()
        for g, L, coprime in D:
            if coprime:
                self.stats.skipped += 1
                continue
            if L in seen_lcm:
                self.stats.skipped += 1
                continue
            seen_lcm.add(L)
            E.append((g, L))
        # prune old pairs (chain criterion)
        for (a, b), L in list(self.B.items()):
            if mdiv(mh, L) and mlcm(lms[a], mh) != L and mlcm(lms[b], mh) != L:
                del self.B[(a, b)]
                self.stats.skipped += 1
        for g, L in E:
            key = (min(g, h), max(g, h))
            self.B[key] = L
            heapq.heappush(self.heap, (ring.mono_degree(L), L, key))
        self.G = [g for g in self.G if not mdiv(mh, lms[g])] + [h]

    def run(self) -> None:
        ring = self.ring
        while self.heap and not self.unit:
            _, L, key = heapq.heappop(self.heap)
            if self.B.get(key) != L:
                continue
            del self.B[key]
            i, j = key
            self.stats.pairs += 1
            s = self._spoly(i, j, L)
            h = self._reduce(s) if s else s
            self.stats.reductions += 1
            if self.trace:
                self.trace(f"pair {i},{j} lcm={ring.mono_str(L)} zero={int(not h)} divisions=[]")
            if not h:
                self.stats.zero_reductions += 1
                continue
            h = self._normalize(h)
            idx = self._append(h)
            if max(h) == ring.one_monomial:
                self.unit = True
                break
            self._update(idx)

    def reduced(self) -> list[dict]:
        ring = self.ring
        if self.unit:
            return [{ring.one_monomial: 1}]
        G = sorted(self.G, key=lambda i: self.lms[i])
        xm, gd = ring.xmask, ring.guard
        out = []
        for idx in G:
            others = [k for k in G if k != idx]
            f = self.polys[idx]
            lm = self.lms[idx]
            tail = {k: v for k, v in f.items() if k != lm}
            lms = [self.lms[k] for k in others]
            lms_e = [self.lms_e[k] for k in others]
            polys = [self.polys[k] for k in others]
            if self.p:
                r = kernel.nf_field(tail, lms, lms_e, polys, xm, gd, self.p)
                r[lm] = 1
                out.append(_monic_modp(r, self.p))
            else:
                # fraction-free tail reduction of f itself keeps the leading term
                r = kernel.nf_fraction_free(f, lms, lms_e, polys, xm, gd)
                out.append(_int_primitive(r)[1])
        return sorted(out, key=max, reverse=True)


def buchberger_field(
    generators: Sequence[Polynomial],
    limits: Limits | None = None,
    trace: Trace | None = None,
    seed: "GroebnerBasis | None" = None,
) -> GroebnerBasis:
    """Reduced Groebner basis over GF(p) or QQ.

    ``seed`` is a known Groebner basis of part of the ideal (in the same ring);
    its elements are installed without re-forming their mutual pairs.
    """
    ring = _common_ring(list(generators) or list(seed.elements if seed else []))
    dom = ring.domain
    if not isinstance(dom, (PrimeField, RationalField)):
        raise TypeError("buchberger_field needs GF(p) or QQ coefficients")
    eng = _FieldEngine(ring, limits or Limits(), trace)
    conv = (lambda f: dict(f.terms)) if eng.p else _clear_denominators
    if seed is not None:
        eng.seed(conv(g.to_ring(ring)) for g in seed.elements)
    for f in generators:
        if f.terms and not eng.unit:
            eng.add(conv(f))
    eng.run()
    elems = eng.reduced()
    if eng.p:
        polys = tuple(Polynomial(ring, d) for d in elems)
    else:
        polys = tuple(Polynomial(ring, {k: Fraction(v, d[max(d)]) for k, v in d.items()}) for d in elems)
    G = GroebnerBasis(ring, polys, (), eng.stats)
    if CHECK_BASES:
        assert_groebner(G)
    return G


# -- integer engine ---------------------------------------------------------


class _IntegerEngine:
    def __init__(self, ring: PolyRing, limits: Limits, trace: Trace | None):
        self.ring = ring
        self.trace = trace
        self.check = _Checker(limits)
        self.polys: list[dict] = []
        self.lms: list[int] = []
        self.lms_e: list[int] = []
        self.lcs: list[int] = []
        self.heap: list = []
        self.record: list[int] = []
        self.stats = EngineStats()
        self.unit = False

    def _reduce(self, d: dict) -> dict:
        ring = self.ring
        return kernel.nf_strong(d, self.lms, self.lms_e, self.lcs, self.polys, ring.xmask, ring.guard)

    def _admit(self, h: dict, origin: str) -> list[int]:
        """Normalize and append ``h``; returns the divisions performed."""
        ring = self.ring
        divisions = []
        if max(h) == ring.one_monomial:
            c = abs(h[ring.one_monomial])
            h = {ring.one_monomial: c}
            if c == 1:
                self.unit = True
        else:
            c, h = _int_primitive(h)
            if abs(c) > 1:
                divisions.append(abs(c))
                self.record.append(abs(c))
        self.check.admit(h, len(self.polys) + 1)
        idx = len(self.polys)
        lm = max(h)
        self.polys.append(h)
        self.lms.append(lm)
        self.lms_e.append(lm ^ ring.xmask)
        self.lcs.append(h[lm])
        if not self.unit:
            self._pairs_with(idx)
        return divisions

    def _pairs_with(self, h: int) -> None:
        ring = self.ring
        mh, ch = self.lms[h], self.lcs[h]
        for g in range(h):
            mg, cg = self.lms[g], self.lcs[g]
            L = ring.mono_lcm(mh, mg)
            deg = ring.mono_degree(L)
            if ch % cg and cg % ch:
                heapq.heappush(self.heap, (deg, L, 0, g, h))
            if gcd(ch, cg) == 1 and ring.mono_mul(mh, mg) == L:
                self.stats.skipped += 1
            else:
                heapq.heappush(self.heap, (deg, L, 1, g, h))

    def add(self, d: dict) -> None:
        h = self._reduce(d) if self.polys else d
        if h:
            self._admit(h, "input")

    def _gpoly(self, i: int, j: int, L: int) -> dict:
        f, g = self.polys[i], self.polys[j]
        a, b = self.lcs[i], self.lcs[j]
        _, u, v = _xgcd(a, b)
        lf, lg = self.lms[i], self.lms[j]
        sf = {k + L - lf: c for k, c in f.items()}
        return kernel.combine(sf, u, g, -v, L - lg, 0)

    def _spoly(self, i: int, j: int, L: int) -> dict:
        f, g = self.polys[i], self.polys[j]
        a, b = self.lcs[i], self.lcs[j]
        m = lcm(a, b)
        lf, lg = self.lms[i], self.lms[j]
        sf = {k + L - lf: c for k, c in f.items()}
        return kernel.combine(sf, m // a, g, m // b, L - lg, 0)

    def run(self) -> None:
        ring = self.ring
        while self.heap and not self.unit:
            _, L, kind, i, j = heapq.heappop(self.heap)
            self.stats.pairs += 1
            s = self._gpoly(i, j, L) if kind == 0 else self._spoly(i, j, L)
            h = self._reduce(s) if s else s
            self.stats.reductions += 1
            divisions: list[int] = []
            if h:
                divisions = self._admit(h, "pair")
            else:
                self.stats.zero_reductions += 1
            if self.trace:
                tag = "gpoly" if kind == 0 else "spoly"
                self.trace(f"pair {i},{j} {tag} lcm={ring.mono_str(L)} zero={int(not h)} divisions={divisions}")

    def reduced(self) -> list[dict]:
        ring = self.ring
        if self.unit:
            return [{ring.one_monomial: 1}]
        n = len(self.polys)
        keep = []
        for i in range(n):
            redundant = False
            for j in range(n):
                if i == j:
                    continue
                if self.lcs[i] % self.lcs[j] == 0 and ring.mono_divides(self.lms[j], self.lms[i]):
                    # equal leading terms: keep the earliest
                    if self.lms[i] == self.lms[j] and self.lcs[i] == self.lcs[j] and j > i:
                        continue
                    redundant = True
                    break
            if not redundant:
                keep.append(i)
        out = []
        for i in keep:
            others = [k for k in keep if k != i]
            lm = self.lms[i]
            f = self.polys[i]
            tail = {k: v for k, v in f.items() if k != lm}
            r = kernel.nf_strong(
                tail,
                [self.lms[k] for k in others],
                [self.lms_e[k] for k in others],
                [self.lcs[k] for k in others],
                [self.polys[k] for k in others],
                ring.xmask,
                ring.guard,
            )
            r[lm] = f[lm]
            out.append(r)
        return sorted(out, key=max, reverse=True)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, u, v)`` with ``u*a + v*b == g == gcd(a, b) > 0``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def buchberger_integer(
    generators: Sequence[Polynomial],
    limits: Limits | None = None,
    trace: Trace | None = None,
) -> GroebnerBasis:
    """Strong Groebner basis over ZZ (up to the recorded content divisions)."""
    ring = _common_ring(list(generators))
    if not isinstance(ring.domain, IntegerRing):
        raise TypeError("buchberger_integer needs integer coefficients")
    eng = _IntegerEngine(ring, limits or Limits(), trace)
    for f in generators:
        if f.terms and not eng.unit:
            eng.add(dict(f.terms))
    eng.run()
    polys = tuple(Polynomial(ring, d) for d in eng.reduced())
    G = GroebnerBasis(ring, polys, tuple(eng.record), eng.stats)
    if CHECK_BASES:
        assert_groebner(G)
    return G


# -- queries ----------------------------------------------------------------


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by the basis ``G``."""
    ring = G.ring
    f = f.to_ring(ring)
    elems = [g for g in G.elements if g.terms]
    lms = [g.LM for g in elems]
    lms_e = [m ^ ring.xmask for m in lms]
    xm, gd = ring.xmask, ring.guard
    dom = ring.domain
    if isinstance(dom, PrimeField):
        r = kernel.nf_field(dict(f.terms), lms, lms_e, [dict(g.terms) for g in elems], xm, gd, dom.p)
        return Polynomial(ring, r)
    if isinstance(dom, IntegerRing):
        lcs = [g.LC for g in elems]
        r = kernel.nf_strong(dict(f.terms), lms, lms_e, lcs, [dict(g.terms) for g in elems], xm, gd)
        return Polynomial(ring, r)
    return Polynomial(ring, _nf_rational(dict(f.terms), lms, lms_e, elems, xm, gd))


def _nf_rational(f: dict, lms, lms_e, elems, xmask, guard) -> dict:
    r = {}
    while f:
        m = max(f)
        c = f.pop(m)
        i = kernel.find_divisor(m, lms_e, xmask, guard)
        if i < 0:
            r[m] = c
            continue
        g = elems[i].terms
        q = c / g[lms[i]]
        d = m - lms[i]
        for mg, cg in g.items():
            if mg == lms[i]:
                continue
            k = mg + d
            v = f.get(k, 0) - q * cg
            if v:
                f[k] = v
            else:
                f.pop(k, None)
    return r


def ideal_membership(f: Polynomial, G: GroebnerBasis) -> bool:
    return normal_form(f, G).is_zero


def contains_one(G: GroebnerBasis) -> bool:
    """True iff some element is a unit constant (over ZZ: +-1)."""
    for g in G.elements:
        if g.is_constant() and g.terms:
            c = g.constant_value()
            if isinstance(G.ring.domain, IntegerRing):
                if abs(c) == 1:
                    return True
            else:
                return True
    return False


def candidate_characteristics(G: GroebnerBasis) -> list[int]:
    """Primes dividing a recorded division or a pure integer basis element."""
    primes = set()
    for n in G.division_record:
        primes.update(prime_factors(n))
    for c in G.integer_constants():
        primes.update(prime_factors(c))
    return sorted(primes)


def _fresh(ring: PolyRing, stem: str, count: int = 1) -> list[str]:
    out, k = [], 0
    while len(out) < count:
        name = stem if (count == 1 and k == 0) else f"{stem}_{k}"
        if name not in ring.names and name not in out:
            out.append(name)
        k += 1
    return out


def radical_membership(
    f: Polynomial,
    generators: Sequence[Polynomial],
    limits: Limits | None = None,
) -> bool:
    """``f`` in Rad(<generators>), via ``1 - y*f`` with a fresh variable ``y``."""
    return radical_membership_product([f], generators, limits)


def radical_membership_product(
    factors: Sequence[Polynomial],
    generators: Sequence[Polynomial],
    limits: Limits | None = None,
    seed: GroebnerBasis | None = None,
    stats: EngineStats | None = None,
    nonzero_vars: bool = False,
) -> bool:
    """``prod(factors)`` in Rad(<generators>) without expanding the product.

    Adjoins ``1 - y_k*f_k`` for every factor, one at a time; the product lies
    in the radical iff the enlarged ideal becomes the unit ideal.  ``seed``
    is an optional Groebner basis of part of the generators' ideal.

    ``nonzero_vars`` declares that every variable is invertible modulo the
    ideal (a saturation term is present); monomial factors are then dropped.
    """
    base = seed.ring if seed is not None else _common_ring(list(generators) + list(factors))
    if not base.domain.is_field:
        raise TypeError("radical membership is decided over a field")
    ys = _fresh(base, "y", len(factors))
    ring = base.extend(ys)
    G = seed
    if G is not None:
        G = GroebnerBasis(ring, tuple(g.to_ring(ring) for g in G.elements), G.division_record, G.stats)
    pending = [g.to_ring(ring) for g in generators]
    if pending or G is None:
        G = buchberger_field(pending or [ring.zero], limits, seed=G)
        if stats is not None:
            stats.merge(G.stats)
    if contains_one(G):
        return True
    lifted = [fk.to_ring(ring) for fk in factors]
    if any(normal_form(fk, G).is_zero for fk in lifted):
        return True
    seen = set()
    for y, fk in zip(ys, sorted(lifted, key=lambda f: (len(f.terms), f.degree()))):
        if contains_one(G):
            return True
        # 1 - y*f and 1 - y*NF(f) generate the same ideal together with G
        h = normal_form(fk, G)
        if h.is_zero:
            return True
        if nonzero_vars:
            h = _strip_monomial_content(h)
        if h.is_constant():
            continue  # a nonzero constant is nowhere zero
        key = frozenset(h.monic().terms.items())
        if key in seen:
            continue
        seen.add(key)
        G = buchberger_field([ring.one - ring.var(y) * h], limits, seed=G)
        if stats is not None:
            stats.merge(G.stats)
    return contains_one(G)


def _strip_monomial_content(h: Polynomial) -> Polynomial:
    """Divide out the largest monomial dividing every term.

    Valid only where every variable is nonzero on the variety.
    """
    ring = h.ring
    exps = [ring.exponents(m) for m in h.terms]
    common = [min(col) for col in zip(*exps)]
    if not any(common):
        return h
    g = ring.monomial(common)
    return Polynomial(ring, {ring.mono_div(m, g): c for m, c in h.terms.items()})


def assert_groebner(G: GroebnerBasis) -> None:
    """Raise AssertionError unless every S-polynomial (and, over ZZ, every
    GCD-polynomial) of ``G`` reduces to zero."""
    bad = groebner_violations(G)
    if bad:
        raise AssertionError(f"not a Groebner basis: {bad[0]}")


def groebner_violations(G: GroebnerBasis) -> list[str]:
    ring = G.ring
    elems = [g for g in G.elements if g.terms]
    out = []
    integer = isinstance(ring.domain, IntegerRing)
    for a in range(len(elems)):
        for b in range(a + 1, len(elems)):
            f, g = elems[a], elems[b]
            L = ring.mono_lcm(f.LM, g.LM)
            cf, cg = f.LC, g.LC
            if integer:
                m = lcm(cf, cg)
                s = f.mul_term(m // cf, ring.mono_div(L, f.LM)) - g.mul_term(m // cg, ring.mono_div(L, g.LM))
                checks = [("spoly", s)]
                if cf % cg and cg % cf:
                    _, u, v = _xgcd(cf, cg)
                    gp = f.mul_term(u, ring.mono_div(L, f.LM)) + g.mul_term(v, ring.mono_div(L, g.LM))
                    checks.append(("gpoly", gp))
            else:
                s = f.mul_term(1 / Fraction(cf) if ring.p == 0 else pow(cf, -1, ring.p), ring.mono_div(L, f.LM))
                s = s - g.mul_term(1 / Fraction(cg) if ring.p == 0 else pow(cg, -1, ring.p), ring.mono_div(L, g.LM))
                checks = [("spoly", s)]
            for kind, h in checks:
                if not normal_form(h, G).is_zero:
                    out.append(f"{kind}({f}, {g})")
    return out
