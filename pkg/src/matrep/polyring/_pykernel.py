"""Pure-Python term kernels.

Polynomials are dicts ``{monomial_key: coefficient}``.  Monomial keys are
ints whose natural order is the monomial order; multiplying monomials is
``a + b - off``.  ``m ^ xmask`` recovers the packed exponent vector, and
``a`` divides ``b`` iff ``((b ^ xmask) | guard) - (a ^ xmask)`` keeps every
guard bit.  ``p == 0`` means exact (unreduced) coefficients.

Keep this file and ``_ckernel.pyx`` in lockstep.
"""

from math import gcd


def mul(f, g, off, p):
    h = {}
    get = h.get
    for mf, cf in f.items():
        d = mf - off
        for mg, cg in g.items():
            k = mg + d
            h[k] = get(k, 0) + cf * cg
    if p:
        return {k: c % p for k, c in h.items() if c % p}
    return {k: c for k, c in h.items() if c}


def combine(f, a, g, b, delta, p):
    """Return ``a*f - b*x^delta*g``; ``delta`` is added to every key of g."""
    if a == 1:
        h = dict(f)
    elif p:
        h = {k: c * a % p for k, c in f.items()}
    else:
        h = {k: c * a for k, c in f.items()}
    get = h.get
    if p:
        for mg, cg in g.items():
            k = mg + delta
            c = (get(k, 0) - b * cg) % p
            if c:
                h[k] = c
            else:
                h.pop(k, None)
    else:
        for mg, cg in g.items():
            k = mg + delta
            c = get(k, 0) - b * cg
            if c:
                h[k] = c
            else:
                h.pop(k, None)
    return h


def find_divisor(m, lms_e, xmask, guard):
    """Index of the first exponent vector in ``lms_e`` dividing key ``m``, or -1."""
    eg = (m ^ xmask) | guard
    for i, le in enumerate(lms_e):
        if (eg - le) & guard == guard:
            return i
    return -1


def nf_field(f, lms, lms_e, polys, xmask, guard, p, full=True):
    """Remainder of ``f`` modulo monic ``polys`` over GF(p)."""
    f = dict(f)
    r = {}
    n = len(lms_e)
    while f:
        m = max(f)
        c = f.pop(m)
        eg = (m ^ xmask) | guard
        i = 0
        while i < n:
            if (eg - lms_e[i]) & guard == guard:
                break
            i += 1
        if i == n:
            if not full:
                f[m] = c
                f.update(r)
                return f
            r[m] = c
            continue
        gl = lms[i]
        d = m - gl
        get = f.get
        for mg, cg in polys[i].items():
            if mg == gl:
                continue
            k = mg + d
            v = (get(k, 0) - c * cg) % p
            if v:
                f[k] = v
            else:
                f.pop(k, None)
    return r


def nf_fraction_free(f, lms, lms_e, polys, xmask, guard, full=True):
    """Remainder of integer ``f`` modulo integer ``polys`` over the rationals.

    The result equals the rational remainder up to a nonzero scalar.
    """
    f = dict(f)
    r = {}
    n = len(lms_e)
    steps = 0
    while f:
        m = max(f)
        c = f.pop(m)
        eg = (m ^ xmask) | guard
        i = 0
        while i < n:
            if (eg - lms_e[i]) & guard == guard:
                break
            i += 1
        if i == n:
            if not full:
                f[m] = c
                f.update(r)
                return f
            r[m] = c
            continue
        g = polys[i]
        gl = lms[i]
        lg = g[gl]
        dd = gcd(c, lg)
        a = lg // dd
        b = c // dd
        if a < 0:
            a = -a
            b = -b
        if a != 1:
            for k in f:
                f[k] *= a
            for k in r:
                r[k] *= a
        d = m - gl
        get = f.get
        for mg, cg in g.items():
            if mg == gl:
                continue
            k = mg + d
            v = get(k, 0) - b * cg
            if v:
                f[k] = v
            else:
                f.pop(k, None)
        steps += 1
        if a != 1 and steps % 8 == 0:
            cont = 0
            for v in f.values():
                cont = gcd(cont, v)
                if cont == 1:
                    break
            if cont != 1:
                for v in r.values():
                    cont = gcd(cont, v)
                    if cont == 1:
                        break
            if cont > 1:
                for k in f:
                    f[k] //= cont
                for k in r:
                    r[k] //= cont
    return r


def nf_strong(f, lms, lms_e, lcs, polys, xmask, guard, full=True):
    """Remainder of integer ``f`` under strong (coefficient-divisible) reduction."""
    f = dict(f)
    r = {}
    n = len(lms_e)
    while f:
        m = max(f)
        c = f.pop(m)
        eg = (m ^ xmask) | guard
        i = 0
        while i < n:
            if c % lcs[i] == 0 and (eg - lms_e[i]) & guard == guard:
                break
            i += 1
        if i == n:
            if not full:
                f[m] = c
                f.update(r)
                return f
            r[m] = c
            continue
        q = c // lcs[i]
        gl = lms[i]
        d = m - gl
        get = f.get
        for mg, cg in polys[i].items():
            if mg == gl:
                continue
            k = mg + d
            v = get(k, 0) - q * cg
            if v:
                f[k] = v
            else:
                f.pop(k, None)
    return r
