# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term kernels, a typed copy of ``_pykernel``.

Monomial keys stay Python ints (they outgrow 64 bits quickly).  Coefficients
modulo ``p`` are handled as C ``long long``; exact coefficients stay Python
ints.  Keep this file and ``_pykernel.py`` in lockstep.
"""

from math import gcd

from . import _pykernel

# products of two residues must fit in a long long
_SMALL = 1 << 31


cdef inline long long _mod(long long v, long long p):
    v %= p
    if v < 0:
        v += p
    return v


def mul(dict f, dict g, off, p_in):
    cdef dict h = {}
    cdef long long cf, cg, acc, p
    if p_in >= _SMALL:
        return _pykernel.mul(f, g, off, p_in)
    p = p_in
    if p:
        for mf, ocf in f.items():
            d = mf - off
            cf = ocf
            for mg, ocg in g.items():
                k = mg + d
                cg = ocg
                acc = h.get(k, 0)
                h[k] = (acc + cf * cg) % p
        return {k: c for k, c in h.items() if c}
    for mf, cf_o in f.items():
        d = mf - off
        for mg, cg_o in g.items():
            k = mg + d
            h[k] = h.get(k, 0) + cf_o * cg_o
    return {k: c for k, c in h.items() if c}


def combine(dict f, a, dict g, b, delta, p_in):
    """Return ``a*f - b*x^delta*g``; ``delta`` is added to every key of g."""
    cdef dict h
    cdef long long ca, cb, c, p
    if p_in >= _SMALL:
        return _pykernel.combine(f, a, g, b, delta, p_in)
    p = p_in
    if p:
        ca = a % p
        cb = b % p
        if ca == 1:
            h = dict(f)
        else:
            h = {k: (<long long>v * ca) % p for k, v in f.items()}
        for mg, cg in g.items():
            k = mg + delta
            c = _mod(<long long>h.get(k, 0) - cb * <long long>cg, p)
            if c:
                h[k] = c
            else:
                h.pop(k, None)
        return h
    if a == 1:
        h = dict(f)
    else:
        h = {k: v * a for k, v in f.items()}
    for mg, cg in g.items():
        k = mg + delta
        v = h.get(k, 0) - b * cg
        if v:
            h[k] = v
        else:
            h.pop(k, None)
    return h


def find_divisor(m, list lms_e, xmask, guard):
    """Index of the first exponent vector in ``lms_e`` dividing key ``m``, or -1."""
    cdef Py_ssize_t i, n = len(lms_e)
    eg = (m ^ xmask) | guard
    for i in range(n):
        if (eg - lms_e[i]) & guard == guard:
            return i
    return -1


cdef Py_ssize_t _first_divisor(object eg, list lms_e, object guard, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        if (eg - lms_e[i]) & guard == guard:
            return i
    return n


def nf_field(f, list lms, list lms_e, list polys, xmask, guard, p_in, bint full=True):
    """Remainder of ``f`` modulo monic ``polys`` over GF(p)."""
    cdef dict fd = dict(f)
    cdef dict r = {}
    cdef dict g
    cdef Py_ssize_t i, n = len(lms_e)
    cdef long long c, v, p
    if p_in >= _SMALL:
        return _pykernel.nf_field(f, lms, lms_e, polys, xmask, guard, p_in, full)
    p = p_in
    while fd:
        m = max(fd)
        c = fd.pop(m)
        i = _first_divisor((m ^ xmask) | guard, lms_e, guard, n)
        if i == n:
            if not full:
                fd[m] = c
                fd.update(r)
                return fd
            r[m] = c
            continue
        g = polys[i]
        gl = lms[i]
        d = m - gl
        for mg, cg in g.items():
            if mg == gl:
                continue
            k = mg + d
            v = _mod(<long long>fd.get(k, 0) - c * <long long>cg, p)
            if v:
                fd[k] = v
            else:
                fd.pop(k, None)
    return r


def nf_fraction_free(f, list lms, list lms_e, list polys, xmask, guard, bint full=True):
    """Remainder of integer ``f`` modulo integer ``polys`` over the rationals.

    The result equals the rational remainder up to a nonzero scalar.
    """
    cdef dict fd = dict(f)
    cdef dict r = {}
    cdef dict g
    cdef Py_ssize_t i, n = len(lms_e)
    cdef long steps = 0
    while fd:
        m = max(fd)
        c = fd.pop(m)
        i = _first_divisor((m ^ xmask) | guard, lms_e, guard, n)
        if i == n:
            if not full:
                fd[m] = c
                fd.update(r)
                return fd
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
            for k in fd:
                fd[k] *= a
            for k in r:
                r[k] *= a
        d = m - gl
        for mg, cg in g.items():
            if mg == gl:
                continue
            k = mg + d
            v = fd.get(k, 0) - b * cg
            if v:
                fd[k] = v
            else:
                fd.pop(k, None)
        steps += 1
        if a != 1 and steps % 8 == 0:
            cont = 0
            for v in fd.values():
                cont = gcd(cont, v)
                if cont == 1:
                    break
            if cont != 1:
                for v in r.values():
                    cont = gcd(cont, v)
                    if cont == 1:
                        break
            if cont > 1:
                for k in fd:
                    fd[k] //= cont
                for k in r:
                    r[k] //= cont
    return r


def nf_strong(f, list lms, list lms_e, list lcs, list polys, xmask, guard, bint full=True):
    """Remainder of integer ``f`` under strong (coefficient-divisible) reduction."""
    cdef dict fd = dict(f)
    cdef dict r = {}
    cdef dict g
    cdef Py_ssize_t i, n = len(lms_e)
    while fd:
        m = max(fd)
        c = fd.pop(m)
        eg = (m ^ xmask) | guard
        i = 0
        while i < n:
            if c % lcs[i] == 0 and (eg - lms_e[i]) & guard == guard:
                break
            i += 1
        if i == n:
            if not full:
                fd[m] = c
                fd.update(r)
                return fd
            r[m] = c
            continue
        q = c // lcs[i]
        g = polys[i]
        gl = lms[i]
        d = m - gl
        for mg, cg in g.items():
            if mg == gl:
                continue
            k = mg + d
            v = fd.get(k, 0) - q * cg
            if v:
                fd[k] = v
            else:
                fd.pop(k, None)
    return r
