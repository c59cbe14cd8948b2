import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matrep.polyring import GF, ZZ, PolyRing
from matrep.polyring import _pykernel as py

try:
    from matrep.polyring import _ckernel as cy
except ImportError:  # extension not built
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled kernel not built")

R = PolyRing(("a", "b", "c"))


def polys(coeffs):
    term = st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), coeffs)
    return st.lists(term, max_size=8).map(lambda ts: {R.monomial(e): c for e, c in ts if c})


def monic_basis(p):
    # a fixed small basis with monic leading terms, sorted as the engine keeps it
    a, b, c = (R.clone(domain=GF(p)).var(n) for n in "abc")
    G = [a * a - b, a * b - c, b * b - a * c]
    out = []
    for g in G:
        d = dict(g.terms)
        inv = pow(d[max(d)], -1, p)
        out.append({k: v * inv % p for k, v in d.items()})
    return out


@needs_ext
@settings(max_examples=150, deadline=None)
@given(polys(st.integers(-50, 50)), polys(st.integers(-50, 50)), st.sampled_from([0, 2, 3, 32003, (1 << 61) - 1]))
def test_mul_and_combine_agree(f, g, p):
    if p:
        f = {k: v % p for k, v in f.items() if v % p}
        g = {k: v % p for k, v in g.items() if v % p}
    assert cy.mul(f, g, R.off, p) == py.mul(f, g, R.off, p)
    delta = R.monomial((1, 0, 2)) - R.off
    assert cy.combine(f, 3, g, -7, delta, p) == py.combine(f, 3, g, -7, delta, p)
    assert cy.combine(f, 1, g, 1, 0, p) == py.combine(f, 1, g, 1, 0, p)


@needs_ext
@settings(max_examples=150, deadline=None)
@given(polys(st.integers(0, 10**6)), st.sampled_from([2, 5, 32003]))
def test_field_reduction_agrees(f, p):
    f = {k: v % p for k, v in f.items() if v % p}
    G = monic_basis(p)
    lms = [max(g) for g in G]
    lms_e = [m ^ R.xmask for m in lms]
    for full in (True, False):
        assert cy.nf_field(f, lms, lms_e, G, R.xmask, R.guard, p, full) == py.nf_field(
            f, lms, lms_e, G, R.xmask, R.guard, p, full
        )
    assert cy.find_divisor(max(f) if f else R.one_monomial, lms_e, R.xmask, R.guard) == py.find_divisor(
        max(f) if f else R.one_monomial, lms_e, R.xmask, R.guard
    )


@needs_ext
@settings(max_examples=150, deadline=None)
@given(polys(st.integers(-(10**20), 10**20)))
def test_integer_reductions_agree(f):
    a, b, c = R.gens()
    G = [dict(g.terms) for g in (3 * a * a - b, 2 * a * b - 5 * c, b * b - a * c + 4)]
    lms = [max(g) for g in G]
    lms_e = [m ^ R.xmask for m in lms]
    lcs = [g[m] for g, m in zip(G, lms)]
    assert cy.nf_fraction_free(f, lms, lms_e, G, R.xmask, R.guard) == py.nf_fraction_free(
        f, lms, lms_e, G, R.xmask, R.guard
    )
    assert cy.nf_strong(f, lms, lms_e, lcs, G, R.xmask, R.guard) == py.nf_strong(f, lms, lms_e, lcs, G, R.xmask, R.guard)


def test_pure_backend_can_be_forced():
    code = "from matrep.polyring import kernel; print(kernel.BACKEND)"
    env = {**os.environ, "MATREP_PURE_PYTHON": "1"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_ext
def test_compiled_backend_is_default():
    env = {k: v for k, v in os.environ.items() if k != "MATREP_PURE_PYTHON"}
    code = "from matrep.polyring import kernel; print(kernel.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "cython"


def test_kernel_module_exports():
    k = importlib.import_module("matrep.polyring.kernel")
    for name in ("mul", "combine", "find_divisor", "nf_field", "nf_fraction_free", "nf_strong"):
        assert callable(getattr(k, name))
    assert k.BACKEND in ("cython", "python")
    assert ZZ.characteristic == 0
