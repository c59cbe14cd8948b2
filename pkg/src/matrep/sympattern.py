"""Symbolic candidate representation matrices and their polynomial systems."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .matroid import Matroid, MatroidError
from .polyring import ZZ, PolyRing, Polynomial, determinant

ZERO = 0
ONE = 1


@dataclass(frozen=True)
class Var:
    id: int
    row: int  # 1-based
    col: int  # 1-based position in the matrix
    name: str


@dataclass(frozen=True)
class SymbolicMatrix:
    """An ``r x n`` grid of ``ZERO``, ``ONE`` or :class:`Var` entries.

    ``labels[j-1]`` is the original matroid element shown in column ``j``;
    variable names use labels, so they match the source numbering even after
    the basis is moved to the front.
    """

    r: int
    n: int
    entries: tuple[tuple, ...]
    labels: tuple[int, ...]
    vars: tuple[Var, ...] = field(default=())

    def entry(self, i: int, j: int):
        return self.entries[i - 1][j - 1]

    @property
    def var_names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.vars)

    def vartable(self) -> dict[str, tuple[int, int]]:
        return {v.name: (v.row, v.col) for v in self.vars}

    def zeros(self) -> list[tuple[int, int]]:
        """Zero positions outside the identity block, as (row, label)."""
        return [
            (i, self.labels[j - 1])
            for j in range(self.r + 1, self.n + 1)
            for i in range(1, self.r + 1)
            if self.entry(i, j) is ZERO
        ]

    def ones(self) -> list[tuple[int, int]]:
        return [
            (i, self.labels[j - 1])
            for j in range(self.r + 1, self.n + 1)
            for i in range(1, self.r + 1)
            if self.entry(i, j) is ONE
        ]

    def ring(self, domain=ZZ, order: str = "degrevlex", extra: Sequence[str] = ()) -> PolyRing:
        return PolyRing(self.var_names + tuple(extra), domain, order)

    def poly_grid(self, ring: PolyRing) -> list[list[Polynomial]]:
        out = []
        for row in self.entries:
            out.append([ring.var(e.name) if isinstance(e, Var) else ring.constant(e) for e in row])
        return out

    def column_of(self, label: int) -> int:
        return self.labels.index(label) + 1

    def render(self) -> str:
        cells = [[e.name if isinstance(e, Var) else str(e) for e in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        head = " ".join(str(lab).rjust(width) for lab in self.labels)
        return "\n".join([head] + [" ".join(c.rjust(width) for c in row) for row in cells])


def build_pattern(M: Matroid, labels: Sequence[int] | None = None) -> SymbolicMatrix:
    """Zero/one/variable pattern with the identity on columns ``1..r``.

    Entry ``(i, j)`` of a non-basis column is nonzero iff basis element ``i``
    lies in the fundamental circuit of ``j``; the topmost nonzero entry is
    scaled to one.
    """
    r, n = M.r, M.n
    labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
    basis = frozenset(range(1, r + 1))
    if not M.is_basis(basis):
        raise MatroidError("the first r elements are not a basis")
    grid = [[ZERO] * n for _ in range(r)]
    for i in range(r):
        grid[i][i] = ONE
    variables = []
    for j in range(r + 1, n + 1):
        fc = M.fundamental_circuit(basis, j)
        rows = sorted(fc - {j})
        for k, i in enumerate(rows):
            if k == 0:
                grid[i - 1][j - 1] = ONE
            else:
                v = Var(len(variables), i, j, f"x_{i}_{labels[j - 1]}")
                variables.append(v)
                grid[i - 1][j - 1] = v
    return SymbolicMatrix(r, n, tuple(tuple(row) for row in grid), labels, tuple(variables))


def _columns(grid, cols):
    return [[row[j - 1] for j in cols] for row in grid]


def _dedup_key(f: Polynomial):
    return frozenset(f.sign_normalized().terms.items())


def circuit_polynomials(M: Matroid, S: SymbolicMatrix, ring: PolyRing | None = None) -> list[tuple[Polynomial, frozenset]]:
    """All nonzero ``c x c`` minors of each circuit's columns, deduplicated up to sign.

    Tags are circuits in label numbering.
    """
    ring = ring or S.ring()
    grid = S.poly_grid(ring)
    seen = set()
    out = []
    for C in M.circuits:
        cols = sorted(C)
        sub = _columns(grid, cols)
        tag = frozenset(S.labels[j - 1] for j in cols)
        for rows in itertools.combinations(range(S.r), len(cols)):
            f = determinant([sub[i] for i in rows], ring)
            if f.is_zero:
                continue
            f = f.sign_normalized()
            key = _dedup_key(f)
            if key in seen:
                continue
            seen.add(key)
            out.append((f, tag))
    return out


def _is_unit_monomial(f: Polynomial) -> bool:
    return len(f.terms) == 1 and next(iter(f.terms.values())) in (1, -1)


def basis_polynomials(
    M: Matroid, S: SymbolicMatrix, ring: PolyRing | None = None, *, keep_monomials: bool = False
) -> list[tuple[Polynomial, frozenset]]:
    """Determinants of the basis columns.

    ``+-1`` and ``+-`` single monomials are dropped unless ``keep_monomials``;
    the saturation term already forces them to be nonzero.
    """
    ring = ring or S.ring()
    grid = S.poly_grid(ring)
    out = []
    for B in M.bases():
        cols = sorted(B)
        f = determinant(_columns(grid, cols), ring)
        tag = frozenset(S.labels[j - 1] for j in cols)
        if f.is_zero:
            raise MatroidError(f"basis {sorted(tag)} has an identically zero determinant in the pattern")
        if not keep_monomials and _is_unit_monomial(f):
            continue
        out.append((f.sign_normalized(), tag))
    return out


def saturation_polynomial(ring: PolyRing, var_names: Sequence[str], t: str = "t") -> Polynomial:
    """``1 - t * prod(vars)``."""
    prod = ring.one
    for name in var_names:
        prod = prod * ring.var(name)
    return ring.one - ring.var(t) * prod


def format_set(s) -> str:
    return "{" + ",".join(str(e) for e in sorted(s)) + "}"


def dump_system(S: SymbolicMatrix, qs, ps, saturation: Polynomial | None = None) -> str:
    """Stable text rendering of the pattern and polynomial system."""
    lines = ["# pattern", S.render(), "# variables"]
    lines += [f"{v.name} ({v.row},{v.col})" for v in S.vars]
    lines.append(f"# circuit equations ({len(qs)})")
    lines += [f"{format_set(tag)}: {f} = 0" for f, tag in qs]
    lines.append(f"# basis inequations ({len(ps)})")
    lines += [f"{format_set(tag)}: {f} != 0" for f, tag in ps]
    if saturation is not None:
        lines.append("# saturation")
        lines.append(f"{saturation} = 0")
    return "\n".join(lines) + "\n"
