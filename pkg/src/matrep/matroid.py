"""Matroids stored through their circuits of size at most the rank.

Elements are ``1..n``.  Subsets are frozensets; the matroid is immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

ElementSet = frozenset


class MatroidError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    axiom: str
    message: str
    witnesses: tuple = ()
    note: bool = False  # tolerated observation, not a failure

    def __str__(self):
        return f"{self.axiom}: {self.message}"


@dataclass(frozen=True, eq=False)
class Matroid:
    n: int
    r: int
    circuits: tuple[frozenset, ...] = field(default=())

    def __post_init__(self):
        canon = tuple(sorted({frozenset(c) for c in self.circuits}, key=_set_key))
        object.__setattr__(self, "circuits", canon)

    @classmethod
    def from_circuits(cls, n: int, r: int, circuits: Iterable[Iterable[int]]) -> "Matroid":
        return cls(n, r, tuple(frozenset(c) for c in circuits))

    @classmethod
    def from_incidence(cls, r: int, rows: Sequence[str]) -> "Matroid":
        """Build from 0/1 incidence strings such as the circuit tables ``0010110``."""
        n = len(rows[0])
        circuits = [frozenset(i + 1 for i, ch in enumerate(row) if ch == "1") for row in rows]
        return cls(n, r, tuple(circuits))

    def __eq__(self, other):
        return isinstance(other, Matroid) and (self.n, self.r, self.circuits) == (other.n, other.r, other.circuits)

    def __hash__(self):
        return hash((self.n, self.r, self.circuits))

    def __repr__(self):
        cs = " ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in self.circuits)
        return f"Matroid(n={self.n}, r={self.r}, circuits=[{cs}])"

    @property
    def ground_set(self) -> frozenset:
        return frozenset(range(1, self.n + 1))

    def incidence_rows(self) -> list[str]:
        return ["".join("1" if e in c else "0" for e in range(1, self.n + 1)) for c in self.circuits]

    def is_dependent(self, X: Iterable[int]) -> bool:
        X = frozenset(X)
        if len(X) > self.r:
            raise MatroidError(f"|X| = {len(X)} exceeds the rank {self.r}; dependence is automatic")
        return any(c <= X for c in self.circuits)

    @cached_property
    def _bases(self) -> tuple[frozenset, ...]:
        return tuple(
            frozenset(s)
            for s in itertools.combinations(range(1, self.n + 1), self.r)
            if not any(c <= frozenset(s) for c in self.circuits)
        )

    def bases(self) -> list[frozenset]:
        """All r-subsets containing no circuit, in lexicographic order."""
        return list(self._bases)

    def is_basis(self, B: Iterable[int]) -> bool:
        B = frozenset(B)
        return len(B) == self.r and not any(c <= B for c in self.circuits)

    def fundamental_circuit(self, B: Iterable[int], e: int) -> frozenset:
        B = frozenset(B)
        if e in B:
            raise MatroidError(f"element {e} lies in the basis")
        if not self.is_basis(B):
            raise MatroidError(f"{sorted(B)} is not a basis")
        X = B | {e}
        inside = [c for c in self.circuits if c <= X]
        if not inside:
            return X
        if len(inside) > 1:
            raise MatroidError(f"several circuits in {sorted(X)}: circuit axioms fail")
        return inside[0]

    def relabel(self, order: Sequence[int]) -> "Matroid":
        """Matroid whose element ``k+1`` is the old element ``order[k]``."""
        pos = {old: k + 1 for k, old in enumerate(order)}
        return Matroid(self.n, self.r, tuple(frozenset(pos[e] for e in c) for c in self.circuits))

    def render(self) -> str:
        """Text form accepted by :func:`matrep.cli.parse_matroid`."""
        return "\n".join([f"{self.n} {self.r}", *self.incidence_rows()]) + "\n"


def _set_key(s: frozenset):
    return (len(s), sorted(s))


def validate(M: Matroid) -> list[Violation]:
    """Circuit-axiom violations of ``M`` (notes, flagged ``note=True``, are not failures)."""
    out: list[Violation] = []
    n, r = M.n, M.r
    if r < 0 or r > n:
        out.append(Violation("rank", f"rank {r} outside 0..{n}"))
    for c in M.circuits:
        if not c:
            out.append(Violation("nonempty", "empty circuit"))
        elif min(c) < 1 or max(c) > n:
            out.append(Violation("ground-set", f"circuit {sorted(c)} leaves 1..{n}", (c,)))
        elif len(c) > r:
            out.append(Violation("size", f"circuit {sorted(c)} is larger than the rank {r}", (c,)))
    for c1, c2 in itertools.permutations(M.circuits, 2):
        if c1 < c2:
            out.append(Violation("incomparability", f"{sorted(c1)} is contained in {sorted(c2)}", (c1, c2)))
    for c1, c2 in itertools.combinations(M.circuits, 2):
        for e in sorted(c1 & c2):
            rest = (c1 | c2) - {e}
            if any(c <= rest for c in M.circuits):
                continue
            if len(rest) > r:
                out.append(
                    Violation(
                        "elimination",
                        f"witness for {sorted(c1)}, {sorted(c2)}, e={e} has more than {r} elements",
                        (c1, c2, e),
                        note=True,
                    )
                )
            else:
                out.append(
                    Violation("elimination", f"no circuit inside ({sorted(c1)} | {sorted(c2)}) - {e}", (c1, c2, e))
                )
    if not any(v.axiom in ("rank", "ground-set") for v in out):
        bases = M.bases()
        if not bases:
            out.append(Violation("rank", f"every {r}-subset contains a circuit"))
        else:
            out.extend(_exchange_violations(M, bases))
    return out


def _exchange_violations(M: Matroid, bases: list[frozenset]) -> list[Violation]:
    basis_set = set(bases)
    out = []
    for B1 in bases:
        for B2 in bases:
            for x in B1 - B2:
                if not any((B1 - {x}) | {y} in basis_set for y in B2 - B1):
                    out.append(
                        Violation("basis-exchange", f"no exchange for {sorted(B1)}, {sorted(B2)}, x={x}", (B1, B2, x))
                    )
                    return out
    return out


def failures(violations: Iterable[Violation]) -> list[Violation]:
    return [v for v in violations if not v.note]


def dual(M: Matroid) -> Matroid:
    """Dual matroid; circuits of size up to ``n - r`` recomputed from complement bases."""
    n, rs = M.n, M.n - M.r
    ground = M.ground_set
    dual_bases = [ground - B for B in M.bases()]
    independent = set()
    for B in dual_bases:
        for k in range(rs + 1):
            independent.update(frozenset(s) for s in itertools.combinations(sorted(B), k))
    circuits = []
    for k in range(1, rs + 1):
        for s in itertools.combinations(range(1, n + 1), k):
            X = frozenset(s)
            if X in independent:
                continue
            if all(X - {e} in independent for e in X):
                circuits.append(X)
    return Matroid(n, rs, tuple(circuits))


def simplify(M: Matroid) -> tuple[Matroid, dict[int, int]]:
    """Delete loops and keep the smallest element of each parallel class.

    Returns the simple matroid and a map from surviving original elements to
    their new indices.
    """
    loops = {next(iter(c)) for c in M.circuits if len(c) == 1}
    parent = {e: e for e in range(1, M.n + 1)}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for c in M.circuits:
        if len(c) == 2:
            a, b = sorted(c)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    survivors = [e for e in range(1, M.n + 1) if e not in loops and find(e) == e]
    if M.r == 0 or not survivors:
        raise MatroidError("simplification has rank 0")
    mapping = {e: k + 1 for k, e in enumerate(survivors)}
    circuits = [frozenset(mapping[e] for e in c) for c in M.circuits if len(c) > 2 and c <= mapping.keys()]
    return Matroid(len(survivors), M.r, tuple(circuits)), mapping


def is_simple(M: Matroid) -> bool:
    return all(len(c) > 2 for c in M.circuits)


def find_initial_basis(M: Matroid) -> tuple[int, ...]:
    """Element order putting the lexicographically first basis in front.

    ``order[k]`` is the original element placed at position ``k+1``; basis
    elements come first, then the others, each in increasing order.
    """
    bases = M.bases()
    if not bases:
        raise MatroidError("matroid has no basis")
    B = bases[0]
    rest = [e for e in range(1, M.n + 1) if e not in B]
    return tuple(sorted(B)) + tuple(rest)


def uniform(r: int, n: int) -> Matroid:
    """U_{r,n}: circuits are the (r+1)-subsets, none stored."""
    return Matroid(n, r, ())


def all_circuits(M: Matroid) -> list[frozenset]:
    """Stored circuits plus the implied ones of size ``r + 1``.

    A set of ``r + 1`` elements is a circuit when each of its ``r``-subsets is a basis.
    """
    extra = [
        frozenset(s)
        for s in itertools.combinations(range(1, M.n + 1), M.r + 1)
        if all(M.is_basis(frozenset(s) - {e}) for e in s)
    ]
    return list(M.circuits) + extra
