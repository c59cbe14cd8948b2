"""Per-characteristic and all-fields non-representability decisions, plus the
finite-field oracles used to cross-check them."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import groebner as gb
from .groebner import EngineStats, GroebnerBasis, Limits, ResourceLimitExceeded
from .matroid import Matroid, MatroidError, dual, find_initial_basis, is_simple, simplify
from .polyring import ZZ, FiniteField, PolyRing, Polynomial, field_of_characteristic, finite_field, is_prime
from .sympattern import SymbolicMatrix, Var, basis_polynomials, build_pattern, circuit_polynomials, format_set, saturation_polynomial

NON_REPRESENTABLE = "non_representable"
INCONCLUSIVE = "inconclusive"
REPRESENTABLE_CLOSURE = "representable_over_closure"
RESOURCE_EXCEEDED = "resource_exceeded"


@dataclass(frozen=True)
class Witness:
    kind: str  # "basis", "unit", "constant" or "radical"
    ideal: str  # "saturated", "circuit" or "integer"
    basis: frozenset | None = None
    polynomial: str | None = None

    def describe(self) -> str:
        if self.kind == "basis":
            return f"P{format_set(self.basis)} in I"
        if self.kind == "unit":
            return "1 in I"
        if self.kind == "constant":
            return f"{self.polynomial} in I"
        return "prod P in Rad(I)"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ideal": self.ideal,
            "basis": sorted(self.basis) if self.basis is not None else None,
            "polynomial": self.polynomial,
        }


@dataclass(frozen=True)
class Verdict:
    status: str
    mode: str = "fast"
    witness: Witness | None = None
    reason: str = ""
    fast_status: str | None = None  # exact mode: outcome of the fast phase

    @property
    def non_representable(self) -> bool:
        return self.status == NON_REPRESENTABLE

    def to_json(self) -> dict:
        out = {"status": self.status, "mode": self.mode, "reason": self.reason}
        out["witness"] = self.witness.to_json() if self.witness else None
        if self.fast_status is not None:
            out["fast_status"] = self.fast_status
        return out


# -- preprocessing ----------------------------------------------------------


@dataclass(frozen=True)
class Prepared:
    """A simple, basis-first matroid plus how it was obtained from the input."""

    original: Matroid
    matroid: Matroid
    labels: tuple[int, ...]  # original element behind each position
    transforms: tuple[str, ...]
    dualized: bool

    @property
    def pattern(self) -> SymbolicMatrix:
        return build_pattern(self.matroid, self.labels)


def prepare(M: Matroid, allow_dual: bool = True) -> Prepared:
    """Simplify, dualize when ``r > n/2``, and move the first basis to the front."""
    transforms = []
    labels = list(range(1, M.n + 1))
    cur = M
    if not is_simple(cur):
        cur, mapping = simplify(cur)
        inv = {v: k for k, v in mapping.items()}
        labels = [labels[inv[k] - 1] for k in range(1, cur.n + 1)]
        transforms.append(f"simplify: kept {sorted(mapping)}")
    dualized = False
    if allow_dual and 2 * cur.r > cur.n:
        cur = dual(cur)
        dualized = True
        transforms.append(f"dual: rank {cur.n - cur.r} -> {cur.r}")
        if not is_simple(cur):
            cur, mapping = simplify(cur)
            inv = {v: k for k, v in mapping.items()}
            labels = [labels[inv[k] - 1] for k in range(1, cur.n + 1)]
            transforms.append(f"simplify: kept {sorted(labels)}")
    order = find_initial_basis(cur)
    if list(order) != list(range(1, cur.n + 1)):
        transforms.append("reorder: " + " ".join(str(labels[e - 1]) for e in order))
    cur = cur.relabel(order)
    labels = [labels[e - 1] for e in order]
    return Prepared(M, cur, tuple(labels), tuple(transforms), dualized)


@dataclass
class SaturatedSystem:
    pattern: SymbolicMatrix
    ring: PolyRing  # integer coefficients, pattern variables then t
    circuit_eqs: list[tuple[Polynomial, frozenset]]
    basis_eqs: list[tuple[Polynomial, frozenset]]
    saturation: Polynomial

    @property
    def roster(self) -> tuple[str, ...]:
        return self.ring.names

    def generators(self) -> list[Polynomial]:
        return [f for f, _ in self.circuit_eqs] + [self.saturation]


def build_system(prep: Prepared, order: str = "degrevlex") -> SaturatedSystem:
    S = prep.pattern
    ring = S.ring(ZZ, order, extra=("t",))
    qs = circuit_polynomials(prep.matroid, S, ring)
    ps = basis_polynomials(prep.matroid, S, ring)
    return SaturatedSystem(S, ring, qs, ps, saturation_polynomial(ring, S.var_names))


# -- decisions --------------------------------------------------------------


def _first_member(ps, G: GroebnerBasis, ring: PolyRing):
    for f, tag in ps:
        if gb.normal_form(f.to_ring(ring), G).is_zero:
            return f, tag
    return None


def decide_over_char(
    M: Matroid | Prepared,
    p: int,
    exact: bool = False,
    *,
    order: str = "degrevlex",
    limits: Limits | None = None,
    system: SaturatedSystem | None = None,
    stats: EngineStats | None = None,
) -> Verdict:
    """Fast test over the algebraic closure of GF(p) (QQ for ``p == 0``).

    The fast test is sound for non-representability only.  ``exact`` adds the
    radical-membership test, which also certifies representability.
    """
    if p != 0 and not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    prep = M if isinstance(M, Prepared) else prepare(M)
    system = system or build_system(prep, order)
    stats = stats if stats is not None else EngineStats()
    ring = system.ring.clone(domain=field_of_characteristic(p))
    gens = [f.to_ring(ring) for f in system.generators()]
    try:
        G = gb.buchberger_field(gens, limits)
        stats.merge(G.stats)
        if gb.contains_one(G):
            fast = Verdict(NON_REPRESENTABLE, "fast", Witness("unit", "saturated"), "1 in the saturated ideal")
        else:
            hit = _first_member(system.basis_eqs, G, ring)
            if hit:
                f, tag = hit
                fast = Verdict(
                    NON_REPRESENTABLE,
                    "fast",
                    Witness("basis", "saturated", tag, str(f)),
                    f"basis determinant {format_set(tag)} vanishes on the saturated ideal",
                )
            else:
                fast = Verdict(INCONCLUSIVE, "fast", None, "sufficient test passed")
        if not exact:
            return fast
        if fast.non_representable:
            # a member of the ideal puts the whole product in its radical
            return Verdict(NON_REPRESENTABLE, "exact", fast.witness, fast.reason, fast.status)
        factors = [f.to_ring(ring) for f, _ in system.basis_eqs]
        in_radical = gb.radical_membership_product(factors, [], limits, seed=G, stats=stats, nonzero_vars=True)
    except ResourceLimitExceeded as exc:
        return Verdict(RESOURCE_EXCEEDED, "exact" if exact else "fast", None, str(exc))
    if in_radical:
        return Verdict(
            NON_REPRESENTABLE,
            "exact",
            Witness("radical", "circuit"),
            "product of basis determinants lies in the radical of the circuit ideal",
            fast.status,
        )
    return Verdict(
        REPRESENTABLE_CLOSURE,
        "exact",
        None,
        "product of basis determinants is not in the radical of the circuit ideal",
        fast.status,
    )


@dataclass
class DecisionReport:
    matroid: Matroid
    prepared: Prepared
    system: SaturatedSystem
    characteristics: dict[int, Verdict]
    candidate_characteristics: list[int] = field(default_factory=list)
    all_fields_verdict: Verdict | None = None
    integer_witness: Witness | None = None
    division_record: tuple[int, ...] = ()
    notes: list[str] = field(default_factory=list)
    stats: EngineStats = field(default_factory=EngineStats)
    limits_hit: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    all_fields: bool = False

    @property
    def finite_characteristics(self) -> list[int] | None:
        """Primes still possible when char 0 is excluded and an integer witness exists."""
        if self.integer_witness is None or self.all_fields_verdict is not None:
            return None
        zero = self.characteristics.get(0)
        if zero is None or not zero.non_representable:
            return None
        return [p for p in self.candidate_characteristics if not self.characteristics[p].non_representable]

    @property
    def classification(self) -> str:
        if self.all_fields_verdict is not None:
            return "non-representable"
        if self.limits_hit:
            return "resource-exceeded"
        if self.finite_characteristics:
            return "finite-characteristic"
        return "inconclusive"

    @property
    def witness(self) -> Witness | None:
        if self.all_fields_verdict is not None:
            return self.all_fields_verdict.witness
        for p in sorted(self.characteristics):
            v = self.characteristics[p]
            if v.witness:
                return v.witness
        return None

    def to_json(self, timings: bool = True) -> dict:
        S = self.system.pattern
        out = {
            "matroid": {
                "n": self.matroid.n,
                "r": self.matroid.r,
                "circuits": [sorted(c) for c in self.matroid.circuits],
            },
            "transforms": list(self.prepared.transforms),
            "pattern": {
                "vars": list(S.var_names),
                "zeros": [list(z) for z in S.zeros()],
                "ones": [list(z) for z in S.ones()],
                "columns": list(S.labels),
            },
            "characteristics": {str(p): v.to_json() for p, v in sorted(self.characteristics.items())},
            "candidate_characteristics": list(self.candidate_characteristics) if self.all_fields else None,
            "division_record": list(self.division_record),
            "all_fields_verdict": self.all_fields_verdict.to_json() if self.all_fields_verdict else None,
            "finite_characteristics": self.finite_characteristics,
            "classification": self.classification,
            "witness": self.witness.to_json() if self.witness else None,
            "notes": list(self.notes),
            "engine": {
                "pairs": self.stats.pairs,
                "reductions": self.stats.reductions,
                "limits_hit": list(self.limits_hit),
            },
        }
        if timings:
            out["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return out


def decide(
    M: Matroid,
    characteristics: Sequence[int] = (0, 2, 3, 5),
    *,
    all_fields: bool = False,
    exact: bool = False,
    order: str = "degrevlex",
    limits: Limits | None = None,
    trace=None,
) -> DecisionReport:
    """Run the per-characteristic tests and, with ``all_fields``, the integer engine."""
    t_start = time.perf_counter()
    prep = prepare(M)
    system = build_system(prep, order)
    report = DecisionReport(M, prep, system, {}, all_fields=all_fields)
    if prep.transforms:
        report.notes.extend(prep.transforms)
    chars = list(dict.fromkeys(int(p) for p in characteristics))
    if all_fields:
        t0 = time.perf_counter()
        try:
            GZ = gb.buchberger_integer(system.generators(), limits, trace)
        except ResourceLimitExceeded as exc:
            report.limits_hit.append(f"integer: {exc.limit}")
            report.notes.append(f"integer engine stopped: {exc}")
            GZ = None
        report.timings["integer"] = time.perf_counter() - t0
        if GZ is not None:
            report.stats.merge(GZ.stats)
            report.division_record = GZ.division_record
            report.candidate_characteristics = gb.candidate_characteristics(GZ)
            report.integer_witness = _integer_witness(GZ, system)
            chars = list(dict.fromkeys([0] + report.candidate_characteristics + chars))
    for p in chars:
        t0 = time.perf_counter()
        v = decide_over_char(prep, p, exact, order=order, limits=limits, system=system, stats=report.stats)
        report.timings[f"char {p}"] = time.perf_counter() - t0
        report.characteristics[p] = v
        if v.status == RESOURCE_EXCEEDED:
            report.limits_hit.append(f"char {p}: {v.reason}")
    if all_fields and report.integer_witness is not None:
        if all(v.non_representable for v in report.characteristics.values()):
            report.all_fields_verdict = Verdict(
                NON_REPRESENTABLE,
                "integer",
                report.integer_witness,
                "not representable over any field",
            )
        else:
            allowed = report.finite_characteristics
            if allowed:
                report.notes.append(
                    "representation, if any, has characteristic in {" + ", ".join(map(str, allowed)) + "}"
                )
    report.timings["total"] = time.perf_counter() - t_start
    return report


def decide_all_fields(M: Matroid, **kwargs) -> DecisionReport:
    """Integer-coefficient decision over every field; char 0 is always tested."""
    kwargs.setdefault("characteristics", (0,))
    return decide(M, all_fields=True, **kwargs)


def _integer_witness(GZ: GroebnerBasis, system: SaturatedSystem) -> Witness | None:
    if gb.contains_one(GZ):
        return Witness("unit", "integer")
    consts = [c for c in GZ.integer_constants() if c]
    if consts:
        return Witness("constant", "integer", None, str(min(abs(c) for c in consts)))
    for f, tag in system.basis_eqs:
        if gb.normal_form(f, GZ).is_zero:
            return Witness("basis", "integer", tag, str(f))
    return None


# -- finite-field oracles ---------------------------------------------------


def _field(q) -> FiniteField:
    return q if isinstance(q, FiniteField) else finite_field(q)


def _cols(matrix, cols):
    return [[row[j - 1] for j in cols] for row in matrix]


def verify_representation(matrix: Sequence[Sequence[int]], M: Matroid, q) -> tuple[bool, list[str]]:
    """Check that the columns of ``matrix`` over GF(q) realize ``M``.

    Every subset of at most ``r`` columns must be independent exactly when it
    contains no circuit.
    """
    F = _field(q)
    if len(matrix) != M.r or any(len(row) != M.n for row in matrix):
        raise ValueError(f"matrix must be {M.r} x {M.n}")
    problems = []
    for k in range(1, M.r + 1):
        for X in itertools.combinations(range(1, M.n + 1), k):
            indep_m = not M.is_dependent(X)
            indep_v = F.rank(_cols(matrix, X)) == k
            if indep_m != indep_v:
                want = "independent" if indep_m else "dependent"
                problems.append(f"{format_set(X)} should be {want}")
    return not problems, problems


def matroid_of_matrix(matrix: Sequence[Sequence[int]], q) -> Matroid:
    """Matroid of the columns; circuits are the minimal dependent sets of size <= rank."""
    F = _field(q)
    r, n = len(matrix), len(matrix[0])
    if F.rank(matrix) != r:
        raise MatroidError("matrix does not have full row rank")
    circuits: list[frozenset] = []
    for k in range(1, r + 1):
        for X in itertools.combinations(range(1, n + 1), k):
            s = frozenset(X)
            if any(c <= s for c in circuits):
                continue
            if F.rank(_cols(matrix, X)) < k:
                circuits.append(s)
    return Matroid(n, r, tuple(circuits))


def brute_force_search(M: Matroid, q, limit: int = 10**6) -> list[list[int]] | None:
    """Exhaustive search for a GF(q) representation with the normalized pattern.

    Returns the first matrix (columns in ``M``'s element order) whose
    variables take nonzero values and which passes
    :func:`verify_representation`, or ``None``.  Every representation can be
    scaled into the pattern, so ``None`` means none exists over GF(q).
    """
    if not is_simple(M):
        raise MatroidError("brute-force search expects a simple matroid")
    F = _field(q)
    order = find_initial_basis(M)
    Mr = M.relabel(order)
    S = build_pattern(Mr, order)
    nv = len(S.vars)
    if F.q**nv > limit:
        raise ResourceLimitExceeded("brute_force", F.q**nv)
    grid = [[None if isinstance(e, Var) else e for e in row] for row in S.entries]
    by_col: dict[int, list[Var]] = {}
    for v in S.vars:
        by_col.setdefault(v.col, []).append(v)
    r, n = S.r, S.n

    def column_ok(j: int) -> bool:
        # every subset of columns 1..j that contains j must match M
        for k in range(1, r + 1):
            for rest in itertools.combinations(range(1, j), k - 1):
                X = rest + (j,)
                indep_m = not Mr.is_dependent(X)
                indep_v = F.rank([[grid[i][c - 1] for c in X] for i in range(r)]) == k
                if indep_m != indep_v:
                    return False
        return True

    def search(j: int) -> bool:
        if j > n:
            return True
        vs = by_col.get(j, [])
        for values in itertools.product(F.nonzero(), repeat=len(vs)):
            for v, a in zip(vs, values):
                grid[v.row - 1][v.col - 1] = a
            if column_ok(j) and search(j + 1):
                return True
        for v in vs:
            grid[v.row - 1][v.col - 1] = None
        return False

    for j in range(1, r + 1):
        if not column_ok(j):
            return None
    if not search(r + 1):
        return None
    out = [[0] * n for _ in range(r)]
    for pos, label in enumerate(S.labels):
        for i in range(r):
            out[i][label - 1] = grid[i][pos]
    ok, _ = verify_representation(out, M, F)
    assert ok, "brute-force search produced an invalid representation"
    return out
