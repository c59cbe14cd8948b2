"""Command-line front end.

    matrep check fano.txt --all-fields
    matrep check nonpappus.txt --char 2 --char 3 --all-fields --json
    matrep verify fano.txt fano_f2.mat --field 2
    matrep dump-system fano.txt
    matrep batch corpus/ --out-dir reports/ --jobs 4

Exit status: 0 when the run completed (whatever the verdict), 1 on input
errors, 2 when a resource limit stopped a computation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

from . import __version__
from .decide import (
    NON_REPRESENTABLE,
    DecisionReport,
    brute_force_search,
    build_system,
    decide,
    prepare,
    verify_representation,
)
from .groebner import Limits, ResourceLimitExceeded
from .matroid import Matroid, MatroidError, dual, failures, simplify, validate
from .polyring import finite_field, is_prime
from .sympattern import dump_system

log = logging.getLogger("matrep")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LIMITS = 2

DEFAULT_CHARACTERISTICS = (0, 2, 3, 5)
COMMANDS = ("check", "verify", "dual", "simplify", "dump-system", "batch")


class InputError(ValueError):
    """Malformed input file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where = f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


# -- parsing ----------------------------------------------------------------


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def parse_matroid(text: str, *, force: bool = False, source: str | None = None) -> Matroid:
    """Parse the ``n r`` header plus incidence strings or ``c``-prefixed lists.

    Circuits larger than the rank are dropped with a warning.  Axiom
    violations raise :class:`InputError` unless ``force`` is set.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise InputError("empty matroid file", source=source)
    no, header = lines[0]
    try:
        n, r = (int(tok) for tok in header.split())
    except ValueError:
        raise InputError(f"expected header 'n r', got {header!r}", no, source) from None
    if n < 1 or r < 0 or r > n:
        raise InputError(f"bad header: n={n}, r={r}", no, source)
    circuits = []
    for no, line in lines[1:]:
        if line[0] in "cC":
            try:
                elems = [int(tok) for tok in line[1:].split()]
            except ValueError:
                raise InputError(f"bad element list {line!r}", no, source) from None
            if not elems:
                raise InputError("empty circuit", no, source)
            bad = [e for e in elems if not 1 <= e <= n]
            if bad:
                raise InputError(f"elements {bad} outside 1..{n}", no, source)
            if len(set(elems)) != len(elems):
                raise InputError(f"repeated element in {line!r}", no, source)
            C = frozenset(elems)
        else:
            if len(line) != n or set(line) - {"0", "1"}:
                raise InputError(f"expected a 0/1 string of length {n}, got {line!r}", no, source)
            C = frozenset(i + 1 for i, ch in enumerate(line) if ch == "1")
            if not C:
                raise InputError("empty circuit", no, source)
        if len(C) > r:
            log.warning("%sline %d: circuit %s exceeds the rank %d and is dropped", f"{source}:" if source else "", no, sorted(C), r)
            continue
        circuits.append(C)
    M = Matroid(n, r, tuple(circuits))
    fails = failures(validate(M))
    if fails:
        msg = "; ".join(str(v) for v in fails[:5])
        if not force:
            raise InputError(f"not a matroid: {msg}", source=source)
        log.warning("%saxiom violations ignored: %s", f"{source}: " if source else "", msg)
    return M


def parse_matrix(text: str, *, source: str | None = None) -> tuple[int, list[list[int]]]:
    """Parse a matrix file: header ``r n q`` then ``r`` rows of field entries."""
    lines = list(_content_lines(text))
    if not lines:
        raise InputError("empty matrix file", source=source)
    no, header = lines[0]
    try:
        r, n, q = (int(tok) for tok in header.split())
    except ValueError:
        raise InputError(f"expected header 'r n q', got {header!r}", no, source) from None
    try:
        F = finite_field(q)
    except ValueError as exc:
        raise InputError(str(exc), no, source) from None
    rows = []
    for no, line in lines[1:]:
        toks = line.split()
        if len(toks) != n:
            raise InputError(f"expected {n} entries, got {len(toks)}", no, source)
        try:
            rows.append([F.parse(tok) for tok in toks])
        except ValueError as exc:
            raise InputError(str(exc), no, source) from None
    if len(rows) != r:
        raise InputError(f"expected {r} rows, got {len(rows)}", source=source)
    return q, rows


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


# -- configuration ----------------------------------------------------------


@dataclass(frozen=True)
class RunConfig:
    command: str = "check"
    characteristics: tuple[int, ...] = DEFAULT_CHARACTERISTICS
    all_fields: bool = False
    exact: bool = False
    order: str = "degrevlex"
    limits: Limits = field(default_factory=Limits)
    brute_limit: int = 10**6
    brute_fields: tuple[int, ...] = ()
    output: str = "text"
    trace: bool = False
    force: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        bad = [p for p in self.characteristics if p != 0 and not is_prime(p)]
        if bad:
            raise ValueError(f"characteristics must be 0 or prime: {bad}")
        if self.order not in ("degrevlex", "lex"):
            raise ValueError(f"unknown order {self.order!r}")
        if self.brute_limit <= 0:
            raise ValueError("brute-force limit must be positive")


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"{text} is not positive")
    return v


def _characteristic(text: str) -> int:
    v = int(text)
    if v != 0 and not is_prime(v):
        raise argparse.ArgumentTypeError(f"{text} is neither 0 nor prime")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matrep", description="Decide non-representability of matroids given by circuits.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    decision = argparse.ArgumentParser(add_help=False)
    decision.add_argument("--char", dest="chars", action="append", type=_characteristic, metavar="P",
                          help="characteristic to test (repeatable; default 0 2 3 5)")
    decision.add_argument("--all-fields", action="store_true", help="run the integer engine and test every candidate prime")
    decision.add_argument("--exact", action="store_true", help="add the radical-membership test")
    decision.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex")
    decision.add_argument("--max-basis", type=_positive)
    decision.add_argument("--max-terms", type=_positive)
    decision.add_argument("--max-coeff-bits", type=_positive)
    decision.add_argument("--brute", dest="brute_fields", action="append", type=int, metavar="Q", default=[],
                          help="also search for a representation over GF(Q)")
    decision.add_argument("--brute-limit", type=_positive, default=10**6, help="cap on Q^(number of variables)")
    decision.add_argument("--force", action="store_true", help="continue despite axiom violations")

    check = sub.add_parser("check", parents=[decision], help="decide non-representability")
    check.add_argument("matroid")
    check.add_argument("--json", action="store_true", help="emit the JSON report")
    check.add_argument("-o", "--output", help="write the report to a file")
    check.add_argument("--trace", action="store_true", help="print integer-engine pair trace to stderr")
    check.add_argument("--dump-system", action="store_true", help="print the polynomial system first")
    check.add_argument("--no-timings", action="store_true", help="omit timing fields from JSON")

    verify = sub.add_parser("verify", help="check a matrix against a matroid")
    verify.add_argument("matroid")
    verify.add_argument("matrix")
    verify.add_argument("--field", type=int, help="field size (defaults to the matrix header)")
    verify.add_argument("--force", action="store_true")

    for name, help_ in (("dual", "print the dual matroid"), ("simplify", "print the simplification")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("matroid")
        p.add_argument("--force", action="store_true")

    dump = sub.add_parser("dump-system", help="print the pattern and polynomial system")
    dump.add_argument("matroid")
    dump.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex")
    dump.add_argument("--force", action="store_true")

    batch = sub.add_parser("batch", parents=[decision], help="check many files concurrently")
    batch.add_argument("inputs", nargs="+", help="files or directories (*.txt)")
    batch.add_argument("--out-dir", required=True, help="directory for per-file JSON reports")
    batch.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    base = Limits.from_env()
    overrides = {}
    for attr in ("max_basis", "max_terms", "max_coeff_bits"):
        val = getattr(args, attr, None)
        if val is not None:
            overrides[attr] = val
    return RunConfig(
        command=args.command,
        characteristics=tuple(args.chars) if getattr(args, "chars", None) else DEFAULT_CHARACTERISTICS,
        all_fields=getattr(args, "all_fields", False),
        exact=getattr(args, "exact", False),
        order=getattr(args, "order", "degrevlex"),
        limits=replace(base, **overrides),
        brute_limit=getattr(args, "brute_limit", 10**6),
        brute_fields=tuple(getattr(args, "brute_fields", ()) or ()),
        output="json" if getattr(args, "json", False) else "text",
        trace=getattr(args, "trace", False),
        force=getattr(args, "force", False),
    )


# -- running ----------------------------------------------------------------


def run_check(M: Matroid, config: RunConfig, trace_stream=None) -> DecisionReport:
    trace = None
    if config.trace:
        stream = trace_stream or sys.stderr
        trace = lambda line: print(line, file=stream)  # noqa: E731
    return decide(
        M,
        config.characteristics,
        all_fields=config.all_fields,
        exact=config.exact,
        order=config.order,
        limits=config.limits,
        trace=trace,
    )


def _brute(M: Matroid, config: RunConfig) -> dict:
    out = {}
    if not config.brute_fields:
        return out
    simple = simplify(M)[0]
    for q in config.brute_fields:
        try:
            A = brute_force_search(simple, q, config.brute_limit)
        except ResourceLimitExceeded as exc:
            out[str(q)] = {"status": "limit", "detail": str(exc)}
            continue
        if A is None:
            out[str(q)] = {"status": "none"}
        else:
            F = finite_field(q)
            out[str(q)] = {"status": "found", "matrix": [[F.format(a) for a in row] for row in A]}
    return out


def render_report(report: DecisionReport, brute: dict | None = None) -> str:
    S = report.system.pattern
    M = report.matroid
    lines = [f"matroid: n={M.n} r={M.r}, {len(M.circuits)} circuits"]
    lines += [f"  {t}" for t in report.prepared.transforms]
    lines.append(f"pattern: {len(S.vars)} variables, zeros at {S.zeros()}")
    if report.all_fields:
        cands = report.candidate_characteristics
        lines.append("candidate characteristics: " + ("{" + ", ".join(map(str, cands)) + "}" if cands else "{}"))
    for p, v in sorted(report.characteristics.items()):
        label = "0" if p == 0 else str(p)
        text = v.status
        if v.fast_status is not None and v.fast_status != v.status:
            text += f" (fast: {v.fast_status})"
        if v.witness:
            text += f"  [{v.witness.describe()}]"
        lines.append(f"char {label}: {text}")
    if report.all_fields:
        if report.all_fields_verdict is not None:
            lines.append(f"all fields: NonRepresentableAllFields  [{report.all_fields_verdict.witness.describe()}]")
        else:
            lines.append("all fields: no verdict")
    for note in report.notes:
        if note not in report.prepared.transforms:
            lines.append(f"note: {note}")
    for q, res in (brute or {}).items():
        if res["status"] == "found":
            lines.append(f"GF({q}) representation:")
            lines += ["  " + " ".join(row) for row in res["matrix"]]
        elif res["status"] == "none":
            lines.append(f"GF({q}): no representation")
        else:
            lines.append(f"GF({q}): {res['detail']}")
    lines.append(f"classification: {report.classification}")
    return "\n".join(lines) + "\n"


def _check_file(path: str, config: RunConfig) -> tuple[int, DecisionReport, dict]:
    M = parse_matroid(_read(path), force=config.force, source=path)
    report = run_check(M, config)
    brute = _brute(M, config)
    status = EXIT_LIMITS if report.limits_hit else EXIT_OK
    return status, report, brute


def cmd_check(args, config: RunConfig) -> int:
    M = parse_matroid(_read(args.matroid), force=config.force, source=args.matroid)
    chunks = []
    if args.dump_system:
        prep = prepare(M)
        sy = build_system(prep, config.order)
        chunks.append(dump_system(sy.pattern, sy.circuit_eqs, sy.basis_eqs, sy.saturation))
    report = run_check(M, config)
    brute = _brute(M, config)
    if config.output == "json":
        data = report.to_json(timings=not args.no_timings)
        if brute:
            data["brute_force"] = brute
        chunks.append(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        chunks.append(render_report(report, brute))
    text = "".join(chunks)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_LIMITS if report.limits_hit else EXIT_OK


def cmd_verify(args, config: RunConfig) -> int:
    M = parse_matroid(_read(args.matroid), force=config.force, source=args.matroid)
    q, A = parse_matrix(_read(args.matrix), source=args.matrix)
    if args.field is not None and args.field != q:
        raise InputError(f"matrix header says GF({q}) but --field {args.field} was given", source=args.matrix)
    if len(A) != M.r or len(A[0]) != M.n:
        raise InputError(f"matrix is {len(A)}x{len(A[0])}, matroid needs {M.r}x{M.n}", source=args.matrix)
    ok, problems = verify_representation(A, M, q)
    if ok:
        print("valid representation")
    else:
        print(f"invalid representation ({len(problems)} discrepancies)")
        for msg in problems:
            print(f"  {msg}")
    return EXIT_OK


def cmd_transform(args, config: RunConfig) -> int:
    M = parse_matroid(_read(args.matroid), force=config.force, source=args.matroid)
    if args.command == "dual":
        sys.stdout.write(dual(M).render())
    else:
        S, mapping = simplify(M)
        sys.stdout.write("# kept " + " ".join(map(str, sorted(mapping))) + "\n")
        sys.stdout.write(S.render())
    return EXIT_OK


def cmd_dump(args, config: RunConfig) -> int:
    M = parse_matroid(_read(args.matroid), force=config.force, source=args.matroid)
    sy = build_system(prepare(M), config.order)
    sys.stdout.write(dump_system(sy.pattern, sy.circuit_eqs, sy.basis_eqs, sy.saturation))
    return EXIT_OK


def _collect(inputs: Sequence[str]) -> list[Path]:
    files = []
    for item in inputs:
        p = Path(item)
        if p.is_dir():
            files.extend(sorted(p.glob("*.txt")))
        elif p.exists():
            files.append(p)
        else:
            raise InputError(f"no such file or directory: {item}")
    return files


def _batch_task(path: str, config: RunConfig, out_dir: str) -> dict:
    try:
        status, report, brute = _check_file(path, config)
    except (InputError, MatroidError) as exc:
        return {"file": path, "status": EXIT_INPUT, "classification": "input-error", "error": str(exc)}
    data = report.to_json()
    if brute:
        data["brute_force"] = brute
    out = Path(out_dir) / (Path(path).stem + ".json")
    out.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return {"file": path, "status": status, "classification": report.classification, "report": str(out)}


SUMMARY_ROWS = ("non-representable", "finite-characteristic", "inconclusive", "resource-exceeded", "input-error")


def summarize(results: Sequence[dict]) -> dict[str, int]:
    counts = {k: 0 for k in SUMMARY_ROWS}
    for res in results:
        counts[res["classification"]] += 1
    return counts


def cmd_batch(args, config: RunConfig) -> int:
    files = _collect(args.inputs)
    Path(args.out_dir).mkdir(parents=True, exist_ok=True)
    if args.jobs == 1 or len(files) <= 1:
        results = [_batch_task(str(f), config, args.out_dir) for f in files]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(_batch_task, str(f), config, args.out_dir) for f in files]
            results = [fut.result() for fut in futures]
    width = max([len(r["file"]) for r in results] + [4])
    print(f"{'file'.ljust(width)}  classification")
    for res in results:
        extra = f"  ({res['error']})" if "error" in res else ""
        print(f"{res['file'].ljust(width)}  {res['classification']}{extra}")
    counts = summarize(results)
    print()
    print(f"{'total':<22}{len(results):>5}")
    for key in SUMMARY_ROWS:
        print(f"{key:<22}{counts[key]:>5}")
    (Path(args.out_dir) / "summary.json").write_text(
        json.dumps({"counts": counts, "files": results}, indent=2, sort_keys=True) + "\n"
    )
    codes = {r["status"] for r in results}
    if EXIT_INPUT in codes:
        return EXIT_INPUT
    return EXIT_LIMITS if EXIT_LIMITS in codes else EXIT_OK


HANDLERS = {
    "check": cmd_check,
    "verify": cmd_verify,
    "dual": cmd_transform,
    "simplify": cmd_transform,
    "dump-system": cmd_dump,
    "batch": cmd_batch,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="matrep: %(message)s")
    try:
        config = config_from_args(args)
        return HANDLERS[args.command](args, config)
    except (InputError, MatroidError, ValueError) as exc:
        print(f"matrep: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitExceeded as exc:
        print(f"matrep: {exc}", file=sys.stderr)
        return EXIT_LIMITS


if __name__ == "__main__":
    sys.exit(main())
