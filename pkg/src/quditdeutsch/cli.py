"""Command-line front end.

JSON-first: every command writes a machine-readable document to stdout (or
--output) and, when stderr is a terminal, a one-line human summary to
stderr. Verdicts map to stable exit codes:

    0   constant / constant-parity (and successful bv runs)
    1   balanced / balanced-parity (and any sweep failure)
    2   promise violated (verdict "neither")
    64  usage errors
    65  oracle file schema errors (malformed JSON, unknown/missing fields)
    66  missing or unreadable files
    67  oracle dimension/range errors

JSON documents validate against report_schema.json (shipped alongside this
module); wall_time_ms is the only nondeterministic field.
"""
from __future__ import annotations

import argparse
import importlib.resources
import json
import math
import os
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import classical
from .circuits import (
    BVRecovery,
    ClassificationResult,
    MeasurementBasis,
    OracleMode,
    run_bernstein_vazirani,
    run_deutsch,
    run_parity,
    sample,
)
from .hadamard import apply_hadamard, fwht_inplace, hadamard_matrix
from .oracles import (
    BooleanOracle,
    BVOracle,
    MultiOracle,
    OracleClass,
    OracleDimensionError,
    OracleFormatError,
    ParityClass,
    bv_expand,
    classify_boolean,
    enumerate_balanced,
    load_oracle,
    oracle_to_dict,
    random_oracle,
    random_parity_oracle,
    save_oracle,
)
from .states import QuditState, basis_state, schmidt_analyze, tensor

EXIT_CONSTANT = 0
EXIT_BALANCED = 1
EXIT_PROMISE_VIOLATED = 2
EXIT_USAGE = 64
EXIT_SCHEMA = 65
EXIT_NOINPUT = 66
EXIT_DIMENSION = 67

FULL_DISTRIBUTION_LIMIT = 64
BV_MAX_N = 20
SWEEP_BV_MAX_N = 12
BENCH_MAX_N = 22

_MODES = {m.value: m for m in OracleMode}
_BASES = {b.value: b for b in MeasurementBasis}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def report_schema() -> dict:
    """The published JSON schema for all CLI output documents."""
    text = importlib.resources.files("quditdeutsch").joinpath(
        "report_schema.json").read_text(encoding="utf-8")
    return json.loads(text)


# ---------------------------------------------------------------------------
# Report assembly.
# ---------------------------------------------------------------------------

def _oracle_descriptor(oracle, seed=None) -> dict:
    if isinstance(oracle, BooleanOracle):
        desc = {"kind": "boolean", "d": oracle.dim}
    elif isinstance(oracle, MultiOracle):
        desc = {"kind": "multivalued", "d": oracle.dim, "d_aux": oracle.dim_aux}
    elif isinstance(oracle, BVOracle):
        desc = {"kind": "bv", "d": oracle.dim, "n": oracle.n, "a": oracle.a}
    else:
        raise TypeError(f"not an oracle: {oracle!r}")
    desc["seed"] = seed
    return desc


def _distribution_dict(result: ClassificationResult, full: bool) -> dict:
    dist = result.distribution
    doc = {
        "dim": dist.dim,
        "prob_zero": float(dist.probs[0]),
        "argmax": dist.argmax,
        "prob_argmax": float(dist.probs[dist.argmax]),
        "truncated": False,
    }
    if full or dist.dim <= FULL_DISTRIBUTION_LIMIT:
        doc["probs"] = [float(p) for p in dist.probs]
    else:
        doc["truncated"] = True
    return doc


def _emit(report: dict | None, text: str | None, summary: str | None,
          output: str | None, machine_only: bool) -> None:
    """Write the report (JSON dict or preformatted text) and the stderr summary."""
    if report is not None:
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if text is not None:
        if output:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    if summary and not machine_only and sys.stderr.isatty():
        print(summary, file=sys.stderr)


def _load(path: str):
    try:
        return load_oracle(path)
    except OracleDimensionError as exc:
        raise CliError(EXIT_DIMENSION, f"{path}: {exc}") from exc
    except OracleFormatError as exc:
        raise CliError(EXIT_SCHEMA, f"{path}: {exc}") from exc
    except OSError as exc:
        raise CliError(EXIT_NOINPUT, f"cannot read {path}: {exc}") from exc


_VERDICT_EXIT = {
    OracleClass.CONSTANT: EXIT_CONSTANT,
    OracleClass.BALANCED: EXIT_BALANCED,
    OracleClass.NEITHER: EXIT_PROMISE_VIOLATED,
    ParityClass.CONSTANT_PARITY: EXIT_CONSTANT,
    ParityClass.BALANCED_PARITY: EXIT_BALANCED,
    ParityClass.NEITHER: EXIT_PROMISE_VIOLATED,
}


# ---------------------------------------------------------------------------
# Subcommands.
# ---------------------------------------------------------------------------

def _cmd_classify(args) -> int:
    t0 = time.perf_counter()
    oracle = _load(args.oracle_file)
    mode, basis = _MODES[args.mode], _BASES[args.basis]
    runner_oracle = bv_expand(oracle) if isinstance(oracle, BVOracle) else oracle
    try:
        if isinstance(runner_oracle, MultiOracle):
            result = run_parity(runner_oracle, mode, basis)
        else:
            result = run_deutsch(runner_oracle, mode, basis)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc

    report = {
        "version": 1,
        "command": args.command,
        "oracle": _oracle_descriptor(oracle),
        "mode": mode.value,
        "basis": basis.value,
        "verdict": result.verdict.value,
        "distribution": _distribution_dict(result, args.full_distribution),
        "quantum_queries": result.quantum_queries,
        "wall_time_ms": 0.0,
    }
    if args.compare_classical:
        if isinstance(runner_oracle, MultiOracle):
            transcript = classical.classical_classify(runner_oracle.parity_oracle())
        else:
            transcript = classical.classical_classify(runner_oracle)
        report["classical_queries"] = transcript.count
        report["classical_worst_case"] = runner_oracle.dim // 2 + 1
    if args.shots:
        histogram = sample(result.distribution, args.seed, args.shots)
        report["shots"] = {"count": args.shots, "seed": args.seed,
                           "histogram": {str(k): v for k, v in histogram.items()}}
    report["wall_time_ms"] = (time.perf_counter() - t0) * 1e3

    summary = (f"verdict: {result.verdict.value}  "
               f"prob(0)={report['distribution']['prob_zero']:.6f}  "
               f"quantum_queries={result.quantum_queries}")
    if "classical_queries" in report:
        summary += (f"  classical_queries={report['classical_queries']}"
                    f" (worst case {report['classical_worst_case']})")
    _emit(report, None, summary, args.output, args.json)
    return _VERDICT_EXIT[result.verdict]


def _cmd_bv(args) -> int:
    t0 = time.perf_counter()
    if args.oracle:
        oracle = _load(args.oracle)
        if not isinstance(oracle, BVOracle):
            raise CliError(EXIT_SCHEMA,
                           f"{args.oracle}: bv expects a kind=\"bv\" oracle file")
    else:
        if args.n is None or args.a is None:
            raise CliError(EXIT_USAGE, "bv requires either --oracle or both --n and --a")
        if not 1 <= args.n <= BV_MAX_N:
            raise CliError(EXIT_USAGE, f"--n must lie in [1, {BV_MAX_N}]")
        try:
            oracle = BVOracle(n=args.n, a=args.a)
        except ValueError as exc:
            raise CliError(EXIT_USAGE, str(exc)) from exc
    if oracle.n > BV_MAX_N:
        raise CliError(EXIT_USAGE, f"n = {oracle.n} exceeds the supported maximum {BV_MAX_N}")

    mode = _MODES[args.mode]
    try:
        result = run_bernstein_vazirani(oracle, mode)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc
    recovered = result.verdict.a
    report = {
        "version": 1,
        "command": "bv",
        "oracle": _oracle_descriptor(oracle),
        "mode": mode.value,
        "basis": result.basis.value,
        "recovered": recovered,
        "given": oracle.a,
        "success": recovered == oracle.a,
        "distribution": _distribution_dict(result, args.full_distribution),
        "quantum_queries": result.quantum_queries,
        "wall_time_ms": 0.0,
    }
    if args.compare_classical:
        report["classical_queries"] = classical.classical_bv(oracle).count
        report["classical_worst_case"] = oracle.n
    if args.shots:
        histogram = sample(result.distribution, args.seed, args.shots)
        report["shots"] = {"count": args.shots, "seed": args.seed,
                           "histogram": {str(k): v for k, v in histogram.items()}}
    report["wall_time_ms"] = (time.perf_counter() - t0) * 1e3

    summary = (f"recovered a = {recovered} "
               f"({'ok' if report['success'] else 'MISMATCH'}), "
               f"quantum_queries={result.quantum_queries}")
    _emit(report, None, summary, args.output, args.json)
    return 0 if report["success"] else 1


_GEN_CLASSES = {
    "constant": OracleClass.CONSTANT,
    "balanced": OracleClass.BALANCED,
    "constant-parity": ParityClass.CONSTANT_PARITY,
    "balanced-parity": ParityClass.BALANCED_PARITY,
}


def _cmd_gen(args) -> int:
    t0 = time.perf_counter()
    cls = _GEN_CLASSES[args.oracle_class]
    try:
        if isinstance(cls, OracleClass):
            if args.d_aux is not None:
                raise CliError(EXIT_USAGE, "--d-aux applies to parity classes only")
            oracle = random_oracle(args.d, cls, args.seed)
        else:
            oracle = random_parity_oracle(args.d, args.d_aux or args.d, cls, args.seed)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc

    if args.output:
        save_oracle(oracle, args.output)
        report = {
            "version": 1,
            "command": "gen",
            "class": args.oracle_class,
            "oracle": _oracle_descriptor(oracle, seed=args.seed),
            "output_path": args.output,
            "wall_time_ms": (time.perf_counter() - t0) * 1e3,
        }
        _emit(report, None, f"wrote {args.output}", None, args.json)
    else:
        # No destination: the oracle document itself is the output.
        text = json.dumps(oracle_to_dict(oracle), sort_keys=True,
                          separators=(",", ":")) + "\n"
        _emit(None, text, f"generated {args.oracle_class} oracle (d={args.d})",
              None, args.json)
    return 0


def _sweep_case_ids(oracle) -> str:
    return "".join(str(int(v)) for v in oracle.values)


def _cmd_sweep(args) -> int:
    t0 = time.perf_counter()
    workers = args.workers or os.cpu_count() or 1
    params = {"d": args.d, "n": args.n, "budget": args.budget,
              "mode": args.mode, "workers": workers}
    failures: list[str] = []
    extra: dict = {}

    if args.suite == "deutsch-exhaustive":
        if args.d is None:
            raise CliError(EXIT_USAGE, "deutsch-exhaustive requires --d")
        try:
            tables = ([BooleanOracle(args.d, np.zeros(args.d, dtype=np.int64)),
                       BooleanOracle(args.d, np.ones(args.d, dtype=np.int64))]
                      + enumerate_balanced(args.d))
        except ValueError as exc:
            raise CliError(EXIT_USAGE, str(exc)) from exc
        mode = _MODES[args.mode]

        def check(oracle: BooleanOracle) -> str | None:
            result = run_deutsch(oracle, mode)
            expected = classify_boolean(oracle)
            ok = result.verdict is expected and result.quantum_queries == 1
            return None if ok else _sweep_case_ids(oracle)

        results = _pool_map(check, tables, workers)
        cases = len(tables)
        failures = [r for r in results if r is not None]

    elif args.suite == "bv-exhaustive":
        if args.n is None:
            raise CliError(EXIT_USAGE, "bv-exhaustive requires --n")
        if not 1 <= args.n <= SWEEP_BV_MAX_N:
            raise CliError(EXIT_USAGE, f"--n must lie in [1, {SWEEP_BV_MAX_N}] for sweeps")
        mode = _MODES[args.mode]

        def check_a(a: int) -> str | None:
            result = run_bernstein_vazirani(BVOracle(args.n, a), mode)
            dist = result.distribution
            ok = (result.verdict == BVRecovery(a)
                  and result.quantum_queries == 1
                  and float(dist.probs[a]) > 1 - 1e-9)
            return None if ok else f"a={a}"

        results = _pool_map(check_a, range(1 << args.n), workers)
        cases = 1 << args.n
        failures = [r for r in results if r is not None]

    elif args.suite == "adversary":
        if args.d is None:
            raise CliError(EXIT_USAGE, "adversary requires --d")
        budget = args.budget if args.budget is not None else args.d // 2
        params["budget"] = budget
        try:
            report_adv = classical.adversary_search(args.d, budget)
        except ValueError as exc:
            raise CliError(EXIT_USAGE, str(exc)) from exc
        cases = 1
        # The certified threshold: distinguishable exactly above d/2.
        ok = report_adv.distinguishable == (budget >= args.d // 2 + 1)
        if not ok:
            failures = [f"d={args.d} budget={budget}"]
        extra["distinguishable"] = report_adv.distinguishable
        extra["witness"] = None
        if report_adv.witness is not None:
            const_o, bal_o = report_adv.witness
            extra["witness"] = {"constant": [int(v) for v in const_o.values],
                                "balanced": [int(v) for v in bal_o.values]}
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(EXIT_USAGE, f"unknown suite {args.suite!r}")

    report = {
        "version": 1,
        "command": "sweep",
        "suite": args.suite,
        "params": params,
        "cases": cases,
        "passed": cases - len(failures),
        "failed": len(failures),
        "failures": failures[:20],
        **extra,
        "wall_time_ms": (time.perf_counter() - t0) * 1e3,
    }
    summary = f"{args.suite}: {report['passed']}/{cases} passed"
    _emit(report, None, summary, args.output, args.json)
    return 0 if not failures else 1


def _pool_map(fn, items, workers: int) -> list:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _parse_n_range(text: str) -> tuple[int, int]:
    try:
        lo_s, _, hi_s = text.partition(":")
        lo, hi = int(lo_s), int(hi_s if hi_s else lo_s)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, f"--n-range expects MIN:MAX, got {text!r}") from exc
    if not 1 <= lo <= hi <= BENCH_MAX_N:
        raise CliError(EXIT_USAGE,
                       f"--n-range must satisfy 1 <= MIN <= MAX <= {BENCH_MAX_N}")
    return lo, hi


def _cmd_bench(args) -> int:
    t0 = time.perf_counter()
    lo, hi = _parse_n_range(args.n_range)
    if args.repetitions < 1:
        raise CliError(EXIT_USAGE, "--repetitions must be >= 1")
    rows = []
    for n in range(lo, hi + 1):
        d = 1 << n
        a = (0x5DEECE66D ^ d) % d  # arbitrary fixed hidden string per n
        transform_times, pipeline_times = [], []
        for _ in range(args.repetitions):
            buf = np.zeros(d)
            buf[0] = 1.0
            t = time.perf_counter()
            fwht_inplace(buf)
            transform_times.append((time.perf_counter() - t) * 1e3)
            t = time.perf_counter()
            run_bernstein_vazirani(BVOracle(n, a), OracleMode.PHASE_ONLY)
            pipeline_times.append((time.perf_counter() - t) * 1e3)
        rows.append({
            "n": n,
            "d": d,
            "transform_ms": statistics.median(transform_times),
            "pipeline_ms": statistics.median(pipeline_times),
            "single_sample": args.repetitions == 1,
        })

    if args.json:
        report = {
            "version": 1,
            "command": "bench",
            "repetitions": args.repetitions,
            "rows": rows,
            "wall_time_ms": (time.perf_counter() - t0) * 1e3,
        }
        _emit(report, None, f"benchmarked n={lo}..{hi}", args.output, True)
    else:
        lines = ["n,d,transform_ms,pipeline_ms,single_sample"]
        lines += [f"{r['n']},{r['d']},{r['transform_ms']:.6f},"
                  f"{r['pipeline_ms']:.6f},{str(r['single_sample']).lower()}"
                  for r in rows]
        _emit(None, "\n".join(lines) + "\n", f"benchmarked n={lo}..{hi}",
              args.output, args.json)
    return 0


# ---------------------------------------------------------------------------
# selftest: scaled-down in-process verification of the core claims.
# ---------------------------------------------------------------------------

def _selftest_checks() -> list[tuple[str, bool]]:
    checks: list[tuple[str, bool]] = []

    def run(name, fn):
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        checks.append((name, ok))

    def hadamard_structure():
        h2 = hadamard_matrix(2)
        ok = np.allclose(h2 * math.sqrt(2), [[1, 1], [1, -1]], atol=1e-12)
        for d in (4, 8, 16):
            h = hadamard_matrix(d)
            ok &= np.allclose(h @ h, np.eye(d), atol=1e-12)
            kron = np.array([[1.0]])
            for _ in range(int(math.log2(d))):
                kron = np.kron(kron, h2)
            ok &= np.allclose(h, kron, atol=1e-12)
        return ok

    def involution():
        rng = np.random.default_rng(2024)
        for d in (2, 16, 256, 4096):
            amps = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            amps /= np.linalg.norm(amps)
            state = QuditState(d, amps)
            again = apply_hadamard(apply_hadamard(state))
            if not np.allclose(again.amps, state.amps, atol=1e-10):
                return False
        return True

    def deutsch_exhaustive():
        for d in (4, 8):
            tables = ([BooleanOracle(d, np.zeros(d, dtype=np.int64)),
                       BooleanOracle(d, np.ones(d, dtype=np.int64))]
                      + enumerate_balanced(d))
            for oracle in tables:
                for mode in OracleMode:
                    result = run_deutsch(oracle, mode)
                    if result.verdict is not classify_boolean(oracle):
                        return False
                    if result.quantum_queries != 1:
                        return False
        return True

    def no_entanglement():
        from .circuits import apply_controlled_shift
        d = 4
        plus = apply_hadamard(basis_state(d, 0))
        minus = apply_hadamard(basis_state(d, 1))
        start = tensor(plus, minus)
        for bits in range(16):
            table = [(bits >> x) & 1 for x in range(d)]
            after = apply_controlled_shift(start, BooleanOracle(d, table))
            if not schmidt_analyze(after).is_product:
                return False
        return True

    def bv_exhaustive():
        for n in range(1, 7):
            for a in range(1 << n):
                result = run_bernstein_vazirani(BVOracle(n, a))
                if result.verdict != BVRecovery(a):
                    return False
        return True

    def parity_examples():
        constant = MultiOracle(8, 8, [4, 2, 0, 0, 0, 6, 2, 4])
        balanced = MultiOracle(8, 8, [4, 2, 0, 0, 1, 1, 7, 5])
        return (run_parity(constant).verdict is ParityClass.CONSTANT_PARITY
                and run_parity(balanced).verdict is ParityClass.BALANCED_PARITY)

    def classical_bounds():
        for d in (2, 4, 8):
            tables = ([BooleanOracle(d, np.zeros(d, dtype=np.int64)),
                       BooleanOracle(d, np.ones(d, dtype=np.int64))]
                      + enumerate_balanced(d))
            worst = 0
            for oracle in tables:
                transcript = classical.classical_classify(oracle)
                if transcript.verdict is not classify_boolean(oracle):
                    return False
                worst = max(worst, transcript.count)
            if worst != d // 2 + 1:
                return False
            if classical.adversary_search(d, d // 2).distinguishable:
                return False
            if not classical.adversary_search(d, d // 2 + 1).distinguishable:
                return False
        return True

    def mode_equivalence():
        for d in (2, 4, 8):
            for oracle in enumerate_balanced(d)[:16]:
                dists = [run_deutsch(oracle, mode).distribution.probs
                         for mode in OracleMode]
                if not (np.allclose(dists[0], dists[1], atol=1e-12)
                        and np.allclose(dists[0], dists[2], atol=1e-12)):
                    return False
        return True

    run("hadamard-structure", hadamard_structure)
    run("involution", involution)
    run("deutsch-exhaustive-d4-d8", deutsch_exhaustive)
    run("no-entanglement-d4", no_entanglement)
    run("bv-exhaustive-n6", bv_exhaustive)
    run("multivalued-parity-examples", parity_examples)
    run("classical-bounds", classical_bounds)
    run("mode-equivalence", mode_equivalence)
    return checks


def _cmd_selftest(args) -> int:
    t0 = time.perf_counter()
    checks = _selftest_checks()
    for name, ok in checks:
        print(f"{'ok  ' if ok else 'FAIL'} {name}", file=sys.stderr)
    failed = sum(1 for _, ok in checks if not ok)
    report = {
        "version": 1,
        "command": "selftest",
        "checks": [{"name": name, "passed": ok} for name, ok in checks],
        "passed": len(checks) - failed,
        "failed": failed,
        "wall_time_ms": (time.perf_counter() - t0) * 1e3,
    }
    _emit(report, None, None, args.output, args.json)
    return 0 if failed == 0 else 1


# ---------------------------------------------------------------------------
# Argument parsing.
# ---------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser, *, mode_default: str) -> None:
    parser.add_argument("--mode", choices=sorted(_MODES), default=mode_default,
                        help=f"oracle gate form (default: {mode_default})")
    parser.add_argument("--seed", type=int, default=0, metavar="U64",
                        help="seed for sampling (default: 0)")
    parser.add_argument("--shots", type=int, default=0, metavar="N",
                        help="also sample N measurement shots")
    parser.add_argument("--compare-classical", action="store_true",
                        help="include the classical query count")
    parser.add_argument("--full-distribution", action="store_true",
                        help=f"emit full probs even for d > {FULL_DISTRIBUTION_LIMIT}")
    parser.add_argument("--json", action="store_true",
                        help="machine output only (suppress the stderr summary)")
    parser.add_argument("--output", metavar="PATH",
                        help="write the report to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quditdeutsch",
        description="One-query oracle classification on two qudits (d = 2^n): "
                    "constant-vs-balanced, hidden-string recovery, multivalued "
                    "parity, plus classical baselines and verification sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (("classify", "classify the oracle in a file"),
                            ("parity", "alias of classify for multivalued files")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("oracle_file", help="versioned JSON oracle file")
        p.add_argument("--basis", choices=sorted(_BASES), default="computational",
                       help="readout convention (default: computational)")
        _add_common(p, mode_default="full-shift")
        p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("bv", help="recover the hidden string of a linear oracle")
    p.add_argument("--n", type=int, help=f"bit count, 1..{BV_MAX_N}")
    p.add_argument("--a", type=int, help="hidden string in [0, 2^n)")
    p.add_argument("--oracle", metavar="PATH", help="kind=\"bv\" oracle file")
    _add_common(p, mode_default="phase-only")
    p.set_defaults(func=_cmd_bv)

    p = sub.add_parser("gen", help="generate a random oracle file")
    p.add_argument("--d", type=int, required=True, help="domain size (power of two)")
    p.add_argument("--class", dest="oracle_class", required=True,
                   choices=sorted(_GEN_CLASSES),
                   help="oracle class to generate")
    p.add_argument("--d-aux", type=int, default=None,
                   help="value range 2^m for parity classes (default: d)")
    p.add_argument("--seed", type=int, default=0, metavar="U64")
    p.add_argument("--json", action="store_true",
                   help="machine output only (suppress the stderr summary)")
    p.add_argument("--output", metavar="PATH",
                   help="write the oracle file here (default: stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("sweep", help="exhaustive verification sweeps")
    p.add_argument("--suite", required=True,
                   choices=["deutsch-exhaustive", "bv-exhaustive", "adversary"])
    p.add_argument("--d", type=int, help="dimension (deutsch-exhaustive, adversary)")
    p.add_argument("--n", type=int, help="bit count (bv-exhaustive)")
    p.add_argument("--budget", type=int, help="query budget (adversary; default d/2)")
    p.add_argument("--mode", choices=sorted(_MODES), default="full-shift")
    p.add_argument("--workers", type=int, default=None,
                   help="worker pool size (default: CPU count)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("bench", help="time the transform and the full pipeline")
    p.add_argument("--n-range", default="4:12", metavar="MIN:MAX",
                   help=f"range of n = log2(d), max {BENCH_MAX_N} (default 4:12)")
    p.add_argument("--repetitions", type=int, default=3,
                   help="samples per n; the median is reported (default 3)")
    p.add_argument("--json", action="store_true", help="JSON instead of CSV")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("selftest", help="run the built-in verification checks")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return 0 if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"quditdeutsch: error: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"quditdeutsch: error: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except ValueError as exc:
        # flag values that survive parsing but fail domain checks
        print(f"quditdeutsch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
