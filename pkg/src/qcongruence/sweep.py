"""Parameter sweeps over verification cases, and strategy benchmarks."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .congruences import (
    BINOMIAL_LHS,
    FULL_STRATEGY_MAX_N,
    THEOREMS,
    CaseError,
    CongruenceCase,
    VerificationReport,
    check_prime_for,
    congruent,
    modulus_poly,
    run_case,
    straub_rhs,
)
from .primes import is_prime
from .qcombinatorics import gaussian_binomial, gaussian_binomial_mod_stats

REPORT_FIELDS = (
    "theorem",
    "p",
    "k",
    "s",
    "m",
    "power",
    "strategy",
    "passed",
    "residue_degree",
    "lhs_degree",
    "elapsed_ms",
    "note",
)


class ConfigError(ValueError):
    """Sweep configuration rejected before any case ran (exit status 2)."""


def parse_range(text: str) -> tuple[int, int]:
    """``"a..b"`` (inclusive) or a single integer ``"a"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ConfigError(f"bad range {text!r}, expected a..b or an integer") from None
    if lo > hi:
        raise ConfigError(f"empty range {text!r}")
    if lo < 0:
        raise ConfigError(f"negative values not allowed in range {text!r}")
    return lo, hi


@dataclass(frozen=True)
class SweepConfig:
    theorem: str
    p_range: tuple[int, int] = (5, 5)
    k_range: tuple[int, int] = (0, 4)
    s_range: tuple[int, int] = (0, 4)
    m_range: tuple[int, int] = (1, 1)
    power: int | None = None
    strategy: str = "auto"
    jobs: int = 1
    format: str = "text"
    output: str | None = None
    timings: bool = True

    def validate(self) -> None:
        if self.theorem not in THEOREMS:
            raise ConfigError(f"unknown theorem {self.theorem!r}")
        for name in ("p_range", "k_range", "s_range", "m_range"):
            lo, hi = getattr(self, name)
            if lo > hi or lo < 0:
                raise ConfigError(f"{name} {lo}..{hi} is empty or negative")
        if self.strategy not in ("auto", "full", "modular", "both"):
            raise ConfigError(f"unknown strategy {self.strategy!r}")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        if self.format not in ("text", "json", "csv"):
            raise ConfigError(f"unknown format {self.format!r}")
        if self.power is not None:
            if self.theorem == "q_vandermonde":
                raise ConfigError("q_vandermonde is an exact identity, --power does not apply")
            if self.power < 1:
                raise ConfigError("power must be >= 1")
        if self.theorem == "andrews" and self.m_range[0] < 1:
            raise ConfigError("andrews needs m >= 1")


def build_cases(config: SweepConfig) -> tuple[list[CongruenceCase], int, int]:
    """Enumerate the case grid.

    Returns ``(cases, skipped_nonprime, skipped_constraint)``.  Inside a
    range, composites and primes outside the theorem's hypothesis are
    skipped and counted; a single explicitly requested value that fails
    either test raises :class:`ConfigError`.
    """
    config.validate()
    t = config.theorem
    power = -1 if config.power is None else config.power
    ks = range(config.k_range[0], config.k_range[1] + 1)
    ss = range(config.s_range[0], config.s_range[1] + 1)
    ms = range(config.m_range[0], config.m_range[1] + 1)

    if t == "q_vandermonde":
        cases = [
            CongruenceCase(t, 0, k=n, s=h, m=m, power=0)
            for m in ms
            for n in ks
            for h in ss
        ]
        return cases, 0, 0

    lo, hi = config.p_range
    explicit = lo == hi
    primes: list[int] = []
    skipped_nonprime = skipped_constraint = 0
    for p in range(lo, hi + 1):
        if not is_prime(p):
            if explicit:
                raise ConfigError(f"p={p} is not prime")
            skipped_nonprime += 1
            continue
        try:
            check_prime_for(t, p)
        except CaseError as exc:
            if explicit:
                raise ConfigError(str(exc)) from None
            skipped_constraint += 1
            continue
        primes.append(p)

    cases = []
    for p in primes:
        if t in ("straub", "pan", "ljunggren", "q_lucas", "lucas"):
            cases += [CongruenceCase(t, p, k=k, s=s, power=power) for k in ks for s in ss]
        elif t in ("glaisher", "andrews"):
            cases += [CongruenceCase(t, p, m=m, power=power) for m in ms]
        else:
            cases.append(CongruenceCase(t, p, power=power))
    return cases, skipped_nonprime, skipped_constraint


def _run_one(case: CongruenceCase, strategy: str) -> list[VerificationReport]:
    if strategy != "both":
        return [run_case(case, strategy)]
    if case.theorem not in BINOMIAL_LHS:
        return [run_case(case, "full")]
    full = run_case(case, "full")
    modular = run_case(case, "modular")
    if full.residue != modular.residue:
        note = "strategy-mismatch"
        full = replace(full, passed=False, note=note)
        modular = replace(modular, passed=False, note=note)
    return [full, modular]


def _run_chunk(args):
    case, strategy = args
    return _run_one(case, strategy)


@dataclass
class SweepSummary:
    total_cases: int
    passed: int
    failed: int
    skipped_nonprime: int
    skipped_constraint: int
    wall_time_ms: int
    reports: list[VerificationReport] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def to_dict(self) -> dict:
        return {
            "total_cases": self.total_cases,
            "passed": self.passed,
            "failed": self.failed,
            "skipped_nonprime": self.skipped_nonprime,
            "skipped_constraint": self.skipped_constraint,
            "wall_time_ms": self.wall_time_ms,
            "cases": [report_to_dict(r) for r in self.reports],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SweepSummary":
        return cls(
            total_cases=data["total_cases"],
            passed=data["passed"],
            failed=data["failed"],
            skipped_nonprime=data["skipped_nonprime"],
            skipped_constraint=data["skipped_constraint"],
            wall_time_ms=data["wall_time_ms"],
            reports=[report_from_dict(r) for r in data["cases"]],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SweepSummary":
        return cls.from_dict(json.loads(text))


def _deg_out(d):
    return "zero" if d is None else d


def _deg_in(d):
    return None if d == "zero" else int(d)


def report_to_dict(r: VerificationReport) -> dict:
    c = r.case
    return {
        "theorem": c.theorem,
        "p": c.p,
        "k": c.k,
        "s": c.s,
        "m": c.m,
        "power": c.power,
        "strategy": r.strategy,
        "passed": r.passed,
        "residue_degree": _deg_out(r.residue_degree),
        "lhs_degree": _deg_out(r.lhs_degree),
        "elapsed_ms": r.elapsed_ms,
        "note": r.note,
    }


def report_from_dict(d: dict) -> VerificationReport:
    case = CongruenceCase(d["theorem"], d["p"], k=d["k"], s=d["s"], m=d["m"], power=d["power"])
    return VerificationReport(
        case=case,
        passed=d["passed"],
        residue_degree=_deg_in(d["residue_degree"]),
        lhs_degree=_deg_in(d["lhs_degree"]),
        elapsed_ms=d["elapsed_ms"],
        strategy=d["strategy"],
        note=d.get("note", ""),
    )


def run_sweep(config: SweepConfig) -> SweepSummary:
    """Run every case of the grid and return reports in canonical order.

    Raises :class:`ConfigError` for a rejected configuration.
    """
    t0 = time.perf_counter()
    cases, skipped_nonprime, skipped_constraint = build_cases(config)
    work = [(case, config.strategy) for case in cases]
    if config.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_run_chunk, work))
    else:
        chunks = [_run_chunk(w) for w in work]
    reports = sorted((r for chunk in chunks for r in chunk), key=VerificationReport.sort_key)
    if not config.timings:
        reports = [replace(r, elapsed_ms=0) for r in reports]
    passed = sum(r.passed for r in reports)
    wall = int(round((time.perf_counter() - t0) * 1000)) if config.timings else 0
    return SweepSummary(
        total_cases=len(reports),
        passed=passed,
        failed=len(reports) - passed,
        skipped_nonprime=skipped_nonprime,
        skipped_constraint=skipped_constraint,
        wall_time_ms=wall,
        reports=reports,
    )


def format_text(summary: SweepSummary) -> str:
    lines = []
    for r in summary.reports:
        status = "PASS" if r.passed else "FAIL"
        res = "0" if r.residue_degree is None else f"deg {r.residue_degree}"
        lhs = "zero" if r.lhs_degree is None else r.lhs_degree
        line = (
            f"{status} {r.case.label()} [{r.strategy}] residue={res} "
            f"lhs_degree={lhs} {r.elapsed_ms}ms"
        )
        if r.note:
            line += f" ({r.note})"
        lines.append(line)
    lines.append(
        f"{summary.total_cases} cases: {summary.passed} passed, {summary.failed} failed, "
        f"{summary.skipped_nonprime} non-prime skipped, "
        f"{summary.skipped_constraint} outside hypothesis skipped, "
        f"{summary.wall_time_ms}ms"
    )
    return "\n".join(lines) + "\n"


def format_csv(summary: SweepSummary) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in summary.reports:
        writer.writerow(report_to_dict(r))
    return buf.getvalue()


def format_summary(summary: SweepSummary, fmt: str) -> str:
    if fmt == "json":
        return summary.to_json()
    if fmt == "csv":
        return format_csv(summary)
    return format_text(summary)


# ---------------------------------------------------------------------------
# benchmark
# ---------------------------------------------------------------------------


@dataclass
class BenchRow:
    strategy: str
    best_ms: float
    mean_ms: float
    peak_bits: int
    residue_degree: int | None
    note: str = ""


def bench(p: int, k: int, s: int, repetitions: int = 1, full_max_n: int = FULL_STRATEGY_MAX_N):
    """Time full and modular computation of ``binom(kp, sp)_q mod [p]_q**3``.

    Returns ``(rows, straub_ok)``.  The full strategy is skipped (row with
    a note) when ``kp`` exceeds ``full_max_n``.  When both strategies run,
    their residues must agree or ``AssertionError`` is raised.
    """
    if repetitions < 1:
        raise ConfigError("repetitions must be >= 1")
    if not is_prime(p):
        raise ConfigError(f"p={p} is not prime")
    if k < 0 or s < 0:
        raise ConfigError("k and s must be nonnegative")
    M = modulus_poly(p, 3)
    n, lo = k * p, s * p
    rows = []
    residues = {}

    def timed(fn):
        times = []
        for _ in range(repetitions):
            t0 = time.perf_counter()
            out = fn()
            times.append((time.perf_counter() - t0) * 1000)
        return out, min(times), sum(times) / len(times)

    if n <= full_max_n:
        def full():
            poly = gaussian_binomial(n, lo)
            return M.reduce(poly), poly.max_bits()

        (res, bits), best, mean = timed(full)
        residues["full"] = res
        rows.append(BenchRow("full", best, mean, bits, _deg(res)))
    else:
        rows.append(BenchRow("full", 0.0, 0.0, 0, None, note=f"skipped: kp={n} > {full_max_n}"))

    (res, bits), best, mean = timed(lambda: gaussian_binomial_mod_stats(n, lo, M))
    residues["modular"] = res
    rows.append(BenchRow("modular", best, mean, bits, _deg(res)))

    if len(residues) == 2:
        assert residues["full"] == residues["modular"], "strategies disagree"

    straub_ok = None
    if p >= 5:
        straub_ok = congruent(residues["modular"], straub_rhs(p, k, s), M)[0]
    return rows, straub_ok


def _deg(f):
    return None if f.is_zero() else f.degree


def format_bench(p, k, s, rows, straub_ok) -> str:
    out = [f"binom({k * p},{s * p})_q mod [{p}]_q^3", f"{'strategy':<9} {'best ms':>10} {'mean ms':>10} {'peak bits':>10} {'residue deg':>12}"]
    for r in rows:
        if r.note:
            out.append(f"{r.strategy:<9} {r.note}")
            continue
        deg = "zero" if r.residue_degree is None else str(r.residue_degree)
        out.append(f"{r.strategy:<9} {r.best_ms:>10.1f} {r.mean_ms:>10.1f} {r.peak_bits:>10} {deg:>12}")
    if straub_ok is not None:
        out.append(f"straub congruence: {'pass' if straub_ok else 'FAIL'}")
    return "\n".join(out) + "\n"
