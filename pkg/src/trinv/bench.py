"""Method comparison reports and operation-count/timing benchmarks.

``run_compare`` runs a set of inversion methods on one matrix, collecting a
:class:`~trinv.core.ResidualReport` per method (failures become a status, not
an abort) plus pairwise max-deviation agreement; ``compare_to_json`` /
``compare_to_text`` render it.  ``run_bench`` times methods over a size
family and reports instrumented multiply/divide counts; rows go to CSV.
"""

import csv
import json
import re
import time
from dataclasses import dataclass, field

import numpy as np

from .classic import (
    invert_lewis_block_counted,
    invert_lewis_counted,
    invert_naive_counted,
    invert_two_way_counted,
)
from .core import EPS, DenseMatrix, ResidualReport, TridiagonalMatrix, residual_report
from .errors import TridiagonalError
from .generators import generate, parse_generator
from .oracle import dense_invert_gepp
from .ratio import invert_ratio_basic_counted, invert_ratio_extended_counted

__all__ = [
    "METHOD_NAMES",
    "MethodResult",
    "CompareReport",
    "invert_with",
    "run_compare",
    "compare_to_json",
    "compare_to_text",
    "run_bench",
    "write_bench_csv",
]


def _gepp_counted(A):
    # LAPACK does the work; no instrumented count is available.
    return dense_invert_gepp(A), None


_RUNNERS = {
    "naive": invert_naive_counted,
    "two-way": lambda A: invert_two_way_counted(A, fast=False),
    "two-way-fast": lambda A: invert_two_way_counted(A, fast=True),
    "lewis": invert_lewis_counted,
    "lewis-block": invert_lewis_block_counted,
    "ratio": invert_ratio_basic_counted,
    "ratio-ext": invert_ratio_extended_counted,
    "gepp": _gepp_counted,
}

METHOD_NAMES = tuple(_RUNNERS)


def invert_with(name: str, A: TridiagonalMatrix):
    """Run one method by name; returns ``(DenseMatrix, ops)``, ops None for gepp."""
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise ValueError(
            f"unknown method {name!r}; expected one of {', '.join(METHOD_NAMES)}"
        ) from None
    return runner(A)


@dataclass
class MethodResult:
    """One method's outcome on one matrix."""

    name: str
    status: str
    residual: ResidualReport = None
    ops: int = None
    time_ns: int = 0
    message: str = ""
    inverse: DenseMatrix = None


@dataclass
class CompareReport:
    """All requested methods on one matrix, plus pairwise agreement.

    ``agreement`` maps ``(name_a, name_b)`` (in request order, a before b) to
    the max entrywise deviation between the two computed inverses; only
    successful pairs appear.
    """

    matrix: str
    n: int
    results: list = field(default_factory=list)
    agreement: dict = field(default_factory=dict)

    def result(self, name: str) -> MethodResult:
        for res in self.results:
            if res.name == name:
                return res
        raise KeyError(name)


def run_compare(A: TridiagonalMatrix, methods, descriptor: str = "") -> CompareReport:
    """Run every requested method on A; failures become statuses.

    Unknown method names raise ValueError before anything runs.  Duplicate
    names are collapsed so each method appears exactly once.
    """
    ordered = list(dict.fromkeys(methods))
    unknown = [m for m in ordered if m not in _RUNNERS]
    if unknown:
        raise ValueError(
            f"unknown method name(s) {', '.join(map(repr, unknown))}; "
            f"expected a subset of {', '.join(METHOD_NAMES)}"
        )
    report = CompareReport(matrix=descriptor, n=A.n)
    for name in ordered:
        start = time.perf_counter_ns()
        try:
            X, ops = invert_with(name, A)
        except TridiagonalError as exc:
            elapsed = time.perf_counter_ns() - start
            report.results.append(
                MethodResult(name=name, status=exc.status, time_ns=elapsed, message=str(exc))
            )
            continue
        elapsed = time.perf_counter_ns() - start
        res = residual_report(A, X, method=name)
        report.results.append(
            MethodResult(
                name=name,
                status="success",
                residual=res,
                ops=None if ops is None else int(ops),
                time_ns=elapsed,
                inverse=X,
            )
        )
    succeeded = [r for r in report.results if r.status == "success"]
    for i, ra in enumerate(succeeded):
        for rb in succeeded[i + 1 :]:
            dev = float(np.max(np.abs(ra.inverse.entries - rb.inverse.entries)))
            report.agreement[(ra.name, rb.name)] = dev
    return report


def _finite_or_none(value):
    if value is None:
        return None
    value = float(value)
    return value if np.isfinite(value) else None


def compare_to_json(report: CompareReport) -> str:
    """Stable JSON rendering: non-finite numbers become null."""
    methods = []
    for res in report.results:
        if res.residual is not None:
            residuals = {
                "right": {k: _finite_or_none(v) for k, v in res.residual.right_residual.items()},
                "left": {k: _finite_or_none(v) for k, v in res.residual.left_residual.items()},
            }
            cond1 = _finite_or_none(res.residual.cond_1)
        else:
            residuals = None
            cond1 = None
        methods.append(
            {
                "name": res.name,
                "status": res.status,
                "residuals": residuals,
                "cond1": cond1,
                "ops": None if res.ops is None else int(res.ops),
                "time_ns": int(res.time_ns),
            }
        )
    return json.dumps({"matrix": report.matrix, "n": report.n, "methods": methods}, indent=2)


def compare_to_text(report: CompareReport) -> str:
    """Human-oriented rendering of a compare report."""
    lines = [
        f"matrix: {report.matrix or '(unnamed)'}   n={report.n}   eps={EPS:.3e}",
        "",
        f"{'method':<14}{'status':<16}{'right 1-norm':>14}{'left 1-norm':>14}"
        f"{'right 2-est':>14}{'left 2-est':>14}{'cond1':>12}{'ops':>12}{'time':>12}",
    ]
    for res in report.results:
        if res.residual is not None:
            right = res.residual.right_residual
            left = res.residual.left_residual
            cells = [
                f"{right['one']:>14.3e}",
                f"{left['one']:>14.3e}",
                f"{right['two_estimate']:>14.3e}",
                f"{left['two_estimate']:>14.3e}",
                f"{res.residual.cond_1:>12.3e}",
            ]
        else:
            cells = [f"{'-':>14}", f"{'-':>14}", f"{'-':>14}", f"{'-':>14}", f"{'-':>12}"]
        ops = "-" if res.ops is None else str(res.ops)
        lines.append(
            f"{res.name:<14}{res.status:<16}" + "".join(cells)
            + f"{ops:>12}{res.time_ns / 1e6:>10.2f}ms"
        )
        if res.message:
            lines.append(f"{'':<14}  {res.message}")
    if report.agreement:
        lines.append("")
        lines.append("pairwise max deviation:")
        for (a, b), dev in report.agreement.items():
            lines.append(f"  {a} vs {b}: {dev:.6e}")
    return "\n".join(lines) + "\n"


def _family_matrix(family: str, n: int) -> TridiagonalMatrix:
    concrete = re.sub(r"\bN\b", str(n), family)
    return generate(parse_generator(concrete))


def run_bench(family: str, sizes, repetitions: int = 3, methods=None) -> list:
    """Time and count methods across sizes of one generator family.

    ``family`` is a generator spec with the literal ``N`` as the order, e.g.
    ``toeplitz(N, 1, 2016, 1)``.  Returns one row (dict) per (method, size)
    in deterministic order; failures carry their status and empty counts.
    ``gepp`` is excluded by default (its dense factorization would dwarf the
    O(n^2) methods at benchmark sizes) but may be requested explicitly.
    """
    if methods is None:
        methods = [m for m in METHOD_NAMES if m != "gepp"]
    if not re.search(r"\bN\b", family):
        raise ValueError(
            f"bench family must use N for the matrix order, e.g. 'toeplitz(N, 1, 2016, 1)'; got {family!r}"
        )
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise ValueError(f"sizes must be ascending, got {sizes}")
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    rows = []
    for n in sizes:
        A = _family_matrix(family, n)
        for name in methods:
            times = []
            ops = None
            status = "success"
            message = ""
            for _ in range(repetitions):
                start = time.perf_counter_ns()
                try:
                    _, ops = invert_with(name, A)
                except TridiagonalError as exc:
                    status = exc.status
                    message = str(exc)
                    ops = None
                    times.append(time.perf_counter_ns() - start)
                    break
                times.append(time.perf_counter_ns() - start)
            rows.append(
                {
                    "method": name,
                    "n": n,
                    "status": status,
                    "ops": ops,
                    "reps": len(times),
                    "time_ns_best": min(times),
                    "time_ns_mean": int(sum(times) / len(times)),
                    "message": message,
                }
            )
    return rows


def write_bench_csv(rows, path) -> None:
    """Write bench rows as CSV with a fixed column order."""
    columns = ["method", "n", "status", "ops", "reps", "time_ns_best", "time_ns_mean"]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row[c] if row[c] is not None else "" for c in columns])
