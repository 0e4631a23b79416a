"""Parameter sweeps over (function, strategy, n) and their file outputs."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from .approximant import build, experiment_grid, sup_error
from .bounds import bound_report
from .errors import DomainError, HarnessIOError
from .function_space import TransformedFunction, get_builtin
from .properties import run_property_suite
from .selection import STRATEGIES, Strategy, select

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "function", "strategy", "n", "h", "M", "N", "evals", "observed_sup_error", "argmax_x",
    "discretization_bound", "truncation_bound", "split_bound", "headline_bound", "constant_C",
    "certified",
)

# observed errors below this are double-precision noise; bound checks skip them
WAIVER = 1e-13


@dataclass
class SweepConfig:
    function_label: str
    strategies: Sequence[Strategy] = field(default_factory=lambda: list(STRATEGIES.values()))
    n_min: int = 2
    n_max: int = 40
    grid_count: int = 20001
    grid_half_range: float = 4.0
    output_path: Optional[str] = None

    def validate(self):
        if not self.strategies:
            raise DomainError("at least one strategy is required")
        if not 1 <= self.n_min <= self.n_max:
            raise DomainError(f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if self.grid_count < 3 or self.grid_count % 2 == 0:
            raise DomainError(f"grid count must be odd and >= 3, got {self.grid_count}")
        if not self.grid_half_range > 0:
            raise DomainError(f"grid range must be positive, got {self.grid_half_range}")


@dataclass(frozen=True)
class ExperimentRow:
    function_label: str
    strategy_label: str
    n: int
    h: float
    M: int
    N: int
    evals: int
    observed_sup_error: float
    argmax_x: float
    discretization_bound: float
    truncation_bound: float
    split_bound: float
    headline_bound: float
    constant_C: float
    certified: bool
    warning: Optional[str] = None

    def dominated(self, bound: Optional[float] = None) -> bool:
        """True if the observed error is within ``bound`` (headline by default) or waived."""
        bound = self.headline_bound if bound is None else bound
        return bound < WAIVER or self.observed_sup_error <= bound


def run_row(F: TransformedFunction, strategy: Strategy, n: int, points: np.ndarray) -> ExperimentRow:
    c = F.certificate
    grid = select(c, n, strategy)
    approx = build(F, grid)
    err, at = sup_error(approx, F, points)
    report = bound_report(c, grid)
    if grid.warning:
        logger.warning("%s/%s n=%d: %s", F.label, strategy.label, n, grid.warning)
    return ExperimentRow(
        function_label=F.label,
        strategy_label=strategy.label,
        n=n,
        h=grid.h,
        M=grid.M,
        N=grid.N,
        evals=grid.evals,
        observed_sup_error=err,
        argmax_x=at,
        discretization_bound=report.discretization_bound,
        truncation_bound=report.truncation_bound,
        split_bound=report.split_bound,
        headline_bound=report.headline_bound,
        constant_C=report.constant_C,
        certified=report.certified,
        warning=grid.warning,
    )


def run_sweep(cfg: SweepConfig, workers: int = 1) -> List[ExperimentRow]:
    """One row per (strategy, n), strategies in the given order and n ascending."""
    cfg.validate()
    F = get_builtin(cfg.function_label)
    points = experiment_grid(cfg.grid_count, cfg.grid_half_range)
    jobs = [(s, n) for s in cfg.strategies for n in range(cfg.n_min, cfg.n_max + 1)]
    if workers <= 1:
        return [run_row(F, s, n, points) for s, n in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: run_row(F, job[0], job[1], points), jobs))


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def format_csv_line(values) -> str:
    return ",".join(_fmt(v) for v in values)


def row_values(row: ExperimentRow) -> tuple:
    return (
        row.function_label, row.strategy_label, row.n, row.h, row.M, row.N, row.evals,
        row.observed_sup_error, row.argmax_x, row.discretization_bound, row.truncation_bound,
        row.split_bound, row.headline_bound, row.constant_C, row.certified,
    )


def emit_csv(rows: Sequence[ExperimentRow], path) -> None:
    if not rows:
        raise DomainError("no rows to write")
    lines = [",".join(CSV_COLUMNS)] + [format_csv_line(row_values(r)) for r in rows]
    try:
        with open(path, "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise HarnessIOError(f"cannot write CSV to {path}: {exc}") from exc


def read_csv(path) -> List[ExperimentRow]:
    """Parse a file written by :func:`emit_csv` back into rows."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise HarnessIOError(f"cannot read CSV from {path}: {exc}") from exc
    header, *body = text.splitlines()
    if tuple(header.split(",")) != CSV_COLUMNS:
        raise DomainError(f"{path}: unexpected header {header!r}")
    rows = []
    for line in body:
        f = line.split(",")
        rows.append(ExperimentRow(
            f[0], f[1], int(f[2]), float(f[3]), int(f[4]), int(f[5]), int(f[6]),
            *(float(v) for v in f[7:14]), f[14] == "true",
        ))
    return rows


def emit_plot_data(rows: Sequence[ExperimentRow], directory) -> List[Path]:
    """Write (evals, observed) and (evals, headline bound) series per function and strategy."""
    if not rows:
        raise DomainError("no rows to write")
    directory = Path(directory)
    groups = {}
    for r in rows:
        groups.setdefault((r.function_label, r.strategy_label), []).append(r)
    written = []
    try:
        directory.mkdir(parents=True, exist_ok=True)
        for (fn, strat), group in groups.items():
            for suffix, attr in (("observed", "observed_sup_error"), ("bound", "headline_bound")):
                path = directory / f"{fn}_{strat}_{suffix}.dat"
                path.write_text("".join(f"{r.evals} {getattr(r, attr):.17g}\n" for r in group))
                written.append(path)
    except OSError as exc:
        raise HarnessIOError(f"cannot write plot data to {directory}: {exc}") from exc
    return written


@dataclass(frozen=True)
class PropsReport:
    samples: int
    seed: int
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def text(self) -> str:
        lines = [f"property checks: samples={self.samples} seed={self.seed}"]
        for r in self.results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
        lines.append("all properties hold" if self.passed else "PROPERTY FAILURE")
        return "\n".join(lines) + "\n"


def check_props(samples: int, seed: int) -> PropsReport:
    return PropsReport(samples, seed, tuple(run_property_suite(samples, seed)))
