"""Truncated Sinc series built from equispaced samples, and error measurement."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .function_space import TransformedFunction
from .kernels import sinpi
from .selection import SincGrid

__all__ = ["SincApproximant", "build", "evaluate", "sup_error", "experiment_grid"]

MAX_TERMS = 10**8
# points x terms evaluated per block; bounds the temporary arrays to ~32 MB
_BLOCK_ELEMENTS = 1 << 22
_SERIES_CUTOFF = 1e-7


@dataclass(frozen=True)
class SincApproximant:
    """sum_{k=-M}^{N} samples[k+M] sinc((x - kh)/h)."""

    h: float
    M: int
    N: int
    samples: np.ndarray

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float)
        if samples.shape != (self.M + self.N + 1,):
            raise DomainError(f"expected {self.M + self.N + 1} samples, got shape {samples.shape}")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(-self.M, self.N + 1) * self.h

    def __call__(self, x):
        return evaluate(self, x)


def build(F: TransformedFunction, grid: SincGrid) -> SincApproximant:
    if not grid.h > 0:
        raise DomainError(f"h must be positive, got {grid.h!r}")
    if grid.M + grid.N + 1 > MAX_TERMS:
        raise DomainError(f"{grid.M + grid.N + 1} terms exceed the limit of {MAX_TERMS}")
    nodes = np.arange(-grid.M, grid.N + 1) * grid.h
    return SincApproximant(grid.h, grid.M, grid.N, F(nodes))


def _summation_orders(K: int, M: int):
    """Per-point term orderings, farthest node first.

    The order only depends on which cell [kh, (k+1)h) a point falls in and on
    which half of the cell, so it is computed once per (cell, half).
    Returns a function mapping scaled positions x/h to rows of an index table.
    """
    ks = np.arange(-M, K - M, dtype=float)
    cells = np.arange(-M - 1, K - M, dtype=float)  # K + 1 cells, clipped outside
    reps = np.concatenate([cells + 0.25, cells + 0.75])
    dist = np.abs(reps[:, None] - ks[None, :])
    table = np.argsort(-dist, axis=1, kind="stable")

    def lookup(y):
        cell = np.clip(np.floor(y), -M - 1, K - M - 1)
        upper = (y - cell) > 0.5
        return table[(cell + M + 1).astype(np.intp) + upper * (K + 1)]

    return lookup


def evaluate(a: SincApproximant, x):
    """Evaluate the truncated Sinc series at x (scalar or array).

    Terms are accumulated farthest node first, so the dominant terms near x
    are added last. This only changes rounding, not the value in exact
    arithmetic.
    """
    scalar = np.ndim(x) == 0
    shape = np.shape(x)
    x = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
    K = a.M + a.N + 1
    ks = np.arange(-a.M, a.N + 1, dtype=float)
    # sin(pi (y - k)) = (-1)^k sin(pi y) with y = x/h: one sine per point.
    # y - k is exact for the nodes next to x (Sterbenz), so numerator and
    # denominator of the dominant terms share the same rounding.
    weights = np.where(ks % 2 == 0, 1.0, -1.0) * a.samples
    order_of = _summation_orders(K, a.M)
    out = np.empty_like(x)
    block = max(1, _BLOCK_ELEMENTS // K)
    for start in range(0, x.size, block):
        xs = x[start:start + block]
        y = xs / a.h
        u = y[:, None] - ks[None, :]
        near = np.abs(u) < _SERIES_CUTOFF
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = weights[None, :] * (sinpi(y) / np.pi)[:, None] / u
        if near.any():
            pu = np.pi * u[near]
            cols = np.nonzero(near)[1]
            terms[near] = a.samples[cols] * (1.0 - pu * pu / 6.0)
        ordered = np.take_along_axis(terms, order_of(y), axis=1)
        # cumsum adds strictly left to right, unlike the pairwise np.sum
        out[start:start + block] = np.cumsum(ordered, axis=1)[:, -1]
    return float(out[0]) if scalar else out.reshape(shape)


def sup_error(a: SincApproximant, F: TransformedFunction, points):
    """Return (max_i |F(x_i) - a(x_i)|, argmax x), ties going to the smallest x."""
    points = np.asarray(points, dtype=float).ravel()
    if points.size == 0:
        raise DomainError("sup_error needs at least one point")
    err = np.abs(F(points) - evaluate(a, points))
    worst = err.max()
    return float(worst), float(points[err == worst].min())


def experiment_grid(count: int = 20001, half_range: float = 4.0) -> np.ndarray:
    """``count`` equispaced points on [-half_range, half_range], endpoints included.

    The defaults give x = 4i/10000, i = -10000..10000.
    """
    if count < 3 or count % 2 == 0:
        raise DomainError(f"count must be odd and >= 3, got {count}")
    if not half_range > 0:
        raise DomainError(f"half_range must be positive, got {half_range!r}")
    m = (count - 1) // 2
    return half_range * np.arange(-m, m + 1) / m
