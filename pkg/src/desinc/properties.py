"""Randomized checks of the monotonicity and inequality facts the bounds rely on.

Each check draws samples from a seeded generator and reports the worst case
it saw, so a failure comes with a concrete counterexample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kernels import arsinh, p_func, q_func, r_func

__all__ = ["PropertyResult", "run_property_suite", "PROPERTY_NAMES"]


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    worst_value: float
    worst_at: float
    detail: str


def _monotone(name, func, xs):
    xs = np.sort(xs)
    values = func(xs)
    if xs.size < 2:
        return PropertyResult(name, True, math.inf, float(xs[0]), "single sample")
    steps = np.diff(values)
    i = int(np.argmin(steps))
    return PropertyResult(
        name,
        bool(steps[i] >= 0),
        float(steps[i]),
        float(xs[i]),
        f"smallest increment {steps[i]:.6e} between x={xs[i]:.9g} and x={xs[i + 1]:.9g}",
    )


def _sinh_inequality(ts):
    # sinh t >= t sinh(2t/pi), with equality only at t = 0
    lhs = np.sinh(ts)
    rhs = ts * np.sinh(2.0 * ts / np.pi)
    with np.errstate(invalid="ignore", divide="ignore"):
        margin = np.where(ts > 0, (lhs - rhs) / lhs, 0.0)
    ok = np.where(ts > 0, lhs > rhs, lhs == rhs)
    i = int(np.argmin(margin))
    return PropertyResult(
        "sinh_inequality",
        bool(ok.all()),
        float(margin[i]),
        float(ts[i]),
        f"smallest relative margin {margin[i]:.6e} at t={ts[i]:.9g}",
    )


def _ratio_bound(xs):
    ratio = arsinh(xs) / arsinh(q_func(xs))
    i = int(np.argmax(ratio))
    return PropertyResult(
        "arsinh_ratio_bound",
        bool(np.all(ratio <= np.pi / 2)),
        float(ratio[i]),
        float(xs[i]),
        f"largest arsinh(x)/arsinh(q(x)) = {ratio[i]:.12f} at x={xs[i]:.9g} (limit pi/2 = {np.pi / 2:.12f})",
    )


PROPERTY_NAMES = ("q_monotone", "p_monotone", "r_monotone", "sinh_inequality", "arsinh_ratio_bound")


def run_property_suite(samples: int, seed: int) -> list:
    """Run the five checks with ``samples`` draws each; deterministic for a seed."""
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    return [
        _monotone("q_monotone", q_func, rng.uniform(0.0, 1e6, samples)),
        _monotone("p_monotone", p_func, rng.uniform(0.0, 1e6, samples)),
        _monotone("r_monotone", r_func, rng.uniform(0.0, 1e6, samples)),
        _sinh_inequality(rng.uniform(0.0, 50.0, samples)),
        _ratio_bound(10.0 ** rng.uniform(-6.0, 6.0, samples)),
    ]
