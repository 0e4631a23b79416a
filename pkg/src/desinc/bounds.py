"""Computable error bounds for the truncated DE-Sinc approximation.

Every strategy has a headline bound ``C * exp(-E)`` with an explicit
constant C and exponent E depending on n. Underneath it sits the sharper
split into the discretization error (infinite cardinal series vs. F) and
the truncation error (dropped tails of the series); the headline is obtained
by majorizing that sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .function_space import FunctionClass
from .kernels import arsinh, p_func, q_func
from .selection import DEFAULT_Q, QChoice, SincGrid, Strategy, select

__all__ = [
    "BoundReport",
    "strip_factor",
    "bound_discretization",
    "bound_truncation",
    "bound_tails",
    "constant_exist",
    "constant_new1",
    "constant_new2",
    "constant_for",
    "rate_exponent",
    "bound_report",
]


def strip_factor(c: FunctionClass) -> float:
    """cos^(alpha+beta)((pi/2) sin d) * cos d.

    For d near pi/2 the cosine argument approaches pi/2 and the direct
    evaluation cancels. Using cos((pi/2) s) = sin((pi/2)(1 - s)) with
    1 - sin d = cos^2 d / (1 + sin d) keeps full relative accuracy.
    """
    s, co = math.sin(c.d), math.cos(c.d)
    gap = co * co / (1.0 + s)
    return math.sin(0.5 * math.pi * gap) ** (c.alpha + c.beta) * co


def bound_discretization(c: FunctionClass, h: float) -> float:
    """Bound on sup |F(x) - sum_k F(kh) sinc((x - kh)/h)| over the full series."""
    if not h > 0:
        raise DomainError(f"h must be positive, got {h!r}")
    a = math.pi * c.d / h
    prefactor = 4.0 * c.L / (math.pi**2 * c.d * c.mu * -math.expm1(-2.0 * a) * strip_factor(c))
    return prefactor * math.exp(-a)


def bound_truncation(c: FunctionClass, n: int, h: float, q: QChoice = DEFAULT_Q) -> float:
    """Bound on the dropped tails when M, N follow the ceiling formulas with this q."""
    if not h > 0:
        raise DomainError(f"h must be positive, got {h!r}")
    if not n > 0:
        raise DomainError(f"n must be positive, got {n!r}")
    qv = q(c.d * n / c.mu)
    return 2.0 * c.R / (math.pi * c.mu * h * math.hypot(1.0, qv)) * math.exp(-math.pi * c.mu * qv)


def bound_tails(c: FunctionClass, h: float, M: int, N: int) -> float:
    """Tail bound valid for arbitrary M, N >= 0.

    Compares each tail sum with an integral of exp(-pi rate sinh x), without
    assuming any particular selection formula. Used for the standard
    strategy, whose truncation numbers are not of the ceiling form.
    """
    if not h > 0:
        raise DomainError(f"h must be positive, got {h!r}")

    def side(rate, k):
        x = k * h
        return c.R / (h * math.pi * rate * math.cosh(x)) * math.exp(-math.pi * rate * math.sinh(x))

    return side(c.alpha, M) + side(c.beta, N)


def _bracket(c: FunctionClass, first: float, second: float) -> float:
    return 2.0 / (math.pi * c.d) * (first + second)


def _strip_term(c: FunctionClass, denominator_gap: float, numerator: float = 1.0) -> float:
    return 2.0 * c.L * numerator / (math.pi * c.mu * denominator_gap * strip_factor(c))


def constant_exist(c: FunctionClass) -> float:
    gap = -math.expm1(-math.pi * c.mu * math.e)
    return _bracket(c, _strip_term(c, gap), c.R * math.exp(math.pi * c.nu / 2.0))


def constant_new1(c: FunctionClass) -> float:
    x = c.d / c.mu
    p, q = p_func(x), q_func(x)
    gap = -math.expm1(-2.0 * math.pi * c.mu * p)
    return _bracket(c, _strip_term(c, gap, math.exp(-math.pi * c.mu * (p - q))), 0.5 * math.pi * c.R)


def constant_new2(c: FunctionClass, q: QChoice = DEFAULT_Q) -> float:
    """The constant for ceiling-based selections; ``q`` enters through q(d/mu)."""
    if q.kind == "identity":
        gap = -math.expm1(-2.0 * math.pi * c.d)
    else:
        gap = -math.expm1(-2.0 * math.pi * c.mu * q(c.d / c.mu))
    return _bracket(c, _strip_term(c, gap), c.R)


def constant_for(c: FunctionClass, strategy: Strategy) -> float:
    if strategy.kind == "standard":
        return constant_exist(c)
    if strategy.kind == "new1":
        return constant_new1(c)
    return constant_new2(c, strategy.q_choice)


def rate_exponent(c: FunctionClass, n: int, strategy: Strategy) -> float:
    """Exponent E of the headline bound C exp(-E)."""
    x = c.d * n / c.mu
    if strategy.kind == "standard":
        return math.pi * c.d * n / math.log(2.0 * x)
    if strategy.kind in ("new1", "new2") or strategy.q.kind == "default":
        return math.pi * c.d * n / arsinh(x)
    if strategy.q.kind == "identity":
        return math.pi * c.d * n
    return math.pi * c.mu * strategy.q(x)


@dataclass(frozen=True)
class BoundReport:
    constant_C: float
    rate_exponent: float
    headline_bound: float
    discretization_bound: float
    truncation_bound: float
    split_bound: float
    strategy: Strategy
    certified: bool = True


def bound_report(c: FunctionClass, grid: SincGrid) -> BoundReport:
    """Evaluate the headline bound and its discretization/truncation split for a grid.

    The grid must be the one its own strategy selects for ``c``; anything
    else is rejected because the bounds only hold for those grids.
    """
    strategy = grid.strategy
    expected = select(c, grid.n, strategy)
    if (expected.h, expected.M, expected.N) != (grid.h, grid.M, grid.N):
        raise DomainError(
            f"grid (h={grid.h!r}, M={grid.M}, N={grid.N}) was not produced by "
            f"strategy {strategy.label!r} for this certificate"
        )
    C = constant_for(c, strategy)
    E = rate_exponent(c, grid.n, strategy)
    disc = bound_discretization(c, grid.h)
    if strategy.kind == "standard":
        trunc = bound_tails(c, grid.h, grid.M, grid.N)
    else:
        trunc = bound_truncation(c, grid.n, grid.h, strategy.q_choice)
    return BoundReport(
        constant_C=C,
        rate_exponent=E,
        headline_bound=C * math.exp(-E),
        discretization_bound=disc,
        truncation_bound=trunc,
        split_bound=disc + trunc,
        strategy=strategy,
        certified=grid.valid,
    )
