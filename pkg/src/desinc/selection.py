"""Mesh size and truncation numbers (h, M, N) for the DE-Sinc approximation.

Four strategies are provided:

``standard``
    h = log(2dn/mu)/n with the floor-based truncation numbers; the smaller
    decay rate side keeps n terms.
``new1``
    h = arsinh(q(dn/mu))/n with ceiling-based truncation numbers; still
    max(M, N) = n.
``new2``
    h = arsinh(dn/mu)/n, and both M and N chosen by ceilings so that the
    discretization and truncation error exponents coincide. n is a free
    parameter here and M, N are usually smaller than n.
``general``
    h = d/(mu q(dn/mu)) for a user-chosen nondecreasing q >= 0. With
    q(x) = x this gives h = 1/n (the ``corollary`` strategy).

Here q(x) = x/arsinh(x), see :func:`desinc.kernels.q_func`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError
from .function_space import FunctionClass
from .kernels import arsinh, q_func

__all__ = [
    "QChoice",
    "DEFAULT_Q",
    "IDENTITY_Q",
    "Strategy",
    "STANDARD",
    "NEW1",
    "NEW2",
    "COROLLARY",
    "STRATEGIES",
    "strategy_from_label",
    "SincGrid",
    "select",
    "select_standard",
    "select_new1",
    "select_new2",
    "select_general_q",
]

_TIE_NUDGE = 1e-9
_INT_LIMIT = 2.0**62


@dataclass(frozen=True)
class QChoice:
    """The function q used by the generalized strategy.

    Use :data:`DEFAULT_Q`, :data:`IDENTITY_Q` or :meth:`QChoice.custom`.
    """

    kind: str
    label: str
    func: Callable[[float], float] = field(compare=False, repr=False)

    @classmethod
    def custom(cls, func: Callable[[float], float], label: str) -> "QChoice":
        """Wrap a user function, spot-checking q >= 0 and q' >= 0 on 10^3 points."""
        xs = np.concatenate(([0.0], np.logspace(-6, 6, 999)))
        values = np.array([float(func(x)) for x in xs])
        if not np.all(np.isfinite(values)):
            raise DomainError(f"q {label!r} returned non-finite values")
        if np.any(values < 0):
            raise DomainError(f"q {label!r} is negative somewhere on [0, 1e6]")
        if np.any(np.diff(values) < 0):
            raise DomainError(f"q {label!r} is not nondecreasing on [0, 1e6]")
        return cls("custom", label, func)

    def __call__(self, x: float) -> float:
        return float(self.func(x))


DEFAULT_Q = QChoice("default", "default", q_func)
IDENTITY_Q = QChoice("identity", "identity", float)


@dataclass(frozen=True)
class Strategy:
    """A selection rule: ``standard``, ``new1``, ``new2`` or ``general`` with a q."""

    kind: str
    q: Optional[QChoice] = None

    def __post_init__(self):
        if self.kind not in ("standard", "new1", "new2", "general"):
            raise ValueError(f"unknown strategy kind {self.kind!r}")
        if (self.kind == "general") != (self.q is not None):
            raise ValueError("a q choice goes with the general strategy, and only with it")

    @property
    def label(self) -> str:
        if self.kind != "general":
            return self.kind
        if self.q.kind == "identity":
            return "corollary"
        return f"general[{self.q.label}]"

    @property
    def q_choice(self) -> QChoice:
        """The q governing the truncation bound (q(x) = x/arsinh x unless general)."""
        return self.q if self.q is not None else DEFAULT_Q


STANDARD = Strategy("standard")
NEW1 = Strategy("new1")
NEW2 = Strategy("new2")
COROLLARY = Strategy("general", IDENTITY_Q)
STRATEGIES = {s.label: s for s in (STANDARD, NEW1, NEW2, COROLLARY)}


def strategy_from_label(label: str) -> Strategy:
    try:
        return STRATEGIES[label]
    except KeyError:
        raise DomainError(f"unknown strategy {label!r}; choose from {sorted(STRATEGIES)}") from None


@dataclass(frozen=True)
class SincGrid:
    """Result of a selection: mesh size h and truncation numbers M (left), N (right)."""

    h: float
    M: int
    N: int
    n: int
    strategy: Strategy
    valid: bool = True
    warning: Optional[str] = None

    @property
    def evals(self) -> int:
        """Number of function evaluations M + N + 1."""
        return self.M + self.N + 1

    def nodes(self) -> np.ndarray:
        return np.arange(-self.M, self.N + 1) * self.h


def _ceil(y: float) -> int:
    # values meant to be exact integers must not be bumped up by roundoff
    if not y < _INT_LIMIT:
        raise DomainError(f"truncation number {y!r} does not fit in a 64-bit integer")
    return math.ceil(y - _TIE_NUDGE * max(1.0, abs(y)))


def _floor(y: float) -> int:
    if not y < _INT_LIMIT:
        raise DomainError(f"truncation number {y!r} does not fit in a 64-bit integer")
    return math.floor(y + _TIE_NUDGE * max(1.0, abs(y)))


def _check_n(n) -> int:
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"n must be an integer, got {n!r}")
    n = int(n)
    if n <= 0:
        raise DomainError(f"n must be positive, got {n}")
    return n


def select_standard(c: FunctionClass, n: int) -> SincGrid:
    n = _check_n(n)
    x = 2.0 * c.d * n / c.mu
    if x <= 1.0:
        raise DomainError(f"2dn/mu = {x!r} <= 1 gives a nonpositive mesh size")
    h = math.log(x) / n
    shortfall = _floor(math.log(c.nu / c.mu) / h)
    warnings = []
    if shortfall > n:
        warnings.append(f"truncation number clamped at 0 (floor term {shortfall} > n)")
    short_side = max(n - shortfall, 0)
    if c.mu == c.alpha:
        M, N = n, short_side
    else:
        M, N = short_side, n
    valid = n >= c.nu * math.e / (2.0 * c.d)
    if not valid:
        warnings.insert(0, f"n = {n} < nu e/(2d) = {c.nu * math.e / (2.0 * c.d):.6g}; bound not certified")
    return SincGrid(h, M, N, n, STANDARD, valid, "; ".join(warnings) or None)


def select_new1(c: FunctionClass, n: int) -> SincGrid:
    n = _check_n(n)
    q = q_func(c.d * n / c.mu)
    h = arsinh(q) / n
    if c.mu == c.alpha:
        M, N = n, _ceil(arsinh(c.alpha / c.beta * q) / h)
    else:
        M, N = _ceil(arsinh(c.beta / c.alpha * q) / h), n
    return SincGrid(h, M, N, n, NEW1)


def _truncation_numbers(c: FunctionClass, h: float, q: float) -> tuple:
    M = _ceil(arsinh(c.mu / c.alpha * q) / h)
    N = _ceil(arsinh(c.mu / c.beta * q) / h)
    return M, N


def select_new2(c: FunctionClass, n: int) -> SincGrid:
    n = _check_n(n)
    x = c.d * n / c.mu
    h = arsinh(x) / n
    M, N = _truncation_numbers(c, h, q_func(x))
    return SincGrid(h, M, N, n, NEW2)


def select_general_q(c: FunctionClass, n: int, q: QChoice) -> SincGrid:
    """Generalized selection h = d/(mu q(dn/mu)) with M, N by ceilings.

    ``DEFAULT_Q`` reproduces :func:`select_new2` exactly; ``IDENTITY_Q`` gives
    h = 1/n, M = ceil(n arsinh(dn/alpha)), N = ceil(n arsinh(dn/beta)).
    """
    n = _check_n(n)
    strategy = Strategy("general", q)
    if q.kind == "default":
        grid = select_new2(c, n)
        return SincGrid(grid.h, grid.M, grid.N, n, strategy)
    if q.kind == "identity":
        M = _ceil(n * arsinh(c.d * n / c.alpha))
        N = _ceil(n * arsinh(c.d * n / c.beta))
        return SincGrid(1.0 / n, M, N, n, strategy)
    qv = q(c.d * n / c.mu)
    if not qv > 0:
        raise DomainError(f"q(dn/mu) = {qv!r} must be positive")
    h = c.d / (c.mu * qv)
    M, N = _truncation_numbers(c, h, qv)
    return SincGrid(h, M, N, n, strategy)


def select(c: FunctionClass, n: int, strategy: Strategy) -> SincGrid:
    """Dispatch to the selection rule named by ``strategy``."""
    if strategy.kind == "standard":
        return select_standard(c, n)
    if strategy.kind == "new1":
        return select_new1(c, n)
    if strategy.kind == "new2":
        return select_new2(c, n)
    return select_general_q(c, n, strategy.q)
