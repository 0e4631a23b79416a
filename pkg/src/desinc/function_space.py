"""Function-class certificates, the DE transform and the built-in test functions.

A :class:`FunctionClass` carries the constants (L, R, alpha, beta, d) under
which a function on the real line is assumed to decay double exponentially
and to be analytic in the strip ``|Im z| < d``. The certificates are
user-asserted; :func:`decay_envelope` lets callers spot-check the real-line
part numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError

__all__ = [
    "FunctionClass",
    "IntervalFunction",
    "TransformedFunction",
    "de_transform",
    "de_endpoint_distances",
    "decay_envelope",
    "builtin_f1",
    "builtin_f2",
    "BUILTINS",
    "get_builtin",
]


@dataclass(frozen=True)
class FunctionClass:
    """Certificate (L, R, alpha, beta, d) of double-exponential decay."""

    L: float
    R: float
    alpha: float
    beta: float
    d: float

    def __post_init__(self):
        for name in ("L", "R", "alpha", "beta"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be a positive finite number, got {value!r}")
        if not (0 < self.d < math.pi / 2):
            raise DomainError(f"d must satisfy 0 < d < pi/2, got {self.d!r}")

    @property
    def mu(self) -> float:
        return min(self.alpha, self.beta)

    @property
    def nu(self) -> float:
        return max(self.alpha, self.beta)

    def swapped(self) -> "FunctionClass":
        """The certificate of x -> F(-x): decay rates exchanged."""
        return FunctionClass(self.L, self.R, self.beta, self.alpha, self.d)


@dataclass(frozen=True)
class IntervalFunction:
    """A function on [-1, 1] evaluated from (t, 1 - t, 1 + t).

    The endpoint distances are passed separately so that fractional powers of
    them stay accurate when t is within rounding of +-1.
    """

    evaluate_stable: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]
    label: str

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return self.evaluate_stable(t, 1.0 - t, 1.0 + t)


@dataclass(frozen=True)
class TransformedFunction:
    """A real-line function paired with its certificate.

    ``evaluate`` must be vectorized over numpy arrays. Calls return exact 0
    wherever the certificate's envelope underflows.
    """

    evaluate: Callable[[np.ndarray], np.ndarray]
    certificate: FunctionClass
    label: str

    def __call__(self, x):
        scalar = np.ndim(x) == 0
        x = np.asarray(x, dtype=float)
        with np.errstate(over="ignore", under="ignore"):
            values = np.asarray(self.evaluate(x), dtype=float)
        values = np.where(decay_envelope(self.certificate, x) == 0.0, 0.0, values)
        return float(values) if scalar else values


def de_transform(x):
    """t = tanh((pi/2) sinh x), mapping the real line onto (-1, 1)."""
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore"):
        t = np.tanh(0.5 * np.pi * np.sinh(x))
    return float(t) if scalar else t


def de_endpoint_distances(x):
    """Return (1 - t, 1 + t) for t = de_transform(x), both to full relative precision.

    Uses 1 - tanh(w) = 2/(exp(2w) + 1) and 1 + tanh(w) = 2/(exp(-2w) + 1),
    rewritten so that the exponential never overflows.
    """
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", under="ignore"):
        w = 0.5 * np.pi * np.sinh(x)
        e = np.exp(-2.0 * np.abs(w))  # in [0, 1]
        near = 2.0 * e / (1.0 + e)  # distance to the nearer endpoint
        far = 2.0 / (1.0 + e)
    one_minus = np.where(w >= 0, near, far)
    one_plus = np.where(w >= 0, far, near)
    if scalar:
        return float(one_minus), float(one_plus)
    return one_minus, one_plus


def decay_envelope(c: FunctionClass, x):
    """R / ((1 + e^{-pi sinh x})^alpha (1 + e^{pi sinh x})^beta), overflow-free."""
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", under="ignore"):
        s = np.sinh(x)
        a = np.abs(s)
        decay = np.where(s >= 0, c.beta, c.alpha)
        e = np.exp(-np.pi * a)
        out = c.R * np.exp(-np.pi * decay * a) / (1.0 + e) ** (c.alpha + c.beta)
    return float(out) if scalar else out


def _transform(f: IntervalFunction, certificate: FunctionClass) -> TransformedFunction:
    def evaluate(x):
        one_minus, one_plus = de_endpoint_distances(x)
        return f.evaluate_stable(de_transform(x), one_minus, one_plus)

    return TransformedFunction(evaluate, certificate, f.label)


def _f1(t, one_minus, one_plus):
    return np.sqrt(one_minus) * np.sqrt(one_plus)


def _f2(t, one_minus, one_plus):
    return np.sqrt(1.0 + t * t) * np.sqrt(one_plus) * one_minus**0.75


F1_CERTIFICATE = FunctionClass(L=2.0, R=2.0, alpha=0.5, beta=0.5, d=1.5)
F2_CERTIFICATE = FunctionClass(L=4.0, R=4.0, alpha=0.5, beta=0.75, d=math.pi / 6)


def builtin_f1():
    """f1(t) = (1 - t^2)^(1/2) with certificate L = R = 2, alpha = beta = 1/2, d = 3/2."""
    f = IntervalFunction(_f1, "f1")
    return f, F1_CERTIFICATE, _transform(f, F1_CERTIFICATE)


def builtin_f2():
    """f2(t) = (1 + t^2)^(1/2) (1 + t)^(1/2) (1 - t)^(3/4), certificate L = R = 4, alpha = 1/2, beta = 3/4, d = pi/6."""
    f = IntervalFunction(_f2, "f2")
    return f, F2_CERTIFICATE, _transform(f, F2_CERTIFICATE)


BUILTINS = {"f1": builtin_f1, "f2": builtin_f2}


def get_builtin(label: str) -> TransformedFunction:
    try:
        factory = BUILTINS[label]
    except KeyError:
        raise DomainError(f"unknown function {label!r}; choose from {sorted(BUILTINS)}") from None
    return factory()[2]
