"""Scalar special functions used by the selection formulas and bounds.

All functions accept Python floats or numpy arrays and return the same
shape. Scalars come back as plain floats.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

__all__ = ["sinc", "sinpi", "arsinh", "q_func", "p_func", "r_func"]

# below this |x| the two-term series 1 - (pi x)^2/6 is exact to double roundoff
_SINC_SERIES_CUTOFF = 1e-7
# above this |x| the 1 in 1 + x^2 is invisible, and x^2 would overflow near 1e154
_ARSINH_LARGE = 2.0**28
# below this x, q(x) = 1 + x^2/6 - 17 x^4/360 to double precision
_Q_SERIES_CUTOFF = 1e-3


def _out(values, scalar: bool):
    return float(values) if scalar else values


def sinpi(x):
    """Return sin(pi x) with exact argument reduction.

    The reduction ``x - round(x)`` is exact in binary floating point, so the
    result keeps full relative accuracy near every integer, where plain
    ``np.sin(np.pi * x)`` would carry an absolute error of order ``|x| * eps``.
    """
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    m = np.round(x)
    r = x - m
    sign = np.where(np.fmod(m, 2.0) == 0.0, 1.0, -1.0)
    return _out(sign * np.sin(np.pi * r), scalar)


def sinc(x):
    """Normalized sinc, sin(pi x)/(pi x), with sinc(0) = 1."""
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < _SINC_SERIES_CUTOFF
    safe = np.where(small, 1.0, x)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = sinpi(safe) / (np.pi * safe)
    px = np.pi * x
    out = np.where(small, 1.0 - px * px / 6.0, out)
    return _out(out, scalar)


def arsinh(x):
    """Inverse hyperbolic sine, log(x + sqrt(1 + x^2)), without cancellation.

    Evaluated on |x| and mirrored, since the direct formula cancels for
    negative x. Small arguments go through log1p, very large ones through
    log(2|x|) plus the first correction term so that x^2 is never formed.
    """
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    a = np.abs(x)
    big = a > _ARSINH_LARGE
    ab = np.where(big, 1.0, a)
    # log1p(a + a^2/(1 + sqrt(1 + a^2))) == log(a + sqrt(1 + a^2))
    moderate = np.log1p(ab + ab * ab / (1.0 + np.sqrt(1.0 + ab * ab)))
    aa = np.where(big, a, 1.0)
    with np.errstate(under="ignore"):
        large = np.log(2.0) + np.log(aa) + 0.25 / aa / aa
    out = np.where(big, large, moderate)
    return _out(np.copysign(out, x), scalar)


def _check_nonnegative(x, name: str):
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)) or np.any(x < 0):
        raise DomainError(f"{name} is defined for x >= 0 only")
    return x


def q_func(x):
    """x / arsinh(x), extended by its limit q(0) = 1.

    Near the origin q - 1 is below one ulp for a while and the quotient only
    produces rounding noise, so a short Taylor series takes over there.
    """
    scalar = np.ndim(x) == 0
    x = _check_nonnegative(x, "q_func")
    small = x < _Q_SERIES_CUTOFF
    safe = np.where(small, 1.0, x)
    x2 = np.where(small, x, 0.0) ** 2
    out = np.where(small, 1.0 + x2 / 6.0 - 17.0 * x2 * x2 / 360.0, safe / arsinh(safe))
    return _out(out, scalar)


def p_func(x):
    """x / arsinh(x / arsinh(x)), i.e. x / arsinh(q(x)); p(0) = 0."""
    scalar = np.ndim(x) == 0
    x = _check_nonnegative(x, "p_func")
    out = x / arsinh(q_func(x))
    return _out(out, scalar)


def r_func(x):
    """The difference p(x) - q(x); equals -1 at the origin."""
    scalar = np.ndim(x) == 0
    x = _check_nonnegative(x, "r_func")
    out = p_func(x) - q_func(x)
    return _out(out, scalar)
