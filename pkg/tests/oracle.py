"""High-precision reference values, independent of the library code paths.

Everything here is evaluated with mpmath at 40 significant digits straight
from the defining formulas. The test modules freeze the numbers this module
prints; run ``python tests/oracle.py`` to regenerate them.
"""

import mpmath as mp

mp.mp.dps = 40

F1 = dict(L=2, R=2, alpha=mp.mpf(1) / 2, beta=mp.mpf(1) / 2, d=mp.mpf(3) / 2)
F2 = dict(L=4, R=4, alpha=mp.mpf(1) / 2, beta=mp.mpf(3) / 4, d=mp.pi / 6)


def q(x):
    x = mp.mpf(x)
    return mp.mpf(1) if x == 0 else x / mp.asinh(x)


def p(x):
    return mp.mpf(x) / mp.asinh(q(x))


def phi(x):
    return mp.tanh(mp.pi / 2 * mp.sinh(mp.mpf(x)))


def envelope(c, x):
    s = mp.sinh(mp.mpf(x))
    return c["R"] / ((1 + mp.exp(-mp.pi * s)) ** c["alpha"] * (1 + mp.exp(mp.pi * s)) ** c["beta"])


def F1_value(x):
    # 1 - t falls to ~1e-275 at x = 6, so the working precision must cover it
    with mp.workdps(700):
        t = phi(x)
        v = mp.sqrt(1 - t * t)
    return +v


def F2_value(x):
    with mp.workdps(700):
        t = phi(x)
        v = mp.sqrt(1 + t * t) * mp.sqrt(1 + t) * (1 - t) ** (mp.mpf(3) / 4)
    return +v


def _mu_nu(c):
    return min(c["alpha"], c["beta"]), max(c["alpha"], c["beta"])


def _cos_part(c):
    d = c["d"]
    return mp.cos(mp.pi / 2 * mp.sin(d)) ** (c["alpha"] + c["beta"]) * mp.cos(d)


def c_exist(c):
    mu, nu = _mu_nu(c)
    d = c["d"]
    first = 2 * c["L"] / (mp.pi * mu * (1 - mp.exp(-mp.pi * mu * mp.e)) * _cos_part(c))
    return 2 / (mp.pi * d) * (first + c["R"] * mp.exp(mp.pi * nu / 2))


def c_new1(c):
    mu, _ = _mu_nu(c)
    d = c["d"]
    x = d / mu
    first = 2 * c["L"] * mp.exp(-mp.pi * mu * (p(x) - q(x))) / (
        mp.pi * mu * (1 - mp.exp(-2 * mp.pi * mu * p(x))) * _cos_part(c))
    return 2 / (mp.pi * d) * (first + mp.pi / 2 * c["R"])


def c_new2(c, qq=q):
    mu, _ = _mu_nu(c)
    d = c["d"]
    first = 2 * c["L"] / (mp.pi * mu * (1 - mp.exp(-2 * mp.pi * mu * qq(d / mu))) * _cos_part(c))
    return 2 / (mp.pi * d) * (first + c["R"])


def c_corollary(c):
    mu, _ = _mu_nu(c)
    d = c["d"]
    first = 2 * c["L"] / (mp.pi * mu * (1 - mp.exp(-2 * mp.pi * d)) * _cos_part(c))
    return 2 / (mp.pi * d) * (first + c["R"])


def disc_bound(c, h):
    mu, _ = _mu_nu(c)
    d = c["d"]
    h = mp.mpf(h)
    return 4 * c["L"] / (mp.pi ** 2 * d * mu * (1 - mp.exp(-2 * mp.pi * d / h)) * _cos_part(c)) * mp.exp(-mp.pi * d / h)


def trunc_bound(c, n, h, qq=q):
    mu, _ = _mu_nu(c)
    qv = qq(c["d"] * n / mu)
    return 2 * c["R"] / (mp.pi * mu * mp.mpf(h) * mp.sqrt(1 + qv ** 2)) * mp.exp(-mp.pi * mu * qv)


def h_standard(c, n):
    mu, _ = _mu_nu(c)
    return mp.log(2 * c["d"] * n / mu) / n


def h_new1(c, n):
    mu, _ = _mu_nu(c)
    return mp.asinh(q(c["d"] * n / mu)) / n


def h_new2(c, n):
    mu, _ = _mu_nu(c)
    return mp.asinh(c["d"] * n / mu) / n


def grid_new2(c, n):
    mu, _ = _mu_nu(c)
    h = h_new2(c, n)
    qv = q(c["d"] * n / mu)
    return h, int(mp.ceil(mp.asinh(mu / c["alpha"] * qv) / h)), int(mp.ceil(mp.asinh(mu / c["beta"] * qv) / h))


def grid_new1(c, n):
    mu, _ = _mu_nu(c)
    h = h_new1(c, n)
    qv = q(c["d"] * n / mu)
    if mu == c["alpha"]:
        return h, n, int(mp.ceil(mp.asinh(c["alpha"] / c["beta"] * qv) / h - mp.mpf(10) ** -30))
    return h, int(mp.ceil(mp.asinh(c["beta"] / c["alpha"] * qv) / h - mp.mpf(10) ** -30)), n


def grid_standard(c, n):
    mu, _ = _mu_nu(c)
    h = h_standard(c, n)
    if mu == c["alpha"]:
        return h, n, n - int(mp.floor(mp.log(c["beta"] / c["alpha"]) / h))
    return h, n - int(mp.floor(mp.log(c["alpha"] / c["beta"]) / h)), n


def f(v):
    return mp.nstr(v, 20)


if __name__ == "__main__":
    print("arsinh(30)", f(mp.asinh(30)))
    print("q(30)", f(q(30)), "p(30)", f(p(30)), "r(30)", f(p(30) - q(30)))
    print("phi(1)", f(phi(1)))
    s3 = mp.sinh(3)
    print("dist(3)", f(2 / (mp.exp(mp.pi * s3) + 1)), f(2 / (mp.exp(-mp.pi * s3) + 1)))
    print("env f1 x=1", f(envelope(F1, 1)), "env f2 x=0", f(envelope(F2, 0)))
    print("F1(2)", f(F1_value(2)), "F2(1)", f(F2_value(1)), "F1(0.1)", f(F1_value(mp.mpf("0.1"))))
    for x in [3, 4, 5, 6]:
        print("F2(", x, ")", f(F2_value(x)))
    for name, c in (("f1", F1), ("f2", F2)):
        print(name, "C_exist", f(c_exist(c)), "C_new1", f(c_new1(c)), "C_new2", f(c_new2(c)),
              "C_cor", f(c_corollary(c)))
        print(name, "std10", [f(v) for v in grid_standard(c, 10)])
        print(name, "new1_10", [f(v) for v in grid_new1(c, 10)])
        print(name, "new2_10", [f(v) for v in grid_new2(c, 10)])
        h2 = grid_new2(c, 10)[0]
        print(name, "disc(h_new2)", f(disc_bound(c, h2)), "trunc", f(trunc_bound(c, 10, h2)))
    print("disc f1 h=0.409462", f(disc_bound(F1, mp.mpf("0.409462"))))
    print("disc f2 h=0.304412", f(disc_bound(F2, mp.mpf("0.304412"))))
    mu = mp.mpf(1) / 2
    d = mp.mpf(3) / 2
    print("rate new2 f1 n=10", f(mp.pi * d * 10 / mp.asinh(30)), "std", f(mp.pi * d * 10 / mp.log(60)))
    print("headline new2 f1 n=10", f(c_new2(F1) * mp.exp(-mp.pi * d * 10 / mp.asinh(30))))
