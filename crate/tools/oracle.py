#!/usr/bin/env python3
"""Reference values for the test suite, computed with mpmath at 50 digits.

Writes crates/core/tests/data/reference.csv. Dev-only; the library never
calls this.

    python3 tools/oracle.py
"""
import csv
import pathlib

import mpmath as mp

mp.mp.dps = 50

OUT = pathlib.Path(__file__).resolve().parent.parent / "crates/core/tests/data/reference.csv"


def lower_i(nu, beta, p, x):
    # t = x u^q flattens the t^(p+nu) endpoint singularity
    s = p + (abs(nu) if nu < 0 and nu == int(nu) else nu)
    q = max(mp.mpf(1), 1 / (s + 1))
    f = lambda u: q * x * u ** (q - 1) * (x * u**q) ** p * mp.exp(beta * x * u**q) * mp.besseli(nu, x * u**q)
    return mp.quad(f, [k / mp.mpf(8) for k in range(9)])


def upper_k(nu, beta, p, x):
    f = lambda t: mp.exp(beta * t) * t**p * mp.besselk(nu, t)
    pts = [x, x + 1, x + 5, x + 20, mp.inf] if x > 0 else [0, 1, 5, 20, mp.inf]
    return mp.quad(f, pts)


def struve_f(nu, x):
    # L_nu ~ I_nu for large x: the difference cancels ~0.87x digits
    with mp.workdps(50 + int(x)):
        return mp.besseli(nu, x) * mp.struvel(nu - 1, x) - mp.besseli(nu - 1, x) * mp.struvel(nu, x)


def a_ratio(nu, x):
    i0, i1, i2 = (mp.besseli(nu + k, x) for k in range(3))
    return (i0 - i1) / (i0 - i2)


def b_ratio(nu, x):
    k0, k1, k2 = (mp.besselk(nu + k, x) for k in range(3))
    return (k2 - k1) / (k2 - k0)


def rows():
    for x in [0.5, 1.5, 7.5, 30.5, 100.5, 170.5]:
        yield "gamma", 0, x, 0, 0, mp.gamma(x)
    nus = [-1.75, -1.25, -0.75, -0.45, 0, 0.3, 1, 2.5, 7.9, 20.25, 40]
    xs = [1e-4, 0.05, 1, 1.99, 2.01, 8, 11.9, 12.1, 24, 26, 100, 700, 1e4, 1e5]
    for nu in nus:
        for x in xs:
            yield "i_scaled", nu, x, 0, 0, mp.besseli(nu, x) * mp.exp(-x)
            yield "k_scaled", nu, x, 0, 0, mp.besselk(nu, x) * mp.exp(x)
    for nu in [-1.45, -0.75, -0.3, 0, 0.5, 1, 2.5, 6, 15]:
        for x in [1e-3, 0.5, 3, 15, 29.5, 30.5, 39, 41, 120, 1000]:
            yield "l_scaled", nu, x, 0, 0, mp.struvel(nu, x) * mp.exp(-x)
    for nu in [-0.4, 0, 0.6, 2.5, 10]:
        for x in [0.2, 5, 35, 100]:
            yield "struve_f_scaled", nu, x, 0, 0, struve_f(nu, x) * mp.exp(-2 * x)
    cases = [
        (0.5, 0.0, 1.5, 1.0), (0.0, -0.5, 0.0, 2.0), (-0.45, 0.5, -0.45, 0.01),
        (-0.45, 0.9, -0.45, 50.0), (2.5, -0.9, 2.5, 100.0), (10.0, 0.0, 10.0, 3.0),
        (1.0, 0.3, 0.2, 7.0), (0.0, 0.0, -0.9, 1.0), (5.0, -0.5, 6.0, 0.001),
    ]
    for nu, beta, p, x in cases:
        yield "lower_i", nu, x, beta, p, lower_i(nu, beta, p, x)
    cases = [
        (0.5, 0.0, 1.5, 1.0), (0.5, 0.3, 0.5, 1.0), (2.0, 0.0, 2.0, 50.0),
        (-0.45, 0.9, -0.45, 0.001), (2.5, 0.9, 3.5, 10.0), (10.0, -0.9, 10.0, 0.01),
        (0.0, 0.5, 0.0, 2.0), (1.0, 0.0, 1.0, 0.0), (5.0, 0.5, 5.0, 0.0),
    ]
    for nu, beta, p, x in cases:
        yield "upper_k", nu, x, beta, p, upper_k(nu, beta, p, x)
    for nu in [0, 1, 2, 5]:
        for x in [1e-3, 1, 10, 1e3, 1e4]:
            yield "a_ratio", nu, x, 0, 0, a_ratio(nu, x)
            yield "b_ratio", nu, x, 0, 0, b_ratio(nu, x)


def main():
    OUT.parent.mkdir(parents=True, exist_ok=True)
    with OUT.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["func", "nu", "x", "beta", "p", "value"])
        for func, nu, x, beta, p, v in rows():
            w.writerow([func, repr(float(nu)), repr(float(x)), repr(float(beta)), repr(float(p)), mp.nstr(v, 20)])


if __name__ == "__main__":
    main()
