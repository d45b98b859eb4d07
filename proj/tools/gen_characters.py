#!/usr/bin/env python3
"""Generate q-series characters for the bundled Fibonacci data.

The data has c = 14/5 and h_t = 2/5, the modular data of (G2)_1. Both characters
solve the second order modular differential equation

    (q d/dq)^2 chi - (1/6) E2 (q d/dq) chi + mu E4 chi = 0,   mu = -119/3600,

whose indicial roots are -7/60 = -c/24 and 17/60 = h_t - c/24. The recursion is
solved exactly in rationals. The normalization of chi_t is fixed by requiring the
fitted S-transform to be symmetric; the result is checked to be an integer.
"""

import argparse
import cmath
import json
from fractions import Fraction


def divisor_sum(n, k):
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def mlde_series(alpha, mu, order):
    e2 = [Fraction(1)] + [Fraction(-24 * divisor_sum(n, 1)) for n in range(1, order + 1)]
    e4 = [Fraction(1)] + [Fraction(240 * divisor_sum(n, 3)) for n in range(1, order + 1)]
    a = [Fraction(1)]
    for n in range(1, order + 1):
        x = alpha + n
        lead = x * x - x / 6 + mu
        rest = sum((-(e2[k] * (x - k)) / 6 + mu * e4[k]) * a[n - k] for k in range(1, n + 1))
        a.append(-rest / lead)
    return a


def evaluate(offset, coeffs, tau):
    q = cmath.exp(2j * cmath.pi * tau)
    return cmath.exp(2j * cmath.pi * float(offset) * tau) * sum(float(c) * q**n for n, c in enumerate(coeffs))


def solve2(rows, rhs):
    # least squares for two unknowns via normal equations
    a11 = sum(abs(r[0]) ** 2 for r in rows)
    a12 = sum(r[0].conjugate() * r[1] for r in rows)
    a22 = sum(abs(r[1]) ** 2 for r in rows)
    b1 = sum(r[0].conjugate() * y for r, y in zip(rows, rhs))
    b2 = sum(r[1].conjugate() * y for r, y in zip(rows, rhs))
    det = a11 * a22 - a12 * a12.conjugate()
    return (b1 * a22 - a12 * b2) / det, (a11 * b2 - a12.conjugate() * b1) / det


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=800)
    ap.add_argument("--output", default="fibonacci.characters.json")
    args = ap.parse_args()

    c = Fraction(14, 5)
    mu = Fraction(-119, 3600)
    off_e, off_t = -c / 24, Fraction(2, 5) - c / 24
    assert off_e + off_t == Fraction(1, 6) and off_e * off_t == mu
    chi_e = mlde_series(off_e, mu, args.order)
    chi_t = mlde_series(off_t, mu, args.order)

    taus = [1j, 1.1j, 0.9j + 0.1, 1.2j - 0.15, 0.95j + 0.2]
    short = 60
    rows = [(evaluate(off_e, chi_e[:short], t), evaluate(off_t, chi_t[:short], t)) for t in taus]
    fit_e = solve2(rows, [evaluate(off_e, chi_e[:short], -1 / t) for t in taus])
    fit_t = solve2(rows, [evaluate(off_t, chi_t[:short], -1 / t) for t in taus])
    k = cmath.sqrt(fit_e[1] / fit_t[0]).real
    scale = round(k)
    if abs(k - scale) > 1e-8:
        raise SystemExit(f"normalization {k} is not an integer")
    chi_t = [x * scale for x in chi_t]
    for series in (chi_e, chi_t):
        if any(x.denominator != 1 for x in series):
            raise SystemExit("non-integral coefficient")

    out = {
        "category": "fibonacci",
        "characters": [
            {"label": "e", "offset": str(off_e), "coeffs": [str(x.numerator) for x in chi_e]},
            {"label": "t", "offset": str(off_t), "coeffs": [str(x.numerator) for x in chi_t]},
        ],
    }
    with open(args.output, "w") as fh:
        json.dump(out, fh, separators=(",", ":"))
        fh.write("\n")
    print(f"chi_t normalization {scale}; wrote {args.output}")


if __name__ == "__main__":
    main()
