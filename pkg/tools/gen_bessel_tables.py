#!/usr/bin/env python3
"""Regenerate the Chebyshev tables embedded in abcrack/special_functions.py.

Run from the repo root:

    python3 tools/gen_bessel_tables.py

Coefficients are computed with mpmath at 40 digits via Chebyshev-Gauss
projection of the exponentially scaled functions

    sqrt(t) exp(-t) I0(t),  sqrt(t) exp(-t) I1(t),
    sqrt(t) exp(+t) K0(t),  sqrt(t) exp(+t) K1(t)

on t in [2, 8] (variable z = (16/t - 5)/3) and t in [8, inf)
(variable z = 16/t - 1).  Terms are kept down to 1e-22 so the truncation
error is far below double precision round-off.
"""
import mpmath as mp

mp.mp.dps = 40

CUT = mp.mpf("1e-22")
NPROJ = 96


def cheb_coeffs(f, n=NPROJ):
    """Chebyshev series coefficients of f on [-1, 1] (c0 halved convention)."""
    nodes = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / n) for k in range(n)]
    vals = [f(x) for x in nodes]
    out = []
    for j in range(n):
        s = mp.fsum(vals[k] * mp.cos(mp.pi * j * (k + mp.mpf(1) / 2) / n)
                    for k in range(n))
        out.append(2 * s / n)
    return out


def trim(coeffs):
    n = len(coeffs)
    while n > 1 and abs(coeffs[n - 1]) < CUT:
        n -= 1
    return coeffs[:n]


def t_mid(z):
    # z = (16/t - 5)/3  =>  t = 16/(3z + 5)
    return 16 / (3 * z + 5)


def t_far(z):
    # z = 16/t - 1  =>  t = 16/(z + 1);  z -> -1 is t -> inf
    return 16 / (z + 1)


def scaled(fn, sign):
    def g(t):
        return mp.sqrt(t) * mp.exp(sign * t) * fn(t)
    return g


def emit(name, coeffs):
    print(f"{name} = np.array([")
    for c in coeffs:
        print(f"    {mp.nstr(c, 22, strip_zeros=False)},")
    print("])")


def far_fn(fn, sign):
    base = scaled(fn, sign)

    def g(z):
        if z <= -1:
            # limit t -> inf of sqrt(t) e^{+-t} f(t) is sqrt(pi/2) or sqrt(2/pi)... use large t
            return base(mp.mpf("1e30"))
        return base(t_far(z))
    return g


def main():
    funcs = [
        ("I0", lambda t: mp.besseli(0, t), -1),
        ("I1", lambda t: mp.besseli(1, t), -1),
        ("K0", lambda t: mp.besselk(0, t), 1),
        ("K1", lambda t: mp.besselk(1, t), 1),
    ]
    print("# Generated by tools/gen_bessel_tables.py -- do not edit by hand.")
    for name, fn, sign in funcs:
        mid = trim(cheb_coeffs(lambda z: scaled(fn, sign)(t_mid(z))))
        far = trim(cheb_coeffs(far_fn(fn, sign)))
        emit(f"_CHEB_{name}_MID", mid)
        emit(f"_CHEB_{name}_FAR", far)
        print(f"# {name}: mid {len(mid)} terms, far {len(far)} terms")


if __name__ == "__main__":
    main()
