"""Independent high-precision reference values frozen into the C++ tests.

Run with `python3 tests/oracles/generate_oracles.py`; needs mpmath.
Nothing here shares code with the library: the Green function on S^3 is summed
directly from its Gegenbauer series (C_l^1(cos t) = sin((l+1)t)/sin t) with
mpmath's series acceleration, and the remaining values come from elementary
closed expressions or exact rational arithmetic.
"""

import math
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 30


def g_s3(a, theta):
    """sum_l (l+1) C_l^1(cos theta) / (l^2 (l+2)^2 + a) on S^3, a not resonant."""
    theta = mp.mpf(theta)
    if theta == mp.pi:
        term = lambda l: (l + 1) ** 2 * (-1) ** int(l) / (l**2 * (l + 2) ** 2 + a)
        return mp.nsum(term, [0, mp.inf])
    s = mp.sin(theta)

    def term(l):
        return (l + 1) * mp.sin((l + 1) * theta) / s / (l**2 * (l + 2) ** 2 + a)

    # terms decay like l^-2 with oscillation; the omitted tail is below 1e-10
    return mp.fsum(term(l) for l in range(0, 400000))



def main():
    a = mp.mpf(-576) / 625
    print("# G_a on S^3, a = -576/625")
    for th in ["0.3", "1.0", "pi/2", "2.5", "pi"]:
        theta = mp.pi / 2 if th == "pi/2" else (mp.pi if th == "pi" else mp.mpf(th))
        print(th, mp.nstr(g_s3(a, theta), 17))

    print("# A, B for lambda = 1, L = 2/5")
    lam, L = Fraction(1), Fraction(2, 5)
    A = 1 / (4 * L * (L + lam) * (L + 2 * lam))
    d = lam * lam - 2 * L * lam - L * L
    print("A =", A, " d =", d, " (sqrt d = 1/5)")
    s = Fraction(1, 5)
    assert s * s == d
    print("B =", 1 / (4 * L * (L + 2 * lam) * s))

    print("# I_0, I_2 on S^3 at theta = pi/2, pi")
    for theta in [mp.pi / 2, mp.pi]:
        c = 2 - 2 * mp.cos(theta)
        cot = (mp.pi - theta) * mp.cot(theta) if theta != mp.pi else mp.mpf(-1)
        print("I0", mp.nstr(-1 + 1 / c + cot / 2 - mp.log(c) / 2, 17), "I2", mp.nstr(mp.cos(theta) / c - cot / 2 - mp.log(c) / 2, 17))

    print("# J_0 on S^3 at theta = pi: sum (l+1)^2 (-1)^l / l^2")
    j0 = mp.nsum(lambda l: (l + 1) ** 2 * (-1) ** int(l) / l**2, [1, mp.inf])
    print(mp.nstr(j0, 17), "closed:", mp.nstr(-mp.mpf(1) / 2 - 2 * mp.log(2) - mp.pi**2 / 12, 17))

    print("# I_1 on S^2 at theta = 2 pi / 3: sum (2l+1) P_l(-1/2)/(l+1)")
    print(mp.nstr(mp.nsum(lambda l: (2 * l + 1) * mp.legendre(int(l), -0.5) / (l + 1), [1, mp.inf]), 17))

    print("# G_0 on S^2 at theta = pi/2: sum (2l+1) P_l(0) / (l^2 (l+1)^2), l >= 1")
    # odd l vanish; P_2k(0) = (-1)^k binom(2k, k) / 4^k keeps the sum alternating for nsum
    def even_term(k):
        l = 2 * k
        p0 = (-1) ** int(k) * mp.binomial(2 * k, k) / mp.mpf(4) ** k
        return (2 * l + 1) * p0 / (l**2 * (l + 1) ** 2)
    print(mp.nstr(mp.nsum(even_term, [1, mp.inf]), 17))

    print("# G_0 on S^3")
    for theta in [0, mp.pi / 2, mp.pi]:
        print(mp.nstr((3 + 4 * mp.pi**2 - 12 * mp.pi * theta + 6 * theta**2) / 48, 17))

    print("# Table 1 by brute force over integer exponent pairs e+ > e- >= 0, e+ + e- = n - 1")
    # e+ e- = 2 L lambda + L^2, so L = sqrt(lambda^2 + e+ e-) - lambda must be a positive rational
    for n in range(2, 17):
        lam = Fraction(n - 1, 2)
        for em in range(0, n):
            ep = n - 1 - em
            if ep <= em or ep * em == 0:
                continue
            sq = lam * lam + ep * em
            num, den = sq.numerator, sq.denominator
            rn, rd = math.isqrt(num), math.isqrt(den)
            if rn * rn == num and rd * rd == den:
                L = Fraction(rn, rd) - lam
                print(n, lam, L, ep, em, -(L * (L + 2 * lam)) ** 2)


if __name__ == "__main__":
    main()
