#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ unit tests.

Every quantity here is computed by brute-force summation in mpmath at 40
digits, independently of the library's truncation logic. Re-run to
regenerate; output is a list of `name = value` lines.
"""
from mpmath import mp, mpf, exp, pi, sqrt, sin, cos, findroot

mp.dps = 40


def theta1d(X, Y, N=80):
    return 1 + 2 * sum(exp(-pi * n * n * X) * cos(2 * pi * n * Y) for n in range(1, N))


def theta1d_dY(X, Y, N=80):
    return -4 * pi * sum(n * exp(-pi * n * n * X) * sin(2 * pi * n * Y) for n in range(1, N))


def mu(X, N=80):
    return sum(n * n * exp(-pi * (n * n - 1) * X) for n in range(2, N))


def nu(X, N=80):
    return sum(exp(-pi * (n * n - 1) * X) for n in range(2, N))


def theta2d(alpha, x, y, R=40):
    s = mpf(0)
    for m in range(-R, R + 1):
        for n in range(-R, R + 1):
            s += exp(-alpha * pi / y * ((m * x + n) ** 2 + (m * y) ** 2))
    return s


def yukawa(alpha, beta, x, y, R=60):
    s = mpf(0)
    for m in range(-R, R + 1):
        for n in range(-R, R + 1):
            if m == 0 and n == 0:
                continue
            r = ((m * x + n) ** 2 + (m * y) ** 2) / y
            s += exp(-pi * alpha * r) / r - beta * exp(-2 * pi * alpha * r) / (2 * r)
    return s


def out(name, v):
    print(f"{name} = {mp.nstr(v, 20)}")


h = sqrt(3) / 2
out("theta3_1", theta1d(1, 0))
out("theta1d_2_half", theta1d(2, mpf(1) / 2))
out("theta1d_001_0", theta1d(mpf("0.01"), 0, N=400))
out("theta1d_05_025", theta1d(mpf("0.5"), mpf("0.25")))
out("theta1d_dY_1_quarter", theta1d_dY(1, mpf(1) / 4))
out("mu_1", mu(1))
out("nu_1", nu(1))
out("theta2d_1_i", theta2d(1, 0, 1))
out("theta2d_1_hex", theta2d(1, mpf(1) / 2, h))
out("w_1_sqrt2_hex", theta2d(1, mpf(1) / 2, h) - sqrt(2) * theta2d(2, mpf(1) / 2, h))
out("sigma1_1_hex", sqrt(2) * mu(h))
out("yukawa_1_0_i", yukawa(1, 0, 0, 1))
c1 = (pi * exp(2 * pi) - 4 * exp(-6 * pi)) / 2
c2 = (sqrt(2) * exp(sqrt(3) * pi / 4) * (1 - mu(mpf(1) / 2)) - 4 * exp(-5 * sqrt(3) * pi / 4) * (1 + mu(mpf(1) / 4))) / (1 + mu(mpf(1) / 4))
c3 = (4 * sqrt(2) * pi * exp(pi) * (1 - mu(mpf(1) / 4)) - 16 * sqrt(2) * pi * exp(-7 * pi / 2) * (1 + mu(mpf(1) / 4))) / 64
out("beta0_case_a", c1)
out("beta0_case_b", c2)
out("beta0_case_c", c3)
ye = findroot(lambda y: 2 * (y * y - mpf(1) / 4) ** 2 - 4 / pi * y ** 3 * (1 + mpf("0.15")), 1.13)
out("y_epsilon", ye)


def double_sum(a, y, kind, R=30):
    s = mpf(0)
    for n in range(-R, R + 1):
        for m in range(-R, R + 1):
            sh = m + mpf(n) / 2
            w = n * n if kind == "A" else (n * n - sh * sh / (y * y)) ** 2
            s += w * exp(-pi * a * (y * n * n + sh * sh / y))
    return s


def p_function(a, y):
    r, p = y / a, y * a
    mid = 1 + 2 * exp(-pi * r) * (1 + nu(r))
    return (mid * (1 + nu(p)) / (2 * y) + a * pi * (1 + mu(p)) * mid
            + 2 * pi / a * exp(-pi * r) * (1 + nu(p)) * (1 + mu(r)))


out("A_1_1", double_sum(1, 1, "A"))
out("B_2_1", double_sum(2, 1, "B"))
out("B_2_1_over_leading", double_sum(2, 1, "B") / (2 * exp(-2 * pi)) - 1)
out("A_15_hex", double_sum(mpf("1.5"), h, "A"))
out("B_15_hex", double_sum(mpf("1.5"), h, "B"))
out("P_1_1", p_function(1, 1))

# W at the hexagonal point for the truncated critical weight used in the CLI example
out("w_1_14142135_hex", theta2d(1, mpf(1) / 2, h) - mpf("1.4142135") * theta2d(2, mpf(1) / 2, h))
