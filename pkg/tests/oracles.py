"""Independent reference computations for the test suite.

Nothing here imports the package: reals come from ``decimal`` at high
precision, sums from plain ``cmath`` loops, inverses from Fermat.
"""
import cmath
import math
from decimal import Decimal, getcontext

getcontext().prec = 120


def dsqrt(d):
    return Decimal(d).sqrt()


def dpi():
    # Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    def atan_inv(x):
        x = Decimal(x)
        total, term, k, x2 = Decimal(0), 1 / x, 0, x * x
        while abs(term) > Decimal(10) ** -115:
            total += term / (2 * k + 1) * (-1) ** k
            term /= x2
            k += 1
        return total
    return 16 * atan_inv(5) - 4 * atan_inv(239)


def de():
    total, term, k = Decimal(0), Decimal(1), 0
    while term > Decimal(10) ** -115:
        total += term
        k += 1
        term /= k
    return total


NAMED = {
    "pi": dpi,
    "e": de,
    "golden": lambda: (1 + dsqrt(5)) / 2,
}


def value(spec):
    if spec in NAMED:
        return NAMED[spec]()
    if spec.startswith("sqrt:"):
        return dsqrt(int(spec[5:]))
    if "/" in spec:
        num, den = spec.split("/")
        return Decimal(num) / Decimal(den)
    return Decimal(spec)


def floor_oracle(alpha, beta, n):
    return int((n * value(alpha) + value(beta)).to_integral_value(rounding="ROUND_FLOOR"))


def frac_oracle(alpha, beta, n):
    x = n * value(alpha) + value(beta)
    return x - x.to_integral_value(rounding="ROUND_FLOOR")


def ep_exact(t, p):
    """e(t/p) via Decimal Taylor series, good to ~100 digits."""
    x = 2 * dpi() * (t % p) / p
    c, s, term, k = Decimal(0), Decimal(0), Decimal(1), 0
    while abs(term) > Decimal(10) ** -110 or k < 4:
        if k % 4 == 0:
            c += term
        elif k % 4 == 1:
            s += term
        elif k % 4 == 2:
            c -= term
        else:
            s -= term
        k += 1
        term = term * x / k
    return complex(float(c), float(s))


def inv(m, p):
    return pow(m, p - 2, p)


def ep(t, p):
    return cmath.exp(2j * math.pi * (t % p) / p)


def kloosterman(p, x, y):
    return sum(ep(x * m + y * inv(m, p), p) for m in range(1, p))


def correlation(p, x, y, w):
    return sum(ep(x * inv(m, p) + y * inv(m + w, p), p)
               for m in range(p) if m % p and (m + w) % p)


def xu_count(p, u):
    """Direct loop over m in {1..p}^4 with A(m, u) = sum_k (-1)^k inv(m_k + u)."""
    def A(m, u):
        if any((mk + u) % p == 0 for mk in m):
            return None  # inadmissible: A is 1 by convention, never 0
        return sum((-1) ** k * inv(mk + u, p) for k, mk in enumerate(m, 1)) % p
    count = 0
    rng = range(1, p + 1)
    for m1 in rng:
        for m2 in rng:
            for m3 in rng:
                for m4 in rng:
                    m = (m1, m2, m3, m4)
                    a0, au = A(m, 0), A(m, u)
                    if a0 == 0 and au == 0:
                        count += 1
    return count
