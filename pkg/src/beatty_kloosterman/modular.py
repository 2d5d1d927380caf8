"""Exact arithmetic modulo an odd prime.

Residues are plain Python ints in ``[0, p)``; arrays of residues are int64
numpy arrays when ``p < 2**31`` (products then fit in 63 bits) and object
arrays above that.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import PreconditionError, ZeroResidue

__all__ = [
    "ComplexSumValue",
    "PrimeModulus",
    "batch_inverse",
    "exp_residue",
    "is_prime",
    "mod_inverse",
]

# Deterministic for every n < 3.3e24, which covers the supported range 2**62.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

ROOT_TABLE_LIMIT = 2**22
_INT64_SAFE = 2**31
# Bound on the error of one tabulated root of unity, per component.
TERM_ERR = 2.0**-51


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test for ``1 <= n < 2**62``."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class ComplexSumValue:
    """A complex number with an upper bound ``err`` on its absolute error."""

    re: float
    im: float
    err: float = 0.0

    def __complex__(self):
        return complex(self.re, self.im)

    def __abs__(self):
        return math.hypot(self.re, self.im)

    def close_to(self, other, tol=0.0) -> bool:
        """True if the two values agree within their combined error plus ``tol``."""
        o = complex(other)
        slack = self.err + getattr(other, "err", 0.0) + tol
        return abs(complex(self) - o) <= slack


def _fsum_complex(values: np.ndarray) -> ComplexSumValue:
    """Correctly rounded sum of unit-modulus terms, each accurate to TERM_ERR."""
    n = len(values)
    if n == 0:
        return ComplexSumValue(0.0, 0.0, 0.0)
    re = math.fsum(values.real.tolist())
    im = math.fsum(values.imag.tolist())
    err = n * TERM_ERR * 2.0 + (abs(re) + abs(im)) * 2.0**-53
    return ComplexSumValue(re, im, err)


def _roots(p: int, t) -> np.ndarray:
    # e(t/p) = i**k * exp(i*theta) with k the nearest quarter turn, |theta| <= pi/4,
    # so cos/sin are evaluated on a short range with an exactly reduced argument.
    t = np.asarray(t)
    k = (4 * t + p // 2) // p
    num = np.asarray(4 * t - k * p)
    theta = (2.0 * math.pi) * (num.astype(np.float64) / (4.0 * p))
    c, s = np.cos(theta), np.sin(theta)
    k = np.asarray(k % 4, dtype=np.int64)
    re = np.select([k == 0, k == 1, k == 2], [c, -s, -c], s)
    im = np.select([k == 0, k == 1, k == 2], [s, c, -s], -c)
    return re + 1j * im


class PrimeModulus:
    """An odd prime ``3 <= p < 2**62`` with cached inverse and root tables.

    Immutable after construction; the lazily built tables never change once
    computed, so instances can be shared freely.
    """

    __slots__ = ("p", "__dict__")

    def __init__(self, p: int):
        p = int(p)
        if not 3 <= p < 2**62:
            raise PreconditionError(f"modulus must satisfy 3 <= p < 2**62, got {p}")
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return f"PrimeModulus({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeModulus) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeModulus", self.p))

    @property
    def small(self) -> bool:
        return self.p < _INT64_SAFE

    @cached_property
    def inverses(self) -> np.ndarray:
        """``inverses[m] = m^-1 mod p`` for ``1 <= m < p``; entry 0 is 0."""
        inv = batch_inverse(range(1, self.p), self)
        dtype = np.int64 if self.small else object
        return np.array([0] + inv, dtype=dtype)

    @cached_property
    def roots(self):
        """Table of e(t/p) for ``0 <= t < p``, or None above ROOT_TABLE_LIMIT."""
        if self.p > ROOT_TABLE_LIMIT:
            return None
        return _roots(self.p, np.arange(self.p, dtype=np.int64))

    def e(self, t) -> np.ndarray:
        """Vectorised e_p(t) for residues ``t`` already reduced mod p."""
        table = self.roots
        if table is not None:
            return table[np.asarray(t, dtype=np.int64)]
        # object ints above the int64-safe range so 4*t cannot overflow
        return _roots(self.p, np.asarray(t, dtype=np.int64 if self.small else object))

    def array(self, values) -> np.ndarray:
        dtype = np.int64 if self.small else object
        return np.asarray([int(v) % self.p for v in values], dtype=dtype)

    def phase_sum(self, phases) -> ComplexSumValue:
        """Sum of e_p(t) over an array of residues."""
        return _fsum_complex(self.e(phases))


def _modulus(p) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


def mod_inverse(m: int, p) -> int:
    """The unique ``1 <= mbar < p`` with ``m * mbar == 1 (mod p)``."""
    p = _modulus(p).p
    if m % p == 0:
        raise ZeroResidue(f"{m} is divisible by {p}")
    return pow(m, -1, p)


def batch_inverse(ms: Iterable[int], p) -> list:
    """Inverses of all ``ms`` modulo p using prefix products and one inversion."""
    p = _modulus(p).p
    ms = [int(m) % p for m in ms]
    if not ms:
        return []
    prefix = [0] * len(ms)
    acc = 1
    for i, m in enumerate(ms):
        if m == 0:
            raise ZeroResidue(f"element {i} is divisible by {p}", index=i)
        prefix[i] = acc
        acc = acc * m % p
    inv = pow(acc, -1, p)
    out = [0] * len(ms)
    for i in range(len(ms) - 1, -1, -1):
        out[i] = inv * prefix[i] % p
        inv = inv * ms[i] % p
    return out


def exp_residue(p, t: int) -> ComplexSumValue:
    """e_p(t) = exp(2 pi i t / p) with ``t`` reduced mod p first."""
    mod = _modulus(p)
    z = complex(_roots(mod.p, np.array([int(t) % mod.p], dtype=np.int64 if mod.small else object))[0])
    return ComplexSumValue(z.real, z.imag, 2 * TERM_ERR)


def mulmod(a, b, p: PrimeModulus) -> np.ndarray:
    """Elementwise ``a * b mod p`` without int64 overflow."""
    if p.small:
        return (np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)) % p.p
    a = np.asarray(a, dtype=object)
    return (a * np.asarray(b, dtype=object)) % p.p

