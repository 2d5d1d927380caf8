"""Points on modular hyperbolas ``m * mt == z (mod p)`` and their least max.

``log`` defaults to the natural logarithm everywhere; pass ``log_base=2``
for sensitivity studies.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .beatty import BeattyWindow, _check_slope, window_for
from .errors import RangeError, ZeroResidue
from .expsums import _mod
from .irrational import as_form

__all__ = [
    "DetectorReport",
    "HyperbolaPoint",
    "TheoremBound",
    "detector",
    "exponent_check",
    "hyperbola_points",
    "least_max",
    "least_max_beatty",
    "least_max_table",
    "theorem_bound",
    "theorem1_bound",
]


def _log(x: float, base) -> float:
    if base in (None, "e", math.e):
        return math.log(x)
    return math.log(x, float(base))


@dataclass(frozen=True)
class HyperbolaPoint:
    m: int
    m_tilde: int
    z: int
    in_beatty: Optional[bool] = None

    @property
    def height(self) -> int:
        return max(self.m, self.m_tilde)


def _check_z(mod, z):
    if z % mod.p == 0:
        raise ZeroResidue(f"p = {mod.p} divides z = {z}")
    return z % mod.p


def hyperbola_points(p, z: int) -> List[HyperbolaPoint]:
    """All ``p - 1`` points ``(m, mt)`` in ``[1, p)^2`` with ``m*mt == z``, ordered by m."""
    mod = _mod(p)
    z = _check_z(mod, z)
    inv = mod.inverses
    return [HyperbolaPoint(m, int(z * int(inv[m]) % mod.p), z) for m in range(1, mod.p)]


def least_max(p, z: int) -> Tuple[int, HyperbolaPoint]:
    """``min max(m, mt)`` over the hyperbola, scanning m upwards with early exit."""
    mod = _mod(p)
    z = _check_z(mod, z)
    inv = mod.inverses
    pp = mod.p
    best, arg = pp, 1
    m = 1
    while m < best:
        mt = z * int(inv[m]) % pp
        h = mt if mt > m else m
        if h < best:
            best, arg = h, m
        m += 1
    return best, HyperbolaPoint(arg, z * int(inv[arg]) % pp, z)


def least_max_table(p) -> np.ndarray:
    """``F[z] = least_max(p, z)`` for every z at once (``F[0]`` unused).

    Grows the square ``[1, s]^2`` one layer at a time and records the first
    layer that reaches each residue ``m*mt``.
    """
    mod = _mod(p)
    pp = mod.p
    F = np.zeros(pp, dtype=np.int64)
    missing = pp - 1
    for s in range(1, pp):
        j = np.arange(1, s + 1, dtype=np.int64)
        zs = np.unique(s * j % pp)
        fresh = zs[F[zs] == 0]
        F[fresh] = s
        missing -= fresh.size
        if missing == 0:
            break
    return F


def least_max_beatty(p, z: int, alpha, beta, window: Optional[BeattyWindow] = None):
    """Least ``max(m, mt)`` with ``m`` in B(alpha, beta), or None when no member is below p.

    Returns ``(F, witness)``.  ``window`` may carry precomputed members below p.
    """
    mod = _mod(p)
    z = _check_z(mod, z)
    if window is None:
        window = window_for(alpha, beta, mod.p - 1)
    members = window.members_upto(mod.p - 1)
    if members.size == 0:
        return None
    inv = mod.inverses
    pp = mod.p
    best, arg = pp, None
    for m in members.tolist():
        if m >= best:
            break
        mt = z * int(inv[m]) % pp
        h = mt if mt > m else m
        if h < best:
            best, arg = h, m
    return best, HyperbolaPoint(arg, z * int(inv[arg]) % pp, z, True)


def theorem1_bound(p, log_base="e") -> float:
    pp = _mod(p).p
    return 2 * _log(pp, log_base) * pp**0.75


@dataclass(frozen=True)
class DetectorReport:
    p: int
    alpha: object
    beta: object
    M: int
    lhs: float             # max over 1 <= y < p
    lhs_with_zero: float   # max over 0 <= y < p (the y = 0 term is the member count)
    rhs: float
    holds: bool
    degenerate: bool
    members: int


def detector(p, alpha, beta, M: int, log_base="e") -> DetectorReport:
    """Sufficient condition for ``F(z mod p) <= M`` for every z.

    ``lhs = max_y |sum_{m <= M, m in B} e_p(y*mbar)|`` via one FFT of the
    inverse-indicator vector; ``rhs = M(M - beta - alpha) / (p log(p) alpha)``.
    """
    mod = _mod(p)
    if not 1 <= M < mod.p:
        raise RangeError(f"M must satisfy 1 <= M < p = {mod.p}")
    _check_slope(alpha)
    a, b = float(as_form(alpha)), float(as_form(beta))
    members = window_for(alpha, beta, M).values
    counts = np.zeros(mod.p, dtype=np.float64)
    np.add.at(counts, mod.inverses[members], 1.0)
    mags = np.abs(np.fft.fft(counts))
    lhs = float(mags[1:].max())
    rhs = M * (M - b - a) / (mod.p * _log(mod.p, log_base) * a)
    degenerate = rhs <= 0
    holds = (not degenerate) and lhs <= rhs
    return DetectorReport(mod.p, alpha, beta, M, lhs, float(members.size), rhs, holds, degenerate, int(members.size))


EXP_N = Fraction(684, 727)


def exponent_check() -> Fraction:
    """Exact power of p left in the simplified detector condition at the chosen N.

    ``(-2 + 297/512) * 684/727 + 1 + 43/128``.
    """
    return (Fraction(-2) + Fraction(297, 512)) * EXP_N + 1 + Fraction(43, 128)


@dataclass(frozen=True)
class TheoremBound:
    N: int
    bound: float
    simplified_lhs: float
    trivial_at_scale: bool


def theorem_bound(p, alpha, beta, log_base="e") -> TheoremBound:
    """Quantities behind the final bound on the least Beatty-restricted point.

    ``N = floor(p^(684/727) log p)``, ``bound = alpha p^(684/727) log p + beta``
    and ``simplified_lhs = log(p) N^(-2+297/512) p^(1+43/128)``.
    """
    pp = int(p)
    if pp < 3:
        raise RangeError("p must be >= 3")
    a, b = float(as_form(alpha)), float(as_form(beta))
    lg = _log(pp, log_base)
    base = pp ** float(EXP_N) * lg
    N = math.floor(base)
    bound = a * base + b
    simplified = lg * N ** (-2 + 297 / 512) * pp ** (1 + 43 / 128) if N > 0 else math.inf
    return TheoremBound(N, bound, simplified, bound >= pp)
