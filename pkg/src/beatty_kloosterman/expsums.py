"""Kloosterman-type exponential sums modulo a prime.

Index ranges: every sum written over ``m < p`` that involves an inverse runs
over ``1 <= m <= p - 1``.  All sums return ``ComplexSumValue`` with an error
bound from compensated (``math.fsum``) accumulation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from .beatty import _check_slope
from .errors import DuplicateResidue, PreconditionError, SizeLimit, YDivisible
from .irrational import batch_floor
from .modular import ROOT_TABLE_LIMIT, ComplexSumValue, PrimeModulus, batch_inverse, mulmod

__all__ = [
    "CorrelationAverage",
    "XuCount",
    "XuTotal",
    "beatty_kloosterman",
    "completion_gap",
    "correlation_average",
    "correlation_sum",
    "count_Xu",
    "fourth_moment_sigma",
    "incomplete_kloosterman",
    "kloosterman",
    "kloosterman_original_bound",
    "weil_bound",
    "xu_counts",
    "xu_total",
]

EXHAUSTIVE_LIMIT = 31
STRUCTURED_LIMIT = 211


def _mod(p) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else _cached_modulus(int(p))


@lru_cache(maxsize=256)
def _cached_modulus(p: int) -> PrimeModulus:
    return PrimeModulus(p)


def _inverses_of(mod: PrimeModulus, residues: np.ndarray) -> np.ndarray:
    if mod.p <= ROOT_TABLE_LIMIT:
        return mod.inverses[residues]
    return np.array(batch_inverse(residues.tolist(), mod), dtype=residues.dtype)


def _units(mod: PrimeModulus, upto: Optional[int] = None) -> np.ndarray:
    hi = mod.p - 1 if upto is None else upto
    return np.arange(1, hi + 1, dtype=np.int64 if mod.small else object)


def kloosterman(p, x: int, y: int) -> ComplexSumValue:
    """``Kl_p(x, y) = sum_{m=1}^{p-1} e_p(x*m + y*mbar)``."""
    return incomplete_kloosterman(p, _mod(p).p - 1, x, y)


def incomplete_kloosterman(p, M: int, x: int, y: int) -> ComplexSumValue:
    """``sum_{m=1}^{M} e_p(x*m + y*mbar)`` for ``0 <= M <= p-1``."""
    mod = _mod(p)
    if not 0 <= M <= mod.p - 1:
        raise PreconditionError(f"M must lie in [0, {mod.p - 1}]")
    m = _units(mod, M)
    inv = _inverses_of(mod, m)
    phases = (mulmod(m, x % mod.p, mod) + mulmod(inv, y % mod.p, mod)) % mod.p
    return mod.phase_sum(phases)


def weil_bound(p, x: int, y: int) -> float:
    pp = _mod(p).p
    g = pp if x % pp == 0 and y % pp == 0 else 1
    return 2.0 * math.sqrt(pp) * math.sqrt(g)


def kloosterman_original_bound(p, x: int, y: int) -> float:
    pp = _mod(p).p
    g = pp if x % pp == 0 and y % pp == 0 else 1
    return pp**0.75 * g**0.25


def beatty_kloosterman(p, alpha, beta, N: int, x: int, y: int) -> ComplexSumValue:
    """Kloosterman sum along ``floor(n*alpha + beta)``, ``n <= N``, skipping multiples of p.

    Floors are reduced mod p before inversion.
    """
    mod = _mod(p)
    if y % mod.p == 0:
        raise YDivisible(f"p = {mod.p} divides y = {y}")
    if not 0 <= N <= mod.p:
        raise PreconditionError(f"N must lie in [0, p], got {N}")
    if N == 0:
        return ComplexSumValue(0.0, 0.0, 0.0)
    _check_slope(alpha)
    floors = batch_floor(alpha, beta, range(1, N + 1))
    return _beatty_sum(mod, floors, x, y)


def _beatty_sum(mod: PrimeModulus, floors, x: int, y: int) -> ComplexSumValue:
    r = mod.array(floors)
    r = r[r != 0]
    inv = _inverses_of(mod, r)
    phases = (mulmod(r, x % mod.p, mod) + mulmod(inv, y % mod.p, mod)) % mod.p
    return mod.phase_sum(phases)


def completion_gap(p, M: int, y: int):
    """Both sides of the completing-technique bound for ``sum_{m<=M} e_p(y*mbar)``.

    Returns ``(lhs, rhs)`` with ``lhs = |incomplete - (M/p) * complete|`` and
    ``rhs = (1 + log p) * max_{1<=x<=p} |Kl_p(x, y)|``.
    """
    mod = _mod(p)
    inc = complex(incomplete_kloosterman(mod, M, 0, y))
    full = complex(kloosterman(mod, 0, y))
    lhs = abs(inc - M / mod.p * full)
    rhs = (1 + math.log(mod.p)) * max(abs(kloosterman(mod, x, y)) for x in range(1, mod.p + 1))
    return lhs, rhs


def correlation_sum(p, x: int, y: int, w: int) -> ComplexSumValue:
    """``S(x,y,w;p) = sum_{m<p, p does not divide m+w} e_p(x*mbar + y*(m+w)bar)``."""
    mod = _mod(p)
    m = _units(mod)
    mw = (m + w % mod.p) % mod.p
    keep = mw != 0
    m, mw = m[keep], mw[keep]
    phases = (mulmod(mod.inverses[m] if mod.p <= ROOT_TABLE_LIMIT else _inverses_of(mod, m), x % mod.p, mod)
              + mulmod(_inverses_of(mod, mw), y % mod.p, mod)) % mod.p
    return mod.phase_sum(phases)


@dataclass(frozen=True)
class CorrelationAverage:
    sum_abs: float
    fourth_sum: float
    size: int
    p: int

    @property
    def prop1_bound(self) -> float:
        return self.size**0.75 * self.p

    @property
    def prop2_bound(self) -> float:
        return float(self.p) ** 4

    @property
    def holder_rhs(self) -> float:
        return self.size**0.75 * self.fourth_sum**0.25

    @property
    def prop1_ratio(self) -> float:
        return self.sum_abs / self.prop1_bound if self.size else 0.0

    @property
    def prop2_ratio(self) -> float:
        return self.fourth_sum / self.prop2_bound


def correlation_average(p, x: int, y: int, W: Iterable[int]) -> CorrelationAverage:
    """``sum |S(x,y,w;p)|`` and ``sum |S(x,y,w;p)|^4`` over pairwise incongruent w."""
    mod = _mod(p)
    if y % mod.p == 0:
        raise YDivisible(f"p = {mod.p} divides y = {y}")
    W = list(W)
    seen = set()
    for w in W:
        if w % mod.p in seen:
            raise DuplicateResidue(f"{w} repeats a residue mod {mod.p}")
        seen.add(w % mod.p)
    mags = [abs(correlation_sum(mod, x, y, w)) for w in W]
    return CorrelationAverage(math.fsum(mags), math.fsum(a**4 for a in mags), len(W), mod.p)


def fourth_moment_sigma(p) -> float:
    """``sum_{r<=p} sum_{t<=p} sum_{1<=u<p} |S(r,t,u;p)|^4`` by direct evaluation."""
    mod = _mod(p)
    if mod.p > EXHAUSTIVE_LIMIT:
        raise SizeLimit(f"fourth moment is limited to p <= {EXHAUSTIVE_LIMIT}")
    terms = []
    for r in range(1, mod.p + 1):
        for t in range(1, mod.p + 1):
            for u in range(1, mod.p):
                terms.append(abs(correlation_sum(mod, r, t, u)) ** 4)
    return math.fsum(terms)


@dataclass(frozen=True)
class XuCount:
    p: int
    u: int
    count: int


@dataclass(frozen=True)
class XuTotal:
    p: int
    total: int          # sum over 1 <= u <= p
    total_below_p: int  # sum over 1 <= u < p
    count_bound: int    # p * (2p^2 + 4(p-1)^2)

    @property
    def within_bound(self) -> bool:
        return self.total <= self.count_bound and self.total_below_p <= self.count_bound


def _inv_or_marker(p: int) -> np.ndarray:
    # index r in [0, p]: inverse of r mod p, or -1 when p | r
    inv = np.full(p + 1, -1, dtype=np.int64)
    inv[1:p] = _mod(p).inverses[1:p]
    return inv


def _xu_exhaustive(p: int, u: int) -> int:
    inv = _inv_or_marker(p)
    m = np.arange(1, p + 1)
    a0 = inv[m % p]
    au = inv[(m + u) % p]
    ok = (a0 >= 0) & (au >= 0)
    a0, au = a0[ok], au[ok]
    # A(m, u) = -i1 + i2 - i3 + i4; the 4-fold grid is p^4 entries at most
    s0 = (-a0[:, None, None, None] + a0[None, :, None, None]
          - a0[None, None, :, None] + a0[None, None, None, :]) % p
    su = (-au[:, None, None, None] + au[None, :, None, None]
          - au[None, None, :, None] + au[None, None, None, :]) % p
    return int(np.count_nonzero((s0 == 0) & (su == 0)))


@lru_cache(maxsize=64)
def _xu_structured(p: int) -> tuple:
    """Counts ``#X_u`` for u = 1..p from the solution structure.

    Solutions of the u = 0 congruence are parametrised by (m2, m3, m4) through
    ``m1 * (m2 m3 + m3 m4 - m2 m4) == m2 m3 m4``.  Trivial ones
    ({m1, m3} = {m2, m4}) lie in every admissible X_u; any other lies in X_p
    and in at most one more X_u, the non-zero root of
    ``(s1 - s2) u^2 + 2 (q1 - q2) u`` with s, q the pair sums and products.
    """
    inv = _mod(p).inverses
    r = np.arange(1, p, dtype=np.int64)
    m2, m3, m4 = (a.ravel() for a in np.meshgrid(r, r, r, indexing="ij"))
    c = (m2 * m3 + m3 * m4 - m2 * m4) % p
    ok = c != 0
    m2, m3, m4, c = m2[ok], m3[ok], m4[ok], c[ok]
    m1 = (m2 * m3 % p) * m4 % p * inv[c] % p
    s1, s2 = (m1 + m3) % p, (m2 + m4) % p
    q1, q2 = m1 * m3 % p, m2 * m4 % p
    trivial = (s1 == s2) & (q1 == q2)

    counts = np.zeros(p + 1, dtype=np.int64)  # index u in 1..p
    # trivial: every u except the forbidden -m1, -m3
    t1, t3 = m1[trivial], m3[trivial]
    counts[1:] += int(trivial.sum())
    np.subtract.at(counts, p - t1, 1)
    np.subtract.at(counts, (p - t3)[t3 != t1], 1)

    nt = ~trivial
    counts[p] += int(nt.sum())
    ds = (s1 - s2)[nt] % p
    dq = (q1 - q2)[nt] % p
    has = ds != 0
    ustar = (-2 * dq[has] % p) * inv[ds[has]] % p
    mm = np.stack([m1[nt][has], m2[nt][has], m3[nt][has], m4[nt][has]])
    admissible = (ustar != 0) & np.all((mm + ustar) % p != 0, axis=0)
    np.add.at(counts, ustar[admissible], 1)
    return tuple(int(v) for v in counts[1:])


def xu_counts(p, mode: str = "structured") -> list:
    """``[#X_1, ..., #X_p]``."""
    pp = _mod(p).p
    if mode == "exhaustive":
        if pp > EXHAUSTIVE_LIMIT:
            raise SizeLimit(f"exhaustive X_u scan is limited to p <= {EXHAUSTIVE_LIMIT}")
        return [_xu_exhaustive(pp, u) for u in range(1, pp + 1)]
    if mode != "structured":
        raise ValueError(f"unknown mode {mode!r}")
    if pp > STRUCTURED_LIMIT:
        raise SizeLimit(f"structured X_u count is limited to p <= {STRUCTURED_LIMIT}")
    return list(_xu_structured(pp))


def count_Xu(p, u: int, mode: str = "exhaustive") -> XuCount:
    """``#{m in {1..p}^4 : A(m,0) == A(m,u) == 0 mod p}``."""
    pp = _mod(p).p
    if not 1 <= u <= pp:
        raise PreconditionError(f"u must lie in [1, {pp}]")
    if mode == "exhaustive":
        if pp > EXHAUSTIVE_LIMIT:
            raise SizeLimit(f"exhaustive X_u scan is limited to p <= {EXHAUSTIVE_LIMIT}")
        return XuCount(pp, u, _xu_exhaustive(pp, u))
    return XuCount(pp, u, xu_counts(pp, mode)[u - 1])


def xu_total(p, mode: str = "exhaustive") -> XuTotal:
    pp = _mod(p).p
    counts = xu_counts(pp, mode)
    bound = pp * (2 * pp * pp + 4 * (pp - 1) ** 2)
    return XuTotal(pp, sum(counts), sum(counts[:-1]), bound)
