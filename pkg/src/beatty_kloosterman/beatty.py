"""Beatty sequences ``B(alpha, beta) = {floor(n*alpha + beta) : n >= 1}``.

Also holds the pigeonhole shift finder and the set splitting used in the
averaging argument for Kloosterman sums along Beatty sequences.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .errors import PreconditionError
from .irrational import (
    START_BITS,
    LinearForm,
    as_form,
    batch_enclose,
    batch_floor,
    batch_frac_less,
    certified_floor,
    certified_sign,
    require_irrational,
    warn_if_rational,
)

__all__ = [
    "BeattyWindow",
    "GammaCertificate",
    "SplitSets",
    "contains",
    "count_upto",
    "enumerate_beatty",
    "find_gamma",
    "floor_splitting_violations",
    "max_residue_class_count",
    "split_sets",
]


def _check_slope(alpha):
    if certified_sign(as_form(alpha) - 1) <= 0:
        raise PreconditionError(f"Beatty slope must be > 1, got {alpha}")
    warn_if_rational(alpha)


@dataclass(frozen=True)
class BeattyWindow:
    """The first N terms of a Beatty sequence, strictly increasing."""

    alpha: object
    beta: object
    N: int
    values: np.ndarray

    def __contains__(self, m) -> bool:
        i = np.searchsorted(self.values, m)
        return bool(i < len(self.values) and self.values[i] == m)

    def __len__(self):
        return self.N

    def members_upto(self, M: int) -> np.ndarray:
        return self.values[: np.searchsorted(self.values, M, side="right")]


def enumerate_beatty(alpha, beta, N: int) -> BeattyWindow:
    """``floor(n*alpha + beta)`` for ``n = 1..N``, every floor certified."""
    _check_slope(alpha)
    if N < 0:
        raise PreconditionError("N must be non-negative")
    vals = batch_floor(alpha, beta, range(1, N + 1))
    return BeattyWindow(alpha, beta, N, np.array(vals, dtype=np.int64))


def _index_estimate(alpha, beta, m: int) -> int:
    # rough floor((m - beta) / alpha) from enclosures; callers search around it
    bits = START_BITS + max(m, 1).bit_length()
    a_lo, _ = as_form(alpha).enclose(bits)
    b_lo, _ = as_form(beta).enclose(bits)
    return ((m << bits) - b_lo) // a_lo


def contains(alpha, beta, m: int) -> bool:
    """Whether ``m`` is in B(alpha, beta), without enumerating the sequence.

    The only candidate index is ``n = ceil((m - beta)/alpha)``; its neighbours
    are also tested to absorb the rounding of the estimate.
    """
    _check_slope(alpha)
    n0 = _index_estimate(alpha, beta, m)
    cands = [n for n in range(n0 - 1, n0 + 3) if n >= 1]
    return m in batch_floor(alpha, beta, cands)


def count_upto(alpha, beta, M: int) -> int:
    """``#{m <= M : m in B(alpha, beta)}``, i.e. the largest n with floor(n*alpha+beta) <= M."""
    _check_slope(alpha)
    if M < 0:
        raise PreconditionError("M must be non-negative")
    fa, fb = as_form(alpha), as_form(beta)
    n = max(0, _index_estimate(alpha, beta, M + 1))
    while n >= 1 and certified_floor(fa * n + fb) > M:
        n -= 1
    while certified_floor(fa * (n + 1) + fb) <= M:
        n += 1
    return n


@dataclass(frozen=True)
class GammaCertificate:
    """A shift gamma with ``#{k <= K : {k*alpha + gamma} < Delta} = hit_count``."""

    gamma: LinearForm
    K: int
    Delta: Fraction
    hit_count: int
    hits: Tuple[int, ...]
    anchor: int  # gamma = ceil(anchor*alpha) - anchor*alpha

    @property
    def guaranteed(self) -> int:
        return math.ceil(Fraction(1, 2) * self.K * self.Delta)

    def __float__(self):
        return float(self.gamma)


def _gamma_for(alpha, k: int) -> LinearForm:
    if k == 0:
        return as_form(0)
    ka = as_form(alpha) * k
    return certified_floor(ka) + 1 - ka


def find_gamma(alpha, K: int, Delta) -> GammaCertificate:
    """Pigeonhole shift: the window position with the most hits.

    Candidates are ``gamma = -{c*alpha} mod 1`` for ``c = 0..K`` (the window
    ``[{c*alpha}, {c*alpha} + Delta)`` on the circle); ties go to the
    smallest ``c``.  The hit set of the chosen gamma is certified exactly.
    """
    require_irrational(alpha)
    Delta = Fraction(Delta)
    if K < 1:
        raise PreconditionError("K must be >= 1")
    if not 0 < Delta <= 1:
        raise PreconditionError("Delta must lie in (0, 1]")
    bits = START_BITS + K.bit_length()
    scale = 1 << bits
    lo, hi = batch_enclose(alpha, 0, range(K + 1), bits)
    fr = [((l + h) // 2) % scale for l, h in zip(lo, hi)]
    pts = sorted(fr[1:])
    ext = pts + [v + scale for v in pts]
    width = math.ceil(Delta * scale)
    best_c, best = 0, -1
    for c in range(K + 1):
        s = fr[c]
        cnt = bisect_left(ext, s + width) - bisect_left(ext, s)
        if cnt > best:
            best_c, best = c, cnt
    gamma = _gamma_for(alpha, best_c)
    flags = batch_frac_less(alpha, gamma, range(1, K + 1), Delta)
    hits = tuple(k for k, f in zip(range(1, K + 1), flags) if f)
    return GammaCertificate(gamma, K, Delta, len(hits), hits, best_c)


@dataclass(frozen=True)
class SplitSets:
    n_set: List[int]
    n_complement_size: int
    k_set: List[int]


def split_sets(alpha, beta, gamma, Delta, N: int, K: int) -> SplitSets:
    """``{n <= N : {n*alpha + beta - gamma} < 1 - Delta}`` and ``{k <= K : {k*alpha + gamma} < Delta}``."""
    require_irrational(alpha)
    Delta = Fraction(Delta)
    if not 0 < Delta < 1:
        raise PreconditionError("Delta must lie in (0, 1) for the split")
    if N < 1 or K < 1:
        raise PreconditionError("N and K must be positive")
    g = as_form(gamma)
    shift = as_form(beta) - g
    n_flags = batch_frac_less(alpha, shift, range(1, N + 1), 1 - Delta)
    k_flags = batch_frac_less(alpha, g, range(1, K + 1), Delta)
    n_set = [n for n, f in zip(range(1, N + 1), n_flags) if f]
    k_set = [k for k, f in zip(range(1, K + 1), k_flags) if f]
    return SplitSets(n_set, N - len(n_set), k_set)


def floor_splitting_violations(alpha, beta, gamma, n_set, k_set) -> List[Tuple[int, int]]:
    """Pairs (n, k) where floor((n+k)a+b) != floor(na+b-g) + floor(ka+g)."""
    g = as_form(gamma)
    n_set, k_set = list(n_set), list(k_set)
    sums = sorted({n + k for n in n_set for k in k_set})
    whole = dict(zip(sums, batch_floor(alpha, beta, sums)))
    left = dict(zip(n_set, batch_floor(alpha, as_form(beta) - g, n_set)))
    right = dict(zip(k_set, batch_floor(alpha, g, k_set)))
    return [(n, k) for n in n_set for k in k_set if whole[n + k] != left[n] + right[k]]


def max_residue_class_count(alpha, beta, gamma, n_set, p: int) -> int:
    """``max_s #{n in n_set : floor(n*alpha + beta - gamma) == s (mod p)}``."""
    if not n_set:
        return 0
    fl = batch_floor(alpha, as_form(beta) - as_form(gamma), list(n_set))
    counts = {}
    for f in fl:
        counts[f % p] = counts.get(f % p, 0) + 1
    return max(counts.values())


def window_for(alpha, beta, upto: int) -> BeattyWindow:
    """All Beatty members ``<= upto``."""
    return enumerate_beatty(alpha, beta, count_upto(alpha, beta, upto))

