"""Extreme and star discrepancy of finite point sets in [0, 1).

Intervals are right-open ``[x, y)``.  The supremum over such intervals is
often a limit, e.g. ``[z, z + eps)`` around a single point; witnesses carry
flags saying which endpoint is approached rather than attained.
"""
from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .errors import SizeLimit
from .irrational import batch_frac, warn_if_rational

__all__ = [
    "DiscrepancyValue",
    "PointSet",
    "beatty_discrepancy",
    "beatty_points",
    "brute_force_discrepancy",
    "extreme_discrepancy",
    "star_discrepancy",
]

BRUTE_FORCE_LIMIT = 10**4


@dataclass(frozen=True)
class PointSet:
    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64).ravel()
        if pts.size == 0:
            raise ValueError("a point set needs at least one point")
        if np.any(pts < 0) or np.any(pts >= 1):
            raise ValueError("points must lie in [0, 1)")
        object.__setattr__(self, "points", pts)

    @property
    def N(self) -> int:
        return self.points.size

    def sorted(self) -> np.ndarray:
        # stable sort: ties keep their original order
        return self.points[np.argsort(self.points, kind="stable")]


def _as_points(ps) -> PointSet:
    return ps if isinstance(ps, PointSet) else PointSet(np.asarray(ps, dtype=np.float64))


@dataclass(frozen=True)
class DiscrepancyValue:
    """``value`` with a witness interval ``[x, y)``.

    ``x_limit`` means the left end is ``x + eps`` and ``y_limit`` means the
    right end is ``y + eps``, with ``eps -> 0+``.
    """

    value: float
    x: float
    y: float
    x_limit: bool = False
    y_limit: bool = False

    def __float__(self):
        return self.value


def extreme_discrepancy(ps) -> DiscrepancyValue:
    """Closed form ``1/N + max(i/N - z_i) - min(i/N - z_i)`` over the sorted points."""
    ps = _as_points(ps)
    z = ps.sorted()
    n = z.size
    d = np.arange(1, n + 1) / n - z
    i, j = int(np.argmax(d)), int(np.argmin(d))
    # regrouped so a single point (i == j) gives exactly 1/N
    value = (i - j + 1) / n - (z[i] - z[j])
    if i >= j:
        # closed run z_j..z_i: [z_j, z_i + eps)
        return DiscrepancyValue(float(value), float(z[j]), float(z[i]), False, True)
    # open gap between z_i and z_j: [z_i + eps, z_j)
    return DiscrepancyValue(float(value), float(z[i]), float(z[j]), True, False)


def star_discrepancy(ps) -> DiscrepancyValue:
    """``1/(2N) + max |z_i - (2i-1)/(2N)|`` over anchored intervals ``[0, y)``."""
    ps = _as_points(ps)
    z = ps.sorted()
    n = z.size
    dev = z - (2 * np.arange(1, n + 1) - 1) / (2 * n)
    i = int(np.argmax(np.abs(dev)))
    value = 1.0 / (2 * n) + abs(dev[i])
    # positive deviation: [0, z_i) holds too few points; negative: [0, z_i + eps) too many
    return DiscrepancyValue(float(value), 0.0, float(z[i]), False, bool(dev[i] < 0))


def brute_force_discrepancy(ps) -> DiscrepancyValue:
    """Sup over every critical interval, quadratic in N.

    Left ends range over ``0``, ``z``, ``z + eps``; right ends over ``z``,
    ``z + eps``, ``1``.  Counts come from ``searchsorted`` so the result does
    not share code with the closed form.
    """
    ps = _as_points(ps)
    n = ps.N
    if n > BRUTE_FORCE_LIMIT:
        raise SizeLimit(f"brute force is limited to {BRUTE_FORCE_LIMIT} points, got {n}")
    z = np.sort(ps.points)
    u = np.unique(z)
    below = np.searchsorted(z, u, side="left")   # points < u
    upto = np.searchsorted(z, u, side="right")   # points <= u
    # (value, plus flag, #points strictly left of the endpoint)
    xv = np.concatenate([[0.0], u, u])
    xp = np.concatenate([[False], np.zeros(u.size, bool), np.ones(u.size, bool)])
    xc = np.concatenate([[0], below, upto])
    yv = np.concatenate([u, u, [1.0]])
    yp = np.concatenate([np.zeros(u.size, bool), np.ones(u.size, bool), [False]])
    yc = np.concatenate([below, upto, [n]])

    best = (-1.0, 0.0, 0.0, False, False)
    step = max(1, 2_000_000 // max(yv.size, 1))
    for s in range(0, xv.size, step):
        X, XP, XC = xv[s:s + step, None], xp[s:s + step, None], xc[s:s + step, None]
        valid = (yv[None, :] > X) | ((yv[None, :] == X) & yp[None, :] & ~XP)
        dev = np.abs((yc[None, :] - XC) / n - (yv[None, :] - X))
        dev = np.where(valid, dev, -1.0)
        k = np.unravel_index(int(np.argmax(dev)), dev.shape)
        if dev[k] > best[0]:
            a, b = k[0] + s, k[1]
            best = (float(dev[k]), float(xv[a]), float(yv[b]), bool(xp[a]), bool(yp[b]))
    return DiscrepancyValue(*best)


def beatty_points(alpha, beta, N: int) -> PointSet:
    """Fractional parts ``{n*alpha + beta}`` for ``n = 1..N`` (floors certified)."""
    _, fr = batch_frac(alpha, beta, range(1, N + 1))
    return PointSet(np.array(fr, dtype=np.float64))


def beatty_discrepancy(alpha, beta, N: int) -> DiscrepancyValue:
    """Extreme discrepancy of ``({n*alpha + beta})_{n <= N}``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    warn_if_rational(alpha)
    return extreme_discrepancy(beatty_points(alpha, beta, N))
