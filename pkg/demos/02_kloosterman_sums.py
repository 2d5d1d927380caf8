"""Kloosterman sums: complete, incomplete and along a Beatty sequence.

Run: python3 demos/02_kloosterman_sums.py
"""
import math

import numpy as np

from beatty_kloosterman import (
    beatty_discrepancy,
    beatty_kloosterman,
    incomplete_kloosterman,
    kloosterman,
    parse_real,
    weil_bound,
)

p = 1009
x, y = 3, 17
k = kloosterman(p, x, y)
print(f"Kl_{p}({x},{y}) = {k.re:.6f} (+ {k.im:.1e} i), err <= {k.err:.1e}")
print(f"Weil bound {weil_bound(p, x, y):.3f}")

# largest |Kl| over every (x, y) for a small prime, against the Weil bound
q = 61
worst = max(abs(kloosterman(q, a, b)) / weil_bound(q, a, b) for a in range(q) for b in range(q))
print(f"p = {q}: max |Kl| / Weil = {worst:.4f}")

# incomplete sums drift around (M/p) * complete sum
for M in (100, 500, 1008):
    v = incomplete_kloosterman(p, M, 0, y)
    print(f"M = {M:4d}  |sum| = {abs(v):8.3f}")

# along B(sqrt 2, 0): |K| against N^(297/512) p^(43/128) + N D(N)
r2 = parse_real("sqrt:2")
for p in (101, 503, 1009):
    K = abs(beatty_kloosterman(p, r2, 0, p, 0, 1))
    D = beatty_discrepancy(r2, 0, p).value
    bound = p ** (297 / 512) * p ** (43 / 128) + p * D
    print(f"p = {p:5d}  |K| = {K:7.3f}  bound = {bound:8.2f}  ratio = {K / bound:.4f}")

# the sqrt p scale is visible in the spread of |Kl| over y
p = 2003
mags = np.array([abs(kloosterman(p, 1, t)) for t in range(1, p)])
print(f"p = {p}: mean |Kl|/sqrt p = {mags.mean() / math.sqrt(p):.3f}, max = {mags.max() / math.sqrt(p):.3f}")
