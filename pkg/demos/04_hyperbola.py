"""Small points on modular hyperbolas m * mt = z (mod p).

Reproduces the point data behind the picture for H(-1 mod 47) with the
abscissae from B(pi, e) marked, and compares F with 2 log(p) p^(3/4).
Run: python3 demos/04_hyperbola.py [OUTDIR]
"""
import sys
from pathlib import Path

from beatty_kloosterman import (
    detector,
    emit_figure1,
    least_max,
    least_max_beatty,
    least_max_table,
    parse_real,
    theorem1_bound,
    theorem_bound,
)

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
pi, e = parse_real("pi"), parse_real("e")

rows = emit_figure1(47, -1, pi, e, out / "figure1_p47.csv")
print(f"wrote {rows} points to {out / 'figure1_p47.csv'}")

F, w = least_max(47, 46)
Fb, wb = least_max_beatty(47, 46, pi, e)
print(f"F(46 mod 47) = {F} at {(w.m, w.m_tilde)}; restricted to B(pi, e): {Fb} at {(wb.m, wb.m_tilde)}")

for p in (101, 499, 997, 1999):
    worst = int(least_max_table(p)[1:].max())
    print(f"p = {p:4d}  max_z F = {worst:4d}  2 log(p) p^(3/4) = {theorem1_bound(p):8.1f}")

r = detector(211, parse_real("golden"), 0, 210)
print(f"detector at p = 211, M = 210: lhs {r.lhs:.2f} <= rhs {r.rhs:.2f}? {r.holds}")

t = theorem_bound(47, pi, e)
print(f"N = {t.N}, final bound {t.bound:.1f} >= p: {t.trivial_at_scale}")
