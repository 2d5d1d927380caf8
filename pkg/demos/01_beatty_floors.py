"""Beatty sequences with certified floors.

Walks through slopes, windows, continued fractions and the pigeonhole shift.
Run: python3 demos/01_beatty_floors.py
"""
from fractions import Fraction

from beatty_kloosterman import (
    continued_fraction,
    count_upto,
    enumerate_beatty,
    estimate_type,
    eval_floor,
    find_gamma,
    parse_real,
)

pi, e, r2 = parse_real("pi"), parse_real("e"), parse_real("sqrt:2")

# floor(n*pi + e) never guesses: the enclosure must exclude every integer
print("floor(14 pi + e) =", eval_floor(pi, e, 14))
print("far out:  floor(10^30 sqrt 2) =", eval_floor(r2, 0, 10**30))

w = enumerate_beatty(pi, e, 14)
print("B(pi, e), first 14 terms:", w.values.tolist())
print("members <= 46:", count_upto(pi, e, 46))

# partial quotients and a crude type estimate
for spec in ("sqrt:2", "golden", "e", "pi"):
    a = parse_real(spec)
    cf = continued_fraction(a, 10)
    print(f"{spec:7s} [{cf.partial_quotients[0]}; {', '.join(map(str, cf.partial_quotients[1:]))}]"
          f"  tau_hat = {estimate_type(a, 20):.3f}")

# the shift gamma packs at least half the expected k's into [0, Delta)
cert = find_gamma(r2, 40, Fraction(1, 4))
print(f"gamma = {float(cert.gamma):.6f}: {cert.hit_count} hits, guaranteed {cert.guaranteed}")
