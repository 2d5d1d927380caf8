"""The fourth moment of shifted-inverse correlation sums and the count X_u.

Sigma sums |S(r,t,u;p)|^4 over r, t <= p and 1 <= u < p; squaring out shows
it equals p^2 times the number of solutions counted by X_u.
Run: python3 demos/03_fourth_moment.py
"""
from beatty_kloosterman import correlation_average, fourth_moment_sigma, xu_total

print(" p     Sigma           p^2 * sum_{u<p} #X_u   total   bound")
for p in (3, 5, 7, 11, 13):
    sigma = fourth_moment_sigma(p)
    t = xu_total(p)
    print(f"{p:2d}  {sigma:14.3f}  {p * p * t.total_below_p:14d}  {t.total:8d}  {t.count_bound:7d}")

# structured counting reaches further than the p^4 scan
for p in (53, 101, 211):
    t = xu_total(p, "structured")
    print(f"p = {p}: total {t.total} vs p(2p^2 + 4(p-1)^2) = {t.count_bound}")

# averaging over w: each |S|^4 appears p - 1 times inside Sigma
p = 13
avg = correlation_average(p, 2, 5, range(1, 9))
print(f"(p-1) sum |S|^4 = {(p - 1) * avg.fourth_sum:.1f} <= Sigma = {fourth_moment_sigma(p):.1f}")
print(f"sum |S| = {avg.sum_abs:.3f} <= (#W)^(3/4) (sum |S|^4)^(1/4) = {avg.holder_rhs:.3f}")
