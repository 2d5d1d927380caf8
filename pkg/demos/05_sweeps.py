"""Config-driven sweeps and an exponent fit for the growth of F.

Run: python3 demos/05_sweeps.py
"""
from beatty_kloosterman import fit_exponent, parse_config, run_grid
from beatty_kloosterman.harness import records_to_csv

config = parse_config("""
    kind    = thm2_ratio
    primes  = range:101:400
    slope   = sqrt:2
    shift   = 0
    N_rule  = p
    xy_rule = 0,random:10
    seed    = 7
""")
records = run_grid(config)
print(f"{len(records)} records, empirical constant {max(r.ratios['thm2'] for r in records):.4f}")
print(records_to_csv(records[:3]))

growth = run_grid(parse_config("""
    kind   = f_growth
    primes = range:50:2000
    slope  = none
"""))
fit = fit_exponent(growth, "p", "F_max")
print(f"max_z F(z mod p) ~ p^{fit.slope:.3f} (rms residual {fit.residual:.3f}); worst case predicted 3/4")

decay = run_grid(parse_config("""
    kind     = discrepancy_decay
    slope    = golden
    shift    = 0.25
    N_values = pow2:4:14
"""))
fit = fit_exponent(decay, "N", "D_alpha")
print(f"D_golden(N) ~ N^{fit.slope:.3f}")
