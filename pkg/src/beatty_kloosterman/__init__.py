"""Kloosterman sums along Beatty sequences, discrepancy and modular hyperbolas.

Exact modular arithmetic, certified floors of ``n*alpha + beta`` for
irrational ``alpha``, exponential sums mod p, exact discrepancy, least
points on modular hyperbolas, and a reproducible sweep harness.
"""
from .errors import (
    ConfigError,
    DegenerateFit,
    DuplicateResidue,
    PrecisionExhausted,
    PreconditionError,
    RangeError,
    SizeLimit,
    YDivisible,
    ZeroResidue,
)
from .modular import ComplexSumValue, PrimeModulus, batch_inverse, exp_residue, is_prime, mod_inverse
from .irrational import (
    ContinuedFraction,
    LinearForm,
    RationalSlopeWarning,
    as_form,
    certified_floor,
    certified_frac,
    certified_sign,
    continued_fraction,
    estimate_type,
    eval_floor,
    frac_part,
    parse_real,
    parse_shift,
    parse_slope,
    set_default_budget,
)
from .beatty import (
    BeattyWindow,
    GammaCertificate,
    SplitSets,
    contains,
    count_upto,
    enumerate_beatty,
    find_gamma,
    floor_splitting_violations,
    max_residue_class_count,
    split_sets,
)
from .discrepancy import (
    DiscrepancyValue,
    PointSet,
    beatty_discrepancy,
    brute_force_discrepancy,
    extreme_discrepancy,
    star_discrepancy,
)
from .expsums import (
    beatty_kloosterman,
    completion_gap,
    correlation_average,
    correlation_sum,
    count_Xu,
    fourth_moment_sigma,
    incomplete_kloosterman,
    kloosterman,
    weil_bound,
    xu_total,
)
from .hyperbola import (
    detector,
    exponent_check,
    hyperbola_points,
    least_max,
    least_max_beatty,
    least_max_table,
    theorem_bound,
    theorem1_bound,
)
from .harness import (
    ExperimentConfig,
    ExperimentRecord,
    SplitMix64,
    emit_figure1,
    fit_exponent,
    load_config,
    parse_config,
    run_grid,
)

__version__ = "0.1.0"

__all__ = [
    "as_form",
    "batch_inverse",
    "beatty_discrepancy",
    "beatty_kloosterman",
    "BeattyWindow",
    "brute_force_discrepancy",
    "certified_floor",
    "certified_frac",
    "certified_sign",
    "completion_gap",
    "ComplexSumValue",
    "ConfigError",
    "contains",
    "continued_fraction",
    "ContinuedFraction",
    "correlation_average",
    "correlation_sum",
    "count_upto",
    "count_Xu",
    "DegenerateFit",
    "detector",
    "DiscrepancyValue",
    "DuplicateResidue",
    "emit_figure1",
    "enumerate_beatty",
    "estimate_type",
    "eval_floor",
    "exp_residue",
    "ExperimentConfig",
    "ExperimentRecord",
    "exponent_check",
    "extreme_discrepancy",
    "find_gamma",
    "fit_exponent",
    "floor_splitting_violations",
    "fourth_moment_sigma",
    "frac_part",
    "GammaCertificate",
    "hyperbola_points",
    "incomplete_kloosterman",
    "is_prime",
    "kloosterman",
    "least_max",
    "least_max_beatty",
    "least_max_table",
    "LinearForm",
    "load_config",
    "max_residue_class_count",
    "mod_inverse",
    "parse_config",
    "parse_real",
    "parse_shift",
    "parse_slope",
    "PointSet",
    "PrecisionExhausted",
    "PreconditionError",
    "PrimeModulus",
    "RangeError",
    "RationalSlopeWarning",
    "run_grid",
    "set_default_budget",
    "SizeLimit",
    "split_sets",
    "SplitMix64",
    "SplitSets",
    "star_discrepancy",
    "theorem1_bound",
    "theorem_bound",
    "weil_bound",
    "xu_total",
    "YDivisible",
    "ZeroResidue",
]
