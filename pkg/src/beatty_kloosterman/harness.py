"""Config-driven measurement sweeps and flat-file output.

Config files are flat ``key = value`` text (``#`` starts a comment)::

    kind    = thm2_ratio
    primes  = range:101:997
    slope   = sqrt:2
    shift   = 0
    N_rule  = p
    xy_rule = 0,random:20
    seed    = 20240101
    output  = thm2.csv

Randomised choices use SplitMix64.  The generator for a grid cell is seeded
with ``seed ^ (cell * 0x9E3779B97F4A7C15 mod 2**64)`` so results do not depend
on evaluation order or worker count.
"""
from __future__ import annotations

import ast
import csv
import io
import json
import math
import operator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import beatty, discrepancy, expsums, hyperbola
from .errors import ConfigError, DegenerateFit, PrecisionExhausted, PreconditionError, ZeroResidue
from .irrational import batch_floor, estimate_type, parse_shift, parse_slope
from .modular import PrimeModulus, is_prime

__all__ = [
    "ExperimentConfig",
    "ExperimentRecord",
    "FitResult",
    "KINDS",
    "SplitMix64",
    "emit_figure1",
    "fit_exponent",
    "load_config",
    "parse_config",
    "records_to_csv",
    "records_to_json",
    "run_grid",
]

KINDS = ("thm2_ratio", "prop1_ratio", "moment_identity", "discrepancy_decay",
         "detector_sweep", "f_growth", "figure1")

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64: state += 0x9E3779B97F4A7C15, then two xor-shift-multiply rounds."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish integer in ``[0, n)`` (plain modulo reduction)."""
        return self.next() % n

    @classmethod
    def for_cell(cls, seed: int, cell: int) -> "SplitMix64":
        return cls(seed ^ ((cell * GOLDEN_GAMMA) & MASK64))


# -- rule expressions ---------------------------------------------------------

_FUNCS = {
    "floor": math.floor, "ceil": math.ceil, "sqrt": math.sqrt, "ln": math.log,
    "log": math.log, "log2": math.log2, "min": min, "max": max, "round": round,
}
_CONSTS = {"pi": math.pi, "e": math.e}
_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.FloorDiv: operator.floordiv, ast.Pow: operator.pow,
           ast.Mod: operator.mod}


def _compile_rule(text: str, field_name: str):
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ConfigError(f"malformed expression {text!r}", field_name) from exc

    def ev(node, env):
        if isinstance(node, ast.Expression):
            return ev(node.body, env)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return node.value
        if isinstance(node, ast.Name):
            if node.id in env:
                return env[node.id]
            if node.id in _CONSTS:
                return _CONSTS[node.id]
            raise ConfigError(f"unknown name {node.id!r}", field_name)
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left, env), ev(node.right, env))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand, env)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS:
            return _FUNCS[node.func.id](*[ev(a, env) for a in node.args])
        raise ConfigError(f"unsupported syntax in {text!r}", field_name)

    ev(tree, {"p": 101})  # fail early on bad rules
    return lambda p: int(ev(tree, {"p": p}))


def _parse_int_list(text: str, field_name: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    if text.startswith("pow2:"):
        try:
            a, b = (int(t) for t in text[5:].split(":"))
        except ValueError:
            raise ConfigError(f"expected pow2:A:B, got {text!r}", field_name) from None
        return [2**j for j in range(a, b + 1)]
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise ConfigError(f"expected comma-separated integers, got {text!r}", field_name) from None


def _parse_primes(text: str) -> List[int]:
    text = text.strip()
    if text.startswith("range:"):
        try:
            lo, hi = (int(t) for t in text[6:].split(":"))
        except ValueError:
            raise ConfigError(f"expected range:LO:HI, got {text!r}", "primes") from None
        return [q for q in range(max(lo, 3), hi + 1) if is_prime(q)]
    primes = _parse_int_list(text, "primes")
    for q in primes:
        if q < 3 or not is_prime(q):
            raise ConfigError(f"{q} is not an odd prime", "primes")
    return sorted(set(primes))


@dataclass
class ExperimentConfig:
    kind: str
    primes: List[int] = field(default_factory=list)
    slope: str = "sqrt:2"
    shift: str = "0"
    N_rule: str = "p"
    xy_rule: str = "0,1"
    seed: Optional[int] = None
    output: str = ""
    N_values: List[int] = field(default_factory=list)
    z: Optional[int] = None
    log_base: str = "e"

    def validate(self) -> "ExperimentConfig":
        if self.kind not in KINDS:
            raise ConfigError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}", "kind")
        if self.slope.lower() != "none":
            try:
                parse_slope(self.slope)
            except (ValueError, PreconditionError) as exc:
                raise ConfigError(str(exc), "slope") from None
        elif self.kind not in ("f_growth",):
            raise ConfigError("a slope is required for this kind", "slope")
        try:
            parse_shift(self.shift)
        except (ValueError, PreconditionError) as exc:
            raise ConfigError(str(exc), "shift") from None
        _compile_rule(self.N_rule, "N_rule")
        _xy_pairs(self.xy_rule, 101, SplitMix64(0))
        randomised = "random" in self.xy_rule or self.kind == "prop1_ratio"
        if randomised and self.seed is None:
            raise ConfigError("seed is mandatory for randomised rules", "seed")
        if self.kind == "discrepancy_decay" and not self.N_values:
            raise ConfigError("discrepancy_decay needs N_values", "N_values")
        if self.log_base not in ("e", "2"):
            raise ConfigError("log_base must be e or 2", "log_base")
        return self


_FIELDS = {"kind", "primes", "slope", "shift", "N_rule", "xy_rule", "seed", "output",
           "N_values", "z", "log_base"}


def parse_config(text: str) -> ExperimentConfig:
    raw: Dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _FIELDS:
            raise ConfigError(f"line {lineno}: unknown key", key)
        raw[key] = value
    if "kind" not in raw:
        raise ConfigError("missing", "kind")
    cfg = ExperimentConfig(kind=raw["kind"])
    if "primes" in raw:
        cfg.primes = _parse_primes(raw["primes"])
    for key in ("slope", "shift", "N_rule", "xy_rule", "output", "log_base"):
        if key in raw:
            setattr(cfg, key, raw[key])
    for key in ("seed", "z"):
        if key in raw:
            try:
                setattr(cfg, key, int(raw[key], 0))
            except ValueError:
                raise ConfigError(f"expected an integer, got {raw[key]!r}", key) from None
    if "N_values" in raw:
        cfg.N_values = _parse_int_list(raw["N_values"], "N_values")
    return cfg.validate()


def load_config(path) -> ExperimentConfig:
    return parse_config(Path(path).read_text())


def _xy_pairs(rule: str, p: int, rng: SplitMix64) -> List[Tuple[int, int]]:
    rule = rule.replace(" ", "")
    try:
        if rule.startswith("random:"):
            k, draw, room = int(rule[7:]), lambda: (rng.below(p), 1 + rng.below(p - 1)), p * (p - 1)
        else:
            xs, _, ys = rule.partition(",")
            if not ys.startswith("random:"):
                return [(int(xs), int(ys))]
            x = int(xs)
            k, draw, room = int(ys[7:]), lambda: (x, 1 + rng.below(p - 1)), p - 1
    except ValueError:
        raise ConfigError(f"expected X,Y or random:K or X,random:K, got {rule!r}", "xy_rule") from None
    # distinct pairs while there is room, then repeats are unavoidable
    pairs, seen = [], set()
    while len(pairs) < k:
        pair = draw()
        if pair in seen and len(seen) < room:
            continue
        seen.add(pair)
        pairs.append(pair)
    return pairs


# -- records ------------------------------------------------------------------

@dataclass
class ExperimentRecord:
    kind: str
    params: Dict[str, object] = field(default_factory=dict)
    measured: Dict[str, float] = field(default_factory=dict)
    bounds: Dict[str, float] = field(default_factory=dict)
    ratios: Dict[str, float] = field(default_factory=dict)
    status: str = "ok"
    error: str = ""

    def get(self, name: str):
        for group in (self.params, self.measured, self.bounds, self.ratios):
            if name in group:
                return group[name]
        raise KeyError(name)

    def sort_key(self):
        return (self.params.get("p", 0), self.params.get("N", 0),
                self.params.get("x", 0), self.params.get("y", 0))


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def records_to_csv(records: Sequence[ExperimentRecord]) -> str:
    cols: List[str] = []
    for group in ("params", "measured", "bounds", "ratios"):
        names = sorted({k for r in records for k in getattr(r, group)})
        cols += [f"{group}.{k}" if group != "params" else k for k in names]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["kind", "status"] + cols + ["error"])
    for r in records:
        row = [r.kind, r.status]
        for c in cols:
            group, _, name = c.rpartition(".")
            src = getattr(r, group) if group else r.params
            row.append(_fmt(src[name]) if name in src else "")
        w.writerow(row + [r.error])
    return buf.getvalue()


def records_to_json(records: Sequence[ExperimentRecord]) -> str:
    def clean(obj):
        if isinstance(obj, float) and not math.isfinite(obj):
            return str(obj)
        if isinstance(obj, dict):
            return {k: clean(v) for k, v in obj.items()}
        return obj
    return json.dumps([clean(asdict(r)) for r in records], indent=2, sort_keys=True)


# -- grid cells ---------------------------------------------------------------

def _lg(x, base):
    return math.log(x) if base == "e" else math.log2(x)


def _cell_thm2(cfg, p, alpha, beta):
    mod = PrimeModulus(p)
    N = _compile_rule(cfg.N_rule, "N_rule")(p)
    if not 1 <= N <= p:
        raise PreconditionError(f"N = {N} must lie in [1, p]")
    floors = batch_floor(alpha, beta, range(1, N + 1))
    D = discrepancy.beatty_discrepancy(alpha, 0, N).value
    bound = N ** (297 / 512) * p ** (43 / 128) + N * D
    out = []
    for x, y in _xy_pairs(cfg.xy_rule, p, SplitMix64.for_cell(cfg.seed or 0, p)):
        if y % p == 0:
            raise PreconditionError("p divides y")
        K = expsums._beatty_sum(mod, floors, x, y)
        out.append(ExperimentRecord(
            cfg.kind, {"p": p, "N": N, "x": x, "y": y, "alpha": cfg.slope, "beta": cfg.shift},
            {"abs_K": abs(K), "K_err": K.err, "D_alpha": D},
            {"thm2": bound}, {"thm2": abs(K) / bound}))
    return out


def _cell_prop1(cfg, p, alpha, beta):
    rng = SplitMix64.for_cell(cfg.seed or 0, p)
    # W is drawn from the nonzero residues: the averaging step needs p not dividing w
    size = min(_compile_rule(cfg.N_rule, "N_rule")(p), p - 1)
    sigma = expsums.fourth_moment_sigma(p) if p <= expsums.EXHAUSTIVE_LIMIT else None
    out = []
    for x, y in _xy_pairs(cfg.xy_rule, p, rng):
        pool = list(range(1, p))
        for i in range(size):  # partial Fisher-Yates
            j = i + rng.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        W = pool[:size]
        avg = expsums.correlation_average(p, x, y, W)
        measured = {"sum_abs": avg.sum_abs, "fourth_sum": avg.fourth_sum}
        bounds = {"prop1": avg.prop1_bound, "prop2": avg.prop2_bound, "holder": avg.holder_rhs}
        ratios = {"prop1": avg.prop1_ratio, "prop2": avg.prop2_ratio,
                  "holder": avg.sum_abs / avg.holder_rhs if avg.holder_rhs else 0.0}
        if sigma is not None:
            measured["sigma"] = sigma
            bounds["averaging"] = sigma
            ratios["averaging"] = (p - 1) * avg.fourth_sum / sigma
        out.append(ExperimentRecord(
            cfg.kind, {"p": p, "N": size, "x": x, "y": y}, measured, bounds, ratios))
    return out


def _cell_moment(cfg, p, alpha, beta):
    sigma = expsums.fourth_moment_sigma(p)
    tot = expsums.xu_total(p, "exhaustive")
    rhs = p * p * tot.total_below_p
    return [ExperimentRecord(
        cfg.kind, {"p": p},
        {"sigma": sigma, "xu_sum_below_p": tot.total_below_p, "xu_total": tot.total,
         "p2_xu_sum": rhs, "identity_rel_error": abs(sigma - rhs) / rhs},
        {"lemma_bound": tot.count_bound},
        {"lemma": tot.total / tot.count_bound})]


def _cell_decay(cfg, N, alpha, beta):
    d_ab = discrepancy.beatty_discrepancy(alpha, beta, N).value
    d_a = discrepancy.beatty_discrepancy(alpha, 0, N).value
    tau = estimate_type(alpha, 20)
    rate = N ** (-1.0 / tau)
    return [ExperimentRecord(
        cfg.kind, {"N": N, "alpha": cfg.slope, "beta": cfg.shift, "tau_hat": tau},
        {"D_alpha_beta": d_ab, "D_alpha": d_a, "N_D_alpha": N * d_a},
        {"shift_lemma": 8 * d_a, "type_rate": rate},
        {"shift_lemma": d_ab / (8 * d_a), "type_rate": d_a / rate})]


def _beatty_F_all(p, alpha, beta):
    window = beatty.window_for(alpha, beta, p - 1)
    vals = []
    for z in range(1, p):
        res = hyperbola.least_max_beatty(p, z, alpha, beta, window)
        vals.append(res[0] if res else None)
    return vals


def _cell_detector(cfg, p, alpha, beta):
    M = _compile_rule(cfg.N_rule, "N_rule")(p)
    rep = hyperbola.detector(p, alpha, beta, M, log_base=cfg.log_base)
    Fs = _beatty_F_all(p, alpha, beta)
    Fmax = max((f for f in Fs if f is not None), default=math.inf) if all(f is not None for f in Fs) else math.inf
    sound = (not rep.holds) or Fmax <= M
    return [ExperimentRecord(
        cfg.kind, {"p": p, "N": M, "alpha": cfg.slope, "beta": cfg.shift},
        {"lhs": rep.lhs, "lhs_with_zero": rep.lhs_with_zero, "holds": rep.holds,
         "degenerate": rep.degenerate, "F_max": float(Fmax), "sound": sound},
        {"rhs": rep.rhs}, {"detector": rep.lhs / rep.rhs if rep.rhs > 0 else math.inf})]


def _cell_f_growth(cfg, p, alpha, beta):
    F_unres = int(hyperbola.least_max_table(p)[1:].max())
    measured = {"F_unrestricted_max": float(F_unres)}
    if alpha is not None:
        Fs = _beatty_F_all(p, alpha, beta)
        measured["F_max"] = float(max(Fs)) if all(f is not None for f in Fs) else math.inf
    else:
        measured["F_max"] = float(F_unres)
    bound = 2 * _lg(p, cfg.log_base) * p**0.75
    return [ExperimentRecord(
        cfg.kind, {"p": p, "alpha": cfg.slope, "beta": cfg.shift},
        measured, {"theorem1": bound}, {"theorem1": measured["F_max"] / bound})]


def _cell_figure1(cfg, p, alpha, beta):
    z = (cfg.z if cfg.z is not None else -1) % p
    out_dir = Path(cfg.output or ".")
    if out_dir.suffix:
        out_dir = out_dir.parent
    path = out_dir / f"figure1_p{p}_z{z}.csv"
    rows = emit_figure1(p, z, alpha, beta, path)
    filled = beatty.count_upto(alpha, beta, p - 1)
    return [ExperimentRecord(cfg.kind, {"p": p, "z": z, "path": str(path)},
                             {"rows": rows, "filled": filled})]


_CELLS = {
    "thm2_ratio": _cell_thm2, "prop1_ratio": _cell_prop1, "moment_identity": _cell_moment,
    "discrepancy_decay": _cell_decay, "detector_sweep": _cell_detector,
    "f_growth": _cell_f_growth, "figure1": _cell_figure1,
}


def _run_cell(cfg: ExperimentConfig, cell: int) -> List[ExperimentRecord]:
    alpha = None if cfg.slope.lower() == "none" else parse_slope(cfg.slope)
    beta = parse_shift(cfg.shift)
    try:
        return _CELLS[cfg.kind](cfg, cell, alpha, beta)
    except (PrecisionExhausted, PreconditionError) as exc:
        key = "N" if cfg.kind == "discrepancy_decay" else "p"
        return [ExperimentRecord(cfg.kind, {key: cell}, status="failed",
                                 error=f"{type(exc).__name__}: {exc}")]


def run_grid(config: ExperimentConfig, threads: int = 1) -> List[ExperimentRecord]:
    """One record per grid cell (several per p when the xy rule yields several pairs)."""
    config.validate()
    cells = config.N_values if config.kind == "discrepancy_decay" else config.primes
    if not cells:
        return []
    if threads > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_run_cell, [config] * len(cells), cells))
    else:
        chunks = [_run_cell(config, c) for c in cells]
    records = [r for chunk in chunks for r in chunk]
    return sorted(records, key=ExperimentRecord.sort_key)


def write_records(records, path, fmt: str = "csv") -> None:
    text = records_to_csv(records) if fmt == "csv" else records_to_json(records)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, newline="") if fmt == "csv" else path.write_text(text)


# -- figure and fits ----------------------------------------------------------

def emit_figure1(p, z: int, alpha, beta, out) -> int:
    """Write ``m,m_tilde,in_beatty`` rows for every hyperbola point; returns the row count."""
    mod = PrimeModulus(p)
    if z % mod.p == 0:
        raise ZeroResidue(f"p = {mod.p} divides z = {z}")
    alpha = parse_slope(alpha) if isinstance(alpha, str) else alpha
    beta = parse_shift(beta) if isinstance(beta, str) else beta
    points = hyperbola.hyperbola_points(mod, z)
    members = set(beatty.window_for(alpha, beta, mod.p - 1).values.tolist())
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["m", "m_tilde", "in_beatty"])
    for pt in points:
        w.writerow([pt.m, pt.m_tilde, "true" if pt.m in members else "false"])
    if hasattr(out, "write"):
        out.write(buf.getvalue())
    else:
        out = Path(out)
        out.parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    return len(points)


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    residual: float


def fit_exponent(records, x_field: str, y_field: str) -> FitResult:
    """Least squares line through ``(log x, log y)``; residual is the RMS misfit."""
    pts = []
    for r in records:
        get = r.get if isinstance(r, ExperimentRecord) else r.__getitem__
        pts.append((float(get(x_field)), float(get(y_field))))
    if len(pts) < 2:
        raise DegenerateFit("need at least two records")
    x, y = np.array(pts).T
    if np.any(x <= 0) or np.any(y <= 0) or not np.all(np.isfinite(np.concatenate([x, y]))):
        raise DegenerateFit("log-log fit needs positive finite values")
    lx, ly = np.log(x), np.log(y)
    if np.ptp(lx) == 0:
        raise DegenerateFit("all x values coincide")
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    return FitResult(float(slope), float(intercept), float(np.sqrt(np.mean(resid**2))))
