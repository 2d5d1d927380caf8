"""Certified real constants for Beatty slopes and shifts.

Every real number used as a slope or shift is an *atom* (``Real``) that can
produce, for any number of bits ``b``, integers ``lo <= x * 2**b <= hi``.
Atoms combine into ``LinearForm`` objects ``c0 + sum(c_i * atom_i)`` with
integer coefficients, which is all the arithmetic the Beatty machinery
needs: ``n*alpha + beta``, ``n*alpha + beta - gamma`` with ``gamma = m - k*alpha``
and so on.  Floors, signs and fractional parts of forms are certified by
interval evaluation at doubling precision; when the budget runs out a
``PrecisionExhausted`` is raised instead of a guess.

Slope/shift spec strings::

    pi | e | golden | sqrt:D | cf:a0,a1,...[,(b1,...,bj)] | dec:DIGITS
    rat:P/Q | P/Q | 0.25 | 3          (exact rationals)

``cf:`` terms are followed by the periodic block in parentheses, or by an
all-ones tail when no block is given, so the value is always a quadratic
irrational.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterator, List, Optional, Sequence, Tuple

from ._constants import E_DIGITS, PI_DIGITS
from .errors import PrecisionExhausted, PreconditionError

__all__ = [
    "ContinuedFraction",
    "DecimalReal",
    "LinearForm",
    "QuadraticIrrational",
    "RationalSlopeWarning",
    "Rational",
    "Real",
    "as_form",
    "certified_floor",
    "certified_frac",
    "certified_sign",
    "continued_fraction",
    "estimate_type",
    "eval_floor",
    "frac_part",
    "parse_real",
    "parse_shift",
    "parse_slope",
]

START_BITS = 128
DEFAULT_BUDGET = 16384
FRAC_GAP_BITS = 60


def set_default_budget(bits: int) -> None:
    global DEFAULT_BUDGET
    if bits < START_BITS:
        raise ValueError(f"precision budget must be at least {START_BITS} bits")
    DEFAULT_BUDGET = int(bits)


class RationalSlopeWarning(UserWarning):
    """A Beatty operation was given a rational slope."""


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class Real:
    """Base class for certified real atoms."""

    spec: str = "?"
    budget: Optional[int] = None
    exact: Optional[Fraction] = None

    def enclose(self, bits: int) -> Tuple[int, int]:
        # atoms are immutable, so enclosures are memoised per precision
        cache = self.__dict__.setdefault("_enclosures", {})
        if bits not in cache:
            cache[bits] = self._enclose(bits)
        return cache[bits]

    def _enclose(self, bits: int) -> Tuple[int, int]:
        raise NotImplementedError

    def cf_terms(self, count: int) -> Optional[List[int]]:
        """Exactly known partial quotients, or None to fall back on intervals."""
        return None

    @property
    def is_rational(self) -> bool:
        return self.exact is not None

    def __float__(self):
        lo, hi = self.enclose(64)
        return ((lo + hi) / 2) / 2.0**64

    def __repr__(self):
        return f"{type(self).__name__}({self.spec!r})"

    def __str__(self):
        return self.spec

    # arithmetic builds linear forms
    def __add__(self, other):
        return as_form(self) + other

    __radd__ = __add__

    def __sub__(self, other):
        return as_form(self) - other

    def __rsub__(self, other):
        return as_form(other) - as_form(self)

    def __neg__(self):
        return -as_form(self)

    def __mul__(self, k):
        return as_form(self) * k

    __rmul__ = __mul__


class Rational(Real):
    def __init__(self, value, spec=None):
        self.exact = Fraction(value)
        self.spec = spec or f"rat:{self.exact}"

    def enclose(self, bits):
        x = self.exact * (1 << bits)
        return math.floor(x), math.ceil(x)

    def cf_terms(self, count):
        out, x = [], self.exact
        while len(out) < count:
            a = math.floor(x)
            out.append(a)
            if x == a:
                break
            x = 1 / (x - a)
        return out


class QuadraticIrrational(Real):
    """``(P + Q*sqrt(D)) / R`` with D > 1 not a perfect square and R > 0."""

    def __init__(self, P, Q, D, R, spec=None, budget=None, prefix=None, period=None):
        if R == 0 or Q == 0:
            raise PreconditionError("degenerate quadratic irrational")
        if D < 2 or math.isqrt(D) ** 2 == D:
            raise PreconditionError(f"sqrt:{D} is rational")
        if R < 0:
            P, Q, R = -P, -Q, -R
        self.P, self.Q, self.D, self.R = int(P), int(Q), int(D), int(R)
        self.spec = spec or f"({P}+{Q}*sqrt({D}))/{R}"
        self.budget = budget
        self._prefix = list(prefix) if prefix is not None else None
        self._period = list(period) if period is not None else None

    def _enclose(self, bits):
        s = math.isqrt(self.D << (2 * bits))  # s <= sqrt(D)*2**bits < s+1
        a, b = self.Q * s, self.Q * (s + 1)
        lo, hi = min(a, b), max(a, b)
        base = self.P << bits
        return (base + lo) // self.R, _ceil_div(base + hi, self.R)

    def cf_terms(self, count):
        if self._prefix is None:
            return None
        out = self._prefix[:count]
        i = 0
        while len(out) < count:
            out.append(self._period[i % len(self._period)])
            i += 1
        return out


class DecimalReal(Real):
    """A decimal approximation with a certified half-width."""

    def __init__(self, digits: str, halfwidth: Fraction, spec=None, budget=None, cf=None):
        self.digits = digits
        self.value = Fraction(digits)
        self.halfwidth = Fraction(halfwidth)
        self.spec = spec or f"dec:{digits}"
        self.budget = budget
        self._cf = cf

    def _enclose(self, bits):
        lo = (self.value - self.halfwidth) * (1 << bits)
        hi = (self.value + self.halfwidth) * (1 << bits)
        return math.floor(lo), math.ceil(hi)

    def cf_terms(self, count):
        return self._cf(count) if self._cf else None


def _e_terms(count):
    out = [2]
    i = 1
    while len(out) < count:
        out.append(2 * (i + 1) // 3 if i % 3 == 2 else 1)
        i += 1
    return out[:count]


def _convergents(terms: Sequence[int]) -> List[Tuple[int, int]]:
    out = []
    p0, p1, q0, q1 = 0, 1, 1, 0
    for a in terms:
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        out.append((p1, q1))
    return out


def _from_cf(prefix: Sequence[int], period: Sequence[int], spec: str, budget=None) -> QuadraticIrrational:
    # purely periodic y = [b1; ..., bj, y]  =>  Qj y^2 + (Q_{j-1} - Pj) y - P_{j-1} = 0
    conv = _convergents(period)
    Pj, Qj = conv[-1]
    Pm, Qm = conv[-2] if len(conv) > 1 else (1, 0)
    a, D, c = Pj - Qm, (Qm - Pj) ** 2 + 4 * Qj * Pm, 2 * Qj  # y = (a + sqrt(D)) / c
    if not prefix:
        return QuadraticIrrational(a, 1, D, c, spec=spec, budget=budget, prefix=[], period=period)
    cp = _convergents(prefix)
    p, q = cp[-1]
    pp, qq = cp[-2] if len(cp) > 1 else (1, 0)
    # x = (p*y + pp) / (q*y + qq), rationalised
    A, C = p * a + pp * c, q * a + qq * c
    P = A * C - p * q * D
    Q = p * C - A * q
    R = C * C - q * q * D
    return QuadraticIrrational(P, Q, D, R, spec=spec, budget=budget, prefix=prefix, period=period)


def _parse_cf(body: str, spec: str, budget):
    body = body.strip()
    period = [1]
    if "(" in body:
        head, _, tail = body.partition("(")
        if not tail.endswith(")"):
            raise ValueError(f"malformed periodic block in {spec!r}")
        period = [int(t) for t in tail[:-1].split(",") if t.strip()]
        body = head.rstrip(", ")
        if not period:
            raise ValueError(f"empty periodic block in {spec!r}")
    prefix = [int(t) for t in body.split(",") if t.strip()]
    if any(a < 1 for a in prefix[1:]) or any(b < 1 for b in period) or (prefix and prefix[0] < 0):
        raise ValueError(f"partial quotients must be >= 1 after the first: {spec!r}")
    return _from_cf(prefix, period, spec, budget)


def parse_real(spec: str, budget: Optional[int] = None) -> Real:
    """Parse a slope or shift spec string into a certified atom."""
    s = spec.strip()
    key = s.lower()
    if key == "pi":
        return DecimalReal(PI_DIGITS, Fraction(1, 10**4096), spec="pi", budget=budget)
    if key == "e":
        return DecimalReal(E_DIGITS, Fraction(1, 10**4096), spec="e", budget=budget, cf=_e_terms)
    if key in ("golden", "phi"):
        return QuadraticIrrational(1, 1, 5, 2, spec="golden", budget=budget, prefix=[1], period=[1])
    if key.startswith("sqrt:"):
        d = int(s[5:])
        r = math.isqrt(d) if d >= 0 else 0
        if d < 2 or r * r == d:
            raise PreconditionError(f"sqrt:{d} requires a non-square d >= 2")
        return QuadraticIrrational(0, 1, d, 1, spec=s, budget=budget)
    if key.startswith("cf:"):
        return _parse_cf(s[3:], s, budget)
    if key.startswith("dec:"):
        digits = s[4:]
        frac_len = len(digits.partition(".")[2])
        return DecimalReal(digits, Fraction(1, 2 * 10**frac_len), spec=s, budget=budget)
    if key.startswith("rat:"):
        s = s[4:]
    try:
        return Rational(Fraction(s), spec=spec.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"unrecognised real spec {spec!r}") from None


def parse_slope(spec, budget=None) -> Real:
    """Parse a Beatty slope; the value must exceed 1."""
    alpha = spec if isinstance(spec, Real) else parse_real(spec, budget)
    if certified_sign(as_form(alpha) - 1, budget) <= 0:
        raise PreconditionError(f"slope {alpha.spec} must be > 1")
    return alpha


def parse_shift(spec, budget=None):
    beta = spec if isinstance(spec, (Real, LinearForm)) else parse_real(str(spec), budget)
    if certified_sign(as_form(beta), budget) < 0:
        raise PreconditionError(f"shift {beta} must be >= 0")
    return beta


class LinearForm:
    """``const + sum(coeff * atom)`` with integer coefficients on irrational atoms."""

    __slots__ = ("const", "terms")

    def __init__(self, const=0, terms=()):
        const = Fraction(const)
        merged = {}
        order = []
        for atom, c in terms:
            if c == 0:
                continue
            if atom.exact is not None:
                const += c * atom.exact
                continue
            k = id(atom)
            if k not in merged:
                merged[k] = [atom, 0]
                order.append(k)
            merged[k][1] += int(c)
        self.const = const
        self.terms = tuple((merged[k][0], merged[k][1]) for k in order if merged[k][1] != 0)

    @property
    def is_exact(self) -> bool:
        return not self.terms

    @property
    def budget(self) -> int:
        b = [a.budget for a, _ in self.terms if a.budget]
        return max(b) if b else DEFAULT_BUDGET

    def enclose(self, bits: int) -> Tuple[int, int]:
        c = self.const * (1 << bits)
        lo, hi = math.floor(c), math.ceil(c)
        for atom, k in self.terms:
            a, b = atom.enclose(bits)
            if k > 0:
                lo += k * a
                hi += k * b
            else:
                lo += k * b
                hi += k * a
        return lo, hi

    def __add__(self, other):
        o = as_form(other)
        return LinearForm(self.const + o.const, self.terms + o.terms)

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(-self.const, tuple((a, -k) for a, k in self.terms))

    def __sub__(self, other):
        return self + (-as_form(other))

    def __rsub__(self, other):
        return as_form(other) - self

    def __mul__(self, k):
        if not isinstance(k, int):
            raise TypeError("linear forms scale by integers only")
        return LinearForm(self.const * k, tuple((a, c * k) for a, c in self.terms))

    __rmul__ = __mul__

    def __float__(self):
        if self.is_exact:
            return float(self.const)
        lo, hi = self.enclose(80)
        return ((lo + hi) // 2) / 2.0**80

    def __repr__(self):
        parts = [str(self.const)] if self.const or not self.terms else []
        parts += [f"{k}*{a.spec}" for a, k in self.terms]
        return "LinearForm(" + " + ".join(parts) + ")"


def as_form(x) -> LinearForm:
    if isinstance(x, LinearForm):
        return x
    if isinstance(x, Real):
        return LinearForm(0, ((x, 1),))
    if isinstance(x, (int, _RationalABC, float)):
        return LinearForm(Fraction(x))
    if isinstance(x, str):
        return as_form(parse_real(x))
    raise TypeError(f"cannot interpret {x!r} as a real")


def _bit_plan(form: LinearForm, budget: Optional[int], extra: int = 0) -> Iterator[int]:
    budget = budget or form.budget
    mag = max((abs(k).bit_length() for _, k in form.terms), default=0)
    bits = max(START_BITS, 2 * (mag + extra))
    while bits <= budget:
        yield bits
        bits *= 2
    if bits // 2 < budget:
        yield budget


def certified_floor(x, budget: Optional[int] = None) -> int:
    """Exact floor of a form, certified by an enclosure free of integers."""
    form = as_form(x)
    if form.is_exact:
        return math.floor(form.const)
    for bits in _bit_plan(form, budget):
        lo, hi = form.enclose(bits)
        fl = lo >> bits
        if hi >> bits == fl:
            return fl
    raise PrecisionExhausted(f"cannot certify floor of {form!r} within {budget or form.budget} bits")


def certified_sign(x, budget: Optional[int] = None) -> int:
    form = as_form(x)
    if form.is_exact:
        return (form.const > 0) - (form.const < 0)
    for bits in _bit_plan(form, budget):
        lo, hi = form.enclose(bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
    raise PrecisionExhausted(f"cannot certify the sign of {form!r} within {budget or form.budget} bits")


def certified_frac(x, budget: Optional[int] = None) -> Fraction:
    """Fractional part within 2**-60, certified to be at least 2**-60 away from 0 and 1.

    Exact forms return their exact fractional part.
    """
    form = as_form(x)
    if form.is_exact:
        return form.const - math.floor(form.const)
    for bits in _bit_plan(form, budget, extra=FRAC_GAP_BITS):
        lo, hi = form.enclose(bits)
        fl = lo >> bits
        gap = 1 << (bits - FRAC_GAP_BITS)
        lo_f, hi_f = lo - (fl << bits), hi - (fl << bits)
        if hi - lo < gap and lo_f >= gap and (1 << bits) - hi_f >= gap:
            return Fraction((lo_f + hi_f) // 2, 1 << bits)
    raise PrecisionExhausted(f"fractional part of {form!r} is too close to an integer to certify")


def frac_less_than(x, delta, budget: Optional[int] = None) -> bool:
    """Certified test of ``{x} < delta`` (strict)."""
    form = as_form(x)
    f = certified_floor(form, budget)
    return certified_sign(form - f - as_form(delta), budget) < 0


def eval_floor(alpha, beta, n: int, budget: Optional[int] = None) -> int:
    """Certified ``floor(n*alpha + beta)``."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    return certified_floor(as_form(alpha) * n + as_form(beta), budget)


def frac_part(alpha, beta, n: int, budget: Optional[int] = None) -> Fraction:
    """Certified ``{n*alpha + beta}`` as a dyadic fraction (see ``certified_frac``)."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    return certified_frac(as_form(alpha) * n + as_form(beta), budget)


def batch_enclose(alpha, beta, ns: Sequence[int], bits: int):
    """Integer enclosures of ``n*alpha + beta`` at scale ``2**bits`` for all n."""
    a_lo, a_hi = as_form(alpha).enclose(bits)
    b_lo, b_hi = as_form(beta).enclose(bits)
    lo = [n * a_lo + b_lo if n >= 0 else n * a_hi + b_lo for n in ns]
    hi = [n * a_hi + b_hi if n >= 0 else n * a_lo + b_hi for n in ns]
    return lo, hi


def batch_floor(alpha, beta, ns: Sequence[int], budget: Optional[int] = None) -> List[int]:
    """Certified floors of ``n*alpha + beta`` for many n with one shared enclosure."""
    ns = list(ns)
    if not ns:
        return []
    fa, fb = as_form(alpha), as_form(beta)
    if fa.is_exact and fb.is_exact:
        return [math.floor(n * fa.const + fb.const) for n in ns]
    bits = START_BITS + max(abs(n) for n in ns).bit_length()
    lo, hi = batch_enclose(fa, fb, ns, bits)
    out = []
    for n, l, h in zip(ns, lo, hi):
        fl = l >> bits
        out.append(fl if h >> bits == fl else certified_floor(fa * n + fb, budget))
    return out


def batch_frac(alpha, beta, ns: Sequence[int], budget: Optional[int] = None):
    """Floors and float fractional parts of ``n*alpha + beta``.

    The floats carry double rounding only; the floors are certified.
    """
    ns = list(ns)
    fa, fb = as_form(alpha), as_form(beta)
    if fa.is_exact and fb.is_exact:
        vals = [n * fa.const + fb.const for n in ns]
        fl = [math.floor(v) for v in vals]
        return fl, [float(v - f) for v, f in zip(vals, fl)]
    bits = START_BITS + max([abs(n) for n in ns] + [1]).bit_length()
    lo, hi = batch_enclose(fa, fb, ns, bits)
    floors, fracs = [], []
    for n, l, h in zip(ns, lo, hi):
        fl = l >> bits
        if h >> bits != fl:
            fl = certified_floor(fa * n + fb, budget)
            f = float(certified_frac(fa * n + fb, budget))
        else:
            f = ((l + h) // 2 - (fl << bits)) / 2.0**bits
        floors.append(fl)
        fracs.append(f)
    return floors, fracs


@dataclass
class ContinuedFraction:
    partial_quotients: List[int]
    convergents: List[Tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.convergents:
            self.convergents = _convergents(self.partial_quotients)

    def error_law_holds(self, alpha, budget: Optional[int] = None) -> bool:
        """Certify ``|alpha - p_k/q_k| < 1/(q_k q_{k+1})`` for every computed k."""
        form = as_form(alpha)
        for (p, q), (_, q1) in zip(self.convergents, self.convergents[1:]):
            d = form - Fraction(p, q)
            bound = Fraction(1, q * q1)
            if certified_sign(d - bound, budget) >= 0 or certified_sign(d + bound, budget) <= 0:
                return False
        return True


def _interval_cf(form: LinearForm, count: int, bits: int) -> List[int]:
    lo, hi = form.enclose(bits)
    lo, hi = Fraction(lo, 1 << bits), Fraction(hi, 1 << bits)
    out = []
    while len(out) < count:
        a = math.floor(lo)
        if math.floor(hi) != a or lo == a:
            break
        out.append(a)
        lo, hi = 1 / (hi - a), 1 / (lo - a)
    return out


def continued_fraction(alpha, K: int, budget: Optional[int] = None) -> ContinuedFraction:
    """Partial quotients ``a_0..a_K`` of alpha with their convergents.

    Exact for quadratic irrationals and e (known patterns), certified from
    interval enclosures otherwise.  Rationals return their finite expansion.
    """
    if K < 0:
        raise PreconditionError("K must be non-negative")
    count = K + 1
    atom = alpha if isinstance(alpha, Real) else None
    if atom is not None:
        known = atom.cf_terms(count)
        if known is not None:
            return ContinuedFraction(known)
    form = as_form(alpha)
    if form.is_exact:
        return ContinuedFraction(Rational(form.const).cf_terms(count))
    for bits in _bit_plan(form, budget, extra=2 * count):
        terms = _interval_cf(form, count, bits)
        if len(terms) == count:
            return ContinuedFraction(terms)
    raise PrecisionExhausted(f"cannot certify {count} partial quotients of {form!r}")


def estimate_type(alpha, K: int, budget: Optional[int] = None) -> float:
    """Finite-sample estimate of the irrationality type from ``a_0..a_K``.

    ``max(1, 1 + max log(a_{k+1}) / log(q_k))`` over convergents with
    ``q_k >= 3``.  An estimate only: the type is a limit and no finite
    expansion certifies it.
    """
    if K < 3:
        raise PreconditionError("K must be >= 3")
    if as_form(alpha).is_exact:
        raise PreconditionError("the type is defined for irrational numbers only")
    cf = continued_fraction(alpha, K, budget)
    a = cf.partial_quotients
    best = 0.0
    for k in range(len(a) - 1):
        q = cf.convergents[k][1]
        if q >= 3:
            best = max(best, math.log(a[k + 1]) / math.log(q))
    return max(1.0, 1.0 + best)


def warn_if_rational(alpha) -> bool:
    if as_form(alpha).is_exact:
        warnings.warn(f"rational slope {alpha}: Beatty theorems assume irrational slopes",
                      RationalSlopeWarning, stacklevel=3)
        return True
    return False


def require_irrational(alpha) -> None:
    if as_form(alpha).is_exact:
        raise PreconditionError(f"slope {alpha} must be irrational")


def batch_frac_less(alpha, beta, ns: Sequence[int], delta, budget: Optional[int] = None) -> List[bool]:
    """Certified ``{n*alpha + beta} < delta`` for many n."""
    ns = list(ns)
    fa, fb = as_form(alpha), as_form(beta)
    d = Fraction(delta)
    if not ns:
        return []
    bits = START_BITS + max(abs(n) for n in ns).bit_length()
    lo, hi = batch_enclose(fa, fb, ns, bits)
    scale = 1 << bits
    out = []
    for n, l, h in zip(ns, lo, hi):
        fl = l >> bits
        if h >> bits == fl:
            lf, hf = l - (fl << bits), h - (fl << bits)
            if hf * d.denominator < d.numerator * scale:
                out.append(True)
                continue
            if lf * d.denominator >= d.numerator * scale:
                out.append(False)
                continue
        out.append(frac_less_than(fa * n + fb, d, budget))
    return out
