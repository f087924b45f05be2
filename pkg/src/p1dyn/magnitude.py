"""Exact representation and rigorous comparison of astronomically large counts.

A magnitude is a nonnegative value built from exact integers, pure
exponentials e^q with exact rational q, integer powers, sums, products, and
maxima.  Values small enough to materialize (at most EXACT_DIGIT_CEILING
decimal digits) collapse to exact integers; everything else is compared
through interval arithmetic on natural logarithms with exact dyadic
rational endpoints, doubling the working precision until the comparison is
decided.  A comparison that cannot be decided raises rather than guessing.

The logarithm intervals come from the atanh series
ln(n) = e*ln(2) + 2*atanh((n - 2^e)/(n + 2^e)) evaluated in fixed point
with directed rounding, so every endpoint is a true bound.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

EXACT_DIGIT_CEILING = 10**6
_PREC_START = 64
_PREC_CEILING = 1 << 13
_GUARD_BITS = 16

Magnitude = Union["Exact", "ExpOf", "Power", "Sum", "Prod", "MaxOf"]


class Comparison(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class IndistinguishableError(ArithmeticError):
    """Two magnitudes could not be separated at the precision ceiling."""


class MagnitudeInputError(ValueError):
    pass


@dataclass(frozen=True)
class Exact:
    value: int


@dataclass(frozen=True)
class ExpOf:
    ln: Fraction


@dataclass(frozen=True)
class Power:
    base: Magnitude
    exponent: int


@dataclass(frozen=True)
class Sum:
    parts: tuple


@dataclass(frozen=True)
class Prod:
    parts: tuple


@dataclass(frozen=True)
class MaxOf:
    parts: tuple


def _key(m):
    if isinstance(m, Exact):
        return (0, m.value)
    if isinstance(m, ExpOf):
        return (1, m.ln)
    if isinstance(m, Power):
        return (2, _key(m.base), m.exponent)
    if isinstance(m, Sum):
        return (3, tuple(_key(p) for p in m.parts))
    if isinstance(m, Prod):
        return (4, tuple(_key(p) for p in m.parts))
    return (5, tuple(_key(p) for p in m.parts))


def int_digits(v: int) -> int:
    """Exact decimal digit count of a nonnegative integer."""
    if v == 0:
        return 1
    d = v.bit_length() * 30103 // 100000 + 1
    while 10**d <= v:
        d += 1
    while d > 1 and 10 ** (d - 1) > v:
        d -= 1
    return d


def _digits_at_most(v: int, ceiling: int) -> bool:
    # cheap overestimate first, exact only near the boundary
    approx = v.bit_length() * 30103 // 100000
    if approx > ceiling + 2:
        return False
    return int_digits(v) <= ceiling


def exact(v: int) -> Magnitude:
    if not isinstance(v, int) or v < 0:
        raise MagnitudeInputError("exact magnitudes are nonnegative integers")
    return Exact(v)


def exp_of(q) -> Magnitude:
    q = Fraction(q)
    if q < 0:
        raise MagnitudeInputError("exponential magnitudes need a nonnegative exponent")
    if q == 0:
        return Exact(1)
    return ExpOf(q)


def power(base: Magnitude, exponent: int) -> Magnitude:
    if exponent < 0:
        raise MagnitudeInputError("powers need a nonnegative integer exponent")
    if exponent == 0:
        return Exact(1)
    if exponent == 1:
        return base
    if isinstance(base, Exact):
        if base.value in (0, 1):
            return base
        bits = base.value.bit_length() * exponent
        if bits * 30103 // 100000 <= EXACT_DIGIT_CEILING + 2:
            return Exact(base.value**exponent)
        return Power(base, exponent)
    if isinstance(base, ExpOf):
        return ExpOf(base.ln * exponent)
    if isinstance(base, Power):
        return power(base.base, base.exponent * exponent)
    return Power(base, exponent)


def _is_zero(m: Magnitude) -> bool:
    return isinstance(m, Exact) and m.value == 0


def prod_of(*parts: Magnitude) -> Magnitude:
    flat: list[Magnitude] = []
    for p in parts:
        if isinstance(p, Prod):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if any(_is_zero(p) for p in flat):
        return Exact(0)
    acc_exact = 1
    acc_ln = Fraction(0)
    powers: dict = {}
    rest: list[Magnitude] = []
    for p in flat:
        if isinstance(p, Exact):
            acc_exact *= p.value
        elif isinstance(p, ExpOf):
            acc_ln += p.ln
        elif isinstance(p, Power):
            powers[p.base] = powers.get(p.base, 0) + p.exponent
        else:
            rest.append(p)
    for base, e in sorted(powers.items(), key=lambda kv: _key(kv[0])):
        rest.append(power(base, e))
    if acc_ln:
        rest.append(ExpOf(acc_ln))
    if acc_exact != 1:
        rest.append(Exact(acc_exact))
    if not rest:
        return Exact(acc_exact)
    if len(rest) == 1:
        return rest[0]
    return Prod(tuple(sorted(rest, key=_key)))


def sum_of(*parts: Magnitude) -> Magnitude:
    flat: list[Magnitude] = []
    for p in parts:
        if isinstance(p, Sum):
            flat.extend(p.parts)
        else:
            flat.append(p)
    acc_exact = 0
    rest: list[Magnitude] = []
    for p in flat:
        if isinstance(p, Exact):
            acc_exact += p.value
        else:
            rest.append(p)
    grouped: list[Magnitude] = []
    counts: dict = {}
    for p in rest:
        counts[p] = counts.get(p, 0) + 1
    for p, k in sorted(counts.items(), key=lambda kv: _key(kv[0])):
        grouped.append(p if k == 1 else prod_of(Exact(k), p))
    if acc_exact:
        grouped.append(Exact(acc_exact))
    if not grouped:
        return Exact(acc_exact)
    if len(grouped) == 1:
        return grouped[0]
    return Sum(tuple(sorted(grouped, key=_key)))


def max_of(*parts: Magnitude) -> Magnitude:
    flat: list[Magnitude] = []
    for p in parts:
        if isinstance(p, MaxOf):
            flat.extend(p.parts)
        else:
            flat.append(p)
    best_exact = None
    rest = []
    for p in flat:
        if isinstance(p, Exact):
            if best_exact is None or p.value > best_exact:
                best_exact = p.value
        elif p not in rest:
            rest.append(p)
    if best_exact is not None and (best_exact > 0 or not rest):
        rest.append(Exact(best_exact))
    if len(rest) == 1:
        return rest[0]
    if not rest:
        raise MagnitudeInputError("max of nothing")
    return MaxOf(tuple(sorted(rest, key=_key)))


# --- fixed-point logarithms with directed rounding -------------------------

def _atanh_fixed(p: int, q: int, width: int) -> tuple[int, int]:
    """Bounds on atanh(p/q) * 2^width for 0 <= p/q <= 1/2."""
    if p == 0:
        return 0, 0
    z_lo = (p << width) // q
    z_hi = z_lo + 1
    sq_lo = (z_lo * z_lo) >> width
    sq_hi = ((z_hi * z_hi) >> width) + 1
    s_lo, s_hi = 0, 0
    p_lo, p_hi = z_lo, z_hi
    j = 0
    while True:
        term_hi = p_hi // (2 * j + 1)
        if term_hi == 0:
            # remaining tail below (4/3) * p_hi / (2j+1) in scaled units
            s_hi += 2
            break
        s_lo += p_lo // (2 * j + 1)
        s_hi += term_hi + 1
        p_lo = (p_lo * sq_lo) >> width
        p_hi = ((p_hi * sq_hi) >> width) + 1
        j += 1
    return s_lo, s_hi


@lru_cache(maxsize=64)
def _ln2_fixed(width: int) -> tuple[int, int]:
    lo, hi = _atanh_fixed(1, 3, width)
    return 2 * lo, 2 * hi


@lru_cache(maxsize=4096)
def _ln_int_fixed(n: int, width: int) -> tuple[int, int]:
    """Bounds on ln(n) * 2^width for n >= 1."""
    if n == 1:
        return 0, 0
    bits = n.bit_length()
    if bits > width + 8:
        shift = bits - (width + 8)
        head = n >> shift
        lo = _ln_int_fixed(head, width)[0]
        hi = _ln_int_fixed(head + 1, width)[1]
        l2_lo, l2_hi = _ln2_fixed(width)
        return lo + shift * l2_lo, hi + shift * l2_hi
    e = bits - 1
    at_lo, at_hi = _atanh_fixed(n - (1 << e), n + (1 << e), width)
    l2_lo, l2_hi = _ln2_fixed(width)
    return 2 * at_lo + e * l2_lo, 2 * at_hi + e * l2_hi + 1


def _ln_int_interval(n: int, prec: int) -> tuple[Fraction, Fraction]:
    width = prec + _GUARD_BITS
    lo, hi = _ln_int_fixed(n, width)
    unit = 1 << width
    return Fraction(lo, unit), Fraction(hi, unit)


def ln2_interval(prec: int) -> tuple[Fraction, Fraction]:
    width = prec + _GUARD_BITS
    lo, hi = _ln2_fixed(width)
    unit = 1 << width
    return Fraction(lo, unit), Fraction(hi, unit)


def ln10_interval(prec: int) -> tuple[Fraction, Fraction]:
    return _ln_int_interval(10, prec)


def _exp_bounds(delta: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """Bounds on e^delta for delta <= 0, as exact rationals."""
    if delta == 0:
        return Fraction(1), Fraction(1)
    l2_lo, l2_hi = ln2_interval(prec)
    cap = prec + 64
    # e^delta <= 2^-m for any m <= (-delta)/ln2; ln2 <= l2_hi makes floor valid
    m_hi = min(math.floor((-delta) / l2_hi), cap)
    upper = Fraction(1, 1 << m_hi)
    # e^delta >= 2^-m for any m >= (-delta)/ln2; ln2 >= l2_lo makes ceil valid
    m_lo = math.ceil((-delta) / l2_lo)
    lower = Fraction(0) if m_lo > cap else Fraction(1, 1 << m_lo)
    return lower, upper


def ln_interval(m: Magnitude, prec: int) -> Optional[tuple[Fraction, Fraction]]:
    """Rigorous bounds on ln(m); None for the zero magnitude."""
    if isinstance(m, Exact):
        if m.value == 0:
            return None
        return _ln_int_interval(m.value, prec)
    if isinstance(m, ExpOf):
        return (m.ln, m.ln)
    if isinstance(m, Power):
        base = ln_interval(m.base, prec)
        return (base[0] * m.exponent, base[1] * m.exponent)
    if isinstance(m, Prod):
        lo = Fraction(0)
        hi = Fraction(0)
        for p in m.parts:
            iv = ln_interval(p, prec)
            lo += iv[0]
            hi += iv[1]
        return (lo, hi)
    if isinstance(m, MaxOf):
        ivs = [ln_interval(p, prec) for p in m.parts]
        return (max(iv[0] for iv in ivs), max(iv[1] for iv in ivs))
    if isinstance(m, Sum):
        return _ln_sum_interval(m, prec)
    raise MagnitudeInputError(f"not a magnitude: {m!r}")


def _ln_sum_interval(m: Sum, prec: int) -> tuple[Fraction, Fraction]:
    ivs = [ln_interval(p, prec) for p in m.parts]
    star = max(range(len(ivs)), key=lambda i: ivs[i][1])
    lo_star, hi_star = ivs[star]
    others = [ivs[i] for i in range(len(ivs)) if i != star]
    deltas_hi = [iv[1] - lo_star for iv in others]
    if all(d <= -1 for d in deltas_hi):
        c_hi = Fraction(0)
        c_lo = Fraction(0)
        for iv in others:
            c_hi += _exp_bounds(iv[1] - lo_star, prec)[1]
            c_lo += _exp_bounds(iv[0] - hi_star, prec)[0]
        lower = lo_star + c_lo * (2 - c_lo) / 2  # ln(1+x) >= x - x^2/2
        upper = hi_star + c_hi  # ln(1+x) <= x
        return (lower, upper)
    n = len(m.parts)
    ln_n_hi = _ln_int_interval(n, 32)[1]
    return (max(iv[0] for iv in ivs), max(iv[1] for iv in ivs) + ln_n_hi)


def force_exact(m: Magnitude, max_digits: int = EXACT_DIGIT_CEILING) -> Optional[int]:
    """The exact integer value, or None when it cannot be materialized.

    Pure exponentials e^q with q > 0 are never integers; anything whose
    value would exceed the digit ceiling is refused.
    """
    if isinstance(m, Exact):
        return m.value if _digits_at_most(m.value, max_digits) else None
    if isinstance(m, ExpOf):
        return None
    if isinstance(m, Power):
        base = force_exact(m.base, max_digits)
        if base is None or base == 0:
            return base
        if base.bit_length() * m.exponent * 30103 // 100000 > max_digits + 2:
            return None
        value = base**m.exponent
        return value if _digits_at_most(value, max_digits) else None
    if isinstance(m, Sum) or isinstance(m, Prod):
        values = []
        for p in m.parts:
            v = force_exact(p, max_digits)
            if v is None:
                return None
            values.append(v)
        acc = 0 if isinstance(m, Sum) else 1
        for v in values:
            acc = acc + v if isinstance(m, Sum) else acc * v
        return acc if _digits_at_most(acc, max_digits) else None
    if isinstance(m, MaxOf):
        try:
            best = m.parts[0]
            for p in m.parts[1:]:
                if compare(p, best) is Comparison.GREATER:
                    best = p
        except IndistinguishableError:
            return None
        return force_exact(best, max_digits)
    raise MagnitudeInputError(f"not a magnitude: {m!r}")


def compare(m1: Magnitude, m2: Magnitude) -> Comparison:
    """Rigorous three-way comparison; raises IndistinguishableError if stuck."""
    if m1 == m2:
        return Comparison.EQUAL
    z1, z2 = _is_zero(m1), _is_zero(m2)
    if z1 or z2:
        if z1 and z2:
            return Comparison.EQUAL
        return Comparison.LESS if z1 else Comparison.GREATER
    v1 = force_exact(m1)
    v2 = force_exact(m2)
    if v1 is not None and v2 is not None:
        if v1 == v2:
            return Comparison.EQUAL
        return Comparison.LESS if v1 < v2 else Comparison.GREATER
    prec = _PREC_START
    while prec <= _PREC_CEILING:
        i1 = ln_interval(m1, prec)
        i2 = ln_interval(m2, prec)
        if i1[1] < i2[0]:
            return Comparison.LESS
        if i1[0] > i2[1]:
            return Comparison.GREATER
        if i1[0] == i1[1] == i2[0] == i2[1]:
            return Comparison.EQUAL  # both logs pinned to the same exact rational
        prec *= 2
    raise IndistinguishableError(
        f"magnitudes not separated at {_PREC_CEILING} bits of precision"
    )


def digit_count(m: Magnitude) -> int:
    """floor(log10(m)) + 1, correct to within 1; exact for materialized values."""
    v = force_exact(m)
    if v is not None:
        return int_digits(v)
    prec = _PREC_START
    while True:
        iv = ln_interval(m, prec)
        l10_lo, l10_hi = ln10_interval(prec)
        d_lo = iv[0] / l10_hi
        d_hi = iv[1] / l10_lo
        f_lo = d_lo.numerator // d_lo.denominator
        f_hi = d_hi.numerator // d_hi.denominator
        if f_lo == f_hi:
            return f_lo + 1
        if prec >= _PREC_CEILING:
            if f_hi - f_lo == 1:
                return f_hi + 1  # true count is f_lo+1 or f_hi+1: within 1 either way
            raise IndistinguishableError("digit count not pinned at the precision ceiling")
        prec *= 2
