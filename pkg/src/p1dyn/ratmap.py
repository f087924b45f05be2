"""Endomorphisms of the projective line as content-normalized binary forms.

A map of degree d is a pair (F, G) of integer binary forms of formal degree
d, stored as coefficient tuples a, b with a[i] the coefficient of
X^(d-i) Y^i.  The pair is normalized so that the gcd of all 2d+2
coefficients is 1 and the first nonzero coefficient is positive; a nonzero
resultant is what makes it an actual endomorphism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .intarith import ArithmeticInputError, factorize, is_prime
from .projline import INFINITY, ProjPoint, canonicalize, point_sort_key


class DegenerateMapError(ValueError):
    """The input does not define an endomorphism of the line."""


@dataclass(frozen=True)
class HomogPair:
    degree: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        d = self.degree
        if d < 1:
            raise DegenerateMapError("degree must be at least 1")
        if len(self.a) != d + 1 or len(self.b) != d + 1:
            raise ArithmeticInputError("coefficient vectors must have length degree+1")
        coeffs = self.a + self.b
        if all(c == 0 for c in self.a) or all(c == 0 for c in self.b):
            raise DegenerateMapError("one side of the pair is identically zero")
        g = 0
        for c in coeffs:
            g = math.gcd(g, c)
        if g != 1:
            raise ArithmeticInputError("pair is not content-normalized")
        first = next(c for c in coeffs if c != 0)
        if first < 0:
            raise ArithmeticInputError("pair is not sign-normalized")

    @property
    def degree_below_2(self) -> bool:
        return self.degree < 2

    def __str__(self):
        return self.source or f"[{_form_str(self.a, self.degree)}:{_form_str(self.b, self.degree)}]"


def _form_str(coeffs, d):
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = []
        if d - i > 0:
            mono.append("X" if d - i == 1 else f"X^{d - i}")
        if i > 0:
            mono.append("Y" if i == 1 else f"Y^{i}")
        body = "*".join(mono)
        if body and abs(c) == 1:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(f"{c}" + (f"*{body}" if body else ""))
    joined = "+".join(parts).replace("+-", "-")
    return joined or "0"


def make_pair(a_coeffs, b_coeffs, source: str = "") -> HomogPair:
    """Normalize fraction or integer coefficient vectors into a HomogPair.

    Scales both sides by the common denominator, divides out the content,
    fixes the sign, and rejects pairs with resultant zero.
    """
    a = [Fraction(c) for c in a_coeffs]
    b = [Fraction(c) for c in b_coeffs]
    if len(a) != len(b) or not a:
        raise ArithmeticInputError("coefficient vectors must have equal positive length")
    scale = 1
    for c in a + b:
        scale = math.lcm(scale, c.denominator)
    ai = [int(c * scale) for c in a]
    bi = [int(c * scale) for c in b]
    g = 0
    for c in ai + bi:
        g = math.gcd(g, c)
    if g == 0:
        raise DegenerateMapError("both sides are identically zero")
    ai = [c // g for c in ai]
    bi = [c // g for c in bi]
    first = next(c for c in ai + bi if c != 0)
    if first < 0:
        ai = [-c for c in ai]
        bi = [-c for c in bi]
    pair = HomogPair(len(a) - 1, tuple(ai), tuple(bi), source)
    if resultant(pair) == 0:
        raise DegenerateMapError("the two forms share a projective root (resultant 0)")
    return pair


def _det_bareiss(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


@lru_cache(maxsize=None)
def resultant(pair: HomogPair) -> int:
    """Determinant of the 2d x 2d Sylvester matrix of the pair."""
    d = pair.degree
    n = 2 * d
    rows = []
    for i in range(d):
        row = [0] * n
        for j, c in enumerate(pair.a):
            row[i + j] = c
        rows.append(row)
    for i in range(d):
        row = [0] * n
        for j, c in enumerate(pair.b):
            row[i + j] = c
        rows.append(row)
    return _det_bareiss(rows)


@dataclass(frozen=True)
class PlaceSet:
    """A finite set of primes together with the archimedean place."""

    finite: frozenset[int]

    @property
    def size(self) -> int:
        return 1 + len(self.finite)

    def contains_prime(self, p: int) -> bool:
        return p in self.finite

    def extended(self, primes) -> "PlaceSet":
        extra = set(self.finite)
        for p in primes:
            if not is_prime(p):
                raise ArithmeticInputError(f"{p} is not prime")
            extra.add(p)
        return PlaceSet(frozenset(extra))

    def __str__(self):
        return "{" + ", ".join(["inf"] + [str(p) for p in sorted(self.finite)]) + "}"


@dataclass(frozen=True)
class ReductionProfile:
    resultant: int
    bad_primes: tuple[int, ...]
    places: PlaceSet


def reduction_profile(pair: HomogPair) -> ReductionProfile:
    """Bad primes (divisors of the resultant) and the minimal place set."""
    res = resultant(pair)
    bad = tuple(sorted(factorize(res))) if abs(res) != 1 else ()
    return ReductionProfile(res, bad, PlaceSet(frozenset(bad)))


def good_reduction(pair: HomogPair, p: int) -> bool:
    if not is_prime(p):
        raise ArithmeticInputError(f"{p} is not prime")
    return resultant(pair) % p != 0


def _eval_form(coeffs, d, x, y):
    xp = 1
    ypows = [1] * (d + 1)
    for i in range(1, d + 1):
        ypows[i] = ypows[i - 1] * y
    acc = 0
    for i in range(d, -1, -1):
        acc += coeffs[i] * xp * ypows[i]
        xp *= x
    return acc


def evaluate(pair: HomogPair, point: ProjPoint) -> ProjPoint:
    """Image of a canonical point, new in canonical coordinates."""
    d = pair.degree
    fx = _eval_form(pair.a, d, point.x, point.y)
    gx = _eval_form(pair.b, d, point.x, point.y)
    return canonicalize(fx, gx)


def _form_derivative_x(coeffs, d):
    return tuple(coeffs[i] * (d - i) for i in range(d))


def _form_derivative_y(coeffs, d):
    return tuple(coeffs[i + 1] * (i + 1) for i in range(d))


def _form_mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, c in enumerate(f):
        if c == 0:
            continue
        for j, e in enumerate(g):
            out[i + j] += c * e
    return out


def wronskian(pair: HomogPair) -> tuple[int, ...]:
    """Coefficients of F_X G_Y - F_Y G_X, a binary form of degree 2d-2."""
    d = pair.degree
    fx = _form_derivative_x(pair.a, d)
    fy = _form_derivative_y(pair.a, d)
    gx = _form_derivative_x(pair.b, d)
    gy = _form_derivative_y(pair.b, d)
    lhs = _form_mul(fx, gy)
    rhs = _form_mul(fy, gx)
    return tuple(l - r for l, r in zip(lhs, rhs))


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return out


def binary_form_rational_roots(w) -> list[ProjPoint]:
    """All rational projective roots of a nonzero integer binary form."""
    if all(c == 0 for c in w):
        raise ArithmeticInputError("the zero form vanishes everywhere")
    roots = []
    if w[0] == 0:
        roots.append(INFINITY)
    if w[-1] == 0:
        roots.append(ProjPoint(0, 1))
    u = list(reversed(w))  # univariate coefficients by ascending degree
    lo = 0
    while u[lo] == 0:
        lo += 1
    hi = len(u) - 1
    while u[hi] == 0:
        hi -= 1
    core = u[lo : hi + 1]
    if len(core) > 1:
        d = len(w) - 1
        for num in _divisors(abs(core[0])):
            for den in _divisors(abs(core[-1])):
                if math.gcd(num, den) != 1:
                    continue
                for x in (num, -num):
                    if _eval_form(w, d, x, den) == 0:
                        roots.append(ProjPoint(x, den))
    return sorted(set(roots), key=point_sort_key)


def critical_points_rational(pair: HomogPair) -> list[ProjPoint]:
    """Rational critical points, from linear factors of the Wronskian."""
    if pair.degree < 2:
        raise ArithmeticInputError("critical points are only defined for degree >= 2")
    return binary_form_rational_roots(wronskian(pair))
