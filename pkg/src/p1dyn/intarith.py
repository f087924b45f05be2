"""Exact integer arithmetic helpers: valuations, primality, factorization.

Everything here is unconditional: a result is either exact or an explicit
error is raised.  Nothing falls back to floating point or to probabilistic
answers.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Deterministic Miller-Rabin with the first 13 primes as witnesses is a
# proven primality test strictly below this bound.
_MR_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_TRIAL_LIMIT = 10 ** 6
_DEFAULT_RHO_BUDGET = 5_000_000


class ArithmeticInputError(ValueError):
    """Raised for arguments outside an operation's domain."""


class PrimalityRangeError(ArithmeticInputError):
    """Raised when a primality query exceeds the deterministic witness range."""


class FactorizationIncompleteError(RuntimeError):
    """Raised when the factoring budget runs out before a full factorization."""

    def __init__(self, n, partial, remaining):
        super().__init__(
            f"factoring budget exhausted on {n}; unfactored cofactor {remaining}"
        )
        self.n = n
        self.partial = partial
        self.remaining = remaining


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(limit + 1) if sieve[i]]


_PRIMES_10K = _small_primes(10_000)


def is_prime(n: int) -> bool:
    """Deterministic primality for 0 <= n < 3.317e24; larger inputs are rejected."""
    if n < 0:
        raise ArithmeticInputError("primality is asked of nonnegative integers")
    if n >= _MR_LIMIT:
        raise PrimalityRangeError(
            f"{n} exceeds the deterministic Miller-Rabin range {_MR_LIMIT}"
        )
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def valuation(x, p: int) -> int:
    """p-adic valuation of a nonzero integer or Fraction."""
    if not is_prime(p):
        raise ArithmeticInputError(f"{p} is not prime")
    if x == 0:
        raise ArithmeticInputError("valuation of 0 is infinite")
    if isinstance(x, Fraction):
        return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)
    return _int_valuation(int(x), p)


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _brent_rho(n: int, budget: list[int]) -> int:
    # Brent's cycle variant; deterministic over increasing polynomial offsets.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                budget[0] -= min(m, r - k)
                if budget[0] <= 0:
                    return 0
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                budget[0] -= 1
                if budget[0] <= 0:
                    return 0
        if g != n:
            return g
    return 0


def factorize(n: int, *, trial_limit: int = _TRIAL_LIMIT,
              rho_budget: int = _DEFAULT_RHO_BUDGET) -> dict[int, int]:
    """Full prime factorization of |n| as an ordered {prime: exponent} map.

    Trial division runs up to ``trial_limit`` (stopping early once p*p exceeds
    the cofactor), then a Brent rho stage splits anything left.  If the rho
    iteration budget runs out, FactorizationIncompleteError carries the partial
    factorization; a partial answer is never returned silently.
    """
    if n == 0:
        raise ArithmeticInputError("0 has no prime factorization")
    n = abs(n)
    found: dict[int, int] = {}
    for p in _PRIMES_10K:
        if p > trial_limit or p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if n > 1 and _PRIMES_10K[-1] < trial_limit and _PRIMES_10K[-1] ** 2 <= n:
        p = _PRIMES_10K[-1] + 1
        p += p % 2 == 0
        while p <= trial_limit and p * p <= n:
            while n % p == 0:
                found[p] = found.get(p, 0) + 1
                n //= p
            p += 2
    budget = [rho_budget]
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        g = _brent_rho(m, budget)
        if g in (0, 1, m):
            partial = dict(sorted(found.items()))
            remaining = m
            for other in stack:
                remaining *= other
            raise FactorizationIncompleteError(n, partial, remaining)
        stack.append(g)
        stack.append(m // g)
    return dict(sorted(found.items()))


def fraction_support(q: Fraction) -> dict[int, int]:
    """Primes with nonzero valuation in a nonzero rational, with valuations."""
    if q == 0:
        raise ArithmeticInputError("0 has no support")
    support = {p: e for p, e in factorize(q.numerator).items()} if abs(q.numerator) != 1 else {}
    for p, e in factorize(q.denominator).items() if q.denominator != 1 else ():
        support[p] = support.get(p, 0) - e
    return dict(sorted(support.items()))
