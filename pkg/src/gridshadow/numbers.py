"""Integer and prime primitives used by the construction.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import ResourceBudgetError

BigRational = Fraction

#: Largest exponent M for which the dyadic interval (2^M, 2^(M+1)) is sieved.
DEFAULT_SIEVE_BUDGET = 24

#: Rational upper bound for ln 2 (ln 2 = 0.693147...).
LN2_UPPER = Fraction(6932, 10000)

_SEGMENT = 1 << 16
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Miller-Rabin with the bases above is exact below this bound.
MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


@dataclass(frozen=True)
class PrimeRange:
    """All primes strictly between 2^M and 2^(M+1), ascending."""

    M: int
    primes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)


def two_adic_valuation(x: int) -> int:
    """Return the largest e such that 2^e divides the nonzero integer x."""
    if x == 0:
        raise ValueError("2-adic valuation of 0 is undefined")
    return (x & -x).bit_length() - 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= MR_DETERMINISTIC_LIMIT:
        raise ValueError(f"{n} is beyond the deterministic primality range")
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
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


def small_primes(limit: int) -> list[int]:
    """Primes <= limit by the sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p::p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p with lo < p < hi, by a segmented sieve."""
    start = max(lo + 1, 2)
    if hi <= start:
        return []
    base = small_primes(math.isqrt(hi - 1))
    out: list[int] = []
    seg_lo = start
    while seg_lo < hi:
        size = min(_SEGMENT, hi - seg_lo)
        flags = kernels.sieve_segment(seg_lo, size, base)
        out.extend(seg_lo + i for i, f in enumerate(flags) if f)
        seg_lo += size
    return out


def primes_in_dyadic_interval(M: int, budget: int = DEFAULT_SIEVE_BUDGET) -> PrimeRange:
    if M < 2:
        raise ValueError("M must be at least 2")
    if M > budget:
        raise ResourceBudgetError(f"sieving (2^{M}, 2^{M + 1}) exceeds the budget M <= {budget}")
    return PrimeRange(M, tuple(primes_between(1 << M, 1 << (M + 1))))


def finsler_bound(M: int) -> Fraction:
    """Certified lower bound for 2^M / (3 (M+1) ln 2).

    ln 2 is replaced by :data:`LN2_UPPER`, so the result never overshoots.
    """
    if M < 1:
        raise ValueError("M must be positive")
    return Fraction(1 << M) / (3 * (M + 1) * LN2_UPPER)
