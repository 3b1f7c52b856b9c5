"""Closed-form recall/recognition probabilities in exact rational arithmetic.

A damaged vector with m noise components is decoded when its Hamming
distance to the trace is at most k_max0(N, theta). The distance is
Binomial(m, 1/2), so

    P(m, N, theta) = sum_{k=0}^{min(m, k_max0)} C(m, k) / 2^m.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .coding import DamageError, DimensionError
from .network import SignumVariant

# Fractions are already normalised, exact and hashable.
ExactProb = Fraction


class ThetaRangeError(ValueError):
    """Threshold outside the range that yields a meaningful k_max0."""


class ParityError(ValueError):
    pass


@dataclass(frozen=True)
class ThetaRange:
    theta_min: int
    theta_max: int

    def __contains__(self, theta):
        return self.theta_min <= theta <= self.theta_max

    def __iter__(self):
        return iter(range(self.theta_min, self.theta_max + 1))


def k_max0(N, theta, variant=SignumVariant.MINUS):
    """Largest Hamming distance still decoded as the trace at threshold `theta`.

    MINUS decodes when N - 2D > theta, PLUS when N - 2D >= theta. Callers clamp
    with min(m, k_max0); the value may be negative or exceed N outside the
    valid range.
    """
    if variant is SignumVariant.PLUS:
        return (N - theta) // 2
    return (N - theta - 1) // 2


def valid_theta_range(N, variant=SignumVariant.MINUS):
    """Thresholds for which 0 <= k_max <= N.

    For MINUS this is [-(N+1), N-1] for odd N and [-(N+2), N-2] for even N.
    PLUS at theta behaves like MINUS at theta - 1, so its range is shifted up
    by one; without the shift an even-N PLUS sweep could never reach the
    k_max0 = 0 operating point.
    """
    if N < 1:
        raise DimensionError(f"N must be positive, got {N}")
    if N % 2:
        lo, hi = -(N + 1), N - 1
    else:
        lo, hi = -(N + 2), N - 2
    if variant is SignumVariant.PLUS:
        lo, hi = lo + 1, hi + 1
    return ThetaRange(lo, hi)


def recall_probability(m, N, theta, variant=SignumVariant.MINUS):
    if N < 1:
        raise DimensionError(f"N must be positive, got {N}")
    if not 0 <= m <= N:
        raise DamageError(f"damage m={m} outside 0..{N}")
    if theta not in valid_theta_range(N, variant):
        raise ThetaRangeError(f"theta={theta} outside {valid_theta_range(N, variant)} for N={N}")
    k_max = min(m, k_max0(N, theta, variant))
    return Fraction(sum(comb(m, k) for k in range(k_max + 1)), 2**m)


def delta_p(N):
    """Half the probability of a tie Q = 0 under pure noise: C(N, N/2) / 2^(N+1)."""
    if N < 1 or N % 2:
        raise ParityError(f"delta_p needs a positive even N, got {N}")
    return Fraction(comb(N, N // 2), 2 ** (N + 1))
