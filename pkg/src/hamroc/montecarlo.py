"""Independent oracles for the analytic probabilities: full enumeration and seeded simulation.

Neither path touches `analytic`; both push actual damaged vectors through the
decoders in `network`.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, sqrt

import numpy as np

from .coding import DamageError, DimensionError, as_pattern, damage_batch
from .network import SignumVariant, conv_decode, hamming_decode, learn, nn_decode

DEFAULT_BUDGET = 10**7
CHUNK = 1 << 16

DECODERS = ("network", "convolution", "hamming")


class EnumerationTooLarge(RuntimeError):
    pass


def _default_x0(N, x0):
    if N < 1:
        raise DimensionError(f"N must be positive, got {N}")
    return np.ones(N, dtype=np.int64) if x0 is None else as_pattern(x0, N)


def _decoder(name, x0):
    if name == "network":
        W = learn(x0)
        return lambda X, theta, variant: nn_decode(x0, X, theta, variant, W=W)
    if name == "convolution":
        return lambda X, theta, variant: conv_decode(x0, X, theta, variant)
    if name == "hamming":
        return lambda X, theta, variant: hamming_decode(x0, X, theta, variant)
    raise ValueError(f"unknown decoder {name!r}; expected one of {DECODERS}")


def _sign_patterns(m):
    """All 2^m noise sign patterns, row r holding the bits of r as -1/+1."""
    bits = (np.arange(2**m)[:, None] >> np.arange(m)) & 1
    return 2 * bits - 1


def enumerate_damaged(x0, m):
    """Yield blocks of damaged vectors, one block per damaged-position subset.

    Altogether the blocks hold C(N, m) * 2^m rows, every (subset, sign pattern)
    pair exactly once, so duplicates in vector space are counted with their
    multiplicity.
    """
    N = x0.size
    signs = _sign_patterns(m)
    for positions in combinations(range(N), m):
        X = np.broadcast_to(x0, (signs.shape[0], N)).copy()
        X[:, list(positions)] = signs
        yield X


def exhaustive_probability(N, m, theta, variant=SignumVariant.MINUS, decoder="convolution",
                           x0=None, budget=DEFAULT_BUDGET):
    """Exact success fraction over every damaged version of `x0` (all-ones by default)."""
    x0 = _default_x0(N, x0)
    if not 0 <= m <= N:
        raise DamageError(f"damage m={m} outside 0..{N}")
    total = comb(N, m) * 2**m
    if total > budget:
        raise EnumerationTooLarge(f"{total} damaged vectors exceed budget {budget}")
    if decoder == "network" and theta < 0:
        raise ValueError("network decoder only matches the threshold criterion for theta >= 0")
    decode = _decoder(decoder, x0)
    hits = sum(int(np.count_nonzero(decode(X, theta, variant))) for X in enumerate_damaged(x0, m))
    return Fraction(hits, total)


@dataclass(frozen=True)
class SimEstimate:
    successes: int
    trials: int
    seed: int

    @property
    def p_hat(self):
        return self.successes / self.trials

    @property
    def stderr(self):
        p = self.p_hat
        return sqrt(p * (1 - p) / self.trials)


@dataclass(frozen=True)
class RocEstimate:
    theta: int
    F: SimEstimate
    P: SimEstimate


def _chunk_rng(seed, chunk):
    # Philox keyed directly by the seed; chunk c starts c * 2^128 draws in,
    # so any chunk can be regenerated without replaying the earlier ones.
    return np.random.Generator(np.random.Philox(key=seed).jumped(chunk))


def _chunks(trials):
    for c, start in enumerate(range(0, trials, CHUNK)):
        yield c, min(CHUNK, trials - start)


def simulated_batch(x0, m, trials, seed, chunk):
    """The damaged vectors of one chunk of a seeded run."""
    size = dict(_chunks(trials))[chunk]
    return damage_batch(x0, m, size, _chunk_rng(seed, chunk))


def reconstruct_trial(x0, m, trials, seed, i):
    """Damaged vector used by trial `i` of a seeded run of `trials` trials."""
    x0 = as_pattern(x0)
    if not 0 <= i < trials:
        raise IndexError(i)
    return simulated_batch(x0, m, trials, seed, i // CHUNK)[i % CHUNK]


def count_successes(x0, m, thetas, variant, trials, seed, chunks=None):
    """Success counts per threshold over the given chunks (all by default).

    Counts from disjoint chunk sets add up to the full-run counts.
    """
    x0 = as_pattern(x0)
    counts = np.zeros(len(thetas), dtype=np.int64)
    for c, size in _chunks(trials):
        if chunks is not None and c not in chunks:
            continue
        X = damage_batch(x0, m, size, _chunk_rng(seed, c))
        for i, theta in enumerate(thetas):
            counts[i] += np.count_nonzero(conv_decode(x0, X, theta, variant))
    return [int(c) for c in counts]


def estimate_probability(N, m, theta, variant=SignumVariant.MINUS, trials=10**5, seed=0, x0=None):
    if trials < 1:
        raise ValueError("trials must be >= 1")
    x0 = _default_x0(N, x0)
    if not 0 <= m <= N:
        raise DamageError(f"damage m={m} outside 0..{N}")
    (hits,) = count_successes(x0, m, [theta], variant, trials, seed)
    return SimEstimate(hits, trials, seed)


def estimate_roc(N, m, variant=SignumVariant.MINUS, trials=10**5, seed=0, x0=None):
    """Simulated operating points over the threshold sweep.

    Every threshold is scored on the same damaged vectors, and the pure-noise
    trials share the seed with the damaged ones, so m = N gives F_hat == P_hat.
    """
    from .roc import theta_sweep

    if trials < 1:
        raise ValueError("trials must be >= 1")
    x0 = _default_x0(N, x0)
    if not 0 <= m <= N:
        raise DamageError(f"damage m={m} outside 0..{N}")
    thetas = theta_sweep(N, variant)
    f_hits = count_successes(x0, N, thetas, variant, trials, seed)
    p_hits = f_hits if m == N else count_successes(x0, m, thetas, variant, trials, seed)
    return [
        RocEstimate(theta, SimEstimate(f, trials, seed), SimEstimate(p, trials, seed))
        for theta, f, p in zip(thetas, f_hits, p_hits)
    ]
