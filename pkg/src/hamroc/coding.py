"""Dense +/-1 pattern vectors, damage generation and the convolution/Hamming measures.

Pattern vectors are plain numpy integer arrays whose entries are all -1 or +1.
Functions that take a single vector also accept a 2-D stack of vectors (one
per row) where noted, which lets the enumeration and simulation oracles decode
thousands of inputs in one call.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class DimensionError(ValueError):
    """Invalid vector dimension or mismatched lengths."""


class DamageError(ValueError):
    """Damage count outside 0..N."""


def make_rng(seed=None):
    """Seeded generator used as the explicit random source everywhere.

    Philox is counter-based, so a stream can be split into reproducible,
    independently addressable chunks (see `montecarlo`).
    """
    return np.random.Generator(np.random.Philox(seed))


def as_pattern(x, N=None):
    """Validate `x` as a +/-1 pattern and return it as a read-only int array."""
    arr = np.array(x, dtype=np.int64)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionError(f"pattern must be a non-empty 1-D sequence, got shape {arr.shape}")
    if N is not None and arr.size != N:
        raise DimensionError(f"expected length {N}, got {arr.size}")
    if not np.all(np.abs(arr) == 1):
        raise ValueError("pattern components must be -1 or +1")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class DamageSpec:
    N: int
    m: int

    def __post_init__(self):
        if self.N < 1:
            raise DimensionError(f"N must be positive, got {self.N}")
        if not 0 <= self.m <= self.N:
            raise DamageError(f"damage m={self.m} outside 0..{self.N}")

    @property
    def d(self):
        """Damage degree, the fraction of noise components."""
        return Fraction(self.m, self.N)

    @property
    def q(self):
        """Cue index, the fraction of intact components."""
        return 1 - self.d


def make_random_vector(N, rng):
    if N < 1:
        raise DimensionError(f"N must be positive, got {N}")
    return as_pattern(2 * rng.integers(0, 2, size=N) - 1)


def apply_damage(x0, m, rng):
    """Replace a uniformly chosen m-subset of positions with fresh random signs.

    A replaced position keeps its original value with probability 1/2, so the
    Hamming distance to `x0` is Binomial(m, 1/2), not m.
    """
    x0 = as_pattern(x0)
    N = x0.size
    if not 0 <= m <= N:
        raise DamageError(f"damage m={m} outside 0..{N}")
    x = x0.copy()
    if m:
        positions = rng.choice(N, size=m, replace=False)
        x[positions] = 2 * rng.integers(0, 2, size=m) - 1
    x.flags.writeable = False
    return x


def damage_batch(x0, m, trials, rng):
    """`trials` independent damaged copies of `x0`, one per row.

    Same distribution as repeated `apply_damage` calls, drawn in bulk.
    """
    x0 = as_pattern(x0)
    N = x0.size
    if not 0 <= m <= N:
        raise DamageError(f"damage m={m} outside 0..{N}")
    X = np.broadcast_to(x0, (trials, N)).copy()
    if m and trials:
        # first m columns of a random permutation per row = uniform m-subset
        positions = np.argsort(rng.random((trials, N)), axis=1)[:, :m]
        signs = 2 * rng.integers(0, 2, size=(trials, m)) - 1
        np.put_along_axis(X, positions, signs, axis=1)
    return X


def _check_pair(x0, x):
    x0 = np.asarray(x0)
    x = np.asarray(x)
    if x0.ndim != 1 or x.shape[-1:] != x0.shape:
        raise DimensionError(f"length mismatch: {x0.shape} vs {x.shape}")
    return x0, x


def convolution(x0, x):
    """Q = sum_i x0_i x_i. Accepts a 2-D stack for `x` and returns an array then."""
    x0, x = _check_pair(x0, x)
    Q = x @ x0
    return int(Q) if x.ndim == 1 else Q


def hamming_distance(x0, x):
    x0, x = _check_pair(x0, x)
    D = np.count_nonzero(x != x0, axis=-1)
    return int(D) if x.ndim == 1 else D
