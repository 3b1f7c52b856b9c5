"""One-trace Hopfield network: learning, one-step signum retrieval and the three decoders.

The stored trace `x0` gives a rank-1 synapse matrix, so the exit-layer input
is h_j = x0_j * Q with Q the convolution of `x0` and the input. Decoding is
successful when the retrieved vector equals `x0`.

`conv_decode` (Q > theta) is the reference criterion used by the analytic
formulas. The network itself must map every component of `x0` correctly:
components x0_j = +1 see h_j = Q and components x0_j = -1 see h_j = -Q, so

    MINUS:  Q > theta  (if x0 has a +1)  and  Q >= -theta  (if x0 has a -1)
    PLUS:   Q >= theta (if x0 has a +1)  and  Q > -theta   (if x0 has a -1)

(see `network_criterion`). When `x0` has a +1 component and theta >= 0 the
second condition is implied by the first, except for PLUS at theta = 0 with
a mixed-sign `x0`, where the tie Q = 0 is rejected by the network.
"""
import enum

import numpy as np

from .coding import DimensionError, as_pattern, convolution, hamming_distance


class SignumVariant(enum.Enum):
    """Output of a neuron whose input equals the threshold exactly."""

    MINUS = "minus"  # v_j = -1 at h_j == theta (default)
    PLUS = "plus"


def learn(x0):
    """Synapse matrix w_ij = x0_i x0_j for the single stored trace (learning rate 1)."""
    x0 = as_pattern(x0)
    W = np.outer(x0, x0)
    W.flags.writeable = False
    return W


def propagate(W, x_in):
    """Exit-layer inputs h_j = sum_i w_ij v_i with zero bias; rows of a 2-D `x_in` are inputs."""
    W = np.asarray(W)
    x_in = np.asarray(x_in)
    if W.ndim != 2 or W.shape[0] != W.shape[1] or x_in.shape[-1:] != W.shape[:1]:
        raise DimensionError(f"dimension mismatch: W {W.shape}, x_in {x_in.shape}")
    return x_in @ W


def signum_step(h, theta, variant=SignumVariant.MINUS):
    h = np.asarray(h)
    if variant is SignumVariant.PLUS:
        return np.where(h >= theta, 1, -1)
    return np.where(h > theta, 1, -1)


def nn_decode(x0, x_in, theta, variant=SignumVariant.MINUS, W=None):
    """Run the network one step and report whether it reproduces `x0`.

    Pass a precomputed `W = learn(x0)` to avoid rebuilding it per call.
    """
    x0 = as_pattern(x0)
    if W is None:
        W = learn(x0)
    out = signum_step(propagate(W, x_in), theta, variant)
    ok = np.all(out == x0, axis=-1)
    return bool(ok) if ok.ndim == 0 else ok


def _threshold_test(Q, theta, variant):
    ok = (Q >= theta) if variant is SignumVariant.PLUS else (Q > theta)
    return bool(ok) if np.ndim(ok) == 0 else ok


def conv_decode(x0, x_in, theta, variant=SignumVariant.MINUS):
    return _threshold_test(convolution(x0, x_in), theta, variant)


def hamming_decode(x0, x_in, theta, variant=SignumVariant.MINUS):
    from . import analytic

    ok = np.asarray(hamming_distance(x0, x_in)) <= analytic.k_max0(len(x0), theta, variant)
    return bool(ok) if ok.ndim == 0 else ok


def network_criterion(x0, Q, theta, variant=SignumVariant.MINUS):
    """Closed-form success condition of `nn_decode` in terms of Q, exact for every theta."""
    x0 = np.asarray(x0)
    Q = np.asarray(Q)
    ok = np.ones(Q.shape, dtype=bool)
    if np.any(x0 > 0):
        ok &= np.asarray(_threshold_test(Q, theta, variant))
    if np.any(x0 < 0):
        ok &= (-Q <= theta) if variant is SignumVariant.MINUS else (-Q < theta)
    return bool(ok) if ok.ndim == 0 else ok
