"""ROC and mROC curves over the threshold sweep, Bayesian posteriors, overall probabilities."""
import enum
from dataclasses import dataclass
from fractions import Fraction

from .analytic import recall_probability, valid_theta_range
from .coding import DamageError, DimensionError
from .network import SignumVariant


class PosteriorDomainError(ValueError):
    pass


@dataclass(frozen=True)
class OperatingPoint:
    theta: int
    F: Fraction
    P: Fraction


@dataclass(frozen=True)
class RocCurve:
    N: int
    m: int
    variant: SignumVariant
    points: tuple  # OperatingPoint, ascending F

    @property
    def q(self):
        return Fraction(self.N - self.m, self.N)


@dataclass(frozen=True)
class PosteriorPair:
    p_FR: Fraction
    p_CR: Fraction


class PriorKind(enum.Enum):
    FINITE = "finite"
    PURE_TRACE = "pure_trace"  # m = 0, kappa undefined
    PURE_NOISE = "pure_noise"  # m = N, 1/kappa undefined


@dataclass(frozen=True)
class PriorRatio:
    """Ratio of priors P(damaged trace) / P(pure noise).

    For the m = 0 and m = N edges the ratio does not exist and `value` is None.
    """

    kind: PriorKind
    value: Fraction = None

    @classmethod
    def finite(cls, value):
        value = Fraction(value)
        if value <= 0:
            raise ValueError(f"prior ratio must be positive, got {value}")
        return cls(PriorKind.FINITE, value)


@dataclass(frozen=True)
class MRocPoint:
    theta: int
    F: Fraction
    P: Fraction
    p_FR: Fraction
    p_CR: Fraction


@dataclass(frozen=True)
class MRocCurve:
    N: int
    m: int
    variant: SignumVariant
    points: tuple  # MRocPoint, ascending F
    excluded: bool = False  # m = 0: constant p_CR = 1, conventionally not plotted


@dataclass(frozen=True)
class OverallProbs:
    P_FR: Fraction
    P_CR: Fraction


def _check(N, m):
    if N < 1:
        raise DimensionError(f"N must be positive, got {N}")
    if not 0 <= m <= N:
        raise DamageError(f"damage m={m} outside 0..{N}")


def false_alarm(N, theta, variant=SignumVariant.MINUS):
    """Probability that pure noise (m = N) is decoded as the trace."""
    return recall_probability(N, N, theta, variant)


def theta_sweep(N, variant=SignumVariant.MINUS):
    """One threshold per distinct operating point, ordered by ascending false alarm.

    Threshold k keeps Hamming distances 0..k (k = 0..N); it is the k-th value
    stepping down by 2 from the top of the valid range.
    """
    top = valid_theta_range(N, variant).theta_max
    return [top - 2 * k for k in range(N + 1)]


def roc_curve(N, m, variant=SignumVariant.MINUS):
    _check(N, m)
    points = tuple(
        OperatingPoint(theta, false_alarm(N, theta, variant), recall_probability(m, N, theta, variant))
        for theta in theta_sweep(N, variant)
    )
    return RocCurve(N, m, variant, tuple(sorted(points, key=lambda p: p.F)))


def kappa(m, N):
    """Prior ratio q/d = (N - m)/m, with edge markers at m = 0 and m = N."""
    _check(N, m)
    if m == 0:
        return PriorRatio(PriorKind.PURE_TRACE)
    if m == N:
        return PriorRatio(PriorKind.PURE_NOISE)
    return PriorRatio.finite(Fraction(N - m, m))


def posterior(P, F, prior):
    """Posterior false/correct recall probabilities from Bayes' rule.

    Evaluated as p_CR = kP / (kP + F), which avoids dividing by P when P = 0.
    """
    if prior.kind is PriorKind.PURE_TRACE:
        return PosteriorPair(Fraction(0), Fraction(1))
    if prior.kind is PriorKind.PURE_NOISE:
        return PosteriorPair(Fraction(1), Fraction(0))
    P, F = Fraction(P), Fraction(F)
    if F <= 0:
        raise PosteriorDomainError("false alarm probability must be positive")
    if P < 0:
        raise PosteriorDomainError("hit probability must be non-negative")
    evidence = prior.value * P
    p_CR = evidence / (evidence + F)
    return PosteriorPair(1 - p_CR, p_CR)


def mroc_curve(N, m, variant=SignumVariant.MINUS):
    roc = roc_curve(N, m, variant)
    prior = kappa(m, N)
    points = []
    for pt in roc.points:
        post = posterior(pt.P, pt.F, prior)
        points.append(MRocPoint(pt.theta, pt.F, pt.P, post.p_FR, post.p_CR))
    return MRocCurve(N, m, variant, tuple(points), excluded=(m == 0))


def overall_probabilities(N, m, variant=SignumVariant.MINUS):
    """Uniform mean of the posteriors over all N + 1 operating points."""
    points = mroc_curve(N, m, variant).points
    n = len(points)
    return OverallProbs(
        P_FR=sum((p.p_FR for p in points), Fraction(0)) / n,
        P_CR=sum((p.p_CR for p in points), Fraction(0)) / n,
    )
