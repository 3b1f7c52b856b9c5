"""Cue-index estimation: place empirical (F, P) points between the model's q = j/N curves.

Model curves are discrete point sets; between operating points they are
joined linearly, and below the smallest false alarm the first segment is
extended (clamped to [0, 1]). Curve values increase with q at every F, so a
point is bracketed by the two adjacent grid curves around it.
"""
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .coding import DimensionError
from .network import SignumVariant
from .roc import mroc_curve, roc_curve

DEFAULT_TOLERANCE = Fraction(1, 10**9)


class CurveMode(enum.Enum):
    ROC = "roc"
    MROC = "mroc"


class UndeterminedError(ValueError):
    """All model curves meet at F = 1, so such a point carries no cue information."""


def to_fraction(x):
    if isinstance(x, float):
        return Fraction(repr(x))  # 0.1 -> 1/10, not the binary expansion
    return Fraction(x)


@dataclass(frozen=True)
class EmpiricalPoint:
    F: Fraction
    P: Fraction
    label: str = None

    def __post_init__(self):
        object.__setattr__(self, "F", to_fraction(self.F))
        object.__setattr__(self, "P", to_fraction(self.P))
        if not 0 < self.F <= 1:
            raise ValueError(f"false alarm must lie in (0, 1], got {self.F}")
        if not 0 <= self.P <= 1:
            raise ValueError(f"hit probability must lie in [0, 1], got {self.P}")


@dataclass(frozen=True)
class QBracket:
    """Interval of cue indices on the grid j/N; None marks an unbounded side."""

    N: int
    lower: Fraction = None
    upper: Fraction = None
    lower_closed: bool = False
    upper_closed: bool = False

    @property
    def degenerate(self):
        return self.lower is not None and self.lower == self.upper

    @property
    def below_chance(self):
        return self.lower is None

    @property
    def above_top(self):
        return self.upper is None

    def intersect(self, other):
        """Intersection, or None when empty."""
        lo, lo_c = _max_lower((self.lower, self.lower_closed), (other.lower, other.lower_closed))
        hi, hi_c = _min_upper((self.upper, self.upper_closed), (other.upper, other.upper_closed))
        if lo is not None and hi is not None:
            if lo > hi or (lo == hi and not (lo_c and hi_c)):
                return None
        return QBracket(self.N, lo, hi, lo_c, hi_c)

    def contains(self, other):
        return self.intersect(other) == other

    def _fmt(self, q):
        j = q * self.N
        return f"{j.numerator}/{self.N}" if j.denominator == 1 else str(q)

    def __str__(self):
        lo = "-inf" if self.lower is None else self._fmt(self.lower)
        hi = "inf" if self.upper is None else self._fmt(self.upper)
        return f"{'[' if self.lower_closed else '('}{lo}, {hi}{']' if self.upper_closed else ')'}"


def _max_lower(a, b):
    if a[0] is None:
        return b
    if b[0] is None:
        return a
    if a[0] != b[0]:
        return max(a, b, key=lambda t: t[0])
    return a[0], a[1] and b[1]


def _min_upper(a, b):
    if a[0] is None:
        return b
    if b[0] is None:
        return a
    if a[0] != b[0]:
        return min(a, b, key=lambda t: t[0])
    return a[0], a[1] and b[1]


@lru_cache(maxsize=None)
def _curve(N, m, variant, mode):
    if mode is CurveMode.ROC:
        return tuple((p.F, p.P) for p in roc_curve(N, m, variant).points)
    return tuple((p.F, p.p_CR) for p in mroc_curve(N, m, variant).points)


def interpolate_curve(N, m, variant, mode, F_query):
    """Model curve value at an arbitrary false-alarm rate, exact at operating points."""
    F_query = to_fraction(F_query)
    if not 0 < F_query <= 1:
        raise ValueError(f"F must lie in (0, 1], got {F_query}")
    pts = _curve(N, m, SignumVariant(variant), CurveMode(mode))
    if len(pts) == 1:
        return pts[0][1]
    for (f0, v0), (f1, v1) in zip(pts, pts[1:]):
        if F_query <= f1:
            value = v0 + (v1 - v0) * (F_query - f0) / (f1 - f0)
            return min(max(value, Fraction(0)), Fraction(1))
    return pts[-1][1]  # F_query == 1 == last F, caught by the loop except for rounding


def grid_values(N, variant, mode, F):
    """Model curve values at F for q = 0, 1/N, ..., 1 (index j is q = j/N)."""
    return [interpolate_curve(N, N - j, variant, mode, F) for j in range(N + 1)]


def bracket_point(pt, N, variant=SignumVariant.MINUS, mode=CurveMode.ROC, tolerance=DEFAULT_TOLERANCE):
    """Grid bracket of the cue index consistent with one empirical point.

    A point within `tolerance` of one or more grid curves gets the closed
    bracket spanning all of them; otherwise the open interval between the two
    neighbouring curves. Points below the q = 0 curve or above the q = 1 curve
    get a half-open marker.
    """
    if N < 1:
        raise DimensionError(f"N must be positive, got {N}")
    if pt.F == 1:
        raise UndeterminedError("every model curve passes through F = 1")
    tol = to_fraction(tolerance)
    values = grid_values(N, variant, mode, pt.F)
    q = [Fraction(j, N) for j in range(N + 1)]
    on = [j for j, v in enumerate(values) if abs(pt.P - v) <= tol]
    if on:
        return QBracket(N, q[on[0]], q[on[-1]], True, True)
    if pt.P < values[0]:
        return QBracket(N, None, q[0], False, False)
    if pt.P > values[-1]:
        return QBracket(N, q[-1], None, False, False)
    for j in range(N):
        if values[j] < pt.P < values[j + 1]:
            return QBracket(N, q[j], q[j + 1], False, False)
    raise AssertionError("grid curves are not monotone in q")  # pragma: no cover


@dataclass(frozen=True)
class Segment:
    start: int
    stop: int
    bracket: QBracket


@dataclass(frozen=True)
class FitReport:
    N: int
    variant: SignumVariant
    mode: CurveMode
    brackets: tuple
    consensus: QBracket = None
    segments: tuple = field(default=())

    @property
    def consistent(self):
        return self.consensus is not None

    @property
    def prefix(self):
        return self.segments[0]

    @property
    def suffix(self):
        return self.segments[-1]

    def to_dict(self):
        return {
            "N": self.N,
            "variant": self.variant.value,
            "mode": self.mode.value,
            "consistent": self.consistent,
            "consensus": None if self.consensus is None else str(self.consensus),
            "points": [str(b) for b in self.brackets],
            "segments": [
                {"start": s.start, "stop": s.stop, "bracket": str(s.bracket)} for s in self.segments
            ],
        }


def _segments(brackets):
    """Greedy split into maximal consecutive runs whose brackets intersect."""
    out = []
    start, acc = 0, brackets[0]
    for i, b in enumerate(brackets[1:], start=1):
        nxt = acc.intersect(b)
        if nxt is None:
            out.append(Segment(start, i, acc))
            start, acc = i, b
        else:
            acc = nxt
    out.append(Segment(start, len(brackets), acc))
    return tuple(out)


def fit_curve(points, N, variant=SignumVariant.MINUS, mode=CurveMode.ROC, tolerance=DEFAULT_TOLERANCE):
    """Bracket every point, then intersect the brackets in input order.

    If all brackets share a cue index the report carries that consensus;
    otherwise it is flagged inconsistent and `segments` gives the split into
    maximal consistent runs (first run = longest consistent prefix).
    """
    points = list(points)
    if not points:
        raise ValueError("need at least one empirical point")
    variant, mode = SignumVariant(variant), CurveMode(mode)
    brackets = tuple(bracket_point(p, N, variant, mode, tolerance) for p in points)
    segments = _segments(brackets)
    consensus = segments[0].bracket if len(segments) == 1 else None
    return FitReport(N, variant, mode, brackets, consensus, segments)
