from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamroc.estimation import (
    CurveMode,
    EmpiricalPoint,
    QBracket,
    UndeterminedError,
    bracket_point,
    fit_curve,
    interpolate_curve,
)
from hamroc.network import SignumVariant
from hamroc.roc import mroc_curve, roc_curve

MINUS = SignumVariant.MINUS
ROC, MROC = CurveMode.ROC, CurveMode.MROC
q = lambda j, N=9: Fraction(j, N)  # noqa: E731


def closed(j, k=None, N=9):
    return QBracket(N, q(j, N), q(j if k is None else k, N), True, True)


def between(j, N=9):
    return QBracket(N, q(j, N), q(j + 1, N), False, False)


def midpoint(N, j, F, mode=ROC):
    """Point halfway in P between the q = j/N and q = (j+1)/N curves at F."""
    lo = interpolate_curve(N, N - j, MINUS, mode, F)
    hi = interpolate_curve(N, N - j - 1, MINUS, mode, F)
    assert lo < hi
    return EmpiricalPoint(F, (lo + hi) / 2)


def test_empirical_point_validation():
    with pytest.raises(ValueError):
        EmpiricalPoint(0, Fraction(1, 2))
    with pytest.raises(ValueError):
        EmpiricalPoint(Fraction(1, 2), Fraction(3, 2))
    assert EmpiricalPoint(0.1, 0.5).F == Fraction(1, 10)


@pytest.mark.parametrize("mode", [ROC, MROC])
def test_interpolation_exact_at_operating_points(mode):
    for m in range(10):
        curve = roc_curve(9, m) if mode is ROC else mroc_curve(9, m)
        for p in curve.points:
            expected = p.P if mode is ROC else p.p_CR
            assert interpolate_curve(9, m, MINUS, mode, p.F) == expected


@given(st.fractions(min_value=Fraction(1, 10**6), max_value=1))
def test_interpolation_diagonal_and_top(F):
    assert interpolate_curve(9, 9, MINUS, ROC, F) == F
    assert interpolate_curve(9, 0, MINUS, ROC, F) == 1


def test_interpolation_linear_between_points():
    pts = roc_curve(9, 7).points
    a, b = pts[3], pts[4]
    mid = (a.F + b.F) / 2
    assert interpolate_curve(9, 7, MINUS, ROC, mid) == (a.P + b.P) / 2


def test_interpolation_domain():
    with pytest.raises(ValueError):
        interpolate_curve(9, 7, MINUS, ROC, 0)
    with pytest.raises(ValueError):
        interpolate_curve(9, 7, MINUS, ROC, Fraction(3, 2))


def test_bracket_on_curve():
    for p in roc_curve(9, 7).points[:-1]:
        b = bracket_point(EmpiricalPoint(p.F, p.P), 9)
        # points with P = 1 sit on every curve that has reached 1 there
        assert b.lower <= q(2) <= b.upper
        if p.P < 1:
            assert b == closed(2)


def test_bracket_midpoint():
    pt = midpoint(9, 2, Fraction(1, 2))
    assert pt.P == (Fraction(99, 128) + Fraction(57, 64)) / 2
    assert bracket_point(pt, 9) == between(2)
    assert str(bracket_point(pt, 9)) == "(2/9, 3/9)"


def test_bracket_below_diagonal():
    b = bracket_point(EmpiricalPoint(Fraction(1, 2), Fraction(1, 4)), 9)
    assert b.below_chance and b.upper == 0


def test_bracket_undetermined_at_f1():
    with pytest.raises(UndeterminedError):
        bracket_point(EmpiricalPoint(1, 1), 9)


def test_bracket_tolerance():
    p = roc_curve(9, 7).points[4]
    near = EmpiricalPoint(p.F, p.P + Fraction(1, 10**10))
    assert bracket_point(near, 9) == closed(2)
    assert bracket_point(near, 9, tolerance=0) == between(2)


def test_plateau_tie_takes_wide_bracket():
    # at theta=0 every m <= 4 curve equals 1
    b = bracket_point(EmpiricalPoint(Fraction(1, 2), 1), 9)
    assert b == closed(5, 9)


def key(b):
    lo = Fraction(-1) if b.lower is None else b.lower
    hi = Fraction(2) if b.upper is None else b.upper
    return lo, hi


@given(
    st.fractions(min_value=Fraction(1, 1000), max_value=Fraction(999, 1000)),
    st.fractions(min_value=0, max_value=1),
    st.fractions(min_value=0, max_value=1),
    st.sampled_from([ROC, MROC]),
)
def test_bracket_monotone(F, P1, P2, mode):
    lo, hi = sorted([P1, P2])
    a = bracket_point(EmpiricalPoint(F, lo), 9, mode=mode)
    b = bracket_point(EmpiricalPoint(F, hi), 9, mode=mode)
    assert key(a)[0] <= key(b)[0] and key(a)[1] <= key(b)[1]


def test_qbracket_intersection():
    assert between(2).intersect(between(3)) is None
    assert between(2).intersect(closed(3)) is None
    assert closed(2, 5).intersect(between(3)) == between(3)
    assert closed(2, 3).intersect(closed(3, 5)) == closed(3)


def test_fit_single_point():
    pt = midpoint(9, 2, Fraction(1, 2))
    report = fit_curve([pt], 9)
    assert report.consistent and report.consensus == bracket_point(pt, 9)


def test_fit_on_curve():
    pts = [EmpiricalPoint(p.F, p.P) for p in roc_curve(9, 7).points[:5]]
    report = fit_curve(pts, 9)
    assert str(report.consensus) == "[2/9, 2/9]"


def fig4a_points():
    pts = roc_curve(9, 7).points
    low = [midpoint(9, 3, p.F) for p in pts[:3]]
    high = [midpoint(9, 2, p.F) for p in pts[4:6]]
    return low + high


def test_fit_mixed_prefix_suffix():
    report = fit_curve(fig4a_points(), 9)
    assert not report.consistent
    assert len(report.segments) == 2
    assert (report.prefix.start, report.prefix.stop) == (0, 3)
    assert report.prefix.bracket == between(3)
    assert report.suffix.bracket == between(2)
    d = report.to_dict()
    assert d["segments"][0]["bracket"] == "(3/9, 4/9)" and d["segments"][1]["bracket"] == "(2/9, 3/9)"


def test_fit_empty():
    with pytest.raises(ValueError):
        fit_curve([], 9)


@pytest.mark.parametrize("N", range(2, 13))
@pytest.mark.parametrize("mode", [ROC, MROC])
def test_fit_recovers_generating_q(N, mode):
    for m in range(1, N):
        if mode is ROC:
            pts = [EmpiricalPoint(p.F, p.P) for p in roc_curve(N, m).points if p.F < 1]
        else:
            pts = [EmpiricalPoint(p.F, p.p_CR) for p in mroc_curve(N, m).points if p.F < 1]
        report = fit_curve(pts, N, mode=mode)
        assert report.consensus == closed(N - m, N=N), (N, m)
        assert all(b.contains(report.consensus) for b in report.brackets)
