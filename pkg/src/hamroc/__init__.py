"""Exact ROC/mROC curves for a single-trace binary associative memory unit."""
from .analytic import delta_p, k_max0, recall_probability, valid_theta_range
from .estimation import CurveMode, EmpiricalPoint, bracket_point, fit_curve, interpolate_curve
from .network import SignumVariant
from .roc import false_alarm, kappa, mroc_curve, overall_probabilities, posterior, roc_curve, theta_sweep

__all__ = [
    "CurveMode",
    "EmpiricalPoint",
    "SignumVariant",
    "bracket_point",
    "delta_p",
    "false_alarm",
    "fit_curve",
    "interpolate_curve",
    "k_max0",
    "kappa",
    "mroc_curve",
    "overall_probabilities",
    "posterior",
    "recall_probability",
    "roc_curve",
    "theta_sweep",
    "valid_theta_range",
]
