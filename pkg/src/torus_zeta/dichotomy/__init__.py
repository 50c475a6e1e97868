from .growth import (BinomialBasis, ExceptionalSet, GrowthReport, binomial_basis,
                     build_exceptional_set, lcm_den_growth, vanishing_poly)
from .hankel import hankel_det, kronecker_detect, pade_solvable, polya_decay_report
from .radical import RadicalElement, RadicalField, denominator, field_norm
from .recurrence import (RationalWindow, RecurrenceFit, fit_polyexp,
                         multiply_window_by_poly, rational_window)
from .window import QQ, SeriesWindow

__all__ = [
    "BinomialBasis", "ExceptionalSet", "GrowthReport", "QQ", "RadicalElement",
    "RadicalField", "RationalWindow", "RecurrenceFit", "SeriesWindow",
    "binomial_basis", "build_exceptional_set", "denominator", "field_norm",
    "fit_polyexp", "hankel_det", "kronecker_detect", "lcm_den_growth",
    "multiply_window_by_poly", "pade_solvable", "polya_decay_report",
    "rational_window", "vanishing_poly",
]
