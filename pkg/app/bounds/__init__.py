# Exponent regimes, smoothing machinery and the theorem bounds
from .numerics import normalize_alpha, power, power_sum, is_close
from .regime import AlphaRegime, require_regime
from .smoothing import lemma1_compare, balanced_extremum, h_value
from .theorems import (
    TheoremId, Direction, BoundResult, direction_for,
    bound_f1, bound_f2, bound_f3, bounds_for,
)

__all__ = [
    'normalize_alpha', 'power', 'power_sum', 'is_close', 'AlphaRegime',
    'require_regime', 'lemma1_compare', 'balanced_extremum', 'h_value',
    'TheoremId', 'Direction', 'BoundResult', 'direction_for',
    'bound_f1', 'bound_f2', 'bound_f3', 'bounds_for',
]
