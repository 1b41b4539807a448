from enum import Enum
from numbers import Real

from app.bounds.numerics import normalize_alpha
from app.errors import DegenerateAlphaError


class AlphaRegime(Enum):
    """Exponent interval that fixes the direction of every bound"""

    CONCAVE_UNIT = 'CONCAVE_UNIT'      # 0 < alpha < 1
    CONVEX_OUTER = 'CONVEX_OUTER'      # alpha < 0 or alpha > 1
    DEGENERATE = 'DEGENERATE'          # alpha in {0, 1}

    @classmethod
    def of(cls, alpha: Real) -> 'AlphaRegime':
        alpha = normalize_alpha(alpha)
        if alpha in (0, 1):
            return cls.DEGENERATE
        if 0 < alpha < 1:
            return cls.CONCAVE_UNIT
        return cls.CONVEX_OUTER


def require_regime(alpha: Real) -> AlphaRegime:
    """Regime of alpha; DEGENERATE raises"""
    regime = AlphaRegime.of(alpha)
    if regime is AlphaRegime.DEGENERATE:
        raise DegenerateAlphaError(f"alpha={alpha} makes the index degree-free; use alpha outside {{0, 1}}")
    return regime
