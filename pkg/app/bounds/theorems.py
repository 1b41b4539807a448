"""
Sharp bounds on the zeroth-order general Randić index of a tree in terms of
its order n and domination number γ

    F1   1 <= γ <= n/3           upper for 0 < α < 1, lower otherwise
    F2   ⌈n/3⌉ <= γ <= ⌊n/2⌋     upper for 0 < α < 1, lower otherwise
    F3   1 <= γ <= ⌊n/2⌋         lower for 0 < α < 1, upper otherwise
"""

import logging
from dataclasses import dataclass
from enum import Enum
from numbers import Real
from typing import Dict, List

from app.bounds.numerics import Number, geq_with_tolerance, is_close, leq_with_tolerance, normalize_alpha, power
from app.bounds.regime import AlphaRegime, require_regime
from app.errors import BoundDomainError

logger = logging.getLogger(__name__)


class TheoremId(Enum):
    F1_BOUND = 'F1_BOUND'
    F2_BOUND = 'F2_BOUND'
    F3_BOUND = 'F3_BOUND'


class Direction(Enum):
    UPPER = 'upper'
    LOWER = 'lower'


def direction_for(theorem: TheoremId, regime: AlphaRegime) -> Direction:
    if regime is AlphaRegime.DEGENERATE:
        raise BoundDomainError("No bound direction for a degenerate alpha")
    concave = regime is AlphaRegime.CONCAVE_UNIT
    if theorem is TheoremId.F3_BOUND:
        return Direction.LOWER if concave else Direction.UPPER
    return Direction.UPPER if concave else Direction.LOWER


@dataclass(frozen=True)
class BoundResult:
    theorem_id: TheoremId
    direction: Direction
    value: Number
    gamma_range: str
    regime: AlphaRegime
    n: int
    gamma: int
    alpha: Number

    def admits(self, index_value: Number) -> bool:
        """True when index_value lies on the permitted side (within tolerance)"""
        if self.direction is Direction.UPPER:
            return leq_with_tolerance(index_value, self.value)
        return geq_with_tolerance(index_value, self.value)

    def attained_by(self, index_value: Number) -> bool:
        return is_close(index_value, self.value)

    def to_dict(self) -> Dict:
        return {
            'theorem_id': self.theorem_id.value,
            'direction': self.direction.value,
            'value': self.value,
            'gamma_range': self.gamma_range,
            'regime': self.regime.value,
            'n': self.n,
            'gamma': self.gamma,
            'alpha': self.alpha,
        }


def _ceil_third(n: int) -> int:
    return -(-n // 3)


def _check_gamma(n: int, gamma: int):
    if n < 2:
        raise BoundDomainError(f"Bounds need n >= 2, got n={n}")
    if gamma < 1 or 2 * gamma > n:
        raise BoundDomainError(f"Need 1 <= gamma <= n/2, got n={n}, gamma={gamma}")


def _result(theorem: TheoremId, value: Number, gamma_range: str,
            regime: AlphaRegime, n: int, gamma: int, alpha: Number) -> BoundResult:
    return BoundResult(
        theorem_id=theorem,
        direction=direction_for(theorem, regime),
        value=value,
        gamma_range=gamma_range,
        regime=regime,
        n=n,
        gamma=gamma,
        alpha=alpha,
    )


def bound_f1(n: int, gamma: int, alpha: Real) -> BoundResult:
    """Bound attained exactly by the F1(n, γ) trees (1 <= γ <= n/3, n >= 3)"""
    regime = require_regime(alpha)
    alpha = normalize_alpha(alpha)
    if n < 3 or gamma < 1 or 3 * gamma > n:
        raise BoundDomainError(f"F1 bound needs n >= 3 and 1 <= gamma <= n/3, got n={n}, gamma={gamma}")

    q = (n - 1) // gamma
    value = ((power(q, alpha) - power(q - 1, alpha)) * (n - gamma * q)
             + gamma * power(q - 1, alpha)
             + 2 * (power(2, alpha) - 1) * (gamma - 1)
             + (n - gamma))
    return _result(TheoremId.F1_BOUND, value, '1 <= gamma <= n/3', regime, n, gamma, alpha)


def bound_f2(n: int, gamma: int, alpha: Real) -> BoundResult:
    """Bound attained exactly by the F2(n, γ) trees (⌈n/3⌉ <= γ <= ⌊n/2⌋)

    At γ = ⌈n/3⌉ only the path attains it; above, the value is linear in n and γ.
    """
    regime = require_regime(alpha)
    alpha = normalize_alpha(alpha)
    _check_gamma(n, gamma)
    if gamma < _ceil_third(n):
        raise BoundDomainError(f"F2 bound needs gamma >= ceil(n/3), got n={n}, gamma={gamma}")

    two, three = power(2, alpha), power(3, alpha)
    if gamma == _ceil_third(n):
        value = (n - 2) * two + 2
        gamma_range = 'gamma = ceil(n/3)'
    else:
        value = ((-three + 3 * two - 1) * n
                 + 3 * (three - 2 * two + 1) * gamma
                 + 2 * (two - three))
        gamma_range = '(n+3)/3 <= gamma <= n/2'
    return _result(TheoremId.F2_BOUND, value, gamma_range, regime, n, gamma, alpha)


def bound_f3(n: int, gamma: int, alpha: Real) -> BoundResult:
    """Bound attained exactly by F3(n, γ), the star with γ-1 subdivided edges"""
    regime = require_regime(alpha)
    alpha = normalize_alpha(alpha)
    _check_gamma(n, gamma)
    value = power(n - gamma, alpha) + (n - gamma) + (gamma - 1) * power(2, alpha)
    return _result(TheoremId.F3_BOUND, value, '1 <= gamma <= floor(n/2)', regime, n, gamma, alpha)


def bounds_for(n: int, gamma: int, alpha: Real) -> List[BoundResult]:
    """Every bound that applies at (n, γ), ordered F1, F2, F3"""
    require_regime(alpha)
    _check_gamma(n, gamma)
    results = []
    if 3 * gamma <= n:
        results.append(bound_f1(n, gamma, alpha))
    if gamma >= _ceil_third(n):
        results.append(bound_f2(n, gamma, alpha))
    results.append(bound_f3(n, gamma, alpha))
    return results
