"""
Smoothing comparisons, balanced partitions and the dominating-set envelope
"""

from numbers import Real
from typing import Sequence

import numpy as np

from app.bounds.numerics import Number, is_exact, normalize_alpha, weighted_power_sum
from app.bounds.regime import require_regime
from app.errors import BoundDomainError


def lemma1_compare(x: Sequence[int], i: int, j: int, alpha: Real) -> int:
    """Sign of f(x) - f(x with x_i-1, x_j+1), f = Σ x^alpha

    -1 for 0 < alpha < 1, +1 for alpha < 0 or alpha > 1.
    """
    require_regime(alpha)
    alpha = normalize_alpha(alpha)
    if not (0 <= i < len(x) and 0 <= j < len(x)) or i == j:
        raise BoundDomainError(f"Indices ({i}, {j}) invalid for a vector of length {len(x)}")
    if any(v < 1 for v in x):
        raise BoundDomainError(f"Entries must be positive integers: {list(x)}")
    xi, xj = int(x[i]), int(x[j])
    if xi - xj < 2:
        raise BoundDomainError(f"Smoothing needs x_i - x_j >= 2, got {xi} - {xj}")

    # Only positions i and j change
    if is_exact(alpha):
        diff = xi ** alpha + xj ** alpha - (xi - 1) ** alpha - (xj + 1) ** alpha
    else:
        a = np.longdouble(alpha)
        diff = (np.longdouble(xi) ** a + np.longdouble(xj) ** a
                - np.longdouble(xi - 1) ** a - np.longdouble(xj + 1) ** a)
    return int(np.sign(diff))


def balanced_extremum(total: int, parts: int, alpha: Real) -> Number:
    """f at the balanced k-part composition t(q+1)^alpha + (k-t)q^alpha

    The maximum over positive compositions for 0 < alpha < 1, the minimum otherwise.
    """
    require_regime(alpha)
    if parts < 1 or total < parts:
        raise BoundDomainError(f"Need total >= parts >= 1, got total={total}, parts={parts}")
    q, t = divmod(total, parts)
    return weighted_power_sum([(t, q + 1), (parts - t, q)], alpha)


def h_value(n: int, gamma: int, d: int, alpha: Real) -> Number:
    """Envelope of the index given a minimum dominating set with l2 - l3 = d

    D holds γ vertices whose degrees sum to n-1+d; the complement holds n-γ
    vertices whose degrees sum to n-1-d. Each side is bounded by its balanced
    partition.
    """
    require_regime(alpha)
    if gamma < 1 or 2 * gamma > n:
        raise BoundDomainError(f"Need 1 <= gamma <= n/2, got n={n}, gamma={gamma}")
    if abs(d) > gamma - 1:
        raise BoundDomainError(f"Need |l2 - l3| <= gamma - 1, got d={d}, gamma={gamma}")
    q, t = divmod(n - 1 + d, gamma)
    q_out, t_out = divmod(n - 1 - d, n - gamma)
    return weighted_power_sum(
        [(t, q + 1), (gamma - t, q), (t_out, q_out + 1), (n - gamma - t_out, q_out)],
        alpha,
    )
