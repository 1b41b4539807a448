"""
Power sums and tolerant comparisons

A nonnegative integer exponent keeps everything in Python integers; any other
exponent goes through numpy.longdouble and comes back as a float.
"""

from numbers import Integral, Real
from typing import Iterable, Union

import numpy as np

from config import RELATIVE_TOLERANCE

Number = Union[int, float]


def normalize_alpha(alpha: Real) -> Number:
    """2.0 -> 2, 0.5 -> 0.5; numpy scalars become Python numbers"""
    if isinstance(alpha, bool):
        raise TypeError("alpha must be a real number, not bool")
    if isinstance(alpha, Integral):
        return int(alpha)
    value = float(alpha)
    if value.is_integer():
        return int(value)
    return value


def is_exact(alpha: Number) -> bool:
    return isinstance(alpha, int) and alpha >= 0


def power(x: int, alpha: Number) -> Number:
    alpha = normalize_alpha(alpha)
    if is_exact(alpha):
        return x ** alpha
    return float(np.longdouble(x) ** np.longdouble(alpha))


def power_sum(values: Iterable[int], alpha: Number) -> Number:
    """Σ x^alpha over values"""
    alpha = normalize_alpha(alpha)
    if is_exact(alpha):
        return sum(x ** alpha for x in values)
    arr = np.asarray(list(values), dtype=np.longdouble)
    if arr.size == 0:
        return 0.0
    return float(np.sum(np.power(arr, np.longdouble(alpha))))


def weighted_power_sum(terms: Iterable, alpha: Number) -> Number:
    """Σ count * x^alpha over (count, x) pairs"""
    alpha = normalize_alpha(alpha)
    pairs = [(int(c), int(x)) for c, x in terms if c]
    if is_exact(alpha):
        return sum(c * x ** alpha for c, x in pairs)
    total = np.longdouble(0)
    for c, x in pairs:
        total += np.longdouble(c) * np.longdouble(x) ** np.longdouble(alpha)
    return float(total)


def is_close(a: Number, b: Number, tol: float = RELATIVE_TOLERANCE) -> bool:
    """Exact for two ints; relative tolerance (absolute below magnitude 1) otherwise"""
    if isinstance(a, int) and isinstance(b, int):
        return a == b
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def leq_with_tolerance(a: Number, b: Number, tol: float = RELATIVE_TOLERANCE) -> bool:
    return a <= b or is_close(a, b, tol)


def geq_with_tolerance(a: Number, b: Number, tol: float = RELATIVE_TOLERANCE) -> bool:
    return a >= b or is_close(a, b, tol)
