from numbers import Real

from app.bounds.numerics import Number, normalize_alpha, power_sum
from app.errors import DegenerateAlphaError
from app.graph.tree import Tree


def zeroth_order_general_randic(tree: Tree, alpha: Real) -> Number:
    """Σ d_v^alpha over all vertices

    Exact integer for a nonnegative integer alpha, float otherwise.
    """
    alpha = normalize_alpha(alpha)
    if tree.n == 1 and alpha <= 0:
        raise DegenerateAlphaError(f"Single vertex has degree 0; 0^{alpha} is undefined")
    return power_sum(tree.degrees(), alpha)


def first_zagreb_index(tree: Tree) -> int:
    """M1 = Σ d_v^2"""
    return zeroth_order_general_randic(tree, 2)


def modified_first_zagreb_index(tree: Tree) -> float:
    """Classic zeroth-order Randić index Σ d_v^(-1/2)"""
    return zeroth_order_general_randic(tree, -0.5)


def pendent_count(tree: Tree) -> int:
    return len(tree.pendent_vertices())
