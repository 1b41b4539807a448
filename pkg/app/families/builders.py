"""
Constructions of the extremal families

  F1(n, γ)  γ stars with ⌊(n-γ)/γ⌋ or ⌈(n-γ)/γ⌉ leaves, joined into a tree by
            γ-1 leaf-to-leaf edges, each leaf used by at most one join
  F2(n, γ)  the path when γ = ⌈n/3⌉; otherwise trees of maximum degree 3
            with 3γ-n leaves, no two of them sharing a neighbour
  F3(n, γ)  the star S_{n-γ+1} with a pendant edge on γ-1 of its leaves
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from app.bounds.numerics import is_close
from app.bounds.theorems import bound_f2
from app.errors import FamilyConstructionError
from app.families.kinds import FamilyKind, FamilyTag, ceil_third
from app.graph.canonical import CanonicalCode, canonical_code
from app.graph.prufer import prufer_decode
from app.graph.tree import Tree, path_tree, tree_from_edges
from app.invariants.domination import domination_number
from app.invariants.randic import zeroth_order_general_randic

logger = logging.getLogger(__name__)

# Exponents checked when a built F2 member certifies itself
_SELF_CHECK_ALPHAS = (2, 0.5, -1)


def _require(tag: FamilyTag, n: int, gamma: int) -> FamilyKind:
    return FamilyKind(tag, n, gamma)


def _check_gamma(tree: Tree, kind: FamilyKind) -> Tree:
    found = domination_number(tree).gamma
    if found != kind.gamma:
        raise FamilyConstructionError(f"{kind} construction has domination number {found}")
    return tree


def build_f3(n: int, gamma: int) -> Tree:
    """Star on n-γ+1 vertices (centre 0) with γ-1 of its leaves extended by one edge"""
    kind = _require(FamilyTag.F3, n, gamma)
    leaves = n - gamma
    edges = [(0, leaf) for leaf in range(1, leaves + 1)]
    for k in range(gamma - 1):
        edges.append((1 + k, leaves + 1 + k))
    return _check_gamma(tree_from_edges(n, edges), kind)


def _macro_trees(k: int) -> List[List[Tuple[int, int]]]:
    """Labeled trees on k stars, each as an edge list"""
    if k == 1:
        return [[]]
    if k == 2:
        return [[(0, 1)]]
    return [prufer_decode(seq, k).edges() for seq in itertools.product(range(k), repeat=k - 2)]


def _join_stars(leaf_counts: Sequence[int], macro_edges: Sequence[Tuple[int, int]]) -> Tree:
    """Stars with the given leaf counts, joined leaf-to-leaf along macro_edges"""
    edges = []
    centre = []
    leaves: List[List[int]] = []
    nxt = 0
    for count in leaf_counts:
        c = nxt
        centre.append(c)
        own = list(range(c + 1, c + 1 + count))
        edges.extend((c, leaf) for leaf in own)
        leaves.append(own)
        nxt = c + 1 + count

    # leaves inside one star are interchangeable; hand them out in order
    used = [0] * len(leaf_counts)
    for a, b in macro_edges:
        edges.append((leaves[a][used[a]], leaves[b][used[b]]))
        used[a] += 1
        used[b] += 1
    return tree_from_edges(nxt, edges)


@lru_cache(maxsize=None)
def _f1_members_cached(n: int, gamma: int) -> Tuple[Tree, ...]:
    kind = _require(FamilyTag.F1, n, gamma)
    q, t = divmod(n - gamma, gamma)
    members: Dict[CanonicalCode, Tree] = {}
    rejected = 0

    for macro in _macro_trees(gamma):
        macro_degree = [0] * gamma
        for a, b in macro:
            macro_degree[a] += 1
            macro_degree[b] += 1
        for large in itertools.combinations(range(gamma), t):
            counts = [q + 1 if i in large else q for i in range(gamma)]
            if any(macro_degree[i] > counts[i] for i in range(gamma)):
                continue
            tree = _join_stars(counts, macro)
            code = canonical_code(tree)
            if code in members:
                continue
            if domination_number(tree).gamma != gamma:
                rejected += 1
                continue
            members[code] = tree

    logger.debug(f"{kind}: {len(members)} members, {rejected} joins with smaller domination number")
    return tuple(members[code] for code in sorted(members))


def build_f1_members(n: int, gamma: int) -> List[Tree]:
    """All non-isomorphic F1(n, γ) trees, ordered by canonical code"""
    return list(_f1_members_cached(n, gamma))


def _comb_with_subdivision(spine: int, extra: int) -> Tree:
    """Comb on `spine` vertices whose first spine edge carries `extra` inner vertices"""
    edges = []
    spine_vertices = list(range(spine))
    nxt = spine
    for s in spine_vertices:
        edges.append((s, nxt))
        nxt += 1
    chain = [spine_vertices[0]] + list(range(nxt, nxt + extra)) + [spine_vertices[1]]
    nxt += extra
    edges.extend(zip(chain, chain[1:]))
    edges.extend(zip(spine_vertices[1:], spine_vertices[2:]))
    return tree_from_edges(nxt, edges)


def build_f2_member(n: int, gamma: int) -> Tree:
    """One F2(n, γ) tree

    For γ >= (n+3)/3: a comb on 3γ-n spine vertices whose first spine edge
    is subdivided by 3(n-2γ) vertices. The leaves and the middle vertex of
    every subdividing triple form an efficient minimum dominating set.
    """
    kind = _require(FamilyTag.F2, n, gamma)
    if gamma == ceil_third(n):
        return _check_gamma(path_tree(n), kind)

    tree = _check_gamma(_comb_with_subdivision(3 * gamma - n, 3 * (n - 2 * gamma)), kind)
    for alpha in _SELF_CHECK_ALPHAS:
        index = zeroth_order_general_randic(tree, alpha)
        bound = bound_f2(n, gamma, alpha).value
        if not is_close(index, bound):
            raise FamilyConstructionError(f"{kind} member has index {index} != bound {bound} at alpha={alpha}")
    return tree


def family_members(kind: FamilyKind) -> List[Tree]:
    """The builder output for a kind: all F1 members, one F2 member, the F3 tree"""
    if kind.tag is FamilyTag.F1:
        return build_f1_members(kind.n, kind.gamma)
    if kind.tag is FamilyTag.F2:
        return [build_f2_member(kind.n, kind.gamma)]
    return [build_f3(kind.n, kind.gamma)]
