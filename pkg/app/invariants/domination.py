"""
Minimum dominating sets of trees

domination_number runs a three-state dynamic program rooted at vertex 0:
  chosen    - v is in D
  dominated - v is outside D and has a child in D
  pending   - v is outside D and relies on its parent
The subset searches are brute-force oracles for small trees.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List

from app.errors import OracleCostError
from app.graph.tree import Tree
from config import BRUTE_FORCE_MAX_ORDER

logger = logging.getLogger(__name__)

CHOSEN, DOMINATED, PENDING = 0, 1, 2
_UNREACHABLE = 10 ** 9


@dataclass(frozen=True)
class DominationCertificate:
    """A dominating set of minimum size; method names how minimality was established"""

    vertex_set: FrozenSet[int]
    gamma: int
    method: str = 'tree-dp'

    def dominates(self, tree: Tree) -> bool:
        return is_dominating_set(tree, self.vertex_set)

    def to_dict(self) -> Dict:
        return {'gamma': self.gamma, 'vertex_set': sorted(self.vertex_set), 'method': self.method}


def is_dominating_set(tree: Tree, vertices: Iterable[int]) -> bool:
    members = set(vertices)
    return all(v in members or any(w in members for w in tree.adjacency[v]) for v in range(tree.n))


def _rooted_order(tree: Tree):
    parent = [-1] * tree.n
    order = [0]
    visited = [False] * tree.n
    visited[0] = True
    for u in order:
        for w in tree.adjacency[u]:
            if not visited[w]:
                visited[w] = True
                parent[w] = u
                order.append(w)
    children = [[w for w in tree.adjacency[v] if w != parent[v]] for v in range(tree.n)]
    return order, children


def domination_number(tree: Tree) -> DominationCertificate:
    """Minimum dominating set by tree DP with a deterministic backtrace

    Ties prefer putting a vertex in the set, then the lowest-index child.
    """
    order, children = _rooted_order(tree)
    cost = [[0, 0, 0] for _ in range(tree.n)]

    for v in reversed(order):
        kids = children[v]
        cost[v][CHOSEN] = 1 + sum(min(cost[c]) for c in kids)
        cost[v][PENDING] = sum(cost[c][DOMINATED] for c in kids)
        if not kids:
            cost[v][DOMINATED] = _UNREACHABLE
        else:
            base = sum(min(cost[c][CHOSEN], cost[c][DOMINATED]) for c in kids)
            if any(cost[c][CHOSEN] <= cost[c][DOMINATED] for c in kids):
                cost[v][DOMINATED] = base
            else:
                cost[v][DOMINATED] = base + min(cost[c][CHOSEN] - cost[c][DOMINATED] for c in kids)

    state = [PENDING] * tree.n
    root = order[0]
    state[root] = CHOSEN if cost[root][CHOSEN] <= cost[root][DOMINATED] else DOMINATED

    for v in order:
        kids = children[v]
        if state[v] == CHOSEN:
            for c in kids:
                best = min(cost[c])
                state[c] = next(s for s in (CHOSEN, DOMINATED, PENDING) if cost[c][s] == best)
        elif state[v] == PENDING:
            for c in kids:
                state[c] = DOMINATED
        else:
            for c in kids:
                state[c] = CHOSEN if cost[c][CHOSEN] <= cost[c][DOMINATED] else DOMINATED
            if not any(state[c] == CHOSEN for c in kids):
                forced = min(kids, key=lambda c: (cost[c][CHOSEN] - cost[c][DOMINATED], c))
                state[forced] = CHOSEN

    chosen = frozenset(v for v in range(tree.n) if state[v] == CHOSEN)
    gamma = min(cost[root][CHOSEN], cost[root][DOMINATED])
    if len(chosen) != gamma:
        # backtrace and DP value must agree; anything else is a bug
        raise RuntimeError(f"Domination backtrace size {len(chosen)} != DP value {gamma}")
    return DominationCertificate(vertex_set=chosen, gamma=gamma)


def _closed_neighbourhood_masks(tree: Tree) -> List[int]:
    masks = []
    for v in range(tree.n):
        mask = 1 << v
        for w in tree.adjacency[v]:
            mask |= 1 << w
        masks.append(mask)
    return masks


def _guard(tree: Tree, what: str):
    if tree.n > BRUTE_FORCE_MAX_ORDER:
        raise OracleCostError(f"{what} refuses n={tree.n} (limit {BRUTE_FORCE_MAX_ORDER})")


def _dominating_subsets(tree: Tree, size: int):
    masks = _closed_neighbourhood_masks(tree)
    full = (1 << tree.n) - 1
    for subset in itertools.combinations(range(tree.n), size):
        covered = 0
        for v in subset:
            covered |= masks[v]
        if covered == full:
            yield subset


def domination_number_oracle(tree: Tree) -> int:
    """Smallest dominating subset found by increasing-size search"""
    _guard(tree, "Domination oracle")
    for size in range(1, tree.n + 1):
        if next(_dominating_subsets(tree, size), None) is not None:
            return size
    return tree.n


def min_dominating_sets(tree: Tree) -> List[DominationCertificate]:
    """All dominating sets of size γ, in lexicographic vertex order"""
    _guard(tree, "Minimum dominating set enumeration")
    gamma = domination_number(tree).gamma
    return [
        DominationCertificate(vertex_set=frozenset(subset), gamma=gamma, method='subset-search')
        for subset in _dominating_subsets(tree, gamma)
    ]
