"""
Centroid-rooted canonical level sequences for free trees
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from app.graph.tree import Tree


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-invariant code: depth of every vertex in canonical preorder"""

    code: Tuple[int, ...]

    def __str__(self) -> str:
        return ','.join(str(level) for level in self.code)

    def __len__(self) -> int:
        return len(self.code)

    @classmethod
    def parse(cls, text: str) -> 'CanonicalCode':
        return cls(tuple(int(part) for part in text.split(',')))


def _bfs_order(tree: Tree, root: int) -> Tuple[List[int], List[int]]:
    parent = [-1] * tree.n
    order = [root]
    parent[root] = root
    for u in order:
        for w in tree.adjacency[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    parent[root] = -1
    return order, parent


def tree_centroids(tree: Tree) -> List[int]:
    """One or two vertices whose removal leaves the smallest largest component"""
    if tree.n == 1:
        return [0]
    order, parent = _bfs_order(tree, 0)
    size = [1] * tree.n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]

    best: Optional[int] = None
    centroids: List[int] = []
    for v in range(tree.n):
        heaviest = tree.n - size[v]
        for w in tree.adjacency[v]:
            if w != parent[v]:
                heaviest = max(heaviest, size[w])
        if best is None or heaviest < best:
            best = heaviest
            centroids = [v]
        elif heaviest == best:
            centroids.append(v)
    return centroids


def rooted_level_sequence(tree: Tree, root: int) -> Tuple[int, ...]:
    """Canonical level sequence of the tree rooted at `root`

    Subtrees are ordered by decreasing level sequence, so the result is the
    lexicographically largest preorder depth listing for this root.
    """
    order, parent = _bfs_order(tree, root)
    codes: Dict[int, Tuple[int, ...]] = {}
    for v in reversed(order):
        children = sorted(
            (codes.pop(w) for w in tree.adjacency[v] if w != parent[v]),
            reverse=True,
        )
        seq = [0]
        for child in children:
            seq.extend(level + 1 for level in child)
        codes[v] = tuple(seq)
    return codes[root]


def canonical_code(tree: Tree) -> CanonicalCode:
    """Level sequence rooted at the centroid (smaller of two when bicentroidal)"""
    return CanonicalCode(min(rooted_level_sequence(tree, c) for c in tree_centroids(tree)))


def are_isomorphic(a: Tree, b: Tree) -> bool:
    """Independent isomorphism test (VF2 matcher), used to cross-check canonical codes"""
    if a.n != b.n or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())
