"""
Prüfer codec for labeled trees on vertices 0..n-1
"""

from typing import List, Optional, Sequence

import networkx as nx

from app.errors import InvalidTreeError
from app.graph.tree import Tree, tree_from_networkx


def prufer_decode(seq: Sequence[int], n: Optional[int] = None) -> Tree:
    """Labeled tree for a sequence of length n-2 with entries in [0, n)"""
    if n is None:
        n = len(seq) + 2
    if n < 2 or len(seq) != n - 2:
        raise InvalidTreeError(f"Prüfer sequence for n={n} must have length {n - 2}, got {len(seq)}")
    for s in seq:
        if not 0 <= s < n:
            raise InvalidTreeError(f"Prüfer entry {s} out of range [0, {n})")
    return tree_from_networkx(nx.from_prufer_sequence(list(seq)))


def prufer_encode(tree: Tree) -> List[int]:
    """Inverse of prufer_decode; needs n >= 2"""
    if tree.n < 2:
        raise InvalidTreeError("Prüfer encoding needs at least two vertices")
    return list(nx.to_prufer_sequence(tree.to_networkx()))
