"""
Free-tree enumeration on top of networkx

`nx.nonisomorphic_trees` walks centre-rooted level sequences with constant
amortized work per tree and yields one graph per isomorphism class in a
fixed order. This module turns that stream into validated Trees and splits
it into shards for the worker pool.
"""

import logging
from typing import Iterator, Optional, Tuple

import networkx as nx

from app.graph.tree import Tree, path_tree, tree_from_networkx

logger = logging.getLogger(__name__)

Shard = Tuple[int, int]


def _graphs(n: int) -> Iterator[nx.Graph]:
    if n < 1:
        raise ValueError(f"Order must be positive, got {n}")
    # networkx only generates from order 2 upward
    if n <= 2:
        yield path_tree(n).to_networkx()
        return
    yield from nx.nonisomorphic_trees(n)


def free_trees(n: int, shard: Optional[Shard] = None) -> Iterator[Tree]:
    """Every free tree on n vertices exactly once

    Args:
        n: order, at least 1
        shard: (index, count) keeps the trees whose stream position is
            congruent to index modulo count; the shards of one count
            partition the stream
    """
    if shard is not None:
        index, count = shard
        if count < 1 or not 0 <= index < count:
            raise ValueError(f"Invalid shard {shard}")

    for position, graph in enumerate(_graphs(n)):
        if shard is not None and position % shard[1] != shard[0]:
            continue
        yield tree_from_networkx(graph)


def free_tree_count(n: int) -> int:
    return sum(1 for _ in _graphs(n))
