"""
Immutable tree on vertices 0..n-1
Edge-list JSON interface: {"n": int, "edges": [[u, v], ...]}
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx
import ujson

from app.errors import InvalidTreeError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Tree:
    """Validated simple tree; adjacency[v] is the sorted neighbour tuple of v"""

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> List[Edge]:
        """Edges as (u, v) with u < v, sorted"""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def pendent_vertices(self) -> List[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def relabel(self, permutation: Sequence[int]) -> 'Tree':
        """Copy with vertex v renamed to permutation[v]"""
        if sorted(permutation) != list(range(self.n)):
            raise InvalidTreeError(f"Not a permutation of 0..{self.n - 1}: {list(permutation)}")
        return tree_from_edges(self.n, [(permutation[u], permutation[v]) for u, v in self.edges()])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def to_dict(self) -> Dict:
        return {'n': self.n, 'edges': [[u, v] for u, v in self.edges()]}

    @classmethod
    def from_dict(cls, data: Dict) -> 'Tree':
        try:
            n = int(data['n'])
            edges = [(int(u), int(v)) for u, v in data['edges']]
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidTreeError(f"Malformed tree document: {e}") from e
        return tree_from_edges(n, edges)


def tree_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate an edge list and build a Tree

    Raises:
        InvalidTreeError: wrong edge count, loop, duplicate edge,
            out-of-range endpoint, or disconnected graph
    """
    if n < 1:
        raise InvalidTreeError(f"Tree needs at least one vertex, got n={n}")

    edge_list = [tuple(e) for e in edges]
    if len(edge_list) != n - 1:
        raise InvalidTreeError(f"Tree on {n} vertices needs {n - 1} edges, got {len(edge_list)}")

    neighbours: List[set] = [set() for _ in range(n)]
    for edge in edge_list:
        if len(edge) != 2:
            raise InvalidTreeError(f"Edge must be a vertex pair: {edge}")
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidTreeError(f"Edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InvalidTreeError(f"Self-loop at vertex {u}")
        if v in neighbours[u]:
            raise InvalidTreeError(f"Duplicate edge ({u}, {v})")
        neighbours[u].add(v)
        neighbours[v].add(u)

    # n-1 edges + connected => acyclic
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in neighbours[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise InvalidTreeError(f"Graph is disconnected ({len(seen)} of {n} vertices reachable from 0)")

    return Tree(n=n, adjacency=tuple(tuple(sorted(nbrs)) for nbrs in neighbours))


def tree_from_networkx(graph: nx.Graph) -> Tree:
    """Tree from a networkx graph; nodes are renumbered 0..n-1 in sorted order"""
    index = {v: i for i, v in enumerate(sorted(graph.nodes()))}
    return tree_from_edges(len(index), [(index[u], index[v]) for u, v in graph.edges()])


def degree_sequence(tree: Tree) -> List[int]:
    """Degree multiset, largest first"""
    return sorted(tree.degrees(), reverse=True)


def path_tree(n: int) -> Tree:
    return tree_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    """Star on n vertices, centre 0"""
    return tree_from_edges(n, [(0, i) for i in range(1, n)])


def spider_tree(legs: Sequence[int]) -> Tree:
    """Centre 0 with a path of legs[i] vertices hanging from it"""
    edges: List[Edge] = []
    nxt = 1
    for length in legs:
        if length < 1:
            raise InvalidTreeError(f"Spider legs must be positive: {list(legs)}")
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return tree_from_edges(nxt, edges)


def load_tree(path: str) -> Tree:
    """Read an edge-list JSON file"""
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = ujson.load(f)
        except ValueError as e:
            raise InvalidTreeError(f"{path}: not valid JSON ({e})") from e
    tree = Tree.from_dict(data)
    logger.debug(f"Loaded tree n={tree.n} from {path}")
    return tree


def dump_tree(tree: Tree) -> str:
    return ujson.dumps(tree.to_dict())
