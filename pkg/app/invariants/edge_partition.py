from dataclasses import dataclass
from typing import Iterable, Optional

from app.graph.tree import Tree
from app.invariants.domination import DominationCertificate, min_dominating_sets


@dataclass(frozen=True)
class EdgePartition:
    """Edge counts by endpoint membership in a vertex set D"""

    l1: int  # D to complement
    l2: int  # inside D
    l3: int  # inside the complement

    @property
    def difference(self) -> int:
        """l2 - l3"""
        return self.l2 - self.l3

    def as_tuple(self):
        return (self.l1, self.l2, self.l3)


def edge_partition(tree: Tree, vertices: Iterable[int]) -> EdgePartition:
    members = set(vertices)
    counts = [0, 0, 0]
    for u, v in tree.edges():
        inside = (u in members) + (v in members)
        counts[{1: 0, 2: 1, 0: 2}[inside]] += 1
    return EdgePartition(*counts)


def extremal_partition_witness(tree: Tree) -> Optional[DominationCertificate]:
    """A minimum dominating set with partition (n-γ, 0, γ-1), if any

    That partition is the equality profile shared by the two upper-side
    bounds: every outside vertex has exactly one neighbour in D and the
    outside edges form γ-1 matching edges.
    """
    for cert in min_dominating_sets(tree):
        target = (tree.n - cert.gamma, 0, cert.gamma - 1)
        if edge_partition(tree, cert.vertex_set).as_tuple() == target:
            return cert
    return None
