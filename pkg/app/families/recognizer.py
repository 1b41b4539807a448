"""
Family membership tests
"""

import logging
from collections import Counter
from functools import lru_cache
from typing import FrozenSet, Optional, Tuple

from app.families.builders import build_f1_members, build_f3
from app.families.kinds import FamilyKind, FamilyTag, ceil_third, is_feasible
from app.graph.canonical import CanonicalCode, canonical_code
from app.graph.tree import Tree
from app.invariants.domination import DominationCertificate, domination_number, min_dominating_sets

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _f1_codes(n: int, gamma: int) -> FrozenSet[CanonicalCode]:
    return frozenset(canonical_code(t) for t in build_f1_members(n, gamma))


@lru_cache(maxsize=None)
def _f3_code(n: int, gamma: int) -> CanonicalCode:
    return canonical_code(build_f3(n, gamma))


def family_codes(kind: FamilyKind) -> Optional[FrozenSet[CanonicalCode]]:
    """Canonical codes of every member, or None when only a predicate is available (F2)"""
    if kind.tag is FamilyTag.F1:
        return _f1_codes(kind.n, kind.gamma)
    if kind.tag is FamilyTag.F3:
        return frozenset([_f3_code(kind.n, kind.gamma)])
    return None


def _has_two_pendent_neighbours(tree: Tree) -> bool:
    pendent = set(tree.pendent_vertices())
    return any(sum(1 for w in tree.adjacency[v] if w in pendent) >= 2 for v in range(tree.n))


def _profile(tree: Tree, vertices) -> Counter:
    return Counter(tree.degree(v) for v in vertices)


def _matches_clause_one(tree: Tree, inside, outside) -> bool:
    # Only cardinality-consistent when n = 2γ+2
    n, gamma = tree.n, len(inside)
    if n != 2 * gamma + 2:
        return False
    want_inside = Counter({3: 3 * gamma - n - 2, 2: 2 * (n - 2 * gamma)})
    want_outside = Counter({2: n - 2 * gamma + 2, 1: 3 * gamma - n})
    return _profile(tree, inside) == +want_inside and _profile(tree, outside) == +want_outside


def _matches_clause_two(tree: Tree, inside, outside) -> bool:
    n, gamma = tree.n, len(inside)
    want_inside = Counter({2: n - 2 * gamma, 1: 3 * gamma - n})
    want_outside = Counter({2: 2 * (n - 2 * gamma + 1), 3: 3 * gamma - n - 2})
    if _profile(tree, inside) != +want_inside or _profile(tree, outside) != +want_outside:
        return False
    return all(sum(1 for w in tree.adjacency[v] if w in inside) == 1 for v in outside)


def f2_clause_witness(tree: Tree, gamma: int) -> Optional[Tuple[int, DominationCertificate]]:
    """(clause, minimum dominating set) proving F2 membership for γ >= (n+3)/3

    Returns None when no minimum dominating set has either degree profile, or
    when some vertex has two pendent neighbours.
    """
    n = tree.n
    # both clauses share this aggregate degree multiset
    aggregate = Counter({1: 3 * gamma - n, 3: 3 * gamma - n - 2, 2: 3 * n - 6 * gamma + 2})
    if Counter(tree.degrees()) != +aggregate or _has_two_pendent_neighbours(tree):
        return None
    for cert in min_dominating_sets(tree):
        if cert.gamma != gamma:
            return None
        inside = cert.vertex_set
        outside = frozenset(range(tree.n)) - inside
        if _matches_clause_two(tree, inside, outside):
            return 2, cert
        if _matches_clause_one(tree, inside, outside):
            return 1, cert
    return None


def is_member(tree: Tree, kind: FamilyKind) -> bool:
    """Whether tree belongs to the family kind; γ(tree) is recomputed here"""
    if tree.n != kind.n or not is_feasible(kind.tag, kind.n, kind.gamma):
        return False
    if domination_number(tree).gamma != kind.gamma:
        return False

    if kind.tag is FamilyTag.F3:
        return canonical_code(tree) == _f3_code(kind.n, kind.gamma)
    if kind.tag is FamilyTag.F1:
        return canonical_code(tree) in _f1_codes(kind.n, kind.gamma)

    if kind.gamma == ceil_third(kind.n):
        return tree.max_degree() <= 2
    return f2_clause_witness(tree, kind.gamma) is not None
