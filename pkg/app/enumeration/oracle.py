"""
Labeled brute-force oracle: decode Prüfer sequences, keep one tree per class
"""

import itertools
import logging
from typing import Iterable, Iterator, Set, Tuple

from app.errors import OracleCostError
from app.graph.canonical import CanonicalCode, canonical_code
from app.graph.prufer import prufer_decode
from app.graph.tree import Tree, path_tree
from config import PRUFER_EXHAUSTIVE_MAX_ORDER, PRUFER_ORACLE_MAX_ORDER

logger = logging.getLogger(__name__)


def _elimination_sequences(n: int) -> Iterable[Tuple[int, ...]]:
    # Label any tree by a leaf-elimination order: the i-th removed leaf is
    # then the smallest leaf at step i and its neighbour carries a larger label.
    return itertools.product(*(range(i + 1, n) for i in range(n - 2)))


def _all_sequences(n: int) -> Iterable[Tuple[int, ...]]:
    return itertools.product(range(n), repeat=n - 2)


def free_trees_oracle(n: int, exhaustive: bool = False) -> Iterator[Tree]:
    """One representative per isomorphism class, in first-decoded order

    By default only sequences with s[i] > i are decoded ((n-1)! of them);
    every class is still reached. exhaustive=True decodes all n^(n-2).
    """
    if n > PRUFER_ORACLE_MAX_ORDER:
        raise OracleCostError(f"Prüfer oracle refuses n={n} (limit {PRUFER_ORACLE_MAX_ORDER})")
    if exhaustive and n > PRUFER_EXHAUSTIVE_MAX_ORDER:
        raise OracleCostError(
            f"Exhaustive Prüfer oracle refuses n={n} (limit {PRUFER_EXHAUSTIVE_MAX_ORDER})"
        )
    if n < 1:
        raise ValueError(f"Order must be positive, got {n}")
    if n <= 2:
        yield path_tree(n)
        return

    sequences = _all_sequences(n) if exhaustive else _elimination_sequences(n)
    seen: Set[CanonicalCode] = set()
    decoded = 0
    for seq in sequences:
        tree = prufer_decode(seq, n)
        decoded += 1
        code = canonical_code(tree)
        if code not in seen:
            seen.add(code)
            yield tree
    logger.debug(f"Prüfer oracle n={n}: {decoded} decoded, {len(seen)} classes")


def labeled_tree_count(n: int) -> int:
    """Distinct labeled trees produced by decoding every sequence (Cayley check)"""
    if n > PRUFER_EXHAUSTIVE_MAX_ORDER:
        raise OracleCostError(f"Labeled count refuses n={n} (limit {PRUFER_EXHAUSTIVE_MAX_ORDER})")
    if n <= 2:
        return 1
    return len({tuple(prufer_decode(seq, n).edges()) for seq in _all_sequences(n)})
