"""
Per-(α, γ) aggregation of tree evaluations

BucketStats.merge is associative and commutative, so partial maps from any
number of workers combine into the same totals.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Set, Tuple

from app.bounds.numerics import Number

BucketKey = Tuple[int, int]  # (alpha position in grid, gamma)


@dataclass
class TheoremTally:
    achievers: Set[str] = field(default_factory=set)
    members: Set[str] = field(default_factory=set)
    violators: Set[str] = field(default_factory=set)

    def merge(self, other: 'TheoremTally') -> 'TheoremTally':
        self.achievers |= other.achievers
        self.members |= other.members
        self.violators |= other.violators
        return self


@dataclass
class BucketStats:
    tree_count: int = 0
    min_value: Optional[Number] = None
    max_value: Optional[Number] = None
    theorems: Dict[str, TheoremTally] = field(default_factory=dict)

    def add(self, code: str, value: Number, checks: Iterable[Tuple[str, bool, bool, bool]]):
        """Record one tree; checks are (theorem_id, satisfied, attained, member)"""
        self.tree_count += 1
        self.min_value = value if self.min_value is None else min(self.min_value, value)
        self.max_value = value if self.max_value is None else max(self.max_value, value)
        for theorem_id, satisfied, attained, member in checks:
            tally = self.theorems.setdefault(theorem_id, TheoremTally())
            if not satisfied:
                tally.violators.add(code)
            if attained:
                tally.achievers.add(code)
            if member:
                tally.members.add(code)

    def merge(self, other: 'BucketStats') -> 'BucketStats':
        self.tree_count += other.tree_count
        for value in (other.min_value, other.max_value):
            if value is None:
                continue
            self.min_value = value if self.min_value is None else min(self.min_value, value)
            self.max_value = value if self.max_value is None else max(self.max_value, value)
        for theorem_id, tally in other.theorems.items():
            self.theorems.setdefault(theorem_id, TheoremTally()).merge(tally)
        return self


def merge_bucket_maps(maps: Iterable[Dict[BucketKey, BucketStats]]) -> Dict[BucketKey, BucketStats]:
    merged: Dict[BucketKey, BucketStats] = {}
    for partial in maps:
        for key, stats in partial.items():
            merged.setdefault(key, BucketStats()).merge(stats)
    return merged
