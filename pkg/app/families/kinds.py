from dataclasses import dataclass
from enum import Enum

from app.bounds.theorems import TheoremId
from app.errors import FamilyConstructionError


class FamilyTag(Enum):
    F1 = 'f1'
    F2 = 'f2'
    F3 = 'f3'

    @property
    def theorem(self) -> TheoremId:
        return {
            FamilyTag.F1: TheoremId.F1_BOUND,
            FamilyTag.F2: TheoremId.F2_BOUND,
            FamilyTag.F3: TheoremId.F3_BOUND,
        }[self]

    @classmethod
    def for_theorem(cls, theorem: TheoremId) -> 'FamilyTag':
        return next(tag for tag in cls if tag.theorem is theorem)


def ceil_third(n: int) -> int:
    return -(-n // 3)


def is_feasible(tag: FamilyTag, n: int, gamma: int) -> bool:
    """Parameter ranges in which the family is non-empty"""
    if gamma < 1 or n < 2:
        return False
    if tag is FamilyTag.F1:
        return n >= 3 and 3 * gamma <= n
    if tag is FamilyTag.F2:
        return ceil_third(n) <= gamma and 2 * gamma <= n
    # the star S_{n-γ+1} must offer γ-1 leaves and keep one spare
    return 2 * gamma <= n


@dataclass(frozen=True)
class FamilyKind:
    """A family together with its order and domination number"""

    tag: FamilyTag
    n: int
    gamma: int

    def __post_init__(self):
        if not is_feasible(self.tag, self.n, self.gamma):
            raise FamilyConstructionError(
                f"{self.tag.name}({self.n}, {self.gamma}) is outside the family's parameter range"
            )

    def __str__(self) -> str:
        return f"{self.tag.name}({self.n},{self.gamma})"
