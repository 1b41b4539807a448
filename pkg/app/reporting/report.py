"""
Verification report types

Trees are identified by canonical code strings, never by labeled edge lists.
"""

from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

from app.bounds.numerics import Number


@dataclass
class BoundCheck:
    """One theorem checked against one (n, γ, α) bucket"""

    theorem_id: str
    value: Number
    direction: str
    satisfied: bool
    attained: bool
    extremal_value: Optional[Number]
    equality_count: int
    equality_achiever_codes: List[str] = field(default_factory=list)
    family_codes: List[str] = field(default_factory=list)
    family_match: bool = True
    counterexample_codes: List[str] = field(default_factory=list)

    def violations(self) -> int:
        return len(self.counterexample_codes) + (not self.family_match) + (not self.attained)

    @classmethod
    def from_dict(cls, data: Dict) -> 'BoundCheck':
        return cls(**data)


@dataclass
class ReportRow:
    gamma: int
    tree_class_count: int
    min_value: Number
    max_value: Number
    applicable_bounds: List[BoundCheck]
    equality_achiever_codes: List[str]
    family_match: bool
    counterexample_codes: List[str]

    def violations(self) -> int:
        return sum(check.violations() for check in self.applicable_bounds)

    @classmethod
    def from_dict(cls, data: Dict) -> 'ReportRow':
        data = dict(data)
        data['applicable_bounds'] = [BoundCheck.from_dict(b) for b in data['applicable_bounds']]
        return cls(**data)


@dataclass
class VerificationReport:
    """Aggregated checks for one order and one exponent"""

    order: int
    alpha: Number
    tree_count: int
    rows: List[ReportRow]
    runtime_ms: int = 0

    def violations(self) -> int:
        return sum(row.violations() for row in self.rows)

    def passed(self) -> bool:
        return self.violations() == 0

    def to_dict(self, include_runtime: bool = True) -> Dict:
        data = asdict(self)
        if not include_runtime:
            del data['runtime_ms']
        return data

    @classmethod
    def from_dict(cls, data: Dict) -> 'VerificationReport':
        return cls(
            order=data['order'],
            alpha=data['alpha'],
            tree_count=data['tree_count'],
            rows=[ReportRow.from_dict(r) for r in data['rows']],
            runtime_ms=data.get('runtime_ms', 0),
        )
