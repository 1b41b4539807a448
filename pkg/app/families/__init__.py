# Extremal tree families: construction and recognition
from .kinds import FamilyTag, FamilyKind
from .builders import build_f1_members, build_f2_member, build_f3, family_members
from .recognizer import is_member, f2_clause_witness, family_codes

__all__ = [
    'FamilyTag', 'FamilyKind', 'build_f1_members', 'build_f2_member', 'build_f3',
    'family_members', 'is_member', 'f2_clause_witness', 'family_codes',
]
