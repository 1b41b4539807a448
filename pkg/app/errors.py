"""
Error types raised by the treebound library
"""


class TreeboundError(ValueError):
    """Base class for all library errors"""


class InvalidTreeError(TreeboundError):
    """Malformed edge list, adjacency or Prüfer sequence"""


class OracleCostError(TreeboundError):
    """Brute-force oracle asked to run beyond its size guard"""


class DegenerateAlphaError(TreeboundError):
    """Exponent outside the domain of an operation"""


class BoundDomainError(TreeboundError):
    """Order or domination number outside a formula's range"""


class FamilyConstructionError(TreeboundError):
    """Infeasible family parameters or a member failing its self-check"""


class CeilingExceededError(TreeboundError):
    """Verification order above the configured ceiling"""


class UnknownFormatError(TreeboundError):
    """Unsupported output format flag"""
