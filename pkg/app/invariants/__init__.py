# Degree-based indices, domination and the dominating-set edge partition
from .randic import (
    zeroth_order_general_randic, first_zagreb_index,
    modified_first_zagreb_index, pendent_count,
)
from .domination import (
    DominationCertificate, domination_number, domination_number_oracle,
    min_dominating_sets, is_dominating_set,
)
from .edge_partition import EdgePartition, edge_partition, extremal_partition_witness

__all__ = [
    'zeroth_order_general_randic', 'first_zagreb_index', 'modified_first_zagreb_index',
    'pendent_count', 'DominationCertificate', 'domination_number',
    'domination_number_oracle', 'min_dominating_sets', 'is_dominating_set',
    'EdgePartition', 'edge_partition', 'extremal_partition_witness',
]
