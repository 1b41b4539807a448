# Free-tree generation and the labeled brute-force oracle
from .free_trees import free_trees, free_tree_count
from .oracle import free_trees_oracle, labeled_tree_count

__all__ = [
    'free_trees', 'free_tree_count',
    'free_trees_oracle', 'labeled_tree_count',
]
