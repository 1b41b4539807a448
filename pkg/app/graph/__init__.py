# Tree representation, canonical codes and Prüfer codecs
from .tree import (
    Tree, tree_from_edges, tree_from_networkx, degree_sequence, path_tree,
    star_tree, spider_tree, load_tree, dump_tree,
)
from .canonical import CanonicalCode, canonical_code, are_isomorphic
from .prufer import prufer_decode, prufer_encode

__all__ = [
    'Tree', 'tree_from_edges', 'tree_from_networkx', 'degree_sequence',
    'path_tree', 'star_tree', 'spider_tree', 'load_tree', 'dump_tree',
    'CanonicalCode', 'canonical_code', 'are_isomorphic', 'prufer_decode',
    'prufer_encode',
]
