"""Generalized Tamari posets Tam(v) on lattice paths, canopy bijections and exhaustive checks."""

from .bijections import (
    NonCrossingPair,
    ballot_from_tree,
    dualize,
    tam_class_of_ballot,
    tree_from_ballot,
    tree_from_pair,
)
from .counting import (
    catalan,
    fuss_catalan,
    labelled_intervals_formula,
    m_tamari_intervals_formula,
    tamari_intervals_formula,
    total_intervals_formula,
)
from .errors import TamariError
from .paths import (
    GridPoint,
    count_paths_above,
    horiz,
    label_count,
    rational_base_path,
    reverse_complement,
    slope_cover,
    tam_covers,
    tam_elements,
    weakly_above,
)
from .poset import FinitePoset, build_tam_poset, build_tree_tamari, order_anti_iso, order_iso
from .trees import (
    BinaryTree,
    CompleteBinaryTree,
    all_trees,
    canopy,
    complete,
    decomplete,
    pair_paths,
    parse_tree,
    reflect,
    rotate_left,
    rotate_right,
    t_max,
    t_min,
)

__version__ = "0.1.0"
