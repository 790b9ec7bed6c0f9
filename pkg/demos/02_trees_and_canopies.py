"""
Binary trees, path pairs and canopies
=====================================

Each binary tree with n vertices gives a pair (u, v) of paths of length
n - 1 with u weakly above v; v is the canopy of the tree.
"""

from collections import Counter

from tamv import (
    BinaryTree,
    ballot_from_tree,
    build_tree_tamari,
    canopy,
    complete,
    pair_paths,
    parse_tree,
    reflect,
    t_max,
    t_min,
    tree_from_pair,
)
from tamv.trees import all_trees, format_tree, interior_canopy

# %%
# Trees print as "(left)(right)" with "·" for a missing child.
b = parse_tree("((·)(·))((·)((·)(·)))")
print("tree   ", format_tree(b), " size", b.size)
u, v = pair_paths(b)
print("pair   ", u, v)
print("canopy ", canopy(b))
print("back   ", format_tree(tree_from_pair(u, v)))

# %%
# Mirroring the tree reverses the canopy and swaps N and E.
print("mirror canopy", canopy(reflect(b)))

# %%
# Canopies of all 42 trees with 5 vertices: every path of length 4 occurs.
sizes = Counter(canopy(t) for t in all_trees(5))
for c, k in sorted(sizes.items()):
    print(f"  {c}  {k:2d} {'#' * k}")

# %%
# In the rotation order the trees with a given canopy form an interval.
v = "ENN"
lo, hi = t_min(v), t_max(v)
print("bottom of class", v, str(lo))
print("top of class   ", v, str(hi))
T = build_tree_tamari(4)
members = [t for t in T.elements if interior_canopy(t) == v]
print(len(members), "trees in the class; interval:", T.is_interval(members))

# %%
# The ballot encoding sends the rotation order onto Tam((NE)^n).
print(ballot_from_tree(complete(BinaryTree(BinaryTree(), None))))
