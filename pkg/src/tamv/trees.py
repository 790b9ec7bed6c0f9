"""
Binary trees, complete binary trees, rotations and canopies.

A :class:`BinaryTree` is a vertex with optional children; the empty tree is
``None``. A :class:`CompleteBinaryTree` vertex has either no children
(external vertex) or two. Both are immutable and hashable, so trees can be
used directly as poset elements.

Walks around a tree always visit the left subtree before the right one.
With that convention the canopy definitions coincide as follows:

* walk word: keep the second visits of left edges (N) and first visits of
  right edges (E);
* external edges of the completion, first and last dropped: right edge -> N,
  left edge -> E;
* vertices in symmetric order 1..n-1: vertex i gives N when it has *no*
  right child, E otherwise.

Text format: a vertex is ``(L)(R)`` where ``L``/``R`` are the child trees or
``·`` for a missing child, e.g. ``((·)(·))(·)`` is a root with one left leaf.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import EmptyTree, InvalidPivot, LengthMismatch
from .paths import EAST, NORTH

ABSENT = "·"


@dataclass(frozen=True)
class BinaryTree:
    left: Optional[BinaryTree] = None
    right: Optional[BinaryTree] = None
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "size", 1 + tree_size(self.left) + tree_size(self.right))

    def __str__(self):
        return format_tree(self)


@dataclass(frozen=True)
class CompleteBinaryTree:
    left: Optional[CompleteBinaryTree] = None
    right: Optional[CompleteBinaryTree] = None
    internal: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("complete binary tree vertices have 0 or 2 children")
        n = 0 if self.left is None else 1 + self.left.internal + self.right.internal
        object.__setattr__(self, "internal", n)

    @property
    def is_external(self) -> bool:
        return self.left is None

    def __str__(self):
        return format_tree(decomplete(self))


LEAF = CompleteBinaryTree()

Tree = Union[BinaryTree, CompleteBinaryTree]


def tree_size(tree: Optional[BinaryTree]) -> int:
    return 0 if tree is None else tree.size


# -- text and JSON formats ---------------------------------------------------

def format_tree(tree: Optional[BinaryTree]) -> str:
    if tree is None:
        return ABSENT
    return f"({format_tree(tree.left)})({format_tree(tree.right)})"


def parse_tree(text: str) -> Optional[BinaryTree]:
    """Inverse of :func:`format_tree`; ``"·"`` (or ``"."``) is the empty tree."""
    text = text.replace(".", ABSENT)
    pos = 0

    def expect(ch):
        nonlocal pos
        if pos >= len(text) or text[pos] != ch:
            raise ValueError(f"malformed tree text at offset {pos}: {text!r}")
        pos += 1

    def node():
        nonlocal pos
        if pos < len(text) and text[pos] == ABSENT:
            pos += 1
            return None
        expect("(")
        left = node()
        expect(")")
        expect("(")
        right = node()
        expect(")")
        return BinaryTree(left, right)

    tree = node()
    if pos != len(text):
        raise ValueError(f"trailing characters in tree text: {text!r}")
    return tree


def tree_to_json(tree: Optional[BinaryTree]):
    if tree is None:
        return None
    return {"left": tree_to_json(tree.left), "right": tree_to_json(tree.right)}


def tree_from_json(obj) -> Optional[BinaryTree]:
    if obj is None:
        return None
    return BinaryTree(tree_from_json(obj["left"]), tree_from_json(obj["right"]))


# -- completion ----------------------------------------------------------------

def complete(tree: Optional[BinaryTree]) -> CompleteBinaryTree:
    if tree is None:
        return LEAF
    return CompleteBinaryTree(complete(tree.left), complete(tree.right))


def decomplete(tree: CompleteBinaryTree) -> Optional[BinaryTree]:
    if tree.is_external:
        return None
    return BinaryTree(decomplete(tree.left), decomplete(tree.right))


# -- generation ----------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _all_trees(n: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in _all_trees(k):
            for right in _all_trees(n - 1 - k):
                out.append(BinaryTree(left, right))
    return tuple(out)


def all_trees(n: int) -> list[Optional[BinaryTree]]:
    """All binary trees with ``n`` vertices, ordered by left-subtree size first."""
    return list(_all_trees(n))


def all_complete_trees(n: int) -> list[CompleteBinaryTree]:
    """All complete binary trees with ``n`` internal vertices."""
    return [complete(b) for b in _all_trees(n)]


def reflect(tree):
    """Mirror image: exchange left and right children everywhere."""
    if tree is None:
        return None
    if isinstance(tree, CompleteBinaryTree):
        if tree.is_external:
            return tree
        return CompleteBinaryTree(reflect(tree.right), reflect(tree.left))
    return BinaryTree(reflect(tree.right), reflect(tree.left))


# -- paths attached to a tree --------------------------------------------------

def walk_word(tree: BinaryTree) -> str:
    """Edge letters met walking around ``tree`` (left subtrees first).

    ``a``/``A``: first/second traversal of a left edge, ``b``/``B`` the same
    for right edges.
    """
    out = []

    def walk(t):
        if t.left is not None:
            out.append("a")
            walk(t.left)
            out.append("A")
        if t.right is not None:
            out.append("b")
            walk(t.right)
            out.append("B")

    walk(tree)
    return "".join(out)


def pair_paths(tree: Optional[BinaryTree]) -> tuple[str, str]:
    """The non-crossing pair ``(u, v)`` of a nonempty tree; ``v`` is its canopy."""
    if tree is None:
        raise EmptyTree("the empty tree has no path pair")
    return _pair(tree)


def _pair(t: BinaryTree) -> tuple[str, str]:
    left, right = t.left, t.right
    if left is None and right is None:
        return "", ""
    if right is None:
        u, v = _pair(left)
        return u + NORTH, v + NORTH
    if left is None:
        u, v = _pair(right)
        return u + EAST, EAST + v
    ul, vl = _pair(left)
    ur, vr = _pair(right)
    return ul + NORTH + ur + EAST, vl + NORTH + EAST + vr


def canopy(tree: Optional[BinaryTree]) -> str:
    return pair_paths(tree)[1]


def canopy_from_walk(tree: Optional[BinaryTree]) -> str:
    if tree is None:
        raise EmptyTree("the empty tree has no canopy")
    word = walk_word(tree)
    return "".join(NORTH if c == "A" else EAST for c in word if c in "Ab")


def u_from_walk(tree: Optional[BinaryTree]) -> str:
    if tree is None:
        raise EmptyTree("the empty tree has no path pair")
    word = walk_word(tree)
    return "".join(NORTH if c == "A" else EAST for c in word if c in "AB")


def canopy_from_external_edges(tree: Optional[BinaryTree]) -> str:
    """Canopy read off the external edges of the completion."""
    if tree is None:
        raise EmptyTree("the empty tree has no canopy")
    sides = []

    def walk(t):
        for side, child in (("left", t.left), ("right", t.right)):
            if child is None:
                sides.append(side)
            else:
                walk(child)

    walk(tree)
    return "".join(NORTH if s == "right" else EAST for s in sides[1:-1])


def canopy_from_right_children(tree: Optional[BinaryTree]) -> str:
    """Canopy from the symmetric order: step i is N iff vertex i lacks a right child."""
    if tree is None:
        raise EmptyTree("the empty tree has no canopy")
    order = symmetric_order(tree)
    return "".join(EAST if t.right is not None else NORTH for t in order[:-1])


def interior_canopy(tree: CompleteBinaryTree) -> str:
    return canopy(decomplete(tree))


# -- traversals and right heights ---------------------------------------------

def symmetric_order(tree: Optional[BinaryTree]) -> list[BinaryTree]:
    """Vertices (as subtree objects) in in-order: left subtree, root, right subtree."""
    out = []

    def walk(t):
        if t is None:
            return
        walk(t.left)
        out.append(t)
        walk(t.right)

    walk(tree)
    return out


def postorder_right_heights(tree: Optional[BinaryTree]) -> list[int]:
    if tree is None:
        raise EmptyTree("empty tree")
    out = []

    def walk(t, h):
        if t.left is not None:
            walk(t.left, h)
        if t.right is not None:
            walk(t.right, h + 1)
        out.append(h)

    walk(tree, 0)
    return out


def left_edge_right_heights(tree: Optional[BinaryTree]) -> list[int]:
    """Right heights of the left edges, ordered by the symmetric order of their upper endpoints."""
    if tree is None:
        raise EmptyTree("empty tree")
    out = []

    def walk(t, h):
        if t.left is not None:
            walk(t.left, h)
            out.append(h)
        if t.right is not None:
            walk(t.right, h + 1)

    walk(tree, 0)
    return out


def left_edge_right_heights_by_child(tree: Optional[BinaryTree]) -> list[int]:
    """Same heights ordered by the symmetric order of the lower endpoints."""
    if tree is None:
        raise EmptyTree("empty tree")
    out = []

    def walk(t, h, is_left_child):
        if t.left is not None:
            walk(t.left, h, True)
        if is_left_child:
            out.append(h)
        if t.right is not None:
            walk(t.right, h + 1, False)

    walk(tree, 0, False)
    return out


# -- rotations -----------------------------------------------------------------

def _apply_at(tree: CompleteBinaryTree, index: int, fn) -> CompleteBinaryTree:
    """Replace the internal vertex of in-order ``index`` by ``fn(subtree)``."""
    if tree.is_external or not 0 <= index < tree.internal:
        raise InvalidPivot(f"no internal vertex with index {index}")
    k = tree.left.internal
    if index < k:
        return CompleteBinaryTree(_apply_at(tree.left, index, fn), tree.right)
    if index == k:
        return fn(tree)
    return CompleteBinaryTree(tree.left, _apply_at(tree.right, index - k - 1, fn))


def _node_at(tree: CompleteBinaryTree, index: int) -> CompleteBinaryTree:
    if tree.is_external or not 0 <= index < tree.internal:
        raise InvalidPivot(f"no internal vertex with index {index}")
    while True:
        k = tree.left.internal
        if index == k:
            return tree
        if index < k:
            tree = tree.left
        else:
            tree, index = tree.right, index - k - 1


def _rot_right(s):
    t = s.left
    if t.is_external:
        raise InvalidPivot("left child of the pivot is external")
    return CompleteBinaryTree(t.left, CompleteBinaryTree(t.right, s.right))


def _rot_left(s):
    t = s.right
    if t.is_external:
        raise InvalidPivot("right child of the pivot is external")
    return CompleteBinaryTree(CompleteBinaryTree(s.left, t.left), t.right)


def rotate_right(tree: CompleteBinaryTree, pivot: int) -> CompleteBinaryTree:
    """Right rotation at the internal vertex with in-order index ``pivot``.

    ``s = ((A, B), C)`` becomes ``(A, (B, C))``. The top vertex of the result
    has in-order index ``pivot - 1 - internal(B)``.
    """
    return _apply_at(tree, pivot, _rot_right)


def rotate_left(tree: CompleteBinaryTree, pivot: int) -> CompleteBinaryTree:
    """Left rotation ``(A, (B, C)) -> ((A, B), C)`` at in-order index ``pivot``."""
    return _apply_at(tree, pivot, _rot_left)


def right_rotation_pivots(tree: CompleteBinaryTree) -> list[int]:
    out = []

    def walk(t, base):
        if t.is_external:
            return
        k = t.left.internal
        walk(t.left, base)
        if not t.left.is_external:
            out.append(base + k)
        walk(t.right, base + k + 1)

    walk(tree, 0)
    return out


def left_rotation_pivots(tree: CompleteBinaryTree) -> list[int]:
    out = []

    def walk(t, base):
        if t.is_external:
            return
        k = t.left.internal
        walk(t.left, base)
        if not t.right.is_external:
            out.append(base + k)
        walk(t.right, base + k + 1)

    walk(tree, 0)
    return out


def is_valid_rotation(tree: CompleteBinaryTree, pivot: int) -> bool:
    """Whether the right rotation at ``pivot`` keeps the interior canopy.

    It does exactly when the middle subtree (right subtree of the left
    child) is internal.
    """
    s = _node_at(tree, pivot)
    if s.left.is_external:
        raise InvalidPivot("left child of the pivot is external")
    return not s.left.right.is_external


def is_valid_left_rotation(tree: CompleteBinaryTree, pivot: int) -> bool:
    s = _node_at(tree, pivot)
    if s.right.is_external:
        raise InvalidPivot("right child of the pivot is external")
    return not s.right.left.is_external


def right_rotations(tree: CompleteBinaryTree) -> list[CompleteBinaryTree]:
    return [rotate_right(tree, i) for i in right_rotation_pivots(tree)]


# -- canopy classes ------------------------------------------------------------

def canopy_leq(c1: str, c2: str) -> bool:
    """Componentwise comparison of canopies with N below E."""
    if len(c1) != len(c2):
        raise LengthMismatch(f"{c1!r} and {c2!r} differ in length")
    return all(a == b or (a == NORTH and b == EAST) for a, b in zip(c1, c2))


def _some_tree_with_canopy(v: str) -> CompleteBinaryTree:
    from .bijections import tree_from_pair

    return complete(tree_from_pair(v, v))


def _saturate(tree, pivots, is_valid, rotate):
    while True:
        for i in pivots(tree):
            if is_valid(tree, i):
                tree = rotate(tree, i)
                break
        else:
            return tree


def t_max(v: str, start: Optional[CompleteBinaryTree] = None) -> CompleteBinaryTree:
    """Top of the canopy class of ``v``: no valid right rotation remains."""
    tree = start if start is not None else _some_tree_with_canopy(v)
    return _saturate(tree, right_rotation_pivots, is_valid_rotation, rotate_right)


def t_min(v: str, start: Optional[CompleteBinaryTree] = None) -> CompleteBinaryTree:
    """Bottom of the canopy class of ``v``: no valid left rotation remains."""
    tree = start if start is not None else _some_tree_with_canopy(v)
    return _saturate(tree, left_rotation_pivots, is_valid_left_rotation, rotate_left)

