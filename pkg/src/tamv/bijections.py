"""
Bijections between trees and paths.

* binary trees with n vertices  <->  non-crossing pairs (u, v) of length n-1
* complete binary trees with n internal vertices  <->  ballot paths of height n
* the anti-isomorphism Tam(v) -> Tam(reverse_complement(v)) induced by
  mirroring trees
"""
from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .errors import MalformedPair, NotAbove, NotBallot
from .paths import EAST, NORTH, east_profile, paths_above, staircase, weakly_above
from .trees import (
    BinaryTree,
    CompleteBinaryTree,
    LEAF,
    complete,
    decomplete,
    pair_paths,
    reflect,
)


class NonCrossingPair(NamedTuple):
    u: str
    v: str

    def check(self) -> "NonCrossingPair":
        if not weakly_above(self.u, self.v):
            raise NotAbove(f"{self.u!r} is not weakly above {self.v!r}")
        return self


def tree_from_pair(u: str, v: str) -> BinaryTree:
    """Inverse of :func:`~tamv.trees.pair_paths`.

    The root's left edge (if any) is the last north step whose gap between
    ``u`` and ``v`` is zero; every left edge of the right subtree has a
    positive gap. That pins down the split at each level.
    """
    if not weakly_above(u, v):
        raise NotAbove(f"{u!r} is not weakly above {v!r}")
    return _build(u, v)


def _build(u: str, v: str) -> BinaryTree:
    if not u:
        if v:
            raise MalformedPair(f"length mismatch: {u!r}, {v!r}")
        return BinaryTree()
    if u[-1] == NORTH:
        if v[-1] != NORTH:
            raise MalformedPair(f"{u!r} ends with N but {v!r} does not")
        return BinaryTree(_build(u[:-1], v[:-1]), None)
    xu, xv = east_profile(u)[:-1], east_profile(v)[:-1]
    zeros = [i for i, (a, b) in enumerate(zip(xv, xu)) if a == b]
    if not zeros:
        if v[0] != EAST:
            raise MalformedPair(f"{v!r} should start with E")
        return BinaryTree(None, _build(u[:-1], v[1:]))
    i = zeros[-1]
    ku = _nth_north(u, i)
    kv = _nth_north(v, i)
    if kv + 1 >= len(v) or v[kv + 1] != EAST:
        raise MalformedPair(f"north step {i} of {v!r} is not followed by E")
    left = _build(u[:ku], v[:kv])
    right = _build(u[ku + 1 : -1], v[kv + 2 :])
    return BinaryTree(left, right)


def _nth_north(path: str, i: int) -> int:
    pos = -1
    for _ in range(i + 1):
        pos = path.index(NORTH, pos + 1)
    return pos


def all_pairs(length: int):
    """All non-crossing pairs ``(u, v)`` with ``length`` steps each."""
    for letters in product(NORTH + EAST, repeat=length):
        v = "".join(letters)
        for u in paths_above(v):
            yield NonCrossingPair(u, v)


# -- ballot paths --------------------------------------------------------------

def ballot_from_tree(tree: CompleteBinaryTree) -> str:
    """Postorder edge encoding: leaf -> '', (L, R) -> ballot(L) N ballot(R) E."""
    if tree.is_external:
        return ""
    return ballot_from_tree(tree.left) + NORTH + ballot_from_tree(tree.right) + EAST


def is_ballot(d: str) -> bool:
    n = d.count(NORTH)
    return d.count(EAST) == n and weakly_above(d, staircase(1, n))


def tree_from_ballot(d: str) -> CompleteBinaryTree:
    if not is_ballot(d):
        raise NotBallot(f"{d!r} is not a ballot path")
    return _parse_ballot(d)


def _parse_ballot(d: str) -> CompleteBinaryTree:
    if not d:
        return LEAF
    # d = X N Y E with X, Y ballot: the N is right after the last return to 0
    h = 0
    split = 0
    for i, step in enumerate(d[:-1]):
        if h == 0:
            split = i
        h += 1 if step == NORTH else -1
    return CompleteBinaryTree(_parse_ballot(d[:split]), _parse_ballot(d[split + 1 : -1]))


# -- class maps -----------------------------------------------------------

def dualize(u: str, v: str) -> str:
    """Image of ``u`` under the anti-isomorphism Tam(v) -> Tam(reverse_complement(v))."""
    tree = tree_from_pair(u, v)
    return pair_paths(reflect(tree))[0]


def tam_class_of_ballot(d: str) -> tuple[str, str]:
    """Ballot path -> (interior canopy v, element u of Tam(v))."""
    tree = decomplete(tree_from_ballot(d))
    if tree is None:
        raise NotBallot("the empty ballot path has no canopy")
    u, v = pair_paths(tree)
    return v, u


def class_member_to_path(tree: CompleteBinaryTree) -> str:
    """The element of Tam(interior canopy) attached to a complete tree."""
    return pair_paths(decomplete(tree))[0]


def path_to_class_member(u: str, v: str) -> CompleteBinaryTree:
    return complete(tree_from_pair(u, v))

