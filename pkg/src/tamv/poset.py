"""
Finite posets stored as a cover list plus a dense boolean order matrix.

``P.order[i, j]`` is true iff ``elements[i] <= elements[j]``. Sizes met here
stay in the low thousands, so a dense matrix is simpler than anything clever.
"""
from __future__ import annotations

import json
from collections.abc import Callable, Hashable, Iterable, Sequence
from graphlib import CycleError, TopologicalSorter

import numpy as np

from .errors import BoundExceeded, NotALattice
from .paths import tam_covers, tam_elements
from .trees import all_complete_trees, right_rotations

MAX_TREE_SIZE = 9


def _bits_to_row(bits: int, n: int) -> np.ndarray:
    raw = np.frombuffer(bits.to_bytes((n + 7) // 8 or 1, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def closure(n: int, covers: Iterable[tuple[int, int]]) -> np.ndarray:
    """Reflexive-transitive closure of a DAG on ``range(n)``."""
    succ: list[list[int]] = [[] for _ in range(n)]
    graph: dict[int, list[int]] = {i: [] for i in range(n)}
    for a, b in covers:
        succ[a].append(b)
        graph[b].append(a)
    try:
        topo = list(TopologicalSorter(graph).static_order())
    except CycleError as exc:
        raise ValueError("cover relation has a cycle") from exc
    up = [0] * n
    for i in reversed(topo):
        bits = 1 << i
        for j in succ[i]:
            bits |= up[j]
        up[i] = bits
    order = np.zeros((n, n), dtype=bool)
    for i in range(n):
        order[i] = _bits_to_row(up[i], n)
    return order


def transitive_reduction(order: np.ndarray) -> list[tuple[int, int]]:
    strict = order & ~np.eye(len(order), dtype=bool)
    s = strict.astype(np.int32)
    two_step = (s @ s) > 0
    return [tuple(map(int, ij)) for ij in np.argwhere(strict & ~two_step)]


class FinitePoset:
    """Elements, cover pairs ``(a, b)`` meaning ``a`` is covered by ``b``, and the order matrix."""

    def __init__(
        self,
        elements: Sequence[Hashable],
        covers: Iterable[tuple[int, int]],
        order: np.ndarray | None = None,
    ):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("poset elements must be distinct")
        self.covers = sorted(set(covers))
        self.order = closure(len(self.elements), self.covers) if order is None else order

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FinitePoset({len(self)} elements, {len(self.covers)} covers)"

    @classmethod
    def from_cover_function(cls, elements, upper_covers: Callable) -> "FinitePoset":
        elements = list(elements)
        index = {e: i for i, e in enumerate(elements)}
        covers = [(i, index[w]) for i, e in enumerate(elements) for w in upper_covers(e)]
        return cls(elements, covers)

    def leq(self, x, y) -> bool:
        return bool(self.order[self.index[x], self.index[y]])

    def minimal_elements(self) -> list:
        below = self.order.sum(axis=0)
        return [self.elements[i] for i in np.flatnonzero(below == 1)]

    def maximal_elements(self) -> list:
        above = self.order.sum(axis=1)
        return [self.elements[i] for i in np.flatnonzero(above == 1)]

    def subposet(self, elements: Iterable) -> "FinitePoset":
        elements = list(elements)
        idx = [self.index[e] for e in elements]
        order = self.order[np.ix_(idx, idx)]
        return FinitePoset(elements, transitive_reduction(order), order)

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.elements, [(b, a) for a, b in self.covers], self.order.T.copy())

    # -- lattice operations --------------------------------------------------

    def _extremum(self, bounds: np.ndarray, upward: bool):
        # least element of an up-set (or greatest of a down-set), if any
        cand = np.flatnonzero(bounds)
        if len(cand) == 0:
            return None
        sizes = self.order[cand].sum(axis=1) if upward else self.order[:, cand].sum(axis=0)
        best = cand[sizes == bounds.sum()]
        return int(best[0]) if len(best) == 1 else None

    def join(self, x, y):
        i, j = self.index[x], self.index[y]
        k = self._extremum(self.order[i] & self.order[j], upward=True)
        if k is None:
            raise NotALattice(f"{x} and {y} have no least upper bound")
        return self.elements[k]

    def meet(self, x, y):
        i, j = self.index[x], self.index[y]
        k = self._extremum(self.order[:, i] & self.order[:, j], upward=False)
        if k is None:
            raise NotALattice(f"{x} and {y} have no greatest lower bound")
        return self.elements[k]

    def _all_extrema_exist(self, order: np.ndarray) -> bool:
        upsize = order.sum(axis=1)
        for i in range(len(order)):
            common = order[i] & order  # row j: common upper bounds of i and j
            count = common.sum(axis=1)
            best = np.where(common, upsize, 0).max(axis=1)
            # best == count picks an element whose up-set is the whole common set
            if np.any(count == 0) or np.any(best != count):
                return False
        return True

    def is_lattice(self) -> bool:
        if len(self) == 0:
            return False
        return self._all_extrema_exist(self.order) and self._all_extrema_exist(self.order.T)

    # -- counting --------------------------------------------------------

    def intervals_count(self) -> int:
        return int(self.order.sum())

    def weighted_intervals(self, weight: Callable) -> int:
        below = self.order.sum(axis=0)
        return sum(int(b) * weight(e) for e, b in zip(self.elements, below))

    def is_interval(self, subset: Iterable) -> bool:
        idx = sorted({self.index[e] for e in subset})
        if not idx:
            raise ValueError("empty subset")
        sub = self.order[np.ix_(idx, idx)]
        lows = [idx[k] for k in np.flatnonzero(sub.all(axis=1))]
        highs = [idx[k] for k in np.flatnonzero(sub.all(axis=0))]
        if len(lows) != 1 or len(highs) != 1:
            return False
        between = self.order[lows[0]] & self.order[:, highs[0]]
        return set(np.flatnonzero(between).tolist()) == set(idx)

    # -- exports -------------------------------------------------------------

    def to_json(self, label: Callable = str) -> str:
        return json.dumps(
            {"elements": [label(e) for e in self.elements], "covers": [list(c) for c in self.covers]}
        )

    def to_dot(self, label: Callable = str, name: str = "hasse") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i, e in enumerate(self.elements):
            text = json.dumps(label(e), ensure_ascii=False)
            lines.append(f"  n{i} [label={text}];")
        for a, b in self.covers:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _permutation(P: FinitePoset, Q: FinitePoset, f: Callable):
    if len(P) != len(Q):
        return None
    try:
        perm = [Q.index[f(e)] for e in P.elements]
    except KeyError:
        return None
    if len(set(perm)) != len(perm):
        return None
    return perm


def order_iso(P: FinitePoset, Q: FinitePoset, f: Callable) -> bool:
    """``f`` is a bijection with ``x <= y`` iff ``f(x) <= f(y)``."""
    perm = _permutation(P, Q, f)
    return perm is not None and np.array_equal(P.order, Q.order[np.ix_(perm, perm)])


def order_anti_iso(P: FinitePoset, Q: FinitePoset, f: Callable) -> bool:
    """``f`` is a bijection with ``x <= y`` iff ``f(y) <= f(x)``."""
    perm = _permutation(P, Q, f)
    return perm is not None and np.array_equal(P.order, Q.order.T[np.ix_(perm, perm)])


def build_tam_poset(v: str) -> FinitePoset:
    return FinitePoset.from_cover_function(tam_elements(v), lambda u: tam_covers(u, v))


def build_tree_tamari(n: int, max_size: int = MAX_TREE_SIZE) -> FinitePoset:
    """Rotation order on complete binary trees with ``n`` internal vertices."""
    if n > max_size:
        raise BoundExceeded(f"n={n} exceeds the configured bound {max_size}")
    return FinitePoset.from_cover_function(all_complete_trees(n), right_rotations)
