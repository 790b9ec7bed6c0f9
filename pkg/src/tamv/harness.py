"""
Exhaustive verification of the structural results and the counting formulas.

Every ``verify_*`` function returns a :class:`VerificationOutcome`; a failing
check carries the first counterexample found instead of raising.
"""
from __future__ import annotations

import json
from collections import defaultdict
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Optional

import numpy as np

from . import counting
from .bijections import ballot_from_tree, class_member_to_path, dualize, tree_from_pair
from .paths import (
    EAST,
    NORTH,
    count_paths_above,
    gap_sequence,
    horiz_profile,
    label_count,
    reverse_complement,
    slope_cover,
    staircase,
    tam_covers,
    tam_elements,
    top_path,
    weakly_above,
)
from .poset import FinitePoset, build_tam_poset, build_tree_tamari, order_anti_iso, order_iso
from .trees import (
    all_complete_trees,
    all_trees,
    canopy_from_external_edges,
    canopy_from_right_children,
    canopy_from_walk,
    complete,
    interior_canopy,
    is_valid_left_rotation,
    is_valid_rotation,
    left_rotation_pivots,
    left_edge_right_heights,
    pair_paths,
    postorder_right_heights,
    right_rotation_pivots,
    rotate_left,
    rotate_right,
    t_max,
    t_min,
)


@dataclass
class VerificationOutcome:
    check: str
    params: dict
    passed: bool
    counterexample: Optional[str] = None
    brute: Any = None
    formula: Any = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("a failing outcome needs a counterexample, a passing one none")

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "params": self.params,
            "pass": self.passed,
            "brute": self.brute,
            "formula": self.formula,
        }
        if self.counterexample is not None:
            out["witness"] = self.counterexample
        if self.details:
            out["details"] = self.details
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class CountReport:
    context: str
    brute_count: int
    formula_value: int

    @property
    def matched(self) -> bool:
        return self.brute_count == self.formula_value

    def to_dict(self) -> dict:
        return {
            "check": "count",
            "params": {"context": self.context},
            "pass": self.matched,
            "brute": self.brute_count,
            "formula": self.formula_value,
        }


class _Fail(Exception):
    def __init__(self, witness: str):
        super().__init__(witness)
        self.witness = witness


def _require(cond: bool, witness: str):
    if not cond:
        raise _Fail(witness)


def _run(check: str, params: dict, body: Callable[[], Optional[dict]]) -> VerificationOutcome:
    try:
        details = body() or {}
    except _Fail as fail:
        return VerificationOutcome(check, params, False, fail.witness)
    return VerificationOutcome(check, params, True, details=details)


def _pmap(fn: Callable, items: Iterable, workers: int = 1) -> list:
    items = list(items)
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def words(length: int) -> list[str]:
    return ["".join(w) for w in product(NORTH + EAST, repeat=length)]


def words_up_to(max_len: int, min_len: int = 0) -> list[str]:
    return [w for k in range(min_len, max_len + 1) for w in words(k)]


# -- single-instance checks (module level so worker processes can import them)

def lattice_witness(v: str) -> Optional[str]:
    P = build_tam_poset(v)
    if len(P) != count_paths_above(v):
        return f"v={v}: {len(P)} elements, expected {count_paths_above(v)}"
    if P.minimal_elements() != [v] or P.maximal_elements() != [top_path(v)]:
        return f"v={v}: bad extremal elements"
    if not P.is_lattice():
        return f"v={v}: not a lattice"
    return None


def duality_witness(v: str) -> Optional[str]:
    w = reverse_complement(v)
    P, Q = build_tam_poset(v), build_tam_poset(w)
    for u in P.elements:
        d = dualize(u, v)
        if not weakly_above(d, w):
            return f"v={v}, u={u}: image {d} not above {w}"
        if dualize(d, w) != u:
            return f"v={v}, u={u}: dualize is not an involution"
    if not order_anti_iso(P, Q, lambda u: dualize(u, v)):
        return f"v={v}: dualize is not an order anti-isomorphism"
    if P.intervals_count() != Q.intervals_count():
        return f"v={v}: interval counts differ"
    return None


def tam_intervals(v: str) -> int:
    return build_tam_poset(v).intervals_count()


# -- structural checks -------------------------------------------------------------

def verify_lattice(max_len: int = 7, workers: int = 1) -> VerificationOutcome:
    """Every Tam(v), 1 <= |v| <= max_len, is a lattice with the expected size and bounds."""
    vs = words_up_to(max_len, 1)

    def body():
        for v, w in zip(vs, _pmap(lattice_witness, vs, workers)):
            _require(w is None, w or v)
        return {"posets": len(vs)}

    return _run("lattice", {"max_len": max_len}, body)


def verify_duality(max_len: int = 7, workers: int = 1) -> VerificationOutcome:
    vs = words_up_to(max_len)

    def body():
        for v, w in zip(vs, _pmap(duality_witness, vs, workers)):
            _require(w is None, w or v)
        return {"posets": len(vs)}

    return _run("duality", {"max_len": max_len}, body)


def canopy_classes(n: int) -> dict[str, list]:
    classes: dict[str, list] = defaultdict(list)
    for t in all_complete_trees(n):
        classes[interior_canopy(t)].append(t)
    return dict(classes)


def verify_partition(n: int, tree_tamari: Optional[FinitePoset] = None) -> VerificationOutcome:
    """Tree-Tamari(n) splits into canopy classes, each an interval isomorphic to Tam(v)."""

    def body():
        T = tree_tamari if tree_tamari is not None else build_tree_tamari(n)
        classes = canopy_classes(n)
        _require(set(classes) == set(words(n - 1)), f"n={n}: canopies do not cover all words")
        _require(sum(map(len, classes.values())) == counting.catalan(n), f"n={n}: sizes")
        for v, members in sorted(classes.items()):
            _require(T.is_interval(members), f"v={v}: class is not an interval")
            sub = T.subposet(members)
            lo, hi = sub.minimal_elements(), sub.maximal_elements()
            _require(lo == [t_min(v)] and hi == [t_max(v)], f"v={v}: bounds differ from t_min/t_max")
            _require(
                order_iso(sub, build_tam_poset(v), class_member_to_path),
                f"v={v}: class not isomorphic to Tam(v)",
            )
        return {"classes": len(classes)}

    return _run("partition", {"n": n}, body)


def _tree_identity_failures(b) -> Optional[str]:
    u, v = pair_paths(b)
    if not weakly_above(u, v):
        return f"pair not weakly above: {b}"
    if not canopy_from_walk(b) == canopy_from_external_edges(b) == canopy_from_right_children(b) == v:
        return f"canopy definitions: {b}"
    if gap_sequence(u, v) != left_edge_right_heights(b):
        return f"gap sequence vs left-edge heights: {b}"
    if horiz_profile(u, v) != postorder_right_heights(b):
        return f"horiz profile vs postorder heights: {b}"
    if tree_from_pair(u, v) != b:
        return f"round trip: {b}"
    return None


def _rotation_failures(t) -> Optional[str]:
    c = interior_canopy(t)
    for i in right_rotation_pivots(t):
        c2 = interior_canopy(rotate_right(t, i))
        if is_valid_rotation(t, i):
            if c2 != c:
                return f"valid rotation changed canopy at {i}: {t}"
        elif c2 != c[: i - 1] + EAST + c[i:] or c[i - 1] != NORTH:
            return f"invalid rotation canopy change at {i}: {t}"
    return None


_BITS = str.maketrans("NE", "01")


def verify_lemmas(n: int = 9, monotone_max: Optional[int] = None) -> VerificationOutcome:
    """Tree-level identities for every tree with at most ``n`` vertices.

    Canopy monotonicity along the rotation order is checked on every
    comparable pair for tree sizes up to ``monotone_max`` (default ``n``).
    """
    monotone_max = n if monotone_max is None else monotone_max

    def body():
        for k in range(1, n + 1):
            for b in all_trees(k):
                w = _tree_identity_failures(b) or _rotation_failures(complete(b))
                _require(w is None, w)
        for k in range(1, monotone_max + 1):
            T = build_tree_tamari(k, max_size=max(k, 9))
            masks = np.array([int(interior_canopy(t)[::-1].translate(_BITS) or "0", 2) for t in T.elements])
            for i in range(len(T)):
                bad = T.order[i] & ((masks[i] & ~masks) != 0)
                _require(not bad.any(), f"canopy not monotone above {T.elements[i]}")
        return {"max_size": n}

    return _run("lemmas", {"n": n}, body)


def valid_rotation_sinks(start, upward: bool = True) -> set:
    """Every tree reachable from ``start`` by valid rotations that admits no further one."""
    if upward:
        pivots, valid, rotate = right_rotation_pivots, is_valid_rotation, rotate_right
    else:
        pivots, valid, rotate = left_rotation_pivots, is_valid_left_rotation, rotate_left
    seen, stack, sinks = {start}, [start], set()
    while stack:
        t = stack.pop()
        moves = [rotate(t, i) for i in pivots(t) if valid(t, i)]
        if not moves:
            sinks.add(t)
        for s in moves:
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return sinks


def verify_class_bounds(max_len: int = 7) -> VerificationOutcome:
    """t_min/t_max are the extremes of each class and valid-rotation saturation is confluent."""

    def body():
        for v in words_up_to(max_len):
            members = [complete(tree_from_pair(u, v)) for u in tam_elements(v)]
            lo, hi = t_min(v), t_max(v)
            _require(class_member_to_path(lo) == v, f"t_min({v})")
            _require(class_member_to_path(hi) == top_path(v), f"t_max({v})")
            for t in members:
                _require(valid_rotation_sinks(t, upward=True) == {hi}, f"confluence up {v} from {t}")
                _require(valid_rotation_sinks(t, upward=False) == {lo}, f"confluence down {v} from {t}")
        return None

    return _run("class-bounds", {"max_len": max_len}, body)


def verify_m_equivalence(m: int, n: int) -> VerificationOutcome:
    v = staircase(m, n)

    def body():
        for u in tam_elements(v):
            _require(sorted(slope_cover(u, m)) == sorted(tam_covers(u, v)), f"u={u}")
        return {"elements": count_paths_above(v)}

    return _run("m-equiv", {"m": m, "n": n}, body)


def verify_ballot_correspondence(n: int) -> VerificationOutcome:
    """Rotation covers match Tam((NE)^n) covers through the ballot encoding."""

    def body():
        v = staircase(1, n)
        for t in all_complete_trees(n):
            d = ballot_from_tree(t)
            got = sorted(ballot_from_tree(s) for s in [rotate_right(t, i) for i in right_rotation_pivots(t)])
            _require(got == sorted(tam_covers(d, v)), f"tree {t}")
        return None

    return _run("ballot-covers", {"n": n}, body)


# -- counts ---------------------------------------------------------------------------

def count_tamari(n: int) -> CountReport:
    return CountReport(f"tamari n={n}", build_tam_poset(staircase(1, n)).intervals_count(),
                       counting.tamari_intervals_formula(n))


def count_m_tamari(m: int, n: int) -> CountReport:
    return CountReport(f"m-tamari m={m} n={n}", build_tam_poset(staircase(m, n)).intervals_count(),
                       counting.m_tamari_intervals_formula(m, n))


def count_labelled(m: int, n: int) -> CountReport:
    brute = build_tam_poset(staircase(m, n)).weighted_intervals(label_count)
    return CountReport(f"labelled m={m} n={n}", brute, counting.labelled_intervals_formula(m, n))


def count_total(n: int, workers: int = 1) -> CountReport:
    brute = sum(_pmap(tam_intervals, words(n), workers))
    return CountReport(f"total n={n}", brute, counting.total_intervals_formula(n))


def count_elements(m: int, n: int) -> CountReport:
    return CountReport(f"elements m={m} n={n}", len(tam_elements(staircase(m, n))),
                       counting.fuss_catalan(m, n))


def experimental_east_labelled(m: int, n: int) -> CountReport:
    """North-labelled intervals of Tam((NE^m)^n) against east-labelled ones of Tam((N^mE)^n).

    Equality is only reported; it is proven for m = 1 alone.
    """
    north = build_tam_poset(staircase(m, n)).weighted_intervals(label_count)
    east = build_tam_poset((NORTH * m + EAST) * n).weighted_intervals(lambda p: label_count(p, "east"))
    return CountReport(f"east-labelled m={m} n={n}", north, east)

