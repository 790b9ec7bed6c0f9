import json
from itertools import product

import numpy as np
import pytest

from tamv.errors import BoundExceeded, NotALattice
from tamv.paths import label_count, staircase
from tamv.poset import (
    FinitePoset,
    build_tam_poset,
    build_tree_tamari,
    closure,
    order_anti_iso,
    order_iso,
    transitive_reduction,
)


def chain(k):
    return FinitePoset(list(range(k)), [(i, i + 1) for i in range(k - 1)])


def bowtie():
    # a, b both below c, d: no join of a and b
    return FinitePoset("abcd", [(0, 2), (0, 3), (1, 2), (1, 3)])


def diamond():
    return FinitePoset("0xy1", [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_closure_is_reflexive_and_transitive():
    order = closure(4, [(0, 1), (1, 2), (2, 3)])
    assert np.array_equal(order, np.triu(np.ones((4, 4), dtype=bool)))
    # closing again is a no-op
    again = closure(4, [tuple(ij) for ij in np.argwhere(order) if ij[0] != ij[1]])
    assert np.array_equal(order, again)


def test_closure_rejects_cycles():
    with pytest.raises(ValueError):
        closure(2, [(0, 1), (1, 0)])


def test_transitive_reduction_recovers_covers():
    for k in range(0, 9):
        for v in ["".join(w) for w in product("NE", repeat=k)][:40]:
            P = build_tam_poset(v)
            assert sorted(transitive_reduction(P.order)) == P.covers


def test_duplicate_elements_rejected():
    with pytest.raises(ValueError):
        FinitePoset(["a", "a"], [])


def test_chain_is_lattice():
    P = chain(5)
    assert P.is_lattice()
    assert P.meet(1, 3) == 1 and P.join(1, 3) == 3
    assert P.minimal_elements() == [0] and P.maximal_elements() == [4]


def test_bowtie_is_not_lattice():
    P = bowtie()
    assert not P.is_lattice()
    with pytest.raises(NotALattice):
        P.join("a", "b")
    with pytest.raises(NotALattice):
        P.meet("c", "d")


def test_antichain_and_empty_are_not_lattices():
    assert not FinitePoset("ab", []).is_lattice()
    assert not FinitePoset([], []).is_lattice()
    assert FinitePoset("a", []).is_lattice()


def test_diamond_meet_join():
    P = diamond()
    assert P.is_lattice()
    assert P.join("x", "y") == "1" and P.meet("x", "y") == "0"
    assert P.join("0", "x") == "x"


def test_tam_meet_join_examples():
    P = build_tam_poset("NENENE")
    assert P.join("NNEENE", "NENNEE") == "NNNEEE"
    assert P.meet("NNEENE", "NENNEE") == "NENENE"
    assert P.meet("NNENEE", "NNEENE") == "NNEENE"


def test_intervals_count():
    for k in range(1, 8):
        assert chain(k).intervals_count() == k * (k + 1) // 2
    assert build_tam_poset(staircase(1, 3)).intervals_count() == 13
    assert diamond().intervals_count() == 9


def test_weighted_intervals():
    P = build_tam_poset("NENE")
    assert P.weighted_intervals(lambda e: 1) == P.intervals_count() == 3
    # labelled count: intervals [x, y] weighted by the labellings of y
    assert P.weighted_intervals(label_count) == 4


def test_dual():
    P = build_tam_poset("NENENE")
    D = P.dual()
    assert D.dual().covers == P.covers
    assert order_anti_iso(P, D, lambda e: e)
    assert D.minimal_elements() == P.maximal_elements()


def test_order_iso():
    P = chain(3)
    Q = FinitePoset("abc", [(0, 1), (1, 2)])
    assert order_iso(P, Q, "abc".__getitem__)
    assert not order_iso(P, Q, "cba".__getitem__)
    assert order_anti_iso(P, Q, "cba".__getitem__)
    # not a bijection
    assert not order_iso(P, Q, lambda i: "a")
    assert not order_iso(P, chain(4), lambda i: i)
    assert not order_iso(P, Q, lambda i: "z")


def test_is_interval():
    P = diamond()
    assert P.is_interval("0xy1")
    assert P.is_interval("x")
    assert not P.is_interval("xy")
    assert not P.is_interval("01")
    with pytest.raises(ValueError):
        P.is_interval([])


def test_subposet():
    P = diamond()
    S = P.subposet(["0", "x", "1"])
    assert S.covers == [(0, 1), (1, 2)]
    assert S.leq("0", "1")


def test_json_export():
    P = build_tam_poset("ENE")
    data = json.loads(P.to_json())
    assert data["elements"] == P.elements
    assert [tuple(c) for c in data["covers"]] == P.covers


def test_dot_export():
    dot = diamond().to_dot(name="d")
    assert dot.startswith("digraph d {") and dot.rstrip().endswith("}")
    assert "rankdir=BT" in dot
    assert dot.count("->") == 4
    assert 'n0 [label="0"];' in dot


def test_build_tree_tamari_small():
    assert len(build_tree_tamari(1)) == 1
    T = build_tree_tamari(2)
    assert len(T) == 2 and len(T.covers) == 1
    T = build_tree_tamari(4)
    assert len(T) == 14 and T.is_lattice()
    assert T.intervals_count() == 68
    with pytest.raises(BoundExceeded):
        build_tree_tamari(10)
    assert len(build_tree_tamari(3, max_size=3)) == 5
