"""Acceptance gate: twelve exhaustive checks with their time limits.

Each check prints one ``PASS``/``FAIL`` line. Under pytest the lines go straight
to the terminal; ``python tests/test_acceptance.py`` runs the same checks as a
script and exits nonzero if any fails.
"""
from __future__ import annotations

import sys
import time

import pytest

from tamv import harness
from tamv.bijections import all_pairs, ballot_from_tree, is_ballot, tree_from_ballot, tree_from_pair
from tamv.counting import alternants_dimension_as_printed, catalan, fuss_catalan
from tamv.paths import count_paths_above, staircase, tam_elements
from tamv.poset import build_tree_tamari
from tamv.trees import all_complete_trees, all_trees, pair_paths


def _report(num, title, passed, elapsed, limit, detail=""):
    ok = passed and (limit is None or elapsed < limit)
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {title}: {detail} [{elapsed:.2f}s{budget}]"
    return ok, line


def crit_01():
    expected = [1, 2, 5, 14, 42, 132, 429, 1430]
    got = [len(tam_elements(staircase(1, n))) for n in range(1, 9)]
    return got == expected and got == [catalan(n) for n in range(1, 9)], f"{got}"


def crit_02():
    expected = [1, 3, 12, 55, 273]
    brute = [len(tam_elements(staircase(2, n))) for n in range(1, 6)]
    dp = [count_paths_above(staircase(2, n)) for n in range(1, 6)]
    closed = [fuss_catalan(2, n) for n in range(1, 6)]
    printed = alternants_dimension_as_printed(2, 1)
    ok = brute == dp == closed == expected and printed != 1
    return ok, f"{brute}; printed alternants form at (2,1) = {printed}, not used"


def crit_03():
    out = harness.verify_lattice(7)
    n = out.details.get("posets")
    return out.passed and n == 254, f"{n} posets, witness={out.counterexample}"


def crit_04():
    out = harness.verify_duality(7)
    return out.passed, f"{out.details.get('posets')} words, witness={out.counterexample}"


def crit_05():
    classes = []
    ok = True
    for n in range(1, 8):
        out = harness.verify_partition(n, build_tree_tamari(n))
        k = out.details.get("classes")
        ok &= out.passed and k == 2 ** (n - 1)
        classes.append(k)
    bounds = harness.verify_class_bounds(7)
    ok &= bounds.passed and classes[3] == 8
    return ok, f"classes {classes}; class bounds and confluence {'ok' if bounds.passed else bounds.counterexample}"


def _counts(reports, expected):
    brute = [r.brute_count for r in reports]
    ok = all(r.matched for r in reports) and brute == expected
    return ok, f"brute {brute} formula {[r.formula_value for r in reports]}"


def crit_06():
    return _counts([harness.count_tamari(n) for n in range(1, 6)], [1, 3, 13, 68, 399])


def crit_07():
    mn = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]
    return _counts([harness.count_m_tamari(m, n) for m, n in mn], [1, 6, 58, 1, 10])


def crit_08():
    # brute values computed first; the formula must agree with them
    mn = [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3)]
    return _counts([harness.count_labelled(m, n) for m, n in mn], [4, 32, 400, 9, 189])


def crit_09():
    return _counts([harness.count_total(n) for n in range(1, 6)], [2, 6, 22, 91, 408])


def crit_10():
    trees = pairs = 0
    for n in range(1, 12):
        for b in all_trees(n):
            if tree_from_pair(*pair_paths(b)) != b:
                return False, f"tree round trip fails at {b}"
            trees += 1
    for k in range(0, 10):
        for pair in all_pairs(k):
            if pair_paths(tree_from_pair(*pair)) != pair:
                return False, f"pair round trip fails at {pair}"
            pairs += 1
    ballots = 0
    for n in range(0, 7):
        for t in all_complete_trees(n):
            d = ballot_from_tree(t)
            if not is_ballot(d) or tree_from_ballot(d) != t:
                return False, f"ballot round trip fails at {t}"
            ballots += 1
    for n in range(1, 7):
        out = harness.verify_ballot_correspondence(n)
        if not out.passed:
            return False, out.counterexample
    return True, f"{trees} trees, {pairs} pairs, {ballots} ballot trees, covers n<=6"


def crit_11():
    out = harness.verify_lemmas(9)
    return out.passed, f"tree size <= {out.params['n']}, witness={out.counterexample}"


def crit_12():
    bad = [(m, n) for m in range(1, 4) for n in range(1, 5) if not harness.verify_m_equivalence(m, n).passed]
    return not bad, f"12 parameter pairs, discrepancies at {bad}"


CRITERIA = [
    (1, "element counts |Tam((NE)^n)|, n<=8", crit_01, 10),
    (2, "Fuss counts |Tam((NE^2)^n)|, n<=5", crit_02, 10),
    (3, "every Tam(v), |v|<=7, is a lattice", crit_03, 60),
    (4, "duality anti-isomorphism, |v|<=7", crit_04, 60),
    (5, "canopy partition of tree-Tamari, n<=7", crit_05, 60),
    (6, "Tamari interval counts, n<=5", crit_06, 60),
    (7, "m-Tamari interval counts", crit_07, 60),
    (8, "labelled interval counts", crit_08, None),
    (9, "total interval counts, n<=5", crit_09, 300),
    (10, "bijection round trips", crit_10, None),
    (11, "tree lemma suite, size<=9", crit_11, None),
    (12, "slope rule equals tam_covers, m<=3, n<=4", crit_12, None),
]


def run_criterion(num, title, fn, limit):
    start = time.perf_counter()
    passed, detail = fn()
    return _report(num, title, passed, time.perf_counter() - start, limit, detail)


@pytest.mark.parametrize("num, title, fn, limit", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, title, fn, limit, capsys):
    ok, line = run_criterion(num, title, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
