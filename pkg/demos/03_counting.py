"""
Counting intervals by brute force
=================================

Closed formulas against exhaustive counts. Every count here comes from an
explicit order matrix.
"""

from tamv import harness
from tamv.counting import alternants_dimension_as_printed, fuss_catalan
from tamv.paths import staircase, tam_elements

# %%
# m-ballot paths: the number of paths above (N E^m)^n.
for m in (1, 2, 3):
    print(m, [len(tam_elements(staircase(m, n))) for n in range(1, 6)])

# %%
# The alternants expression as it is often quoted is not even an integer at (2, 1).
print("printed form:", alternants_dimension_as_printed(2, 1), " count:", fuss_catalan(2, 1))

# %%
# Interval counts.
for rep in [harness.count_tamari(n) for n in range(1, 6)]:
    print(f"{rep.context:16s} brute={rep.brute_count:5d} formula={rep.formula_value}")
for m, n in [(2, 2), (2, 3), (3, 2)]:
    rep = harness.count_m_tamari(m, n)
    print(f"{rep.context:16s} brute={rep.brute_count:5d} formula={rep.formula_value}")

# %%
# Labelled intervals: weight [x, y] by the parking labellings of the top path.
for m, n in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3)]:
    rep = harness.count_labelled(m, n)
    print(f"{rep.context:16s} brute={rep.brute_count:5d} formula={rep.formula_value}")

# %%
# Labelling east steps of the transposed staircase instead: only observed, not proven.
for m, n in [(2, 2), (2, 3), (3, 2)]:
    rep = harness.experimental_east_labelled(m, n)
    print(rep.context, rep.brute_count, rep.formula_value, "agree" if rep.matched else "differ")

# %%
# Total over all paths of length n.
print([harness.count_total(n).brute_count for n in range(1, 6)])
