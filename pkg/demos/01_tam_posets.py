"""
Tam(v): paths above a path
==========================

A walk through the poset of lattice paths weakly above a fixed path v,
using the ``tamv`` library. Run with ``python demos/01_tam_posets.py``.
"""

from tamv import build_tam_poset, horiz, reverse_complement, tam_covers, tam_elements
from tamv.harness import words

# %%
# Elements. Paths are plain strings over N (north) and E (east).
v = "ENEEN"
elems = tam_elements(v)
print(f"Tam({v}) has {len(elems)} elements:")
for u in elems:
    print("  ", u)

# %%
# The horizontal distance at a point is how many E steps fit before v is crossed.
for point in [(0, 0), (0, 1), (1, 1)]:
    print(f"horiz_{v}{point} =", horiz(v, point))

# %%
# Covers: at a valley EN of u, the E step jumps over the next stretch of equal horiz.
u = elems[-1]
print(f"covers of {u}:", tam_covers(u, v))

# %%
# The order matrix is a dense numpy bool array, order[i, j] == (elem_i <= elem_j).
P = build_tam_poset(v)
print(P)
print(P.order.astype(int))
print("lattice:", P.is_lattice())
atoms = tam_covers(v, v)
print("atoms", atoms, "join", P.join(*atoms), "meet", P.meet(*atoms))

# %%
# Duality: Tam(v) and Tam of the reversed-and-swapped path are anti-isomorphic,
# so their interval counts agree.
w = reverse_complement(v)
print(f"intervals: Tam({v}) = {P.intervals_count()}, Tam({w}) = {build_tam_poset(w).intervals_count()}")

# %%
# Summing interval counts over all paths of a given length.
for n in range(1, 6):
    print(n, sum(build_tam_poset(x).intervals_count() for x in words(n)))

# %%
# A Hasse diagram as DOT text; pipe into `dot -Tpng` to draw it.
print(P.to_dot(name="tam"))
