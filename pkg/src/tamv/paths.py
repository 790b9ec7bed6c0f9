"""
Lattice paths on the square grid and the posets Tam(v).

A path is a plain ``str`` over the letters ``N`` (north) and ``E`` (east),
starting at the origin; the empty string is the empty path. Keeping paths as
strings makes them hashable, cheap to slice and directly printable in the
text format used by the CLI.
"""
from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterator
from typing import NamedTuple

from .errors import NegativeDistance, NotAbove, NotAboveBase, NotBallot, NotCoprime

NORTH, EAST = "N", "E"

_LEX = str.maketrans("NE", "01")


class GridPoint(NamedTuple):
    x: int
    y: int


def check_path(path: str) -> str:
    """Validate ``path`` and return it unchanged."""
    if not isinstance(path, str) or path.strip("NE"):
        raise ValueError(f"not a lattice path (letters N/E only): {path!r}")
    return path


def lex_key(path: str) -> str:
    """Sort key putting N before E."""
    return path.translate(_LEX)


def north_count(path: str) -> int:
    return path.count(NORTH)


def east_count(path: str) -> int:
    return path.count(EAST)


def endpoint(path: str) -> GridPoint:
    return GridPoint(path.count(EAST), path.count(NORTH))


def points(path: str) -> list[GridPoint]:
    """The ``len(path) + 1`` lattice points visited by ``path``, in order."""
    x = y = 0
    out = [GridPoint(0, 0)]
    for step in path:
        if step == NORTH:
            y += 1
        else:
            x += 1
        out.append(GridPoint(x, y))
    return out


def north_profile(path: str) -> list[int]:
    """``Y(x)``: number of N steps before the (x+1)-th E step, for x = 0..q.

    The last entry is the total number of N steps.
    """
    out = []
    y = 0
    for step in path:
        if step == NORTH:
            y += 1
        else:
            out.append(y)
    out.append(y)
    return out


def east_profile(path: str) -> list[int]:
    """``X(y)``: number of E steps before the (y+1)-th N step, for y = 0..p.

    The last entry is the total number of E steps. ``X(y)`` is also the
    largest abscissa of the path at height ``y``.
    """
    out = []
    x = 0
    for step in path:
        if step == EAST:
            x += 1
        else:
            out.append(x)
    out.append(x)
    return out


def weakly_above(u: str, v: str) -> bool:
    """True iff ``u`` and ``v`` share their endpoint and ``u`` never goes below ``v``."""
    if u.count(NORTH) != v.count(NORTH) or u.count(EAST) != v.count(EAST):
        return False
    return all(a >= b for a, b in zip(north_profile(u), north_profile(v)))


def horiz(v: str, point: tuple[int, int]) -> int:
    """Number of east steps that fit to the right of ``point`` without crossing ``v``."""
    x, y = point
    table = east_profile(v)
    if not 0 <= y < len(table):
        raise ValueError(f"height {y} outside the range of {v!r}")
    d = table[y] - x
    if d < 0:
        raise NegativeDistance(f"point {(x, y)} lies strictly below {v!r}")
    return d


def horiz_profile(u: str, v: str) -> list[int]:
    """``horiz(v, p)`` for every lattice point ``p`` of ``u``, bottom to top."""
    table = east_profile(v)
    out = [table[0]]
    x = y = 0
    for step in u:
        if step == NORTH:
            y += 1
        else:
            x += 1
        out.append(table[y] - x)
    if min(out) < 0:
        raise NotAbove(f"{u!r} is not weakly above {v!r}")
    return out


def tam_covers(u: str, v: str) -> list[str]:
    """Upper covers of ``u`` in Tam(v), one per valley of ``u`` (left to right).

    At a valley ``p`` (an E step followed by an N step) the E step is moved
    past the subpath of ``u`` running from ``p`` to the next point with the
    same horizontal distance to ``v``.
    """
    if not weakly_above(u, v):
        raise NotAboveBase(f"{u!r} is not weakly above {v!r}")
    h = horiz_profile(u, v)
    out = []
    for i in range(1, len(u)):
        if u[i - 1] == EAST and u[i] == NORTH:
            d = h[i]
            j = i + 1
            while h[j] != d:
                j += 1
            out.append(u[: i - 1] + u[i:j] + EAST + u[j:])
    return out


def tam_elements(v: str) -> list[str]:
    """All elements of Tam(v), reached by saturating covers from ``v``.

    The result is sorted lexicographically with N < E.
    """
    check_path(v)
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in tam_covers(u, v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return sorted(seen, key=lex_key)


def paths_above(v: str) -> Iterator[str]:
    """Enumerate paths weakly above ``v`` directly (no cover relation involved).

    Yields in lexicographic order with N < E.
    """
    check_path(v)
    limit = east_profile(v)
    p, q = v.count(NORTH), v.count(EAST)
    buf: list[str] = []

    def extend(x: int, y: int) -> Iterator[str]:
        if x == q and y == p:
            yield "".join(buf)
            return
        if y < p:
            buf.append(NORTH)
            yield from extend(x, y + 1)
            buf.pop()
        if x < limit[y]:
            buf.append(EAST)
            yield from extend(x + 1, y)
            buf.pop()

    yield from extend(0, 0)


def count_paths_above(v: str) -> int:
    """Count paths weakly above ``v`` by dynamic programming on north profiles.

    A path weakly above ``v`` is a nondecreasing sequence ``Y(0) <= ... <=
    Y(q-1) <= p`` with ``Y(x) >= Y_v(x)``; this counts those sequences.
    """
    check_path(v)
    p = v.count(NORTH)
    lower = north_profile(v)[:-1]
    # ways[y]: admissible prefixes whose last value is y
    ways = [1 if y == 0 else 0 for y in range(p + 1)]
    for low in lower:
        acc = 0
        nxt = [0] * (p + 1)
        for y in range(p + 1):
            acc += ways[y]
            if y >= low:
                nxt[y] = acc
        ways = nxt
    return sum(ways)


def reverse_complement(v: str) -> str:
    """Read ``v`` backwards, exchanging N and E."""
    return v[::-1].translate(str.maketrans("NE", "EN"))


def top_path(v: str) -> str:
    """The maximum of Tam(v): all north steps first."""
    return NORTH * v.count(NORTH) + EAST * v.count(EAST)


def staircase(m: int, n: int) -> str:
    """The path (N E^m)^n whose Tam poset is the m-Tamari lattice."""
    return (NORTH + EAST * m) * n


def rational_base_path(a: int, b: int) -> str:
    """Lowest path from (0, 0) to (b, a) weakly above the line ``y = a x / b``."""
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    x = y = 0
    steps = []
    while (x, y) != (b, a):
        if x < b and y * b >= a * (x + 1):
            steps.append(EAST)
            x += 1
        else:
            steps.append(NORTH)
            y += 1
    return "".join(steps)


def label_count(path: str, direction: str = "north") -> int:
    """Labelings of the N (or E) steps by 1..k increasing along each run."""
    letter = {"north": NORTH, "east": EAST}[direction]
    k = path.count(letter)
    runs = [len(r) for r in path.split(EAST if letter == NORTH else NORTH) if r]
    out = math.factorial(k)
    for r in runs:
        out //= math.factorial(r)
    return out


def gap_sequence(u: str, v: str) -> list[int]:
    """Horizontal gaps between the i-th north steps of ``v`` and ``u``."""
    if not weakly_above(u, v):
        raise NotAbove(f"{u!r} is not weakly above {v!r}")
    return [a - b for a, b in zip(east_profile(v)[:-1], east_profile(u)[:-1])]


def slope_cover(u: str, m: int) -> list[str]:
    """m-Tamari covers of an m-ballot path via the slope 1/m diagonal rule.

    For every E step followed by an N step, a diagonal of slope 1/m is drawn
    from the end of the E step until it meets ``u`` again; the E step is
    then exchanged with the portion of ``u`` lying above the diagonal.
    """
    n = u.count(NORTH)
    if u.count(EAST) != m * n or not weakly_above(u, staircase(m, n)):
        raise NotBallot(f"{u!r} is not a {m}-ballot path")
    pts = points(u)
    out = []
    for i in range(1, len(u)):
        if u[i - 1] == EAST and u[i] == NORTH:
            x0, y0 = pts[i]
            j = i + 1
            # first later point on the line m (y - y0) = x - x0
            while m * (pts[j].y - y0) != pts[j].x - x0:
                j += 1
            out.append(u[: i - 1] + u[i:j] + EAST + u[j:])
    return out
