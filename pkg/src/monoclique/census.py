"""Exact counts of monochromatic complete subgraphs.

The engine walks each color class separately, extending cliques in
increasing vertex order by intersecting candidate bitsets.  It only counts;
no clique is ever stored.  When a candidate set is itself a clique the
remaining extensions are added in closed form, which keeps monochromatic
blocks (complete colorings, clique unions) cheap.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .coloring import BLUE, RED, Color, TwoColoring

BRUTE_FORCE_MAX_N = 20


class SingletonMode(enum.Enum):
    BOTH = "both"
    BLUE_ONLY = "blue_only"


@dataclass(frozen=True)
class Convention:
    """How sizes 0 and 1 are counted.

    ``BOTH`` counts each vertex once as a red and once as a blue singleton.
    ``BLUE_ONLY`` counts singletons as blue only.  When ``include_empty`` is
    set, the empty set is counted once, as blue.
    """

    singleton_mode: SingletonMode = SingletonMode.BOTH
    include_empty: bool = False

    def to_json(self) -> dict:
        return {"singleton_mode": self.singleton_mode.value, "include_empty": self.include_empty}


DEFAULT = Convention()
BLUE_ONLY_WITH_EMPTY = Convention(SingletonMode.BLUE_ONLY, True)


class EmptyCensusError(ValueError):
    pass


@dataclass(frozen=True)
class MonoStats:
    total: int
    average: Fraction
    max_size: int
    per_size: tuple[int, ...]


@dataclass(frozen=True)
class Profile:
    n: int
    convention: Convention
    red: tuple[int, ...]
    blue: tuple[int, ...]
    # sizes above this were not counted (None: complete census)
    size_limit: Optional[int] = field(default=None)

    def per_size(self, color: Optional[Color] = None) -> tuple[int, ...]:
        if color is RED:
            return self.red
        if color is BLUE:
            return self.blue
        return tuple(r + b for r, b in zip(self.red, self.blue))

    def count(self, size: int, color: Optional[Color] = None) -> int:
        row = self.per_size(color)
        return row[size] if 0 <= size < len(row) else 0

    def to_json(self) -> dict:
        st = stats(self)
        out = {
            "n": self.n,
            "convention": self.convention.to_json(),
            "red": [str(x) for x in self.red],
            "blue": [str(x) for x in self.blue],
            "total": str(st.total),
            "average": f"{st.average.numerator}/{st.average.denominator}",
            "max_size": st.max_size,
        }
        if self.size_limit is not None:
            out["size_limit"] = self.size_limit
        return out


def _is_clique(adj: tuple[int, ...], cand: int) -> bool:
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        if cand & ~adj[v] != low:
            return False
        rest ^= low
    return True


def count_cliques(adj: tuple[int, ...], cand: int, max_size: int, counts: list[int]) -> None:
    """Add to ``counts[k]`` the number of k-cliques (1 <= k <= max_size) inside ``cand``."""

    def rec(P: int, depth: int) -> None:
        room = max_size - depth
        m = P.bit_count()
        if m == 0 or room <= 0:
            return
        if room == 1:
            counts[depth + 1] += m
            return
        if m > 2 and _is_clique(adj, P):
            for j in range(1, min(m, room) + 1):
                counts[depth + j] += comb(m, j)
            return
        while P:
            low = P & -P
            P ^= low
            counts[depth + 1] += 1
            nxt = adj[low.bit_length() - 1] & P
            if nxt:
                rec(nxt, depth + 1)

    rec(cand, 0)


def _rooted_counts(args) -> list[int]:
    adj, roots, n, max_size = args
    counts = [0] * (n + 1)
    for v in roots:
        counts[1] += 1
        higher = adj[v] & ~((1 << (v + 1)) - 1)
        if higher and max_size > 1:
            sub = [0] * (n + 1)
            count_cliques(adj, higher, max_size - 1, sub)
            for k in range(1, max_size):
                counts[k + 1] += sub[k]
    return counts


def _color_counts(adj: tuple[int, ...], n: int, max_size: int, workers: int) -> list[int]:
    if workers <= 1 or n < 2:
        counts = [0] * (n + 1)
        count_cliques(adj, (1 << n) - 1, max_size, counts)
        return counts
    chunks = [list(range(w, n, workers)) for w in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(_rooted_counts, [(adj, c, n, max_size) for c in chunks]))
    return [sum(col) for col in zip(*parts)]


def _apply_convention(red: list[int], blue: list[int], n: int, convention: Convention) -> None:
    if n >= 1:
        red[1] = n if convention.singleton_mode is SingletonMode.BOTH else 0
        blue[1] = n
    red[0] = 0
    blue[0] = 1 if convention.include_empty else 0


def count_profile(
    g: TwoColoring,
    convention: Convention = DEFAULT,
    max_size: Optional[int] = None,
    workers: int = 1,
) -> Profile:
    """Counts of red and blue complete subgraphs of every size 0..n.

    ``max_size`` truncates the census (sizes above it are reported as 0 and
    the profile records the limit).  ``workers`` splits the search by lowest
    vertex across processes; the result does not depend on it.
    """
    n = g.n
    limit = n if max_size is None else min(max_size, n)
    red = _color_counts(g.red, n, limit, workers)
    blue = _color_counts(g.blue, n, limit, workers)
    _apply_convention(red, blue, n, convention)
    return Profile(n, convention, tuple(red), tuple(blue),
                   None if max_size is None or max_size >= n else max_size)


def stats(p: Profile, color_filter: Optional[Color] = None) -> MonoStats:
    per_size = p.per_size(color_filter)
    total = sum(per_size)
    if total == 0:
        raise EmptyCensusError("empty census: no monochromatic subgraphs under this filter")
    weighted = sum(k * c for k, c in enumerate(per_size))
    top = max(k for k, c in enumerate(per_size) if c)
    return MonoStats(total, Fraction(weighted, total), top, per_size)


def per_vertex_counts(g: TwoColoring, convention: Convention = DEFAULT) -> list[int]:
    """For each vertex, the number of monochromatic subgraphs containing it."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    singles = 2 if convention.singleton_mode is SingletonMode.BOTH else 1
    out = []
    for v in range(g.n):
        c = singles
        for adj in (g.red, g.blue):
            counts = [0] * (g.n + 1)
            count_cliques(adj, adj[v], g.n, counts)
            c += sum(counts)
        out.append(c)
    return out


def brute_force_profile(g: TwoColoring, convention: Convention = DEFAULT) -> Profile:
    """Oracle: test every vertex subset for monochromaticity (n <= 20)."""
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force is capped at n={BRUTE_FORCE_MAX_N}, got {n}")
    size = 1 << n
    popcount = [0] * size
    for s in range(1, size):
        popcount[s] = popcount[s >> 1] + (s & 1)
    result = []
    for adj in (g.red, g.blue):
        # mono[S]: S minus its lowest vertex is mono and that vertex sees all of it
        mono = bytearray(size)
        mono[0] = 1
        counts = [0] * (n + 1)
        for s in range(1, size):
            low = s & -s
            rest = s ^ low
            if mono[rest] and rest & ~adj[low.bit_length() - 1] == 0:
                mono[s] = 1
                counts[popcount[s]] += 1
        result.append(counts)
    red, blue = result
    _apply_convention(red, blue, n, convention)
    return Profile(n, convention, tuple(red), tuple(blue))


def analytic_profile_clique_union(t: int, s: int, convention: Convention = DEFAULT) -> Profile:
    """Closed form for ``t`` Red cliques of size ``s`` joined by Blue pairs."""
    if t < 1 or s < 1:
        raise ValueError("t and s must both be at least 1")
    n = t * s
    red = [0] * (n + 1)
    blue = [0] * (n + 1)
    for k in range(2, n + 1):
        red[k] = t * comb(s, k)
        # a blue clique takes at most one vertex from each group
        blue[k] = comb(t, k) * s**k
    _apply_convention(red, blue, n, convention)
    return Profile(n, convention, tuple(red), tuple(blue))
