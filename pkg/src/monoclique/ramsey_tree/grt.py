"""General Ramsey Tree level counts and the level-ratio lemmas.

A GRT node carries a vertex and a bag.  Its children are one per bag vertex;
a child reached through a red pair gets the parent's red side of the bag
(minus itself), likewise for blue.  The subtree below a node depends only on
(vertex, bag), so level counts are computed by a memoized DFS instead of
materializing the tree, whose levels grow factorially.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt
from typing import Optional

from ..census import Profile
from ..checks import CheckReport
from ..coloring import TwoColoring


@dataclass(frozen=True)
class GrtLevelStats:
    n: int
    counts: tuple[int, ...]  # counts[i] = |Q_i|, super-root excluded

    def at(self, i: int) -> int:
        return self.counts[i] if 0 <= i < len(self.counts) else 0


def grt_level_counts(g: TwoColoring, max_level: Optional[int] = None) -> GrtLevelStats:
    n = g.n
    if max_level is None:
        max_level = n - 1
    if max_level > n - 1:
        raise ValueError(f"max_level must be at most n-1={n - 1}")
    red, blue = g.red, g.blue

    @lru_cache(maxsize=None)
    def below(v: int, bag: int, depth: int) -> tuple[int, ...]:
        # counts of nodes 1..depth levels under (v, bag)
        out = [0] * depth
        for side in (red[v] & bag, blue[v] & bag):
            rest = side
            while rest:
                low = rest & -rest
                rest ^= low
                out[0] += 1
                if depth > 1:
                    child_bag = side ^ low
                    if child_bag:
                        sub = below(low.bit_length() - 1, child_bag, depth - 1)
                        for k, c in enumerate(sub):
                            out[k + 1] += c
        return tuple(out)

    counts = [0] * (max_level + 1)
    full = g.full_mask
    for r in range(n):
        counts[0] += 1
        bag = full & ~(1 << r)
        if max_level >= 1 and bag:
            for k, c in enumerate(below(r, bag, max_level)):
                counts[k + 1] += c
    return GrtLevelStats(n, tuple(counts))


def explicit_grt_levels(g: TwoColoring, max_level: Optional[int] = None) -> list[list[tuple[int, int]]]:
    """Materialize GRT nodes as (vertex, bag) level by level.  Test oracle; small n only."""
    if max_level is None:
        max_level = g.n - 1
    full = g.full_mask
    levels = [[(r, full & ~(1 << r)) for r in range(g.n)]]
    while len(levels) <= max_level:
        nxt = []
        for v, bag in levels[-1]:
            for w in range(g.n):
                if bag >> w & 1:
                    same = g.neighbors(v, g.color(v, w)) & bag
                    nxt.append((w, same & ~(1 << w)))
        levels.append(nxt)
    return levels


def grt_lemma_checks(stats: GrtLevelStats, n: Optional[int] = None,
                     delta: Optional[Fraction] = None) -> CheckReport:
    """Level-ratio lemmas in exact rationals.

    * |Q_{i+1}|/|Q_i| >= |Q_i|/(2|Q_{i-1}|) - 1 for i >= 1 with |Q_i| > 0;
    * |Q_{i+1}|/|Q_i| > n/2^i - 2 for i >= 0 with |Q_i| > 0;
    * with ``delta`` (a non-negative integer or rational whose n^(1+delta)
      is rational, e.g. delta = 0): once |Q_{i+1}|/|Q_i| >= n^(1+delta)/2^(i+1) - 2
      holds at some level, it holds at every later level with |Q_j| > 0.
    """
    n = stats.n if n is None else n
    Q = stats.counts
    rep = CheckReport("grt_lemmas")
    last = len(Q) - 1
    for i in range(last):
        if Q[i] == 0:
            rep.skipped += 1
            continue
        ratio = Fraction(Q[i + 1], Q[i])
        rhs = Fraction(n, 2**i) - 2
        rep.record(ratio > rhs, f"halving level {i}", ratio, ">", rhs)
        if i >= 1:
            rhs = Fraction(Q[i], 2 * Q[i - 1]) - 1
            rep.record(ratio >= rhs, f"ratio level {i}", ratio, ">=", rhs)
    if delta is not None:
        base = _rational_power(n, 1 + Fraction(delta))
        started = False
        for i in range(last):
            if Q[i] == 0:
                continue
            ratio = Fraction(Q[i + 1], Q[i])
            rhs = base / 2 ** (i + 1) - 2
            if started:
                rep.record(ratio >= rhs, f"propagation level {i}", ratio, ">=", rhs)
            elif ratio >= rhs:
                started = True
    return rep


def _rational_power(n: int, e: Fraction) -> Fraction:
    """n**e when it is rational; raises otherwise."""
    num, den = e.numerator, e.denominator
    root = _integer_root(n, den)
    if root is None:
        raise ValueError(f"{n}^{e} is irrational; choose delta with a rational power")
    return Fraction(root) ** num


def _integer_root(n: int, k: int) -> Optional[int]:
    if k == 1:
        return n
    if k == 2:
        r = isqrt(n)
        return r if r * r == n else None
    r = round(n ** (1 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return c
    return None


def census_bounds_from_levels(stats: GrtLevelStats, l: int) -> tuple[float, int]:
    """(lower bound on the total census, upper bound on the size-(l+1) census)."""
    m = Fraction(stats.at(l), factorial(l + 1))
    return float(m) ** 0.5, m.numerator // m.denominator


def check_census_against_levels(stats: GrtLevelStats, profile: Profile) -> CheckReport:
    """Cross-check GRT level sizes against an exact census.

    Lower bound: C(G)^2 >= |Q_l|/(l+1)!.  Upper bound: for l >= 1 the red plus
    blue count of size l+1 is at most |Q_l|/(l+1)!; for l = 0 each color's
    singleton count is at most n.
    """
    rep = CheckReport("grt_census_bounds")
    total = sum(profile.per_size())
    for l, q in enumerate(stats.counts):
        m = Fraction(q, factorial(l + 1))
        rep.record(total * total >= m, f"lower l={l}", total * total, ">=", m)
        _, upper = census_bounds_from_levels(stats, l)
        if l == 0:
            for row in (profile.red, profile.blue):
                rep.record(row[1] <= upper, "upper l=0", row[1], "<=", upper)
        else:
            k = profile.count(l + 1)
            rep.record(k <= upper, f"upper l={l}", k, "<=", upper)
    return rep
