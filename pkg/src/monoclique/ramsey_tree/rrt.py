"""Biased and Restricted Ramsey Trees.

In a biased tree every child ``w`` of a node with bag ``B`` looks at its red
and blue sides inside ``B``.  With level bias ``b``: if the red side has at
least ``b(|B|-1)`` vertices the child is red with ratio ``q = b``, otherwise
blue with ``q = 1-b``; its bag is ``ceil(q(|B|-1))`` vertices of that side.
The restricted tree keeps, at every level, only the majority color among the
children of the previous kept level (a tie keeps blue).

Children depend only on the parent's bag, never on the parent's vertex, so
levels are stored as ``bag -> multiplicity`` and node counts stay exact
without materializing nodes.
"""

from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

import mpmath

from ..census import Profile
from ..checks import CheckReport
from ..coloring import BLUE, RED, Color, TwoColoring

RRT_MAX_N = 64

SubsetPolicy = Callable[[int, int], int]


def lowest_indices(candidates: int, size: int) -> int:
    """The ``size`` lowest-indexed vertices of ``candidates``."""
    if size >= candidates.bit_count():
        return candidates
    out = 0
    for _ in range(size):
        low = candidates & -candidates
        out |= low
        candidates ^= low
    return out


class BiasSchedule:
    """Piecewise-constant bias by level: ``[(0, 1/2), (8, 2/5)]`` means 1/2 on
    levels 0..7 and 2/5 from level 8 on."""

    def __init__(self, pieces: Iterable[tuple[int, Fraction]]):
        pieces = sorted((int(a), Fraction(b)) for a, b in pieces)
        if not pieces or pieces[0][0] != 0:
            raise ValueError("a bias schedule must start at level 0")
        for start, b in pieces:
            if not 0 <= b <= 1:
                raise ValueError(f"bias {b} outside [0, 1]")
        if len({s for s, _ in pieces}) != len(pieces):
            raise ValueError("duplicate level in bias schedule")
        self.pieces = tuple(pieces)
        self._starts = [s for s, _ in pieces]

    @classmethod
    def constant(cls, bias) -> "BiasSchedule":
        return cls([(0, Fraction(bias))])

    @classmethod
    def parse(cls, spec: str) -> "BiasSchedule":
        """Parse ``"0:0.5,8:0.4"``; biases may be decimals or fractions."""
        pieces = []
        for part in spec.split(","):
            level, _, bias = part.strip().partition(":")
            if not bias:
                raise ValueError(f"bad schedule entry {part!r}; expected level:bias")
            pieces.append((int(level), Fraction(bias.strip())))
        return cls(pieces)

    def __call__(self, level: int) -> Fraction:
        return self.pieces[bisect.bisect_right(self._starts, level) - 1][1]

    def __str__(self) -> str:
        return ",".join(f"{s}:{b}" for s, b in self.pieces)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiasSchedule) and self.pieces == other.pieces

    def __hash__(self) -> int:
        return hash(self.pieces)


HALF = BiasSchedule.constant(Fraction(1, 2))


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def child_choice(g: TwoColoring, w: int, bag: int, bias: Fraction) -> tuple[Color, Fraction, int]:
    """(color, ratio, side bitset) of the child for vertex ``w`` under a parent bag."""
    red_side = g.red[w] & bag
    m = bag.bit_count() - 1
    if red_side.bit_count() >= bias * m:
        return RED, bias, red_side
    return BLUE, 1 - bias, g.blue[w] & bag


@dataclass(frozen=True)
class RrtLevel:
    level: int
    color: Color
    q: Fraction
    bag_size: int
    node_count: int
    # children of the previous kept level, split by color, before filtering
    red_candidates: int
    blue_candidates: int


@dataclass(frozen=True)
class RrtLevels:
    n: int
    schedule: BiasSchedule
    levels: tuple[RrtLevel, ...]

    @property
    def last(self) -> int:
        return len(self.levels) - 1

    def s(self, i: int) -> int:
        """Bag size on level i, with s(-1) = n for the super-root."""
        return self.n if i == -1 else self.levels[i].bag_size

    def color(self, i: int) -> Color:
        return self.levels[i].color

    def q(self, i: int) -> Fraction:
        return self.levels[i].q

    def color_levels(self, color: Color) -> list[int]:
        return [lv.level for lv in self.levels if lv.color is color]

    def prefix_count(self, color: Color, i: int) -> int:
        """Levels 0..i of ``color`` (0 when i < 0)."""
        return sum(1 for lv in self.levels[: max(i + 1, 0)] if lv.color is color)

    def suffix_count(self, color: Color, i: int) -> int:
        """Levels i..last of ``color`` (0 when i > last)."""
        return sum(1 for lv in self.levels[max(i, 0):] if lv.color is color)

    def to_csv(self) -> str:
        rows = ["level,color,q,bag_size,node_count"]
        for lv in self.levels:
            rows.append(f"{lv.level},{lv.color},{lv.q},{lv.bag_size},{lv.node_count}")
        return "\n".join(rows) + "\n"


def build_rrt(g: TwoColoring, schedule: BiasSchedule = HALF,
              subset_policy: SubsetPolicy = lowest_indices) -> RrtLevels:
    if g.n < 1:
        raise ValueError("need at least one vertex")
    if g.n > RRT_MAX_N:
        raise ValueError(f"explicit restricted trees are capped at n={RRT_MAX_N}")
    red_nb, blue_nb = g.red, g.blue
    frontier = {g.full_mask: 1}  # the super-root's bag is V
    levels = []
    i = 0
    while True:
        bias = schedule(i)
        num, den = bias.numerator, bias.denominator
        ratio = {RED: bias, BLUE: 1 - bias}
        red_tally: dict[int, int] = {}
        blue_tally: dict[int, int] = {}
        red_count = blue_count = 0
        for bag, mult in frontier.items():
            size = bag.bit_count() - 1
            # integer forms of b*size and ceil(b*size), ceil((1-b)*size)
            threshold = num * size
            red_size = -((-threshold) // den)
            blue_size = -((-(den - num) * size) // den)
            rest = bag
            while rest:
                low = rest & -rest
                rest ^= low
                w = low.bit_length() - 1
                side = red_nb[w] & bag
                if side.bit_count() * den >= threshold:
                    child = subset_policy(side, red_size)
                    red_tally[child] = red_tally.get(child, 0) + mult
                    red_count += mult
                else:
                    child = subset_policy(blue_nb[w] & bag, blue_size)
                    blue_tally[child] = blue_tally.get(child, 0) + mult
                    blue_count += mult
        counts = {RED: red_count, BLUE: blue_count}
        keep = RED if red_count > blue_count else BLUE
        frontier = red_tally if keep is RED else blue_tally
        sizes = {b.bit_count() for b in frontier}
        if len(sizes) != 1:
            raise AssertionError(f"level {i}: kept nodes have bag sizes {sorted(sizes)}")
        s = sizes.pop()
        levels.append(RrtLevel(i, keep, ratio[keep], s, counts[keep], counts[RED], counts[BLUE]))
        if s == 0:
            break
        i += 1
    return RrtLevels(g.n, schedule, tuple(levels))


def rrt_full_paths(g: TwoColoring, levels: RrtLevels,
                   subset_policy: SubsetPolicy = lowest_indices):
    """Yield every root-to-last-level path of the restricted tree as a vertex tuple."""
    colors = [lv.color for lv in levels.levels]
    last = levels.last

    def walk(bag: int, i: int, prefix: tuple[int, ...]):
        size = bag.bit_count() - 1
        bias = levels.schedule(i)
        rest = bag
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length() - 1
            color, q, side = child_choice(g, w, bag, bias)
            if color is not colors[i]:
                continue
            path = prefix + (w,)
            if i == last:
                yield path
            else:
                yield from walk(subset_policy(side, ceil_fraction(q * size)), i + 1, path)

    yield from walk(g.full_mask, 0, ())


def check_rrt_levels(levels: RrtLevels) -> CheckReport:
    """Bag recurrence, majority retention, and the bias-1/2 power-of-two sizes."""
    rep = CheckReport("rrt_levels")
    prev_nodes = 1
    for lv in levels.levels:
        i = lv.level
        want = ceil_fraction(lv.q * (levels.s(i - 1) - 1))
        rep.record(lv.bag_size == want, f"recurrence level {i}", lv.bag_size, "==", want)
        bound = Fraction(prev_nodes * levels.s(i - 1), 2)
        rep.record(lv.node_count >= bound, f"retention level {i}", lv.node_count, ">=", bound)
        prev_nodes = lv.node_count
    n = levels.n
    if levels.schedule == HALF and n & (n - 1) == 0:
        qexp = n.bit_length() - 1
        for i in range(min(qexp, len(levels.levels))):
            want = 2 ** (qexp - i - 1)
            rep.record(levels.s(i) == want, f"power-of-two size level {i}", levels.s(i), "==", want)
    return rep


def rrt_bag_floor(levels: RrtLevels, i: int, p) -> Fraction:
    """n * prod_{j<=i} q(j) - p/(1-p), a lower bound on s(i) when every q(j) <= p < 1."""
    p = Fraction(p)
    if p >= 1:
        raise ValueError("p must be below 1")
    qs = [levels.q(j) for j in range(i + 1)]
    if any(q > p for q in qs):
        raise ValueError(f"premise fails: some q(j) exceeds p={p} on levels 0..{i}")
    return levels.n * math.prod(qs, start=Fraction(1)) - p / (1 - p)


def schedule_bag_floor(schedule: BiasSchedule, n: int, ratios: list[Fraction], p) -> Fraction:
    """Same floor from an explicit ratio sequence (no coloring needed)."""
    p = Fraction(p)
    if p >= 1:
        raise ValueError("p must be below 1")
    return n * math.prod(ratios, start=Fraction(1)) - p / (1 - p)


def check_bag_floors(levels: RrtLevels, p=None) -> CheckReport:
    """rrt_bag_floor <= s(i) on every level where the premise holds."""
    rep = CheckReport("rrt_bag_floor")
    if p is None:
        p = max(lv.q for lv in levels.levels)
    p = Fraction(p)
    if p >= 1:
        rep.skipped += len(levels.levels)
        return rep
    for lv in levels.levels:
        if any(levels.q(j) > p for j in range(lv.level + 1)):
            rep.skipped += 1
            continue
        floor = rrt_bag_floor(levels, lv.level, p)
        rep.record(floor <= lv.bag_size, f"level {lv.level}", floor, "<=", lv.bag_size)
    return rep


def rrt_weights(levels: RrtLevels, S: Iterable[int]) -> tuple[int, mpmath.mpf]:
    """W(S) = prod_{i in S} s(i-1) and W1(S) = log2 W(S) (-inf when W = 0)."""
    S = sorted(set(S))
    for i in S:
        if not 0 <= i <= levels.last:
            raise ValueError(f"level {i} not in the tree")
    W = math.prod(levels.s(i - 1) for i in S)
    if W == 0:
        return 0, mpmath.ninf
    if W & (W - 1) == 0:
        return W, mpmath.mpf(W.bit_length() - 1)
    with mpmath.workdps(60):
        return W, mpmath.log(W, 2)


def rrt_monochromatic_lower_bound(levels: RrtLevels, S: Iterable[int]) -> Fraction:
    """prod_{i in S} s(i-1) / (2^(l+1) (l+1)!), for a single-color level set S."""
    S = sorted(set(S))
    if len({levels.color(i) for i in S}) > 1:
        raise ValueError("level set mixes colors")
    l = levels.last
    W = math.prod(levels.s(i - 1) for i in S)
    return Fraction(W, 2 ** (l + 1) * math.factorial(l + 1))


def check_monochromatic_lower_bound(levels: RrtLevels, profile: Profile,
                                    exhaustive_limit: int = 12) -> CheckReport:
    """Census count of size |S| (in the level color) against the bound, for all same-color S.

    Color classes with at most ``exhaustive_limit`` levels are enumerated
    subset by subset.  Larger classes are covered by checking, for each size,
    the subset of largest bags: the bound is monotone in the product, so that
    subset dominates every other of the same size.
    """
    rep = CheckReport("rrt_same_color_bound")
    for color in (RED, BLUE):
        idx = levels.color_levels(color)
        row = profile.red if color is RED else profile.blue
        if len(idx) <= exhaustive_limit:
            subsets = (S for k in range(1, len(idx) + 1) for S in itertools.combinations(idx, k))
        else:
            ranked = sorted(idx, key=lambda i: -levels.s(i - 1))
            subsets = (ranked[:k] for k in range(1, len(idx) + 1))
        for S in subsets:
            bound = ceil_fraction(rrt_monochromatic_lower_bound(levels, S))
            have = row[len(S)] if len(S) < len(row) else 0
            rep.record(have >= bound, f"{color} S={list(S)}", have, ">=", bound)
    return rep


def szekely_bag_check(levels: RrtLevels, q: int) -> CheckReport:
    """s(i-1) < C(2q-i, q-c_b(i-1)) for i = 0..last+1, given no (q+1)-clique."""
    rep = CheckReport("szekely_bag")
    for i in range(levels.last + 2):
        cb = levels.prefix_count(BLUE, i - 1)
        top, bottom = 2 * q - i, q - cb
        bound = math.comb(top, bottom) if top >= 0 and bottom >= 0 else 0
        rep.record(levels.s(i - 1) < bound, f"level {i}", levels.s(i - 1), "<", bound)
    return rep
