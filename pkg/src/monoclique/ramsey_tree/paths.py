"""Full paths of the bias-1/2 Ramsey Tree on n = 2^q vertices.

Levels 0..q-1 follow the biased-tree rule with bias 1/2, so bags halve
exactly (2^(q-i-1) on level i).  Level q holds the single vertex left in each
level-(q-1) bag; its node is red when at least q/2 of the q nodes above it
are red, and blue otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from ..checks import TreeInvariantError
from ..coloring import BLUE, RED, Color, TwoColoring
from .rrt import child_choice, lowest_indices

PATHS_MAX_Q = 4
HALF_BIAS = Fraction(1, 2)


@dataclass(frozen=True)
class FullPath:
    vertices: tuple[int, ...]
    colors: tuple[Color, ...]

    @property
    def last(self) -> int:
        return len(self.vertices) - 1

    def vertex_set(self, color: Color) -> frozenset[int]:
        return frozenset(v for v, c in zip(self.vertices, self.colors) if c is color)


@dataclass(frozen=True)
class PathCounters:
    """prefix[c][i]: nodes of color c on levels 0..i; suffix[c][i]: on levels i..L.

    Both are padded so that index -1 of prefix and index L+1 of suffix read 0.
    """

    last: int
    prefix: dict
    suffix: dict

    def c(self, color: Color, i: int) -> int:
        return self.prefix[color][i + 1]

    def c_suffix(self, color: Color, i: int) -> int:
        return self.suffix[color][min(max(i, 0), self.last + 1)]


def path_color_counters(p: FullPath) -> PathCounters:
    L = p.last
    prefix = {}
    suffix = {}
    for color in (RED, BLUE):
        pre = [0]
        for c in p.colors:
            pre.append(pre[-1] + (c is color))
        suf = [0] * (L + 2)
        for i in range(L, -1, -1):
            suf[i] = suf[i + 1] + (p.colors[i] is color)
        prefix[color] = pre
        suffix[color] = suf
    return PathCounters(L, prefix, suffix)


def _power_of_two_exponent(n: int) -> int:
    if n < 1 or n & (n - 1):
        raise ValueError(f"n={n} is not a power of two")
    return n.bit_length() - 1


def rt_full_paths(g: TwoColoring) -> Iterator[FullPath]:
    """Every root-to-level-q path, in increasing vertex order at each level."""
    q = _power_of_two_exponent(g.n)
    if q > PATHS_MAX_Q:
        raise ValueError(f"full-path streaming is capped at n={2 ** PATHS_MAX_Q}")

    def walk(bag: int, i: int, verts: tuple[int, ...], cols: tuple[Color, ...]):
        if i == q:
            # the last bag holds exactly one vertex
            w = bag.bit_length() - 1
            reds = sum(1 for c in cols if c is RED)
            yield FullPath(verts + (w,), cols + (RED if 2 * reds >= q else BLUE,))
            return
        size = bag.bit_count() - 1
        rest = bag
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length() - 1
            color, ratio, side = child_choice(g, w, bag, HALF_BIAS)
            k = -((-ratio.numerator * size) // ratio.denominator)
            yield from walk(lowest_indices(side, k), i + 1, verts + (w,), cols + (color,))

    if q == 0:
        # a single vertex: the root is already the last level
        yield FullPath((0,), (RED,))
        return
    yield from walk(g.full_mask, 0, (), ())


def _is_monochromatic(g: TwoColoring, verts: frozenset[int], color: Color) -> bool:
    adj = g.adjacency(color)
    return all(adj[v] & (1 << u) for v in verts for u in verts if u != v)


def extract_cliques(p: FullPath, g: TwoColoring) -> tuple[frozenset[int], frozenset[int]]:
    """(red vertex set, blue vertex set) of a path; raises if either is not monochromatic."""
    red, blue = p.vertex_set(RED), p.vertex_set(BLUE)
    for verts, color in ((red, RED), (blue, BLUE)):
        if not _is_monochromatic(g, verts, color):
            raise TreeInvariantError(f"{color} nodes of path {format_full_path(p)} are not monochromatic")
    return red, blue


def format_full_path(p: FullPath) -> str:
    return " ".join(f"v{v}:{c}" for v, c in zip(p.vertices, p.colors))
