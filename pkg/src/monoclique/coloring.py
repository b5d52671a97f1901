"""Two-colorings of complete graphs: the core type, generators and file format.

A coloring on ``n`` vertices is stored as one red-neighborhood bitset per
vertex (bit ``j`` of ``red[i]`` set iff pair ``{i, j}`` is Red).  The blue
neighborhood is the complement minus the vertex itself.

Random colorings use numpy's PCG64 bit generator; pairs are drawn in
lexicographic order ``(0,1), (0,2), ..., (n-2,n-1)`` and a drawn ``1`` means
Red.  Fixing this order keeps test vectors stable across platforms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

import numpy as np


class Color(enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def complement(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED

    def __str__(self) -> str:
        return self.value


RED = Color.RED
BLUE = Color.BLUE


class ColoringFormatError(ValueError):
    """Raised when a coloring file cannot be parsed; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class TwoColoring:
    n: int
    red: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.red) != self.n:
            raise ValueError(f"expected {self.n} neighborhoods, got {len(self.red)}")
        full = (1 << self.n) - 1
        for i, nb in enumerate(self.red):
            if nb & ~full:
                raise ValueError(f"vertex {i} has neighbors outside 0..{self.n - 1}")
            if nb >> i & 1:
                raise ValueError(f"self-pair at vertex {i}")
            rest = nb
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not self.red[j] >> i & 1:
                    raise ValueError(f"asymmetric pair {{{i}, {j}}}")
                rest ^= low

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def blue(self) -> tuple[int, ...]:
        full = self.full_mask
        return tuple(full & ~nb & ~(1 << i) for i, nb in enumerate(self.red))

    def neighbors(self, v: int, color: Color) -> int:
        """Bitset of vertices joined to ``v`` by an edge of ``color``."""
        if color is RED:
            return self.red[v]
        return self.full_mask & ~self.red[v] & ~(1 << v)

    def adjacency(self, color: Color) -> tuple[int, ...]:
        return self.red if color is RED else self.blue

    def color(self, i: int, j: int) -> Color:
        if i == j:
            raise ValueError("color of a self-pair is undefined")
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"pair {{{i}, {j}}} out of range for n={self.n}")
        return RED if self.red[i] >> j & 1 else BLUE

    def pairs(self) -> Iterator[tuple[int, int, Color]]:
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i, j, self.color(i, j)

    def count_pairs(self, color: Color) -> int:
        reds = sum(nb.bit_count() for nb in self.red) // 2
        return reds if color is RED else self.n * (self.n - 1) // 2 - reds

    def induced(self, vertices: list[int]) -> "TwoColoring":
        """Sub-coloring on ``vertices``, relabelled 0..k-1 in the given order."""
        idx = {v: k for k, v in enumerate(vertices)}
        red = [0] * len(vertices)
        for a, v in enumerate(vertices):
            for u, b in idx.items():
                if u != v and self.red[v] >> u & 1:
                    red[a] |= 1 << b
        return TwoColoring(len(vertices), tuple(red))

    def delete_vertex(self, v: int) -> "TwoColoring":
        return self.induced([u for u in range(self.n) if u != v])


def from_pair_colors(n: int, colors) -> TwoColoring:
    """Build a coloring from an iterable of Colors in lexicographic pair order."""
    red = [0] * n
    it = iter(colors)
    for i in range(n):
        for j in range(i + 1, n):
            if next(it) is RED:
                red[i] |= 1 << j
                red[j] |= 1 << i
    return TwoColoring(n, tuple(red))


def from_red_edges(n: int, edges) -> TwoColoring:
    red = [0] * n
    for i, j in edges:
        if i == j:
            raise ValueError("self-pair")
        red[i] |= 1 << j
        red[j] |= 1 << i
    return TwoColoring(n, tuple(red))


def monochromatic(n: int, color: Color = RED) -> TwoColoring:
    if n < 1:
        raise ValueError("n must be at least 1")
    full = (1 << n) - 1
    if color is RED:
        return TwoColoring(n, tuple(full & ~(1 << i) for i in range(n)))
    return TwoColoring(n, (0,) * n)


def random_coloring(n: int, seed: int) -> TwoColoring:
    """Each pair independently Red with probability 1/2 (PCG64, lexicographic pair order)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    bits = rng.integers(0, 2, size=n * (n - 1) // 2, dtype=np.uint8)
    red = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits[k]:
                red[i] |= 1 << j
                red[j] |= 1 << i
            k += 1
    return TwoColoring(n, tuple(red))


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def quadratic_residues(q: int) -> set[int]:
    return {x * x % q for x in range(1, q)}


def paley_coloring(q: int) -> TwoColoring:
    """Pair {i, j} is Red iff i - j is a nonzero square mod q."""
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if q % 4 != 1:
        raise ValueError(f"q={q} is not 1 mod 4")
    residues = quadratic_residues(q)
    red = [0] * q
    for i in range(q):
        for j in range(q):
            if i != j and (i - j) % q in residues:
                red[i] |= 1 << j
    return TwoColoring(q, tuple(red))


def cycle_coloring(n: int) -> TwoColoring:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_red_edges(n, [(i, (i + 1) % n) for i in range(n)])


def clique_union_coloring(groups: int, group_size: int) -> TwoColoring:
    """``groups`` disjoint Red cliques of ``group_size`` vertices, Blue between them."""
    if groups < 1 or group_size < 1:
        raise ValueError("groups and group_size must both be at least 1")
    n = groups * group_size
    red = []
    for v in range(n):
        g = v // group_size
        block = ((1 << group_size) - 1) << (g * group_size)
        red.append(block & ~(1 << v))
    return TwoColoring(n, tuple(red))


def join_colorings(g1: TwoColoring, g2: TwoColoring, cross: Color) -> TwoColoring:
    """Disjoint union with every g1-g2 pair colored ``cross``; g2 is re-indexed after g1."""
    n1, n2 = g1.n, g2.n
    m1 = (1 << n1) - 1
    m2 = ((1 << n2) - 1) << n1
    red = []
    for v in range(n1):
        red.append(g1.red[v] | (m2 if cross is RED else 0))
    for v in range(n2):
        red.append((g2.red[v] << n1) | (m1 if cross is RED else 0))
    return TwoColoring(n1 + n2, tuple(red))


def swap_colors(g: TwoColoring) -> TwoColoring:
    return TwoColoring(g.n, g.blue)


def relabel(g: TwoColoring, perm: list[int]) -> TwoColoring:
    """Coloring in which vertex ``perm[v]`` plays the role of ``v``."""
    red = [0] * g.n
    for v in range(g.n):
        for u in range(g.n):
            if u != v and g.red[v] >> u & 1:
                red[perm[v]] |= 1 << perm[u]
    return TwoColoring(g.n, tuple(red))


def write_coloring(g: TwoColoring) -> str:
    lines = [str(g.n)]
    for i in range(g.n - 1):
        lines.append("".join("R" if g.red[i] >> j & 1 else "B" for j in range(i + 1, g.n)))
    return "\n".join(lines) + "\n"


def read_coloring(text: str) -> TwoColoring:
    rows = [(k + 1, line.rstrip("\r")) for k, line in enumerate(text.split("\n"))]
    rows = [(k, line) for k, line in rows if not line.startswith("#")]
    # a single trailing newline leaves one empty string behind
    if rows and rows[-1][1] == "":
        rows.pop()
    if not rows:
        raise ColoringFormatError(1, "missing header")
    lineno, header = rows[0]
    try:
        n = int(header.strip())
    except ValueError:
        raise ColoringFormatError(lineno, f"malformed header {header!r}") from None
    if n < 1:
        raise ColoringFormatError(lineno, f"vertex count must be positive, got {n}")
    body = rows[1:]
    if len(body) != n - 1:
        where = body[n - 1][0] if len(body) > n - 1 else (body[-1][0] if body else lineno) + 1
        raise ColoringFormatError(where, f"expected {n - 1} rows, found {len(body)}")
    red = [0] * n
    for i, (lineno, line) in enumerate(body):
        want = n - 1 - i
        if len(line) != want:
            raise ColoringFormatError(lineno, f"row {i} has length {len(line)}, expected {want}")
        for k, ch in enumerate(line):
            if ch == "R":
                j = i + 1 + k
                red[i] |= 1 << j
                red[j] |= 1 << i
            elif ch != "B":
                raise ColoringFormatError(lineno, f"illegal character {ch!r}")
    return TwoColoring(n, tuple(red))
