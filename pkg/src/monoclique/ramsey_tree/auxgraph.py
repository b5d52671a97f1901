"""The bipartite graph H(W, Z) on red and blue vertex sets of restricted-tree paths.

``W`` collects the red vertex sets and ``Z`` the blue vertex sets of the
full paths of the bias-1/2 restricted tree on n = 4^t vertices.  A pair
(w, z) is an edge when one full path has exactly w as its red set and z as
its blue set; the first such path (in stream order) is kept as a witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ..census import Profile, stats
from ..checks import CheckReport
from ..coloring import BLUE, RED, Color, TwoColoring
from .paths import FullPath
from .rrt import HALF, RrtLevels, build_rrt, rrt_full_paths

AUX_SIZES = (4, 16)


@dataclass(frozen=True)
class AuxBipartite:
    levels: RrtLevels
    W: frozenset[frozenset[int]]
    Z: frozenset[frozenset[int]]
    edges: dict  # (w, z) -> witness FullPath
    degree_w: dict
    degree_z: dict
    path_count: int

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def max_degree_w(self) -> int:
        return max(self.degree_w.values(), default=0)

    @property
    def max_degree_z(self) -> int:
        return max(self.degree_z.values(), default=0)

    def summary(self) -> dict:
        return {
            "n": self.levels.n,
            "paths": self.path_count,
            "W": len(self.W),
            "Z": len(self.Z),
            "E": self.edge_count,
            "max_degree_W": self.max_degree_w,
            "max_degree_Z": self.max_degree_z,
        }


def build_aux_bipartite(g: TwoColoring) -> AuxBipartite:
    if g.n not in AUX_SIZES:
        raise ValueError(f"auxiliary graph needs n in {AUX_SIZES}, got {g.n}")
    levels = build_rrt(g, HALF)
    colors = tuple(lv.color for lv in levels.levels)
    edges: dict = {}
    count = 0
    for verts in rrt_full_paths(g, levels):
        count += 1
        w = frozenset(v for v, c in zip(verts, colors) if c is RED)
        z = frozenset(v for v, c in zip(verts, colors) if c is BLUE)
        edges.setdefault((w, z), FullPath(verts, colors))
    degree_w: dict = {}
    degree_z: dict = {}
    for w, z in edges:
        degree_w[w] = degree_w.get(w, 0) + 1
        degree_z[z] = degree_z.get(z, 0) + 1
    return AuxBipartite(levels, frozenset(degree_w), frozenset(degree_z), edges,
                        degree_w, degree_z, count)


def degree_bound(levels: RrtLevels, q: int, side: Color) -> int:
    """(l+1)! times the product over levels of the other color of
    C(2q - c'_o(i+1) - c_s(i-1), q - c_s(i-1)), where s is ``side`` and o the other color."""
    other = side.complement
    prod = math.factorial(levels.last + 1)
    for i in levels.color_levels(other):
        fixed = levels.prefix_count(side, i - 1)
        top = 2 * q - levels.suffix_count(other, i + 1) - fixed
        bottom = q - fixed
        prod *= math.comb(top, bottom) if top >= 0 and bottom >= 0 else 0
    return prod


def check_aux_bipartite(H: AuxBipartite, q: Optional[int] = None,
                        profile: Optional[Profile] = None) -> CheckReport:
    """Degree bounds, the degree-sum pigeonhole, and the edge-count floor.

    ``q`` defaults to the census maximum M(G), for which no (q+1)-clique
    exists; the degree bounds are skipped when neither is given.
    """
    rep = CheckReport("aux_bipartite")
    E = H.edge_count
    rep.record(E <= len(H.W) * len(H.Z), "E <= |W||Z|", E, "<=", len(H.W) * len(H.Z))
    if E:
        rep.record(len(H.W) * H.max_degree_w >= E, "|W| >= E/d_W", len(H.W) * H.max_degree_w, ">=", E)
        rep.record(len(H.Z) * H.max_degree_z >= E, "|Z| >= E/d_Z", len(H.Z) * H.max_degree_z, ">=", E)
    l = H.levels.last
    floor = H.levels.levels[-1].node_count
    rep.record(E * math.factorial(l + 1) >= floor, "E >= |Q'_l|/(l+1)!",
               E * math.factorial(l + 1), ">=", floor)
    if q is None and profile is not None:
        q = stats(profile).max_size
    if q is None:
        rep.skipped += 2
        return rep
    for side, degrees in ((RED, H.degree_w), (BLUE, H.degree_z)):
        bound = degree_bound(H.levels, q, side)
        for vs, d in sorted(degrees.items(), key=lambda kv: sorted(kv[0])):
            rep.record(d < bound, f"degree {side} {sorted(vs)}", d, "<", bound)
    return rep
