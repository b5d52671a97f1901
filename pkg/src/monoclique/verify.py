"""Property suites and exhaustive sweeps tying the census, the trees and the bounds together.

Every check here is backed by a theorem, so a failure means a bug in this
package.  Each failure carries the serialized coloring that produced it.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

import mpmath

from . import bounds
from .census import (
    DEFAULT,
    analytic_profile_clique_union,
    brute_force_profile,
    count_profile,
    per_vertex_counts,
    stats,
)
from .checks import CheckReport
from .coloring import (
    BLUE,
    RED,
    TwoColoring,
    clique_union_coloring,
    cycle_coloring,
    join_colorings,
    paley_coloring,
    random_coloring,
    swap_colors,
    write_coloring,
)
from .ramsey_tree import (
    HALF,
    BiasSchedule,
    build_aux_bipartite,
    build_rrt,
    check_aux_bipartite,
    check_bag_floors,
    check_census_against_levels,
    check_monochromatic_lower_bound,
    check_rrt_levels,
    extract_cliques,
    grt_lemma_checks,
    grt_level_counts,
    rt_full_paths,
    szekely_bag_check,
)
from .ramsey_tree.auxgraph import AUX_SIZES
from .ramsey_tree.paths import PATHS_MAX_Q
from .ramsey_tree.rrt import RRT_MAX_N

# size caps for the individual checks inside a property suite
ORACLE_MAX_N = 14
DELETION_MAX_N = 24
GRT_MAX_N = 12

RRT_SCHEDULES = (
    HALF,
    BiasSchedule([(0, Fraction(1, 2)), (3, Fraction(1, 8))]),
    BiasSchedule([(0, Fraction(1, 2)), (3, Fraction(2, 5))]),
)

FAMILIES = ("random", "paley", "cycle", "clique_union", "join")


@dataclass
class Failure:
    instance: str  # human-readable instance id
    coloring: str  # the coloring in file format
    check: str
    where: str
    lhs: str
    relation: str
    rhs: str

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class SuiteReport:
    suite: str
    instances: int = 0
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def absorb(self, label: str, g: Optional[TwoColoring], rep: CheckReport) -> None:
        self.checks += rep.checked
        text = write_coloring(g) if g is not None else ""
        for v in rep.violations:
            self.failures.append(Failure(label, text, v.check, v.where, v.lhs, v.relation, v.rhs))

    def merge(self, other: "SuiteReport") -> None:
        self.instances += other.instances
        self.checks += other.checks
        self.failures.extend(other.failures)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "instances": self.instances,
            "checks": self.checks,
            "failures": [f.to_json() for f in self.failures],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


# ---------------------------------------------------------------- per-coloring checks

def census_identity_checks(g: TwoColoring, profile=None, oracle: bool = True,
                           deletion: bool = True) -> CheckReport:
    """Oracle equality, pair partition, color-swap duality, deletion and per-vertex identities."""
    rep = CheckReport("census")
    p = profile or count_profile(g)
    n = g.n
    if oracle and n <= ORACLE_MAX_N:
        bf = brute_force_profile(g)
        rep.record(bf == p, "oracle", p.to_json()["red"] + p.to_json()["blue"], "==",
                   bf.to_json()["red"] + bf.to_json()["blue"])
    rep.record(p.count(2) == math.comb(n, 2), "pair partition", p.count(2), "==", math.comb(n, 2))
    swapped = count_profile(swap_colors(g))
    rep.record(swapped.red[2:] == p.blue[2:] and swapped.blue[2:] == p.red[2:],
               "swap duality", swapped.red, "==", p.blue)
    st = stats(p)
    per_vertex = per_vertex_counts(g)
    lhs = sum(per_vertex)
    rhs = st.average * st.total
    rep.record(lhs == rhs, "sum of C_i = A*C", lhs, "==", rhs)
    rep.record(max(per_vertex) * n >= rhs, "max C_j >= A*C/n", max(per_vertex) * n, ">=", rhs)
    if deletion and 2 <= n <= DELETION_MAX_N:
        for j in range(n):
            rest = stats(count_profile(g.delete_vertex(j))).total
            rep.record(st.total == per_vertex[j] + rest, f"deletion v{j}",
                       st.total, "==", per_vertex[j] + rest)
    return rep


def mode_gap_checks(g: TwoColoring, profile=None) -> CheckReport:
    """M - A >= 1/2 and C_M <= C_(M-1) when M >= 3, for n >= 6."""
    rep = CheckReport("mode_gap")
    if g.n < 6:
        rep.skipped += 2
        return rep
    st = stats(profile or count_profile(g))
    gap = st.max_size - st.average
    rep.record(gap >= Fraction(1, 2), "M - A >= 1/2", gap, ">=", Fraction(1, 2))
    if st.max_size >= 3:
        top, below = st.per_size[st.max_size], st.per_size[st.max_size - 1]
        rep.record(top <= below, f"C_M <= C_M-1 (M={st.max_size})", top, "<=", below)
    return rep


def avg_chain_check(g: TwoColoring) -> CheckReport:
    """Greedy deletion chain: C(G) >= exp(sum_i A(G_i)/i), deleting a max-C_j vertex each step."""
    rep = CheckReport("avg_chain")
    total = stats(count_profile(g)).total
    averages = {}
    h = g
    while h.n >= 2:
        averages[h.n] = stats(count_profile(h)).average
        pv = per_vertex_counts(h)
        h = h.delete_vertex(pv.index(max(pv)))
    bound = bounds.avg_chain_lower(averages)
    rep.record(total >= bound.to_mpf(), "C >= exp(sum A(i)/i)", total, ">=", bound)
    return rep


def closed_form_checks(g: TwoColoring, profile=None) -> CheckReport:
    """Census against the closed-form lower and upper bounds."""
    rep = CheckReport("closed_forms")
    p = profile or count_profile(g)
    st = stats(p)
    n = g.n
    # at least (1/t!) 2^(C(t,2)-2) monochromatic K_t once n >= 2^(2t-3)
    t = 2
    while 2 ** (2 * t - 3) <= n:
        need = math.ceil(bounds.thm_lower_size_t(t).value)
        rep.record(p.count(t) >= need, f"K_{t} lower", p.count(t), ">=", need)
        t += 1
    k = 2
    while bounds.cor_lower_applies(n, k):
        need = math.ceil(bounds.cor_lower_size_k(n, k).value)
        rep.record(p.count(k) >= need, f"size-{k} lower", p.count(k), ">=", need)
        k += 1
    # no K_t for every t > M
    for t in range(max(st.max_size + 1, 3), st.max_size + 3):
        for k in range(2, t):
            cap = bounds.szekely_upper_product(t, k).value
            rep.record(p.count(k) <= cap, f"size-{k} upper (no K_{t})", p.count(k), "<=", cap)
    return rep


def grt_checks(g: TwoColoring, profile=None) -> CheckReport:
    rep = CheckReport("grt")
    levels = grt_level_counts(g)
    rep.merge(grt_lemma_checks(levels, delta=0))
    rep.merge(check_census_against_levels(levels, profile or count_profile(g)))
    rep.record(levels.at(0) == g.n, "|Q_0| = n", levels.at(0), "==", g.n)
    if g.n >= 2:
        rep.record(levels.at(1) == g.n * (g.n - 1), "|Q_1| = n(n-1)", levels.at(1), "==", g.n * (g.n - 1))
    return rep


def rrt_checks(g: TwoColoring, profile=None, schedules: Sequence[BiasSchedule] = RRT_SCHEDULES) -> CheckReport:
    rep = CheckReport("rrt")
    p = profile or count_profile(g)
    for schedule in schedules:
        levels = build_rrt(g, schedule)
        rep.merge(check_rrt_levels(levels))
        rep.merge(check_bag_floors(levels))
        rep.merge(check_monochromatic_lower_bound(levels, p))
        if schedule == HALF:
            rep.merge(szekely_bag_check(levels, stats(p).max_size))
    return rep


def full_path_checks(g: TwoColoring) -> CheckReport:
    """Path count 2^C(q+1,2) and same-color sets monochromatic with the larger >= ceil(q/2)+1."""
    rep = CheckReport("full_paths")
    q = g.n.bit_length() - 1
    need = -(-q // 2) + 1
    count = 0
    for path in rt_full_paths(g):
        count += 1
        try:
            red, blue = extract_cliques(path, g)
        except AssertionError as exc:
            rep.record(False, str(exc), "not monochromatic", "==", "monochromatic")
            continue
        big = max(len(red), len(blue))
        if big < need:
            rep.record(False, f"path {count}", big, ">=", need)
        else:
            rep.checked += 1
    want = 2 ** math.comb(q + 1, 2)
    rep.record(count == want, "path count", count, "==", want)
    return rep


def aux_checks(g: TwoColoring, profile=None) -> CheckReport:
    return check_aux_bipartite(build_aux_bipartite(g), profile=profile or count_profile(g))


def coloring_checks(g: TwoColoring, deep: bool = True) -> CheckReport:
    """Every applicable cross-module check on one coloring."""
    rep = CheckReport("all")
    p = count_profile(g)
    n = g.n
    rep.merge(census_identity_checks(g, p, deletion=deep))
    rep.merge(mode_gap_checks(g, p))
    rep.merge(closed_form_checks(g, p))
    if deep and n <= DELETION_MAX_N:
        rep.merge(avg_chain_check(g))
    if n <= GRT_MAX_N:
        rep.merge(grt_checks(g, p))
    if n <= RRT_MAX_N:
        rep.merge(rrt_checks(g, p))
    if n & (n - 1) == 0 and n <= 2**PATHS_MAX_Q:
        rep.merge(full_path_checks(g))
    if n in AUX_SIZES:
        rep.merge(aux_checks(g, p))
    return rep


# ---------------------------------------------------------------- families and suites

Size = Union[int, tuple]


def family_instances(family: str, sizes: Iterable[Size], seeds: Iterable[int]) -> list[tuple[str, TwoColoring]]:
    """Concrete (label, coloring) instances for a generator family.

    random: one coloring per (n, seed).  paley and cycle: sizes are q / n and
    seeds are ignored.  clique_union: a size is (t, s), or n for every
    factorization n = t*s.  join: a size n >= 4 joins random(n - 2*(n//4), seed)
    with clique_union(2, n//4) by Blue cross pairs.
    """
    seeds = list(seeds)
    out = []
    for size in sizes:
        if family == "random":
            out += [(f"random(n={size}, seed={s})", random_coloring(size, s)) for s in seeds]
        elif family == "paley":
            out.append((f"paley({size})", paley_coloring(size)))
        elif family == "cycle":
            out.append((f"cycle({size})", cycle_coloring(size)))
        elif family == "clique_union":
            pairs = [size] if isinstance(size, tuple) else [
                (t, size // t) for t in range(1, size + 1) if size % t == 0]
            out += [(f"clique_union({t}, {s})", clique_union_coloring(t, s)) for t, s in pairs]
        elif family == "join":
            if size < 4:
                raise ValueError("join instances need n >= 4")
            s = size // 4
            for seed in seeds:
                g = join_colorings(random_coloring(size - 2 * s, seed), clique_union_coloring(2, s), BLUE)
                out.append((f"join(n={size}, seed={seed})", g))
        else:
            raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return out


def _run_instance(args) -> SuiteReport:
    label, g, check = args
    rep = SuiteReport(label, instances=1)
    rep.absorb(label, g, check(g))
    return rep


def run_instances(name: str, instances: list[tuple[str, TwoColoring]],
                  check: Callable[[TwoColoring], CheckReport] = coloring_checks,
                  workers: int = 1) -> SuiteReport:
    """Run ``check`` on each instance; results merge in instance order for any worker count."""
    start = time.perf_counter()
    report = SuiteReport(name)
    jobs = [(label, g, check) for label, g in instances]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_run_instance, jobs))
    else:
        parts = [_run_instance(j) for j in jobs]
    for part in parts:
        report.merge(part)
    report.wall_time = time.perf_counter() - start
    return report


def run_property_suite(family: str, sizes: Iterable[Size], seeds: Iterable[int] = (0,),
                       workers: int = 1) -> SuiteReport:
    insts = family_instances(family, sizes, seeds)
    rep = run_instances(f"property:{family}", insts, coloring_checks, workers)
    if family == "clique_union":
        # the closed form must match the oracle
        extra = CheckReport("analytic")
        for label, g in insts:
            if g.n <= ORACLE_MAX_N:
                t = int(label.split("(")[1].split(",")[0])
                a = analytic_profile_clique_union(t, g.n // t)
                extra.record(a == brute_force_profile(g), label, a.red + a.blue, "==", "oracle")
        rep.absorb("analytic", None, extra)
    return rep


def _n6_coloring(code: int) -> TwoColoring:
    # bit k of ``code`` colors the k-th pair in lexicographic order (1 = Red)
    red = [0] * 6
    k = 0
    for i in range(6):
        for j in range(i + 1, 6):
            if code >> k & 1:
                red[i] |= 1 << j
                red[j] |= 1 << i
            k += 1
    return TwoColoring(6, tuple(red))


def sweep_instance_checks(g: TwoColoring) -> CheckReport:
    rep = CheckReport("sweep")
    p = count_profile(g)
    bf = brute_force_profile(g)
    rep.record(p == bf, "oracle", p.red + p.blue, "==", bf.red + bf.blue)
    rep.merge(mode_gap_checks(g, p))
    st = stats(p)
    pv = per_vertex_counts(g)
    rhs = st.average * st.total
    rep.record(sum(pv) == rhs, "sum of C_i = A*C", sum(pv), "==", rhs)
    rep.record(max(pv) * g.n >= rhs, "max C_j >= A*C/n", max(pv) * g.n, ">=", rhs)
    return rep


def exhaustive_sweep_n6(workers: int = 1) -> SuiteReport:
    """All 2^15 colorings of K6: oracle equality, M - A >= 1/2, C_M <= C_(M-1), per-vertex identities."""
    start = time.perf_counter()
    report = SuiteReport("sweep_n6")
    codes = range(1 << 15)
    if workers > 1:
        chunks = [range(w, 1 << 15, workers) for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_sweep_chunk, chunks))
        # failures are reported in code order regardless of the split
        failures = sorted((f for part in parts for f in part.failures), key=lambda f: int(f.instance[5:]))
        for part in parts:
            report.instances += part.instances
            report.checks += part.checks
        report.failures = failures
    else:
        report.merge(_sweep_chunk(codes))
    report.wall_time = time.perf_counter() - start
    return report


def _sweep_chunk(codes) -> SuiteReport:
    rep = SuiteReport("sweep_n6")
    for code in codes:
        g = _n6_coloring(code)
        rep.instances += 1
        rep.absorb(f"code={code}", g, sweep_instance_checks(g))
    return rep


# ---------------------------------------------------------------- named suites

def per_vertex_checks(g: TwoColoring, profile=None) -> CheckReport:
    return census_identity_checks(g, profile, oracle=False, deletion=False)


def suite_c5(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
    """The 5-cycle: C_1 = C_2 = 10, M = 2, A = 3/2."""
    g = cycle_coloring(5)
    rep = CheckReport("c5")
    p = count_profile(g)
    st = stats(p)
    rep.record(p.count(1) == 10, "C_1", p.count(1), "==", 10)
    rep.record(p.count(2) == 10, "C_2", p.count(2), "==", 10)
    rep.record(st.max_size == 2, "M", st.max_size, "==", 2)
    rep.record(st.average == Fraction(3, 2), "A", st.average, "==", Fraction(3, 2))
    rep.record(st.max_size - st.average == Fraction(1, 2), "M - A", st.max_size - st.average, "==", Fraction(1, 2))
    report = SuiteReport("c5", instances=1)
    report.absorb("cycle(5)", g, rep)
    return report


def suite_paley17(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
    """Paley-17: M = 3, C_3 = C_2, census = oracle, C_3 below the no-K_4 product bound."""
    g = paley_coloring(17)
    rep = CheckReport("paley17")
    p = count_profile(g)
    st = stats(p)
    bf = brute_force_profile(g)
    rep.record(p == bf, "oracle", p.red + p.blue, "==", bf.red + bf.blue)
    rep.record(st.max_size == 3, "M", st.max_size, "==", 3)
    rep.record(p.count(3) == p.count(2), "C_3 = C_2", p.count(3), "==", p.count(2))
    cap = bounds.szekely_upper_product(4, 3).value
    rep.record(p.count(3) <= cap, "C_3 <= product bound", p.count(3), "<=", cap)
    report = SuiteReport("paley17", instances=1)
    report.absorb("paley(17)", g, rep)
    return report


def suite_sweep_n6(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
    return exhaustive_sweep_n6(workers)


def suite_paths(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
    """Bias-1/2 full paths on n = 2, 4, 8, 16 for random and structured colorings."""
    k = 5 if seeds is None else seeds
    insts = []
    for n in (2, 4, 8, 16):
        insts += family_instances("random", [n], range(k))
        insts.append((f"all-red K{n}", clique_union_coloring(1, n)))
        insts.append((f"all-blue K{n}", clique_union_coloring(n, 1)))
    insts += family_instances("cycle", [4, 8, 16], [])
    return run_instances("paths", insts, full_path_checks, workers)


def grt_suite_check(g: TwoColoring) -> CheckReport:
    rep = CheckReport("grt_suite")
    p = count_profile(g)
    rep.merge(grt_checks(g, p))
    rep.merge(per_vertex_checks(g, p))
    return rep


def suite_grt(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
    """GRT lemmas on random colorings with 4 <= n <= 12 and every structured family up to n = 12."""
    k = 100 if seeds is None else seeds
    insts = [(f"random(n={4 + s % 9}, seed={s})", random_coloring(4 + s % 9, s)) for s in range(k)]
    insts += family_instances("cycle", range(3, 13), [])
    insts += family_instances("paley", [5], [])
    insts += family_instances("clique_union", range(1, 13), [])
    insts += family_instances("join", range(4, 13), [0])
    return run_instances("grt", insts, grt_suite_check, workers)


def rrt_suite_check(g: TwoColoring) -> CheckReport:
    rep = CheckReport("rrt_suite")
    p = count_profile(g)
    rep.merge(rrt_checks(g, p))
    rep.merge(per_vertex_checks(g, p))
    return rep


def suite_rrt(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
    """Restricted trees under three schedules on random colorings of n = 16, 32, 64."""
    k = 100 if seeds is None else seeds
    insts = family_instances("random", [16, 32, 64], range(k))
    return run_instances("rrt", insts, rrt_suite_check, workers)


def szekely_suite_check(g: TwoColoring) -> CheckReport:
    rep = CheckReport("szekely_suite")
    p = count_profile(g)
    if g.n in AUX_SIZES:
        rep.merge(aux_checks(g, p))
    rep.merge(szekely_bag_check(build_rrt(g, HALF), stats(p).max_size))
    return rep


def suite_szekely(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
    """Bag-size bound with q = M(G) on n = 16, 64 and the H(W, Z) lemmas on n = 4, 16."""
    k = 20 if seeds is None else seeds
    insts = family_instances("random", [4, 16, 64], range(k))
    insts += [("all-red K4", clique_union_coloring(1, 4)), ("all-red K16", clique_union_coloring(1, 16)),
              ("clique_union(4, 4)", clique_union_coloring(4, 4))]
    return run_instances("szekely", insts, szekely_suite_check, workers)


def lower_suite_check(g: TwoColoring) -> CheckReport:
    rep = CheckReport("lower")
    p = count_profile(g)
    if g.n == 8:
        need = math.ceil(bounds.thm_lower_size_t(3).value)
        rep.record(p.count(3) >= need, "K_3 lower on K8", p.count(3), ">=", need)
    if g.n == 16:
        need = math.ceil(bounds.cor_lower_size_k(16, 2).value)
        rep.record(p.count(2) >= need, "size-2 lower on K16", p.count(2), ">=", need)
    return rep


def suite_lower(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
    """Census against the K_3 bound on 100 K8 colorings and the pair bound on 20 K16 colorings."""
    k8, k16 = (100, 20) if seeds is None else (seeds, seeds)
    insts = family_instances("random", [8], range(k8)) + family_instances("random", [16], range(k16))
    return run_instances("lower", insts, lower_suite_check, workers)


PENTAGONAL_64 = 0.2887880951


def analytic_checks() -> CheckReport:
    rep = CheckReport("analytic")
    exact = {1: Fraction(2), 2: Fraction(4, 3), 3: Fraction(8, 21)}
    for t in range(1, 9):
        closed, truncated = bounds.subset_sum_identity(t, 40)
        gap = closed - truncated
        rep.record(0 <= gap < Fraction(1, 10**10), f"subset sum t={t}", float(gap), "in", "[0, 1e-10)")
        if t in exact:
            rep.record(closed == exact[t], f"subset sum closed t={t}", closed, "==", exact[t])
    pent = bounds.pentagonal_partial_product(64)
    rep.record(abs(float(pent) - PENTAGONAL_64) <= 1e-9, "pentagonal m=64", float(pent), "~=", PENTAGONAL_64)
    rep.record(pent.value >= Fraction(1, 4), "pentagonal >= 1/4", float(pent), ">=", "1/4")
    _, fmin = bounds.f_delta_grid_min()
    floor = Fraction(4, 7) + Fraction(1, 10**4)
    rep.record(fmin.value >= bounds.BoundValue.of(floor).to_mpf(), "f grid minimum", fmin, ">=", floor)
    g0 = bounds.profile_function("g", 0)
    rep.record(g0.exact and g0.value == 0, "g(0)", g0, "==", 0)
    with mpmath.workdps(bounds.PRECISION_DPS):
        g1_target = (4 - mpmath.log(mpmath.e, 2)) / 2
        g1 = bounds.profile_function("g", 1).value
        rep.record(abs(g1 - g1_target) <= mpmath.mpf("1e-12"), "g(1)", g1, "~=", g1_target)
        half = bounds.profile_function("g1", Fraction(1, 2)).value
        rep.record(abs(half - mpmath.mpf("0.3196630")) <= mpmath.mpf("1e-6"), "g1(1/2)", half, "~=", "0.3196630")
        vals = [bounds.profile_function("g", Fraction(i, 1000)).value for i in range(1001)]
        tol = mpmath.mpf("1e-12")
        for i in range(1000):
            if vals[i + 1] - vals[i] < -tol:
                rep.record(False, f"g monotone at {i}/1000", vals[i + 1], ">=", vals[i])
        for i in range(1, 1000):
            if vals[i + 1] - 2 * vals[i] + vals[i - 1] > tol:
                rep.record(False, f"g concave at {i}/1000", vals[i + 1] - 2 * vals[i] + vals[i - 1], "<=", tol)
        rep.checked += 1999
    for n in range(1, 21):
        for k in range(1, n + 1):
            for t in range(0, 21):
                if not bounds.binom_shift_check(n, k, t):
                    rep.record(False, f"binom shift ({n},{k},{t})", "false", "==", "true")
                else:
                    rep.checked += 1
    return rep


def suite_analytic(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
    report = SuiteReport("analytic", instances=1)
    report.absorb("analytic", None, analytic_checks())
    return report


TREND_N = 256
TREND_SEED = 1
TREND_TOLERANCE = 0.1


def trend_value(n: int = TREND_N, seed: int = TREND_SEED, workers: int = 1) -> tuple[int, float]:
    """(size-k census count, log2(count)/(log2 n)^2) for k = (log2 n)/2 on random(n, seed)."""
    k = (n.bit_length() - 1) // 2
    p = count_profile(random_coloring(n, seed), max_size=k, workers=workers)
    c = p.count(k)
    return c, math.log2(c) / (n.bit_length() - 1) ** 2


def suite_trend(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
    """One random coloring of K256: log2(C_4)/64 within 0.1 of g2(1/2) = 3/8."""
    c, ratio = trend_value(workers=workers)
    target = float(bounds.profile_function("g2", Fraction(1, 2)))
    rep = CheckReport("trend")
    rep.record(abs(ratio - target) <= TREND_TOLERANCE, f"C_4 = {c}", round(ratio, 12), "within 0.1 of", target)
    report = SuiteReport("trend256", instances=1)
    report.absorb(f"random(n={TREND_N}, seed={TREND_SEED})", None, rep)
    return report


DEFAULT_FAMILY_SIZES = {
    "random": list(range(4, 13)),
    "paley": [5, 13, 17],
    "cycle": list(range(3, 13)),
    "clique_union": [(2, 2), (3, 3), (2, 4), (4, 2), (3, 4)],
    "join": [6, 8, 10, 12],
}


def _family_suite(family: str):
    def run(seeds: Optional[int] = None, workers: int = 1) -> SuiteReport:
        k = 10 if seeds is None else seeds
        return run_property_suite(family, DEFAULT_FAMILY_SIZES[family], range(k), workers)
    run.__doc__ = f"Full property suite on the {family} family."
    return run


SUITES = {
    "c5": suite_c5,
    "paley17": suite_paley17,
    "sweep_n6": suite_sweep_n6,
    "paths": suite_paths,
    "grt": suite_grt,
    "rrt": suite_rrt,
    "szekely": suite_szekely,
    "lower": suite_lower,
    "analytic": suite_analytic,
    "trend256": suite_trend,
}
SUITES.update({f"family_{f}": _family_suite(f) for f in FAMILIES})
