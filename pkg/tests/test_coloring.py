import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoclique.coloring import (
    BLUE,
    RED,
    ColoringFormatError,
    TwoColoring,
    clique_union_coloring,
    cycle_coloring,
    from_pair_colors,
    join_colorings,
    monochromatic,
    paley_coloring,
    quadratic_residues,
    random_coloring,
    read_coloring,
    relabel,
    swap_colors,
    write_coloring,
)


def colorings(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.sampled_from([RED, BLUE]), min_size=n * (n - 1) // 2,
                           max_size=n * (n - 1) // 2).map(lambda cs: from_pair_colors(n, cs)))


def test_color_complement():
    assert RED.complement is BLUE and BLUE.complement is RED


def test_random_single_vertex_has_no_pairs():
    g = random_coloring(1, 123)
    assert list(g.pairs()) == []


def test_random_two_vertices_depends_only_on_seed():
    for seed in range(10):
        assert random_coloring(2, seed).color(0, 1) is random_coloring(2, seed).color(0, 1)


def test_random_is_deterministic():
    assert random_coloring(40, 7) == random_coloring(40, 7)
    assert random_coloring(40, 7) != random_coloring(40, 8)


def test_random_rejects_empty():
    with pytest.raises(ValueError):
        random_coloring(0, 1)


def test_paley_5_is_a_cycle():
    g = paley_coloring(5)
    reds = {(i, j) for i, j, c in g.pairs() if c is RED}
    assert reds == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}


def test_paley_17_edge_counts():
    g = paley_coloring(17)
    assert g.count_pairs(RED) == 68 and g.count_pairs(BLUE) == 68


@pytest.mark.parametrize("q", [5, 13, 17, 29])
def test_paley_degree(q):
    g = paley_coloring(q)
    assert all(nb.bit_count() == (q - 1) // 2 for nb in g.red)


@pytest.mark.parametrize("q", [15, 7, 3, 1])
def test_paley_rejects(q):
    with pytest.raises(ValueError):
        paley_coloring(q)


def test_paley_17_self_complementary():
    # multiplying by a non-residue maps red differences to blue ones
    q = 17
    c = next(x for x in range(2, q) if x not in quadratic_residues(q))
    g = paley_coloring(q)
    assert relabel(g, [c * v % q for v in range(q)]) == swap_colors(g)


@pytest.mark.parametrize("n,red,blue", [(5, 5, 5), (3, 3, 0), (6, 6, 9)])
def test_cycle_counts(n, red, blue):
    g = cycle_coloring(n)
    assert (g.count_pairs(RED), g.count_pairs(BLUE)) == (red, blue)


def test_cycle_rejects_small():
    with pytest.raises(ValueError):
        cycle_coloring(2)


@pytest.mark.parametrize("t,s,red,blue", [(1, 4, 6, 0), (4, 1, 0, 6), (3, 3, 9, 27)])
def test_clique_union_counts(t, s, red, blue):
    g = clique_union_coloring(t, s)
    assert g.n == t * s
    assert (g.count_pairs(RED), g.count_pairs(BLUE)) == (red, blue)


@pytest.mark.parametrize("t,s", [(0, 3), (3, 0)])
def test_clique_union_rejects(t, s):
    with pytest.raises(ValueError):
        clique_union_coloring(t, s)


def test_join_examples():
    k1 = monochromatic(1)
    j = join_colorings(k1, k1, RED)
    assert j.n == 2 and j.color(0, 1) is RED
    j = join_colorings(cycle_coloring(5), cycle_coloring(5), BLUE)
    assert (j.n, j.count_pairs(RED), j.count_pairs(BLUE)) == (10, 10, 35)
    g = random_coloring(6, 2)
    assert join_colorings(g, TwoColoring(0, ()), RED) == g


def test_join_reindexes_second_graph():
    j = join_colorings(cycle_coloring(3), clique_union_coloring(2, 1), RED)
    assert j.color(3, 4) is BLUE
    assert j.color(0, 3) is RED


def test_swap_examples():
    assert swap_colors(cycle_coloring(3)) == monochromatic(3, BLUE)


def test_color_rejects_self_pair():
    with pytest.raises(ValueError):
        cycle_coloring(4).color(2, 2)


def test_constructor_rejects_asymmetry():
    with pytest.raises(ValueError):
        TwoColoring(3, (0b010, 0, 0))


def test_read_example():
    g = read_coloring("3\nRR\nB\n")
    assert g.color(0, 1) is RED and g.color(0, 2) is RED and g.color(1, 2) is BLUE


def test_read_without_trailing_newline_and_comments():
    assert read_coloring("# a comment\n3\n# another\nRR\nB") == read_coloring("3\nRR\nB\n")


@pytest.mark.parametrize("text,line", [
    ("x\nRR\nB\n", 1),
    ("3\nRRR\nB\n", 2),
    ("3\nRR\nBB\n", 3),
    ("3\nRQ\nB\n", 2),
    ("0\n", 1),
])
def test_read_errors_name_line(text, line):
    with pytest.raises(ColoringFormatError) as exc:
        read_coloring(text)
    assert exc.value.lineno == line
    assert f"line {line}" in str(exc.value)


def test_read_wrong_row_count():
    with pytest.raises(ColoringFormatError):
        read_coloring("4\nRRR\nBB\n")


@pytest.mark.parametrize("g", [
    random_coloring(1, 0), random_coloring(9, 4), paley_coloring(13), cycle_coloring(7),
    clique_union_coloring(3, 2), join_colorings(cycle_coloring(5), monochromatic(2), BLUE),
])
def test_round_trip_generators(g):
    assert read_coloring(write_coloring(g)) == g
    assert write_coloring(read_coloring(write_coloring(g))) == write_coloring(g)


def _is_valid(g):
    for i, j in itertools.permutations(range(g.n), 2):
        if g.color(i, j) is not g.color(j, i):
            return False
    return True


@given(colorings())
@settings(max_examples=60, deadline=None)
def test_properties_of_arbitrary_colorings(g):
    assert _is_valid(g)
    assert swap_colors(swap_colors(g)) == g
    assert read_coloring(write_coloring(g)) == g
    assert g.count_pairs(RED) + g.count_pairs(BLUE) == g.n * (g.n - 1) // 2
