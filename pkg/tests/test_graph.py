import random
from fractions import Fraction

import pytest

from graphs import complete, cycle, path, star
from moqc import (
    Graph, GraphParseError, InvalidInputError, NoCandidateError, UndefinedDensityError,
    density, induced_edge_count, load_graph, max_degree_extension_vertex, min_degree_vertex,
    parse_graph,
)


def test_edge_list_simplification():
    G = parse_graph("1 2\n2 1\n2 2\n2 3", "edge-list")
    assert (G.n, G.m) == (3, 2)
    assert G.edges == ((0, 1), (1, 2))
    assert G.labels == (1, 2, 3)


def test_edge_list_first_appearance_order():
    G = parse_graph("# comment\n10 5\n5 7\n", "edge-list")
    assert G.labels == (10, 5, 7)
    assert G.edges == ((0, 1), (1, 2))


def test_dimacs_c4():
    G = parse_graph("c demo\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n", "dimacs")
    assert (G.n, G.m) == (4, 4)
    assert G.degrees == (2, 2, 2, 2)


def test_matrix_market_c4():
    text = "%%MatrixMarket matrix coordinate pattern symmetric\n% c4\n4 4 4\n2 1\n3 2\n4 3\n4 1\n"
    G = parse_graph(text, "matrix-market")
    assert (G.n, G.m) == (4, 4)


def test_matrix_market_general_with_values_and_loops():
    text = "%%MatrixMarket matrix coordinate real general\n3 3 5\n1 2 0.5\n2 1 1.0\n2 2 3\n3 1 2\n1 3 9\n"
    G = parse_graph(text, "matrix-market")
    assert G.edges == ((0, 1), (0, 2))


def test_isolated_vertices_kept_in_dimacs():
    G = parse_graph("p edge 5 1\ne 1 2\n", "dimacs")
    assert (G.n, G.m) == (5, 1)


@pytest.mark.parametrize("fmt,text,line", [
    ("edge-list", "1 2\n3\n", 2),
    ("edge-list", "1 x\n", 1),
    ("dimacs", "e 1 2\n", 1),
    ("dimacs", "p edge 3 1\ne 1 4\n", 2),
    ("dimacs", "p edge 3 1\nq 1 2\n", 2),
    ("matrix-market", "4 4 4\n", 1),
])
def test_parse_errors_carry_line_numbers(fmt, text, line):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text, fmt)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_empty_graph_rejected():
    with pytest.raises(InvalidInputError):
        parse_graph("# nothing\n", "edge-list")
    with pytest.raises(InvalidInputError):
        parse_graph("p edge 0 0\n", "dimacs")


def test_unknown_format():
    with pytest.raises(InvalidInputError):
        parse_graph("1 2", "gml")


def test_load_graph_infers_format(tmp_path):
    p = tmp_path / "c4.mtx"
    p.write_text("%%MatrixMarket matrix coordinate pattern symmetric\n4 4 4\n2 1\n3 2\n4 3\n4 1\n")
    assert load_graph(p).m == 4
    q = tmp_path / "c4.col"
    q.write_text("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    assert load_graph(q).m == 4
    r = tmp_path / "c4.txt"
    r.write_text("0 1\n1 2\n2 3\n3 0\n")
    assert load_graph(r, "edge-list").m == 4


def test_graph_invariants():
    G = Graph(5, [(0, 1), (1, 0), (2, 2), (3, 4), (1, 3)])
    assert sum(G.degrees) == 2 * G.m == 2 * len(G.edges)
    for u in range(G.n):
        assert u not in G.neighbors[u]
        for v in G.neighbors[u]:
            assert u in G.neighbors[v]


def test_graph_rejects_out_of_range_edge():
    with pytest.raises(InvalidInputError):
        Graph(3, [(0, 3)])


def test_induced_edge_count_examples():
    C4 = cycle(4)
    assert induced_edge_count(C4, range(4)) == 4
    assert induced_edge_count(C4, {0, 1, 2}) == 2
    assert induced_edge_count(C4, {3}) == 0
    with pytest.raises(InvalidInputError):
        induced_edge_count(C4, {0, 9})


def test_density_examples():
    C4 = cycle(4)
    assert density(C4, range(4)) == Fraction(2, 3)
    assert density(C4, {0, 1, 2}) == Fraction(2, 3)
    assert density(complete(5), range(5)) == 1
    with pytest.raises(UndefinedDensityError):
        density(C4, {0})


def test_min_degree_vertex_examples():
    assert min_degree_vertex(path(3), {0, 1, 2}) == 0
    assert min_degree_vertex(cycle(4), range(4)) == 0
    assert min_degree_vertex(star(3), range(4)) == 1
    with pytest.raises(InvalidInputError):
        min_degree_vertex(cycle(4), set())


def test_min_degree_neighbor_sum_tiebreak():
    # 0 and 5 are both leaves; 5 hangs off a low-degree vertex
    G = Graph(6, [(0, 1), (1, 2), (1, 3), (1, 4), (4, 5)])
    assert min_degree_vertex(G, range(6)) == 5


def test_max_degree_extension_examples():
    # triangle a,b,c = 0,1,2 with pendant d = 3 attached to a
    G = Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    assert max_degree_extension_vertex(G, {1, 2}) == 0
    assert max_degree_extension_vertex(cycle(4), {0}) == 1
    assert max_degree_extension_vertex(complete(4), {1, 3}) == 0
    with pytest.raises(NoCandidateError):
        max_degree_extension_vertex(cycle(4), range(4))


def test_induced_edge_count_two_ways():
    rng = random.Random(3)
    for _ in range(1000):
        n = rng.randint(1, 14)
        p = rng.random()
        G = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        S = {v for v in range(n) if rng.random() < 0.5}
        scan = sum(1 for u, v in G.edges if u in S and v in S)
        assert induced_edge_count(G, S) == scan
