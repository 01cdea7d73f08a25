import pytest
from hypothesis import given
from hypothesis import strategies as st

from marklab.graphs import (
    Graph,
    ParseError,
    all_pairs,
    augment_isolated,
    delete_edge,
    delete_vertex,
    induced_subgraph,
    isomorphic,
    join,
    load_graph_text,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
    parse_edge_list,
    parse_family,
    parse_family_expr,
    relabel,
    render_edge_list,
)


def graphs(max_n=7):
    """Hypothesis strategy for small graphs."""
    return st.integers(0, max_n).flatmap(
        lambda n: st.builds(
            Graph,
            st.just(n),
            st.lists(
                st.sampled_from(all_pairs(n)) if n >= 2 else st.nothing(),
                unique=True,
            ),
        )
    )


class TestGraph:
    def test_basic_accessors(self):
        g = Graph(4, [(0, 1), (1, 2), (1, 3)])
        assert g.n == 4
        assert g.edge_count == 3
        assert g.edges() == [(0, 1), (1, 2), (1, 3)]
        assert g.degree(1) == 3
        assert g.degree(0) == 1
        assert g.neighbors(1) == (0, 2, 3)
        assert g.has_edge(0, 1) and g.has_edge(1, 0)
        assert not g.has_edge(0, 2)
        assert g.max_degree == 3

    def test_empty_graph(self):
        g = Graph(0)
        assert g.n == 0 and g.edges() == [] and g.max_degree == 0

    def test_rejects_bad_edges(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 1), (1, 0)])

    def test_accessors_reject_non_vertices(self):
        g = make_path(3)
        with pytest.raises(ValueError):
            g.degree(3)
        with pytest.raises(ValueError):
            g.degree(True)
        with pytest.raises(ValueError):
            g.neighbors(-1)

    def test_value_semantics(self):
        a = Graph(3, [(0, 1)])
        b = Graph(3, [(0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != Graph(3, [(0, 2)])
        assert a != Graph(4, [(0, 1)])


class TestFamilies:
    def test_complete(self):
        assert make_complete(4).edge_count == 6
        assert make_complete(0).n == 0

    def test_empty(self):
        assert make_empty(3).edges() == []

    def test_cycle(self):
        c = make_cycle(4)
        assert c.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
        with pytest.raises(ValueError):
            make_cycle(2)

    def test_path(self):
        assert make_path(4).edges() == [(0, 1), (1, 2), (2, 3)]
        assert make_path(1).edges() == []

    def test_join(self):
        g = join(make_complete(3), make_empty(2))
        assert g.n == 5
        # clique edges, no edge inside the empty side, all cross edges
        assert g.has_edge(0, 1) and g.has_edge(1, 2)
        assert not g.has_edge(3, 4)
        assert all(g.has_edge(u, v) for u in range(3) for v in (3, 4))
        assert g.edge_count == 3 + 6

    def test_all_pairs(self):
        assert all_pairs(3) == [(0, 1), (0, 2), (1, 2)]
        assert all_pairs(1) == []


class TestSurgery:
    def test_delete_vertex_shifts_labels(self):
        g = make_path(4)  # 0-1-2-3
        h = delete_vertex(g, 1)
        assert h.n == 3
        assert h.edges() == [(1, 2)]  # old 2-3 edge, shifted down

    def test_delete_vertex_range(self):
        with pytest.raises(ValueError):
            delete_vertex(make_path(3), 3)

    def test_delete_edge(self):
        g = delete_edge(make_complete(3), 0, 2)
        assert g.edges() == [(0, 1), (1, 2)]
        with pytest.raises(ValueError):
            delete_edge(g, 0, 2)

    def test_induced_subgraph(self):
        g = make_cycle(5)
        h, remap = induced_subgraph(g, [0, 1, 3])
        assert h.n == 3
        assert remap == {0: 0, 1: 1, 3: 2}
        assert h.edges() == [(0, 1)]

    def test_induced_subgraph_everything(self):
        g = make_cycle(4)
        h, _ = induced_subgraph(g, range(4))
        assert h == g

    def test_augment_isolated(self):
        g = augment_isolated(make_complete(3))
        assert g.n == 4
        assert g.degree(3) == 0
        assert g.edge_count == 3

    def test_relabel(self):
        g = make_path(3)
        h = relabel(g, [2, 1, 0])
        assert h.edges() == [(0, 1), (1, 2)]
        with pytest.raises(ValueError):
            relabel(g, [0, 0, 1])


class TestIsomorphic:
    def test_relabeled_cycle(self):
        g = make_cycle(5)
        assert isomorphic(g, relabel(g, [3, 1, 4, 0, 2]))

    def test_cycle_vs_path(self):
        assert not isomorphic(make_cycle(5), Graph(5, make_path(5).edges()))

    def test_size_mismatch(self):
        assert not isomorphic(make_empty(2), make_empty(3))

    def test_same_degrees_not_isomorphic(self):
        # two triangles vs a six-cycle: all degrees 2
        two = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        assert not isomorphic(two, make_cycle(6))

    def test_too_large(self):
        with pytest.raises(ValueError):
            isomorphic(make_cycle(9), make_cycle(9))


class TestEdgeListFormat:
    def test_parse(self):
        g = parse_edge_list("4\n0 1\n2 3\n")
        assert g == Graph(4, [(0, 1), (2, 3)])

    def test_comments_and_blanks(self):
        g = parse_edge_list("# a graph\n3\n\n# middle\n0 2\n")
        assert g == Graph(3, [(0, 2)])

    def test_inline_semicolons(self):
        assert parse_edge_list("4;0 1;2 3") == Graph(4, [(0, 1), (2, 3)])
        assert parse_edge_list("2;0 1;") == Graph(2, [(0, 1)])

    def test_render_both_shapes(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert render_edge_list(g) == "4\n0 1\n2 3\n"
        assert render_edge_list(g, inline=True) == "4;0 1;2 3"

    @pytest.mark.parametrize(
        "text,line,col,fragment",
        [
            ("", 1, 1, "missing header"),
            ("x", 1, 1, "expected an integer"),
            ("3\n0 1 2", 2, 1, "exactly two endpoints"),
            ("3\n0 1\n0 1", 3, 1, "duplicate edge"),
            ("3\n1 0", 2, 1, "u < v"),
            ("3\n0 5", 2, 3, "out of range"),
        ],
    )
    def test_errors_carry_position(self, text, line, col, fragment):
        with pytest.raises(ParseError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line
        assert exc.value.col == col
        assert fragment in str(exc.value)
        assert str(exc.value).startswith(f"line {line}, col {col}:")

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_edge_list(render_edge_list(g)) == g
        assert parse_edge_list(render_edge_list(g, inline=True)) == g


class TestFamilyExpressions:
    def test_atoms(self):
        assert parse_family_expr("K3") == make_complete(3)
        assert parse_family_expr("E2") == make_empty(2)
        assert parse_family_expr("C5") == make_cycle(5)
        assert parse_family_expr("P4") == make_path(4)

    def test_nested(self):
        got = parse_family_expr("minus_edge(join(K3,E2),0,3)")
        assert got == delete_edge(join(make_complete(3), make_empty(2)), 0, 3)
        got = parse_family_expr("delete(join(K3,E2),0)")
        assert got == delete_vertex(join(make_complete(3), make_empty(2)), 0)

    def test_whitespace_tolerated(self):
        ast = parse_family("  delete( join(K3, E2), 0 )")
        assert ast.render() == "delete(join(K3,E2),0)"
        assert ast.build() == parse_family_expr("delete(join(K3,E2),0)")

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("Q3", "unknown family name"),
            ("K3 junk", "trailing input"),
            ("join(K3)", "expected ','"),
            ("join(K3,E2", "expected ')'"),
            ("", "expected"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(ParseError) as exc:
            parse_family(text)
        assert fragment in str(exc.value)

    def test_semantic_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_family_expr("C2")
        with pytest.raises(ValueError):
            parse_family_expr("delete(K3,7)")


class TestLoadGraphText:
    def test_sniffs_edge_list(self):
        assert load_graph_text("3\n0 1\n") == Graph(3, [(0, 1)])

    def test_sniffs_family(self):
        assert load_graph_text("join(K2,E2)") == join(make_complete(2), make_empty(2))

    def test_explicit_format(self):
        assert load_graph_text("K3", format="family") == make_complete(3)
        with pytest.raises(ParseError):
            load_graph_text("K3", format="edgelist")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            load_graph_text("K3", format="dot")
