from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpa_ibn.constructions import (
    cayley_graph,
    conjugacy_classes,
    cycle_graph,
    cyclic_cayley,
    cyclic_group,
    direct_product,
    family,
    format_ramification,
    generated_subgroup,
    group_from_table,
    group_to_dict,
    hopf_graph,
    line_graph,
    load_group,
    parse_ramification,
    ramification_weight,
    symmetric_group,
)
from lpa_ibn.errors import GroupAxiomError, NotGeneratingError, ParseError, SemanticError
from lpa_ibn.graph import classify_vertices

S3 = symmetric_group(3)
SMALL_GROUPS = [cyclic_group(1), cyclic_group(4), cyclic_group(5), S3,
                direct_product(cyclic_group(2), cyclic_group(2))]


class TestGroups:
    def test_z4(self, data_dir):
        g = load_group(data_dir / "z4.json")
        assert g.order == 4 and g.identity == 0
        assert g.inverse == (0, 3, 2, 1)

    def test_s3(self, data_dir):
        g = load_group(data_dir / "s3.json")
        assert g == S3
        assert g.names == ("id", "(12)", "(13)", "(23)", "(123)", "(132)")
        assert g.mul(g.index("(12)"), g.index("(12)")) == g.identity
        # non-abelian
        a, b = g.index("(12)"), g.index("(13)")
        assert g.mul(a, b) != g.mul(b, a)

    @pytest.mark.parametrize(
        "table",
        [
            [[0, 1], [0, 1]],  # repeated row
            [[0, 1, 2], [1, 0, 2], [2, 2, 0]],
            [[1, 0], [0, 2]],
            [[0, 1], [1]],
        ],
    )
    def test_rejected(self, table):
        with pytest.raises(GroupAxiomError):
            group_from_table([str(i) for i in range(len(table))], table)

    def test_no_identity(self):
        # a Latin square without an identity: x * y = x - y mod 3
        with pytest.raises(GroupAxiomError, match="identity"):
            group_from_table("abc", [[(i - j) % 3 for j in range(3)] for i in range(3)])

    def test_associativity(self):
        # Latin square with identity 0 that is not associative (order 5 loop)
        t = [[0, 1, 2, 3, 4],
             [1, 0, 3, 4, 2],
             [2, 4, 0, 1, 3],
             [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
        with pytest.raises(GroupAxiomError, match="associativity"):
            group_from_table("abcde", t)

    def test_round_trip(self):
        for g in SMALL_GROUPS:
            d = group_to_dict(g)
            assert group_from_table(d["elements"], d["table"]) == g

    def test_bad_file(self, tmp_path):
        p = tmp_path / "g.json"
        p.write_text('{"elements": ["a"]}')
        with pytest.raises(ParseError):
            load_group(p)


class TestConjugacy:
    def test_s3(self):
        classes = conjugacy_classes(S3)
        assert [len(c) for c in classes] == [1, 3, 2]
        assert [[S3.names[i] for i in c] for c in classes] == [
            ["id"], ["(12)", "(13)", "(23)"], ["(123)", "(132)"]]

    def test_abelian(self):
        assert conjugacy_classes(cyclic_group(4)) == [[0], [1], [2], [3]]
        assert conjugacy_classes(cyclic_group(1)) == [[0]]

    @pytest.mark.parametrize("g", SMALL_GROUPS + [symmetric_group(4)])
    def test_class_sizes(self, g):
        sizes = [len(c) for c in conjugacy_classes(g)]
        assert sum(sizes) == g.order
        assert all(g.order % s == 0 for s in sizes)


class TestCayley:
    def test_z4(self):
        z4 = cyclic_group(4)
        assert cayley_graph(z4, [1]).adjacency == cycle_graph(4).adjacency
        assert cayley_graph(z4, [1, 2]).adjacency == cyclic_cayley(4, 2).adjacency
        assert cayley_graph(z4, [1, 0]).adjacency == cyclic_cayley(4, 0).adjacency

    def test_errors(self):
        z4 = cyclic_group(4)
        with pytest.raises(NotGeneratingError):
            cayley_graph(z4, [2])
        with pytest.raises(NotGeneratingError):
            cayley_graph(z4, [])
        with pytest.raises(SemanticError):
            cayley_graph(z4, [7])

    @pytest.mark.parametrize("g", SMALL_GROUPS)
    def test_regularity(self, g):
        for k in (1, 2, 3):
            for gens in combinations(range(g.order), k):
                if len(generated_subgroup(g, gens)) != g.order:
                    continue
                e = cayley_graph(g, gens)
                assert all(e.out_degree(i) == k for i in range(g.order))
                assert e.column_sums() == (k,) * g.order


class TestCyclicCayley:
    def test_examples(self):
        c42 = cyclic_cayley(4, 2)
        assert all(c42.out_degree(i) == 2 for i in range(4))
        assert c42.column_sums() == (2, 2, 2, 2)
        c40 = cyclic_cayley(4, 0)
        assert all(c40.adjacency[i][i] == 1 for i in range(4))
        c41 = cyclic_cayley(4, 1)
        assert c41.adjacency[0] == (0, 2, 0, 0)
        assert c41.vertices == ("v1", "v2", "v3", "v4")

    @pytest.mark.parametrize("n,j", [(2, 0), (4, 4), (4, -1)])
    def test_errors(self, n, j):
        with pytest.raises(SemanticError):
            cyclic_cayley(n, j)

    @given(st.integers(3, 9), st.data())
    def test_edge_count(self, n, data):
        j = data.draw(st.integers(0, n - 1))
        assert cyclic_cayley(n, j).edge_count() == 2 * n


class TestHopf:
    def test_even_class(self):
        e = hopf_graph(S3, parse_ramification("(123):1", S3))
        assert e.edge_count() == 12
        even = {S3.index(x) for x in ("id", "(123)", "(132)")}
        for x in range(6):
            targets = {y for y in range(6) if e.adjacency[x][y]}
            same = even if x in even else set(range(6)) - even
            assert targets == same - {x}

    def test_transposition_class(self):
        e = hopf_graph(S3, parse_ramification("(12):1", S3))
        assert e.edge_count() == 18
        even = {S3.index(x) for x in ("id", "(123)", "(132)")}
        for x in range(6):
            for y in range(6):
                if e.adjacency[x][y]:
                    assert (x in even) != (y in even)

    def test_zero(self):
        e = hopf_graph(S3, {})
        assert e.edge_count() == 0
        assert classify_vertices(e).sinks == set(range(6))
        assert hopf_graph(S3, {0: 0, 1: 0}).edge_count() == 0

    def test_ramification_text(self):
        # any member of a class addresses it; keys become representatives
        assert parse_ramification("(132):2, (23):1", S3) == {4: 2, 1: 1}
        assert format_ramification(S3, {4: 2, 1: 1}) == "(12):1,(123):2"
        assert parse_ramification("", S3) == {}
        with pytest.raises(SemanticError):
            parse_ramification("(123):1,(132):1", S3)
        with pytest.raises(ParseError):
            parse_ramification("(123)", S3)
        with pytest.raises(SemanticError):
            parse_ramification("(1234):1", S3)
        with pytest.raises(SemanticError):
            parse_ramification("(12):-1", S3)

    @settings(max_examples=60)
    @given(st.sampled_from(SMALL_GROUPS), st.data())
    def test_degree_identity(self, g, data):
        reps = [c[0] for c in conjugacy_classes(g)]
        ram = {r: data.draw(st.integers(0, 2)) for r in reps}
        e = hopf_graph(g, ram)
        w = ramification_weight(g, ram)
        assert all(e.out_degree(i) == w for i in range(g.order))
        assert e.column_sums() == (w,) * g.order


class TestFamilies:
    def test_line(self):
        g = family("line", 3)
        assert g == line_graph(3)
        c = classify_vertices(g)
        assert c.sources == {0} and c.sinks == {2}

    def test_cycle(self):
        assert family("cycle", 1).adjacency == ((1,),)
        assert family("cycle", 4).adjacency == cycle_graph(4).adjacency

    def test_errors(self):
        for bad in (("line", 0), ("cycle", 0), ("star", 3)):
            with pytest.raises(SemanticError):
                family(*bad)
