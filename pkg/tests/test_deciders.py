import pytest
from hypothesis import given, settings

from conftest import c4, sink_loops, uniform4, fib, graphs, sinkless_graphs
from lpa_ibn import Certificate, Graph, cartesian_product
from lpa_ibn.constructions import cycle_graph, cyclic_cayley, line_graph
from lpa_ibn.deciders import (
    COLUMN_SUM_UNIFORM,
    MAXIMAL_SHORTCUT,
    NO_RELATION,
    SINK_PRESENT,
    SPAN_CERTIFICATE,
    bounded_certificate_search,
    column_sum_shortcut,
    decide_gribn,
    decide_ibn,
    exact_certificate,
    ibn_matrices,
    ones_powers,
    sufficient_ibn_maximal,
    verify_certificate,
)
from lpa_ibn.errors import SinkError
from lpa_ibn.monoid import certificate_to_equation, equal


class TestCertificate:
    def test_sorted_and_canonical(self):
        c = Certificate((2, 0, 1), (1, 3, 3, 3))
        assert c.P == (0, 1, 2)
        assert c.canonical() == Certificate((0, 2), (3, 3, 3))
        assert Certificate.from_dict(c.to_dict()) == c

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Certificate((-1,), (0,))


class TestIbn:
    def test_sink_loops(self):
        v = decide_ibn(sink_loops())
        assert (v.has_ibn, v.rank_left, v.rank_right) == (False, 1, 1)
        left, _ = ibn_matrices(sink_loops())
        assert left == [[1, 0], [1, 0]]

    def test_single_loop(self):
        v = decide_ibn(Graph.from_matrix([[1]]))
        assert (v.has_ibn, v.rank_left, v.rank_right) == (True, 0, 1)
        assert v.shortcut == MAXIMAL_SHORTCUT

    def test_fibonacci(self):
        v = decide_ibn(fib())
        assert (v.has_ibn, v.rank_left, v.rank_right) == (False, 2, 2)

    def test_isolated_vertex(self):
        v = decide_ibn(Graph.from_matrix([[0]]))
        assert (v.has_ibn, v.rank_left, v.rank_right) == (True, 0, 1)

    def test_regular_first_reordering(self):
        # sink listed first: the J block must still sit on the regular vertex
        g = Graph.from_matrix([[0, 0], [1, 2]], ["v", "u"])
        assert decide_ibn(g) == decide_ibn(sink_loops())

    @given(graphs(max_vertices=4))
    def test_rank_gap(self, g):
        v = decide_ibn(g)
        assert v.rank_right - v.rank_left in (0, 1)
        assert v.has_ibn == (v.rank_left < v.rank_right)
        if sufficient_ibn_maximal(g):
            assert v.has_ibn


class TestMaximalShortcut:
    def test_examples(self):
        assert sufficient_ibn_maximal(c4())
        assert not sufficient_ibn_maximal(sink_loops())
        for m in (2, 3, 4):
            for n in (2, 3, 4):
                assert sufficient_ibn_maximal(cartesian_product(cycle_graph(m), line_graph(n)))


class TestColumnSums:
    def test_examples(self):
        assert column_sum_shortcut(uniform4()) == 4
        assert column_sum_shortcut(c4()) is None
        assert column_sum_shortcut(cyclic_cayley(4, 2)) == 2
        assert column_sum_shortcut(fib()) is None

    def test_sinks_rejected(self):
        with pytest.raises(SinkError):
            column_sum_shortcut(sink_loops())


class TestExactCertificate:
    def test_fibonacci(self):
        assert exact_certificate(fib()) == Certificate((0, 1), (2,))
        assert ones_powers(fib(), 2) == [(1, 1), (2, 1), (3, 2)]

    def test_uniform4(self):
        assert exact_certificate(uniform4()) == Certificate((0, 0, 0, 0), (1,))

    def test_c4(self):
        assert exact_certificate(c4()) is None

    def test_sinks_rejected(self):
        with pytest.raises(SinkError):
            exact_certificate(sink_loops())

    @settings(max_examples=150)
    @given(sinkless_graphs(max_vertices=4))
    def test_certificates_verify_and_are_canonical(self, g):
        cert = exact_certificate(g)
        if cert is None:
            return
        assert verify_certificate(g, cert)
        assert not set(cert.P) & set(cert.Q)
        assert max(cert.P + cert.Q) <= g.order
        a, b = certificate_to_equation(g, cert)
        assert equal(g, a, b)


class TestBoundedSearch:
    def test_fibonacci(self):
        assert bounded_certificate_search(fib(), 3, 4) == Certificate((0, 1), (2,))

    def test_uniform4(self):
        assert bounded_certificate_search(uniform4(), 2, 6) == Certificate((0, 0, 0, 0), (1,))

    def test_c4(self):
        assert bounded_certificate_search(c4(), 6, 8) is None

    def test_errors(self):
        with pytest.raises(SinkError):
            bounded_certificate_search(sink_loops(), 2, 4)
        with pytest.raises(ValueError):
            bounded_certificate_search(fib(), 0, 4)

    def test_big_entries_fall_back_to_exact_ints(self):
        # column sums 10^6: 1^T A^4 has entries 10^24, beyond int64
        big = Graph.from_matrix([[10**6 - 1, 10**6 - 1], [1, 1]], ["a", "b"])
        assert bounded_certificate_search(big, 4, 3) is None
        # 1^T A^70 = 2^70 (1, ..., 1); the first hit is still 2 * A^0 = A^1
        found = bounded_certificate_search(cyclic_cayley(4, 2), 70, 3)
        assert found == Certificate((0, 0), (1,))
        assert column_sum_shortcut(big) == 10**6
        assert verify_certificate(big, Certificate((1,), (0,) * 10**6))

    @settings(max_examples=60)
    @given(sinkless_graphs(max_vertices=3))
    def test_agrees_with_exact(self, g):
        found = bounded_certificate_search(g, 4, 6)
        exact = exact_certificate(g)
        if found is not None:
            assert verify_certificate(g, found)
            assert exact is not None


class TestVerify:
    def test_examples(self):
        assert verify_certificate(fib(), Certificate((0, 1), (2,)))
        assert not verify_certificate(fib(), Certificate((0,), (1,)))
        assert verify_certificate(uniform4(), Certificate((1,), (0, 0, 0, 0)))

    def test_equal_sizes_never_verify(self):
        assert not verify_certificate(c4(), Certificate((0,), (3,)))

    def test_errors(self):
        with pytest.raises(SinkError):
            verify_certificate(sink_loops(), Certificate((0,), (1, 1)))
        with pytest.raises(ValueError):
            verify_certificate(fib(), Certificate((), (1, 1)))


class TestGrIbn:
    def test_sink_loops(self):
        v = decide_gribn(sink_loops())
        assert v.has_gribn and v.reason == SINK_PRESENT and v.certificate is None

    def test_uniform4(self):
        v = decide_gribn(uniform4())
        assert not v.has_gribn and v.reason == COLUMN_SUM_UNIFORM
        assert v.certificate == Certificate((1,), (0, 0, 0, 0))
        assert v.to_dict() == {
            "hasGrIbn": False,
            "reason": "column-sum-uniform",
            "certificate": {"P": [1], "Q": [0, 0, 0, 0]},
            "columnSum": 4,
        }

    def test_c4(self):
        v = decide_gribn(c4())
        assert v.has_gribn and v.reason == NO_RELATION

    def test_fibonacci(self):
        v = decide_gribn(fib())
        assert not v.has_gribn and v.reason == SPAN_CERTIFICATE
        assert v.certificate == Certificate((0, 1), (2,))

    @settings(max_examples=150)
    @given(graphs(max_vertices=4))
    def test_invariants(self, g):
        v = decide_gribn(g)
        if g.has_sink():
            assert v.reason == SINK_PRESENT and v.has_gribn
        if not v.has_gribn:
            assert v.certificate is not None and verify_certificate(g, v.certificate)
        else:
            assert v.certificate is None
        if decide_ibn(g).has_ibn:
            assert v.has_gribn
        if not g.has_sink():
            c = column_sum_shortcut(g)
            if c is not None:
                assert not v.has_gribn
                assert verify_certificate(g, Certificate((1,), (0,) * c))
