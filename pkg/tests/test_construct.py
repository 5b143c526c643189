import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthocover import builders
from orthocover.builders import PartiteSpec
from orthocover.construct import (
    ConstructionFailed,
    availability,
    degenerate_swap_colouring,
    double_star_colouring,
    hall_covering,
    swap_precondition_holds,
)
from orthocover.errors import OrthoCoverError, PreconditionError
from orthocover.graph import (
    Partition,
    are_orthogonal,
    is_independent_covering,
    is_valid_orthogonal_colouring,
    lower_bound,
    stats,
)
from orthocover.search import find_orthogonal_colouring, ochi


class TestHall:
    @pytest.mark.parametrize("parts, k", [(2, 4), (3, 6), (1, 5), (6, 12)])
    def test_valid_covering_and_bijection_per_class(self, parts, k):
        for seed in range(5):
            g, p = builders.random_nkk(PartiteSpec(parts, k, k, seed))
            c, cov = hall_covering(g, p)
            assert is_independent_covering(g, p, cov)
            assert is_valid_orthogonal_colouring(g, c)
            for cls in p.classes:
                assert sorted(c.pairs[v][1] for v in cls) == list(range(k))

    def test_single_class_uses_positions(self):
        g, p = builders.random_nkk(PartiteSpec(1, 4, 4, 0))
        c, _ = hall_covering(g, p)
        assert [c.pairs[v] for v in p.classes[0]] == [(0, j) for j in range(4)]

    def test_too_many_classes(self):
        g, p = builders.random_nkk(PartiteSpec(3, 4, 4, 0))
        with pytest.raises(PreconditionError):
            hall_covering(g, p)

    def test_not_perfect_matchings(self):
        g, p = builders.random_nkk(PartiteSpec(2, 4, 3, 0))
        with pytest.raises(PreconditionError):
            hall_covering(g, p)

    def test_availability_lower_bound(self):
        g, p = builders.random_nkk(PartiteSpec(2, 6, 6, 3))
        f2 = {v: j for j, v in enumerate(p.classes[0])}
        sets = availability(g, p.classes[1], f2, 6)
        assert all(len(s) == 5 for s in sets)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 12), st.integers(0, 2**32))
    def test_property(self, k, seed):
        g, p = builders.random_nkk(PartiteSpec((k + 1) // 2, k, k, seed))
        _, cov = hall_covering(g, p)
        assert is_independent_covering(g, p, cov)


class TestDoubleStar:
    def test_m2(self):
        c = double_star_colouring(2)
        assert c.num_colours == 2 and c.pairs == ((0, 0), (1, 1))

    def test_m14(self):
        c = double_star_colouring(14)
        assert c.num_colours == 4
        assert is_valid_orthogonal_colouring(builders.double_star(14), c)

    def test_m8_needs_more_colours(self):
        with pytest.raises(PreconditionError, match="N\\+1"):
            double_star_colouring(8)
        assert ochi(builders.double_star(8))[0] == 4

    @pytest.mark.parametrize("m", [0, 5, -4])
    def test_bad_m(self, m):
        with pytest.raises(OrthoCoverError):
            double_star_colouring(m)

    @pytest.mark.parametrize("m", [m for m in range(2, 61, 2) if m < lower_bound(m) ** 2 - 1])
    def test_valid_and_avoids_root_pairs_on_leaves(self, m):
        g = builders.double_star(m)
        c = double_star_colouring(m)
        assert c.num_colours == lower_bound(m)
        assert is_valid_orthogonal_colouring(g, c)
        for v in range(2, m):
            assert c.pairs[v] not in ((0, 1), (1, 0))

    @pytest.mark.parametrize("m", [m for m in range(2, 13, 2) if m < lower_bound(m) ** 2 - 1])
    def test_exact_search_agrees(self, m):
        assert find_orthogonal_colouring(builders.double_star(m), lower_bound(m)).found


class TestDegenerateSwap:
    def test_empty_graph_no_swaps(self):
        trace = []
        c = degenerate_swap_colouring(builders.empty_graph(100), check_invariants=True, trace=trace)
        assert c.num_colours == 10 and trace == []
        assert are_orthogonal(c)

    def test_zero_vertices(self):
        assert degenerate_swap_colouring(builders.empty_graph(0)).pairs == ()

    def test_tree_100_cap_3(self):
        for seed in range(5):
            g = builders.random_tree(100, 3, seed)
            c = degenerate_swap_colouring(g, check_invariants=True)
            assert c.num_colours == 10 and is_valid_orthogonal_colouring(g, c)

    def test_two_degenerate_400(self):
        g = builders.random_d_degenerate(400, 2, 7, 11)
        assert swap_precondition_holds(g.max_degree, stats(g).degeneracy, 400)
        trace = []
        c = degenerate_swap_colouring(g, check_invariants=True, trace=trace)
        assert c.num_colours == 20 and is_valid_orthogonal_colouring(g, c)
        for step in trace:
            assert step.chosen == min(step.candidates)
            assert step.vertex in step.conflict_set
            assert step.candidates.isdisjoint(step.conflict_set | step.blocked)

    def test_precondition_is_exact(self):
        assert not swap_precondition_holds(3, 1, 81)
        assert swap_precondition_holds(3, 1, 82)

    def test_refuses_without_force(self):
        with pytest.raises(PreconditionError):
            degenerate_swap_colouring(builders.path_graph(9))

    def test_force_reports_outcome_honestly(self):
        g = builders.subdivided_double_star(3)
        with pytest.raises(ConstructionFailed):
            degenerate_swap_colouring(g, force=True)
        c = degenerate_swap_colouring(builders.path_graph(16), force=True)
        assert is_valid_orthogonal_colouring(builders.path_graph(16), c)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(82, 200), st.integers(0, 2**32))
    def test_trees_in_bound(self, n, seed):
        g = builders.random_tree(n, builders.max_degree_for_bound(n, 1), seed)
        c = degenerate_swap_colouring(g, check_invariants=True)
        assert c.num_colours == lower_bound(n) and is_valid_orthogonal_colouring(g, c)


def test_rejects_non_spanning_partition():
    g = builders.empty_graph(4)
    with pytest.raises(OrthoCoverError):
        hall_covering(g, Partition(((0, 1),)))
