import pytest

from invlat.bruhat import (
    bruhat_graph,
    bruhat_leq,
    bubbles,
    directed_distance,
    distances_from,
    ideal_size_table,
    interval,
    interval_size,
    rank_matrix,
    right_hull,
    two_sided_weak_covers,
    weak_leq_left,
    weak_leq_right,
)
from invlat.patterns import is_chromobruhatic
from invlat.permutation import Permutation, parse_permutation
from util import all_perms, brute_permanent, full_graph_distance

W4132 = Permutation((4, 1, 3, 2))
W4231 = Permutation((4, 2, 3, 1))


class TestRankMatrix:
    def test_invariants(self):
        for w in all_perms(4):
            r = rank_matrix(w)
            assert r[3][0] == 4
            for i in range(4):
                for j in range(4):
                    if i > 0:
                        assert r[i][j] >= r[i - 1][j]
                    if j > 0:
                        assert r[i][j] <= r[i][j - 1]

    def test_counts(self):
        r = rank_matrix(W4132)
        assert r[1][1] == 1  # rooks weakly NE of (2,2): just the 4
        assert r[1][2] == 1


class TestLeqBackends:
    def test_identity_is_minimum(self):
        e = Permutation.identity(5)
        for w in all_perms(5):
            assert bruhat_leq(e, w)

    def test_1324_below_4231(self):
        assert bruhat_leq(Permutation((1, 3, 2, 4)), W4231)

    def test_size_mismatch(self):
        with pytest.raises(ValueError, match="size mismatch"):
            bruhat_leq(Permutation.identity(3), W4132)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            bruhat_leq(W4132, W4132, method="telepathy")

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_rank_and_bubble_agree_everywhere(self, n):
        for w in all_perms(n):
            for u in all_perms(n):
                assert bruhat_leq(u, w, "rank") == bruhat_leq(u, w, "bubble")

    def test_hull_agrees_for_avoiding(self):
        for w in all_perms(4):
            if not is_chromobruhatic(w):
                continue
            for u in all_perms(4):
                assert bruhat_leq(u, w, "hull") == bruhat_leq(u, w, "rank")

    def test_hull_rejects_non_avoiding(self):
        with pytest.raises(ValueError, match="avoid"):
            bruhat_leq(Permutation.identity(4), W4231, method="hull")

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_order_properties(self, n):
        for w in all_perms(n):
            assert bruhat_leq(w, w)
        # u <= w forces l(u) <= l(w), equality only at u = w.
        for w in all_perms(n):
            for u in interval(w):
                assert u.length() <= w.length()
                assert u == w or u.length() < w.length()


class TestBubbles:
    def test_4132(self):
        assert bubbles(W4132) == frozenset({(2, 2), (2, 3)})

    def test_identity_criterion_still_exact(self):
        # The identity has a bubble at every strictly upper square; the
        # criterion there pins the interval to the identity alone.
        e = Permutation.identity(4)
        assert bubbles(e) == frozenset(
            (i, j) for i in range(1, 5) for j in range(1, 5) if i < j
        )
        assert [u for u in all_perms(4) if bruhat_leq(u, e, "bubble")] == [e]


class TestRightHull:
    def test_identity_is_diagonal(self):
        hull = right_hull(Permutation.identity(4))
        assert hull.squares() == tuple((i, i) for i in range(1, 5))

    def test_35124_mask(self):
        hull = right_hull(parse_permutation("35124"))
        assert hull.to_lines() == ("###..", "#####", "#####", ".####", "...##")

    def test_rooks_always_inside(self):
        for w in all_perms(5):
            hull = right_hull(w)
            assert all(hull.contains(i, w(i)) for i in range(1, 6))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_rotation_symmetry(self, n):
        for w in all_perms(n):
            hull = right_hull(w)
            rhull = right_hull(w.rotate())
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    assert hull.contains(i, j) == rhull.contains(
                        n + 1 - i, n + 1 - j
                    )


class TestInterval:
    def test_sizes(self):
        assert interval_size(Permutation.identity(4)) == 1
        assert interval_size(W4132) == 12

    def test_lex_order_and_membership(self):
        got = interval(W4132)
        assert got == sorted(got)
        assert len(got) == 12
        assert all(u(1) == 1 or u(2) == 1 for u in got)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_backends_agree(self, n):
        for w in all_perms(n):
            by_filter = interval(w, "filter")
            assert interval(w, "bfs") == by_filter
            if is_chromobruhatic(w):
                assert interval(w, "hull") == by_filter
                assert interval_size(w, "permanent") == len(by_filter)
            assert interval_size(w, "filter") == len(by_filter)

    def test_permanent_is_hull_permanent(self):
        for w in all_perms(4):
            if is_chromobruhatic(w):
                rows = right_hull(w).rows
                assert interval_size(w) == brute_permanent(rows, 4)

    def test_hull_path_rejects_non_avoiding(self):
        with pytest.raises(ValueError):
            interval(W4231, "hull")
        with pytest.raises(ValueError):
            interval_size(W4231, "permanent")

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_ideal_size_table(self, n):
        table = ideal_size_table(n)
        for w in all_perms(n):
            assert table[w.word] == interval_size(w, "filter")

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_br_symmetry_invariance(self, n):
        table = ideal_size_table(n)
        for w in all_perms(n):
            br = table[w.word]
            assert table[w.inverse().word] == br
            assert table[w.rotate().word] == br


class TestDirectedDistance:
    def test_zero_at_top(self):
        assert directed_distance(W4132, W4132) == 0

    def test_4132_distance_counts(self):
        dist = distances_from(W4132)
        counts = {}
        for d in dist.values():
            counts[d] = counts.get(d, 0) + 1
        assert counts == {0: 1, 1: 4, 2: 5, 3: 2}

    def test_witness_gap_in_4231(self):
        u = Permutation((1, 3, 2, 4))
        assert u * W4231.inverse() == Permutation.from_cycles(4, [(1, 4), (2, 3)])
        assert (u * W4231.inverse()).absolute_length() == 2
        assert directed_distance(u, W4231) == 4

    def test_not_below_raises(self):
        with pytest.raises(ValueError, match="not below"):
            directed_distance(Permutation((2, 1, 3, 4)), Permutation((1, 2, 4, 3)))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_unrestricted_bfs(self, n):
        # The interval-restricted walk must agree with a search over the
        # whole group; any path into w descends through [e, w] anyway.
        for w in all_perms(n):
            dist = distances_from(w)
            for u in all_perms(n):
                full = full_graph_distance(u, w)
                assert dist.get(u.word) == full

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_parity_and_lower_bound(self, n):
        for w in all_perms(n):
            winv = w.inverse()
            for word, d in distances_from(w).items():
                u = Permutation(word)
                assert (d - (w.length() - u.length())) % 2 == 0
                assert d >= (u * winv).absolute_length()


class TestBruhatGraph:
    @pytest.mark.parametrize("text", ["4132", "4231", "3412"])
    def test_edge_invariants(self, text):
        w = parse_permutation(text)
        graph = bruhat_graph(w)
        assert set(graph.vertices) == set(interval(w))
        for x, y, t in graph.edges:
            assert y == Permutation.transposition(w.n, t.i, t.j) * x
            diff = y.length() - x.length()
            assert diff > 0 and diff % 2 == 1


class TestWeakOrders:
    def test_identity_below_everything(self):
        e = Permutation.identity(5)
        for w in all_perms(5):
            assert weak_leq_right(e, w)
            assert weak_leq_left(e, w)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_weak_implies_bruhat(self, n):
        for w in all_perms(n):
            for u in all_perms(n):
                if weak_leq_right(u, w):
                    assert bruhat_leq(u, w)

    def test_two_sided_covers(self):
        assert two_sided_weak_covers(Permutation.identity(4)) == set()
        for w in all_perms(4):
            for u in two_sided_weak_covers(w):
                assert u.length() == w.length() - 1
                assert weak_leq_right(u, w) or weak_leq_left(u, w)
        # Every element strictly below in a weak order sits above some cover.
        for w in all_perms(4):
            if w.is_identity():
                continue
            assert two_sided_weak_covers(w)
