import pytest

from conftest import all_tableaux, all_words, two_column
from tableaux import (
    InvalidTableauError,
    Tableau,
    Verdict,
    Word,
    chain_leq,
    chain_poset,
    chain_profile,
    compare,
    cover_of,
    duflo_poset,
    hasse_reduce,
    inversion_set,
    make_tableau,
    project_tableau,
    relabel_tableau,
    root_position_set,
    subspace_leq,
    tau_tableau,
    weak_leq,
)
from tableaux.errors import LimitError
from tableaux.orders import duflo_base_by_scan
from tableaux.rsjdt import insert


def poset_pairs(poset):
    for i, t in enumerate(poset.nodes):
        for j, s in enumerate(poset.nodes):
            yield t, s, bool(poset.leq_rows[i] >> j & 1)


class TestChainProfile:
    def test_full_window_is_shape(self):
        t = make_tableau([(1, 2, 5), (3, 4)])
        assert chain_profile(t)[(1, 5)] == (3, 2)

    def test_adjacent_windows_are_dominoes(self):
        t = make_tableau([(1, 2, 5), (3, 4)])
        profile = chain_profile(t)
        tau = tau_tableau(t)
        for i in range(1, 5):
            assert profile[(i, i + 1)] == ((2,) if i in tau else (1, 1))

    def test_single_row(self):
        t = make_tableau([(i,) for i in range(1, 5)])
        profile = chain_profile(t)
        for (i, j), shape in profile.items():
            assert shape == tuple([1] * (j - i + 1))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_matches_projection_shapes(self, n):
        for t in all_tableaux(n):
            profile = chain_profile(t)
            for i in range(1, n):
                for j in range(i + 1, n + 1):
                    assert profile[(i, j)] == project_tableau(t, i, j).shape


class TestChainLeq:
    def test_reflexive(self):
        t = make_tableau([(1, 3), (2, 4)])
        assert chain_leq(t, t)

    def test_derived_pair(self):
        assert chain_leq(make_tableau([(1, 3), (2, 4)]),
                         make_tableau([(1, 3, 4), (2,)]))
        assert not chain_leq(make_tableau([(1, 3, 4), (2,)]),
                             make_tableau([(1, 3), (2, 4)]))

    def test_same_shape_two_column_incomparable(self):
        t = make_tableau([(1, 2, 4), (3, 5)])
        s = make_tableau([(1, 2, 5), (3, 4)])
        assert not chain_leq(t, s) and not chain_leq(s, t)

    def test_same_shape_wide_pair_can_compare(self):
        # three-column pair of equal shape that is strictly chain-related
        t = make_tableau([(1, 3, 6), (2, 4), (5,)])
        s = make_tableau([(1, 3, 4), (2, 6), (5,)])
        assert t.shape == s.shape
        assert chain_leq(t, s) and not chain_leq(s, t)

    def test_size_mismatch(self):
        with pytest.raises(InvalidTableauError, match="mismatch"):
            chain_leq(make_tableau([(1,)]), make_tableau([(1, 2)]))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_top_window_forces_shape_dominance(self, n):
        from tableaux import dominance_leq

        for t in all_tableaux(n):
            for s in all_tableaux(n):
                if chain_leq(t, s):
                    assert dominance_leq(t.shape, s.shape)


class TestDufloPoset:
    def test_n2(self):
        p = duflo_poset(2)
        row = make_tableau([(1,), (2,)])
        col = make_tableau([(1, 2)])
        assert p.leq(row, col) and not p.leq(col, row)
        assert p.hasse == ((0, 1),)

    def test_n3_structure(self):
        p = duflo_poset(3)
        assert len(p.nodes) == 4
        assert len(p.hasse) == 4
        # graded by shape dominance
        from tableaux import dominance_leq

        for t, s, related in poset_pairs(p):
            if related:
                assert dominance_leq(t.shape, s.shape)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_base_relation_matches_pair_scan(self, n):
        assert duflo_poset(n).base_rows == duflo_base_by_scan(n)

    def test_base_differs_from_closure_at_6(self):
        p = duflo_poset(6)
        assert p.base_rows != p.leq_rows

    @pytest.mark.parametrize("n", range(1, 7))
    def test_is_partial_order(self, n):
        p = duflo_poset(n)
        rows = p.leq_rows
        m = len(rows)
        for i in range(m):
            assert rows[i] >> i & 1
            for j in range(m):
                if i != j:
                    assert not (rows[i] >> j & 1 and rows[j] >> i & 1)

    def test_limit(self):
        with pytest.raises(LimitError):
            duflo_poset(9, limit=9)


class TestOrderContainments:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_duflo_within_chain(self, n):
        dp = duflo_poset(n)
        cp = chain_poset(n)
        assert dp.nodes == cp.nodes
        for i in range(len(dp.nodes)):
            assert dp.leq_rows[i] & ~cp.leq_rows[i] == 0

    @pytest.mark.parametrize("n", range(2, 6))
    def test_coincide_through_5(self, n):
        assert duflo_poset(n).leq_rows == chain_poset(n).leq_rows

    def test_proper_extension_at_6(self):
        dp = duflo_poset(6)
        cp = chain_poset(6)
        assert dp.leq_rows != cp.leq_rows

    @pytest.mark.parametrize("n", range(2, 7))
    def test_tau_monotone_both_orders(self, n):
        for poset in (duflo_poset(n), chain_poset(n)):
            for t, s, related in poset_pairs(poset):
                if related:
                    assert tau_tableau(t) <= tau_tableau(s)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_chain_respects_projections(self, n):
        cp = chain_poset(n)
        windows = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
        for t, s, related in poset_pairs(cp):
            if not related:
                continue
            for i, j in windows:
                pt = relabel_tableau(project_tableau(t, i, j))
                ps = relabel_tableau(project_tableau(s, i, j))
                assert chain_leq(pt, ps)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_duflo_respects_projections_and_insertion(self, n):
        dp = duflo_poset(n)
        windows = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
        smaller = {m: duflo_poset(m) for m in range(1, n + 1)}
        bigger = duflo_poset(n + 1)
        for t, s, related in poset_pairs(dp):
            if not related:
                continue
            for i, j in windows:
                pt = relabel_tableau(project_tableau(t, i, j))
                ps = relabel_tableau(project_tableau(s, i, j))
                assert smaller[j - i + 1].leq(pt, ps)
            assert bigger.leq(insert(n + 1, t), insert(n + 1, s))


class TestRootPositionSets:
    def test_identity_has_all_pairs(self):
        w = Word([1, 2, 3, 4])
        assert root_position_set(w) == {
            (i, j) for i in range(1, 5) for j in range(i + 1, 5)
        }

    def test_reversal_empty(self):
        assert root_position_set(Word([4, 3, 2, 1])) == frozenset()

    @pytest.mark.parametrize("n", range(2, 6))
    def test_complement_of_inversions(self, n):
        for w in all_words(n):
            everything = {(i, j) for j in range(2, n + 1) for i in range(1, j)}
            assert root_position_set(w) == everything - inversion_set(w).pairs

    @pytest.mark.parametrize("n", range(2, 6))
    def test_subspace_leq_equals_weak_leq(self, n):
        for w in all_words(n):
            for y in all_words(n):
                assert subspace_leq(w, y) == weak_leq(w, y)

    def test_examples(self):
        assert subspace_leq(Word([1, 2, 3]), Word([2, 1, 3]))
        w = Word([2, 5, 1, 4, 3])
        assert subspace_leq(w, w)


class TestVerdicts:
    def test_equal(self):
        t = make_tableau([(1, 2)])
        assert compare(t, t, chain_leq) is Verdict.EQUAL

    def test_less_greater(self):
        t = make_tableau([(1, 3), (2, 4)])
        s = make_tableau([(1, 3, 4), (2,)])
        assert compare(t, s, chain_leq) is Verdict.LESS
        assert compare(s, t, chain_leq) is Verdict.GREATER

    def test_incomparable(self):
        t = make_tableau([(1, 2, 4), (3, 5)])
        s = make_tableau([(1, 2, 5), (3, 4)])
        assert compare(t, s, chain_leq) is Verdict.INCOMPARABLE

    def test_str(self):
        assert str(Verdict.LESS) == "Less"


class TestHasse:
    def test_chain(self):
        rows = (0b111, 0b110, 0b100)
        assert hasse_reduce(rows) == [(0, 1), (1, 2)]

    def test_antichain(self):
        rows = (0b001, 0b010, 0b100)
        assert hasse_reduce(rows) == []

    def test_rejects_non_order(self):
        with pytest.raises(InvalidTableauError, match="reflexive"):
            hasse_reduce((0b10, 0b10))
        with pytest.raises(InvalidTableauError, match="antisymmetric"):
            hasse_reduce((0b11, 0b11))
        with pytest.raises(InvalidTableauError, match="transitive"):
            hasse_reduce((0b011, 0b110, 0b100))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_closure_of_hasse_restores_poset(self, n):
        for poset in (duflo_poset(n), chain_poset(n)):
            m = len(poset.nodes)
            rows = [1 << i for i in range(m)]
            for a, b in poset.hasse:
                rows[a] |= 1 << b
            # transitive closure
            for k in range(m):
                bit = 1 << k
                for i in range(m):
                    if rows[i] & bit:
                        rows[i] |= rows[k]
            assert tuple(rows) == poset.leq_rows


class TestCoverOf:
    def test_maximal_node_empty(self):
        p = duflo_poset(3)
        column = make_tableau([(1, 2, 3)])
        assert cover_of(p, column) == []

    def test_n2_row_covers_to_column(self):
        p = duflo_poset(2)
        row = make_tableau([(1,), (2,)])
        assert cover_of(p, row) == [make_tableau([(1, 2)])]

    def test_absent_node(self):
        p = duflo_poset(2)
        with pytest.raises(InvalidTableauError, match="node"):
            p.index_of(make_tableau([(1, 2, 3)]))


class TestRestriction:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_two_column_restriction_preserves_relation(self, n):
        full = duflo_poset(n)
        sub = full.restrict(lambda t: len(t.columns) <= 2)
        assert all(len(t.columns) <= 2 for t in sub.nodes)
        for t in sub.nodes:
            for s in sub.nodes:
                assert sub.leq(t, s) == full.leq(t, s)
