import itertools

import pytest

from src.algebra import Series, TruncationSpec, Y, ypoly
from src.clusters import (
    ColumnKind,
    PreCluster,
    chart,
    chart_row_sums,
    cluster_word,
    column_heights,
    column_kinds,
    enumerate_preclusters,
    enumerate_preclusters_by_length,
    minimal_cluster_gf,
    mu_coefficient_poly,
    preclusters_per_length,
    symbolic_cluster,
)
from src.equiv import CHART_COLUMNS, PUBLISHED_CHARTS
from src.utils.exceptions import PreconditionError
from src.words import Word, bounded_compositions, dominates, reverse, words_of_weight
from tests.helpers import w


def subsets(*groups):
    return tuple(frozenset(group) for group in groups)


def test_precluster_validation():
    with pytest.raises(PreconditionError):
        PreCluster(4, (0, 4))
    with pytest.raises(PreconditionError):
        PreCluster(4, (1, 2))
    p = PreCluster.from_gaps(4, (1, 3))
    assert (p.offsets, p.m, p.length, p.gaps) == ((0, 1, 4), 3, 8, (1, 3))


@pytest.mark.parametrize("m, count", [(1, 1), (2, 3), (3, 9), (4, 27)])
def test_precluster_counts(m, count):
    assert len(enumerate_preclusters(4, m)) == count


def test_k4_two_clusters_have_lengths_5_6_7():
    assert [p.length for p in enumerate_preclusters(4, 2)] == [5, 6, 7]
    assert enumerate_preclusters(1, 2) == []
    assert [p.offsets for p in enumerate_preclusters(1, 1)] == [(0,)]


def test_enumeration_by_length_matches_compositions():
    for k, m in itertools.product(range(1, 6), range(1, 5)):
        everything = enumerate_preclusters(k, m)
        for length in range(k, k + (m - 1) * max(k - 1, 0) + 1):
            by_length = enumerate_preclusters_by_length(k, m, length)
            assert by_length == [p for p in everything if p.length == length]
            assert len(by_length) == sum(1 for _ in bounded_compositions(length - k, m - 1, 1, k - 1))
    with pytest.raises(PreconditionError):
        enumerate_preclusters_by_length(4, 2, 3)


def test_symbolic_cluster_examples():
    assert symbolic_cluster(PreCluster(4, (0, 1))).columns == subsets({1}, {1, 2}, {2, 3}, {3, 4}, {4})
    assert symbolic_cluster(PreCluster(4, (0, 3))).columns == subsets({1}, {2}, {3}, {1, 4}, {2}, {3}, {4})
    assert symbolic_cluster(PreCluster(1, (0,))).columns == subsets({1})


def test_five_row_display_cluster():
    columns = symbolic_cluster(PreCluster(5, (0, 1, 3, 4, 6))).columns
    assert columns == subsets(
        {1}, {1, 2}, {2, 3}, {1, 3, 4}, {1, 2, 4, 5}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {3, 5}, {4}, {5}
    )


def test_cluster_word():
    assert cluster_word(w("3123"), PreCluster(4, (0, 3))) == w("3123123")
    assert cluster_word(w("122"), PreCluster(3, (0,))) == w("122")
    with pytest.raises(PreconditionError):
        cluster_word(w("12"), PreCluster(4, (0,)))


def test_cluster_word_is_symbolic_instantiation():
    u = w("31425")
    for m in range(1, 4):
        for p in enumerate_preclusters(5, m):
            assert cluster_word(u, p) == symbolic_cluster(p).instantiate(u)


def test_column_kinds():
    p = PreCluster(4, (0, 1, 3))
    kinds = column_kinds(p)
    heights = column_heights(p)
    assert kinds[0] & ColumnKind.TOP
    assert kinds[-1] & ColumnKind.BOTTOM
    for kind, height in zip(kinds, heights):
        if kind == ColumnKind.TOP | ColumnKind.BOTTOM:
            assert height == p.m
    full = column_kinds(PreCluster(4, (0, 1, 2, 3)))
    assert full[3] == ColumnKind.TOP | ColumnKind.BOTTOM
    assert ColumnKind.MIDDLE in column_kinds(PreCluster(3, (0, 2, 4)))


def test_first_and_last_columns():
    for m in range(1, 5):
        for p in enumerate_preclusters(4, m):
            columns = symbolic_cluster(p).columns
            assert columns[0] == {1} and columns[-1] == {4}
            assert sum(1 for column in columns if column == {1}) == 1


def test_minimal_cluster_gf_small_cases():
    trunc = TruncationSpec(10)
    assert minimal_cluster_gf(w("1"), trunc) == Series.monomial(trunc, 1, 1, 1)
    m11 = minimal_cluster_gf(w("11"), trunc)
    assert m11 == Series({(d + 1, d + 1, d): 1 for d in range(1, 10)}, trunc)


def test_lowest_term_is_the_pattern():
    for u in (w("3123"), w("122"), w("5"), w("2143")):
        mu = minimal_cluster_gf(u, TruncationSpec(16))
        assert mu.min_degree("x") == len(u)
        assert mu.min_degree("y") == u.weight
        assert mu.coefficient(len(u), u.weight, 1) == 1


def test_minimal_cluster_gf_contains_3123123():
    mu = minimal_cluster_gf(w("3123"), TruncationSpec(16))
    assert mu.coefficient(7, 15, 2) >= 1


def test_minimal_cluster_gf_matches_naive_recomputation():
    trunc = TruncationSpec(12)
    for n in range(1, 7):
        for u in words_of_weight(n):
            naive = {}
            for m in range(1, trunc.max_weight + 1):
                found = False
                for length in range(len(u), trunc.max_weight + 1):
                    if len(u) == 1 and m > 1:
                        break
                    for p in enumerate_preclusters_by_length(len(u), m, length):
                        found = True
                        weight = cluster_word(u, p).weight
                        if weight <= trunc.max_weight:
                            key = (length, weight, m)
                            naive[key] = naive.get(key, 0) + 1
                if not found:
                    break
            assert minimal_cluster_gf(u, trunc) == Series(naive, trunc)


def test_heavy_pattern_gives_zero_series():
    assert minimal_cluster_gf(w("99"), TruncationSpec(10)) == Series.zero(TruncationSpec(10))


def test_mu_coefficient_poly():
    assert mu_coefficient_poly(w("122"), 3, 1) == Y**5
    assert mu_coefficient_poly(w("1"), 2, 2) == ypoly({})
    u = w("3142")
    u1, u2, u3, u4 = u
    assert mu_coefficient_poly(u, 7, 2) == Y ** (u1 + u2 + u3 + max(u1, u4) + u2 + u3 + u4)


def test_mu_coefficient_poly_agrees_with_series():
    trunc = TruncationSpec(16)
    u = w("2131")
    mu = minimal_cluster_gf(u, trunc)
    for n in range(4, 11):
        for m in range(1, 5):
            poly = mu_coefficient_poly(u, n, m)
            expected = mu.slice_xz(n, m)
            low = {b: c for (b,), c in poly.terms() if b <= 16}
            assert low == {b: c for (b,), c in expected.terms()}


def test_reverse_invariance_of_minimal_clusters():
    trunc = TruncationSpec(14)
    for n in range(1, 7):
        for u in words_of_weight(n):
            assert minimal_cluster_gf(reverse(u), trunc) == minimal_cluster_gf(u, trunc)


def test_clusters_are_minimal():
    """Every marked window dominates u, and lowering any entry breaks one of them."""
    for n in range(1, 6):
        for u in words_of_weight(n):
            k = len(u)
            for m in range(1, 13):
                preclusters = [p for length in range(k, 13) for p in enumerate_preclusters_by_length(k, m, length)]
                if not preclusters:
                    break
                for p in preclusters:
                    c = cluster_word(u, p)
                    assert all(dominates(c[o : o + k], u) for o in p.offsets)
                    for position in range(len(c)):
                        if c[position] == 1:
                            continue
                        lowered = list(c)
                        lowered[position] -= 1
                        lowered = Word(lowered)
                        assert not all(dominates(lowered[o : o + k], u) for o in p.offsets)


def test_chart_examples():
    table = chart(4, 2)
    assert table.lengths == [5, 6, 7]
    assert table.rows[5] == {frozenset(s): 1 for s in ({1}, {4}, {1, 2}, {2, 3}, {3, 4})}
    row8 = chart(4, 3).rows[8]
    assert all(row8[frozenset({i})] == 3 for i in range(1, 5))
    assert all(row8[frozenset(pair)] == 2 for pair in itertools.combinations(range(1, 5), 2))
    assert len(row8) == 10
    assert chart(4, 4).rows[13] == {
        frozenset({1}): 1,
        frozenset({2}): 4,
        frozenset({3}): 4,
        frozenset({4}): 1,
        frozenset({1, 4}): 3,
    }
    with pytest.raises(PreconditionError):
        chart(1, 2)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_charts_reproduce_published_tables(m):
    table = chart(4, m)
    assert table.lengths == sorted(PUBLISHED_CHARTS[m])
    for length, expected in PUBLISHED_CHARTS[m].items():
        assert [table.count(length, map(int, label.split(","))) for label in CHART_COLUMNS] == expected


@pytest.mark.parametrize("k, m", [(3, 3), (4, 4), (5, 3)])
def test_chart_row_sums(k, m):
    for total, expected in chart_row_sums(chart(k, m)).values():
        assert total == expected


def test_chart_singleton_column_counts_preclusters():
    table = chart(4, 4)
    for length in table.lengths:
        assert table.count(length, {1}) == len(enumerate_preclusters_by_length(4, 4, length))


def test_chart_text_and_json():
    text = chart(4, 2).to_text()
    lines = text.splitlines()
    assert lines[0].split() == ["length", "1", "2", "3", "4", "1,2", "1,3", "1,4", "2,3", "2,4", "3,4"]
    assert len(lines) == 4
    assert lines[3].split() == ["7", "1", "2", "2", "1", "1"]
    assert chart(4, 3).to_json()["rows"][0] == {
        "length": 6,
        "counts": {"1": 1, "4": 1, "1,2": 1, "3,4": 1, "1,2,3": 1, "2,3,4": 1},
    }
    assert list(chart(4, 2).to_frame().columns)[-1] == "3,4"


def test_preclusters_per_length_matches_single_letter_column():
    assert preclusters_per_length(4, 2) == {5: 1, 6: 1, 7: 1}
    assert preclusters_per_length(4, 3) == {6: 1, 7: 2, 8: 3, 9: 2, 10: 1}
    for m, rows in PUBLISHED_CHARTS.items():
        assert preclusters_per_length(4, m) == {length: counts[0] for length, counts in rows.items()}
