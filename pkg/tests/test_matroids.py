"""Rank-table oracle: axioms, Tutte expansion, constructions, exchange graphs."""
import pytest

from tuttemw import (
    BivariatePoly,
    InvalidParametersError,
    NotABasisError,
    RankOracleMatroid,
    SizeLimitError,
    bases,
    direct_sum,
    dual_matroid,
    exchange_graph,
    lifted_basis,
    loops_coloops,
    rank_axioms_check,
    subset_expansion_tutte,
    thicken_exchange_graph,
    thicken_matroid,
    uniform_oracle,
)


def test_uniform_oracle_tables():
    assert uniform_oracle(2, 1).ranks == [0, 1, 1, 1]
    free = uniform_oracle(3, 3)
    assert all(free.ranks[s] == s.bit_count() for s in range(8))
    m42 = uniform_oracle(4, 2)
    assert rank_axioms_check(m42)
    assert len(bases(m42)) == 6
    with pytest.raises(SizeLimitError):
        uniform_oracle(25, 3)
    with pytest.raises(InvalidParametersError):
        uniform_oracle(3, 4)


def test_rank_table_validation():
    with pytest.raises(InvalidParametersError):
        RankOracleMatroid(2, [0, 1, 1])  # wrong length
    with pytest.raises(SizeLimitError):
        rank_axioms_check(RankOracleMatroid(17, [0] * (1 << 17)))


def test_rank_axioms_reject_bad_tables():
    assert rank_axioms_check(uniform_oracle(5, 2))
    normalization = RankOracleMatroid(1, [1, 1])
    assert not rank_axioms_check(normalization)
    # rank jumps by two when the pair arrives: violates unit increase
    jump = RankOracleMatroid(2, [0, 0, 0, 2])
    assert not rank_axioms_check(jump)
    # normalized and unit-increasing but not submodular:
    # both singletons dependent yet the pair independent
    bad = RankOracleMatroid(2, [0, 0, 0, 1])
    assert not rank_axioms_check(bad)
    # two parallel elements plus a coloop is a genuine matroid
    assert rank_axioms_check(RankOracleMatroid(3, [0, 1, 1, 1, 1, 2, 2, 2]))


def test_subset_expansion_examples():
    assert subset_expansion_tutte(uniform_oracle(2, 1)).as_dict() == {(1, 0): 1, (0, 1): 1}
    assert subset_expansion_tutte(uniform_oracle(1, 1)).as_dict() == {(1, 0): 1}
    assert subset_expansion_tutte(uniform_oracle(1, 0)).as_dict() == {(0, 1): 1}
    assert subset_expansion_tutte(uniform_oracle(0, 0)) == BivariatePoly.one()
    with pytest.raises(SizeLimitError):
        subset_expansion_tutte(RankOracleMatroid(23, [0] * (1 << 23)))


def test_thicken_matroid():
    parallel = thicken_matroid(uniform_oracle(2, 1), 2)
    assert parallel.m == 4
    assert all(parallel.ranks[s] == 1 for s in range(1, 16))
    assert rank_axioms_check(thicken_matroid(uniform_oracle(3, 2), 2))
    assert thicken_matroid(uniform_oracle(1, 1), 3) == uniform_oracle(3, 1)
    with pytest.raises(SizeLimitError):
        thicken_matroid(uniform_oracle(12, 3), 2)
    with pytest.raises(InvalidParametersError):
        thicken_matroid(uniform_oracle(2, 1), 0)


def test_dual_matroid():
    assert dual_matroid(uniform_oracle(4, 1)) == uniform_oracle(4, 3)
    for table in (uniform_oracle(5, 2), thicken_matroid(uniform_oracle(3, 2), 2)):
        assert dual_matroid(dual_matroid(table)) == table
    # Tutte of the dual swaps the arguments
    straight = subset_expansion_tutte(uniform_oracle(5, 2)).as_dict()
    dualized = subset_expansion_tutte(dual_matroid(uniform_oracle(5, 2))).as_dict()
    assert dualized == {(j, i): c for (i, j), c in straight.items()}


def test_direct_sum():
    coloop_loop = direct_sum(uniform_oracle(1, 1), uniform_oracle(1, 0))
    assert subset_expansion_tutte(coloop_loop).as_dict() == {(1, 1): 1}
    a, b = uniform_oracle(3, 1), uniform_oracle(3, 2)
    product = subset_expansion_tutte(a) * subset_expansion_tutte(b)
    assert subset_expansion_tutte(direct_sum(a, b)) == product
    empty = uniform_oracle(0, 0)
    assert direct_sum(a, empty) == a


def test_bases():
    assert len(bases(uniform_oracle(4, 2))) == 6
    assert bases(uniform_oracle(3, 3)) == [0b111]
    six_three = uniform_oracle(6, 3)
    assert len(bases(six_three)) == subset_expansion_tutte(six_three).evaluate(1, 1)
    listed = bases(uniform_oracle(5, 2))
    assert listed == sorted(listed)


def test_loops_coloops():
    assert loops_coloops(uniform_oracle(5, 2)) == (frozenset(), frozenset())
    assert loops_coloops(uniform_oracle(3, 3)) == (frozenset(), frozenset({0, 1, 2}))
    assert loops_coloops(uniform_oracle(3, 0)) == (frozenset({0, 1, 2}), frozenset())


def test_exchange_graph_complete_bipartite():
    table = uniform_oracle(5, 2)
    for basis in bases(table):
        graph = exchange_graph(table, basis)
        assert len(graph.left) == 2 and len(graph.right) == 3
        assert graph.is_complete_bipartite()


def test_exchange_graph_exhaustive_small():
    for n in range(1, 7):
        for r in range(n + 1):
            table = uniform_oracle(n, r)
            for basis in bases(table):
                assert exchange_graph(table, basis).is_complete_bipartite()


def test_exchange_graph_coloop_is_isolated():
    # element 0 is a coloop of U(1,1) + U(2,1); it cannot be exchanged
    table = direct_sum(uniform_oracle(1, 1), uniform_oracle(2, 1))
    graph = exchange_graph(table, 0b011)
    assert graph.left == (0, 1)
    assert graph.adj[0] == 0  # the coloop's row
    assert graph.adj[1] == 1  # element 1 swaps with element 2


def test_exchange_graph_rejects_non_basis():
    with pytest.raises(NotABasisError):
        exchange_graph(uniform_oracle(4, 2), 0b0111)


def test_thickened_exchange_graph_structure():
    table = uniform_oracle(3, 2)
    graph = exchange_graph(table, 0b011)
    thickened = thicken_exchange_graph(graph)
    assert len(thickened.left) == 2
    assert len(thickened.right) == 2 * 1 + 2  # twin of the lone right vertex + 2 pendants
    degrees = sorted(
        sum(row >> j & 1 for row in thickened.adj) for j in range(len(thickened.right))
    )
    assert degrees == [1, 1, 2, 2]  # two pendants, the doubled right pair


def test_thickened_exchange_graph_single_pendant():
    from tuttemw.matroids import ExchangeGraph

    lone = ExchangeGraph((0,), (), (0,))
    thickened = thicken_exchange_graph(lone)
    assert len(thickened.right) == 1
    assert thickened.adj == (1,)


def test_transform_matches_lifted_basis_graph():
    for n in range(2, 6):
        for r in range(1, n):
            table = uniform_oracle(n, r)
            thick_table = thicken_matroid(table, 2)
            for basis in bases(table):
                transformed = thicken_exchange_graph(exchange_graph(table, basis))
                lifted = exchange_graph(thick_table, lifted_basis(basis, 2))
                assert transformed.isomorphic_to(lifted), (n, r, basis)


def test_canonical_form_distinguishes_graphs():
    from tuttemw.matroids import ExchangeGraph

    path = ExchangeGraph((0, 1), ("a", "b"), (0b01, 0b11))
    matching = ExchangeGraph((0, 1), ("a", "b"), (0b01, 0b10))
    assert not path.isomorphic_to(matching)
    relabeled = ExchangeGraph((1, 0), ("b", "a"), (0b10, 0b11))
    assert path.isomorphic_to(relabeled)


def test_produced_tables_satisfy_axioms():
    tables = []
    for n in range(7):
        for r in range(n + 1):
            tables.append(uniform_oracle(n, r))
    tables.append(thicken_matroid(uniform_oracle(4, 2), 2))
    tables.append(thicken_matroid(uniform_oracle(3, 1), 3))
    tables.append(dual_matroid(thicken_matroid(uniform_oracle(4, 2), 2)))
    tables.append(direct_sum(uniform_oracle(3, 2), uniform_oracle(4, 1)))
    for table in tables:
        if table.m <= 12:
            assert rank_axioms_check(table), table


def test_rank_table_text_round_trip():
    table = thicken_matroid(uniform_oracle(3, 2), 2)
    text = table.to_text()
    assert text.splitlines()[0] == "6"
    assert RankOracleMatroid.from_text(text) == table
    assert RankOracleMatroid.from_text("2\n0 1 1 1\n") == uniform_oracle(2, 1)
    with pytest.raises(InvalidParametersError):
        RankOracleMatroid.from_text("")
    with pytest.raises(InvalidParametersError):
        RankOracleMatroid.from_text("2\n0 1 1\n")
