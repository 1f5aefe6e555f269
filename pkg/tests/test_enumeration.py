"""Isomorph-free enumeration against a labeled brute-force oracle and known counts."""

from __future__ import annotations

from functools import lru_cache

import pytest

from tfik.catalog import build
from tfik.enumeration import (
    ANY_PROFILE,
    MAX_DEG_5_TWO_DEG_5,
    MAX_DEG_AT_LEAST_6,
    Regime,
    brute_force_all,
    enumerate_regime,
    feasible_degree_sequences,
    is_graphical,
)
from tfik.errors import OracleTooLarge, Truncated
from tfik.graph import canonicalize, graph6_decode

PROFILES = [ANY_PROFILE, MAX_DEG_5_TWO_DEG_5, MAX_DEG_AT_LEAST_6]


@lru_cache(maxsize=None)
def oracle(order: int, edges: int, min_degree: int, triangle_free: bool) -> frozenset:
    return frozenset(brute_force_all(order, edges, min_degree=min_degree, triangle_free=triangle_free))


def oracle_for(r: Regime, order: int) -> set:
    base = oracle(order, r.edge_count, r.min_degree, r.triangle_free)
    return {f for f in base if r.accepts(graph6_decode(f))}


def enumerated(r: Regime) -> set:
    res = enumerate_regime(r)
    assert not res.truncated
    assert len(set(res.forms)) == len(res.forms)
    return set(res.forms)


# every triangle-free min-degree-3 regime of order <= 9, every profile, both connectivity settings
REGIME_CELLS = [
    (n, m, p, c)
    for n in range(4, 10)
    for m in range(max(0, 3 * n // 2 - 1), n * n // 4 + 2)
    for p in PROFILES
    for c in (True, False)
]


class TestOracleEquivalence:
    @pytest.mark.parametrize("n,m,profile,connected", REGIME_CELLS)
    def test_triangle_free_regimes(self, n, m, profile, connected):
        r = Regime(m, profile=profile, connected=connected, orders=(n,))
        assert enumerated(r) == oracle_for(r, n)

    @pytest.mark.parametrize("m", range(0, 13))
    def test_order_seven_connected(self, m):
        r = Regime(m, min_degree=0, triangle_free=False, orders=(7,))
        assert enumerated(r) == oracle_for(r, 7)

    @pytest.mark.parametrize("m", range(0, 13))
    def test_order_seven_triangle_free_any(self, m):
        r = Regime(m, min_degree=0, connected=False, orders=(7,))
        assert enumerated(r) == oracle_for(r, 7)

    @pytest.mark.parametrize("m", range(12, 19))
    def test_order_eight_with_triangles(self, m):
        r = Regime(m, triangle_free=False, orders=(8,))
        assert enumerated(r) == oracle_for(r, 8)

    @pytest.mark.parametrize("m", range(9, 16))
    def test_order_eight_min_degree_two(self, m):
        r = Regime(m, min_degree=2, orders=(8,))
        assert enumerated(r) == oracle_for(r, 8)

    def test_nine_edges_is_k33(self):
        res = enumerate_regime(Regime(9))
        assert len(res) == 1
        assert res.forms[0] == canonicalize(build("K33").graph)
        assert oracle(6, 9, 3, True) == frozenset(res.forms)


class TestOracle:
    def test_k5(self):
        assert brute_force_all(5, 10) == {canonicalize(build("K5").graph)}

    def test_predicate(self):
        assert brute_force_all(6, 9, lambda g: min(g.degrees()) >= 3 and g.order == 6, triangle_free=True) == {
            canonicalize(build("K33").graph)
        }

    def test_too_large(self):
        with pytest.raises(OracleTooLarge):
            brute_force_all(10, 15)


# published counts: connected cubic, connected triangle-free cubic, connected, connected triangle-free
CUBIC = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
CUBIC_TF = {4: 0, 6: 1, 8: 2, 10: 6, 12: 22}
CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
CONNECTED_TF = {1: 1, 2: 1, 3: 1, 4: 3, 5: 6, 6: 19, 7: 59, 8: 267, 9: 1380}


class TestKnownCounts:
    @pytest.mark.parametrize("n", sorted(CUBIC))
    def test_cubic(self, n):
        cubic = lambda s: s[0] == 3  # noqa: E731
        assert len(enumerate_regime(Regime(3 * n // 2, triangle_free=False, profile=cubic, orders=(n,)))) == CUBIC[n]
        assert len(enumerate_regime(Regime(3 * n // 2, profile=cubic, orders=(n,)))) == CUBIC_TF[n]

    @pytest.mark.parametrize("n", sorted(CONNECTED))
    def test_connected(self, n):
        total = sum(
            len(enumerate_regime(Regime(m, min_degree=0, triangle_free=False, orders=(n,))))
            for m in range(n * (n - 1) // 2 + 1)
        )
        assert total == CONNECTED[n]

    @pytest.mark.parametrize("n", sorted(CONNECTED_TF))
    def test_connected_triangle_free(self, n):
        total = sum(len(enumerate_regime(Regime(m, min_degree=0, orders=(n,)))) for m in range(n * n // 4 + 1))
        assert total == CONNECTED_TF[n]


class TestDegreeSequences:
    def test_m11_sequence_present(self):
        assert (5, 5, 5, 5, 4, 4, 4, 3, 3, 3, 3) in feasible_degree_sequences(Regime(22, profile=MAX_DEG_5_TWO_DEG_5))

    def test_degree_cap(self):
        for p in PROFILES:
            assert all(s[0] < 8 for s in feasible_degree_sequences(Regime(22, profile=p)))

    def test_no_length_fourteen_with_two_fives(self):
        assert all(len(s) != 14 for s in feasible_degree_sequences(Regime(22, profile=MAX_DEG_5_TWO_DEG_5)))

    def test_sequences_are_well_formed(self):
        for s in feasible_degree_sequences(Regime(22)):
            assert sum(s) == 44 and min(s) >= 3 and list(s) == sorted(s, reverse=True) and is_graphical(s)
            assert 10 <= len(s) <= 14

    def test_every_realized_sequence_is_listed(self, regime_graphs):
        allowed = set(feasible_degree_sequences(Regime(22)))
        assert {tuple(sorted(g.degrees(), reverse=True)) for g in regime_graphs} <= allowed

    def test_graphical(self):
        assert is_graphical([3, 3, 3, 3])
        assert not is_graphical([3, 3, 1, 1])
        assert not is_graphical([4, 1, 1, 1])

    def test_orders(self):
        assert Regime(22).feasible_orders() == [10, 11, 12, 13, 14]


class TestTheoremRegimes:
    def test_regime_b_contains_catalog_graphs(self):
        res = enumerate_regime(Regime(22, profile=MAX_DEG_5_TWO_DEG_5))
        forms = set(res.forms)
        assert canonicalize(build("M_11", with_witness=False).graph) in forms
        assert canonicalize(build("cousin110", with_witness=False).graph) in forms

    @pytest.mark.parametrize("profile", [MAX_DEG_AT_LEAST_6, MAX_DEG_5_TWO_DEG_5])
    def test_output_contract(self, profile):
        r = Regime(22, profile=profile)
        res = enumerate_regime(r)
        assert res.forms == sorted(res.forms)
        assert len(set(res.forms)) == len(res)
        assert all(r.accepts(g) for g in res)
        assert [canonicalize(g) for g in res] == res.forms
        assert sum(res.by_order.values()) == len(res)

    def test_parallel_matches_serial(self):
        r = Regime(22, profile=MAX_DEG_5_TWO_DEG_5, orders=(11, 12))
        assert enumerate_regime(r, jobs=3).forms == enumerate_regime(r).forms

    def test_budget_marks_truncation(self):
        r = Regime(22, profile=MAX_DEG_5_TWO_DEG_5, orders=(12,))
        res = enumerate_regime(r, budget=50)
        assert res.truncated
        with pytest.raises(Truncated) as info:
            enumerate_regime(r, budget=50, strict=True)
        assert info.value.partial.truncated

    def test_unknown_profile(self):
        with pytest.raises(ValueError):
            Regime(22, profile="cubic").profile_predicate()
