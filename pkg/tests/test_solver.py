from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brushnumber import generators as gen
from brushnumber.cleaning import directed_simulate, greedy_allocation
from brushnumber.errors import InvalidInputError, SearchIncomplete, TooLargeError
from brushnumber.graph import Graph, Orientation
from brushnumber.solver import (
    branch_and_bound,
    brush_number,
    brute_force,
    exact_dp,
    greedy_order,
    heuristic,
    lower_bound_odd,
    order_cost,
)
from conftest import all_connected_graphs, graphs
from oracles import brush_number_by_allocations, min_cost_by_orientations

# frozen from tests/oracles.py (allocation search and itertools orientation scan agree)
ORACLE = {
    "K2": (gen.complete(2), 1),
    "C5": (gen.cycle(5), 2),
    "K4": (gen.complete(4), 4),
    "K5": (gen.complete(5), 6),
    "P4": (gen.path(4), 1),
    "P3+P3": (gen.path(3).disjoint_union(gen.path(3)), 2),
}

ENGINES = [brute_force, exact_dp, branch_and_bound]


@pytest.mark.parametrize("name", sorted(ORACLE))
@pytest.mark.parametrize("engine", ENGINES, ids=lambda f: f.__name__)
def test_frozen_values(name, engine):
    g, expected = ORACLE[name]
    result = engine(g)
    assert result.value == expected
    result.check()


def test_oracles_still_agree_with_frozen_values():
    for g, expected in ORACLE.values():
        edges = list(g.edge_list)
        assert brush_number_by_allocations(g.vertex_count, edges) == expected
        assert min_cost_by_orientations(g.vertex_count, edges) == expected


def test_path_twelve_bnb():
    assert branch_and_bound(gen.path(12)).value == 1
    assert exact_dp(gen.path(12)).value == 1


def test_empty_and_trivial_graphs():
    for g in [Graph(0), Graph(1), Graph(4)]:
        for engine in ENGINES:
            r = engine(g)
            assert r.value == 0
            assert sorted(r.witness_order) == list(g.vertices)


def test_brute_force_tie_break_smallest_encoding():
    # both orientations of K2 cost 1; encoding 0 points 0 -> 1
    r = brute_force(gen.complete(2))
    assert r.witness_orientation.reversed_bits == 0
    # P3: 0->1->2 (encoding 0) costs 1 and is the smallest
    assert brute_force(gen.path(3)).witness_orientation.arcs == ((0, 1), (1, 2))


def test_brute_force_tie_break_against_scan():
    g = gen.cycle(4)
    best = brute_force(g)
    costs = []
    for bits in range(1 << g.edge_count):
        o = Orientation(g, bits)
        if o.is_acyclic():
            costs.append((sum(max(0, o.out_degree(v) - o.in_degree(v)) for v in g.vertices), bits))
    assert (best.value, best.witness_orientation.reversed_bits) == min(costs)


def test_dp_witness_is_lexicographically_smallest():
    assert exact_dp(gen.complete(5)).witness_order == (0, 1, 2, 3, 4)
    for g in [gen.star(4), gen.path(4), gen.cycle(5), gen.random_graph(6, 0.5, 1)]:
        r = exact_dp(g)
        best = min(
            (order_cost(g, order), order) for order in itertools.permutations(g.vertices)
        )
        assert (r.value, r.witness_order) == best
    # centre first would pay 3; a leaf first pays 1 and the centre 1
    assert exact_dp(gen.star(4)).witness_order == (1, 0, 2, 3)


def test_caps():
    with pytest.raises(TooLargeError) as exc:
        brute_force(gen.complete(8))  # 28 edges
    assert exc.value.size == 28 and exc.value.cap == 24
    with pytest.raises(TooLargeError):
        exact_dp(gen.path(25))
    assert exact_dp(gen.path(6), cap=6).value == 1
    with pytest.raises(TooLargeError):
        exact_dp(gen.path(6), cap=5)
    with pytest.raises(TooLargeError):
        brush_number(gen.path(6), "bnb", cap=5)
    with pytest.raises(InvalidInputError):
        brush_number(gen.path(3), "magic")


def test_bnb_budget():
    g = gen.complete(6)
    with pytest.raises(SearchIncomplete) as exc:
        branch_and_bound(g, budget=0)
    inc = exc.value.incumbent
    assert not inc.exact
    assert inc.value >= exact_dp(g).value
    inc.check()
    assert branch_and_bound(g, budget=10_000).value == exact_dp(g).value
    with pytest.raises(InvalidInputError):
        branch_and_bound(g, budget=-1)


@pytest.mark.parametrize("g, expected", [(gen.complete(2), 1), (gen.cycle(6), 0), (gen.complete(4), 2)])
def test_lower_bound_odd(g, expected):
    assert lower_bound_odd(g) == expected


def test_heuristic_is_an_upper_bound():
    for g in [gen.cycle(7), gen.complete(5), gen.star(6), gen.random_graph(8, 0.4, 3)]:
        h = heuristic(g)
        assert not h.exact
        assert h.value >= exact_dp(g).value
        assert sorted(greedy_order(g)) == list(g.vertices)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_engines_agree(g):
    values = {engine(g).value for engine in ENGINES}
    assert len(values) == 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_bounds_and_witness(g):
    r = exact_dp(g)
    r.check()
    assert lower_bound_odd(g) <= r.value <= g.edge_count
    trace = directed_simulate(r.witness_orientation, greedy_allocation(r.witness_orientation))
    assert trace.cleaned
    assert trace.initial.total() == r.value


def test_edge_addition_can_lower_the_brush_number():
    # 2K2 needs a brush per component; joining them gives P4, which needs one
    two_k2 = Graph(4, frozenset({(0, 1), (2, 3)}))
    assert exact_dp(two_k2).value == 2
    assert exact_dp(two_k2.add_edge(1, 2)).value == 1
    # connected case: a tree's value is half its odd-degree count, and the
    # added edge makes two leaves even
    tree = Graph(6, frozenset({(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)}))
    assert exact_dp(tree).value == brute_force(tree).value == 3
    assert exact_dp(tree.add_edge(0, 4)).value == brute_force(tree.add_edge(0, 4)).value == 2


def test_edge_addition_monotone_on_small_connected_graphs():
    for n in range(2, 5):
        for g in all_connected_graphs(n):
            base = exact_dp(g).value
            for e in g.non_edges():
                assert exact_dp(g.add_edge(*e)).value >= base


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5), graphs(max_n=5))
def test_additive_over_disjoint_union(g1, g2):
    assert exact_dp(g1.disjoint_union(g2)).value == exact_dp(g1).value + exact_dp(g2).value


def test_seeded_random_oracle_equivalence():
    for seed in range(100):
        g = gen.random_graph(7, 0.45, seed)
        assert exact_dp(g).value == brute_force(g).value == branch_and_bound(g).value


def test_brush_number_dispatch():
    g = gen.cycle(5)
    for engine in ("dp", "brute", "bnb"):
        r = brush_number(g, engine)
        assert (r.value, r.method) == (2, engine)
