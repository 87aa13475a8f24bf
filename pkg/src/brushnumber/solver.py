"""Exact brush numbers.

The brush number is the least orientation cost over acyclic orientations,
and acyclic orientations are exactly the orientations induced by vertex
orders. A vertex placed with ``e`` earlier and ``l`` later neighbours must
start with ``max(0, l - e)`` brushes.

Three engines agree on the value:

* ``brute`` enumerates all ``2**edges`` orientations (vectorised with numpy).
* ``dp`` runs the subset recurrence over placed-vertex sets.
* ``bnb`` searches vertex orders depth first with pruning.

Disconnected graphs are solved per component and summed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from brushnumber.cleaning import orientation_cost
from brushnumber.errors import InvalidInputError, SearchIncomplete, TooLargeError
from brushnumber.graph import Graph, Orientation

log = logging.getLogger(__name__)

Method = Literal["brute", "dp", "bnb", "greedy"]

BRUTE_EDGE_CAP = 24
DP_VERTEX_CAP = 24
_CHUNK = 1 << 16


@dataclass(frozen=True)
class BrushNumberResult:
    value: int
    witness_order: tuple[int, ...]
    witness_orientation: Orientation
    method: Method
    exact: bool = True

    def check(self) -> None:
        """Raise AssertionError if the witness does not realise ``value``."""
        o = self.witness_orientation
        assert o.is_acyclic(), "witness orientation has a directed cycle"
        assert Orientation.from_order(o.base, self.witness_order) == o, "order does not induce orientation"
        assert orientation_cost(o) == self.value, "witness cost differs from value"


def _order_cost_step(adj_masks: Sequence[int], placed: int, v: int) -> int:
    earlier = (adj_masks[v] & placed).bit_count()
    return max(0, (adj_masks[v].bit_count() - earlier) - earlier)


def order_cost(g: Graph, order: Sequence[int]) -> int:
    """Brushes needed when cleaning along ``order``."""
    return orientation_cost(Orientation.from_order(g, order))


def lower_bound_odd(g: Graph) -> int:
    """Half the number of odd-degree vertices, rounded up."""
    odd = sum(d & 1 for d in g.degrees())
    return (odd + 1) // 2


def _result(g: Graph, order: Sequence[int], method: Method, exact: bool = True) -> BrushNumberResult:
    o = Orientation.from_order(g, order)
    return BrushNumberResult(orientation_cost(o), tuple(order), o, method, exact)


def _split(g: Graph) -> list[tuple[Graph, list[int]]]:
    return [g.subgraph(comp) for comp in g.components()]


# -- brute force -------------------------------------------------------


def _brute_component(g: Graph) -> tuple[int, int]:
    """(min cost, smallest encoding achieving it) over acyclic orientations."""
    m, k = g.edge_count, g.vertex_count
    if m == 0:
        return 0, 0
    full = (1 << k) - 1
    best_cost, best_code = None, None
    for start in range(0, 1 << m, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, 1 << m), dtype=np.int64)
        diff = np.zeros((k, codes.size), dtype=np.int64)
        pred = np.zeros((k, codes.size), dtype=np.int64)
        for i, (a, b) in enumerate(g.edge_list):
            bit = (codes >> i) & 1
            sign = 1 - 2 * bit  # +1 when a -> b
            diff[a] += sign
            diff[b] -= sign
            pred[b] |= (1 - bit) << a
            pred[a] |= bit << b
        cost = np.maximum(diff, 0).sum(axis=0)

        remaining = np.full(codes.size, full, dtype=np.int64)
        for _ in range(k):
            sources = np.zeros(codes.size, dtype=np.int64)
            for v in range(k):
                ready = ((remaining >> v) & 1).astype(bool) & ((pred[v] & remaining) == 0)
                sources |= ready.astype(np.int64) << v
            if not sources.any():
                break
            remaining &= ~sources
        acyclic = remaining == 0
        if not acyclic.any():
            continue
        c = int(cost[acyclic].min())
        if best_cost is None or c < best_cost:
            best_cost = c
            best_code = int(codes[np.flatnonzero(acyclic & (cost == c))[0]])
    assert best_cost is not None  # the all-forward orientation is always acyclic
    return best_cost, best_code


def brute_force(g: Graph, cap: int = BRUTE_EDGE_CAP) -> BrushNumberResult:
    """Minimum cost over all acyclic orientations, ties to the smallest bit-encoding."""
    if g.edge_count > cap:
        raise TooLargeError(
            f"brute force enumerates 2**{g.edge_count} orientations; cap is {cap} edges",
            size=g.edge_count, cap=cap,
        )
    arcs = []
    for sub, old in _split(g):
        _, code = _brute_component(sub)
        for t, h in Orientation(sub, code).arcs:
            arcs.append((old[t], old[h]))
    o = Orientation.from_arcs(g, arcs)
    order = o.topological_order()
    return BrushNumberResult(orientation_cost(o), tuple(order), o, "brute")


# -- subset dynamic programme -------------------------------------------


def _dp_component(g: Graph) -> list[int]:
    """Lexicographically smallest optimal order of a connected graph."""
    k = g.vertex_count
    if k == 1:
        return [0]
    full = (1 << k) - 1
    nb = g.adjacency_masks
    deg = [m.bit_count() for m in nb]
    masks = np.arange(1 << k, dtype=np.uint32)
    pc = np.bitwise_count(masks)
    by_size = masks[np.argsort(pc, kind="stable")]
    bounds = np.concatenate(([0], np.cumsum(np.bincount(pc, minlength=k + 1))))
    layers = [by_size[bounds[j]:bounds[j + 1]] for j in range(k + 1)]
    inf = np.iinfo(np.int32).max // 2

    def step_cost(sel: np.ndarray, v: int) -> np.ndarray:
        earlier = np.bitwise_count(sel & np.uint32(nb[v])).astype(np.int32)
        return np.maximum(0, deg[v] - 2 * earlier)

    # prefix table: f[S] = cheapest way to place S first
    f = np.full(1 << k, inf, dtype=np.int32)
    f[0] = 0
    for j in range(k):
        layer = layers[j]
        for v in range(k):
            bit = np.uint32(1 << v)
            sel = layer[(layer & bit) == 0]
            tgt = sel | bit
            f[tgt] = np.minimum(f[tgt], f[sel] + step_cost(sel, v))

    # suffix table: h[S] = cheapest way to finish once S is placed
    h = np.full(1 << k, inf, dtype=np.int32)
    h[full] = 0
    for j in range(k - 1, -1, -1):
        layer = layers[j]
        for v in range(k):
            bit = np.uint32(1 << v)
            sel = layer[(layer & bit) == 0]
            h[sel] = np.minimum(h[sel], step_cost(sel, v) + h[sel | bit])

    value = int(f[full])
    assert int(h[0]) == value, "prefix and suffix tables disagree"

    order, placed = [], 0
    while placed != full:
        for v in range(k):
            if placed >> v & 1:
                continue
            nxt = placed | (1 << v)
            if _order_cost_step(nb, placed, v) + int(h[nxt]) == int(h[placed]):
                order.append(v)
                placed = nxt
                break
    return order


def exact_dp(g: Graph, cap: int = DP_VERTEX_CAP) -> BrushNumberResult:
    if g.vertex_count > cap:
        raise TooLargeError(
            f"subset DP needs 2**{g.vertex_count} states; cap is {cap} vertices",
            size=g.vertex_count, cap=cap,
        )
    order = []
    for sub, old in _split(g):
        order.extend(old[v] for v in _dp_component(sub))
    return _result(g, order, "dp")


# -- heuristics and branch and bound -------------------------------------


def greedy_order(g: Graph) -> list[int]:
    """Repeatedly place the vertex that is cheapest now, preferring many placed neighbours."""
    nb = g.adjacency_masks
    placed, order = 0, []
    for _ in g.vertices:
        v = min(
            (u for u in g.vertices if not placed >> u & 1),
            key=lambda u: (_order_cost_step(nb, placed, u), -(nb[u] & placed).bit_count(), u),
        )
        order.append(v)
        placed |= 1 << v
    return order


def heuristic(g: Graph) -> BrushNumberResult:
    """Greedy upper bound; ``exact`` is False."""
    return _result(g, greedy_order(g), "greedy", exact=False)


class _Budget:
    def __init__(self, limit: int | None) -> None:
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        self.used += 1
        return self.limit is None or self.used <= self.limit


def _bnb_component(g: Graph, budget: _Budget) -> tuple[list[int], bool]:
    k = g.vertex_count
    nb = g.adjacency_masks
    full = (1 << k) - 1
    parity = sum(1 << v for v in range(k) if nb[v].bit_count() & 1)

    best_order = greedy_order(g)
    best = order_cost(g, best_order)
    seen: dict[int, int] = {}
    complete = True

    def bound(placed: int) -> int:
        rest = full & ~placed
        crossing = sum((nb[v] & placed).bit_count() for v in range(k) if rest >> v & 1)
        return max(0, ((parity & rest).bit_count() - crossing + 1) // 2)

    def search(placed: int, cost: int, prefix: list[int]) -> None:
        nonlocal best, best_order, complete
        if placed == full:
            if cost < best:
                best, best_order = cost, list(prefix)
            return
        if cost + bound(placed) >= best:
            return
        if seen.get(placed, best + 1) <= cost:
            return
        seen[placed] = cost
        if not budget.spend():
            complete = False
            return
        children = sorted(
            (_order_cost_step(nb, placed, v), v) for v in range(k) if not placed >> v & 1
        )
        for c, v in children:
            if not complete:
                return
            prefix.append(v)
            search(placed | (1 << v), cost + c, prefix)
            prefix.pop()

    if best > lower_bound_odd(g):
        search(0, 0, [])
    return best_order, complete


def branch_and_bound(g: Graph, budget: int | None = None) -> BrushNumberResult:
    """Depth-first search over vertex orders.

    ``budget`` caps the number of expanded search nodes. When it runs out,
    SearchIncomplete is raised carrying the best order found (an upper bound).
    """
    if budget is not None and budget < 0:
        raise InvalidInputError("budget must be nonnegative")
    tracker = _Budget(budget)
    order, complete = [], True
    for sub, old in _split(g):
        sub_order, ok = _bnb_component(sub, tracker)
        complete &= ok
        order.extend(old[v] for v in sub_order)
    result = _result(g, order, "bnb", exact=complete)
    if not complete:
        raise SearchIncomplete(
            f"budget of {budget} nodes exhausted; best value {result.value} is an upper bound",
            result,
        )
    log.debug("branch and bound expanded %d nodes", tracker.used)
    return result


ENGINES = {"dp": exact_dp, "brute": brute_force, "bnb": branch_and_bound}


def brush_number(g: Graph, engine: str = "dp", cap: int | None = None) -> BrushNumberResult:
    """Dispatch to an exact engine. ``cap`` overrides the engine's default size cap."""
    if engine == "dp":
        return exact_dp(g) if cap is None else exact_dp(g, cap)
    if engine == "brute":
        return brute_force(g) if cap is None else brute_force(g, cap)
    if engine == "bnb":
        if cap is not None and g.vertex_count > cap:
            raise TooLargeError(
                f"graph has {g.vertex_count} vertices; cap is {cap}", size=g.vertex_count, cap=cap
            )
        return branch_and_bound(g)
    raise InvalidInputError(f"unknown engine {engine!r}; choose from {sorted(ENGINES)}")

