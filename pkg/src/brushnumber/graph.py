"""Simple undirected graphs, orientations and the Mycielski transforms.

Vertices are the dense integers ``0..n-1``. Edges are stored as ``(u, v)``
pairs with ``u < v``; the *canonical edge order* is the sorted order of those
pairs and is what edge indices and orientation bit-encodings refer to.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from brushnumber.errors import InvalidInputError

Edge = tuple[int, int]
Arc = tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """An immutable simple undirected graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidInputError("vertex_count must be nonnegative")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidInputError(f"edge ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}")
            canon.add(_canon(u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph, rejecting loops and repeated edges (in either direction)."""
        seen: set[Edge] = set()
        for u, v in edges:
            e = _canon(int(u), int(v))
            if e in seen:
                raise InvalidInputError(f"duplicate edge {e}")
            seen.add(e)
        return cls(vertex_count, frozenset(seen))

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in canonical (sorted) order."""
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an integer bitmask."""
        return tuple(sum(1 << u for u in nb) for nb in self.adjacency)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    def min_degree(self) -> int:
        if self.vertex_count == 0:
            raise InvalidInputError("minimum degree of the empty graph is undefined")
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self.edges

    def non_edges(self) -> list[Edge]:
        return [
            (u, v)
            for u in range(self.vertex_count)
            for v in range(u + 1, self.vertex_count)
            if (u, v) not in self.edges
        ]

    # -- structure -----------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.vertex_count > 0 and len(self.components()) == 1

    def subgraph(self, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the new->old id map."""
        old = list(vertices)
        new_id = {v: i for i, v in enumerate(old)}
        edges = [
            (new_id[u], new_id[v])
            for u, v in self.edges
            if u in new_id and v in new_id
        ]
        return Graph(len(old), frozenset(_canon(u, v) for u, v in edges)), old

    def add_edge(self, u: int, v: int) -> Graph:
        if self.has_edge(u, v):
            raise InvalidInputError(f"edge {_canon(u, v)} already present")
        return Graph(self.vertex_count, self.edges | {_canon(u, v)})

    def disjoint_union(self, other: Graph) -> Graph:
        """``self`` followed by ``other`` with its ids shifted by ``self.vertex_count``."""
        k = self.vertex_count
        shifted = {(u + k, v + k) for u, v in other.edges}
        return Graph(k + other.vertex_count, self.edges | shifted)

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, edges={list(self.edge_list)})"


@dataclass(frozen=True)
class Orientation:
    """One direction per edge of ``base``.

    ``reversed_bits`` bit *i* is 0 when canonical edge *i* ``(u, v)`` points
    ``u -> v`` (smaller to larger id) and 1 when it points ``v -> u``. That
    integer is the orientation's bit-encoding.
    """

    base: Graph
    reversed_bits: int = 0

    def __post_init__(self) -> None:
        if self.reversed_bits < 0 or self.reversed_bits >> self.base.edge_count:
            raise InvalidInputError("orientation encoding has bits beyond the edge count")

    @classmethod
    def from_arcs(cls, base: Graph, arcs: Iterable[Arc]) -> Orientation:
        bits = 0
        seen = set()
        for tail, head in arcs:
            e = _canon(tail, head)
            idx = base.edge_index.get(e)
            if idx is None:
                raise InvalidInputError(f"arc ({tail}, {head}) is not an edge of the base graph")
            if idx in seen:
                raise InvalidInputError(f"edge {e} given two directions")
            seen.add(idx)
            if tail > head:
                bits |= 1 << idx
        if len(seen) != base.edge_count:
            raise InvalidInputError(
                f"orientation covers {len(seen)} of {base.edge_count} edges"
            )
        return cls(base, bits)

    @classmethod
    def from_order(cls, base: Graph, order: Sequence[int]) -> Orientation:
        """Point every edge from the endpoint that comes first in ``order``."""
        if sorted(order) != list(base.vertices):
            raise InvalidInputError("order must be a permutation of the vertices")
        pos = {v: i for i, v in enumerate(order)}
        bits = 0
        for i, (u, v) in enumerate(base.edge_list):
            if pos[v] < pos[u]:
                bits |= 1 << i
        return cls(base, bits)

    @cached_property
    def arcs(self) -> tuple[Arc, ...]:
        """``(tail, head)`` pairs in canonical edge order."""
        return tuple(
            (v, u) if self.reversed_bits >> i & 1 else (u, v)
            for i, (u, v) in enumerate(self.base.edge_list)
        )

    @cached_property
    def successors(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in self.base.vertices]
        for t, h in self.arcs:
            out[t].add(h)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def predecessors(self) -> tuple[frozenset[int], ...]:
        inn: list[set[int]] = [set() for _ in self.base.vertices]
        for t, h in self.arcs:
            inn[h].add(t)
        return tuple(frozenset(s) for s in inn)

    def out_degree(self, v: int) -> int:
        return len(self.successors[v])

    def in_degree(self, v: int) -> int:
        return len(self.predecessors[v])

    def direction(self, u: int, v: int) -> Arc:
        idx = self.base.edge_index[_canon(u, v)]
        return self.arcs[idx]

    def topological_order(self) -> list[int] | None:
        """Kahn's algorithm taking the smallest available id first; None if cyclic."""
        indeg = [self.in_degree(v) for v in self.base.vertices]
        heap = [v for v in self.base.vertices if indeg[v] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            v = heapq.heappop(heap)
            order.append(v)
            for h in self.successors[v]:
                indeg[h] -= 1
                if indeg[h] == 0:
                    heapq.heappush(heap, h)
        return order if len(order) == self.base.vertex_count else None

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def __repr__(self) -> str:
        return f"Orientation(n={self.base.vertex_count}, arcs={list(self.arcs)})"


@dataclass(frozen=True)
class MycielskiLabeling:
    """Which vertices of a Mycielskian are originals ``v_i``, shadows ``x_i`` and the root ``w``."""

    original: tuple[int, ...]
    shadow: tuple[int, ...]
    root: int

    def __post_init__(self) -> None:
        if len(self.original) != len(self.shadow):
            raise InvalidInputError("original and shadow groups differ in size")
        groups = set(self.original) | set(self.shadow) | {self.root}
        if len(groups) != 2 * len(self.original) + 1:
            raise InvalidInputError("labeling groups overlap")

    def group(self, vertex: int) -> str:
        """``'v'``, ``'x'`` or ``'w'``."""
        if vertex == self.root:
            return "w"
        if vertex in self.shadow:
            return "x"
        if vertex in self.original:
            return "v"
        raise InvalidInputError(f"vertex {vertex} is not labelled")

    def name(self, vertex: int) -> str:
        """Display name: ``v0``, ``x3``, ``w`` (indices are 0-based positions in the group)."""
        g = self.group(vertex)
        if g == "w":
            return "w"
        seq = self.original if g == "v" else self.shadow
        return f"{g}{seq.index(vertex)}"


def _check_mycielski_input(g: Graph) -> None:
    if g.vertex_count < 2:
        raise InvalidInputError("Mycielski construction needs at least 2 vertices")
    if g.edge_count == 0:
        raise InvalidInputError("Mycielski construction needs at least one edge")


def mycielski(g: Graph) -> tuple[Graph, MycielskiLabeling]:
    """The Mycielskian of ``g``: originals keep ids, ``x_i = i + n``, ``w = 2n``."""
    _check_mycielski_input(g)
    n = g.vertex_count
    w = 2 * n
    edges = set(g.edges)
    for a, b in g.edges:
        edges.add(_canon(a, b + n))
        edges.add(_canon(b, a + n))
    for i in range(n):
        edges.add((i + n, w))
    labeling = MycielskiLabeling(tuple(range(n)), tuple(range(n, 2 * n)), w)
    return Graph(2 * n + 1, frozenset(edges)), labeling


def directed_mycielski(g: Graph, orient: Orientation) -> Orientation:
    """Orient ``mycielski(g)``: ``orient`` on the originals, ``v_i -> x_j`` and ``x_i -> w``."""
    if orient.base != g:
        raise InvalidInputError("orientation does not belong to the given graph")
    mu, _ = mycielski(g)
    n = g.vertex_count
    arcs = list(orient.arcs)
    for a, b in g.edges:
        arcs.append((a, b + n))
        arcs.append((b, a + n))
    arcs.extend((i + n, 2 * n) for i in range(n))
    return Orientation.from_arcs(mu, arcs)


def iterated_mycielski(g: Graph, k: int) -> tuple[Graph, list[MycielskiLabeling]]:
    """Apply ``mycielski`` ``k`` times; the labeling of each round is kept in order."""
    if k < 1:
        raise InvalidInputError("k must be at least 1")
    history = []
    for _ in range(k):
        g, lab = mycielski(g)
        history.append(lab)
    return g, history
