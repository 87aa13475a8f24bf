"""Brush-cleaning process on undirected graphs and on orientations.

Initially every edge is dirty. A vertex may *fire* once it holds at least as
many brushes as it has dirty incident edges; firing cleans each of those
edges and pushes one brush along each, leaving any surplus where it is. On
an orientation a vertex additionally waits until all of its in-arcs are
clean, and only cleans out-arcs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping, Sequence, Union

from brushnumber.errors import InvalidInputError
from brushnumber.graph import Edge, Graph, Orientation

Policy = Union[Literal["min-index"], Sequence[int]]


@dataclass(frozen=True)
class BrushAllocation:
    """Initial brush count per vertex."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise InvalidInputError("brush counts must be nonnegative")

    @classmethod
    def zeros(cls, n: int) -> BrushAllocation:
        return cls((0,) * n)

    @classmethod
    def from_mapping(cls, g: Graph, mapping: Mapping[int, int]) -> BrushAllocation:
        counts = [0] * g.vertex_count
        for v, c in mapping.items():
            if not 0 <= v < g.vertex_count:
                raise InvalidInputError(f"unknown vertex {v} in allocation")
            counts[v] = int(c)
        return cls(tuple(counts))

    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, v: int) -> int:
        return self.counts[v]

    def as_dict(self) -> dict[int, int]:
        """Nonzero entries only."""
        return {v: c for v, c in enumerate(self.counts) if c}


@dataclass(frozen=True)
class CleaningStep:
    vertex: int
    cleaned: tuple[Edge, ...]  # (vertex, neighbour): direction the brush travelled
    destinations: tuple[int, ...]
    brushes_after: tuple[int, ...]


@dataclass(frozen=True)
class CleaningTrace:
    initial: BrushAllocation
    steps: tuple[CleaningStep, ...]
    outcome: Literal["cleaned", "stuck"]
    remaining: tuple[Edge, ...]
    directed: bool = False

    @property
    def cleaned(self) -> bool:
        return self.outcome == "cleaned"

    @property
    def sequence(self) -> list[int]:
        """The cleaning sequence: vertices in firing order."""
        return [s.vertex for s in self.steps]

    def cleaned_edges(self) -> set[Edge]:
        return {tuple(sorted(e)) for s in self.steps for e in s.cleaned}

    def travel_arcs(self) -> list[Edge]:
        return [e for s in self.steps for e in s.cleaned]


@dataclass
class CleaningState:
    """Mutable mid-process state. ``orientation`` switches on the directed rule."""

    graph: Graph
    brushes: list[int]
    dirty_edges: set[Edge]
    fired: set[int] = field(default_factory=set)
    orientation: Orientation | None = None

    @classmethod
    def start(cls, g: Graph, alloc: BrushAllocation, orientation: Orientation | None = None) -> CleaningState:
        if len(alloc.counts) != g.vertex_count:
            raise InvalidInputError(
                f"allocation covers {len(alloc.counts)} vertices, graph has {g.vertex_count}"
            )
        return cls(g, list(alloc.counts), set(g.edges), set(), orientation)

    def copy(self) -> CleaningState:
        return CleaningState(self.graph, list(self.brushes), set(self.dirty_edges), set(self.fired), self.orientation)

    def _targets(self, v: int) -> list[int]:
        if self.orientation is None:
            nbrs = self.graph.adjacency[v]
        else:
            nbrs = self.orientation.successors[v]
        return sorted(u for u in nbrs if (min(u, v), max(u, v)) in self.dirty_edges)

    def can_fire(self, v: int) -> bool:
        if v in self.fired:
            return False
        if self.orientation is not None and not self.orientation.predecessors[v] <= self.fired:
            return False
        return self.brushes[v] >= len(self._targets(v))

    def eligible(self) -> list[int]:
        return [v for v in self.graph.vertices if self.can_fire(v)]

    def fire(self, v: int) -> CleaningStep:
        if not self.can_fire(v):
            raise InvalidInputError(f"vertex {v} cannot fire")
        targets = self._targets(v)
        for u in targets:
            self.dirty_edges.discard((min(u, v), max(u, v)))
            self.brushes[v] -= 1
            self.brushes[u] += 1
        self.fired.add(v)
        return CleaningStep(v, tuple((v, u) for u in targets), tuple(targets), tuple(self.brushes))

    def is_clean(self) -> bool:
        return not self.dirty_edges


def _run(state: CleaningState, initial: BrushAllocation, policy: Policy) -> CleaningTrace:
    steps = []
    if isinstance(policy, str):
        if policy != "min-index":
            raise InvalidInputError(f"unknown policy {policy!r}")
        while True:
            ready = state.eligible()
            if not ready:
                break
            steps.append(state.fire(ready[0]))
    else:
        for v in policy:
            if not 0 <= v < state.graph.vertex_count:
                raise InvalidInputError(f"unknown vertex {v} in firing order")
            if not state.can_fire(v):
                break
            steps.append(state.fire(v))
    outcome = "cleaned" if state.is_clean() else "stuck"
    return CleaningTrace(
        initial, tuple(steps), outcome, tuple(sorted(state.dirty_edges)), state.orientation is not None
    )


def simulate(g: Graph, alloc: BrushAllocation, policy: Policy = "min-index") -> CleaningTrace:
    """Run the undirected process.

    ``policy="min-index"`` fires the lowest-id eligible vertex until none is
    left. A sequence of vertex ids fires exactly those vertices in that order
    and stops at the first one that cannot fire.
    """
    return _run(CleaningState.start(g, alloc), alloc, policy)


def directed_simulate(orient: Orientation, alloc: BrushAllocation, policy: Policy = "min-index") -> CleaningTrace:
    return _run(CleaningState.start(orient.base, alloc, orient), alloc, policy)


def min_start_brushes(g: Graph) -> int:
    """Fewest brushes letting *some* vertex fire first: the minimum degree.

    Says nothing about whether the whole graph gets cleaned.
    """
    if g.vertex_count == 0:
        raise InvalidInputError("empty graph has no vertex to start from")
    return g.min_degree()


def orientation_cost(orient: Orientation) -> int:
    return sum(
        max(0, orient.out_degree(v) - orient.in_degree(v)) for v in orient.base.vertices
    )


def is_cleanable(orient: Orientation) -> bool:
    return orient.is_acyclic()


def greedy_allocation(orient: Orientation) -> BrushAllocation:
    """Top each vertex up to its out-degree given the brushes its in-arcs will deliver."""
    return BrushAllocation(
        tuple(max(0, orient.out_degree(v) - orient.in_degree(v)) for v in orient.base.vertices)
    )


def order_allocation(g: Graph, order: Sequence[int]) -> BrushAllocation:
    return greedy_allocation(Orientation.from_order(g, order))


def induced_orientation(g: Graph, trace: CleaningTrace) -> Orientation:
    """Directions in which brushes crossed each edge of a fully cleaned trace."""
    if not trace.cleaned:
        raise InvalidInputError("trace did not clean the graph")
    return Orientation.from_arcs(g, trace.travel_arcs())


def parse_allocation(text: str, g: Graph) -> BrushAllocation:
    """Parse ``"id:count,id:count"``; an empty string means no brushes."""
    mapping: dict[int, int] = {}
    for chunk in filter(None, (c.strip() for c in text.split(","))):
        try:
            v, c = (int(x) for x in chunk.split(":"))
        except ValueError:
            raise InvalidInputError(f"bad allocation entry {chunk!r}; expected id:count") from None
        if c < 0:
            raise InvalidInputError(f"negative brush count in {chunk!r}")
        mapping[v] = mapping.get(v, 0) + c
    return BrushAllocation.from_mapping(g, mapping)


def all_firing_sequences(state: CleaningState) -> Iterable[list[int]]:
    """Every maximal firing sequence from ``state`` (exponential; tiny graphs only)."""
    ready = state.eligible()
    if not ready:
        yield []
        return
    for v in ready:
        nxt = state.copy()
        nxt.fire(v)
        for rest in all_firing_sequences(nxt):
            yield [v, *rest]
