"""Compare the closed form ``2 * sum of out-degrees`` with exact brush numbers of Mycielskians.

The closed form evaluates the out-degree sum over an optimal orientation of
``G``. By the handshake identity that sum is the edge count for *any*
orientation, so the formula always equals ``2 * edges``. The exact side is
computed by a solver engine on ``mycielski(G)``; the report records both and
whether they agree, without assuming either way.
"""

from __future__ import annotations

from dataclasses import dataclass

from brushnumber import generators
from brushnumber.cleaning import greedy_allocation, orientation_cost, simulate
from brushnumber.errors import InvalidInputError
from brushnumber.graph import Graph, MycielskiLabeling, Orientation, directed_mycielski, mycielski
from brushnumber.solver import BrushNumberResult, brush_number, exact_dp


@dataclass(frozen=True)
class TheoremReport:
    name: str
    n: int
    edges: int
    formula_value: int
    exact_value: int
    matches: bool
    optimal_orientation_of_g: Orientation
    brush_number_of_g: int
    exact_witness: tuple[int, ...]
    mu_arrow_cost: int
    engine: str
    labeling: MycielskiLabeling

    @property
    def gap(self) -> int:
        return self.formula_value - self.exact_value


def _require_theorem_input(g: Graph) -> None:
    if g.vertex_count < 2:
        raise InvalidInputError("the closed form is stated for graphs on at least 2 vertices")
    if not g.is_connected():
        raise InvalidInputError("the closed form is stated for connected graphs")


def formula_value(g: Graph, optimal: BrushNumberResult | None = None) -> int:
    """``2 * sum(out_degree(v))`` over an optimal orientation of ``g``."""
    _require_theorem_input(g)
    if optimal is None:
        optimal = exact_dp(g)
    o = optimal.witness_orientation
    value = 2 * sum(o.out_degree(v) for v in g.vertices)
    assert value == 2 * g.edge_count
    return value


def mu_arrow_cost(g: Graph, orient: Orientation) -> int:
    """Orientation cost of the directed Mycielskian built on ``orient``."""
    if not orient.is_acyclic():
        raise InvalidInputError("orientation of G must be acyclic")
    value = orientation_cost(directed_mycielski(g, orient))
    assert value == 2 * g.edge_count
    return value


def verify_theorem(
    g: Graph, engine: str = "dp", cap: int | None = None, name: str = ""
) -> TheoremReport:
    _require_theorem_input(g)
    optimal = exact_dp(g)
    formula = formula_value(g, optimal)
    mu, labeling = mycielski(g)
    exact = brush_number(mu, engine, cap)
    arrow = mu_arrow_cost(g, optimal.witness_orientation)
    return TheoremReport(
        name=name,
        n=g.vertex_count,
        edges=g.edge_count,
        formula_value=formula,
        exact_value=exact.value,
        matches=formula == exact.value,
        optimal_orientation_of_g=optimal.witness_orientation,
        brush_number_of_g=optimal.value,
        exact_witness=exact.witness_order,
        mu_arrow_cost=arrow,
        engine=engine,
        labeling=labeling,
    )


def replay_witness(g: Graph, report: TheoremReport):
    """Clean ``mycielski(g)`` along the report's witness order with its greedy allocation."""
    mu, _ = mycielski(g)
    alloc = greedy_allocation(Orientation.from_order(mu, report.exact_witness))
    return simulate(mu, alloc, list(report.exact_witness))


def standard_corpus() -> dict[str, Graph]:
    """K2, P3, P4, C3, C4, C5, K4 and star(4) = K_{1,3}."""
    return {
        "K2": generators.complete(2),
        "P3": generators.path(3),
        "P4": generators.path(4),
        "C3": generators.cycle(3),
        "C4": generators.cycle(4),
        "C5": generators.cycle(5),
        "K4": generators.complete(4),
        "star4": generators.star(4),
    }


def verify_corpus(
    corpus: dict[str, Graph], engine: str = "dp", cap: int | None = None
) -> list[TheoremReport]:
    return [verify_theorem(g, engine, cap, name) for name, g in corpus.items()]
