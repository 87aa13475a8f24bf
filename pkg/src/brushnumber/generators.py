"""Deterministic graph families.

Every size parameter counts vertices, so ``star(4)`` is K_{1,3}.

``random_graph(n, p, seed)`` is a G(n, p) sample drawn with CPython's
``random.Random(seed)`` (MT19937, ``random()`` = 53-bit ``genrand_res53``).
Candidate pairs are visited in lexicographic order ``(0,1), (0,2), ...,
(n-2,n-1)``; one draw per pair, and the edge is kept when the draw is ``< p``.
"""

from __future__ import annotations

import random
from typing import Callable

from brushnumber.errors import InvalidInputError
from brushnumber.graph import Graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidInputError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, frozenset({(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}))


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def star(n: int) -> Graph:
    """Centre 0 joined to leaves ``1..n-1``."""
    _need(n >= 2, "star needs n >= 2")
    return Graph(n, frozenset((0, i) for i in range(1, n)))


def random_graph(n: int, p: float, seed: int) -> Graph:
    _need(n >= 1, "random graph needs n >= 1")
    _need(0.0 <= p <= 1.0, "edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, frozenset(edges))


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """First connected sample among ``random_graph(n, p, seed + t)`` for t = 0, 1, ..."""
    _need(n >= 1, "random graph needs n >= 1")
    _need(0.0 < p <= 1.0, "connected sampling needs p > 0")
    t = 0
    while True:
        g = random_graph(n, p, seed + t)
        if g.is_connected():
            return g
        t += 1


GENERATORS: dict[str, Callable[..., Graph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "random": random_graph,
}


def generate(kind: str, *params) -> Graph:
    """Dispatch by family name, e.g. ``generate("random", 6, 0.5, 7)``."""
    try:
        fn = GENERATORS[kind]
    except KeyError:
        raise InvalidInputError(f"unknown graph kind {kind!r}; choose from {sorted(GENERATORS)}") from None
    expected = 3 if kind == "random" else 1
    _need(len(params) == expected, f"{kind} takes {expected} parameter(s), got {len(params)}")
    if kind == "random":
        n, p, seed = params
        return random_graph(int(n), float(p), int(seed))
    return fn(int(params[0]))
