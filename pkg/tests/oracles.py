"""Reference computations that share no code with the package under test.

``brush_number_by_allocations`` works from the definition of the cleaning
process: it tries every allocation of ``t`` brushes for t = 0, 1, ... and runs
its own firing loop. ``min_cost_by_orientations`` enumerates orientations with
``itertools.product`` and a DFS cycle test.
"""

from __future__ import annotations

import itertools


def _cleans(n: int, edges: list[tuple[int, int]], alloc: tuple[int, ...]) -> bool:
    brushes = list(alloc)
    dirty = set(edges)
    fired = set()
    progress = True
    while progress:
        progress = False
        for v in range(n):
            if v in fired:
                continue
            inc = [e for e in dirty if v in e]
            if brushes[v] >= len(inc):
                for e in inc:
                    dirty.discard(e)
                    other = e[0] if e[1] == v else e[1]
                    brushes[v] -= 1
                    brushes[other] += 1
                fired.add(v)
                progress = True
    return not dirty


def compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative ints summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


def brush_number_by_allocations(n: int, edges: list[tuple[int, int]]) -> int:
    edges = [tuple(sorted(e)) for e in edges]
    for t in itertools.count():
        if any(_cleans(n, edges, a) for a in compositions(t, n)):
            return t


def _has_cycle(n: int, arcs: list[tuple[int, int]]) -> bool:
    succ = {v: [] for v in range(n)}
    for a, b in arcs:
        succ[a].append(b)
    state = [0] * n

    def visit(v: int) -> bool:
        state[v] = 1
        for w in succ[v]:
            if state[w] == 1 or (state[w] == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in range(n))


def min_cost_by_orientations(n: int, edges: list[tuple[int, int]]) -> int:
    best = None
    for flips in itertools.product((False, True), repeat=len(edges)):
        arcs = [(b, a) if f else (a, b) for (a, b), f in zip(edges, flips)]
        if _has_cycle(n, arcs):
            continue
        out = [0] * n
        inn = [0] * n
        for a, b in arcs:
            out[a] += 1
            inn[b] += 1
        cost = sum(max(0, out[v] - inn[v]) for v in range(n))
        best = cost if best is None else min(best, cost)
    return 0 if best is None else best


def mycielski_edges(n: int, edges: list[tuple[int, int]]) -> tuple[int, list[tuple[int, int]]]:
    """Independent transcription of the construction with x_i = i + n, w = 2n."""
    out = list(edges)
    for a, b in edges:
        out.append((a, b + n))
        out.append((b, a + n))
    out.extend((i + n, 2 * n) for i in range(n))
    return 2 * n + 1, [tuple(sorted(e)) for e in out]
