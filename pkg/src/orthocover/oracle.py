"""Naive reference deciders used to cross-check :mod:`orthocover.search`.

Nothing here shares code with the solver: no vertex ordering heuristic, no
symmetry breaking, no matching lookahead.
"""

from __future__ import annotations

import itertools

from orthocover.graph import Graph


def enumerate_all(g: Graph, num_colours: int, limit: int = 2_000_000) -> list[tuple[int, int]] | None:
    """Test every one of the ``N^(2n)`` assignments; first valid one or ``None``."""
    N, n = num_colours, g.n
    if N ** (2 * n) > limit:
        raise ValueError(f"{N}^{2 * n} assignments exceeds the enumeration limit {limit}")
    edges = g.sorted_edges()
    for flat in itertools.product(range(N), repeat=2 * n):
        pairs = list(zip(flat[0::2], flat[1::2]))
        if len(set(pairs)) != n:
            continue
        if all(pairs[u][0] != pairs[v][0] and pairs[u][1] != pairs[v][1] for u, v in edges):
            return pairs
    return None


def generate_and_test(g: Graph, num_colours: int) -> list[tuple[int, int]] | None:
    """Extend assignments vertex by vertex in id order over all ``N^2`` pairs.

    A prefix is discarded as soon as it breaks a constraint among its own
    vertices, so the result agrees with :func:`enumerate_all`.
    """
    N, n = num_colours, g.n
    if n > N * N:
        return None
    pairs: list[tuple[int, int]] = []
    all_pairs = [(a, b) for a in range(N) for b in range(N)]

    def ok(v: int, pair: tuple[int, int]) -> bool:
        for u in range(v):
            q = pairs[u]
            if q == pair:
                return False
            if g.adjacent(u, v) and (q[0] == pair[0] or q[1] == pair[1]):
                return False
        return True

    def extend(v: int) -> bool:
        if v == n:
            return True
        for pair in all_pairs:
            if ok(v, pair):
                pairs.append(pair)
                if extend(v + 1):
                    return True
                pairs.pop()
        return False

    return list(pairs) if extend(0) else None
