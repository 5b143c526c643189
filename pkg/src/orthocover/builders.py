"""Named graphs and colourings, plus seeded random generators.

Random generators use :class:`random.Random` seeded with the given integer,
so output is reproducible for a fixed seed within this package.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from orthocover.errors import OrthoCoverError
from orthocover.graph import Graph, OrthogonalColouring, Partition

_XYZ = ("x0", "x1", "x2", "y0", "y1", "y2", "z0", "z1", "z2")
_XYZ_PARTITION = Partition(((0, 1, 2), (3, 4, 5), (6, 7, 8)))

# Edge lists read off the drawings, by vertex name.
_EDGES_K3_C6 = [
    ("x2", "y2"), ("x1", "y1"), ("x1", "z1"), ("y1", "z1"), ("x0", "y0"),
    ("y0", "z2"), ("x2", "z2"), ("y2", "z0"), ("x0", "z0"),
]
_EDGES_3K3 = [
    ("x2", "y2"), ("x1", "y1"), ("y1", "z1"), ("x1", "z1"), ("x0", "y0"),
    ("y0", "z2"), ("y2", "z0"), ("x2", "z0"), ("x0", "z2"),
]
_EDGES_C9 = [
    ("x2", "y2"), ("x1", "y1"), ("y1", "z1"), ("x1", "z2"), ("x0", "y0"),
    ("y0", "z2"), ("y2", "z0"), ("x2", "z1"), ("x0", "z0"),
]

# Colour pairs as printed next to each vertex. (base, {name: pair})
_FIXTURES: dict[str, tuple[int, dict[str, tuple[int, int]]]] = {
    "G1": (0, {
        "x2": (0, 0), "y2": (1, 1), "z0": (2, 2),
        "x1": (0, 1), "y1": (1, 2), "z1": (2, 0),
        "x0": (0, 2), "y0": (1, 0), "z2": (2, 1),
    }),
    "G2": (0, {
        "x2": (0, 0), "y2": (1, 1), "z0": (2, 0),
        "x1": (0, 1), "y1": (1, 2), "z1": (2, 1),
        "x0": (0, 2), "y0": (1, 0), "z2": (2, 2),
    }),
    "G3": (0, {
        "x2": (0, 0), "y2": (1, 2), "z0": (2, 1),
        "x1": (0, 1), "y1": (1, 0), "z1": (2, 2),
        "x0": (0, 2), "y0": (2, 0), "z2": (1, 1),
    }),
    # D14: left root x0, right root y0, leaves listed top to bottom.
    "D14": (1, {
        "x0": (1, 1), "y0": (2, 2),
        "x1": (2, 3), "x2": (2, 4), "x3": (3, 2), "x4": (4, 2), "x5": (4, 3), "x6": (4, 4),
        "y1": (1, 3), "y2": (1, 4), "y3": (3, 1), "y4": (4, 1), "y5": (3, 3), "y6": (3, 4),
    }),
}


@dataclass(frozen=True)
class PartiteSpec:
    parts: int
    part_size: int
    matching_size: int
    seed: int = 0


def _named_graph(names: tuple[str, ...], edges: list[tuple[str, str]]) -> Graph:
    idx = {name: i for i, name in enumerate(names)}
    return Graph(len(names), frozenset((idx[a], idx[b]) for a, b in edges), labels=names)


def figure1_graph() -> tuple[Graph, Partition]:
    """The [3,3,3]-partite graph K3 + C6 with no covering w.r.t. its x/y/z classes."""
    return _named_graph(_XYZ, _EDGES_K3_C6), _XYZ_PARTITION


def three_333_graphs() -> list[tuple[str, Graph, Partition]]:
    """``G1 = 3K3``, ``G2 = C9`` and ``G3 = K3 + C6`` with their x/y/z partition."""
    return [
        ("G1", _named_graph(_XYZ, _EDGES_3K3), _XYZ_PARTITION),
        ("G2", _named_graph(_XYZ, _EDGES_C9), _XYZ_PARTITION),
        ("G3", _named_graph(_XYZ, _EDGES_K3_C6), _XYZ_PARTITION),
    ]


def named_graph(name: str) -> Graph:
    """The graph a named fixture colours."""
    if name == "D14":
        return double_star(14)
    for gname, g, _ in three_333_graphs():
        if gname == name:
            return g
    raise OrthoCoverError(f"unknown named graph {name!r}")


def named_colouring(name: str) -> OrthogonalColouring:
    """Colour pairs transcribed from the figures, shifted to 0-based colours."""
    if name not in _FIXTURES:
        raise OrthoCoverError(f"unknown fixture {name!r}; expected one of {sorted(_FIXTURES)}")
    base, by_name = _FIXTURES[name]
    g = named_graph(name)
    pairs = [(a - base, b - base) for a, b in (by_name[g.name(v)] for v in range(g.n))]
    num_colours = 1 + max(max(p) for p in pairs)
    return OrthogonalColouring(num_colours, tuple(pairs))


def double_star(m: int) -> Graph:
    """Two adjacent roots (0 and 1), each with ``m/2 - 1`` leaves.

    x-leaves are ``2..m/2`` and y-leaves ``m/2+1..m-1``.
    """
    if m < 2 or m % 2:
        raise OrthoCoverError(f"double star needs an even m >= 2, got {m}")
    half = m // 2 - 1
    x_leaves = range(2, 2 + half)
    y_leaves = range(2 + half, 2 + 2 * half)
    edges = [(0, 1)] + [(0, v) for v in x_leaves] + [(1, v) for v in y_leaves]
    labels = ("x0", "y0") + tuple(f"x{i}" for i in range(1, half + 1)) + tuple(
        f"y{i}" for i in range(1, half + 1)
    )
    return Graph(m, frozenset(edges), labels=labels)


def subdivided_double_star(n: int) -> Graph:
    """``D_{n^2-1}`` with the root edge subdivided by a new vertex ``n^2 - 1``."""
    if n < 3 or n % 2 == 0:
        raise OrthoCoverError(f"subdivided double star needs odd n >= 3, got {n}")
    base = double_star(n * n - 1)
    mid = base.n
    edges = (base.edges - {(0, 1)}) | {(0, mid), (1, mid)}
    labels = base.labels + ("c",)
    return Graph(base.n + 1, frozenset(edges), labels=labels)


def rook_graph(n: int) -> Graph:
    """``n x n`` board, cell ``(r, c)`` is vertex ``r*n + c``."""
    if n < 0:
        raise OrthoCoverError("rook graph size must be non-negative")
    edges = set()
    for r in range(n):
        for c in range(n):
            for c2 in range(c + 1, n):
                edges.add((r * n + c, r * n + c2))
            for r2 in range(r + 1, n):
                edges.add((r * n + c, r2 * n + c))
    return Graph(n * n, frozenset(edges))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise OrthoCoverError("cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def block_partition(parts: int, size: int) -> Partition:
    """Classes ``{0..size-1}, {size..2*size-1}, ...``."""
    return Partition(tuple(tuple(range(i * size, (i + 1) * size)) for i in range(parts)))


def random_nkk(spec: PartiteSpec) -> tuple[Graph, Partition]:
    """Random ``[n,k,r]``-partite graph on block classes.

    Between each pair of classes an ``r``-subset of each side is drawn and
    joined by a random bijection.
    """
    n, k, r = spec.parts, spec.part_size, spec.matching_size
    if n < 0 or k < 1:
        raise OrthoCoverError(f"need parts >= 0 and part size >= 1, got {n}, {k}")
    if not 0 <= r <= k:
        raise OrthoCoverError(f"matching size {r} must lie in 0..{k}")
    rng = random.Random(spec.seed)
    edges = set()
    for a in range(n):
        for b in range(a + 1, n):
            left = rng.sample(range(k), r)
            right = rng.sample(range(k), r)
            edges.update((a * k + i, b * k + j) for i, j in zip(left, right))
    return Graph(n * k, frozenset(edges)), block_partition(n, k)


def _relabel(n: int, edges: list[tuple[int, int]], rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, frozenset((perm[u], perm[v]) for u, v in edges))


def random_tree(n: int, max_degree_cap: int, seed: int) -> Graph:
    """Random attachment tree with all degrees at most ``max_degree_cap``.

    Each new vertex draws a uniform earlier vertex, redrawing while that
    vertex is saturated (up to ``10n`` draws). Vertex ids are shuffled.
    """
    if n < 0:
        raise OrthoCoverError("tree size must be non-negative")
    need = 0 if n <= 1 else (1 if n == 2 else 2)
    if max_degree_cap < need:
        raise OrthoCoverError(f"a tree on {n} vertices needs max degree cap >= {need}")
    rng = random.Random(seed)
    degree = [0] * n
    edges = []
    for v in range(1, n):
        for _ in range(10 * n):
            u = rng.randrange(v)
            if degree[u] < max_degree_cap:
                break
        else:
            raise OrthoCoverError(f"could not attach vertex {v} within {10 * n} draws")
        degree[u] += 1
        degree[v] += 1
        edges.append((u, v))
    return _relabel(n, edges, rng)


def random_d_degenerate(n: int, d: int, max_degree_cap: int, seed: int) -> Graph:
    """Random graph built by joining each new vertex to up to ``d`` earlier ones.

    Earlier vertices already at ``max_degree_cap`` are never chosen, so the
    result is d-degenerate with maximum degree at most the cap.
    """
    if n < 0 or d < 0:
        raise OrthoCoverError("n and d must be non-negative")
    if max_degree_cap < d:
        raise OrthoCoverError(f"max degree cap {max_degree_cap} is below d={d}")
    rng = random.Random(seed)
    degree = [0] * n
    edges = []
    for v in range(1, n):
        eligible = [u for u in range(v) if degree[u] < max_degree_cap]
        for u in rng.sample(eligible, min(d, len(eligible))):
            degree[u] += 1
            degree[v] += 1
            edges.append((u, v))
    return _relabel(n, edges, rng)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)``."""
    rng = random.Random(seed)
    return Graph(n, frozenset(
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ))


def max_degree_for_bound(n: int, d: int) -> int:
    """Largest max degree ``D`` with ``(2D + 2d + 1)^2 < n``, or -1 if none."""
    return (math.isqrt(n - 1) - 2 * d - 1) // 2 if n > 0 else -1
