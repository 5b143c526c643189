"""Polynomial-time constructions of orthogonal colourings.

* :func:`hall_covering` covers ``[n,k,k]``-partite graphs with ``n <= ceil(k/2)``
  by choosing a system of distinct representatives class by class.
* :func:`double_star_colouring` colours the double star ``D_m`` with
  ``ceil(sqrt(m))`` colours whenever that is possible.
* :func:`degenerate_swap_colouring` colours sparse d-degenerate graphs with
  ``ceil(sqrt(n))`` colours by inserting vertices in degenerate order and
  swapping colour pairs to repair conflicts.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from orthocover.errors import InvariantViolation, OrthoCoverError, PreconditionError
from orthocover.graph import (
    Covering,
    Graph,
    OrthogonalColouring,
    Partition,
    colouring_violation,
    lower_bound,
    partite_violation,
    stats,
)
from orthocover.matching import max_matching, to_mask


class ConstructionFailed(OrthoCoverError):
    """A forced run outside a construction's guarantee did not succeed."""


def availability(g: Graph, cls: Sequence[int], f2: Mapping[int, int], k: int) -> list[frozenset[int]]:
    """Colours in ``0..k-1`` not yet used on a coloured neighbour, per vertex of ``cls``."""
    return [
        frozenset(range(k)) - {f2[w] for w in g.neighbours(v) if w in f2}
        for v in cls
    ]


def hall_covering(g: Graph, p: Partition) -> tuple[OrthogonalColouring, Covering]:
    """Independent covering of an ``[n,k,k]``-partite graph w.r.t. its partition.

    The first colour of every vertex is its class index. The second colour is
    the position within the first class, and for each later class a perfect
    matching between its vertices and their available colours.
    """
    n = len(p)
    if n == 0:
        p.check(g.n)
        return OrthogonalColouring(0, ()), Covering(())
    k = len(p.classes[0])
    problem = partite_violation(g, p, r=k)
    if problem is not None:
        raise PreconditionError(f"not an [n,k,k]-partite graph: {problem}")
    if n > (k + 1) // 2 and n > 1:
        raise PreconditionError(f"{n} classes of size {k} exceeds ceil(k/2) = {(k + 1) // 2}")

    f2: dict[int, int] = {v: j for j, v in enumerate(p.classes[0])}
    for m in range(1, n):
        cls = p.classes[m]
        avail = availability(g, cls, f2, k)
        for v, colours in zip(cls, avail):
            if len(colours) < k - m:
                raise InvariantViolation(
                    f"vertex {v} has {len(colours)} available colours, expected >= {k - m}"
                )
        chosen = max_matching([to_mask(c) for c in avail])
        if -1 in chosen:
            raise InvariantViolation(f"matching not perfect on class {m}")
        f2.update(zip(cls, chosen))

    f1 = p.class_of()
    colouring = OrthogonalColouring(max(n, k), tuple((f1[v], f2[v]) for v in range(g.n)))
    by_colour: list[list[int]] = [[] for _ in range(k)]
    for cls in p.classes:
        for v in cls:
            by_colour[f2[v]].append(v)
    return colouring, Covering(tuple(tuple(t) for t in by_colour))


def _double_star_leaf_pairs(N: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Leaf pairs (1-based colours) for the largest colourable double star.

    Roots are ``(1,1)`` and ``(2,2)``. Returns the x-side and y-side leaf
    sequences for ``m = N^2 - 2`` (N even) or ``N^2 - 3`` (N odd).
    """
    xs: list[tuple[int, int]] = []
    ys: list[tuple[int, int]] = []
    for i in range(1, N - 1):
        xs.append((2, i + 2))
        ys.append((1, i + 2))
    for j in range(N - 1, 2 * N - 3):
        xs.append((j - N + 4, 2))
        ys.append((j - N + 4, 1))
    shared = [(r, s) for r in range(3, N + 1) for s in range(3, N + 1)]
    if N % 2:
        shared.remove((N, N))
    for idx, pair in enumerate(shared):
        (xs if idx % 2 == 0 else ys).append(pair)
    return xs, ys


def double_star_colouring(m: int) -> OrthogonalColouring:
    """Orthogonal colouring of :func:`~orthocover.builders.double_star` ``(m)``
    with ``N = ceil(sqrt(m))`` colours. Requires ``m < N^2 - 1``."""
    if m < 2 or m % 2:
        raise OrthoCoverError(f"double star needs an even m >= 2, got {m}")
    N = lower_bound(m)
    if m >= N * N - 1:
        raise PreconditionError(
            f"D_{m} has no orthogonal colouring with {N} colours (m >= N^2 - 1); "
            f"it requires N+1 = {N + 1} colours"
        )
    xs, ys = _double_star_leaf_pairs(N)
    half = m // 2 - 1
    pairs = [(1, 1), (2, 2)] + xs[:half] + ys[:half]
    return OrthogonalColouring(N, tuple((a - 1, b - 1) for a, b in pairs))


@dataclass(frozen=True)
class SwapContext:
    """Sets built when the vertex at position ``t`` conflicts with an earlier neighbour.

    ``conflict_set`` holds every vertex sharing a colour with an earlier
    neighbour, ``same_colour_set`` every other vertex sharing a colour with
    the current one, ``blocked`` the neighbours of those, and ``candidates``
    the vertices in none of these.
    """

    t: int
    vertex: int
    earlier_neighbours: tuple[int, ...]
    conflict_set: frozenset[int]
    same_colour_set: frozenset[int]
    blocked: frozenset[int]
    candidates: frozenset[int]
    chosen: int | None


def swap_precondition_holds(max_degree: int, degeneracy: int, n: int) -> bool:
    """``(2*max_degree + 2*degeneracy + 1)^2 < n``, in exact integers."""
    return (2 * max_degree + 2 * degeneracy + 1) ** 2 < n


def degenerate_swap_colouring(
    g: Graph,
    *,
    force: bool = False,
    check_invariants: bool = False,
    trace: list[SwapContext] | None = None,
) -> OrthogonalColouring:
    """Colour ``g`` with ``ceil(sqrt(n))`` colours by degenerate-order swapping.

    Starts from distinct pairs laid out row-major by vertex id, then visits
    vertices in the degenerate ordering of :func:`~orthocover.graph.stats`.
    When the current vertex shares a colour with an earlier neighbour, its
    pair is exchanged with that of the smallest-id vertex that clashes with
    no earlier neighbour and has no neighbour sharing a colour with it.

    Raises :class:`PreconditionError` unless ``(2D + 2d + 1)^2 < n``; with
    ``force=True`` the construction is attempted anyway and a failure is
    reported as :class:`ConstructionFailed`. ``check_invariants`` verifies
    the per-step guarantees, and ``trace`` collects one
    :class:`SwapContext` per conflicting step.
    """
    n = g.n
    if n == 0:
        return OrthogonalColouring(0, ())
    st = stats(g)
    d, delta = st.degeneracy, st.max_degree
    guaranteed = swap_precondition_holds(delta, d, n)
    if not guaranteed and not force:
        raise PreconditionError(
            f"needs (2*{delta} + 2*{d} + 1)^2 < {n}; use force=True to attempt anyway"
        )
    N = lower_bound(n)
    pairs = [divmod(v, N) for v in range(n)]
    initial = Counter(pairs)
    by_first: list[set[int]] = [set() for _ in range(N)]
    by_second: list[set[int]] = [set() for _ in range(N)]
    for v, (a, b) in enumerate(pairs):
        by_first[a].add(v)
        by_second[b].add(v)
    order = st.degenerate_ordering
    pos = {v: i for i, v in enumerate(order)}
    edges = g.sorted_edges()

    def fail(msg: str) -> Exception:
        return InvariantViolation(msg) if guaranteed else ConstructionFailed(msg)

    for t, v in enumerate(order):
        earlier = sorted(u for u in g.neighbours(v) if pos[u] < t)
        if len(earlier) > d:
            raise InvariantViolation(f"{v} has {len(earlier)} earlier neighbours, degeneracy {d}")
        a, b = pairs[v]
        if any(pairs[u][0] == a or pairs[u][1] == b for u in earlier):
            conflict: set[int] = set()
            for u in earlier:
                conflict |= by_first[pairs[u][0]] | by_second[pairs[u][1]]
            same = (by_first[a] | by_second[b]) - {v}
            blocked: set[int] = set()
            for y in same:
                blocked |= g.neighbours(y)
            candidates = frozenset(range(n)) - conflict - blocked
            x = min(candidates) if candidates else None
            if trace is not None:
                trace.append(SwapContext(t, v, tuple(earlier), frozenset(conflict),
                                         frozenset(same), frozenset(blocked), candidates, x))
            if check_invariants:
                if len(conflict) > 2 * len(earlier) * N:
                    raise InvariantViolation(f"step {t}: |W| = {len(conflict)} > {2 * len(earlier) * N}")
                if len(same) > 2 * (N - 1):
                    raise InvariantViolation(f"step {t}: |Y| = {len(same)} > {2 * (N - 1)}")
                if v not in conflict:
                    raise InvariantViolation(f"step {t}: conflicting vertex not in W")
            if x is None:
                raise fail(f"step {t}: no vertex can exchange pairs with {g.name(v)}")
            px = pairs[x]
            for w, old, new in ((v, (a, b), px), (x, px, (a, b))):
                by_first[old[0]].discard(w)
                by_second[old[1]].discard(w)
                by_first[new[0]].add(w)
                by_second[new[1]].add(w)
                pairs[w] = new
        if check_invariants:
            if Counter(pairs) != initial:
                raise InvariantViolation(f"step {t}: colour pair multiset changed")
            for p, q in edges:
                if pos[p] <= t and pos[q] <= t and (
                    pairs[p][0] == pairs[q][0] or pairs[p][1] == pairs[q][1]
                ):
                    raise InvariantViolation(f"step {t}: edge {p}-{q} improper in prefix graph")

    colouring = OrthogonalColouring(N, tuple(pairs))
    problem = colouring_violation(g, colouring)
    if problem is not None:
        raise fail(f"final colouring invalid: {problem}")
    return colouring
