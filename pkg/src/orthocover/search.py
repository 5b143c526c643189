"""Budgeted exhaustive searches for orthogonal colourings and coverings.

All searches count one node per tentative assignment and stop with an
``INCONCLUSIVE`` outcome once the budget is spent. ``PROVED_NONE`` is only
reported after the whole (symmetry-reduced) search space was exhausted.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from typing import Generic, TypeVar

from orthocover.errors import OrthoCoverError, SearchInconclusive
from orthocover.graph import Covering, Graph, OrthogonalColouring, Partition, lower_bound
from orthocover.matching import bits, has_saturating_matching

T = TypeVar("T")

DEFAULT_BUDGET = 10**8


class Status(enum.Enum):
    FOUND = "found"
    PROVED_NONE = "proved_none"
    INCONCLUSIVE = "inconclusive"


@dataclass
class SearchBudget:
    """Node limit shared by every search it is passed to."""

    max_nodes: int = DEFAULT_BUDGET
    used: int = 0

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise OrthoCoverError("budget must allow at least one node")

    def spend(self) -> bool:
        """Consume one node; False once the limit has been reached."""
        if self.used >= self.max_nodes:
            return False
        self.used += 1
        return True

    @property
    def exhausted(self) -> bool:
        return self.used >= self.max_nodes


@dataclass(frozen=True)
class SearchOutcome(Generic[T]):
    status: Status
    witness: T | None = None
    nodes_used: int = 0

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


def _as_budget(budget: SearchBudget | int | None) -> SearchBudget:
    if budget is None:
        return SearchBudget()
    if isinstance(budget, int):
        return SearchBudget(budget)
    return budget


def search_order(g: Graph) -> list[int]:
    """Descending degree, ties by vertex id."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def find_orthogonal_colouring(
    g: Graph, num_colours: int, budget: SearchBudget | int | None = None
) -> SearchOutcome[OrthogonalColouring]:
    """Decide whether ``g`` has an orthogonal colouring with ``num_colours`` colours.

    Vertices are assigned in :func:`search_order`. Colours in each coordinate
    are introduced in order of first use (so the first vertex gets ``(0, 0)``),
    which is sound because each coordinate may be permuted independently.
    After every assignment the remaining vertices must still be matchable to
    distinct unused pairs compatible with their coloured neighbours.
    """
    N = num_colours
    if N < 1:
        raise OrthoCoverError(f"colour count must be positive, got {N}")
    budget = _as_budget(budget)
    start = budget.used
    n = g.n
    if n == 0:
        return SearchOutcome(Status.FOUND, OrthogonalColouring(N, ()), 0)
    if n > N * N:
        return SearchOutcome(Status.PROVED_NONE, None, 0)

    order = search_order(g)
    row = [sum(1 << (a * N + b) for b in range(N)) for a in range(N)]
    col = [sum(1 << (a * N + b) for a in range(N)) for b in range(N)]
    ban1 = [[0] * N for _ in range(n)]
    ban2 = [[0] * N for _ in range(n)]
    pair_at = [-1] * n
    free = (1 << (N * N)) - 1
    max1 = [-1] * (n + 1)
    max2 = [-1] * (n + 1)

    def allowed(v: int) -> int:
        m = free
        b1, b2 = ban1[v], ban2[v]
        for c in range(N):
            if b1[c]:
                m &= ~row[c]
            if b2[c]:
                m &= ~col[c]
        return m

    def assign(v: int, p: int, delta: int) -> None:
        nonlocal free
        a, b = divmod(p, N)
        for w in g.neighbours(v):
            ban1[w][a] += delta
            ban2[w][b] += delta
        free ^= 1 << p
        pair_at[v] = p if delta > 0 else -1

    def candidates(i: int) -> Iterator[int]:
        lim1, lim2 = max1[i] + 1, max2[i] + 1
        return iter([p for p in bits(allowed(order[i])) if p // N <= lim1 and p % N <= lim2])

    def feasible(i: int) -> bool:
        domains = []
        for v in order[i:]:
            d = allowed(v)
            if not d:
                return False
            domains.append(d)
        return has_saturating_matching(domains)

    stack = [candidates(0)]
    while stack:
        i = len(stack) - 1
        v = order[i]
        if pair_at[v] >= 0:
            assign(v, pair_at[v], -1)
        p = next(stack[i], None)
        if p is None:
            stack.pop()
            continue
        if not budget.spend():
            return SearchOutcome(Status.INCONCLUSIVE, None, budget.used - start)
        assign(v, p, 1)
        a, b = divmod(p, N)
        max1[i + 1] = max(max1[i], a)
        max2[i + 1] = max(max2[i], b)
        if i + 1 == n:
            pairs = tuple(divmod(pair_at[u], N) for u in range(n))
            return SearchOutcome(Status.FOUND, OrthogonalColouring(N, pairs), budget.used - start)
        if feasible(i + 1):
            stack.append(candidates(i + 1))
    return SearchOutcome(Status.PROVED_NONE, None, budget.used - start)


def ochi(g: Graph, budget: SearchBudget | int | None = None) -> tuple[int, OrthogonalColouring]:
    """Orthogonal chromatic number with a witness.

    Tries ``N = ceil(sqrt(n)), ceil(sqrt(n)) + 1, ...``; the budget is shared
    across all attempts. Raises :class:`SearchInconclusive` if it runs out.
    """
    budget = _as_budget(budget)
    if g.n == 0:
        return 0, OrthogonalColouring(0, ())
    N = lower_bound(g.n)
    while True:
        outcome = find_orthogonal_colouring(g, N, budget)
        if outcome.status is Status.FOUND:
            assert outcome.witness is not None
            return N, outcome.witness
        if outcome.status is Status.INCONCLUSIVE:
            raise SearchInconclusive(budget.used, f"deciding N={N}")
        N += 1


def perfect_orthogonal_check(g: Graph, budget: SearchBudget | int | None = None) -> bool:
    """True iff a graph on ``s^2`` vertices has an orthogonal colouring with ``s`` colours."""
    s = math.isqrt(g.n)
    if s * s != g.n:
        raise OrthoCoverError(f"vertex count {g.n} is not a perfect square")
    if s == 0:
        return True
    budget = _as_budget(budget)
    outcome = find_orthogonal_colouring(g, s, budget)
    if outcome.status is Status.INCONCLUSIVE:
        raise SearchInconclusive(budget.used, f"deciding N={s}")
    return outcome.status is Status.FOUND


def _covering_shape(g: Graph, p: Partition) -> int:
    p.check(g.n)
    sizes = {len(c) for c in p.classes}
    if len(sizes) > 1:
        raise OrthoCoverError(f"partition classes have unequal sizes {sorted(sizes)}")
    for i, cls in enumerate(p.classes):
        members = set(cls)
        if any(g.neighbours(v) & members for v in cls):
            raise OrthoCoverError(f"class {i} is not an independent set")
    return sizes.pop() if sizes else 0


def find_independent_covering(
    g: Graph, p: Partition, budget: SearchBudget | int | None = None
) -> SearchOutcome[Covering]:
    """Decide whether ``g`` has an independent covering with respect to ``p``.

    Vertices are placed class by class into ``k`` transversals. A transversal
    may take at most one vertex per class and never two adjacent vertices.
    The first class is placed into ``T_0..T_{k-1}`` in order, which loses no
    generality since transversals are interchangeable.
    """
    k = _covering_shape(g, p)
    budget = _as_budget(budget)
    start = budget.used
    if g.n == 0:
        return SearchOutcome(Status.FOUND, Covering(()), 0)

    where = [-1] * g.n
    members: list[set[int]] = [set() for _ in range(k)]
    for j, v in enumerate(p.classes[0]):
        where[v] = j
        members[j].add(v)
    rest = [(i, v) for i, cls in enumerate(p.classes) if i > 0 for v in cls]
    used_by_class = [0] * len(p)
    used_by_class[0] = (1 << k) - 1

    def candidates(idx: int) -> Iterator[int]:
        cls, v = rest[idx]
        nbrs = g.neighbours(v)
        return iter([t for t in range(k)
                     if not used_by_class[cls] >> t & 1 and not members[t] & nbrs])

    def place(idx: int, t: int, on: bool) -> None:
        cls, v = rest[idx]
        used_by_class[cls] ^= 1 << t
        if on:
            members[t].add(v)
            where[v] = t
        else:
            members[t].discard(v)
            where[v] = -1

    def result() -> Covering:
        return Covering(tuple(tuple(sorted(m)) for m in members))

    if not rest:
        return SearchOutcome(Status.FOUND, result(), 0)
    stack = [candidates(0)]
    while stack:
        idx = len(stack) - 1
        v = rest[idx][1]
        if where[v] >= 0:
            place(idx, where[v], False)
        t = next(stack[idx], None)
        if t is None:
            stack.pop()
            continue
        if not budget.spend():
            return SearchOutcome(Status.INCONCLUSIVE, None, budget.used - start)
        place(idx, t, True)
        if idx + 1 == len(rest):
            return SearchOutcome(Status.FOUND, result(), budget.used - start)
        stack.append(candidates(idx + 1))
    return SearchOutcome(Status.PROVED_NONE, None, budget.used - start)


@dataclass(frozen=True)
class Propagation:
    """Result of forced-move propagation on a partial covering."""

    assignment: dict[int, int]
    forced: tuple[tuple[int, int], ...] = ()
    contradiction: str | None = None
    conflict_vertex: int | None = None
    undecided: tuple[int, ...] = field(default=())


def propagate_transversals(g: Graph, p: Partition, fixed: Mapping[int, int]) -> Propagation:
    """Apply forced placements until a contradiction or a fixpoint.

    A vertex is forced when exactly one transversal can take it (no classmate
    and no neighbour already there). A transversal is forced onto a vertex
    when it is the only vertex of a class that can still go there.
    """
    k = _covering_shape(g, p)
    class_of = p.class_of()
    where: dict[int, int] = dict(fixed)
    forced: list[tuple[int, int]] = []

    def domain(v: int) -> list[int]:
        return [t for t in range(k)
                if not any(where.get(u) == t for u in p.classes[class_of[v]] if u != v)
                and not any(where.get(u) == t for u in g.neighbours(v))]

    for v, t in fixed.items():
        if t not in domain(v):
            return Propagation(where, (), f"fixed placement of {g.name(v)} in T_{t} is infeasible", v)

    while True:
        progress = False
        for v in range(g.n):
            if v in where:
                continue
            dom = domain(v)
            if not dom:
                return Propagation(where, tuple(forced),
                                   f"{g.name(v)} fits in no transversal", v)
            if len(dom) == 1:
                where[v] = dom[0]
                forced.append((v, dom[0]))
                progress = True
                break
        if progress:
            continue
        for i, cls in enumerate(p.classes):
            for t in range(k):
                if any(where.get(u) == t for u in cls):
                    continue
                able = [u for u in cls if u not in where and t in domain(u)]
                if not able:
                    return Propagation(where, tuple(forced),
                                       f"no vertex of class {i} fits in T_{t}", None)
                if len(able) == 1:
                    where[able[0]] = t
                    forced.append((able[0], t))
                    progress = True
                    break
            if progress:
                break
        if not progress:
            undecided = tuple(v for v in range(g.n) if v not in where)
            return Propagation(where, tuple(forced), None, None, undecided)
