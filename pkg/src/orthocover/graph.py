"""Core data model: graphs, partitions, orthogonal colourings and coverings.

Every validator comes in two flavours: a ``*_violation`` function returning a
human-readable description of the first violated condition (or ``None``), and
a boolean ``is_*`` wrapper around it.
"""

from __future__ import annotations

import heapq
import math
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from orthocover.errors import NotCoveringShaped, OrthoCoverError

Pair = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` may be given as any iterable of vertex pairs; it is normalised
    to a frozenset of ``(u, v)`` tuples with ``u < v``. ``labels`` are display
    names only and do not take part in equality.
    """

    n: int
    edges: frozenset[Pair] = frozenset()
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise OrthoCoverError(f"vertex count must be non-negative, got {self.n}")
        normalised: set[Pair] = set()
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise OrthoCoverError(f"self-loop at vertex {u}")
            for w in (u, v):
                if not 0 <= w < self.n:
                    raise OrthoCoverError(f"vertex {w} out of range for n={self.n}")
            key = (min(u, v), max(u, v))
            if key in normalised:
                raise OrthoCoverError(f"duplicate edge {key}")
            normalised.add(key)
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in normalised:
            adj[u].add(v)
            adj[v].add(u)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n:
                raise OrthoCoverError("labels length does not match vertex count")
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", frozenset(normalised))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbours(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def sorted_edges(self) -> list[Pair]:
        return sorted(self.edges)

    def name(self, v: int) -> str:
        """Display name of vertex ``v`` (its label, else ``v<id>``)."""
        if self.labels is not None:
            return self.labels[v]
        return f"v{v}"

    def index(self, name: str) -> int:
        """Inverse of :meth:`name`."""
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        if name.startswith("v") and name[1:].isdigit() and int(name[1:]) < self.n:
            return int(name[1:])
        raise KeyError(name)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def induced_edges(self, vertices: Iterable[int]) -> list[Pair]:
        vs = set(vertices)
        return sorted(e for e in self.edges if e[0] in vs and e[1] in vs)


@dataclass(frozen=True)
class Partition:
    """Ordered vertex classes. Identity of a class is its position.

    Each class is stored sorted, so "the j-th vertex of a class" means the
    j-th smallest id.
    """

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        classes = tuple(tuple(sorted(c)) for c in self.classes)
        seen: set[int] = set()
        for i, cls in enumerate(classes):
            if not cls:
                raise OrthoCoverError(f"class {i} is empty")
            for v in cls:
                if v in seen:
                    raise OrthoCoverError(f"vertex {v} appears in more than one class")
                seen.add(v)
        object.__setattr__(self, "classes", classes)

    def __len__(self) -> int:
        return len(self.classes)

    def vertices(self) -> set[int]:
        return {v for cls in self.classes for v in cls}

    def class_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def check(self, n: int) -> None:
        """Raise unless the classes cover exactly ``0..n-1``."""
        vs = self.vertices()
        if vs != set(range(n)):
            missing = sorted(set(range(n)) - vs)
            extra = sorted(vs - set(range(n)))
            raise OrthoCoverError(
                f"partition does not cover 0..{n - 1} (missing {missing}, out of range {extra})"
            )


@dataclass(frozen=True)
class Covering:
    """Ordered list of transversals ``T_0, T_1, ...``, each stored sorted."""

    transversals: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "transversals", tuple(tuple(sorted(t)) for t in self.transversals))

    def __len__(self) -> int:
        return len(self.transversals)

    def transversal_of(self) -> dict[int, int]:
        return {v: j for j, t in enumerate(self.transversals) for v in t}


@dataclass(frozen=True)
class OrthogonalColouring:
    """One ``(c1, c2)`` colour pair per vertex, colours in ``0..num_colours-1``."""

    num_colours: int
    pairs: tuple[Pair, ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        if self.num_colours < 0 or (pairs and self.num_colours < 1):
            raise OrthoCoverError(f"invalid colour count {self.num_colours}")
        for v, (a, b) in enumerate(pairs):
            if not (0 <= a < self.num_colours and 0 <= b < self.num_colours):
                raise OrthoCoverError(
                    f"vertex {v} has pair ({a},{b}) outside 0..{self.num_colours - 1}"
                )
        object.__setattr__(self, "pairs", pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def first(self) -> list[int]:
        return [a for a, _ in self.pairs]

    @property
    def second(self) -> list[int]:
        return [b for _, b in self.pairs]


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    degeneracy: int
    degenerate_ordering: tuple[int, ...]


def _check_vertices(g: Graph, vertices: Iterable[int]) -> list[int]:
    vs = list(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise OrthoCoverError(f"vertex {v} out of range for n={g.n}")
    return vs


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    vs = set(_check_vertices(g, s))
    return not any(g.neighbours(v) & vs for v in vs)


def proper_violation(g: Graph, colours: Sequence[int]) -> str | None:
    if len(colours) != g.n:
        raise OrthoCoverError(f"{len(colours)} colours given for {g.n} vertices")
    for u, v in g.sorted_edges():
        if colours[u] == colours[v]:
            return f"edge {g.name(u)}-{g.name(v)} has both endpoints coloured {colours[u]}"
    return None


def is_proper(g: Graph, colours: Sequence[int]) -> bool:
    return proper_violation(g, colours) is None


def orthogonality_violation(c: OrthogonalColouring) -> tuple[int, int] | None:
    """First pair of vertices sharing a colour pair, or ``None``."""
    first_seen: dict[Pair, int] = {}
    for v, p in enumerate(c.pairs):
        if p in first_seen:
            return first_seen[p], v
        first_seen[p] = v
    return None


def are_orthogonal(c: OrthogonalColouring) -> bool:
    return len(set(c.pairs)) == len(c.pairs)


def colouring_violation(g: Graph, c: OrthogonalColouring) -> str | None:
    if len(c.pairs) != g.n:
        raise OrthoCoverError(f"colouring has {len(c.pairs)} pairs for {g.n} vertices")
    for coord, colours in (("first", c.first), ("second", c.second)):
        problem = proper_violation(g, colours)
        if problem is not None:
            return f"{coord} colouring not proper: {problem}"
    clash = orthogonality_violation(c)
    if clash is not None:
        u, v = clash
        return f"vertices {g.name(u)} and {g.name(v)} share the pair {c.pairs[u]}"
    return None


def is_valid_orthogonal_colouring(g: Graph, c: OrthogonalColouring) -> bool:
    return colouring_violation(g, c) is None


def transversal_violation(g: Graph, p: Partition, t: Iterable[int]) -> str | None:
    p.check(g.n)
    vs = _check_vertices(g, t)
    if len(set(vs)) != len(vs):
        return f"transversal {sorted(vs)} repeats a vertex"
    class_of = p.class_of()
    hits = Counter(class_of[v] for v in vs)
    for i in range(len(p)):
        if hits[i] != 1:
            return f"transversal {sorted(vs)} has {hits[i]} vertices from class {i}"
    vset = set(vs)
    for u in sorted(vs):
        for w in sorted(g.neighbours(u) & vset):
            if u < w:
                return f"transversal {sorted(vs)} contains edge {g.name(u)}-{g.name(w)}"
    return None


def is_independent_transversal(g: Graph, p: Partition, t: Iterable[int]) -> bool:
    return transversal_violation(g, p, t) is None


def covering_violation(g: Graph, p: Partition, c: Covering) -> str | None:
    p.check(g.n)
    seen: dict[int, int] = {}
    for j, t in enumerate(c.transversals):
        for v in t:
            if v in seen:
                return f"vertex {g.name(v)} is in transversals {seen[v]} and {j}"
            seen[v] = j
        problem = transversal_violation(g, p, t)
        if problem is not None:
            return f"T_{j}: {problem}"
    missing = sorted(set(range(g.n)) - set(seen))
    if missing:
        return f"vertices {[g.name(v) for v in missing]} are not covered"
    return None


def is_independent_covering(g: Graph, p: Partition, c: Covering) -> bool:
    return covering_violation(g, p, c) is None


def covering_to_colouring(p: Partition, c: Covering) -> OrthogonalColouring:
    """Vertex in class ``i`` and transversal ``j`` receives the pair ``(i, j)``."""
    vertices = p.vertices()
    transversal_of: dict[int, int] = {}
    for j, t in enumerate(c.transversals):
        for v in t:
            if v in transversal_of:
                raise OrthoCoverError(f"vertex {v} is in more than one transversal")
            transversal_of[v] = j
    if set(transversal_of) != vertices:
        raise OrthoCoverError("transversals do not span the partitioned vertices")
    n = len(vertices)
    if vertices != set(range(n)):
        raise OrthoCoverError("partition vertices are not 0..n-1")
    class_of = p.class_of()
    pairs = [(class_of[v], transversal_of[v]) for v in range(n)]
    return OrthogonalColouring(max(len(p), len(c)) if n else 0, tuple(pairs))


def colouring_to_covering(g: Graph, c: OrthogonalColouring) -> tuple[Covering, Partition]:
    """Read a covering off an orthogonal colouring with the right class sizes.

    The partition is the classes of the first colouring and the transversals
    are the classes of the second, both ordered by colour index.
    """
    problem = colouring_violation(g, c)
    if problem is not None:
        raise OrthoCoverError(f"not a valid orthogonal colouring: {problem}")
    if g.n == 0:
        return Covering(()), Partition(())
    first: dict[int, list[int]] = {}
    second: dict[int, list[int]] = {}
    for v, (a, b) in enumerate(c.pairs):
        first.setdefault(a, []).append(v)
        second.setdefault(b, []).append(v)
    sizes = {len(vs) for vs in first.values()}
    if len(sizes) != 1:
        raise NotCoveringShaped(f"first colour classes have unequal sizes {sorted(sizes)}")
    for b, vs in sorted(second.items()):
        if len(vs) != len(first):
            raise NotCoveringShaped(
                f"second colour class {b} has {len(vs)} vertices, expected {len(first)}"
            )
    partition = Partition(tuple(tuple(first[a]) for a in sorted(first)))
    covering = Covering(tuple(tuple(second[b]) for b in sorted(second)))
    problem = covering_violation(g, partition, covering)
    if problem is not None:
        raise OrthoCoverError(f"derived covering is invalid: {problem}")
    return covering, partition


def stats(g: Graph) -> GraphStats:
    """Max degree and a degenerate ordering by min-degree peeling.

    Vertices are removed in order of smallest residual degree (ties to the
    smaller id); the ordering is the reverse of the removal order, so each
    vertex has at most ``degeneracy`` neighbours before it.
    """
    residual = [g.degree(v) for v in range(g.n)]
    heap = [(d, v) for v, d in enumerate(residual)]
    heapq.heapify(heap)
    removed = [False] * g.n
    removal: list[int] = []
    degeneracy = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != residual[v]:
            continue
        removed[v] = True
        removal.append(v)
        degeneracy = max(degeneracy, d)
        for w in g.neighbours(v):
            if not removed[w]:
                residual[w] -= 1
                heapq.heappush(heap, (residual[w], w))
    return GraphStats(g.max_degree, degeneracy, tuple(reversed(removal)))


def lower_bound(n: int) -> int:
    """Pigeonhole bound: ``n`` distinct pairs need at least ``ceil(sqrt(n))`` colours."""
    return math.isqrt(n - 1) + 1 if n > 0 else 0


def partite_violation(g: Graph, p: Partition, r: int | None = None) -> str | None:
    """Check that ``p`` makes ``g`` an ``[n,k,r]``-partite graph.

    Classes must be independent and of equal size, and the edges between
    every two classes must form a matching of size exactly ``r`` (any common
    size if ``r`` is ``None``).
    """
    p.check(g.n)
    sizes = {len(cls) for cls in p.classes}
    if len(sizes) > 1:
        return f"class sizes differ: {sorted(sizes)}"
    class_of = p.class_of()
    for i, cls in enumerate(p.classes):
        if not is_independent_set(g, cls):
            return f"class {i} is not independent"
    between: Counter[tuple[int, int]] = Counter()
    touched: dict[tuple[int, int], set[int]] = {}
    for u, v in g.sorted_edges():
        a, b = sorted((class_of[u], class_of[v]))
        between[a, b] += 1
        ends = touched.setdefault((a, b), set())
        if u in ends or v in ends:
            return f"edges between classes {a} and {b} are not a matching"
        ends.update((u, v))
    counts = {between[a, b] for a in range(len(p)) for b in range(a + 1, len(p))}
    if r is not None and counts - {r}:
        return f"class pairs carry {sorted(counts)} edges, expected {r}"
    if len(counts) > 1:
        return f"class pairs carry differing edge counts {sorted(counts)}"
    return None


def is_partite(g: Graph, p: Partition, r: int | None = None) -> bool:
    return partite_violation(g, p, r) is None
