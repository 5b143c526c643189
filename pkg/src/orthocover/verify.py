"""Re-run every claim about orthogonal colourings and coverings as a report.

Each claim is a function returning a detail string and the witnesses it
produced; it raises :class:`ClaimFailed` on a counterexample and
:class:`~orthocover.errors.SearchInconclusive` when a search runs out of
budget. Random instances are derived from the report seed only.
"""

from __future__ import annotations

import json
import random
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from orthocover import builders, io
from orthocover.builders import PartiteSpec
from orthocover.construct import degenerate_swap_colouring, double_star_colouring, hall_covering
from orthocover.errors import SearchInconclusive
from orthocover.graph import (
    Covering,
    Graph,
    Partition,
    colouring_to_covering,
    colouring_violation,
    covering_to_colouring,
    covering_violation,
    is_independent_transversal,
    lower_bound,
    stats,
)
from orthocover.oracle import generate_and_test
from orthocover.search import (
    DEFAULT_BUDGET,
    SearchBudget,
    Status,
    find_independent_covering,
    find_orthogonal_colouring,
    ochi,
    perfect_orthogonal_check,
    propagate_transversals,
)

DEFAULT_SEED = 1

Witnesses = dict[str, Any]


class ClaimFailed(Exception):
    pass


@dataclass
class ClaimResult:
    id: str
    description: str
    status: str
    detail: str
    witness: str | None = None
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    seed: int
    budget: int
    claims: list[ClaimResult] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        statuses = {c.status for c in self.claims}
        if "fail" in statuses:
            return 1
        if "inconclusive" in statuses:
            return 2
        return 0

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        claims = []
        for c in self.claims:
            entry = asdict(c)
            if not timing:
                del entry["elapsed"]
            claims.append(entry)
        return {"seed": self.seed, "budget": self.budget, "claims": claims}

    def to_text(self) -> str:
        lines = [f"verify-paper seed={self.seed} budget={self.budget}"]
        for c in self.claims:
            lines.append(f"[{c.status.upper():>12}] {c.id}: {c.description} ({c.elapsed:.2f}s)")
            lines.append(f"               {c.detail}")
        return "\n".join(lines) + "\n"


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def _budget(ctx: dict[str, Any], cap: int | None = None) -> SearchBudget:
    limit = ctx["budget"] if cap is None else min(ctx["budget"], cap)
    return SearchBudget(limit)


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise ClaimFailed(msg)


# Forced placements expected in each case where T_0 holds x0 and one y, z vertex.
NO_COVERING_CASES: dict[tuple[str, str], list[tuple[str, int]]] = {
    ("y1", "z2"): [("y2", 1)],
    ("y2", "z1"): [("y1", 2), ("y0", 1)],
    ("y2", "z2"): [("y1", 2)],
}


def claim_no_covering(ctx: dict[str, Any]) -> tuple[str, Witnesses]:
    g, p = builders.figure1_graph()
    outcome = find_independent_covering(g, p, _budget(ctx, 10**6))
    if outcome.status is Status.INCONCLUSIVE:
        raise SearchInconclusive(outcome.nodes_used)
    _expect(outcome.status is Status.PROVED_NONE, f"search found a covering {outcome.witness}")
    return (f"exhaustive search proved no covering in {outcome.nodes_used} nodes",
            {"graph": io.graph_to_json(g), "partition": io.partition_to_json(p)})


def claim_no_covering_cases(ctx: dict[str, Any]) -> tuple[str, Witnesses]:
    g, p = builders.figure1_graph()
    x0, x1, x2 = (g.index(s) for s in ("x0", "x1", "x2"))
    found_cases = set()
    for y in p.classes[1]:
        for z in p.classes[2]:
            if is_independent_transversal(g, p, [x0, y, z]):
                found_cases.add((g.name(y), g.name(z)))
    _expect(found_cases == set(NO_COVERING_CASES),
            f"independent T_0 candidates are {sorted(found_cases)}")
    details = []
    for (y, z), expected in NO_COVERING_CASES.items():
        fixed = {x0: 0, x1: 1, x2: 2, g.index(y): 0, g.index(z): 0}
        result = propagate_transversals(g, p, fixed)
        forced = [(g.name(v), t) for v, t in result.forced]
        _expect(result.contradiction is not None, f"case {y},{z}: propagation found no contradiction")
        _expect(forced[: len(expected)] == expected,
                f"case {y},{z}: forced {forced}, expected to start with {expected}")
        details.append(f"T_0={{x0,{y},{z}}}: {forced[:len(expected)]} then {result.contradiction}")
    return "; ".join(details), {}


def claim_333_ochi(ctx: dict[str, Any]) -> tuple[str, Witnesses]:
    budget = _budget(ctx)
    witnesses: Witnesses = {}
    details = []
    for name, g, _ in builders.three_333_graphs():
        value, witness = ochi(g, budget)
        _expect(value == 3, f"{name}: ochi = {value}")
        fixture = builders.named_colouring(name)
        problem = colouring_violation(g, fixture)
        _expect(problem is None, f"{name} figure colouring invalid: {problem}")
        _expect(fixture.num_colours == 3, f"{name} figure colouring uses {fixture.num_colours} colours")
        covering, partition = colouring_to_covering(g, fixture)
        witnesses[f"{name}_colouring"] = io.colouring_to_json(fixture)
        witnesses[f"{name}_covering"] = io.covering_to_json(covering)
        witnesses[f"{name}_partition"] = io.partition_to_json(partition)
        details.append(f"{name}: ochi=3, covering w.r.t. {[list(map(g.name, c)) for c in partition.classes]}")
    return "; ".join(details), witnesses


def claim_hall_covering(ctx: dict[str, Any]) -> tuple[str, Witnesses]:
    rng = _rng(ctx["seed"], "hall")
    count = 0
    for k in range(2, 13):
        n = (k + 1) // 2
        for _ in range(20):
            s = rng.getrandbits(64)
            g, p = builders.random_nkk(PartiteSpec(n, k, k, s))
            colouring, covering = hall_covering(g, p)
            problem = covering_violation(g, p, covering)
            _expect(problem is None, f"[{n},{k},{k}] seed {s}: {problem}")
            _expect(colouring_violation(g, colouring) is None, f"[{n},{k},{k}] seed {s}: bad colouring")
            count += 1
    return f"{count} random [ceil(k/2),k,k]-partite graphs covered, k = 2..12", {}


def claim_double_star(ctx: dict[str, Any]) -> tuple[str, Witnesses]:
    built = []
    for m in range(2, 35, 2):
        N = lower_bound(m)
        if m < N * N - 1:
            c = double_star_colouring(m)
            problem = colouring_violation(builders.double_star(m), c)
            _expect(problem is None and c.num_colours == N, f"D_{m}: {problem}")
            built.append(m)
    budget = _budget(ctx)
    for m, expected in ((4, 3), (8, 4), (16, 5)):
        value, _ = ochi(builders.double_star(m), budget)
        _expect(value == expected, f"ochi(D_{m}) = {value}, expected {expected}")
    d14 = builders.double_star(14)
    fixture = builders.named_colouring("D14")
    _expect(colouring_violation(d14, fixture) is None and fixture.num_colours == 4,
            "D_14 figure colouring does not validate with 4 colours")
    return (f"constructed D_m for m in {built}; ochi(D_4)=3, ochi(D_8)=4, ochi(D_16)=5; "
            "D_14 figure colouring valid",
            {"D14_colouring": io.colouring_to_json(fixture),
             "D34_colouring": io.colouring_to_json(double_star_colouring(34))})


def claim_counterexample_tree(ctx: dict[str, Any]) -> tuple[str, Witnesses]:
    g = builders.subdivided_double_star(3)
    _expect(g.max_degree == 4 and 2 * g.max_degree < g.n, f"max degree {g.max_degree}")
    outcome = find_orthogonal_colouring(g, 3, _budget(ctx, 10**7))
    if outcome.status is Status.INCONCLUSIVE:
        raise SearchInconclusive(outcome.nodes_used)
    _expect(outcome.status is Status.PROVED_NONE, "found a 3-colour orthogonal colouring")
    value, witness = ochi(g, _budget(ctx))
    _expect(value == 4, f"ochi = {value}")
    return (f"max degree 4 < 9/2; N=3 refuted in {outcome.nodes_used} nodes; ochi = 4",
            {"graph": io.graph_to_json(g), "colouring": io.colouring_to_json(witness)})


def degenerate_instances(seed: int) -> list[tuple[str, Graph]]:
    """50 random trees and 20 random 2-degenerate graphs inside the swap bound."""
    rng = _rng(seed, "degenerate")
    out = []
    for i in range(50):
        n = rng.randint(64, 144)
        out.append((f"tree{i}", builders.random_tree(n, builders.max_degree_for_bound(n, 1),
                                                      rng.getrandbits(64))))
    for i in range(20):
        n = rng.randint(256, 400)
        out.append((f"deg2_{i}", builders.random_d_degenerate(
            n, 2, builders.max_degree_for_bound(n, 2), rng.getrandbits(64))))
    return out


def claim_degenerate_swap(ctx: dict[str, Any]) -> tuple[str, Witnesses]:
    swaps = 0
    instances = degenerate_instances(ctx["seed"])
    for name, g in instances:
        trace: list = []
        c = degenerate_swap_colouring(g, check_invariants=True, trace=trace)
        _expect(colouring_violation(g, c) is None and c.num_colours == lower_bound(g.n),
                f"{name}: invalid colouring")
        d = stats(g).degeneracy
        for step in trace:
            _expect(len(step.conflict_set) <= 2 * d * c.num_colours, f"{name}: |W| bound")
            _expect(bool(step.candidates), f"{name}: empty candidate set")
        swaps += len(trace)
    return f"{len(instances)} graphs coloured with ceil(sqrt(n)) colours, {swaps} swaps", {}


def random_covering_instance(rng: random.Random) -> tuple[Graph, Partition, Covering]:
    """Random graph with a planted covering of ``parts`` classes of size ``k``."""
    parts, k = rng.randint(1, 6), rng.randint(1, 6)
    n = parts * k
    ids = list(range(n))
    rng.shuffle(ids)
    grid = [[ids[i * k + j] for j in range(k)] for i in range(parts)]
    for row in grid:
        rng.shuffle(row)
    p = Partition(tuple(tuple(row) for row in grid))
    c = Covering(tuple(tuple(grid[i][j] for i in range(parts)) for j in range(k)))
    cls, tr = p.class_of(), c.transversal_of()
    density = rng.random()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if cls[u] != cls[v] and tr[u] != tr[v] and rng.random() < density]
    return Graph(n, frozenset(edges)), p, c


def _membership(groups: tuple[tuple[int, ...], ...]) -> set[frozenset[int]]:
    return {frozenset(g) for g in groups}


def claim_correspondence(ctx: dict[str, Any]) -> tuple[str, Witnesses]:
    rng = _rng(ctx["seed"], "correspondence")
    for i in range(200):
        g, p, c = random_covering_instance(rng)
        colouring = covering_to_colouring(p, c)
        _expect(colouring_violation(g, colouring) is None, f"round trip {i}: colouring invalid")
        c2, p2 = colouring_to_covering(g, colouring)
        _expect(_membership(p2.classes) == _membership(p.classes), f"round trip {i}: classes differ")
        _expect(_membership(c2.transversals) == _membership(c.transversals),
                f"round trip {i}: transversals differ")
    _expect(perfect_orthogonal_check(builders.rook_graph(3), _budget(ctx)),
            "3x3 rook graph has no perfect orthogonal colouring")
    return "200 covering/colouring round trips preserved membership; rook graph 3x3 is perfect", {}


def small_builder_graphs() -> list[tuple[str, Graph]]:
    """Every builder graph with at most 10 vertices used for oracle checks."""
    out: list[tuple[str, Graph]] = [("figure1", builders.figure1_graph()[0])]
    out += [(name, g) for name, g, _ in builders.three_333_graphs()]
    out += [(f"D{m}", builders.double_star(m)) for m in range(2, 11, 2)]
    out += [("subdivided3", builders.subdivided_double_star(3))]
    out += [(f"rook{n}", builders.rook_graph(n)) for n in (1, 2, 3)]
    out += [(f"empty{n}", builders.empty_graph(n)) for n in (0, 1, 4, 9)]
    out += [(f"path{n}", builders.path_graph(n)) for n in (2, 4, 7, 10)]
    out += [(f"cycle{n}", builders.cycle_graph(n)) for n in (3, 5, 9, 10)]
    out += [(f"complete{n}", builders.complete_graph(n)) for n in (3, 4, 5)]
    for spec in (PartiteSpec(3, 3, 3, 7), PartiteSpec(2, 4, 4, 7), PartiteSpec(3, 3, 2, 7),
                 PartiteSpec(2, 5, 3, 7)):
        out.append((f"nkr{spec.parts}{spec.part_size}{spec.matching_size}", builders.random_nkk(spec)[0]))
    out += [(f"tree{n}", builders.random_tree(n, 3, n)) for n in (5, 8, 10)]
    out += [(f"deg2_{n}", builders.random_d_degenerate(n, 2, 4, n)) for n in (6, 10)]
    return out


def oracle_graphs(seed: int) -> list[tuple[str, Graph]]:
    rng = _rng(seed, "oracle")
    randoms = []
    for i in range(50):
        n = rng.randint(2, 10)
        randoms.append((f"random{i}", builders.random_graph(n, rng.uniform(0.1, 0.6), rng.getrandbits(64))))
    return small_builder_graphs() + randoms


def claim_oracle_agreement(ctx: dict[str, Any]) -> tuple[str, Witnesses]:
    graphs = oracle_graphs(ctx["seed"])
    checks = 0
    for name, g in graphs:
        for N in range(1, 5):
            outcome = find_orthogonal_colouring(g, N, _budget(ctx))
            if outcome.status is Status.INCONCLUSIVE:
                raise SearchInconclusive(outcome.nodes_used, f"{name}, N={N}")
            naive = generate_and_test(g, N) is not None
            _expect(outcome.found == naive, f"{name}, N={N}: solver {outcome.status.value}, oracle {naive}")
            if outcome.witness is not None:
                _expect(colouring_violation(g, outcome.witness) is None, f"{name}, N={N}: bad witness")
            checks += 1
    return f"{checks} (graph, N) decisions agree on {len(graphs)} graphs", {}


def claim_tree_dichotomy(ctx: dict[str, Any]) -> tuple[str, Witnesses]:
    rng = _rng(ctx["seed"], "trees")
    budget = _budget(ctx)
    tally = {0: 0, 1: 0}
    for i in range(30):
        n = rng.randint(2, 12)
        g = builders.random_tree(n, n, rng.getrandbits(64))
        value, _ = ochi(g, budget)
        excess = value - lower_bound(n)
        _expect(excess in (0, 1), f"tree {i} on {n} vertices has ochi {value}")
        tally[excess] += 1
    return f"30 random trees: {tally[0]} at ceil(sqrt(n)), {tally[1]} at ceil(sqrt(n))+1", {}


CLAIMS: list[tuple[str, str, Callable[[dict[str, Any]], tuple[str, Witnesses]]]] = [
    ("no-covering-333", "a [3,3,3]-partite graph without an independent covering", claim_no_covering),
    ("no-covering-cases", "case analysis of the [3,3,3] counterexample replayed", claim_no_covering_cases),
    ("ochi-333", "every [3,3,3]-partite graph has ochi 3", claim_333_ochi),
    ("hall-covering", "[ceil(k/2),k,k]-partite graphs have independent coverings", claim_hall_covering),
    ("double-star", "ochi(D_m) = ceil(sqrt(m)) iff m < N^2 - 1", claim_double_star),
    ("counterexample-tree", "tree on 9 vertices, max degree 4, ochi 4", claim_counterexample_tree),
    ("degenerate-swap", "sparse degenerate graphs have ochi ceil(sqrt(n))", claim_degenerate_swap),
    ("correspondence", "coverings and equal-class orthogonal colourings correspond", claim_correspondence),
    ("oracle-agreement", "backtracking agrees with naive generate-and-test", claim_oracle_agreement),
    ("tree-dichotomy", "trees have ochi ceil(sqrt(n)) or ceil(sqrt(n))+1", claim_tree_dichotomy),
]


def verify_paper(budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED,
                 witness_dir: str | Path | None = None,
                 only: list[str] | None = None) -> VerificationReport:
    report = VerificationReport(seed=seed, budget=budget)
    ctx = {"budget": budget, "seed": seed}
    for claim_id, description, fn in CLAIMS:
        if only is not None and claim_id not in only:
            continue
        start = time.perf_counter()
        witness_path = None
        try:
            detail, witnesses = fn(ctx)
            status = "pass"
            if witness_dir is not None and witnesses:
                witness_path = f"{claim_id}.json"
                target = Path(witness_dir) / witness_path
                target.parent.mkdir(parents=True, exist_ok=True)
                target.write_text(json.dumps(witnesses, sort_keys=True, indent=1) + "\n")
        except SearchInconclusive as exc:
            status, detail = "inconclusive", str(exc)
        except ClaimFailed as exc:
            status, detail = "fail", str(exc)
        except Exception as exc:  # a crash is a failed claim, reported like any other
            status, detail = "fail", f"{type(exc).__name__}: {exc}"
        report.claims.append(ClaimResult(claim_id, description, status, detail, witness_path,
                                         round(time.perf_counter() - start, 3)))
    return report
