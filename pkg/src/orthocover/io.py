"""JSON interchange and DOT export.

JSON is the only format that is read back; DOT is write-only. Edge lists and
vertex lists inside classes and transversals are written sorted so that
output is byte-stable.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any

from orthocover.errors import OrthoCoverError
from orthocover.graph import Covering, Graph, OrthogonalColouring, Partition


def graph_to_json(g: Graph) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if g.labels is not None:
        out["labels"] = list(g.labels)
    return out


def graph_from_json(data: dict[str, Any]) -> Graph:
    try:
        edges = [tuple(e) for e in data["edges"]]
        if any(len(e) != 2 for e in edges):
            raise OrthoCoverError("every edge must have exactly two endpoints")
        labels = data.get("labels")
        return Graph(int(data["n"]), edges,  # type: ignore[arg-type]
                     labels=tuple(labels) if labels is not None else None)
    except (KeyError, TypeError) as exc:
        raise OrthoCoverError(f"malformed graph JSON: {exc}") from exc


def partition_to_json(p: Partition) -> dict[str, Any]:
    return {"classes": [list(c) for c in p.classes]}


def partition_from_json(data: dict[str, Any]) -> Partition:
    try:
        return Partition(tuple(tuple(int(v) for v in c) for c in data["classes"]))
    except (KeyError, TypeError) as exc:
        raise OrthoCoverError(f"malformed partition JSON: {exc}") from exc


def colouring_to_json(c: OrthogonalColouring) -> dict[str, Any]:
    return {"num_colours": c.num_colours, "pairs": [list(p) for p in c.pairs]}


def colouring_from_json(data: dict[str, Any]) -> OrthogonalColouring:
    try:
        pairs = [tuple(int(x) for x in p) for p in data["pairs"]]
        if any(len(p) != 2 for p in pairs):
            raise OrthoCoverError("every colour pair must have two entries")
        return OrthogonalColouring(int(data["num_colours"]), tuple(pairs))  # type: ignore[arg-type]
    except (KeyError, TypeError) as exc:
        raise OrthoCoverError(f"malformed colouring JSON: {exc}") from exc


def covering_to_json(c: Covering) -> dict[str, Any]:
    return {"transversals": [list(t) for t in c.transversals]}


def covering_from_json(data: dict[str, Any]) -> Covering:
    try:
        return Covering(tuple(tuple(int(v) for v in t) for t in data["transversals"]))
    except (KeyError, TypeError) as exc:
        raise OrthoCoverError(f"malformed covering JSON: {exc}") from exc


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True) + "\n"


def read_json(path: str | Path) -> Any:
    """Parse JSON from ``path``; ``"-"`` reads standard input."""
    try:
        if str(path) == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise OrthoCoverError(f"{path}: invalid JSON: {exc}") from exc


def write_text(path: str | Path, text: str) -> None:
    """Write ``text`` to ``path``; ``"-"`` writes standard output."""
    if str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(text, encoding="utf-8")


def write_json(path: str | Path, data: Any) -> None:
    write_text(path, dumps(data))


def export_dot(g: Graph, colouring: OrthogonalColouring | None = None, *, base: int = 0) -> str:
    """DOT text for ``g``. With a colouring, nodes are labelled ``(c1,c2)``.

    ``base`` is added to every colour, e.g. ``base=1`` for 1-based labels.
    """
    if colouring is not None and len(colouring.pairs) != g.n:
        raise OrthoCoverError(f"colouring has {len(colouring.pairs)} pairs for {g.n} vertices")
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(g.n):
        name = g.name(v)
        if colouring is None:
            label = name
        else:
            a, b = colouring.pairs[v]
            label = f"({a + base},{b + base})"
        lines.append(f'  "{name}" [label="{label}"];')
    for u, v in g.sorted_edges():
        lines.append(f'  "{g.name(u)}" -- "{g.name(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
