"""Reading and writing graphs in the two supported formats.

Text format: first line ``"n m"``, then m lines ``"u v"`` with 0-indexed,
whitespace-separated endpoints and u < v. JSON format: an object with fields
``"n"`` and ``"edges"`` (array of two-element arrays). Both round-trip
losslessly; edges are always emitted sorted.
"""

from __future__ import annotations

import json
import os

from .errors import GraphParseError, StructureError
from .graphs import HostGraph


def dump_text(graph: HostGraph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> HostGraph:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphParseError("line 1: expected header 'n m'")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphParseError(f"line 1: expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphParseError(f"line 1: non-integer header {lines[0]!r}") from None
    edges = []
    lineno = 1
    for raw in lines[1:]:
        lineno += 1
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer endpoints {raw!r}") from None
        if u >= v:
            raise GraphParseError(f"line {lineno}: edges must satisfy u < v, got {raw!r}")
        edges.append((u, v))
    if len(edges) != m:
        raise GraphParseError(
            f"line {lineno}: header announced {m} edges but found {len(edges)}"
        )
    try:
        return HostGraph(n, edges)
    except StructureError as exc:
        raise GraphParseError(f"invalid graph: {exc}") from None


def dump_json(graph: HostGraph) -> str:
    payload = {"n": graph.n, "edges": [[u, v] for u, v in graph.edges]}
    return json.dumps(payload) + "\n"


def parse_json(text: str) -> HostGraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict) or "n" not in payload or "edges" not in payload:
        raise GraphParseError("JSON graph needs fields 'n' and 'edges'")
    n = payload["n"]
    edges = payload["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise GraphParseError("'n' must be an integer and 'edges' an array")
    pairs = []
    for i, item in enumerate(edges):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, int) for x in item)
        ):
            raise GraphParseError(f"edge #{i} must be a two-element integer array")
        pairs.append((item[0], item[1]))
    try:
        return HostGraph(n, pairs)
    except StructureError as exc:
        raise GraphParseError(f"invalid graph: {exc}") from None


def load_graph(path: str) -> HostGraph:
    """Load a graph file; JSON when the extension is .json, text otherwise."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc}") from None
    if os.path.splitext(path)[1].lower() == ".json":
        return parse_json(text)
    return parse_text(text)


def save_graph(graph: HostGraph, path: str, fmt: str = "text") -> None:
    text = dump_json(graph) if fmt == "json" else dump_text(graph)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
