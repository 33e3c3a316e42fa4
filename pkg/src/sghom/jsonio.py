"""Canonical JSON serialization of graphs.

Format (bit-exact round trip):

    {"name": <string, optional>,
     "vertices": [<id>...],
     "edges": [[<u>, <v>, <colour:int>]...],
     "rotation": {<vertex-id>: [<edge-index:int>...]}   (optional)}

Edge indices in "rotation" are 0-based positions into "edges".  Canonical
output sorts object keys and uses compact separators, so equal values have
equal bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .core import EdgeColouredGraph, RotationSystem, validate_graph
from .errors import GraphError


def graph_to_dict(g: EdgeColouredGraph) -> dict[str, Any]:
    d: dict[str, Any] = {
        "vertices": list(g.vertices),
        "edges": [[u, v, c] for u, v, c in g.edges],
    }
    if g.name is not None:
        d["name"] = g.name
    if g.rotation is not None:
        d["rotation"] = {v: list(ix) for v, ix in g.rotation.rotation}
    return d


def graph_from_dict(d: dict[str, Any]) -> EdgeColouredGraph:
    try:
        vertices = tuple(str(v) for v in d["vertices"])
        edges = tuple((str(u), str(v), int(c)) for u, v, c in d["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph object: {exc}") from exc
    rotation = None
    if "rotation" in d:
        try:
            rotation = RotationSystem(
                tuple(
                    (str(v), tuple(int(i) for i in ix))
                    for v, ix in d["rotation"].items()
                )
            )
        except (AttributeError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed rotation object: {exc}") from exc
    g = EdgeColouredGraph(
        vertices=vertices, edges=edges, name=d.get("name"), rotation=rotation
    )
    validate_graph(g)
    return g


def dumps(g: EdgeColouredGraph) -> str:
    return dumps_value(graph_to_dict(g))


def dumps_value(value: Any) -> str:
    """Canonical JSON text: sorted keys, compact separators."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def loads(text: str) -> EdgeColouredGraph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(d, dict):
        raise GraphError("graph JSON must be an object")
    return graph_from_dict(d)


def load_path(path: str) -> EdgeColouredGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump_path(g: EdgeColouredGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g))
        fh.write("\n")
