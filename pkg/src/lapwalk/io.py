"""File formats: graph JSON, edge-list text, partition JSON, CSV dumps.

Graph JSON is ``{"n": int, "edges": [[u,v] or [u,v,w]], "loops": [[v,w]]}``.
The writer is canonical (sorted edges, weight omitted when it is exactly 1,
compact separators, trailing newline) so that load -> save round-trips
canonical files byte for byte. The edge-list format has a ``n <count>``
header followed by ``u v [w]`` lines; a line with u == v denotes a loop.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

import numpy as np

from .graphs import Graph, make_graph

__all__ = [
    "graph_to_json",
    "graph_from_json",
    "graph_to_edgelist",
    "graph_from_edgelist",
    "save_graph",
    "load_graph",
    "cells_from_json",
    "cells_to_json",
    "matrix_to_csv",
    "curve_to_csv",
]


def _edge_payload(u: int, v: int, w: float) -> list:
    return [u, v] if w == 1.0 else [u, v, w]


def graph_to_json(g: Graph) -> str:
    payload = {
        "n": g.n,
        "edges": [_edge_payload(u, v, w) for u, v, w in g.edges],
        "loops": [[v, w] for v, w in g.loops],
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def graph_from_json(text: str) -> Graph:
    payload = json.loads(text)
    if not isinstance(payload, dict) or "n" not in payload:
        raise ValueError("graph JSON must be an object with an 'n' field")
    return make_graph(
        payload["n"],
        payload.get("edges", ()),
        [(v, float(w)) for v, w in payload.get("loops", ())],
    )


def graph_to_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    for u, v, w in g.edges:
        lines.append(f"{u} {v}" if w == 1.0 else f"{u} {v} {w!r}")
    for v, w in g.loops:
        lines.append(f"{v} {v}" if w == 1.0 else f"{v} {v} {w!r}")
    return "\n".join(lines) + "\n"


def graph_from_edgelist(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n "):
        raise ValueError("edge list must start with a 'n <count>' header")
    n = int(lines[0].split()[1])
    edges = []
    loops = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        w = float(parts[2]) if len(parts) == 3 else 1.0
        if u == v:
            loops.append((u, w))
        else:
            edges.append((u, v, w))
    return make_graph(n, edges, loops)


def save_graph(g: Graph, path: str | Path) -> None:
    p = Path(path)
    text = graph_to_json(g) if p.suffix == ".json" else graph_to_edgelist(g)
    p.write_text(text)


def load_graph(path: str | Path) -> Graph:
    p = Path(path)
    text = p.read_text()
    if p.suffix == ".json":
        return graph_from_json(text)
    return graph_from_edgelist(text)


def cells_from_json(text: str) -> list[list[int]]:
    payload = json.loads(text)
    if not isinstance(payload, dict) or "cells" not in payload:
        raise ValueError("partition JSON must be an object with a 'cells' field")
    return [[int(v) for v in cell] for cell in payload["cells"]]


def cells_to_json(cells: Iterable[Iterable[int]]) -> str:
    return json.dumps({"cells": [list(c) for c in cells]}, separators=(",", ":")) + "\n"


def matrix_to_csv(matrix: np.ndarray) -> str:
    """Full-precision CSV, one row per line."""
    m = np.asarray(matrix)
    rows = [",".join(repr(float(x)) for x in row) for row in np.atleast_2d(m)]
    return "\n".join(rows) + "\n"


def curve_to_csv(rows: Iterable[tuple[float, complex]]) -> str:
    """Fidelity-curve CSV with columns t, re, im, abs."""
    out = ["t,re,im,abs"]
    for t, amp in rows:
        a = complex(amp)
        out.append(f"{float(t)!r},{a.real!r},{a.imag!r},{abs(a)!r}")
    return "\n".join(out) + "\n"
