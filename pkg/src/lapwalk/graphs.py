"""Immutable graphs and the constructors/combinators the walk machinery runs on.

Vertices are always 0..n-1. Edges carry a real weight (1.0 from the unweighted
constructors); loops are kept separately as (vertex, weight) entries that land
on the adjacency diagonal. All combinators are pure and relabel vertices
deterministically: in unions/joins the first argument keeps its labels and the
second is shifted by ``|V(g)|``; in products the pair (a, b) becomes
``a * |V(h)| + b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

__all__ = [
    "Graph",
    "make_graph",
    "path",
    "cycle",
    "complete",
    "empty",
    "hypercube",
    "circulant",
    "circulant_family",
    "complement",
    "disjoint_union",
    "join",
    "cartesian_product",
    "weak_product",
    "line_graph",
    "LineGraph",
    "odd_unicyclic",
    "OddUnicyclic",
    "cone_p4_with_pendant",
    "PendantCone",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected weighted graph with optional loops.

    ``edges`` holds canonical (u, v, weight) triples with u < v, sorted;
    ``loops`` holds sorted (vertex, weight) pairs. Use :func:`make_graph` to
    build instances from unnormalized edge data.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...] = ()
    loops: tuple[tuple[int, float], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        prev = None
        for u, v, w in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range or not canonical")
            if not math.isfinite(w):
                raise ValueError(f"edge ({u},{v}) has non-finite weight {w}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be sorted and duplicate-free")
            prev = (u, v)
        prev_v = None
        for v, w in self.loops:
            if not 0 <= v < self.n:
                raise ValueError(f"loop vertex {v} out of range")
            if not math.isfinite(w):
                raise ValueError(f"loop at {v} has non-finite weight {w}")
            if prev_v is not None and v <= prev_v:
                raise ValueError("loops must be sorted and duplicate-free")
            prev_v = v

    # -- basic queries ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def is_unweighted(self) -> bool:
        """True when every edge weight is 1 and there are no loops."""
        return not self.loops and all(w == 1.0 for _, _, w in self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Stable index of each (u, v) pair in the canonical edge order."""
        return {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self.edge_index

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v, w in self.edges:
            a[u, v] = w
            a[v, u] = w
        for v, w in self.loops:
            a[v, v] = w
        return a

    def degrees(self) -> np.ndarray:
        """Weighted degrees; a loop of weight w contributes w once."""
        d = np.zeros(self.n)
        for u, v, w in self.edges:
            d[u] += w
            d[v] += w
        for v, w in self.loops:
            d[v] += w
        return d

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.neighbors[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def bipartition(self) -> np.ndarray | None:
        """Two-coloring by breadth-first traversal, or None on an odd cycle."""
        color = np.full(self.n, -1, dtype=int)
        for start in range(self.n):
            if color[start] >= 0:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                u = queue.pop(0)
                for v in self.neighbors[u]:
                    if color[v] < 0:
                        color[v] = 1 - color[u]
                        queue.append(v)
                    elif color[v] == color[u]:
                        return None
        return color

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """New graph with vertex u renamed to perm[u]."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        edges = [(p[u], p[v], w) for u, v, w in self.edges]
        loops = [(p[v], w) for v, w in self.loops]
        return make_graph(self.n, edges, loops)


def make_graph(
    n: int,
    edges: Iterable[tuple] = (),
    loops: Iterable[tuple[int, float]] = (),
) -> Graph:
    """Build a Graph from loose edge data: (u, v) or (u, v, w) per edge."""
    canon: dict[tuple[int, int], float] = {}
    for e in edges:
        if len(e) == 2:
            u, v = e
            w = 1.0
        elif len(e) == 3:
            u, v, w = e
        else:
            raise ValueError(f"edge {e!r} must be (u, v) or (u, v, w)")
        u, v, w = int(u), int(v), float(w)
        if u == v:
            raise ValueError(f"({u},{v}) is a loop; pass it via loops=")
        key = (u, v) if u < v else (v, u)
        if key in canon:
            raise ValueError(f"duplicate edge {key}")
        canon[key] = w
    loop_map: dict[int, float] = {}
    for v, w in loops:
        v, w = int(v), float(w)
        if v in loop_map:
            raise ValueError(f"duplicate loop at {v}")
        loop_map[v] = w
    return Graph(
        n=int(n),
        edges=tuple((u, v, canon[(u, v)]) for u, v in sorted(canon)),
        loops=tuple(sorted(loop_map.items())),
    )


def _require_unweighted(g: Graph, what: str) -> None:
    if not g.is_unweighted:
        raise ValueError(f"{what} requires an unweighted, loop-free graph")


# -- elementary constructors ----------------------------------------------


def path(n: int) -> Graph:
    """Path 0-1-...-(n-1); a single vertex for n = 1."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle with j ~ k iff j - k = +-1 (mod n); needs n >= 3 to stay simple."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return make_graph(n)


def hypercube(d: int) -> Graph:
    """d-dimensional cube on 2^d vertices; x ~ y iff they differ in one bit."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    n = 1 << d
    edges = []
    for x in range(n):
        for b in range(d):
            y = x ^ (1 << b)
            if x < y:
                edges.append((x, y))
    return make_graph(n, edges)


def circulant(n: int, gens: Iterable[int]) -> Graph:
    """Circulant over Z_n: i ~ j iff (i - j) mod n lies in the generator set.

    The generator set must exclude 0 and be closed under negation mod n.
    """
    if n < 1:
        raise ValueError("circulant needs at least one vertex")
    gset = {int(s) % n for s in gens}
    if 0 in gset:
        raise ValueError("generator 0 would create loops")
    for s in gset:
        if (n - s) % n not in gset:
            raise ValueError(f"generators not closed under negation: missing {(n - s) % n}")
    edges = set()
    for i in range(n):
        for s in gset:
            j = (i + s) % n
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return make_graph(n, sorted(edges))


def circulant_family(m: int) -> Graph:
    """The (2m, m-1)-regular circulant over Z_{2m} used for signless double cones.

    Generators are +-1..+-(m-1)/2 when m-1 is even, and
    +-1..+-(m-2)/2 together with +-m when m-1 is odd.
    """
    if m < 2:
        raise ValueError("family is defined for m >= 2")
    if (m - 1) % 2 == 0:
        ks = range(1, (m - 1) // 2 + 1)
        gens = set(ks) | {2 * m - k for k in ks}
    else:
        ks = range(1, (m - 2) // 2 + 1)
        gens = set(ks) | {2 * m - k for k in ks} | {m}
    return circulant(2 * m, gens)


# -- combinators -----------------------------------------------------------


def complement(g: Graph) -> Graph:
    _require_unweighted(g, "complement")
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return make_graph(g.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union with h's vertices shifted by |V(g)|."""
    _require_unweighted(g, "disjoint_union")
    _require_unweighted(h, "disjoint_union")
    edges = [(u, v) for u, v, _ in g.edges]
    edges += [(u + g.n, v + g.n) for u, v, _ in h.edges]
    return make_graph(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Join: the union plus every cross edge; equals the complement identity
    complement(union(complement(g), complement(h)))."""
    _require_unweighted(g, "join")
    _require_unweighted(h, "join")
    edges = [(u, v) for u, v, _ in g.edges]
    edges += [(u + g.n, v + g.n) for u, v, _ in h.edges]
    edges += [(u, v + g.n) for u in range(g.n) for v in range(h.n)]
    return make_graph(g.n + h.n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product: adjacency A(g) (x) I + I (x) A(h) under (a,b) -> a*|V(h)|+b."""
    _require_unweighted(g, "cartesian_product")
    _require_unweighted(h, "cartesian_product")
    nh = h.n
    edges = []
    for a1, a2, _ in g.edges:
        for b in range(nh):
            edges.append((a1 * nh + b, a2 * nh + b))
    for a in range(g.n):
        for b1, b2, _ in h.edges:
            edges.append((a * nh + b1, a * nh + b2))
    return make_graph(g.n * nh, edges)


def weak_product(g: Graph, h: Graph) -> Graph:
    """Tensor product: adjacency A(g) (x) A(h) under (a,b) -> a*|V(h)|+b."""
    _require_unweighted(g, "weak_product")
    _require_unweighted(h, "weak_product")
    nh = h.n
    edges = set()
    for a1, a2, _ in g.edges:
        for b1, b2, _ in h.edges:
            for (x1, y1), (x2, y2) in (((a1, b1), (a2, b2)), ((a1, b2), (a2, b1))):
                i, j = x1 * nh + y1, x2 * nh + y2
                if i != j:
                    edges.add((min(i, j), max(i, j)))
    return make_graph(g.n * nh, sorted(edges))


class LineGraph(NamedTuple):
    graph: Graph
    edges: tuple[tuple[int, int], ...]  # edge i of the source = vertex i here


def line_graph(g: Graph) -> LineGraph:
    """Line graph, with the stable source edge ordering returned alongside.

    Vertex i of the result is edge i of ``g.edges``; two such vertices are
    adjacent exactly when the source edges share one endpoint.
    """
    _require_unweighted(g, "line_graph")
    pairs = tuple((u, v) for u, v, _ in g.edges)
    m = len(pairs)
    edges = []
    for i in range(m):
        si = set(pairs[i])
        for j in range(i + 1, m):
            if len(si & set(pairs[j])) == 1:
                edges.append((i, j))
    return LineGraph(make_graph(m, edges), pairs)


class OddUnicyclic(NamedTuple):
    graph: Graph
    endpoints: tuple[int, int]


def odd_unicyclic(m: int) -> OddUnicyclic:
    """Triangle with two pendant paths of m edges; 2m+3 vertices.

    The spine is 0-1-...-(2m+1) with an apex vertex 2m+2 adjacent to the two
    middle spine vertices m and m+1. The antipodal pair is the two spine
    endpoints (0, 2m+1).
    """
    if m < 1:
        raise ValueError("needs pendant paths with at least one edge")
    apex = 2 * m + 2
    edges = [(i, i + 1) for i in range(2 * m + 1)]
    edges += [(m, apex), (m + 1, apex)]
    return OddUnicyclic(make_graph(2 * m + 3, edges), (0, 2 * m + 1))


class PendantCone(NamedTuple):
    graph: Graph
    probe: int  # the degree-2 cone vertex whose controllability is probed
    tail: int  # far endpoint of the pendant path


def cone_p4_with_pendant(m: int) -> PendantCone:
    """Cone over P4 (conical vertex 0, path 1-2-3-4) with a pendant path of m
    edges appended at vertex 4 using labels 4+1..4+m."""
    if m < 0:
        raise ValueError("pendant length must be nonnegative")
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]
    edges += [(4 + k, 4 + k + 1) for k in range(m)]
    return PendantCone(make_graph(5 + m, edges), 1, 4 + m)
