"""The first-linear-syzygy graph G_I and its induced pair subgraphs.

Vertices are generator indices 1..m.  Two generators are adjacent when
``x*u_i = y*u_j`` for variables x, y, i.e. their supports differ by a single
swap.  Triangles whose three linear syzygies are dependent (all pairwise lcms
equal, "type (i)") lose one edge so that edges count independent linear
first syzygies.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError
from .ideal import MonomialIdeal

Edge = tuple[int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class PrunedEdge:
    edge: Edge
    triangle: tuple[int, int, int]


@dataclass(frozen=True)
class SyzygyGraph:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    pruned: tuple[PrunedEdge, ...] = ()
    _adj: dict[int, frozenset[int]] = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    @property
    def m(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return _edge(a, b) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = []
            queue = deque([s])
            seen.add(s)
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in sorted(self._adj[v]):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.m <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> "SyzygyGraph":
        vs = tuple(sorted(set(vertices)))
        keep = set(vs)
        edges = frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)
        return SyzygyGraph(vs, edges)

    def path(self, a: int, b: int) -> list[int] | None:
        """Shortest path from a to b (BFS, smallest-index neighbours first)."""
        prev = {a: None}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            if v == b:
                out = [v]
                while prev[out[-1]] is not None:
                    out.append(prev[out[-1]])
                return out[::-1]
            for w in sorted(self._adj[v]):
                if w not in prev:
                    prev[w] = v
                    queue.append(w)
        return None

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.m - 1


def is_adjacent(u: frozenset[int], v: frozenset[int]) -> bool:
    return len(u - v) == 1 and len(v - u) == 1


def raw_syzygy_graph(I: MonomialIdeal) -> SyzygyGraph:
    """Adjacency graph before pruning type-(i) triangles."""
    I.require_equigenerated()
    gens = I.gens
    edges = frozenset(
        (a + 1, b + 1)
        for a, b in combinations(range(I.m), 2)
        if is_adjacent(gens[a], gens[b])
    )
    return SyzygyGraph(tuple(range(1, I.m + 1)), edges)


def is_type_one_triangle(I: MonomialIdeal, i: int, j: int, k: int) -> bool:
    """Pairwise adjacent triple with all three pairwise lcms equal."""
    u, v, w = I.gen(i), I.gen(j), I.gen(k)
    return (u | v) == (u | w) == (v | w)


def build_syzygy_graph(I: MonomialIdeal) -> SyzygyGraph:
    raw = raw_syzygy_graph(I)
    edges = set(raw.edges)
    pruned: list[PrunedEdge] = []
    m = I.m
    changed = True
    while changed:
        changed = False
        for i, j, k in combinations(range(1, m + 1), 3):
            if (i, j) in edges and (i, k) in edges and (j, k) in edges:
                if is_type_one_triangle(I, i, j, k):
                    edges.discard((j, k))
                    pruned.append(PrunedEdge((j, k), (i, j, k)))
                    changed = True
    return SyzygyGraph(raw.vertices, frozenset(edges), tuple(pruned))


@dataclass(frozen=True)
class GraphShape:
    tag: str
    witness: tuple[int, ...] = ()

    LINE = "line"
    CYCLE = "cycle"
    TREE = "tree"
    COMPLETE = "complete"
    OTHER = "connected_other"
    DISCONNECTED = "disconnected"

    @property
    def length(self) -> int:
        return len(self.witness)

    def __str__(self) -> str:
        if self.tag == self.CYCLE:
            return f"cycle({len(self.witness)})"
        return self.tag


def _walk_path(G: SyzygyGraph, start: int) -> tuple[int, ...]:
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in sorted(G.neighbors(cur)) if w != prev and w not in order]
        if not nxt:
            return tuple(order)
        prev, cur = cur, nxt[0]
        order.append(cur)


def classify_shape(G: SyzygyGraph) -> GraphShape:
    m = G.m
    if m == 0 or not G.is_connected():
        return GraphShape(GraphShape.DISCONNECTED)
    if m <= 2:
        return GraphShape(GraphShape.LINE, G.vertices)
    e = len(G.edges)
    degrees = [G.degree(v) for v in G.vertices]
    if e == m - 1:
        if max(degrees) <= 2:
            start = min(v for v in G.vertices if G.degree(v) == 1)
            return GraphShape(GraphShape.LINE, _walk_path(G, start))
        return GraphShape(GraphShape.TREE)
    if e == m and all(d == 2 for d in degrees):
        return GraphShape(GraphShape.CYCLE, _walk_path(G, G.vertices[0]))
    if e == m * (m - 1) // 2:
        return GraphShape(GraphShape.COMPLETE)
    return GraphShape(GraphShape.OTHER)


def pair_vertex_set(I: MonomialIdeal, a: int, b: int) -> list[int]:
    union = I.gen(a) | I.gen(b)
    return [k for k in range(1, I.m + 1) if I.gens[k - 1] <= union]


def induced_pair_subgraph(G: SyzygyGraph, I: MonomialIdeal, a: int, b: int) -> SyzygyGraph:
    """Induced subgraph on generators whose support lies in F(u_a) | F(u_b)."""
    return G.induced(pair_vertex_set(I, a, b))


@dataclass(frozen=True)
class LinearRelationsVerdict:
    holds: bool
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.holds


def has_linear_relations_combinatorial(
    I: MonomialIdeal, G: SyzygyGraph | None = None
) -> LinearRelationsVerdict:
    """All pair subgraphs connected; otherwise the lexicographically least bad pair."""
    if G is None:
        G = build_syzygy_graph(I)
    for a, b in combinations(range(1, I.m + 1), 2):
        if not induced_pair_subgraph(G, I, a, b).is_connected():
            return LinearRelationsVerdict(False, (a, b))
    return LinearRelationsVerdict(True)


def path_multipliers(
    G: SyzygyGraph, I: MonomialIdeal, path: Sequence[int]
) -> tuple[dict[int, int], dict[int, int]]:
    """Multipliers w_a, w_b with w_a*u_a = w_b*u_b read off a walk in G.

    Each step p -> q contributes the edge syzygy ``x*u_p = y*u_q``; the two
    products are then divided by their gcd.  Results are exponent dicts.
    """
    if not path:
        raise InputError("empty path")
    left: Counter[int] = Counter()
    right: Counter[int] = Counter()
    for p, q in zip(path, path[1:]):
        if not G.has_edge(p, q):
            raise InputError(f"vertices {p} and {q} are not adjacent")
        up, uq = I.gen(p), I.gen(q)
        (x,) = uq - up
        (y,) = up - uq
        left[x] += 1
        right[y] += 1
    common = left & right
    left -= common
    right -= common
    return dict(left), dict(right)
