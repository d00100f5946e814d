"""Simple undirected graphs, standard families and graph operations.

A :class:`Graph` is immutable.  Vertices are non-negative integer ids, edges
are stored as ``(u, v)`` tuples with ``u < v``.  Isolated vertices are allowed
because several operations (intersection, complement) produce them.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    DisjointnessError,
    InvalidParameterError,
    NotASubgraphError,
)

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on integer vertex ids.

    ``names`` optionally maps some ids to short unique text aliases.
    """

    __slots__ = ("vertices", "edges", "names", "__dict__")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[tuple[int, int]] = (),
        names: Mapping[int, str] | None = None,
    ):
        vset = set()
        for v in vertices:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InvalidParameterError(f"vertex id must be a non-negative int: {v!r}")
            vset.add(v)
        eset = set()
        for u, v in edges:
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            for x in (u, v):
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise InvalidParameterError(f"vertex id must be a non-negative int: {x!r}")
            vset.add(u)
            vset.add(v)
            eset.add(_norm_edge(u, v))
        self.vertices: tuple[int, ...] = tuple(sorted(vset))
        self.edges: frozenset[Edge] = frozenset(eset)
        clean: dict[int, str] = {}
        if names:
            for v, name in names.items():
                if v not in vset:
                    raise InvalidParameterError(f"name given for unknown vertex {v}")
                clean[v] = name
            if len(set(clean.values())) != len(clean):
                raise InvalidParameterError("vertex names must be unique")
        self.names: tuple[tuple[int, str], ...] = tuple(sorted(clean.items()))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Graph:
        return cls(vertices, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertices, self.edges, self.names) == (other.vertices, other.edges, other.names)

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges, self.names))

    def __repr__(self) -> str:
        return f"Graph(n={self.order}, m={self.size}, edges={self.sorted_edges()})"

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def has_vertex(self, v: int) -> bool:
        return v in self.adjacency

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adjacency.values()), default=0)

    def name_of(self, v: int) -> str | None:
        return dict(self.names).get(v)

    def is_subgraph_of(self, other: Graph) -> bool:
        return set(self.vertices) <= set(other.vertices) and self.edges <= other.edges

    def shifted(self, offset: int) -> Graph:
        """Return a copy with every vertex id increased by ``offset``."""
        return Graph(
            (v + offset for v in self.vertices),
            ((u + offset, v + offset) for u, v in self.edges),
            {v + offset: n for v, n in self.names},
        )

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = set(vertices) & set(self.vertices)
        return Graph(keep, (e for e in self.edges if e[0] in keep and e[1] in keep))


# -- families -------------------------------------------------------------

def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameterError(msg)


def make_path(k: int) -> Graph:
    """Path on ``k`` vertices ``0..k-1`` (``k - 1`` edges)."""
    _require(k >= 1, f"path needs at least 1 vertex, got {k}")
    return Graph(range(k), ((i, i + 1) for i in range(k - 1)))


def make_cycle(k: int) -> Graph:
    _require(k >= 3, f"cycle needs at least 3 vertices, got {k}")
    return Graph(range(k), ((i, (i + 1) % k) for i in range(k)))


def make_complete(k: int) -> Graph:
    _require(k >= 1, f"complete graph needs at least 1 vertex, got {k}")
    return Graph(range(k), ((i, j) for i in range(k) for j in range(i + 1, k)))


def make_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    _require(a >= 1 and b >= 1, f"complete bipartite parts must be >= 1, got ({a}, {b})")
    return Graph(range(a + b), ((i, a + j) for i in range(a) for j in range(b)))


def make_fan(k: int) -> Graph:
    """Fan P_k + K_1: hub 0 joined to a path on ``1..k``."""
    _require(k >= 1, f"fan needs a path of at least 1 vertex, got {k}")
    return graph_join(make_complete(1), make_path(k).shifted(1))


def make_wheel(k: int) -> Graph:
    """Wheel C_k + K_1 (``k + 1`` vertices): hub 0, rim ``1..k``."""
    _require(k >= 3, f"wheel rim needs at least 3 vertices, got {k}")
    return graph_join(make_complete(1), make_cycle(k).shifted(1))


def overlapping_cycles(m: int, n: int, t: int) -> tuple[Graph, Graph]:
    """Two cycles C_m and C_n sharing the path ``0-1-...-t`` (t edges).

    With ``t == 0`` the cycles are vertex-disjoint.
    """
    _require(m >= 3 and n >= 3, f"cycle lengths must be >= 3, got ({m}, {n})")
    _require(0 <= t < min(m, n), f"shared path length must satisfy 0 <= t < min(m, n), got {t}")
    if t == 0:
        return make_cycle(m), make_cycle(n).shifted(m)
    _require(m + n - 2 * t >= 3, "cycles would coincide outside the shared path")
    c1 = make_cycle(m)
    fresh = list(range(m, m + n - t - 1))
    # 0..t along the shared path, then back to 0 through the fresh vertices
    walk = list(range(t + 1)) + fresh + [0]
    c2 = Graph(set(walk), zip(walk, walk[1:]))
    return c1, c2


# -- operations -----------------------------------------------------------

def _merged_names(g1: Graph, g2: Graph, keep: set[int] | None = None) -> dict[int, str]:
    names = dict(g1.names)
    for v, name in g2.names:
        if v in names and names[v] != name:
            raise InvalidParameterError(f"vertex {v} has conflicting names {names[v]!r} and {name!r}")
        names[v] = name
    if keep is not None:
        names = {v: n for v, n in names.items() if v in keep}
    return names


def graph_union(g1: Graph, g2: Graph) -> Graph:
    """V1 ∪ V2 and E1 ∪ E2, vertices identified by id."""
    return Graph(
        set(g1.vertices) | set(g2.vertices),
        g1.edges | g2.edges,
        _merged_names(g1, g2),
    )


def graph_intersection(g1: Graph, g2: Graph) -> Graph:
    common = set(g1.vertices) & set(g2.vertices)
    return Graph(common, g1.edges & g2.edges, _merged_names(g1, g2, common))


def graph_join(g1: Graph, g2: Graph) -> Graph:
    """Union plus every edge between V1 and V2.  Operands must be vertex-disjoint."""
    shared = set(g1.vertices) & set(g2.vertices)
    if shared:
        raise DisjointnessError(f"join operands share vertex ids {sorted(shared)}; relabel first")
    cross = {_norm_edge(u, v) for u in g1.vertices for v in g2.vertices}
    return Graph(
        set(g1.vertices) | set(g2.vertices),
        g1.edges | g2.edges | cross,
        _merged_names(g1, g2),
    )


def ring_sum(g1: Graph, g2: Graph) -> Graph:
    """Symmetric difference of the edge sets; vertices left isolated are dropped."""
    edges = g1.edges ^ g2.edges
    used = {v for e in edges for v in e}
    return Graph(used, edges, _merged_names(g1, g2, used))


def complement(g: Graph) -> Graph:
    vs = g.vertices
    edges = ((u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if (u, v) not in g.edges)
    return Graph(vs, edges, dict(g.names))


def subgraph_complement(g: Graph, h: Graph) -> Graph:
    """G - H for a subgraph H of G (the ring sum G ⊕ H)."""
    if not h.is_subgraph_of(g):
        raise NotASubgraphError("second graph is not a subgraph of the first")
    return ring_sum(g, h)


def is_bipartite(g: Graph) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | list[int]]:
    """2-colour ``g`` by BFS.

    Returns ``(True, (part0, part1))`` or ``(False, odd_cycle)`` where
    ``odd_cycle`` lists the vertices of an odd cycle in traversal order.
    """
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root], parent[root], depth[root] = 0, None, 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if w not in color:
                    color[w], parent[w], depth[w] = 1 - color[u], u, depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, _odd_cycle(u, w, parent, depth)
    part0 = tuple(v for v in g.vertices if color[v] == 0)
    part1 = tuple(v for v in g.vertices if color[v] == 1)
    return True, (part0, part1)


def _odd_cycle(u: int, w: int, parent: dict, depth: dict) -> list[int]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    return left + right[-2::-1]
