"""Simple undirected graphs on vertices ``0..n-1`` with bitmask vertex sets.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member.  Graphs are immutable: ``adj[v]`` is the bitmask of ``N(v)``.
"""

from __future__ import annotations

import enum
import random
from collections import deque
from itertools import combinations
from typing import Iterable, Iterator

from .errors import ParseError, check_cap

MAX_VERTICES = 32
ENUMERATION_CAP = 8


class Acyclic(enum.Enum):
    """Girth of a forest."""

    ACYCLIC = "acyclic"

    def __repr__(self) -> str:
        return "ACYCLIC"


ACYCLIC = Acyclic.ACYCLIC


# ---------------------------------------------------------------------------
# bitmask helpers
# ---------------------------------------------------------------------------

def bits(mask: int) -> list[int]:
    """Members of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


# ---------------------------------------------------------------------------
# Graph
# ---------------------------------------------------------------------------

def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must lie in 0..{MAX_VERTICES}, got {n}")


class Graph:
    """Immutable simple graph.  ``adj`` is a tuple of neighbourhood bitmasks."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        _check_n(n)
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self._hash = hash((n, adj))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # Skips validation; callers guarantee a symmetric loop-free adjacency.
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = hash((n, adj))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_n(n)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n = {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n <count>"`` followed by one ``"u v"`` line per edge.

    Blank lines and lines starting with ``#`` are ignored.  Duplicate edges
    collapse.  Errors carry the 1-based line number.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"expected header 'n <count>', got {line!r}", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"vertex count is not an integer: {parts[1]!r}", lineno) from None
            if not 0 <= n <= MAX_VERTICES:
                raise ParseError(f"vertex count must lie in 0..{MAX_VERTICES}", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"vertex indices must be integers: {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}: {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header 'n <count>'")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# neighbourhoods and subgraphs
# ---------------------------------------------------------------------------

def open_neighborhood(g: Graph, a: int) -> int:
    """``N(A)``: vertices outside ``a`` with at least one neighbour in ``a``."""
    out = 0
    adj = g.adj
    m = a
    while m:
        low = m & -m
        out |= adj[low.bit_length() - 1]
        m ^= low
    return out & ~a


def closed_neighborhood(g: Graph, a: int) -> int:
    return a | open_neighborhood(g, a)


def induced_subgraph(g: Graph, x: int) -> tuple[Graph, dict[int, int]]:
    """``G[X]`` relabelled onto ``0..|X|-1`` (order preserving), with the
    old-to-new index map."""
    members = bits(x)
    index = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        nb = 0
        for u in bits(g.adj[v] & x):
            nb |= 1 << index[u]
        adj.append(nb)
    return Graph._trusted(len(members), tuple(adj)), index


def girth(g: Graph) -> int | Acyclic:
    """Length of a shortest cycle, or ``ACYCLIC`` for forests.

    BFS from every vertex; a non-tree edge ``uw`` met from root ``r`` closes a
    closed walk of length ``d(u) + d(w) + 1`` and the minimum over all roots is
    the girth.
    """
    best = None
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if best is not None and 2 * du + 1 >= best:
                break
            for w in bits(adj[u]):
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = du + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return ACYCLIC if best is None else best


def girth_at_least(g: Graph, k: int) -> bool:
    """Forests qualify for every ``k``."""
    gi = girth(g)
    return gi is ACYCLIC or gi >= k


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.n):
        higher = adj[u] >> (u + 1) << (u + 1)
        for v in bits(higher):
            if adj[u] & adj[v]:
                return False
    return True


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in bits(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        frontier = open_neighborhood(g, seen)
        seen |= frontier
    return seen == g.full


def chordless_cycle_lengths_through_edge(g: Graph, u: int, v: int) -> set[int]:
    """Lengths of all chordless (induced) cycles that use the edge ``uv``.

    Grows induced paths from ``v``: a new vertex may touch no earlier path
    vertex except its predecessor, and a vertex adjacent to ``u`` can only
    close the cycle.  Exponential; intended for small graphs.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge")
    lengths: set[int] = set()
    adj = g.adj
    ubit = 1 << u

    def grow(last: int, earlier: int, visited: int, count: int) -> None:
        # count = vertices on the path v..last
        for w in bits(adj[last] & ~visited & ~ubit):
            if adj[w] & earlier:
                continue
            if adj[w] & ubit:
                lengths.add(count + 2)
                continue
            grow(w, visited, visited | (1 << w), count + 1)

    # u sits outside `earlier` until the cycle closes, so only v's later
    # neighbours are checked against it.
    grow(v, 0, (1 << v), 1)
    return lengths


# ---------------------------------------------------------------------------
# constructions and generators
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    _check_n(n)
    return Graph._trusted(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    _check_n(n)
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(q: int) -> Graph:
    if q < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(q, [(i, (i + 1) % q) for i in range(q)])


def add_isolated_vertex(g: Graph) -> Graph:
    _check_n(g.n + 1)
    return Graph._trusted(g.n + 1, g.adj + (0,))


def corona_k1(h: Graph) -> Graph:
    """``H o K1``: vertex ``v`` of ``h`` keeps its index and receives the
    private pendant vertex ``v + |V(h)|``."""
    n = h.n
    _check_n(2 * n)
    adj = [nb | (1 << (v + n)) for v, nb in enumerate(h.adj)]
    adj.extend(1 << v for v in range(n))
    return Graph._trusted(2 * n, tuple(adj))


def enumerate_all_graphs(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices, in edge-bitmask order.

    Graph number ``k`` has edge ``pairs[i]`` iff bit ``i`` of ``k`` is set,
    where ``pairs`` lists ``(u, v)``, ``u < v``, lexicographically.
    """
    check_cap(n, cap, "exhaustive graph enumeration")
    pairs = list(combinations(range(n), 2))
    # bit i of k contributes (1 << v) to adj[u] and (1 << u) to adj[v]
    terms = [(u, v, 1 << u, 1 << v) for u, v in pairs]
    for k in range(1 << len(pairs)):
        adj = [0] * n
        i = 0
        while k:
            if k & 1:
                u, v, bu, bv = terms[i]
                adj[u] |= bv
                adj[v] |= bu
            k >>= 1
            i += 1
        yield Graph._trusted(n, tuple(adj))


def graph_index(g: Graph) -> int:
    """Position of ``g`` in :func:`enumerate_all_graphs` order."""
    k = 0
    for i, (u, v) in enumerate(combinations(range(g.n), 2)):
        if g.adj[u] >> v & 1:
            k |= 1 << i
    return k


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)``; pairs are drawn lexicographically from
    ``random.Random(seed)``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)
