"""Matchings: maximum matchings, perfect matching enumeration, uniquely
restricted matchings, Property P and Konig-Egervary recognition.

A matching is a sorted tuple of ``(u, v)`` pairs with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import ContractViolation, check_cap
from .graph import Graph, bits
from .stable import alpha
from .verdict import Verdict

Matching = tuple[tuple[int, int], ...]

PERFECT_CAP = 20
EXHAUSTIVE_CAP = 16
_CACHE = 4096


def make_matching(pairs: Iterable[tuple[int, int]]) -> Matching:
    """Normalise ``pairs`` and check that they are vertex disjoint."""
    out = sorted((min(u, v), max(u, v)) for u, v in pairs)
    seen = 0
    for u, v in out:
        if u == v:
            raise ContractViolation(f"degenerate edge {u}-{v}")
        if seen >> u & 1 or seen >> v & 1:
            raise ContractViolation(f"edges are not vertex disjoint at {u}-{v}")
        seen |= (1 << u) | (1 << v)
    return tuple(out)


def saturated(m: Matching) -> int:
    mask = 0
    for u, v in m:
        mask |= (1 << u) | (1 << v)
    return mask


def is_matching_of(g: Graph, m: Matching) -> bool:
    seen = 0
    for u, v in m:
        if not g.has_edge(u, v) or seen >> u & 1 or seen >> v & 1:
            return False
        seen |= (1 << u) | (1 << v)
    return True


def _require_matching(g: Graph, m: Matching) -> None:
    if not is_matching_of(g, m):
        raise ContractViolation(f"{m} is not a matching of the graph")


# ---------------------------------------------------------------------------
# maximum matching: Edmonds' blossom algorithm
# ---------------------------------------------------------------------------

def _edmonds(n: int, nbrs: list[list[int]]) -> list[int]:
    """Mate array of a maximum cardinality matching (-1 = unmatched).

    Grows alternating BFS trees from each free vertex, contracting odd cycles
    by relabelling their vertices with the cycle's base.
    """
    match = [-1] * n
    # greedy start
    for v in range(n):
        if match[v] < 0:
            for u in nbrs[v]:
                if match[u] < 0:
                    match[v], match[u] = u, v
                    break

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] >= 0 or not nbrs[root]:
            continue
        end, parent = find_augmenting(root)
        # flip the edges along the augmenting path back to the root
        v = end
        while v >= 0:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return match


@lru_cache(maxsize=_CACHE)
def maximum_matching(g: Graph) -> Matching:
    """A maximum matching by augmenting paths with blossom contraction."""
    n = g.n
    mate = _edmonds(n, [bits(nb) for nb in g.adj])
    return tuple((v, mate[v]) for v in range(n) if mate[v] > v)


def mu(g: Graph) -> int:
    return len(maximum_matching(g))


# ---------------------------------------------------------------------------
# exhaustive reference matcher
# ---------------------------------------------------------------------------

class _SubsetMu:
    """Memoised ``mu(G[mask])``: the lowest vertex is either left unmatched
    or matched to one of its neighbours."""

    __slots__ = ("adj", "memo")

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.memo: dict[int, int] = {}

    def __call__(self, mask: int) -> int:
        memo = self.memo
        r = memo.get(mask)
        if r is not None:
            return r
        adj = self.adj
        r = 0
        m = mask
        while m:
            low = m & -m
            rest = m ^ low
            nb = adj[low.bit_length() - 1] & rest
            if nb:
                r = self(rest)
                while nb:
                    b = nb & -nb
                    nb ^= b
                    c = 1 + self(rest ^ b)
                    if c > r:
                        r = c
                break
            m = rest
        memo[mask] = r
        return r


@lru_cache(maxsize=64)
def subset_mu(g: Graph) -> _SubsetMu:
    check_cap(g.n, EXHAUSTIVE_CAP, "exhaustive matching")
    return _SubsetMu(g)


def maximum_matching_exhaustive(g: Graph) -> Matching:
    """A maximum matching from the subset recursion (n <= 16)."""
    f = subset_mu(g)
    adj = g.adj
    out = []
    mask = g.full
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        target = f(mask)
        if f(rest) == target:
            mask = rest
            continue
        for u in bits(adj[v] & rest):
            if 1 + f(rest & ~(1 << u)) == target:
                out.append((v, u))
                mask = rest & ~(1 << u)
                break
    return tuple(out)


def mu_exhaustive(g: Graph) -> int:
    return subset_mu(g)(g.full)


# ---------------------------------------------------------------------------
# enumeration of perfect and maximum matchings
# ---------------------------------------------------------------------------

def _perfect_within(adj: tuple[int, ...], mask: int, limit: Optional[int]) -> list[Matching]:
    out: list[Matching] = []
    if mask.bit_count() % 2:
        return out

    def rec(rest: int, acc: list[tuple[int, int]]) -> bool:
        if not rest:
            out.append(tuple(acc))
            return limit is not None and len(out) >= limit
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        for u in bits(adj[v] & rest):
            acc.append((v, u))
            if rec(rest & ~(1 << u), acc):
                return True
            acc.pop()
        return False

    rec(mask, [])
    return out


def enumerate_perfect_matchings(g: Graph, limit: Optional[int] = None) -> list[Matching]:
    """All perfect matchings, pairing the lowest unmatched vertex first.
    Odd ``n`` gives an empty list."""
    check_cap(g.n, PERFECT_CAP, "perfect matching enumeration")
    return _perfect_within(g.adj, g.full, limit)


def iter_maximum_matchings(g: Graph) -> Iterator[Matching]:
    """Every matching of size ``mu(G)`` (n <= 16), deterministic order."""
    check_cap(g.n, EXHAUSTIVE_CAP, "maximum matching enumeration")
    f = subset_mu(g)
    adj = g.adj
    need_total = mu(g)
    stack: list[tuple[int, int, Matching]] = [(g.full, need_total, ())]
    while stack:
        rest, need, acc = stack.pop()
        if need == 0:
            yield acc
            continue
        if f(rest) < need:
            continue
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        branches = [(rest, need, acc)]
        for u in bits(adj[v] & rest):
            branches.append((rest & ~(1 << u), need - 1, acc + ((v, u),)))
        stack.extend(reversed(branches))


@lru_cache(maxsize=_CACHE)
def maximum_matchings(g: Graph) -> tuple[Matching, ...]:
    return tuple(iter_maximum_matchings(g))


def has_perfect_matching(g: Graph) -> bool:
    return 2 * mu(g) == g.n


@lru_cache(maxsize=_CACHE)
def has_unique_perfect_matching(g: Graph) -> Verdict:
    """Exactly one perfect matching.  For a very well-covered graph every
    maximum matching is perfect, so this is also uniqueness of the maximum
    matching there."""
    found = enumerate_perfect_matchings(g, limit=2)
    if not found:
        return Verdict(False, {"matchings": ()}, "no perfect matching")
    if len(found) == 2:
        return Verdict(False, {"matchings": tuple(found)}, "two distinct perfect matchings")
    return Verdict(True, {"matching": found[0]})


# ---------------------------------------------------------------------------
# uniquely restricted matchings
# ---------------------------------------------------------------------------

@lru_cache(maxsize=65536)
def _two_perfect_within(g: Graph, mask: int) -> tuple[Matching, ...]:
    # at most two perfect matchings of G[mask], shared by all matchings on mask
    return tuple(_perfect_within(g.adj, mask, limit=2))


def is_uniquely_restricted(g: Graph, m: Matching) -> Verdict:
    """``m`` is the only perfect matching of ``G[V(m)]``.  A negative verdict
    carries a second perfect matching of that subgraph."""
    _require_matching(g, m)
    m = tuple(sorted(m))
    for other in _two_perfect_within(g, saturated(m)):
        if other != m:
            return Verdict(False, {"matching": other}, "another perfect matching on V(M)")
    return Verdict(True)


def find_alternating_cycle(g: Graph, m: Matching) -> Optional[list[int]]:
    """A cycle whose edges alternate between ``m`` and ``E - m``, as a vertex
    list starting with its smallest vertex, or ``None``.

    Such a cycle only visits ``m``-saturated vertices.  The search fixes the
    smallest vertex ``s`` of the cycle, leaves it along its matching edge to
    ``t`` and then alternates non-matching / matching steps through larger
    vertices until a non-matching edge returns to ``s``.
    """
    _require_matching(g, m)
    mate = [-1] * g.n
    for u, v in m:
        mate[u] = v
        mate[v] = u
    sat = saturated(m)
    adj = g.adj
    for s in range(g.n):
        t = mate[s]
        if t < s:
            continue
        above = sat & ~((2 << s) - 1)
        sbit = 1 << s
        # depth-first over (untried candidates, path so far, visited mask)
        stack = [(adj[t] & above & ~(1 << t), (s, t), sbit | (1 << t))]
        while stack:
            cand, path, visited = stack.pop()
            while cand:
                low = cand & -cand
                cand ^= low
                y = mate[low.bit_length() - 1]
                ybit = 1 << y
                if visited & ybit:
                    continue
                new_path = path + (low.bit_length() - 1, y)
                if adj[y] & sbit:
                    return list(new_path)
                stack.append((cand, path, visited))
                seen = visited | low | ybit
                stack.append((adj[y] & above & ~seen, new_path, seen))
                break
    return None


def is_uniquely_restricted_alternating(g: Graph, m: Matching) -> Verdict:
    cycle = find_alternating_cycle(g, m)
    if cycle is None:
        return Verdict(True)
    return Verdict(False, {"cycle": cycle}, "alternating cycle")


@lru_cache(maxsize=_CACHE)
def all_maximum_matchings_uniquely_restricted(g: Graph) -> Verdict:
    check_cap(g.n, EXHAUSTIVE_CAP, "uniquely restricted check")
    for m in maximum_matchings(g):
        if not is_uniquely_restricted(g, m):
            return Verdict(False, {"matching": m}, "maximum matching is not uniquely restricted")
    return Verdict(True)


# ---------------------------------------------------------------------------
# Property P and very well-covered recognition
# ---------------------------------------------------------------------------

def satisfies_property_p(g: Graph, m: Matching) -> Verdict:
    """For every ``xy`` in the perfect matching ``m``: ``N(x)`` and ``N(y)``
    are disjoint and every ``v`` in ``N(x) - y`` is adjacent to every ``u`` in
    ``N(y) - x``.  Edges are scanned with ``x < y`` in sorted order."""
    _require_matching(g, m)
    if 2 * len(m) != g.n:
        raise ContractViolation("Property P is defined for perfect matchings only")
    adj = g.adj
    for x, y in sorted(m):
        common = adj[x] & adj[y]
        if common:
            return Verdict(False, {"edge": (x, y), "common": bits(common)[0]},
                           "matched edge lies on a triangle")
        for v in bits(adj[x] & ~(1 << y)):
            missing = adj[y] & ~(1 << x) & ~adj[v]
            if missing:
                u = bits(missing)[0]
                return Verdict(False, {"edge": (x, y), "v": v, "u": u},
                               "neighbour pair is not adjacent")
    return Verdict(True)


@lru_cache(maxsize=_CACHE)
def is_very_well_covered_property_p(g: Graph) -> Verdict:
    """Find one maximum matching; the graph is very well-covered iff it is
    perfect and satisfies Property P (one such matching suffices, and then
    every perfect matching has the property)."""
    isolated = g.isolated_vertices()
    if g.n == 0:
        return Verdict(False, reason="empty graph")
    if isolated:
        return Verdict(False, {"vertices": isolated}, "isolated vertex")
    m = maximum_matching(g)
    if 2 * len(m) != g.n:
        return Verdict(False, {"matching": m}, "no perfect matching")
    p = satisfies_property_p(g, m)
    if not p:
        return Verdict(False, {"matching": m, **p.witness}, "Property P fails: " + p.reason)
    return Verdict(True, {"matching": m})


@lru_cache(maxsize=_CACHE)
def is_konig_egervary(g: Graph) -> Verdict:
    a, k = alpha(g), mu(g)
    return Verdict(a + k == g.n, {"alpha": a, "mu": k, "n": g.n})


def matching_in_cut(g: Graph, m: Matching, s: int) -> bool:
    """Every edge of ``m`` has exactly one endpoint in ``s``."""
    return all((s >> u & 1) != (s >> v & 1) for u, v in m)
