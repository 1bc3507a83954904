"""Stable sets: alpha, maximum and maximal stable sets, well-coveredness and
local maximum stable sets.

Everything here is exact and exponential in the worst case.  The routines are
the reference oracle for the fast deciders in :mod:`psigreedoid.greedoid`, so
they favour plain exhaustive logic over cleverness.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import ContractViolation, check_cap
from .family import SetFamily
from .graph import Graph, bits, closed_neighborhood
from .verdict import Verdict

PSI_CAP = 20
_CACHE = 4096


def is_stable(g: Graph, s: int) -> bool:
    adj = g.adj
    m = s
    while m:
        low = m & -m
        if adj[low.bit_length() - 1] & s:
            return False
        m ^= low
    return True


# ---------------------------------------------------------------------------
# alpha
# ---------------------------------------------------------------------------

def _branch_and_bound(adj: tuple[int, ...], mask: int) -> int:
    """Largest stable subset of ``mask``, returned as a bitmask.

    Vertices of degree 0 or 1 (within the remaining candidates) are taken
    greedily, which never loses optimality.  Otherwise branch on a vertex of
    maximum degree: include it and drop its neighbours, or exclude it.  A
    branch is cut when even taking every remaining candidate cannot beat the
    incumbent.
    """
    best = [0, -1]  # mask, size

    def search(cand: int, chosen: int, size: int) -> None:
        while True:
            reduced = False
            m = cand
            while m:
                low = m & -m
                m ^= low
                nb = adj[low.bit_length() - 1] & cand
                if nb & (nb - 1) == 0:  # degree 0 or 1
                    chosen |= low
                    size += 1
                    cand &= ~(low | nb)
                    m &= cand
                    reduced = True
            if not reduced:
                break
        if not cand:
            if size > best[1]:
                best[0], best[1] = chosen, size
            return
        if size + cand.bit_count() <= best[1]:
            return
        pivot_bit, pivot_deg = 0, -1
        m = cand
        while m:
            low = m & -m
            m ^= low
            d = (adj[low.bit_length() - 1] & cand).bit_count()
            if d > pivot_deg:
                pivot_bit, pivot_deg = low, d
        v = pivot_bit.bit_length() - 1
        search(cand & ~(pivot_bit | adj[v]), chosen | pivot_bit, size + 1)
        search(cand & ~pivot_bit, chosen, size)

    search(mask, 0, 0)
    return best[0]


@lru_cache(maxsize=_CACHE)
def maximum_stable_set(g: Graph) -> int:
    return _branch_and_bound(g.adj, g.full)


def maximum_stable_subset(g: Graph, within: int) -> int:
    """A maximum stable set of ``G[within]`` (as a mask of ``g``'s vertices)."""
    return _branch_and_bound(g.adj, within)


def alpha(g: Graph) -> int:
    return maximum_stable_set(g).bit_count()


class _SubsetAlpha:
    """Memoised ``alpha(G[mask])`` for many masks of one graph.

    Plain max-degree branching (include / exclude) with the same degree <= 1
    reductions as the branch-and-bound, but cached per mask instead of bounded.
    """

    __slots__ = ("adj", "memo")

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.memo: dict[int, int] = {0: 0}

    def __call__(self, mask: int) -> int:
        memo = self.memo
        r = memo.get(mask)
        if r is not None:
            return r
        adj = self.adj
        pivot_bit, pivot_deg = 0, -1
        m = mask
        while m:
            low = m & -m
            m ^= low
            nb = adj[low.bit_length() - 1] & mask
            if nb & (nb - 1) == 0:
                r = 1 + self(mask & ~(low | nb))
                break
            d = nb.bit_count()
            if d > pivot_deg:
                pivot_bit, pivot_deg = low, d
        else:
            v = pivot_bit.bit_length() - 1
            r = max(self(mask & ~pivot_bit), 1 + self(mask & ~(pivot_bit | adj[v])))
        memo[mask] = r
        return r


@lru_cache(maxsize=64)
def subset_alpha(g: Graph) -> _SubsetAlpha:
    return _SubsetAlpha(g)


def _trace_maximum(g: Graph, sub: _SubsetAlpha, mask: int) -> int:
    """A maximum stable subset of ``mask`` read off the memoised sizes."""
    adj = g.adj
    out = 0
    target = sub(mask)
    while target:
        low = mask & -mask
        taken = mask & ~(low | adj[low.bit_length() - 1])
        if 1 + sub(taken) == target:
            out |= low
            mask = taken
            target -= 1
        else:
            mask ^= low
    return out


def alpha_of_subset(g: Graph, mask: int) -> int:
    """``alpha(G[mask])``."""
    return subset_alpha(g)(mask)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def iter_stable_sets(g: Graph, within: int | None = None) -> Iterator[int]:
    """Every stable subset of ``within`` (default: all vertices), including
    the empty set.  Order is a depth-first include/exclude walk."""
    adj = g.adj
    stack = [(g.full if within is None else within, 0)]
    while stack:
        cand, chosen = stack.pop()
        if not cand:
            yield chosen
            continue
        low = cand & -cand
        v = low.bit_length() - 1
        stack.append((cand & ~(low | adj[v]), chosen | low))
        stack.append((cand ^ low, chosen))


@lru_cache(maxsize=_CACHE)
def stable_sets(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(iter_stable_sets(g)))


def enumerate_maximum_stable_sets(g: Graph) -> SetFamily:
    """``Omega(G)`` in ascending bitmask order."""
    check_cap(g.n, 32, "maximum stable set enumeration")
    a = alpha(g)
    adj = g.adj
    found = []
    stack = [(g.full, 0, 0)]
    while stack:
        cand, chosen, size = stack.pop()
        if size + cand.bit_count() < a:
            continue
        if not cand:
            found.append(chosen)
            continue
        low = cand & -cand
        v = low.bit_length() - 1
        stack.append((cand & ~(low | adj[v]), chosen | low, size + 1))
        stack.append((cand ^ low, chosen, size))
    return SetFamily(g.n, found)


def _is_maximal(g: Graph, s: int) -> bool:
    return closed_neighborhood(g, s) == g.full


def iter_maximal_stable_sets(g: Graph) -> Iterator[int]:
    """Inclusion-maximal stable sets, i.e. the stable sets that dominate."""
    full = g.full
    for s in stable_sets(g):
        if closed_neighborhood(g, s) == full:
            yield s


def enumerate_maximal_stable_sets(g: Graph) -> SetFamily:
    check_cap(g.n, 32, "maximal stable set enumeration")
    return SetFamily(g.n, iter_maximal_stable_sets(g))


def maximal_sizes(g: Graph) -> dict[int, int]:
    """Multiset of maximal stable set sizes, as ``size -> count``."""
    counts: dict[int, int] = {}
    for s in iter_maximal_stable_sets(g):
        k = s.bit_count()
        counts[k] = counts.get(k, 0) + 1
    return dict(sorted(counts.items()))


# ---------------------------------------------------------------------------
# well-coveredness
# ---------------------------------------------------------------------------

@lru_cache(maxsize=_CACHE)
def is_well_covered(g: Graph) -> Verdict:
    """All maximal stable sets have one size.  A negative verdict carries
    one maximal set of each of two different sizes (smallest masks first)."""
    check_cap(g.n, 32, "well-covered recognition")
    first_of_size: dict[int, int] = {}
    for s in iter_maximal_stable_sets(g):
        k = s.bit_count()
        if k not in first_of_size:
            first_of_size[k] = s
            if len(first_of_size) == 2:
                a, b = sorted(first_of_size.items())
                return Verdict(False, {"sets": (a[1], b[1])},
                               f"maximal stable sets of sizes {a[0]} and {b[0]}")
    return Verdict(True)


@lru_cache(maxsize=_CACHE)
def is_very_well_covered_definition(g: Graph) -> Verdict:
    """Well-covered, no isolated vertex and ``|V| = 2 alpha``."""
    if g.n == 0:
        return Verdict(False, reason="empty graph")
    isolated = g.isolated_vertices()
    if isolated:
        return Verdict(False, {"vertices": isolated}, "isolated vertex")
    a = alpha(g)
    if g.n != 2 * a:
        return Verdict(False, {"alpha": a, "n": g.n}, "|V| != 2 alpha")
    wc = is_well_covered(g)
    if not wc:
        return Verdict(False, wc.witness, "not well-covered: " + wc.reason)
    return Verdict(True)


def is_very_well_covered(g: Graph) -> bool:
    return is_very_well_covered_definition(g).value


# ---------------------------------------------------------------------------
# local maximum stable sets
# ---------------------------------------------------------------------------

def is_local_max_stable(g: Graph, s: int) -> bool:
    """``S`` is a maximum stable set of ``G[N[S]]``."""
    if not is_stable(g, s):
        raise ContractViolation(f"{bits(s)} is not a stable set")
    return s.bit_count() == alpha_of_subset(g, closed_neighborhood(g, s))


@lru_cache(maxsize=256)
def enumerate_psi(g: Graph) -> SetFamily:
    """``Psi(G)``, the local maximum stable sets.  The empty set is always a
    member (its closed neighbourhood is empty)."""
    check_cap(g.n, PSI_CAP, "Psi enumeration")
    sub = subset_alpha(g)
    adj = g.adj
    members = []
    for s in stable_sets(g):
        nbhd = s
        m = s
        while m:
            low = m & -m
            nbhd |= adj[low.bit_length() - 1]
            m ^= low
        if s.bit_count() == sub(nbhd):
            members.append(s)
    return SetFamily(g.n, members)


def extends_to_maximum(g: Graph, s: int) -> Verdict:
    """Is ``s`` contained in some maximum stable set?

    The largest stable superset of ``s`` is ``s`` plus a maximum stable set of
    ``G - N[s]``.  A positive verdict carries it as ``W``; a negative one
    carries the best achievable size against ``alpha``.
    """
    if not is_stable(g, s):
        raise ContractViolation(f"{bits(s)} is not a stable set")
    sub = subset_alpha(g)
    a = sub(g.full)
    rest = g.full & ~closed_neighborhood(g, s)
    k = sub(rest)
    if s.bit_count() + k == a:
        return Verdict(True, {"W": s | _trace_maximum(g, sub, rest)})
    return Verdict(False, {"largest_extension": s.bit_count() + k, "alpha": a},
                   "no maximum stable set contains the set")


def stable_report(g: Graph) -> dict:
    """alpha, Omega(G) and the multiset of maximal stable set sizes."""
    return {
        "alpha": alpha(g),
        "omega": enumerate_maximum_stable_sets(g),
        "maximal_sizes": maximal_sizes(g),
    }
