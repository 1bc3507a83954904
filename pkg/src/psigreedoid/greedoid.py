"""Greedoid axioms, the brute-force Psi-greedoid oracle and the two fast
deciders for very well-covered and triangle-free graphs."""

from __future__ import annotations

from .errors import ContractViolation, PreconditionError, check_cap
from .family import SetFamily
from .graph import Graph, closed_neighborhood, chordless_cycle_lengths_through_edge, girth_at_least, is_triangle_free
from .matching import (
    all_maximum_matchings_uniquely_restricted,
    enumerate_perfect_matchings,
    has_unique_perfect_matching,
    is_very_well_covered_property_p,
    subset_mu,
)
from .stable import alpha_of_subset, enumerate_psi
from .verdict import AxiomFailure, GreedoidVerdict, Verdict

ORACLE_CAP = 20
TRIANGLE_FREE_CAP = 16
METHODS = ("theorem10", "theorem33", "oracle")


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def _require_nonempty(f: SetFamily) -> None:
    if not len(f):
        raise ContractViolation("a greedoid family must be non-empty")


def check_accessibility(f: SetFamily) -> Verdict:
    """Every non-empty member loses some element and stays a member.

    A family without the empty set fails with ``reason == "empty set missing"``
    before any member is inspected: descent could never terminate.
    """
    _require_nonempty(f)
    if 0 not in f:
        return Verdict(False, {}, "empty set missing")
    for x in f:
        if not x:
            continue
        m = x
        while m:
            low = m & -m
            if x ^ low in f:
                break
            m ^= low
        else:
            return Verdict(False, {"X": x}, "no element can be removed")
    return Verdict(True)


def check_exchange(f: SetFamily) -> Verdict:
    """For ``|X| = |Y| + 1`` some ``x`` in ``X - Y`` has ``Y + x`` in ``f``.

    Pairs are scanned by increasing ``|Y|``, then ascending ``X``, then
    ascending ``Y``; the first failing pair is the witness.
    """
    _require_nonempty(f)
    levels = f.by_size()
    full = (1 << f.ground_n) - 1
    for k in sorted(levels):
        upper = levels.get(k + 1)
        if not upper:
            continue
        # ext[Y]: elements x outside Y with Y + x in f
        lower = []
        for y in levels[k]:
            ext = 0
            m = full & ~y
            while m:
                low = m & -m
                if y | low in f:
                    ext |= low
                m ^= low
            lower.append((y, ext))
        for x in upper:
            for y, ext in lower:
                if not x & ext:
                    return Verdict(False, {"X": x, "Y": y}, "no element of X - Y extends Y")
    return Verdict(True)


def is_greedoid(f: SetFamily, decision_path: str = "oracle") -> GreedoidVerdict:
    """Accessibility first, then exchange; the first failure is reported."""
    acc = check_accessibility(f)
    if not acc:
        if acc.reason == "empty set missing":
            return GreedoidVerdict(False, decision_path, AxiomFailure("empty-set"), reason=acc.reason)
        return GreedoidVerdict(False, decision_path, AxiomFailure("accessibility", X=acc.witness["X"]),
                               reason=acc.reason)
    exc = check_exchange(f)
    if not exc:
        return GreedoidVerdict(False, decision_path,
                               AxiomFailure("exchange", X=exc.witness["X"], Y=exc.witness["Y"]),
                               reason=exc.reason)
    return GreedoidVerdict(True, decision_path)


def psi_greedoid_oracle(g: Graph) -> GreedoidVerdict:
    """Enumerate ``Psi(G)`` and check both axioms directly."""
    check_cap(g.n, ORACLE_CAP, "Psi greedoid oracle")
    return is_greedoid(enumerate_psi(g), "oracle")


# ---------------------------------------------------------------------------
# fast deciders
# ---------------------------------------------------------------------------

def _require_very_well_covered(g: Graph, method: str) -> None:
    vwc = is_very_well_covered_property_p(g)
    if not vwc:
        raise PreconditionError(method, f"graph is not very well-covered ({vwc.reason})")


def decide_theorem10(g: Graph) -> GreedoidVerdict:
    """For a very well-covered graph of girth at least 4, ``Psi(G)`` is a
    greedoid exactly when the perfect matching is unique.

    Raises :class:`PreconditionError` outside that class instead of guessing.
    """
    _require_very_well_covered(g, "theorem10")
    if not girth_at_least(g, 4):
        raise PreconditionError("theorem10", "graph has a triangle (girth 3)")
    unique = has_unique_perfect_matching(g)
    return GreedoidVerdict(unique.value, "theorem10", witness=dict(unique.witness), reason=unique.reason)


def _neighborhood_ke(g: Graph, s: int) -> tuple[bool, int, int, int]:
    nbhd = closed_neighborhood(g, s)
    a = alpha_of_subset(g, nbhd)
    m = subset_mu(g)(nbhd)
    return a + m == nbhd.bit_count(), nbhd, a, m


def decide_theorem33(g: Graph) -> GreedoidVerdict:
    """For a triangle-free graph, ``Psi(G)`` is a greedoid exactly when all
    maximum matchings are uniquely restricted and ``G[N[S]]`` is
    Konig-Egervary for every local maximum stable set ``S``.

    The matching clause is checked first; the first offending matching or set
    becomes the witness.
    """
    if not is_triangle_free(g):
        raise PreconditionError("theorem33", "graph contains a triangle")
    check_cap(g.n, TRIANGLE_FREE_CAP, "theorem33 decider")
    ur = all_maximum_matchings_uniquely_restricted(g)
    if not ur:
        return GreedoidVerdict(False, "theorem33", witness=dict(ur.witness), reason=ur.reason)
    for s in enumerate_psi(g):
        if not s:
            continue
        ok, nbhd, a, m = _neighborhood_ke(g, s)
        if not ok:
            return GreedoidVerdict(False, "theorem33",
                                   witness={"S": s, "neighborhood": nbhd, "alpha": a, "mu": m},
                                   reason="closed neighbourhood of S is not Konig-Egervary")
    return GreedoidVerdict(True, "theorem33")


def decide(g: Graph, method: str = "auto") -> GreedoidVerdict:
    """Dispatch to one decider.  ``auto`` tries theorem10, then theorem33,
    then the oracle, and the verdict records which one answered."""
    if method == "theorem10":
        return decide_theorem10(g)
    if method == "theorem33":
        return decide_theorem33(g)
    if method == "oracle":
        return psi_greedoid_oracle(g)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    try:
        return decide_theorem10(g)
    except PreconditionError:
        pass
    if g.n <= TRIANGLE_FREE_CAP:
        try:
            return decide_theorem33(g)
        except PreconditionError:
            pass
    return psi_greedoid_oracle(g)


# ---------------------------------------------------------------------------
# verifiers (true is expected on every very well-covered graph)
# ---------------------------------------------------------------------------

def verify_theorem7(g: Graph) -> Verdict:
    """Every non-empty ``S`` in ``Psi(G)`` has a Konig-Egervary closed
    neighbourhood."""
    _require_very_well_covered(g, "theorem7")
    check_cap(g.n, TRIANGLE_FREE_CAP, "neighbourhood Konig-Egervary verifier")
    for s in enumerate_psi(g):
        if not s:
            continue
        ok, nbhd, a, m = _neighborhood_ke(g, s)
        if not ok:
            return Verdict(False, {"S": s, "neighborhood": nbhd, "alpha": a, "mu": m},
                           "closed neighbourhood of S is not Konig-Egervary")
    return Verdict(True)


def verify_lemma1(g: Graph) -> Verdict:
    """No edge of a perfect matching lies on a chordless cycle of length 3
    or >= 5.  (Chords matter: in K_{3,3} every matching edge lies on a
    6-cycle, but that cycle always has a chord.)"""
    _require_very_well_covered(g, "lemma1")
    check_cap(g.n, TRIANGLE_FREE_CAP, "matching-edge cycle verifier")
    lengths: dict[tuple[int, int], set[int]] = {}
    for m in enumerate_perfect_matchings(g):
        for e in m:
            if e not in lengths:
                lengths[e] = chordless_cycle_lengths_through_edge(g, *e)
            bad = sorted(q for q in lengths[e] if q == 3 or q >= 5)
            if bad:
                return Verdict(False, {"matching": m, "edge": e, "cycle_length": bad[0]},
                               "perfect matching edge on a forbidden chordless cycle")
    return Verdict(True)

