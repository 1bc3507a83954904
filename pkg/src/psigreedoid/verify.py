"""Verification campaigns: run check suites over graph corpora and count
agreements between fast deciders and brute-force oracles.

Every suite maps a graph to ``None`` (outside the suite's scope) or a
:class:`Verdict` whose value says whether the checked statement held.  A
campaign streams a corpus once and feeds each graph to every selected suite,
so per-graph caches are shared between suites.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .errors import PreconditionError
from .graph import (
    Graph,
    bits,
    corona_k1,
    enumerate_all_graphs,
    girth_at_least,
    is_bipartite,
    is_connected,
    is_triangle_free,
    random_graph,
)
from .greedoid import decide_theorem10, decide_theorem33, psi_greedoid_oracle, verify_lemma1, verify_theorem7
from .matching import (
    EXHAUSTIVE_CAP,
    enumerate_perfect_matchings,
    find_alternating_cycle,
    has_unique_perfect_matching,
    is_konig_egervary,
    is_uniquely_restricted,
    is_very_well_covered_property_p,
    matching_in_cut,
    maximum_matchings,
    mu,
    mu_exhaustive,
    satisfies_property_p,
)
from .stable import (
    PSI_CAP,
    alpha,
    enumerate_maximum_stable_sets,
    enumerate_psi,
    extends_to_maximum,
    is_very_well_covered_definition,
    is_well_covered,
    iter_maximal_stable_sets,
)
from .verdict import Verdict

log = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE = 7
SLOW_EXHAUSTIVE = 8
RANDOM_CAP = 16
CORONA_BASE_CAP = 7
MAX_REPORTED = 20

# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Exhaustive:
    """All labelled graphs with ``n_min <= n <= n_max`` vertices."""

    n_max: int
    n_min: int = 1

    def describe(self) -> dict:
        return {"kind": "exhaustive", "n_min": self.n_min, "n_max": self.n_max}

    def __iter__(self) -> Iterator[tuple[str, Graph]]:
        for n in range(self.n_min, self.n_max + 1):
            for k, g in enumerate(enumerate_all_graphs(n, cap=SLOW_EXHAUSTIVE)):
                yield f"exhaustive:n={n}:#{k}", g


@dataclass(frozen=True)
class RandomSample:
    """``count`` Erdos-Renyi graphs.  Graph ``i`` has
    ``n_min + i % (n_max - n_min + 1)`` vertices and seed ``seed + i``."""

    n_min: int
    n_max: int
    p: float
    seed: int
    count: int

    def describe(self) -> dict:
        return {"kind": "random", "n_min": self.n_min, "n_max": self.n_max, "p": self.p,
                "seed": self.seed, "count": self.count}

    def __iter__(self) -> Iterator[tuple[str, Graph]]:
        span = self.n_max - self.n_min + 1
        for i in range(self.count):
            n = self.n_min + i % span
            s = self.seed + i
            yield f"random:n={n}:p={self.p}:seed={s}", random_graph(n, self.p, s)


def atlas_graphs(n_max: int) -> Iterator[tuple[int, Graph]]:
    """One graph per isomorphism class on at most 7 vertices (the networkx
    graph atlas), with its atlas index."""
    import networkx as nx

    if n_max > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    for index, G in enumerate(nx.graph_atlas_g()):
        n = G.number_of_nodes()
        if n <= n_max:
            yield index, Graph.from_edges(n, G.edges())


@dataclass(frozen=True)
class CoronaBases:
    """Bases for the corona suite: every isomorphism class on at most
    ``n_max`` vertices with girth >= 5 or no cycle."""

    n_max: int

    def describe(self) -> dict:
        return {"kind": "corona_bases", "n_max": self.n_max}

    def __iter__(self) -> Iterator[tuple[str, Graph]]:
        for index, g in atlas_graphs(self.n_max):
            if girth_at_least(g, 5):
                yield f"atlas:G{index}", g


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

Check = Callable[[Graph], Optional[Verdict]]


def _agree(a: bool, b: bool, **witness) -> Verdict:
    return Verdict(a == b, {k: v for k, v in witness.items()})


def check_theorem10(g: Graph) -> Optional[Verdict]:
    if g.n > PSI_CAP or not is_very_well_covered_definition(g) or not girth_at_least(g, 4):
        return None
    try:
        fast = decide_theorem10(g).is_greedoid
    except PreconditionError as exc:
        return Verdict(False, {"error": str(exc)}, "decider refused an in-scope graph")
    oracle = psi_greedoid_oracle(g)
    return _agree(fast, oracle.is_greedoid, fast=fast, oracle=oracle.is_greedoid)


def check_theorem33(g: Graph) -> Optional[Verdict]:
    if g.n > EXHAUSTIVE_CAP or not is_triangle_free(g):
        return None
    fast = decide_theorem33(g).is_greedoid
    oracle = psi_greedoid_oracle(g).is_greedoid
    return _agree(fast, oracle, fast=fast, oracle=oracle)


def check_theorem5(g: Graph) -> Optional[Verdict]:
    if g.isolated_vertices():
        return None
    vwc = is_very_well_covered_definition(g).value
    wc_ke = is_well_covered(g).value and is_konig_egervary(g).value
    return _agree(vwc, wc_ke, very_well_covered=vwc, well_covered_and_ke=wc_ke)


def check_theorem11(g: Graph) -> Optional[Verdict]:
    if g.n > 20:
        return None
    by_definition = is_very_well_covered_definition(g).value
    by_property_p = is_very_well_covered_property_p(g).value
    if by_definition != by_property_p:
        return Verdict(False, {"definition": by_definition, "property_p": by_property_p})
    if by_definition:
        for m in enumerate_perfect_matchings(g):
            p = satisfies_property_p(g, m)
            if not p:
                return Verdict(False, {"matching": m, **p.witness}, "a perfect matching fails Property P")
    return Verdict(True)


def check_theorem4(g: Graph) -> Optional[Verdict]:
    if g.n > EXHAUSTIVE_CAP or not is_konig_egervary(g):
        return None
    omega = enumerate_maximum_stable_sets(g)
    for m in maximum_matchings(g):
        for s in omega:
            if not matching_in_cut(g, m, s):
                return Verdict(False, {"matching": m, "S": s}, "maximum matching leaves the cut")
    return Verdict(True)


def check_theorem1(g: Graph) -> Optional[Verdict]:
    if g.n > PSI_CAP:
        return None
    for s in enumerate_psi(g):
        if not extends_to_maximum(g, s):
            return Verdict(False, {"S": s}, "local maximum stable set outside every maximum stable set")
    return Verdict(True)


def check_theorem7(g: Graph) -> Optional[Verdict]:
    if g.n > EXHAUSTIVE_CAP or not is_very_well_covered_definition(g):
        return None
    return verify_theorem7(g)


def check_lemma1(g: Graph) -> Optional[Verdict]:
    if g.n > EXHAUSTIVE_CAP or not is_very_well_covered_definition(g):
        return None
    return verify_lemma1(g)


def check_corollary1(h: Graph) -> Optional[Verdict]:
    """``h`` is a base: its corona must generate a greedoid."""
    if 2 * h.n > PSI_CAP or not girth_at_least(h, 5):
        return None
    verdict = psi_greedoid_oracle(corona_k1(h))
    return Verdict(verdict.is_greedoid, {"base_edges": h.edges()})


def check_girth5_structure(g: Graph) -> Optional[Verdict]:
    """A connected very well-covered graph of girth >= 5 is a corona: each
    vertex is a leaf or has exactly one leaf neighbour, and the leaf edges are
    the unique perfect matching."""
    if g.n < 2 or not is_connected(g) or not girth_at_least(g, 5) or not is_very_well_covered_definition(g):
        return None
    leaves = 0
    for v in range(g.n):
        if g.degree(v) == 1:
            leaves |= 1 << v
    pendant = []
    for v in range(g.n):
        if leaves >> v & 1:
            continue
        leaf_nbrs = bits(g.adj[v] & leaves)
        if len(leaf_nbrs) != 1:
            return Verdict(False, {"v": v}, "vertex without exactly one leaf neighbour")
        pendant.append(tuple(sorted((v, leaf_nbrs[0]))))
    pendant_m = tuple(sorted(pendant))
    unique = has_unique_perfect_matching(g)
    if g.n == 2:
        pendant_m = ((0, 1),)
    if not unique or unique.witness["matching"] != pendant_m:
        return Verdict(False, {"matching": pendant_m}, "leaf edges are not the unique perfect matching")
    return Verdict(True)


def check_matching_engines(g: Graph) -> Optional[Verdict]:
    if g.n > EXHAUSTIVE_CAP:
        return None
    a, b = mu(g), mu_exhaustive(g)
    return _agree(a, b, blossom=a, exhaustive=b)


def check_ur_dual(g: Graph) -> Optional[Verdict]:
    if g.n > EXHAUSTIVE_CAP:
        return None
    for m in maximum_matchings(g):
        by_definition = is_uniquely_restricted(g, m).value
        by_cycles = find_alternating_cycle(g, m) is None
        if by_definition != by_cycles:
            return Verdict(False, {"matching": m, "definition": by_definition, "alternating": by_cycles})
    return Verdict(True)


def check_alpha_engines(g: Graph) -> Optional[Verdict]:
    a = alpha(g)
    b = max(s.bit_count() for s in iter_maximal_stable_sets(g))
    return _agree(a, b, branch_and_bound=a, maximal_scan=b)


def check_bipartite_ke(g: Graph) -> Optional[Verdict]:
    if not is_bipartite(g):
        return None
    return is_konig_egervary(g)


@dataclass(frozen=True)
class Suite:
    name: str
    scope: str
    check: Check
    corpus: str = "main"  # "main" | "corona"


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("theorem10", "very well-covered, girth >= 4 or acyclic", check_theorem10),
    Suite("theorem33", "triangle-free, n <= 16", check_theorem33),
    Suite("theorem5", "no isolated vertex", check_theorem5),
    Suite("theorem11", "all graphs", check_theorem11),
    Suite("theorem4", "Konig-Egervary graphs", check_theorem4),
    Suite("theorem1", "all graphs, n <= 20", check_theorem1),
    Suite("theorem7", "very well-covered", check_theorem7),
    Suite("lemma1", "very well-covered", check_lemma1),
    Suite("corollary1", "bases of girth >= 5 or acyclic", check_corollary1, corpus="corona"),
    Suite("girth5", "connected very well-covered, girth >= 5 or acyclic", check_girth5_structure),
    Suite("matching", "n <= 16: blossom mu equals exhaustive mu", check_matching_engines),
    Suite("ur", "n <= 16: both uniquely-restricted tests agree on every maximum matching", check_ur_dual),
    Suite("alpha", "branch-and-bound alpha equals the largest maximal stable set", check_alpha_engines),
    Suite("bipartite", "bipartite graphs are Konig-Egervary", check_bipartite_ke),
]}


def resolve_suites(names: Iterable[str]) -> list[Suite]:
    out: list[Suite] = []
    for name in names:
        if name == "all":
            selected = list(SUITES.values())
        elif name in SUITES:
            selected = [SUITES[name]]
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
        out.extend(s for s in selected if s not in out)
    return out


# ---------------------------------------------------------------------------
# campaign
# ---------------------------------------------------------------------------


@dataclass
class SuiteSummary:
    suite: str
    scope: str
    scanned: int = 0
    in_scope: int = 0
    agreements: int = 0
    disagreements: int = 0
    failures: list = field(default_factory=list)

    def record(self, graph_id: str, g: Graph, verdict: Optional[Verdict]) -> None:
        self.scanned += 1
        if verdict is None:
            return
        self.in_scope += 1
        if verdict.value:
            self.agreements += 1
        else:
            self.disagreements += 1
            if len(self.failures) < MAX_REPORTED:
                self.failures.append({"graph": graph_id, "edges": g.edges(), "n": g.n,
                                      "witness": verdict.witness, "reason": verdict.reason})

    @property
    def passed(self) -> bool:
        return self.disagreements == 0

    def to_json(self) -> dict:
        from .verdict import render_witness

        return {
            "suite": self.suite,
            "scope": self.scope,
            "scanned": self.scanned,
            "in_scope": self.in_scope,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "failures": [{**f, "witness": render_witness(f["witness"])} for f in self.failures],
        }


@dataclass
class CampaignSummary:
    corpora: list[dict]
    suites: list[SuiteSummary]
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def suite(self, name: str) -> SuiteSummary:
        for s in self.suites:
            if s.suite == name:
                return s
        raise KeyError(name)

    def to_json(self) -> dict:
        # elapsed time is deliberately left out: the payload must be reproducible
        return {
            "corpora": self.corpora,
            "passed": self.passed,
            "suites": [s.to_json() for s in self.suites],
        }


def run_campaign(suites: list[Suite], corpora: list, corona_corpora: Iterable = (),
                 progress: Optional[Callable[[int], None]] = None) -> CampaignSummary:
    """Stream each corpus once, feeding every graph to every suite."""
    import time

    start = time.perf_counter()
    summaries = {s.name: SuiteSummary(s.name, s.scope) for s in suites}
    main = [s for s in suites if s.corpus == "main"]
    corona = [s for s in suites if s.corpus == "corona"]
    corona_corpora = list(corona_corpora)
    described = []
    count = 0
    for corpus in corpora if main else []:
        described.append(corpus.describe())
        for graph_id, g in corpus:
            for s in main:
                summaries[s.name].record(graph_id, g, s.check(g))
            count += 1
            if progress and count % 100000 == 0:
                progress(count)
    for corpus in corona_corpora if corona else []:
        described.append(corpus.describe())
        for graph_id, g in corpus:
            for s in corona:
                summaries[s.name].record(graph_id, g, s.check(g))
    elapsed = time.perf_counter() - start
    log.info("campaign finished: %d graphs in %.1fs", count, elapsed)
    return CampaignSummary(described, [summaries[s.name] for s in suites], elapsed)
