"""The named example graphs and the claims recorded for each of them.

Edge lists live in ``data/catalog.txt``; this module parses that file and
evaluates claims against the deciders.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .errors import ParseError
from .graph import ACYCLIC, Graph, closed_neighborhood, girth, induced_subgraph, is_connected, is_triangle_free
from .greedoid import psi_greedoid_oracle
from .matching import (
    Matching,
    all_maximum_matchings_uniquely_restricted,
    has_perfect_matching,
    has_unique_perfect_matching,
    is_konig_egervary,
    is_uniquely_restricted,
    make_matching,
    mu,
    satisfies_property_p,
)
from .stable import (
    alpha,
    extends_to_maximum,
    is_local_max_stable,
    is_stable,
    is_very_well_covered_definition,
    is_well_covered,
    maximal_sizes,
)
from .verdict import Verdict


@dataclass(frozen=True)
class Claim:
    kind: str
    args: tuple[str, ...]

    def __str__(self) -> str:
        return " ".join((self.kind,) + self.args)


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    labels: tuple[str, ...]
    claims: tuple[Claim, ...] = ()
    source: str = ""
    coords: dict[str, str] = field(default_factory=dict)

    @property
    def vertex_labels(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def vertex_set(self, text: str) -> int:
        if text == "-":
            return 0
        index = self.vertex_labels
        mask = 0
        for lab in text.split(","):
            if lab not in index:
                raise KeyError(f"{self.name}: unknown vertex label {lab!r}")
            mask |= 1 << index[lab]
        return mask

    def matching(self, text: str) -> Matching:
        index = self.vertex_labels
        pairs = []
        for item in text.split(","):
            a, b = item.split("-")
            pairs.append((index[a], index[b]))
        return make_matching(pairs)


def parse_catalog(text: str) -> list[NamedGraph]:
    records: list[NamedGraph] = []
    current: dict | None = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "graph":
            if current is not None:
                raise ParseError("nested graph record", lineno)
            current = {"name": rest, "labels": None, "edges": [], "claims": [], "source": "", "coords": {}}
        elif current is None:
            raise ParseError(f"{key!r} outside a graph record", lineno)
        elif key == "source":
            current["source"] = rest
        elif key == "coords":
            for item in rest.split():
                lab, _, xy = item.partition("=")
                current["coords"][lab] = xy
        elif key == "labels":
            current["labels"] = tuple(rest.split())
        elif key == "edges":
            current["edges"].extend(tuple(e.split("-")) for e in rest.split())
        elif key == "claim":
            parts = rest.split()
            current["claims"].append(Claim(parts[0], tuple(parts[1:])))
        elif key == "end":
            labels = current["labels"]
            if labels is None or len(set(labels)) != len(labels):
                raise ParseError(f"{current['name']}: labels missing or repeated", lineno)
            index = {lab: i for i, lab in enumerate(labels)}
            try:
                edges = [(index[a], index[b]) for a, b in current["edges"]]
            except KeyError as exc:
                raise ParseError(f"{current['name']}: unknown label {exc.args[0]!r}", lineno) from None
            records.append(NamedGraph(current["name"], Graph.from_edges(len(labels), edges), labels,
                                      tuple(current["claims"]), current["source"], current["coords"]))
            current = None
        else:
            raise ParseError(f"unknown record key {key!r}", lineno)
    if current is not None:
        raise ParseError(f"record {current['name']} is not terminated by 'end'")
    return records


@lru_cache(maxsize=1)
def catalog() -> tuple[NamedGraph, ...]:
    text = resources.files("psigreedoid").joinpath("data/catalog.txt").read_text(encoding="utf-8")
    return tuple(parse_catalog(text))


def get(name: str) -> NamedGraph:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog graph named {name!r}")


# ---------------------------------------------------------------------------
# claims
# ---------------------------------------------------------------------------

def _bool(text: str) -> bool:
    if text not in ("true", "false"):
        raise ValueError(f"expected true/false, got {text!r}")
    return text == "true"


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def check_claim(entry: NamedGraph, claim: Claim) -> Verdict:
    """Evaluate one claim; the verdict is true when the claim holds and its
    witness records what was observed."""
    g = entry.graph
    kind, args = claim.kind, claim.args

    def expect(observed, expected) -> Verdict:
        return Verdict(observed == expected, {"observed": observed, "expected": expected})

    if kind == "well_covered":
        return expect(is_well_covered(g).value, _bool(args[0]))
    if kind == "very_well_covered":
        return expect(is_very_well_covered_definition(g).value, _bool(args[0]))
    if kind == "konig_egervary":
        return expect(is_konig_egervary(g).value, _bool(args[0]))
    if kind == "perfect_matching":
        return expect(has_perfect_matching(g), _bool(args[0]))
    if kind == "unique_perfect_matching":
        return expect(has_unique_perfect_matching(g).value, _bool(args[0]))
    if kind == "triangle_free":
        return expect(is_triangle_free(g), _bool(args[0]))
    if kind == "girth":
        gi = girth(g)
        return expect("acyclic" if gi is ACYCLIC else gi, args[0] if args[0] == "acyclic" else int(args[0]))
    if kind == "alpha":
        return expect(alpha(g), int(args[0]))
    if kind == "mu":
        return expect(mu(g), int(args[0]))
    if kind == "maximal_sizes":
        return expect(sorted(maximal_sizes(g)), sorted(int(x) for x in args[0].split(",")))
    if kind == "stable":
        return expect(is_stable(g, entry.vertex_set(args[0])), _bool(args[1]))
    if kind == "in_psi":
        s = entry.vertex_set(args[0])
        return expect(is_stable(g, s) and is_local_max_stable(g, s), _bool(args[1]))
    if kind == "extends":
        return expect(extends_to_maximum(g, entry.vertex_set(args[0])).value, _bool(args[1]))
    if kind == "ur":
        return expect(is_uniquely_restricted(g, entry.matching(args[0])).value, _bool(args[1]))
    if kind == "all_max_ur":
        return expect(all_maximum_matchings_uniquely_restricted(g).value, _bool(args[0]))
    if kind == "psi_greedoid":
        return expect(psi_greedoid_oracle(g).is_greedoid, _bool(args[0]))
    if kind in ("nbhd_ke", "nbhd_cycle"):
        sub, _ = induced_subgraph(g, closed_neighborhood(g, entry.vertex_set(args[0])))
        if kind == "nbhd_ke":
            return expect(is_konig_egervary(sub).value, _bool(args[1]))
        return expect(sub.n if _is_cycle(sub) else None, int(args[1]))
    if kind == "property_p_violation":
        verdict = satisfies_property_p(g, entry.matching(args[0]))
        w = verdict.witness
        observed = None
        if not verdict and "v" in w:
            x, y = w["edge"]
            observed = (f"{entry.labels[x]}-{entry.labels[y]}", entry.labels[w["v"]], entry.labels[w["u"]])
        return expect(observed, tuple(args[1:4]))
    raise ValueError(f"unknown claim kind {kind!r}")


def check_all_claims(entries=None) -> list[tuple[NamedGraph, Claim, Verdict]]:
    out = []
    for entry in entries if entries is not None else catalog():
        for claim in entry.claims:
            out.append((entry, claim, check_claim(entry, claim)))
    return out


_PHRASES = {
    "well_covered": ("well-covered", "not well-covered"),
    "very_well_covered": ("very well-covered", "not very well-covered"),
    "konig_egervary": ("Konig-Egervary", "not Konig-Egervary"),
    "perfect_matching": ("has a perfect matching", "has no perfect matching"),
    "unique_perfect_matching": ("unique perfect matching", "perfect matching not unique"),
    "triangle_free": ("triangle-free", "has a triangle"),
    "all_max_ur": ("all maximum matchings uniquely restricted",
                   "some maximum matching not uniquely restricted"),
    "psi_greedoid": ("Psi is a greedoid", "Psi not a greedoid"),
}


def describe_claim(claim: Claim) -> str:
    """A readable rendering of one claim line."""
    kind, args = claim.kind, claim.args
    if kind in _PHRASES:
        yes, no = _PHRASES[kind]
        return yes if _bool(args[0]) else no
    if kind in ("alpha", "mu", "girth"):
        return f"{kind} = {args[0]}"
    if kind == "maximal_sizes":
        return f"maximal stable set sizes {{{args[0]}}}"
    set_kinds = {
        "stable": ("{%s} is stable", "{%s} is not stable"),
        "in_psi": ("{%s} in Psi", "{%s} not in Psi"),
        "extends": ("{%s} lies in a maximum stable set", "{%s} lies in no maximum stable set"),
        "ur": ("matching {%s} uniquely restricted", "matching {%s} not uniquely restricted"),
        "nbhd_ke": ("G[N[{%s}]] Konig-Egervary", "G[N[{%s}]] not Konig-Egervary"),
    }
    if kind in set_kinds:
        yes, no = set_kinds[kind]
        return (yes if _bool(args[1]) else no) % args[0]
    if kind == "nbhd_cycle":
        return f"G[N[{{{args[0]}}}]] is a {args[1]}-cycle"
    if kind == "property_p_violation":
        return f"matching {{{args[0]}}} breaks Property P at edge {args[1]} (pair {args[2]}, {args[3]})"
    return str(claim)
