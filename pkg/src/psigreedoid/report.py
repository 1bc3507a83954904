"""Per-graph analysis report: the basic invariants, the coverage flags and a
greedoid verdict from every decision path that applies."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .errors import CapExceeded, ContractViolation, PreconditionError
from .graph import ACYCLIC, Graph, girth, is_triangle_free
from .greedoid import ORACLE_CAP, TRIANGLE_FREE_CAP, decide_theorem10, decide_theorem33, psi_greedoid_oracle
from .matching import is_konig_egervary, is_very_well_covered_property_p, mu
from .stable import PSI_CAP, alpha, enumerate_psi, is_well_covered
from .verdict import GreedoidVerdict, greedoid_verdict_to_json, render_set

# Well-coveredness scans every stable set, so it shares the Psi cap.
WELL_COVERED_CAP = PSI_CAP
PATHS = ("theorem10", "theorem33", "oracle")


def _skipped(n: int, cap: int) -> str:
    return f"skipped: n exceeds cap ({n} > {cap})"


@dataclass
class AnalysisReport:
    graph_id: str
    n: int
    edges: int
    girth: int | str
    triangle_free: bool
    alpha: int
    mu: int
    deficit: int
    well_covered: Optional[bool]
    very_well_covered: bool
    konig_egervary: bool
    psi: Optional[list] = None  # members, rendered; None when skipped
    notes: list[str] = field(default_factory=list)
    # path -> verdict, or a string saying why the path did not run
    greedoid: dict[str, GreedoidVerdict | str] = field(default_factory=dict)
    labels: Optional[list[str]] = None

    def consistency_problems(self) -> list[str]:
        problems = []
        if self.very_well_covered and self.well_covered is False:
            problems.append("very well-covered but not well-covered")
        if self.very_well_covered and not self.konig_egervary:
            problems.append("very well-covered but not Konig-Egervary")
        if (self.deficit == 0) != self.konig_egervary:
            problems.append("deficit and Konig-Egervary flag disagree")
        if self.deficit < 0:
            problems.append("negative deficit")
        if self.psi is not None and [] not in self.psi:
            problems.append("Psi misses the empty set")
        ran = [v for v in self.greedoid.values() if isinstance(v, GreedoidVerdict)]
        if len({v.is_greedoid for v in ran}) > 1:
            problems.append("decision paths disagree")
        return problems

    def check(self) -> None:
        problems = self.consistency_problems()
        if problems:
            raise ContractViolation(f"{self.graph_id}: inconsistent report: " + "; ".join(problems))

    def to_json(self) -> dict[str, Any]:
        greedoid = {}
        for path in PATHS:
            v = self.greedoid.get(path)
            if isinstance(v, GreedoidVerdict):
                greedoid[path] = greedoid_verdict_to_json(v, self.labels)
            else:
                greedoid[path] = {"skipped": v}
        return {
            "graph": self.graph_id,
            "n": self.n,
            "edges": self.edges,
            "girth": self.girth,
            "triangle_free": self.triangle_free,
            "alpha": self.alpha,
            "mu": self.mu,
            "deficit": self.deficit,
            "well_covered": self.well_covered,
            "very_well_covered": self.very_well_covered,
            "konig_egervary": self.konig_egervary,
            "psi_size": None if self.psi is None else len(self.psi),
            "psi": self.psi,
            "notes": self.notes,
            "greedoid": greedoid,
        }

    def to_text(self) -> str:
        def flag(b: Optional[bool]) -> str:
            return "skipped" if b is None else str(b).lower()

        lines = [
            f"graph: {self.graph_id}",
            f"vertices: {self.n}",
            f"edges: {self.edges}",
            f"girth: {self.girth}",
            f"triangle-free: {flag(self.triangle_free)}",
            f"alpha: {self.alpha}",
            f"mu: {self.mu}",
            f"deficit |V|-alpha-mu: {self.deficit}",
            f"well-covered: {flag(self.well_covered)}",
            f"very-well-covered: {flag(self.very_well_covered)}",
            f"KE: {flag(self.konig_egervary)}",
        ]
        if self.psi is None:
            lines.append("Psi: " + _skipped(self.n, PSI_CAP))
        else:
            shown = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.psi)
            lines.append(f"Psi size: {len(self.psi)}")
            lines.append(f"Psi: {shown}")
        for path in PATHS:
            v = self.greedoid.get(path)
            if isinstance(v, GreedoidVerdict):
                lines.append(f"greedoid({path}): {str(v.is_greedoid).lower()}")
            else:
                lines.append(f"greedoid({path}): {v}")
        lines.extend(f"note: {note}" for note in self.notes)
        return "\n".join(lines) + "\n"


def build_report(g: Graph, graph_id: str = "input", labels: Optional[list[str]] = None) -> AnalysisReport:
    """Compute every section that fits under its cap and check the report's
    internal consistency before returning it."""
    gi = girth(g)
    a, k = alpha(g), mu(g)
    notes = []
    wc: Optional[bool] = None
    if g.n <= WELL_COVERED_CAP:
        wc = is_well_covered(g).value
    else:
        notes.append("well-covered " + _skipped(g.n, WELL_COVERED_CAP))
    report = AnalysisReport(
        graph_id=graph_id,
        n=g.n,
        edges=g.num_edges(),
        girth="acyclic" if gi is ACYCLIC else gi,
        triangle_free=is_triangle_free(g),
        alpha=a,
        mu=k,
        deficit=g.n - a - k,
        well_covered=wc,
        very_well_covered=is_very_well_covered_property_p(g).value,
        konig_egervary=is_konig_egervary(g).value,
        notes=notes,
        labels=labels,
    )
    if g.n <= PSI_CAP:
        report.psi = [render_set(s, labels) for s in enumerate_psi(g)]
    for path, run, cap in (("theorem10", decide_theorem10, None),
                           ("theorem33", decide_theorem33, TRIANGLE_FREE_CAP),
                           ("oracle", psi_greedoid_oracle, ORACLE_CAP)):
        if cap is not None and g.n > cap:
            report.greedoid[path] = _skipped(g.n, cap)
            continue
        try:
            report.greedoid[path] = run(g)
        except PreconditionError as exc:
            report.greedoid[path] = f"not applicable: {exc.reason}"
        except CapExceeded as exc:
            report.greedoid[path] = f"skipped: {exc}"
    report.check()
    return report
