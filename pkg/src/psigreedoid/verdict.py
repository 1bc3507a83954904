"""Decision results paired with checkable witnesses.

Witnesses are plain dicts.  The key names tell renderers what each value is
(see ``WITNESS_KINDS``); vertex sets are stored as bitmasks and matchings as
sorted tuples of ``(u, v)`` pairs with ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from .graph import bits

# How the value under each witness key is encoded.
WITNESS_KINDS = {
    "set": "set",
    "sets": "sets",
    "X": "set",
    "Y": "set",
    "S": "set",
    "W": "set",
    "neighborhood": "set",
    "matching": "matching",
    "matchings": "matchings",
    "edge": "edge",
    "cycle": "vertices",
    "vertices": "vertices",
    "v": "vertex",
    "u": "vertex",
    "common": "vertex",
}


@dataclass(frozen=True)
class Verdict:
    value: bool
    witness: dict[str, Any] = field(default_factory=dict)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.value


@dataclass(frozen=True)
class AxiomFailure:
    """Which greedoid axiom failed and on which member sets."""

    axiom: str  # "accessibility" | "exchange" | "empty-set"
    X: Optional[int] = None
    Y: Optional[int] = None


@dataclass(frozen=True)
class GreedoidVerdict:
    """Outcome of a greedoid decision.

    Only the oracle path enumerates Psi, so only it fills ``failed_axiom``
    on a negative answer.  The fast deciders put their evidence in
    ``witness`` instead (two perfect matchings, a matching that is not
    uniquely restricted, or a member whose neighbourhood is not
    Konig-Egervary).
    """

    is_greedoid: bool
    decision_path: str  # "oracle" | "theorem10" | "theorem33"
    failed_axiom: Optional[AxiomFailure] = None
    witness: dict[str, Any] = field(default_factory=dict)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_greedoid


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _label(v: int, labels: Optional[list[str]]) -> Any:
    return labels[v] if labels else v


def render_set(mask: int, labels: Optional[list[str]] = None) -> list:
    return [_label(v, labels) for v in bits(mask)]


def render_matching(m: Iterable[tuple[int, int]], labels: Optional[list[str]] = None) -> str:
    """Sorted ``u-v`` pairs, comma separated."""
    pairs = sorted(tuple(sorted(e)) for e in m)
    return ",".join(f"{_label(u, labels)}-{_label(v, labels)}" for u, v in pairs)


def render_value(kind: Optional[str], value: Any, labels: Optional[list[str]] = None) -> Any:
    if value is None:
        return None
    if kind == "set":
        return render_set(value, labels)
    if kind == "sets":
        return [render_set(s, labels) for s in value]
    if kind == "matching":
        return render_matching(value, labels)
    if kind == "matchings":
        return [render_matching(m, labels) for m in value]
    if kind == "edge":
        return f"{_label(value[0], labels)}-{_label(value[1], labels)}"
    if kind == "vertices":
        return [_label(v, labels) for v in value]
    if kind == "vertex":
        return _label(value, labels)
    if isinstance(value, dict):
        return {k: render_value(WITNESS_KINDS.get(k), v, labels) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render_value(None, v, labels) for v in value]
    return value


def render_witness(witness: dict[str, Any], labels: Optional[list[str]] = None) -> dict[str, Any]:
    return {k: render_value(WITNESS_KINDS.get(k), v, labels) for k, v in sorted(witness.items())}


def verdict_to_json(verdict: Verdict, labels: Optional[list[str]] = None) -> dict[str, Any]:
    out: dict[str, Any] = {"value": verdict.value, "witness": render_witness(verdict.witness, labels)}
    if verdict.reason:
        out["reason"] = verdict.reason
    return out


def greedoid_verdict_to_json(verdict: GreedoidVerdict, labels: Optional[list[str]] = None) -> dict[str, Any]:
    out: dict[str, Any] = {
        "is_greedoid": verdict.is_greedoid,
        "decision_path": verdict.decision_path,
        "failed_axiom": None,
        "witness": render_witness(verdict.witness, labels),
    }
    fa = verdict.failed_axiom
    if fa is not None:
        out["failed_axiom"] = {
            "axiom": fa.axiom,
            "X": render_value("set", fa.X, labels),
            "Y": render_value("set", fa.Y, labels),
        }
    if verdict.reason:
        out["reason"] = verdict.reason
    return out
