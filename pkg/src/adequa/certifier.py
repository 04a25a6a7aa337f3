"""Hyperbolicity certificates and the quantities read off the state graphs.

A diagram is certified from one of two sides: the all-A state of the diagram
itself (``"A"``) or the all-A state of its mirror image (``"mirror"``), which
is the all-B state of the diagram.  The certifier never claims that a link is
not hyperbolic; anything it cannot settle comes back ``Inconclusive``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .diagram import BraidWord, DiagramError, PlanarDiagram, braid_closure
from .kauffman import circle_counts, loop_edges
from .polyhedral import SIDES, side_status
from .twist import (
    is_prime_diagram,
    nonalternating_bigons,
    normalize_bigons,
    nugatory_crossings,
    prime_cut_witness,
    region_of_crossing,
    twist_number,
    two_edge_loop_witness,
)

V8 = 3.663862376708876
"""Volume of the regular ideal octahedron."""

SIDE_LABELS = {"A": "A-on-D", "mirror": "A-on-mirror"}

PASS, FAIL, SKIPPED = "Pass", "Fail", "Skipped"


class HypothesisError(ValueError):
    """Raised when a quantity is requested outside the hypotheses that justify it."""


@dataclass
class Certificate:
    """Verdict, hypothesis outcomes, failure witnesses and derived quantities."""

    input: str
    verdict: str
    side: str | None
    reasons: list[dict[str, Any]] = field(default_factory=list)
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    quantities: dict[str, Any] = field(default_factory=dict)

    @property
    def hyperbolic(self) -> bool:
        return self.verdict == "Hyperbolic"

    @property
    def torus_q(self) -> int | None:
        if self.verdict.startswith("TorusLink("):
            return int(self.verdict[len("TorusLink("):-1])
        return None

    def outcome(self, name: str) -> str | None:
        for r in self.reasons:
            if r["name"] == name:
                return r["outcome"]
        return None

    def witness(self, name: str) -> dict[str, Any] | None:
        for w in self.witnesses:
            if w["reason"] == name:
                return w
        return None

    def to_json(self) -> dict[str, Any]:
        return {
            "input": self.input,
            "verdict": self.verdict,
            "side": SIDE_LABELS.get(self.side) if self.side else None,
            "reasons": [dict(r) for r in self.reasons],
            "witnesses": [dict(w) for w in self.witnesses],
            "quantities": dict(self.quantities),
        }


def turaev_genus(D: PlanarDiagram) -> int:
    """``(2 + c - s_A - s_B) / 2`` for a connected diagram.

    Raises:
        DiagramError: if ``D`` is disconnected.
    """
    if not D.is_connected():
        raise DiagramError("Turaev genus needs a connected diagram")
    s_a, s_b = circle_counts(D)
    twice = 2 + D.num_crossings - s_a - s_b
    if twice < 0 or twice % 2:
        raise AssertionError(f"circle counts {s_a}, {s_b} give a non-integral genus")
    return twice // 2


def nonsplit(D: PlanarDiagram) -> str:
    """``"NonSplit"`` for connected semi-adequate diagrams, else ``"Unknown"``."""
    if D.is_connected() and any(not loop_edges(D, c) for c in SIDES.values()):
        return "NonSplit"
    return "Unknown"


def _qualifying_sides(D: PlanarDiagram) -> list[tuple[str, int]]:
    out = []
    for side in SIDES:
        adequate, ok, chi = side_status(D, side)
        if adequate and ok:
            out.append((side, chi))
    return out


def link_primality(D: PlanarDiagram) -> str:
    """``"Prime"``, ``"Composite"`` or ``"Unknown"``.

    Decided from the diagram when it is connected, has no nugatory crossings
    and some side is adequate with the 2-edge loop condition; then the link is
    prime exactly when the diagram is.  The unknot is not prime, so a diagram
    without crossings gives ``"Unknown"``.
    """
    if not D.crossings or not D.is_connected() or nugatory_crossings(D) or not _qualifying_sides(D):
        return "Unknown"
    return "Prime" if is_prime_diagram(D) else "Composite"


def _pick(D: PlanarDiagram, side: str) -> tuple[str, tuple[bool, bool, int | None]]:
    """The side to report and its status.

    ``"auto"`` takes the qualifying side with the smallest chi of G' (A on
    ties).  When neither qualifies it reports the first adequate side, so
    that the witness is a 2-edge loop rather than a loop edge.
    """
    if side != "auto":
        if side not in SIDES:
            raise ValueError(f"unknown side {side!r}")
        return side, side_status(D, side)
    status = {s: side_status(D, s) for s in SIDES}
    good = [s for s in SIDES if status[s][0] and status[s][1]]
    if good:
        best = min(good, key=lambda s: status[s][2])
        return best, status[best]
    for s in SIDES:
        if status[s][0]:
            return s, status[s]
    return "A", status["A"]


def _quantities(D: PlanarDiagram, status, hyperbolic: bool) -> dict[str, Any]:
    adequate, ok, chi = status
    bound = -V8 * chi if hyperbolic else None
    return {
        "chi": chi,
        "volume_bound": bound,
        "effective_bound": max(bound, 0.0) if bound is not None else None,
        "turaev_genus": turaev_genus(D) if D.is_connected() else None,
        "guts_chi": max(-chi, 0) if adequate and ok and D.is_connected() else None,
        "nonsplit": nonsplit(D) == "NonSplit",
        "link_primality": link_primality(D),
    }


def certify(D: PlanarDiagram, side: str = "auto", normalize: bool = False, label: str | None = None) -> Certificate:
    """Check the hyperbolicity criterion and collect the derived quantities.

    Args:
        D: the diagram.
        side: ``"A"``, ``"mirror"`` or ``"auto"``.
        normalize: remove non-alternating bigons by Reidemeister II first.
        label: text recorded as the certificate input; defaults to the PD code.

    Returns:
        ``Hyperbolic`` when the diagram is connected and prime, has only
        alternating bigons, the chosen side is adequate with the 2-edge loop
        condition and there are at least two twist regions.  With everything
        but the last and a single twist region the verdict is
        ``TorusLink(q)``, q the crossing count.  Otherwise ``Inconclusive``.
    """
    text = label if label is not None else D.pd_string()
    if normalize:
        D = normalize_bigons(D)
    reasons: list[dict[str, Any]] = []
    witnesses: list[dict[str, Any]] = []

    def note(name: str, outcome: str, **witness) -> None:
        reasons.append({"name": name, "outcome": outcome})
        if outcome == FAIL:
            witnesses.append({"reason": name, **witness})

    connected = D.is_connected()
    note("connected", PASS if connected else FAIL, pieces=D.num_pieces)
    if connected:
        cut = prime_cut_witness(D)
        note("prime", PASS if cut is None else FAIL, arcs=list(cut or ()))
    else:
        note("prime", SKIPPED)

    bad = nonalternating_bigons(D)
    note("alternating_bigons", PASS if not bad else FAIL, crossings=sorted({x for x, _ in bad[0].corners}) if bad else [])

    chosen, status = _pick(D, side)
    c = SIDES[chosen]
    adequate, ok, _ = status
    if adequate:
        note("adequate", PASS)
        pair = None if ok else two_edge_loop_witness(D, c)
        if pair is None:
            note("two_edge_loop", PASS)
        else:
            where = region_of_crossing(D)
            note("two_edge_loop", FAIL, side=SIDE_LABELS[chosen], crossings=list(pair), regions=[where[x] for x in pair])
    else:
        note("adequate", FAIL, side=SIDE_LABELS[chosen], crossings=loop_edges(D, c))
        note("two_edge_loop", SKIPPED)

    tw = twist_number(D)
    hypotheses = all(r["outcome"] == PASS for r in reasons)
    if hypotheses and tw >= 2:
        verdict = "Hyperbolic"
        note("twist_number", PASS)
    elif hypotheses and tw == 1:
        verdict = f"TorusLink({D.num_crossings})"
        note("twist_number", PASS)
    else:
        verdict = "Inconclusive"
        note("twist_number", PASS if tw >= 1 else FAIL, twist_number=tw)

    cert = Certificate(text, verdict, chosen, reasons, witnesses)
    cert.quantities = _quantities(D, status, verdict == "Hyperbolic")
    cert.quantities["twist_number"] = tw
    return cert


def certify_braid(b: BraidWord, label: str | None = None) -> Certificate:
    """Certify a braid closure from its syllable exponents.

    When every syllable exponent is at least 3 (or every one at most -3) and
    the closure is a connected prime diagram, the closure is hyperbolic
    outright.  Otherwise the closure goes through :func:`certify`.

    Raises:
        HypothesisError: for braids on fewer than three strands.
    """
    if b.strand_count < 3:
        raise HypothesisError("braid criterion needs at least 3 strands; certify the closure instead")
    D = braid_closure(b)
    text = label if label is not None else str(b)
    exps = [e for _, e in b.syllables()]
    positive = bool(exps) and all(e >= 3 for e in exps)
    negative = bool(exps) and all(e <= -3 for e in exps)
    if not (positive or negative) or not D.is_connected() or not is_prime_diagram(D):
        return certify(D, label=text)
    side = "A" if positive else "mirror"
    reasons = [
        {"name": "braid_strands", "outcome": PASS},
        {"name": "syllable_exponents", "outcome": PASS},
        {"name": "connected", "outcome": PASS},
        {"name": "prime", "outcome": PASS},
    ]
    cert = Certificate(text, "Hyperbolic", side, reasons, [])
    cert.quantities = _quantities(D, side_status(D, side), True)
    cert.quantities["twist_number"] = twist_number(D)
    return cert


def volume_lower_bound(D: PlanarDiagram, side: str = "auto") -> tuple[float, float]:
    """``(-v8 * chi(G'), max(that, 0))`` for a certified hyperbolic diagram.

    Raises:
        HypothesisError: if the diagram does not certify as hyperbolic.
    """
    cert = certify(D, side=side)
    if not cert.hyperbolic:
        raise HypothesisError(f"volume bound needs a Hyperbolic certificate, got {cert.verdict}")
    return cert.quantities["volume_bound"], cert.quantities["effective_bound"]
