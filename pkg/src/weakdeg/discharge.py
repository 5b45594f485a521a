"""Exact-rational discharging over vertices and faces.

Initial charges are μ(v) = 2·deg(v) − 6 and μ(f) = deg(f) − 6, which sum to
−12 on a connected sphere embedding.  A rule system then moves charge in two
phases: the simultaneous phase-1 rules, a snapshot μ*, and the phase-2 rules
that redistribute special-face surplus (μ*/t, clamped at zero) and route
vertex-to-bad-face payments *via* special faces (the via face is bookkeeping
only; its own charge is untouched).  All arithmetic is `fractions.Fraction`;
no floats anywhere.

Every movement is a ledger entry, so for any element
final = initial − out + in can be audited line by line, and the grand total
is checked to still be −12 after each phase.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .classify import (
    FaceClassification,
    VertexClassification,
    classify_faces,
    classify_vertices,
)
from .core import Face, PlaneGraph
from .cycles import C468, C469, _check_class
from .errors import Disconnected, UnknownElement

Element = tuple[str, int]  # ("v", vertex id) or ("f", face id)


def element_str(e: Element) -> str:
    return f"{e[0]}{e[1]}"


def parse_element(text: str) -> Element:
    kind, rest = text[:1], text[1:]
    if kind not in ("v", "f") or not rest.isdigit():
        raise UnknownElement(f"element must look like v12 or f3, got {text!r}")
    return (kind, int(rest))


@dataclass(frozen=True)
class Transfer:
    """One ledger line: `amount` moves from `source` to `target` under `rule`.

    `via` names the special face a phase-2 payment is routed through; `clamped`
    marks a special-face redistribution whose μ* was negative and was sent as
    zero instead.
    """

    rule: str
    source: Element
    target: Element
    amount: Fraction
    via: int | None = None
    clamped: bool = False


@dataclass
class DischargeResult:
    """Charges before, between, and after the two phases, plus the full ledger."""

    class_id: str
    initial: dict[Element, Fraction]
    after_phase1: dict[Element, Fraction]
    final: dict[Element, Fraction]
    ledger: tuple[Transfer, ...]
    vertex_classes: VertexClassification
    face_classes: FaceClassification
    diagnostics: tuple[str, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    def min_final(self) -> Fraction:
        return min(self.final.values())

    def charge(self, e: Element) -> Fraction:
        if e not in self.final:
            raise UnknownElement(f"no element {element_str(e)}")
        return self.final[e]


@dataclass(frozen=True)
class ElementAudit:
    """The discharging story of one element, reconciled."""

    element: Element
    initial: Fraction
    outgoing: tuple[Transfer, ...]
    incoming: tuple[Transfer, ...]
    final: Fraction

    @property
    def reconciles(self) -> bool:
        out = sum((t.amount for t in self.outgoing), Fraction(0))
        inc = sum((t.amount for t in self.incoming), Fraction(0))
        return self.initial - out + inc == self.final


def initial_charge(G: PlaneGraph) -> dict[Element, Fraction]:
    """μ over all vertices and faces; totals −12 by Euler's formula."""
    G.require_plane("discharging")
    if not G.is_connected() or G.n == 0:
        raise Disconnected("initial charges total -12 only for a connected graph")
    charges: dict[Element, Fraction] = {}
    for v in G.vertices:
        charges[("v", v)] = Fraction(2 * G.degree(v) - 6)
    for f in G.faces:
        charges[("f", f.id)] = Fraction(f.degree - 6)
    return charges


def audit_element(result: DischargeResult, element: Element | str) -> ElementAudit:
    e = parse_element(element) if isinstance(element, str) else element
    if e not in result.initial:
        raise UnknownElement(f"no element {element_str(e)}")
    outgoing = tuple(t for t in result.ledger if t.source == e)
    incoming = tuple(t for t in result.ledger if t.target == e)
    return ElementAudit(e, result.initial[e], outgoing, incoming, result.final[e])


def run_rules(
    G: PlaneGraph, class_id: str, *, check_hypotheses: bool = True
) -> DischargeResult:
    """Run the class's full rule system and return the reconciled ledger.

    Fully deterministic: rules fire in their numbered order, and within a
    rule elements are visited in ascending id order.
    """
    _check_class(class_id)
    charges = initial_charge(G)
    vc = classify_vertices(G, class_id, check_hypotheses=check_hypotheses)
    fc = classify_faces(G, class_id, check_hypotheses=check_hypotheses)
    diagnostics = list(vc.diagnostics) + list(fc.diagnostics)

    if class_id == C469:
        phase1 = _phase1_c469(G, vc, fc, diagnostics)
        r_balance, r_via = "R6", ("R7a", "R7b", "R7c")
    else:
        phase1 = _phase1_c468(G, vc, fc, diagnostics)
        r_balance, r_via = "R8", ("R9a", "R9b", "R9c")

    after1 = dict(charges)
    for t in phase1:
        after1[t.source] -= t.amount
        after1[t.target] += t.amount
    _check_total(charges, after1, "phase 1")

    phase2 = _phase2(G, fc, after1, r_balance, r_via, diagnostics)
    final = dict(after1)
    for t in phase2:
        final[t.source] -= t.amount
        final[t.target] += t.amount
    _check_total(charges, final, "phase 2")

    return DischargeResult(
        class_id,
        charges,
        after1,
        final,
        tuple(phase1 + phase2),
        vc,
        fc,
        tuple(diagnostics),
    )


def _check_total(before: Mapping[Element, Fraction], after: Mapping[Element, Fraction], label: str) -> None:
    a, b = sum(before.values(), Fraction(0)), sum(after.values(), Fraction(0))
    if a != b:
        raise AssertionError(f"charge leaked during {label}: {a} -> {b}")


def _faces_of(G: PlaneGraph, v: int, pred) -> list[Face]:
    return [f for f in G.faces_at(v) if pred(f)]


def _phase1_c469(
    G: PlaneGraph,
    vc: VertexClassification,
    fc: FaceClassification,
    diagnostics: list[str],
) -> list[Transfer]:
    out: list[Transfer] = []
    half, quarter, eighth = Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)

    for f in G.faces:  # R1: every vertex pays 1 to each incident 3-face
        if f.degree == 3:
            for v in sorted(f.vertex_set):
                out.append(Transfer("R1", ("v", v), ("f", f.id), Fraction(1)))

    for v in G.vertices:
        label = vc.labels[v]
        if label == "worst":  # R2a: 1/2 in from each incident 7+-face
            for f in _faces_of(G, v, lambda f: f.degree >= 7):
                out.append(Transfer("R2a", ("f", f.id), ("v", v), half))
        elif label == "worse":  # R2b: 1/2 out to the 5-face, 1/4 in from 8+-faces
            fives = _faces_of(G, v, lambda f: f.degree == 5)
            if len(fives) != 1:
                diagnostics.append(f"worse vertex {v} sees {len(fives)} five-faces")
            for f in fives:
                out.append(Transfer("R2b", ("v", v), ("f", f.id), half))
            for f in _faces_of(G, v, lambda f: f.degree >= 8):
                out.append(Transfer("R2b", ("f", f.id), ("v", v), quarter))
        elif label == "bad":  # R2c: 1/8 out to each 5-face, 1/4 in from 8+-faces
            for f in _faces_of(G, v, lambda f: f.degree == 5):
                out.append(Transfer("R2c", ("v", v), ("f", f.id), eighth))
            for f in _faces_of(G, v, lambda f: f.degree >= 8):
                out.append(Transfer("R2c", ("f", f.id), ("v", v), quarter))

    for v in G.vertices:
        if G.degree(v) != 4:
            continue
        threes = vc.three_faces[v]
        fives = vc.five_faces[v]
        if not threes:  # R3a
            for f in G.faces_at(v):
                out.append(Transfer("R3a", ("v", v), ("f", f.id), half))
        elif fives:  # R3b
            if len(threes) > 1:
                diagnostics.append(
                    f"4-vertex {v} with {len(threes)} three-faces and a 5-face"
                )
            if len(fives) > 1:
                diagnostics.append(f"4-vertex {v} sees {len(fives)} five-faces")
            for fid in fives:
                out.append(Transfer("R3b", ("v", v), ("f", fid), half))
            for f in _faces_of(G, v, lambda f: f.degree >= 10):
                out.append(Transfer("R3b", ("v", v), ("f", f.id), quarter))
        elif len(threes) == 1:  # R3c: 1/2 to each incident face adjacent to the 3-face
            T = G.face_by_id(threes[0])
            t_edges = T.edge_set
            for f in G.faces_at(v):
                if f.id != T.id and f.edge_set & t_edges:
                    out.append(Transfer("R3c", ("v", v), ("f", f.id), half))

    two_thirds = Fraction(2, 3)
    for v in G.vertices:  # R4/R5: big vertices feed their 5+-faces, special ones excepted
        d = G.degree(v)
        if d == 5:
            for f in _faces_of(G, v, lambda f: f.degree >= 5 and not fc.is_special(f.id)):
                out.append(Transfer("R4", ("v", v), ("f", f.id), two_thirds))
        elif d >= 6:
            for f in _faces_of(G, v, lambda f: f.degree >= 5 and not fc.is_special(f.id)):
                out.append(Transfer("R5", ("v", v), ("f", f.id), Fraction(1)))
    return out


def _phase1_c468(
    G: PlaneGraph,
    vc: VertexClassification,
    fc: FaceClassification,
    diagnostics: list[str],
) -> list[Transfer]:
    out: list[Transfer] = []
    half, tenth, fifth = Fraction(1, 2), Fraction(1, 10), Fraction(1, 5)
    nice = set(fc.nice)

    for f in G.faces:  # R1
        if f.degree == 3:
            for v in sorted(f.vertex_set):
                out.append(Transfer("R1", ("v", v), ("f", f.id), Fraction(1)))

    for f in G.faces:  # R2: 5-faces draw 1 from each incident 4+-vertex
        if f.degree == 5:
            for v in sorted(f.vertex_set):
                if G.degree(v) >= 4:
                    out.append(Transfer("R2", ("v", v), ("f", f.id), Fraction(1)))

    for f in G.faces:  # R3: nice 5-faces draw 1/5 from their 3-vertices
        if f.id in nice:
            for v in sorted(f.vertex_set):
                if G.degree(v) == 3:
                    out.append(Transfer("R3", ("v", v), ("f", f.id), fifth))

    for v in G.vertices:
        label = vc.labels[v]
        if label == "worst":  # R4a
            for f in _faces_of(G, v, lambda f: f.degree >= 10):
                out.append(Transfer("R4a", ("f", f.id), ("v", v), half))
        elif label == "poor":  # R4b
            for f in _faces_of(G, v, lambda f: f.degree >= 7):
                out.append(Transfer("R4b", ("f", f.id), ("v", v), tenth))

    for v in G.vertices:
        if G.degree(v) != 4:
            continue
        small = _faces_of(G, v, lambda f: f.degree <= 5)
        if not small:  # R5a
            for f in G.faces_at(v):
                out.append(Transfer("R5a", ("v", v), ("f", f.id), half))
        elif len(small) == 1:  # R5b
            S = small[0]
            s_edges = S.edge_set
            for f in G.faces_at(v):
                if f.id != S.id and f.edge_set & s_edges:
                    out.append(Transfer("R5b", ("v", v), ("f", f.id), half))

    two_thirds = Fraction(2, 3)
    for v in G.vertices:  # R6/R7
        d = G.degree(v)
        if d == 5:
            for f in _faces_of(G, v, lambda f: f.degree >= 6 and not fc.is_special(f.id)):
                out.append(Transfer("R6", ("v", v), ("f", f.id), two_thirds))
        elif d >= 6:
            for f in _faces_of(G, v, lambda f: f.degree >= 6 and not fc.is_special(f.id)):
                out.append(Transfer("R7", ("v", v), ("f", f.id), Fraction(1)))
    return out


def _phase2(
    G: PlaneGraph,
    fc: FaceClassification,
    after1: Mapping[Element, Fraction],
    r_balance: str,
    r_via: tuple[str, str, str],
    diagnostics: list[str],
) -> list[Transfer]:
    out: list[Transfer] = []
    # Special faces split their (non-negative) leftover evenly over the
    # distinct bad faces they serve.
    for gid in sorted(fc.special):
        paths = fc.special[gid]
        targets = sorted({p.bad_face for p in paths})
        t = len(targets)
        mu = after1[("f", gid)]
        clamped = mu < 0
        if clamped:
            diagnostics.append(
                f"special face {gid} had negative leftover {mu}; clamped to 0"
            )
        share = Fraction(0) if clamped else mu / t
        for fid in targets:
            out.append(
                Transfer(r_balance, ("f", gid), ("f", fid), share, clamped=clamped)
            )

    # Path endpoints pay the bad face via the special face.  A 6+-endpoint
    # pays 1/2 per path; a 5-endpoint pays 2/3 when it ends one path of this
    # special face and 1/3 per path when it ends two.
    r_six, r_two, r_one = r_via
    half, third, two_thirds = Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)
    for gid in sorted(fc.special):
        paths = fc.special[gid]
        end_count: dict[int, int] = {}
        for p in paths:
            for u in (p.u1, p.u2):
                end_count[u] = end_count.get(u, 0) + 1
        for p in paths:
            for u in (p.u1, p.u2):
                d = G.degree(u)
                if d >= 6:
                    out.append(
                        Transfer(r_six, ("v", u), ("f", p.bad_face), half, via=gid)
                    )
                elif d == 5:
                    if end_count[u] >= 2:
                        if end_count[u] > 2:
                            diagnostics.append(
                                f"vertex {u} ends {end_count[u]} paths of special face {gid}"
                            )
                        out.append(
                            Transfer(r_two, ("v", u), ("f", p.bad_face), third, via=gid)
                        )
                    else:
                        out.append(
                            Transfer(r_one, ("v", u), ("f", p.bad_face), two_thirds, via=gid)
                        )
    return out
