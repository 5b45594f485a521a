"""Vertex/face labeling and detection of the two reducible patterns.

Labels (3-vertices, by incidences):

* ``c469``: *worst* as incident with a 3-face, *worse* exactly one 5-face,
  *bad* two 5-faces, otherwise *plain*;
* ``c468``: *worst* incident with a 3-face, *poor* on a nice 5-face (one
  whose five vertices are all 3-vertices), otherwise *plain*.

For class members the labels are mutually exclusive; when a graph outside
the hypotheses is classified anyway (``check_hypotheses=False``), overlaps
are resolved worst-first and reported in ``diagnostics``.

A *bad face* is a 10-face whose boundary is a cycle of ten 3-vertices with
two 3-faces sitting on boundary edges separated by exactly one edge, both
their apex *sources* of degree at least four.  The middle edge is a *special
edge*, the face on its far side the *special face*, and source-to-source arc
the *special path* living in that face.  A ten-face in the same position
whose triangle source is a 3-vertex is instead an instance of the first
reducible pattern (detect_config_a); the second pattern (detect_config_b)
asks for the full eighteen-vertex structure around a bad face.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .core import Face, PlaneGraph
from .cycles import C468, C469, _check_class, class_membership
from .errors import HypothesisNotMet

_MIRROR_B = {
    "x1": "x2", "x2": "x1", "x3": "x10", "x10": "x3", "x4": "x9", "x9": "x4",
    "x5": "x8", "x8": "x5", "x6": "x7", "x7": "x6", "y3": "y10", "y10": "y3",
    "y4": "y9", "y9": "y4", "y5": "y8", "y8": "y5", "y6": "y7", "y7": "y6",
}
_B_LABELS = tuple(f"x{i}" for i in range(1, 11)) + tuple(f"y{i}" for i in range(3, 11))
_A_LABELS = tuple(f"v{i}" for i in range(1, 11)) + ("s",)


def _gate(G: PlaneGraph, class_id: str, check: bool, what: str) -> None:
    _check_class(class_id)
    G.require_plane(what)
    if not check:
        return
    if G.n == 0 or G.min_degree() < 3:
        raise HypothesisNotMet(f"{what} needs minimum degree 3")
    verdict = class_membership(G, class_id)
    if not verdict.member:
        raise HypothesisNotMet(f"graph is not in {class_id}: {verdict.reason}")


def _nice_faces(G: PlaneGraph) -> tuple[int, ...]:
    out = []
    for f in G.faces:
        if (
            f.degree == 5
            and len(f.vertex_set) == 5
            and all(G.degree(v) == 3 for v in f.vertex_set)
        ):
            out.append(f.id)
    return tuple(out)


@dataclass(frozen=True)
class VertexClassification:
    class_id: str
    labels: dict[int, str]
    three_faces: dict[int, tuple[int, ...]]
    five_faces: dict[int, tuple[int, ...]]
    nice_faces: tuple[int, ...]
    diagnostics: tuple[str, ...]


def classify_vertices(
    G: PlaneGraph, class_id: str, *, check_hypotheses: bool = True
) -> VertexClassification:
    """Label every vertex; only 3-vertices get a label other than plain."""
    _gate(G, class_id, check_hypotheses, "vertex classification")
    nice = _nice_faces(G) if class_id == C468 else ()
    nice_set = set(nice)
    labels: dict[int, str] = {}
    threes: dict[int, tuple[int, ...]] = {}
    fives: dict[int, tuple[int, ...]] = {}
    diagnostics: list[str] = []
    for v in G.vertices:
        incident = G.faces_at(v)
        t3 = tuple(f.id for f in incident if f.degree == 3)
        t5 = tuple(f.id for f in incident if f.degree == 5)
        threes[v] = t3
        fives[v] = t5
        if G.degree(v) != 3:
            labels[v] = "plain"
            continue
        if class_id == C469:
            if t3:
                labels[v] = "worst"
                if t5:
                    diagnostics.append(
                        f"vertex {v}: labels worst and {'bad' if len(t5) >= 2 else 'worse'} overlap"
                    )
            elif len(t5) >= 2:
                labels[v] = "bad"
                if len(t5) > 2:
                    diagnostics.append(f"vertex {v}: on {len(t5)} five-faces")
            elif len(t5) == 1:
                labels[v] = "worse"
            else:
                labels[v] = "plain"
        else:
            on_nice = [fid for fid in t5 if fid in nice_set]
            if t3:
                labels[v] = "worst"
                if on_nice:
                    diagnostics.append(f"vertex {v}: labels worst and poor overlap")
            elif on_nice:
                labels[v] = "poor"
            else:
                labels[v] = "plain"
    return VertexClassification(
        class_id, labels, threes, fives, nice, tuple(diagnostics)
    )


@dataclass(frozen=True)
class SpecialPath:
    """One source-to-source path u1-v2-v3-u2 through a special face."""

    u1: int
    v2: int
    v3: int
    u2: int
    bad_face: int
    special_face: int
    special_edge: tuple[int, int]
    triangles: tuple[int, int]  # u1's triangle, u2's triangle

    @property
    def path(self) -> tuple[int, int, int, int]:
        return (self.u1, self.v2, self.v3, self.u2)


@dataclass(frozen=True)
class PatternPair:
    """A bad-face witness: two flanking triangles and the labeling they induce."""

    v1: int
    v2: int
    v3: int
    v4: int
    u1: int
    u2: int
    triangles: tuple[int, int]
    special_edge: tuple[int, int]
    special_face: int


@dataclass(frozen=True)
class FaceClassification:
    class_id: str
    bad: dict[int, tuple[PatternPair, ...]]
    special: dict[int, tuple[SpecialPath, ...]]
    t: dict[int, int]
    nice: tuple[int, ...]
    diagnostics: tuple[str, ...]

    def is_bad(self, fid: int) -> bool:
        return fid in self.bad

    def is_special(self, fid: int) -> bool:
        return fid in self.special


def _ten_face_triangles(
    G: PlaneGraph,
) -> Iterator[tuple[Face, list[tuple[int, Face, int]]]]:
    """Candidate ten-faces with the triangles normally adjacent on their edges.

    Yields (face, [(k, triangle, source)]) where k indexes the boundary dart:
    the triangle sits on the edge walk[k]-walk[k+1] and its apex is `source`,
    off the ten-face (which is exactly normal adjacency of the two cycles).
    """
    for f in G.faces:
        if f.degree != 10 or not f.is_simple_cycle():
            continue
        if any(G.degree(v) != 3 for v in f.vertices):
            continue
        hits: list[tuple[int, Face, int]] = []
        for k, (u, v) in enumerate(f.darts):
            g = G.face_of_dart(v, u)
            if g.degree != 3:
                continue
            apex = next(iter(g.vertex_set - {u, v}))
            if apex not in f.vertex_set:
                hits.append((k, g, apex))
        yield f, hits


@dataclass(frozen=True)
class ConfigInstance:
    """A located reducible pattern with its label-to-vertex mapping."""

    kind: str  # "a" | "b"
    mapping: dict[str, int]
    faces: tuple[int, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return _A_LABELS if self.kind == "a" else _B_LABELS

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.mapping[k] for k in self.labels)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.mapping.values())


def classify_faces(
    G: PlaneGraph, class_id: str, *, check_hypotheses: bool = True
) -> FaceClassification:
    """Find bad faces, their special edges/paths/faces, and per-face t counts."""
    _gate(G, class_id, check_hypotheses, "face classification")
    nice = _nice_faces(G) if class_id == C468 else ()
    bad: dict[int, tuple[PatternPair, ...]] = {}
    special: dict[int, list[SpecialPath]] = {}
    diagnostics: list[str] = []
    for f, hits in _ten_face_triangles(G):
        walk = f.vertices
        by_pos = {k: (tri, s) for k, tri, s in hits}
        pairs: list[PatternPair] = []
        for k in range(10):
            if k not in by_pos or (k + 2) % 10 not in by_pos:
                continue
            t1, s1 = by_pos[k]
            t2, s2 = by_pos[(k + 2) % 10]
            if t1.id == t2.id or s1 == s2:
                continue
            if G.degree(s1) < 4 or G.degree(s2) < 4:
                continue
            v1, v2 = walk[k], walk[(k + 1) % 10]
            v3, v4 = walk[(k + 2) % 10], walk[(k + 3) % 10]
            h = G.face_of_dart(v3, v2)
            pairs.append(
                PatternPair(
                    v1, v2, v3, v4, s1, s2,
                    (t1.id, t2.id),
                    (v2, v3) if v2 < v3 else (v3, v2),
                    h.id,
                )
            )
        if pairs:
            bad[f.id] = tuple(pairs)
            for p in pairs:
                special.setdefault(p.special_face, []).append(
                    SpecialPath(
                        p.u1, p.v2, p.v3, p.u2,
                        f.id, p.special_face, p.special_edge, p.triangles,
                    )
                )
    overlap = set(bad) & set(special)
    for fid in sorted(overlap):
        diagnostics.append(f"face {fid} is both bad and special")
    t = {fid: len({p.bad_face for p in paths}) for fid, paths in special.items()}
    return FaceClassification(
        class_id,
        bad,
        {fid: tuple(paths) for fid, paths in special.items()},
        t,
        nice,
        tuple(diagnostics),
    )


def detect_config_a(G: PlaneGraph) -> tuple[ConfigInstance, ...]:
    """Ten-faces of 3-vertices normally adjacent to a 3-face with a 3-vertex apex.

    One instance per (ten-face, triangle) pair; the labeling puts the shared
    edge at v3-v4 with v3 the smaller endpoint, so mirrored readings collapse
    to one canonical mapping.
    """
    G.require_plane("pattern detection")
    out: list[ConfigInstance] = []
    for f, hits in _ten_face_triangles(G):
        walk = f.vertices
        for k, tri, s in hits:
            if G.degree(s) != 3:
                continue
            a, b = walk[k], walk[(k + 1) % 10]
            mapping: dict[str, int] = {"s": s}
            if a < b:
                for j in range(1, 11):
                    mapping[f"v{j}"] = walk[(k + j - 3) % 10]
            else:
                for j in range(1, 11):
                    mapping[f"v{j}"] = walk[(k + 1 - (j - 3)) % 10]
            out.append(ConfigInstance("a", mapping, (f.id, tri.id)))
    out.sort(key=lambda inst: inst.faces)
    return tuple(out)


def detect_config_b(G: PlaneGraph) -> tuple[ConfigInstance, ...]:
    """The eighteen-vertex pattern: a bad face plus its special face's far arc.

    On top of a bad-face pattern pair (sources exactly degree 4 here), the
    special face must be a 10-face on a simple cycle whose six far-arc
    vertices are fresh 3-vertices.  Each instance has a mirror labeling; the
    lexicographically smaller label tuple is the one emitted.
    """
    G.require_plane("pattern detection")
    out: list[ConfigInstance] = []
    seen: set[tuple[int, ...]] = set()
    for f, hits in _ten_face_triangles(G):
        walk = f.vertices
        by_pos = {k: (tri, s) for k, tri, s in hits}
        for k in range(10):
            if k not in by_pos or (k + 2) % 10 not in by_pos:
                continue
            t1, s1 = by_pos[k]
            t2, s2 = by_pos[(k + 2) % 10]
            if t1.id == t2.id or s1 == s2:
                continue
            if G.degree(s1) != 4 or G.degree(s2) != 4:
                continue
            # v1=x3 v2=x2 v3=x1 v4=x10; u1=y3 u2=y10.
            mapping = {
                "x3": walk[k],
                "x2": walk[(k + 1) % 10],
                "x1": walk[(k + 2) % 10],
                "x10": walk[(k + 3) % 10],
                "y3": s1,
                "y10": s2,
            }
            for j in range(4, 10):
                mapping[f"x{j}"] = walk[(k - (j - 3)) % 10]
            h = G.face_of_dart(mapping["x1"], mapping["x2"])
            if h.degree != 10 or not h.is_simple_cycle():
                continue
            hw = h.vertices
            try:
                i3 = hw.index(s1)
            except ValueError:
                continue
            fwd = tuple(hw[(i3 + j) % 10] for j in range(10))
            rev = tuple(hw[(i3 - j) % 10] for j in range(10))
            arc = None
            for cand in (fwd, rev):
                if cand[1] == mapping["x2"] and cand[2] == mapping["x1"] and cand[3] == s2:
                    arc = cand[4:]  # y9 back to y4
                    break
            if arc is None:
                continue
            for j in range(4, 10):
                mapping[f"y{j}"] = arc[9 - j]  # arc runs y9..y4
            if any(G.degree(mapping[f"y{j}"]) != 3 for j in range(4, 10)):
                continue
            ids = tuple(mapping[lbl] for lbl in _B_LABELS)
            if len(set(ids)) != 18:
                continue
            mirrored = {lbl: mapping[_MIRROR_B[lbl]] for lbl in mapping}
            mids = tuple(mirrored[lbl] for lbl in _B_LABELS)
            chosen = mapping if ids <= mids else mirrored
            key = min(ids, mids)
            if key in seen:
                continue
            seen.add(key)
            out.append(
                ConfigInstance(
                    "b", chosen, (f.id, t1.id, t2.id, h.id)
                )
            )
    out.sort(key=lambda inst: (inst.faces[0], inst.vertices))
    return tuple(out)


def validate_config_instance(G: PlaneGraph, inst: ConfigInstance) -> bool:
    """Re-check an instance against the pattern definition, from scratch.

    Deliberately ignores how detection found it: only the mapping and the
    graph are consulted.
    """
    m = inst.mapping
    if inst.kind == "a":
        cyc = [m[f"v{j}"] for j in range(1, 11)]
        s = m["s"]
        if len(set(cyc + [s])) != 11:
            return False
        if any(G.degree(v) != 3 for v in cyc) or G.degree(s) != 3:
            return False
        for i in range(10):
            if not G.has_edge(cyc[i], cyc[(i + 1) % 10]):
                return False
        if not (G.has_edge(s, m["v3"]) and G.has_edge(s, m["v4"])):
            return False
        # both the ten-face and the triangle must actually bound faces
        ten = G.face_of_dart(m["v3"], m["v4"])
        if set(cyc) == ten.vertex_set and ten.degree == 10:
            tri = G.face_of_dart(m["v4"], m["v3"])
        else:
            tri = ten
            ten = G.face_of_dart(m["v4"], m["v3"])
        return (
            ten.degree == 10
            and ten.vertex_set == set(cyc)
            and tri.degree == 3
            and tri.vertex_set == {m["v3"], m["v4"], s}
        )
    xs = [m[f"x{j}"] for j in range(1, 11)]
    ys = [m[f"y{j}"] for j in range(3, 11)]
    if len(set(xs + ys)) != 18:
        return False
    if any(G.degree(v) != 3 for v in xs):
        return False
    if G.degree(m["y3"]) != 4 or G.degree(m["y10"]) != 4:
        return False
    if any(G.degree(m[f"y{j}"]) != 3 for j in range(4, 10)):
        return False
    for i in range(10):
        if not G.has_edge(xs[i], xs[(i + 1) % 10]):
            return False
    for j in range(3, 10):
        if not G.has_edge(m[f"y{j}"], m[f"y{j+1}"]):
            return False
    for a, b in (("x3", "y3"), ("x2", "y3"), ("x10", "y10"), ("x1", "y10")):
        if not G.has_edge(m[a], m[b]):
            return False
    sides = G.faces_of_edge(m["x1"], m["x2"])
    if sorted(f.degree for f in sides) != [10, 10]:
        return False
    matches = [f for f in sides if f.vertex_set == set(xs)]
    if not matches:
        return False
    ten = matches[0]
    other = sides[0] if sides[1] is ten else sides[1]
    if other.vertex_set != set(ys) | {m["x1"], m["x2"]}:
        return False
    for t_edge, apex in ((("x2", "x3"), "y3"), (("x10", "x1"), "y10")):
        a, b = m[t_edge[0]], m[t_edge[1]]
        tri = [f for f in G.faces_of_edge(a, b) if f.degree == 3]
        if not any(f.vertex_set == {a, b, m[apex]} for f in tri):
            return False
    return True
