"""Cycle enumeration, class membership, and structural audits.

The two graph classes handled throughout the package are cycle-defined:

* ``c469`` — plane graphs without 4-, 6-, or 9-cycles and without a 7-cycle
  normally adjacent to a 5-cycle;
* ``c468`` — plane graphs without 4-, 6-, or 8-cycles and without a 3-cycle
  normally adjacent to a 9-cycle.

Two cycles are *normally adjacent* when their intersection is exactly one
edge and its two endpoints; *adjacent* (unqualified) means sharing at least
one edge.  Both classes are hereditary under vertex deletion, which the
reduction machinery relies on.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Face, PlaneGraph
from .errors import HypothesisNotMet, NotACycle

C469 = "c469"
C468 = "c468"
CLASS_IDS = (C469, C468)

_FORBIDDEN_LENGTHS = {C469: frozenset({4, 6, 9}), C468: frozenset({4, 6, 8})}
# (a, b): no a-cycle normally adjacent to a b-cycle.
_FORBIDDEN_PAIR = {C469: (7, 5), C468: (3, 9)}


@dataclass(frozen=True)
class Cycle:
    """A cycle as a canonical vertex tuple.

    Canonical form: the least vertex first, then the smaller of its two
    neighbors on the cycle second.  Construction normalizes any rotation or
    reflection of the same cycle to one tuple.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        if len(vs) < 3:
            raise NotACycle(f"a cycle needs at least 3 vertices, got {vs}")
        if len(set(vs)) != len(vs):
            raise NotACycle(f"repeated vertex in cycle {vs}")
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if vs[-1] < vs[1]:
            vs = (vs[0],) + vs[:0:-1]
        object.__setattr__(self, "vertices", vs)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        vs = self.vertices
        out = []
        for k in range(len(vs)):
            u, v = vs[k], vs[(k + 1) % len(vs)]
            out.append((u, v) if u < v else (v, u))
        return frozenset(out)


def _validate_cycle(G: PlaneGraph, c: Cycle) -> None:
    vs = c.vertices
    for v in vs:
        if not G.has_vertex(v):
            raise NotACycle(f"cycle vertex {v} is not in the graph")
    for k in range(len(vs)):
        u, v = vs[k], vs[(k + 1) % len(vs)]
        if not G.has_edge(u, v):
            raise NotACycle(f"cycle edge {u}-{v} is not in the graph")


def enumerate_cycles(G: PlaneGraph, max_len: int = 10) -> tuple[Cycle, ...]:
    """All cycles of length at most `max_len`, sorted by (length, vertices).

    Rooted DFS: from each root, paths may only visit larger vertex ids and
    close back at the root, so each cycle is generated exactly once from its
    least vertex (direction fixed by requiring second < last).
    """
    adj = {v: tuple(sorted(G.neighbors(v))) for v in G.vertices}
    found: list[tuple[int, ...]] = []
    path: list[int] = []
    on_path: set[int] = set()

    def extend(root: int, v: int) -> None:
        for w in adj[v]:
            if w == root:
                if len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
            elif w > root and w not in on_path and len(path) < max_len:
                path.append(w)
                on_path.add(w)
                extend(root, w)
                path.pop()
                on_path.discard(w)

    for root in G.vertices:
        path = [root]
        on_path = {root}
        extend(root, root)
    found.sort(key=lambda t: (len(t), t))
    return tuple(Cycle(vs) for vs in found)


def _cycles_in_edges(edges: Iterable[tuple[int, int]], max_len: int) -> list[tuple[int, ...]]:
    """Cycle tuples (same canonical convention) inside a bare edge list."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    sadj = {v: tuple(sorted(ws)) for v, ws in adj.items()}
    found: list[tuple[int, ...]] = []
    path: list[int] = []
    on_path: set[int] = set()

    def extend(root: int, v: int) -> None:
        for w in sadj[v]:
            if w == root:
                if len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
            elif w > root and w not in on_path and len(path) < max_len:
                path.append(w)
                on_path.add(w)
                extend(root, w)
                path.pop()
                on_path.discard(w)

    for root in sorted(sadj):
        path = [root]
        on_path = {root}
        extend(root, root)
    return found


def normally_adjacent(G: PlaneGraph, c1: Cycle, c2: Cycle) -> bool:
    """True when the two cycles intersect in exactly one edge and its ends."""
    _validate_cycle(G, c1)
    _validate_cycle(G, c2)
    return _normally_adjacent(c1, c2)


def _normally_adjacent(c1: Cycle, c2: Cycle) -> bool:
    return (
        len(c1.vertex_set & c2.vertex_set) == 2
        and len(c1.edge_set & c2.edge_set) == 1
    )


def _share_edge(c1: Cycle, c2: Cycle) -> bool:
    return bool(c1.edge_set & c2.edge_set)


def cycle_has_chord(G: PlaneGraph, c: Cycle) -> bool:
    """True when some graph edge joins two non-consecutive cycle vertices."""
    _validate_cycle(G, c)
    return _find_chord(G, c) is not None


def _find_chord(G: PlaneGraph, c: Cycle) -> tuple[int, int] | None:
    vs = c.vertices
    k = len(vs)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if G.has_edge(vs[i], vs[j]):
                return (vs[i], vs[j]) if vs[i] < vs[j] else (vs[j], vs[i])
    return None


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of a class-membership test, with a witness when it fails."""

    class_id: str
    member: bool
    reason: str = ""
    witness: tuple[Cycle, ...] = ()

    def __bool__(self) -> bool:
        return self.member


def class_membership(G: PlaneGraph, class_id: str) -> MembershipVerdict:
    """Decide membership in ``c469`` or ``c468`` by exhaustive cycle search."""
    _check_class(class_id)
    cycles = enumerate_cycles(G, max_len=9)
    forbidden = _FORBIDDEN_LENGTHS[class_id]
    for c in cycles:
        if c.length in forbidden:
            return MembershipVerdict(
                class_id, False, f"{c.length}-cycle present", (c,)
            )
    a, b = _FORBIDDEN_PAIR[class_id]
    first = [c for c in cycles if c.length == a]
    by_edge: dict[tuple[int, int], list[Cycle]] = {}
    for c in cycles:
        if c.length == b:
            for e in sorted(c.edge_set):
                by_edge.setdefault(e, []).append(c)
    for c in first:
        seen: set[tuple[int, ...]] = set()
        for e in sorted(c.edge_set):
            for d in by_edge.get(e, ()):
                if d.vertices in seen or d == c:
                    continue
                seen.add(d.vertices)
                if _normally_adjacent(c, d):
                    return MembershipVerdict(
                        class_id,
                        False,
                        f"{a}-cycle normally adjacent to a {b}-cycle",
                        (c, d),
                    )
    return MembershipVerdict(class_id, True)


def _check_class(class_id: str) -> None:
    if class_id not in CLASS_IDS:
        raise HypothesisNotMet(
            f"unknown class {class_id!r}; expected one of {', '.join(CLASS_IDS)}"
        )


# --- structural audits --------------------------------------------------------


@dataclass(frozen=True)
class CheckOutcome:
    """One audited property: what was examined and every violation found."""

    check_id: str
    description: str
    checked: int
    violations: tuple[str, ...]
    vacuous: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class AuditResult:
    class_id: str
    checks: tuple[CheckOutcome, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def total_violations(self) -> int:
        return sum(len(c.violations) for c in self.checks)

    def by_id(self, check_id: str) -> CheckOutcome:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)


def structural_audit(G: PlaneGraph, class_id: str) -> AuditResult:
    """Verify the structural consequences of class membership, face by face.

    Requires a sphere embedding, minimum degree 3, and membership in the
    class; anything else raises HypothesisNotMet (the properties below are
    simply false or meaningless without the hypotheses).  Every check reports
    how many elements it examined, so a vacuously true check is visible as
    such rather than silently green.
    """
    _check_class(class_id)
    G.require_plane("structural audit")
    if G.n == 0 or G.min_degree() < 3:
        raise HypothesisNotMet("structural audit needs minimum degree 3")
    verdict = class_membership(G, class_id)
    if not verdict.member:
        raise HypothesisNotMet(f"graph is not in {class_id}: {verdict.reason}")
    cycles = enumerate_cycles(G, max_len=9)
    if class_id == C469:
        checks = _audit_c469(G, cycles)
    else:
        checks = _audit_c468(G, cycles)
    return AuditResult(class_id, tuple(checks))


def _by_length(cycles: Sequence[Cycle], k: int) -> list[Cycle]:
    return [c for c in cycles if c.length == k]


def _chordless_check(G: PlaneGraph, cycles: Sequence[Cycle], lengths: tuple[int, ...]) -> CheckOutcome:
    pool = [c for c in cycles if c.length in lengths]
    bad = []
    for c in pool:
        chord = _find_chord(G, c)
        if chord is not None:
            bad.append(f"{c.length}-cycle {c.vertices} has chord {chord[0]}-{chord[1]}")
    label = "/".join(str(k) for k in lengths)
    return CheckOutcome(
        "chordless-cycles",
        f"every {label}-cycle is chordless",
        len(pool),
        tuple(bad),
        vacuous=not pool,
    )


def _triangle_isolation_check(cycles: Sequence[Cycle], other_lengths: tuple[int, ...]) -> CheckOutcome:
    triangles = _by_length(cycles, 3)
    bad = []
    checked = 0
    for i, t in enumerate(triangles):
        for k in other_lengths:
            others = triangles[i + 1 :] if k == 3 else _by_length(cycles, k)
            for c in others:
                checked += 1
                if _share_edge(t, c):
                    bad.append(
                        f"3-cycle {t.vertices} shares an edge with {c.length}-cycle {c.vertices}"
                    )
    label = "/".join(str(k) for k in other_lengths)
    return CheckOutcome(
        "triangle-cycle-isolation",
        f"no 3-cycle shares an edge with a {label}-cycle",
        checked,
        tuple(bad),
        vacuous=checked == 0,
    )


def _boundary_check(
    G: PlaneGraph,
    degree: int,
    allowed: tuple[tuple[tuple[int, ...], int], ...],
    wording: str,
) -> CheckOutcome:
    """Faces of `degree` must decompose into one of the `allowed` shapes.

    Each allowed shape is (sorted cycle lengths, cut-edge count).
    """
    pool = [f for f in G.faces if f.degree == degree]
    bad = []
    for f in pool:
        cyc, cuts = f.boundary_decomposition()
        shape = (tuple(sorted(len(c) for c in cyc)), len(cuts))
        if shape not in allowed:
            bad.append(
                f"face {f.id} (degree {degree}) decomposes into cycles "
                f"{shape[0]} with {shape[1]} cut edge(s)"
            )
    return CheckOutcome(
        f"{degree}-face-boundary",
        f"every {degree}-face boundary is {wording}",
        len(pool),
        tuple(bad),
        vacuous=not pool,
    )


def _audit_c469(G: PlaneGraph, cycles: Sequence[Cycle]) -> list[CheckOutcome]:
    checks = [
        _chordless_check(G, cycles, (5, 7)),
        _triangle_isolation_check(cycles, (3, 5)),
    ]

    five_faces = [f for f in G.faces if f.degree == 5]
    pairs = []
    for i, f in enumerate(five_faces):
        nb = G.face_neighbors(f)
        for g in five_faces[i + 1 :]:
            if g.id in nb:
                pairs.append((f, g))
    bad = []
    for f, g in pairs:
        union = set(f.edges()) | set(g.edges())
        if not any(len(c) == 8 for c in _cycles_in_edges(union, 8)):
            bad.append(
                f"adjacent 5-faces {f.id} and {g.id} span no 8-cycle"
            )
    checks.append(
        CheckOutcome(
            "adjacent-5-faces-span-8-cycle",
            "the boundaries of two adjacent 5-faces contain an 8-cycle",
            len(pairs),
            tuple(bad),
            vacuous=not pairs,
        )
    )

    checks.append(_boundary_check(G, 6, (((3, 3), 0),), "two 3-cycles"))
    checks.append(_boundary_check(G, 7, (((7,), 0),), "a 7-cycle"))
    checks.append(
        _boundary_check(
            G,
            8,
            (((8,), 0), ((3, 5), 0), ((3, 3), 1)),
            "an 8-cycle, a 3- and a 5-cycle, or two 3-cycles and a cut edge",
        )
    )
    checks.append(_boundary_check(G, 9, (((3, 3, 3), 0),), "three 3-cycles"))

    bad = []
    triangles = [f for f in G.faces if f.degree == 3]
    for t in triangles:
        for u, v in t.darts:
            g = G.face_of_dart(v, u)
            if g.degree in (3, 5, 6, 8, 9):
                bad.append(
                    f"3-face {t.id} is adjacent to a {g.degree}-face ({g.id})"
                )
    checks.append(
        CheckOutcome(
            "triangle-face-neighbors",
            "no 3-face is adjacent to a 3-, 5-, 6-, 8-, or 9-face",
            len(triangles),
            tuple(bad),
            vacuous=not triangles,
        )
    )

    bad = []
    seven_faces = [f for f in G.faces if f.degree == 7]
    for f in seven_faces:
        t3 = [gid for gid in G.face_neighbors(f) if G.face_by_id(gid).degree == 3]
        if len(t3) > 1:
            bad.append(f"7-face {f.id} is adjacent to 3-faces {sorted(t3)}")
    checks.append(
        CheckOutcome(
            "7-face-triangle-budget",
            "a 7-face is adjacent to at most one 3-face",
            len(seven_faces),
            tuple(bad),
            vacuous=not seven_faces,
        )
    )

    bad = []
    three_vertices = [v for v in G.vertices if G.degree(v) == 3]
    for v in three_vertices:
        fives = [f.id for f in G.faces_at(v) if f.degree == 5]
        if len(fives) > 2:
            bad.append(f"3-vertex {v} lies on 5-faces {fives}")
    checks.append(
        CheckOutcome(
            "3-vertex-5-face-budget",
            "a 3-vertex is incident with at most two 5-faces",
            len(three_vertices),
            tuple(bad),
            vacuous=not three_vertices,
        )
    )

    bad = []
    for f in five_faces:
        for gid in G.face_neighbors(f):
            if G.face_by_id(gid).degree in (6, 7):
                bad.append(
                    f"5-face {f.id} is adjacent to a {G.face_by_id(gid).degree}-face ({gid})"
                )
    checks.append(
        CheckOutcome(
            "5-face-neighbors",
            "no 5-face is adjacent to a 6- or 7-face",
            len(five_faces),
            tuple(bad),
            vacuous=not five_faces,
        )
    )
    return checks


def _audit_c468(G: PlaneGraph, cycles: Sequence[Cycle]) -> list[CheckOutcome]:
    checks = [
        CheckOutcome(
            "min-degree",
            "minimum degree is at least 3",
            G.n,
            (),
        ),
    ]

    four_faces = [f for f in G.faces if f.degree == 4]
    checks.append(
        CheckOutcome(
            "no-4-faces",
            "there is no 4-face",
            len(G.faces),
            tuple(f"4-face {f.id} with boundary {f.vertices}" for f in four_faces),
        )
    )

    checks.append(_chordless_check(G, cycles, (5, 7, 9)))
    checks.append(_triangle_isolation_check(cycles, (3, 5, 7)))

    fives = _by_length(cycles, 5)
    bad = []
    checked = 0
    for i, c in enumerate(fives):
        for d in fives[i + 1 :]:
            checked += 1
            if _share_edge(c, d):
                bad.append(
                    f"5-cycles {c.vertices} and {d.vertices} share an edge"
                )
    checks.append(
        CheckOutcome(
            "no-adjacent-5-cycles",
            "no two 5-cycles share an edge",
            checked,
            tuple(bad),
            vacuous=checked == 0,
        )
    )

    checks.append(_boundary_check(G, 6, (((3, 3), 0),), "two 3-cycles"))
    checks.append(_boundary_check(G, 7, (((7,), 0),), "a 7-cycle"))
    checks.append(
        _boundary_check(
            G,
            8,
            (((3, 5), 0), ((3, 3), 1)),
            "a 3- and a 5-cycle, or two 3-cycles and a cut edge",
        )
    )

    bad = []
    triangles = [f for f in G.faces if f.degree == 3]
    for t in triangles:
        across = []
        for u, v in t.darts:
            g = G.face_of_dart(v, u)
            across.append(g)
            if g.degree < 10:
                bad.append(f"3-face {t.id} is adjacent to a {g.degree}-face ({g.id})")
        if len({g.id for g in across}) != 3:
            bad.append(f"3-face {t.id} does not have three distinct neighbors")
    checks.append(
        CheckOutcome(
            "triangle-big-neighbors",
            "every 3-face is adjacent to three 10+-faces",
            len(triangles),
            tuple(bad),
            vacuous=not triangles,
        )
    )

    bad = []
    five_faces = [f for f in G.faces if f.degree == 5]
    for f in five_faces:
        for gid in G.face_neighbors(f):
            if G.face_by_id(gid).degree < 7:
                bad.append(
                    f"5-face {f.id} is adjacent to a {G.face_by_id(gid).degree}-face ({gid})"
                )
    checks.append(
        CheckOutcome(
            "5-face-neighbors",
            "every face adjacent to a 5-face is a 7+-face",
            len(five_faces),
            tuple(bad),
            vacuous=not five_faces,
        )
    )
    return checks
