"""Plane graphs as clockwise rotation systems, with faces derived by traversal.

A graph is stored as a rotation system: for every vertex, the cyclic clockwise
order of its neighbors.  Faces fall out of dart traversal — the successor of a
dart (u, v) is (v, w) where w immediately precedes u in the rotation at v — so
no geometry is ever stored.  Any symmetric rotation system is accepted; the
genus is computed from the face count, and operations that only make sense for
sphere embeddings check `is_plane` and raise `NotPlane` otherwise.

Vertex ids are positive integers.  Constructors number 1..n; derived graphs
(after vertex removal) keep their surviving ids, which are never reused.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    AsymmetricAdjacency,
    DuplicateNeighbor,
    Loop,
    NotPlane,
    OrientationError,
    UnknownVertex,
)


@dataclass(frozen=True)
class Face:
    """One face of an embedded graph.

    `darts` is the closed traversal in order; `vertices` lists the tail of each
    dart, so a face of degree k has k (not necessarily distinct) vertices.  An
    isolated vertex yields a face with no darts and a single vertex.
    """

    id: int
    darts: tuple[tuple[int, int], ...]
    vertices: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        """Boundary edges in traversal order, canonical (min, max) form.

        An edge traversed twice (a bridge inside the face) appears twice.
        """
        return [(u, v) if u < v else (v, u) for u, v in self.darts]

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def is_simple_cycle(self) -> bool:
        """True when the boundary walk is a cycle without repeated vertices."""
        return self.degree >= 3 and len(set(self.vertices)) == self.degree

    def boundary_decomposition(self) -> tuple[list[tuple[int, ...]], list[tuple[int, int]]]:
        """Split the boundary walk into simple cycles and doubly-traversed cut edges.

        Walk the closed boundary with a stack; each time a vertex repeats, the
        segment since its previous occurrence closes either a cycle (three or
        more vertices) or a cut edge traversed out and back (two vertices).
        Returns (cycles, cut_edges); cycles keep walk order.
        """
        cycles: list[tuple[int, ...]] = []
        cut_edges: list[tuple[int, int]] = []
        if self.degree == 0:
            return cycles, cut_edges
        stack: list[int] = []
        pos: dict[int, int] = {}

        def close(at: int) -> None:
            segment = stack[at:]
            if len(segment) >= 3:
                cycles.append(tuple(segment))
            elif len(segment) == 2:
                u, v = segment
                cut_edges.append((u, v) if u < v else (v, u))
            for x in segment[1:]:
                del pos[x]
            del stack[at + 1 :]

        for v in self.vertices:
            if v in pos:
                close(pos[v])
            else:
                pos[v] = len(stack)
                stack.append(v)
        # The walk is closed: whatever remains wraps around to the start.
        if len(stack) >= 3:
            cycles.append(tuple(stack))
        elif len(stack) == 2:
            u, v = stack
            cut_edges.append((u, v) if u < v else (v, u))
        return cycles, cut_edges


@dataclass(frozen=True)
class GraphSummary:
    """Headline numbers for a plane graph."""

    n: int
    m: int
    face_count: int
    min_degree: int
    max_degree: int
    regular: int | None
    degree_histogram: tuple[tuple[int, int], ...]
    connected: bool
    component_count: int
    genus: int
    is_plane: bool
    face_degree_histogram: tuple[tuple[int, int], ...]


class PlaneGraph:
    """An immutable embedded graph.

    Build with `build_plane_graph` (rotation system) or
    `plane_graph_from_faces` (oriented face walks).  All derived structure —
    edges, faces, dart-to-face lookup, components, genus — is computed once at
    construction.
    """

    __slots__ = (
        "_rotation",
        "_vertices",
        "_index",
        "_adj",
        "_edges",
        "_faces",
        "_dart_face",
        "_vertex_faces",
        "_components",
        "_genus",
    )

    def __init__(self, rotation: Mapping[int, Sequence[int]]):
        rot: dict[int, tuple[int, ...]] = {}
        for v, nbrs in rotation.items():
            if not isinstance(v, int) or v < 1:
                raise UnknownVertex(f"vertex ids must be positive integers, got {v!r}")
            rot[v] = tuple(nbrs)
        for v, nbrs in rot.items():
            seen: set[int] = set()
            for w in nbrs:
                if w == v:
                    raise Loop(f"vertex {v} lists itself as a neighbor")
                if w in seen:
                    raise DuplicateNeighbor(f"vertex {v} lists neighbor {w} twice")
                seen.add(w)
                if w not in rot or v not in rot[w]:
                    raise AsymmetricAdjacency(
                        f"vertex {v} lists neighbor {w} but {w} does not list {v}"
                    )
        self._rotation = rot
        self._vertices = tuple(sorted(rot))
        self._index = {
            v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in rot.items()
        }
        self._adj = {v: frozenset(nbrs) for v, nbrs in rot.items()}
        self._edges = tuple(
            sorted((v, w) for v in self._vertices for w in rot[v] if v < w)
        )
        self._faces, self._dart_face = self._trace_faces()
        vertex_faces: dict[int, list[int]] = {v: [] for v in self._vertices}
        for f in self._faces:
            for v in sorted(f.vertex_set):
                vertex_faces[v].append(f.id)
            if f.degree == 0:
                vertex_faces[f.vertices[0]].append(f.id)
        self._vertex_faces = {v: tuple(ids) for v, ids in vertex_faces.items()}
        self._components = self._find_components()
        self._genus = self._compute_genus()

    # --- construction internals ---------------------------------------------

    def _next_dart(self, u: int, v: int) -> tuple[int, int]:
        nbrs = self._rotation[v]
        i = self._index[v][u]
        return v, nbrs[i - 1]

    def _trace_faces(self) -> tuple[tuple[Face, ...], dict[tuple[int, int], int]]:
        faces: list[Face] = []
        dart_face: dict[tuple[int, int], int] = {}
        all_darts = sorted(
            (v, w) for v in self._vertices for w in self._rotation[v]
        )
        for start in all_darts:
            if start in dart_face:
                continue
            fid = len(faces) + 1
            walk: list[tuple[int, int]] = []
            dart = start
            while True:
                dart_face[dart] = fid
                walk.append(dart)
                dart = self._next_dart(*dart)
                if dart == start:
                    break
            faces.append(Face(fid, tuple(walk), tuple(u for u, _ in walk)))
        for v in self._vertices:
            if not self._rotation[v]:
                fid = len(faces) + 1
                faces.append(Face(fid, (), (v,)))
        return tuple(faces), dart_face

    def _find_components(self) -> tuple[frozenset[int], ...]:
        seen: set[int] = set()
        comps: list[frozenset[int]] = []
        for root in self._vertices:
            if root in seen:
                continue
            comp = {root}
            frontier = [root]
            while frontier:
                v = frontier.pop()
                for w in self._adj[v]:
                    if w not in comp:
                        comp.add(w)
                        frontier.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    def _compute_genus(self) -> int:
        total = 0
        for comp in self._components:
            nc = len(comp)
            mc = sum(1 for u, v in self._edges if u in comp)
            fc = sum(1 for f in self._faces if self._face_component(f) is comp)
            euler = nc - mc + fc
            if (2 - euler) % 2 != 0:
                raise OrientationError(
                    f"component has odd Euler defect {2 - euler}; rotation system is inconsistent"
                )
            total += (2 - euler) // 2
        return total

    def _face_component(self, f: Face) -> frozenset[int]:
        v = f.vertices[0]
        for comp in self._components:
            if v in comp:
                return comp
        raise AssertionError("face vertex outside every component")

    # --- basic structure ------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._faces

    def rotation(self, v: int) -> tuple[int, ...]:
        self._require(v)
        return self._rotation[v]

    def rotation_system(self) -> dict[int, tuple[int, ...]]:
        return dict(self._rotation)

    def neighbors(self, v: int) -> frozenset[int]:
        self._require(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._require(v)
        return len(self._rotation[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self._adj.values()), default=0)

    def _require(self, v: int) -> None:
        if v not in self._adj:
            raise UnknownVertex(f"no vertex {v}")

    # --- embedding queries ----------------------------------------------------

    def face_of_dart(self, u: int, v: int) -> Face:
        """The face whose boundary traverses the dart (u, v)."""
        self._require(u)
        self._require(v)
        fid = self._dart_face.get((u, v))
        if fid is None:
            raise UnknownVertex(f"no edge {u}-{v}")
        return self._faces[fid - 1]

    def face_by_id(self, fid: int) -> Face:
        if not 1 <= fid <= len(self._faces):
            raise UnknownVertex(f"no face {fid}")
        return self._faces[fid - 1]

    def faces_at(self, v: int) -> tuple[Face, ...]:
        """The distinct faces incident with v, in face-id order."""
        self._require(v)
        return tuple(self._faces[fid - 1] for fid in self._vertex_faces[v])

    def faces_of_edge(self, u: int, v: int) -> tuple[Face, Face]:
        """The two sides of edge uv (equal for a bridge)."""
        return self.face_of_dart(u, v), self.face_of_dart(v, u)

    def face_neighbors(self, f: Face) -> dict[int, int]:
        """Faces sharing an edge with f: face id -> number of shared edges.

        A bridge has the same face on both sides and contributes nothing.
        """
        counts: dict[int, int] = {}
        for u, v in f.darts:
            g = self.face_of_dart(v, u)
            if g.id != f.id:
                counts[g.id] = counts.get(g.id, 0) + 1
        return counts

    @property
    def components(self) -> tuple[frozenset[int], ...]:
        return self._components

    def is_connected(self) -> bool:
        return len(self._components) <= 1

    @property
    def genus(self) -> int:
        return self._genus

    @property
    def is_plane(self) -> bool:
        return self._genus == 0

    def require_plane(self, what: str) -> None:
        if not self.is_plane:
            raise NotPlane(f"{what} needs a sphere embedding; this one has genus {self._genus}")

    # --- derivation -----------------------------------------------------------

    def remove_vertex(self, v: int) -> "PlaneGraph":
        """A new graph with v (and its edges) gone; rotations keep their order."""
        self._require(v)
        return PlaneGraph(
            {
                u: tuple(w for w in nbrs if w != v)
                for u, nbrs in self._rotation.items()
                if u != v
            }
        )

    def remove_vertices(self, drop: Iterable[int]) -> "PlaneGraph":
        gone = set(drop)
        for v in gone:
            self._require(v)
        return PlaneGraph(
            {
                u: tuple(w for w in nbrs if w not in gone)
                for u, nbrs in self._rotation.items()
                if u not in gone
            }
        )

    def induced(self, keep: Iterable[int]) -> "PlaneGraph":
        kept = set(keep)
        for v in kept:
            self._require(v)
        return self.remove_vertices(set(self._vertices) - kept)

    # --- equality -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self._rotation == other._rotation

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._rotation.items())))

    def same_embedding(self, other: "PlaneGraph") -> bool:
        """Equality up to where each stored rotation happens to start."""
        if self._vertices != other._vertices:
            return False
        for v in self._vertices:
            a, b = self._rotation[v], other._rotation[v]
            if len(a) != len(b):
                return False
            if not a:
                continue
            if b[0] not in a:
                return False
            i = a.index(b[0])
            if a[i:] + a[:i] != b:
                return False
        return True

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m}, faces={len(self._faces)}, genus={self._genus})"


def build_plane_graph(rotation_system: Mapping[int, Sequence[int]]) -> PlaneGraph:
    """Validate a rotation system and derive its embedding."""
    return PlaneGraph(rotation_system)


def remove_vertex(G: PlaneGraph, v: int) -> PlaneGraph:
    return G.remove_vertex(v)


def graph_summary(G: PlaneGraph) -> GraphSummary:
    degs = sorted(len(G.neighbors(v)) for v in G.vertices)
    hist: dict[int, int] = {}
    for d in degs:
        hist[d] = hist.get(d, 0) + 1
    fhist: dict[int, int] = {}
    for f in G.faces:
        fhist[f.degree] = fhist.get(f.degree, 0) + 1
    regular = degs[0] if degs and degs[0] == degs[-1] else None
    return GraphSummary(
        n=G.n,
        m=G.m,
        face_count=len(G.faces),
        min_degree=degs[0] if degs else 0,
        max_degree=degs[-1] if degs else 0,
        regular=regular,
        degree_histogram=tuple(sorted(hist.items())),
        connected=G.is_connected(),
        component_count=len(G.components),
        genus=G.genus,
        is_plane=G.is_plane,
        face_degree_histogram=tuple(sorted(fhist.items())),
    )


def plane_graph_from_faces(face_walks: Iterable[Sequence[int]]) -> PlaneGraph:
    """Build a plane graph from its (per-face arbitrarily oriented) face walks.

    Every edge must be traversed exactly twice over all walks.  The walks are
    first re-oriented coherently — each edge once in each direction — by
    propagating orientation across shared edges, then each rotation is read
    off the dart successions.  Raises `OrientationError` when no coherent
    orientation exists or the walks don't close up into the faces given.
    """
    walks = [tuple(w) for w in face_walks]
    for w in walks:
        if len(w) < 3 and len(w) != 0:
            raise OrientationError(f"face walk too short: {w}")
    # Which walks pass through each undirected edge (a walk may use one twice).
    edge_walks: dict[tuple[int, int], list[int]] = {}
    for i, w in enumerate(walks):
        for k in range(len(w)):
            u, v = w[k], w[(k + 1) % len(w)]
            if u == v:
                raise OrientationError(f"face walk repeats vertex consecutively: {w}")
            e = (u, v) if u < v else (v, u)
            edge_walks.setdefault(e, []).append(i)
    for e, owners in edge_walks.items():
        if len(owners) != 2:
            raise OrientationError(
                f"edge {e} appears {len(owners)} time(s) across the face walks; need exactly 2"
            )

    def darts_of(i: int, flipped: bool) -> list[tuple[int, int]]:
        w = walks[i] if not flipped else walks[i][::-1]
        return [(w[k], w[(k + 1) % len(w)]) for k in range(len(w))]

    flip = [False] * len(walks)
    oriented = [False] * len(walks)
    for seed in range(len(walks)):
        if oriented[seed] or not walks[seed]:
            continue
        oriented[seed] = True
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            my_darts = set(darts_of(i, flip[i]))
            for u, v in list(my_darts):
                e = (u, v) if u < v else (v, u)
                owners = edge_walks[e]
                if owners[0] == i and owners[1] == i:
                    continue  # bridge inside one face: both darts in my own walk
                j = owners[0] if owners[0] != i else owners[1]
                needs_flip = (u, v) in set(darts_of(j, flip[j]))
                if not oriented[j]:
                    flip[j] = flip[j] ^ needs_flip
                    oriented[j] = True
                    frontier.append(j)
                elif needs_flip:
                    raise OrientationError(
                        f"face walks {i} and {j} cannot be oriented coherently (edge {e})"
                    )

    succ: dict[int, dict[int, int]] = {}
    for i in range(len(walks)):
        ds = darts_of(i, flip[i])
        for k in range(len(ds)):
            (u, v) = ds[k]
            (_, w) = ds[(k + 1) % len(ds)]
            # Dart (u,v) is followed by (v,w), so at v the rotation reads w then u.
            at = succ.setdefault(v, {})
            if w in at and at[w] != u:
                raise OrientationError(f"conflicting rotation at vertex {v}")
            at[w] = u

    rotation: dict[int, list[int]] = {}
    for v, nxt in succ.items():
        start = min(nxt)
        order = [start]
        while True:
            nv = nxt.get(order[-1])
            if nv is None:
                raise OrientationError(f"rotation at vertex {v} does not close up")
            if nv == start:
                break
            if nv in order:
                raise OrientationError(f"rotation at vertex {v} splits into several cycles")
            order.append(nv)
        if len(order) != len(nxt):
            raise OrientationError(f"rotation at vertex {v} splits into several cycles")
        rotation[v] = order

    G = PlaneGraph(rotation)
    want = sum(1 for w in walks if w)
    if len([f for f in G.faces if f.degree > 0]) != want:
        raise OrientationError(
            f"face walks describe {want} faces but the rotation system closes into "
            f"{len([f for f in G.faces if f.degree > 0])}"
        )
    return G
