"""Named plane graphs and parametric families.

Everything here is built combinatorially: the polyhedra come from explicit
face lists (or operations on them, like truncation), never from coordinates.
`construct(name, param)` is the registry the CLI uses.
"""
from __future__ import annotations

from typing import Callable

from .core import PlaneGraph, build_plane_graph, plane_graph_from_faces
from .errors import BadParam, UnknownName


def path(n: int) -> PlaneGraph:
    """The path on n vertices, 1-2-…-n."""
    if n < 1:
        raise BadParam("path needs n >= 1")
    if n == 1:
        return build_plane_graph({1: ()})
    rot = {1: (2,), n: (n - 1,)}
    for v in range(2, n):
        rot[v] = (v - 1, v + 1)
    return build_plane_graph(rot)


def cycle(n: int) -> PlaneGraph:
    """The cycle on n vertices."""
    if n < 3:
        raise BadParam("cycle needs n >= 3")
    rot = {}
    for v in range(1, n + 1):
        prev = n if v == 1 else v - 1
        nxt = 1 if v == n else v + 1
        rot[v] = (prev, nxt)
    return build_plane_graph(rot)


def complete(n: int) -> PlaneGraph:
    """The complete graph on n vertices.

    K1–K4 come with sphere embeddings; for n >= 5 the rotation is just the
    sorted neighbor order, and whatever genus that yields is reported as-is.
    """
    if n < 1:
        raise BadParam("complete needs n >= 1")
    if n == 1:
        return build_plane_graph({1: ()})
    if n == 2:
        return build_plane_graph({1: (2,), 2: (1,)})
    if n == 3:
        return cycle(3)
    if n == 4:
        return plane_graph_from_faces([(1, 2, 3), (1, 3, 4), (1, 4, 2), (2, 4, 3)])
    return build_plane_graph(
        {v: tuple(w for w in range(1, n + 1) if w != v) for v in range(1, n + 1)}
    )


def star(n: int) -> PlaneGraph:
    """The star on n vertices: center 1, leaves 2..n."""
    if n < 2:
        raise BadParam("star needs n >= 2")
    rot: dict[int, tuple[int, ...]] = {1: tuple(range(2, n + 1))}
    for v in range(2, n + 1):
        rot[v] = (1,)
    return build_plane_graph(rot)


def cube() -> PlaneGraph:
    """The 3-cube: vertices 1-4 on the top square, 5-8 below them."""
    return plane_graph_from_faces(
        [
            (1, 2, 3, 4),
            (5, 8, 7, 6),
            (1, 5, 6, 2),
            (2, 6, 7, 3),
            (3, 7, 8, 4),
            (4, 8, 5, 1),
        ]
    )


# The twelve pentagons of the dodecahedron: one cap, two belts, one cap.
_DODECAHEDRON_FACES: tuple[tuple[int, ...], ...] = (
    (1, 2, 3, 4, 5),
    (1, 2, 7, 11, 6),
    (2, 3, 8, 12, 7),
    (3, 4, 9, 13, 8),
    (4, 5, 10, 14, 9),
    (5, 1, 6, 15, 10),
    (6, 11, 16, 20, 15),
    (7, 12, 17, 16, 11),
    (8, 13, 18, 17, 12),
    (9, 14, 19, 18, 13),
    (10, 15, 20, 19, 14),
    (16, 17, 18, 19, 20),
)


def dodecahedron() -> PlaneGraph:
    """The regular dodecahedron (20 vertices, 30 edges, 12 pentagons)."""
    return plane_graph_from_faces(_DODECAHEDRON_FACES)


def truncation(G: PlaneGraph) -> PlaneGraph:
    """Truncate every vertex of a plane graph.

    Each vertex v splits into one new vertex per incident edge; every old
    vertex becomes a small face (its vertex figure) and every old k-face
    becomes a 2k-face.  New ids follow sorted-vertex, rotation order.
    """
    G.require_plane("truncation")
    ids: dict[tuple[int, int], int] = {}
    for v in G.vertices:
        for w in G.rotation(v):
            ids[(v, w)] = len(ids) + 1
    walks: list[tuple[int, ...]] = []
    for v in G.vertices:
        if G.degree(v) < 3:
            raise BadParam("truncation needs minimum degree 3")
        walks.append(tuple(ids[(v, w)] for w in G.rotation(v)))
    for f in G.faces:
        walk: list[int] = []
        k = f.degree
        for i in range(k):
            u, v = f.darts[i]
            walk.append(ids[(u, v)])
            walk.append(ids[(v, u)])
        walks.append(tuple(walk))
    return plane_graph_from_faces(walks)


def truncated_dodecahedron() -> PlaneGraph:
    """Truncated dodecahedron: 60 vertices, 90 edges, 20 triangles, 12 decagons."""
    return truncation(dodecahedron())


def icosidodecahedron() -> PlaneGraph:
    """Icosidodecahedron: 30 vertices, 60 edges, 20 triangles, 12 pentagons.

    Built as the line graph of the dodecahedron with the inherited embedding:
    a pentagon of edge-vertices per old face, a triangle per old vertex.
    """
    D = dodecahedron()
    eid = {e: i + 1 for i, e in enumerate(D.edges)}

    def at(u: int, v: int) -> int:
        return eid[(u, v) if u < v else (v, u)]

    walks: list[tuple[int, ...]] = []
    for v in D.vertices:
        walks.append(tuple(at(v, w) for w in D.rotation(v)))
    for f in D.faces:
        walks.append(tuple(at(u, v) for u, v in f.darts))
    return plane_graph_from_faces(walks)


def config_a_gadget() -> PlaneGraph:
    """A 10-cycle 1..10 with an apex 11 over the edge 3-4.

    The smallest graph carrying the ten-face/triangle reduction pattern; on
    its own the boundary degrees are too low to trigger detection, so it is
    exercised with explicit residual budgets.
    """
    return plane_graph_from_faces(
        [
            (1, 2, 3, 4, 5, 6, 7, 8, 9, 10),
            (3, 4, 11),
            (10, 9, 8, 7, 6, 5, 4, 11, 3, 2, 1),
        ]
    )


def config_b_gadget() -> PlaneGraph:
    """The eighteen-vertex reduction pattern, padded to minimum degree 3.

    Vertices 1-10 form the ten-face; 11-18 the outer path whose ends (11 and
    18) are the two 4-vertices; 19-32 a surrounding 14-gon whose spokes raise
    every inner vertex to its pattern degree.  The pad introduces 4-faces, so
    the graph deliberately lies outside both hereditary classes; detection
    and discharging tests run it with hypothesis checks off.
    """
    feet = [4, 5, 6, 7, 8, 9, 18, 17, 16, 15, 14, 13, 12, 11]
    walks: list[tuple[int, ...]] = [
        tuple(range(1, 11)),          # the ten-face
        (2, 3, 11),                   # triangle at one end
        (10, 1, 18),                  # triangle at the other
        (18, 1, 2, 11, 12, 13, 14, 15, 16, 17),  # the face across edge 1-2
    ]
    for i in range(14):
        a, b = feet[i], feet[(i + 1) % 14]
        pa, pb = 19 + i, 19 + (i + 1) % 14
        if (a, b) == (9, 18):
            walks.append((pa, 9, 10, 18, pb))
        elif (a, b) == (11, 4):
            walks.append((pa, 11, 3, 4, pb))
        else:
            walks.append((pa, a, b, pb))
    walks.append(tuple(range(32, 18, -1)))  # outer 14-gon
    return plane_graph_from_faces(walks)


_NAMED: dict[str, Callable[[], PlaneGraph]] = {
    "cube": cube,
    "dodecahedron": dodecahedron,
    "icosidodecahedron": icosidodecahedron,
    "truncated-dodecahedron": truncated_dodecahedron,
    "config-a-gadget": config_a_gadget,
    "config-b-gadget": config_b_gadget,
}

_PARAMETRIC: dict[str, Callable[[int], PlaneGraph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
}


def names() -> tuple[str, ...]:
    return tuple(sorted(_NAMED)) + tuple(sorted(_PARAMETRIC))


def construct(name: str, param: int | None = None) -> PlaneGraph:
    """Look up a named graph; parametric families require `param`."""
    if name in _NAMED:
        if param is not None:
            raise BadParam(f"{name} takes no parameter")
        return _NAMED[name]()
    if name in _PARAMETRIC:
        if param is None:
            raise BadParam(f"{name} needs --param")
        return _PARAMETRIC[name](param)
    raise UnknownName(f"no constructor named {name!r}; known: {', '.join(names())}")
