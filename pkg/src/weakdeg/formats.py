"""Serialization: the rotg text format, planar_code, and move certificates.

rotg is the package's native text format — a header line ``n m`` followed
by one ``v: w1 w2 ... wk`` line per vertex giving its clockwise rotation.
Blank lines and ``#`` comments are ignored.  planar_code is the compact
binary rotation-system format emitted by standard plane-graph generators
(one count byte, then zero-terminated neighbor lists in rotation order).
Certificates are line-oriented: a budget declaration followed by one move
per line.

All parse errors carry an offset — a 1-based line number for the text
formats, a 0-based byte position for planar_code.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .core import PlaneGraph, build_plane_graph
from .degeneracy import Delete, DeleteSave, Op
from .errors import BadParam, ParseError, UnsupportedHeader

_PLANAR_CODE_HEADER = b">>planar_code<<"


# --- rotg ---------------------------------------------------------------------


def _meaningful_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def read_rotg(text: str) -> PlaneGraph:
    lines = iter(_meaningful_lines(text))
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise ParseError("empty input", 1) from None
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be two integers: n m", header_no)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must be two integers: n m", header_no) from None
    rotations: dict[int, list[int]] = {}
    for lineno, line in lines:
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError("expected 'v: neighbors...'", lineno)
        try:
            v = int(head)
            nbrs = [int(t) for t in tail.split()]
        except ValueError:
            raise ParseError("vertex lines must contain integers", lineno) from None
        if v in rotations:
            raise ParseError(f"vertex {v} listed twice", lineno)
        rotations[v] = nbrs
    if len(rotations) != n:
        raise ParseError(
            f"header announces {n} vertices, found {len(rotations)}", header_no
        )
    G = build_plane_graph(rotations)
    if G.m != m:
        raise ParseError(f"header announces {m} edges, found {G.m}", header_no)
    return G


def write_rotg(G: PlaneGraph) -> str:
    out = [f"{G.n} {G.m}"]
    for v in G.vertices:
        out.append(f"{v}: " + " ".join(str(w) for w in G.rotation(v)))
    return "\n".join(out) + "\n"


# --- planar_code --------------------------------------------------------------


def read_planar_code(data: bytes) -> list[PlaneGraph]:
    """Decode every graph in a planar_code byte stream.

    An ASCII ``>>planar_code<<`` header is optional; any other ``>>...<<``
    header is refused.  Each graph is a count byte followed by that many
    zero-terminated neighbor lists, neighbors in rotation order.
    """
    pos = 0
    if data.startswith(b">>"):
        end = data.find(b"<<", 2)
        if end < 0:
            raise ParseError("unterminated format header", 0)
        if data[: end + 2] != _PLANAR_CODE_HEADER:
            raise UnsupportedHeader(
                f"unsupported format header {data[:end + 2]!r}", 0
            )
        pos = end + 2
    graphs: list[PlaneGraph] = []
    size = len(data)
    while pos < size:
        n = data[pos]
        if n == 0:
            raise ParseError("vertex count byte is zero", pos)
        pos += 1
        rotations: dict[int, list[int]] = {}
        for v in range(1, n + 1):
            nbrs: list[int] = []
            while True:
                if pos >= size:
                    raise ParseError(
                        f"stream ends inside the adjacency list of vertex {v}", size
                    )
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise ParseError(
                        f"neighbor byte {b} exceeds vertex count {n}", pos - 1
                    )
                nbrs.append(b)
            rotations[v] = nbrs
        graphs.append(build_plane_graph(rotations))
    return graphs


def write_planar_code(graphs: Sequence[PlaneGraph] | PlaneGraph, *, header: bool = True) -> bytes:
    """Encode one graph or several, renumbering ids to 1..n order-preservingly."""
    if isinstance(graphs, PlaneGraph):
        graphs = [graphs]
    chunks = [_PLANAR_CODE_HEADER] if header else []
    for G in graphs:
        if G.n > 255:
            raise BadParam(f"planar_code carries at most 255 vertices, got {G.n}")
        renum = {v: i for i, v in enumerate(G.vertices, start=1)}
        body = bytearray([G.n])
        for v in G.vertices:
            body.extend(renum[w] for w in G.rotation(v))
            body.append(0)
        chunks.append(bytes(body))
    return b"".join(chunks)


# --- certificates -------------------------------------------------------------


def write_cert(budget: int | Mapping[int, int], ops: Sequence[Op]) -> str:
    """Render a budget declaration and a move list, one record per line."""
    out: list[str] = []
    if isinstance(budget, int):
        out.append(f"budget const {budget}")
    else:
        out.append("budget map")
        for v in sorted(budget):
            out.append(f"{v} {budget[v]}")
    for op in ops:
        if isinstance(op, DeleteSave):
            out.append(f"S {op.u} {op.w}")
        else:
            out.append(f"D {op.u}")
    return "\n".join(out) + "\n"


def read_cert(text: str) -> tuple[int | dict[int, int], tuple[Op, ...]]:
    lines = iter(_meaningful_lines(text))
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError("empty certificate", 1) from None
    parts = line.split()
    budget: int | dict[int, int]
    in_map = False
    if parts[:2] == ["budget", "const"] and len(parts) == 3:
        try:
            budget = int(parts[2])
        except ValueError:
            raise ParseError("constant budget must be an integer", lineno) from None
    elif parts == ["budget", "map"]:
        budget = {}
        in_map = True
    else:
        raise ParseError("expected 'budget const <d>' or 'budget map'", lineno)
    ops: list[Op] = []
    for lineno, line in lines:
        parts = line.split()
        if in_map and parts[0] not in ("D", "S"):
            if len(parts) != 2:
                raise ParseError("budget map entries are 'v f(v)'", lineno)
            try:
                v, f = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("budget map entries are 'v f(v)'", lineno) from None
            if v in budget:
                raise ParseError(f"vertex {v} budgeted twice", lineno)
            budget[v] = f
            continue
        in_map = False
        try:
            if parts[0] == "D" and len(parts) == 2:
                ops.append(Delete(int(parts[1])))
                continue
            if parts[0] == "S" and len(parts) == 3:
                ops.append(DeleteSave(int(parts[1]), int(parts[2])))
                continue
        except ValueError:
            raise ParseError("move arguments must be integers", lineno) from None
        raise ParseError("expected 'D u' or 'S u w'", lineno)
    return budget, tuple(ops)
