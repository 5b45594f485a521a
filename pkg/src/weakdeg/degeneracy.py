"""The vertex-deletion game and exact weak degeneracy.

Two moves act on a graph with a budget function f:

* ``Delete(u)`` removes u and decrements every neighbor; legal iff no
  neighbor drops below zero (u's own budget is irrelevant).
* ``DeleteSave(u, w)`` removes u, sparing the adjacent w from the decrement;
  legal iff f(u) > f(w) strictly and no other neighbor drops below zero.

A graph is weakly f-degenerate when some move sequence empties it; the weak
degeneracy wd(G) is the least d with f ≡ d working.  Disallowing saves gives
plain f-degeneracy.  Everything here works on abstract graphs — no embedding
is consulted — so non-plane rotation systems are fine.
"""
from __future__ import annotations

import time
from collections import OrderedDict
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .core import PlaneGraph
from .errors import IllegalMove, NotAdjacent, UnknownVertex


@dataclass(frozen=True)
class Delete:
    u: int


@dataclass(frozen=True)
class DeleteSave:
    u: int
    w: int


Op = Union[Delete, DeleteSave]


def make_budget(vertices: Sequence[int], budget: int | Mapping[int, int]) -> dict[int, int]:
    """Normalize a constant or per-vertex budget to a full map."""
    if isinstance(budget, int):
        return {v: budget for v in vertices}
    out = {}
    for v in vertices:
        if v not in budget:
            raise UnknownVertex(f"budget map is missing vertex {v}")
        out[v] = int(budget[v])
    return out


@dataclass(frozen=True)
class GameState:
    """A position of the game: the surviving graph and its budgets."""

    adjacency: dict[int, frozenset[int]]
    budget: dict[int, int]

    @classmethod
    def initial(cls, G: PlaneGraph, budget: int | Mapping[int, int]) -> "GameState":
        return cls(G.adjacency(), make_budget(G.vertices, budget))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.adjacency))

    def is_empty(self) -> bool:
        return not self.adjacency


def apply_delete(state: GameState, u: int) -> GameState:
    adj = state.adjacency
    if u not in adj:
        raise UnknownVertex(f"Delete: no vertex {u} in play")
    for w in adj[u]:
        if state.budget[w] < 1:
            raise IllegalMove(
                f"Delete({u}) would take neighbor {w} below budget zero"
            )
    new_adj = {v: nbrs - {u} for v, nbrs in adj.items() if v != u}
    new_budget = dict(state.budget)
    del new_budget[u]
    for w in adj[u]:
        new_budget[w] -= 1
    return GameState(new_adj, new_budget)


def apply_delete_save(state: GameState, u: int, w: int) -> GameState:
    adj = state.adjacency
    if u not in adj:
        raise UnknownVertex(f"DeleteSave: no vertex {u} in play")
    if w not in adj:
        raise UnknownVertex(f"DeleteSave: no vertex {w} in play")
    if w not in adj[u]:
        raise NotAdjacent(f"DeleteSave({u}, {w}): vertices are not adjacent")
    if not state.budget[u] > state.budget[w]:
        raise IllegalMove(
            f"DeleteSave({u}, {w}) needs f({u}) > f({w}); "
            f"got {state.budget[u]} <= {state.budget[w]}"
        )
    for x in adj[u]:
        if x != w and state.budget[x] < 1:
            raise IllegalMove(
                f"DeleteSave({u}, {w}) would take neighbor {x} below budget zero"
            )
    new_adj = {v: nbrs - {u} for v, nbrs in adj.items() if v != u}
    new_budget = dict(state.budget)
    del new_budget[u]
    for x in adj[u]:
        if x != w:
            new_budget[x] -= 1
    return GameState(new_adj, new_budget)


def apply_op(state: GameState, op: Op) -> GameState:
    if isinstance(op, Delete):
        return apply_delete(state, op.u)
    if isinstance(op, DeleteSave):
        return apply_delete_save(state, op.u, op.w)
    raise IllegalMove(f"unknown operation {op!r}")


@dataclass(frozen=True)
class ReplayResult:
    """Verdict of replaying an operation sequence from a starting budget."""

    accepted: bool
    steps_applied: int
    failed_step: int | None = None
    reason: str = ""
    remaining: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.accepted


def replay(
    G: PlaneGraph | GameState,
    budget: int | Mapping[int, int],
    ops: Sequence[Op],
) -> ReplayResult:
    """Run a certificate; accepted iff every move is legal and the graph empties.

    Never raises on a bad certificate — the verdict carries the first failing
    step (1-based) and why.
    """
    if isinstance(G, GameState):
        state = GameState(dict(G.adjacency), make_budget(G.vertices, budget))
    else:
        state = GameState.initial(G, budget)
    for k, op in enumerate(ops, start=1):
        try:
            state = apply_op(state, op)
        except (IllegalMove, UnknownVertex) as err:
            return ReplayResult(
                False,
                steps_applied=k - 1,
                failed_step=k,
                reason=str(err),
                remaining=state.vertices,
            )
    if state.adjacency:
        return ReplayResult(
            False,
            steps_applied=len(ops),
            reason=f"{len(state.adjacency)} vertex(es) remain",
            remaining=state.vertices,
        )
    return ReplayResult(True, steps_applied=len(ops))


@dataclass(frozen=True)
class GreedyResult:
    """Greedy degeneracy bound d and the removal order that realizes it."""

    d: int
    order: tuple[int, ...]


def greedy_degeneracy(G: PlaneGraph) -> GreedyResult:
    """Repeatedly strip a minimum-degree vertex (lowest id on ties)."""
    adj = {v: set(ws) for v, ws in G.adjacency().items()}
    d = 0
    order: list[int] = []
    while adj:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        d = max(d, len(adj[v]))
        order.append(v)
        for w in adj[v]:
            adj[w].discard(v)
        del adj[v]
    return GreedyResult(d, tuple(order))


@dataclass
class DecideResult:
    """Outcome of one weak-f-degeneracy decision."""

    status: str  # "yes" | "no" | "capped"
    certificate: tuple[Op, ...] | None
    nodes: int
    elapsed: float


def decide_weak_f_degenerate(
    G: PlaneGraph,
    budget: int | Mapping[int, int],
    *,
    allow_save: bool = True,
    node_cap: int | None = None,
    time_cap: float | None = None,
    memo_cap: int = 1_000_000,
) -> DecideResult:
    """Exhaustive game search with memoized failed positions.

    Positions are (alive-set, budget-vector) pairs; whether a position is
    winnable depends on nothing else, so losing positions are cached (with an
    LRU bound — budgets are never truncated, since the DeleteSave guard is
    order-sensitive and capping budgets is unsound).  Moves are explored
    deterministically: legal Deletes by (budget, id), then legal saves by
    (budget, id, target id).  `node_cap`/`time_cap` turn an unfinished search
    into status "capped", never into a wrong verdict.
    """
    verts = list(G.vertices)
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    nbr_mask = [0] * n
    for u, v in G.edges:
        nbr_mask[index[u]] |= 1 << index[v]
        nbr_mask[index[v]] |= 1 << index[u]
    full_budget = make_budget(verts, budget)
    bud0 = tuple(full_budget[v] for v in verts)
    start = time.monotonic()
    deadline = start + time_cap if time_cap is not None else None
    failed: OrderedDict[tuple[int, tuple[int, ...]], None] = OrderedDict()
    nodes = 0
    ops: list[Op] = []

    def alive_bits(mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def dfs(mask: int, bud: tuple[int, ...]) -> bool | None:
        nonlocal nodes
        if mask == 0:
            return True
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            return None
        if deadline is not None and nodes % 256 == 0 and time.monotonic() > deadline:
            return None
        key = (mask, bud)
        if key in failed:
            failed.move_to_end(key)
            return False
        deletes: list[tuple[int, int, int]] = []
        saves: list[tuple[int, int, int, int]] = []
        for i in alive_bits(mask):
            nbrs = alive_bits(nbr_mask[i] & mask)
            zeros = [j for j in nbrs if bud[j] == 0]
            if not zeros:
                deletes.append((bud[i], i, nbr_mask[i] & mask))
            if allow_save:
                if not zeros:
                    targets = [j for j in nbrs if bud[j] < bud[i]]
                elif len(zeros) == 1 and bud[i] > 0:
                    targets = zeros
                else:
                    targets = []
                for j in targets:
                    saves.append((bud[i], i, j, nbr_mask[i] & mask))
        deletes.sort(key=lambda t: (t[0], t[1]))
        saves.sort(key=lambda t: (t[0], t[1], t[2]))
        for _, i, am in deletes:
            nb = list(bud)
            for j in alive_bits(am):
                nb[j] -= 1
            ops.append(Delete(verts[i]))
            r = dfs(mask & ~(1 << i), tuple(nb))
            if r:
                return True
            ops.pop()
            if r is None:
                return None
        for _, i, j, am in saves:
            nb = list(bud)
            for x in alive_bits(am):
                if x != j:
                    nb[x] -= 1
            ops.append(DeleteSave(verts[i], verts[j]))
            r = dfs(mask & ~(1 << i), tuple(nb))
            if r:
                return True
            ops.pop()
            if r is None:
                return None
        failed[key] = None
        if len(failed) > memo_cap:
            failed.popitem(last=False)
        return False

    verdict = dfs((1 << n) - 1, bud0)
    elapsed = time.monotonic() - start
    if verdict is True:
        return DecideResult("yes", tuple(ops), nodes, elapsed)
    if verdict is False:
        return DecideResult("no", None, nodes, elapsed)
    return DecideResult("capped", None, nodes, elapsed)


@dataclass
class WeakDegeneracyResult:
    """wd(G) when the search finished, or honest bounds when it was capped."""

    value: int | None
    status: str  # "exact" | "capped"
    lower_bound: int
    upper_bound: int
    certificate: tuple[Op, ...] | None
    nodes: int
    elapsed: float


def weak_degeneracy(
    G: PlaneGraph,
    *,
    allow_save: bool = True,
    node_cap: int | None = None,
    time_cap: float | None = None,
) -> WeakDegeneracyResult:
    """Least constant budget that wins the game, searched upward from zero.

    The greedy bound d(G) caps the search: deleting in reverse greedy order
    with f ≡ d(G) is always legal (each vertex has absorbed at most d(G)
    decrements when its turn comes), so that certificate is returned whenever
    no smaller budget works.
    """
    start = time.monotonic()
    greedy = greedy_degeneracy(G)
    total_nodes = 0
    for d in range(greedy.d):
        r = decide_weak_f_degenerate(
            G, d, allow_save=allow_save, node_cap=node_cap, time_cap=time_cap
        )
        total_nodes += r.nodes
        if r.status == "yes":
            return WeakDegeneracyResult(
                d, "exact", d, d, r.certificate, total_nodes, time.monotonic() - start
            )
        if r.status == "capped":
            return WeakDegeneracyResult(
                None,
                "capped",
                d,
                greedy.d,
                None,
                total_nodes,
                time.monotonic() - start,
            )
    cert = tuple(Delete(v) for v in reversed(greedy.order))
    return WeakDegeneracyResult(
        greedy.d,
        "exact",
        greedy.d,
        greedy.d,
        cert,
        total_nodes,
        time.monotonic() - start,
    )


# --- near-bipartite partitions ------------------------------------------------


@dataclass
class NearBipartiteResult:
    """An (independent set, induced forest) split of the vertices, if found."""

    status: str  # "found" | "none" | "capped"
    independent: frozenset[int] | None
    forest: frozenset[int] | None
    nodes: int


def verify_near_bipartite(G: PlaneGraph, I: frozenset[int], F: frozenset[int]) -> bool:
    """Check a claimed partition from the definitions, independently of search."""
    if I & F or (I | F) != set(G.vertices):
        return False
    for v in I:
        if G.neighbors(v) & I:
            return False
    # F must induce a forest: every component has one more vertex than edges.
    seen: set[int] = set()
    for root in F:
        if root in seen:
            continue
        comp = {root}
        frontier = [root]
        edges = 0
        while frontier:
            v = frontier.pop()
            for w in G.neighbors(v) & F:
                edges += 1
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        if edges // 2 != len(comp) - 1:
            return False
        seen |= comp
    return True


def near_bipartite(G: PlaneGraph, *, node_cap: int | None = None) -> NearBipartiteResult:
    """Search for a partition V = I ∪ F with I independent and G[F] a forest.

    Backtracking in vertex order, trying I before F; forest-ness is tracked
    with a rollback union-find so a cycle in G[F] prunes immediately.  The
    result is re-verified from the definitions before being returned.
    """
    verts = list(G.vertices)
    n = len(verts)
    in_I: set[int] = set()
    in_F: set[int] = set()
    parent: dict[int, int] = {}
    rank: dict[int, int] = {}
    trail: list[tuple[int, int, int]] = []
    nodes = 0
    capped = False

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        if rank[rx] < rank[ry]:
            rx, ry = ry, rx
        trail.append((ry, rx, rank[rx]))
        parent[ry] = rx
        if rank[rx] == rank[ry]:
            rank[rx] += 1
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            ry, rx, old = trail.pop()
            parent[ry] = ry
            rank[rx] = old

    def assign(k: int) -> bool:
        nonlocal nodes, capped
        if capped:
            return False
        if k == n:
            return True
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            capped = True
            return False
        v = verts[k]
        if not (G.neighbors(v) & in_I):
            in_I.add(v)
            if assign(k + 1):
                return True
            in_I.discard(v)
            if capped:
                return False
        mark = len(trail)
        parent[v] = v
        rank[v] = 0
        ok = True
        for w in G.neighbors(v):
            if w in in_F and not union(v, w):
                ok = False
                break
        if ok:
            in_F.add(v)
            if assign(k + 1):
                return True
            in_F.discard(v)
        undo(mark)
        del parent[v]
        del rank[v]
        return False

    if assign(0):
        I, F = frozenset(in_I), frozenset(in_F)
        if not verify_near_bipartite(G, I, F):
            raise AssertionError("near_bipartite produced an invalid partition")
        return NearBipartiteResult("found", I, F, nodes)
    return NearBipartiteResult("capped" if capped else "none", None, None, nodes)
