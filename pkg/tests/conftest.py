from __future__ import annotations

import random

import networkx as nx
import pytest

from weakdeg import corpus

from oracles import from_nx

NAMED = [
    ("path", 1), ("path", 2), ("path", 5), ("path", 8),
    ("cycle", 3), ("cycle", 5), ("cycle", 7), ("cycle", 8), ("cycle", 10),
    ("star", 2), ("star", 5), ("star", 9),
    ("complete", 2), ("complete", 3), ("complete", 4), ("complete", 5),
    ("cube", None), ("dodecahedron", None), ("icosidodecahedron", None),
    ("truncated-dodecahedron", None),
    ("config-a-gadget", None), ("config-b-gadget", None),
]


def named_graphs():
    return [(f"{name}-{p}" if p else name, corpus.construct(name, p)) for name, p in NAMED]


@pytest.fixture(scope="session")
def named():
    return dict(named_graphs())


@pytest.fixture(scope="session")
def td():
    return corpus.truncated_dodecahedron()


@pytest.fixture(scope="session")
def atlas_connected():
    """Every connected graph on 1..7 vertices, relabeled to ids 1..n."""
    out = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0 or not nx.is_connected(g):
            continue
        out.append(from_nx(g))
    return out


@pytest.fixture(scope="session")
def random8():
    """200 seeded 8-vertex graphs across a spread of densities."""
    out = []
    rng = random.Random(84)
    for k in range(200):
        m = 7 + k % 15
        g = nx.gnm_random_graph(8, m, seed=rng.randrange(1 << 30))
        out.append(from_nx(g))
    return out
