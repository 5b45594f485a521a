from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakdeg import corpus
from weakdeg.classify import ConfigInstance, detect_config_b
from weakdeg.core import build_plane_graph
from weakdeg.degeneracy import Delete, DeleteSave, decide_weak_f_degenerate, replay
from weakdeg.errors import (
    BadSubcertificate,
    BothChordsPresent,
    DegreeTooHigh,
    NotClassMember,
    ReplayFailed,
)
from weakdeg.reductions import (
    config_a_elimination,
    config_b_elimination,
    constructive_prover,
    extend_degree2,
    gdp_tree_check,
)

from oracles import from_nx, oracle_gdp_tree
import networkx as nx


class TestGdpTree:
    @pytest.mark.parametrize("name,param,ok", [
        ("cycle", 3, True), ("cycle", 8, True),
        ("complete", 2, True), ("complete", 5, True),
        ("path", 6, True), ("star", 7, True),
        ("cube", None, False), ("dodecahedron", None, False),
    ])
    def test_known_cases(self, name, param, ok):
        G = corpus.construct(name, param)
        assert gdp_tree_check(G).is_gdp_tree is ok

    def test_witness_names_the_block(self):
        v = gdp_tree_check(corpus.cube())
        assert not v and v.witness == (frozenset(range(1, 9)),)

    def test_bowtie_two_triangle_blocks(self):
        G = build_plane_graph({1: [2, 3], 2: [3, 1], 3: [1, 2, 4, 5], 4: [3, 5], 5: [4, 3]})
        assert gdp_tree_check(G).is_gdp_tree

    def test_chorded_cycle_fails(self):
        # a 10-cycle with an apex on two antipodes: a theta block
        rot = {i: [(i % 10) + 1, ((i - 2) % 10) + 1] for i in range(1, 11)}
        rot[1] = [2, 11, 10]
        rot[6] = [7, 11, 5]
        rot[11] = [1, 6]
        v = gdp_tree_check(build_plane_graph(rot))
        assert not v.is_gdp_tree
        assert v.witness == (frozenset(range(1, 12)),)

    def test_isolated_vertices_pass(self):
        assert gdp_tree_check(build_plane_graph({1: [], 2: []})).is_gdp_tree

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=60, deadline=None)
    def test_matches_reference_blocks(self, seed):
        g = nx.gnm_random_graph(8, 3 + seed % 14, seed=seed)
        G = from_nx(g)
        assert gdp_tree_check(G).is_gdp_tree == oracle_gdp_tree(G)


class TestExtendDegree2:
    def test_appends_final_delete(self):
        G = corpus.path(3)
        cert = extend_degree2(G, 2, (Delete(1), Delete(3)))
        assert cert == (Delete(1), Delete(3), Delete(2))
        assert replay(G, 2, cert).accepted

    def test_degree_gate(self):
        with pytest.raises(DegreeTooHigh):
            extend_degree2(corpus.star(5), 1, ())

    def test_wrong_removal_set(self):
        G = corpus.path(3)
        with pytest.raises(BadSubcertificate):
            extend_degree2(G, 2, (Delete(1),))
        with pytest.raises(BadSubcertificate):
            extend_degree2(G, 2, (Delete(1), Delete(2)))


@pytest.fixture(scope="module")
def pattern_a():
    G = corpus.config_a_gadget()
    inst = ConfigInstance("a", {f"v{i}": i for i in range(1, 11)} | {"s": 11}, (1, 2))
    return G, inst


WORST_A = {i: 1 for i in range(1, 12)} | {3: 2, 4: 2}


class TestConfigAElimination:
    def test_worst_case_tail(self, pattern_a):
        G, inst = pattern_a
        tail = config_a_elimination(G, inst, WORST_A)
        assert tail[0] == DeleteSave(3, 2)
        assert tail[1] == Delete(11)
        assert len(tail) == 11

    def test_mirror_fallback(self, pattern_a):
        # v2 at full budget ties the standard guard; the mirrored reading works
        G, inst = pattern_a
        tail = config_a_elimination(G, inst, WORST_A | {2: 2})
        assert tail[0] == DeleteSave(4, 5)
        assert tail[1] == Delete(11)

    @pytest.mark.parametrize("budgets", [
        {i: 1 for i in range(1, 12)},
        {i: 2 for i in range(1, 12)},  # strict save guard fails both ways
    ])
    def test_hopeless_budgets_raise(self, pattern_a, budgets):
        G, inst = pattern_a
        with pytest.raises(ReplayFailed):
            config_a_elimination(G, inst, budgets)

    def test_no_pure_delete_ordering_exists(self, pattern_a):
        # exhaustive: under worst-case budgets the pattern needs its save
        G, _ = pattern_a
        r = decide_weak_f_degenerate(G, WORST_A, allow_save=False)
        assert r.status == "no"
        r2 = decide_weak_f_degenerate(G, WORST_A, allow_save=True)
        assert r2.status == "yes"


@pytest.fixture(scope="module")
def pattern_b():
    G = corpus.config_b_gadget()
    inst = detect_config_b(G)[0]
    budgets = {inst.mapping[lbl]: 1 for lbl in inst.mapping}
    for lbl in ("x1", "x2", "x3", "x10"):
        budgets[inst.mapping[lbl]] = 2
    return G, inst, budgets


def _with_chords(G, *pairs):
    rot = {w: list(G.rotation(w)) for w in G.vertices}
    for u, v in pairs:
        rot[u].append(v)
        rot[v].append(u)
    return build_plane_graph(rot)


class TestConfigBElimination:
    def test_worst_case_tail(self, pattern_b):
        G, inst, budgets = pattern_b
        tail = config_b_elimination(G, inst, budgets)
        m = inst.mapping
        assert tail[0] == DeleteSave(m["x3"], m["x4"])
        assert tail[1] == Delete(m["y3"])
        assert len(tail) == 18
        assert {op.u for op in tail} == set(m.values())

    def test_chord_on_the_tolerated_side(self, pattern_b):
        G, inst, budgets = pattern_b
        m = inst.mapping
        Gc = _with_chords(G, (m["x9"], m["x7"]))
        tail = config_b_elimination(Gc, inst, budgets | {m["x9"]: 2, m["x7"]: 2})
        assert tail[0] == DeleteSave(m["x3"], m["x4"])

    def test_chord_on_the_other_side_mirrors(self, pattern_b):
        G, inst, budgets = pattern_b
        m = inst.mapping
        Gc = _with_chords(G, (m["x4"], m["x6"]))
        tail = config_b_elimination(Gc, inst, budgets | {m["x4"]: 2, m["x6"]: 2})
        assert tail[0] == DeleteSave(m["x10"], m["x9"])

    def test_both_chords_rejected(self, pattern_b):
        G, inst, budgets = pattern_b
        m = inst.mapping
        Gc = _with_chords(G, (m["x9"], m["x7"]), (m["x4"], m["x6"]))
        with pytest.raises(BothChordsPresent):
            config_b_elimination(Gc, inst, budgets)

    def test_wrong_first_move_fails_replay(self, pattern_b):
        # swap the opening save for a plain delete and keep the rest: the
        # missing shield on x4 surfaces only at the very last deletions
        G, inst, budgets = pattern_b
        m = inst.mapping
        W = frozenset(m.values())
        adjacency = {w: G.neighbors(w) & W for w in W}
        from weakdeg.degeneracy import GameState
        state = GameState(adjacency, dict(budgets))
        good = config_b_elimination(G, inst, budgets)
        mutated = (Delete(m["x3"]),) + good[1:]
        r = replay(state, budgets, mutated)
        assert not r.accepted and r.failed_step == 17
        assert "budget" in r.reason


class TestProver:
    @pytest.mark.parametrize("name,param", [
        ("complete", 2), ("complete", 3), ("path", 7), ("star", 8),
        ("cycle", 5), ("cycle", 7), ("cycle", 10), ("config-a-gadget", None),
    ])
    @pytest.mark.parametrize("cls", ["c469", "c468"])
    def test_small_members_peel_by_degree(self, name, param, cls):
        G = corpus.construct(name, param)
        proof = constructive_prover(G, cls)
        assert all(s.kind == "degree2" for s in proof.steps)
        assert len(proof.certificate) == G.n
        assert proof.replay.accepted

    def test_td_uses_one_pattern(self, td):
        proof = constructive_prover(td, "c469")
        kinds = [s.kind for s in proof.steps]
        assert kinds.count("config-a") == 1
        assert kinds.count("degree2") == 49
        assert len(proof.certificate) == 60
        assert proof.replay.accepted

    def test_td_both_classes_and_deterministic(self, td):
        p1 = constructive_prover(td, "c468")
        p2 = constructive_prover(td, "c468")
        assert p1.certificate == p2.certificate
        assert p1.replay.accepted

    def test_certificate_covers_every_vertex_once(self, td):
        proof = constructive_prover(td, "c469")
        assert sorted(op.u for op in proof.certificate) == list(td.vertices)

    def test_guard_toggle_same_answer(self, td):
        a = constructive_prover(td, "c469")
        b = constructive_prover(td, "c469", heredity_check=False)
        assert a.certificate == b.certificate

    def test_nonmember_rejected(self):
        with pytest.raises(NotClassMember):
            constructive_prover(corpus.dodecahedron(), "c469")
        with pytest.raises(NotClassMember):
            constructive_prover(corpus.cycle(4), "c468")

    def test_final_state_replay_is_reported(self, td):
        proof = constructive_prover(td, "c469")
        again = replay(td, 2, proof.certificate)
        assert again.accepted and again.steps_applied == 60
