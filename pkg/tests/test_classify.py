from __future__ import annotations

import pytest

from weakdeg import corpus
from weakdeg.classify import (
    classify_faces,
    classify_vertices,
    detect_config_a,
    detect_config_b,
    validate_config_instance,
)
from weakdeg.cycles import C468, C469
from weakdeg.errors import HypothesisNotMet


class TestVertexLabels:
    @pytest.mark.parametrize("cls", [C469, C468])
    def test_td_every_vertex_worst(self, td, cls):
        res = classify_vertices(td, cls)
        assert set(res.labels.values()) == {"worst"}
        assert all(len(res.three_faces[v]) == 1 for v in td.vertices)

    def test_td_no_five_faces(self, td):
        res = classify_vertices(td, C469)
        assert all(not fs for fs in res.five_faces.values())
        assert res.nice_faces == ()

    def test_gate_rejects_nonmember(self):
        with pytest.raises(HypothesisNotMet):
            classify_vertices(corpus.cube(), C469)

    def test_gate_can_be_disarmed(self):
        B = corpus.config_b_gadget()
        res = classify_vertices(B, C469, check_hypotheses=False)
        assert len(res.labels) == B.n


class TestFaceLabels:
    def test_td_has_no_bad_faces(self, td):
        res = classify_faces(td, C469)
        assert res.bad == {} and res.special == {} and res.t == {}

    def test_gadget_bad_and_special(self):
        B = corpus.config_b_gadget()
        res = classify_faces(B, C469, check_hypotheses=False)
        assert set(res.bad) == {1}
        assert set(res.special) == {3}
        assert res.t == {3: 1}
        (path,) = res.special[3]
        assert path.bad_face == 1 and path.special_face == 3
        assert path.path == (18, 1, 2, 11)
        assert path.special_edge == (1, 2)

    def test_gadget_pattern_pair_sources_are_big(self):
        B = corpus.config_b_gadget()
        res = classify_faces(B, C469, check_hypotheses=False)
        (pair,) = res.bad[1]
        for tri in pair.triangles:
            assert B.face_by_id(tri).degree == 3


class TestConfigA:
    def test_td_has_sixty(self, td):
        insts = detect_config_a(td)
        assert len(insts) == 60
        for inst in insts:
            assert validate_config_instance(td, inst)

    def test_td_instances_are_distinct(self, td):
        seen = {tuple(sorted(i.mapping.items())) for i in detect_config_a(td)}
        assert len(seen) == 60

    def test_mapping_degrees(self, td):
        inst = detect_config_a(td)[0]
        assert all(td.degree(v) == 3 for v in inst.mapping.values())
        s = inst.mapping["s"]
        assert td.has_edge(inst.mapping["v3"], s) and td.has_edge(inst.mapping["v4"], s)
        assert td.has_edge(inst.mapping["v3"], inst.mapping["v4"])

    def test_gadget_alone_is_not_an_instance(self):
        # inside the bare gadget the cycle vertices have degree 2, not 3
        assert detect_config_a(corpus.config_a_gadget()) == ()

    def test_validator_rejects_tampering(self, td):
        inst = detect_config_a(td)[0]
        bad = dict(inst.mapping)
        bad["v1"], bad["v2"] = bad["v2"], bad["v1"]
        from weakdeg.classify import ConfigInstance
        assert not validate_config_instance(td, ConfigInstance("a", bad, inst.faces))


class TestConfigB:
    def test_td_has_none(self, td):
        assert detect_config_b(td) == ()

    def test_gadget_hosts_exactly_one(self):
        B = corpus.config_b_gadget()
        insts = detect_config_b(B)
        assert len(insts) == 1
        inst = insts[0]
        assert inst.mapping == (
            {f"x{i}": i for i in range(1, 11)} | {f"y{i}": 8 + i for i in range(3, 11)}
        )
        assert validate_config_instance(B, inst)

    def test_gadget_degrees(self):
        B = corpus.config_b_gadget()
        inst = detect_config_b(B)[0]
        m = inst.mapping
        assert B.degree(m["y3"]) == 4 and B.degree(m["y10"]) == 4
        for lbl in ("x1", "x2", "x5", "y4", "y9"):
            assert B.degree(m[lbl]) == 3

    def test_validator_rejects_tampering(self):
        B = corpus.config_b_gadget()
        inst = detect_config_b(B)[0]
        from weakdeg.classify import ConfigInstance
        bad = dict(inst.mapping)
        bad["y4"], bad["y5"] = bad["y5"], bad["y4"]
        assert not validate_config_instance(B, ConfigInstance("b", bad, inst.faces))
