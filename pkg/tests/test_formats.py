from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakdeg import corpus
from weakdeg.core import build_plane_graph
from weakdeg.degeneracy import Delete, DeleteSave
from weakdeg.errors import BadParam, ParseError, UnsupportedHeader
from weakdeg.formats import (
    read_cert,
    read_planar_code,
    read_rotg,
    write_cert,
    write_planar_code,
    write_rotg,
)


class TestRotg:
    def test_round_trip_named(self, named):
        for name, G in named.items():
            assert read_rotg(write_rotg(G)) == G, name

    def test_comments_and_blanks_ignored(self):
        text = "# a triangle\n\n3 3\n1: 2 3\n\n2: 3 1  # clockwise\n3: 1 2\n"
        G = read_rotg(text)
        assert G.n == 3 and G.m == 3

    @pytest.mark.parametrize("text,fragment,offset", [
        ("", "empty input", 1),
        ("3\n", "two integers", 1),
        ("a b\n", "two integers", 1),
        ("1 0\nhello\n", "expected 'v:", 2),
        ("1 0\n1: x\n", "integers", 2),
        ("2 1\n1: 2\n1: 2\n", "listed twice", 3),
        ("2 1\n1: 2\n", "announces 2 vertices", 1),
        ("2 5\n1: 2\n2: 1\n", "announces 5 edges", 1),
    ])
    def test_errors_carry_line_offsets(self, text, fragment, offset):
        with pytest.raises(ParseError) as exc:
            read_rotg(text)
        assert fragment in str(exc.value)
        assert exc.value.offset == offset

    def test_isolated_vertex_line(self):
        G = read_rotg("1 0\n5:\n")
        assert G.vertices == (5,)


class TestPlanarCode:
    def test_round_trip_named(self, named):
        for name, G in named.items():
            if G.n > 255:
                continue
            (H,) = read_planar_code(write_planar_code(G))
            if G.vertices == tuple(range(1, G.n + 1)):
                assert H == G, name
            else:
                assert (H.n, H.m) == (G.n, G.m), name

    def test_header_optional_on_read(self):
        payload = write_planar_code(corpus.cycle(4), header=False)
        assert not payload.startswith(b">>")
        (G,) = read_planar_code(payload)
        assert G.n == 4

    def test_multi_graph_stream(self):
        stream = write_planar_code([corpus.cube(), corpus.path(2), corpus.cycle(5)])
        gs = read_planar_code(stream)
        assert [g.n for g in gs] == [8, 2, 5]

    def test_renumbering_preserves_order(self):
        G = corpus.cube().remove_vertex(3)  # ids 1,2,4..8
        (H,) = read_planar_code(write_planar_code(G))
        assert H.vertices == tuple(range(1, 8))
        # order-preserving: old 4 becomes new 3, and adjacency follows
        old = sorted(G.vertices)
        relabel = {v: i for i, v in enumerate(old, start=1)}
        for v in G.vertices:
            want = [relabel[w] for w in G.rotation(v)]
            assert list(H.rotation(relabel[v])) == want

    def test_unsupported_header(self):
        with pytest.raises(UnsupportedHeader):
            read_planar_code(b">>edge_code<<\x01\x00")

    def test_unterminated_header(self):
        with pytest.raises(ParseError):
            read_planar_code(b">>planar_code")

    def test_truncation_mid_vertex(self):
        with pytest.raises(ParseError) as exc:
            read_planar_code(b"\x02\x02\x00\x02")
        assert exc.value.offset == 4

    def test_neighbor_out_of_range(self):
        with pytest.raises(ParseError):
            read_planar_code(b"\x02\x03\x00\x01\x00")

    def test_zero_count_byte(self):
        with pytest.raises(ParseError):
            read_planar_code(b"\x00")

    def test_size_cap_on_write(self):
        with pytest.raises(BadParam):
            write_planar_code(corpus.path(256))


class TestCert:
    @pytest.mark.parametrize("budget", [0, 2, {1: 2, 3: 0, 11: 1}])
    def test_round_trip(self, budget):
        ops = (DeleteSave(3, 2), Delete(11), Delete(1))
        assert read_cert(write_cert(budget, ops)) == (budget, ops)

    def test_empty_ops(self):
        assert read_cert(write_cert(2, ())) == (2, ())

    def test_comments_allowed(self):
        budget, ops = read_cert("# proof\nbudget const 2\nD 4 # first\n")
        assert budget == 2 and ops == (Delete(4),)

    @pytest.mark.parametrize("text,fragment", [
        ("", "empty certificate"),
        ("budget soft 3\n", "budget const"),
        ("budget const x\n", "integer"),
        ("budget const 2\nQ 1\n", "'D u' or 'S u w'"),
        ("budget const 2\nD 1 2\n", "'D u' or 'S u w'"),
        ("budget const 2\nS 1\n", "'D u' or 'S u w'"),
        ("budget map\n1 2 3\n", "v f(v)"),
        ("budget map\n1 2\n1 3\nD 1\n", "budgeted twice"),
    ])
    def test_errors(self, text, fragment):
        with pytest.raises(ParseError) as exc:
            read_cert(text)
        assert fragment in str(exc.value)

    def test_map_then_moves(self):
        budget, ops = read_cert("budget map\n1 2\n2 1\nS 1 2\nD 2\n")
        assert budget == {1: 2, 2: 1}
        assert ops == (DeleteSave(1, 2), Delete(2))


@st.composite
def rotation_graphs(draw):
    n = draw(st.integers(min_value=0, max_value=8))
    vs = list(range(1, n + 1))
    pairs = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    rot = {v: [] for v in vs}
    for u, v in chosen:
        rot[u].append(v)
        rot[v].append(u)
    for v in vs:
        rot[v] = draw(st.permutations(rot[v]))
    return build_plane_graph(rot)


class TestPropertyRoundTrips:
    @given(rotation_graphs())
    @settings(max_examples=80, deadline=None)
    def test_rotg(self, G):
        assert read_rotg(write_rotg(G)) == G

    @given(rotation_graphs())
    @settings(max_examples=80, deadline=None)
    def test_planar_code(self, G):
        if G.n == 0:
            return
        (H,) = read_planar_code(write_planar_code(G))
        assert H == G  # ids are already 1..n here
