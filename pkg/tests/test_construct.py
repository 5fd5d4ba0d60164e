"""Tests for the Hamiltonian-face construction, pinned to hand-checked values."""

import pytest

from genusforge.construct import (
    ArcPartition,
    CensusMismatchError,
    ChordDiagram,
    FacesNotOppositeError,
    NTooSmallError,
    OddNError,
    SharedVertexMismatchError,
    WrongResidueError,
    build_arc_partition,
    chord_diagram,
    construct,
    construct_mod0,
    construct_mod2,
    glue_embeddings,
    l_of_n,
    special_face_table,
)
from genusforge.maps import _least_rotation, trace_faces
from genusforge.ringel import build_ringel_embedding


def all_arcs(n):
    return {((t - 1) % (2 * n), t) for t in range(2 * n)}


class TestLowerBound:
    def test_values(self):
        assert [l_of_n(n) for n in range(2, 13)] == [
            0, 1, 2, 3, 5, 8, 11, 14, 18, 23, 28]
        assert l_of_n(40) == 371

    def test_rejects_tiny(self):
        with pytest.raises(ValueError):
            l_of_n(1)


class TestArcPartition:
    def test_frozen_n8_class0(self):
        p = build_arc_partition(8)
        assert p.parts[0] == {(3, 4), (7, 8), (11, 12), (15, 0)}

    def test_partitions_all_arcs(self):
        for n in (4, 6, 8, 10, 12, 14):
            p = build_arc_partition(n)
            assert set().union(*p.parts) == all_arcs(n)
            assert sum(len(q) for q in p.parts) == 2 * n

    def test_class_sizes(self):
        for n in (4, 8, 12):
            assert [len(q) for q in build_arc_partition(n).parts] == [n // 2] * 4
        for n in (6, 10, 14):
            p = build_arc_partition(n)
            assert [len(q) for q in p.parts] == [
                (n - 2) // 2, (n + 2) // 2, (n - 2) // 2, (n + 2) // 2]

    def test_moved_arcs_land_in_class3(self):
        # the two arcs crossing between the halves of H migrate to P_3
        p = build_arc_partition(6)
        assert (11, 0) in p.parts[3]
        assert (5, 6) in p.parts[3]
        assert p.part_of((11, 0)) == 3

    def test_rejects_bad_n(self):
        with pytest.raises(OddNError):
            build_arc_partition(5)
        with pytest.raises(NTooSmallError):
            build_arc_partition(2)


class TestSpecialFaceTable:
    def test_frozen_entries(self):
        t8 = special_face_table(8)
        assert t8.rows[1][1] == (4, 5, 12, 13)
        assert t8.rows[0][0] == (15, 0, 7, 8)
        t10 = special_face_table(10)
        assert t10.rows[3][-1] == (10, 19, 0, 9)

    def test_row_sizes_match_partition(self):
        for n in (4, 6, 8, 10, 12, 14):
            t = special_face_table(n)
            p = build_arc_partition(n)
            for i in range(4):
                assert 2 * len(t.rows[i]) == len(p.parts[i])

    def test_entries_are_faces_of_their_sub_embedding(self):
        """Every table entry must come out as a quadrilateral face of G_i."""
        for n in (4, 6, 8, 10):
            t = special_face_table(n)
            for i in range(4):
                census = trace_faces(build_ringel_embedding(t.part_orders(i)))
                for quad in t.rows[i]:
                    assert census.has_face(quad), (n, i, quad)

    def test_arcs_across_row_exhaust_the_class(self):
        for n in (6, 8, 10, 12):
            t = special_face_table(n)
            p = build_arc_partition(n)
            for i in range(4):
                carried = set()
                for quad in t.rows[i]:
                    edges = {(quad[j], quad[(j + 1) % 4]) for j in range(4)}
                    carried |= edges & p.parts[i]
                assert carried == p.parts[i]

    def test_part_orders_cover_class_endpoints(self):
        t = special_face_table(10)
        p = build_arc_partition(10)
        for i in range(4):
            lab = t.part_orders(i)
            endpoints = {w for arc in p.parts[i] for w in arc}
            assert set(lab.u_labels) | set(lab.v_labels) == endpoints
            assert len(lab.u_labels) == len(lab.v_labels) == len(p.parts[i])


class TestConstructMod0:
    def test_n4_census(self):
        r = construct_mod0(4)
        assert r.genus == 2
        assert r.census.lengths == (8, 8, 4, 4, 4, 4)
        assert r.census.has_face((0, 3, 6, 1, 4, 7, 2, 5))
        assert r.hamiltonian_face == tuple(range(8))

    def test_n4_rotation_table(self):
        # hand-traced: pi_v = (v-1, v+1, v+5, v+3) around each vertex
        r = construct_mod0(4)
        for v in range(8):
            expected = tuple((v + d) % 8 for d in (-1, 1, 5, 3))
            got = r.map.rotation_of(v)
            assert _least_rotation(got) == _least_rotation(expected)

    def test_n8_census_and_named_faces(self):
        r = construct_mod0(8)
        assert r.genus == 11
        assert r.census.f == 28
        assert r.named_faces["F1_1"] == (3, 14, 5, 12)
        assert r.named_faces["C8"] == (0, 7, 10, 1, 8, 15, 2, 9)
        assert r.census.has_face((3, 14, 5, 12))
        assert r.census.has_face((0, 7, 10, 1, 8, 15, 2, 9))

    def test_n12_genus(self):
        assert construct_mod0(12).genus == 28

    def test_rejects_wrong_residue(self):
        with pytest.raises(WrongResidueError):
            construct_mod0(6)
        with pytest.raises(WrongResidueError):
            construct_mod0(10)
        with pytest.raises(OddNError):
            construct_mod0(5)


class TestGlueEmbeddings:
    @pytest.fixture()
    def mod2_pieces(self):
        n = 10
        t = special_face_table(n)
        r1 = build_ringel_embedding(t.part_orders(1))
        r3 = build_ringel_embedding(t.part_orders(3))
        f = t.rows[3][-1]
        f_prime = tuple(reversed(f))
        f_prime = f_prime[f_prime.index(n - 1):] + f_prime[:f_prime.index(n - 1)]
        return r1, r3, f, f_prime

    def test_counts_add_up(self, mod2_pieces):
        r1, r3, f, f_prime = mod2_pieces
        glued = glue_embeddings(r1, r3, f, f_prime)
        assert glued.vertex_count == r1.vertex_count + r3.vertex_count - 4
        assert glued.edge_count == r1.edge_count + r3.edge_count - 4
        census = trace_faces(glued)
        assert census.f == trace_faces(r1).f + trace_faces(r3).f - 2
        assert not census.has_face(f)
        assert not census.has_face(f_prime)

    def test_surviving_faces_are_the_union(self, mod2_pieces):
        r1, r3, f, f_prime = mod2_pieces
        glued = glue_embeddings(r1, r3, f, f_prime)
        survivors = set(trace_faces(glued).vertex_faces)
        before = set(trace_faces(r1).vertex_faces) | set(trace_faces(r3).vertex_faces)
        before -= {_least_rotation(f), _least_rotation(f_prime)}
        assert survivors == before

    def test_rejects_wrong_shared_vertices(self, mod2_pieces):
        r1, r3, f, _ = mod2_pieces
        wrong = (f[0], f[1], f[2], 1)
        with pytest.raises(SharedVertexMismatchError):
            glue_embeddings(r1, r3, wrong, tuple(reversed(wrong)))

    def test_rejects_same_direction(self, mod2_pieces):
        r1, r3, f, _ = mod2_pieces
        with pytest.raises(FacesNotOppositeError):
            glue_embeddings(r1, r3, f, f)

    def test_swapped_arguments_also_glue(self, mod2_pieces):
        # the operation is symmetric: either map may come first
        r1, r3, f, f_prime = mod2_pieces
        glued = glue_embeddings(r3, r1, f_prime, f)
        assert trace_faces(glued).f == trace_faces(r1).f + trace_faces(r3).f - 2

    def test_rejects_non_face(self, mod2_pieces):
        r1, r3, f, f_prime = mod2_pieces
        # right vertex set, opposite directions, but not a face of either map
        scrambled = (f[0], f[2], f[1], f[3])
        with pytest.raises(FacesNotOppositeError):
            glue_embeddings(r1, r3, scrambled, tuple(reversed(scrambled)))


class TestConstructMod2:
    def test_n6_census_and_named_faces(self):
        r = construct_mod2(6)
        assert r.genus == 5
        assert r.census.f == 16
        assert r.census.lengths == (12,) + (4,) * 15
        assert r.named_faces["F1_0"] == (1, 10, 3, 8)
        assert r.named_faces["F2_0"] == (2, 7, 4, 9)
        assert r.census.has_face((1, 10, 3, 8))
        assert r.census.has_face((2, 7, 4, 9))

    def test_n10_census(self):
        r = construct_mod2(10)
        assert r.genus == 18
        assert r.census.f == 46
        assert r.named_faces["F1_0"] == (1, 18, 3, 16)
        assert r.census.has_face((1, 18, 3, 16))
        # the face shared between sub-embeddings 1 and 3 is consumed by the
        # gluing and must not survive in either direction
        assert not r.census.has_face((10, 19, 0, 9))
        assert not r.census.has_face((9, 0, 19, 10))

    def test_rejects_wrong_residue(self):
        with pytest.raises(WrongResidueError):
            construct_mod2(8)
        with pytest.raises(OddNError):
            construct_mod2(7)
        with pytest.raises(NTooSmallError):
            construct_mod2(2)


class TestConstruct:
    def test_n2_planar_square(self):
        r = construct(2)
        assert r.genus == 0
        assert r.census.lengths == (4, 4)
        assert r.census.has_face((0, 1, 2, 3))

    def test_even_sweep(self):
        for n in range(2, 29, 2):
            r = construct(n)
            assert r.genus == l_of_n(n)
            assert r.census.has_face(tuple(range(2 * n)))
            assert r.map.vertex_count == 2 * n
            assert r.map.edge_count == n * n

    def test_bipartite_parts_are_evens_and_odds(self):
        r = construct(10)
        for v in range(20):
            assert all(w % 2 != v % 2 for w in r.map.rotation_of(v))

    def test_rejects_odd_and_tiny(self):
        for n in (3, 7, 41):
            with pytest.raises(OddNError):
                construct(n)
        with pytest.raises(NTooSmallError):
            construct(0)


class TestChordDiagram:
    def test_frozen_partner(self):
        cd = chord_diagram(8)
        assert cd.partner((3, 4)) == (11, 12)
        assert cd.partner((11, 12)) == (3, 4)
        assert cd.part_index((3, 4)) == 0

    def test_perfect_matching(self):
        for n in (4, 6, 8, 10):
            cd = chord_diagram(n)
            assert len(cd.pairs) == n
            seen = [arc for a, b, _ in cd.pairs for arc in (a, b)]
            assert len(seen) == len(set(seen)) == 2 * n
            assert set(seen) == all_arcs(n)

    def test_lost_face_only_for_mod2(self):
        assert chord_diagram(8).lost_face is None
        assert chord_diagram(10).lost_face == (10, 19, 0, 9)

    def test_traced_faces_reproduce_replacement_faces(self):
        """Tracing the circle-with-chords map must yield exactly the faces the
        construction creates in place of the special quadrilaterals."""
        for n in (4, 6, 8, 10, 12):
            cd = chord_diagram(n)
            expected = {_least_rotation(c)
                        for c in construct(n).named_faces.values()}
            if cd.lost_face is not None:
                expected.add(_least_rotation(cd.lost_face))
            assert set(cd.traced_faces()) == expected, n

    def test_rejects_bad_n(self):
        with pytest.raises(OddNError):
            chord_diagram(5)
        with pytest.raises(NTooSmallError):
            chord_diagram(2)
