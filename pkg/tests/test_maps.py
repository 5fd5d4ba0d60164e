import pytest

from genusforge.maps import (
    AsymmetricAdjacencyError,
    DisconnectedError,
    DuplicateNeighborError,
    MapError,
    NotInvolutionError,
    OrbitOriginMismatchError,
    SelfLoopError,
    genus,
    map_from_darts,
    map_from_rotations,
    reverse_orientation,
    trace_faces,
)


def square_map():
    return map_from_rotations({0: (1, 3), 1: (2, 0), 2: (3, 1), 3: (0, 2)})


def test_square_is_planar():
    census = trace_faces(square_map())
    assert census.v == 4
    assert census.e == 4
    assert census.f == 2
    assert census.lengths == (4, 4)
    assert census.genus == 0
    assert census.has_face((0, 1, 2, 3))
    assert census.has_face((0, 3, 2, 1))
    # cyclic rotations are the same face, the reverse traversal is not this face
    assert census.has_face((2, 3, 0, 1))
    assert not census.has_face((0, 1, 2))


def ringel_k44_rotations():
    # u vertices are 0..3, v vertices are 4..7; even u descend, odd u ascend,
    # even v ascend, odd v descend
    return {
        0: (7, 6, 5, 4),
        2: (7, 6, 5, 4),
        1: (4, 5, 6, 7),
        3: (4, 5, 6, 7),
        4: (0, 1, 2, 3),
        6: (0, 1, 2, 3),
        5: (3, 2, 1, 0),
        7: (3, 2, 1, 0),
    }


def test_k44_quadrangular_embedding_has_genus_one():
    m = map_from_rotations(ringel_k44_rotations())
    assert m.vertex_count == 8
    assert m.edge_count == 16
    census = trace_faces(m)
    assert census.f == 8
    assert census.lengths == (4,) * 8
    assert census.genus == 1
    # one face from each alternation family
    assert census.has_face((4, 1, 5, 0))
    assert census.has_face((1, 6, 2, 5))


def test_digon_multigraph():
    # two vertices joined by two parallel edges: sphere with two digon faces
    twin = (1, 0, 3, 2)
    origin = (0, 1, 0, 1)
    rotation = (2, 3, 0, 1)
    m = map_from_darts(2, twin, rotation, origin)
    census = trace_faces(m)
    assert census.e == 2
    assert census.f == 2
    assert census.lengths == (2, 2)
    assert census.genus == 0


def test_rotation_round_trip():
    m = square_map()
    rots = m.vertex_rotations()
    m2 = map_from_rotations(rots)
    assert m2.vertex_rotations() == rots


def test_reverse_orientation_is_involution():
    m = map_from_rotations(ringel_k44_rotations())
    r = reverse_orientation(m)
    assert trace_faces(r).lengths == trace_faces(m).lengths
    rr = reverse_orientation(r)
    assert rr.rotation_array == m.rotation_array
    assert rr.twin_array == m.twin_array


def test_reverse_orientation_reverses_faces():
    census = trace_faces(square_map())
    reversed_census = trace_faces(reverse_orientation(square_map()))
    for face in census.vertex_faces:
        assert reversed_census.has_face(tuple(reversed(face)))


def test_asymmetric_adjacency_rejected():
    with pytest.raises(AsymmetricAdjacencyError):
        map_from_rotations({0: (5,), 5: ()})
    with pytest.raises(AsymmetricAdjacencyError):
        map_from_rotations({0: (1, 2), 1: (0,), 2: (1,)})


def test_duplicate_neighbor_rejected():
    with pytest.raises(DuplicateNeighborError):
        map_from_rotations({0: (1, 1), 1: (0, 0)})


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError):
        map_from_rotations({0: (0, 1), 1: (0,)})
    with pytest.raises(SelfLoopError):
        map_from_darts(2, (1, 0, 3, 2), (2, 3, 0, 1), (0, 1, 0, 0))


def test_disconnected_rejected():
    with pytest.raises(DisconnectedError):
        map_from_rotations({0: (1,), 1: (0,), 2: (3,), 3: (2,)})


def test_twin_must_be_involution():
    with pytest.raises(NotInvolutionError):
        map_from_darts(2, (0, 1, 3, 2), (2, 3, 0, 1), (0, 1, 0, 1))
    with pytest.raises(NotInvolutionError):
        map_from_darts(2, (2, 3, 1, 0), (2, 3, 0, 1), (0, 1, 0, 1))


def test_rotation_orbits_must_match_origins():
    # rotation swaps darts across the two vertices
    with pytest.raises(OrbitOriginMismatchError):
        map_from_darts(2, (1, 0, 3, 2), (1, 0, 3, 2), (0, 1, 0, 1))
    # two orbits at one vertex: 4 parallel edges, rotation pairs them 2+2
    twin = (1, 0, 3, 2, 5, 4, 7, 6)
    origin = (0, 1, 0, 1, 0, 1, 0, 1)
    rotation = (2, 3, 0, 1, 6, 7, 4, 5)
    with pytest.raises(OrbitOriginMismatchError):
        map_from_darts(2, twin, rotation, origin)


def test_arbitrary_labels_supported():
    m = map_from_rotations({10: (20, 40), 20: (30, 10), 30: (40, 20), 40: (10, 30)})
    assert m.labels == (10, 20, 30, 40)
    census = trace_faces(m)
    assert census.genus == 0
    assert census.has_face((10, 20, 30, 40))


def test_genus_helper_matches_census():
    m = map_from_rotations(ringel_k44_rotations())
    assert genus(m) == trace_faces(m).genus == 1


def test_empty_input_rejected():
    with pytest.raises(MapError):
        map_from_rotations({})
    with pytest.raises(MapError):
        map_from_rotations({0: ()})
