"""Combinatorial maps: embeddings of graphs in closed oriented surfaces.

A map is stored as a set of darts (directed half-edges), numbered densely
``0..2e-1``.  Three ingredients describe the embedding:

* ``twin``   -- fixed-point-free involution pairing the two darts of each edge,
* ``rotation`` -- permutation sending each dart to the next dart in clockwise
  order around its origin vertex,
* ``origin`` -- the vertex each dart leaves from.

Faces are traced with the successor convention: after arriving at a vertex
along dart ``d``, the face continues with ``rotation(twin(d))``, the dart
immediately after the incoming direction in the clockwise order at the head
vertex.  The orbits of that composite permutation are the face boundaries,
and Euler's formula ``v - e + f = 2 - 2g`` gives the genus of the surface
the rotation system describes.

Vertices carry external integer labels (by default ``0..v-1``); all reported
rotations and face cycles use labels, so maps built on label subsets such as
``{3, 7, 11, 15}`` compose cleanly.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


class MapError(ValueError):
    """Base class for invalid rotation-system input."""


class AsymmetricAdjacencyError(MapError):
    """A vertex lists a neighbour that does not list it back."""


class DuplicateNeighborError(MapError):
    """A rotation lists the same neighbour twice (parallel edges need darts)."""


class SelfLoopError(MapError):
    """Loops are never allowed in this package."""


class DisconnectedError(MapError):
    """The underlying graph is not connected."""


class NotInvolutionError(MapError):
    """The twin pairing is not a fixed-point-free involution."""


class OrbitOriginMismatchError(MapError):
    """Rotation orbits do not match the darts sharing an origin."""


class NegativeGenusError(MapError):
    """Euler characteristic exceeded 2; impossible for a valid map."""


def _least_rotation(seq: tuple) -> tuple:
    # lexicographically minimal cyclic rotation; direction is preserved
    best = seq
    for i in range(1, len(seq)):
        cand = seq[i:] + seq[:i]
        if cand < best:
            best = cand
    return best


class CombinatorialMap:
    """Immutable dart-based embedding.

    Use :func:`map_from_rotations` (simple graphs, adjacency lists) or
    :func:`map_from_darts` (multigraphs, explicit dart arrays) instead of
    calling the constructor with hand-rolled arrays.
    """

    __slots__ = ("_rotation", "_twin", "_origin", "_labels", "_vertex_count",
                 "_darts_at", "_label_index")

    def __init__(self, vertex_count: int, twin: Sequence[int],
                 rotation: Sequence[int], origin: Sequence[int],
                 labels: Sequence[int] | None = None):
        twin = tuple(twin)
        rotation = tuple(rotation)
        origin = tuple(origin)
        n_darts = len(twin)
        if len(rotation) != n_darts or len(origin) != n_darts:
            raise MapError("twin, rotation and origin must have equal length")
        if n_darts == 0 or n_darts % 2:
            raise MapError("a map needs a positive even number of darts")
        if vertex_count <= 0:
            raise MapError("vertex_count must be positive")

        for d, t in enumerate(twin):
            if not 0 <= t < n_darts or t == d or twin[t] != d:
                raise NotInvolutionError(
                    f"twin is not a fixed-point-free involution at dart {d}")
        for d, v in enumerate(origin):
            if not 0 <= v < vertex_count:
                raise MapError(f"dart {d} has origin {v} out of range")
            if origin[twin[d]] == v:
                raise SelfLoopError(f"darts {d} and {twin[d]} form a loop at vertex {v}")

        seen = [False] * n_darts
        for d, s in enumerate(rotation):
            if not 0 <= s < n_darts or seen[s]:
                raise MapError("rotation is not a permutation of the darts")
            seen[s] = True

        # each vertex's darts must form a single rotation orbit
        darts_at: list[tuple[int, ...]] = []
        orbit_seen = [False] * n_darts
        counts = [0] * vertex_count
        for d in range(n_darts):
            counts[origin[d]] += 1
        for v in range(vertex_count):
            if counts[v] == 0:
                raise DisconnectedError(f"vertex {v} has no darts")
        first_at = [-1] * vertex_count
        for d in range(n_darts):
            if first_at[origin[d]] < 0:
                first_at[origin[d]] = d
        for v in range(vertex_count):
            cycle = []
            d = first_at[v]
            while not orbit_seen[d]:
                if origin[d] != v:
                    raise OrbitOriginMismatchError(
                        f"rotation orbit of dart {first_at[v]} leaves vertex {v}")
                orbit_seen[d] = True
                cycle.append(d)
                d = rotation[d]
            if d != first_at[v] or len(cycle) != counts[v]:
                raise OrbitOriginMismatchError(
                    f"darts at vertex {v} do not form a single rotation orbit")
            darts_at.append(tuple(cycle))

        if labels is None:
            labels = tuple(range(vertex_count))
        else:
            labels = tuple(labels)
            if len(labels) != vertex_count or len(set(labels)) != vertex_count:
                raise MapError("labels must be distinct, one per vertex")

        self._rotation = rotation
        self._twin = twin
        self._origin = origin
        self._labels = labels
        self._vertex_count = vertex_count
        self._darts_at = tuple(darts_at)
        self._label_index = {lab: v for v, lab in enumerate(labels)}

        self._check_connected()

    def _check_connected(self) -> None:
        reached = [False] * self._vertex_count
        reached[0] = True
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for d in self._darts_at[v]:
                w = self._origin[self._twin[d]]
                if not reached[w]:
                    reached[w] = True
                    queue.append(w)
        if not all(reached):
            raise DisconnectedError("the underlying graph is not connected")

    # -- basic accessors ----------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def dart_count(self) -> int:
        return len(self._twin)

    @property
    def edge_count(self) -> int:
        return len(self._twin) // 2

    @property
    def labels(self) -> tuple[int, ...]:
        return self._labels

    @property
    def twin_array(self) -> tuple[int, ...]:
        return self._twin

    @property
    def rotation_array(self) -> tuple[int, ...]:
        return self._rotation

    @property
    def origin_array(self) -> tuple[int, ...]:
        return self._origin

    def twin(self, dart: int) -> int:
        return self._twin[dart]

    def next_dart(self, dart: int) -> int:
        """Next dart clockwise around the origin of ``dart``."""
        return self._rotation[dart]

    def origin_label(self, dart: int) -> int:
        return self._labels[self._origin[dart]]

    def head_label(self, dart: int) -> int:
        return self._labels[self._origin[self._twin[dart]]]

    def vertex_of_label(self, label: int) -> int:
        return self._label_index[label]

    def darts_at_label(self, label: int) -> tuple[int, ...]:
        """Darts leaving ``label`` in clockwise order (starts at lowest dart id)."""
        return self._darts_at[self._label_index[label]]

    def rotation_of(self, label: int) -> tuple[int, ...]:
        """Neighbour labels of ``label`` in clockwise order."""
        return tuple(self.head_label(d) for d in self.darts_at_label(label))

    def dart_between(self, tail: int, head: int) -> int:
        """Lowest dart from label ``tail`` to label ``head``."""
        for d in self.darts_at_label(tail):
            if self.head_label(d) == head:
                return d
        raise MapError(f"no dart from {tail} to {head}")

    def vertex_rotations(self) -> dict[int, tuple[int, ...]]:
        """All rotations keyed by label, e.g. for serialization or surgery."""
        return {lab: self.rotation_of(lab) for lab in self._labels}

    def __repr__(self) -> str:
        return (f"CombinatorialMap(v={self._vertex_count}, "
                f"e={self.edge_count})")


@dataclass(frozen=True)
class FaceCensus:
    """Faces of a map: dart orbits of the tracing permutation.

    ``faces`` holds dart cycles in trace order (each starting at its lowest
    dart); ``vertex_faces`` holds the same cycles as label sequences, rotated
    to their lexicographically smallest form so equality up to cyclic rotation
    is plain tuple equality.
    """

    v: int
    e: int
    faces: tuple[tuple[int, ...], ...]
    vertex_faces: tuple[tuple[int, ...], ...]
    genus: int
    _face_set: frozenset = field(repr=False)

    @property
    def f(self) -> int:
        return len(self.faces)

    @property
    def lengths(self) -> tuple[int, ...]:
        """Face length multiset, largest first."""
        return tuple(sorted((len(c) for c in self.faces), reverse=True))

    def has_face(self, cycle: Iterable[int]) -> bool:
        """Is ``cycle`` (a label sequence, direction significant) a face?"""
        return _least_rotation(tuple(cycle)) in self._face_set


def trace_faces(m: CombinatorialMap) -> FaceCensus:
    """Trace all face boundaries of ``m``.

    Every dart lies on exactly one face; the sum of face lengths is the dart
    count.  Deterministic: faces are discovered in increasing order of their
    smallest dart.
    """
    rotation, twin = m.rotation_array, m.twin_array
    n_darts = m.dart_count
    visited = bytearray(n_darts)
    faces: list[tuple[int, ...]] = []
    for start in range(n_darts):
        if visited[start]:
            continue
        cycle = []
        d = start
        while not visited[d]:
            visited[d] = 1
            cycle.append(d)
            d = rotation[twin[d]]
        faces.append(tuple(cycle))

    f = len(faces)
    euler = m.vertex_count - m.edge_count + f
    if euler % 2:
        raise MapError("odd Euler characteristic; the map arrays are corrupt")
    g = (2 - euler) // 2
    if g < 0:
        raise NegativeGenusError(f"Euler characteristic {euler} exceeds 2")

    labels = m.labels
    origin = m.origin_array
    vertex_faces = tuple(
        _least_rotation(tuple(labels[origin[d]] for d in cyc)) for cyc in faces)
    return FaceCensus(v=m.vertex_count, e=m.edge_count, faces=faces,
                      vertex_faces=vertex_faces, genus=g,
                      _face_set=frozenset(vertex_faces))


def genus(m: CombinatorialMap) -> int:
    """Genus of the closed oriented surface described by ``m``."""
    return trace_faces(m).genus


def map_from_rotations(rotations: Mapping[int, Sequence[int]]) -> CombinatorialMap:
    """Build a map of a simple graph from clockwise neighbour lists.

    Keys are vertex labels; each value lists that vertex's neighbours in
    clockwise order.  Adjacency must be symmetric and loop-free, with no
    neighbour repeated, and the graph must be connected.
    """
    labels = sorted(rotations)
    label_set = set(labels)
    neighbor_sets = {v: set(rotations[v]) for v in labels}
    for v in labels:
        seen = set()
        for w in rotations[v]:
            if w == v:
                raise SelfLoopError(f"vertex {v} lists itself")
            if w in seen:
                raise DuplicateNeighborError(f"vertex {v} lists {w} twice")
            seen.add(w)
            if w not in label_set or v not in neighbor_sets[w]:
                raise AsymmetricAdjacencyError(
                    f"vertex {v} lists {w} but {w} does not list {v}")

    index = {lab: i for i, lab in enumerate(labels)}
    edges = sorted({(index[v], index[w])
                    for v in labels for w in neighbor_sets[v]
                    if index[v] < index[w]})
    if not edges:
        raise MapError("a map needs at least one edge")
    dart_of = {}
    for i, (a, b) in enumerate(edges):
        dart_of[a, b] = 2 * i
        dart_of[b, a] = 2 * i + 1

    n_darts = 2 * len(edges)
    twin = [0] * n_darts
    rotation = [0] * n_darts
    origin = [0] * n_darts
    for i in range(len(edges)):
        twin[2 * i], twin[2 * i + 1] = 2 * i + 1, 2 * i
        a, b = edges[i]
        origin[2 * i], origin[2 * i + 1] = a, b
    for v in labels:
        ring = [dart_of[index[v], index[w]] for w in rotations[v]]
        for j, d in enumerate(ring):
            rotation[d] = ring[(j + 1) % len(ring)]

    return CombinatorialMap(len(labels), twin, rotation, origin, labels=labels)


def map_from_darts(vertex_count: int, twin: Sequence[int],
                   rotation: Sequence[int], origin: Sequence[int],
                   labels: Sequence[int] | None = None) -> CombinatorialMap:
    """Build a map (multigraphs allowed, loops not) from explicit dart arrays."""
    return CombinatorialMap(vertex_count, twin, rotation, origin, labels=labels)


def reverse_orientation(m: CombinatorialMap) -> CombinatorialMap:
    """Mirror image: invert every rotation.  Face lengths and genus survive,
    each face boundary reverses."""
    inverse = [0] * m.dart_count
    for d, s in enumerate(m.rotation_array):
        inverse[s] = d
    return CombinatorialMap(m.vertex_count, m.twin_array, inverse,
                            m.origin_array, labels=m.labels)
