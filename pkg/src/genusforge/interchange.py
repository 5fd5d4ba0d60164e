"""Road-interchange model on top of combinatorial maps.

An n-way weaving-free interchange is a bipartite multigraph embedding with
a distinguished directed Hamiltonian cycle H bounding a face: white
vertices are the incoming ends of the motorways, black vertices the
outgoing ends, and every driver crosses the junction without changing
lanes exactly when H bounds a face.  The number of bridges needed by the
junction is the genus of the embedding surface.

Lane edits work by edge duplication and removal.  Duplicating an edge
slips a digon face between the copies (genus unchanged); removing a
parallel copy that borders two distinct faces merges them (genus
unchanged).  Iterating the removals reduces any complete interchange to
plain K_{n,n} form on the same surface, where the known genus minimum
decides optimality.
"""

from dataclasses import dataclass

from .construct import l_of_n
from .maps import CombinatorialMap, FaceCensus, map_from_darts, trace_faces


class InterchangeError(ValueError):
    pass


class NotBipartiteError(InterchangeError):
    """Some edge joins two vertices of the same color, or the color counts differ."""


class ColorsDontAlternateError(InterchangeError):
    pass


class HNotAFaceError(InterchangeError):
    pass


class HNotHamiltonianError(InterchangeError):
    pass


class NotAdjacentError(InterchangeError):
    """Lanes are added by duplication, so the endpoints must already be joined."""


class EdgeOnHError(InterchangeError):
    pass


class NoParallelPartnerError(InterchangeError):
    pass


class SameFaceBothSidesError(InterchangeError):
    """Removing an edge with one face on both sides would change the surface."""


class StuckError(InterchangeError):
    """Parallel edges remain but none can be removed without surface surgery."""


class NotCompleteSimpleError(InterchangeError):
    pass


@dataclass(frozen=True)
class OptimalityVerdict:
    bridges: int
    lower_bound: int
    status: str  # "optimal" | "suboptimal" | "unknown"


@dataclass(frozen=True)
class Interchange:
    map: CombinatorialMap
    n: int
    h_darts: tuple[int, ...]
    colors: dict  # vertex label -> "white" | "black"

    @property
    def h_cycle(self) -> tuple[int, ...]:
        return tuple(self.map.origin_label(d) for d in self.h_darts)

    def census(self) -> FaceCensus:
        return trace_faces(self.map)


def h_darts_from_cycle(m: CombinatorialMap, cycle) -> tuple[int, ...]:
    """Dart cycle following consecutive vertices of ``cycle`` (lowest darts)."""
    k = len(cycle)
    return tuple(m.dart_between(cycle[i], cycle[(i + 1) % k])
                 for i in range(k))


def from_embedding(m: CombinatorialMap, h_darts, colors: dict) -> Interchange:
    """Validate the quadruple (graph, H, rotations, surface) as an interchange."""
    h_darts = tuple(h_darts)
    for i, d in enumerate(h_darts):
        if not 0 <= d < m.dart_count:
            raise ValueError(f"dart {d} out of range")
        nxt = h_darts[(i + 1) % len(h_darts)]
        if m.head_label(d) != m.origin_label(nxt):
            raise ValueError(
                f"darts {d} and {nxt} do not chain into a closed walk")
    visited = [m.origin_label(d) for d in h_darts]
    if len(set(visited)) != len(visited) or set(visited) != set(m.labels):
        raise HNotHamiltonianError(
            "the walk must visit every vertex exactly once")
    if set(colors) != set(m.labels) or \
            not all(c in ("white", "black") for c in colors.values()):
        raise ValueError("colors must assign white or black to every vertex")
    for d in h_darts:
        if colors[m.origin_label(d)] == colors[m.head_label(d)]:
            raise ColorsDontAlternateError(
                f"H step {m.origin_label(d)} -> {m.head_label(d)} "
                "joins same-colored vertices")
    whites = sum(1 for c in colors.values() if c == "white")
    if whites * 2 != m.vertex_count:
        raise NotBipartiteError(
            f"{whites} white vs {m.vertex_count - whites} black vertices")
    for d in range(m.dart_count):
        if colors[m.origin_label(d)] == colors[m.head_label(d)]:
            raise NotBipartiteError(
                f"edge {m.origin_label(d)}-{m.head_label(d)} "
                "joins same-colored vertices")
    faces = trace_faces(m)
    if not any(set(face) == set(h_darts) for face in faces.faces):
        raise HNotAFaceError("the H darts do not bound a face")
    return Interchange(map=m, n=m.vertex_count // 2, h_darts=h_darts,
                       colors=dict(colors))


def bridges(interchange: Interchange) -> int:
    return trace_faces(interchange.map).genus


def is_complete(interchange: Interchange) -> bool:
    m = interchange.map
    pairs = {(m.origin_label(d), m.head_label(d)) for d in range(m.dart_count)
             if interchange.colors[m.origin_label(d)] == "white"}
    n = interchange.n
    return len(pairs) == n * n


def _edge_darts_between(m: CombinatorialMap, u, v) -> list[int]:
    return sorted(d for d in range(m.dart_count)
                  if m.origin_label(d) == u and m.head_label(d) == v)


def add_lane(interchange: Interchange, u, v) -> Interchange:
    """Duplicate an existing (u, v) edge, slipping a digon between the copies."""
    m = interchange.map
    out_darts = _edge_darts_between(m, u, v)
    if not out_darts:
        raise NotAdjacentError(f"{u} and {v} are not adjacent")
    # the duplicate displaces the twin of the base dart from its face, so
    # when the edge lies on H the base must be the H dart itself
    h_set = set(interchange.h_darts)
    base = None
    for d in out_darts + [m.twin(d) for d in out_darts]:
        if d in h_set:
            base = d
            break
    if base is None:
        base = out_darts[0]

    old = m.dart_count
    twin = list(m.twin_array) + [old + 1, old]
    rotation = list(m.rotation_array) + [0, 0]
    origin = list(m.origin_array) + [m.origin_array[base],
                                     m.origin_array[m.twin(base)]]
    # insert the new dart right after base at its origin, and the new twin
    # right before base's twin at the head
    rotation[old] = rotation[base]
    rotation[base] = old
    base_twin = m.twin(base)
    pred = base_twin
    while rotation[pred] != base_twin:
        pred = rotation[pred]
    rotation[pred] = old + 1
    rotation[old + 1] = base_twin

    labels = m.labels
    m2 = map_from_darts(m.vertex_count, tuple(twin), tuple(rotation),
                        tuple(origin), labels=labels)
    return Interchange(map=m2, n=interchange.n, h_darts=interchange.h_darts,
                       colors=dict(interchange.colors))


def remove_parallel_edge(interchange: Interchange, dart: int) -> Interchange:
    """Delete the edge of ``dart``, merging the two faces it separates."""
    m = interchange.map
    if not 0 <= dart < m.dart_count:
        raise ValueError(f"dart {dart} out of range")
    d, t = dart, m.twin(dart)
    u, v = m.origin_label(d), m.head_label(d)
    if len(_edge_darts_between(m, u, v)) < 2:
        raise NoParallelPartnerError(f"edge {u}-{v} has no parallel partner")
    if d in interchange.h_darts or t in interchange.h_darts:
        raise EdgeOnHError(f"edge {u}-{v} lies on H")
    face_of = {}
    for face in trace_faces(m).faces:
        for x in face:
            face_of[x] = face
    if face_of[d] is face_of[t]:
        raise SameFaceBothSidesError(
            f"both darts of edge {u}-{v} lie on one face")

    rotation = list(m.rotation_array)
    for gone in (d, t):
        pred = gone
        while rotation[pred] != gone:
            pred = rotation[pred]
        if pred == gone:
            raise SameFaceBothSidesError(
                f"edge {u}-{v} is the last edge at a vertex")
        rotation[pred] = rotation[gone]

    keep = [x for x in range(m.dart_count) if x not in (d, t)]
    rank = {x: i for i, x in enumerate(keep)}
    twin = tuple(rank[m.twin(x)] for x in keep)
    new_rotation = tuple(rank[rotation[x]] for x in keep)
    origin = tuple(m.origin_array[x] for x in keep)
    m2 = map_from_darts(m.vertex_count, twin, new_rotation, origin,
                        labels=m.labels)
    h_darts = tuple(rank[x] for x in interchange.h_darts)
    return Interchange(map=m2, n=interchange.n, h_darts=h_darts,
                       colors=dict(interchange.colors))


def _parallel_candidates(interchange: Interchange) -> list[int]:
    m = interchange.map
    by_pair: dict[tuple, list[int]] = {}
    for d in range(0, m.dart_count):
        u, v = m.origin_label(d), m.head_label(d)
        if interchange.colors[u] == "white":
            by_pair.setdefault((u, v), []).append(d)
    out = []
    for pair_darts in by_pair.values():
        if len(pair_darts) > 1:
            out.extend(pair_darts)
    return sorted(out)


def simplify_to_complete(interchange: Interchange) -> Interchange:
    """Strip parallel edges until the graph is simple K_{n,n}, same surface."""
    if not is_complete(interchange):
        raise ValueError("the interchange is not complete")
    current = interchange
    while True:
        candidates = _parallel_candidates(current)
        if not candidates:
            return current
        for d in candidates:
            try:
                current = remove_parallel_edge(current, d)
                break
            except (EdgeOnHError, SameFaceBothSidesError):
                continue
        else:
            raise StuckError(
                "parallel edges remain but each has one face on both sides")


def optimality_check(interchange: Interchange) -> OptimalityVerdict:
    """Compare the bridge count to the known minimum for simple K_{n,n}."""
    m = interchange.map
    n = interchange.n
    if not is_complete(interchange) or m.edge_count != n * n:
        raise NotCompleteSimpleError(
            "optimality is defined for complete simple interchanges")
    count = bridges(interchange)
    bound = l_of_n(n)
    if n % 2 == 0:
        status = "optimal" if count == bound else "suboptimal"
    elif n in (3, 5):
        known_minimum = {3: 1, 5: 3}[n]
        status = "optimal" if count == known_minimum else "suboptimal"
    else:
        status = "unknown"
    return OptimalityVerdict(bridges=count, lower_bound=bound, status=status)
