"""Genus-minimal embeddings of K_{n,n} with a Hamiltonian face, even n.

Vertices are Z_{2n} with evens and odds as the two parts, and the target
Hamiltonian face is H = (0, 1, ..., 2n-1).  The embedding is assembled from
four quadrangular sub-embeddings:

* the 2n edges of H are partitioned into four classes P_0..P_3 by the
  residue of the head endpoint (with a two-edge adjustment when
  n = 2 mod 4),
* class i spans a complete bipartite graph G_i on the endpoints of its
  arcs; G_i gets the quadrangular embedding of :mod:`genusforge.ringel`
  with part orders chosen so that each arc of P_i lies on a distinguished
  "special" quadrilateral face,
* the four rotation systems are concatenated vertex by vertex, cutting
  every special face open along its two H-arcs.  The cut corners reconnect
  into H itself plus a controlled set of replacement faces, so the face
  count drops by exactly enough to land on genus ceil((n-1)(n-2)/4).

When n = 2 mod 4 the classes have unequal sizes and two of the
sub-embeddings share four vertices; those two are first merged by
:func:`glue_embeddings` along a common quadrilateral face.

Every construction self-verifies by tracing the assembled map and checking
the predicted census before returning.
"""

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .maps import (
    CombinatorialMap,
    FaceCensus,
    _least_rotation,
    map_from_rotations,
    trace_faces,
)
from .ringel import BipartiteLabeling, build_ringel_embedding


class OddNError(ValueError):
    """Odd n: whether the bound is attained is an open question; we refuse."""


class NTooSmallError(ValueError):
    """n below the smallest value the requested structure exists for."""


class WrongResidueError(ValueError):
    """Dispatched into the wrong residue case of the construction."""


class SharedVertexMismatchError(ValueError):
    """Gluing requires the two maps to share exactly the face's vertices."""


class FacesNotOppositeError(ValueError):
    """Gluing requires the same quadrilateral traversed in opposite directions."""


class CensusMismatchError(RuntimeError):
    """Internal self-check failure: the traced census defied the prediction."""


def l_of_n(n: int) -> int:
    """Genus lower bound ceil((n-1)(n-2)/4) for an n-way interchange, n >= 2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return -(-((n - 1) * (n - 2)) // 4)


def _require_even_at_least(n: int, minimum: int) -> None:
    if n % 2:
        raise OddNError(f"n must be even, got {n}")
    if n < minimum:
        raise NTooSmallError(f"n must be at least {minimum}, got {n}")


@dataclass(frozen=True)
class ArcPartition:
    """The 2n arcs (t-1, t) of H split into the classes P_0..P_3."""

    n: int
    parts: tuple[frozenset, frozenset, frozenset, frozenset]

    @property
    def residue(self) -> int:
        return self.n % 4

    def part_of(self, arc: tuple[int, int]) -> int:
        for i, part in enumerate(self.parts):
            if arc in part:
                return i
        raise KeyError(f"{arc} is not an arc of H")


def build_arc_partition(n: int) -> ArcPartition:
    """Split the H-arcs by head residue mod 4; see the module docstring."""
    _require_even_at_least(n, 4)
    nn = 2 * n
    if n % 4 == 0:
        parts = [frozenset(((t - 1) % nn, t) for t in range(nn) if t % 4 == i)
                 for i in range(4)]
    else:
        # arcs are classed by head residue within each half of H; the two
        # arcs joining the halves then migrate from class 0 to class 3 to
        # even up the bipartite blocks
        tilde = [set() for _ in range(4)]
        for t in range(nn):
            i = t % 4 if t < n else (t - n) % 4
            tilde[i].add(((t - 1) % nn, t))
        moved = {(nn - 1, 0), (n - 1, n)}
        tilde[0] -= moved
        tilde[3] |= moved
        parts = [frozenset(p) for p in tilde]
    return ArcPartition(n, tuple(parts))


@dataclass(frozen=True)
class SpecialFaceTable:
    """Prescribed special quadrilaterals (v_{i,2k}, u_{i,2k+1}, v_{i,2k+1}, u_{i,2k}).

    Row i lists, in k order, the special faces of sub-embedding i.  Reading
    the entries off in order defines the part permutations of G_i: entry k
    contributes v-side vertices at positions 2k, 2k+1 and u-side vertices at
    positions 2k+1, 2k of the respective part orders.
    """

    n: int
    rows: tuple[tuple[tuple[int, int, int, int], ...], ...]

    def part_orders(self, i: int) -> BipartiteLabeling:
        """The (u, v) part orders of sub-embedding i encoded by row i."""
        u_seq = []
        v_seq = []
        for a, b, c, d in self.rows[i]:
            v_seq += [a, c]
            u_seq += [d, b]
        return BipartiteLabeling(tuple(u_seq), tuple(v_seq))

    def face_of_vertex(self, i: int) -> dict[int, tuple[int, int, int, int]]:
        return {w: quad for quad in self.rows[i] for w in quad}


def special_face_table(n: int) -> SpecialFaceTable:
    _require_even_at_least(n, 4)
    nn = 2 * n
    rows: list[list[tuple[int, int, int, int]]] = [[] for _ in range(4)]
    if n % 4 == 0:
        for i in range(4):
            for k in range(n // 4):
                if k == 0:
                    quad = (2, 3, nn - 2, nn - 1) if i == 3 else \
                        ((i - 1) % nn, i, n + i - 1, n + i)
                elif i == 0:
                    quad = (4 * k - 1, 4 * k, nn - 4 * k - 1, nn - 4 * k)
                elif i == 1:
                    quad = (4 * k, 4 * k + 1, nn - 4 * k, nn - 4 * k + 1)
                elif i == 2:
                    quad = (4 * k + 1, 4 * k + 2, nn - 4 * k + 1, nn - 4 * k + 2)
                else:
                    quad = (4 * k + 2, 4 * k + 3, nn - 4 * k - 2, nn - 4 * k - 1)
                rows[i].append(tuple(x % nn for x in quad))
    else:
        quarter = (n - 2) // 4
        for k in range(quarter):
            rows[0].append((4 * k + 3, 4 * k + 4, nn - 4 * k - 3, nn - 4 * k - 2))
        for k in range(quarter + 1):
            rows[1].append((4 * k, 4 * k + 1, nn - 4 * k - 2, nn - 4 * k - 1))
        for k in range(quarter):
            rows[2].append((4 * k + 1, 4 * k + 2, nn - 4 * k - 5, nn - 4 * k - 4))
        for k in range(quarter):
            rows[3].append((4 * k + 2, 4 * k + 3, nn - 4 * k - 4, nn - 4 * k - 3))
        rows[3].append((n, nn - 1, 0, n - 1))
    return SpecialFaceTable(n, tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class ConstructionResult:
    """A genus-L(n) map of K_{n,n} on Z_{2n} with H = (0..2n-1) as a face."""

    n: int
    map: CombinatorialMap
    hamiltonian_face: tuple[int, ...]
    genus: int
    named_faces: dict[str, tuple[int, ...]] = field(compare=False)
    census: FaceCensus = field(compare=False)


def _face_aligned_rotation(sub: CombinatorialMap, v: int,
                           face: Sequence[int]) -> list[int]:
    # linearize v's rotation to start at its successor on `face` and end at
    # its predecessor; unique, and well defined because the face forces the
    # successor to follow the predecessor in the rotation
    idx = face.index(v)
    succ = face[(idx + 1) % len(face)]
    pred = face[(idx - 1) % len(face)]
    rot = list(sub.rotation_of(v))
    j = rot.index(succ)
    rot = rot[j:] + rot[:j]
    if rot[-1] != pred:
        raise CensusMismatchError(
            f"face {tuple(face)} does not pass straight through vertex {v}")
    return rot


def _named_new_faces(n: int) -> dict[str, tuple[int, ...]]:
    nn = 2 * n
    named: dict[str, tuple[int, ...]] = {"H": tuple(range(nn))}
    if n == 2:
        return named
    if n % 4 == 0:
        named["C8"] = (0, n - 1, n + 2, 1, n, nn - 1, 2, n + 1)
        for k in range(1, n // 4):
            named[f"F1_{k}"] = (4 * k - 1, nn - 4 * k + 2, 4 * k + 1, nn - 4 * k)
            named[f"F2_{k}"] = (4 * k, nn - 4 * k - 1, 4 * k + 2, nn - 4 * k + 1)
    else:
        for k in range((n - 2) // 4):
            named[f"F1_{k}"] = (4 * k + 1, nn - 4 * k - 2, 4 * k + 3, nn - 4 * k - 4)
            named[f"F2_{k}"] = (4 * k + 2, nn - 4 * k - 5, 4 * k + 4, nn - 4 * k - 3)
    return named


def _verify_and_wrap(n: int, rotations: dict[int, Sequence[int]]) -> ConstructionResult:
    nn = 2 * n
    m = map_from_rotations(rotations)
    census = trace_faces(m)
    target = l_of_n(n)
    if census.genus != target:
        raise CensusMismatchError(
            f"n={n}: traced genus {census.genus}, predicted {target}")
    if n == 2:
        expected_lengths = (4, 4)
    elif n % 4 == 0:
        expected_lengths = (nn, 8) + (4,) * (n * (n - 1) // 2 - 2)
    else:
        expected_lengths = (nn,) + (4,) * ((n * n - n) // 2)
    if census.lengths != expected_lengths:
        raise CensusMismatchError(
            f"n={n}: face lengths {census.lengths[:6]}..., predicted "
            f"{expected_lengths[:6]}...")
    named = _named_new_faces(n)
    for name, cycle in named.items():
        if not census.has_face(cycle):
            raise CensusMismatchError(f"n={n}: expected face {name}={cycle} absent")
    return ConstructionResult(n=n, map=m, hamiltonian_face=tuple(range(nn)),
                              genus=census.genus, named_faces=named, census=census)


def construct_mod0(n: int) -> ConstructionResult:
    """The n = 0 mod 4 case: concatenate the four sub-rotations directly."""
    _require_even_at_least(n, 4)
    if n % 4 != 0:
        raise WrongResidueError(f"n must be 0 mod 4, got {n}")
    table = special_face_table(n)
    subs = [build_ringel_embedding(table.part_orders(i)) for i in range(4)]
    face_of = [table.face_of_vertex(i) for i in range(4)]

    rotations: dict[int, list[int]] = {}
    for v in range(2 * n):
        i_u, i_v = v % 4, (v + 1) % 4
        # v sits on the u-side of sub i_u (rotation ends at v-1) and on the
        # v-side of sub i_v (rotation starts at v+1)
        first = _face_aligned_rotation(subs[i_u], v, face_of[i_u][v])
        second = _face_aligned_rotation(subs[i_v], v, face_of[i_v][v])
        rotations[v] = first + second
    return _verify_and_wrap(n, rotations)


def glue_embeddings(r1: CombinatorialMap, r3: CombinatorialMap,
                    f: Sequence[int], f_prime: Sequence[int]) -> CombinatorialMap:
    """Merge two maps sharing exactly the vertices (and edges) of one face.

    ``f`` must be a face of ``r3`` and ``f_prime`` a face of ``r1`` with the
    same vertices traversed in the opposite direction.  The result keeps one
    copy of each shared edge; its faces are all faces of both maps except
    the two glued ones.
    """
    f = tuple(f)
    f_prime = tuple(f_prime)
    shared = set(r1.labels) & set(r3.labels)
    if set(f) != shared or len(set(f)) != len(f):
        raise SharedVertexMismatchError(
            f"shared vertices {sorted(shared)} must be exactly the face {f}")
    if _least_rotation(f_prime) != _least_rotation(tuple(reversed(f))):
        raise FacesNotOppositeError(
            f"{f_prime} is not {f} traversed in the opposite direction")
    if not trace_faces(r3).has_face(f):
        raise FacesNotOppositeError(f"{f} is not a face of the second map")
    if not trace_faces(r1).has_face(f_prime):
        raise FacesNotOppositeError(f"{f_prime} is not a face of the first map")

    rotations: dict[int, Sequence[int]] = {}
    for m in (r1, r3):
        for v in m.labels:
            if v not in shared:
                rotations[v] = m.rotation_of(v)
    for v in shared:
        keep = _face_aligned_rotation(r1, v, f_prime)
        other = _face_aligned_rotation(r3, v, f)
        # opposite traversal makes the endpoints agree crosswise; drop the
        # duplicated shared edges from the second rotation
        if keep[0] != other[-1] or keep[-1] != other[0]:
            raise FacesNotOppositeError(
                f"rotations at shared vertex {v} do not interlock")
        rotations[v] = keep + other[1:-1]
    return map_from_rotations(rotations)


def construct_mod2(n: int) -> ConstructionResult:
    """The n = 2 mod 4 case: glue sub-embeddings 1 and 3, then concatenate."""
    _require_even_at_least(n, 6)
    if n % 4 != 2:
        raise WrongResidueError(f"n must be 2 mod 4, got {n}")
    nn = 2 * n
    table = special_face_table(n)
    orders = [table.part_orders(i) for i in range(4)]
    subs = [build_ringel_embedding(o) for o in orders]
    face_of = [table.face_of_vertex(i) for i in range(4)]

    # the extra special face of sub 3 and its mirror image inside sub 1
    f = table.rows[3][-1]
    u1, v1 = orders[1].u_labels, orders[1].v_labels
    f_prime = (u1[-1], v1[0], u1[0], v1[-1])
    assert f == (n, nn - 1, 0, n - 1) and f_prime == (n - 1, 0, nn - 1, n)
    shared = set(f)
    glued = glue_embeddings(subs[1], subs[3], f, f_prime)

    home = {}
    for i in (0, 2):
        for w in orders[i].u_labels + orders[i].v_labels:
            home[w] = i
    side13 = {}
    for i in (1, 3):
        for w in orders[i].u_labels + orders[i].v_labels:
            if w not in shared:
                side13[w] = i

    rotations: dict[int, Sequence[int]] = {}
    for v in range(nn):
        if v in shared:
            rotations[v] = glued.rotation_of(v)
        else:
            i_a, i_b = home[v], side13[v]
            first = _face_aligned_rotation(subs[i_a], v, face_of[i_a][v])
            second = _face_aligned_rotation(subs[i_b], v, face_of[i_b][v])
            rotations[v] = first + second
    return _verify_and_wrap(n, rotations)


def construct(n: int) -> ConstructionResult:
    """Embed K_{n,n} with genus l_of_n(n) and H = (0..2n-1) as a face.

    Only even n: for odd n no embedding meeting the bound is known (nor is
    one ruled out), so odd input is refused rather than approximated.
    """
    if n % 2:
        raise OddNError(
            f"n={n}: only even n is supported; whether the bound is attained "
            "for odd n is an open question")
    if n < 2:
        raise NTooSmallError(f"n must be at least 2, got {n}")
    if n == 2:
        # planar 4-cycle: both faces are Hamiltonian
        return _verify_and_wrap(2, {0: (3, 1), 1: (0, 2), 2: (1, 3), 3: (2, 0)})
    return construct_mod0(n) if n % 4 == 0 else construct_mod2(n)


@dataclass(frozen=True)
class ChordDiagram:
    """Perfect matching on the arcs of H induced by the special faces.

    Each special face carries exactly two H-arcs; matching those pairs and
    drawing them as chords between arc midpoints on the H circle gives a
    compact picture of the construction.  Tracing the faces of that circle-
    with-chords map reproduces exactly the replacement faces the
    construction creates (H, the octagon and the F quadrilaterals for
    n = 0 mod 4; H, the F quadrilaterals and the glued-away face for
    n = 2 mod 4).
    """

    n: int
    pairs: tuple[tuple[tuple[int, int], tuple[int, int], int], ...]
    lost_face: tuple[int, ...] | None

    def partner(self, arc: tuple[int, int]) -> tuple[int, int]:
        for a, b, _ in self.pairs:
            if arc == a:
                return b
            if arc == b:
                return a
        raise KeyError(f"{arc} is not an arc of H")

    def part_index(self, arc: tuple[int, int]) -> int:
        for a, b, i in self.pairs:
            if arc in (a, b):
                return i
        raise KeyError(f"{arc} is not an arc of H")

    def traced_faces(self) -> tuple[tuple[int, ...], ...]:
        """Faces of the circle-with-chords map, midpoints elided."""
        nn = 2 * self.n
        # midpoint of arc (t-1, t) gets label nn + t
        rotations: dict[int, tuple[int, ...]] = {}
        for t in range(nn):
            rotations[t] = (nn + t, nn + (t + 1) % nn)
        for a, b, _ in self.pairs:
            for (arc, other) in ((a, b), (b, a)):
                t = arc[1]
                # clockwise at a midpoint on the circle: onward along the
                # circle, then the chord into the disk, then back
                rotations[nn + t] = (t, nn + other[1], (t - 1) % nn)
        census = trace_faces(map_from_rotations(rotations))
        cycles = []
        for face in census.vertex_faces:
            reduced = tuple(w for w in face if w < nn)
            cycles.append(_least_rotation(reduced))
        return tuple(cycles)


def chord_diagram(n: int) -> ChordDiagram:
    _require_even_at_least(n, 4)
    partition = build_arc_partition(n)
    table = special_face_table(n)
    pairs = []
    for i in range(4):
        for quad in table.rows[i]:
            arcs = [(quad[j], quad[(j + 1) % 4]) for j in range(4)]
            on_h = [arc for arc in arcs if arc in partition.parts[i]]
            if len(on_h) != 2:
                raise CensusMismatchError(
                    f"special face {quad} should carry exactly two arcs of P_{i}")
            pairs.append((on_h[0], on_h[1], i))
    lost = table.rows[3][-1] if n % 4 == 2 else None
    return ChordDiagram(n, tuple(pairs), lost)
