"""Quadrangular embeddings of K_{n,m} for even part sizes.

The rotation system below embeds the complete bipartite graph on parts
``u_0..u_{m-1}`` and ``v_0..v_{n-1}`` with nm/2 quadrilateral faces, which
meets the genus lower bound ceil((n-2)(m-2)/4):

* even-indexed u vertices list the v's in descending index order,
* odd-indexed u vertices list them ascending,
* even-indexed v vertices list the u's ascending,
* odd-indexed v vertices list them descending.

For equal part sizes the face set contains two distinguished families of
vertex-disjoint quadrilaterals that each cover every vertex once; the
Hamiltonian-face construction consumes those families, so part labels are
injected rather than fixed.
"""

from dataclasses import dataclass
from typing import Literal, Sequence

from .maps import CombinatorialMap, MapError, _least_rotation, map_from_rotations


class OddPartSizeError(MapError):
    """Both part sizes must be even for the quadrangular embedding."""


class PartsNotEqualError(MapError):
    """The special face families exist only for equal part sizes."""


def lower_bound_lnm(n: int, m: int) -> int:
    """Genus lower bound ceil((n-2)(m-2)/4) for K_{n,m}, n, m >= 1."""
    if n < 1 or m < 1:
        raise ValueError("part sizes must be at least 1")
    return -(-((n - 2) * (m - 2)) // 4)


@dataclass(frozen=True)
class BipartiteLabeling:
    """Vertex labels for the two parts, in the order the rotations use."""

    u_labels: tuple[int, ...]
    v_labels: tuple[int, ...]

    def __post_init__(self):
        u, v = tuple(self.u_labels), tuple(self.v_labels)
        object.__setattr__(self, "u_labels", u)
        object.__setattr__(self, "v_labels", v)
        if len(set(u)) != len(u) or len(set(v)) != len(v) or set(u) & set(v):
            raise MapError("part labels must be duplicate-free and disjoint")

    @property
    def m(self) -> int:
        return len(self.u_labels)

    @property
    def n(self) -> int:
        return len(self.v_labels)


def identity_labeling(n: int, m: int | None = None) -> BipartiteLabeling:
    """u_s -> s and v_t -> m + t, the plain choice for standalone use."""
    if m is None:
        m = n
    return BipartiteLabeling(tuple(range(m)), tuple(range(m, m + n)))


def build_ringel_embedding(labeling: BipartiteLabeling) -> CombinatorialMap:
    """Minimum-genus map of K_{n,m} (even n, m) with all faces quadrilateral."""
    m, n = labeling.m, labeling.n
    if m % 2 or n % 2 or m == 0 or n == 0:
        raise OddPartSizeError(f"part sizes must be positive and even, got {m} and {n}")
    u, v = labeling.u_labels, labeling.v_labels
    rotations: dict[int, tuple[int, ...]] = {}
    for s in range(m):
        rotations[u[s]] = v[::-1] if s % 2 == 0 else v
    for t in range(n):
        rotations[v[t]] = u if t % 2 == 0 else u[::-1]
    return map_from_rotations(rotations)


@dataclass(frozen=True)
class SpecialFaceFamily:
    """One of the two families of disjoint quadrilaterals covering all vertices.

    ``kind`` is "F" for the even-offset family (v_s, u_{s+1}, v_{s+1}, u_s)
    over even s, "F'" for (u_s, v_{s+1}, u_{s+1}, v_s) over odd s.  Faces are
    stored rotated to start at their smallest vertex so equality up to cyclic
    rotation is tuple equality.
    """

    kind: Literal["F", "F'"]
    faces: tuple[tuple[int, int, int, int], ...]


def special_faces(labeling: BipartiteLabeling,
                  kind: Literal["F", "F'"]) -> SpecialFaceFamily:
    if labeling.m != labeling.n:
        raise PartsNotEqualError(
            f"special families need equal parts, got {labeling.m} and {labeling.n}")
    if kind not in ("F", "F'"):
        raise ValueError(f"kind must be 'F' or \"F'\", got {kind!r}")
    n = labeling.n
    u, v = labeling.u_labels, labeling.v_labels
    faces = []
    if kind == "F":
        for s in range(0, n, 2):
            faces.append((v[s], u[(s + 1) % n], v[(s + 1) % n], u[s]))
    else:
        for s in range(1, n, 2):
            faces.append((u[s], v[(s + 1) % n], u[(s + 1) % n], v[s]))
    return SpecialFaceFamily(kind, tuple(_least_rotation(f) for f in faces))
