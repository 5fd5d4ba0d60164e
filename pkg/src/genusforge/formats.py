"""Rotation-system file format and machine-readable report documents.

A rotation file is line oriented:

    rot 1 <vertexCount>
    0: 1 3 7 5
    1: 2 4 0 6
    ...

One line per vertex gives its clockwise neighbor order.  ``#`` starts a
comment, blank lines are skipped.  A neighbor may repeat when parallel
lanes exist; the repeats pair up nested (first occurrence with the
partner's last), which is exactly the shape lane insertion produces.
Self-loops are not representable.  Serialization is canonical (vertices
ascending, each rotation cut at its lexicographically least point) so
equal maps produce byte-identical files; maps whose parallel edges
interleave instead of nesting are refused rather than silently altered.
"""

import json

from .maps import (
    CombinatorialMap,
    FaceCensus,
    _least_rotation,
    map_from_darts,
    map_from_rotations,
)

SCHEMA_VERSION = 1


class RotationFileError(ValueError):
    """Parse or validation failure, carrying the 1-based source line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_rotation_file(text: str) -> dict[int, tuple[int, ...]]:
    rotations: dict[int, tuple[int, ...]] = {}
    lines_of: dict[int, int] = {}
    vertex_count = None
    header_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if vertex_count is None:
            fields = line.split()
            if len(fields) != 3 or fields[0] != "rot":
                raise RotationFileError(
                    lineno, "expected header 'rot 1 <vertexCount>'")
            if fields[1] != "1":
                raise RotationFileError(
                    lineno, f"unsupported format version {fields[1]!r}")
            try:
                vertex_count = int(fields[2])
            except ValueError:
                raise RotationFileError(
                    lineno, f"vertex count {fields[2]!r} is not an integer")
            if vertex_count < 1:
                raise RotationFileError(lineno, "vertex count must be positive")
            header_line = lineno
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise RotationFileError(lineno, "expected '<vertex>: neighbors...'")
        try:
            v = int(head)
        except ValueError:
            raise RotationFileError(lineno, f"vertex {head.strip()!r} is not an integer")
        if v in rotations:
            raise RotationFileError(lineno, f"vertex {v} listed twice")
        try:
            neighbors = tuple(int(w) for w in rest.split())
        except ValueError:
            raise RotationFileError(lineno, "neighbors must be integers")
        if not neighbors:
            raise RotationFileError(lineno, f"vertex {v} has no neighbors")
        if v in neighbors:
            raise RotationFileError(lineno, f"vertex {v} lists itself")
        rotations[v] = neighbors
        lines_of[v] = lineno
    if vertex_count is None:
        raise RotationFileError(1, "empty file: missing 'rot 1' header")
    if len(rotations) != vertex_count or \
            set(rotations) != set(range(vertex_count)):
        raise RotationFileError(
            header_line,
            f"header promises vertices 0..{vertex_count - 1}, "
            f"found {sorted(rotations)}")
    for v, neighbors in rotations.items():
        for w in set(neighbors):
            if w not in rotations:
                raise RotationFileError(
                    lines_of[v], f"vertex {v} lists unknown vertex {w}")
            if v not in rotations[w]:
                raise RotationFileError(
                    lines_of[v],
                    f"vertex {v} lists {w} but {w} does not list {v} back")
            if neighbors.count(w) != rotations[w].count(v):
                raise RotationFileError(
                    lines_of[v],
                    f"vertex {v} lists {w} {neighbors.count(w)} times but "
                    f"{w} lists {v} {rotations[w].count(v)} times")
    return rotations


def _nested_pairing_map(rotations) -> CombinatorialMap:
    """Multigraph map with parallel edges paired first-to-last.

    Each vertex's neighbor word is cut at its least rotation; the k-th
    dart toward a neighbor twins with the k-th-from-last dart back, so
    parallel bundles nest the way repeated lane insertion stacks them.
    """
    words = {v: _least_rotation(tuple(rotations[v])) for v in rotations}
    first_dart = {}
    origin = []
    for v in sorted(words):
        first_dart[v] = len(origin)
        origin.extend([v] * len(words[v]))
    occurrences: dict[tuple[int, int], list[int]] = {}
    for v in sorted(words):
        for j, w in enumerate(words[v]):
            occurrences.setdefault((v, w), []).append(first_dart[v] + j)
    twin = [0] * len(origin)
    for (v, w), toward in occurrences.items():
        if v > w:
            continue
        back = occurrences[w, v]
        for k, d in enumerate(toward):
            twin[d] = back[len(back) - 1 - k]
            twin[back[len(back) - 1 - k]] = d
    rotation = [0] * len(origin)
    for v in sorted(words):
        size = len(words[v])
        for j in range(size):
            rotation[first_dart[v] + j] = first_dart[v] + (j + 1) % size
    return map_from_darts(len(words), twin, rotation, origin,
                          labels=sorted(words))


def map_from_rotation_file(text: str) -> CombinatorialMap:
    rotations = parse_rotation_file(text)
    if all(len(set(rot)) == len(rot) for rot in rotations.values()):
        return map_from_rotations(rotations)
    return _nested_pairing_map(rotations)


def _pairing_positions(m: CombinatorialMap) -> set:
    """Twin structure as pairs of (vertex, index-in-least-cut-rotation)."""
    position = {}
    for v in m.labels:
        seq = m.darts_at_label(v)
        word = tuple(m.head_label(d) for d in seq)
        best = _least_rotation(word)
        r = next(i for i in range(len(seq)) if word[i:] + word[:i] == best)
        for j, d in enumerate(seq[r:] + seq[:r]):
            position[d] = (v, j)
    return {(position[d], position[m.twin(d)]) for d in range(m.dart_count)}


def serialize_rotation_file(source) -> str:
    """Canonical text form of a map or label->rotation mapping."""
    if isinstance(source, CombinatorialMap):
        rotations = {v: source.rotation_of(v) for v in source.labels}
        if any(len(set(rot)) != len(rot) for rot in rotations.values()):
            rebuilt = _nested_pairing_map(rotations)
            if _pairing_positions(source) != _pairing_positions(rebuilt):
                raise ValueError(
                    "parallel edges are paired in a way the rotation file "
                    "format cannot express")
    else:
        rotations = {v: tuple(rot) for v, rot in source.items()}
    lines = [f"rot 1 {len(rotations)}"]
    for v in sorted(rotations):
        word = _least_rotation(tuple(rotations[v]))
        lines.append(f"{v}: " + " ".join(map(str, word)))
    return "\n".join(lines) + "\n"


def census_report(census: FaceCensus, named_faces=None) -> dict:
    """CensusReport document; deterministic, no timing (that goes to stderr)."""
    report = {
        "schema": SCHEMA_VERSION,
        "n": census.v // 2 if census.v % 2 == 0 else None,
        "v": census.v,
        "e": census.e,
        "f": census.f,
        "genus": census.genus,
        "faces": [list(face) for face in census.vertex_faces],
    }
    if named_faces:
        report["namedFaces"] = {name: list(cycle)
                                for name, cycle in named_faces.items()}
    return report


def search_report(report, representative_files) -> dict:
    """SearchReport document; elapsed goes to stderr, not here."""
    doc = {
        "schema": SCHEMA_VERSION,
        "n": report.n,
        "mode": report.mode,
        "minGenusFound": report.min_genus_found,
        "candidatesExamined": report.candidates_examined,
        "success": report.success,
        "representatives": list(representative_files),
    }
    if report.iso_class_count is not None:
        doc["isoClassCount"] = report.iso_class_count
    if report.seed is not None:
        doc["seed"] = report.seed
        doc["budget"] = report.budget
        doc["workers"] = report.workers
    return doc


def dump_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"
