"""Search over rotation systems of K_{n,n} forced to keep H as a face.

Vertices are Z_{2n} (evens and odds as the parts) and every candidate pins
v+1 immediately after v-1 in each rotation, which makes H = (0..2n-1) a
face of the traced map by construction.  A candidate is therefore just an
ordering of the remaining n-2 neighbors per vertex, giving a space of
((n-2)!)^{2n} rotation systems.

Exhaustive search enumerates that space with a vectorized tracer: batches
of candidates become arrays of dart successors, the face permutation is a
column gather, and orbits are counted by pointer-doubling minimum-label
propagation.  Randomized search does restarts plus steepest-ascent hill
climbing on the face count, with adjacent transpositions of one vertex's
free ordering as the move set.

Minimum-genus hits are deduplicated by :func:`canonical_form`, the minimum
serialization over the symmetry group of the labeled Hamiltonian cycle:
all label shifts, and all label reflections combined with orientation
reversal (4n elements).
"""

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .construct import ConstructionResult, l_of_n
from .maps import CombinatorialMap, map_from_rotations, trace_faces


class SpaceTooLargeError(ValueError):
    """Full enumeration requested for a space above the configured limit."""


class NoHamiltonianFaceError(ValueError):
    """The map does not have H = (0..2n-1) as a face."""


def candidate_space_size(n: int) -> int:
    if n < 2:
        raise ValueError("n must be at least 2")
    return math.factorial(n - 2) ** (2 * n)


def free_neighbors(n: int, v: int) -> tuple[int, ...]:
    """Opposite-parity vertices other than v-1 and v+1, ascending."""
    nn = 2 * n
    banned = {(v - 1) % nn, (v + 1) % nn}
    return tuple(w for w in range((v + 1) % 2, nn, 2) if w not in banned)


@dataclass(frozen=True)
class HamConstrainedRotation:
    """One candidate: per-vertex orderings of the free neighbors."""

    n: int
    free: tuple[tuple[int, ...], ...]

    def rotations(self) -> dict[int, tuple[int, ...]]:
        nn = 2 * self.n
        return {v: ((v - 1) % nn, (v + 1) % nn) + self.free[v]
                for v in range(nn)}

    def to_map(self) -> CombinatorialMap:
        return map_from_rotations(self.rotations())


def enumerate_candidates(n: int, limit: int | None = None):
    """Yield every candidate once, lexicographic in the free orderings."""
    size = candidate_space_size(n)
    if limit is not None and size > limit:
        raise SpaceTooLargeError(
            f"n={n}: {size} candidates exceed the limit of {limit}")
    pools = [sorted(itertools.permutations(free_neighbors(n, v)))
             for v in range(2 * n)]
    for combo in itertools.product(*pools):
        yield HamConstrainedRotation(n, combo)


@dataclass(frozen=True)
class SearchReport:
    n: int
    mode: str
    min_genus_found: int
    candidates_examined: int
    representatives: tuple[bytes, ...]
    iso_class_count: int | None = None
    seed: int | None = None
    budget: int | None = None
    workers: int | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def success(self) -> bool:
        return self.min_genus_found == l_of_n(self.n)


# ---------------------------------------------------------------------------
# canonical forms

def canonical_form(m: CombinatorialMap | ConstructionResult) -> bytes:
    """Minimum serialization over the Hamiltonian-cycle symmetry group.

    The group has 4n elements: label shifts v -> v+a, and label reflections
    v -> a-v paired with orientation reversal (reflections reverse H, so
    they only preserve "H is a face" when the orientation flips too).
    Two maps get equal bytes exactly when one is carried to the other by
    some group element.
    """
    if isinstance(m, ConstructionResult):
        m = m.map
    nn = m.vertex_count
    if set(m.labels) != set(range(nn)):
        raise NoHamiltonianFaceError("vertices must be labeled 0..2n-1")
    if not trace_faces(m).has_face(tuple(range(nn))):
        raise NoHamiltonianFaceError("the map has no face (0..2n-1)")
    rotations = {v: m.rotation_of(v) for v in range(nn)}
    best = None
    for a in range(nn):
        for flip in (False, True):
            relabeled: list[tuple[int, ...]] = [()] * nn
            for v, rot in rotations.items():
                if flip:
                    relabeled[(a - v) % nn] = tuple((a - w) % nn
                                                    for w in reversed(rot))
                else:
                    relabeled[(v + a) % nn] = tuple((w + a) % nn for w in rot)
            blob = _serialize_rotations(nn, relabeled)
            if best is None or blob < best:
                best = blob
    return best


def _serialize_rotations(nn: int, rotations) -> bytes:
    parts = [str(nn)]
    for v in range(nn):
        rot = rotations[v]
        j = rot.index(min(rot))
        rot = rot[j:] + rot[:j]
        parts.append(f"{v}:" + ",".join(map(str, rot)))
    return ";".join(parts).encode()


def rotations_from_canonical(blob: bytes) -> dict[int, tuple[int, ...]]:
    parts = blob.decode().split(";")
    nn = int(parts[0])
    rotations = {}
    for chunk in parts[1:]:
        v, _, rest = chunk.partition(":")
        rotations[int(v)] = tuple(int(w) for w in rest.split(","))
    if sorted(rotations) != list(range(nn)):
        raise ValueError("malformed canonical form")
    return rotations


# ---------------------------------------------------------------------------
# vectorized tracing

class _DartTables:
    """Fixed dart numbering of K_{n,n} shared by every candidate."""

    def __init__(self, n: int):
        self.n = n
        nn = 2 * n
        edges = sorted((v, w) for v in range(0, nn, 2)
                       for w in range(1, nn, 2) if v < w)
        edges += sorted((w, v) for v in range(0, nn, 2)
                        for w in range(1, nn, 2) if w < v)
        edges.sort()
        self.dart_count = 2 * len(edges)
        self.dart_of: dict[tuple[int, int], int] = {}
        for i, (a, b) in enumerate(edges):
            self.dart_of[(a, b)] = 2 * i
            self.dart_of[(b, a)] = 2 * i + 1
        self.darts_at = [np.array(sorted(self.dart_of[(v, w)]
                                         for w in range((v + 1) % 2, nn, 2)),
                                  dtype=np.int32)
                         for v in range(nn)]
        self.head = [0] * self.dart_count
        for (a, b), d in self.dart_of.items():
            self.head[d] = b
        self.iters = max(1, math.ceil(math.log2(self.dart_count)))

    def sigma_row_into(self, out: np.ndarray, rotations) -> None:
        for v, rot in enumerate(rotations):
            k = len(rot)
            for j in range(k):
                out[self.dart_of[(v, rot[j])]] = \
                    self.dart_of[(v, rot[(j + 1) % k])]

    def face_counts(self, sigma: np.ndarray) -> np.ndarray:
        batch, d = sigma.shape
        alpha = np.arange(d, dtype=np.int32) ^ 1
        ptr = sigma[:, alpha]
        label = np.broadcast_to(np.arange(d, dtype=np.int32), (batch, d)).copy()
        for _ in range(self.iters):
            np.minimum(label, np.take_along_axis(label, ptr, axis=1), out=label)
            ptr = np.take_along_axis(ptr, ptr, axis=1)
        return (label == np.arange(d, dtype=np.int32)).sum(axis=1)

    def genus_of_face_counts(self, faces: np.ndarray) -> np.ndarray:
        n = self.n
        genus = (2 - 2 * n + n * n - faces) // 2
        if len(genus) and genus.min() < l_of_n(n):
            raise RuntimeError(
                "candidate below the Euler lower bound; tracing is broken")
        return genus


def _perm_successor_tables(tables: _DartTables):
    # nxt[v][p][j]: successor dart of tables.darts_at[v][j] under the p-th
    # lexicographic free ordering at v
    n = tables.n
    nn = 2 * n
    nxt = []
    for v in range(nn):
        perms = sorted(itertools.permutations(free_neighbors(n, v)))
        rows = np.empty((len(perms), n), dtype=np.int32)
        for p, perm in enumerate(perms):
            rot = ((v - 1) % nn, (v + 1) % nn) + perm
            succ_of = {rot[j]: rot[(j + 1) % n] for j in range(n)}
            for j, d in enumerate(tables.darts_at[v]):
                rows[p, j] = tables.dart_of[(v, succ_of[tables.head[d]])]
        nxt.append(rows)
    return nxt


def _candidate_from_index(n: int, index: int) -> HamConstrainedRotation:
    fact = math.factorial(n - 2)
    digits = []
    for _ in range(2 * n):
        digits.append(index % fact)
        index //= fact
    digits.reverse()
    free = tuple(sorted(itertools.permutations(free_neighbors(n, v)))[p]
                 for v, p in enumerate(digits))
    return HamConstrainedRotation(n, free)


def _exhaustive_shard(args) -> tuple[int, list[int], int]:
    n, start, stop, batch_size = args
    tables = _DartTables(n)
    nxt = _perm_successor_tables(tables)
    fact = math.factorial(n - 2)
    nn = 2 * n
    weights = [fact ** (nn - 1 - v) for v in range(nn)]
    best_faces = -1
    hits: list[int] = []
    examined = 0
    for lo in range(start, stop, batch_size):
        hi = min(lo + batch_size, stop)
        idx = np.arange(lo, hi, dtype=np.int64)
        sigma = np.empty((hi - lo, tables.dart_count), dtype=np.int32)
        for v in range(nn):
            digits = (idx // weights[v]) % fact
            sigma[:, tables.darts_at[v]] = nxt[v][digits]
        faces = tables.face_counts(sigma)
        tables.genus_of_face_counts(faces)
        batch_best = int(faces.max())
        if batch_best > best_faces:
            best_faces = batch_best
            hits = []
        if batch_best == best_faces:
            hits.extend(int(i) for i in idx[faces == best_faces])
        examined += hi - lo
    genus = (2 - nn + n * n - best_faces) // 2
    return genus, hits, examined


def exhaustive_search(n: int, *, max_n: int = 5, jobs: int = 1,
                      batch_size: int = 1 << 14) -> SearchReport:
    """True minimum genus over the whole constrained space, with one
    representative per isomorphism class of the optima."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > max_n:
        raise SpaceTooLargeError(
            f"n={n}: exhaustive search is limited to n <= {max_n} "
            f"({candidate_space_size(n)} candidates)")
    started = time.monotonic()
    size = candidate_space_size(n)
    fact = math.factorial(n - 2)
    stride = size // fact if fact else size
    shards = [(n, s * stride, (s + 1) * stride, batch_size)
              for s in range(fact)] or [(n, 0, size, batch_size)]
    if jobs > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(shards))) as pool:
            results = list(pool.map(_exhaustive_shard, shards))
    else:
        results = [_exhaustive_shard(s) for s in shards]

    best_genus = min(r[0] for r in results)
    examined = sum(r[2] for r in results)
    assert examined == size
    classes: dict[bytes, int] = {}
    for genus, hits, _ in results:
        if genus != best_genus:
            continue
        for index in hits:
            blob = canonical_form(_candidate_from_index(n, index).to_map())
            classes.setdefault(blob, index)
    return SearchReport(
        n=n, mode="exhaustive", min_genus_found=best_genus,
        candidates_examined=examined,
        representatives=tuple(sorted(classes)),
        iso_class_count=len(classes),
        elapsed=time.monotonic() - started)


# ---------------------------------------------------------------------------
# randomized search

def _evaluate_batch(tables: _DartTables, candidates) -> np.ndarray:
    sigma = np.empty((len(candidates), tables.dart_count), dtype=np.int32)
    for row, rotations in zip(sigma, candidates):
        tables.sigma_row_into(row, rotations)
    return tables.face_counts(sigma)


def _full_rotations(n: int, free) -> list[tuple[int, ...]]:
    nn = 2 * n
    return [((v - 1) % nn, (v + 1) % nn) + tuple(free[v]) for v in range(nn)]


# consecutive non-improving (plateau) steps tolerated before a restart;
# tuned at n=6 where strict ascent alone stalls two genus levels short
_SIDEWAYS_CAP = 200


def _random_stream(args) -> tuple[int | None, bytes | None, int]:
    n, seed, worker, budget = args
    if budget <= 0:
        return None, None, 0
    rng = random.Random(seed * 1_000_003 + worker)
    tables = _DartTables(n)
    nn = 2 * n
    target_faces = 2 - 2 * n + n * n - 2 * l_of_n(n)
    base_free = [list(free_neighbors(n, v)) for v in range(nn)]
    moves = [(v, i) for v in range(nn) for i in range(n - 3)]

    best_faces = -1
    best_free = None
    used = 0

    def remember(faces: int, free) -> None:
        nonlocal best_faces, best_free
        if faces > best_faces:
            best_faces = faces
            best_free = [tuple(f) for f in free]

    while used < budget and best_faces < target_faces:
        current = [list(f) for f in base_free]
        for f in current:
            rng.shuffle(f)
        faces = int(_evaluate_batch(
            tables, [_full_rotations(n, current)])[0])
        used += 1
        remember(faces, current)
        sideways = 0
        last_move = None
        while used < budget and best_faces < target_faces:
            # steepest step over the adjacent-transposition neighborhood,
            # scanned in random order so plateau ties diffuse instead of
            # cycling; the inverse of the previous move is skipped
            scan = [mv for mv in moves if mv != last_move]
            rng.shuffle(scan)
            allowed = scan[:budget - used]
            if not allowed:
                break
            batch = []
            for v, i in allowed:
                neighbor = [list(f) for f in current]
                neighbor[v][i], neighbor[v][i + 1] = \
                    neighbor[v][i + 1], neighbor[v][i]
                batch.append(_full_rotations(n, neighbor))
            counts = _evaluate_batch(tables, batch)
            tables.genus_of_face_counts(counts)
            used += len(allowed)
            pick = int(counts.argmax())
            val = int(counts[pick])
            v, i = allowed[pick]
            stepped = [list(f) for f in current]
            stepped[v][i], stepped[v][i + 1] = stepped[v][i + 1], stepped[v][i]
            remember(val, stepped)
            if val < faces:
                break
            if val == faces:
                sideways += 1
                if sideways > _SIDEWAYS_CAP:
                    break
            else:
                sideways = 0
            current = stepped
            faces = val
            last_move = (v, i)
    if best_free is None:
        return None, None, used
    blob = canonical_form(
        HamConstrainedRotation(n, tuple(best_free)).to_map())
    genus = (2 - nn + n * n - best_faces) // 2
    return genus, blob, used


def randomized_search(n: int, seed: int, budget: int, *,
                      workers: int = 1, jobs: int = 1) -> SearchReport:
    """Random restarts with steepest-ascent hill climbing on the face count.

    Runs ``workers`` independent streams (each with its own RNG derived
    from the seed and an even share of the budget); the process count
    ``jobs`` never changes the result.  A stream stops early once it
    reaches the lower bound.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if budget <= 0:
        raise ValueError("budget must be positive")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    started = time.monotonic()
    share, extra = divmod(budget, workers)
    specs = [(n, seed, w, share + (1 if w < extra else 0))
             for w in range(workers)]
    if jobs > 1 and workers > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, workers)) as pool:
            results = list(pool.map(_random_stream, specs))
    else:
        results = [_random_stream(s) for s in specs]

    found = [(genus, blob) for genus, blob, _ in results if genus is not None]
    if not found:
        raise ValueError("budget too small to evaluate any candidate")
    best_genus = min(genus for genus, _ in found)
    blobs = sorted({blob for genus, blob in found if genus == best_genus})
    return SearchReport(
        n=n, mode="randomized", min_genus_found=best_genus,
        candidates_examined=sum(used for _, _, used in results),
        representatives=tuple(blobs),
        seed=seed, budget=budget, workers=workers,
        elapsed=time.monotonic() - started)
