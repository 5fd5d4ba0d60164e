"""Command line front end.

Five subcommands: construct, verify, search, simplify, export.  Machine
readable reports go to stdout; timing and diagnostics go to stderr so
report bytes are deterministic for fixed flags.  Exit codes: 0 success,
1 failed expectation or unmet goal, 2 usage or input error.
"""

import argparse
import os
import sys
import time
from collections import Counter
from pathlib import Path

from .construct import ConstructionResult, OddNError, chord_diagram, construct, l_of_n
from .figures import render_chord_diagram
from .formats import (
    RotationFileError,
    census_report,
    dump_json,
    map_from_rotation_file,
    search_report,
    serialize_rotation_file,
)
from .interchange import (
    StuckError,
    from_embedding,
    h_darts_from_cycle,
    simplify_to_complete,
)
from .maps import CombinatorialMap, map_from_rotations, trace_faces
from .search import (
    SpaceTooLargeError,
    exhaustive_search,
    randomized_search,
    rotations_from_canonical,
)

# Streams per randomized search, fixed so --jobs never changes the report.
_RANDOM_WORKERS = 4

# Largest n the verify command will rebuild to recognize construction
# output and attach named faces; beyond this the census is still complete.
_NAMED_FACE_LIMIT = 64


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def _read_rotation_map(path: str) -> CombinatorialMap:
    return map_from_rotation_file(Path(path).read_text())


def _matching_construction(m: CombinatorialMap,
                           limit: int | None = None) -> ConstructionResult | None:
    """The construction this map is byte-identical to, if any."""
    if m.vertex_count % 4:
        return None
    n = m.vertex_count // 2
    if limit is not None and n > limit:
        return None
    try:
        result = construct(n)
    except ValueError:
        return None
    if serialize_rotation_file(m) != serialize_rotation_file(result.map):
        return None
    return result


def _cmd_construct(args) -> int:
    try:
        result = construct(args.n)
    except OddNError as exc:
        return _fail(f"{exc}; the conjectured genus is {l_of_n(args.n)}", 2)
    except ValueError as exc:
        return _fail(str(exc), 2)
    out = args.out or f"construct_{args.n}.{args.format}"
    if args.format == "rot":
        text = serialize_rotation_file(result.map)
    else:
        doc = census_report(result.census, result.named_faces)
        doc["rotations"] = {str(v): list(result.map.rotation_of(v))
                            for v in result.map.labels}
        text = dump_json(doc)
    Path(out).write_text(text)
    print(f"genus {result.genus}, faces {result.census.f}, H present")
    return 0


def _cmd_verify(args) -> int:
    started = time.monotonic()
    try:
        m = _read_rotation_map(args.file)
    except OSError as exc:
        return _fail(str(exc), 2)
    except (RotationFileError, ValueError) as exc:
        return _fail(str(exc), 2)
    census = trace_faces(m)
    matched = _matching_construction(m, limit=_NAMED_FACE_LIMIT)
    named = matched.named_faces if matched is not None else None
    sys.stdout.write(dump_json(census_report(census, named)))
    print(f"elapsed {time.monotonic() - started:.3f}s", file=sys.stderr)
    failures = []
    if args.expect_ham:
        cycle = tuple(range(m.vertex_count))
        if not (census.has_face(cycle) or census.has_face(cycle[::-1])):
            failures.append("expectation failed: no Hamiltonian face 0..v-1")
    if args.expect_genus is not None and census.genus != args.expect_genus:
        failures.append(f"expectation failed: genus is {census.genus}, "
                        f"expected {args.expect_genus}")
    for message in failures:
        print(message, file=sys.stderr)
    return 1 if failures else 0


def _resolve_jobs(flag_value: int | None) -> int:
    if flag_value is None:
        raw = os.environ.get("GENUSFORGE_JOBS", "")
        if not raw:
            return 1
        try:
            flag_value = int(raw)
        except ValueError:
            raise ValueError(f"GENUSFORGE_JOBS={raw!r} is not an integer")
    if flag_value < 1:
        raise ValueError("jobs must be at least 1")
    return flag_value


def _cmd_search(args) -> int:
    try:
        jobs = _resolve_jobs(args.jobs)
        if args.mode == "exhaustive":
            report = exhaustive_search(args.n, jobs=jobs)
        else:
            report = randomized_search(args.n, seed=args.seed,
                                       budget=args.budget,
                                       workers=_RANDOM_WORKERS, jobs=jobs)
    except SpaceTooLargeError as exc:
        return _fail(str(exc), 2)
    except ValueError as exc:
        return _fail(str(exc), 2)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    filenames = []
    for idx, blob in enumerate(report.representatives):
        name = f"search_n{args.n}_{report.mode}_class{idx}.rot"
        rotations = rotations_from_canonical(blob)
        (out_dir / name).write_text(serialize_rotation_file(rotations))
        filenames.append(name)
    sys.stdout.write(dump_json(search_report(report, filenames)))
    print(f"elapsed {report.elapsed:.3f}s", file=sys.stderr)
    return 0 if report.success else 1


def _cmd_simplify(args) -> int:
    try:
        m = _read_rotation_map(args.file)
        cycle = tuple(range(m.vertex_count))
        colors = {v: "white" if v % 2 == 0 else "black" for v in cycle}
        interchange = from_embedding(m, h_darts_from_cycle(m, cycle), colors)
    except OSError as exc:
        return _fail(str(exc), 2)
    except (RotationFileError, ValueError) as exc:
        return _fail(str(exc), 2)
    before = interchange.map.edge_count
    try:
        simplified = simplify_to_complete(interchange)
    except StuckError as exc:
        return _fail(str(exc), 1)
    except ValueError as exc:
        return _fail(str(exc), 2)
    out = args.out or str(
        Path(args.file).with_name(Path(args.file).stem + "_simple.rot"))
    Path(out).write_text(serialize_rotation_file(simplified.map))
    print(f"edges {before} -> {simplified.map.edge_count}, "
          f"genus {simplified.census().genus}")
    return 0


def _dot_text(m: CombinatorialMap) -> str:
    v = m.vertex_count
    darts_toward = Counter()
    for label in m.labels:
        for w in m.rotation_of(label):
            darts_toward[min(label, w), max(label, w)] += 1
    ordered = []
    for t in range(v):
        around = (t, (t + 1) % v)
        key = (min(around), max(around))
        if darts_toward[key]:
            ordered.append(around)
            darts_toward[key] -= 2
    for key in sorted(darts_toward):
        ordered.extend([key] * (darts_toward[key] // 2))
    lines = ["graph G {"]
    lines.extend(f'  "{a}" -- "{b}";' for a, b in ordered)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_export(args) -> int:
    try:
        m = _read_rotation_map(args.file)
    except OSError as exc:
        return _fail(str(exc), 2)
    except (RotationFileError, ValueError) as exc:
        return _fail(str(exc), 2)
    suffix = ".dot" if args.format == "dot" else ".svg"
    out = args.out or str(Path(args.file).with_suffix(suffix))
    if args.format == "dot":
        Path(out).write_text(_dot_text(m))
        return 0
    result = _matching_construction(m)
    if result is None:
        return _fail(f"{args.file} is not construction output; the chord "
                     "diagram is only defined for those rotation files", 2)
    try:
        diagram = chord_diagram(result.n)
    except ValueError as exc:
        return _fail(str(exc), 2)
    render_chord_diagram(diagram, out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genusforge",
        description="Construct, verify, search, simplify, and export "
                    "minimum-genus rotation systems with a Hamiltonian face.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "construct",
        help="write the K_{n,n} embedding meeting the lower bound (even n)")
    p.add_argument("n", type=int)
    p.add_argument("--out", help="output path (default construct_<n>.<format>)")
    p.add_argument("--format", choices=("rot", "json"), default="rot")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser(
        "verify", help="trace the faces of a rotation file, check expectations")
    p.add_argument("file")
    p.add_argument("--expect-ham", action="store_true",
                   help="require the face 0,1,...,v-1")
    p.add_argument("--expect-genus", type=int, default=None)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "search", help="search Hamiltonian-face rotation systems for K_{n,n}")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=("exhaustive", "random"),
                   default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=1_000_000,
                   help="candidates examined per randomized run")
    p.add_argument("--jobs", type=int, default=None,
                   help="process count (default $GENUSFORGE_JOBS or 1); "
                        "never changes results")
    p.add_argument("--out-dir", default=".",
                   help="where representative rotation files are written")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser(
        "simplify",
        help="remove parallel lanes from an interchange file down to K_{n,n}")
    p.add_argument("file")
    p.add_argument("--out", help="output path (default <file>_simple.rot)")
    p.set_defaults(handler=_cmd_simplify)

    p = sub.add_parser(
        "export", help="render a rotation file as DOT or as a chord diagram")
    p.add_argument("file")
    p.add_argument("--format", choices=("dot", "svg-chord"), required=True)
    p.add_argument("--out", help="output path (default <file>.dot / .svg)")
    p.set_defaults(handler=_cmd_export)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return args.handler(args)


def entry_point() -> None:
    sys.exit(main(sys.argv[1:]))
