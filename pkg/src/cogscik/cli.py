"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 move pool exhausted
mid-run, 4 catalog validation failure.
"""
from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from .catalog import (generate_synthetic_catalog, instantiate_catalog, load_catalog,
                      read_rows, duplicate_names, serialize_catalog)
from .cluster import Centroid, build_cluster, format_cluster_report
from .errors import CogSciKError, ExhaustionError
from .io_space import IOClass, IODimension, IOClassVector, parse_io, sample_io
from .kernel import WeightVector
from .kmeans import format_kmeans_report, kmeans
from .seeding import check_seed, substream
from .simulation import POLICIES, Scripted, SimulationConfig, parse_actors, run

EXIT_OK, EXIT_USAGE, EXIT_EXHAUSTED, EXIT_INVALID = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _seed(text: str) -> int:
    try:
        return check_seed(int(text))
    except (ValueError, CogSciKError):
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None


def _weights(text: str) -> WeightVector:
    try:
        return WeightVector.parse(text)
    except CogSciKError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from None


def _catalog(path: str, seed: int):
    try:
        specs = load_catalog(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return instantiate_catalog(specs, substream(seed, "catalog"), seed=seed)


def cmd_gen(args) -> int:
    specs = generate_synthetic_catalog(args.n, substream(args.seed, "synthetic"))
    _write(serialize_catalog(specs), args.out)
    return EXIT_OK


def cmd_cluster(args) -> int:
    catalog = _catalog(args.catalog, args.seed)
    if args.io is not None:
        io_vec = parse_io(args.io)
    else:
        io_vec = sample_io(IOClassVector.parse(args.classes), substream(args.seed, "actor-io", 0))
    cluster = build_cluster(Centroid(io_vec, "actor"), catalog, args.k, args.weights)
    sys.stdout.write(format_cluster_report(cluster))
    return EXIT_OK


def cmd_run(args) -> int:
    catalog = _catalog(args.catalog, args.seed)
    try:
        text = Path(args.actors).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.actors}: {exc.strerror}") from None
    actors = parse_actors(text, args.seed)
    if args.policy == "scripted":
        if not args.ranks:
            raise UsageError("--policy scripted requires --ranks")
        try:
            policy = Scripted(int(r) for r in args.ranks.split(","))
        except ValueError:
            raise UsageError(f"bad --ranks {args.ranks!r}") from None
    else:
        policy = POLICIES[args.policy]()
    config = SimulationConfig(k=args.k, n_ticks=args.ticks, seed=args.seed, weights=args.weights,
                              exclude_used=args.exclude_used, policy=policy)
    if not 1 <= args.k <= len(catalog):
        raise UsageError(f"k={args.k} outside 1..{len(catalog)}")
    trace = run(actors, catalog, config)
    _write(trace.format(), args.out)
    return EXIT_OK


def cmd_kmeans(args) -> int:
    catalog = _catalog(args.catalog, args.seed)
    result = kmeans(catalog, args.k, substream(args.seed, "kmeans"), args.max_iterations)
    sys.stdout.write(format_kmeans_report(result, catalog))
    return EXIT_OK


def cmd_validate(args) -> int:
    try:
        text = Path(args.catalog).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {args.catalog}: {exc}") from None
    specs = read_rows(text)
    out = [f"rows: {len(specs)}"]
    for dim in IODimension:
        hist = Counter(s.classes[dim] for s in specs)
        out.append(f"{dim.label.lower()}: " + " ".join(f"{c.value}={hist[c]}" for c in IOClass))
    problems = [f"duplicate name: {name}" for name in duplicate_names(specs)]
    if specs and not problems:
        catalog = instantiate_catalog(specs, substream(args.seed, "catalog"), seed=args.seed)
        seen = {}
        for m in catalog:
            if m.io in seen:
                problems.append(f"duplicate IO vector: {seen[m.io]} / {m.name}")
            seen.setdefault(m.io, m.name)
    out.extend(problems)
    out.append(f"{len(specs)} moves OK" if not problems else f"{len(problems)} problem(s)")
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_INVALID if problems else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cogscik",
                                     description="Actor-centred move clustering in IO space.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, catalog=True):
        if catalog:
            p.add_argument("--catalog", required=True, help="move catalog CSV")
        p.add_argument("--seed", type=_seed, default=0, help="master seed (default 0)")

    p = sub.add_parser("gen", help="write a synthetic move catalog")
    p.add_argument("--n", type=int, default=374)
    p.add_argument("--out", default="-")
    common(p, catalog=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cluster", help="print the k-move cluster around one centroid")
    common(p)
    who = p.add_mutually_exclusive_group(required=True)
    who.add_argument("--classes", help="actor class letters, e.g. ABCDE")
    who.add_argument("--io", help="actor IO vector, five comma-separated decimals")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--weights", type=_weights, default=WeightVector())
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("run", help="run a multi-actor simulation and print the trace")
    common(p)
    p.add_argument("--actors", required=True, help="actor file (INI sections)")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--ticks", type=int, default=10)
    p.add_argument("--policy", choices=["nearest", "random", "scripted"], default="nearest")
    p.add_argument("--ranks", help="comma-separated ranks for --policy scripted")
    p.add_argument("--exclude-used", action="store_true")
    p.add_argument("--weights", type=_weights, default=WeightVector())
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("kmeans", help="K-means baseline over the catalog")
    common(p)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--max-iterations", type=int, default=500)
    p.set_defaults(func=cmd_kmeans)

    p = sub.add_parser("validate", help="check a catalog file")
    common(p)
    p.set_defaults(func=cmd_validate)
    return parser


def _glue_values(argv: list[str]) -> list[str]:
    # "--io -0.5,..." would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for tok in it:
        if tok in ("--io", "--weights"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else list(argv)))
    print(f"seed: {args.seed}", file=sys.stderr)
    try:
        return args.func(args)
    except ExhaustionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (UsageError, CogSciKError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
