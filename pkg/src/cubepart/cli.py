"""Command-line interface.

Exit codes: 0 success, 1 verification failure or rejected input, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import _backend, bounds, partition
from .codec import DecodeError, Encoding, decode, encode
from .construct import SeedNotFound, find_seed_from, generate
from .counting import (
    CSV_HEADER,
    KNOWN_VALUES,
    QUANTITIES,
    ResourceExhausted,
    count_partitions,
    count_pm_permanent,
)
from .cube import DimSet
from .partition import is_tight, reducing_cube, validate
from .sampler import NibbleReport, SampleReport, SamplerConfig, nibble_trial, summarize, two_cubes_trial
from .verify import failed, verify_all


def _add_threads(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")


def cmd_count(args) -> int:
    dims = DimSet.parse(args.dims) if args.dims else None
    try:
        print(count_partitions(args.d, dims, threads=args.threads))
    except ResourceExhausted as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_matchings(args) -> int:
    values = {}
    if args.method in ("permanent", "both"):
        values["permanent"] = count_pm_permanent(args.d, threads=args.threads, progress=args.progress)
    if args.method in ("partition", "both"):
        values["partition"] = count_partitions(args.d, [1], threads=args.threads)
    distinct = set(values.values())
    print(distinct.pop() if len(distinct) == 1 else ",".join(f"{k}={v}" for k, v in values.items()))
    return 0 if len(set(values.values())) == 1 else 1


def cmd_bounds(args) -> int:
    d = args.d
    print("quantity,d,log2,exact")
    for name, val in bounds.bound_table(d):
        print(f"{name},{d},{val:.6f},")
    for q in ("m", "f"):
        exact = KNOWN_VALUES.get((q, d))
        if exact is None and d <= 4:
            exact = count_partitions(d, QUANTITIES[q](d), threads=args.threads)
        if exact is not None:
            print(f"{q},{d},{bounds.log2_int(exact):.6f},{exact}")
    return 0


def cmd_encode(args) -> int:
    out = []
    for p in partition.read(args.input):
        res = validate(p)
        if res is not True:
            print(f"invalid partition: {res}", file=sys.stderr)
            return 1
        out.append(str(encode(p)))
    _emit("\n".join(out) + "\n", args.out)
    return 0


def cmd_decode(args) -> int:
    text = Path(args.input).read_text()
    dims = DimSet.parse(args.dims) if args.dims else None
    parts = []
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            parts.append(decode(Encoding.parse(line), dims))
        except DecodeError as exc:
            print(str(exc), file=sys.stderr)
            return 1
        except ValueError as exc:
            print(f"not a valid encoding: {exc}", file=sys.stderr)
            return 1
    _emit(partition.dump_many(parts), args.out)
    return 0


def cmd_irreducible_gen(args) -> int:
    try:
        seed = find_seed_from(3, 4)
    except SeedNotFound as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if args.d <= seed.d0:
        print(f"--d must exceed the seed dimension {seed.d0}", file=sys.stderr)
        return 2
    parts = list(generate(args.d, args.limit, seed))
    _emit(partition.dump_many(parts), args.out)
    print(f"wrote {len(parts)} partitions of Q_{args.d} (seed d0={seed.d0}, anchor {seed.anchor})",
          file=sys.stderr)
    return 0


def cmd_irreducible_check(args) -> int:
    print("index,parts,valid,tight,irreducible,witness")
    ok = True
    for i, p in enumerate(partition.read(args.input)):
        res = validate(p)
        if res is not True:
            ok = False
            print(f"{i},{len(p)},false,,,{res}")
            continue
        tight = is_tight(p)
        witness = reducing_cube(p)
        irred = witness is None
        ok &= tight and irred
        print(f"{i},{len(p)},true,{str(tight).lower()},{str(irred).lower()},{witness or ''}")
    return 0 if ok else 1


def cmd_sample(args) -> int:
    emit = Path(args.emit) if args.emit else None
    if emit:
        emit.mkdir(parents=True, exist_ok=True)
    if args.kind == "two-cubes":
        cfg = SamplerConfig(d=args.d, alpha=args.alpha, seed=args.seed, trials=args.trials)
        print(SampleReport.CSV_HEADER)
        reports = []
        for t in range(cfg.trials):
            rep = two_cubes_trial(cfg, t)
            if validate(rep.partition) is not True:
                print(f"trial {t}: invalid partition", file=sys.stderr)
                return 1
            reports.append(rep)
            print(rep.csv())
            if emit:
                (emit / f"trial_{t:05d}.txt").write_text(partition.dumps(rep.partition))
        stats = summarize(reports)
        print(
            "summary: mean_removal_fraction={mean_removal_fraction:.6f} "
            "mean_degree_outliers={mean_degree_outliers:.6f}".format(**stats),
            file=sys.stderr,
        )
        return 0
    cfg = SamplerConfig(d=args.d, r=args.r, seed=args.seed, trials=args.trials)
    print(NibbleReport.CSV_HEADER)
    for t in range(cfg.trials):
        rep = nibble_trial(cfg.d, cfg.r, cfg, t)
        p = rep.partition()
        if validate(p) is not True:
            print(f"trial {t}: invalid partition", file=sys.stderr)
            return 1
        print(rep.csv())
        if emit:
            (emit / f"trial_{t:05d}.txt").write_text(partition.dumps(p))
    return 0


def cmd_verify(args) -> int:
    rows = verify_all(args.d_max, long=args.long, threads=args.threads, quiet=not args.long)
    print(CSV_HEADER)
    for r in rows:
        print(r.csv())
    bad = failed(rows)
    if bad:
        print(f"{len(bad)} check(s) failed", file=sys.stderr)
        return 1
    return 0


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubepart", description=__doc__.splitlines()[0])
    ap.add_argument("--backend", choices=["compiled", "python"], help="kernel implementation")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact number of partitions f_S(d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--dims", help="allowed part dimensions, e.g. 0,1,2 (default: all)")
    _add_threads(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("matchings", help="number of perfect matchings m(d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--method", choices=["permanent", "partition", "both"], default="permanent")
    p.add_argument("--progress", action="store_true", help="progress on standard error")
    _add_threads(p)
    p.set_defaults(func=cmd_matchings)

    p = sub.add_parser("bounds", help="CSV of all bound evaluators (log2 values)")
    p.add_argument("--d", type=int, required=True)
    _add_threads(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("encode", help="encode partitions read from a file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode 'd=<int>;s1,...' lines into partitions")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--dims")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decode)

    def add_gen(p):
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--limit", type=int, required=True)
        p.add_argument("--out")
        p.set_defaults(func=cmd_irreducible_gen)

    def add_check(p):
        p.add_argument("--in", dest="input", required=True)
        p.set_defaults(func=cmd_irreducible_check)

    irr = sub.add_parser("irreducible", help="irreducible tight partitions")
    irr_sub = irr.add_subparsers(dest="action", required=True)
    add_gen(irr_sub.add_parser("gen", help="generate by recursive doubling"))
    add_check(irr_sub.add_parser("check", help="validate / tight / irreducible verdicts"))
    add_gen(sub.add_parser("irreducible-gen", help="same as 'irreducible gen'"))
    add_check(sub.add_parser("irreducible-check", help="same as 'irreducible check'"))

    sp = sub.add_parser("sample", help="seeded random constructions")
    sp_sub = sp.add_subparsers(dest="kind", required=True)
    p = sp_sub.add_parser("two-cubes", help="random 2-cubes completed by a maximum matching")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", type=float, default=0.01)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--emit", help="directory for per-trial partition files")
    p.set_defaults(func=cmd_sample)
    p = sp_sub.add_parser("nibble", help="semi-random greedy r-cube packing")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--emit", help="directory for per-trial partition files")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="recompute and check every known value")
    p.add_argument("--d-max", type=int, default=4)
    p.add_argument("--long", action="store_true", help="add the m(6) permanent and the Q_4 codec sweep")
    _add_threads(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend:
        _backend.use(args.backend)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
