"""Command-line front end.

Subcommands: keygen, encaps, decaps (raw binary key/ciphertext files in the
codec wire format), kat / kat-verify (deterministic hex test-vector files),
sizes (the nine-row size table) and bench (local medians; makes no claims
beyond this machine).
"""

import argparse
import statistics
import sys
import time
from pathlib import Path

from . import backend, kat, kem
from .codec import DecodeError
from .params import all_params, params_by_name


def _hex32(parser: argparse.ArgumentParser, value: str | None, flag: str):
    if value is None:
        return None
    try:
        raw = bytes.fromhex(value)
    except ValueError:
        parser.error(f"{flag} must be hex")
    if len(raw) != 32:
        parser.error(f"{flag} must be exactly 64 hex characters")
    return raw


def _add_scheme_args(sub, required=True):
    sub.add_argument("--scheme", choices=["florete", "espada", "sable"],
                     required=required)
    sub.add_argument("--level", choices=["low", "medium", "high"],
                     required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scabbard",
                                     description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    kg = subs.add_parser("keygen", help="generate a key pair")
    _add_scheme_args(kg)
    kg.add_argument("--pk", type=Path, required=True)
    kg.add_argument("--sk", type=Path, required=True)
    kg.add_argument("--seed-a")
    kg.add_argument("--seed-s")
    kg.add_argument("--z")

    en = subs.add_parser("encaps", help="encapsulate against a public key")
    _add_scheme_args(en)
    en.add_argument("--pk", type=Path, required=True)
    en.add_argument("--ct", type=Path, required=True)
    en.add_argument("--ss", type=Path, required=True)
    en.add_argument("--m")

    de = subs.add_parser("decaps", help="decapsulate a ciphertext")
    _add_scheme_args(de)
    de.add_argument("--sk", type=Path, required=True)
    de.add_argument("--ct", type=Path, required=True)
    de.add_argument("--ss", type=Path, required=True)

    kt = subs.add_parser("kat", help="write a known-answer-test file")
    _add_scheme_args(kt)
    kt.add_argument("file", type=Path)
    kt.add_argument("--master-seed", required=True)
    kt.add_argument("--count", type=int, default=10)

    kv = subs.add_parser("kat-verify", help="verify a known-answer-test file")
    kv.add_argument("file", type=Path)
    kv.add_argument("--master-seed", required=True)

    subs.add_parser("sizes", help="print the nine-row size table")

    be = subs.add_parser("bench", help="micro-benchmark KEM operations")
    _add_scheme_args(be, required=False)
    be.add_argument("--iters", type=int, default=25)
    be.add_argument("--backend", choices=["auto", "python", "cython", "both"],
                    default="both")
    return parser


def _cmd_keygen(parser, args) -> int:
    p = params_by_name(args.scheme, args.level)
    seeds = [_hex32(parser, v, f) for v, f in
             ((args.seed_a, "--seed-a"), (args.seed_s, "--seed-s"), (args.z, "--z"))]
    if any(s is not None for s in seeds):
        if not all(s is not None for s in seeds):
            parser.error("deterministic keygen needs --seed-a, --seed-s and --z")
        pair = kem.kem_keygen(p, *seeds)
    else:
        pair = kem.keygen(p)
    args.pk.write_bytes(pair.pk)
    args.sk.write_bytes(pair.sk)
    print(f"wrote {args.pk} ({len(pair.pk)} bytes) and {args.sk} ({len(pair.sk)} bytes)")
    return 0


def _cmd_encaps(parser, args) -> int:
    p = params_by_name(args.scheme, args.level)
    m = _hex32(parser, args.m, "--m")
    pk = args.pk.read_bytes()
    if m is not None:
        ct, ss = kem.kem_encaps(p, pk, m)
    else:
        ct, ss = kem.encaps(p, pk)
    args.ct.write_bytes(ct)
    args.ss.write_bytes(ss)
    print(f"wrote {args.ct} ({len(ct)} bytes) and {args.ss} (32 bytes)")
    return 0


def _cmd_decaps(args) -> int:
    p = params_by_name(args.scheme, args.level)
    ss = kem.kem_decaps(p, args.sk.read_bytes(), args.ct.read_bytes())
    args.ss.write_bytes(ss)
    print(f"wrote {args.ss} (32 bytes)")
    return 0


def _cmd_kat(parser, args) -> int:
    if args.count < 1:
        parser.error("--count must be at least 1")
    p = params_by_name(args.scheme, args.level)
    seed = _hex32(parser, args.master_seed, "--master-seed")
    records = kat.generate(p, seed, args.count)
    args.file.write_text(kat.format_file(p, records))
    print(f"wrote {args.file} ({len(records)} records)")
    return 0


def _cmd_kat_verify(parser, args) -> int:
    seed = _hex32(parser, args.master_seed, "--master-seed")
    try:
        n = kat.verify(args.file.read_text(), seed)
    except kat.KatMismatch as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    print(f"verified {n} records")
    return 0


def _cmd_sizes() -> int:
    for p in all_params():
        print(f"{p.scheme_id.scheme.value} {p.scheme_id.level.value} "
              f"{p.pk_bytes} {p.sk_bytes} {p.ct_bytes}")
    return 0


def _cmd_bench(parser, args) -> int:
    from . import polymul

    if args.iters < 1:
        parser.error("--iters must be at least 1")
    if args.backend == "both":
        names = backend.available()
    else:
        names = (args.backend,)
    if args.scheme and args.level:
        param_sets = [params_by_name(args.scheme, args.level)]
    elif args.scheme or args.level:
        parser.error("bench needs both --scheme and --level, or neither")
    else:
        param_sets = list(all_params())

    previous = polymul.active_backend()
    seed = bytes(32)
    try:
        for name in names:
            resolved = polymul.set_backend(name)
            for p in param_sets:
                pair = kem.kem_keygen(p, seed, seed, seed)
                ct, _ = kem.kem_encaps(p, pair.pk, seed)
                ops = {
                    "keygen": lambda: kem.kem_keygen(p, seed, seed, seed),
                    "encaps": lambda: kem.kem_encaps(p, pair.pk, seed),
                    "decaps": lambda: kem.kem_decaps(p, pair.sk, ct),
                }
                for op, fn in ops.items():
                    samples = []
                    for _ in range(args.iters):
                        t0 = time.perf_counter_ns()
                        fn()
                        samples.append(time.perf_counter_ns() - t0)
                    median = int(statistics.median(samples))
                    print(f"{p.scheme_id.scheme.value} {p.scheme_id.level.value} "
                          f"{op} {resolved} {median} ns")
    finally:
        polymul.set_backend(previous)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "keygen":
            return _cmd_keygen(parser, args)
        if args.command == "encaps":
            return _cmd_encaps(parser, args)
        if args.command == "decaps":
            return _cmd_decaps(args)
        if args.command == "kat":
            return _cmd_kat(parser, args)
        if args.command == "kat-verify":
            return _cmd_kat_verify(parser, args)
        if args.command == "sizes":
            return _cmd_sizes()
        if args.command == "bench":
            return _cmd_bench(parser, args)
    except DecodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, RuntimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
