"""Command-line surface: gen, ecs, decompose, plot, mask, bench.

Exit codes: 0 success (or admitted), 3 score below threshold, 2 usage
error, 1 internal error. All outputs are deterministic for fully
explicit inputs; JSON floats are rendered with fixed six-decimal
formatting so golden files are stable across platforms.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bench as bench_mod
from . import ecs as ecs_mod
from .errors import CycleModError, OutOfRange, WidthMismatch
from .hybrid import entropy_source, mask_xor, token_from_hex
from .modring import make_modulus
from .seedgen import compute_d, decompose_identity, generate_sequence, verify_identity
from .svgplot import render_residue_svg

THRESHOLD_ENV_VAR = "CYCLEMOD_THRESHOLD"
PLOT_RANGE_LIMIT = 10**5

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_REJECTED = 3


def _fixed(value: float) -> str:
    return f"{value:.6f}"


def dumps_fixed(obj, indent: int = 0) -> str:
    """JSON writer with fixed 6-decimal floats and stable key order."""
    pad = " " * indent
    if isinstance(obj, dict):
        if not obj:
            return pad + "{}"
        items = ",\n".join(
            f'{pad}  "{key}": {dumps_fixed(val, indent + 2).lstrip()}'
            for key, val in obj.items()
        )
        return f"{pad}{{\n{items}\n{pad}}}"
    if isinstance(obj, list):
        if not obj:
            return pad + "[]"
        items = ",\n".join(dumps_fixed(val, indent + 2) for val in obj)
        return f"{pad}[\n{items}\n{pad}]"
    if isinstance(obj, bool):
        return pad + ("true" if obj else "false")
    if isinstance(obj, float):
        return pad + _fixed(obj)
    if isinstance(obj, int):
        return pad + str(obj)
    if isinstance(obj, str):
        return pad + '"' + obj + '"'
    raise TypeError(f"unsupported JSON value: {obj!r}")


def _default_threshold() -> float:
    return float(os.environ.get(THRESHOLD_ENV_VAR, "0.90"))


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _add_range_args(sub: argparse.ArgumentParser, k_end_required: bool = True) -> None:
    sub.add_argument("--p", type=int, required=True, help="exponent of the modulus 3^p")
    sub.add_argument("--k-start", type=int, default=1, dest="k_start")
    sub.add_argument(
        "--k-end", type=int, required=k_end_required, default=None, dest="k_end"
    )
    sub.add_argument("--variant", choices=("euclid", "ct"), default="ct")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclemod",
        description="Deterministic seed residues over Z/3^pZ: generation, "
        "scoring, identity decomposition, masking, and timing benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit the (k, a_k, d_k) sequence")
    _add_range_args(gen)
    gen.add_argument("--format", choices=("csv", "json"), default="csv")
    gen.add_argument("--output", default=None)

    ecs = sub.add_parser("ecs", help="score a sequence and gate on the threshold")
    _add_range_args(ecs)
    ecs.add_argument("--buckets", type=int, default=ecs_mod.DEFAULT_BUCKETS)
    ecs.add_argument(
        "--threshold",
        type=float,
        default=None,
        help=f"admission threshold (default 0.90, or ${THRESHOLD_ENV_VAR})",
    )
    ecs.add_argument("--output", default=None)

    dec = sub.add_parser("decompose", help="integer identity witness for (p, s)")
    dec.add_argument("--p", type=int, required=True)
    dec.add_argument("--s", type=int, required=True)
    dec.add_argument("--output", default=None)

    plot = sub.add_parser("plot", help="deterministic SVG residue map")
    _add_range_args(plot)
    plot.add_argument("--output", default=None)

    mask = sub.add_parser("mask", help="XOR-mask d_k with an entropy token")
    mask.add_argument("--p", type=int, required=True)
    mask.add_argument("--k", type=int, required=True)
    mask.add_argument("--width", type=int, default=None, help="token width in bits")
    src = mask.add_mutually_exclusive_group(required=True)
    src.add_argument("--r-hex", dest="r_hex", default=None)
    src.add_argument("--source", choices=("test", "os"), default=None)
    mask.add_argument("--seed", type=int, default=0, help="seed for --source test")
    mask.add_argument("--output", default=None)

    bench = sub.add_parser("bench", help="compare inversion timing uniformity")
    bench.add_argument("--p", type=int, required=True)
    bench.add_argument("--k-start", type=int, default=1, dest="k_start")
    bench.add_argument(
        "--k-end", type=int, default=None, dest="k_end",
        help="defaults to one full period, phi(3^p)",
    )
    bench.add_argument("--reps", type=int, default=50)
    bench.add_argument("--output", default=None)

    return parser


def cmd_gen(args: argparse.Namespace) -> int:
    seq = generate_sequence(args.p, args.k_start, args.k_end, args.variant)
    if args.format == "csv":
        lines = ["k,a_k,d_k"]
        lines += [f"{r.k},{r.a_k.value},{r.d_k.value}" for r in seq]
        text = "\n".join(lines) + "\n"
    else:
        rows = [{"k": r.k, "a_k": r.a_k.value, "d_k": r.d_k.value} for r in seq]
        text = dumps_fixed(rows) + "\n"
    _write_output(text, args.output)
    return EXIT_OK


def cmd_ecs(args: argparse.Namespace) -> int:
    threshold = args.threshold if args.threshold is not None else _default_threshold()
    seq = generate_sequence(args.p, args.k_start, args.k_end, args.variant)
    report = ecs_mod.score(seq, buckets=args.buckets)
    admitted = ecs_mod.admit(report, threshold)
    payload = {
        "p": report.p,
        "k_start": report.k_range[0],
        "k_end": report.k_range[1],
        "buckets": report.bucket_count,
        "cd": report.cd,
        "rud": report.rud,
        "mbi": report.mbi,
        "ecs": report.ecs,
        "admitted": admitted,
        "threshold": threshold,
    }
    _write_output(dumps_fixed(payload) + "\n", args.output)
    return EXIT_OK if admitted else EXIT_REJECTED


def cmd_decompose(args: argparse.Namespace) -> int:
    witness = decompose_identity(args.p, args.s)
    payload = {
        "p": witness.p,
        "s": witness.s,
        "A": witness.A,
        "k": witness.k,
        "n": witness.n,
        "d": witness.d,
        "verified": verify_identity(witness),
    }
    _write_output(dumps_fixed(payload) + "\n", args.output)
    return EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    if args.k_end - args.k_start > PLOT_RANGE_LIMIT:
        raise OutOfRange(f"plot range is capped at {PLOT_RANGE_LIMIT} points")
    seq = generate_sequence(args.p, args.k_start, args.k_end, args.variant)
    _write_output(render_residue_svg(seq), args.output)
    return EXIT_OK


def cmd_mask(args: argparse.Namespace) -> int:
    m = make_modulus(args.p)
    width = args.width if args.width is not None else m.bit_width
    if args.r_hex is not None:
        token = token_from_hex(args.r_hex, width)
    elif args.source == "test":
        token = next(entropy_source("deterministic_test", width, seed=args.seed))
    else:
        token = next(entropy_source("os", width))
    seed = mask_xor(compute_d(args.k, m), token, k=args.k)
    _write_output(seed.hex() + "\n", args.output)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    m = make_modulus(args.p)
    k_end = args.k_end if args.k_end is not None else m.phi
    report = bench_mod.compare_report(args.p, (args.k_start, k_end), args.reps)
    _write_output(dumps_fixed(report) + "\n", args.output)
    return EXIT_OK


_COMMANDS = {
    "gen": cmd_gen,
    "ecs": cmd_ecs,
    "decompose": cmd_decompose,
    "plot": cmd_plot,
    "mask": cmd_mask,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (OutOfRange, WidthMismatch, ValueError) as exc:
        print(f"cyclemod {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CycleModError as exc:
        print(f"cyclemod {args.command}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as exc:
        print(f"cyclemod {args.command}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
