"""Command-line front end: encode, decode, inspect, bench and gen."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import PAPER_DEGREES, BenchConfig, render_report, run_bench
from .container import parse_container
from .corpus import CorpusSpec, generate
from .errors import NhuffError
from .huffman import chunk_bits
from . import container


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nhuff",
        description="n-ary Huffman compressor (tree degrees 2..16)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="compress a file into a .nhf container")
    p.add_argument("--degree", type=int, required=True, metavar="N",
                   help="tree degree, 2..16")
    p.add_argument("input", type=Path)
    p.add_argument("output", type=Path)

    p = sub.add_parser("decode", help="restore the original file")
    p.add_argument("--decoder", choices=("reference", "fsm"), default="fsm",
                   help="decoder variant (default: fsm)")
    p.add_argument("input", type=Path)
    p.add_argument("output", type=Path)

    p = sub.add_parser("inspect", help="print container header and table")
    p.add_argument("input", type=Path)

    p = sub.add_parser("bench", help="time encode/decode across degrees")
    p.add_argument("--degrees", default=",".join(map(str, PAPER_DEGREES)),
                   metavar="LIST", help="comma-separated degrees (default: %(default)s)")
    p.add_argument("--reps", type=int, default=100, metavar="K",
                   help="timed repetitions per measurement (default: %(default)s)")
    p.add_argument("--format", choices=("csv", "md"), default="md",
                   help="report format (default: %(default)s)")
    p.add_argument("--decoder", choices=("reference", "fsm", "both"),
                   default="both", help="decoder variant(s) to time (default: both)")
    p.add_argument("input", type=Path)

    p = sub.add_parser("gen", help="generate an English-like random corpus")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--size", type=int, required=True, metavar="BYTES")
    p.add_argument("output", type=Path)

    return parser


def _printable(symbol: int) -> str:
    ch = chr(symbol)
    return repr(ch) if ch.isprintable() else f"0x{symbol:02x}"


def _cmd_encode(args: argparse.Namespace) -> int:
    data = args.input.read_bytes()
    args.output.write_bytes(container.encode_file(data, args.degree))
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    data = args.input.read_bytes()
    args.output.write_bytes(container.decode_file(data, decoder=args.decoder))
    return 0


def _cmd_inspect(args: argparse.Namespace) -> int:
    data = args.input.read_bytes()
    parsed = parse_container(data)
    h = parsed.header
    if h.initial_size:
        cb = chunk_bits(h.tree_degree)
        wpl = (8 * h.payload_size - h.extra_bits) // cb
    else:
        wpl = 0
    print(f"tree degree:          {h.tree_degree}")
    print(f"extra bits:           {h.extra_bits}")
    print(f"original size:        {h.initial_size} bytes")
    print(f"payload size:         {h.payload_size} bytes")
    print(f"table entries:        {h.table_entries}")
    print(f"weighted path length: {wpl}")
    print(f"compression ratio:    {h.initial_size / len(data):.3f}")
    if parsed.table is not None:
        print("table:")
        for e in parsed.table.entries:
            bits = parsed.table.bit_length(e)
            print(f"  {_printable(e.symbol):>6}  {e.code:0{bits}b}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        degrees = tuple(int(part) for part in args.degrees.split(","))
    except ValueError:
        raise ValueError(f"--degrees expects comma-separated integers, got {args.degrees!r}")
    cfg = BenchConfig(
        input=args.input.read_bytes(),
        degrees=degrees,
        repetitions=args.reps,
        decoder_variant=args.decoder,
    )
    fmt = "markdown" if args.format == "md" else "csv"
    print(render_report(run_bench(cfg), fmt), end="")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    args.output.write_bytes(generate(CorpusSpec(seed=args.seed, size_bytes=args.size)))
    return 0


_COMMANDS = {
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "inspect": _cmd_inspect,
    "bench": _cmd_bench,
    "gen": _cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (NhuffError, OSError, ValueError) as exc:
        print(f"nhuff: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
