"""Timing harness for encode/decode throughput across tree degrees.

Runs single-threaded, times with the monotonic high-resolution clock
(``time.perf_counter``), performs one untimed warm-up per degree and
variant, and reports means over the configured repetitions.  Throughput
is original-file megabytes (2**20 bytes, matching the sizes used in the
result tables) per second; file I/O is never inside a timed region
because all operations work on in-memory buffers.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from statistics import fmean
from typing import Callable

from . import _kernels
from .container import decode_file, encode_file
from .huffman import build_tree, check_degree, histogram, weighted_path_length

PAPER_DEGREES = (2, 3, 4, 5, 6, 7, 8, 16)
DECODER_VARIANTS = ("reference", "fsm")

_MB = float(1 << 20)


@dataclass
class BenchConfig:
    input: bytes
    degrees: tuple[int, ...] = PAPER_DEGREES
    repetitions: int = 100
    decoder_variant: str = "both"  # "reference", "fsm" or "both"


@dataclass
class DegreeReport:
    degree: int
    compression_ratio: float  # original bytes / total container bytes
    compressed_bytes: int
    wpl: int
    encode_time_s: float
    encode_throughput_mb_s: float
    decode_time_s: dict[str, float] = field(default_factory=dict)
    decode_throughput_mb_s: dict[str, float] = field(default_factory=dict)


def _measure(fn: Callable[[], object]) -> float:
    """Time one call, re-running in doubling batches if the clock reports
    a zero duration."""
    batch = 1
    while True:
        start = time.perf_counter()
        for _ in range(batch):
            fn()
        elapsed = time.perf_counter() - start
        if elapsed > 0.0:
            return elapsed / batch
        batch *= 2


def run_bench(cfg: BenchConfig) -> list[DegreeReport]:
    """Measure every configured degree and return one report per degree."""
    if not cfg.input:
        raise ValueError("benchmark input must not be empty")
    if cfg.repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    if not cfg.degrees:
        raise ValueError("degrees must not be empty")
    for degree in cfg.degrees:
        check_degree(degree)
    if cfg.decoder_variant == "both":
        variants = DECODER_VARIANTS
    elif cfg.decoder_variant in DECODER_VARIANTS:
        variants = (cfg.decoder_variant,)
    else:
        raise ValueError(f"unknown decoder variant {cfg.decoder_variant!r}")

    _kernels.warm_up()
    data = cfg.input
    size_mb = len(data) / _MB
    reports = []
    for degree in cfg.degrees:
        container = encode_file(data, degree)  # warm-up and ratio artifact
        wpl = weighted_path_length(build_tree(histogram(data), degree))
        encode_times = [_measure(lambda: encode_file(data, degree))
                        for _ in range(cfg.repetitions)]
        encode_mean = fmean(encode_times)
        report = DegreeReport(
            degree=degree,
            compression_ratio=len(data) / len(container),
            compressed_bytes=len(container),
            wpl=wpl,
            encode_time_s=encode_mean,
            encode_throughput_mb_s=size_mb / encode_mean,
        )
        for variant in variants:
            restored = decode_file(container, decoder=variant)  # warm-up
            if restored != data:
                raise RuntimeError(
                    f"decoder {variant!r} corrupted the degree-{degree} round trip"
                )
            times = [_measure(lambda: decode_file(container, decoder=variant))
                     for _ in range(cfg.repetitions)]
            mean = fmean(times)
            report.decode_time_s[variant] = mean
            report.decode_throughput_mb_s[variant] = size_mb / mean
        reports.append(report)
    return reports


_COLUMNS = (
    "degree", "ratio", "compressed_kb", "wpl",
    "encode_s", "encode_mb_per_s",
    "decode_reference_s", "decode_reference_mb_per_s",
    "decode_fsm_s", "decode_fsm_mb_per_s",
)


def _row(report: DegreeReport) -> list[str]:
    cells = [
        str(report.degree),
        f"{report.compression_ratio:.3f}",
        f"{report.compressed_bytes / 1024:.1f}",
        str(report.wpl),
        f"{report.encode_time_s:.4f}",
        f"{report.encode_throughput_mb_s:.2f}",
    ]
    for variant in DECODER_VARIANTS:
        if variant in report.decode_time_s:
            cells.append(f"{report.decode_time_s[variant]:.4f}")
            cells.append(f"{report.decode_throughput_mb_s[variant]:.2f}")
        else:
            cells.extend(["", ""])
    return cells


def render_report(reports: list[DegreeReport], format: str = "markdown") -> str:
    """Render reports as CSV or a markdown table, one row per degree.

    Times carry 4 decimals, ratios 3, throughputs 2.
    """
    if not reports:
        raise ValueError("no reports to render")
    rows = [_row(r) for r in reports]
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_COLUMNS)
        writer.writerows(rows)
        return buf.getvalue()
    if format == "markdown":
        lines = [
            "| " + " | ".join(_COLUMNS) + " |",
            "|" + "|".join(" --- " for _ in _COLUMNS) + "|",
        ]
        lines += ["| " + " | ".join(row) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {format!r}")
