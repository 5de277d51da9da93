"""Shared fixtures and independent oracles used across the test suite.

The oracles here deliberately avoid the library's own bit packing and
tree machinery: bit packing goes through Python strings, decoding through
a prefix dictionary, and the binary Huffman oracle is a textbook heap
merge over nested tuples.
"""

from __future__ import annotations

import heapq
import itertools

import pytest

from nhuff import CorpusSpec, generate
from nhuff.huffman import CodeTable

MISSISSIPPI = b"Mississippi River"
ALL_DEGREES = tuple(range(2, 17))


def bitstring_pack(pairs: list[tuple[int, int]]) -> tuple[bytes, int]:
    """Concatenate (value, width) pairs via strings; zero-pad to a byte."""
    bits = "".join(format(value, f"0{width}b") for value, width in pairs)
    pad = (8 - len(bits) % 8) % 8
    bits += "0" * pad
    data = bytes(int(bits[i : i + 8], 2) for i in range(0, len(bits), 8))
    return data, pad


def chunked_decode_oracle(payload: bytes, extra_bits: int, table: CodeTable,
                          symbol_count: int) -> bytes:
    """Decode by matching growing chunk-aligned prefixes in a dict."""
    cb = table.chunk_bits
    bits = "".join(format(b, "08b") for b in payload)
    usable = len(bits) - extra_bits
    by_code = {
        format(e.code, f"0{e.depth * cb}b"): e.symbol for e in table.entries
    }
    out = bytearray()
    pos = 0
    while len(out) < symbol_count:
        for length in range(cb, usable - pos + 1, cb):
            symbol = by_code.get(bits[pos : pos + length])
            if symbol is not None:
                out.append(symbol)
                pos += length
                break
        else:
            raise AssertionError("oracle could not match a code")
    assert pos == usable, "oracle consumed a different bit count than declared"
    return bytes(out)


def binary_huffman_depths(counts: dict[int, int]) -> dict[int, int]:
    """Textbook binary Huffman: merge the two lightest nodes until one
    remains.  Ties break on insertion order, symbols inserted ascending."""
    heap: list[tuple[int, int, object]] = []
    tick = itertools.count()
    for symbol in sorted(counts):
        heap.append((counts[symbol], next(tick), symbol))
    heapq.heapify(heap)
    if len(heap) == 1:
        return {heap[0][2]: 1}
    while len(heap) > 1:
        w1, _, a = heapq.heappop(heap)
        w2, _, b = heapq.heappop(heap)
        heapq.heappush(heap, (w1 + w2, next(tick), (a, b)))
    depths: dict[int, int] = {}

    def walk(node: object, depth: int) -> None:
        if isinstance(node, tuple):
            walk(node[0], depth + 1)
            walk(node[1], depth + 1)
        else:
            depths[node] = depth

    walk(heap[0][2], 0)
    return depths


def min_placeholders(degree: int, s_dst: int) -> int:
    """Smallest p >= 0 with (s_dst + p) congruent to 1 modulo degree-1."""
    return next(
        p for p in itertools.count() if (s_dst + p) % (degree - 1) == 1 % (degree - 1)
    )


@pytest.fixture(scope="session")
def paper_scale_corpus() -> bytes:
    """The ~1388 KB English-like corpus used by the benchmark criteria."""
    return generate(CorpusSpec(seed=20260810, size_bytes=1_421_312))
