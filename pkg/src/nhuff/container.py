"""Container file format: header, encoded payload, then the code table.

Wire layout (all integers little-endian)::

    offset 0   1 byte   tree degree
    offset 1   1 byte   extra (padding) bits in the last payload byte, 0..7
    offset 2   4 bytes  original message size in bytes
    offset 6   4 bytes  payload size in bytes (encoded symbols only)
    offset 10  1 byte   table entry count (0 means 256 when the original
                        size is nonzero, otherwise 0 entries)
    offset 11  payload, then the serialized table

Each table entry is ``symbol (1 byte) | code bit length (1 byte) | code
bits packed MSB-first with zero fill``.  An empty message produces the
11-byte header alone, with every field but the degree set to zero.
Recommended file extension: ``.nhf``.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

from .errors import (
    MalformedHeaderError,
    MalformedTableError,
    TableOverflowError,
    TruncatedFileError,
)
from .huffman import (
    CodeEntry,
    CodeTable,
    assign_codes,
    build_decode_fsm,
    build_tree,
    check_degree,
    chunk_bits,
    decode_payload_fsm,
    decode_payload_reference,
    encode_payload,
    histogram,
)

_HEADER = struct.Struct("<BBIIB")
HEADER_SIZE = _HEADER.size  # 11


@dataclass(frozen=True)
class ContainerHeader:
    tree_degree: int
    extra_bits: int
    initial_size: int
    payload_size: int
    table_entries_raw: int

    @property
    def table_entries(self) -> int:
        """Effective entry count: raw 0 means 256 for nonempty messages."""
        if self.initial_size == 0:
            return 0
        return self.table_entries_raw or 256


@dataclass
class Container:
    header: ContainerHeader
    payload: bytes
    table: CodeTable | None


def serialize_table(table: CodeTable) -> bytes:
    """Serialize entries as (symbol, bit length, packed code bits) triplets."""
    out = bytearray()
    for e in table.entries:
        bits = table.bit_length(e)
        if bits > 255:
            raise TableOverflowError(f"code bit length {bits} exceeds 255")
        out.append(e.symbol)
        out.append(bits)
        pad = (8 - bits % 8) % 8
        out += (e.code << pad).to_bytes((bits + 7) // 8, "big")
    return bytes(out)


def parse_table(data: bytes, entry_count: int, degree: int) -> CodeTable:
    """Inverse of :func:`serialize_table`, with validation.

    Checks that each bit length is a positive multiple of the degree's
    chunk width, that symbols are distinct, that code padding bits are
    zero, that the entries form a prefix-free chunk code, and that the
    buffer holds exactly ``entry_count`` entries and nothing else.
    """
    if entry_count < 1:
        raise ValueError("entry_count must be at least 1")
    cb = chunk_bits(degree)
    entries: list[CodeEntry] = []
    seen: set[int] = set()
    pos = 0
    for _ in range(entry_count):
        if pos + 2 > len(data):
            raise MalformedTableError("table truncated inside an entry header")
        symbol = data[pos]
        bits = data[pos + 1]
        pos += 2
        if bits == 0 or bits % cb:
            raise MalformedTableError(
                f"code bit length {bits} is not a positive multiple of {cb}"
            )
        nbytes = (bits + 7) // 8
        if pos + nbytes > len(data):
            raise MalformedTableError("table truncated inside code bits")
        pad = (8 - bits % 8) % 8
        raw = int.from_bytes(data[pos : pos + nbytes], "big")
        if raw & ((1 << pad) - 1):
            raise MalformedTableError("nonzero padding bits in a code entry")
        pos += nbytes
        if symbol in seen:
            raise MalformedTableError(f"duplicate table entry for byte 0x{symbol:02x}")
        seen.add(symbol)
        entries.append(CodeEntry(symbol=symbol, depth=bits // cb, code=raw >> pad))
    if pos != len(data):
        raise MalformedTableError(f"{len(data) - pos} trailing bytes after the table")
    table = CodeTable(degree=degree, entries=entries)
    # Rebuilding the decode tree validates prefix-freedom and chunk ranges.
    build_decode_fsm(table)
    return table


def encode_file(message: bytes, degree: int) -> bytes:
    """Encode ``message`` into a complete container file."""
    check_degree(degree)
    if len(message) >= 1 << 32:
        raise ValueError("message larger than the 4-byte size field allows")
    if not message:
        return _HEADER.pack(degree, 0, 0, 0, 0)
    tree = build_tree(histogram(message), degree)
    table = assign_codes(tree)
    payload, extra_bits = encode_payload(message, table)
    header = _HEADER.pack(
        degree, extra_bits, len(message), len(payload), len(table.entries) % 256
    )
    return header + payload + serialize_table(table)


def parse_container(data: bytes) -> Container:
    """Split a container into header, payload and table, validating layout."""
    if len(data) < HEADER_SIZE:
        raise TruncatedFileError(
            f"container needs at least {HEADER_SIZE} bytes, got {len(data)}"
        )
    degree, extra_bits, initial_size, payload_size, entries_raw = _HEADER.unpack_from(data)
    header = ContainerHeader(degree, extra_bits, initial_size, payload_size, entries_raw)
    check_degree(degree)
    if extra_bits > 7:
        raise MalformedHeaderError(f"extra bits field is {extra_bits}, must be 0..7")
    if initial_size == 0:
        if payload_size or entries_raw or extra_bits:
            raise MalformedHeaderError(
                "empty-message container must have zero payload, table and padding"
            )
        if len(data) != HEADER_SIZE:
            raise MalformedHeaderError("trailing bytes after an empty-message container")
        return Container(header=header, payload=b"", table=None)
    if HEADER_SIZE + payload_size > len(data):
        raise TruncatedFileError(
            f"header declares a {payload_size}-byte payload but only "
            f"{len(data) - HEADER_SIZE} bytes follow"
        )
    payload = data[HEADER_SIZE : HEADER_SIZE + payload_size]
    table = parse_table(data[HEADER_SIZE + payload_size :], header.table_entries, degree)
    return Container(header=header, payload=payload, table=table)


def decode_file(data: bytes, decoder: str = "fsm") -> bytes:
    """Restore the original message from a container file.

    ``decoder`` selects the branch-minimal state machine (``"fsm"``, the
    default) or the tree-walking reference decoder (``"reference"``).
    """
    if decoder not in ("fsm", "reference"):
        raise ValueError(f"unknown decoder variant {decoder!r}")
    c = parse_container(data)
    if c.header.initial_size == 0:
        return b""
    if decoder == "fsm":
        fsm = build_decode_fsm(c.table)
        return decode_payload_fsm(c.payload, c.header.extra_bits, fsm,
                                  c.header.initial_size)
    return decode_payload_reference(c.payload, c.header.extra_bits, c.table,
                                    c.header.initial_size)
