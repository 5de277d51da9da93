"""Core n-ary Huffman coding: histograms, tree construction, code tables,
payload encoding and two decoders.

Codes are built over trees whose internal nodes all have exactly ``n``
children (``n`` in 2..16).  Zero-weight placeholder leaves are inserted
first so the leaf count satisfies ``count % (n - 1) == 1``, which lets the
bottom-up merge of the ``n`` lightest nodes terminate in a single root.
Each edge to child ``i`` carries the value ``i`` in ``ceil(log2 n)`` bits
(one "chunk"), so every code is a whole number of chunks and the decoder
consumes the payload chunk by chunk.

Two decoders are provided: a reference tree walker that branches on every
chunk, and a table-driven state machine whose inner loop is free of
data-dependent conditional control flow.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import (
    CorruptStreamError,
    EmptyInputError,
    InconsistentPaddingError,
    MalformedTableError,
    TableOverflowError,
    TruncatedStreamError,
    UnknownSymbolError,
    UnsupportedDegreeError,
)

MIN_DEGREE = 2
MAX_DEGREE = 16

# Largest code size representable by the table wire format's one-byte
# bit-length field.
MAX_CODE_BITS = 255


def check_degree(degree: int) -> None:
    """Raise unless ``degree`` is a supported tree degree."""
    if not MIN_DEGREE <= degree <= MAX_DEGREE:
        raise UnsupportedDegreeError(
            f"tree degree must be in {MIN_DEGREE}..{MAX_DEGREE}, got {degree}"
        )


def chunk_bits(degree: int) -> int:
    """Number of bits labelling each tree edge: ``ceil(log2(degree))``."""
    check_degree(degree)
    return (degree - 1).bit_length()


def placeholder_count(degree: int, s_dst: int) -> int:
    """Zero-weight leaves needed so ``s_dst`` symbols fill a complete tree.

    Computed as ``(n-2) - ((s_dst + (n-3)) mod (n-1))``; the result is the
    smallest non-negative count making the total leaf count congruent to 1
    modulo ``n - 1``.  Binary trees never need placeholders.
    """
    check_degree(degree)
    if s_dst < 2:
        raise ValueError("placeholder_count requires at least 2 distinct symbols")
    return (degree - 2) - ((s_dst + (degree - 3)) % (degree - 1))


@dataclass
class SymbolHistogram:
    """Occurrence counts for each of the 256 byte values."""

    counts: list[int]
    total: int

    @property
    def distinct_count(self) -> int:
        return sum(1 for c in self.counts if c)


def histogram(message: bytes) -> SymbolHistogram:
    """Count byte occurrences in ``message``."""
    if message:
        counts = np.bincount(
            np.frombuffer(message, dtype=np.uint8), minlength=256
        ).tolist()
    else:
        counts = [0] * 256
    return SymbolHistogram(counts=counts, total=len(message))


class Node:
    """Tree node: a symbol leaf, a zero-weight placeholder leaf, or an
    internal node with exactly ``degree`` children."""

    __slots__ = ("weight", "symbol", "children")

    def __init__(self, weight: int, symbol: int | None = None,
                 children: list[Node] | None = None):
        self.weight = weight
        self.symbol = symbol
        self.children = children

    @property
    def is_leaf(self) -> bool:
        return self.symbol is not None

    @property
    def is_placeholder(self) -> bool:
        return self.symbol is None and self.children is None

    @property
    def is_internal(self) -> bool:
        return self.children is not None


@dataclass
class HuffmanTree:
    degree: int
    root: Node


def build_tree(hist: SymbolHistogram, degree: int) -> HuffmanTree:
    """Build the degree-``degree`` Huffman tree for a histogram.

    Repeatedly merges the ``degree`` lightest unparented nodes into a new
    parent until a single root remains.  Ties are broken by a sequence
    number (symbol leaves in ascending byte order, then placeholders, then
    merged nodes in creation order) so the result is deterministic.
    Within a merged node the children are ordered lightest first, with
    placeholders always sorted behind real nodes so placeholder codes
    occupy the largest chunk values.

    A histogram with a single distinct symbol gets ``degree - 1``
    placeholders so the lone symbol still receives a one-chunk code.
    """
    check_degree(degree)
    s_dst = hist.distinct_count
    if s_dst == 0:
        raise EmptyInputError("cannot build a Huffman tree for an empty histogram")
    if s_dst == 1:
        n_placeholders = degree - 1
    else:
        n_placeholders = placeholder_count(degree, s_dst)

    heap: list[tuple[int, int, Node]] = []
    seq = 0
    for symbol in range(256):
        count = hist.counts[symbol]
        if count:
            heap.append((count, seq, Node(count, symbol=symbol)))
            seq += 1
    for _ in range(n_placeholders):
        heap.append((0, seq, Node(0)))
        seq += 1
    heapq.heapify(heap)

    while len(heap) > 1:
        picked = [heapq.heappop(heap) for _ in range(degree)]
        picked.sort(key=lambda item: (item[2].is_placeholder, item[0], item[1]))
        children = [item[2] for item in picked]
        parent = Node(sum(node.weight for node in children), children=children)
        heapq.heappush(heap, (parent.weight, seq, parent))
        seq += 1

    return HuffmanTree(degree=degree, root=heap[0][2])


@dataclass(frozen=True)
class CodeEntry:
    """One symbol's code: ``depth`` edges, ``depth * chunk_bits`` bits."""

    symbol: int
    depth: int
    code: int


@dataclass
class CodeTable:
    """Symbol-to-code mapping for one tree degree.

    Codes are chunk-aligned: every bit length is ``depth * chunk_bits``
    and no entry's chunk sequence is a prefix of another's.
    """

    degree: int
    entries: list[CodeEntry] = field(default_factory=list)

    @property
    def chunk_bits(self) -> int:
        return chunk_bits(self.degree)

    def bit_length(self, entry: CodeEntry) -> int:
        return entry.depth * self.chunk_bits


def assign_codes(tree: HuffmanTree) -> CodeTable:
    """Read codes off the tree: edge to child ``i`` contributes chunk ``i``.

    Placeholder leaves produce no entries.  Entries come out in ascending
    code order (depth-first, children left to right).
    """
    cb = chunk_bits(tree.degree)
    entries: list[CodeEntry] = []

    def walk(node: Node, depth: int, code: int) -> None:
        if node.is_leaf:
            if depth * cb > MAX_CODE_BITS:
                raise TableOverflowError(
                    f"code for symbol {node.symbol} needs {depth * cb} bits"
                )
            entries.append(CodeEntry(symbol=node.symbol, depth=depth, code=code))
        elif node.is_internal:
            for i, child in enumerate(node.children):
                walk(child, depth + 1, (code << cb) | i)
        # placeholders are skipped

    walk(tree.root, 0, 0)
    return CodeTable(degree=tree.degree, entries=entries)


def weighted_path_length(tree: HuffmanTree) -> int:
    """Sum of ``weight * depth`` over all leaves (placeholders weigh 0).

    Equals the number of edge traversals a decoder performs over the whole
    payload; payload bits before padding are ``chunk_bits * WPL``.
    """
    total = 0
    stack = [(tree.root, 0)]
    while stack:
        node, depth = stack.pop()
        if node.is_internal:
            stack.extend((child, depth + 1) for child in node.children)
        elif node.is_leaf:
            total += node.weight * depth
    return total


def _encode_tables(table: CodeTable) -> tuple[np.ndarray, np.ndarray]:
    """Per-symbol chunk sequences as arrays for the encode kernel."""
    cb = table.chunk_bits
    max_depth = max((e.depth for e in table.entries), default=1)
    code_chunks = np.zeros((256, max_depth), dtype=np.uint8)
    code_depth = np.zeros(256, dtype=np.int64)
    mask = (1 << cb) - 1
    for e in table.entries:
        code_depth[e.symbol] = e.depth
        for j in range(e.depth):
            code_chunks[e.symbol, j] = (e.code >> (cb * (e.depth - 1 - j))) & mask
    return code_chunks, code_depth


def encode_payload(message: bytes, table: CodeTable) -> tuple[bytes, int]:
    """Replace each byte with its code, packed MSB-first.

    Returns ``(payload, extra_bits)`` where ``extra_bits`` zero bits were
    appended to reach a byte boundary.
    """
    if not message:
        return b"", 0
    code_chunks, code_depth = _encode_tables(table)
    msg = np.frombuffer(message, dtype=np.uint8)
    depths = code_depth[msg]
    if not depths.all():
        bad = int(msg[int(np.argmin(depths))])
        raise UnknownSymbolError(f"byte 0x{bad:02x} has no code table entry")
    total_bits = int(depths.sum()) * table.chunk_bits
    out = np.zeros((total_bits + 7) // 8, dtype=np.uint8)
    _kernels.encode_kernel(msg, code_chunks, code_depth, table.chunk_bits, out)
    return out.tobytes(), (8 - total_bits % 8) % 8


def _decode_arrays(table: CodeTable) -> tuple[np.ndarray, np.ndarray]:
    """Rebuild the decode tree from a code table as flat arrays.

    Row ``s`` describes internal node ``s`` (row 0 is the root); cell
    ``[s, c]`` holds kind 0 (no child), 1 (internal, value = row index) or
    2 (leaf, value = symbol).  Raises if the entries are not prefix-free
    or use chunk values no ``degree``-ary node can have.
    """
    cb = table.chunk_bits
    fanout = 1 << cb
    mask = fanout - 1
    kind: list[list[int]] = [[0] * fanout]
    value: list[list[int]] = [[0] * fanout]
    for e in table.entries:
        state = 0
        for j in range(e.depth):
            c = (e.code >> (cb * (e.depth - 1 - j))) & mask
            if c >= table.degree:
                raise MalformedTableError(
                    f"chunk value {c} is not a valid child index for degree {table.degree}"
                )
            if j == e.depth - 1:
                if kind[state][c] != 0:
                    raise MalformedTableError("code table is not prefix-free")
                kind[state][c] = 2
                value[state][c] = e.symbol
            else:
                if kind[state][c] == 2:
                    raise MalformedTableError("code table is not prefix-free")
                if kind[state][c] == 0:
                    kind[state][c] = 1
                    value[state][c] = len(kind)
                    kind.append([0] * fanout)
                    value.append([0] * fanout)
                state = value[state][c]
    return np.array(kind, dtype=np.uint8), np.array(value, dtype=np.int32)


def _finish_decode(payload: bytes, extra_bits: int, chunks_read: int,
                   cb: int) -> None:
    consumed = chunks_read * cb
    expected = 8 * len(payload) - extra_bits
    if consumed != expected:
        raise InconsistentPaddingError(
            f"decoder consumed {consumed} bits but payload declares {expected}"
        )


def decode_payload_reference(payload: bytes, extra_bits: int, table: CodeTable,
                             symbol_count: int) -> bytes:
    """Decode by walking the reconstructed tree one chunk at a time.

    Emits symbols until ``symbol_count`` are produced, then verifies that
    exactly ``8 * len(payload) - extra_bits`` bits were consumed.
    """
    cb = table.chunk_bits
    kind, value = _decode_arrays(table)
    if symbol_count == 0:
        _finish_decode(payload, extra_bits, 0, cb)
        return b""
    data = np.zeros(len(payload) + 1, dtype=np.uint8)
    data[: len(payload)] = np.frombuffer(payload, dtype=np.uint8)
    out = np.empty(symbol_count, dtype=np.uint8)
    total_chunks = (8 * len(payload)) // cb
    emitted, chunks_read, status = _kernels.reference_decode_kernel(
        data, total_chunks, cb, kind, value, out, symbol_count
    )
    if status:
        raise CorruptStreamError(
            f"chunk {chunks_read - 1} led to a child that does not exist"
        )
    if emitted < symbol_count:
        raise TruncatedStreamError(
            f"payload exhausted after {emitted} of {symbol_count} symbols"
        )
    _finish_decode(payload, extra_bits, chunks_read, cb)
    return out.tobytes()


@dataclass
class DecodeFsm:
    """Table-driven decoder state machine.

    State 0 is the tree root; each transition on a chunk value yields
    ``(next_state, emit_symbol, emit_flag)``.  Leaf transitions return to
    state 0 with ``emit_flag`` 1.  Chunk values with no corresponding
    child transition to ``sentinel``, a self-looping trap state, so the
    decode loop never needs a per-chunk validity branch.
    """

    chunk_bits: int
    next_state: np.ndarray
    emit_symbol: np.ndarray
    emit_flag: np.ndarray
    sentinel: int

    @property
    def state_count(self) -> int:
        """Number of real states (excluding the sentinel row)."""
        return self.sentinel


def build_decode_fsm(table: CodeTable) -> DecodeFsm:
    """Flatten the decode tree into transition tables, one state per
    internal node plus a trailing sentinel row."""
    kind, value = _decode_arrays(table)
    n_states, fanout = kind.shape
    sentinel = n_states
    next_state = np.full((n_states + 1, fanout), sentinel, dtype=np.int32)
    emit_symbol = np.zeros((n_states + 1, fanout), dtype=np.uint8)
    emit_flag = np.zeros((n_states + 1, fanout), dtype=np.uint8)
    body_next = next_state[:n_states]
    leaf = kind == 2
    internal = kind == 1
    body_next[leaf] = 0
    body_next[internal] = value[internal]
    emit_symbol[:n_states][leaf] = value[leaf].astype(np.uint8)
    emit_flag[:n_states][leaf] = 1
    return DecodeFsm(
        chunk_bits=table.chunk_bits,
        next_state=next_state,
        emit_symbol=emit_symbol,
        emit_flag=emit_flag,
        sentinel=sentinel,
    )


def decode_payload_fsm(payload: bytes, extra_bits: int, fsm: DecodeFsm,
                       symbol_count: int) -> bytes:
    """Decode with the branch-minimal state machine.

    Output is byte-identical to :func:`decode_payload_reference`; corrupt
    chunks are detected after the loop via the sentinel state.
    """
    cb = fsm.chunk_bits
    if symbol_count == 0:
        _finish_decode(payload, extra_bits, 0, cb)
        return b""
    data = np.zeros(len(payload) + 1, dtype=np.uint8)
    data[: len(payload)] = np.frombuffer(payload, dtype=np.uint8)
    out = np.empty(symbol_count, dtype=np.uint8)
    total_chunks = (8 * len(payload)) // cb
    emitted, chunks_read, state = _kernels.fsm_decode_kernel(
        data, total_chunks, cb, fsm.next_state, fsm.emit_symbol,
        fsm.emit_flag, out, symbol_count
    )
    if state == fsm.sentinel:
        raise CorruptStreamError("a chunk led to a child that does not exist")
    if emitted < symbol_count:
        raise TruncatedStreamError(
            f"payload exhausted after {emitted} of {symbol_count} symbols"
        )
    _finish_decode(payload, extra_bits, chunks_read, cb)
    return out.tobytes()
