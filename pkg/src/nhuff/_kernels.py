"""JIT-compiled hot loops for payload encoding and decoding.

Everything here operates on plain numpy arrays prepared by
:mod:`nhuff.huffman`; these functions contain no validation of their own.
Decoder kernels read ``data`` padded with one trailing zero byte so the
two-byte chunk window never needs a bounds branch.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def encode_kernel(msg, code_chunks, code_depth, cb, out):
    """Pack each symbol's code chunks MSB-first into ``out``.

    Returns the number of bytes written.  ``out`` must be large enough
    for the full bit count; the final partial byte is zero-filled low.
    """
    acc = 0
    nacc = 0
    pos = 0
    for i in range(msg.shape[0]):
        s = msg[i]
        d = code_depth[s]
        for j in range(d):
            acc = (acc << cb) | code_chunks[s, j]
            nacc += cb
            if nacc >= 8:
                nacc -= 8
                out[pos] = (acc >> nacc) & 0xFF
                pos += 1
                acc &= (1 << nacc) - 1
    if nacc > 0:
        out[pos] = (acc << (8 - nacc)) & 0xFF
        pos += 1
    return pos


@njit(cache=True)
def reference_decode_kernel(data, total_chunks, cb, kind, value, out, want):
    """Per-chunk tree walk with explicit branching on the child kind.

    ``kind`` holds 0 for a missing child, 1 for an internal child and 2
    for a leaf.  Returns ``(emitted, chunks_read, status)`` where status
    1 means a chunk led to a missing child.
    """
    mask = (1 << cb) - 1
    node = 0
    emitted = 0
    k = 0
    while emitted < want and k < total_chunks:
        bitpos = k * cb
        j = bitpos >> 3
        off = bitpos & 7
        c = (((data[j] << 8) | data[j + 1]) >> (16 - off - cb)) & mask
        k += 1
        kd = kind[node, c]
        if kd == 2:
            out[emitted] = value[node, c]
            emitted += 1
            node = 0
        elif kd == 1:
            node = value[node, c]
        else:
            return emitted, k, 1
    return emitted, k, 0


@njit(cache=True)
def fsm_decode_kernel(data, total_chunks, cb, next_state, emit_symbol, emit_flag, out, want):
    """Branch-minimal decode loop.

    The body is straight-line arithmetic: every chunk does one table row
    read, an unconditional write into ``out`` and a cursor advance by the
    row's emit flag.  Only the loop-termination test branches; invalid
    chunks route to a self-looping sentinel state that is checked after
    the loop.  Returns ``(emitted, chunks_read, final_state)``.
    """
    mask = (1 << cb) - 1
    state = 0
    emitted = 0
    k = 0
    while emitted < want and k < total_chunks:
        bitpos = k * cb
        j = bitpos >> 3
        off = bitpos & 7
        c = (((data[j] << 8) | data[j + 1]) >> (16 - off - cb)) & mask
        out[emitted] = emit_symbol[state, c]
        emitted += emit_flag[state, c]
        state = next_state[state, c]
        k += 1
    return emitted, k, state


def warm_up() -> None:
    """Force compilation of all kernels (first call is slow otherwise)."""
    msg = np.zeros(1, np.uint8)
    chunks = np.zeros((256, 1), np.uint8)
    depth = np.ones(256, np.int64)
    out = np.zeros(8, np.uint8)
    encode_kernel(msg, chunks, depth, 1, out)
    data = np.zeros(2, np.uint8)
    kind = np.full((1, 2), 2, np.uint8)
    value = np.zeros((1, 2), np.int32)
    sym = np.zeros(8, np.uint8)
    reference_decode_kernel(data, 8, 1, kind, value, sym, 8)
    nxt = np.zeros((1, 2), np.int32)
    emit = np.zeros((1, 2), np.uint8)
    flg = np.ones((1, 2), np.uint8)
    fsm_decode_kernel(data, 8, 1, nxt, emit, flg, sym, 8)
