"""Deterministic generation of English-like random word text.

Output is lowercase words (2..10 letters, drawn i.i.d. from a configurable
letter-frequency table) separated by single spaces and truncated to the
requested size.  The generator is a counter-based splitmix64 stream, fully
pinned here so identical specs reproduce identical bytes on any platform:

* ``mix(x)``: splitmix64 finalizer (xor-shift 30, multiply by
  0xBF58476D1CE4E5B9, xor-shift 27, multiply by 0x94D049BB133111EB,
  xor-shift 31), all modulo 2**64.
* stream value ``i`` for a tag: ``mix(mix(seed ^ tag) + (i+1) * 0x9E3779B97F4A7C15)``.
* word lengths come from the tag 0x574F5244 stream: ``2 + (v mod 9)``.
* letters come from the tag 0x4C545253 stream, one value per letter in
  word order: the top 53 bits form a float in [0, 1) looked up in the
  cumulative letter distribution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_WORD_TAG = 0x574F5244
_LETTER_TAG = 0x4C545253

# Relative frequencies (percent) of 'a'..'z' in English text, from the
# commonly used published table ('e' 12.7%, 't' 9.1%, ...).
ENGLISH_LETTER_WEIGHTS: tuple[float, ...] = (
    8.167, 1.492, 2.782, 4.253, 12.702, 2.228, 2.015, 6.094, 6.966,
    0.153, 0.772, 4.025, 2.406, 6.749, 7.507, 1.929, 0.095, 5.987,
    6.327, 9.056, 2.758, 0.978, 2.360, 0.150, 1.974, 0.074,
)

MIN_WORD_LEN = 2
MAX_WORD_LEN = 10


@dataclass(frozen=True)
class CorpusSpec:
    """Seeded recipe for one corpus."""

    seed: int
    size_bytes: int
    letter_weights: tuple[float, ...] = ENGLISH_LETTER_WEIGHTS


def _mix(z: np.ndarray) -> np.ndarray:
    z = z ^ (z >> np.uint64(30))
    z = z * _MIX1
    z = z ^ (z >> np.uint64(27))
    z = z * _MIX2
    return z ^ (z >> np.uint64(31))


def _stream(seed: int, tag: int, start: int, count: int) -> np.ndarray:
    """Values ``start..start+count-1`` of the tagged splitmix64 stream."""
    base = _mix(np.array([np.uint64((seed ^ tag) & 0xFFFFFFFFFFFFFFFF)]))[0]
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    return _mix(base + idx * _GOLDEN)


def _uniform01(values: np.ndarray) -> np.ndarray:
    return (values >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)


def generate(spec: CorpusSpec) -> bytes:
    """Produce exactly ``spec.size_bytes`` bytes of word text."""
    if spec.size_bytes < 1:
        raise ValueError("size_bytes must be at least 1")
    weights = np.asarray(spec.letter_weights, dtype=np.float64)
    if weights.shape != (26,):
        raise ValueError("letter_weights must hold 26 values for 'a'..'z'")
    if (weights < 0).any() or weights.sum() <= 0:
        raise ValueError("letter_weights must be non-negative with a positive sum")
    cdf = np.cumsum(weights) / weights.sum()
    cdf[-1] = 1.0  # guard against rounding drift; u is always < 1

    # Draw word lengths until the assembled text (letters plus one space
    # between words) covers the requested size.  The streams are counter
    # indexed, so drawing extra words never changes earlier output.
    n_words = spec.size_bytes // (MIN_WORD_LEN + 1) + 2
    while True:
        raw = _stream(spec.seed, _WORD_TAG, 0, n_words)
        lengths = (MIN_WORD_LEN + (raw % np.uint64(9))).astype(np.int64)
        ends = np.cumsum(lengths + 1)  # word i ends (incl. its space) at ends[i]
        if ends[-1] - 1 >= spec.size_bytes:
            break
        n_words *= 2
    n_words = int(np.searchsorted(ends - 1, spec.size_bytes, side="left")) + 1
    lengths = lengths[:n_words]
    ends = ends[:n_words]

    n_letters = int(lengths.sum())
    u = _uniform01(_stream(spec.seed, _LETTER_TAG, 0, n_letters))
    letters = np.searchsorted(cdf, u, side="right").astype(np.uint8) + ord("a")

    out = np.empty(int(ends[-1]) - 1, dtype=np.uint8)
    space_at = ends[:-1] - 1
    is_letter = np.ones(out.shape[0], dtype=bool)
    is_letter[space_at] = False
    out[space_at] = ord(" ")
    out[is_letter] = letters
    return out[: spec.size_bytes].tobytes()
