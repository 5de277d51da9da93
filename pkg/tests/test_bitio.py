import pytest
from hypothesis import given
from hypothesis import strategies as st

from nhuff import BitReader, BitWriter, OutOfDataError

from conftest import bitstring_pack


def test_msb_first_packing():
    w = BitWriter()
    w.write_bits(0b0100, 4)
    w.write_bits(0b0000, 4)
    data, pad = w.finalize()
    assert data == b"\x40"
    assert pad == 0


def test_single_zero_bit():
    w = BitWriter()
    w.write_bits(0, 1)
    assert w.bit_cursor == 1
    data, pad = w.finalize()
    assert data == b"\x00"
    assert pad == 7


def test_seventeen_nibbles():
    # Frozen from the string-concatenation oracle: 68 one-bits pack into
    # nine bytes with a zero-filled low nibble.
    w = BitWriter()
    for _ in range(17):
        w.write_bits(0b1111, 4)
    data, pad = w.finalize()
    assert (data, pad) == (bytes.fromhex("fffffffffffffffff0"), 4)
    assert (data, pad) == bitstring_pack([(0b1111, 4)] * 17)


def test_finalize_empty_and_aligned():
    assert BitWriter().finalize() == (b"", 0)
    w = BitWriter()
    w.write_bits(0xABCD, 16)
    assert w.finalize() == (b"\xab\xcd", 0)


def test_finalize_does_not_consume():
    w = BitWriter()
    w.write_bits(0b101, 3)
    first = w.finalize()
    assert first == (b"\xa0", 5)
    w.write_bits(0b11111, 5)
    assert w.finalize() == (b"\xbf", 0)


def test_write_rejects_bad_arguments():
    w = BitWriter()
    for width in (0, -1, 33):
        with pytest.raises(ValueError):
            w.write_bits(0, width)
    with pytest.raises(ValueError):
        w.write_bits(2, 1)
    with pytest.raises(ValueError):
        w.write_bits(-1, 4)
    with pytest.raises(ValueError):
        w.write_bits(1 << 32, 32)


def test_read_fig4_layout():
    r = BitReader(b"\x40")
    assert r.read_bits(4) == 0b0100
    assert r.read_bits(4) == 0b0000


def test_read_full_byte():
    assert BitReader(b"\xff").read_bits(8) == 255


def test_read_past_end():
    r = BitReader(b"\x40")
    r.read_bits(8)
    with pytest.raises(OutOfDataError):
        r.read_bits(1)
    with pytest.raises(ValueError):
        r.read_bits(0)


pairs = st.lists(
    st.integers(min_value=1, max_value=32).flatmap(
        lambda w: st.tuples(st.integers(min_value=0, max_value=2**w - 1), st.just(w))
    ),
    max_size=200,
)


@given(pairs)
def test_round_trip(seq):
    w = BitWriter()
    for value, width in seq:
        w.write_bits(value, width)
    total_bits = sum(width for _, width in seq)
    assert w.bit_cursor == total_bits
    data, pad = w.finalize()
    assert 0 <= pad <= 7
    assert len(data) == (total_bits + 7) // 8
    assert (data, pad) == bitstring_pack(seq)

    r = BitReader(data)
    for value, width in seq:
        assert r.read_bits(width) == value
    if pad:
        assert r.read_bits(pad) == 0  # padding is zero-filled


def test_round_trip_thousand_sequences():
    import random

    rng = random.Random(8128)
    for _ in range(1000):
        seq = []
        for _ in range(rng.randrange(0, 40)):
            width = rng.randrange(1, 33)
            seq.append((rng.randrange(2**width), width))
        w = BitWriter()
        for value, width in seq:
            w.write_bits(value, width)
        data, pad = w.finalize()
        assert (data, pad) == bitstring_pack(seq)
        r = BitReader(data)
        assert [r.read_bits(width) for _, width in seq] == [v for v, _ in seq]


@given(st.integers(min_value=0, max_value=100))
def test_pad_complements_cursor(nbits):
    w = BitWriter()
    for _ in range(nbits):
        w.write_bits(1, 1)
    _, pad = w.finalize()
    assert (w.bit_cursor + pad) % 8 == 0
