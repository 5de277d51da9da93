"""MSB-first bit-level reading and writing over byte buffers.

The first bit written lands in the most significant position of byte 0,
so writing the 4-bit values 0b0100 and 0b0000 produces the single byte
0x40.  Padding added by :meth:`BitWriter.finalize` is always zero bits on
the low end of the last byte.
"""

from .errors import OutOfDataError

MAX_WIDTH = 32


def _check_width(width: int) -> None:
    if not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"bit width must be in 1..{MAX_WIDTH}, got {width}")


class BitWriter:
    """Accumulates values bit by bit, packing them MSB-first into bytes."""

    def __init__(self) -> None:
        self._buf = bytearray()
        self._acc = 0        # pending bits, always < 8 of them
        self._nacc = 0

    @property
    def bit_cursor(self) -> int:
        """Total number of bits written so far."""
        return len(self._buf) * 8 + self._nacc

    def write_bits(self, value: int, width: int) -> None:
        """Append the ``width`` low-order bits of ``value``, MSB first."""
        _check_width(width)
        if value < 0 or value >> width:
            raise ValueError(f"value {value} does not fit in {width} bits")
        acc = (self._acc << width) | value
        nacc = self._nacc + width
        while nacc >= 8:
            nacc -= 8
            self._buf.append((acc >> nacc) & 0xFF)
        self._acc = acc & ((1 << nacc) - 1)
        self._nacc = nacc

    def finalize(self) -> tuple[bytes, int]:
        """Return ``(bytes, pad_bits)`` with the last partial byte zero-filled.

        Does not mutate the writer; more bits may be written afterwards.
        """
        pad = (8 - self.bit_cursor % 8) % 8
        out = bytes(self._buf)
        if self._nacc:
            out += bytes([(self._acc << pad) & 0xFF])
        return out, pad


class BitReader:
    """Reads back bits in exactly the order :class:`BitWriter` wrote them."""

    def __init__(self, buffer: bytes) -> None:
        self._buf = buffer
        self.bit_cursor = 0

    def read_bits(self, width: int) -> int:
        """Consume the next ``width`` bits as an MSB-first unsigned integer."""
        _check_width(width)
        end = self.bit_cursor + width
        if end > 8 * len(self._buf):
            raise OutOfDataError(
                f"need {width} bits at offset {self.bit_cursor}, "
                f"buffer holds {8 * len(self._buf)}"
            )
        window = self._buf[self.bit_cursor // 8 : (end + 7) // 8]
        value = int.from_bytes(window, "big") >> ((8 - end % 8) % 8)
        self.bit_cursor = end
        return value & ((1 << width) - 1)
