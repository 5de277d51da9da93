"""Exception types raised by the nhuff codec.

Everything data-dependent (corrupt files, bad tables, truncated streams)
raises a subclass of :class:`NhuffError` so callers can catch one type at
the top level.  Plain programming errors (bad widths, out-of-range values
passed to the bit I/O layer) raise ``ValueError`` as usual.
"""


class NhuffError(Exception):
    """Base class for all nhuff codec errors."""


class OutOfDataError(NhuffError):
    """A bit read ran past the end of the underlying buffer."""


class EmptyInputError(NhuffError):
    """A Huffman tree was requested for a histogram with no symbols."""


class UnknownSymbolError(NhuffError):
    """The message contains a byte with no entry in the code table."""


class CorruptStreamError(NhuffError):
    """A chunk led to a child that does not exist in the decode tree."""


class TruncatedStreamError(NhuffError):
    """The payload ran out of bits before all symbols were decoded."""


class InconsistentPaddingError(NhuffError):
    """Bits consumed by the decoder disagree with the declared padding."""


class TruncatedFileError(NhuffError):
    """A container file is shorter than its declared sections."""


class UnsupportedDegreeError(NhuffError):
    """Tree degree outside the supported range 2..16."""


class MalformedHeaderError(NhuffError):
    """Container header fields are internally inconsistent."""


class MalformedTableError(NhuffError):
    """The serialized code table could not be parsed or is not a valid
    prefix-free code."""


class TableOverflowError(NhuffError):
    """A code is too long for the one-byte length field of the table
    wire format (more than 255 bits)."""
