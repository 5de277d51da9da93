"""n-ary Huffman compression for tree degrees 2 through 16."""

from .bench import BenchConfig, DegreeReport, PAPER_DEGREES, render_report, run_bench
from .bitio import BitReader, BitWriter
from .container import (
    Container,
    ContainerHeader,
    HEADER_SIZE,
    decode_file,
    encode_file,
    parse_container,
    parse_table,
    serialize_table,
)
from .corpus import ENGLISH_LETTER_WEIGHTS, CorpusSpec, generate
from .errors import (
    CorruptStreamError,
    EmptyInputError,
    InconsistentPaddingError,
    MalformedHeaderError,
    MalformedTableError,
    NhuffError,
    OutOfDataError,
    TableOverflowError,
    TruncatedFileError,
    TruncatedStreamError,
    UnknownSymbolError,
    UnsupportedDegreeError,
)
from .huffman import (
    MAX_DEGREE,
    MIN_DEGREE,
    CodeEntry,
    CodeTable,
    DecodeFsm,
    HuffmanTree,
    Node,
    SymbolHistogram,
    assign_codes,
    build_decode_fsm,
    build_tree,
    chunk_bits,
    decode_payload_fsm,
    decode_payload_reference,
    encode_payload,
    histogram,
    placeholder_count,
    weighted_path_length,
)

__version__ = "0.1.0"
