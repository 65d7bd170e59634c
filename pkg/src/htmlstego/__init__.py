"""Data hiding in the letter case of HTML tag and attribute names."""

from .analysis import HistogramReport, RenderCheck, char_histogram, compare, format_report, render_equivalent
from .bitcodec import bits_to_bytes, bytes_to_bits, decode_frame, encode_frame, xor_key
from .engine import (
    CapacityReport,
    StegoOptions,
    capacity,
    embed,
    embed_bits,
    extract,
    extract_bits,
    force_lower,
    force_upper,
)
from .errors import CapacityExceeded, FrameError, NotByteAligned, PayloadTooLarge, StegoError, TruncatedFrame
from .lexer import Span, SpanClass, TagLexer, candidate_positions, classify_stream

__version__ = "0.1.0"
