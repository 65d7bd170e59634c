"""Hide bits in the letter case of tag and attribute names.

Each candidate letter found by :mod:`htmlstego.lexer` carries one bit:
lowercase for 0, uppercase for 1.  The letters are used in document order, and
letters past the end of the message keep their original case.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bitcodec import HEADER_BITS, decode_frame, encode_frame
from .errors import CapacityExceeded
from .lexer import candidate_positions

__all__ = [
    "CapacityReport",
    "StegoOptions",
    "capacity",
    "embed",
    "embed_bits",
    "extract",
    "extract_bits",
    "force_lower",
    "force_upper",
    "stego_char",
]


@dataclass(frozen=True)
class StegoOptions:
    key: Optional[bytes] = None


@dataclass(frozen=True)
class CapacityReport:
    total_candidates: int
    header_bits: int
    payload_capacity_bits: int
    payload_capacity_bytes: int

    @classmethod
    def from_candidates(cls, total):
        bits = max(0, total - HEADER_BITS)
        return cls(total, HEADER_BITS, bits, bits // 8)


def force_lower(c: int) -> int:
    return c + 32 if 0x41 <= c <= 0x5A else c


def force_upper(c: int) -> int:
    return c - 32 if 0x61 <= c <= 0x7A else c


def stego_char(c: int, bit: int) -> int:
    """Case-force one byte for one bit."""
    return force_upper(c) if bit else force_lower(c)


def _force_lower_array(chars):
    return np.where((chars >= 0x41) & (chars <= 0x5A), chars + 32, chars).astype(np.uint8)


def _force_upper_array(chars):
    return np.where((chars >= 0x61) & (chars <= 0x7A), chars - 32, chars).astype(np.uint8)


def _write_bits(cover, positions, bits):
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.size > positions.size:
        raise CapacityExceeded(int(bits.size), int(positions.size))
    out = np.frombuffer(bytes(cover), dtype=np.uint8).copy()
    where = positions[:bits.size]
    chars = out[where]
    out[where] = np.where(bits.astype(bool), _force_upper_array(chars), _force_lower_array(chars))
    return out.tobytes()


def embed_bits(cover, bits) -> bytes:
    """Write a raw bit sequence (no length header) into ``cover``."""
    return _write_bits(cover, candidate_positions(cover), bits)


def embed(cover, payload, options=None) -> bytes:
    """Return ``cover`` with the framed ``payload`` written into its tag letters.

    Raises :class:`CapacityExceeded` if the header plus payload do not fit.
    """
    key = options.key if options else None
    return _write_bits(cover, candidate_positions(cover), encode_frame(payload, key))


def extract_bits(stego, count=None) -> np.ndarray:
    """Read the case channel: 0 for each lowercase candidate, 1 for uppercase."""
    positions = candidate_positions(stego)
    if count is not None:
        positions = positions[:count]
    chars = np.frombuffer(bytes(stego), dtype=np.uint8)[positions]
    return (chars <= 0x5A).astype(np.uint8)


def extract(stego, options=None) -> bytes:
    key = options.key if options else None
    return decode_frame(extract_bits(stego), key)


def capacity(cover) -> CapacityReport:
    return CapacityReport.from_candidates(int(candidate_positions(cover).size))
