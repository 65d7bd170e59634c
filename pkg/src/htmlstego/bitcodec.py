"""Bit packing and the length-prefixed frame carried by the case channel.

Frame layout, bit-exact::

    bits 0..31        k, the payload length in bits, unsigned big-endian
    bits 32..32+k-1   payload, most significant bit of each byte first

With a key, the frame bytes (header then payload) are XORed with the key
repeated cyclically from the first header byte before being expanded to bits.
"""

import numpy as np

from .errors import NotByteAligned, PayloadTooLarge, TruncatedFrame

HEADER_BITS = 32
MAX_PAYLOAD_BITS = 2**32 - 1


def bytes_to_bits(payload) -> np.ndarray:
    """Expand bytes to a uint8 array of 0/1, MSB first."""
    return np.unpackbits(np.frombuffer(bytes(payload), dtype=np.uint8))


def bits_to_bytes(bits) -> bytes:
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.size % 8:
        raise NotByteAligned(f"{bits.size} bits is not a whole number of bytes")
    return np.packbits(bits).tobytes()


def xor_key(data, key=None, offset=0) -> bytes:
    """XOR ``data`` with ``key`` repeated cyclically, starting at key index ``offset``."""
    data = bytes(data)
    if not key or not data:
        return data
    k = np.frombuffer(bytes(key), dtype=np.uint8)
    idx = (np.arange(len(data)) + offset) % k.size
    return (np.frombuffer(data, dtype=np.uint8) ^ k[idx]).tobytes()


def encode_frame(payload, key=None) -> np.ndarray:
    payload = bytes(payload)
    k = 8 * len(payload)
    if k > MAX_PAYLOAD_BITS:
        raise PayloadTooLarge(f"payload of {k} bits exceeds the 32-bit length header")
    frame = xor_key(k.to_bytes(4, "big") + payload, key)
    return bytes_to_bits(frame)


def decode_frame(bits, key=None) -> bytes:
    """Inverse of :func:`encode_frame`.  Bits after the payload are ignored."""
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.size < HEADER_BITS:
        raise TruncatedFrame(f"need {HEADER_BITS} header bits, got {bits.size}")
    header = xor_key(np.packbits(bits[:HEADER_BITS]).tobytes(), key)
    k = int.from_bytes(header, "big")
    if bits.size < HEADER_BITS + k:
        raise TruncatedFrame(
            f"header declares {k} payload bits but only {bits.size - HEADER_BITS} follow"
        )
    if k % 8:
        raise NotByteAligned(f"header declares {k} payload bits, not a whole number of bytes")
    body = np.packbits(bits[HEADER_BITS:HEADER_BITS + k]).tobytes()
    return xor_key(body, key, offset=HEADER_BITS // 8)
