import os

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from htmlstego import bitcodec
from htmlstego.bitcodec import (
    HEADER_BITS,
    bits_to_bytes,
    bytes_to_bits,
    decode_frame,
    encode_frame,
    xor_key,
)
from htmlstego.errors import NotByteAligned, PayloadTooLarge, TruncatedFrame

from oracles import reference_frame_bits

keys = st.one_of(st.none(), st.binary(max_size=16))


def test_bytes_to_bits():
    assert bytes_to_bits(b"\xa5").tolist() == [1, 0, 1, 0, 0, 1, 0, 1]
    assert bytes_to_bits(b"").tolist() == []
    assert bytes_to_bits(b"\x00\xff").tolist() == [0] * 8 + [1] * 8


def test_bits_to_bytes():
    assert bits_to_bytes([1, 0, 1, 0, 0, 1, 0, 1]) == b"\xa5"
    assert bits_to_bytes([]) == b""
    with pytest.raises(NotByteAligned):
        bits_to_bytes([1] * 7)


def test_header_value():
    bits = encode_frame(b"abc")
    assert bits_to_bytes(bits[:HEADER_BITS]) == b"\x00\x00\x00\x18"
    assert bits.size == 32 + 24


def test_empty_frame():
    assert encode_frame(b"").tolist() == [0] * 32
    assert decode_frame(np.zeros(32, dtype=np.uint8)) == b""


def test_truncated():
    header = bytes_to_bits((64).to_bytes(4, "big"))
    with pytest.raises(TruncatedFrame):
        decode_frame(np.concatenate([header, np.ones(8, dtype=np.uint8)]))
    with pytest.raises(TruncatedFrame):
        decode_frame(np.zeros(31, dtype=np.uint8))


def test_unaligned_length():
    header = bytes_to_bits((12).to_bytes(4, "big"))
    with pytest.raises(NotByteAligned):
        decode_frame(np.concatenate([header, np.zeros(16, dtype=np.uint8)]))


def test_payload_too_large(monkeypatch):
    monkeypatch.setattr(bitcodec, "MAX_PAYLOAD_BITS", 15)
    encode_frame(b"a")
    with pytest.raises(PayloadTooLarge):
        encode_frame(b"ab")


def test_trailing_bits_ignored():
    bits = np.concatenate([encode_frame(b"hi"), np.ones(13, dtype=np.uint8)])
    assert decode_frame(bits) == b"hi"


def test_large_round_trip():
    payload = os.urandom(2**20)
    assert decode_frame(encode_frame(payload, b"k3y"), b"k3y") == payload


@given(st.binary(max_size=2048), keys)
@settings(max_examples=1000)
def test_round_trip(payload, key):
    bits = encode_frame(payload, key)
    assert bits.size == HEADER_BITS + 8 * len(payload)
    assert decode_frame(bits, key) == payload


@given(st.binary(max_size=256), keys)
def test_matches_reference_layout(payload, key):
    assert encode_frame(payload, key).tolist() == reference_frame_bits(payload, key)


@given(st.binary(max_size=256), st.binary(max_size=16), st.integers(0, 20))
def test_xor_involution(data, key, offset):
    assert xor_key(xor_key(data, key, offset), key, offset) == data


@given(st.binary(max_size=256))
def test_empty_key_is_identity(data):
    assert xor_key(data, b"") == data
    assert xor_key(data, None) == data
    assert encode_frame(data, b"").tolist() == encode_frame(data).tolist()
