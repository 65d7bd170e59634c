import io
import subprocess
import sys

import pytest

from htmlstego.cli import main

COVER = (b"<!DOCTYPE html>\r\n<html lang=en><head><title>T</title></head>"
         b"<body class='main'><div id=\"x\"><p>Hello</p><span data-role=\"y\">w</span>"
         b"<img src=a.png alt=\"\"/></div></body></html>\r\n")


def run(*argv, stdin=b""):
    out, err = io.BytesIO(), io.StringIO()
    code = main(list(argv), stdin=io.BytesIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def cover(tmp_path):
    path = tmp_path / "page.html"
    path.write_bytes(COVER * 3)
    return path


def test_file_round_trip(tmp_path, cover):
    secret = tmp_path / "secret.bin"
    secret.write_bytes(b"\x00\r\n\xff\x1a")
    stego = tmp_path / "stego.html"
    recovered = tmp_path / "recovered.bin"
    assert run("embed", "--cover", str(cover), "--msg", str(secret), "--out", str(stego))[0] == 0
    assert run("extract", "--stego", str(stego), "--out", str(recovered))[0] == 0
    assert recovered.read_bytes() == secret.read_bytes()
    assert stego.read_bytes().lower() == cover.read_bytes().lower()


def test_streams_and_key(cover):
    code, stego, _ = run("embed", "--cover", str(cover), "--msg-hex", "c0ffee", "--key", "pw")
    assert code == 0
    code, out, _ = run("extract", "--stego", "-", "--key", "pw", "--format", "hex", stdin=stego)
    assert (code, out) == (0, b"c0ffee\n")


def test_message_from_stdin(cover):
    code, stego, _ = run("embed", "--cover", str(cover), stdin=b"piped")
    assert code == 0
    assert run("extract", "--stego", "-", stdin=stego)[1] == b"piped"


def test_deterministic(cover):
    a = run("embed", "--cover", str(cover), "--msg-hex", "0102", "--key", "k")
    b = run("embed", "--cover", str(cover), "--msg-hex", "0102", "--key", "k")
    assert a == b


def test_capacity_output(tmp_path):
    page = tmp_path / "forty.html"
    page.write_bytes(b"<" + b"a" * 20 + b" " + b"b" * 20 + b">text")
    code, out, _ = run("capacity", "--cover", str(page))
    assert code == 0
    assert out.decode().splitlines() == [
        "total_candidates=40",
        "header_bits=32",
        "payload_capacity_bits=8",
        "payload_capacity_bytes=1",
    ]


def test_capacity_error(tmp_path):
    page = tmp_path / "forty.html"
    page.write_bytes(b"<" + b"a" * 20 + b" " + b"b" * 20 + b">text")
    code, out, err = run("embed", "--cover", str(page), "--msg-hex", "0102")
    assert code == 2
    assert out == b""
    assert "48" in err and "40" in err
    assert len(err.strip().splitlines()) == 1


def test_extract_error(tmp_path):
    page = tmp_path / "short.html"
    page.write_bytes(b"<b>no room</b>")
    code, _, err = run("extract", "--stego", str(page))
    assert code == 3 and err


def test_analyze(tmp_path, cover):
    stego = tmp_path / "s.html"
    run("embed", "--cover", str(cover), "--msg-hex", "ff", "--out", str(stego))
    code, out, _ = run("analyze", "--cover", str(cover), "--stego", str(stego))
    lines = out.decode().splitlines()
    assert code == 0
    assert lines[-1] == "case_folded_equal=true"
    assert all(line.startswith("0x") for line in lines[:-1])


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["hide"],
        ["embed"],
        ["extract"],
        ["analyze", "--cover", "x"],
        ["embed", "--cover", "-"],
        ["analyze", "--cover", "-", "--stego", "-"],
        ["embed", "--cover", "x", "--msg", "y", "--msg-hex", "00"],
        ["extract", "--stego", "x", "--format", "b64"],
    ],
)
def test_usage_errors(argv):
    code, _, err = run(*argv)
    assert code == 4 and err


def test_bad_hex(cover):
    assert run("embed", "--cover", str(cover), "--msg-hex", "zz")[0] == 4


def test_missing_file(tmp_path):
    code, _, err = run("capacity", "--cover", str(tmp_path / "nope.html"))
    assert code == 4 and "nope.html" in err


def test_module_entry_point(cover):
    proc = subprocess.run([sys.executable, "-m", "htmlstego", "capacity", "--cover", str(cover)],
                          capture_output=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith(b"total_candidates=")
