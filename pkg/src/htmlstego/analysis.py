"""Byte-frequency comparison of a cover page and its stego version.

A valid embed only swaps letters between their upper- and lowercase bins, so
per-letter totals and every non-letter bin must come out identical.
"""

import string
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from .lexer import candidate_mask

__all__ = [
    "HistogramReport",
    "RenderCheck",
    "char_histogram",
    "compare",
    "format_report",
    "render_equivalent",
]

_UPPER = np.arange(0x41, 0x5B)
_LOWER = _UPPER + 32
_NON_LETTER = np.setdiff1d(np.arange(256), np.concatenate([_UPPER, _LOWER]))


def char_histogram(doc) -> np.ndarray:
    """256-bin count of byte values."""
    return np.bincount(np.frombuffer(bytes(doc), dtype=np.uint8), minlength=256)


@dataclass
class HistogramReport:
    cover_counts: np.ndarray
    stego_counts: np.ndarray
    case_folded_equal: bool
    # letter -> (stego - cover in the lowercase bin, same for uppercase)
    per_letter_shift: Dict[str, Tuple[int, int]] = field(default_factory=dict)

    def lines(self):
        return format_report(self).splitlines()


def compare(cover, stego) -> HistogramReport:
    c = char_histogram(cover)
    s = char_histogram(stego)
    folded = np.array_equal(c[_LOWER] + c[_UPPER], s[_LOWER] + s[_UPPER])
    rest = np.array_equal(c[_NON_LETTER], s[_NON_LETTER])
    shift = {
        letter: (int(s[lo] - c[lo]), int(s[up] - c[up]))
        for letter, lo, up in zip(string.ascii_lowercase, _LOWER, _UPPER)
    }
    return HistogramReport(c, s, bool(folded and rest), shift)


def _printable(v):
    return chr(v) if 0x21 <= v <= 0x7E else "."


def format_report(report: HistogramReport) -> str:
    """One line per byte value seen in either document, then the verdict.

    ``0xVV <char> cover=N stego=M delta=D`` where ``D = M - N``.
    """
    out = []
    c, s = report.cover_counts, report.stego_counts
    for v in np.flatnonzero((c > 0) | (s > 0)):
        v = int(v)
        out.append(
            f"0x{v:02x} {_printable(v)} cover={c[v]} stego={s[v]} delta={int(s[v]) - int(c[v])}"
        )
    out.append(f"case_folded_equal={'true' if report.case_folded_equal else 'false'}")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class RenderCheck:
    """Outcome of :func:`render_equivalent`; truthy when equivalent."""

    equivalent: bool
    offset: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.equivalent


def render_equivalent(cover, stego) -> RenderCheck:
    """Check that ``stego`` differs from ``cover`` only by case flips of tag letters.

    On failure, ``offset`` is the first byte position at fault.
    """
    cover, stego = bytes(cover), bytes(stego)
    if len(cover) != len(stego):
        n = min(len(cover), len(stego))
        return RenderCheck(False, n, f"length differs: cover {len(cover)}, stego {len(stego)}")
    a = np.frombuffer(cover, dtype=np.uint8)
    b = np.frombuffer(stego, dtype=np.uint8)
    diff = np.flatnonzero(a != b)
    if diff.size == 0:
        return RenderCheck(True)
    mask = candidate_mask(cover)
    # candidates are ASCII letters, so XOR 0x20 is exactly the case partner
    bad = diff[~mask[diff] | ((a[diff] ^ b[diff]) != 0x20)]
    if bad.size == 0:
        return RenderCheck(True)
    pos = int(bad[0])
    if not mask[pos]:
        why = "byte changed outside a tag or attribute name"
    else:
        why = "byte is not the same letter in the other case"
    return RenderCheck(False, pos, f"{why} at offset {pos}: {a[pos]:#04x} -> {b[pos]:#04x}")
