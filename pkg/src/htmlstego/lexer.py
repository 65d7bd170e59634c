"""Byte-level scanner that finds the case-insensitive letters inside HTML tags.

The scanner is a small state machine modelled on the HTML tokenizer, reduced
to what is needed to decide, for every byte of a document, whether its case
can be flipped without changing how the page is interpreted.  Only ASCII
letters of tag names and attribute names qualify.  Attribute values, comments,
``<!...>`` declarations, raw-text element content and ordinary text are left
alone.

The machine works on bytes and never decodes the document, so it is safe on
any encoding that keeps ASCII bytes as-is (UTF-8, Latin-1, ...).  It is also
streaming: :class:`TagLexer` accepts the document in arbitrary chunks.
"""

import enum
import re
from typing import List, NamedTuple

import numpy as np

__all__ = [
    "RAWTEXT_ELEMENTS",
    "Span",
    "SpanClass",
    "State",
    "TagLexer",
    "candidate_intervals",
    "candidate_mask",
    "candidate_positions",
    "classify_stream",
]


class State(enum.IntEnum):
    OUTSIDE = 0
    TAG_OPEN = 1
    END_TAG_OPEN = 2
    TAG_NAME = 3
    BEFORE_ATTR_NAME = 4
    ATTR_NAME = 5
    AFTER_ATTR_NAME = 6
    BEFORE_ATTR_VALUE = 7
    ATTR_VALUE_DOUBLE_QUOTED = 8
    ATTR_VALUE_SINGLE_QUOTED = 9
    ATTR_VALUE_UNQUOTED = 10
    MARKUP_DECLARATION = 11
    COMMENT = 12
    DOCTYPE = 13
    RAWTEXT = 14


class SpanClass(enum.Enum):
    CANDIDATE = "candidate"
    PASSTHROUGH = "passthrough"


class Span(NamedTuple):
    """Half-open byte range ``[start, end)`` with its classification."""

    start: int
    end: int
    cls: SpanClass

    def __len__(self):
        return self.end - self.start


CANDIDATE = SpanClass.CANDIDATE
PASSTHROUGH = SpanClass.PASSTHROUGH

# Elements whose content is not markup.  A tag look-alike inside them is
# literal text (or script source), so it must never be touched.
RAWTEXT_ELEMENTS = frozenset(
    {b"script", b"style", b"textarea", b"title", b"xmp", b"iframe", b"noembed", b"noframes"}
)
_MAX_NAME = max(len(name) for name in RAWTEXT_ELEMENTS)

_LETTER = frozenset(range(0x41, 0x5B)) | frozenset(range(0x61, 0x7B))
_END_TAG_TERMINATORS = frozenset(b"\t\n\f\r />")

_LETTER_RUN = re.compile(rb"[A-Za-z]+")
_WS_RUN = re.compile(rb"[\t\n\f\r ]*")
_WS_SLASH_RUN = re.compile(rb"[\t\n\f\r /]*")
_TAG_NAME_RUN = re.compile(rb"[^\t\n\f\r />]*")
_ATTR_NAME_RUN = re.compile(rb"[^\t\n\f\r />=]*")
_UNQUOTED_RUN = re.compile(rb"[^\t\n\f\r >]*")

_GT, _SLASH, _BANG, _QMARK, _EQ, _DQ, _SQ, _DASH = b'>/!?="' + b"'-"

(OUTSIDE, TAG_OPEN, END_TAG_OPEN, TAG_NAME, BEFORE_ATTR_NAME, ATTR_NAME,
 AFTER_ATTR_NAME, BEFORE_ATTR_VALUE, ATTR_VALUE_DOUBLE_QUOTED,
 ATTR_VALUE_SINGLE_QUOTED, ATTR_VALUE_UNQUOTED, MARKUP_DECLARATION, COMMENT,
 DOCTYPE, RAWTEXT) = State


class TagLexer:
    """Incremental classifier.

    Feed chunks with :meth:`feed`, then call :meth:`close`.  Each call returns
    the spans that are final so far; concatenating all returned lists gives a
    sorted, gap-free cover of the whole input in which adjacent spans always
    differ in class.

    Candidate letters of a tag are held back until the tag's ``>`` is seen.
    A tag still open at end of input contributes no candidates.
    """

    def __init__(self):
        self.state = OUTSIDE
        # Bytes whose classification needs lookahead past the end of the last
        # chunk (a possible ``</script`` or ``<!--``).  Rescanned on next feed.
        self.lookahead = b""
        self._offset = 0
        self._name = bytearray()
        self._start_tag = False
        self._rawtext_end = b""
        self._dashes = 0
        # flat [start, end, start, end, ...] candidate intervals
        self._held = []
        self._cand = []
        self._spans = []
        self._done = 0
        self._closed = False

    def feed(self, chunk) -> List[Span]:
        if self._closed:
            raise ValueError("feed() after close()")
        self._run(bytes(chunk), final=False)
        self._emit(self._held[0] if self._held else self._offset)
        return self._drain(keep_last=True)

    def close(self) -> List[Span]:
        if not self._closed:
            self._finish()
            self._emit(self._offset)
        return self._drain(keep_last=False)

    def _finish(self):
        self._run(b"", final=True)
        self._closed = True
        # unterminated tag: its letters stay as they are
        self._held.clear()

    # -- span bookkeeping -------------------------------------------------

    def _commit(self):
        held, cand = self._held, self._cand
        if not held:
            return
        if cand and cand[-1] == held[0]:
            cand[-1] = held[1]
            cand.extend(held[2:])
        else:
            cand.extend(held)
        held.clear()

    def _append(self, start, end, cls):
        spans = self._spans
        if spans and spans[-1].end == start and spans[-1].cls is cls:
            spans[-1] = Span(spans[-1].start, end, cls)
        else:
            spans.append(Span(start, end, cls))

    def _emit(self, upto):
        """Turn committed intervals, and the gaps between them, into spans up to ``upto``."""
        cand = self._cand
        k = 0
        done = self._done
        while k < len(cand):
            start, end = cand[k], cand[k + 1]
            if start > done:
                self._append(done, start, PASSTHROUGH)
            self._append(start, end, CANDIDATE)
            done = end
            k += 2
        if upto > done:
            self._append(done, upto, PASSTHROUGH)
            done = upto
        del cand[:]
        self._done = done

    def _drain(self, keep_last):
        spans = self._spans
        if keep_last and spans:
            out, self._spans = spans[:-1], spans[-1:]
        else:
            out, self._spans = spans, []
        return out

    def _hold_letters(self, buf, start, end, base):
        held = self._held
        if buf[start:end].isalpha():
            runs = ((start, end),)
        else:
            runs = (m.span() for m in _LETTER_RUN.finditer(buf, start, end))
        for s, e in runs:
            s += base
            if held and held[-1] == s:
                held[-1] = e + base
            else:
                held.append(s)
                held.append(e + base)

    def _begin_tag(self, start_tag):
        self._start_tag = start_tag
        self._name.clear()

    def _end_tag(self):
        self._commit()
        if self._start_tag and bytes(self._name) in RAWTEXT_ELEMENTS:
            self._rawtext_end = b"</" + bytes(self._name)
            self.state = RAWTEXT
        else:
            self.state = OUTSIDE

    # -- the machine ------------------------------------------------------

    def _run(self, chunk, final):
        buf = self.lookahead + chunk if self.lookahead else chunk
        base = self._offset
        stop = self._scan(buf, base, final)
        self.lookahead = buf[stop:]
        self._offset = base + stop

    def _scan(self, buf, base, final):
        """Consume ``buf``; return the index where unresolved lookahead starts."""
        n = len(buf)
        i = 0
        while i < n:
            st = self.state
            if st is OUTSIDE:
                j = buf.find(b"<", i)
                if j < 0:
                    return n
                self.state = TAG_OPEN
                i = j + 1

            elif st is TAG_OPEN:
                c = buf[i]
                if c in _LETTER:
                    self._begin_tag(True)
                    self.state = TAG_NAME
                elif c == _SLASH:
                    self.state = END_TAG_OPEN
                    i += 1
                elif c == _BANG:
                    self.state = MARKUP_DECLARATION
                    i += 1
                elif c == _QMARK:
                    # <?...> is a bogus comment to HTML parsers
                    self.state = DOCTYPE
                    i += 1
                else:
                    self.state = OUTSIDE

            elif st is END_TAG_OPEN:
                c = buf[i]
                if c in _LETTER:
                    self._begin_tag(False)
                    self.state = TAG_NAME
                elif c == _GT:
                    self.state = OUTSIDE
                    i += 1
                else:
                    self.state = DOCTYPE

            elif st is TAG_NAME:
                j = _TAG_NAME_RUN.match(buf, i).end()
                if j > i:
                    self._hold_letters(buf, i, j, base)
                    if len(self._name) <= _MAX_NAME:
                        self._name += buf[i:j].lower()
                    i = j
                    if i == n:
                        return n
                c = buf[i]
                i += 1
                if c == _GT:
                    self._end_tag()
                else:
                    self.state = BEFORE_ATTR_NAME

            elif st is BEFORE_ATTR_NAME:
                i = _WS_SLASH_RUN.match(buf, i).end()
                if i == n:
                    return n
                c = buf[i]
                if c == _GT:
                    i += 1
                    self._end_tag()
                elif c == _EQ:
                    i += 1
                    self.state = ATTR_NAME
                else:
                    self.state = ATTR_NAME

            elif st is ATTR_NAME:
                j = _ATTR_NAME_RUN.match(buf, i).end()
                if j > i:
                    self._hold_letters(buf, i, j, base)
                    i = j
                    if i == n:
                        return n
                c = buf[i]
                i += 1
                if c == _GT:
                    self._end_tag()
                elif c == _EQ:
                    self.state = BEFORE_ATTR_VALUE
                elif c == _SLASH:
                    self.state = BEFORE_ATTR_NAME
                else:
                    self.state = AFTER_ATTR_NAME

            elif st is AFTER_ATTR_NAME:
                i = _WS_RUN.match(buf, i).end()
                if i == n:
                    return n
                c = buf[i]
                if c == _GT:
                    i += 1
                    self._end_tag()
                elif c == _EQ:
                    i += 1
                    self.state = BEFORE_ATTR_VALUE
                elif c == _SLASH:
                    i += 1
                    self.state = BEFORE_ATTR_NAME
                else:
                    self.state = ATTR_NAME

            elif st is BEFORE_ATTR_VALUE:
                i = _WS_RUN.match(buf, i).end()
                if i == n:
                    return n
                c = buf[i]
                if c == _DQ:
                    i += 1
                    self.state = ATTR_VALUE_DOUBLE_QUOTED
                elif c == _SQ:
                    i += 1
                    self.state = ATTR_VALUE_SINGLE_QUOTED
                elif c == _GT:
                    i += 1
                    self._end_tag()
                else:
                    self.state = ATTR_VALUE_UNQUOTED

            elif st is ATTR_VALUE_DOUBLE_QUOTED or st is ATTR_VALUE_SINGLE_QUOTED:
                j = buf.find(b'"' if st is ATTR_VALUE_DOUBLE_QUOTED else b"'", i)
                if j < 0:
                    return n
                i = j + 1
                self.state = BEFORE_ATTR_NAME

            elif st is ATTR_VALUE_UNQUOTED:
                i = _UNQUOTED_RUN.match(buf, i).end()
                if i == n:
                    return n
                c = buf[i]
                i += 1
                if c == _GT:
                    self._end_tag()
                else:
                    self.state = BEFORE_ATTR_NAME

            elif st is MARKUP_DECLARATION:
                if buf.startswith(b"--", i):
                    i += 2
                    self._dashes = 2
                    self.state = COMMENT
                elif not final and n - i < 2 and b"--".startswith(buf[i:]):
                    return i
                else:
                    self.state = DOCTYPE

            elif st is COMMENT:
                j = buf.find(b">", i)
                if j < 0:
                    k = i + len(buf[i:].rstrip(b"-"))
                    self._dashes = self._dashes + (n - i) if k == i else n - k
                    return n
                k = j
                while k > i and buf[k - 1] == _DASH:
                    k -= 1
                dashes = self._dashes + (j - i) if k == i else j - k
                i = j + 1
                if dashes >= 2:
                    self.state = OUTSIDE
                else:
                    self._dashes = 0

            elif st is DOCTYPE:
                j = buf.find(b">", i)
                if j < 0:
                    return n
                i = j + 1
                self.state = OUTSIDE

            else:  # RAWTEXT
                end = self._rawtext_end
                j = buf.find(b"<", i)
                if j < 0:
                    return n
                m = len(end)
                probe = buf[j:j + m + 1]
                if len(probe) <= m:
                    if not final and end.startswith(probe.lower()):
                        return j
                    i = j + 1
                elif probe[:m].lower() == end and probe[m] in _END_TAG_TERMINATORS:
                    self._begin_tag(False)
                    self._held += (base + j + 2, base + j + m)
                    self._name += end[2:]
                    self.state = TAG_NAME
                    i = j + m
                else:
                    i = j + 1
        return n


def classify_stream(html, chunk_size=None) -> List[Span]:
    """Classify every byte of ``html``.

    Returns an ordered list of spans covering ``[0, len(html))`` exactly.
    ``chunk_size`` feeds the scanner in pieces; the result is the same.
    """
    data = memoryview(html).cast("B")
    lexer = TagLexer()
    if chunk_size is None:
        spans = lexer.feed(data)
    else:
        spans = []
        for start in range(0, len(data), chunk_size):
            spans.extend(lexer.feed(data[start:start + chunk_size]))
    spans.extend(lexer.close())
    return spans


def candidate_intervals(html) -> np.ndarray:
    """Candidate ``[start, end)`` pairs as an ``(n, 2)`` int array, without building spans."""
    lexer = TagLexer()
    lexer._run(bytes(html), final=False)
    lexer._finish()
    return np.array(lexer._cand, dtype=np.int64).reshape(-1, 2)


def candidate_positions(html) -> np.ndarray:
    """Strictly increasing byte offsets of all candidate letters."""
    intervals = candidate_intervals(html)
    starts, ends = intervals[:, 0], intervals[:, 1]
    lengths = ends - starts
    # offset within each span, shifted to the span's start
    before = np.cumsum(lengths) - lengths
    return np.arange(lengths.sum(), dtype=np.int64) + np.repeat(starts - before, lengths)


def candidate_mask(html) -> np.ndarray:
    """Boolean array, True at candidate offsets."""
    mask = np.zeros(len(memoryview(html).cast("B")), dtype=bool)
    mask[candidate_positions(html)] = True
    return mask
