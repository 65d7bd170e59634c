"""
Feeding the lexer in chunks
===========================

The scanner keeps its state between chunks, so a page can be classified as it
arrives.  Splitting the input anywhere gives the same spans.
"""

from htmlstego import TagLexer, classify_stream

page = b'<p class="a">x</p><script>if (a < b) {}</SCRIPT><!-- <i> --><em>y</em>'

lexer = TagLexer()
spans = []
for i in range(0, len(page), 5):
    chunk = page[i:i + 5]
    got = lexer.feed(chunk)
    print(f"{chunk!r:12} state={lexer.state.name:<20} spans so far={len(spans) + len(got)}")
    spans.extend(got)
spans.extend(lexer.close())

for s in spans:
    print(f"{s.start:3}..{s.end:<3} {s.cls.value:<12} {page[s.start:s.end]!r}")

assert spans == classify_stream(page)
