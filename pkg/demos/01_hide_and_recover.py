"""
Hiding a message in tag case
============================

Walk through embedding a short message into a page and reading it back.
"""

from htmlstego import StegoOptions, capacity, classify_stream, embed, extract
from htmlstego.lexer import SpanClass

page = b"""<!DOCTYPE html>
<html lang="en">
<head><title>Field notes</title>
<style>body { font-family: serif }</style></head>
<body class="journal">
<h2 align="center">Tuesday</h2>
<p id="entry-1">Rain all morning. <a href="Notes.html" target="_blank">older notes</a></p>
<table border="1"><tr><td>wind</td><td>NW</td></tr></table>
<!-- <b>draft</b> -->
</body>
</html>
"""

# Only letters of tag names and attribute names can carry bits.  Everything
# else, including attribute values and the comment, is left exactly as is.
for span in classify_stream(page):
    if span.cls is SpanClass.CANDIDATE:
        print(page[span.start:span.end].decode(), end=" ")
print()

room = capacity(page)
print(room)

# The frame starts with a 32-bit length, so this page has room for only a
# few bytes of payload.
message = b"hi!"[: room.payload_capacity_bytes]
stego = embed(page, message)
print(stego.decode())

assert extract(stego) == message

# With a key the bits look different but the page stays render-identical.
opts = StegoOptions(key=b"umbrella")
stego_keyed = embed(page, message, opts)
print(extract(stego_keyed, opts))
