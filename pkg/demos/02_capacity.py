"""
How much fits in a page
=======================

Capacity is one bit per candidate letter minus the 32-bit length header.
"""

import numpy as np

from htmlstego import CapacityExceeded, capacity, embed

rows = []
for n_rows in [1, 5, 20, 100, 1000]:
    page = b"<table class='grid'>" + b"<tr><td align='left'>x</td><td>y</td></tr>" * n_rows + b"</table>"
    report = capacity(page)
    rows.append((len(page), report.total_candidates, report.payload_capacity_bytes))

print(f"{'page bytes':>10} {'letters':>8} {'payload bytes':>14}")
for size, letters, room in rows:
    print(f"{size:>10} {letters:>8} {room:>14}")

sizes = np.array([r[0] for r in rows])
letters = np.array([r[1] for r in rows])
print("letters per page byte:", np.round(letters / sizes, 3))

# Filling the page exactly works, one more byte does not.
page = b"<table class='grid'>" + b"<tr><td align='left'>x</td><td>y</td></tr>" * 20 + b"</table>"
room = capacity(page).payload_capacity_bytes
embed(page, b"\xff" * room)
try:
    embed(page, b"\xff" * (room + 1))
except CapacityExceeded as e:
    print("overflow:", e)
