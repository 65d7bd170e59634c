"""
Cover vs stego byte histogram
=============================

A valid embed only moves counts between the two cases of a letter.  This
script prints the comparison report and, if matplotlib is installed, plots
the two histograms side by side.
"""

import random

import numpy as np

from htmlstego import capacity, compare, embed, format_report, render_equivalent

rng = random.Random(0)
tags = ["div", "span", "p", "a", "em", "section"]
attrs = ["class", "id", "style", "title"]
parts = []
for _ in range(400):
    t = rng.choice(tags)
    a = rng.choice(attrs)
    parts.append(f'<{t} {a}="v{rng.randint(0, 9)}">text {rng.randint(0, 99)}</{t}>\n')
cover = "".join(parts).encode()

payload = rng.randbytes(capacity(cover).payload_capacity_bytes)
stego = embed(cover, payload)

report = compare(cover, stego)
print(format_report(report))
print("render equivalent:", bool(render_equivalent(cover, stego)))

for letter, (lower, upper) in sorted(report.per_letter_shift.items()):
    if lower or upper:
        print(f"{letter}: lowercase {lower:+d}, uppercase {upper:+d}")

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    x = np.arange(256)
    fig, ax = plt.subplots(figsize=(12, 4))
    ax.bar(x - 0.2, report.cover_counts, width=0.4, label="cover")
    ax.bar(x + 0.2, report.stego_counts, width=0.4, label="stego")
    ax.set_xlim(31, 127)
    ax.set_xlabel("byte value")
    ax.set_ylabel("count")
    ax.legend()
    fig.savefig("histogram.png", dpi=120, bbox_inches="tight")
    print("wrote histogram.png")
