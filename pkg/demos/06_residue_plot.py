#!/usr/bin/env python3
"""Render residue maps as deterministic SVG files.

The emitter is dependency-free and byte-stable: the same sequence always
produces the same file, which keeps the images diffable and testable.
"""

import pathlib

from cyclemod import generate_sequence, render_residue_svg

out_dir = pathlib.Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

for p, k_end in [(1, 61), (2, 61), (3, 61), (5, 165)]:
    svg = render_residue_svg(generate_sequence(p, 1, k_end))
    target = out_dir / f"residues_p{p}_k1-{k_end}.svg"
    target.write_text(svg, encoding="utf-8")
    print(f"wrote {target} ({len(svg)} bytes)")

print("\nre-rendering is byte-identical:")
again = render_residue_svg(generate_sequence(5, 1, 165))
stored = (out_dir / "residues_p5_k1-165.svg").read_text(encoding="utf-8")
print(f"  p=5 render matches file: {again == stored}")
