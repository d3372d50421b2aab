#!/usr/bin/env python3
"""Score residue sequences and gate them on the composite threshold.

The composite is 0.4 * coverage + 0.4 * uniformity + 0.2 * (1 - bias):
full-period sequences maximize it, short or truncated ranges lose
coverage and uniformity and fall under the 0.90 admission bar.
"""

from cyclemod import admit, generate_sequence, make_modulus, score

print("p=5: progressively longer k-ranges (bucket count 9)")
print("  k-range      cd      rud     mbi     ecs    admitted")
for k_end in (10, 40, 81, 120, 162):
    report = score(generate_sequence(5, 1, k_end))
    print(
        f"  1..{k_end:<6} {report.cd:6.3f}  {report.rud:6.3f}  "
        f"{report.mbi:6.3f}  {report.ecs:6.3f}   {admit(report)}"
    )

print("\nsame ranges, stricter threshold 0.99:")
for k_end in (120, 162):
    report = score(generate_sequence(5, 1, k_end))
    print(f"  1..{k_end:<6} ecs={report.ecs:.3f}  admitted={admit(report, 0.99)}")

print("\nfull periods maximize the score for every ring with p >= 2:")
for p in range(2, 7):
    phi = make_modulus(p).phi
    report = score(generate_sequence(p, 1, phi), buckets=3)
    print(f"  p={p}: ecs over one period = {report.ecs:.6f}")
