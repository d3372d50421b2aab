#!/usr/bin/env python3
"""Recover (k, n, d) from the integer identity behind the residues.

For any p >= 1 and s >= 0 the integer A = 3^p * (s+1) - 1 factors
uniquely as 2^(k-1) * (2 * 3^p * n + d) once k-1 is pinned to the full
power of two dividing A. Reducing the witness d modulo 3^p lands exactly
on the generated residue d_k, tying the integer identity to the modular
walk.
"""

from cyclemod import compute_d, decompose_identity, make_modulus, verify_identity

print("witnesses for a small (p, s) grid:")
print("  p  s    A       k  n  d      verified")
for p in (2, 3, 5):
    for s in (0, 1, 2):
        w = decompose_identity(p, s)
        ok = verify_identity(w)
        print(f"  {w.p}  {w.s}  {w.A:>6}   {w.k}  {w.n}  {w.d:>5}  {ok}")

print("\nthe witness d reduces to the canonical residue:")
w = decompose_identity(3, 1)
m = make_modulus(3)
print(f"  (p=3, s=1): d = {w.d}, d mod 27 = {w.d % 27}, "
      f"d_k for k={w.k} is {compute_d(w.k, m).value}")

print("\nround trip over s = 0..999 for p = 4:")
ok = all(verify_identity(decompose_identity(4, s)) for s in range(1000))
print(f"  all verified: {ok}")
