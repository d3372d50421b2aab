"""Inverse-consistent residue sequences over Z/3^pZ.

The generator maps an index k to the unit

    d_k = -(2^(k-1))^-1 mod 3^p

so every record satisfies 2^(k-1) * d_k = -1 (mod 3^p). Because 2
generates the full unit group mod 3^p, the d_k walk is periodic with
period phi(3^p) and visits every unit exactly once per period.

The same residues arise from the integer identity

    3^p * (s+1) - 1 = 2^(k-1) * (2 * 3^p * n + d)

which ``decompose_identity`` recovers uniquely by splitting off the full
power of two of the left-hand side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .errors import OutOfRange
from .modring import (
    Modulus,
    Residue,
    inverse_ct,
    inverse_euclid,
    make_modulus,
    mul_mod,
    neg_mod,
    pow_mod,
)

Variant = Literal["euclid", "ct"]

_INVERTERS = {"euclid": inverse_euclid, "ct": inverse_ct}

# Orbit enumeration walks one full period; phi(3^26) is the documented
# practical ceiling.
ORBIT_P_LIMIT = 26


def _inverter(variant: str):
    try:
        return _INVERTERS[variant]
    except KeyError:
        raise OutOfRange(f"variant must be one of {sorted(_INVERTERS)}, got {variant!r}")


@dataclass(frozen=True)
class SeedRecord:
    """One generated step: index k, exponential a_k, inverse-consistent d_k."""

    k: int
    a_k: Residue
    d_k: Residue


@dataclass(frozen=True)
class SeedSequence:
    """An ordered run of SeedRecords over a consecutive k-range."""

    modulus: Modulus
    records: tuple[SeedRecord, ...]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[SeedRecord]:
        return iter(self.records)

    @property
    def k_start(self) -> int:
        return self.records[0].k

    @property
    def k_end(self) -> int:
        return self.records[-1].k

    def d_values(self) -> list[int]:
        return [rec.d_k.value for rec in self.records]


@dataclass(frozen=True)
class IdentityWitness:
    """Integer-level decomposition A = 2^(k-1) * (2 * 3^p * n + d).

    Fields are stored as produced; ``verify_identity`` is the checker, so
    deliberately inconsistent witnesses can be constructed for testing.
    Note d is the *unreduced* odd cofactor remainder in [0, 2*3^p); its
    reduction mod 3^p equals the canonical d_k.
    """

    p: int
    s: int
    A: int
    k: int
    n: int
    d: int


def compute_a(k: int, m: Modulus) -> Residue:
    """a_k = 2^(k-1) mod M."""
    if k < 1:
        raise OutOfRange(f"k must be >= 1, got {k}")
    return pow_mod(m.residue(2), k - 1)


def compute_d(k: int, m: Modulus, variant: Variant = "ct") -> Residue:
    """d_k = -(a_k)^-1 mod M; a_k is always a unit, so this never fails."""
    invert = _inverter(variant)
    return neg_mod(invert(compute_a(k, m)))


def generate_sequence(
    p: int, k_start: int, k_end: int, variant: Variant = "ct"
) -> SeedSequence:
    """One SeedRecord per k in [k_start, k_end], deterministic across runs."""
    if not 1 <= k_start <= k_end:
        raise OutOfRange(f"need 1 <= k_start <= k_end, got [{k_start}, {k_end}]")
    m = make_modulus(p)
    invert = _inverter(variant)
    records = []
    a = compute_a(k_start, m)
    two = m.residue(2)
    for k in range(k_start, k_end + 1):
        records.append(SeedRecord(k=k, a_k=a, d_k=neg_mod(invert(a))))
        a = mul_mod(a, two)
    return SeedSequence(modulus=m, records=tuple(records))


def orbit(p: int, variant: Variant = "ct") -> tuple[set[int], int]:
    """Distinct d_k values over one full period and their count.

    Walks d_k for k = 1..phi(M) using d_{k+1} = d_k * 2^-1 (the inverses
    of consecutive powers of two differ by a factor of 2^-1, and negation
    commutes with that), which avoids one full inversion per step. The
    equivalence with per-k inversion is covered by tests.
    """
    if p > ORBIT_P_LIMIT:
        raise OutOfRange(f"orbit enumeration is capped at p <= {ORBIT_P_LIMIT}, got {p}")
    m = make_modulus(p)
    invert = _inverter(variant)
    inv2 = invert(m.residue(2))
    seen: set[int] = set()
    # k = 1: a_1 = 1, so d_1 = M - 1; thereafter divide by 2 mod M.
    d = neg_mod(m.residue(1))
    for _ in range(m.phi):
        seen.add(d.value)
        d = mul_mod(d, inv2)
    return seen, len(seen)


def decompose_identity(p: int, s: int) -> IdentityWitness:
    """Split A = 3^p(s+1) - 1 as 2^(k-1) * (2*3^p*n + d) with odd cofactor.

    k - 1 is the full 2-adic valuation of A, making the decomposition
    unique with 0 <= d < 2*3^p (and d odd whenever k > 1).
    """
    if p < 1:
        raise OutOfRange(f"p must be >= 1, got {p}")
    if s < 0:
        raise OutOfRange(f"s must be >= 0, got {s}")
    M = 3**p
    A = M * (s + 1) - 1
    # v2(A): A >= 2 here, so (A & -A) isolates the lowest set bit.
    v2 = (A & -A).bit_length() - 1
    q = A >> v2
    n, d = divmod(q, 2 * M)
    return IdentityWitness(p=p, s=s, A=A, k=v2 + 1, n=n, d=d)


def verify_identity(w: IdentityWitness) -> bool:
    """Exact integer check of the witness plus congruence with compute_d."""
    M = 3**w.p
    if w.A != M * (w.s + 1) - 1:
        return False
    if w.A != 2 ** (w.k - 1) * (2 * M * w.n + w.d):
        return False
    return w.d % M == compute_d(w.k, make_modulus(w.p)).value
