"""Hybrid seeds: residues combined with auxiliary entropy.

Two compositions are offered: bitwise XOR masking, which is lossless and
invertible (``unmask`` recovers the residue), and an injectable
conditioner hook for callers that want to run ``encode(d) || r`` through
their own KDF or hash. No cryptographic primitive is implemented here;
the shipped conditioner is the identity on the concatenated bytes.

Bit strings are held as nonnegative ints with an explicit width and
serialize as lowercase hex, most-significant bit first. Token width
defaults to the bit width of M so no residue bit is ever truncated.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator, Literal

from .errors import OutOfRange, SourceUnavailable, WidthMismatch
from .modring import Modulus, Residue, make_modulus

# Odd 64-bit mixing constants for the counter-based test source
# (successive tokens always differ because the stride is odd).
_MIX_SEED = 0x9E3779B97F4A7C15
_MIX_STEP = 0xBF58476D1CE4E5B9

Conditioner = Callable[[bytes], bytes]


def _hex_digits(width: int) -> int:
    return (width + 3) // 4


@dataclass(frozen=True)
class EntropyToken:
    """A fixed-width bit string from some entropy source."""

    bits: int
    width: int
    source_id: str = "explicit"

    def __post_init__(self) -> None:
        if self.width < 1:
            raise OutOfRange(f"token width must be >= 1, got {self.width}")
        if not 0 <= self.bits < (1 << self.width):
            raise WidthMismatch(
                f"token bits do not fit in {self.width} bits: {self.bits:#x}"
            )

    def hex(self) -> str:
        return format(self.bits, f"0{_hex_digits(self.width)}x")

    def to_bytes(self) -> bytes:
        return self.bits.to_bytes((self.width + 7) // 8, "big")


@dataclass(frozen=True)
class HybridSeed:
    """Masked or conditioned seed bits plus their provenance."""

    h: int
    width: int
    k: int | None
    p: int
    method: Literal["xor", "conditioner"]

    def hex(self) -> str:
        return format(self.h, f"0{_hex_digits(self.width)}x")


def token_from_hex(text: str, width: int, source_id: str = "hex") -> EntropyToken:
    """Parse a hex string into a token of the given width."""
    bits = int(text, 16)
    return EntropyToken(bits=bits, width=width, source_id=source_id)


def identity_conditioner(data: bytes) -> bytes:
    """Placeholder conditioner: returns the concatenation unchanged."""
    return data


def encode_residue(d: Residue) -> bytes:
    """Big-endian byte encoding of a residue, padded to the ring width."""
    width = d.modulus.bit_width
    return d.value.to_bytes((width + 7) // 8, "big")


def mask_xor(d: Residue, r: EntropyToken, k: int | None = None) -> HybridSeed:
    """h = bits(d) XOR r, zero-padded to the token width."""
    needed = d.modulus.bit_width
    if r.width < needed:
        raise WidthMismatch(
            f"token width {r.width} cannot hold a residue of {needed} bits"
        )
    return HybridSeed(
        h=d.value ^ r.bits, width=r.width, k=k, p=d.modulus.p, method="xor"
    )


def unmask(seed: HybridSeed, r: EntropyToken) -> Residue:
    """Invert mask_xor: recover the residue from seed and token."""
    if seed.method != "xor":
        raise OutOfRange(f"only xor seeds can be unmasked, got {seed.method!r}")
    if r.width != seed.width:
        raise WidthMismatch(f"token width {r.width} != seed width {seed.width}")
    m = make_modulus(seed.p)
    value = seed.h ^ r.bits
    if value >= m.M:
        raise OutOfRange(f"unmasked value {value} is not a residue mod {m.M}")
    return Residue(value, m)


def mask_conditioned(
    d: Residue,
    r: EntropyToken,
    conditioner: Conditioner = identity_conditioner,
    k: int | None = None,
) -> HybridSeed:
    """h = conditioner(encode(d) || r); errors from the hook propagate."""
    out = conditioner(encode_residue(d) + r.to_bytes())
    return HybridSeed(
        h=int.from_bytes(out, "big"),
        width=8 * len(out),
        k=k,
        p=d.modulus.p,
        method="conditioner",
    )


def entropy_source(
    kind: Literal["deterministic_test", "os"],
    width: int | None = None,
    *,
    modulus: Modulus | None = None,
    seed: int = 0,
) -> Iterator[EntropyToken]:
    """Stream of entropy tokens; exclusive to one consumer.

    ``deterministic_test`` is a reproducible counter construction:
    token n carries ``(seed' + n * step) mod 2^width`` with fixed odd
    mixing constants, so equal seeds give identical streams and
    successive tokens always differ. ``os`` draws from the platform
    randomness facility.
    """
    if width is None:
        if modulus is None:
            raise OutOfRange("entropy_source needs an explicit width or a modulus")
        width = modulus.bit_width
    if width < 1:
        raise OutOfRange(f"token width must be >= 1, got {width}")

    if kind == "deterministic_test":
        return _counter_stream(width, seed)
    if kind == "os":
        return _os_stream(width)
    raise OutOfRange(f"unknown entropy source kind {kind!r}")


def _counter_stream(width: int, seed: int) -> Iterator[EntropyToken]:
    mask = (1 << width) - 1
    base = (seed * _MIX_SEED + _MIX_SEED) & mask
    step = _MIX_STEP & mask  # odd, hence nonzero for every width >= 1
    n = 0
    while True:
        yield EntropyToken(
            bits=(base + n * step) & mask,
            width=width,
            source_id=f"test(seed={seed})[{n}]",
        )
        n += 1


def _os_stream(width: int) -> Iterator[EntropyToken]:
    nbytes = (width + 7) // 8
    try:
        os.urandom(1)
    except NotImplementedError as exc:
        raise SourceUnavailable("platform randomness facility unavailable") from exc

    def tokens() -> Iterator[EntropyToken]:
        n = 0
        while True:
            raw = int.from_bytes(os.urandom(nbytes), "big") >> (8 * nbytes - width)
            yield EntropyToken(bits=raw, width=width, source_id=f"os[{n}]")
            n += 1

    return tokens()
