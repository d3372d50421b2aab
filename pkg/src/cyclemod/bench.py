"""Timing-uniformity measurements for the two inversion variants.

Exact algorithmic step counts are the portable signal: the Euclid
variant's loop count varies with the operand while the ladder variant
performs the same number of steps for every unit at fixed p. Wall-clock
statistics are also collected, but they depend on the host and are
reported as advisory only.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .errors import ClockUnavailable, OutOfRange
from .modring import inverse_ct_counted, inverse_euclid_counted, make_modulus
from .seedgen import Variant, compute_a

WARMUP_PASSES = 3
MIN_REPS = 30

_COUNTED = {"euclid": inverse_euclid_counted, "ct": inverse_ct_counted}


def _counted_inverter(variant: str):
    try:
        return _COUNTED[variant]
    except KeyError:
        raise OutOfRange(f"variant must be one of {sorted(_COUNTED)}, got {variant!r}")


@dataclass(frozen=True)
class TimingStats:
    """Per-variant iteration counts and wall-time statistics."""

    variant: Variant
    p: int
    samples: int
    mean_ns: float
    median_ns: float
    max_jitter_ns: float
    cv: float
    iter_min: int
    iter_max: int

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise OutOfRange("samples must be >= 1")
        if self.iter_min > self.iter_max:
            raise OutOfRange("iter_min must not exceed iter_max")
        if self.variant == "ct" and self.iter_min != self.iter_max:
            raise OutOfRange("ct variant must have an exact iteration count")


def _operands(p: int, k_range: tuple[int, int]):
    k_start, k_end = k_range
    if not 1 <= k_start <= k_end:
        raise OutOfRange(f"need 1 <= k_start <= k_end, got [{k_start}, {k_end}]")
    m = make_modulus(p)
    return [compute_a(k, m) for k in range(k_start, k_end + 1)]


def count_iterations(
    variant: Variant, p: int, k_range: tuple[int, int]
) -> tuple[int, int]:
    """Exact min/max inner-loop step counts over the operand range."""
    counted = _counted_inverter(variant)
    counts = [counted(a)[1] for a in _operands(p, k_range)]
    return min(counts), max(counts)


def time_inversion(
    variant: Variant, p: int, k_range: tuple[int, int], reps: int
) -> TimingStats:
    """Wall-clock statistics over all (k, rep) pairs, warm-up excluded."""
    if reps < MIN_REPS:
        raise OutOfRange(f"reps must be >= {MIN_REPS}, got {reps}")
    try:
        time.perf_counter_ns()
    except Exception as exc:  # pragma: no cover - no such platform in CI
        raise ClockUnavailable("monotonic high-resolution clock missing") from exc

    counted = _counted_inverter(variant)
    operands = _operands(p, k_range)

    counts = [counted(a)[1] for a in operands]
    for _ in range(WARMUP_PASSES):
        for a in operands:
            counted(a)

    samples_ns: list[int] = []
    clock = time.perf_counter_ns
    for _ in range(reps):
        for a in operands:
            t0 = clock()
            counted(a)
            samples_ns.append(clock() - t0)

    mean_ns = statistics.fmean(samples_ns)
    return TimingStats(
        variant=variant,
        p=p,
        samples=len(samples_ns),
        mean_ns=mean_ns,
        median_ns=float(statistics.median(samples_ns)),
        max_jitter_ns=float(max(samples_ns) - min(samples_ns)),
        cv=statistics.pstdev(samples_ns) / mean_ns if mean_ns > 0 else 0.0,
        iter_min=min(counts),
        iter_max=max(counts),
    )


def stats_row(stats: TimingStats, k_range: tuple[int, int], reps: int) -> dict:
    """Flat JSON-ready row for one variant."""
    return {
        "variant": stats.variant,
        "p": stats.p,
        "k_start": k_range[0],
        "k_end": k_range[1],
        "reps": reps,
        "mean_ns": stats.mean_ns,
        "median_ns": stats.median_ns,
        "max_jitter_ns": stats.max_jitter_ns,
        "cv": stats.cv,
        "iter_min": stats.iter_min,
        "iter_max": stats.iter_max,
    }


def compare_report(p: int, k_range: tuple[int, int], reps: int) -> dict:
    """Side-by-side stats for both variants plus the step-count verdict.

    The cv comparison is advisory: scheduler noise on a multitasking
    host can swamp sub-microsecond calls, so only the iteration counts
    are contractual.
    """
    euclid = time_inversion("euclid", p, k_range, reps)
    ct = time_inversion("ct", p, k_range, reps)
    return {
        "p": p,
        "k_start": k_range[0],
        "k_end": k_range[1],
        "reps": reps,
        "rows": [
            stats_row(euclid, k_range, reps),
            stats_row(ct, k_range, reps),
        ],
        "ct_iterations_constant": ct.iter_min == ct.iter_max,
        "euclid_iteration_spread": euclid.iter_max - euclid.iter_min,
        "advisory_cv_ct_not_above_euclid": ct.cv <= euclid.cv,
    }
