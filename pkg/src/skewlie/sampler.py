"""Seeded random generation of algebras and batch genericity experiments.

Structure constants are drawn as integers in [-H, H] from a SplitMix64
stream seeded by seed XOR index, so every trial is a pure function of the
configuration and its index: trials can be evaluated in any order (or in
parallel) and the aggregate report never changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import SkewAlgebra, is_lie
from .structmats import is_homlie, orbit_dimension

_MASK = (1 << 64) - 1


class SplitMix64:
    """Minimal splittable 64-bit generator (Steele-Lea-Flood finalizer)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], rejection-sampled for exactness."""
        size = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % size)
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + (u % size)


@dataclass(frozen=True)
class SampleConfig:
    """One experiment: ``trials`` algebras of dimension ``dim`` whose structure
    constants are integers drawn uniformly from [-height, height]."""

    dim: int
    trials: int
    seed: int
    height: int = 2

    def __post_init__(self):
        if not 2 <= self.dim <= 6:
            raise ValueError(f"dim {self.dim} outside 2..6")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.height < 1:
            raise ValueError("height must be >= 1")
        if not 0 <= self.seed < (1 << 64):
            raise ValueError("seed must fit in 64 bits")


def random_algebra(cfg: SampleConfig, index: int) -> SkewAlgebra:
    """Deterministic trial: the same (seed, index) always yields the same algebra."""
    if not 0 <= index < cfg.trials:
        raise ValueError(f"index {index} outside 0..{cfg.trials - 1}")
    rng = SplitMix64(cfg.seed ^ index)
    n, h = cfg.dim, cfg.height
    table = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            table[(i, j)] = [Fraction(rng.randint(-h, h)) for _ in range(n)]
    return SkewAlgebra(n, table)


@dataclass(frozen=True)
class GenericityReport:
    """Aggregates over all trials of one configuration."""

    rank_histogram_M: dict[int, int]
    homlie_count: int
    lie_count: int
    trials: int


def run_experiment(cfg: SampleConfig) -> GenericityReport:
    """Rank of the derivation matrix, Hom-Lie admissibility, and Lie-ness per
    trial, merged index by index."""
    histogram: dict[int, int] = {}
    homlie_count = 0
    lie_count = 0
    for index in range(cfg.trials):
        a = random_algebra(cfg, index)
        r = orbit_dimension(a)
        histogram[r] = histogram.get(r, 0) + 1
        if is_homlie(a):
            homlie_count += 1
        if is_lie(a):
            lie_count += 1
    return GenericityReport(histogram, homlie_count, lie_count, cfg.trials)
