#!/usr/bin/env python3
"""Pilot runs behind the frozen statistical thresholds in the acceptance suite.

The acceptance tests assert that, over 200 trials at seed 42 and height 2,
the fraction of dimension-3 samples with derivation-matrix rank 8 and the
fraction of dimension-4 samples with no Hom-Lie structure are both >= 0.95.
This script reproduces those rates (and a few extra seeds to show margin);
rerun it if the sampler or the threshold ever needs revisiting.
"""

import sys
from fractions import Fraction

from skewlie import SampleConfig, run_experiment


def main() -> int:
    seeds = [42, 0, 1, 123]
    print(f"{'seed':>6} {'dim-3 rank-8':>14} {'dim-3 Hom-Lie':>14} "
          f"{'dim-4 non-Hom-Lie':>18}")
    for seed in seeds:
        r3 = run_experiment(SampleConfig(dim=3, trials=200, seed=seed, height=2))
        r4 = run_experiment(SampleConfig(dim=4, trials=200, seed=seed, height=2))
        rank8 = Fraction(r3.rank_histogram_M.get(8, 0), r3.trials)
        homlie3 = Fraction(r3.homlie_count, r3.trials)
        non_homlie4 = Fraction(r4.trials - r4.homlie_count, r4.trials)
        print(f"{seed:>6} {float(rank8):>14.3f} {float(homlie3):>14.3f} "
              f"{float(non_homlie4):>18.3f}")
    print("\nfrozen acceptance threshold: 0.95 for the two rank/structure rates")
    return 0


if __name__ == "__main__":
    sys.exit(main())
