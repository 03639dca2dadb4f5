import pytest

from skewlie import GenericityReport, SampleConfig, random_algebra, run_experiment
from skewlie.sampler import SplitMix64


def test_config_validation():
    with pytest.raises(ValueError):
        SampleConfig(dim=7, trials=1, seed=0)
    with pytest.raises(ValueError):
        SampleConfig(dim=3, trials=0, seed=0)
    with pytest.raises(ValueError):
        SampleConfig(dim=3, trials=1, seed=0, height=0)
    with pytest.raises(ValueError):
        SampleConfig(dim=3, trials=1, seed=1 << 64)


def test_splitmix_range():
    rng = SplitMix64(99)
    draws = [rng.randint(-2, 2) for _ in range(500)]
    assert set(draws) == {-2, -1, 0, 1, 2}


def test_random_algebra_deterministic():
    cfg = SampleConfig(dim=3, trials=10, seed=42, height=1)
    assert random_algebra(cfg, 0) == random_algebra(cfg, 0)
    assert random_algebra(cfg, 3) == random_algebra(cfg, 3)


def test_random_algebra_index_bounds():
    cfg = SampleConfig(dim=3, trials=10, seed=42)
    with pytest.raises(ValueError):
        random_algebra(cfg, 10)


def test_random_algebra_height_bound():
    cfg = SampleConfig(dim=4, trials=30, seed=5, height=3)
    for i in range(30):
        a = random_algebra(cfg, i)
        for coeffs in a.products.values():
            assert all(-3 <= c <= 3 and c.denominator == 1 for c in coeffs)


def test_draws_are_distinct():
    cfg = SampleConfig(dim=3, trials=100, seed=42, height=2)
    algs = [random_algebra(cfg, i) for i in range(100)]
    assert len(set(algs)) == 100


def test_report_reproducible():
    cfg = SampleConfig(dim=3, trials=40, seed=42, height=2)
    r1 = run_experiment(cfg)
    r2 = run_experiment(cfg)
    assert r1 == r2
    assert isinstance(r1, GenericityReport)


def test_report_counts_consistent():
    cfg = SampleConfig(dim=3, trials=60, seed=7, height=2)
    r = run_experiment(cfg)
    assert sum(r.rank_histogram_M.values()) == r.trials == 60
    assert 0 <= r.homlie_count <= r.trials
    assert r.lie_count <= r.homlie_count  # a Lie algebra always has the identity twist


def test_dim3_trials_all_homlie_and_bounded_rank():
    cfg = SampleConfig(dim=3, trials=60, seed=13, height=2)
    r = run_experiment(cfg)
    assert r.homlie_count == 60
    assert all(rank <= 8 for rank in r.rank_histogram_M)
