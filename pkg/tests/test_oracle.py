"""Verification harness: samplers, dense oracle, suite determinism."""

import numpy as np
import pytest

from circgeo import CirculantMetric, GeometryError, cos_phi, g_inner
from circgeo.oracle import (
    SUITE_NAMES,
    dense_g_inner,
    random_metric,
    random_vector,
    run_suite,
)


def test_dense_inner_frozen_values():
    m = CirculantMetric(2.0, 1.0)
    assert dense_g_inner(m, [1, 0, 0], [0, 1, 0]) == 1.0
    assert dense_g_inner(m, [1, 1, 1], [1, 1, 1]) == 12.0


def test_dense_inner_identity_metric_is_dot_product():
    m = CirculantMetric(1.0, 0.0)
    rng = np.random.default_rng(31)
    for _ in range(100):
        u, v = random_vector(rng), random_vector(rng)
        assert abs(dense_g_inner(m, u, v) - float(u @ v)) <= 1e-12 * (1.0 + abs(u @ v))


def test_dense_inner_agrees_with_g_inner():
    rng = np.random.default_rng(37)
    for _ in range(1000):
        m = random_metric(rng)
        u, v = random_vector(rng), random_vector(rng)
        ref = dense_g_inner(m, u, v)
        assert abs(g_inner(m, u, v) - ref) <= 1e-13 * (1.0 + abs(ref))


def test_samplers_deterministic():
    a = np.random.default_rng(123)
    b = np.random.default_rng(123)
    for _ in range(50):
        assert np.array_equal(random_vector(a), random_vector(b))
        assert random_metric(a) == random_metric(b)


def test_sampled_metrics_always_valid():
    rng = np.random.default_rng(41)
    for _ in range(10_000):
        m = random_metric(rng)  # constructor re-validates
        assert m.a - m.b > 0.0
        assert m.a + 2.0 * m.b > 0.0


def test_sampled_vectors_nonzero_and_in_range():
    rng = np.random.default_rng(43)
    m = CirculantMetric(1.0, 0.0)
    for _ in range(10_000):
        u = random_vector(rng)
        assert float(u @ u) >= 1e-12
        assert -0.5 - 1e-12 <= cos_phi(m, u) <= 1.0 + 1e-12


def test_run_suite_all_pass():
    reports = run_suite(seed=42, trials=300)
    assert [r.name for r in reports] == list(SUITE_NAMES)
    for r in reports:
        assert r.passed, f"{r.name}: residual {r.max_residual} > tol {r.tolerance}"
        assert r.seed == 42


def test_run_suite_deterministic():
    assert run_suite(seed=42, trials=100) == run_suite(seed=42, trials=100)


def test_run_suite_rejects_bad_trials():
    with pytest.raises(GeometryError):
        run_suite(seed=1, trials=0)
