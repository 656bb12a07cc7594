import numpy as np
import pytest

from entdeg.ensemble import (
    haar_random_pure,
    property_sweep,
    state_for_index,
)
from entdeg.states import density_from_state, partial_trace, purity

QUBIT_KEYS = {
    "roundtrip",
    "alpha_det_negativity",
    "beta_v_eq_u",
    "beta_t_u_eq_v",
    "beta_sq_sum",
    "beta_cofactor",
    "u_eq_v",
    "det_beta_identity",
    "oracle_det_vs_schmidt",
    "oracle_det_vs_concurrence",
    "det_vs_u_norm",
    "det_vs_hyperbolic",
}

QUTRIT_KEYS = {"roundtrip", "alpha_det_negativity"}


def test_haar_deterministic_bit_for_bit():
    a = haar_random_pure(4, np.random.Philox(key=123))
    b = haar_random_pure(4, np.random.Philox(key=123))
    assert np.array_equal(a.amplitudes, b.amplitudes)
    c = haar_random_pure(4, np.random.Philox(key=124))
    assert not np.array_equal(a.amplitudes, c.amplitudes)


def test_haar_unit_norm_and_no_warning():
    for dim in (4, 9):
        for k in range(20):
            psi = haar_random_pure(dim, np.random.Philox(key=k))
            assert abs(np.linalg.norm(psi.amplitudes) - 1.0) <= 1e-12
            assert not psi.normalization_warning
            assert psi.total_dim == dim


def test_haar_rejects_other_dimensions():
    with pytest.raises(ValueError, match="4 or 9"):
        haar_random_pure(6, np.random.Philox(key=1))


def test_haar_reduced_purity_matches_known_average():
    # E[tr rho_A^2] = (d_a + d_b) / (d_a d_b + 1) = 4/5 for two qubits;
    # Monte-Carlo with 4000 samples concentrates well within 0.01
    total = 0.0
    n = 4000
    for idx in range(n):
        psi = state_for_index(2, 271828, idx)
        rho_a = partial_trace(density_from_state(psi), "A", (2, 2))
        total += purity(rho_a)
    assert total / n == pytest.approx(0.8, abs=0.01)


def test_state_for_index_is_stable():
    one = state_for_index(2, 42, 17)
    two = state_for_index(2, 42, 17)
    assert np.array_equal(one.amplitudes, two.amplitudes)
    assert not np.array_equal(
        one.amplitudes, state_for_index(2, 42, 18).amplitudes
    )
    assert not np.array_equal(
        one.amplitudes, state_for_index(2, 43, 17).amplitudes
    )


def test_sweep_report_keys_per_dim():
    rep2 = property_sweep(25, 2, seed=1)
    rep3 = property_sweep(25, 3, seed=1)
    assert set(rep2.worst_residuals) == QUBIT_KEYS
    assert set(rep3.worst_residuals) == QUTRIT_KEYS
    assert all(v >= 0 for v in rep2.worst_residuals.values())


def test_sweep_deterministic():
    a = property_sweep(200, 2, seed=42)
    b = property_sweep(200, 2, seed=42)
    assert a == b


def test_sweep_worker_count_does_not_change_results():
    serial = property_sweep(151, 2, seed=9)
    threaded = property_sweep(151, 2, seed=9, workers=4)
    assert serial == threaded
    serial3 = property_sweep(60, 3, seed=11)
    threaded3 = property_sweep(60, 3, seed=11, workers=3)
    assert serial3 == threaded3


def test_sweep_max_reduction_dominates_samples():
    from entdeg.ensemble import _sample_residuals

    report = property_sweep(40, 2, seed=5)
    for idx in (0, 7, 39):
        residuals, p_e = _sample_residuals(state_for_index(2, 5, idx))
        for key, val in residuals.items():
            assert report.worst_residuals[key] >= val
        assert report.p_e_min <= p_e <= report.p_e_max


def test_sweep_single_sample_passes():
    for seed in (0, 1, 2, 3):
        rep = property_sweep(1, 2, seed=seed, tol=1e-10)
        assert rep.passed, rep.worst_residuals


def test_sweep_qubit_ensemble_passes_theorem_tolerance():
    rep = property_sweep(500, 2, seed=42, tol=1e-10)
    assert rep.passed
    assert rep.worst_residuals["oracle_det_vs_schmidt"] <= 1e-10
    assert rep.worst_residuals["oracle_det_vs_concurrence"] <= 1e-10
    assert 0.0 <= rep.p_e_min <= rep.p_e_max <= 1.0 + 1e-9


def test_sweep_qutrit_roundtrip():
    rep = property_sweep(1000, 3, seed=7)
    assert rep.worst_residuals["roundtrip"] <= 1e-11
    assert rep.passed


def test_sweep_pass_flag_reflects_tolerance():
    rep = property_sweep(50, 2, seed=13, tol=1e-30)
    assert not rep.passed
    relaxed = property_sweep(50, 2, seed=13, tol=1e-9)
    assert relaxed.passed


def test_sweep_argument_validation():
    with pytest.raises(ValueError, match="at least 1"):
        property_sweep(0, 2, seed=1)
    with pytest.raises(ValueError, match="local dimension"):
        property_sweep(10, 4, seed=1)
