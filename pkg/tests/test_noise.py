import json

import numpy as np
import pytest

from iongrover.decompositions import toffoli3_template, toffoli3_unitary
from iongrover.gates import Circuit, RotationGate, XXGate, run
from iongrover.metrics import permutation_of, truth_table_fidelity
from iongrover.noise import (
    FITTED_P_XX,
    NoiseModel,
    SpamModel,
    apply_spam,
    confusion_matrix,
    correct_spam,
    load_noise_config,
    noisy_truth_table,
    run_noisy,
)
from iongrover.statevector import probabilities

TOFFOLI = toffoli3_template(0, 1, 2)
TOFFOLI_PERM = permutation_of(toffoli3_unitary())


def test_parameter_validation():
    with pytest.raises(ValueError):
        NoiseModel(p_xx=-0.1)
    with pytest.raises(ValueError):
        NoiseModel(p_xx=1.0)
    with pytest.raises(ValueError):
        SpamModel(eps0=0.5)


def test_zero_noise_matches_exact_simulation():
    dist = run_noisy(TOFFOLI, NoiseModel(), trajectories=16, seed=0)
    exact = probabilities(run(TOFFOLI))
    assert np.max(np.abs(dist - exact)) < 1e-12


def test_noisy_runs_are_deterministic_per_seed():
    noise = NoiseModel(p_xx=0.05)
    a = run_noisy(TOFFOLI, noise, trajectories=500, seed=9)
    b = run_noisy(TOFFOLI, noise, trajectories=500, seed=9)
    c = run_noisy(TOFFOLI, noise, trajectories=500, seed=10)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_noisy_distribution_is_normalized():
    noise = NoiseModel(p_xx=0.08, p_r=0.01)
    dist = run_noisy(TOFFOLI, noise, trajectories=400, seed=3)
    assert dist.sum() == pytest.approx(1.0, abs=1e-9)
    assert np.all(dist >= 0)


def test_rotation_noise_hits_single_qubit_circuits():
    circ = Circuit(1, (RotationGate(0, np.pi, 0.0),))
    dist = run_noisy(circ, NoiseModel(p_r=0.3), trajectories=4000, seed=1)
    # Two thirds of injected Paulis undo the flip: expect about 0.2.
    assert 0.15 < dist[0] < 0.25


def test_fidelity_decreases_with_error_rate():
    fid = {}
    for p in (0.01, 0.08):
        table = noisy_truth_table(TOFFOLI, (0, 1, 2), NoiseModel(p_xx=p), 3000, 17)
        fid[p] = truth_table_fidelity(table, TOFFOLI_PERM)
    assert fid[0.01] > fid[0.08] + 0.05


def test_fitted_rate_reproduces_reference_fidelity():
    table = noisy_truth_table(TOFFOLI, (0, 1, 2), NoiseModel(p_xx=FITTED_P_XX), 4000, 23)
    assert 0.85 <= truth_table_fidelity(table, TOFFOLI_PERM) <= 0.94


def test_confusion_matrix_columns_are_stochastic():
    spam = SpamModel(eps0=0.03, eps1=0.05, crosstalk=0.02)
    m = confusion_matrix(spam, 3)
    assert np.allclose(m.sum(axis=0), 1.0, atol=1e-12)
    assert np.all(m >= 0)


def test_confusion_matrix_without_crosstalk_is_a_product():
    spam = SpamModel(eps0=0.04, eps1=0.07)
    single = np.array([[0.96, 0.07], [0.04, 0.93]])
    want = np.kron(np.kron(single, single), single)
    assert np.allclose(confusion_matrix(spam, 3), want, atol=1e-12)


def test_crosstalk_brightens_dark_neighbors():
    base = SpamModel(eps0=0.01, eps1=0.0)
    leaky = SpamModel(eps0=0.01, eps1=0.0, crosstalk=0.05)
    # True state 010: both outer qubits are dark with one bright neighbor.
    col_base = confusion_matrix(base, 3)[:, 0b010]
    col_leaky = confusion_matrix(leaky, 3)[:, 0b010]
    assert col_leaky[0b110] > col_base[0b110]
    assert col_leaky[0b011] > col_base[0b011]
    # A dark qubit with dark neighbors keeps its bare flip rate.
    col = confusion_matrix(leaky, 3)[:, 0b000]
    assert col[0b000] == pytest.approx((1 - 0.01) ** 3)


def test_spam_round_trip_recovers_distribution():
    rng = np.random.default_rng(2)
    spam = SpamModel(eps0=0.05, eps1=0.04, crosstalk=0.02)
    for _ in range(10):
        true = rng.dirichlet(np.ones(8))
        observed = apply_spam(true, spam)
        recovered = correct_spam(observed, spam)
        assert np.max(np.abs(recovered - true)) < 1e-9


def test_correct_spam_clips_and_renormalizes():
    spam = SpamModel(eps0=0.1, eps1=0.1)
    # A distribution that cannot arise from the model exactly.
    measured = np.array([1.0, 0.0])
    corrected = correct_spam(measured, spam)
    assert corrected.sum() == pytest.approx(1.0)
    assert np.all(corrected >= 0)


def test_load_noise_config(tmp_path):
    path = tmp_path / "noise.json"
    path.write_text(
        json.dumps({"p_xx": 0.02, "eps0": 0.01, "trajectories": 500, "seed": 4})
    )
    cfg = load_noise_config(str(path))
    assert cfg.noise.p_xx == 0.02
    assert cfg.noise.p_r == 0.0
    assert cfg.spam.eps0 == 0.01
    assert cfg.trajectories == 500
    assert cfg.seed == 4


def test_load_noise_config_rejects_unknown_keys(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"p_xx": 0.02, "typo": 1}))
    with pytest.raises(ValueError):
        load_noise_config(str(path))


def test_load_noise_config_rejects_bad_values(tmp_path):
    path = tmp_path / "bad2.json"
    path.write_text(json.dumps({"p_xx": 1.5}))
    with pytest.raises(ValueError):
        load_noise_config(str(path))
