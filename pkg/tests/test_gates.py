import numpy as np
import pytest

from iongrover.gates import (
    Circuit,
    RotationGate,
    XXGate,
    circuit_from_json,
    circuit_to_json,
    circuit_unitary,
    concat,
    inverse,
    r_matrix,
    run,
    xx_count,
    xx_matrix,
)
from iongrover.statevector import init_basis

PI = np.pi


def test_r_pi_about_x_flips_with_phase():
    out = r_matrix(PI, 0.0) @ np.array([1, 0], dtype=complex)
    assert np.allclose(out, [0, -1j], atol=1e-12)


def test_r_half_pi_about_y_makes_plus():
    out = r_matrix(PI / 2, PI / 2) @ np.array([1, 0], dtype=complex)
    assert np.allclose(out, [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-12)


def test_r_is_unitary_for_random_angles():
    rng = np.random.default_rng(3)
    for _ in range(20):
        u = r_matrix(rng.uniform(-4 * PI, 4 * PI), rng.uniform(-PI, PI))
        assert np.allclose(u.conj().T @ u, np.eye(2), atol=1e-12)


def test_xx_quarter_pi_entangles_zero_state():
    out = xx_matrix(PI / 4) @ np.eye(4, dtype=complex)[:, 0]
    want = np.array([1, 0, 0, -1j], dtype=complex) / np.sqrt(2)
    assert np.allclose(out, want, atol=1e-12)


def test_two_eighth_couplings_compose_to_quarter():
    u = xx_matrix(PI / 8)
    assert np.allclose(u @ u, xx_matrix(PI / 4), atol=1e-12)


def test_xx_is_symmetric_in_its_qubits():
    swap = np.eye(4)[[0, 2, 1, 3]]
    u = xx_matrix(0.3)
    assert np.allclose(swap @ u @ swap, u, atol=1e-12)


def test_gate_validation():
    with pytest.raises(ValueError):
        XXGate(1, 1, 0.3)
    with pytest.raises(ValueError):
        RotationGate(0, np.inf, 0.0)
    with pytest.raises(ValueError):
        Circuit(2, (RotationGate(2, 1.0, 0.0),))


def test_run_applies_gates_in_list_order():
    # X on qubit 0 then a coupling: |00> -> |10> -> entangled pair.
    circ = Circuit(2, (RotationGate(0, PI, 0.0), XXGate(0, 1, PI / 4)))
    state = run(circ)
    probs = np.abs(state.amps) ** 2
    assert probs[0b10] == pytest.approx(0.5)
    assert probs[0b01] == pytest.approx(0.5)


def test_run_rejects_mismatched_register():
    with pytest.raises(ValueError):
        run(Circuit(2, ()), init_basis(3, 0))


def test_circuit_unitary_matches_column_runs():
    circ = Circuit(
        2,
        (
            RotationGate(0, 0.7, 0.2),
            XXGate(0, 1, PI / 8),
            RotationGate(1, -1.1, PI / 2),
        ),
    )
    u = circuit_unitary(circ)
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-9)
    col = run(circ, init_basis(2, "10")).amps
    assert np.allclose(u[:, 2], col, atol=1e-12)


def test_xx_count_ignores_rotations():
    circ = Circuit(2, (RotationGate(0, 1.0, 0.0), XXGate(0, 1, 0.1), XXGate(1, 0, 0.2)))
    assert xx_count(circ) == 2


def test_concat_widens_register():
    a = Circuit(1, (RotationGate(0, 1.0, 0.0),))
    b = Circuit(3, (XXGate(1, 2, 0.3),))
    c = concat(a, b)
    assert c.n_qubits == 3
    assert len(c) == 2


def test_inverse_undoes_circuit():
    circ = Circuit(
        3,
        (
            RotationGate(0, 0.4, 1.0),
            XXGate(0, 2, PI / 8),
            RotationGate(2, -0.9, PI / 2),
            XXGate(1, 2, -0.77),
        ),
    )
    u = circuit_unitary(concat(circ, inverse(circ)))
    assert np.allclose(u, np.eye(8), atol=1e-9)


def test_json_round_trip():
    circ = Circuit(2, (RotationGate(0, 0.25, -1.5), XXGate(0, 1, -PI / 8)))
    restored = circuit_from_json(circuit_to_json(circ))
    assert restored == circ


def test_json_rejects_unknown_kind():
    with pytest.raises(ValueError):
        circuit_from_json('{"n_qubits": 1, "gates": [{"kind": "CZ"}]}')
