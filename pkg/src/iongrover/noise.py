"""Stochastic Pauli gate noise and state-preparation/measurement errors.

Gate noise is modeled by Monte Carlo trajectories: after each coupling
(and optionally each rotation) a uniformly random non-identity Pauli
hits the gate's qubits with a fixed probability. Trajectories are
simulated as one batched state array, so the cost is a handful of
matrix contractions per gate regardless of the trajectory count, and
the result is deterministic for a fixed seed.

Readout errors are per-qubit asymmetric bit flips, optionally with
crosstalk: a dark qubit's chance of reading bright grows with each
bright nearest neighbor in the line. The resulting confusion matrix is
column stochastic by construction and can be inverted to undo SPAM on
an observed distribution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .gates import Circuit, RotationGate, XXGate
from .statevector import StateVector, init_basis, marginal

_I = np.eye(2, dtype=np.complex128)
_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
_PAULIS = (_I, _X, _Y, _Z)

# Fitted coupling error rate: reproduces the observed truth-table
# fidelity of the five-coupling doubly-controlled NOT (about 0.896).
FITTED_P_XX = 0.0272


@dataclass(frozen=True)
class NoiseModel:
    """Depolarizing-style Pauli noise rates per gate application."""

    p_xx: float = 0.0
    p_r: float = 0.0

    def __post_init__(self):
        for name, p in (("p_xx", self.p_xx), ("p_r", self.p_r)):
            if not 0.0 <= p < 1.0:
                raise ValueError(f"{name} must be in [0, 1), got {p}")

    @property
    def trivial(self) -> bool:
        return self.p_xx == 0.0 and self.p_r == 0.0


@dataclass(frozen=True)
class SpamModel:
    """Readout confusion parameters.

    eps0 is P(read 1 | true 0), eps1 is P(read 0 | true 1), and
    crosstalk adds bright leakage onto dark qubits per bright nearest
    neighbor in the line.
    """

    eps0: float = 0.0
    eps1: float = 0.0
    crosstalk: float = 0.0

    def __post_init__(self):
        for name, p in (
            ("eps0", self.eps0),
            ("eps1", self.eps1),
            ("crosstalk", self.crosstalk),
        ):
            if not 0.0 <= p < 0.5:
                raise ValueError(f"{name} must be in [0, 0.5), got {p}")

    @property
    def trivial(self) -> bool:
        return self.eps0 == 0.0 and self.eps1 == 0.0 and self.crosstalk == 0.0


@dataclass(frozen=True)
class NoiseConfig:
    """Bundle of gate noise, SPAM, and sampling controls, as read from disk."""

    noise: NoiseModel
    spam: SpamModel
    trajectories: int = 2000
    seed: int = 0


_CONFIG_KEYS = {"p_xx", "p_r", "eps0", "eps1", "crosstalk", "trajectories", "seed"}


def load_noise_config(path: str) -> NoiseConfig:
    """Read a JSON noise configuration; unknown keys are rejected."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"noise config must be a JSON object, got {type(data)}")
    extra = set(data) - _CONFIG_KEYS
    if extra:
        raise ValueError(f"unknown noise config keys: {sorted(extra)}")
    trajectories = int(data.get("trajectories", 2000))
    if trajectories < 1:
        raise ValueError(f"trajectories must be >= 1, got {trajectories}")
    return NoiseConfig(
        noise=NoiseModel(float(data.get("p_xx", 0.0)), float(data.get("p_r", 0.0))),
        spam=SpamModel(
            float(data.get("eps0", 0.0)),
            float(data.get("eps1", 0.0)),
            float(data.get("crosstalk", 0.0)),
        ),
        trajectories=trajectories,
        seed=int(data.get("seed", 0)),
    )


def _apply_batch(amps: np.ndarray, n: int, qubits: tuple[int, ...], u: np.ndarray) -> np.ndarray:
    """Apply a gate to every trajectory at once; axis 0 is the batch."""
    k = len(qubits)
    psi = amps.reshape([-1] + [2] * n)
    axes = [q + 1 for q in qubits]
    psi = np.tensordot(u.reshape([2] * (2 * k)), psi, axes=(list(range(k, 2 * k)), axes))
    psi = np.moveaxis(psi, list(range(k)), axes)
    return psi.reshape(amps.shape[0], -1)


def run_noisy(
    circuit: Circuit,
    noise: NoiseModel,
    trajectories: int,
    seed: int,
    initial: StateVector | None = None,
) -> np.ndarray:
    """Average measurement distribution over stochastic-Pauli trajectories.

    Every trajectory starts from ``initial`` (default all zeros).
    After each coupling, with probability p_xx, one of the 15
    non-identity two-qubit Paulis is applied to its pair; rotations get
    the analogous single-qubit treatment with p_r.
    """
    if trajectories < 1:
        raise ValueError(f"trajectories must be >= 1, got {trajectories}")
    n = circuit.n_qubits
    state = init_basis(n) if initial is None else initial
    if state.n_qubits != n:
        raise ValueError(f"initial state has {state.n_qubits} qubits, want {n}")
    rng = np.random.default_rng(seed)
    amps = np.broadcast_to(state.amps, (trajectories, 2**n)).copy()

    def inject(qubits: tuple[int, ...], p: float):
        n_paulis = 4 ** len(qubits) - 1
        hit = rng.random(trajectories) < p
        pick = rng.integers(1, n_paulis + 1, size=trajectories)
        choice = np.where(hit, pick, 0)
        for k in np.unique(choice):
            if k == 0:
                continue
            mask = choice == k
            digits = [(k // 4**j) % 4 for j in reversed(range(len(qubits)))]
            op = _PAULIS[digits[0]]
            for d in digits[1:]:
                op = np.kron(op, _PAULIS[d])
            amps[mask] = _apply_batch(amps[mask], n, qubits, op)

    for g in circuit.gates:
        if isinstance(g, RotationGate):
            amps = _apply_batch(amps, n, (g.qubit,), g.matrix())
            if noise.p_r > 0.0:
                inject((g.qubit,), noise.p_r)
        else:
            amps = _apply_batch(amps, n, (g.qa, g.qb), g.matrix())
            if noise.p_xx > 0.0:
                inject((g.qa, g.qb), noise.p_xx)
    return np.mean(np.abs(amps) ** 2, axis=0)


def noisy_truth_table(
    circuit: Circuit,
    io_qubits: tuple[int, ...],
    noise: NoiseModel,
    trajectories: int,
    seed: int,
) -> np.ndarray:
    """Monte Carlo analog of :func:`iongrover.metrics.truth_table`."""
    k = len(io_qubits)
    table = np.zeros((2**k, 2**k), dtype=np.float64)
    for inp in range(2**k):
        bits = format(inp, f"0{k}b")
        full = ["0"] * circuit.n_qubits
        for pos, q in enumerate(io_qubits):
            full[q] = bits[pos]
        initial = init_basis(circuit.n_qubits, "".join(full))
        dist = run_noisy(circuit, noise, trajectories, seed + inp, initial)
        table[inp] = marginal(dist, circuit.n_qubits, io_qubits)
    return table


def _column(spam: SpamModel, true_bits: str) -> np.ndarray:
    """Readout distribution for one true basis state."""
    n = len(true_bits)
    col = np.ones(1, dtype=np.float64)
    for i, b in enumerate(true_bits):
        if b == "1":
            p_read1 = 1.0 - spam.eps1
        else:
            bright = 0
            if i > 0 and true_bits[i - 1] == "1":
                bright += 1
            if i < n - 1 and true_bits[i + 1] == "1":
                bright += 1
            p_read1 = 1.0 - (1.0 - spam.eps0) * (1.0 - spam.crosstalk) ** bright
        col = np.kron(col, np.array([1.0 - p_read1, p_read1]))
    return col


def confusion_matrix(spam: SpamModel, n_qubits: int) -> np.ndarray:
    """Column-stochastic map from true to observed basis distributions."""
    size = 2**n_qubits
    m = np.zeros((size, size), dtype=np.float64)
    for j in range(size):
        m[:, j] = _column(spam, format(j, f"0{n_qubits}b"))
    return m


def apply_spam(distribution: np.ndarray, spam: SpamModel) -> np.ndarray:
    """Push a true distribution through the readout confusion."""
    distribution = np.asarray(distribution, dtype=np.float64)
    n = len(distribution).bit_length() - 1
    if 2**n != len(distribution):
        raise ValueError(f"distribution length {len(distribution)} not a power of two")
    return confusion_matrix(spam, n) @ distribution


def correct_spam(measured: np.ndarray, spam: SpamModel) -> np.ndarray:
    """Invert the readout confusion; clips tiny negatives and renormalizes."""
    measured = np.asarray(measured, dtype=np.float64)
    n = len(measured).bit_length() - 1
    if 2**n != len(measured):
        raise ValueError(f"distribution length {len(measured)} not a power of two")
    est = np.linalg.solve(confusion_matrix(spam, n), measured)
    est = np.clip(est, 0.0, None)
    total = est.sum()
    if total <= 0.0:
        raise ValueError("corrected distribution has no weight")
    return est / total
