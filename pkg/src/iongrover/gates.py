"""Native gate set and circuit container.

Two gate kinds only: single-qubit rotations R(theta, phi) and the
two-qubit Ising coupling XX(chi). Everything else in this package is
compiled down to these.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .statevector import (
    MAX_QUBITS,
    StateVector,
    apply_one_qubit,
    apply_two_qubit,
    init_basis,
)


def r_matrix(theta: float, phi: float) -> np.ndarray:
    """Rotation by ``theta`` about the Bloch axis (cos phi, sin phi, 0).

    R(theta, 0) is a rotation about x, R(theta, pi/2) about y.
    """
    c = math.cos(theta / 2)
    s = math.sin(theta / 2)
    return np.array(
        [
            [c, -1j * np.exp(-1j * phi) * s],
            [-1j * np.exp(1j * phi) * s, c],
        ],
        dtype=np.complex128,
    )


def xx_matrix(chi: float) -> np.ndarray:
    """Ising coupling exp(-i chi X.X) on a qubit pair.

    Diagonal cos(chi), anti-diagonal -i sin(chi). XX(pi/4) is maximally
    entangling; two XX(pi/8) on the same pair compose to XX(pi/4).
    """
    c = math.cos(chi)
    s = -1j * math.sin(chi)
    return np.array(
        [
            [c, 0, 0, s],
            [0, c, s, 0],
            [0, s, c, 0],
            [s, 0, 0, c],
        ],
        dtype=np.complex128,
    )


@dataclass(frozen=True)
class RotationGate:
    """R(theta, phi) on a single qubit."""

    qubit: int
    theta: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("rotation angles must be finite")
        if self.qubit < 0:
            raise ValueError(f"qubit index must be nonnegative, got {self.qubit}")

    def matrix(self) -> np.ndarray:
        return r_matrix(self.theta, self.phi)


@dataclass(frozen=True)
class XXGate:
    """XX(chi) on the ordered qubit pair (qa, qb)."""

    qa: int
    qb: int
    chi: float

    def __post_init__(self):
        if not math.isfinite(self.chi):
            raise ValueError("coupling angle must be finite")
        if self.qa < 0 or self.qb < 0:
            raise ValueError("qubit indices must be nonnegative")
        if self.qa == self.qb:
            raise ValueError(f"XX qubits must differ, got ({self.qa}, {self.qb})")

    def matrix(self) -> np.ndarray:
        return xx_matrix(self.chi)


Gate = RotationGate | XXGate


@dataclass(frozen=True)
class Circuit:
    """Gate list over a fixed register; gates[0] is applied first."""

    n_qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(
                f"n_qubits must be in 1..{MAX_QUBITS}, got {self.n_qubits}"
            )
        gates = tuple(self.gates)
        for g in gates:
            qs = (g.qubit,) if isinstance(g, RotationGate) else (g.qa, g.qb)
            for q in qs:
                if q >= self.n_qubits:
                    raise ValueError(
                        f"gate {g} touches qubit {q} outside register of "
                        f"{self.n_qubits}"
                    )
        object.__setattr__(self, "gates", gates)

    def __len__(self) -> int:
        return len(self.gates)


def xx_count(circuit: Circuit) -> int:
    """Number of two-qubit gates, the dominant cost on hardware."""
    return sum(1 for g in circuit.gates if isinstance(g, XXGate))


def run(circuit: Circuit, initial: StateVector | None = None) -> StateVector:
    """Apply the circuit to ``initial`` (default: all zeros)."""
    state = init_basis(circuit.n_qubits) if initial is None else initial
    if state.n_qubits != circuit.n_qubits:
        raise ValueError(
            f"state has {state.n_qubits} qubits, circuit expects {circuit.n_qubits}"
        )
    for g in circuit.gates:
        if isinstance(g, RotationGate):
            state = apply_one_qubit(state, g.qubit, g.matrix())
        else:
            state = apply_two_qubit(state, g.qa, g.qb, g.matrix())
    return state


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Full 2**n x 2**n unitary of the circuit."""
    dim = 2**circuit.n_qubits
    cols = []
    for k in range(dim):
        out = run(circuit, init_basis(circuit.n_qubits, k))
        cols.append(out.amps)
    return np.stack(cols, axis=1)


def concat(*circuits: Circuit) -> Circuit:
    """Concatenate circuits onto a register wide enough for all of them."""
    if not circuits:
        raise ValueError("need at least one circuit")
    n = max(c.n_qubits for c in circuits)
    gates: list[Gate] = []
    for c in circuits:
        gates.extend(c.gates)
    return Circuit(n, tuple(gates))


def inverse(circuit: Circuit) -> Circuit:
    """Exact inverse: reversed gate order with negated angles."""
    inv: list[Gate] = []
    for g in reversed(circuit.gates):
        if isinstance(g, RotationGate):
            inv.append(RotationGate(g.qubit, -g.theta, g.phi))
        else:
            inv.append(XXGate(g.qa, g.qb, -g.chi))
    return Circuit(circuit.n_qubits, tuple(inv))


def circuit_to_json(circuit: Circuit) -> str:
    """Serialize to the on-disk circuit format."""
    gates = []
    for g in circuit.gates:
        if isinstance(g, RotationGate):
            gates.append({"kind": "R", "q": g.qubit, "theta": g.theta, "phi": g.phi})
        else:
            gates.append({"kind": "XX", "qa": g.qa, "qb": g.qb, "chi": g.chi})
    return json.dumps(
        {"n_qubits": circuit.n_qubits, "gates": gates},
        indent=2,
        sort_keys=True,
    )


def circuit_from_json(text: str) -> Circuit:
    """Parse a circuit serialized by :func:`circuit_to_json`."""
    data = json.loads(text)
    try:
        n = data["n_qubits"]
        raw = data["gates"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"malformed circuit JSON: missing {exc}") from exc
    gates: list[Gate] = []
    for entry in raw:
        kind = entry.get("kind")
        if kind == "R":
            gates.append(RotationGate(entry["q"], entry["theta"], entry["phi"]))
        elif kind == "XX":
            gates.append(XXGate(entry["qa"], entry["qb"], entry["chi"]))
        else:
            raise ValueError(f"unknown gate kind: {kind!r}")
    return Circuit(n, tuple(gates))
