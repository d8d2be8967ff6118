"""Single-iteration Grover search over 1..3 qubits in native gates.

A run is initialization, then one or more rounds of oracle plus
amplification. Oracles come in two styles with identical data-register
statistics: "phase" flips the sign of marked basis states in place,
"boolean" flips an extra ancilla prepared in an X eigenstate so the
phase appears by kickback. The boolean style is what a classical
reversible marking function compiles to; the phase style is cheaper.

Oracle synthesis works on the indicator function of the marked set.
Expanding it over XOR ("parity form") turns each surviving monomial
into one Z / CZ / CCZ (phase style) or one NOT / CNOT / Toffoli onto
the ancilla (boolean style); a marked set of two labels alternatively
reduces, after CNOT changes of basis, to a single conjunction on all
but one qubit. The builder takes whichever candidate costs the fewest
couplings.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

import numpy as np

from .decompositions import (
    PI,
    SgnMap,
    _ry,
    ccz_template,
    cnot_template,
    cz_template,
    rz_template,
    toffoli3_template,
    toffoli4_template,
    x_template,
)
from .gates import Circuit, Gate, RotationGate, concat, run, xx_count
from .statevector import all_labels, bits_to_index, init_basis, marginal, probabilities

MAX_DATA_QUBITS = 3

STYLES = ("phase", "boolean")


@dataclass(frozen=True)
class OracleSpec:
    """Marked-set description: which labels the oracle should flag."""

    n_qubits: int
    marked: tuple[str, ...]
    style: str

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_DATA_QUBITS:
            raise ValueError(
                f"n_qubits must be in 1..{MAX_DATA_QUBITS}, got {self.n_qubits}"
            )
        if self.style not in STYLES:
            raise ValueError(f"style must be one of {STYLES}, got {self.style!r}")
        marked = tuple(self.marked)
        if not marked:
            raise ValueError("marked set must be nonempty")
        for label in marked:
            if len(label) != self.n_qubits or any(c not in "01" for c in label):
                raise ValueError(f"bad label {label!r} for {self.n_qubits} qubits")
        if len(set(marked)) != len(marked):
            raise ValueError(f"duplicate labels in {marked}")
        object.__setattr__(self, "marked", marked)


@dataclass(frozen=True)
class GroverConfig:
    oracle: OracleSpec
    iterations: int = 1

    def __post_init__(self):
        if self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")


@dataclass(frozen=True)
class GroverResult:
    """Data-register outcome distribution plus circuit-level costs."""

    distribution: np.ndarray
    xx_count: int
    n_qubits_total: int
    circuit: Circuit


def oracle_spec_to_json(spec: OracleSpec) -> str:
    return json.dumps(
        {"n": spec.n_qubits, "marked": list(spec.marked), "style": spec.style},
        indent=2,
        sort_keys=True,
    )


def oracle_spec_from_json(text: str) -> OracleSpec:
    data = json.loads(text)
    try:
        return OracleSpec(data["n"], tuple(data["marked"]), data["style"])
    except (TypeError, KeyError) as exc:
        raise ValueError(f"malformed oracle spec JSON: {exc}") from exc


def _parity_monomials(n: int, marked: tuple[str, ...]) -> list[tuple[int, ...]]:
    """XOR expansion of the marked-set indicator.

    Returns the monomials with coefficient 1, each as a sorted tuple of
    qubit positions (the empty tuple is the constant term). Computed by
    the subset parity transform of the truth table.
    """
    size = 2**n
    f = np.zeros(size, dtype=np.int64)
    for label in marked:
        f[bits_to_index(label)] = 1
    for b in range(n):
        bit = 1 << b
        for mask in range(size):
            if mask & bit:
                f[mask] ^= f[mask ^ bit]
    monomials = []
    for mask in range(size):
        if f[mask]:
            qubits = tuple(i for i in range(n) if mask & (1 << (n - 1 - i)))
            monomials.append(qubits)
    monomials.sort(key=lambda qs: (len(qs), qs))
    return monomials


def _controlled_z_any(qubits: tuple[int, ...], sgn_map: SgnMap | None) -> Circuit:
    """Z controlled on every qubit in the tuple (1 to 3 of them)."""
    if len(qubits) == 1:
        return rz_template(qubits[0], PI)
    if len(qubits) == 2:
        return cz_template(qubits[0], qubits[1], _pair(sgn_map, *qubits))
    if len(qubits) == 3:
        return ccz_template(*qubits, sgn_map)
    raise ValueError(f"no controlled-Z template for {len(qubits)} qubits")


def _controlled_not_any(
    controls: tuple[int, ...], target: int, borrow: int, sgn_map: SgnMap | None
) -> Circuit:
    """NOT on ``target`` controlled on 0 to 3 qubits."""
    if len(controls) == 0:
        return x_template(target)
    if len(controls) == 1:
        return cnot_template(controls[0], target, _pair(sgn_map, controls[0], target))
    if len(controls) == 2:
        return toffoli3_template(controls[0], controls[1], target, sgn_map)
    if len(controls) == 3:
        return toffoli4_template(*controls, target, borrow, sgn_map)
    raise ValueError(f"no controlled-NOT template for {len(controls)} controls")


def _pair(sgn_map: SgnMap | None, a: int, b: int) -> int:
    if sgn_map is None:
        return 1
    return sgn_map.get((min(a, b), max(a, b)), 1)


def _conjugate_zeros(label: str, qubits: tuple[int, ...], inner: Circuit) -> Circuit:
    """X-conjugate ``inner`` on the qubits where ``label`` has a 0 bit."""
    flips = [x_template(q) for q in qubits if label[q] == "0"]
    if not flips:
        return inner
    return concat(*flips, inner, *flips)


def _phase_per_label(n: int, marked: tuple[str, ...], sgn_map: SgnMap | None) -> Circuit:
    parts = []
    for label in marked:
        inner = _controlled_z_any(tuple(range(n)), sgn_map)
        parts.append(_conjugate_zeros(label, tuple(range(n)), inner))
    return concat(*parts)


def _phase_parity(n: int, marked: tuple[str, ...], sgn_map: SgnMap | None) -> Circuit:
    parts = []
    for qubits in _parity_monomials(n, marked):
        if not qubits:
            continue  # constant term is a global phase
        parts.append(_controlled_z_any(qubits, sgn_map))
    if not parts:
        return Circuit(n, ())
    return concat(*parts)


def phase_oracle(
    n_qubits: int, marked: tuple[str, ...], sgn_map: SgnMap | None = None
) -> Circuit:
    """Diagonal circuit with amplitude -1 on marked labels, up to global phase.

    Builds both the per-label form (X-conjugated controlled-Z per
    marked state) and the parity form and returns the cheaper one.
    """
    spec = OracleSpec(n_qubits, tuple(marked), "phase")
    candidates = [
        _phase_per_label(spec.n_qubits, spec.marked, sgn_map),
        _phase_parity(spec.n_qubits, spec.marked, sgn_map),
    ]
    # Pad so the circuit always spans the whole data register, even
    # when the cheapest form touches only some qubits.
    return concat(Circuit(spec.n_qubits, ()), min(candidates, key=xx_count))


def _boolean_per_label(
    n: int, marked: tuple[str, ...], ancilla: int, borrow: int, sgn_map: SgnMap | None
) -> Circuit:
    parts = []
    for label in marked:
        inner = _controlled_not_any(tuple(range(n)), ancilla, borrow, sgn_map)
        parts.append(_conjugate_zeros(label, tuple(range(n)), inner))
    return concat(*parts)


def _boolean_pair(
    n: int, marked: tuple[str, ...], ancilla: int, sgn_map: SgnMap | None
) -> Circuit:
    # Two marked labels differing on D: CNOTs from a pivot in D make the
    # other D qubits agree, leaving one conjunction on the n-1 qubits
    # other than the pivot.
    b, c = marked
    diff = tuple(i for i in range(n) if b[i] != c[i])
    pivot = diff[0]
    basis_change = [
        cnot_template(pivot, i, _pair(sgn_map, pivot, i)) for i in diff[1:]
    ]
    controls = tuple(i for i in range(n) if i != pivot)
    image = "".join(
        "1" if (b[i] == "1") != (i in diff[1:] and b[pivot] == "1") else "0"
        for i in range(n)
    )
    inner = _controlled_not_any(controls, ancilla, ancilla + 1, sgn_map)
    marked_block = _conjugate_zeros(image, controls, inner)
    return concat(*basis_change, marked_block, *reversed(basis_change))


def _boolean_parity(
    n: int, marked: tuple[str, ...], ancilla: int, borrow: int, sgn_map: SgnMap | None
) -> Circuit:
    parts = []
    for qubits in _parity_monomials(n, marked):
        parts.append(_controlled_not_any(qubits, ancilla, borrow, sgn_map))
    if not parts:
        return Circuit(ancilla + 1, ())
    return concat(*parts)


def boolean_oracle(
    n_qubits: int, marked: tuple[str, ...], sgn_map: SgnMap | None = None
) -> Circuit:
    """Reversible marking circuit: NOT on the ancilla iff the data is marked.

    The ancilla is qubit ``n_qubits``; one more qubit beyond it may be
    borrowed (in |0>) by the widest controlled-NOT. Exact on every
    computational basis state, up to one global phase.
    """
    spec = OracleSpec(n_qubits, tuple(marked), "boolean")
    n, marked = spec.n_qubits, spec.marked
    ancilla = n
    borrow = n + 1
    candidates = [_boolean_per_label(n, marked, ancilla, borrow, sgn_map)]
    if len(marked) == 2:
        candidates.append(_boolean_pair(n, marked, ancilla, sgn_map))
    candidates.append(_boolean_parity(n, marked, ancilla, borrow, sgn_map))
    return concat(Circuit(ancilla + 1, ()), min(candidates, key=xx_count))


def oracle_circuit(spec: OracleSpec, sgn_map: SgnMap | None = None) -> Circuit:
    if spec.style == "phase":
        return phase_oracle(spec.n_qubits, spec.marked, sgn_map)
    return boolean_oracle(spec.n_qubits, spec.marked, sgn_map)


def initialization_stage(n_qubits: int, style: str) -> Circuit:
    """Uniform superposition on the data register; boolean style also
    takes its ancilla to an X eigenstate so the mark kicks back as a phase."""
    if style not in STYLES:
        raise ValueError(f"style must be one of {STYLES}, got {style!r}")
    gates: list[Gate] = [_ry(q, PI / 2) for q in range(n_qubits)]
    n = n_qubits
    if style == "boolean":
        anc = n_qubits
        gates += [RotationGate(anc, PI, 0.0), _ry(anc, PI / 2)]
        n = n_qubits + 1
    return Circuit(n, tuple(gates))


def amplification_stage(n_qubits: int, sgn_map: SgnMap | None = None) -> Circuit:
    """Reflection about the uniform state, up to global phase."""
    if not 1 <= n_qubits <= MAX_DATA_QUBITS:
        raise ValueError(
            f"n_qubits must be in 1..{MAX_DATA_QUBITS}, got {n_qubits}"
        )
    qs = tuple(range(n_qubits))
    pre = [_ry(q, -PI / 2) for q in qs]
    flips = [x_template(q) for q in qs]
    inner = _controlled_z_any(qs, sgn_map)
    post = [_ry(q, PI / 2) for q in qs]
    return concat(
        Circuit(n_qubits, tuple(pre)),
        *flips,
        inner,
        *flips,
        Circuit(n_qubits, tuple(post)),
    )


def grover_circuit(config: GroverConfig, sgn_map: SgnMap | None = None) -> Circuit:
    """Full run: initialization then ``iterations`` oracle/amplification rounds."""
    spec = config.oracle
    parts = [initialization_stage(spec.n_qubits, spec.style)]
    for _ in range(config.iterations):
        parts.append(oracle_circuit(spec, sgn_map))
        parts.append(amplification_stage(spec.n_qubits, sgn_map))
    return concat(*parts)


def run_grover(config: GroverConfig, sgn_map: SgnMap | None = None) -> GroverResult:
    """Simulate noiselessly and marginalize onto the data register."""
    circuit = grover_circuit(config, sgn_map)
    state = run(circuit)
    dist = marginal(
        probabilities(state), circuit.n_qubits, tuple(range(config.oracle.n_qubits))
    )
    return GroverResult(dist, xx_count(circuit), circuit.n_qubits, circuit)


def theoretical_asp(space_size: int, n_marked: int) -> float:
    """Total probability of the marked set after one ideal iteration.

    Each marked amplitude grows from 1/sqrt(N) by the factor
    (N - 2t)/N + 2(N - t)/N.
    """
    N, t = space_size, n_marked
    if N < 1 or not 1 <= t <= N:
        raise ValueError(f"need 1 <= n_marked <= space_size, got t={t}, N={N}")
    amp = ((N - 2 * t) / N + 2 * (N - t) / N) / math.sqrt(N)
    return t * amp**2


def classical_asp(space_size: int, n_marked: int) -> float:
    """Success probability of two classical queries: draw one candidate,
    then a second distinct candidate if the first misses."""
    N, t = space_size, n_marked
    if N < 1 or not 1 <= t <= N:
        raise ValueError(f"need 1 <= n_marked <= space_size, got t={t}, N={N}")
    if t == N:
        return 1.0
    return t / N + (N - t) / N * t / (N - 1)


def enumerate_oracles(n_qubits: int, n_marked: int) -> list[tuple[str, ...]]:
    """All marked sets of the given size, in lexicographic order."""
    labels = all_labels(n_qubits)
    if not 1 <= n_marked <= len(labels):
        raise ValueError(f"n_marked must be in 1..{len(labels)}, got {n_marked}")
    return [tuple(c) for c in itertools.combinations(labels, n_marked)]
