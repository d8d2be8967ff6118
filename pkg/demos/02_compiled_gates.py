"""Standard gates compiled to the native set, and what they cost.

Run as: python demos/02_compiled_gates.py
"""

import numpy as np

from iongrover import (
    XXGate,
    circuit_unitary,
    cnot_template,
    equivalent_up_to_global_phase,
    fuse_rotations,
    toffoli3_template,
    toffoli4_template,
    toffoli_n_cost,
    xx_count,
)
from iongrover.decompositions import cnot_unitary, toffoli3_unitary

# One coupling plus four rotations make a CNOT, for either sign of the
# hardware coupling (the sign differs from ion pair to ion pair).
for sgn in (+1, -1):
    circ = cnot_template(0, 1, sgn)
    ok = equivalent_up_to_global_phase(circuit_unitary(circ), cnot_unitary())
    print(f"CNOT with sgn={sgn:+d}: {len(circ.gates)} gates, "
          f"{xx_count(circ)} coupling, exact={ok}")

# The doubly-controlled NOT uses five couplings: three at pi/8 (the
# controlled square root of X and its inverse) and two at pi/4 (the
# CNOTs that route the control).
toff = toffoli3_template(0, 1, 2)
chis = sorted(abs(g.chi) / np.pi for g in toff.gates if isinstance(g, XXGate))
print(f"\ntoffoli3: {xx_count(toff)} couplings, |chi|/pi = {chis}")
print("matches the ideal permutation:",
      equivalent_up_to_global_phase(circuit_unitary(toff), toffoli3_unitary()))

# Adding a control costs one ancilla and two relative-phase blocks of
# three CNOTs each; the blocks' phases cancel exactly.
t4 = toffoli4_template(0, 1, 2, 3, 4)
print(f"toffoli4: {xx_count(t4)} couplings on 4 qubits + 1 ancilla")

# Predicted scaling for wider controlled gates: 6n - 13 couplings and
# one fresh ancilla per two extra controls.
print("\n n  couplings  ancillas")
for n in range(3, 9):
    report = toffoli_n_cost(n)
    print(f"{n:2d} {report.xx_count:9d} {report.ancilla_count:9d}")

# Rotation fusion tidies adjacent same-axis rotations without changing
# the unitary; couplings on other qubits do not block the merge.
fused = fuse_rotations(toff)
print(f"\nfusion: {len(toff.gates)} gates -> {len(fused.gates)}, "
      "same unitary:",
      equivalent_up_to_global_phase(circuit_unitary(fused), circuit_unitary(toff)))
