"""Stochastic gate noise and readout errors, and undoing the latter.

Run as: python demos/04_noise_and_spam.py
"""

import numpy as np

from iongrover import (
    FITTED_P_XX,
    GroverConfig,
    NoiseModel,
    OracleSpec,
    SpamModel,
    apply_spam,
    classical_asp,
    correct_spam,
    confusion_matrix,
    enumerate_oracles,
    grover_circuit,
    marginal,
    noisy_truth_table,
    run_grover,
    run_noisy,
    toffoli3_template,
    truth_table_fidelity,
)
from iongrover.decompositions import toffoli3_unitary
from iongrover.metrics import asp, permutation_of

np.set_printoptions(precision=4, suppress=True)

# After each coupling, with probability p_xx, a random two-qubit Pauli
# hits the pair. The fitted rate reproduces a truth-table fidelity of
# about 0.896 for the five-coupling doubly-controlled NOT.
noise = NoiseModel(p_xx=FITTED_P_XX)
table = noisy_truth_table(toffoli3_template(0, 1, 2), (0, 1, 2), noise, 20000, seed=1)
fid = truth_table_fidelity(table, permutation_of(toffoli3_unitary()))
print(f"toffoli3 at p_xx={FITTED_P_XX}: truth-table fidelity {fid:.4f}")

# The same noise degrades search. Phase oracles are cheaper than
# boolean ones, so they keep more of their advantage; both beat the
# classical two-query baseline.
for t in (1, 2):
    row = [f"t={t}"]
    for style in ("phase", "boolean"):
        vals = []
        for idx, marked in enumerate(enumerate_oracles(3, t)):
            circ = grover_circuit(GroverConfig(OracleSpec(3, marked, style)))
            dist = marginal(run_noisy(circ, noise, 2000, 100 + idx),
                            circ.n_qubits, (0, 1, 2))
            vals.append(asp(dist, marked))
        row.append(f"{style} {np.mean(vals):.3f}")
    row.append(f"classical {classical_asp(8, t):.3f}")
    print("mean success: " + ", ".join(row))

# Readout errors mix the observed distribution; knowing the confusion
# matrix lets us invert them exactly.
spam = SpamModel(eps0=0.01, eps1=0.03, crosstalk=0.01)
true = run_grover(GroverConfig(OracleSpec(3, ("101",), "phase"))).distribution
observed = apply_spam(true, spam)
recovered = correct_spam(observed, spam)
print("\ntrue      P(101) =", true[0b101])
print("observed  P(101) =", observed[0b101])
print("recovered P(101) =", recovered[0b101])

# Crosstalk makes a dark qubit next to a bright one read bright more
# often; compare the confusion columns for true state 010.
cols = {}
for name, ct in (("no crosstalk", 0.0), ("crosstalk 5%", 0.05)):
    m = confusion_matrix(SpamModel(eps0=0.01, eps1=0.0, crosstalk=ct), 3)
    cols[name] = m[:, 0b010]
    print(f"{name}: P(read 110 | true 010) = {m[0b110, 0b010]:.4f}")
