"""Tour of the native gate set: R(theta, phi) rotations and XX(chi).

Run as: python demos/01_native_gates.py
"""

import numpy as np

from iongrover import (
    Circuit,
    RotationGate,
    XXGate,
    init_basis,
    probabilities,
    r_matrix,
    run,
    sample,
    xx_matrix,
)

np.set_printoptions(precision=4, suppress=True)

# A rotation by pi about the x axis is a bit flip (with a phase):
print("R(pi, 0) |0> =", r_matrix(np.pi, 0.0) @ [1, 0])

# phi picks the rotation axis in the equatorial plane. phi = pi/2 is
# the y axis, which takes |0> to the uniform superposition:
print("R(pi/2, pi/2) |0> =", r_matrix(np.pi / 2, np.pi / 2) @ [1, 0])

# The two-qubit coupling entangles at chi = pi/4 ...
bell_like = xx_matrix(np.pi / 4) @ np.eye(4)[:, 0]
print("\nXX(pi/4) |00> =", bell_like)

# ... and two half-strength couplings compose to one full one:
half = xx_matrix(np.pi / 8)
print("XX(pi/8)^2 == XX(pi/4):", np.allclose(half @ half, xx_matrix(np.pi / 4)))

# Circuits are flat gate lists over a fixed register; qubit 0 is the
# leftmost bit of a label.
circ = Circuit(
    2,
    (
        RotationGate(0, np.pi, 0.0),   # flip qubit 0: |00> -> |10>
        XXGate(0, 1, np.pi / 4),       # entangle the pair
    ),
)
state = run(circ, init_basis(2, "00"))
print("\ncircuit output probabilities:", probabilities(state))
print("labels:                        00      01      10      11")

# Sampling is deterministic for a fixed seed.
print("1000 shots, seed 7:", sample(state, 1000, seed=7))
