"""Secret-key-rate bounds: the improvement term in action.

Alice and Bob share the A and B parts of a tripartite state while Eve holds E.
We compare the plain entropic bound with the improved one (which adds
max(0, delta)) and the measured-statistics variant, on named states and a
random batch.
"""

import numpy as np

from triuncert import (
    DensityMatrix,
    key_report,
    make_ghz,
    maximally_mixed,
    pauli_basis,
    random_state,
)

x, z = pauli_basis("x"), pauli_basis("z")

bell = np.zeros((4, 4), dtype=complex)
bell[np.ix_((0, 3), (0, 3))] = 0.5
eve = np.diag([0.6, 0.4])

named = [
    ("Bell pair, decoupled Eve", DensityMatrix((2, 2, 2), np.kron(bell, eve))),
    ("GHZ(pi/4) (Eve holds C)", make_ghz(np.pi / 4)),
    ("maximally mixed", maximally_mixed()),
]

print(f"{'state':26s} {'K_plain':>9s} {'K_improved':>11s} {'K_measured':>11s} {'delta':>9s}")
for name, rho in named:
    rep = key_report(rho, x, z)
    print(
        f"{name:26s} {rep.k_berta:9.4f} {rep.k_improved:11.4f} "
        f"{rep.k_measured:11.4f} {rep.delta:+9.4f}"
    )

SAMPLES = 300
improved = 0
positive = 0
for seed in range(SAMPLES):
    rho, _ = random_state(seed)
    rep = key_report(rho, x, z)
    improved += rep.k_improved > rep.k_berta + 1e-12
    positive += rep.k_improved > 0
print(f"\nrandom batch of {SAMPLES}: improvement term strictly positive on "
      f"{improved} states; certifiable key (K_improved > 0) on {positive}.")
print("K_improved - K_plain always equals max(0, delta) exactly.")
