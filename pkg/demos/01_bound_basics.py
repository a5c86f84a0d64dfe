"""Tour of the core quantities on named three-qubit states.

For each state we print the uncertainty sum U_L = S(X|B) + S(Z|C), the
state-dependent lower bound U_R = q_MU + max(0, delta), and the constant
comparison bound. Pauli x / z are the measured observables throughout.
"""

import math

from triuncert import full_report, make_ghz, make_w, make_werner, maximally_mixed, pauli_basis

x, z = pauli_basis("x"), pauli_basis("z")

states = [
    ("GHZ(beta=pi/8)", make_ghz(math.pi / 8)),
    ("GHZ(beta=pi/4)", make_ghz(math.pi / 4)),
    ("W(theta=1.0, alpha=pi/4)", make_w(1.0, math.pi / 4)),
    ("Werner(p=0.3)", make_werner(0.3)),
    ("Werner(p=0.9)", make_werner(0.9)),
    ("maximally mixed", maximally_mixed()),
]

print(f"{'state':28s} {'U_L':>10s} {'U_R':>10s} {'delta':>10s} {'q_MU':>6s} {'purity':>8s}")
for name, rho in states:
    rep = full_report(rho, x, z)
    print(
        f"{name:28s} {rep.u_left:10.6f} {rep.u_right:10.6f} "
        f"{rep.delta:+10.6f} {rep.q_mu:6.3f} {rep.purity:8.4f}"
    )

print()
print("Notes: pure states sit exactly at U_R = q_MU = 1; the maximally mixed")
print("state saturates U_R = 2; Werner states satisfy U_L = U_R exactly.")
