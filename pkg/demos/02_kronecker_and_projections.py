"""
Kronecker obscure qubits and double projections
===============================================

Quantum and membership amplitudes live in separate blocks of a
4-component column.  Projections act on both blocks at once (double),
on opposite indices (crossed) or on one block only (half).
"""

import numpy as np

from obscure_qubits import kron_state as ks
from obscure_qubits import projections as pj

# build a qubit from a probability and a membership degree
q = ks.from_prob_membership(0.3, 0.8)
print("a     =", q.a)
print("alpha =", q.alpha)
print("probabilities:", q.probabilities())
print("arc memberships:", q.memberships("arc"))
print("<q|q> =", ks.inner(q, q))

# the crossed projection P01 meets P0 in the half projection Q0
P0, P1 = pj.standard_projections()
P01, P10 = pj.crossed_projections()
print("P01 @ P0 =", (P01 @ P0).name)
print("P01 @ P10 is zero:", (P01 @ P10).is_zero)

# expectation values split into quantum and membership halves
for name, value in pj.expectations(q).items():
    print(f"  <{name}> = {value:.6f}")

# the 4x4 density is rank one with unit trace
rho = ks.density4(q)
print("trace:", np.trace(rho).real)
print("rank:", np.linalg.matrix_rank(rho))
print("||rho^2 - rho||:", np.linalg.norm(rho @ rho - rho))
