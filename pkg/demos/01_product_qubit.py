"""
Product obscure qubits
======================

Each basis coefficient is a quantum amplitude times a membership amplitude.
The squared norm is no longer fixed at one.  With equal angles it dips to
1/2 at pi/2; with unequal angles it can vanish altogether.
"""

import math

import numpy as np

from obscure_qubits import obscure_state as qs
from obscure_qubits.membership import arc_membership, born_membership, outcome_bounds

# a state halfway round both spheres
s = qs.from_bloch(qs.BlochParams(math.pi / 2, 0.0, math.pi / 2))
print("coefficients:", s.coefficients)
print("norm:", qs.norm(s))

# along theta == theta_mu the norm is 1 - sin^2(theta)/2
thetas = np.linspace(0, math.pi, 91)
diag = np.array([qs.bloch_norm(t, t) for t in thetas])
print(f"diagonal minimum {diag.min():.6f} at theta={thetas[diag.argmin()]:.4f}")

# off the diagonal: a basis quantum state paired with the opposite membership
grid = np.array([[qs.bloch_norm(t, tm) for tm in thetas] for t in thetas])
i, j = np.unravel_index(grid.argmin(), grid.shape)
print(f"grid minimum {grid.min():.6f} at theta={thetas[i]:.4f}, theta_mu={thetas[j]:.4f}")

# the same membership amplitudes read through two models
alpha = (0.6, 0.8)
print("born:", born_membership(alpha))
print("arc: ", arc_membership(*alpha))

# membership of an outcome as an interval
print("bounds for mu = (0.2, 0.5):", outcome_bounds(0.2, 0.5))

# repeated obscure measurements squeeze the membership amplitudes
M = qs.membership_matrix(*s.membership)
once = qs.obscure_measure(M, s)
twice = qs.obscure_measure(M, once)
print("after one measurement:", once.coefficients)
print("after two:           ", twice.coefficients)

# 2x2 density: singular, and a projector only when the trace is one
rho = qs.density2(s)
print("density trace:", np.trace(rho).real, "det:", abs(np.linalg.det(rho)))
