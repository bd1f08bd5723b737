"""
Obscure-quantum gates
=====================

A gate is a pair: a unitary for the quantum block and a real orthogonal
matrix for the membership block.
"""

import numpy as np

from obscure_qubits import gates
from obscure_qubits import kron_state as ks

e0 = ks.KroneckerQubit([1, 0], [1, 0])

# Hadamard on the quantum side, NOT on the membership side
g = gates.make_gate("H", "NOT")
print(g.dense().real.round(4))
out = gates.apply(g, e0)
print("a     ->", out.a.real)
print("alpha ->", out.alpha)

# composition is blockwise; the inverse undoes it
h = gates.compose(g, gates.make_gate("Z", "H"))
print("g then its inverse is I:", gates.compose(gates.inverse(h), h).allclose(gates.identity()))

# a membership gate can produce negative amplitudes, which the arc model rejects
neg = gates.apply(gates.make_gate("I", "H"), ks.KroneckerQubit([1, 0], [0, 1]))
print("alpha after I/H:", neg.alpha)
try:
    neg.memberships("arc")
except ValueError as exc:
    print("arc model:", exc)

# Y has complex entries, so it is not allowed as a membership gate
try:
    gates.make_gate("H", "Y")
except ValueError as exc:
    print("H/Y:", exc)

# the density transforms as D rho D^dagger
D = g.dense()
rho = ks.density4(e0)
print("blockwise conjugation:", np.allclose(ks.density4(out), D @ rho @ D.conj().T))
