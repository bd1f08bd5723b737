"""
Double entanglement
===================

Two obscure qubits carry a 2x2 amplitude matrix in each sector.  Each
sector is entangled when its determinant is non-zero, so a register can be
entangled in one sector and separable in the other.
"""

import math

import numpy as np

from obscure_qubits import entangle as en
from obscure_qubits import gates
from obscure_qubits import kron_state as ks
from obscure_qubits.selfcheck import bell_register, intermediate_register

for label, reg in (("Bell analog", bell_register()), ("intermediate", intermediate_register())):
    c = en.concurrence(reg)
    print(f"{label}: C_vect = ({c.c_q:.4f}, {c.c_mu:.4f}), C_scal = {c.c_scal:.4f}")
    rep = en.register_report(reg)
    print("   p  :", {k: round(v, 4) for k, v in rep["probabilities"].items()})
    print("   mu :", {k: round(v, 4) for k, v in rep["memberships"].items()})

# the closed form of the intermediate scalar concurrence
print("radical:", math.sqrt(53 / 128 - math.sqrt(5) / 16 - math.sqrt(6) / 16))

# products are separable in both sectors
x = ks.from_prob_membership(0.5, 0.5)
y = ks.KroneckerQubit([1, 0], [1, 0])
prod = en.tensor_two(x, y)
print("product separable:", en.is_separable(prod))

# CNOT on the quantum side only entangles the quantum sector
out = gates.apply2(gates.make_gate("CNOT", "I"), prod)
print("after CNOT/I separable:", en.is_separable(out), "C_vect:", en.vector_concurrence(out))

# local gates leave |det b| unchanged
local = gates.apply2(gates.lift(gates.make_gate("H", "X"), 0), out)
print("c_q before/after local H:", en.vector_concurrence(out)[0], en.vector_concurrence(local)[0])
print("b =\n", np.round(local.b, 4))
