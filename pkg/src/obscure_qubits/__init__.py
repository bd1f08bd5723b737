"""Simulation of obscure (fuzzy) qubits carrying quantum and membership amplitudes."""

from .entangle import (
    Concurrence,
    TwoQubitRegister,
    concurrence,
    is_separable,
    register_report,
    scalar_concurrence,
    tensor_two,
    vector_concurrence,
)
from .errors import (
    ArityError,
    DomainError,
    NormalizationError,
    ObscureError,
    RangeError,
    RealnessError,
    UnknownNameError,
)
from .gates import ObscureQuantumGate, compose, make_gate
from .kron_state import BlockVector, KroneckerQubit, ObscureAmplitude, density4, from_prob_membership, inner
from .membership import MembershipModel
from .obscure_state import BlochParams, ObscureQudit, from_bloch, new_qudit

__version__ = "0.1.0"
