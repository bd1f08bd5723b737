"""Obscure-quantum gates.

A gate is a block-diagonal pair ``{U, U_mu}``: a unitary ``U`` acting on
quantum amplitudes and a real orthogonal ``U_mu`` acting on membership
amplitudes.  Off-diagonal blocks are not supported.

Two-qubit blocks act on amplitude vectors ordered ``00, 01, 10, 11`` with
the first qubit as the most significant index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .entangle import TwoQubitRegister
from .errors import ArityError, DomainError, RealnessError, UnknownNameError
from .kron_state import KroneckerQubit
from .membership import DEFAULT_TOL

_S = 1.0 / math.sqrt(2.0)

GATES: dict[str, np.ndarray] = {
    "I": np.eye(2, dtype=complex),
    "H": np.array([[_S, _S], [_S, -_S]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "SWAP": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
}

ALIASES = {"NOT": "X"}


def canonical_name(name: str) -> str:
    key = ALIASES.get(name.upper(), name.upper())
    if key not in GATES:
        known = ", ".join(sorted(set(GATES) | set(ALIASES)))
        raise UnknownNameError(f"unknown gate {name!r}; expected one of {known}")
    return key


def gate_matrix(name: str, arity: int | None = None) -> np.ndarray:
    """Matrix of a named gate; ``I`` is sized by ``arity`` (default 1)."""
    key = canonical_name(name)
    if key == "I" and arity is not None:
        return np.eye(2**arity, dtype=complex)
    return GATES[key].copy()


def _arity_of(matrix: np.ndarray) -> int:
    n = matrix.shape[0]
    if matrix.shape != (n, n) or n not in (2, 4):
        raise ArityError(f"gate blocks must be 2x2 or 4x4, got {matrix.shape}")
    return 1 if n == 2 else 2


@dataclass(frozen=True, eq=False)
class ObscureQuantumGate:
    quantum_block: np.ndarray
    membership_block: np.ndarray
    name: str | None = None
    tol: float = field(default=DEFAULT_TOL, repr=False)

    def __post_init__(self):
        U = np.asarray(self.quantum_block, dtype=complex)
        M = np.asarray(self.membership_block)
        if np.iscomplexobj(M):
            if np.any(np.abs(M.imag) > self.tol):
                raise RealnessError("membership block must have real entries")
            M = M.real
        M = M.astype(float)
        if _arity_of(U) != _arity_of(M):
            raise ArityError(f"block sizes differ: {U.shape} vs {M.shape}")
        n = U.shape[0]
        if not np.allclose(U.conj().T @ U, np.eye(n), atol=self.tol, rtol=0):
            raise DomainError("quantum block is not unitary")
        if not np.allclose(M.T @ M, np.eye(n), atol=self.tol, rtol=0):
            raise DomainError("membership block is not orthogonal")
        object.__setattr__(self, "quantum_block", U)
        object.__setattr__(self, "membership_block", M)

    @property
    def arity(self) -> int:
        return _arity_of(self.quantum_block)

    def dense(self) -> np.ndarray:
        """Full block-diagonal matrix, for display."""
        n = self.quantum_block.shape[0]
        out = np.zeros((2 * n, 2 * n), dtype=complex)
        out[:n, :n] = self.quantum_block
        out[n:, n:] = self.membership_block
        return out

    def __matmul__(self, other: "ObscureQuantumGate") -> "ObscureQuantumGate":
        return compose(self, other)

    def allclose(self, other: "ObscureQuantumGate", atol: float = 1e-12) -> bool:
        return (
            self.arity == other.arity
            and np.allclose(self.quantum_block, other.quantum_block, atol=atol, rtol=0)
            and np.allclose(self.membership_block, other.membership_block, atol=atol, rtol=0)
        )


def make_gate(quantum_name: str, membership_name: str = "I") -> ObscureQuantumGate:
    """Gate from a pair of shipped names, e.g. ``make_gate("H", "NOT")``.

    ``I`` takes the arity of the other slot; Y is rejected in the membership slot.
    """
    qk = canonical_name(quantum_name)
    mk = canonical_name(membership_name)
    qa = None if qk == "I" else _arity_of(GATES[qk])
    ma = None if mk == "I" else _arity_of(GATES[mk])
    if qa is not None and ma is not None and qa != ma:
        raise ArityError(f"{quantum_name} acts on {qa} qubit(s) but {membership_name} on {ma}")
    arity = qa or ma or 1
    U = gate_matrix(qk, arity)
    M = gate_matrix(mk, arity)
    if np.any(np.abs(M.imag) > 0):
        raise RealnessError(f"{membership_name} has complex entries and cannot act on membership amplitudes")
    return ObscureQuantumGate(U, M.real, name=f"{qk}/{mk}")


def identity(arity: int = 1) -> ObscureQuantumGate:
    n = 2**arity
    return ObscureQuantumGate(np.eye(n), np.eye(n), name="I/I")


def apply(G: ObscureQuantumGate, ket: KroneckerQubit) -> KroneckerQubit:
    """Transform quantum and membership columns independently."""
    if G.arity != 1:
        raise ArityError("apply needs a single-qubit gate; use apply2 for registers")
    return KroneckerQubit(
        G.quantum_block @ ket.a,
        G.membership_block @ ket.alpha,
        unnormalized=ket.unnormalized,
        tol=ket.tol,
    )


def apply2(G: ObscureQuantumGate, reg: TwoQubitRegister) -> TwoQubitRegister:
    if G.arity != 2:
        raise ArityError("apply2 needs a two-qubit gate")
    b = (G.quantum_block @ reg.b.reshape(4)).reshape(2, 2)
    beta = (G.membership_block @ reg.beta.reshape(4)).reshape(2, 2)
    return TwoQubitRegister(b, beta, unnormalized=reg.unnormalized, tol=reg.tol)


def lift(G: ObscureQuantumGate, slot: int) -> ObscureQuantumGate:
    """Single-qubit gate acting on qubit ``slot`` (0 or 1) of a two-qubit register."""
    if G.arity != 1:
        raise ArityError("only single-qubit gates can be lifted")
    eye = np.eye(2)
    if slot == 0:
        U, M = np.kron(G.quantum_block, eye), np.kron(G.membership_block, eye)
    elif slot == 1:
        U, M = np.kron(eye, G.quantum_block), np.kron(eye, G.membership_block)
    else:
        raise ArityError(f"slot must be 0 or 1, got {slot!r}")
    return ObscureQuantumGate(U, M, name=G.name)


def compose(G1: ObscureQuantumGate, G2: ObscureQuantumGate) -> ObscureQuantumGate:
    """Blockwise product ``G1 @ G2``: ``G2`` acts first."""
    if G1.arity != G2.arity:
        raise ArityError(f"cannot compose arity {G1.arity} with arity {G2.arity}")
    return ObscureQuantumGate(
        G1.quantum_block @ G2.quantum_block,
        G1.membership_block @ G2.membership_block,
    )


def inverse(G: ObscureQuantumGate) -> ObscureQuantumGate:
    return ObscureQuantumGate(G.quantum_block.conj().T, G.membership_block.T)
