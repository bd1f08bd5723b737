"""Double, crossed and half projections on Kronecker obscure qubits.

Every projection is a pair of diagonal 0/1 blocks, one acting on the
quantum block and one on the membership block:

======  =======  ==========
name    quantum  membership
======  =======  ==========
P0      P_0      P_0
P1      P_1      P_1
P01     P_0      P_1
P10     P_1      P_0
Q0      P_0      0
Q1      P_1      0
Q0mu    0        P_0
Q1mu    0        P_1
======  =======  ==========
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnknownNameError
from .kron_state import BlockVector, KroneckerQubit, inner_vector

_DIAGS = {
    "0": (0, 0),
    "P0": (1, 0),
    "P1": (0, 1),
}

_TABLE = {
    "P0": ("P0", "P0"),
    "P1": ("P1", "P1"),
    "P01": ("P0", "P1"),
    "P10": ("P1", "P0"),
    "Q0": ("P0", "0"),
    "Q1": ("P1", "0"),
    "Q0mu": ("0", "P0"),
    "Q1mu": ("0", "P1"),
}

NAMES = tuple(_TABLE)


@dataclass(frozen=True)
class DoubleProjection:
    """Projection given by the diagonals of its quantum and membership blocks."""

    quantum_diag: tuple[int, int]
    membership_diag: tuple[int, int]
    name: str | None = None

    @property
    def quantum_block(self) -> np.ndarray:
        return np.diag(np.array(self.quantum_diag, dtype=float))

    @property
    def membership_block(self) -> np.ndarray:
        return np.diag(np.array(self.membership_diag, dtype=float))

    def __matmul__(self, other: "DoubleProjection") -> "DoubleProjection":
        q = tuple(x * y for x, y in zip(self.quantum_diag, other.quantum_diag))
        m = tuple(x * y for x, y in zip(self.membership_diag, other.membership_diag))
        return DoubleProjection(q, m, _lookup_name(q, m))

    def __add__(self, other: "DoubleProjection") -> "DoubleProjection":
        q = tuple(x + y for x, y in zip(self.quantum_diag, other.quantum_diag))
        m = tuple(x + y for x, y in zip(self.membership_diag, other.membership_diag))
        return DoubleProjection(q, m, _lookup_name(q, m))

    def __eq__(self, other):
        if not isinstance(other, DoubleProjection):
            return NotImplemented
        return (self.quantum_diag, self.membership_diag) == (other.quantum_diag, other.membership_diag)

    def __hash__(self):
        return hash((self.quantum_diag, self.membership_diag))

    @property
    def is_zero(self) -> bool:
        return not any(self.quantum_diag) and not any(self.membership_diag)

    def dense(self) -> np.ndarray:
        """4x4 block-diagonal rendering, for display."""
        out = np.zeros((4, 4))
        out[:2, :2] = self.quantum_block
        out[2:, 2:] = self.membership_block
        return out


def _lookup_name(q, m):
    for name, (qn, mn) in _TABLE.items():
        if _DIAGS[qn] == tuple(q) and _DIAGS[mn] == tuple(m):
            return name
    if not any(q) and not any(m):
        return "0"
    return None


def projection(name: str) -> DoubleProjection:
    try:
        qn, mn = _TABLE[name]
    except KeyError:
        raise UnknownNameError(f"unknown projection {name!r}; expected one of {', '.join(NAMES)}") from None
    return DoubleProjection(_DIAGS[qn], _DIAGS[mn], name)


def zero() -> DoubleProjection:
    return DoubleProjection((0, 0), (0, 0), "0")


def identity() -> DoubleProjection:
    return DoubleProjection((1, 1), (1, 1), None)


def standard_projections() -> tuple[DoubleProjection, DoubleProjection]:
    return projection("P0"), projection("P1")


def crossed_projections() -> tuple[DoubleProjection, DoubleProjection]:
    return projection("P01"), projection("P10")


def half_projections() -> tuple[DoubleProjection, DoubleProjection, DoubleProjection, DoubleProjection]:
    """(Q0, Q1, Q0mu, Q1mu)."""
    return projection("Q0"), projection("Q1"), projection("Q0mu"), projection("Q1mu")


def apply(P: DoubleProjection, ket: "KroneckerQubit | BlockVector") -> BlockVector:
    """Blockwise action of ``P``; the result is generally unnormalized."""
    v = ket.vector() if isinstance(ket, KroneckerQubit) else ket
    return BlockVector(P.quantum_block @ v.quantum, P.membership_block @ v.membership)


def expectation(P: DoubleProjection, ket: KroneckerQubit) -> float:
    """<Psi|P|Psi> in closed form: (sum of the selected |a_i|^2 and alpha_j^2) / 2."""
    q = np.dot(P.quantum_diag, np.abs(ket.a) ** 2)
    m = np.dot(P.membership_diag, ket.alpha**2)
    return float(0.5 * (q + m))


def expectation_via_inner(P: DoubleProjection, ket: KroneckerQubit) -> float:
    """Same value as :func:`expectation`, computed as <Psi| (P|Psi>)."""
    return inner_vector(ket, apply(P, ket)).real


def expectations(ket: KroneckerQubit) -> dict[str, float]:
    return {name: expectation(projection(name), ket) for name in NAMES}
