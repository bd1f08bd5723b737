"""Two obscure-qubit registers and double entanglement.

A register holds amplitude matrices ``b[i, j]`` (quantum, complex) and
``beta[i, j]`` (membership, real) for the basis states ``|i j'>``.  The
bracketed columns of a written-out state are the entries themselves; the
overall ``1/sqrt(2)`` is an external factor.

Entanglement is judged independently in each sector by the determinant of
the amplitude matrix, which gives partially entangled states when only one
sector has a non-zero determinant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, NormalizationError
from .kron_state import KroneckerQubit
from .membership import DEFAULT_TOL, MembershipModel

BASIS_LABELS = ("00'", "01'", "10'", "11'")


@dataclass(frozen=True, eq=False)
class TwoQubitRegister:
    b: np.ndarray
    beta: np.ndarray
    unnormalized: bool = False
    tol: float = field(default=DEFAULT_TOL, repr=False)

    def __post_init__(self):
        b = np.asarray(self.b, dtype=complex).reshape(2, 2)
        beta = np.asarray(self.beta, dtype=float).reshape(2, 2)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "beta", beta)
        if self.unnormalized:
            return
        qn = float(np.sum(np.abs(b) ** 2))
        if abs(qn - 1.0) > self.tol:
            raise NormalizationError("quantum", qn)
        mn = float(np.sum(beta**2))
        if abs(mn - 1.0) > self.tol:
            raise NormalizationError("membership", mn)

    @classmethod
    def from_columns(cls, b, beta, **kw) -> "TwoQubitRegister":
        """Register from amplitudes listed in the order 00', 01', 10', 11'."""
        return cls(np.reshape(b, (2, 2)), np.reshape(beta, (2, 2)), **kw)

    def __eq__(self, other):
        if not isinstance(other, TwoQubitRegister):
            return NotImplemented
        return np.array_equal(self.b, other.b) and np.array_equal(self.beta, other.beta)


@dataclass(frozen=True)
class Concurrence:
    c_q: float
    c_mu: float
    c_scal: float


def tensor_two(x: KroneckerQubit, y: KroneckerQubit) -> TwoQubitRegister:
    """Product of two Kronecker qubits.

    b[i, j] = a_i a'_j / sqrt(2) and beta[i, j] = alpha_i alpha'_j / sqrt(2).
    With normalized inputs the sector sums come out as 1/2, so the result
    is flagged unnormalized; :func:`register_report` rescales.
    """
    s = 1.0 / math.sqrt(2.0)
    b = s * np.outer(x.a, y.a)
    beta = s * np.outer(x.alpha, y.alpha)
    return TwoQubitRegister(b, beta, unnormalized=True, tol=min(x.tol, y.tol))


def is_separable(reg: TwoQubitRegister, tol: float | None = None) -> tuple[bool, bool]:
    """(quantum separable, membership separable)."""
    tol = reg.tol if tol is None else tol
    return bool(abs(np.linalg.det(reg.b)) <= tol), bool(abs(np.linalg.det(reg.beta)) <= tol)


def _det2(m: np.ndarray):
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def vector_concurrence(reg: TwoQubitRegister) -> tuple[float, float]:
    return float(2.0 * abs(_det2(reg.b))), float(2.0 * abs(_det2(reg.beta)))


def scalar_concurrence(reg: TwoQubitRegister) -> float:
    """Root mean square of the vector concurrence components."""
    c_q, c_mu = vector_concurrence(reg)
    return math.sqrt((c_q**2 + c_mu**2) / 2.0)


def concurrence(reg: TwoQubitRegister) -> Concurrence:
    c_q, c_mu = vector_concurrence(reg)
    return Concurrence(c_q, c_mu, math.sqrt((c_q**2 + c_mu**2) / 2.0))


def register_report(reg: TwoQubitRegister, model="born") -> dict[str, dict[str, float]]:
    """Probabilities and Born-like memberships of the four basis states.

    Both sectors are divided by their sums of squares, so valid registers
    report the plain squares and product registers are rescaled.
    """
    if MembershipModel.from_name(model) is not MembershipModel.BORN:
        raise DomainError("register memberships are defined for the born model only")
    p = np.abs(reg.b.reshape(4)) ** 2
    mu = reg.beta.reshape(4) ** 2
    if p.sum() <= reg.tol or mu.sum() <= reg.tol:
        raise DomainError("register has a vanishing sector")
    p = p / p.sum()
    mu = mu / mu.sum()
    return {
        "probabilities": dict(zip(BASIS_LABELS, map(float, p))),
        "memberships": dict(zip(BASIS_LABELS, map(float, mu))),
    }
