"""Product-form obscure qudits.

Each basis state ``|i>`` carries a complex probability amplitude ``a_i`` and
a real membership amplitude ``alpha_i``; the state vector itself has the
combined coefficients ``alpha_i * a_i``.  Both factors are stored so that
probabilities and memberships can be read off separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import membership as _membership
from .errors import DomainError, NormalizationError, RangeError
from .membership import DEFAULT_TOL, MembershipModel


@dataclass(frozen=True)
class BlochParams:
    theta: float
    phi: float
    theta_mu: float

    def __post_init__(self):
        checks = (
            ("theta", self.theta, math.pi),
            ("phi", self.phi, 2 * math.pi),
            ("theta_mu", self.theta_mu, math.pi),
        )
        for name, value, hi in checks:
            if not -DEFAULT_TOL <= value <= hi + DEFAULT_TOL:
                raise RangeError(f"{name}={value!r} outside [0, {hi}]")


@dataclass(frozen=True, eq=False)
class ObscureQudit:
    """Obscure qudit with quantum amplitudes ``quantum`` and membership ``membership``.

    ``unnormalized=True`` skips the normalization checks; it marks the
    output of :func:`obscure_measure` and similar non-unitary maps.
    """

    quantum: np.ndarray
    membership: np.ndarray
    model: MembershipModel = MembershipModel.BORN
    unnormalized: bool = False
    tol: float = field(default=DEFAULT_TOL, repr=False)

    def __post_init__(self):
        q = np.asarray(self.quantum, dtype=complex)
        m = np.asarray(self.membership, dtype=float)
        object.__setattr__(self, "quantum", q)
        object.__setattr__(self, "membership", m)
        object.__setattr__(self, "model", MembershipModel.from_name(self.model))
        if q.ndim != 1 or q.shape != m.shape or q.size < 2:
            raise DomainError(
                f"quantum and membership amplitudes need equal length >= 2, got {q.shape} and {m.shape}"
            )
        if self.unnormalized:
            return
        qnorm = float(np.sum(np.abs(q) ** 2))
        if abs(qnorm - 1.0) > self.tol:
            raise NormalizationError("quantum", qnorm)
        if np.any(m < -self.tol) or np.any(m > 1.0 + self.tol):
            raise RangeError(f"membership amplitudes {m.tolist()} outside [0, 1]")
        if self.model is MembershipModel.BORN:
            mnorm = float(np.sum(m**2))
            if abs(mnorm - 1.0) > self.tol:
                raise NormalizationError("membership", mnorm)

    @property
    def dim(self) -> int:
        return self.quantum.size

    @property
    def coefficients(self) -> np.ndarray:
        """Combined coefficients ``alpha_i * a_i`` of the state vector."""
        return self.membership * self.quantum

    def __eq__(self, other):
        if not isinstance(other, ObscureQudit):
            return NotImplemented
        return (
            np.array_equal(self.quantum, other.quantum)
            and np.array_equal(self.membership, other.membership)
            and self.model is other.model
            and self.unnormalized == other.unnormalized
        )


def new_qudit(quantum, membership, model="born", tol: float = DEFAULT_TOL) -> ObscureQudit:
    return ObscureQudit(quantum, membership, MembershipModel.from_name(model), tol=tol)


def from_bloch(params: BlochParams) -> ObscureQudit:
    """Obscure qubit from Bloch angles (theta, phi) and the membership angle theta_mu."""
    th, ph, tm = params.theta, params.phi, params.theta_mu
    quantum = [math.cos(th / 2), np.exp(1j * ph) * math.sin(th / 2)]
    memb = [math.cos(tm / 2), math.sin(tm / 2)]
    return ObscureQudit(quantum, memb, MembershipModel.BORN)


def norm(state: ObscureQudit) -> float:
    """<psi|psi> = sum_i alpha_i^2 |a_i|^2, which is not 1 in general."""
    return float(np.sum(state.membership**2 * np.abs(state.quantum) ** 2))


def bloch_norm(theta: float, theta_mu: float) -> float:
    """Closed form of :func:`norm` for a Bloch-parametrized qubit."""
    return 0.5 + 0.25 * math.cos(theta + theta_mu) + 0.25 * math.cos(theta - theta_mu)


def probabilities(state: ObscureQudit) -> np.ndarray:
    return np.abs(state.quantum) ** 2


def memberships(state: ObscureQudit) -> np.ndarray:
    return _membership.evaluate(state.model, state.membership, state.tol)


def membership_matrix(alpha0: float, alpha1: float) -> np.ndarray:
    """The diagonal membership matrix diag(alpha0, alpha1)."""
    return np.diag([float(alpha0), float(alpha1)])


def obscure_measure(matrix, state: ObscureQudit) -> ObscureQudit:
    """Apply a membership matrix to the state vector.

    The membership matrix multiplies into the membership factor, so the
    combined coefficients become ``M_ii * alpha_i * a_i``.  Built from the
    state's own amplitudes this gives ``alpha_i**2 * a_i``.  The map is
    not unitary, so the result is flagged unnormalized.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (state.dim, state.dim) or np.count_nonzero(matrix - np.diag(np.diag(matrix))):
        raise DomainError("membership matrix must be diagonal and match the state dimension")
    return ObscureQudit(
        state.quantum,
        np.diag(matrix) * state.membership,
        state.model,
        unnormalized=True,
        tol=state.tol,
    )


def density2(state: ObscureQudit) -> np.ndarray:
    """2x2 obscure density matrix.

    Diagonal alpha_i^2 |a_i|^2; the (0, 1) entry is alpha_0 a_0* alpha_1 a_1
    and the (1, 0) entry is its conjugate.
    """
    if state.dim != 2:
        raise DomainError("density2 needs a two-level state")
    c = state.coefficients
    return np.outer(np.conj(c), c)


def from_classical_quantum(cf: complex, cg: complex, f: float, g: float) -> tuple[complex, complex]:
    """Combined coefficients (alpha_0 a_0, alpha_1 a_1) of c_f|s>_f + c_g|s>_g.

    Only the products are determined; splitting them into a membership and a
    quantum factor is not unique and is left to the caller.
    """
    for name, v in (("f", f), ("g", g)):
        if not 0.0 <= v <= 1.0:
            raise RangeError(f"{name}={v!r} outside [0, 1]")
    c0 = cf * math.sqrt(1 - f) + cg * math.sqrt(1 - g)
    c1 = cf * math.sqrt(f) + cg * math.sqrt(g)
    return c0, c1
