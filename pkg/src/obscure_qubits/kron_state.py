"""Kronecker obscure qubits.

The state is a double superposition ``(A_0|0> + A_1|1>)/sqrt(2)`` whose
obscure-quantum amplitudes ``A_i = [a_i, alpha_i]`` pair a complex quantum
amplitude with a real membership amplitude.  The quantum block lives in the
Hilbert space and the membership block in a separate real membership space;
the two are never mixed, so vectors in the total space are kept as a pair of
2-vectors (:class:`BlockVector`) rather than one 4-vector.

The global ``1/sqrt(2)`` is not stored in the amplitudes.  It is applied by
:meth:`KroneckerQubit.vector`, :func:`inner` and :func:`density4`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import membership as _membership
from .errors import DomainError, NormalizationError, RangeError
from .membership import DEFAULT_TOL, MembershipModel

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class ObscureAmplitude:
    a: complex
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "alpha", float(self.alpha))
        if abs(self.a) > 1.0 + DEFAULT_TOL:
            raise RangeError(f"|a| = {abs(self.a)!r} exceeds 1")
        if abs(self.alpha) > 1.0 + DEFAULT_TOL:
            raise RangeError(f"alpha = {self.alpha!r} outside [-1, 1]")


@dataclass(frozen=True, eq=False)
class BlockVector:
    """A vector of the total space: quantum block (complex) and membership block (real)."""

    quantum: np.ndarray
    membership: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "quantum", np.asarray(self.quantum, dtype=complex))
        m = np.asarray(self.membership)
        if np.iscomplexobj(m):
            if np.any(np.abs(m.imag) > DEFAULT_TOL):
                raise DomainError("membership block must be real")
            m = m.real
        object.__setattr__(self, "membership", m.astype(float))
        if self.quantum.shape != self.membership.shape:
            raise DomainError("quantum and membership blocks must have the same shape")

    def __add__(self, other: "BlockVector") -> "BlockVector":
        return BlockVector(self.quantum + other.quantum, self.membership + other.membership)

    def scale(self, factor: float) -> "BlockVector":
        return BlockVector(self.quantum * factor, self.membership * factor)

    def dense(self) -> np.ndarray:
        """Stacked 4-vector, for display only."""
        return np.concatenate([self.quantum, self.membership.astype(complex)])

    def allclose(self, other: "BlockVector", atol: float = 1e-12) -> bool:
        return np.allclose(self.quantum, other.quantum, atol=atol, rtol=0) and np.allclose(
            self.membership, other.membership, atol=atol, rtol=0
        )

    def __eq__(self, other):
        if not isinstance(other, BlockVector):
            return NotImplemented
        return np.array_equal(self.quantum, other.quantum) and np.array_equal(
            self.membership, other.membership
        )


def total_basis(index: int) -> BlockVector:
    """Unit vector E_i = [e_i; eps_i] of the total space."""
    if index not in (0, 1):
        raise DomainError(f"basis index must be 0 or 1, got {index!r}")
    e = np.zeros(2)
    e[index] = 1.0
    return BlockVector(e, e.copy())


@dataclass(frozen=True, eq=False)
class KroneckerQubit:
    """Kronecker obscure qubit with quantum column ``a`` and membership column ``alpha``."""

    a: np.ndarray
    alpha: np.ndarray
    unnormalized: bool = False
    tol: float = field(default=DEFAULT_TOL, repr=False)

    def __post_init__(self):
        a = np.asarray(self.a, dtype=complex)
        alpha = np.asarray(self.alpha, dtype=float)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "alpha", alpha)
        if a.shape != (2,) or alpha.shape != (2,):
            raise DomainError("a Kronecker qubit needs two quantum and two membership amplitudes")
        if np.any(np.abs(alpha) > 1.0 + self.tol):
            raise RangeError(f"membership amplitudes {alpha.tolist()} outside [-1, 1]")
        if self.unnormalized:
            return
        qn = float(np.sum(np.abs(a) ** 2))
        if abs(qn - 1.0) > self.tol:
            raise NormalizationError("quantum", qn)
        mn = float(np.sum(alpha**2))
        if abs(mn - 1.0) > self.tol:
            raise NormalizationError("membership", mn)

    @classmethod
    def from_amplitudes(cls, A0: ObscureAmplitude, A1: ObscureAmplitude, **kw) -> "KroneckerQubit":
        return cls([A0.a, A1.a], [A0.alpha, A1.alpha], **kw)

    @property
    def A0(self) -> ObscureAmplitude:
        return ObscureAmplitude(self.a[0], self.alpha[0])

    @property
    def A1(self) -> ObscureAmplitude:
        return ObscureAmplitude(self.a[1], self.alpha[1])

    def vector(self) -> BlockVector:
        """The state as a vector of the total space, 1/sqrt(2) included."""
        return BlockVector(self.a / SQRT2, self.alpha / SQRT2)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.a) ** 2

    def memberships(self, model="born") -> np.ndarray:
        return _membership.evaluate(model, self.alpha, self.tol)

    def __eq__(self, other):
        if not isinstance(other, KroneckerQubit):
            return NotImplemented
        return np.array_equal(self.a, other.a) and np.array_equal(self.alpha, other.alpha)


def from_vector(v: BlockVector, tol: float = DEFAULT_TOL) -> KroneckerQubit:
    """Read a total-space vector back as amplitude columns, without renormalizing."""
    return KroneckerQubit(v.quantum * SQRT2, v.membership * SQRT2, unnormalized=True, tol=tol)


def renormalize(v: "BlockVector | KroneckerQubit", tol: float = DEFAULT_TOL) -> KroneckerQubit:
    """Rescale each block separately to unit length.

    Raises DomainError when a block vanishes, since it has no direction.
    """
    if isinstance(v, KroneckerQubit):
        a, alpha = v.a, v.alpha
    else:
        a, alpha = v.quantum, v.membership
    na = float(np.linalg.norm(a))
    nm = float(np.linalg.norm(alpha))
    if na <= tol or nm <= tol:
        raise DomainError("cannot renormalize a state with a vanishing block")
    return KroneckerQubit(a / na, alpha / nm, tol=tol)


def kron_like(A: ObscureAmplitude, e_index: int) -> BlockVector:
    """A ~x_K e_index: ``a * e`` in the quantum block, ``alpha * eps`` in the membership block."""
    E = total_basis(e_index)
    return BlockVector(A.a * E.quantum, A.alpha * E.membership)


def hadamard_product(x, y):
    """Element-wise product of two pairs: [p, q] o [r, s] = [p*r, q*s].

    Entries may be scalars or arrays, so ``A o E`` with ``E`` a total basis
    vector works as well as a product of two amplitude pairs.
    """
    if isinstance(x, ObscureAmplitude):
        x = (x.a, x.alpha)
    if isinstance(y, ObscureAmplitude):
        y = (y.a, y.alpha)
    if isinstance(y, BlockVector):
        return BlockVector(x[0] * y.quantum, x[1] * y.membership)
    if len(x) != len(y):
        raise DomainError("hadamard_product needs operands of the same length")
    return tuple(np.multiply(p, q) for p, q in zip(x, y))


def inner(bra: KroneckerQubit, ket: KroneckerQubit) -> complex:
    """<bra|ket>; quantum parts conjugated, membership parts not."""
    return complex(0.5 * (np.vdot(bra.a, ket.a) + np.dot(bra.alpha, ket.alpha)))


def inner_vector(bra: KroneckerQubit, v: BlockVector) -> complex:
    """<bra| applied to an arbitrary total-space vector."""
    b = bra.vector()
    return complex(np.vdot(b.quantum, v.quantum) + np.dot(b.membership, v.membership))


def density4(ket: KroneckerQubit) -> np.ndarray:
    """4x4 obscure density matrix |Psi><Psi|.

    Rows and columns are ordered (a_0, a_1, alpha_0, alpha_1); the bra uses
    the conjugated quantum amplitudes and the plain membership amplitudes.
    """
    col = np.concatenate([ket.a, ket.alpha.astype(complex)])
    row = np.concatenate([np.conj(ket.a), ket.alpha.astype(complex)])
    return 0.5 * np.outer(col, row)


def from_prob_membership(p: float, mu: float, model="arc") -> KroneckerQubit:
    """Real Kronecker qubit with probability ``p`` and arc-model membership ``mu`` for |0>.

    a = (sqrt(p), sqrt(1-p)); alpha = (cos(pi mu / 2), sin(pi mu / 2)).
    """
    if MembershipModel.from_name(model) is not MembershipModel.ARC:
        raise DomainError("the (probability, membership) construction is defined for the arc model")
    for name, v in (("p", p), ("mu", mu)):
        if not 0.0 <= v <= 1.0:
            raise RangeError(f"{name}={v!r} outside [0, 1]")
    a = [math.sqrt(p), math.sqrt(1.0 - p)]
    alpha = [math.cos(math.pi * mu / 2), math.sin(math.pi * mu / 2)]
    return KroneckerQubit(a, alpha)
