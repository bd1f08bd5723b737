import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from obscure_qubits import kron_state as ks
from obscure_qubits.errors import DomainError, NormalizationError, RangeError
from obscure_qubits.membership import arc_membership
from obscure_qubits.selfcheck import random_kronecker_qubit

R2 = math.sqrt(2)


@st.composite
def kets(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_kronecker_qubit(np.random.default_rng(seed))


def test_construction_checks():
    ks.KroneckerQubit([1, 0], [1, 0])
    with pytest.raises(NormalizationError):
        ks.KroneckerQubit([1, 0], [0.5, 0.5])
    with pytest.raises(NormalizationError):
        ks.KroneckerQubit([0.5, 0], [1, 0])
    with pytest.raises(RangeError):
        ks.ObscureAmplitude(0.5, 1.5)


@pytest.mark.parametrize(
    "A, idx, q, m",
    [
        (ks.ObscureAmplitude(1, 1), 0, (1, 0), (1, 0)),
        (ks.ObscureAmplitude(1 / R2, 0.6), 1, (0, 1 / R2), (0, 0.6)),
        (ks.ObscureAmplitude(0, 1), 0, (0, 0), (1, 0)),
    ],
)
def test_kron_like(A, idx, q, m):
    v = ks.kron_like(A, idx)
    np.testing.assert_allclose(v.quantum, q)
    np.testing.assert_allclose(v.membership, m)
    assert v.membership.dtype == float


def test_total_basis_range():
    with pytest.raises(DomainError):
        ks.total_basis(2)


def test_hadamard_product():
    A = ks.ObscureAmplitude(0.3 + 0.1j, 0.7)
    assert ks.hadamard_product(A, (1, 1)) == (A.a, A.alpha)
    assert ks.hadamard_product(A, (0, 0)) == (0, 0)
    got = ks.hadamard_product((0.5, 1 / R2), (1 / R2, 0.5))
    assert got == pytest.approx((1 / (2 * R2), 1 / (2 * R2)), abs=1e-15)


@given(kets())
def test_decomposition_forms_agree(ket):
    # sum of Kronecker-like products vs Hadamard products with E_i
    via_kron = (ks.kron_like(ket.A0, 0) + ks.kron_like(ket.A1, 1)).scale(1 / R2)
    via_hadamard = (
        ks.hadamard_product(ket.A0, ks.total_basis(0)) + ks.hadamard_product(ket.A1, ks.total_basis(1))
    ).scale(1 / R2)
    assert via_kron.allclose(via_hadamard, atol=1e-15)
    assert via_kron.allclose(ket.vector(), atol=1e-15)


@given(kets())
def test_self_inner_is_one(ket):
    v = ks.inner(ket, ket)
    assert v.imag == 0
    assert v.real == pytest.approx(1.0, abs=1e-12)
    expected = (np.sum(np.abs(ket.a) ** 2) + np.sum(ket.alpha**2)) / 2
    assert v.real == pytest.approx(expected, abs=1e-15)


def test_inner_examples():
    x = ks.KroneckerQubit([1, 0], [1, 0])
    y = ks.KroneckerQubit([0, 1], [0, 1])
    assert ks.inner(x, y) == 0
    crossed = ks.KroneckerQubit([1, 0], [0, 1])
    assert ks.inner(crossed, crossed) == pytest.approx(1.0)


@given(kets(), kets(), st.floats(0, 2 * math.pi))
def test_inner_conjugate_linear_in_bra_quantum(x, y, phase):
    z = np.exp(1j * phase)
    xp = ks.KroneckerQubit(z * x.a, x.alpha)
    q_part = np.vdot(x.a, y.a) / 2
    m_part = np.dot(x.alpha, y.alpha) / 2
    assert ks.inner(xp, y) == pytest.approx(np.conj(z) * q_part + m_part, abs=1e-12)


def test_density4_basis():
    rho = ks.density4(ks.KroneckerQubit([1, 0], [1, 0]))
    expected = np.zeros((4, 4))
    for i in (0, 2):
        for j in (0, 2):
            expected[i, j] = 0.5
    np.testing.assert_array_equal(rho, expected)
    assert np.trace(rho) == 1


def test_density4_entry_layout():
    a = np.array([0.6, 0.8j])
    al = np.array([0.28, 0.96])
    rho = ks.density4(ks.KroneckerQubit(a, al))
    c = np.conj
    expected = 0.5 * np.array(
        [
            [abs(a[0]) ** 2, a[0] * c(a[1]), a[0] * al[0], a[0] * al[1]],
            [a[1] * c(a[0]), abs(a[1]) ** 2, a[1] * al[0], a[1] * al[1]],
            [al[0] * c(a[0]), al[0] * c(a[1]), al[0] ** 2, al[0] * al[1]],
            [al[1] * c(a[0]), al[1] * c(a[1]), al[0] * al[1], al[1] ** 2],
        ]
    )
    np.testing.assert_allclose(rho, expected, atol=1e-15)


@given(kets())
def test_density4_trace_and_rank(ket):
    rho = ks.density4(ket)
    assert np.trace(rho).real == pytest.approx(ks.inner(ket, ket).real, abs=1e-12)
    assert abs(np.linalg.det(rho)) < 1e-12
    assert np.linalg.matrix_rank(rho, tol=1e-10) == 1


@given(kets())
def test_density4_is_a_projector(ket):
    # rank one with unit trace, so rho @ rho == rho for every valid state
    rho = ks.density4(ket)
    np.testing.assert_allclose(rho @ rho, rho, atol=1e-12)


def test_from_prob_membership_examples():
    q = ks.from_prob_membership(1, 0)
    np.testing.assert_allclose(q.a, [1, 0])
    np.testing.assert_allclose(q.alpha, [1, 0])
    q = ks.from_prob_membership(0.5, 0.5)
    np.testing.assert_allclose(q.a, [1 / R2, 1 / R2], atol=1e-15)
    np.testing.assert_allclose(q.alpha, [1 / R2, 1 / R2], atol=1e-15)
    with pytest.raises(RangeError):
        ks.from_prob_membership(1.2, 0.5)
    with pytest.raises(DomainError):
        ks.from_prob_membership(0.5, 0.5, model="born")


@given(st.floats(0, 1), st.floats(0.0001, 0.9999))
def test_from_prob_membership_round_trip(p, mu):
    q = ks.from_prob_membership(p, mu)
    np.testing.assert_allclose(q.probabilities(), [p, 1 - p], atol=1e-15)
    assert arc_membership(*q.alpha) == pytest.approx((mu, 1 - mu), abs=1e-12)
    np.testing.assert_allclose(q.memberships("arc"), [mu, 1 - mu], atol=1e-12)


def test_renormalize():
    v = ks.BlockVector([0.3, 0], [0, 0.2])
    q = ks.renormalize(v)
    np.testing.assert_allclose(q.a, [1, 0])
    np.testing.assert_allclose(q.alpha, [0, 1])
    with pytest.raises(DomainError):
        ks.renormalize(ks.BlockVector([0.3, 0], [0, 0]))


def test_block_vector_rejects_complex_membership():
    with pytest.raises(DomainError):
        ks.BlockVector([1, 0], [1j, 0])
