"""Embedded reference-value checks, run by ``obscure-qubits selfcheck``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import entangle, gates, kron_state, obscure_state, projections

# (i, j) -> name of P_i @ P_j, with "0" for the zero operator
PRODUCT_TABLE = {
    ("P0", "P0"): "P0", ("P0", "P1"): "0", ("P0", "P01"): "Q0", ("P0", "P10"): "Q0mu",
    ("P0", "Q0"): "Q0", ("P0", "Q1"): "0", ("P0", "Q0mu"): "Q0mu", ("P0", "Q1mu"): "0",
    ("P1", "P0"): "0", ("P1", "P1"): "P1", ("P1", "P01"): "Q1mu", ("P1", "P10"): "Q1",
    ("P1", "Q0"): "0", ("P1", "Q1"): "Q1", ("P1", "Q0mu"): "0", ("P1", "Q1mu"): "Q1mu",
    ("P01", "P0"): "Q0", ("P01", "P1"): "Q1mu", ("P01", "P01"): "P01", ("P01", "P10"): "0",
    ("P01", "Q0"): "Q0", ("P01", "Q1"): "0", ("P01", "Q0mu"): "0", ("P01", "Q1mu"): "Q1mu",
    ("P10", "P0"): "Q0mu", ("P10", "P1"): "Q1", ("P10", "P01"): "0", ("P10", "P10"): "P10",
    ("P10", "Q0"): "0", ("P10", "Q1"): "Q1", ("P10", "Q0mu"): "Q0mu", ("P10", "Q1mu"): "0",
    ("Q0", "P0"): "Q0", ("Q0", "P1"): "0", ("Q0", "P01"): "Q0", ("Q0", "P10"): "0",
    ("Q0", "Q0"): "Q0", ("Q0", "Q1"): "0", ("Q0", "Q0mu"): "0", ("Q0", "Q1mu"): "0",
    ("Q1", "P0"): "0", ("Q1", "P1"): "Q1", ("Q1", "P01"): "0", ("Q1", "P10"): "Q1",
    ("Q1", "Q0"): "0", ("Q1", "Q1"): "Q1", ("Q1", "Q0mu"): "0", ("Q1", "Q1mu"): "0",
    ("Q0mu", "P0"): "Q0mu", ("Q0mu", "P1"): "0", ("Q0mu", "P01"): "0", ("Q0mu", "P10"): "Q0mu",
    ("Q0mu", "Q0"): "0", ("Q0mu", "Q1"): "0", ("Q0mu", "Q0mu"): "Q0mu", ("Q0mu", "Q1mu"): "0",
    ("Q1mu", "P0"): "0", ("Q1mu", "P1"): "Q1mu", ("Q1mu", "P01"): "Q1mu", ("Q1mu", "P10"): "0",
    ("Q1mu", "Q0"): "0", ("Q1mu", "Q1"): "0", ("Q1mu", "Q0mu"): "0", ("Q1mu", "Q1mu"): "Q1mu",
}

_R2 = math.sqrt(2.0)


def bell_register() -> entangle.TwoQubitRegister:
    s = 1 / _R2
    return entangle.TwoQubitRegister([[s, 0], [0, s]], [[s, 0], [0, s]])


def intermediate_register() -> entangle.TwoQubitRegister:
    """The intermediately entangled two obscure qubit state."""
    b = [[1 / 2, math.sqrt(3) / 4], [1 / 4, 1 / _R2]]
    beta = [[1 / _R2, 1 / (2 * _R2)], [math.sqrt(5) / 4, 1 / 4]]
    return entangle.TwoQubitRegister(b, beta)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _norm_minimum(tol):
    st = obscure_state.from_bloch(obscure_state.BlochParams(math.pi / 2, 0.0, math.pi / 2))
    v = obscure_state.norm(st)
    return abs(v - 0.5) <= tol, f"norm = {v!r}"


def _bell(tol):
    reg = bell_register()
    c_q, c_mu = entangle.vector_concurrence(reg)
    c = entangle.scalar_concurrence(reg)
    ok = abs(c_q - 1) <= tol and abs(c_mu - 1) <= tol and abs(c - 1) <= tol
    return ok, f"C_vect = ({c_q:.12g}, {c_mu:.12g}), C_scal = {c:.12g}"


def _intermediate(tol):
    reg = intermediate_register()
    rep = entangle.register_report(reg)
    p = list(rep["probabilities"].values())
    mu = list(rep["memberships"].values())
    # listed in the order 00', 01', 10', 11'
    p_ref = [1 / 4, 3 / 16, 1 / 16, 1 / 2]
    mu_ref = [1 / 2, 1 / 8, 5 / 16, 1 / 16]
    c_q, c_mu = entangle.vector_concurrence(reg)
    c = entangle.scalar_concurrence(reg)
    ok = (
        np.allclose(p, p_ref, atol=max(tol, 1e-12), rtol=0)
        and np.allclose(mu, mu_ref, atol=max(tol, 1e-12), rtol=0)
        and abs(c_q - 0.491) <= max(tol, 5e-4)
        and abs(c_mu - 0.042) <= max(tol, 5e-4)
        and abs(c - 0.348) <= max(tol, 5e-4)
    )
    return ok, f"C_vect = ({c_q:.4f}, {c_mu:.4f}), C_scal = {c:.4f}"


def _projection_table(tol):
    bad = []
    for (i, j), expected in PRODUCT_TABLE.items():
        got = projections.projection(i) @ projections.projection(j)
        want = projections.zero() if expected == "0" else projections.projection(expected)
        if got != want:
            bad.append(f"{i}*{j}")
    return not bad, "mismatched: " + ", ".join(bad) if bad else "64 products match"


def _expectations(tol, n=200, seed=0):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        ket = random_kronecker_qubit(rng)
        e = projections.expectations(ket)
        worst = max(
            worst,
            abs(e["P0"] - e["Q0"] - e["Q0mu"]),
            abs(e["P1"] - e["Q1"] - e["Q1mu"]),
            abs(e["P01"] - e["Q0"] - e["Q1mu"]),
            abs(e["P10"] - e["Q1"] - e["Q0mu"]),
            abs(e["P0"] + e["P1"] - 1),
        )
    return worst <= max(tol, 1e-12), f"max deviation {worst:.3g}"


def _gate_example(tol):
    g = gates.make_gate("H", "NOT")
    out = gates.apply(g, kron_state.KroneckerQubit([1, 0], [1, 0]))
    ok = np.allclose(out.a, [1 / _R2, 1 / _R2], atol=tol, rtol=0) and np.allclose(
        out.alpha, [0, 1], atol=tol, rtol=0
    )
    return ok, f"a = ({out.a[0].real:.12g}, {out.a[1].real:.12g}), alpha = ({out.alpha[0]:g}, {out.alpha[1]:g})"


def random_kronecker_qubit(rng: np.random.Generator) -> kron_state.KroneckerQubit:
    """Random valid Kronecker qubit: complex quantum column, non-negative membership column."""
    z = rng.normal(size=2) + 1j * rng.normal(size=2)
    t = rng.uniform(0, math.pi / 2)
    return kron_state.KroneckerQubit(z / np.linalg.norm(z), [math.cos(t), math.sin(t)])


CHECKS: dict[str, Callable] = {
    "norm minimum 1/2": _norm_minimum,
    "Bell-analog concurrence": _bell,
    "intermediate state values": _intermediate,
    "projection product table": _projection_table,
    "expectation identities": _expectations,
    "H/NOT gate example": _gate_example,
}


def run_checks(tol: float = 1e-12) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS.items():
        try:
            ok, detail = fn(tol)
        except Exception as exc:  # a broken item must not hide the others
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail))
    return results
