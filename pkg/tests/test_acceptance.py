"""Acceptance harness: one PASS/FAIL line per criterion, printed in the
terminal summary and from each test (visible with ``-s``)."""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from dsl_corpus import corpus
from obscure_qubits import dsl, entangle, gates, kron_state, obscure_state, projections
from obscure_qubits.membership import arc_membership
from obscure_qubits.selfcheck import (
    PRODUCT_TABLE,
    bell_register,
    intermediate_register,
    random_kronecker_qubit,
)

R2 = math.sqrt(2)
N = 1000


def _report(record, label, passed, detail):
    record(label, passed, detail)
    print(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")
    return passed


def test_c01_norm_extremum(record):
    t0 = time.perf_counter()
    v = obscure_state.norm(obscure_state.from_bloch(obscure_state.BlochParams(math.pi / 2, 0, math.pi / 2)))
    worst = 0.0
    for th in np.linspace(0, math.pi, 50):
        for tm in np.linspace(0, math.pi, 50):
            s = obscure_state.from_bloch(obscure_state.BlochParams(th, 0.0, tm))
            direct = float(np.sum(s.membership**2 * np.abs(s.quantum) ** 2))
            worst = max(worst, abs(direct - obscure_state.bloch_norm(th, tm)))
    elapsed = time.perf_counter() - t0
    ok = abs(v - 0.5) <= 1e-12 and worst <= 1e-12 and elapsed < 1.0
    assert _report(record, "1 norm extremum", ok, f"norm={v!r} grid max err={worst:.2e} time={elapsed:.3f}s")


def test_c02_bell_concurrence(record):
    reg = bell_register()
    cq, cm = entangle.vector_concurrence(reg)
    cs = entangle.scalar_concurrence(reg)
    ok = abs(cq - 1) <= 1e-12 and abs(cm - 1) <= 1e-12 and abs(cs - 1) <= 1e-12
    assert _report(record, "2 Bell-analog concurrence", ok, f"C_vect=({float(cq)!r}, {float(cm)!r}) C_scal={cs!r}")


def test_c03_intermediate_state(record):
    reg = intermediate_register()
    rep = entangle.register_report(reg)
    order = ("00'", "10'", "01'", "11'")
    p = [rep["probabilities"][k] for k in order]
    mu = [rep["memberships"][k] for k in order]
    cq, cm = entangle.vector_concurrence(reg)
    cs = entangle.scalar_concurrence(reg)
    radical = math.sqrt(53 / 128 - math.sqrt(5) / 16 - math.sqrt(6) / 16)
    ok = (
        np.allclose(p, [1 / 4, 1 / 16, 3 / 16, 1 / 2], rtol=0, atol=1e-12)
        and np.allclose(mu, [1 / 2, 5 / 16, 1 / 8, 1 / 16], rtol=0, atol=1e-12)
        and abs(cq - 0.491) <= 5e-4
        and abs(cm - 0.042) <= 5e-4
        and abs(cs - 0.348) <= 5e-4
        and abs(cs - radical) <= 1e-12
    )
    detail = f"p={np.round(p, 12).tolist()} mu={np.round(mu, 12).tolist()} C_vect=({cq:.6f}, {cm:.6f}) C_scal={cs:.6f} |C_scal-radical|={abs(cs - radical):.1e}"
    assert _report(record, "3 intermediate state", ok, detail)


def test_c04_projection_table(record):
    bad = []
    for i in projections.NAMES:
        for j in projections.NAMES:
            got = projections.projection(i) @ projections.projection(j)
            want = PRODUCT_TABLE[(i, j)]
            dense = projections.projection(i).dense() @ projections.projection(j).dense()
            want_dense = np.zeros((4, 4)) if want == "0" else projections.projection(want).dense()
            if got.name != want or not np.array_equal(dense, want_dense):
                bad.append(f"{i}{j}")
    ok = not bad
    assert _report(record, "4 projection algebra", ok, f"64 products, mismatches: {bad or 'none'}")


def test_c05_expectation_identities(record):
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(N):
        e = projections.expectations(random_kronecker_qubit(rng))
        for i, j in ((0, 1), (1, 0)):
            worst = max(worst, abs(e[f"P{i}"] - e[f"Q{i}"] - e[f"Q{i}mu"]))
            worst = max(worst, abs(e[f"P{i}{j}"] - e[f"Q{i}"] - e[f"Q{j}mu"]))
        worst = max(worst, abs(e["P0"] + e["P1"] - 1))
    ok = worst <= 1e-12
    assert _report(record, "5 expectation identities", ok, f"{N} states, max deviation {worst:.1e}")


def test_c06_gate_example(record):
    out = gates.apply(gates.make_gate("H", "NOT"), kron_state.KroneckerQubit([1, 0], [1, 0]))
    ok = np.allclose(out.a, [1 / R2, 1 / R2], rtol=0, atol=1e-12) and np.allclose(
        out.alpha, [0, 1], rtol=0, atol=1e-12
    )
    assert _report(record, "6 gate example", ok, f"a={out.a.real.tolist()} alpha={out.alpha.tolist()}")


def _random_qudit(rng):
    z = rng.normal(size=2) + 1j * rng.normal(size=2)
    t = rng.uniform(0, math.pi / 2)
    return obscure_state.new_qudit(z / np.linalg.norm(z), [math.cos(t), math.sin(t)])


def _is_basis(q):
    return all(np.count_nonzero(np.abs(col) > 1e-12) == 1 for col in (q.a, q.alpha))


def _density_scan():
    rng = np.random.default_rng(7)
    det2 = trace_err = det4 = 0.0
    min_defect = math.inf
    for _ in range(N):
        rho2 = obscure_state.density2(_random_qudit(rng))
        det2 = max(det2, abs(rho2[0, 0] * rho2[1, 1] - rho2[0, 1] * rho2[1, 0]))
        q = random_kronecker_qubit(rng)
        rho = kron_state.density4(q)
        trace_err = max(trace_err, abs(np.trace(rho) - 1))
        det4 = max(det4, abs(np.linalg.det(rho)))
        if not _is_basis(q):
            min_defect = min(min_defect, float(np.linalg.norm(rho @ rho - rho)))
    basis_ok = True
    for a in ([1, 0], [0, 1]):
        for al in ([1, 0], [0, 1]):
            rho = kron_state.density4(kron_state.KroneckerQubit(a, al))
            basis_ok &= bool(np.allclose(rho @ rho, rho, rtol=0, atol=1e-12))
    return det2, trace_err, det4, min_defect, basis_ok


def test_c07_density_properties(record):
    det2, trace_err, det4, min_defect, basis_ok = _density_scan()
    structural = det2 <= 1e-12 and trace_err <= 1e-12 and det4 <= 1e-12 and basis_ok
    non_idempotent = min_defect > 1e-6
    detail = (
        f"det2 max={det2:.1e} tr4 err={trace_err:.1e} det4 max={det4:.1e} basis idempotent={basis_ok} "
        f"min ||rho^2-rho|| off basis={min_defect:.1e} (needs > 1e-6)"
    )
    _report(record, "7 density properties", structural and non_idempotent, detail)
    assert structural


@pytest.mark.xfail(
    strict=True,
    reason="density4 is rank one with unit trace, so rho @ rho == rho for every valid state",
)
def test_c07_density4_not_idempotent():
    *_, min_defect, _ = _density_scan()
    assert min_defect > 1e-6


def test_c08_separability_oracle(record):
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(N):
        reg = entangle.tensor_two(random_kronecker_qubit(rng), random_kronecker_qubit(rng))
        worst = max(worst, *entangle.vector_concurrence(reg))
    flagged = tested = 0
    while tested < N:
        b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        beta = rng.normal(size=(2, 2))
        reg = entangle.TwoQubitRegister(b / np.linalg.norm(b), beta / np.linalg.norm(beta))
        if abs(np.linalg.det(reg.b)) <= 0.01:
            continue
        tested += 1
        flagged += not entangle.is_separable(reg)[0]
    ok = worst <= 1e-12 and flagged == N
    detail = f"product max concurrence={worst:.1e}; entangled flagged {flagged}/{N}"
    assert _report(record, "8 separability oracle", ok, detail)


def test_c09_arc_round_trip(record):
    worst = 0.0
    for k in range(1, 100):
        mu = k / 100
        m0, m1 = arc_membership(math.cos(math.pi * mu / 2), math.sin(math.pi * mu / 2))
        worst = max(worst, abs(m0 - mu), abs(m1 - (1 - mu)))
    ok = worst <= 1e-12
    assert _report(record, "9 arc round trip", ok, f"99 values, max error {worst:.1e}")


def _classify(script):
    try:
        dsl.parse(script)
    except dsl.ScriptError as exc:
        return type(exc).__name__, exc.line
    return None


def test_c10_dsl_and_selfcheck(record):
    cases = corpus()
    wrong = [i for i, (s, want) in enumerate(cases) if _classify(s) != want]
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "obscure_qubits.cli", "selfcheck"], capture_output=True, text=True, timeout=60
    )
    elapsed = time.perf_counter() - t0
    ok = len(cases) >= 30 and not wrong and proc.returncode == 0 and elapsed < 5.0
    detail = (
        f"{len(cases)} scripts, misclassified {wrong or 'none'}; "
        f"selfcheck exit {proc.returncode} in {elapsed:.2f}s"
    )
    assert _report(record, "10 DSL robustness + selfcheck", ok, detail)
