"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
The random batches use seeds 0..N-1, so every run is identical.
"""

import math
import time

import numpy as np
import pytest

from helpers import random_qubit_matrix
from triuncert.bounds import full_report, x_state_analytic
from triuncert.entropy import conditional_entropy, holevo, von_neumann
from triuncert.experiments import (
    ScenarioConfig,
    random_x_params,
    run_eval,
    run_scenario,
    write_result,
)
from triuncert.keyrate import key_report
from triuncert.linalg import eig_hermitian
from triuncert.measurement import pauli_basis, post_measurement_state
from triuncert.states import (
    DensityMatrix,
    density_matrix_to_json,
    make_ghz,
    make_werner,
    make_x_state,
    maximally_mixed,
    partial_trace,
    random_pure_state,
    random_state,
    werner_params,
)

X = pauli_basis("x")
Z = pauli_basis("z")

BATCH_SIZE = 10_000
SMALL_BATCH = 1_000


def _report(num: int, ok: bool, desc: str) -> None:
    print(f"ACCEPTANCE {num:2d} {'PASS' if ok else 'FAIL'}: {desc}")
    assert ok, f"criterion {num} failed: {desc}"


@pytest.fixture(scope="module")
def batch():
    """(elapsed_seconds, [(seed, state, report)]) for seeds 0..9999."""
    start = time.perf_counter()
    entries = []
    for seed in range(BATCH_SIZE):
        rho, _ = random_state(seed)
        entries.append((seed, rho, full_report(rho, X, Z, seed=seed)))
    return time.perf_counter() - start, entries


@pytest.fixture(scope="module")
def pure_batch():
    entries = []
    for seed in range(SMALL_BATCH):
        rho, _ = random_pure_state(seed)
        entries.append((seed, rho, full_report(rho, X, Z, seed=seed)))
    return entries


def test_criterion_1_ghz_constancy():
    start = time.perf_counter()
    worst = 0.0
    for beta in np.linspace(0.0, math.pi / 2, 21):
        rep = full_report(make_ghz(float(beta)), X, Z)
        worst = max(worst, abs(rep.u_left - 1.0), abs(rep.u_right - 1.0))
    elapsed = time.perf_counter() - start
    _report(
        1,
        worst <= 1e-9 and elapsed < 1.0,
        f"GHZ sweep constant at 1 (max dev {worst:.2e}, {elapsed:.2f}s)",
    )


def test_criterion_2_theorem_inequality(batch):
    elapsed, entries = batch
    violations = sum(1 for _, _, rep in entries if rep.u_left < rep.u_right - 1e-9)
    _report(
        2,
        violations == 0 and elapsed < 60.0,
        f"u_left >= u_right on {BATCH_SIZE} random states "
        f"({violations} violations, batch built in {elapsed:.1f}s)",
    )


def test_criterion_3_improvement_over_renes(batch):
    _, entries = batch
    violations = sum(1 for _, _, rep in entries if rep.u_right < 1.0 - 1e-12)
    _report(3, violations == 0, f"u_right >= 1 on the same batch ({violations} violations)")


def test_criterion_4_x_state_equality():
    params_list = [random_x_params(seed) for seed in range(SMALL_BATCH)]
    params_list.extend(werner_params(float(p)) for p in np.linspace(0.0, 1.0, 21))
    max_lr = 0.0
    max_analytic = 0.0
    for params in params_list:
        rep = full_report(make_x_state(params), X, Z)
        analytic = x_state_analytic(params)
        max_lr = max(max_lr, abs(rep.u_left - rep.u_right))
        max_analytic = max(max_analytic, abs(rep.u_left - analytic))
    end_0 = full_report(make_werner(0.0), X, Z).u_left
    end_1 = full_report(make_werner(1.0), X, Z).u_left
    ok = (
        max_lr <= 1e-8
        and max_analytic <= 1e-8
        and abs(end_0 - 1.0) <= 1e-9
        and abs(end_1 - 2.0) <= 1e-9
    )
    _report(
        4,
        ok,
        f"X-state equality (|u_left-u_right| <= {max_lr:.2e}, "
        f"|u_left-analytic| <= {max_analytic:.2e}, Werner endpoints {end_0:.3f}/{end_1:.3f})",
    )


def test_criterion_5_pure_state_recovery(pure_batch):
    worst_cond = 0.0
    worst_delta = -math.inf
    worst_bound = 0.0
    for _, rho, rep in pure_batch:
        s_ab = conditional_entropy(partial_trace(rho, (0, 1)), (1,))
        s_ac = conditional_entropy(partial_trace(rho, (0, 2)), (1,))
        worst_cond = max(worst_cond, abs(s_ab + s_ac))
        worst_delta = max(worst_delta, rep.delta)
        worst_bound = max(worst_bound, abs(rep.u_right - 1.0))
    ok = worst_cond <= 1e-9 and worst_delta <= 1e-9 and worst_bound <= 1e-9
    _report(
        5,
        ok,
        f"pure-state recovery on {SMALL_BATCH} states (|S(A|B)+S(A|C)| <= {worst_cond:.2e}, "
        f"max delta {worst_delta:.2e}, |u_right-1| <= {worst_bound:.2e})",
    )


def test_criterion_6_proof_identities(batch):
    _, entries = batch
    worst_gap = math.inf
    worst_close = 0.0
    for _, rho, rep in entries[:SMALL_BATCH]:
        rho_ab = partial_trace(rho, (0, 1))
        rho_ac = partial_trace(rho, (0, 2))
        s_ab = conditional_entropy(rho_ab, (1,))
        s_ac = conditional_entropy(rho_ac, (1,))
        rhs = 2 * rep.q_mu + s_ab + s_ac - rep.s_zb - rep.s_xc
        worst_gap = min(worst_gap, rep.u_left - rhs)
        worst_close = max(
            worst_close,
            abs(rep.h_x - (rep.s_xc + rep.i_xc)),
            abs(rep.h_z - (rep.s_zb + rep.i_zb)),
            abs(rep.h_x - (rep.s_xb + holevo(rho_ab, X))),
            abs(rep.s_a - (s_ab + rep.i_ab)),
        )
    ok = worst_gap >= -1e-9 and worst_close <= 1e-9
    _report(
        6,
        ok,
        f"proof identities on {SMALL_BATCH} states (min chain slack {worst_gap:.2e}, "
        f"max decomposition defect {worst_close:.2e})",
    )


def test_criterion_7_purity_endpoints_and_trend(batch, pure_batch):
    _, entries = batch
    mixed = full_report(maximally_mixed(), X, Z)
    pure_ok = all(abs(rep.u_right - 1.0) <= 1e-9 for _, _, rep in pure_batch)

    edges = np.linspace(1.0 / 8.0, 1.0, 11)
    counts = np.zeros(10, dtype=int)
    sums = np.zeros(10)
    for _, _, rep in entries:
        k = min(int((rep.purity - edges[0]) / (edges[1] - edges[0])), 9)
        counts[max(k, 0)] += 1
        sums[max(k, 0)] += rep.u_right
    means = [s / c for s, c in zip(sums, counts) if c > 0]
    monotone = all(b <= a + 1e-9 for a, b in zip(means, means[1:]))
    ok = (
        abs(mixed.purity - 0.125) <= 1e-9
        and abs(mixed.u_right - 2.0) <= 1e-9
        and pure_ok
        and monotone
    )
    _report(
        7,
        ok,
        f"purity endpoints ({mixed.purity:.3f}, {mixed.u_right:.3f}) and "
        f"non-increasing bin means {['%.3f' % m for m in means]}",
    )


def test_criterion_8_key_rate_ordering(batch):
    _, entries = batch
    worst_identity = 0.0
    worst_order = -math.inf
    for _, rho, _ in entries[:SMALL_BATCH]:
        rep = key_report(rho, X, Z)
        worst_identity = max(
            worst_identity, abs((rep.k_improved - rep.k_berta) - max(0.0, rep.delta))
        )
        worst_order = max(worst_order, rep.k_measured - rep.k_improved)
    mixed = key_report(maximally_mixed(), X, Z)
    ok = (
        worst_identity <= 1e-12
        and worst_order <= 1e-9
        and abs(mixed.k_berta + 1.0) <= 1e-9
        and abs(mixed.k_improved) <= 1e-9
    )
    _report(
        8,
        ok,
        f"key-rate ordering on {SMALL_BATCH} states (identity defect {worst_identity:.2e}, "
        f"max measured-improved gap {worst_order:.2e}, mixed-state rates "
        f"({mixed.k_berta:.3f}, {mixed.k_improved:.3f}))",
    )


def _shannon_fsum(values) -> float:
    # independent accumulation path: math.fsum of per-term contributions
    return math.fsum(-v * math.log2(v) for v in values if v > 1e-12)


def test_criterion_9_numerical_kernel_oracles(batch):
    _, entries = batch
    worst_entropy = 0.0
    for _, rho, _ in entries[:SMALL_BATCH]:
        worst_entropy = max(worst_entropy, abs(von_neumann(rho) - _shannon_fsum(rho.spectrum)))

    rng = np.random.default_rng(123)
    worst_recon = 0.0
    for _ in range(200):
        g = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
        h = g + g.conj().T
        dec = eig_hermitian(h)
        v, w = dec.eigenvectors, dec.eigenvalues
        worst_recon = max(worst_recon, float(np.max(np.abs((v * w) @ v.conj().T - h))))

    worst_factor = 0.0
    for _ in range(100):
        a, b, c = (random_qubit_matrix(rng) for _ in range(3))
        rho = DensityMatrix((2, 2, 2), np.kron(np.kron(a, b), c))
        reduced = partial_trace(rho, (0, 1))
        worst_factor = max(worst_factor, float(np.max(np.abs(reduced.matrix - np.kron(a, b)))))

    ok = worst_entropy <= 1e-10 and worst_recon <= 1e-10 and worst_factor <= 1e-12
    _report(
        9,
        ok,
        f"kernel oracles (entropy {worst_entropy:.2e}, reconstruction {worst_recon:.2e}, "
        f"factorization {worst_factor:.2e})",
    )


def test_criterion_10_scenario_determinism(tmp_path):
    sizes = {
        "ghz": dict(points=21),
        "w": dict(points=21),
        "werner": dict(points=21),
        "random-scatter": dict(samples=150),
        "random-purity": dict(samples=120),
        "xstate-check": dict(samples=60),
        "keyrate": dict(samples=60),
    }
    all_same = True
    for scenario, kw in sizes.items():
        for fmt in ("csv", "json"):
            blobs = []
            for run in range(2):
                cfg = ScenarioConfig(scenario=scenario, seed=0, format=fmt, **kw)
                path = tmp_path / f"{scenario}-{run}.{fmt}"
                write_result(run_scenario(cfg), str(path), fmt)
                blobs.append(path.read_bytes())
            all_same = all_same and blobs[0] == blobs[1]

    import json as _json

    state = tmp_path / "state.json"
    state.write_text(_json.dumps(density_matrix_to_json(maximally_mixed())))
    evals = [
        run_eval(ScenarioConfig(scenario="eval", state_path=str(state))) for _ in range(2)
    ]
    all_same = all_same and _json.dumps(evals[0]) == _json.dumps(evals[1])
    _report(10, all_same, "scenario reruns are byte-identical for every scenario and format")
