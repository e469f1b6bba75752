"""Acceptance battery: every exit criterion at its stated tolerance.

Each test prints one [PASS]/[FAIL] line (run with ``pytest -s`` to watch
them) and asserts the criterion.  Tolerances are pinned here, not derived at
runtime.
"""
import cmath
import math
import random
import time

import numpy as np
import pytest

from hfock import bargmann, dbar, expint, golden, lerch, moments, space
from hfock.numerics import gauss_hermite, integrate_semi_infinite


def _report(num, description, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {description}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def _disk_point(rng, radius):
    r = radius * math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return complex(r * math.cos(theta), r * math.sin(theta))


def test_criterion_01_moment_cross_route_agreement():
    t0 = time.perf_counter()
    worst_q = 0.0
    for n in range(31):
        cf = moments.eta_closed_form(n)
        worst_q = max(worst_q, abs(moments.eta_quadrature(n, 1e-12) - cf) / cf)
    worst_b = 0.0
    for n in range(21):
        cf = moments.eta_closed_form(n)
        worst_b = max(worst_b, abs(moments.eta_binomial(n) - cf) / cf)
    elapsed = time.perf_counter() - t0
    ok = worst_q <= 1e-10 and worst_b <= 1e-8 and elapsed < 2.0
    _report(1, "moment cross-route agreement", ok,
            f"quad {worst_q:.2e}, binomial {worst_b:.2e}, {elapsed:.2f}s")


def test_criterion_02_moment_bounds():
    violations = 0
    for n in range(171):
        le = moments.log_eta(n)
        lo = math.lgamma(n + 1) - n * math.log(2.0) - math.log(8.0)
        hi = math.lgamma(n + 1)
        if not lo <= le <= hi:
            violations += 1
        if n >= 1 and le > math.lgamma(n) - math.log(n):
            violations += 1
    _report(2, "two-sided moment bounds, log scale, n <= 170",
            violations == 0, f"{violations} violations")


def test_criterion_03_factorial_sum():
    s = moments.eta_factorial_sum(1000)
    prefix = [moments.eta_factorial_sum(n) for n in (10, 100, 500, 1000)]
    ok = 1.0 - 1.1 / 1000.0 < s <= 1.0 and all(
        a < b for a, b in zip(prefix, prefix[1:]))
    _report(3, "sum of eta_n/n! reaches 1", ok, f"S(1000) = {s:.12f}")


def test_criterion_04_generating_function():
    worst = 0.0
    reals = [-0.85 + i * (5.0 + 0.85) / 19.0 for i in range(20)]
    complexes = [0.5 + 0.5j, 1j, 2 + 2j, 3 - 1j, -0.7 + 0.2j]
    for z in reals + complexes:
        gap = abs(moments.generating_series(z) - moments.generating_closed_form(z))
        worst = max(worst, gap)
    _report(4, "generating function vs closed form on 25 points",
            worst <= 1e-9, f"max gap {worst:.2e}")


def test_criterion_05_efun_growth():
    ok = True
    for r in (0.0, 0.5, 1.0, 2.0, 3.0, 5.0):
        v = space.efun(r).real
        ok = ok and math.exp(r) <= v <= 8.0 * math.exp(2.0 * r)
    _report(5, "exponential growth window for the kernel generator", ok)


def test_criterion_06_kernel_psd_and_reproducing():
    ok_psd = True
    worst_ratio = 0.0
    for s in range(20):
        rng = random.Random(1000 + s)
        pts = [_disk_point(rng, 2.0) for _ in range(50)]
        g = space.gram_kernel(pts)
        ok_psd = ok_psd and g.min_eig >= -1e-8 * g.trace
        worst_ratio = min(worst_ratio, g.min_eig / g.trace)
    rng = random.Random(4242)
    worst_rep = 0.0
    for _ in range(100):
        f = space.EntireSeries(tuple(_disk_point(rng, 1.0) for _ in range(11)))
        z = _disk_point(rng, 2.0)
        inner, direct = space.reproducing_check(f, z)
        worst_rep = max(worst_rep, abs(inner - direct) / (1.0 + abs(direct)))
    ok = ok_psd and worst_rep <= 1e-12
    _report(6, "kernel Gram PSD (20x50) + reproducing identity (100 polys)",
            ok, f"min eig/trace {worst_ratio:.2e}, max rel gap {worst_rep:.2e}")


def test_criterion_07_bargmann_l2_identity():
    worst = 0.0
    for r in (0.0, 0.5, 1.0, 1.5):
        ref = space.efun(r * r).real
        got = bargmann.kernel_l2_norm_sq(r, quad_nodes=200, trunc=60)
        worst = max(worst, abs(got - ref) / ref)
    base = bargmann.kernel_l2_norm_sq(1.5)
    worst_rot = max(
        abs(bargmann.kernel_l2_norm_sq(cmath.rect(1.5, k * math.pi / 4.0)) - base) / base
        for k in range(1, 8))
    ok = worst <= 1e-8 and worst_rot <= 1e-10
    _report(7, "Bargmann kernel L2-norm identity + rotation invariance",
            ok, f"identity {worst:.2e}, rotation {worst_rot:.2e}")


def test_criterion_08_hermite_orthonormality():
    rule = gauss_hermite(200)
    mat = bargmann._psi_scaled_matrix(40, rule.nodes)
    gram = (mat * rule.weights) @ mat.T
    gap = float(np.max(np.abs(gram - np.eye(41))))
    _report(8, "41x41 Hermite Gram equals identity", gap <= 1e-9, f"max gap {gap:.2e}")


def test_criterion_09_lerch_dirichlet_suite():
    worst_log = 0.0
    for i in range(37):
        x = -0.9 + 1.8 * i / 36.0
        if abs(x) < 1e-9:
            continue
        worst_log = max(worst_log, abs((lerch.phi(1, x) * x).real + math.log1p(-x)))
    worst_lap = 0.0
    for n in range(1, 6):
        for a in (0.25, 0.5, 0.9, 2.0):
            val = lerch.phi(n, -a).real if a < 1.0 else expint.laplace_en(n, a)
            quad = integrate_semi_infinite(
                lambda t, n=n, a=a: math.exp(-(a + 1.0) * t) * expint.en_scaled(n, t)
                if t > 0 else 0.0, 1e-10).value
            worst_lap = max(worst_lap, abs(val - quad))
    rng = random.Random(99)
    worst_lerch = 0.0
    for _ in range(50):
        z = _disk_point(rng, 0.9)
        n = rng.randrange(1, 6)
        worst_lerch = max(worst_lerch, abs(lerch.lerch_phi(z, 1.0, float(n))
                                           - lerch.phi(n, z)))
    zeta_gap = abs(lerch.hurwitz_zeta(2.0, 1.0, 1e-11) - math.pi ** 2 / 6.0)
    ok = (worst_log <= 1e-11 and worst_lap <= 1e-8
          and worst_lerch <= 1e-12 and zeta_gap <= 1e-10)
    _report(9, "Lerch/Dirichlet identity suite", ok,
            f"log {worst_log:.2e}, laplace {worst_lap:.2e}, "
            f"lerch {worst_lerch:.2e}, zeta {zeta_gap:.2e}")


def test_criterion_10_dbar_residuals():
    rng = random.Random(2024)
    worst = 0.0
    for _ in range(50):
        f = space.EntireSeries(tuple(_disk_point(rng, 1.0)
                                     for _ in range(rng.randrange(1, 8))))
        u0 = space.EntireSeries(tuple(_disk_point(rng, 1.0)
                                      for _ in range(rng.randrange(1, 8))))
        u = dbar.assemble_solution(f, u0)
        samples = [_disk_point(rng, 2.0) for _ in range(10)]
        rep = dbar.dbar_residual(u, f, samples, 1e-5)
        worst = max(worst, rep.max_residual)
    flagged = 0
    for _ in range(10):
        f = space.EntireSeries(tuple(_disk_point(rng, 1.0) for _ in range(5)))
        u = dbar.assemble_solution(f, space.EntireSeries((0j,)))
        rows = [list(r) for r in u.rows]
        rows[1][rng.randrange(0, 5)] += 1e-3
        bad = dbar.PolyanalyticSeries(tuple(tuple(r) for r in rows))
        samples = [cmath.rect(1.0, 0.9 * k) for k in range(7)]
        if dbar.dbar_residual(bad, f, samples, 1e-5).flagged(1e-6):
            flagged += 1
    ok = worst <= 1e-6 and flagged == 10
    _report(10, "assembled dbar solutions pass, tampered ones flagged",
            ok, f"max residual {worst:.2e}, {flagged}/10 controls flagged")


def test_criterion_11_golden_value_pins():
    pins = [
        ("eta0", moments.eta_closed_form(0)),
        ("eta1", moments.eta_closed_form(1)),
        ("e1_of_1", expint.e1(1.0)),
    ]
    worst = 0.0
    for name, got in pins:
        worst = max(worst, abs(got - float(golden.decimal(name))))
    _report(11, "golden-value pins reproduced", worst <= 1e-12, f"max gap {worst:.2e}")


def test_criterion_12_cm_and_class_audit():
    grid = [0.1 + 0.1 * i for i in range(50)]
    cm_ok = all(lerch.phi_cm_evidence(n, grid, 6).passed for n in (1, 2, 3))
    audits = [lerch.ml_audit("phi_tilde", n) for n in (1, 2, 3)]
    audits.append(lerch.ml_audit("eta0_K"))
    i_ii_ok = all(a["passed_i_ii"] for a in audits)
    evidence_only = all(
        {c["name"]: c["status"] for c in a["conditions"]}
        ["complete-monotonicity-evidence"] == "evidence" for a in audits)
    ok = cm_ok and i_ii_ok and evidence_only
    _report(12, "complete-monotonicity evidence + kernel-class audit",
            ok, f"cm {cm_ok}, i+ii {i_ii_ok}, iii evidence-labeled {evidence_only}")


@pytest.fixture(scope="module", autouse=True)
def _wall_clock_budget():
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    print(f"[INFO] acceptance wall clock: {elapsed:.1f}s (budget 60s)")
    assert elapsed < 60.0
