"""Acceptance gate: one test (and one printed pass/fail line) per criterion.

Every bound here is part of the package contract; loosening one is an
interface change, not a test fix.  Random points come from the models'
regular sampling boxes with fixed seeds, so the run is reproducible.
"""

import numpy as np

from frobkit import canonical, eulertop, models, painleve
from frobkit.frobenius import expected_metric, flat_metric, \
    prepotential_tensor, structure_constants, unit_slot, wdvv_residual


def _verdict(num, label, ok, detail=""):
    line = f"CRITERION {num} [{'PASS' if ok else 'FAIL'}] {label}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def _points(model_id, count, seed=20260814):
    model = models.get_model(model_id)
    return model, model.sample_coords(np.random.default_rng(seed), count)


def test_criterion_1_flat_metric_by_residues():
    worst = 0.0
    for mid, pattern in (("nm11", expected_metric(1, 1)),
                         ("nm02", expected_metric(0, 2))):
        model, pts = _points(mid, 20)
        for coords in pts:
            W, p = model.potential(coords)
            worst = max(worst, float(np.max(np.abs(flat_metric(W, p) - pattern))))
    _verdict(1, "flat metric matches the constant pattern at 20 points/model",
             worst < 1e-9, f"max residual {worst:.2e}")


def test_criterion_2_structure_constants():
    worst_closed = worst_unit = worst_wdvv = worst_fd = 0.0
    for mid in models.MODEL_IDS:
        model, pts = _points(mid, 20)
        for coords in pts:
            W, p = model.potential(coords)
            c = structure_constants(W, p)
            eta = flat_metric(W, p)
            worst_closed = max(worst_closed, float(np.max(np.abs(
                c - model.structure_constants_closed(coords)))))
            worst_unit = max(worst_unit, float(np.max(np.abs(
                c[unit_slot(p.n, p.m)] - eta))))
            worst_wdvv = max(worst_wdvv, wdvv_residual(c, np.linalg.inv(eta)))
        for coords in pts[:5]:
            cs = np.asarray(coords, dtype=complex)
            fd = prepotential_tensor(model.prepotential, cs)
            worst_fd = max(worst_fd, float(np.max(np.abs(
                fd - model.structure_constants_closed(coords)))))
    ok = (worst_closed < 1e-8 and worst_unit < 1e-9
          and worst_wdvv < 1e-8 and worst_fd < 1e-6)
    _verdict(2, "structure constants: closed list, unit row, WDVV, FD cross-check",
             ok, f"closed {worst_closed:.2e} unit {worst_unit:.2e} "
                 f"wdvv {worst_wdvv:.2e} fd {worst_fd:.2e}")


def test_criterion_3_darboux_egoroff_suite():
    worst = {k: 0.0 for k in ("symmetry", "closure", "identity_on_beta",
                              "euler_on_beta", "identity_on_lame",
                              "euler_on_lame_sq")}
    for mid in models.MODEL_IDS:
        model, pts = _points(mid, 10)
        for coords in pts:
            W, p = model.potential(coords)
            r = canonical.darboux_egoroff_residuals(W, p)
            for k in worst:
                worst[k] = max(worst[k], getattr(r, k))
    ok = (worst["symmetry"] < 1e-6 and worst["closure"] < 1e-5
          and worst["identity_on_beta"] < 1e-5 and worst["euler_on_beta"] < 1e-5
          and worst["identity_on_lame"] < 1e-6
          and worst["euler_on_lame_sq"] < 1e-5)
    _verdict(3, "rotation-coefficient flatness suite at 10 points/model", ok,
             " ".join(f"{k}={v:.2e}" for k, v in worst.items()))


def test_criterion_4_casimir_and_scaling():
    worst_pipe = worst_closed = worst_eig = worst_prop = worst_tilde = 0.0
    model, pts = _points("nm11", 10)
    for coords in pts:
        W, p = model.potential(coords)
        rot = canonical.rotation_coefficients(W, p)
        spec = canonical.omega_and_spectrum(rot)
        worst_pipe = max(worst_pipe, abs(spec.r_squared - 0.25))
        worst_eig = max(worst_eig, float(np.max(np.abs(
            spec.eigenvalues - np.array([0.5, 0.0, -0.5])))))
        worst_prop = max(worst_prop, float(np.max(np.abs(
            spec.omega ** 2 + 0.25 * rot.frame.lame_sq))))
    for w in np.linspace(1.2, 2.8, 10):
        d = models.nm11_closed_forms(w)
        worst_closed = max(worst_closed, abs(np.sum(d.omega_sq) + 0.25))
    model2, pts2 = _points("nm02", 10)
    for coords in pts2:
        W, p = model2.potential(coords)
        rot = canonical.rotation_coefficients(W, p)
        spec = canonical.omega_and_spectrum(rot)
        worst_pipe = max(worst_pipe, abs(spec.r_squared - 0.25))
        worst_eig = max(worst_eig, float(np.max(np.abs(
            spec.eigenvalues - np.array([0.5, 0.0, -0.5])))))
        rot_t = canonical.rotation_coefficients(W, p, coordinate=2)
        spec_t = canonical.omega_and_spectrum(rot_t)
        worst_tilde = max(worst_tilde, abs(spec_t.r_squared - 0.0625))
    ok = (worst_pipe < 1e-9 and worst_closed < 1e-9 and worst_eig < 1e-8
          and worst_prop < 1e-9 and worst_tilde < 1e-9)
    _verdict(4, "Casimir sums, eigenvalue triple, omega/Lame proportionality",
             ok, f"pipeline {worst_pipe:.2e} closed {worst_closed:.2e} "
                 f"eigs {worst_eig:.2e} prop {worst_prop:.2e} "
                 f"tilde {worst_tilde:.2e}")


def test_criterion_5_top_system():
    drift = 0.0
    for s0, s1, w0 in (
        (2.0, 3.0, np.array([1.0, 1.0, 1.0], dtype=complex)),
        (2.0 + 0.5j, 3.0 + 0.5j, np.array([0.8, -0.4 + 0.2j, 1.1], dtype=complex)),
        (-1.0, -2.0, np.array([0.3, 0.9, -0.7j], dtype=complex)),
    ):
        out = eulertop.integrate_rk4(s0, w0, s1, steps=1000)
        drift = max(drift, out.casimir_drift)
    m1 = eulertop.parametric_residual(models.nm11_top_curve(), 0.8, 1.2,
                                      samples=801)
    m2 = eulertop.parametric_residual(models.nm02_top_curve(), 0.8, 1.2,
                                      samples=801)
    ok = drift < 1e-10 and m1.residual < 1e-6 and m2.residual < 1e-6
    _verdict(5, "Casimir drift and parametric curve residuals", ok,
             f"drift {drift:.2e}; first curve {m1.residual:.2e} "
             f"perm={m1.perm} signs={m1.signs}; second {m2.residual:.2e} "
             f"perm={m2.perm}")


def test_criterion_6_painleve_vi():
    control = abs(painleve.pvi_residual(3.0, 2.0, 0.0, 0.0) - 9.0 / 64.0)
    worst_curve = 0.0
    for kind in ("k3", "k6"):
        sol = painleve.hitchin_solution(kind)
        rep = painleve.parametric_pvi_residual(sol, *sol.default_range, samples=50)
        worst_curve = max(worst_curve, rep.max_residual)
    rep_match, rep_sum = models._omtoy_reports()
    ok = control < 1e-12 and worst_curve < 1e-8 and rep_match.passed \
        and rep_sum.passed
    _verdict(6, "algebraic solutions, constant control, dictionary residuals",
             ok, f"control {control:.2e} curves {worst_curve:.2e} "
                 f"dictionary {rep_match.residual:.2e} "
                 f"({rep_match.detail['convention']}) sum {rep_sum.residual:.2e}")


def test_criterion_7_tau_function():
    value = abs(models.nm11_log_tau(2.0, 1.0) - np.log(400.0) / 24.0)
    h = 1e-5
    x2, x3 = 1.7, 1.1
    e_fd = abs(
        1.5 * (models.nm11_log_tau(x2 * (1 + h), x3)
               - models.nm11_log_tau(x2 * (1 - h), x3)) / (2 * h)
        + 0.5 * (models.nm11_log_tau(x2, x3 * (1 + h))
                 - models.nm11_log_tau(x2, x3 * (1 - h))) / (2 * h)
        - 0.25)
    worst_q = 0.0
    for q in np.linspace(0.25, 2.95, 10):
        fd = (models.nm11_log_tau(q, 1.0 + h)
              - models.nm11_log_tau(q, 1.0 - h)) / (2.0 * h)
        worst_q = max(worst_q, abs(fd - 0.125 / (1.0 - 6.75 * q)))
    model, pts = _points("nm11", 5)
    worst_grad = worst_identity = 0.0
    for coords in pts:
        W, p = model.potential(coords)
        rot = canonical.rotation_coefficients(W, p)

        def grad_x(point):
            c = point.coords
            return models.nm11_log_tau_gradient(c[1], c[2])

        data = canonical.tau_gradient_check(rot, grad_logtau_x=grad_x)
        worst_grad = max(worst_grad, data.closed_form_mismatch)
        worst_identity = max(worst_identity, data.identity_sum)
    ok = (value < 1e-12 and e_fd < 1e-8 and worst_q < 1e-8
          and worst_grad < 1e-6 and worst_identity < 1e-10)
    _verdict(7, "tau value, scaling action, q-form derivative, gradient identity",
             ok, f"value {value:.2e} euler {e_fd:.2e} qform {worst_q:.2e} "
                 f"gradient {worst_grad:.2e} identity {worst_identity:.2e}")


def test_criterion_8_oracle_equivalence():
    worst = 0.0
    # first family: sample the defining parameter, map to coordinates
    model = models.get_model("nm11")
    for w in np.linspace(1.25, 2.45, 10):
        d = models.nm11_closed_forms(w, x3=1.0)
        coords = (0.0, complex(d.x2), 1.0)
        W, p = model.potential(coords)
        frame = canonical.canonical_frame(W, p)
        rot = canonical.rotation_coefficients(W, p)
        spec = canonical.omega_and_spectrum(rot)
        aligned_alpha, perm = _align(frame.alphas, d.alphas)
        idx = list(perm)
        worst = max(worst, float(np.max(np.abs(aligned_alpha - frame.alphas))))
        worst = max(worst, float(np.max(np.abs(d.a[idx] - frame.alphas))))
        worst = max(worst, float(np.max(np.abs(d.u[idx] - frame.u))))
        worst = max(worst, float(np.max(np.abs(d.lame_sq[idx] - frame.lame_sq))))
        worst = max(worst, float(np.max(np.abs(d.omega_sq_rootorder[idx]
                                               - spec.omega ** 2))))
    # second family: sample coordinates directly
    model2, pts2 = _points("nm02", 10)
    for coords in pts2:
        W, p = model2.potential(coords)
        frame = canonical.canonical_frame(W, p)
        rot = canonical.rotation_coefficients(W, p)
        spec = canonical.omega_and_spectrum(rot)
        d = models.nm02_closed_forms(*coords)
        aligned_f, perm = _align(frame.alphas - complex(coords[2]), d.f)
        idx = list(perm)
        worst = max(worst, float(np.max(np.abs(aligned_f
                                               - (frame.alphas - complex(coords[2]))))))
        worst = max(worst, float(np.max(np.abs(d.u[idx] - frame.u))))
        worst = max(worst, float(np.max(np.abs(d.lame_sq[idx] - frame.lame_sq))))
        worst = max(worst, float(np.max(np.abs(d.omega_sq[idx] - spec.omega ** 2))))
    _verdict(8, "pipeline reproduces all closed-form quantities at 10 points",
             worst < 1e-8, f"max mismatch {worst:.2e}")


def _align(reference, values):
    from frobkit.algebra import align_to
    return align_to(reference, values)
