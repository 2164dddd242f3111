"""Canonical coordinates, Lame squares and rotation coefficients.

Frozen oracle point, coords (0, 2, 1): the critical equation is
z (z - 1)^2 = 2 with roots (2, i, -i), so

    u      = (4, -3/2 - i, -3/2 + i)
    h^2    = (1/5, (2 + i)/5, (2 - i)/5)          [1 / W''(root)]
    du/dx2 = 1/(root - 1),  du/dx3 = root,  du/dx1 = 1

and a direct evaluation of (1/h_j) dh_1/du_2 gives
beta_12^2 = (-38 + 41 i) / 15625.
"""

import numpy as np
import pytest

from frobkit import canonical as cn
from frobkit import models
from frobkit.errors import CoordinateChartError

POINT = (0.0, 2.0, 1.0)


def _frame(coords=POINT, coordinate=0):
    W, p = models.get_model("nm11").potential(coords)
    return W, p, cn.canonical_frame(W, p, coordinate=coordinate)


def test_frozen_u_and_lame():
    _, _, frame = _frame()
    assert np.allclose(frame.u, [4.0, -1.5 - 1j, -1.5 + 1j], atol=1e-12)
    assert np.allclose(frame.lame_sq,
                       [0.2, (2.0 + 1j) / 5.0, (2.0 - 1j) / 5.0], atol=1e-12)


def test_jacobian_closed_rows():
    _, _, frame = _frame()
    al = frame.alphas
    assert np.allclose(frame.jac[:, 0], 1.0, atol=1e-12)
    assert np.allclose(frame.jac[:, 1], 1.0 / (al - 1.0), atol=1e-12)
    assert np.allclose(frame.jac[:, 2], al, atol=1e-12)


def test_lame_states_unit_gradient():
    # h_i^2 is the row of the inverse Jacobian for the selected slot
    _, _, frame = _frame()
    inv = np.linalg.inv(frame.jac)
    assert np.max(np.abs(frame.lame_sq - inv[0, :])) < 1e-12


def test_alternate_coordinate_slot():
    _, _, frame = _frame(coordinate=1)
    inv = np.linalg.inv(frame.jac)
    assert np.max(np.abs(frame.lame_sq - inv[1, :])) < 1e-12


def test_newton_round_trip():
    _, _, frame = _frame()
    target = frame.u + np.array([0.02, -0.01 + 0.015j, 0.01 - 0.005j])
    moved = cn.newton_flat_point(frame, target)
    assert np.max(np.abs(moved.u - target)) < 1e-12
    back = cn.newton_flat_point(moved, frame.u)
    assert np.max(np.abs(back.point.coords - frame.point.coords)) < 1e-10


def test_newton_distant_target_and_stall(monkeypatch):
    _, _, frame = _frame()
    # a scaled target is regular and reachable ...
    out = cn.newton_flat_point(frame, frame.u * 1.7)
    assert np.max(np.abs(out.u - frame.u * 1.7)) < 1e-12
    # ... but an iteration budget too small to get there must be reported
    monkeypatch.setattr(cn, "NEWTON_MAX_ITER", 2)
    with pytest.raises(CoordinateChartError):
        cn.newton_flat_point(frame, frame.u * 1.7)


def test_frozen_beta12_squared():
    W, p, _ = _frame()
    rot = cn.rotation_coefficients(W, p)
    expected = (-38.0 + 41.0j) / 15625.0
    assert abs(rot.beta[0, 1] ** 2 - expected) < 1e-9
    assert rot.symmetry_defect < 1e-10


def test_beta_squares_are_gauge_invariant():
    W, p, _ = _frame()
    a = cn.rotation_coefficients(W, p)
    b = cn.rotation_coefficients(W, p, gauge=(1, -1, 1))
    assert np.max(np.abs(a.beta ** 2 - b.beta ** 2)) < 1e-12


def test_darboux_egoroff_residuals_nm11():
    W, p, _ = _frame()
    r = cn.darboux_egoroff_residuals(W, p)
    assert r.symmetry < 1e-6
    assert r.closure < 1e-5
    assert r.identity_on_beta < 1e-5
    assert r.euler_on_beta < 1e-5
    assert r.identity_on_lame < 1e-6
    # x1 has weight 1, so E(h^2) = 0 here
    assert r.euler_on_lame_sq < 1e-5


def test_darboux_egoroff_residuals_nm02():
    W, p = models.get_model("nm02").potential((1.0, 1.0, 2.0))
    r = cn.darboux_egoroff_residuals(W, p)
    assert r.closure < 1e-5
    assert r.euler_on_beta < 1e-5
    # leading flat coordinate has weight 2: E(h^2) = h^2
    assert r.euler_on_lame_sq < 1e-5


def test_omega_spectrum_frozen():
    W, p, _ = _frame()
    rot = cn.rotation_coefficients(W, p)
    spec = cn.omega_and_spectrum(rot)
    assert np.allclose(spec.omega ** 2,
                       [-0.05, -0.1 - 0.05j, -0.1 + 0.05j], atol=1e-9)
    assert abs(spec.r_squared - 0.25) < 1e-9
    assert abs(spec.r_squared - spec.half_trace_vsq) < 1e-12
    assert np.allclose(spec.eigenvalues, [0.5, 0.0, -0.5], atol=1e-8)


def test_omega_requires_three_points():
    W, p = models.get_model("nm02").potential((1.0, 1.0, 2.0))
    rot = cn.rotation_coefficients(W, p)
    spec = cn.omega_and_spectrum(rot)  # nm02 frame also has three points
    assert abs(spec.r_squared - 0.25) < 1e-9


def test_tau_gradient_identity_and_euler():
    W, p, _ = _frame()
    rot = cn.rotation_coefficients(W, p)
    data = cn.tau_gradient_check(rot)
    assert data.identity_sum < 1e-10
    assert data.euler_residual < 1e-6


def test_tau_gradient_against_closed_form():
    W, p, _ = _frame()
    rot = cn.rotation_coefficients(W, p)

    def grad_x(point):
        c = point.coords
        return models.nm11_log_tau_gradient(c[1].real, c[2].real)

    data = cn.tau_gradient_check(rot, grad_logtau_x=grad_x)
    assert data.closed_form_mismatch < 1e-6


def test_branch_aligned_sqrt():
    ref = np.array([1.0 + 0j, -2.0 + 0j])
    got = cn._branch_aligned_sqrt(np.array([4.0 + 0j, 4.0 + 0j]), ref)
    assert np.allclose(got, [2.0, -2.0])
