import numpy as np
import pytest

from frobkit import painleve as pv
from frobkit.errors import DegenerateConfigurationError


def test_constant_control_residual():
    # y = 2, s = 3 with vanishing derivatives leaves only the bracket
    r = pv.pvi_residual(3.0, 2.0, 0.0, 0.0)
    assert abs(r - 9.0 / 64.0) < 1e-12


def test_residual_guards_poles():
    with pytest.raises(DegenerateConfigurationError):
        pv.pvi_residual(3.0, 0.0, 0.0, 0.0)
    with pytest.raises(DegenerateConfigurationError):
        pv.pvi_residual(3.0, 1.0, 0.0, 0.0)
    with pytest.raises(DegenerateConfigurationError):
        pv.pvi_residual(3.0, 3.0, 0.0, 0.0)
    with pytest.raises(DegenerateConfigurationError):
        pv.pvi_residual(1.0, 2.0, 0.0, 0.0)


def test_k3_parametrization_values():
    sol = pv.hitchin_solution("k3")
    assert abs(sol.s_of(2.0) - 32.0 / 5.0) < 1e-14
    assert abs(sol.y_of(2.0) - 16.0 / 7.0) < 1e-14


def test_k6_parametrization_values():
    sol = pv.hitchin_solution("k6")
    assert abs(sol.s_of(2.0) - 32.0 / 5.0) < 1e-14
    assert abs(sol.y_of(2.0) - 14.0 / 5.0) < 1e-14


def test_omega_form_composes_through_x():
    # w = -9 maps to x = 2
    sol = pv.hitchin_solution("omega")
    k3 = pv.hitchin_solution("k3")
    assert abs(sol.s_of(-9.0) - k3.s_of(2.0)) < 1e-14
    assert abs(sol.y_of(-9.0) - k3.y_of(2.0)) < 1e-14


def test_curves_satisfy_equation():
    for kind in ("k3", "k6", "omega"):
        sol = pv.hitchin_solution(kind)
        a, b = sol.default_range
        rep = pv.parametric_pvi_residual(sol, a, b, samples=50)
        assert rep.max_residual < 1e-8, kind


def test_residual_stable_under_step_choice():
    sol = pv.hitchin_solution("k3")
    r1 = pv.parametric_pvi_residual(sol, 1.5, 3.0, samples=25, base_step=1e-2)
    r2 = pv.parametric_pvi_residual(sol, 1.5, 3.0, samples=25, base_step=5e-3)
    assert r1.max_residual < 1e-8 and r2.max_residual < 1e-8


def test_sampling_grid_guarded():
    sol = pv.hitchin_solution("k3")
    with pytest.raises(DegenerateConfigurationError):
        pv.parametric_pvi_residual(sol, -0.6, -0.4, samples=21)  # hits x=-1/2


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        pv.hitchin_solution("k5")


def test_kind_aliases_resolve():
    for alias, name in (("k3_x", "k3"), ("k6_x", "k6"), ("omega_form", "omega")):
        assert pv.hitchin_solution(alias).name == name


def test_k6_is_inverse_of_k3_at_reciprocal_argument():
    # y6(x) * y3(1/x) = 1 exactly: the two families are related by
    # inverting the solution and flipping the sign of the w parameter
    y3 = pv.hitchin_solution("k3").y_of
    y6 = pv.hitchin_solution("k6").y_of
    for x in (2.0, 3.5, -4.0, 1.3 + 0.7j):
        assert abs(y6(x) * y3(1.0 / x) - 1.0) < 1e-13


def test_omtoy_rhs_pole_pinning_kills_shared_components():
    y, s = 2.3, 3.1
    rhs = pv.omtoy_rhs(y, s, 0.5 / (y - 1.0))
    # the factor (v - 1/(2(y-1))) sits in components 0 and 1
    assert abs(rhs[0]) < 1e-14 and abs(rhs[1]) < 1e-14
    assert abs(rhs[2]) > 1e-3


def test_omtoy_check_guards():
    n = 15
    y = np.linspace(2.2, 2.4, n).astype(complex)
    osq = np.ones((n, 3), dtype=complex)
    with pytest.raises(DegenerateConfigurationError):
        pv.omtoy_check(np.full(n, 3.0 + 0j), y, osq)   # ds/dt = 0
    with pytest.raises(DegenerateConfigurationError):
        pv.omtoy_check(np.linspace(2.9, 3.1, n).astype(complex),
                       np.linspace(0.9999, 1.2, n).astype(complex),
                       osq)                             # grid touches y = 1
    with pytest.raises(ValueError):
        pv.omtoy_check(np.linspace(2.9, 3.1, 5), y[:5], osq[:5])
    with pytest.raises(ValueError):
        pv.omtoy_check(np.linspace(2.9, 3.1, n), y, osq[:, :2])
