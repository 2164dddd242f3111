"""Root finding and root bookkeeping.

The cubic solver is checked against an independent oracle: the real
root of z^3 - z - 1 is bracketed by bisection on the real axis, and
the remaining pair follows from the quadratic factor.  Hand-factored
cubics pin the deterministic ordering.
"""

import numpy as np
import pytest

from frobkit import algebra
from frobkit.errors import DegenerateConfigurationError, RootFindingError


def _bisect_real_root(f, lo, hi, iters=200):
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def test_cubic_against_bisection_oracle():
    # z^3 - z - 1: one real root, complex pair from synthetic division
    p = algebra.PolynomialC([-1.0, -1.0, 0.0, 1.0])
    r = _bisect_real_root(lambda t: t**3 - t - 1.0, 1.0, 2.0)
    # deflated quadratic z^2 + r z + (r^2 - 1)
    disc = np.sqrt(complex(r * r - 4.0 * (r * r - 1.0)))
    pair = [(-r + disc) / 2.0, (-r - disc) / 2.0]
    expected = algebra.order_roots([r] + pair)
    got = algebra.roots_all(p)
    assert np.max(np.abs(got - expected)) < 1e-12


def test_cubic_hand_factored():
    # z^3 - 2 z^2 + z - 2 = (z - 2)(z^2 + 1)
    p = algebra.PolynomialC([-2.0, 1.0, -2.0, 1.0])
    got = algebra.roots_all(p)
    assert np.allclose(got, [2.0, 1j, -1j], atol=1e-12)


def test_cube_roots_of_unity_ordering():
    p = algebra.PolynomialC([-1.0, 0.0, 0.0, 1.0])
    got = algebra.roots_all(p)
    w = np.exp(2j * np.pi / 3.0)
    assert np.allclose(got, [1.0, w, np.conj(w)], atol=1e-12)


def test_quadratic_and_linear():
    got = algebra.roots_all(algebra.PolynomialC([6.0, -5.0, 1.0]))
    assert np.allclose(got, [3.0, 2.0], atol=1e-13)
    got = algebra.roots_all(algebra.PolynomialC([-7.0, 2.0]))
    assert np.allclose(got, [3.5], atol=1e-14)


def test_quartic_durand_kerner():
    # (z-1)(z-2)(z-3)(z-4)
    p = algebra.PolynomialC([24.0, -50.0, 35.0, -10.0, 1.0])
    got = algebra.roots_all(p)
    assert np.allclose(got, [4.0, 3.0, 2.0, 1.0], atol=1e-10)


def test_from_roots_round_trip():
    rng = np.random.default_rng(11)
    for _ in range(12):
        k = rng.integers(2, 7)
        roots = rng.normal(size=k) + 1j * rng.normal(size=k)
        # keep the set well separated so the round trip is clean
        if np.min(np.abs(roots[:, None] - roots[None, :])
                  + np.eye(k)) < 0.15:
            continue
        p = algebra.from_roots(roots)
        got = algebra.roots_all(p)
        assert np.max(np.abs(got - algebra.order_roots(roots))) < 1e-8


def test_roots_satisfy_residual_bound():
    p = algebra.PolynomialC([1.0, 2.0, -4.0, 0.5, 1.0, 1.0])
    roots = algebra.roots_all(p)
    scale = 1.0 + float(np.max(np.abs(p.coeffs)))
    assert np.max(np.abs(p(roots))) <= 1e-10 * scale


def test_order_roots_tie_break():
    got = algebra.order_roots([-1j, 1j, 2.0])
    assert np.allclose(got, [2.0, 1j, -1j])


def test_order_roots_snaps_round_off():
    # keys within the coalescence tolerance must behave as exact ties
    noisy = [2.0 + 0j, 1e-15 - 1j, -1e-15 + 1j]
    got = algebra.order_roots(noisy)
    assert abs(got[1] - 1j) < 1e-12 and abs(got[2] + 1j) < 1e-12


def test_align_to_tracks_permutation():
    ref = np.array([2.0 + 0j, 1j, -1j])
    moved = np.array([-1j + 0.01, 2.02 + 0j, 1j - 0.01j])
    aligned, perm = algebra.align_to(ref, moved)
    assert abs(aligned[0] - 2.02) < 1e-12
    assert tuple(perm) == (1, 2, 0)


def test_residue_at_simple_zero():
    # N(a)/W''(a); z^2 - 1 at z = 1 gives W'' = 2
    assert abs(algebra.residue_at_simple_zero(1.0, 2.0) - 0.5) < 1e-14
    with pytest.raises(DegenerateConfigurationError):
        algebra.residue_at_simple_zero(1.0, 1e-14)


def test_check_separation_raises_on_coalescence():
    with pytest.raises(DegenerateConfigurationError):
        algebra.check_separation(np.array([1.0, 1.0 + 1e-12, 3.0]))


def test_constant_polynomial_rejected():
    with pytest.raises(RootFindingError):
        algebra.roots_all(algebra.PolynomialC([3.0]))


def test_polynomial_eval_and_derivative():
    p = algebra.PolynomialC([1.0, 0.0, 3.0])      # 3 z^2 + 1
    assert abs(p(2.0) - 13.0) < 1e-14
    dp = p.derivative()
    assert abs(dp(2.0) - 12.0) < 1e-14
    assert p.degree == 2 and dp.degree == 1
