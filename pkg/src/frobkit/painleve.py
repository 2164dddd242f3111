"""A Painleve VI equation at the parameter point (1/8, -1/8, 1/8, 3/8),
plus algebraic solution families checked by direct substitution.

Derivatives of a parametrized family t -> (s(t), y(t)) are taken with
Richardson-refined central differences; the chain rule converts them
to d/ds.  Steps are deliberately coarse (1e-2 scale) because the
second-derivative roundoff floor at machine precision is eps/h^2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateConfigurationError
from .numdiff import derivs12, grid_derivative
from .report import VerificationReport

_CLEARANCE = 1e-9
GUARD_RADIUS = 1e-3

_SQ3 = np.sqrt(3.0)


def pvi_residual(s, y, y_s, y_ss) -> complex:
    """Second-order residual of the equation at one point.

    Inputs are the independent variable, the function value and its
    first two s-derivatives.  Zero means the point sits on a solution.
    """
    s = complex(s)
    y = complex(y)
    if abs(s) < _CLEARANCE or abs(s - 1.0) < _CLEARANCE:
        raise DegenerateConfigurationError(f"equation is singular at s={s}")
    if abs(y) < _CLEARANCE or abs(y - 1.0) < _CLEARANCE or abs(y - s) < _CLEARANCE:
        raise DegenerateConfigurationError(f"solution value hits a pole: y={y}, s={s}")
    half_sum = 0.5 * (1.0 / y + 1.0 / (y - 1.0) + 1.0 / (y - s))
    drift = 1.0 / s + 1.0 / (s - 1.0) + 1.0 / (y - s)
    bracket = (0.125
               - s / (8.0 * y ** 2)
               + (s - 1.0) / (8.0 * (y - 1.0) ** 2)
               + 3.0 * s * (s - 1.0) / (8.0 * (y - s) ** 2))
    rational = y * (y - 1.0) * (y - s) / (s ** 2 * (s - 1.0) ** 2)
    return complex(y_ss - (half_sum * y_s ** 2 - drift * y_s + rational * bracket))


@dataclass(frozen=True)
class PViSolution:
    name: str
    s_of: object
    y_of: object
    guard_points: tuple
    default_range: tuple


def _k3_s(x):
    return x ** 3 * (x + 2.0) / (2.0 * x + 1.0)


def _k3_y(x):
    return x ** 2 * (x + 2.0) / (x ** 2 + x + 1.0)


def _k6_y(x):
    return x * (x ** 2 + x + 1.0) / (2.0 * x + 1.0)


def _omega_to_x(w):
    return (w - 3.0) / (w + 3.0)


_X_GUARDS = (0.0, 1.0, -1.0, -2.0, -0.5,
             -0.5 + 0.5j * _SQ3, -0.5 - 0.5j * _SQ3)
_OMEGA_GUARDS = (3.0, -3.0, 0.0, 1.0, -1.0, 1j * _SQ3, -1j * _SQ3)


_KIND_ALIASES = {"k3_x": "k3", "k6_x": "k6", "omega_form": "omega"}


def hitchin_solution(kind: str) -> PViSolution:
    """Algebraic solution families.

    "k3"    degree-three pair (s(x), y(x))
    "k6"    degree-six partner sharing the same s(x)
    "omega" the k3 family reparametrized by w with x = (w - 3)/(w + 3)

    The suffixed spellings k3_x, k6_x and omega_form are accepted too.
    """
    kind = _KIND_ALIASES.get(kind, kind)
    if kind == "k3":
        return PViSolution("k3", _k3_s, _k3_y, _X_GUARDS, (1.5, 3.0))
    if kind == "k6":
        return PViSolution("k6", _k3_s, _k6_y, _X_GUARDS, (1.5, 3.0))
    if kind == "omega":
        return PViSolution(
            "omega",
            lambda w: _k3_s(_omega_to_x(w)),
            lambda w: _k3_y(_omega_to_x(w)),
            _OMEGA_GUARDS,
            (-12.0, -6.0),
        )
    raise ValueError(f"unknown solution kind: {kind!r}")


@dataclass(frozen=True)
class PViCurveReport:
    name: str
    max_residual: float
    worst_t: float
    samples: int


def parametric_pvi_residual(sol: PViSolution, t0: float, t1: float,
                            samples: int = 40, base_step: float = 1e-2,
                            levels: int = 2) -> PViCurveReport:
    """Worst pointwise residual of a parametrized family over [t0, t1]."""
    ts = np.linspace(t0, t1, samples)
    for g in sol.guard_points:
        if np.min(np.abs(ts - g)) < GUARD_RADIUS:
            raise DegenerateConfigurationError(
                f"sample grid passes within {GUARD_RADIUS} of the "
                f"degenerate parameter {g}")
    worst = -1.0
    worst_t = float(ts[0])
    for t in ts:
        t = float(t)
        h = base_step * max(1.0, abs(t))
        sd, sdd = derivs12(sol.s_of, t, h, levels=levels)
        yd, ydd = derivs12(sol.y_of, t, h, levels=levels)
        if abs(sd) < _CLEARANCE:
            raise DegenerateConfigurationError(f"ds/dt vanishes at t={t}")
        y_s = yd / sd
        y_ss = (ydd * sd - yd * sdd) / sd ** 3
        r = abs(pvi_residual(sol.s_of(t), sol.y_of(t), y_s, y_ss))
        if r > worst:
            worst = r
            worst_t = t
    return PViCurveReport(name=sol.name, max_residual=float(worst),
                          worst_t=worst_t, samples=samples)


def omtoy_rhs(y, s, v) -> np.ndarray:
    """Right-hand sides of the three omega-square relations at (y, s, v).

    Each component carries two of the three factors (v - 1/(2y)),
    (v - 1/(2(y-1))), (v - 1/(2(y-s))), so pinning v to one of the
    poles kills the two components that share its factor.
    """
    y = np.asarray(y, dtype=complex)
    s = np.asarray(s, dtype=complex)
    v = np.asarray(v, dtype=complex)
    out = np.empty(np.broadcast(y, s, v).shape + (3,), dtype=complex)
    out[..., 0] = -(y - s) * y ** 2 * (y - 1.0) / s \
        * (v - 0.5 / (y - s)) * (v - 0.5 / (y - 1.0))
    out[..., 1] = (y - s) ** 2 * y * (y - 1.0) / (s * (1.0 - s)) \
        * (v - 0.5 / (y - 1.0)) * (v - 0.5 / y)
    out[..., 2] = -(y - s) * y * (y - 1.0) ** 2 / (1.0 - s) \
        * (v - 0.5 / y) * (v - 0.5 / (y - s))
    return out


def omtoy_check(s, y, omega_sq, perm_search: bool = True) -> list:
    """A sampled solution curve against the squared omega components.

    `s`, `y` and `omega_sq` are samples along one smooth curve taken at
    a uniform parameter spacing (the parameter cancels in dy/ds, so it
    never needs to be passed).  The auxiliary variable v is recovered
    from the first-derivative relation, the three right-hand sides are
    matched to omega_sq over the six relabelings, and their sum is
    compared against -1/4.
    """
    s = np.asarray(s, dtype=complex)
    y = np.asarray(y, dtype=complex)
    osq = np.asarray(omega_sq, dtype=complex)
    if s.ndim != 1 or y.shape != s.shape or osq.shape != s.shape + (3,):
        raise ValueError("expected matching 1-d samples and (N, 3) squares")
    if len(s) < 7:
        raise ValueError("need at least 7 samples for the interior stencil")
    clearance = min(np.min(np.abs(y)), np.min(np.abs(y - 1.0)),
                    np.min(np.abs(y - s)), np.min(np.abs(s)),
                    np.min(np.abs(s - 1.0)))
    if clearance < GUARD_RADIUS:
        raise DegenerateConfigurationError(
            "sampled curve passes within GUARD_RADIUS of a pole of the system")
    ds = grid_derivative(s, 1.0)
    if float(np.min(np.abs(ds))) < _CLEARANCE * max(1.0, float(np.max(np.abs(s)))):
        raise DegenerateConfigurationError("ds/dt vanishes on the sample grid")
    dyds = grid_derivative(y, 1.0) / ds
    si, yi, oi = s[2:-2], y[2:-2], osq[2:-2]
    v = (dyds * si * (si - 1.0) / (yi * (yi - 1.0) * (yi - si))
         + 0.5 / yi + 0.5 / (yi - 1.0) - 0.5 / (yi - si)) / 2.0
    rhs = omtoy_rhs(yi, si, v)
    perms = itertools.permutations(range(3)) if perm_search else ((0, 1, 2),)
    best = None
    best_perm = None
    for perm in perms:
        res = float(np.max(np.abs(rhs - oi[:, list(perm)])))
        if best is None or res < best:
            best = res
            best_perm = perm
    sum_res = float(np.max(np.abs(np.sum(rhs, axis=1) + 0.25)))
    return [
        VerificationReport("omtoy-dictionary-match", best, 1e-5,
                           {"convention": f"perm={best_perm}"}),
        VerificationReport("omtoy-sum-rule", sum_res, 1e-6),
    ]
