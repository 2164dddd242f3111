"""The three-component top system on the thrice-punctured line.

    dw1/ds = w2 w3 / s
    dw2/ds = w1 w3 / (s (s - 1))
    dw3/ds = w1 w2 / (1 - s)

w1^2 + w2^2 + w3^2 is a first integral.  The system is covariant under
relabelings of the components: each permutation pairs with a Moebius
map of s, and flipping the signs of exactly two components is a
symmetry (an odd number of flips reverses the flow).  Candidate
parametric solutions are therefore checked against twelve labelings
and the best match reported.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateConfigurationError
from .kernels import rk4_top
from .numdiff import grid_derivative

SINGULAR_CLEARANCE = 1e-9

# permutation (w'_m = w[perm[m]]) -> accompanying substitution of s
MOEBIUS_FOR_PERM = {
    (0, 1, 2): lambda s: s,
    (0, 2, 1): lambda s: 1.0 / s,
    (1, 0, 2): lambda s: s / (s - 1.0),
    (2, 1, 0): lambda s: 1.0 - s,
    (1, 2, 0): lambda s: (s - 1.0) / s,
    (2, 0, 1): lambda s: 1.0 / (1.0 - s),
}

SIGN_CLASSES = ((1.0, 1.0, 1.0), (-1.0, 1.0, 1.0))


def top_rhs(s, w) -> np.ndarray:
    s = complex(s)
    if abs(s) < SINGULAR_CLEARANCE or abs(s - 1.0) < SINGULAR_CLEARANCE:
        raise DegenerateConfigurationError(f"top system is singular at s={s}")
    w1, w2, w3 = (complex(v) for v in w)
    return np.array([w2 * w3 / s,
                     w1 * w3 / (s * (s - 1.0)),
                     w1 * w2 / (1.0 - s)])


def casimir(w) -> complex:
    w = np.asarray(w, dtype=complex)
    return complex(np.sum(w * w))


def _segment_clearance(s0: complex, s1: complex) -> float:
    """Distance from the straight segment [s0, s1] to the points 0 and 1."""
    def dist(point):
        d = s1 - s0
        denom = abs(d) ** 2
        if denom == 0.0:
            return abs(point - s0)
        t = ((point - s0).conjugate() * d).real / denom
        t = min(1.0, max(0.0, t))
        return abs(point - (s0 + t * d))
    return min(dist(0.0), dist(1.0))


@dataclass(frozen=True)
class TopIntegration:
    s0: complex
    s1: complex
    w0: np.ndarray
    w1: np.ndarray
    steps: int
    casimir_drift: float
    # drift / h^4 at step size h: roughly step-independent for an
    # order-4 scheme, so it doubles as a convergence certificate
    drift_constant: float


def integrate_rk4(s0, w0, s1, steps: int = 4096) -> TopIntegration:
    """Fixed-step RK4 along the straight segment [s0, s1].

    The Casimir is conserved by the flow, so its drift over the path
    measures the integration error; the report carries both the drift
    and the drift per fourth power of the step.
    """
    s0 = complex(s0)
    s1 = complex(s1)
    w0 = np.asarray(w0, dtype=complex)
    if steps < 1:
        raise ValueError("steps must be at least 1")
    if _segment_clearance(s0, s1) < 0.05:
        raise DegenerateConfigurationError(
            "integration segment passes too close to s=0 or s=1")
    w1 = rk4_top(s0, w0, s1, steps)
    drift = float(abs(casimir(w1) - casimir(w0)))
    h = abs(s1 - s0) / steps
    constant = drift / h ** 4 if h > 0.0 else 0.0
    return TopIntegration(s0=s0, s1=s1, w0=w0, w1=np.asarray(w1),
                          steps=steps, casimir_drift=drift,
                          drift_constant=constant)


@dataclass(frozen=True)
class LabelingRecord:
    perm: tuple
    signs: tuple
    residual: float


@dataclass(frozen=True)
class TopCurveMatch:
    residual: float
    perm: tuple
    signs: tuple
    records: tuple     # all labelings, sorted by residual


def parametric_residual(curve, t0: float, t1: float, samples: int = 801,
                        perm_search: bool = True) -> TopCurveMatch:
    """How well max over a labeling class does curve(t) = (s, (w1, w2, w3))
    solve the top system.

    With perm_search the six permutations (each with its Moebius
    partner acting on s) and both sign classes are tried; ties within a
    factor of two resolve lexicographically so the reported labeling is
    reproducible run to run.
    """
    if samples < 7:
        raise ValueError("need at least 7 samples for the interior stencil")
    ts = np.linspace(t0, t1, samples)
    dt = float(ts[1] - ts[0])
    svals = np.empty(samples, dtype=complex)
    wvals = np.empty((samples, 3), dtype=complex)
    for k, t in enumerate(ts):
        s, w = curve(float(t))
        svals[k] = s
        wvals[k, :] = w
    if np.min(np.abs(svals)) < SINGULAR_CLEARANCE \
            or np.min(np.abs(svals - 1.0)) < SINGULAR_CLEARANCE:
        raise DegenerateConfigurationError("curve grid touches s=0 or s=1")

    perms = list(MOEBIUS_FOR_PERM) if perm_search else [(0, 1, 2)]
    signsets = SIGN_CLASSES if perm_search else (SIGN_CLASSES[0],)
    records = []
    for perm in sorted(perms):
        phi = MOEBIUS_FOR_PERM[perm]
        s_new = np.array([phi(s) for s in svals])
        if np.min(np.abs(s_new)) < SINGULAR_CLEARANCE \
                or np.min(np.abs(s_new - 1.0)) < SINGULAR_CLEARANCE \
                or np.max(np.abs(s_new)) > 1.0 / SINGULAR_CLEARANCE:
            continue
        w_perm = wvals[:, list(perm)]
        ds = grid_derivative(s_new, dt)
        for signs in signsets:
            w_new = w_perm * np.asarray(signs)
            dw = grid_derivative(w_new, dt)
            res = 0.0
            for k in range(len(ds)):
                rhs = top_rhs(s_new[k + 2], w_new[k + 2])
                res = max(res, float(np.max(np.abs(dw[k] - ds[k] * rhs))))
            records.append(LabelingRecord(perm=perm, signs=signs, residual=res))
    if not records:
        raise DegenerateConfigurationError("every labeling degenerates on this grid")

    records.sort(key=lambda r: r.residual)
    best = records[0].residual
    admissible = [r for r in records if r.residual <= 2.0 * best + 1e-300]
    winner = min(admissible, key=lambda r: (r.perm, r.signs))
    return TopCurveMatch(residual=winner.residual, perm=winner.perm,
                         signs=winner.signs, records=tuple(records))
