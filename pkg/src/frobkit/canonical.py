"""Canonical coordinates, Lame coefficients and rotation coefficients.

Canonical coordinates are the critical values u_i = W(alpha_i).  Their
Jacobian against the flat coordinates is exact (the chain rule kills
the dW/dz term at a critical point), which makes Newton inversion of
the chart cheap and lets every finite difference run in u-space with a
controlled floor.

Square roots of the Lame squares carry a sign gauge; it is fixed by
scanning the 2^(N-1) sign vectors for the one that makes the rotation
coefficients most symmetric, and the residual asymmetry is reported.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import algebra
from .errors import CoordinateChartError
from .frobenius import FlatPoint, RationalPotential, build_potential, critical_data, tangent_fields

NEWTON_TOL = 5e-14
NEWTON_TOL_ACCEPT = 1e-12
NEWTON_MAX_ITER = 50
BETA_BASE_STEP = 1e-3     # inner u-space step (relative), one Richardson level
CLOSURE_STEP = 1e-4       # outer u-space step (relative), plain central


@dataclass(frozen=True)
class CanonicalFrame:
    potential: RationalPotential
    point: FlatPoint
    alphas: np.ndarray
    u: np.ndarray
    jac: np.ndarray       # jac[i, a] = du_i / dx_a, exact
    lame_sq: np.ndarray   # d(x_coordinate)/du_i
    coordinate: int = 0

    @property
    def size(self) -> int:
        return len(self.u)


def canonical_frame(W: RationalPotential, p: FlatPoint,
                    coordinate: int = 0) -> CanonicalFrame:
    """Critical points, critical values, exact Jacobian and Lame squares.

    `coordinate` selects the flat coordinate whose u-gradient defines
    the Lame squares; 0 (the default) admits the closed product form,
    other slots read the matching row of the inverse Jacobian.
    """
    alphas, weights = critical_data(W)
    u = np.array([W(al) for al in alphas])
    T = tangent_fields(W, p)
    jac = np.array([[t(al) for t in T] for al in alphas])
    if coordinate == 0:
        lame_sq = weights
    else:
        try:
            inv = np.linalg.inv(jac)
        except np.linalg.LinAlgError as exc:
            raise CoordinateChartError(f"singular chart Jacobian: {exc}") from exc
        lame_sq = inv[coordinate, :].copy()
    return CanonicalFrame(potential=W, point=p, alphas=alphas, u=u,
                          jac=jac, lame_sq=lame_sq, coordinate=coordinate)


def _frame_aligned(p: FlatPoint, ref: CanonicalFrame,
                   coordinate: int) -> CanonicalFrame:
    W = build_potential(ref.potential.n, ref.potential.m, p)
    frame = canonical_frame(W, p, coordinate=coordinate)
    aligned, perm = algebra.align_to(ref.alphas, frame.alphas)
    idx = list(perm)
    return CanonicalFrame(potential=W, point=p, alphas=aligned,
                          u=frame.u[idx], jac=frame.jac[idx, :],
                          lame_sq=frame.lame_sq[idx], coordinate=coordinate)


def newton_flat_point(base: CanonicalFrame, u_target,
                      coordinate: int | None = None) -> CanonicalFrame:
    """Invert the chart u(x) near `base` for the requested critical values."""
    u_target = np.asarray(u_target, dtype=complex)
    coordinate = base.coordinate if coordinate is None else coordinate
    scale = max(1.0, float(np.max(np.abs(u_target))))
    p = base.point
    frame = base
    residual = np.inf
    for _ in range(NEWTON_MAX_ITER):
        r = u_target - frame.u
        residual = float(np.max(np.abs(r)))
        if residual <= NEWTON_TOL * scale:
            return frame
        try:
            step = np.linalg.solve(frame.jac, r)
        except np.linalg.LinAlgError as exc:
            raise CoordinateChartError(f"singular chart Jacobian: {exc}") from exc
        p = p.with_coords(p.coords + step)
        frame = _frame_aligned(p, base, coordinate)
    if residual <= NEWTON_TOL_ACCEPT * scale:
        return frame
    raise CoordinateChartError(
        f"chart inversion stalled at residual {residual:.3e}"
    )


def _branch_aligned_sqrt(values_sq, reference) -> np.ndarray:
    out = np.empty(len(values_sq), dtype=complex)
    for i, vsq in enumerate(values_sq):
        r = np.sqrt(complex(vsq))
        out[i] = r if abs(r - reference[i]) <= abs(-r - reference[i]) else -r
    return out


@dataclass(frozen=True)
class RotationData:
    frame: CanonicalFrame
    lame: np.ndarray           # gauged h_i
    beta: np.ndarray           # symmetrized, zero diagonal
    beta_raw: np.ndarray       # before symmetrization (same gauge)
    symmetry_defect: float
    gauge: tuple


def _fd_scale(u) -> float:
    """Step scale for u-space differencing.

    Bounded by the smallest pairwise separation: the rotation
    coefficients diverge at coalescence, so a step must never be
    comparable to the gap it is probing across.
    """
    u = np.asarray(u, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(u))))
    n = len(u)
    sep = min(abs(u[i] - u[j]) for i in range(n) for j in range(i + 1, n))
    return min(scale, sep)


def _lame_fd_matrix(base: CanonicalFrame, u_center, h_ref,
                    coordinate: int, base_step: float) -> np.ndarray:
    """D[i, j] = dh_i/du_j at u_center by Richardson-refined central steps."""
    n = base.size
    scale = _fd_scale(u_center)
    D_rows = []
    for level in range(2):
        delta = base_step * scale / 2.0 ** level
        D = np.empty((n, n), dtype=complex)
        for j in range(n):
            e = np.zeros(n)
            e[j] = delta
            hp = _branch_aligned_sqrt(
                newton_flat_point(base, u_center + e, coordinate).lame_sq, h_ref)
            hm = _branch_aligned_sqrt(
                newton_flat_point(base, u_center - e, coordinate).lame_sq, h_ref)
            D[:, j] = (hp - hm) / (2.0 * delta)
        D_rows.append(D)
    return (4.0 * D_rows[1] - D_rows[0]) / 3.0


def _beta_from_D(D, h, gauge) -> np.ndarray:
    n = len(h)
    eps = np.asarray(gauge, dtype=float)
    beta = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            if i != j:
                beta[i, j] = eps[i] * eps[j] * D[i, j] / h[j]
    return beta


def _gauge_search(D, h) -> tuple:
    n = len(h)
    best = None
    best_defect = np.inf
    for tail in itertools.product((1, -1), repeat=n - 1):
        gauge = (1,) + tail
        beta = _beta_from_D(D, h, gauge)
        defect = float(np.max(np.abs(beta - beta.T)))
        if defect < best_defect:
            best_defect = defect
            best = gauge
    return best


def rotation_coefficients(W: RationalPotential, p: FlatPoint,
                          coordinate: int = 0,
                          base_step: float = BETA_BASE_STEP,
                          gauge: tuple | None = None) -> RotationData:
    """beta_ij = (1/h_j) dh_i/du_j with the symmetry-minimizing sign gauge."""
    base = canonical_frame(W, p, coordinate=coordinate)
    return _rotation_at(base, base.u, coordinate, base_step, gauge)


def _rotation_at(base: CanonicalFrame, u_center, coordinate: int,
                 base_step: float, gauge: tuple | None,
                 h_reference=None) -> RotationData:
    center = base if np.allclose(u_center, base.u, rtol=0, atol=0) \
        else newton_flat_point(base, u_center, coordinate)
    if h_reference is None:
        h_ref = np.sqrt(center.lame_sq.astype(complex))
    else:
        # off-center evaluation: stay on the caller's branch so that
        # beta(u) is continuous across the principal-sqrt cut
        h_ref = _branch_aligned_sqrt(center.lame_sq, h_reference)
    D = _lame_fd_matrix(base, np.asarray(u_center, dtype=complex),
                        h_ref, coordinate, base_step)
    if gauge is None:
        gauge = _gauge_search(D, h_ref)
    beta_raw = _beta_from_D(D, h_ref, gauge)
    defect = float(np.max(np.abs(beta_raw - beta_raw.T)))
    beta = (beta_raw + beta_raw.T) / 2.0
    np.fill_diagonal(beta, 0.0)
    h_signed = np.asarray(gauge, dtype=float) * h_ref
    return RotationData(frame=center, lame=h_signed, beta=beta,
                        beta_raw=beta_raw, symmetry_defect=defect, gauge=gauge)


@dataclass(frozen=True)
class DarbouxEgoroffResiduals:
    symmetry: float
    closure: float
    identity_on_beta: float
    euler_on_beta: float
    identity_on_lame: float
    euler_on_lame_sq: float


def darboux_egoroff_residuals(W: RationalPotential, p: FlatPoint,
                              coordinate: int = 0) -> DarbouxEgoroffResiduals:
    """The full flatness/homogeneity residual suite in u-space.

    closure:        d_j beta_ik = beta_ij beta_jk   (i, j, k distinct)
    identity field: sum_m d_m beta_ik = 0,  sum_m d_m h_i = 0
    Euler field:    E(beta) = -beta,  E(h^2) = (d_1 - 1) h^2
    """
    rot = rotation_coefficients(W, p, coordinate=coordinate)
    base = rot.frame
    n = base.size
    u0 = base.u
    delta = CLOSURE_STEP * _fd_scale(u0)

    def beta_at(u_vec):
        # rot.lame already carries the gauge signs, so the identity
        # gauge plus branch alignment reproduces rot.beta at u0
        return _rotation_at(base, u_vec, coordinate, BETA_BASE_STEP,
                            (1,) * n, h_reference=rot.lame)

    closure = 0.0
    for j in range(n):
        e = np.zeros(n)
        e[j] = delta
        bp = beta_at(u0 + e).beta
        bm = beta_at(u0 - e).beta
        dbeta = (bp - bm) / (2.0 * delta)
        for i in range(n):
            for k in range(n):
                if len({i, j, k}) == 3:
                    res = abs(dbeta[i, k] - rot.beta[i, j] * rot.beta[j, k])
                    closure = max(closure, res)

    ones = np.ones(n)
    bp = beta_at(u0 + delta * ones)
    bm = beta_at(u0 - delta * ones)
    off = ~np.eye(n, dtype=bool)
    identity_on_beta = float(np.max(np.abs((bp.beta - bm.beta) / (2.0 * delta))[off]))
    identity_on_lame = float(np.max(np.abs(
        (_branch_aligned_sqrt(bp.frame.lame_sq, rot.lame)
         - _branch_aligned_sqrt(bm.frame.lame_sq, rot.lame)) / (2.0 * delta))))

    # Euler action: scaling flow u -> (1 + t) u
    t_step = CLOSURE_STEP
    bp = beta_at(u0 * (1.0 + t_step))
    bm = beta_at(u0 * (1.0 - t_step))
    ebeta = (bp.beta - bm.beta) / (2.0 * t_step)
    euler_on_beta = float(np.max(np.abs(ebeta + rot.beta)[off]))
    elame_sq = (bp.frame.lame_sq - bm.frame.lame_sq) / (2.0 * t_step)
    weight = p.degrees[coordinate] - 1.0
    euler_on_lame_sq = float(np.max(np.abs(elame_sq - weight * base.lame_sq)))

    return DarbouxEgoroffResiduals(
        symmetry=rot.symmetry_defect,
        closure=closure,
        identity_on_beta=identity_on_beta,
        euler_on_beta=euler_on_beta,
        identity_on_lame=identity_on_lame,
        euler_on_lame_sq=euler_on_lame_sq,
    )


@dataclass(frozen=True)
class OmegaSpectrum:
    omega: np.ndarray
    vmatrix: np.ndarray
    eigenvalues: np.ndarray
    r_squared: complex
    half_trace_vsq: complex


def omega_and_spectrum(rot: RotationData) -> OmegaSpectrum:
    """Antisymmetric V = (u_j - u_i) beta_ij and its spectral data (N = 3)."""
    frame = rot.frame
    if frame.size != 3:
        raise ValueError("omega components are defined for three canonical coordinates")
    u, beta = frame.u, rot.beta
    n = frame.size
    V = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            if i != j:
                V[i, j] = (u[j] - u[i]) * beta[i, j]
    omega = np.array([V[1, 2], V[2, 0], V[0, 1]])
    eigs = np.linalg.eigvals(V)
    eigs = np.array(sorted(eigs, key=lambda z: (-z.real, -z.imag)))
    r_squared = complex(-np.sum(omega ** 2))
    half_trace = complex(0.5 * np.trace(V @ V))
    return OmegaSpectrum(omega=omega, vmatrix=V, eigenvalues=eigs,
                         r_squared=r_squared, half_trace_vsq=half_trace)


@dataclass(frozen=True)
class TauGradientData:
    gradient_u: np.ndarray          # sum_i beta_ij^2 (u_i - u_j)
    identity_sum: float             # |sum_j grad_j|
    euler_sum: complex              # sum_j u_j grad_j
    euler_residual: float           # vs -sum omega^2
    closed_form_mismatch: float | None


def tau_gradient_check(rot: RotationData,
                       grad_logtau_x=None) -> TauGradientData:
    """u-space gradient of log tau from the rotation coefficients.

    Optionally compares against a closed-form flat-coordinate gradient
    mapped through the inverse chart Jacobian.
    """
    frame = rot.frame
    u, beta = frame.u, rot.beta
    n = frame.size
    grad = np.array([np.sum(beta[:, j] ** 2 * (u - u[j])) for j in range(n)])
    identity_sum = float(abs(np.sum(grad)))
    euler_sum = complex(np.dot(u, grad))
    spec = omega_and_spectrum(rot) if n == 3 else None
    euler_residual = float(abs(euler_sum - spec.r_squared)) if spec else float("nan")
    mismatch = None
    if grad_logtau_x is not None:
        gx = np.asarray(grad_logtau_x(frame.point), dtype=complex)
        inv = np.linalg.inv(frame.jac)
        grad_closed = inv.T @ gx   # d/du_j = sum_a (dx_a/du_j) d/dx_a
        mismatch = float(np.max(np.abs(grad - grad_closed)))
    return TauGradientData(gradient_u=grad, identity_sum=identity_sum,
                           euler_sum=euler_sum, euler_residual=euler_residual,
                           closed_form_mismatch=mismatch)
