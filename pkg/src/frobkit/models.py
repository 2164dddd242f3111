"""The two bundled three-coordinate potentials, in closed form.

Everything here is an independent cross-check for the generic residue
pipeline: parametrized critical points, Lame squares, rotation
coefficients, omega components, the tau function of the first model,
and the curve families feeding the top-system and Painleve checks.

Labeling note: the parametrized families carry their own index
conventions, which differ from the deterministic root order by a fixed
permutation (and the s built from reordered u picks up a Moebius map).
Set-valued comparisons align indices explicitly; curve checks search
labelings and record the winner.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

import numpy as np

from . import algebra, canonical, eulertop, painleve
from .errors import BranchError, DegenerateConfigurationError
from .frobenius import (FlatPoint, build_potential, expected_metric,
                        flat_metric, prepotential_tensor, structure_constants,
                        unit_slot, euler_structure_residual, wdvv_residual)
from .numdiff import grid_derivative
from .report import VerificationReport

MODEL_IDS = ("nm11", "nm02")


# ---------------------------------------------------------------- registry

@dataclass(frozen=True)
class ModelSpec:
    model_id: str
    n: int
    m: int
    eta: np.ndarray
    default_coords: tuple

    def make_point(self, coords) -> FlatPoint:
        c = np.asarray(coords, dtype=complex)
        if len(c) != self.n + self.m + 1:
            raise ValueError(f"{self.model_id} needs {self.n + self.m + 1} coordinates")
        return FlatPoint(x=c[self.n:], xt=-c[:self.n])

    def potential(self, coords):
        p = self.make_point(coords)
        return build_potential(self.n, self.m, p), p

    def prepotential(self, coords) -> complex:
        c = np.asarray(coords, dtype=complex)
        if self.model_id == "nm11":
            x1, x2, x3 = c
            return (x2 * x3 ** 3 / 6.0 + x1 ** 3 / 6.0 + x1 * x2 * x3
                    + 0.5 * x2 ** 2 * (np.log(x2) - 1.5))
        x1, x2, x3 = c
        return 0.5 * x3 ** 2 * x1 + 0.5 * x2 ** 2 * x3 + 0.5 * x1 ** 2 * np.log(x2)

    def structure_constants_closed(self, coords) -> np.ndarray:
        c = np.asarray(coords, dtype=complex)
        t = np.zeros((3, 3, 3), dtype=complex)

        def put(i, j, k, val):
            for idx in {(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)}:
                t[idx] = val

        if self.model_id == "nm11":
            x1, x2, x3 = c
            put(0, 0, 0, 1.0)
            put(0, 1, 2, 1.0)
            put(1, 1, 1, 1.0 / x2)
            put(1, 2, 2, x3)
            put(2, 2, 2, x2)
        else:
            x1, x2, x3 = c
            put(0, 2, 2, 1.0)
            put(1, 1, 2, 1.0)
            put(0, 0, 1, 1.0 / x2)
            put(0, 1, 1, -x1 / x2 ** 2)
            put(1, 1, 1, x1 ** 2 / x2 ** 3)
        return t

    def sample_coords(self, rng: np.random.Generator, count: int) -> list:
        pts = []
        for _ in range(count):
            if self.model_id == "nm11":
                pts.append((rng.uniform(-0.5, 0.5), rng.uniform(1.0, 2.5),
                            rng.uniform(0.7, 1.4)))
            else:
                pts.append((rng.uniform(0.6, 1.2), rng.uniform(0.9, 1.4),
                            rng.uniform(-0.5, 0.5)))
        return pts


_NM11 = ModelSpec(
    model_id="nm11", n=1, m=1,
    eta=np.array([[1.0, 0, 0], [0, 0, 1.0], [0, 1.0, 0]]),
    default_coords=(0.0, 2.0, 1.0),
)
_NM02 = ModelSpec(
    model_id="nm02", n=0, m=2,
    eta=np.array([[0, 0, 1.0], [0, 1.0, 0], [1.0, 0, 0]]),
    default_coords=(1.0, 1.0, 2.0),
)


def get_model(model_id: str) -> ModelSpec:
    if model_id == "nm11":
        return _NM11
    if model_id == "nm02":
        return _NM02
    raise KeyError(f"unknown model id: {model_id!r}")


# ------------------------------------------------------ first model (n=m=1)

_NM11_GUARDS = (0.0, 1.0, -1.0, 3.0, -3.0)


@dataclass(frozen=True)
class Nm11Data:
    omega_param: complex
    x3: complex
    q: complex
    x2: complex
    a: np.ndarray                # root ratios alpha_i / x3
    alphas: np.ndarray
    u: np.ndarray
    lame_sq: np.ndarray          # (a_i - 1)/(3 a_i - 1)
    s_from_u: complex            # (u2 - u1)/(u3 - u1) in the a-labeling
    s_printed: complex           # the omega-parametrized form
    omega_sq: np.ndarray         # omega-parametrized labeling
    omega_sq_rootorder: np.ndarray   # -lame_sq / 4, same labels as a
    y: complex                   # the algebraic solution value at this parameter
    u23: complex                 # u2 - u3
    log_tau: complex             # omega-form


def _nm11_guard(w: complex):
    for g in _NM11_GUARDS:
        if abs(w - g) < 1e-9:
            raise DegenerateConfigurationError(
                f"parameter {w} coincides with the excluded value {g}")
    if abs(w * w + 3.0) < 1e-9:
        raise DegenerateConfigurationError(
            f"parameter {w} satisfies w^2 = -3 (coalescing roots)")


def nm11_closed_forms(omega_param: complex, x3: complex = 1.0) -> Nm11Data:
    """All parametrized quantities of the first model at x1 = 0.

    The root ratios a_i solve a (a-1)^2 = q with
    q = 4 (w^2-1)^2 / (w^2+3)^3.
    """
    w = complex(omega_param)
    _nm11_guard(w)
    x3 = complex(x3)
    if abs(x3) < 1e-12:
        raise DegenerateConfigurationError("x3 must not vanish")
    w2 = w * w
    q = 4.0 * (w2 - 1.0) ** 2 / (w2 + 3.0) ** 3
    x2 = q * x3 ** 3
    a = np.array([4.0 / (w2 + 3.0),
                  (w + 1.0) ** 2 / (w2 + 3.0),
                  (w - 1.0) ** 2 / (w2 + 3.0)])
    alphas = a * x3
    u = alphas ** 2 / 2.0 + x2 / (alphas - x3)
    lame_sq = (a - 1.0) / (3.0 * a - 1.0)
    s_from_u = complex((u[1] - u[0]) / (u[2] - u[0]))
    s_printed = complex((w - 3.0) ** 3 * (w + 1.0) / ((w + 3.0) ** 3 * (w - 1.0)))
    omega_sq = np.array([
        -0.25 * (w2 - 1.0) / (w2 - 9.0),
        0.25 * (w + 1.0) / (w * (w - 3.0)),
        -0.25 * (w - 1.0) / (w * (w + 3.0)),
    ])
    y = complex((w - 3.0) ** 2 * (w + 1.0) / ((w + 3.0) * (w2 + 3.0)))
    u23 = complex(u[1] - u[2])
    log_tau = complex(
        0.25 * np.log(u23)
        + (np.log((w - 1.0) ** 6 * (w + 1.0) ** 6 * (w - 3.0) ** 2
                  * (w + 3.0) ** 2) - 16.0 * np.log(w)) / 24.0)
    return Nm11Data(omega_param=w, x3=x3, q=complex(q), x2=complex(x2), a=a,
                    alphas=alphas, u=u, lame_sq=lame_sq, s_from_u=s_from_u,
                    s_printed=s_printed, omega_sq=omega_sq,
                    omega_sq_rootorder=-lame_sq / 4.0, y=y, u23=u23,
                    log_tau=log_tau)


def nm11_omega_from_q(q: complex):
    """Invert q = 4 (w^2-1)^2 / (w^2+3)^3 deterministically.

    Gives the parameter branch with w^2 closest to the real axis
    (ties: larger real part); any branch labels the same root set.
    """
    q = complex(q)
    if abs(q) < 1e-12:
        raise DegenerateConfigurationError("q = 0 is a branch point")
    cubic = algebra.PolynomialC.from_coeffs(
        [27.0 * q - 4.0, 27.0 * q + 8.0, 9.0 * q - 4.0, q])
    roots = algebra.roots_all(cubic)
    w2 = min(roots, key=lambda z: (abs(z.imag), -z.real))
    w = complex(np.sqrt(complex(w2)))
    _nm11_guard(w)
    return w


def nm11_log_tau(x2, x3) -> complex:
    """Closed-form log tau in flat coordinates; principal branches."""
    x2 = complex(x2)
    x3 = complex(x3)
    if abs(x3) < 1e-12:
        raise DegenerateConfigurationError("x3 must not vanish")
    q = x2 / x3 ** 3
    if abs(q) < 1e-10 or abs(q - 4.0 / 27.0) < 1e-10:
        raise DegenerateConfigurationError(f"q = {q} is a branch point of log tau")
    return complex(0.25 * np.log(x3 ** 2)
                   + np.log(q ** 3 * (27.0 * q - 4.0)) / 24.0)


def nm11_log_tau_gradient(x2, x3) -> np.ndarray:
    """(d/dx1, d/dx2, d/dx3) of log tau; the x1 component vanishes."""
    x2 = complex(x2)
    x3 = complex(x3)
    q = x2 / x3 ** 3
    dq = (3.0 / q + 27.0 / (27.0 * q - 4.0)) / 24.0
    d2 = dq / x3 ** 3
    d3 = 0.5 / x3 + dq * (-3.0 * x2 / x3 ** 4)
    return np.array([0.0, d2, d3])


def nm11_beta_sq_closed(alphas, x3, lame_sq) -> np.ndarray:
    """Squared rotation coefficients from the product closed form.

    beta_ij^2 = -h_k^2 / ((alpha_i - alpha_j)^2 (4 x3 - 3 alpha_k)^2),
    (i, j, k) cyclic.
    """
    out = np.zeros((3, 3), dtype=complex)
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        val = -lame_sq[k] / ((alphas[i] - alphas[j]) ** 2
                             * (4.0 * x3 - 3.0 * alphas[k]) ** 2)
        out[i, j] = out[j, i] = val
    return out


def nm11_beta_sq_quotient(alphas, x3) -> np.ndarray:
    # same quantity through the explicit quotient form, as an
    # independent expression (no h_k input)
    a, b = alphas, x3
    out = np.zeros((3, 3), dtype=complex)
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        num = (a[k] - b) ** 2 * (3.0 * a[k] - b) ** 2
        den = ((3.0 * a[i] - b) ** 2 * (3.0 * a[j] - b) ** 2
               * (a[i] - b) * (3.0 * a[i] - b) * (a[j] - b) * (3.0 * a[j] - b))
        out[i, j] = out[j, i] = num / den
    return out


def nm11_top_curve():
    """t -> (s, omega) along the purely imaginary parameter w = i t.

    Principal square roots are smooth for 0 < t < sqrt(3); the returned
    labeling is the parametrized one, so a relabeling search is
    expected downstream.
    """
    def curve(t: float):
        data = nm11_closed_forms(1j * t)
        return data.s_printed, np.sqrt(data.omega_sq.astype(complex))
    return curve


def nm11_lame_flow_relations(t0: float = 0.85, t1: float = 1.15,
                         samples: int = 241) -> float:
    """Residual of the three coupled h^2(s) flow relations.

    s dh1^2/ds = s(s-1) dh2^2/ds = (1-s) dh3^2/ds = -i h1 h2 h3
    along the one-parameter family (E- and I-orbits fixed); the overall
    sign of the right side follows the square-root gauge, so both signs
    are tried and the smaller mismatch reported.
    """
    ts = np.linspace(t0, t1, samples)
    dt = float(ts[1] - ts[0])
    hsq = np.empty((samples, 3), dtype=complex)
    svals = np.empty(samples, dtype=complex)
    for k, t in enumerate(ts):
        data = nm11_closed_forms(1j * float(t))
        hsq[k] = data.lame_sq
        svals[k] = data.s_from_u
    dh = grid_derivative(hsq, dt)
    ds = grid_derivative(svals, dt)
    s_in = svals[2:-2]
    h_in = np.sqrt(hsq[2:-2].astype(complex))
    lhs1 = s_in * dh[:, 0] / ds
    lhs2 = s_in * (s_in - 1.0) * dh[:, 1] / ds
    lhs3 = (1.0 - s_in) * dh[:, 2] / ds
    rhs = -1j * h_in[:, 0] * h_in[:, 1] * h_in[:, 2]
    pair = max(float(np.max(np.abs(lhs1 - lhs2))),
               float(np.max(np.abs(lhs1 - lhs3))))
    closed = min(float(np.max(np.abs(lhs1 - rhs))),
                 float(np.max(np.abs(lhs1 + rhs))))
    return max(pair, closed)


# ----------------------------------------------------- second model (n=0,m=2)

@dataclass(frozen=True)
class Nm02Data:
    x1: complex
    x2: complex
    x3: complex
    r: complex
    f: np.ndarray
    g: np.ndarray
    u: np.ndarray
    lame_sq: np.ndarray
    lame_sq_tilde: np.ndarray
    omega_sq: np.ndarray
    omega_sq_tilde: np.ndarray
    sum_u_expected: complex


def nm02_closed_forms(x1, x2, x3) -> Nm02Data:
    """Parametrized data of the second model via f^3 - f x1 - x2^2 = 0."""
    x1 = complex(x1)
    x2 = complex(x2)
    x3 = complex(x3)
    if abs(x2) < 1e-12:
        raise DegenerateConfigurationError("x2 must not vanish (f = 0 root)")
    cubic = algebra.PolynomialC.from_coeffs([-x2 ** 2, -x1, 0.0, 1.0])
    f = algebra.roots_all(cubic)
    algebra.check_separation(f, "f-roots")
    denom = 3.0 * f ** 2 - x1
    u = x3 + 1.5 * f + x1 / (2.0 * f)
    lame_sq = f ** 3 / denom
    lame_sq_tilde = f ** 2 / denom
    sqrt_x1 = complex(np.sqrt(x1))
    if abs(sqrt_x1) < 1e-12:
        raise DegenerateConfigurationError("x1 = 0 degenerates the g-variables")
    r = x2 ** 2 / sqrt_x1 ** 3
    g = f / sqrt_x1
    for k in range(3):
        if abs(g[k] - 3.0 * r) < 1e-12 or abs(3.0 * g[k] ** 2 - 1.0) < 1e-12:
            raise DegenerateConfigurationError("degenerate g-root configuration")
    omega_sq = (r / 4.0) * (3.0 * g ** 2 - 4.0) \
        / ((g - 3.0 * r) * (3.0 * g ** 2 - 1.0) ** 5) \
        * (8.0 * g ** 4 - 4.0 * g ** 2 + r ** 2 / g ** 2) ** 2
    omega_sq_tilde = -lame_sq_tilde / 16.0
    return Nm02Data(x1=x1, x2=x2, x3=x3, r=complex(r), f=f, g=g, u=u,
                    lame_sq=lame_sq, lame_sq_tilde=lame_sq_tilde,
                    omega_sq=omega_sq, omega_sq_tilde=omega_sq_tilde,
                    sum_u_expected=complex(3.0 * x3 - x1 ** 2 / (2.0 * x2 ** 2)))


def nm02_beta_sq_closed(data: Nm02Data) -> np.ndarray:
    """Squared rotation coefficients for the x1-based Lame choice.

    beta_ij^2 = N_k^2 / (f_i f_j (3 f_k^2 - 4 x1) (f_i - f_j)^4
                         (3 f_k^2 - x1)^5),
    N_k = 8 x2^4 f_k^2 - 4 x1 x2^4 + f_i^4 f_j^4, (i, j, k) cyclic.
    """
    f, x1, x2 = data.f, data.x1, data.x2
    out = np.zeros((3, 3), dtype=complex)
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        nk = 8.0 * x2 ** 4 * f[k] ** 2 - 4.0 * x1 * x2 ** 4 + f[i] ** 4 * f[j] ** 4
        val = nk ** 2 / (f[i] * f[j] * (3.0 * f[k] ** 2 - 4.0 * x1)
                         * (f[i] - f[j]) ** 4 * (3.0 * f[k] ** 2 - x1) ** 5)
        out[i, j] = out[j, i] = val
    return out


def nm02_beta_sq_tilde_closed(data: Nm02Data) -> np.ndarray:
    """Squares of the x3-based rotation coefficients.

    beta~_ij = (x2^2/2) (3 f_k^2 - x1)
               / ((3 f_i^2 - x1)^{3/2} (3 f_j^2 - x1)^{3/2}).
    """
    f, x1, x2 = data.f, data.x1, data.x2
    d = 3.0 * f ** 2 - x1
    out = np.zeros((3, 3), dtype=complex)
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        val = (x2 ** 4 / 4.0) * d[k] ** 2 / (d[i] ** 3 * d[j] ** 3)
        out[i, j] = out[j, i] = val
    return out


def nm02_top_curve(x1: complex = 1.0, x3: complex = 0.0):
    """r -> (s, omega) with s assembled directly from the u labels."""
    def curve(r: float):
        x2 = complex(np.sqrt(complex(r) * complex(x1) ** 1.5))
        data = nm02_closed_forms(x1, x2, x3)
        s = (data.u[1] - data.u[0]) / (data.u[2] - data.u[0])
        return complex(s), np.sqrt(data.omega_sq.astype(complex))
    return curve


def nm02_tilde_top_curve(x1: complex = 1.0, x3: complex = 0.0):
    def curve(r: float):
        x2 = complex(np.sqrt(complex(r) * complex(x1) ** 1.5))
        data = nm02_closed_forms(x1, x2, x3)
        s = (data.u[1] - data.u[0]) / (data.u[2] - data.u[0])
        return complex(s), np.sqrt(data.omega_sq_tilde.astype(complex))
    return curve


# --------------------------------------------------------------- suite

def _rep(name: str, residual: float, tol: float, **detail) -> VerificationReport:
    return VerificationReport(name=name, residual=float(residual),
                              tolerance=tol, detail=detail)


def _spectrum_residual(eigs) -> float:
    expected = np.array([0.5, 0.0, -0.5])
    aligned, _ = algebra.align_to(expected, eigs)
    return float(np.max(np.abs(aligned - expected)))


def mu_spectrum(degrees, d_f: float):
    """Conformal weights mu_a = 1 - d_a + (d_F - 3)/2 and half their square sum."""
    mu = 1.0 - np.asarray(degrees, dtype=float) + (d_f - 3.0) / 2.0
    return mu, float(0.5 * np.sum(mu ** 2))


def prepotential_checks(model_id: str, coords) -> list[VerificationReport]:
    """Central-difference third derivatives of F against the closed tensor,
    and quasi-homogeneity of that tensor under the scaling field.

    Both bundled prepotentials carry an x2^a log x2 term, so the point
    must sit on the positive branch of the logarithm.
    """
    model = get_model(model_id)
    coords = np.asarray(coords, dtype=complex)
    x2 = complex(coords[1])
    if x2.imag == 0.0 and x2.real <= 0.0:
        raise BranchError(f"prepotential logarithm needs x2 > 0, got {x2.real}")
    W, p = model.potential(coords)
    fd_tensor = prepotential_tensor(model.prepotential, coords)
    c_closed = model.structure_constants_closed(coords)
    return [
        _rep("prepotential-third-derivatives",
             np.max(np.abs(fd_tensor - c_closed)), 1e-6),
        _rep("quasi-homogeneity", euler_structure_residual(W, p), 1e-7),
    ]


def nm02_omega_checks(data: Nm02Data, curves: bool = True,
                      perm_search: bool = True) -> list[VerificationReport]:
    """Casimir sum rules of both omega normalizations at one data point,
    plus (optionally) the top-system residuals of the parametric curves."""
    reports = [
        _rep("omega-sum-rule", abs(np.sum(data.omega_sq) + 0.25), 1e-9),
        _rep("tilde-omega-sum-rule",
             abs(np.sum(data.omega_sq_tilde) + 1.0 / 16.0), 1e-12),
    ]
    if not curves:
        return reports
    match = eulertop.parametric_residual(nm02_top_curve(), 0.8, 1.2,
                                         samples=801, perm_search=perm_search)
    reports.append(_rep("top-curve-residual", match.residual, 1e-6,
                        convention=f"perm={match.perm} signs={match.signs}"))
    match_t = eulertop.parametric_residual(nm02_tilde_top_curve(), 0.8, 1.2,
                                           samples=801, perm_search=perm_search)
    reports.append(_rep("tilde-top-curve-residual", match_t.residual, 1e-6,
                        convention=f"perm={match_t.perm} signs={match_t.signs}"))
    return reports


def verification_suite(model_id: str, coords=None,
                       perm_search: bool = True, curves: bool = True) -> list:
    """Every identity check for one model at one coordinate point.

    Curve-family checks (top system, Painleve, tau sweeps) run on their
    canonical parameter windows and do not depend on `coords`; pass
    curves=False to skip them when scanning many points.
    """
    model = get_model(model_id)
    coords = model.default_coords if coords is None else tuple(coords)
    W, p = model.potential(coords)
    reports: list[VerificationReport] = []

    eta = flat_metric(W, p)
    reports.append(_rep("flat-metric-closed-form",
                        np.max(np.abs(eta - model.eta)), 1e-9,
                        model=model_id, point=list(coords)))
    c = structure_constants(W, p)
    c_closed = model.structure_constants_closed(coords)
    reports.append(_rep("structure-constants-closed-form",
                        np.max(np.abs(c - c_closed)), 1e-8))
    slot = unit_slot(model.n, model.m)
    reports.append(_rep("unit-row-matches-metric",
                        np.max(np.abs(c[:, :, slot] - eta)), 1e-9,
                        unit_slot=slot))
    eta_inv = np.linalg.inv(eta)
    reports.append(_rep("wdvv-associativity", wdvv_residual(c, eta_inv), 1e-8))
    reports.extend(prepotential_checks(model_id, coords))

    de = canonical.darboux_egoroff_residuals(W, p)
    reports.append(_rep("rotation-symmetry", de.symmetry, 1e-6))
    reports.append(_rep("darboux-egoroff-closure", de.closure, 1e-5))
    reports.append(_rep("identity-kills-beta", de.identity_on_beta, 1e-5))
    reports.append(_rep("euler-scales-beta", de.euler_on_beta, 1e-5))
    reports.append(_rep("identity-kills-lame", de.identity_on_lame, 1e-6))
    reports.append(_rep("lame-sq-homogeneity", de.euler_on_lame_sq, 1e-5,
                        weight=p.degrees[0] - 1.0))

    rot = canonical.rotation_coefficients(W, p)
    spec = canonical.omega_and_spectrum(rot)
    reports.append(_rep("casimir-sum", abs(spec.r_squared - 0.25), 1e-9))
    reports.append(_rep("v-spectrum", _spectrum_residual(spec.eigenvalues), 1e-8))

    tau = canonical.tau_gradient_check(
        rot, grad_logtau_x=(lambda pt: nm11_log_tau_gradient(pt.coords[1], pt.coords[2]))
        if model_id == "nm11" else None)
    reports.append(_rep("tau-identity-sum", tau.identity_sum, 1e-10))
    reports.append(_rep("tau-euler-sum", abs(tau.euler_sum - 0.25), 1e-6))
    if tau.closed_form_mismatch is not None:
        reports.append(_rep("tau-gradient-closed-form",
                            tau.closed_form_mismatch, 1e-6))

    frame = rot.frame
    if model_id == "nm11":
        reports.extend(_nm11_specific(coords, frame, rot, spec,
                                      perm_search, curves))
    else:
        reports.extend(_nm02_specific(coords, W, p, frame, rot, spec,
                                      perm_search, curves))
    return reports


def generic_suite(n: int, m: int, coords, perm_search: bool = True) -> list:
    """Pipeline-only identity checks for an arbitrary (n, m) potential."""
    coords = np.asarray(coords, dtype=complex)
    if len(coords) != n + m + 1:
        raise ValueError(f"(n={n}, m={m}) needs {n + m + 1} coordinates")
    p = FlatPoint(x=coords[n:], xt=-coords[:n])
    W = build_potential(n, m, p)
    reports = []
    eta = flat_metric(W, p)
    eta_expected = expected_metric(n, m)
    reports.append(_rep("flat-metric-block-pattern",
                        np.max(np.abs(eta - eta_expected)), 1e-9))
    c = structure_constants(W, p)
    slot = unit_slot(n, m)
    reports.append(_rep("unit-row-matches-metric",
                        np.max(np.abs(c[:, :, slot] - eta)), 1e-9,
                        unit_slot=slot))
    reports.append(_rep("wdvv-associativity",
                        wdvv_residual(c, np.linalg.inv(eta_expected)), 1e-8))
    reports.append(_rep("quasi-homogeneity",
                        euler_structure_residual(W, p), 1e-7))
    de = canonical.darboux_egoroff_residuals(W, p)
    reports.append(_rep("rotation-symmetry", de.symmetry, 1e-6))
    reports.append(_rep("darboux-egoroff-closure", de.closure, 1e-5))
    reports.append(_rep("identity-kills-beta", de.identity_on_beta, 1e-5))
    reports.append(_rep("euler-scales-beta", de.euler_on_beta, 1e-5))
    reports.append(_rep("identity-kills-lame", de.identity_on_lame, 1e-6))
    reports.append(_rep("lame-sq-homogeneity", de.euler_on_lame_sq, 1e-5,
                        weight=p.degrees[0] - 1.0))
    rot = canonical.rotation_coefficients(W, p)
    tau = canonical.tau_gradient_check(rot)
    mu, r_sq_mu = mu_spectrum(p.degrees, p.dF)
    reports.append(_rep("tau-identity-sum", tau.identity_sum, 1e-10))
    reports.append(_rep("tau-euler-vs-degrees",
                        abs(tau.euler_sum - r_sq_mu), 1e-6,
                        mu=[float(v) for v in mu]))
    if len(coords) == 3:
        spec = canonical.omega_and_spectrum(rot)
        reports.append(_rep("casimir-vs-degrees",
                            abs(spec.r_squared - r_sq_mu), 1e-8))
        r_val = complex(np.sqrt(complex(r_sq_mu)))
        expected = np.array([r_val, 0.0, -r_val])
        aligned, _ = algebra.align_to(expected, spec.eigenvalues)
        reports.append(_rep("v-spectrum",
                            np.max(np.abs(aligned - expected)), 1e-8))
    return reports


def _nm11_specific(coords, frame, rot, spec, perm_search, curves):
    reports = []
    x1, x2, x3 = (complex(v) for v in coords)

    # closed-form oracle at the matched parameter
    w = nm11_omega_from_q(x2 / x3 ** 3)
    data = nm11_closed_forms(w, x3=x3)
    aligned_alpha, perm = algebra.align_to(frame.alphas, data.alphas)
    idx = list(perm)
    res_alpha = np.max(np.abs(aligned_alpha - frame.alphas))
    res_u = np.max(np.abs(data.u[idx] + x1 - frame.u))    # family fixes x1 = 0
    res_h = np.max(np.abs(data.lame_sq[idx] - frame.lame_sq))
    reports.append(_rep("canonical-oracle-match",
                        max(res_alpha, res_u, res_h), 1e-8,
                        alignment=list(perm)))
    res_om = np.max(np.abs(data.omega_sq_rootorder[idx]
                           - spec.omega ** 2))
    reports.append(_rep("omega-closed-form-match", res_om, 1e-8))
    reports.append(_rep("omega-lame-proportionality",
                        np.max(np.abs(spec.omega ** 2 + 0.25 * frame.lame_sq)),
                        1e-9))

    beta_sq = rot.beta ** 2
    np.fill_diagonal(beta_sq, 0.0)
    closed1 = nm11_beta_sq_closed(frame.alphas, x3, frame.lame_sq)
    closed2 = nm11_beta_sq_quotient(frame.alphas, x3)
    reports.append(_rep("beta-sq-closed-form",
                        max(np.max(np.abs(beta_sq - closed1)),
                            np.max(np.abs(closed1 - closed2))), 1e-8))

    # tau function in flat coordinates
    reports.append(_rep("tau-value-reference",
                        abs(nm11_log_tau(2.0, 1.0) - np.log(400.0) / 24.0),
                        1e-12))
    qs = np.linspace(0.25, 2.95, 10)
    worst = 0.0
    for q in qs:
        hq = 1e-5
        fd = (nm11_log_tau(q, 1.0 + hq) - nm11_log_tau(q, 1.0 - hq)) / (2.0 * hq)
        worst = max(worst, abs(fd - 0.125 / (1.0 - 6.75 * q)))
    reports.append(_rep("tau-x3-derivative-vs-q-form", worst, 1e-8))
    h = 1e-5
    e_fd = (1.5 * x2 * (nm11_log_tau(x2 * (1 + h), x3) - nm11_log_tau(x2 * (1 - h), x3))
            / (2 * h * x2)
            + 0.5 * x3 * (nm11_log_tau(x2, x3 * (1 + h)) - nm11_log_tau(x2, x3 * (1 - h)))
            / (2 * h * x3))
    reports.append(_rep("tau-euler-action", abs(e_fd - 0.25), 1e-8))
    d1 = nm11_closed_forms(0.9j).log_tau - nm11_log_tau(nm11_closed_forms(0.9j).x2, 1.0)
    d2 = nm11_closed_forms(1.1j).log_tau - nm11_log_tau(nm11_closed_forms(1.1j).x2, 1.0)
    reports.append(_rep("tau-omega-form-constant-offset", abs(d1 - d2), 1e-9,
                        offset=[d1.real, d1.imag]))

    if not curves:
        return reports

    match = eulertop.parametric_residual(nm11_top_curve(), 0.8, 1.2,
                                         samples=801, perm_search=perm_search)
    reports.append(_rep("top-curve-residual", match.residual, 1e-6,
                        convention=f"perm={match.perm} signs={match.signs}"))
    reports.append(_rep("top-integration-endpoint",
                        _integration_endpoint_residual(nm11_top_curve(), match,
                                                       0.9, 1.1), 1e-6))
    reports.append(_rep("lame-flow-in-s", nm11_lame_flow_relations(), 1e-5))

    for kind, tol in (("k3", 1e-8), ("k6", 1e-8), ("omega", 1e-8)):
        sol = painleve.hitchin_solution(kind)
        rep = painleve.parametric_pvi_residual(sol, *sol.default_range, samples=50)
        reports.append(_rep(f"pvi-{kind}-residual", rep.max_residual, tol,
                            worst_t=rep.worst_t))

    reports.extend(_omtoy_reports())
    return reports


def _nm02_specific(coords, W, p, frame, rot, spec, perm_search, curves):
    reports = []
    x1, x2, x3 = (complex(v) for v in coords)
    data = nm02_closed_forms(x1, x2, x3)
    aligned_f, perm = algebra.align_to(frame.alphas - x3, data.f)
    idx = list(perm)
    res_f = np.max(np.abs(aligned_f - (frame.alphas - x3)))
    res_u = np.max(np.abs(data.u[idx] - frame.u))
    res_h = np.max(np.abs(data.lame_sq[idx] - frame.lame_sq))
    reports.append(_rep("canonical-oracle-match",
                        max(res_f, res_u, res_h), 1e-8, alignment=list(perm)))
    reports.append(_rep("sum-u-rule",
                        abs(np.sum(frame.u) - data.sum_u_expected), 1e-10))
    reports.append(_rep("omega-closed-form-match",
                        np.max(np.abs(data.omega_sq[idx] - spec.omega ** 2)),
                        1e-8))

    data_r = replace(data, f=data.f[idx], g=data.g[idx], u=data.u[idx],
                     lame_sq=data.lame_sq[idx],
                     lame_sq_tilde=data.lame_sq_tilde[idx],
                     omega_sq=data.omega_sq[idx],
                     omega_sq_tilde=data.omega_sq_tilde[idx])
    beta_sq = rot.beta ** 2
    np.fill_diagonal(beta_sq, 0.0)
    reports.append(_rep("beta-sq-closed-form",
                        np.max(np.abs(beta_sq - nm02_beta_sq_closed(data_r))),
                        1e-8))

    reports.append(_rep("tilde-lame-sum",
                        abs(np.sum(data.lame_sq_tilde) - 1.0), 1e-10))
    rot_t = canonical.rotation_coefficients(W, p, coordinate=2)
    spec_t = canonical.omega_and_spectrum(rot_t)
    beta_sq_t = rot_t.beta ** 2
    np.fill_diagonal(beta_sq_t, 0.0)
    reports.append(_rep("tilde-beta-sq-closed-form",
                        np.max(np.abs(beta_sq_t
                                      - nm02_beta_sq_tilde_closed(data_r))),
                        1e-5))
    reports.append(_rep("tilde-casimir-sum",
                        abs(np.sum(spec_t.omega ** 2) + 1.0 / 16.0), 1e-9))
    reports.append(_rep("tilde-omega-lame-proportionality",
                        np.max(np.abs(spec_t.omega ** 2
                                      + rot_t.frame.lame_sq / 16.0)), 1e-8))
    reports.extend(nm02_omega_checks(data, curves=curves,
                                     perm_search=perm_search))
    return reports


def _integration_endpoint_residual(curve, match, t0: float, t1: float) -> float:
    phi = eulertop.MOEBIUS_FOR_PERM[match.perm]
    signs = np.asarray(match.signs)

    def labeled(t):
        s, w3 = curve(t)
        return phi(s), signs * w3[list(match.perm)]

    s0, w0 = labeled(t0)
    s1, w1 = labeled(t1)
    result = eulertop.integrate_rk4(s0, w0, s1, steps=4096)
    return float(np.max(np.abs(result.w1 - w1)))


def _omtoy_reports(t0: float = 0.85, t1: float = 1.15,
                   samples: int = 241) -> list[VerificationReport]:
    """The (y, v) dictionary checks along the parametrized family."""
    ts = np.linspace(t0, t1, samples)
    svals = np.empty(samples, dtype=complex)
    yvals = np.empty(samples, dtype=complex)
    osq = np.empty((samples, 3), dtype=complex)
    for k, t in enumerate(ts):
        data = nm11_closed_forms(1j * float(t))
        svals[k] = data.s_printed
        yvals[k] = data.y
        osq[k] = data.omega_sq
    return painleve.omtoy_check(svals, yvals, osq)
