"""Rational potentials with one finite pole and their flat structures.

A potential

    W(z) = z^(n+1)/(n+1) + sum_k a_k z^k + sum_j v_j / (j (z - pole)^j)

is assembled from flat coordinates in two sectors: n values feeding the
polynomial coefficients through a power-series reversion at infinity,
and m+1 values feeding the pole data (v_1..v_m and the pole position)
through weighted-homogeneous coefficient sums.  The flat metric and the
structure constants are residue sums over the critical points of W.

Coordinate ordering convention: (s_1..s_n, x_1..x_{m+1}) where
s_g = -(order-g series coefficient); with this ordering the metric is
the anti-diagonal pairing on each sector and the two shipped
three-dimensional models use their natural coordinate labels directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import algebra
from .errors import DegenerateConfigurationError, UnsupportedPotentialError
from .numdiff import directional_diff, third_partial_tensor

MAX_SERIES_DEPTH = 2  # reversion implemented and validated up to n = 2


def flat_degrees(n: int, m: int) -> np.ndarray:
    """Scaling weights of the flat coordinates under the Euler field.

    s-sector: (1+g)/(n+1) for g = 1..n; x-sector: 1/(n+1) + (m+1-a)/m
    for a = 1..m+1.  Canonical coordinates then carry weight 1.
    """
    s_part = [(1.0 + g) / (n + 1.0) for g in range(1, n + 1)]
    x_part = [1.0 / (n + 1.0) + (m + 1.0 - a) / m for a in range(1, m + 2)]
    return np.array(s_part + x_part, dtype=float)


def prepotential_degree(n: int, m: int) -> float:
    return 2.0 + 2.0 / (n + 1.0)


def unit_slot(n: int, m: int) -> int:
    """Index of the coordinate whose tangent field is the unit.

    For n >= 1 the constant term of the polynomial part shifts W by a
    constant, so the unit sits at s_n.  For n = 0 no such coefficient
    exists and the pole coordinate is the unit modulo W'.
    """
    return n - 1 if n >= 1 else m


@dataclass(frozen=True)
class FlatPoint:
    """A point in flat coordinates for the (n, m) potential family."""

    x: np.ndarray          # m+1 values: v-sector coefficients and the pole
    xt: np.ndarray         # n values: series coefficients at infinity
    degrees: np.ndarray = None  # scaling weights, model ordering
    dF: float = None

    def __post_init__(self):
        object.__setattr__(self, "x", np.asarray(self.x, dtype=complex))
        object.__setattr__(self, "xt", np.asarray(self.xt, dtype=complex))
        n, m = len(self.xt), len(self.x) - 1
        if self.degrees is None:
            object.__setattr__(self, "degrees", flat_degrees(n, m))
        else:
            object.__setattr__(self, "degrees", np.asarray(self.degrees, dtype=float))
        if self.dF is None:
            object.__setattr__(self, "dF", prepotential_degree(n, m))

    @property
    def n(self) -> int:
        return len(self.xt)

    @property
    def m(self) -> int:
        return len(self.x) - 1

    @property
    def coords(self) -> np.ndarray:
        return np.concatenate([-self.xt, self.x])

    def with_coords(self, coords) -> "FlatPoint":
        coords = np.asarray(coords, dtype=complex)
        n = self.n
        return FlatPoint(x=coords[n:], xt=-coords[:n],
                         degrees=self.degrees, dF=self.dF)


@dataclass(frozen=True)
class RationalPotential:
    n: int
    m: int
    a: np.ndarray      # polynomial coefficients a_0..a_{n-1}
    v: np.ndarray      # pole coefficients v_1..v_m
    pole: complex

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        val = z ** (self.n + 1) / (self.n + 1)
        for k in range(self.n):
            val += self.a[k] * z ** k
        d = z - self.pole
        for j in range(1, self.m + 1):
            val += self.v[j - 1] / (j * d ** j)
        return val

    def dz(self, z: complex) -> complex:
        z = complex(z)
        val = z ** self.n
        for k in range(1, self.n):
            val += k * self.a[k] * z ** (k - 1)
        d = z - self.pole
        for j in range(1, self.m + 1):
            val -= self.v[j - 1] / d ** (j + 1)
        return val

    def dzz(self, z: complex) -> complex:
        z = complex(z)
        val = self.n * z ** (self.n - 1) if self.n >= 1 else 0.0
        for k in range(2, self.n):
            val += k * (k - 1) * self.a[k] * z ** (k - 2)
        d = z - self.pole
        for j in range(1, self.m + 1):
            val += (j + 1) * self.v[j - 1] / d ** (j + 2)
        return val

    def crit_numerator(self) -> algebra.PolynomialC:
        """Monic numerator of W' over (z - pole)^(m+1); degree n + m + 1."""
        q = np.zeros(self.n + 1, dtype=complex)
        q[self.n] = 1.0
        for k in range(1, self.n):
            q[k - 1] += k * self.a[k]
        shifted = np.array([-self.pole, 1.0], dtype=complex)  # (z - pole)
        power = np.array([1.0 + 0j])
        powers = [power]
        for _ in range(self.m + 1):
            power = np.convolve(power, shifted)
            powers.append(power)
        num = np.convolve(q, powers[self.m + 1])
        for j in range(1, self.m + 1):
            tail = self.v[j - 1] * powers[self.m - j]
            num[: len(tail)] -= tail
        return algebra.PolynomialC.from_coeffs(num)


@dataclass(frozen=True)
class RationalTangent:
    """Coefficient-space derivative of a RationalPotential along one flat coordinate."""

    da: np.ndarray
    dv: np.ndarray
    dpole: float
    v_ref: np.ndarray = field(repr=False)
    pole: complex = field(repr=False)

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        val = 0j
        for k in range(len(self.da)):
            if self.da[k] != 0:
                val += self.da[k] * z ** k
        d = z - self.pole
        for j in range(1, len(self.dv) + 1):
            if self.dv[j - 1] != 0:
                val += self.dv[j - 1] / (j * d ** j)
        if self.dpole:
            for j in range(1, len(self.v_ref) + 1):
                val += self.dpole * self.v_ref[j - 1] / d ** (j + 1)
        return val


def _u_series(x: np.ndarray, m: int) -> np.ndarray:
    # u(w) = x_m w + x_{m-1} w^2 + ... + x_1 w^m, lowest-first in w
    u = np.zeros(m + 1, dtype=complex)
    for beta in range(1, m + 1):
        u[beta] = x[m - beta]
    return u


def _series_coefficient(u: np.ndarray, power: int, order: int) -> complex:
    acc = np.zeros(order + 1, dtype=complex)
    acc[0] = 1.0
    for _ in range(power):
        acc = np.convolve(acc, u)[: order + 1]
    return acc[order] if order < len(acc) else 0.0


def _pole_coefficients(x: np.ndarray, m: int) -> np.ndarray:
    u = _u_series(x, m)
    return np.array([_series_coefficient(u, k, m) for k in range(1, m + 1)],
                    dtype=complex)


def _pole_coefficient_jacobian(x: np.ndarray, m: int) -> np.ndarray:
    """d v_k / d x_a = k * [w^(a-1)] u^(k-1); exact, no differencing."""
    u = _u_series(x, m)
    jac = np.zeros((m, m), dtype=complex)
    for k in range(1, m + 1):
        for a in range(1, m + 1):
            jac[k - 1, a - 1] = k * _series_coefficient(u, k - 1, a - 1)
    return jac


def _polynomial_part_coefficients(n: int, xt: np.ndarray) -> np.ndarray:
    """Coefficients a_0..a_{n-1} by reversion of z = w + sum_g xt_g w^(-g).

    Solved as a truncated series in 1/z, then the non-negative powers of
    w(z)^(n+1)/(n+1) are read off.  Exact (linear in xt) for n <= 2,
    which is the guarded range.
    """
    if n == 0:
        return np.zeros(0, dtype=complex)
    if n > MAX_SERIES_DEPTH:
        raise UnsupportedPotentialError(
            f"series reversion depth n = {n} exceeds supported {MAX_SERIES_DEPTH}"
        )
    order = n + 2
    b = np.zeros(order + 1, dtype=complex)  # w = z + sum_j b[j] z^-j, b[0] unused

    def trunc_mul(p, q):
        return np.convolve(p, q)[: order + 1]

    for _ in range(n + 1):
        # A(t) with w = (1/t) * A(t), t = 1/z
        A = np.zeros(order + 1, dtype=complex)
        A[0] = 1.0
        for j in range(1, order):
            A[j + 1] = b[j]
        # Ainv = 1/A by series division
        Ainv = np.zeros(order + 1, dtype=complex)
        Ainv[0] = 1.0
        for k in range(1, order + 1):
            Ainv[k] = -np.dot(A[1 : k + 1], Ainv[k - 1 :: -1][: k])
        s_tail = np.zeros(order + 1, dtype=complex)
        ainv_pow = np.zeros(order + 1, dtype=complex)
        ainv_pow[0] = 1.0
        for g in range(1, n + 1):
            ainv_pow = trunc_mul(ainv_pow, Ainv)
            # xt_g * w^-g = xt_g * t^g * Ainv^g
            contrib = np.zeros(order + 1, dtype=complex)
            contrib[g:] = xt[g - 1] * ainv_pow[: order + 1 - g]
            s_tail += contrib
        new_b = np.zeros(order + 1, dtype=complex)
        new_b[1:] = -s_tail[1:]
        if np.allclose(new_b, b, rtol=0, atol=1e-300):
            b = new_b
            break
        b = new_b
    # polynomial part of w^(n+1)/(n+1)
    A = np.zeros(order + 1, dtype=complex)
    A[0] = 1.0
    for j in range(1, order):
        A[j + 1] = b[j]
    Apow = np.zeros(order + 1, dtype=complex)
    Apow[0] = 1.0
    for _ in range(n + 1):
        Apow = trunc_mul(Apow, A)
    # z^(n+1-q) coefficient is Apow[q]/(n+1); q = 1 slot must vanish
    assert abs(Apow[1]) < 1e-13
    a = np.zeros(n, dtype=complex)
    for k in range(n):
        a[k] = Apow[n + 1 - k] / (n + 1.0)
    return a


def build_potential(n: int, m: int, p: FlatPoint) -> RationalPotential:
    """Assemble the rational potential at a flat point.

    Requires m >= 1 and x_m != 0 (otherwise the stated pole order is
    not attained) and n <= 2 for the series sector.
    """
    if m < 1:
        raise UnsupportedPotentialError("need at least one pole coefficient (m >= 1)")
    if p.n != n or p.m != m:
        raise ValueError("flat point shape does not match (n, m)")
    if abs(p.x[m - 1]) < 1e-12:
        raise DegenerateConfigurationError(
            "x_m ~ 0: pole order drops below m + 1"
        )
    v = _pole_coefficients(p.x, m)
    a = _polynomial_part_coefficients(n, p.xt)
    return RationalPotential(n=n, m=m, a=a, v=v, pole=complex(p.x[m]))


def tangent_fields(W: RationalPotential, p: FlatPoint) -> list[RationalTangent]:
    """Exact coefficient-space derivatives of W along each flat coordinate.

    The v-sector Jacobian is a polynomial coefficient extraction, the
    series sector is linear for the supported depth, and the pole
    coordinate differentiates the pole position.  Evaluating these at
    the critical points gives du_i/dx_a without a differencing floor.
    """
    n, m = W.n, W.m
    fields = []
    for g in range(1, n + 1):
        da = np.zeros(n, dtype=complex)
        da[n - g] = 1.0  # a_{n-g} = s_g for the supported depth
        fields.append(RationalTangent(da=da, dv=np.zeros(m, dtype=complex),
                                      dpole=0.0, v_ref=W.v, pole=W.pole))
    vjac = _pole_coefficient_jacobian(p.x, m)
    for a_idx in range(m):
        fields.append(RationalTangent(da=np.zeros(n, dtype=complex),
                                      dv=vjac[:, a_idx].copy(),
                                      dpole=0.0, v_ref=W.v, pole=W.pole))
    fields.append(RationalTangent(da=np.zeros(n, dtype=complex),
                                  dv=np.zeros(m, dtype=complex),
                                  dpole=1.0, v_ref=W.v, pole=W.pole))
    return fields


def critical_data(W: RationalPotential, tol: float = 1e-10):
    """(critical points, residue weights 1/W'') with separation guards.

    The weights come from the root product: for the monic numerator P,
    W''(a_i) = P'(a_i) / (a_i - pole)^(m+1), so 1/W'' is the Lame-square
    expression (a_i - pole)^(m+1) / prod_{j != i} (a_i - a_j).
    """
    P = W.crit_numerator()
    alphas = algebra.roots_all(P, tol=tol)
    algebra.check_separation(alphas, what="critical points")
    scale = max(1.0, float(np.max(np.abs(alphas))), abs(W.pole))
    for i, al in enumerate(alphas):
        if abs(al - W.pole) < algebra.COALESCENCE_REL_TOL * scale:
            raise DegenerateConfigurationError(
                f"critical point {i} collides with the pole"
            )
    weights = np.empty(len(alphas), dtype=complex)
    for i, al in enumerate(alphas):
        prod = 1.0 + 0j
        for j, bj in enumerate(alphas):
            if j != i:
                prod *= al - bj
        weights[i] = (al - W.pole) ** (W.m + 1) / prod
    return alphas, weights


def expected_metric(n: int, m: int) -> np.ndarray:
    """The constant metric in these coordinates: two antidiagonal blocks.

    The polynomial-tail sector pairs as delta_{g+d = n+1}, the pole
    sector as delta_{a+b = m+2}, and the cross blocks vanish.
    """
    size = n + m + 1
    eta = np.zeros((size, size))
    for g in range(n):
        eta[g, n - 1 - g] = 1.0
    for a in range(m + 1):
        eta[n + a, n + m - a] = 1.0
    return eta


def flat_metric(W: RationalPotential, p: FlatPoint) -> np.ndarray:
    """Residue pairing of the coordinate tangent fields over Ker W'."""
    alphas, weights = critical_data(W)
    T = tangent_fields(W, p)
    vals = np.array([[t(al) for al in alphas] for t in T])  # (N, roots)
    return np.einsum("ar,br,r->ab", vals, vals, weights)


def structure_constants(W: RationalPotential, p: FlatPoint) -> np.ndarray:
    """Triple residue pairing; fully symmetric rank-3 tensor."""
    alphas, weights = critical_data(W)
    T = tangent_fields(W, p)
    vals = np.array([[t(al) for al in alphas] for t in T])
    return np.einsum("ar,br,cr,r->abc", vals, vals, vals, weights)


def wdvv_residual(c: np.ndarray, eta_inv: np.ndarray) -> float:
    """Max violation of associativity: c.eta^-1.c symmetric in the outer pair."""
    q = np.einsum("abd,de,esr->absr", c, eta_inv, c)
    return float(np.max(np.abs(q - q.transpose(0, 2, 1, 3))))


def euler_structure_residual(W: RationalPotential, p: FlatPoint,
                             h: float = 1e-5) -> float:
    """Quasi-homogeneity of the prepotential through its third derivatives.

    E(F) - dF * F being quadratic is equivalent to
    E(c_abc) = (dF - d_a - d_b - d_c) c_abc for the third-derivative
    tensor c; this checks that relation with the residue-built tensor.
    """
    coords = p.coords
    d = p.degrees

    def tensor_at(cs):
        pt = p.with_coords(cs)
        return structure_constants(build_potential(W.n, W.m, pt), pt)

    direction = d * coords
    ec = directional_diff(tensor_at, coords, direction, h, levels=1)
    c = tensor_at(coords)
    n = len(coords)
    expected = np.empty_like(c)
    for a in range(n):
        for b in range(n):
            for g in range(n):
                expected[a, b, g] = (p.dF - d[a] - d[b] - d[g]) * c[a, b, g]
    return float(np.max(np.abs(ec - expected)))


def prepotential_tensor(F, coords, h: float = 5e-3) -> np.ndarray:
    """Third-derivative tensor of a scalar prepotential by central differences."""
    coords = np.asarray(coords, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(coords))))
    return third_partial_tensor(F, coords, h * scale, levels=1)
