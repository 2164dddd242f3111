"""Complex polynomial utilities used by the residue and frame machinery.

Roots are returned in a deterministic order (descending real part,
ties broken by descending imaginary part) so that downstream labels
are reproducible run to run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DegenerateConfigurationError, RootFindingError

COALESCENCE_REL_TOL = 1e-8
_DK_MAX_ITER = 600
_DK_STEP_TOL = 1e-14


@dataclass(frozen=True)
class PolynomialC:
    """Dense complex polynomial, coefficients lowest degree first."""

    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", np.atleast_1d(np.asarray(self.coeffs, dtype=complex)))

    @staticmethod
    def from_coeffs(values) -> "PolynomialC":
        arr = np.atleast_1d(np.asarray(values, dtype=complex))
        # trim trailing (highest-degree) zeros so the leading coefficient is nonzero
        last = len(arr) - 1
        while last > 0 and arr[last] == 0:
            last -= 1
        return PolynomialC(arr[: last + 1].copy())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        if np.isscalar(z) or isinstance(z, complex):
            return kernels.poly_eval(self.coeffs, complex(z))
        return kernels.poly_eval_many(self.coeffs, np.asarray(z, dtype=complex))

    def derivative(self) -> "PolynomialC":
        if self.degree == 0:
            return PolynomialC(np.zeros(1, dtype=complex))
        ks = np.arange(1, len(self.coeffs))
        return PolynomialC(self.coeffs[1:] * ks)

    def monic(self) -> "PolynomialC":
        return PolynomialC(self.coeffs / self.coeffs[-1])


def from_roots(roots) -> PolynomialC:
    coeffs = np.array([1.0 + 0j])
    for r in roots:
        coeffs = np.convolve(coeffs, np.array([-complex(r), 1.0 + 0j]))
    return PolynomialC(coeffs)


def order_roots(roots) -> np.ndarray:
    """Descending real part, ties by descending imaginary part.

    Keys are snapped to the coalescence tolerance so that round-off in
    a solver cannot flip the order of an exact tie.
    """
    arr = np.asarray(roots, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(arr)))) if arr.size else 1.0
    snap = COALESCENCE_REL_TOL * scale

    def key(z):
        return (-round(z.real / snap), -round(z.imag / snap))

    return np.array(sorted(arr, key=key), dtype=complex)


def roots_all(p: PolynomialC, tol: float = 1e-10) -> np.ndarray:
    """All roots of `p`, deterministically ordered.

    Degrees 1-3 use closed forms (the cubic gets one Newton polish);
    higher degrees run the simultaneous Durand-Kerner iteration.  Every
    returned root satisfies |p(root)| <= tol * (1 + max |coeff|).
    """
    if p.degree < 1:
        raise RootFindingError("constant polynomial has no roots")
    mon = p.monic().coeffs
    if p.degree == 1:
        roots = np.array([-mon[0]])
    elif p.degree == 2:
        roots = np.array(kernels.solve_quadratic(mon[0], mon[1]))
    elif p.degree == 3:
        roots = np.array(kernels.solve_cubic(mon[0], mon[1], mon[2]))
    else:
        roots, _used = kernels.durand_kerner(mon, _DK_MAX_ITER, _DK_STEP_TOL)
    scale = 1.0 + float(np.max(np.abs(p.coeffs)))
    residuals = np.abs(p(roots))
    worst = float(np.max(residuals))
    if worst > tol * scale:
        raise RootFindingError(
            f"root residual {worst:.3e} exceeds {tol * scale:.3e}",
            best_residual=worst,
        )
    return order_roots(roots)


def residue_at_simple_zero(numerator_value: complex,
                           second_derivative_value: complex,
                           tol: float = 1e-12) -> complex:
    """Residue of N(z)/W'(z) at a simple zero of W': N(a)/W''(a)."""
    if abs(second_derivative_value) <= tol:
        raise DegenerateConfigurationError(
            "second derivative vanishes at the critical point (non-simple zero)"
        )
    return complex(numerator_value) / complex(second_derivative_value)


def check_separation(values, what: str = "roots") -> float:
    """Raise if any two entries are closer than COALESCENCE_REL_TOL * scale.

    Returns the minimal pairwise distance for reporting.
    """
    arr = np.asarray(values, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(arr))) if len(arr) else 1.0)
    min_dist = np.inf
    for i in range(len(arr)):
        for j in range(i + 1, len(arr)):
            d = abs(arr[i] - arr[j])
            if d < min_dist:
                min_dist = d
            if d < COALESCENCE_REL_TOL * scale:
                raise DegenerateConfigurationError(
                    f"{what} {i} and {j} coalesce: |delta| = {d:.3e} "
                    f"< {COALESCENCE_REL_TOL * scale:.3e}"
                )
    return float(min_dist)


def align_to(reference, values) -> tuple[np.ndarray, tuple[int, ...]]:
    """Permute `values` to minimize the total distance to `reference`.

    Exhaustive over permutations; intended for the small frames used
    here (N <= 6).  Returns (aligned, perm) with aligned[i] = values[perm[i]].
    """
    ref = np.asarray(reference, dtype=complex)
    vals = np.asarray(values, dtype=complex)
    if len(ref) != len(vals):
        raise ValueError("length mismatch in alignment")
    best_perm = None
    best_cost = np.inf
    for perm in itertools.permutations(range(len(vals))):
        cost = float(np.sum(np.abs(vals[list(perm)] - ref)))
        if cost < best_cost:
            best_cost = cost
            best_perm = perm
    return vals[list(best_perm)], best_perm
