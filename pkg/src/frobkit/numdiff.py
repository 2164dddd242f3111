"""Finite-difference helpers.

All derivatives here are central differences, optionally sharpened by
Richardson extrapolation in h^2.  The base steps are chosen large
enough that the h^2 ladder stays above the rounding floor; callers pass
a relative scale where appropriate.
"""

from __future__ import annotations

import numpy as np


def _richardson(table_rows):
    # table_rows[k] computed at step h / 2^k; error series in h^2
    rows = [np.asarray(r, dtype=complex) for r in table_rows]
    for j in range(1, len(rows)):
        factor = 4.0 ** j
        for i in range(len(rows) - 1, j - 1, -1):
            rows[i] = (factor * rows[i] - rows[i - 1]) / (factor - 1.0)
    return rows[-1]


def central_diff(f, x: complex, h: float, levels: int = 0):
    """d/dx f at x; `levels` Richardson refinements on top of the base step."""
    rows = []
    for k in range(levels + 1):
        hk = h / 2.0 ** k
        rows.append((np.asarray(f(x + hk)) - np.asarray(f(x - hk))) / (2.0 * hk))
    out = _richardson(rows)
    return out if out.shape else complex(out)


def derivs12(f, t: complex, h: float, levels: int = 2):
    """(f'(t), f''(t)) from shared central stencils with Richardson refinement."""
    f0 = np.asarray(f(t), dtype=complex)
    d1_rows, d2_rows = [], []
    for k in range(levels + 1):
        hk = h / 2.0 ** k
        fp = np.asarray(f(t + hk), dtype=complex)
        fm = np.asarray(f(t - hk), dtype=complex)
        d1_rows.append((fp - fm) / (2.0 * hk))
        d2_rows.append((fp - 2.0 * f0 + fm) / (hk * hk))
    d1 = _richardson(d1_rows)
    d2 = _richardson(d2_rows)
    if not d1.shape:
        return complex(d1), complex(d2)
    return d1, d2


def directional_diff(f, x, direction, h: float, levels: int = 1):
    """Derivative of f along `direction` at the point x (vector argument)."""
    x = np.asarray(x, dtype=complex)
    w = np.asarray(direction, dtype=complex)

    def g(t):
        return f(x + t * w)

    return central_diff(g, 0.0, h, levels=levels)


def third_partial(f, x, triple, h: float, levels: int = 1):
    """Mixed third partial d^3 f / dx_i dx_j dx_k by nested central stencils.

    The inner evaluations share one step size h per axis; Richardson is
    applied to the outermost composition.
    """
    x = np.asarray(x, dtype=complex)
    i, j, k = triple

    def stencil(hh: float) -> complex:
        acc = 0j
        for si in (1.0, -1.0):
            for sj in (1.0, -1.0):
                for sk in (1.0, -1.0):
                    pt = x.copy()
                    pt[i] += si * hh
                    pt[j] += sj * hh
                    pt[k] += sk * hh
                    acc += si * sj * sk * complex(f(pt))
        return acc / (8.0 * hh ** 3)

    rows = [stencil(h / 2.0 ** lvl) for lvl in range(levels + 1)]
    return complex(_richardson(rows))


def grid_derivative(values: np.ndarray, dt: float) -> np.ndarray:
    """Richardson-refined central differences on a uniform grid.

    Returns derivatives on the interior slice [2:-2].
    """
    d1 = (values[3:-1] - values[1:-3]) / (2.0 * dt)
    d2 = (values[4:] - values[:-4]) / (4.0 * dt)
    return (4.0 * d1 - d2) / 3.0


def third_partial_tensor(f, x, h: float, levels: int = 1) -> np.ndarray:
    """All third partials of a scalar function of n complex variables."""
    x = np.asarray(x, dtype=complex)
    n = len(x)
    out = np.zeros((n, n, n), dtype=complex)
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                val = third_partial(f, x, (i, j, k), h, levels=levels)
                for perm in {(i, j, k), (i, k, j), (j, i, k),
                             (j, k, i), (k, i, j), (k, j, i)}:
                    out[perm] = val
    return out
