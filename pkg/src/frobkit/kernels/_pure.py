"""Pure-Python kernels.

Algorithmically identical to the compiled twin in ``_fast.pyx``; the
backend is chosen once at import time in ``kernels/__init__``.  Keep the
two files in lockstep: same update order, same stopping rules.
"""

import cmath

import numpy as np

_CUBE_ROOT_UNITY = complex(-0.5, 0.8660254037844386467637231707529362)


def poly_eval(coeffs, z):
    """Horner evaluation of a polynomial given lowest-degree-first coefficients."""
    acc = 0j
    for k in range(len(coeffs) - 1, -1, -1):
        acc = acc * z + coeffs[k]
    return acc


def poly_eval_many(coeffs, zs):
    out = np.empty(len(zs), dtype=complex)
    for i, z in enumerate(zs):
        out[i] = poly_eval(coeffs, complex(z))
    return out


def _newton_polish(coeffs, dcoeffs, z):
    # one corrector step; skipped at a critical point of the polynomial
    dp = poly_eval(dcoeffs, z)
    if dp == 0:
        return z
    return z - poly_eval(coeffs, z) / dp


def _derivative_coeffs(coeffs):
    return [k * coeffs[k] for k in range(1, len(coeffs))]


def solve_quadratic(c0, c1):
    """Roots of z^2 + c1 z + c0 (monic, complex)."""
    c0 = complex(c0)
    c1 = complex(c1)
    sq = cmath.sqrt(c1 * c1 - 4.0 * c0)
    # avoid cancellation: pick the sign that grows |c1 + sq|
    if (c1.real * sq.real + c1.imag * sq.imag) >= 0.0:
        big = -(c1 + sq) / 2.0
    else:
        big = -(c1 - sq) / 2.0
    if big == 0:
        r = cmath.sqrt(-c0)
        return (r, -r)
    return (big, c0 / big)


def solve_cubic(c0, c1, c2):
    """Roots of z^3 + c2 z^2 + c1 z + c0 via the depressed-cubic closed form.

    Each root gets one Newton polish step against the full cubic.
    """
    c0 = complex(c0)
    c1 = complex(c1)
    c2 = complex(c2)
    shift = c2 / 3.0
    p = c1 - c2 * c2 / 3.0
    q = 2.0 * c2 ** 3 / 27.0 - c2 * c1 / 3.0 + c0
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    sq = cmath.sqrt(disc)
    u3 = -q / 2.0 + sq
    alt = -q / 2.0 - sq
    if abs(alt) > abs(u3):
        u3 = alt
    if u3 == 0:
        roots = (-shift, -shift, -shift)
    else:
        u = u3 ** (1.0 / 3.0)
        roots = []
        for _ in range(3):
            roots.append(u - p / (3.0 * u) - shift)
            u = u * _CUBE_ROOT_UNITY
        roots = tuple(roots)
    coeffs = [c0, c1, c2, 1.0 + 0j]
    dcoeffs = _derivative_coeffs(coeffs)
    return tuple(_newton_polish(coeffs, dcoeffs, z) for z in roots)


def durand_kerner(coeffs, max_iter, tol):
    """Simultaneous root iteration for a monic polynomial (lowest-first coeffs).

    Returns (roots, iterations_used).  The caller is responsible for
    validating residuals; iterations_used == max_iter signals that the
    update-size stopping rule was never met.
    """
    deg = len(coeffs) - 1
    radius = 1.0
    for k in range(deg):
        a = abs(coeffs[k])
        if a > radius - 1.0:
            radius = 1.0 + a
    z = [radius * cmath.exp(1j * (2.0 * cmath.pi * k / deg + 0.35)) for k in range(deg)]
    used = max_iter
    for it in range(max_iter):
        max_step = 0.0
        max_abs = 1.0
        for i in range(deg):
            den = 1.0 + 0j
            zi = z[i]
            for j in range(deg):
                if j != i:
                    den *= zi - z[j]
            if den == 0:
                den = complex(tol, 0.0)
            step = poly_eval(coeffs, zi) / den
            z[i] = zi - step
            a = abs(step)
            if a > max_step:
                max_step = a
            a = abs(z[i])
            if a > max_abs:
                max_abs = a
        if max_step <= tol * max_abs:
            used = it + 1
            break
    dcoeffs = _derivative_coeffs(coeffs)
    z = [_newton_polish(coeffs, dcoeffs, zi) for zi in z]
    return np.asarray(z, dtype=complex), used


def rk4_top(s0, w, s1, steps):
    """Classical fixed-step RK4 for the three-component top system.

        dw1/ds = w2 w3 / s
        dw2/ds = w1 w3 / (s (s - 1))
        dw3/ds = w1 w2 / (1 - s)

    along the straight segment from s0 to s1.  Path admissibility
    (distance from the singular points 0 and 1) is the caller's job.
    """
    w1 = complex(w[0])
    w2 = complex(w[1])
    w3 = complex(w[2])
    s = complex(s0)
    h = (complex(s1) - s) / steps

    def f(sv, a, b, c):
        return (b * c / sv, a * c / (sv * (sv - 1.0)), a * b / (1.0 - sv))

    for _ in range(steps):
        k1 = f(s, w1, w2, w3)
        k2 = f(s + h / 2.0, w1 + h / 2.0 * k1[0], w2 + h / 2.0 * k1[1], w3 + h / 2.0 * k1[2])
        k3 = f(s + h / 2.0, w1 + h / 2.0 * k2[0], w2 + h / 2.0 * k2[1], w3 + h / 2.0 * k2[2])
        k4 = f(s + h, w1 + h * k3[0], w2 + h * k3[1], w3 + h * k3[2])
        w1 = w1 + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
        w2 = w2 + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
        w3 = w3 + h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2])
        s = s + h
    return np.asarray([w1, w2, w3], dtype=complex)
