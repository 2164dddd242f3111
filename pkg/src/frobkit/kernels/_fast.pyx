# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: complex Horner evaluation, closed-form quadratics and
cubics with a Newton polish, Durand-Kerner simultaneous iteration, and the
fixed-step RK4 loop for the three-component top system.

Mirror of ``_pure.py`` — keep update order and stopping rules identical.
"""

import numpy as np

cimport numpy as cnp

cdef extern from "complex.h":
    double cabs(double complex) nogil
    double complex csqrt(double complex) nogil
    double complex cpow(double complex, double complex) nogil
    double complex cexp(double complex) nogil

cdef double PI = 3.141592653589793238462643383279503
cdef double complex CUBE_ROOT_UNITY = -0.5 + 0.8660254037844386467637231707529362j


cdef double complex _horner(double complex[::1] coeffs, double complex z) nogil:
    cdef Py_ssize_t k
    cdef double complex acc = 0
    for k in range(coeffs.shape[0] - 1, -1, -1):
        acc = acc * z + coeffs[k]
    return acc


def poly_eval(coeffs, z):
    cdef double complex[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    return complex(_horner(c, z))


def poly_eval_many(coeffs, zs):
    cdef double complex[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef double complex[::1] z = np.ascontiguousarray(zs, dtype=np.complex128)
    out = np.empty(z.shape[0], dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef Py_ssize_t i
    for i in range(z.shape[0]):
        o[i] = _horner(c, z[i])
    return out


cdef double complex _polish(double complex[::1] coeffs, double complex[::1] dcoeffs,
                            double complex z) nogil:
    cdef double complex dp = _horner(dcoeffs, z)
    if dp == 0:
        return z
    return z - _horner(coeffs, z) / dp


def solve_quadratic(c0, c1):
    """Roots of z^2 + c1 z + c0 (monic, complex)."""
    cdef double complex a0 = c0
    cdef double complex a1 = c1
    cdef double complex sq = csqrt(a1 * a1 - 4.0 * a0)
    cdef double complex big
    if (a1.real * sq.real + a1.imag * sq.imag) >= 0.0:
        big = -(a1 + sq) / 2.0
    else:
        big = -(a1 - sq) / 2.0
    cdef double complex r
    if big == 0:
        r = csqrt(-a0)
        return (complex(r), complex(-r))
    return (complex(big), complex(a0 / big))


def solve_cubic(c0, c1, c2):
    """Roots of z^3 + c2 z^2 + c1 z + c0; Cardano plus one Newton polish."""
    cdef double complex a0 = c0, a1 = c1, a2 = c2
    cdef double complex shift = a2 / 3.0
    cdef double complex p = a1 - a2 * a2 / 3.0
    cdef double complex q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0
    cdef double complex sq = csqrt((q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0))
    cdef double complex u3 = -q / 2.0 + sq
    cdef double complex alt = -q / 2.0 - sq
    if cabs(alt) > cabs(u3):
        u3 = alt
    cdef double complex r0, r1, r2, u
    if u3 == 0:
        r0 = r1 = r2 = -shift
    else:
        u = cpow(u3, 1.0 / 3.0)
        r0 = u - p / (3.0 * u) - shift
        u = u * CUBE_ROOT_UNITY
        r1 = u - p / (3.0 * u) - shift
        u = u * CUBE_ROOT_UNITY
        r2 = u - p / (3.0 * u) - shift
    coeffs = np.array([a0, a1, a2, 1.0 + 0j], dtype=np.complex128)
    dcoeffs = np.array([a1, 2.0 * a2, 3.0 + 0j], dtype=np.complex128)
    cdef double complex[::1] c = coeffs
    cdef double complex[::1] dc = dcoeffs
    return (complex(_polish(c, dc, r0)),
            complex(_polish(c, dc, r1)),
            complex(_polish(c, dc, r2)))


def durand_kerner(coeffs, int max_iter, double tol):
    """Simultaneous root iteration for a monic polynomial (lowest-first).

    Returns (roots, iterations_used); residual validation is the caller's job.
    """
    cdef double complex[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef Py_ssize_t deg = c.shape[0] - 1
    cdef double radius = 1.0
    cdef Py_ssize_t i, j, k
    cdef double a
    for k in range(deg):
        a = cabs(c[k])
        if a > radius - 1.0:
            radius = 1.0 + a
    z_arr = np.empty(deg, dtype=np.complex128)
    cdef double complex[::1] z = z_arr
    for k in range(deg):
        z[k] = radius * cexp(1j * (2.0 * PI * k / deg + 0.35))
    cdef int it, used = max_iter
    cdef double max_step, max_abs
    cdef double complex den, step, zi
    for it in range(max_iter):
        max_step = 0.0
        max_abs = 1.0
        for i in range(deg):
            den = 1.0
            zi = z[i]
            for j in range(deg):
                if j != i:
                    den = den * (zi - z[j])
            if den == 0:
                den = tol
            step = _horner(c, zi) / den
            z[i] = zi - step
            a = cabs(step)
            if a > max_step:
                max_step = a
            a = cabs(z[i])
            if a > max_abs:
                max_abs = a
        if max_step <= tol * max_abs:
            used = it + 1
            break
    dcf = np.empty(deg, dtype=np.complex128)
    cdef double complex[::1] dc = dcf
    for k in range(1, deg + 1):
        dc[k - 1] = k * c[k]
    for i in range(deg):
        z[i] = _polish(c, dc, z[i])
    return z_arr, used


def rk4_top(s0, w, s1, int steps):
    """Fixed-step RK4 for dw1/ds = w2 w3/s, dw2/ds = w1 w3/(s(s-1)),
    dw3/ds = w1 w2/(1-s) along the straight segment [s0, s1]."""
    cdef double complex w1 = w[0], w2 = w[1], w3 = w[2]
    cdef double complex s = s0
    cdef double complex h = (<double complex> s1 - s) / steps
    cdef double complex k11, k12, k13, k21, k22, k23, k31, k32, k33, k41, k42, k43
    cdef double complex sv, a, b, cc
    cdef int n
    for n in range(steps):
        sv = s
        a = w1; b = w2; cc = w3
        k11 = b * cc / sv
        k12 = a * cc / (sv * (sv - 1.0))
        k13 = a * b / (1.0 - sv)
        sv = s + h / 2.0
        a = w1 + h / 2.0 * k11; b = w2 + h / 2.0 * k12; cc = w3 + h / 2.0 * k13
        k21 = b * cc / sv
        k22 = a * cc / (sv * (sv - 1.0))
        k23 = a * b / (1.0 - sv)
        a = w1 + h / 2.0 * k21; b = w2 + h / 2.0 * k22; cc = w3 + h / 2.0 * k23
        k31 = b * cc / sv
        k32 = a * cc / (sv * (sv - 1.0))
        k33 = a * b / (1.0 - sv)
        sv = s + h
        a = w1 + h * k31; b = w2 + h * k32; cc = w3 + h * k33
        k41 = b * cc / sv
        k42 = a * cc / (sv * (sv - 1.0))
        k43 = a * b / (1.0 - sv)
        w1 = w1 + h / 6.0 * (k11 + 2.0 * k21 + 2.0 * k31 + k41)
        w2 = w2 + h / 6.0 * (k12 + 2.0 * k22 + 2.0 * k32 + k42)
        w3 = w3 + h / 6.0 * (k13 + 2.0 * k23 + 2.0 * k33 + k43)
        s = s + h
    return np.array([w1, w2, w3], dtype=np.complex128)
