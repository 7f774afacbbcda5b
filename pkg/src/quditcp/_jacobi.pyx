# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: cyclic Jacobi rotations for complex Hermitian matrices."""

from libc.math cimport atan2, cos, sin, sqrt


def jacobi_sweeps(double complex[:, ::1] a, double complex[:, ::1] v,
                  double tol, int max_sweeps):
    """Diagonalize Hermitian ``a`` in place, accumulating rotations into ``v``.

    Sweeps the strict upper triangle cyclically, annihilating one off-diagonal
    entry per rotation, until the off-diagonal Frobenius mass drops below
    ``tol`` (or below the round-off floor of the matrix).  Returns the number
    of sweeps used, or -1 if still unconverged after ``max_sweeps`` sweeps.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i
    cdef int sweep
    cdef double mag, app, aqq, phi, c, s, off2, fro2, target, skip
    cdef double complex apq, u, uc, tp, tq

    fro2 = 0.0
    for p in range(n):
        for q in range(n):
            apq = a[p, q]
            fro2 += apq.real * apq.real + apq.imag * apq.imag
    # round-off floor: below this level rotations only shuffle noise
    target = tol
    if n * 2.2e-16 * sqrt(fro2) > target:
        target = n * 2.2e-16 * sqrt(fro2)
    skip = target / (2.0 * n)

    off2 = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            off2 += 2.0 * (apq.real * apq.real + apq.imag * apq.imag)
    if sqrt(off2) <= target:
        return 0

    for sweep in range(1, max_sweeps + 1):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if mag <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                phi = 0.5 * atan2(2.0 * mag, aqq - app)
                c = cos(phi)
                s = sin(phi)
                # u absorbs the phase of a[p,q]; the plane rotation is real
                u = apq.conjugate() / mag
                uc = u.conjugate()
                for i in range(n):
                    tp = c * a[p, i] - s * uc * a[q, i]
                    tq = s * a[p, i] + c * uc * a[q, i]
                    a[p, i] = tp
                    a[q, i] = tq
                for i in range(n):
                    tp = c * a[i, p] - s * u * a[i, q]
                    tq = s * a[i, p] + c * u * a[i, q]
                    a[i, p] = tp
                    a[i, q] = tq
                    tp = c * v[i, p] - s * u * v[i, q]
                    tq = s * v[i, p] + c * u * v[i, q]
                    v[i, p] = tp
                    v[i, q] = tq
                a[p, q] = 0
                a[q, p] = 0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                off2 += 2.0 * (apq.real * apq.real + apq.imag * apq.imag)
        if sqrt(off2) <= target:
            return sweep
    return -1
