# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels.

Statement-for-statement mirror of ``pure.py`` (same operation order, so the
two backends produce identical floating-point results; the extension is
compiled with -ffp-contract=off to keep it that way).
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.math cimport cos, sin, sqrt

NAME = "compiled"


cdef double complex* _alloc(Py_ssize_t n) except NULL:
    cdef double complex* p = <double complex*> PyMem_Malloc(n * sizeof(double complex))
    if p == NULL:
        raise MemoryError()
    return p


cdef double complex* _from_seq(object seq, Py_ssize_t n) except NULL:
    cdef double complex* p = _alloc(n)
    cdef Py_ssize_t i
    for i in range(n):
        p[i] = seq[i]
    return p


def matmul(a, b, Py_ssize_t d):
    """Product of two d x d matrices."""
    cdef double complex* pa = _from_seq(a, d * d)
    cdef double complex* pb = NULL
    cdef double complex* po = NULL
    cdef Py_ssize_t i, j, k
    cdef double complex s
    try:
        pb = _from_seq(b, d * d)
        po = _alloc(d * d)
        for i in range(d):
            for j in range(d):
                s = 0
                for k in range(d):
                    s = s + pa[i * d + k] * pb[k * d + j]
                po[i * d + j] = s
        return [po[i] for i in range(d * d)]
    finally:
        PyMem_Free(pa)
        PyMem_Free(pb)
        PyMem_Free(po)


def gram(xs, Py_ssize_t nx, ys, Py_ssize_t ny, Py_ssize_t d):
    """Inner products <x_a|y_b> (x conjugated), flat nx x ny."""
    cdef double complex* px = _from_seq(xs, nx * d)
    cdef double complex* py = NULL
    cdef double complex* po = NULL
    cdef Py_ssize_t a, b, i
    cdef double complex s
    try:
        py = _from_seq(ys, ny * d)
        po = _alloc(nx * ny)
        for a in range(nx):
            for b in range(ny):
                s = 0
                for i in range(d):
                    s = s + px[a * d + i].conjugate() * py[b * d + i]
                po[a * ny + b] = s
        return [po[i] for i in range(nx * ny)]
    finally:
        PyMem_Free(px)
        PyMem_Free(py)
        PyMem_Free(po)


def quad_forms(op, kets, Py_ssize_t nk, Py_ssize_t d):
    """Quadratic forms <k_m|Op|k_m> for each ket in the batch."""
    cdef double complex* pop = _from_seq(op, d * d)
    cdef double complex* pk = NULL
    cdef Py_ssize_t m, i, j
    cdef double complex s, t
    cdef list out = []
    try:
        pk = _from_seq(kets, nk * d)
        for m in range(nk):
            s = 0
            for i in range(d):
                t = 0
                for j in range(d):
                    t = t + pop[i * d + j] * pk[m * d + j]
                s = s + pk[m * d + i].conjugate() * t
            out.append(complex(s))
        return out
    finally:
        PyMem_Free(pop)
        PyMem_Free(pk)


def transform_stats(rho, kets, Py_ssize_t d):
    """Diagonal and off-diagonal sums of B† rho B (see pure backend)."""
    cdef double complex* pr = _from_seq(rho, d * d)
    cdef double complex* pk = NULL
    cdef double complex* pt = NULL
    cdef Py_ssize_t i, j, m, n
    cdef double complex s
    cdef double off_sq = 0.0, off_abs = 0.0, mag2
    cdef list diag = []
    try:
        pk = _from_seq(kets, d * d)
        pt = _alloc(d * d)
        for i in range(d):
            for m in range(d):
                s = 0
                for j in range(d):
                    s = s + pr[i * d + j] * pk[m * d + j]
                pt[i * d + m] = s
        for m in range(d):
            for n in range(d):
                s = 0
                for i in range(d):
                    s = s + pk[m * d + i].conjugate() * pt[i * d + n]
                if m == n:
                    diag.append(complex(s))
                else:
                    mag2 = s.real * s.real + s.imag * s.imag
                    off_sq += mag2
                    off_abs += sqrt(mag2)
        return diag, off_sq, off_abs
    finally:
        PyMem_Free(pr)
        PyMem_Free(pk)
        PyMem_Free(pt)


cdef double _offdiag_norm(double complex* a, Py_ssize_t d):
    cdef double s = 0.0
    cdef Py_ssize_t i, j
    cdef double complex x
    for i in range(d):
        for j in range(d):
            if i != j:
                x = a[i * d + j]
                s += x.real * x.real + x.imag * x.imag
    return sqrt(s)


def eigh_jacobi(a0, Py_ssize_t d, double off_eps, long max_sweeps):
    """Cyclic complex Jacobi diagonalization (see pure backend)."""
    cdef double complex* a = _from_seq(a0, d * d)
    cdef double complex* v = NULL
    cdef Py_ssize_t i, j, p, q
    cdef long sweeps = 0
    cdef bint converged
    cdef double m, app, aqq, tau, t, c, s
    cdef double complex apq, u, uc, aip, aiq, vip, viq, apj, aqj
    try:
        v = _alloc(d * d)
        for i in range(d * d):
            v[i] = 0
        for i in range(d):
            v[i * d + i] = 1
        converged = _offdiag_norm(a, d) <= off_eps
        while not converged and sweeps < max_sweeps:
            for p in range(d - 1):
                for q in range(p + 1, d):
                    apq = a[p * d + q]
                    m = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                    if m == 0.0:
                        continue
                    app = a[p * d + p].real
                    aqq = a[q * d + q].real
                    tau = (aqq - app) / (2.0 * m)
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    u = complex(apq.real / m, apq.imag / m)
                    uc = u.conjugate()
                    for i in range(d):
                        aip = a[i * d + p]
                        aiq = a[i * d + q]
                        a[i * d + p] = c * aip - s * (uc * aiq)
                        a[i * d + q] = s * aip + c * (uc * aiq)
                        vip = v[i * d + p]
                        viq = v[i * d + q]
                        v[i * d + p] = c * vip - s * (uc * viq)
                        v[i * d + q] = s * vip + c * (uc * viq)
                    for j in range(d):
                        apj = a[p * d + j]
                        aqj = a[q * d + j]
                        a[p * d + j] = c * apj - s * (u * aqj)
                        a[q * d + j] = s * apj + c * (u * aqj)
                    a[p * d + q] = 0
                    a[q * d + p] = 0
                    a[p * d + p] = a[p * d + p].real
                    a[q * d + q] = a[q * d + q].real
            sweeps += 1
            converged = _offdiag_norm(a, d) <= off_eps
        diag = [a[i * d + i].real for i in range(d)]
        vecs = [v[i] for i in range(d * d)]
        return diag, vecs, sweeps, converged
    finally:
        PyMem_Free(a)
        PyMem_Free(v)


def fib_candidates(long n, double keep):
    """Fibonacci sphere scan (see pure backend)."""
    cdef double ga = 3.14159265358979323846 * (3.0 - sqrt(5.0))
    cdef long i
    cdef double z, r2, r, t, x, y, s1, s2, s3, hi, lo
    cdef list out = []
    for i in range(n):
        z = 1.0 - (2.0 * i + 1.0) / n
        r2 = 1.0 - z * z
        r = sqrt(r2) if r2 > 0.0 else 0.0
        t = ga * i
        x = r * cos(t)
        y = r * sin(t)
        s1 = x * x + y * y
        s2 = x * x + z * z
        s3 = y * y + z * z
        hi = s1
        if s2 > hi:
            hi = s2
        if s3 > hi:
            hi = s3
        lo = s1
        if s2 < lo:
            lo = s2
        if s3 < lo:
            lo = s3
        if hi - lo < keep:
            out.append(x)
            out.append(y)
            out.append(z)
    return out
