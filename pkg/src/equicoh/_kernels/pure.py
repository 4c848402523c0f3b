"""Reference numeric kernels (pure Python).

The compiled backend in ``_fast.pyx`` mirrors these functions statement for
statement; both must produce identical floating-point results. Conventions:
matrices are flat row-major lists of complex with length ``d*d``, ket batches
are flat ket-major lists with length ``count*d``.
"""

import math

NAME = "pure"


def matmul(a, b, d):
    """Product of two d x d matrices."""
    out = [0j] * (d * d)
    for i in range(d):
        for j in range(d):
            s = 0j
            for k in range(d):
                s += a[i * d + k] * b[k * d + j]
            out[i * d + j] = s
    return out


def gram(xs, nx, ys, ny, d):
    """Inner products <x_a|y_b> (x conjugated), flat nx x ny."""
    out = [0j] * (nx * ny)
    for a in range(nx):
        for b in range(ny):
            s = 0j
            for i in range(d):
                s += xs[a * d + i].conjugate() * ys[b * d + i]
            out[a * ny + b] = s
    return out


def quad_forms(op, kets, nk, d):
    """Quadratic forms <k_m|Op|k_m> for each ket in the batch."""
    out = [0j] * nk
    for m in range(nk):
        s = 0j
        for i in range(d):
            t = 0j
            for j in range(d):
                t += op[i * d + j] * kets[m * d + j]
            s += kets[m * d + i].conjugate() * t
        out[m] = s
    return out


def transform_stats(rho, kets, d):
    """Diagonal and off-diagonal sums of B† rho B.

    B has the d basis kets as columns. Returns (diag, off_sq, off_abs) where
    diag[m] = <k_m|rho|k_m>, off_sq = sum of squared magnitudes of the
    off-diagonal entries and off_abs the sum of their magnitudes.
    """
    t = [0j] * (d * d)
    for i in range(d):
        for m in range(d):
            s = 0j
            for j in range(d):
                s += rho[i * d + j] * kets[m * d + j]
            t[i * d + m] = s
    diag = [0j] * d
    off_sq = 0.0
    off_abs = 0.0
    for m in range(d):
        for n in range(d):
            s = 0j
            for i in range(d):
                s += kets[m * d + i].conjugate() * t[i * d + n]
            if m == n:
                diag[m] = s
            else:
                mag2 = s.real * s.real + s.imag * s.imag
                off_sq += mag2
                off_abs += math.sqrt(mag2)
    return diag, off_sq, off_abs


def _offdiag_norm(a, d):
    s = 0.0
    for i in range(d):
        for j in range(d):
            if i != j:
                x = a[i * d + j]
                s += x.real * x.real + x.imag * x.imag
    return math.sqrt(s)


def eigh_jacobi(a, d, off_eps, max_sweeps):
    """Cyclic complex Jacobi diagonalization of a Hermitian matrix.

    Returns (diag, vecs, sweeps, converged): diag holds the unsorted real
    eigenvalues, vecs is the accumulated unitary (flat row-major; column k is
    the eigenvector of diag[k]).
    """
    a = list(a)
    v = [0j] * (d * d)
    for i in range(d):
        v[i * d + i] = 1 + 0j
    sweeps = 0
    converged = _offdiag_norm(a, d) <= off_eps
    while not converged and sweeps < max_sweeps:
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p * d + q]
                m = math.sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if m == 0.0:
                    continue
                app = a[p * d + p].real
                aqq = a[q * d + q].real
                tau = (aqq - app) / (2.0 * m)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                u = complex(apq.real / m, apq.imag / m)
                uc = u.conjugate()
                # columns p, q of A and of the accumulated unitary
                for i in range(d):
                    aip = a[i * d + p]
                    aiq = a[i * d + q]
                    a[i * d + p] = c * aip - s * (uc * aiq)
                    a[i * d + q] = s * aip + c * (uc * aiq)
                    vip = v[i * d + p]
                    viq = v[i * d + q]
                    v[i * d + p] = c * vip - s * (uc * viq)
                    v[i * d + q] = s * vip + c * (uc * viq)
                # rows p, q
                for j in range(d):
                    apj = a[p * d + j]
                    aqj = a[q * d + j]
                    a[p * d + j] = c * apj - s * (u * aqj)
                    a[q * d + j] = s * apj + c * (u * aqj)
                a[p * d + q] = 0j
                a[q * d + p] = 0j
                a[p * d + p] = complex(a[p * d + p].real, 0.0)
                a[q * d + q] = complex(a[q * d + q].real, 0.0)
        sweeps += 1
        converged = _offdiag_norm(a, d) <= off_eps
    diag = [a[i * d + i].real for i in range(d)]
    return diag, v, sweeps, converged


def fib_candidates(n, keep):
    """Fibonacci sphere scan; keep points whose pairwise coordinate-square
    sums spread less than ``keep``. Returns flat [x, y, z, ...]."""
    ga = math.pi * (3.0 - math.sqrt(5.0))
    out = []
    for i in range(n):
        z = 1.0 - (2.0 * i + 1.0) / n
        r2 = 1.0 - z * z
        r = math.sqrt(r2) if r2 > 0.0 else 0.0
        t = ga * i
        x = r * math.cos(t)
        y = r * math.sin(t)
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
