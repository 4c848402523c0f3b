"""Dense complex linear algebra for small dimensions, plus entropy functionals.

Runs on the selected kernel backend (compiled or pure Python); no third-party
dependencies. All values are O(1), so comparisons throughout the package use
absolute tolerances: 1e-12 for algebraic identities, 1e-10 for constructed
objects.
"""

import math

from . import _kernels
from .errors import (
    DimensionTooLarge,
    InvalidDistribution,
    NoConvergence,
    NotHermitian,
)

TOL_IDENTITY = 1e-12
TOL_CONSTRUCTED = 1e-10

_HERMITIAN_TOL = 1e-12
_PHASE_ANCHOR = 1e-10
_MAX_EIGEN_DIM = 16


class ComplexMatrix:
    """Immutable dense complex square matrix, flat row-major storage."""

    __slots__ = ("dim", "cells")

    def __init__(self, dim, cells):
        cells = tuple(complex(c) for c in cells)
        if dim <= 0 or len(cells) != dim * dim:
            raise ValueError(f"expected {dim}x{dim} cells, got {len(cells)}")
        for c in cells:
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise ValueError("non-finite matrix entry")
        self.dim = dim
        self.cells = cells

    @classmethod
    def from_rows(cls, rows):
        d = len(rows)
        return cls(d, [c for row in rows for c in row])

    @classmethod
    def identity(cls, dim):
        return cls(dim, [1 + 0j if i == j else 0j for i in range(dim) for j in range(dim)])

    def __getitem__(self, ij):
        i, j = ij
        return self.cells[i * self.dim + j]

    def rows(self):
        d = self.dim
        return tuple(self.cells[i * d : (i + 1) * d] for i in range(d))

    def __matmul__(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return ComplexMatrix(self.dim, _kernels.matmul(self.cells, other.cells, self.dim))

    def __add__(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return ComplexMatrix(self.dim, [a + b for a, b in zip(self.cells, other.cells)])

    def __sub__(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return ComplexMatrix(self.dim, [a - b for a, b in zip(self.cells, other.cells)])

    def scale(self, z):
        return ComplexMatrix(self.dim, [z * c for c in self.cells])

    def dagger(self):
        d = self.dim
        return ComplexMatrix(d, [self.cells[j * d + i].conjugate() for i in range(d) for j in range(d)])

    def kron(self, other):
        da, db = self.dim, other.dim
        d = da * db
        out = [0j] * (d * d)
        for i in range(da):
            for j in range(da):
                aij = self.cells[i * da + j]
                for k in range(db):
                    for l in range(db):
                        out[(i * db + k) * d + (j * db + l)] = aij * other.cells[k * db + l]
        return ComplexMatrix(d, out)

    def apply(self, amps):
        """Matrix-vector product, returned as a plain tuple of complex."""
        d = self.dim
        if len(amps) != d:
            raise ValueError("dimension mismatch")
        return tuple(
            sum(self.cells[i * d + j] * amps[j] for j in range(d)) for i in range(d)
        )

    def trace(self):
        d = self.dim
        return sum(self.cells[i * d + i] for i in range(d))

    def frobenius_norm(self):
        return math.sqrt(sum(c.real * c.real + c.imag * c.imag for c in self.cells))

    def hermiticity_defect(self):
        d = self.dim
        return max(
            abs(self.cells[i * d + j] - self.cells[j * d + i].conjugate())
            for i in range(d)
            for j in range(d)
        )

    def is_hermitian(self, tol=_HERMITIAN_TOL):
        return self.hermiticity_defect() <= tol

    def allclose(self, other, tol):
        if self.dim != other.dim:
            return False
        return max(abs(a - b) for a, b in zip(self.cells, other.cells)) <= tol

    def __eq__(self, other):
        return (
            isinstance(other, ComplexMatrix)
            and self.dim == other.dim
            and self.cells == other.cells
        )

    def __hash__(self):
        return hash((self.dim, self.cells))

    def __repr__(self):
        return f"ComplexMatrix(dim={self.dim})"


class UnitKet:
    """Unit-norm complex vector with a canonical global phase.

    The first amplitude of magnitude above 1e-10 is real and positive; this
    makes every builder's output reproducible bit for bit. Use ``from_amps``
    to normalize and phase-fix arbitrary amplitudes.
    """

    __slots__ = ("dim", "amps")

    def __init__(self, amps):
        amps = tuple(complex(a) for a in amps)
        norm_sq = sum(a.real * a.real + a.imag * a.imag for a in amps)
        if abs(norm_sq - 1.0) > 1e-12:
            raise ValueError(f"not unit norm: |amps|^2 = {norm_sq!r}")
        anchor = next((a for a in amps if abs(a) > _PHASE_ANCHOR), None)
        if anchor is None or not (anchor.real > 0.0 and abs(anchor.imag) <= _PHASE_ANCHOR):
            raise ValueError("global phase not canonical; use UnitKet.from_amps")
        self.dim = len(amps)
        self.amps = amps

    @classmethod
    def from_amps(cls, amps):
        amps = [complex(a) for a in amps]
        norm = math.sqrt(sum(a.real * a.real + a.imag * a.imag for a in amps))
        if norm < 1e-12:
            raise ValueError("cannot normalize a null vector")
        amps = [a / norm for a in amps]
        anchor = next((a for a in amps if abs(a) > _PHASE_ANCHOR), None)
        if anchor is None:
            raise ValueError("no amplitude above the phase anchor threshold")
        mag = abs(anchor)
        phase = complex(anchor.real / mag, -anchor.imag / mag)
        return cls([phase * a for a in amps])

    def inner(self, other):
        """<self|other> (self conjugated)."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return sum(a.conjugate() * b for a, b in zip(self.amps, other.amps))

    def overlap_sq(self, other):
        v = self.inner(other)
        return v.real * v.real + v.imag * v.imag

    def projector(self):
        d = self.dim
        return ComplexMatrix(
            d, [self.amps[i] * self.amps[j].conjugate() for i in range(d) for j in range(d)]
        )

    def __eq__(self, other):
        return isinstance(other, UnitKet) and self.amps == other.amps

    def __hash__(self):
        return hash(self.amps)

    def __repr__(self):
        return f"UnitKet(dim={self.dim})"


class ProbabilityVector:
    """Normalized list of probabilities.

    Entries in [-1e-12, 0) are rounding debris from Born-rule products and
    are clamped to 0; entries in (1, 1 + 1e-10] are clamped to 1.
    """

    __slots__ = ("probs",)

    def __init__(self, probs, sum_tol=1e-10):
        clamped = []
        for p in probs:
            p = float(p)
            if -1e-12 <= p < 0.0:
                p = 0.0
            elif 1.0 < p <= 1.0 + 1e-10:
                p = 1.0
            if p < 0.0 or p > 1.0:
                raise InvalidDistribution(f"entry out of range: {p!r}")
            clamped.append(p)
        total = sum(clamped)
        if abs(total - 1.0) > sum_tol:
            raise InvalidDistribution(f"sum deviates from 1 by {abs(total - 1.0):.3e}")
        self.probs = tuple(clamped)

    def __iter__(self):
        return iter(self.probs)

    def __len__(self):
        return len(self.probs)

    def __getitem__(self, i):
        return self.probs[i]

    def sorted_desc(self):
        return tuple(sorted(self.probs, reverse=True))

    def __repr__(self):
        return f"ProbabilityVector({self.probs!r})"


def hermitian_eigen(m, off_eps=1e-14, max_sweeps=100):
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.

    Returns (eigenvalues, eigenvectors) with eigenvalues ascending and
    eigenvectors as phase-canonical UnitKets. Output is deterministic for
    identical input.
    """
    if m.dim > _MAX_EIGEN_DIM:
        raise DimensionTooLarge(f"eigensolver supports dim <= {_MAX_EIGEN_DIM}")
    defect = m.hermiticity_defect()
    if defect > _HERMITIAN_TOL:
        raise NotHermitian(f"hermiticity defect {defect:.3e}")
    diag, vecs, sweeps, converged = _kernels.eigh_jacobi(m.cells, m.dim, off_eps, max_sweeps)
    if not converged:
        raise NoConvergence(f"Jacobi did not converge in {sweeps} sweeps")
    d = m.dim
    order = sorted(range(d), key=lambda k: (diag[k], k))
    eigenvalues = tuple(diag[k] for k in order)
    eigenvectors = tuple(
        UnitKet.from_amps([vecs[i * d + k] for i in range(d)]) for k in order
    )
    return eigenvalues, eigenvectors


def _as_probability_vector(p):
    return p if isinstance(p, ProbabilityVector) else ProbabilityVector(p)


def shannon_entropy(p):
    """Shannon entropy in nats, with 0 * ln 0 = 0.

    Terms are summed in sorted order, so the result is exactly invariant
    under permutations of the input.
    """
    p = _as_probability_vector(p)
    return -sum(x * math.log(x) for x in sorted(p) if x > 0.0)


def renyi2_entropy(p):
    """Renyi entropy of order 2 in nats: -ln(sum of squared probabilities)."""
    p = _as_probability_vector(p)
    return -math.log(sum(x * x for x in p))


def random_ket(dim, rng):
    """Haar-like random UnitKet from a seeded random.Random instance."""
    return UnitKet.from_amps(
        [complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0)) for _ in range(dim)]
    )
