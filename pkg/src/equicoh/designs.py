"""Builders for SIC state sets (d = 2, 3, 8) and complete MUB collections,
with their defining structural checks.

Every builder is deterministic: two calls produce bitwise-identical
amplitude tuples. Construction routes:

* qubit SICs: the eight Bloch cube vertices (+-1/sqrt3 coordinates), split
  into two Pauli-orbit tetrahedra by sign parity;
* d = 3: orbit of the fiducial (0, 1, -1)/sqrt2 under the nine qutrit
  Weyl-Heisenberg displacements;
* d = 8: orbit of the fiducial (-1+2i, 1, 1, 1, 1, 1, 1, 1)/sqrt12 under the
  64 Hermitian three-qubit Pauli operators;
* MUBs: fixed eigenbases for d = 2, 3; joint eigenbases of the nine maximal
  commuting Pauli classes for d = 8.
"""

import enum
import itertools
import math
import random
from dataclasses import dataclass

from . import _kernels
from .errors import ConstructionFailed, DegenerateCombination, DimensionMismatch, NotPure
from .numerics import ComplexMatrix, UnitKet, TOL_CONSTRUCTED, hermitian_eigen
from .pauli import (
    all_qutrit_displacements,
    gf8_line_classes,
    pauli_matrix,
    three_qubit_labels,
)
from .report import VerificationReport

DEFAULT_MUB_SEED = 11
_SQRT3 = math.sqrt(3.0)


class Provenance(enum.Enum):
    QUBIT_EVEN = "QubitEven"
    QUBIT_ODD = "QubitOdd"
    HESSE = "Hesse"
    HOGGAR = "Hoggar"


@dataclass(frozen=True)
class BlochVector:
    """Real Bloch coordinates; pure states satisfy x^2 + y^2 + z^2 = 1."""

    x: float
    y: float
    z: float

    def norm_sq(self):
        return self.x * self.x + self.y * self.y + self.z * self.z


@dataclass(frozen=True)
class SicSet:
    """d^2 unit kets expected to satisfy the SIC overlap law.

    The overlap law itself is verified by ``check_sic_overlaps`` (builders
    refuse to return a set that fails it); keeping it out of the constructor
    lets tests feed deliberately corrupted sets to the checker.
    """

    dim: int
    kets: tuple
    provenance: Provenance

    def __post_init__(self):
        if len(self.kets) != self.dim * self.dim:
            raise ValueError(f"a SIC in dimension {self.dim} has {self.dim ** 2} states")
        if any(k.dim != self.dim for k in self.kets):
            raise ValueError("ket dimension mismatch")


@dataclass(frozen=True)
class MubCollection:
    """d+1 orthonormal bases expected to be pairwise unbiased.

    Unbiasedness is verified by ``check_mub_unbiased``, not the constructor
    (same rationale as SicSet). ``seed`` records the coefficient seed used
    for the d = 8 joint-eigenbasis construction, None otherwise.
    """

    dim: int
    bases: tuple
    seed: int | None = None

    def __post_init__(self):
        if len(self.bases) != self.dim + 1:
            raise ValueError(f"a complete MUB set in dimension {self.dim} has {self.dim + 1} bases")
        for basis in self.bases:
            if len(basis) != self.dim or any(k.dim != self.dim for k in basis):
                raise ValueError("basis shape mismatch")


def bloch_to_ket(v):
    """Ket whose projector is (I + x sx + y sy + z sz)/2; requires a pure v."""
    if abs(v.norm_sq() - 1.0) > 1e-12:
        raise NotPure(f"Bloch vector has |v|^2 = {v.norm_sq()!r}")
    if v.z < -1.0 + 1e-14:
        return UnitKet((0j, 1 + 0j))
    a = math.sqrt((1.0 + v.z) / 2.0)
    b = complex(v.x, v.y) / (2.0 * a)
    return UnitKet.from_amps((a, b))


def _sic_or_fail(dim, kets, provenance, tol):
    candidate = SicSet(dim=dim, kets=tuple(kets), provenance=provenance)
    report = check_sic_overlaps(candidate, tol=tol)
    if not report.passed:
        raise ConstructionFailed(
            f"{provenance.value} construction failed the overlap law "
            f"(max error {report.max_abs_error:.3e})"
        )
    return candidate


def build_qubit_sics(tol=TOL_CONSTRUCTED):
    """The two qubit SIC tetrahedra (even and odd sign parity).

    Vertices are enumerated lexicographically over (x, y, z) signs with +1
    first; each tetrahedron is the Pauli orbit of its first vertex.
    """
    even, odd = [], []
    for sx, sy, sz in itertools.product((1.0, -1.0), repeat=3):
        ket = bloch_to_ket(BlochVector(sx / _SQRT3, sy / _SQRT3, sz / _SQRT3))
        (even if sx * sy * sz > 0 else odd).append(ket)
    return (
        _sic_or_fail(2, even, Provenance.QUBIT_EVEN, tol),
        _sic_or_fail(2, odd, Provenance.QUBIT_ODD, tol),
    )


HESSE_FIDUCIAL = (0j, 1 / math.sqrt(2) + 0j, -1 / math.sqrt(2) + 0j)


def build_hesse_sic(tol=TOL_CONSTRUCTED):
    """Orbit of (0, 1, -1)/sqrt2 under the nine displacements, ordered j = 3a + b."""
    fid = UnitKet(HESSE_FIDUCIAL)
    kets = [UnitKet.from_amps(disp.apply(fid.amps)) for disp in all_qutrit_displacements()]
    return _sic_or_fail(3, kets, Provenance.HESSE, tol)


HOGGAR_FIDUCIAL_RAW = (-1 + 2j, 1, 1, 1, 1, 1, 1, 1)


def build_hoggar_sic(tol=TOL_CONSTRUCTED):
    """Orbit of the fiducial under all 64 Hermitian three-qubit Paulis.

    States are ordered by label index j = a||b and re-phased to the
    canonical gauge after each operator is applied.
    """
    fid = UnitKet.from_amps(HOGGAR_FIDUCIAL_RAW)
    kets = [
        UnitKet.from_amps(pauli_matrix(label).apply(fid.amps))
        for label in three_qubit_labels()
    ]
    return _sic_or_fail(8, kets, Provenance.HOGGAR, tol)


_INV_SQRT2 = math.sqrt(0.5)
_QUBIT_MUB_AMPS = (
    ((1, 0), (0, 1)),                                              # sz eigenbasis
    ((_INV_SQRT2, _INV_SQRT2), (_INV_SQRT2, -_INV_SQRT2)),         # sx
    ((_INV_SQRT2, _INV_SQRT2 * 1j), (_INV_SQRT2, -_INV_SQRT2 * 1j)),  # sy
)


def _build_mub2():
    bases = tuple(
        tuple(UnitKet.from_amps(amps) for amps in basis) for basis in _QUBIT_MUB_AMPS
    )
    return MubCollection(dim=2, bases=bases)


def _build_mub3():
    """Computational basis plus the eigenbases of X Z^m for m = 0, 1, 2.

    The eigenvector of X Z^m with eigenvalue w^-k is (1, w^k, w^(m+2k))/sqrt3,
    which is the closed form used here; unbiasedness is still verified by the
    caller through check_mub_unbiased.
    """
    w = complex(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))
    bases = [tuple(UnitKet.from_amps([1 if i == j else 0 for i in range(3)]) for j in range(3))]
    for m in range(3):
        basis = []
        for k in range(3):
            basis.append(UnitKet.from_amps([1, w ** k, w ** ((m + 2 * k) % 3)]))
        bases.append(tuple(basis))
    return MubCollection(dim=3, bases=tuple(bases))


def _joint_eigenbasis(ops, class_index, seed):
    """Common eigenbasis of seven commuting Hermitian Paulis.

    Diagonalizes a random real combination of the class operators (seeded,
    retried on near-degenerate spectra) and orders the eigenvectors by their
    tuple of eigenvalue signs with respect to the label-ordered operators,
    +1 sorting before -1.
    """
    mats = [pauli_matrix(label) for label in ops]
    last_gap = None
    for attempt in range(5):
        rng = random.Random(seed * 1000 + class_index * 10 + attempt)
        coeffs = [rng.uniform(-1.0, 1.0) for _ in mats]
        cells = [0j] * 64
        for c, m in zip(coeffs, mats):
            for idx, cell in enumerate(m.cells):
                cells[idx] += c * cell
        combo = ComplexMatrix(8, cells)
        eigenvalues, eigenvectors = hermitian_eigen(combo)
        last_gap = min(b - a for a, b in zip(eigenvalues, eigenvalues[1:]))
        if last_gap < 1e-8:
            continue
        keyed = []
        for ket in eigenvectors:
            signs = []
            for m in mats:
                val = _kernels.quad_forms(m.cells, ket.amps, 1, 8)[0].real
                signs.append(0 if val > 0.0 else 1)
            keyed.append((tuple(signs), ket))
        keyed.sort(key=lambda item: item[0])
        return tuple(ket for _, ket in keyed)
    raise DegenerateCombination(
        f"class {class_index}: eigenvalue gap {last_gap:.3e} after 5 seeds"
    )


def _build_mub8(seed):
    bases = tuple(
        _joint_eigenbasis(ops, idx, seed)
        for idx, ops in enumerate(gf8_line_classes())
    )
    return MubCollection(dim=8, bases=bases, seed=seed)


def build_mub(d, seed=None, tol=TOL_CONSTRUCTED):
    """Complete MUB collection for d in {2, 3, 8}.

    ``seed`` only affects d = 8 (coefficients of the joint-eigenbasis
    combinations); the resulting bases are the same up to numerical noise.
    """
    if d == 2:
        mub = _build_mub2()
    elif d == 3:
        mub = _build_mub3()
    elif d == 8:
        mub = _build_mub8(DEFAULT_MUB_SEED if seed is None else seed)
    else:
        raise DimensionMismatch(f"no MUB construction for d = {d}")
    report = check_mub_unbiased(mub, tol=tol)
    if not report.passed:
        raise ConstructionFailed(
            f"MUB construction for d = {d} failed (max error {report.max_abs_error:.3e})"
        )
    return mub


def check_sic_overlaps(sic, tol=TOL_CONSTRUCTED):
    """Worst deviation of |<pij|pik>|^2 from (d djk + 1)/(d + 1) over all pairs."""
    d = sic.dim
    n = len(sic.kets)
    flat = [a for k in sic.kets for a in k.amps]
    g = _kernels.gram(flat, n, flat, n, d)
    target_off = 1.0 / (d + 1.0)
    worst = 0.0
    for j in range(n):
        for k in range(n):
            v = g[j * n + k]
            mag2 = v.real * v.real + v.imag * v.imag
            target = 1.0 if j == k else target_off
            worst = max(worst, abs(mag2 - target))
    return VerificationReport.from_error(
        "sic-overlaps",
        d,
        worst,
        tol,
        details={
            "provenance": sic.provenance.value,
            "states": n,
            "target_offdiag": target_off,
        },
    )


def check_mub_unbiased(mub, tol=TOL_CONSTRUCTED):
    """Worst orthonormality defect and worst cross-basis |overlap|^2 - 1/d."""
    d = mub.dim
    flats = [[a for k in basis for a in k.amps] for basis in mub.bases]
    gram_dev = 0.0
    cross_dev = 0.0
    target = 1.0 / d
    for m, flat in enumerate(flats):
        g = _kernels.gram(flat, d, flat, d, d)
        for i in range(d):
            for j in range(d):
                expected = 1.0 if i == j else 0.0
                gram_dev = max(gram_dev, abs(g[i * d + j] - expected))
        for m2 in range(m + 1, d + 1):
            g = _kernels.gram(flat, d, flats[m2], d, d)
            for v in g:
                mag2 = v.real * v.real + v.imag * v.imag
                cross_dev = max(cross_dev, abs(mag2 - target))
    worst = max(gram_dev, cross_dev)
    return VerificationReport.from_error(
        "mub-unbiased",
        d,
        worst,
        tol,
        details={
            "bases": d + 1,
            "max_gram_deviation": gram_dev,
            "max_cross_deviation": cross_dev,
        },
    )
