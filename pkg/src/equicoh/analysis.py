"""Born-probability tables against MUB collections and the equicoherence,
uncertainty and degeneracy checks built on them, plus the qubit
equal-coherence solver.
"""

import math
from dataclasses import dataclass

from . import _kernels
from .coherence import coh_l1
from .designs import BlochVector, MubCollection, Provenance, SicSet, build_mub
from .errors import DimensionMismatch, GridTooCoarse
from .numerics import ProbabilityVector, TOL_CONSTRUCTED, TOL_IDENTITY
from .pauli import pauli_matrix, three_qubit_labels
from .report import VerificationReport

# Penalty folded into max_abs_error when a check fails structurally (wrong
# counts, missing gap) rather than numerically; details name the cause.
STRUCTURAL_PENALTY = 1.0


@dataclass(frozen=True)
class ProbabilityTable:
    """Born probabilities p[m][j] of one state against a complete MUB set."""

    dim: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.dim + 1:
            raise ValueError("one row per basis expected")

    def entry(self, m, j):
        return self.rows[m][j]


@dataclass(frozen=True)
class ProfileClassification:
    """Per-basis sorted probability rows with their profile labels.

    Labels are "A" (heavy 5/12 profile), "B" (support-5 profile) or "Other";
    counts always sum to the number of bases.
    """

    labels: tuple
    counts: dict
    sorted_rows: tuple


def born_table(rho, mub, row_sum_tol=1e-10):
    """Probability table p[m][j] = <m,j|rho|m,j> for every basis vector."""
    if rho.dim != mub.dim:
        raise DimensionMismatch(f"state dim {rho.dim} vs MUB dim {mub.dim}")
    rows = []
    for basis in mub.bases:
        flat = [a for k in basis for a in k.amps]
        values = _kernels.quad_forms(rho.cells, flat, mub.dim, mub.dim)
        rows.append(ProbabilityVector([v.real for v in values], sum_tol=row_sum_tol))
    return ProbabilityTable(dim=mub.dim, rows=tuple(rows))


def two_design_sum(table):
    """Sum of squared probabilities over the whole table (2 for pure states
    measured against a complete MUB set)."""
    return sum(p * p for row in table.rows for p in row)


def min_uncertainty_profile(table, tol=TOL_CONSTRUCTED):
    """Per-basis sums of squared probabilities, checked against 2/(d+1)."""
    target = 2.0 / (table.dim + 1.0)
    sums = tuple(sum(p * p for p in row) for row in table.rows)
    worst = max(abs(s - target) for s in sums)
    report = VerificationReport.from_error(
        "min-uncertainty",
        table.dim,
        worst,
        tol,
        details={"target": target, "per_basis_sums": list(sums)},
    )
    return sums, report


def mub_balanced_check(table, tol=TOL_CONSTRUCTED):
    """Pass iff all rows agree entrywise after sorting (descending)."""
    sorted_rows = [tuple(sorted(row, reverse=True)) for row in table.rows]
    first = sorted_rows[0]
    worst = max(
        abs(a - b) for row in sorted_rows[1:] for a, b in zip(first, row)
    )
    return VerificationReport.from_error(
        "mub-balanced",
        table.dim,
        worst,
        tol,
        details={"bases": len(sorted_rows)},
    )


HOGGAR_PROFILE_A = (5 / 12,) + (1 / 12,) * 7
HOGGAR_PROFILE_B = (1 / 3,) + (1 / 6,) * 4 + (0.0,) * 3


def classify_hoggar_profiles(table, tol=1e-9):
    """Label each basis row of a d = 8 table as profile A, B or Other."""
    if table.dim != 8:
        raise DimensionMismatch("profile classification is defined for d = 8")
    labels = []
    sorted_rows = []
    for row in table.rows:
        srow = tuple(sorted(row, reverse=True))
        sorted_rows.append(srow)
        if max(abs(a - b) for a, b in zip(srow, HOGGAR_PROFILE_A)) <= tol:
            labels.append("A")
        elif max(abs(a - b) for a, b in zip(srow, HOGGAR_PROFILE_B)) <= tol:
            labels.append("B")
        else:
            labels.append("Other")
    counts = {
        "A": labels.count("A"),
        "B": labels.count("B"),
        "Other": labels.count("Other"),
    }
    return ProfileClassification(
        labels=tuple(labels), counts=counts, sorted_rows=tuple(sorted_rows)
    )


def dephasing_degeneracy(sic, basis, tol=TOL_CONSTRUCTED):
    """Partition states by equality of their dephased diagonals.

    ``sic`` may be a SicSet or any sequence of UnitKets (e.g. the union of
    both qubit tetrahedra). States land in the same group when their
    probability vectors against the basis agree entrywise within ``tol``
    (transitive closure). The check fails, with a structural penalty, if the
    closure is ambiguous: the gap between within-group and cross-group
    distances must be at least a factor of 10.
    """
    kets = sic.kets if isinstance(sic, SicSet) else tuple(sic)
    d = basis[0].dim
    if any(k.dim != d for k in kets):
        raise DimensionMismatch(f"state dim vs basis dim {d}")
    flat_basis = [a for k in basis for a in k.amps]
    flat_kets = [a for k in kets for a in k.amps]
    n = len(kets)
    g = _kernels.gram(flat_basis, d, flat_kets, n, d)
    diags = []
    for j in range(n):
        diags.append(
            tuple(
                g[i * n + j].real ** 2 + g[i * n + j].imag ** 2 for i in range(d)
            )
        )
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    max_within = 0.0
    min_cross = math.inf
    dist = [[0.0] * n for _ in range(n)]
    for j in range(n):
        for k in range(j + 1, n):
            djk = max(abs(a - b) for a, b in zip(diags[j], diags[k]))
            dist[j][k] = djk
            if djk <= tol:
                parent[find(j)] = find(k)
    members = {}
    for j in range(n):
        members.setdefault(find(j), []).append(j)
    groups = tuple(tuple(v) for _, v in sorted(members.items(), key=lambda kv: kv[1][0]))
    for j in range(n):
        for k in range(j + 1, n):
            if find(j) == find(k):
                max_within = max(max_within, dist[j][k])
            else:
                min_cross = min(min_cross, dist[j][k])
    gap_ok = min_cross >= 10.0 * tol
    err = max_within if gap_ok else max(max_within, STRUCTURAL_PENALTY)
    report = VerificationReport.from_error(
        "dephasing-degeneracy",
        d,
        err,
        tol,
        details={
            "group_sizes": sorted((len(gp) for gp in groups), reverse=True),
            "min_cross_distance": (None if min_cross is math.inf else min_cross),
            "gap_ok": gap_ok,
        },
    )
    return groups, report


def pauli_overlap_table(sic, tol=TOL_CONSTRUCTED, imag_tol=1e-12):
    """Check <pi_j|D_k|pi_j> = +-1/3 for every state and every nonidentity
    Hermitian three-qubit Pauli (1 for the identity), with real values."""
    if sic.provenance is not Provenance.HOGGAR:
        raise ValueError("overlap table is defined for the 64-state d = 8 set")
    flat_kets = [a for k in sic.kets for a in k.amps]
    n = len(sic.kets)
    worst = 0.0
    worst_imag = 0.0
    for label in three_qubit_labels():
        values = _kernels.quad_forms(pauli_matrix(label).cells, flat_kets, n, 8)
        for v in values:
            worst_imag = max(worst_imag, abs(v.imag))
            if label.is_identity:
                worst = max(worst, abs(v.real - 1.0))
            else:
                worst = max(worst, abs(abs(v.real) - 1.0 / 3.0))
    imag_ok = worst_imag <= imag_tol
    err = worst if imag_ok else max(worst, STRUCTURAL_PENALTY)
    return VerificationReport.from_error(
        "pauli-overlaps",
        8,
        err,
        tol,
        details={
            "states": n,
            "operators": 63,
            "max_imag": worst_imag,
            "imag_tolerance": imag_tol,
        },
    )


def equicoherence_residual(v):
    """Spread (max - min) of the pairwise coordinate-square sums x^2+y^2,
    x^2+z^2, y^2+z^2; zero exactly on the cube-vertex states."""
    s1 = v.x * v.x + v.y * v.y
    s2 = v.x * v.x + v.z * v.z
    s3 = v.y * v.y + v.z * v.z
    return max(s1, s2, s3) - min(s1, s2, s3)


_SCAN_KEEP = 0.08          # basin of each cube vertex; see solver docstring
_CLUSTER_COS = math.cos(0.1)
_REFINE_TARGET = 1e-12
_MIN_STEP = 1e-14


def _refine_on_sphere(x, y, z):
    """Projected coordinate descent with step backtracking."""
    res = equicoherence_residual(BlochVector(x, y, z))
    step = 0.01
    while res > _REFINE_TARGET and step >= _MIN_STEP:
        improved = False
        for axis in range(3):
            for sign in (1.0, -1.0):
                cx, cy, cz = x, y, z
                if axis == 0:
                    cx += sign * step
                elif axis == 1:
                    cy += sign * step
                else:
                    cz += sign * step
                norm = math.sqrt(cx * cx + cy * cy + cz * cz)
                cx, cy, cz = cx / norm, cy / norm, cz / norm
                cres = equicoherence_residual(BlochVector(cx, cy, cz))
                if cres < res:
                    x, y, z, res = cx, cy, cz, cres
                    improved = True
        if not improved:
            step *= 0.5
    return BlochVector(x, y, z), res


def solve_qubit_equicoherent(grid_points=100_000):
    """Bloch vectors equally off-diagonal in all three Pauli eigenbases.

    Scans a deterministic Fibonacci sphere lattice, keeps points inside the
    residual basins (which are disjoint caps around the eight cube
    vertices), merges them by single-linkage angular clustering at 0.1 rad,
    and refines each cluster representative to residual below 1e-12.

    The basin threshold is 0.08: at 1e5 points the lattice covering radius
    is about 0.01 rad while a residual bound of r keeps points within about
    r/1.5 rad of a vertex, so thresholds at or below roughly 0.02 leave
    basins empty. Raises GridTooCoarse below 1e4 points or when the scan
    does not resolve exactly eight clusters.
    """
    if grid_points < 10_000:
        raise GridTooCoarse("need at least 10^4 grid points")
    flat = _kernels.fib_candidates(grid_points, _SCAN_KEEP)
    pts = [(flat[i], flat[i + 1], flat[i + 2]) for i in range(0, len(flat), 3)]
    if not pts:
        raise GridTooCoarse("no grid point fell inside a residual basin")
    # single-linkage union by angular proximity
    parent = list(range(len(pts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(pts)):
        xi, yi, zi = pts[i]
        for j in range(i + 1, len(pts)):
            xj, yj, zj = pts[j]
            if xi * xj + yi * yj + zi * zj >= _CLUSTER_COS:
                parent[find(i)] = find(j)
    reps = {}
    for i in range(len(pts)):
        reps.setdefault(find(i), i)
    order = sorted(reps.values())
    if len(order) != 8:
        raise GridTooCoarse(f"expected 8 clusters, found {len(order)}")
    solutions = []
    for idx in order:
        refined, res = _refine_on_sphere(*pts[idx])
        if res > _REFINE_TARGET:
            raise GridTooCoarse(f"refinement stalled at residual {res:.3e}")
        solutions.append(refined)
    return solutions


def l1_equalization_check(sic, tol=TOL_IDENTITY):
    """Spread of the l1 coherence of each qubit SIC state across the three
    Pauli eigenbases (zero for cube-vertex states)."""
    if sic.provenance not in (Provenance.QUBIT_EVEN, Provenance.QUBIT_ODD):
        raise ValueError("l1 equalization is defined for the qubit sets")
    bases = build_mub(2).bases
    worst = 0.0
    values = []
    for ket in sic.kets:
        rho = ket.projector()
        vals = [coh_l1(rho, basis).value for basis in bases]
        values.append(vals)
        worst = max(worst, max(vals) - min(vals))
    return VerificationReport.from_error(
        "l1-equalization",
        2,
        worst,
        tol,
        details={"states": len(sic.kets), "value": values[0][0]},
    )
