"""Command-line interface: build design files, run the verification suite,
probe coherence values.

Subcommands:

* ``equicoh build (sic|mub) --dimension {2,3,8} --output PATH [--seed N]``
* ``equicoh verify [--check NAME]... [--dimension D] [--tolerance X]
  [--format text|json|csv] [--output PATH] [--seed N]``
* ``equicoh probe --state SPEC --basis SPEC --measure NAME``

``verify`` exits 0 iff every emitted record passed, 1 if any failed, 2 on
internal error. Reports are emitted in a fixed canonical order and identical
invocations produce byte-identical output (flags only; no config files or
environment variables are consulted).
"""

import argparse
import csv
import io
import math
import random
import sys

from . import __version__
from .analysis import (
    HOGGAR_PROFILE_A,
    HOGGAR_PROFILE_B,
    STRUCTURAL_PENALTY,
    born_table,
    classify_hoggar_profiles,
    dephasing_degeneracy,
    l1_equalization_check,
    min_uncertainty_profile,
    mub_balanced_check,
    pauli_overlap_table,
    solve_qubit_equicoherent,
    two_design_sum,
)
from .coherence import Measure, check_offdiag_identity, coherence_value
from .designs import (
    BlochVector,
    Provenance,
    bloch_to_ket,
    build_hesse_sic,
    build_hoggar_sic,
    build_mub,
    build_qubit_sics,
    check_mub_unbiased,
    check_sic_overlaps,
)
from .errors import EquicohError, GridTooCoarse
from .numerics import random_ket
from .report import VerificationReport
from .serialize import dumps_stable, format_float, read_design, write_design

CHECK_ORDER = (
    ("sic-overlaps", (2, 3, 8)),
    ("mub-unbiased", (2, 3, 8)),
    ("two-design", (2, 3, 8)),
    ("min-uncertainty", (2, 3, 8)),
    ("mub-balanced", (2, 3)),
    ("hoggar-profiles", (8,)),
    ("dephasing-degeneracy", (8,)),
    ("pauli-overlaps", (8,)),
    ("offdiag-identity", (2, 3, 8)),
    ("l1-equalization", (2,)),
    ("qubit-solver", (2,)),
)

CHECK_NAMES = tuple(name for name, _ in CHECK_ORDER)

# identity-class checks assert exact algebra; the rest check constructed objects
IDENTITY_CHECKS = frozenset({"offdiag-identity", "l1-equalization"})

DEFAULT_TOLERANCES = {
    "sic-overlaps": 1e-10,
    "mub-unbiased": 1e-10,
    "two-design": 1e-9,
    "min-uncertainty": 1e-10,
    "mub-balanced": 1e-10,
    "hoggar-profiles": 1e-9,
    "dephasing-degeneracy": 1e-10,
    "pauli-overlaps": 1e-10,
    "offdiag-identity": 1e-12,
    "l1-equalization": 1e-12,
    "qubit-solver": 1e-6,
}

_OFFDIAG_SAMPLES = 1000
_OFFDIAG_SEED_BASE = 1729
_SOLVER_GRID = 100_000
_SQRT3 = 3.0 ** 0.5


class _DesignCache:
    """Build each design at most once per verify run."""

    def __init__(self, mub_seed=None):
        self.mub_seed = mub_seed
        self._sics = {}
        self._mubs = {}

    def sics(self, d):
        if d not in self._sics:
            if d == 2:
                self._sics[d] = list(build_qubit_sics())
            elif d == 3:
                self._sics[d] = [build_hesse_sic()]
            else:
                self._sics[d] = [build_hoggar_sic()]
        return self._sics[d]

    def mub(self, d):
        if d not in self._mubs:
            self._mubs[d] = build_mub(d, seed=self.mub_seed if d == 8 else None)
        return self._mubs[d]


def _merge_reports(check, dimension, tolerance, reports, details):
    worst = max(r.max_abs_error for r in reports)
    return VerificationReport.from_error(check, dimension, worst, tolerance, details)


def _run_sic_overlaps(cache, d, tol):
    reports = [check_sic_overlaps(s, tol=tol) for s in cache.sics(d)]
    details = {r.details["provenance"]: r.max_abs_error for r in reports}
    details["target_offdiag"] = 1.0 / (d + 1.0)
    return _merge_reports("sic-overlaps", d, tol, reports, details)


def _run_mub_unbiased(cache, d, tol):
    report = check_mub_unbiased(cache.mub(d), tol=tol)
    return VerificationReport.from_error(
        "mub-unbiased", d, report.max_abs_error, tol, dict(report.details)
    )


def _tables(cache, d):
    mub = cache.mub(d)
    for sic in cache.sics(d):
        for ket in sic.kets:
            yield born_table(ket.projector(), mub)


def _run_two_design(cache, d, tol):
    worst = 0.0
    count = 0
    for table in _tables(cache, d):
        worst = max(worst, abs(two_design_sum(table) - 2.0))
        count += 1
    return VerificationReport.from_error(
        "two-design", d, worst, tol, {"states": count, "target": 2.0}
    )


def _run_min_uncertainty(cache, d, tol):
    worst = 0.0
    count = 0
    for table in _tables(cache, d):
        _, report = min_uncertainty_profile(table, tol=tol)
        worst = max(worst, report.max_abs_error)
        count += 1
    return VerificationReport.from_error(
        "min-uncertainty",
        d,
        worst,
        tol,
        {"states": count, "target": 2.0 / (d + 1.0)},
    )


def _run_mub_balanced(cache, d, tol):
    worst = 0.0
    count = 0
    for table in _tables(cache, d):
        worst = max(worst, mub_balanced_check(table, tol=tol).max_abs_error)
        count += 1
    return VerificationReport.from_error(
        "mub-balanced", d, worst, tol, {"states": count, "expectation": "balanced"}
    )


def _run_hoggar_profiles(cache, d, tol):
    worst = 0.0
    bad_counts = 0
    balanced_states = 0
    for table in _tables(cache, 8):
        cls = classify_hoggar_profiles(table, tol=tol)
        if cls.counts != {"A": 2, "B": 7, "Other": 0}:
            bad_counts += 1
        for label, srow in zip(cls.labels, cls.sorted_rows):
            if label == "A":
                target = HOGGAR_PROFILE_A
            elif label == "B":
                target = HOGGAR_PROFILE_B
            else:
                continue
            worst = max(worst, max(abs(a - b) for a, b in zip(srow, target)))
        if mub_balanced_check(table, tol=1e-10).passed:
            balanced_states += 1
    err = worst
    if bad_counts or balanced_states:
        err = max(err, STRUCTURAL_PENALTY)
    return VerificationReport.from_error(
        "hoggar-profiles",
        8,
        err,
        tol,
        {
            "expected_counts": {"A": 2, "B": 7, "Other": 0},
            "states_off_pattern": bad_counts,
            "balanced_states": balanced_states,
        },
    )


def _run_dephasing_degeneracy(cache, d, tol):
    sic = cache.sics(8)[0]
    mub = cache.mub(8)
    worst = 0.0
    size_violations = 0
    for basis in mub.bases:
        groups, report = dephasing_degeneracy(sic, basis, tol=tol)
        worst = max(worst, report.max_abs_error)
        if sorted(len(g) for g in groups) != [8] * 8:
            size_violations += 1
    if size_violations:
        worst = max(worst, STRUCTURAL_PENALTY)
    return VerificationReport.from_error(
        "dephasing-degeneracy",
        8,
        worst,
        tol,
        {
            "bases": 9,
            "expected_groups": "8 groups of 8",
            "bases_off_pattern": size_violations,
        },
    )


def _run_pauli_overlaps(cache, d, tol):
    report = pauli_overlap_table(cache.sics(8)[0], tol=tol)
    return VerificationReport.from_error(
        "pauli-overlaps", 8, report.max_abs_error, tol, dict(report.details)
    )


def _run_offdiag_identity(cache, d, tol):
    mub = cache.mub(d)
    rng = random.Random(_OFFDIAG_SEED_BASE + d)
    worst = 0.0
    for _ in range(_OFFDIAG_SAMPLES):
        rho = random_ket(d, rng).projector()
        for basis in mub.bases:
            worst = max(worst, check_offdiag_identity(rho, basis, tol=tol).max_abs_error)
    return VerificationReport.from_error(
        "offdiag-identity",
        d,
        worst,
        tol,
        {"samples": _OFFDIAG_SAMPLES, "seed": _OFFDIAG_SEED_BASE + d},
    )


def _run_l1_equalization(cache, d, tol):
    reports = [l1_equalization_check(s, tol=tol) for s in cache.sics(2)]
    return _merge_reports(
        "l1-equalization",
        2,
        tol,
        reports,
        {"states": 8, "value": reports[0].details["value"]},
    )


def _vertex_angle(v):
    """Angle to the nearest cube vertex."""
    best = math.inf
    for sx in (1.0, -1.0):
        for sy in (1.0, -1.0):
            for sz in (1.0, -1.0):
                dot = (v.x * sx + v.y * sy + v.z * sz) / _SQRT3
                best = min(best, math.acos(max(-1.0, min(1.0, dot))))
    return best


def _run_qubit_solver(cache, d, tol):
    try:
        solutions = solve_qubit_equicoherent(_SOLVER_GRID)
    except GridTooCoarse as exc:
        return VerificationReport.from_error(
            "qubit-solver", 2, STRUCTURAL_PENALTY, tol, {"error": str(exc)}
        )
    worst = max(_vertex_angle(v) for v in solutions)
    even = sum(1 for v in solutions if v.x * v.y * v.z > 0)
    err = worst
    if len(solutions) != 8 or even != 4:
        err = max(err, STRUCTURAL_PENALTY)
    return VerificationReport.from_error(
        "qubit-solver",
        2,
        err,
        tol,
        {
            "grid_points": _SOLVER_GRID,
            "solutions": len(solutions),
            "even_parity": even,
            "odd_parity": len(solutions) - even,
        },
    )


_RUNNERS = {
    "sic-overlaps": _run_sic_overlaps,
    "mub-unbiased": _run_mub_unbiased,
    "two-design": _run_two_design,
    "min-uncertainty": _run_min_uncertainty,
    "mub-balanced": _run_mub_balanced,
    "hoggar-profiles": _run_hoggar_profiles,
    "dephasing-degeneracy": _run_dephasing_degeneracy,
    "pauli-overlaps": _run_pauli_overlaps,
    "offdiag-identity": _run_offdiag_identity,
    "l1-equalization": _run_l1_equalization,
    "qubit-solver": _run_qubit_solver,
}


def _resolve_tolerance(check, args):
    if args.tolerance is not None:
        return args.tolerance
    if check in IDENTITY_CHECKS:
        if args.identity_tolerance is not None:
            return args.identity_tolerance
    elif args.construction_tolerance is not None:
        return args.construction_tolerance
    return DEFAULT_TOLERANCES[check]


def run_verify(args):
    cache = _DesignCache(mub_seed=args.seed)
    selected = set(args.check) if args.check else set(CHECK_NAMES)
    records = []
    for check, dims in CHECK_ORDER:
        if check not in selected:
            continue
        for d in dims:
            if args.dimension is not None and d != args.dimension:
                continue
            tol = _resolve_tolerance(check, args)
            records.append(_RUNNERS[check](cache, d, tol))
    return records


def _compact(value):
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, dict):
        return "{" + " ".join(f"{k}:{_compact(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + " ".join(_compact(v) for v in value) + "]"
    return str(value)


def render_text(records):
    lines = []
    for r in records:
        status = "PASS" if r.passed else "FAIL"
        detail = " ".join(f"{k}={_compact(v)}" for k, v in r.details.items())
        lines.append(
            f"[{status}] {r.check} d={r.dimension} "
            f"max_err={format_float(r.max_abs_error)} tol={format_float(r.tolerance)} {detail}"
        )
    return "\n".join(lines) + "\n"


def render_json(records):
    return dumps_stable([r.to_record() for r in records]) + "\n"


def render_csv(records):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check", "dimension", "passed", "max_abs_error", "tolerance", "details"])
    for r in records:
        writer.writerow(
            [
                r.check,
                r.dimension,
                str(r.passed).lower(),
                format_float(r.max_abs_error),
                format_float(r.tolerance),
                ";".join(f"{k}={_compact(v)}" for k, v in r.details.items()),
            ]
        )
    return buf.getvalue()


_RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def _emit(text, output):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args):
    records = run_verify(args)
    _emit(_RENDERERS[args.format](records), args.output)
    return 0 if all(r.passed for r in records) else 1


def cmd_build(args):
    if args.kind == "sic":
        if args.dimension == 2:
            even, odd = build_qubit_sics()
            design = even if args.parity == "even" else odd
        elif args.dimension == 3:
            design = build_hesse_sic()
        else:
            design = build_hoggar_sic()
    else:
        design = build_mub(args.dimension, seed=args.seed)
    write_design(args.output, design)
    return 0


def _parse_state(spec, cache):
    kind, _, rest = spec.partition(":")
    if kind == "bloch":
        x, y, z = (float(t) for t in rest.split(","))
        return bloch_to_ket(BlochVector(x, y, z))
    if kind in ("hoggar", "hesse", "qubit-even", "qubit-odd"):
        index = int(rest)
        if kind == "hoggar":
            sic = cache.sics(8)[0]
        elif kind == "hesse":
            sic = cache.sics(3)[0]
        else:
            sic = cache.sics(2)[0 if kind == "qubit-even" else 1]
        return sic.kets[index]
    if kind == "file":
        path, _, index = rest.rpartition(":")
        design = read_design(path)
        kets = (
            design.kets
            if hasattr(design, "kets")
            else [k for basis in design.bases for k in basis]
        )
        return kets[int(index)]
    raise ValueError(f"unknown state spec {spec!r}")


def _parse_basis(spec, cache):
    kind, _, rest = spec.partition(":")
    if kind == "mub":
        dim_s, _, m_s = rest.partition(":")
        return cache.mub(int(dim_s)).bases[int(m_s)]
    if kind == "computational":
        d = int(rest)
        return cache.mub(d).bases[0] if d in (2, 3) else _computational(d)
    if kind == "file":
        path, _, m_s = rest.rpartition(":")
        design = read_design(path)
        if not hasattr(design, "bases"):
            raise ValueError("basis file must hold a MUB collection")
        return design.bases[int(m_s)]
    raise ValueError(f"unknown basis spec {spec!r}")


def _computational(d):
    from .numerics import UnitKet

    return tuple(
        UnitKet([1 if i == j else 0 for i in range(d)]) for j in range(d)
    )


def cmd_probe(args):
    cache = _DesignCache()
    ket = _parse_state(args.state, cache)
    basis = _parse_basis(args.basis, cache)
    if ket.dim != basis[0].dim:
        raise ValueError(f"state dim {ket.dim} vs basis dim {basis[0].dim}")
    rho = ket.projector()
    value = coherence_value(args.measure, rho, basis)
    probs = [ket.overlap_sq(b) for b in basis]
    sys.stdout.write(f"measure={value.measure.value} value={format_float(value.value)}\n")
    sys.stdout.write("born_row " + " ".join(format_float(p) for p in probs) + "\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="equicoh",
        description="Construct SIC/MUB designs (d = 2, 3, 8) and verify their "
        "coherence, 2-design and uncertainty properties.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="write a design file")
    p_build.add_argument("kind", choices=("sic", "mub"))
    p_build.add_argument("--dimension", type=int, choices=(2, 3, 8), required=True)
    p_build.add_argument("--output", required=True)
    p_build.add_argument("--seed", type=int, default=None, help="d = 8 MUB coefficient seed")
    p_build.add_argument(
        "--parity",
        choices=("even", "odd"),
        default="even",
        help="which qubit tetrahedron to export (sic, d = 2 only)",
    )
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument(
        "--check", action="append", choices=CHECK_NAMES, help="restrict to named checks"
    )
    p_verify.add_argument("--dimension", type=int, choices=(2, 3, 8), default=None)
    p_verify.add_argument("--tolerance", type=float, default=None, help="override every tolerance")
    p_verify.add_argument(
        "--construction-tolerance",
        type=float,
        default=None,
        help="override tolerances of constructed-object checks",
    )
    p_verify.add_argument(
        "--identity-tolerance",
        type=float,
        default=None,
        help="override tolerances of algebraic-identity checks",
    )
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_verify.add_argument("--output", default=None)
    p_verify.add_argument("--seed", type=int, default=None, help="d = 8 MUB coefficient seed")
    p_verify.set_defaults(func=cmd_verify)

    p_probe = sub.add_parser("probe", help="coherence of one state in one basis")
    p_probe.add_argument(
        "--state",
        required=True,
        help="hoggar:J | hesse:J | qubit-even:J | qubit-odd:J | bloch:X,Y,Z | file:PATH:J",
    )
    p_probe.add_argument(
        "--basis", required=True, help="mub:D:M | computational:D | file:PATH:M"
    )
    p_probe.add_argument(
        "--measure", required=True, choices=tuple(m.value for m in Measure)
    )
    p_probe.set_defaults(func=cmd_probe)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EquicohError, ValueError, OSError, KeyError, IndexError) as exc:
        print(f"equicoh: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
