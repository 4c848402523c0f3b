import itertools
import math

import pytest

from equicoh.designs import (
    BlochVector,
    MubCollection,
    Provenance,
    SicSet,
    bloch_to_ket,
    build_mub,
    check_mub_unbiased,
    check_sic_overlaps,
)
from equicoh.errors import DimensionMismatch, NotPure
from equicoh.numerics import ComplexMatrix, UnitKet
from equicoh.pauli import (
    PauliLabel,
    all_qutrit_displacements,
    gf8_line_classes,
    pauli_matrix,
    three_qubit_labels,
)

INV_SQRT3 = 1 / math.sqrt(3)


class TestBlochToKet:
    def test_north_pole(self):
        assert bloch_to_ket(BlochVector(0, 0, 1)).amps == (1, 0)

    def test_south_pole(self):
        assert bloch_to_ket(BlochVector(0, 0, -1)).amps == (0, 1)

    def test_plus_x(self):
        k = bloch_to_ket(BlochVector(1, 0, 0))
        assert abs(k.amps[0] - 1 / math.sqrt(2)) < 1e-15
        assert abs(k.amps[1] - 1 / math.sqrt(2)) < 1e-15

    def test_projector_matches_pauli_expansion(self):
        v = BlochVector(INV_SQRT3, INV_SQRT3, INV_SQRT3)
        rho = bloch_to_ket(v).projector()
        sx = pauli_matrix(PauliLabel(1, (1,), (0,)))
        sy = pauli_matrix(PauliLabel(1, (1,), (1,)))
        sz = pauli_matrix(PauliLabel(1, (0,), (1,)))
        want = (
            ComplexMatrix.identity(2)
            + sx.scale(v.x)
            + sy.scale(v.y)
            + sz.scale(v.z)
        ).scale(0.5)
        assert rho.allclose(want, 1e-12)
        # expectation values reproduce the coordinates
        assert abs((rho @ sz).trace().real - INV_SQRT3) < 1e-12

    def test_rejects_mixed_point(self):
        with pytest.raises(NotPure):
            bloch_to_ket(BlochVector(0, 0, 0.5))


class TestQubitSics:
    def test_even_contains_all_plus_vertex(self, qubit_sics):
        even, _ = qubit_sics
        target = bloch_to_ket(BlochVector(INV_SQRT3, INV_SQRT3, INV_SQRT3))
        assert any(k.overlap_sq(target) > 1 - 1e-12 for k in even.kets)

    def test_overlap_law(self, qubit_sics):
        for sic in qubit_sics:
            for j, k in itertools.combinations(range(4), 2):
                assert abs(sic.kets[j].overlap_sq(sic.kets[k]) - 1 / 3) < 1e-12

    def test_cross_set_antipodes_orthogonal(self, qubit_sics):
        even, odd = qubit_sics
        for k in even.kets:
            assert any(k.overlap_sq(m) < 1e-12 for m in odd.kets)

    def test_pauli_conjugation_closure(self, qubit_sics):
        labels = [PauliLabel(1, a, b) for a, b in (((1,), (0,)), ((1,), (1,)), ((0,), (1,)))]
        for sic in qubit_sics:
            for label in labels:
                u = pauli_matrix(label)
                for ket in sic.kets:
                    moved = UnitKet.from_amps(u.apply(ket.amps))
                    assert any(moved.overlap_sq(k) > 1 - 1e-10 for k in sic.kets)


class TestHesse:
    def test_nine_states(self, hesse):
        assert len(hesse.kets) == 9
        assert hesse.provenance is Provenance.HESSE

    def test_overlap_law_quarter(self, hesse):
        for j, k in itertools.combinations(range(9), 2):
            assert abs(hesse.kets[j].overlap_sq(hesse.kets[k]) - 0.25) < 1e-12

    def test_orbit_ordering(self, hesse):
        # state j = 3a + b is the displaced fiducial
        fid = hesse.kets[0]
        for j, disp in enumerate(all_qutrit_displacements()):
            moved = UnitKet.from_amps(disp.apply(fid.amps))
            assert moved.overlap_sq(hesse.kets[j]) > 1 - 1e-12

    def test_displacement_closure(self, hesse):
        for disp in all_qutrit_displacements():
            for ket in hesse.kets:
                moved = UnitKet.from_amps(disp.apply(ket.amps))
                assert any(moved.overlap_sq(k) > 1 - 1e-10 for k in hesse.kets)


class TestHoggar:
    def test_sixty_four_states(self, hoggar):
        assert len(hoggar.kets) == 64
        assert hoggar.provenance is Provenance.HOGGAR

    def test_projector_cross_traces(self, hoggar):
        # tr Pi_j Pi_k = 1/9 off the diagonal, 1 on it
        for j in (0, 17, 63):
            pj = hoggar.kets[j].projector()
            for k in (0, 5, 40):
                val = (pj @ hoggar.kets[k].projector()).trace().real
                want = 1.0 if j == k else 1 / 9
                assert abs(val - want) < 1e-12

    def test_orbit_ordering_matches_labels(self, hoggar):
        fid = hoggar.kets[0]
        for j in (1, 9, 32, 63):
            label = three_qubit_labels()[j]
            moved = UnitKet.from_amps(pauli_matrix(label).apply(fid.amps))
            assert moved.overlap_sq(hoggar.kets[j]) > 1 - 1e-12

    def test_pauli_conjugation_closure(self, hoggar):
        for label in three_qubit_labels()[::7]:
            u = pauli_matrix(label)
            for ket in hoggar.kets[::5]:
                moved = UnitKet.from_amps(u.apply(ket.amps))
                assert any(moved.overlap_sq(k) > 1 - 1e-10 for k in hoggar.kets)


class TestBuilderDeterminism:
    def test_bitwise_identical_rebuilds(self, qubit_sics, hesse, hoggar, mub8):
        from equicoh.designs import (
            build_hesse_sic,
            build_hoggar_sic,
            build_mub,
            build_qubit_sics,
        )

        again = build_qubit_sics()
        for a, b in zip(qubit_sics, again):
            assert all(x.amps == y.amps for x, y in zip(a.kets, b.kets))
        assert all(x.amps == y.amps for x, y in zip(hesse.kets, build_hesse_sic().kets))
        assert all(x.amps == y.amps for x, y in zip(hoggar.kets, build_hoggar_sic().kets))
        rebuilt = build_mub(8)
        for ba, bb in zip(mub8.bases, rebuilt.bases):
            assert all(x.amps == y.amps for x, y in zip(ba, bb))


class TestMub:
    def test_shapes(self, mub2, mub3, mub8):
        assert len(mub2.bases) == 3 and all(len(b) == 2 for b in mub2.bases)
        assert len(mub3.bases) == 4 and all(len(b) == 3 for b in mub3.bases)
        assert len(mub8.bases) == 9 and all(len(b) == 8 for b in mub8.bases)

    def test_fourier_vs_computational(self, mub3):
        for j in range(3):
            for k in range(3):
                assert abs(mub3.bases[0][j].overlap_sq(mub3.bases[1][k]) - 1 / 3) < 1e-12

    def test_full_unbiasedness_oracle(self, mub2, mub3, mub8):
        # exhaustive pairwise scan (the d = 8 case covers 9*8*8*7/2 pairs)
        for mub in (mub2, mub3, mub8):
            d = mub.dim
            for m1, m2 in itertools.combinations(range(d + 1), 2):
                for v1 in mub.bases[m1]:
                    for v2 in mub.bases[m2]:
                        assert abs(v1.overlap_sq(v2) - 1 / d) < 1e-10
            report = check_mub_unbiased(mub)
            assert report.passed and report.max_abs_error < 1e-10

    def test_d8_vectors_are_joint_eigenvectors(self, mub8):
        # every basis vector is a +-1 eigenvector of all 7 class operators
        for ops, basis in zip(gf8_line_classes(), mub8.bases):
            for label in ops:
                mat = pauli_matrix(label)
                for ket in basis:
                    image = mat.apply(ket.amps)
                    sign = 1.0 if sum(
                        (a.conjugate() * b).real for a, b in zip(ket.amps, image)
                    ) > 0 else -1.0
                    residual = math.sqrt(
                        sum(abs(i - sign * a) ** 2 for i, a in zip(image, ket.amps))
                    )
                    assert residual <= 1e-9

    def test_d8_seed_recorded_and_overridable(self, mub8):
        assert mub8.seed == 11
        other = build_mub(8, seed=123)
        assert other.seed == 123
        assert check_mub_unbiased(other).passed

    def test_unsupported_dimension(self):
        with pytest.raises(DimensionMismatch):
            build_mub(5)


class TestCheckers:
    def test_corrupted_sic_fails(self, hesse):
        basis_vec = UnitKet((1, 0, 0))
        corrupt = SicSet(
            dim=3, kets=(basis_vec,) + hesse.kets[1:], provenance=Provenance.HESSE
        )
        assert not check_sic_overlaps(corrupt).passed

    def test_duplicate_basis_mub_fails(self, mub3):
        corrupt = MubCollection(dim=3, bases=(mub3.bases[0],) + mub3.bases[:3])
        assert not check_mub_unbiased(corrupt).passed

    def test_report_fields(self, hoggar):
        report = check_sic_overlaps(hoggar)
        assert report.check == "sic-overlaps"
        assert report.dimension == 8
        assert report.passed == (report.max_abs_error <= report.tolerance)
        assert report.details["target_offdiag"] == pytest.approx(1 / 9)
