import itertools
import math

import pytest

from equicoh.errors import DimensionTooLarge, MismatchedSize
from equicoh.numerics import ComplexMatrix
from equicoh.pauli import (
    GF8_MODULUS,
    PauliLabel,
    QutritWHLabel,
    all_qutrit_displacements,
    gf8_add,
    gf8_bits,
    gf8_inv,
    gf8_line_classes,
    gf8_mul,
    gf8_trace,
    pauli_commutes,
    pauli_matrix,
    qutrit_displacement,
    self_dual_basis,
    three_qubit_labels,
)


def poly_mul_mod(x, y, modulus):
    """Independent oracle: schoolbook carry-less multiply, then long division."""
    prod = 0
    for k in range(x.bit_length()):
        if (x >> k) & 1:
            prod ^= y << k
    while prod.bit_length() >= modulus.bit_length():
        prod ^= modulus << (prod.bit_length() - modulus.bit_length())
    return prod


class TestGF8:
    def test_matches_long_division_oracle(self):
        for x in range(8):
            for y in range(8):
                assert gf8_mul(x, y) == poly_mul_mod(x, y, GF8_MODULUS)

    def test_zero_annihilates(self):
        assert all(gf8_mul(0, y) == 0 for y in range(8))

    def test_square_of_x(self):
        # x * x = x^2 at the representation level (bit 1 -> bit 2)
        assert gf8_mul(0b010, 0b010) == 0b100

    def test_reduction_case(self):
        # x^2 * x = x^3 = x + 1 after reduction by x^3 + x + 1
        assert gf8_mul(0b100, 0b010) == 0b011

    def test_commutative_and_distributive(self):
        for x, y, z in itertools.product(range(8), repeat=3):
            assert gf8_mul(x, y) == gf8_mul(y, x)
            assert gf8_mul(x, gf8_add(y, z)) == gf8_add(gf8_mul(x, y), gf8_mul(x, z))

    def test_nonzero_elements_cyclic_of_order_7(self):
        for x in range(1, 8):
            assert gf8_mul(x, gf8_inv(x)) == 1
            p = x
            for _ in range(6):
                p = gf8_mul(p, x)
            assert p == 1  # x^7 = 1

    def test_inv_of_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            gf8_inv(0)

    def test_trace_is_binary_and_linear(self):
        for x in range(8):
            assert gf8_trace(x) in (0, 1)
        for x, y in itertools.product(range(8), repeat=2):
            assert gf8_trace(gf8_add(x, y)) == gf8_trace(x) ^ gf8_trace(y)

    def test_self_dual_basis(self):
        e = self_dual_basis()
        for i in range(3):
            for j in range(3):
                assert gf8_trace(gf8_mul(e[i], e[j])) == (1 if i == j else 0)

    def test_bits_reconstruct_and_match_trace_form(self):
        e = self_dual_basis()
        for x in range(8):
            coords = gf8_bits(x)
            rebuilt = 0
            for c, basis_elem in zip(coords, e):
                if c:
                    rebuilt ^= basis_elem
            assert rebuilt == x
        # bit dot product equals the trace form
        for x, y in itertools.product(range(8), repeat=2):
            dot = sum(a * b for a, b in zip(gf8_bits(x), gf8_bits(y))) % 2
            assert dot == gf8_trace(gf8_mul(x, y))


def _mat(label):
    return pauli_matrix(label)


class TestPauliMatrices:
    def test_x_on_first_qubit(self):
        m = _mat(PauliLabel(3, (1, 0, 0), (0, 0, 0)))
        x = ComplexMatrix.from_rows([[0, 1], [1, 0]])
        i2 = ComplexMatrix.identity(2)
        assert m == x.kron(i2).kron(i2)

    def test_y_on_last_qubit(self):
        m = _mat(PauliLabel(3, (0, 0, 1), (0, 0, 1)))
        y = ComplexMatrix.from_rows([[0, -1j], [1j, 0]])
        i2 = ComplexMatrix.identity(2)
        assert m == i2.kron(i2).kron(y)

    def test_identity_label(self):
        assert _mat(PauliLabel(1, (0,), (0,))) == ComplexMatrix.identity(2)

    def test_all_64_hermitian_unitary(self):
        for label in three_qubit_labels():
            m = _mat(label)
            assert m.hermiticity_defect() <= 1e-14
            assert (m @ m).allclose(ComplexMatrix.identity(8), 1e-14)

    def test_trace_orthogonality(self):
        mats = [_mat(label) for label in three_qubit_labels()]
        for j, a in enumerate(mats):
            for k in range(j, len(mats)):
                tr = (a @ mats[k]).trace()
                want = 8.0 if j == k else 0.0
                assert abs(tr - want) <= 1e-12

    def test_label_index_roundtrip(self):
        for j in (0, 1, 32, 63):
            assert PauliLabel.from_index(3, j).index == j
        assert PauliLabel.from_index(3, 32).a == (1, 0, 0)

    def test_too_many_qubits(self):
        with pytest.raises(DimensionTooLarge):
            _mat(PauliLabel(5, (1,) * 5, (0,) * 5))


class TestCommutation:
    def test_x_vs_z_anticommute(self):
        x = PauliLabel(1, (1,), (0,))
        z = PauliLabel(1, (0,), (1,))
        assert not pauli_commutes(x, z)

    def test_xx_vs_zz_commute(self):
        xx = PauliLabel(2, (1, 1), (0, 0))
        zz = PauliLabel(2, (0, 0), (1, 1))
        assert pauli_commutes(xx, zz)

    def test_identity_commutes_with_everything(self):
        ident = PauliLabel(3, (0, 0, 0), (0, 0, 0))
        assert all(pauli_commutes(ident, q) for q in three_qubit_labels())

    def test_mismatched_size(self):
        with pytest.raises(MismatchedSize):
            pauli_commutes(PauliLabel(1, (1,), (0,)), PauliLabel(2, (1, 0), (0, 0)))

    def test_symplectic_form_matches_matrix_commutator(self):
        labels = three_qubit_labels()
        mats = [_mat(label) for label in labels]
        for j, p in enumerate(labels):
            for k in range(j, len(labels)):
                comm = (mats[j] @ mats[k] - mats[k] @ mats[j]).frobenius_norm()
                assert pauli_commutes(p, labels[k]) == (comm <= 1e-12)

    def test_line_classes_partition_nonidentity_labels(self):
        classes = gf8_line_classes()
        assert len(classes) == 9
        seen = set()
        for ops in classes:
            assert len(ops) == 7
            seen.update(ops)
            for p, q in itertools.combinations(ops, 2):
                assert pauli_commutes(p, q)
        assert len(seen) == 63
        assert all(not label.is_identity for label in seen)


class TestQutritDisplacements:
    def test_identity_label(self):
        assert qutrit_displacement(QutritWHLabel(0, 0)) == ComplexMatrix.identity(3)

    def test_shift_action(self):
        m = qutrit_displacement(QutritWHLabel(1, 0))
        assert m.apply((1, 0, 0)) == (0, 1, 0)

    def test_clock_diagonal(self):
        m = qutrit_displacement(QutritWHLabel(0, 1))
        w = complex(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))
        assert m[0, 0] == 1
        assert abs(m[1, 1] - w) < 1e-15
        assert abs(m[2, 2] - w * w) < 1e-15

    def test_unitary(self):
        for m in all_qutrit_displacements():
            assert (m.dagger() @ m).allclose(ComplexMatrix.identity(3), 1e-14)

    def test_trace_orthogonality(self):
        mats = all_qutrit_displacements()
        for a in mats:
            for b in mats:
                tr = (a.dagger() @ b).trace()
                want = 3.0 if a == b else 0.0
                assert abs(tr - want) <= 1e-12

    def test_nine_distinct(self):
        assert len(set(all_qutrit_displacements())) == 9

    def test_bad_trit_rejected(self):
        with pytest.raises(ValueError):
            QutritWHLabel(3, 0)
