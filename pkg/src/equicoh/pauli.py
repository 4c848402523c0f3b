"""GF(8) arithmetic, Hermitian multi-qubit Pauli operators, and qutrit
Weyl-Heisenberg displacements.

Pauli labels are bit-string pairs (a, b); the single-qubit map is
(0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y with Y the standard Hermitian
matrix, so every labeled operator is Hermitian and unitary and all overlap
values <v|D|v> are real.
"""

import cmath
import functools
import itertools
import math
from dataclasses import dataclass

from .errors import DimensionTooLarge, MismatchedSize
from .numerics import ComplexMatrix

# GF(8) = GF(2)[x] / (x^3 + x + 1); elements are ints 0..7 in polynomial
# bit coordinates (bit k = coefficient of x^k).
GF8_MODULUS = 0b1011
GF8_ELEMENTS = tuple(range(8))


def _check_elem(x):
    if not isinstance(x, int) or not 0 <= x <= 7:
        raise ValueError(f"not a GF(8) element: {x!r}")


def gf8_add(x, y):
    _check_elem(x)
    _check_elem(y)
    return x ^ y


def gf8_mul(x, y):
    """Product modulo x^3 + x + 1."""
    _check_elem(x)
    _check_elem(y)
    r = 0
    for k in range(3):
        if (y >> k) & 1:
            r ^= x << k
    for k in (5, 4, 3):
        if (r >> k) & 1:
            r ^= GF8_MODULUS << (k - 3)
    return r


def gf8_inv(x):
    _check_elem(x)
    if x == 0:
        raise ZeroDivisionError("0 has no inverse in GF(8)")
    # nonzero elements form a cyclic group of order 7, so x^-1 = x^6
    r = 1
    for _ in range(6):
        r = gf8_mul(r, x)
    return r


def gf8_trace(x):
    """Field trace to GF(2): x + x^2 + x^4, always 0 or 1."""
    _check_elem(x)
    x2 = gf8_mul(x, x)
    x4 = gf8_mul(x2, x2)
    return x ^ x2 ^ x4


@functools.cache
def self_dual_basis():
    """First ordered GF(2)-basis (e1, e2, e3) of GF(8) with Tr(ei ej) = dij.

    With a self-dual basis the bit dot product of coordinate vectors equals
    the trace form Tr(xy), which is what makes the commuting-line
    construction in dimension 8 work; existence is assertion-checked here.
    """
    for cand in itertools.permutations(range(1, 8), 3):
        if all(
            gf8_trace(gf8_mul(cand[i], cand[j])) == (1 if i == j else 0)
            for i in range(3)
            for j in range(3)
        ):
            return cand
    raise AssertionError("no self-dual basis found for GF(8)")


def gf8_bits(x):
    """Coordinates of x in the self-dual basis (a tuple of 3 bits)."""
    basis = self_dual_basis()
    return tuple(gf8_trace(gf8_mul(e, x)) for e in basis)


@dataclass(frozen=True)
class PauliLabel:
    """n-qubit Pauli label: X-part bits ``a`` and Z-part bits ``b``."""

    n: int
    a: tuple
    b: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one qubit")
        if len(self.a) != self.n or len(self.b) != self.n:
            raise ValueError("bit strings must have length n")
        if any(bit not in (0, 1) for bit in self.a + self.b):
            raise ValueError("labels are bit strings")

    @classmethod
    def from_index(cls, n, j):
        """Label from the 2n-bit integer a||b (a in the high bits)."""
        bits = [(j >> k) & 1 for k in range(2 * n - 1, -1, -1)]
        return cls(n, tuple(bits[:n]), tuple(bits[n:]))

    @property
    def index(self):
        j = 0
        for bit in self.a + self.b:
            j = (j << 1) | bit
        return j

    @property
    def is_identity(self):
        return not any(self.a) and not any(self.b)


_SINGLE_QUBIT = {
    (0, 0): ((1 + 0j, 0j), (0j, 1 + 0j)),
    (1, 0): ((0j, 1 + 0j), (1 + 0j, 0j)),
    (0, 1): ((1 + 0j, 0j), (0j, -1 + 0j)),
    (1, 1): ((0j, -1j), (1j, 0j)),
}


@functools.cache
def pauli_matrix(label):
    """Hermitian unitary matrix realizing a PauliLabel (tensor product)."""
    if label.n > 4:
        raise DimensionTooLarge("Pauli matrices supported up to n = 4")
    m = ComplexMatrix.from_rows(_SINGLE_QUBIT[(label.a[0], label.b[0])])
    for ai, bi in zip(label.a[1:], label.b[1:]):
        m = m.kron(ComplexMatrix.from_rows(_SINGLE_QUBIT[(ai, bi)]))
    return m


def pauli_commutes(p, q):
    """True iff the two labeled operators commute (symplectic form is 0)."""
    if p.n != q.n:
        raise MismatchedSize(f"qubit counts differ: {p.n} vs {q.n}")
    s = sum(x * y for x, y in zip(p.a, q.b)) + sum(x * y for x, y in zip(q.a, p.b))
    return s % 2 == 0


@functools.cache
def three_qubit_labels():
    """All 64 three-qubit labels in index order j = a||b."""
    return tuple(PauliLabel.from_index(3, j) for j in range(64))


@functools.cache
def gf8_line_classes():
    """Nine maximal commuting classes of the 63 nonidentity labels.

    Class mu (mu = 0..7) is the line {(alpha, mu*alpha): alpha != 0} mapped
    to bit strings through the self-dual basis; the last class is the
    vertical line {(0, beta)}. Internal commutation is guaranteed by the
    trace form and asserted anyway.
    """
    classes = []
    for mu in range(8):
        ops = tuple(
            PauliLabel(3, gf8_bits(alpha), gf8_bits(gf8_mul(mu, alpha)))
            for alpha in range(1, 8)
        )
        classes.append(ops)
    classes.append(tuple(PauliLabel(3, (0, 0, 0), gf8_bits(beta)) for beta in range(1, 8)))
    for ops in classes:
        for p, q in itertools.combinations(ops, 2):
            assert pauli_commutes(p, q), f"class not commuting: {p} {q}"
    return tuple(classes)


@dataclass(frozen=True)
class QutritWHLabel:
    """Qutrit Weyl-Heisenberg label: shift power ``a`` and clock power ``b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a not in (0, 1, 2) or self.b not in (0, 1, 2):
            raise ValueError("trits must be 0, 1 or 2")


_OMEGA3 = cmath.exp(2j * math.pi / 3)


@functools.cache
def qutrit_displacement(label):
    """X^a Z^b with X|j> = |j+1 mod 3> and Z|j> = w^j |j>, w = exp(2 pi i/3)."""
    cells = [0j] * 9
    for j in range(3):
        cells[((j + label.a) % 3) * 3 + j] = _OMEGA3 ** (label.b * j)
    return ComplexMatrix(3, cells)


def all_qutrit_displacements():
    """The nine displacements ordered by (a, b)."""
    return tuple(qutrit_displacement(QutritWHLabel(a, b)) for a in range(3) for b in range(3))
