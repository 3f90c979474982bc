"""Clifford arithmetic, group membership, and the vector-space projection."""

import random
from fractions import Fraction

import pytest

from gspinlab import linalg
from gspinlab.clifford import (
    CliffordBasis,
    CliffordElement,
    GSpinRejection,
    cliff_mul,
    embed,
    embed_gspin,
    involution,
    invert,
    is_gspin,
    project_so,
    random_element,
    random_gspin,
    spinor_norm,
)
from gspinlab.errors import (
    BasisMismatch,
    BasisNotExtension,
    DimensionCap,
    NotInvertible,
)
from gspinlab.fields import FieldTag
from gspinlab.quadspace import QuadraticSpace, standard_space


@pytest.fixture
def b2():
    return CliffordBasis(standard_space(diag=[1, 1]))


@pytest.fixture
def b3():
    return CliffordBasis(standard_space(diag=[1, 1, 1]))


def extension_tower(diag_entries, extra=1):
    """A space and its one-higher extension sharing the frozen basis prefix."""
    small = standard_space(diag=diag_entries)
    big = standard_space(diag=list(diag_entries) + [extra])
    return CliffordBasis(small), CliffordBasis(big)


class TestProduct:
    def test_anticommutation(self, b2):
        e1, e2 = b2.e(1), b2.e(2)
        assert cliff_mul(e1, e2) == b2.monomial([1, 2])
        assert cliff_mul(e2, e1) == -b2.monomial([1, 2])

    def test_vector_squares_to_q(self):
        basis = CliffordBasis(standard_space(diag=[7]))
        assert cliff_mul(basis.e(1), basis.e(1)) == basis.scalar(7)

    def test_bivector_square(self, b2):
        e12 = b2.monomial([1, 2])
        assert cliff_mul(e12, e12) == b2.scalar(-1)

    def test_basis_mismatch(self, b2, b3):
        with pytest.raises(BasisMismatch):
            cliff_mul(b2.e(1), b3.e(1))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_associativity(self, n, rng):
        basis = CliffordBasis(standard_space(diag=[1, -1, 2, 1, -2, 3][:n]))
        for _ in range(200):
            x = random_element(basis, rng, terms=3)
            y = random_element(basis, rng, terms=3)
            z = random_element(basis, rng, terms=3)
            assert cliff_mul(cliff_mul(x, y), z) == cliff_mul(x, cliff_mul(y, z))

    def test_even_dimension_count(self):
        for n in range(1, 11):
            count = sum(1 for m in range(1 << n) if m.bit_count() % 2 == 0)
            assert count == 1 << (n - 1)

    def test_dimension_cap(self):
        with pytest.raises(DimensionCap):
            CliffordBasis(standard_space(diag=[1] * 11))


class TestInvolution:
    def test_scalar_fixed(self, b2):
        assert involution(b2.scalar(5)) == b2.scalar(5)

    def test_bivector_negated(self, b2):
        e12 = b2.monomial([1, 2])
        assert involution(e12) == -e12
        # reversal computed by anticommutation: (e1 e2)* = e2 e1
        assert involution(e12) == cliff_mul(b2.e(2), b2.e(1))

    def test_grade_three_sign(self, b3):
        e123 = b3.monomial([1, 2, 3])
        assert involution(e123) == -e123

    def test_anti_automorphism(self, rng):
        basis = CliffordBasis(standard_space(diag=[1, 2, -1, 3]))
        for _ in range(100):
            x = random_element(basis, rng)
            y = random_element(basis, rng)
            assert involution(cliff_mul(x, y)) == cliff_mul(involution(y), involution(x))
            assert involution(involution(x)) == x


class TestSpinorNorm:
    def test_scalar(self, b2):
        assert spinor_norm(b2.scalar(3)) == Fraction(9)

    def test_bivector(self):
        basis = CliffordBasis(standard_space(diag=[2, 3]))
        assert spinor_norm(basis.monomial([1, 2])) == Fraction(6)

    def test_mixed_even(self, b2):
        x = b2.one() + b2.monomial([1, 2])
        assert spinor_norm(x) == Fraction(2)

    def test_nonscalar_result_returned_as_element(self, b2):
        x = b2.one() + b2.e(1)
        norm = spinor_norm(x)
        assert isinstance(norm, CliffordElement)


class TestInvert:
    def test_scalar(self, b2):
        assert invert(b2.scalar(2)) == b2.scalar(Fraction(1, 2))

    def test_vector(self):
        basis = CliffordBasis(standard_space(diag=[5]))
        assert invert(basis.e(1)) == basis.e(1).scale(Fraction(1, 5))

    def test_zero_divisor(self, b2):
        with pytest.raises(NotInvertible):
            invert(b2.one() + b2.e(1))

    def test_zero(self, b2):
        with pytest.raises(NotInvertible):
            invert(b2.zero())

    def test_linear_solve_path(self, b3):
        # non-versor mixed-grade unit: 2 + e123 has norm4 - e123^2 = ...
        x = b3.scalar(2) + b3.monomial([1, 2, 3])
        y = invert(x)
        assert cliff_mul(x, y) == b3.one()
        assert cliff_mul(y, x) == b3.one()


class TestGSpinMembership:
    def test_scalar_accepted(self, b2):
        cert = is_gspin(b2.scalar(5))
        assert cert.norm == Fraction(25)

    def test_odd_rejected(self, b2):
        rejection = is_gspin(b2.e(1))
        assert isinstance(rejection, GSpinRejection)
        assert rejection.clause == "even"

    def test_mixed_even_unit_accepted(self, b2):
        # 1 + e12 over diag(1,1): (1+e12)(1-e12) = 1 - (e12)^2 = 2, invertible
        cert = is_gspin(b2.one() + b2.monomial([1, 2]))
        assert not isinstance(cert, GSpinRejection)
        assert cert.norm == Fraction(2)

    def test_zero_divisor_rejected(self):
        basis = CliffordBasis(standard_space(diag=[1, -1]))
        # e12^2 = 1 here, so 1 + e12 is a zero divisor
        rejection = is_gspin(basis.one() + basis.monomial([1, 2]))
        assert isinstance(rejection, GSpinRejection)
        assert rejection.clause == "invertible"

    def test_bivector_certificate(self, b2):
        cert = is_gspin(b2.monomial([1, 2]))
        assert cert.norm == Fraction(1)
        assert cert.inverse == -b2.monomial([1, 2])

    def test_norm_multiplicative(self, rng):
        for n in (2, 3, 4, 5):
            basis = CliffordBasis(standard_space(diag=[1, 2, -1, 1, -3][:n]))
            for _ in range(30):
                g = random_gspin(basis, rng)
                h = random_gspin(basis, rng)
                cert = is_gspin(cliff_mul(g.element, h.element))
                assert not isinstance(cert, GSpinRejection)
                assert cert.norm == g.norm * h.norm


class TestProjection:
    def test_scalar_maps_to_identity(self, b3):
        cert = is_gspin(b3.scalar(4))
        assert project_so(cert) == linalg.identity(3, b3.field)

    def test_bivector_rotation(self, b2):
        cert = is_gspin(b2.monomial([1, 2]))
        m = project_so(cert)
        assert m == [[Fraction(-1), Fraction(0)], [Fraction(0), Fraction(-1)]]

    def test_prime_field_rotation(self):
        f5 = FieldTag.prime(5)
        basis = CliffordBasis(QuadraticSpace([[1, 0], [0, 1]], f5))
        g = (basis.one() + basis.monomial([1, 2])).scale(3)
        cert = is_gspin(g)
        m = project_so(cert)
        gram = [[basis.diag[0], 0], [0, basis.diag[1]]]
        back = linalg.matmul(
            linalg.matmul(linalg.transpose(m), gram, f5), m, f5
        )
        assert back == gram
        assert linalg.det(m, f5) == 1

    def test_homomorphism_preserves_form_and_det(self, rng):
        for n in (2, 3, 4):
            basis = CliffordBasis(standard_space(diag=[1, -1, 2, 1][:n]))
            field = basis.field
            gram = [[basis.diag[i] if i == j else field.zero() for j in range(n)] for i in range(n)]
            for _ in range(15):
                g = random_gspin(basis, rng)
                h = random_gspin(basis, rng)
                mg, mh = project_so(g), project_so(h)
                cert = is_gspin(cliff_mul(g.element, h.element))
                assert project_so(cert) == linalg.matmul(mg, mh, field)
                assert linalg.matmul(
                    linalg.matmul(linalg.transpose(mg), gram, field), mg, field
                ) == gram
                assert linalg.det(mg, field) == field.one()

    def test_kernel_is_scalars_only(self, rng):
        for n in (3, 4):
            basis = CliffordBasis(standard_space(diag=[1, 1, 1, 1][:n]))
            identity = linalg.identity(n, basis.field)
            nonscalar_seen = 0
            for _ in range(40):
                g = random_gspin(basis, rng)
                if g.element.is_scalar:
                    continue
                nonscalar_seen += 1
                assert project_so(g) != identity
            assert nonscalar_seen > 10


class TestEmbed:
    def test_scalar_transport(self):
        small, big = extension_tower([1, 1])
        moved = embed(small.scalar(3), big)
        assert moved == big.scalar(3)

    def test_certificate_transport(self, rng):
        small, big = extension_tower([1, 1])
        cert = is_gspin(small.monomial([1, 2]))
        again = embed_gspin(cert, big)
        assert not isinstance(again, GSpinRejection)
        assert again.norm == cert.norm

    def test_extension_precondition(self):
        small = CliffordBasis(standard_space(diag=[1, 1]))
        other = CliffordBasis(standard_space(diag=[2, 1, 1]))
        with pytest.raises(BasisNotExtension):
            embed(small.one(), other)

    def test_embed_preserves_products_and_norms(self, rng):
        small, big = extension_tower([1, -1, 2])
        for _ in range(25):
            g = random_gspin(small, rng)
            h = random_gspin(small, rng)
            product_then_embed = embed(cliff_mul(g.element, h.element), big)
            embed_then_product = cliff_mul(embed(g.element, big), embed(h.element, big))
            assert product_then_embed == embed_then_product
            moved = embed_gspin(g, big)
            assert moved.norm == g.norm


class TestSerialization:
    def test_round_trip(self, b3, rng):
        x = random_element(b3, rng, terms=5)
        doc = x.to_json()
        assert CliffordElement.from_json(doc, b3) == x

    def test_fraction_strings(self, b2):
        x = b2.monomial([1, 2], Fraction(-3, 2))
        doc = x.to_json()
        assert doc["terms"][0]["coeff"] == "-3/2"
        assert doc["terms"][0]["indices"] == [1, 2]

    def test_wrong_space_hash_rejected(self, b2, b3):
        doc = b2.one().to_json()
        with pytest.raises(BasisMismatch):
            CliffordElement.from_json(doc, b3)
