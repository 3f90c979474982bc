"""Even-algebra classification, quaternion data, and low-rank witnesses."""

from fractions import Fraction
from itertools import product

import pytest

from gspinlab.clifford import CliffordBasis, cliff_mul, involution
from gspinlab.errors import DimensionCap, HypothesisViolation, NotSplit
from gspinlab.fields import FieldTag
from gspinlab.quadspace import QuadraticSpace, standard_space
from gspinlab.structure import (
    center_basis,
    classify_even_clifford,
    quaternion_data,
    spin_module_split,
    verify_low_rank,
)

INVOLUTION_TABLE = {
    0: "orthogonal",
    1: "orthogonal",
    2: "unitary",
    3: "symplectic",
    4: "symplectic",
    5: "symplectic",
    6: "unitary",
    7: "orthogonal",
}


class TestCenter:
    def test_odd_rank_center_is_scalars(self):
        assert center_basis(standard_space(diag=[1, 1, 1])) == [
            CliffordBasis(standard_space(diag=[1, 1, 1])).one()
        ]

    def test_rank_two_center_is_whole_even_part(self):
        center = center_basis(standard_space(diag=[1, -1]))
        assert len(center) == 2

    def test_rank_four_volume_element(self):
        space = standard_space(hyperbolic=2)
        center = center_basis(space)
        assert len(center) == 2
        z = next(el for el in center if not el.is_scalar)
        z_sq = cliff_mul(z, z)
        assert z_sq.is_scalar
        # split center: z^2 is a nonzero square, idempotents exist
        c = z_sq.scalar_part()
        field = space.field
        assert field.is_square(c) and not field.is_zero(c)
        root = field.sqrt(c)
        basis = z.basis
        half = Fraction(1, 2)
        idem = (basis.one() + z.scale(field.inv(root))).scale(half)
        assert cliff_mul(idem, idem) == idem

    def test_center_elements_commute_with_random_even(self, rng):
        from gspinlab.clifford import random_element

        space = standard_space(diag=[2, -1, 3, 1])
        center = center_basis(space)
        basis = CliffordBasis(space)
        for el in center:
            for _ in range(20):
                x = random_element(basis, rng, even=True)
                assert cliff_mul(el, x) == cliff_mul(x, el)

    def test_dimension_cap(self):
        with pytest.raises(DimensionCap):
            center_basis(standard_space(diag=[1] * 9))


class TestClassification:
    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("field", [FieldTag.rationals(), FieldTag.prime(5)])
    def test_mod8_involution_table(self, n, field, rng):
        for _ in range(5):
            if field.kind == "Q":
                diag = [rng.choice([1, 2, 3, 5, -1, -2, -3, -5]) for _ in range(n)]
            else:
                diag = [rng.randrange(1, 5) for _ in range(n)]
            cls = classify_even_clifford(standard_space(diag=diag, field=field))
            assert cls.involution_kind == INVOLUTION_TABLE[n % 8], (n, diag)

    def test_center_split_iff_signed_disc_trivial(self, rng):
        from gspinlab.quadspace import discriminant

        for n in (2, 4, 6):
            for _ in range(6):
                diag = [rng.choice([1, 2, 3, -1, -2, 5]) for _ in range(n)]
                space = standard_space(diag=diag)
                cls = classify_even_clifford(space)
                split = discriminant(space, signed=True).is_trivial
                assert (cls.center_kind == "FxF") == split

    def test_norm_form_gives_quadratic_center(self):
        space = standard_space(norm_field_disc=5)
        cls = classify_even_clifford(space)
        assert cls.involution_kind == "unitary"
        assert cls.center_kind == "E"
        assert cls.center_disc.rep == 5

    def test_rank_seven_orthogonal(self):
        cls = classify_even_clifford(standard_space(diag=[1] * 7))
        assert cls.involution_kind == "orthogonal"
        assert cls.center_kind == "F"
        assert cls.factor_degree == 8

    def test_rank_three_symplectic(self):
        cls = classify_even_clifford(standard_space(diag=[2, 3, 5]))
        assert cls.involution_kind == "symplectic"
        assert cls.factor_degree == 2

    def test_split_factor_kinds_reported(self):
        cls = classify_even_clifford(standard_space(hyperbolic=2))
        assert cls.center_kind == "FxF"
        assert cls.factor_kinds == ("symplectic", "symplectic")
        cls8 = classify_even_clifford(standard_space(hyperbolic=4))
        assert cls8.center_kind == "FxF"
        assert cls8.factor_kinds == ("orthogonal", "orthogonal")

    def test_center_dims_by_parity(self, rng):
        for n in range(1, 9):
            diag = [rng.choice([1, -1, 2]) for _ in range(n)]
            cls = classify_even_clifford(standard_space(diag=diag))
            assert cls.center_dim == (1 if n % 2 else 2)


def search_zero_divisor(qa, qb, bound=6):
    """Small search for x with zero reduced norm in the (qa, qb) algebra."""
    for t, x, y, z in product(range(-bound, bound + 1), repeat=4):
        if (t, x, y, z) == (0, 0, 0, 0):
            continue
        norm = Fraction(t * t) - qa * x * x - qb * y * y + qa * qb * z * z
        if norm == 0:
            return (t, x, y, z)
    return None


class TestQuaternionData:
    def test_unit_form(self):
        data = quaternion_data(standard_space(diag=[1, 1, 1]))
        assert (data.a, data.b) == (-1, -1)
        assert data.ramified_places == frozenset({2, "real"})
        assert not data.is_split

    def test_indefinite_form_splits(self):
        data = quaternion_data(standard_space(diag=[1, -1, 1]))
        assert (data.a, data.b) == (1, 1)
        assert data.is_split
        assert search_zero_divisor(data.a, data.b) is not None

    def test_generic_form(self):
        data = quaternion_data(standard_space(diag=[2, 3, 5]))
        assert (data.a, data.b) == (-6, -15)
        assert len(data.ramified_places) % 2 == 0

    def test_zero_divisor_search_respects_ramification(self):
        ramified = quaternion_data(standard_space(diag=[1, 1, 1]))
        assert search_zero_divisor(ramified.a, ramified.b) is None


class TestSpinModule:
    @pytest.fixture
    def witness(self):
        return spin_module_split(standard_space(hyperbolic=2, diag=[1]))

    def test_generator_squares(self, witness):
        from gspinlab import linalg

        basis = witness.basis
        for i in range(5):
            m = [list(row) for row in witness.vector_action[i]]
            square = linalg.matmul(m, m, basis.field)
            for r in range(4):
                for c in range(4):
                    want = basis.diag[i] if r == c else Fraction(0)
                    assert square[r][c] == want

    def test_form_is_alternating_and_invertible(self, witness):
        from gspinlab import linalg

        j = witness.symplectic_form
        for r in range(4):
            for c in range(4):
                assert j[r][c] == -j[c][r]
        assert linalg.det([list(row) for row in j], witness.basis.field) != 0

    def test_similitude_scaling(self, witness, rng):
        from gspinlab.clifford import random_gspin

        for _ in range(25):
            cert = random_gspin(witness.basis, rng)
            mu = witness.similitude(witness.act(cert.element))
            assert mu == cert.norm

    def test_non_block_shape_rejected(self):
        with pytest.raises(NotSplit):
            spin_module_split(standard_space(diag=[1, 1, 1, 1, 1]))

    def test_nonsquare_scale_rejected(self):
        with pytest.raises(NotSplit):
            spin_module_split(standard_space(hyperbolic=2, diag=[2]))

    def test_prime_field_module(self):
        f5 = FieldTag.prime(5)
        space = standard_space(hyperbolic=2, diag=[4], field=f5)
        witness = spin_module_split(space)
        assert witness.symplectic_form


class TestLowRankWitnesses:
    @pytest.mark.parametrize(
        "n,space",
        [
            (1, standard_space(diag=[1])),
            (2, standard_space(hyperbolic=1)),
            (2, standard_space(norm_field_disc=5)),
            (3, standard_space(diag=[1, 1, 1])),
            (4, standard_space(hyperbolic=2)),
            (5, standard_space(hyperbolic=2, diag=[1])),
        ],
    )
    def test_standard_forms_pass(self, n, space):
        report = verify_low_rank(space, n, seed=7, samples=15)
        assert report["pass"], report["checks"]

    def test_prime_field_cases(self):
        f5 = FieldTag.prime(5)
        report3 = verify_low_rank(standard_space(diag=[1, 1, 1], field=f5), 3, seed=3, samples=25)
        assert report3["pass"]
        report4 = verify_low_rank(standard_space(hyperbolic=2, field=f5), 4, seed=3, samples=25)
        assert report4["pass"]

    def test_dimension_mismatch(self):
        with pytest.raises(HypothesisViolation):
            verify_low_rank(standard_space(diag=[1, 1]), 3)

    def test_nonsplit_rank_five_rejected(self):
        with pytest.raises(HypothesisViolation):
            verify_low_rank(standard_space(diag=[1, 1, 1, 1, 1]), 5)

    def test_report_shape(self):
        report = verify_low_rank(standard_space(diag=[1]), 1, seed=5, samples=4)
        assert set(report) == {"case", "classification", "samples", "seed", "checks", "pass"}
        for check in report["checks"]:
            assert set(check) == {"name", "pass", "detail"}


class TestEmbeddingTheorem:
    def test_certificates_reverify_one_rank_up(self, rng):
        from gspinlab.clifford import embed_gspin, random_gspin, GSpinRejection

        for n in (2, 3, 4):
            diag = [1, -1, 2, 1][:n]
            small = CliffordBasis(standard_space(diag=diag))
            big = CliffordBasis(standard_space(diag=diag + [3]))
            for _ in range(25):
                cert = random_gspin(small, rng)
                moved = embed_gspin(cert, big)
                assert not isinstance(moved, GSpinRejection)
                assert moved.norm == cert.norm
