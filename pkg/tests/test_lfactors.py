"""Satake eigenvalue multisets and Euler factors."""

import cmath
from fractions import Fraction

import pytest

from gspinlab.errors import InvalidClass, PoleAtS, RankMismatch
from gspinlab.lfactors import (
    LocalFieldData,
    SatakeClass,
    adjoint_eigenvalues,
    delta_so,
    euler_factor,
    euler_reciprocal,
    std_eigenvalues,
    tensor_eigenvalues,
    unramified_sqrt_twist,
)


def unit(rng):
    return cmath.exp(2j * cmath.pi * rng.random())


def random_odd_class(rng, m=None):
    m = m or rng.choice([1, 2, 3])
    return SatakeClass(
        ("odd", m), tuple(unit(rng) for _ in range(m)), unit(rng)
    )


def multiset_key(values):
    return sorted((round(z.real, 9), round(z.imag, 9)) for z in map(complex, values))


class TestSatakeClass:
    def test_validation(self):
        with pytest.raises(InvalidClass):
            SatakeClass(("odd", 2), (1.0,), 1.0)
        with pytest.raises(InvalidClass):
            SatakeClass(("odd", 1), (0.0,), 1.0)
        with pytest.raises(InvalidClass):
            SatakeClass(("even", 1), (1.0,), 1.0)  # missing split flag

    def test_tempered_flag(self):
        tempered = SatakeClass(("odd", 1), (cmath.exp(0.3j),), 1.0)
        assert tempered.tempered
        not_tempered = SatakeClass(("odd", 1), (1.5,), 1.0)
        assert not not_tempered.tempered

    def test_json_round_trip(self, rng):
        cls = random_odd_class(rng)
        assert SatakeClass.from_json(cls.to_json()) == SatakeClass(
            cls.family,
            tuple(complex(x) for x in cls.satake),
            complex(cls.similitude),
        )


class TestStdEigenvalues:
    def test_rank_one_pairing(self):
        cls = SatakeClass(("odd", 1), (0.5 + 0.1j,), 0.8 + 0.2j)
        a, b = std_eigenvalues(cls)
        assert abs(a * b - complex(cls.similitude)) < 1e-12

    def test_trivial_class(self):
        cls = SatakeClass(("odd", 2), (1.0, 1.0), 1.0)
        assert multiset_key(std_eigenvalues(cls)) == multiset_key([1, 1, 1, 1])

    def test_rank_two_pair_products(self, rng):
        cls = random_odd_class(rng, m=2)
        values = std_eigenvalues(cls)
        assert len(values) == 4
        x0 = complex(cls.similitude)
        assert abs(values[0] * values[1] - x0) < 1e-12
        assert abs(values[2] * values[3] - x0) < 1e-12

    def test_even_nonsplit_pair(self):
        cls = SatakeClass(("even", 1, False), (1.0,), cmath.exp(0.6j))
        values = std_eigenvalues(cls)
        root = cmath.sqrt(cmath.exp(0.6j))
        assert multiset_key(values) == multiset_key([root, -root])


class TestEulerFactor:
    def test_empty_multiset(self):
        assert euler_factor(1, [], LocalFieldData(3)) == 1

    def test_local_zeta(self):
        assert euler_factor(1, [1], LocalFieldData(3)) == Fraction(3, 2)
        assert LocalFieldData(3).zeta(2) == Fraction(9, 8)

    def test_imaginary_pair(self):
        value = euler_factor(1.0, [1j, -1j], LocalFieldData(3))
        assert abs(value - 0.9) < 1e-12

    def test_pole_detection(self):
        with pytest.raises(PoleAtS):
            euler_factor(1, [3], LocalFieldData(3))
        assert euler_reciprocal(1, [3], LocalFieldData(3)) == 0

    def test_exact_mode_returns_fraction(self):
        value = euler_factor(2, [1, -1], LocalFieldData(2))
        assert isinstance(value, Fraction)
        assert value == Fraction(16, 15)

    def test_tempered_finite_in_right_half_plane(self, rng):
        fd = LocalFieldData(5)
        for _ in range(20):
            cls = random_odd_class(rng)
            values = std_eigenvalues(cls)
            assert all(abs(abs(v) - 1) < 1e-9 for v in values)
            for s in (0.25, 0.5, 1.0, 2.0):
                assert abs(euler_factor(s, values, fd)) < float("inf")

    def test_prime_power_validation(self):
        with pytest.raises(InvalidClass):
            LocalFieldData(6)
        assert LocalFieldData(9).q == 9


class TestAdjoint:
    def test_gsp_is_sp_plus_one(self, rng):
        for _ in range(20):
            cls = random_odd_class(rng)
            sp = adjoint_eigenvalues(cls, "sp")
            gsp = adjoint_eigenvalues(cls, "gsp")
            assert multiset_key(gsp) == multiset_key(sp + [1.0])

    def test_rank_one_sp(self):
        cls = SatakeClass(("odd", 1), (0.6 + 0.8j,), 1.0)
        x = complex(cls.satake[0])
        expected = [x * x, 1.0, 1 / (x * x)]
        assert multiset_key(adjoint_eigenvalues(cls, "sp")) == multiset_key(expected)

    def test_trivial_class_gives_zeta_power(self):
        cls = SatakeClass(("odd", 2), (1.0, 1.0), 1.0)
        values = adjoint_eigenvalues(cls, "sp")
        fd = LocalFieldData(2)
        assert abs(
            euler_factor(1.5, values, fd) - euler_factor(1.5, [1], fd) ** len(values)
        ) < 1e-12

    def test_dimensions(self, rng):
        for m in (1, 2, 3):
            cls = random_odd_class(rng, m=m)
            assert len(adjoint_eigenvalues(cls, "sp")) == m * (2 * m + 1)
        split = SatakeClass(("even", 2, True), (unit(rng), unit(rng)), unit(rng))
        assert len(adjoint_eigenvalues(split, "so")) == 2 * 2 * 2 - 2  # dim so_4 = 6

    def test_even_split_rank_one(self):
        cls = SatakeClass(("even", 1, True), (0.9 + 0.1j,), 1.0)
        assert adjoint_eigenvalues(cls, "so") == [1.0 + 0j]
        assert multiset_key(adjoint_eigenvalues(cls, "gso")) == multiset_key([1.0, 1.0])

    def test_even_nonsplit_rank_one(self):
        cls = SatakeClass(("even", 1, False), (1.0,), 1.0)
        assert adjoint_eigenvalues(cls, "so") == [-1.0 + 0j]

    def test_identity_of_euler_factors(self, rng):
        fd = LocalFieldData(3)
        for _ in range(30):
            cls = random_odd_class(rng)
            s = 1.0 + 0.4j
            lhs = euler_factor(s, adjoint_eigenvalues(cls, "gsp"), fd)
            rhs = euler_factor(s, adjoint_eigenvalues(cls, "sp"), fd) * euler_factor(
                s, [1], fd
            )
            assert abs(lhs - rhs) / abs(rhs) < 1e-12

    def test_parity_mismatch_rejected(self, rng):
        cls = random_odd_class(rng)
        with pytest.raises(InvalidClass):
            adjoint_eigenvalues(cls, "so")


class TestTensor:
    def test_cardinality(self, rng):
        a = random_odd_class(rng, m=1)  # rank-3 group
        b = SatakeClass(("even", 2, True), (unit(rng), unit(rng)), unit(rng))  # rank 4
        values = tensor_eigenvalues(a, b, 1.0)
        assert len(values) == 2 * 4

    def test_trivial_classes(self):
        a = SatakeClass(("odd", 1), (1.0,), 1.0)
        b = SatakeClass(("even", 1, True), (1.0,), 1.0)
        assert multiset_key(tensor_eigenvalues(a, b, 1.0)) == multiset_key([1.0] * 4)

    def test_symmetry(self, rng):
        a = random_odd_class(rng, m=1)
        b = SatakeClass(("even", 1, True), (unit(rng),), unit(rng))
        omega = unit(rng)
        assert multiset_key(tensor_eigenvalues(a, b, omega)) == multiset_key(
            tensor_eigenvalues(b, a, omega)
        )

    def test_split_rank_two_factorization(self, rng):
        # characters (c1, c2) against a rank-3 class factor into two twists
        c1, c2 = unit(rng), unit(rng)
        chi = SatakeClass(("even", 1, True), (c1,), c1 * c2)
        pi = random_odd_class(rng, m=1)
        fd = LocalFieldData(3)
        s = 0.5
        lhs = euler_factor(s, tensor_eigenvalues(chi, pi, 1.0), fd)
        rhs = euler_factor(s, [v * c1 for v in std_eigenvalues(pi)], fd) * euler_factor(
            s, [v * c2 for v in std_eigenvalues(pi)], fd
        )
        assert abs(lhs - rhs) / abs(rhs) < 1e-12

    def test_rank_mismatch(self, rng):
        a = random_odd_class(rng, m=1)
        b = random_odd_class(rng, m=2)
        with pytest.raises(RankMismatch):
            tensor_eigenvalues(a, b, 1.0)


class TestDelta:
    def test_dim_three(self):
        assert delta_so(3, 3) == Fraction(9, 8)

    def test_dim_five(self):
        assert delta_so(5, 2) == Fraction(4, 3) * Fraction(16, 15)

    def test_dim_four_split(self):
        assert delta_so(4, 2, chi_value=1) == Fraction(16, 9)

    def test_dim_four_inert(self):
        # zeta(2) * L(2, chi) with chi(Frob) = -1: (4/3) * (4/5)
        assert delta_so(4, 2, chi_value=-1) == Fraction(16, 15)

    def test_complex_mode(self):
        value = delta_so(3, 3, mode="complex")
        assert isinstance(value, complex)
        assert abs(value - 9 / 8) < 1e-12

    def test_even_dim_needs_character(self):
        with pytest.raises(InvalidClass):
            delta_so(4, 2)


class TestSqrtTwist:
    def test_trivial_similitude_unchanged(self, rng):
        cls = SatakeClass(("odd", 2), (unit(rng), unit(rng)), 1.0)
        twisted = unramified_sqrt_twist(cls)
        assert twisted.similitude == 1.0 + 0j
        assert multiset_key(twisted.satake) == multiset_key(cls.satake)

    def test_normalizes_similitude(self, rng):
        for _ in range(10):
            cls = random_odd_class(rng)
            twisted = unramified_sqrt_twist(cls)
            assert abs(complex(twisted.similitude) - 1) < 1e-12
            values = std_eigenvalues(twisted)
            for i in range(0, len(values), 2):
                assert abs(values[i] * values[i + 1] - 1) < 1e-12

    def test_adjoint_invariant(self, rng):
        for _ in range(10):
            cls = random_odd_class(rng)
            before = adjoint_eigenvalues(cls, "sp")
            after = adjoint_eigenvalues(unramified_sqrt_twist(cls), "sp")
            assert multiset_key(before) == multiset_key(after)

    def test_double_twist_stays_normalized(self, rng):
        cls = random_odd_class(rng)
        once = unramified_sqrt_twist(cls)
        twice = unramified_sqrt_twist(once)
        assert abs(complex(once.similitude) - 1) < 1e-12
        assert abs(complex(twice.similitude) - 1) < 1e-12
