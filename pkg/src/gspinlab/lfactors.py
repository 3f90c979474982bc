"""Unramified local L-factors from Satake data.

Satake classes store torus coordinates (x_1..x_m, x_0) with x_0 the
similitude; standard eigenvalues are the pairs {x_i, x_0/x_i} so the
similitude pairing is literal.  Adjoint multisets are enumerated from the
symplectic/orthogonal root patterns, and Euler factors are the usual Artin
products 1/prod(1 - lambda q^-s).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Tuple

from sympy import factorint

from .errors import InvalidClass, PoleAtS, RankMismatch

TEMPERED_TOL = 1e-12


@dataclass(frozen=True)
class LocalFieldData:
    """Residue data of an unramified place: q is the residue cardinality."""

    q: int

    def __post_init__(self):
        if self.q < 2 or len(factorint(self.q)) != 1:
            raise InvalidClass(f"residue cardinality must be a prime power >= 2, got {self.q}")

    def zeta(self, s):
        """Local zeta factor (1 - q^-s)^-1, exact for integer s."""
        return euler_factor(s, [1], self)


@dataclass(frozen=True)
class SatakeClass:
    """Unramified parameter: family, torus values, similitude.

    family: ("odd", m) for dual symplectic similitudes of rank m,
            ("even", m, split) for dual orthogonal similitudes; non-split
            means the last coordinate pair is Galois-swapped.
    """

    family: tuple
    satake: Tuple[complex, ...]
    similitude: complex
    tempered_tol: float = dataclass_field(default=TEMPERED_TOL, compare=False)

    def __post_init__(self):
        kind = self.family[0]
        if kind not in ("odd", "even"):
            raise InvalidClass(f"unknown family {self.family!r}")
        m = self.family[1]
        if m < 1:
            raise InvalidClass("rank must be at least 1")
        if kind == "even" and len(self.family) != 3:
            raise InvalidClass("even family needs a split flag")
        if len(self.satake) != m:
            raise InvalidClass(f"expected {m} Satake values, got {len(self.satake)}")
        for x in self.satake:
            if x == 0:
                raise InvalidClass("Satake values must be nonzero")
        if self.similitude == 0:
            raise InvalidClass("similitude must be nonzero")

    @property
    def rank(self) -> int:
        return self.family[1]

    @property
    def group_rank_n(self) -> int:
        m = self.rank
        return 2 * m + 1 if self.family[0] == "odd" else 2 * m

    @property
    def tempered(self) -> bool:
        values = list(self.satake) + [self.similitude]
        return all(abs(abs(complex(x)) - 1.0) <= self.tempered_tol for x in values)

    def to_json(self) -> dict:
        fam = {"kind": self.family[0], "m": self.family[1]}
        if self.family[0] == "even":
            fam["split"] = self.family[2]
        return {
            "family": fam,
            "satake": [_c2j(x) for x in self.satake],
            "similitude": _c2j(self.similitude),
        }

    @staticmethod
    def from_json(doc: dict) -> "SatakeClass":
        fam = doc["family"]
        if fam["kind"] == "odd":
            family = ("odd", int(fam["m"]))
        else:
            family = ("even", int(fam["m"]), bool(fam["split"]))
        return SatakeClass(
            family,
            tuple(_j2c(x) for x in doc["satake"]),
            _j2c(doc["similitude"]),
        )


def _c2j(z):
    z = complex(z)
    return [z.real, z.imag]


def _j2c(pair):
    if isinstance(pair, (int, float)):
        return complex(pair)
    return complex(pair[0], pair[1])


def std_eigenvalues(cls: SatakeClass):
    """Eigenvalue multiset of the standard 2m-dimensional representation.

    Pairs {x_i, x_0/x_i} multiply to the similitude; for an even non-split
    class the Galois-swapped last coordinate contributes the pair
    {+sqrt(x_0), -sqrt(x_0)} (Frobenius squares to the similitude there).
    """
    x0 = complex(cls.similitude)
    values = []
    swapped_last = cls.family[0] == "even" and not cls.family[2]
    upto = cls.rank - 1 if swapped_last else cls.rank
    for i in range(upto):
        xi = complex(cls.satake[i])
        values.extend([xi, x0 / xi])
    if swapped_last:
        r = cmath.sqrt(x0)
        values.extend([r, -r])
    return values


def euler_factor(s, eigenvalues, field_data):
    """Artin-type factor prod (1 - lambda q^-s)^-1.

    Exact Fractions when s is an integer and every eigenvalue is rational;
    complex floats otherwise.  Raises PoleAtS on a vanishing factor.
    """
    q = field_data.q if isinstance(field_data, LocalFieldData) else int(field_data)
    exact = isinstance(s, int) and all(
        isinstance(lam, (int, Fraction)) for lam in eigenvalues
    )
    if exact:
        out = Fraction(1)
        qs = Fraction(q) ** s
        for lam in eigenvalues:
            term = 1 - Fraction(lam) / qs
            if term == 0:
                raise PoleAtS(f"eigenvalue {lam} hits the pole at s={s}")
            out /= term
        return out
    out = 1.0 + 0j
    qs = q ** complex(s)
    for lam in eigenvalues:
        term = 1 - complex(lam) / qs
        if abs(term) < 1e-15:
            raise PoleAtS(f"eigenvalue {lam} hits the pole at s={s}")
        out /= term
    return out


def euler_reciprocal(s, eigenvalues, field_data):
    """The reciprocal polynomial prod (1 - lambda q^-s); zero exactly at poles."""
    q = field_data.q if isinstance(field_data, LocalFieldData) else int(field_data)
    out = 1.0 + 0j
    qs = q ** complex(s)
    for lam in eigenvalues:
        out *= 1 - complex(lam) / qs
    return out


def adjoint_eigenvalues(cls: SatakeClass, algebra: str):
    """Adjoint eigenvalue multiset for sp/so and their similitude versions.

    Root values are Laurent monomials in the normalized coordinates
    t_i = x_i / sqrt(x_0): long roots give x_i^2/x_0 and x_0/x_i^2, short
    roots the four ratios; the Cartan contributes rank-many ones, and gsp/gso
    append one extra 1 for the similitude line.
    """
    if algebra not in ("sp", "so", "gsp", "gso"):
        raise InvalidClass(f"unknown adjoint algebra {algebra!r}")
    kind = cls.family[0]
    if algebra in ("sp", "gsp") and kind != "odd":
        raise InvalidClass("symplectic adjoint needs an odd-family class")
    if algebra in ("so", "gso") and kind != "even":
        raise InvalidClass("orthogonal adjoint needs an even-family class")
    m = cls.rank
    x0 = complex(cls.similitude)
    xs = [complex(x) for x in cls.satake]
    values = []
    if kind == "odd":
        for i in range(m):
            values.append(xs[i] * xs[i] / x0)
            values.append(x0 / (xs[i] * xs[i]))
        for i in range(m):
            for j in range(i + 1, m):
                values.extend(_short_root_values(xs[i], xs[j], x0))
        values.extend([1.0 + 0j] * m)
    else:
        split = cls.family[2]
        if split:
            for i in range(m):
                for j in range(i + 1, m):
                    values.extend(_short_root_values(xs[i], xs[j], x0))
            values.extend([1.0 + 0j] * m)
        else:
            for i in range(m - 1):
                for j in range(i + 1, m - 1):
                    values.extend(_short_root_values(xs[i], xs[j], x0))
            # roots moved by the swap pair up with eigenvalues +-t_i, +-1/t_i
            root = cmath.sqrt(x0)
            for i in range(m - 1):
                t = xs[i] / root
                values.extend([t, -t, 1 / t, -1 / t])
            values.extend([1.0 + 0j] * (m - 1))
            values.append(-1.0 + 0j)  # Frobenius acts by -1 on the swapped Cartan line
    if algebra in ("gsp", "gso"):
        values.append(1.0 + 0j)
    return values


def _short_root_values(xi, xj, x0):
    return [xi * xj / x0, x0 / (xi * xj), xi / xj, xj / xi]


def tensor_eigenvalues(class_a: SatakeClass, class_b: SatakeClass, omega_value):
    """All pairwise products of the two standard multisets, twisted by omega^-1."""
    if abs(class_a.group_rank_n - class_b.group_rank_n) != 1:
        raise RankMismatch(
            f"classes of ranks {class_a.group_rank_n} and {class_b.group_rank_n} are not adjacent"
        )
    omega = complex(omega_value)
    if omega == 0:
        raise InvalidClass("omega must be nonzero")
    return [
        lam * mu / omega
        for lam in std_eigenvalues(class_a)
        for mu in std_eigenvalues(class_b)
    ]


def delta_so(dim_v: int, field_data, chi_value=None, mode: str = "exact"):
    """Normalizing factor: zeta(2)...zeta(2m) for odd dim 2m+1, and
    zeta(2)...zeta(2m-2) * L(m, chi) for even dim 2m with chi(Frob) = +-1."""
    if dim_v < 2:
        raise InvalidClass("delta factor needs dimension >= 2")
    if mode not in ("exact", "complex"):
        raise InvalidClass(f"unknown evaluation mode {mode!r}")
    q = field_data.q if isinstance(field_data, LocalFieldData) else int(field_data)
    fd = LocalFieldData(q)
    if dim_v % 2 == 1:
        m = (dim_v - 1) // 2
        factors = [euler_factor(2 * i, [1], fd) for i in range(1, m + 1)]
    else:
        m = dim_v // 2
        if chi_value not in (1, -1):
            raise InvalidClass("even-dimensional delta needs the character value +-1")
        factors = [euler_factor(2 * i, [1], fd) for i in range(1, m)]
        factors.append(euler_factor(m, [chi_value], fd))
    out = Fraction(1)
    for f in factors:
        out *= f
    return out if mode == "exact" else complex(out)


def unramified_sqrt_twist(cls: SatakeClass) -> SatakeClass:
    """Normalize the similitude to 1 by the principal unramified square root."""
    root = cmath.sqrt(complex(cls.similitude))
    return SatakeClass(
        cls.family,
        tuple(complex(x) / root for x in cls.satake),
        1.0 + 0j,
    )
