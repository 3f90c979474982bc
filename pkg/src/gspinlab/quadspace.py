"""Quadratic spaces over exact fields.

Diagonalization, discriminants, Hilbert symbols, local invariants with Witt
indices, and the standard block constructors that feed the Clifford engine.
A space carries a symmetric nondegenerate Gram matrix G with q(v) = v^T G v,
so the associated bilinear form is B_q(x, y) = (q(x+y) - q(x) - q(y)) / 2 and
G[i][i] = q(e_i).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from . import linalg
from .errors import DegenerateForm, UnsupportedField, ZeroArgument, ZeroEntry
from .fields import FieldTag, squarefree_part

Place = object  # "real" or a prime int
REAL_PLACE = "real"


@dataclass(frozen=True)
class SquareClass:
    """A class in F^x / (F^x)^2, stored as a canonical representative.

    Over Q the representative is the squarefree integer part; over F_p it is
    1 for squares and the smallest quadratic non-residue otherwise.
    """

    field: FieldTag
    rep: int

    @staticmethod
    def of(field: FieldTag, value) -> "SquareClass":
        if field.kind == "Q":
            return SquareClass(field, squarefree_part(Fraction(value)))
        if field.kind == "Fp":
            value = field.cast(value)
            if field.is_zero(value):
                raise ZeroArgument("zero has no square class")
            if field.is_square(value):
                return SquareClass(field, 1)
            return SquareClass(field, _least_nonresidue(field.p))
        raise UnsupportedField("square classes require an exact field")

    @property
    def is_trivial(self) -> bool:
        return self.rep == 1

    def to_json(self) -> int:
        return self.rep


def _least_nonresidue(p: int) -> int:
    for candidate in range(2, p):
        if pow(candidate, (p - 1) // 2, p) == p - 1:
            return candidate
    raise ZeroArgument(f"no non-residue mod {p}")  # unreachable for odd primes


class QuadraticSpace:
    """Immutable nondegenerate quadratic space with an exact Gram matrix."""

    def __init__(self, gram, field: FieldTag):
        if field.kind == "C":
            raise UnsupportedField("quadratic spaces live over exact fields")
        n = len(gram)
        if n == 0:
            raise DegenerateForm("empty quadratic space")
        g = [[field.cast(x) for x in row] for row in gram]
        for row in g:
            if len(row) != n:
                raise DegenerateForm("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise DegenerateForm("Gram matrix must be symmetric")
        if field.is_zero(linalg.det(g, field)):
            raise DegenerateForm("Gram matrix is singular")
        self.dim = n
        self.gram = tuple(tuple(row) for row in g)
        self.field = field

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticSpace)
            and self.field == other.field
            and self.gram == other.gram
        )

    def __hash__(self):
        return hash((self.field, self.gram))

    def __repr__(self):
        return f"QuadraticSpace(dim={self.dim}, field={self.field.to_json()})"

    def bilinear(self, u, v):
        field = self.field
        acc = field.zero()
        for i in range(self.dim):
            for j in range(self.dim):
                acc = field.add(acc, field.mul(field.mul(u[i], self.gram[i][j]), v[j]))
        return acc

    def quad(self, v):
        return self.bilinear(v, v)

    # -- JSON wire format ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "gram": [[self.field.scalar_to_json(x) for x in row] for row in self.gram],
        }

    @staticmethod
    def from_json(doc: dict) -> "QuadraticSpace":
        field = FieldTag.parse(doc["field"])
        return QuadraticSpace(doc["gram"], field)

    def content_hash(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:12]


@dataclass(frozen=True)
class LocalInvariants:
    place: object
    dim: int
    disc: SquareClass
    hasse: int
    witt_index: int

    def to_json(self) -> dict:
        return {
            "place": self.place if self.place == REAL_PLACE else int(self.place),
            "dim": self.dim,
            "disc": self.disc.to_json(),
            "hasse": self.hasse,
            "witt_index": self.witt_index,
        }


def diagonalize(space: QuadraticSpace):
    """Orthogonal basis: returns (P, diag) with P^T G P = diag(diag).

    When a pivot q(v_i) vanishes, a later basis vector with nonzero pairing is
    added (lowest index first, sign +1 preferred) before Gram-Schmidt; this
    always succeeds over char != 2 by nondegeneracy.
    """
    field = space.field
    n = space.dim
    basis = [list(col) for col in linalg.identity(n, field)]

    def pair(u, v):
        return space.bilinear(u, v)

    diag = []
    for i in range(n):
        if field.is_zero(pair(basis[i], basis[i])):
            for j in range(i + 1, n):
                b = pair(basis[i], basis[j])
                if field.is_zero(b):
                    continue
                for sign in (field.one(), field.neg(field.one())):
                    candidate = [
                        field.add(basis[i][k], field.mul(sign, basis[j][k]))
                        for k in range(n)
                    ]
                    if not field.is_zero(pair(candidate, candidate)):
                        basis[i] = candidate
                        break
                break
            else:
                raise DegenerateForm("no completion found; form is degenerate")
        d = pair(basis[i], basis[i])
        diag.append(d)
        for j in range(i + 1, n):
            coeff = field.div(pair(basis[i], basis[j]), d)
            basis[j] = [
                field.sub(basis[j][k], field.mul(coeff, basis[i][k])) for k in range(n)
            ]
    change = [[basis[j][i] for j in range(n)] for i in range(n)]  # columns are basis
    return change, diag


def discriminant(space: QuadraticSpace, signed: bool = False) -> SquareClass:
    """det(gram) modulo squares; `signed` multiplies by (-1)^(n(n-1)/2)."""
    d = linalg.det(space.gram, space.field)
    if signed and (space.dim * (space.dim - 1) // 2) % 2:
        d = space.field.neg(d)
    return SquareClass.of(space.field, d)


# -- Hilbert symbols over Q ---------------------------------------------------


def _padic_split(x: Fraction, p: int):
    """x = p^a * u with u a p-adic unit; returns (a, u)."""
    a = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        a += 1
    while den % p == 0:
        den //= p
        a -= 1
    return a, Fraction(num, den)


def _legendre_unit(u: Fraction, p: int) -> int:
    value = (u.numerator * pow(u.denominator, -1, p)) % p
    return 1 if pow(value, (p - 1) // 2, p) == 1 else -1


def hilbert_symbol(a, b, place) -> int:
    """Local Hilbert symbol (a, b)_v for nonzero rationals a, b."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ZeroArgument("Hilbert symbol needs nonzero arguments")
    if place == REAL_PLACE:
        return -1 if (a < 0 and b < 0) else 1
    p = int(place)
    if p == 2:
        alpha, u = _padic_split(a, 2)
        beta, w = _padic_split(b, 2)
        u8 = (u.numerator * pow(u.denominator, -1, 8)) % 8
        w8 = (w.numerator * pow(w.denominator, -1, 8)) % 8
        eps_u, eps_w = (u8 - 1) // 2 % 2, (w8 - 1) // 2 % 2
        om_u, om_w = (u8 * u8 - 1) // 8 % 2, (w8 * w8 - 1) // 8 % 2
        exponent = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if exponent % 2 else 1
    alpha, u = _padic_split(a, p)
    beta, w = _padic_split(b, p)
    out = 1
    if (alpha * beta) % 2 and (p - 1) // 2 % 2:
        out = -out
    if beta % 2:
        out *= _legendre_unit(u, p)
    if alpha % 2:
        out *= _legendre_unit(w, p)
    return out


def relevant_places(a, b):
    """The real place together with 2 and the odd primes dividing a or b."""
    places = [REAL_PLACE, 2]
    primes = set()
    for x in (Fraction(a), Fraction(b)):
        primes.update(factorint(abs(x.numerator)).keys())
        primes.update(factorint(x.denominator).keys())
    places.extend(sorted(p for p in primes if p != 2))
    return places


# -- local invariants and Witt indices ----------------------------------------


def _hasse_invariant(diag, place) -> int:
    out = 1
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            out *= hilbert_symbol(diag[i], diag[j], place)
    return out


def _is_isotropic_padic(dim: int, disc_rep: int, hasse: int, p: int) -> bool:
    """Isotropy over Q_p by the classification in terms of (dim, disc, hasse)."""
    if dim == 1:
        return False
    minus_one = hilbert_symbol(-1, -1, p)
    if dim == 2:
        # Isotropic iff disc = -1 in Q_p^x / squares.
        return _same_padic_square_class(disc_rep, -1, p)
    if dim == 3:
        return hasse == hilbert_symbol(-1, -disc_rep, p)
    if dim == 4:
        if not _same_padic_square_class(disc_rep, 1, p):
            return True
        return hasse == minus_one
    return True


def _same_padic_square_class(a: int, b: int, p: int) -> bool:
    x = Fraction(a, b)
    alpha, u = _padic_split(x, p)
    if p == 2:
        if alpha % 2:
            return False
        u8 = (u.numerator * pow(u.denominator, -1, 8)) % 8
        return u8 == 1
    return alpha % 2 == 0 and _legendre_unit(u, p) == 1


def witt_invariants(space: QuadraticSpace, place) -> LocalInvariants:
    """dim, disc, Hasse invariant and Witt index at the given place.

    Over Q any place is allowed; over a prime field the place argument is
    ignored and the invariants are those of the ambient finite field.
    """
    field = space.field
    if field.kind == "C":
        raise UnsupportedField("complex floats carry no local invariants")
    _, diag = diagonalize(space)
    disc = discriminant(space)

    if field.kind == "Fp":
        p = field.p
        witt = 0
        d = field.one()
        for entry in diag:
            d = field.mul(d, entry)
        dim = space.dim
        while dim >= 2:
            if dim == 2 and not field.is_square(field.neg(d)):
                break
            witt += 1
            dim -= 2
            d = field.neg(d)  # splitting H divides the discriminant by -1
        return LocalInvariants(p, space.dim, disc, 1, witt)

    if place == REAL_PLACE:
        pos = sum(1 for d in diag if d > 0)
        neg = space.dim - pos
        return LocalInvariants(REAL_PLACE, space.dim, disc, _hasse_invariant(diag, place), min(pos, neg))

    p = int(place)
    hasse = _hasse_invariant(diag, p)
    dim = space.dim
    d_rep = disc.rep
    eps = hasse
    witt = 0
    while dim >= 2 and _is_isotropic_padic(dim, d_rep, eps, p):
        # q = H + q'; disc H = -1 and hasse(H + q') = hasse(q') * (-1, disc q')
        witt += 1
        dim -= 2
        d_rep = squarefree_part(Fraction(-d_rep))
        eps *= hilbert_symbol(-1, d_rep, p)
    return LocalInvariants(p, space.dim, disc, hasse, witt)


# -- standard constructors -----------------------------------------------------


def standard_space(hyperbolic: int = 0, diag=(), norm_field_disc=None, field: FieldTag | None = None) -> QuadraticSpace:
    """Blockwise Gram assembly: H^k ⊥ diag(a_1..a_m), or the norm form of Q(√d).

    The hyperbolic plane is the antidiagonal [[0,1],[1,0]]; the norm form of
    Q(√d) is diag(1, -d).
    """
    field = field or FieldTag.rationals()
    if norm_field_disc is not None:
        if hyperbolic or diag:
            raise ZeroEntry("norm form cannot be mixed with other blocks")
        d = field.cast(norm_field_disc)
        if field.is_zero(d):
            raise ZeroEntry("norm form needs a nonzero discriminant")
        return QuadraticSpace([[1, 0], [0, field.neg(d)]], field)
    entries = [field.cast(a) for a in diag]
    for a in entries:
        if field.is_zero(a):
            raise ZeroEntry("diagonal entries must be nonzero")
    n = 2 * hyperbolic + len(entries)
    if n == 0:
        raise ZeroEntry("empty constructor")
    gram = [[field.zero() for _ in range(n)] for _ in range(n)]
    for k in range(hyperbolic):
        gram[2 * k][2 * k + 1] = field.one()
        gram[2 * k + 1][2 * k] = field.one()
    for i, a in enumerate(entries):
        gram[2 * hyperbolic + i][2 * hyperbolic + i] = a
    return QuadraticSpace(gram, field)
