"""Exact arithmetic in the Clifford algebra of a quadratic space.

Elements are sparse multivectors over a frozen orthogonal basis; monomial keys
are bitmasks over the basis indices.  The even invertible elements that
normalize the vector subspace form the general spin group; membership is
certified pointwise with an exact inverse and scalar norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import linalg
from ._kernel import mul_terms
from .errors import (
    BasisMismatch,
    BasisNotExtension,
    DimensionCap,
    NotInvertible,
)
from .quadspace import QuadraticSpace, diagonalize

DIMENSION_CAP = 10


class CliffordBasis:
    """Frozen orthogonal basis of a quadratic space with its q-values.

    All elements hold a reference to one of these; bases compare by value so
    that independently constructed copies interoperate.
    """

    __slots__ = ("space", "matrix", "diag", "n", "field", "_key", "_p")

    def __init__(self, space: QuadraticSpace):
        if space.dim > DIMENSION_CAP:
            raise DimensionCap(
                f"exact Clifford arithmetic is capped at dim {DIMENSION_CAP}"
            )
        matrix, diag = diagonalize(space)
        self.space = space
        self.matrix = tuple(tuple(row) for row in matrix)
        self.diag = tuple(diag)
        self.n = space.dim
        self.field = space.field
        self._p = space.field.p if space.field.kind == "Fp" else 0
        self._key = (self.field, self.diag, self.matrix)

    def __eq__(self, other):
        return isinstance(other, CliffordBasis) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"CliffordBasis(n={self.n}, field={self.field.to_json()})"

    def scalar(self, value) -> "CliffordElement":
        return CliffordElement(self, {0: self.field.cast(value)})

    def zero(self) -> "CliffordElement":
        return CliffordElement(self, {})

    def one(self) -> "CliffordElement":
        return self.scalar(1)

    def e(self, index: int) -> "CliffordElement":
        """The index-th orthogonal basis vector, 1-based."""
        if not 1 <= index <= self.n:
            raise BasisMismatch(f"basis index {index} out of range")
        return CliffordElement(self, {1 << (index - 1): self.field.one()})

    def monomial(self, indices, coeff=1) -> "CliffordElement":
        mask = 0
        for i in indices:
            if not 1 <= i <= self.n:
                raise BasisMismatch(f"basis index {i} out of range")
            bit = 1 << (i - 1)
            if mask & bit:
                raise BasisMismatch("repeated index in monomial")
            mask |= bit
        coeff = self.field.cast(coeff)
        return CliffordElement(self, {} if self.field.is_zero(coeff) else {mask: coeff})


class CliffordElement:
    """Sparse multivector: map from ascending index subsets to nonzero scalars."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: CliffordBasis, coeffs: dict):
        self.basis = basis
        self.coeffs = coeffs

    # -- ring structure ------------------------------------------------------

    def _check(self, other: "CliffordElement"):
        if self.basis != other.basis:
            raise BasisMismatch("elements live over different frozen bases")

    def __add__(self, other):
        self._check(other)
        field = self.basis.field
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = field.add(out.get(k, field.zero()), v)
            if field.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return CliffordElement(self.basis, out)

    def __neg__(self):
        field = self.basis.field
        return CliffordElement(self.basis, {k: field.neg(v) for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return cliff_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value) -> "CliffordElement":
        field = self.basis.field
        value = field.cast(value)
        if field.is_zero(value):
            return self.basis.zero()
        return CliffordElement(
            self.basis, {k: field.mul(value, v) for k, v in self.coeffs.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "<0>"
        parts = []
        for mask in sorted(self.coeffs):
            idx = "".join(str(i + 1) for i in range(self.basis.n) if mask >> i & 1)
            label = f"e{idx}" if idx else "1"
            parts.append(f"{self.coeffs[mask]}*{label}")
        return "<" + " + ".join(parts) + ">"

    # -- grading ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_even(self) -> bool:
        return all(k.bit_count() % 2 == 0 for k in self.coeffs)

    @property
    def is_scalar(self) -> bool:
        return all(k == 0 for k in self.coeffs)

    def scalar_part(self):
        return self.coeffs.get(0, self.basis.field.zero())

    def grade(self, k: int) -> "CliffordElement":
        return CliffordElement(
            self.basis, {m: v for m, v in self.coeffs.items() if m.bit_count() == k}
        )

    def max_grade(self) -> int:
        return max((m.bit_count() for m in self.coeffs), default=0)

    def vector_coordinates(self):
        """Coefficients on the grade-1 monomials, as a length-n list."""
        field = self.basis.field
        return [
            self.coeffs.get(1 << i, field.zero()) for i in range(self.basis.n)
        ]

    # -- wire format ----------------------------------------------------------

    def to_json(self) -> dict:
        field = self.basis.field
        terms = []
        for mask in sorted(self.coeffs):
            indices = [i + 1 for i in range(self.basis.n) if mask >> i & 1]
            terms.append({"indices": indices, "coeff": field.scalar_to_json(self.coeffs[mask])})
        return {"basis": self.basis.space.content_hash(), "terms": terms}

    @staticmethod
    def from_json(doc: dict, basis: CliffordBasis) -> "CliffordElement":
        if doc.get("basis") != basis.space.content_hash():
            raise BasisMismatch("serialized element belongs to a different space")
        out = basis.zero()
        for term in doc["terms"]:
            out = out + basis.monomial(term["indices"], term["coeff"])
        return out


def cliff_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """Associative bilinear product with v^2 = q(v) on the frozen basis."""
    if x.basis != y.basis:
        raise BasisMismatch("elements live over different frozen bases")
    return CliffordElement(
        x.basis, mul_terms(x.coeffs, y.coeffs, x.basis.diag, x.basis._p)
    )


def involution(x: CliffordElement) -> CliffordElement:
    """Canonical involution: reversal, sign (-1)^(k(k-1)/2) on grade k."""
    field = x.basis.field
    out = {}
    for mask, v in x.coeffs.items():
        k = mask.bit_count()
        out[mask] = field.neg(v) if (k * (k - 1) // 2) % 2 else v
    return CliffordElement(x.basis, out)


def spinor_norm(x: CliffordElement):
    """x * x^~ ; returns the scalar itself when the product is scalar."""
    norm = cliff_mul(x, involution(x))
    if norm.is_scalar:
        return norm.scalar_part()
    return norm


def invert(x: CliffordElement) -> CliffordElement:
    """Two-sided inverse.

    Versor-style elements are inverted through the scalar norm x^~ / N(x); the
    general case solves the full left-multiplication linear system, which is
    the honest criterion for unit-ness of arbitrary mixed elements.
    """
    basis = x.basis
    field = basis.field
    if x.is_zero:
        raise NotInvertible("zero is not invertible")
    norm = cliff_mul(x, involution(x))
    if norm.is_scalar and not field.is_zero(norm.scalar_part()):
        candidate = involution(x).scale(field.inv(norm.scalar_part()))
        if cliff_mul(candidate, x) == basis.one():
            return candidate
    size = 1 << basis.n
    columns = []
    for mask in range(size):
        unit = CliffordElement(basis, {mask: field.one()})
        prod = cliff_mul(x, unit)
        columns.append([prod.coeffs.get(row, field.zero()) for row in range(size)])
    matrix = [[columns[c][r] for c in range(size)] for r in range(size)]
    rhs = [field.one()] + [field.zero()] * (size - 1)
    solution = linalg.solve(matrix, rhs, field)
    if solution is None:
        raise NotInvertible("element is a zero divisor")
    inverse = CliffordElement(
        basis, {m: v for m, v in enumerate(solution) if not field.is_zero(v)}
    )
    if cliff_mul(inverse, x) != basis.one():
        raise NotInvertible("element has no two-sided inverse")
    return inverse


@dataclass(frozen=True)
class GSpinElement:
    """Certified group element: even, invertible, normalizes the vector space."""

    element: CliffordElement
    inverse: CliffordElement
    norm: object  # scalar spinor norm

    @property
    def basis(self) -> CliffordBasis:
        return self.element.basis


@dataclass(frozen=True)
class GSpinRejection:
    """Structured refusal naming the first failed membership clause."""

    clause: str
    detail: str

    def __bool__(self):
        return False


def is_gspin(x: CliffordElement) -> Union[GSpinElement, GSpinRejection]:
    """Check even grading, invertibility, and stability of the vector space."""
    if not x.is_even:
        return GSpinRejection("even", "element has odd-grade components")
    try:
        inverse = invert(x)
    except NotInvertible as exc:
        return GSpinRejection("invertible", str(exc))
    basis = x.basis
    for j in range(1, basis.n + 1):
        conj = cliff_mul(cliff_mul(x, basis.e(j)), inverse)
        if any(mask.bit_count() != 1 for mask in conj.coeffs):
            return GSpinRejection(
                "vector_stability",
                f"x e_{j} x^-1 leaves span(e_1..e_n)",
            )
    norm = spinor_norm(x)
    if isinstance(norm, CliffordElement):
        return GSpinRejection("scalar_norm", "spinor norm is not scalar")
    return GSpinElement(x, inverse, norm)


def project_so(g: GSpinElement):
    """Matrix of v -> g v g^-1 on the orthogonal basis; lands in SO(q)."""
    basis = g.basis
    cols = []
    for j in range(1, basis.n + 1):
        w = cliff_mul(cliff_mul(g.element, basis.e(j)), g.inverse)
        cols.append(w.vector_coordinates())
    return [[cols[j][i] for j in range(basis.n)] for i in range(basis.n)]


def embed(x: CliffordElement, target) -> CliffordElement:
    """Reindex an element into the Clifford algebra of an enlarged space.

    The target's frozen orthogonal basis must extend the source's: the first n
    diagonal q-values agree (and the field matches).
    """
    target_basis = target if isinstance(target, CliffordBasis) else CliffordBasis(target)
    source = x.basis
    if target_basis.field != source.field:
        raise BasisNotExtension("field mismatch")
    if target_basis.n < source.n or target_basis.diag[: source.n] != source.diag:
        raise BasisNotExtension(
            "target orthogonal basis does not extend the source basis"
        )
    return CliffordElement(target_basis, dict(x.coeffs))


def embed_gspin(cert: GSpinElement, target) -> Union[GSpinElement, GSpinRejection]:
    """Transport a certificate along an inclusion and re-verify it."""
    return is_gspin(embed(cert.element, target))


# -- random sampling -----------------------------------------------------------


def random_scalar(basis: CliffordBasis, rng, nonzero=False):
    field = basis.field
    while True:
        if field.kind == "Fp":
            value = rng.randrange(field.p)
        else:
            value = rng.randint(-4, 4)
        if not nonzero or not field.is_zero(field.cast(value)):
            return field.cast(value)


def random_element(basis: CliffordBasis, rng, terms: int = 4, even: Optional[bool] = None) -> CliffordElement:
    """Sparse random element; `even=True` restricts keys to even grades."""
    masks = list(range(1 << basis.n))
    if even is True:
        masks = [m for m in masks if m.bit_count() % 2 == 0]
    elif even is False:
        masks = [m for m in masks if m.bit_count() % 2 == 1]
    out = basis.zero()
    for _ in range(terms):
        mask = rng.choice(masks)
        out = out + CliffordElement(basis, {mask: basis.field.one()}).scale(
            random_scalar(basis, rng)
        )
    return out


def random_vector(basis: CliffordBasis, rng) -> CliffordElement:
    """Random anisotropic grade-1 element (q(v) != 0)."""
    field = basis.field
    while True:
        coords = [random_scalar(basis, rng) for _ in range(basis.n)]
        v = basis.zero()
        for i, c in enumerate(coords):
            if not field.is_zero(c):
                v = v + CliffordElement(basis, {1 << i: c})
        if v.is_zero:
            continue
        q = spinor_norm(v)
        if not isinstance(q, CliffordElement) and not field.is_zero(q):
            return v


def random_gspin(basis: CliffordBasis, rng, vectors: int = 2) -> GSpinElement:
    """Random certified element: nonzero scalar times an even product of
    anisotropic vectors (such products always normalize the vector space)."""
    if vectors % 2:
        raise BasisMismatch("vector count must be even")
    g = basis.scalar(random_scalar(basis, rng, nonzero=True))
    for _ in range(vectors):
        g = cliff_mul(g, random_vector(basis, rng))
    cert = is_gspin(g)
    if isinstance(cert, GSpinRejection):  # cannot happen for even versors
        raise NotInvertible(f"versor sampling failed: {cert.clause}")
    return cert
