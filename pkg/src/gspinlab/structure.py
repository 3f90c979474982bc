"""Structure of the even Clifford algebra and low-rank group witnesses.

Classifies C+(V) (center, simple-factor degree, involution type), extracts
quaternion data in dimension three, and produces machine-checked witness
reports for the low-rank identifications, including the four-dimensional
module with invariant alternating form for split five-dimensional spaces.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import linalg
from .clifford import (
    CliffordBasis,
    CliffordElement,
    GSpinRejection,
    cliff_mul,
    involution,
    is_gspin,
    random_element,
    random_gspin,
    random_scalar,
    spinor_norm,
)
from .errors import (
    DimensionCap,
    FormNotFound,
    HypothesisViolation,
    NotSplit,
    UnsupportedField,
)
from .quadspace import (
    QuadraticSpace,
    SquareClass,
    discriminant,
    hilbert_symbol,
    relevant_places,
)

STRUCTURE_DIM_CAP = 8
DEFAULT_SEED = 1729


def even_monomials(n: int):
    return [m for m in range(1 << n) if m.bit_count() % 2 == 0]


def _element_from_coords(basis: CliffordBasis, masks, coords) -> CliffordElement:
    field = basis.field
    coeffs = {
        mask: c for mask, c in zip(masks, coords) if not field.is_zero(c)
    }
    return CliffordElement(basis, coeffs)


def _coords_of(element: CliffordElement, masks):
    field = element.basis.field
    return [element.coeffs.get(m, field.zero()) for m in masks]


def center_basis(space: QuadraticSpace):
    """Basis of Z(C+(V)) found by solving the commutation system exactly.

    The even algebra is generated by the bivectors e_1 e_i, so centrality is
    the linear condition [x, e_1 e_i] = 0 for i = 2..n.
    """
    if space.dim > STRUCTURE_DIM_CAP:
        raise DimensionCap(f"structure classification is capped at dim {STRUCTURE_DIM_CAP}")
    basis = CliffordBasis(space)
    field = basis.field
    n = basis.n
    masks = even_monomials(n)
    if n == 1:
        return [basis.one()]
    rows = []
    for i in range(2, n + 1):
        gen = cliff_mul(basis.e(1), basis.e(i))
        commutator_columns = []
        for mask in masks:
            unit = CliffordElement(basis, {mask: field.one()})
            bracket = cliff_mul(unit, gen) - cliff_mul(gen, unit)
            commutator_columns.append(_coords_of(bracket, masks))
        # rows of the stacked system: one equation per even coordinate
        for r in range(len(masks)):
            rows.append([commutator_columns[c][r] for c in range(len(masks))])
    kernel = linalg.nullspace(rows, field)
    reduced, _ = linalg.rref(kernel, field) if kernel else ([], [])
    return [_element_from_coords(basis, masks, vec) for vec in reduced]


@dataclass(frozen=True)
class EvenCliffordClassification:
    center_dim: int
    center_kind: str  # "F" | "FxF" | "E"
    center_disc: Optional[SquareClass]
    involution_kind: str  # "orthogonal" | "symplectic" | "unitary"
    factor_degree: int
    factor_kinds: Optional[tuple]

    def to_json(self) -> dict:
        return {
            "center_dim": self.center_dim,
            "center_kind": self.center_kind,
            "center_disc": None if self.center_disc is None else self.center_disc.to_json(),
            "involution_kind": self.involution_kind,
            "factor_degree": self.factor_degree,
            "factor_kinds": list(self.factor_kinds) if self.factor_kinds else None,
        }


def _fixed_masks(masks):
    """Monomials fixed by the canonical involution: grade = 0 mod 4."""
    return [m for m in masks if (m.bit_count() * (m.bit_count() - 1) // 2) % 2 == 0]


def _kind_from_fixed_dim(fixed_dim: int, m: int) -> str:
    if fixed_dim == m * (m + 1) // 2:
        return "orthogonal"
    if fixed_dim == m * (m - 1) // 2:
        return "symplectic"
    raise FormNotFound(f"fixed dimension {fixed_dim} matches no involution type for degree {m}")


def classify_even_clifford(space: QuadraticSpace) -> EvenCliffordClassification:
    """Center kind, factor degree and involution type of C+(V).

    The involution type is read off the dimension of the *-fixed subspace per
    simple factor; unitary means * acts nontrivially on a 2-dimensional
    center.
    """
    if space.dim > STRUCTURE_DIM_CAP:
        raise DimensionCap(f"structure classification is capped at dim {STRUCTURE_DIM_CAP}")
    basis = CliffordBasis(space)
    field = basis.field
    n = basis.n
    masks = even_monomials(n)
    center = center_basis(space)
    fixed = _fixed_masks(masks)

    if n % 2 == 1:
        m = 1 << ((n - 1) // 2)
        kind = _kind_from_fixed_dim(len(fixed), m) if n > 1 else "orthogonal"
        return EvenCliffordClassification(1, "F", None, kind, m, None)

    # even dimension: a 2-dimensional center spanned by 1 and z
    z = next(el for el in center if not el.is_scalar)
    z_sq = cliff_mul(z, z)
    if not z_sq.is_scalar:
        raise FormNotFound("central element has non-scalar square")
    c = z_sq.scalar_part()
    split = field.is_square(c)
    center_kind = "FxF" if split else "E"
    center_disc = None if split else SquareClass.of(field, c)
    m = 1 << ((n - 2) // 2)

    if involution(z) == -z:
        return EvenCliffordClassification(2, center_kind, center_disc, "unitary", m, None)

    if split:
        root = field.sqrt(c)
        z_norm = z.scale(field.inv(root))
        half = field.inv(field.cast(2))
        kinds = []
        for sign in (1, -1):
            idem = (basis.one() + z_norm.scale(field.cast(sign))).scale(half)
            rows = []
            for mask in fixed:
                unit = CliffordElement(basis, {mask: field.one()})
                rows.append(_coords_of(cliff_mul(idem, unit), masks))
            kinds.append(_kind_from_fixed_dim(linalg.rank(rows, field), m))
        overall = kinds[0] if kinds[0] == kinds[1] else "mixed"
        return EvenCliffordClassification(2, center_kind, center_disc, overall, m, tuple(kinds))

    fixed_dim = len(fixed)
    if fixed_dim == m * (m + 1):
        kind = "orthogonal"
    elif fixed_dim == m * (m - 1):
        kind = "symplectic"
    else:
        raise FormNotFound(f"fixed dimension {fixed_dim} matches no type over the center field")
    return EvenCliffordClassification(2, center_kind, center_disc, kind, m, None)


# -- quaternion data in dimension three -----------------------------------------


@dataclass(frozen=True)
class QuaternionData:
    a: Fraction
    b: Fraction
    ramified_places: frozenset

    @property
    def is_split(self) -> bool:
        return not self.ramified_places

    def to_json(self) -> dict:
        places = sorted(self.ramified_places, key=lambda v: (-1 if v == "real" else int(v)))
        return {"a": str(self.a), "b": str(self.b), "ramified_places": [str(v) for v in places]}


def quaternion_data(space: QuadraticSpace) -> QuaternionData:
    """Quaternion presentation of C+(V) for dim V = 3 over Q.

    With orthogonal q-values (a, b, c), the generators i = e1 e2 and j = e2 e3
    satisfy i^2 = -ab, j^2 = -bc, ij = -ji (verified exactly); ramified places
    come from Hilbert symbols.
    """
    if space.dim != 3:
        raise HypothesisViolation("quaternion data requires a 3-dimensional space")
    if space.field.kind != "Q":
        raise UnsupportedField("ramification sets are computed over Q")
    basis = CliffordBasis(space)
    d1, d2, d3 = basis.diag
    qa, qb = -d1 * d2, -d2 * d3
    i = cliff_mul(basis.e(1), basis.e(2))
    j = cliff_mul(basis.e(2), basis.e(3))
    assert cliff_mul(i, i) == basis.scalar(qa)
    assert cliff_mul(j, j) == basis.scalar(qb)
    assert cliff_mul(i, j) == -cliff_mul(j, i)
    ramified = frozenset(
        v for v in relevant_places(qa, qb) if hilbert_symbol(qa, qb, v) == -1
    )
    if len(ramified) % 2:
        raise FormNotFound("ramified set has odd cardinality; Hilbert symbols are broken")
    return QuaternionData(qa, qb, ramified)


# -- the split five-dimensional module ------------------------------------------


@dataclass(frozen=True)
class SpinModuleWitness:
    """Four-dimensional module for C+(V5) with its invariant alternating form.

    `vector_action` holds the 4x4 matrices of the five orthogonal basis
    vectors (products of two of them act on the module as the even algebra);
    `symplectic_form` is the matrix J with action(g)^T J action(g) = N(g) J.
    """

    basis: CliffordBasis
    vector_action: tuple
    symplectic_form: tuple

    def act(self, element: CliffordElement):
        field = self.basis.field
        size = 4
        out = [[field.zero()] * size for _ in range(size)]
        for mask, coeff in element.coeffs.items():
            prod = linalg.identity(size, field)
            for i in range(self.basis.n):
                if mask >> i & 1:
                    prod = linalg.matmul(prod, self.vector_action[i], field)
            for r in range(size):
                for c_ in range(size):
                    out[r][c_] = field.add(out[r][c_], field.mul(coeff, prod[r][c_]))
        return out

    def generator_action(self) -> dict:
        """Images of the even generators e_i e_j, keyed by (i, j)."""
        out = {}
        for i in range(1, self.basis.n + 1):
            for j in range(i + 1, self.basis.n + 1):
                pair = cliff_mul(self.basis.e(i), self.basis.e(j))
                out[(i, j)] = self.act(pair)
        return out

    def similitude(self, matrix):
        """The factor mu with M^T J M = mu J, or None when M is not a similitude."""
        field = self.basis.field
        j = [list(row) for row in self.symplectic_form]
        mt = linalg.transpose(matrix)
        mjm = linalg.matmul(linalg.matmul(mt, j, field), matrix, field)
        mu = None
        for r in range(4):
            for c in range(4):
                if not field.is_zero(j[r][c]):
                    candidate = field.div(mjm[r][c], j[r][c])
                    if mu is None:
                        mu = candidate
                    elif candidate != mu:
                        return None
                elif not field.is_zero(mjm[r][c]):
                    return None
        return mu


def _block_shape_is_split5(space: QuadraticSpace) -> bool:
    field = space.field
    g = space.gram
    if space.dim != 5:
        return False
    one = field.one()
    for r in range(5):
        for c in range(5):
            expected = field.zero()
            if (r, c) in ((0, 1), (1, 0), (2, 3), (3, 2)):
                expected = one
            elif r == c == 4:
                continue
            if g[r][c] != expected:
                return False
    return not field.is_zero(g[4][4])


def spin_module_split(space: QuadraticSpace) -> SpinModuleWitness:
    """Build the 4-dimensional module for a split space H + H + <a>.

    The module is the exterior algebra of the isotropic plane spanned by the
    first vectors of the two hyperbolic blocks, ordered (1, x1, x2, x1^x2);
    isotropic partners act by scaled contraction so that v^2 = q(v) holds
    literally, and the last vector acts by sqrt(a) times the grade parity.
    The invariant form is recovered by solving the adjoint condition.
    """
    if not _block_shape_is_split5(space):
        raise NotSplit("expected the Gram block shape H + H + <a>")
    field = space.field
    a = space.gram[4][4]
    root = field.sqrt(a)
    if root is None:
        raise NotSplit(
            "the odd generators act on a 4-dimensional module only when the "
            "last diagonal entry is a square; rescale the form first"
        )
    one, zero = field.one(), field.zero()
    minus = field.neg(one)
    two = field.cast(2)

    def matrix(entries):
        out = [[zero] * 4 for _ in range(4)]
        for (r, c), v in entries.items():
            out[r][c] = v
        return out

    wedge1 = matrix({(1, 0): one, (3, 2): one})
    wedge2 = matrix({(2, 0): one, (3, 1): minus})
    contr1 = matrix({(0, 1): one, (2, 3): one})
    contr2 = matrix({(0, 2): one, (1, 3): minus})
    parity = matrix({(0, 0): one, (1, 1): minus, (2, 2): minus, (3, 3): one})
    b_action = [
        wedge1,
        [[field.mul(two, x) for x in row] for row in contr1],
        wedge2,
        [[field.mul(two, x) for x in row] for row in contr2],
        [[field.mul(root, x) for x in row] for row in parity],
    ]
    # sanity: the defining Clifford relations on the original basis
    for r in range(5):
        for c in range(5):
            anti = linalg.matmul(b_action[r], b_action[c], field)
            anti2 = linalg.matmul(b_action[c], b_action[r], field)
            want = field.mul(field.cast(2), space.gram[r][c])
            for u in range(4):
                for v in range(4):
                    got = field.add(anti[u][v], anti2[u][v])
                    expected = want if u == v else zero
                    if got != expected:
                        raise FormNotFound("module generators violate the Clifford relations")

    basis = CliffordBasis(space)
    vector_action = []
    for i in range(5):
        acc = [[zero] * 4 for _ in range(4)]
        for j in range(5):
            coeff = basis.matrix[j][i]
            if field.is_zero(coeff):
                continue
            for u in range(4):
                for v in range(4):
                    acc[u][v] = field.add(acc[u][v], field.mul(coeff, b_action[j][u][v]))
        vector_action.append(tuple(tuple(row) for row in acc))

    witness = SpinModuleWitness(basis, tuple(vector_action), ())
    # solve action(g)^T B = B action(g*) over the 16 unknowns of B
    rows = []
    for i in range(1, 6):
        for j in range(i + 1, 6):
            g = cliff_mul(basis.e(i), basis.e(j))
            mg = witness.act(g)
            mg_star = witness.act(involution(g))
            for u in range(4):
                for v in range(4):
                    row = [zero] * 16
                    for k in range(4):
                        row[k * 4 + v] = field.add(row[k * 4 + v], mg[k][u])
                        row[u * 4 + k] = field.sub(row[u * 4 + k], mg_star[k][v])
                    rows.append(row)
    kernel = linalg.nullspace(rows, field)
    if not kernel:
        raise FormNotFound("no invariant bilinear form exists; module build is broken")
    if len(kernel) > 1:
        raise FormNotFound("invariant form is not unique up to scalar")
    flat = kernel[0]
    lead = next(x for x in flat if not field.is_zero(x))
    flat = [field.div(x, lead) for x in flat]
    form = tuple(tuple(flat[r * 4 + c] for c in range(4)) for r in range(4))
    for r in range(4):
        for c in range(4):
            if form[r][c] != field.neg(form[c][r]):
                raise FormNotFound("invariant form is not alternating")
    if field.is_zero(linalg.det([list(r) for r in form], field)):
        raise FormNotFound("invariant form is degenerate")
    return SpinModuleWitness(basis, tuple(vector_action), form)


# -- low-rank witness reports ----------------------------------------------------


def _check(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "pass": bool(passed), "detail": detail}


def _random_even_scalar_norm(basis: CliffordBasis, rng, attempts=2000):
    """Rejection-sample an invertible even element with nonzero scalar norm."""
    for _ in range(attempts):
        x = random_element(basis, rng, terms=4, even=True)
        if x.is_zero:
            continue
        norm = spinor_norm(x)
        if isinstance(norm, CliffordElement) or basis.field.is_zero(norm):
            continue
        return x
    return None


def _symplectic_similitude_sample(witness: SpinModuleWitness, rng):
    """Random element of GSp(J): transvections times the action of a versor."""
    basis = witness.basis
    field = basis.field
    j = [list(row) for row in witness.symplectic_form]
    out = linalg.identity(4, field)
    for _ in range(rng.randint(1, 3)):
        v = [field.cast(rng.randint(-2, 2)) for _ in range(4)]
        if all(field.is_zero(x) for x in v):
            v[rng.randrange(4)] = field.one()
        c = field.cast(rng.randint(-2, 2))
        jv = linalg.matvec(j, v, field)
        trans = linalg.identity(4, field)
        for r in range(4):
            for s in range(4):
                trans[r][s] = field.add(trans[r][s], field.mul(c, field.mul(v[r], jv[s])))
        out = linalg.matmul(out, trans, field)
    versor = random_gspin(basis, rng, vectors=2)
    out = linalg.matmul(out, witness.act(versor.element), field)
    return out


def _pullback(witness: SpinModuleWitness, matrix) -> CliffordElement:
    """Invert the module action on the even subalgebra."""
    basis = witness.basis
    field = basis.field
    masks = even_monomials(basis.n)
    columns = []
    for mask in masks:
        m = witness.act(CliffordElement(basis, {mask: field.one()}))
        columns.append([m[r][c] for r in range(4) for c in range(4)])
    system = [[columns[c][r] for c in range(len(masks))] for r in range(16)]
    target = [matrix[r][c] for r in range(4) for c in range(4)]
    solution = linalg.solve(system, target, field)
    if solution is None:
        raise FormNotFound("matrix is not in the image of the even algebra")
    return _element_from_coords(basis, masks, solution)


def verify_low_rank(
    space: QuadraticSpace,
    n: int,
    seed: int = DEFAULT_SEED,
    samples: int = 50,
) -> dict:
    """Machine-checked witness report for the rank-n identification.

    Checks (i) that the structural classification matches the expected case,
    (ii) that sampled invertible even elements with scalar norm are accepted
    as group elements, and (iii) that the spinor norm agrees with the norm
    formula of the case.
    """
    if space.dim != n or not 1 <= n <= 5:
        raise HypothesisViolation(f"space dimension {space.dim} does not match case n={n}")
    rng = random.Random(seed)
    basis = CliffordBasis(space)
    field = basis.field
    checks = []
    classification = classify_even_clifford(space)

    if n == 1:
        checks.append(
            _check(
                "classification",
                classification.center_kind == "F" and classification.factor_degree == 1,
                "C+ is the base field",
            )
        )
        ok_norm = True
        for _ in range(samples):
            g = basis.scalar(random_scalar(basis, rng, nonzero=True))
            cert = is_gspin(g)
            ok_norm &= not isinstance(cert, GSpinRejection) and cert.norm == field.mul(
                g.scalar_part(), g.scalar_part()
            )
        checks.append(_check("norm_is_square", ok_norm, "N(g) = g^2 on all samples"))

    elif n == 2:
        split = discriminant(space, signed=True).is_trivial
        expected_kind = "FxF" if split else "E"
        checks.append(
            _check(
                "classification",
                classification.center_dim == 2
                and classification.center_kind == expected_kind
                and classification.involution_kind == "unitary",
                f"two-dimensional center, {expected_kind} per the signed discriminant",
            )
        )
        z = next(el for el in center_basis(space) if not el.is_scalar)
        c = cliff_mul(z, z).scalar_part()
        ok_accept = ok_norm = True
        for _ in range(samples):
            x = _random_even_scalar_norm(basis, rng)
            cert = is_gspin(x)
            ok_accept &= not isinstance(cert, GSpinRejection)
            if isinstance(cert, GSpinRejection):
                continue
            coords = {0: field.zero()}
            coords.update(x.coeffs)
            # x = s + t z in the commutative even algebra; N = s^2 - t^2 z^2
            t = None
            rest = x - basis.scalar(x.scalar_part())
            z_nonscalar = z - basis.scalar(z.scalar_part())
            lead_mask = next(iter(z_nonscalar.coeffs))
            t = field.div(rest.coeffs.get(lead_mask, field.zero()), z_nonscalar.coeffs[lead_mask])
            s = field.sub(x.scalar_part(), field.mul(t, z.scalar_part()))
            predicted = field.sub(field.mul(s, s), field.mul(field.mul(t, t), c))
            ok_norm &= cert.norm == predicted
        checks.append(_check("sim_equals_gspin", ok_accept, "even units with scalar norm are group elements"))
        checks.append(_check("norm_formula", ok_norm, "N(s + t z) = s^2 - t^2 z^2"))

    elif n == 3:
        checks.append(
            _check(
                "classification",
                classification.center_kind == "F"
                and classification.factor_degree == 2
                and classification.involution_kind == "symplectic",
                "C+ is a quaternion algebra with symplectic involution",
            )
        )
        masks = even_monomials(3)
        ok_accept = ok_norm = True
        for _ in range(samples):
            x = _random_even_scalar_norm(basis, rng)
            cert = is_gspin(x)
            ok_accept &= not isinstance(cert, GSpinRejection)
            if isinstance(cert, GSpinRejection):
                continue
            rows = []
            for mask in masks:
                unit = CliffordElement(basis, {mask: field.one()})
                rows.append(_coords_of(cliff_mul(x, unit), masks))
            regular_det = linalg.det([[rows[c][r] for c in range(4)] for r in range(4)], field)
            ok_norm &= regular_det == field.mul(cert.norm, cert.norm)
        checks.append(_check("sim_equals_gspin", ok_accept, "every even unit is a group element"))
        checks.append(
            _check("reduced_norm_square", ok_norm, "det of left multiplication equals N(x)^2")
        )
        if field.kind == "Q":
            data = quaternion_data(space)
            checks.append(
                _check(
                    "ramification_parity",
                    len(data.ramified_places) % 2 == 0,
                    f"ramified at {sorted(map(str, data.ramified_places))}",
                )
            )

    elif n == 4:
        split = discriminant(space, signed=True).is_trivial
        expected_kind = "FxF" if split else "E"
        checks.append(
            _check(
                "classification",
                classification.center_dim == 2
                and classification.center_kind == expected_kind
                and classification.involution_kind == "symplectic",
                "two quaternion factors (or one over E) with symplectic involution",
            )
        )
        ok_accept = ok_norm = True
        found = 0
        for _ in range(samples):
            if field.kind == "Fp":
                x = _random_even_scalar_norm(basis, rng)
                if x is None:
                    continue
                cert = is_gspin(x)
                ok_accept &= not isinstance(cert, GSpinRejection)
                found += 1
            else:
                cert = random_gspin(basis, rng, vectors=2)
                x = cert.element
                found += 1
            if isinstance(cert, GSpinRejection):
                continue
            norm = spinor_norm(x)
            ok_norm &= not isinstance(norm, CliffordElement)
        checks.append(
            _check(
                "sim_equals_gspin",
                ok_accept and found > 0,
                "even units with equal factor norms are group elements",
            )
        )
        checks.append(_check("norm_in_F", ok_norm, "spinor norm lands in the base field"))

    else:  # n == 5
        if not _block_shape_is_split5(space):
            raise HypothesisViolation("the rank-5 witness needs the split block form H+H+<a>")
        checks.append(
            _check(
                "classification",
                classification.center_kind == "F"
                and classification.factor_degree == 4
                and classification.involution_kind == "symplectic",
                "C+ is a degree-4 matrix algebra with symplectic involution",
            )
        )
        witness = spin_module_split(space)
        ok_sq = True
        for i in range(5):
            m = [list(row) for row in witness.vector_action[i]]
            sq = linalg.matmul(m, m, field)
            want = basis.diag[i]
            for r in range(4):
                for c in range(4):
                    expected = want if r == c else field.zero()
                    ok_sq &= sq[r][c] == expected
        checks.append(_check("generator_squares", ok_sq, "action(e_i)^2 = q(e_i) I"))
        j = witness.symplectic_form
        alt = all(
            j[r][c] == field.neg(j[c][r]) for r in range(4) for c in range(4)
        )
        checks.append(_check("form_alternating", alt, "J^T = -J"))
        ok_mult = True
        for _ in range(min(samples, 100)):
            x = random_element(basis, rng, terms=3, even=True)
            y = random_element(basis, rng, terms=3, even=True)
            left = witness.act(cliff_mul(x, y))
            right = linalg.matmul(witness.act(x), witness.act(y), field)
            ok_mult &= left == right
        checks.append(_check("action_multiplicative", ok_mult, "action(xy) = action(x)action(y)"))
        ok_adj = True
        for _ in range(min(samples, 50)):
            x = random_element(basis, rng, terms=3, even=True)
            mx = witness.act(x)
            mstar = witness.act(involution(x))
            jmat = [list(row) for row in j]
            jinv = linalg.inverse(jmat, field)
            adj = linalg.matmul(linalg.matmul(jinv, linalg.transpose(mx), field), jmat, field)
            ok_adj &= adj == mstar
        checks.append(
            _check("adjoint_matches_involution", ok_adj, "J^-1 M^T J pulls back to the canonical involution")
        )
        ok_sim = ok_accept = True
        for _ in range(samples):
            m = _symplectic_similitude_sample(witness, rng)
            mu = witness.similitude(m)
            if mu is None or field.is_zero(mu):
                ok_sim = False
                continue
            x = _pullback(witness, m)
            cert = is_gspin(x)
            ok_accept &= not isinstance(cert, GSpinRejection)
            if not isinstance(cert, GSpinRejection):
                ok_sim &= cert.norm == mu
        checks.append(
            _check("sim_equals_gspin", ok_accept, "symplectic similitudes pull back to group elements")
        )
        checks.append(
            _check("spin_norm_is_similitude", ok_sim, "N(g) equals the similitude factor of action(g)")
        )

    return {
        "case": n,
        "classification": classification.to_json(),
        "samples": samples,
        "seed": seed,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
