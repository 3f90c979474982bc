"""Component-group arithmetic for abstracted L-parameters.

Parameters are decomposition data: a multiplicity-free list of self-dual
summands with a target family (odd rank dualizes to symplectic similitudes,
even rank to orthogonal ones).  Two order conventions are carried throughout
because the literature's statement and proof disagree by one factor of two;
reports always show both.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Tuple

from .errors import InvalidDecomposition, TargetMismatch

CONVENTIONS = ("literal", "paper")


@dataclass(frozen=True)
class Summand:
    dim: int
    kind: str  # "symplectic" | "orthogonal"
    label: Optional[str] = None

    def key(self):
        return (self.dim, self.kind, self.label)


@dataclass(frozen=True)
class ParameterDecomposition:
    """Multiset-free decomposition standing in for a global parameter."""

    target: str  # "odd" | "even"
    summands: Tuple[Summand, ...]

    def __post_init__(self):
        if self.target not in ("odd", "even"):
            raise InvalidDecomposition(f"unknown target {self.target!r}")
        if not self.summands:
            raise InvalidDecomposition("decomposition needs at least one summand")
        keys = [s.key() for s in self.summands]
        if len(set(keys)) != len(keys):
            raise InvalidDecomposition(
                "summands must be multiplicity-free; give distinct labels to "
                "distinguish isomorphism classes of equal dimension"
            )
        expected_kind = "symplectic" if self.target == "odd" else "orthogonal"
        for s in self.summands:
            if s.dim < 1:
                raise InvalidDecomposition("summand dimensions must be positive")
            if s.kind != expected_kind:
                raise InvalidDecomposition(
                    f"{self.target} target requires {expected_kind} summands"
                )
            if s.kind == "symplectic" and s.dim % 2:
                raise InvalidDecomposition("symplectic summands have even dimension")
        if self.total_dim % 2:
            raise InvalidDecomposition("total dimension must be even")

    @property
    def k(self) -> int:
        return len(self.summands)

    @property
    def total_dim(self) -> int:
        return sum(s.dim for s in self.summands)

    @property
    def m(self) -> int:
        return self.total_dim // 2

    @property
    def group_rank_n(self) -> int:
        """Dimension n of the quadratic space whose group has this dual target."""
        return 2 * self.m + 1 if self.target == "odd" else 2 * self.m

    @staticmethod
    def from_json(doc, target: str) -> "ParameterDecomposition":
        summands = tuple(
            Summand(int(entry["dim"]), entry["kind"], entry.get("label"))
            for entry in doc
        )
        return ParameterDecomposition(target, summands)


def enumerate_sign_quotient(k: int):
    """Cosets of {(±1,...,±1)} by the diagonal {±(1,...,1)}, enumerated."""
    diagonal = {tuple([1] * k), tuple([-1] * k)}
    cosets = []
    seen = set()
    for signs in product((1, -1), repeat=k):
        if signs in seen:
            continue
        coset = frozenset(
            tuple(s * d for s, d in zip(signs, diag_elt)) for diag_elt in diagonal
        )
        seen.update(coset)
        cosets.append(coset)
    return cosets


def s_phi_order(decomp: ParameterDecomposition, convention: str = "literal") -> int:
    """Order of the component group of a parameter with k distinct summands.

    The literal convention counts the explicit quotient of the sign group by
    the diagonal center (2^(k-1)); the paper convention returns 2^k.
    """
    if convention not in CONVENTIONS:
        raise InvalidDecomposition(f"unknown convention {convention!r}")
    k = decomp.k
    if convention == "paper":
        return 1 << k
    return len(enumerate_sign_quotient(k))


def centre_of_cover(decomp: ParameterDecomposition):
    """(name, order) of the center of the simply connected dual cover."""
    if decomp.target == "odd":
        return ("mu2", 2)
    return ("mu2xmu2", 4) if decomp.m % 2 == 0 else ("mu4", 4)


def s_phi_sc_order(decomp: ParameterDecomposition, convention: str = "literal") -> int:
    """Order of the enlarged component group: 2|S| (odd) or 4|S| (even)."""
    factor = 2 if decomp.target == "odd" else 4
    return factor * s_phi_order(decomp, convention)


@dataclass(frozen=True)
class ComponentGroupReport:
    k: int
    order_literal: int
    order_paper: int
    order_sc_literal: int
    order_sc_paper: int
    z_hat_name: str
    z_hat_order: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "order": {"literal": self.order_literal, "paper": self.order_paper},
            "order_sc": {"literal": self.order_sc_literal, "paper": self.order_sc_paper},
            "z_hat": {"name": self.z_hat_name, "order": self.z_hat_order},
        }


def component_group_report(decomp: ParameterDecomposition) -> ComponentGroupReport:
    name, order = centre_of_cover(decomp)
    report = ComponentGroupReport(
        k=decomp.k,
        order_literal=s_phi_order(decomp, "literal"),
        order_paper=s_phi_order(decomp, "paper"),
        order_sc_literal=s_phi_sc_order(decomp, "literal"),
        order_sc_paper=s_phi_sc_order(decomp, "paper"),
        z_hat_name=name,
        z_hat_order=order,
    )
    # |S_sc| = |Z_hat| * |S| must hold under either convention
    for sc, plain in (
        (report.order_sc_literal, report.order_literal),
        (report.order_sc_paper, report.order_paper),
    ):
        if decomp.target == "even" and sc != order * plain:
            raise InvalidDecomposition("cover order relation violated")
        if decomp.target == "odd" and sc != 2 * plain:
            raise InvalidDecomposition("cover order relation violated")
    return report


def beta_constant(
    decomp_n: ParameterDecomposition,
    decomp_next: ParameterDecomposition,
    convention: str = "literal",
) -> int:
    """The constant 2^beta = 4 |S_n| |S_{n+1}| for an adjacent pair.

    Cross-checked against (1/2) |S_{n,sc}| |S_{n+1,sc}|, which must agree for
    every input under both conventions.
    """
    if {decomp_n.target, decomp_next.target} != {"odd", "even"}:
        raise TargetMismatch("one target must be odd and the other even")
    if abs(decomp_n.group_rank_n - decomp_next.group_rank_n) != 1:
        raise TargetMismatch(
            f"ranks {decomp_n.group_rank_n} and {decomp_next.group_rank_n} are not adjacent"
        )
    primary = 4 * s_phi_order(decomp_n, convention) * s_phi_order(decomp_next, convention)
    cross = (
        s_phi_sc_order(decomp_n, convention)
        * s_phi_sc_order(decomp_next, convention)
    ) // 2
    if primary != cross:
        raise TargetMismatch("the two beta formulas disagree; convention handling is broken")
    return primary


@dataclass(frozen=True)
class DualGroupDescriptor:
    family: str  # "GSp" | "GSO" | "GL1"
    rank: int
    twisted: Optional[bool]

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank, "twisted": self.twisted}


def dual_group_descriptor(n: int, disc_trivial: bool = True) -> DualGroupDescriptor:
    """Dual family for rank n: GSp_{2m} when n = 2m+1, GSO_{2m} when n = 2m."""
    if n < 1:
        raise InvalidDecomposition("rank must be positive")
    if n == 1:
        return DualGroupDescriptor("GL1", 0, None)
    if n % 2 == 1:
        return DualGroupDescriptor("GSp", (n - 1) // 2, None)
    return DualGroupDescriptor("GSO", n // 2, not disc_trivial)
