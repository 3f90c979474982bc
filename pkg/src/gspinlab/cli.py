"""Command-line front end: JSON in, JSON out, deterministic under a seed.

Exit codes: 0 success / all checks pass, 1 verification failure or domain
error, 2 usage error.  Every output is a single JSON document of the shape
{"command": ..., "ok": ..., "result": ...} validating against
schemas/cli_report.schema.json.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import KERNEL_IMPLEMENTATION
from .clifford import CliffordBasis, CliffordElement, GSpinRejection, cliff_mul, is_gspin
from .errors import GspinError
from .lfactors import (
    LocalFieldData,
    SatakeClass,
    adjoint_eigenvalues,
    delta_so,
    euler_factor,
    std_eigenvalues,
    tensor_eigenvalues,
)
from .lgroup import (
    ParameterDecomposition,
    beta_constant,
    component_group_report,
    dual_group_descriptor,
)
from .localperiod import (
    PeriodCase,
    SphericalRep,
    UnramifiedCharacterPair,
    random_case,
    verify_identity,
)
from .quadspace import (
    REAL_PLACE,
    QuadraticSpace,
    diagonalize,
    discriminant,
    hilbert_symbol,
    standard_space,
    witt_invariants,
)
from .structure import classify_even_clifford, quaternion_data, verify_low_rank

DEFAULT_SEED = 1729


def _parse_place(text: str):
    return REAL_PLACE if text in ("real", "oo", "infinity") else int(text)


def _parse_complex(text: str) -> complex:
    data = json.loads(text)
    if isinstance(data, list):
        return complex(data[0], data[1])
    return complex(data)


def _space_from_arg(text: str) -> QuadraticSpace:
    return QuadraticSpace.from_json(json.loads(text))


def _element_from_arg(text: str, basis: CliffordBasis) -> CliffordElement:
    doc = json.loads(text)
    if isinstance(doc, list):
        doc = {"basis": basis.space.content_hash(), "terms": doc}
    doc.setdefault("basis", basis.space.content_hash())
    return CliffordElement.from_json(doc, basis)


def _complex_json(z: complex):
    z = complex(z)
    return [z.real, z.imag]


def _scalar_json(value):
    if isinstance(value, complex):
        return _complex_json(value)
    return str(value)


# -- subcommand handlers --------------------------------------------------------


def _cmd_quad(args):
    if args.quad_op == "diagonalize":
        space = _space_from_arg(args.space)
        basis, diag = diagonalize(space)
        field = space.field
        return True, {
            "basis": [[field.scalar_to_json(x) for x in row] for row in basis],
            "diag": [field.scalar_to_json(x) for x in diag],
        }
    if args.quad_op == "disc":
        space = _space_from_arg(args.space)
        return True, {"disc": discriminant(space, signed=args.signed).to_json()}
    if args.quad_op == "hilbert":
        value = hilbert_symbol(Fraction(args.a), Fraction(args.b), _parse_place(args.place))
        return True, {"symbol": value}
    if args.quad_op == "witt":
        space = _space_from_arg(args.space)
        return True, witt_invariants(space, _parse_place(args.place)).to_json()
    if args.quad_op == "standard":
        from .fields import FieldTag

        field = FieldTag.parse(args.field)
        diag = json.loads(args.diag) if args.diag else []
        norm_disc = Fraction(args.norm_disc) if args.norm_disc else None
        space = standard_space(
            hyperbolic=args.hyperbolic, diag=diag, norm_field_disc=norm_disc, field=field
        )
        return True, space.to_json()
    raise GspinError(f"unknown quad operation {args.quad_op!r}")


def _cmd_clifford(args):
    space = _space_from_arg(args.space)
    basis = CliffordBasis(space)
    if args.clifford_op == "mul":
        x = _element_from_arg(args.x, basis)
        y = _element_from_arg(args.y, basis)
        return True, cliff_mul(x, y).to_json()
    if args.clifford_op == "gspin":
        x = _element_from_arg(args.x, basis)
        cert = is_gspin(x)
        if isinstance(cert, GSpinRejection):
            return False, {"accepted": False, "clause": cert.clause, "detail": cert.detail}
        return True, {
            "accepted": True,
            "norm": basis.field.scalar_to_json(cert.norm),
            "inverse": cert.inverse.to_json(),
        }
    raise GspinError(f"unknown clifford operation {args.clifford_op!r}")


def _cmd_structure(args):
    space = _space_from_arg(args.space)
    if args.structure_op == "classify":
        return True, classify_even_clifford(space).to_json()
    if args.structure_op == "verify-lowrank":
        report = verify_low_rank(space, args.n, seed=args.seed, samples=args.samples)
        return report["pass"], report
    if args.structure_op == "quaternion":
        return True, quaternion_data(space).to_json()
    raise GspinError(f"unknown structure operation {args.structure_op!r}")


def _cmd_lgroup(args):
    if args.lgroup_op == "compgroup":
        decomp = ParameterDecomposition.from_json(json.loads(args.decomp), args.target)
        report = component_group_report(decomp).to_json()
        if args.convention != "both":
            order = report["order"][args.convention]
            report = dict(report, order_selected=order)
        report["dual_group"] = dual_group_descriptor(
            decomp.group_rank_n, disc_trivial=not args.twisted
        ).to_json()
        return True, report
    if args.lgroup_op == "beta":
        decomp_a = ParameterDecomposition.from_json(json.loads(args.decomp_a), args.target_a)
        decomp_b = ParameterDecomposition.from_json(json.loads(args.decomp_b), args.target_b)
        conventions = (
            ("literal", "paper") if args.convention == "both" else (args.convention,)
        )
        values = {conv: beta_constant(decomp_a, decomp_b, conv) for conv in conventions}
        return True, {"two_beta": values}
    raise GspinError(f"unknown lgroup operation {args.lgroup_op!r}")


def _cmd_lfactor(args):
    cls = SatakeClass.from_json(json.loads(args.satake_class))
    fd = LocalFieldData(args.q) if args.q else None
    s = _parse_complex(args.s) if args.s else None

    def maybe_factor(values):
        out = {"eigenvalues": [_complex_json(v) for v in values]}
        if fd is not None and s is not None:
            out["factor"] = _complex_json(euler_factor(s, values, fd))
            out["q"] = fd.q
            out["s"] = _complex_json(s)
        return out

    if args.lfactor_op == "std":
        return True, maybe_factor(std_eigenvalues(cls))
    if args.lfactor_op == "ad":
        return True, maybe_factor(adjoint_eigenvalues(cls, args.algebra))
    if args.lfactor_op == "tensor":
        other = SatakeClass.from_json(json.loads(args.satake_class2))
        omega = _parse_complex(args.omega)
        return True, maybe_factor(tensor_eigenvalues(cls, other, omega))
    raise GspinError(f"unknown lfactor operation {args.lfactor_op!r}")


def _cmd_delta(args):
    value = delta_so(args.dim, args.q, chi_value=args.chi, mode=args.mode)
    return True, {
        "value": _scalar_json(value),
        "dim": args.dim,
        "q": args.q,
    }


def _rep_from_args(satake_json: str, similitude_json: str, q: int) -> SphericalRep:
    a = _parse_complex(satake_json)
    x0 = _parse_complex(similitude_json)
    return SphericalRep(SatakeClass(("odd", 1), (a,), x0), LocalFieldData(q))


def _case_from_args(args) -> PeriodCase:
    satakes = args.satake or []
    similitudes = args.similitude or []
    if len(satakes) != len(similitudes):
        raise GspinError("--satake and --similitude must be given the same number of times")
    reps = tuple(
        _rep_from_args(sat, sim, args.q) for sat, sim in zip(satakes, similitudes)
    )
    chars = None
    if args.chars:
        values = json.loads(args.chars)
        if args.case == "n2_split":
            chars = UnramifiedCharacterPair(
                True, (complex(values[0][0], values[0][1]), complex(values[1][0], values[1][1]))
            )
        else:
            chars = UnramifiedCharacterPair(False, (complex(values[0], values[1]),))
    return PeriodCase(args.case, reps, chars, _parse_complex(args.omega))


def _cmd_localperiod(args):
    if args.localperiod_op == "verify":
        case = _case_from_args(args)
        report = verify_identity(
            case, tolerance=args.tol, truncation=args.K, omit_delta=args.omit_delta
        )
        return report.passed, report.to_json()
    if args.localperiod_op == "batch":
        with open(args.file) as handle:
            entries = json.load(handle)
        rng = random.Random(args.seed)
        reports = []
        for entry in entries:
            case = random_case(entry["case"], entry["q"], rng)
            report = verify_identity(case, tolerance=args.tol, truncation=args.K)
            reports.append(report.to_json())
        ok = all(r["pass"] for r in reports)
        return ok, {"reports": reports, "all_pass": ok}
    raise GspinError(f"unknown localperiod operation {args.localperiod_op!r}")


# -- the aggregated suite ---------------------------------------------------------


def _suite_quadspace(rng, config):
    from .quadspace import relevant_places

    failures = 0
    trials = config["samples"]
    for _ in range(trials):
        a = Fraction(rng.randint(-30, 30)) or Fraction(1)
        b = Fraction(rng.randint(-30, 30)) or Fraction(2)
        product = 1
        for place in relevant_places(a, b):
            product *= hilbert_symbol(a, b, place)
        if product != 1:
            failures += 1
    return {"name": "quadspace_product_formula", "pass": failures == 0, "trials": trials}


def _suite_clifford(rng, config):
    from .clifford import random_element, random_gspin

    checks = []
    for n in (2, 3, 4, 5):
        space = standard_space(diag=[1] * n)
        basis = CliffordBasis(space)
        ok = True
        for _ in range(config["samples"] // 2):
            x = random_element(basis, rng, terms=3)
            y = random_element(basis, rng, terms=3)
            z = random_element(basis, rng, terms=3)
            ok &= cliff_mul(cliff_mul(x, y), z) == cliff_mul(x, cliff_mul(y, z))
        for _ in range(config["samples"] // 2):
            g = random_gspin(basis, rng)
            h = random_gspin(basis, rng)
            cert = is_gspin(cliff_mul(g.element, h.element))
            ok &= not isinstance(cert, GSpinRejection) and cert.norm == basis.field.mul(
                g.norm, h.norm
            )
        checks.append({"name": f"clifford_n{n}", "pass": bool(ok)})
    return {"name": "clifford_suite", "pass": all(c["pass"] for c in checks), "checks": checks}


def _suite_structure(rng, config):
    from .fields import FieldTag

    expected = {
        0: "orthogonal", 1: "orthogonal", 2: "unitary", 3: "symplectic",
        4: "symplectic", 5: "symplectic", 6: "unitary", 7: "orthogonal",
    }
    ok = True
    for n in range(1, 9):
        for field in (FieldTag.rationals(), FieldTag.prime(5)):
            for _ in range(config["forms_per_case"]):
                if field.kind == "Q":
                    diag = [rng.choice([1, 2, 3, 5, -1, -2, -3]) for _ in range(n)]
                else:
                    diag = [rng.randrange(1, 5) for _ in range(n)]
                cls = classify_even_clifford(standard_space(diag=diag, field=field))
                ok &= cls.involution_kind == expected[n % 8]
    lowrank = []
    cases = [
        (1, standard_space(diag=[1])),
        (2, standard_space(hyperbolic=1)),
        (3, standard_space(diag=[1, 1, 1])),
        (4, standard_space(hyperbolic=2)),
        (5, standard_space(hyperbolic=2, diag=[1])),
    ]
    for n, space in cases:
        report = verify_low_rank(space, n, seed=rng.randrange(1 << 30), samples=config["samples"] // 2)
        lowrank.append({"case": n, "pass": report["pass"]})
    return {
        "name": "structure_suite",
        "pass": ok and all(r["pass"] for r in lowrank),
        "involution_table": ok,
        "lowrank": lowrank,
    }


def _suite_lgroup(rng, config):
    from .lgroup import Summand

    ok = True
    for k_a in range(1, 5):
        for k_b in range(1, 5):
            odd = ParameterDecomposition(
                "odd", tuple(Summand(2, "symplectic", str(i)) for i in range(k_a))
            )
            even = ParameterDecomposition(
                "even", tuple(Summand(2, "orthogonal", str(i)) for i in range(k_b))
            )
            if abs(odd.group_rank_n - even.group_rank_n) != 1:
                continue
            for conv in ("literal", "paper"):
                beta_constant(odd, even, conv)  # raises if the formulas disagree
    waldspurger_odd = ParameterDecomposition("odd", (Summand(2, "symplectic"),))
    waldspurger_even = ParameterDecomposition("even", (Summand(2, "orthogonal"),))
    value = beta_constant(waldspurger_even, waldspurger_odd, "literal")
    ok &= value == 4
    return {"name": "lgroup_suite", "pass": bool(ok), "waldspurger_two_beta": value}


def _suite_lfactor(rng, config):
    import cmath

    worst = 0.0
    fd = LocalFieldData(3)
    for _ in range(config["samples"]):
        m = rng.choice([1, 2, 3])
        cls = SatakeClass(
            ("odd", m),
            tuple(cmath.exp(2j * cmath.pi * rng.random()) for _ in range(m)),
            cmath.exp(2j * cmath.pi * rng.random()),
        )
        s = 1.5
        lhs = euler_factor(s, adjoint_eigenvalues(cls, "gsp"), fd)
        rhs = euler_factor(s, adjoint_eigenvalues(cls, "sp"), fd) * euler_factor(s, [1], fd)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return {"name": "lfactor_adjoint_identity", "pass": worst < 1e-12, "worst_rel_error": worst}


def _suite_localperiod(rng, config):
    reports = []
    for case in ("n2_split", "n2_inert", "n3_split"):
        for i in range(config["period_draws"]):
            q = (2, 3, 5)[i % 3]
            report = verify_identity(
                random_case(case, q, rng),
                tolerance=config["tol"],
                truncation=config["K"],
            )
            reports.append({"case": case, "q": q, "pass": report.passed, "rel_error": report.rel_error})
    return {
        "name": "localperiod_suite",
        "pass": all(r["pass"] for r in reports),
        "runs": reports,
    }


def _cmd_suite(args):
    config = {
        "samples": args.samples,
        "forms_per_case": 3,
        "period_draws": args.period_draws,
        "tol": args.tol,
        "K": args.K,
    }
    sections = [
        ("quadspace", _suite_quadspace),
        ("clifford", _suite_clifford),
        ("structure", _suite_structure),
        ("lgroup", _suite_lgroup),
        ("lfactor", _suite_lfactor),
        ("localperiod", _suite_localperiod),
    ]
    threads = int(os.environ.get("GSPIN_LAB_THREADS", "1") or "1")
    seeds = {name: args.seed + i for i, (name, _) in enumerate(sections)}

    def run(entry):
        name, fn = entry
        return fn(random.Random(seeds[name]), config)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, sections))
    else:
        results = [run(entry) for entry in sections]
    ok = all(r["pass"] for r in results)
    return ok, {
        "seed": args.seed,
        "kernel": KERNEL_IMPLEMENTATION,
        "sections": results,
        "all_pass": ok,
    }


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gspinlab",
        description="Exact spin-group algebra and unramified local period verification",
    )
    parser.add_argument("--out", help="write the JSON report to this path")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p_quad = sub.add_parser("quad", help="quadratic space operations", parents=[common])
    p_quad.add_argument("quad_op", choices=["diagonalize", "disc", "hilbert", "witt", "standard"])
    p_quad.add_argument("--space")
    p_quad.add_argument("--signed", action="store_true")
    p_quad.add_argument("--a")
    p_quad.add_argument("--b")
    p_quad.add_argument("--place", default="real")
    p_quad.add_argument("--hyperbolic", type=int, default=0)
    p_quad.add_argument("--diag")
    p_quad.add_argument("--norm-disc", dest="norm_disc")
    p_quad.add_argument("--field", default="Q")

    p_cliff = sub.add_parser("clifford", help="Clifford algebra operations", parents=[common])
    p_cliff.add_argument("clifford_op", choices=["mul", "gspin"])
    p_cliff.add_argument("--space", required=True)
    p_cliff.add_argument("--x", required=True)
    p_cliff.add_argument("--y")

    p_struct = sub.add_parser("structure", help="even Clifford structure reports", parents=[common])
    p_struct.add_argument("structure_op", choices=["classify", "verify-lowrank", "quaternion"])
    p_struct.add_argument("--space", required=True)
    p_struct.add_argument("--n", type=int, default=0)
    p_struct.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_struct.add_argument("--samples", type=int, default=50)

    p_lgroup = sub.add_parser("lgroup", help="component-group arithmetic", parents=[common])
    p_lgroup.add_argument("lgroup_op", choices=["compgroup", "beta"])
    p_lgroup.add_argument("--decomp")
    p_lgroup.add_argument("--target", choices=["odd", "even"])
    p_lgroup.add_argument("--twisted", action="store_true")
    p_lgroup.add_argument("--convention", choices=["literal", "paper", "both"], default="both")
    p_lgroup.add_argument("--decomp-a", dest="decomp_a")
    p_lgroup.add_argument("--target-a", dest="target_a", choices=["odd", "even"])
    p_lgroup.add_argument("--decomp-b", dest="decomp_b")
    p_lgroup.add_argument("--target-b", dest="target_b", choices=["odd", "even"])

    p_lf = sub.add_parser("lfactor", help="eigenvalue multisets and Euler factors", parents=[common])
    p_lf.add_argument("lfactor_op", choices=["std", "ad", "tensor", "delta"])
    p_lf.add_argument("--class", dest="satake_class")
    p_lf.add_argument("--class2", dest="satake_class2")
    p_lf.add_argument("--algebra", choices=["sp", "so", "gsp", "gso"], default="sp")
    p_lf.add_argument("--omega", default="[1,0]")
    p_lf.add_argument("--q", type=int)
    p_lf.add_argument("--s")
    p_lf.add_argument("--dim", type=int)
    p_lf.add_argument("--chi", type=int, choices=[1, -1])
    p_lf.add_argument("--mode", choices=["exact", "complex"], default="exact")

    p_lp = sub.add_parser("localperiod", help="unramified period identity verification", parents=[common])
    p_lp.add_argument("localperiod_op", choices=["verify", "batch"])
    p_lp.add_argument("--case", choices=["n2_split", "n2_inert", "n3_split"])
    p_lp.add_argument("--q", type=int, default=3)
    p_lp.add_argument("--satake", action="append")
    p_lp.add_argument("--similitude", action="append")
    p_lp.add_argument("--chars")
    p_lp.add_argument("--omega", default="[1,0]")
    p_lp.add_argument("--K", type=int, default=200)
    p_lp.add_argument("--tol", type=float, default=1e-8)
    p_lp.add_argument("--omit-delta", dest="omit_delta", action="store_true")
    p_lp.add_argument("--file")
    p_lp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p_suite = sub.add_parser("suite", help="aggregated verification battery", parents=[common])
    p_suite.add_argument("--all", action="store_true")
    p_suite.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_suite.add_argument("--samples", type=int, default=20)
    p_suite.add_argument("--period-draws", dest="period_draws", type=int, default=3)
    p_suite.add_argument("--tol", type=float, default=1e-8)
    p_suite.add_argument("--K", type=int, default=200)
    return parser


HANDLERS = {
    "quad": _cmd_quad,
    "clifford": _cmd_clifford,
    "structure": _cmd_structure,
    "lgroup": _cmd_lgroup,
    "lfactor": _cmd_lfactor,
    "localperiod": _cmd_localperiod,
    "suite": _cmd_suite,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "lfactor" and args.lfactor_op == "delta":
            ok, result = _cmd_delta(args)
        else:
            ok, result = HANDLERS[args.command](args)
        document = {"command": args.command, "ok": bool(ok), "result": result}
        code = 0 if ok else 1
    except GspinError as exc:
        document = {
            "command": args.command,
            "ok": False,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        code = 1
    blob = json.dumps(document, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(blob)
    else:
        sys.stdout.write(blob)
    return code


if __name__ == "__main__":
    sys.exit(main())
