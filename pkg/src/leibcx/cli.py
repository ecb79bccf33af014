"""Command line interface.

    leibcx validate   ALGEBRA
    leibcx liezation  ALGEBRA
    leibcx homology   ALGEBRA [--max-degree N] [--loday]
    leibcx cohomology ALGEBRA [--max-degree N]
    leibcx omega0     ALGEBRA
    leibcx double     ALGEBRA [--cocycle FILE] [-o FILE]
    leibcx dr         ALGEBRA [--max-degree N]
    leibcx check      ALGEBRA [--suite NAME] [--max-degree N]
    leibcx catalog    [NAME] [-o FILE]

ALGEBRA is a JSON file path or catalog:NAME.  Exit codes: 0 all checks
passed, 1 a mathematical check failed, 2 malformed input.
"""

import argparse
import sys

from . import catalog as _catalog
from .algebras import check_anti_invariance, double, liezation
from .cochains import cohomology
from .complexes import (boundary_square_report, dgla_suite, homology,
                        intertwining_report, ker2_invariance, omega0, DGLA)
from .cochains import (anti_cyclic_constraint_rows, same_row_space,
                       symmetry_identity_rows)
from .duality import recovery_report, rotation_sum_report
from .errors import InputError
from .fileio import (algebra_to_doc, parse_algebra_file, parse_cochain_file,
                     rational_to_string)
from .report import canonical_json, jsonable, vector_doc
from .words import projector_report

SUITES = ("complex", "subcomplex", "dr", "anticyclic", "dual", "all")


def _resolve_algebra(source):
    if source.startswith("catalog:"):
        name = source[len("catalog:"):]
        return _catalog.get(name), name
    return parse_algebra_file(source), None


def _emit(report, args, exit_code):
    text = canonical_json(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.format == "json":
        sys.stdout.write(text)
    else:
        _print_text(report)
    return exit_code


def _print_text(report, indent=0):
    import json as _json
    pad = "  " * indent
    for key in sorted(report, key=str):
        val = report[key]
        if isinstance(val, dict):
            print(f"{pad}{key}:")
            _print_text(val, indent + 1)
        else:
            print(f"{pad}{key}: {_json.dumps(jsonable(val), sort_keys=True)}")


def _cmd_validate(args):
    algebra, _ = _resolve_algebra(args.algebra)
    result = algebra.validate()
    failures = [{"triple": list(t), "lhs": vector_doc(lhs),
                 "rhs": vector_doc(rhs)}
                for t, lhs, rhs in result.failures]
    report = {"command": "validate", "dim": algebra.dim,
              "name": algebra.name, "passed": result.passed,
              "failures": failures}
    return _emit(report, args, 0 if result.passed else 1)


def _cmd_liezation(args):
    algebra, _ = _resolve_algebra(args.algebra)
    quotient, projection, kept = liezation(algebra)
    report = {
        "command": "liezation",
        "dim": algebra.dim,
        "lie_dim": quotient.dim,
        "ideal_dim": algebra.dim - quotient.dim,
        "kept_indices": [j + 1 for j in kept],
        "projection": [[rational_to_string(x) for x in row]
                       for row in projection],
        "quotient": algebra_to_doc(quotient),
    }
    return _emit(report, args, 0)


def _cmd_homology(args):
    algebra, _ = _resolve_algebra(args.algebra)
    data = homology(algebra, max_degree=args.max_degree, loday=args.loday)
    report = {"command": "homology", "dim": algebra.dim,
              "max_degree": args.max_degree}
    report.update(data)
    return _emit(report, args, 0)


def _cmd_cohomology(args):
    algebra, _ = _resolve_algebra(args.algebra)
    data = cohomology(algebra, max_degree=args.max_degree)
    report = {"command": "cohomology", "dim": algebra.dim,
              "max_degree": args.max_degree}
    report.update(data)
    ok = all(data["preserved"].values())
    return _emit(report, args, 0 if ok else 1)


def _cmd_omega0(args):
    algebra, _ = _resolve_algebra(args.algebra)
    data = omega0(algebra)
    report = {"command": "omega0", "dim": algebra.dim}
    report.update(data)
    return _emit(report, args, 0)


def _cmd_double(args):
    algebra, _ = _resolve_algebra(args.algebra)
    cocycle = None
    if args.cocycle:
        cocycle = parse_cochain_file(args.cocycle)
        if cocycle.arity != 3:
            raise InputError("twisting cochains must have degree 2")
        if cocycle.dim != algebra.dim:
            raise InputError("cochain dimension does not match the algebra")
    dbl, omega = double(algebra, cocycle)
    validated = dbl.validate().passed
    anti = check_anti_invariance(dbl, omega)
    doc = algebra_to_doc(dbl)
    report = {"command": "double", "base_dim": algebra.dim,
              "double_dim": dbl.dim, "twisted": cocycle is not None,
              "leibniz": validated, "anti_invariant": anti["passed"],
              "algebra": doc}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(doc))
    if args.format == "json":
        sys.stdout.write(canonical_json(report))
    else:
        _print_text(report)
    return 0 if validated and anti["passed"] else 1


def _cmd_dr(args):
    algebra, _ = _resolve_algebra(args.algebra)
    dg = DGLA(algebra, max_degree=args.max_degree)
    checks = dgla_suite(algebra, max_degree=args.max_degree)
    dims = {str(d): n for d, n in sorted(dg.component_dims().items())}
    report = {"command": "dr", "max_degree": args.max_degree,
              "component_dims": dims,
              "checks": {k: v["passed"] for k, v in checks.items()}}
    ok = all(v["passed"] for v in checks.values())
    return _emit(report, args, 0 if ok else 1)


def _suite_complex(algebra, name, N):
    sq = boundary_square_report(algebra, max_degree=min(N, 5))
    tw = intertwining_report(algebra, max_length=min(N, 5))
    return {
        "boundary_square_zero": sq["main_square_zero"]["passed"],
        "tensor_square_zero": sq["loday_square_zero"]["passed"],
        "boundary_variants_agree": sq["variants_agree"]["passed"],
        "embedding_intertwines": tw["passed"],
    }


def _suite_subcomplex(algebra, name, N):
    from .cochains import coboundary_matrix_on_anti_cyclic
    from .complexes import boundary_matrix
    from .exactla import transpose
    out = {}
    for n in range(0, max(1, N - 1)):
        mat, preserved = coboundary_matrix_on_anti_cyclic(algebra, n)
        expected = transpose(boundary_matrix(algebra, n + 2))
        out[f"anti_cyclic_preserved_degree_{n}"] = preserved
        out[f"coboundary_is_transpose_degree_{n}"] = (mat == expected)
    subs = _catalog.lie_subalgebras(name) if name else ()
    if not subs and algebra.is_antisymmetric():
        subs = (tuple(range(1, algebra.dim + 1)),)
    for sub in subs:
        rep = ker2_invariance(algebra, sub)
        label = "_".join(str(i) for i in sub)
        out[f"kernel_invariance_{label}"] = rep["passed"]
    return out


def _suite_anticyclic(algebra, name, N):
    out = {}
    for arity in (3, 4):
        rows_def, _ = anti_cyclic_constraint_rows(algebra.dim, arity)
        rows_sym, _ = symmetry_identity_rows(algebra.dim, arity)
        out[f"constraints_match_identities_arity_{arity}"] = \
            same_row_space(rows_def, rows_sym)
    return out


def _suite_dr(algebra, name, N):
    checks = dgla_suite(algebra, max_degree=N)
    return {k: v["passed"] for k, v in checks.items()}


def _suite_dual(algebra, name, N):
    out = {}
    out["projector_identity"] = projector_report(3, min(N + 2, 6))["passed"]
    out["rotation_sums_vanish"] = rotation_sum_report(5)["passed"]
    dbl, omega = double(algebra)
    out["double_anti_invariant"] = check_anti_invariance(dbl, omega)["passed"]
    out["contraction_recovery"] = recovery_report(
        dbl, omega, algebra.dim)["passed"]
    return out


_SUITE_FUNCS = {
    "complex": _suite_complex,
    "subcomplex": _suite_subcomplex,
    "dr": _suite_dr,
    "anticyclic": _suite_anticyclic,
    "dual": _suite_dual,
}


def _cmd_check(args):
    algebra, name = _resolve_algebra(args.algebra)
    from .algebras import require_leibniz
    require_leibniz(algebra)
    wanted = SUITES[:-1] if args.suite == "all" else (args.suite,)
    checks = {}
    for suite in wanted:
        result = _SUITE_FUNCS[suite](algebra, name, args.max_degree)
        for k, v in result.items():
            checks[f"{suite}.{k}" if args.suite == "all" else k] = v
    report = {"command": "check", "suite": args.suite,
              "max_degree": args.max_degree, "checks": checks,
              "passed": all(checks.values())}
    return _emit(report, args, 0 if report["passed"] else 1)


def _cmd_catalog(args):
    if not args.name:
        entries = []
        for name in _catalog.names():
            alg = _catalog.get(name)
            entries.append({"name": name, "dim": alg.dim,
                            "leibniz": alg.validate().passed})
        return _emit({"command": "catalog", "entries": entries}, args, 0)
    alg = _catalog.get(args.name)
    doc = algebra_to_doc(alg)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(doc))
    if args.format == "json":
        sys.stdout.write(canonical_json(doc))
    else:
        _print_text(doc)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="leibcx",
        description="Exact chain and cochain complexes of Leibniz algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, algebra=True, degree=False):
        if algebra:
            p.add_argument("algebra",
                           help="JSON file path or catalog:NAME")
        if degree:
            p.add_argument("--max-degree", type=int, default=4,
                           metavar="N", help="word degree cutoff (>= 2)")
        p.add_argument("--format", choices=("json", "text"),
                       default="text")
        p.add_argument("-o", "--output", metavar="FILE",
                       help="also write canonical JSON to FILE")

    p = sub.add_parser("validate", help="check the Leibniz identity")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("liezation", help="quotient Lie algebra + projection")
    common(p)
    p.set_defaults(func=_cmd_liezation)

    p = sub.add_parser("homology", help="homology of the word complex")
    common(p, degree=True)
    p.add_argument("--loday", action="store_true",
                   help="include the tensor-word complex")
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("cohomology",
                       help="cohomology of the anti-cyclic subcomplex")
    common(p, degree=True)
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("omega0", help="relation-space dimension for Lie input")
    common(p)
    p.set_defaults(func=_cmd_omega0)

    p = sub.add_parser("double", help="build g + g* with the coadjoint bracket")
    common(p)
    p.add_argument("--cocycle", metavar="FILE",
                   help="degree-2 scalar cochain twisting the product")
    p.set_defaults(func=_cmd_double)

    p = sub.add_parser("dr", help="graded Lie suite on the word complex")
    common(p, degree=True)
    p.set_defaults(func=_cmd_dr)

    p = sub.add_parser("check", help="run a named verification suite")
    common(p, degree=True)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("catalog", help="list or export built-in algebras")
    p.add_argument("name", nargs="?", help="entry to export")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=_cmd_catalog)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_degree", None) is not None:
        if args.max_degree < 2:
            print("error: --max-degree must be at least 2", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
