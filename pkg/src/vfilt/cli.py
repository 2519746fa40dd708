"""``vfilt`` command line.

Exit status: 0 on success, 1 for bad input, 2 when two independent routes
to the same quantity disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks
from .bfun import FamilyDataError
from .filtration import (
    PiSets,
    composition_factor_test,
    fdf_matrices,
    fs_hodge_test,
    grv_report,
    hodge_level,
    hodge_level_by_jumps,
    nu,
    nu_from_transport,
    p_function,
    r_lambda,
    v_cap_f_basis,
    v_ideal_structure,
    weight_level,
)
from .ratpoly import as_rational, rational_str
from .spaces import BUILTIN_NAMES, CHARACTER_MODES, ROUTES, builtin, graded_character, ideal_weight_set, load_family


class UsageError(Exception):
    pass


class MismatchError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be comma separated integers, got {text!r}")


def _family(args):
    if args.space_file:
        try:
            with open(args.space_file) as fh:
                return load_family(json.load(fh))
        except OSError as exc:
            raise UsageError(f"cannot read {args.space_file}: {exc}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.space_file} is not JSON: {exc}")
    if not args.space:
        raise UsageError("give --space or --space-file")
    if args.space != "e6" and args.n is None:
        raise UsageError(f"--space {args.space} needs --n")
    return builtin(args.space, args.n)


def _weight_b(args, structure_sheaf=False):
    fam = _family(args)
    if args.weight is None:
        raise UsageError("--weight is required")
    weight = fam.check_weight(args.weight, structure_sheaf)
    return fam, weight, fam.b_of_weight(weight)


def _need_positive(alpha, what):
    if alpha <= 0:
        raise UsageError(f"{what} needs alpha > 0, got {rational_str(alpha)}")


def _matrix_json(m):
    return [[rational_str(x) for x in row] for row in m]


def _matrix_text(m):
    if not m or not m[0]:
        return "  (empty)"
    return "\n".join("  [" + " ".join(f"{rational_str(x):>4}" for x in row) + " ]" for row in m)


# -- subcommands: each returns (json-able object, text) --------------------------


def cmd_bfun(args):
    fam, w, b = _weight_b(args)
    return {"space": fam.name, "weight": list(w), "lambdas": b.to_json(), "b": str(b)}, str(b)


def cmd_pfun(args):
    fam, w, b = _weight_b(args)
    pf = p_function(b, args.alpha)
    doc = {"b": str(b), "alpha": rational_str(args.alpha), "p": pf.poly.to_json(), "text": str(pf), "degree": pf.degree}
    return doc, str(pf)


def cmd_nu(args):
    fam, w, b = _weight_b(args)
    v, via_transport = nu(b, args.alpha), nu_from_transport(b, args.alpha)
    if v != via_transport:
        raise MismatchError(f"nu count {v} but multiplicity after transport {via_transport}")
    return {"nu": v}, str(v)


def cmd_weight_level(args):
    fam, w, b = _weight_b(args)
    ell = weight_level(b, args.alpha)
    quotient = composition_factor_test(b, args.alpha)
    doc = {"weight_level": ell, "composition_factor": quotient}
    text = f"{ell}  (m f^-alpha lies in W_(q+{ell}))"
    return doc, text


def cmd_hodge_level(args):
    fam, w, b = _weight_b(args)
    k, by_jumps = hodge_level(b, args.alpha), hodge_level_by_jumps(b, args.alpha)
    if k != by_jumps:
        raise MismatchError(f"deg p = {k} but the jump sum is {by_jumps}")
    return {"hodge_level": k}, str(k)


def cmd_v_ideal(args):
    fam, w, b = _weight_b(args)
    gen = v_ideal_structure(b, args.alpha)
    return {"r_lambda": r_lambda(b), "generator": gen.to_json(), "text": str(gen)}, str(gen)


def cmd_v_cap_f(args):
    fam, w, b = _weight_b(args)
    basis = v_cap_f_basis(b, args.alpha, args.k)
    text = "\n".join(str(x) for x in basis) if basis else "(zero)"
    return {"basis": [x.to_json() for x in basis], "text": [str(x) for x in basis]}, text


def cmd_grv(args):
    fam = _family(args)
    pairs = [(w, fam.b_of_weight(w)) for w in fam.weights(args.degree_bound)]
    rep = grv_report(pairs, args.alpha, [args.level])
    rows = [(w, v, ex[args.level]) for w, v, ex in rep.entries if ex[args.level] > 0]
    doc = {
        "alpha": rational_str(rep.alpha),
        "level": args.level,
        "entries": [{"weight": list(w), "nu": v, "exponent": e} for w, v, e in rows],
    }
    text = "\n".join(f"{w}  nu={v}  C[s]/(s+{rational_str(rep.alpha)})^{e}" for w, v, e in rows) or "(zero)"
    return doc, text


def cmd_ideal(args):
    fam = _family(args)
    _need_positive(args.alpha, "ideal")
    ws = ideal_weight_set(fam, args.k, args.alpha, args.degree_bound, args.route)
    lines = ["constraints:"] + [f"  {c}" for c in ws.constraints]
    if ws.primary_decomposition:
        lines.append(
            "primary decomposition: "
            + " cap ".join(f"{e['ideal']}^({e['exponent']})" for e in ws.primary_decomposition)
        )
    lines.append(f"weights ({len(ws.weights)}):")
    lines += [f"  {w}" for w in ws.weights]
    return ws.to_json(), "\n".join(lines)


def cmd_character(args):
    fam = _family(args)
    out = graded_character(fam, args.alpha, args.level, args.degree_bound, args.mode)
    return {"weights": [tw.to_json() for tw in out]}, "\n".join(str(tw) for tw in out) or "(zero)"


def cmd_fdf(args):
    fam, w, b = _weight_b(args)
    try:
        m = fdf_matrices(b, args.alpha, args.level)
    except ValueError as exc:
        raise UsageError(str(exc))
    doc = {"f": _matrix_json(m.f), "df": _matrix_json(m.df), "C": _matrix_json(m.C), "rho": m.rho, "nu": m.nu, "mu": m.mu}
    text = f"f:\n{_matrix_text(m.f)}\ndf:\n{_matrix_text(m.df)}"
    return doc, text


def cmd_fs_test(args):
    fam, w, b = _weight_b(args)
    _need_positive(args.alpha, "fs-test")
    try:
        with open(args.pi_file) as fh:
            pi = PiSets.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read Pi sets from {args.pi_file}: {exc}")
    problems = pi.violations(fam.d)
    if problems:
        raise UsageError("Pi sets are inconsistent: " + "; ".join(problems))
    result = fs_hodge_test(b, args.alpha, pi, args.k)
    return {"nonzero": result}, "nonzero" if result else "zero"


def cmd_check(args):
    results = []
    failed = False
    for name, failures in checks.run_all(args.seed, args.cases):
        results.append({"check": name, "failures": failures})
        failed |= bool(failures)
    text = "\n".join(
        f"{'ok  ' if not r['failures'] else 'FAIL'} {r['check']}"
        + "".join(f"\n       {f}" for f in r["failures"][:5])
        for r in results
    )
    if failed:
        args.exit_code = 2
    return {"seed": args.seed, "cases": args.cases, "results": results}, text


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vfilt", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    space = _Parser(add_help=False)
    space.add_argument("--space", choices=BUILTIN_NAMES)
    space.add_argument("--space-file", help="affine family JSON")
    space.add_argument("--n", type=int, help="matrix size for det, symdet, pfaffian")
    space.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    weight = _Parser(add_help=False)
    weight.add_argument("--weight", type=_weight, help="comma separated, e.g. 0,0 or --weight=-1,-1")
    alpha = _Parser(add_help=False)
    alpha.add_argument("--alpha", type=_rational, required=True, help="rational, e.g. 1/2")
    box = _Parser(add_help=False)
    box.add_argument("--degree-bound", type=int, default=4, help="coordinates range over [-B, B]")

    def add(name, func, parents, help_text):
        p = sub.add_parser(name, parents=parents, help=help_text)
        p.set_defaults(func=func)
        return p

    add("bfun", cmd_bfun, [space, weight], "b-function of a weight")
    add("pfun", cmd_pfun, [space, weight, alpha], "generator of V^alpha on the isotypic component")
    add("nu", cmd_nu, [space, weight, alpha], "nu count")
    add("weight-level", cmd_weight_level, [space, weight, alpha], "weight filtration level of m f^-alpha")
    add("hodge-level", cmd_hodge_level, [space, weight, alpha], "Hodge level of m f^-alpha in (O_X)_f")
    add("v-ideal", cmd_v_ideal, [space, weight, alpha], "V^alpha generator for the simple module")
    p = add("v-cap-f", cmd_v_cap_f, [space, weight, alpha], "basis of V^alpha cap F_(k+1)")
    p.add_argument("--k", type=int, required=True)
    p = add("grv", cmd_grv, [space, alpha, box], "Jordan exponents on gr_V^alpha at one weight level")
    p.add_argument("--level", type=int, required=True)
    p = add("ideal", cmd_ideal, [space, alpha, box], "weights of the Hodge ideal I_k(alpha D)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--route", choices=ROUTES, default="both")
    p = add("character", cmd_character, [space, alpha, box], "weights of W, gr^W or gr^W gr_V")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--mode", choices=CHARACTER_MODES, default="weight")
    p = add("fdf-matrices", cmd_fdf, [space, weight, alpha], "matrices of f and df on W_l gr_V")
    p.add_argument("--level", type=int, required=True)
    p = add("fs-test", cmd_fs_test, [space, weight, alpha], "Hodge test from user Pi sets")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pi-file", required=True, help='JSON {"r_lambda": r, "pi": {"k": [l, ...]}}')
    p = sub.add_parser("check", help="run the randomized invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.exit_code = 0
    try:
        doc, text = args.func(args)
    except (UsageError, FamilyDataError, ValueError) as exc:
        print(f"vfilt: error: {exc}", file=sys.stderr)
        return 1
    except (MismatchError, ArithmeticError) as exc:
        print(f"vfilt: inconsistency: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(doc, indent=2) if args.json else text)
    return args.exit_code


if __name__ == "__main__":
    sys.exit(main())
