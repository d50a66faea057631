"""Command-line entry point: ``gl3ortho {gram,ortho,verify,trace}``.

Exit codes: 0 success, 1 a requested check failed, 2 invalid input,
3 degenerate form, 4 insufficient sample support.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import suites
from .errors import (
    DegenerateForm,
    InsufficientSupport,
    NotInQPlus,
    NotInRootLattice,
    ParseError,
    UnsupportedAlpha,
)
from .exactcore import H_NAMES, Poly, det_and_rank, exponent_tuples, format_rational, parse_rational
from .gl3rep import build_gt_model, build_symmetric_model
from .orthopoly.family1 import (
    closed_form_ratio,
    difference_apply_1var,
    f1_via_ad,
    f1_via_recurrence,
    family1,
    form_plus,
    gram_schmidt_plus,
    uses_z31,
)
from .orthopoly.family2 import f2_via_ad, family2, form_full, leading_exponent_h1_e33
from .quotient import (
    adjoint_decomposition,
    hc_polynomial,
    normalized_trace,
    parse_envelope,
    realize,
    u_gamma,
    u_nu_plus,
    z_element,
)

EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_SUPPORT = 4


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing and serialization


def parse_nu(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise InputError(f"--nu expects three integers, got {text!r}") from exc
    if len(parts) != 3:
        raise InputError(f"--nu expects three integers, got {text!r}")
    if sum(parts) != 0:
        raise InputError(f"--nu {text} is not in the root lattice (entries must sum to 0)")
    return parts


def parse_alpha(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--alpha expects an integer or a/b, got {text!r}") from exc


def integer_alpha(alpha: Fraction) -> int:
    if alpha.denominator != 1 or alpha < 0:
        raise InputError(f"this command needs a nonnegative integer alpha, got {alpha}")
    return int(alpha)


def jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Poly):
        return poly_table(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def poly_table(p: Poly) -> list[dict]:
    return [
        {"exponent": list(e), "coefficient": format_rational(c)}
        for e, c in sorted(p.coeffs.items())
    ]


def report(command: str, params: dict, checks=None, tables=None) -> dict:
    return {
        "command": command,
        "params": jsonable(params),
        "checks": jsonable(checks or []),
        "tables": jsonable(tables or {}),
    }


def matrix_csv(labels: list[str], rows: list[list[Fraction]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["row"] + labels)
    for label, row in zip(labels, rows):
        writer.writerow([label] + [format_rational(v) for v in row])
    return buf.getvalue()


def emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands


def _basis(args, nu, alpha):
    """Labels and polynomials for the gram command."""
    if args.plus:
        u_nu_plus(nu)
        if args.basis == "family":
            fam = family1(nu, alpha, args.maxdeg)
            return [f"f{k}" for k in range(len(fam.polys))], fam.polys
        t = Poly.var(0, ("E33",))
        return [f"E33^{j}" for j in range(args.maxdeg + 1)], [t**j for j in range(args.maxdeg + 1)]
    u_gamma(nu)
    if args.basis == "family":
        fam = family2(nu, integer_alpha(alpha), args.maxdeg)
        keys = fam.indices()
        return [f"f{l},{k}" for l, k in keys], [fam.polys[key] for key in keys]
    exps = exponent_tuples(2, args.maxdeg)
    return [f"H1^{a}H2^{b}" for a, b in exps], [Poly({e: 1}, H_NAMES) for e in exps]


def cmd_gram(args) -> int:
    nu = parse_nu(args.nu)
    alpha = parse_alpha(args.alpha)
    labels, polys = _basis(args, nu, alpha)
    form = form_plus if args.plus else form_full
    rows = [[form(p, q, nu, alpha) for q in polys] for p in polys]
    det, rank = det_and_rank(rows)
    params = {"alpha": alpha, "nu": list(nu), "plus": args.plus,
              "maxdeg": args.maxdeg, "basis": args.basis}
    if args.format == "csv":
        emit(matrix_csv(labels, rows), args.out)
    else:
        checks = [suites.check("nondegenerate", det != 0, {"rank": rank})]
        emit(dump_json(report("gram", params, checks,
                              {"labels": labels, "gram": rows, "determinant": det})), args.out)
    if det == 0:
        print(f"degenerate form: rank {rank} < {len(rows)}", file=sys.stderr)
        return EXIT_DEGENERATE
    return 0


def _ortho1(args, nu, alpha):
    k = args.k
    if alpha.denominator == 1 and alpha >= 0:
        raw = f1_via_ad(k, nu, alpha)
    else:
        raw = f1_via_recurrence(k, nu, alpha)
    tables = {"raw": raw, "monic": raw.monic()}
    if raw:
        _, lam = difference_apply_1var(raw, nu, alpha)
        tables["eigenvalue"] = lam
    if uses_z31(nu) and alpha.denominator == 1:
        tables["hypergeometric_ratio"] = closed_form_ratio(k, nu, alpha)
    return tables


def _ortho2(args, nu, alpha):
    raw = f2_via_ad(args.l, args.k, nu, integer_alpha(alpha))
    return {
        "raw": raw,
        "monic": raw.monic(),
        "leading_exponent": list(raw.leading_monomial()) if raw else None,
        "leading_exponent_h1_e33": list(leading_exponent_h1_e33(raw, alpha)) if raw else None,
    }


def cmd_ortho(args) -> int:
    nu = parse_nu(args.nu)
    alpha = parse_alpha(args.alpha)
    params = {"alpha": alpha, "nu": list(nu), "k": args.k, "l": args.l}
    tables = _ortho2(args, nu, alpha) if args.l is not None else _ortho1(args, nu, alpha)
    emit(dump_json(report("ortho", params, [], tables)), args.out)
    return 0


def cmd_verify(args) -> int:
    alpha = integer_alpha(parse_alpha(args.alpha))
    name = args.suite
    tables = {}
    if name == "all":
        checks = []
        for key, fn in suites.SUITES.items():
            if key == "nondegeneracy" and alpha > 3:
                continue
            checks += fn(alpha)
    elif name == "tgw":
        checks = suites.tgw(alpha, generic=args.generic)
    elif name == "gt":
        checks = []
        for lam in _dominant_weights(alpha):
            checks += suites.gt_commutators(lam)
    elif name in suites.SUITES:
        checks = suites.SUITES[name](alpha)
    else:
        raise InputError(f"unknown suite {name!r}")
    if name == "decompose":
        tables["multiplicities"] = adjoint_decomposition(alpha, alpha + 1)
    emit(dump_json(report("verify", {"suite": name, "alpha": alpha}, checks, tables)), args.out)
    return 0 if all(c["pass"] for c in checks) else EXIT_FAILED


def _dominant_weights(top: int):
    return [
        (a, b, c)
        for a in range(-2, top + 1)
        for b in range(-2, a + 1)
        for c in range(-2, b + 1)
    ]


def cmd_trace(args) -> int:
    if args.z:
        try:
            elem = z_element(args.z)
        except KeyError as exc:
            raise InputError(str(exc)) from exc
    elif args.word:
        elem = parse_envelope(args.word)
    else:
        raise InputError("give a word or --z")
    alpha = parse_alpha(args.alpha)
    params = {"word": args.word or args.z, "alpha": alpha, "generic": args.generic}
    if args.generic:
        poly = hc_polynomial(elem)
        value = poly.eval(alpha)
        tables = {"polynomial": repr(poly), "value": value}
    else:
        a = integer_alpha(alpha)
        value = normalized_trace(realize(elem, build_symmetric_model(a)), a)
        tables = {"value": value}
    if args.format == "json":
        emit(dump_json(report("trace", params, [], tables)), args.out)
    else:
        emit(format_rational(value) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gl3ortho", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("json",)):
        p.add_argument("--alpha", default="3", help="integer or rational a/b")
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--out", help="write output to this path instead of stdout")

    g = sub.add_parser("gram", help="Gram matrix of a polynomial basis")
    common(g, ("json", "csv"))
    g.add_argument("--nu", default="0,0,0")
    g.add_argument("--plus", action="store_true", help="use the E12-commutant form in E33")
    g.add_argument("--maxdeg", type=int, default=2)
    g.add_argument("--basis", choices=("monomial", "family"), default="monomial")
    g.set_defaults(func=cmd_gram)

    o = sub.add_parser("ortho", help="coefficients of one family member")
    common(o)
    o.add_argument("--nu", default="0,0,0")
    o.add_argument("--k", type=int, default=0)
    o.add_argument("--l", type=int, default=None, help="switch to the two-variable family")
    o.set_defaults(func=cmd_ortho)

    v = sub.add_parser("verify", help="run a verification suite")
    common(v)
    v.add_argument("suite", choices=sorted(list(suites.SUITES) + ["all", "gt"]))
    v.add_argument("--generic", action="store_true", help="add the generic-alpha certificate")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("trace", help="normalized trace of an envelope word")
    common(t, ("text", "json"))
    t.add_argument("word", nargs="?", help="e.g. 'E12*E21 - 2*E11 + 1'")
    t.add_argument("--z", help="named element: z21 z12 z13 z32 z31 z23")
    t.add_argument("--generic", action="store_true", help="interpolate in alpha, then evaluate")
    t.set_defaults(func=cmd_trace)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("k", "l", "maxdeg"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            print(f"error: --{name} must be nonnegative", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, ParseError, NotInRootLattice, NotInQPlus, UnsupportedAlpha) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegenerateForm as exc:
        print(f"degenerate form: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except InsufficientSupport as exc:
        print(f"insufficient support: {exc}", file=sys.stderr)
        return EXIT_SUPPORT


if __name__ == "__main__":
    sys.exit(main())
