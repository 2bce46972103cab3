"""Command-line front end: ``superchar <subcommand> ...``.

Every subcommand prints deterministic JSON on stdout. Errors go to stderr
with a nonzero exit code.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import acceptance
from .base_forest import (
    check_pr1,
    default_base,
    dynkin_diagram,
    enumerate_bases,
    is_mixed,
    odd_reflect,
    satisfies_coro_hypothesis,
    satisfies_pr2,
)
from .dominance import Unsupported, enumerate_Y, is_dominant_integrable, is_dominant_integrable_closed
from .root_datum import iso_transversal
from .serialization import (
    algebra_json,
    base_json,
    coeff_json,
    dumps,
    element_json,
    parse_algebra,
    parse_base,
    parse_element,
    parse_weight,
    weight_json,
)
from .short_basis import compute_b, decompose, verify_axioms
from .xi_ring import explain_A, ev_condition, in_R, is_w_invariant, string_violation, sv_condition


class CliError(Exception):
    pass


def _base_entry(datum, base, index=None) -> dict:
    out = {"base": base_json(base), "pr1": check_pr1(datum, base)}
    if index is not None:
        out["index"] = index
    if datum.is_kac_moody:
        pr2 = satisfies_pr2(datum, base)
        out.update(
            diagram=dynkin_diagram(datum, base).ascii(),
            pr2=pr2.holds,
            coro=satisfies_coro_hypothesis(datum, base),
            mixed=is_mixed(datum, base),
        )
        if pr2.witness is not None:
            out["pr2_witness"] = weight_json(pr2.witness)
    return out


def cmd_describe(args) -> tuple[dict, int]:
    d = parse_algebra(args.algebra)
    roots = [
        {"weight": weight_json(r.weight), "parity": r.parity, "isotropic": r.isotropic}
        for r in d.roots
    ]
    return {
        "algebra": algebra_json(d),
        "name": d.name,
        "cartan_is_torus": d.cartan_is_torus,
        "roots": roots,
        "iso_roots": [weight_json(w) for w in sorted(d.iso_roots)],
        "iso_transversal": [weight_json(w) for w in iso_transversal(d)],
        "pi": [weight_json(w) for w in d.pi],
        "weyl_order": d.weyl_order,
    }, 0


def cmd_bases(args) -> tuple[dict, int]:
    d = parse_algebra(args.algebra)
    start = parse_base(d, args.from_word) if args.from_word else default_base(d)
    bases = enumerate_bases(d, start)
    return {"algebra": algebra_json(d), "count": len(bases),
            "bases": [_base_entry(d, b, i) for i, b in enumerate(bases)]}, 0


def cmd_reflect(args) -> tuple[dict, int]:
    d = parse_algebra(args.algebra)
    base = parse_base(d, args.base)
    beta = parse_weight(d, args.beta)
    new = odd_reflect(d, base, beta)
    return {"algebra": algebra_json(d), "from": base_json(base), "beta": weight_json(beta),
            "to": _base_entry(d, new)}, 0


def cmd_dominant(args) -> tuple[dict, int]:
    d = parse_algebra(args.algebra)
    base = parse_base(d, args.base)
    lam = parse_weight(d, args.weight)
    if args.closed_form:
        verdict = is_dominant_integrable_closed(d, base, lam)
    else:
        verdict = is_dominant_integrable(d, base, lam)
    out = {"algebra": algebra_json(d), "base": base_json(base), "weight": weight_json(lam),
           "method": "closed-form" if args.closed_form else "general", "dominant_integrable": verdict}
    return out, 0 if verdict else 1


def cmd_yset(args) -> tuple[dict, int]:
    d = parse_algebra(args.algebra)
    base = parse_base(d, args.base)
    lam = parse_weight(d, args.weight)
    ys = enumerate_Y(d, base, lam)
    return {"algebra": algebra_json(d), "weight": weight_json(lam), "count": len(ys),
            "Y": [weight_json(w) for w in ys]}, 0


def cmd_bshort(args) -> tuple[dict, int]:
    d = parse_algebra(args.algebra)
    base = parse_base(d, args.base)
    lam = parse_weight(d, args.weight)
    s = compute_b(d, base, lam)
    report = verify_axioms(d, base, s.element, lam)
    return {
        "algebra": algebra_json(d),
        "base": base_json(base),
        "lambda": weight_json(lam),
        "element": element_json(s.element),
        "solution_dim": s.solution_dim,
        "integral": s.integral,
        "axioms": report.as_dict(),
    }, 0


def _read_element(path: str):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_element(text)


def cmd_check(args) -> tuple[dict, int]:
    x = _read_element(args.input)
    d = x.datum
    lattice = args.lattice
    test = args.test
    reason = ""
    if test == "A":
        v = explain_A(d, x, lattice=lattice, all_beta=args.all_beta)
        ok, reason = v.holds, v.reason
    elif test == "R":
        ok = in_R(d, x, lattice)
        reason = "" if ok else "a coefficient or weight is outside R(P)"
    elif test == "W":
        ok = is_w_invariant(x)
        reason = "" if ok else "not W-invariant"
    elif test in ("string", "sv", "ev"):
        betas = [parse_weight(d, args.beta)] if args.beta else (
            sorted(d.iso_roots) if args.all_beta else iso_transversal(d))
        ok = True
        for beta in betas:
            if test == "string":
                bad = string_violation(x, beta)
                if bad is not None:
                    ok, reason = False, f"string condition fails for β={beta} on the line through {bad}"
                    break
            else:
                if not args.omega:
                    raise CliError(f"--omega is required for --test {test}")
                omega = parse_weight(d, args.omega)
                f = sv_condition if test == "sv" else ev_condition
                if not f(d, x, beta, omega, args.sign):
                    ok, reason = False, f"{test} condition fails for β={beta}, ω={omega}"
                    break
    else:
        raise CliError(f"unknown test {test!r}")
    out = {"algebra": algebra_json(d), "test": test, "holds": ok}
    if not ok:
        out["counterexample"] = reason
    return out, 0 if ok else 1


def cmd_decompose(args) -> tuple[dict, int]:
    x = _read_element(args.input)
    d = x.datum
    base = parse_base(d, args.base)
    dec = decompose(d, base, x)
    return {
        "algebra": algebra_json(d),
        "base": base_json(base),
        "coefficients": [{"weight": weight_json(w), "coeff": coeff_json(c)} for w, c in dec.coefficients.items()],
        "remainder": element_json(dec.remainder),
        "exact": dec.exact,
    }, 0


def cmd_suite(args) -> tuple[dict, int]:
    results = acceptance.run_all(args.only)
    rows = []
    for r in results:
        row = {"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail}
        if r.failures:
            row["failures"] = r.failures[:5]
        if args.timings:
            row["seconds"] = round(r.seconds, 3)
        rows.append(row)
        print(r.line() if args.timings else r.line().replace(f" ({r.seconds:.2f}s)", ""), file=sys.stderr)
    return {"results": rows, "passed": sum(r.passed for r in results), "total": len(results)}, \
        0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superchar", description="Character rings of Lie superalgebras, exactly.")
    p.add_argument("--out", help="write the JSON result to this file instead of stdout")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the JSON result to this file")
    sub = p.add_subparsers(dest="command", required=True)
    add = sub.add_parser

    def add_parser(name, **kw):
        return add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    def algebra(sp):
        sp.add_argument("--algebra", required=True, help='JSON descriptor or shorthand such as "gl(2|1)"')

    def base(sp):
        sp.add_argument("--base", default=None, help="word, index, 'mixed' or 'distinguished' (default mixed)")

    def weight(sp):
        sp.add_argument("--weight", required=True, help='JSON: {"eps": [...], "delta": [...]} or a flat list')

    sp = sub.add_parser("describe", help="roots, π, Δ_iso and the Weyl group order")
    algebra(sp)
    sp.set_defaults(func=cmd_describe)

    sp = sub.add_parser("bases", help="all bases reachable by odd reflections")
    algebra(sp)
    sp.add_argument("--from-word", dest="from_word", help="start from this word instead of the mixed base")
    sp.set_defaults(func=cmd_bases)

    sp = sub.add_parser("reflect", help="odd reflection of a base")
    algebra(sp)
    base(sp)
    sp.add_argument("--beta", required=True, help="isotropic simple root, as a weight")
    sp.set_defaults(func=cmd_reflect)

    sp = sub.add_parser("dominant", help="is L(λ) finite dimensional? exit 0 if yes, 1 if no")
    algebra(sp)
    base(sp)
    weight(sp)
    sp.add_argument("--closed-form", action="store_true", help="use the closed-form criterion")
    sp.set_defaults(func=cmd_dominant)

    sp = sub.add_parser("yset", help="π-dominant weights strictly below λ")
    algebra(sp)
    base(sp)
    weight(sp)
    sp.set_defaults(func=cmd_yset)

    sp = sub.add_parser("bshort", help="the short-basis element b_λ")
    algebra(sp)
    base(sp)
    weight(sp)
    sp.set_defaults(func=cmd_bshort)

    sp = sub.add_parser("check", help="membership tests on a ring element")
    sp.add_argument("--in", dest="input", required=True, help="element JSON file, or - for stdin")
    sp.add_argument("--test", required=True, choices=["A", "R", "W", "string", "sv", "ev"])
    sp.add_argument("--lattice", default="full", choices=["full", "int", "half"])
    sp.add_argument("--all-beta", action="store_true", help="test every isotropic root, not a transversal")
    sp.add_argument("--beta", help="a single isotropic root to test")
    sp.add_argument("--omega", help="ω for the sv and ev tests")
    sp.add_argument("--sign", default="-", choices=["+", "-"], help="ψ level for sv and ev (default -)")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("decompose", help="expand an element of A in the short basis")
    sp.add_argument("--in", dest="input", required=True, help="element JSON file, or - for stdin")
    base(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("suite", help="run the acceptance criteria")
    sp.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    sp.add_argument("--timings", action="store_true", help="include wall-clock timings")
    sp.set_defaults(func=cmd_suite)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, code = args.func(args)
    except (CliError, Unsupported, ValueError, ArithmeticError, OSError, KeyError) as exc:
        print(f"superchar {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = dumps(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
