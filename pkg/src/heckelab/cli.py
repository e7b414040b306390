"""Command-line driver: every check and computation as a subcommand.

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or input error.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .report import CheckReport


@dataclass
class RunReport:
    command: str
    status: str = "pass"
    artifacts: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add(self, report):
        self.checks.append(report)
        if not report.passed and self.status == "pass":
            self.status = "fail"
        return report

    @property
    def exit_code(self):
        return {"pass": 0, "fail": 1, "error": 2}[self.status]

    def to_json(self):
        out = {"command": self.command, "status": self.status, "artifacts": self.artifacts,
               "checks": [c.to_json() for c in self.checks], "details": self.details}
        failures = [c.mismatch for c in self.checks if not c.passed and c.mismatch]
        if failures:
            out["failures"] = failures
        return out


class InputError(Exception):
    pass


def _threads():
    raw = os.environ.get("HECKELAB_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"HECKELAB_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise InputError("HECKELAB_THREADS must be positive")
    return n


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"input file {path!r} not found") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path!r} is not valid JSON: {exc}") from None


def _write(path, text, run):
    with open(path, "w") as fh:
        fh.write(text)
    run.artifacts.append(path)


# -- subcommands -----------------------------------------------------------

def cmd_rankin(args, run):
    from .rankin import (combine_extract, tensor_partial_fractions, genus1_operator_form_check,
                         series_oracle_check, rankin_pipeline, check_s_functional_equation,
                         newton_polygon, tensor_series_genus1)
    from .rankin.series import sum_partial_fractions
    g = args.genus
    terms = tensor_partial_fractions(g)
    dec = combine_extract(g)
    run.details["term_count"] = len(terms)
    run.details["decomposition"] = dec.to_json()
    at_zero = sum_partial_fractions(terms, at_zero=True)
    run.add(CheckReport("partial_fractions_at_zero", at_zero == 1, {"value": str(at_zero)},
                        None if at_zero == 1 else "sum of partial fractions at X=0 is not 1"))
    if g == 1:
        closed = tensor_series_genus1(max(args.order, 4))
        run.details["closed_form"] = {"numerator": closed.num.to_json(), "denominator": closed.den.to_json()}
        run.add(genus1_operator_form_check())
    run.add(series_oracle_check(g, min(args.order, 6 if g == 2 else args.order)))
    if args.reconstruct or args.check_feq:
        res = rankin_pipeline(g)
        if args.reconstruct:
            run.details["R"] = res.R.to_json()
            run.details["S"] = res.S.to_json()
            r = res.R.coefficients()
            if g == 2:
                zero = not r[1] and not r[11]
                run.add(CheckReport("r1_r11_vanish", zero, {}, None if zero else "r_1 or r_11 is nonzero"))
            for name, e in (("R", res.R), ("S", res.S)):
                poly = newton_polygon(e.coefficients())
                run.details[f"newton_{name}"] = poly.to_json()
                run.add(CheckReport(f"newton_{name}_integral", poly.integral_slopes(), {"height": poly.height},
                                    None if poly.integral_slopes() else f"{name} has a non-integral slope"))
        if args.check_feq:
            run.add(check_s_functional_equation(res.S, g))


def cmd_euler(args, run):
    from .hecke import (SatakeParams, eisenstein_params, spinor_factor, standard_factor_cleared,
                        triple_factor, check_normalization)
    from .algebra import var
    n = args.genus
    if args.type == "triple":
        pairs = [(var("x0"), var("x1")), (var("y0"), var("y1")), (var("x2"), var("y2"))]
        F = triple_factor(*pairs)
        run.details["factor"] = F.num.to_json()
        deg = F.num.degree("X")
        run.add(CheckReport("degree", deg == 8, {"degree": deg}, None if deg == 8 else f"degree {deg} != 8"))
        return
    if n not in (1, 2, 3):
        raise InputError("genus must be 1, 2 or 3")
    sp = eisenstein_params(n, args.weight) if args.weight is not None else SatakeParams.symbolic(n)
    if args.type == "spinor":
        F = spinor_factor(sp)
        want = 2 ** n
        run.details["factor"] = F.to_json()
    else:
        F, m = standard_factor_cleared(sp)
        want = 2 * n + 1
        run.details["factor_times_prod_alpha"] = F.to_json()
        run.details["prod_alpha"] = str(m)
    deg = F.num.degree("X")
    run.add(CheckReport("degree", deg == want, {"degree": deg}, None if deg == want else f"degree {deg} != {want}"))
    if args.weight is not None:
        run.add(check_normalization(sp))


def cmd_hodge(args, run):
    from .motives import hodge_spin, hodge_standard, hodge_tensor, check_lift_hodge
    n, k = args.genus, args.weight
    h = hodge_standard(n, k) if args.standard else hodge_spin(n, k)
    run.details["hodge"] = h.to_json()
    if args.tensor is not None:
        run.details["tensor"] = hodge_tensor(h, hodge_spin(n, args.tensor)).to_json()
    if args.check_lift is not None:
        run.add(check_lift_hodge(args.check_lift, k))


def cmd_gamma(args, run):
    from .motives import gamma_data, critical_values, gamma_c, duplication_errors
    import numpy as np
    g = gamma_data(args.kind, _int_list(args.weights))
    run.details["gamma"] = g.to_json()
    run.details["critical_values"] = critical_values(g)
    if args.numeric:
        pts = 0.5 + 1j * np.linspace(-30, 30, 100)
        err = float(duplication_errors(pts).max())
        run.add(CheckReport("duplication", err <= 1e-10, {"max_relative_error": err},
                            None if err <= 1e-10 else f"duplication error {err}"))
        e1 = abs(gamma_c(1) - 1 / np.pi) * np.pi
        run.add(CheckReport("gamma_c_at_1", e1 <= 1e-12, {"relative_error": float(e1)}))


def cmd_lift(args, run):
    from .lifts import (verify_ikeda_standard, eisenstein_lift_evidence, hecke_quadratic_check,
                        family_substitution_check)
    if args.check == "ikeda-standard":
        run.add(verify_ikeda_standard(args.n, args.weight))
        run.add(verify_ikeda_standard(args.n, args.weight, miyawaki=True))
    elif args.check == "eisenstein":
        run.add(eisenstein_lift_evidence(args.n, args.weight))
    elif args.check == "quadratic":
        run.add(hecke_quadratic_check(k=args.weight if args.weight is not None else "k"))
    else:
        run.add(family_substitution_check(args.n, args.weight if args.weight is not None else "k"))


def cmd_family(args, run):
    from .lifts import eisenstein_family, kummer_check
    weights = _int_list(args.weights)
    pts = eisenstein_family(args.p, weights, args.bound)
    run.details["points"] = [pt.to_json() for pt in pts]
    if args.csv:
        rows = ["n,k,a_n"] + [f"{n},{pt.k},{pt.coeffs[n]}" for pt in pts for n in sorted(pt.coeffs)]
        _write(args.csv, "\n".join(rows) + "\n", run)
    if args.kummer is not None:
        if len(weights) != 2:
            raise InputError("--kummer needs exactly two weights")
        run.add(kummer_check(args.bound, weights[0], weights[1], args.p, args.kummer))


def cmd_dirichlet(args, run):
    from .algebra import parse, MultiPoly
    from .hecke import dirichlet_from_euler
    from math import gcd
    data = _read_json(args.factors)
    if not isinstance(data, dict):
        raise InputError("factor file must map primes (or 'default') to expressions")
    try:
        default = parse(data["default"]) if "default" in data else None
        factors = {int(q): parse(e) for q, e in data.items() if q != "default"}
    except (ValueError, SyntaxError) as exc:
        raise InputError(f"bad factor expression: {exc}") from None
    D = dirichlet_from_euler(factors, args.bound, default)
    run.details["dirichlet"] = D.to_json()
    bad = None
    for a in range(2, args.bound + 1):
        for b in range(2, args.bound // a + 1):
            if gcd(a, b) == 1 and MultiPoly.coerce(D[a] * D[b]) != D[a * b]:
                bad = (a, b)
                break
        if bad:
            break
    run.add(CheckReport("multiplicativity", bad is None, {"bound": args.bound},
                        None if bad is None else f"coefficient at {bad[0] * bad[1]} is not the product"))


def cmd_newton(args, run):
    from .algebra import MultiPoly, parse
    from .rankin import newton_polygon
    data = _read_json(args.input)
    coeffs = data.get("coefficients") if isinstance(data, dict) else data
    if not isinstance(coeffs, list):
        raise InputError("input must be a list of coefficients or {'coefficients': [...]}")
    parsed = []
    try:
        for c in coeffs:
            if c is None:
                parsed.append(None)
            elif isinstance(c, dict):
                parsed.append(MultiPoly.from_json(c))
            else:
                parsed.append(parse(str(c)))
    except (ValueError, SyntaxError) as exc:
        raise InputError(f"bad coefficient: {exc}") from None
    weights = data.get("weights") if isinstance(data, dict) else None
    poly = newton_polygon(parsed, weights)
    run.details["newton"] = poly.to_json()
    if args.csv:
        _write(args.csv, poly.to_csv(), run)
    if args.svg:
        _write(args.svg, poly.to_svg(), run)
    run.add(CheckReport("integral_slopes", poly.integral_slopes(), {"height": poly.height},
                        None if poly.integral_slopes() else "polygon has a non-integral slope"))


# -- parser ----------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    ap = argparse.ArgumentParser(prog="heckelab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rankin", parents=[common], help="tensor series decomposition and reconstruction")
    p.add_argument("--genus", type=int, choices=(1, 2), required=True)
    p.add_argument("--order", type=int, default=8, help="truncation order for series cross-checks")
    p.add_argument("--reconstruct", action="store_true")
    p.add_argument("--check-feq", action="store_true")
    p.set_defaults(func=cmd_rankin)

    p = sub.add_parser("euler", parents=[common], help="spinor, standard and triple Euler factors")
    p.add_argument("--type", choices=("spinor", "standard", "triple"), required=True)
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--weight", type=int)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("hodge", parents=[common], help="Hodge types and the lifting check")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--tensor", type=int, metavar="L")
    p.add_argument("--check-lift", type=int, metavar="M")
    p.add_argument("--standard", action="store_true")
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("gamma", parents=[common], help="gamma shifts and critical values")
    p.add_argument("--kind", choices=("spin3", "spin4", "tensor-g2", "triple"), required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--numeric", action="store_true", help="also run the numeric gamma checks")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("lift", parents=[common], help="lift parameter checks")
    p.add_argument("--check", choices=("ikeda-standard", "eisenstein", "quadratic", "family"), required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--weight", type=int)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("family", parents=[common], help="Eisenstein family coefficients and Kummer congruences")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--kummer", type=int, metavar="M")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("dirichlet", parents=[common], help="Dirichlet coefficients of an Euler product")
    p.add_argument("--factors", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_dirichlet)

    p = sub.add_parser("newton", parents=[common], help="Newton polygon of a coefficient list")
    p.add_argument("--input", required=True)
    p.add_argument("--svg")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_newton)
    return ap


def run(argv=None):
    """Parse ``argv``, execute, print or write the JSON report; returns (RunReport, exit code)."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return RunReport("usage", "error" if code else "pass"), code
    rep = RunReport(args.command)
    try:
        rep.details["threads"] = _threads()
        args.func(args, rep)
    except Exception as exc:   # every failure path maps to a report and an exit code
        from .algebra import NotDivisible, Inconsistent, Underdetermined
        from .rankin import NotInImage
        if isinstance(exc, (NotDivisible, Inconsistent, Underdetermined, NotInImage, ArithmeticError)):
            rep.status = "fail"
        else:
            rep.status = "error"
        rep.details["error"] = f"{type(exc).__name__}: {exc}"
    text = json.dumps(rep.to_json(), indent=2, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return rep, rep.exit_code


def main(argv=None):
    _, code = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
