"""``wittkit`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__


class UsageError(ValueError):
    pass


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=1, default=str))
    else:
        print(text)


def _ring(tag):
    from .exact.parse import parse_ring
    return parse_ring(tag)


def _vector(R, text, what="--u"):
    if text is None:
        raise UsageError(f"{what} is required")
    text = text.strip()
    if not text:
        return []
    return [R.parse(part.strip()) for part in text.split(",")]


def _coeffs(R, values):
    return ",".join(R.format(c) for c in values)


# --- witt -------------------------------------------------------------------------------------

def cmd_witt(args):
    from .witt.big import (BigWittVector, frobenius, ghost, verschiebung, witt_add, witt_coordinates,
                           witt_star)
    R = _ring(args.ring)
    u = BigWittVector(R, _vector(R, args.u))
    if args.n is not None and u.n != args.n:
        raise UsageError(f"--u has {u.n} coefficients but --n is {args.n}")
    op = args.op
    if op in ("star", "add"):
        v = BigWittVector(R, _vector(R, args.v, "--v"))
        out = witt_star(u, v) if op == "star" else witt_add(u, v)
        values = out.coeffs
    elif op == "frobenius":
        values = frobenius(args.s, u).coeffs
    elif op == "verschiebung":
        values = verschiebung(args.s, u).coeffs
    elif op == "ghost":
        values = ghost(u).entries
    elif op == "coordinates":
        values = witt_coordinates(u)
    else:
        raise UsageError(f"unknown witt operation {op!r}")
    text = _coeffs(R, values)
    _emit(args, {"op": op, "ring": R.tag, "result": [R.format(c) for c in values], "version": __version__},
          text)
    return 0


def cmd_ptypical(args):
    from .witt.ptypical import PTypicalWitt, ptypical_F, ptypical_V
    R = _ring(args.ring)
    x = PTypicalWitt(R, args.p, _vector(R, args.u))
    op = args.op
    if op in ("add", "mul"):
        y = PTypicalWitt(R, args.p, _vector(R, args.v, "--v"))
        out = x + y if op == "add" else x * y
        values = out.components
    elif op == "F":
        values = ptypical_F(x).components
    elif op == "V":
        values = ptypical_V(x).components
    elif op == "ghost":
        values = x.ghost()
    else:
        raise UsageError(f"unknown ptypical operation {op!r}")
    _emit(args, {"op": op, "ring": R.tag, "p": args.p, "result": [R.format(c) for c in values],
                 "version": __version__}, _coeffs(R, values))
    return 0


# --- modulus ------------------------------------------------------------------------------------

def _cycle(text, field):
    from .modulus import ZeroCycle, parse_cycle
    stripped = text.strip()
    if stripped.startswith("[{") or stripped == "[]":
        return ZeroCycle.from_json(field, json.loads(stripped))
    return parse_cycle(stripped, field)


def cmd_phi(args):
    from .modulus import phi, phi_hat
    F = _ring(args.field)
    c = _cycle(args.cycle, F)
    if args.hat:
        w = phi_hat(c, args.n)
        payload = {"cycle": c.to_json(), "n": args.n, "phi_hat": w.to_json(), "version": __version__}
        text = f"{_coeffs(F, w.witt.coeffs)}; unit {F.format(w.unit)}; degree {w.degree}"
    else:
        w = phi(c, args.n)
        payload = {"cycle": c.to_json(), "n": args.n, "phi": w.to_json(), "version": __version__}
        text = _coeffs(F, w.coeffs)
    _emit(args, payload, text)
    return 0


def cmd_hasse_arf(args):
    from .exact.parse import parse_fraction
    from .modulus import hasse_arf_check
    field = _ring(args.field) if args.field else None
    rep = hasse_arf_check(parse_fraction(args.r), args.samples, args.seed, field)
    payload = dict(rep.to_json(), seed=args.seed, version=__version__)
    _emit(args, payload, f"r={rep.r}: {rep.agreements}/{rep.samples} agreements")
    return 0 if rep.passed else 1


# --- transfers ----------------------------------------------------------------------------------

def cmd_transfer(args):
    from .transfers import GROUPS, transfer
    from .witt.big import BigWittVector, HatWittVector
    from .witt.ptypical import PTypicalWitt
    B = _ring(args.algebra)
    if not hasattr(B, "rank"):
        raise UsageError(f"{args.algebra} is not a finite free algebra")
    A = B.base
    group = args.group
    if group not in GROUPS:
        raise UsageError(f"unknown group {group!r}; choose from {', '.join(GROUPS)}")
    if args.element is None:
        raise UsageError("--element is required")
    parts = [B.parse(t.strip()) for t in args.element.split(";")]
    if group in ("Ga", "Gm"):
        if len(parts) != 1:
            raise UsageError(f"{group} takes a single element")
        out = transfer(group, B, parts[0])
        text = A.format(out)
        result = text
    elif group == "W":
        w = (BigWittVector.teichmuller(B, parts[0], args.n) if len(parts) == 1
             else BigWittVector(B, parts))
        out = transfer(group, B, w)
        text = _coeffs(A, out.coeffs)
        result = [A.format(c) for c in out.coeffs]
    elif group == "What":
        x = HatWittVector.teichmuller(B, parts[0], args.n)
        out = transfer(group, B, x)
        text = f"{_coeffs(A, out.witt.coeffs)}; unit {A.format(out.unit)}; degree {out.degree}"
        result = out.to_json()
    else:
        if args.p is None:
            raise UsageError("group Wp needs --p")
        x = (PTypicalWitt.teichmuller(B, args.p, parts[0], args.n) if len(parts) == 1
             else PTypicalWitt(B, args.p, parts))
        out = transfer(group, B, x)
        text = _coeffs(A, out.components)
        result = [A.format(c) for c in out.components]
    _emit(args, {"group": group, "algebra": B.tag, "element": args.element, "result": result,
                 "version": __version__}, text)
    return 0


# --- homotopy -----------------------------------------------------------------------------------

def cmd_homotopy(args):
    from .correspondences import make_item, verify_homotopy
    F = _ring(args.field)
    params = {k: getattr(args, k) for k in ("s", "r", "ell", "p") if getattr(args, k) is not None}
    item = make_item(args.family, F, **params)
    rep = verify_homotopy(item)
    rep["version"] = __version__
    if args.json:
        _emit(args, rep, "")
    else:
        status = "pass" if rep["pass"] else "FAIL"
        lines = [f"{rep['family']} {rep['params']} over {rep['field']}: {status}"]
        if rep.get("error"):
            lines.append(f"  rejected: {rep['error']}")
        for key in ("boundary0", "boundary1"):
            if rep.get(key):
                lines.append(f"  {key}: {json.dumps(rep[key], sort_keys=True)}")
        print("\n".join(lines))
    return 0 if rep["pass"] else 1


# --- drw ----------------------------------------------------------------------------------------

def cmd_drw_present(args):
    from .drw import MonomialAlgebra, build_presentation
    A = MonomialAlgebra.parse(args.A)
    pres = build_presentation(A, n=args.n, q=args.q, dx=args.dx, dr=args.dr)
    data = pres.to_json()
    data["version"] = __version__
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(data, fh, sort_keys=True)
    ranks = pres.ranks_per_depth()
    summary = {"algebra": A.tag, "n": args.n, "q": args.q, "dx": args.dx, "dr": args.dr,
               "ranks_per_depth": ranks, "out": args.out, "version": __version__}
    _emit(args, summary, f"W_{args.n} Omega^{args.q} of {A.tag}: ranks per depth {ranks}"
          + (f"; written to {args.out}" if args.out else ""))
    return 0


def cmd_drw_check(args):
    from .drw import BoundedPresentation, parse_expression
    with open(args.pres) as fh:
        data = json.load(fh)
    pres = BoundedPresentation.from_json(data)
    lhs = parse_expression(args.lhs, pres.A, pres.n)
    rhs = parse_expression(args.rhs, pres.A, pres.n)
    v = pres.equal_at_depth(lhs, rhs)
    payload = {"lhs": str(lhs), "rhs": str(rhs), "verdict": v.to_json(), "version": __version__}
    _emit(args, payload, f"{v.status}: {lhs}  vs  {rhs}" + (f" ({v.detail})" if v.detail else ""))
    return 0 if v.status == "EQUAL" else 1


# --- suites ---------------------------------------------------------------------------------------

def cmd_suite(args):
    from .suites import SUITES, run_suite
    if args.name not in SUITES:
        raise UsageError(f"unknown suite {args.name!r}; choose from {', '.join(sorted(SUITES))}")
    kwargs = {}
    if args.p is not None:
        if args.name != "drw-axioms":
            raise UsageError("--p applies to the drw-axioms suite only")
        kwargs["p"] = args.p
    rep = run_suite(args.name, seed=args.seed, **kwargs)
    if args.json:
        print(rep.dumps(full=args.full))
    else:
        print(rep.summary())
        for case in rep.to_json()["failures"]:
            print(f"  FAIL {case['name']}: {json.dumps(case['payload'], sort_keys=True, default=str)}")
    return rep.exit_code


# --- parser -----------------------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0)

    ap = _Parser(prog="wittkit", description="Witt vectors, zero-cycles, transfers and de Rham-Witt checks")
    ap.add_argument("--version", action="version", version=f"wittkit {__version__}")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    w = sub.add_parser("witt", parents=[common], help="big Witt vector arithmetic")
    w.add_argument("op", choices=["star", "add", "frobenius", "verschiebung", "ghost", "coordinates"])
    w.add_argument("--ring", required=True)
    w.add_argument("--n", type=int)
    w.add_argument("--u", required=True, help="coefficients a_1,...,a_n of 1 + a_1 t + ...")
    w.add_argument("--v")
    w.add_argument("--s", type=int, default=2)
    w.set_defaults(func=cmd_witt)

    pt = sub.add_parser("ptypical", parents=[common], help="p-typical Witt vector arithmetic")
    pt.add_argument("op", choices=["add", "mul", "F", "V", "ghost"])
    pt.add_argument("--ring", required=True)
    pt.add_argument("--p", type=int, required=True)
    pt.add_argument("--u", required=True, help="Witt components x_0,...,x_(n-1)")
    pt.add_argument("--v")
    pt.set_defaults(func=cmd_ptypical)

    ph = sub.add_parser("phi", parents=[common], help="zero-cycle to Witt vector")
    ph.add_argument("--field", required=True)
    ph.add_argument("--n", type=int, required=True)
    ph.add_argument("--cycle", required=True, help='"[x^2+1] - 2[x-3]" or a JSON list of {poly, mult}')
    ph.add_argument("--hat", action="store_true", help="include the unit and degree components")
    ph.set_defaults(func=cmd_phi)

    ha = sub.add_parser("hasse-arf", parents=[common], help="admissibility for r*P versus ceil(r)*P")
    ha.add_argument("--r", required=True)
    ha.add_argument("--samples", type=int, default=100)
    ha.add_argument("--field")
    ha.set_defaults(func=cmd_hasse_arf)

    tr = sub.add_parser("transfer", parents=[common], help="transfer along a finite free algebra")
    tr.add_argument("--group", required=True)
    tr.add_argument("--algebra", required=True, help='"F5[x]/(x^2-2)" or a product "F5 * F5[x]/(x^2)"')
    tr.add_argument("--element", help="an element; for W and Wp several coefficients separated by ';'")
    tr.add_argument("--n", type=int, default=2, help="Witt length for a Teichmuller input")
    tr.add_argument("--p", type=int)
    tr.set_defaults(func=cmd_transfer)

    ho = sub.add_parser("homotopy", help="cycle homotopies and diagram cycles")
    ho_sub = ho.add_subparsers(dest="action", parser_class=_Parser)
    ho_sub.required = True
    hv = ho_sub.add_parser("verify", parents=[common])
    hv.add_argument("--family", required=True)
    hv.add_argument("--field", required=True)
    for name in ("s", "r", "ell", "p"):
        hv.add_argument(f"--{name}", type=int)
    hv.set_defaults(func=cmd_homotopy)

    dr = sub.add_parser("drw", help="bounded de Rham-Witt presentations")
    dr_sub = dr.add_subparsers(dest="action", parser_class=_Parser)
    dr_sub.required = True
    pr = dr_sub.add_parser("present", parents=[common])
    pr.add_argument("--A", required=True, help='"F3[x]", "F3[x]/(x^4)" or "F3"')
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--q", type=int, required=True)
    pr.add_argument("--dx", type=int, required=True)
    pr.add_argument("--dr", type=int, default=1)
    pr.add_argument("--out")
    pr.set_defaults(func=cmd_drw_present)
    ck = dr_sub.add_parser("check", parents=[common])
    ck.add_argument("--pres", required=True)
    ck.add_argument("--lhs", required=True)
    ck.add_argument("--rhs", required=True)
    ck.set_defaults(func=cmd_drw_check)

    su = sub.add_parser("suite", parents=[common], help="run an acceptance suite")
    su.add_argument("name")
    su.add_argument("--p", type=int)
    su.add_argument("--full", action="store_true", help="include every case in the JSON report")
    su.set_defaults(func=cmd_suite)
    return ap


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"wittkit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
