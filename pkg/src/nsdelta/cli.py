"""Command line interface: compute individual objects, run the verification
suite, and report the atom-positivity experiments."""

from __future__ import annotations

import argparse
import json
import sys

from . import macdonald as mac
from .checks import CheckSpec, run_check, run_suite, suite_specs
from .delta_ops import lhs_eq1, lhs_eq2, ns_c_alpha
from .llt import llt_poly, rhs_nonsym
from .partitions import compositions_of
from .paths import PartialPath, parse_marking
from .pspace import atom_expand
from .scalars import SymbolicDomain


def _parse_ints(text):
    return tuple(int(x) for x in text.split(",") if x.strip())


def _scalar_text(c):
    return repr(c)


def _emit(obj, fmt):
    if fmt == "json":
        print(json.dumps(obj, indent=2, default=str))
    else:
        if isinstance(obj, dict) and "terms" in obj:
            for term in obj["terms"]:
                print(f"  x^{term['exponents']} p{term['partition']}  *  {term['scalar']}")
        elif isinstance(obj, list):
            for rec in obj:
                print(f"  {rec}")
        else:
            print(obj)


def _pelem_out(p, fmt):
    if fmt == "json":
        _emit(p.to_records(), "json")
    else:
        print(p)


def _symfunc_out(f, fmt, basis="m"):
    f = f.convert(basis)
    if fmt == "json":
        _emit(f.to_records(), "json")
    else:
        print(f)


def cmd_compute(args):
    domain = SymbolicDomain()
    fmt = args.format
    target = args.target
    if target in ("grow", "gcol"):
        partial = PartialPath.from_string(args.ell, args.path)
        sigma = parse_marking(args.sigma) if args.sigma else frozenset()
        variant = ("row" if target == "grow" else "col") + ("_signed" if args.signed else "")
        nvars = args.nvars or (partial.ell + partial.n + 1)
        _pelem_out(llt_poly(partial, sigma, variant, nvars, domain), fmt)
    elif target == "catalan-c":
        _symfunc_out(mac.c_compose(_parse_ints(args.alpha), domain), fmt)
    elif target == "ns-c":
        _pelem_out(ns_c_alpha(_parse_ints(args.alpha), domain), fmt)
    elif target == "macdonald":
        _symfunc_out(mac.macdonald_ht(_parse_ints(args.mu), domain), fmt, basis="s")
    elif target == "atom-expand":
        if args.path:
            partial = PartialPath.from_string(args.ell, args.path)
            sigma = parse_marking(args.sigma) if args.sigma else frozenset()
            nvars = args.nvars or (partial.ell + partial.n + 1)
            f = llt_poly(partial, sigma, "row", nvars, domain)
        else:
            f = lhs_eq1(_parse_ints(args.alpha), args.k, domain)
        recs = [
            {"eta": list(eta), "lam": list(lam), "scalar": _scalar_text(c)}
            for (eta, lam), c in sorted(atom_expand(f).items())
        ]
        _emit(recs, fmt)
    elif target == "lhs-eq1":
        _pelem_out(lhs_eq1(_parse_ints(args.alpha), args.k, domain), fmt)
    elif target == "lhs-eq2":
        _pelem_out(lhs_eq2(_parse_ints(args.alpha), args.k, domain), fmt)
    elif target == "rhs-eq1":
        _pelem_out(rhs_nonsym(_parse_ints(args.alpha), args.k, domain, weak=True), fmt)
    elif target == "rhs-eq2":
        _pelem_out(rhs_nonsym(_parse_ints(args.alpha), args.k, domain, weak=False), fmt)
    else:
        raise SystemExit(f"unknown compute target {target}")
    return 0


def cmd_verify(args):
    if args.check:
        params = {}
        if args.alpha:
            params["alpha"] = _parse_ints(args.alpha)
        if args.k is not None:
            params["k"] = args.k
        if args.n is not None:
            params["n"] = args.n
        if args.ell is not None:
            params["ell"] = args.ell
        if args.relation:
            params["relation"] = args.relation
        if args.target:
            params["target"] = args.target
        specs = [CheckSpec(args.check, params)]
    else:
        specs = suite_specs(args.suite)
    reports = run_suite(specs, mode=args.mode, seed=args.seed)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.line())
        npass = sum(r.status == "pass" for r in reports)
        nfail = sum(r.status == "fail" for r in reports)
        nskip = sum(r.status == "skipped" for r in reports)
        print(f"-- {npass} pass, {nfail} fail, {nskip} skipped ({args.mode} mode)")
    return 1 if any(r.status == "fail" for r in reports) else 0


def cmd_atoms(args):
    n, k = args.n, args.k
    specs = []
    if args.target == "llt":
        specs.append(CheckSpec("atom_positivity", {"target": "llt", "bound": n}))
    else:
        for alpha in compositions_of(n - k):
            specs.append(CheckSpec("atom_positivity", {"target": args.target, "alpha": alpha, "k": k}))
    reports = run_suite(specs)
    findings = [r for r in reports if r.witness]
    for r in reports:
        print(r.line())
        if r.witness:
            print("  " + r.witness)
    if not findings:
        print(f"no negative stable-atom coefficients observed (target={args.target}, n={n}, k={k})")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="nsdelta",
        description="Exact verification of the nonsymmetric compositional Delta identities",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute a single object")
    c.add_argument("target", choices=[
        "grow", "gcol", "catalan-c", "ns-c", "macdonald", "atom-expand",
        "lhs-eq1", "lhs-eq2", "rhs-eq1", "rhs-eq2",
    ])
    c.add_argument("--alpha", default="", help="composition, e.g. 3,3")
    c.add_argument("--k", type=int, default=0)
    c.add_argument("--mu", default="", help="partition for the macdonald target")
    c.add_argument("--path", default="", help="partial path steps, e.g. NNEE")
    c.add_argument("--ell", type=int, default=0, help="level of the partial path")
    c.add_argument("--dr", default="", help="decorated rows, e.g. 2,6")
    c.add_argument("--sigma", default="", help="marking, e.g. '(2,1);(6,4)' as (row,col)")
    c.add_argument("--signed", action="store_true", help="signed LLT variants")
    c.add_argument("--nvars", type=int, default=0)
    c.add_argument("--format", choices=["json", "text"], default="text")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--suite", choices=["default", "fast", "full"], default="default")
    v.add_argument("--check", default="", help="run a single named check")
    v.add_argument("--alpha", default="")
    v.add_argument("--k", type=int, default=None)
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--ell", type=int, default=None)
    v.add_argument("--relation", default="", help="relation name for operator_relations")
    v.add_argument("--target", default="", help="target for atom_positivity")
    v.add_argument("--mode", choices=["symbolic", "specialized"], default="symbolic")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=["json", "text"], default="text")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("atoms", help="stable-atom positivity experiment")
    a.add_argument("--target", choices=["llt", "eq1", "eq2"], required=True)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--k", type=int, default=0)
    a.set_defaults(func=cmd_atoms)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
