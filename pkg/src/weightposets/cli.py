"""Command-line front end.

Root vectors are printed as coefficient lists in the simple roots.  Nodes are
numbered 1..n along the Dynkin diagram; for E6, E7, E8 the order is

    E6: 1-2-3-4-5 with 6 attached to 3
    E7: 1-2-3-4-5-6 with 7 attached to 4
    E8: 1-2-3-4-5-6-7 with 8 attached to 5

Polynomials are ascending coefficient lists; rationals are {"num", "den"}.
Exit codes: 0 ok, 1 a theorem-level check failed, 2 usage error, 3 the ideal
enumeration cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import rootsys
from .grading import WeightPoset, make_grading
from .poset import (
    EnumerationCapExceeded,
    FinitePoset,
    boolean_algebra,
    chain_product,
    default_cap,
    load,
    m_polynomial,
    n_polynomial,
    product_formula,
    rank_profile,
    to_dot,
)
from .rowmotion import lagrangian_ideals, orbits
from .verify import CHECK_NAMES, orbit_report_json, verify_all
from .weyl import coset_reps

EXIT_OK, EXIT_THEOREM, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

_NODE_HELP = (
    "Node numbering: 1..n along the diagram; E6: 1-2-3-4-5 with 6 on 3; "
    "E7: 1-...-6 with 7 on 4; E8: 1-...-7 with 8 on 5. Root vectors are simple-root coefficients."
)


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{what} must be a comma list of integers, got {text!r}") from None


def _system(text: str):
    try:
        return rootsys.build(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _grading(args):
    if args.marks is None:
        raise UsageError("--marks is required with --type")
    rs = _system(args.type)
    try:
        return make_grading(rs, _parse_ints(args.marks, "--marks"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _weight_poset(args) -> WeightPoset:
    g = _grading(args)
    try:
        return WeightPoset(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _poset_input(args) -> FinitePoset:
    chosen = [x for x in ("poset_file", "chains", "boolean", "type") if getattr(args, x, None) is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --poset-file, --chains, --boolean, --type/--marks")
    if args.poset_file is not None:
        try:
            return load(args.poset_file)
        except (ValueError, KeyError) as exc:
            raise UsageError(f"bad poset file: {exc}") from None
    if args.chains is not None:
        dims = _parse_ints(args.chains, "--chains")
        if not dims or any(d < 1 for d in dims):
            raise UsageError("--chains needs positive chain lengths")
        return chain_product(dims)
    if args.boolean is not None:
        if args.boolean < 1:
            raise UsageError("--boolean needs n >= 1")
        return boolean_algebra(args.boolean)
    return _weight_poset(args)


def _add_poset_selectors(p: argparse.ArgumentParser) -> None:
    p.add_argument("--poset-file", help="JSON poset {size, covers, rank}")
    p.add_argument("--chains", help="chain product, e.g. 2,3,3")
    p.add_argument("--boolean", type=int, help="Boolean lattice B^n")
    p.add_argument("--type", help="root system, e.g. E7")
    p.add_argument("--marks", help="comma list of marks, one per node")


# -- handlers -------------------------------------------------------------------


def cmd_rootsys_info(args, out) -> int:
    out.write(_dump(rootsys.info(_system(args.type))) + "\n")
    return EXIT_OK


def cmd_weyl_cosets(args, out) -> int:
    g = _grading(args)
    try:
        reps = coset_reps(g.rs, g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = [
        {
            "word": [i + 1 for i in r.word],
            "length": r.length,
            "inversion_set": sorted(list(v) for v in r.inv_set),
        }
        for r in reps
    ]
    out.write(_dump(data) + "\n")
    return EXIT_OK


def cmd_grading_build(args, out) -> int:
    wp = _weight_poset(args)
    if args.emit == "dot":
        out.write(to_dot(wp, wp.grading.label()))
        return EXIT_OK
    data = {
        "type": str(wp.grading.rs.stype),
        "marks": list(wp.grading.marks),
        "elements": [list(e) for e in wp.elements],
        "covers": [list(c) for c in wp.covers],
        "rank": list(wp.rank),
        "dims": wp.dims,
    }
    out.write(_dump(data) + "\n")
    return EXIT_OK


def cmd_poset(args, out) -> int:
    p = _poset_input(args)
    if args.action == "mpoly":
        m = m_polynomial(p)
        pf = product_formula(p.rank)
        data = {"M": m.to_list(), "product_formula": pf.to_list() if hasattr(pf, "to_list") else None}
    elif args.action == "npoly":
        data = {"N": n_polynomial(p).to_list()}
    else:
        prof = rank_profile(p)
        data = {
            "size": p.size,
            "level_sizes": list(prof.level_sizes),
            "rank_symmetric": prof.symmetric,
            "rank_unimodal": prof.unimodal,
            "sperner": prof.sperner,
            "unique_max_level": prof.unique_max_level,
            "width": prof.width,
            "num_antichains": len(p.antichains()),
            "components": len(p.components()),
        }
    out.write(_dump(data) + "\n")
    return EXIT_OK


def cmd_rowmotion_orbits(args, out) -> int:
    p = _poset_input(args)
    lag = None
    if isinstance(p, WeightPoset) and p.grading.is_extra_special:
        lag = set(lagrangian_ideals(p)).__contains__
    rep = orbits(p, lagrangian=lag)
    data = orbit_report_json(rep, verbose=args.verbose, poset=p)
    if args.emit == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["orbit", "size", "avg_antichain_num", "avg_antichain_den", "avg_ideal_num", "avg_ideal_den", "lagrangian_count"])
        for i, o in enumerate(rep.per_orbit):
            a, b = o.avg_antichain_size, o.avg_ideal_size
            w.writerow([i, o.size, a.numerator, a.denominator, b.numerator, b.denominator, "" if o.lagrangian_count is None else o.lagrangian_count])
        out.write(buf.getvalue())
    else:
        out.write(_dump(data) + "\n")
    return EXIT_OK


def _parallelism(args) -> int:
    if args.parallelism is not None:
        return args.parallelism
    env = os.environ.get("WEIGHTPOSETS_PARALLELISM")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"WEIGHTPOSETS_PARALLELISM must be an integer, got {env!r}") from None
    return 1


def report_csv(result) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "scope", "status", "holds"])
    for c in result.checks:
        w.writerow([c.name, c.scope, c.status, "" if c.holds is None else str(c.holds).lower()])
    return buf.getvalue()


def cmd_verify(args, out) -> int:
    check = None if args.check == "all" else args.check
    if check is not None and check not in CHECK_NAMES:
        raise UsageError(f"unknown check {check!r}; choose all or one of {', '.join(CHECK_NAMES)}")
    if args.max_rank < 1:
        raise UsageError("--max-rank must be >= 1")
    par = _parallelism(args)
    result = verify_all(args.max_rank, only=check, parallelism=par, force=args.force)
    config = {
        "max_rank": args.max_rank,
        "check": args.check,
        "force": args.force,
        "ideal_cap": default_cap(),
    }
    report = {
        "config": config,
        "checks": [c.to_json() for c in result.checks],
        "gradings": result.gradings,
    }
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(json.dumps(report, sort_keys=True, indent=1) + "\n")
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report_csv(result))
    counts: dict[str, int] = {}
    for c in result.checks:
        counts[c.status] = counts.get(c.status, 0) + 1
    failed = result.theorem_failures
    summary = {
        "counts": counts,
        "failed": [{"name": c.name, "scope": c.scope} for c in failed],
        "evidence_not_holding": [
            {"name": c.name, "scope": c.scope} for c in result.checks if c.status == "evidence" and not c.holds
        ],
    }
    out.write(_dump(summary) + "\n")
    return EXIT_THEOREM if failed else EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weightposets", description=__doc__.split("\n\n")[0], epilog=_NODE_HELP)
    ap.add_argument("--cap", type=int, help="max number of upper ideals to enumerate (env WEIGHTPOSETS_IDEAL_CAP)")
    sub = ap.add_subparsers(dest="group", required=True)

    rs = sub.add_parser("rootsys", help="root system data", epilog=_NODE_HELP)
    rs_sub = rs.add_subparsers(dest="action", required=True)
    p = rs_sub.add_parser("info", epilog=_NODE_HELP)
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_rootsys_info)

    wy = sub.add_parser("weyl", help="minimal coset representatives")
    wy_sub = wy.add_subparsers(dest="action", required=True)
    p = wy_sub.add_parser("cosets", epilog=_NODE_HELP)
    p.add_argument("--type", required=True)
    p.add_argument("--marks", required=True)
    p.set_defaults(func=cmd_weyl_cosets)

    gr = sub.add_parser("grading", help="Delta(1) of a grading")
    gr_sub = gr.add_subparsers(dest="action", required=True)
    p = gr_sub.add_parser("build", epilog=_NODE_HELP)
    p.add_argument("--type", required=True)
    p.add_argument("--marks", required=True)
    p.add_argument("--emit", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_grading_build)

    ps = sub.add_parser("poset", help="poset statistics and polynomials")
    ps.add_argument("action", choices=["stats", "mpoly", "npoly"])
    _add_poset_selectors(ps)
    ps.set_defaults(func=cmd_poset)

    rw = sub.add_parser("rowmotion", help="rowmotion orbits")
    rw_sub = rw.add_subparsers(dest="action", required=True)
    p = rw_sub.add_parser("orbits", epilog=_NODE_HELP)
    _add_poset_selectors(p)
    p.add_argument("--emit", choices=["json", "csv"], default="json")
    p.add_argument("--verbose", action="store_true", help="list the antichains of every orbit")
    p.set_defaults(func=cmd_rowmotion_orbits)

    vf = sub.add_parser("verify", help="run theorem and conjecture checks")
    vf.add_argument("check", help="all or one of: " + ", ".join(CHECK_NAMES))
    vf.add_argument("--max-rank", type=int, default=8)
    vf.add_argument("--report", help="write the JSON report here")
    vf.add_argument("--csv", help="write a CSV summary here")
    vf.add_argument("--parallelism", type=int, help="worker processes (env WEIGHTPOSETS_PARALLELISM)")
    vf.add_argument("--force", action="store_true", help="apply rowmotion conjecture checks beyond 1-standard gradings")
    vf.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    saved_cap = os.environ.get("WEIGHTPOSETS_IDEAL_CAP")
    if args.cap is not None:
        if args.cap < 1:
            print("error: --cap must be positive", file=sys.stderr)
            return EXIT_USAGE
        # set through the environment so worker processes see it too
        os.environ["WEIGHTPOSETS_IDEAL_CAP"] = str(args.cap)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.cap is not None:
            if saved_cap is None:
                os.environ.pop("WEIGHTPOSETS_IDEAL_CAP", None)
            else:
                os.environ["WEIGHTPOSETS_IDEAL_CAP"] = saved_cap


if __name__ == "__main__":
    sys.exit(main())
