"""Command-line front end.

Every run is fully determined by its arguments (no randomness anywhere),
so outputs are byte-reproducible.  Counts serialize as decimal strings,
never JSON numbers: they routinely exceed 2^53 and must survive any
consumer.  Rationals print as "a/b".

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 enumeration-budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import DEFAULT_BUDGET, BudgetExceededError, coset_census
from .covering import (DeepHoleMismatchError, count_deep_hole_cosets,
                       mcf_classify, saturating_set_report)
from .formulas import (InconsistentPrefixError, LowWeightPrefix,
                       bonneau_original, bonneau_transformed, dist_weight1,
                       dist_weight2, dist_weight_d1, dist_weight_d2,
                       dist_weight_mid)
from .geometry import (bisecant_census, conic_points, hyperoval_points,
                       shortened_conic)
from .gf import field_of_order
from .mds import build_code
from .verify import THEOREM_NAMES, run_acceptance

SCHEMA = "mdscosets.v1"


def _csv_ints(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok != ""]


def _field_from_args(args):
    poly = tuple(_csv_ints(args.poly)) if getattr(args, "poly", None) else None
    return field_of_order(args.q, poly)


def _emit(payload: dict, args, table_lines: list[str], csv_lines: list[str] | None = None):
    fmt = args.format
    if fmt == "json":
        text = json.dumps(payload, indent=2)
    elif fmt == "csv":
        if csv_lines is None:
            raise ValueError("csv output is not defined for this command")
        text = "\n".join(csv_lines)
    else:
        text = "\n".join(table_lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _strs(counts) -> list[str]:
    return [str(int(c)) for c in counts]


def cmd_dist(args) -> int:
    n, d, q = args.n, args.d, args.q
    consistent = True
    if args.bonneau:
        if args.prefix is None:
            raise ValueError("--bonneau needs --prefix B_0,...,B_(d-2)")
        prefix = LowWeightPrefix(n, d, q, tuple(_csv_ints(args.prefix)))
        fn = bonneau_original if args.original else bonneau_transformed
        dist = fn(prefix, strict=not args.loose)
        consistent = dist.is_nonnegative()
        form = "bonneau-original" if args.original else "bonneau-transformed"
    else:
        form = args.closed_form
        if form == "w1":
            dist = dist_weight1(n, d, q)
        elif form == "d1":
            dist = dist_weight_d1(n, d, q)
        elif form == "d2":
            if args.b is None:
                raise ValueError("--closed-form d2 needs --b B_(d-2)")
            dist = dist_weight_d2(n, d, q, args.b, strict=not args.loose)
        elif form == "w2":
            if args.b is None:
                raise ValueError("--closed-form w2 needs --b B_(d-2)")
            dist = dist_weight2(n, d, q, args.b, strict=not args.loose)
        elif form == "mid":
            if args.W is None or args.knowns is None:
                raise ValueError("--closed-form mid needs --W and --knowns")
            dist = dist_weight_mid(n, d, q, args.W, _csv_ints(args.knowns))
        else:
            raise ValueError(f"unknown closed form {form!r}")
        consistent = dist.is_nonnegative()
    payload = {
        "schema": SCHEMA,
        "command": "dist",
        "form": form,
        "params": {"n": n, "d": d, "q": q},
        "counts": _strs(dist.counts),
        "total": str(dist.total()),
        "consistent": consistent,
    }
    table = [f"coset distribution ({form}, n={n}, d={d}, q={q})",
             "  w  B_w"]
    table += [f"{w:>3}  {c}" for w, c in enumerate(dist.counts)]
    table.append(f"total {dist.total()}" + ("" if consistent else "  (inconsistent)"))
    csv_lines = ["w,B_w"] + [f"{w},{c}" for w, c in enumerate(dist.counts)]
    _emit(payload, args, table, csv_lines)
    return 0


def cmd_census_code(args) -> int:
    fld = _field_from_args(args)
    code, construction = build_code(fld, args.family, args.d,
                                    removed=_csv_ints(args.remove) if args.remove else (),
                                    budget=args.budget)
    census = coset_census(code, args.budget)
    classes = [{
        "class_index": i,
        "weight_W": cls.weight,
        "coset_count": str(cls.count),
        "counts": _strs(cls.distribution.counts),
    } for i, cls in enumerate(census.classes)]
    payload = {
        "schema": SCHEMA,
        "command": "census-code",
        "code": {"n": code.n, "k": code.k, "d": code.min_distance(args.budget),
                 "q": fld.q, "family": construction.family,
                 "removed": list(construction.removed)},
        "total_cosets": str(census.total_cosets),
        "classes": classes,
    }
    table = [f"coset census of [{code.n},{code.k}]_{fld.q} ({census.total_cosets} cosets)",
             "  W  cosets  distribution"]
    table += [f"{cls.weight:>3}  {cls.count:>6}  {list(cls.distribution.counts)}"
              for cls in census.classes]
    header = "class_index,weight_W,coset_count," + ",".join(
        f"B_{w}" for w in range(code.n + 1))
    csv_lines = [header] + [
        f"{i},{cls.weight},{cls.count}," + ",".join(_strs(cls.distribution.counts))
        for i, cls in enumerate(census.classes)]
    _emit(payload, args, table, csv_lines)
    return 0


def cmd_census_geometry(args) -> int:
    fld = _field_from_args(args)
    name = args.arc
    if name == "conic":
        arc = conic_points(fld)
    elif name == "hyperoval":
        arc = hyperoval_points(fld)
    elif name.startswith("conic-minus:"):
        arc = shortened_conic(fld, int(name.split(":", 1)[1]))
    else:
        raise ValueError(f"unknown arc {name!r} (conic, hyperoval, conic-minus:K)")
    census = bisecant_census(arc)
    payload = {
        "schema": SCHEMA,
        "command": "census-geometry",
        "arc": name,
        "q": fld.q,
        "arc_size": arc.n,
        "off_arc_points": str(census.covered),
        "classes": [{"bisecants": b, "points": str(npts)}
                    for b, npts in census.classes],
    }
    table = [f"bisecant census of {name} ({arc.n} points) in PG(2,{fld.q})",
             "  bisecants  points"]
    table += [f"{b:>10}  {npts}" for b, npts in census.classes]
    csv_lines = ["bisecants,points"] + [f"{b},{npts}" for b, npts in census.classes]
    _emit(payload, args, table, csv_lines)
    return 0


def cmd_covering(args) -> int:
    fld = _field_from_args(args)
    removed = _csv_ints(args.remove) if args.remove else ()
    code, construction = build_code(fld, args.family, args.d,
                                    removed=removed, budget=args.budget)
    report = mcf_classify(code, args.budget)
    sat = saturating_set_report(code, report)
    payload = {
        "schema": SCHEMA,
        "command": "covering-classify",
        "code": {"n": report.n, "k": report.k, "d": report.d, "q": report.q},
        "R": report.R,
        "mu": str(report.mu),
        "is_mcf": report.is_mcf,
        "is_apmcf": report.is_apmcf,
        "is_pmcf": report.is_pmcf,
        "mu_density": str(report.mu_density),
        "deep_hole_cosets": str(report.deep_hole_coset_count),
        "farthest_profile": [{"B_R": str(b), "cosets": str(c)}
                             for b, c in report.farthest_profile],
        "saturating_set": sat,
    }
    table = [
        f"covering classification of [{report.n},{report.k},{report.d}]_{report.q}",
        f"R = {report.R}, mu = {report.mu}",
        f"APMCF: {report.is_apmcf}   PMCF: {report.is_pmcf}",
        f"mu-density = {report.mu_density}",
        f"weight-R cosets: {report.deep_hole_coset_count}",
        sat.get("statement", sat.get("reason", "")),
    ]
    if construction.delta >= 1:
        dh = count_deep_hole_cosets(code, construction, args.budget)
        payload["deep_hole_check"] = {
            "count": str(dh.count), "bound": str(dh.bound),
            "delta": dh.delta, "parent_R": dh.parent_R,
            "equality_required": dh.equality_required,
        }
        table.append(f"deep-hole count {dh.count} vs (q-1)*Delta = {dh.bound} "
                     f"(parent R = {dh.parent_R})")
    _emit(payload, args, table)
    return 0


def cmd_verify(args) -> int:
    numbers = None
    if args.theorem:
        if args.theorem not in THEOREM_NAMES:
            raise ValueError(f"unknown theorem {args.theorem!r}; "
                             f"choices: {sorted(THEOREM_NAMES)}")
        numbers = [THEOREM_NAMES[args.theorem]]
    qs = (args.q,) if args.q else None
    ds = (args.d,) if args.d else None
    kwargs = {}
    if qs:
        kwargs["qs"] = qs
    if ds:
        kwargs["ds"] = ds
    results = run_acceptance(budget=args.budget, numbers=numbers, **kwargs)
    all_passed = all(r.passed for r in results)
    payload = {
        "schema": SCHEMA,
        "command": "verify",
        "all_passed": all_passed,
        "criteria": [{"number": r.number, "name": r.name, "passed": r.passed,
                      "lines": r.lines} for r in results],
    }
    table = []
    for r in results:
        table.append(r.summary())
        table += [f"    {line}" for line in r.lines]
    _emit(payload, args, table)
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--out", help="write the output to a file")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max exhaustive-enumeration visits")

    parser = argparse.ArgumentParser(
        prog="mdscosets",
        description="exact coset weight distributions of MDS codes")
    sub = parser.add_subparsers(dest="command", required=True)

    dist = sub.add_parser("dist", parents=[common],
                          help="closed-form or Bonneau-computed coset distribution")
    mode = dist.add_mutually_exclusive_group(required=True)
    mode.add_argument("--closed-form", choices=("w1", "d1", "d2", "w2", "mid"))
    mode.add_argument("--bonneau", action="store_true")
    dist.add_argument("--n", type=int, required=True)
    dist.add_argument("--d", type=int, required=True)
    dist.add_argument("--q", type=int, required=True)
    dist.add_argument("--b", type=int, help="known B_(d-2)")
    dist.add_argument("--W", type=int, help="coset weight for --closed-form mid")
    dist.add_argument("--knowns", help="B_(d-W),...,B_(d-2) for --closed-form mid")
    dist.add_argument("--prefix", help="B_0,...,B_(d-2) for --bonneau")
    dist.add_argument("--original", action="store_true",
                      help="use the double-sum form")
    dist.add_argument("--loose", action="store_true",
                      help="report inconsistent prefixes instead of erroring")
    dist.set_defaults(func=cmd_dist)

    census = sub.add_parser("census", help="coset or bisecant census")
    csub = census.add_subparsers(dest="what", required=True)
    ccode = csub.add_parser("code", parents=[common])
    ccode.add_argument("--family", choices=("gdrs", "grs", "gtrs"), required=True)
    ccode.add_argument("--q", type=int, required=True)
    ccode.add_argument("--d", type=int)
    ccode.add_argument("--remove", help="columns of the full family matrix to drop")
    ccode.add_argument("--poly", help="field modulus coefficients c_0,...,c_m")
    ccode.set_defaults(func=cmd_census_code)
    cgeom = csub.add_parser("geometry", parents=[common])
    cgeom.add_argument("--q", type=int, required=True)
    cgeom.add_argument("--arc", required=True,
                       help="conic | hyperoval | conic-minus:K")
    cgeom.add_argument("--poly")
    cgeom.set_defaults(func=cmd_census_geometry)

    covering = sub.add_parser("covering", help="covering classification")
    covsub = covering.add_subparsers(dest="what", required=True)
    classify = covsub.add_parser("classify", parents=[common])
    classify.add_argument("--family", choices=("gdrs", "grs", "gtrs"), required=True)
    classify.add_argument("--q", type=int, required=True)
    classify.add_argument("--d", type=int)
    classify.add_argument("--remove")
    classify.add_argument("--poly")
    classify.set_defaults(func=cmd_covering)

    verify = sub.add_parser("verify", parents=[common],
                            help="run the desk-corpus verification")
    verify.add_argument("--corpus", choices=("default",), default="default")
    verify.add_argument("--theorem", help=f"one of {sorted(THEOREM_NAMES)}")
    verify.add_argument("--q", type=int, help="restrict the corpus to one q")
    verify.add_argument("--d", type=int, help="restrict the corpus to one d")
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return 3
    except DeepHoleMismatchError as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return 1
    except (ValueError, InconsistentPrefixError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
