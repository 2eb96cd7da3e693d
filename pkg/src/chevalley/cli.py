"""Command-line front-end.

Every subcommand prints one envelope: schemaVersion, command, inputs,
results, provenance.  Weights on the command line are comma-separated
fundamental-weight coordinates; root-lattice targets are comma-separated
simple-root coordinates.  Exit codes: 0 success, 2 invalid input,
3 resource cap exceeded.
"""

import argparse
import json
import os
import sys

from .rootsystem import RootSystem, RootSystemError
from .weylgroup import WeylGroup, WeylCapError, decompose_pw, is_prime
from .kostant import PartitionTable, weight_multiplicity
from .regions import (REGION_KINDS, enumerate_region, in_region, is_linked,
                      res_iso_threshold, steinberg_digits, is_restricted)
from .cohomology import CohomologyCalculator, published_bound

SCHEMA_VERSION = 1
CACHE_ENV = "CHEVALLEY_CACHE_DIR"

LINKAGE_DEFINITION = "dot-action orbit of the p-dilated affine Weyl group"

# built-in reproduction matrix: published first nontrivial classes at r = 1
REPRODUCE_CASES = (
    ("C", 2, 5),
    ("C", 3, 7),
    ("A", 2, 5),
    ("A", 2, 7),
    ("A", 3, 5),
    ("A", 4, 7),
)


def _parse_vec(text, rank, what):
    parts = text.split(",")
    if len(parts) != rank:
        raise RootSystemError(
            f"{what} needs {rank} comma-separated integers, got {text!r}")
    try:
        return tuple(int(x) for x in parts)
    except ValueError as exc:
        raise RootSystemError(f"bad {what} {text!r}") from exc


def _require_prime(p):
    if not is_prime(p):
        raise RootSystemError(f"{p} is not prime")
    return p


def _emit(envelope, fmt, stream):
    if fmt == "json":
        stream.write(json.dumps(envelope, sort_keys=True, indent=2))
        stream.write("\n")
        return
    rows = _flatten_rows(envelope["results"])
    if fmt == "csv":
        stream.write("key,value\n")
        for k, v in rows:
            stream.write(f"{k},{v}\n")
        return
    width = max((len(k) for k, _ in rows), default=0)
    stream.write(f"# {envelope['command']}\n")
    for k, v in rows:
        stream.write(f"{k.ljust(width)}  {v}\n")


def _flatten_rows(obj, prefix=""):
    rows = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            rows.extend(_flatten_rows(obj[k], f"{prefix}{k}." if prefix else f"{k}."))
        return [(k.rstrip("."), v) for k, v in rows]
    if isinstance(obj, list):
        for idx, item in enumerate(obj):
            rows.extend(_flatten_rows(item, f"{prefix}{idx}."))
        return [(k.rstrip("."), v) for k, v in rows]
    return [(prefix.rstrip("."), obj)]


def _envelope(command, inputs, results, anchors, ceiling=0):
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "provenance": {
            "paperAnchors": sorted(anchors),
            "linkageDefinition": LINKAGE_DEFINITION,
            "searchCeiling": ceiling,
        },
    }


def _report_payload(report):
    return {
        "family": report.family,
        "rank": report.rank,
        "p": report.p,
        "r": report.r,
        "m": report.m,
        "witnesses": [{"weight": list(lam), "dim": d}
                      for lam, d in report.witnesses],
        "searchCeiling": report.search_ceiling,
        "uniquenessAtM": report.uniqueness_at_m,
        "linkageHypothesisVerified": report.linkage_hypothesis_verified,
        "exactDimension": report.exact_dimension,
        "dimUpperAtM": report.dim_upper_at_m,
        "publishedBound": (None if report.published is None
                           else {"degree": report.published[0],
                                 "dim": report.published[1]}),
        "matchesPublished": report.matches_published,
    }


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chevalley",
        description="Exact root-system combinatorics and cohomology "
                    "vanishing-range calculator for finite Chevalley groups.")
    parser.add_argument("--format", choices=("json", "csv", "table"),
                        default="json")
    parser.add_argument("--weyl-cap", type=int, default=2_000_000,
                        help="refuse Weyl groups larger than this")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--family", required=True, choices=list("ABCDGF"))
        sp.add_argument("--rank", required=True, type=int)

    sp = sub.add_parser("rootinfo", help="root-system summary")
    common(sp)

    sp = sub.add_parser("weyldim", help="dimension of the induced module")
    common(sp)
    sp.add_argument("--weight", required=True)

    sp = sub.add_parser("kostant", help="partition counts")
    common(sp)
    sp.add_argument("--target", required=True,
                    help="simple-root coordinates of the target")
    sp.add_argument("--parts", type=int, default=None,
                    help="exact number of parts (omit for the total)")

    sp = sub.add_parser("multiplicity", help="weight multiplicity")
    common(sp)
    sp.add_argument("--highest", required=True)
    sp.add_argument("--weight", required=True)

    sp = sub.add_parser("regions", help="region membership or enumeration")
    common(sp)
    sp.add_argument("--kind", required=True, choices=REGION_KINDS)
    sp.add_argument("--prime", type=int, default=None)
    sp.add_argument("--power", type=int, default=None, help="exponent r")
    sp.add_argument("--weight", default=None,
                    help="test this weight instead of enumerating")

    sp = sub.add_parser("linked", help="p-dilated linkage test")
    common(sp)
    sp.add_argument("--prime", required=True, type=int)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--other", required=True)

    sp = sub.add_parser("ext-dim", help="exact tensor-cohomology dimension")
    common(sp)
    sp.add_argument("--prime", required=True, type=int)
    sp.add_argument("--degree", required=True, type=int)
    sp.add_argument("--weight", required=True)

    sp = sub.add_parser("upper-bound", help="cohomology upper bounds")
    common(sp)
    sp.add_argument("--prime", required=True, type=int)
    sp.add_argument("--min-degree", type=int, default=1)
    sp.add_argument("--max-degree", required=True, type=int)

    sp = sub.add_parser("vanishing", help="first nontrivial cohomology")
    common(sp)
    sp.add_argument("--prime", required=True, type=int)
    sp.add_argument("--max-degree", type=int, default=None)

    sp = sub.add_parser("reproduce-ab",
                        help="reproduce the published first classes")
    sp.add_argument("--cases", default=None,
                    help="comma-separated family:rank:prime triples to run "
                         "(default: the full built-in matrix)")
    return parser


def _make_table(rs):
    cache_dir = os.environ.get(CACHE_ENV)
    return PartitionTable(rs, cache_dir=cache_dir)


def _run(args, stream):
    cmd = args.command
    if cmd == "reproduce-ab":
        return _run_reproduce(args, stream)

    rs = RootSystem(args.family, args.rank)
    inputs = {"family": args.family, "rank": args.rank}

    if cmd == "rootinfo":
        results = {
            "cartan": [list(row) for row in rs.cartan],
            "symmetrizer": list(rs.symmetrizer),
            "numPositiveRoots": len(rs.positive_roots),
            "positiveRoots": [list(r) for r in rs.positive_roots],
            "coxeterNumber": rs.coxeter_number,
            "highestRoot": list(rs.highest_root),
            "highestShortRoot": list(rs.highest_short_root),
            "weylOrder": WeylGroup(rs, cap=args.weyl_cap).order,
        }
        _emit(_envelope(cmd, inputs, results, ["conventions"]), args.format, stream)
        return 0

    if cmd == "weyldim":
        lam = _parse_vec(args.weight, rs.rank, "--weight")
        inputs["weight"] = list(lam)
        results = {"dimension": str(rs.weyl_dimension(lam))}
        _emit(_envelope(cmd, inputs, results, ["dimension-formula"]),
              args.format, stream)
        return 0

    if cmd == "kostant":
        nu = _parse_vec(args.target, rs.rank, "--target")
        inputs["target"] = list(nu)
        table = _make_table(rs)
        if args.parts is None:
            results = {"total": str(table.total(nu))}
        else:
            inputs["parts"] = args.parts
            results = {"count": str(table.count(nu, args.parts))}
        table.save_cache()
        _emit(_envelope(cmd, inputs, results, ["partition-function"]),
              args.format, stream)
        return 0

    if cmd == "multiplicity":
        lam = _parse_vec(args.highest, rs.rank, "--highest")
        mu = _parse_vec(args.weight, rs.rank, "--weight")
        inputs.update(highest=list(lam), weight=list(mu))
        group = WeylGroup(rs, cap=args.weyl_cap)
        results = {"multiplicity": str(weight_multiplicity(
            group, lam, mu, table=_make_table(rs)))}
        _emit(_envelope(cmd, inputs, results, ["multiplicity-oracle"]),
              args.format, stream)
        return 0

    if cmd == "regions":
        inputs.update(kind=args.kind, prime=args.prime, power=args.power)
        if args.prime is not None:
            _require_prime(args.prime)
        if args.weight is not None:
            lam = _parse_vec(args.weight, rs.rank, "--weight")
            inputs["weight"] = list(lam)
            results = {"member": in_region(rs, lam, args.kind,
                                           p=args.prime, r=args.power)}
        else:
            weights = enumerate_region(rs, args.kind,
                                       p=args.prime, r=args.power)
            results = {"count": len(weights),
                       "weights": [list(w) for w in weights]}
        _emit(_envelope(cmd, inputs, results, ["weight-regions"]),
              args.format, stream)
        return 0

    if cmd == "linked":
        _require_prime(args.prime)
        lam = _parse_vec(args.weight, rs.rank, "--weight")
        nu = _parse_vec(args.other, rs.rank, "--other")
        inputs.update(prime=args.prime, weight=list(lam), other=list(nu))
        group = WeylGroup(rs, cap=args.weyl_cap)
        results = {"linked": is_linked(group, lam, nu, args.prime)}
        _emit(_envelope(cmd, inputs, results, ["linkage"]), args.format, stream)
        return 0

    if cmd == "ext-dim":
        _require_prime(args.prime)
        lam = _parse_vec(args.weight, rs.rank, "--weight")
        inputs.update(prime=args.prime, degree=args.degree, weight=list(lam))
        calc = CohomologyCalculator(rs, args.prime, cap=args.weyl_cap,
                                    table=_make_table(rs))
        results = {"dimension": str(calc.ext_tensor_dim(args.degree, lam))}
        _emit(_envelope(cmd, inputs, results, ["tensor-dimension-formula"]),
              args.format, stream)
        return 0

    if cmd == "upper-bound":
        _require_prime(args.prime)
        inputs.update(prime=args.prime, minDegree=args.min_degree,
                      maxDegree=args.max_degree)
        calc = CohomologyCalculator(rs, args.prime, cap=args.weyl_cap,
                                    table=_make_table(rs))
        bounds = [{"degree": i, "upperBound": str(calc.upper_bound_dim(i))}
                  for i in range(args.min_degree, args.max_degree + 1)]
        _emit(_envelope(cmd, inputs, {"bounds": bounds}, ["upper-bound"],
                        ceiling=args.max_degree), args.format, stream)
        return 0

    if cmd == "vanishing":
        _require_prime(args.prime)
        inputs["prime"] = args.prime
        calc = CohomologyCalculator(rs, args.prime, cap=args.weyl_cap,
                                    table=_make_table(rs))
        report = calc.first_nontrivial(max_degree=args.max_degree)
        inputs["maxDegree"] = report.search_ceiling
        _emit(_envelope(cmd, inputs, _report_payload(report),
                        ["first-nontrivial-class"],
                        ceiling=report.search_ceiling), args.format, stream)
        return 0 if report.m is not None else 3

    raise RootSystemError(f"unknown command {cmd!r}")


def _run_reproduce(args, stream):
    if args.cases is None:
        cases = REPRODUCE_CASES
    else:
        cases = []
        for chunk in args.cases.split(","):
            fam, rank, p = chunk.split(":")
            cases.append((fam, int(rank), int(p)))
    rows = []
    all_match = True
    for fam, rank, p in cases:
        rs = RootSystem(fam, rank)
        calc = CohomologyCalculator(rs, p, cap=args.weyl_cap)
        report = calc.first_nontrivial()
        match = bool(report.matches_published)
        all_match = all_match and match
        rows.append({
            "family": fam, "rank": rank, "p": p,
            "computed": {"m": report.m,
                         "dim": (report.exact_dimension
                                 if report.exact_dimension is not None
                                 else report.dim_upper_at_m),
                         "exact": report.exact_dimension is not None},
            "published": (None if report.published is None else
                          {"degree": report.published[0],
                           "dim": report.published[1]}),
            "match": match,
        })
    envelope = _envelope("reproduce-ab",
                         {"cases": [f"{f}:{n}:{p}" for f, n, p in cases]},
                         {"table": rows, "allMatch": all_match},
                         ["published-first-classes"])
    _emit(envelope, args.format, stream)
    return 0 if all_match else 1


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return _run(args, sys.stdout)
    except WeylCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except RootSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
