"""Command-line front end.

Exit codes: 0 = success, 1 = a checked property is false / a search came up
empty, 2 = usage or input error, 3 = a budget or size guard was hit.
Stdout carries exactly one canonical JSON document on exits 0 and 1.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import core, identities, io, quotients
from .errors import (
    BudgetExceeded,
    LatLabError,
    SearchBudgetExceeded,
    SizeGuardExceeded,
)
from .gluing import GluingSpec, glue
from .plotting import draw_hasse
from .representations import search_representation, verify_representation
from .specs import BadSpec, build_from_spec

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

KNOWN_PROPS = ("modular", "distributive", "arguesian", "simple",
               "length", "width")


def _emit(payload):
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _load(path):
    return io.load_lattice(path)


def cmd_build(args):
    lat = build_from_spec(args.spec)
    doc = io.lattice_to_json(lat)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
    sys.stdout.write(doc)
    return EXIT_OK


def _run_props(lat, props, seed):
    results = {}
    all_hold = True
    for prop in props:
        if prop == "modular":
            rep = identities.is_modular(lat)
        elif prop == "distributive":
            rep = identities.is_distributive(lat)
        elif prop.startswith("ndist:"):
            rep = identities.is_n_distributive(lat, int(prop.split(":")[1]))
        elif prop == "arguesian":
            rep = identities.is_arguesian(lat, seed=seed)
            if not rep.exhaustive:
                print(f"arguesian: no counterexample found in "
                      f"{rep.evaluations} samples (not a decision)",
                      file=sys.stderr)
        elif prop == "simple":
            val = identities.is_simple(lat)
            results[prop] = val
            all_hold &= val
            continue
        elif prop == "length":
            results[prop] = core.length(lat)
            continue
        elif prop == "width":
            results[prop] = core.width(lat)
            continue
        else:
            raise BadSpec(f"unknown property {prop!r}")
        results[prop] = rep.to_json()
        all_hold &= rep.holds
    return results, all_hold


def cmd_check(args):
    lat = _load(args.file)
    props = [p for p in args.props.split(",") if p]
    results, all_hold = _run_props(lat, props, args.seed)
    _emit(results)
    return EXIT_OK if all_hold else EXIT_FALSE


def cmd_glue(args):
    lower = _load(args.lower)
    upper = _load(args.upper)
    try:
        iso = tuple(tuple(int(v) for v in pair.split(":"))
                    for pair in args.iso.split(","))
    except ValueError as exc:
        raise BadSpec(f"bad iso spec {args.iso!r}") from exc
    res = glue(GluingSpec(lower, args.filter_bottom, upper, args.ideal_top, iso))
    doc = io.lattice_to_json(res.lattice)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
    sys.stdout.write(doc)
    return EXIT_OK


def _parse_quotient(lat, text):
    try:
        top, bottom = (int(v) for v in text.split("/"))
    except ValueError as exc:
        raise BadSpec(f"quotient must look like top/bottom, got {text!r}") from exc
    q = quotients.Quotient(lat, top, bottom)
    if not quotients.is_prime(q):
        raise BadSpec(f"{text} is not a prime quotient")
    return q


def cmd_distance(args):
    lat = _load(args.file)
    q = _parse_quotient(lat, args.src)
    r = _parse_quotient(lat, args.dst)
    if not identities.is_modular(lat).holds:
        print("warning: lattice is not modular; the prime-quotient graph "
              "only bounds projectivity from below", file=sys.stderr)
    dist, path = quotients.projectivity_distance(lat, q, r, with_path=True)
    if dist == quotients.UNREACHABLE:
        _emit({"distance": "unreachable", "path": None})
        return EXIT_FALSE
    edges = [[path[i].label(), path[i + 1].label()] for i in range(len(path) - 1)]
    _emit({"distance": dist, "path": edges})
    return EXIT_OK


def cmd_embed(args):
    A = _load(args.small)
    B = _load(args.big)
    mapping = core.find_embedding(A, B)
    if mapping is None:
        _emit({"embedding": None})
        return EXIT_FALSE
    _emit({"embedding": {str(i): m for i, m in enumerate(mapping)}})
    return EXIT_OK


def cmd_rep_verify(args):
    lat = _load(args.lattice)
    rep = io.load_representation(args.representation, lat)
    report = verify_representation(rep)
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_rep_search(args):
    lat = _load(args.lattice)
    rep = search_representation(lat, args.max_points, args.n,
                                normalize=args.normalize)
    if rep is None:
        _emit({"representation": None})
        return EXIT_FALSE
    sys.stdout.write(io.representation_to_json(rep))
    return EXIT_OK


def cmd_export_dot(args):
    lat = _load(args.file)
    doc = io.to_dot(lat)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
    sys.stdout.write(doc)
    return EXIT_OK


def cmd_report(args):
    lat = _load(args.file)
    props = [p for p in args.props.split(",") if p]
    results, all_hold = _run_props(lat, props, args.seed)
    os.makedirs(args.outdir, exist_ok=True)
    stem = os.path.join(args.outdir, lat.name.replace(":", "_"))
    csv_path = stem + "_report.csv"
    fig_path = stem + "_hasse.png"
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["property", "value"])
        writer.writerow(["size", lat.size])
        for prop in props:
            val = results[prop]
            if isinstance(val, dict):
                writer.writerow([prop, val["holds"]])
            else:
                writer.writerow([prop, val])
    draw_hasse(lat, fig_path)
    _emit({"csv": csv_path, "figure": fig_path, "properties": results})
    return EXIT_OK if all_hold else EXIT_FALSE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="latlab",
        description="Finite lattice computations: builders, gluing, "
                    "identities, projectivity, equivalence representations.")
    parser.add_argument("--workers", type=int, default=1,
                        help="scheduling hint for scans/searches; results "
                             "are identical for every value")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a named lattice")
    p.add_argument("spec")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="check properties of a lattice file")
    p.add_argument("file")
    p.add_argument("--props", required=True,
                   help="comma list: modular,distributive,ndist:<n>,"
                        "arguesian,simple,length,width")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("glue", help="Hall-Dilworth gluing of two lattice files")
    p.add_argument("lower")
    p.add_argument("upper")
    p.add_argument("--filter-bottom", type=int, required=True)
    p.add_argument("--ideal-top", type=int, required=True)
    p.add_argument("--iso", required=True, help="i:j[,i:j...]")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("distance", help="projectivity distance between prime quotients")
    p.add_argument("file")
    p.add_argument("--from", dest="src", required=True, metavar="a/b")
    p.add_argument("--to", dest="dst", required=True, metavar="c/d")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("embed", help="search for an embedding of one lattice into another")
    p.add_argument("small")
    p.add_argument("big")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("rep", help="equivalence-relation representations")
    rsub = p.add_subparsers(dest="rep_command", required=True)
    pv = rsub.add_parser("verify")
    pv.add_argument("lattice")
    pv.add_argument("representation")
    pv.set_defaults(func=cmd_rep_verify)
    ps = rsub.add_parser("search")
    ps.add_argument("lattice")
    ps.add_argument("--max-points", type=int, required=True)
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--normalize", action="store_true")
    ps.set_defaults(func=cmd_rep_search)

    p = sub.add_parser("export-dot", help="emit the Hasse diagram as DOT")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("report", help="CSV property report plus a Hasse figure")
    p.add_argument("file")
    p.add_argument("-o", "--outdir", default=".")
    p.add_argument("--props", default="modular,distributive,simple,length,width")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SizeGuardExceeded, BudgetExceeded, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (BadSpec, LatLabError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
