"""Command line entry point.

Exit codes: 0 success, 1 counterexample or failed consistency check found,
2 usage or input error, 3 internal assertion failure (the two rigidity
oracles disagreed, or torsion appeared in the proved-stable window).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import BoundExceeded, NsrigError, OracleDisagreement
from .ideals import (
    dual,
    elements_upto,
    end_ring,
    ideal_from,
    nu,
    proper_shift,
    quotient_length,
    shift_iso,
    trace_ideal,
    unit_ideal,
)
from .linkage import link
from .modules import ideal_tensor_torsion
from .rigidity import rigidity_report
from .scan import (
    ScanFilters,
    read_records,
    scan_conjecture,
    verify_theorems,
)
from .semigroup import make_semigroup, multiplicity_profile


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, separators=(",", ":")))
        return
    for key, value in payload.items():
        print(f"{key}: {value}")


def _cmd_ns(args) -> int:
    s = make_semigroup(args.gens)
    payload = {
        "generators": list(s.gens),
        "multiplicity": s.multiplicity,
        "embdim": s.embdim,
        "frobenius": s.frobenius,
        "conductor": s.conductor,
        "genus": s.genus(),
        "gaps": s.gaps(),
        "apery": s.apery(s.multiplicity),
        "symmetric": s.is_symmetric(),
        "complete_intersection": s.is_complete_intersection(),
        "multiplicity_profile": multiplicity_profile(s),
    }
    _emit(payload, args.json)
    return 0


def _cmd_ideal(args) -> int:
    s = make_semigroup(args.ns)
    e = ideal_from(args.gens, s)
    e_dual = dual(e)
    endo = end_ring(e)
    payload = {
        "ideal": list(e.gens),
        "nu": nu(e),
        "dual": list(e_dual.gens),
        "nu_dual": nu(e_dual),
        "trace": list(trace_ideal(e).gens),
        "end_ring": list(endo.gens),
        "end_ring_colength": s.genus() - endo.genus(),
        "principal": e.is_principal(),
        "iso_to_dual_shift": shift_iso(e_dual, e),
        "elements_upto_conductor_plus": elements_upto(e, e.max_gen + s.conductor),
    }
    if e.is_proper():
        payload["colength"] = quotient_length(unit_ideal(s), e)
    _emit(payload, args.json)
    return 0


def _cmd_rigid(args) -> int:
    s = make_semigroup(args.ns)
    e = ideal_from(args.ideal, s)
    rep = e if e.is_proper() else proper_shift(e)
    report = rigidity_report(rep, mode=args.oracle)
    payload = {
        "ideal": list(rep.gens),
        "oracle": args.oracle,
        "rigid": report.rigid,
        "ext1": report.ext1,
        "torsion": report.torsion,
        "nu": report.nu,
        "nu_dual": report.nu_dual,
        "colength": report.colen,
        "end_ring": list(report.end_gens),
        "end_symmetric": report.end_symmetric,
        "conormal_defect": report.defect,
        "delta_mono": report.delta,
    }
    if args.json:
        _emit(payload, True)
    else:
        ext = report.ext1 if report.ext1 is not None else "n/a"
        tor = ">0" if report.torsion else "=0"
        print(f"rigid: {str(report.rigid).lower()} (ext1={ext}, torsion{tor})")
        for key in (
            "ideal",
            "nu",
            "nu_dual",
            "colength",
            "end_ring",
            "end_symmetric",
            "conormal_defect",
            "delta_mono",
        ):
            print(f"{key}: {payload[key]}")
    return 0


def _cmd_tensor(args) -> int:
    s = make_semigroup(args.ns)
    left = ideal_from(args.left, s)
    right = ideal_from(args.right, s)
    diag = ideal_tensor_torsion(left, right)
    if args.json:
        _emit(
            {
                "left": list(left.gens),
                "right": list(right.gens),
                "torsion_length": diag.total,
                "torsion_by_degree": {str(k): v for k, v in sorted(diag.torsion_by_degree.items())},
                "degree_range": [diag.degree_lo, diag.degree_hi],
                "stable_from": diag.stable_from,
                "empty_degrees": diag.empty_degrees,
            },
            True,
        )
    else:
        print(f"torsion length: {diag.total}")
        if diag.torsion_by_degree:
            pretty = ", ".join(f"{d}:{t}" for d, t in sorted(diag.torsion_by_degree.items()))
            print(f"torsion by degree: {pretty}")
        print(f"degrees scanned: [{diag.degree_lo}, {diag.degree_hi}], stable from {diag.stable_from}")
    return 0


def _cmd_link(args) -> int:
    s = make_semigroup(args.ns)
    e = ideal_from(args.ideal, s)
    rep = e if e.in_ring() else proper_shift(e)
    res = link(rep, args.via)
    payload = {
        "ideal": list(rep.gens),
        "via": res.element,
        "linked": list(res.linked.gens),
        "double_link": list(res.double_link.gens),
        "double_link_returns": res.double_link == rep,
        "gorenstein_quotient": res.gorenstein_quotient,
        "end_rings_equal": res.end_equal,
        "dual_iso_shift": res.dual_iso_shift,
        "colength_sum": quotient_length(unit_ideal(s), rep)
        + quotient_length(unit_ideal(s), res.linked)
        if rep.is_proper() and res.linked.is_proper()
        else None,
    }
    _emit(payload, args.json)
    return 0


def _cmd_scan(args) -> int:
    filters = ScanFilters(
        max_genus=args.max_genus,
        symmetric=True if args.symmetric else None,
        ci=True if args.ci else None,
        max_mult=args.max_mult,
        max_embdim=args.max_embdim,
    )

    def progress(done: int, total: int) -> None:
        print(f"scanned {done}/{total} semigroups", file=sys.stderr)

    summary = scan_conjecture(
        filters,
        out_path=args.out,
        resume=args.resume,
        jobs=args.jobs,
        progress=progress if not args.quiet else None,
    )
    payload = {
        "semigroups": summary.semigroups,
        "instances": summary.instances,
        "rigid": summary.rigid_instances,
        "principal": summary.principal_instances,
        "errors": summary.errors,
        "counterexamples": list(summary.counterexamples),
        "out": args.out,
    }
    if args.json:
        _emit(payload, True)
    else:
        for key in ("semigroups", "instances", "rigid", "principal", "errors"):
            print(f"{key}: {payload[key]}")
        if summary.counterexamples:
            print("COUNTEREXAMPLE FOUND:")
            for rec in summary.counterexamples:
                print(json.dumps(rec, separators=(",", ":")))
        else:
            print("counterexamples: none")
    return 0 if summary.ok else 1


def _cmd_verify(args) -> int:
    records = read_records(args.input_path)
    report = verify_theorems(records)
    payload = {
        "records": len(records),
        "theorems": [
            {"name": t.name, "applicable": t.applicable, "failures": list(t.failures)}
            for t in report.theorems
        ],
        "tallies": [
            {"name": t.name, "applicable": t.applicable, "failures": list(t.failures)}
            for t in report.tallies
        ],
        "ok": report.ok,
    }
    if args.json:
        _emit(payload, True)
    else:
        print(f"records: {len(records)}")
        for group, items in (("theorem", report.theorems), ("tally", report.tallies)):
            for t in items:
                status = "ok" if t.ok else f"FAILED ({len(t.failures)} rows)"
                print(f"{group} {t.name}: {t.applicable} applicable, {status}")
                for row in t.failures:
                    print("  " + json.dumps(row, separators=(",", ":")))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsrig",
        description="Rigidity of monomial fractional ideals over numerical semigroup rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ns", help="semigroup report")
    p.add_argument("gens", type=_int_list, help="comma-separated generators, e.g. 4,5,6")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ns)

    p = sub.add_parser("ideal", help="ideal report: dual, trace, endomorphism ring, lengths")
    p.add_argument("gens", type=_int_list, help="comma-separated monomial exponents")
    p.add_argument("--ns", type=_int_list, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ideal)

    p = sub.add_parser("rigid", help="rigidity verdict by one or both oracles")
    p.add_argument("--ns", type=_int_list, required=True)
    p.add_argument("--ideal", type=_int_list, required=True)
    p.add_argument("--oracle", choices=("length", "torsion", "both"), default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rigid)

    p = sub.add_parser("tensor", help="torsion diagnostics of a tensor product of ideals")
    p.add_argument("--ns", type=_int_list, required=True)
    p.add_argument("--left", type=_int_list, required=True)
    p.add_argument("--right", type=_int_list, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("link", help="link an ideal through a monomial inside it")
    p.add_argument("--ns", type=_int_list, required=True)
    p.add_argument("--ideal", type=_int_list, required=True)
    p.add_argument("--via", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_link)

    p = sub.add_parser("scan", help="exhaustive scan over semigroups and ideal classes")
    p.add_argument("--max-genus", type=int, default=8)
    p.add_argument("--symmetric", action="store_true", help="only symmetric (Gorenstein) ambients")
    p.add_argument("--ci", action="store_true", help="only complete intersection ambients")
    p.add_argument("--max-mult", type=int, default=None)
    p.add_argument("--max-embdim", type=int, default=None)
    p.add_argument("--out", required=True, help="JSON Lines output path")
    p.add_argument("--resume", action="store_true", help="skip pairs already in the output file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--quiet", action="store_true", help="suppress stderr progress")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="check the theorem suite against scan records")
    p.add_argument("--in", dest="input_path", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OracleDisagreement, BoundExceeded) as exc:
        print(f"internal assertion failure: {exc}", file=sys.stderr)
        return 3
    except NsrigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
