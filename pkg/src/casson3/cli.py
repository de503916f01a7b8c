"""Command-line interface: single invariants, family fits, SU(2) counts,
and the embedded verification harness.

Exit codes (stable, for scripting):
    0  success
    2  invalid input (non-coprime or non-positive multiplicities, bad flags)
    3  tight-constraint diagnostic (no weight can be assigned)
    4  family samples are not quadratic
    5  verification mismatch
    6  expected-values file failed its checksum
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import engine, family, tables
from .arith import NonPositiveError, NotCoprimeError, make_surgery_data
from .engine import DiagnosticTightError
from .family import FamilySpec, NotQuadraticError
from .fusion import SliceKind
from .su2 import count_pointed_spheres, count_type_Ib

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_TIGHT = 3
EXIT_NOT_QUADRATIC = 4
EXIT_VERIFY_MISMATCH = 5
EXIT_CHECKSUM = 6

SCHEMA_VERSION = 1


def _result_doc(res: engine.CassonResult, breakdown: bool) -> dict:
    d = res.surgery
    doc = {
        "schema": SCHEMA_VERSION,
        "p": d.p, "q": d.q, "r": d.r, "a": d.a, "c": d.c,
        "tau": res.tau,
        "totals": dict(res.totals),
        "census": {"N_I": res.census[0], "N_II": res.census[1]},
    }
    if breakdown:
        doc["slices"] = [
            {
                "ell": sl.ell,
                "kind": sl.kind.value,
                "a": [sl.a.k1, sl.a.k2, sl.a.k3], "a_denom": sl.a.denom,
                "b": [sl.b.k1, sl.b.k2, sl.b.k3], "b_denom": sl.b.denom,
                "Ia": t.n_Ia, "IIa": t.n_IIa, "IIb": t.n_IIb,
                "excluded": t.n_excluded,
            }
            for sl, t in res.slices
        ]
    return doc


def _print_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _tau_text(doc: dict) -> str:
    lines = [
        f"Sigma({doc['p']},{doc['q']},{doc['r']}): tau_SU(3) = {doc['tau']}",
        f"  framing: a={doc['a']} c={doc['c']}  "
        f"(a*r*(p+q) + c*p*q = 1)",
        "  totals: Ia={Ia} IIa={IIa} IIb={IIb} excluded={excluded}".format(**doc["totals"]),
        f"  census: N_I={doc['census']['N_I']} N_II={doc['census']['N_II']}",
    ]
    for sl in doc.get("slices", ()):
        lines.append(
            "  slice ell={ell} kind={kind} a={a}/{a_denom} b={b}/{b_denom}: "
            "Ia={Ia} IIa={IIa} IIb={IIb} excluded={excluded}".format(**sl)
        )
    return "\n".join(lines)


def _tau_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "slices" in doc:
        w.writerow(["ell", "kind", "a1", "a2", "a3", "a_denom",
                    "b1", "b2", "b3", "b_denom", "Ia", "IIa", "IIb", "excluded"])
        for sl in doc["slices"]:
            w.writerow([sl["ell"], sl["kind"], *sl["a"], sl["a_denom"],
                        *sl["b"], sl["b_denom"], sl["Ia"], sl["IIa"],
                        sl["IIb"], sl["excluded"]])
    else:
        w.writerow(["p", "q", "r", "a", "c", "tau",
                    "Ia", "IIa", "IIb", "excluded", "N_I", "N_II"])
        t = doc["totals"]
        w.writerow([doc["p"], doc["q"], doc["r"], doc["a"], doc["c"], doc["tau"],
                    t["Ia"], t["IIa"], t["IIb"], t["excluded"],
                    doc["census"]["N_I"], doc["census"]["N_II"]])
    return buf.getvalue().rstrip("\n")


def cmd_tau(args) -> int:
    res = engine.tau(args.p, args.q, args.r, threads=args.threads)
    doc = _result_doc(res, args.breakdown)
    if args.format == "json":
        _print_json(doc)
    elif args.format == "csv":
        print(_tau_csv(doc))
    else:
        print(_tau_text(doc))
    return EXIT_OK


def cmd_family(args) -> int:
    if args.n_max < 3:
        print("family: need --n-max >= 3 to fit a quadratic", file=sys.stderr)
        return EXIT_BAD_INPUT
    spec = FamilySpec(args.p, args.q, args.m)
    samples = family.family_tau(spec, args.n_max, threads=args.threads)
    fit = family.fit_quadratic(samples)
    doc = {
        "schema": SCHEMA_VERSION,
        "p": spec.p, "q": spec.q, "m": spec.m, "n_max": args.n_max,
        "samples": [[n, t] for n, t in samples],
        "fit": {"A": str(fit.A), "B": str(fit.B), "C": str(fit.C)},
    }
    if args.format == "json":
        _print_json(doc)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "r", "tau"])
        for n, t in samples:
            w.writerow([n, spec.r(n), t])
        print(buf.getvalue().rstrip("\n"))
    else:
        print(f"family Sigma({spec.p},{spec.q},{spec.p * spec.q}n+{spec.m}):")
        for n, t in samples:
            print(f"  n={n} r={spec.r(n)} tau={t}")
        print(f"  exact fit: tau(n) = {fit.A}*n^2 + {fit.B}*n + {fit.C}")
    return EXIT_OK


def cmd_su2(args) -> int:
    data = make_surgery_data(args.p, args.q, args.r)
    doc = {
        "schema": SCHEMA_VERSION,
        "p": args.p, "q": args.q, "r": args.r,
        "pointed_spheres": count_pointed_spheres(data),
        "type_Ib": count_type_Ib(data),
    }
    if args.format == "json":
        _print_json(doc)
    elif args.format == "csv":
        print("p,q,r,pointed_spheres,type_Ib")
        print(f"{args.p},{args.q},{args.r},{doc['pointed_spheres']},{doc['type_Ib']}")
    else:
        print(f"Sigma({args.p},{args.q},{args.r}) SU(2) census:")
        print(f"  pointed 2-spheres (h -> I):  {doc['pointed_spheres']}")
        print(f"  isolated Ib classes (h -> -I): {doc['type_Ib']}")
    return EXIT_OK


def _verify_families(rows, threads, failures):
    for row in rows:
        spec = FamilySpec(row.p, row.q, row.m)
        fit = family.fit_quadratic(family.family_tau(spec, 3, threads=threads))
        got = (fit.A, fit.B, fit.C)
        want = (row.A, row.B, row.C)
        _check(failures, f"family ({row.p},{row.q},m=+{row.m})", got, want)

        minus = [(n, engine.tau(row.p, row.q, row.p * row.q * n - row.m,
                                threads=threads).tau) for n in (1, 2, 3)]
        fit = family.fit_quadratic(minus)
        got = (fit.A, fit.B, fit.C)
        want = (row.A, -row.B, row.C)
        _check(failures, f"family ({row.p},{row.q},m=-{row.m})", got, want)


def _verify_surgeries(rows, threads, failures):
    for row in rows:
        fit = family.fit_quadratic(
            family.torus_knot_surgery_samples(row.p, row.q, 3, threads=threads))
        _check(failures, f"surgery K({row.p},{row.q}) fit",
               (fit.A, fit.B, fit.C), (row.A, -row.B, 0))
        _check(failures, f"surgery K({row.p},{row.q}) quadratic-growth formula",
               family.conway_leading_coeff(row.p, row.q), row.A)
        _check(failures, f"surgery K({row.p},{row.q}) linear-coefficient formula",
               family.b_coefficient_formula(row.p, row.q), row.B)


def _verify_root_counts(failures):
    from .alcove import Multiplicity, classify_multiplicity, count_root_classes, root_classes
    for p in range(1, 13):
        for e in (0, 1, 2):
            pts = root_classes(p, e, 1)  # coordinate residue 1*e
            got = (
                sum(classify_multiplicity(x) is Multiplicity.DISTINCT for x in pts),
                sum(classify_multiplicity(x) is Multiplicity.DOUBLE for x in pts),
            )
            _check(failures, f"root classes p={p} e={e}", got, count_root_classes(p, e))


def _verify_census(failures):
    import math
    for p in range(3, 12, 2):
        for q in range(p + 2, 12, 2):
            if math.gcd(p, q) != 1:
                continue
            got = engine.component_census(p, q, 1)
            _check(failures, f"census ({p},{q})", got, engine.census_closed_form(p, q))


def _verify_iib_vanishing(threads, failures):
    import math
    for q in range(3, 12, 2):
        for r in range(q + 2, 12, 2):
            if math.gcd(q, r) != 1:
                continue
            res = engine.tau(2, q, r, threads=threads)
            _check(failures, f"IIb vanishing (2,{q},{r})", res.totals["IIb"], 0)


def _check(failures, label, got, want):
    if got == want:
        print(f"PASS {label}: {got}")
    else:
        print(f"FAIL {label}: got {got}, expected {want}")
        failures.append((label, got, want))


def cmd_verify(args) -> int:
    try:
        families, surgeries = tables.load_expected()
    except tables.ChecksumError as err:
        print(f"checksum failure: {err}", file=sys.stderr)
        return EXIT_CHECKSUM
    if not args.full:
        surgeries = [row for row in surgeries if row.q <= 11]

    failures: list = []
    _verify_families(families, args.threads, failures)
    _verify_surgeries(surgeries, args.threads, failures)
    _verify_root_counts(failures)
    _verify_census(failures)
    _verify_iib_vanishing(args.threads, failures)

    if failures:
        print(f"\n{len(failures)} mismatch(es):")
        for label, got, want in failures:
            print(f"  {label}: got {got}, expected {want}")
        return EXIT_VERIFY_MISMATCH
    print("\nall embedded expected values reproduced")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casson3",
        description="Exact census of the integer valued SU(3) Casson "
                    "invariant of Brieskorn spheres Sigma(p,q,r).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, formats=True):
        if formats:
            sp.add_argument("--format", choices=("text", "json", "csv"),
                            default="text")
        sp.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: CASSON3_THREADS or 1)")

    sp = sub.add_parser("tau", help="invariant of a single Sigma(p,q,r)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--breakdown", action="store_true",
                    help="include per-slice tallies")
    add_common(sp)
    sp.set_defaults(func=cmd_tau)

    sp = sub.add_parser("family", help="sweep Sigma(p,q,pq*n+m) and fit")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    add_common(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("su2", help="SU(2) representation counts")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    add_common(sp)
    sp.set_defaults(func=cmd_su2)

    sp = sub.add_parser("verify",
                        help="recompute every embedded expected value")
    sp.add_argument("--full", action="store_true",
                    help="all torus-knot rows, not just q <= 11")
    add_common(sp, formats=False)
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotCoprimeError, NonPositiveError, ValueError) as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except NotQuadraticError as err:
        print(f"not quadratic: {err}", file=sys.stderr)
        return EXIT_NOT_QUADRATIC
    except DiagnosticTightError as err:
        print(f"tight-constraint diagnostic: {err}", file=sys.stderr)
        return EXIT_TIGHT


if __name__ == "__main__":
    sys.exit(main())
