"""Single command-line entry point.

Subcommands: construct, check, lemma, audit, search, validate.  Output is
compact JSON by default (stable key order, byte-identical across runs for
identical inputs); exit code 0 iff all requested checks pass, 1 on a failed
check, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import construct as cons
from . import core, detect, feasibility, search
from .algebra import (verify_conjugation, verify_gamma_inverse,
                      verify_pentagon_identity)
from .errors import F5LabError


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True,
                                    separators=(",", ":")) + "\n")
    else:
        for key in sorted(report):
            sys.stdout.write(f"{key}: {report[key]}\n")


def _load_three_graph(path: str) -> core.ThreeGraph:
    text = Path(path).read_text()
    if path.endswith(".json"):
        return core.from_json_obj(json.loads(text))
    return core.read_3g(text)


def _int_list(s: str) -> list[int]:
    return [int(t) for t in s.split(",") if t != ""]


def _cmd_construct(args) -> int:
    chosen = [k for k in ("turan", "wheel", "gamma", "witness", "blowup_file")
              if getattr(args, k) is not None]
    if len(chosen) != 1:
        raise F5LabError("construct needs exactly one of "
                         "--turan/--wheel/--gamma/--witness/--blowup-file")
    kind = chosen[0]
    graph_obj = None
    if kind == "turan":
        h = cons.balanced_turan(args.turan)
        name = f"turan-{args.turan}"
    elif kind == "wheel":
        vals = _int_list(args.wheel)
        if len(vals) != 6:
            raise F5LabError("--wheel needs x,y1,y2,y3,y4,y5")
        h = cons.wheel_blowup(vals[0], vals[1:])
        name = "wheel-" + args.wheel
    elif kind == "witness":
        vals = _int_list(args.witness)
        if len(vals) == 1:
            h = cons.tightness_witness(vals[0])
        elif len(vals) == 7:
            h = cons.tightness_witness(vals[0], vals[1:])
        else:
            raise F5LabError("--witness needs n or n,y1,y2,y3,z1,z2,z3")
        name = "witness-" + args.witness
    elif kind == "blowup_file":
        base = _load_three_graph(args.blowup_file)
        h = cons.uniform_blowup(base, args.factor)
        name = f"blowup-{args.factor}"
    else:  # gamma
        g = cons.gamma_graph(args.gamma)
        name = f"gamma-{args.gamma}"
        degs = g.degrees()
        report = {"construction": name, "n": g.n, "m": len(g.edges),
                  "delta": min(degs) if degs else 0,
                  "Delta": max(degs) if degs else 0}
        payload = core.write_g(g) if args.emit == "3g" else \
            json.dumps(core.to_json_obj(g), sort_keys=True, separators=(",", ":"))
        if args.out:
            Path(args.out).write_text(payload)
            report["emitted"] = args.out
        else:
            report["graph"] = core.to_json_obj(g)
        _emit(report, args.format)
        return 0

    prof = core.degree_profile(h)
    report = {"construction": name, "n": h.n, "m": len(h.edges),
              "delta": prof.delta, "Delta": prof.Delta}
    payload = core.write_3g(h) if args.emit == "3g" else \
        json.dumps(core.to_json_obj(h), sort_keys=True, separators=(",", ":"))
    if args.out:
        Path(args.out).write_text(payload)
        report["emitted"] = args.out
    else:
        report["graph"] = core.to_json_obj(h)
    _emit(report, args.format)
    return 0


def _cmd_check(args) -> int:
    h = _load_three_graph(args.file)
    prof = core.degree_profile(h)
    report: dict = {"file": args.file, "n": h.n, "m": len(h.edges),
                    "delta": prof.delta, "Delta": prof.Delta}
    ok = True
    if args.f5:
        w = detect.find_F5(h)
        report["f5_free"] = w is None
        if w is not None:
            report["f5_witness"] = w.to_obj()
        ok &= w is None
    if args.k4minus:
        w = detect.find_K4_3minus(h)
        report["k4minus_free"] = w is None
        if w is not None:
            report["k4minus_witness"] = w.to_obj()
        ok &= w is None
    if args.k4shadow:
        w = detect.find_k4_in_shadow(h)
        report["shadow_k4_free"] = w is None
        if w is not None:
            report["shadow_k4_witness"] = w.to_obj()
        ok &= w is None
    if args.cancellative:
        c = detect.is_cancellative(h)
        report["cancellative"] = c
        ok &= c
    if args.three_partite:
        w = core.three_partition(h)
        report["three_partite"] = w is not None
        if w is not None:
            report["partition"] = [list(p) for p in w.parts]
        ok &= w is not None
    if args.facts:
        fr = detect.audit_link_facts(h)
        report["facts"] = fr.to_obj()
        ok &= fr.holds
    if args.alpha:
        report["alpha"] = core.independence_number(h)
    if args.theorem:
        v = search.check_main_theorem(h)
        report["theorem"] = v.to_obj()
        ok &= v.verdict != "COUNTEREXAMPLE"
    _emit(report, args.format)
    return 0 if ok else 1


def _cmd_lemma(args) -> int:
    name = args.name
    if name == "gamma-inverse":
        rep = verify_gamma_inverse(args.d)
    elif name == "conjugation":
        rep = verify_conjugation(args.d)
    elif name == "pentagon":
        rep = verify_pentagon_identity()
    elif name == "opt1":
        rep = feasibility.opt1_certificate(args.resolution,
                                           threshold=Fraction(args.threshold),
                                           threads=args.threads)
    elif name == "opt2":
        rep = feasibility.opt2_certificate(args.d, args.resolution,
                                           edge_threshold=Fraction(args.threshold))
    elif name == "aes-params":
        rep = feasibility.aes_parameter_check(*feasibility.aes_section6_point())
    else:
        raise F5LabError(f"unknown lemma {name!r}")
    _emit(rep.to_obj(), args.format)
    return 0 if rep.passed else 1


def _cmd_audit(args) -> int:
    reports = [feasibility.numeric_claim_audit()]
    if args.all:
        reports.append(feasibility.aes_parameter_check(*feasibility.aes_section6_point()))
    combined = {"reports": [r.to_obj() for r in reports],
                "pass": all(r.passed for r in reports)}
    _emit(combined, args.format)
    return 0 if combined["pass"] else 1


def _cmd_search(args) -> int:
    forbid = frozenset(
        {"f5": "F5", "k4minus": "K4minus", "k4shadow": "K4shadow"}[t.strip().lower()]
        for t in args.forbid.split(",") if t.strip())
    spec = search.SearchSpec(n=args.n, forbidden=forbid, mode=args.mode,
                             require_non_3partite=args.non_3partite,
                             budget=args.budget)
    res = search.run_search(spec)
    report = res.to_obj()
    report["spec"] = {"n": args.n, "forbid": sorted(forbid), "mode": args.mode,
                      "non_3partite": args.non_3partite}
    _emit(report, args.format)
    return 0 if res.exhaustive else 1


def _cmd_validate(args) -> int:
    h = _load_three_graph(args.file)
    degs = h.degrees()
    report = {
        "file": args.file,
        "n": h.n,
        "m": len(h.edges),
        "degree_sum_is_3m": sum(degs) == 3 * len(h.edges),
        "shadow_size": len(core.shadow(h).edges),
        "graph": core.to_json_obj(h),
    }
    _emit(report, args.format)
    return 0 if report["degree_sum_is_3m"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="f5lab")
    p.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="generate a named construction")
    c.add_argument("--turan", type=int, default=None, metavar="N")
    c.add_argument("--wheel", type=str, default=None, metavar="X,Y1..Y5")
    c.add_argument("--gamma", type=int, default=None, metavar="D")
    c.add_argument("--witness", type=str, default=None, metavar="N[,Y1,Y2,Y3,Z1,Z2,Z3]")
    c.add_argument("--blowup-file", dest="blowup_file", type=str, default=None)
    c.add_argument("--factor", type=int, default=2)
    c.add_argument("--emit", choices=("3g", "json"), default="json")
    c.add_argument("--out", type=str, default=None)
    c.set_defaults(func=_cmd_construct)

    k = sub.add_parser("check", help="run predicates against a graph file")
    k.add_argument("--file", required=True)
    k.add_argument("--f5", action="store_true")
    k.add_argument("--k4minus", action="store_true")
    k.add_argument("--k4shadow", action="store_true")
    k.add_argument("--cancellative", action="store_true")
    k.add_argument("--3partite", dest="three_partite", action="store_true")
    k.add_argument("--facts", action="store_true")
    k.add_argument("--alpha", action="store_true")
    k.add_argument("--theorem", action="store_true")
    k.set_defaults(func=_cmd_check)

    le = sub.add_parser("lemma", help="verify a certificate")
    le.add_argument("--name", required=True,
                    choices=("gamma-inverse", "conjugation", "pentagon",
                             "opt1", "opt2", "aes-params"))
    le.add_argument("--d", type=int, default=2)
    le.add_argument("--resolution", type=int, default=60)
    le.add_argument("--threshold", type=str, default="4/45")
    le.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    le.set_defaults(func=_cmd_lemma)

    a = sub.add_parser("audit", help="run the scalar-claim audit")
    a.add_argument("--all", action="store_true")
    a.set_defaults(func=_cmd_audit)

    s = sub.add_parser("search", help="exhaustive small-n search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--forbid", type=str, default="f5,k4minus")
    s.add_argument("--mode", choices=("max-edges", "max-min-degree"),
                   default="max-edges")
    s.add_argument("--non-3partite", dest="non_3partite", action="store_true")
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_search)

    v = sub.add_parser("validate", help="parse a graph file and check invariants")
    v.add_argument("--file", required=True)
    v.set_defaults(func=_cmd_validate)
    return p


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except F5LabError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
