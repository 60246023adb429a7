"""Command line front end.

One JSON bundle describes one mathematical instance; commands read only
the sections they need, so partial bundles are fine.  Recognized
sections:

    {
      "matched_pair":     {"G": .., "Gamma": .., "lact": .., "ract": ..},
      "cocycles":         {"N": .., "sigma": {..}, "tau": {..}},
      "braiding_pair":    {"phi": [..], "psi": [..]},
      "braiding_scalars": {"N": .., "c": [[scalar]]},
      "algebra":          structure constants as emitted by build-hopf,
      "group": {..}, "gsub": [..], "gammasub": [..]    (factorize input)
    }

Exit codes: 0 every check passed, 1 some verification failed (the
report is still produced), 2 malformed input, 3 search budget or size
bound exceeded.

The ``report`` command treats --out as a directory and drops
report.json / report.txt / checks.csv plus PNG diagnostics there; every
other command treats --out as a single JSON file.  All file writes go
through a temporary name followed by an atomic rename.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .cocycles import CocyclePair, enumerate_cocycle_pairs, trivial_cocycles
from .crossed_cat import (
    CrossedAction,
    hopf_monad_check,
    regular_braiding_matrix,
    verify_braiding,
    verify_crossed_action,
)
from .errors import (
    ConductorMismatch,
    MalformedInput,
    NoAntipode,
    NotUnique,
    SearchBudgetExceeded,
    SizeBound,
    StructureError,
)
from .groups import FiniteGroup
from .hopf import (
    HopfAlgebra,
    antipode_antihom_report,
    build_bicrossed,
    closed_form_antipode,
    seq_maps_report,
    solve_antipode,
    verify_antipode,
    verify_bialgebra,
    verify_quasitriangular,
    rmatrix_from_braiding,
)
from .matched_pair import MatchedPair, analyze, bicrossed_group, from_factorization
from .report import CheckReport
from .ybe import (
    BraidingData,
    braiding_pair_check,
    enumerate_braiding_pairs,
    r_map,
    scalar_braiding_check,
    verify_qybe,
)


# ---------------------------------------------------------------------------
# i/o plumbing
# ---------------------------------------------------------------------------

def _load_bundle(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedInput("bundle must be a JSON object")
    return doc


def _atomic_write(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _emit(args, rep: CheckReport, artifact: dict | None) -> None:
    payload = dict(artifact or {})
    payload["checks"] = rep.to_json()["checks"]
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(rep.render_text())
    if args.out:
        _atomic_write(args.out, json.dumps(payload, indent=2))


def _need(doc: dict, key: str, command: str) -> dict:
    if key not in doc:
        raise MalformedInput(f"{command} needs a {key!r} section in the bundle")
    return doc[key]


def _bundle_pair(doc: dict, command: str, check: bool = True) -> MatchedPair:
    return MatchedPair.from_json(_need(doc, "matched_pair", command), check=check)


def _bundle_cocycles(doc: dict, mp: MatchedPair, check: bool = True) -> CocyclePair:
    if "cocycles" in doc:
        return CocyclePair.from_json(mp, doc["cocycles"], check=check)
    return trivial_cocycles(mp)


def _bundle_braiding(doc: dict, mp: MatchedPair, command: str) -> BraidingData:
    pair_sec = _need(doc, "braiding_pair", command)
    scal_sec = _need(doc, "braiding_scalars", command)
    merged = dict(pair_sec)
    merged.update(scal_sec)
    return BraidingData.from_json(mp, merged)


def _fresh_antipode(H: HopfAlgebra):
    if H.pair is not None and H.cocycles is not None:
        return closed_form_antipode(H)
    return solve_antipode(H)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _cmd_validate(args, doc: dict) -> int:
    mp = _bundle_pair(doc, "validate", check=False)
    rep = CheckReport()
    rep.extend(mp.G.validate(), "group: ")
    rep.extend(mp.Gamma.validate(), "grading group: ")
    rep.extend(mp.validate(), "matched pair: ")
    cp = None
    if "cocycles" in doc:
        cp = CocyclePair.from_json(mp, doc["cocycles"], check=False)
        rep.extend(cp.validate(), "cocycles: ")
    if rep.ok:
        ca = CrossedAction(mp, cp if cp is not None else trivial_cocycles(mp))
        rep.extend(verify_crossed_action(ca), "crossed action: ")
    else:
        rep.add("crossed action: prerequisites hold", False,
                "skipped, earlier section failed")
    _emit(args, rep, None)
    return 0 if rep.ok else 1


def _cmd_build_hopf(args, doc: dict) -> int:
    mp = _bundle_pair(doc, "build-hopf")
    cp = _bundle_cocycles(doc, mp)
    H = build_bicrossed(mp, cp)
    _fresh_antipode(H)
    rep = CheckReport()
    rep.add(f"algebra built (dim {H.dim})", True)
    rep.add("antipode attached", H.antipode is not None)
    _emit(args, rep, {"algebra": H.to_json()})
    return 0 if rep.ok else 1


def _cmd_verify_hopf(args, doc: dict) -> int:
    if "algebra" in doc:
        data = doc["algebra"]
    elif "mult" in doc:
        data = doc
    else:
        raise MalformedInput("verify-hopf needs an 'algebra' section "
                             "or a bare structure-constant document")
    H = HopfAlgebra.from_json(data)
    rep = verify_bialgebra(H)
    if H.antipode is not None:
        rep.extend(verify_antipode(H, H.antipode), "antipode: ")
        rep.extend(antipode_antihom_report(H, H.antipode), "antipode: ")
    else:
        try:
            S = solve_antipode(H)
        except (NoAntipode, NotUnique) as exc:
            rep.add("antipode exists and is unique", False, str(exc))
        else:
            rep.add("antipode exists and is unique", True)
            rep.extend(antipode_antihom_report(H, S), "antipode: ")
    _emit(args, rep, None)
    return 0 if rep.ok else 1


def _cmd_factorize(args, doc: dict) -> int:
    group = FiniteGroup.from_json(_need(doc, "group", "factorize"))
    gsub = _need(doc, "gsub", "factorize")
    gammasub = _need(doc, "gammasub", "factorize")
    rep = CheckReport()
    try:
        mp = from_factorization(group, gsub, gammasub)
    except StructureError as exc:
        rep.add("factorization is exact", False, str(exc))
        _emit(args, rep, None)
        return 1
    rep.add("factorization is exact", True)
    rep.extend(mp.validate(), "matched pair: ")
    _emit(args, rep, {"matched_pair": mp.to_json()})
    return 0 if rep.ok else 1


def _cmd_enumerate_ybe(args, doc: dict) -> int:
    mp = _bundle_pair(doc, "enumerate-ybe")
    pairs = enumerate_braiding_pairs(mp, limit=args.budget)
    rep = CheckReport()
    rows = []
    for i, bp in enumerate(pairs):
        sub = verify_qybe(r_map(bp))
        rep.extend(sub, f"pair {i}: ")
        rows.append({
            "phi": list(bp.phi.map),
            "psi": list(bp.psi.map),
            "qybe": "pass" if sub.ok else "fail",
        })
    rep.add(f"enumeration complete ({len(pairs)} braiding pairs)", True)
    _emit(args, rep, {"pairs": rows})
    return 0 if rep.ok else 1


def _cmd_enumerate_cocycles(args, doc: dict) -> int:
    mp = _bundle_pair(doc, "enumerate-cocycles")
    sec = doc.get("cocycles", {})
    N = sec.get("N", doc.get("conductor"))
    if not isinstance(N, int) or N < 1:
        raise MalformedInput("enumerate-cocycles needs cocycles.N "
                             "or a top-level 'conductor'")
    exponents = sec.get("exponents", doc.get("exponents"))
    pairs = enumerate_cocycle_pairs(mp, N, exponents, budget=args.budget)
    rep = CheckReport()
    for i, cp in enumerate(pairs):
        rep.extend(cp.validate(), f"pair {i}: ")
    rep.add(f"enumeration complete ({len(pairs)} cocycle pairs)", True)
    _emit(args, rep, {"conductor": N, "count": len(pairs),
                      "pairs": [cp.to_json() for cp in pairs]})
    return 0 if rep.ok else 1


def _braiding_pair_entries(rep: CheckReport, mp: MatchedPair, doc: dict):
    """Per-condition check entries; returns the pair when it is usable."""
    sec = doc["braiding_pair"]
    phi, psi = sec.get("phi", ()), sec.get("psi", ())
    try:
        ok, wits = braiding_pair_check(mp, phi, psi)
    except StructureError as exc:
        rep.add("braiding pair: maps are homomorphisms", False, str(exc))
        return None
    rep.add("braiding pair: maps are homomorphisms", True)
    for key in ("(i)", "(ii)", "(iii)", "(iv)", "(v)"):
        wit = wits[key]
        rep.add(f"braiding pair: condition {key}", wit is None,
                None if wit is None else str(wit))
    if not ok:
        return None
    from .ybe import braiding_pair_validate
    return braiding_pair_validate(mp, phi, psi)


def _cmd_check_braiding(args, doc: dict) -> int:
    mp = _bundle_pair(doc, "check-braiding")
    cp = _bundle_cocycles(doc, mp)
    ca = CrossedAction(mp, cp)
    _need(doc, "braiding_pair", "check-braiding")
    _need(doc, "braiding_scalars", "check-braiding")
    rep = CheckReport()
    if _braiding_pair_entries(rep, mp, doc) is None:
        _emit(args, rep, None)
        return 1
    bd = _bundle_braiding(doc, mp, "check-braiding")
    rep.extend(verify_qybe(r_map(bd.bp)), "set solution: ")
    rep.extend(scalar_braiding_check(ca, bd), "scalar braiding: ")
    rep.extend(verify_braiding(ca, bd, seed=args.seed), "category: ")
    _emit(args, rep, None)
    return 0 if rep.ok else 1


def _cmd_monad_check(args, doc: dict) -> int:
    mp = _bundle_pair(doc, "monad-check")
    ca = CrossedAction(mp, _bundle_cocycles(doc, mp))
    rep = hopf_monad_check(ca)
    _emit(args, rep, None)
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# the aggregating report
# ---------------------------------------------------------------------------

def _analysis_json(mp: MatchedPair) -> dict:
    ana = analyze(mp)
    return {
        "lact_trivial": ana.lact_trivial,
        "ract_trivial": ana.ract_trivial,
        "lact_by_automorphisms": ana.lact_by_automorphisms,
        "ract_by_automorphisms": ana.ract_by_automorphisms,
        "inert_grading_subgroup": list(ana.gamma_bar.elements),
        "fixed_grading_subgroup": list(ana.gamma_under.elements),
    }


def _report_figures(out_dir: str, mp: MatchedPair, cp: CocyclePair,
                    doc: dict, bp) -> list[str]:
    from . import figures

    written = []
    written.append(figures.cayley_figure(
        bicrossed_group(mp), os.path.join(out_dir, "bicrossed_group.png"),
        title=f"bicrossed group, order {mp.G.order * mp.Gamma.order}"))
    written.append(figures.actions_figure(
        mp, os.path.join(out_dir, "action_tables.png")))
    if "cocycles" in doc:
        written.append(figures.cocycle_phase_figure(
            cp, os.path.join(out_dir, "cocycle_phases.png")))
    if bp is not None:
        written.append(figures.solution_figure(
            r_map(bp), os.path.join(out_dir, "pair_solution.png")))
    return written


def _cmd_report(args, doc: dict) -> int:
    rep = CheckReport()
    artifact: dict = {}

    if "matched_pair" in doc:
        mp = MatchedPair.from_json(doc["matched_pair"], check=False)
    elif all(k in doc for k in ("group", "gsub", "gammasub")):
        group = FiniteGroup.from_json(doc["group"])
        try:
            mp = from_factorization(group, doc["gsub"], doc["gammasub"])
        except StructureError as exc:
            rep.add("factorization is exact", False, str(exc))
            return _finish_report(args, rep, artifact, None, None, doc, None)
        rep.add("factorization is exact", True)
        artifact["matched_pair"] = mp.to_json()
    else:
        raise MalformedInput("report needs a matched_pair section or "
                             "a group/gsub/gammasub triple")

    rep.extend(mp.G.validate(), "group: ")
    rep.extend(mp.Gamma.validate(), "grading group: ")
    rep.extend(mp.validate(), "matched pair: ")
    if not rep.ok:
        return _finish_report(args, rep, artifact, None, None, doc, None)

    artifact["analysis"] = _analysis_json(mp)

    cp = None
    if "cocycles" in doc:
        cp = CocyclePair.from_json(mp, doc["cocycles"], check=False)
        rep.extend(cp.validate(), "cocycles: ")
        if not rep.ok:
            return _finish_report(args, rep, artifact, mp, None, doc, None)
    else:
        cp = trivial_cocycles(mp)

    H = build_bicrossed(mp, cp)
    artifact["algebra_dim"] = H.dim
    rep.extend(verify_bialgebra(H), "algebra: ")
    try:
        S = _fresh_antipode(H)
    except (NoAntipode, NotUnique) as exc:
        rep.add("antipode: exists", False, str(exc))
    else:
        rep.add("antipode: exists", True)
        rep.extend(antipode_antihom_report(H, S), "antipode: ")
    rep.extend(seq_maps_report(H, mp), "exact sequence: ")

    ca = CrossedAction(mp, cp)
    rep.extend(verify_crossed_action(ca), "crossed action: ")
    rep.extend(hopf_monad_check(ca), "monad: ")

    bd = None
    bp = None
    if "braiding_pair" in doc:
        bp = _braiding_pair_entries(rep, mp, doc)
        if bp is not None:
            rep.extend(verify_qybe(r_map(bp)), "set solution: ")
            if "braiding_scalars" in doc:
                try:
                    bd = _bundle_braiding(doc, mp, "report")
                except StructureError as exc:
                    rep.add("braiding scalars: well formed", False, str(exc))
    if bd is not None:
        rep.extend(scalar_braiding_check(ca, bd), "scalar braiding: ")
        rep.extend(verify_braiding(ca, bd, seed=args.seed), "category: ")
        M = _lcm(ca.N, bd.N)
        caM = ca.at_conductor(M)
        R = rmatrix_from_braiding(caM.algebra(),
                                  regular_braiding_matrix(caM, bd))
        rep.extend(verify_quasitriangular(caM.algebra(), R),
                   "quasitriangular: ")

    return _finish_report(args, rep, artifact, mp, cp, doc, bp)


def _finish_report(args, rep: CheckReport, artifact: dict,
                   mp: MatchedPair | None, cp: CocyclePair | None,
                   doc: dict, bp) -> int:
    payload = dict(artifact)
    payload["checks"] = rep.to_json()["checks"]
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(rep.render_text())
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        _atomic_write(os.path.join(args.out, "report.json"),
                      json.dumps(payload, indent=2))
        _atomic_write(os.path.join(args.out, "report.txt"), rep.render_text())
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(("name", "status", "witness"))
        writer.writerows(rep.csv_rows())
        _atomic_write(os.path.join(args.out, "checks.csv"), buf.getvalue())
        if mp is not None and cp is not None:
            _report_figures(args.out, mp, cp, doc, bp)
    return 0 if rep.ok else 1


def _lcm(a: int, b: int) -> int:
    x, y = a, b
    while y:
        x, y = y, x % y
    return a // x * b


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

_COMMANDS = {
    "validate": _cmd_validate,
    "build-hopf": _cmd_build_hopf,
    "verify-hopf": _cmd_verify_hopf,
    "factorize": _cmd_factorize,
    "enumerate-ybe": _cmd_enumerate_ybe,
    "enumerate-cocycles": _cmd_enumerate_cocycles,
    "check-braiding": _cmd_check_braiding,
    "monad-check": _cmd_monad_check,
    "report": _cmd_report,
}


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicrossed",
        description="exact construction and verification of crossed "
                    "group data, the associated algebras, and their braidings",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="JSON bundle path")
        p.add_argument("--out", help="output file (directory for report)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for sampled objects and morphisms")
        p.add_argument("--budget", type=int, default=10 ** 6,
                       help="bound on search assignments")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output on stdout")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    if args.budget < 1:
        print("error: budget must be positive", file=sys.stderr)
        return 2
    try:
        doc = _load_bundle(args.input)
        return _COMMANDS[args.command](args, doc)
    except (MalformedInput, ConductorMismatch) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return 2
    except (SearchBudgetExceeded, SizeBound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except StructureError as exc:
        rep = CheckReport()
        rep.add(f"input structure ({exc.__class__.__name__})", False, str(exc))
        _emit(args, rep, None)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
