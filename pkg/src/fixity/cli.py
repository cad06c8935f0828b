"""Command-line front end: ``fixity analyze | family | stiefel | propagate | claims``."""

from __future__ import annotations

import argparse
import json
import sys

from .cyclo import lcm
from .documents import AnalysisDocument, RepInput, SchemaError, dumps, load_rep_input
from .families import build_family
from .groups import DEFAULT_CAP, CapExceeded, NonInvertibleGenerator, enumerate_group, rank_inventory
from .reps import (
    NotFaithful,
    PreconditionViolation,
    Representation,
    classification_crosscheck,
    fixity,
    isotropy_tower,
    natural,
)
from .topology import (
    bott_order,
    chi_tor_composite,
    euler_class_coefficient,
    format_poly,
    poincare_series,
    propagation_report,
    sphere_dims,
)

EXIT_OK, EXIT_SCHEMA, EXIT_CAP, EXIT_CLAIM = 0, 2, 3, 4


def default_k(n: int, f: int) -> int:
    """First stage with a free action, k = n - f - 1, clamped to [0, n-1]."""
    return min(max(n - f - 1, 0), n - 1)


def analyze(rep: Representation, k: int | None = None, paranoid: bool = False) -> AnalysisDocument:
    G = rep.group
    report = fixity(rep, audit=paranoid)
    inventory = rank_inventory(G)
    tower = isotropy_tower(rep, inventory, audit=paranoid)
    checks = []
    for p in inventory.ranks:
        try:
            rec = classification_crosscheck(rep, p, report.fixity)
        except PreconditionViolation as exc:
            checks.append({"p": p, "applicable": False, "reason": str(exc)})
            continue
        checks.append({
            "p": p, "applicable": True, "passed": rec.passed, "p_rank": rec.p_rank,
            "fixity": rec.fixity, "cyclic_center": rec.cyclic_center,
            "abelian_maximal": rec.abelian_maximal, "sylow_order": rec.sylow_order,
        })
    if k is None:
        k = default_k(rep.degree, report.fixity)
    prop = propagation_report(rep, k, fix=report.fixity, dims=report.fixed_dims)
    return AnalysisDocument(
        label=rep.label,
        order=G.order,
        degree=rep.degree,
        conductor=rep.conductor,
        fixity=report.fixity,
        witness=report.witness,
        fixity_note=report.note,
        ranks={str(p): r for p, r in inventory.ranks.items()},
        tower=tower.ranks,
        crosschecks=checks,
        propagation=[prop],
        audited=paranoid,
    )


def _rep_from_input(doc: RepInput, cap: int) -> Representation:
    return natural(enumerate_group(doc.generators, cap=cap), label=doc.label)


def _print_analysis(doc: AnalysisDocument) -> None:
    print(f"group order      {doc.order}")
    print(f"degree           {doc.degree}  (conductor {doc.conductor})")
    note = f"  ({doc.fixity_note})" if doc.fixity_note else ""
    print(f"fixity           {doc.fixity}  witness {doc.witness}{note}")
    print(f"ranks            {', '.join(f'r_{p}={r}' for p, r in doc.ranks.items()) or 'none'}")
    print(f"isotropy tower   {doc.tower}")
    for c in doc.crosschecks:
        if c["applicable"]:
            print(f"classification   p={c['p']}: {'pass' if c['passed'] else 'FAIL'}"
                  f" (r_p={c['p_rank']}, cyclic center={c['cyclic_center']}, abelian maximal={c['abelian_maximal']})")
        else:
            print(f"classification   p={c['p']}: not applicable ({c['reason']})")
    for r in doc.propagation:
        _print_propagation(r)


def _print_propagation(r) -> None:
    print(f"propagation k={r.k}: tier {r.tier}, target {r.target}")
    print(f"  free={r.free} coprime={r.coprime} chi_tor={r.chi_tor} swan_unit={r.swan_unit}")
    for f in r.failed:
        print(f"  failed: {f}")
    for n in r.notes:
        print(f"  note: {n}")
    print(f"  note: {r.external_conditions}")


def cmd_analyze(args) -> int:
    rep = _rep_from_input(load_rep_input(args.path), args.cap)
    doc = analyze(rep, args.k, args.paranoid)
    if args.json:
        sys.stdout.write(doc.dumps())
    else:
        _print_analysis(doc)
    return EXIT_OK


def cmd_family(args) -> int:
    rep = build_family(args.name, args.p, args.n, args.lam)
    m = 1
    for mat in rep.generator_matrices():
        m = lcm(m, mat.m)
    text = RepInput(m, rep.degree, rep.generator_matrices(), rep.label).dumps()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_stiefel(args) -> int:
    n, k = args.n, args.k
    dims = sphere_dims(n, k)
    out = {
        "n": n,
        "k": k,
        "spheres": dims,
        "poincare_series": format_poly(poincare_series(n, k)),
        "euler_class_groups_vanish": all(euler_class_coefficient(n, j) == 0 for j in range(k, n - 1)),
        "bott_order": bott_order(n),
        "chi_tor": str(chi_tor_composite(n, k)) if k >= 1 else None,
    }
    if args.json:
        sys.stdout.write(dumps(out))
    else:
        for key, val in out.items():
            print(f"{key:26s} {val}")
    return EXIT_OK


def cmd_propagate(args) -> int:
    rep = _rep_from_input(load_rep_input(args.path), args.cap)
    r = propagation_report(rep, args.k)
    if args.json:
        sys.stdout.write(dumps(r.to_json()))
    else:
        _print_propagation(r)
    return EXIT_OK


def cmd_claims(args) -> int:
    from .claims import run_claims

    results = run_claims(args.filter)
    width = max((len(r.id) for r in results), default=4)
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        print(f"{mark}  {r.id:{width}s}  {r.seconds:7.2f}s  {r.statement}")
        print(f"      {' ' * width}  {r.detail}")
    if not results:
        print(f"no claim matches {args.filter!r}")
        return EXIT_CLAIM
    return EXIT_OK if all(r.passed for r in results) else EXIT_CLAIM


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fixity", description="Fixity and free actions on Stiefel manifolds.")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full analysis of a representation file")
    a.add_argument("path")
    a.add_argument("--k", type=int, default=None)
    a.add_argument("--paranoid", action="store_true", help="recheck every fixed dimension by kernel rank")
    a.add_argument("--json", action="store_true")
    a.add_argument("--cap", type=int, default=DEFAULT_CAP)
    a.set_defaults(func=cmd_analyze)

    f = sub.add_parser("family", help="write a built-in family as a representation file")
    f.add_argument("--name", required=True)
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--n", type=int, default=None)
    f.add_argument("--lambda", dest="lam", type=int, default=None)
    f.add_argument("--out", default=None)
    f.set_defaults(func=cmd_family)

    s = sub.add_parser("stiefel", help="cohomology data of U(n)/U(k)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_stiefel)

    p = sub.add_parser("propagate", help="propagation report for a representation file")
    p.add_argument("path")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_propagate)

    c = sub.add_parser("claims", help="run the claim suite")
    c.add_argument("--filter", default=None)
    c.set_defaults(func=cmd_claims)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, NonInvertibleGenerator, NotFaithful, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA


if __name__ == "__main__":
    sys.exit(main())
