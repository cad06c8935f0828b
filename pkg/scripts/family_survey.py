"""Survey the built-in families: order, degree, fixity, p-ranks, isotropy tower and propagation tier.

    python scripts/family_survey.py --primes 3 5 7 [--json out.json]
"""

import argparse
import json
import time

from fixity import families as fam
from fixity.cli import default_k
from fixity.groups import p_rank, prime_factors
from fixity.reps import fixity, isotropy_tower
from fixity.topology import propagation_report


def builders(p: int, max_order: int):
    yield f"heisenberg({p})", lambda: fam.heisenberg(p)
    yield f"modular({p},3)", lambda: fam.modular_metacyclic(p, 3)
    yield f"modular({p},4)", lambda: fam.modular_metacyclic(p, 4)
    if p >= 5:
        yield f"excep2({p},4)", lambda: fam.exceptional_family_two(p, 4)
        for lam in [1] + [x for x in range(2, p) if not fam.is_quadratic_residue(x, p)][:1]:
            yield f"excep3({p},4,{lam})", lambda lam=lam: fam.exceptional_family_three(p, 4, lam)
    yield f"gp({p})", lambda: fam.g_p(p)
    if p ** (p + 1) <= max_order:
        yield f"wreath({p})", lambda: fam.wreath(p)


def survey(primes, tower_limit, max_order):
    rows = []
    for p in primes:
        for name, build in builders(p, max_order):
            t0 = time.perf_counter()
            rep = build()
            f = fixity(rep).fixity
            G = rep.group
            ranks = {q: p_rank(G, q).rank for q in prime_factors(G.order)}
            tower = isotropy_tower(rep).ranks if G.order <= tower_limit else None
            k = default_k(rep.degree, f)
            tier = propagation_report(rep, k, fix=f).tier
            rows.append({
                "family": name, "order": G.order, "degree": rep.degree, "conductor": rep.conductor,
                "fixity": f, "ranks": ranks, "tower": tower, "k": k, "tier": tier,
                "seconds": round(time.perf_counter() - t0, 3),
            })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5])
    ap.add_argument("--tower-limit", type=int, default=5000, help="skip isotropy towers above this order")
    ap.add_argument("--max-order", type=int, default=5000,
                    help="skip wreath(p) above this order (wreath(5), order 15625, takes minutes)")
    ap.add_argument("--json", default=None, help="also write rows to this file")
    args = ap.parse_args()
    rows = survey(args.primes, args.tower_limit, args.max_order)
    head = f"{'family':16s} {'|G|':>6s} {'n':>2s} {'m':>4s} {'fix':>3s}  {'ranks':14s} {'tower':22s} {'k':>2s}  tier"
    print(head)
    print("-" * len(head))
    for r in rows:
        ranks = ",".join(f"r{q}={v}" for q, v in r["ranks"].items())
        tower = str(r["tower"]) if r["tower"] is not None else "-"
        print(f"{r['family']:16s} {r['order']:6d} {r['degree']:2d} {r['conductor']:4d} {r['fixity']:3d}  "
              f"{ranks:14s} {tower:22s} {r['k']:2d}  {r['tier']}  ({r['seconds']}s)")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True)
            fh.write("\n")


if __name__ == "__main__":
    main()
