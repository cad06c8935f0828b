"""
Suite of computable claims about fixity, rank, Stiefel manifolds and free
actions, each checked exactly on explicit groups.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import families as fam
from .groups import group_rank, p_rank, prime_factors
from .reps import (
    PreconditionViolation,
    classification_crosscheck,
    element_fixed_dims,
    fixed_dim_kernel,
    fixity,
    is_irreducible,
    isotropy_tower,
    rank_fixity_bound,
)
from .topology import (
    bott_order,
    chi_tor,
    chi_tor_stages,
    cone_homology,
    euler_class_coefficient,
    poincare_series,
    product_homology,
    propagation_report,
    sphere_dims,
    two_sphere_necessity,
)


@dataclass
class ClaimResult:
    id: str
    statement: str
    passed: bool
    detail: str
    seconds: float


def small_family_reps():
    """Every built-in family at p in {3, 5} with group order at most 625."""
    return [
        fam.heisenberg(3), fam.heisenberg(5),
        fam.modular_metacyclic(3, 3), fam.modular_metacyclic(3, 4),
        fam.modular_metacyclic(5, 3), fam.modular_metacyclic(5, 4),
        fam.exceptional_family_two(5, 4),
        fam.exceptional_family_three(5, 4, 1), fam.exceptional_family_three(5, 4, 2),
        fam.g_p(3), fam.wreath(3),
    ]


def fixity_one_family_reps():
    return [
        fam.modular_metacyclic(5, 4),
        fam.exceptional_family_two(5, 4),
        fam.exceptional_family_three(5, 4, 1),
        fam.exceptional_family_three(5, 4, 2),
    ]


def _oracle():
    checked = 0
    for rep in small_family_reps():
        dims = element_fixed_dims(rep)
        for g in range(rep.group.order):
            if fixed_dim_kernel(rep, g) != dims[g]:
                return False, f"{rep.label}: element {g} disagrees"
            checked += 1
    return True, f"{checked} elements, both routes agree"


def _four_families():
    rows = []
    ok = True
    for rep in fixity_one_family_reps():
        f = fixity(rep).fixity
        good = (rep.group.order == 625 and rep.degree == 5 and f == 1
                and rep.is_faithful() and is_irreducible(rep))
        ok &= good
        rows.append(f"{rep.label}:|G|={rep.group.order},n={rep.degree},f={f}")
    return ok, "; ".join(rows)


def _classification():
    rows = []
    ok = True
    for rep, p in [(fam.heisenberg(3), 3), (fam.modular_metacyclic(3, 3), 3),
                   (fam.modular_metacyclic(5, 4), 5), (fam.g_p(3), 3)]:
        rec = classification_crosscheck(rep, p)
        ok &= rec.passed
        rows.append(f"{rep.label}:r_{p}={rec.p_rank},f={rec.fixity},pass={rec.passed}")
    # every other family output with f < p
    for rep in small_family_reps():
        f = fixity(rep).fixity
        for p in prime_factors(rep.group.order):
            if f < p:
                try:
                    ok &= classification_crosscheck(rep, p).passed
                except PreconditionViolation:
                    pass
    return ok, "; ".join(rows)


def _rank_bound():
    ok = all(rank_fixity_bound(rep) for rep in small_family_reps())
    w = fam.wreath(3)
    eq = group_rank(w.group) == 3 and fixity(w).fixity == 2
    return ok and eq, f"all {len(small_family_reps())} reps satisfy r <= f+1; wreath(3): 3 = 2+1 is {eq}"


def _tower():
    ranks = isotropy_tower(fam.wreath(3)).ranks
    ok = ranks == [0, 1, 2, 3]
    for rep in small_family_reps():
        r = isotropy_tower(rep).ranks
        ok &= all(0 <= b - a <= 1 for a, b in zip(r, r[1:]))
    return ok, f"wreath(3) tower {ranks}"


def _bott():
    table = {n: bott_order(n) for n in range(1, 9)}
    ok = all(table[n] == math.factorial(n) for n in table)
    return ok, ", ".join(f"{n}:{v}" for n, v in table.items())


def _cohomology():
    ok = True
    for n in range(2, 7):
        for k in range(1, n):
            direct = [1]
            for i in range(k, n):
                nxt = [0] * (len(direct) + 2 * i + 1)
                for d, c in enumerate(direct):
                    nxt[d] += c
                    nxt[d + 2 * i + 1] += c
                direct = nxt
            ps = poincare_series(n, k)
            ok &= ps == direct
            ok &= product_homology(sphere_dims(n, k)).poincare_polynomial() == ps
    ok &= euler_class_coefficient(4, 1) == 0
    return ok, "1 <= k < n <= 6 and Euler class check at (4,1)"


def _chi_tor():
    ok = True
    for n in range(2, 7):
        for k in range(1, n):
            total = Fraction(1)
            for st in chi_tor_stages(n, k):
                ok &= st.by_exponent == st.by_cone
                total *= st.by_cone
            ok &= total == 1
    single = chi_tor(cone_homology([3], 2))
    ok &= single == Fraction(1, 2)
    return ok, f"composites all 1; degree-2 map on S^3 gives {single}"


def _propagation():
    r = propagation_report(fam.modular_metacyclic(5, 4), 3)
    ok = r.tier == "smooth-manifold" and r.target == [9, 7]
    return ok, f"q={r.q}, tier={r.tier}, target={r.target}"


def _mackey():
    rows = []
    for ptsv in [(3, 2, 1), (5, 3, 1)]:
        cert = fam.product_action_certificate(*ptsv)
        rows.append(f"{ptsv}:|P|={cert.group_order},checked={cert.checked}")
    return True, "; ".join(rows)


def _gp():
    rep = fam.g_p(3)
    f = fixity(rep).fixity
    return rep.group.order == 108 and f == 1, f"|G_3|={rep.group.order}, fixity={f}"


def _two_sphere():
    ok = True
    rows = []
    for rep in small_family_reps():
        G = rep.group
        for p in prime_factors(G.order):
            r = p_rank(G, p).rank
            verdict = two_sphere_necessity(G, p)
            ok &= verdict == (r <= 2)
            if r >= 3:
                rows.append(f"{rep.label}: r_{p}={r} -> {verdict}")
    ok &= not two_sphere_necessity(fam.wreath(3).group, 3)
    return ok, "; ".join(rows) or "no rank-3 inputs"


CLAIMS: list[tuple[str, str, Callable]] = [
    ("fixity-oracle", "character-average and kernel-rank fixed dimensions agree", _oracle),
    ("four-families", "the four order-p^4 families have fixity one in dimension p", _four_families),
    ("classification", "fixity f < p forces r_p = f+1, cyclic center and an abelian maximal subgroup", _classification),
    ("rank-bound", "r(G) <= fix(G) + 1", _rank_bound),
    ("tower", "isotropy rank rises by at most one per stage, exactly one at maximal fixity", _tower),
    ("bott", "pi_2n(U(n)) has order n!", _bott),
    ("cohomology", "U(n)/U(k) has the cohomology of a product of odd spheres", _cohomology),
    ("chi-tor", "the comparison map has torsion Euler characteristic 1", _chi_tor),
    ("propagation", "order prime to (n-1)! propagates a free action to U(n)/U(k)", _propagation),
    ("mackey", "metacyclic p-groups act freely on a product of two spheres", _mackey),
    ("gp", "G_p has order 2p^3(p-1) and fixity one", _gp),
    ("two-sphere", "(Z/p)^3 cannot act freely on a product of two spheres", _two_sphere),
]


def run_claims(filter_id: str | None = None) -> list[ClaimResult]:
    out = []
    for cid, statement, fn in CLAIMS:
        if filter_id and filter_id not in cid:
            continue
        t0 = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failed claim, reported as such
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(ClaimResult(cid, statement, bool(passed), detail, time.perf_counter() - t0))
    return out
