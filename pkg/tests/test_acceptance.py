"""Acceptance suite: twelve criteria, each reported as one PASS/FAIL line.

Under pytest the lines appear in the "acceptance criteria" summary section;
``python tests/test_acceptance.py`` runs the same checks standalone.
"""

import math
import time
from fractions import Fraction

import pytest

from fixity import families as fam
from fixity.groups import group_rank, p_rank, prime_factors
from fixity.reps import (
    PreconditionViolation,
    classification_crosscheck,
    element_fixed_dims,
    fixed_dim_kernel,
    fixity,
    is_irreducible,
    isotropy_tower,
)
from fixity.topology import (
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

TITLES = {
    1: "fixity oracle equivalence on every family element (p in {3,5}, order <= 625), < 60 s",
    2: "four fixity-one families at p=5, n=4: order 625, degree 5, faithful, irreducible, fixity 1, < 3 min",
    3: "f < p implies r_p = f+1, cyclic center, abelian maximal subgroup",
    4: "r(G) <= fixity + 1, with equality 3 = 2+1 for wreath(3)",
    5: "isotropy tower of wreath(3) is [0,1,2,3]; every tower steps by 0 or 1",
    6: "bott_order(n) = n! for n <= 8",
    7: "Poincare series, product homology and Euler-class check for 1 <= k < n <= 6",
    8: "chi_tor composite = 1 by both routes for 1 <= k < n <= 6; degree-2 cone on S^3 gives 1/2",
    9: "modular_metacyclic(5,4) at k=3: smooth-manifold tier, target [9,7], < 2 min",
    10: "product-action certificate at (3,2,1) and (5,3,1)",
    11: "g_p(3) has order 108 and fixity 1",
    12: "two-sphere necessity false exactly for rank-3 inputs",
}


@pytest.fixture
def criterion(record_property):
    def tag(num):
        record_property("criterion", num)
        record_property("title", TITLES[num])
    return tag


def family_reps():
    return [
        fam.heisenberg(3), fam.heisenberg(5),
        fam.modular_metacyclic(3, 3), fam.modular_metacyclic(3, 4),
        fam.modular_metacyclic(5, 3), fam.modular_metacyclic(5, 4),
        fam.exceptional_family_two(5, 4),
        fam.exceptional_family_three(5, 4, 1), fam.exceptional_family_three(5, 4, 2),
        fam.g_p(3), fam.wreath(3),
    ]


def test_criterion_01_fixity_oracle(criterion):
    criterion(1)
    t0 = time.perf_counter()
    reps = family_reps()
    total = 0
    for rep in reps:
        assert rep.group.order <= 625
        dims = element_fixed_dims(rep)
        for g in range(rep.group.order):
            assert fixed_dim_kernel(rep, g) == dims[g], (rep.label, g)
        total += rep.group.order
    assert total == sum(r.group.order for r in reps)
    assert time.perf_counter() - t0 < 60


def test_criterion_02_four_families(criterion):
    criterion(2)
    t0 = time.perf_counter()
    reps = [fam.modular_metacyclic(5, 4), fam.exceptional_family_two(5, 4),
            fam.exceptional_family_three(5, 4, 1), fam.exceptional_family_three(5, 4, 2)]
    for rep in reps:
        assert rep.group.order == 625
        assert rep.degree == 5
        assert rep.is_faithful()
        assert is_irreducible(rep)
        assert fixity(rep).fixity == 1
    assert time.perf_counter() - t0 < 180


def test_criterion_03_classification(criterion):
    criterion(3)
    named = [(fam.heisenberg(3), 3), (fam.modular_metacyclic(3, 3), 3),
             (fam.modular_metacyclic(5, 4), 5), (fam.g_p(3), 3)]
    for rep, p in named:
        rec = classification_crosscheck(rep, p)
        assert rec.p_rank == rec.fixity + 1, rep.label
        assert rec.cyclic_center, rep.label
        assert rec.abelian_maximal, rep.label
    applicable = 0
    for rep in family_reps():
        f = fixity(rep).fixity
        for p in prime_factors(rep.group.order):
            if f >= p:
                continue
            try:
                rec = classification_crosscheck(rep, p)
            except PreconditionViolation:
                continue        # abelian Sylow subgroup: the statement does not apply
            assert rec.passed, (rep.label, p)
            applicable += 1
    assert applicable >= len(named)


def test_criterion_04_rank_bound(criterion):
    criterion(4)
    for rep in family_reps():
        assert group_rank(rep.group) <= fixity(rep).fixity + 1, rep.label
    w = fam.wreath(3)
    assert group_rank(w.group) == 3 == fixity(w).fixity + 1


def test_criterion_05_isotropy_tower(criterion):
    criterion(5)
    assert isotropy_tower(fam.wreath(3)).ranks == [0, 1, 2, 3]
    for rep in family_reps():
        ranks = isotropy_tower(rep).ranks
        assert all(b - a in (0, 1) for a, b in zip(ranks, ranks[1:])), rep.label


def test_criterion_06_bott(criterion):
    criterion(6)
    assert [bott_order(n) for n in range(1, 9)] == [math.factorial(n) for n in range(1, 9)]
    assert bott_order(8) == 40320


def _exterior(n, k):
    poly = {0: 1}
    for i in range(k, n):
        nxt = dict(poly)
        for d, c in poly.items():
            nxt[d + 2 * i + 1] = nxt.get(d + 2 * i + 1, 0) + c
        poly = nxt
    return [poly.get(d, 0) for d in range(max(poly) + 1)]


def test_criterion_07_cohomology(criterion):
    criterion(7)
    for n in range(2, 7):
        for k in range(1, n):
            ps = poincare_series(n, k)
            assert ps == _exterior(n, k)
            assert product_homology(sphere_dims(n, k)).poincare_polynomial() == ps
    assert euler_class_coefficient(4, 1) == 0
    assert poincare_series(4, 2)[4] == 0


def test_criterion_08_chi_tor(criterion):
    criterion(8)
    for n in range(2, 7):
        for k in range(1, n):
            total = Fraction(1)
            for stage in chi_tor_stages(n, k):
                assert stage.by_exponent == stage.by_cone == 1
                total *= stage.by_cone
            assert total == 1
    assert chi_tor(cone_homology([3], 2)) == Fraction(1, 2)


def test_criterion_09_propagation(criterion):
    criterion(9)
    t0 = time.perf_counter()
    r = propagation_report(fam.modular_metacyclic(5, 4), 3)
    assert r.q == 625 and math.gcd(625, math.factorial(4)) == 1
    assert r.tier == "smooth-manifold"
    assert r.target == [9, 7]
    assert time.perf_counter() - t0 < 120


def test_criterion_10_product_action(criterion):
    criterion(10)
    for p, t, s in [(3, 2, 1), (5, 3, 1)]:
        cert = fam.product_action_certificate(p, t, s)
        assert cert.passed
        assert cert.checked == p ** (t + s) - 1


def test_criterion_11_gp(criterion):
    criterion(11)
    rep = fam.g_p(3)
    assert rep.group.order == 108 == 2 * 3 ** 3 * (3 - 1)
    assert fixity(rep).fixity == 1


def test_criterion_12_two_sphere(criterion):
    criterion(12)
    seen_rank3 = False
    for rep in family_reps():
        G = rep.group
        for p in prime_factors(G.order):
            r = p_rank(G, p).rank
            assert two_sphere_necessity(G, p) == (r <= 2), (rep.label, p)
            seen_rank3 |= r == 3
    assert seen_rank3
    assert not two_sphere_necessity(fam.wreath(3).group, 3)


if __name__ == "__main__":
    import sys

    failures = 0
    tests = sorted((name, fn) for name, fn in globals().items() if name.startswith("test_criterion_"))
    for name, fn in tests:
        num = int(name.split("_")[2])
        try:
            fn(lambda _num: None)
            status = "PASS"
        except Exception as exc:  # report and keep going
            status = f"FAIL ({type(exc).__name__}: {exc})"
            failures += 1
        print(f"[{status}] criterion {num:2d}: {TITLES[num]}")
    sys.exit(1 if failures else 0)
