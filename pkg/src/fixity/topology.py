"""
Homological bookkeeping for Stiefel manifolds U(n)/U(k) and products of odd
spheres: Poincare series, Bott orders, mapping-cone homology, torsion Euler
characteristics, Swan units and the propagation report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .groups import p_rank, prime_factors
from .reps import Representation, element_fixed_dims, fixity, free_on_stiefel, isotropy_tower

M_SYMBOL = "M"


class DegreeZero(ValueError):
    pass


class InfiniteHomology(ValueError):
    pass


class NotAUnit(ArithmeticError):
    pass


class CrossCheckFailure(AssertionError):
    pass


# spheres and Poincare series


def sphere_dims(n: int, k: int) -> list[int]:
    """Odd sphere dimensions of U(n)/U(k), descending: [2n-1, ..., 2k+1]."""
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got n={n}, k={k}")
    return [2 * i + 1 for i in range(n - 1, k - 1, -1)]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _sphere_poly(d: int) -> list[int]:
    return [1] + [0] * (d - 1) + [1]


def _exterior_poly(sig: Sequence[int]) -> list[int]:
    out = [1]
    for d in sig:
        out = _poly_mul(out, _sphere_poly(d))
    return out


def poincare_series(n: int, k: int) -> list[int]:
    """Coefficients (index = degree) of prod_{i=k}^{n-1} (1 + t^(2i+1)).

    Also rebuilt by the Gysin recursion PS(n,k) = PS(n,k+1)(1 + t^(2k+1)),
    starting from the sphere U(n)/U(n-1); the two must agree.
    """
    direct = _exterior_poly(sphere_dims(n, k))
    rec = _sphere_poly(2 * n - 1)
    for j in range(n - 2, k - 1, -1):
        if euler_class_coefficient(n, j) != 0:
            raise CrossCheckFailure(f"Euler class group is nonzero at n={n}, k={j}")
        rec = _poly_mul(rec, _sphere_poly(2 * j + 1))
    if rec != direct:
        raise CrossCheckFailure(f"Gysin recursion disagrees at n={n}, k={k}")
    return direct


def euler_class_coefficient(n: int, k: int) -> int:
    """Rank of H^(2k+2)(U(n)/U(k+1)), where the Euler class of S^(2k+1) -> U(n)/U(k) -> U(n)/U(k+1) lives."""
    if not 0 <= k < n - 1:
        raise ValueError(f"need 0 <= k < n-1, got n={n}, k={k}")
    poly = _exterior_poly(sphere_dims(n, k + 1))
    d = 2 * k + 2
    return poly[d] if d < len(poly) else 0


def format_poly(coeffs: Sequence[int]) -> str:
    """Ascending sparse form, e.g. ``1*t^0 + 1*t^3``."""
    terms = [f"{c}*t^{d}" for d, c in enumerate(coeffs) if c]
    return " + ".join(terms) if terms else "0"


def bott_order(n: int) -> int:
    """Order of pi_(2n)(U(n)), which is n!."""
    if n < 1:
        raise ValueError("need n >= 1")
    return math.factorial(n)


def fixity_one_target(n: int) -> list[int]:
    """S^(2n-1) x S^(4n-5): the two-sphere product carrying free actions of fixity-one subgroups of U(n)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return sorted([2 * n - 1, 4 * n - 5], reverse=True)


# graded groups and cones


@dataclass
class GradedGroup:
    """degree -> (free rank, torsion cyclic orders); only nonzero degrees are stored."""

    degrees: dict[int, tuple[int, tuple[int, ...]]] = field(default_factory=dict)

    def add(self, degree: int, free: int = 0, torsion: Sequence[int] = ()) -> None:
        torsion = tuple(t for t in torsion if t != 1)
        if any(t < 2 for t in torsion):
            raise ValueError("torsion orders must be >= 2")
        f0, t0 = self.degrees.get(degree, (0, ()))
        f1, t1 = f0 + free, tuple(sorted(t0 + torsion))
        if f1 or t1:
            self.degrees[degree] = (f1, t1)

    def free_rank(self, degree: int) -> int:
        return self.degrees.get(degree, (0, ()))[0]

    def torsion(self, degree: int) -> tuple[int, ...]:
        return self.degrees.get(degree, (0, ()))[1]

    def poincare_polynomial(self) -> list[int]:
        if not self.degrees:
            return [0]
        out = [0] * (max(self.degrees) + 1)
        for d, (f, _) in self.degrees.items():
            out[d] = f
        return out

    def is_zero(self) -> bool:
        return not self.degrees


def _subset_sums(sig: Sequence[int]):
    for r in range(len(sig) + 1):
        for idx in combinations(range(len(sig)), r):
            yield set(idx), sum(sig[i] for i in idx)


def product_homology(sig: Sequence[int]) -> GradedGroup:
    """Free homology of a product of spheres: rank in degree d = number of subsets summing to d."""
    out = GradedGroup()
    for _, s in _subset_sums(sig):
        out.add(s, free=1)
    return out


def cone_homology(sig: Sequence[int], d: int, factor: int = 0) -> GradedGroup:
    """Homology of the mapping cone of (degree-d map on sphere ``factor``) x identity.

    With free homology the map is diagonal on the product basis, scaling a
    class by d iff it involves the chosen sphere. The long exact sequence
    gives H_i(C) = coker(f_i) + ker(f_(i-1)), and f_* is injective for d != 0.
    """
    if d == 0:
        raise DegreeZero("a degree-zero map is not a rational equivalence")
    if not 0 <= factor < len(sig):
        raise ValueError("factor index out of range")
    # per degree: list of diagonal entries of f_*
    diag: dict[int, list[int]] = {}
    for idx, s in _subset_sums(sig):
        diag.setdefault(s, []).append(d if factor in idx else 1)
    out = GradedGroup()
    for deg, entries in diag.items():
        out.add(deg, torsion=[abs(e) for e in entries])
    return out


def chi_tor(C: GradedGroup) -> Fraction:
    """prod_i |H_i(C)|^((-1)^i) for a graded group of finite groups."""
    out = Fraction(1)
    for deg, (free, tors) in sorted(C.degrees.items()):
        if free:
            raise InfiniteHomology(f"degree {deg} has free rank {free}")
        size = math.prod(tors)
        out *= Fraction(size) if deg % 2 == 0 else Fraction(1, size)
    return out


def _euler_characteristic(sig: Sequence[int]) -> int:
    return math.prod(1 + (-1) ** d for d in sig)


@dataclass
class StageRecord:
    j: int
    degree: int
    signature: list[int]
    by_exponent: Fraction
    by_cone: Fraction


def chi_tor_stages(n: int, k: int) -> list[StageRecord]:
    """Stages of the comparison map from a sphere product to U(n)/U(k).

    Stage j (j = n down to k+2) has degree (j-1)! on S^(2j-1) and is the
    identity on the spheres of U(j-1)/U(k) and on the higher stages.
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    out = []
    for j in range(n, k + 1, -1):
        deg = math.factorial(j - 1)
        sig = sphere_dims(n, k)
        factor = sig.index(2 * j - 1)
        rest = sig[:factor] + sig[factor + 1:]
        single = chi_tor(cone_homology([2 * j - 1], deg))
        by_exp = single ** _euler_characteristic(rest)
        by_cone = chi_tor(cone_homology(sig, deg, factor))
        out.append(StageRecord(j, deg, sig, by_exp, by_cone))
    return out


def chi_tor_composite(n: int, k: int) -> Fraction:
    """chi^tor of the composite map, multiplied over stages; both routes must agree."""
    total = Fraction(1)
    for st in chi_tor_stages(n, k):
        if st.by_exponent != st.by_cone:
            raise CrossCheckFailure(f"stage {st.j}: exponent {st.by_exponent} != cone {st.by_cone}")
        total *= st.by_cone
    return total


def swan_unit(x: Fraction | int, q: int) -> int:
    """Residue numerator * denominator^-1 mod q of a q-local unit."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    if q == 1:
        return 1    # (Z/1)^x is trivial; report its identity as 1
    if math.gcd(num, q) != 1 or math.gcd(den, q) != 1:
        raise NotAUnit(f"{x} is not a unit at {q}")
    return (num * pow(den, -1, q)) % q


# propagation


def coprime_to_factorial(q: int, n: int) -> bool:
    """gcd(q, (n-1)!) = 1, tested as: every prime factor of q is >= n."""
    return all(p >= n for p in prime_factors(q))


TIERS = ("smooth-manifold", "finite-complex", "finite-dimensional-complex", "ineligible")

EXTERNAL_CONDITIONS = (
    "smoothness of the propagated action and the normal-invariant transfer condition "
    "are taken from the literature, not verified here"
)
HOMOLOGY_NOTE = "homological triviality of the action is asserted, not independently checked"


@dataclass
class PropagationReport:
    q: int
    n: int
    k: int
    free: bool
    coprime: bool
    chi_tor: Fraction
    swan_unit: int | None
    target: list
    tier: str
    failed: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    external_conditions: str = EXTERNAL_CONDITIONS

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "free": self.free,
            "coprime": self.coprime,
            "chi_tor": str(self.chi_tor),
            "swan_unit": self.swan_unit,
            "target": list(self.target),
            "tier": self.tier,
            "failed": list(self.failed),
            "notes": list(self.notes),
            "external_conditions": self.external_conditions,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "PropagationReport":
        doc = dict(doc)
        doc["chi_tor"] = Fraction(doc["chi_tor"])
        return cls(**doc)


def propagation_report(rep: Representation, k: int, fix: int | None = None,
                       dims: Sequence[int] | None = None) -> PropagationReport:
    """Which free action on which space the data supports, with every failed condition named."""
    if k < 0:
        raise ValueError("need k >= 0")
    G = rep.group
    q, n = G.order, rep.degree
    if dims is None:
        dims = element_fixed_dims(rep)
    if fix is None:
        fix = fixity(rep).fixity
    in_range = k <= n - 1
    free = in_range and free_on_stiefel(rep, k, dims)
    coprime = coprime_to_factorial(q, n)
    # U(n) and U(n)/U(1) share the comparison maps above the circle factor
    chi = chi_tor_composite(n, max(k, 1)) if n >= 2 and max(k, 1) < n else Fraction(1)
    try:
        unit = swan_unit(chi, q)
    except NotAUnit:
        unit = None

    failed = []
    if not in_range:
        failed.append(f"k={k} exceeds n-1={n - 1}")
    if not free:
        failed.append("action on the Stiefel manifold is not free")
    if k < 1:
        failed.append("k >= 1 required for a closed simply connected target")
    if not coprime:
        failed.append(f"group order {q} is not prime to (n-1)! = {math.factorial(n - 1)}")
    if unit is None:
        failed.append("chi^tor is not a unit at q")
    elif unit != 1:
        failed.append(f"unit class {unit}: Swan obstruction not computed")

    notes = [HOMOLOGY_NOTE]
    target: list = sphere_dims(n, k) if in_range else []
    if free and k >= 1 and coprime and chi == 1:
        tier = "smooth-manifold"
        failed = []
    elif k == 0 and coprime and n >= 2:
        tier = "finite-complex"
        target = sphere_dims(n, 1) + [M_SYMBOL]
        failed = []
    elif in_range and k >= 1 and not free and coprime and isotropy_tower(rep).ranks[k] <= 1:
        tier = "finite-complex"
        target = sphere_dims(n, k) + [M_SYMBOL]
        failed = []
    elif free and k >= 1 and coprime and unit is not None and unit != 1:
        tier = "finite-dimensional-complex"
        notes.append(f"unit class {unit}: Swan obstruction not computed")
    else:
        tier = "ineligible"
        if in_range and k >= 1 and not free:
            failed.append("isotropy of rank greater than one at this stage")
    if fix in (1, 2) and n >= 2:
        a, b = fixity_one_target(n)
        if fix == 1:
            notes.append(f"fixity one: free smooth action on S^{a} x S^{b}")
        else:
            notes.append(f"fixity two: free action on a finite complex homotopy equivalent to S^{a} x S^{b} x S^{M_SYMBOL}")
    return PropagationReport(q, n, k, free, coprime, chi, unit, target, tier, failed, notes)


def two_sphere_necessity(G, p: int) -> bool:
    """r_p(G) <= 2, necessary for a free action on a product of two spheres."""
    return p_rank(G, p).rank <= 2
