"""
Explicit groups and representations: extraspecial groups, the fixity-one
families of order p^n, G_p, wreath products, and induced representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .cyclo import CycloMatrix, CyclotomicNumber, lcm, zeta
from .groups import (
    DEFAULT_CAP,
    MatrixGroup,
    SubgroupHandle,
    enumerate_group,
    is_cyclic,
    prime_factors,
)
from .reps import Representation, fixed_dim, natural
from .words import failed_relations


class RelationFailure(AssertionError):
    pass


class SearchExhausted(RuntimeError):
    pass


class NonHomomorphism(ValueError):
    pass


class NoCentralOrderP(ValueError):
    pass


class CertificateFailure(AssertionError):
    pass


def is_prime(p: int) -> bool:
    return p >= 2 and prime_factors(p) == [p]


def _require_odd_prime(p: int, least: int = 3) -> None:
    if not is_prime(p) or p < least:
        raise ValueError(f"need an odd prime >= {least}, got {p}")


def primitive_root(p: int) -> int:
    for x in range(2, p):
        if all(pow(x, (p - 1) // q, p) != 1 for q in prime_factors(p - 1)):
            return x
    return 1


def is_quadratic_residue(a: int, p: int) -> bool:
    return pow(a % p, (p - 1) // 2, p) == 1


def shift(n: int, step: int = 1, m: int = 1) -> CycloMatrix:
    """Permutation matrix e_i -> e_{i+step}."""
    one = CyclotomicNumber.rational(1, m)
    return CycloMatrix.monomial([(j + step) % n for j in range(n)], [one] * n)


@dataclass(frozen=True)
class MonomialForm:
    degree: int
    permutation: tuple[int, ...]
    diagonal: tuple[CyclotomicNumber, ...]

    def compile(self) -> CycloMatrix:
        if sorted(self.permutation) != list(range(self.degree)):
            raise ValueError("not a permutation")
        return CycloMatrix.monomial(self.permutation, self.diagonal)


def _checked(gens: Mapping[str, CycloMatrix], relations: list[str], order: int, label: str,
             cap: int = DEFAULT_CAP) -> Representation:
    bad = failed_relations(gens, relations)
    if bad:
        raise RelationFailure(f"{label}: relations fail: {bad}")
    G = enumerate_group(list(gens.values()), cap=cap)
    if G.order != order:
        raise RelationFailure(f"{label}: enumerated order {G.order}, expected {order}")
    return Representation(G, None, label, (dict(gens), relations))


# induction


@dataclass
class InductionRecipe:
    group: MatrixGroup
    subgroup: SubgroupHandle
    character: Mapping[int, CyclotomicNumber]     # element of B -> root of unity
    transversal: list[int] | None = None


def left_transversal(G: MatrixGroup, B: SubgroupHandle) -> tuple[list[int], list[int]]:
    """Smallest-index representatives of the left cosets tB, and each element's coset."""
    label = [-1] * G.order
    reps = []
    for a in range(G.order):
        if label[a] < 0:
            for b in B.elements:
                label[G.mul(a, b)] = len(reps)
            reps.append(a)
    return reps, label


def induce(recipe: InductionRecipe) -> Representation:
    """ind_B^G(chi): rho(g) e_j = chi(t_i^-1 g t_j) e_i where g t_j lies in t_i B."""
    G, B, chi = recipe.group, recipe.subgroup, recipe.character
    if not G.is_abelian_subgroup(B):
        raise NonHomomorphism("inducing subgroup must be abelian")
    if chi[0] != 1:
        raise NonHomomorphism("character must send the identity to 1")
    for a in B.elements:
        for g in B.gens:
            if chi[G.mul(a, g)] != chi[a] * chi[g]:
                raise NonHomomorphism(f"chi is not multiplicative at ({a}, {g})")
    reps, label = left_transversal(G, B)
    if recipe.transversal is not None:
        given = list(recipe.transversal)
        if sorted(label[t] for t in given) != list(range(len(reps))):
            raise ValueError("transversal does not meet every coset exactly once")
        reps = sorted(given, key=lambda t: label[t])
    m = 1
    for v in chi.values():
        m = lcm(m, v.m)
    tinv = [G.inv(t) for t in reps]
    mats = []
    for g in range(G.order):
        perm, diag = [], []
        for t in reps:
            x = G.mul(g, t)
            i = label[x]
            perm.append(i)
            diag.append(chi[G.mul(tinv[i], x)])
        mats.append(CycloMatrix.monomial(perm, diag).embed(m))
    return Representation(G, mats, "induced")


def induced_character_value(recipe: InductionRecipe, g: int) -> CyclotomicNumber:
    """(1/|B|) sum over x in G with x^-1 g x in B of chi(x^-1 g x)."""
    G, B, chi = recipe.group, recipe.subgroup, recipe.character
    members = B.members
    acc = CyclotomicNumber(1)
    for x in range(G.order):
        y = G.conj(g, x)
        if y in members:
            acc = acc + chi[y]
    return acc * Fraction(1, B.order)


def power_character(G: MatrixGroup, a: int, value: CyclotomicNumber) -> dict[int, CyclotomicNumber]:
    """Character of the cyclic group <a> sending a to ``value``."""
    out = {}
    cur, v = 0, CyclotomicNumber.rational(1, value.m)
    while True:
        out[cur] = v
        cur, v = G.mul(cur, a), v * value
        if cur == 0:
            return out


# families


@lru_cache(maxsize=None)
def heisenberg(p: int) -> Representation:
    """Extraspecial group of order p^3 and exponent p in its degree-p Schrodinger model."""
    if p == 2:
        raise ValueError("heisenberg needs an odd prime")
    _require_odd_prime(p)
    x = shift(p, 1, p)
    y = CycloMatrix.diagonal([zeta(p, i) for i in range(p)])
    rels = [f"x^{p} = y^{p} = [x,y]^{p} = [[x,y],x] = [[x,y],y] = 1"]
    return _checked({"x": x, "y": y}, rels, p ** 3, f"heisenberg({p})")


def metacyclic_generators(p: int, t: int, s: int) -> tuple[CycloMatrix, CycloMatrix, int]:
    """Monomial model of <a, b | a^(p^t) = b^(p^s) = 1, a^b = a^r> induced from <a>.

    Returns rho(a), rho(b) and r = 1 + p^max(t-s, 1).
    """
    q = p ** t
    r = (1 + p ** max(t - s, 1)) % q
    d = p ** s
    a = CycloMatrix.diagonal([zeta(q, pow(r, j, q)) for j in range(d)])
    b = shift(d, 1, q)
    return a, b, r


def metacyclic(p: int, t: int, s: int) -> Representation:
    """Extension 1 -> Z/p^t -> P -> Z/p^s -> 1 with the rep induced from a faithful character of Z/p^t."""
    _require_odd_prime(p)
    if t < 1 or s < 0:
        raise ValueError("need t >= 1 and s >= 0")
    if s == 0:
        a = CycloMatrix.diagonal([zeta(p ** t)])
        return _checked({"a": a}, [f"a^{p ** t} = 1"], p ** t, f"cyclic({p}^{t})")
    a, b, r = metacyclic_generators(p, t, s)
    rels = [f"a^{p ** t} = b^{p ** s} = 1", f"a^b = a^{r}"]
    return _checked({"a": a, "b": b}, rels, p ** (t + s), f"metacyclic({p},{t},{s})")


@lru_cache(maxsize=None)
def modular_metacyclic(p: int, n: int) -> Representation:
    """<a, b | a^(p^(n-1)) = b^p = 1, a^b = a^(1+p^(n-2))> as ind_<a>(chi), chi(a) = zeta_(p^(n-1))."""
    if p < 3 or n < 3:
        raise ValueError("need p >= 3 and n >= 3")
    model = metacyclic(p, n - 1, 1)
    G = model.group
    a = G.generators[0]
    B = G.subgroup([a])
    chi = power_character(G, a, zeta(p ** (n - 1)))
    rep = induce(InductionRecipe(G, B, chi))
    rep.label = f"modular({p},{n})"
    rep.presentation = model.presentation
    return rep


@lru_cache(maxsize=None)
def exceptional_family_two(p: int, n: int) -> Representation:
    """<a, x, y | a^(p^(n-3)) = [x,y], a^(p^(n-2)) = [a,x] = [a,y] = x^p = y^p = 1>.

    a acts as the scalar zeta_(p^(n-2)), x as the shift e_i -> e_(i-1) and y as
    diag(mu^i) with mu = a^(p^(n-3)); with [u,v] = u^-1 v^-1 u v this gives
    [x,y] = mu I.
    """
    _require_odd_prime(p, 5)
    if n < 4:
        raise ValueError("need n >= 4")
    q = p ** (n - 2)
    mu_exp = p ** (n - 3)
    a = CycloMatrix.diagonal([zeta(q)] * p)
    x = shift(p, -1, q)
    y = CycloMatrix.diagonal([zeta(q, mu_exp * i) for i in range(p)])
    rels = [f"a^{mu_exp} = [x,y]", f"a^{q} = [a,x] = [a,y] = x^{p} = y^{p} = 1"]
    return _checked({"a": a, "x": x, "y": y}, rels, p ** n, f"excep2({p},{n})")


def family_three_relations(p: int, n: int, lam: int) -> list[str]:
    z = p ** (n - 3)
    return [f"a^-{lam * z} = [x,a,x]", f"a^{p ** (n - 2)} = x^{p} = [x,a]^{p} = [x,a,a] = 1"]


def family_three_candidate(p: int, n: int, lam: int, u: int, v: int) -> dict[str, CycloMatrix]:
    """Generators of ind_A^P(chi) for A = <a, c = [x,a]>, chi(a) = zeta^u, chi(c) = zeta_p^v.

    Conjugation by x acts on A by a^i c^j -> a^(i - lam j p^(n-3)) c^(j - i).
    """
    q = p ** (n - 2)
    z = p ** (n - 3)
    diag = []
    i, j = 1, 0
    for _ in range(p):
        diag.append(zeta(q, u * i + v * j * (q // p)))
        i, j = (i - lam * j * z) % q, (j - i) % p
    return {"a": CycloMatrix.diagonal(diag), "x": shift(p, 1, q)}


@lru_cache(maxsize=None)
def exceptional_family_three(p: int, n: int, lam: int) -> Representation:
    """<a, x | a^(-lam p^(n-3)) = [x,a,x], a^(p^(n-2)) = x^p = [x,a]^p = [x,a,a] = 1>.

    Searches linear characters of the abelian maximal subgroup <a, [x,a]> in
    lexicographic order and keeps the first induced representation that
    satisfies every relation and generates a group of order p^n.
    """
    _require_odd_prime(p, 5)
    if n < 4:
        raise ValueError("need n >= 4")
    if lam % p != 1 and is_quadratic_residue(lam, p):
        raise ValueError(f"lambda must be 1 or a non-residue mod {p}")
    q = p ** (n - 2)
    rels = family_three_relations(p, n, lam)
    for u in range(q):
        if u % p == 0:
            continue    # a^(p^(n-3)) is central of order p and must act nontrivially
        for v in range(p):
            gens = family_three_candidate(p, n, lam, u, v)
            if failed_relations(gens, rels):
                continue
            G = enumerate_group(list(gens.values()), cap=p ** n + 1)
            if G.order == p ** n:
                return Representation(G, None, f"excep3({p},{n},{lam})", (gens, rels))
    raise SearchExhausted(f"no faithful induced model for family three at p={p}, n={n}, lambda={lam}")


@lru_cache(maxsize=None)
def g_p(p: int) -> Representation:
    """G_p = <A, B, C, D> in U(p): A = omega I, B = diag(omega^i), C e_i = e_(i+1), D e_i = mu e_(x i)."""
    _require_odd_prime(p)
    m = lcm(p, 2 * (p - 1))
    x = primitive_root(p)
    mu = zeta(2 * (p - 1))
    A = CycloMatrix.diagonal([zeta(p)] * p)
    B = CycloMatrix.diagonal([zeta(p, i) for i in range(p)])
    C = shift(p, 1, m)
    D = CycloMatrix.monomial([(x * i) % p for i in range(p)], [mu] * p)
    gens = {name: mat.embed(m) for name, mat in zip("ABCD", (A, B, C, D))}
    rels = [f"A^{p} = B^{p} = [A,B] = 1"]
    return _checked(gens, rels, 2 * p ** 3 * (p - 1), f"gp({p})")


@lru_cache(maxsize=None)
def wreath(p: int, cap: int = DEFAULT_CAP) -> Representation:
    """Z/p wr Z/p in U(p): diagonal base group and a cyclic permutation matrix."""
    _require_odd_prime(p)
    d = CycloMatrix.diagonal([zeta(p)] + [zeta(p, 0)] * (p - 1))
    s = shift(p, 1, p)
    rels = [f"d^{p} = s^{p} = 1"] + [f"[d, d^(s^{k})] = 1" for k in range(1, p)]
    return _checked({"d": d, "s": s}, rels, p ** (p + 1), f"wreath({p})", cap=cap)


# freeness certificates


def mackey_free_check(rep: Representation, B: SubgroupHandle, p: int) -> bool:
    """Does the order-p subgroup of the cyclic p-group B act freely on S(V)?"""
    G = rep.group
    order_p = [b for b in B.elements if G.element_order(b) == p]
    if not order_p:
        raise NoCentralOrderP("subgroup has no element of order p")
    if not is_cyclic(B):
        raise ValueError("subgroup is not cyclic")
    return fixed_dim(rep, G.cyclic_subgroup_elements(order_p[0])) == 0


@dataclass
class ProductActionCertificate:
    p: int
    t: int
    s: int
    group_order: int
    sphere_dims: tuple[int, int]
    mackey_free: bool
    checked: int
    violations: list[int]

    @property
    def passed(self) -> bool:
        return self.mackey_free and not self.violations


def product_action_certificate(p: int, t: int, s: int) -> ProductActionCertificate:
    """Freeness of the diagonal action on S(ind chi) x S^1 for a metacyclic p-group.

    Every nontrivial g must act freely on the sphere (dim V^<g> = 0) or map to a
    nontrivial element of P/B, which rotates the circle without fixed points.
    """
    rep = metacyclic(p, t, s)
    G = rep.group
    a = G.generators[0]
    B = G.subgroup([a])
    dims = [fixed_dim(rep, G.cyclic_subgroup_elements(g)) for g in range(G.order)]
    violations = [g for g in range(1, G.order) if dims[g] != 0 and g in B]
    cert = ProductActionCertificate(
        p=p, t=t, s=s,
        group_order=G.order,
        sphere_dims=(2 * rep.degree - 1, 1),
        mackey_free=mackey_free_check(rep, B, p),
        checked=G.order - 1,
        violations=violations,
    )
    if not cert.passed:
        raise CertificateFailure(f"elements acting non-freely: {violations}")
    return cert


FAMILIES = {
    "heisenberg": lambda p, n=None, lam=None: heisenberg(p),
    "modular": lambda p, n=None, lam=None: modular_metacyclic(p, 3 if n is None else n),
    "excep2": lambda p, n=None, lam=None: exceptional_family_two(p, 4 if n is None else n),
    "excep3": lambda p, n=None, lam=None: exceptional_family_three(p, 4 if n is None else n, 1 if lam is None else lam),
    "gp": lambda p, n=None, lam=None: g_p(p),
    "wreath": lambda p, n=None, lam=None: wreath(p),
}


def build_family(name: str, p: int, n: int | None = None, lam: int | None = None) -> Representation:
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    return FAMILIES[name](p, n, lam)
