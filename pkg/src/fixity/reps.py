"""
Characters, fixed subspaces, fixity and isotropy data of a faithful
representation of an enumerated matrix group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .cyclo import CycloMatrix, CyclotomicNumber, kernel_rank, row_echelon_rank
from .groups import (
    MatrixGroup,
    RankInventory,
    SubgroupHandle,
    center,
    has_abelian_maximal,
    is_cyclic,
    p_power_exponent,
    p_rank,
    prime_factors,
    rank_inventory,
    sylow_subgroup,
)


class NotFaithful(ValueError):
    pass


class NonIntegerAverage(ArithmeticError):
    pass


class PreconditionViolation(ValueError):
    pass


TRIVIAL_GROUP_NOTE = "trivial group: fixity is -1 by convention"


class Representation:
    """A degree-n representation of an enumerated group.

    ``matrices[i]`` is the image of group element ``i``; by default the group's
    own matrices (the natural realization).
    """

    def __init__(self, group: MatrixGroup, matrices: Sequence[CycloMatrix] | None = None, label: str = "",
                 presentation: tuple[dict, list[str]] | None = None):
        self.group = group
        self.presentation = presentation   # (named generator matrices, relation strings)
        self.matrices = list(group.elements) if matrices is None else list(matrices)
        if len(self.matrices) != group.order:
            raise ValueError("need one matrix per group element")
        self.degree = self.matrices[0].rows
        self.label = label

    @property
    def conductor(self) -> int:
        return self.matrices[0].m

    @cached_property
    def character(self) -> list[CyclotomicNumber]:
        return [mat.trace() for mat in self.matrices]

    def generator_matrices(self) -> list[CycloMatrix]:
        return [self.matrices[g] for g in self.group.generators]

    def is_faithful(self) -> bool:
        return all(not mat.is_identity() for mat in self.matrices[1:])

    def __repr__(self):
        name = f"{self.label}, " if self.label else ""
        return f"Representation({name}order={self.group.order}, degree={self.degree})"


def natural(G: MatrixGroup, label: str = "") -> Representation:
    return Representation(G, None, label)


def _integer_average(total: CyclotomicNumber, count: int) -> int:
    if not total.is_rational():
        raise NonIntegerAverage(f"character sum {total!r} is not rational")
    value = Fraction(total.rational_value(), count)
    if value.denominator != 1:
        raise NonIntegerAverage(f"character average {value} is not an integer")
    return int(value)


def fixed_dim(rep: Representation, S: SubgroupHandle | Sequence[int]) -> int:
    """dim V^S = (1/|S|) sum_{h in S} chi(h)."""
    elems = S.elements if isinstance(S, SubgroupHandle) else tuple(S)
    chi = rep.character
    acc = CyclotomicNumber(rep.conductor)
    for h in elems:
        acc = acc + chi[h]
    return _integer_average(acc, len(elems))


def fixed_dim_kernel(rep: Representation, g: int) -> int:
    """dim ker(rho(g) - I), the audit route for cyclic subgroups."""
    mat = rep.matrices[g]
    return kernel_rank(mat - CycloMatrix.identity(rep.degree, mat.m))


def fixed_dim_stacked(rep: Representation, gens: Sequence[int]) -> int:
    """dim of the common kernel of rho(s) - I over the generators s of a subgroup."""
    n = rep.degree
    if not gens:
        return n
    m = rep.conductor
    eye = CycloMatrix.identity(n, m)
    entries = []
    for g in gens:
        entries.extend((rep.matrices[g] - eye).entries)
    return n - row_echelon_rank(CycloMatrix(n * len(gens), n, m, entries))


def element_fixed_dims(rep: Representation) -> list[int]:
    """dim V^<g> for every element, by character averages over cyclic subgroups."""
    G = rep.group
    out = [0] * G.order
    cache: dict[frozenset, int] = {}
    for g in range(G.order):
        cyc = G.cyclic_subgroup_elements(g)
        key = frozenset(cyc)
        if key not in cache:
            cache[key] = fixed_dim(rep, cyc)
        out[g] = cache[key]
    return out


@dataclass
class FixityReport:
    fixity: int
    witness: int | None
    fixed_dims: list[int] = field(repr=False)
    note: str = ""


def fixity(rep: Representation, audit: bool = False) -> FixityReport:
    """Max of dim V^<g> over nontrivial g; with ``audit`` the kernel route must agree."""
    G = rep.group
    dims = element_fixed_dims(rep)
    if audit:
        for g in range(G.order):
            k = fixed_dim_kernel(rep, g)
            if k != dims[g]:
                raise AssertionError(f"element {g}: character route {dims[g]} != kernel route {k}")
    if G.order == 1:
        return FixityReport(-1, None, dims, TRIVIAL_GROUP_NOTE)
    n = rep.degree
    if any(d == n for d in dims[1:]):
        raise NotFaithful("a nontrivial element acts as the identity")
    witness = max(range(1, G.order), key=lambda g: (dims[g], -g))
    return FixityReport(dims[witness], witness, dims)


def free_on_stiefel(rep: Representation, k: int, dims: Sequence[int] | None = None) -> bool:
    """Free action on U(n)/U(k): every nontrivial g fixes less than n-k dimensions."""
    n = rep.degree
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= {n - 1}, got {k}")
    if dims is None:
        dims = element_fixed_dims(rep)
    return all(d < n - k for d in dims[1:])


@dataclass
class IsotropyTower:
    n: int
    ranks: list[int]

    @property
    def breakpoints(self) -> list[int]:
        """s_t = first stage k whose isotropy has rank t."""
        return [self.ranks.index(t) for t in range(max(self.ranks) + 1)]


def isotropy_tower(rep: Representation, inventory: RankInventory | None = None,
                   audit: bool = False) -> IsotropyTower:
    """Maximal isotropy rank on each U(n)/U(k), k = 0..n.

    An elementary abelian E is (conjugate to) an isotropy group at stage k iff
    dim V^E >= n - k, and every isotropy group's rank is realized by one.
    """
    n = rep.degree
    if inventory is None:
        inventory = rank_inventory(rep.group)
    best_dim: dict[int, int] = {0: n}      # rank -> largest fixed dimension
    for _, r, E in inventory.all_subgroups():
        d = fixed_dim(rep, E)
        if audit and fixed_dim_stacked(rep, E.gens) != d:
            raise AssertionError(f"subgroup {E.gens}: character and kernel routes disagree")
        best_dim[r] = max(best_dim.get(r, -1), d)
    ranks = []
    for k in range(n + 1):
        ranks.append(max(r for r, d in best_dim.items() if d >= n - k))
    return IsotropyTower(n, ranks)


def inner_product(rep: Representation, other: Representation | None = None) -> Fraction:
    """<chi, psi> = (1/|G|) sum chi(g) conj(psi(g))."""
    chi = rep.character
    psi = chi if other is None else other.character
    acc = CyclotomicNumber(rep.conductor)
    for a, b in zip(chi, psi):
        acc = acc + a * b.conjugate()
    if not acc.is_rational():
        raise NonIntegerAverage("character inner product is not rational")
    return Fraction(acc.rational_value(), rep.group.order)


def is_irreducible(rep: Representation) -> bool:
    return inner_product(rep) == 1


@dataclass
class CrosscheckRecord:
    p: int
    fixity: int
    p_rank: int
    rank_matches: bool
    cyclic_center: bool
    abelian_maximal: bool
    sylow_order: int

    @property
    def passed(self) -> bool:
        return self.rank_matches and self.cyclic_center and self.abelian_maximal


def restrict_to(rep: Representation, S: SubgroupHandle) -> Representation:
    """Restriction to S, realized by enumerating the image matrices of S."""
    from .groups import enumerate_group

    gens = [rep.matrices[g] for g in S.gens] or [rep.matrices[0]]
    return natural(enumerate_group(gens), label=f"{rep.label}|sub" if rep.label else "")


def classification_crosscheck(rep: Representation, p: int, fix: int | None = None) -> CrosscheckRecord:
    """Check p-rank f+1, cyclic center and an abelian maximal subgroup.

    Groups that are not p-groups are checked on a Sylow p-subgroup with the
    restricted representation.
    """
    G = rep.group
    what = "group"
    if p_power_exponent(G.order, p) is None:
        rep = restrict_to(rep, sylow_subgroup(G, p))
        G = rep.group
        fix = None
        what = f"Sylow {p}-subgroup"
    if G.is_abelian():
        raise PreconditionViolation(f"{what} is abelian")
    if fix is None:
        fix = fixity(rep).fixity
    if fix >= p:
        raise PreconditionViolation(f"fixity {fix} is not below p = {p}")
    r = p_rank(G, p).rank
    return CrosscheckRecord(
        p=p,
        fixity=fix,
        p_rank=r,
        rank_matches=r == fix + 1,
        cyclic_center=is_cyclic(center(G)),
        abelian_maximal=has_abelian_maximal(G, p),
        sylow_order=G.order,
    )


def rank_fixity_bound(rep: Representation, fix: int | None = None) -> bool:
    """r(G) <= fix_G(V) + 1."""
    G = rep.group
    if fix is None:
        fix = fixity(rep).fixity
    r = max((p_rank(G, p).rank for p in prime_factors(G.order)), default=0)
    return r <= fix + 1
