"""
Finite groups realized as enumerated sets of cyclotomic matrices.

Elements are indexed in breadth-first order from the identity (index 0).  Each
element also records a word in the generators, so products can be computed by
walking the right-multiplication tables without touching matrices.  Groups up
to ``TABLE_LIMIT`` elements additionally get a full multiplication table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .cyclo import CycloMatrix, kernel_rank, lcm

DEFAULT_CAP = 50_000
TABLE_LIMIT = 4096


class CapExceeded(RuntimeError):
    pass


class NonInvertibleGenerator(ValueError):
    pass


class NotAPGroup(ValueError):
    pass


class NotNormal(ValueError):
    pass


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_power_exponent(n: int, p: int) -> int | None:
    """log_p(n) if n is a power of p, else None."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e if n == 1 else None


@dataclass(frozen=True, eq=True)
class SubgroupHandle:
    elements: tuple[int, ...]
    gens: tuple[int, ...]
    group: "MatrixGroup" = field(compare=False, hash=False, repr=False, default=None)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.members

    def __len__(self) -> int:
        return len(self.elements)


class MatrixGroup:
    """A finite group of invertible cyclotomic matrices, closed and enumerated."""

    def __init__(self, degree: int, conductor: int, elements: list[CycloMatrix],
                 generators: list[int], right: np.ndarray, parent: list[int], via: list[int]):
        self.degree = degree
        self.conductor = conductor
        self.elements = elements
        self.generators = generators
        self.right = right          # right[a, i] = index of a * gen_i
        self._parent = parent        # BFS parent, element = parent * gen[via]
        self._via = via
        self._index = {e.key(): i for i, e in enumerate(elements)}
        self._order_cache: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self):
        return f"MatrixGroup(order={self.order}, degree={self.degree}, conductor={self.conductor})"

    def index_of(self, mat: CycloMatrix) -> int | None:
        if mat.m != self.conductor:
            mat = mat.embed(lcm(mat.m, self.conductor))
            if mat.m != self.conductor:
                return None
        return self._index.get(mat.key())

    # products

    @cached_property
    def words(self) -> list[tuple[int, ...]]:
        words: list[tuple[int, ...]] = [()] * self.order
        for b in range(1, self.order):
            words[b] = words[self._parent[b]] + (self._via[b],)
        return words

    @cached_property
    def _right_inverse(self) -> np.ndarray:
        inv = np.empty_like(self.right)
        for i in range(self.right.shape[1]):
            inv[self.right[:, i], i] = np.arange(self.order)
        return inv

    @cached_property
    def table(self) -> np.ndarray | None:
        """Full multiplication table table[a, b] = a*b, for small groups only."""
        n = self.order
        if n > TABLE_LIMIT:
            return None
        t = np.empty((n, n), dtype=np.int32)
        t[:, 0] = np.arange(n)
        for b in range(1, n):
            t[:, b] = self.right[t[:, self._parent[b]], self._via[b]]
        return t

    def mul(self, a: int, b: int) -> int:
        t = self.table
        if t is not None:
            return int(t[a, b])
        for i in self.words[b]:
            a = self.right[a, i]
        return int(a)

    @cached_property
    def inverses(self) -> np.ndarray:
        t = self.table
        if t is not None:
            return np.argmax(t == 0, axis=1).astype(np.int32)
        rinv = self._right_inverse
        out = np.empty(self.order, dtype=np.int32)
        for b in range(self.order):
            a = 0
            for i in reversed(self.words[b]):
                a = rinv[a, i]
            out[b] = a
        return out

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result, base = 0, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def conj(self, a: int, g: int) -> int:
        """g^-1 a g."""
        return self.mul(self.mul(self.inv(g), a), g)

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def commutes(self, a: int, b: int) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    @property
    def element_orders(self) -> np.ndarray:
        if self._order_cache is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            orders[0] = 1
            t = self.table
            if t is not None:
                idx = np.arange(n)
                cur = idx.copy()
                k = 1
                while (orders == 0).any():
                    cur = t[cur, idx]
                    k += 1
                    hit = (cur == 0) & (orders == 0)
                    orders[hit] = k
            else:
                for a in range(1, n):
                    cur, k = a, 1
                    while cur != 0:
                        cur = self.mul(cur, a)
                        k += 1
                    orders[a] = k
            self._order_cache = orders
        return self._order_cache

    def element_order(self, a: int) -> int:
        return int(self.element_orders[a])

    def cyclic_subgroup_elements(self, a: int) -> list[int]:
        out, cur = [0], a
        while cur != 0:
            out.append(cur)
            cur = self.mul(cur, a)
        return out

    # subgroups

    def closure(self, gens: Iterable[int]) -> list[int]:
        gens = [g for g in gens if g != 0]
        seen = {0}
        out = [0]
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        out.append(b)
                        nxt.append(b)
            frontier = nxt
        return out

    def subgroup(self, gens: Iterable[int]) -> SubgroupHandle:
        gens = tuple(sorted(set(g for g in gens if g != 0)))
        return SubgroupHandle(tuple(sorted(self.closure(gens))), gens, self)

    def subgroup_from_elements(self, elements: Iterable[int]) -> SubgroupHandle:
        """Handle for a known-closed element set, with a greedy generating set."""
        elements = sorted(set(elements))
        gens: list[int] = []
        have = {0}
        for x in elements:
            if x not in have:
                gens.append(x)
                have = set(self.closure(gens))
        if have != set(elements):
            raise ValueError("element set is not a subgroup")
        return SubgroupHandle(tuple(elements), tuple(gens), self)

    @cached_property
    def whole(self) -> SubgroupHandle:
        return SubgroupHandle(tuple(range(self.order)), tuple(self.generators), self)

    @cached_property
    def trivial(self) -> SubgroupHandle:
        return SubgroupHandle((0,), (), self)

    def is_abelian_subgroup(self, s: SubgroupHandle) -> bool:
        return all(self.commutes(a, b) for a, b in itertools.combinations(s.gens, 2))

    def is_abelian(self) -> bool:
        return self.is_abelian_subgroup(self.whole)

    def is_normal(self, s: SubgroupHandle) -> bool:
        members = s.members
        return all(self.conj(n, g) in members for n in s.gens for g in self.generators)

    def normal_closure(self, gens: Iterable[int]) -> SubgroupHandle:
        gens = list(dict.fromkeys(g for g in gens if g != 0))
        members = set(self.closure(gens))
        changed = True
        while changed:
            changed = False
            for n in list(gens):
                for g in self.generators:
                    c = self.conj(n, g)
                    if c not in members:
                        gens.append(c)
                        members = set(self.closure(gens))
                        changed = True
        return SubgroupHandle(tuple(sorted(members)), tuple(sorted(set(gens))), self)

    def restrict(self, s: SubgroupHandle, cap: int = DEFAULT_CAP) -> "MatrixGroup":
        """Enumerate the subgroup as a matrix group in its own right."""
        gens = [self.elements[g] for g in s.gens] or [CycloMatrix.identity(self.degree, self.conductor)]
        return enumerate_group(gens, cap=cap)


def enumerate_group(generators: Sequence[CycloMatrix], cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Breadth-first closure of a set of invertible square matrices."""
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].rows
    m = 1
    for g in generators:
        if g.rows != g.cols or g.rows != n:
            raise ValueError("generators must be square of a common degree")
        m = lcm(m, g.m)
    gens = [g.embed(m) for g in generators]
    for i, g in enumerate(gens):
        if kernel_rank(g) != 0:
            raise NonInvertibleGenerator(f"generator {i} is singular")

    ident = CycloMatrix.identity(n, m)
    elements = [ident]
    index = {ident.key(): 0}
    parent, via = [0], [0]
    right_rows: list[list[int]] = []
    pos = 0
    while pos < len(elements):
        a = elements[pos]
        row = []
        for gi, g in enumerate(gens):
            b = a @ g
            k = b.key()
            j = index.get(k)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                index[k] = j
                elements.append(b)
                parent.append(pos)
                via.append(gi)
            row.append(j)
        right_rows.append(row)
        pos += 1
    right = np.array(right_rows, dtype=np.int32).reshape(len(elements), len(gens))
    gen_idx = [index[g.key()] for g in gens]
    return MatrixGroup(n, m, elements, gen_idx, right, parent, via)


# structural predicates


def center(G: MatrixGroup) -> SubgroupHandle:
    t = G.table
    if t is not None:
        gens = G.generators
        ok = np.all(t[:, gens] == t[gens, :].T, axis=1)
        elems = [int(i) for i in np.nonzero(ok)[0]]
    else:
        elems = [a for a in range(G.order) if all(G.commutes(a, g) for g in G.generators)]
    return G.subgroup_from_elements(elems)


def is_cyclic(s: SubgroupHandle) -> bool:
    G = s.group
    return any(G.element_order(a) == s.order for a in s.elements)


def frattini(G: MatrixGroup, p: int) -> SubgroupHandle:
    """Phi(G) = G'G^p, the normal closure of generator commutators and p-th powers."""
    gens = G.generators
    seeds = [G.commutator(a, b) for a, b in itertools.combinations(gens, 2)]
    seeds += [G.power(a, p) for a in gens]
    return G.normal_closure(seeds)


def _require_p_group(G: MatrixGroup, p: int) -> int:
    d = p_power_exponent(G.order, p)
    if d is None:
        raise NotAPGroup(f"order {G.order} is not a power of {p}")
    return d


def maximal_subgroups_p_group(G: MatrixGroup, p: int) -> list[SubgroupHandle]:
    """Maximal subgroups of a p-group, as preimages of hyperplanes of G/Phi(G)."""
    _require_p_group(G, p)
    if G.order == 1:
        return []
    phi = frattini(G, p)
    # basis of G/Phi as lifts
    basis: list[int] = []
    cur = set(phi.elements)
    for g in G.generators:
        if g not in cur:
            basis.append(g)
            cur = set(G.closure(list(phi.gens) + basis))
    d = len(basis)
    # coordinate vector of each coset
    coords = np.full(G.order, -1, dtype=np.int64)
    label = {}
    for vec in itertools.product(range(p), repeat=d):
        rep = 0
        for b, e in zip(basis, vec):
            rep = G.mul(rep, G.power(b, e))
        code = sum(e * p ** i for i, e in enumerate(vec))
        label[code] = vec
        for f in phi.elements:
            coords[G.mul(rep, f)] = code
    assert (coords >= 0).all()
    out = []
    for functional in itertools.product(range(p), repeat=d):
        nz = [c for c in functional if c]
        if not nz or nz[0] != 1:
            continue
        elems = [a for a in range(G.order)
                 if sum(c * v for c, v in zip(functional, label[int(coords[a])])) % p == 0]
        out.append(G.subgroup_from_elements(elems))
    return out


def has_abelian_maximal(G: MatrixGroup, p: int) -> bool:
    _require_p_group(G, p)
    if G.is_abelian():
        return True
    return any(G.is_abelian_subgroup(M) for M in maximal_subgroups_p_group(G, p))


# elementary abelian subgroups and ranks


@dataclass
class RankEntry:
    p: int
    rank: int
    representatives: dict[int, SubgroupHandle]


@dataclass
class RankInventory:
    subgroups: dict[int, dict[int, list[SubgroupHandle]]]   # prime -> rank -> subgroups
    ranks: dict[int, int]                                    # prime -> r_p

    @property
    def rank(self) -> int:
        return max(self.ranks.values(), default=0)

    def all_subgroups(self) -> Iterable[tuple[int, int, SubgroupHandle]]:
        for p, by_rank in self.subgroups.items():
            for r, subs in by_rank.items():
                for s in subs:
                    yield p, r, s


def _order_p_elements(G: MatrixGroup, p: int) -> list[int]:
    return [int(a) for a in np.nonzero(G.element_orders == p)[0]]


def p_rank(G: MatrixGroup, p: int) -> RankEntry:
    """Largest r with (Z/p)^r inside G, by backtracking over order-p elements.

    Bases are chosen with increasing element index, which reaches every
    elementary abelian subgroup; a branch is cut when too few commuting
    candidates remain to realize a rank above the current best.
    """
    if G.order % p:
        return RankEntry(p, 0, {0: G.trivial})
    elems = _order_p_elements(G, p)
    reps: dict[int, SubgroupHandle] = {0: G.trivial}
    best = 0
    ceiling = 0
    q = G.order
    while q % p == 0:
        q //= p
        ceiling += 1

    def extend(members: list[int], basis: list[int], cands: list[int]):
        nonlocal best
        depth = len(basis)
        if depth > best:
            best = depth
            reps[depth] = G.subgroup_from_elements(members)
        if best >= ceiling:
            return
        # a rank-(best+1) group over E needs p^(best+1) - p^depth new elements
        if len(cands) < p ** (best + 1) - p ** depth:
            return
        member_set = set(members)
        for i, x in enumerate(cands):
            if x in member_set:
                continue
            new_members = []
            xp = 0
            for _ in range(p):
                new_members.extend(G.mul(a, xp) for a in members)
                xp = G.mul(xp, x)
            new_set = set(new_members)
            nxt = [y for y in cands[i + 1:] if y not in new_set and G.commutes(x, y)]
            extend(new_members, basis + [x], nxt)
            if best >= ceiling:
                return

    extend([0], [], elems)
    return RankEntry(p, best, reps)


def elementary_abelian_subgroups(G: MatrixGroup, p: int) -> dict[int, list[SubgroupHandle]]:
    """Every elementary abelian p-subgroup, grouped by rank (rank 0 is trivial)."""
    out: dict[int, list[SubgroupHandle]] = {0: [G.trivial]}
    if G.order % p:
        return out
    elems = _order_p_elements(G, p)
    layer: dict[frozenset, list[int]] = {frozenset([0]): []}   # members -> basis
    r = 0
    while layer:
        nxt: dict[frozenset, list[int]] = {}
        for members, basis in layer.items():
            covered = set(members)
            for x in elems:
                if x in covered or not all(G.commutes(x, b) for b in basis):
                    continue
                new = set()
                xp = 0
                for _ in range(p):
                    new.update(G.mul(a, xp) for a in members)
                    xp = G.mul(xp, x)
                key = frozenset(new)
                covered |= new
                if key not in nxt:
                    nxt[key] = basis + [x]
        r += 1
        if nxt:
            out[r] = [SubgroupHandle(tuple(sorted(k)), tuple(b), G) for k, b in nxt.items()]
        layer = nxt
    return out


def rank_inventory(G: MatrixGroup) -> RankInventory:
    subs = {}
    ranks = {}
    for p in prime_factors(G.order):
        subs[p] = elementary_abelian_subgroups(G, p)
        ranks[p] = max(subs[p])
    return RankInventory(subs, ranks)


def group_rank(G: MatrixGroup) -> int:
    return max((p_rank(G, p).rank for p in prime_factors(G.order)), default=0)


# quotients and metacyclicity


@dataclass
class CosetGroup:
    """G/N as an abstract group: coset labels and a multiplication table."""

    label: np.ndarray          # element index -> coset index
    representatives: list[int]
    table: np.ndarray          # coset product table

    @property
    def order(self) -> int:
        return len(self.representatives)

    def element_order(self, c: int) -> int:
        cur, k = c, 1
        while cur != 0:
            cur = int(self.table[cur, c])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def is_cyclic(self) -> bool:
        return any(self.element_order(c) == self.order for c in range(self.order))

    def exponent(self) -> int:
        e = 1
        for c in range(self.order):
            e = lcm(e, self.element_order(c))
        return e


def quotient(G: MatrixGroup, N: SubgroupHandle) -> CosetGroup:
    if not G.is_normal(N):
        raise NotNormal("subgroup is not normal")
    label = np.full(G.order, -1, dtype=np.int64)
    reps: list[int] = []
    for a in range(G.order):
        if label[a] < 0:
            c = len(reps)
            reps.append(a)
            for n in N.elements:
                label[G.mul(a, n)] = c
    k = len(reps)
    table = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i, j] = label[G.mul(a, b)]
    return CosetGroup(label, reps, table)


def is_metacyclic(G: MatrixGroup) -> bool:
    """Some cyclic normal subgroup has a cyclic quotient."""
    seen: set[frozenset] = set()
    order = G.element_orders
    for a in sorted(range(G.order), key=lambda x: -order[x]):
        cyc = frozenset(G.cyclic_subgroup_elements(a))
        if cyc in seen:
            continue
        seen.add(cyc)
        N = SubgroupHandle(tuple(sorted(cyc)), (a,) if a else (), G)
        if not G.is_normal(N):
            continue
        if N.order == G.order or quotient(G, N).is_cyclic():
            return True
    return False


def sylow_subgroup(G: MatrixGroup, p: int) -> SubgroupHandle:
    """A Sylow p-subgroup, grown through normalizers."""
    target = 1
    q = G.order
    while q % p == 0:
        q //= p
        target *= p
    P = G.trivial
    while P.order < target:
        members = P.members
        for x in range(G.order):
            if x in members or p_power_exponent(G.element_order(x), p) is None:
                continue
            if all(G.conj(g, x) in members for g in P.gens):
                cand = G.subgroup(P.gens + (x,))
                if p_power_exponent(cand.order, p) is not None:
                    P = cand
                    break
        else:
            raise RuntimeError("Sylow search stalled")
    return P
