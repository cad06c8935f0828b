import pytest

from fixity import families as fam
from fixity.cyclo import zeta
from fixity.reps import fixed_dim, fixity, is_irreducible
from fixity.words import verify_presentation

CASES = [
    # constructor, order, degree, conductor, fixity
    (lambda: fam.heisenberg(3), 27, 3, 3, 1),
    (lambda: fam.heisenberg(5), 125, 5, 5, 1),
    (lambda: fam.modular_metacyclic(3, 3), 27, 3, 9, 1),
    (lambda: fam.modular_metacyclic(5, 4), 625, 5, 125, 1),
    (lambda: fam.exceptional_family_two(5, 4), 625, 5, 25, 1),
    (lambda: fam.exceptional_family_three(5, 4, 1), 625, 5, 25, 1),
    (lambda: fam.exceptional_family_three(5, 4, 2), 625, 5, 25, 1),
    (lambda: fam.g_p(3), 108, 3, 12, 1),
    (lambda: fam.wreath(3), 81, 3, 3, 2),
]


@pytest.mark.parametrize("case", CASES, ids=lambda c: None)
def test_family_invariants(case):
    build, order, degree, conductor, f = case
    rep = build()
    assert rep.group.order == order
    assert rep.degree == degree
    assert rep.conductor == conductor
    assert rep.is_faithful()
    assert is_irreducible(rep)
    assert fixity(rep).fixity == f


@pytest.mark.parametrize("case", CASES, ids=lambda c: None)
def test_presentations_hold(case):
    rep = case[0]()
    gens, relations = rep.presentation
    assert verify_presentation(gens, relations)


def test_exceptional_families_are_distinct_from_modular():
    """Element-order statistics separate the order-625 groups."""
    def profile(rep):
        orders = rep.group.element_orders
        return tuple(sorted((int(o), int((orders == o).sum())) for o in set(orders.tolist())))

    modular = profile(fam.modular_metacyclic(5, 4))
    two = profile(fam.exceptional_family_two(5, 4))
    assert modular != two


def test_family_three_rejects_residues():
    with pytest.raises(ValueError):
        fam.exceptional_family_three(5, 4, 4)   # 4 = 2^2 is a square mod 5


@pytest.mark.parametrize("call", [
    lambda: fam.heisenberg(2),
    lambda: fam.heisenberg(9),
    lambda: fam.exceptional_family_two(3, 4),
    lambda: fam.exceptional_family_two(5, 3),
    lambda: fam.modular_metacyclic(5, 2),
    lambda: fam.build_family("nonsense", 3),
])
def test_parameter_errors(call):
    with pytest.raises(ValueError):
        call()


def test_relation_failure_detected():
    a, b, r = fam.metacyclic_generators(3, 2, 1)
    with pytest.raises(fam.RelationFailure):
        fam._checked({"a": a, "b": b}, ["a^b = a"], 27, "wrong")


def test_metacyclic_shapes():
    assert fam.metacyclic(3, 2, 0).group.order == 9
    rep = fam.metacyclic(3, 2, 1)
    assert rep.group.order == 27 and rep.degree == 3


def test_primitive_root_and_residues():
    assert [fam.primitive_root(p) for p in (3, 5, 7, 11)] == [2, 2, 3, 2]
    assert [x for x in range(1, 5) if fam.is_quadratic_residue(x, 5)] == [1, 4]


# induction


def test_induced_character_matches_trace():
    """Trace of the monomial construction equals the induced-character formula."""
    base = fam.modular_metacyclic(3, 3)
    G = base.group
    a = G.generators[0]
    recipe = fam.InductionRecipe(G, G.subgroup([a]), fam.power_character(G, a, zeta(9)))
    rep = fam.induce(recipe)
    for g in range(G.order):
        assert rep.matrices[g].trace() == fam.induced_character_value(recipe, g)
    # a representation: products map to products
    for g in G.generators:
        for h in range(G.order):
            assert rep.matrices[G.mul(h, g)] == rep.matrices[h] @ rep.matrices[g]


def test_induction_from_noncyclic_subgroup_recovers_natural_character():
    rep = fam.heisenberg(3)
    G = rep.group
    x, y = G.generators
    B = G.subgroup([y, G.commutator(x, y)])          # diagonal, order 9
    chi = {b: G.elements[b][0, 0] for b in B.elements}
    induced = fam.induce(fam.InductionRecipe(G, B, chi))
    assert [m.trace() for m in induced.matrices] == rep.character


def test_induction_rejects_non_homomorphism():
    G = fam.heisenberg(3).group
    x, y = G.generators
    B = G.subgroup([y])
    chi = {b: zeta(3) for b in B.elements}
    with pytest.raises(fam.NonHomomorphism):
        fam.induce(fam.InductionRecipe(G, B, chi))
    with pytest.raises(fam.NonHomomorphism):
        fam.induce(fam.InductionRecipe(G, G.whole, {g: zeta(3, 0) for g in range(G.order)}))


def test_custom_transversal():
    base = fam.modular_metacyclic(3, 3)
    G = base.group
    a = G.generators[0]
    B = G.subgroup([a])
    chi = fam.power_character(G, a, zeta(9))
    reps, label = fam.left_transversal(G, B)
    shifted = [G.mul(t, a) for t in reps]
    rep = fam.induce(fam.InductionRecipe(G, B, chi, shifted))
    assert [m.trace() for m in rep.matrices] == base.character
    with pytest.raises(ValueError):
        fam.induce(fam.InductionRecipe(G, B, chi, [reps[0]] * len(reps)))


# freeness certificates


@pytest.mark.parametrize("pts", [(3, 2, 1), (5, 3, 1), (3, 3, 1)])
def test_product_action_certificate(pts):
    cert = fam.product_action_certificate(*pts)
    p, t, s = pts
    assert cert.passed
    assert cert.group_order == p ** (t + s)
    assert cert.sphere_dims == (2 * p ** s - 1, 1)


def test_mackey_check_on_central_subgroup():
    rep = fam.modular_metacyclic(3, 3)
    G = rep.group
    B = G.subgroup([G.generators[0]])
    assert fam.mackey_free_check(rep, B, 3)
    with pytest.raises(fam.NoCentralOrderP):
        fam.mackey_free_check(rep, G.trivial, 3)


def test_product_action_brute_force():
    """Independent restatement: every nontrivial g fixes no vector or lies outside <a>."""
    rep = fam.metacyclic(3, 2, 1)
    G = rep.group
    B = G.subgroup([G.generators[0]])
    for g in range(1, G.order):
        assert fixed_dim(rep, G.cyclic_subgroup_elements(g)) == 0 or g not in B


def test_wreath_five_order():
    rep = fam.wreath(5)
    assert rep.group.order == 5 ** 6
    assert fixity(rep).fixity == 4


def test_gp_fixity_depends_on_two_part_of_p_minus_one():
    """D^k fixes a vector on each x^k-cycle iff 2(p-1) | lcm(k, p-1); at p = 7 that happens for k = 4."""
    assert fixity(fam.g_p(5)).fixity == 1
    rep = fam.g_p(7)
    G = rep.group
    D = G.generators[3]
    assert fixed_dim(rep, G.cyclic_subgroup_elements(G.power(D, 4))) == 2
    assert fixity(rep).fixity == 2
