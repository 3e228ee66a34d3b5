"""Group-core: closure, lattices, Sylow subgroups, hom enumeration,
series and splittings.  Derived values are frozen against independent
oracles (sympy's Schreier-Sims order, counting formulas, raw brute
force)."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from fusionsys.errors import (
    ClosureTooLarge,
    GroupTooLarge,
    NotAbelian,
    NotBijection,
    NotPGroup,
    NotSubgroup,
)
from fusionsys.groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    all_homs,
    automorphisms,
    characteristic_subgroups,
    cycles_to_perm,
    direct_product,
    fitting_split,
    injective_homs,
    normal_closure,
    omega_central_series,
    quotient,
    subgroups,
    sylow,
)
from fusionsys import guardrails


def perm_group(*cycle_lists, points):
    return FiniteGroup.from_permutations(
        [cycles_to_perm(c, points) for c in cycle_lists], points=points
    )


def sympy_order(*cycle_lists, points):
    perms = [
        Permutation(list(cycles_to_perm(cycles, points)))
        for cycles in cycle_lists
    ]
    return int(PermutationGroup(perms).order())


# -- closure ----------------------------------------------------------------


def test_single_three_cycle():
    G = perm_group([[1, 2, 3]], points=3)
    assert G.order == 3


def test_paired_triple_order():
    G = perm_group(
        [[1, 2, 3]], [[4, 5, 6]], [[7, 8, 9]], [[1, 2], [4, 5]], [[1, 2], [7, 8]],
        points=9,
    )
    assert G.order == 108


@pytest.mark.parametrize(
    "cycle_lists,points",
    [
        (([[1, 2]], [[1, 2, 3, 4]]), 4),
        (([[1, 2, 3]], [[1, 2], [3, 4]]), 4),
        (([[1, 2, 3, 4, 5]], [[1, 2]]), 5),
        (([[1, 2, 3, 4]], [[1, 3]]), 4),
    ],
)
def test_closure_matches_schreier_sims(cycle_lists, points):
    ours = perm_group(*cycle_lists, points=points)
    assert ours.order == sympy_order(*cycle_lists, points=points)


def test_closure_guardrail():
    small = guardrails.Guardrails().scaled_to(10)
    with pytest.raises(ClosureTooLarge):
        FiniteGroup.from_permutations(
            [cycles_to_perm([[1, 2]], 4), cycles_to_perm([[1, 2, 3, 4]], 4)],
            limits=small,
        )


def test_malformed_permutation():
    with pytest.raises(NotBijection):
        FiniteGroup.from_permutations([(0, 0, 1)])
    with pytest.raises(NotBijection):
        cycles_to_perm([[1, 2], [2, 3]], 3)


def test_identity_generator_gives_trivial_group():
    G = FiniteGroup.from_permutations([(0, 1, 2)])
    assert G.order == 1
    assert G.generators == ()
    assert len(subgroups(G)) == 1


@settings(max_examples=30, deadline=None, derandomize=True)
@given(
    st.lists(
        st.permutations(list(range(5))),
        min_size=1,
        max_size=3,
    )
)
def test_group_laws_random_generators(perms):
    G = FiniteGroup.from_permutations([tuple(p) for p in perms], points=5)
    assert G.order == int(PermutationGroup([Permutation(list(p)) for p in perms]).order())
    G.verify_axioms()


# -- subgroup enumeration -----------------------------------------------------


def test_subgroups_cyclic_prime():
    G = perm_group([[1, 2, 3]], points=3)
    assert len(subgroups(G)) == 2


def test_subgroups_counts_against_formulas():
    # elementary abelian 27: 1 + (3^3-1)/2 twice + 1 = 28 subspaces
    e27 = perm_group([[1, 2, 3]], [[4, 5, 6]], [[7, 8, 9]], points=9)
    assert len(subgroups(e27)) == 28
    # dihedral of order 2n has d(n) + sigma(n) subgroups: d(4)+sigma(4) = 3+7
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    assert len(subgroups(d8)) == 10
    # symmetric group on 4 points: 30 subgroups (classical count)
    s4 = perm_group([[1, 2]], [[1, 2, 3, 4]], points=4)
    assert len(subgroups(s4)) == 30


def test_subgroups_canonical_order_and_index():
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    subs = subgroups(d8)
    keys = [s.key() for s in subs]
    assert keys == sorted(keys)
    for i, s in enumerate(subs):
        assert s.canonical_index == i
    assert subs[0].order == 1 and subs[-1].order == 8


def test_subgroups_guardrail():
    small = guardrails.Guardrails().scaled_to(4)
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    with pytest.raises(GroupTooLarge):
        subgroups(d8, limits=small)


def test_subgroup_validation():
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    with pytest.raises(NotSubgroup):
        Subgroup(d8, (0, 1))  # r alone is not closed


# -- characteristic subgroups -------------------------------------------------


def test_characteristic_abelian():
    e9 = perm_group([[1, 2, 3]], [[4, 5, 6]], points=6)
    chars = characteristic_subgroups(e9, 3)
    assert chars.center.order == 9
    assert chars.derived.order == 1


def test_characteristic_sigma3():
    s3 = perm_group([[1, 2, 3]], [[1, 2]], points=3)
    chars = characteristic_subgroups(s3, 3)
    assert chars.center.order == 1
    assert chars.derived.order == 3
    assert chars.o_p_prime.order == 1
    # generated by the 3-elements: the rotation subgroup, not all of it
    assert chars.o_upper_p_prime.order == 3


def test_characteristic_paired_triple_group(groups):
    G = groups["sigma3-cubed-paired"]
    chars = characteristic_subgroups(G, 3)
    assert chars.o_p_prime.order == 1
    # every order-3 element lies in the Sylow subgroup: squares of the
    # mixed elements land in an axis, forcing order 2 or 6 outside
    assert chars.o_upper_p_prime.order == 27
    assert {x for x in range(G.order) if G.element_order(x) == 3} <= set(
        chars.o_upper_p_prime.members
    )


def test_o_p_prime_against_normal_scan():
    # independent route: largest coprime-order normal subgroup by scanning
    # the full subgroup lattice
    s3c2 = direct_product(
        perm_group([[1, 2, 3]], [[1, 2]], points=3),
        perm_group([[1, 2, 3]], points=3),
    ).product
    chars = characteristic_subgroups(s3c2, 2)
    best = max(
        (s for s in subgroups(s3c2) if s.is_normal() and s.order % 2),
        key=lambda s: s.order,
    )
    assert chars.o_p_prime.members == best.members
    assert chars.o_p_prime.order == 9


# -- normal closure and Sylow -------------------------------------------------


def test_normal_closure_fixed_point():
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    center = Subgroup(d8, d8.center_members(), _checked=True)
    assert normal_closure(d8, center).members == center.members


def test_normal_closure_sigma3():
    s3 = perm_group([[1, 2, 3]], [[1, 2]], points=3)
    flip = next(x for x in range(6) if s3.element_order(x) == 2)
    assert normal_closure(s3, s3.generated_subgroup([flip])).order == 6


def test_normal_closure_of_axis(groups):
    # the axis line is inverted by both sign generators, hence normal;
    # oracle: the smallest normal subgroup containing it in the lattice
    G = groups["sigma3-cubed-paired"]
    a1 = next(
        x
        for x in range(G.order)
        if G.element_order(x) == 3
        and all(G.perms[x][i] == i for i in range(3, 9))
    )
    T1 = G.generated_subgroup([a1])
    H1 = normal_closure(G, T1)
    assert H1.order == 3
    assert H1.members == T1.members


def test_sylow():
    s4 = perm_group([[1, 2]], [[1, 2, 3, 4]], points=4)
    assert sylow(s4, 2).order == 8
    assert sylow(s4, 3).order == 3
    assert sylow(s4, 5).order == 1
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    assert sylow(d8, 2).order == 8  # a p-group is its own Sylow subgroup


def test_sylow_of_paired_triple_is_axis_product(groups):
    G = groups["sigma3-cubed-paired"]
    S = sylow(G, 3)
    assert S.order == 27
    assert all(G.element_order(x) in (1, 3) for x in S.members)


def test_sylow_deterministic_least(groups):
    # all Sylow subgroups are conjugate; ours must be the least member tuple
    s4 = groups["sym4"]
    S = sylow(s4, 2)
    conjugates = {
        tuple(sorted(s4.conj(g, x) for x in S.members)) for g in range(24)
    }
    assert S.members == min(conjugates)


# -- homomorphism enumeration --------------------------------------------------


def test_trivial_domain_hom():
    c3 = perm_group([[1, 2, 3]], points=3)
    triv = c3.trivial_subgroup()
    homs = injective_homs(triv, c3.full_subgroup())
    assert len(homs) == 1 and homs[0].images == (0,)


def test_automorphism_counts():
    c3 = perm_group([[1, 2, 3]], points=3)
    assert len(automorphisms(c3)) == 2
    v4 = perm_group([[1, 2]], [[3, 4]], points=4)
    assert len(automorphisms(v4)) == 6


def test_v4_automorphisms_raw_bruteforce():
    # oracle: all 4^4 self-maps filtered by the homomorphism and
    # bijectivity definitions, no backtracking involved
    v4 = perm_group([[1, 2]], [[3, 4]], points=4)
    count = 0
    for images in itertools.product(range(4), repeat=4):
        if images[0] != 0 or len(set(images)) != 4:
            continue
        if all(
            images[v4.mul(x, y)] == v4.mul(images[x], images[y])
            for x in range(4)
            for y in range(4)
        ):
            count += 1
    assert count == len(automorphisms(v4)) == 6


def test_hom_counts_elementary_abelian():
    # linear-algebra oracle: |Hom((C3)^2, (C3)^2)| = 3^4, |GL_2(3)| = 48
    e9 = perm_group([[1, 2, 3]], [[4, 5, 6]], points=6)
    full = e9.full_subgroup()
    assert len(all_homs(full, full)) == 81
    assert len(automorphisms(e9)) == 48


def test_injective_homs_between_different_sizes():
    c2 = perm_group([[1, 2]], points=2)
    c4 = perm_group([[1, 2, 3, 4]], points=4)
    assert injective_homs(c4.full_subgroup(), c2.full_subgroup()) == []
    into = injective_homs(c2.full_subgroup(), c4.full_subgroup())
    assert len(into) == 1  # only the order-2 element is available


# -- quotients and the omega series -------------------------------------------


def test_quotient_d8_by_center():
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    z = Subgroup(d8, d8.center_members(), _checked=True)
    quo, label = quotient(d8, z)
    assert quo.order == 4
    assert all(quo.mul(x, x) == 0 for x in range(4))  # Klein four-group
    assert label[0] == 0


def test_omega_series_examples():
    c9 = perm_group([[1, 2, 3, 4, 5, 6, 7, 8, 9]], points=9)
    assert [t.order for t in omega_central_series(c9).terms] == [1, 3, 9]
    c4 = perm_group([[1, 2, 3, 4]], points=4)
    assert [t.order for t in omega_central_series(c4).terms] == [1, 2, 4]
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    assert [t.order for t in omega_central_series(d8).terms] == [1, 2, 8]
    e9 = perm_group([[1, 2, 3]], [[4, 5, 6]], points=6)
    assert [t.order for t in omega_central_series(e9).terms] == [1, 9]


def test_omega_series_rejects_non_p_group():
    s3 = perm_group([[1, 2, 3]], [[1, 2]], points=3)
    with pytest.raises(NotPGroup):
        omega_central_series(s3)


# -- fitting split -------------------------------------------------------------


def test_fitting_split_identity_zero():
    c4 = perm_group([[1, 2, 3, 4]], points=4)
    full = c4.full_subgroup()
    T, U = fitting_split(c4, GroupHom(full, full, tuple(range(4))))
    assert (T.order, U.order) == (4, 1)
    T, U = fitting_split(c4, GroupHom(full, full, (0, 0, 0, 0)))
    assert (T.order, U.order) == (1, 4)


def test_fitting_split_mixed():
    c2c4 = direct_product(
        perm_group([[1, 2]], points=2), perm_group([[1, 2, 3, 4]], points=4)
    ).product
    full = c2c4.full_subgroup()
    # kill the order-4 generator, keep the involution: f(a,c) = (a,1)
    images = tuple((x // 4) * 4 for x in range(8))
    T, U = fitting_split(c2c4, GroupHom(full, full, images))
    assert T.order == 2 and U.order == 4
    assert T.member_set == {0, 4}
    assert U.member_set == {0, 1, 2, 3}


def test_fitting_split_requires_abelian():
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    full = d8.full_subgroup()
    with pytest.raises(NotAbelian):
        fitting_split(d8, GroupHom(full, full, tuple(range(8))))


# -- direct products -----------------------------------------------------------


def test_direct_product_trivial_factor():
    c3 = perm_group([[1, 2, 3]], points=3)
    triv = FiniteGroup.from_cayley([[0]])
    dp = direct_product(c3, triv)
    assert dp.product.order == 3
    assert sorted(dp.product.element_order(x) for x in range(3)) == [1, 3, 3]


def test_direct_product_c2_c2():
    c2 = perm_group([[1, 2]], points=2)
    dp = direct_product(c2, c2)
    assert dp.product.order == 4
    assert all(dp.product.mul(x, x) == 0 for x in range(4))


def test_direct_product_d8_c2_center():
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    c2 = perm_group([[1, 2]], points=2)
    dp = direct_product(d8, c2)
    assert dp.product.order == 16
    assert len(dp.product.center_members()) == 4
    # embeddings and projections compose to the identity on each factor
    for emb, proj in ((dp.embed1, dp.proj1), (dp.embed2, dp.proj2)):
        assert proj.compose(emb).images == tuple(range(emb.domain.order))


def test_cayley_round_trip():
    d8 = perm_group([[1, 2, 3, 4]], [[1, 3]], points=4)
    rows = [[d8.mul(a, b) for b in range(8)] for a in range(8)]
    rebuilt = FiniteGroup.from_cayley(rows)
    assert rebuilt.order == 8
    rebuilt.verify_axioms()
    bad = [row[:] for row in rows]
    bad[3][4] = 0 if bad[3][4] else 1
    with pytest.raises(NotSubgroup):
        FiniteGroup.from_cayley(bad)
