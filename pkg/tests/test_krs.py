"""Certificates linking factorizations, equivariant refinements, and the
automorphism-group structure of factorized systems."""

import itertools

import pytest

from fusionsys import catalog
from fusionsys.errors import HypothesisFailed
from fusionsys.groups import Subgroup, direct_product, sylow
from fusionsys.fusion import fusion_of_group
from fusionsys.morphisms import check_morphism
from fusionsys.factor import (
    OmegaContext,
    aut_structure,
    factorize,
    factorize_all,
    find_isomorphism,
    fusion_automorphisms,
    goldschmidt_factor,
    krs_certificate,
    normal_automorphisms,
)


def fusion(name):
    return catalog.built(name).fusion


# -- certificates ------------------------------------------------------------


def test_same_factorization_gives_identity():
    F = fusion("inner-c2c2")
    fact = factorize(F)
    cert = krs_certificate(F, fact, fact)
    assert cert.alpha.images == tuple(range(4))
    assert cert.sigma == (0, 1)
    assert cert.constructive


def test_v4_line_pairs_nonidentity_alpha():
    F = fusion("inner-c2c2")
    facts = factorize_all(F)
    assert len(facts) == 3
    enumerated = {a.images for a in normal_automorphisms(F)}
    assert len(enumerated) == 6
    seen_nonidentity = False
    for f1, f2 in itertools.combinations(facts, 2):
        cert = krs_certificate(F, f1, f2)
        assert cert.constructive
        assert cert.alpha.images in enumerated
        if cert.alpha.images != tuple(range(4)):
            seen_nonidentity = True
        # the certificate transports each part base exactly
        for i, part in enumerate(f1.parts):
            target = f2.parts[cert.sigma[i]].base.member_set
            assert {cert.alpha.images[x] for x in part.base.members} == target
    assert seen_nonidentity


@pytest.mark.parametrize("name", ["inner-c2c4", "inner-c3c3", "inner-c2c2"])
def test_constructive_matches_fallback(name):
    F = fusion(name)
    facts = factorize_all(F)
    for f1, f2 in itertools.combinations(facts, 2):
        cert = krs_certificate(F, f1, f2)
        fallback = krs_certificate(F, f1, f2, force_fallback=True)
        assert not fallback.constructive
        # both certificates transport the parts per their own sigma
        for c in (cert, fallback):
            for i, part in enumerate(f1.parts):
                target = f2.parts[c.sigma[i]].base.member_set
                assert {c.alpha.images[x] for x in part.base.members} == target


def test_fallback_respects_omega():
    F = fusion("inner-c2c4")
    inv = tuple(F.base.inv(x) for x in range(8))
    omega = OmegaContext.from_morphisms(F, [check_morphism(F, F, inv)])
    facts = factorize_all(F, omega)
    cert = krs_certificate(F, facts[0], facts[1], omega, force_fallback=True)
    assert not cert.constructive
    assert omega.commutes_with(cert.alpha.images)


def test_certificate_log_members_are_normal_automorphisms():
    F = fusion("inner-c3c3")
    facts = factorize_all(F)
    cert = krs_certificate(F, facts[0], facts[-1])
    enumerated = {a.images for a in normal_automorphisms(F)}
    for h in cert.construction_log:
        assert h.images in enumerated


def test_rejects_foreign_factorization():
    from fusionsys.errors import NotSubsystem

    F = fusion("inner-c2c2")
    other = fusion("inner-c2c4")
    fact_other = factorize(other)
    fact = factorize(F)
    with pytest.raises(NotSubsystem):
        krs_certificate(F, fact, fact_other)


def test_rigid_pairs_have_identity_alpha():
    for name in ["sigma3-cubed-full", "sigma3-squared", "dihedral18-sigma3"]:
        F = fusion(name)
        asc = factorize(F)
        desc = factorize(F, search_order="desc")
        assert asc.key() == desc.key()
        cert = krs_certificate(F, asc, desc)
        assert cert.alpha.images == tuple(range(F.base.order))


# -- equivariant version -------------------------------------------------------


def test_omega_restricts_factorizations():
    F = fusion("inner-c2c2c2")
    G = F.base
    sigma = (2, 3, 4, 5, 0, 1)
    sigma_inv = (4, 5, 0, 1, 2, 3)
    index = {G.perms[x]: x for x in range(8)}
    rot = tuple(
        index[tuple(sigma[G.perms[x][sigma_inv[pt]]] for pt in range(6))]
        for x in range(8)
    )
    omega = OmegaContext.from_morphisms(F, [check_morphism(F, F, rot)])
    assert len(omega.closure) == 3
    plain = factorize_all(F)
    invariant = factorize_all(F, omega)
    assert len(plain) == 28
    assert len(invariant) == 1
    assert sorted(len(b) for b in invariant[0].bases) == [2, 4]
    cert = krs_certificate(F, invariant[0], invariant[0], omega)
    assert cert.alpha.images == tuple(range(8))


def test_omega_inversion_certificates():
    F = fusion("inner-c2c4")
    inv = tuple(F.base.inv(x) for x in range(8))
    omega = OmegaContext.from_morphisms(F, [check_morphism(F, F, inv)])
    facts = factorize_all(F, omega)
    assert len(facts) == 4  # inversion preserves every subgroup
    enumerated = {a.images for a in normal_automorphisms(F, omega)}
    for f1, f2 in itertools.combinations(facts, 2):
        cert = krs_certificate(F, f1, f2, omega)
        assert omega.commutes_with(cert.alpha.images)
        assert cert.alpha.images in enumerated


# -- automorphism structure -------------------------------------------------------


def test_aut_structure_twin_parts(sigma3_squared_aligned):
    big, F1 = sigma3_squared_aligned
    fact = factorize(big)
    st = aut_structure(big, fact)
    assert st.aut_order == 8
    assert st.aut0_order == 4
    assert st.gamma == ((0, 1), (1, 0))
    assert st.part_aut_orders == (2, 2)
    # the section realizes the swap as an actual automorphism
    swap = st.section[(1, 0)]
    assert {swap[x] for x in fact.parts[0].base.members} == fact.parts[
        1
    ].base.member_set


def test_aut_structure_brute_force_oracle(sigma3_squared_aligned):
    # frozen values cross-checked against the raw automorphism count
    big, F1 = sigma3_squared_aligned
    assert len(fusion_automorphisms(big)) == 8
    assert len(fusion_automorphisms(F1)) == 2


def test_aut_structure_non_isomorphic_parts():
    s3 = catalog.built("sigma3").group
    d18 = catalog.built("dihedral18").group
    dp = direct_product(s3, d18)
    S1, S2 = sylow(s3, 3), sylow(d18, 3)
    members = [a * 18 + b for a in S1.members for b in S2.members]
    big = fusion_of_group(dp.product, 3, Subgroup(dp.product, members, _checked=True))
    fact = factorize(big)
    assert len(fact.parts) == 2
    assert find_isomorphism(fact.parts[0].system, fact.parts[1].system) is None
    st = aut_structure(big, fact)
    assert st.gamma == ((0, 1),)
    assert st.aut_order == st.aut0_order


def test_aut_structure_single_part():
    F = fusion("sym4")
    st = aut_structure(F, factorize(F))
    assert st.gamma == ((0,),)
    assert st.aut_order == st.aut0_order


def test_aut_structure_hypothesis_guard():
    F = fusion("inner-c2c2")
    with pytest.raises(HypothesisFailed):
        aut_structure(F, factorize(F))


# -- transfer to a realizing group ---------------------------------------------


def test_goldschmidt_two_group():
    b = catalog.built("inner-c2c2")
    closures = goldschmidt_factor(b.group, factorize(b.fusion))
    assert sorted(h.order for h in closures) == [2, 2]
    # for a 2-group realizing its own fusion the closures are the parts
    fact = factorize(b.fusion)
    for part, H in zip(fact.parts, closures):
        assert H.members == part.base.members


def test_goldschmidt_recovers_componentwise():
    b = catalog.built("sym4-c2")
    fact = factorize(b.fusion)
    closures = goldschmidt_factor(b.group, fact)
    assert sorted(h.order for h in closures) == [2, 24]
    big_part = max(closures, key=lambda h: h.order)
    small_part = min(closures, key=lambda h: h.order)
    # the order-24 closure is the embedded symmetric-group factor: it
    # fixes the two extra points, and the order-2 closure moves only them
    assert all(
        b.group.perms[x][4] == 4 and b.group.perms[x][5] == 5
        for x in big_part.members
    )
    assert all(
        b.group.perms[x][:4] == (0, 1, 2, 3) for x in small_part.members
    )


def test_goldschmidt_indecomposable_single_closure():
    b = catalog.built("sym4")
    F = b.fusion
    fact = factorize(F)
    assert len(fact.parts) == 1
    closures = goldschmidt_factor(b.group, fact)
    assert len(closures) == 1
    assert closures[0].order == 24


def test_goldschmidt_hypothesis_guard():
    b = catalog.built("sigma3")
    with pytest.raises(HypothesisFailed):
        goldschmidt_factor(b.group, factorize(b.fusion), p=3)
    alt = catalog.built("alt4")
    with pytest.raises(HypothesisFailed):
        # the alternating group is not generated by its 2-elements
        goldschmidt_factor(alt.group, factorize(alt.fusion))