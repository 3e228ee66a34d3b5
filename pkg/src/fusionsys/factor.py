"""Normal endomorphisms, factorization and Krull-Remak-Schmidt certificates.

The certificate construction follows the classical projection-swap
argument: given two factorizations, repeatedly replace one factor of the
second factorization by a factor of the first via an invertible normal
endomorphism built from projections, then take the inverse of the
composite.  Every constructed automorphism is re-verified from scratch
(normality, invertibility, equivariance), and an exhaustive search over
all normal automorphisms is available as an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    HypothesisFailed,
    InternalInconsistency,
    NotCommuting,
    NotFusionPreserving,
    NotNormal,
    NotSaturated,
    NotSubgroup,
    NotSummable,
    GuardrailExceeded,
)
from . import guardrails
from .groups import (
    FiniteGroup,
    Subgroup,
    injective_homs,
    normal_closure,
    p_part,
    characteristic_subgroups,
    sylow,
)
from .fusion import (
    FusionSystem,
    MapTuple,
    center_of,
    focal_of,
    fusion_equal,
    fusion_of_group,
    is_saturated,
    is_strongly_closed,
    restrict_full,
    saturation_report,
)
from .morphisms import (
    FusionMorphism,
    Subsystem,
    check_morphism,
    commute_check,
    identity_morphism,
    image,
    is_product_decomposition,
    subsystem_of,
    sum_morphisms,
)


# ---------------------------------------------------------------------------
# normal endomorphisms


@dataclass(frozen=True)
class NormalEndomorphism:
    morphism: FusionMorphism
    complement: FusionMorphism
    surjective: bool
    invertible: bool

    @property
    def images(self) -> MapTuple:
        return self.morphism.images


def _surjective_normal_criterion(F: FusionSystem, images: MapTuple) -> bool:
    """[f,S] inside the center with f fixing the focal subgroup."""
    G = F.base
    displacement = {G.mul(G.inv(x), images[x]) for x in range(G.order)}
    bracket = G.generated_subgroup(displacement)
    if not bracket.member_set <= center_of(F).member_set:
        return False
    return all(images[x] == x for x in focal_of(F).members)


def normal_complement(F: FusionSystem, f: FusionMorphism) -> NormalEndomorphism:
    """Accept ``f`` as normal by constructing its forced complement.

    The complement candidate sends x to f(x)^-1 x; ``f`` is normal exactly
    when that map is a fusion-preserving homomorphism whose image commutes
    with the image of ``f``.  For surjective ``f`` the center/focal
    criterion is cross-checked and any disagreement is fatal.
    """
    if f.source is not F or f.target is not F:
        raise NotSubgroup("normality is only defined for endomorphisms")
    G = F.base
    chi_images = tuple(G.mul(G.inv(f.images[x]), x) for x in range(G.order))
    failure: Optional[NotNormal] = None
    chi = None
    hom_ok = all(
        chi_images[G.mul(x, y)] == G.mul(chi_images[x], chi_images[y])
        for x in range(G.order)
        for y in range(G.order)
    )
    if not hom_ok:
        failure = NotNormal("complement is not a homomorphism")
    if failure is None:
        try:
            chi = check_morphism(F, F, chi_images)
        except NotFusionPreserving as exc:
            failure = NotNormal(
                "complement is not fusion-preserving", witness=exc.witness
            )
    if failure is None:
        try:
            total = sum_morphisms([f, chi])
        except NotSummable as exc:
            failure = NotNormal(
                "images of f and its complement do not commute",
                witness=exc.witness,
            )
        else:
            if total.images != tuple(range(G.order)):
                raise InternalInconsistency("f plus its complement is not the identity")

    surjective = len(set(f.images)) == G.order
    if surjective:
        criterion = _surjective_normal_criterion(F, f.images)
        if criterion != (failure is None):
            raise InternalInconsistency(
                "surjective normality criterion disagrees with the complement test"
            )
    if failure is not None:
        raise failure
    # a bijective endomorphism of a finite-based system is an automorphism:
    # the induced functor injects the finite morphism set into itself
    return NormalEndomorphism(f, chi, surjective, surjective)


def is_normal_endo(F: FusionSystem, f: FusionMorphism) -> bool:
    try:
        normal_complement(F, f)
        return True
    except NotNormal:
        return False


@dataclass(frozen=True)
class OmegaContext:
    """A finite automorphism group of the system, given by generators."""

    generators: tuple[FusionMorphism, ...]
    closure: tuple[MapTuple, ...]

    @classmethod
    def from_morphisms(
        cls,
        F: FusionSystem,
        gens: Sequence[FusionMorphism],
        *,
        limits: Optional[guardrails.Guardrails] = None,
    ) -> "OmegaContext":
        limits = limits or guardrails.active()
        for w in gens:
            if w.source is not F or w.target is not F:
                raise NotSubgroup("context generators must be endomorphisms")
            if not (w.is_injective and w.is_surjective):
                raise NotSubgroup("context generators must be invertible")
        ident = tuple(range(F.base.order))
        closure = {ident}
        frontier = [ident]
        gen_maps = [w.images for w in gens]
        while frontier:
            nxt = []
            for cur in frontier:
                for g in gen_maps:
                    comp = tuple(cur[v] for v in g)
                    if comp not in closure:
                        closure.add(comp)
                        nxt.append(comp)
                        if len(closure) > limits.omega_limit:
                            raise GuardrailExceeded(
                                f"automorphism context exceeds {limits.omega_limit}"
                            )
            frontier = nxt
        return cls(tuple(gens), tuple(sorted(closure)))

    def commutes_with(self, images: MapTuple) -> bool:
        return all(
            tuple(images[v] for v in w.images)
            == tuple(w.images[v] for v in images)
            for w in self.generators
        )

    def fixes_subgroup(self, members: Iterable[int]) -> bool:
        target = set(members)
        return all({w.images[x] for x in target} == target for w in self.generators)

    def restrict_to(self, F: FusionSystem, T: Subgroup, E: FusionSystem) -> "OmegaContext":
        if not self.fixes_subgroup(T.members):
            raise NotSubgroup("context does not preserve the subgroup")
        pos = {m: t for t, m in enumerate(T.members)}
        gens = []
        for w in self.generators:
            gens.append(
                check_morphism(E, E, tuple(pos[w.images[m]] for m in T.members))
            )
        return OmegaContext.from_morphisms(E, gens)


def trivial_omega(F: FusionSystem) -> OmegaContext:
    return OmegaContext.from_morphisms(F, [])


# ---------------------------------------------------------------------------
# enumeration of endomorphisms and automorphisms


def _hom_candidates(F: FusionSystem, *, injective: bool) -> list[MapTuple]:
    full = F.base.full_subgroup()
    homs = injective_homs(full, full, injective=injective)
    return [h.images for h in homs]


def fusion_endomorphisms(F: FusionSystem) -> list[FusionMorphism]:
    """All fusion-preserving self-maps, in image-tuple order."""
    cached = getattr(F, "_endo_cache", None)
    if cached is not None:
        return cached
    out = []
    for images in _hom_candidates(F, injective=False):
        try:
            out.append(check_morphism(F, F, images, hom_checked=True))
        except NotFusionPreserving:
            continue
    F._endo_cache = out
    return out


def fusion_automorphisms(F: FusionSystem) -> list[FusionMorphism]:
    cached = getattr(F, "_aut_cache", None)
    if cached is not None:
        return cached
    out = []
    for images in _hom_candidates(F, injective=True):
        try:
            out.append(check_morphism(F, F, images, hom_checked=True))
        except NotFusionPreserving:
            continue
    F._aut_cache = out
    return out


def normal_endos(
    F: FusionSystem,
    omega: Optional[OmegaContext] = None,
    *,
    monoid_check_limit: int = 60,
) -> list[NormalEndomorphism]:
    """All normal (optionally equivariant) endomorphisms of ``F``.

    Composition closure of the result is asserted, exhaustively up to
    ``monoid_check_limit`` members and on a deterministic slice beyond.
    """
    out = []
    for m in fusion_endomorphisms(F):
        if omega is not None and not omega.commutes_with(m.images):
            continue
        try:
            out.append(normal_complement(F, m))
        except NotNormal:
            continue
    image_set = {ne.images for ne in out}
    pool = out if len(out) <= monoid_check_limit else out[:monoid_check_limit]
    for a in pool:
        for b in pool:
            comp = tuple(a.images[v] for v in b.images)
            if comp not in image_set:
                raise InternalInconsistency(
                    "normal endomorphisms are not closed under composition"
                )
    return out


def normal_automorphisms(
    F: FusionSystem,
    omega: Optional[OmegaContext] = None,
    *,
    validate_limit: int = 64,
) -> list[FusionMorphism]:
    """All invertible normal (equivariant) endomorphisms, via the
    surjective criterion.

    Survivors are re-validated through the complement construction (which
    itself cross-checks the criterion); beyond ``validate_limit`` members
    only a deterministic prefix is re-validated.
    """
    out = []
    for m in fusion_automorphisms(F):
        if not _surjective_normal_criterion(F, m.images):
            continue
        if omega is not None and not omega.commutes_with(m.images):
            continue
        out.append(m)
    for m in out[:validate_limit]:
        normal_complement(F, m)
    return out


# ---------------------------------------------------------------------------
# structure of a single normal endomorphism


@dataclass(frozen=True)
class NormalEndReport:
    commuting_complement: bool
    cross_images_agree: bool
    image_strongly_closed: bool
    centralizes_base_automorphisms: bool
    image_is_full_restriction: bool
    image_saturated: bool


def normal_end_properties(F: FusionSystem, ne: NormalEndomorphism) -> NormalEndReport:
    """Verify the structural facts about a normal endomorphism of a
    saturated system; any failure is an internal inconsistency."""
    if not is_saturated(F):
        raise NotSaturated("properties are stated for saturated systems")
    G = F.base
    f, chi = ne.morphism.images, ne.complement.images
    t_set = frozenset(f)
    u_set = frozenset(chi)

    commuting = all(f[chi[x]] == chi[f[x]] for x in range(G.order))
    f_of_u = frozenset(f[x] for x in u_set)
    chi_of_t = frozenset(chi[x] for x in t_set)
    overlap = t_set & u_set
    cross = f_of_u == chi_of_t == overlap
    if not overlap <= center_of(F).member_set:
        raise InternalInconsistency("image overlap escapes the center")

    t_idx = F.index_of(sorted(t_set))
    strongly = is_strongly_closed(F, t_idx)

    central = all(
        tuple(f[w[x]] for x in range(G.order)) == tuple(w[f[x]] for x in range(G.order))
        for w in F.aut_maps(F.lattice.full_index)
    )

    T = Subgroup(G, t_set, _checked=True)
    restricted = restrict_full(F, T)
    pushed: set[tuple[tuple[int, ...], MapTuple]] = set()
    for dom_idx, ms in enumerate(F.maps):
        for phi in ms:
            new_idx, new_map = ne.morphism.push_map(dom_idx, phi)
            pushed.add((F.lattice.subs[new_idx].members, new_map))
    full_maps = {
        (members, mp)
        for members, mp in Subsystem(T, restricted).translated_maps()
    }
    image_full = pushed == full_maps
    image_sat = saturation_report(restricted).verdict

    report = NormalEndReport(
        commuting, cross, strongly, central, image_full, image_sat
    )
    for name, ok in report.__dict__.items():
        if not ok:
            raise InternalInconsistency(f"normal endomorphism clause failed: {name}")
    return report


@dataclass(frozen=True)
class FittingSplit:
    stable: Subsystem      # f restricts to a normal automorphism here
    nil: Subsystem         # f restricts to a nilpotent normal endomorphism
    power: int


def _stable_image_kernel(G: FiniteGroup, images: MapTuple) -> tuple[frozenset, frozenset, int]:
    current = list(images)
    n = 1
    while True:
        nxt = [images[v] for v in current]
        if frozenset(nxt) == frozenset(current):
            break
        current = nxt
        n += 1
    image = frozenset(current)
    kern = frozenset(x for x in range(G.order) if current[x] == 0)
    return image, kern, n


def fitting_factorize(
    F: FusionSystem,
    ne: NormalEndomorphism,
    *,
    verify_uniqueness: Optional[bool] = None,
) -> FittingSplit:
    """Split ``F`` along the stable image and kernel of a normal
    endomorphism.  Brute-force uniqueness is verified for small bases."""
    if not is_saturated(F):
        raise NotSaturated("splitting requires a saturated system")
    G = F.base
    images = ne.images
    t_set, u_set, power = _stable_image_kernel(G, images)
    T = Subgroup(G, t_set, _checked=True)
    U = Subgroup(G, u_set, _checked=True)
    E = restrict_full(F, T)
    D = restrict_full(F, U)
    sub_e, sub_d = Subsystem(T, E), Subsystem(U, D)
    if not is_product_decomposition(F, [sub_e, sub_d]):
        raise InternalInconsistency("stable image and kernel do not split the system")

    pos_t = {m: t for t, m in enumerate(T.members)}
    f_on_t = tuple(pos_t[images[m]] for m in T.members)
    restricted_t = check_morphism(E, E, f_on_t)
    if not (restricted_t.is_injective and restricted_t.is_surjective):
        raise InternalInconsistency("endomorphism is not bijective on its stable image")
    normal_complement(E, restricted_t)

    pos_u = {m: t for t, m in enumerate(U.members)}
    f_on_u = tuple(pos_u[images[m]] for m in U.members)
    restricted_u = check_morphism(D, D, f_on_u)
    stable_u, _, _ = _stable_image_kernel(D.base, restricted_u.images)
    if stable_u != frozenset({0}):
        raise InternalInconsistency("endomorphism is not nilpotent on the kernel part")
    normal_complement(D, restricted_u)

    if verify_uniqueness is None:
        verify_uniqueness = G.order <= 64
    if verify_uniqueness:
        expected = (T.members, U.members)
        for cand in _fitting_candidates(F, images):
            if cand != expected:
                raise InternalInconsistency(
                    f"second stable/nil splitting found: {cand}"
                )
    return FittingSplit(sub_e, sub_d, power)


def _fitting_candidates(F: FusionSystem, images: MapTuple):
    """All internal two-part decompositions on which the endomorphism is
    an automorphism of one side and nilpotent on the other."""
    G = F.base
    subs = F.lattice.subs
    n = G.order
    for i, Ti in enumerate(subs):
        ti = Ti.member_set
        if {images[x] for x in ti} != ti:
            continue
        for j, Uj in enumerate(subs):
            uj = Uj.member_set
            if Ti.order * Uj.order != n or (ti & uj) != {0}:
                continue
            if any(images[x] not in uj for x in uj):
                continue
            # nilpotency of the restriction to Uj
            cur = {images[x] for x in uj}
            while True:
                nxt = {images[x] for x in cur}
                if nxt == cur:
                    break
                cur = nxt
            if cur != {0}:
                continue
            if not all(
                G.mul(a, b) == G.mul(b, a) for a in ti for b in uj
            ):
                continue
            if len({G.mul(a, b) for a in ti for b in uj}) != n:
                continue
            if not (is_strongly_closed(F, i) and is_strongly_closed(F, j)):
                continue
            if not is_product_decomposition(
                F, [subsystem_of(F, Ti), subsystem_of(F, Uj)]
            ):
                continue
            yield (Ti.members, Uj.members)


# ---------------------------------------------------------------------------
# factorization into indecomposable parts


@dataclass(frozen=True)
class Factorization:
    parts: tuple[Subsystem, ...]
    witness: FusionMorphism

    @property
    def bases(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.base.members for p in self.parts)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.bases))


def _admissible_splits(
    F: FusionSystem, omega: Optional[OmegaContext]
) -> list[tuple[int, int]]:
    """Candidate (T, U) index pairs for a direct split of ``F``."""
    G = F.base
    subs = F.lattice.subs
    n = G.order
    eligible = []
    for i in range(len(subs)):
        if 1 < subs[i].order < n and is_strongly_closed(F, i):
            if omega is None or omega.fixes_subgroup(subs[i].members):
                eligible.append(i)
    out = []
    for a_pos, i in enumerate(eligible):
        ti = subs[i].member_set
        for j in eligible[a_pos + 1 :]:
            uj = subs[j].member_set
            if subs[i].order * subs[j].order != n:
                continue
            if (ti & uj) != {0}:
                continue
            if not all(G.mul(a, b) == G.mul(b, a) for a in subs[i].members for b in uj):
                continue
            out.append((i, j))
    return out


def _split_works(F: FusionSystem, i: int, j: int) -> Optional[tuple[Subsystem, Subsystem]]:
    sub_i = subsystem_of(F, F.lattice.subs[i])
    sub_j = subsystem_of(F, F.lattice.subs[j])
    try:
        ok = is_product_decomposition(F, [sub_i, sub_j])
    except NotCommuting:
        return None
    if not ok:
        raise InternalInconsistency(
            "strongly closed commuting split failed to cover the system"
        )
    # factors of a saturated system are saturated
    for sub in (sub_i, sub_j):
        if not is_saturated(sub.system):
            raise InternalInconsistency("direct factor is not saturated")
    return sub_i, sub_j


def factorize(
    F: FusionSystem,
    omega: Optional[OmegaContext] = None,
    *,
    search_order: str = "asc",
) -> Factorization:
    """Greedy factorization into indecomposable (equivariant) parts."""
    if not is_saturated(F):
        raise NotSaturated("factorization requires a saturated system")
    bases = _factor_bases(F, omega, search_order=search_order)
    return _assemble_factorization(F, bases)


def _factor_bases(
    F: FusionSystem, omega: Optional[OmegaContext], *, search_order: str
) -> list[tuple[int, ...]]:
    splits = _admissible_splits(F, omega)
    if search_order == "desc":
        splits = list(reversed(splits))
    for i, j in splits:
        found = _split_works(F, i, j)
        if found is None:
            continue
        sub_i, sub_j = found
        parts = []
        for sub in (sub_i, sub_j):
            nested_omega = (
                omega.restrict_to(F, sub.base, sub.system) if omega is not None else None
            )
            for inner in _factor_bases(sub.system, nested_omega, search_order=search_order):
                parts.append(tuple(sub.base.members[t] for t in inner))
        return parts
    return [tuple(range(F.base.order))] if F.base.order > 1 else []


def _assemble_factorization(
    F: FusionSystem, bases: Sequence[tuple[int, ...]]
) -> Factorization:
    if not bases:
        bases = [tuple(range(F.base.order))]
    ordered = sorted(bases, key=lambda m: (len(m), m))
    parts = tuple(
        subsystem_of(F, Subgroup(F.base, members, _checked=True))
        for members in ordered
    )
    if not is_product_decomposition(F, list(parts)):
        raise InternalInconsistency("assembled parts do not factor the system")
    witness = commute_check(F, list(parts), build_inner=False).morphism
    return Factorization(parts, witness)


def factorize_all(
    F: FusionSystem, omega: Optional[OmegaContext] = None
) -> list[Factorization]:
    """Every factorization into indecomposable (equivariant) parts."""
    if not is_saturated(F):
        raise NotSaturated("factorization requires a saturated system")
    memo: dict = {}

    def content_key(sys: FusionSystem):
        if sys.base.order > 64:
            return id(sys)
        table = tuple(
            sys.base.mul(a, b)
            for a in range(sys.base.order)
            for b in range(sys.base.order)
        )
        return (table, sys.maps)

    def rec(sys: FusionSystem, og: Optional[OmegaContext]) -> list[tuple[tuple[int, ...], ...]]:
        key = (
            content_key(sys),
            og.closure if og is not None else None,
        )
        if key in memo:
            return memo[key]
        results: set[tuple[tuple[int, ...], ...]] = set()
        for i, j in _admissible_splits(sys, og):
            found = _split_works(sys, i, j)
            if found is None:
                continue
            sub_i, sub_j = found
            og_i = og.restrict_to(sys, sub_i.base, sub_i.system) if og is not None else None
            og_j = og.restrict_to(sys, sub_j.base, sub_j.system) if og is not None else None
            for left in rec(sub_i.system, og_i):
                for right in rec(sub_j.system, og_j):
                    combo = tuple(
                        sorted(
                            [tuple(sub_i.base.members[t] for t in m) for m in left]
                            + [tuple(sub_j.base.members[t] for t in m) for m in right]
                        )
                    )
                    results.add(combo)
        if not results:
            results = {(tuple(range(sys.base.order)),)} if sys.base.order > 1 else {()}
        out = sorted(results)
        memo[key] = out
        return out

    return [
        _assemble_factorization(F, list(bases)) for bases in rec(F, omega)
    ]


def is_indecomposable(
    F: FusionSystem, omega: Optional[OmegaContext] = None
) -> bool:
    for i, j in _admissible_splits(F, omega):
        if _split_works(F, i, j) is not None:
            return False
    return True


# ---------------------------------------------------------------------------
# KRS certificate


@dataclass(frozen=True)
class KrsCertificate:
    alpha: NormalEndomorphism
    sigma: tuple[int, ...]
    construction_log: tuple[FusionMorphism, ...]
    constructive: bool
    note: Optional[str] = None


def _decomposition_components(
    G: FiniteGroup, bases: Sequence[tuple[int, ...]]
) -> dict[int, tuple[int, ...]]:
    """Unique factor components of every element of an internal direct
    product."""
    decomp: dict[int, tuple[int, ...]] = {0: ()}
    for members in bases:
        new = {}
        for x, comps in decomp.items():
            for t in members:
                y = G.mul(x, t)
                if y in new:
                    raise InternalInconsistency("bases do not decompose independently")
                new[y] = comps + (t,)
        decomp = new
    if len(decomp) != G.order:
        raise InternalInconsistency("bases do not span the group")
    return decomp


def _projections(G: FiniteGroup, bases: Sequence[tuple[int, ...]]) -> list[MapTuple]:
    decomp = _decomposition_components(G, bases)
    out = []
    for i in range(len(bases)):
        out.append(tuple(decomp[x][i] for x in range(G.order)))
    return out


def _complement_projection(
    G: FiniteGroup, bases: Sequence[tuple[int, ...]], drop: int
) -> MapTuple:
    decomp = _decomposition_components(G, bases)
    images = []
    for x in range(G.order):
        acc = 0
        for i, t in enumerate(decomp[x]):
            if i != drop:
                acc = G.mul(acc, t)
        images.append(acc)
    return tuple(images)


def _check_factorization_input(
    F: FusionSystem, fact: Factorization, omega: Optional[OmegaContext]
) -> None:
    if not is_product_decomposition(F, list(fact.parts)):
        raise NotSubgroup("input is not a factorization of the system")
    for part in fact.parts:
        og = omega.restrict_to(F, part.base, part.system) if omega is not None else None
        if omega is not None and not omega.fixes_subgroup(part.base.members):
            raise NotSubgroup("factorization part is not invariant under the context")
        if not is_indecomposable(part.system, og):
            raise NotSubgroup("factorization part is decomposable")


def krs_certificate(
    F: FusionSystem,
    fact1: Factorization,
    fact2: Factorization,
    omega: Optional[OmegaContext] = None,
    *,
    force_fallback: bool = False,
) -> KrsCertificate:
    """Normal automorphism alpha and permutation sigma with
    alpha(part_i of fact1) = part_sigma(i) of fact2."""
    if not is_saturated(F):
        raise NotSaturated("certificates require a saturated system")
    _check_factorization_input(F, fact1, omega)
    _check_factorization_input(F, fact2, omega)
    if not force_fallback:
        try:
            return _krs_constructive(F, fact1, fact2, omega)
        except InternalInconsistency as exc:
            return _krs_fallback(F, fact1, fact2, omega, note=str(exc))
    return _krs_fallback(F, fact1, fact2, omega, note="fallback forced")


def _krs_constructive(
    F: FusionSystem,
    fact1: Factorization,
    fact2: Factorization,
    omega: Optional[OmegaContext],
) -> KrsCertificate:
    G = F.base
    k = len(fact1.parts)
    m = len(fact2.parts)
    bases1 = [p.base.members for p in fact1.parts]
    projections1 = _projections(G, bases1)

    current = [p.base.members for p in fact2.parts]
    total = tuple(range(G.order))
    log: list[FusionMorphism] = []
    assigned: list[int] = []

    for r in range(m):
        t_star = current[r]
        star_set = set(t_star)
        g_proj = _projections(G, current)[r]
        g_prime = _complement_projection(G, current, r)
        chosen = None
        for j in range(k):
            restricted = [g_proj[projections1[j][x]] for x in t_star]
            if set(restricted) == star_set and len(set(restricted)) == len(t_star):
                chosen = j
                break
        if chosen is None:
            raise InternalInconsistency(
                "no projection summand restricts to an automorphism"
            )
        if chosen in assigned:
            raise InternalInconsistency("projection summand chosen twice")
        fj = projections1[chosen]
        h_images = tuple(G.mul(fj[g_proj[x]], g_prime[x]) for x in range(G.order))
        if len(set(h_images)) != G.order:
            raise InternalInconsistency("swap endomorphism is not bijective")
        try:
            h = check_morphism(F, F, h_images)
        except (NotFusionPreserving, NotSubgroup) as exc:
            raise InternalInconsistency(f"swap map rejected: {exc}") from exc
        normal_complement(F, h)
        if omega is not None and not omega.commutes_with(h_images):
            raise InternalInconsistency("swap map is not equivariant")
        log.append(h)
        total = tuple(h_images[v] for v in total)
        current[r] = bases1[chosen]
        assigned.append(chosen)

    if k != m or sorted(assigned) != list(range(k)):
        raise InternalInconsistency("factorization lengths do not match")

    alpha_images = [0] * G.order
    for x, y in enumerate(total):
        alpha_images[y] = x
    alpha = check_morphism(F, F, tuple(alpha_images))
    ne = normal_complement(F, alpha)
    if omega is not None and not omega.commutes_with(alpha.images):
        raise InternalInconsistency("certificate automorphism is not equivariant")

    sigma = [0] * k
    for r, j in enumerate(assigned):
        sigma[j] = r
    _verify_certificate(F, fact1, fact2, alpha, tuple(sigma))
    return KrsCertificate(ne, tuple(sigma), tuple(log), True)


def _verify_certificate(
    F: FusionSystem,
    fact1: Factorization,
    fact2: Factorization,
    alpha: FusionMorphism,
    sigma: tuple[int, ...],
) -> None:
    for i, part in enumerate(fact1.parts):
        target = fact2.parts[sigma[i]]
        mapped = {alpha.images[x] for x in part.base.members}
        if mapped != target.base.member_set:
            raise InternalInconsistency("certificate does not transport the bases")
        # entrywise transport of the full subsystems
        target_maps = set(
            (members, mp) for members, mp in target.translated_maps()
        )
        pushed = set()
        for members, mp in part.translated_maps():
            dom_idx = F.index_of(members)
            new_idx, new_map = alpha.push_map(dom_idx, mp)
            pushed.add((F.lattice.subs[new_idx].members, new_map))
        if pushed != target_maps:
            raise InternalInconsistency("certificate does not transport the tables")


def _krs_fallback(
    F: FusionSystem,
    fact1: Factorization,
    fact2: Factorization,
    omega: Optional[OmegaContext],
    *,
    note: str,
) -> KrsCertificate:
    autos = normal_automorphisms(F, omega)
    bases2 = {p.base.members: i for i, p in enumerate(fact2.parts)}
    for alpha in autos:
        sigma = []
        ok = True
        for part in fact1.parts:
            mapped = tuple(sorted(alpha.images[x] for x in part.base.members))
            if mapped in bases2:
                sigma.append(bases2[mapped])
            else:
                ok = False
                break
        if not ok or sorted(sigma) != list(range(len(fact2.parts))):
            continue
        try:
            _verify_certificate(F, fact1, fact2, alpha, tuple(sigma))
        except InternalInconsistency:
            continue
        ne = normal_complement(F, alpha)
        return KrsCertificate(ne, tuple(sigma), (), False, note=note)
    raise InternalInconsistency(
        f"no normal automorphism links the factorizations ({note})"
    )


# ---------------------------------------------------------------------------
# automorphism structure of a factorized system


@dataclass(frozen=True)
class AutStructure:
    aut_order: int
    aut0_order: int
    gamma: tuple[tuple[int, ...], ...]
    section: dict[tuple[int, ...], MapTuple]
    part_aut_orders: tuple[int, ...]


def find_isomorphism(E1: FusionSystem, E2: FusionSystem) -> Optional[FusionMorphism]:
    """Least isomorphism of fusion systems, or None."""
    if E1.base.order != E2.base.order or E1.morphism_count() != E2.morphism_count():
        return None
    if sorted(len(ms) for ms in E1.maps) != sorted(len(ms) for ms in E2.maps):
        return None
    full1 = E1.base.full_subgroup()
    full2 = E2.base.full_subgroup()
    for h in injective_homs(full1, full2):
        try:
            m = check_morphism(E1, E2, h.images)
        except NotFusionPreserving:
            continue
        # morphism counts match, so a fusion-preserving bijection is onto
        return m
    return None


def aut_structure(F: FusionSystem, fact: Factorization) -> AutStructure:
    """Automorphism group as stabilizer extended by part permutations."""
    z_trivial = center_of(F).order == 1
    foc_full = focal_of(F).order == F.base.order
    if not (z_trivial or foc_full):
        raise HypothesisFailed(
            "requires a trivial center or a full focal subgroup"
        )
    if not is_product_decomposition(F, list(fact.parts)):
        raise NotSubgroup("input is not a factorization of the system")

    autos = fusion_automorphisms(F)
    k = len(fact.parts)
    base_sets = [p.base.member_set for p in fact.parts]
    base_index = {p.base.members: i for i, p in enumerate(fact.parts)}

    aut0 = []
    rho: dict[MapTuple, tuple[int, ...]] = {}
    for a in autos:
        sigma = []
        for i in range(k):
            mapped = tuple(sorted(a.images[x] for x in base_sets[i]))
            if mapped not in base_index:
                raise InternalInconsistency(
                    "automorphism does not permute the factor bases"
                )
            sigma.append(base_index[mapped])
        rho[a.images] = tuple(sigma)
        if all(s == i for i, s in enumerate(sigma)):
            aut0.append(a)

    isos: list[list[Optional[FusionMorphism]]] = [[None] * k for _ in range(k)]
    for i in range(k):
        isos[i][i] = identity_morphism(fact.parts[i].system)
        for j in range(i + 1, k):
            found = find_isomorphism(fact.parts[i].system, fact.parts[j].system)
            isos[i][j] = found
            if found is not None:
                isos[j][i] = found.inverse()

    gamma = sorted(
        sigma
        for sigma in itertools.permutations(range(k))
        if all(isos[i][sigma[i]] is not None for i in range(k))
    )
    if sorted(set(rho.values())) != gamma:
        raise InternalInconsistency(
            "realized part permutations differ from the isomorphism group"
        )
    if len(autos) != len(aut0) * len(gamma):
        raise InternalInconsistency("automorphism count does not factor")

    part_aut_orders = tuple(
        len(fusion_automorphisms(p.system)) for p in fact.parts
    )
    expected0 = 1
    for v in part_aut_orders:
        expected0 *= v
    if expected0 != len(aut0):
        raise InternalInconsistency("stabilizer does not match the part product")

    # coherent family: through the least representative of each iso class
    beta: list[list[Optional[FusionMorphism]]] = [[None] * k for _ in range(k)]
    for i in range(k):
        rep = min(j for j in range(k) if isos[j][i] is not None)
        for j in range(k):
            if isos[i][j] is not None:
                beta[i][j] = isos[rep][j].compose(isos[rep][i].inverse())

    section: dict[tuple[int, ...], MapTuple] = {}
    decomp = _decomposition_components(F.base, [p.base.members for p in fact.parts])
    for sigma in gamma:
        images = [0] * F.base.order
        for x in range(F.base.order):
            acc = 0
            for i, t in enumerate(decomp[x]):
                part = fact.parts[i]
                b = beta[i][sigma[i]]
                t_local = part.base.members.index(t)
                mapped_local = b.images[t_local]
                acc = F.base.mul(
                    acc, fact.parts[sigma[i]].base.members[mapped_local]
                )
            images[x] = acc
        a = check_morphism(F, F, tuple(images))
        if rho[a.images] != sigma:
            raise InternalInconsistency("section does not realize its permutation")
        section[sigma] = a.images
    # K is a subgroup: composition realizes the composed permutation
    for s1 in gamma:
        for s2 in gamma:
            comp = tuple(s1[s2[i]] for i in range(k))
            composed = tuple(section[s1][v] for v in section[s2])
            if composed != section[comp]:
                raise InternalInconsistency("section is not a homomorphism")
    return AutStructure(
        len(autos), len(aut0), tuple(gamma), section, part_aut_orders
    )


# ---------------------------------------------------------------------------
# Goldschmidt-style transfer to a realizing group (p = 2)


@dataclass(frozen=True)
class GoldschmidtTransfer:
    closures: tuple[Subgroup, ...]


def goldschmidt_factor(
    G: FiniteGroup, fact: Factorization, *, p: int = 2
) -> list[Subgroup]:
    """Lift a fusion factorization to a direct factorization of the
    realizing group via normal closures of the part bases."""
    if p != 2:
        raise HypothesisFailed("transfer is stated at p = 2")
    chars = characteristic_subgroups(G, 2)
    if chars.o_p_prime.order != 1:
        raise HypothesisFailed("group has a nontrivial odd-order core")
    if chars.o_upper_p_prime.order != G.order:
        raise HypothesisFailed("group is not generated by its 2-elements")
    F = fusion_of_group(G, 2)
    S = sylow(G, 2)
    if not is_product_decomposition(F, list(fact.parts)):
        raise NotSubgroup("input is not a factorization of the fusion system")

    closures = []
    part_subgroups_in_g = []
    for part in fact.parts:
        g_members = tuple(S.members[t] for t in part.base.members)
        T_in_g = Subgroup(G, g_members)
        part_subgroups_in_g.append(T_in_g)
        closures.append(normal_closure(G, T_in_g))

    # pairwise commuting
    for a in range(len(closures)):
        for b in range(a + 1, len(closures)):
            for x in closures[a].members:
                for y in closures[b].members:
                    if G.mul(x, y) != G.mul(y, x):
                        raise InternalInconsistency(
                            "normal closures do not commute pairwise"
                        )
    # independent and spanning
    total = 1
    span = {0}
    for H in closures:
        total *= H.order
        span = {G.mul(x, h) for x in span for h in H.members}
    if total != G.order or len(span) != G.order:
        raise InternalInconsistency("normal closures do not factor the group")
    # Sylow condition and fusion recovery per part
    for part, T_in_g, H in zip(fact.parts, part_subgroups_in_g, closures):
        if not T_in_g.member_set <= H.member_set:
            raise InternalInconsistency("part base escapes its normal closure")
        if T_in_g.order != p_part(H.order, 2):
            raise InternalInconsistency("part base is not Sylow in its closure")
        HG, h_to_parent = H.as_group()
        h_pos = {pid: t for t, pid in enumerate(h_to_parent)}
        T_local = Subgroup(HG, (h_pos[x] for x in T_in_g.members), _checked=True)
        recovered = fusion_of_group(HG, 2, T_local)
        if not fusion_equal(recovered, part.system):
            raise InternalInconsistency(
                "factor fusion system differs from the closure's fusion system"
            )
    return closures


# ---------------------------------------------------------------------------
# experimental: weakened summability hypothesis


def sum_if_composite_central(
    F: FusionSystem, ne1: NormalEndomorphism, ne2: NormalEndomorphism
) -> Optional[NormalEndomorphism]:
    """Try to sum two normal endomorphisms whose composite lands in the
    center.  The conclusion is always checked, never assumed; returns the
    verified normal sum or None."""
    G = F.base
    composite_image = {ne1.images[ne2.images[x]] for x in range(G.order)}
    if not composite_image <= center_of(F).member_set:
        return None
    try:
        total = sum_morphisms([ne1.morphism, ne2.morphism])
    except NotSummable:
        return None
    try:
        return normal_complement(F, total)
    except NotNormal:
        return None
