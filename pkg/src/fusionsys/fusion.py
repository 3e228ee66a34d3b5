"""Fusion systems over finite p-groups.

A fusion system is stored as the full set of morphisms into the base
group: for each subgroup ``P`` the sorted list of injective homomorphisms
``P -> S`` in the system.  The morphism set ``Hom(P, Q)`` is the slice of
those maps whose image lies in ``Q``; keeping only the maps into ``S``
avoids duplicating every morphism over all valid codomains while staying
equivalent to the per-pair table (any fusion system is closed under
corestriction and extension of the codomain).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    GenerationMismatch,
    GuardrailExceeded,
    InternalInconsistency,
    NotPGroup,
    NotSaturated,
    NotSubgroup,
    NotSylow,
)
from . import guardrails
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    group_prime,
    p_part,
    quotient,
    subgroups,
    sylow,
)

MapTuple = tuple[int, ...]


# ---------------------------------------------------------------------------
# subgroup lattice cache


class SubgroupLattice:
    """Precomputed containment data for all subgroups of a group."""

    def __init__(self, G: FiniteGroup):
        self.group = G
        self.subs = subgroups(G)
        self.idx = {s.members: i for i, s in enumerate(self.subs)}
        self.member_sets = [s.member_set for s in self.subs]
        self.pos = [{m: t for t, m in enumerate(s.members)} for s in self.subs]
        n = len(self.subs)
        subsets: list[list[int]] = [[] for _ in range(n)]
        supersets: list[list[int]] = [[] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if self.member_sets[j] <= self.member_sets[i]:
                    subsets[i].append(j)
                    supersets[j].append(i)
        self.subsets_of = [tuple(v) for v in subsets]
        self.supersets_of = [tuple(v) for v in supersets]
        maximal: list[tuple[int, ...]] = []
        for i in range(n):
            proper = [j for j in subsets[i] if j != i]
            tops = [
                j
                for j in proper
                if not any(
                    j != l and l != i and self.member_sets[j] < self.member_sets[l]
                    for l in proper
                )
            ]
            maximal.append(tuple(tops))
        self.maximal_of = maximal
        self.full_index = self.idx[self.subs[-1].members]
        self.trivial_index = self.idx[(0,)]

    def index_of(self, members: Iterable[int]) -> int:
        key = tuple(sorted(members))
        if key not in self.idx:
            raise NotSubgroup(f"{key} is not a subgroup of the base group")
        return self.idx[key]


def lattice_of(G: FiniteGroup) -> SubgroupLattice:
    cached = getattr(G, "_fusion_lattice", None)
    if cached is None:
        cached = SubgroupLattice(G)
        G._fusion_lattice = cached
    return cached


# ---------------------------------------------------------------------------
# FusionSystem


class FusionSystem:
    """A fusion system over a finite p-group."""

    def __init__(
        self,
        base: FiniteGroup,
        p: int,
        maps_by_dom: Sequence[Iterable[MapTuple]],
        *,
        _lattice: Optional[SubgroupLattice] = None,
    ):
        self.base = base
        self.p = p
        if p_part(base.order, p) != base.order:
            raise NotPGroup(f"base group order {base.order} is not a power of {p}")
        self.lattice = _lattice or lattice_of(base)
        if len(maps_by_dom) != len(self.lattice.subs):
            raise NotSubgroup("morphism table does not match the subgroup list")
        self.maps = tuple(tuple(sorted(set(ms))) for ms in maps_by_dom)
        self.map_sets = [frozenset(ms) for ms in self.maps]
        self._hom_cache: dict[tuple[int, int], tuple[MapTuple, ...]] = {}
        self._element_classes: Optional[tuple[tuple[int, ...], ...]] = None
        self._subgroup_classes: Optional[tuple[tuple[int, ...], ...]] = None
        self._saturation = None
        self._center: Optional[Subgroup] = None
        self._focal: Optional[Subgroup] = None
        self._inner_check()

    # -- invariants ---------------------------------------------------------

    def _inner_check(self) -> None:
        G = self.base
        full = self.lattice.full_index
        inner = {
            tuple(G.conj(s, x) for x in range(G.order)) for s in range(G.order)
        }
        if not inner <= set(self.maps[full]):
            raise NotSubgroup("table does not contain all inner conjugation maps")
        for i, ms in enumerate(self.maps):
            size = len(self.lattice.subs[i].members)
            for m in ms:
                if len(set(m)) != size:
                    raise NotSubgroup("table contains a non-injective map")

    def validate_closure(self) -> None:
        """Full divisibility/composition/inversion closure check."""
        lat = self.lattice
        for i, ms in enumerate(self.maps):
            members = lat.subs[i].members
            pos = lat.pos[i]
            for m in ms:
                image = tuple(sorted(m))
                j = lat.index_of(image)
                inv = _invert_map(m, members, image)
                if inv not in self.map_sets[j]:
                    raise NotSubgroup("table not closed under inverse isomorphisms")
                for e in lat.maximal_of[i]:
                    sub = tuple(m[pos[x]] for x in lat.subs[e].members)
                    if sub not in self.map_sets[e]:
                        raise NotSubgroup("table not closed under restriction")
                for (d2, t2) in self._maps_into(i):
                    comp = tuple(m[pos[v]] for v in t2)
                    if comp not in self.map_sets[d2]:
                        raise NotSubgroup("table not closed under composition")

    def _maps_into(self, i: int):
        lat = self.lattice
        target = lat.member_sets[i]
        for d2, ms in enumerate(self.maps):
            for t2 in ms:
                if set(t2) <= target:
                    yield d2, t2

    # -- queries -------------------------------------------------------------

    @property
    def subgroup_list(self) -> list[Subgroup]:
        return self.lattice.subs

    def subgroup(self, i: int) -> Subgroup:
        return self.lattice.subs[i]

    def index_of(self, members: Iterable[int]) -> int:
        return self.lattice.index_of(members)

    def hom_maps(self, i: int, j: int) -> tuple[MapTuple, ...]:
        """Morphism maps P_i -> P_j (image constrained to P_j)."""
        key = (i, j)
        if key not in self._hom_cache:
            target = self.lattice.member_sets[j]
            self._hom_cache[key] = tuple(
                m for m in self.maps[i] if set(m) <= target
            )
        return self._hom_cache[key]

    def iso_maps(self, i: int, j: int) -> tuple[MapTuple, ...]:
        goal = self.lattice.subs[j].members
        return tuple(m for m in self.maps[i] if tuple(sorted(m)) == goal)

    def aut_maps(self, i: int) -> tuple[MapTuple, ...]:
        return self.iso_maps(i, i)

    def hom_set(self, P: Subgroup, Q: Subgroup) -> list[GroupHom]:
        i, j = self.index_of(P.members), self.index_of(Q.members)
        Pi, Qj = self.lattice.subs[i], self.lattice.subs[j]
        return [GroupHom(Pi, Qj, m, _checked=True) for m in self.hom_maps(i, j)]

    def morphism_count(self) -> int:
        return sum(len(ms) for ms in self.maps)

    def has_map(self, i: int, m: MapTuple) -> bool:
        return m in self.map_sets[i]

    # -- conjugacy -----------------------------------------------------------

    def element_classes(self) -> tuple[tuple[int, ...], ...]:
        if self._element_classes is None:
            n = self.base.order
            parent = list(range(n))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for i, ms in enumerate(self.maps):
                members = self.lattice.subs[i].members
                for m in ms:
                    for t, x in enumerate(members):
                        rx, ry = find(x), find(m[t])
                        if rx != ry:
                            parent[max(rx, ry)] = min(rx, ry)
            buckets: dict[int, list[int]] = {}
            for x in range(n):
                buckets.setdefault(find(x), []).append(x)
            self._element_classes = tuple(
                tuple(sorted(v)) for _, v in sorted(buckets.items())
            )
        return self._element_classes

    def element_class_of(self, x: int) -> tuple[int, ...]:
        for cls in self.element_classes():
            if x in cls:
                return cls
        raise KeyError(x)

    def subgroup_classes(self) -> tuple[tuple[int, ...], ...]:
        if self._subgroup_classes is None:
            k = len(self.lattice.subs)
            parent = list(range(k))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for i, ms in enumerate(self.maps):
                size = len(self.lattice.subs[i].members)
                for m in ms:
                    image = tuple(sorted(m))
                    if len(image) == size:
                        j = self.lattice.idx[image]
                        ri, rj = find(i), find(j)
                        if ri != rj:
                            parent[max(ri, rj)] = min(ri, rj)
            buckets: dict[int, list[int]] = {}
            for i in range(k):
                buckets.setdefault(find(i), []).append(i)
            self._subgroup_classes = tuple(
                tuple(sorted(v)) for _, v in sorted(buckets.items())
            )
        return self._subgroup_classes

    def subgroup_class_of(self, i: int) -> tuple[int, ...]:
        for cls in self.subgroup_classes():
            if i in cls:
                return cls
        raise KeyError(i)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionSystem):
            return NotImplemented
        return fusion_equal(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"FusionSystem(|S|={self.base.order}, p={self.p}, "
            f"subgroups={len(self.lattice.subs)}, morphisms={self.morphism_count()})"
        )


def _invert_map(m: MapTuple, members: tuple[int, ...], image: tuple[int, ...]) -> MapTuple:
    back = {v: members[t] for t, v in enumerate(m)}
    return tuple(back[y] for y in image)


def fusion_equal(F1: FusionSystem, F2: FusionSystem) -> bool:
    """Entrywise equality: same base table, same subgroups, same morphisms."""
    G1, G2 = F1.base, F2.base
    if G1.order != G2.order or F1.p != F2.p:
        return False
    if G1 is not G2:
        for a in range(G1.order):
            for b in range(G1.order):
                if G1.mul(a, b) != G2.mul(a, b):
                    return False
    if [s.members for s in F1.lattice.subs] != [s.members for s in F2.lattice.subs]:
        return False
    return F1.maps == F2.maps


# ---------------------------------------------------------------------------
# construction from a finite group


def fusion_of_group(
    G: FiniteGroup,
    p: int,
    S: Optional[Subgroup] = None,
    *,
    limits: Optional[guardrails.Guardrails] = None,
) -> FusionSystem:
    """The conjugation fusion system of ``G`` on a Sylow p-subgroup."""
    limits = limits or guardrails.active()
    if S is None:
        S = sylow(G, p)
    else:
        if S.parent is not G:
            raise NotSylow("supplied subgroup belongs to a different group")
        if S.order != p_part(G.order, p):
            raise NotSylow(
                f"subgroup of order {S.order} is not Sylow at p={p} in a group of order {G.order}"
            )
    SG, to_parent = S.as_group()
    from_parent = {pid: i for i, pid in enumerate(to_parent)}
    lat = lattice_of(SG)
    maps: list[set[MapTuple]] = [set() for _ in lat.subs]
    s_set = S.member_set
    for g in range(G.order):
        conj = [G.conj(g, pid) for pid in to_parent]
        inside = [c in s_set for c in conj]
        translated = [from_parent[c] if ok else -1 for c, ok in zip(conj, inside)]
        for i, sub in enumerate(lat.subs):
            if all(inside[m] for m in sub.members):
                maps[i].add(tuple(translated[m] for m in sub.members))
    return FusionSystem(SG, p, maps, _lattice=lat)


def inner_fusion(S: FiniteGroup) -> FusionSystem:
    """The fusion system of a p-group on itself (conjugation only)."""
    p = group_prime(S)
    return fusion_of_group(S, p, S.full_subgroup())


# ---------------------------------------------------------------------------
# closure engine and generated fusion systems


def close_maps(
    base: FiniteGroup,
    seeds: Iterable[tuple[int, MapTuple]],
    *,
    lattice: Optional[SubgroupLattice] = None,
    include_inner: bool = True,
    limits: Optional[guardrails.Guardrails] = None,
) -> list[set[MapTuple]]:
    """Least morphism table containing the seeds and the inner maps,
    closed under restriction, composition and inversion of isomorphisms
    onto images.  Corestriction and codomain extension are implicit in
    the maps-into-S representation."""
    limits = limits or guardrails.active()
    lat = lattice or lattice_of(base)
    store: list[set[MapTuple]] = [set() for _ in lat.subs]
    by_image: list[list[tuple[int, MapTuple]]] = [[] for _ in lat.subs]
    queue: deque[tuple[int, MapTuple]] = deque()
    total = 0

    if include_inner:
        full = lat.full_index
        for s in range(base.order):
            queue.append(
                (full, tuple(base.conj(s, x) for x in range(base.order)))
            )
    queue.extend(seeds)

    while queue:
        d, m = queue.popleft()
        if m in store[d]:
            continue
        store[d].add(m)
        total += 1
        if total > limits.table_limit:
            raise GuardrailExceeded(
                f"fusion closure exceeded {limits.table_limit} morphisms"
            )
        members = lat.subs[d].members
        pos = lat.pos[d]
        image = tuple(sorted(m))
        j = lat.idx[image]
        by_image[j].append((d, m))
        # inverse of the corestricted isomorphism
        queue.append((j, _invert_map(m, members, image)))
        # restrictions through maximal subgroups reach every subgroup
        for e in lat.maximal_of[d]:
            queue.append((e, tuple(m[pos[x]] for x in lat.subs[e].members)))
        # m after stored maps with image inside dom(m)
        for j2 in lat.subsets_of[d]:
            for (d2, t2) in by_image[j2]:
                queue.append((d2, tuple(m[pos[v]] for v in t2)))
        # stored maps after m
        for e in lat.supersets_of[j]:
            pos_e = lat.pos[e]
            for t3 in store[e]:
                queue.append((d, tuple(t3[pos_e[v]] for v in m)))
    return store


def generated_fusion(
    S: FiniteGroup,
    gens: Sequence[GroupHom],
    *,
    p: Optional[int] = None,
    limits: Optional[guardrails.Guardrails] = None,
) -> FusionSystem:
    """Smallest fusion system over ``S`` containing the inner maps and the
    given injective homomorphisms between subgroups of ``S``."""
    p = p or group_prime(S)
    lat = lattice_of(S)
    seeds = []
    for h in gens:
        if h.domain.parent is not S or h.codomain.parent is not S:
            raise NotSubgroup("generators must connect subgroups of the base group")
        if not h.is_injective:
            raise NotSubgroup("generators must be injective")
        seeds.append((lat.index_of(h.domain.members), h.images))
    store = close_maps(S, seeds, lattice=lat, limits=limits)
    return FusionSystem(S, p, store, _lattice=lat)


# ---------------------------------------------------------------------------
# saturation


@dataclass(frozen=True)
class SaturationFailure:
    class_rep: int
    axiom: str
    phi: Optional[GroupHom]
    n_phi: Optional[Subgroup]


@dataclass(frozen=True)
class ClassReport:
    members: tuple[int, ...]
    witness: Optional[int]
    failure: Optional[SaturationFailure]


@dataclass(frozen=True)
class SaturationReport:
    verdict: bool
    per_class: tuple[ClassReport, ...]
    continuity: str = "vacuous for a finite base group"


def _aut_s_maps(F: FusionSystem, i: int) -> frozenset[MapTuple]:
    G = F.base
    sub = F.lattice.subs[i]
    norm = sub.normalizer_in()
    return frozenset(
        tuple(G.conj(g, x) for x in sub.members) for g in norm.members
    )


def is_fully_automized(F: FusionSystem, i: int) -> bool:
    aut_f = F.aut_maps(i)
    aut_s = _aut_s_maps(F, i)
    if not aut_s <= set(aut_f):
        raise InternalInconsistency("inner automorphisms missing from the table")
    if len(aut_f) % len(aut_s):
        raise InternalInconsistency("Lagrange failure in automorphism groups")
    return (len(aut_f) // len(aut_s)) % F.p != 0


def control_subgroup(F: FusionSystem, q_idx: int, phi: MapTuple, p_idx: int) -> Subgroup:
    """The elements g of N_S(Q) whose conjugation transports through phi
    into conjugation on the target."""
    G = F.base
    Q = F.lattice.subs[q_idx]
    P = F.lattice.subs[p_idx]
    aut_s_p = _aut_s_maps(F, p_idx)
    back = {v: Q.members[t] for t, v in enumerate(phi)}
    members = []
    for g in Q.normalizer_in().members:
        transported = tuple(
            phi[Q.pos(G.conj(g, back[y]))] for y in P.members
        )
        if transported in aut_s_p:
            members.append(g)
    return Subgroup(G, members)


def is_receptive(
    F: FusionSystem, i: int
) -> tuple[bool, Optional[MapTuple], Optional[int], Optional[Subgroup]]:
    """Check receptivity of subgroup ``i``; on failure also return the
    failing isomorphism (as a map from the failing class member) and its
    control subgroup."""
    lat = F.lattice
    for q_idx in F.subgroup_class_of(i):
        Q = lat.subs[q_idx]
        for phi in F.iso_maps(q_idx, i):
            n_phi = control_subgroup(F, q_idx, phi, i)
            n_idx = lat.index_of(n_phi.members)
            pos_q = [lat.pos[n_idx][x] for x in Q.members]
            extended = any(
                all(psi[t] == phi[s] for s, t in enumerate(pos_q))
                for psi in F.maps[n_idx]
            )
            if not extended:
                return False, phi, q_idx, n_phi
    return True, None, None, None


def saturation_report(F: FusionSystem) -> SaturationReport:
    """Scan every conjugacy class for a fully automized receptive member."""
    if F._saturation is not None:
        return F._saturation
    reports = []
    verdict = True
    for cls in F.subgroup_classes():
        witness = None
        for i in cls:
            if is_fully_automized(F, i):
                ok, _, _, _ = is_receptive(F, i)
                if ok:
                    witness = i
                    break
        failure = None
        if witness is None:
            rep = cls[0]
            if not is_fully_automized(F, rep):
                failure = SaturationFailure(rep, "fully_automized", None, None)
            else:
                _, phi, q_idx, n_phi = is_receptive(F, rep)
                hom = None
                if phi is not None:
                    hom = GroupHom(
                        F.lattice.subs[q_idx],
                        F.base.full_subgroup(),
                        phi,
                        _checked=True,
                    )
                failure = SaturationFailure(rep, "receptive", hom, n_phi)
            verdict = False
        reports.append(ClassReport(cls, witness, failure))
    report = SaturationReport(verdict, tuple(reports))
    F._saturation = report
    return report


def is_saturated(F: FusionSystem) -> bool:
    return saturation_report(F).verdict


# ---------------------------------------------------------------------------
# structural invariants


@dataclass(frozen=True)
class ConjugacyData:
    subgroup_classes: tuple[tuple[int, ...], ...]
    element_classes: tuple[tuple[int, ...], ...]


def conjugacy(F: FusionSystem) -> ConjugacyData:
    return ConjugacyData(F.subgroup_classes(), F.element_classes())


def is_central_subgroup(F: FusionSystem, i: int) -> bool:
    """Extension test: every morphism extends over the candidate subgroup
    by the identity on it."""
    lat = F.lattice
    G = F.base
    P = lat.subs[i]
    if not P.member_set <= set(G.center_members()):
        return False
    for q_idx, ms in enumerate(F.maps):
        Q = lat.subs[q_idx]
        prod = sorted({G.mul(q, z) for q in Q.members for z in P.members})
        d_idx = lat.idx[tuple(prod)]
        pos_d = lat.pos[d_idx]
        pos_q = [pos_d[x] for x in Q.members]
        pos_p = [pos_d[z] for z in P.members]
        for phi in ms:
            found = False
            for psi in F.maps[d_idx]:
                if all(psi[t] == phi[s] for s, t in enumerate(pos_q)) and all(
                    psi[t] == z for t, z in zip(pos_p, P.members)
                ):
                    found = True
                    break
            if not found:
                return False
    return True


def center_of(F: FusionSystem) -> Subgroup:
    """Subgroup generated by all central subgroups; cross-checked against
    the fixed elements of the fusion action when saturated."""
    if F._center is not None:
        return F._center
    G = F.base
    z_s = set(G.center_members())
    members: set[int] = {0}
    for i, sub in enumerate(F.lattice.subs):
        if sub.member_set <= z_s and is_central_subgroup(F, i):
            members |= sub.member_set
    center = G.generated_subgroup(members)
    fixed = {
        x for x in z_s if F.element_class_of(x) == (x,)
    }
    if not center.member_set <= fixed:
        raise InternalInconsistency("center contains a fused element")
    if is_saturated(F) and center.member_set != fixed:
        raise InternalInconsistency(
            "saturated center mismatch: generated %r vs fixed %r"
            % (sorted(center.members), sorted(fixed))
        )
    F._center = center
    return center


def focal_of(F: FusionSystem) -> Subgroup:
    """Subgroup generated by x * y^-1 over all fused pairs."""
    if F._focal is not None:
        return F._focal
    G = F.base
    gens: set[int] = set()
    for cls in F.element_classes():
        for x in cls:
            for y in cls:
                gens.add(G.mul(x, G.inv(y)))
    focal = G.generated_subgroup(gens)
    F._focal = focal
    return focal


@dataclass(frozen=True)
class SubgroupClassification:
    strongly_closed: bool
    centric: bool
    radical: bool


def is_strongly_closed(F: FusionSystem, i: int) -> bool:
    target = F.lattice.member_sets[i]
    return all(
        set(F.element_class_of(x)) <= target for x in F.lattice.subs[i].members
    )


def is_centric(F: FusionSystem, i: int) -> bool:
    for j in F.subgroup_class_of(i):
        Q = F.lattice.subs[j]
        if not Q.centralizer_in().member_set <= Q.member_set:
            return False
    return True


def outer_automorphism_group(F: FusionSystem, i: int) -> tuple[FiniteGroup, list[int]]:
    """Out_F(P) as a finite group plus the label of each Aut_F(P) map."""
    sub = F.lattice.subs[i]
    members = sub.members
    pos = F.lattice.pos[i]
    auts = sorted(F.aut_maps(i))
    aut_index = {m: t for t, m in enumerate(auts)}
    identity = tuple(members)
    # relabel so the identity automorphism gets id 0
    order_ids = [aut_index[identity]] + [
        t for t in range(len(auts)) if auts[t] != identity
    ]
    relabel = {old: new for new, old in enumerate(order_ids)}
    elems = [auts[old] for old in order_ids]
    idx = {m: t for t, m in enumerate(elems)}
    rows = []
    for a in elems:
        row = []
        for b in elems:
            comp = tuple(a[pos[v]] for v in b)
            row.append(idx[comp])
        rows.append(row)
    G = F.base
    inner = sorted(
        {idx[tuple(G.conj(x, y) for y in members)] for x in members}
    )
    aut_group = FiniteGroup.from_cayley(rows)
    inner_sub = Subgroup(aut_group, inner, _checked=True)
    quo, label = quotient(aut_group, inner_sub)
    return quo, label


def is_radical(F: FusionSystem, i: int) -> bool:
    quo, _ = outer_automorphism_group(F, i)
    if quo.order == 1:
        return True
    syl = sylow(quo, F.p)
    if syl.order == 1:
        return True
    core = set(syl.members)
    for g in range(quo.order):
        core &= {quo.conj(g, x) for x in syl.members}
        if core == {0}:
            return True
    return len(core) == 1


def classify_subgroup(F: FusionSystem, P: Subgroup) -> SubgroupClassification:
    i = F.index_of(P.members)
    return SubgroupClassification(
        strongly_closed=is_strongly_closed(F, i),
        centric=is_centric(F, i),
        radical=is_radical(F, i),
    )


@dataclass(frozen=True)
class FusionInvariants:
    center: Subgroup
    focal: Subgroup
    strongly_closed: tuple[Subgroup, ...]
    centric: tuple[int, ...]
    radical: tuple[int, ...]


def fusion_invariants(F: FusionSystem) -> FusionInvariants:
    strongly = tuple(
        F.lattice.subs[i]
        for i in range(len(F.lattice.subs))
        if is_strongly_closed(F, i)
    )
    centric = tuple(i for i in range(len(F.lattice.subs)) if is_centric(F, i))
    radical = tuple(i for i in range(len(F.lattice.subs)) if is_radical(F, i))
    return FusionInvariants(center_of(F), focal_of(F), strongly, centric, radical)


# ---------------------------------------------------------------------------
# full restriction


def restrict_full(F: FusionSystem, T: Subgroup) -> FusionSystem:
    """The full subsystem on the subgroups of ``T``."""
    if T.parent is not F.base:
        raise NotSubgroup("restriction subgroup lives in a different group")
    if T.order == F.base.order:
        return F
    TG, to_parent = T.as_group()
    from_parent = {pid: t for t, pid in enumerate(to_parent)}
    lat_t = lattice_of(TG)
    t_set = T.member_set
    maps: list[set[MapTuple]] = [set() for _ in lat_t.subs]
    lat = F.lattice
    for i, ms in enumerate(F.maps):
        members = lat.subs[i].members
        if not lat.member_sets[i] <= t_set:
            continue
        local_dom = lat_t.index_of(tuple(from_parent[x] for x in members))
        for m in ms:
            if set(m) <= t_set:
                maps[local_dom].add(tuple(from_parent[v] for v in m))
    return FusionSystem(TG, F.p, maps, _lattice=lat_t)


# ---------------------------------------------------------------------------
# Alperin-style generation


def alperin_generators(F: FusionSystem) -> list[tuple[Subgroup, list[GroupHom]]]:
    """Centric-radical subgroups with their automorphisms; regeneration
    from them must reproduce the table exactly."""
    if not is_saturated(F):
        raise NotSaturated("generation check requires a saturated system")
    out = []
    seeds: list[tuple[int, MapTuple]] = []
    for i, sub in enumerate(F.lattice.subs):
        if is_centric(F, i) and is_radical(F, i):
            auts = F.aut_maps(i)
            full = F.base.full_subgroup()
            out.append(
                (sub, [GroupHom(sub, full, m, _checked=True) for m in auts])
            )
            seeds.extend((i, m) for m in auts)
    regenerated = close_maps(F.base, seeds, lattice=F.lattice)
    if [frozenset(s) for s in regenerated] != list(F.map_sets):
        raise GenerationMismatch(
            "centric-radical automorphisms do not regenerate the table"
        )
    return out
