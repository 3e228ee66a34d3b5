"""Morphisms between fusion systems, products, commuting subsystems, sums.

A morphism is a group homomorphism between the base groups that pushes
every source morphism to a target morphism; the induced functor is
determined by the underlying map and cached.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    InternalInconsistency,
    NotCommuting,
    NotFusionPreserving,
    NotSubgroup,
    NotSubsystem,
    NotSummable,
)
from .groups import GroupHom, Subgroup, direct_product
from .fusion import (
    FusionSystem,
    MapTuple,
    close_maps,
    fusion_equal,
    lattice_of,
    center_of,
)


class FusionMorphism:
    """A fusion-preserving homomorphism between base groups."""

    __slots__ = ("source", "target", "images", "_functor")

    def __init__(self, source: FusionSystem, target: FusionSystem, images: MapTuple):
        self.source = source
        self.target = target
        self.images = tuple(images)
        self._functor: dict[tuple[int, MapTuple], tuple[int, MapTuple]] = {}

    def map(self, x: int) -> int:
        return self.images[x]

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.base.order

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.images)

    def group_hom(self) -> GroupHom:
        return GroupHom(
            self.source.base.full_subgroup(),
            self.target.base.full_subgroup(),
            self.images,
            _checked=True,
        )

    def push_map(self, dom_idx: int, m: MapTuple) -> tuple[int, MapTuple]:
        """Image of a source morphism under the induced functor."""
        key = (dom_idx, m)
        cached = self._functor.get(key)
        if cached is not None:
            return cached
        members = self.source.lattice.subs[dom_idx].members
        out: dict[int, int] = {}
        for t, x in enumerate(members):
            y = self.images[x]
            v = self.images[m[t]]
            if out.setdefault(y, v) != v:
                raise InternalInconsistency("functor image is not well defined")
        new_members = tuple(sorted(out))
        new_idx = self.target.index_of(new_members)
        pushed = tuple(out[y] for y in new_members)
        self._functor[key] = (new_idx, pushed)
        return (new_idx, pushed)

    def image_subgroup(self) -> Subgroup:
        return Subgroup(self.target.base, set(self.images), _checked=True)

    def compose(self, inner: "FusionMorphism") -> "FusionMorphism":
        """self o inner."""
        if inner.target is not self.source:
            raise NotSubgroup("morphisms are not composable")
        return check_morphism(
            inner.source,
            self.target,
            tuple(self.images[v] for v in inner.images),
        )

    def inverse(self) -> "FusionMorphism":
        if not (self.is_injective and self.is_surjective):
            raise NotSubgroup("morphism is not invertible")
        back = [0] * len(self.images)
        for x, y in enumerate(self.images):
            back[y] = x
        return check_morphism(self.target, self.source, tuple(back))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FusionMorphism)
            and self.source is other.source
            and self.target is other.target
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((id(self.source), id(self.target), self.images))

    def __repr__(self) -> str:
        kind = "iso" if self.is_injective and self.is_surjective else "map"
        return f"FusionMorphism({kind}, |T|={self.source.base.order} -> |S|={self.target.base.order})"


def _coerce_images(E: FusionSystem, F: FusionSystem, f) -> MapTuple:
    if isinstance(f, GroupHom):
        if f.domain.order != E.base.order:
            raise NotSubgroup("morphism must be defined on the whole source group")
        return f.images
    images = tuple(f)
    if len(images) != E.base.order:
        raise NotSubgroup("image tuple does not cover the source group")
    return images


def check_morphism(
    E: FusionSystem, F: FusionSystem, f, *, hom_checked: bool = False
) -> FusionMorphism:
    """Validate that ``f`` pushes every source morphism into the target.

    Raises NotFusionPreserving with the first failing source morphism
    (domains scanned largest-first so global obstructions surface early).
    ``hom_checked`` skips the homomorphism law when the caller got the
    map from a verified enumeration.
    """
    images = _coerce_images(E, F, f)
    A, B = E.base, F.base
    if not hom_checked:
        for x in range(A.order):
            for y in range(A.order):
                if images[A.mul(x, y)] != B.mul(images[x], images[y]):
                    raise NotSubgroup(f"not a group homomorphism at ({x},{y})")
    m = FusionMorphism(E, F, images)
    order = sorted(
        range(len(E.lattice.subs)),
        key=lambda i: -len(E.lattice.subs[i].members),
    )
    for dom_idx in order:
        for phi in E.maps[dom_idx]:
            try:
                new_idx, pushed = m.push_map(dom_idx, phi)
            except InternalInconsistency:
                raise NotFusionPreserving(
                    "source morphism has no well-defined image",
                    witness={"domain": E.lattice.subs[dom_idx].members, "map": phi},
                )
            if not F.has_map(new_idx, pushed):
                raise NotFusionPreserving(
                    "pushed morphism is missing from the target",
                    witness={"domain": E.lattice.subs[dom_idx].members, "map": phi},
                )
    return m


def identity_morphism(F: FusionSystem) -> FusionMorphism:
    return FusionMorphism(F, F, tuple(range(F.base.order)))


def zero_morphism(E: FusionSystem, F: FusionSystem) -> FusionMorphism:
    return FusionMorphism(E, F, tuple([0] * E.base.order))


# ---------------------------------------------------------------------------
# kernel and image


def kernel(m: FusionMorphism) -> Subgroup:
    """Kernel of the underlying homomorphism; must be strongly closed."""
    ker = Subgroup(
        m.source.base,
        (x for x in range(m.source.base.order) if m.images[x] == 0),
        _checked=True,
    )
    from .fusion import is_strongly_closed

    if not is_strongly_closed(m.source, m.source.index_of(ker.members)):
        raise InternalInconsistency("kernel is not strongly closed in the source")
    return ker


def image(m: FusionMorphism) -> FusionSystem:
    """Smallest subsystem of the target containing the functor image,
    returned as a fusion system over the image group."""
    T = m.image_subgroup()
    TG, to_parent = T.as_group()
    from_parent = {pid: t for t, pid in enumerate(to_parent)}
    lat_t = lattice_of(TG)
    seeds = []
    for dom_idx, ms in enumerate(m.source.maps):
        for phi in ms:
            new_idx, pushed = m.push_map(dom_idx, phi)
            local_members = tuple(
                from_parent[x] for x in m.target.lattice.subs[new_idx].members
            )
            seeds.append((lat_t.index_of(local_members), tuple(from_parent[v] for v in pushed)))
    store = close_maps(TG, seeds, lattice=lat_t)
    sub = FusionSystem(TG, m.target.p, store, _lattice=lat_t)
    _assert_subsystem(m.target, T, sub)
    return sub


# ---------------------------------------------------------------------------
# subsystem bookkeeping


@dataclass(frozen=True)
class Subsystem:
    """A fusion system living on a subgroup of an ambient base group."""

    base: Subgroup
    system: FusionSystem

    def translated_maps(self) -> list[tuple[tuple[int, ...], MapTuple]]:
        """Morphisms as (domain members, images) in ambient ids."""
        out = []
        to_parent = self.base.members
        for dom_idx, ms in enumerate(self.system.maps):
            members = tuple(
                to_parent[x] for x in self.system.lattice.subs[dom_idx].members
            )
            for mp in ms:
                out.append((members, tuple(to_parent[v] for v in mp)))
        return out


def _assert_subsystem(F: FusionSystem, T: Subgroup, E: FusionSystem) -> None:
    """Every morphism of ``E`` (over ``T``) must already belong to ``F``."""
    if E.base.order != T.order:
        raise NotSubsystem("subsystem base does not match its subgroup")
    if not T.member_set <= set(range(F.base.order)):
        raise NotSubsystem("subsystem subgroup does not live in the base group")
    to_parent = T.members
    for t in range(E.base.order):
        for u in range(E.base.order):
            if to_parent[E.base.mul(t, u)] != F.base.mul(to_parent[t], to_parent[u]):
                raise NotSubsystem("subsystem base is not the induced subgroup table")
    for members, mp in Subsystem(T, E).translated_maps():
        idx = F.index_of(members)
        if not F.has_map(idx, mp):
            raise NotSubsystem(
                f"subsystem morphism {members} -> {mp} is missing from the ambient system"
            )


def subsystem_of(F: FusionSystem, T: Subgroup) -> Subsystem:
    from .fusion import restrict_full

    return Subsystem(T, restrict_full(F, T))


# ---------------------------------------------------------------------------
# products


class ProductSystem:
    """Direct product of fusion systems with embeddings and projections."""

    def __init__(self, factors: Sequence[FusionSystem]):
        if not factors:
            raise NotSubgroup("product needs at least one factor")
        self.factors = list(factors)
        p = factors[0].p
        if any(f.p != p for f in factors):
            raise NotSubgroup("product factors must share the prime")
        if len(factors) == 1:
            F = factors[0]
            self.product = F
            self.components = [tuple(range(F.base.order))]
            self.encode = {
                (x,): x for x in range(F.base.order)
            }
            ident = identity_morphism(F)
            self.embeddings = [ident]
            self.projections = [ident]
            return

        group = factors[0].base
        components = [list(range(group.order))]
        for nxt in (f.base for f in factors[1:]):
            dp = direct_product(group, nxt)
            n2 = nxt.order
            new_components = []
            for comp in components:
                new_components.append([comp[x // n2] for x in range(dp.product.order)])
            new_components.append([x % n2 for x in range(dp.product.order)])
            components = new_components
            group = dp.product
        self.components = [tuple(c) for c in components]
        self.encode = {
            tuple(c[x] for c in self.components): x for x in range(group.order)
        }

        lat = lattice_of(group)
        maps: list[set[MapTuple]] = [set() for _ in lat.subs]
        k = len(factors)
        for w_idx, W in enumerate(lat.subs):
            proj_members = []
            proj_idx = []
            for i, Fi in enumerate(factors):
                mem = tuple(sorted({self.components[i][x] for x in W.members}))
                proj_members.append(mem)
                proj_idx.append(Fi.index_of(mem))
            pos = [
                {m: t for t, m in enumerate(proj_members[i])} for i in range(k)
            ]
            options = [factors[i].maps[proj_idx[i]] for i in range(k)]
            for combo in itertools.product(*options):
                imgs = []
                for x in W.members:
                    parts = tuple(
                        combo[i][pos[i][self.components[i][x]]] for i in range(k)
                    )
                    imgs.append(self.encode[parts])
                maps[w_idx].add(tuple(imgs))
        self.product = FusionSystem(group, p, maps, _lattice=lat)

        self.embeddings = []
        self.projections = []
        for i, Fi in enumerate(factors):
            zero = tuple(0 for _ in factors)
            emb = []
            for b in range(Fi.base.order):
                key = tuple(b if j == i else 0 for j in range(k))
                emb.append(self.encode[key])
            self.embeddings.append(check_morphism(Fi, self.product, tuple(emb)))
            self.projections.append(
                check_morphism(self.product, Fi, self.components[i])
            )


def product(factors: Sequence[FusionSystem]) -> ProductSystem:
    return ProductSystem(factors)


# ---------------------------------------------------------------------------
# commuting subsystems


@dataclass(frozen=True)
class CommuteResult:
    morphism: Optional[FusionMorphism]
    product: Optional[ProductSystem]
    inner: Optional[FusionSystem]
    inner_base: Subgroup


def commute_check(
    F: FusionSystem,
    subsystems: Sequence[Subsystem],
    *,
    build_inner: bool = True,
    build_witness: bool = True,
) -> CommuteResult:
    """Decide whether subsystems commute in ``F``.

    Uses the morphism-tuple criterion: the base subgroups must commute
    pairwise and every tuple of subsystem morphisms must extend to a
    single morphism of ``F`` on the product of the domains.  On success
    the morphism from the external product into ``F`` and the inner
    product subsystem are available; both are skippable because the
    external product group can be much larger than the base group.
    """
    if not subsystems:
        raise NotSubgroup("need at least one subsystem")
    G = F.base
    for sub in subsystems:
        _assert_subsystem(F, sub.base, sub.system)
    for a in range(len(subsystems)):
        for b in range(a + 1, len(subsystems)):
            for x in subsystems[a].base.members:
                for y in subsystems[b].base.members:
                    if G.mul(x, y) != G.mul(y, x):
                        raise NotCommuting(
                            "base subgroups do not commute elementwise",
                            witness={"pair": (a, b), "elements": (x, y)},
                        )

    # a found extension restricted to the product of the domains is the
    # image of the tuple under the induced functor, so collecting one per
    # tuple seeds the inner product subsystem exactly
    extension_seeds: set[tuple[int, MapTuple]] = set()
    morphism_lists = [sub.translated_maps() for sub in subsystems]
    for tup in itertools.product(*morphism_lists):
        dom_union: set[int] = {0}
        for members, _ in tup:
            dom_union = {G.mul(u, x) for u in dom_union for x in members}
        dom_members = tuple(sorted(dom_union))
        d_idx = F.index_of(dom_members)
        pos = F.lattice.pos[d_idx]
        found = None
        for psi in F.maps[d_idx]:
            if all(
                psi[pos[x]] == mp[t]
                for members, mp in tup
                for t, x in enumerate(members)
            ):
                found = psi
                break
        if found is None:
            raise NotCommuting(
                "morphism tuple does not extend",
                witness={
                    "tuple": [
                        {
                            "domain_index": F.index_of(members),
                            "domain": members,
                            "map": mp,
                        }
                        for members, mp in tup
                    ]
                },
            )
        extension_seeds.add((d_idx, found))

    inner_members = {0}
    for sub in subsystems:
        inner_members = {
            G.mul(u, x) for u in inner_members for x in sub.base.members
        }
    inner_base = Subgroup(G, inner_members, _checked=True)

    inner = None
    if build_inner:
        inner = _inner_from_seeds(F, inner_base, extension_seeds)

    inclusion = None
    prod = None
    if build_witness:
        prod = ProductSystem([sub.system for sub in subsystems])
        imgs = []
        for x in range(prod.product.base.order):
            acc = 0
            for i, sub in enumerate(subsystems):
                acc = G.mul(acc, sub.base.members[prod.components[i][x]])
            imgs.append(acc)
        try:
            inclusion = check_morphism(prod.product, F, tuple(imgs))
        except NotFusionPreserving as exc:
            raise InternalInconsistency(
                f"tuple criterion accepted but the product morphism was rejected: {exc}"
            ) from exc
        if build_inner:
            via_image = image(inclusion)
            if not fusion_equal(via_image, inner):
                raise InternalInconsistency(
                    "inner product disagrees with the image of the inclusion"
                )
    return CommuteResult(inclusion, prod, inner, inner_base)


def _inner_from_seeds(
    F: FusionSystem, T: Subgroup, seeds: Iterable[tuple[int, MapTuple]]
) -> FusionSystem:
    TG, to_parent = T.as_group()
    from_parent = {pid: t for t, pid in enumerate(to_parent)}
    lat_t = lattice_of(TG)
    local_seeds = []
    for d_idx, psi in seeds:
        members = F.lattice.subs[d_idx].members
        local_dom = lat_t.index_of(tuple(from_parent[x] for x in members))
        local_seeds.append((local_dom, tuple(from_parent[v] for v in psi)))
    store = close_maps(TG, local_seeds, lattice=lat_t)
    sub = FusionSystem(TG, F.p, store, _lattice=lat_t)
    _assert_subsystem(F, T, sub)
    return sub


def is_product_decomposition(
    F: FusionSystem, subsystems: Sequence[Subsystem]
) -> bool:
    """True when the commuting subsystems give an internal direct
    factorization of ``F``."""
    res = commute_check(F, subsystems, build_witness=False)
    total = 1
    for sub in subsystems:
        total *= sub.base.order
    injective = total == res.inner_base.order
    onto = res.inner_base.order == F.base.order and fusion_equal(res.inner, F)
    if onto and len(subsystems) == 2:
        overlap = subsystems[0].base.member_set & subsystems[1].base.member_set
        if not overlap <= center_of(F).member_set:
            raise InternalInconsistency(
                "factor bases intersect outside the center"
            )
    return injective and onto


# ---------------------------------------------------------------------------
# sums of morphisms


def sum_morphisms(morphisms: Sequence[FusionMorphism]) -> FusionMorphism:
    """Pointwise product of morphisms with commuting images."""
    if not morphisms:
        raise NotSubgroup("empty sum")
    E = morphisms[0].source
    F = morphisms[0].target
    for m in morphisms[1:]:
        if m.source is not E or m.target is not F:
            raise NotSubgroup("summands must share source and target")
    if len(morphisms) == 1:
        return morphisms[0]

    images = []
    for m in morphisms:
        img_sub = m.image_subgroup()
        images.append(Subsystem(img_sub, image(m)))
    try:
        commute = commute_check(F, images, build_witness=False)
    except NotCommuting as exc:
        raise NotSummable(
            "images of the summands do not commute", witness=exc.witness
        ) from exc

    G = F.base
    summed = []
    for x in range(E.base.order):
        acc = 0
        for m in morphisms:
            acc = G.mul(acc, m.images[x])
        summed.append(acc)
    for x in range(E.base.order):
        for y in range(E.base.order):
            if summed[E.base.mul(x, y)] != G.mul(summed[x], summed[y]):
                raise InternalInconsistency(
                    "sum of summable morphisms is not a homomorphism"
                )
    try:
        total = check_morphism(E, F, tuple(summed))
    except NotFusionPreserving as exc:
        raise InternalInconsistency(
            f"sum of summable morphisms rejected: {exc}"
        ) from exc

    # the image of the sum lands inside the inner product of the images
    inner_maps = {
        (members, mp) for members, mp in Subsystem(
            commute.inner_base, commute.inner
        ).translated_maps()
    }
    img_total = Subsystem(total.image_subgroup(), image(total))
    for members, mp in img_total.translated_maps():
        if (members, mp) not in inner_maps:
            raise InternalInconsistency(
                "image of the sum escapes the product of the images"
            )
    return total
