"""Exact arithmetic for small finite groups.

Groups are given by permutation generators or a Cayley table and carry a
dense element table over ids ``0..n-1`` with id 0 the identity.  All
operations are deterministic: permutation input is closed by BFS over the
generators in input order, subgroups are ordered by (order, member tuple)
and every search breaks ties by least id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    ClosureTooLarge,
    GroupTooLarge,
    GuardrailExceeded,
    NotAbelian,
    NotBijection,
    NotPGroup,
    NotSubgroup,
)
from . import guardrails

Perm = tuple[int, ...]

# Dense n*n multiplication tables are kept up to this order; larger
# permutation groups multiply by composing tuples through a lookup dict.
_DENSE_MUL_LIMIT = 1500


# ---------------------------------------------------------------------------
# permutation helpers


def perm_compose(a: Perm, b: Perm) -> Perm:
    """Right-to-left composition: apply ``b`` first, then ``a``."""
    return tuple(a[b[i]] for i in range(len(a)))


def perm_inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def cycles_to_perm(cycles: Sequence[Sequence[int]], points: int) -> Perm:
    """Build a 0-based image tuple from 1-based cycle lists."""
    images = list(range(points))
    for cycle in cycles:
        if not cycle:
            continue
        for pt in cycle:
            if not (1 <= pt <= points):
                raise NotBijection(f"cycle point {pt} outside 1..{points}")
        for i, pt in enumerate(cycle):
            src = pt - 1
            dst = cycle[(i + 1) % len(cycle)] - 1
            if images[src] != src:
                raise NotBijection(f"point {pt} appears in two cycles")
            images[src] = dst
    seen = set(images)
    if len(seen) != points:
        raise NotBijection("cycle data does not define a bijection")
    return tuple(images)


def perm_to_cycles(perm: Perm) -> list[list[int]]:
    """1-based cycle lists, fixed points omitted, least point first."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = []
        pt = start
        while not seen[pt]:
            seen[pt] = True
            cycle.append(pt + 1)
            pt = perm[pt]
        cycles.append(cycle)
    return cycles


def perm_word(perm: Perm) -> str:
    cycles = perm_to_cycles(perm)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)


# ---------------------------------------------------------------------------
# FiniteGroup


class FiniteGroup:
    """A finite group with elements 0..n-1 and id 0 the identity."""

    def __init__(
        self,
        mul_rows: Optional[list[list[int]]],
        generators: Sequence[int],
        *,
        degree: int = 0,
        perms: Optional[Sequence[Perm]] = None,
        prime_hint: Optional[int] = None,
        order: Optional[int] = None,
    ):
        if mul_rows is None and perms is None:
            raise ValueError("need a multiplication table or permutations")
        self._mul = mul_rows
        self.perms = tuple(perms) if perms is not None else None
        self.order = order if order is not None else (
            len(mul_rows) if mul_rows is not None else len(self.perms)
        )
        self.generators = tuple(generators)
        self.degree = degree
        self.prime_hint = prime_hint
        self._perm_index = (
            {p: i for i, p in enumerate(self.perms)} if self.perms is not None else None
        )
        self._inv: Optional[list[int]] = None
        self._orders: Optional[list[int]] = None
        self._abelian: Optional[bool] = None
        self._subgroups: Optional[list["Subgroup"]] = None
        self._subgroup_pos: Optional[dict[tuple[int, ...], int]] = None
        self._center: Optional[tuple[int, ...]] = None
        self._conj_classes: Optional[tuple[tuple[int, ...], ...]] = None

    # -- basic arithmetic -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return self._perm_index[perm_compose(self.perms[a], self.perms[b])]

    def inv(self, a: int) -> int:
        if self._inv is None:
            self._build_inverses()
        return self._inv[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def power(self, x: int, n: int) -> int:
        out, base = 0, x
        n = n % max(self.element_order(x), 1) if n < 0 else n
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def element_order(self, x: int) -> int:
        if self._orders is None:
            self._orders = [0] * self.order
        if self._orders[x]:
            return self._orders[x]
        n, y = 1, x
        while y != 0:
            y = self.mul(y, x)
            n += 1
        self._orders[x] = n
        return n

    def _build_inverses(self) -> None:
        inv = [0] * self.order
        if self.perms is not None and self._mul is None:
            for i, p in enumerate(self.perms):
                inv[i] = self._perm_index[perm_inverse(p)]
        else:
            for a in range(self.order):
                row = self._mul[a]
                for b in range(self.order):
                    if row[b] == 0:
                        inv[a] = b
                        break
        self._inv = inv

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = all(
                self.mul(a, b) == self.mul(b, a)
                for a in range(self.order)
                for b in range(a + 1, self.order)
            )
        return self._abelian

    def element_repr(self, x: int) -> str:
        if self.perms is not None:
            return perm_word(self.perms[x])
        return f"g{x}"

    # -- construction -----------------------------------------------------

    @classmethod
    def from_permutations(
        cls,
        gens: Sequence[Perm],
        *,
        points: Optional[int] = None,
        prime_hint: Optional[int] = None,
        limits: Optional[guardrails.Guardrails] = None,
    ) -> "FiniteGroup":
        """Close permutation generators by BFS in input order."""
        limits = limits or guardrails.active()
        if not gens:
            raise NotBijection("generator list is empty")
        k = points if points is not None else len(gens[0])
        norm = []
        for g in gens:
            g = tuple(g)
            if len(g) != k or sorted(g) != list(range(k)):
                raise NotBijection(f"not a bijection on {k} points: {g}")
            norm.append(g)
        identity = tuple(range(k))
        elements: list[Perm] = [identity]
        index = {identity: 0}
        queue = [identity]
        while queue:
            nxt = []
            for p in queue:
                for g in norm:
                    q = perm_compose(p, g)
                    if q not in index:
                        index[q] = len(elements)
                        elements.append(q)
                        nxt.append(q)
                        if len(elements) > limits.closure_limit:
                            raise ClosureTooLarge(
                                f"closure exceeds guardrail {limits.closure_limit}"
                            )
            queue = nxt
        n = len(elements)
        mul_rows = None
        if n <= _DENSE_MUL_LIMIT:
            mul_rows = [
                [index[perm_compose(a, b)] for b in elements] for a in elements
            ]
        gen_ids = []
        for g in norm:
            gid = index[g]
            if gid != 0 and gid not in gen_ids:
                gen_ids.append(gid)
        if not gen_ids and n == 1:
            gen_ids = []
        return cls(
            mul_rows,
            gen_ids,
            degree=k,
            perms=elements,
            prime_hint=prime_hint,
            order=n,
        )

    @classmethod
    def from_cayley(
        cls,
        table: Sequence[Sequence[int]],
        *,
        generators: Optional[Sequence[int]] = None,
        prime_hint: Optional[int] = None,
    ) -> "FiniteGroup":
        """Build from a row-major Cayley table; id 0 must be the identity."""
        n = len(table)
        rows = [list(r) for r in table]
        for r in rows:
            if len(r) != n or any(not (0 <= v < n) for v in r):
                raise NotSubgroup("malformed Cayley table")
        for x in range(n):
            if rows[0][x] != x or rows[x][0] != x:
                raise NotSubgroup("id 0 is not a two-sided identity")
        for x in range(n):
            if 0 not in rows[x]:
                raise NotSubgroup(f"element {x} has no inverse")
        group = cls(rows, generators or [], prime_hint=prime_hint)
        if generators is None:
            group = cls(rows, group._greedy_generators(), prime_hint=prime_hint)
        elif len(_closure_ids(group, group.generators)) != n:
            raise NotSubgroup("declared generators do not generate")
        # Light's associativity test over the generating set.
        for g in group.generators or range(n):
            rg = rows[g]
            for x in range(n):
                xg = rows[x][g]
                rx = rows[x]
                for y in range(n):
                    if rows[xg][y] != rx[rg[y]]:
                        raise NotSubgroup("multiplication table is not associative")
        return group

    def _greedy_generators(self) -> list[int]:
        gens: list[int] = []
        have = {0}
        while len(have) < self.order:
            x = min(i for i in range(self.order) if i not in have)
            gens.append(x)
            have = set(_closure_ids(self, gens))
        return gens

    # -- subgroups ----------------------------------------------------------

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(self.order), _checked=True)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,))

    def generated_subgroup(self, seed: Iterable[int]) -> "Subgroup":
        return Subgroup(self, _closure_ids(self, seed), _checked=True)

    def center_members(self) -> tuple[int, ...]:
        if self._center is None:
            self._center = tuple(
                x
                for x in range(self.order)
                if all(self.mul(x, y) == self.mul(y, x) for y in range(self.order))
            )
        return self._center

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        if self._conj_classes is None:
            seen = [False] * self.order
            classes = []
            for x in range(self.order):
                if seen[x]:
                    continue
                orbit = sorted({self.conj(g, x) for g in range(self.order)})
                for y in orbit:
                    seen[y] = True
                classes.append(tuple(orbit))
            self._conj_classes = tuple(classes)
        return self._conj_classes

    def verify_axioms(self) -> None:
        """Exhaustive associativity/identity/inverse check (small groups)."""
        n = self.order
        for x in range(n):
            if self.mul(0, x) != x or self.mul(x, 0) != x:
                raise NotSubgroup("identity law fails")
            ix = self.inv(x)
            if self.mul(x, ix) != 0 or self.mul(ix, x) != 0:
                raise NotSubgroup("inverse law fails")
        for a in range(n):
            for b in range(n):
                ab = self.mul(a, b)
                for c in range(n):
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)):
                        raise NotSubgroup("associativity fails")

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, degree={self.degree})"


def _closure_ids(G: FiniteGroup, seed: Iterable[int]) -> tuple[int, ...]:
    members = {0}
    queue = [0]
    gens = [g for g in seed if g != 0]
    for g in gens:
        if g not in members:
            members.add(g)
            queue.append(g)
    while queue:
        x = queue.pop()
        for g in gens:
            y = G.mul(x, g)
            if y not in members:
                members.add(y)
                queue.append(y)
            z = G.mul(g, x)
            if z not in members:
                members.add(z)
                queue.append(z)
    return tuple(sorted(members))


# ---------------------------------------------------------------------------
# Subgroup


class Subgroup:
    """A subgroup of a FiniteGroup, stored as a sorted member tuple."""

    def __init__(self, parent: FiniteGroup, members: Iterable[int], *, _checked: bool = False):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        self.member_set = frozenset(self.members)
        if 0 not in self.member_set:
            raise NotSubgroup("subgroup must contain the identity")
        if not _checked:
            for x in self.members:
                if parent.inv(x) not in self.member_set:
                    raise NotSubgroup(f"not closed under inversion at {x}")
                for y in self.members:
                    if parent.mul(x, y) not in self.member_set:
                        raise NotSubgroup(f"not closed under product at ({x},{y})")
        self._pos: Optional[dict[int, int]] = None
        self._as_group: Optional[tuple[FiniteGroup, tuple[int, ...]]] = None
        self._canonical_index: Optional[int] = None

    @property
    def order(self) -> int:
        return len(self.members)

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.members), self.members)

    @property
    def canonical_index(self) -> int:
        """Position in the parent's canonical subgroup ordering."""
        if self._canonical_index is None:
            subgroups(self.parent)
            self._canonical_index = self.parent._subgroup_pos[self.members]
        return self._canonical_index

    def pos(self, x: int) -> int:
        if self._pos is None:
            self._pos = {m: i for i, m in enumerate(self.members)}
        return self._pos[x]

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def issubset(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, members={self.members})"

    # -- structure ---------------------------------------------------------

    def as_group(self) -> tuple[FiniteGroup, tuple[int, ...]]:
        """Standalone FiniteGroup plus the member map new-id -> parent-id.

        New ids follow the sorted member order, so nested conversions are
        consistent with each other.
        """
        if self._as_group is None:
            to_parent = self.members
            pos = {m: i for i, m in enumerate(to_parent)}
            rows = [
                [pos[self.parent.mul(a, b)] for b in to_parent] for a in to_parent
            ]
            perms = None
            degree = 0
            if self.parent.perms is not None:
                perms = tuple(self.parent.perms[m] for m in to_parent)
                degree = self.parent.degree
            gens = [pos[g] for g in _greedy_generating_sequence(self.parent, self.members)]
            grp = FiniteGroup(
                rows,
                gens,
                degree=degree,
                perms=perms,
                prime_hint=self.parent.prime_hint,
            )
            self._as_group = (grp, to_parent)
        return self._as_group

    def generating_sequence(self) -> tuple[int, ...]:
        """Greedy irredundant generating sequence (parent ids)."""
        return _greedy_generating_sequence(self.parent, self.members)

    def centralizer_in(self, ambient: Optional["Subgroup"] = None) -> "Subgroup":
        G = self.parent
        pool = ambient.members if ambient is not None else range(G.order)
        members = [
            g
            for g in pool
            if all(G.mul(g, x) == G.mul(x, g) for x in self.members)
        ]
        return Subgroup(G, members, _checked=True)

    def normalizer_in(self, ambient: Optional["Subgroup"] = None) -> "Subgroup":
        G = self.parent
        pool = ambient.members if ambient is not None else range(G.order)
        members = [
            g
            for g in pool
            if all(G.conj(g, x) in self.member_set for x in self.members)
        ]
        return Subgroup(G, members, _checked=True)

    def conjugate_by(self, g: int) -> "Subgroup":
        G = self.parent
        return Subgroup(G, (G.conj(g, x) for x in self.members), _checked=True)

    def is_normal(self) -> bool:
        G = self.parent
        return all(
            G.conj(g, x) in self.member_set
            for g in G.generators or range(G.order)
            for x in self.members
        )

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.member_set & other.member_set, _checked=True)

    def product_set(self, other: "Subgroup") -> frozenset[int]:
        G = self.parent
        return frozenset(G.mul(a, b) for a in self.members for b in other.members)


def _greedy_generating_sequence(G: FiniteGroup, members: Sequence[int]) -> tuple[int, ...]:
    member_set = set(members)
    seq: list[int] = []
    have = {0}
    while have != member_set:
        x = min(m for m in members if m not in have)
        seq.append(x)
        have = set(_closure_ids(G, seq))
    # drop redundant generators; for p-groups this makes the set minimal
    changed = True
    while changed and len(seq) > 1:
        changed = False
        for i in range(len(seq)):
            trial = seq[:i] + seq[i + 1 :]
            if set(_closure_ids(G, trial)) == member_set:
                seq = trial
                changed = True
                break
    return tuple(seq)


# ---------------------------------------------------------------------------
# GroupHom


class GroupHom:
    """A homomorphism between subgroups, possibly of different groups.

    ``images[i]`` is the image (an id in the codomain's parent group) of
    ``domain.members[i]``.
    """

    __slots__ = ("domain", "codomain", "images")

    def __init__(
        self,
        domain: Subgroup,
        codomain: Subgroup,
        images: Sequence[int],
        *,
        _checked: bool = False,
    ):
        self.domain = domain
        self.codomain = codomain
        self.images = tuple(images)
        if not _checked:
            self.validate()

    def validate(self) -> None:
        if len(self.images) != self.domain.order:
            raise NotSubgroup("image tuple length mismatch")
        cod_set = self.codomain.member_set
        if any(v not in cod_set for v in self.images):
            raise NotSubgroup("image leaves the codomain")
        A, B = self.domain.parent, self.codomain.parent
        mem = self.domain.members
        for i, x in enumerate(mem):
            for j, y in enumerate(mem):
                xy = A.mul(x, y)
                if self.images[self.domain.pos(xy)] != B.mul(self.images[i], self.images[j]):
                    raise NotSubgroup(f"not a homomorphism at ({x},{y})")

    def map(self, x: int) -> int:
        return self.images[self.domain.pos(x)]

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def image_members(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.images)))

    def restrict(self, sub: Subgroup) -> "GroupHom":
        if not sub.issubset(self.domain):
            raise NotSubgroup("restriction target is not inside the domain")
        return GroupHom(
            sub,
            self.codomain,
            tuple(self.map(x) for x in sub.members),
            _checked=True,
        )

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self o inner (apply ``inner`` first)."""
        if not frozenset(inner.images) <= self.domain.member_set:
            raise NotSubgroup("morphisms are not composable")
        return GroupHom(
            inner.domain,
            self.codomain,
            tuple(self.map(v) for v in inner.images),
            _checked=True,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupHom)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((self.domain.members, self.codomain.members, self.images))

    def __repr__(self) -> str:
        return f"GroupHom({self.domain.members} -> {self.images})"


# ---------------------------------------------------------------------------
# subgroup enumeration


def subgroups(G: FiniteGroup, *, limits: Optional[guardrails.Guardrails] = None) -> list[Subgroup]:
    """All subgroups of ``G`` in canonical (order, member tuple) order."""
    if G._subgroups is not None:
        return G._subgroups
    limits = limits or guardrails.active()
    if G.order > limits.subgroup_limit:
        raise GroupTooLarge(
            f"subgroup enumeration limited to order {limits.subgroup_limit}, got {G.order}"
        )
    trivial = (0,)
    found: dict[tuple[int, ...], tuple[int, ...]] = {trivial: ()}
    frontier = [(trivial, ())]
    while frontier:
        nxt = []
        for members, gens in frontier:
            member_set = set(members)
            for x in range(1, G.order):
                if x in member_set:
                    continue
                new_gens = gens + (x,)
                closed = _closure_ids(G, new_gens)
                if closed not in found:
                    found[closed] = new_gens
                    nxt.append((closed, new_gens))
        frontier = nxt
    ordered = sorted(found, key=lambda m: (len(m), m))
    subs = [Subgroup(G, m, _checked=True) for m in ordered]
    for i, s in enumerate(subs):
        s._canonical_index = i
    G._subgroups = subs
    G._subgroup_pos = {s.members: i for i, s in enumerate(subs)}
    return subs


# ---------------------------------------------------------------------------
# characteristic subgroups


@dataclass(frozen=True)
class CharacteristicSubgroups:
    center: Subgroup
    derived: Subgroup
    o_p_prime: Subgroup
    o_upper_p_prime: Subgroup


def characteristic_subgroups(G: FiniteGroup, p: int) -> CharacteristicSubgroups:
    """Center, derived subgroup and the two p-local cores of ``G``."""
    center = Subgroup(G, G.center_members(), _checked=True)
    commutators = {
        G.mul(G.mul(x, y), G.inv(G.mul(y, x)))
        for x in range(G.order)
        for y in range(G.order)
    }
    derived = G.generated_subgroup(commutators)

    # Normal subgroups are exactly the joins of normal closures of
    # conjugacy classes, so the largest normal p'-subgroup is the join of
    # the p'-ones among those.
    normals = _normal_subgroup_lattice(G)
    coprime = [N for N in normals if len(N) % p != 0]
    join: set[int] = {0}
    for N in coprime:
        join.update(N)
    o_p_prime = G.generated_subgroup(join)
    if o_p_prime.order % p == 0 and o_p_prime.order > 1:
        raise NotSubgroup("join of coprime normal subgroups is not coprime")

    p_elements = [x for x in range(G.order) if _is_p_power(G.element_order(x), p)]
    o_upper = G.generated_subgroup(p_elements)
    return CharacteristicSubgroups(center, derived, o_p_prime, o_upper)


def _normal_subgroup_lattice(G: FiniteGroup) -> list[tuple[int, ...]]:
    seeds = []
    for cls in G.conjugacy_classes():
        seeds.append(_closure_ids(G, cls))
    normals = {(0,)}
    normals.update(seeds)
    changed = True
    while changed:
        changed = False
        current = list(normals)
        for a in current:
            for b in current:
                joined = _closure_ids(G, set(a) | set(b))
                if joined not in normals:
                    normals.add(joined)
                    changed = True
    return sorted(normals, key=lambda m: (len(m), m))


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


# ---------------------------------------------------------------------------
# normal closure, Sylow subgroups


def normal_closure(G: FiniteGroup, X: Subgroup) -> Subgroup:
    """Smallest normal subgroup of ``G`` containing ``X``."""
    if X.parent is not G:
        raise NotSubgroup("subgroup belongs to a different group")
    members = set(X.members)
    while True:
        conjugates = {
            G.conj(g, x) for g in (G.generators or range(G.order)) for x in members
        }
        if conjugates <= members:
            closed = set(_closure_ids(G, members))
            if closed == members:
                return Subgroup(G, members, _checked=True)
            members = closed
        else:
            members |= conjugates
            members = set(_closure_ids(G, members))


def sylow(G: FiniteGroup, p: int) -> Subgroup:
    """A deterministic Sylow p-subgroup (least member tuple among all)."""
    target = p_part(G.order, p)
    if target == 1:
        return G.trivial_subgroup()
    current = G.trivial_subgroup()
    while current.order < target:
        normalizer = current.normalizer_in()
        extension = None
        for x in normalizer.members:
            if x in current.member_set:
                continue
            if _is_p_power(G.element_order(x), p):
                extension = x
                break
        if extension is None:
            break
        current = G.generated_subgroup(set(current.members) | {extension})
    if current.order != target:
        raise NotSubgroup("maximal p-subgroup is not of full p-part order")
    best = current.members
    seen = {best}
    for g in range(G.order):
        cand = tuple(sorted(G.conj(g, x) for x in current.members))
        if cand not in seen:
            seen.add(cand)
            if cand < best:
                best = cand
    return Subgroup(G, best, _checked=True)


# ---------------------------------------------------------------------------
# homomorphism enumeration


def injective_homs(
    P: Subgroup,
    Q: Subgroup,
    *,
    injective: bool = True,
    limits: Optional[guardrails.Guardrails] = None,
) -> list[GroupHom]:
    """All (injective) homomorphisms P -> Q by backtracking on generators.

    Results come in lexicographic order of the image tuple over
    ``P.members``.
    """
    limits = limits or guardrails.active()
    A, B = P.parent, Q.parent
    if injective and P.order > Q.order:
        return []
    gens = _greedy_generating_sequence(A, P.members)
    if not gens:
        return [GroupHom(P, Q, (0,), _checked=True)]

    candidates: list[list[int]] = []
    space = 1
    for g in gens:
        og = A.element_order(g)
        if injective:
            opts = [q for q in Q.members if B.element_order(q) == og]
        else:
            opts = [q for q in Q.members if og % B.element_order(q) == 0]
        candidates.append(opts)
        space *= max(len(opts), 1)
        if space > limits.hom_search_limit:
            raise GuardrailExceeded(
                f"hom search space {space} exceeds {limits.hom_search_limit}"
            )

    results: list[tuple[int, ...]] = []

    def spread(assigned: dict[int, int]) -> Optional[dict[int, int]]:
        # close the partial map over the subgroup generated by its keys;
        # None on any inconsistency.
        known = dict(assigned)
        known[0] = 0
        queue = list(known)
        keys = list(assigned)
        while queue:
            x = queue.pop()
            for g in keys:
                y = A.mul(x, g)
                img = B.mul(known[x], known[g])
                if y in known:
                    if known[y] != img:
                        return None
                else:
                    known[y] = img
                    queue.append(y)
        return known

    def extend(assigned: dict[int, int], step: int) -> None:
        if step == len(gens):
            results.append(tuple(assigned[m] for m in P.members))
            return
        g = gens[step]
        for q in candidates[step]:
            trial = dict(assigned)
            trial[g] = q
            closed = spread(trial)
            if closed is None:
                continue
            if injective and len(set(closed.values())) != len(closed):
                continue
            extend(closed, step + 1)

    extend({}, 0)
    return [GroupHom(P, Q, images, _checked=True) for images in sorted(set(results))]


def all_homs(P: Subgroup, Q: Subgroup, *, limits=None) -> list[GroupHom]:
    return injective_homs(P, Q, injective=False, limits=limits)


def automorphisms(G: FiniteGroup, *, limits=None) -> list[GroupHom]:
    full = G.full_subgroup()
    return [h for h in injective_homs(full, full, limits=limits) if h.is_injective]


# ---------------------------------------------------------------------------
# quotients and the Omega-central series


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, list[int]]:
    """Quotient by a normal subgroup; returns (G/N, projection id map).

    Cosets are labelled in order of their least member, so the identity
    coset gets id 0.
    """
    if not N.is_normal():
        raise NotSubgroup("quotient by a non-normal subgroup")
    label = [-1] * G.order
    reps: list[int] = []
    for x in range(G.order):
        if label[x] >= 0:
            continue
        rep_id = len(reps)
        reps.append(x)
        for n in N.members:
            label[G.mul(x, n)] = rep_id
    rows = [[label[G.mul(a, b)] for b in reps] for a in reps]
    gens = []
    for g in G.generators:
        q = label[g]
        if q != 0 and q not in gens:
            gens.append(q)
    quo = FiniteGroup(rows, gens, prime_hint=G.prime_hint)
    if not gens and quo.order > 1:
        quo = FiniteGroup(rows, quo._greedy_generators(), prime_hint=G.prime_hint)
    return quo, label


@dataclass(frozen=True)
class OmegaSeries:
    terms: tuple[Subgroup, ...]


def group_prime(G: FiniteGroup) -> int:
    """The prime p for a p-group; raises otherwise."""
    n = G.order
    if n == 1:
        return G.prime_hint or 2
    p = 2
    while n % p:
        p += 1
    if not _is_p_power(G.order, p):
        raise NotPGroup(f"order {G.order} is not a prime power")
    return p


def omega_central_series(S: FiniteGroup) -> OmegaSeries:
    """Ascending series: each quotient is the exponent-p part of the
    quotient's center.  Terminates at S for a finite p-group."""
    p = group_prime(S)
    terms = [S.trivial_subgroup()]
    current = terms[0]
    while current.order < S.order:
        quo, label = quotient(S, current)
        zq = set(quo.center_members())
        omega1 = {q for q in zq if quo.power(q, p) == 0}
        lifted = [x for x in range(S.order) if label[x] in omega1]
        nxt = Subgroup(S, lifted, _checked=True)
        if nxt.order == current.order:
            raise NotPGroup("series stalled; input is not a p-group")
        terms.append(nxt)
        current = nxt
    return OmegaSeries(tuple(terms))


# ---------------------------------------------------------------------------
# Fitting-style splitting for abelian groups


def fitting_split(A: FiniteGroup, f: GroupHom) -> tuple[Subgroup, Subgroup]:
    """Split an abelian group under ``f`` into (stable image, nil kernel)."""
    if not A.is_abelian:
        raise NotAbelian("fitting_split requires an abelian group")
    if f.domain.parent is not A or f.codomain.parent is not A:
        raise NotSubgroup("endomorphism must live on the given group")
    if f.domain.order != A.order:
        raise NotSubgroup("endomorphism must be defined on the whole group")
    current = list(f.images)  # images indexed by element id
    prev_image: Optional[frozenset[int]] = None
    while True:
        image = frozenset(current)
        kernel = frozenset(x for x in range(A.order) if current[x] == 0)
        if image == prev_image:
            break
        prev_image = image
        current = [current[current[x]] for x in range(A.order)]
    T = Subgroup(A, image, _checked=True)
    U = Subgroup(A, kernel, _checked=True)
    if T.order * U.order != A.order or (T.member_set & U.member_set) != {0}:
        raise NotSubgroup("stable image and kernel do not split the group")
    return T, U


# ---------------------------------------------------------------------------
# direct products


@dataclass(frozen=True)
class DirectProduct:
    product: FiniteGroup
    embed1: GroupHom
    embed2: GroupHom
    proj1: GroupHom
    proj2: GroupHom


def direct_product(
    G1: FiniteGroup, G2: FiniteGroup, *, limits: Optional[guardrails.Guardrails] = None
) -> DirectProduct:
    """External direct product with ids ``(a, b) -> a*|G2| + b``."""
    limits = limits or guardrails.active()
    n1, n2 = G1.order, G2.order
    if n1 * n2 > limits.closure_limit:
        raise GroupTooLarge(f"product order {n1 * n2} exceeds {limits.closure_limit}")
    n = n1 * n2

    def enc(a: int, b: int) -> int:
        return a * n2 + b

    rows = []
    for x in range(n):
        a1, b1 = divmod(x, n2)
        row = [0] * n
        for y in range(n):
            a2, b2 = divmod(y, n2)
            row[y] = enc(G1.mul(a1, a2), G2.mul(b1, b2))
        rows.append(row)
    perms = None
    degree = 0
    if G1.perms is not None and G2.perms is not None:
        k1, k2 = G1.degree, G2.degree
        degree = k1 + k2
        perms = []
        for x in range(n):
            a, b = divmod(x, n2)
            pa, pb = G1.perms[a], G2.perms[b]
            perms.append(tuple(pa) + tuple(v + k1 for v in pb))
    gens = [enc(g, 0) for g in G1.generators] + [enc(0, h) for h in G2.generators]
    prod = FiniteGroup(rows, gens, degree=degree, perms=perms, prime_hint=G1.prime_hint)

    full1, full2, fullp = G1.full_subgroup(), G2.full_subgroup(), prod.full_subgroup()
    embed1 = GroupHom(full1, fullp, tuple(enc(a, 0) for a in range(n1)), _checked=True)
    embed2 = GroupHom(full2, fullp, tuple(enc(0, b) for b in range(n2)), _checked=True)
    proj1 = GroupHom(fullp, full1, tuple(x // n2 for x in range(n)), _checked=True)
    proj2 = GroupHom(fullp, full2, tuple(x % n2 for x in range(n)), _checked=True)
    return DirectProduct(prod, embed1, embed2, proj1, proj2)
