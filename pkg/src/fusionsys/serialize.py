"""JSON schemas for groups, fusion systems, morphisms and certificates.

All dumps are canonical (sorted keys, compact separators) so identical
inputs produce byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
from typing import Optional

from .errors import UsageError
from .groups import FiniteGroup, Subgroup, cycles_to_perm, perm_to_cycles
from .fusion import FusionSystem, lattice_of


def canonical_dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def digest(data) -> str:
    return hashlib.sha256(canonical_dumps(data).encode()).hexdigest()


# ---------------------------------------------------------------------------
# groups


def group_to_json(G: FiniteGroup) -> dict:
    if G.perms is not None:
        return {
            "points": G.degree,
            "generators": [perm_to_cycles(G.perms[g]) for g in G.generators],
        }
    return {
        "cayley": [[G.mul(a, b) for b in range(G.order)] for a in range(G.order)],
        "generators": list(G.generators),
    }


def group_from_json(data: dict, *, prime_hint: Optional[int] = None) -> FiniteGroup:
    if "generators" in data and "points" in data:
        points = int(data["points"])
        perms = [
            cycles_to_perm([list(c) for c in gen], points)
            for gen in data["generators"]
        ]
        return FiniteGroup.from_permutations(
            perms, points=points, prime_hint=prime_hint
        )
    if "cayley" in data:
        return FiniteGroup.from_cayley(
            data["cayley"],
            generators=data.get("generators"),
            prime_hint=prime_hint,
        )
    raise UsageError("group JSON needs either points/generators or a cayley table")


def group_description(G: FiniteGroup) -> dict:
    return {
        "order": G.order,
        "degree": G.degree,
        "abelian": G.is_abelian,
        "generators": [G.element_repr(g) for g in G.generators],
        "center_order": len(G.center_members()),
        "conjugacy_classes": len(G.conjugacy_classes()),
        "element_orders": sorted(
            {G.element_order(x) for x in range(G.order)}
        ),
    }


# ---------------------------------------------------------------------------
# fusion systems


def fusion_to_json(F: FusionSystem) -> dict:
    lat = F.lattice
    k = len(lat.subs)
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            row.append([list(m) for m in F.hom_maps(i, j)])
        table.append(row)
    return {
        "p": F.p,
        "base": group_to_json(F.base),
        "subgroups": [list(s.members) for s in lat.subs],
        "hom_table": table,
    }


def fusion_from_json(data: dict) -> FusionSystem:
    p = int(data["p"])
    base = group_from_json(data["base"], prime_hint=p)
    lat = lattice_of(base)
    declared = [tuple(m) for m in data["subgroups"]]
    if declared != [s.members for s in lat.subs]:
        raise UsageError("declared subgroup list does not match the base group")
    full = lat.full_index
    maps = [set() for _ in lat.subs]
    table = data["hom_table"]
    for i in range(len(lat.subs)):
        for m in table[i][full]:
            maps[i].add(tuple(m))
    F = FusionSystem(base, p, maps, _lattice=lat)
    # per-pair entries must agree with the slices of the maps into S
    for i in range(len(lat.subs)):
        for j in range(len(lat.subs)):
            declared_pair = sorted(tuple(m) for m in table[i][j])
            if declared_pair != sorted(F.hom_maps(i, j)):
                raise UsageError(f"hom table entry ({i},{j}) is not consistent")
    return F


def subgroup_to_json(S: Subgroup) -> list[int]:
    return list(S.members)


# ---------------------------------------------------------------------------
# morphisms, factorizations, certificates


def morphism_to_json(m) -> dict:
    return {
        "source": m.source.base.order,
        "target": m.target.base.order,
        "map": list(m.images),
    }


def factorization_to_json(fact) -> dict:
    return {
        "parts": [
            {
                "base": list(part.base.members),
                "fusion": fusion_to_json(part.system),
            }
            for part in fact.parts
        ]
    }


def factorization_bases_from_json(data: dict) -> list[tuple[int, ...]]:
    parts = data["parts"]
    bases = []
    for part in parts:
        if isinstance(part, dict):
            bases.append(tuple(int(x) for x in part["base"]))
        else:
            bases.append(tuple(int(x) for x in part))
    return bases


def certificate_to_json(cert) -> dict:
    return {
        "alpha": list(cert.alpha.images),
        "complement": list(cert.alpha.complement.images),
        "sigma": list(cert.sigma),
        "log": [list(h.images) for h in cert.construction_log],
        "constructive": cert.constructive,
        "note": cert.note,
    }


def omega_maps_from_json(data: dict) -> list[tuple[int, ...]]:
    return [tuple(int(v) for v in row) for row in data["maps"]]
