"""Command-line frontend.

Every command prints a JSON report with a canonical layout; identical
inputs give byte-identical reports.  Wall-clock timings are only included
behind ``--timings`` because they would break that guarantee.

Exit codes: 0 success, 1 mathematical rejection, 2 usage error,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from . import catalog, serialize, verify
from .errors import FusionError, UsageError
from .groups import FiniteGroup, GroupHom, Subgroup, sylow
from .fusion import (
    FusionSystem,
    conjugacy,
    fusion_invariants,
    fusion_of_group,
    generated_fusion,
    saturation_report,
)
from .morphisms import check_morphism
from .factor import (
    Factorization,
    OmegaContext,
    factorize,
    factorize_all,
    krs_certificate,
    goldschmidt_factor,
    _assemble_factorization,
)


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from exc


def _load_group_arg(args) -> tuple[FiniteGroup, Optional[int], dict]:
    if getattr(args, "catalog", None):
        b = catalog.built(args.catalog)
        data = {"catalog": args.catalog}
        return b.group, b.entry.prime, data
    if getattr(args, "infile", None):
        data = _load_json(args.infile)
        prime = getattr(args, "p", None)
        return serialize.group_from_json(data, prime_hint=prime), prime, data
    raise UsageError("need --in FILE or --catalog NAME")


def _load_fusion_arg(args) -> tuple[FusionSystem, dict]:
    if getattr(args, "catalog", None):
        b = catalog.built(args.catalog)
        return b.fusion, {"catalog": args.catalog}
    if getattr(args, "infile", None):
        data = _load_json(args.infile)
        if "hom_table" in data:
            return serialize.fusion_from_json(data), data
        if getattr(args, "p", None) is None:
            raise UsageError("group input needs --p PRIME")
        G = serialize.group_from_json(data, prime_hint=args.p)
        return fusion_of_group(G, args.p), data
    raise UsageError("need --in FILE or --catalog NAME")


def _load_omega(args, F: FusionSystem) -> Optional[OmegaContext]:
    path = getattr(args, "omega", None)
    if not path:
        return None
    data = _load_json(path)
    maps = serialize.omega_maps_from_json(data)
    gens = [check_morphism(F, F, m) for m in maps]
    return OmegaContext.from_morphisms(F, gens)


def _factorization_from_arg(F: FusionSystem, path: str) -> Factorization:
    data = _load_json(path)
    bases = serialize.factorization_bases_from_json(data)
    return _assemble_factorization(F, bases)


# ---------------------------------------------------------------------------
# command handlers: each returns a result dict


def cmd_group_load(args) -> dict:
    G, _, _ = _load_group_arg(args)
    return {"group": serialize.group_to_json(G), "order": G.order}


def cmd_group_describe(args) -> dict:
    G, prime, _ = _load_group_arg(args)
    desc = serialize.group_description(G)
    p = getattr(args, "p", None) or prime
    if p:
        from .groups import characteristic_subgroups

        chars = characteristic_subgroups(G, p)
        desc["p"] = p
        desc["sylow"] = serialize.subgroup_to_json(sylow(G, p))
        desc["center"] = serialize.subgroup_to_json(chars.center)
        desc["derived"] = serialize.subgroup_to_json(chars.derived)
        desc["p_prime_core"] = serialize.subgroup_to_json(chars.o_p_prime)
        desc["p_residual"] = serialize.subgroup_to_json(chars.o_upper_p_prime)
    return desc


def cmd_fusion_of_group(args) -> dict:
    G, prime, _ = _load_group_arg(args)
    p = getattr(args, "p", None) or prime
    if not p:
        raise UsageError("need --p PRIME")
    F = fusion_of_group(G, p)
    return {"fusion": serialize.fusion_to_json(F)}


def cmd_fusion_generate(args) -> dict:
    data = _load_json(args.infile)
    if "group" not in data or "generators" not in data:
        raise UsageError("generate input needs 'group', 'p' and 'generators'")
    p = int(data.get("p", getattr(args, "p", 0) or 0))
    if not p:
        raise UsageError("generate input needs a prime")
    G = serialize.group_from_json(data["group"], prime_hint=p)
    gens = []
    for spec in data["generators"]:
        domain = Subgroup(G, spec["domain"])
        images = tuple(int(v) for v in spec["images"])
        gens.append(GroupHom(domain, G.full_subgroup(), images))
    F = generated_fusion(G, gens, p=p)
    return {"fusion": serialize.fusion_to_json(F)}


def cmd_analyze(args) -> dict:
    F, _ = _load_fusion_arg(args)
    report = saturation_report(F)
    inv = fusion_invariants(F)
    classes = conjugacy(F)
    return {
        "base_order": F.base.order,
        "p": F.p,
        "subgroups": len(F.lattice.subs),
        "morphisms": F.morphism_count(),
        "saturated": report.verdict,
        "continuity": report.continuity,
        "center": serialize.subgroup_to_json(inv.center),
        "focal": serialize.subgroup_to_json(inv.focal),
        "strongly_closed": [list(s.members) for s in inv.strongly_closed],
        "centric": list(inv.centric),
        "radical": list(inv.radical),
        "subgroup_classes": [list(c) for c in classes.subgroup_classes],
        "element_classes": [list(c) for c in classes.element_classes],
    }


def cmd_factorize(args) -> dict:
    F, _ = _load_fusion_arg(args)
    omega = _load_omega(args, F)
    if args.exhaustive:
        facts = factorize_all(F, omega)
        return {
            "count": len(facts),
            "factorizations": [serialize.factorization_to_json(f) for f in facts],
        }
    fact = factorize(F, omega)
    return {
        "parts": len(fact.parts),
        "factorization": serialize.factorization_to_json(fact),
        "indecomposable": len(fact.parts) == 1,
    }


def cmd_krs(args) -> dict:
    F, _ = _load_fusion_arg(args)
    omega = _load_omega(args, F)
    fact1 = _factorization_from_arg(F, args.fact1)
    fact2 = _factorization_from_arg(F, args.fact2)
    cert = krs_certificate(F, fact1, fact2, omega)
    return {
        "certificate": serialize.certificate_to_json(cert),
        "parts": len(fact1.parts),
    }


def cmd_goldschmidt(args) -> dict:
    G, prime, _ = _load_group_arg(args)
    F = fusion_of_group(G, 2)
    fact = factorize(F)
    closures = goldschmidt_factor(G, fact)
    return {
        "parts": [list(p.base.members) for p in fact.parts],
        "closures": [serialize.subgroup_to_json(H) for H in closures],
        "closure_orders": [H.order for H in closures],
    }


def cmd_verify(args) -> dict:
    results = verify.run_suite(args.suite)
    return {
        "suite": args.suite,
        "passed": all(r.passed for r in results),
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
    }


def cmd_catalog_list(args) -> dict:
    return {
        "entries": [
            {"name": e.name, "prime": e.prime, "description": e.description}
            for e in catalog.ENTRIES
        ]
    }


def cmd_catalog_show(args) -> dict:
    e = catalog.entry(args.name)
    record = catalog.verify_expected(e.name)
    b = catalog.built(e.name)
    return {
        "name": e.name,
        "description": e.description,
        "prime": e.prime,
        "group": serialize.group_to_json(b.group),
        "verified": record,
    }


# ---------------------------------------------------------------------------
# driver


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report to a file")
    common.add_argument(
        "--timings", action="store_true", help="include wall-clock timings"
    )

    parser = argparse.ArgumentParser(
        prog="fusionsys",
        description="exact computations with saturated fusion systems over finite p-groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="load or describe a finite group")
    gsub = g.add_subparsers(dest="subcommand", required=True)
    for name, fn in (("load", cmd_group_load), ("describe", cmd_group_describe)):
        sp = gsub.add_parser(name, parents=[common])
        sp.add_argument("--in", dest="infile")
        sp.add_argument("--catalog")
        sp.add_argument("--p", type=int)
        sp.set_defaults(handler=fn)

    f = sub.add_parser("fusion", help="build a fusion system")
    fsub = f.add_subparsers(dest="subcommand", required=True)
    sp = fsub.add_parser("of-group", parents=[common])
    sp.add_argument("--in", dest="infile")
    sp.add_argument("--catalog")
    sp.add_argument("--p", type=int)
    sp.set_defaults(handler=cmd_fusion_of_group)
    sp = fsub.add_parser("generate", parents=[common])
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--p", type=int)
    sp.set_defaults(handler=cmd_fusion_generate)

    sp = sub.add_parser(
        "analyze", parents=[common], help="saturation and structural invariants"
    )
    sp.add_argument("--in", dest="infile")
    sp.add_argument("--catalog")
    sp.add_argument("--p", type=int)
    sp.set_defaults(handler=cmd_analyze)

    sp = sub.add_parser(
        "factorize", parents=[common], help="indecomposable direct factors"
    )
    sp.add_argument("--in", dest="infile")
    sp.add_argument("--catalog")
    sp.add_argument("--p", type=int)
    sp.add_argument("--omega", help="JSON file with automorphism maps")
    sp.add_argument("--exhaustive", action="store_true")
    sp.set_defaults(handler=cmd_factorize)

    sp = sub.add_parser(
        "krs",
        parents=[common],
        help="link two factorizations by a normal automorphism",
    )
    sp.add_argument("--in", dest="infile")
    sp.add_argument("--catalog")
    sp.add_argument("--p", type=int)
    sp.add_argument("--fact1", required=True)
    sp.add_argument("--fact2", required=True)
    sp.add_argument("--omega")
    sp.set_defaults(handler=cmd_krs)

    sp = sub.add_parser(
        "goldschmidt", parents=[common], help="lift a p=2 factorization to the group"
    )
    sp.add_argument("--in", dest="infile")
    sp.add_argument("--catalog")
    sp.set_defaults(handler=cmd_goldschmidt)

    sp = sub.add_parser("verify", parents=[common], help="run a property suite")
    sp.add_argument("suite", choices=sorted(verify.SUITES))
    sp.set_defaults(handler=cmd_verify)

    c = sub.add_parser("catalog", help="bundled example groups")
    csub = c.add_subparsers(dest="subcommand", required=True)
    sp = csub.add_parser("list", parents=[common])
    sp.set_defaults(handler=cmd_catalog_list)
    sp = csub.add_parser("show", parents=[common])
    sp.add_argument("name")
    sp.set_defaults(handler=cmd_catalog_show)

    return parser


def _input_digests(args) -> dict:
    digests = {}
    for attr in ("infile", "fact1", "fact2", "omega"):
        path = getattr(args, attr, None)
        if path:
            digests[attr] = serialize.digest(_load_json(path))
    if getattr(args, "catalog", None):
        digests["catalog"] = args.catalog
    return digests


def run(argv) -> tuple[int, dict]:
    """Execute a command line; returns (exit_code, report)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    report = {"command": list(argv)}
    try:
        report["inputs"] = _input_digests(args)
        results = args.handler(args)
    except FusionError as exc:
        report["error"] = exc.payload()
        report["hash"] = serialize.digest(report["error"])
        return exc.exit_code, report
    mathematical_failure = (
        args.handler is cmd_verify and not results.get("passed", True)
    )
    report["results"] = results
    report["hash"] = serialize.digest(results)
    if args.timings:
        report["timings"] = {"seconds": round(time.monotonic() - started, 3)}
    return (1 if mathematical_failure else 0), report


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit with code 2
        return int(exc.code or 0)
    started = time.monotonic()
    report = {"command": argv}
    code = 0
    try:
        report["inputs"] = _input_digests(args)
        results = args.handler(args)
    except FusionError as exc:
        report["error"] = exc.payload()
        report["hash"] = serialize.digest(report["error"])
        code = exc.exit_code
    else:
        report["results"] = results
        report["hash"] = serialize.digest(results)
        if args.handler is cmd_verify and not results.get("passed", True):
            code = 1
        if args.timings:
            report["timings"] = {"seconds": round(time.monotonic() - started, 3)}
    payload = serialize.canonical_dumps(report)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
