"""Command-line front end.

Usage:
    hopfext verify-all --zeta i [--variant A|Aprime]
    hopfext report --object B --zeta 1
    hopfext center --object B --zeta 1
    hopfext subalgebras --object B --dim 8 --zeta -i
    hopfext isomorphic --from Bprime --to B --zeta i
    hopfext dump --object Hd11 --output hd11.json

Exit codes:
    0: success
    1: a verification failed (the JSON lists the failures)
    2: bad arguments
"""
from __future__ import annotations

import argparse
import json
import sys

from . import analysis as an
from .acceptance import CRITERIA, named_characters, run_criterion, study
from .catalog import VARIANTS, ZETAS, build_context, build_Hd11, zeta_token, zeta_value
from .groups import recognize_group
from .hopf_core import (HopfAlgebra, StructureError, dual_hopf, inclusion_morphism,
                        restrict_to_subspace, verify_morphism)

SUBOBJECTS = ("N", "U", "P", "M1", "M2", "M3") + tuple(f"G{k}" for k in range(1, 8))
QUOTIENTS = {"Z": "N", "Q": "M2", "F": "G1"}
OBJECTS = ("B", "Bprime", "Bdual", "Hd11", "A", "Aprime", "C", "Cprime", "F1", "F2", "F3") \
    + SUBOBJECTS + tuple(QUOTIENTS)

ANCHORS = {
    "verify-all": "acceptance suite",
    "report": "structural summary",
    "center": "center of the biproduct",
    "grouplikes": "group-likes and their central part",
    "subalgebras": "Hopf subalgebras by dimension",
    "extensions": "extensions by normal Hopf subalgebras",
    "grothendieck": "Grothendieck ring of the biproduct",
    "isomorphic": "isomorphism of the two biproducts",
    "dump": "structure constants",
}


class UsageError(Exception):
    pass


def resolve(name: str, zeta: str):
    """The Hopf algebra (or YD Hopf algebra for A, Aprime, C, Cprime) called `name`."""
    s = study("A", zeta)
    if name == "B":
        return s.B
    if name == "Bprime":
        return build_context("Aprime", zeta).B
    if name == "Bdual":
        return s.dual
    if name == "Hd11":
        return build_Hd11()
    if name in ("A", "Aprime"):
        return build_context(name, zeta).A
    if name in ("C", "Cprime"):
        return build_context("A" if name == "C" else "Aprime", zeta).C
    if name in ("F1", "F2", "F3"):
        return s.N_quotients[name][1]
    if name in SUBOBJECTS:
        return s.ctx.hopf_subobject(name)
    if name in QUOTIENTS:
        return s.quotient(QUOTIENTS[name])[0]
    raise UsageError(f"unknown object {name!r}; choose from {', '.join(OBJECTS)}")


def _hopf(name: str, zeta: str) -> HopfAlgebra:
    H = resolve(name, zeta)
    if not isinstance(H, HopfAlgebra):
        raise UsageError(f"{name} is a Yetter-Drinfel'd Hopf algebra; only dump supports it")
    return H


def _vec_json(v) -> list:
    return [x.to_json() for x in v]


def _named(name: str, zeta: str) -> dict:
    """Named subobjects of B keyed by echelon basis, for labelling enumerations."""
    if name != "B":
        return {}
    s = study("A", zeta)
    return {s.sub(k): k for k in SUBOBJECTS}


# ------------------------------------------------------------------ commands

def cmd_center(args) -> tuple:
    H = _hopf(args.object, args.zeta)
    Z = an.center(H)
    return {"dim": Z.dim, "basis": [H.format(b) for b in Z.basis], "subspace": Z.to_json()}, []


def _grouplike_json(H: HopfAlgebra) -> dict:
    elems, G = an.grouplikes(H)
    central = an.central_grouplikes(H, elems)
    return {
        "count": len(elems),
        "group": recognize_group(G),
        "elements": [g.label for g in elems],
        "vectors": [_vec_json(g.vector) for g in elems],
        "central": [g.label for g in central],
    }


def cmd_grouplikes(args) -> tuple:
    H = _hopf(args.object, args.zeta)
    return {"grouplikes": _grouplike_json(H), "dual_grouplikes": _grouplike_json(dual_hopf(H))}, []


def _subalgebra_entries(H: HopfAlgebra, d: int, names: dict) -> list:
    entries = []
    for P in an.hopf_subalgebras_of_dim(H, d):
        entries.append({
            "name": names.get(P, ""),
            "dim": P.dim,
            "normal": an.is_normal_hopf_subalgebra(H, P),
            "basis": [H.format(b) for b in P.basis],
        })
    entries.sort(key=lambda e: (e["name"] == "", e["name"]))
    return entries


def cmd_subalgebras(args) -> tuple:
    if args.dim is None:
        raise UsageError("subalgebras needs --dim")
    H = _hopf(args.object, args.zeta)
    if args.dim < 1 or H.dim % args.dim:
        raise UsageError(f"--dim must divide {H.dim}")
    entries = _subalgebra_entries(H, args.dim, _named(args.object, args.zeta))
    return {"dim": args.dim, "count": len(entries), "subalgebras": entries,
            "normal": [e["normal"] for e in entries]}, []


def _extensions(H: HopfAlgebra, names: dict) -> list:
    out = []
    for d in sorted(k for k in range(2, H.dim) if H.dim % k == 0):
        for P in an.hopf_subalgebras_of_dim(H, d):
            if not an.is_normal_hopf_subalgebra(H, P):
                continue
            Q, pi = an.quotient_hopf(H, P, check_normal=False)
            sub = restrict_to_subspace(H, P)
            iota = inclusion_morphism(H, P, sub)
            verify_morphism(iota)
            rep = an.verify_extension(iota, pi)
            kind, group = an.recognize_hopf(Q)
            out.append({"subalgebra": names.get(P, ""), "dim": d, "quotient_dim": Q.dim,
                        "quotient": {"kind": kind, "group": group}, **rep.to_json()})
    return out


def cmd_extensions(args) -> tuple:
    H = _hopf(args.object, args.zeta)
    return {"extensions": _extensions(H, _named(args.object, args.zeta))}, []


def _grothendieck_json(H: HopfAlgebra, name: str, zeta: str) -> dict:
    chars = an.irreducible_characters(H)
    T = an.grothendieck_table(H, chars)
    labels = [f"chi_{k}" for k in range(len(chars))]
    if name in ("B", "Bprime"):
        s = study("A" if name == "B" else "Aprime", zeta)
        named = named_characters(s)
        by_vec = {tuple(v): k for k, v in named.items()}
        labels = [by_vec.get(tuple(c), labels[t]) for t, (c, _) in enumerate(chars)]
    products = {}
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            terms = [f"{c}*{labels[k]}" if c > 1 else labels[k]
                     for k, c in enumerate(T.structure_constants[i][j]) if c]
            products[f"{a}.{b}"] = " + ".join(terms)
    return {"characters": labels, "dims": dict(zip(labels, T.dims)),
            "commutative": T.is_commutative(), "products": products}


def cmd_grothendieck(args) -> tuple:
    H = _hopf(args.object, args.zeta)
    return _grothendieck_json(H, args.object, args.zeta), []


def cmd_report(args) -> tuple:
    H = _hopf(args.object, args.zeta)
    names = _named(args.object, args.zeta)
    W = an.wedderburn(H)
    subs = {str(d): _subalgebra_entries(H, d, names) for d in (4, 8, 16) if d < H.dim and H.dim % d == 0}
    report = {
        "object": args.object,
        "dim": H.dim,
        "center_dim": an.center(H).dim,
        "grouplikes": _grouplike_json(H),
        "wedderburn": W.block_dims,
        "split_certified": W.split_certified,
        "subalgebras": {d: len(v) for d, v in subs.items()},
        "normal": {d: [e["name"] or str(t) for t, e in enumerate(v) if e["normal"]] for d, v in subs.items()},
        "extensions": _extensions(H, names),
        "grothendieck": _grothendieck_json(H, args.object, args.zeta),
    }
    return report, []


def cmd_isomorphic(args) -> tuple:
    pair = (args.source, args.target)
    s = study("A", args.zeta)
    if pair == ("Bprime", "B"):
        f = s.morphisms["f_BprimeB"]
    elif pair == ("Hd11", "N"):
        f = s.morphisms["f_HdN"]
    else:
        raise UsageError("supported pairs: --from Bprime --to B, --from Hd11 --to N")
    flags = verify_morphism(f)
    failures = [k for k, v in flags.items() if not v]
    return {"from": args.source, "to": args.target, "map": f.name, "isomorphism": not failures,
            **flags}, failures


def cmd_dump(args) -> tuple:
    X = resolve(args.object, args.zeta)
    return {"object": args.object, "structure": X.to_json()}, []


def cmd_verify_all(args) -> tuple:
    results = [run_criterion(k, args.zeta, args.variant) for k, _, _ in CRITERIA]
    for r in results:
        print(r.line(args.zeta), file=sys.stderr)
    failures = [f"criterion {r.number}: {r.detail}" for r in results if not r.passed]
    return {"criteria": [r.to_json() for r in results], "passed": sum(r.passed for r in results),
            "failed": len(failures)}, failures


COMMANDS = {
    "verify-all": cmd_verify_all,
    "report": cmd_report,
    "center": cmd_center,
    "grouplikes": cmd_grouplikes,
    "subalgebras": cmd_subalgebras,
    "extensions": cmd_extensions,
    "grothendieck": cmd_grothendieck,
    "isomorphic": cmd_isomorphic,
    "dump": cmd_dump,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfext",
                                     description="Exact verification of the 32-dimensional biproducts.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=ANCHORS[name])
        p.add_argument("--zeta", default="i", choices=list(ZETAS), help="fourth root of unity (default i)")
        p.add_argument("--variant", default="A", choices=list(VARIANTS))
        p.add_argument("--output", help="write JSON here instead of stdout")
        if name != "verify-all":
            p.add_argument("--object", default="B", help=f"one of {', '.join(OBJECTS)}")
        if name == "subalgebras":
            p.add_argument("--dim", type=int)
        if name == "isomorphic":
            p.add_argument("--from", dest="source", default="Bprime")
            p.add_argument("--to", dest="target", default="B")
    return parser


def _join_negative_values(argv: list) -> list:
    """Rewrite `--zeta -i` as `--zeta=-i` so argparse does not read -i as an option."""
    out, k = [], 0
    while k < len(argv):
        if argv[k] == "--zeta" and k + 1 < len(argv) and argv[k + 1].startswith("-"):
            out.append(f"--zeta={argv[k + 1]}")
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_join_negative_values(argv))
    args.zeta = zeta_token(zeta_value(args.zeta))
    try:
        payload, failures = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hopfext: error: {exc}", file=sys.stderr)
        return 2
    except StructureError as exc:
        payload, failures = {}, [f"{type(exc).__name__}: {exc}"]
    payload.update({"command": args.command, "zeta": args.zeta, "variant": args.variant,
                    "paper_anchor": ANCHORS[args.command], "failures": failures})
    text = json.dumps(payload, sort_keys=True, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
