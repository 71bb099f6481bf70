"""The acceptance suite: fourteen criteria checked exactly for a given zeta.

Each criterion returns a CriterionResult; exceptions inside a criterion are caught
and reported as failures with the exception text, never swallowed silently.
"""
from __future__ import annotations

import time
import traceback
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from . import analysis as an
from .catalog import (ZETAS, PaperContext, build_context, build_Hd11, canonical_morphisms,
                      fixtures, transported_context, zeta_token, zeta_value)
from .exact_math import ONE, ZERO, Subspace, kernel, matmul
from .groups import recognize_group
from .hopf_core import (HopfAlgebra, HopfMorphism, dense, dual_hopf, inclusion_morphism,
                        integrals, monomial_span_check, quotient_by_ideal, sparse, verify_hopf,
                        verify_morphism)
from .yd_biproduct import biproduct_duality_check, verify_yd, yd_ok


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self, zeta: str) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] zeta={zeta} criterion {self.number:2d} {self.title}: {self.detail}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "detail": self.detail, "failures": list(self.failures)}


class Checks:
    """Collects named boolean checks for one criterion."""

    def __init__(self):
        self.items: list = []

    def __call__(self, name: str, ok) -> bool:
        self.items.append((name, bool(ok)))
        return bool(ok)

    @property
    def failures(self) -> list:
        return [n for n, ok in self.items if not ok]

    def summary(self) -> str:
        bad = self.failures
        if bad:
            return "failed: " + "; ".join(bad)
        return f"{len(self.items)} checks"


# ------------------------------------------------------------------ shared computations

class Study:
    """Lazily computed analysis of B (or B') for one zeta, shared by all criteria."""

    def __init__(self, variant: str, zeta):
        self.variant = variant
        self.token = zeta_token(zeta_value(zeta))
        self.base = build_context("A", self.token)
        self.ctx: PaperContext = self.base if variant == "A" else transported_context(self.token)
        self.fx = fixtures(self.token)

    @property
    def B(self) -> HopfAlgebra:
        return self.ctx.B

    def vec(self, expr: str) -> list:
        return self.ctx.eval(expr)

    def sub(self, name: str) -> Subspace:
        return self.ctx.subobjects[name]

    @cached_property
    def dual(self) -> HopfAlgebra:
        return dual_hopf(self.B)

    @cached_property
    def center(self) -> Subspace:
        return an.center(self.B)

    @cached_property
    def grouplikes(self):
        return an.grouplikes(self.B)

    @cached_property
    def dual_grouplikes(self):
        return an.grouplikes(self.dual)

    @cached_property
    def wedderburn(self):
        return an.wedderburn(self.B)

    @cached_property
    def dual_wedderburn(self):
        return an.wedderburn(self.dual)

    @cached_property
    def blocks(self) -> list:
        return an.coalgebra_blocks(self.B, self.dual_wedderburn)

    @cached_property
    def dual_blocks(self) -> list:
        return an.coalgebra_blocks(self.dual, self.wedderburn)

    @lru_cache(maxsize=None)
    def subalgebras(self, d: int) -> list:
        return an.hopf_subalgebras_of_dim(self.B, d, self.blocks)

    @lru_cache(maxsize=None)
    def is_normal(self, name: str) -> bool:
        return an.is_normal_hopf_subalgebra(self.B, self.sub(name))

    @lru_cache(maxsize=None)
    def quotient(self, name: str) -> tuple:
        return an.quotient_hopf(self.B, self.sub(name), f"B/B{name}+")

    @lru_cache(maxsize=None)
    def inclusion(self, name: str) -> HopfMorphism:
        f = inclusion_morphism(self.B, self.sub(name), self.ctx.hopf_subobject(name), f"{name}->B")
        verify_morphism(f)
        return f

    @lru_cache(maxsize=None)
    def extension(self, name: str) -> an.ExtensionReport:
        return an.verify_extension(self.inclusion(name), self.quotient(name)[1])

    @cached_property
    def morphisms(self) -> dict:
        return canonical_morphisms(self.base)

    @cached_property
    def pi_N(self) -> HopfMorphism:
        pi = self.morphisms["pi_N"]
        if self.variant == "A":
            return pi
        f = self.ctx.cache["pullback"]
        g = HopfMorphism(self.B, pi.target, matmul(pi.matrix, f.matrix), "pi_N o f")
        verify_morphism(g)
        return g

    @cached_property
    def N(self) -> HopfAlgebra:
        return self.ctx.N

    def in_N(self, expr: str) -> list:
        return self.sub("N").coordinates(self.vec(expr))

    @cached_property
    def N_quotients(self) -> dict:
        out = {}
        for name, spec in self.fx["N_quotients"].items():
            P = an.generated_hopf_subalgebra(self.N, [self.in_N(spec["grouplike"])])
            out[name] = (P,) + an.quotient_hopf(self.N, P, name)
        return out

    @cached_property
    def irreducible_characters(self) -> list:
        return an.irreducible_characters(self.B, self.wedderburn)

    @cached_property
    def grothendieck(self) -> an.GrothendieckTable:
        return an.grothendieck_table(self.B, self.irreducible_characters)


@lru_cache(maxsize=None)
def study(variant: str, zeta) -> Study:
    return Study(variant, zeta_token(zeta_value(zeta)))


def _covector_value(chi, v) -> object:
    return sum((c * x for c, x in zip(chi, v) if x), ZERO)


# ------------------------------------------------------------------ criteria

def criterion_construction(s: Study, ck: Checks):
    """YD and Hopf verifiers on every constructed object; the defining relations span."""
    for variant in ("A", "Aprime"):
        ctx = build_context(variant, s.token)
        ck(f"verify_yd {ctx.A.name or variant}", yd_ok(verify_yd(ctx.A)))
        ck(f"verify_yd {ctx.C.name}", yd_ok(verify_yd(ctx.C)))
        ck(f"verify_hopf {ctx.B.name}", verify_hopf(ctx.B).ok)
        gens = [ctx.eval(g) for g in ("u", "v", "r", "s")]
        ck(f"monomials span {ctx.B.name}", monomial_span_check(ctx.B, gens, (4, 2, 2, 2)))
    for name in ("N", "M1", "M2", "M3", "U", "P"):
        ck(f"verify_hopf {name}", verify_hopf(s.ctx.hopf_subobject(name)).ok)
    for name, (_, Q, _) in s.N_quotients.items():
        ck(f"verify_hopf {name}", verify_hopf(Q).ok)
    ck("verify_hopf H_d11", verify_hopf(build_Hd11()).ok)
    for name in ("N", "M2", "G1", "U"):
        ck(f"verify_hopf quotient by {name}", verify_hopf(s.quotient(name)[0]).ok)


def criterion_coproducts(s: Study, ck: Checks):
    """Coproducts, counits and antipodes of the generators against the displayed formulas."""
    B = s.B
    for name, pairs in s.fx["coproducts"].items():
        ck(f"Delta({name})", B.scomul(sparse(s.vec(name))) == s.ctx.eval_tensor(pairs))
    for name, value in s.fx["counits"].items():
        ck(f"eps({name})", B.scounit(sparse(s.vec(name))) == ONE * int(value))
    for name in ("u", "v", "r", "s"):
        ck(f"S({name})", B.apply_antipode(s.vec(name)) == s.vec(s.fx["antipodes"][name]))
    ck("S(v) expanded form", B.apply_antipode(s.vec("v")) == s.vec(s.fx["antipodes"]["v_expanded"]))


def criterion_center(s: Study, ck: Checks):
    Z = s.center
    ck(f"dim center = {s.fx.center_dim} (got {Z.dim})", Z.dim == s.fx.center_dim)
    listed = Subspace(s.B.dim, [s.vec(e) for e in s.fx["center"]["basis"]])
    ck("listed elements are independent", listed.dim == len(s.fx["center"]["basis"]))
    ck("listed elements span the center", listed == Z)
    ck("unit is central", Z.contains(s.B.unit))


def criterion_grouplikes(s: Study, ck: Checks):
    spec = s.fx["grouplikes"]
    elems, G = s.grouplikes
    ck(f"G(B) is {spec['group']}", recognize_group(G) == spec["group"])
    expected = an.generated_hopf_subalgebra(s.B, [s.vec(g) for g in spec["generators"]])
    got = Subspace(s.B.dim, [list(g.vector) for g in elems])
    ck("G(B) spans the subalgebra generated by c4, h2, h3", got == expected and len(elems) == 8)
    central = {tuple(g.vector) for g in an.central_grouplikes(s.B, elems)}
    ck("central group-likes are 1 and c4", central == {tuple(s.vec(e)) for e in spec["central"]})

    dspec = s.fx["dual_grouplikes"]
    delems, DG = s.dual_grouplikes
    ck(f"G(B*) is {dspec['group']}", recognize_group(DG) == dspec["group"])
    points = [s.vec(e) for e in dspec["evaluated_on"]]
    tables = {tuple(_covector_value(g.vector, p) for p in points): g for g in delems}
    named = {}
    for label, row in dspec["table"].items():
        key = tuple(ONE * x for x in row)
        ck(f"{label} has values {row} on u, v, r, s", key in tables)
        named[label] = tables.get(key)
    dcentral = an.central_grouplikes(s.dual, delems)
    want = {tuple(s.dual.unit)} | {tuple(named[l].vector) for l in dspec["central"] if named.get(l)}
    ck("central group-likes of B* are eps and chi1", {tuple(g.vector) for g in dcentral} == want)


def criterion_wedderburn(s: Study, ck: Checks):
    for label, W, key in (("B", s.wedderburn, "wedderburn"), ("B*", s.dual_wedderburn, "dual_wedderburn")):
        want = {int(k): v for k, v in s.fx[key].items()}
        ck(f"{label} blocks {want} (got {W.multiset()})", W.multiset() == want)
        ck(f"{label} split certified", W.split_certified)
        ck(f"{label} block dims sum", sum(n * n for n in W.block_dims) == s.B.dim)
    dims = sorted(b.dim for b in s.blocks)
    want = sorted(int(k) for k, v in s.fx["coalgebra_block_dims"]["B"].items() for _ in range(v))
    ck("coalgebra blocks of B", dims == want)


def criterion_N(s: Study, ck: Checks):
    subs = s.subalgebras(16)
    ck("exactly one 16-dim Hopf subalgebra", len(subs) == 1)
    ck("it is N", subs == [s.sub("N")])
    ck("N generated by u, r, s",
       an.generated_hopf_subalgebra(s.B, [s.vec(g) for g in s.fx["N"]["generators"]]) == s.sub("N"))
    ck("N normal in B", s.is_normal("N"))
    Zq, piZ = s.quotient("N")
    ck("B/BN+ has dimension 2", Zq.dim == 2)
    right, _ = an.coinvariants(s.B, piZ)
    ck("coinvariants of B -> Z are N", right == s.sub("N"))
    ext = s.extension("N")
    want = s.fx["N"]["extension"]
    ck("N -> B -> Z exact", ext.exact == want["exact"])
    ck("N -> B -> Z not abelian", ext.abelian == want["abelian"])
    flags = an.comm_flags(s.N)
    ck("N neither commutative nor cocommutative",
       flags == {"commutative": s.fx["N"]["commutative"], "cocommutative": s.fx["N"]["cocommutative"]})


def criterion_N_structure(s: Study, ck: Checks):
    N = s.N
    ideals = an.hopf_ideals_of_dim(N, 8)
    ck("N has exactly three 8-dim Hopf quotients", len(ideals) == 3)
    tags = sorted(an.recognize_hopf(quotient_by_ideal(N, I)[0]) for I in ideals)
    want = sorted(tuple(q["recognition"]) for q in s.fx["N_quotients"].values())
    ck(f"quotients recognized as {[t[1] for t in want]}", tags == want)
    for name, (P, Q, _) in s.N_quotients.items():
        expect = tuple(s.fx["N_quotients"][name]["recognition"])
        ck(f"{name} recognized as {expect[1]}", an.recognize_hopf(Q) == expect)
        ck(f"{name} comes from one of the three ideals", an.augmentation_ideal(N, P) in ideals)
    subs = an.hopf_subalgebras_of_dim(N, 8)
    ck("N has exactly three 8-dim Hopf subalgebras", len(subs) == 3)
    in_N = lambda name: Subspace(N.dim, [s.sub("N").coordinates(list(b)) for b in s.sub(name).basis])
    ck("they are M1, M2, M3", sorted(subs, key=Subspace.sort_key) ==
       sorted((in_N(m) for m in ("M1", "M2", "M3")), key=Subspace.sort_key))
    for name, spec in s.fx["M"].items():
        ck(f"{name} normal in N", an.is_normal_hopf_subalgebra(N, in_N(name)) == spec["normal_in_N"])
        tag = an.recognize_hopf(s.ctx.hopf_subobject(name))
        ck(f"{name} recognized as {spec['recognition']}", tag == tuple(spec["recognition"]))
    alt = an.generated_hopf_subalgebra(s.B, [s.vec(g) for g in s.fx["M3_alternative_generators"]])
    ck("M3 also generated by the alternative generators", alt == s.sub("M3"))
    span = Subspace(s.B.dim, [s.vec(e) for e in s.fx["M3_span"]])
    ck("M3 has the listed basis", span == s.sub("M3"))
    delems, DG = an.grouplikes(dual_hopf(N))
    spec = s.fx["N_dual_grouplikes"]
    ck("G(N*) is Z2^3", recognize_group(DG) == spec["group"])
    central = {tuple(g.vector) for g in an.central_grouplikes(dual_hopf(N), delems)}
    ck("N* has three central group-likes besides eps", len(central) == 4)
    named = _named_N_dual(s)
    ck("chi'1 and chi'2 are central in the target of pi_N",
       all(tuple(named.get(l, ())) in {tuple(g.vector) for g in an.central_grouplikes(
           dual_hopf(s.pi_N.target))} for l in spec["central"]))


def criterion_Hd11(s: Study, ck: Checks):
    f = s.morphisms["f_HdN"]
    flags = verify_morphism(f)
    ck("f is an algebra map", flags["algebra_map"])
    ck("f is a coalgebra map", flags["coalgebra_map"])
    ck("f is bijective", flags["bijective"])
    Hd = build_Hd11()
    for label, kind in (("grouplikes", Hd), ("dual_grouplikes", dual_hopf(Hd))):
        _, G = an.grouplikes(kind)
        ck(f"{label} of H_d11 is Z2^3", recognize_group(G) == s.fx["hd11"][label])
    ck("H_d11 neither commutative nor cocommutative",
       an.comm_flags(Hd) == {"commutative": False, "cocommutative": False})


def criterion_U(s: Study, ck: Checks):
    pi = s.pi_N
    ideals = an.hopf_ideals_of_dim(s.B, 16, s.dual_blocks)
    ker = kernel(pi.matrix, s.B.dim)
    ck("exactly one 16-dim Hopf ideal", len(ideals) == 1)
    ck("it is ker pi_N", ideals == [ker])
    ck("ker pi_N = BU+", an.augmentation_ideal(s.B, s.sub("U")) == ker)
    right, _ = an.coinvariants(s.B, pi)
    ck("coinvariants of pi_N are U = span(1, c4)", right == s.sub("U"))
    normal2 = [P for P in s.subalgebras(2) if an.is_normal_hopf_subalgebra(s.B, P)]
    ck(f"U is the unique normal 2-dim Hopf subalgebra (of {len(s.subalgebras(2))})",
       normal2 == [s.sub("U")])
    ck("U central", s.center.contains_space(s.sub("U")) == s.fx["U"]["central"])
    ext = an.verify_extension(s.inclusion("U"), pi)
    want = s.fx["U_extension"]
    ck("U -> B -> N exact", ext.exact == want["exact"])
    ck("U -> B -> N not abelian", ext.abelian == want["abelian"])
    chi1 = _named_dual(s)["chi1"]
    chi1p = _named_N_dual(s)["chi'1"]
    pulled = [sum((c * chi1p[k] for k, c in pi.image_of(j).items()), ZERO) for j in range(s.B.dim)]
    ck("chi1 = chi'1 o pi_N", pulled == list(chi1))


def _named_dual(s: Study) -> dict:
    spec = s.fx["dual_grouplikes"]
    points = [s.vec(e) for e in spec["evaluated_on"]]
    out = {}
    for g in s.dual_grouplikes[0]:
        row = [_covector_value(g.vector, p) for p in points]
        for label, want in spec["table"].items():
            if row == [ONE * x for x in want]:
                out[label] = g.vector
    return out


def _named_N_dual(s: Study) -> dict:
    spec = s.fx["N_dual_grouplikes"]
    N = s.pi_N.target
    # N is the target of pi_N, which lives in the base context
    base_N = s.base.subobjects["N"]
    points = [base_N.coordinates(s.base.eval(e)) for e in spec["evaluated_on"]]
    out = {}
    for g in an.grouplikes(dual_hopf(N))[0]:
        row = [_covector_value(g.vector, p) for p in points]
        for label, want in spec["table"].items():
            if row == [ONE * x for x in want]:
                out[label] = g.vector
    return out


def _parse_combination(text: str) -> dict:
    out: dict = {}
    for term in text.split("+"):
        term = term.strip()
        coeff = 1
        head, _, rest = term.partition("*")
        if head.isdigit() and rest:
            coeff, term = int(head), rest
        out[term] = out.get(term, 0) + coeff
    return out


def named_characters(s: Study) -> dict:
    """Irreducible characters of B keyed by the names 1, chi1, ..., pi1, pi2, rho."""
    chars = s.irreducible_characters
    linear = _named_dual(s)
    names = {"1": list(s.B.counit)}
    for k, v in linear.items():
        names[k] = list(v)
    for a, b in (("chi1", "chi2"), ("chi1", "chi3"), ("chi2", "chi3")):
        names[f"{a}*{b}"] = an.convolve(s.B, names[a], names[b])
    names["chi1*chi2*chi3"] = an.convolve(s.B, names["chi1*chi2"], names["chi3"])
    deg2 = sorted((c for c, d in chars if d == 2), key=lambda c: [x.sort_key() for x in c])
    deg4 = [c for c, d in chars if d == 4]
    if len(deg2) == 2:
        names["pi1"], names["pi2"] = deg2
    if len(deg4) == 1:
        names["rho"] = deg4[0]
    return names


def criterion_grothendieck(s: Study, ck: Checks):
    spec = s.fx["grothendieck"]
    names = named_characters(s)
    ck("all eleven irreducible characters named", set(spec["names"]) <= set(names))
    irr = [list(c) for c, _ in s.irreducible_characters]
    ck("named characters are the irreducible ones",
       {tuple(names[n]) for n in spec["names"]} == {tuple(c) for c in irr})
    for name, d in spec["dims"].items():
        ck(f"deg {name} = {d}", _covector_value(names[name], s.B.unit) == d * ONE)
    for a, b, result in spec["products"]:
        prod = an.convolve(s.B, names[a], names[b])
        want = [ZERO] * s.B.dim
        for nm, c in _parse_combination(result).items():
            want = [w + c * x for w, x in zip(want, names[nm])]
        ck(f"{a}.{b} = {result}", prod == want)
    T = s.grothendieck
    ck("structure constants are nonnegative integers",
       all(isinstance(x, int) and x >= 0 for row in T.structure_constants for col in row for x in col))
    ck("Grothendieck ring commutative", T.is_commutative() == spec["commutative"])


def criterion_M(s: Study, ck: Checks):
    subs = s.subalgebras(8)
    ck("exactly three 8-dim Hopf subalgebras", len(subs) == s.fx.subalgebra_counts[8])
    order = sorted(("M1", "M2", "M3"), key=lambda m: s.sub(m).sort_key())
    ck("they are M1, M2, M3", subs == [s.sub(m) for m in order])
    flags = [s.is_normal(m) for m in ("M1", "M2", "M3")]
    want = [s.fx["M"][m]["normal_in_B"] for m in ("M1", "M2", "M3")]
    ck(f"normal flags {want} (got {flags})", flags == want)
    Q, _ = s.quotient("M2")
    tag = an.recognize_hopf(Q)
    ck(f"B/BM2+ recognized as {s.fx.q_recognition}", tag == tuple(s.fx["q_recognition"]))
    ext = s.extension("M2")
    ck(f"M2 -> B -> Q flags {s.fx['M2_extension']}", ext.to_json() == s.fx["M2_extension"])
    for m in ("M1", "M3"):
        try:
            an.quotient_hopf(s.B, s.sub(m))
            ck(f"quotient by {m} refused", False)
        except an.NotNormal:
            ck(f"quotient by {m} refused", True)


def criterion_G(s: Study, ck: Checks):
    subs = s.subalgebras(4)
    names = [f"G{k}" for k in range(1, 8)]
    ck("exactly seven 4-dim Hopf subalgebras", len(subs) == s.fx.subalgebra_counts[4])
    ck("they are the seven K[G_i]", sorted(subs, key=Subspace.sort_key) ==
       sorted((s.sub(g) for g in names), key=Subspace.sort_key))
    normal = [g for g in names if s.is_normal(g)]
    ck(f"only {s.fx['normal_G']} normal (got {normal})", normal == s.fx["normal_G"])
    ck("P = K<u^2, s> equals K[G1]", s.sub("P") == s.sub("G1"))
    F, _ = s.quotient("G1")
    tag = an.recognize_hopf(F)
    ck(f"B/BP+ recognized as {s.fx['p_quotient_recognition']}", tag == tuple(s.fx["p_quotient_recognition"]))
    ext = s.extension("G1")
    ck(f"P -> B -> F flags {s.fx['P_extension']}", ext.to_json() == s.fx["P_extension"])


def criterion_f_BprimeB(s: Study, ck: Checks):
    f = s.morphisms["f_BprimeB"]
    flags = verify_morphism(f)
    ck("f is an algebra map", flags["algebra_map"])
    ck("f is a coalgebra map", flags["coalgebra_map"])
    ck("f is bijective", flags["bijective"])
    prime = build_context("Aprime", s.token)
    for name, expr in s.fx["f_BprimeB"].items():
        ck(f"f({name}') = {expr}", f(prime.eval(name)) == s.base.eval(expr))
    ck("A' noncommutative, A commutative",
       not an.comm_flags(prime.A.as_algebra())["commutative"] and
       an.comm_flags(s.base.A.as_algebra())["commutative"])


def criterion_duality(s: Study, ck: Checks):
    for variant in ("A", "Aprime"):
        ctx = build_context(variant, s.token)
        ck(f"duality for {variant}", biproduct_duality_check(ctx.A))
        ck(f"duality for {ctx.C.name}", biproduct_duality_check(ctx.C))
    ck("dual_hopf involutive", dual_hopf(s.dual).same_tensors(s.B))
    ck("B semisimple by integrals", integrals(s.B)["semisimple"] == s.fx["semisimple"])
    ck("B cosemisimple by integrals", integrals(s.dual)["semisimple"] == s.fx["cosemisimple"])


CRITERIA = (
    (1, "construction soundness", criterion_construction),
    (2, "coproduct and antipode formulas", criterion_coproducts),
    (3, "center of dimension 11", criterion_center),
    (4, "group-likes of B and B*", criterion_grouplikes),
    (5, "Wedderburn blocks of B and B*", criterion_wedderburn),
    (6, "unique 16-dim Hopf subalgebra N", criterion_N),
    (7, "quotients and subalgebras of N", criterion_N_structure),
    (8, "H_d11 isomorphic to N", criterion_Hd11),
    (9, "Hopf ideal ker pi_N and coinvariants U", criterion_U),
    (10, "Grothendieck ring", criterion_grothendieck),
    (11, "8-dim Hopf subalgebras M1, M2, M3", criterion_M),
    (12, "4-dim Hopf subalgebras K[G_i]", criterion_G),
    (13, "isomorphism B' -> B", criterion_f_BprimeB),
    (14, "duality, involution and integrals", criterion_duality),
)


def run_criterion(number: int, zeta, variant: str = "A") -> CriterionResult:
    _, title, fn = CRITERIA[number - 1]
    ck = Checks()
    start = time.perf_counter()
    try:
        fn(study(variant, zeta), ck)
        detail = ck.summary()
        passed = not ck.failures and bool(ck.items)
    except Exception as exc:  # reported, not hidden
        passed = False
        detail = f"raised {type(exc).__name__}: {exc}"
        ck.items.append((detail, False))
        traceback.print_exc()
    return CriterionResult(number, title, passed, detail, time.perf_counter() - start, ck.failures)


def run_all(zeta, variant: str = "A") -> list:
    return [run_criterion(k, zeta, variant) for k, _, _ in CRITERIA]


def all_zetas() -> list:
    return list(ZETAS)
