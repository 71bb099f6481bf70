"""The concrete objects: the YD Hopf algebras A and A', the biproducts B and B',
their distinguished sub- and quotient objects, H_{d:1,1}, the canonical
morphisms and the expected-value fixtures.
"""
from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .exact_math import HALF, I, ONE, ZERO, GaussianRational, Subspace, gq, inverse, matvec
from .groups import (Bicharacter, FiniteGroup, abelian_group, bicharacter_from_fundamental,
                     group_algebra)
from .hopf_core import (HopfAlgebra, HopfMorphism, dense, extend_smash_algebra_map,
                        morphism_from_images, restrict_to_subspace, sparse, sparse_add,
                        sparse_scale, verify_morphism)
from .yd_biproduct import (DualCocycle, YDHopfAlgebra, coaction_from_action, cocycle_smash,
                           radford_biproduct, solve_braided_antipode, yd_restrict)

ZETAS = {"1": ONE, "i": I, "-1": -ONE, "-i": -I}
VARIANTS = ("A", "Aprime")

A_LABELS = ("w1", "w2", "w3", "w4", "n1", "n2", "n3", "n4")
G_LABELS = ("g1", "g2", "g3", "g4")


def zeta_value(token) -> GaussianRational:
    if isinstance(token, GaussianRational):
        z = token
    else:
        if str(token) not in ZETAS:
            raise ValueError(f"zeta must be one of {sorted(ZETAS)}")
        z = ZETAS[str(token)]
    if z ** 4 != ONE:
        raise ValueError("zeta must be a fourth root of unity")
    return z


def zeta_token(z: GaussianRational) -> str:
    for k, v in ZETAS.items():
        if v == z:
            return k
    raise ValueError("not a fourth root of unity")


# ------------------------------------------------------------------ rewriting

class MonomialRewriter:
    """Normal forms x^i y^j (i < 4, j < 2) for the algebras generated by x, y with

    x^4 = 1, y x = x^sigma y and y^2 = p(x).  Elements are dicts from words over
    {"x", "y"} to coefficients; reduction applies the three rules until no rule fits.
    """

    def __init__(self, sigma: int, y_squared: list):
        self.sigma = sigma
        self.y_squared = [gq(c) for c in y_squared]

    def reduce(self, element: dict) -> dict:
        todo = dict(element)
        done: dict = {}
        while todo:
            word, c = todo.popitem()
            if not c:
                continue
            new = self._step(word)
            if new is None:
                t = done.get(word, ZERO) + c
                if t:
                    done[word] = t
                else:
                    done.pop(word, None)
                continue
            for w, d in new:
                t = todo.get(w, ZERO) + c * d
                if t:
                    todo[w] = t
                else:
                    todo.pop(w, None)
        return done

    def _step(self, word: str):
        k = word.find("yx")
        if k >= 0:
            return [(word[:k] + "x" * self.sigma + "y" + word[k + 2:], ONE)]
        k = word.find("xxxx")
        if k >= 0:
            return [(word[:k] + word[k + 4:], ONE)]
        k = word.find("yy")
        if k >= 0:
            return [(word[:k] + "x" * e + word[k + 2:], c)
                    for e, c in enumerate(self.y_squared) if c]
        return None

    @staticmethod
    def word(i: int, j: int) -> str:
        return "x" * i + "y" * j

    def index(self, word: str) -> int:
        return word.count("x") + 4 * word.count("y")

    def to_vector(self, element: dict) -> list:
        v = [ZERO] * 8
        for w, c in self.reduce(element).items():
            v[self.index(w)] = v[self.index(w)] + c
        return v

    def product(self, u: list, v: list) -> list:
        """Product of two vectors in the monomial basis."""
        acc: dict = {}
        for a, x in enumerate(u):
            if not x:
                continue
            for b, y in enumerate(v):
                if y:
                    w = self.word(a % 4, a // 4) + self.word(b % 4, b // 4)
                    acc[w] = acc.get(w, ZERO) + x * y
        return self.to_vector(acc)


def _rewriter(variant: str, zeta: GaussianRational) -> MonomialRewriter:
    if variant == "A":
        return MonomialRewriter(1, [HALF, HALF * zeta, HALF, -HALF * zeta])
    if variant == "Aprime":
        return MonomialRewriter(3, [HALF * zeta, HALF, -HALF * zeta, HALF])
    raise ValueError(f"unknown variant {variant!r}")


def grouplike_basis(zeta: GaussianRational) -> list:
    """omega_1..omega_4, eta_1..eta_4 in the monomial basis x^i y^j (index i + 4j)."""
    alpha = I * zeta * zeta
    def mono(i, j, c=ONE):
        v = [ZERO] * 8
        v[i + 4 * j] = c
        return v
    w2 = [ZERO] * 8
    w2[1], w2[3] = HALF * (1 + alpha), HALF * (1 - alpha)
    w3 = [ZERO] * 8
    w3[1], w3[3] = HALF * (1 - alpha), HALF * (1 + alpha)
    return [mono(0, 0), w2, w3, mono(2, 0), mono(0, 1), mono(3, 1), mono(2, 1), mono(1, 1)]


def theta_for(zeta: GaussianRational, G: FiniteGroup | None = None) -> Bicharacter:
    G = G or abelian_group([2, 2], G_LABELS)
    return bicharacter_from_fundamental(G, zeta * zeta, -ONE, -ONE, ONE)


def build_yd(variant: str, zeta, theta: Bicharacter | None = None) -> YDHopfAlgebra:
    """A (commuting generators) or A' (x'y' = y'x'^3) over K[Z2 x Z2], in the group-like basis."""
    zeta = zeta_value(zeta)
    rw = _rewriter(variant, zeta)
    G = abelian_group([2, 2], G_LABELS)
    theta = theta or theta_for(zeta, G)
    Q = grouplike_basis(zeta)                      # columns: group-likes in monomial coordinates
    Qm = [list(r) for r in zip(*Q)]
    Qinv = inverse(Qm)
    to_gl = lambda v: matvec(Qinv, v)
    mult = [[to_gl(rw.product(Q[i], Q[j])) for j in range(8)] for i in range(8)]
    unit = to_gl(Q[0])
    comult = [[[ONE if a == b == c else ZERO for c in range(8)] for b in range(8)]
              for a in range(8)]
    counit = [ONE] * 8
    # action of g2, g3 on the generators, extended as algebra automorphisms
    x = [ZERO] * 8
    x[1] = ONE
    gens = {
        1: (rw.to_vector({"xxx": ONE}), rw.to_vector({"xxxy": ONE})),
        2: (x, rw.to_vector({"xxy": ONE})),
    }

    def automorphism(img_x, img_y):
        cols = []
        for j in range(2):
            for i in range(4):
                v = [ZERO] * 8
                v[0] = ONE
                for _ in range(i):
                    v = rw.product(v, img_x)
                for _ in range(j):
                    v = rw.product(v, img_y)
                cols.append(v)
        return cols  # images of x^i y^j, ordered by index i + 4j

    mono_action = {0: [[ONE if a == b else ZERO for a in range(8)] for b in range(8)]}
    for g, (ix, iy) in gens.items():
        mono_action[g] = automorphism(ix, iy)
    # g4 = g2 g3
    mono_action[3] = [rw.to_vector({}) for _ in range(8)]
    for k in range(8):
        img = mono_action[2][k]
        acc = [ZERO] * 8
        for p, c in enumerate(img):
            if c:
                acc = [a + c * b for a, b in zip(acc, mono_action[1][p])]
        mono_action[3][k] = acc
    action = []
    for g in range(4):
        cols = []
        for j in range(8):
            # image of the j-th group-like: sum_k Q[j][k] g.(monomial k)
            img = [ZERO] * 8
            for k, c in enumerate(Q[j]):
                if c:
                    img = [a + c * b for a, b in zip(img, mono_action[g][k])]
            cols.append(to_gl(img))
        action.append([list(r) for r in zip(*cols)])
    coaction = coaction_from_action(action, theta)
    name = "A" if variant == "A" else "A'"
    labels = A_LABELS if variant == "A" else tuple(l + "'" for l in A_LABELS)
    H = group_algebra(G)
    Y = YDHopfAlgebra(H, labels, mult, unit, comult, counit, action, coaction, None, G, name)
    S = solve_braided_antipode(Y)
    return YDHopfAlgebra(H, labels, mult, unit, comult, counit, action, coaction, S, G, name)


def biproduct_labels(prime: bool = False) -> list:
    p = "'" if prime else ""
    out = []
    for kind in ("c", "d"):
        for i in range(1, 5):
            for j in range(1, 5):
                out.append(f"{kind}{i}{p}h{j}{p}")
    return out


def build_B(variant: str, zeta) -> HopfAlgebra:
    A = build_yd(variant, zeta)
    name = "B" if variant == "A" else "B'"
    return radford_biproduct(A, biproduct_labels(variant != "A"), name)


# ------------------------------------------------------------------ expressions

class ExpressionError(ValueError):
    pass


class ElementEvaluator:
    """Evaluates Python-syntax expressions such as "(u + s*u)/2" inside an algebra.

    Names resolve to scalars first, then to named elements; integer literals and
    the operators + - * / ** and unary minus are supported.
    """

    def __init__(self, H: HopfAlgebra, elements: dict, scalars: dict):
        self.H = H
        self.elements = {k: sparse(v) for k, v in elements.items()}
        self.scalars = {k: gq(v) for k, v in scalars.items()}

    def __call__(self, text: str) -> list:
        return dense(self._as_element(self._eval(self._parse(text))), self.H.dim)

    def sparse(self, text: str) -> dict:
        return self._as_element(self._eval(self._parse(text)))

    def tensor(self, pairs) -> dict:
        out: dict = {}
        for left, right in pairs:
            a, b = self.sparse(left), self.sparse(right)
            for p, x in a.items():
                for q, y in b.items():
                    t = out.get((p, q), ZERO) + x * y
                    if t:
                        out[(p, q)] = t
                    else:
                        out.pop((p, q), None)
        return out

    @staticmethod
    def _parse(text: str):
        try:
            return ast.parse(str(text), mode="eval").body
        except SyntaxError as exc:
            raise ExpressionError(f"cannot parse {text!r}") from exc

    def _as_element(self, value) -> dict:
        if isinstance(value, dict):
            return value
        return sparse_scale(value, sparse(self.H.unit)) if value else {}

    def _eval(self, node):
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return gq(node.value)
        if isinstance(node, ast.Name):
            if node.id in self.scalars:
                return self.scalars[node.id]
            if node.id in self.elements:
                return self.elements[node.id]
            raise ExpressionError(f"unknown name {node.id!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = self._eval(node.operand)
            if isinstance(node.op, ast.UAdd):
                return v
            return sparse_scale(-ONE, v) if isinstance(v, dict) else -v
        if isinstance(node, ast.BinOp):
            a, b = self._eval(node.left), self._eval(node.right)
            scalar = not isinstance(a, dict) and not isinstance(b, dict)
            if isinstance(node.op, (ast.Add, ast.Sub)):
                if isinstance(node.op, ast.Sub):
                    b = sparse_scale(-ONE, b) if isinstance(b, dict) else -b
                return a + b if scalar else sparse_add(self._as_element(a), self._as_element(b))
            if isinstance(node.op, ast.Mult):
                if scalar:
                    return a * b
                if not isinstance(a, dict):
                    return sparse_scale(a, b)
                if not isinstance(b, dict):
                    return sparse_scale(b, a)
                return self.H.smul(a, b)
            if isinstance(node.op, ast.Div):
                if isinstance(b, dict):
                    raise ExpressionError("division by an algebra element")
                return a / b if scalar else sparse_scale(b.inv(), a)
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)
                        and node.right.value >= 0):
                    raise ExpressionError("exponents must be nonnegative integer literals")
                e = node.right.value
                if not isinstance(a, dict):
                    return a ** e
                out = sparse(self.H.unit)
                for _ in range(e):
                    out = self.H.smul(out, a)
                return out
        raise ExpressionError(f"unsupported expression {ast.dump(node)}")


# ------------------------------------------------------------------ fixtures

@lru_cache(maxsize=None)
def _fixture_text() -> str:
    return resources.files("hopfext").joinpath("data/fixtures.json").read_text()


@dataclass(frozen=True)
class Fixtures:
    """Expected values transcribed from the source; expressions are evaluated per context."""
    zeta: str
    version: int
    center_dim: int
    subalgebra_counts: dict
    wedderburn: dict
    q_recognition: str
    raw: dict = field(repr=False)

    def __getitem__(self, key):
        return self.raw[key]


def fixtures(zeta) -> Fixtures:
    token = zeta_token(zeta_value(zeta))
    raw = json.loads(_fixture_text())
    return Fixtures(
        zeta=token,
        version=raw["version"],
        center_dim=raw["center"]["dim"],
        subalgebra_counts={int(k): v for k, v in raw["subalgebra_counts"].items()},
        wedderburn={int(k): v for k, v in raw["wedderburn"].items()},
        q_recognition=raw["q_recognition"][1],
        raw=raw,
    )


# ------------------------------------------------------------------ named elements

def _named_elements(A: YDHopfAlgebra, B: HopfAlgebra, zeta: GaussianRational) -> dict:
    m = A.H.dim
    Qinv = inverse([list(r) for r in zip(*grouplike_basis(zeta))])
    def lift(a_vec):
        out = [ZERO] * B.dim
        for a, x in enumerate(a_vec):
            out[a * m] = x
        return out
    def basis_vec(k):
        v = [ZERO] * B.dim
        v[k] = ONE
        return v
    x_mono = [ZERO] * 8
    x_mono[1] = ONE
    y_mono = [ZERO] * 8
    y_mono[4] = ONE
    names = {"u": lift(matvec(Qinv, x_mono)), "v": lift(matvec(Qinv, y_mono)),
             "r": basis_vec(1), "s": basis_vec(2)}
    for i in range(4):
        names[f"c{i + 1}"] = basis_vec(i * m)
        names[f"d{i + 1}"] = basis_vec((4 + i) * m)
        names[f"h{i + 1}"] = basis_vec(i)
    return names


def yd_elements(A: YDHopfAlgebra, zeta) -> dict:
    """Basis vectors w1..w4, n1..n4 of A (or A') together with the generators x and y."""
    zeta = zeta_value(zeta)
    Qinv = inverse([list(r) for r in zip(*grouplike_basis(zeta))])
    out = {}
    for k, label in enumerate(A_LABELS):
        v = [ZERO] * A.dim
        v[k] = ONE
        out[label] = v
    for name, mono in (("x", 1), ("y", 4)):
        e = [ZERO] * 8
        e[mono] = ONE
        out[name] = matvec(Qinv, e)
    return out


def coaction_tensor(A: YDHopfAlgebra, a: list) -> dict:
    """delta(a) as a sparse {(group index, A index): coefficient} tensor."""
    acc: dict = {}
    for i, x in enumerate(a):
        if x:
            for h, k, c in A._dt[i]:
                acc[(h, k)] = acc.get((h, k), ZERO) + x * c
    return {key: c for key, c in acc.items() if c}


def _subalgebra_span(H: HopfAlgebra, gens) -> Subspace:
    """Span of all products of the generators (the subalgebra they generate)."""
    n = H.dim
    found = Subspace(n, [H.unit])
    frontier = [sparse(H.unit)]
    gens = [sparse(g) for g in gens]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                p = H.smul(w, g)
                d = dense(p, n)
                if not found.contains(d):
                    found = Subspace(n, list(found.basis) + [d])
                    nxt.append(p)
        frontier = nxt
    return found


def _named_subobjects(B: HopfAlgebra, ev: ElementEvaluator, fx: Fixtures) -> dict:
    n = B.dim
    span = lambda exprs: Subspace(n, [ev(e) for e in exprs])
    subs = {"N": span(fx["N"]["span"]), "U": span(fx["U"]["span"])}
    for name, spec in fx["M"].items():
        subs[name] = _subalgebra_span(B, [ev(g) for g in spec["generators"]])
    for name, elems in fx["G_subgroups"].items():
        subs[name] = span(elems)
    subs["P"] = _subalgebra_span(B, [ev(g) for g in fx["P_generators"]])
    return subs


# ------------------------------------------------------------------ contexts

@dataclass
class PaperContext:
    variant: str
    zeta: GaussianRational
    G: FiniteGroup
    theta: Bicharacter
    A: YDHopfAlgebra
    B: HopfAlgebra
    C: YDHopfAlgebra
    elements: dict
    subobjects: dict
    evaluator: ElementEvaluator
    cache: dict = field(default_factory=dict, repr=False)

    @property
    def token(self) -> str:
        return zeta_token(self.zeta)

    def eval(self, text: str) -> list:
        return self.evaluator(text)

    def eval_tensor(self, pairs) -> dict:
        return self.evaluator.tensor(pairs)

    def hopf_subobject(self, name: str) -> HopfAlgebra:
        key = ("hopf", name)
        if key not in self.cache:
            self.cache[key] = restrict_to_subspace(self.B, self.subobjects[name], name)
        return self.cache[key]

    @property
    def N(self) -> HopfAlgebra:
        return self.hopf_subobject("N")


def build_context(variant: str, zeta) -> PaperContext:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    return _build_context(variant, zeta_token(zeta_value(zeta)))


@lru_cache(maxsize=None)
def _build_context(variant: str, token: str) -> PaperContext:
    zeta = zeta_value(token)
    G = abelian_group([2, 2], G_LABELS)
    theta = theta_for(zeta, G)
    A = build_yd(variant, zeta, theta)
    B = radford_biproduct(A, biproduct_labels(variant != "A"), "B" if variant == "A" else "B'")
    C = yd_restrict(A, Subspace.spanned_by_indices(8, range(4)), name="C" if variant == "A" else "C'")
    elements = _named_elements(A, B, zeta)
    ev = ElementEvaluator(B, elements, {"z": zeta, "i": I})
    subs = _named_subobjects(B, ev, fixtures(token)) if variant == "A" else {}
    return PaperContext(variant, zeta, G, theta, A, B, C, elements, subs, ev)


# ------------------------------------------------------------------ H_{d:1,1}

GAMMA_LABELS = ("1", "x", "y", "xy", "z", "xz", "yz", "xyz")


@lru_cache(maxsize=None)
def build_Hd11() -> HopfAlgebra:
    """The bicrossed product K[Z2^3] #^kappa K[Z2] with t swapping x and y."""
    Gamma = abelian_group([2, 2, 2], GAMMA_LABELS)
    L = abelian_group([2], ("1", "t"))
    KG, KL = group_algebra(Gamma), group_algebra(L)
    swap = lambda g: (g & 4) | ((g & 1) << 1) | ((g & 2) >> 1)
    ident = [[ONE if p == k else ZERO for k in range(8)] for p in range(8)]
    flip = [[ONE if p == swap(k) else ZERO for k in range(8)] for p in range(8)]
    x, y, z = 1, 2, 4
    xy = Gamma.mul(x, y)
    kappa_t = {(0, 0): HALF, (z, 0): HALF, (0, xy): HALF, (z, xy): -HALF}
    kappa = DualCocycle(KG, [{(0, 0): ONE}, kappa_t])
    labels = [f"{g}#{t}" for g in GAMMA_LABELS for t in ("1", "t")]
    return cocycle_smash(KG, KL, [ident, flip], kappa, labels, "H_d11")


# ------------------------------------------------------------------ morphisms

def _monomial_images(variant: str, zeta, img_x: dict, img_y: dict, H: HopfAlgebra) -> list:
    """Images of the group-like basis of A or A' under x -> img_x, y -> img_y."""
    powers_x = [sparse(H.unit)]
    for _ in range(3):
        powers_x.append(H.smul(powers_x[-1], img_x))
    mono = [H.smul(powers_x[i], img_y if j else sparse(H.unit)) for j in range(2) for i in range(4)]
    out = []
    for col in grouplike_basis(zeta):
        acc: dict = {}
        for k, c in enumerate(col):
            if c:
                acc = sparse_add(acc, sparse_scale(c, mono[k]))
        out.append(acc)
    return out


def _pi_C(ctx: PaperContext) -> HopfMorphism:
    Aalg, Calg = ctx.A.as_algebra(), ctx.C.as_algebra()
    w = lambda k: {k: ONE}
    imgs = _monomial_images(ctx.variant, ctx.zeta, w(3), w(1), Calg)
    f = morphism_from_images(Aalg, Calg, [dense(v, Calg.dim) for v in imgs], "pi_C")
    verify_morphism(f)
    return f


def _pi_N(ctx: PaperContext, pi_C: HopfMorphism) -> HopfMorphism:
    B, N = ctx.B, ctx.N
    m = ctx.A.H.dim
    images = []
    for a in range(ctx.A.dim):
        col = [pi_C.matrix[k][a] for k in range(ctx.C.dim)]
        for h in range(m):
            v = [ZERO] * N.dim
            for k, c in enumerate(col):
                if c:
                    v[k * m + h] = c
            images.append(v)
    f = morphism_from_images(B, N, images, "pi_N")
    verify_morphism(f)
    return f


def _f_HdN(ctx: PaperContext) -> HopfMorphism:
    Hd, N = build_Hd11(), ctx.N
    to_N = lambda expr: dense({k: c for k, c in ctx.evaluator.sparse(expr).items()}, N.dim)
    gens = {name: sparse(to_N(e)) for name, e in fixtures(ctx.token)["hd11"]["generators"].items()}
    cols = []
    for g in range(8):
        acc = sparse(N.unit)
        for bit, name in ((1, "x"), (2, "y"), (4, "z")):
            if g & bit:
                acc = N.smul(acc, gens[name])
        cols.append(dense(acc, N.dim))
    fA = [list(r) for r in zip(*cols)]
    fH = [list(r) for r in zip(*[N.unit, dense(gens["t"], N.dim)])]
    f = extend_smash_algebra_map(fA, fH, Hd, N, "f_HdN")
    verify_morphism(f)
    return f


def _f_BprimeB(ctx: PaperContext, ctx_prime: PaperContext) -> HopfMorphism:
    B, Bp = ctx.B, ctx_prime.B
    table = fixtures(ctx.token)["f_BprimeB"]
    imgs = _monomial_images("Aprime", ctx.zeta, ctx.evaluator.sparse(table["u"]),
                            ctx.evaluator.sparse(table["v"]), B)
    fA = [list(r) for r in zip(*[dense(v, B.dim) for v in imgs])]
    fH = [list(r) for r in zip(*[ctx.eval(f"h{j + 1}") for j in range(4)])]
    f = extend_smash_algebra_map(fA, fH, Bp, B, "f_BprimeB")
    verify_morphism(f)
    return f


def canonical_morphisms(ctx: PaperContext) -> dict:
    """pi_C, pi_N, f_HdN and f_BprimeB, each verified; cached on the context."""
    if ctx.variant != "A":
        ctx = build_context("A", ctx.zeta)
    if "morphisms" not in ctx.cache:
        pi_C = _pi_C(ctx)
        ctx.cache["morphisms"] = {
            "pi_C": pi_C,
            "pi_N": _pi_N(ctx, pi_C),
            "f_HdN": _f_HdN(ctx),
            "f_BprimeB": _f_BprimeB(ctx, build_context("Aprime", ctx.zeta)),
        }
    return ctx.cache["morphisms"]


def transported_context(zeta) -> PaperContext:
    """Context on B' whose named elements are pulled back from B along f_BprimeB.

    Lets every criterion stated for B run verbatim on the structure constants of B'.
    """
    return _transported_context(zeta_token(zeta_value(zeta)))


@lru_cache(maxsize=None)
def _transported_context(token: str) -> PaperContext:
    base, raw = build_context("A", token), build_context("Aprime", token)
    f = canonical_morphisms(base)["f_BprimeB"]
    finv = inverse(f.matrix)
    elements = {k: matvec(finv, v) for k, v in base.elements.items()}
    ev = ElementEvaluator(raw.B, elements, {"z": raw.zeta, "i": I})
    subs = _named_subobjects(raw.B, ev, fixtures(token))
    ctx = PaperContext("Aprime", raw.zeta, raw.G, raw.theta, raw.A, raw.B, raw.C, elements, subs, ev)
    ctx.cache["pullback"] = f
    return ctx
