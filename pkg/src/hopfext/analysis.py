"""Structural analysis of finite-dimensional Hopf algebras.

Centers, characters, group-likes, Wedderburn blocks with a split certificate,
coalgebra blocks, enumeration of Hopf subalgebras and Hopf ideals, normality,
quotients, coinvariants, extensions and Grothendieck tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import isqrt
from typing import Sequence

from .exact_math import (ONE, ZERO, GaussianRational, Polynomial, Subspace, gaussian_roots,
                         joint_eigensplit_with_values, kernel, restrict_operator, solve, transpose)
from .groups import FiniteGroup, recognize_group
from .hopf_core import (GroupLikeElement, HopfAlgebra, HopfMorphism, StructureError, comm_flags,
                        dense, dual_hopf, grouplike_check, is_hopf_ideal, quotient_by_ideal, sparse, sparse_add, sparse_scale, stacked_kernel,
                        verify_hopf, verify_morphism)


class NotSemisimple(StructureError):
    pass


class SplitCertificationFailed(StructureError):
    pass


class NotNormal(StructureError):
    pass


class NotHopfIdeal(StructureError):
    pass


class DecompositionFailure(StructureError):
    pass


# ------------------------------------------------------------------ helpers

class _Span:
    """Incrementally grown subspace kept in reduced echelon form (pivot entries 1)."""

    def __init__(self, n: int, vectors=()):
        self.n = n
        self.rows: dict = {}  # pivot -> row
        for v in vectors:
            self.add(v)

    def reduce(self, v) -> list:
        w = list(v)
        for p, row in self.rows.items():
            c = w[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        w[j] = w[j] - c * x
        return w

    def add(self, v) -> bool:
        w = self.reduce(v)
        p = next((j for j, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = w[p].inv()
        w = [x * inv for x in w]
        for q, row in self.rows.items():
            c = row[p]
            if c:
                self.rows[q] = [a - c * b for a, b in zip(row, w)]
        self.rows[p] = w
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)

    def subspace(self) -> Subspace:
        return Subspace(self.n, [self.rows[p] for p in sorted(self.rows)])


def _vec(H: HopfAlgebra, v) -> list:
    return dense(v, H.dim) if isinstance(v, dict) else list(v)


def _algebra_quotient_ops(H: HopfAlgebra, I: Subspace):
    """Left multiplication operators of the basis of H on H/I, in complement coordinates."""
    n = H.dim
    free = [j for j in range(n) if j not in set(I.pivots)]
    def proj(v):
        r = I.reduce(dense(v, n))
        return [r[j] for j in free]
    ops = []
    for b in range(n):
        cols = [proj(H.smul({b: ONE}, {a: ONE})) for a in free]
        ops.append(transpose(cols) if cols else [])
    return free, ops


def two_sided_ideal(H: HopfAlgebra, vectors) -> Subspace:
    """Two-sided ideal generated by the given vectors."""
    n = H.dim
    span = _Span(n)
    queue = []
    for v in vectors:
        if span.add(_vec(H, v)):
            queue.append(sparse(v))
    while queue:
        v = queue.pop()
        for b in range(n):
            for w in (H.smul({b: ONE}, v), H.smul(v, {b: ONE})):
                if w and span.add(dense(w, n)):
                    queue.append(w)
    return span.subspace()


# ------------------------------------------------------------------ center and characters

def center(H: HopfAlgebra) -> Subspace:
    """Kernel of the commutator maps b -> b_i b - b b_i."""
    maps = [lambda j, i=i: sparse_add(H.smul({i: ONE}, {j: ONE}),
                                      sparse_scale(-ONE, H.smul({j: ONE}, {i: ONE})))
            for i in range(H.dim)]
    return stacked_kernel(H, maps)


def commutator_ideal(H: HopfAlgebra) -> Subspace:
    n = H.dim
    comms = []
    for i in range(n):
        for j in range(i + 1, n):
            c = sparse_add(H.smul({i: ONE}, {j: ONE}), sparse_scale(-ONE, H.smul({j: ONE}, {i: ONE})))
            if c:
                comms.append(dense(c, n))
    return two_sided_ideal(H, comms)


def algebra_characters(H: HopfAlgebra) -> list:
    """All algebra maps H -> K as covectors (values on the basis), sorted.

    H is divided by its commutator ideal; the commutative quotient is split by the
    joint eigenspaces of its multiplication operators, whose eigenvalues are the
    character values.
    """
    I = commutator_ideal(H)
    free, ops = _algebra_quotient_ops(H, I)
    if not free:
        return []
    pieces = joint_eigensplit_with_values(ops, Subspace.full(len(free)))
    chars = []
    for values, piece in pieces:
        if piece.dim != 1:
            raise NotSemisimple("abelianization is not semisimple")
        chi = list(values)
        if any(_apply(chi, H.smul({i: ONE}, {j: ONE})) != chi[i] * chi[j]
               for i in range(H.dim) for j in range(H.dim)):
            raise StructureError("eigenvalue tuple is not multiplicative")
        chars.append(chi)
    return sorted(chars, key=lambda c: [x.sort_key() for x in c])


def _apply(covector: Sequence, v) -> GaussianRational:
    items = v.items() if isinstance(v, dict) else enumerate(v)
    return sum((covector[k] * x for k, x in items if x), ZERO)


# ------------------------------------------------------------------ group-likes

def _group_of(H: HopfAlgebra, vectors: list, labels: list, name: str) -> FiniteGroup:
    index = {tuple(v): t for t, v in enumerate(vectors)}
    table = []
    for a in vectors:
        row = []
        for b in vectors:
            p = tuple(H.mul(a, b))
            if p not in index:
                raise StructureError("group-likes are not closed under multiplication")
            row.append(index[p])
        table.append(row)
    return FiniteGroup(table, labels, name)


def _label(H: HopfAlgebra, v: Sequence) -> str:
    nz = [j for j, x in enumerate(v) if x]
    if len(nz) == 1 and v[nz[0]] == ONE:
        return H.basis_labels[nz[0]]
    return H.format(v)


def grouplikes(H: HopfAlgebra) -> tuple:
    """Group-like elements as the characters of the dual algebra, with their group.

    The unit comes first; the rest are ordered by their coordinate vectors.
    """
    D = dual_hopf(H)
    vecs = [list(c) for c in algebra_characters(D)]
    for v in vecs:
        if not grouplike_check(H, v):
            raise StructureError("a dual character failed the group-like test")
    unit = list(H.unit)
    vecs.sort(key=lambda v: (v != unit, [x.sort_key() for x in v]))
    labels = [_label(H, v) for v in vecs]
    elems = [GroupLikeElement(tuple(v), l) for v, l in zip(vecs, labels)]
    return elems, _group_of(H, vecs, labels, f"G({H.name})")


def central_grouplikes(H: HopfAlgebra, elems: list | None = None) -> list:
    if elems is None:
        elems, _ = grouplikes(H)
    Z = center(H)
    return [g for g in elems if Z.contains(list(g.vector))]


# ------------------------------------------------------------------ Wedderburn

@dataclass
class WedderburnData:
    central_idempotents: list
    block_dims: list
    split_certified: bool
    idempotent_chains: list = field(default_factory=list)
    block_spaces: list = field(default_factory=list, repr=False)

    def multiset(self) -> dict:
        out: dict = {}
        for d in self.block_dims:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))


def trace_form_radical(H: HopfAlgebra) -> Subspace:
    n = H.dim
    traces = []
    for k in range(n):
        traces.append(sum((c for i in range(n) for kk, c in H._mt[k][i] if kk == i), ZERO))
    T = [[sum((c * traces[k] for k, c in H._mt[i][j]), ZERO) for j in range(n)] for i in range(n)]
    return kernel(T, n)


def _left_ideal(H: HopfAlgebra, e: dict) -> Subspace:
    return Subspace(H.dim, [dense(H.smul({b: ONE}, e), H.dim) for b in range(H.dim)])


def _corner_dim(H: HopfAlgebra, f: dict) -> int:
    return Subspace(H.dim, [dense(H.smul(H.smul(f, {b: ONE}), f), H.dim) for b in range(H.dim)]).dim


def _minimal_polynomial_roots(H: HopfAlgebra, y: dict, f: dict):
    """Roots of the minimal polynomial of y in the corner algebra with unit f.

    Returns None unless the minimal polynomial splits into distinct linear factors.
    """
    n = H.dim
    powers = [f]
    span = _Span(n, [dense(f, n)])
    while True:
        nxt = H.smul(powers[-1], y)
        if not span.add(dense(nxt, n)):
            break
        powers.append(nxt)
    k = len(powers)
    # nxt = sum c_j powers[j]
    cols = [dense(p, n) for p in powers]
    coeffs = solve(transpose(cols), dense(nxt, n))
    poly = Polynomial([-c for c in coeffs] + [ONE])
    roots = gaussian_roots(poly)
    if len(roots) != k or len(set(roots)) != k:
        return None
    return roots


def _lagrange_split(H: HopfAlgebra, y: dict, f: dict, roots) -> list:
    out = []
    for lam in roots:
        e = dict(f)
        for mu in roots:
            if mu != lam:
                e = H.smul(e, sparse_add(y, sparse_scale(-mu, f)))
                e = sparse_scale((lam - mu).inv(), e)
        out.append(e)
    return out


def _split_block(H: HopfAlgebra, e: dict, size: int) -> list | None:
    """Search for `size` orthogonal primitive idempotents summing to e."""
    n = H.dim
    done, todo = [], [e]
    while todo:
        f = todo.pop()
        if _corner_dim(H, f) == 1:
            done.append(f)
            continue
        candidates = [{b: ONE} for b in range(n)]
        candidates += [{a: ONE, b: ONE} for a, b in combinations(range(n), 2)]
        for c in candidates:
            y = H.smul(H.smul(f, c), f)
            if not y:
                continue
            roots = _minimal_polynomial_roots(H, y, f)
            if roots is None or len(roots) < 2:
                continue
            todo.extend(_lagrange_split(H, y, f, roots))
            break
        else:
            return None
    return done if len(done) == size else None


def wedderburn(H: HopfAlgebra) -> WedderburnData:
    """Block decomposition of a semisimple algebra with a splitness certificate."""
    n = H.dim
    if trace_form_radical(H).dim:
        raise NotSemisimple(f"{H.name or 'algebra'} has a nonzero trace-form radical")
    Z = center(H)
    ops = [H.left_mult_matrix(z) for z in Z.basis]
    pieces = joint_eigensplit_with_values(ops, Z)
    idempotents, dims, spaces = [], [], []
    for _, piece in pieces:
        if piece.dim != 1:
            raise NotSemisimple("center is not split semisimple")
        e = sparse(piece.basis[0])
        lam = None
        e2 = H.smul(e, e)
        for k, c in e.items():
            lam = e2.get(k, ZERO) / c
            break
        e = sparse_scale(lam.inv(), e)
        block = _left_ideal(H, e)
        idempotents.append(e)
        dims.append(block.dim)
        spaces.append(block)
    order = sorted(range(len(dims)), key=lambda t: (dims[t], spaces[t].sort_key()))
    idempotents = [idempotents[t] for t in order]
    spaces = [spaces[t] for t in order]
    sizes = []
    for d in (dims[t] for t in order):
        s = isqrt(d)
        if s * s != d:
            raise NotSemisimple(f"block of dimension {d} is not a full matrix algebra")
        sizes.append(s)
    chains, certified = [], True
    for e, s in zip(idempotents, sizes):
        chain = [e] if s == 1 else _split_block(H, e, s)
        if chain is None:
            certified = False
            chains.append([])
        else:
            chains.append([dense(f, n) for f in chain])
    return WedderburnData([dense(e, n) for e in idempotents], sizes, certified, chains, spaces)


def _require_split(W: WedderburnData):
    if not W.split_certified:
        raise SplitCertificationFailed("Wedderburn decomposition could not be certified split")


def coalgebra_blocks(H: HopfAlgebra, dual_wedderburn: WedderburnData | None = None) -> list:
    """Simple subcoalgebras: images of b -> b_(1) e(b_(2)) for central idempotents e of H^*."""
    W = dual_wedderburn or wedderburn(dual_hopf(H))
    _require_split(W)
    n = H.dim
    blocks = []
    for e in W.central_idempotents:
        vecs = []
        for b in range(n):
            acc: dict = {}
            for j, k, c in H._ct[b]:
                if e[k]:
                    acc[j] = acc.get(j, ZERO) + c * e[k]
            vecs.append(dense(acc, n))
        blocks.append(Subspace(n, vecs))
    if sum(b.dim for b in blocks) != n:
        raise StructureError("coalgebra blocks do not fill the space")
    return blocks


# ------------------------------------------------------------------ Hopf subalgebras

def _closed_under_mult(H: HopfAlgebra, P: Subspace) -> bool:
    basis = [sparse(b) for b in P.basis]
    for a in basis:
        for b in basis:
            if not P.contains(dense(H.smul(a, b), H.dim)):
                return False
    return True


def _closed_under_antipode(H: HopfAlgebra, P: Subspace) -> bool:
    return all(P.contains(dense(H.santipode(sparse(b)), H.dim)) for b in P.basis)


def hopf_subalgebras_of_dim(H: HopfAlgebra, d: int, blocks: list | None = None) -> list:
    """All Hopf subalgebras of dimension d, as sums of simple subcoalgebras."""
    blocks = blocks if blocks is not None else coalgebra_blocks(H)
    unit = list(H.unit)
    home = next(t for t, b in enumerate(blocks) if b.contains(unit))
    others = [t for t in range(len(blocks)) if t != home]
    target = d - blocks[home].dim
    found = []

    def search(start, remaining, chosen):
        if remaining == 0:
            vecs = [v for t in [home] + chosen for v in blocks[t].basis]
            P = Subspace(H.dim, vecs)
            if _closed_under_mult(H, P) and _closed_under_antipode(H, P):
                found.append(P)
            return
        for pos in range(start, len(others)):
            t = others[pos]
            if blocks[t].dim <= remaining:
                search(pos + 1, remaining - blocks[t].dim, chosen + [t])

    if target >= 0:
        search(0, target, [])
    return sorted(found, key=Subspace.sort_key)


def _comult_legs(H: HopfAlgebra, v: dict) -> list:
    T = H.scomul(v)
    left: dict = {}
    right: dict = {}
    for (p, q), c in T.items():
        left.setdefault(q, {})[p] = c
        right.setdefault(p, {})[q] = c
    return list(left.values()) + list(right.values())


def generated_hopf_subalgebra(H: HopfAlgebra, gens: Sequence) -> Subspace:
    """Smallest subspace containing 1 and gens closed under products, both coproduct legs and S."""
    n = H.dim
    span = _Span(n)
    members: list = []
    queue = []
    for v in [list(H.unit)] + [_vec(H, g) for g in gens]:
        if span.add(v):
            queue.append(sparse(v))
    while queue:
        v = queue.pop()
        members.append(v)
        new = []
        for w in members:
            new.append(H.smul(v, w))
            new.append(H.smul(w, v))
        new.extend(_comult_legs(H, v))
        if H.antipode is not None:
            new.append(H.santipode(v))
        for w in new:
            if w and span.add(dense(w, n)):
                queue.append(w)
    return span.subspace()


def _subalgebra_closure(H: HopfAlgebra, vectors) -> _Span:
    n = H.dim
    span = _Span(n)
    members: list = []
    queue = [sparse(v) for v in vectors if span.add(_vec(H, v))]
    while queue:
        v = queue.pop()
        members.append(v)
        for w in members:
            for p in (H.smul(v, w), H.smul(w, v)):
                if p and span.add(dense(p, n)):
                    queue.append(p)
    return span


def algebra_generators(H: HopfAlgebra) -> list:
    """A small set of basis indices generating H as an algebra (greedy, cached)."""
    if "algebra_generators" not in H._cache:
        gens: list = []
        span = _subalgebra_closure(H, [H.unit])
        for b in range(H.dim):
            if span.dim == H.dim:
                break
            if span.add(dense({b: ONE}, H.dim)):
                gens.append(b)
                span = _subalgebra_closure(H, [H.unit] + [dense({g: ONE}, H.dim) for g in gens])
        H._cache["algebra_generators"] = gens
    return H._cache["algebra_generators"]


def is_normal_hopf_subalgebra(H: HopfAlgebra, P: Subspace) -> bool:
    """Stability of P under the left and right adjoint actions of H.

    Both adjoint actions are module actions, so algebra generators of H suffice.
    """
    n = H.dim
    basis = [sparse(p) for p in P.basis]
    for b in algebra_generators(H):
        terms = H._ct[b]
        for p in basis:
            left: dict = {}
            right: dict = {}
            for j, k, c in terms:
                left = sparse_add(left, sparse_scale(c, H.smul(H.smul({j: ONE}, p), H.santipode({k: ONE}))))
                right = sparse_add(right, sparse_scale(c, H.smul(H.smul(H.santipode({j: ONE}), p), {k: ONE})))
            if not P.contains(dense(left, n)) or not P.contains(dense(right, n)):
                return False
    return True


def augmentation_ideal(H: HopfAlgebra, P: Subspace) -> Subspace:
    """The left ideal H P^+ spanned by b (p - eps(p) 1)."""
    n = H.dim
    plus = []
    for p in P.basis:
        sp = sparse(p)
        q = sparse_add(sp, sparse_scale(-H.scounit(sp), sparse(H.unit)))
        if q:
            plus.append(q)
    span = _Span(n)
    for b in range(n):
        for q in plus:
            span.add(dense(H.smul({b: ONE}, q), n))
    return span.subspace()


def quotient_hopf(H: HopfAlgebra, P: Subspace, name: str = "", check_normal: bool = True) -> tuple:
    """The quotient H / H P^+ with its projection; both verified."""
    if check_normal and not is_normal_hopf_subalgebra(H, P):
        raise NotNormal("Hopf subalgebra is not normal")
    I = augmentation_ideal(H, P)
    if not is_hopf_ideal(H, I):
        raise NotHopfIdeal("H P^+ is not a Hopf ideal")
    Q, pi = quotient_by_ideal(H, I, name)
    rep = verify_hopf(Q)
    if not rep.ok:
        raise StructureError(f"quotient fails {rep.failures()}")
    verify_morphism(pi)
    return Q, pi


def annihilator(P: Subspace) -> Subspace:
    """Vectors b of H with phi(b) = 0 for every phi in the subspace P of the dual."""
    if P.dim == 0:
        return Subspace.full(P.ambient_dim)
    return kernel([list(r) for r in P.basis], P.ambient_dim)


def hopf_ideals_of_dim(H: HopfAlgebra, d: int, dual_blocks: list | None = None) -> list:
    """Hopf ideals of dimension d, as annihilators of Hopf subalgebras of the dual."""
    D = dual_hopf(H)
    subs = hopf_subalgebras_of_dim(D, H.dim - d, dual_blocks)
    ideals = [annihilator(P) for P in subs]
    for I in ideals:
        if not is_hopf_ideal(H, I):
            raise StructureError("annihilator of a Hopf subalgebra of the dual is not a Hopf ideal")
    return sorted(ideals, key=Subspace.sort_key)


# ------------------------------------------------------------------ coinvariants and extensions

def _tensor_rows(H: HopfAlgebra, m: int, images: list) -> list:
    rows = []
    for p in range(H.dim):
        for t in range(m):
            row = [img.get((p, t), ZERO) for img in images]
            if any(row):
                rows.append(row)
    return rows


def coinvariants(H: HopfAlgebra, pi: HopfMorphism) -> tuple:
    """(right, left) coinvariants of a Hopf map pi: H -> F."""
    n, F = H.dim, pi.target
    m = F.dim
    pims = [pi.image_of(j) for j in range(n)]
    one_F = sparse(F.unit)
    right_imgs, left_imgs = [], []
    for b in range(n):
        r: dict = {}
        l: dict = {}
        for j, k, c in H._ct[b]:
            for t, x in pims[k].items():
                r[(j, t)] = r.get((j, t), ZERO) + c * x
            for t, x in pims[j].items():
                l[(k, t)] = l.get((k, t), ZERO) + c * x
        for t, x in one_F.items():
            r[(b, t)] = r.get((b, t), ZERO) - x
            l[(b, t)] = l.get((b, t), ZERO) - x
        right_imgs.append(r)
        left_imgs.append(l)
    spaces = []
    for imgs in (right_imgs, left_imgs):
        rows = _tensor_rows(H, m, imgs)
        spaces.append(kernel(rows, n) if rows else Subspace.full(n))
    return spaces[0], spaces[1]


@dataclass
class ExtensionReport:
    exact: bool
    abelian: bool
    central: bool
    cocentral: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"exact": self.exact, "abelian": self.abelian, "central": self.central,
                "cocentral": self.cocentral}


def image_space(f: HopfMorphism) -> Subspace:
    return Subspace(f.target.dim, transpose(f.matrix))


def verify_extension(iota: HopfMorphism, pi: HopfMorphism) -> ExtensionReport:
    """Exactness and the abelian, central and cocentral predicates of iota: K -> H -> F: pi."""
    H = iota.target
    if pi.source is not H and not pi.source.same_tensors(H):
        raise StructureError("the two maps do not meet in the same Hopf algebra")
    for f in (iota, pi):
        if not f.verified:
            verify_morphism(f)
        if not f.is_hopf_map():
            raise StructureError(f"{f.name or 'map'} is not a Hopf algebra map")
    img = image_space(iota)
    right, left = coinvariants(H, pi)
    exact = (img.dim == iota.source.dim and image_space(pi).dim == pi.target.dim
             and img == right)
    abelian = comm_flags(iota.source)["commutative"] and comm_flags(pi.target)["cocommutative"]
    central = center(H).contains_space(img)
    dual_center = center(dual_hopf(H))
    cocentral = dual_center.contains_space(Subspace(H.dim, [list(r) for r in pi.matrix]))
    return ExtensionReport(exact, abelian, central, cocentral,
                           {"right_coinvariants": right, "left_coinvariants": left})


# ------------------------------------------------------------------ characters and K_0

def irreducible_characters(H: HopfAlgebra, W: WedderburnData | None = None) -> list:
    """(covector, degree) per block; chi(b) is the trace of b on the block divided by the degree."""
    W = W or wedderburn(H)
    _require_split(W)
    out = []
    for space, deg in zip(W.block_spaces, W.block_dims):
        values = []
        for b in range(H.dim):
            R = restrict_operator(H.left_mult_matrix(dense({b: ONE}, H.dim)), space)
            tr = sum((R[i][i] for i in range(len(R))), ZERO)
            values.append(tr / deg)
        out.append((values, deg))
    return out


@dataclass
class GrothendieckTable:
    irreducible_characters: list
    dims: list
    structure_constants: list  # N[i][j][k]

    def product(self, i: int, j: int) -> dict:
        return {k: c for k, c in enumerate(self.structure_constants[i][j]) if c}

    def is_commutative(self) -> bool:
        n = len(self.dims)
        return all(self.structure_constants[i][j] == self.structure_constants[j][i]
                   for i in range(n) for j in range(n))


def convolve(H: HopfAlgebra, chi: Sequence, psi: Sequence) -> list:
    """(chi psi)(b) = chi(b_(1)) psi(b_(2))."""
    return [sum((c * chi[j] * psi[k] for j, k, c in H._ct[b]), ZERO) for b in range(H.dim)]


def grothendieck_table(H: HopfAlgebra, chars: list | None = None) -> GrothendieckTable:
    chars = chars or irreducible_characters(H)
    vecs = [list(c) for c, _ in chars]
    dims = [d for _, d in chars]
    M = transpose(vecs)
    table = []
    for i in range(len(vecs)):
        row = []
        for j in range(len(vecs)):
            prod = convolve(H, vecs[i], vecs[j])
            coeffs = solve(M, prod)
            back = [sum((coeffs[k] * vecs[k][b] for k in range(len(vecs))), ZERO)
                    for b in range(H.dim)]
            if back != prod:
                raise DecompositionFailure("product is not a combination of irreducible characters")
            ints = []
            for c in coeffs:
                if not c.is_real() or c.re.denominator != 1 or c.re < 0:
                    raise DecompositionFailure(f"coefficient {c} is not a nonnegative integer")
                ints.append(int(c.re))
            if dims[i] * dims[j] != sum(a * b for a, b in zip(ints, dims)):
                raise DecompositionFailure("dimension count fails")
            row.append(ints)
        table.append(row)
    return GrothendieckTable(vecs, dims, table)


# ------------------------------------------------------------------ recognition

def recognize_hopf(H: HopfAlgebra, _depth: int = 0) -> tuple:
    """("group_algebra", name), ("dual_group_algebra", name) or ("unresolved", "")."""
    flags = comm_flags(H)
    if flags["cocommutative"]:
        elems, G = grouplikes(H)
        if len(elems) == H.dim:
            return ("group_algebra", recognize_group(G))
    if flags["commutative"] and _depth == 0:
        kind, name = recognize_hopf(dual_hopf(H), 1)
        if kind == "group_algebra":
            return ("dual_group_algebra", name)
    return ("unresolved", "")
