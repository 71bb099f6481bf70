"""Finite-dimensional Hopf algebras given by structure constants.

Conventions: e_i e_j = sum_k mult[i][j][k] e_k and
Delta(e_i) = sum_{j,k} comult[i][j][k] e_j (x) e_k.  Linear maps are matrices
whose column j holds the image of e_j, so f(v) = M v.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .exact_math import (ONE, ZERO, GaussianRational, Inconsistent, Matrix, Subspace,
                         gq, identity, is_invertible, kernel, rref, transpose)


class StructureError(ValueError):
    pass


class NoAntipode(StructureError):
    pass


class HypothesisFailed(StructureError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


SVec = dict  # sparse vector: index -> nonzero GaussianRational


def sparse(v: Sequence) -> SVec:
    return {k: x for k, x in enumerate(v) if x}


def dense(v: SVec, n: int) -> list:
    out = [ZERO] * n
    for k, x in v.items():
        out[k] = x
    return out


def _axpy(acc: dict, c, v: dict):
    """acc += c * v, dropping zeros."""
    for k, x in v.items():
        y = acc.get(k)
        y = c * x if y is None else y + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)


def sparse_add(u: SVec, v: SVec) -> SVec:
    out = dict(u)
    _axpy(out, ONE, v)
    return out


def sparse_scale(c, v: SVec) -> SVec:
    c = gq(c)
    return {k: c * x for k, x in v.items()} if c else {}


class HopfAlgebra:
    """Structure constants of a (possibly not yet Hopf) bialgebra with an optional antipode."""

    def __init__(self, basis_labels: Sequence[str], mult, unit, comult, counit,
                 antipode: Matrix | None = None, name: str = "", smash=None):
        n = len(basis_labels)
        self.dim = n
        self.basis_labels = tuple(basis_labels)
        self.name = name
        self.mult = [[list(map(gq, mult[i][j])) for j in range(n)] for i in range(n)]
        self.unit = [gq(x) for x in unit]
        self.comult = [[list(map(gq, comult[i][j])) for j in range(n)] for i in range(n)]
        self.counit = [gq(x) for x in counit]
        self.antipode = None if antipode is None else [list(map(gq, r)) for r in antipode]
        self.smash = smash
        self._check_shapes()
        self._mt = [[tuple((k, c) for k, c in enumerate(self.mult[i][j]) if c)
                     for j in range(n)] for i in range(n)]
        self._ct = [tuple((j, k, c) for j in range(n) for k, c in enumerate(self.comult[i][j]) if c)
                    for i in range(n)]
        self._st = None if self.antipode is None else [
            tuple((i, self.antipode[i][j]) for i in range(n) if self.antipode[i][j])
            for j in range(n)]
        self._cache: dict = {}

    def _check_shapes(self):
        n = self.dim
        if len(self.unit) != n or len(self.counit) != n:
            raise StructureError("unit/counit length mismatch")
        for T in (self.mult, self.comult):
            if len(T) != n or any(len(r) != n or any(len(c) != n for c in r) for r in T):
                raise StructureError("structure tensor has wrong shape")
        if self.antipode is not None and (len(self.antipode) != n or
                                          any(len(r) != n for r in self.antipode)):
            raise StructureError("antipode matrix has wrong shape")

    def with_antipode(self, S: Matrix) -> "HopfAlgebra":
        return HopfAlgebra(self.basis_labels, self.mult, self.unit, self.comult, self.counit,
                           S, self.name, self.smash)

    def renamed(self, name: str) -> "HopfAlgebra":
        H = HopfAlgebra.__new__(HopfAlgebra)
        H.__dict__.update(self.__dict__)
        H.name = name
        H._cache = {}
        return H

    # -------------------------------------------------------------- elements
    def e(self, i) -> list:
        if isinstance(i, str):
            i = self.basis_labels.index(i)
        v = [ZERO] * self.dim
        v[i] = ONE
        return v

    def one(self) -> list:
        return list(self.unit)

    def element(self, terms: dict) -> list:
        """Vector from a {label or index: coefficient} mapping."""
        v = [ZERO] * self.dim
        for key, c in terms.items():
            k = self.basis_labels.index(key) if isinstance(key, str) else key
            v[k] = v[k] + gq(c)
        return v

    def smul(self, x: SVec, y: SVec) -> SVec:
        acc: dict = {}
        mt = self._mt
        for i, a in x.items():
            row = mt[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j]:
                    t = acc.get(k)
                    t = ab * c if t is None else t + ab * c
                    if t:
                        acc[k] = t
                    else:
                        del acc[k]
        return acc

    def mul(self, x: Sequence, y: Sequence) -> list:
        return dense(self.smul(sparse(x), sparse(y)), self.dim)

    def prod(self, *xs: Sequence) -> list:
        acc = sparse(self.unit)
        for x in xs:
            acc = self.smul(acc, sparse(x))
        return dense(acc, self.dim)

    def power(self, x: Sequence, n: int) -> list:
        return self.prod(*([x] * n))

    def scomul(self, x: SVec) -> dict:
        acc: dict = {}
        for i, a in x.items():
            for j, k, c in self._ct[i]:
                t = acc.get((j, k))
                t = a * c if t is None else t + a * c
                if t:
                    acc[(j, k)] = t
                else:
                    del acc[(j, k)]
        return acc

    def comul(self, x: Sequence) -> dict:
        """Delta(x) as a sparse {(j, k): coefficient} tensor."""
        return self.scomul(sparse(x))

    def scounit(self, x: SVec) -> GaussianRational:
        acc = ZERO
        for i, a in x.items():
            c = self.counit[i]
            if c:
                acc = acc + a * c
        return acc

    def counit_of(self, x: Sequence) -> GaussianRational:
        return self.scounit(sparse(x))

    def santipode(self, x: SVec) -> SVec:
        if self._st is None:
            raise StructureError("antipode not attached")
        acc: dict = {}
        for j, a in x.items():
            for i, c in self._st[j]:
                t = acc.get(i)
                t = a * c if t is None else t + a * c
                if t:
                    acc[i] = t
                else:
                    del acc[i]
        return acc

    def apply_antipode(self, x: Sequence) -> list:
        return dense(self.santipode(sparse(x)), self.dim)

    def tensor(self, pairs: Iterable) -> dict:
        """Sparse tensor from (coefficient, left vector, right vector) triples."""
        acc: dict = {}
        for c, a, b in pairs:
            c = gq(c)
            for j, x in enumerate(a):
                if not x:
                    continue
                for k, y in enumerate(b):
                    if y:
                        t = acc.get((j, k), ZERO) + c * x * y
                        if t:
                            acc[(j, k)] = t
                        else:
                            acc.pop((j, k), None)
        return acc

    def left_mult_matrix(self, x: Sequence) -> Matrix:
        n = self.dim
        M = [[ZERO] * n for _ in range(n)]
        xs = sparse(x)
        for j in range(n):
            for k, c in self.smul(xs, {j: ONE}).items():
                M[k][j] = c
        return M

    def right_mult_matrix(self, x: Sequence) -> Matrix:
        n = self.dim
        M = [[ZERO] * n for _ in range(n)]
        xs = sparse(x)
        for j in range(n):
            for k, c in self.smul({j: ONE}, xs).items():
                M[k][j] = c
        return M

    def format(self, v: Sequence) -> str:
        terms = [f"({c})*{self.basis_labels[k]}" for k, c in enumerate(v) if c]
        return " + ".join(terms) if terms else "0"

    # ------------------------------------------------------------ io
    def to_json(self) -> dict:
        enc = lambda T: [[[x.to_json() for x in r] for r in M] for M in T]
        return {
            "dim": self.dim,
            "basis": list(self.basis_labels),
            "mult": enc(self.mult),
            "comult": enc(self.comult),
            "unit": [x.to_json() for x in self.unit],
            "counit": [x.to_json() for x in self.counit],
            "antipode": None if self.antipode is None else
            [[x.to_json() for x in r] for r in self.antipode],
        }

    @staticmethod
    def from_json(data: dict, name: str = "") -> "HopfAlgebra":
        dec = lambda T: [[[GaussianRational.parse(x) for x in r] for r in M] for M in T]
        S = data.get("antipode")
        return HopfAlgebra(data["basis"], dec(data["mult"]),
                           [GaussianRational.parse(x) for x in data["unit"]],
                           dec(data["comult"]),
                           [GaussianRational.parse(x) for x in data["counit"]],
                           None if S is None else [[GaussianRational.parse(x) for x in r] for r in S],
                           name)

    def same_tensors(self, other: "HopfAlgebra") -> bool:
        return (self.dim == other.dim and self.mult == other.mult and self.unit == other.unit
                and self.comult == other.comult and self.counit == other.counit
                and self.antipode == other.antipode)

    def __repr__(self):
        return f"HopfAlgebra({self.name or '?'}, dim={self.dim})"


@dataclass
class SmashStructure:
    """Records that a Hopf algebra is a smash product A # H with basis a_i # h_j at i*dim(H) + j."""
    a_mult: list
    a_unit: list
    h_algebra: HopfAlgebra
    action: list  # action[h] is the matrix of h acting on A (column convention)

    @property
    def a_dim(self) -> int:
        return len(self.a_unit)

    def index(self, a: int, h: int) -> int:
        return a * self.h_algebra.dim + h


# ------------------------------------------------------------------ verifiers

AXIOMS = ("associativity", "left_unit", "right_unit", "coassociativity", "left_counit",
          "right_counit", "comult_multiplicative", "counit_multiplicative", "comult_unit",
          "counit_unit", "antipode_left", "antipode_right")


@dataclass
class HopfReport:
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v for v in self.checks.values() if v is not None)

    def failures(self) -> list:
        return [k for k, v in self.checks.items() if v is False]

    def __getitem__(self, key):
        return self.checks[key]


def _check_associativity(H: HopfAlgebra) -> bool:
    mt, n = H._mt, H.dim
    for i in range(n):
        for j in range(n):
            ij = mt[i][j]
            for k in range(n):
                lhs: dict = {}
                for m, c in ij:
                    for p, d in mt[m][k]:
                        lhs[p] = lhs.get(p, ZERO) + c * d
                rhs: dict = {}
                for m, c in mt[j][k]:
                    for p, d in mt[i][m]:
                        rhs[p] = rhs.get(p, ZERO) + c * d
                if {a: b for a, b in lhs.items() if b} != {a: b for a, b in rhs.items() if b}:
                    return False
    return True


def _check_coassociativity(H: HopfAlgebra) -> bool:
    for i in range(H.dim):
        lhs: dict = {}
        rhs: dict = {}
        for j, k, c in H._ct[i]:
            for a, b, d in H._ct[j]:
                key = (a, b, k)
                lhs[key] = lhs.get(key, ZERO) + c * d
            for a, b, d in H._ct[k]:
                key = (j, a, b)
                rhs[key] = rhs.get(key, ZERO) + c * d
        if {a: b for a, b in lhs.items() if b} != {a: b for a, b in rhs.items() if b}:
            return False
    return True


def _left_grouped(H: HopfAlgebra) -> list:
    """For each i, Delta(e_i) written as a list of (left index, right sparse vector)."""
    cached = H._cache.get("left_grouped")
    if cached is None:
        cached = []
        for i in range(H.dim):
            groups: dict = {}
            for j, k, c in H._ct[i]:
                groups.setdefault(j, {})[k] = c
            cached.append(sorted(groups.items()))
        H._cache["left_grouped"] = cached
    return cached


def _check_comult_multiplicative(H: HopfAlgebra) -> bool:
    n, mt = H.dim, H._mt
    lg = _left_grouped(H)
    for i in range(n):
        for j in range(n):
            lhs: dict = {}
            for m, c in mt[i][j]:
                for a, b, d in H._ct[m]:
                    lhs[(a, b)] = lhs.get((a, b), ZERO) + c * d
            rhs: dict = {}
            for a, X in lg[i]:
                for b, Y in lg[j]:
                    XY = H.smul(X, Y)
                    if not XY:
                        continue
                    for p, c in mt[a][b]:
                        for q, d in XY.items():
                            rhs[(p, q)] = rhs.get((p, q), ZERO) + c * d
            if {a: b for a, b in lhs.items() if b} != {a: b for a, b in rhs.items() if b}:
                return False
    return True


def _convolution_with_identity(H: HopfAlgebra, i: int, left: bool) -> SVec:
    acc: dict = {}
    for j, k, c in H._ct[i]:
        if left:
            term = H.smul(H.santipode({j: ONE}), {k: ONE})
        else:
            term = H.smul({j: ONE}, H.santipode({k: ONE}))
        _axpy(acc, c, term)
    return acc


def verify_hopf(H: HopfAlgebra) -> HopfReport:
    """Check every bialgebra and antipode axiom on all basis tuples."""
    n = H.dim
    one = sparse(H.unit)
    checks = {}
    checks["associativity"] = _check_associativity(H)
    checks["left_unit"] = all(H.smul(one, {i: ONE}) == {i: ONE} for i in range(n))
    checks["right_unit"] = all(H.smul({i: ONE}, one) == {i: ONE} for i in range(n))
    checks["coassociativity"] = _check_coassociativity(H)
    left_ok = right_ok = True
    for i in range(n):
        l: dict = {}
        r: dict = {}
        for j, k, c in H._ct[i]:
            if H.counit[j]:
                _axpy(l, H.counit[j] * c, {k: ONE})
            if H.counit[k]:
                _axpy(r, H.counit[k] * c, {j: ONE})
        left_ok = left_ok and l == {i: ONE}
        right_ok = right_ok and r == {i: ONE}
    checks["left_counit"] = left_ok
    checks["right_counit"] = right_ok
    checks["comult_multiplicative"] = _check_comult_multiplicative(H)
    checks["counit_multiplicative"] = all(
        H.scounit(dict(H._mt[i][j])) == H.counit[i] * H.counit[j]
        for i in range(n) for j in range(n))
    d1 = H.scomul(one)
    checks["comult_unit"] = d1 == {(a, b): x * y for a, x in one.items() for b, y in one.items()
                                   if x * y}
    checks["counit_unit"] = H.scounit(one) == ONE
    if H.antipode is None:
        checks["antipode_left"] = None
        checks["antipode_right"] = None
    else:
        targets = [sparse_scale(H.counit[i], one) for i in range(n)]
        checks["antipode_left"] = all(_convolution_with_identity(H, i, True) == targets[i]
                                      for i in range(n))
        checks["antipode_right"] = all(_convolution_with_identity(H, i, False) == targets[i]
                                       for i in range(n))
    return HopfReport(checks)


# ------------------------------------------------------------------ antipode

def _gauss_solve_unique(rows: list, nunk: int) -> list:
    """Solve a sparse augmented system (rows: dict col -> coeff, rhs at key nunk) uniquely."""
    pivots: dict = {}
    order = []
    for row in rows:
        r = dict(row)
        for p in order:
            c = r.get(p)
            if c:
                _axpy(r, -c, pivots[p])
        lead = min((k for k in r if k != nunk), default=None)
        if lead is None:
            if r.get(nunk):
                raise Inconsistent("antipode system inconsistent")
            continue
        inv = r[lead].inv()
        r = {k: x * inv for k, x in r.items()}
        for p in order:
            c = pivots[p].get(lead)
            if c:
                _axpy(pivots[p], -c, r)
        pivots[lead] = r
        order.append(lead)
    if len(order) != nunk:
        raise NoAntipode("antipode system is underdetermined")
    return [pivots[k].get(nunk, ZERO) for k in range(nunk)]


def solve_antipode(H: HopfAlgebra) -> Matrix:
    """Convolution inverse of the identity, from the linear system S(b_(1)) b_(2) = eps(b) 1.

    Unknown columns S(e_j) are coupled only through the left legs of a common
    coproduct, so the system splits along those connected components.
    """
    n = H.dim
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        legs = [j for j, _, _ in H._ct[i]]
        for j in legs[1:]:
            a, b = find(legs[0]), find(j)
            if a != b:
                parent[a] = b
    comps: dict = {}
    for j in range(n):
        comps.setdefault(find(j), []).append(j)
    eq_of: dict = {}
    for i in range(n):
        if not H._ct[i]:
            raise NoAntipode(f"zero coproduct at basis element {i}")
        eq_of.setdefault(find(H._ct[i][0][0]), []).append(i)
    one = sparse(H.unit)
    S = [[ZERO] * n for _ in range(n)]
    for root, members in comps.items():
        pos = {j: t for t, j in enumerate(members)}
        nunk = len(members) * n
        rows = []
        for b in eq_of.get(root, []):
            # sum_{(j,k)} c * S(e_j) e_k = eps(b) 1, one scalar equation per output coordinate
            eqs: dict = {}
            for j, k, c in H._ct[b]:
                base = pos[j] * n
                for m in range(n):
                    for p, d in H._mt[m][k]:
                        row = eqs.setdefault(p, {})
                        key = base + m
                        t = row.get(key, ZERO) + c * d
                        if t:
                            row[key] = t
                        else:
                            row.pop(key, None)
            eps = H.counit[b]
            for p in range(n):
                row = eqs.get(p, {})
                rhs = eps * one.get(p, ZERO)
                if rhs:
                    row = dict(row)
                    row[nunk] = rhs
                rows.append(row)
        try:
            sol = _gauss_solve_unique(rows, nunk)
        except Inconsistent as exc:
            raise NoAntipode(str(exc)) from None
        for j in members:
            for m in range(n):
                S[m][j] = sol[pos[j] * n + m]
    return S


def attach_antipode(H: HopfAlgebra) -> HopfAlgebra:
    return H if H.antipode is not None else H.with_antipode(solve_antipode(H))


# ------------------------------------------------------------------ duals and flags

def _dual_label(label: str) -> str:
    return label[:-2] if label.endswith("^*") else label + "^*"


def dual_hopf(H: HopfAlgebra) -> HopfAlgebra:
    """Dual Hopf algebra on the dual basis; all structure maps are transposes."""
    n = H.dim
    mult = [[[H.comult[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    comult = [[[H.mult[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
    S = None if H.antipode is None else transpose(H.antipode)
    name = H.name[:-2] if H.name.endswith("^*") else (H.name + "^*" if H.name else "")
    return HopfAlgebra([_dual_label(l) for l in H.basis_labels], mult, H.counit, comult,
                       H.unit, S, name)


def comm_flags(H: HopfAlgebra) -> dict:
    n = H.dim
    comm = all(H.mult[i][j] == H.mult[j][i] for i in range(n) for j in range(i + 1, n))
    cocomm = all(H.comult[i][j][k] == H.comult[i][k][j]
                 for i in range(n) for j in range(n) for k in range(j + 1, n))
    return {"commutative": comm, "cocommutative": cocomm}


def stacked_kernel(H: HopfAlgebra, maps: Iterable[Callable[[int], SVec]]) -> Subspace:
    """Common kernel of several linear maps H -> H given on basis vectors."""
    n = H.dim
    rows = []
    for f in maps:
        cols = [f(j) for j in range(n)]
        for p in range(n):
            row = [cols[j].get(p, ZERO) for j in range(n)]
            if any(row):
                rows.append(row)
    if not rows:
        return Subspace.full(n)
    return kernel(rows, n)


def integrals(H: HopfAlgebra) -> dict:
    """Left integral space and the Maschke criterion."""
    n = H.dim
    maps = []
    for b in range(n):
        eps = H.counit[b]
        maps.append(lambda j, b=b, eps=eps: sparse_add(H.smul({b: ONE}, {j: ONE}),
                                                        {j: -eps} if eps else {}))
    space = stacked_kernel(H, maps)
    if space.dim != 1:
        raise StructureError(f"left integral space has dimension {space.dim}")
    lam = list(space.basis[0])
    return {"left_integral_space": space, "integral": lam,
            "semisimple": bool(H.counit_of(lam))}


# ------------------------------------------------------------------ morphisms

@dataclass
class HopfMorphism:
    source: HopfAlgebra
    target: HopfAlgebra
    matrix: Matrix  # target.dim x source.dim
    name: str = ""
    verified: dict = field(default_factory=dict)

    def __call__(self, v: Sequence) -> list:
        out = [ZERO] * self.target.dim
        for j, x in enumerate(v):
            if x:
                for i in range(self.target.dim):
                    c = self.matrix[i][j]
                    if c:
                        out[i] = out[i] + x * c
        return out

    def image_of(self, j: int) -> SVec:
        return {i: self.matrix[i][j] for i in range(self.target.dim) if self.matrix[i][j]}

    def is_hopf_map(self) -> bool:
        return bool(self.verified.get("algebra_map") and self.verified.get("coalgebra_map"))

    def is_isomorphism(self) -> bool:
        return self.is_hopf_map() and bool(self.verified.get("bijective"))


def morphism_from_images(source: HopfAlgebra, target: HopfAlgebra, images: Sequence,
                         name: str = "") -> HopfMorphism:
    """Build a morphism from the list of images of the source basis vectors."""
    return HopfMorphism(source, target, transpose([list(v) for v in images]), name)


def _check_algebra_map(f: HopfMorphism) -> bool:
    S, T = f.source, f.target
    imgs = [f.image_of(j) for j in range(S.dim)]
    if sparse(f(S.unit)) != sparse(T.unit):
        return False
    for i in range(S.dim):
        for j in range(S.dim):
            lhs: dict = {}
            for k, c in S._mt[i][j]:
                _axpy(lhs, c, imgs[k])
            if lhs != T.smul(imgs[i], imgs[j]):
                return False
    return True


def _check_coalgebra_map(f: HopfMorphism) -> bool:
    S, T = f.source, f.target
    imgs = [f.image_of(j) for j in range(S.dim)]
    for i in range(S.dim):
        lhs: dict = {}
        for j, k, c in S._ct[i]:
            for a, x in imgs[j].items():
                for b, y in imgs[k].items():
                    t = lhs.get((a, b), ZERO) + c * x * y
                    if t:
                        lhs[(a, b)] = t
                    else:
                        lhs.pop((a, b), None)
        if lhs != T.scomul(imgs[i]):
            return False
        if T.scounit(imgs[i]) != S.counit[i]:
            return False
    return True


def verify_morphism(f: HopfMorphism) -> dict:
    """Exact checks of the algebra, coalgebra and bijectivity properties; stores the flags on f."""
    flags = {
        "algebra_map": _check_algebra_map(f),
        "coalgebra_map": _check_coalgebra_map(f),
        "bijective": f.source.dim == f.target.dim and is_invertible(f.matrix),
    }
    f.verified = dict(flags)
    return flags


def _is_algebra_map_into(src_mult, src_unit, images: list, target: HopfAlgebra) -> tuple | None:
    """Witness (i, j) where the map fails to be multiplicative, ('unit',) on unit failure, else None."""
    n = len(src_unit)
    unit_img: dict = {}
    for k, c in enumerate(src_unit):
        if c:
            _axpy(unit_img, c, images[k])
    if unit_img != sparse(target.unit):
        return ("unit",)
    for i in range(n):
        for j in range(n):
            lhs: dict = {}
            for k, c in enumerate(src_mult[i][j]):
                if c:
                    _axpy(lhs, c, images[k])
            if lhs != target.smul(images[i], images[j]):
                return (i, j)
    return None


def extend_smash_algebra_map(fA: Matrix, fH: Matrix, source: HopfAlgebra,
                             target: HopfAlgebra, name: str = "") -> HopfMorphism:
    """Extend algebra maps on the two smash factors to the smash product.

    The commutation hypothesis fA(h_(1).a) fH(h_(2)) = fH(h) fA(a) is checked on
    every pair of basis elements before the extension a # h -> fA(a) fH(h) is built.
    """
    sm: SmashStructure = source.smash
    if sm is None:
        raise StructureError("source carries no smash product structure")
    Hh = sm.h_algebra
    imgA = [{i: fA[i][j] for i in range(target.dim) if fA[i][j]} for j in range(sm.a_dim)]
    imgH = [{i: fH[i][j] for i in range(target.dim) if fH[i][j]} for j in range(Hh.dim)]
    bad = _is_algebra_map_into(sm.a_mult, sm.a_unit, imgA, target)
    if bad is not None:
        raise HypothesisFailed("first factor map is not an algebra map", bad)
    bad = _is_algebra_map_into(Hh.mult, Hh.unit, imgH, target)
    if bad is not None:
        raise HypothesisFailed("second factor map is not an algebra map", bad)
    for h in range(Hh.dim):
        for a in range(sm.a_dim):
            lhs: dict = {}
            for j, k, c in Hh._ct[h]:
                moved: dict = {}
                for p in range(sm.a_dim):
                    x = sm.action[j][p][a]
                    if x:
                        _axpy(moved, x, imgA[p])
                _axpy(lhs, c, target.smul(moved, imgH[k]))
            if lhs != target.smul(imgH[h], imgA[a]):
                raise HypothesisFailed("commutation hypothesis fails",
                                       (source.basis_labels[sm.index(a, 0)], Hh.basis_labels[h]))
    images = []
    for a in range(sm.a_dim):
        for h in range(Hh.dim):
            images.append(dense(target.smul(imgA[a], imgH[h]), target.dim))
    f = morphism_from_images(source, target, images, name)
    f.verified = {"algebra_map": _check_algebra_map(f)}
    if not f.verified["algebra_map"]:
        raise HypothesisFailed("extension is not multiplicative")
    return f


def monomial_span_check(H: HopfAlgebra, generators: Sequence, exponent_bounds: Sequence[int]) -> bool:
    """True iff the ordered monomials g_1^{i_1}...g_n^{i_n}, i_k < bound_k, span H."""
    words = [sparse(H.unit)]
    for g, bound in zip(generators, exponent_bounds):
        powers = [sparse(H.unit)]
        for _ in range(bound - 1):
            powers.append(H.smul(powers[-1], sparse(g)))
        words = [H.smul(w, p) for w in words for p in powers]
    space = Subspace(H.dim, [dense(w, H.dim) for w in words])
    return space.dim == H.dim


# ------------------------------------------------------------ sub and quotient structures

def restrict_to_subspace(H: HopfAlgebra, P: Subspace, name: str = "") -> HopfAlgebra:
    """Hopf algebra structure on a Hopf subalgebra, in the echelon basis of P."""
    n, k = H.dim, P.dim
    basis = [sparse(b) for b in P.basis]
    coords = lambda v: P.coordinates(dense(v, n))
    labels = []
    for b in P.basis:
        nz = [j for j, x in enumerate(b) if x]
        labels.append(H.basis_labels[nz[0]] if len(nz) == 1 and b[nz[0]] == ONE
                      else H.format(b))
    mult = [[coords(H.smul(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    unit = coords(sparse(H.unit))
    comult = []
    for i in range(k):
        T = H.scomul(basis[i])
        # express the tensor in P (x) P: first coordinates of left legs, then right
        left_groups: dict = {}
        for (a, b), c in T.items():
            left_groups.setdefault(b, {})[a] = c
        stage: dict = {}
        for b, col in left_groups.items():
            for p, x in enumerate(coords(col)):
                if x:
                    stage.setdefault(p, {})[b] = x
        rows = [[ZERO] * k for _ in range(k)]
        for p, col in stage.items():
            for q, x in enumerate(coords(col)):
                rows[p][q] = x
        comult.append(rows)
    counit = [H.scounit(b) for b in basis]
    S = None
    if H.antipode is not None:
        S = transpose([coords(H.santipode(b)) for b in basis])
    return HopfAlgebra(labels, mult, unit, comult, counit, S, name)


def inclusion_morphism(H: HopfAlgebra, P: Subspace, sub: HopfAlgebra, name: str = "") -> HopfMorphism:
    return morphism_from_images(sub, H, [list(b) for b in P.basis], name)


def quotient_by_ideal(H: HopfAlgebra, I: Subspace, name: str = "") -> tuple:
    """Quotient structure on the complement of the echelon pivots of I, plus the projection."""
    n = H.dim
    free = [j for j in range(n) if j not in set(I.pivots)]
    pos = {j: t for t, j in enumerate(free)}
    k = len(free)

    def proj(v: SVec) -> list:
        r = I.reduce(dense(v, n))
        return [r[j] for j in free]

    mult = [[proj(H.smul({a: ONE}, {b: ONE})) for b in free] for a in free]
    unit = proj(sparse(H.unit))
    comult = []
    for a in free:
        T = H.scomul({a: ONE})
        left: dict = {}
        for (p, q), c in T.items():
            left.setdefault(q, {})[p] = c
        stage: dict = {}
        for q, col in left.items():
            for t, x in enumerate(proj(col)):
                if x:
                    stage.setdefault(t, {})[q] = x
        rows = [[ZERO] * k for _ in range(k)]
        for t, col in stage.items():
            rows[t] = proj(col)
        comult.append(rows)
    counit = [H.counit[a] for a in free]
    S = None
    if H.antipode is not None:
        S = transpose([proj(H.santipode({a: ONE})) for a in free])
    Q = HopfAlgebra([H.basis_labels[a] for a in free], mult, unit, comult, counit, S, name)
    images = [proj({j: ONE}) for j in range(n)]
    return Q, morphism_from_images(H, Q, images, f"{H.name}->{name}")


def is_hopf_ideal(H: HopfAlgebra, I: Subspace) -> bool:
    """Two-sided ideal, coideal, annihilated by the counit and stable under the antipode."""
    n = H.dim
    basis = [sparse(b) for b in I.basis]
    for b in basis:
        if H.scounit(b):
            return False
        for j in range(n):
            if not I.contains(dense(H.smul(b, {j: ONE}), n)):
                return False
            if not I.contains(dense(H.smul({j: ONE}, b), n)):
                return False
        if H.antipode is not None and not I.contains(dense(H.santipode(b), n)):
            return False
        # Delta(b) in I (x) H + H (x) I: project both legs to the quotient and test zero
        T = H.scomul(b)
        free = [j for j in range(n) if j not in set(I.pivots)]
        left: dict = {}
        for (p, q), c in T.items():
            left.setdefault(q, {})[p] = c
        stage: dict = {}
        for q, col in left.items():
            r = I.reduce(dense(col, n))
            for t in free:
                if r[t]:
                    stage.setdefault(t, {})[q] = r[t]
        for t, col in stage.items():
            r = I.reduce(dense(col, n))
            if any(r):
                return False
    return True


def grouplike_check(H: HopfAlgebra, v: Sequence) -> bool:
    s = sparse(v)
    return H.scounit(s) == ONE and H.scomul(s) == {
        (a, b): x * y for a, x in s.items() for b, y in s.items()}


@dataclass(frozen=True)
class GroupLikeElement:
    vector: tuple
    label: str = ""
