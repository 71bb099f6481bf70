"""Finite groups as Cayley tables, their group algebras, characters and bicharacters."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import ceil, log2
from typing import Sequence

from .exact_math import ONE, ZERO, I, GaussianRational, gq
from .hopf_core import HopfAlgebra, attach_antipode


class GroupError(ValueError):
    pass


class NotAbelian(GroupError):
    pass


class UnsupportedOrder(GroupError):
    pass


class InvalidBicharacter(GroupError):
    pass


class FiniteGroup:
    def __init__(self, cayley: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                 name: str = ""):
        n = len(cayley)
        self.order = n
        self.cayley = tuple(tuple(r) for r in cayley)
        self.labels = tuple(labels) if labels is not None else tuple(f"g{k + 1}" for k in range(n))
        self.name = name
        ids = [e for e in range(n) if all(self.cayley[e][g] == g == self.cayley[g][e]
                                           for g in range(n))]
        if len(ids) != 1:
            raise GroupError("table has no unique identity")
        self.identity = ids[0]
        inverse = []
        for g in range(n):
            inv = [h for h in range(n) if self.cayley[g][h] == self.identity]
            if len(inv) != 1 or self.cayley[inv[0]][g] != self.identity:
                raise GroupError(f"element {g} has no two-sided inverse")
            inverse.append(inv[0])
        self.inverse = tuple(inverse)
        for a in range(n):
            for b in range(n):
                ab = self.cayley[a][b]
                for c in range(n):
                    if self.cayley[ab][c] != self.cayley[a][self.cayley[b][c]]:
                        raise GroupError("table is not associative")

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = self.cayley[out][a]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.cayley[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.cayley[a][b] == self.cayley[b][a] for a in range(n) for b in range(a + 1, n))

    def exponent(self) -> int:
        from math import lcm
        out = 1
        for g in range(self.order):
            out = lcm(out, self.element_order(g))
        return out

    def generated(self, gens: Sequence[int]) -> tuple:
        elems = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.cayley[x][g]
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(elems))

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def to_json(self) -> dict:
        return {"order": self.order, "cayley": [list(r) for r in self.cayley],
                "labels": list(self.labels)}

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    element_indices: tuple

    @property
    def order(self) -> int:
        return len(self.element_indices)


# ---------------------------------------------------------------- constructors

def abelian_group(invariants: Sequence[int], labels: Sequence[str] | None = None) -> FiniteGroup:
    """Product of cyclic groups; element (a_0, a_1, ...) sits at a_0 + n_0*a_1 + n_0*n_1*a_2 + ..."""
    invariants = list(invariants)
    n = 1
    for m in invariants:
        n *= m

    def digits(x):
        out = []
        for m in invariants:
            out.append(x % m)
            x //= m
        return out

    def index(ds):
        x, scale = 0, 1
        for d, m in zip(ds, invariants):
            x += (d % m) * scale
            scale *= m
        return x

    table = [[index([a + b for a, b in zip(digits(x), digits(y))]) for y in range(n)]
             for x in range(n)]
    if labels is None:
        labels = ["(" + ",".join(map(str, digits(x))) + ")" for x in range(n)]
    name = "x".join(f"Z{m}" for m in invariants) or "1"
    return FiniteGroup(table, labels, name)


def dihedral_group(order: int) -> FiniteGroup:
    """Symmetries of a (order/2)-gon; r^k s^e sits at k + (order/2)*e."""
    if order % 2 or order < 4:
        raise GroupError("dihedral order must be even and at least 4")
    m = order // 2

    def mul(x, y):
        k1, e1 = x % m, x // m
        k2, e2 = y % m, y // m
        k = (k1 + (-k2 if e1 else k2)) % m
        return k + m * ((e1 + e2) % 2)

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    labels = [("1" if k == 0 else f"r^{k}") if e == 0 else ("s" if k == 0 else f"r^{k}s")
              for e in range(2) for k in range(m)]
    return FiniteGroup(table, labels, f"D{order}")


def quaternion_group() -> FiniteGroup:
    names = ["1", "i", "j", "k"]
    # unit quaternion products of the imaginary units
    base = {("1", x): (1, x) for x in names}
    base.update({(x, "1"): (1, x) for x in names})
    base.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, x) for s in (1, -1) for x in names]
    idx = {e: t for t, e in enumerate(elems)}
    table = []
    for s1, x in elems:
        row = []
        for s2, y in elems:
            s, z = base[(x, y)]
            row.append(idx[(s * s1 * s2, z)])
        table.append(row)
    labels = [("" if s == 1 else "-") + x for s, x in elems]
    return FiniteGroup(table, labels, "Q8")


def build_group(spec, labels: Sequence[str] | None = None) -> FiniteGroup:
    """Group from a spec: a list of cyclic orders, "dihedral<n>"/"D<n>", "Q8" or "trivial"."""
    if isinstance(spec, (list, tuple)):
        return abelian_group(spec, labels)
    if isinstance(spec, int):
        return abelian_group([spec], labels)
    s = str(spec).strip().lower()
    if s in ("trivial", "1"):
        return FiniteGroup([[0]], labels or ["1"], "1")
    if s in ("q8", "quaternion8", "quaternion"):
        return quaternion_group()
    for prefix in ("dihedral", "d"):
        if s.startswith(prefix) and s[len(prefix):].isdigit():
            return dihedral_group(int(s[len(prefix):]))
    raise GroupError(f"unknown group spec {spec!r}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    n, m = G.order, H.order
    table = [[G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(n * m)]
             for a in range(n * m)]
    labels = [f"{G.labels[a // m]}{H.labels[a % m]}" for a in range(n * m)]
    return FiniteGroup(table, labels, f"{G.name}x{H.name}")


# ---------------------------------------------------------------- group algebras

def group_algebra(G: FiniteGroup, labels: Sequence[str] | None = None) -> HopfAlgebra:
    n = G.order
    mult = [[[ONE if k == G.mul(a, b) else ZERO for k in range(n)] for b in range(n)]
            for a in range(n)]
    comult = [[[ONE if a == b == c else ZERO for c in range(n)] for b in range(n)]
              for a in range(n)]
    unit = [ONE if k == G.identity else ZERO for k in range(n)]
    counit = [ONE] * n
    H = HopfAlgebra(labels or G.labels, mult, unit, comult, counit, name=f"K[{G.name}]")
    return attach_antipode(H)


def dual_group_algebra(G: FiniteGroup) -> HopfAlgebra:
    n = G.order
    mult = [[[ONE if a == b == c else ZERO for c in range(n)] for b in range(n)]
            for a in range(n)]
    comult = [[[ONE if G.mul(b, c) == a else ZERO for c in range(n)] for b in range(n)]
              for a in range(n)]
    unit = [ONE] * n
    counit = [ONE if k == G.identity else ZERO for k in range(n)]
    H = HopfAlgebra([f"e_{l}" for l in G.labels], mult, unit, comult, counit,
                    name=f"K^{G.name}")
    return attach_antipode(H)


# ---------------------------------------------------------------- subgroups

def subgroups_of_order(G: FiniteGroup, k: int) -> list:
    if G.order % k:
        raise GroupError(f"{k} does not divide {G.order}")
    ngens = max(1, ceil(log2(k))) if k > 1 else 0
    found = set()
    if k == 1:
        found.add((G.identity,))
    for r in range(1, ngens + 1):
        for gens in combinations(range(G.order), r):
            H = G.generated(gens)
            if len(H) == k:
                found.add(H)
    return [Subgroup(G, h) for h in sorted(found)]


# ---------------------------------------------------------------- characters

MU4 = (ONE, I, -ONE, -I)


def _minimal_generators(G: FiniteGroup) -> list:
    gens: list = []
    span = G.generated(gens)
    for g in range(G.order):
        if g not in span:
            gens.append(g)
            span = G.generated(gens)
    return gens


def character_group(G: FiniteGroup) -> tuple:
    """All homomorphisms G -> mu_4, as a group under pointwise product, with the pairing matrix.

    Returns (character group, pairing) where pairing[c][g] is the value of
    character c on element g.
    """
    if not G.is_abelian():
        raise NotAbelian("character group requires an abelian group")
    if 4 % G.exponent():
        raise GroupError("group exponent must divide 4 for characters valued in Q(i)")
    gens = _minimal_generators(G)
    chars = []
    for vals in product(range(4), repeat=len(gens)):
        # log_i of the value on each element, built by breadth-first extension
        logs = {G.identity: 0}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, v in zip(gens, vals):
                    y = G.mul(x, g)
                    val = (logs[x] + v) % 4
                    if y in logs:
                        if logs[y] != val:
                            ok = False
                            break
                    else:
                        logs[y] = val
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok:
            chars.append(tuple(logs[g] for g in range(G.order)))
    chars = sorted(set(chars))
    index = {c: t for t, c in enumerate(chars)}
    table = [[index[tuple((a + b) % 4 for a, b in zip(c1, c2))] for c2 in chars] for c1 in chars]
    dual = FiniteGroup(table, [f"chi{t + 1}" for t in range(len(chars))], f"dual({G.name})")
    pairing = [[MU4[x] for x in c] for c in chars]
    return dual, pairing


# ---------------------------------------------------------------- recognition

def recognize_group(G: FiniteGroup) -> str:
    n = G.order
    if n not in (1, 2, 4, 8):
        raise UnsupportedOrder(f"order {n} outside the recognition catalog")
    orders = sorted(G.element_order(g) for g in range(n))
    if n == 1:
        return "1"
    if n == 2:
        return "Z2"
    if G.is_abelian():
        top = max(orders)
        return {(4, 4): "Z4", (4, 2): "Z2xZ2", (8, 8): "Z8", (8, 4): "Z4xZ2",
                (8, 2): "Z2xZ2xZ2"}[(n, top)]
    if n == 8:
        fours = orders.count(4)
        if fours == 2:
            return "D8"
        if fours == 6:
            return "Q8"
    raise UnsupportedOrder("unrecognized group of order 8")


def group_from_elements(elements: Sequence[tuple], mul, labels: Sequence[str] | None = None,
                        name: str = "") -> FiniteGroup:
    """Cayley table of a finite set of hashable elements closed under mul."""
    index = {e: t for t, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, labels or [str(t) for t in range(len(elements))], name)


# ---------------------------------------------------------------- bicharacters

@dataclass
class Bicharacter:
    group: FiniteGroup
    values: list  # values[g][h] = theta(g, h)
    symmetric: bool
    nondegenerate: bool

    def __call__(self, g: int, h: int) -> GaussianRational:
        return self.values[g][h]

    def character(self, g: int) -> list:
        return list(self.values[g])


def _bicharacter_checks(G: FiniteGroup, vals) -> tuple:
    n = G.order
    for g in range(n):
        for h in range(n):
            for k in range(n):
                if vals[G.mul(g, h)][k] != vals[g][k] * vals[h][k]:
                    return False, False, False
                if vals[g][G.mul(h, k)] != vals[g][h] * vals[g][k]:
                    return False, False, False
    sym = all(vals[g][h] == vals[h][g] for g in range(n) for h in range(n))
    rows = {tuple(vals[g]) for g in range(n)}
    return True, sym, len(rows) == n


def make_bicharacter(G: FiniteGroup, values) -> Bicharacter:
    vals = [[gq(x) for x in row] for row in values]
    ok, sym, nondeg = _bicharacter_checks(G, vals)
    if not ok:
        raise InvalidBicharacter("values are not multiplicative in each slot")
    return Bicharacter(G, vals, sym, nondeg)


def bicharacter_from_fundamental(G: FiniteGroup, m22, m23, m32, m33) -> Bicharacter:
    """Symmetric bicharacter on Z2 x Z2 from its values on the generator pairs (g2, g3).

    Elements are indexed a + 2b for g2^a g3^b, as produced by abelian_group([2, 2]).
    """
    if G.order != 4 or not G.is_abelian() or G.exponent() != 2:
        raise InvalidBicharacter("fundamental matrix construction needs Z2 x Z2")
    m = [[gq(m22), gq(m23)], [gq(m32), gq(m33)]]
    if any(x * x != ONE for row in m for x in row):
        raise InvalidBicharacter("generator values must square to 1")
    if m[0][1] != m[1][0]:
        raise InvalidBicharacter("fundamental matrix is not symmetric")
    vals = []
    for g in range(4):
        a, b = g % 2, g // 2
        row = []
        for h in range(4):
            c, d = h % 2, h // 2
            v = ONE
            for x, e in ((m[0][0], a * c), (m[0][1], a * d), (m[1][0], b * c), (m[1][1], b * d)):
                if e:
                    v = v * x
            row.append(v)
        vals.append(row)
    return make_bicharacter(G, vals)
