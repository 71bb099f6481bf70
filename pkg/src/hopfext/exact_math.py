"""Exact arithmetic over the Gaussian rationals Q(i).

Scalars, univariate polynomials with root finding over Q(i), dense matrix
routines built on fraction-free elimination, row-echelon subspaces and
joint eigenspace splitting of commuting operators.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence


_JSON = re.compile(r"^\s*([+-]?\d+)/(\d+)\s*\+\s*([+-]?\d+)/(\d+)\*i\s*$")
_JSON_MINUS = re.compile(r"^\s*([+-]?\d+)/(\d+)\s*-\s*(\d+)/(\d+)\*i\s*$")


class DivisionByZero(ZeroDivisionError):
    pass


class Inconsistent(ValueError):
    """Linear system has no solution."""


class NonSplit(ValueError):
    """A characteristic polynomial does not split over Q(i)."""


class GaussianRational:
    """The number (a + b*i)/d with integers a, b and d > 0 in lowest terms."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("cannot combine a complex real part with an imaginary part")
            self._a, self._b, self._d = re._a, re._b, re._d
            return
        if isinstance(re, str):
            z = GaussianRational.parse(re)
            self._a, self._b, self._d = z._a, z._b, z._d
            return
        fr, fi = Fraction(re), Fraction(im)
        d = fr.denominator * fi.denominator // gcd(fr.denominator, fi.denominator)
        a = fr.numerator * (d // fr.denominator)
        b = fi.numerator * (d // fi.denominator)
        g = gcd(a, b, d)
        self._a, self._b, self._d = a // g, b // g, d // g

    @staticmethod
    def _raw(a: int, b: int, d: int) -> "GaussianRational":
        z = object.__new__(GaussianRational)
        z._a, z._b, z._d = a, b, d
        return z

    @staticmethod
    def _make(a: int, b: int, d: int) -> "GaussianRational":
        if d != 1:
            g = gcd(a, b, d)
            if g != 1:
                a, b, d = a // g, b // g, d // g
        z = object.__new__(GaussianRational)
        z._a, z._b, z._d = a, b, d
        return z

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def denominator(self) -> int:
        return self._d

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __add__(self, o):
        if not isinstance(o, GaussianRational):
            o = _coerce(o)
            if o is None:
                return NotImplemented
        if self._d == o._d:
            return GaussianRational._make(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._make(self._a * o._d + o._a * self._d,
                                      self._b * o._d + o._b * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, o):
        if not isinstance(o, GaussianRational):
            o = _coerce(o)
            if o is None:
                return NotImplemented
        if self._d == o._d:
            return GaussianRational._make(self._a - o._a, self._b - o._b, self._d)
        return GaussianRational._make(self._a * o._d - o._a * self._d,
                                      self._b * o._d - o._b * self._d, self._d * o._d)

    def __rsub__(self, o):
        o = _coerce(o)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, o):
        if not isinstance(o, GaussianRational):
            o = _coerce(o)
            if o is None:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        if b1 == 0 and b2 == 0:
            return GaussianRational._make(a1 * a2, 0, self._d * o._d)
        return GaussianRational._make(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def inv(self) -> "GaussianRational":
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise DivisionByZero("inverse of zero")
        a, b = self._d * self._a, -self._d * self._b
        if n < 0:
            a, b, n = -a, -b, -n
        return GaussianRational._make(a, b, n)

    def __truediv__(self, o):
        if not isinstance(o, GaussianRational):
            o = _coerce(o)
            if o is None:
                return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, o):
        o = _coerce(o)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __eq__(self, o):
        if isinstance(o, GaussianRational):
            return self._a == o._a and self._b == o._b and self._d == o._d
        if isinstance(o, int):
            return self._b == 0 and self._d == 1 and self._a == o
        if isinstance(o, Fraction):
            return self._b == 0 and self._a == o.numerator and self._d == o.denominator
        if isinstance(o, complex):
            return self == _coerce(o)
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(self._a) if self._d == 1 else hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def sort_key(self):
        return (self.re, self.im)

    def to_json(self) -> str:
        r, i = self.re, self.im
        return f"{r.numerator}/{r.denominator}+{i.numerator}/{i.denominator}*i"

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Parse "a/b+c/d*i"; "a/b-c/d*i" and the tokens 1, i, -1, -i, 1/2 are also accepted."""
        m = _JSON.match(text)
        sign = 1
        if m is None:
            m = _JSON_MINUS.match(text)
            sign = -1
        if m is not None:
            p, q, s, t = (int(g) for g in m.groups())
            if q == 0 or t == 0:
                raise DivisionByZero(text)
            return GaussianRational(Fraction(p, q), sign * Fraction(s, t))
        token = text.strip().replace(" ", "")
        simple = {"i": I, "+i": I, "-i": -I}
        if token in simple:
            return simple[token]
        try:
            return GaussianRational(Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a Gaussian rational: {text!r}") from None

    def __str__(self):
        r, i = self.re, self.im
        if i == 0:
            return str(r)
        ipart = {1: "i", -1: "-i"}.get(i, f"{i}*i")
        if r == 0:
            return ipart
        return f"{r}{'' if ipart.startswith('-') else '+'}{ipart}"

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"

    def __reduce__(self):
        return (GaussianRational._raw, (self._a, self._b, self._d))


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            return None
        return GaussianRational._raw(int(x.real), int(x.imag), 1)
    return None


def gq(x) -> GaussianRational:
    """Coerce an int, Fraction, GaussianRational or string to a GaussianRational."""
    if isinstance(x, str):
        return GaussianRational.parse(x)
    z = _coerce(x)
    if z is None:
        raise TypeError(f"cannot convert {x!r} to a Gaussian rational")
    return z


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)
HALF = GaussianRational._raw(1, 0, 2)


# ---------------------------------------------------------------- polynomials

class Polynomial:
    """Univariate polynomial with Gaussian rational coefficients, lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        cs = [gq(c) for c in coefficients]
        while cs and not cs[-1]:
            cs.pop()
        self.coefficients = tuple(cs)

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial([ZERO, ONE])

    @staticmethod
    def from_roots(roots: Iterable) -> "Polynomial":
        p = Polynomial([ONE])
        for r in roots:
            p = p * Polynomial([-gq(r), ONE])
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def lead(self) -> GaussianRational:
        return self.coefficients[-1] if self.coefficients else ZERO

    def __eq__(self, o):
        if not isinstance(o, Polynomial):
            return NotImplemented
        return self.coefficients == o.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, o):
        a, b = self.coefficients, _as_poly(o).coefficients
        n = max(len(a), len(b))
        return Polynomial([(a[k] if k < len(a) else ZERO) + (b[k] if k < len(b) else ZERO)
                           for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coefficients])

    def __sub__(self, o):
        return self + (-_as_poly(o))

    def __rsub__(self, o):
        return _as_poly(o) - self

    def __mul__(self, o):
        a, b = self.coefficients, _as_poly(o).coefficients
        if not a or not b:
            return Polynomial()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Polynomial([ONE])
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, o):
        o = _as_poly(o)
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coefficients)
        lead_inv = o.lead().inv()
        dq = len(rem) - len(o.coefficients)
        if dq < 0:
            return Polynomial(), Polynomial(rem)
        quot = [ZERO] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + o.degree] * lead_inv
            quot[k] = c
            if c:
                for j, y in enumerate(o.coefficients):
                    rem[k + j] = rem[k + j] - c * y
        return Polynomial(quot), Polynomial(rem[:o.degree])

    def __floordiv__(self, o):
        return divmod(self, o)[0]

    def __mod__(self, o):
        return divmod(self, o)[1]

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial([c * k for k, c in enumerate(self.coefficients)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        li = self.lead().inv()
        return Polynomial([c * li for c in self.coefficients])

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coefficients)}])"


def _as_poly(o) -> Polynomial:
    return o if isinstance(o, Polynomial) else Polynomial([o])


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


# ------------------------------------------- Gaussian integers and root finding

def _gi_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gi_div_exact(x, y):
    """x / y in Z[i] if y divides x, else None."""
    n = y[0] * y[0] + y[1] * y[1]
    a = x[0] * y[0] + x[1] * y[1]
    b = x[1] * y[0] - x[0] * y[1]
    if a % n or b % n:
        return None
    return (a // n, b // n)


def _gi_normalize(x):
    """Associate of x with positive real part and nonnegative imaginary part."""
    a, b = x
    for _ in range(4):
        if a > 0 and b >= 0:
            return (a, b)
        a, b = -b, a
    return (a, b)


_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _rational_prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _gaussian_primes_over(p: int) -> list[tuple[int, int]]:
    if p == 2:
        return [(1, 1)]
    if p % 4 == 3:
        return [(p, 0)]
    for a in range(1, isqrt(p) + 1):
        b2 = p - a * a
        b = isqrt(b2)
        if b * b == b2:
            return [(a, b), (b, a)]
    raise AssertionError("prime 1 mod 4 is a sum of two squares")


def gaussian_integer_divisors(z: tuple[int, int]) -> list[tuple[int, int]]:
    """Divisors of a nonzero Gaussian integer, one per associate class."""
    norm = z[0] * z[0] + z[1] * z[1]
    if norm == 0:
        raise DivisionByZero("divisors of zero")
    factors = []
    for p in _rational_prime_factors(norm):
        for pi in _gaussian_primes_over(p):
            e, w = 0, z
            while True:
                q = _gi_div_exact(w, pi)
                if q is None:
                    break
                w, e = q, e + 1
            if e:
                factors.append((pi, e))
    divisors = [(1, 0)]
    for pi, e in factors:
        nxt = []
        for d in divisors:
            power = (1, 0)
            for _ in range(e + 1):
                nxt.append(_gi_mul(d, power))
                power = _gi_mul(power, pi)
        divisors = nxt
    return sorted({_gi_normalize(d) for d in divisors})


def _to_gaussian_integers(p: Polynomial) -> list[tuple[int, int]]:
    d = 1
    for c in p.coefficients:
        d = d * c._d // gcd(d, c._d)
    return [(c._a * (d // c._d), c._b * (d // c._d)) for c in p.coefficients]


def gaussian_roots(p: Polynomial) -> list[GaussianRational]:
    """Roots of p in Q(i), repeated according to multiplicity, in a deterministic order."""
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    if p.degree == 0:
        return []
    g = poly_gcd(p, p.derivative())
    sq = p // g
    distinct = []
    if not sq.coefficients[0]:
        distinct.append(ZERO)
        sq = sq // Polynomial.x()
    if sq.degree >= 1:
        ints = _to_gaussian_integers(sq)
        nums = gaussian_integer_divisors(ints[0])
        dens = gaussian_integer_divisors(ints[-1])
        seen = set()
        for a in nums:
            for u in _UNITS:
                num = _gi_mul(a, u)
                for den in dens:
                    r = GaussianRational(num[0], num[1]) / GaussianRational(den[0], den[1])
                    if r in seen:
                        continue
                    seen.add(r)
                    if not sq(r):
                        distinct.append(r)
    roots = []
    for r in distinct:
        lin = Polynomial([-r, ONE])
        q = p
        while True:
            quo, rem = divmod(q, lin)
            if not rem.is_zero():
                break
            roots.append(r)
            q = quo
    return sorted(roots, key=GaussianRational.sort_key)


# ---------------------------------------------------------------- matrices

Matrix = list  # list of rows of GaussianRational
Vector = list


def zeros(m: int, n: int) -> Matrix:
    return [[ZERO] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for k in range(n):
        out[k][k] = ONE
    return out


def as_matrix(rows) -> Matrix:
    return [[gq(x) for x in row] for row in rows]


def transpose(M: Matrix) -> Matrix:
    return [list(col) for col in zip(*M)] if M else []


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [ZERO] * n
        for k, a in enumerate(row):
            if not a:
                continue
            for j, b in enumerate(B[k]):
                if b:
                    acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def matvec(A: Matrix, v: Sequence) -> Vector:
    out = []
    for row in A:
        acc = ZERO
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A: Matrix) -> Matrix:
    c = gq(c)
    return [[c * a for a in row] for row in A]


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def vec_add(u: Sequence, v: Sequence) -> Vector:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u: Sequence, v: Sequence) -> Vector:
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v: Sequence) -> Vector:
    c = gq(c)
    return [c * a for a in v]


def _bareiss_echelon(rows: list[list[GaussianRational]]):
    """Fraction-free forward elimination over Z[i].

    Each row is first scaled to Gaussian integers.  Pivots are chosen as the
    first nonzero entry in column order.  Returns the echelon rows (as lists of
    Gaussian integer pairs) and the pivot columns.
    """
    work = []
    for row in rows:
        d = 1
        for c in row:
            if c._d != 1:
                d = d * c._d // gcd(d, c._d)
        r = [(c._a * (d // c._d), c._b * (d // c._d)) for c in row]
        if any(x != (0, 0) for x in r):
            work.append(r)
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    prev = (1, 0)
    rank = 0
    for col in range(ncols):
        piv = next((k for k in range(rank, len(work)) if work[k][col] != (0, 0)), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        p = prow[col]
        for k in range(rank + 1, len(work)):
            row = work[k]
            a = row[col]
            for j in range(col + 1, ncols):
                x = _gi_mul(p, row[j])
                if a != (0, 0) and prow[j] != (0, 0):
                    y = _gi_mul(a, prow[j])
                    x = (x[0] - y[0], x[1] - y[1])
                if x != (0, 0) and prev != (1, 0):
                    x = _gi_div_exact(x, prev)
                    assert x is not None, "Bareiss division must be exact"
                row[j] = x
            row[col] = (0, 0)
        pivots.append(col)
        prev = p
        rank += 1
        # drop rows that became zero to keep the working set small
        tail = [r for r in work[rank:] if any(x != (0, 0) for x in r)]
        work[rank:] = tail
    return work[:rank], pivots


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form of the row space of M (zero rows dropped)."""
    rows, pivots = _bareiss_echelon([list(r) for r in M])
    out = []
    for r, col in zip(rows, pivots):
        inv = GaussianRational(*r[col]).inv()
        out.append([GaussianRational._raw(x[0], x[1], 1) * inv if x != (0, 0) else ZERO
                    for x in r])
    # back substitution: clear entries above each pivot
    for k in range(len(out) - 1, -1, -1):
        col = pivots[k]
        pk = out[k]
        nz = [j for j in range(col, len(pk)) if pk[j]]
        for m in range(k):
            c = out[m][col]
            if c:
                row = out[m]
                for j in nz:
                    row[j] = row[j] - c * pk[j]
    return out, pivots


def rank(M: Matrix) -> int:
    return len(_bareiss_echelon([list(r) for r in M])[1])


def _kernel_basis(M: Matrix, ncols: int) -> Matrix:
    R, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(R, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def kernel(M: Matrix, ncols: int | None = None) -> "Subspace":
    """Null space {v : M v = 0} as a Subspace.

    Tall matrices are processed in blocks of ncols rows, intersecting the
    running kernel with the kernel of each block restricted to it.
    """
    if ncols is None:
        if not M:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(M[0])
    if len(M) <= 2 * ncols:
        return Subspace(ncols, _kernel_basis(M, ncols))
    basis = identity(ncols)
    for start in range(0, len(M), ncols):
        block = M[start:start + ncols]
        if not basis:
            break
        # columns of restricted matrix: block applied to each current basis vector
        images = [matvec(block, b) for b in basis]
        if not any(any(col) for col in images):
            continue
        restricted = transpose(images)
        coeffs = _kernel_basis(restricted, len(basis))
        basis = [_combine(c, basis, ncols) for c in coeffs]
    return Subspace(ncols, basis)


def _combine(coeffs: Sequence, vectors: Sequence, n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] = out[j] + c * x
    return out


def solve(M: Matrix, b: Sequence) -> Vector:
    """One solution of M x = b (free variables set to zero)."""
    if not M:
        raise ValueError("empty system")
    ncols = len(M[0])
    aug = [list(row) + [gq(y)] for row, y in zip(M, b)]
    R, pivots = rref(aug)
    if pivots and pivots[-1] == ncols:
        raise Inconsistent("system has no solution")
    x = [ZERO] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return x


def inverse(M: Matrix) -> Matrix:
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("inverse of a non-square matrix")
    aug = [list(row) + e for row, e in zip(M, identity(n))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise DivisionByZero("matrix is singular")
    return [row[n:] for row in R[:n]]


def is_invertible(M: Matrix) -> bool:
    return bool(M) and len(M) == len(M[0]) and rank(M) == len(M)


def charpoly(M: Matrix) -> Polynomial:
    """Characteristic polynomial det(x*I - M) by Hessenberg reduction."""
    n = len(M)
    H = [list(r) for r in M]
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1]), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for row in H:
                row[i], row[m] = row[m], row[i]
        t = H[m][m - 1]
        tinv = t.inv()
        for i in range(m + 1, n):
            if H[i][m - 1]:
                u = H[i][m - 1] * tinv
                ri, rm = H[i], H[m]
                for j in range(n):
                    if rm[j]:
                        ri[j] = ri[j] - u * rm[j]
                for row in H:
                    if row[i]:
                        row[m] = row[m] + u * row[i]
    X = Polynomial.x()
    polys = [Polynomial([ONE])]
    for m in range(1, n + 1):
        p = (X - H[m - 1][m - 1]) * polys[m - 1]
        t = ONE
        for i in range(1, m):
            t = t * H[m - i][m - i - 1]
            if not t:
                break
            c = t * H[m - i - 1][m - 1]
            if c:
                p = p - polys[m - i - 1] * c
        polys.append(p)
    return polys[n]


# ---------------------------------------------------------------- subspaces

class Subspace:
    """A subspace of K^n stored as the reduced row-echelon basis of its vectors."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable = ()):
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if vecs:
            R, piv = rref(vecs)
        else:
            R, piv = [], []
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in R)
        self.pivots = tuple(piv)

    @staticmethod
    def full(n: int) -> "Subspace":
        return Subspace(n, identity(n))

    @staticmethod
    def zero(n: int) -> "Subspace":
        return Subspace(n)

    @staticmethod
    def spanned_by_indices(n: int, indices: Iterable[int]) -> "Subspace":
        vecs = []
        for k in sorted(set(indices)):
            v = [ZERO] * n
            v[k] = ONE
            vecs.append(v)
        return Subspace(n, vecs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of v after subtracting its projection along the echelon basis."""
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        w[j] = w[j] - c * row[j]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of v on the echelon basis; raises if v is not in the subspace."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return [v[p] for p in self.pivots]

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_space(self)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        # solve sum a_i s_i = sum b_j o_j
        k = len(self.basis)
        cols = list(self.basis) + [[-x for x in b] for b in other.basis]
        K = kernel(transpose(cols), len(cols))
        return Subspace(self.ambient_dim,
                        [_combine(c[:k], self.basis, self.ambient_dim) for c in K.basis])

    def sort_key(self):
        return (self.dim, tuple(tuple(x.sort_key() for x in row) for row in self.basis))

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim,
                "basis": [[x.to_json() for x in row] for row in self.basis]}

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def restrict_operator(op: Matrix, space: Subspace) -> Matrix:
    """Matrix of op on an invariant subspace, in the coordinates of its echelon basis."""
    images = []
    for b in space.basis:
        w = matvec(op, b)
        images.append(space.coordinates(w))
    return transpose(images) if images else []


def joint_eigensplit_with_values(ops: Sequence[Matrix], space: Subspace):
    """Split space into joint generalized eigenspaces of commuting operators.

    Returns a list of (eigenvalue tuple, Subspace) pairs; the subspaces form a
    direct sum decomposition of space.
    """
    n = space.ambient_dim
    pieces = [((), space)]
    for op in ops:
        refined = []
        for values, piece in pieces:
            if piece.dim == 0:
                continue
            R = restrict_operator(op, piece)
            p = charpoly(R)
            roots = gaussian_roots(p)
            if len(roots) != piece.dim:
                raise NonSplit("characteristic polynomial does not split over Q(i)")
            mult = {}
            for r in roots:
                mult[r] = mult.get(r, 0) + 1
            for lam in sorted(mult, key=GaussianRational.sort_key):
                shifted = [[x - lam if i == j else x for j, x in enumerate(row)]
                           for i, row in enumerate(R)]
                power = shifted
                for _ in range(mult[lam] - 1):
                    power = matmul(power, shifted)
                K = kernel(power, piece.dim)
                vecs = [_combine(c, piece.basis, n) for c in K.basis]
                refined.append((values + (lam,), Subspace(n, vecs)))
        pieces = refined
    return pieces


def joint_eigensplit(ops: Sequence[Matrix], space: Subspace) -> list[Subspace]:
    return [s for _, s in joint_eigensplit_with_values(ops, space)]
