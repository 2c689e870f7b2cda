"""Integer Gram lattices: discriminant groups, roots, glue and overlattices.

Conventions
-----------
A lattice is held as its Gram matrix in a fixed basis.  Curve configuration
lattices are negative definite with -2 on the diagonal and 0/1 off-diagonal
intersection numbers.  Vectors are coordinate tuples in the lattice basis;
dual vectors therefore have rational coordinates.  All arithmetic uses
`fractions.Fraction` and Python ints - never floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil, floor, isqrt

from .snf import det_int, hermite_row_basis, smith_normal_form

RationalVector = tuple[Fraction, ...]


class DegenerateLattice(ValueError):
    """The Gram matrix is singular where a nondegenerate lattice is required."""


class NotInDual(ValueError):
    """A vector pairs non-integrally with some basis vector."""


class NotNegativeDefinite(ValueError):
    """Root enumeration needs a negative definite Gram matrix."""


class NonIntegralGlue(ValueError):
    """A glue vector (or a pair of them) has a non-integral pairing."""


class OddGlue(ValueError):
    """A glue vector has odd self-pairing and cannot glue an even lattice."""


class NotASublattice(ValueError):
    """Root comparison was asked for lattices that are not nested."""


def vec(coords) -> RationalVector:
    return tuple(Fraction(c) for c in coords)


def gram_pair(gram, x, y) -> Fraction:
    """Bilinear pairing x . y with respect to the Gram matrix."""
    total = Fraction(0)
    for i, xi in enumerate(x):
        if xi:
            row = gram[i]
            total += xi * sum(yj * row[j] for j, yj in enumerate(y) if yj)
    return total


def frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class GramLattice:
    """Symmetric integer Gram matrix with labelled basis vectors."""

    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...] = ()

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        for row in g:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if not self.basis_labels:
            object.__setattr__(
                self, "basis_labels", tuple(f"e{i+1}" for i in range(n))
            )
        elif len(self.basis_labels) != n:
            raise ValueError("label count does not match rank")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return det_int([list(r) for r in self.gram])

    def pair(self, x, y) -> Fraction:
        return gram_pair(self.gram, vec(x), vec(y))

    def in_dual(self, x) -> bool:
        x = vec(x)
        return all(
            gram_pair(self.gram, x, unit_vector(self.rank, i)).denominator == 1
            for i in range(self.rank)
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "rank": self.rank,
                "gram": [list(r) for r in self.gram],
                "labels": list(self.basis_labels),
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "GramLattice":
        data = json.loads(text)
        return cls(
            gram=tuple(tuple(row) for row in data["gram"]),
            basis_labels=tuple(data.get("labels") or ()),
        )


def unit_vector(n: int, i: int) -> RationalVector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def direct_sum(blocks: list[list[list[int]]]) -> list[list[int]]:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    ofs = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[ofs + i][ofs + j] = b[i][j]
        ofs += k
    return out


@dataclass(frozen=True)
class DiscriminantGroup:
    """Invariant factors and dual-vector generators of L^vee / L.

    `generators[i]` has exact order `invariant_factors[i]`; `q_values[i]` is
    the discriminant quadratic form x.x reduced into [0, 2) modulo 2Z.
    """

    invariant_factors: tuple[int, ...]
    generators: tuple[RationalVector, ...]
    q_values: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def length(self) -> int:
        return len(self.invariant_factors)

    def primary_length(self, p: int) -> int:
        return sum(1 for d in self.invariant_factors if d % p == 0)

    def symbol(self) -> str:
        """Human-readable product form, e.g. 'Z2 x (Z4)^6'."""
        if not self.invariant_factors:
            return "trivial"
        counts: dict[int, int] = {}
        for d in self.invariant_factors:
            counts[d] = counts.get(d, 0) + 1
        parts = []
        for d in sorted(counts):
            k = counts[d]
            parts.append(f"Z{d}" if k == 1 else f"(Z{d})^{k}")
        return " x ".join(parts)


def q_value(L: GramLattice, x) -> Fraction:
    """Discriminant quadratic form x.x mod 2Z, reduced into [0, 2)."""
    x = vec(x)
    for i in range(L.rank):
        p = gram_pair(L.gram, x, unit_vector(L.rank, i))
        if p.denominator != 1:
            raise NotInDual(f"pairing with basis vector {i} is {p}")
    return gram_pair(L.gram, x, x) % 2


def discriminant_group(L: GramLattice) -> DiscriminantGroup:
    """Invariant factors of coker(gram) with generators lifted to L^vee."""
    if L.det == 0:
        raise DegenerateLattice("discriminant group needs det != 0")
    D, U, V = smith_normal_form([list(r) for r in L.gram])
    n = L.rank
    factors = []
    gens = []
    qs = []
    for i in range(n):
        d = D[i][i]
        if d > 1:
            g = tuple((Fraction(V[j][i], d)) % 1 for j in range(n))
            factors.append(d)
            gens.append(g)
            qs.append(q_value(L, g))
    disc = DiscriminantGroup(tuple(factors), tuple(gens), tuple(qs))
    if disc.order != abs(L.det):
        raise AssertionError("invariant factor product differs from |det|")
    return disc


@dataclass(frozen=True)
class GlueVector:
    """Dual vector adjoined to a lattice, with the order of its class."""

    vector: RationalVector
    order: int

    @classmethod
    def in_dual(cls, L: GramLattice, coords) -> "GlueVector":
        v = vec(coords)
        if len(v) != L.rank:
            raise ValueError("glue vector has wrong length")
        for i in range(L.rank):
            p = gram_pair(L.gram, v, unit_vector(L.rank, i))
            if p.denominator != 1:
                raise NonIntegralGlue(
                    f"pairing of {v} with basis vector {i} is {p}"
                )
        order = 1
        for c in v:
            order = order * c.denominator // _gcd(order, c.denominator)
        return cls(v, order)

    def to_json(self) -> list[str]:
        """Coordinates as 'p/q' strings, the interchange form for glue."""
        return [frac_str(c) for c in self.vector]

    @classmethod
    def from_json(cls, L: GramLattice, coords: list[str]) -> "GlueVector":
        return cls.in_dual(L, [parse_frac(c) for c in coords])


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class OverlatticeResult:
    """Overlattice with its basis written in the parent's coordinates."""

    lattice: GramLattice
    index: int
    basis_in_parent: tuple[RationalVector, ...]
    parent: GramLattice

    def contains(self, coords) -> bool:
        """Is the given parent-coordinate vector an element of the overlattice?"""
        x = solve_in_basis(self.basis_in_parent, vec(coords))
        return x is not None and all(c.denominator == 1 for c in x)

    def to_parent(self, coords) -> RationalVector:
        v = vec(coords)
        n = len(self.basis_in_parent[0]) if self.basis_in_parent else 0
        out = [Fraction(0)] * n
        for c, row in zip(v, self.basis_in_parent):
            if c:
                for j in range(n):
                    out[j] += c * row[j]
        return tuple(out)


def overlattice(L: GramLattice, glue: list[GlueVector]) -> OverlatticeResult:
    """Lattice generated by L and the glue vectors, with index [L' : L].

    Requires every glue vector in L^vee, integral mutual pairings and even
    self-pairings (even overlattice condition).
    """
    vs = [g.vector for g in glue]
    for a, v in enumerate(vs):
        for i in range(L.rank):
            p = gram_pair(L.gram, v, unit_vector(L.rank, i))
            if p.denominator != 1:
                raise NonIntegralGlue(f"glue #{a} pairs non-integrally with basis {i}")
        s = gram_pair(L.gram, v, v)
        if s.denominator != 1:
            raise NonIntegralGlue(f"glue #{a} has non-integral self-pairing {s}")
        if s.numerator % 2:
            raise OddGlue(f"glue #{a} has odd self-pairing {s}")
        for b in range(a):
            p = gram_pair(L.gram, v, vs[b])
            if p.denominator != 1:
                raise NonIntegralGlue(f"glue #{a} pairs non-integrally with glue #{b}")

    n = L.rank
    rows = [[Fraction(1) if j == i else Fraction(0) for j in range(n)] for i in range(n)]
    rows += [list(v) for v in vs]
    den = 1
    for row in rows:
        for c in row:
            den = den * c.denominator // _gcd(den, c.denominator)
    int_rows = [[int(c * den) for c in row] for row in rows]
    H = hermite_row_basis(int_rows)
    if len(H) != n:
        raise AssertionError("overlattice basis is not full rank")
    basis = tuple(tuple(Fraction(x, den) for x in row) for row in H)
    det_h = det_int([list(r) for r in H])
    index_frac = Fraction(den**n, abs(det_h))
    if index_frac.denominator != 1:
        raise AssertionError("index [L':L] is not an integer")
    index = int(index_frac)
    gram_new = []
    for bi in basis:
        row = []
        for bj in basis:
            p = gram_pair(L.gram, bi, bj)
            if p.denominator != 1:
                raise AssertionError("overlattice Gram is not integral")
            row.append(int(p))
        gram_new.append(tuple(row))
    lat = GramLattice(
        gram=tuple(gram_new),
        basis_labels=tuple(f"b{i+1}" for i in range(n)),
    )
    if abs(lat.det) * index * index != abs(L.det):
        raise AssertionError("overlattice determinant identity violated")
    return OverlatticeResult(lat, index, basis, L)


def solve_in_basis(basis: tuple[RationalVector, ...], v: RationalVector):
    """Coefficients x with sum x_i basis_i = v, or None if inconsistent."""
    m = len(basis)
    if m == 0:
        return None
    n = len(basis[0])
    # Gaussian elimination on the transposed system.
    A = [[basis[i][j] for i in range(m)] + [v[j]] for j in range(n)]
    piv_cols = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(n):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, n):
        if A[i][m] != 0:
            return None
    x = [Fraction(0)] * m
    for row_idx, c in enumerate(piv_cols):
        x[c] = A[row_idx][m]
    return tuple(x)


def invert_frac_matrix(rows: tuple[RationalVector, ...]) -> list[list[Fraction]]:
    n = len(rows)
    A = [list(rows[i]) + [Fraction(1) if j == i else Fraction(0) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c] != 0), None)
        if piv is None:
            raise DegenerateLattice("matrix not invertible")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [row[n:] for row in A]


def _ldl(posdef: list[list[Fraction]]):
    """LDL^T decomposition of a positive definite rational matrix.

    Returns (d, u) with Q(x) = sum_i d_i (x_i + sum_{j>i} u[i][j] x_j)^2.
    Raises NotNegativeDefinite (caller enumerates -gram) when a pivot fails.
    """
    n = len(posdef)
    q = [[Fraction(x) for x in row] for row in posdef]
    for i in range(n):
        if q[i][i] <= 0:
            raise NotNegativeDefinite("Gram matrix is not negative definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    d = [q[i][i] for i in range(n)]
    u = [[q[i][j] if j > i else Fraction(0) for j in range(n)] for i in range(n)]
    return d, u


def _block_structure(gram) -> list[list[int]]:
    """Connected components of the support graph of the Gram matrix."""
    n = len(gram)
    seen = [False] * n
    blocks = []
    for s in range(n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and gram[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        blocks.append(sorted(comp))
    return blocks


def roots(L: GramLattice) -> list[RationalVector]:
    """All norm -2 vectors of a negative definite lattice, one per {x, -x} pair.

    Exact Fincke-Pohst style enumeration on -gram; pairs are reported by the
    representative whose first nonzero coordinate is positive, sorted.
    The raw vector count is 2 * len(result).
    """
    n = L.rank
    blocks = _block_structure(L.gram)
    if len(blocks) > 1:
        # roots of an orthogonal direct sum live inside single blocks
        out = []
        for comp in blocks:
            sub = GramLattice(
                gram=tuple(tuple(L.gram[i][j] for j in comp) for i in comp)
            )
            for r in roots(sub):
                full = [Fraction(0)] * n
                for pos, val in zip(comp, r):
                    full[pos] = val
                out.append(tuple(full))
        return sorted(out)

    q = [[Fraction(-x) for x in row] for row in L.gram]
    d, u = _ldl(q)
    found: list[tuple[int, ...]] = []
    x = [0] * n

    def descend(i: int, remaining: Fraction) -> None:
        if i < 0:
            if remaining == 0:
                found.append(tuple(x))
            return
        c = sum(u[i][j] * x[j] for j in range(i + 1, n))
        s = isqrt(int(remaining / d[i])) + 1
        for xi in range(ceil(-c - s), floor(-c + s) + 1):
            t = d[i] * (xi + c) ** 2
            if t <= remaining:
                x[i] = xi
                descend(i - 1, remaining - t)
        x[i] = 0

    descend(n - 1, Fraction(2))
    reps = set()
    for v in found:
        nz = next((c for c in v if c != 0), 0)
        reps.add(v if nz > 0 else tuple(-c for c in v))
    return sorted(tuple(Fraction(c) for c in v) for v in reps)


@dataclass(frozen=True)
class LengthBoundResult:
    ok: bool
    length: int
    bound: int
    excess: int


def length_bound_check(L: GramLattice, ambient_rank: int) -> LengthBoundResult:
    """Primitive-sublattice length bound inside a unimodular ambient lattice.

    For a primitive sublattice of rank r in ambient rank N, the discriminant
    group length cannot exceed min(r, N - r).
    """
    disc = discriminant_group(L)
    bound = min(L.rank, ambient_rank - L.rank)
    excess = max(0, disc.length - bound)
    return LengthBoundResult(excess == 0, disc.length, bound, excess)
