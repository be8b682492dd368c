"""Exact linear algebra over the two-element field.

Vectors and matrices are bit-packed into Python integers: coordinate i of a
vector lives at bit i (least significant bit first), and a matrix is a tuple
of packed rows in row-major order.  This layout is part of the on-disk
format, so serialized fixtures stay stable.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator


def parity(x: int) -> int:
    return x.bit_count() & 1


def bits_of(x: int) -> Iterator[int]:
    """Indices of the set bits of x, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Gf2Vec:
    """Length-n vector over F2; coordinate i is bit i of ``bits``."""

    n: int
    bits: int

    def __post_init__(self):
        if self.bits >> self.n:
            raise ValueError("set coordinate outside [0, n)")

    def __getitem__(self, i: int) -> int:
        return (self.bits >> i) & 1

    def __xor__(self, other: "Gf2Vec") -> "Gf2Vec":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return Gf2Vec(self.n, self.bits ^ other.bits)

    def dot(self, other: "Gf2Vec") -> int:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return parity(self.bits & other.bits)

    def coords(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    def is_zero(self) -> bool:
        return self.bits == 0


def vec(coords) -> Gf2Vec:
    coords = list(coords)
    bits = 0
    for i, c in enumerate(coords):
        if c & 1:
            bits |= 1 << i
    return Gf2Vec(len(coords), bits)


@dataclass(frozen=True)
class Gf2Mat:
    """rows x cols matrix over F2, packed one integer per row (bit j = column j)."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self):
        for r in self.rows:
            if r >> self.cols:
                raise ValueError("set entry outside column range")

    @classmethod
    def from_rows(cls, row_lists) -> "Gf2Mat":
        rows = []
        cols = None
        for row in row_lists:
            row = list(row)
            if cols is None:
                cols = len(row)
            elif len(row) != cols:
                raise ValueError("ragged rows")
            bits = 0
            for j, c in enumerate(row):
                if c & 1:
                    bits |= 1 << j
            rows.append(bits)
        return cls(tuple(rows), cols or 0)

    @classmethod
    def identity(cls, n: int) -> "Gf2Mat":
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> Gf2Vec:
        return Gf2Vec(self.cols, self.rows[i])

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.rows]

    def __mul__(self, other: "Gf2Mat") -> "Gf2Mat":
        if self.cols != other.nrows:
            raise ValueError("shape mismatch in product")
        return Gf2Mat(mat_mul_rows(self.rows, other.rows), other.cols)

    def mul_vec(self, v: Gf2Vec) -> Gf2Vec:
        """Matrix times column vector: (Mv)_i = sum_j M[i][j] v_j."""
        if self.cols != v.n:
            raise ValueError("shape mismatch")
        bits = 0
        for i, r in enumerate(self.rows):
            if parity(r & v.bits):
                bits |= 1 << i
        return Gf2Vec(self.nrows, bits)

    def vec_mul(self, v: Gf2Vec) -> Gf2Vec:
        """Row vector times matrix: (vM)_j = sum_i v_i M[i][j]."""
        if self.nrows != v.n:
            raise ValueError("shape mismatch")
        acc = 0
        for i in bits_of(v.bits):
            acc ^= self.rows[i]
        return Gf2Vec(self.cols, acc)

    def transpose(self) -> "Gf2Mat":
        out = [0] * self.cols
        for i, r in enumerate(self.rows):
            for j in bits_of(r):
                out[j] |= 1 << i
        return Gf2Mat(tuple(out), self.nrows)

    def rank(self) -> int:
        return rank_rows(self.rows)

    def inverse(self) -> "Gf2Mat | None":
        """Two-sided inverse, or None when the matrix is singular."""
        if self.nrows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        inv = mat_inv_rows(self.rows, self.cols)
        if inv is None:
            return None
        return Gf2Mat(inv, self.cols)

    def is_identity(self) -> bool:
        return self.nrows == self.cols and all(
            r == 1 << i for i, r in enumerate(self.rows)
        )

    def power(self, k: int) -> "Gf2Mat":
        if self.nrows != self.cols:
            raise ValueError("power of a non-square matrix")
        acc = Gf2Mat.identity(self.cols)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def order(self, limit: int = 1 << 20) -> int:
        """Multiplicative order; raises if the matrix is singular."""
        if self.inverse() is None:
            raise ValueError("singular matrix has no multiplicative order")
        acc = self
        k = 1
        while not acc.is_identity():
            acc = acc * self
            k += 1
            if k > limit:
                raise RuntimeError("order exceeds limit")
        return k


# --- raw row-tuple helpers (hot paths work on these directly) ---------------


def mat_mul_rows(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for ra in a:
        acc = 0
        r = ra
        while r:
            low = r & -r
            acc ^= b[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return tuple(out)


def rank_rows(rows) -> int:
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def mat_inv_rows(rows, n: int) -> tuple[int, ...] | None:
    """Gauss-Jordan inverse of an n x n packed matrix, or None if singular."""
    aug = [rows[i] | (1 << (n + i)) for i in range(n)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if (aug[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for i in range(n):
            if i != col and (aug[i] >> col) & 1:
                aug[i] ^= aug[col]
    return tuple(r >> n for r in aug)


@dataclass(frozen=True)
class LinearSolution:
    """Particular solution plus a basis of the homogeneous nullspace."""

    particular: Gf2Vec
    nullspace: tuple[Gf2Vec, ...]

    @property
    def count(self) -> int:
        return 1 << len(self.nullspace)

    def solutions(self) -> Iterator[Gf2Vec]:
        """All solutions, in ascending order of the free-bit combination."""
        for mask in range(self.count):
            bits = self.particular.bits
            for i in bits_of(mask):
                bits ^= self.nullspace[i].bits
            yield Gf2Vec(self.particular.n, bits)


def solve_linear(a: Gf2Mat, b: Gf2Vec) -> LinearSolution | None:
    """Solve Ax = b over F2; None when inconsistent.

    The particular solution is the one with every free variable set to 0,
    which makes the output deterministic.
    """
    if a.nrows != b.n:
        raise ValueError("A and b have different numbers of rows")
    m, n = a.nrows, a.cols
    aug = [a.rows[i] | (((b.bits >> i) & 1) << n) for i in range(m)]
    pivots: list[tuple[int, int]] = []  # (column, row index in reduced list)
    reduced: list[int] = []
    for row in aug:
        for col, idx in pivots:
            if (row >> col) & 1:
                row ^= reduced[idx]
        if row == 0:
            continue
        low = row & -row
        col = low.bit_length() - 1
        if col == n:
            return None  # 0 = 1
        for i, other in enumerate(reduced):
            if (other >> col) & 1:
                reduced[i] ^= row
        pivots.append((col, len(reduced)))
        reduced.append(row)
    pivot_cols = {col for col, _ in pivots}
    particular = 0
    for col, idx in pivots:
        if (reduced[idx] >> n) & 1:
            particular |= 1 << col
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        v = 1 << free
        for col, idx in pivots:
            if (reduced[idx] >> free) & 1:
                v |= 1 << col
        basis.append(Gf2Vec(n, v))
    return LinearSolution(Gf2Vec(n, particular), tuple(basis))


def nullspace_basis(a: Gf2Mat) -> tuple[Gf2Vec, ...]:
    sol = solve_linear(a, Gf2Vec(a.nrows, 0))
    assert sol is not None
    return sol.nullspace


# --- enumeration of GL(n, F2) ------------------------------------------------


@lru_cache(maxsize=None)
def _gl_rows(n: int, fix_unit: bool) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []
    rows: list[int] = []
    basis: list[int] = []

    def reduce(v: int) -> int:
        for b in basis:
            v = min(v, v ^ b)
        return v

    def rec(depth: int):
        if depth == n:
            out.append(tuple(rows))
            return
        start = 1
        candidates = range(start, 1 << n) if not (fix_unit and depth == 0) else (1,)
        for r in candidates:
            if reduce(r) == 0:
                continue
            rows.append(r)
            saved = list(basis)
            red = reduce(r)
            basis.append(red)
            basis.sort(reverse=True)
            rec(depth + 1)
            basis.clear()
            basis.extend(saved)
            rows.pop()

    rec(0)
    return tuple(out)


def enumerate_invertible(n: int, fix_unit: bool = False) -> list[Gf2Mat]:
    """All invertible n x n matrices, rows chosen lexicographically smallest
    first, so the stream order is reproducible.  With ``fix_unit`` only
    matrices whose row 0 is the first standard basis vector are produced.
    """
    if not 1 <= n <= 8:
        raise ValueError("dimension out of supported range")
    return [Gf2Mat(rows, n) for rows in _gl_rows(n, fix_unit)]


def gl_order(n: int) -> int:
    total = 1
    for k in range(n):
        total *= (1 << n) - (1 << k)
    return total
