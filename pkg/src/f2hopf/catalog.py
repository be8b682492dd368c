"""The named unital algebras over F2 in dimensions 1..4 and the machinery to
enumerate, classify and identify algebras against them.

Relation tables give the nonzero products among the non-unit basis elements;
a product listed once is taken in both orders unless the reversed product is
listed explicitly (so commutative tables stay short).  Everything is checked
against the axiom evaluators at load time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from f2hopf import kernels
from f2hopf.gf2 import Gf2Mat, bits_of, enumerate_invertible, mat_inv_rows
from f2hopf.structure import AlgebraSC, check_algebra

BASIS_NAMES = {1: ("1",), 2: ("1", "x"), 3: ("1", "x", "y"), 4: ("1", "x", "y", "z")}

# dimension 2, basis 1, x
RELATIONS_DIM2 = {
    "A": "x*x=0",
    "B": "x*x=x",
    "C": "x*x=1+x",
}

# dimension 3, basis 1, x, y
RELATIONS_DIM3 = {
    "A": "",
    "B": "x*x=x; y*y=y",
    "C": "x*x=x",
    "D": "x*x=y; y*y=x; x*y=x+y",
    "E": "x*x=y",
    "F": "x*x=y; x*y=1+y; y*y=1+x+y",
    "G": "x*x=x; x*y=y; y*x=0",
}

# dimension 4, basis 1, x, y, z; commutative entries first
RELATIONS_DIM4 = {
    "A": "",
    "B": "x*x=z",
    "C": "x*x=x",
    "D": "x*x=x; x*y=z; x*z=z",
    "E": "x*y=z",
    "F": "x*x=z; x*y=z",
    "G": "x*x=y; x*y=z",
    "H": "x*x=1+x; x*y=z; x*z=y+z",
    "I": "x*x=y; y*y=x; x*y=x+y",
    "J": "x*x=x+z; x*y=x+z; y*y=x",
    "K": "x*x=x; y*y=y",
    "L": "x*x=z; x*z=1+y; y*y=y; z*z=x",
    "M": "x*x=1+x+y+z; y*y=y; z*z=x; x*z=1+x+y",
    "N": "x*x=1+x; y*y=1+y; x*y=z; x*z=y+z; y*z=x+z; z*z=1+x+y+z",
    "O": "x*x=y; x*y=z; x*z=1+x; y*y=1+x; y*z=x+y; z*z=y+z",
    "P": "x*x=x; y*y=y; x*y=z; x*z=z; y*z=z; z*z=z",
    "NA": "x*y=z; y*x=0",
    "NB": "x*x=z; x*y=z; y*x=0; y*y=z",
    "NC": "x*x=x; x*y=y; y*x=0",
    "ND": "x*x=x; y*x=y; x*y=0",
    "NE": "x*x=x; x*y=y; x*z=z; y*x=0; z*x=0",
    "NF": "x*x=x; y*x=y; x*z=z; x*y=0; z*x=0",
    "NG": "x*x=x; y*y=y; x*z=z; z*x=0",
    "NH": "x*x=x; y*x=y; x*z=z; x*y=0; z*x=0; y*z=1+x; z*y=x",
    "NI": "x*y=x+z; y*x=z; y*y=1+y; y*z=x+z; z*y=x",
}

RELATIONS = {
    1: {"F2": ""},
    2: RELATIONS_DIM2,
    3: RELATIONS_DIM3,
    4: RELATIONS_DIM4,
}

NONCOMMUTATIVE_LABELS = {3: {"G"}, 4: {"NA", "NB", "NC", "ND", "NE", "NF", "NG", "NH", "NI"}}


def parse_element(expr: str, names: tuple[str, ...]) -> int:
    """Parse '1+x+y' style sums of basis names into a packed vector."""
    expr = expr.strip()
    if expr == "0":
        return 0
    bits = 0
    for tok in expr.split("+"):
        tok = tok.strip()
        if tok not in names:
            raise ValueError(f"unknown basis element {tok!r}")
        bits ^= 1 << names.index(tok)
    return bits


def algebra_from_relations(
    n: int, relations: str, names: tuple[str, ...] | None = None
) -> AlgebraSC:
    """Build a standard-form algebra tensor from a relation table."""
    if names is None:
        names = BASIS_NAMES[n]
    given: dict[tuple[int, int], int] = {}
    explicit: set[tuple[int, int]] = set()
    for clause in relations.split(";"):
        clause = clause.strip()
        if not clause:
            continue
        lhs, rhs = clause.split("=")
        a, b = (t.strip() for t in lhs.split("*"))
        i, j = names.index(a), names.index(b)
        given[(i, j)] = parse_element(rhs, names)
        explicit.add((i, j))
    v = 0
    for mu in range(n):
        for nu in range(n):
            if mu == 0:
                vec = 1 << nu
            elif nu == 0:
                vec = 1 << mu
            elif (mu, nu) in explicit:
                vec = given[(mu, nu)]
            elif (nu, mu) in explicit:
                vec = given[(nu, mu)]
            else:
                vec = 0
            v |= vec << ((mu * n + nu) * n)
    alg = AlgebraSC(n, v)
    rep = check_algebra(alg)
    if not rep:
        raise ValueError(f"relation table is not associative/unital: {rep}")
    return alg


@dataclass(frozen=True)
class AlgebraClass:
    """One isomorphism class: its label, relation text, hand-entered
    representative and the lexicographically smallest tensor in its orbit."""

    label: str
    n: int
    representative: AlgebraSC
    canonical: int
    relations_doc: str
    orbit_size: int
    automorphisms: tuple[Gf2Mat, ...]

    @property
    def commutative(self) -> bool:
        return self.representative.commutative


@dataclass(frozen=True)
class AlgebraCatalog:
    n: int
    classes: tuple[AlgebraClass, ...]
    orbit_label: dict[int, str]  # standard-form tensor -> class label

    def __getitem__(self, label: str) -> AlgebraClass:
        for cls in self.classes:
            if cls.label == label:
                return cls
        raise KeyError(label)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.classes)


def _unit_fixing(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    out = []
    for m in enumerate_invertible(n, fix_unit=True):
        pinv = mat_inv_rows(m.rows, n)
        out.append((m.rows, pinv))
    return out


@lru_cache(maxsize=None)
def catalog(n: int) -> AlgebraCatalog:
    """Build (and cache) the catalog for one dimension, expanding the full
    isomorphism orbit of every entry under unit-fixing basis changes."""
    group = _unit_fixing(n)
    classes = []
    orbit_label: dict[int, str] = {}
    for label, rel in RELATIONS[n].items():
        alg = algebra_from_relations(n, rel)
        orbit: set[int] = set()
        autos = []
        for p, pinv in group:
            img = kernels.transform_product(alg.v, n, p, pinv)
            orbit.add(img)
            if img == alg.v:
                autos.append(Gf2Mat(p, n))
        for t in orbit:
            prev = orbit_label.get(t)
            if prev is not None and prev != label:
                raise RuntimeError(f"catalog entries {prev} and {label} are isomorphic")
            orbit_label[t] = label
        classes.append(
            AlgebraClass(
                label=label,
                n=n,
                representative=alg,
                canonical=min(orbit),
                relations_doc=rel,
                orbit_size=len(orbit),
                automorphisms=tuple(autos),
            )
        )
    return AlgebraCatalog(n, tuple(classes), orbit_label)


def automorphism_group(a: AlgebraSC) -> list[Gf2Mat]:
    """All unit-fixing basis changes preserving the tensor exactly."""
    if not a.is_standard:
        raise ValueError("automorphism_group expects standard form")
    out = []
    for p, pinv in _unit_fixing(a.n):
        if kernels.transform_product(a.v, a.n, p, pinv) == a.v:
            out.append(Gf2Mat(p, a.n))
    return out


def standardize_unit(a: AlgebraSC) -> tuple[AlgebraSC, Gf2Mat]:
    """Basis change moving the unit to basis index 0.

    The first row of the change matrix is the unit combination; the remaining
    rows are the lexicographically smallest completion to an invertible
    matrix.  Returns (standard-form algebra, change matrix).
    """
    n = a.n
    if a.eta == 0:
        raise ValueError("algebra has zero unit vector")
    rows = [a.eta]
    basis = [a.eta]

    def reduced(v: int) -> int:
        for b in basis:
            v = min(v, v ^ b)
        return v

    for r in range(1, 1 << n):
        if len(rows) == n:
            break
        if reduced(r):
            rows.append(r)
            red = reduced(r)
            basis.append(red)
            basis.sort(reverse=True)
    p = Gf2Mat(tuple(rows), n)
    from f2hopf.structure import apply_basis_change_algebra

    std = apply_basis_change_algebra(a, p)
    assert std.eta == 1
    return std, p


def identify_algebra(a: AlgebraSC) -> str:
    """Catalog label of the class the algebra belongs to."""
    rep = check_algebra(a)
    if not rep:
        raise ValueError(f"not a unital associative algebra: {rep}")
    std = a if a.is_standard else standardize_unit(a)[0]
    try:
        return catalog(a.n).orbit_label[std.v]
    except KeyError:
        raise RuntimeError("algebra not in catalog (catalog incomplete?)") from None


# --- exhaustive enumeration ---------------------------------------------------


def _algebra_equations(n: int):
    """Associativity as a quadratic XOR system over the free product bits.

    Variable layout: bit of V[mu][nu][rho] for mu, nu >= 1 at index
    ((mu-1)*(n-1) + (nu-1))*n + rho, i.e. products filled in lexicographic
    (mu, nu) order.
    """

    def var(mu: int, nu: int, rho: int) -> int:
        return ((mu - 1) * (n - 1) + (nu - 1)) * n + rho

    equations = []
    for a in range(1, n):
        for b in range(1, n):
            for c in range(1, n):
                for g in range(n):
                    const = 0
                    lin = 0
                    pairs: dict[tuple[int, int], int] = {}

                    def add_pair(i: int, j: int):
                        nonlocal lin
                        if i == j:
                            lin ^= 1 << i
                            return
                        key = (i, j) if i < j else (j, i)
                        pairs[key] = pairs.get(key, 0) ^ 1

                    # (x^a x^b) x^c : sum_lam V[a][b][lam] V[lam][c][g]
                    lin ^= (1 if c == g else 0) << var(a, b, 0)
                    for lam in range(1, n):
                        add_pair(var(a, b, lam), var(lam, c, g))
                    # x^a (x^b x^c) : sum_lam V[b][c][lam] V[a][lam][g]
                    lin ^= (1 if a == g else 0) << var(b, c, 0)
                    for lam in range(1, n):
                        add_pair(var(b, c, lam), var(a, lam, g))
                    quad = tuple(sorted(k for k, odd in pairs.items() if odd))
                    if lin or quad or const:
                        equations.append((const, lin, quad))
    return equations


@lru_cache(maxsize=None)
def enumerate_algebras(n: int) -> tuple[AlgebraSC, ...]:
    """Every standard-form unital associative algebra tensor, exactly once,
    in ascending order of the packed free bits."""
    if not 1 <= n <= 4:
        raise ValueError("dimension out of range")
    if n == 1:
        return (AlgebraSC(1, 1),)
    nvars = (n - 1) * (n - 1) * n
    sols = kernels.solve_quadratic(nvars, _algebra_equations(n))
    out = []
    for mask in sols:
        v = 0
        for mu in range(n):
            for nu in range(n):
                if mu == 0:
                    vec = 1 << nu
                elif nu == 0:
                    vec = 1 << mu
                else:
                    vec = (mask >> (((mu - 1) * (n - 1) + (nu - 1)) * n)) & ((1 << n) - 1)
                v |= vec << ((mu * n + nu) * n)
        out.append(AlgebraSC(n, v))
    return tuple(out)


def classify_algebras(algebras) -> dict[str, list[AlgebraSC]]:
    """Partition enumerated standard-form algebras into catalog classes."""
    buckets: dict[str, list[AlgebraSC]] = {}
    cat = None
    for a in algebras:
        if cat is None:
            cat = catalog(a.n)
        label = cat.orbit_label.get(a.v)
        if label is None:
            raise RuntimeError("enumerated algebra missing from catalog orbits")
        buckets.setdefault(label, []).append(a)
    return buckets


def tensor_product_algebra(a: AlgebraSC, b: AlgebraSC) -> AlgebraSC:
    """Tensor product algebra on the product basis, then unit standardized.

    Basis order pairs (i, j) -> i*b.n + j with x^i (x) y^j; the unit is
    e0 (x) e0, already standard when both factors are standard.
    """
    n = a.n * b.n
    v = 0
    for i1 in range(a.n):
        for j1 in range(b.n):
            for i2 in range(a.n):
                for j2 in range(b.n):
                    pa = a.prod(i1, i2)
                    pb = b.prod(j1, j2)
                    row = i1 * b.n + j1
                    col = i2 * b.n + j2
                    for r1 in bits_of(pa):
                        for r2 in bits_of(pb):
                            v |= 1 << ((row * n + col) * n + (r1 * b.n + r2))
    return AlgebraSC(n, v)


def quartic_algebra(a: int, b: int, c: int, d: int) -> AlgebraSC:
    """F2[w] / (w^4 + a w^3 + b w^2 + c w + d) on basis 1, w, w^2, w^3."""
    n = 4
    w4 = (d & 1) | ((c & 1) << 1) | ((b & 1) << 2) | ((a & 1) << 3)
    powers = [1 << 0, 1 << 1, 1 << 2, 1 << 3, w4]
    for k in range(5, 7):
        prev = powers[k - 1]
        nxt = 0
        for i in bits_of(prev):
            nxt ^= powers[i + 1]
        powers.append(nxt)
    v = 0
    for i in range(4):
        for j in range(4):
            v |= powers[i + j] << ((i * n + j) * n)
    return AlgebraSC(n, v)
