"""Matrix representations of the classified algebras: exhaustive enumeration
in sizes k <= 3, equivalence classes under conjugation, duals and tensor
products through the Hopf structure, and decomposition by exhaustive search
for a block-diagonalizing conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass

from f2hopf import kernels
from f2hopf.gf2 import Gf2Mat, bits_of, enumerate_invertible
from f2hopf.structure import AlgebraSC, HopfAlgebra


@dataclass(frozen=True)
class Representation:
    """A unital algebra map into k x k matrices; images[mu] is the image of
    basis element mu (images[0] is the identity)."""

    k: int
    images: tuple[Gf2Mat, ...]

    def __post_init__(self):
        if not self.images[0].is_identity():
            raise ValueError("the unit must act as the identity")

    def image_of(self, coeffs: int) -> Gf2Mat:
        rows = [0] * self.k
        for mu in bits_of(coeffs):
            for i in range(self.k):
                rows[i] ^= self.images[mu].rows[i]
        return Gf2Mat(tuple(rows), self.k)


def is_representation(a: AlgebraSC, rep: Representation) -> bool:
    for mu in range(a.n):
        for nu in range(a.n):
            prod = rep.images[mu] * rep.images[nu]
            want = rep.image_of(a.prod(mu, nu))
            if prod.rows != want.rows:
                return False
    return True


def _rep_equations(a: AlgebraSC, k: int):
    """Multiplicativity as a quadratic XOR system over the generator images.

    Variable layout: entry (i, j) of the image of basis element mu >= 1 at
    index (mu-1)*k^2 + i*k + j.
    """
    n = a.n
    kk = k * k

    def var(mu, i, j):
        return (mu - 1) * kk + i * k + j

    equations = []
    for mu in range(1, n):
        for nu in range(1, n):
            pv = a.prod(mu, nu)
            for i in range(k):
                for j in range(k):
                    lin = 0
                    pairs: dict[tuple[int, int], int] = {}
                    for l in range(k):
                        vi, vj = var(mu, i, l), var(nu, l, j)
                        if vi == vj:
                            lin ^= 1 << vi
                        else:
                            key = (min(vi, vj), max(vi, vj))
                            pairs[key] = pairs.get(key, 0) ^ 1
                    const = (pv & 1) if i == j else 0
                    for rho in range(1, n):
                        if (pv >> rho) & 1:
                            lin ^= 1 << var(rho, i, j)
                    equations.append(
                        (const, lin, tuple(sorted(p for p, o in pairs.items() if o)))
                    )
    return equations


def enumerate_reps(a: AlgebraSC, k: int) -> list[Representation]:
    """All unital algebra maps into k x k matrices, ascending in the packed
    generator-image bits."""
    if not a.is_standard:
        raise ValueError("expects standard form")
    if not 1 <= k <= 3:
        raise ValueError("matrix size out of supported range")
    n = a.n
    kk = k * k
    nvars = (n - 1) * kk
    out = []
    for mask in kernels.solve_quadratic(nvars, _rep_equations(a, k)):
        images = [Gf2Mat.identity(k)]
        for mu in range(1, n):
            rows = []
            for i in range(k):
                row = 0
                for j in range(k):
                    if (mask >> ((mu - 1) * kk + i * k + j)) & 1:
                        row |= 1 << j
                rows.append(row)
            images.append(Gf2Mat(tuple(rows), k))
        out.append(Representation(k, tuple(images)))
    return out


def conjugate(rep: Representation, p: Gf2Mat) -> Representation:
    pinv = p.inverse()
    if pinv is None:
        raise ValueError("singular conjugation matrix")
    return Representation(rep.k, tuple(p * m * pinv for m in rep.images))


def are_equivalent(r1: Representation, r2: Representation) -> bool:
    if r1.k != r2.k:
        return False
    key2 = tuple(m.rows for m in r2.images)
    for p in enumerate_invertible(r1.k):
        if tuple((p * m * p.inverse()).rows for m in r1.images) == key2:
            return True
    return False


def equivalence_classes(reps: list[Representation]) -> list[list[int]]:
    """Partition under simultaneous conjugation; indices into the input."""
    if not reps:
        return []
    k = reps[0].k
    index_of = {tuple(m.rows for m in r.images): i for i, r in enumerate(reps)}
    group = [(p, p.inverse()) for p in enumerate_invertible(k)]
    unseen = set(range(len(reps)))
    classes = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for p, pinv in group:
                key = tuple((p * m * pinv).rows for m in reps[i].images)
                j = index_of.get(key)
                if j is not None and j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
        unseen -= orbit
        classes.append(sorted(orbit))
    return classes


# --- Hopf-side constructions ----------------------------------------------------


def _kron(a: Gf2Mat, b: Gf2Mat) -> Gf2Mat:
    ka, kb = a.nrows, b.nrows
    rows = []
    for i in range(ka):
        for p in range(kb):
            row = 0
            for j in range(ka):
                if (a.rows[i] >> j) & 1:
                    row |= b.rows[p] << (j * kb)
            rows.append(row)
    return Gf2Mat(tuple(rows), ka * kb)


def tensor_rep(h: HopfAlgebra, r1: Representation, r2: Representation) -> Representation:
    """Image of x^mu = sum C[mu][nu][rho] r1(x^nu) (x) r2(x^rho)."""
    n = h.n
    k = r1.k * r2.k
    images = []
    for mu in range(n):
        rows = [0] * k
        for t in bits_of(h.coalg.cop(mu)):
            nu, rho = divmod(t, n)
            m = _kron(r1.images[nu], r2.images[rho])
            for i in range(k):
                rows[i] ^= m.rows[i]
        images.append(Gf2Mat(tuple(rows), k))
    return Representation(k, tuple(images))


def dual_rep(h: HopfAlgebra, r: Representation) -> Representation:
    """Image of x^mu = transpose of r(S x^mu)."""
    images = []
    for mu in range(h.n):
        images.append(r.image_of(h.s.rows[mu]).transpose())
    return Representation(r.k, tuple(images))


def regular_rep(a: AlgebraSC) -> Representation:
    """Left multiplication on the algebra itself (column convention)."""
    n = a.n
    images = []
    for mu in range(n):
        rows = [0] * n
        for j in range(n):
            for i in bits_of(a.prod(mu, j)):
                rows[i] |= 1 << j
        images.append(Gf2Mat(tuple(rows), n))
    return Representation(n, tuple(images))


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    k = r1.k + r2.k
    images = []
    for m1, m2 in zip(r1.images, r2.images):
        rows = list(m1.rows) + [r << r1.k for r in m2.rows]
        images.append(Gf2Mat(tuple(rows), k))
    return Representation(k, tuple(images))


def equivalent_by_conjugation(r1: Representation, r2: Representation) -> Gf2Mat | None:
    """A conjugation carrying r1 onto r2, found by exhaustive search over the
    general linear group (k <= 4)."""
    if r1.k != r2.k:
        return None
    key2 = tuple(m.rows for m in r2.images)
    for p in enumerate_invertible(r1.k):
        pinv = p.inverse()
        if tuple((p * m * pinv).rows for m in r1.images) == key2:
            return p
    return None


def decompose(rep: Representation, candidates: dict[str, Representation]):
    """Name the representation as a candidate or a direct sum of two of them,
    searching all conjugations; None when nothing matches."""
    for name, cand in candidates.items():
        if cand.k == rep.k and equivalent_by_conjugation(rep, cand) is not None:
            return (name,)
    names = sorted(candidates)
    for a in names:
        for b in names:
            cand_a, cand_b = candidates[a], candidates[b]
            if cand_a.k + cand_b.k != rep.k:
                continue
            if equivalent_by_conjugation(rep, direct_sum(cand_a, cand_b)) is not None:
                return (a, b)
    return None


def invariant_line(rep: Representation, vec_bits: int, character: Representation) -> bool:
    """Whether the given vector spans a subrepresentation isomorphic to the
    one-dimensional character."""
    from f2hopf.gf2 import Gf2Vec

    v = Gf2Vec(rep.k, vec_bits)
    for m, ch in zip(rep.images, character.images):
        want_bits = v.bits if ch.rows[0] & 1 else 0
        if m.mul_vec(v).bits != want_bits:
            return False
    return True
