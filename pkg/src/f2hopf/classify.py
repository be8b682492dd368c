"""Bialgebra isomorphism classes, the quiver of types, duals and self-duality
pairings.

Two bialgebras on the same algebra are isomorphic exactly when an algebra
automorphism transports one coproduct to the other, so classes are orbits of
the automorphism group acting on the raw coproduct list.  A slower
cross-check (all invertible coalgebra maps intersected with the algebra
automorphisms) is kept for the small dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from f2hopf.catalog import AlgebraCatalog, catalog
from f2hopf.coproducts import RawSolution, RawSolutionSet, solve_coproducts
from f2hopf.gf2 import Gf2Mat, bits_of, enumerate_invertible, parity
from f2hopf.structure import (
    AlgebraSC,
    Bialgebra,
    CoalgebraSC,
    apply_basis_change_coalgebra,
    check_bialgebra,
    dual_bialgebra_raw,
    opposite_coproduct,
    solve_antipode,
)


@dataclass(frozen=True)
class BialgebraClass:
    algebra_label: str
    coalgebra_type: str
    members: tuple[int, ...]  # indices into the raw solution list
    representative: RawSolution
    hopf: bool
    cop_partner: int | None = None  # class index of the co-opposite


def classify_bialgebras(a: AlgebraSC, raw: RawSolutionSet) -> list[BialgebraClass]:
    """Orbit partition of the raw solutions under the automorphism group,
    ordered by (coalgebra type, representative tensor)."""
    autos = catalog(a.n)[raw.algebra_label].automorphisms
    # Pushing a coproduct through the automorphism phi is the basis change
    # by phi^-1; iterating over the whole group makes the direction moot.
    changes = [p.inverse() for p in autos]
    index_of = {s.coalg.c: i for i, s in enumerate(raw.solutions)}
    unseen = set(range(len(raw.solutions)))
    orbits: list[list[int]] = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            coalg = raw.solutions[i].coalg
            for p in changes:
                j = index_of[apply_basis_change_coalgebra(coalg, p).c]
                if j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
        unseen -= orbit
        orbits.append(sorted(orbit))

    classes = []
    for orbit in orbits:
        rep_idx = min(orbit, key=lambda i: raw.solutions[i].coalg.c)
        rep = raw.solutions[rep_idx]
        hopf_flags = {raw.solutions[i].hopf for i in orbit}
        types = {raw.solutions[i].type_label for i in orbit}
        if len(hopf_flags) != 1 or len(types) != 1:
            raise RuntimeError("orbit mixes Hopf flags or coalgebra types")
        classes.append(
            BialgebraClass(
                algebra_label=raw.algebra_label,
                coalgebra_type=rep.type_label,
                members=tuple(orbit),
                representative=rep,
                hopf=rep.hopf,
            )
        )
    classes.sort(key=lambda c: (c.coalgebra_type, c.representative.coalg.c))

    # Locate each class's co-opposite partner.
    member_class = {}
    for ci, cls in enumerate(classes):
        for i in cls.members:
            member_class[i] = ci
    out = []
    for cls in classes:
        cop = opposite_coproduct(cls.representative.coalg)
        partner = member_class.get(index_of.get(cop.c, -1))
        out.append(
            BialgebraClass(
                algebra_label=cls.algebra_label,
                coalgebra_type=cls.coalgebra_type,
                members=cls.members,
                representative=cls.representative,
                hopf=cls.hopf,
                cop_partner=partner,
            )
        )
    return out


def classify_bialgebras_pairwise(a: AlgebraSC, raw: RawSolutionSet) -> list[set[int]]:
    """Cross-check partition: i ~ j when some invertible matrix is at once a
    coalgebra map between the two coproducts and an algebra automorphism.
    Exhaustive over the general linear group; use only for small dimensions."""
    from f2hopf import kernels
    from f2hopf.gf2 import mat_inv_rows

    n = a.n
    auto_pairs = []
    for m in enumerate_invertible(n):
        pinv = mat_inv_rows(m.rows, n)
        if kernels.transform_product(a.v, n, m.rows, pinv) == a.v:
            auto_pairs.append((m.rows, pinv))
    index_of = {s.coalg.c: i for i, s in enumerate(raw.solutions)}
    parent = list(range(len(raw.solutions)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, s in enumerate(raw.solutions):
        for p, pinv in auto_pairs:
            img = kernels.transform_coproduct(s.coalg.c, n, pinv, p)
            j = index_of.get(img)
            if j is not None:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, set[int]] = {}
    for i in range(len(raw.solutions)):
        groups.setdefault(find(i), set()).add(i)
    return sorted(groups.values(), key=min)


@dataclass(frozen=True)
class QuiverArrow:
    source: str
    target: str
    multiplicity: int
    hopf_multiplicity: int


@dataclass(frozen=True)
class QuiverGraph:
    n: int
    nodes: tuple[str, ...]
    arrows: tuple[QuiverArrow, ...]

    def arrow(self, source: str, target: str) -> QuiverArrow | None:
        for a in self.arrows:
            if a.source == source and a.target == target:
                return a
        return None

    @property
    def total_bialgebras(self) -> int:
        return sum(a.multiplicity for a in self.arrows)

    @property
    def total_hopf(self) -> int:
        return sum(a.hopf_multiplicity for a in self.arrows)

    def hopf_arrows(self) -> list[tuple[str, str]]:
        return [(a.source, a.target) for a in self.arrows if a.hopf_multiplicity]

    def to_dot(self) -> str:
        lines = [f"digraph quiver_n{self.n} {{"]
        for node in self.nodes:
            lines.append(f'  "{node}";')
        for a in self.arrows:
            hopf = "true" if a.hopf_multiplicity else "false"
            style = ' style=bold color=blue' if a.hopf_multiplicity else ""
            lines.append(
                f'  "{a.source}" -> "{a.target}" [label="{a.multiplicity}" '
                f'hopf={hopf} hopf_multiplicity={a.hopf_multiplicity}{style}];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ClassifiedDimension:
    """Everything the pipeline produces for one dimension."""

    n: int
    cat: AlgebraCatalog
    raw: dict[str, RawSolutionSet]
    classes: dict[str, list[BialgebraClass]]

    def all_classes(self) -> list[BialgebraClass]:
        out = []
        for label in self.cat.labels:
            out.extend(self.classes[label])
        return out

    def hopf_classes(self) -> list[BialgebraClass]:
        return [c for c in self.all_classes() if c.hopf]

    def census(self) -> tuple[int, int, int]:
        """(algebras, distinct bialgebras, distinct Hopf algebras)."""
        return (
            len(self.cat.classes),
            len(self.all_classes()),
            len(self.hopf_classes()),
        )


@lru_cache(maxsize=None)
def classify_dimension(n: int) -> ClassifiedDimension:
    cat = catalog(n)
    raw = {}
    classes = {}
    for cls in cat.classes:
        rs = solve_coproducts(cls.representative, cls.label)
        raw[cls.label] = rs
        classes[cls.label] = classify_bialgebras(cls.representative, rs)
    return ClassifiedDimension(n, cat, raw, classes)


def hopf_census(n: int) -> tuple[int, int, int]:
    return classify_dimension(n).census()


def build_quiver(n: int) -> QuiverGraph:
    dim = classify_dimension(n)
    counts: dict[tuple[str, str], list[int]] = {}
    for cls in dim.all_classes():
        key = (cls.algebra_label, cls.coalgebra_type)
        entry = counts.setdefault(key, [0, 0])
        entry[0] += 1
        if cls.hopf:
            entry[1] += 1
    arrows = [
        QuiverArrow(src, tgt, m, h) for (src, tgt), (m, h) in sorted(counts.items())
    ]
    return QuiverGraph(n, dim.cat.labels, tuple(arrows))


# --- duality ------------------------------------------------------------------


def dual_bialgebra(b: Bialgebra) -> Bialgebra:
    """The dual bialgebra, standardized so the new unit is basis element 0."""
    from f2hopf.catalog import standardize_unit
    from f2hopf.structure import apply_basis_change

    raw = dual_bialgebra_raw(b)
    _, p = standardize_unit(raw.alg)
    return apply_basis_change(raw, p)


def bialgebra_type(b: Bialgebra) -> tuple[str, str]:
    """(algebra label, coalgebra type label)."""
    from f2hopf.catalog import identify_algebra
    from f2hopf.coproducts import coalgebra_type

    return identify_algebra(b.alg), coalgebra_type(b.coalg)


def locate_class(dim: ClassifiedDimension, b: Bialgebra) -> BialgebraClass:
    """The class of an arbitrary bialgebra (standard form not required)."""
    from f2hopf.catalog import standardize_unit
    from f2hopf.structure import apply_basis_change

    if not b.alg.is_standard:
        _, p = standardize_unit(b.alg)
        b = apply_basis_change(b, p)
    alg_label, _ = bialgebra_type(b)
    target = classify_dimension(dim.n).raw[alg_label]
    rep_alg = dim.cat[alg_label].representative
    # Move onto the catalog representative of the algebra, then hit the
    # coproduct with every unit-fixing transport of the algebra.
    from f2hopf import kernels
    from f2hopf.gf2 import mat_inv_rows

    n = dim.n
    index_of = {s.coalg.c: i for i, s in enumerate(target.solutions)}
    member_class = {}
    for ci, cls in enumerate(dim.classes[alg_label]):
        for i in cls.members:
            member_class[i] = ci
    for m in enumerate_invertible(n, fix_unit=True):
        pinv = mat_inv_rows(m.rows, n)
        if kernels.transform_product(b.alg.v, n, m.rows, pinv) != rep_alg.v:
            continue
        c_img = kernels.transform_coproduct(b.coalg.c, n, m.rows, pinv)
        i = index_of.get(c_img)
        if i is not None:
            return dim.classes[alg_label][member_class[i]]
    raise RuntimeError("bialgebra does not match any classified solution")


# --- self-duality pairings ------------------------------------------------------


def pairing_ok(b: Bialgebra, p: Gf2Mat) -> bool:
    """Whether P[mu][nu] = <x^mu, x^nu> is a bialgebra self-pairing:
    <ab, c> = <a (x) b, Delta c>, <a, bc> = <Delta a, b (x) c>, <1, .> = eps,
    <., 1> = eps, with P invertible."""
    a, c = b.alg, b.coalg
    n = b.n
    for nu in range(n):
        left_unit = 0
        right_unit = 0
        for mu in bits_of(a.eta):
            left_unit ^= (p.rows[mu] >> nu) & 1
            right_unit ^= (p.rows[nu] >> mu) & 1
        if left_unit != (c.eps >> nu) & 1 or right_unit != (c.eps >> nu) & 1:
            return False
    if p.inverse() is None:
        return False
    pt = p.transpose()
    for mu in range(n):
        for nu in range(n):
            for rho in range(n):
                lhs = parity(a.prod(mu, nu) & pt.rows[rho])
                rhs = 0
                for t in bits_of(c.cop(rho)):
                    al, be = divmod(t, n)
                    rhs ^= ((p.rows[mu] >> al) & 1) & ((p.rows[nu] >> be) & 1)
                if lhs != rhs:
                    return False
                lhs2 = parity(p.rows[mu] & a.prod(nu, rho))
                rhs2 = 0
                for t in bits_of(c.cop(mu)):
                    al, be = divmod(t, n)
                    rhs2 ^= ((p.rows[al] >> nu) & 1) & ((p.rows[be] >> rho) & 1)
                if lhs2 != rhs2:
                    return False
    return True


def self_duality_pairing(b: Bialgebra) -> Gf2Mat | None:
    """Lexicographically smallest invertible bialgebra self-pairing, if any.

    Candidates run over all invertible matrices whose first row and column
    already match the counit (forced by the unit axioms of a pairing).
    """
    n = b.n
    eps = b.coalg.eps
    best = None
    for m in enumerate_invertible(n):
        if m.rows[0] != eps:
            continue
        col0 = 0
        for i in range(n):
            col0 |= (m.rows[i] & 1) << i
        if col0 != eps:
            continue
        if pairing_ok(b, m):
            key = m.rows
            if best is None or key < best.rows:
                best = m
    return best


def antipode_order(h_s: Gf2Mat, limit: int = 16) -> int:
    return h_s.order(limit)


def verify_hopf_class(a: AlgebraSC, sol: RawSolution) -> bool:
    """Re-validate one classified solution end to end."""
    bi = Bialgebra(a, sol.coalg)
    if not check_bialgebra(bi):
        return False
    s = solve_antipode(bi)
    if (s is None) != (sol.antipode is None):
        return False
    if s is not None and s.rows != sol.antipode.rows:
        return False
    return True
