"""Structure constants of algebras, coalgebras, bialgebras and Hopf algebras
over F2, with exact evaluators for every axiom.

Rank-3 tensors are packed flat into one integer with index
(mu, nu, rho) -> bit mu*n*n + nu*n + rho.  For a product tensor V the n-bit
slice at (mu, nu) is the coefficient vector of x^mu * x^nu; for a coproduct
tensor C the n^2-bit slice at mu is Delta(x^mu) as an element of H (x) H,
whose bit nu*n + rho stands for x^nu (x) x^rho.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from f2hopf.gf2 import Gf2Mat, Gf2Vec, bits_of, mat_inv_rows, parity, solve_linear


def tensor_bit(n: int, mu: int, nu: int, rho: int) -> int:
    return mu * n * n + nu * n + rho


@dataclass(frozen=True)
class AlgebraSC:
    """A unital associative algebra given by its structure constants.

    v holds the product tensor (x^mu x^nu = sum_rho V[mu][nu][rho] x^rho) and
    eta the coefficients of the unit element.  Standard form means the unit
    is the basis element x^0.
    """

    n: int
    v: int
    eta: int = 1

    def __post_init__(self):
        if self.v >> self.n**3 or self.eta >> self.n:
            raise ValueError("tensor bits outside dimension range")

    def prod(self, mu: int, nu: int) -> int:
        """Packed coefficient vector of x^mu * x^nu."""
        n = self.n
        return (self.v >> ((mu * n + nu) * n)) & ((1 << n) - 1)

    def mul_vec(self, a: int, b: int) -> int:
        """Product of two packed coefficient vectors."""
        acc = 0
        for i in bits_of(a):
            for j in bits_of(b):
                acc ^= self.prod(i, j)
        return acc

    @property
    def is_standard(self) -> bool:
        return self.eta == 1

    @cached_property
    def commutative(self) -> bool:
        return all(
            self.prod(mu, nu) == self.prod(nu, mu)
            for mu in range(self.n)
            for nu in range(mu + 1, self.n)
        )


@dataclass(frozen=True)
class CoalgebraSC:
    """A coalgebra given by its coproduct tensor and counit vector."""

    n: int
    c: int
    eps: int

    def __post_init__(self):
        if self.c >> self.n**3 or self.eps >> self.n:
            raise ValueError("tensor bits outside dimension range")

    def cop(self, mu: int) -> int:
        """Delta(x^mu) as a packed element of H (x) H."""
        n = self.n
        return (self.c >> (mu * n * n)) & ((1 << (n * n)) - 1)


@dataclass(frozen=True)
class Bialgebra:
    alg: AlgebraSC
    coalg: CoalgebraSC

    def __post_init__(self):
        if self.alg.n != self.coalg.n:
            raise ValueError("algebra and coalgebra dimensions differ")

    @property
    def n(self) -> int:
        return self.alg.n


@dataclass(frozen=True)
class HopfAlgebra:
    bi: Bialgebra
    s: Gf2Mat

    @property
    def n(self) -> int:
        return self.bi.n

    @property
    def alg(self) -> AlgebraSC:
        return self.bi.alg

    @property
    def coalg(self) -> CoalgebraSC:
        return self.bi.coalg


@dataclass(frozen=True)
class TensorSquareElement:
    """Element of H (x) H as an n^2-bit vector, bit mu*n + nu = x^mu (x) x^nu."""

    n: int
    bits: int

    def __post_init__(self):
        if self.bits >> self.n**2:
            raise ValueError("bits outside n^2 range")

    @classmethod
    def unit(cls, n: int) -> "TensorSquareElement":
        return cls(n, 1)

    def coeff(self, mu: int, nu: int) -> int:
        return (self.bits >> (mu * self.n + nu)) & 1

    def matrix(self) -> Gf2Mat:
        n = self.n
        return Gf2Mat(
            tuple((self.bits >> (mu * n)) & ((1 << n) - 1) for mu in range(n)), n
        )


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom check; on failure, the first violated axiom and
    index tuple in lexicographic order."""

    ok: bool
    axiom: str | None = None
    index: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


_PASS = AxiomReport(True)


# --- algebra axioms ----------------------------------------------------------


def check_algebra(a: AlgebraSC) -> AxiomReport:
    """Unit law and associativity at every index."""
    n = a.n
    for mu in range(n):
        left = 0
        right = 0
        for nu in bits_of(a.eta):
            left ^= a.prod(nu, mu)
            right ^= a.prod(mu, nu)
        if left != 1 << mu:
            return AxiomReport(False, "unit-left", (mu,))
        if right != 1 << mu:
            return AxiomReport(False, "unit-right", (mu,))
    for i in range(n):
        for j in range(n):
            ij = a.prod(i, j)
            for k in range(n):
                lhs = 0
                for lam in bits_of(ij):
                    lhs ^= a.prod(lam, k)
                rhs = 0
                for lam in bits_of(a.prod(j, k)):
                    rhs ^= a.prod(i, lam)
                if lhs != rhs:
                    return AxiomReport(False, "associativity", (i, j, k))
    return _PASS


def check_coalgebra(c: CoalgebraSC) -> AxiomReport:
    """Coassociativity and the two counit identities."""
    n = c.n
    for mu in range(n):
        # (Delta (x) id) Delta vs (id (x) Delta) Delta, in the n^3 bit space
        # with basis index alpha*n*n + beta*n + gamma.
        lhs = 0
        rhs = 0
        for t in bits_of(c.cop(mu)):
            nu, gamma = divmod(t, n)
            for t2 in bits_of(c.cop(nu)):
                alpha, beta = divmod(t2, n)
                lhs ^= 1 << (alpha * n * n + beta * n + gamma)
        for t in bits_of(c.cop(mu)):
            alpha, rho = divmod(t, n)
            for t2 in bits_of(c.cop(rho)):
                beta, gamma = divmod(t2, n)
                rhs ^= 1 << (alpha * n * n + beta * n + gamma)
        if lhs != rhs:
            diff = lhs ^ rhs
            t = (diff & -diff).bit_length() - 1
            alpha, rest = divmod(t, n * n)
            beta, gamma = divmod(rest, n)
            return AxiomReport(False, "coassociativity", (mu, alpha, beta, gamma))
        left = 0
        right = 0
        for t in bits_of(c.cop(mu)):
            nu, rho = divmod(t, n)
            if (c.eps >> nu) & 1:
                left ^= 1 << rho
            if (c.eps >> rho) & 1:
                right ^= 1 << nu
        if left != 1 << mu:
            return AxiomReport(False, "counit-left", (mu,))
        if right != 1 << mu:
            return AxiomReport(False, "counit-right", (mu,))
    return _PASS


def tensor_square_multiply(
    a: TensorSquareElement, b: TensorSquareElement, alg: AlgebraSC
) -> TensorSquareElement:
    """Componentwise product on H (x) H induced by the algebra product."""
    if not (a.n == b.n == alg.n):
        raise ValueError("dimension mismatch")
    n = alg.n
    acc = 0
    for p in bits_of(a.bits):
        n1, r1 = divmod(p, n)
        for q in bits_of(b.bits):
            n2, r2 = divmod(q, n)
            left = alg.prod(n1, n2)
            right = alg.prod(r1, r2)
            for al in bits_of(left):
                for be in bits_of(right):
                    acc ^= 1 << (al * n + be)
    return TensorSquareElement(n, acc)


def unit_tensor_square(alg: AlgebraSC) -> TensorSquareElement:
    """1 (x) 1 for the algebra's unit (eta (x) eta in coefficients)."""
    n = alg.n
    bits = 0
    for i in bits_of(alg.eta):
        for j in bits_of(alg.eta):
            bits ^= 1 << (i * n + j)
    return TensorSquareElement(n, bits)


def check_bialgebra(b: Bialgebra) -> AxiomReport:
    """Coalgebra axioms plus compatibility: Delta and eps are algebra maps,
    Delta(1) = 1 (x) 1 and eps(1) = 1."""
    rep = check_coalgebra(b.coalg)
    if not rep:
        return rep
    a, c = b.alg, b.coalg
    n = b.n
    # eps(1) = 1 and Delta(1) = 1 (x) 1.
    if parity(a.eta & c.eps) != 1:
        return AxiomReport(False, "counit-of-unit", ())
    delta_unit = 0
    for mu in bits_of(a.eta):
        delta_unit ^= c.cop(mu)
    if delta_unit != unit_tensor_square(a).bits:
        return AxiomReport(False, "coproduct-of-unit", ())
    for mu in range(n):
        for nu in range(n):
            # eps multiplicative.
            lhs = parity(a.prod(mu, nu) & c.eps)
            rhs = ((c.eps >> mu) & 1) & ((c.eps >> nu) & 1)
            if lhs != rhs:
                return AxiomReport(False, "counit-multiplicative", (mu, nu))
            # Delta multiplicative.
            left = 0
            for rho in bits_of(a.prod(mu, nu)):
                left ^= c.cop(rho)
            right = tensor_square_multiply(
                TensorSquareElement(n, c.cop(mu)),
                TensorSquareElement(n, c.cop(nu)),
                a,
            ).bits
            if left != right:
                return AxiomReport(False, "coproduct-multiplicative", (mu, nu))
    return _PASS


# --- antipode ----------------------------------------------------------------


class AntipodeError(RuntimeError):
    """The antipode system is consistent but not unique (never happens for a
    genuine bialgebra; kept as a hard internal check)."""


def solve_antipode(b: Bialgebra) -> Gf2Mat | None:
    """The unique antipode matrix when one exists, else None.

    Solves m(S (x) id)Delta = eta.eps = m(id (x) S)Delta as a linear system
    in the n^2 entries of S and asserts the solution is unique.
    """
    a, c = b.alg, b.coalg
    n = b.n
    nvar = n * n  # unknown s[nu][alpha] at column nu*n + alpha
    rows: list[int] = []
    rhs_bits: list[int] = []
    for mu in range(n):
        for beta in range(n):
            target = ((c.eps >> mu) & 1) & ((a.eta >> beta) & 1)
            row1 = 0
            row2 = 0
            for t in bits_of(c.cop(mu)):
                nu, rho = divmod(t, n)
                for alpha in range(n):
                    if (a.prod(alpha, rho) >> beta) & 1:
                        row1 ^= 1 << (nu * n + alpha)
                    if (a.prod(nu, alpha) >> beta) & 1:
                        row2 ^= 1 << (rho * n + alpha)
            rows.append(row1)
            rhs_bits.append(target)
            rows.append(row2)
            rhs_bits.append(target)
    mat = Gf2Mat(tuple(rows), nvar)
    rhs = Gf2Vec(len(rows), sum(bit << i for i, bit in enumerate(rhs_bits)))
    sol = solve_linear(mat, rhs)
    if sol is None:
        return None
    if sol.nullspace:
        raise AntipodeError("antipode system has positive nullity")
    s = sol.particular.bits
    return Gf2Mat(tuple((s >> (nu * n)) & ((1 << n) - 1) for nu in range(n)), n)


def check_antipode_identities(h: HopfAlgebra) -> AxiomReport:
    """The anti-homomorphism consequences of the antipode law: S reverses the
    product and coproduct, fixes the unit, and preserves the counit."""
    a, c, s = h.alg, h.coalg, h.s
    n = h.n
    for mu in range(n):
        for nu in range(n):
            # S(x^mu x^nu) = S(x^nu) S(x^mu)
            lhs = 0
            for rho in bits_of(a.prod(mu, nu)):
                lhs ^= s.rows[rho]
            rhs = a.mul_vec(s.rows[nu], s.rows[mu])
            if lhs != rhs:
                return AxiomReport(False, "antipode-anti-homomorphism", (mu, nu))
    for mu in range(n):
        # (S (x) S) o Delta^cop = Delta o S
        lhs = 0
        for t in bits_of(c.cop(mu)):
            al, be = divmod(t, n)
            for i in bits_of(s.rows[be]):
                for j in bits_of(s.rows[al]):
                    lhs ^= 1 << (i * n + j)
        rhs = 0
        for rho in bits_of(s.rows[mu]):
            rhs ^= c.cop(rho)
        if lhs != rhs:
            return AxiomReport(False, "antipode-anti-cohomomorphism", (mu,))
        if parity(s.rows[mu] & c.eps) != (c.eps >> mu) & 1:
            return AxiomReport(False, "antipode-counit", (mu,))
    fixed_unit = 0
    for mu in bits_of(a.eta):
        fixed_unit ^= s.rows[mu]
    if fixed_unit != a.eta:
        return AxiomReport(False, "antipode-unit", ())
    return _PASS


# --- duality, opposites, basis change ---------------------------------------


def dualize_coalgebra(c: CoalgebraSC) -> AlgebraSC:
    """Dual algebra on the dual basis: V*[nu][rho][mu] = C[mu][nu][rho]."""
    n = c.n
    v = 0
    for mu in range(n):
        for t in bits_of(c.cop(mu)):
            nu, rho = divmod(t, n)
            v |= 1 << tensor_bit(n, nu, rho, mu)
    return AlgebraSC(n, v, eta=c.eps)


def dualize_algebra(a: AlgebraSC) -> CoalgebraSC:
    """Dual coalgebra on the dual basis: C*[mu][nu][rho] = V[nu][rho][mu]."""
    n = a.n
    c = 0
    for nu in range(n):
        for rho in range(n):
            for mu in bits_of(a.prod(nu, rho)):
                c |= 1 << tensor_bit(n, mu, nu, rho)
    return CoalgebraSC(n, c, eps=a.eta)


def dual_bialgebra_raw(b: Bialgebra) -> Bialgebra:
    """Swap the two structures onto the dual basis (unit may be non-standard)."""
    return Bialgebra(dualize_coalgebra(b.coalg), dualize_algebra(b.alg))


def opposite_product(a: AlgebraSC) -> AlgebraSC:
    n = a.n
    v = 0
    for mu in range(n):
        for nu in range(n):
            v |= a.prod(nu, mu) << ((mu * n + nu) * n)
    return AlgebraSC(n, v, a.eta)


def opposite_coproduct(c: CoalgebraSC) -> CoalgebraSC:
    n = c.n
    out = 0
    for mu in range(n):
        for t in bits_of(c.cop(mu)):
            nu, rho = divmod(t, n)
            out |= 1 << tensor_bit(n, mu, rho, nu)
    return CoalgebraSC(n, out, c.eps)


def opposite(b: Bialgebra, which: str) -> Bialgebra:
    """H^op (reversed product) or H^cop (reversed coproduct)."""
    if which == "product":
        return Bialgebra(opposite_product(b.alg), b.coalg)
    if which == "coproduct":
        return Bialgebra(b.alg, opposite_coproduct(b.coalg))
    raise ValueError("which must be 'product' or 'coproduct'")


def apply_basis_change_algebra(a: AlgebraSC, p: Gf2Mat) -> AlgebraSC:
    """Structure constants in the new basis z_a = sum_m P[a][m] x^m."""
    from f2hopf.kernels import transform_product

    n = a.n
    pinv = mat_inv_rows(p.rows, n)
    if pinv is None:
        raise ValueError("singular basis-change matrix")
    v = transform_product(a.v, n, p.rows, pinv)
    eta = 0
    for i in bits_of(a.eta):
        eta ^= pinv[i]
    return AlgebraSC(n, v, eta)


def apply_basis_change_coalgebra(c: CoalgebraSC, p: Gf2Mat) -> CoalgebraSC:
    from f2hopf.kernels import transform_coproduct

    n = c.n
    pinv = mat_inv_rows(p.rows, n)
    if pinv is None:
        raise ValueError("singular basis-change matrix")
    out = transform_coproduct(c.c, n, p.rows, pinv)
    eps = 0
    for a in range(n):
        if parity(p.rows[a] & c.eps):
            eps |= 1 << a
    return CoalgebraSC(n, out, eps)


def apply_basis_change(struct, p: Gf2Mat):
    if isinstance(struct, AlgebraSC):
        return apply_basis_change_algebra(struct, p)
    if isinstance(struct, CoalgebraSC):
        return apply_basis_change_coalgebra(struct, p)
    if isinstance(struct, Bialgebra):
        return Bialgebra(
            apply_basis_change_algebra(struct.alg, p),
            apply_basis_change_coalgebra(struct.coalg, p),
        )
    raise TypeError(f"cannot change basis of {type(struct).__name__}")
