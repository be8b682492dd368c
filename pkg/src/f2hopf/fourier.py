"""Right integrals, Fourier transforms, transport along the quiver, and
holonomy composition.

The transform F maps H to its dual; composing with an identification of the
dual basis with the standard basis of the target algebra gives a 'transport'
matrix attached to the quiver arrow.  Identifications come in two modes:
'computed' (lexicographically smallest algebra isomorphism, deterministic)
and 'fixture' (the frozen identifications shipped with the golden data).
"""

from __future__ import annotations

from dataclasses import dataclass

from f2hopf.catalog import catalog
from f2hopf.gf2 import Gf2Mat, Gf2Vec, bits_of, enumerate_invertible, solve_linear
from f2hopf.structure import (
    AlgebraSC,
    CoalgebraSC,
    HopfAlgebra,
    apply_basis_change_algebra,
    dualize_coalgebra,
)


class IntegralError(RuntimeError):
    """The right-integral system does not have a one-dimensional solution
    space; the input is not a Hopf algebra in the expected sense."""


def right_integral(h: HopfAlgebra) -> Gf2Vec:
    """The unique nonzero right integral: (I (x) id) Delta = 1 . I."""
    c = h.coalg
    n = h.n
    rows = []
    for mu in range(n):
        for rho in range(n):
            row = 0
            for nu in range(n):
                if (c.cop(mu) >> (nu * n + rho)) & 1:
                    row ^= 1 << nu
            if rho == 0:
                row ^= 1 << mu
            rows.append(row)
    sol = solve_linear(Gf2Mat(tuple(rows), n), Gf2Vec(len(rows), 0))
    if sol is None or len(sol.nullspace) != 1:
        raise IntegralError("right-integral space is not one-dimensional")
    return sol.nullspace[0]


def right_cointegral(h: HopfAlgebra) -> Gf2Vec:
    """The unique nonzero element L with L h = eps(h) L for all h."""
    a, c = h.alg, h.coalg
    n = h.n
    rows = []
    for beta in range(n):
        for mu in range(n):
            row = 0
            for alpha in range(n):
                if (a.prod(alpha, beta) >> mu) & 1:
                    row ^= 1 << alpha
            if (c.eps >> beta) & 1:
                row ^= 1 << mu
            rows.append(row)
    sol = solve_linear(Gf2Mat(tuple(rows), n), Gf2Vec(len(rows), 0))
    if sol is None or len(sol.nullspace) != 1:
        raise IntegralError("right-cointegral space is not one-dimensional")
    return sol.nullspace[0]


@dataclass(frozen=True)
class FourierData:
    """Fourier matrix F, adjoint F#, the dual-basis identification and the
    resulting transport onto the target algebra's standard basis."""

    integral: Gf2Vec
    f: Gf2Mat
    f_sharp: Gf2Mat
    dual_identification: Gf2Mat
    transport: Gf2Mat


def fourier_matrices(h: HopfAlgebra) -> tuple[Gf2Vec, Gf2Mat, Gf2Mat]:
    """(integral, F, F#) with F[mu][nu] = integral of x^nu x^mu and the
    adjoint integrating x^mu x^nu; F is checked invertible."""
    a = h.alg
    n = h.n
    i = right_integral(h)
    f_rows = []
    fs_rows = []
    for mu in range(n):
        row = 0
        srow = 0
        for nu in range(n):
            if (a.prod(nu, mu) & i.bits).bit_count() & 1:
                row |= 1 << nu
            if (a.prod(mu, nu) & i.bits).bit_count() & 1:
                srow |= 1 << nu
        f_rows.append(row)
        fs_rows.append(srow)
    f = Gf2Mat(tuple(f_rows), n)
    if f.inverse() is None:
        raise IntegralError("Fourier matrix is singular")
    return i, f, Gf2Mat(tuple(fs_rows), n)


def computed_identification(coalg: CoalgebraSC, target: AlgebraSC) -> Gf2Mat:
    """Lexicographically smallest algebra isomorphism from the dual algebra
    of the coalgebra (on the dual basis) onto the target standard form.

    Row mu of the result expresses the dual basis element y_mu in the
    target's standard basis.
    """
    dual = dualize_coalgebra(coalg)
    n = dual.n
    for m in enumerate_invertible(n):
        # The unit of the dual is eps; it must land on the target unit.
        img_unit = 0
        for i in bits_of(dual.eta):
            img_unit ^= m.rows[i]
        if img_unit != 1:
            continue
        if apply_basis_change_algebra(dual, m.inverse()).v == target.v:
            return m
    raise RuntimeError("dual algebra is not isomorphic to the target")


def transport_matrix(h: HopfAlgebra, identification: Gf2Mat) -> Gf2Mat:
    """Transport = F composed with the dual-basis identification."""
    _, f, _ = fourier_matrices(h)
    return f * identification


def fourier_data(h: HopfAlgebra, identification: Gf2Mat | None = None) -> FourierData:
    i, f, fs = fourier_matrices(h)
    if identification is None:
        from f2hopf.coproducts import coalgebra_type

        target_label = coalgebra_type(h.coalg)
        identification = computed_identification(
            h.coalg, catalog(h.n)[target_label].representative
        )
    return FourierData(i, f, fs, identification, f * identification)


def holonomy(transports: list[Gf2Mat]) -> tuple[Gf2Mat, int]:
    """Ordered product of transport matrices along a composable path, with
    its multiplicative order."""
    acc = transports[0]
    for t in transports[1:]:
        acc = acc * t
    return acc, acc.order()


def dual_transport_back(h: HopfAlgebra) -> Gf2Mat:
    """The Fourier transform of the dual Hopf algebra, written as a map from
    the dual basis back to the original basis (no identification choices).

    Row mu is F_{H*}(y_mu) expressed in the x basis; its (mu, nu) entry is
    the cointegral paired against y_nu y_mu.
    """
    c = h.coalg
    n = h.n
    lam = right_cointegral(h)
    rows = []
    for mu in range(n):
        row = 0
        for nu in range(n):
            acc = 0
            for gamma in bits_of(lam.bits):
                acc ^= (c.cop(gamma) >> (nu * n + mu)) & 1
            if acc:
                row |= 1 << nu
        rows.append(row)
    return Gf2Mat(tuple(rows), n)


def canonical_round_trip(h: HopfAlgebra) -> Gf2Mat:
    """F followed by the dual Fourier transform, identifying the double dual
    with the original space through the canonical dual-basis pairing.

    Equals the antipode whenever the coproduct is cocommutative.
    """
    _, f, _ = fourier_matrices(h)
    return f * dual_transport_back(h)


def adjoint_dual_transport_back(h: HopfAlgebra) -> Gf2Mat:
    """The adjoint Fourier transform of the dual (reversed multiplication
    order in the integrand), as a map from the dual basis back to H."""
    c = h.coalg
    n = h.n
    lam = right_cointegral(h)
    rows = []
    for mu in range(n):
        row = 0
        for nu in range(n):
            acc = 0
            for gamma in bits_of(lam.bits):
                acc ^= (c.cop(gamma) >> (mu * n + nu)) & 1
            if acc:
                row |= 1 << nu
        rows.append(row)
    return Gf2Mat(tuple(rows), n)


def adjoint_round_trip(h: HopfAlgebra) -> Gf2Mat:
    """F followed by the adjoint transform of the dual; equals the antipode
    for every finite-dimensional Hopf algebra here (checked exhaustively)."""
    _, f, _ = fourier_matrices(h)
    return f * adjoint_dual_transport_back(h)
