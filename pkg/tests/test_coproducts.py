import random

import pytest

from f2hopf.catalog import BASIS_NAMES, catalog
from f2hopf.coproducts import (
    brute_force_coproducts,
    coalgebra_type,
    enumerate_counits,
    solve_coproduct_tensors,
    solve_coproducts,
)
from f2hopf.golden import HOPF_RAW_COUNTS, RAW_COUNTS, RAW_TYPE_COUNTS
from f2hopf.structure import Bialgebra, CoalgebraSC, check_bialgebra


def test_counits_dim2():
    cat = catalog(2)
    assert enumerate_counits(cat["A"].representative) == [0b01]
    assert enumerate_counits(cat["B"].representative) == [0b01, 0b11]
    # the field F4 admits no algebra map onto F2 at all
    assert enumerate_counits(cat["C"].representative) == []


def test_counits_dim3_algebra_b():
    # eps in {(1,0,0), (1,1,0), (1,0,1)}: both idempotents cannot map to 1
    # since eps(xy) = eps(0) = 0.
    got = enumerate_counits(catalog(3)["B"].representative)
    assert got == [0b001, 0b011, 0b101]


@pytest.mark.parametrize("n", [2, 3])
def test_raw_counts_small(n):
    expected = {2: {"A": 2, "B": 4, "C": 0}, 3: RAW_COUNTS[3]}[n]
    for label, want in expected.items():
        rs = solve_coproducts(catalog(n)[label].representative, label)
        assert len(rs) == want, (n, label)


def test_raw_counts_dim4():
    for label, want in RAW_COUNTS[4].items():
        rs = solve_coproducts(catalog(4)[label].representative, label)
        assert len(rs) == want, label
        if (4, label) in RAW_TYPE_COUNTS:
            assert rs.type_counts() == RAW_TYPE_COUNTS[(4, label)], label
        assert rs.hopf_count == HOPF_RAW_COUNTS.get((4, label), 0), label


def test_type_counts_dim3():
    for (n, label), want in RAW_TYPE_COUNTS.items():
        if n != 3:
            continue
        rs = solve_coproducts(catalog(3)[label].representative, label)
        assert rs.type_counts() == want
        assert rs.hopf_count == HOPF_RAW_COUNTS.get((3, label), 0)


def test_solutions_sound_and_ordered():
    for label in ("B", "G"):
        rs = solve_coproducts(catalog(3)[label].representative, label)
        tensors = [s.coalg.c for s in rs.solutions]
        assert tensors == sorted(tensors)
        assert len(set(tensors)) == len(tensors)
        for s in rs.solutions:
            assert check_bialgebra(Bialgebra(rs.algebra, s.coalg))


def test_completeness_dim2_brute_force():
    for cls in catalog(2).classes:
        rs = solve_coproducts(cls.representative, cls.label)
        brute = brute_force_coproducts(cls.representative)
        assert {(c.c, c.eps) for c in brute} == {
            (s.coalg.c, s.coalg.eps) for s in rs.solutions
        }


def test_completeness_dim3_algebra_d_brute_force():
    cls = catalog(3)["D"]
    rs = solve_coproducts(cls.representative, "D")
    brute = brute_force_coproducts(cls.representative)
    assert {(c.c, c.eps) for c in brute} == {
        (s.coalg.c, s.coalg.eps) for s in rs.solutions
    }


def test_random_candidates_against_full_checker():
    # Solver membership must coincide with the full bialgebra checker on a
    # random sample of coproduct candidates.
    rng = random.Random(37)
    a = catalog(3)["B"].representative
    by_eps = {
        eps: set(solve_coproduct_tensors(a, eps)) for eps in enumerate_counits(a)
    }
    for _ in range(3000):
        eps = rng.choice(list(by_eps))
        c = 1 | (rng.getrandbits(18) << 9)
        valid = bool(check_bialgebra(Bialgebra(a, CoalgebraSC(3, c, eps))))
        assert valid == (c in by_eps[eps])


def test_coalgebra_types_examples():
    from f2hopf.golden import COPRODUCTS_DIM3, TABLES_DIM4

    b4 = next(e for e in COPRODUCTS_DIM3 if e.name == "B.4")
    assert coalgebra_type(b4.coalg) == "D"
    g5 = next(e for e in TABLES_DIM4 if e.name == "G.5")
    assert coalgebra_type(g5.coalg) == "P"
    # a primitive-generator coproduct on the Grassmann plane has type E
    from f2hopf.golden import coalgebra_from_terms

    grass = coalgebra_from_terms(
        BASIS_NAMES[4], "1", x="1.x x.1", y="1.y y.1", z="1.z x.y y.x z.1"
    )
    assert coalgebra_type(grass) == "E"
