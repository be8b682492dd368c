import random

import pytest

from f2hopf.catalog import (
    algebra_from_relations,
    automorphism_group,
    catalog,
    classify_algebras,
    enumerate_algebras,
    identify_algebra,
    quartic_algebra,
    standardize_unit,
    tensor_product_algebra,
)
from f2hopf.gf2 import enumerate_invertible
from f2hopf.golden import COPRODUCTS_DIM3
from f2hopf.structure import apply_basis_change_algebra, check_algebra, dualize_coalgebra


def test_catalog_sizes():
    assert len(catalog(2).classes) == 3
    assert len(catalog(3).classes) == 7
    assert len(catalog(4).classes) == 25


def test_catalog_entries_valid():
    for n in (2, 3, 4):
        for cls in catalog(n).classes:
            assert check_algebra(cls.representative), cls.label


def test_commutativity_split():
    assert [c.label for c in catalog(3).classes if not c.commutative] == ["G"]
    noncomm4 = [c.label for c in catalog(4).classes if not c.commutative]
    assert len(noncomm4) == 9
    assert all(label.startswith("N") for label in noncomm4)


def test_orbit_sizes_sum_to_enumeration():
    assert sum(c.orbit_size for c in catalog(4).classes) == 8184
    assert sum(c.orbit_size for c in catalog(3).classes) == 76
    assert sum(c.orbit_size for c in catalog(2).classes) == 4


def test_canonical_representative_is_orbit_minimum():
    from f2hopf.structure import AlgebraSC

    for n in (2, 3):
        buckets = classify_algebras(enumerate_algebras(n))
        for label, members in buckets.items():
            cls = catalog(n)[label]
            assert cls.canonical == min(a.v for a in members)
            assert check_algebra(AlgebraSC(n, cls.canonical))


def test_automorphism_group_orders():
    assert len(catalog(3)["B"].automorphisms) == 6
    assert len(catalog(3)["C"].automorphisms) == 1
    assert len(catalog(3)["D"].automorphisms) == 2
    assert len(catalog(4)["G"].automorphisms) == 4
    assert len(catalog(4)["NF"].automorphisms) == 8
    assert len(catalog(4)["M"].automorphisms) == 3


def test_automorphism_group_closed():
    for label in ("B", "G"):
        cls = catalog(3)[label]
        group = {m.rows for m in cls.automorphisms}
        mats = automorphism_group(cls.representative)
        assert {m.rows for m in mats} == group
        for a in mats:
            assert a.inverse().rows in group
            for b in mats:
                assert (a * b).rows in group


def test_enumerate_counts():
    assert len(enumerate_algebras(1)) == 1
    assert len(enumerate_algebras(2)) == 4
    assert len(enumerate_algebras(3)) == 76
    assert len(enumerate_algebras(4)) == 8184


def test_enumerate_dim2_brute_force():
    # All four candidate x*x vectors with the unit rows forced, filtered by
    # the full axiom checker; every one is associative, giving 4 tensors.
    from f2hopf.structure import AlgebraSC

    found = set()
    for bits in range(4):
        alg = AlgebraSC(2, 1 | (2 << 2) | (2 << 4) | (bits << 6))
        if check_algebra(alg):
            found.add(alg.v)
    assert found == {a.v for a in enumerate_algebras(2)}
    assert len(found) == 4


def test_enumerate_all_valid_and_classified():
    algs = enumerate_algebras(3)
    assert all(check_algebra(a) for a in algs)
    buckets = classify_algebras(algs)
    assert set(buckets) == set(catalog(3).labels)
    buckets4 = classify_algebras(enumerate_algebras(4))
    assert len(buckets4) == 25
    for label, members in buckets4.items():
        assert len(members) == catalog(4)[label].orbit_size


def test_quartic_identifications():
    # x^4 = a x^3 + b x^2 + c x + d, identified against the catalog.
    table = {
        "0100": "D", "0000": "G", "0001": "G", "0101": "H",
        "1011": "I", "1100": "I", "1000": "J", "1110": "J",
        "0010": "L", "1010": "M", "1101": "M", "0110": "M", "0111": "M",
        "0011": "O", "1001": "O", "1111": "O",
    }
    for key, label in table.items():
        a, b, c, d = (int(ch) for ch in key)
        assert identify_algebra(quartic_algebra(a, b, c, d)) == label, key


def test_cubic_identifications():
    # x^3 = a x^2 + b x + c in dimension 3.
    from f2hopf.gf2 import bits_of
    from f2hopf.structure import AlgebraSC

    table = {"010": "C", "100": "C", "001": "D", "110": "D",
             "000": "E", "111": "E", "011": "F", "101": "F"}
    n = 3
    for key, label in table.items():
        a, b, c = (int(ch) for ch in key)
        x3 = c | (b << 1) | (a << 2)
        powers = [1, 2, 4, x3]
        acc = 0
        for i in bits_of(powers[3]):
            acc ^= powers[i + 1]
        powers.append(acc)
        v = 0
        for i in range(3):
            for j in range(3):
                v |= powers[i + j] << ((i * n + j) * n)
        assert identify_algebra(AlgebraSC(n, v)) == label, key


def test_tensor_product_identifications():
    f2z2 = catalog(2)["A"].representative
    f2_z2 = catalog(2)["B"].representative
    f4 = catalog(2)["C"].representative
    assert identify_algebra(tensor_product_algebra(f2_z2, f2z2)) == "D"
    assert identify_algebra(tensor_product_algebra(f2z2, f2z2)) == "E"
    assert identify_algebra(tensor_product_algebra(f4, f2z2)) == "H"
    assert identify_algebra(tensor_product_algebra(f4, f4)) == "N"
    assert identify_algebra(tensor_product_algebra(f2_z2, f4)) == "N"
    assert identify_algebra(tensor_product_algebra(f2_z2, f2_z2)) == "P"


def test_identify_duals():
    def named(name):
        return next(e for e in COPRODUCTS_DIM3 if e.name == name)

    assert identify_algebra(dualize_coalgebra(named("B.19").coalg)) == "B"
    assert identify_algebra(dualize_coalgebra(named("D.2").coalg)) == "G"
    assert identify_algebra(catalog(4)["NF"].representative) == "NF"


def test_identify_orbit_consistency():
    rng = random.Random(13)
    reps = [c.representative for c in catalog(3).classes]
    mats = enumerate_invertible(3, fix_unit=True)
    for _ in range(1000):
        a = rng.choice(reps)
        p = rng.choice(mats)
        moved = apply_basis_change_algebra(a, p)
        assert identify_algebra(moved) == identify_algebra(a)


def test_standardize_unit():
    dual = dualize_coalgebra(
        next(e for e in COPRODUCTS_DIM3 if e.name == "B.19").coalg
    )
    std, p = standardize_unit(dual)
    assert std.eta == 1
    assert check_algebra(std)
    assert p.rows[0] == dual.eta


def test_identify_after_general_basis_change():
    # moving a standard-form algebra through an arbitrary invertible matrix
    # displaces the unit; identification standardizes it back first
    rng = random.Random(19)
    mats = enumerate_invertible(4)
    for label in ("G", "M", "NF", "P"):
        a = catalog(4)[label].representative
        for _ in range(25):
            moved = apply_basis_change_algebra(a, rng.choice(mats))
            assert identify_algebra(moved) == label


def test_bad_relations_rejected():
    with pytest.raises(ValueError):
        # x(xy) = x while (xx)y = y*y = 0: not associative
        algebra_from_relations(3, "x*x=y; x*y=1")
