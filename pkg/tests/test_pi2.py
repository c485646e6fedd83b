import random

import pytest

from linkmaps.errors import DimensionMismatch
from linkmaps.forms import as_matrix, divide_form_by_z, evaluate, is_unimodular
from linkmaps.laurent import LaurentPoly, ONE, ONE_MINUS_X, X, Z, ZERO, monomial
from linkmaps.pi2 import (
    ACCESSORY_PM,
    BasisKind,
    SphereClass,
    WHITNEY_ACCESSORY,
    accessory_pm_sphere,
    accessory_sphere,
    change_basis,
    check_metabolic_collection,
    check_unlinking_conditions,
    lam,
    metabolic_form,
    whitney_disk_pairing,
    whitney_sphere,
    zero_class,
)

from helpers import rand_laurent


def wa(n):
    return BasisKind(WHITNEY_ACCESSORY, n)


def pm(n):
    return BasisKind(ACCESSORY_PM, n)


def rand_class(rng, n, tag=WHITNEY_ACCESSORY):
    basis = BasisKind(tag, n)
    return SphereClass(basis, tuple(rand_laurent(rng, 3, 4) for _ in range(2 * n)))


# -- the metabolic form ------------------------------------------------------------


def test_metabolic_form_wa_n1():
    assert metabolic_form(wa(1)).gram == as_matrix([[0, Z], [Z, Z]])


def test_metabolic_form_pm_n1():
    assert metabolic_form(pm(1)).gram == as_matrix([[Z, 0], [0, -Z]])


def test_metabolic_form_empty():
    assert metabolic_form(wa(0)).gram == ()


def test_metabolic_form_values_general():
    for n in range(1, 6):
        f = metabolic_form(wa(n))
        for i in range(n):
            for j in range(n):
                assert f.gram[i][j] == ZERO
                assert f.gram[n + i][n + j] == (Z if i == j else ZERO)
                assert f.gram[i][n + j] == (Z if i == j else ZERO)
        g = metabolic_form(pm(n))
        for i in range(n):
            for j in range(n):
                assert g.gram[i][j] == (Z if i == j else ZERO)
                assert g.gram[n + i][n + j] == (-Z if i == j else ZERO)
                assert g.gram[i][n + j] == ZERO


def test_wa_form_divided_by_z_is_unimodular():
    for n in range(1, 6):
        assert is_unimodular(divide_form_by_z(metabolic_form(wa(n))))


# -- change of basis ----------------------------------------------------------------


def test_whitney_sphere_in_pm_coordinates():
    c = change_basis(whitney_sphere(1, 0), ACCESSORY_PM)
    assert c.coeffs == (ONE, -ONE)


def test_accessory_plus_maps_to_accessory():
    c = change_basis(accessory_pm_sphere(1, 0, +1), WHITNEY_ACCESSORY)
    assert c == accessory_sphere(1, 0)


def test_change_basis_round_trip():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(0, 5)
        c = rand_class(rng, n, rng.choice((WHITNEY_ACCESSORY, ACCESSORY_PM)))
        other = ACCESSORY_PM if c.basis.tag == WHITNEY_ACCESSORY else WHITNEY_ACCESSORY
        assert change_basis(change_basis(c, other), c.basis.tag) == c
    assert change_basis(zero_class(wa(2)), ACCESSORY_PM).is_zero


def test_change_basis_preserves_pairing():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = rand_class(rng, n)
        b = rand_class(rng, n)
        assert lam(a, b) == lam(change_basis(a, ACCESSORY_PM), change_basis(b, ACCESSORY_PM))


def test_lam_matches_materialized_form():
    rng = random.Random(5)
    for tag in (WHITNEY_ACCESSORY, ACCESSORY_PM):
        for _ in range(20):
            n = rng.randint(1, 4)
            a = rand_class(rng, n, tag)
            b = rand_class(rng, n, tag)
            f = metabolic_form(BasisKind(tag, n))
            assert lam(a, b) == evaluate(f, a.coeffs, b.coeffs)


# -- pairing values -----------------------------------------------------------------


def test_lam_examples():
    assert lam(whitney_sphere(1, 0), accessory_sphere(1, 0)) == Z
    a = accessory_sphere(1, 0).scale(monomial(3))
    assert lam(a, a) == Z
    assert lam(whitney_sphere(2, 0), whitney_sphere(2, 1)) == ZERO


def test_lam_is_hermitian():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = rand_class(rng, n)
        b = rand_class(rng, n)
        assert lam(b, a) == lam(a, b).involute()


def test_lam_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        lam(whitney_sphere(1, 0), whitney_sphere(2, 0))


# -- whitney disk pairing -----------------------------------------------------------


def test_pairing_exactness_examples():
    assert whitney_disk_pairing(accessory_sphere(2, 1)) == (ZERO, ONE)
    mix = whitney_sphere(2, 0).scale(5) + whitney_sphere(2, 1).scale(ONE - X)
    assert whitney_disk_pairing(mix) == (ZERO, ZERO)
    assert whitney_disk_pairing(accessory_sphere(2, 0).scale(Z)) == (Z, ZERO)


def test_pairing_relation_with_whitney_spheres():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 4)
        c = rand_class(rng, n)
        pairing = whitney_disk_pairing(c)
        for i in range(n):
            assert lam(c, whitney_sphere(n, i)) == Z * pairing[i]


def test_pairing_surjectivity_witness():
    for n in range(1, 4):
        for i in range(n):
            target = whitney_disk_pairing(accessory_sphere(n, i))
            assert target == tuple(ONE if j == i else ZERO for j in range(n))


# -- condition checks ----------------------------------------------------------------


def test_conditions_whitney_span():
    f2 = whitney_sphere(2, 0).scale(3) + whitney_sphere(2, 1).scale(ONE - X)
    report = check_unlinking_conditions(f2)
    assert report.condition_ii and report.condition_iii


def test_conditions_key_instance():
    f2 = SphereClass(wa(1), (-ONE_MINUS_X, Z))
    # self-pairing cancels exactly: z^3 + (a + involute(a)) z^2 with a = -(1-x)
    assert lam(f2, f2) == ZERO
    report = check_unlinking_conditions(f2)
    assert not report.condition_ii
    assert report.condition_iii


def test_conditions_accessory_only():
    report = check_unlinking_conditions(accessory_sphere(1, 0))
    assert not report.condition_ii
    assert not report.condition_iii


def test_metabolic_collection_check():
    zeros = [[ZERO, ZERO], [ZERO, ZERO]]
    assert check_metabolic_collection(zeros, zeros)
    bad = [[ZERO, ONE], [ZERO, ZERO]]
    assert not check_metabolic_collection(zeros, bad)
    assert check_metabolic_collection([], [])
