import random

import pytest

from linkmaps.diskledger import (
    ACCESSORY_MINUS,
    ACCESSORY_PLUS,
    WHITNEY,
    DiskRecord,
    derive_accessory_twist,
    double_boundary_twist,
    iadic3,
    join_accessory_twists,
    multiplicities,
    parity_claim,
    step8_z2_coefficient,
    whitney_move_effect,
)
from linkmaps.errors import KindMismatch, PreconditionViolated
from linkmaps.laurent import LaurentPoly, ONE, ONE_MINUS_X, X, Z, ZERO, monomial
from linkmaps.realize import Pair, presentation_from_pm, sigma2_of

from helpers import rand_laurent, rand_truncated_presentation


# -- multiplicities -------------------------------------------------------------


def test_multiplicities_examples():
    got = multiplicities(Z)
    assert (got.primary, got.secondary, got.residual) == (0, 0, Z)
    got = multiplicities(2 + 3 * ONE_MINUS_X + Z * Z)
    assert (got.primary, got.secondary, got.residual) == (2, 3, Z * Z)
    for k in (-2, -1, 1, 2):
        got = multiplicities(monomial(k))
        assert (got.primary, got.secondary) == (1, -k)


def test_iadic3_reads_z_coefficient():
    # alpha = m + n(1-x) + q z exactly
    alpha = 2 + 5 * ONE_MINUS_X + 3 * Z
    assert iadic3(alpha) == (2, 5, 3)
    assert iadic3(ONE + X) == (2, -1, 0)


# -- whitney move law --------------------------------------------------------------


def test_whitney_move_effect_examples():
    assert whitney_move_effect(ONE) == ONE_MINUS_X
    assert multiplicities(whitney_move_effect(ONE)).secondary == 1
    assert whitney_move_effect(ZERO) == ZERO
    out = whitney_move_effect(monomial(-1))
    assert out == monomial(-1) - ONE
    got = multiplicities(out)
    assert (got.primary, got.secondary) == (0, 1)


def test_whitney_move_effect_random_law():
    rng = random.Random(41)
    for _ in range(200):
        u = rand_laurent(rng, 5, 9)
        got = multiplicities(whitney_move_effect(u))
        assert got.primary == 0
        assert got.secondary == u.augment()


# -- boundary twisting ----------------------------------------------------------------


def W(lam, tw=0):
    return DiskRecord(WHITNEY, lam, tw)


def AP(lam, tw=0):
    return DiskRecord(ACCESSORY_PLUS, lam, tw)


def AM(lam, tw=0):
    return DiskRecord(ACCESSORY_MINUS, lam, tw)


def test_double_boundary_twist_kills_secondary():
    w = W(5 * ONE_MINUS_X)
    a = AP(ONE)
    out = double_boundary_twist(w, a, -5)
    assert out.secondary == 0
    assert out.primary == w.primary
    assert out.twisting == w.twisting


def test_double_boundary_twist_edge_cases():
    w = W(2 + ONE_MINUS_X, tw=0)
    a = AM(ONE + Z)
    assert double_boundary_twist(w, a, 0) == w
    zero_primary = AP(ONE_MINUS_X)
    assert double_boundary_twist(w, zero_primary, 7).secondary == w.secondary


def test_double_boundary_twist_additive_in_k():
    rng = random.Random(43)
    for _ in range(50):
        w = W(rand_laurent(rng, 3, 5))
        a = AP(rand_laurent(rng, 3, 5))
        k1, k2 = rng.randint(-4, 4), rng.randint(-4, 4)
        assert double_boundary_twist(double_boundary_twist(w, a, k1), a, k2) == (
            double_boundary_twist(w, a, k1 + k2)
        )


def test_double_boundary_twist_kind_errors():
    with pytest.raises(KindMismatch):
        double_boundary_twist(AP(ONE), AP(ONE), 1)
    with pytest.raises(KindMismatch):
        double_boundary_twist(W(ONE), W(ONE), 1)


# -- twisting sums -----------------------------------------------------------------------


def test_twisting_sums():
    assert join_accessory_twists(AP(ZERO, 0), AM(ZERO, 0)) == 0
    assert join_accessory_twists(AP(ZERO, 2), AM(ZERO, -2)) == 0
    assert join_accessory_twists(AP(ZERO, 1), AM(ZERO, 0)) == 1
    assert derive_accessory_twist(W(ZERO, 0), AP(ZERO, 0)) == 0
    assert derive_accessory_twist(W(ZERO, 3), AP(ZERO, 1)) == 4


def test_twisting_round_trip_grid():
    for w_tw in range(-10, 11):
        for a_tw in range(-10, 11):
            derived = derive_accessory_twist(W(ZERO, w_tw), AP(ZERO, a_tw))
            back = join_accessory_twists(AP(ZERO, a_tw), AM(ZERO, derived))
            assert back == w_tw + 2 * a_tw
            if a_tw == 0:
                assert back == w_tw


def test_twisting_kind_errors():
    with pytest.raises(KindMismatch):
        join_accessory_twists(AP(ZERO), AP(ZERO))
    with pytest.raises(KindMismatch):
        derive_accessory_twist(AP(ZERO), AP(ZERO))


# -- the z^2-coefficient identity ----------------------------------------------------------


def test_step8_zero_presentation():
    p = presentation_from_pm([], [], [])
    assert step8_z2_coefficient(p) == 0


def test_step8_one_minus_x_example():
    p = presentation_from_pm([Pair(1, 0)], [ONE_MINUS_X], [ZERO])
    assert step8_z2_coefficient(p) == 1
    assert sigma2_of(p)[2] == 1


def test_step8_balanced_cancellation():
    p = presentation_from_pm([Pair(1, 1)], [ONE], [ONE])
    assert step8_z2_coefficient(p) == 0
    assert sigma2_of(p).is_zero


def test_step8_matches_sigma2_random():
    rng = random.Random(47)
    for _ in range(150):
        p = rand_truncated_presentation(rng)
        assert step8_z2_coefficient(p) == sigma2_of(p)[2]


def test_step8_literal_symmetric_difference_form():
    from linkmaps.pi2 import ACCESSORY_PM, change_basis

    rng = random.Random(53)
    for _ in range(80):
        p = rand_truncated_presentation(rng)
        pm = change_basis(p.f2, ACCESSORY_PM)
        total = 0
        for i in range(p.n):
            m_p, n_p, q_p = iadic3(pm.first_half()[i])
            m_m, n_m, q_m = iadic3(pm.second_half()[i])
            assert m_p == m_m
            total += (n_p**2 - n_m**2) + (n_p - n_m) * m_p + 2 * m_p * (q_p - q_m)
        assert total == step8_z2_coefficient(p)


# -- parity ------------------------------------------------------------------------------


def test_parity_trivial_cases():
    assert parity_claim(presentation_from_pm([], [], []))


def test_parity_two_cancelling_defects():
    # two multiplicity-0 pairs with defects +1 and -1; self-pairing cancels
    p = presentation_from_pm(
        [Pair(1, 0), Pair(1, 0)],
        [ONE_MINUS_X, ZERO],
        [ZERO, ONE_MINUS_X],
    )
    assert parity_claim(p)


def test_parity_rejects_nonzero_self_pairing():
    p = presentation_from_pm([Pair(1, 0)], [ONE_MINUS_X], [ZERO])
    with pytest.raises(PreconditionViolated):
        parity_claim(p)


def test_parity_rejects_large_primaries():
    p = presentation_from_pm([Pair(1, 2)], [2 * ONE], [2 * ONE])
    with pytest.raises(PreconditionViolated):
        parity_claim(p)
