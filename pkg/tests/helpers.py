"""Shared oracles and random generators for the test suite.

The convolution oracle multiplies dense coefficient lists with the
classic double loop, independently of the sparse dict arithmetic in the
package, so products asserted in tests are computed two ways.
"""

from __future__ import annotations

import random

from linkmaps.laurent import LaurentPoly, ONE, ZERO, Z, symmetric_half
from linkmaps.pi2 import BasisKind, SphereClass, WHITNEY_ACCESSORY
from linkmaps.realize import Pair, Presentation, presentation_from_pm


def dense_convolution(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Product via dense list convolution (independent of LaurentPoly.__mul__)."""
    if a.is_zero or b.is_zero:
        return ZERO
    alo, ahi = a.min_exp(), a.max_exp()
    blo, bhi = b.min_exp(), b.max_exp()
    da = [a[e] for e in range(alo, ahi + 1)]
    db = [b[e] for e in range(blo, bhi + 1)]
    out = [0] * (len(da) + len(db) - 1)
    for i, ca in enumerate(da):
        for j, cb in enumerate(db):
            out[i + j] += ca * cb
    return LaurentPoly({alo + blo + k: c for k, c in enumerate(out)})


def rand_laurent(rng: random.Random, span: int = 6, bound: int = 10) -> LaurentPoly:
    lo = rng.randint(-span, 0)
    hi = rng.randint(0, span)
    return LaurentPoly({e: rng.randint(-bound, bound) for e in range(lo, hi + 1)})


def rand_nonzero_laurent(rng: random.Random, span: int = 6, bound: int = 10) -> LaurentPoly:
    while True:
        p = rand_laurent(rng, span, bound)
        if not p.is_zero:
            return p


def rand_nonsymmetric_laurent(rng: random.Random, span: int = 6, bound: int = 10) -> LaurentPoly:
    while True:
        p = rand_laurent(rng, span, bound)
        if not p.is_symmetric():
            return p


def rand_with_augmentation(
    rng: random.Random, aug: int, span: int = 6, bound: int = 10
) -> LaurentPoly:
    p = rand_laurent(rng, span, bound)
    return p + (aug - p.augment())


def rand_zpoly_multiple_of_z(rng: random.Random, deg: int, bound: int):
    from linkmaps.laurent import ZPoly

    return ZPoly((0,) + tuple(rng.randint(-bound, bound) for _ in range(deg)))


def rand_presentation(
    rng: random.Random, n_max: int = 4, m_max: int = 4, span: int = 6, bound: int = 6
) -> Presentation:
    """A random valid presentation mixing generator and balanced pairs."""
    n = rng.randint(0, n_max)
    pairs, plus, minus = [], [], []
    for _ in range(n):
        shape = rng.choice(("plus", "minus", "balanced"))
        if shape == "plus":
            m = rng.randint(1, m_max)
            pairs.append(Pair(1, m))
            plus.append(rand_with_augmentation(rng, rng.choice((m, -m)), span, bound))
            minus.append(rand_with_augmentation(rng, 0, span, bound))
        elif shape == "minus":
            m = rng.randint(1, m_max)
            pairs.append(Pair(-1, m))
            plus.append(rand_with_augmentation(rng, 0, span, bound))
            minus.append(rand_with_augmentation(rng, rng.choice((m, -m)), span, bound))
        else:
            m = rng.randint(0, m_max)
            pairs.append(Pair(rng.choice((1, -1)), m))
            plus.append(rand_with_augmentation(rng, rng.choice((m, -m)), span, bound))
            minus.append(rand_with_augmentation(rng, rng.choice((m, -m)), span, bound))
    return presentation_from_pm(pairs, plus, minus)


def rand_condition_iii_presentation(
    rng: random.Random, n: int, span: int = 3, bound: int = 4
) -> Presentation:
    """A random presentation with vanishing self-pairing and z-divisible
    Whitney-disk pairings: f2 = sum a_i S_Wi + z c_i S_Ai, the last
    Whitney coefficient solved so the self-pairing cancels exactly."""
    assert n >= 1
    a = [rand_laurent(rng, span, bound) for _ in range(n - 1)]
    c = [rand_laurent(rng, span, bound) for _ in range(n - 1)]
    c.append(ONE)
    need = ZERO
    for ci in c:
        need = need + ci * ci.involute()
    need = -(Z * need)
    for ai, ci in zip(a, c[:-1]):
        need = need - (ai * ci.involute() + ai.involute() * ci)
    last = symmetric_half(need)
    assert last is not None
    a.append(last)
    coeffs = tuple(a) + tuple(Z * ci for ci in c)
    f2 = SphereClass(BasisKind(WHITNEY_ACCESSORY, n), coeffs)
    pairs = tuple(Pair(1, abs(ai.augment())) for ai in a)
    return Presentation(pairs, f2)


def rand_truncated_presentation(
    rng: random.Random, n_max: int = 4, m_max: int = 3, bound: int = 5
) -> Presentation:
    """Balanced pairs with coordinates exactly m + n(1-x) + q*z (equal primaries)."""
    from linkmaps.laurent import ONE_MINUS_X

    n = rng.randint(1, n_max)
    pairs, plus, minus = [], [], []
    for _ in range(n):
        m = rng.randint(0, m_max)
        pairs.append(Pair(rng.choice((1, -1)), m))
        for side in (plus, minus):
            nn = rng.randint(-bound, bound)
            qq = rng.randint(-bound, bound)
            side.append(m + nn * ONE_MINUS_X + qq * Z)
    return presentation_from_pm(pairs, plus, minus)
