"""Presentations of link maps and realization of prescribed Kirk pairs.

A presentation records, for a standard immersion with n self-intersection
pairs, the per-pair bookkeeping {sign, m} together with the coordinates of
the second sphere over the signed accessory basis.  The augmentations
e+ = aug(alpha_i^+), e- = aug(alpha_i^-) of the i-th coordinates are tied
to the pair data by one of three shapes:

* plus-generator:  sign = +1, |e+| = m,  e- = 0   (m > 0);
* minus-generator: sign = -1,  e+ = 0,  |e-| = m  (m > 0);
* balanced:        |e+| = |e-| = m  (any sign; the only shape with m = 0).

A single pair contributes  G(|e+|) - G(|e-|)  to sigma1, where
G(m) = z * P_m * involute(P_m)  is the self-intersection polynomial of a
multiplicity-m pair and P_m = 1 + x + ... + x^{m-1}; so generator pairs
contribute +/- G(m) and balanced pairs contribute nothing.  In particular
sigma1 and sigma2 are unchanged by the stabilizations in ``unlink`` (which
append balanced pairs), as they must be for quantities invariant under
link homotopy.

Realization goes the other way: ``realize`` builds an explicit
presentation with any prescribed valid Kirk pair, by greedy top-degree
elimination over the generators G(m) for sigma1 and correction pairs
alpha = (1-x)*beta with beta in {1, 1-x^k} for the sigma2 residue (which
the symmetry constraint guarantees is a z^2-multiple).  Every output is
re-verified before being returned.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import InternalVerificationFailure, InvalidPresentation
from .kirk import KirkPair, make_kirk
from .laurent import (
    LaurentPoly,
    ONE,
    ONE_MINUS_X,
    ZERO,
    Z,
    ZPoly,
    monomial,
    z_decompose,
)
from .pi2 import ACCESSORY_PM, BasisKind, SphereClass, change_basis


@dataclass(frozen=True)
class Pair:
    """One self-intersection pair: an orientation sign and a multiplicity."""

    sign: int
    m: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InvalidPresentation(f"sign must be +1 or -1, got {self.sign}")
        if self.m < 0:
            raise InvalidPresentation(f"multiplicity must be nonnegative, got {self.m}")


@dataclass(frozen=True)
class Presentation:
    pairs: tuple[Pair, ...]
    f2: SphereClass

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        if self.f2.n != len(self.pairs):
            raise InvalidPresentation(
                f"{len(self.pairs)} pairs but coordinates over rank {self.f2.n}"
            )
        pm = change_basis(self.f2, ACCESSORY_PM)
        plus, minus = pm.first_half(), pm.second_half()
        for i, (pair, cp, cm) in enumerate(zip(self.pairs, plus, minus)):
            ep, em = abs(cp.augment()), abs(cm.augment())
            m = pair.m
            if ep == m and (em == m or (pair.sign == 1 and em == 0)):
                continue
            if pair.sign == -1 and ep == 0 and em == m:
                continue
            raise InvalidPresentation(
                f"pair {i}: augmentations ({ep}, {em}) do not fit sign "
                f"{pair.sign:+d} with multiplicity {pair.m}"
            )

    @property
    def n(self) -> int:
        return len(self.pairs)


def empty_presentation() -> Presentation:
    return Presentation((), SphereClass(BasisKind(ACCESSORY_PM, 0), ()))


def presentation_from_pm(pairs, plus_coeffs, minus_coeffs) -> Presentation:
    n = len(pairs)
    f2 = SphereClass(BasisKind(ACCESSORY_PM, n), tuple(plus_coeffs) + tuple(minus_coeffs))
    return Presentation(tuple(pairs), f2)


# -- the sigma generators ------------------------------------------------------

_POWER_SUMS: dict[int, LaurentPoly] = {}
_GENERATORS: dict[int, ZPoly] = {}


def power_sum(k: int) -> LaurentPoly:
    """P_k = 1 + x + ... + x^{k-1} (so P_0 = 0); augmentation k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k not in _POWER_SUMS:
        _POWER_SUMS[k] = LaurentPoly({e: 1 for e in range(k)})
    return _POWER_SUMS[k]


def sigma_generator(m: int) -> ZPoly:
    """G(m) = 2 - x^m - x^{-m} = z * P_m * involute(P_m), as a z-polynomial.

    Even in m; z-degree |m| with extreme coefficient (-1)^{m+1}.
    """
    m = abs(m)
    if m not in _GENERATORS:
        value = 2 - monomial(m) - monomial(-m)
        _GENERATORS[m] = z_decompose(value, 0)
    return _GENERATORS[m]


# -- reading the invariants off a presentation --------------------------------


def pair_augmentations(p: Presentation) -> list[tuple[int, int]]:
    """Per-pair (aug(alpha+), aug(alpha-)) in the signed accessory basis."""
    pm = change_basis(p.f2, ACCESSORY_PM)
    plus, minus = pm.first_half(), pm.second_half()
    return [(plus[i].augment(), minus[i].augment()) for i in range(p.n)]


def sigma1_of(p: Presentation) -> ZPoly:
    """First self-intersection polynomial: sum of G(|e+|) - G(|e-|) over pairs."""
    pm = change_basis(p.f2, ACCESSORY_PM)
    n = p.n
    counts: Counter[int] = Counter()
    for c, cnt in Counter(pm.coeffs[:n]).items():
        counts[abs(c.augment())] += cnt
    for c, cnt in Counter(pm.coeffs[n:]).items():
        counts[abs(c.augment())] -= cnt
    out = ZPoly(())
    for m, cnt in counts.items():
        if cnt and m:
            out = out + cnt * sigma_generator(m)
    return out


def self_pairing(p: Presentation) -> LaurentPoly:
    """lam(f2, f2), grouped by distinct coordinate values for scale."""
    pm = change_basis(p.f2, ACCESSORY_PM)
    n = p.n
    counts: Counter[LaurentPoly] = Counter(pm.coeffs[:n])
    counts.subtract(Counter(pm.coeffs[n:]))
    acc = ZERO
    for c, cnt in counts.items():
        if cnt and not c.is_zero:
            acc = acc + (c * c.involute()) * cnt
    return Z * acc


def sigma2_of(p: Presentation) -> ZPoly:
    """Second self-intersection polynomial: the z-expansion of lam(f2, f2)."""
    return z_decompose(self_pairing(p), 0)


def invariants_of(p: Presentation) -> KirkPair:
    return make_kirk(sigma1_of(p), sigma2_of(p))


# -- realization ----------------------------------------------------------------


def realize_sigma1(target: ZPoly) -> list[Pair]:
    """Signed pairs whose sigma1 contributions sum to ``target`` exactly.

    Requires target in z*Z[z].  Greedy top-degree elimination: G(d) is the
    unique generator reaching z-degree d and its leading coefficient is
    (-1)^{d+1}, so each step strictly reduces the degree; consequently
    every emitted multiplicity is at most the z-degree of the target.
    """
    if target[0] != 0:
        raise ValueError("target must be a z-multiple")
    pairs: list[Pair] = []
    rest = target
    while not rest.is_zero:
        d = rest.degree()
        lead = sigma_generator(d)[d]
        count = rest[d] * lead  # lead is +/-1
        sign = 1 if count > 0 else -1
        pairs.extend([Pair(sign, d)] * abs(count))
        rest = rest - count * sigma_generator(d)
    return pairs


def realize_sigma2_correction(target: ZPoly) -> list[tuple[int, LaurentPoly]]:
    """Signed translation coefficients beta with sum of +/- beta*involute(beta)*z^2 = target.

    Requires target in z^2*Z[z].  Each beta is 1 or 1 - x^k; the
    corresponding presentation pair carries alpha = (1-x)*beta, which has
    augmentation zero and therefore no sigma1 contribution.
    """
    if target[0] != 0 or target[1] != 0:
        raise ValueError("target must be a z^2-multiple")
    out: list[tuple[int, LaurentPoly]] = []
    # tau := target / z^2; realize tau over {1} u {G(k)} since
    # (1-x^k)(1-x^{-k}) = G(k) and 1*1 = 1.
    tau = ZPoly(target.coeffs[2:])
    while tau.degree() >= 1:
        d = tau.degree()
        lead = sigma_generator(d)[d]
        count = tau[d] * lead
        sign = 1 if count > 0 else -1
        beta = ONE - monomial(d)
        out.extend([(sign, beta)] * abs(count))
        tau = tau - count * sigma_generator(d)
    const = tau[0]
    if const:
        sign = 1 if const > 0 else -1
        out.extend([(sign, ONE)] * abs(const))
    return out


def realize(target: KirkPair) -> Presentation:
    """An explicit presentation whose invariants are exactly ``target``.

    Stage one realizes sigma1 with generator pairs carrying alpha = P_m on
    the sign-side sphere; these contribute the same polynomial to both
    invariants, so the remaining sigma2 discrepancy is a z^2-multiple and
    stage two appends multiplicity-0 correction pairs for it.  The output
    is re-verified by recomputing both invariants.
    """
    pairs: list[Pair] = []
    plus: list[LaurentPoly] = []
    minus: list[LaurentPoly] = []

    for pair in realize_sigma1(target.sigma1):
        pairs.append(pair)
        alpha = power_sum(pair.m)
        if pair.sign == 1:
            plus.append(alpha)
            minus.append(ZERO)
        else:
            plus.append(ZERO)
            minus.append(alpha)

    # Generator pairs contribute sigma1 to both components, so the residue
    # is target.sigma2 - target.sigma1, a z^2-multiple by pair validity.
    residue = target.sigma2 - target.sigma1
    for sign, beta in realize_sigma2_correction(residue):
        pairs.append(Pair(1 if sign > 0 else -1, 0))
        alpha = ONE_MINUS_X * beta
        if sign > 0:
            plus.append(alpha)
            minus.append(ZERO)
        else:
            plus.append(ZERO)
            minus.append(alpha)

    out = presentation_from_pm(pairs, plus, minus)
    check = invariants_of(out)
    if check != target:
        raise InternalVerificationFailure(
            f"realized ({check.sigma1}, {check.sigma2}), wanted "
            f"({target.sigma1}, {target.sigma2})"
        )
    return out
