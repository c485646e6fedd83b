"""Quantitative bookkeeping for Whitney and accessory disks.

Disk records are algebraic shadows: a kind, the disk's pairing against the
second sphere, and its twisting (relative Euler number).  The geometric
moves themselves are not replayed; only their arithmetic consequences are
implemented:

* primary/secondary multiplicities (m, n) read off the expansion
  lam(D, f2) = m + n(1-x) + P with P of filtration order >= 2;
* the Whitney-move law lam(D', f2) = (1-x) * lam(U, f2), whose corollaries
  are that D' has primary multiplicity 0 and secondary multiplicity equal
  to the primary multiplicity of U;
* the double boundary-twist, which shifts a Whitney disk's secondary
  multiplicity by any integer multiple of an accessory disk's primary
  multiplicity while preserving its primary multiplicity and framing;
* the twisting sums  omega(W) = omega(A+) + omega(A-)  and
  omega(A-) = omega(W) + omega(A+);
* the z^2-coefficient identity for the self-pairing of the second sphere,
  expressed through the mod-I^3 data of a presentation's coordinates, and
  the parity consequence it forces.

Truncation note: since z = -x^{-1}(1-x)^2, one has z = -(1-x)^2 modulo
order three, so the q in  alpha = m + n(1-x) + q*z (mod I^3)  is minus the
third coefficient of the (1-x)-expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import KindMismatch, PreconditionViolated
from .laurent import LaurentPoly, ONE_MINUS_X, i_adic_expand, i_adic_order
from .realize import Presentation, self_pairing, sigma2_of
from .pi2 import ACCESSORY_PM, change_basis

WHITNEY = "W"
ACCESSORY_PLUS = "A+"
ACCESSORY_MINUS = "A-"
_KINDS = (WHITNEY, ACCESSORY_PLUS, ACCESSORY_MINUS)


@dataclass(frozen=True)
class DiskRecord:
    kind: str
    lambda_f2: LaurentPoly
    twisting: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise KindMismatch(f"unknown disk kind {self.kind!r}")

    @property
    def primary(self) -> int:
        return self.lambda_f2.augment()

    @property
    def secondary(self) -> int:
        return i_adic_expand(self.lambda_f2, 2)[1]

    @property
    def is_framed(self) -> bool:
        return self.twisting == 0


@dataclass(frozen=True)
class Multiplicities:
    primary: int
    secondary: int
    residual: LaurentPoly


def multiplicities(lambda_f2: LaurentPoly) -> Multiplicities:
    """Split lam(D, f2) as m + n(1-x) + residual with residual of order >= 2."""
    m, n = i_adic_expand(lambda_f2, 2)
    residual = lambda_f2 - m - n * ONE_MINUS_X
    assert i_adic_order(residual) >= 2
    return Multiplicities(primary=m, secondary=n, residual=residual)


def whitney_move_effect(u_lambda: LaurentPoly) -> LaurentPoly:
    """Pairing of the disk after a Whitney move guided by U: (1-x)*lam(U, f2).

    Corollaries (asserted): the new disk has primary multiplicity 0 and
    secondary multiplicity equal to the primary multiplicity of U.
    """
    out = ONE_MINUS_X * u_lambda
    got = multiplicities(out)
    assert got.primary == 0 and got.secondary == u_lambda.augment()
    return out


def double_boundary_twist(w: DiskRecord, a: DiskRecord, k: int) -> DiskRecord:
    """Replace the Whitney disk by one whose secondary multiplicity moved by k*m(A).

    Two oppositely-handed boundary twists plus a Whitney move along a
    parallel of the accessory disk adjust the pairing by k*(1-x)*lam(A, f2):
    the primary multiplicity and the framing are untouched.
    """
    if w.kind != WHITNEY:
        raise KindMismatch("first record must be a Whitney disk")
    if a.kind not in (ACCESSORY_PLUS, ACCESSORY_MINUS):
        raise KindMismatch("second record must be an accessory disk")
    new_lambda = w.lambda_f2 + k * (ONE_MINUS_X * a.lambda_f2)
    out = replace(w, lambda_f2=new_lambda)
    assert out.primary == w.primary
    assert out.secondary == w.secondary + k * a.primary
    return out


def join_accessory_twists(a_plus: DiskRecord, a_minus: DiskRecord) -> int:
    """Twisting of the Whitney disk half-tubed from two accessory disks."""
    if a_plus.kind != ACCESSORY_PLUS or a_minus.kind != ACCESSORY_MINUS:
        raise KindMismatch("need one positive and one negative accessory record")
    return a_plus.twisting + a_minus.twisting


def derive_accessory_twist(w: DiskRecord, a: DiskRecord) -> int:
    """Twisting of the opposite-sign accessory disk built from W and A."""
    if w.kind != WHITNEY:
        raise KindMismatch("first record must be a Whitney disk")
    if a.kind not in (ACCESSORY_PLUS, ACCESSORY_MINUS):
        raise KindMismatch("second record must be an accessory disk")
    return w.twisting + a.twisting


# -- the z^2-coefficient identity ------------------------------------------------


def iadic3(alpha: LaurentPoly) -> tuple[int, int, int]:
    """(m, n, q) with alpha = m + n(1-x) + q*z modulo order three."""
    c0, c1, c2 = i_adic_expand(alpha, 3)
    return c0, c1, -c2


def step8_z2_coefficient(p: Presentation) -> int:
    """The z^2-coefficient of lam(f2, f2) from the coordinates' mod-I^3 data.

    Per pair, with alpha^{+/-} = m + n(1-x) + q*z mod I^3, the contribution
    is (m+ n+ + n+^2 + 2 m+ q+) - (m- n- + n-^2 + 2 m- q-); when the two
    primaries agree (m+ = m- = m) this is the symmetric-difference form
    (n+^2 - n-^2) + (n+ - n-) m + 2 m (q+ - q-).
    """
    pm = change_basis(p.f2, ACCESSORY_PM)
    plus, minus = pm.first_half(), pm.second_half()
    total = 0
    for i in range(p.n):
        mp, np_, qp = iadic3(plus[i])
        mm, nm, qm = iadic3(minus[i])
        total += (mp * np_ + np_ * np_ + 2 * mp * qp) - (mm * nm + nm * nm + 2 * mm * qm)
    return total


def parity_claim(p: Presentation) -> bool:
    """Evenness of the total secondary-multiplicity defect, under the hypotheses.

    Requires: lam(f2, f2) = 0; every pair has equal primaries m in {0, 1};
    pairs with m = 1 have n+ = n-; pairs with m = 0 have n+ - n- in
    {0, +1, -1}.  Under these the z^2-coefficient identity forces
    sum(n+ - n-) to be even; the implication is asserted, and the sum's
    evenness is returned (always True when the preconditions hold).
    """
    if not self_pairing(p).is_zero:
        raise PreconditionViolated("self-pairing of f2 does not vanish")
    pm = change_basis(p.f2, ACCESSORY_PM)
    plus, minus = pm.first_half(), pm.second_half()
    total = 0
    for i in range(p.n):
        mp, np_, _ = iadic3(plus[i])
        mm, nm, _ = iadic3(minus[i])
        if mp != mm or mp not in (0, 1):
            raise PreconditionViolated(
                f"pair {i}: primaries ({mp}, {mm}) are not an equal pair in {{0, 1}}"
            )
        defect = np_ - nm
        if mp == 1 and defect != 0:
            raise PreconditionViolated(f"pair {i}: unit primary with defect {defect}")
        if mp == 0 and defect not in (-1, 0, 1):
            raise PreconditionViolated(f"pair {i}: defect {defect} out of range")
        total += defect
    assert step8_z2_coefficient(p) == sigma2_of(p)[2] == 0
    assert total % 2 == 0
    return total % 2 == 0
