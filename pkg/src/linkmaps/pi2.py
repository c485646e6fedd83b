"""Sphere classes in the complement of a standard immersion, and their pairing.

For an immersion with n self-intersection pairs the second homotopy module
of the complement is free of rank 2n over the Laurent ring.  Two bases are
used:

* ``WA`` (Whitney/accessory): S_W1..S_Wn followed by S_A1..S_An, with
  Gram matrix  [[0, zI], [zI, zI]];
* ``PM`` (signed accessory): S_{A1+}..S_{An+} then S_{A1-}..S_{An-}, with
  Gram matrix  diag(zI, -zI) -- cross pairings vanish because the signed
  accessory spheres are disjointly immersed.

The change of basis is S_Wi = S_{Ai+} - S_{Ai-} and S_Ai = S_{Ai+}; it is
an isometry of the two Gram matrices, and the sign choice is the unique
one compatible with all the pairings above together with the duality of
the i-th Whitney disk against +/- the signed accessory spheres.  This is
an interpretation the rest of the package relies on; changing it would
only touch this module.

``lam`` evaluates the pairing structurally (without materializing the
2n x 2n Gram matrix), so it stays linear-time in n for the block-sparse
metabolic forms; ``metabolic_form`` materializes the matrix when one is
genuinely needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch
from .forms import HermitianForm, Vector, as_vector
from .laurent import LaurentPoly, ONE, ZERO, Z, coerce, try_div_z

WHITNEY_ACCESSORY = "WA"
ACCESSORY_PM = "PM"
_TAGS = (WHITNEY_ACCESSORY, ACCESSORY_PM)


@dataclass(frozen=True)
class BasisKind:
    tag: str
    n: int

    def __post_init__(self):
        if self.tag not in _TAGS:
            raise ValueError(f"unknown basis tag {self.tag!r}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")


@dataclass(frozen=True)
class SphereClass:
    """A module element: 2n Laurent coordinates over a declared basis."""

    basis: BasisKind
    coeffs: Vector

    def __post_init__(self):
        object.__setattr__(self, "coeffs", as_vector(self.coeffs))
        if len(self.coeffs) != 2 * self.basis.n:
            raise DimensionMismatch(
                f"expected {2 * self.basis.n} coordinates, got {len(self.coeffs)}"
            )

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def first_half(self) -> Vector:
        return self.coeffs[: self.n]

    def second_half(self) -> Vector:
        return self.coeffs[self.n :]

    def __add__(self, other: "SphereClass") -> "SphereClass":
        other = change_basis(other, self.basis)
        return SphereClass(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "SphereClass") -> "SphereClass":
        other = change_basis(other, self.basis)
        return SphereClass(self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "SphereClass":
        return SphereClass(self.basis, tuple(-c for c in self.coeffs))

    def scale(self, a: LaurentPoly | int) -> "SphereClass":
        a = coerce(a)
        return SphereClass(self.basis, tuple(a * c for c in self.coeffs))


def zero_class(basis: BasisKind) -> SphereClass:
    return SphereClass(basis, (ZERO,) * (2 * basis.n))


def whitney_sphere(n: int, i: int) -> SphereClass:
    """S_{W_{i+1}} in the WA basis (0-indexed i)."""
    basis = BasisKind(WHITNEY_ACCESSORY, n)
    return SphereClass(basis, tuple(ONE if k == i else ZERO for k in range(2 * n)))


def accessory_sphere(n: int, i: int) -> SphereClass:
    """S_{A_{i+1}} in the WA basis (0-indexed i)."""
    basis = BasisKind(WHITNEY_ACCESSORY, n)
    return SphereClass(basis, tuple(ONE if k == n + i else ZERO for k in range(2 * n)))


def accessory_pm_sphere(n: int, i: int, sign: int) -> SphereClass:
    """S_{A_{i+1}^{+/-}} in the PM basis (0-indexed i, sign +1 or -1)."""
    basis = BasisKind(ACCESSORY_PM, n)
    offset = i if sign > 0 else n + i
    return SphereClass(basis, tuple(ONE if k == offset else ZERO for k in range(2 * n)))


def metabolic_form(basis: BasisKind) -> HermitianForm:
    """The Gram matrix of the intersection pairing in the given basis."""
    n = basis.n
    rows = []
    for i in range(2 * n):
        row = []
        for j in range(2 * n):
            row.append(_gram_entry(basis.tag, n, i, j))
        rows.append(tuple(row))
    return HermitianForm(tuple(rows))


def _gram_entry(tag: str, n: int, i: int, j: int) -> LaurentPoly:
    if tag == WHITNEY_ACCESSORY:
        # [[0, zI], [zI, zI]]
        if i < n and j < n:
            return ZERO
        if i >= n and j >= n:
            return Z if i == j else ZERO
        return Z if i % n == j % n else ZERO
    # PM: diag(zI, -zI)
    if i != j:
        return ZERO
    return Z if i < n else -Z


def change_basis(c: SphereClass, target: BasisKind | str) -> SphereClass:
    """Rewrite coordinates; a round trip is the identity and the pairing is preserved."""
    if isinstance(target, str):
        target = BasisKind(target, c.n)
    if target.n != c.n:
        raise DimensionMismatch("basis sizes differ")
    if target.tag == c.basis.tag:
        return c
    n = c.n
    a, b = c.first_half(), c.second_half()
    if c.basis.tag == WHITNEY_ACCESSORY:
        # S_Wi = S_{Ai+} - S_{Ai-}, S_Ai = S_{Ai+}:  (a, b) -> (a + b, -a)
        plus = tuple(a[i] + b[i] for i in range(n))
        minus = tuple(-a[i] for i in range(n))
        return SphereClass(target, plus + minus)
    # inverse: (p, m) -> (-m, p + m)
    p, m = a, b
    wa = tuple(-m[i] for i in range(n))
    ab = tuple(p[i] + m[i] for i in range(n))
    return SphereClass(target, wa + ab)


def lam(a: SphereClass, b: SphereClass) -> LaurentPoly:
    """The intersection pairing, linear in ``a`` and conjugate-linear in ``b``.

    Mismatched bases are auto-converted (to WA).  Evaluation uses the block
    structure of the metabolic Gram matrix directly.
    """
    if a.n != b.n:
        raise DimensionMismatch("classes live over different ranks")
    if a.basis.tag != b.basis.tag:
        a = change_basis(a, WHITNEY_ACCESSORY)
        b = change_basis(b, WHITNEY_ACCESSORY)
    n = a.n
    acc = ZERO
    if a.basis.tag == WHITNEY_ACCESSORY:
        aw, aa = a.first_half(), a.second_half()
        bw, ba = b.first_half(), b.second_half()
        for i in range(n):
            s = ZERO
            if aw[i] and ba[i]:
                s = s + aw[i] * ba[i].involute()
            if aa[i] and bw[i]:
                s = s + aa[i] * bw[i].involute()
            if aa[i] and ba[i]:
                s = s + aa[i] * ba[i].involute()
            if s:
                acc = acc + Z * s
    else:
        ap, am = a.first_half(), a.second_half()
        bp, bm = b.first_half(), b.second_half()
        for i in range(n):
            s = ZERO
            if ap[i] and bp[i]:
                s = s + ap[i] * bp[i].involute()
            if am[i] and bm[i]:
                s = s - am[i] * bm[i].involute()
            if s:
                acc = acc + Z * s
    return acc


def whitney_disk_pairing(c: SphereClass) -> tuple[LaurentPoly, ...]:
    """Relative intersections with the n Whitney disks.

    In WA coordinates this is the accessory-half coefficient vector, the
    surjection onto Lambda^n whose kernel is the Whitney-sphere span; the
    Whitney sphere pairs with a class as z times its disk does:
    lam(c, S_Wi) = z * whitney_disk_pairing(c)[i].
    """
    return change_basis(c, WHITNEY_ACCESSORY).second_half()


@dataclass(frozen=True)
class ConditionReport:
    condition_ii: bool
    condition_iii: bool


def check_unlinking_conditions(p) -> ConditionReport:
    """Disk-pairing conditions on a presentation (or bare sphere class).

    condition_ii: every Whitney-disk pairing vanishes.
    condition_iii: the self-pairing vanishes and every Whitney-disk pairing
    is a z-multiple.  The first implies the second (asserted).
    """
    f2: SphereClass = getattr(p, "f2", p)
    pairings = whitney_disk_pairing(f2)
    cond_ii = all(q.is_zero for q in pairings)
    cond_iii = lam(f2, f2).is_zero and all(
        q.is_zero or try_div_z(q) is not None for q in pairings
    )
    assert not cond_ii or cond_iii, "disjointness must imply the z-multiple condition"
    return ConditionReport(condition_ii=cond_ii, condition_iii=cond_iii)


def check_metabolic_collection(
    ww_values: Sequence[Sequence[LaurentPoly | int]],
    wa_values: Sequence[Sequence[LaurentPoly | int]],
) -> bool:
    """True when every recorded lam(W_i, W_j) and lam(W_i, A_j) is zero."""
    for table in (ww_values, wa_values):
        for row in table:
            for value in row:
                if not coerce(value).is_zero:
                    return False
    return True
