"""Kirk pairs: the coordinates classifying link maps of two 2-spheres.

A class of link maps is identified with its pair of self-intersection
polynomials (sigma1, sigma2), each a z-multiple polynomial in z; a pair is
admissible exactly when both constant z-terms vanish and the two linear
z-terms agree (the Sato-Levine constraint).  Admissible pairs form an
abelian group under componentwise sum, with the trivial class at (0, 0),
and sit in an exact sequence whose quotient map is the difference of the
linear z-coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPair
from .laurent import ZPoly


@dataclass(frozen=True)
class KirkPair:
    """A validated pair (sigma1, sigma2); construction raises InvalidPair."""

    sigma1: ZPoly
    sigma2: ZPoly

    def __post_init__(self):
        if self.sigma1[0] != 0 or self.sigma2[0] != 0:
            raise InvalidPair("nonzero constant term: not a z-multiple")
        if self.sigma1[1] != self.sigma2[1]:
            raise InvalidPair(
                "symmetry violation: linear z-coefficients "
                f"{self.sigma1[1]} != {self.sigma2[1]}"
            )

    def __add__(self, other: "KirkPair") -> "KirkPair":
        return KirkPair(self.sigma1 + other.sigma1, self.sigma2 + other.sigma2)

    def __neg__(self) -> "KirkPair":
        return KirkPair(-self.sigma1, -self.sigma2)

    def __sub__(self, other: "KirkPair") -> "KirkPair":
        return self + (-other)


def make_kirk(sigma1: ZPoly, sigma2: ZPoly) -> KirkPair:
    """Validate and build a pair; raises InvalidPair with the reason."""
    return KirkPair(sigma1, sigma2)


ZERO_PAIR = KirkPair(ZPoly(()), ZPoly(()))


def add(a: KirkPair, b: KirkPair) -> KirkPair:
    """Componentwise sum (connected-sum additivity); preserves validity."""
    return a + b


def negate(a: KirkPair) -> KirkPair:
    """Componentwise negation (reflection); a + negate(a) is the trivial pair."""
    return -a


def is_trivial(a: KirkPair) -> bool:
    """True exactly when both components vanish."""
    return a.sigma1.is_zero and a.sigma2.is_zero


def difference_map(sigma1: ZPoly, sigma2: ZPoly) -> int:
    """Difference of linear z-coefficients; validity of the pair not required.

    Its kernel, among pairs of z-multiples, is exactly the set of valid
    Kirk pairs (exactness in the classifying sequence).
    """
    return sigma1[1] - sigma2[1]


@dataclass(frozen=True)
class JKInput:
    """Integer invariant vectors of a classical 2-component link.

    ``beta1[j]`` holds the (j+1)-st invariant of the first component (the
    vectors are 1-indexed conceptually; index 0 is not representable).  The
    leading entries must agree between the components.
    """

    beta1: tuple[int, ...]
    beta2: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "beta1", tuple(int(b) for b in self.beta1))
        object.__setattr__(self, "beta2", tuple(int(b) for b in self.beta2))
        b1 = self.beta1[0] if self.beta1 else 0
        b2 = self.beta2[0] if self.beta2 else 0
        if b1 != b2:
            raise InvalidPair(f"leading invariants differ: {b1} != {b2}")


def jk_kirk(data: JKInput) -> KirkPair:
    """The Kirk pair of the spun link map of a classical link.

    sigma_i = sum_j beta_i[j] * z^j done with 1-based j; the result is
    trivial exactly when both vectors vanish.
    """
    s1 = ZPoly((0,) + data.beta1)
    s2 = ZPoly((0,) + data.beta2)
    return make_kirk(s1, s2)
