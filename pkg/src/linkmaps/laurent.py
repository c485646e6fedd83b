"""Exact arithmetic in the ring of integer Laurent polynomials.

Everything downstream works over ``Z[x^{\\pm 1}]`` equipped with

* the involution ``x -> x^{-1}``,
* the augmentation (coefficient sum) ``x -> 1``,
* the distinguished element ``z = (1-x)*(1-x^{-1}) = 2 - x - x^{-1}``,

and the augmentation ideal, generated by ``1 - x``.  Since
``(1-x)^2 = -x*z``, the even steps of the augmentation filtration are the
z-multiples, and a symmetric (involution-fixed) element is a polynomial in
z.  ``z_decompose`` computes that rewrite exactly; ``i_adic_expand`` gives
the finite expansion in powers of ``1 - x``.

Coefficients are arbitrary-precision integers throughout; there are no
modular or floating shortcuts.  Values are immutable and safe to share.

>>> (ONE - X) * (ONE - X.involute()) == Z
True
>>> z_decompose(Z * Z, 1)
ZPoly('z')
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import NotDivisible, NotInCone


class LaurentPoly:
    """An integer Laurent polynomial in canonical form (no zero coefficients).

    Stored sparsely as a mapping from exponent to nonzero coefficient; the
    empty mapping is the zero polynomial.  Equality and hashing are by
    canonical form.

    >>> p = LaurentPoly({1: 3, -1: -1})
    >>> str(p)
    '-x^-1 + 3x'
    >>> p * monomial(-1) == LaurentPoly({0: 3, -2: -1})
    True
    """

    __slots__ = ("_coeffs", "_hash", "_aug")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        d: dict[int, int] = {}
        for e, c in items:
            if c:
                d[int(e)] = d.get(int(e), 0) + int(c)
                if not d[int(e)]:
                    del d[int(e)]
        self._coeffs = d
        self._hash: int | None = None
        self._aug: int | None = None

    # -- access ------------------------------------------------------------

    def items(self) -> list[tuple[int, int]]:
        """Coefficients as (exponent, value) pairs, ascending in exponent."""
        return sorted(self._coeffs.items())

    def __getitem__(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._coeffs))

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def min_exp(self) -> int:
        """Lowest exponent; raises on the zero polynomial."""
        return min(self._coeffs)

    def max_exp(self) -> int:
        """Highest exponent; raises on the zero polynomial."""
        return max(self._coeffs)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = coerce(other)
        d = dict(self._coeffs)
        for e, c in other._coeffs.items():
            d[e] = d.get(e, 0) + c
        return LaurentPoly(d)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return coerce(other) + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        d: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if self.is_unit():
                e, c = next(iter(self._coeffs.items()))
                inv = LaurentPoly({-e: c})
                return inv ** (-n)
            raise ValueError("only units +/-x^k can be inverted")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    # -- the extra structure -----------------------------------------------

    def involute(self) -> LaurentPoly:
        """The image under x -> x^{-1} (exponent negation).

        >>> LaurentPoly({2: 3, -1: -1}).involute() == LaurentPoly({-2: 3, 1: -1})
        True
        """
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def augment(self) -> int:
        """The coefficient sum (ring homomorphism onto the integers)."""
        if self._aug is None:
            self._aug = sum(self._coeffs.values())
        return self._aug

    def is_symmetric(self) -> bool:
        """True when fixed by the involution."""
        return all(self._coeffs.get(-e) == c for e, c in self._coeffs.items())

    def is_unit(self) -> bool:
        """Units are exactly the signed monomials +/- x^k."""
        return len(self._coeffs) == 1 and next(iter(self._coeffs.values())) in (1, -1)

    def shift(self, k: int) -> LaurentPoly:
        """Multiplication by x^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def coerce(value: LaurentPoly | int) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly({0: value})
    raise TypeError(f"cannot coerce {value!r} to LaurentPoly")


def monomial(exponent: int, coefficient: int = 1) -> LaurentPoly:
    """The monomial coefficient * x^exponent."""
    return LaurentPoly({exponent: coefficient})


ZERO = LaurentPoly()
ONE = monomial(0)
X = monomial(1)
ONE_MINUS_X = ONE - X
#: z = (1-x)(1-x^{-1}) = 2 - x - x^{-1}; note (1-x)^2 = -x*z.
Z = LaurentPoly({0: 2, 1: -1, -1: -1})


@dataclass(frozen=True)
class ZPoly:
    """An integer polynomial in z, index j holding the z^j coefficient.

    Trailing zeros are trimmed on construction, so equality is plain tuple
    equality.  Embedding into the Laurent ring (``to_laurent``) is injective
    and lands in the symmetric subring.

    >>> ZPoly((0, 1)).to_laurent() == Z
    True
    >>> str(ZPoly((0, 4, -1)))
    '4z - z^2'
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in trimmed))

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """z-degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __add__(self, other: ZPoly) -> ZPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(tuple(self[j] + other[j] for j in range(n)))

    def __sub__(self, other: ZPoly) -> ZPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(tuple(self[j] - other[j] for j in range(n)))

    def __neg__(self) -> ZPoly:
        return ZPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: int) -> ZPoly:
        return ZPoly(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def shift_z(self, k: int) -> ZPoly:
        """Multiplication by z^k."""
        return ZPoly((0,) * k + self.coeffs)

    def to_laurent(self) -> LaurentPoly:
        out = ZERO
        for j, c in enumerate(self.coeffs):
            if c:
                out = out + z_power(j) * c
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                var = "z" if j == 1 else f"z^{j}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"ZPoly('{self}')"


ZP_ZERO = ZPoly(())
ZP_Z = ZPoly((0, 1))

_Z_POWERS: list[LaurentPoly] = [ONE]


def z_power(k: int) -> LaurentPoly:
    """z^k as a Laurent polynomial (cached)."""
    while len(_Z_POWERS) <= k:
        _Z_POWERS.append(_Z_POWERS[-1] * Z)
    return _Z_POWERS[k]


# -- division and filtration tools ------------------------------------------


def exact_div_one_minus_x(a: LaurentPoly) -> LaurentPoly:
    """Exact quotient a / (1-x); raises NotDivisible when augment(a) != 0.

    Divisibility by 1-x is equivalent to vanishing augmentation, and the
    quotient is the running prefix sum of the coefficients.

    >>> exact_div_one_minus_x(Z) == ONE - X.involute()
    True
    """
    if a.is_zero:
        return ZERO
    if a.augment() != 0:
        raise NotDivisible(f"augmentation is {a.augment()}, not 0")
    lo, hi = a.min_exp(), a.max_exp()
    out: dict[int, int] = {}
    running = 0
    for e in range(lo, hi):
        running += a[e]
        if running:
            out[e] = running
    return LaurentPoly(out)


def exact_div_one_minus_x_inv(a: LaurentPoly) -> LaurentPoly:
    """Exact quotient a / (1-x^{-1}), via 1-x^{-1} = -x^{-1}(1-x)."""
    return exact_div_one_minus_x(-a.shift(1))


def exact_div_z(a: LaurentPoly) -> LaurentPoly:
    """Exact quotient a / z; raises NotDivisible."""
    return exact_div_one_minus_x_inv(exact_div_one_minus_x(a))


def try_div_z(a: LaurentPoly) -> LaurentPoly | None:
    try:
        return exact_div_z(a)
    except NotDivisible:
        return None


def i_adic_order(a: LaurentPoly, bound: int = 64) -> int | float:
    """Largest k with a divisible by (1-x)^k; math.inf exactly for zero.

    A nonzero polynomial always has finite order (at most its exponent
    span); ``bound`` is a safety cap only.
    """
    if a.is_zero:
        return math.inf
    k = 0
    r = a
    while k <= bound:
        try:
            r = exact_div_one_minus_x(r)
        except NotDivisible:
            return k
        k += 1
    raise ArithmeticError(f"order exceeded bound {bound} on a nonzero input")


def i_adic_expand(a: LaurentPoly, depth: int) -> list[int]:
    """Integers c_0..c_{depth-1} with a = sum c_j (1-x)^j modulo (1-x)^depth.

    Each step reads off the augmentation and divides the rest by 1-x; the
    quotient ring by 1-x is the integers, so the expansion is unique.

    >>> i_adic_expand(3 + 2 * ONE_MINUS_X + Z, 3)
    [3, 2, -1]
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    out: list[int] = []
    r = a
    for _ in range(depth):
        c = r.augment()
        out.append(c)
        r = exact_div_one_minus_x(r - c)
    return out


def z_decompose(a: LaurentPoly, k: int = 0) -> ZPoly:
    """Write a = z^k * p(z) and return p; raises NotInCone when impossible.

    Such a p exists exactly when a is symmetric and divisible by (1-x)^{2k}.
    The algorithm divides out (1-x) and (1-x^{-1}) k times each, then
    rewrites the symmetric quotient by repeatedly cancelling its extreme
    exponents against z^n, whose extreme terms are (-1)^n x^{+/-n}.

    >>> z_decompose(Z, 1)
    ZPoly('1')
    >>> z_decompose(LaurentPoly({0: 6, 1: -4, -1: -4, 2: 1, -2: 1}))
    ZPoly('z^2')
    """
    if not a.is_symmetric():
        raise NotInCone("not fixed by the involution")
    q = a
    try:
        for _ in range(k):
            q = exact_div_one_minus_x(q)
        for _ in range(k):
            q = exact_div_one_minus_x_inv(q)
    except NotDivisible as exc:
        raise NotInCone(f"not divisible by z^{k}") from exc
    # The quotient of a symmetric element by the symmetric z^k is symmetric.
    coeffs: dict[int, int] = {}
    while not q.is_zero:
        n = q.max_exp()
        if n < 0 or q[n] != q[-n]:
            raise NotInCone("symmetric reduction failed")  # pragma: no cover
        t = q[n] if n % 2 == 0 else -q[n]
        coeffs[n] = t
        q = q - z_power(n) * t
    width = max(coeffs) + 1 if coeffs else 0
    return ZPoly(tuple(coeffs.get(j, 0) for j in range(width)))


def embed(p: ZPoly) -> LaurentPoly:
    """The inclusion of Z[z] into the Laurent ring."""
    return p.to_laurent()


def symmetric_half(w: LaurentPoly) -> LaurentPoly | None:
    """Some c with c + involute(c) = w, or None.

    Exists exactly when w is symmetric with even constant coefficient; the
    choice made is half the constant plus the positive-exponent part.
    """
    if not w.is_symmetric() or w[0] % 2 != 0:
        return None
    d = {0: w[0] // 2}
    for e, c in w.items():
        if e > 0:
            d[e] = c
    return LaurentPoly(d)
