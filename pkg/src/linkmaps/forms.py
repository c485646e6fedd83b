"""Hermitian forms and verified isometries over the Laurent ring.

Convention, fixed here once and used everywhere: the pairing is linear in
the FIRST slot and conjugate-linear in the second,

    <u, v> = sum_ij  u_i * G_ij * involute(v_j),

so that <a*u, u> = a * abar * <u, u> for a scalar a.  Matrices act on
coordinate columns (column j is the image of basis vector j), which makes
the isometry condition read

    transpose(Phi) . G . involute(Phi) == G.

Nothing in this module ever hands out an unverified isometry: the
transvection constructor re-checks its own output and raises NotApplicable
rather than return a matrix that fails the condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, NotApplicable, NotDivisible
from .laurent import LaurentPoly, ONE, ZERO, Z, coerce, exact_div_z, symmetric_half, try_div_z

Matrix = tuple[tuple[LaurentPoly, ...], ...]
Vector = tuple[LaurentPoly, ...]


def as_vector(entries: Sequence[LaurentPoly | int]) -> Vector:
    if type(entries) is tuple and all(type(e) is LaurentPoly for e in entries):
        return entries
    return tuple(coerce(e) for e in entries)


def as_matrix(rows: Sequence[Sequence[LaurentPoly | int]]) -> Matrix:
    mat = tuple(as_vector(row) for row in rows)
    if any(len(row) != len(mat) for row in mat):
        raise DimensionMismatch("matrix must be square")
    return mat


def identity_matrix(d: int) -> Matrix:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    if len(b) != d:
        raise DimensionMismatch("matrix sizes differ")
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            acc = ZERO
            for k in range(d):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(a: Matrix, v: Vector) -> Vector:
    if len(v) != len(a):
        raise DimensionMismatch("matrix and vector sizes differ")
    out = []
    for i in range(len(a)):
        acc = ZERO
        for j, vj in enumerate(v):
            if a[i][j] and vj:
                acc = acc + a[i][j] * vj
        out.append(acc)
    return tuple(out)


def mat_involute(a: Matrix) -> Matrix:
    return tuple(tuple(e.involute() for e in row) for row in a)


def mat_transpose(a: Matrix) -> Matrix:
    return tuple(tuple(a[j][i] for j in range(len(a))) for i in range(len(a)))


def is_hermitian(rows: Sequence[Sequence[LaurentPoly | int]]) -> bool:
    """True when the matrix equals its involute-transpose."""
    mat = as_matrix(rows)
    d = len(mat)
    return all(mat[i][j] == mat[j][i].involute() for i in range(d) for j in range(d))


@dataclass(frozen=True)
class HermitianForm:
    """A hermitian Gram matrix; construction validates hermitian-ness."""

    gram: Matrix

    def __post_init__(self):
        object.__setattr__(self, "gram", as_matrix(self.gram))
        if not is_hermitian(self.gram):
            raise ValueError("gram matrix is not hermitian")

    @property
    def dim(self) -> int:
        return len(self.gram)


@dataclass(frozen=True)
class IsometryMatrix:
    """A square matrix intended as an isometry.

    The isometry property is a property relative to a form, so it is
    checked at the point of use via ``verify_isometry`` (and transvections
    self-verify); it is never assumed from the type alone.
    """

    mat: Matrix

    def __post_init__(self):
        object.__setattr__(self, "mat", as_matrix(self.mat))

    @property
    def dim(self) -> int:
        return len(self.mat)

    def apply(self, v: Sequence[LaurentPoly | int]) -> Vector:
        return mat_vec(self.mat, as_vector(v))

    def compose(self, other: "IsometryMatrix") -> "IsometryMatrix":
        """self after other, as maps on columns."""
        return IsometryMatrix(mat_mul(self.mat, other.mat))


def evaluate(form: HermitianForm, u: Sequence[LaurentPoly | int], v: Sequence[LaurentPoly | int]) -> LaurentPoly:
    """<u, v> under the form; linear in u, conjugate-linear in v."""
    uu, vv = as_vector(u), as_vector(v)
    if len(uu) != form.dim or len(vv) != form.dim:
        raise DimensionMismatch(f"form has dim {form.dim}")
    acc = ZERO
    for i, ui in enumerate(uu):
        if not ui:
            continue
        row = form.gram[i]
        for j, vj in enumerate(vv):
            if row[j] and vj:
                acc = acc + ui * row[j] * vj.involute()
    return acc


def divide_form_by_z(form: HermitianForm) -> HermitianForm:
    """Entry-wise exact quotient by z; raises NotDivisible."""
    try:
        return HermitianForm(
            tuple(tuple(exact_div_z(e) for e in row) for row in form.gram)
        )
    except NotDivisible:
        raise NotDivisible("some gram entry is not divisible by z") from None


def determinant(mat: Matrix) -> LaurentPoly:
    """Exact determinant by expansion along rows, memoized on column subsets."""
    d = len(mat)
    if d == 0:
        return ONE
    memo: dict[tuple[int, int], LaurentPoly] = {}

    def minor(row: int, mask: int) -> LaurentPoly:
        if row == d:
            return ONE
        key = (row, mask)
        if key in memo:
            return memo[key]
        acc = ZERO
        sign = 1
        for j in range(d):
            bit = 1 << j
            if mask & bit:
                continue
            if mat[row][j]:
                term = mat[row][j] * minor(row + 1, mask | bit)
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, 0)


def is_unimodular(form: HermitianForm) -> bool:
    """True when the determinant is a unit +/- x^k."""
    return determinant(form.gram).is_unit()


def verify_isometry(form: HermitianForm, phi: IsometryMatrix) -> bool:
    """Check transpose(phi) . gram . involute(phi) == gram."""
    if phi.dim != form.dim:
        raise DimensionMismatch("isometry and form dims differ")
    lhs = mat_mul(mat_mul(mat_transpose(phi.mat), form.gram), mat_involute(phi.mat))
    return lhs == form.gram


def is_congruent_to_identity_mod_z(phi: IsometryMatrix) -> bool:
    """True when every entry of phi - id lies in z * Z[x^{+/-1}]."""
    d = phi.dim
    for i in range(d):
        for j in range(d):
            e = phi.mat[i][j] - (ONE if i == j else ZERO)
            if not e.is_zero and try_div_z(e) is None:
                return False
    return True


def _default_translation_scalar(form: HermitianForm, v: Vector) -> LaurentPoly | None:
    # Prefer a scalar in z*Lambda when v itself is a z-multiple, so that
    # transvections with translation part in z*(span) stay congruent to the
    # identity mod z.
    w = evaluate(form, v, v)
    reduced = [try_div_z(e) for e in v]
    if all(r is not None for r in reduced):
        half = symmetric_half(Z * evaluate(form, reduced, reduced))  # type: ignore[arg-type]
        if half is not None:
            return half * Z
    return symmetric_half(w)


def transvection(
    form: HermitianForm,
    u: Sequence[LaurentPoly | int],
    v: Sequence[LaurentPoly | int],
    c: LaurentPoly | int | None = None,
) -> IsometryMatrix:
    """The verified isometry  x -> x + <x,v>u - <x,u>v - c<x,u>u.

    Requires <u,u> = 0 and <u,v> = 0, and a scalar c with
    c + involute(c) = <v,v>; when ``c`` is omitted one is derived (and
    chosen inside z*Lambda whenever v is a z-multiple).  The output is
    re-verified with ``verify_isometry``; NotApplicable is raised on any
    failure, so an unverified matrix is never returned.
    """
    uu, vv = as_vector(u), as_vector(v)
    if evaluate(form, uu, uu) != ZERO:
        raise NotApplicable("u is not isotropic")
    if evaluate(form, uu, vv) != ZERO:
        raise NotApplicable("u and v are not orthogonal")
    w = evaluate(form, vv, vv)
    cc = coerce(c) if c is not None else _default_translation_scalar(form, vv)
    if cc is None or cc + cc.involute() != w:
        raise NotApplicable("no admissible scalar with c + involute(c) = <v,v>")

    d = form.dim
    # <x, v> = sum_j x_j * gv_j with gv_j = sum_k G_jk involute(v_k).
    gv = [evaluate(form, _unit(d, j), vv) for j in range(d)]
    gu = [evaluate(form, _unit(d, j), uu) for j in range(d)]
    rows = []
    for i in range(d):
        vi_cu = vv[i] + cc * uu[i]
        row = []
        for j in range(d):
            e = ONE if i == j else ZERO
            e = e + uu[i] * gv[j] - vi_cu * gu[j]
            row.append(e)
        rows.append(tuple(row))
    out = IsometryMatrix(tuple(rows))
    if not verify_isometry(form, out):
        raise NotApplicable("self-verification failed")
    return out


def _unit(d: int, j: int) -> Vector:
    return tuple(ONE if i == j else ZERO for i in range(d))
