"""The algebraic unlinking pipeline.

Given a presentation whose second sphere satisfies the two pairing
conditions (vanishing self-pairing, all Whitney-disk pairings divisible by
z), this module constructs a verified isometry witness and reduces the
second sphere to zero through combinations of transported Whitney spheres,
producing a step-by-step certificate.

Construction.  Write f2 = g0 + z*d with g0 in the Whitney span and d in
the accessory span (possible exactly under the divisibility condition).
Two stabilizations are appended: one that adds a new Whitney sphere to
both f2 and g (so g pairs to 1 against the new accessory sphere), and one
trivial.  With

    e = S_A(n+1) - S_W(n+2) + S_A(n+2)        (isotropic, <g, e>' = 1),
    t = -z*d,   s = <g, d>',   c = -z*s,

the vanishing of the self-pairing forces exactly  c + involute(c) =
<t, t>', so the transvection  x -> x + <x,t>'e - <x,e>'t - c<x,e>'e  (with
respect to the z-divided form) is an isometry, is congruent to the
identity mod z by construction, and maps g to f2 on the nose.  A fallback
assembles the same map as a product of two transvections with the default
scalar; either way the witness is re-verified before being returned and
ConstructionFailed is raised rather than ever emitting an unverified
matrix.

Reduction.  The images V_i of the Whitney spheres under the witness span
an isotropic sublattice dual to the transported accessory spheres, and
f2 = sum(alpha_i * V_i) with the alphas read off g; subtracting the terms
in order drives f2 to zero, and the certificate records every step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ConditionsNotMet,
    ConstructionFailed,
    NotApplicable,
    WitnessInvalid,
)
from .forms import (
    IsometryMatrix,
    Vector,
    divide_form_by_z,
    evaluate,
    is_congruent_to_identity_mod_z,
    transvection,
    verify_isometry,
)
from .kirk import KirkPair, is_trivial
from .laurent import LaurentPoly, ONE, ZERO, Z, exact_div_z
from .pi2 import (
    BasisKind,
    SphereClass,
    WHITNEY_ACCESSORY,
    change_basis,
    check_unlinking_conditions,
    lam,
    metabolic_form,
)
from .realize import Pair, Presentation, invariants_of


@dataclass(frozen=True)
class IsometryWitness:
    """A verified isometry certificate over the twice-stabilized presentation."""

    phi: IsometryMatrix
    g: SphereClass
    n_before: int
    n_after: int


@dataclass(frozen=True)
class TraceStep:
    before: SphereClass
    term: SphereClass
    after: SphereClass


@dataclass(frozen=True)
class UnlinkCertificate:
    witness: IsometryWitness
    v_classes: tuple[SphereClass, ...]
    alphas: tuple[LaurentPoly, ...]
    trace: tuple[TraceStep, ...]


@dataclass(frozen=True)
class Verdict:
    trivial: bool
    kirk: KirkPair
    certificate: UnlinkCertificate | None


def stabilize(p: Presentation, link_once: bool) -> Presentation:
    """Append one self-intersection pair; pairings on old classes are unchanged.

    The new pair is balanced with multiplicity 1 when the guiding arc links
    the second sphere once (in which case f2 gains the new Whitney sphere),
    and trivial (multiplicity 0, f2 unchanged) otherwise.
    """
    n = p.n
    wa = change_basis(p.f2, WHITNEY_ACCESSORY)
    new = ONE if link_once else ZERO
    coeffs = wa.first_half() + (new,) + wa.second_half() + (ZERO,)
    f2 = SphereClass(BasisKind(WHITNEY_ACCESSORY, n + 1), coeffs)
    return Presentation(p.pairs + (Pair(1, 1 if link_once else 0),), f2)


def _basis_vector(dim: int, index: int) -> Vector:
    return tuple(ONE if i == index else ZERO for i in range(dim))


def _splitting(p: Presentation) -> tuple[Vector, Vector]:
    """Coordinates (g, d) with f2 = g + z*d, g Whitney-spanned, d accessory."""
    wa = change_basis(p.f2, WHITNEY_ACCESSORY)
    n = p.n
    zeros = (ZERO,) * n
    g = wa.first_half() + zeros
    d = zeros + tuple(
        ZERO if b.is_zero else exact_div_z(b) for b in wa.second_half()
    )
    return g, d


def construct_isometry(p: Presentation, seed: int = 0) -> IsometryWitness:
    """A witness (isometry, congruent to id mod z, carrying g to f2).

    Requires the divisibility condition (condition_iii); raises
    ConditionsNotMet otherwise and ConstructionFailed if no candidate
    passes re-verification (not expected to occur).  The construction is
    deterministic for a fixed ``seed``, which only selects the order in
    which the two assembly strategies are tried.
    """
    if not check_unlinking_conditions(p).condition_iii:
        raise ConditionsNotMet("Whitney-disk pairings are not all z-multiples")

    stabilized = stabilize(stabilize(p, link_once=True), link_once=False)
    n2 = stabilized.n
    dim = 2 * n2
    g_coords, d_coords = _splitting(stabilized)
    f2_coords = change_basis(stabilized.f2, WHITNEY_ACCESSORY).coeffs

    basis = BasisKind(WHITNEY_ACCESSORY, n2)
    form = metabolic_form(basis)
    reduced = divide_form_by_z(form)

    # e = S_A(n+1) - S_W(n+2) + S_A(n+2): isotropic for the reduced form,
    # pairs to 1 against g, orthogonal to d (which lives in the old block).
    n_old = p.n
    e = tuple(
        ONE if i in (n2 + n_old, n2 + n_old + 1) else (-ONE if i == n_old + 1 else ZERO)
        for i in range(dim)
    )
    t = tuple(-(Z * di) for di in d_coords)
    s = evaluate(reduced, g_coords, d_coords)

    def direct() -> IsometryMatrix:
        return transvection(reduced, e, t, c=-(Z * s))

    def two_step() -> IsometryMatrix:
        first = transvection(reduced, e, t)
        image = first.apply(g_coords)
        residue = tuple(a - b for a, b in zip(image, f2_coords))
        mu = residue[n2 + n_old]
        if any(ri != mu * ei for ri, ei in zip(residue, e)):
            raise NotApplicable("residue is not carried by e")
        correction = transvection(reduced, e, (ZERO,) * dim, c=mu)
        return correction.compose(first)

    candidates = [direct, two_step] if seed % 2 == 0 else [two_step, direct]
    for candidate in candidates:
        try:
            phi = candidate()
        except NotApplicable:
            continue
        g = SphereClass(basis, g_coords)
        witness = IsometryWitness(phi=phi, g=g, n_before=p.n, n_after=n2)
        try:
            verify_witness(p, witness)
        except WitnessInvalid:
            continue
        return witness
    raise ConstructionFailed("no candidate isometry passed verification")


def verify_witness(p: Presentation, w: IsometryWitness) -> None:
    """Re-run every witness invariant from scratch; raises WitnessInvalid."""
    stabilized = stabilize(stabilize(p, link_once=True), link_once=False)
    n2 = stabilized.n
    if w.n_before != p.n or w.n_after != n2:
        raise WitnessInvalid("pair counts do not match the presentation")
    if w.g.n != n2 or w.phi.dim != 2 * n2:
        raise WitnessInvalid("witness dimensions do not match")
    g_wa = change_basis(w.g, WHITNEY_ACCESSORY)
    if any(not c.is_zero for c in g_wa.second_half()):
        raise WitnessInvalid("g is not in the Whitney-sphere span")
    form = metabolic_form(BasisKind(WHITNEY_ACCESSORY, n2))
    if not verify_isometry(form, w.phi):
        raise WitnessInvalid("isometry check failed")
    if not is_congruent_to_identity_mod_z(w.phi):
        raise WitnessInvalid("congruent-to-identity-mod-z check failed")
    f2_coords = change_basis(stabilized.f2, WHITNEY_ACCESSORY).coeffs
    if w.phi.apply(g_wa.coeffs) != f2_coords:
        raise WitnessInvalid("phi does not carry g to f2")


def reduce(p: Presentation, w: IsometryWitness) -> UnlinkCertificate:
    """Drive f2 to zero by subtracting the transported Whitney spheres.

    Verifies the witness, the isotropy of the transported span, the
    duality against the transported accessory spheres, and the exact
    z-divisibility of the correction classes, then replays the subtraction
    trace and checks it ends at zero.
    """
    verify_witness(p, w)
    stabilized = stabilize(stabilize(p, link_once=True), link_once=False)
    n2 = stabilized.n
    basis = BasisKind(WHITNEY_ACCESSORY, n2)
    dim = 2 * n2

    v_classes = tuple(
        SphereClass(basis, w.phi.apply(_basis_vector(dim, i))) for i in range(n2)
    )
    duals = tuple(
        SphereClass(basis, w.phi.apply(_basis_vector(dim, n2 + i))) for i in range(n2)
    )
    for i, vi in enumerate(v_classes):
        for j, vj in enumerate(v_classes):
            if not lam(vi, vj).is_zero:
                raise WitnessInvalid(f"transported span is not isotropic at ({i}, {j})")
        for j, dj in enumerate(duals):
            expected = Z if i == j else ZERO
            if lam(vi, dj) != expected:
                raise WitnessInvalid(f"dual pairing failed at ({i}, {j})")
        # The correction class (V_i - S_Wi)/z must exist exactly.
        base = _basis_vector(dim, i)
        for vc, bc in zip(vi.coeffs, base):
            diff = vc - bc
            if not diff.is_zero:
                exact_div_z(diff)

    alphas = change_basis(w.g, WHITNEY_ACCESSORY).first_half()
    rest = change_basis(stabilized.f2, WHITNEY_ACCESSORY)
    steps: list[TraceStep] = []
    for i in range(n2):
        if alphas[i].is_zero:
            continue
        term = v_classes[i].scale(alphas[i])
        after = rest - term
        steps.append(TraceStep(before=rest, term=term, after=after))
        rest = after
    if not rest.is_zero:
        raise WitnessInvalid("reduction trace did not end at zero")
    return UnlinkCertificate(
        witness=w, v_classes=v_classes, alphas=alphas, trace=tuple(steps)
    )


def classify(p: Presentation) -> Verdict:
    """Triviality verdict: the Kirk pair, and a certificate when available.

    The class is trivial exactly when both invariants vanish; a reduction
    certificate is attached when, additionally, the divisibility condition
    already holds for the given presentation.
    """
    kirk = invariants_of(p)
    trivial = is_trivial(kirk)
    certificate = None
    if trivial and check_unlinking_conditions(p).condition_iii:
        try:
            certificate = reduce(p, construct_isometry(p))
        except ConstructionFailed:
            certificate = None
    return Verdict(trivial=trivial, kirk=kirk, certificate=certificate)
