"""Command-line surface.

Subcommands: invariants, classify, realize, verify, isometry, expand, jk.
Inputs and outputs are JSON files ('-' for the standard streams); output
is canonical, so identical inputs and flags produce byte-identical files.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 input
invariant violation, 4 invalid pair, 5 decomposition domain error.
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .diskledger import iadic3
from .errors import (
    ConditionsNotMet,
    ConstructionFailed,
    InvalidPair,
    InvalidPresentation,
    LinkmapsError,
    NotInCone,
    WitnessInvalid,
)
from .kirk import jk_kirk
from .laurent import i_adic_expand, z_decompose
from .pi2 import ACCESSORY_PM, change_basis, check_unlinking_conditions
from .realize import invariants_of, realize
from .unlink import classify, construct_isometry, reduce, verify_witness

OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_INVALID_PAIR = 4
EXIT_DECOMPOSE = 5


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_typed(path: str, expected: str) -> dict:
    doc = jsonio.parse_document(_read(path))
    if doc["type"] != expected:
        raise ValueError(f"expected a {expected} file, got {doc['type']!r}")
    return doc


def _witness_transcript(w) -> list[str]:
    lines = ["CHECK g ∈ ⟨S_W⟩ : OK"]
    lines.append("CHECK Φᵀ·G·ι(Φ) = G : OK")
    lines.append("CHECK Φ ≡ id mod z : OK")
    lines.append("CHECK Φ(g) = f2 : OK")
    lines.append(f"NOTE stabilized pair count {w.n_before} -> {w.n_after}")
    return lines


def _certificate_transcript(cert) -> list[str]:
    lines = _witness_transcript(cert.witness)
    n2 = cert.witness.n_after
    for i in range(n2):
        for j in range(n2):
            lines.append(f"CHECK λ(S_V{i + 1},S_V{j + 1}) = 0 : OK")
    for i in range(n2):
        lines.append(f"CHECK λ(S_V{i + 1},Φ(S_A{i + 1})) = z : OK")
    for k in range(1, len(cert.trace) + 1):
        lines.append(f"CHECK trace step {k} subtracts α·S_V and re-adds to before : OK")
    lines.append("CHECK final remainder = 0 : OK")
    return lines


def cmd_invariants(args) -> int:
    doc = _load_typed(args.input, "presentation")
    p = jsonio.presentation_from_obj(doc)
    kirk = invariants_of(p)
    _write(args.output, jsonio.dumps(jsonio.wrap("kirkpair", jsonio.kirkpair_to_obj(kirk))))
    pm = change_basis(p.f2, ACCESSORY_PM)
    plus, minus = pm.first_half(), pm.second_half()
    table = ["pair  sign    m   n+   n-"]
    for i, pair in enumerate(p.pairs):
        np_ = iadic3(plus[i])[1]
        nm = iadic3(minus[i])[1]
        table.append(f"{i + 1:>4}  {pair.sign:>+4d}  {pair.m:>3}  {np_:>3}  {nm:>3}")
    print("\n".join(table))
    return OK


def cmd_classify(args) -> int:
    doc = _load_typed(args.input, "presentation")
    p = jsonio.presentation_from_obj(doc)
    verdict = classify(p)
    _write(args.output, jsonio.dumps(jsonio.wrap("verdict", jsonio.verdict_to_obj(verdict))))
    if args.certificate:
        if verdict.certificate is None:
            print("no certificate obtainable for this presentation", file=sys.stderr)
        else:
            transcript = _certificate_transcript(verdict.certificate)
            body = jsonio.certificate_to_obj(p, verdict.certificate, transcript)
            _write(args.certificate, jsonio.dumps(jsonio.wrap("certificate", body)))
            if args.transcript:
                _write(args.transcript, "\n".join(transcript) + "\n")
    return OK


def cmd_realize(args) -> int:
    doc = _load_typed(args.input, "kirkpair")
    kirk = jsonio.kirkpair_from_obj(doc)
    p = realize(kirk)
    _write(args.output, jsonio.dumps(jsonio.wrap("presentation", jsonio.presentation_to_obj(p))))
    back = invariants_of(p)
    lines = [
        f"CHECK σ1(presentation) = {back.sigma1} : OK",
        f"CHECK σ2(presentation) = {back.sigma2} : OK",
        "CHECK realized invariants equal the requested pair : OK",
        "NOTE generator pairs carry their coefficient on the sign-side sphere; "
        "the other side is zero (any augmentation-matching choice would do)",
    ]
    _write(args.transcript, "\n".join(lines) + "\n")
    return OK


def cmd_isometry(args) -> int:
    doc = _load_typed(args.input, "presentation")
    p = jsonio.presentation_from_obj(doc)
    try:
        w = construct_isometry(p, seed=args.seed)
    except ConditionsNotMet as exc:
        print(f"conditions not met: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ConstructionFailed as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    _write(args.output, jsonio.dumps(jsonio.wrap("witness", jsonio.witness_to_obj(p, w))))
    _write(args.transcript, "\n".join(_witness_transcript(w)) + "\n")
    return OK


def cmd_expand(args) -> int:
    doc = _load_typed(args.input, "laurent")
    a = jsonio.laurent_from_obj(doc)
    body: dict = {"iadic": [jsonio.encode_int(c) for c in i_adic_expand(a, args.depth)]}
    if args.zk is not None:
        decomposition = z_decompose(a, args.zk)  # NotInCone propagates (exit 5)
        body["zk"] = args.zk
        body["zdecomp"] = jsonio.zpoly_to_obj(decomposition)
    elif a.is_symmetric():
        body["zk"] = 0
        body["zdecomp"] = jsonio.zpoly_to_obj(z_decompose(a, 0))
    else:
        body["zk"] = None
        body["zdecomp"] = None
    _write(args.output, jsonio.dumps(jsonio.wrap("expansion", body)))
    return OK


def cmd_jk(args) -> int:
    doc = _load_typed(args.input, "jkinput")
    data = jsonio.jkinput_from_obj(doc)
    kirk = jk_kirk(data)
    _write(args.output, jsonio.dumps(jsonio.wrap("kirkpair", jsonio.kirkpair_to_obj(kirk))))
    return OK


# -- verify ----------------------------------------------------------------------


def _verify_document(text: str) -> list[str]:
    """Re-run the invariant checks for a typed file; raises on the first failure."""
    doc = jsonio.parse_document(text)
    kind = doc["type"]
    checks: list[str] = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        if not ok:
            raise WitnessInvalid(f"{name}{': ' + detail if detail else ''}")
        checks.append(name)

    if kind == "kirkpair":
        kirk = jsonio.kirkpair_from_obj(doc)  # constructor re-checks membership
        checks.append("kirk pair membership and symmetry")
        body = jsonio.kirkpair_to_obj(kirk)
    elif kind == "jkinput":
        data = jsonio.jkinput_from_obj(doc)
        checks.append("leading invariants agree")
        body = jsonio.jkinput_to_obj(data)
    elif kind == "laurent":
        poly = jsonio.laurent_from_obj(doc)
        checks.append("coefficient list decodes")
        body = jsonio.laurent_to_obj(poly)
    elif kind == "sphereclass":
        sc = jsonio.sphereclass_from_obj(doc)
        checks.append("coordinate length matches basis")
        body = jsonio.sphereclass_to_obj(sc)
    elif kind == "diskrecord":
        record = jsonio.diskrecord_from_obj(doc)
        checks.append("disk kind and multiplicities decode")
        body = jsonio.diskrecord_to_obj(record)
    elif kind == "presentation":
        p = jsonio.presentation_from_obj(doc)
        checks.append("pair/coefficient bookkeeping")
        report = check_unlinking_conditions(p)
        checks.append(f"condition report (ii={report.condition_ii}, iii={report.condition_iii})")
        body = jsonio.presentation_to_obj(p)
    elif kind == "witness":
        p, w = jsonio.witness_from_obj(doc)
        verify_witness(p, w)
        checks.append("isometry")
        checks.append("congruent to identity mod z")
        checks.append("carries g to f2")
        body = jsonio.witness_to_obj(p, w)
    elif kind == "certificate":
        p, cert, transcript = jsonio.certificate_from_obj(doc)
        verify_witness(p, cert.witness)
        checks.append("witness triple-check")
        recomputed = reduce(p, cert.witness)
        check("transported classes match reduction", cert.v_classes == recomputed.v_classes)
        check("alphas match reduction", cert.alphas == recomputed.alphas)
        check("trace replays to zero", cert.trace == recomputed.trace)
        body = jsonio.certificate_to_obj(p, cert, transcript)
    else:
        raise ValueError(f"unknown artifact type {kind!r}")

    # Canonical encoding: re-encoding the decoded value must reproduce the
    # file byte for byte (catches denormalized but parseable data).
    check("canonical encoding", jsonio.dumps(jsonio.wrap(kind, body)) == text)
    return checks


def cmd_verify(args) -> int:
    text = _read(args.input)
    try:
        checks = _verify_document(text)
    except (LinkmapsError,) as exc:
        print(f"FAIL {exc}")
        return EXIT_VERIFY
    for name in checks:
        print(f"CHECK {name} : OK")
    print("PASS")
    return OK


# -- dispatch ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkmaps",
        description="Exact invariants, realization, and unlinking certificates "
        "for link maps of two 2-spheres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invariants", help="Kirk pair and multiplicity table of a presentation")
    sp.add_argument("input")
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("classify", help="triviality verdict, optionally with certificate")
    sp.add_argument("input")
    sp.add_argument("-o", "--output", default="-")
    sp.add_argument("--certificate", default=None, help="write certificate JSON here")
    sp.add_argument("--transcript", default=None, help="also write the plain-text transcript")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("realize", help="presentation with a prescribed Kirk pair")
    sp.add_argument("input")
    sp.add_argument("-o", "--output", default="-")
    sp.add_argument("--transcript", default="-")
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("verify", help="re-run all invariant checks for an artifact file")
    sp.add_argument("input")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("isometry", help="construct and verify the unlinking isometry")
    sp.add_argument("input")
    sp.add_argument("-o", "--output", default="-")
    sp.add_argument("--transcript", default="-")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_isometry)

    sp = sub.add_parser("expand", help="expansion in powers of 1-x, plus z-decomposition")
    sp.add_argument("input")
    sp.add_argument("-o", "--output", default="-")
    sp.add_argument("--depth", type=int, default=4)
    sp.add_argument("--zk", type=int, default=None, help="require division by this z-power")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("jk", help="Kirk pair of a classical link's beta vectors")
    sp.add_argument("input")
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(func=cmd_jk)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotInCone as exc:
        print(f"decomposition domain error: {exc}", file=sys.stderr)
        return EXIT_DECOMPOSE
    except InvalidPair as exc:
        print(f"invalid pair: {exc}", file=sys.stderr)
        return EXIT_INVALID_PAIR
    except (InvalidPresentation,) as exc:
        print(f"input invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except LinkmapsError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
