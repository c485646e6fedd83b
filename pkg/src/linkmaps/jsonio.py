"""Stable JSON encodings for every artifact type.

File layout: a top-level object with schema version ("v": 1) and a "type"
tag; embedded values (polynomials, sphere classes, matrices) carry no
version of their own.  Integers that may exceed 2^53 are serialized as
decimal strings so arbitrary precision survives JSON; small integers stay
native.  Output is canonical (sorted keys, two-space indent, trailing
newline), so write -> read -> write is byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from .diskledger import DiskRecord
from .forms import IsometryMatrix, Matrix, as_matrix
from .kirk import JKInput, KirkPair
from .laurent import LaurentPoly, ZPoly
from .pi2 import BasisKind, SphereClass
from .realize import Pair, Presentation
from .unlink import IsometryWitness, TraceStep, UnlinkCertificate, Verdict

_SAFE = 2**53


def encode_int(n: int) -> int | str:
    return n if -_SAFE < n < _SAFE else str(n)


def decode_int(v: Any) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValueError(f"expected integer, got {v!r}")
    return int(v)


# -- polynomials ---------------------------------------------------------------


def laurent_to_obj(p: LaurentPoly) -> dict:
    return {"coeffs": [[e, encode_int(c)] for e, c in p.items()]}


def laurent_from_obj(obj: Any) -> LaurentPoly:
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ValueError("bad Laurent polynomial object")
    pairs = []
    for item in obj["coeffs"]:
        if not isinstance(item, list) or len(item) != 2:
            raise ValueError("bad Laurent coefficient entry")
        pairs.append((decode_int(item[0]), decode_int(item[1])))
    return LaurentPoly(pairs)


def zpoly_to_obj(p: ZPoly) -> dict:
    return {"zcoeffs": [encode_int(c) for c in p.coeffs]}


def zpoly_from_obj(obj: Any) -> ZPoly:
    if not isinstance(obj, dict) or "zcoeffs" not in obj:
        raise ValueError("bad z-polynomial object")
    return ZPoly(tuple(decode_int(c) for c in obj["zcoeffs"]))


# -- kirk data -------------------------------------------------------------------


def kirkpair_to_obj(k: KirkPair) -> dict:
    return {"sigma1": zpoly_to_obj(k.sigma1), "sigma2": zpoly_to_obj(k.sigma2)}


def kirkpair_from_obj(obj: Any) -> KirkPair:
    if not isinstance(obj, dict):
        raise ValueError("bad Kirk pair object")
    return KirkPair(zpoly_from_obj(obj["sigma1"]), zpoly_from_obj(obj["sigma2"]))


def jkinput_to_obj(j: JKInput) -> dict:
    return {"beta1": [encode_int(b) for b in j.beta1],
            "beta2": [encode_int(b) for b in j.beta2]}


def jkinput_from_obj(obj: Any) -> JKInput:
    if not isinstance(obj, dict):
        raise ValueError("bad beta-vector object")
    return JKInput(
        tuple(decode_int(b) for b in obj["beta1"]),
        tuple(decode_int(b) for b in obj["beta2"]),
    )


# -- module elements -------------------------------------------------------------


def sphereclass_to_obj(c: SphereClass) -> dict:
    return {
        "basis": c.basis.tag,
        "n": c.basis.n,
        "coeffs": [laurent_to_obj(x) for x in c.coeffs],
    }


def sphereclass_from_obj(obj: Any) -> SphereClass:
    if not isinstance(obj, dict):
        raise ValueError("bad sphere class object")
    basis = BasisKind(str(obj["basis"]), decode_int(obj["n"]))
    return SphereClass(basis, tuple(laurent_from_obj(x) for x in obj["coeffs"]))


def matrix_to_obj(mat: Matrix) -> list:
    return [[laurent_to_obj(e) for e in row] for row in mat]


def matrix_from_obj(obj: Any) -> Matrix:
    if not isinstance(obj, list):
        raise ValueError("bad matrix object")
    return as_matrix([[laurent_from_obj(e) for e in row] for row in obj])


def presentation_to_obj(p: Presentation) -> dict:
    return {
        "pairs": [{"sign": pair.sign, "m": pair.m} for pair in p.pairs],
        "f2": sphereclass_to_obj(p.f2),
    }


def presentation_from_obj(obj: Any) -> Presentation:
    if not isinstance(obj, dict):
        raise ValueError("bad presentation object")
    pairs = tuple(
        Pair(decode_int(e["sign"]), decode_int(e["m"])) for e in obj["pairs"]
    )
    return Presentation(pairs, sphereclass_from_obj(obj["f2"]))


def diskrecord_to_obj(r: DiskRecord) -> dict:
    return {
        "kind": r.kind,
        "lambda_f2": laurent_to_obj(r.lambda_f2),
        "twisting": encode_int(r.twisting),
    }


def diskrecord_from_obj(obj: Any) -> DiskRecord:
    if not isinstance(obj, dict):
        raise ValueError("bad disk record object")
    return DiskRecord(
        kind=str(obj["kind"]),
        lambda_f2=laurent_from_obj(obj["lambda_f2"]),
        twisting=decode_int(obj["twisting"]),
    )


# -- pipeline artifacts ------------------------------------------------------------


def witness_to_obj(p: Presentation, w: IsometryWitness) -> dict:
    return {
        "presentation": presentation_to_obj(p),
        "n_before": w.n_before,
        "n_after": w.n_after,
        "g": sphereclass_to_obj(w.g),
        "phi": matrix_to_obj(w.phi.mat),
    }


def witness_from_obj(obj: Any) -> tuple[Presentation, IsometryWitness]:
    if not isinstance(obj, dict):
        raise ValueError("bad witness object")
    p = presentation_from_obj(obj["presentation"])
    w = IsometryWitness(
        phi=IsometryMatrix(matrix_from_obj(obj["phi"])),
        g=sphereclass_from_obj(obj["g"]),
        n_before=decode_int(obj["n_before"]),
        n_after=decode_int(obj["n_after"]),
    )
    return p, w


def _trace_step_to_obj(step: TraceStep) -> dict:
    return {
        "before": sphereclass_to_obj(step.before),
        "term": sphereclass_to_obj(step.term),
        "after": sphereclass_to_obj(step.after),
    }


def _trace_step_from_obj(obj: Any) -> TraceStep:
    return TraceStep(
        before=sphereclass_from_obj(obj["before"]),
        term=sphereclass_from_obj(obj["term"]),
        after=sphereclass_from_obj(obj["after"]),
    )


def certificate_to_obj(
    p: Presentation, cert: UnlinkCertificate, transcript: list[str]
) -> dict:
    return {
        "presentation": presentation_to_obj(p),
        "witness": witness_to_obj(p, cert.witness),
        "v_classes": [sphereclass_to_obj(v) for v in cert.v_classes],
        "alphas": [laurent_to_obj(a) for a in cert.alphas],
        "trace": [_trace_step_to_obj(s) for s in cert.trace],
        "transcript": list(transcript),
    }


def certificate_from_obj(obj: Any) -> tuple[Presentation, UnlinkCertificate, list[str]]:
    if not isinstance(obj, dict):
        raise ValueError("bad certificate object")
    p = presentation_from_obj(obj["presentation"])
    _, witness = witness_from_obj(obj["witness"])
    cert = UnlinkCertificate(
        witness=witness,
        v_classes=tuple(sphereclass_from_obj(v) for v in obj["v_classes"]),
        alphas=tuple(laurent_from_obj(a) for a in obj["alphas"]),
        trace=tuple(_trace_step_from_obj(s) for s in obj["trace"]),
    )
    return p, cert, [str(line) for line in obj.get("transcript", [])]


def verdict_to_obj(v: Verdict) -> dict:
    return {
        "trivial": v.trivial,
        "kirk": kirkpair_to_obj(v.kirk),
        "certificate_attached": v.certificate is not None,
    }


# -- files -------------------------------------------------------------------------


def wrap(type_tag: str, body: dict) -> dict:
    return {"v": 1, "type": type_tag, **body}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_document(text: str) -> dict:
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise ValueError("top-level JSON value must be an object")
    if doc.get("v") != 1:
        raise ValueError("missing or unsupported schema version")
    if not isinstance(doc.get("type"), str):
        raise ValueError("file does not declare its type")
    return doc
