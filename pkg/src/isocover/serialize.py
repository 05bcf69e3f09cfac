"""JSON encodings of matrices, representations and classification entries.

A matrix is ``{"m11": [re, im], ...}``.  Float entries are JSON numbers,
exact entries are strings such as ``"-3/7"``; both round-trip bit-exactly.
A representation is ``{"type": ..., "theta": ..., "matrices": {...}}``.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any

from .errors import IsocoverError
from .orbifold import INF, ClassificationEntry, CoverCandidate, InformationalEntry, OrbifoldSignature
from .reps import REP_TYPES, Theta
from .scalar import GaussianRational
from .sl2 import Mat2
from .words import Word

ENTRY_NAMES = ("m11", "m12", "m21", "m22")


class DecodeError(IsocoverError, ValueError):
    """Input that does not parse as the expected JSON structure."""


def _encode_real(x) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot encode non-finite entry {x}")
    return x


def _decode_real(x) -> Fraction | float:
    if isinstance(x, bool):
        raise DecodeError(f"expected a number or a rational string, got {x!r}")
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise DecodeError(f"bad rational string {x!r}") from exc
    if isinstance(x, (int, float)):
        return float(x)
    raise DecodeError(f"expected a number or a rational string, got {x!r}")


def encode_scalar(z) -> list:
    if isinstance(z, GaussianRational):
        return [str(z.re), str(z.im)]
    z = complex(z)
    return [_encode_real(z.real), _encode_real(z.imag)]


def decode_scalar(pair):
    if not isinstance(pair, list) or len(pair) != 2:
        raise DecodeError(f"a scalar is a [re, im] pair, got {pair!r}")
    re, im = (_decode_real(x) for x in pair)
    if isinstance(re, Fraction) and isinstance(im, Fraction):
        return GaussianRational(re, im)
    if isinstance(re, Fraction) != isinstance(im, Fraction):
        raise DecodeError(f"mixed exact and float parts in {pair!r}")
    return complex(re, im)


def matrix_to_json(M: Mat2) -> dict:
    return {name: encode_scalar(x) for name, x in zip(ENTRY_NAMES, M.entries())}


def matrix_from_json(obj) -> Mat2:
    if not isinstance(obj, dict) or set(obj) != set(ENTRY_NAMES):
        raise DecodeError(f"a matrix needs exactly the keys {ENTRY_NAMES}")
    return Mat2(*(decode_scalar(obj[name]) for name in ENTRY_NAMES))


def _theta_to_json(theta: Theta):
    return str(theta.value) if isinstance(theta.value, Fraction) else theta.value


def rep_to_json(rep) -> dict:
    out = {"type": rep.kind, "theta": None, "matrices": {}}
    if hasattr(rep, "theta"):
        out["theta"] = _theta_to_json(rep.theta)
    out["matrices"] = {name: matrix_to_json(M) for name, M in rep.as_dict().items()}
    return out


def rep_from_json(obj):
    if not isinstance(obj, dict):
        raise DecodeError("a representation must be a JSON object")
    kind = obj.get("type")
    if kind not in REP_TYPES:
        raise DecodeError(f"unknown representation type {kind!r}; expected one of {sorted(REP_TYPES)}")
    cls = REP_TYPES[kind]
    mats = obj.get("matrices")
    if not isinstance(mats, dict) or set(mats) != set(cls.matrix_names):
        raise DecodeError(f"{kind} needs matrices {cls.matrix_names}")
    kwargs = {name: matrix_from_json(mats[name]) for name in cls.matrix_names}
    if "theta" in cls.__dataclass_fields__:
        theta = obj.get("theta")
        if theta is not None:
            try:
                kwargs["theta"] = Theta(Fraction(theta) if isinstance(theta, str) else float(theta))
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise DecodeError(f"bad theta {theta!r}") from exc
    try:
        return cls(**kwargs)
    except IsocoverError as exc:
        raise DecodeError(str(exc)) from exc


def dumps(obj, **kw) -> str:
    return json.dumps(obj, ensure_ascii=False, **kw)


def loads_rep(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"malformed JSON: {exc}") from exc
    return rep_from_json(obj)


# -- words -----------------------------------------------------------------------


def word_to_text(w: Word) -> str:
    return str(w)


def word_from_text(text: str) -> Word:
    try:
        return Word.parse(text)
    except ValueError as exc:
        raise DecodeError(str(exc)) from exc


# -- classification ---------------------------------------------------------------


def _order(nu):
    return "inf" if nu is INF else nu


def signature_to_json(sig: OrbifoldSignature) -> dict:
    return {"genus": sig.genus, "orders": [_order(nu) for nu in sig.orders],
            "normalized_area": str(sig.normalized_area)}


def candidate_to_json(c: CoverCandidate) -> dict:
    return {
        "degree": c.degree,
        "base": signature_to_json(c.base),
        "cover_genus": c.cover_genus,
        "cover_orbifold_count": c.cover_orbifold_count,
        "branch_count": c.branch_count,
        "branching_profile": [{"order": _order(nu), "profile": list(p)} for nu, p in c.points()],
        "free_profiles": [list(p) for p in c.free_profiles],
    }


def entry_to_json(e: ClassificationEntry) -> dict:
    return {"label": e.label, "realizable": e.realizable,
            "candidate": candidate_to_json(e.candidate), "constraints": e.report.as_dict()}


def informational_to_json(e: InformationalEntry) -> dict:
    return {"signature": signature_to_json(e.signature), "note": e.note}
