"""Versioned JSON encoding of series, characters and forms.

Every document carries the header ``{p, N, M, Q, schema}``; integers are
least non-negative residues modulo p^prec.  Output is canonical (sorted keys,
fixed separators) so equal objects serialize to equal bytes.
"""
from __future__ import annotations

import json

from .connection import NearlyOCForm
from .errors import SchemaError
from .padic import FamilyElement, PadicInt, PrecisionProfile
from .qseries import QSeries
from .weights import Character

__all__ = ["SCHEMA", "header", "to_payload", "from_payload", "dumps", "loads", "profile_from_header"]

SCHEMA = 1


def header(profile):
    return {"p": profile.p, "N": profile.N, "M": profile.M, "Q": profile.Q, "schema": SCHEMA}


def profile_from_header(h):
    try:
        if h["schema"] != SCHEMA:
            raise SchemaError(f"schema version {h['schema']!r} is not supported (expected {SCHEMA})")
        return PrecisionProfile(p=h["p"], N=h["N"], M=h["M"], Q=h["Q"])
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed header: {exc}") from None


def _series(f):
    return {"type": "series", "family": f.family, "prec": f.prec, "coeffs": f.ints()}


def _character(chi):
    lam = chi.lam
    if isinstance(lam, FamilyElement):
        cs = list(lam.coeffs) + [0] * (lam.profile.M - len(lam.coeffs))
        family = True
    else:
        cs = [lam.residue] + [0] * (lam.profile.M - 1)
        family = False
    return {"type": "character", "tame": chi.tame, "lambda": cs, "family": family, "prec": lam.prec, "k": chi.k}


def _form(F):
    return {
        "type": "form",
        "weight": _character(F.weight),
        "r": F.r,
        "splitting": F.splitting,
        "family": F.family,
        "prec": min(c.prec for c in F.components),
        "components": [c.ints() for c in F.components],
    }


def to_payload(obj):
    if isinstance(obj, QSeries):
        return _series(obj)
    if isinstance(obj, Character):
        return _character(obj)
    if isinstance(obj, NearlyOCForm):
        return _form(obj)
    raise SchemaError(f"cannot serialize {type(obj).__name__}")


def _load_series(d, profile):
    return QSeries(d["coeffs"], profile, family=d["family"], prec=d["prec"])


def _load_character(d, profile):
    if d["family"]:
        lam = FamilyElement(d["lambda"], profile, d["prec"])
    else:
        if any(d["lambda"][1:]):
            raise SchemaError("a scalar character has u-dependent lambda")
        lam = PadicInt(d["lambda"][0], profile, d["prec"])
    return Character(d["tame"], lam, d.get("k"))


def _load_form(d, profile):
    chi = _load_character(d["weight"], profile)
    comps = tuple(QSeries(c, profile, family=d["family"], prec=d["prec"]) for c in d["components"])
    if len(comps) != d["r"] + 1:
        raise SchemaError(f"type r = {d['r']} needs {d['r'] + 1} components, got {len(comps)}")
    return NearlyOCForm(chi, comps, d["splitting"])


_LOADERS = {"series": _load_series, "character": _load_character, "form": _load_form}


def from_payload(d, profile):
    try:
        return _LOADERS[d["type"]](d, profile)
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed payload: {exc!r}") from None


def dumps(obj, profile=None, **extra):
    """Canonical JSON document {header, payload, ...extra}."""
    profile = profile or obj.profile
    doc = {"header": header(profile), "payload": to_payload(obj) if obj is not None else None, **extra}
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def loads(text):
    """Inverse of ``dumps``: returns (object, profile)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "header" not in doc or "payload" not in doc:
        raise SchemaError("document needs 'header' and 'payload'")
    profile = profile_from_header(doc["header"])
    return from_payload(doc["payload"], profile), profile
