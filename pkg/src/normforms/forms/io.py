"""Form files: JSON records with exact coefficient strings.

::

    {"degree": 3, "dim": 3, "field": {"kind": "rationals"},
     "variables": ["x", "y", "z"], "params": [],
     "terms": [["1", [3, 0, 0]], ["-6", [1, 1, 1]]],
     "algebra": {"constants": [[["1", ...]]], "unit": ["1", "0", "0"]}}

Exponent tuples follow ``variables`` then ``params``. ``algebra`` is
optional and marks the form as composition-permitting.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..exactalg.fields import field_from_descriptor
from ..exactalg.poly import SparsePoly
from .algebra import AlgebraStructure
from .form import Form


class FormFileError(ValueError):
    """Malformed form or extension file."""


def _fmt(field, c):
    if hasattr(field, "serialize"):
        return field.serialize(c)
    return field.format(c)


def form_to_dict(phi: Form) -> dict:
    F = phi.field
    terms = [[_fmt(F, c), list(e)] for e, c in phi.poly.sorted_terms()]
    out = {
        "degree": phi.degree,
        "dim": phi.dim,
        "field": F.descriptor(),
        "variables": list(phi.variables),
        "params": list(phi.params),
        "terms": terms,
        "origin": phi.origin,
    }
    if phi.algebra is not None:
        A = phi.algebra
        out["algebra"] = {
            "name": A.name,
            "constants": [[[_fmt(F, c) for c in v] for v in row] for row in A.c],
            "unit": None if A.unit is None else [_fmt(F, c) for c in A.unit],
        }
    return out


def form_from_dict(d: dict) -> Form:
    try:
        F = field_from_descriptor(d.get("field", {"kind": "rationals"}))
        variables = [str(v) for v in d["variables"]]
        params = [str(v) for v in d.get("params", [])]
        names = variables + params
        terms = {}
        for coeff, exps in d["terms"]:
            if len(exps) != len(names):
                raise FormFileError(f"exponent list {exps} does not match {len(names)} names")
            key = tuple(int(k) for k in exps)
            terms[key] = terms.get(key, F.zero) + F.parse(coeff)
        poly = SparsePoly(names, terms, F)
        algebra = None
        if d.get("algebra"):
            A = d["algebra"]
            consts = [[[F.parse(c) for c in v] for v in row] for row in A["constants"]]
            unit = A.get("unit")
            algebra = AlgebraStructure(consts, None if unit is None else
                                       [F.parse(c) for c in unit], F, A.get("name", "algebra"))
        phi = Form(poly, int(d["degree"]), variables, params, algebra, d.get("origin"))
    except FormFileError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormFileError(f"malformed form record: {exc}") from exc
    if "dim" in d and int(d["dim"]) != phi.dim:
        raise FormFileError(f"dim {d['dim']} does not match {phi.dim} variables")
    return phi


def load_form(path) -> Form:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormFileError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise FormFileError(f"{path}: expected a JSON object")
    return form_from_dict(data)


def dump_form(phi: Form, path=None) -> str:
    text = json.dumps(form_to_dict(phi), indent=2)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
