"""Parsing and validation of algebra description documents.

Documents are validated against the versioned JSON schema shipped with the
package before any computation; constants may be integers, fraction strings
("3/4") for rational bases, or polynomial strings in the declared base
variables.
"""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

from .algebra import FiniteFreeAlgebra, biquadratic, diagonal, from_monogenic, product
from .errors import SchemaError
from .ringkit import GF, MultiPoly, QQ, ZZ
from .textforms import parse_poly

_SCHEMA = None


def descriptor_schema() -> dict:
    global _SCHEMA
    if _SCHEMA is None:
        text = resources.files("finfree").joinpath("algebra_descriptor.schema.json").read_text()
        _SCHEMA = json.loads(text)
    return _SCHEMA


def validate_descriptor(doc: dict) -> None:
    try:
        jsonschema.validate(doc, descriptor_schema())
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"descriptor rejected: {exc.message}") from exc


def _base_domain(doc: dict):
    base = doc["base"]
    kind = base["kind"]
    if kind == "int":
        dom = ZZ
    elif kind == "rat":
        dom = QQ
    else:
        dom = GF(base["p"])
    return dom, tuple(base.get("base_vars", ()))


def _constant(c, dom, base_vars) -> MultiPoly:
    if isinstance(c, int):
        return MultiPoly.from_int(dom, base_vars, c)
    return parse_poly(c, dom, base_vars)


def _build(presentation: dict, dom, base_vars) -> FiniteFreeAlgebra:
    kind = presentation["kind"]
    if kind == "monogenic":
        coeffs = [_constant(c, dom, base_vars) for c in presentation["coeffs"]]
        return from_monogenic(dom, coeffs, base_vars=base_vars)
    if kind == "diagonal":
        return diagonal(dom, presentation["n"], base_vars=base_vars)
    if kind == "biquadratic":
        return biquadratic(dom, presentation["variant"], base_vars=base_vars)
    if kind == "product":
        factors = [_build(f, dom, base_vars) for f in presentation["factors"]]
        out = factors[0]
        for f in factors[1:]:
            out = product(out, f)
        return out
    if kind == "structure_constants":
        rank = presentation["rank"]
        table = presentation["table"]
        unit = presentation["unit"]
        if len(table) != rank or any(len(row) != rank for row in table):
            raise SchemaError("structure-constant table must be rank x rank")
        if any(len(vec) != rank for row in table for vec in row) or len(unit) != rank:
            raise SchemaError("structure-constant vectors must have length rank")
        t = [[[_constant(c, dom, base_vars) for c in vec] for vec in row] for row in table]
        u = [_constant(c, dom, base_vars) for c in unit]
        return FiniteFreeAlgebra(dom, base_vars, rank, t, u)
    raise SchemaError(f"unknown presentation kind {kind!r}")


def load_descriptor(doc: dict) -> FiniteFreeAlgebra:
    """Validate a descriptor document and build the algebra it describes."""
    validate_descriptor(doc)
    dom, base_vars = _base_domain(doc)
    return _build(doc["presentation"], dom, base_vars)


def load_descriptor_file(path: str) -> FiniteFreeAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    return load_descriptor(doc)
