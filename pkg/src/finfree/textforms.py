"""Canonical polynomial text form and its parser.

The wire format is the graded-lex canonical string of MultiPoly: terms sorted
by (total degree, exponents) descending with the registry ordered X first,
then T1..Tn, then base variables; inside a term the variables are listed base
variables first, T's ascending, X last.  Every emitted string re-parses to
the identical polynomial.
"""

from __future__ import annotations

import re

from .errors import InvalidInputError
from .ringkit import MultiPoly, XPoly
from .generic import _display_order

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<op>[\^\*\+\-]))")


def poly_text(obj) -> str:
    """Canonical text of a MultiPoly or XPoly (flattened over X)."""
    if isinstance(obj, XPoly):
        flat = obj.to_multipoly(("X",) + obj.vars if "X" not in obj.vars else obj.vars)
        return flat.canonical_str(_display_order(flat.vars))
    return obj.canonical_str(_display_order(obj.vars))


def _tokenize(s: str):
    pos = 0
    out = []
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            if s[pos:].strip() == "":
                break
            raise InvalidInputError(f"cannot tokenize polynomial text at: {s[pos:]!r}")
        if m.group("num") is not None:
            out.append(("num", m.group("num")))
        elif m.group("name") is not None:
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


def parse_poly(s: str, domain, variables) -> MultiPoly:
    """Parse a canonical-form polynomial string over the given registry."""
    variables = tuple(variables)
    toks = _tokenize(s)
    if not toks:
        raise InvalidInputError("empty polynomial text")
    result = MultiPoly.zero(domain, variables)
    i = 0
    sign = 1
    first = True
    while i < len(toks):
        if toks[i] == ("op", "+"):
            sign, i = 1, i + 1
        elif toks[i] == ("op", "-"):
            sign, i = -1, i + 1
        elif not first:
            raise InvalidInputError(f"expected + or - before term at token {toks[i]}")
        first = False
        coeff = domain.one()
        exps = [0] * len(variables)
        expect_factor = True
        while i < len(toks):
            kind, val = toks[i]
            if kind == "op" and val in "+-":
                break
            if kind == "op" and val == "*":
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise InvalidInputError(f"missing '*' before {val!r}")
            if kind == "num":
                coeff = domain.mul(coeff, domain.parse(val))
                i += 1
            elif kind == "name":
                if val not in variables:
                    raise InvalidInputError(f"unknown variable {val!r}")
                power = 1
                i += 1
                if i + 1 < len(toks) and toks[i] == ("op", "^") and toks[i + 1][0] == "num":
                    power = int(toks[i + 1][1])
                    i += 2
                exps[variables.index(val)] += power
            else:
                raise InvalidInputError(f"unexpected token {val!r}")
            expect_factor = False
        if expect_factor:
            raise InvalidInputError("dangling operator in polynomial text")
        c = coeff if sign > 0 else domain.neg(coeff)
        result = result + MultiPoly(domain, variables, {tuple(exps): c})
    return result
