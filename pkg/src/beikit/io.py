"""Graph files, polynomial text syntax and JSON emission.

Graph text format::

    # comment
    n 3
    e 1 2
    e 2 3

or JSON ``{"n": 3, "edges": [[1, 2], [2, 3]]}``.

Polynomials are written like ``3*p[1,2]*p[2,3]^2 - 1/2*p[1,1]``; terms are
emitted in descending lex order, factors inside a term in ascending order.
"""

import json
import re

from .algebra import AUX, PrimeField, Polynomial, from_exponents
from .errors import InputError
from .graph import AdmissiblePath, AntitoneMap, OrderedGraph

SCHEMA = "bei-kit/1"


# --------------------------------------------------------------------------
# graphs
# --------------------------------------------------------------------------

def parse_graph(text):
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            return OrderedGraph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad JSON graph: {exc}") from None
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "n" and len(parts) == 2:
                if n is not None:
                    raise InputError(f"line {lineno}: vertex count given twice")
                n = int(parts[1])
            elif parts[0] == "e" and len(parts) == 3:
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise InputError(f"line {lineno}: cannot parse {line!r}")
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"line {lineno}: cannot parse {line!r}") from None
    if n is None:
        raise InputError("missing 'n <count>' line")
    return OrderedGraph.from_edges(n, edges)


def load_graph(path):
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def format_graph(g):
    lines = [f"n {g.n}"] + [f"e {x} {y}" for x, y in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------

def _format_var(v):
    return "t" if v == AUX else f"p[{v[0]},{v[1]}]"


def format_monomial(m):
    if not m:
        return "1"
    return "*".join(_format_var(v) + (f"^{e}" if e > 1 else "")
                    for v, e in reversed(m))


def format_polynomial(p):
    if p.is_zero():
        return "0"
    F = p.field
    out = []
    for m, c in p.sorted_terms():
        if isinstance(F, PrimeField):
            sign, mag = "+", c
        else:
            sign, mag = ("-", -c) if c < 0 else ("+", c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = format_monomial(m)
        else:
            body = f"{mag}*{format_monomial(m)}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_VAR = re.compile(r"^(?:p\[\s*(\d+)\s*,\s*(\d+)\s*\]|t)(?:\^(\d+))?$")
_NUM = re.compile(r"^\d+(?:/\d+)?$")


def parse_polynomial(text, field, d0=None, n=None):
    """Parse the text syntax; optionally check variable ranges against d0 and n."""
    src = text.strip()
    if not src:
        raise InputError("empty polynomial")
    pos = 0
    terms = {}
    while pos < len(src):
        match = _TERM.match(src, pos)
        if not match or match.end() == pos:
            raise InputError(f"cannot parse polynomial at {src[pos:]!r}")
        sign, body = match.group(1), match.group(2).strip()
        if not body:
            raise InputError(f"dangling sign in {src!r}")
        if pos > 0 and sign is None:
            raise InputError(f"missing operator in {src!r}")
        pos = match.end()
        coef = field(1)
        exps = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if _NUM.match(factor):
                try:
                    coef = coef * field(factor)
                except ZeroDivisionError:
                    raise InputError(f"zero denominator in {factor!r}") from None
                continue
            vm = _VAR.match(factor)
            if not vm:
                raise InputError(f"cannot parse factor {factor!r}")
            if vm.group(1) is None:
                v = AUX
            else:
                v = (int(vm.group(1)), int(vm.group(2)))
                if d0 is not None and not 1 <= v[0] <= d0:
                    raise InputError(f"row {v[0]} outside 1..{d0}")
                if n is not None and not 1 <= v[1] <= n:
                    raise InputError(f"vertex {v[1]} outside 1..{n}")
            exps[v] = exps.get(v, 0) + int(vm.group(3) or 1)
        if sign == "-":
            coef = -coef
        m = from_exponents(exps)
        terms[m] = field.normalize(terms.get(m, 0) + field.normalize(coef))
    return Polynomial(terms, field)


# --------------------------------------------------------------------------
# JSON
# --------------------------------------------------------------------------

def basis_to_json(basis):
    return [{
        "path": list(e.path.vertices),
        "kappa": list(e.kappa.values),
        "polynomial": format_polynomial(e.poly),
        "initial": format_monomial(e.initial),
    } for e in basis]


def basis_from_json(items, field, d0=None, n=None):
    """Polynomials of a serialized basis, with provenance where present."""
    from .gbasis import BasisElement
    out = []
    for item in items:
        try:
            poly = parse_polynomial(item["polynomial"], field, d0, n)
        except (KeyError, TypeError):
            raise InputError("basis entry lacks a 'polynomial' field") from None
        if poly.is_zero():
            raise InputError("basis entry is the zero polynomial")
        if "path" in item and "kappa" in item:
            path = AdmissiblePath(tuple(item["path"]))
            kappa = AntitoneMap(tuple(item["kappa"]), d0 or max(item["kappa"]))
            out.append(BasisElement(path, kappa, poly, poly.leading_monomial()))
        else:
            out.append(poly)
    return out


def components_to_json(components, field, list_limit=200):
    out = []
    for comp in components:
        n_mono, n_bin = comp.count_generators()
        entry = {
            "y": list(comp.y),
            "blocks": [list(b) for b in comp.components],
            "monomial_generators": n_mono,
            "binomial_generators": n_bin,
        }
        if list_limit is None or n_mono + n_bin <= list_limit:
            entry["generators"] = [format_polynomial(q) for q in comp.generators(field)]
        out.append(entry)
    return out


def dumps(payload):
    return json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=False)
