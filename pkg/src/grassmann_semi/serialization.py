"""JSON and CSV forms of scalars, multivectors and endomorphisms.

Scalar literals: integers and rationals as numbers or ``"p/q"`` strings,
Booleans as ``true``/``false``, max-plus as numbers or ``"-inf"``.

Multivector::

    {"n": 3, "domain": "int", "terms": [{"word": [0, 1], "pos": 1, "neg": 0}]}

Endomorphism (row-major; ``matrix[i][j]`` is the ``b_i`` coordinate of ``f(b_j)``)::

    {"n": 2, "domain": "int", "matrix": [[0, 1], [1, 0]]}
"""

from __future__ import annotations

import csv
import io
import json
import os
from fractions import Fraction
from typing import Any, Optional

from .errors import MatrixParseError, ScalarParseError
from .exterior import MultiVector
from .hasse_schmidt import Endomorphism, ZPolynomial
from .scalars import PairScalar, ScalarDomain, get_domain


def pair_to_json(p: PairScalar) -> list:
    d = p.domain
    return [d.to_json(p.pos), d.to_json(p.neg)]


def multivector_to_json(x: MultiVector) -> dict:
    d = x.domain
    return {
        "n": x.n,
        "domain": d.name,
        "terms": [
            {"word": list(w), "pos": d.to_json(c.pos), "neg": d.to_json(c.neg)} for w, c in x.items()
        ],
    }


def multivector_from_json(obj: dict) -> MultiVector:
    domain = get_domain(obj["domain"])
    n = int(obj["n"])
    terms = {}
    for t in obj.get("terms", []):
        pos = domain.parse(t["pos"]) if "pos" in t else domain.zero
        neg = domain.parse(t["neg"]) if "neg" in t else domain.zero
        coeff = PairScalar(pos, neg, domain)
        word = tuple(t["word"])
        prev = terms.get(word)
        terms[word] = coeff if prev is None else prev + coeff
    return MultiVector(n, domain, terms)


def series_to_json(p: ZPolynomial) -> list:
    return [multivector_to_json(c) for c in p.coeffs]


def endomorphism_to_json(f: Endomorphism) -> dict:
    d = f.domain
    return {"n": f.n, "domain": d.name, "matrix": [[d.to_json(a) for a in row] for row in f.matrix]}


def endomorphism_from_json(obj: dict) -> Endomorphism:
    domain = get_domain(obj["domain"])
    return parse_matrix(json.dumps(obj), domain, int(obj["n"]))


def _load_json(text: str) -> Any:
    return json.loads(text, parse_float=Fraction, parse_constant=_reject_constant)


def _reject_constant(name: str):
    raise MatrixParseError(f"{name} is not an exact scalar; write \"-inf\" as a string")


def _rows_from_text(text: str):
    """Return ``(rows, from_json)``; rows are lists of raw literals."""
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        try:
            data = _load_json(stripped)
        except json.JSONDecodeError as exc:
            raise MatrixParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        return data, True
    rows = []
    for line in csv.reader(io.StringIO(stripped)):
        if not line or all(not cell.strip() for cell in line):
            continue
        rows.append([cell.strip() for cell in line])
    return rows, False


def parse_matrix(path_or_inline: str, domain: ScalarDomain | str, n: Optional[int] = None) -> Endomorphism:
    """Read an endomorphism from a file path or an inline JSON/CSV string.

    Accepted shapes: a JSON list of rows, a JSON endomorphism object, or CSV
    with one row per line.  ``n=None`` takes the rank from the data.
    """
    domain = get_domain(domain)
    text = path_or_inline
    if os.path.isfile(path_or_inline):
        with open(path_or_inline, encoding="utf-8") as fh:
            text = fh.read()
    data, from_json = _rows_from_text(text)
    where = "row" if from_json else "line"
    if isinstance(data, dict):
        if "matrix" not in data:
            raise MatrixParseError("field 'matrix' missing from endomorphism object")
        if "domain" in data and get_domain(data["domain"]) is not domain:
            raise MatrixParseError(f"field 'domain': {data['domain']!r} does not match {domain.name!r}")
        if "n" in data:
            if n is not None and int(data["n"]) != n:
                raise MatrixParseError(f"field 'n': {data['n']} does not match requested n={n}")
            n = int(data["n"])
        data = data["matrix"]
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise MatrixParseError("field 'matrix': expected a list of rows")
    if n is None:
        n = len(data)
    if len(data) != n:
        raise MatrixParseError(f"shape error: expected {n} rows, got {len(data)}")
    rows = []
    for i, row in enumerate(data, start=1):
        if len(row) != n:
            raise MatrixParseError(f"shape error: {where} {i} has {len(row)} entries, expected {n}")
        parsed = []
        for j, literal in enumerate(row, start=1):
            try:
                parsed.append(domain.parse(literal))
            except ScalarParseError as exc:
                raise MatrixParseError(f"{where} {i}, column {j}: {exc}") from None
        rows.append(tuple(parsed))
    return Endomorphism(n, domain, tuple(rows))
