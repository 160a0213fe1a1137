"""Reading algebra documents.

A document is UTF-8 JSON of the form::

    {"field": {"prime": 101},
     "quiver": {"vertices": 2, "arrows": [{"name": "a", "source": 1, "target": 2}]},
     "relations": []}

Vertices are 1-based and a relation lists arrow names in the order they are
composed (right-module convention, so ``["a", "b"]`` means a then b).
``field`` may be omitted, in which case the caller's default prime is used;
a prime given in the document always wins.
"""

from __future__ import annotations

import json

import jsonschema

from ..algebra import DEFAULT_PRIME, Algebra, Arrow, PathWord, Quiver, build_monomial_algebra
from ..errors import BadRelation, NonSemisimpleRequired, ParseError
from ..exactlinalg import FieldSpec

SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["quiver"],
    "properties": {
        "field": {
            "type": "object",
            "additionalProperties": False,
            "required": ["prime"],
            "properties": {"prime": {"type": "integer", "minimum": 2}},
        },
        "quiver": {
            "type": "object",
            "additionalProperties": False,
            "required": ["vertices", "arrows"],
            "properties": {
                "vertices": {"type": "integer", "minimum": 1},
                "arrows": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "additionalProperties": False,
                        "required": ["name", "source", "target"],
                        "properties": {
                            "name": {"type": "string", "minLength": 1},
                            "source": {"type": "integer", "minimum": 1},
                            "target": {"type": "integer", "minimum": 1},
                        },
                    },
                },
            },
        },
        "relations": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}},
        },
    },
}


def _where(path) -> str:
    out = "document"
    for part in path:
        out += f"[{part}]" if isinstance(part, int) else f".{part}"
    return out


def load_document(text: str) -> dict:
    """Decode JSON text; syntax errors carry the line and column."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}") from None
    return validate_document(doc)


def validate_document(doc) -> dict:
    """Check ``doc`` against the schema, reporting the first offending field."""
    validator = jsonschema.Draft202012Validator(SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        e = errors[0]
        raise ParseError(e.message, _where(e.absolute_path))
    return doc


def parse_algebra_spec(document: dict | str, default_prime: int = DEFAULT_PRIME) -> Algebra:
    """Build the algebra described by ``document`` (a dict or JSON text).

    Raises:
        ParseError: schema violations, bad vertex numbers, duplicate or unknown
            arrow names, an unusable prime.
        BadRelation: a relation with fewer than two arrows or one that does
            not compose.
        NonSemisimpleRequired: a quiver without arrows.
        NotConnected, InfiniteDimensional: from the algebra constructor.
    """
    doc = load_document(document) if isinstance(document, str) else validate_document(document)
    prime = doc.get("field", {}).get("prime", default_prime)
    try:
        field = FieldSpec(prime)
    except ValueError as e:
        raise ParseError(str(e), "document.field.prime") from None

    qdoc = doc["quiver"]
    n = qdoc["vertices"]
    names: dict[str, int] = {}
    arrows = []
    for k, arr in enumerate(qdoc["arrows"]):
        for key in ("source", "target"):
            if arr[key] > n:
                raise ParseError(f"vertex {arr[key]} out of range 1..{n}", f"document.quiver.arrows[{k}].{key}")
        if arr["name"] in names:
            raise ParseError(f"duplicate arrow name {arr['name']!r}", f"document.quiver.arrows[{k}].name")
        names[arr["name"]] = k
        arrows.append(Arrow(arr["name"], arr["source"], arr["target"]))
    if not arrows:
        raise NonSemisimpleRequired("the quiver has no arrows")
    quiver = Quiver(n, tuple(arrows))

    relations = []
    for r, words in enumerate(doc.get("relations", [])):
        for k, name in enumerate(words):
            if name not in names:
                raise ParseError(f"unknown arrow {name!r}", f"document.relations[{r}][{k}]")
        if len(words) < 2:
            raise BadRelation(f"relation {r} has length {len(words)}; relations need at least two arrows")
        ids = tuple(names[w] for w in words)
        relations.append(PathWord(quiver.arrows[ids[0]].source, ids))
    return build_monomial_algebra(field, quiver, relations)


def read_algebra_file(path: str, default_prime: int = DEFAULT_PRIME) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_algebra_spec(text, default_prime)
