"""Canonical JSON documents for every value type.

A document is ``{"format_version": 1, "kind": ..., "payload": ...}``. Mapping
keys and arrow-indexed rows are sorted on output; element and object
sequences keep their stored order, so ``serialize(parse(serialize(v))) == serialize(v)``. Elements are
written as strings (atoms), ``"*"`` (the star) or two-element lists (pairs).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any

from ..elements import STAR, Atom, Pair, Presheaf, PresheafMorphism, el_arr, el_obj
from ..errors import ParseError
from ..fincat import FinCategory, FinFunctor, NatTrans
from ..openfun import OpenFunctor
from ..opennat import OpenNatTrans, make_open_nat

FORMAT_VERSION = 1
KINDS = (
    "category",
    "presheaf",
    "presheaf_morphism",
    "functor",
    "nattrans",
    "open_functor",
    "open_nat_trans",
    "law_request",
)


@dataclass(frozen=True)
class LawRequest:
    law: str = "all"
    seed: int = 0
    count: int = 10
    max_objects: int = 3
    max_extra_arrows: int = 4
    max_fiber: int = 3
    category_style: str = "mixed"


@dataclass(frozen=True)
class Document:
    kind: str
    value: Any
    format_version: int = FORMAT_VERSION


# -- encoding --------------------------------------------------------------


def element_to_json(x):
    if isinstance(x, Pair):
        return [element_to_json(x.left), element_to_json(x.right)]
    if x == STAR:
        return "*"
    return x.label


def category_to_json(C: FinCategory) -> dict:
    compose = {}
    for (g, f), h in C.compose_table.items():
        compose.setdefault(g, {})[f] = h
    return {
        "objects": list(C.objects),
        "arrows": {a: list(st) for a, st in C.arrows.items()},
        "identities": dict(C.identities),
        "compose": compose,
    }


def presheaf_to_json(P: Presheaf) -> dict:
    return {
        "category": category_to_json(P.base),
        "sets": {c: [element_to_json(x) for x in P.fiber(c)] for c in P.base.objects},
        "actions": {
            f: [[element_to_json(x), element_to_json(P.on_arr[f][x])] for x in P.fiber(P.base.tgt(f))]
            for f in P.base.arrows
        },
    }


def functor_to_json(F: FinFunctor) -> dict:
    return {
        "dom": category_to_json(F.dom),
        "cod": category_to_json(F.cod),
        "on_objects": dict(F.on_obj),
        "on_arrows": dict(F.on_arr),
    }


def _po_table(P: Presheaf, comps) -> dict:
    return {c: [[element_to_json(y), element_to_json(comps[c][y])] for y in P.fiber(c)] for c in P.base.objects}


def open_functor_to_json(F: OpenFunctor) -> dict:
    C, P = F.dom, F.alpha
    return {
        "alpha": presheaf_to_json(P),
        "codomain": category_to_json(F.cod),
        "on_objects": [[c, element_to_json(x), F.beta.on_obj[el_obj(c, x)]] for c in C.objects for x in P.fiber(c)],
        "on_arrows": [
            [f, element_to_json(x), F.beta.on_arr[el_arr(f, x)]] for f in sorted(C.arrows) for x in P.fiber(C.tgt(f))
        ],
    }


def to_json(value) -> dict:
    if isinstance(value, Document):
        value = value.value
    if isinstance(value, FinCategory):
        kind, payload = "category", category_to_json(value)
    elif isinstance(value, Presheaf):
        kind, payload = "presheaf", presheaf_to_json(value)
    elif isinstance(value, PresheafMorphism):
        kind = "presheaf_morphism"
        payload = {
            "dom": presheaf_to_json(value.dom),
            "cod": presheaf_to_json(value.cod),
            "components": _po_table(value.cod, value.components_po),
        }
    elif isinstance(value, FinFunctor):
        kind, payload = "functor", functor_to_json(value)
    elif isinstance(value, NatTrans):
        kind = "nattrans"
        payload = {
            "dom": functor_to_json(value.dom),
            "cod": functor_to_json(value.cod),
            "components": dict(value.components),
        }
    elif isinstance(value, OpenFunctor):
        kind, payload = "open_functor", open_functor_to_json(value)
    elif isinstance(value, OpenNatTrans):
        kind = "open_nat_trans"
        G = value.cod
        payload = {
            "dom": open_functor_to_json(value.dom),
            "cod": open_functor_to_json(G),
            "alpha": _po_table(G.alpha, value.alpha.components_po),
            "beta": [
                [c, element_to_json(y), value.beta.components[el_obj(c, y)]]
                for c in G.dom.objects
                for y in G.alpha.fiber(c)
            ],
        }
    elif isinstance(value, LawRequest):
        kind, payload = "law_request", dict(value.__dict__)
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    return {"format_version": FORMAT_VERSION, "kind": kind, "payload": payload}


def serialize(value) -> str:
    return json.dumps(to_json(value), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- decoding --------------------------------------------------------------


class _Duplicate(Exception):
    def __init__(self, key):
        self.key = key


def _no_duplicates(pairs):
    seen = {}
    for k, v in pairs:
        if k in seen:
            raise _Duplicate(k)
        seen[k] = v
    return seen


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _need(obj, key, typ, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, typ):
        raise ParseError(f"{where}.{key}: expected {typ.__name__ if isinstance(typ, type) else typ}")
    return value


def element_from_json(data, where="element"):
    if isinstance(data, str):
        if data == "*":
            return STAR
        try:
            return Atom(data)
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from None
    if isinstance(data, list) and len(data) == 2:
        return Pair(element_from_json(data[0], where), element_from_json(data[1], where))
    raise ParseError(f"{where}: an element is a string, '*' or a two-element list")


def category_from_json(d, where="category") -> FinCategory:
    objects = _need(d, "objects", list, where)
    arrows = _need(d, "arrows", dict, where)
    for a, st in arrows.items():
        if not (isinstance(st, list) and len(st) == 2):
            raise ParseError(f"{where}.arrows.{a}: expected [source, target]")
    table = {}
    for g, row in _need(d, "compose", dict, where).items():
        if not isinstance(row, dict):
            raise ParseError(f"{where}.compose.{g}: expected a mapping")
        for f, h in row.items():
            table[(g, f)] = h
    return FinCategory(objects, arrows, table, _need(d, "identities", dict, where))


def presheaf_from_json(d, where="presheaf") -> Presheaf:
    C = category_from_json(_need(d, "category", dict, where), where + ".category")
    sets = {c: tuple(element_from_json(x, f"{where}.sets.{c}") for x in xs) for c, xs in _need(d, "sets", dict, where).items()}
    actions = {}
    for f, rows in _need(d, "actions", dict, where).items():
        actions[f] = _pairs(rows, f"{where}.actions.{f}")
    return Presheaf(C, sets, actions)


def _pairs(rows, where):
    if not isinstance(rows, list) or not all(isinstance(r, list) and len(r) == 2 for r in rows):
        raise ParseError(f"{where}: expected a list of [from, to] pairs")
    out = {}
    for a, b in rows:
        key = element_from_json(a, where)
        if key in out:
            raise ParseError(f"{where}: element {key} listed twice")
        out[key] = element_from_json(b, where)
    return out


def functor_from_json(d, where="functor") -> FinFunctor:
    return FinFunctor(
        category_from_json(_need(d, "dom", dict, where), where + ".dom"),
        category_from_json(_need(d, "cod", dict, where), where + ".cod"),
        _need(d, "on_objects", dict, where),
        _need(d, "on_arrows", dict, where),
    )


def open_functor_from_json(d, where="open_functor") -> OpenFunctor:
    alpha = presheaf_from_json(_need(d, "alpha", dict, where), where + ".alpha")
    cod = category_from_json(_need(d, "codomain", dict, where), where + ".codomain")
    on_obj, on_arr = {}, {}
    for table, name in ((on_obj, "on_objects"), (on_arr, "on_arrows")):
        for row in _need(d, name, list, where):
            if not (isinstance(row, list) and len(row) == 3):
                raise ParseError(f"{where}.{name}: expected [id, element, image] rows")
            table[(row[0], element_from_json(row[1], f"{where}.{name}"))] = row[2]
    return OpenFunctor.from_tables(alpha, cod, on_obj, on_arr)


def from_json(doc) -> Document:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    version = _need(doc, "format_version", int, "document")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version}")
    kind = _need(doc, "kind", str, "document")
    payload = _need(doc, "payload", dict, "document")
    if kind == "category":
        value = category_from_json(payload)
    elif kind == "presheaf":
        value = presheaf_from_json(payload)
    elif kind == "presheaf_morphism":
        dom = presheaf_from_json(_need(payload, "dom", dict, kind), kind + ".dom")
        cod = presheaf_from_json(_need(payload, "cod", dict, kind), kind + ".cod")
        comps = {c: _pairs(rows, f"{kind}.components.{c}") for c, rows in _need(payload, "components", dict, kind).items()}
        value = PresheafMorphism(dom, cod, comps)
    elif kind == "functor":
        value = functor_from_json(payload)
    elif kind == "nattrans":
        value = NatTrans(
            functor_from_json(_need(payload, "dom", dict, kind), kind + ".dom"),
            functor_from_json(_need(payload, "cod", dict, kind), kind + ".cod"),
            _need(payload, "components", dict, kind),
        )
    elif kind == "open_functor":
        value = open_functor_from_json(payload)
    elif kind == "open_nat_trans":
        F = open_functor_from_json(_need(payload, "dom", dict, kind), kind + ".dom")
        G = open_functor_from_json(_need(payload, "cod", dict, kind), kind + ".cod")
        alpha = {c: _pairs(rows, f"{kind}.alpha.{c}") for c, rows in _need(payload, "alpha", dict, kind).items()}
        beta = {}
        for row in _need(payload, "beta", list, kind):
            if not (isinstance(row, list) and len(row) == 3):
                raise ParseError(f"{kind}.beta: expected [object, element, arrow] rows")
            beta[(row[0], element_from_json(row[1], kind + ".beta"))] = row[2]
        try:
            value = make_open_nat(F, G, alpha, beta)
        except KeyError as exc:
            raise ParseError(f"{kind}: incomplete alpha table ({exc})") from None
    elif kind == "law_request":
        fields = LawRequest.__dataclass_fields__
        unknown = set(payload) - set(fields)
        if unknown:
            raise ParseError(f"law_request: unknown fields {sorted(unknown)}")
        value = LawRequest(**payload)
    else:
        raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    return Document(kind, value, version)


def parse(text: str) -> Document:
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    except _Duplicate as dup:
        matches = list(re.finditer(re.escape(json.dumps(dup.key)) + r"\s*:", text))
        line, column = _position(text, matches[-1].start()) if matches else (0, 0)
        raise ParseError(f"duplicate key {dup.key!r}", line, column) from None
    return from_json(doc)
