"""Presheaves ``C -> Set^op`` and their categories of elements.

A presheaf here assigns to each object ``c`` a finite set ``P(c)`` and to each
arrow ``f: c -> c'`` a function ``P(c') -> P(c)`` (the restriction along f).
Elements are :class:`Atom`, :data:`STAR` or nested :class:`Pair` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Union

from .errors import BoundaryMismatchError
from .fincat import (
    ArrId,
    FinCategory,
    FinFunctor,
    ObjId,
    Structural,
    Violation,
)

RESERVED = frozenset("<>,|()*[]")


@dataclass(frozen=True)
class Atom:
    label: str

    def __post_init__(self):
        if not self.label or RESERVED & set(self.label) or self.label.strip() != self.label:
            raise ValueError(f"invalid atom label {self.label!r}")

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Star:
    def __str__(self):
        return "*"


@dataclass(frozen=True)
class Pair:
    left: "ElementValue"
    right: "ElementValue"

    def __str__(self):
        return f"<{self.left},{self.right}>"


ElementValue = Union[Atom, Star, Pair]
STAR = Star()


def parse_element(text: str) -> ElementValue:
    """Inverse of ``str`` on elements: ``x``, ``*`` or ``<l,r>``."""
    pos = 0

    def parse():
        nonlocal pos
        if text.startswith("<", pos):
            pos += 1
            left = parse()
            if not text.startswith(",", pos):
                raise ValueError(f"expected ',' at {pos} in {text!r}")
            pos += 1
            right = parse()
            if not text.startswith(">", pos):
                raise ValueError(f"expected '>' at {pos} in {text!r}")
            pos += 1
            return Pair(left, right)
        end = pos
        while end < len(text) and text[end] not in "<>,":
            end += 1
        token = text[pos:end].strip()
        pos = end
        return STAR if token == "*" else Atom(token)

    text = text.strip()
    value = parse()
    if pos != len(text):
        raise ValueError(f"trailing characters in element {text!r}")
    return value


def el_obj(c: ObjId, x: ElementValue) -> ObjId:
    """Identifier of the object ``(c, x)`` of a category of elements."""
    return f"({c}|{x})"


def el_arr(f: ArrId, x: ElementValue) -> ArrId:
    """Identifier of the arrow ``(f, x')`` of a category of elements."""
    return f"({f}|{x})"


# -- presheaves ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Presheaf(Structural):
    base: FinCategory
    on_obj: Mapping[ObjId, tuple]
    on_arr: Mapping[ArrId, Mapping]  # f: c -> c' gives {x' in P(c'): x in P(c)}

    def __post_init__(self):
        object.__setattr__(self, "on_obj", {c: tuple(xs) for c, xs in self.on_obj.items()})
        object.__setattr__(self, "on_arr", {f: dict(m) for f, m in self.on_arr.items()})

    def _key(self):
        return (
            self.base.key(),
            frozenset((c, frozenset(xs)) for c, xs in self.on_obj.items()),
            frozenset((f, frozenset(m.items())) for f, m in self.on_arr.items()),
        )

    def __repr__(self):
        sizes = {c: len(xs) for c, xs in self.on_obj.items()}
        return f"Presheaf({sizes})"

    def fiber(self, c: ObjId) -> tuple:
        return self.on_obj.get(c, ())

    def restrict(self, f: ArrId, x: ElementValue) -> ElementValue:
        return self.on_arr[f][x]


def validate_presheaf(P: Presheaf) -> list:
    C = P.base
    out = []
    for c in C.objects:
        if c not in P.on_obj:
            out.append(Violation("fiber-missing", (c,)))
        elif len(set(P.on_obj[c])) != len(P.on_obj[c]):
            out.append(Violation("duplicate-element", (c,)))
    for c in P.on_obj:
        if c not in C.identities:
            out.append(Violation("fiber-unknown-object", (c,)))
    if out:
        return out
    for f, (s, t) in C.arrows.items():
        action = P.on_arr.get(f)
        if action is None:
            out.append(Violation("action-missing", (f,)))
            continue
        if set(action) != set(P.on_obj[t]):
            out.append(Violation("action-domain", (f,), f"must be defined exactly on P({t})"))
        bad = [x for x, y in action.items() if y not in P.on_obj[s]]
        if bad:
            out.append(Violation("action-codomain", (f, str(bad[0])), f"value not in P({s})"))
    for f in P.on_arr:
        if f not in C.arrows:
            out.append(Violation("action-unknown-arrow", (f,)))
    if out:
        return out
    for c in C.objects:
        action = P.on_arr[C.identities[c]]
        for x in P.on_obj[c]:
            if action[x] != x:
                out.append(Violation("identity-action", (C.identities[c], str(x)), f"sends {x} to {action[x]}"))
    for (g, f), h in C.compose_table.items():
        for x in P.on_obj[C.tgt(g)]:
            if P.on_arr[h][x] != P.on_arr[f][P.on_arr[g][x]]:
                out.append(Violation("composition-action", (g, f, str(x))))
    return out


def terminal_presheaf(C: FinCategory) -> Presheaf:
    return Presheaf(C, {c: (STAR,) for c in C.objects}, {f: {STAR: STAR} for f in C.arrows})


@lru_cache(maxsize=4096)
def category_of_elements(P: Presheaf) -> FinCategory:
    C = P.base
    objects = [el_obj(c, x) for c in C.objects for x in P.fiber(c)]
    arrows = {}
    for f, (s, t) in C.arrows.items():
        action = P.on_arr[f]
        for x in P.fiber(t):
            arrows[el_arr(f, x)] = (el_obj(s, action[x]), el_obj(t, x))
    table = {}
    for (g, f), h in C.compose_table.items():
        g_action = P.on_arr[g]
        for x in P.fiber(C.tgt(g)):
            table[(el_arr(g, x), el_arr(f, g_action[x]))] = el_arr(h, x)
    ids = {el_obj(c, x): el_arr(C.identities[c], x) for c in C.objects for x in P.fiber(c)}
    return FinCategory(objects, arrows, table, ids)


# -- morphisms of presheaves -----------------------------------------------


@dataclass(frozen=True, eq=False)
class PresheafMorphism(Structural):
    """A natural transformation ``F => G`` into ``Set^op``.

    ``components_po[c]`` is the carried function ``G(c) -> F(c)``.
    """

    dom: Presheaf
    cod: Presheaf
    components_po: Mapping[ObjId, Mapping]

    def __post_init__(self):
        object.__setattr__(self, "components_po", {c: dict(m) for c, m in self.components_po.items()})

    def _key(self):
        return (
            self.dom.key(),
            self.cod.key(),
            frozenset((c, frozenset(m.items())) for c, m in self.components_po.items()),
        )

    def __repr__(self):
        return f"PresheafMorphism({self.dom!r} => {self.cod!r})"

    def po(self, c: ObjId, y: ElementValue) -> ElementValue:
        return self.components_po[c][y]


def validate_presheaf_morphism(theta: PresheafMorphism) -> list:
    F, G = theta.dom, theta.cod
    if F.base != G.base:
        return [Violation("boundary", (), "presheaves over different categories")]
    C = F.base
    out = []
    for c in C.objects:
        comp = theta.components_po.get(c)
        if comp is None:
            out.append(Violation("component-missing", (c,)))
            continue
        if set(comp) != set(G.fiber(c)):
            out.append(Violation("component-domain", (c,)))
        for y, x in comp.items():
            if x not in F.fiber(c):
                out.append(Violation("component-codomain", (c, str(y)), f"{x} not in F({c})"))
    if out:
        return out
    for f, (s, t) in C.arrows.items():
        for y in G.fiber(t):
            left = F.on_arr[f][theta.components_po[t][y]]
            right = theta.components_po[s][G.on_arr[f][y]]
            if left != right:
                out.append(Violation("naturality", (f, str(y)), f"{left} != {right}"))
    return out


def identity_presheaf_morphism(P: Presheaf) -> PresheafMorphism:
    return PresheafMorphism(P, P, {c: {x: x for x in P.fiber(c)} for c in P.base.objects})


def vcomp_presheaf_morphism(phi: PresheafMorphism, theta: PresheafMorphism) -> PresheafMorphism:
    """``phi . theta`` for ``theta: F => G``, ``phi: G => H``; carried maps compose in reverse."""
    if theta.cod != phi.dom:
        raise BoundaryMismatchError("presheaf morphisms: cod(theta) != dom(phi)")
    comps = {
        c: {z: theta.components_po[c][y] for z, y in phi.components_po[c].items()}
        for c in phi.components_po
    }
    return PresheafMorphism(theta.dom, phi.cod, comps)


def elements_functor(theta: PresheafMorphism) -> FinFunctor:
    """The functor ``El(G) -> El(F)`` induced by ``theta: F => G``."""
    F, G = theta.dom, theta.cod
    C = G.base
    on_obj = {
        el_obj(c, y): el_obj(c, theta.components_po[c][y]) for c in C.objects for y in G.fiber(c)
    }
    on_arr = {}
    for f, (_, t) in C.arrows.items():
        comp = theta.components_po[t]
        for y in G.fiber(t):
            on_arr[el_arr(f, y)] = el_arr(f, comp[y])
    return FinFunctor(category_of_elements(G), category_of_elements(F), on_obj, on_arr)
