"""Open functors: a presheaf of external interactions plus a functor out of its elements."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .elements import (
    STAR,
    ElementValue,
    Pair,
    Presheaf,
    category_of_elements,
    el_arr,
    el_obj,
    terminal_presheaf,
    validate_presheaf,
)
from .errors import BoundaryMismatchError, SizeLimitError, UnknownElementError, UnknownObjectError, UnknownArrowError
from .fincat import (
    ArrId,
    FinCategory,
    FinFunctor,
    ObjId,
    Structural,
    Violation,
    validate_category,
    validate_functor,
)

DEFAULT_MAX_FIBER = 512


def max_fiber() -> int:
    return int(os.environ.get("OPENCAT_MAX_FIBER", DEFAULT_MAX_FIBER))


@dataclass(frozen=True, eq=False)
class OpenFunctor(Structural):
    alpha: Presheaf
    beta: FinFunctor

    def _key(self):
        return (self.alpha.key(), self.beta.key())

    def __repr__(self):
        return f"OpenFunctor({self.alpha!r}, cod={self.cod!r})"

    @property
    def dom(self) -> FinCategory:
        return self.alpha.base

    @property
    def cod(self) -> FinCategory:
        return self.beta.cod

    @classmethod
    def from_tables(cls, alpha: Presheaf, cod: FinCategory, on_obj: Mapping, on_arr: Mapping) -> "OpenFunctor":
        """Build from ``{(c, x): d}`` and ``{(f, x'): g}`` tables."""
        beta = FinFunctor(
            category_of_elements(alpha),
            cod,
            {el_obj(c, x): d for (c, x), d in on_obj.items()},
            {el_arr(f, x): g for (f, x), g in on_arr.items()},
        )
        return cls(alpha, beta)


def validate_open_functor(F: OpenFunctor) -> list:
    out = [Violation("alpha." + v.rule, v.witness, v.message) for v in validate_presheaf(F.alpha)]
    if not out:
        elements = category_of_elements(F.alpha)
        out += [Violation("elements." + v.rule, v.witness, v.message) for v in validate_category(elements)]
        if F.beta.dom != elements:
            out.append(Violation("beta-domain", (), "domain of beta is not the category of elements of alpha"))
    out += [Violation("beta." + v.rule, v.witness, v.message) for v in validate_functor(F.beta)]
    return out


def identity_open_functor(C: FinCategory) -> OpenFunctor:
    alpha = terminal_presheaf(C)
    return OpenFunctor.from_tables(
        alpha,
        C,
        {(c, STAR): c for c in C.objects},
        {(f, STAR): f for f in C.arrows},
    )


def from_classical(F: FinFunctor) -> OpenFunctor:
    """An ordinary functor seen as an open functor with no external information."""
    return OpenFunctor.from_tables(
        terminal_presheaf(F.dom),
        F.cod,
        {(c, STAR): d for c, d in F.on_obj.items()},
        {(f, STAR): g for f, g in F.on_arr.items()},
    )


def apply_open(F: OpenFunctor, c: ObjId, x: ElementValue) -> ObjId:
    if c not in F.dom.identities:
        raise UnknownObjectError(c)
    if x not in F.alpha.fiber(c):
        raise UnknownElementError(f"{x} is not an interaction available at {c}")
    return F.beta.on_obj[el_obj(c, x)]


def apply_open_arrow(F: OpenFunctor, f: ArrId, x: ElementValue) -> ArrId:
    """Image of ``(f, x')`` where ``x'`` lives over the target of ``f``."""
    if f not in F.dom.arrows:
        raise UnknownArrowError(f)
    if x not in F.alpha.fiber(F.dom.tgt(f)):
        raise UnknownElementError(f"{x} is not an interaction available at {F.dom.tgt(f)}")
    return F.beta.on_arr[el_arr(f, x)]


def _check_size(fibers):
    bound = max_fiber()
    for c, xs in fibers.items():
        if len(xs) > bound:
            raise SizeLimitError(f"composite fiber over {c} has {len(xs)} elements (bound {bound})")


def compose_open(G: OpenFunctor, F: OpenFunctor) -> OpenFunctor:
    """``G o F`` for ``F: C -o D`` and ``G: D -o E``.

    Interactions of the composite over ``c`` are pairs ``<x, y>`` with ``x``
    over ``c`` for F and ``y`` over ``F(c, x)`` for G.
    """
    result = _compose_open(G, F)
    _check_size(result.alpha.on_obj)  # the bound may have tightened since caching
    return result


@lru_cache(maxsize=2048)
def _compose_open(G: OpenFunctor, F: OpenFunctor) -> OpenFunctor:
    if F.cod != G.dom:
        raise BoundaryMismatchError("codomain of the inner open functor is not the domain of the outer one")
    C = F.dom
    Fa, Fb, Ga, Gb = F.alpha, F.beta.on_obj, G.alpha, G.beta.on_obj
    Fb_arr, Gb_arr = F.beta.on_arr, G.beta.on_arr

    fibers = {}
    for c in C.objects:
        fibers[c] = tuple(Pair(x, y) for x in Fa.fiber(c) for y in Ga.fiber(Fb[el_obj(c, x)]))
    _check_size(fibers)

    actions = {}
    for f in C.arrows:
        t = C.tgt(f)
        action = {}
        for x2 in Fa.fiber(t):
            d_arrow = Fb_arr[el_arr(f, x2)]
            x1 = Fa.on_arr[f][x2]
            g_action = Ga.on_arr[d_arrow]
            for y2 in Ga.fiber(Fb[el_obj(t, x2)]):
                action[Pair(x2, y2)] = Pair(x1, g_action[y2])
        actions[f] = action
    alpha = Presheaf(C, fibers, actions)

    on_obj = {}
    for c, xs in fibers.items():
        for p in xs:
            on_obj[el_obj(c, p)] = Gb[el_obj(Fb[el_obj(c, p.left)], p.right)]
    on_arr = {}
    for f, action in actions.items():
        for p in action:
            on_arr[el_arr(f, p)] = Gb_arr[el_arr(Fb_arr[el_arr(f, p.left)], p.right)]
    beta = FinFunctor(category_of_elements(alpha), G.cod, on_obj, on_arr)
    return OpenFunctor(alpha, beta)
