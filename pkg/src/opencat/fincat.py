"""Finite categories, functors and natural transformations.

Everything is explicit data: a category carries its whole composition table,
a functor its object and arrow maps, a natural transformation its components.
Values are immutable and compared structurally (by content, never by name).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    BoundaryMismatchError,
    NotComposableError,
    UnknownArrowError,
    UnknownObjectError,
)

ObjId = str
ArrId = str


class Structural:
    """Mixin giving content-based equality and a cached hash.

    Subclasses implement ``_key`` returning a hashable, order-insensitive
    summary of their content.
    """

    def _key(self):
        raise NotImplementedError

    def key(self):
        cached = self.__dict__.get("_cached_key")
        if cached is None:
            cached = self._key()
            object.__setattr__(self, "_cached_key", cached)
        return cached

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self):
            return NotImplemented
        return hash(self) == hash(other) and self.key() == other.key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        cached = self.__dict__.get("_cached_hash")
        if cached is None:
            cached = hash(self.key())
            object.__setattr__(self, "_cached_hash", cached)
        return cached


@dataclass(frozen=True)
class Violation:
    """One failed axiom, with the identifiers that witness it."""

    rule: str
    witness: tuple = ()
    message: str = ""

    def __str__(self):
        where = ", ".join(str(w) for w in self.witness)
        text = f"{self.rule} at ({where})"
        return f"{text}: {self.message}" if self.message else text


def _frozen_map(mapping):
    return frozenset(mapping.items())


@dataclass(frozen=True, eq=False)
class FinCategory(Structural):
    objects: tuple
    arrows: Mapping[ArrId, tuple]
    compose_table: Mapping[tuple, ArrId]
    identities: Mapping[ObjId, ArrId]
    _hom: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "arrows", {a: tuple(st) for a, st in self.arrows.items()})
        object.__setattr__(self, "compose_table", dict(self.compose_table))
        object.__setattr__(self, "identities", dict(self.identities))

    def _key(self):
        return (
            frozenset(self.objects),
            _frozen_map(self.arrows),
            _frozen_map(self.compose_table),
            _frozen_map(self.identities),
        )

    def __repr__(self):
        return f"FinCategory({len(self.objects)} objects, {len(self.arrows)} arrows)"

    def src(self, f: ArrId) -> ObjId:
        try:
            return self.arrows[f][0]
        except KeyError:
            raise UnknownArrowError(f) from None

    def tgt(self, f: ArrId) -> ObjId:
        try:
            return self.arrows[f][1]
        except KeyError:
            raise UnknownArrowError(f) from None

    def identity(self, c: ObjId) -> ArrId:
        try:
            return self.identities[c]
        except KeyError:
            raise UnknownObjectError(c) from None

    def compose(self, g: ArrId, f: ArrId) -> ArrId:
        """``g . f``: first f, then g."""
        if self.tgt(f) != self.src(g):
            raise NotComposableError(f"cannot compose {g} after {f}: {self.tgt(f)} != {self.src(g)}")
        return self.compose_table[(g, f)]

    def hom(self, c: ObjId, d: ObjId) -> tuple:
        if self._hom is None:
            index = {}
            for a, (s, t) in self.arrows.items():
                index.setdefault((s, t), []).append(a)
            object.__setattr__(self, "_hom", {k: tuple(v) for k, v in index.items()})
        return self._hom.get((c, d), ())

    def composable_pairs(self):
        leaving = {}
        for a, (s, _) in self.arrows.items():
            leaving.setdefault(s, []).append(a)
        for f, (_, t) in self.arrows.items():
            for g in leaving.get(t, ()):
                yield g, f

    def is_identity(self, f: ArrId) -> bool:
        s, t = self.arrows[f]
        return s == t and self.identities.get(s) == f


def compose_arrows(C: FinCategory, g: ArrId, f: ArrId) -> ArrId:
    return C.compose(g, f)


def validate_category(C: FinCategory) -> list:
    out = []
    objects = set(C.objects)
    if len(objects) != len(C.objects):
        dup = [c for c in C.objects if C.objects.count(c) > 1]
        out.append(Violation("duplicate-object", tuple(sorted(set(dup)))))
    for a, (s, t) in C.arrows.items():
        if s not in objects or t not in objects:
            out.append(Violation("arrow-endpoint", (a,), f"{s} -> {t} not among objects"))
    for c in C.objects:
        i = C.identities.get(c)
        if i is None:
            out.append(Violation("identity-missing", (c,)))
        elif C.arrows.get(i) != (c, c):
            out.append(Violation("identity-endpoints", (c, i)))
    for c in C.identities:
        if c not in objects:
            out.append(Violation("identity-unknown-object", (c,)))
    if out:
        return out

    for (g, f), h in C.compose_table.items():
        if f not in C.arrows or g not in C.arrows or C.arrows[f][1] != C.arrows[g][0]:
            out.append(Violation("compose-extra", (g, f), "entry for a non-composable pair"))
        elif h not in C.arrows or C.arrows[h] != (C.arrows[f][0], C.arrows[g][1]):
            out.append(Violation("compose-endpoints", (g, f), f"result {h} has wrong endpoints"))
    for g, f in C.composable_pairs():
        if (g, f) not in C.compose_table:
            out.append(Violation("compose-missing", (g, f)))
    if any(v.rule != "compose-endpoints" for v in out):
        return out

    # unit laws only need a total table; associativity also needs sound endpoints
    for f, (s, t) in C.arrows.items():
        if C.compose_table[(C.identities[t], f)] != f:
            out.append(Violation("left-identity", (f,)))
        if C.compose_table[(f, C.identities[s])] != f:
            out.append(Violation("right-identity", (f,)))
    if out:
        return out
    table = C.compose_table
    leaving = {c: [] for c in C.objects}
    for a, (s, _) in C.arrows.items():
        leaving[s].append(a)
    for g, f in C.composable_pairs():
        gf = table[(g, f)]
        for h in leaving[C.arrows[g][1]]:
            if table[(h, gf)] != table[(table[(h, g)], f)]:
                out.append(Violation("associativity", (h, g, f)))
    return out


# -- constructions ---------------------------------------------------------


def free_category(objects: Iterable[ObjId], edges: Mapping[ArrId, tuple]) -> FinCategory:
    """Free category on a finite acyclic graph.

    Non-identity arrows are the nonempty edge paths; a path through edges
    ``f`` then ``g`` is named ``"g.f"``. Identities are ``"id_<object>"``.
    """
    objects = tuple(objects)
    out_edges = {c: [] for c in objects}
    for e, (s, t) in edges.items():
        out_edges[s].append(e)
    paths = {}  # name -> (src, tgt, edge tuple in traversal order)
    frontier = [(e, (edges[e][0], edges[e][1], (e,))) for e in edges]
    while frontier:
        nxt = []
        for name, (s, t, seq) in frontier:
            paths[name] = (s, t, seq)
            if len(seq) > len(edges):
                raise ValueError("graph has a cycle; its free category is infinite")
            for e in out_edges[t]:
                nseq = seq + (e,)
                nxt.append((".".join(reversed(nseq)), (s, edges[e][1], nseq)))
        frontier = nxt

    ids = {c: f"id_{c}" for c in objects}
    arrows = {ids[c]: (c, c) for c in objects}
    by_seq = {}
    for name, (s, t, seq) in paths.items():
        arrows[name] = (s, t)
        by_seq[seq] = name
    table = {}
    for f, (s, t) in arrows.items():
        for g, (s2, t2) in arrows.items():
            if s2 != t:
                continue
            if f == ids[s]:
                table[(g, f)] = g
            elif g == ids[t]:
                table[(g, f)] = f
            else:
                table[(g, f)] = by_seq[paths[f][2] + paths[g][2]]
    return FinCategory(objects, arrows, table, ids)


def preorder_category(objects: Iterable[ObjId], relation: Iterable[tuple]) -> FinCategory:
    """Thin category on the reflexive-transitive closure of ``relation``."""
    objects = tuple(objects)
    le = {(c, c) for c in objects} | set(relation)
    changed = True
    while changed:
        changed = False
        for (a, b), (b2, c) in itertools.product(list(le), list(le)):
            if b == b2 and (a, c) not in le:
                le.add((a, c))
                changed = True

    def name(a, b):
        return f"id_{a}" if a == b else f"{a}<{b}"

    arrows = {}
    for a in objects:
        for b in objects:
            if (a, b) in le:
                arrows[name(a, b)] = (a, b)
    table = {}
    for f, (a, b) in arrows.items():
        for g, (b2, c) in arrows.items():
            if b2 == b:
                table[(g, f)] = name(a, c)
    return FinCategory(objects, arrows, table, {c: name(c, c) for c in objects})


def product_category(A: FinCategory, B: FinCategory) -> FinCategory:
    def pair(x, y):
        return f"[{x},{y}]"

    objects = tuple(pair(a, b) for a in A.objects for b in B.objects)
    arrows = {}
    for f, (s, t) in A.arrows.items():
        for g, (s2, t2) in B.arrows.items():
            arrows[pair(f, g)] = (pair(s, s2), pair(t, t2))
    table = {}
    for (f2, f1), f in A.compose_table.items():
        for (g2, g1), g in B.compose_table.items():
            table[(pair(f2, g2), pair(f1, g1))] = pair(f, g)
    ids = {pair(a, b): pair(A.identities[a], B.identities[b]) for a in A.objects for b in B.objects}
    return FinCategory(objects, arrows, table, ids)


EMPTY_CATEGORY = FinCategory((), {}, {}, {})


# -- functors --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FinFunctor(Structural):
    dom: FinCategory
    cod: FinCategory
    on_obj: Mapping[ObjId, ObjId]
    on_arr: Mapping[ArrId, ArrId]

    def __post_init__(self):
        object.__setattr__(self, "on_obj", dict(self.on_obj))
        object.__setattr__(self, "on_arr", dict(self.on_arr))

    def _key(self):
        return (self.dom.key(), self.cod.key(), _frozen_map(self.on_obj), _frozen_map(self.on_arr))

    def __repr__(self):
        return f"FinFunctor({self.dom!r} -> {self.cod!r})"

    def obj(self, c: ObjId) -> ObjId:
        try:
            return self.on_obj[c]
        except KeyError:
            raise UnknownObjectError(c) from None

    def arr(self, f: ArrId) -> ArrId:
        try:
            return self.on_arr[f]
        except KeyError:
            raise UnknownArrowError(f) from None


def validate_functor(F: FinFunctor) -> list:
    out = []
    C, D = F.dom, F.cod
    for c in C.objects:
        if c not in F.on_obj:
            out.append(Violation("object-map-missing", (c,)))
        elif F.on_obj[c] not in D.identities:
            out.append(Violation("object-map-codomain", (c, F.on_obj[c])))
    for f in C.arrows:
        if f not in F.on_arr:
            out.append(Violation("arrow-map-missing", (f,)))
        elif F.on_arr[f] not in D.arrows:
            out.append(Violation("arrow-map-codomain", (f, F.on_arr[f])))
    extra = (set(F.on_obj) - set(C.objects)) | (set(F.on_arr) - set(C.arrows))
    for k in sorted(extra):
        out.append(Violation("map-extra", (k,), "not in the domain category"))
    if out:
        return out
    for f, (s, t) in C.arrows.items():
        Ff = F.on_arr[f]
        if D.arrows[Ff] != (F.on_obj[s], F.on_obj[t]):
            out.append(
                Violation("endpoints", (f, Ff), f"{Ff}: {D.arrows[Ff]} but expected {(F.on_obj[s], F.on_obj[t])}")
            )
    for c in C.objects:
        if F.on_arr[C.identities[c]] != D.identities[F.on_obj[c]]:
            out.append(Violation("identity", (c,)))
    for (g, f), h in C.compose_table.items():
        if F.on_arr[h] != D.compose_table.get((F.on_arr[g], F.on_arr[f])):
            out.append(Violation("composition", (g, f), f"F({h}) = {F.on_arr[h]}"))
    return out


def identity_functor(C: FinCategory) -> FinFunctor:
    return FinFunctor(C, C, {c: c for c in C.objects}, {f: f for f in C.arrows})


def constant_functor(C: FinCategory, D: FinCategory, d: ObjId) -> FinFunctor:
    i = D.identity(d)
    return FinFunctor(C, D, {c: d for c in C.objects}, {f: i for f in C.arrows})


def compose_functors(G: FinFunctor, F: FinFunctor) -> FinFunctor:
    """``G o F``."""
    if F.cod != G.dom:
        raise BoundaryMismatchError("codomain of the first functor is not the domain of the second")
    return FinFunctor(
        F.dom,
        G.cod,
        {c: G.on_obj[d] for c, d in F.on_obj.items()},
        {f: G.on_arr[g] for f, g in F.on_arr.items()},
    )


# -- natural transformations -----------------------------------------------


@dataclass(frozen=True, eq=False)
class NatTrans(Structural):
    dom: FinFunctor
    cod: FinFunctor
    components: Mapping[ObjId, ArrId]

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))

    def _key(self):
        return (self.dom.key(), self.cod.key(), _frozen_map(self.components))

    def __repr__(self):
        return f"NatTrans({len(self.components)} components)"

    def __getitem__(self, c: ObjId) -> ArrId:
        try:
            return self.components[c]
        except KeyError:
            raise UnknownObjectError(c) from None


def validate_nat(theta: NatTrans) -> list:
    F, G = theta.dom, theta.cod
    if F.dom != G.dom or F.cod != G.cod:
        return [Violation("boundary", (), "functors are not parallel")]
    C, D = F.dom, F.cod
    out = []
    for c in C.objects:
        a = theta.components.get(c)
        if a is None:
            out.append(Violation("component-missing", (c,)))
        elif D.arrows.get(a) != (F.on_obj[c], G.on_obj[c]):
            out.append(Violation("component-endpoints", (c, a)))
    if out:
        return out
    for f, (s, t) in C.arrows.items():
        left = D.compose_table[(G.on_arr[f], theta.components[s])]
        right = D.compose_table[(theta.components[t], F.on_arr[f])]
        if left != right:
            out.append(Violation("naturality", (f,), f"{left} != {right}"))
    return out


def identity_nat(F: FinFunctor) -> NatTrans:
    return NatTrans(F, F, {c: F.cod.identities[d] for c, d in F.on_obj.items()})


def arrow_component(theta: NatTrans, f: ArrId, check: bool = True) -> ArrId:
    """The diagonal of the naturality square at ``f``.

    With ``check`` set, both paths around the square are computed and must
    agree; otherwise only ``G(f) . theta[c]`` is returned.
    """
    C, D = theta.dom.dom, theta.dom.cod
    s, t = C.arrows.get(f, (None, None))
    if s is None:
        raise UnknownArrowError(f)
    diag = D.compose(theta.cod.on_arr[f], theta.components[s])
    if check:
        other = D.compose(theta.components[t], theta.dom.on_arr[f])
        if other != diag:
            raise ValueError(f"transformation is not natural at {f}: {diag} != {other}")
    return diag


def vcomp_nat(phi: NatTrans, theta: NatTrans) -> NatTrans:
    """``phi . theta`` for ``theta: F => G`` and ``phi: G => H``."""
    if theta.cod != phi.dom:
        raise BoundaryMismatchError("vertical composition: cod(theta) != dom(phi)")
    D = theta.dom.cod
    comps = {c: D.compose(phi.components[c], a) for c, a in theta.components.items()}
    return NatTrans(theta.dom, phi.cod, comps)


def hcomp_nat(phi: NatTrans, theta: NatTrans, check: bool = True) -> NatTrans:
    """Horizontal composite ``phi o theta: G o F => G' o F'``."""
    if theta.dom.cod != phi.dom.dom:
        raise BoundaryMismatchError("horizontal composition: inner codomain != outer domain")
    comps = {c: arrow_component(phi, a, check) for c, a in theta.components.items()}
    return NatTrans(
        compose_functors(phi.dom, theta.dom),
        compose_functors(phi.cod, theta.cod),
        comps,
    )
