"""Seeded generators of valid instances.

Categories are only built by constructions that are categories by design
(free categories on DAGs, preorders, products); presheaves, functors and
transformations are found by randomised backtracking search and are valid by
construction. Identical parameters always give identical output.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, replace
from typing import Iterator, Optional

from ..elements import Atom, Presheaf, PresheafMorphism, category_of_elements, validate_presheaf
from ..fincat import (
    FinCategory,
    FinFunctor,
    NatTrans,
    constant_functor,
    free_category,
    preorder_category,
    product_category,
)
from ..openfun import OpenFunctor
from ..opennat import OpenNatTrans, beta_domain, identity_open_nat

STYLES = ("dag_free", "preorder", "product")

_SEARCH_BUDGET = 20000


@dataclass(frozen=True)
class GenParams:
    seed: int = 0
    max_objects: int = 3
    max_extra_arrows: int = 4
    max_fiber: int = 3
    category_style: str = "dag_free"  # one of STYLES, or "mixed" to draw one per category

    def __post_init__(self):
        if self.category_style not in STYLES + ("mixed",):
            raise ValueError(f"unknown category style {self.category_style!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def derive(self, *tags) -> "GenParams":
        """Independent parameters for a named sub-generation."""
        digest = hashlib.sha256(repr((self.seed,) + tags).encode()).digest()
        return replace(self, seed=int.from_bytes(digest[:8], "big"))


def _rng(p: GenParams) -> random.Random:
    return random.Random(p.seed)


# -- categories ------------------------------------------------------------


def gen_category(p: GenParams) -> FinCategory:
    rng = _rng(p)
    style = p.category_style
    if style == "mixed":
        style = rng.choice(STYLES)
    if style == "product":
        small = replace(p, max_objects=min(2, p.max_objects), max_extra_arrows=min(2, p.max_extra_arrows))
        left = gen_category(replace(small.derive("left"), category_style=rng.choice(STYLES[:2])))
        right = gen_category(replace(small.derive("right"), category_style=rng.choice(STYLES[:2])))
        return product_category(left, right)

    n = rng.randint(1, p.max_objects) if p.max_objects > 0 else 0
    objects = [f"o{i}" for i in range(n)]
    k = rng.randint(0, p.max_extra_arrows) if n > 1 else 0
    if style == "dag_free":
        edges = {}
        for e in range(k):
            i, j = sorted(rng.sample(range(n), 2))
            edges[f"f{e}"] = (objects[i], objects[j])
        return free_category(objects, edges)
    relation = []
    for _ in range(k):
        i, j = rng.sample(range(n), 2)
        relation.append((objects[i], objects[j]))
    return preorder_category(objects, relation)


# -- presheaves ------------------------------------------------------------


def _factorisations(C: FinCategory) -> Optional[dict]:
    """Write every non-identity arrow as a path of indecomposable arrows, if possible."""
    non_id = [a for a in C.arrows if not C.is_identity(a)]
    decompositions = {a: [] for a in non_id}
    for (g, f), h in C.compose_table.items():
        if h in decompositions and not C.is_identity(g) and not C.is_identity(f):
            decompositions[h].append((g, f))
    paths = {}
    visiting = set()

    def path(a):
        if a in paths:
            return paths[a]
        if a in visiting:
            return None
        if not decompositions[a]:
            paths[a] = (a,)
            return paths[a]
        visiting.add(a)
        for g, f in decompositions[a]:
            pf, pg = path(f), path(g)
            if pf is not None and pg is not None:
                paths[a] = pf + pg
                break
        visiting.discard(a)
        return paths.get(a)

    for a in non_id:
        if path(a) is None:
            return None
    return paths


def _fiber_sizes(rng, C, max_fiber):
    return {c: (rng.randint(1, max_fiber) if rng.random() < 0.85 else 0) for c in C.objects}


def _presheaf_from_generators(rng, C, max_fiber, paths):
    sizes = _fiber_sizes(rng, C, max_fiber)
    fibers = {c: tuple(Atom(f"e{i}") for i in range(sizes[c])) for c in C.objects}
    gen_actions = {}
    for a in dict.fromkeys(x for seq in paths.values() for x in seq):
        s, t = C.arrows[a]
        if fibers[t] and not fibers[s]:
            return None
        gen_actions[a] = {x: rng.choice(fibers[s]) for x in fibers[t]}
    actions = {}
    for a, (s, t) in C.arrows.items():
        if C.is_identity(a):
            actions[a] = {x: x for x in fibers[t]}
            continue
        action = {x: x for x in fibers[t]}
        for step in reversed(paths[a]):
            action = {x: gen_actions[step][y] for x, y in action.items()}
        actions[a] = action
    P = Presheaf(C, fibers, actions)
    return P if not validate_presheaf(P) else None


def _presheaf_from_representables(rng, C, max_fiber):
    """Disjoint union of representables ``Hom(-, c0)`` and singletons, fibers kept bounded."""
    summands = []
    sizes = {c: 0 for c in C.objects}
    target = rng.randint(1, max(1, max_fiber))
    for _ in range(4 * target):
        if rng.random() < 0.6 and C.objects:
            c0 = rng.choice(C.objects)
            contrib = {c: len(C.hom(c, c0)) for c in C.objects}
            kind = ("rep", c0)
        else:
            contrib = {c: 1 for c in C.objects}
            kind = ("const",)
        if all(sizes[c] + contrib[c] <= max_fiber for c in C.objects):
            summands.append(kind)
            for c in C.objects:
                sizes[c] += contrib[c]
        if len(summands) >= target:
            break
    raw_fibers = {c: [] for c in C.objects}
    for i, kind in enumerate(summands):
        for c in C.objects:
            if kind[0] == "rep":
                raw_fibers[c] += [(i, h) for h in C.hom(c, kind[1])]
            else:
                raw_fibers[c].append((i, None))
    labels = {c: {raw: Atom(f"e{j}") for j, raw in enumerate(xs)} for c, xs in raw_fibers.items()}
    actions = {}
    for f, (s, t) in C.arrows.items():
        action = {}
        for raw in raw_fibers[t]:
            i, h = raw
            image = (i, None) if h is None else (i, C.compose_table[(h, f)])
            action[labels[t][raw]] = labels[s][image]
        actions[f] = action
    return Presheaf(C, {c: tuple(labels[c].values()) for c in C.objects}, actions)


def gen_presheaf(p: GenParams, C: FinCategory) -> Presheaf:
    rng = _rng(p)
    if not C.objects:
        return Presheaf(C, {}, {})
    paths = _factorisations(C)
    if paths is not None:
        for _ in range(8):
            P = _presheaf_from_generators(rng, C, p.max_fiber, paths)
            if P is not None:
                return P
    return _presheaf_from_representables(rng, C, p.max_fiber)


def empty_presheaf(C: FinCategory) -> Presheaf:
    return Presheaf(C, {c: () for c in C.objects}, {f: {} for f in C.arrows})


# -- backtracking search ---------------------------------------------------


def _solutions(variables, domains, constraints, rng, budget=_SEARCH_BUDGET) -> Iterator[dict]:
    """Enumerate assignments satisfying binary constraints ``(u, v, ok(val_u, val_v))``.

    Value order is shuffled by ``rng`` so that early solutions are varied.
    """
    touching = {v: [] for v in variables}
    for u, v, ok in constraints:
        touching[u].append((u, v, ok))
        if v != u:
            touching[v].append((u, v, ok))
    assignment = {}
    steps = 0

    def consistent(var):
        for u, v, ok in touching[var]:
            if u in assignment and v in assignment and not ok(assignment[u], assignment[v]):
                return False
        return True

    def walk(i):
        nonlocal steps
        if i == len(variables):
            yield dict(assignment)
            return
        var = variables[i]
        values = list(domains[var])
        rng.shuffle(values)
        for value in values:
            steps += 1
            if steps > budget:
                return
            assignment[var] = value
            if consistent(var):
                yield from walk(i + 1)
            del assignment[var]

    yield from walk(0)


def random_functor(rng: random.Random, A: FinCategory, B: FinCategory, attempts: int = 4) -> Optional[FinFunctor]:
    """A random functor ``A -> B``, or ``None`` when ``B`` is empty and ``A`` is not."""
    if not A.objects:
        return FinFunctor(A, B, {}, {})
    if not B.objects:
        return None
    non_id = [a for a in A.arrows if not A.is_identity(a)]
    for _ in range(attempts):
        obj_constraints = [
            (A.src(a), A.tgt(a), lambda x, y: bool(B.hom(x, y))) for a in non_id
        ]
        objs = next(_solutions(list(A.objects), {c: B.objects for c in A.objects}, obj_constraints, rng, 2000), None)
        if objs is None:
            continue
        domains = {a: B.hom(objs[A.src(a)], objs[A.tgt(a)]) for a in non_id}
        fixed = {A.identities[c]: B.identities[objs[c]] for c in A.objects}
        arrows = next(_arrow_search(non_id, domains, A, B, fixed, rng), None)
        if arrows is not None:
            arrows.update(fixed)
            return FinFunctor(A, B, objs, arrows)
    return constant_functor(A, B, rng.choice(B.objects))


def _arrow_search(non_id, domains, A, B, fixed, rng):
    """Assign images of non-identity arrows respecting composition."""
    triples = {a: [] for a in non_id}
    for (g, f), h in A.compose_table.items():
        if g in fixed or f in fixed:
            continue
        for a in {g, f, h} - set(fixed):
            triples[a].append((g, f, h))
    assignment = dict(fixed)
    steps = 0

    def consistent(a):
        for g, f, h in triples[a]:
            if g in assignment and f in assignment and h in assignment:
                if B.compose_table[(assignment[g], assignment[f])] != assignment[h]:
                    return False
        return True

    def walk(i):
        nonlocal steps
        if i == len(non_id):
            yield {a: assignment[a] for a in non_id}
            return
        a = non_id[i]
        values = list(domains[a])
        rng.shuffle(values)
        for value in values:
            steps += 1
            if steps > _SEARCH_BUDGET:
                return
            assignment[a] = value
            if consistent(a):
                yield from walk(i + 1)
            del assignment[a]

    yield from walk(0)


# -- open functors ---------------------------------------------------------


def gen_open_functor(p: GenParams, C: FinCategory, D: FinCategory) -> OpenFunctor:
    rng = _rng(p.derive("beta"))
    alpha = gen_presheaf(p.derive("alpha"), C) if D.objects else empty_presheaf(C)
    beta = random_functor(rng, category_of_elements(alpha), D)
    return OpenFunctor(alpha, beta)


def presheaf_morphisms(F: Presheaf, G: Presheaf, rng: random.Random, limit: int = 64) -> Iterator[PresheafMorphism]:
    """Natural families of functions ``G(c) -> F(c)``, i.e. morphisms ``F => G``."""
    C = F.base
    variables = [(c, y) for c in C.objects for y in G.fiber(c)]
    domains = {(c, y): F.fiber(c) for c, y in variables}
    constraints = []
    for f, (s, t) in C.arrows.items():
        for y in G.fiber(t):
            constraints.append(((t, y), (s, G.on_arr[f][y]), lambda a, b, f=f: F.on_arr[f][a] == b))
    for count, sol in enumerate(_solutions(variables, domains, constraints, rng)):
        if count >= limit:
            return
        comps = {c: {} for c in C.objects}
        for (c, y), x in sol.items():
            comps[c][y] = x
        yield PresheafMorphism(F, G, comps)


def nat_transformations(P: FinFunctor, Q: FinFunctor, rng: random.Random, limit: int = 16) -> Iterator[NatTrans]:
    A, B = P.dom, P.cod
    variables = list(A.objects)
    domains = {a: B.hom(P.on_obj[a], Q.on_obj[a]) for a in variables}
    constraints = [
        (s, t, lambda vs, vt, f=f: B.compose_table[(Q.on_arr[f], vs)] == B.compose_table[(vt, P.on_arr[f])])
        for f, (s, t) in A.arrows.items()
    ]
    for count, sol in enumerate(_solutions(variables, domains, constraints, rng)):
        if count >= limit:
            return
        yield NatTrans(P, Q, sol)


def gen_open_nat(p: GenParams, F: OpenFunctor, G: OpenFunctor, cap: int = 16) -> list:
    """Up to ``cap`` distinct valid open natural transformations ``F => G``."""
    rng = _rng(p)
    out = [identity_open_nat(F)] if F == G else []
    per_alpha = max(1, cap // 4)
    for alpha in presheaf_morphisms(F.alpha, G.alpha, rng, limit=4 * cap):
        for beta in nat_transformations(beta_domain(F, alpha), G.beta, rng, limit=per_alpha):
            theta = OpenNatTrans(F, G, alpha, beta)
            if theta not in out:
                out.append(theta)
            if len(out) >= cap:
                return out
    return out


def gen_open_nat_chain(p: GenParams, C: FinCategory, D: FinCategory, length: int, tries: int = 3):
    """Open functors ``F0..Fn`` and transformations ``F0 => F1 => ... => Fn``.

    Each successor is a fresh random open functor admitting a transformation
    from its predecessor when one is found within ``tries`` attempts, else the
    predecessor itself (whose endo-transformations always include the identity).
    """
    rng = _rng(p.derive("chain"))
    functors = [gen_open_functor(p.derive("F", 0), C, D)]
    thetas = []
    for i in range(length):
        F = functors[-1]
        chosen = None
        for attempt in range(tries):
            G = gen_open_functor(p.derive("F", i + 1, attempt), C, D)
            candidates = gen_open_nat(p.derive("nat", i, attempt), F, G)
            if candidates:
                chosen = (G, rng.choice(candidates))
                break
        if chosen is None:
            candidates = gen_open_nat(p.derive("endo", i), F, F)
            chosen = (F, rng.choice(candidates))
        functors.append(chosen[0])
        thetas.append(chosen[1])
    return functors, thetas
