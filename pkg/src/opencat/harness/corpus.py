"""Generated instance families for each bicategory law, and the runner behind ``laws``."""

from __future__ import annotations

import random
from dataclasses import replace

from ..coherence import (
    LawReport,
    associator,
    check_associator_naturality,
    check_elements_functoriality,
    check_hcomp_identities,
    check_hom_category_laws,
    check_interchange,
    check_pentagon,
    check_triangle,
    check_unitor_naturality,
    left_unitor,
    right_unitor,
)
from ..opennat import is_invertible_open_nat
from .generate import (
    GenParams,
    gen_category,
    gen_open_functor,
    gen_open_nat_chain,
    gen_presheaf,
    presheaf_morphisms,
)

LAWS = ("pentagon", "triangle", "interchange", "homcat", "unitor-nat", "assoc-nat", "elements")


def _categories(p: GenParams, n: int):
    return [gen_category(p.derive("cat", i)) for i in range(n)]


def _open_chain(p: GenParams, n: int):
    cats = _categories(p, n + 1)
    return [gen_open_functor(p.derive("open", i), cats[i], cats[i + 1]) for i in range(n)]


def _invertible(law, instance, theta) -> LawReport:
    return LawReport(law, instance, is_invertible_open_nat(theta) is not None)


def _pentagon(p, tag):
    return [check_pentagon(*_open_chain(p, 4), instance=tag)]


def _triangle(p, tag):
    return [check_triangle(*_open_chain(p, 2), instance=tag)]


def _interchange(p, tag):
    C, D, E = _categories(p, 3)
    (F, _, _), (theta, theta2) = gen_open_nat_chain(p.derive("inner"), C, D, 2)
    (G, _, _), (phi, phi2) = gen_open_nat_chain(p.derive("outer"), D, E, 2)
    return [check_hcomp_identities(G, F, tag), check_interchange(theta, theta2, phi, phi2, tag)]


def _homcat(p, tag):
    C, D = _categories(p, 2)
    _, thetas = gen_open_nat_chain(p, C, D, 3)
    return [replace(r, instance=tag) for r in check_hom_category_laws([tuple(thetas)])]


def _unitor_nat(p, tag):
    C, D = _categories(p, 2)
    _, (theta,) = gen_open_nat_chain(p, C, D, 1)
    out = list(check_unitor_naturality(theta, tag))
    for F in (theta.dom, theta.cod):
        out.append(_invertible("unitor-invertible.left", tag, left_unitor(F)))
        out.append(_invertible("unitor-invertible.right", tag, right_unitor(F)))
    return out


def _assoc_nat(p, tag):
    B, C, D, E = _categories(p, 4)
    _, (theta,) = gen_open_nat_chain(p.derive("theta"), B, C, 1)
    _, (phi,) = gen_open_nat_chain(p.derive("phi"), C, D, 1)
    _, (psi,) = gen_open_nat_chain(p.derive("psi"), D, E, 1)
    return [
        check_associator_naturality(theta, phi, psi, tag),
        _invertible("associator-invertible", tag, associator(theta.dom, phi.dom, psi.dom)),
        _invertible("associator-invertible", tag, associator(theta.cod, phi.cod, psi.cod)),
    ]


def presheaf_morphism_pair(p: GenParams):
    """A composable pair ``P => Q => R`` of presheaf morphisms over one generated category."""
    rng = random.Random(p.seed)
    C = gen_category(p.derive("cat"))
    chain = [gen_presheaf(p.derive("P", 0), C)]
    morphisms = []
    for i in range(2):
        source = chain[-1]
        found = None
        for attempt in range(3):
            target = gen_presheaf(p.derive("P", i + 1, attempt), C)
            candidates = list(presheaf_morphisms(source, target, rng, limit=8))
            if candidates:
                found = (target, rng.choice(candidates))
                break
        if found is None:
            found = (source, rng.choice(list(presheaf_morphisms(source, source, rng, limit=8))))
        chain.append(found[0])
        morphisms.append(found[1])
    return tuple(morphisms)


def _elements(p, tag):
    theta, phi = presheaf_morphism_pair(p)
    return check_elements_functoriality(theta, phi, tag)


_BUILDERS = {
    "pentagon": _pentagon,
    "triangle": _triangle,
    "interchange": _interchange,
    "homcat": _homcat,
    "unitor-nat": _unitor_nat,
    "assoc-nat": _assoc_nat,
    "elements": _elements,
}


def instance_params(base: GenParams, law: str, index: int) -> GenParams:
    return base.derive("law", law, index)


def run_law(law: str, base: GenParams, count: int) -> list:
    """Per-instance report lists for ``count`` generated instances of ``law``."""
    build = _BUILDERS[law]
    return [build(instance_params(base, law, i), f"{law}#{i}") for i in range(count)]


def run_laws(laws, base: GenParams, count: int) -> dict:
    return {law: run_law(law, base, count) for law in laws}


def format_summary(results: dict) -> str:
    lines = []
    for law, instances in results.items():
        held = sum(all(r.holds for r in reports) for reports in instances)
        lines.append(f"{law}: {held}/{len(instances)} hold")
    for law, instances in results.items():
        for reports in instances:
            for r in reports:
                if not r.holds:
                    lines.append(str(r))
    return "\n".join(lines) + "\n"
