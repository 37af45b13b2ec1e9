"""Unitors, associators and executable checks of the bicategory laws.

Every check builds both sides of an equation between open natural
transformations and compares them structurally; a failing check reports the
first component where the two sides differ.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .elements import (
    STAR,
    Pair,
    PresheafMorphism,
    category_of_elements,
    elements_functor,
    identity_presheaf_morphism,
    vcomp_presheaf_morphism,
)
from .fincat import NatTrans, compose_functors, identity_functor, identity_nat
from .openfun import OpenFunctor, compose_open, identity_open_functor
from .opennat import (
    Difference,
    OpenNatTrans,
    beta_domain,
    first_difference,
    hcomp_open,
    identity_open_nat,
    validate_open_nat,
    vcomp_open,
)


@dataclass(frozen=True)
class LawReport:
    law: str
    instance: str
    holds: bool
    difference: Optional[Difference] = None

    def __str__(self):
        verdict = "holds" if self.holds else f"FAILS at {self.difference}"
        return f"{self.law} [{self.instance}]: {verdict}"


def _compare(law, instance, left, right) -> LawReport:
    diff = first_difference(left, right)
    return LawReport(law, instance, diff is None, diff)


def _ill_formed(law, instance, **named) -> Optional[LawReport]:
    """A failing report for the first input that is not an open natural transformation.

    Some laws hold for any family of components, so without this a broken
    input could be certified.
    """
    for name, theta in named.items():
        report = validate_open_nat(theta)
        if report:
            v = report[0]
            return LawReport(law, instance, False, Difference(f"input {name}: {v.rule}", v.witness, v.message))
    return None


def _structural_iso(dom: OpenFunctor, cod: OpenFunctor, rewrite) -> OpenNatTrans:
    """An open natural transformation with identity beta whose alpha relabels elements."""
    alpha = PresheafMorphism(
        dom.alpha,
        cod.alpha,
        {c: {x: rewrite(x) for x in cod.alpha.fiber(c)} for c in cod.dom.objects},
    )
    return OpenNatTrans(dom, cod, alpha, NatTrans(beta_domain(dom, alpha), cod.beta, identity_nat(cod.beta).components))


def left_unitor(F: OpenFunctor) -> OpenNatTrans:
    """``Id_D o F =o=> F``, carried by ``x |-> <x, *>``."""
    return _structural_iso(compose_open(identity_open_functor(F.cod), F), F, lambda x: Pair(x, STAR))


def right_unitor(F: OpenFunctor) -> OpenNatTrans:
    """``F o Id_C =o=> F``, carried by ``x |-> <*, x>``."""
    return _structural_iso(compose_open(F, identity_open_functor(F.dom)), F, lambda x: Pair(STAR, x))


def _reassociate(p: Pair) -> Pair:
    return Pair(Pair(p.left, p.right.left), p.right.right)


def associator(F: OpenFunctor, G: OpenFunctor, H: OpenFunctor) -> OpenNatTrans:
    """``H o (G o F) =o=> (H o G) o F``, carried by ``<x,<y,z>> |-> <<x,y>,z>``."""
    return _structural_iso(compose_open(H, compose_open(G, F)), compose_open(compose_open(H, G), F), _reassociate)


# -- law checks ------------------------------------------------------------


def check_unitor_naturality(theta: OpenNatTrans, instance: str = "") -> tuple:
    bad = _ill_formed("unitor-nat", instance, theta=theta)
    if bad:
        return replace(bad, law="unitor-nat.left"), replace(bad, law="unitor-nat.right")
    F, G = theta.dom, theta.cod
    id_d = identity_open_nat(identity_open_functor(F.cod))
    id_c = identity_open_nat(identity_open_functor(F.dom))
    left = _compare(
        "unitor-nat.left",
        instance,
        vcomp_open(left_unitor(G), hcomp_open(id_d, theta)),
        vcomp_open(theta, left_unitor(F)),
    )
    right = _compare(
        "unitor-nat.right",
        instance,
        vcomp_open(right_unitor(G), hcomp_open(theta, id_c)),
        vcomp_open(theta, right_unitor(F)),
    )
    return left, right


def check_associator_naturality(theta, phi, psi, instance: str = "") -> LawReport:
    bad = _ill_formed("assoc-nat", instance, theta=theta, phi=phi, psi=psi)
    if bad:
        return bad
    a = associator(theta.dom, phi.dom, psi.dom)
    a2 = associator(theta.cod, phi.cod, psi.cod)
    return _compare(
        "assoc-nat",
        instance,
        vcomp_open(a2, hcomp_open(psi, hcomp_open(phi, theta))),
        vcomp_open(hcomp_open(hcomp_open(psi, phi), theta), a),
    )


def check_pentagon(F, G, H, I, instance: str = "") -> LawReport:
    iF, iI = identity_open_nat(F), identity_open_nat(I)
    three_step = vcomp_open(
        hcomp_open(associator(G, H, I), iF),
        vcomp_open(associator(F, compose_open(H, G), I), hcomp_open(iI, associator(F, G, H))),
    )
    two_step = vcomp_open(associator(F, G, compose_open(I, H)), associator(compose_open(G, F), H, I))
    return _compare("pentagon", instance, three_step, two_step)


def check_triangle(F, G, instance: str = "", right_unit=right_unitor, left_unit=left_unitor) -> LawReport:
    """``(r[G] o 1_F) . a[F, Id, G] = 1_G o l[F]``; unitors are injectable for fault tests."""
    Id = identity_open_functor(F.cod)
    r, l = right_unit(G), left_unit(F)
    bad = _ill_formed("triangle", instance, right_unitor=r, left_unitor=l)
    if bad:
        return bad
    left = vcomp_open(hcomp_open(r, identity_open_nat(F)), associator(F, Id, G))
    right = hcomp_open(identity_open_nat(G), l)
    return _compare("triangle", instance, left, right)


def check_hcomp_identities(G: OpenFunctor, F: OpenFunctor, instance: str = "") -> LawReport:
    return _compare(
        "hcomp-identity",
        instance,
        hcomp_open(identity_open_nat(G), identity_open_nat(F)),
        identity_open_nat(compose_open(G, F)),
    )


def check_interchange(theta, theta2, phi, phi2, instance: str = "") -> LawReport:
    """``(phi2 . phi) o (theta2 . theta) = (phi2 o theta2) . (phi o theta)``."""
    bad = _ill_formed("interchange", instance, theta=theta, theta2=theta2, phi=phi, phi2=phi2)
    if bad:
        return bad
    return _compare(
        "interchange",
        instance,
        hcomp_open(vcomp_open(phi2, phi), vcomp_open(theta2, theta)),
        vcomp_open(hcomp_open(phi2, theta2), hcomp_open(phi, theta)),
    )


def check_hom_category_laws(instances: Iterable[tuple]) -> list:
    """Associativity and both unit laws of vertical composition on each ``(theta, phi, psi)``."""
    reports = []
    for i, (theta, phi, psi) in enumerate(instances):
        tag = f"#{i}"
        bad = _ill_formed("homcat", tag, theta=theta, phi=phi, psi=psi)
        if bad:
            reports.append(bad)
            continue
        reports.append(
            _compare("homcat.assoc", tag, vcomp_open(psi, vcomp_open(phi, theta)), vcomp_open(vcomp_open(psi, phi), theta))
        )
        reports.append(_compare("homcat.left-unit", tag, vcomp_open(identity_open_nat(theta.cod), theta), theta))
        reports.append(_compare("homcat.right-unit", tag, vcomp_open(theta, identity_open_nat(theta.dom)), theta))
    return reports


def check_elements_functoriality(theta, phi, instance: str = "") -> list:
    """``El`` sends identities to identities and ``phi . theta`` to ``El(theta) o El(phi)``."""
    reports = []
    for P in (theta.dom, theta.cod):
        ok = elements_functor(identity_presheaf_morphism(P)) == identity_functor(category_of_elements(P))
        reports.append(LawReport("elements.identity", instance, ok, None if ok else Difference("functor", "El(1)", "1")))
    lhs = elements_functor(vcomp_presheaf_morphism(phi, theta))
    rhs = compose_functors(elements_functor(theta), elements_functor(phi))
    diff = None
    if lhs != rhs:
        diff = Difference("functor", lhs.on_arr, rhs.on_arr)
        for k in lhs.on_arr:
            if lhs.on_arr[k] != rhs.on_arr.get(k):
                diff = Difference(f"on_arr[{k}]", lhs.on_arr[k], rhs.on_arr.get(k))
                break
    reports.append(LawReport("elements.composition", instance, diff is None, diff))
    return reports

