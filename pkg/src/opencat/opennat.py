"""Open natural transformations and their vertical and horizontal composition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .elements import (
    Pair,
    PresheafMorphism,
    el_arr,
    el_obj,
    elements_functor,
    identity_presheaf_morphism,
    validate_presheaf_morphism,
    vcomp_presheaf_morphism,
)
from .errors import BoundaryMismatchError
from .fincat import (
    NatTrans,
    Structural,
    Violation,
    arrow_component,
    compose_functors,
    hcomp_nat,
    identity_nat,
    validate_nat,
    vcomp_nat,
)
from .openfun import OpenFunctor, compose_open, validate_open_functor


@dataclass(frozen=True, eq=False)
class OpenNatTrans(Structural):
    """``theta: F =o=> G``.

    ``alpha`` is a presheaf morphism ``F.alpha => G.alpha``; ``beta`` is a
    natural transformation ``F.beta o El(alpha)^po => G.beta`` indexed by the
    elements of ``G.alpha``.
    """

    dom: OpenFunctor
    cod: OpenFunctor
    alpha: PresheafMorphism
    beta: NatTrans

    def _key(self):
        return (self.dom.key(), self.cod.key(), self.alpha.key(), self.beta.key())

    def __repr__(self):
        return f"OpenNatTrans({self.dom!r} => {self.cod!r})"


def make_open_nat(F: OpenFunctor, G: OpenFunctor, alpha_po: Mapping, beta: Mapping) -> OpenNatTrans:
    """Assemble from ``{c: {y: x}}`` and ``{(c, y): arrow}`` tables (y over c for G)."""
    alpha = PresheafMorphism(F.alpha, G.alpha, alpha_po)
    components = {el_obj(c, y): a for (c, y), a in beta.items()}
    return OpenNatTrans(F, G, alpha, NatTrans(beta_domain(F, alpha), G.beta, components))


def beta_domain(F: OpenFunctor, alpha: PresheafMorphism):
    return compose_functors(F.beta, elements_functor(alpha))


def validate_open_nat(theta: OpenNatTrans, deep: bool = False) -> list:
    F, G = theta.dom, theta.cod
    out = []
    if deep:
        out += [Violation("dom." + v.rule, v.witness, v.message) for v in validate_open_functor(F)]
        out += [Violation("cod." + v.rule, v.witness, v.message) for v in validate_open_functor(G)]
    if F.dom != G.dom or F.cod != G.cod:
        return out + [Violation("boundary", (), "open functors are not parallel")]
    if theta.alpha.dom != F.alpha or theta.alpha.cod != G.alpha:
        return out + [Violation("alpha-boundary", (), "alpha does not run between the interaction presheaves")]
    alpha_report = validate_presheaf_morphism(theta.alpha)
    out += [Violation("alpha." + v.rule, v.witness, v.message) for v in alpha_report]
    if alpha_report:
        return out
    if theta.beta.dom != beta_domain(F, theta.alpha) or theta.beta.cod != G.beta:
        return out + [Violation("beta-boundary", (), "beta must run from F.beta o El(alpha)^po to G.beta")]
    out += [Violation("beta." + v.rule, v.witness, v.message) for v in validate_nat(theta.beta)]
    return out


def identity_open_nat(F: OpenFunctor) -> OpenNatTrans:
    alpha = identity_presheaf_morphism(F.alpha)
    return OpenNatTrans(F, F, alpha, NatTrans(beta_domain(F, alpha), F.beta, identity_nat(F.beta).components))


def vcomp_open(phi: OpenNatTrans, theta: OpenNatTrans, cross_check: bool = False) -> OpenNatTrans:
    """``phi . theta`` for ``theta: F => G`` and ``phi: G => H``.

    The beta component at ``(c, z)`` is ``phi[c, z] . theta[c, phi_alpha[c]^po(z)]``.
    """
    if theta.cod != phi.dom:
        raise BoundaryMismatchError("open vertical composition: cod(theta) != dom(phi)")
    F, H = theta.dom, phi.cod
    D = F.cod
    alpha = vcomp_presheaf_morphism(phi.alpha, theta.alpha)
    comps = {}
    for c, comp in phi.alpha.components_po.items():
        for z, y in comp.items():
            comps[el_obj(c, z)] = D.compose(phi.beta.components[el_obj(c, z)], theta.beta.components[el_obj(c, y)])
    beta = NatTrans(beta_domain(F, alpha), H.beta, comps)
    if cross_check:
        whiskered = hcomp_nat(theta.beta, identity_nat(elements_functor(phi.alpha)))
        expected = vcomp_nat(phi.beta, whiskered)
        if expected.components != beta.components or expected.dom != beta.dom:
            raise AssertionError("vertical composite disagrees with its whiskering construction")
    return OpenNatTrans(F, H, alpha, beta)


def hcomp_open(phi: OpenNatTrans, theta: OpenNatTrans, cross_check: bool = False) -> OpenNatTrans:
    """``phi o theta: G o F => G' o F'`` for ``theta: F => F'`` and ``phi: G => G'``."""
    F, F2, G, G2 = theta.dom, theta.cod, phi.dom, phi.cod
    if F.cod != G.dom:
        raise BoundaryMismatchError("open horizontal composition: inner codomain != outer domain")
    dom, cod = compose_open(G, F), compose_open(G2, F2)
    D = F.cod
    alpha_po = {}
    comps = {}
    for c in cod.alpha.base.objects:
        theta_po = theta.alpha.components_po[c]
        comp = {}
        for p in cod.alpha.fiber(c):
            x2, y2 = p.left, p.right
            t = theta.beta.components[el_obj(c, x2)]  # F.beta(c, x) -> F'.beta(c, x')
            d2 = D.tgt(t)
            y = G.alpha.on_arr[t][phi.alpha.components_po[d2][y2]]
            if cross_check:
                other = phi.alpha.components_po[D.src(t)][G2.alpha.on_arr[t][y2]]
                if other != y:
                    raise AssertionError(f"alpha diagonal is ambiguous at {t}: {y} != {other}")
            comp[p] = Pair(theta_po[x2], y)
            comps[el_obj(c, p)] = arrow_component(phi.beta, el_arr(t, y2), check=cross_check)
        alpha_po[c] = comp
    alpha = PresheafMorphism(dom.alpha, cod.alpha, alpha_po)
    return OpenNatTrans(dom, cod, alpha, NatTrans(beta_domain(dom, alpha), cod.beta, comps))


# -- equality and inverses -------------------------------------------------


@dataclass(frozen=True)
class Difference:
    path: str
    left: object
    right: object

    def __str__(self):
        return f"{self.path}: {self.left} != {self.right}"


def open_nat_equal(theta: OpenNatTrans, other: OpenNatTrans) -> bool:
    return theta == other


def _first_map_difference(path, left: Mapping, right: Mapping) -> Optional[Difference]:
    for k in list(left) + [k for k in right if k not in left]:
        a, b = left.get(k), right.get(k)
        if a != b:
            return Difference(f"{path}[{k}]", a, b)
    return None


def first_difference(theta: OpenNatTrans, other: OpenNatTrans) -> Optional[Difference]:
    """Locate the first component where two open natural transformations differ."""
    if theta == other:
        return None
    for name in ("dom", "cod"):
        a, b = getattr(theta, name), getattr(other, name)
        if a != b:
            if a.dom != b.dom or a.cod != b.cod:
                return Difference(name, "boundary", "boundary")
            for c in a.dom.objects:
                xs, ys = a.alpha.fiber(c), b.alpha.fiber(c)
                if set(xs) != set(ys):
                    return Difference(f"{name}.alpha({c})", "{" + ", ".join(map(str, xs)) + "}", "{" + ", ".join(map(str, ys)) + "}")
            diff = _first_map_difference(f"{name}.alpha.action", a.alpha.on_arr, b.alpha.on_arr)
            diff = diff or _first_map_difference(f"{name}.beta", a.beta.on_obj, b.beta.on_obj)
            diff = diff or _first_map_difference(f"{name}.beta", a.beta.on_arr, b.beta.on_arr)
            return diff or Difference(name, a, b)
    for c, comp in theta.alpha.components_po.items():
        diff = _first_map_difference(f"alpha[{c}]", comp, other.alpha.components_po.get(c, {}))
        if diff:
            return diff
    diff = _first_map_difference("beta", theta.beta.components, other.beta.components)
    return diff or Difference("beta.dom", theta.beta.dom, other.beta.dom)


def _inverse_arrow(D, a):
    s, t = D.arrows[a]
    for b in D.hom(t, s):
        if D.compose_table[(b, a)] == D.identities[s] and D.compose_table[(a, b)] == D.identities[t]:
            return b
    return None


def is_invertible_open_nat(theta: OpenNatTrans) -> Optional[OpenNatTrans]:
    """Return the inverse of ``theta`` if it has one, else ``None``."""
    F, G = theta.dom, theta.cod
    D = F.cod
    inv_po = {}
    for c, comp in theta.alpha.components_po.items():
        inverse = {x: y for y, x in comp.items()}
        if len(inverse) != len(comp) or set(inverse) != set(F.alpha.fiber(c)):
            return None
        inv_po[c] = inverse
    alpha = PresheafMorphism(G.alpha, F.alpha, inv_po)
    comps = {}
    for c, inverse in inv_po.items():
        for x, y in inverse.items():
            b = _inverse_arrow(D, theta.beta.components[el_obj(c, y)])
            if b is None:
                return None
            comps[el_obj(c, x)] = b
    inv = OpenNatTrans(G, F, alpha, NatTrans(beta_domain(G, alpha), F.beta, comps))
    if vcomp_open(inv, theta) != identity_open_nat(F) or vcomp_open(theta, inv) != identity_open_nat(G):
        return None
    return inv
