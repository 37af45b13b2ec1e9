import random

import pytest
from hypothesis import given, strategies as st

from opencat import (
    STAR,
    Atom,
    Pair,
    Presheaf,
    PresheafMorphism,
    category_of_elements,
    elements_functor,
    identity_functor,
    identity_presheaf_morphism,
    terminal_presheaf,
    validate_category,
    validate_functor,
    validate_presheaf,
    validate_presheaf_morphism,
    vcomp_presheaf_morphism,
)
from opencat.elements import el_arr, el_obj, parse_element
from opencat.fincat import EMPTY_CATEGORY
from opencat.harness.corpus import presheaf_morphism_pair
from opencat.harness.generate import GenParams, gen_category, gen_presheaf, presheaf_morphisms

seeds = st.integers(min_value=0, max_value=2**32)
styles = st.sampled_from(["dag_free", "preorder", "product"])
u, v, w = Atom("u"), Atom("v"), Atom("w")


def test_element_rendering_and_parsing():
    x = Pair(Atom("x1"), Pair(STAR, Atom("y")))
    assert str(x) == "<x1,<*,y>>"
    assert parse_element(str(x)) == x
    assert parse_element(" * ") == STAR
    for bad in ("<a", "a,b", "<a,b>>", ""):
        with pytest.raises(ValueError):
            parse_element(bad)


@pytest.mark.parametrize("label", ["*", "a<b", "x|y", "(z)", ""])
def test_reserved_atom_labels(label):
    with pytest.raises(ValueError):
        Atom(label)


def test_terminal_presheaf_valid(cat2):
    T = terminal_presheaf(cat2)
    assert validate_presheaf(T) == []
    E = category_of_elements(T)
    assert len(E.objects) == len(cat2.objects) and len(E.arrows) == len(cat2.arrows)


def test_p2_valid_and_broken(cat2, p2):
    assert validate_presheaf(p2) == []
    broken = Presheaf(cat2, p2.on_obj, {**p2.on_arr, "id_b": {v: w, w: v}})
    assert "identity-action" in {x.rule for x in validate_presheaf(broken)}


def test_elements_of_p2(p2):
    E = category_of_elements(p2)
    assert set(E.objects) == {el_obj("a", u), el_obj("b", v), el_obj("b", w)}
    assert len(E.arrows) == 5
    assert E.arrows[el_arr("f", v)] == (el_obj("a", u), el_obj("b", v))
    assert E.arrows[el_arr("f", w)] == (el_obj("a", u), el_obj("b", w))
    assert validate_category(E) == []


def test_elements_of_empty():
    P = Presheaf(EMPTY_CATEGORY, {}, {})
    assert validate_presheaf(P) == []
    E = category_of_elements(P)
    assert E.objects == () and len(E.arrows) == 0


def test_elements_functor_collapse(cat2, p2):
    P2c = Presheaf(cat2, {"a": (u,), "b": (v,)}, {"id_a": {u: u}, "id_b": {v: v}, "f": {v: u}})
    theta = PresheafMorphism(P2c, p2, {"a": {u: u}, "b": {v: v, w: v}})
    assert validate_presheaf_morphism(theta) == []
    F = elements_functor(theta)
    assert validate_functor(F) == []
    assert F.obj(el_obj("b", w)) == F.obj(el_obj("b", v)) == el_obj("b", v)
    assert F.arr(el_arr("f", w)) == el_arr("f", v)


def test_unnatural_morphism_rejected(cat2, p2):
    P = Presheaf(cat2, {"a": (u, v), "b": (v,)}, {"id_a": {u: u, v: v}, "id_b": {v: v}, "f": {v: u}})
    theta = PresheafMorphism(P, p2, {"a": {u: v}, "b": {v: v, w: v}})
    assert "naturality" in {x.rule for x in validate_presheaf_morphism(theta)}


@given(seeds, styles)
def test_generated_presheaves(seed, style):
    p = GenParams(seed, category_style=style)
    C = gen_category(p.derive("C"))
    P = gen_presheaf(p, C)
    assert validate_presheaf(P) == []
    E = category_of_elements(P)
    assert validate_category(E) == []
    expected = sum(len(P.fiber(C.tgt(f))) for f in C.arrows)
    assert len(E.arrows) == expected
    assert len(E.objects) == sum(len(P.fiber(c)) for c in C.objects)


@given(seeds, styles)
def test_elements_functor_laws(seed, style):
    theta, phi = presheaf_morphism_pair(GenParams(seed, category_style=style))
    for m in (theta, phi):
        assert validate_presheaf_morphism(m) == []
        assert validate_functor(elements_functor(m)) == []
    P = theta.dom
    assert elements_functor(identity_presheaf_morphism(P)) == identity_functor(category_of_elements(P))
    composite = vcomp_presheaf_morphism(phi, theta)
    for c in P.base.objects:
        for z in composite.cod.fiber(c):
            assert composite.po(c, z) == theta.po(c, phi.po(c, z))


@given(seeds)
def test_presheaf_morphism_vcomp_associative(seed):
    p = GenParams(seed)
    rng = random.Random(seed)
    C = gen_category(p.derive("C"))
    P = gen_presheaf(p.derive("P"), C)
    ms = list(presheaf_morphisms(P, P, rng, limit=6)) + [identity_presheaf_morphism(P)]
    a, b, c = (rng.choice(ms) for _ in range(3))
    assert vcomp_presheaf_morphism(c, vcomp_presheaf_morphism(b, a)) == vcomp_presheaf_morphism(
        vcomp_presheaf_morphism(c, b), a
    )
    assert vcomp_presheaf_morphism(identity_presheaf_morphism(P), a) == a


def test_presheaf_equality_ignores_fiber_order(cat2, p2):
    swapped = Presheaf(cat2, {"a": (u,), "b": (w, v)}, p2.on_arr)
    assert swapped == p2 and hash(swapped) == hash(p2)
