
import pytest
from hypothesis import given, strategies as st

from opencat import (
    STAR,
    Atom,
    NatTrans,
    OpenNatTrans,
    Pair,
    associator,
    check_associator_naturality,
    check_elements_functoriality,
    check_hcomp_identities,
    check_hom_category_laws,
    check_interchange,
    check_pentagon,
    check_triangle,
    check_unitor_naturality,
    compose_open,
    from_classical,
    identity_functor,
    identity_open_functor,
    identity_open_nat,
    is_invertible_open_nat,
    left_unitor,
    make_open_nat,
    right_unitor,
    validate_open_nat,
    vcomp_open,
)
from opencat.elements import el_obj
from opencat.harness.corpus import presheaf_morphism_pair
from opencat.harness.generate import GenParams

seeds = st.integers(min_value=0, max_value=2**32)
x0, x1, x2 = Atom("x0"), Atom("x1"), Atom("x2")


@pytest.fixture
def collapse(of2):
    return make_open_nat(
        of2,
        of2,
        {"a": {x0: x0}, "b": {x1: x2, x2: x2}},
        {("a", x0): "id_a", ("b", x1): "f", ("b", x2): "id_a"},
    )


def with_beta(theta, key, arrow):
    comps = {**theta.beta.components, key: arrow}
    return OpenNatTrans(theta.dom, theta.cod, theta.alpha, NatTrans(theta.beta.dom, theta.beta.cod, comps))


def test_unitor_values(of2):
    l, r = left_unitor(of2), right_unitor(of2)
    assert l.alpha.po("b", x1) == Pair(x1, STAR)
    assert r.alpha.po("b", x1) == Pair(STAR, x1)
    for u in (l, r):
        assert validate_open_nat(u, deep=True) == []
        assert is_invertible_open_nat(u) is not None
        for (c, x), d in [(("b", x1), "b"), (("b", x2), "a"), (("a", x0), "a")]:
            assert u.beta.components[el_obj(c, x)] == "id_" + d


def test_associator_values(of2):
    a = associator(of2, of2, of2)
    assert validate_open_nat(a, deep=True) == []
    assert is_invertible_open_nat(a) is not None
    assert a.dom == compose_open(of2, compose_open(of2, of2))
    assert a.cod == compose_open(compose_open(of2, of2), of2)
    for c in ("a", "b"):
        for z in a.cod.alpha.fiber(c):
            x, y, w = z.left, z.right.left, z.right.right
            assert a.alpha.po(c, z) == Pair(Pair(x, y), w)
            # identity at H(G(F(c, x), y), w), evaluated through the three factors
            fx = of2.beta.on_obj[el_obj(c, x)]
            gy = of2.beta.on_obj[el_obj(fx, y)]
            hw = of2.beta.on_obj[el_obj(gy, w)]
            assert a.beta.components[el_obj(c, z)] == "id_" + hw


def test_associator_on_classical_identities(cat2):
    I = from_classical(identity_functor(cat2))
    a = associator(I, I, I)
    assert a.alpha.po("b", Pair(STAR, Pair(STAR, STAR))) == Pair(Pair(STAR, STAR), STAR)


def test_unitor_naturality_fixtures(of2, collapse):
    for theta in (identity_open_nat(of2), collapse, left_unitor(of2), right_unitor(of2)):
        left, right = check_unitor_naturality(theta)
        assert left.holds and right.holds


def test_mutated_unitor_fails(of2):
    mutated = with_beta(left_unitor(of2), el_obj("b", x1), "f")
    reports = check_unitor_naturality(mutated)
    assert not any(r.holds for r in reports)
    assert "(b|x1)" in str(reports[0].difference)


def test_associator_naturality_fixtures(of2, collapse):
    I = identity_open_nat(of2)
    assert check_associator_naturality(I, I, I).holds
    assert check_associator_naturality(collapse, collapse, collapse).holds
    l, r = left_unitor(of2), right_unitor(of2)
    assert check_associator_naturality(l, r, l).holds


def test_mutated_psi_fails(of2, collapse):
    psi = with_beta(collapse, el_obj("b", x1), "id_b")
    report = check_associator_naturality(collapse, collapse, psi)
    assert not report.holds
    assert report.difference.path.startswith("input psi")
    assert "(b|x1)" in str(report.difference)


def test_pentagon_fixtures(of2, cat2):
    I = from_classical(identity_functor(cat2))
    report = check_pentagon(I, I, I, I)
    assert report.holds
    assert check_pentagon(of2, of2, of2, of2).holds
    assert check_pentagon(of2, identity_open_functor(cat2), of2, of2).holds


def test_triangle_fixtures(of2, cat2):
    I = identity_open_functor(cat2)
    assert check_triangle(I, I).holds
    assert check_triangle(of2, of2).holds


def test_mutated_right_unitor_fails(of2, collapse):
    # well typed and natural, but not the unitor: caught by the equation itself
    report = check_triangle(of2, of2, right_unit=lambda G: vcomp_open(collapse, right_unitor(G)))
    assert not report.holds
    assert report.difference.path.startswith(("alpha", "beta"))


def test_ill_typed_right_unitor_fails(of2):
    report = check_triangle(of2, of2, right_unit=lambda G: with_beta(right_unitor(G), el_obj("b", x2), "id_b"))
    assert not report.holds
    assert report.difference.path.startswith("input right_unitor")


def test_interchange_and_homcat_fixtures(of2, collapse):
    I = identity_open_nat(of2)
    assert check_hcomp_identities(of2, of2).holds
    assert check_interchange(I, I, I, I).holds
    assert check_interchange(collapse, I, collapse, collapse).holds
    assert all(r.holds for r in check_hom_category_laws([(I, I, I), (collapse, collapse, I)]))
    bad = with_beta(collapse, el_obj("a", x0), "f")
    broken = check_hom_category_laws([(bad, I, I)])
    assert len(broken) == 1 and not broken[0].holds and "input theta" in broken[0].difference.path


@given(seeds)
def test_elements_functoriality_generated(seed):
    theta, phi = presheaf_morphism_pair(GenParams(seed, category_style="preorder"))
    assert all(r.holds for r in check_elements_functoriality(theta, phi))
