
import pytest
from hypothesis import given, strategies as st

from opencat import (
    STAR,
    Atom,
    BoundaryMismatchError,
    Pair,
    compose_open,
    first_difference,
    from_classical,
    hcomp_open,
    identity_open_functor,
    identity_open_nat,
    is_invertible_open_nat,
    left_unitor,
    make_open_nat,
    open_nat_equal,
    validate_open_nat,
    vcomp_open,
)
from opencat.elements import el_obj
from opencat.fincat import constant_functor, free_category
from opencat.harness.generate import GenParams, gen_category, gen_open_nat, gen_open_nat_chain
from opencat.harness.serialize import parse, serialize

seeds = st.integers(min_value=0, max_value=2**32)
styles = st.sampled_from(["dag_free", "preorder", "product"])
x0, x1, x2 = Atom("x0"), Atom("x1"), Atom("x2")


@pytest.fixture
def collapse(of2):
    """Non-identity endo-transformation of OF2 sending x1 to x2 over b."""
    return make_open_nat(
        of2,
        of2,
        {"a": {x0: x0}, "b": {x1: x2, x2: x2}},
        {("a", x0): "id_a", ("b", x1): "f", ("b", x2): "id_a"},
    )


def parallel_pair_fixture(cat2):
    D = free_category(["u", "v"], {"p": ("u", "v"), "q": ("u", "v")})
    F = from_classical(constant_functor(cat2, D, "u"))
    G = from_classical(constant_functor(cat2, D, "v"))
    return F, G


def test_identity_open_nat_valid(of2):
    iota = identity_open_nat(of2)
    assert validate_open_nat(iota, deep=True) == []
    assert all(x == y for comp in iota.alpha.components_po.values() for y, x in comp.items())
    assert iota.beta.components[el_obj("b", x2)] == "id_a"


def test_left_unitor_valid(of2):
    assert validate_open_nat(left_unitor(of2), deep=True) == []


def test_collapse_valid_and_not_identity(of2, collapse):
    assert validate_open_nat(collapse, deep=True) == []
    assert not open_nat_equal(collapse, identity_open_nat(of2))
    assert first_difference(collapse, identity_open_nat(of2)).path == "alpha[b][x1]"
    assert collapse in gen_open_nat(GenParams(1), of2, of2)


def test_wrong_parallel_beta_breaks_naturality(cat2):
    F, G = parallel_pair_fixture(cat2)
    good = make_open_nat(F, G, {"a": {STAR: STAR}, "b": {STAR: STAR}}, {("a", STAR): "p", ("b", STAR): "p"})
    assert validate_open_nat(good, deep=True) == []
    bad = make_open_nat(F, G, {"a": {STAR: STAR}, "b": {STAR: STAR}}, {("a", STAR): "p", ("b", STAR): "q"})
    assert "beta.naturality" in {v.rule for v in validate_open_nat(bad, deep=True)}


def test_vcomp_beta_formula_by_hand(of2, collapse):
    twice = vcomp_open(collapse, collapse)
    assert validate_open_nat(twice, deep=True) == []
    assert twice.alpha.po("b", x1) == x2
    # phi_beta[b,x1] . theta_beta[b, phi^po(x1)] = f . id_a
    assert twice.beta.components[el_obj("b", x1)] == "f"


def test_vcomp_boundary(of2, cat2):
    with pytest.raises(BoundaryMismatchError):
        vcomp_open(identity_open_nat(of2), identity_open_nat(identity_open_functor(cat2)))


def test_is_invertible(of2, collapse):
    assert is_invertible_open_nat(identity_open_nat(of2)) == identity_open_nat(of2)
    inv = is_invertible_open_nat(left_unitor(of2))
    assert inv is not None
    assert inv.alpha.po("b", Pair(x1, STAR)) == x1
    assert vcomp_open(inv, left_unitor(of2)) == identity_open_nat(compose_open(identity_open_functor(of2.cod), of2))
    assert is_invertible_open_nat(collapse) is None


def test_equality_survives_round_trip(of2, collapse):
    assert open_nat_equal(collapse, collapse)
    assert open_nat_equal(parse(serialize(collapse)).value, collapse)


def test_hcomp_alpha_shape(of2, collapse):
    h = hcomp_open(collapse, collapse, cross_check=True)
    assert validate_open_nat(h, deep=True) == []
    for c in of2.dom.objects:
        for z in h.cod.alpha.fiber(c):
            assert h.alpha.po(c, z).left == collapse.alpha.po(c, z.left)


@given(seeds, styles)
def test_generated_hom_category(seed, style):
    p = GenParams(seed, category_style=style)
    C, D = gen_category(p.derive("C")), gen_category(p.derive("D"))
    (F, _, _, _), thetas = gen_open_nat_chain(p, C, D, 3)
    theta, phi, psi = thetas
    for t in thetas:
        assert validate_open_nat(t, deep=True) == []
    assert vcomp_open(psi, vcomp_open(phi, theta, cross_check=True)) == vcomp_open(vcomp_open(psi, phi), theta)
    assert vcomp_open(theta, identity_open_nat(F)) == theta
    assert vcomp_open(identity_open_nat(theta.cod), theta) == theta


@given(seeds, styles)
def test_generated_interchange(seed, style):
    p = GenParams(seed, category_style=style)
    C, D, E = (gen_category(p.derive(i)) for i in "CDE")
    (F, _, _), (theta, theta2) = gen_open_nat_chain(p.derive("in"), C, D, 2)
    (G, _, _), (phi, phi2) = gen_open_nat_chain(p.derive("out"), D, E, 2)
    assert hcomp_open(identity_open_nat(G), identity_open_nat(F)) == identity_open_nat(compose_open(G, F))
    left = hcomp_open(vcomp_open(phi2, phi), vcomp_open(theta2, theta), cross_check=True)
    right = vcomp_open(hcomp_open(phi2, theta2, cross_check=True), hcomp_open(phi, theta))
    assert left == right
    assert validate_open_nat(left, deep=True) == []


@given(seeds)
def test_gen_open_nat_contains_identity(seed):
    p = GenParams(seed)
    C, D = gen_category(p.derive("C")), gen_category(p.derive("D"))
    (F,), _ = gen_open_nat_chain(p, C, D, 0)
    thetas = gen_open_nat(p, F, F)
    assert identity_open_nat(F) in thetas and len(thetas) <= 16
    assert all(validate_open_nat(t) == [] for t in thetas)
