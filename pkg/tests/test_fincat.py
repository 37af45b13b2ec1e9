import pytest
from hypothesis import given, strategies as st

from opencat import (
    FinCategory,
    FinFunctor,
    NatTrans,
    NotComposableError,
    BoundaryMismatchError,
    arrow_component,
    compose_arrows,
    compose_functors,
    hcomp_nat,
    identity_functor,
    identity_nat,
    validate_category,
    validate_functor,
    validate_nat,
    vcomp_nat,
)
from opencat.fincat import EMPTY_CATEGORY, constant_functor, free_category, preorder_category, product_category
from opencat.harness.generate import GenParams, gen_category, nat_transformations, random_functor

import random

seeds = st.integers(min_value=0, max_value=2**32)
styles = st.sampled_from(["dag_free", "preorder", "product"])


def rules(report):
    return {v.rule for v in report}


def test_cat2_valid(cat2):
    assert validate_category(cat2) == []


def test_cat2_broken_right_identity(cat2):
    table = dict(cat2.compose_table)
    table[("f", "id_a")] = "id_a"
    report = validate_category(FinCategory(cat2.objects, cat2.arrows, table, cat2.identities))
    assert any(v.rule == "right-identity" and v.witness == ("f",) for v in report)


def test_dag3_matches_free_category_oracle(dag3):
    assert validate_category(dag3) == []
    free = free_category(["a", "b", "c"], {"f": ("a", "b"), "g": ("b", "c")})
    assert validate_category(free) == []
    assert free.arrows["g.f"] == dag3.arrows["gf"]
    assert len(free.arrows) == len(dag3.arrows)
    assert compose_arrows(free, "g", "f") == "g.f"


def test_compose_arrows(cat2, dag3):
    assert compose_arrows(cat2, "id_b", "f") == "f"
    assert compose_arrows(dag3, "g", "f") == "gf"
    with pytest.raises(NotComposableError):
        compose_arrows(cat2, "f", "f")


def test_missing_composite_and_bad_identity_reported(cat2):
    table = dict(cat2.compose_table)
    del table[("id_b", "f")]
    assert "compose-missing" in rules(validate_category(FinCategory(cat2.objects, cat2.arrows, table, cat2.identities)))
    bad = FinCategory(cat2.objects, cat2.arrows, cat2.compose_table, {"a": "f", "b": "id_b"})
    assert "identity-endpoints" in rules(validate_category(bad))


def test_empty_category():
    assert validate_category(EMPTY_CATEGORY) == []
    assert validate_functor(identity_functor(EMPTY_CATEGORY)) == []


def test_preorder_and_product_valid(cat2):
    P = preorder_category("abc", [("a", "b"), ("b", "c")])
    assert validate_category(P) == []
    assert "a<c" in P.arrows
    assert validate_category(product_category(cat2, P)) == []
    assert len(product_category(cat2, P).arrows) == len(cat2.arrows) * len(P.arrows)


def test_functor_examples(cat2, dag3):
    assert validate_functor(identity_functor(cat2)) == []
    assert validate_functor(constant_functor(cat2, cat2, "a")) == []
    F = identity_functor(dag3)
    broken = FinFunctor(dag3, dag3, F.on_obj, {**F.on_arr, "gf": "f"})
    assert "composition" in rules(validate_functor(broken))


def test_compose_functors_boundary(cat2, dag3):
    with pytest.raises(BoundaryMismatchError):
        compose_functors(identity_functor(cat2), identity_functor(dag3))


@given(seeds, styles)
def test_generated_categories_exhaustively_lawful(seed, style):
    assert validate_category(gen_category(GenParams(seed, category_style=style))) == []


@given(seeds)
def test_functor_composition_strict(seed):
    p = GenParams(seed, category_style="dag_free")
    rng = random.Random(seed)
    A, B, C, D = (gen_category(p.derive(i)) for i in range(4))
    F, G, H = random_functor(rng, A, B), random_functor(rng, B, C), random_functor(rng, C, D)
    for X in (F, G, H):
        assert validate_functor(X) == []
    assert compose_functors(identity_functor(B), F) == F
    assert compose_functors(F, identity_functor(A)) == F
    assert compose_functors(compose_functors(H, G), F) == compose_functors(H, compose_functors(G, F))


def test_identity_nat_components(cat2):
    iota = identity_nat(identity_functor(cat2))
    assert dict(iota.components) == {"a": "id_a", "b": "id_b"}
    assert validate_nat(iota) == []


def test_arrow_component_on_constant_to_identity(cat2):
    # the only transformation between these two functors goes const_a => Id
    theta = NatTrans(constant_functor(cat2, cat2, "a"), identity_functor(cat2), {"a": "id_a", "b": "f"})
    assert validate_nat(theta) == []
    assert arrow_component(theta, "f") == compose_arrows(cat2, "f", "id_a") == "f"
    assert arrow_component(theta, "id_b") == theta.components["b"]


def test_broken_nat_reports_naturality(cat2):
    theta = NatTrans(constant_functor(cat2, cat2, "a"), identity_functor(cat2), {"a": "f", "b": "f"})
    assert rules(validate_nat(theta)) & {"component-endpoints", "naturality"}


def _nat_fixture(seed):
    rng = random.Random(seed)
    p = GenParams(seed)
    C, D = gen_category(p.derive("C")), gen_category(p.derive("D"))
    F = random_functor(rng, C, D)
    thetas = list(nat_transformations(F, F, rng, limit=4))
    return C, D, F, thetas


@given(seeds)
def test_nat_units_and_arrow_components(seed):
    C, D, F, thetas = _nat_fixture(seed)
    assert identity_nat(F) in thetas
    for theta in thetas:
        assert validate_nat(theta) == []
        assert vcomp_nat(identity_nat(F), theta) == theta
        assert vcomp_nat(theta, identity_nat(F)) == theta
        for f, (s, t) in C.arrows.items():
            a = arrow_component(theta, f)
            assert a == D.compose(F.arr(f), theta.components[s]) == D.compose(theta.components[t], F.arr(f))
        assert hcomp_nat(identity_nat(identity_functor(D)), theta) == theta


@given(seeds)
def test_exchange_law(seed):
    rng = random.Random(seed)
    p = GenParams(seed)
    C, D, E = (gen_category(p.derive(i)) for i in "CDE")
    F, G = random_functor(rng, C, D), random_functor(rng, D, E)
    ths = list(nat_transformations(F, F, rng, limit=3))
    phs = list(nat_transformations(G, G, rng, limit=3))
    theta, theta2 = rng.choice(ths), rng.choice(ths)
    phi, phi2 = rng.choice(phs), rng.choice(phs)
    left = hcomp_nat(vcomp_nat(phi2, phi), vcomp_nat(theta2, theta))
    right = vcomp_nat(hcomp_nat(phi2, theta2), hcomp_nat(phi, theta))
    assert left == right
    ht = hcomp_nat(phi, theta)
    for f in C.arrows:
        assert arrow_component(ht, f) == arrow_component(phi, arrow_component(theta, f))
