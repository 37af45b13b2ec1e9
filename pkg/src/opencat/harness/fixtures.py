"""Small hand-built instances used by the tests, the CLI and the README."""

from ..elements import Atom, Presheaf
from ..fincat import FinCategory
from ..openfun import OpenFunctor


def cat2() -> FinCategory:
    """The walking arrow ``f: a -> b``."""
    return FinCategory(
        ("a", "b"),
        {"id_a": ("a", "a"), "id_b": ("b", "b"), "f": ("a", "b")},
        {
            ("id_a", "id_a"): "id_a",
            ("id_b", "id_b"): "id_b",
            ("f", "id_a"): "f",
            ("id_b", "f"): "f",
        },
        {"a": "id_a", "b": "id_b"},
    )


def dag3() -> FinCategory:
    """``a -f-> b -g-> c`` with the composite ``gf``."""
    arrows = {
        "id_a": ("a", "a"),
        "id_b": ("b", "b"),
        "id_c": ("c", "c"),
        "f": ("a", "b"),
        "g": ("b", "c"),
        "gf": ("a", "c"),
    }
    ids = {"a": "id_a", "b": "id_b", "c": "id_c"}
    table = {("g", "f"): "gf"}
    for name, (s, t) in arrows.items():
        table[(ids[t], name)] = name
        table[(name, ids[s])] = name
    return FinCategory(("a", "b", "c"), arrows, table, ids)


def p2() -> Presheaf:
    u, v, w = Atom("u"), Atom("v"), Atom("w")
    return Presheaf(
        cat2(),
        {"a": (u,), "b": (v, w)},
        {"id_a": {u: u}, "id_b": {v: v, w: w}, "f": {v: u, w: u}},
    )


def of2() -> OpenFunctor:
    """Open endofunctor of the walking arrow with two interactions over ``b``."""
    x0, x1, x2 = Atom("x0"), Atom("x1"), Atom("x2")
    C = cat2()
    alpha = Presheaf(
        C,
        {"a": (x0,), "b": (x1, x2)},
        {"id_a": {x0: x0}, "id_b": {x1: x1, x2: x2}, "f": {x1: x0, x2: x0}},
    )
    return OpenFunctor.from_tables(
        alpha,
        C,
        {("a", x0): "a", ("b", x1): "b", ("b", x2): "a"},
        {
            ("id_a", x0): "id_a",
            ("id_b", x1): "id_b",
            ("id_b", x2): "id_a",
            ("f", x1): "f",
            ("f", x2): "id_a",
        },
    )
