"""Finite open functors and open natural transformations, with bicategory law checks."""

from .coherence import (
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
from .elements import (
    STAR,
    Atom,
    Pair,
    Presheaf,
    PresheafMorphism,
    Star,
    category_of_elements,
    elements_functor,
    identity_presheaf_morphism,
    terminal_presheaf,
    validate_presheaf,
    validate_presheaf_morphism,
    vcomp_presheaf_morphism,
)
from .errors import (
    BoundaryMismatchError,
    NotComposableError,
    OpenCatError,
    ParseError,
    SizeLimitError,
    UnknownElementError,
    UnknownObjectError,
)
from .fincat import (
    FinCategory,
    FinFunctor,
    NatTrans,
    Violation,
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
from .openfun import (
    OpenFunctor,
    apply_open,
    apply_open_arrow,
    compose_open,
    from_classical,
    identity_open_functor,
    validate_open_functor,
)
from .opennat import (
    OpenNatTrans,
    first_difference,
    hcomp_open,
    identity_open_nat,
    is_invertible_open_nat,
    make_open_nat,
    open_nat_equal,
    validate_open_nat,
    vcomp_open,
)

__version__ = "0.1.0"

__all__ = [
    "LawReport",
    "associator",
    "check_associator_naturality",
    "check_elements_functoriality",
    "check_hcomp_identities",
    "check_hom_category_laws",
    "check_interchange",
    "check_pentagon",
    "check_triangle",
    "check_unitor_naturality",
    "left_unitor",
    "right_unitor",
    "STAR",
    "Atom",
    "Pair",
    "Presheaf",
    "PresheafMorphism",
    "Star",
    "category_of_elements",
    "elements_functor",
    "identity_presheaf_morphism",
    "terminal_presheaf",
    "validate_presheaf",
    "validate_presheaf_morphism",
    "vcomp_presheaf_morphism",
    "BoundaryMismatchError",
    "NotComposableError",
    "OpenCatError",
    "ParseError",
    "SizeLimitError",
    "UnknownElementError",
    "UnknownObjectError",
    "FinCategory",
    "FinFunctor",
    "NatTrans",
    "Violation",
    "arrow_component",
    "compose_arrows",
    "compose_functors",
    "hcomp_nat",
    "identity_functor",
    "identity_nat",
    "validate_category",
    "validate_functor",
    "validate_nat",
    "vcomp_nat",
    "OpenFunctor",
    "apply_open",
    "apply_open_arrow",
    "compose_open",
    "from_classical",
    "identity_open_functor",
    "validate_open_functor",
    "OpenNatTrans",
    "first_difference",
    "hcomp_open",
    "identity_open_nat",
    "is_invertible_open_nat",
    "make_open_nat",
    "open_nat_equal",
    "validate_open_nat",
    "vcomp_open",
]
