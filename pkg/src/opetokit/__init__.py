"""Finite opetopic 0/1/2-categories with decidable universality checking,
coherence validation, and executable conversions to and from classical
categories and bicategories."""

from .core import (
    DEFAULT_ARITY_BOUND,
    FiniteOpOneCat,
    FiniteOpTwoCat,
    FiniteOpZeroCat,
    PastingPath,
    TwoCell,
    TwoCellTree,
    composite_of_tree,
    empty_path,
    graft,
    hom_category_of_frame,
    occupants_of_niche,
    path,
    validate_op0,
    validate_op1,
    validate_op2,
)
from .universality import (
    CoherenceReport,
    check_coherence,
    factorizations_through,
    is_universal_1cell,
    is_universal_1cell_op1,
    is_universal_2cell,
    is_universal_factorization_1,
)
from .bicat import (
    Bracketing,
    CatFunctor,
    FiniteBicategory,
    FiniteCategory,
    LaxFunctor,
    all_bracketings,
    chain_value,
    coherence_cell,
    invert_two_cell,
    is_equivalence_1cell,
    is_invertible_2cell,
    validate_bicategory,
    validate_category,
    validate_functor,
    validate_lax_functor,
)
from .equivalences import (
    Biasing,
    MorphismClassification,
    OpMorphism,
    choose_biasing,
    classify_morphism,
    from_bicategory,
    from_category,
    from_set,
    functor_from_morphism,
    lax_functor_from_morphism,
    morphism_from_lax_functor,
    to_bicategory,
    to_category,
    to_set,
    validate_biasing,
    validate_op_morphism,
)
from .errors import (
    ArityBoundExceeded,
    ArityError,
    DanglingId,
    FrameMismatch,
    InvalidBiasing,
    InvalidInput,
    MissingComposite,
    MissingEntry,
    NicheMismatch,
    NonUniqueSolution,
    NoSolution,
    NoUniversalOccupant,
    OpetokitError,
    ParseError,
    PathMismatch,
    UnknownKind,
    ValidationReport,
    Violation,
)

__version__ = "0.1.0"
