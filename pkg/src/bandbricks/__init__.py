"""Band bricks over string algebras: presentations, strings, crowns and traced posets."""

from .correspondence import (
    BandModuleSpec,
    BrickInfiniteResult,
    is_brick,
    is_brick_infinite,
    is_semibrick,
    morphism_exists,
    no_morphism,
    w_ba,
    w_ba_inverse,
    w_st,
    w_st_inverse,
)
from .estimators import BandBrickClassifier, CrownTransformer
from .exceptions import (
    BandBricksError,
    BandError,
    CrownError,
    NotAcyclicError,
    NotGentleError,
    PresentationError,
    SignError,
    StringError,
    TracedPosetError,
)
from .morphisms import hom_dimension, oracle_is_brick
from .presentation import (
    Presentation,
    is_isomorphic,
    make_presentation,
    parse_presentation,
    serialize_presentation,
    solve_signs,
    validate,
)
from .strings import AlgString, Band, Syllable, canonical_form, enumerate_bands, make_band, make_string
from .traced_poset import (
    PosetCrown,
    TracedPoset,
    build_traced_poset,
    covering_quiver,
    recover_presentation,
    validate_traced_poset,
    wpc_pair,
)
from .trisection import lift_band, trisect
from .validation import check_band, check_bands, check_presentation, load_presentation
from .words import bw_transform, is_pcw, is_wpc_crown, phi, phi_tilde, phi_tilde_inverse

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
