"""qathin: link invariants from planar diagrams and grids, with
quasi-alternating certificate search and homological thinness checks."""

from .diagram import PlanarDiagram, ResolutionChoice, parse_pd, components, resolve, mirror, simplify, writhe
from .goeritz import checkerboard, goeritz_matrix, signature, determinant, e_invariant, check_signature_lemma
from .khovanov import (
    BigradedRanks,
    DeltaRanks,
    khovanov_reduced_f2,
    khovanov_reduced_z,
    delta_collapse,
    is_sigma_thin,
    jones_via_euler,
    kauffman_bracket,
    jones_polynomial,
    check_skein_grading,
)
from .states import enumerate_states, state_delta, state_thinness_predictor
from .gridfloer import GridDiagram, parse_grid, tilde_complex, grid_gradings, hfk_delta_ranks, is_floer_sigma_thin
from .quasialt import qa_search, verify_certificate

__version__ = "0.1.0"
