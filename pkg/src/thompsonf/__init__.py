"""Exact computations with Thompson's group F.

Elements are piecewise-linear maps with dyadic breakpoints (``plhomeo``)
or, inside the positive monoid, binary forests (``monoid``). On top of
those sit Schreier graphs of the actions on dyadic points and tuples
(``schreier``), the unitary action on the Haar basis (``haar``), graph
amenability diagnostics (``amenability``) and the induced subgraph on
``{x_n u}`` of the Cayley graph (``gamma_s``).
"""

from .exact import Dyadic, QuadDyadic, parse_dyadic, parse_quad, sqrt_pow2
from .graph import FrontierError, LabeledGraph, ball, build_orbit_graph, distance
from .plhomeo import (
    HALF,
    IDENTITY,
    PLHomeo,
    compose,
    evaluate,
    generator,
    generator_inverse,
    invert,
    stab_join,
    stab_split,
    validate_membership,
)
from .monoid import (
    BinaryForest,
    Word,
    forest_generator,
    forest_product,
    forest_to_word,
    lemma1_check,
    lemma2_check,
    word_to_forest,
    word_to_plhomeo,
)
from .report import Report
from .amenability import boundary, cheeger_ratio, doubling_check, gamma_p_boundary_test
from .schreier import (
    dyadic_schreier_graph,
    find_transporter,
    folner_ratio,
    maximality_decompose,
    stab_transporter,
    tuple_orbit_graph,
    verify_dyadic_structure,
    word_length_lower_bound,
)
from .haar import (
    CONSTANT,
    HaarCombination,
    HaarIndex,
    StepFunction,
    apply_pi,
    expand_in_haar,
    haar_point,
    hilbert_schreier_graph,
    verify_action_equations,
    verify_exceptional_tables,
)
from .gamma_s import build_gamma_s, check_structure, gamma_s_doubling_witness

__version__ = "0.1.0"
