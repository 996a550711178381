"""Exact computational kit for the Hawaiian earring.

Free-group word algebra, a truncated inverse-limit view of the fundamental
group, a combinatorial loop-space model with the uniform metric, oscillation
numbers with witnesses, and an evidence harness for the limit-point and
product facts that make the quotient-topology multiplication discontinuous.
"""

from .words import (
    EMPTY,
    Word,
    WordParseError,
    concat,
    count_gen,
    delete_above,
    format_word,
    invert,
    is_reduced,
    letter,
    letter_gen,
    letter_sign,
    max_gen,
    parse_word,
    reduce_word,
    word,
)
from .limits import CoherentSequence, check_coherent, coherent_from_json, phi, project
from .loops import (
    BASE,
    DWELL,
    Base,
    CombLoop,
    Dwell,
    OnCircle,
    Traverse,
    compile_loop,
    concat_loops,
    constant_loop,
    embed,
    eval_loop,
    format_tokens,
    homotopy_class_equal,
    lipschitz_bound,
    loop_of_word,
    parse_tokens,
    retract_loop,
    sup_distance,
    word_of,
)
from .oscillation import WitnessSet, hausdorff, oscillation, verify_witness
from .evidence import (
    Cell,
    EvidenceReport,
    FamilyPair,
    a_loop,
    a_word,
    convergence_report,
    family_pair,
    limit_point_report,
    limit_tokens,
    oscillation_bounds_report,
    padded_variant,
    product_class_report,
    square_grid,
    vanishing_report,
    w_loop,
    w_word,
)

__version__ = "0.1.0"
