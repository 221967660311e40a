"""All-versus-Nothing arguments for stabiliser states.

Exact Pauli-group algebra, XOR theories and their refutations, AvN triples
(predicates, counting, enumeration), graph states with local
complementation, and an exact small-n quantum semantics used as an oracle.
"""

from .gf2 import Gf2Result, Gf2System, gf2_solve
from .graphstate import (
    Graph,
    LocalCliffordFrame,
    conjugate,
    extract_avn_triple,
    graph_generators,
    graph_group,
    has_avn,
    lc_orbit,
    local_complement,
    parse_graph,
)
from .pauli import (
    CheckVector,
    PauliElement,
    commutes,
    from_check_vector,
    mul,
    symplectic_product,
    to_check_vector,
)
from .semantics import (
    EmpiricalModel,
    ExactScalar,
    ExactState,
    apply_pauli,
    empirical_model,
    is_strongly_contextual,
    isotropy_group,
    projector_trace,
    stabilised_subspace,
    stabiliser_state,
    xor_theory_of_model,
)
from .subgroup import (
    AvnVerdict,
    SizeCapError,
    StabiliserGroup,
    XorEquation,
    XorTheory,
    elements,
    find_avn_triple,
    is_avn,
    stabiliser_dimension,
    xor_theory,
)
from .triples import (
    AvnTriple,
    PatternCounts,
    PatternError,
    count_formula,
    count_structured,
    enumerate_triples,
    is_avn_triple_def1,
    is_avn_triple_def2,
    pattern_counts,
    reduce_to_three,
)

__version__ = "0.1.0"
