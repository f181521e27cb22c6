"""Face vectors of flag complexes.

Clique vectors of graphs, Kruskal-Katona and Frankl-Füredi-Kalai canonical
representations with their shadow bounds, (colored) rev-lex complexes with
prescribed face counts, and the constructive transformation of any flag
complex into a balanced complex with the identical face vector — plus the
brute-force harness that re-verifies all of it at small scale.
"""
from .combinat import (
    CanonicalRep,
    binom,
    ffk_bound,
    ffk_canonical,
    kk_canonical,
    kk_shadow_bound,
    turan_binom,
    turan_parts,
)
from .complexes import (
    ColoredComplex,
    Complex,
    check_coloring,
    chromatic_number,
    closure,
    face_vector,
    is_balanced,
    is_flag,
    link,
    one_skeleton,
)
from .construct import (
    BalancedReport,
    ConstructionTrace,
    TraceStep,
    construct_balanced,
    construct_from_vector,
    construct_pair,
)
from .errors import GuardExceeded, InputFormatError, InvariantViolation
from .graphs import (
    Graph,
    all_graphs,
    clique_number,
    clique_vector,
    cliques,
    graph6_encode,
    graph_link,
    parse_graph,
    remove_vertices,
    turan_graph,
)
from .revlex import (
    LevelSpec,
    colored_revlex_complex,
    first_ksets,
    first_permissible_ksets,
    is_permissible,
    kset_rank,
    kset_unrank,
    next_kset,
    revlex_compare,
    revlex_complex,
    revlex_key,
)
from .verify import (
    GraphRecord,
    VerificationReport,
    exhaustive_verify,
    oracle_face_count,
    random_verify,
    verify_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BalancedReport",
    "CanonicalRep",
    "ColoredComplex",
    "Complex",
    "ConstructionTrace",
    "Graph",
    "GraphRecord",
    "GuardExceeded",
    "InputFormatError",
    "InvariantViolation",
    "LevelSpec",
    "TraceStep",
    "VerificationReport",
    "all_graphs",
    "binom",
    "check_coloring",
    "chromatic_number",
    "clique_number",
    "clique_vector",
    "cliques",
    "closure",
    "colored_revlex_complex",
    "construct_balanced",
    "construct_from_vector",
    "construct_pair",
    "exhaustive_verify",
    "face_vector",
    "ffk_bound",
    "ffk_canonical",
    "first_ksets",
    "first_permissible_ksets",
    "graph6_encode",
    "graph_link",
    "is_balanced",
    "is_flag",
    "is_permissible",
    "kk_canonical",
    "kk_shadow_bound",
    "kset_rank",
    "kset_unrank",
    "link",
    "next_kset",
    "one_skeleton",
    "oracle_face_count",
    "parse_graph",
    "random_verify",
    "remove_vertices",
    "revlex_compare",
    "revlex_complex",
    "revlex_key",
    "turan_binom",
    "turan_graph",
    "turan_parts",
    "verify_graph",
]
