"""Exact alcove combinatorics for products of GL_n.

Public surface: the root datum layer (weights, roots, depth), the extended
affine Weyl group (lengths, reduced words, Bruhat and raising orders,
admissible sets), Serre weight and Deligne-Lusztig presentation calculus
(Jordan-Holder sets, outer factors, covering), predicted weight sets with
elimination certificates and the weight-connectivity graph, and brute-force
oracles that certify the optimized paths.
"""

from .affine_weyl import (
    ExtAffineElt,
    Gallery,
    OmegaDecomp,
    adm_contains,
    adm_eta,
    adm_set,
    bruhat_interval,
    bruhat_leq,
    diamond,
    is_dominant_elt,
    is_restricted_elt,
    length,
    minimal_gallery,
    omega_decompose,
    p_dot,
    reduced_word,
    restricted_reps,
    up_leq,
    wh_element,
)
from .herzig import (
    ConnectionEdge,
    ConnectivityGraph,
    EliminationCertificate,
    NotEliminableError,
    TameParam,
    admissible_pair,
    connect,
    connectivity_graph,
    eliminate,
    equivalence_report,
    herzig_twist,
    is_extremal,
    wobv,
    wset,
    wset_by_definition,
)
from .oracle import (
    MUTATIONS,
    SweepConfig,
    SweepReport,
    brute_bruhat,
    brute_up,
    hyperplane_count_length,
    lemma_sweeps,
)
from .root_data import (
    AlcoveError,
    BudgetError,
    DepthError,
    FiniteWeylElt,
    InconclusiveRegionError,
    Root,
    RootDatum,
    ValidationError,
    WeightVec,
    alcove_of,
    depth_of,
    frobenius_pi,
    h_value,
    is_m_deep,
    pairing,
)
from .weights_dl import (
    DLPresentation,
    SerrePresentation,
    SerreWeight,
    covers,
    d_sigma,
    dl_equal,
    is_m_generic,
    jh_outer,
    jh_set,
    jh_set_by_reflection,
    max_genericity,
    presentations_of,
    serre_weight,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
