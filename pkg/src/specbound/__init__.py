"""Spectral radius bounds for graphs forbidding short odd cycles, with
exhaustive desk-scale certification."""

from .graphs import (
    Graph,
    Embedding,
    PatternId,
    GraphError,
    Graph6Error,
    blow_up,
    book,
    booksize,
    canonical_form,
    canonical_graph,
    complete,
    complete_bipartite,
    contains_c5,
    cycle,
    disjoint_union,
    edge_count,
    find_induced,
    from_graph6,
    is_bipartite,
    is_connected,
    is_triangle_free,
    odd_girth,
    path,
    pattern,
    s_odd,
    sk,
    star_plus_edge,
    subdivide_edge,
    to_graph6,
    triangle_count,
)
from .spectra import (
    CharPoly,
    Spectrum,
    char_poly,
    classical_bounds,
    cycle_spectrum_closed_form,
    eigenvalues,
    spectral_radius,
    triangle_count_lemma,
    triangle_count_trace,
    verify_interlacing,
)
from .bounds import (
    IntPoly,
    RootBracket,
    beta,
    beta_bracket,
    f_min_on_interval,
    f_val,
    g_val,
    gamma,
    gamma_bracket,
    h_poly,
    l_poly,
    lemma42_check,
    z_poly,
)
from .certify import (
    CertificationReport,
    ClassFilter,
    certify_main,
    certify_mantel,
    certify_erdos,
    certify_nosal,
    certify_lnw_sum,
    certify_thm15,
    certify_zhai_shu,
    certify_conj51,
    enumerate_graphs,
    explore_booksize,
)

__version__ = "0.1.0"
