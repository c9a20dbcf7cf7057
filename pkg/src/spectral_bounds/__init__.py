"""Spectral radius bounds for simple graphs, with exhaustive verification.

The library covers three families of results and the machinery to check
them: the spectral dominance of the balanced complete multipartite graph
among K_{r+1}-free graphs, lower bounds on the irregularity gap mu - 2m/n,
and the degree/biclique upper bound for graphs without large books or
K_{2,l+1} subgraphs, including its equality characterization.
"""

from .bounds import (
    BoundReport,
    BoundVerdict,
    Th2Result,
    Th3Result,
    cs_lower,
    full_report,
    hofmeister_lower,
    shi_song_bound,
    th1_check,
    th2_check,
    th3_bound,
    th3_check,
    wilf_upper,
)
from .cliques import (
    CliqueCounts,
    clique_counts,
    clique_number,
    clique_poly_residual,
    count_cliques,
    is_clique_free,
    turan_clique_count,
    zykov_check,
)
from .forbidden import (
    CMatrixReport,
    CommonNeighborStats,
    EqualityCase,
    biclique_free,
    book_free,
    c_matrix_report,
    common_neighbor_stats,
    common_neighbors,
    counting_inequality_check,
    equality_case,
)
from .graphs import (
    DegreeClass,
    DegreeProfile,
    Graph,
    complete,
    complete_bipartite,
    complete_minus_edge,
    connected_components,
    cycle,
    degree_profile,
    friendship,
    from_edge_list,
    from_edge_mask,
    from_graph6,
    is_connected,
    is_turan,
    matching_complement,
    path,
    read_edge_list,
    star,
    to_graph6,
    turan_graph,
    wheel,
    write_edge_list,
)
from .harness import (
    CampaignConfig,
    VerificationRecord,
    enumerate_labeled,
    ingest_graph6,
    run_campaign,
)
from .spectra import (
    QuotientBound,
    Spectrum,
    complete_minus_edge_mu,
    eigenvalues_symmetric,
    matching_complement_mu,
    principal_eigenvector,
    quotient_bound,
    spectral_radius,
    spectrum,
    turan_spectral_radius,
)

__version__ = "0.1.0"
