"""Exact finite-field certificates for pro-p right-angled Artin groups."""

from .cohomology import (
    Cochain,
    SRAlgebra,
    SupportData,
    cup_matrix,
    dim_im_c_alpha,
    dim_im_c_alpha_formula,
    support_data,
    wedge,
)
from .demushkin import (
    DemushkinForm,
    demushkin_cor_table,
    demushkin_h2_exactness,
    demushkin_symplectic_basis,
)
from .galois import (
    ExactnessLedger,
    Verdict,
    WGeneratorScheme,
    classify,
    direct_product_ledger,
    exactness_ledger,
    res_certificate_chordal,
    res_certificate_ladder,
)
from .graph import (
    SimplicialGraph,
    chordal_certificate,
    chordal_pasting_tree,
    complete_join_decomposition,
    connected_components,
    embed_in_ladder,
    enumerate_cliques,
    is_chordal,
    is_elementary_type,
    subsquare_census,
)
from .linalg import FpMatrix, rank_kernel_image
from .massey import (
    Presentation,
    UnipotentMatrix,
    UnipotentRep,
    build_raag_witness,
    exhaustive_witness_search,
    extract_superdiagonal,
    power_witness,
    product_extend_witness,
    verify_rep,
)
from .pcentral import ClassTwoWord, GroupWord, nf_commutator, nf_from_word, relations_independent

__version__ = "0.1.0"
