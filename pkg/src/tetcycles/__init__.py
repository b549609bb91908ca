"""Mod-2 cycles, dual cocycles and homologous shortest paths on
triangulated closed 3-manifolds."""

from .chains import (
    Chain,
    Cochain,
    HomologyBasis,
    betti_numbers,
    boundary,
    bounding_chain,
    chain_of,
    coarsen_chain,
    coboundary,
    evaluate,
    homology_basis,
    is_boundary,
    is_cycle,
    subdivide_chain,
)
from .covering import (
    DualBasis,
    IndexSystem,
    WeightFunction,
    build_index_system,
    chains_homologous,
    covering_complex,
    covering_scheme_simplices,
    dual_basis,
    index_of_chain,
    lift_path,
    min_homologous_path,
)
from .duality import (
    cocycle_from_1cycle,
    cocycle_from_2cycle,
    cohomologous,
    dual_star_chain,
    intersection_cocycle,
    intersection_number,
    is_cocycle,
    oracle_cocycle,
    realizes_same_class,
    star_labels,
)
from .errors import (
    BoundaryMismatch,
    DegenerateTet,
    DimensionMismatch,
    DuplicateTet,
    Infeasible,
    InvalidParameter,
    NotACycle,
    NotAPath,
    NotValidated,
    ParseError,
    RankGuardExceeded,
    SingularPairing,
    TetcyclesError,
    UnknownSimplex,
)
from .formats import (
    parse_chain_text,
    parse_cochain_text,
    parse_mesh_text,
    parse_path_text,
    parse_weights_text,
    write_chain_text,
    write_cochain_text,
    write_mesh_text,
    write_path_text,
    write_weights_text,
)
from .mesh import (
    BarycentricComplex,
    Complex3,
    ValidationReport,
    barycentric_subdivision,
    bk,
    build_complex,
    ensure_validated,
    gen_s3,
    gen_t3,
    link,
    rp3,
    star,
    validate_closed_manifold,
)

__version__ = "0.1.0"
