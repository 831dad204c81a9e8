"""Projective planes of order k, complete sets of k-1 mutually projective
Latin squares, and the matching duality used to reason about both."""

from .binmat import (
    BinaryMatrix,
    BlockPartition,
    FormatError,
    Permutation,
    assemble,
    block,
    from_inc_text,
    is_permutation_matrix,
    permute,
    to_inc_text,
)
from .canonical import BlockForm, BlockFormReport, canonicalize, extract_mpls, reconstruct, verify_block_form
from .geometry import (
    Geometry,
    GeometryError,
    GeometryReport,
    PencilWithTransversal,
    PlaneVerdict,
    ProjectivePlane,
    classify_v_eq_b,
    find_four_independent,
    geometry_from_json,
    geometry_to_json,
    incident_injection,
    independent_points,
    line_through,
    plane_check,
    structure_report,
    subgeometry,
    validate_geometry,
)
from .latin import (
    LatinSquare,
    MplsReport,
    MplsSet,
    ResolvabilityReport,
    Transversal,
    cyclic_square,
    from_ls_text,
    group_product_cover,
    mpls_from_text,
    mpls_to_text,
    pair_coverage,
    projective_pair,
    random_latin_square,
    resolvability_report,
    submatrix_symbol_count,
    to_ls_text,
    transversals_from_companion,
    verify_mpls,
)
from .matching import (
    Biconditional,
    DualityReport,
    MatchingWitness,
    ZeroBlockWitness,
    bipartite_matching,
    decompose_regular,
    duality_report,
    max_independent_ones,
    max_zero_submatrix,
)
from .planes import (
    FiniteField,
    PlaneBundle,
    build_field,
    build_pg2,
    geometry_from_incidence,
    incidence_from_geometry,
    prime_power,
    smallest_irreducible,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryMatrix",
    "BlockPartition",
    "FormatError",
    "Permutation",
    "assemble",
    "block",
    "from_inc_text",
    "is_permutation_matrix",
    "permute",
    "to_inc_text",
    "BlockForm",
    "BlockFormReport",
    "canonicalize",
    "extract_mpls",
    "reconstruct",
    "verify_block_form",
    "Geometry",
    "GeometryError",
    "GeometryReport",
    "PencilWithTransversal",
    "PlaneVerdict",
    "ProjectivePlane",
    "classify_v_eq_b",
    "find_four_independent",
    "geometry_from_json",
    "geometry_to_json",
    "incident_injection",
    "independent_points",
    "line_through",
    "plane_check",
    "structure_report",
    "subgeometry",
    "validate_geometry",
    "LatinSquare",
    "MplsReport",
    "MplsSet",
    "ResolvabilityReport",
    "Transversal",
    "cyclic_square",
    "from_ls_text",
    "group_product_cover",
    "mpls_from_text",
    "mpls_to_text",
    "pair_coverage",
    "projective_pair",
    "random_latin_square",
    "resolvability_report",
    "submatrix_symbol_count",
    "to_ls_text",
    "transversals_from_companion",
    "verify_mpls",
    "Biconditional",
    "DualityReport",
    "MatchingWitness",
    "ZeroBlockWitness",
    "bipartite_matching",
    "decompose_regular",
    "duality_report",
    "max_independent_ones",
    "max_zero_submatrix",
    "FiniteField",
    "PlaneBundle",
    "build_field",
    "build_pg2",
    "geometry_from_incidence",
    "incidence_from_geometry",
    "prime_power",
    "smallest_irreducible",
    "__version__",
]
