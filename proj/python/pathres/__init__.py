"""Minimal cellular resolutions of powers of path edge ideals."""

from ._core import (
    CheckError,
    ComplexYdn,
    GuardError,
    InputError,
    Matching,
    assemble_matching,
    betti_table,
    boundary_faces,
    cell_label,
    cell_stats,
    closed_form_betti,
    complex_ydn,
    count_by_BC,
    count_cells,
    count_strings,
    cov_path_faces,
    cov_path_matching,
    covered_vertices,
    decode_string,
    encode_string,
    fiber_groups,
    format_betti_table,
    gens,
    hull_membership,
    ind_path_matching,
    label_maximal_cells,
    lcm_of,
    matching_to_json,
    morse_boundary,
    taylor_betti_path,
    verify_lattice_cycle,
    verify_lattice_path,
    verify_supports,
    vertex_realization,
)

__version__ = "0.1.0"

__all__ = [
    "CheckError",
    "ComplexYdn",
    "GuardError",
    "InputError",
    "Matching",
    "assemble_matching",
    "betti_table",
    "boundary_faces",
    "cell_label",
    "cell_stats",
    "closed_form_betti",
    "complex_ydn",
    "count_by_BC",
    "count_cells",
    "count_strings",
    "cov_path_faces",
    "cov_path_matching",
    "covered_vertices",
    "decode_string",
    "encode_string",
    "fiber_groups",
    "format_betti_table",
    "gens",
    "hull_membership",
    "ind_path_matching",
    "label_maximal_cells",
    "lcm_of",
    "matching_to_json",
    "morse_boundary",
    "taylor_betti_path",
    "verify_lattice_cycle",
    "verify_lattice_path",
    "verify_supports",
    "vertex_realization",
]
