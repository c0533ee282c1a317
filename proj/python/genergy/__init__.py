"""Graph energy, adjacency spectra, lower bounds, and exhaustive conjecture scans."""

from ._core import (
    Graph,
    Graph6Error,
    bound_amgm,
    bound_conjugate,
    bound_log,
    bound_report,
    bound_variance,
    canonical_form,
    char_poly,
    chromatic_number,
    complete,
    complete_bipartite,
    cycle,
    degree_profile,
    disjoint_union,
    eigenvalues,
    energy,
    exact_determinant,
    from_graph6,
    generate_all,
    is_bipartite,
    is_connected,
    is_nonsingular,
    is_planar,
    is_regular,
    path,
    quantity_c,
    run_property_suite,
    scan,
    scan_graph6_lines,
    to_graph6,
)

__all__ = [
    "Graph",
    "Graph6Error",
    "bound_amgm",
    "bound_conjugate",
    "bound_log",
    "bound_report",
    "bound_variance",
    "canonical_form",
    "char_poly",
    "chromatic_number",
    "complete",
    "complete_bipartite",
    "cycle",
    "degree_profile",
    "disjoint_union",
    "eigenvalues",
    "energy",
    "exact_determinant",
    "from_graph6",
    "generate_all",
    "is_bipartite",
    "is_connected",
    "is_nonsingular",
    "is_planar",
    "is_regular",
    "path",
    "quantity_c",
    "run_property_suite",
    "scan",
    "scan_graph6_lines",
    "to_graph6",
]
