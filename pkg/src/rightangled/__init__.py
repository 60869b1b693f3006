"""Combinatorics, volumes and volume bounds of right-angled hyperbolic polyhedra."""
from .andreev import (AndreevWitness, Realizability, RealizabilityKind, WitnessKind,
                      classify, require_realizable, witness_holds)
from .bounds import (ApexBound, BoundEntry, BoundId, BoundReport, apex_face_bound,
                     apex_vertex_bound, best_apex_bound, best_face_triple, bound_report,
                     compact_bounds, doubling_series_bound, doubling_series_term,
                     face_triple_bound, ideal_atkinson, ideal_upper_improved, ideal_upper_v9,
                     mixed_bounds)
from .catalog import CatalogEntry, default_catalog
from .generators import (antiprism, contract_edge, cube, fullerene_c60, icosahedron,
                         loebell, prism, pyramid, split_vertex, tetrahedron, truncate)
from .harness import ClaimResult, verify_bound_soundness, verify_suite
from .lobachevsky import ErrBoundedValue, lobachevsky, lobachevsky_values, orthoscheme_volume, v3, v8
from .polyio import ParseError, canonicalize, parse, parse_many, serialize
from .polytope import (CombinatorialPolytope, IncidenceProfile, PolytopeError,
                       ValidationResult, VertexKind, avg_face_neighbours, avg_quasi_adjacent,
                       avg_quasi_incident, face_neighbours, profile, quasi_adjacent_count,
                       quasi_incident_vertices, triangle_free_vertex, validate)
from .surgery import DoublingChain, SurgeryError, double_along_face, double_chain, octahedron_chain
from .volumes import vol_antiprism, vol_loebell

__version__ = "0.1.0"

__all__ = [
    "AndreevWitness", "Realizability", "RealizabilityKind", "WitnessKind", "classify",
    "require_realizable", "witness_holds", "ApexBound", "BoundEntry", "BoundId", "BoundReport",
    "apex_face_bound", "apex_vertex_bound", "best_apex_bound", "best_face_triple",
    "bound_report", "compact_bounds", "doubling_series_bound", "doubling_series_term",
    "face_triple_bound", "ideal_atkinson", "ideal_upper_improved", "ideal_upper_v9",
    "mixed_bounds", "CatalogEntry", "default_catalog", "antiprism", "contract_edge", "cube",
    "fullerene_c60", "icosahedron", "loebell", "prism", "pyramid", "split_vertex",
    "tetrahedron", "truncate", "ClaimResult", "verify_bound_soundness", "verify_suite",
    "ErrBoundedValue", "lobachevsky", "lobachevsky_values", "orthoscheme_volume", "v3", "v8",
    "ParseError", "canonicalize", "parse", "parse_many", "serialize", "CombinatorialPolytope",
    "IncidenceProfile", "PolytopeError", "ValidationResult", "VertexKind",
    "avg_face_neighbours", "avg_quasi_adjacent", "avg_quasi_incident", "face_neighbours",
    "profile", "quasi_adjacent_count", "quasi_incident_vertices", "triangle_free_vertex",
    "validate", "DoublingChain", "SurgeryError", "double_along_face", "double_chain",
    "octahedron_chain", "vol_antiprism", "vol_loebell",
]
