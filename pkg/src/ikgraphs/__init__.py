"""Graph-minor obstruction toolkit for 22-edge triangle-free graphs with a unique degree-5 vertex."""

from .canon import CanonicalForm, are_isomorphic, canonical_form, canonical_relabel
from .catalog import THEOREM_GRAPHS, catalog_lookup, catalog_names
from .enumeration import DegreeSpec, enumerate_graphs, naive_enumerate, type_spec
from .graph import Multigraph, SimpleGraph, degree_sequence, is_connected, is_triangle_free, neighborhood_profile
from .graph6 import Graph6Error
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .minors import MinorWitness, contract_edge, has_minor
from .moves import Family, MoveError, family_closure, triangle_y, y_triangle
from .obstruction import ApexCertificate, certify_ik, is_2_apex, is_planar, prop1_evaluate
from .reduction import ReductionReport, count_equation, delete_pair, is_reduction_k33, reduce

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "are_isomorphic",
    "canonical_form",
    "canonical_relabel",
    "THEOREM_GRAPHS",
    "catalog_lookup",
    "catalog_names",
    "DegreeSpec",
    "enumerate_graphs",
    "naive_enumerate",
    "type_spec",
    "Multigraph",
    "SimpleGraph",
    "degree_sequence",
    "is_connected",
    "is_triangle_free",
    "neighborhood_profile",
    "Graph6Error",
    "graph6_decode",
    "graph6_encode",
    "MinorWitness",
    "contract_edge",
    "has_minor",
    "Family",
    "MoveError",
    "family_closure",
    "triangle_y",
    "y_triangle",
    "ApexCertificate",
    "certify_ik",
    "is_2_apex",
    "is_planar",
    "prop1_evaluate",
    "ReductionReport",
    "count_equation",
    "delete_pair",
    "is_reduction_k33",
    "reduce",
]
