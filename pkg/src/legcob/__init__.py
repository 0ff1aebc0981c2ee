"""Legendrian fronts, decomposable cobordism moves and non-collarability certificates."""

from .braid import BraidWord, QPFactorization, braid_closure_pd, expand, surface_data
from .front import FrontDiagram, FrontEvent, classical_invariants, parse_front, serialize_front
from .laurent import LaurentPoly1, LaurentPoly2
from .moves import CobordismScript, MoveKind, MoveSite, apply_move, enumerate_moves, verify_script
from .obstruct import certify_disk_slice, check_filling, collar_obstruction
from .planar import PlanarDiagram, mirror, to_planar_diagram
from .polys import jones, kauffman_bracket, kauffman_poly, tb_upper_bound

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "CobordismScript", "FrontDiagram", "FrontEvent", "LaurentPoly1",
    "LaurentPoly2", "MoveKind", "MoveSite", "PlanarDiagram", "QPFactorization",
    "apply_move", "braid_closure_pd", "certify_disk_slice", "check_filling",
    "classical_invariants", "collar_obstruction", "enumerate_moves", "expand", "jones",
    "kauffman_bracket", "kauffman_poly", "mirror", "parse_front", "serialize_front",
    "surface_data", "tb_upper_bound", "to_planar_diagram", "verify_script",
]
