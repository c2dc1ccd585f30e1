"""Fox colorings, tangle algebra and move-equivalence search for link diagrams."""

from .zk import ZkMatrix, SubspaceBasis, rref, rank, kernel, smith_normal_form
from .diagram import (Diagram, DiagramError, DiagramParseError, parse, parse_many, emit,
                      arcs, components, faces, euler_ok, canonical_code, splice_tangle)
from .reidemeister import ReidemeisterMove, apply_reidemeister, simplify, simplify_traced
from .coloring import coloring_space, col_count, tri, boundary_image
from .symplectic import (alternating_check, to_f_coords, from_f_coords, form_eval,
                         radical_vector, quotient_reduce, is_lagrangian, lagrangian_count,
                         enumerate_lagrangians, tangle_lagrangian)
from .rational import (Slope, RationalTangleSpec, slope, conway_from_slope, build_tangle,
                       mq_to_slope, slope_relation_check)
from .algebraic import (zero_tangle, infinity_tangle, crossing_tangle, rotate, compose,
                        close, generate_algebraic, generate_2_algebraic)
from .moves import (NMove, PQMove, RationalMove, MoveSite, MoveSpec, enumerate_sites,
                    apply_move, apply_move_traced, move_inverse)
from .search import (MoveFamily, Budget, ReductionPath, Exhausted, reduce, classify_tangle,
                     basic_2_tangles, census_boundary_subspaces)
from . import library

__version__ = "0.1.0"
