"""Chinese Postman solver for arc-colored digraphs.

Feasibility for any number of colors, PC Euler trails and exact optimal
covering walks for two colors, and exhaustive oracles for small instances.
"""

from .errors import (GraphError, InvariantError, NotApplicableError, OracleLimitError,
                     ParseError, PostmanError, UnsupportedError)
from .euler import (Circuit, CircuitDecomposition, ClosedWalk, build_circuit_graph,
                    decompose_into_circuits, is_bad_circuit, pc_euler_trail,
                    verify_closed_pc_walk)
from .formats import emit_instance, emit_solution, emit_walk, parse_instance, parse_walk
from .generate import GeneratorConfig, generate
from .graph import (Arc, ColoredMultiDigraph, build_graph, degree_profile, double_subdivide,
                    is_color_balanced, strong_and_local_check)
from .matching import hungarian_min_perfect_matching
from .oracle import oracle_cpp, oracle_euler, oracle_fev_trail, oracle_trail_connected
from .solver import (Solution, augment, build_matching_instance, check_feasible,
                     compute_deficits, solve)
from .trails import (ArcGraph, Trail, build_arc_graph, is_pc_trail_connected,
                     min_weight_pc_fev_trail, pc_trail_exists)

__version__ = "0.1.0"
