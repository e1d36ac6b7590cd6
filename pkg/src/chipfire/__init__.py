"""Parallel chip-firing games on directed and undirected graphs.

Simulation, exact period detection, exact balance-system solving, the graph
families with factorial minimal periods, and firing-sequence gadgets.
"""

from .audit import (AuditReport, audit_cycle_periods, audit_no_period2_orientations,
                    audit_stationary_fire_counts, complete_graph, cycle_graph)
from .constructions import (GadgetGame, bipartite_with_sink, cycle_divisor_game,
                            directed_cycle, realize_sequence, undirected_t2_game,
                            useful_bipartite, useful_complete)
from .dynamics import (StepResult, TrajectoryRecord, run_trajectory, step_directed,
                       step_undirected)
from .errors import (BudgetExhausted, ChipFiringError, ContractError, DomainError,
                     GameFileError, NoPositiveSolution, StructuralError,
                     UnrealizableSequence)
from .gamefile import export_dot, parse_game_file, write_game_file
from .graph import (CondensationReport, DirectedMultigraph, UndirectedGraph,
                    bfs_distance, enumerate_orientations, is_dag, scc_partition)
from .linalg import (ExactMatrix, FiringVector, balance_laplacian, bipartite_lower_bound,
                     complete_graph_recurrence, minimal_positive_kernel_vector,
                     reduced_row_echelon)
from .period import (FiringString, PeriodSummary, atomic_firing_sequence,
                     convergent_period_search, detect_period, minimal_string_period)

__version__ = "0.1.0"
