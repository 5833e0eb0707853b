"""Equitable graph coloring: constructive solvers, exact oracles, generators."""
from .check import check_coloring, is_equitable, mod_star
from .errors import (ContractError, EqColorError, InternalInvariantError, OutOfScopeError,
                     ParameterError, ParseError, PreconditionError, StepCapExceeded,
                     StructureError)
from .forest import alpha_v_all, forest_equitable_color, forest_feasible
from .generators import generate
from .graph import (Coloring, Graph, ListAssignment, Verdict, degree_stats,
                    graph_from_dimacs, graph_to_dimacs)
from .hs import ShiftLog, equitable_color_hs, fix_nearly_equitable, pad_to_multiple
from .ore import equitable_color_ore
from .oracle import (SearchBudget, decide_choosable, decide_equitable, decide_list,
                     m0_exhaustive, m0_formula, star_greedy_list_color)

__version__ = "0.1.0"

__all__ = [
    "Coloring", "ContractError", "EqColorError", "Graph", "InternalInvariantError",
    "ListAssignment", "OutOfScopeError", "ParameterError", "ParseError", "PreconditionError",
    "SearchBudget", "ShiftLog", "StepCapExceeded", "StructureError", "Verdict", "alpha_v_all",
    "check_coloring", "decide_choosable", "decide_equitable", "decide_list", "degree_stats",
    "equitable_color_hs", "equitable_color_ore", "fix_nearly_equitable", "forest_equitable_color",
    "forest_feasible", "generate", "graph_from_dimacs", "graph_to_dimacs", "is_equitable",
    "m0_exhaustive", "m0_formula", "mod_star", "pad_to_multiple", "star_greedy_list_color",
]
