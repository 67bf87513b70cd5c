"""Total domination game engine with an exact solver and a bound verifier."""

from .enumeration import canonical_form, connected_graphs, connected_graphs_up_to
from .game import Color, GameState, Pattern, Phase, Player, classify_phase2, new_game, phase_of
from .graph import (
    Graph,
    GraphParseError,
    check_condition_a,
    check_condition_b,
    component_profile,
    cycle_graph,
    from_graph6,
    generate,
    parse_family,
    parse_graph,
    path_graph,
    random_graph,
    random_tree_with_attachments,
    render_graph,
    spider_graph,
    star_graph,
    to_graph6,
)
from .overlay import OverlayState, detect_problematic, process_move, targeted_supports
from .solver import Solver, best_move, solve, solve_naive
from .strategies import make_strategy, replay, run_game
from .verify import verify_corpus, verify_graph

__version__ = "0.1.0"

__all__ = [
    "Color", "GameState", "Graph", "GraphParseError", "OverlayState", "Pattern", "Phase",
    "Player", "Solver", "best_move", "canonical_form", "check_condition_a", "check_condition_b",
    "classify_phase2", "component_profile", "connected_graphs", "connected_graphs_up_to",
    "cycle_graph", "detect_problematic", "from_graph6", "generate", "make_strategy", "new_game",
    "parse_family", "parse_graph", "path_graph", "phase_of", "process_move", "random_graph",
    "random_tree_with_attachments", "render_graph", "replay", "run_game", "solve", "solve_naive",
    "spider_graph", "star_graph", "targeted_supports", "to_graph6", "verify_corpus", "verify_graph",
]
