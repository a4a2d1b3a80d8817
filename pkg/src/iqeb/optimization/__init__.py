from .ansatz import Ansatz, AnsatzObjective, energy, gradient, prepare_state
from .bfgs import OptimizeResult, minimize, minimize_function
from .screening import group_gradients, hamiltonian_action, pool_gradients, screen_stats, top_candidates

__all__ = [
    "Ansatz",
    "AnsatzObjective",
    "prepare_state",
    "energy",
    "gradient",
    "OptimizeResult",
    "minimize",
    "minimize_function",
    "pool_gradients",
    "hamiltonian_action",
    "group_gradients",
    "top_candidates",
    "screen_stats",
]
