"""Finding k-th powers of paths and cycles, exactly or constructively."""

from .chromatic import chromatic_number, power_cycle_chromatic, power_cycle_graph
from .hamilton import check_spread, dirac_hamilton_cycle, is_hamilton_cycle, path_cycle_avoiding_bad
from .search import (
    find_power_cycle,
    find_power_path,
    longest_power_path_exact,
    naive_longest_power_path,
    twin_classes,
)
from .stepup import choose_insertions, power_step_up
from .witness import PowerCycleWitness, PowerPathWitness, is_power_cycle, is_power_path

__all__ = [
    "PowerCycleWitness",
    "PowerPathWitness",
    "check_spread",
    "choose_insertions",
    "chromatic_number",
    "dirac_hamilton_cycle",
    "find_power_cycle",
    "find_power_path",
    "is_hamilton_cycle",
    "is_power_cycle",
    "is_power_path",
    "longest_power_path_exact",
    "naive_longest_power_path",
    "path_cycle_avoiding_bad",
    "power_cycle_chromatic",
    "power_cycle_graph",
    "power_step_up",
    "twin_classes",
]
