"""K_{k+1}-components, connected clique factors and the structure around them."""

from .configurations import ConfigurationWitness, detect_configuration
from .decompose import CliqueComponentDecomposition, Component, decompose
from .facts import FactReport, check_component_facts
from .factors import ConnectedCliqueFactor, ck_factor_exact, ck_value, clique_free_component_factor
from .greedy import (
    LayeredInstance,
    Partition,
    SecondPartition,
    greedy_factor_matching,
    greedy_factor_parallel,
    greedy_factor_two_stage,
    hall_extension_factor,
    layered_instance,
    verify_matching_hypotheses,
    verify_parallel_hypotheses,
)

__all__ = [
    "CliqueComponentDecomposition",
    "Component",
    "ConfigurationWitness",
    "ConnectedCliqueFactor",
    "FactReport",
    "LayeredInstance",
    "Partition",
    "SecondPartition",
    "check_component_facts",
    "ck_factor_exact",
    "ck_value",
    "clique_free_component_factor",
    "decompose",
    "detect_configuration",
    "greedy_factor_matching",
    "greedy_factor_parallel",
    "greedy_factor_two_stage",
    "hall_extension_factor",
    "layered_instance",
    "verify_matching_hypotheses",
    "verify_parallel_hypotheses",
]
