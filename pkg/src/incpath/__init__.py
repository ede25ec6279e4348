"""Increasing paths under vertex and edge labelings of finite graphs,
hypergraphs and digraphs: cores, adversarial labelings, exact searchers and
generated families."""

from .core import (ArtifactError, BudgetExhausted, Digraph, DomainError, Hypergraph,
                   IncreasingWitness, Labeling, Ordering, ParameterError, Partition, Refusal,
                   WitnessKind, check_witness, graph, restrict_labeling, validate,
                   validate_digraph)

__version__ = "0.1.0"

__all__ = [
    "ArtifactError", "BudgetExhausted", "Digraph", "DomainError", "Hypergraph", "IncreasingWitness",
    "Labeling", "Ordering", "ParameterError", "Partition", "Refusal", "WitnessKind", "check_witness",
    "graph", "restrict_labeling", "validate", "validate_digraph",
]
