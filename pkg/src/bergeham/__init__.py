"""Exact search and verification for Berge hamiltonicity in uniform hypergraphs."""

from .hypercore import (
    BergeCertificate,
    CertificateKind,
    Hypergraph,
    HypergraphError,
    ValidationResult,
    degree,
    min_degree,
    new_hypergraph,
    validate_certificate,
)
from .search import (
    Decision,
    SearchOutcome,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    is_hamiltonian_connected,
    is_one_extendable,
    longest_path_between,
)

__version__ = "0.1.0"
