"""Spectral lower bounds on (quantum) chromatic numbers.

The package computes five eigenvalue-based lower bounds that hold for the
quantum chromatic number, verifies quantum-coloring certificates (projector
families with completeness and edge orthogonality), lifts certificates to
block-diagonal pinching families, and solves small instances exactly.
"""

__version__ = "0.1.0"

from qchrom.bounds import BOUND_NAMES, BoundsReport, WeightMatrix, all_bounds, ceil_strict
from qchrom.certificates import (
    QuantumColoringCert,
    VerificationReport,
    cert_from_payload,
    cert_to_payload,
    extract_certificate,
    lift,
    lima_identity_residual,
    lima_identity_tolerance,
    read_certificate,
    verify_certificate,
    write_certificate,
)
from qchrom.errors import QChromError
from qchrom.exact import (
    ExactReport,
    chromatic_number,
    clique_number,
    proper_coloring_to_certificate,
)
from qchrom.graphs import (
    Graph,
    adjacency,
    encode_graph6,
    generate,
    make_graph,
    parse_edge_list,
    parse_graph6,
)
from qchrom.pinching import (
    ProjectorFamily,
    TwirlingUnitary,
    annihilates,
    annihilation_residual,
    pinch,
    random_family,
    twirl,
    twirling_unitary,
)
from qchrom.spectra import (
    LaplacianSpectra,
    SpectralSummary,
    eigenvalues,
    hermitian_eigenvalues,
    laplacian_spectra,
    summarize,
)

__all__ = [
    "__version__",
    "BOUND_NAMES",
    "BoundsReport",
    "ExactReport",
    "Graph",
    "LaplacianSpectra",
    "ProjectorFamily",
    "QChromError",
    "QuantumColoringCert",
    "SpectralSummary",
    "TwirlingUnitary",
    "VerificationReport",
    "WeightMatrix",
    "adjacency",
    "all_bounds",
    "annihilates",
    "annihilation_residual",
    "ceil_strict",
    "cert_from_payload",
    "cert_to_payload",
    "chromatic_number",
    "clique_number",
    "eigenvalues",
    "encode_graph6",
    "extract_certificate",
    "generate",
    "hermitian_eigenvalues",
    "laplacian_spectra",
    "lift",
    "lima_identity_residual",
    "lima_identity_tolerance",
    "make_graph",
    "parse_edge_list",
    "parse_graph6",
    "pinch",
    "proper_coloring_to_certificate",
    "random_family",
    "read_certificate",
    "summarize",
    "twirl",
    "twirling_unitary",
    "verify_certificate",
    "write_certificate",
]
