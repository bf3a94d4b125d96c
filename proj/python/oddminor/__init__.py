"""Python interface to the odd-minor workbench.

The heavy lifting lives in the C++ extension ``oddminor._core``; certificates
and reports cross the boundary as JSON strings, which this wrapper decodes.
"""

import json

from oddminor import _core
from oddminor._core import ContradictionError, ParseError, PreconditionError

__all__ = [
    "ContradictionError",
    "ParseError",
    "PreconditionError",
    "complement_graph6",
    "encode_graph6",
    "find_bipartite",
    "find_half_order",
    "invariants",
    "oracle",
    "random_alpha2_graph6",
    "sweep",
    "verify",
]


def invariants(graph, format="graph6"):
    """n, alpha, chi, omega, kappa of a graph as a dict."""
    return json.loads(_core.invariants(graph, format))


def find_bipartite(graph, ell, format="graph6"):
    """Verified special odd K_{l, chi-l} minor certificate (dict)."""
    return json.loads(_core.find_bipartite(graph, ell, format))


def find_half_order(graph, ell, format="graph6"):
    """Verified special odd K^l_{l, ceil(n/2)-l} minor certificate (dict)."""
    return json.loads(_core.find_half_order(graph, ell, format))


def verify(graph, certificate, special=False, format="graph6"):
    """Check a certificate (dict or JSON string); returns {valid, violations}."""
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate)
    return json.loads(_core.verify(graph, certificate, special, format))


def oracle(graph, kind, left, right=0, special=False, format="graph6"):
    """Brute-force odd-model search (n <= 9); returns {found, ...}."""
    return json.loads(_core.oracle(graph, kind, left, right, special, format))


def sweep(n, mode="exhaustive", count=100, seed=1, jobs=1, oracle_check=False,
          conjecture17=False, stream_text=""):
    """Run the constructions over many graphs; returns the report dict."""
    return json.loads(
        _core.sweep(n, mode, count, seed, jobs, oracle_check, conjecture17, stream_text)
    )


encode_graph6 = _core.encode_graph6
complement_graph6 = _core.complement_graph6
random_alpha2_graph6 = _core.random_alpha2_graph6
