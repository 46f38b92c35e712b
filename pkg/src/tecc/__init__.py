"""Certifying 3-edge-connectivity.

One DFS pass over an undirected multigraph yields the 3-edge-connected
components, a Mader construction sequence per non-trivial component (positive
certificate), all bridges, and a cactus of cut-pairs per 2-edge-connected
component (negative certificate).  An independent verifier and brute-force
oracles authenticate every output.
"""

from .multigraph import (
    Multigraph,
    NormalizationLog,
    ParseError,
    connected_components,
    normalized,
    parse_graph,
    serialize_graph,
)

__all__ = [
    "Multigraph",
    "NormalizationLog",
    "ParseError",
    "connected_components",
    "normalized",
    "parse_graph",
    "serialize_graph",
    "decompose",
    "ThreeEccReport",
    "verify_report",
    "verify_mader_sequence",
    "verify_cactus",
    "engine_backend",
]

__version__ = "0.1.0"


def engine_backend() -> str:
    """'compiled' when the engine loaded as a built extension, else 'pure'."""
    from . import _core

    return "compiled" if _core.__file__.endswith((".so", ".pyd")) else "pure"


def __getattr__(name):
    # Deferred so that importing tecc never pays for the whole stack.
    if name in ("decompose", "ThreeEccReport"):
        from . import decomposer

        return getattr(decomposer, name)
    if name in ("verify_report", "verify_mader_sequence", "verify_cactus"):
        from . import verifier

        return getattr(verifier, name)
    raise AttributeError(name)
