"""Construction sequences as explicit certificates.

The engine emits, per multi-vertex component, an ordered payload list: ear
labels plus (for components cut out by an edge pair) a leading tree path and
virtual edge that close the cut corridor.  This module expands the payloads
into concrete paths over vertex and edge ids.  The first paths form the
theta-subdivision seed; every later path is a single ear whose addition must
be one of the three Mader operations, which is exactly what the verifier
replays.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _core
from .dfs_ear import DfsAnnotations

K23_SEED = "K23_SEED"
MADER_PATH = "MADER_PATH"


@dataclass
class CertPath:
    """One path of a construction sequence.

    vertices is the walk (first and last may coincide for a cycle ear);
    edges pairs consecutive vertices and carries (edge id, is_virtual).
    """

    vertices: list[int]
    edges: list[tuple[int, bool]]
    tag: str

    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


def materialize_certificate(
    ann: DfsAnnotations,
    payloads: list[tuple[int, object]],
    seed_len: int,
) -> list[CertPath]:
    """Expand one component's payload list into tagged certificate paths."""
    paths: list[CertPath] = []
    for idx, (kind, data) in enumerate(payloads):
        tag = K23_SEED if idx < seed_len else MADER_PATH
        if kind == _core.CS_EAR:
            verts, edges = ann.materialize_ear(data)
            paths.append(
                CertPath(
                    vertices=verts,
                    edges=[(e, ann.is_virtual(e)) for e in edges],
                    tag=tag,
                )
            )
        elif kind == _core.CS_TREEPATH:
            verts = list(data)
            edges = [ann.parent_edge[verts[i]] for i in range(len(verts) - 1)]
            paths.append(
                CertPath(
                    vertices=verts,
                    edges=[(e, ann.is_virtual(e)) for e in edges],
                    tag=tag,
                )
            )
        elif kind == _core.CS_VIRTEDGE:
            u, udd, vid = data
            paths.append(CertPath(vertices=[u, udd], edges=[(vid, True)], tag=tag))
        else:
            raise ValueError(f"unknown payload kind {kind}")
    return paths
