"""Combinatorial embeddings: rotation systems and the faces they induce.

An embedding is the clockwise neighbor order at every vertex.  Faces are
traced with the successor rule: after arriving along the directed edge
(u, v), leave along (v, w) where w follows u in the rotation at v.  Each
directed edge lies on exactly one face walk, so sum of face lengths is 2m,
and a genus-0 rotation system of a connected graph satisfies n - m + f = 2.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


class EmbeddingError(ValueError):
    """Raised for rotation systems that are not consistent."""


@dataclass(frozen=True)
class Embedding:
    """A graph together with a rotation system and its traced faces."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rotation(rotation) -> "Embedding":
        """Validate a rotation system and trace its faces.

        rotation[v] lists the neighbors of v in clockwise order.  The lists
        must be symmetric (u appears at v iff v appears at u), without
        repeats or self-entries.
        """
        rotation = tuple(tuple(r) for r in rotation)
        n = len(rotation)
        masks = [0] * n
        for v, order in enumerate(rotation):
            seen = 0
            for u in order:
                if not 0 <= u < n:
                    raise EmbeddingError(f"vertex {u} out of range at rotation of {v}")
                if u == v:
                    raise EmbeddingError(f"self-entry in rotation of {v}")
                if seen >> u & 1:
                    raise EmbeddingError(f"repeated neighbor {u} in rotation of {v}")
                seen |= 1 << u
            masks[v] = seen
        for v in range(n):
            for u in rotation[v]:
                if not masks[u] >> v & 1:
                    raise EmbeddingError(f"rotation not symmetric on edge ({v}, {u})")
        graph = Graph(n, tuple(masks))
        faces = _trace_faces(rotation)
        return Embedding(graph, rotation, faces)

    def face_lengths(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.faces)

    def euler_characteristic(self) -> int:
        return self.graph.n - self.graph.m + len(self.faces)

    def is_spherical(self) -> bool:
        """True when this is a genus-0 embedding of a connected graph."""
        return self.graph.is_connected() and self.euler_characteristic() == 2


def _trace_faces(rotation) -> tuple[tuple[int, ...], ...]:
    """Orbit decomposition of directed edges under the face successor rule."""
    succ = {}
    for v, order in enumerate(rotation):
        d = len(order)
        for i, u in enumerate(order):
            # after (u, v) comes (v, w): w follows u clockwise at v
            succ[(u, v)] = (v, order[(i + 1) % d])
    faces = []
    unused = set(succ)
    while unused:
        start = min(unused)  # deterministic face order
        walk = []
        cur = start
        while True:
            walk.append(cur[0])
            unused.discard(cur)
            cur = succ[cur]
            if cur == start:
                break
        faces.append(tuple(walk))
    return tuple(faces)
