"""Plain undirected graphs used by the rank kernel and the counting checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from .topology import Edge, Polyhedron, edge_key


@dataclass(frozen=True)
class Graph:
    """An immutable vertex list plus normalized edge set."""
    vertices: Tuple[int, ...]
    edges: FrozenSet[Edge]

    @classmethod
    def build(cls, vertices: Iterable[int], edges: Iterable[Tuple[int, int]]) -> "Graph":
        vs = tuple(sorted(set(vertices)))
        vset = set(vs)
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u},{v}) names unknown vertex")
            es.add(edge_key(u, v))
        return cls(vs, frozenset(es))

    @classmethod
    def from_polyhedron(cls, p: Polyhedron) -> "Graph":
        """Framework graph: surface edges plus block braces."""
        return cls.build(p.vertices, p.framework_edges())

    def adjacency(self) -> Dict[int, Set[int]]:
        adj: Dict[int, Set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.vertices, self.edges | {edge_key(u, v)})

    def with_edges(self, extra: Iterable[Tuple[int, int]]) -> "Graph":
        return Graph(self.vertices,
                     self.edges | {edge_key(u, v) for u, v in extra})

    def without_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.vertices, self.edges - {edge_key(u, v)})

    def subgraph(self, keep: Set[int]) -> "Graph":
        return Graph(tuple(sorted(set(keep))),
                     frozenset(e for e in self.edges if set(e) <= keep))

    def __len__(self) -> int:
        return len(self.vertices)


def double_banana() -> Graph:
    """Two 5-vertex bipyramids glued along two non-adjacent vertices.

    The classic tight-but-flexible graph: |E| = 3|V|-6 with every subset
    sparse, yet generically dependent.
    """
    u, v = 1, 2
    verts = [u, v, 3, 4, 5, 6, 7, 8]
    edges = []
    for lobe in ((3, 4, 5), (6, 7, 8)):
        for x in lobe:
            edges.append((u, x))
            edges.append((v, x))
        a, b, c = lobe
        edges.extend([(a, b), (b, c), (a, c)])
    return Graph.build(verts, edges)


def icosahedron() -> Graph:
    faces = [(0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
             (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
             (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
             (5, 4, 9), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1)]
    edges = set()
    for a, b, c in faces:
        edges.update({edge_key(a, b), edge_key(b, c), edge_key(a, c)})
    return Graph.build(range(12), edges)
