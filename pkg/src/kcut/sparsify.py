"""Forest-decomposition sparsification for simple graphs.

The union of s edge-disjoint maximal spanning forests keeps at most s*n
edges while preserving the exact crossing edge set of every k-cut of value
at most s.
"""
from __future__ import annotations

from .graph import Graph, GraphError


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True


def forest_decomposition(g: Graph, s: int) -> list:
    """s edge-disjoint forests; forest i is a maximal spanning forest of g
    minus forests 1..i-1.  Edges are scanned in sorted order each pass."""
    if not g.simple:
        raise GraphError("forest decomposition is defined for simple graphs")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    remaining = list(g.edges)
    forests = []
    for _ in range(s):
        uf = _UnionFind(g.n)
        taken = []
        rest = []
        for u, v, w in remaining:
            if uf.union(u, v):
                taken.append((u, v, w))
            else:
                rest.append((u, v, w))
        forests.append(tuple(taken))
        remaining = rest
    return forests


def ni_sparsify(g: Graph, s: int) -> Graph:
    """Union of the s forests: a subgraph with <= s*n edges in which every
    k-cut of g-value <= s keeps its exact crossing edge set."""
    forests = forest_decomposition(g, s)
    edges = sorted(e for f in forests for e in f)
    return Graph.from_edges(g.n, edges)
