"""Ground-truth solvers and classical polynomial subroutines.

brute_force_min_kcut / brute_force_r_island are the independent oracles every
other stage is tested against.  stoer_wagner_mincut and sv_2approx are the
classical subroutines the pipeline itself uses.
"""
from __future__ import annotations

from itertools import combinations
from typing import Optional

import networkx as nx

from .graph import (
    Graph,
    GraphError,
    KCut,
    VertexPartition,
    connected_components,
    induced_subgraph,
)

BRUTE_FORCE_KCUT_LIMIT = 14
BRUTE_FORCE_ISLAND_LIMIT = 18


class SizeLimitError(ValueError):
    """Input too large for exhaustive enumeration."""


def _zero_value_kcut(g: Graph, k: int, comps: VertexPartition) -> KCut:
    """Lexicographically smallest 0-value k-cut when g has >= k components."""
    c = len(comps.blocks)
    assert c >= k
    comp_index = comps.to_block_index(g.n)
    # Components in order of first vertex; greedily give each the smallest
    # feasible label so the canonical label string is lex-minimal.
    comp_label: dict = {}
    used = 0
    order = sorted(range(c), key=lambda i: comps.blocks[i][0])
    for pos, ci in enumerate(order):
        remaining_after = c - pos - 1
        label = None
        for lab in range(min(used + 1, k)):
            if lab < used:
                ok = remaining_after >= k - used
            else:
                ok = remaining_after >= k - used - 1
            if ok:
                label = lab
                break
        assert label is not None
        comp_label[ci] = label
        if label == used:
            used += 1
    labels = tuple(comp_label[comp_index[v]] for v in range(g.n))
    return KCut.from_labels(g, labels, k)


def _min_kcut_search(g: Graph, k: int, prune: bool = True,
                     incumbent: Optional[KCut] = None) -> KCut:
    """Restricted-growth-string enumeration of k-part partitions.

    Vertices are assigned in id order; the first partition found at the
    minimum value has the lex-smallest canonical label string.  With
    ``prune`` the search skips branches whose partial crossing weight
    already matches or exceeds the incumbent (identical results).  An
    ``incumbent`` cut seeds the bound; the returned value is still exact but
    ties at the incumbent's value keep the incumbent's labels.
    """
    n = g.n
    earlier: list = [[] for _ in range(n)]
    for u, v, w in g.edges:   # edges are stored with u < v
        earlier[v].append((u, w))
    best_val = incumbent.value if incumbent is not None else None
    best_labels = incumbent.labels if incumbent is not None else None
    labels = [0] * n

    def rec(v: int, used: int, partial: int) -> None:
        nonlocal best_val, best_labels
        if prune and best_val is not None and partial >= best_val:
            return
        if v == n:
            if used == k and (best_val is None or partial < best_val):
                best_val = partial
                best_labels = tuple(labels)
            return
        if used + (n - v) < k:
            return
        for lab in range(min(used, k - 1) + 1):
            add = 0
            for u, w in earlier[v]:
                if labels[u] != lab:
                    add += w
            labels[v] = lab
            rec(v + 1, used + (1 if lab == used else 0), partial + add)
        labels[v] = 0

    rec(0, 0, 0)
    if best_labels is None:
        raise GraphError("no k-part partition exists")
    return KCut.from_labels(g, best_labels, k)


def brute_force_min_kcut(g: Graph, k: int, n_limit: int = BRUTE_FORCE_KCUT_LIMIT,
                         prune: bool = True) -> KCut:
    """Minimum k-cut by exhaustive set-partition enumeration.

    Ties break to the lexicographically smallest canonical label string.
    """
    if not 2 <= k <= g.n:
        raise ValueError(f"k must be in 2..n, got k={k} with n={g.n}")
    if g.n > n_limit:
        raise SizeLimitError(f"n={g.n} exceeds brute-force limit {n_limit}")
    comps = connected_components(g)
    if len(comps.blocks) >= k:
        return _zero_value_kcut(g, k, comps)
    return _min_kcut_search(g, k, prune=prune)


def branch_and_bound_min_kcut(g: Graph, k: int) -> KCut:
    """Exact k-cut without a size guard: pruned assignment search.

    Branches on assigning the lowest-id unassigned vertex to an existing or
    new part, pruning with the current crossing weight; the greedy-splitting
    2-approximation seeds the bound so pruning bites from the first node.
    """
    if not 2 <= k <= g.n:
        raise ValueError(f"k must be in 2..n, got k={k} with n={g.n}")
    comps = connected_components(g)
    if len(comps.blocks) >= k:
        return _zero_value_kcut(g, k, comps)
    incumbent = sv_2approx(g, k)
    # Max-adjacency ordering: each vertex is placed after as much of its
    # neighborhood weight as possible, so a label deviating from the already
    # assigned neighbors is charged immediately and pruning bites early.
    order = _max_adjacency_order(g)
    pos = {v: i for i, v in enumerate(order)}
    perm_edges = [(pos[u], pos[v], w) for u, v, w in g.edges]
    gp = Graph.from_edges(g.n, perm_edges)
    inc_p = KCut.from_labels(gp, tuple(incumbent.labels[order[i]]
                                       for i in range(g.n)), k)
    found = _min_kcut_search(gp, k, prune=True, incumbent=inc_p)
    labels = tuple(found.labels[pos[v]] for v in range(g.n))
    return KCut.from_labels(g, labels, k)


def _max_adjacency_order(g: Graph) -> list:
    """Greedy ordering: start at vertex 0, repeatedly append the unplaced
    vertex with maximum edge weight into the placed set (ties to lowest id)."""
    weight_to_placed = [0] * g.n
    placed = [False] * g.n
    order = []
    adj = g.adjacency
    for _ in range(g.n):
        best = None
        for v in range(g.n):
            if placed[v]:
                continue
            key = (-weight_to_placed[v], v)
            if best is None or key < best:
                best = key
        v = best[1]
        placed[v] = True
        order.append(v)
        for u, w in adj[v]:
            if not placed[u]:
                weight_to_placed[u] += w
    return order


def brute_force_r_island(g: Graph, r: int,
                         n_limit: int = BRUTE_FORCE_ISLAND_LIMIT) -> tuple:
    """Exhaustive r-island oracle: minimum over r-subsets of the total weight
    of edges with at least one endpoint in the subset.

    Returns (value, island tuple); ties take the lex-smallest subset.
    """
    if not 1 <= r <= g.n - 1:
        raise ValueError(f"r must be in 1..n-1, got r={r} with n={g.n}")
    if g.n > n_limit:
        raise SizeLimitError(f"n={g.n} exceeds brute-force limit {n_limit}")
    deg = g.degrees
    best = None
    best_set = None
    for subset in combinations(range(g.n), r):
        sset = set(subset)
        internal = sum(w for u, v, w in g.edges if u in sset and v in sset)
        cost = sum(deg[v] for v in subset) - internal
        if best is None or cost < best:
            best = cost
            best_set = subset
    return best, best_set


def stoer_wagner_mincut(g: Graph) -> tuple:
    """Exact global minimum weighted 2-cut; (0, component split) if disconnected."""
    if g.n < 2:
        raise ValueError("stoer_wagner_mincut needs n >= 2")
    comps = connected_components(g)
    if len(comps.blocks) > 1:
        side = set(comps.blocks[0])
        labels = tuple(0 if v in side else 1 for v in range(g.n))
        return 0, KCut.from_labels(g, labels, 2)
    if g.n == 2:
        return g.total_weight, KCut.from_labels(g, (0, 1), 2)
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    for u, v, w in g.edges:
        G.add_edge(u, v, weight=w)
    value, (side_a, side_b) = nx.stoer_wagner(G)
    side = set(side_a) if 0 in side_a else set(side_b)
    labels = tuple(0 if v in side else 1 for v in range(g.n))
    cut = KCut.from_labels(g, labels, 2)
    assert cut.value == value
    return int(value), cut


def sv_2approx(g: Graph, k: int) -> KCut:
    """Greedy splitting 2-approximation: repeatedly apply the globally
    cheapest minimum 2-cut of any current part's induced subgraph."""
    if not 2 <= k <= g.n:
        raise ValueError(f"k must be in 2..n, got k={k} with n={g.n}")
    parts: list = [tuple(range(g.n))]
    while len(parts) < k:
        best = None  # (cost, part min vertex, part index, side vertex set)
        for idx, part in enumerate(parts):
            if len(part) < 2:
                continue
            sub, back = induced_subgraph(g, part)
            cost, cut2 = stoer_wagner_mincut(sub)
            side = frozenset(back[v] for v in range(sub.n) if cut2.labels[v] == 0)
            key = (cost, part[0])
            if best is None or key < best[0]:
                best = (key, idx, side)
        assert best is not None
        _, idx, side = best
        part = parts.pop(idx)
        parts.append(tuple(v for v in part if v in side))
        parts.append(tuple(v for v in part if v not in side))
    partition = VertexPartition.from_blocks(parts, g.n)
    labels = partition.to_block_index(g.n)
    return KCut.from_labels(g, labels, k)
