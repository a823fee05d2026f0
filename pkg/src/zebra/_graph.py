"""Small multigraph algorithms on integer-labelled vertices.

Vertices are ``0..n-1``; edges are ``(u, v, color)`` triples with ``u != v``.
Parallel edges are allowed and every edge is an independent unit.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Hashable, Sequence

Edge = tuple[int, int, Hashable]


def incidence(n: int, edges: Sequence[Edge]) -> list[list[tuple[int, int]]]:
    """Per-vertex list of ``(edge_index, other_endpoint)``."""
    inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for k, (u, v, _) in enumerate(edges):
        inc[u].append((k, v))
        inc[v].append((k, u))
    return inc


def components(n: int, edges: Sequence[Edge]) -> int:
    inc = incidence(n, edges)
    seen: set[int] = set()
    count = 0
    for start in range(n):
        if start in seen:
            continue
        count += 1
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for _, w in inc[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def is_connected(n: int, edges: Sequence[Edge]) -> bool:
    return components(n, edges) <= 1


def max_edge_disjoint_paths(n: int, edges: Sequence[Edge], source: int, sink: int) -> int:
    """Maximum number of edge-disjoint source-sink paths (unit-capacity max flow).

    Each undirected edge carries at most one unit in either direction.
    ``flow[k]`` is +1 when edge ``k`` is used from its first to its second
    endpoint and -1 for the reverse.
    """
    if source == sink:
        raise ValueError("source and sink must differ")
    inc = incidence(n, edges)
    flow = [0] * len(edges)
    total = 0
    while True:
        parent: dict[int, tuple[int, int]] = {source: (-1, -1)}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for k, w in inc[u]:
                if w in parent:
                    continue
                forward = edges[k][0] == u
                if (forward and flow[k] < 1) or (not forward and flow[k] > -1):
                    parent[w] = (u, k)
                    queue.append(w)
        if sink not in parent:
            return total
        w = sink
        while w != source:
            u, k = parent[w]
            flow[k] += 1 if edges[k][0] == u else -1
            w = u
        total += 1


def _refine(colors: list[int], adj: list[list[tuple[int, Hashable]]]) -> list[int]:
    """Colour refinement; returns ranks so the result is labelling-invariant."""
    n_classes = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], ec) for w, ec in adj[v])))
            for v in range(len(colors))
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == n_classes:
            return new
        colors, n_classes = new, len(rank)


def canonical_form(
    n: int, edges: Sequence[Edge], vertex_colors: Sequence[Hashable]
) -> tuple[tuple, list[int]]:
    """Canonical certificate and labelling of a vertex- and edge-coloured multigraph.

    Individualisation-refinement without automorphism pruning, so the cost
    grows with the symmetry of the graph; callers cap the size. Two graphs
    are isomorphic iff their certificates are equal. ``labelling[v]`` is the
    canonical position of vertex ``v``.
    """
    adj: list[list[tuple[int, Hashable]]] = [[] for _ in range(n)]
    for u, v, ec in edges:
        adj[u].append((v, ec))
        adj[v].append((u, ec))
    palette = {c: i for i, c in enumerate(sorted(set(vertex_colors)))}
    start = [palette[c] for c in vertex_colors]

    best: tuple | None = None
    best_labels: list[int] = list(range(n))

    def leaf_certificate(labels: list[int]) -> tuple:
        order = [0] * n
        for v, lab in enumerate(labels):
            order[lab] = v
        vc = tuple(vertex_colors[v] for v in order)
        es = tuple(
            sorted((min(labels[u], labels[v]), max(labels[u], labels[v]), ec) for u, v, ec in edges)
        )
        return (n, vc, es)

    def search(colors: list[int]) -> None:
        nonlocal best, best_labels
        colors = _refine(colors, adj)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        split = [c for c, k in counts.items() if k > 1]
        if not split:
            cert = leaf_certificate(colors)
            if best is None or cert < best:
                best, best_labels = cert, colors
            return
        target = min(split)
        for v in range(n):
            if colors[v] != target:
                continue
            search([2 * c + (1 if c == target and x != v else 0) for x, c in enumerate(colors)])

    if n == 0:
        return (0, (), ()), []
    search(start)
    assert best is not None
    return best, best_labels
