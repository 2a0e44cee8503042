"""Canonical forms and isomorphism-free enumeration of small connected graphs."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .graph import Graph, GraphError, _bits, to_graph6

MAX_ENUM_N = 7


def refine(G: Graph) -> list[list[int]]:
    """Equitable ordered partition of the 0-based vertices, starting from degrees.

    Cells are ordered by an isomorphism-invariant key, so any permutation that
    respects the cell order is a candidate canonical labeling.
    """
    color = [row.bit_count() for row in G.adj]
    while True:
        sig = [
            (color[v], tuple(sorted(color[w] for w in _bits(G.adj[v]))))
            for v in range(G.n)
        ]
        keys = sorted(set(sig))
        new = [keys.index(s) for s in sig]
        if len(keys) == len(set(color)):
            break
        color = new
    cells: dict[int, list[int]] = {}
    for v in range(G.n):
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _code(G: Graph, order: tuple[int, ...]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = G.adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_form(G: Graph) -> Graph:
    """Relabeling of G that is identical for all graphs isomorphic to G."""
    cells = refine(G)
    best_code, best_order = -1, None
    for parts in product(*(permutations(c) for c in cells)):
        order = tuple(v for part in parts for v in part)
        code = _code(G, order)
        if code > best_code:
            best_code, best_order = code, order
    pos = {v: k for k, v in enumerate(best_order)}
    return Graph.from_edges(G.n, [(pos[u - 1] + 1, pos[v - 1] + 1) for u, v in G.edges()])


def canonical_key(G: Graph) -> bytes:
    return to_graph6(canonical_form(G))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs on n vertices.

    Graphs on n vertices arise from those on n - 1 by adding a vertex joined to a
    nonempty subset: every connected graph has a vertex whose removal keeps it
    connected.  Output order is by edge count, then graph6 string.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}")
    yield from _level(n)


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    found: dict[bytes, Graph] = {}
    for H in _level(n - 1):
        for subset in range(1, 1 << (n - 1)):
            edges = H.edges() + [(v + 1, n) for v in _bits(subset)]
            C = canonical_form(Graph.from_edges(n, edges))
            found.setdefault(to_graph6(C), C)
    return tuple(sorted(found.values(), key=lambda g: (g.num_edges, to_graph6(g))))


def enumerate_upto(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_connected(n)


def count_connected(n: int) -> int:
    return sum(1 for _ in enumerate_connected(n))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.num_edges == H.num_edges and canonical_key(G) == canonical_key(H)

