"""Labeled simple graphs on vertices 1..n stored as bitmask adjacency rows.

Bit ``v - 1`` of ``adj[u - 1]`` is set iff ``{u, v}`` is an edge.  Graphs are
immutable; every constructor below returns a fresh ``Graph``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_N = 32


class GraphError(ValueError):
    """Invalid graph input or violated operation precondition."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the 0-based indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    # display names only; equality and hashing ignore them
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_N}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full or row >> u & 1:
                raise GraphError(f"bad adjacency row for vertex {u + 1}")
            for v in _bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError("adjacency is not symmetric")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label count does not match n")

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge {{{u},{v}}} out of range 1..{n}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
        return cls(n, tuple(rows), labels)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # -- basic queries ------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def label(self, v: int) -> str:
        return self.labels[v - 1] if self.labels else str(v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> list[int]:
        return [w + 1 for w in _bits(self.adj[v - 1])]

    def degree(self, v: int) -> int:
        return self.adj[v - 1].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j``, sorted."""
        out = []
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                out.append((u + 1, u + v + 2))
        return out

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_clique(self, mask: int) -> bool:
        for u in _bits(mask):
            if (mask & ~(1 << u)) & ~self.adj[u]:
                return False
        return True

    def mask_of(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            if not 1 <= v <= self.n:
                raise GraphError(f"vertex {v} out of range 1..{self.n}")
            mask |= 1 << (v - 1)
        return mask

    def edge_list_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def mask_to_vertices(mask: int) -> list[int]:
    return [b + 1 for b in _bits(mask)]


# -- text formats ------------------------------------------------------


def parse_edges(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines (1-indexed, ``#`` comments).

    Without ``n`` the vertex count is the largest label seen (at least 1).
    Duplicate edges collapse; loops and out-of-range labels raise.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer label in {raw!r}") from None
        if u == v:
            raise GraphError(f"line {lineno}: loop at vertex {u}")
        edges.append((u, v))
    if n is None:
        n = max([max(e) for e in edges], default=1)
    for u, v in edges:
        if min(u, v) < 1 or max(u, v) > n:
            raise GraphError(f"edge {{{u},{v}}} out of range 1..{n}")
    return Graph.from_edges(n, edges)


def to_graph6(G: Graph) -> bytes:
    if G.n > 62:
        raise GraphError("graph6 short form only")
    bits = []
    for j in range(1, G.n):
        for i in range(j):
            bits.append(G.adj[i] >> j & 1)
    bits += [0] * (-len(bits) % 6)
    out = [G.n + 63]
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = chunk << 1 | b
        out.append(chunk + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data or not 63 <= data[0] <= 126:
        raise GraphError("malformed graph6 header")
    n = data[0] - 63
    if n > MAX_N:
        raise GraphError(f"graph6 vertex count {n} exceeds {MAX_N}")
    nbits = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (nbits + 5) // 6:
        raise GraphError("graph6 body length does not match vertex count")
    bits = []
    for ch in body:
        if not 63 <= ch <= 126:
            raise GraphError("graph6 byte out of range")
        val = ch - 63
        bits.extend(val >> s & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError("graph6 padding bits must be zero")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# -- constructions -------------------------------------------------------


def induced_subgraph(G: Graph, X: int | Iterable[int]) -> Graph:
    """``G[X]`` relabeled 1..|X| in increasing order of the original labels.

    ``X`` is a vertex mask or an iterable of 1-based vertices.  Display labels
    of the kept vertices carry over.
    """
    mask = X if isinstance(X, int) else G.mask_of(X)
    if mask & ~G.full_mask:
        raise GraphError("vertex set not contained in V(G)")
    keep = list(_bits(mask))
    if not keep:
        raise GraphError("induced subgraph on the empty set")
    pos = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for w in _bits(G.adj[old] & mask):
            row |= 1 << pos[w]
        rows.append(row)
    labels = tuple(G.label(old + 1) for old in keep)
    return Graph(len(keep), tuple(rows), labels)


def delete_vertex(G: Graph, v: int) -> Graph:
    if not 1 <= v <= G.n:
        raise GraphError(f"vertex {v} out of range 1..{G.n}")
    if G.n == 1:
        raise GraphError("cannot delete the only vertex")
    return induced_subgraph(G, G.full_mask & ~(1 << (v - 1)))


def clique_close_at(G: Graph, v: int) -> Graph:
    """The graph ``G_v``: ``G`` with the neighbourhood of ``v`` made complete."""
    if not 1 <= v <= G.n:
        raise GraphError(f"vertex {v} out of range 1..{G.n}")
    nb = G.adj[v - 1]
    rows = list(G.adj)
    for u in _bits(nb):
        rows[u] |= nb & ~(1 << u)
    return Graph(G.n, tuple(rows), G.labels)


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    if G1.n + G2.n > MAX_N:
        raise GraphError(f"union would have more than {MAX_N} vertices")
    rows = list(G1.adj) + [row << G1.n for row in G2.adj]
    return Graph(G1.n + G2.n, tuple(rows))


def _require_pendant(G: Graph, f: int, name: str) -> int:
    if not 1 <= f <= G.n:
        raise GraphError(f"{name}: vertex {f} out of range")
    if G.degree(f) != 1:
        raise GraphError(f"{name}: vertex {f} is not pendant (degree {G.degree(f)})")
    return G.neighbors(f)[0]


def _glue(G1: Graph, G2: Graph, a: int, b: int, drop1: int = 0, drop2: int = 0) -> Graph:
    """Identify vertex ``a`` of G1 with ``b`` of G2, deleting ``drop*`` first.

    G1 keeps its labels (minus the dropped vertex); G2's vertices follow in order
    with ``b`` mapped onto ``a``.
    """
    keep1 = [v for v in G1.vertices() if v != drop1]
    keep2 = [v for v in G2.vertices() if v not in (drop2, b)]
    new1 = {v: i + 1 for i, v in enumerate(keep1)}
    new2 = {v: len(keep1) + i + 1 for i, v in enumerate(keep2)}
    new2[b] = new1[a]
    n = len(keep1) + len(keep2)
    if n > MAX_N:
        raise GraphError(f"glued graph would have more than {MAX_N} vertices")
    edges = [(new1[u], new1[v]) for u, v in G1.edges() if drop1 not in (u, v)]
    edges += [(new2[u], new2[v]) for u, v in G2.edges() if drop2 not in (u, v)]
    return Graph.from_edges(n, edges)


def star_glue(G1: Graph, f1: int, G2: Graph, f2: int) -> Graph:
    """``(G1, f1) * (G2, f2)``: identify the pendant vertices ``f1`` and ``f2``."""
    _require_pendant(G1, f1, "star_glue G1")
    _require_pendant(G2, f2, "star_glue G2")
    return _glue(G1, G2, f1, f2)


def circ_glue(G1: Graph, f1: int, G2: Graph, f2: int) -> Graph:
    """``(G1, f1) o (G2, f2)``: drop the pendants and identify their neighbours."""
    v1 = _require_pendant(G1, f1, "circ_glue G1")
    v2 = _require_pendant(G2, f2, "circ_glue G2")
    if G1.degree(v1) < 2 or G2.degree(v2) < 2:
        raise GraphError("circ_glue: neighbour of a pendant must have degree >= 2")
    return _glue(G1, G2, v1, v2, drop1=f1, drop2=f2)


def connected_components(G: Graph) -> list[int]:
    """Component vertex masks, ordered by smallest vertex."""
    comps = []
    seen = 0
    for start in range(G.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= G.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def num_components(G: Graph) -> int:
    return len(connected_components(G))


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(connected_components(G)) == 1


def relabel(G: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v - 1]`` (a permutation of 1..n)."""
    return Graph.from_edges(G.n, [(perm[u - 1], perm[v - 1]) for u, v in G.edges()])
