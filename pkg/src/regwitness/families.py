"""Named graph families and the fixed example graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, circ_glue, induced_subgraph


@dataclass(frozen=True)
class CompositionSpec:
    """Block sizes ``[m_1, ..., m_t]`` of ``F_{m_1} o ... o F_{m_t}``."""

    ms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ms", tuple(int(m) for m in self.ms))
        if not self.ms:
            raise GraphError("composition needs at least one block")
        if any(m < 3 for m in self.ms):
            raise GraphError(f"composition blocks must be F_m with m >= 3, got {self.ms}")

    @property
    def t(self) -> int:
        return len(self.ms)


@dataclass(frozen=True)
class FanSpec:
    """A k-fan on ``K_n``.

    ``parts[i]`` lists the ordered vertices ``v_{i,1}, ..., v_{i,r_i}`` of W_i and
    ``sizes[i][j]`` the clique order attached along ``v_{i,1..j+1}``.
    """

    n: int
    parts: tuple[tuple[int, ...], ...]
    sizes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(tuple(p) for p in self.parts))
        object.__setattr__(self, "sizes", tuple(tuple(s) for s in self.sizes))
        if len(self.parts) != len(self.sizes):
            raise GraphError("fan: one size list per part required")
        seen = set()
        for part, sizes in zip(self.parts, self.sizes):
            if len(part) != len(sizes):
                raise GraphError("fan: size list length must match its part")
            for v in part:
                if not 1 <= v <= self.n:
                    raise GraphError(f"fan: vertex {v} not in K_{self.n}")
                if v in seen:
                    raise GraphError("fan: parts overlap")
                seen.add(v)
            for j, a in enumerate(sizes, 1):
                if a <= j:
                    raise GraphError(f"fan: branch K_{a} must have more than {j} vertices")


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def F(m: int) -> Graph:
    """``F_m`` on [2m] with edges {2i, 2j-1}, 1 <= i <= j <= m."""
    if m < 1:
        raise GraphError("F_m needs m >= 1")
    edges = [(2 * i, 2 * j - 1) for i in range(1, m + 1) for j in range(i, m + 1)]
    return Graph.from_edges(2 * m, edges)


def composition(spec: CompositionSpec | list[int]) -> Graph:
    """``F_{m_1} o ... o F_{m_t}``, glued at vertex 2m-1 of each block and 2 of the next.

    The free pendant of the last block always ends up as the highest label.
    """
    if not isinstance(spec, CompositionSpec):
        spec = CompositionSpec(tuple(spec))
    G = F(spec.ms[0])
    for m in spec.ms[1:]:
        G = circ_glue(G, G.n, F(m), 1)
    return G


def fan(spec: FanSpec) -> Graph:
    edges = [(i, j) for i in range(1, spec.n + 1) for j in range(i + 1, spec.n + 1)]
    n = spec.n
    for part, sizes in zip(spec.parts, spec.sizes):
        for j, a in enumerate(sizes, 1):
            clique = list(part[:j]) + list(range(n + 1, n + a - j + 1))
            n += a - j
            edges += [(u, w) for k, u in enumerate(clique) for w in clique[k + 1:]]
    return Graph.from_edges(n, edges)


def jewel() -> Graph:
    """Centre 1, branch vertices 2, 3, 4, each with two leaves (10 vertices)."""
    edges = [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 7), (3, 8), (4, 9), (4, 10)]
    return Graph.from_edges(10, edges)


def whiskered_cycle(k: int, whiskers) -> Graph:
    """``C_k`` on 1..k with ``whiskers[i]`` pendant edges at cycle vertex ``i + 1``.

    ``whiskers`` may also be a dict ``{vertex: count}``.
    """
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    if isinstance(whiskers, dict):
        counts = [0] * k
        for v, c in whiskers.items():
            if not 1 <= v <= k:
                raise GraphError(f"whisker vertex {v} not on C_{k}")
            counts[v - 1] = c
    else:
        counts = list(whiskers)
    if len(counts) != k or any(c < 0 for c in counts):
        raise GraphError("whisker counts must be k nonnegative integers")
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    n = k
    for v, c in enumerate(counts, 1):
        for _ in range(c):
            n += 1
            edges.append((v, n))
    return Graph.from_edges(n, edges)


_FIG1_EDGES = [
    (1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4), (1, 5), (5, 4),
    (4, 6), (6, 7), (6, 8), (6, 9), (6, 10), (10, 9), (9, 11), (11, 10),
]


def paper_fig1() -> Graph:
    return Graph.from_edges(11, _FIG1_EDGES)


def paper_G1() -> Graph:
    # vertices carry the names 1, 2, 3, 4, 6
    return Graph.from_edges(5, [(1, 2), (1, 4), (2, 3), (3, 4), (4, 5)], labels=(1, 2, 3, 4, 6))


def paper_G2() -> Graph:
    return induced_subgraph(paper_fig1(), [6, 7, 9, 10, 11])


def paper_fig3_H() -> Graph:
    # corners 1 (top), 2, 3; side midpoints 4 (1-2), 5 (1-3), 6 (2-3)
    edges = [(1, 4), (4, 2), (1, 5), (5, 3), (2, 6), (6, 3), (4, 5), (5, 6), (6, 4)]
    return Graph.from_edges(6, edges)


FIXTURES = {
    "paper_fig1": paper_fig1,
    "paper_G1": paper_G1,
    "paper_G2": paper_G2,
    "paper_fig3_H": paper_fig3_H,
    "jewel": jewel,
}


def fixture(name: str) -> Graph:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise GraphError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None


def generate(family: str, *params) -> Graph:
    """Dispatch by family name, e.g. ``generate("cycle", 5)`` or ``generate("F", 4)``."""
    table = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "star": star,
        "F": F,
        "composition": lambda *ms: composition(list(ms[0]) if len(ms) == 1 and not isinstance(ms[0], int) else list(ms)),
        "fan": fan,
        "jewel": jewel,
        "whiskered_cycle": whiskered_cycle,
        "fixture": fixture,
    }
    if family not in table:
        raise GraphError(f"unknown family {family!r}")
    return table[family](*params)
