"""Combinatorial invariants of small graphs, all computed exactly.

Everything here works on the bitmask rows of :class:`Graph` and is exponential
in the worst case; the intended scale is n <= 20 or so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .families import CompositionSpec, jewel
from .graph import Graph, GraphError, _bits, connected_components, induced_subgraph, mask_to_vertices

CUT_SET_MAX_N = 12
CLOSED_MAX_N = 12


def _components_of(adj: tuple[int, ...], mask: int) -> int:
    """Number of components of the subgraph induced on ``mask``."""
    count = 0
    rest = mask
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            frontier = nxt & mask & ~comp
            comp |= frontier
        rest &= ~comp
        count += 1
    return count


# -- cliques ----------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueReport:
    maximal_cliques: tuple[int, ...]  # vertex masks
    clique_count: int
    clique_number: int

    def as_lists(self) -> list[list[int]]:
        return [mask_to_vertices(c) for c in self.maximal_cliques]


def maximal_cliques(G: Graph) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting on bitsets; isolated vertices are K_1 cliques."""
    out = []
    adj = G.adj

    def expand(R, P, X):
        if not P and not X:
            out.append(R)
            return
        pivot = max(_bits(P | X), key=lambda u: (P & adj[u]).bit_count())
        for v in _bits(P & ~adj[pivot]):
            bit = 1 << v
            expand(R | bit, P & adj[v], X & adj[v])
            P &= ~bit
            X |= bit

    if G.n:
        expand(0, G.full_mask, 0)
    return sorted(out, key=mask_to_vertices)


def clique_report(G: Graph) -> CliqueReport:
    cliques = maximal_cliques(G)
    return CliqueReport(tuple(cliques), len(cliques), max((c.bit_count() for c in cliques), default=0))


def clique_number(G: Graph) -> int:
    return clique_report(G).clique_number


def clique_degrees(G: Graph) -> list[int]:
    """cdeg(v): number of maximal cliques containing v, for v = 1..n."""
    cliques = maximal_cliques(G)
    return [sum(1 for c in cliques if c >> v & 1) for v in range(G.n)]


def internal_vertices(G: Graph) -> list[int]:
    return [v + 1 for v, d in enumerate(clique_degrees(G)) if d >= 2]


def iv(G: Graph) -> int:
    return len(internal_vertices(G))


# -- eta, gamma, clique complex -------------------------------------------------------


def max_independent_set(adj: list[int]) -> int:
    """Size of a maximum independent set of the graph with bitmask rows ``adj``."""
    n = len(adj)

    @lru_cache(maxsize=None)
    def solve(P: int) -> int:
        if not P:
            return 0
        # vertices of degree <= 1 inside P can always be taken
        for v in _bits(P):
            if (adj[v] & P).bit_count() <= 1:
                return 1 + solve(P & ~(adj[v] | 1 << v))
        v = max(_bits(P), key=lambda u: (adj[u] & P).bit_count())
        take = 1 + solve(P & ~(adj[v] | 1 << v))
        if take >= P.bit_count():
            return take
        return max(take, solve(P & ~(1 << v)))

    return solve((1 << n) - 1)


def edge_conflict_graph(G: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges of G and conflict rows: e ~ f iff the endpoints of e and f span a clique."""
    edges = G.edges()
    rows = [0] * len(edges)
    for a, b in combinations(range(len(edges)), 2):
        mask = G.mask_of(edges[a] + edges[b])
        if G.is_clique(mask):
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return edges, rows


def eta(G: Graph) -> int:
    """Largest edge set with no two edges inside a common clique."""
    _, rows = edge_conflict_graph(G)
    return max_independent_set(rows)


def component_graphs(G: Graph) -> list[Graph]:
    return [induced_subgraph(G, c) for c in connected_components(G)]


def gamma(G: Graph, m: int) -> int:
    if m < 2:
        raise ValueError("gamma needs m >= 2")
    return sum(min(m - clique_number(H) - 1, -1) for H in component_graphs(G))


def clique_complex_dims(G: Graph) -> list[int]:
    return [max(clique_number(H) - 1, 1) if H.num_edges else 0 for H in component_graphs(G)]


# -- paths and matchings -----------------------------------------------------------------


def longest_induced_path(G: Graph) -> tuple[int, list[int]]:
    """(length in edges, vertex sequence) of a longest induced path."""
    best = (0, [1] if G.n else [])
    adj = G.adj

    def grow(path, used, blocked):
        nonlocal best
        if len(path) - 1 > best[0]:
            best = (len(path) - 1, [v + 1 for v in path])
        # every remaining candidate lies outside the closed neighbourhood of the path interior
        room = (G.full_mask & ~blocked).bit_count()
        if len(path) - 1 + room <= best[0]:
            return
        end = path[-1]
        for w in _bits(adj[end] & ~blocked):
            grow(path + [w], used | 1 << w, blocked | adj[end] | 1 << end | 1 << w)

    for s in range(G.n):
        grow([s], 1 << s, 1 << s)
        if best[0] == G.n - 1:
            break
    return best


def lip(G: Graph) -> int:
    return longest_induced_path(G)[0]


def matching_number(G: Graph) -> int:
    adj = G.adj

    @lru_cache(maxsize=None)
    def solve(free: int) -> int:
        if not free:
            return 0
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        best = solve(rest)
        for w in _bits(adj[v] & rest):
            best = max(best, 1 + solve(rest & ~(1 << w)))
        return best

    return solve(G.full_mask)


def hamiltonian_path(G: Graph) -> list[int] | None:
    if G.n == 0:
        return None
    if G.n == 1:
        return [1]
    adj = G.adj
    full = G.full_mask

    def dfs(path, used):
        if used == full:
            return path
        rest = full & ~used
        # remaining vertices must stay reachable from the current end
        if _components_of(adj, rest | 1 << path[-1]) != 1:
            return None
        for w in _bits(adj[path[-1]] & rest):
            got = dfs(path + [w], used | 1 << w)
            if got:
                return got
        return None

    degs = G.degrees()
    for s in sorted(range(G.n), key=lambda v: (degs[v], v)):
        got = dfs([s], 1 << s)
        if got:
            return [v + 1 for v in got]
    return None


# -- pendants ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PendantProfile:
    cdeg: tuple[int, ...]
    pdeg: tuple[int, ...]
    types: tuple[int | None, ...]
    alpha: int
    pv: int


def pendant_profile(G: Graph) -> PendantProfile:
    cdeg = clique_degrees(G)
    degs = G.degrees()
    pdeg = [sum(1 for w in G.neighbors(v) if degs[w - 1] == 1) for v in G.vertices()]
    types = []
    for c, p in zip(cdeg, pdeg):
        if p >= 1 and c == p + 1:
            types.append(1)
        elif p >= 1 and c >= p + 2:
            types.append(2)
        else:
            types.append(None)
    return PendantProfile(
        tuple(cdeg), tuple(pdeg), tuple(types), types.count(1), sum(1 for d in degs if d == 1)
    )


# -- blocks ------------------------------------------------------------------------------


def blocks_and_cutvertices(G: Graph) -> tuple[list[int], list[int]]:
    """Blocks (vertex masks, isolated vertices included) and cut vertices."""
    disc = [0] * G.n
    low = [0] * G.n
    timer = [1]
    stack: list[tuple[int, int]] = []
    blocks = []
    cuts = set()

    def dfs(u, parent):
        disc[u] = low[u] = timer[0]
        timer[0] += 1
        children = 0
        for w in _bits(G.adj[u]):
            if not disc[w]:
                children += 1
                stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    if parent != -1 or children > 1:
                        cuts.add(u + 1)
                    mask = 0
                    while True:
                        a, b = stack.pop()
                        mask |= 1 << a | 1 << b
                        if (a, b) == (u, w):
                            break
                    blocks.append(mask)
            elif w != parent and disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])

    for v in range(G.n):
        if not disc[v]:
            dfs(v, -1)
            if not G.adj[v]:
                blocks.append(1 << v)
    return sorted(blocks, key=mask_to_vertices), sorted(cuts)


def _is_cycle_block(G: Graph, block: int) -> bool:
    k = block.bit_count()
    return k >= 3 and all((G.adj[v] & block).bit_count() == 2 for v in _bits(block))


# -- class recognition ------------------------------------------------------------------


def is_bipartite(G: Graph) -> bool:
    side = {}
    for comp in connected_components(G):
        start = (comp & -comp).bit_length() - 1
        side[start] = 0
        todo = [start]
        while todo:
            u = todo.pop()
            for w in _bits(G.adj[u]):
                if w not in side:
                    side[w] = 1 - side[u]
                    todo.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def perfect_elimination_order(G: Graph) -> list[int] | None:
    """Reverse maximum cardinality search order if it is a perfect elimination order."""
    weight = [0] * G.n
    numbered = 0
    order = []
    for _ in range(G.n):
        v = max((u for u in range(G.n) if not numbered >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        numbered |= 1 << v
        for w in _bits(G.adj[v] & ~numbered):
            weight[w] += 1
    peo = order[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in _bits(G.adj[v]) if pos[w] > pos[v]]
        if later:
            parent = min(later, key=pos.get)
            rest = sum(1 << w for w in later if w != parent)
            if rest & ~G.adj[parent]:
                return None
    return [v + 1 for v in peo]


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_order(G) is not None


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.num_edges == G.n - 1 and len(connected_components(G)) == 1


def has_claw(G: Graph) -> bool:
    for v in range(G.n):
        nb = list(_bits(G.adj[v]))
        for a, b, c in combinations(nb, 3):
            if not (G.adj[a] >> b & 1 or G.adj[a] >> c & 1 or G.adj[b] >> c & 1):
                return True
    return False


def closed_labeling(G: Graph) -> list[int] | None:
    """A labeling in which G is closed, as ``order[k]`` = vertex receiving label k + 1.

    Closed w.r.t. a labeling means: for edges {i,j}, {k,l} with i < j, k < l,
    j = l and i != k imply {i,k} in E, and i = k, j != l imply {j,l} in E.
    Equivalently the smaller neighbours of every vertex form a clique, and so
    do the larger ones.  Components are labeled one after another.
    """
    if G.n > CLOSED_MAX_N and (has_claw(G) or not is_chordal(G)):
        return None
    order: list[int] = []
    for comp in connected_components(G):
        part = _closed_component(G, comp)
        if part is None:
            return None
        order += part
    return [v + 1 for v in order]


def _closed_component(G: Graph, comp: int) -> list[int] | None:
    adj = G.adj
    size = comp.bit_count()

    def place(order, placed, larger):
        if len(order) == size:
            return order
        # the next label must stay adjacent to the placed part (connected labelings suffice)
        cands = comp & ~placed
        if placed:
            frontier = 0
            for u in _bits(placed):
                frontier |= adj[u]
            cands &= frontier
        for u in _bits(cands):
            earlier = adj[u] & placed
            if not G.is_clique(earlier):
                continue
            if any(larger[w] & ~adj[u] for w in _bits(earlier)):
                continue
            new_larger = dict(larger)
            for w in _bits(earlier):
                new_larger[w] = larger[w] | 1 << u
            new_larger[u] = 0
            got = place(order + [u], placed | 1 << u, new_larger)
            if got:
                return got
        return None

    return place([], 0, {})


def is_closed_labeling(G: Graph, order: list[int]) -> bool:
    """Check the two-edge condition directly for the labeling ``order``."""
    lab = {v: k for k, v in enumerate(order)}
    edges = [tuple(sorted((lab[u], lab[v]))) for u, v in G.edges()]
    E = set(edges)
    for (i, j), (k, l) in combinations(edges, 2):
        if j == l and i != k and (min(i, k), max(i, k)) not in E:
            return False
        if i == k and j != l and (min(j, l), max(j, l)) not in E:
            return False
    return True


def leaves(G: Graph) -> int:
    return sum(1 << v for v, d in enumerate(G.degrees()) if d == 1)


def _is_path_or_empty(G: Graph, mask: int) -> bool:
    if not mask:
        return True
    H = induced_subgraph(G, mask)
    return is_tree(H) and max(H.degrees(), default=0) <= 2


def is_caterpillar(G: Graph) -> bool:
    return is_tree(G) and _is_path_or_empty(G, G.full_mask & ~leaves(G))


def is_lobster(G: Graph) -> bool:
    if not is_tree(G):
        return False
    core = G.full_mask & ~leaves(G)
    return not core or is_caterpillar(induced_subgraph(G, core))


def is_block_graph(G: Graph) -> bool:
    blocks, _ = blocks_and_cutvertices(G)
    return all(G.is_clique(b) for b in blocks)


def is_cactus(G: Graph) -> bool:
    """Every block a cycle or an edge (isolated vertices allowed)."""
    blocks, _ = blocks_and_cutvertices(G)
    return all(b.bit_count() <= 2 or _is_cycle_block(G, b) for b in blocks)


def is_cycle_clique_block_graph(G: Graph) -> bool:
    blocks, _ = blocks_and_cutvertices(G)
    return all(G.is_clique(b) or _is_cycle_block(G, b) for b in blocks)


def is_indecomposable(G: Graph) -> bool:
    return 2 not in clique_degrees(G)


def is_cut_set(adj: tuple[int, ...], full: int, T: int) -> bool:
    rest = full & ~T
    base = _components_of(adj, rest)
    return all(base > _components_of(adj, rest | 1 << v) for v in _bits(T))


def cut_sets(G: Graph) -> list[int]:
    """All cut sets (the empty set included), as vertex masks."""
    if G.n > CUT_SET_MAX_N:
        raise GraphError(f"cut set enumeration limited to n <= {CUT_SET_MAX_N}")
    return [T for T in range(1 << G.n) if is_cut_set(G.adj, G.full_mask, T)]


def is_accessible(G: Graph) -> bool:
    found = set(cut_sets(G))
    for T in found:
        if T and not any(T & ~(1 << v) in found for v in _bits(T)):
            return False
    return True


@dataclass(frozen=True)
class ClassFlags:
    tree: bool
    bipartite: bool
    chordal: bool
    closed: bool
    block_graph: bool
    cactus: bool
    caterpillar: bool
    lobster: bool
    traceable: bool
    accessible: bool | None  # None when n is beyond the cut set enumeration cap
    indecomposable: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def classify(G: Graph) -> ClassFlags:
    return ClassFlags(
        tree=is_tree(G),
        bipartite=is_bipartite(G),
        chordal=is_chordal(G),
        closed=closed_labeling(G) is not None,
        block_graph=is_block_graph(G),
        cactus=is_cactus(G),
        caterpillar=is_caterpillar(G),
        lobster=is_lobster(G),
        traceable=hamiltonian_path(G) is not None,
        accessible=is_accessible(G) if G.n <= CUT_SET_MAX_N else None,
        indecomposable=is_indecomposable(G),
    )


# -- trees: spines -------------------------------------------------------------------------


def _require_tree(G: Graph, what: str):
    if not is_tree(G):
        raise GraphError(f"{what} needs a tree")


def longest_paths(T: Graph) -> list[list[int]]:
    """All longest paths of a tree, each listed once from its smaller end, sorted."""
    _require_tree(T, "longest_paths")
    if T.n == 1:
        return [[1]]
    dist_all = []
    for s in range(T.n):
        dist = {s: 0}
        parent = {s: None}
        todo = [s]
        for u in todo:
            for w in _bits(T.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    todo.append(w)
        dist_all.append((dist, parent))
    diam = max(max(d.values()) for d, _ in dist_all)
    out = []
    for s in range(T.n):
        dist, parent = dist_all[s]
        for t, d in dist.items():
            if d == diam and s < t:
                seq = [t]
                while parent[seq[-1]] is not None:
                    seq.append(parent[seq[-1]])
                out.append([v + 1 for v in reversed(seq)])
    return sorted(out)


@dataclass(frozen=True)
class SpineParams:
    spine: tuple[int, ...]
    length: int
    limbs: int
    whiskers: int
    e2: int
    d3: int

    @property
    def lobster_bound(self) -> int:
        return self.length + 2 * self.limbs

    @property
    def tree_bound(self) -> int:
        return self.e2 + self.length + 2 * self.d3


def spine_params_for(T: Graph, spine: list[int]) -> SpineParams:
    on = T.mask_of(spine)
    degs = T.degrees()
    limbs = whiskers = 0
    for v in spine:
        for w in T.neighbors(v):
            if on >> (w - 1) & 1:
                continue
            if degs[w - 1] == 1:
                whiskers += 1
            else:
                limbs += 1
    spine_edges = {tuple(sorted(e)) for e in zip(spine, spine[1:])}
    e2 = sum(
        1 for u, v in T.edges() if (u, v) not in spine_edges and degs[u - 1] <= 2 and degs[v - 1] <= 2
    )
    d3 = sum(1 for v in T.vertices() if not on >> (v - 1) & 1 and degs[v - 1] >= 3)
    return SpineParams(tuple(spine), len(spine) - 1, limbs, whiskers, e2, d3)


def spine_params(T: Graph) -> SpineParams:
    """Parameters for the lexicographically least longest path."""
    return spine_params_for(T, longest_paths(T)[0])


def all_spine_params(T: Graph) -> list[SpineParams]:
    return [spine_params_for(T, P) for P in longest_paths(T)]


# -- cactus-like graphs --------------------------------------------------------------------


def cactus_params(G: Graph) -> tuple[int, dict[int, int]]:
    """(c', {k: c_k}) for a graph whose blocks are cycles or cliques (k >= 4 only)."""
    blocks, _ = blocks_and_cutvertices(G)
    ck: dict[int, int] = {}
    cycle_edges = 0
    for b in blocks:
        if G.is_clique(b):
            continue
        if not _is_cycle_block(G, b):
            raise GraphError("cactus_params: a block is neither a cycle nor a clique")
        k = b.bit_count()
        ck[k] = ck.get(k, 0) + 1
        cycle_edges += k
    return clique_report(G).clique_count - cycle_edges, dict(sorted(ck.items()))


def cactus_bound(G: Graph) -> int:
    cp, ck = cactus_params(G)
    return cp + sum((k - 2) * c for k, c in ck.items())


# -- jewel detection -------------------------------------------------------------------------


def contains_subgraph(G: Graph, P: Graph) -> bool:
    """True iff P is isomorphic to a (not necessarily induced) subgraph of G."""
    if P.n > G.n or P.num_edges > G.num_edges:
        return False
    gdeg = G.degrees()
    pdeg = P.degrees()
    # map pattern vertices in BFS order so each new one has a mapped neighbour
    order = []
    seen = 0
    for start in sorted(range(P.n), key=lambda v: -pdeg[v]):
        if seen >> start & 1:
            continue
        todo = [start]
        seen |= 1 << start
        for u in todo:
            order.append(u)
            for w in sorted(_bits(P.adj[u]), key=lambda v: -pdeg[v]):
                if not seen >> w & 1:
                    seen |= 1 << w
                    todo.append(w)
    pos = {u: i for i, u in enumerate(order)}

    def extend(i, image, used):
        if i == len(order):
            return True
        u = order[i]
        earlier = [image[w] for w in _bits(P.adj[u]) if pos[w] < i]
        cands = G.full_mask & ~used
        for x in earlier:
            cands &= G.adj[x]
        for x in _bits(cands):
            if gdeg[x] < pdeg[u]:
                continue
            image[u] = x
            if extend(i + 1, image, used | 1 << x):
                return True
        image.pop(u, None)
        return False

    return extend(0, {}, 0)


def contains_jewel_subgraph(T: Graph) -> bool:
    _require_tree(T, "contains_jewel_subgraph")
    return contains_subgraph(T, jewel())


# -- Cohen-Macaulay bipartite compositions ------------------------------------------------------


@dataclass(frozen=True)
class CMBipartiteParams:
    alpha: int
    H_vertices: tuple[int, ...]
    H_edges: tuple[tuple[int, int], ...]
    ma: int

    @property
    def H(self) -> Graph:
        pos = {v: i + 1 for i, v in enumerate(self.H_vertices)}
        return Graph.from_edges(
            len(self.H_vertices), [(pos[a], pos[b]) for a, b in self.H_edges], labels=self.H_vertices
        )


def cm_bipartite_params(spec: CompositionSpec | list[int]) -> CMBipartiteParams:
    if not isinstance(spec, CompositionSpec):
        spec = CompositionSpec(tuple(spec))
    ms, t = spec.ms, spec.t
    if t < 2:
        raise GraphError("composition parameters need t >= 2")
    m = {i: ms[i - 1] for i in range(1, t + 1)}
    alpha = len({j for j in range(2, t) if m[j] >= 4} | {1, t})
    verts = tuple(range(2, t))
    edges = tuple((i, i + 1) for i in range(2, t - 1) if m[i] == 3 and m[i + 1] == 3)
    params = CMBipartiteParams(alpha, verts, edges, 0)
    ma = matching_number(params.H) if verts else 0
    return CMBipartiteParams(alpha, verts, edges, ma)


def cm_bipartite_formula(spec: CompositionSpec | list[int]) -> int:
    if not isinstance(spec, CompositionSpec):
        spec = CompositionSpec(tuple(spec))
    p = cm_bipartite_params(spec)
    return 2 * p.alpha + 2 * p.ma + spec.t


# -- whiskered cycles ----------------------------------------------------------------------------


@dataclass(frozen=True)
class WhiskeredCycle:
    cycle: tuple[int, ...]  # cycle vertices in cyclic order
    A: tuple[int, ...]  # positions (0-based, along ``cycle``) carrying whiskers


def whiskered_cycle_shape(G: Graph) -> WhiskeredCycle | None:
    """Recognize a cycle with pendant edges attached to cycle vertices."""
    if len(connected_components(G)) != 1 or G.num_edges != G.n:
        return None
    degs = G.degrees()
    leaf = leaves(G)
    core = G.full_mask & ~leaf
    if any((G.adj[v] & core).bit_count() != 2 for v in _bits(core)):
        return None
    if any(not (G.adj[v] & core) for v in _bits(leaf)):
        return None
    start = (core & -core).bit_length() - 1
    cyc = [start]
    prev = None
    while True:
        nxt = [w for w in _bits(G.adj[cyc[-1]] & core) if w != prev]
        nxt = nxt[0] if prev is not None else min(nxt)
        if nxt == start:
            break
        prev = cyc[-1]
        cyc.append(nxt)
    if len(cyc) != core.bit_count():
        return None
    A = tuple(i for i, v in enumerate(cyc) if G.adj[v] & leaf)
    return WhiskeredCycle(tuple(v + 1 for v in cyc), A)


def whisker_cycle_predict(k: int, A) -> int:
    """Regularity of C_k with whiskers exactly at the positions in A (0-based or vertices)."""
    A = sorted(set(A))
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    if not A:
        raise GraphError("whisker set A must be nonempty")
    if len(A) == k:
        return k + 1
    if len(A) == 1:
        return k - 1
    if len(A) == 2:
        d = (A[1] - A[0]) % k
        if d in (1, k - 1):
            return k - 1
    return k


# -- report ---------------------------------------------------------------------------------------


def invariant_report(G: Graph, ms=(2, 3)) -> dict:
    """Flat JSON-ready dictionary of every invariant."""
    cr = clique_report(G)
    blocks, cuts = blocks_and_cutvertices(G)
    flags = classify(G)
    prof = pendant_profile(G)
    length, path = longest_induced_path(G)
    rep = {
        "n": G.n,
        "e": G.num_edges,
        "c": len(connected_components(G)),
        "omega": cr.clique_number,
        "clique_count": cr.clique_count,
        "maximal_cliques": cr.as_lists(),
        "iv": iv(G),
        "internal_vertices": internal_vertices(G),
        "eta": eta(G),
        "clique_complex_dims": clique_complex_dims(G),
        "lip": length,
        "lip_path": path,
        "matching_number": matching_number(G),
        "alpha": prof.alpha,
        "pv": prof.pv,
        "blocks": [mask_to_vertices(b) for b in blocks],
        "non_clique_blocks": [mask_to_vertices(b) for b in blocks if not G.is_clique(b)],
        "cut_vertices": cuts,
    }
    for m in ms:
        rep[f"gamma_{m}"] = gamma(G, m)
    rep.update({f"is_{k}": v for k, v in flags.as_dict().items()})
    if flags.tree:
        sp = spine_params(G)
        rep.update({
            "spine": list(sp.spine), "spine_length": sp.length, "limbs": sp.limbs,
            "whiskers": sp.whiskers, "e2": sp.e2, "d3": sp.d3,
            "contains_jewel": contains_jewel_subgraph(G),
        })
    if is_cycle_clique_block_graph(G):
        cp, ck = cactus_params(G)
        rep["c_prime"] = cp
        rep["c_k"] = {str(k): v for k, v in ck.items()}
    return rep
