import networkx as nx
from hypothesis import strategies as st

from regwitness.graph import Graph


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(G.vertices())
    H.add_edges_from(G.edges())
    return H


def from_nx(H: nx.Graph) -> Graph:
    nodes = sorted(H.nodes())
    pos = {v: i + 1 for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(pos[u], pos[v]) for u, v in H.edges()])


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, b in zip(pairs, bits) if b]
    if connected:
        # hang every vertex off an earlier one so the result is connected
        parents = [draw(st.integers(1, v - 1)) for v in range(2, n + 1)]
        edges += [(p, v) for p, v in zip(parents, range(2, n + 1))]
    return Graph.from_edges(n, edges)


@st.composite
def trees(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(1, v - 1)) for v in range(2, n + 1)]
    return Graph.from_edges(n, list(zip(parents, range(2, n + 1))))
