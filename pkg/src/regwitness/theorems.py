"""Regularity bounds and characterizations as checkable predicates over (G, m).

Each theorem has an applicability test, a value computed from graph
invariants only, and a comparison against the oracle regularity.  Checks never
report ``holds`` on the strength of an inexact oracle value unless the claim is
an upper bound that the (larger) initial-ideal regularity already satisfies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Callable

from .families import CompositionSpec, F, FanSpec, composition, fan
from .graph import (
    Graph,
    GraphError,
    circ_glue,
    clique_close_at,
    connected_components,
    delete_vertex,
    induced_subgraph,
    to_graph6,
)
from . import invariants as inv
from .oracle import OracleBudgetExceeded, RegularityResult, regularity
from .poly import (
    DEFAULT_FIELD,
    BudgetExceeded,
    build_gbei,
    column_ideal,
    ideal_equal,
    ideal_intersection,
)

HOLDS, VIOLATED, SKIPPED, BUDGET = "holds", "violated", "skipped", "oracle-budget"


@dataclass
class Context:
    """Lazily computed invariants of one (G, m) pair, shared by all checks."""

    G: Graph
    m: int
    p: int = DEFAULT_FIELD
    inequality_only: bool = False
    force: bool = False  # user asserts membership in classes we cannot recognize
    composition: CompositionSpec | None = None
    oracle_kwargs: dict = field(default_factory=dict)
    _oracle: RegularityResult | None = None
    _oracle_error: str | None = None

    @cached_property
    def n(self) -> int:
        return self.G.n

    @cached_property
    def c(self) -> int:
        return len(connected_components(self.G))

    @cached_property
    def connected(self) -> bool:
        return self.c == 1

    @cached_property
    def cliques(self) -> inv.CliqueReport:
        return inv.clique_report(self.G)

    @cached_property
    def iv(self) -> int:
        return inv.iv(self.G)

    @cached_property
    def eta(self) -> int:
        return inv.eta(self.G)

    @cached_property
    def lip(self) -> int:
        return inv.lip(self.G)

    @cached_property
    def flags(self) -> inv.ClassFlags:
        return inv.classify(self.G)

    @cached_property
    def tree(self) -> bool:
        return inv.is_tree(self.G)

    @cached_property
    def comp_orders(self) -> list[int]:
        return [c.bit_count() for c in connected_components(self.G)]

    def oracle(self) -> RegularityResult | None:
        if self._oracle is None and self._oracle_error is None:
            try:
                self._oracle = regularity(
                    self.G, self.m, self.p, inequality_only=self.inequality_only, **self.oracle_kwargs
                )
            except (OracleBudgetExceeded, BudgetExceeded) as exc:
                self._oracle_error = str(exc)
        return self._oracle


@dataclass
class BoundCheck:
    theorem: str
    applicable: bool
    bound: int | None
    reg: int | None
    verdict: str
    exact: bool | None = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "applicable": self.applicable,
            "bound": self.bound,
            "reg": self.reg,
            "exact": self.exact,
            "verdict": self.verdict,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    kind: str  # upper | lower | equality | characterization
    statement: str
    applies: Callable[[Context], bool | str]  # True, or a reason string when not applicable
    value: Callable[[Context], object]
    m2_only: bool = True


def _m2(fn):
    def wrapped(ctx: Context):
        if ctx.m != 2:
            return "only for m = 2"
        return fn(ctx)
    return wrapped


def _always(ctx):
    return True


def _connected(ctx):
    return ctx.connected or "graph is not connected"


def _closed(ctx):
    return ctx.flags.closed or "graph is not closed"


def _chordal(ctx):
    return ctx.flags.chordal or "graph is not chordal"


def _nonempty_tree(ctx):
    if not ctx.tree:
        return "graph is not a tree"
    return ctx.G.num_edges > 0 or "tree has no edges"


def _is_cycle(ctx):
    G = ctx.G
    return (ctx.connected and G.n >= 3 and all(d == 2 for d in G.degrees())) or "graph is not a cycle"


def complete_bipartite_sides(G: Graph) -> tuple[int, int] | None:
    if G.n < 2 or len(connected_components(G)) != 1 or not inv.is_bipartite(G):
        return None
    side = {0: 0}
    todo = [0]
    for u in todo:
        for w in G.neighbors(u + 1):
            if w - 1 not in side:
                side[w - 1] = 1 - side[u]
                todo.append(w - 1)
    a = sum(1 for s in side.values() if s == 0)
    b = G.n - a
    return (min(a, b), max(a, b)) if G.num_edges == a * b else None


def _kab(ctx):
    sides = complete_bipartite_sides(ctx.G)
    if sides is None:
        return "graph is not complete bipartite"
    return sum(sides) >= 3 or "K_{1,1} is excluded (its regularity is 1)"


def _complete(ctx):
    return ctx.G.num_edges == comb(ctx.n, 2) and ctx.n >= 1 or "graph is not complete"


def _star_like(G: Graph) -> bool:
    """K_2 or a star K_{1,k}: one vertex meets every edge and the rest are leaves."""
    return complete_bipartite_sides(G) is not None and complete_bipartite_sides(G)[0] == 1


def _gbg(ctx):
    if not ctx.connected:
        return "graph is not connected"
    if not (ctx.flags.block_graph or ctx.force):
        return "not a block graph (use force to assert the class)"
    if _star_like(ctx.G):
        return "stars and K_2 are excluded (bound is below the regularity there)"
    return True


def _lobster(ctx):
    return ctx.flags.lobster or "graph is not a lobster"


def _cactus(ctx):
    return inv.is_cycle_clique_block_graph(ctx.G) or "some block is neither a cycle nor a clique"


def _whiskered(ctx):
    shape = inv.whiskered_cycle_shape(ctx.G)
    if shape is None:
        return "graph is not a whiskered cycle"
    if len(shape.cycle) < 4:
        return "whiskered triangles are block graphs; the characterization needs k >= 4"
    return bool(shape.A) or "no whiskers"


def _indecomposable_block(ctx):
    if not ctx.connected or ctx.G.num_edges == 0:
        return "needs a connected graph with an edge"
    if not ctx.flags.block_graph:
        return "graph is not a block graph"
    return ctx.flags.indecomposable or "graph is decomposable"


def _omega_window(ctx):
    if not ctx.connected:
        return "graph is not connected"
    return 2 <= ctx.m <= ctx.cliques.clique_number - 1 or "m outside 2..omega-1"


def _composition(ctx):
    return ctx.composition is not None or "no composition data supplied"


def _lobster_value(ctx):
    spines = inv.all_spine_params(ctx.G)
    best = max(spines, key=lambda s: s.lobster_bound)
    return best.lobster_bound, {
        "spine": list(best.spine),
        "per_spine": [{"spine": list(s.spine), "l": s.length, "t": s.limbs, "bound": s.lobster_bound} for s in spines],
    }


def _tree_ub2_value(ctx):
    spines = inv.all_spine_params(ctx.G)
    chosen = spines[0]
    return chosen.tree_bound, {
        "spine": list(chosen.spine),
        "per_spine": [
            {"spine": list(s.spine), "l": s.length, "e2": s.e2, "d3": s.d3, "bound": s.tree_bound} for s in spines
        ],
    }


def _gbg_value(ctx):
    prof = inv.pendant_profile(ctx.G)
    return ctx.cliques.clique_count + prof.alpha - prof.pv, {"alpha": prof.alpha, "pv": prof.pv}


def _whisker_value(ctx):
    shape = inv.whiskered_cycle_shape(ctx.G)
    k = len(shape.cycle)
    return inv.whisker_cycle_predict(k, shape.A), {"k": k, "A": [shape.cycle[i] for i in shape.A]}


def _kumar_value(ctx):
    eq = ctx.m >= max(ctx.comp_orders, default=0)
    return ctx.n - ctx.c, {"equality_claimed": eq}


REGISTRY: dict[str, TheoremSpec] = {}


def _register(*specs):
    for s in specs:
        REGISTRY[s.id] = s


_register(
    TheoremSpec("MM_UPPER", "upper", "reg <= n - c", _m2(_always), lambda c: c.n - c.c),
    TheoremSpec("KUMAR_UPPER", "upper", "reg <= n - c, equality when m >= largest component order",
                _always, _kumar_value, m2_only=False),
    TheoremSpec("CLOSED_KM", "upper", "closed: reg <= min{C(m,2) C(G), e(G)}", _closed,
                lambda c: min(comb(c.m, 2) * c.cliques.clique_count, c.G.num_edges), m2_only=False),
    TheoremSpec("CHORDAL_C", "upper", "chordal: reg <= C(G)", _m2(_chordal), lambda c: c.cliques.clique_count),
    TheoremSpec("CHORDAL_M", "upper", "chordal: reg <= min{(m-1) C(G), n - c}", _chordal,
                lambda c: min((c.m - 1) * c.cliques.clique_count, c.n - c.c), m2_only=False),
    TheoremSpec("ETA_2", "upper", "reg <= eta", _m2(_always), lambda c: c.eta),
    TheoremSpec("ETA_M", "upper", "reg <= (m-1) eta", _always, lambda c: (c.m - 1) * c.eta, m2_only=False),
    TheoremSpec("GAMMA_M", "upper", "reg <= n + gamma_m", _always, lambda c: c.n + inv.gamma(c.G, c.m),
                m2_only=False),
    TheoremSpec("ERT", "upper", "reg <= n - sum dim clique complexes", _m2(_always),
                lambda c: c.n - sum(inv.clique_complex_dims(c.G))),
    TheoremSpec("OMEGA_WINDOW", "upper", "connected, 2 <= m <= omega - 1: reg <= n - 2", _omega_window,
                lambda c: c.n - 2, m2_only=False),
    TheoremSpec("MM_CHAR", "characterization", "connected: reg = n - 1 iff path, else reg <= n - 2",
                _m2(_connected), lambda c: c.n - 1),
    TheoremSpec("LIP_LOWER", "lower", "reg >= longest induced path", _m2(_always), lambda c: c.lip),
    TheoremSpec("CLOSED_EQ", "equality", "connected closed: reg = longest induced path",
                _m2(lambda c: _connected(c) is True and _closed(c)), lambda c: c.lip),
    TheoremSpec("CYCLE_EQ", "equality", "reg(C_n) = n - 2", _m2(_is_cycle), lambda c: c.n - 2),
    TheoremSpec("KBIPARTITE_EQ", "equality", "reg(K_{a,b}) = 2", _m2(_kab), lambda c: 2),
    TheoremSpec("KMKN_EQ", "equality", "reg(J_{K_m,K_n}) = min{m-1, n-1}", _complete,
                lambda c: min(c.m - 1, c.n - 1), m2_only=False),
    TheoremSpec("TREE_LOWER", "characterization", "trees: reg >= iv + 1, equality iff no jewel subgraph",
                _m2(_nonempty_tree), lambda c: c.iv + 1),
    TheoremSpec("CATERPILLAR_EQ", "characterization", "trees: reg = lip iff caterpillar", _m2(_nonempty_tree),
                lambda c: c.lip),
    TheoremSpec("BLOCK_LOWER", "lower", "indecomposable block graphs: reg >= iv + 1", _m2(_indecomposable_block),
                lambda c: c.iv + 1),
    TheoremSpec("LOBSTER_UB", "upper", "lobster: reg <= l + 2t (best spine)", _m2(_lobster), _lobster_value),
    TheoremSpec("TREE_UB2", "upper", "trees: reg <= e2 + l + 2 d3", _m2(_nonempty_tree), _tree_ub2_value),
    TheoremSpec("GBG_UB", "upper", "block graphs: reg <= C(G) + alpha - pv", _m2(_gbg), _gbg_value),
    TheoremSpec("CACTUS_UB", "upper", "cycle/clique blocks: reg <= c' + sum (k-2) c_k", _m2(_cactus),
                lambda c: inv.cactus_bound(c.G)),
    TheoremSpec("WHISKER_CYCLE", "equality", "whiskered C_k: k-1 <= reg <= k+1 with the three cases by A",
                _m2(_whiskered), _whisker_value),
    TheoremSpec("CM_BIP_EQ", "equality", "reg = 2 alpha + 2 ma(H) + t", _m2(_composition),
                lambda c: inv.cm_bipartite_formula(c.composition)),
)

THEOREM_IDS = tuple(REGISTRY)


def _compare(spec: TheoremSpec, ctx: Context, bound: int, res: RegularityResult, detail: dict) -> str:
    reg, exact = res.reg, res.exact
    if spec.kind == "upper":
        ok = reg <= bound
        if spec.id == "KUMAR_UPPER" and detail.get("equality_claimed"):
            if not exact:
                return SKIPPED
            return HOLDS if reg == bound else VIOLATED
        if ok:
            return HOLDS
        return VIOLATED if exact else SKIPPED
    if not exact:
        return SKIPPED
    if spec.kind == "lower":
        return HOLDS if reg >= bound else VIOLATED
    if spec.kind == "equality":
        if spec.id == "WHISKER_CYCLE":
            k = detail["k"]
            if not k - 1 <= reg <= k + 1:
                return VIOLATED
        return HOLDS if reg == bound else VIOLATED
    # characterizations
    if spec.id == "MM_CHAR":
        is_path = ctx.tree and max(ctx.G.degrees(), default=0) <= 2
        detail["is_path"] = is_path
        if is_path:
            return HOLDS if reg == bound else VIOLATED
        return HOLDS if reg <= ctx.n - 2 else VIOLATED
    if spec.id == "TREE_LOWER":
        jewel = inv.contains_jewel_subgraph(ctx.G)
        detail["contains_jewel"] = jewel
        if reg < bound:
            return VIOLATED
        return HOLDS if (reg == bound) == (not jewel) else VIOLATED
    if spec.id == "CATERPILLAR_EQ":
        cat = ctx.flags.caterpillar
        detail["caterpillar"] = cat
        return HOLDS if (reg == bound) == cat else VIOLATED
    raise ValueError(f"no comparison rule for {spec.id}")


def check(G: Graph, m: int, theorem: str, ctx: Context | None = None, **kwargs) -> BoundCheck:
    if theorem not in REGISTRY:
        raise KeyError(f"unknown theorem {theorem!r}; known: {', '.join(THEOREM_IDS)}")
    spec = REGISTRY[theorem]
    ctx = ctx or Context(G, m, **kwargs)
    app = spec.applies(ctx)
    if app is not True:
        return BoundCheck(theorem, False, None, None, SKIPPED, detail={"reason": app or "not applicable"})
    value = spec.value(ctx)
    detail: dict = {}
    if isinstance(value, tuple):
        value, detail = value
    res = ctx.oracle()
    if res is None:
        detail["budget"] = ctx._oracle_error
        return BoundCheck(theorem, True, value, None, BUDGET, detail=detail)
    verdict = _compare(spec, ctx, value, res, detail)
    return BoundCheck(theorem, True, value, res.reg, verdict, res.exact, detail)


def check_all(G: Graph, m: int, theorems=None, **kwargs) -> list[BoundCheck]:
    """Every (selected) theorem on (G, m), sharing one oracle call."""
    ctx = Context(G, m, **kwargs)
    return [check(G, m, t, ctx=ctx) for t in (theorems or THEOREM_IDS)]


def violation_record(G: Graph, m: int, bc: BoundCheck) -> dict:
    return {
        "theorem": bc.theorem,
        "graph6": to_graph6(G).decode(),
        "edges": G.edges(),
        "m": m,
        "bound": bc.bound,
        "reg": bc.reg,
        "detail": bc.detail,
    }


def append_violations(path, records) -> int:
    records = list(records)
    if records:
        with open(path, "a") as fh:
            for r in records:
                fh.write(json.dumps(r, sort_keys=True) + "\n")
    return len(records)


# -- compatible maps ------------------------------------------------------------------


def _strip_isolated(G: Graph) -> Graph:
    keep = [v for v in G.vertices() if G.degree(v)]
    if not keep:
        return Graph.empty(0)
    return induced_subgraph(G, keep)


def psi_value(psi: str, G: Graph, m: int) -> int:
    if G.n == 0:
        return 0
    if psi == "NC":
        return G.n - len(connected_components(G))
    if psi == "ETA":
        return (m - 1) * inv.eta(G)
    if psi == "GAMMA":
        return G.n + inv.gamma(G, m)
    raise KeyError(f"unknown map {psi!r}; use NC, ETA or GAMMA")


def _is_clique_union(G: Graph) -> bool:
    return all(G.is_clique(c) for c in connected_components(G))


def compatible_map_verify(psi: str, m: int, G: Graph) -> dict:
    """Check conditions (a), (b), (c) of a (reg, m)-compatible map on one graph.

    (b) is checked when G is a disjoint union of complete graphs each with at
    least two vertices; (c) when G has an internal vertex.  The report names
    the witness vertex found for (c) and which of the two alternatives it meets.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    val = psi_value(psi, G, m)
    hat = _strip_isolated(G)
    report = {"map": psi, "m": m, "psi": val}
    a_ok = psi_value(psi, hat, m) <= val
    report["a"] = {"psi_hat": psi_value(psi, hat, m), "holds": a_ok}
    comps = [c.bit_count() for c in connected_components(G)]
    union = _is_clique_union(G)
    if union and all(k >= 2 for k in comps):
        rhs = sum(min(m - 1, k - 1) for k in comps)
        report["b"] = {"applies": True, "rhs": rhs, "holds": val >= rhs}
    else:
        report["b"] = {"applies": False}
    if not union:
        witness = None
        tried = []
        for v in inv.internal_vertices(G):
            Gv = clique_close_at(G, v)
            del_v = psi_value(psi, delete_vertex(G, v), m)
            close = psi_value(psi, Gv, m)
            both = psi_value(psi, delete_vertex(Gv, v), m)
            tried.append({"v": v, "psi_del": del_v, "psi_close": close, "psi_close_del": both})
            if del_v <= val and close < val:
                witness = (v, 1)
            elif del_v <= val and close == val and both < val:
                witness = (v, 2)
            if witness:
                break
        report["c"] = {
            "applies": True,
            "holds": witness is not None,
            "witness": witness[0] if witness else None,
            "alternative": witness[1] if witness else None,
            "tried": tried,
        }
    else:
        report["c"] = {"applies": False}
    report["passes"] = a_ok and report["b"].get("holds", True) and report["c"].get("holds", True)
    return report


# -- ideal decompositions -----------------------------------------------------------------


def decomposition_check(G: Graph, m: int, v: int, max_vars: int = 12, **budget) -> bool:
    """J_{K_m,G} == J_{K_m,G_v} cap (P_v + J_{K_m,G \\ v}) for an internal vertex v."""
    if v not in inv.internal_vertices(G):
        raise GraphError(f"vertex {v} is not internal")
    if m * G.n > max_vars:
        raise BudgetExceeded(f"{m * G.n} variables exceed the intersection cap {max_vars}")
    J = build_gbei(G, m)
    Jv = build_gbei(clique_close_at(G, v), m)
    rest = column_ideal(J.grid, J.p, v) + build_gbei(G, m, skip=(v,))
    return ideal_equal(J, ideal_intersection(Jv, rest, **budget), **budget)


# -- the composition recursion ---------------------------------------------------------------


@dataclass(frozen=True)
class RecursionInstance:
    """G = F_{m_1} o ... o F_{m_t} o (H, f) with H either F_n or a fan on K_n."""

    ms: tuple[int, ...]
    H: Graph
    f: int  # pendant vertex of H whose neighbour v is glued
    kind: str

    @property
    def G(self) -> Graph:
        C = composition(list(self.ms))
        return circ_glue(C, C.n, self.H, self.f)

    @property
    def shortened(self) -> Graph:
        """F_{m_1} o ... o F_{m_{t-1}} o F_{m_t - 1}."""
        *head, last = self.ms
        if not head:
            return F(last - 1)
        C = composition(head)
        return circ_glue(C, C.n, F(last - 1), 1)

    @property
    def H_rest(self) -> Graph:
        v = self.H.neighbors(self.f)[0]
        keep = [u for u in self.H.vertices() if u not in (v, self.f)]
        return induced_subgraph(self.H, keep)


def f_instance(ms, n: int) -> RecursionInstance:
    if n < 3:
        raise GraphError("H = F_n needs n >= 3")
    return RecursionInstance(tuple(ms), F(n), 1, "F")


def fan_instance(ms, spec: FanSpec) -> RecursionInstance:
    """H = k-fan on K_n; the glued vertex is the first vertex of a part of size >= 2
    whose first branch is a K_2 (so it carries a pendant)."""
    H = fan(spec)
    for part, sizes in zip(spec.parts, spec.sizes):
        if len(part) >= 2 and sizes[0] == 2:
            v = part[0]
            for f in H.neighbors(v):
                if H.degree(f) == 1:
                    return RecursionInstance(tuple(ms), H, f, "fan")
    raise GraphError("fan has no part of size >= 2 with a pendant at its first vertex")


def recursion_4_6_check(inst: RecursionInstance, m_cap_vertices: int = 11, p: int = DEFAULT_FIELD) -> BoundCheck:
    """reg(G) = reg(F_{m_1} o ... o F_{m_t - 1}) + reg(H minus {v, f})."""
    G = inst.G
    detail = {"ms": list(inst.ms), "H": inst.kind, "n": G.n}
    if G.n <= m_cap_vertices:
        lhs = regularity(G, 2, p)
        r1 = regularity(inst.shortened, 2, p)
        r2 = regularity(inst.H_rest, 2, p)
        exact = lhs.exact and r1.exact and r2.exact
        rhs = r1.reg + r2.reg
        detail.update(mode="oracle", lhs=lhs.reg, shortened=r1.reg, H_rest=r2.reg)
        verdict = (HOLDS if lhs.reg == rhs else VIOLATED) if exact else SKIPPED
        return BoundCheck("CM_BIP_RECURSION", True, rhs, lhs.reg, verdict, exact, detail)
    if inst.kind != "F":
        return BoundCheck("CM_BIP_RECURSION", True, None, None, BUDGET, None, {**detail, "reason": "too large"})
    # formula mode: every piece is a composition, F_k, or a composition * F_1
    full = list(inst.ms) + [inst.H.n // 2]
    lhs = inv.cm_bipartite_formula(full)
    *head, last = inst.ms
    if last - 1 >= 3 and head:
        r1 = inv.cm_bipartite_formula(head + [last - 1])
    elif head:
        # F_{m_1} o ... o F_{m_{t-1}} o F_2 = (F_{m_1} o ... o F_{m_{t-1}}) * F_1 adds one
        r1 = (inv.cm_bipartite_formula(head) if len(head) >= 2 else 3) + 1
    else:
        r1 = 3  # F_k with k >= 2
    r2 = 3 if inst.H.n // 2 - 1 >= 2 else 1
    detail.update(mode="formula", lhs=lhs, shortened=r1, H_rest=r2)
    return BoundCheck("CM_BIP_RECURSION", True, r1 + r2, lhs, HOLDS if lhs == r1 + r2 else VIOLATED, None, detail)
