"""Regularity of S/J_{K_m,G} via a squarefree initial ideal and Hochster's formula.

For a squarefree monomial ideal I with Stanley-Reisner complex D,

    beta_{i,sigma}(S/I) = dim H~_{|sigma|-i-1}(D restricted to sigma)

so reg(S/I) is the largest r + 1 with H~_r(D|sigma) != 0.  Only sigma that
are unions of generator supports can carry homology (any other sigma has a
cone point), and when the generators inside sigma split into variable-disjoint
groups the restriction is a join, whose top homology degree adds up.  The scan
below uses both facts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, connected_components, induced_subgraph
from .poly import (
    DEFAULT_FIELD,
    DEFAULT_MAX_PAIRS,
    DEFAULT_MAX_TERMS,
    buchberger,
    build_gbei,
    check_field,
    initial_ideal,
)

MAX_SUPPORT = 22


class OracleBudgetExceeded(RuntimeError):
    """Input too large for the Hochster scan."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- linear algebra over GF(p) ------------------------------------------------


def rank_mod_p(columns: list[dict], p: int) -> int:
    """Rank of a sparse matrix given as columns ``{row: value}``."""
    if p == 2:
        return _rank_gf2([sum(1 << r for r, v in col.items() if v % 2) for col in columns])
    pivots: dict[int, dict] = {}
    for col in columns:
        col = {r: v % p for r, v in col.items() if v % p}
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(col[low], p - 2, p)
                pivots[low] = {r: v * inv % p for r, v in col.items()}
                break
            c = col[low]
            for r, v in piv.items():
                nv = (col.get(r, 0) - c * v) % p
                if nv:
                    col[r] = nv
                else:
                    del col[r]
    return len(pivots)


def _rank_gf2(columns: list[int]) -> int:
    pivots: dict[int, int] = {}
    for col in columns:
        while col:
            low = col.bit_length() - 1
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                break
            col ^= piv
    return len(pivots)


# -- simplicial complexes --------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """Stanley-Reisner complex on the vertex set ``ground`` (a bitmask).

    A subset of ``ground`` is a face iff it contains none of ``nonfaces``.
    ``nonfaces`` are the supports of the squarefree monomial generators.
    """

    ground: int
    nonfaces: tuple[int, ...]

    @classmethod
    def from_generators(cls, masks, ground: int | None = None) -> "SimplicialComplex":
        masks = _minimalize(masks)
        if ground is None:
            ground = 0
            for g in masks:
                ground |= g
        return cls(ground, tuple(g for g in masks if g & ~ground == 0))

    def is_face(self, mask: int) -> bool:
        if mask & ~self.ground:
            return False
        return not any(g & ~mask == 0 for g in self.nonfaces)

    def restrict(self, sigma: int) -> "SimplicialComplex":
        sigma &= self.ground
        return SimplicialComplex(sigma, tuple(g for g in self.nonfaces if g & ~sigma == 0))

    def faces_by_size(self, max_size: int | None = None) -> list[list[int]]:
        """Faces grouped by cardinality; index 0 holds the empty face (if any)."""
        if 0 in self.nonfaces:
            return []
        verts = list(_bits(self.ground))
        by_top: dict[int, list[int]] = {}
        for g in self.nonfaces:
            by_top.setdefault(g.bit_length() - 1, []).append(g)
        levels: list[list[int]] = [[0]]
        stack = [(0, 0, 0)]  # (face, size, next vertex position)
        limit = len(verts) if max_size is None else max_size
        while stack:
            face, size, start = stack.pop()
            if size >= limit:
                continue
            for pos in range(start, len(verts)):
                v = verts[pos]
                new = face | (1 << v)
                if any(g & ~new == 0 for g in by_top.get(v, ())):
                    continue
                while len(levels) <= size + 1:
                    levels.append([])
                levels[size + 1].append(new)
                stack.append((new, size + 1, pos + 1))
        return levels

    @property
    def dim(self) -> int:
        levels = self.faces_by_size()
        return len(levels) - 2 if levels else -2

    def reduced_homology(self, p: int = DEFAULT_FIELD) -> list[int]:
        """``[dim H~_{-1}, dim H~_0, ..., dim H~_{dim}]`` over GF(p).

        The irrelevant complex ``{emptyset}`` has H~_{-1} = 1; the void complex
        (no faces) returns an empty list, i.e. all zero.
        """
        levels = self.faces_by_size()
        if not levels:
            return []
        ranks = [_boundary_rank(levels, k, p) for k in range(len(levels))] + [0]
        return [len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(len(levels))]


def _minimalize(masks) -> list[int]:
    out = []
    for g in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(h & ~g == 0 for h in out):
            out.append(g)
    return out


def _boundary_rank(levels: list[list[int]], k: int, p: int) -> int:
    """Rank of the boundary map from faces of size ``k`` to faces of size ``k - 1``."""
    if k == 0 or k >= len(levels) or not levels[k]:
        return 0
    index = {f: i for i, f in enumerate(levels[k - 1])}
    columns = []
    for face in levels[k]:
        col = {}
        sign = 1
        for v in _bits(face):
            col[index[face ^ (1 << v)]] = sign
            sign = -sign
        columns.append(col)
    return rank_mod_p(columns, p)


def top_homology_degree(levels: list[list[int]], p: int, floor: int = -1) -> int | None:
    """Largest r >= floor with H~_r != 0 (levels from ``faces_by_size``), else None."""
    if not levels:
        return None
    top = len(levels) - 1  # size of largest face
    rank_above = 0
    for size in range(top, floor, -1):
        # faces of this size have dimension size - 1
        rank_here = _boundary_rank(levels, size, p)
        if len(levels[size]) - rank_here - rank_above > 0:
            return size - 1
        rank_above = rank_here
    return None


# -- Hochster scan ----------------------------------------------------------------


def _hyper_components(gens: list[int]) -> list[tuple[int, list[int]]]:
    """Group generator masks into variable-connected components."""
    comps: list[tuple[int, list[int]]] = []
    for g in gens:
        merged_mask, merged = g, [g]
        rest = []
        for mask, members in comps:
            if mask & merged_mask:
                merged_mask |= mask
                merged += members
            else:
                rest.append((mask, members))
        comps = rest + [(merged_mask, merged)]
    return comps


def _link_is_cone(sigma: int, inside: list[int]) -> bool:
    """True if some vertex of D|sigma has a cone as its link.

    Then D|sigma deformation retracts onto D|(sigma - v), so sigma carries no
    homology that a smaller restriction does not already show.
    """
    for v in _bits(sigma):
        bit = 1 << v
        link_gens = []
        for g in inside:
            if g & bit:
                link_gens.append(g ^ bit)
            else:
                link_gens.append(g)
        minimal = _minimalize(link_gens)
        if 0 in minimal:
            continue  # v is not a vertex of D|sigma: void link, not a cone
        covered = 0
        for h in minimal:
            covered |= h
        if covered != sigma ^ bit:
            return True
    return False


def _lcm_lattice(gens: list[int]) -> set[int]:
    lattice = {0}
    for g in gens:
        lattice |= {s | g for s in lattice}
    return lattice


@dataclass
class _Scan:
    gens: list[int]
    p: int
    memo: dict = field(default_factory=dict)

    def connected_value(self, sigma: int, inside: list[int]) -> tuple[int, int] | None:
        """(r + 1, r) for the top nonzero H~_r of the restriction to a connected sigma."""
        if sigma in self.memo:
            return self.memo[sigma]
        cx = SimplicialComplex(sigma, tuple(inside))
        r = top_homology_degree(cx.faces_by_size(), self.p)
        val = None if r is None else (r + 1, r)
        self.memo[sigma] = val
        return val

    def value(self, sigma: int) -> tuple[int, list[tuple[int, int]]] | None:
        """Total contribution of sigma and its per-piece (mask, degree) witnesses."""
        inside = [g for g in self.gens if g & ~sigma == 0]
        if _link_is_cone(sigma, inside):
            return None
        total = 0
        pieces = []
        for mask, members in _hyper_components(inside):
            val = self.connected_value(mask, members)
            if val is None:
                return None
            total += val[0]
            pieces.append((mask, val[1]))
        return total, pieces


@dataclass(frozen=True)
class MonomialRegularity:
    reg: int
    sigma: int  # variable mask of the witness restriction
    degree: int  # homology degree r with H~_r(D|sigma) != 0


def monomial_regularity(masks, p: int = DEFAULT_FIELD, max_support: int = MAX_SUPPORT) -> MonomialRegularity:
    """reg(S/I) for the squarefree monomial ideal with generator supports ``masks``."""
    gens = _minimalize(masks)
    if 0 in gens:
        raise ValueError("unit ideal: S/I = 0 has no regularity")
    reg, sigma_all, pieces_deg = 0, 0, 0
    for comp_mask, comp_gens in _hyper_components(gens):
        if comp_mask.bit_count() > max_support:
            raise OracleBudgetExceeded(f"{comp_mask.bit_count()} variables in one component (cap {max_support})")
        scan = _Scan(comp_gens, p)
        best = (0, 0, -1)
        for sigma in sorted(_lcm_lattice(comp_gens), key=lambda s: (-s.bit_count(), s)):
            if sigma == 0:
                continue
            got = scan.value(sigma)
            if got is not None and got[0] > best[0]:
                best = (got[0], sigma, got[0] - 1)
        reg += best[0]
        sigma_all |= best[1]
        pieces_deg += best[0]
    return MonomialRegularity(reg, sigma_all, pieces_deg - 1)


# -- binomial edge ideal pipeline ------------------------------------------------


@dataclass(frozen=True)
class RegularityResult:
    """Oracle output for ``reg(S/J_{K_m,G})``.

    ``reg`` is computed from the initial ideal.  It equals the regularity of
    ``S/J`` when ``exact`` is set (squarefree initial ideal); otherwise it is
    only an upper bound and ``nonsquarefree`` lists the offending generators.
    """

    reg: int
    exact: bool
    witness: tuple[str, ...]  # variables of sigma
    witness_degree: int  # r with H~_r(D|sigma) != 0 and reg = r + 1
    char: int
    m: int
    component_regs: tuple[int, ...] = ()
    nonsquarefree: tuple[str, ...] = ()
    witness_mask: int = field(default=0, compare=False, repr=False)

    def to_json(self) -> dict:
        out = {
            "reg": self.reg,
            "exact": self.exact,
            "witness": {"sigma": list(self.witness), "degree": self.witness_degree},
            "char": self.char,
            "m": self.m,
            "component_regs": list(self.component_regs),
        }
        if self.nonsquarefree:
            out["nonsquarefree"] = list(self.nonsquarefree)
        return out


def polarize(exponents: list[tuple[int, ...]]) -> tuple[list[int], list[tuple[int, int]]]:
    """Squarefree masks of the polarization and the (variable, copy) of each new bit."""
    slots: dict[tuple[int, int], int] = {}
    masks = []
    for e in exponents:
        mask = 0
        for k, x in enumerate(e):
            for c in range(x):
                mask |= 1 << slots.setdefault((k, c), len(slots))
        masks.append(mask)
    names = [None] * len(slots)
    for key, bit in slots.items():
        names[bit] = key
    return masks, names


def _component_rings(G: Graph, m: int, max_support: int):
    for comp in connected_components(G):
        H = induced_subgraph(G, comp)
        if H.num_edges == 0:
            continue
        if m * H.n > max_support:
            raise OracleBudgetExceeded(
                f"component with {H.n} vertices needs {m * H.n} variables (cap {max_support})"
            )
        yield H


def _initial_masks(H: Graph, m: int, p: int, max_pairs: int, max_terms: int):
    """(masks, bit names, grid, offending generators) of in(J_{K_m,H})."""
    B = buchberger(build_gbei(H, m, p), max_pairs=max_pairs, max_terms=max_terms)
    M = initial_ideal(B)
    exps = [g.lm for g in M.gens]
    bad = tuple(g.render() for g in M.gens if max(g.lm) > 1)
    if not bad:
        masks = [sum(1 << k for k, x in enumerate(e) if x) for e in exps]
        names = [(k, 0) for k in range(M.grid.nvars)]
    else:
        masks, names = polarize(exps)
    return masks, names, M.grid, bad


def regularity(
    G: Graph,
    m: int = 2,
    p: int = DEFAULT_FIELD,
    inequality_only: bool = False,
    max_support: int = MAX_SUPPORT,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> RegularityResult:
    """``reg(S/J_{K_m,G})``, summed over the connected components of G.

    With ``inequality_only`` the value is reported as an upper bound even when
    the initial ideal is squarefree.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    check_field(p)
    total, sigma_names, regs, bad_all = 0, [], [], []
    for H in _component_rings(G, m, max_support):
        masks, names, grid, bad = _initial_masks(H, m, p, max_pairs, max_terms)
        res = monomial_regularity(masks, p, max_support=max(max_support, len(names)))
        total += res.reg
        regs.append(res.reg)
        bad_all += bad
        for b in _bits(res.sigma):
            k, c = names[b]
            name = grid.var_name(k)
            sigma_names.append(name if c == 0 else f"{name}'{c}")
    return RegularityResult(
        reg=total,
        exact=not bad_all and not inequality_only,
        witness=tuple(sigma_names),
        witness_degree=total - 1,
        char=p,
        m=m,
        component_regs=tuple(regs),
        nonsquarefree=tuple(bad_all),
    )


def _restriction_betti(gens: list[int], p: int) -> dict[tuple[int, int], int]:
    table: dict[tuple[int, int], int] = {}
    for sigma in _lcm_lattice(gens):
        inside = [g for g in gens if g & ~sigma == 0]
        j = sigma.bit_count()
        dims = SimplicialComplex(sigma, tuple(inside)).reduced_homology(p)
        for idx, d in enumerate(dims):
            if d:
                i = j - (idx - 1) - 1
                table[i, j] = table.get((i, j), 0) + d
    return table


def _convolve(a: dict, b: dict) -> dict:
    out: dict[tuple[int, int], int] = {}
    for (i1, j1), x in a.items():
        for (i2, j2), y in b.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + x * y
    return out


def monomial_betti(masks, p: int = DEFAULT_FIELD, max_support: int = MAX_SUPPORT) -> dict[tuple[int, int], int]:
    """Graded Betti numbers ``{(i, j): beta_{i,j}(S/I)}`` of a squarefree monomial ideal."""
    gens = _minimalize(masks)
    table = {(0, 0): 1}
    for comp_mask, comp_gens in _hyper_components(gens):
        if comp_mask.bit_count() > max_support:
            raise OracleBudgetExceeded(f"{comp_mask.bit_count()} variables in one component (cap {max_support})")
        table = _convolve(table, _restriction_betti(comp_gens, p))
    return table


def betti_table(
    G: Graph,
    m: int = 2,
    p: int = DEFAULT_FIELD,
    max_support: int = MAX_SUPPORT,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> dict[tuple[int, int], int]:
    """Graded Betti numbers of ``S/in(J_{K_m,G})`` (the initial ideal, not J itself)."""
    check_field(p)
    table = {(0, 0): 1}
    for H in _component_rings(G, m, max_support):
        masks, _, _, _ = _initial_masks(H, m, p, max_pairs, DEFAULT_MAX_TERMS)
        table = _convolve(table, monomial_betti(masks, p, max_support=max(max_support, max(masks).bit_length())))
    return table


def format_betti(table: dict[tuple[int, int], int]) -> str:
    """Macaulay2-style display: rows j - i, columns i."""
    if not table:
        return ""
    cols = max(i for i, _ in table) + 1
    rows = max(j - i for i, j in table) + 1
    width = max(len(str(v)) for v in table.values()) + 1
    lines = ["      " + "".join(str(i).rjust(width) for i in range(cols))]
    for r in range(rows):
        cells = "".join(str(table.get((i, i + r), "-") if table.get((i, i + r)) else "-").rjust(width) for i in range(cols))
        lines.append(f"{r:>4}: {cells}")
    return "\n".join(lines)
