"""Sparse polynomials over GF(p) on an m x n variable grid, and Buchberger's algorithm.

Monomials are exponent tuples indexed by variable position; position 0 is the
largest variable, so plain tuple comparison *is* the lex order.  For the grid,
variable ``x_{i,j}`` sits at position ``(i - 1) * n + (j - 1)`` (row-major), which
for ``m = 2`` gives the usual ``x_1 > ... > x_n > y_1 > ... > y_n``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Graph

DEFAULT_FIELD = int(os.environ.get("REGWITNESS_FIELD", "32003"))
DEFAULT_MAX_PAIRS = 500_000
DEFAULT_MAX_TERMS = 200_000


class BudgetExceeded(RuntimeError):
    """A Groebner computation hit its pair or size cap."""


class BinomialClosureError(AssertionError):
    """A remainder of a binomial ideal computation had more than two terms."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def check_field(p: int) -> int:
    if not _is_prime(p):
        raise ValueError(f"field characteristic {p} is not prime")
    return p


@dataclass(frozen=True)
class VarGrid:
    m: int
    n: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.m < 1 or self.n < 0:
            raise ValueError("grid needs m >= 1 and n >= 0")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("one label per column required")

    @property
    def nvars(self) -> int:
        return self.m * self.n

    def index(self, i: int, j: int) -> int:
        """Position of ``x_{i,j}`` (1-based row and column)."""
        return (i - 1) * self.n + (j - 1)

    def cell(self, k: int) -> tuple[int, int]:
        return k // self.n + 1, k % self.n + 1

    def column_label(self, j: int) -> str:
        return self.labels[j - 1] if self.labels else str(j)

    def var_name(self, k: int, style: str = "plain") -> str:
        i, j = self.cell(k)
        lab = self.column_label(j)
        if style == "latex":
            if self.m == 2:
                base = "xy"[i - 1]
                return f"{base}_{lab}" if len(lab) == 1 else f"{base}_{{{lab}}}"
            if len(lab) == 1:
                return f"x_{{{i}{lab}}}"
            return f"x_{{{i},{lab}}}"
        if self.m == 2:
            return f"{'xy'[i - 1]}{lab}"
        return f"x{{{i},{lab}}}"


# -- raw dict-polynomial kernel --------------------------------------------
#
# A raw polynomial is a dict {exponent tuple: coefficient in 1..p-1}.


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _support(mono) -> int:
    mask = 0
    for k, e in enumerate(mono):
        if e:
            mask |= 1 << k
    return mask


def _monic(f: dict, p: int) -> dict:
    lc = f[max(f)]
    if lc == 1:
        return f
    inv = pow(lc, p - 2, p)
    return {e: c * inv % p for e, c in f.items()}


class _Reducer:
    """Basis elements indexed for fast leading-term divisibility lookups."""

    def __init__(self, p: int):
        self.p = p
        self.polys: list[dict] = []
        self.lms: list[tuple] = []
        self.masks: list[int] = []

    def add(self, f: dict):
        lm = max(f)
        self.polys.append(f)
        self.lms.append(lm)
        self.masks.append(_support(lm))

    def find(self, mono, mask=None):
        if mask is None:
            mask = _support(mono)
        for idx, m in enumerate(self.masks):
            if m & ~mask == 0 and _divides(self.lms[idx], mono):
                return idx
        return -1

    def reduce(self, f: dict, max_terms: int = DEFAULT_MAX_TERMS) -> dict:
        """Full normal form of ``f``; every remainder term is irreducible."""
        p = self.p
        f = dict(f)
        rem = {}
        while f:
            lm = max(f)
            idx = self.find(lm)
            if idx < 0:
                rem[lm] = f.pop(lm)
                continue
            c = f[lm]
            g_lm = self.lms[idx]
            q = tuple(a - b for a, b in zip(lm, g_lm))
            for e, v in self.polys[idx].items():
                t = tuple(a + b for a, b in zip(e, q))
                nv = (f.get(t, 0) - c * v) % p
                if nv:
                    f[t] = nv
                else:
                    f.pop(t, None)
            if len(f) + len(rem) > max_terms:
                raise BudgetExceeded(f"polynomial exceeded {max_terms} terms")
        return rem


def raw_normal_form(f: dict, basis: list[dict], p: int) -> dict:
    red = _Reducer(p)
    for g in basis:
        if g:
            red.add(_monic(g, p))
    return red.reduce(f)


def _spoly(f: dict, g: dict, p: int) -> dict:
    lf, lg = max(f), max(g)
    L = _lcm(lf, lg)
    qf = tuple(a - b for a, b in zip(L, lf))
    qg = tuple(a - b for a, b in zip(L, lg))
    out = {}
    for e, v in f.items():
        out[tuple(a + b for a, b in zip(e, qf))] = v
    for e, v in g.items():
        t = tuple(a + b for a, b in zip(e, qg))
        nv = (out.get(t, 0) - v) % p
        if nv:
            out[t] = nv
        else:
            out.pop(t, None)
    return out


def raw_groebner(
    polys: list[dict],
    p: int,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    max_terms: int = DEFAULT_MAX_TERMS,
    check_binomial: bool | None = None,
) -> list[dict]:
    """Reduced lex Groebner basis of the ideal generated by ``polys``.

    Buchberger with the Gebauer-Moeller installation of the product and chain
    criteria; pairs are taken smallest ``(deg lcm, lcm)`` first.  Output is
    monic and sorted by decreasing leading monomial.
    """
    polys = [f for f in polys if f]
    if check_binomial is None:
        check_binomial = all(len(f) <= 2 for f in polys)
    basis: list[dict] = []
    lms: list[tuple] = []
    active: list[int] = []
    pairs: list[tuple] = []  # (deg, lcm, i, j)

    def update(h: dict):
        nonlocal active, pairs
        k = len(basis)
        lh = max(h)
        basis.append(h)
        lms.append(lh)
        cand = [(g, _lcm(lms[g], lh)) for g in active]
        keep = []
        for idx, (g1, l1) in enumerate(cand):
            if _coprime(lms[g1], lh):
                keep.append((g1, l1))
                continue
            dominated = False
            for g2, l2 in cand[idx + 1:]:
                if _divides(l2, l1):
                    dominated = True
                    break
            if not dominated:
                for g2, l2 in keep:
                    if _divides(l2, l1):
                        dominated = True
                        break
            if not dominated:
                keep.append((g1, l1))
        new_pairs = [(sum(l1), l1, g1, k) for g1, l1 in keep if not _coprime(lms[g1], lh)]
        old = []
        for pr in pairs:
            _, L, i, j = pr
            if _divides(lh, L) and _lcm(lms[i], lh) != L and _lcm(lms[j], lh) != L:
                continue
            old.append(pr)
        pairs = old + new_pairs
        active = [g for g in active if not _divides(lh, lms[g])] + [k]

    red = _Reducer(p)
    for f in sorted(polys, key=max):
        red_now = _Reducer(p)
        for g in active:
            red_now.add(basis[g])
        h = red_now.reduce(f, max_terms)
        if h:
            update(_monic(h, p))

    processed = 0
    while pairs:
        best = min(range(len(pairs)), key=lambda t: (pairs[t][0], pairs[t][1]))
        _, _, i, j = pairs[best]
        pairs[best] = pairs[-1]
        pairs.pop()
        processed += 1
        if processed > max_pairs:
            raise BudgetExceeded(f"more than {max_pairs} S-pairs")
        red = _Reducer(p)
        for g in active:
            red.add(basis[g])
        h = red.reduce(_spoly(basis[i], basis[j], p), max_terms)
        if h:
            if check_binomial and len(h) > 2:
                raise BinomialClosureError(f"S-polynomial remainder with {len(h)} terms")
            update(_monic(h, p))

    return _interreduce([basis[g] for g in active], p)


def _interreduce(G: list[dict], p: int) -> list[dict]:
    G = sorted(G, key=max)
    minimal = []
    for f in G:
        lf = max(f)
        if not any(_divides(max(g), lf) for g in minimal):
            minimal.append(f)
    out = []
    for idx, f in enumerate(minimal):
        red = _Reducer(p)
        for k, g in enumerate(minimal):
            if k != idx:
                red.add(g)
        lm = max(f)
        tail = dict(f)
        c = tail.pop(lm)
        r = red.reduce(tail)
        r[lm] = c
        out.append(_monic(r, p))
    out.sort(key=max, reverse=True)
    return out


# -- public polynomial and ideal types ----------------------------------------


class Polynomial:
    """Immutable polynomial on a ``VarGrid`` over GF(p)."""

    __slots__ = ("grid", "p", "terms")

    def __init__(self, grid: VarGrid, p: int, terms: dict | None = None):
        self.grid = grid
        self.p = p
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != grid.nvars:
                raise ValueError("exponent length does not match the grid")
            c %= p
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def monomial(cls, grid, p, exps, coeff=1):
        return cls(grid, p, {tuple(exps): coeff})

    @classmethod
    def var(cls, grid, p, i, j):
        e = [0] * grid.nvars
        e[grid.index(i, j)] = 1
        return cls(grid, p, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> tuple:
        return max(self.terms)

    @property
    def lc(self) -> int:
        return self.terms[self.lm]

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items(), reverse=True)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return Polynomial(self.grid, self.p, _monic(self.terms, self.p))

    def _same_ring(self, other):
        if self.grid != other.grid or self.p != other.p:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.grid, self.p, out)

    def __neg__(self):
        return Polynomial(self.grid, self.p, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.grid, self.p, {e: c * other for e, c in self.terms.items()})
        self._same_ring(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.grid, self.p, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.grid == other.grid
            and self.p == other.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.grid, self.p, frozenset(self.terms.items())))

    def _coeff_str(self, c: int) -> tuple[str, str]:
        """Sign and magnitude of ``c`` in the symmetric residue range."""
        if c > self.p // 2:
            return "-", str(self.p - c)
        return "+", str(c)

    def _mono_str(self, e, style) -> str:
        parts = []
        for k, x in enumerate(e):
            if not x:
                continue
            name = self.grid.var_name(k, style)
            if x > 1:
                name += f"^{{{x}}}" if style == "latex" else f"^{x}"
            parts.append(name)
        if not parts:
            return "1"
        return "".join(parts) if style == "latex" else "*".join(parts)

    def render(self, style: str = "plain") -> str:
        """``plain``: ``x1*y2 - x2*y1``; ``latex``: ``x_1y_2-x_2y_1``."""
        if not self.terms:
            return "0"
        chunks = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            sign, mag = self._coeff_str(c)
            mono = self._mono_str(e, style)
            if mono == "1":
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}{mono}" if style == "latex" else f"{mag}*{mono}"
            if idx == 0:
                chunks.append(body if sign == "+" else "-" + body)
            elif style == "latex":
                chunks.append(sign + body)
            else:
                chunks.append(f" {sign} {body}")
        return "".join(chunks)

    def __repr__(self):
        return f"Polynomial({self.render()})"


@dataclass(frozen=True)
class Ideal:
    grid: VarGrid
    p: int
    gens: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(g for g in self.gens if not g.is_zero()))
        for g in self.gens:
            if g.grid != self.grid or g.p != self.p:
                raise ValueError("generator lives in a different ring")

    def is_zero(self) -> bool:
        return not self.gens

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.gens)

    def render(self, style: str = "plain") -> list[str]:
        return [g.render(style) for g in self.gens]

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.grid != other.grid or self.p != other.p:
            raise ValueError("ideals live in different rings")
        return Ideal(self.grid, self.p, self.gens + other.gens)


@dataclass(frozen=True)
class GroebnerBasis(Ideal):
    reduced: bool = True
    order: str = "lex"


# -- binomial edge ideals -------------------------------------------------


def _grid_for(G: Graph, m: int) -> VarGrid:
    return VarGrid(m, G.n, G.labels)


def build_gbei(G: Graph, m: int, p: int = DEFAULT_FIELD, skip=()) -> Ideal:
    """``J_{K_m,G}``: one 2-minor per row pair ``a < b`` and edge ``{k, l}``, ``k < l``.

    Generators are ordered by row pair, then edge, and stored monic with
    leading term ``x_{a,k} x_{b,l}``.  Edges touching a vertex in ``skip`` are
    left out while the grid keeps all columns (used for ``J_{K_m,G \\ v}`` inside
    the ring of ``G``).
    """
    if m < 2:
        raise ValueError("generalized binomial edge ideal needs m >= 2")
    grid = _grid_for(G, m)
    N = grid.nvars
    gens = []
    for a, b in combinations(range(1, m + 1), 2):
        for k, l in G.edges():
            if k in skip or l in skip:
                continue
            lead = [0] * N
            lead[grid.index(a, k)] += 1
            lead[grid.index(b, l)] += 1
            tail = [0] * N
            tail[grid.index(a, l)] += 1
            tail[grid.index(b, k)] += 1
            gens.append(Polynomial(grid, p, {tuple(lead): 1, tuple(tail): -1}))
    return Ideal(grid, p, tuple(gens))


def build_bei(G: Graph, p: int = DEFAULT_FIELD) -> Ideal:
    """``J_G = (x_i y_j - x_j y_i : {i, j} in E(G), i < j)``."""
    return build_gbei(G, 2, p)


def expected_generator_count(G: Graph, m: int) -> int:
    return comb(m, 2) * G.num_edges


def column_ideal(grid: VarGrid, p: int, v: int) -> Ideal:
    """``P_v = (x_{i,v} : 1 <= i <= m)``."""
    return Ideal(grid, p, tuple(Polynomial.var(grid, p, i, v) for i in range(1, grid.m + 1)))


# -- Groebner operations -------------------------------------------------------


def normal_form(f: Polynomial, B) -> Polynomial:
    """Remainder of ``f`` on division by ``B`` (polynomials or an Ideal)."""
    gens = B.gens if isinstance(B, Ideal) else tuple(B)
    for g in gens:
        f._same_ring(g)
    r = raw_normal_form(f.terms, [g.terms for g in gens], f.p)
    return Polynomial(f.grid, f.p, r)


def buchberger(I: Ideal, max_pairs: int = DEFAULT_MAX_PAIRS, max_terms: int = DEFAULT_MAX_TERMS) -> GroebnerBasis:
    raw = raw_groebner([g.terms for g in I.gens], I.p, max_pairs, max_terms)
    return GroebnerBasis(I.grid, I.p, tuple(Polynomial(I.grid, I.p, f) for f in raw))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    f._same_ring(g)
    return Polynomial(f.grid, f.p, _spoly(_monic(f.terms, f.p), _monic(g.terms, g.p), f.p))


def initial_ideal(B: GroebnerBasis) -> Ideal:
    """Minimal monomial generators of the leading-term ideal."""
    lms = sorted({g.lm for g in B.gens}, key=lambda e: (sum(e), tuple(-x for x in e)))
    minimal = []
    for e in lms:
        if not any(_divides(d, e) for d in minimal):
            minimal.append(e)
    minimal.sort(reverse=True)
    return Ideal(B.grid, B.p, tuple(Polynomial(B.grid, B.p, {e: 1}) for e in minimal))


def is_squarefree(M: Ideal) -> bool:
    if not M.is_monomial():
        raise ValueError("is_squarefree expects a monomial ideal")
    return all(x <= 1 for g in M.gens for e in g.terms for x in e)


def ideal_equal(I: Ideal, J: Ideal, **budget) -> bool:
    if I.grid != J.grid or I.p != J.p:
        raise ValueError("ideals live in different rings")
    return buchberger(I, **budget).gens == buchberger(J, **budget).gens


def ideal_intersection(I: Ideal, J: Ideal, **budget) -> GroebnerBasis:
    """``I \\cap J`` by eliminating ``t`` from ``t I + (1 - t) J``, ``t`` above every grid variable."""
    if I.grid != J.grid or I.p != J.p:
        raise ValueError("ideals live in different rings")
    p = I.p
    polys = []
    for g in I.gens:
        polys.append({(1,) + e: c for e, c in g.terms.items()})
    for g in J.gens:
        h = {(0,) + e: c for e, c in g.terms.items()}
        for e, c in g.terms.items():
            h[(1,) + e] = (-c) % p
        polys.append(h)
    gb = raw_groebner(polys, p, check_binomial=False, **budget)
    out = [
        Polynomial(I.grid, p, {e[1:]: c for e, c in f.items()})
        for f in gb
        if all(e[0] == 0 for e in f)
    ]
    return GroebnerBasis(I.grid, p, tuple(out))
