import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from regwitness.enumeration import enumerate_upto
from regwitness.families import complete, cycle, fixture, path, star
from regwitness.graph import Graph
from regwitness.poly import (
    BinomialClosureError,
    BudgetExceeded,
    Ideal,
    Polynomial,
    VarGrid,
    buchberger,
    build_bei,
    build_gbei,
    check_field,
    column_ideal,
    expected_generator_count,
    ideal_equal,
    ideal_intersection,
    initial_ideal,
    is_squarefree,
    normal_form,
    raw_groebner,
    s_polynomial,
)

from helpers import graphs

P = 32003

G1_BEI = ["x_1y_2-x_2y_1", "x_1y_4-x_4y_1", "x_2y_3-x_3y_2", "x_3y_4-x_4y_3", "x_4y_6-x_6y_4"]


def sympy_gb(I: Ideal):
    """Reduced lex GB from sympy, as sorted (monic) term dictionaries."""
    syms = sympy.symbols(f"v0:{I.grid.nvars}")
    exprs = [sum(c * sympy.prod(s**x for s, x in zip(syms, e)) for e, c in g.terms.items()) for g in I.gens]
    if not exprs:
        return []
    gb = sympy.groebner(exprs, *syms, order="lex", modulus=I.p)
    out = []
    for g in gb.exprs:
        poly = sympy.Poly(g, *syms, modulus=I.p)
        terms = {m: int(c) % I.p for m, c in poly.terms()}
        lc = terms[max(terms)]
        inv = pow(lc, -1, I.p)
        out.append({m: c * inv % I.p for m, c in terms.items()})
    return sorted(out, key=lambda t: max(t), reverse=True)


def test_field_checks():
    assert check_field(2) == 2
    for bad in (1, 4, 32001):
        with pytest.raises(ValueError):
            check_field(bad)


def test_bei_of_fixture_renders_exactly():
    G = fixture("paper_G1")
    assert build_bei(G).render("latex") == G1_BEI


def test_generator_counts():
    for G in enumerate_upto(5):
        for m in (2, 3, 4):
            I = build_gbei(G, m)
            assert len(I.gens) == expected_generator_count(G, m)
            for g in I.gens:
                assert g.lc == 1 and len(g.terms) == 2 and g.degree == 2


def test_generators_are_monic_with_ordered_leading_term():
    I = build_bei(cycle(4))
    for g in I.gens:
        (lead, _), (_, c2) = g.sorted_terms()
        assert c2 == P - 1
    assert I.render()[0] == "x1*y2 - x2*y1"
    assert I.render()[-1] == "x3*y4 - x4*y3"


def test_var_names():
    grid = VarGrid(3, 4)
    assert grid.var_name(grid.index(2, 3)) == "x{2,3}"
    assert grid.var_name(grid.index(2, 3), "latex") == "x_{23}"
    assert VarGrid(2, 3).var_name(4) == "y2"


@pytest.mark.parametrize("G,m", [(path(3), 2), (cycle(4), 2), (star(3), 2), (complete(3), 2), (path(3), 3),
                                 (complete(4), 2), (cycle(3), 3)])
def test_groebner_matches_sympy(G, m):
    I = build_gbei(G, m)
    ours = [g.terms for g in buchberger(I).gens]
    assert ours == sympy_gb(I)


@given(graphs(min_n=2, max_n=4, connected=True))
def test_groebner_matches_sympy_random(G):
    I = build_bei(G)
    assert [g.terms for g in buchberger(I).gens] == sympy_gb(I)


def test_groebner_matches_sympy_small_prime():
    I = build_gbei(cycle(4), 2, p=7)
    assert [g.terms for g in buchberger(I).gens] == sympy_gb(I)


def test_star_labeling_gives_cubic_element():
    # centre labelled 1: the lex GB picks up x2 x3 y1-type cubic remainders
    B = buchberger(build_bei(star(2)))
    assert max(g.degree for g in B.gens) == 3
    assert max(g.degree for g in buchberger(build_bei(path(3))).gens) == 2


def test_buchberger_criterion_exhaustive():
    for G in enumerate_upto(5):
        B = buchberger(build_bei(G))
        for i, f in enumerate(B.gens):
            for g in B.gens[i + 1:]:
                assert normal_form(s_polynomial(f, g), B).is_zero()
            assert f.lc == 1
            assert len(f.terms) <= 2  # binomial closure
        # reduced: no term of any element is divisible by another leading monomial
        lms = [g.lm for g in B.gens]
        for f in B.gens:
            for e in f.terms:
                for lm in lms:
                    if lm != f.lm:
                        assert not all(a >= b for a, b in zip(e, lm))


@given(graphs(min_n=2, max_n=5), st.randoms(use_true_random=False))
def test_reduced_basis_ignores_generator_order(G, rnd):
    I = build_bei(G)
    gens = list(I.gens)
    rnd.shuffle(gens)
    J = Ideal(I.grid, I.p, tuple(gens))
    assert buchberger(I).gens == buchberger(J).gens
    assert buchberger(buchberger(I)).gens == buchberger(I).gens


@given(graphs(min_n=2, max_n=4, connected=True), st.data())
def test_division_remainder_differs_by_ideal_member(G, data):
    B = buchberger(build_bei(G))
    grid = B.grid
    k = data.draw(st.integers(1, 4))
    terms = {}
    for _ in range(k):
        e = tuple(data.draw(st.integers(0, 2)) for _ in range(grid.nvars))
        terms[e] = data.draw(st.integers(1, P - 1))
    f = Polynomial(grid, P, terms)
    r = normal_form(f, B)
    assert normal_form(f - r, B).is_zero()
    assert normal_form(r, B) == r


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        buchberger(build_bei(complete(5)), max_pairs=3)
    with pytest.raises(BudgetExceeded):
        buchberger(build_bei(cycle(5)), max_terms=1)


def test_binomial_closure_assertion_is_live():
    # S(x^2 + y, xy + z + w) = y^2 - xz - xw is irreducible with three terms
    f = {(2, 0, 0, 0): 1, (0, 1, 0, 0): 1}
    g = {(1, 1, 0, 0): 1, (0, 0, 1, 0): 1, (0, 0, 0, 1): 1}
    with pytest.raises(BinomialClosureError):
        raw_groebner([f, g], P, check_binomial=True)
    assert raw_groebner([f, g], P, check_binomial=False)


def test_initial_ideal_and_squarefree():
    M = initial_ideal(buchberger(build_bei(path(3))))
    assert is_squarefree(M)
    assert [g.render() for g in M.gens] == ["x1*y2", "x2*y3"]
    with pytest.raises(ValueError):
        is_squarefree(build_bei(path(3)))


def test_ideal_equality_controls():
    assert ideal_equal(build_bei(cycle(3)), build_bei(complete(3)))
    assert not ideal_equal(build_bei(path(3)), build_bei(complete(3)))
    with pytest.raises(ValueError):
        ideal_equal(build_bei(path(3)), build_bei(path(4)))


def test_intersection_of_coordinate_ideals():
    grid = VarGrid(2, 1)
    x, y = Polynomial.var(grid, P, 1, 1), Polynomial.var(grid, P, 2, 1)
    got = ideal_intersection(Ideal(grid, P, (x,)), Ideal(grid, P, (y,)))
    assert [g.render() for g in got.gens] == ["x1*y1"]


def test_intersection_matches_minimal_primes_of_path():
    # J_{P_3} is the intersection of J_{K_3} with the column ideal of the middle vertex
    G = path(3)
    J = build_bei(G)
    K = build_bei(complete(3))
    got = ideal_intersection(K, column_ideal(J.grid, P, 2))
    assert ideal_equal(Ideal(J.grid, P, got.gens), J)
    # dropping the column ideal loses the identity
    assert not ideal_equal(K, J)


def test_intersection_contained_in_both():
    J1 = build_bei(path(3))
    J2 = build_bei(Graph.from_edges(3, [(1, 3)]))
    inter = ideal_intersection(J1, J2)
    B1, B2 = buchberger(J1), buchberger(J2)
    for g in inter.gens:
        assert normal_form(g, B1).is_zero() and normal_form(g, B2).is_zero()
    # products lie in the intersection
    prod = J1.gens[0] * J2.gens[0]
    assert normal_form(prod, buchberger(Ideal(J1.grid, P, inter.gens))).is_zero()


def test_skip_drops_edges_at_vertex():
    I = build_gbei(path(4), 2, skip=(2,))
    assert I.render() == ["x3*y4 - x4*y3"]
