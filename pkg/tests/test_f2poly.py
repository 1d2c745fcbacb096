from __future__ import annotations

import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from wittflag.f2poly import (
    INFINITE,
    Poly2,
    PolyRing,
    binom_mod2,
    colon_ideal,
    exact_divide,
    format_poly,
    groebner,
    is_regular_sequence,
    multinomial,
    parse_poly,
    quotient_dimension,
    solve_gf2,
    solve_linear_combination,
)
from wittflag.relations import mu_family

R2 = PolyRing(["x", "y"])
R3 = PolyRing(["x", "y", "z"])


def monomials_st(nvars: int, max_exp: int = 2):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def poly_st(ring: PolyRing, max_terms: int = 5, max_exp: int = 2):
    return st.lists(monomials_st(ring.nvars, max_exp), max_size=max_terms).map(
        lambda ts: Poly2(ring, ts))


# ------------------------------------------------------------ binomials

@given(st.integers(0, 64), st.integers(0, 64))
def test_binom_mod2_matches_integer_binomial(n, k):
    assert binom_mod2(n, k) == math.comb(n, k) % 2


@given(st.integers(0, 200))
def test_binom_of_odd_top_and_one_is_one(n):
    assert binom_mod2(2 * n + 1, 1) == 1


def test_binom_examples():
    assert binom_mod2(5, 2) == 0
    assert binom_mod2(20, 2) == 0
    assert binom_mod2(3, 5) == 0


# ----------------------------------------------------------- arithmetic

def test_characteristic_two_and_frobenius():
    x, y = R2.gens()
    assert (x + y) + (x + y) == R2.zero()
    assert (x + y) ** 2 == x ** 2 + y ** 2


def test_homogeneous_component_of_mu3():
    fam = mu_family((3, 5))
    assert fam.reduced[3].homogeneous_component(0) == fam.ring.const(1)


@given(poly_st(R3), poly_st(R3), poly_st(R3))
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + a == R3.zero()


@given(poly_st(R3, max_terms=6, max_exp=3))
def test_format_parse_round_trip(p):
    assert parse_poly(R3, format_poly(p)) == p


def test_format_grammar():
    x, y = R2.gens()
    assert format_poly(R2.zero()) == "0"
    assert format_poly(x ** 2) == "x^2"
    assert format_poly(x * y + y + 1) == "x*y + y + 1"


def test_weighted_order_prefers_weight_over_lex():
    ring = PolyRing(["a", "b"], [1, 3])
    a, b = ring.gens()
    assert (a ** 2 + b).lm() == b.lm()


# -------------------------------------------------------------- groebner

def test_groebner_small_cases():
    x, y = R2.gens()
    assert groebner([x], R2).polys == [x]
    gb = groebner([x + 1, x + y], R2)
    assert set(gb.polys) == {x + 1, y + 1}


def test_mu_ideal_eliminates_to_cubic():
    fam = mu_family((3, 5))
    gb = groebner([fam.reduced[i] for i in (1, 2, 3)], fam.ring)
    b, c, d = (fam.ring.var(n) for n in ("b1_1", "b1_2", "b2_2"))
    assert gb.contains(b ** 3 + b ** 2 + b + 1)
    assert gb.contains(c + b)
    assert gb.contains(d + b + b ** 2)
    assert gb.quotient_dimension() == 3 == multinomial([1, 2])


def test_quotient_dimension_trivial_cases():
    x, y = R2.gens()
    assert quotient_dimension([x, y], R2) == 1
    assert quotient_dimension([x * y], R2) == INFINITE
    assert quotient_dimension([x ** 2, y ** 3], R2) == 6
    assert quotient_dimension([x + 1, x], R2) == 0


def _sympy_reduced_basis(polys, ring):
    syms = sympy.symbols(" ".join(ring.names))
    exprs = []
    for p in polys:
        e = sum((sympy.Mul(*[s ** k for s, k in zip(syms, t)]) for t in p.terms),
                sympy.Integer(0))
        exprs.append(e)
    gb = sympy.groebner(exprs, *syms, modulus=2, order="grevlex")
    out = set()
    for g in gb.exprs:
        terms = sympy.Poly(g, *syms, modulus=2).monoms()
        out.add(frozenset(terms))
    return out


@settings(max_examples=60, deadline=None)
@given(st.lists(poly_st(R3, max_terms=4, max_exp=2), min_size=1, max_size=3))
def test_groebner_matches_sympy(gens):
    gens = [g for g in gens if g.terms]
    if not gens:
        return
    ours = {frozenset(p.terms) for p in groebner(gens, R3).polys}
    assert ours == _sympy_reduced_basis(gens, R3)


@settings(max_examples=40, deadline=None)
@given(st.lists(poly_st(R3, max_terms=4), min_size=1, max_size=3),
       st.lists(poly_st(R3, max_terms=3), min_size=20, max_size=20), poly_st(R3))
def test_normal_form_properties(gens, coeffs, f):
    gb = groebner(gens, R3)
    nf = gb.normal_form(f)
    assert gb.normal_form(nf) == nf
    assert gb.contains(f + nf)
    for i in range(len(coeffs)):
        member = R3.zero()
        for j, g in enumerate(gens):
            member = member + coeffs[(i + j) % len(coeffs)] * g
        assert gb.contains(member)


def test_colon_ideal_and_exact_division():
    x, y = R2.gens()
    gb = groebner([x * y], R2)
    colon = colon_ideal(gb, x)
    assert groebner(colon, R2).polys == [y]
    assert exact_divide(x * y + x, x) == y + 1
    with pytest.raises(ValueError):
        exact_divide(y, x)


# ------------------------------------------------------------ regularity

def test_regularity_verdicts():
    fam = mu_family((3, 5))
    v = is_regular_sequence(fam.basis_polys(), "LEADING-FORM", fam.ring)
    assert v.status == "REGULAR" and v.leading_form_dimension == 3
    one = PolyRing(["x"])
    x = one.var("x")
    assert is_regular_sequence([x, x], "DIRECT", one).status == "NOT_REGULAR"
    assert is_regular_sequence([x, x], "LEADING-FORM", one).status == "INCONCLUSIVE"
    a, b = R2.gens()
    assert is_regular_sequence([a * b, a], "DIRECT", R2).status == "NOT_REGULAR"
    assert is_regular_sequence([a * b, a + b], "LEADING-FORM", R2).status == "REGULAR"
    assert is_regular_sequence([a + 1, a], "DIRECT", R2).status == "NOT_REGULAR"


def test_direct_regularity_on_xi_prefix():
    from wittflag.relations import xi_family
    fam = xi_family(2, (3, 5))
    v = is_regular_sequence([fam.reduced[1], fam.reduced[2]], "DIRECT", fam.ring)
    assert v.status == "REGULAR"


# ------------------------------------------------------------ linear solve

@given(st.lists(st.integers(0, 255), max_size=8), st.integers(0, 255))
def test_solve_gf2_against_subset_enumeration(cols, target):
    reachable = {}
    for mask in range(1 << len(cols)):
        v = 0
        for j, c in enumerate(cols):
            if mask >> j & 1:
                v ^= c
        reachable.setdefault(v, mask)
    sol = solve_gf2(cols, target)
    if target in reachable:
        assert sol is not None
        v = 0
        for j, c in enumerate(cols):
            if sol >> j & 1:
                v ^= c
        assert v == target
    else:
        assert sol is None


def test_linear_combination_examples():
    fam = mu_family((3, 5))
    comb = solve_linear_combination(fam.reduced[4], [fam.reduced[i] for i in (1, 2, 3)])
    assert comb.found and all(c.is_zero() for c in comb.coefficients)
    comb = solve_linear_combination(fam.ring.zero(), [fam.reduced[1]])
    assert comb.found and comb.coefficients[0].is_zero()
    x, y = R2.gens()
    assert solve_linear_combination(x, [y]).status == "NONE"
    comb = solve_linear_combination(x * y + x, [x], "SUBRING", ["y"])
    assert comb.found and comb.coefficients[0] == y + 1
    assert solve_linear_combination(x * y ** 5, [x], "SUBRING", ["y"], 2).status == "NONE_AT_BOUND"


@given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_multinomial(parts):
    expected = math.factorial(sum(parts))
    for p in parts:
        expected //= math.factorial(p)
    assert multinomial(parts) == expected
