from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittflag.suites import partitions
from wittflag.witt import (
    ADDITIVE_ONLY,
    RING,
    brute_exterior_ranks,
    compute,
    compute_type_a,
    compute_type_b,
    compute_type_c,
    compute_type_d,
    exterior_ranks,
    exterior_ranks_zeta,
    rank_table,
    type_b_index_sets,
    type_d_additive_scalars,
    type_d_case,
    type_d_index_set,
)


# ---------------------------------------------------------- exterior ranks

def _subset_oracle(f, g):
    """Enumerate subsets of the generators and add up their degrees."""
    degs = [1] * f + [3] * g
    out = [0, 0, 0, 0]
    for r in range(len(degs) + 1):
        for combo in itertools.combinations(range(len(degs)), r):
            out[sum(degs[i] for i in combo) % 4] += 1
    return tuple(out)


def test_exterior_examples():
    assert exterior_ranks(2, 0) == (1, 2, 1, 0)
    assert exterior_ranks(0, 0) == (1, 0, 0, 0)
    assert exterior_ranks(1, 1) == (2, 1, 0, 1)
    assert brute_exterior_ranks(0, 1) == (1, 0, 0, 1)
    assert brute_exterior_ranks(4, 0) == (2, 4, 6, 4)


def test_all_residue_classes_against_expansion():
    seen = set()
    for f in range(13):
        for g in range(13 - f):
            z = exterior_ranks(f, g)
            assert z == brute_exterior_ranks(f, g) == exterior_ranks_zeta(f, g)
            assert sum(z) == 2 ** (f + g)
            seen.add((f % 4, g % 4))
    assert len(seen) == 16


@given(st.integers(0, 7), st.integers(0, 7))
def test_expansion_matches_subset_enumeration(f, g):
    assert brute_exterior_ranks(f, g) == _subset_oracle(f, g)


def test_large_arguments_stay_exact():
    z = exterior_ranks(40, 13)
    assert z == exterior_ranks_zeta(40, 13) and sum(z) == 2 ** 53
    with pytest.raises(ValueError):
        brute_exterior_ranks(20, 5)


# --------------------------------------------------------------- type A

def test_type_a_projective_plane():
    p = compute_type_a((1, 2))
    assert p.ranks == (1, 0, 0, 0) and p.exterior == []
    assert [q.text() for q in p.relations] == ["b1_2"]


def test_type_a_full_flags_su3():
    p = compute_type_a((1, 1, 1))
    assert p.exterior == [("v1", -1)] and p.ranks == (1, 1, 0, 0)


def test_type_a_scalar_and_rank_count():
    p = compute_type_a((3, 5))
    assert p.scalar_a == 3 and len(p.exterior) == 1


def test_type_a_degree_rule():
    for n in range(2, 9):
        for blocks in partitions(n):
            p = compute_type_a(blocks)
            degs = [d for _, d in p.exterior]
            if degs:
                assert all(d == -1 for d in degs[:-1])
                assert degs[-1] == (-3 if n % 4 == 2 else -1)


def test_type_a_closed_table_rows():
    # r = 2 with n not 2 mod 4: blocks (1,1,1,1,1) has n = 5, r = 2
    p = compute_type_a((1, 1, 1, 1, 1))
    assert p.graded_ranks == (1, 2, 1, 0)
    assert rank_table("A", None, (1, 1, 1, 1, 1)).closed_form == (1, 2, 1, 0)
    assert rank_table("A", None, (4,)).closed_form == (1, 0, 0, 0)


# --------------------------------------------------------------- type B

def test_type_b_index_sets():
    s, sbar = type_b_index_sets(2, (3, 5))
    assert s == [1, 2, 4, 6, 8] and sbar == [3, 5, 7, 9]
    p = compute_type_b(2, (3, 5))
    assert len(p.exterior) == 5 and p.exterior[-1][0] == "c"


def test_type_b_single_block():
    p = compute_type_b(0, (1,))
    assert p.relations == [] and len(p.exterior) == 1


def test_type_b_all_even_special_relation():
    p = compute_type_b(2, (2,))
    texts = [q.text() for q in p.relations]
    assert "b2*a1_1" in texts
    assert all(name != "c" for name, _ in p.exterior)


def test_type_b_generator_count():
    for n in range(1, 8):
        for m in range(0, n):
            for blocks in partitions(n - m):
                p = compute_type_b(m, blocks)
                assert len(p.exterior) == sum(b - b // 2 for b in blocks)


# --------------------------------------------------------------- type C

def test_type_c_anchor():
    p = compute_type_c(1, (1,))
    assert p.ranks == (2, 1, 0, 1)
    assert p.exterior == [("u1", -1), ("v1", -3)]
    assert "odd_index_count" in p.diagnostics


def test_type_c_scalar():
    assert compute_type_c(2, (3, 5)).scalar_a == 12


@pytest.mark.parametrize("n", range(1, 7))
def test_type_c_point(n):
    p = compute_type_c(n, ())
    assert p.scalar_a == 1 and p.ranks == (1, 0, 0, 0)


# --------------------------------------------------------------- type D

def test_type_d_clauses():
    assert type_d_case(0, (3,)) == 1
    assert type_d_case(2, (1,)) == 2
    assert type_d_case(3, (1,)) == 3
    assert type_d_case(2, (1, 1)) == 4
    assert type_d_case(0, (4,)) == 5
    assert type_d_case(2, (2,)) == 0


def test_type_d_first_clause():
    p = compute_type_d(0, (1, 2))
    assert p.structure == RING and p.diagnostics["clause"] == 1


def test_type_d_v_degree():
    p = compute_type_d(0, (4,))
    assert ("v", -1) in p.exterior
    p = compute_type_d(0, (3, 3))
    assert ("v_plus", -3) in p.exterior and ("v_minus", -3) in p.exterior


def test_type_d_additive_case():
    p = compute_type_d(2, (2,))
    assert p.structure == ADDITIVE_ONLY
    a, b, c = type_d_additive_scalars(2, (2,))
    assert (a, b, c) == (3, 1, 1)
    assert p.ranks == (3, 3, 0, 0)


def test_type_d_index_set():
    assert type_d_index_set(0, (3,)) == [1]
    assert type_d_index_set(0, (4,)) == [1, 3]


def test_type_d_d_generators():
    p = compute_type_d(2, (1,))
    assert [q.text() for q in p.relations[:2]] == ["b1 + d1 + d2", "d1*d2"]
    assert p.scalar_a == 2


# ----------------------------------------------------- cross-type checks

ISOMORPHIC = [
    (("A", None, (1, 1)), ("B", 0, (1,))),        # projective line
    (("A", None, (1, 1)), ("C", 0, (1,))),
    (("A", None, (1, 3)), ("B", 0, (2,))),        # projective 3-space
    (("A", None, (1, 3)), ("D", 0, (3,))),
    (("A", None, (2, 2)), ("D", 2, (1,))),        # 4-dimensional quadric
    (("A", None, (1, 1, 1, 1)), ("D", 0, (1, 1, 1))),
    (("B", 1, (1,)), ("C", 0, (2,))),             # 3-dimensional quadric
    (("B", 0, (1, 1)), ("C", 0, (1, 1))),
    (("D", 0, (4,)), ("D", 3, (1,))),             # 6-dimensional quadric
]


@pytest.mark.parametrize("left,right", ISOMORPHIC)
def test_isomorphic_varieties_agree(left, right):
    assert compute(*left).ranks == compute(*right).ranks


def test_projective_three_space_as_type_c_follows_formula():
    # The same variety as type C; the emitted (f, g) follows the closed formula.
    p = compute("C", 1, (1,))
    assert p.ranks == (2, 1, 0, 1)
    assert compute("A", None, (1, 3)).ranks == (1, 1, 0, 0)


@pytest.mark.parametrize("type_,m", [("A", None), ("B", 3), ("C", 3), ("D", 3), ("D", 1)])
def test_points(type_, m):
    blocks = (4,) if type_ == "A" else ()
    p = compute(type_, m, blocks)
    assert p.scalar_a == 1 and p.ranks == (1, 0, 0, 0)


def test_totals_and_json_schema():
    for n in range(1, 7):
        for type_ in "BCD":
            for m in range(0, n + 1):
                for blocks in partitions(n - m):
                    p = compute(type_, m, blocks)
                    if p.structure == RING:
                        assert sum(p.ranks) == p.scalar_a * 2 ** len(p.exterior)
                    data = json.loads(json.dumps(p.to_json()))
                    assert set(data) >= {"type", "params", "structure", "scalar_a",
                                         "generators", "relations", "exterior",
                                         "ranks", "checks"}
                    assert set(data["ranks"]) == {"0", "-1", "-2", "-3"}


def test_invalid_parameters():
    with pytest.raises(ValueError):
        compute("A", None, (0,))
    with pytest.raises(ValueError):
        compute("A", None, ())
    with pytest.raises(ValueError):
        compute("B", None, (1,))
    with pytest.raises(ValueError):
        compute("E", 1, (1,))


def test_text_uses_subscript_notation():
    text = compute("A", None, (2, 3)).text()
    assert "b_1^{(1)}" in text and "W^-" in text
