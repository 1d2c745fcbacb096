from __future__ import annotations

import itertools

import pytest

from wittflag.star_monomial import (
    _nonlaurent_vectors,
    build_repring,
    claimed_presentation,
    dual,
    lemma_suite_section1,
    self_dual_monomials,
    tate_of_signed_module,
    verify_tate_classification,
)


def test_type_a_ring_and_duality():
    ring = build_repring("A", 0, (3, 5))
    assert "x5_2" not in ring.names
    assert ring.laurent[ring.index("x3_1")]
    assert dual(ring, ring.vec(x1_1=1)) == (1, ring.vec(x3_1=-1, x2_1=1))
    assert dual(ring, ring.unit()) == (1, ring.unit())


def test_type_b_and_c_rings():
    c = build_repring("C", 1, (1,))
    assert c.laurent[c.index("x1_1")] and not c.laurent[c.index("z1")]
    c2 = build_repring("C", 2, (1,))
    assert dual(c2, c2.vec(z2=1)) == (1, c2.vec(z2=1))
    b = build_repring("B", 0, (2,))
    assert b.normalize(b.vec(t=2)) == b.vec(x2_1=-1)


def test_involution_is_an_involution():
    for kind, m, blocks in [("A", 0, (2, 3)), ("B", 1, (2, 1)), ("B", 0, (2, 2)), ("C", 2, (3,))]:
        ring = build_repring(kind, m, blocks)
        for i in range(ring.nvars):
            e = tuple(1 if j == i else 0 for j in range(ring.nvars))
            s, d = ring.dual(e)
            s2, back = ring.dual(d)
            assert back == e and s * s2 == 1


def test_self_dual_monomials_examples():
    ring = build_repring("A", 0, (2, 2))
    assert ring.vec(x1_1=1, x1_2=1) in self_dual_monomials(ring, 2)
    assert self_dual_monomials(ring, 0) == [ring.unit()]
    ring = build_repring("A", 0, (1, 2))
    generator = ring.vec(x1_2=2, x1_1=1)  # x1_2 times its dual
    want = {ring.unit(), generator}
    assert set(self_dual_monomials(ring, 2)) == want


def _brute_self_dual(ring, bound, box=4):
    """Enumerate every monomial with Laurent exponents in [-box, box]."""
    lau = [i for i in range(ring.nvars) if ring.laurent[i]]
    out = set()
    for e in _nonlaurent_vectors(ring, bound):
        for lv in itertools.product(range(-box, box + 1), repeat=len(lau)):
            v = list(e)
            for i, a in zip(lau, lv):
                v[i] = a
            v = tuple(v)
            if ring.dual(v) == (1, v):
                out.add(v)
    return out


@pytest.mark.parametrize("kind,m,blocks", [("A", 0, (1, 2)), ("A", 0, (2, 2)),
                                           ("A", 0, (1, 1, 2)), ("C", 1, (1,)),
                                           ("C", 0, (2, 1)), ("B", 1, (2,))])
def test_self_dual_monomials_match_enumeration(kind, m, blocks):
    ring = build_repring(kind, m, blocks)
    assert set(self_dual_monomials(ring, 3)) == _brute_self_dual(ring, 3)


@pytest.mark.parametrize("kind,m,blocks", [("A", 0, (1, 2)), ("A", 0, (2, 2)),
                                           ("C", 1, (1,)), ("B", 0, (2,)), ("B", 2, (1, 1)),
                                           ("B", 2, (2,)), ("A", 0, (3, 3))])
def test_tate_classification(kind, m, blocks):
    rep = verify_tate_classification(build_repring(kind, m, blocks), 6)
    assert rep.ok, (rep.counts_self_dual, rep.counts_claimed)


def test_presentation_generators():
    pres = claimed_presentation(build_repring("A", 0, (2, 2)))
    assert set(pres.generators) == {"alpha1_1", "alpha1_2"}
    assert pres.extra[0] == "epsilon"
    pres = claimed_presentation(build_repring("C", 1, (1,)))
    assert set(pres.generators) == {"gamma1"}


def test_signed_module_tate():
    assert tate_of_signed_module(["a"], {"a": (1, "a")}).plus == ["a"]
    t = tate_of_signed_module(["a", "b"], {"a": (1, "b"), "b": (1, "a")})
    assert t.plus == [] and t.minus == []
    t = tate_of_signed_module(["a"], {"a": (-1, "a")})
    assert t.minus == ["a"] and t.plus == []
    t = tate_of_signed_module(["a"], {"a": (-1, "a")}, char=2)
    assert t.minus == ["a"] and t.plus == ["a"]
    with pytest.raises(ValueError):
        tate_of_signed_module(["a", "b"], {"a": (1, "b"), "b": (1, "b")})


def test_lemma_suite():
    checks = lemma_suite_section1(6)
    assert len(checks) == 7
    assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]


def test_bad_parameters():
    with pytest.raises(ValueError):
        build_repring("A", 0, ())
    with pytest.raises(ValueError):
        build_repring("B", 0, ())
    with pytest.raises(ValueError):
        build_repring("E", 0, (1,))
