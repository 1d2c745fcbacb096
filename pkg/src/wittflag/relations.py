"""The mu, nu and xi relation families and their regularity and reduction checks.

A block of size n contributes canonical variables ``b{i}_{p}`` for
1 <= i <= n//2 (weight i); the remaining exterior powers are aliased by
b_i = b_{n-i} and b_0 = b_n = 1.  The nu and xi families add ``a{i}`` for
1 <= i <= m, aliased by a_i = a_{2m-i} (nu) or a_i = a_{2m+1-i} (xi).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .f2poly import (
    Combination,
    GroebnerBasis,
    Poly2,
    PolyRing,
    RegularityVerdict,
    binom_mod2,
    groebner,
    is_regular_sequence,
    multinomial,
    solve_linear_combination,
)

MU, NU, XI = "MU", "NU", "XI"


def _check_blocks(blocks: Sequence[int]) -> tuple[int, ...]:
    blocks = tuple(int(b) for b in blocks)
    if any(b <= 0 for b in blocks):
        raise ValueError(f"block sizes must be positive: {blocks}")
    return blocks


def even_first_order(blocks: Sequence[int]) -> tuple[int, ...]:
    """Positions of the blocks with the even ones first (stable)."""
    return tuple(sorted(range(len(blocks)), key=lambda p: blocks[p] % 2))


def block_names(blocks: Sequence[int], prefix: str = "b") -> list[tuple[str, int]]:
    out = []
    for p, n in enumerate(blocks, start=1):
        for i in range(1, n // 2 + 1):
            out.append((f"{prefix}{i}_{p}", i))
    return out


def side_names(m: int, prefix: str = "a") -> list[tuple[str, int]]:
    return [(f"{prefix}{i}", (i + 1) // 2) for i in range(1, m + 1)]


def make_ring(m: int | None, blocks: Sequence[int], side_prefix: str = "a",
              block_prefix: str = "b") -> PolyRing:
    named = (side_names(m, side_prefix) if m else []) + block_names(blocks, block_prefix)
    return PolyRing([n for n, _ in named], [w for _, w in named])


def block_powers(ring: PolyRing, n: int, p: int, prefix: str = "b") -> list[Poly2]:
    """[beta_0, ..., beta_n] for block p of size n, with aliasing applied."""
    out = []
    for i in range(n + 1):
        j = min(i, n - i)
        out.append(ring.const(1) if j == 0 else ring.var(f"{prefix}{j}_{p}"))
    return out


def mu_polys(ring: PolyRing, blocks: Sequence[int], prefix: str = "b") -> list[Poly2]:
    """Unreduced mu_0..mu_N: the coefficients of prod_p sum_i beta_i^(p) t^i."""
    acc = [ring.const(1)]
    for p, n in enumerate(blocks, start=1):
        bp = block_powers(ring, n, p, prefix)
        nxt = [ring.zero() for _ in range(len(acc) + n)]
        for i, a in enumerate(acc):
            if not a.terms:
                continue
            for j, b in enumerate(bp):
                nxt[i + j] = nxt[i + j] + a * b
        acc = nxt
    return acc


def alpha_powers(ring: PolyRing, m: int, kind: str, prefix: str = "a") -> list[Poly2]:
    """[alpha_0, ..., alpha_top] with top = 2m (nu) or 2m+1 (xi)."""
    top = 2 * m if kind == NU else 2 * m + 1
    out = []
    for i in range(top + 1):
        j = i if i <= m else top - i
        out.append(ring.const(1) if j == 0 else ring.var(f"{prefix}{j}"))
    return out


@dataclass
class Reduction:
    index: int
    candidates: list[int]
    combination: Combination
    normal_form_zero: bool

    @property
    def ok(self) -> bool:
        return self.combination.found and self.normal_form_zero


@dataclass
class RegularityReport:
    status: str
    stages: list[RegularityVerdict] = field(default_factory=list)
    eliminated: dict[str, Poly2] = field(default_factory=dict)

    @property
    def regular(self) -> bool:
        return self.status == "REGULAR"


@dataclass
class RelationFamily:
    """One of the three families on its polynomial ring.

    For MU, ``members`` holds the unreduced mu_0..mu_{N//2} and ``reduced``
    adds the binomial constants so every reduced member has rank zero.  For
    NU and XI the members already carry their constants.
    """

    kind: str
    m: int | None
    blocks: tuple[int, ...]
    ring: PolyRing
    members: dict[int, Poly2]
    reduced: dict[int, Poly2]
    basis_set: list[int]
    block_order: tuple[int, ...]
    side_prefix: str = "a"
    block_prefix: str = "b"
    _gb: GroebnerBasis | None = field(default=None, repr=False)

    @property
    def N(self) -> int:
        return sum(self.blocks)

    @property
    def n(self) -> int:
        return (self.m or 0) + sum(self.blocks)

    @property
    def h(self) -> int:
        """Number of generators of the polynomial ring that survive the basis."""
        half = sum(b // 2 for b in self.blocks)
        if self.kind == MU:
            return half
        return self.m // 2 + half

    def basis_polys(self) -> list[Poly2]:
        return [self.reduced[i] for i in self.basis_set]

    def basis_groebner(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = groebner(self.basis_polys(), self.ring)
        return self._gb

    def rank_mod2(self, p: Poly2) -> int:
        """Image of p under the rank homomorphism, reduced mod 2."""
        vals = {}
        for nm in self.ring.names:
            vals[nm] = self.ring.const(_generator_rank(self, nm))
        return 1 if p.substitute(vals).terms else 0

    def expected_dimension(self) -> int:
        half = [b // 2 for b in self.blocks]
        if self.kind != MU:
            half = [self.m // 2] + half
        return multinomial(half)

    def to_json(self, reductions: list[Reduction] | None = None) -> dict:
        out = {
            "kind": self.kind,
            "params": {"m": self.m, "blocks": list(self.blocks),
                       "even_first_order": [p + 1 for p in self.block_order]},
            "members": [{"index": i, "poly_text": self.reduced[i].text()}
                        for i in sorted(self.reduced)],
            "basis_set": list(self.basis_set),
        }
        if reductions is not None:
            out["reductions"] = [
                {"index": r.index,
                 "combination": [
                     {"index": c, "coefficient": coef.text()}
                     for c, coef in zip(r.candidates, r.combination.coefficients or [])
                     if coef.terms]}
                for r in reductions]
        return out


def _generator_rank(fam: RelationFamily, name: str) -> int:
    if name.startswith(fam.block_prefix) and "_" in name:
        i, p = name[len(fam.block_prefix):].split("_")
        return math.comb(fam.blocks[int(p) - 1], int(i))
    i = int(name[len(fam.side_prefix):])
    top = 2 * fam.m if fam.kind == NU else 2 * fam.m + 1
    return math.comb(top, i)


def mu_family(blocks: Sequence[int], block_prefix: str = "b") -> RelationFamily:
    blocks = _check_blocks(blocks)
    if not blocks:
        raise ValueError("need at least one block")
    ring = make_ring(None, blocks, block_prefix=block_prefix)
    mus = mu_polys(ring, blocks, block_prefix)
    N = sum(blocks)
    top = N // 2
    members = {j: mus[j] for j in range(top + 1)}
    reduced = {j: mus[j] + binom_mod2(N, j) for j in range(top + 1)}
    M = sum(b // 2 for b in blocks)
    return RelationFamily(MU, None, blocks, ring, members, reduced,
                          list(range(1, M + 1)), even_first_order(blocks),
                          block_prefix=block_prefix)


def basis_indices(m: int, blocks: Sequence[int]) -> list[int]:
    """Odd indices up to m together with even indices up to 2h."""
    h = m // 2 + sum(b // 2 for b in blocks)
    s = {i for i in range(1, m + 1) if i % 2} | {i for i in range(2, 2 * h + 1, 2)}
    return sorted(s)


def _side_family(kind: str, m: int, blocks: Sequence[int], side_prefix: str,
                 block_prefix: str) -> RelationFamily:
    blocks = _check_blocks(blocks)
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0 and not blocks:
        raise ValueError("empty parameter list")
    ring = make_ring(m, blocks, side_prefix, block_prefix)
    mus = mu_polys(ring, blocks, block_prefix)
    alphas = alpha_powers(ring, m, kind, side_prefix)
    n = m + sum(blocks)
    const_n = 2 * n if kind == NU else 2 * n + 1
    members = {}
    for k in range(1, n + 1):
        acc = ring.const(binom_mod2(const_n, k))
        for i in range(k // 2 + 1):
            j = k - 2 * i
            if j < len(alphas) and i < len(mus):
                acc = acc + alphas[j] * mus[i]
        members[k] = acc
    return RelationFamily(kind, m, blocks, ring, members, dict(members),
                          basis_indices(m, blocks), even_first_order(blocks),
                          side_prefix, block_prefix)


def nu_family(m: int, blocks: Sequence[int], side_prefix: str = "a",
              block_prefix: str = "b") -> RelationFamily:
    return _side_family(NU, m, blocks, side_prefix, block_prefix)


def xi_family(m: int, blocks: Sequence[int], side_prefix: str = "a",
              block_prefix: str = "b") -> RelationFamily:
    return _side_family(XI, m, blocks, side_prefix, block_prefix)


def _leading_then_direct(seq: list[Poly2], ring: PolyRing) -> RegularityVerdict:
    v = is_regular_sequence(seq, "LEADING-FORM", ring)
    if v.status == "INCONCLUSIVE":
        return is_regular_sequence(seq, "DIRECT", ring)
    return v


def verify_regularity(fam: RelationFamily) -> RegularityReport:
    """Check that the basis members form a regular sequence.

    For nu and xi the odd members are first used to eliminate the odd
    ``a`` variables (each is that variable plus terms free of it), after
    which the even members are tested in the smaller polynomial ring.
    """
    if fam.kind == MU:
        v = _leading_then_direct(fam.basis_polys(), fam.ring)
        return RegularityReport(v.status, [v])

    ring = fam.ring
    odd = [i for i in fam.basis_set if i % 2]
    even = [i for i in fam.basis_set if i % 2 == 0]
    odd_names = [f"{fam.side_prefix}{i}" for i in range(1, fam.m + 1, 2)]
    sub: dict[str, Poly2] = {}
    for i in odd:
        name = f"{fam.side_prefix}{i}"
        p = fam.reduced[i].substitute(sub) if sub else fam.reduced[i]
        rest = p + ring.var(name)
        if rest.variables() & set(odd_names):
            stage = RegularityVerdict("INCONCLUSIVE", "ELIMINATION",
                                      f"member {i} is not linear in {name}")
            return RegularityReport("INCONCLUSIVE", [stage], sub)
        sub[name] = rest
    stage1 = RegularityVerdict("REGULAR", "ELIMINATION",
                               f"eliminated {len(odd)} odd variables")
    keep = [(nm, w) for nm, w in zip(ring.names, ring.weights) if nm not in odd_names]
    small = PolyRing([nm for nm, _ in keep], [w for _, w in keep])
    seq = []
    for i in even:
        p = fam.reduced[i].substitute(sub) if sub else fam.reduced[i]
        seq.append(p.to_ring(small))
    v = _leading_then_direct(seq, small)
    return RegularityReport(v.status, [stage1, v], sub)


def reduce_surplus(fam: RelationFamily) -> list[Reduction]:
    """Express every non-basis member through the basis members.

    mu and even nu: F2-linear combinations.  Odd nu and all xi: coefficients
    in the block subring, over basis members of smaller index; even xi tries
    scalars first.  A subring search that runs out of degree is retried once
    with twice the bound.
    """
    gb = fam.basis_groebner()
    bvars = [nm for nm in fam.ring.names if nm.startswith(fam.block_prefix) and "_" in nm]
    out = []
    basis = set(fam.basis_set)
    for k in sorted(fam.reduced):
        if k in basis or (fam.kind == MU and k == 0):
            continue
        target = fam.reduced[k]
        if fam.rank_mod2(target):
            raise AssertionError(f"member {k} has nonzero rank")
        if fam.kind == MU:
            cands = list(fam.basis_set)
            comb = solve_linear_combination(target, [fam.reduced[i] for i in cands])
        elif fam.kind == NU and k % 2 == 0:
            cands = [i for i in fam.basis_set if i % 2 == 0]
            comb = solve_linear_combination(target, [fam.reduced[i] for i in cands])
        else:
            if fam.kind == NU:
                cands = [i for i in fam.basis_set if i % 2 and i < k]
            else:
                cands = [i for i in fam.basis_set if i < k]
            polys = [fam.reduced[i] for i in cands]
            comb = None
            if fam.kind == XI and k % 2 == 0:
                comb = solve_linear_combination(target, polys)
            if comb is None or not comb.found:
                comb = solve_linear_combination(target, polys, "SUBRING", bvars)
                if comb.status == "NONE_AT_BOUND":
                    comb = solve_linear_combination(target, polys, "SUBRING", bvars,
                                                    degree_bound=2 * comb.bound)
        if comb.found:
            check = fam.ring.zero()
            for i, c in zip(cands, comb.coefficients):
                check = check + c * fam.reduced[i]
            if check != target:
                raise AssertionError(f"combination for member {k} does not reproduce it")
        out.append(Reduction(k, cands, comb, gb.contains(target)))
    return out


def family_quotient_dimension(fam: RelationFamily) -> int | float:
    return fam.basis_groebner().quotient_dimension()


def sigma(blocks: Sequence[int], ring: PolyRing | None = None,
          prefix: str = "b") -> tuple[PolyRing, dict[int, Poly2], int]:
    """The shifted family sigma_j = mu_{j + M}, M = sum of n_p // 2.

    Returns the ring, the nonzero window of sigma as a dict, and M.
    """
    blocks = _check_blocks(blocks)
    if ring is None:
        ring = make_ring(None, blocks, block_prefix=prefix)
    mus = mu_polys(ring, blocks, prefix)
    M = sum(b // 2 for b in blocks)
    return ring, {j - M: mus[j] for j in range(len(mus))}, M
