"""Witt-ring presentations and graded rank tables of complex flag varieties.

Every presentation has the shape (polynomial quotient in degree 0) tensor
(exterior algebra on generators of degree -1 or -3).  The graded ranks are
the quotient dimension times the 4-periodic ranks of the exterior part.

Degrees are reported as W^0, W^-1, W^-2, W^-3; W^-k is W^(4-k).
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .f2poly import Poly2, PolyRing, groebner, multinomial
from .relations import (
    RelationFamily,
    _leading_then_direct,
    basis_indices,
    family_quotient_dimension,
    mu_family,
    nu_family,
    reduce_surplus,
    verify_regularity,
    xi_family,
)

RING, ADDITIVE_ONLY = "RING", "ADDITIVE_ONLY"
DEGREES = (0, -1, -2, -3)
BRUTE_LIMIT = 24


class PipelineError(RuntimeError):
    """An internal consistency check failed; the presentation is not emitted."""


# ------------------------------------------------------------ exterior ranks

# (f mod 4, g mod 4) -> for u_0, u_-1, u_-2, u_-3 either None (just 2^(x-2))
# or (c, e) meaning 2^(x-2) + c * (-4)^((x-e)/4), with x = f + g.
EXTERIOR_TABLE: dict[tuple[int, int], tuple] = {
    (0, 0): ((-2, 4), None, (2, 4), None),
    (1, 0): ((-2, 5), (-2, 5), (2, 5), (2, 5)),
    (2, 0): (None, (1, 2), None, (-1, 2)),
    (3, 0): ((-1, 3), (1, 3), (1, 3), (-1, 3)),
    (0, 1): ((-2, 5), (2, 5), (2, 5), (-2, 5)),
    (1, 1): ((1, 2), None, (-1, 2), None),
    (2, 1): ((1, 3), (1, 3), (-1, 3), (-1, 3)),
    (3, 1): (None, (2, 4), None, (-2, 4)),
    (0, 2): (None, (-1, 2), None, (1, 2)),
    (1, 2): ((1, 3), (-1, 3), (-1, 3), (1, 3)),
    (2, 2): ((2, 4), None, (-2, 4), None),
    (3, 2): ((2, 5), (2, 5), (-2, 5), (-2, 5)),
    (0, 3): ((-1, 3), (-1, 3), (1, 3), (1, 3)),
    (1, 3): (None, (-2, 4), None, (2, 4)),
    (2, 3): ((2, 5), (-2, 5), (-2, 5), (2, 5)),
    (3, 3): ((-1, 2), None, (1, 2), None),
}

# Rank tables for the type A theorem, keyed by r mod 4.  The first applies
# when n is not 2 mod 4 (all generators at -1), the second when n is 2 mod 4.
TYPE_A_TABLE_GENERIC: dict[int, tuple] = {
    0: ((-2, 4), None, (2, 4), None),
    1: ((-2, 5), (-2, 5), (2, 5), (2, 5)),
    2: (None, (1, 2), None, (-1, 2)),
    3: ((-1, 3), (1, 3), (1, 3), (-1, 3)),
}
TYPE_A_TABLE_TWO: dict[int, tuple] = {
    0: (None, (2, 4), None, (-2, 4)),
    1: ((-2, 5), (2, 5), (2, 5), (-2, 5)),
    2: ((1, 2), None, (-1, 2), None),
    3: ((1, 3), (1, 3), (-1, 3), (-1, 3)),
}


def _power(base: int, exp: int) -> Fraction:
    return Fraction(base) ** exp


def _evaluate_row(row: tuple, x: int) -> tuple[int, ...]:
    out = []
    for cell in row:
        val = _power(2, x - 2)
        if cell is not None:
            c, e = cell
            if (x - e) % 4:
                raise PipelineError(f"table exponent ({x}-{e})/4 is not integral")
            val += c * _power(-4, (x - e) // 4)
        if val.denominator != 1 or val < 0:
            raise PipelineError(f"table entry {val} is not a non-negative integer")
        out.append(int(val))
    return tuple(out)


def exterior_ranks(f: int, g: int) -> tuple[int, int, int, int]:
    """Ranks (u_0, u_-1, u_-2, u_-3) of the exterior algebra on f generators
    of degree -1 and g of degree -3, graded mod 4, from the 16-row table."""
    if f < 0 or g < 0:
        raise ValueError("f and g must be non-negative")
    if f == 0 and g == 0:
        return (1, 0, 0, 0)
    return _evaluate_row(EXTERIOR_TABLE[(f % 4, g % 4)], f + g)


def exterior_ranks_zeta(f: int, g: int) -> tuple[int, int, int, int]:
    """Same ranks from u_-k = 2^(x-2) + 2^((x-2)/2) Re(zeta^(2k-f+g)),
    zeta = exp(i pi/4), evaluated exactly.

    For even x the exponent s is even and Re(zeta^s) is 1, 0, -1, 0; for odd
    x it is +-sqrt(2)/2, which combines with 2^((x-2)/2) into +-2^((x-3)/2).
    """
    if f < 0 or g < 0:
        raise ValueError("f and g must be non-negative")
    if f == 0 and g == 0:
        return (1, 0, 0, 0)
    x = f + g
    out = []
    for k in range(4):
        s = (2 * k - f + g) % 8
        base = _power(2, x - 2)
        if x % 2 == 0:
            sign = {0: 1, 2: 0, 4: -1, 6: 0}[s]
            val = base + sign * _power(2, (x - 2) // 2)
        else:
            sign = {1: 1, 7: 1, 3: -1, 5: -1}[s]
            val = base + sign * _power(2, (x - 3) // 2)
        out.append(int(val))
    return tuple(out)


def brute_exterior_ranks(f: int, g: int) -> tuple[int, int, int, int]:
    """Expand (1 + t^-1)^f (1 + t^-3)^g and fold exponents mod 4."""
    if f < 0 or g < 0:
        raise ValueError("f and g must be non-negative")
    if f + g > BRUTE_LIMIT:
        raise ValueError(f"f+g={f + g} exceeds the expansion limit {BRUTE_LIMIT}")
    coeffs = [1]  # coeffs[d] is the coefficient of t^-d
    for step in [1] * f + [3] * g:
        nxt = coeffs + [0] * step
        for d, c in enumerate(coeffs):
            nxt[d + step] += c
        coeffs = nxt
    out = [0, 0, 0, 0]
    for d, c in enumerate(coeffs):
        out[d % 4] += c
    return tuple(out)


def fold_degree(d: int) -> int:
    """Representative of d mod 4 among 0, -1, -2, -3."""
    return -((-d) % 4)


def _position(d: int) -> int:
    return (-d) % 4


def _closed_form_table(table: dict[int, tuple], r: int) -> tuple[int, ...]:
    if r == 0:
        return (1, 0, 0, 0)
    return _evaluate_row(table[r % 4], r)


# ------------------------------------------------------------ presentations

@dataclass
class WittPresentation:
    type: str
    m: int | None
    blocks: tuple[int, ...]
    structure: str
    scalar_a: int
    generators: list[tuple[str, int]]
    relations: list[Poly2]
    exterior: list[tuple[str, int]]
    graded_ranks: tuple[int, int, int, int]
    ranks: tuple[int, int, int, int]
    checks: dict[str, bool | None]
    diagnostics: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return (self.m or 0) + sum(self.blocks)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def total_rank(self) -> int:
        return sum(self.ranks)

    def to_json(self) -> dict:
        out = {
            "type": self.type,
            "params": {"m": self.m, "blocks": list(self.blocks)},
            "structure": self.structure,
            "scalar_a": self.scalar_a,
            "generators": [{"name": nm, "degree": d} for nm, d in self.generators],
            "relations": [p.text() for p in self.relations],
            "exterior": [{"name": nm, "degree": d} for nm, d in self.exterior],
            "graded_ranks": {str(d): z for d, z in zip(DEGREES, self.graded_ranks)},
            "ranks": {str(d): z for d, z in zip(DEGREES, self.ranks)},
            "checks": dict(self.checks),
        }
        if self.diagnostics:
            out["diagnostics"] = self.diagnostics
        return out

    def text(self) -> str:
        lines = [f"type {self.type}  m={self.m if self.m is not None else '-'}  "
                 f"blocks=({','.join(map(str, self.blocks))})  structure {self.structure}"]
        if self.structure == RING:
            gens = ", ".join(_display_name(nm) for nm, _ in self.generators) or "none"
            lines.append(f"  polynomial generators (W^0): {gens}")
            for i, p in enumerate(self.relations, start=1):
                lines.append(f"  relation {i}: {p.text()}")
            if self.exterior:
                ext = ", ".join(f"{_display_name(nm)} in W^{d}" for nm, d in self.exterior)
                lines.append(f"  exterior generators: {ext}")
            else:
                lines.append("  exterior generators: none")
        for k, v in self.diagnostics.items():
            lines.append(f"  {k}: {v}")
        lines.append(f"  a = {self.scalar_a}, z = {self.graded_ranks}")
        lines.append("  ranks: " + ", ".join(
            f"W^{d}: {r}" for d, r in zip(DEGREES, self.ranks)))
        lines.append("  checks: " + ", ".join(
            f"{k}={'n/a' if v is None else ('ok' if v else 'FAIL')}"
            for k, v in self.checks.items()))
        return "\n".join(lines)


def _display_name(name: str) -> str:
    """b2_1 -> b_2^{(1)}, u3 -> u_3, v_plus -> v_+."""
    if name.endswith("_plus"):
        return name[:-5] + "_+"
    if name.endswith("_minus"):
        return name[:-6] + "_-"
    head = name.rstrip("0123456789_")
    rest = name[len(head):]
    if "_" in rest:
        i, p = rest.split("_")
        return f"{head}_{i}^{{({p})}}"
    if rest:
        return f"{head}_{rest}"
    return name


def _ranks_from_exterior(exterior: Sequence[tuple[str, int]]) -> tuple[int, int]:
    f = sum(1 for _, d in exterior if d == -1)
    g = sum(1 for _, d in exterior if d == -3)
    if f + g != len(exterior):
        raise PipelineError("exterior generators must sit in degree -1 or -3")
    return f, g


def _exterior_agree(f: int, g: int) -> bool:
    z = exterior_ranks(f, g)
    if z != exterior_ranks_zeta(f, g):
        return False
    if f + g <= BRUTE_LIMIT and z != brute_exterior_ranks(f, g):
        return False
    return True


def _check_params(m: int | None, blocks: Sequence[int]) -> tuple[int, ...]:
    blocks = tuple(int(b) for b in blocks)
    if any(b <= 0 for b in blocks):
        raise ValueError(f"block sizes must be positive: {blocks}")
    if m is not None and m < 0:
        raise ValueError("m must be non-negative")
    return blocks


def _family_checks(fam: RelationFamily) -> tuple[bool, bool, int | float]:
    reg = verify_regularity(fam).regular
    red = all(r.ok for r in reduce_surplus(fam))
    dim = family_quotient_dimension(fam)
    return reg, red, dim


def _refuse_on_failure(checks: dict[str, bool | None], label: str) -> None:
    bad = [k for k, v in checks.items() if v is False]
    if bad:
        raise PipelineError(f"{label}: failed checks {', '.join(bad)}")


def _point(type_: str, m: int, blocks: tuple[int, ...], note: str) -> WittPresentation:
    return WittPresentation(type_, m, blocks, RING, 1, [], [], [], (1, 0, 0, 0), (1, 0, 0, 0),
                            {"regularity": True, "reduction": True, "dim_match": True,
                             "table_match": True},
                            {"note": note})


def _scaled(a: int, z: Sequence[int]) -> tuple[int, int, int, int]:
    return tuple(a * v for v in z)


def _renamed_mu_family(m: int, blocks: tuple[int, ...], side: str, block: str
                       ) -> tuple[RelationFamily, PolyRing, list[Poly2]]:
    """The mu family of the blocks (m, n_1, ..., n_l) with the first block's
    variables named ``{side}{i}`` and the rest ``{block}{i}_{p}``.

    Returns the family, the renamed ring and mu_1..mu_h on that ring; the
    reduced constants C(n, j) agree mod 2 with C(2n, 2j).
    """
    full = ((m,) if m else ()) + blocks
    fam = mu_family(full)
    names, weights = [], []
    for nm, w in zip(fam.ring.names, fam.ring.weights):
        i, p = nm[1:].split("_")
        if m:
            names.append(f"{side}{i}" if p == "1" else f"{block}{i}_{int(p) - 1}")
        else:
            names.append(f"{block}{i}_{p}")
        weights.append(w)
    ring = PolyRing(names, weights)
    rels = [fam.reduced[j].rename(ring) for j in fam.basis_set]
    return fam, ring, rels


def compute_type_a(blocks: Sequence[int]) -> WittPresentation:
    """Flag varieties SU(n)/S(U(n_1) x ... x U(n_l))."""
    blocks = _check_params(None, blocks)
    if not blocks:
        raise ValueError("type A needs at least one block")
    n = sum(blocks)
    fam = mu_family(blocks)
    half = sum(b // 2 for b in blocks)
    r = n // 2 - half
    reg, red, dim = _family_checks(fam)
    a = multinomial(b // 2 for b in blocks)
    exterior = [(f"v{j}", -1) for j in range(1, r)]
    if r:
        exterior.append((f"v{r}", -3 if n % 4 == 2 else -1))
    f, g = _ranks_from_exterior(exterior)
    z = exterior_ranks(f, g)
    table = TYPE_A_TABLE_TWO if n % 4 == 2 else TYPE_A_TABLE_GENERIC
    checks = {"regularity": reg, "reduction": red, "dim_match": dim == a,
              "table_match": _closed_form_table(table, r) == z and _exterior_agree(f, g)}
    _refuse_on_failure(checks, f"type A {blocks}")
    return WittPresentation("A", None, blocks, RING, a,
                            [(nm, 0) for nm in fam.ring.names], fam.basis_polys(),
                            exterior, z, _scaled(a, z), checks)


def type_b_index_sets(m: int, blocks: Sequence[int]) -> tuple[list[int], list[int]]:
    """S (odd up to m and even up to 2h) and its complement in 1..n-1."""
    n = m + sum(blocks)
    s = basis_indices(m, blocks)
    return s, [t for t in range(1, n) if t not in s]


def compute_type_b(m: int, blocks: Sequence[int]) -> WittPresentation:
    """Flag varieties Spin(2n+1)/(Spin(2m+1) x U~(n_1) x ... x U~(n_l))/Z."""
    blocks = _check_params(m, blocks)
    if not blocks:
        return _point("B", m, blocks, "G/G is a point")
    n = m + sum(blocks)
    all_even = m % 2 == 0 and all(b % 2 == 0 for b in blocks)
    blocks_even = all(b % 2 == 0 for b in blocks)
    fam = xi_family(m, blocks, side_prefix="b", block_prefix="a")
    s, sbar = type_b_index_sets(m, blocks)
    red = all(r.ok for r in reduce_surplus(fam))
    if all_even:
        special = fam.ring.const(1) if m == 0 else fam.ring.var(f"b{m}")
        for p, b in enumerate(blocks, start=1):
            special = special * fam.ring.var(f"a{b // 2}_{p}")
        reduced = dict(fam.reduced)
        reduced[n] = special
        work = dataclasses.replace(fam, reduced=reduced, _gb=None)
    else:
        work = fam
    reg = verify_regularity(work).regular
    dim = family_quotient_dimension(work)
    a = multinomial([m // 2] + [b // 2 for b in blocks])
    exterior = [(f"u{t}", -1) for t in sbar]
    if not all_even:
        exterior.append(("c", -3 if (not blocks_even and n % 4 in (1, 2)) else -1))
    r = sum(b - b // 2 for b in blocks)
    if len(exterior) != r:
        raise PipelineError(f"type B ({m}, {blocks}): {len(exterior)} exterior "
                            f"generators, expected {r}")
    f, g = _ranks_from_exterior(exterior)
    z = exterior_ranks(f, g)
    two = not blocks_even and n % 4 in (1, 2)
    table = TYPE_A_TABLE_TWO if two else TYPE_A_TABLE_GENERIC
    checks = {"regularity": reg, "reduction": red, "dim_match": dim == a,
              "table_match": _closed_form_table(table, r) == z and _exterior_agree(f, g)}
    _refuse_on_failure(checks, f"type B ({m}, {blocks})")
    return WittPresentation("B", m, blocks, RING, a, [(nm, 0) for nm in fam.ring.names],
                            work.basis_polys(), exterior, z, _scaled(a, z), checks,
                            {"index_set": s})


def compute_type_c(m: int, blocks: Sequence[int]) -> WittPresentation:
    """Flag varieties Sp(n)/(Sp(m) x U(n_1) x ... x U(n_l))."""
    blocks = _check_params(m, blocks)
    n = m + sum(blocks)
    if n == 0:
        raise ValueError("type C needs n >= 1")
    h = m // 2 + sum(b // 2 for b in blocks)
    f = n // 2 - h
    g = (n - m + 1) // 2
    a = multinomial([m // 2] + [b // 2 for b in blocks])
    mu, ring, rels = _renamed_mu_family(m, blocks, "a", "b")
    reg, red, dim = _family_checks(mu)
    nu = nu_family(m, blocks)
    nu_reg, nu_red, nu_dim = _family_checks(nu)
    exterior = [(f"u{i}", -1) for i in range(1, f + 1)] + \
               [(f"v{j}", -3) for j in range(1, g + 1)]
    z = exterior_ranks(f, g)
    checks = {"regularity": reg and nu_reg, "reduction": red and nu_red,
              "dim_match": dim == a and nu_dim == a, "table_match": _exterior_agree(f, g)}
    _refuse_on_failure(checks, f"type C ({m}, {blocks})")
    odd_missing = (n + 1) // 2 - (m + 1) // 2
    diagnostics = {}
    if odd_missing != g:
        diagnostics["odd_index_count"] = (
            f"{odd_missing} odd indices lie outside the basis set, "
            f"the formula gives g = {g}")
    return WittPresentation("C", m, blocks, RING, a, [(nm, 0) for nm in ring.names], rels,
                            exterior, z, _scaled(a, z), checks, diagnostics)


def type_d_index_set(m: int, blocks: Sequence[int]) -> list[int]:
    """T: indices m <= j <= n-1 with the even ones up to 2N removed."""
    n = m + sum(blocks)
    big = m // 2 + sum(b // 2 for b in blocks)
    return [j for j in range(m, n) if not (j % 2 == 0 and j <= 2 * big)]


def type_d_case(m: int, blocks: Sequence[int]) -> int:
    """Which ring clause applies (1 to 5), or 0 for the additive-only case.

    Expects m != 1 and at least one block.
    """
    n = m + sum(blocks)
    blocks_even = all(b % 2 == 0 for b in blocks)
    if n % 2:
        if (m % 2 and m > 2) or m == 0:
            return 1
        if m % 2 == 0 and m >= 2:
            return 2
    else:
        if (m % 2 and m > 2) or (m == 0 and not blocks_even):
            return 3
        if m % 2 == 0 and m >= 2 and not blocks_even:
            return 4
        if m == 0 and blocks_even:
            return 5
        if m % 2 == 0 and 0 < m < n and blocks_even:
            return 0
    raise ValueError(f"no clause covers m={m}, blocks={tuple(blocks)}")


def compute_type_d(m: int, blocks: Sequence[int]) -> WittPresentation:
    """Flag varieties SO(2n)/(SO(2m) x U(n_1) x ... x U(n_l))."""
    blocks = _check_params(m, blocks)
    given = (m, blocks)
    if m == 1:
        # SO(2) is U(1)
        m, blocks = 0, blocks + (1,)
    if not blocks:
        if m == 0:
            raise ValueError("type D needs n >= 1")
        return _point("D", given[0], given[1], "G/G is a point")
    n = m + sum(blocks)
    case = type_d_case(m, blocks)
    diagnostics = {"clause": case}
    if given[0] != m:
        diagnostics["normalized"] = f"m=1 read as m=0 with an extra block of size 1"
    if case == 0:
        return _type_d_additive(given, m, blocks, diagnostics)
    mu, ring, rels = _renamed_mu_family(m, blocks, "b", "a")
    reg, red, dim = _family_checks(mu)
    a = multinomial([m // 2] + [b // 2 for b in blocks])
    if case in (2, 4):
        w = m // 2
        ring = PolyRing(ring.names + ("d1", "d2"), ring.weights + (w, w))
        rels = [p.to_ring(ring) for p in rels]
        d1, d2 = ring.var("d1"), ring.var("d2")
        rels = [d1 + d2 + ring.var(f"b{m // 2}"), d1 * d2] + rels
        reg = reg and _leading_then_direct(rels, ring).regular
        dim = groebner(rels, ring).quotient_dimension()
        a *= 2
    t = type_d_index_set(m, blocks)
    vdeg = -1 if n % 4 == 0 else -3
    if case in (1, 2):
        exterior = [(f"u{j}", -1) for j in t]
    else:
        if n - 1 not in t:
            raise PipelineError(f"type D ({m}, {blocks}): n-1 missing from the index set")
        exterior = [(f"u{j}", -1) for j in t if j != n - 1]
        if case == 5:
            exterior.append(("v", vdeg))
        else:
            exterior += [("v_plus", vdeg), ("v_minus", vdeg)]
    f, g = _ranks_from_exterior(exterior)
    z = exterior_ranks(f, g)
    checks = {"regularity": reg, "reduction": red, "dim_match": dim == a,
              "table_match": _exterior_agree(f, g)}
    _refuse_on_failure(checks, f"type D {given}")
    return WittPresentation("D", given[0], given[1], RING, a,
                            [(nm, 0) for nm in ring.names], rels, exterior, z,
                            _scaled(a, z), checks, diagnostics)


def type_d_additive_scalars(m: int, blocks: Sequence[int]) -> tuple[int, int, int]:
    """(a, b, c) of the additive-only case (m and every block even)."""
    n = m + sum(blocks)
    denom = math.factorial(m // 2)
    for b in blocks:
        denom *= math.factorial(b // 2)
    base = Fraction(math.factorial(n // 2 - 1), denom)
    b = base * (sum(blocks) // 2)
    c = base * (m // 2)
    a = Fraction(math.factorial(n // 2), denom) + b
    for v in (a, b, c):
        if v.denominator != 1:
            raise PipelineError(f"non-integral scalar {v}")
    return int(a), int(b), int(c)


def _type_d_additive(given, m: int, blocks: tuple[int, ...], diagnostics: dict
                     ) -> WittPresentation:
    n = m + sum(blocks)
    a, b, c = type_d_additive_scalars(m, blocks)
    k = sum(blocks) // 2 - 1
    z = exterior_ranks(k, 0)
    dims = []
    for d in DEGREES:
        zi = z[_position(d)]
        z1 = z[_position(d + 1)]
        if n % 4 == 0:
            dims.append(a * (zi + z1))
        else:
            z3 = z[_position(d + 3)]
            dims.append(a * zi + c * z1 + 2 * b * z3)
    diagnostics.update({"b": b, "c": c, "exterior_generators": k})
    checks = {"regularity": None, "reduction": None, "dim_match": None,
              "table_match": _exterior_agree(k, 0)}
    _refuse_on_failure(checks, f"type D {given}")
    return WittPresentation("D", given[0], given[1], ADDITIVE_ONLY, a, [], [], [],
                            z, tuple(dims), checks, diagnostics)


@dataclass
class RankTable:
    closed_form: tuple[int, int, int, int]
    from_exterior: tuple[int, int, int, int]
    scalar_a: int
    dims: tuple[int, int, int, int]


def rank_table(type_: str, m: int | None, blocks: Sequence[int]) -> RankTable:
    """Graded ranks from the closed-form tables and from the emitted exterior
    generators; raises PipelineError if they disagree."""
    pres = compute(type_, m, blocks)
    if pres.structure != RING:
        return RankTable(pres.graded_ranks, pres.graded_ranks, pres.scalar_a, pres.ranks)
    f, g = _ranks_from_exterior(pres.exterior)
    ext = brute_exterior_ranks(f, g) if f + g <= BRUTE_LIMIT else exterior_ranks_zeta(f, g)
    n = pres.n
    if type_ == "A":
        r = len(pres.exterior)
        closed = _closed_form_table(TYPE_A_TABLE_TWO if n % 4 == 2 else TYPE_A_TABLE_GENERIC, r)
    elif type_ == "B" and pres.blocks:
        r = sum(b - b // 2 for b in pres.blocks)
        two = any(b % 2 for b in pres.blocks) and n % 4 in (1, 2)
        closed = _closed_form_table(TYPE_A_TABLE_TWO if two else TYPE_A_TABLE_GENERIC, r)
    else:
        closed = exterior_ranks(f, g)
    if closed != ext:
        raise PipelineError(f"closed form {closed} differs from expansion {ext}")
    if sum(pres.ranks) != pres.scalar_a * 2 ** len(pres.exterior):
        raise PipelineError("total rank differs from a * 2^(exterior count)")
    return RankTable(closed, ext, pres.scalar_a, pres.ranks)


def compute(type_: str, m: int | None, blocks: Sequence[int]) -> WittPresentation:
    type_ = type_.upper()
    if type_ == "A":
        if m not in (None, 0):
            raise ValueError("type A takes no m")
        return compute_type_a(blocks)
    if m is None:
        raise ValueError(f"type {type_} needs m")
    if type_ == "B":
        return compute_type_b(m, blocks)
    if type_ == "C":
        return compute_type_c(m, blocks)
    if type_ == "D":
        return compute_type_d(m, blocks)
    raise ValueError(f"unknown type {type_!r}")
