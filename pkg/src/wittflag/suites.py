"""Verification suites shared by the command line and the acceptance tests.

Each suite returns a list of :class:`Item` records, one per checked instance.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .f2poly import Poly2, PolyRing
from .relations import (
    RelationFamily,
    family_quotient_dimension,
    mu_family,
    mu_polys,
    nu_family,
    reduce_surplus,
    verify_regularity,
    xi_family,
)
from .series import WindowedSeries, peel_identity, verify_kernel
from .star_monomial import build_repring, lemma_suite_section1, verify_tate_classification
from .witt import (
    BRUTE_LIMIT,
    PipelineError,
    brute_exterior_ranks,
    compute,
    exterior_ranks,
    exterior_ranks_zeta,
    rank_table,
)

SUITES = ("examples", "lemmas", "series", "appendix", "tables", "all")


@dataclass
class Item:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.suite} {self.name}{tail}"


# ----------------------------------------------------------- enumeration

def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as non-increasing tuples."""
    if n == 0:
        yield ()
        return
    top = n if largest is None else min(n, largest)
    for k in range(top, 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def half_sum(blocks: Sequence[int]) -> int:
    return sum(b // 2 for b in blocks)


def mu_parameter_range(max_half: int = 5, max_total: int = 16) -> list[tuple[int, ...]]:
    """Block tuples with sum of halves <= max_half and total size <= max_total.

    Blocks of size 1 do not raise the half sum, so the total size bound is
    what keeps the range finite.
    """
    out = []
    for n in range(1, max_total + 1):
        out.extend(p for p in partitions(n) if half_sum(p) <= max_half)
    return out


def side_parameter_range(max_h: int = 4, max_n: int = 14) -> list[tuple[int, tuple[int, ...]]]:
    """(m, blocks) with m//2 + sum of halves <= max_h and m + sum <= max_n."""
    out = []
    for n in range(1, max_n + 1):
        for m in range(0, n + 1):
            for p in partitions(n - m):
                if m // 2 + half_sum(p) <= max_h:
                    out.append((m, p))
    return out


def series_parameter_range(max_k: int = 6, max_half: int = 4) -> list[tuple[int, ...]]:
    """Blocks with at most max_k odd sizes and sum of halves <= max_half."""
    out = []
    for n in range(1, max_k + 2 * max_half + 2):
        for p in partitions(n):
            if half_sum(p) <= max_half and sum(1 for b in p if b % 2) <= max_k:
                out.append(p)
    return out


# ------------------------------------------------------ worked examples

# Members written as sums of products of symbols: a{i} are side variables,
# M{j} the mu polynomials of the blocks, other names are ring variables.
WORKED_MU = {
    1: "b1_1 + b1_2",
    2: "b1_1 + b1_1*b1_2 + b2_2",
    3: "1 + b1_1*b1_2 + b1_1*b2_2 + b2_2",
    4: "0",
    5: "1 + b1_1*b1_2 + b1_1*b2_2 + b2_2",
    6: "b1_1 + b1_1*b1_2 + b2_2",
    7: "b1_1 + b1_2",
}
WORKED_NU = {
    1: "a1", 2: "a2 + M1", 3: "a1 + a1*M1", 4: "1 + a2*M1 + M2 + 1",
    5: "a1*M1 + a1*M2", 6: "M1 + a2*M2 + M3", 7: "a1*M2 + a1*M3",
    8: "M2 + a2*M3 + M4", 9: "a1*M3 + a1*M4", 10: "a2*M4",
}
WORKED_XI = {
    1: "a1 + 1", 2: "a2 + M1", 3: "a2 + a1*M1", 4: "a1 + a2*M1 + M2 + 1",
    5: "a2*M1 + a1*M2", 6: "a1*M1 + a2*M2 + M3", 7: "M1 + a2*M2 + a1*M3",
    8: "a1*M2 + a2*M3 + M4", 9: "M2 + a2*M3 + a1*M4", 10: "a1*M3 + a2*M4 + M3",
}


def evaluate_symbolic(text: str, ring: PolyRing, mus: dict[int, Poly2]) -> Poly2:
    """Evaluate a sum of products of symbols; M{j} stands for mus[j]."""
    acc = ring.zero()
    for term in text.split("+"):
        term = term.strip()
        prod = ring.const(1)
        for factor in term.split("*"):
            factor = factor.strip()
            if factor in ("0", "1"):
                prod = prod * ring.const(int(factor))
            elif factor.startswith("M"):
                prod = prod * mus[int(factor[1:])]
            else:
                prod = prod * ring.var(factor)
        acc = acc + prod
    return acc


def _compare(fam: RelationFamily, expected: dict[int, str], mus: dict[int, Poly2],
             label: str) -> list[Item]:
    out = []
    for k, text in sorted(expected.items()):
        want = evaluate_symbolic(text, fam.ring, mus)
        got = fam.reduced.get(k)
        if got is None:
            got = mu_polys(fam.ring, fam.blocks)[k]
        out.append(Item("examples", f"{label}[{k}]", got == want,
                        "" if got == want else f"got {got.text()} want {want.text()}"))
    return out


def suite_examples() -> list[Item]:
    mu = mu_family((3, 5))
    out = _compare(mu, WORKED_MU, {}, "mu(3,5)")
    for label, fam_fn, table in (("nu(2;3,5)", nu_family, WORKED_NU),
                                 ("xi(2;3,5)", xi_family, WORKED_XI)):
        fam = fam_fn(2, (3, 5))
        mus = dict(enumerate(mu_polys(fam.ring, fam.blocks)))
        out.extend(_compare(fam, table, mus, label))
    for args, want in ((("A", None, (1, 2)), (1, 0, 0, 0)),
                       (("A", None, (1, 1, 1)), (1, 1, 0, 0)),
                       (("C", 1, (1,)), (2, 1, 0, 1))):
        got = compute(*args).ranks
        out.append(Item("examples", f"ranks{args}", got == want, f"{got}"))
    return out


# ------------------------------------------------------------ families

@dataclass
class FamilyResult:
    label: str
    regularity: str
    dimension: int | float
    expected: int
    unreduced: list[int]
    reductions: int

    @property
    def regular(self) -> bool:
        return self.regularity == "REGULAR"

    @property
    def dimension_ok(self) -> bool:
        return self.dimension == self.expected

    @property
    def item(self) -> Item:
        detail = f"regularity={self.regularity} dim={self.dimension}/{self.expected}"
        if self.unreduced:
            detail += f" unreduced={self.unreduced}"
        ok = self.regular and self.dimension_ok and not self.unreduced
        return Item("families", self.label, ok, detail)


def check_family(fam: RelationFamily) -> FamilyResult:
    reg = verify_regularity(fam)
    reds = reduce_surplus(fam)
    label = f"{fam.kind.lower()}({'' if fam.m is None else str(fam.m) + ';'}"
    label += ",".join(map(str, fam.blocks)) + ")"
    return FamilyResult(label, reg.status, family_quotient_dimension(fam),
                        fam.expected_dimension(), [r.index for r in reds if not r.ok],
                        len(reds))


def family_results(max_half: int = 5, max_total: int = 16, max_h: int = 4,
                   max_n: int = 14) -> list[FamilyResult]:
    out = [check_family(mu_family(b)) for b in mu_parameter_range(max_half, max_total)]
    for m, b in side_parameter_range(max_h, max_n):
        out.append(check_family(nu_family(m, b)))
        out.append(check_family(xi_family(m, b)))
    return out


def suite_families(max_half: int = 5, max_total: int = 16, max_h: int = 4,
                   max_n: int = 14) -> list[Item]:
    return [r.item for r in family_results(max_half, max_total, max_h, max_n)]


# --------------------------------------------------------------- lemmas

def tate_instances(max_a: int = 6, max_bc: int = 4) -> list[tuple[str, int, tuple[int, ...]]]:
    out = []
    for n in range(1, max_a + 1):
        out.extend(("A", 0, p) for p in partitions(n))
    for kind in "BC":
        for n in range(1, max_bc + 1):
            for m in range(0, n + 1):
                out.extend((kind, m, p) for p in partitions(n - m))
    return out


def suite_lemmas(degree_bound: int = 6) -> list[Item]:
    out = [Item("lemmas", c.name, c.passed, c.detail)
           for c in lemma_suite_section1(degree_bound)]
    for kind, m, blocks in tate_instances():
        rep = verify_tate_classification(build_repring(kind, m, blocks), degree_bound)
        out.append(Item("lemmas", f"tate {kind}({m};{','.join(map(str, blocks))})", rep.ok,
                        f"counts={rep.counts_self_dual}"))
    return out


# --------------------------------------------------------------- series

def _random_window(rng: random.Random, lo: int, hi: int) -> WindowedSeries:
    return WindowedSeries(lo, hi, [e for e in range(lo, hi + 1) if rng.random() < 0.5])


def suite_series(max_k: int = 6, max_half: int = 4, s_bound: int = 8,
                 peel_samples: int = 3) -> list[Item]:
    out = []
    rng = random.Random(0)
    for blocks in series_parameter_range(max_k, max_half):
        k = sum(1 for b in blocks if b % 2)
        checks = verify_kernel(k, blocks, s_bound)
        bad = [c.label for c in checks if not c.ok]
        name = f"kernel k={k} ({','.join(map(str, blocks))})"
        out.append(Item("series", name, not bad, f"{len(checks)} members"
                        + (f" failing {bad}" if bad else "")))
        if k:
            M = half_sum(blocks)
            ok = True
            for _ in range(peel_samples):
                q = _random_window(rng, -M - 2, M + 2)
                lhs, rhs = peel_identity(blocks, q)
                ok = ok and lhs == rhs
            out.append(Item("series", f"peel ({','.join(map(str, blocks))})", ok))
    return out


# ------------------------------------------------------------- appendix

APPENDIX_ANCHORS = {
    (2, 0): (1, 2, 1, 0),
    (0, 0): (1, 0, 0, 0),
    (1, 1): (2, 1, 0, 1),
    (0, 1): (1, 0, 0, 1),
    (4, 0): (2, 4, 6, 4),
}


def suite_appendix(max_size: int = 12) -> list[Item]:
    if max_size > BRUTE_LIMIT:
        raise ValueError(f"max size {max_size} exceeds {BRUTE_LIMIT}")
    out = []
    for x in range(max_size + 1):
        for f in range(x + 1):
            g = x - f
            a, b, c = exterior_ranks(f, g), brute_exterior_ranks(f, g), exterior_ranks_zeta(f, g)
            out.append(Item("appendix", f"f={f} g={g}", a == b == c, f"{a}"))
    for (f, g), want in APPENDIX_ANCHORS.items():
        got = exterior_ranks(f, g)
        out.append(Item("appendix", f"anchor ({f},{g})", got == want, f"{got}"))
    return out


# --------------------------------------------------------------- tables

def table_parameters(type_: str, max_n: int) -> list[tuple[str, int | None, tuple[int, ...]]]:
    """Deterministic parameter list for a type up to rank max_n.

    Type A takes partitions with at least two blocks; the other types take
    every split m + (partition of n - m) = n.
    """
    out = []
    for n in range(1, max_n + 1):
        if type_ == "A":
            out.extend(("A", None, p) for p in partitions(n) if len(p) >= 2)
        else:
            for m in range(0, n + 1):
                out.extend((type_, m, p) for p in partitions(n - m))
    return out


def check_rank_table(type_: str, m: int | None, blocks: tuple[int, ...]) -> Item:
    name = f"{type_}({'' if m is None else str(m) + ';'}{','.join(map(str, blocks))})"
    try:
        t = rank_table(type_, m, blocks)
    except PipelineError as exc:
        return Item("tables", name, False, str(exc))
    return Item("tables", name, True, f"a={t.scalar_a} z={t.closed_form}")


def suite_tables(max_n: int = 7) -> list[Item]:
    out = []
    for type_ in "ABC":
        if type_ == "A":
            params = [("A", None, p) for n in range(1, max_n + 1) for p in partitions(n)]
        else:
            params = table_parameters(type_, max_n)
        out.extend(check_rank_table(*p) for p in params)
    return out


def run_suite(name: str, max_size: int = 12, max_n: int = 7) -> list[Item]:
    runners: dict[str, Callable[[], list[Item]]] = {
        "examples": suite_examples,
        "lemmas": suite_lemmas,
        "series": suite_series,
        "appendix": lambda: suite_appendix(max_size),
        "tables": lambda: suite_tables(max_n) + suite_families(max_total=max_n, max_n=max_n),
    }
    if name == "all":
        out = []
        for key in SUITES[:-1]:
            out.extend(runners[key]())
        return out
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}")
    return runners[name]()


def timed(fn: Callable[[], list[Item]]) -> tuple[list[Item], float]:
    start = time.perf_counter()
    items = fn()
    return items, time.perf_counter() - start
