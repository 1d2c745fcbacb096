"""Laurent series over F2 in t^-1 and the evaluation map psi_k.

A series is stored by its exponent support on a window [lo, hi].  Rational
elements num / (1 + t^-1)^e expand downward without end; ``expand`` computes
them exactly on any window.  psi_k sends sum a_j t^j to sum a_j sigma_j,
where sigma_j = mu_{j+M} for the ring of ``blocks`` (k = number of odd blocks).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .f2poly import Poly2, PolyRing, binom_mod2
from .relations import even_first_order, make_ring, mu_polys


class WindowTooNarrow(ValueError):
    """The window does not reach down to the lowest nonzero sigma."""


@dataclass(frozen=True)
class WindowedSeries:
    lo: int
    hi: int
    support: frozenset

    def __init__(self, lo: int, hi: int, support: Iterable[int] = ()):
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi}]")
        acc: set = set()
        for e in support:
            acc ^= {e}
        outside = [e for e in acc if e < lo or e > hi]
        if outside:
            raise ValueError(f"exponents {sorted(outside)} outside [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "support", frozenset(acc))

    def __add__(self, other: "WindowedSeries") -> "WindowedSeries":
        lo = max(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return WindowedSeries(lo, hi, [e for e in self.support ^ other.support if e >= lo])

    def shift(self, s: int) -> "WindowedSeries":
        return WindowedSeries(self.lo + s, self.hi + s, [e + s for e in self.support])

    def times_laurent(self, exps: Iterable[int]) -> "WindowedSeries":
        """Product with a Laurent polynomial; the window shrinks to stay exact."""
        exps = list(exps)
        if not exps:
            return WindowedSeries(self.lo, self.hi)
        lo = self.lo + max(exps)
        hi = self.hi + max(exps)
        acc: set = set()
        for a in exps:
            acc ^= {e + a for e in self.support}
        return WindowedSeries(lo, hi, [e for e in acc if e >= lo])

    def restrict(self, lo: int) -> "WindowedSeries":
        return WindowedSeries(lo, self.hi, [e for e in self.support if e >= lo])

    def is_zero(self) -> bool:
        return not self.support

    def text(self) -> str:
        return "{" + ", ".join(f"{e}:1" for e in sorted(self.support)) + "}"

    __str__ = text


def _laurent_text(exps: Iterable[int]) -> str:
    exps = sorted(exps, reverse=True)
    if not exps:
        return "0"
    parts = []
    for e in exps:
        parts.append("1" if e == 0 else ("t" if e == 1 else f"t^{e}"))
    return " + ".join(parts)


@dataclass(frozen=True)
class RationalSeries:
    """numerator / (1 + t^-1)^e with a Laurent polynomial numerator."""

    numerator: frozenset
    e: int

    def __init__(self, numerator: Iterable[int], e: int = 0):
        if e < 0:
            raise ValueError("negative denominator exponent")
        acc: set = set()
        for x in numerator:
            acc ^= {x}
        object.__setattr__(self, "numerator", frozenset(acc))
        object.__setattr__(self, "e", e)

    @property
    def top(self) -> int:
        return max(self.numerator) if self.numerator else 0

    def guard(self) -> int:
        """Extra room below a window: e plus the numerator span."""
        if not self.numerator:
            return self.e
        return self.e + max(self.numerator) - min(self.numerator)

    def text(self) -> str:
        num = _laurent_text(self.numerator)
        if self.e == 0:
            return num
        return f"({num}) / (1+t^-1)^{self.e}"

    __str__ = text


def expand(r: RationalSeries, lo: int) -> WindowedSeries:
    """Exact expansion of ``r`` on [lo, top].

    Uses 1/(1+t^-1)^e = sum_i C(e+i-1, i) t^-i.
    """
    hi = max(r.top, lo)
    if not r.numerator:
        return WindowedSeries(lo, hi)
    acc: set = set()
    for a in r.numerator:
        if r.e == 0:
            if a >= lo:
                acc ^= {a}
            continue
        for i in range(0, a - lo + 1):
            if binom_mod2(r.e + i - 1, i):
                acc ^= {a - i}
    return WindowedSeries(lo, hi, acc)


def P(k: int, lo: int) -> WindowedSeries:
    """P_k(t) = sum_{j <= k//2} t^j on [lo, k//2]."""
    return WindowedSeries(lo, max(k // 2, lo), range(lo, k // 2 + 1))


@dataclass
class SigmaRing:
    blocks: tuple[int, ...]
    ring: PolyRing
    sigma: dict[int, Poly2]
    M: int

    @property
    def k(self) -> int:
        return sum(1 for b in self.blocks if b % 2)


def sigma_ring(blocks: Sequence[int], ring: PolyRing | None = None) -> SigmaRing:
    blocks = tuple(blocks)
    if ring is None:
        ring = make_ring(None, blocks)
    mus = mu_polys(ring, blocks)
    M = sum(b // 2 for b in blocks)
    return SigmaRing(blocks, ring, {j - M: mus[j] for j in range(len(mus))}, M)


def psi(k: int, blocks: Sequence[int] | SigmaRing, q: WindowedSeries) -> Poly2:
    sr = blocks if isinstance(blocks, SigmaRing) else sigma_ring(blocks)
    if k != sr.k:
        raise ValueError(f"k={k} but blocks {sr.blocks} have {sr.k} odd sizes")
    if q.lo > -sr.M:
        raise WindowTooNarrow(f"window starts at {q.lo}, needs {-sr.M} or lower")
    acc = sr.ring.zero()
    for j in q.support:
        s = sr.sigma.get(j)
        if s is not None:
            acc = acc + s
    return acc


@dataclass
class KernelMember:
    label: str
    value: RationalSeries
    top_expected: int | None = None


def kernel_family(k: int, s_bound: int = 8) -> list[KernelMember]:
    """Series that psi_k must send to zero.

    odd k = 2m+1: P_{k-2j} / (1+t^-1)^{2j} for j < m;
    even k = 2m: P_{k-2j-1} / (1+t^-1)^{2j+1} for j < m-1;
    plus P_k (odd k >= 3), t^{k/2} (even k >= 2) and t^-s + t^{s+k}.
    P_i is written t^{i//2} / (1+t^-1).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    out = []
    m = k // 2
    if k % 2:
        for j in range(m):
            out.append(KernelMember(f"P{k - 2 * j}/(1+t^-1)^{2 * j}",
                                    RationalSeries([m - j], 2 * j + 1), m - j))
        if k >= 3:
            out.append(KernelMember(f"P{k}", RationalSeries([m], 1), m))
    else:
        for j in range(max(m - 1, 0)):
            out.append(KernelMember(f"P{k - 2 * j - 1}/(1+t^-1)^{2 * j + 1}",
                                    RationalSeries([m - 1 - j], 2 * j + 2), m - 1 - j))
        if k >= 2:
            out.append(KernelMember(f"t^{m}", RationalSeries([m], 0), m))
    for s in range(-(k // 2), s_bound + 1):
        r = RationalSeries([-s, s + k], 0)
        if r.numerator:
            out.append(KernelMember(f"t^{-s}+t^{s + k}", r))
    return out


@dataclass
class KernelCheck:
    label: str
    image_zero: bool
    triangular: bool

    @property
    def ok(self) -> bool:
        return self.image_zero and self.triangular


def verify_kernel(k: int, blocks: Sequence[int], s_bound: int = 8) -> list[KernelCheck]:
    sr = sigma_ring(blocks)
    out = []
    for mem in kernel_family(k, s_bound):
        lo = -sr.M - mem.value.guard()
        ser = expand(mem.value, lo)
        img = psi(k, sr, ser)
        tri = True
        if mem.top_expected is not None:
            tri = bool(ser.support) and max(ser.support) == mem.top_expected
        out.append(KernelCheck(mem.label, img.is_zero(), tri))
    return out


def peel_identity(blocks: Sequence[int], q: WindowedSeries) -> tuple[Poly2, Poly2]:
    """Both sides of the recursion removing the last odd block.

    With alpha_i the powers of that block shifted by its half size,
    psi_k(Q) = sum_{i >= 1} alpha_i psi_{k-1}((t^-i + t^{i-1}) Q).
    """
    blocks = tuple(blocks)
    order = even_first_order(blocks)
    odd_pos = [p for p in order if blocks[p] % 2]
    if not odd_pos:
        raise ValueError("needs an odd block")
    last = odd_pos[-1]
    full = sigma_ring(blocks)
    lhs = psi(full.k, full, q)
    n = blocks[last]
    half = n // 2
    rest = tuple(b for p, b in enumerate(blocks) if p != last)
    # rebuild the smaller ring's sigma on the full ring's variables
    names = {p: i + 1 for i, p in enumerate(q for q in range(len(blocks)) if q != last)}
    sub_ring = make_ring(None, rest)
    rename = {}
    for nm in sub_ring.names:
        i, p = nm[1:].split("_")
        old = [pp for pp, new in names.items() if new == int(p)][0]
        rename[nm] = full.ring.var(f"b{i}_{old + 1}")
    small = sigma_ring(rest, sub_ring) if rest else None
    rhs = full.ring.zero()
    for i in range(1, n - half + 1):
        idx = i + half
        j = min(idx, n - idx)
        alpha = full.ring.const(1) if j == 0 else full.ring.var(f"b{j}_{last + 1}")
        shifted = q.times_laurent([-i, i - 1])
        if small is None:
            val = full.ring.const(1 if 0 in shifted.support else 0)
        else:
            v = psi(full.k - 1, small, shifted)
            val = v.substitute(rename) if rename else full.ring.const(1 if v.terms else 0)
        rhs = rhs + alpha * val
    return lhs, rhs
