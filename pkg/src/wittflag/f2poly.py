"""Multivariate polynomials over F2 with Groebner bases and regularity checks.

Monomials are exponent tuples over a fixed :class:`PolyRing`; a polynomial is
a frozenset of monomials (coefficients are implicitly 1).  The term order is a
weighted degree-reverse-lexicographic order, optionally preceded by a block of
elimination variables.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]

INFINITE = math.inf


def binom_mod2(n: int, k: int) -> int:
    """Parity of C(n, k) by Lucas: odd iff the bits of k sit inside those of n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return 1 if (k & (n - k)) == 0 else 0


class PolyRing:
    """Variable names, positive integer weights and the term order.

    ``elim`` lists variables that dominate the order lexicographically (by
    weighted degree in that block), which turns Groebner bases into
    elimination bases for them.
    """

    def __init__(self, names: Sequence[str], weights: Sequence[int] | None = None,
                 elim: Sequence[str] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for nm in names:
            if not _NAME_RE.fullmatch(nm):
                raise ValueError(f"bad variable name {nm!r}")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names) or any(w <= 0 for w in weights):
            raise ValueError("weights must be positive and match the variables")
        self.names = names
        self.weights = weights
        self.index = {nm: i for i, nm in enumerate(names)}
        self.elim = tuple(self.index[e] for e in elim)
        self._rest = tuple(i for i in range(len(names)) if i not in self.elim)
        self._keys: dict[Monomial, tuple] = {}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.weights == other.weights and self.elim == other.elim)

    def __hash__(self) -> int:
        return hash((self.names, self.weights, self.elim))

    def __repr__(self) -> str:
        return f"PolyRing({list(self.names)}, weights={list(self.weights)})"

    def key(self, m: Monomial) -> tuple:
        k = self._keys.get(m)
        if k is None:
            w = self.weights
            rest = self._rest
            k = (sum(w[i] * m[i] for i in rest),
                 tuple(-m[i] for i in reversed(rest)))
            if self.elim:
                e = self.elim
                k = (sum(w[i] * m[i] for i in e), tuple(m[i] for i in e)) + k
            self._keys[m] = k
        return k

    def wdeg(self, m: Monomial) -> int:
        return sum(a * b for a, b in zip(self.weights, m))

    def one(self) -> Monomial:
        return (0,) * len(self.names)

    def var(self, name: str) -> "Poly2":
        e = [0] * len(self.names)
        e[self.index[name]] = 1
        return Poly2(self, (tuple(e),))

    def gens(self) -> list["Poly2"]:
        return [self.var(nm) for nm in self.names]

    def const(self, c: int) -> "Poly2":
        return Poly2(self, (self.one(),) if c % 2 else ())

    def zero(self) -> "Poly2":
        return Poly2(self, ())

    def with_order(self, weights: Sequence[int] | None = None,
                   elim: Sequence[str] = ()) -> "PolyRing":
        return PolyRing(self.names, self.weights if weights is None else weights, elim)

    def parse(self, text: str) -> "Poly2":
        return parse_poly(self, text)


_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Poly2:
    """Polynomial over F2.  Arithmetic requires both operands on the same ring."""

    ring: PolyRing
    terms: frozenset = field(default_factory=frozenset)

    def __init__(self, ring: PolyRing, terms: Iterable[Monomial] = ()):
        object.__setattr__(self, "ring", ring)
        if not isinstance(terms, frozenset):
            acc: set = set()
            for t in terms:
                acc ^= {t}
            terms = frozenset(acc)
        object.__setattr__(self, "terms", terms)

    def _check(self, other: "Poly2") -> None:
        if not isinstance(other, Poly2):
            raise TypeError(f"expected Poly2, got {type(other).__name__}")
        if other.ring.names != self.ring.names:
            raise ValueError(
                f"variable sets differ: {self.ring.names} vs {other.ring.names}")

    def _coerce(self, other) -> "Poly2":
        if isinstance(other, int):
            return self.ring.const(other)
        self._check(other)
        return other

    def __add__(self, other) -> "Poly2":
        other = self._coerce(other)
        return Poly2(self.ring, self.terms ^ other.terms)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other) -> "Poly2":
        other = self._coerce(other)
        return Poly2(self.ring, _mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly2":
        if e < 0:
            raise ValueError("negative exponent")
        out = self.ring.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring.names, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=self.ring.key, reverse=True)

    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.key)

    def wdeg(self) -> int:
        """Weighted degree; -1 for the zero polynomial."""
        return max((self.ring.wdeg(t) for t in self.terms), default=-1)

    def homogeneous_component(self, d: int) -> "Poly2":
        return Poly2(self.ring, frozenset(t for t in self.terms if self.ring.wdeg(t) == d))

    def leading_form(self) -> "Poly2":
        return self.homogeneous_component(self.wdeg())

    def variables(self) -> set[str]:
        used = set()
        for t in self.terms:
            used.update(self.ring.names[i] for i, e in enumerate(t) if e)
        return used

    def substitute(self, values: Mapping[str, "Poly2"]) -> "Poly2":
        """Replace variables by polynomials (all on one target ring)."""
        if not values:
            return self
        target = next(iter(values.values())).ring
        for v in values.values():
            if v.ring.names != target.names:
                raise ValueError("substitution values live on different rings")
        images: list[Poly2] = []
        for nm in self.ring.names:
            if nm in values:
                images.append(values[nm])
            elif nm in target.index:
                images.append(target.var(nm))
            else:
                raise ValueError(f"no image for variable {nm!r}")
        acc: set = set()
        powcache: dict[tuple[int, int], frozenset] = {}
        for t in self.terms:
            cur = frozenset((target.one(),))
            for i, e in enumerate(t):
                if e:
                    p = powcache.get((i, e))
                    if p is None:
                        p = (images[i] ** e).terms
                        powcache[(i, e)] = p
                    cur = _mul(cur, p)
            acc ^= cur
        return Poly2(target, frozenset(acc))

    def to_ring(self, ring: PolyRing) -> "Poly2":
        """Re-express on a ring whose variables include all variables used here."""
        idx = [ring.index.get(nm) for nm in self.ring.names]
        out = []
        for t in self.terms:
            e = [0] * ring.nvars
            for i, a in enumerate(t):
                if a:
                    if idx[i] is None:
                        raise ValueError(f"variable {self.ring.names[i]!r} missing in target ring")
                    e[idx[i]] = a
            out.append(tuple(e))
        return Poly2(ring, out)

    def rename(self, ring: PolyRing) -> "Poly2":
        """Same exponent vectors, different variable names (same arity)."""
        if ring.nvars != self.ring.nvars:
            raise ValueError("rename needs rings of equal size")
        return Poly2(ring, self.terms)

    def text(self) -> str:
        return format_poly(self)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly2({format_poly(self)!r})"


def _mul(a: frozenset | set, b: frozenset | set) -> frozenset:
    acc: set = set()
    for x in a:
        for y in b:
            acc ^= {tuple(p + q for p, q in zip(x, y))}
    return frozenset(acc)


def format_monomial(ring: PolyRing, m: Monomial) -> str:
    parts = []
    for nm, e in zip(ring.names, m):
        if e == 1:
            parts.append(nm)
        elif e > 1:
            parts.append(f"{nm}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(p: Poly2) -> str:
    if not p.terms:
        return "0"
    return " + ".join(format_monomial(p.ring, t) for t in p.sorted_terms())


_FACTOR_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^([1-9][0-9]*))?")


def parse_poly(ring: PolyRing, text: str) -> Poly2:
    """Inverse of :func:`format_poly`: terms joined by ' + ', factors by '*'."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    terms = []
    for chunk in text.split(" + "):
        if chunk == "1":
            terms.append(ring.one())
            continue
        e = [0] * ring.nvars
        for factor in chunk.split("*"):
            mt = _FACTOR_RE.fullmatch(factor)
            if not mt:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            nm, power = mt.group(1), mt.group(2)
            if nm not in ring.index:
                raise ValueError(f"unknown variable {nm!r}")
            e[ring.index[nm]] += int(power) if power else 1
        terms.append(tuple(e))
    return Poly2(ring, terms)


# ---------------------------------------------------------------- reduction

def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _shift(p: Iterable[Monomial], q: Monomial) -> set:
    return {tuple(a + b for a, b in zip(t, q)) for t in p}


def _nf(p: Iterable[Monomial], basis: Sequence[frozenset], lms: Sequence[Monomial],
        key) -> frozenset:
    """Full reduction of ``p`` by polynomials with the given leading monomials."""
    p = set(p)
    r = set()
    while p:
        m = max(p, key=key)
        for g, lm in zip(basis, lms):
            if _divides(lm, m):
                p ^= _shift(g, tuple(a - b for a, b in zip(m, lm)))
                break
        else:
            p.remove(m)
            r.add(m)
    return frozenset(r)


def _spoly(f: frozenset, lf: Monomial, g: frozenset, lg: Monomial) -> set:
    l = _lcm(lf, lg)
    a = _shift(f, tuple(x - y for x, y in zip(l, lf)))
    b = _shift(g, tuple(x - y for x, y in zip(l, lg)))
    return a ^ b


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass
class GroebnerBasis:
    """Reduced Groebner basis; ``polys`` are sorted by leading monomial."""

    ring: PolyRing
    polys: list[Poly2]

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [p.lm() for p in self.polys]

    def is_unit_ideal(self) -> bool:
        return any(p.lm() == self.ring.one() for p in self.polys)

    def normal_form(self, f: Poly2) -> Poly2:
        if f.ring.names != self.ring.names:
            raise ValueError("normal form of a polynomial from another ring")
        key = self.ring.key
        return Poly2(self.ring, _nf(f.terms, [g.terms for g in self.polys],
                                    self.leading_monomials, key))

    def contains(self, f: Poly2) -> bool:
        return self.normal_form(f).is_zero()

    def quotient_dimension(self) -> int | float:
        return _count_standard(self.ring.nvars, self.leading_monomials)

    def standard_monomials(self) -> list[Monomial]:
        out: list[Monomial] = []
        _count_standard(self.ring.nvars, self.leading_monomials, out)
        return out


def groebner(gens: Sequence[Poly2], ring: PolyRing | None = None) -> GroebnerBasis:
    """Buchberger's algorithm with the Gebauer-Moeller pair criteria.

    The result is the reduced basis for the ring's term order.
    """
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring.names != ring.names:
            raise ValueError("generators live on different rings")
    key = ring.key
    G: list[frozenset] = []
    L: list[Monomial] = []
    alive: list[bool] = []
    pairs: set[tuple[int, int]] = set()

    def update(h: frozenset, lh: Monomial) -> None:
        # Gebauer-Moeller UPDATE as in Becker-Weispfenning
        idx = len(G)
        C = [i for i in range(idx) if alive[i]]
        D: list[int] = []
        while C:
            i = C.pop()
            lhi = _lcm(lh, L[i])
            if _coprime(lh, L[i]) or not any(
                    _divides(_lcm(lh, L[j]), lhi) for j in C + D):
                D.append(i)
        E = {(i, idx) for i in D if not _coprime(lh, L[i])}
        keep = set()
        for (i, j) in pairs:
            lij = _lcm(L[i], L[j])
            if (not _divides(lh, lij) or _lcm(L[i], lh) == lij
                    or _lcm(L[j], lh) == lij):
                keep.add((i, j))
        pairs.clear()
        pairs.update(keep)
        pairs.update(E)
        for i in range(idx):
            if alive[i] and _divides(lh, L[i]):
                alive[i] = False
        G.append(h)
        L.append(lh)
        alive.append(True)

    for g in sorted(gens, key=lambda p: key(p.lm()) if p.terms else ()):
        if not g.terms:
            continue
        h = _nf(g.terms, [G[i] for i in range(len(G)) if alive[i]],
                [L[i] for i in range(len(G)) if alive[i]], key)
        if h:
            update(h, max(h, key=key))
    while pairs:
        i, j = min(pairs, key=lambda pr: key(_lcm(L[pr[0]], L[pr[1]])))
        pairs.discard((i, j))
        s = _spoly(G[i], L[i], G[j], L[j])
        act = [k for k in range(len(G)) if alive[k]]
        h = _nf(s, [G[k] for k in act], [L[k] for k in act], key)
        if h:
            update(h, max(h, key=key))

    act = [k for k in range(len(G)) if alive[k]]
    # minimal basis: drop elements whose leading monomial is divisible by another
    minimal = []
    for k in act:
        if not any(k2 != k and _divides(L[k2], L[k]) and (L[k2] != L[k] or k2 < k)
                   for k2 in act):
            minimal.append(k)
    polys = [G[k] for k in minimal]
    lms = [L[k] for k in minimal]
    reduced = []
    for n, p in enumerate(polys):
        others = [q for m, q in enumerate(polys) if m != n]
        olms = [q for m, q in enumerate(lms) if m != n]
        tail = _nf(p - {lms[n]}, others, olms, key)
        reduced.append(Poly2(ring, tail | {lms[n]}))
    reduced.sort(key=lambda p: key(p.lm()))
    return GroebnerBasis(ring, reduced)


def normal_form(f: Poly2, gb: GroebnerBasis) -> Poly2:
    return gb.normal_form(f)


def _count_standard(nvars: int, lms: Sequence[Monomial], out: list | None = None):
    """Count monomials outside the monomial ideal generated by ``lms``."""
    if any(all(e == 0 for e in m) for m in lms):
        return 0
    for v in range(nvars):
        if not any(m[v] > 0 and all(e == 0 for i, e in enumerate(m) if i != v) for m in lms):
            return INFINITE
    count = 0
    stack: list[tuple[Monomial, int]] = [((0,) * nvars, 0)]
    while stack:
        m, last = stack.pop()
        count += 1
        if out is not None:
            out.append(m)
        for v in range(last, nvars):
            nxt = m[:v] + (m[v] + 1,) + m[v + 1:]
            if not any(_divides(l, nxt) for l in lms):
                stack.append((nxt, v))
    return count


def quotient_dimension(gens: Sequence[Poly2] | GroebnerBasis,
                       ring: PolyRing | None = None) -> int | float:
    """dim over F2 of the quotient ring, or ``INFINITE``."""
    gb = gens if isinstance(gens, GroebnerBasis) else groebner(gens, ring)
    return gb.quotient_dimension()


# --------------------------------------------------------------- regularity

@dataclass
class RegularityVerdict:
    status: str  # REGULAR, NOT_REGULAR or INCONCLUSIVE
    method: str
    detail: str = ""
    leading_form_dimension: int | float | None = None

    @property
    def regular(self) -> bool:
        return self.status == "REGULAR"


def _direct_cap(ring: PolyRing) -> int:
    return 2 * sum(ring.weights)


def colon_ideal(gb: GroebnerBasis, f: Poly2) -> list[Poly2]:
    """Generators of (I : f), computed as (I intersect (f)) / f by elimination."""
    ring = gb.ring
    tname = "elimT"
    while tname in ring.index:
        tname += "_"
    ext = PolyRing((tname,) + ring.names, (1,) + ring.weights, elim=(tname,))
    t = ext.var(tname)
    gens = [t * g.to_ring(ext) for g in gb.polys]
    gens.append((t + 1) * f.to_ring(ext))
    egb = groebner(gens, ext)
    out = []
    for h in egb.polys:
        if h.lm()[0] == 0:
            q = exact_divide(Poly2(ring, (m[1:] for m in h.terms)), f)
            out.append(q)
    return out


def exact_divide(h: Poly2, f: Poly2) -> Poly2:
    """Return q with h = q*f, raising if f does not divide h."""
    if f.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    key = h.ring.key
    lf = f.lm()
    rem = set(h.terms)
    q = set()
    while rem:
        m = max(rem, key=key)
        if not _divides(lf, m):
            raise ValueError("polynomial does not divide exactly")
        s = tuple(a - b for a, b in zip(m, lf))
        q ^= {s}
        rem ^= _shift(f.terms, s)
    return Poly2(h.ring, q)


def is_regular_sequence(seq: Sequence[Poly2], method: str = "LEADING-FORM",
                        ring: PolyRing | None = None) -> RegularityVerdict:
    """Decide whether ``seq`` is a regular sequence in the polynomial ring.

    LEADING-FORM: if the top weighted-homogeneous components generate an ideal
    of finite colength and there are as many elements as variables, they form
    a homogeneous system of parameters, hence a regular sequence, and so does
    ``seq``.  Anything else is INCONCLUSIVE.

    DIRECT: checks that each element is a non-zero-divisor modulo the earlier
    ones via colon ideals, and that the full ideal is proper.  Limited to rings
    whose weight sum keeps ``2 * sum(weights)`` small.
    """
    seq = list(seq)
    if ring is None:
        if not seq:
            return RegularityVerdict("REGULAR", method, "empty sequence")
        ring = seq[0].ring
    if method == "LEADING-FORM":
        if len(seq) != ring.nvars:
            return RegularityVerdict("INCONCLUSIVE", method,
                                     f"{len(seq)} elements for {ring.nvars} variables")
        if not seq:
            return RegularityVerdict("REGULAR", method, "no variables", 1)
        forms = [p.leading_form() for p in seq]
        if any(f.wdeg() <= 0 for f in forms):
            return RegularityVerdict("INCONCLUSIVE", method, "constant leading form")
        dim = quotient_dimension(forms, ring)
        if dim == INFINITE:
            return RegularityVerdict("INCONCLUSIVE", method,
                                     "leading forms have infinite colength", dim)
        return RegularityVerdict("REGULAR", method,
                                 f"leading-form quotient has dimension {dim}", dim)
    if method == "DIRECT":
        cap = _direct_cap(ring)
        if cap > 64:
            return RegularityVerdict("INCONCLUSIVE", method,
                                     f"ring too large for the direct check (cap {cap})")
        for i, f in enumerate(seq):
            if f.is_zero():
                return RegularityVerdict("NOT_REGULAR", method, f"element {i} is zero")
            prefix = [p for p in seq[:i] if p.terms]
            if prefix:
                gb = groebner(prefix, ring)
                for q in colon_ideal(gb, f):
                    if not gb.contains(q):
                        return RegularityVerdict(
                            "NOT_REGULAR", method,
                            f"element {i} is a zero divisor modulo the earlier ones")
        if seq and groebner(seq, ring).is_unit_ideal():
            return RegularityVerdict("NOT_REGULAR", method, "ideal is the unit ideal")
        return RegularityVerdict("REGULAR", method, "all colon ideals trivial")
    raise ValueError(f"unknown method {method!r}")


# ------------------------------------------------------------ linear solves

@dataclass
class Combination:
    """Outcome of a linear-combination search.

    ``status`` is FOUND, NONE (no combination exists at all, SCALARS mode) or
    NONE_AT_BOUND (nothing within the coefficient degree bound).
    """

    status: str
    coefficients: list[Poly2] | None = None
    mode: str = "SCALARS"
    bound: int | None = None

    @property
    def found(self) -> bool:
        return self.status == "FOUND"


def solve_gf2(columns: Sequence[int], target: int) -> int | None:
    """Find a subset of ``columns`` (int bitsets) XOR-ing to ``target``.

    Returns the subset as a bitmask over column indices, or None.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for j, col in enumerate(columns):
        v, comb = col, 1 << j
        while v:
            hb = v.bit_length() - 1
            if hb in pivots:
                pv, pc = pivots[hb]
                v ^= pv
                comb ^= pc
            else:
                pivots[hb] = (v, comb)
                break
    v, comb = target, 0
    while v:
        hb = v.bit_length() - 1
        if hb not in pivots:
            return None
        pv, pc = pivots[hb]
        v ^= pv
        comb ^= pc
    return comb


def subring_monomials(ring: PolyRing, variables: Sequence[str], bound: int) -> list[Monomial]:
    """Monomials in ``variables`` of weighted degree <= bound, by increasing weight."""
    idx = [ring.index[v] for v in variables]
    out = [ring.one()]
    frontier = [ring.one()]
    seen = {ring.one()}
    while frontier:
        nxt = []
        for m in frontier:
            for i in idx:
                e = list(m)
                e[i] += 1
                e = tuple(e)
                if e not in seen and ring.wdeg(e) <= bound:
                    seen.add(e)
                    nxt.append(e)
        out.extend(nxt)
        frontier = nxt
    out.sort(key=lambda m: (ring.wdeg(m), ring.key(m)))
    return out


def solve_linear_combination(target: Poly2, candidates: Sequence[Poly2],
                             mode: str = "SCALARS", subring_vars: Sequence[str] = (),
                             degree_bound: int | None = None) -> Combination:
    """Express ``target`` as sum c_i * candidates[i].

    SCALARS: c_i in F2.  SUBRING: c_i polynomials in ``subring_vars`` of
    weighted degree at most ``degree_bound`` (default: degree of target + 2).
    """
    ring = target.ring
    for c in candidates:
        target._check(c)
    if mode == "SCALARS":
        coef_monos = [ring.one()]
        bound = 0
    elif mode == "SUBRING":
        bound = degree_bound if degree_bound is not None else max(target.wdeg(), 0) + 2
        coef_monos = subring_monomials(ring, subring_vars, bound)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    unknowns = [(i, cm) for i in range(len(candidates)) for cm in coef_monos]
    index: dict[Monomial, int] = {}

    def bits(terms: Iterable[Monomial]) -> int:
        v = 0
        for t in terms:
            k = index.get(t)
            if k is None:
                k = index[t] = len(index)
            v ^= 1 << k
        return v

    cols = [bits(_shift(candidates[i].terms, cm)) for i, cm in unknowns]
    tv = bits(target.terms)
    sol = solve_gf2(cols, tv)
    if sol is None:
        return Combination("NONE" if mode == "SCALARS" else "NONE_AT_BOUND",
                           None, mode, bound)
    coeffs = [set() for _ in candidates]
    for j, (i, cm) in enumerate(unknowns):
        if sol >> j & 1:
            coeffs[i] ^= {cm}
    return Combination("FOUND", [Poly2(ring, c) for c in coeffs], mode, bound)


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    out = math.factorial(sum(parts))
    for p in parts:
        out //= math.factorial(p)
    return out


__all__ = [
    "INFINITE", "PolyRing", "Poly2", "GroebnerBasis", "RegularityVerdict", "Combination",
    "binom_mod2", "groebner", "normal_form", "quotient_dimension", "is_regular_sequence",
    "solve_linear_combination", "solve_gf2", "format_poly", "parse_poly", "colon_ideal",
    "exact_divide", "subring_monomials", "multinomial",
]
