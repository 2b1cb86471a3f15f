"""Buchberger's algorithm, normal forms, triviality and radical membership.

The engine works on plain ``{monomial: int}`` dicts.  Over Q coefficients are
kept integral (fraction-free reduction with content removal) and only the
final basis is made monic; over Z_p everything is reduced modulo p and kept
monic throughout.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from gmpy2 import gcd as _gcd, mpz

from .errors import ResourceLimit, TableMismatch, ZeroPolynomial
from .poly import (
    Polynomial,
    TermOrder,
    grevlex,
    leading_term,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)
from .scalars import inv_mod

DEFAULT_MAX_PAIRS = 10**6
DEFAULT_MAX_TERMS = 10**5


@dataclass(frozen=True)
class Limits:
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_terms: int = DEFAULT_MAX_TERMS


@dataclass
class GBStats:
    pairs: int = 0
    zero_reductions: int = 0
    max_terms: int = 0
    pairs_skipped: int = 0


@dataclass
class GroebnerBasis:
    """Reduced monic basis, sorted by leading monomial (largest first)."""

    generators: list
    order: TermOrder
    stats: GBStats = field(default_factory=GBStats)

    @property
    def table(self):
        return self.generators[0].table

    @property
    def modulus(self) -> int:
        return self.generators[0].modulus if self.generators else 0

    def leading_monomials(self) -> list:
        return [leading_term(g, self.order)[1] for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


# ---------------------------------------------------------------------------
# internal kernel


def _neg_key(order: TermOrder):
    """Heap key: a flat tuple that sorts ascending as monomials sort descending."""
    kind, prio = order.kind, order.priority
    if kind == "lex":
        def k(m):
            return tuple([-m[i] for i in prio])
    elif kind == "grlex":
        def k(m):
            return (-sum(m),) + tuple([-m[i] for i in prio])
    else:
        rev = prio[::-1]

        def k(m):
            return (-sum(m),) + tuple([m[i] for i in rev])
    return k


class _Gen:
    """A reducer: leading monomial, leading coefficient and the remaining terms."""

    __slots__ = ("d", "lm", "lc", "lcinv", "tail")

    def __init__(self, d, key, p):
        self.d = d
        self.lm = max(d, key=key)
        self.lc = d[self.lm]
        self.lcinv = inv_mod(self.lc, p) if p else None
        self.tail = [(m, c) for m, c in d.items() if m != self.lm]


def _content(values):
    g = mpz(0)
    for v in values:
        g = _gcd(g, v)
        if g == 1:
            return 1
    return g


def _reduce(h, gens, nkey, p, limits, stats, tail=True):
    """Fully reduce ``h`` by ``gens``.

    Returns ``(r, lam)`` with ``lam * h - r`` in the ideal: ``lam`` is 1 over
    Z_p and a positive rational over Q (fraction-free scaling).  The largest
    reducible term is always reduced first, by the first reducer in list
    order whose leading monomial divides it.  With ``tail=False`` the loop
    stops at the first irreducible term.
    """
    h = dict(h)
    heap = [(nkey(m), m) for m in h]
    heapq.heapify(heap)
    r = {}
    # over Q, remainder terms are stored unscaled together with the value of
    # lam when they were emitted; they are brought up to date at the end
    r_mark = {}
    lam = mpz(1)
    lam_den = mpz(1)
    steps = 0
    max_terms = limits.max_terms
    heads = [(g.lm, g) for g in gens]
    while heap:
        _, m = heapq.heappop(heap)
        c = h.get(m)
        if c is None:
            continue
        for lm, g in heads:
            for a, b in zip(lm, m):
                if a > b:
                    break
            else:
                break
        else:
            r[m] = h.pop(m)
            r_mark[m] = lam
            if not tail:
                for mm, cc in h.items():
                    r[mm] = cc
                    r_mark[mm] = lam
                break
            continue
        del h[m]
        t = tuple([x - y for x, y in zip(m, g.lm)])
        if p:
            mult = c * g.lcinv % p
            for gm, gc in g.tail:
                mm = tuple([x + y for x, y in zip(gm, t)])
                old = h.get(mm)
                if old is None:
                    v = (-mult * gc) % p
                    if v:
                        h[mm] = v
                        heapq.heappush(heap, (nkey(mm), mm))
                else:
                    v = (old - mult * gc) % p
                    if v:
                        h[mm] = v
                    else:
                        del h[mm]
        else:
            a = g.lc
            gg = _gcd(a, c)
            fa, fc = a // gg, c // gg
            if fa < 0:
                fa, fc = -fa, -fc
            if fa != 1:
                for k in h:
                    h[k] *= fa
                lam *= fa
            for gm, gc in g.tail:
                mm = tuple([x + y for x, y in zip(gm, t)])
                old = h.get(mm)
                if old is None:
                    h[mm] = -fc * gc
                    heapq.heappush(heap, (nkey(mm), mm))
                else:
                    v = old - fc * gc
                    if v:
                        h[mm] = v
                    else:
                        del h[mm]
            steps += 1
            if steps % 16 == 0 and h:
                g0 = _content(h.values())
                if g0 > 1 and r:
                    # the remainder shares the scaling; only divide when it can follow
                    g0 = _gcd(g0, _content(r[k] * (lam // r_mark[k]) for k in r))
                if g0 > 1:
                    for k in h:
                        h[k] //= g0
                    for k in r:
                        r[k] = r[k] * (lam // r_mark[k]) // g0
                    lam_den *= g0
                    lam = mpz(1)
                    for k in r:
                        r_mark[k] = lam
        n = len(h) + len(r)
        if n > stats.max_terms:
            stats.max_terms = n
            if n > max_terms:
                raise ResourceLimit(f"intermediate polynomial exceeds {max_terms} terms")
    if not p:
        for k in r:
            if r_mark[k] != lam:
                r[k] *= lam // r_mark[k]
    return r, Fraction(int(lam), int(lam_den)) if not p else 1


def _primitive(d):
    """Integer content removed, leading sign irrelevant (callers normalize later)."""
    g = _content(list(d.values()))
    if g > 1:
        return {m: c // g for m, c in d.items()}
    return d


def _to_int_dict(f: Polynomial) -> dict:
    """Clear denominators of a rational polynomial."""
    den = 1
    for c in f._d.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {m: mpz(int(c * den)) for m, c in f._d.items()}


def _prepare(F: Sequence[Polynomial]):
    if not F:
        raise ValueError("need at least one polynomial")
    table, p = F[0].table, F[0].modulus
    for f in F:
        if f.table != table:
            raise TableMismatch("polynomials live on different variable tables")
        if f.modulus != p:
            raise TableMismatch("polynomials have different coefficient domains")
    return table, p


def _monic_poly(d, table, p, key):
    lm = max(d, key=key)
    lc = d[lm]
    if p:
        inv = inv_mod(lc, p)
        return Polynomial(table, {m: c * inv % p for m, c in d.items()}, p, _trusted=True)
    lc = int(lc)
    return Polynomial(table, {m: Fraction(int(c), lc) for m, c in d.items()}, 0, _trusted=True)


# ---------------------------------------------------------------------------
# public operations


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder | None = None,
                limits: Limits = Limits()) -> Polynomial:
    """Remainder of full multivariate division of f by the list G."""
    order = order or grevlex(f.table)
    table, p = _prepare([f, *G])
    key = order.key
    nkey = _neg_key(order)
    gens = [_Gen(g._d if p else _to_int_dict(g), key, p) for g in G if g]
    if f.is_zero():
        return f
    if p:
        r, _ = _reduce(f._d, gens, nkey, p, limits, GBStats())
        return Polynomial(table, r, p, _trusted=True)
    den = 1
    for c in f._d.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    h = {m: int(c * den) for m, c in f._d.items()}
    r, lam = _reduce(h, gens, nkey, 0, limits, GBStats())
    scale = 1 / (lam * den)
    return Polynomial(table, {m: int(c) * scale for m, c in r.items()}, 0, _trusted=True)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder | None = None) -> Polynomial:
    """(L/lt f)*f - (L/lt g)*g with L the lcm of the leading monomials."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of a zero polynomial")
    order = order or grevlex(f.table)
    cf, mf = leading_term(f, order)
    cg, mg = leading_term(g, order)
    L = mono_lcm(mf, mg)
    p = f.modulus
    inv_f = inv_mod(cf, p) if p else 1 / Fraction(cf)
    inv_g = inv_mod(cg, p) if p else 1 / Fraction(cg)
    return f.mul_term(inv_f, mono_div(L, mf)) - g.mul_term(inv_g, mono_div(L, mg))


def buchberger(F: Sequence[Polynomial], order: TermOrder | None = None,
               limits: Limits = Limits(), *, stop_on_unit: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by F.

    Normal selection strategy (smallest lcm first, ties by pair index) with the
    product criterion and the Gebauer-Moeller chain criterion.  As soon as a
    nonzero constant appears the basis is {1}.
    """
    table, p = _prepare(F)
    order = order or grevlex(table)
    key = order.key
    nkey = _neg_key(order)
    stats = GBStats()
    unit = GroebnerBasis([Polynomial.constant(table, 1, p)], order, stats)
    zero = (0,) * len(table)

    polys: list[_Gen] = []   # every basis element ever added, by index
    G: list[int] = []        # indices of the current basis
    B: list[tuple] = []      # pending pairs (lcm, i, j)

    def normalize(d):
        if p:
            inv = inv_mod(d[max(d, key=key)], p)
            return {m: c * inv % p for m, c in d.items()}
        d = _primitive(d)
        if d[max(d, key=key)] < 0:
            d = {m: -c for m, c in d.items()}
        return d

    def update(d):
        nonlocal G, B
        h = _Gen(d, key, p)
        k = len(polys)
        polys.append(h)
        lh = h.lm
        C = [(i, mono_lcm(lh, polys[i].lm)) for i in G]
        D = []
        while C:
            i, L = C.pop(0)
            coprime = all(a == 0 or b == 0 for a, b in zip(lh, polys[i].lm))
            if coprime or not any(mono_divides(L2, L) for _, L2 in C) and \
                    not any(mono_divides(L2, L) for _, L2 in D):
                D.append((i, L))
        E = []
        for i, L in D:
            if all(a == 0 or b == 0 for a, b in zip(lh, polys[i].lm)):
                stats.pairs_skipped += 1
            else:
                E.append((L, i, k))
        keep = []
        for L, i, j in B:
            if mono_divides(lh, L) and mono_lcm(polys[i].lm, lh) != L \
                    and mono_lcm(polys[j].lm, lh) != L:
                stats.pairs_skipped += 1
                continue
            keep.append((L, i, j))
        B = keep + E
        G = [i for i in G if not mono_divides(lh, polys[i].lm)] + [k]

    def reducers():
        return [polys[i] for i in G]

    for f in F:
        if f.is_zero():
            continue
        d = f._d if p else _to_int_dict(f)
        r, _ = _reduce(d, reducers(), nkey, p, limits, stats)
        if not r:
            stats.zero_reductions += 1
            continue
        if zero in r and len(r) == 1 and stop_on_unit:
            return unit
        update(normalize(r))

    while B:
        best = min(range(len(B)), key=lambda n: (key(B[n][0]), B[n][1], B[n][2]))
        L, i, j = B.pop(best)
        stats.pairs += 1
        if stats.pairs > limits.max_pairs:
            raise ResourceLimit(f"more than {limits.max_pairs} pair reductions")
        s = _spoly(polys[i], polys[j], L, p)
        if not s:
            stats.zero_reductions += 1
            continue
        r, _ = _reduce(s, reducers(), nkey, p, limits, stats)
        if not r:
            stats.zero_reductions += 1
            continue
        if zero in r and len(r) == 1 and stop_on_unit:
            return unit
        update(normalize(r))

    return GroebnerBasis(_interreduce([polys[i] for i in G], table, p, order, limits, stats),
                         order, stats)


def _spoly(a: _Gen, b: _Gen, L, p):
    ta, tb = mono_div(L, a.lm), mono_div(L, b.lm)
    if p:
        fa, fb = a.lcinv, b.lcinv
    else:
        g = _gcd(a.lc, b.lc)
        fa, fb = b.lc // g, a.lc // g
    h = {}
    for m, c in a.tail:
        mm = mono_mul(m, ta)
        h[mm] = h.get(mm, 0) + fa * c
    for m, c in b.tail:
        mm = mono_mul(m, tb)
        h[mm] = h.get(mm, 0) - fb * c
    if p:
        return {m: c % p for m, c in h.items() if c % p}
    return {m: c for m, c in h.items() if c}


def _interreduce(gens, table, p, order, limits, stats):
    key = order.key
    nkey = _neg_key(order)
    # leading monomials are already pairwise non-dividing; reduce tails
    out = []
    for k, g in enumerate(gens):
        others = gens[:k] + gens[k + 1:]
        r, _ = _reduce(g.d, others, nkey, p, limits, stats)
        out.append(_monic_poly(r, table, p, key))
    out.sort(key=lambda f: key(max(f._d, key=key)), reverse=True)
    return out


def groebner_basis(F, order=None, limits=Limits()) -> GroebnerBasis:
    return buchberger(F, order, limits)


def is_trivial(G: GroebnerBasis) -> bool:
    """True iff the basis is {1}, i.e. the ideal is the whole ring."""
    return len(G.generators) == 1 and G.generators[0].is_constant() \
        and not G.generators[0].is_zero()


def radical_member(f: Polynomial, F: Sequence[Polynomial], order: TermOrder | None = None,
                   limits: Limits = Limits()) -> bool:
    """Whether f vanishes on the variety of F, via F + {1 - z*f} for a fresh z."""
    table, p = _prepare([f, *F])
    if f.is_zero():
        return True
    z = table.fresh_name("z")
    big = table.extend(z)
    order = (order or grevlex(table)).extended(1)
    Fz = [g.retable(big) for g in F]
    fz = f.retable(big)
    rab = Polynomial.constant(big, 1, p) - Polynomial.var(big, z, p) * fz
    return is_trivial(buchberger(Fz + [rab], order, limits))


def spolys_reduce_to_zero(G: GroebnerBasis) -> bool:
    """Definitional check: every S-polynomial of basis pairs has normal form 0."""
    gens = G.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            s = s_polynomial(gens[i], gens[j], G.order)
            if not normal_form(s, gens, G.order).is_zero():
                return False
    return True
