"""Leading-term analysis: the pure-power finiteness test, standard-monomial
counting, and a Sturm-sequence real-root count for univariate eliminants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded
from .groebner import GroebnerBasis
from .poly import Polynomial, TermOrder, VariableTable, leading_term, mono_divides

INFINITE = math.inf


@dataclass(frozen=True)
class LeadingTermSet:
    monomials: tuple
    table: VariableTable
    order: TermOrder | None
    source: str  # "basis" or "fixture"

    def __post_init__(self):
        zero = (0,) * len(self.table)
        mons = tuple(sorted(set(map(tuple, self.monomials)), reverse=True))
        if zero in mons and len(mons) > 1:
            raise ValueError("the constant monomial only occurs in the set {1}")
        object.__setattr__(self, "monomials", mons)

    def is_unit(self) -> bool:
        return self.monomials == ((0,) * len(self.table),)


def leading_terms(G: GroebnerBasis) -> LeadingTermSet:
    mons = [leading_term(g, G.order)[1] for g in G.generators]
    return LeadingTermSet(tuple(mons), G.table, G.order, "basis")


def leading_terms_from_polys(polys, table: VariableTable, source: str = "fixture") -> LeadingTermSet:
    """Declared leading terms: each polynomial must be a single monomial."""
    mons = []
    for f in polys:
        if len(f) != 1:
            raise ValueError(f"declared leading term {f} is not a monomial")
        mons.append(f.terms[0][1])
    return LeadingTermSet(tuple(mons), table, None, source)


def _pure_powers(H: LeadingTermSet, n: int):
    """Smallest pure-power exponent per variable (None when absent)."""
    best = [None] * n
    for m in H.monomials:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if best[i] is None or m[i] < best[i]:
                best[i] = m[i]
    return best


def is_zero_dimensional(H: LeadingTermSet, table: VariableTable | None = None) -> bool:
    """True iff every variable has a pure power among the leading terms.

    The unit ideal has an empty variety, which is finite.
    """
    n = len(table or H.table)
    if H.is_unit():
        return True
    return all(e is not None for e in _pure_powers(H, n))


def standard_monomials(H: LeadingTermSet, table: VariableTable | None = None,
                       cap: int = 10**6):
    """Number of monomials divisible by no element of H, or ``INFINITE``."""
    if cap <= 0:
        raise ValueError("cap must be positive")
    n = len(table or H.table)
    if H.is_unit():
        return 0
    if not is_zero_dimensional(H, table):
        return INFINITE
    bounds = _pure_powers(H, n)
    mons = H.monomials
    count = 0
    m = [0] * n

    # the standard monomials form an order ideal: walk it variable by variable
    # and prune as soon as a prefix is already divisible by a leading term
    def walk(i):
        nonlocal count
        if i == n:
            count += 1
            if count > cap:
                raise CapExceeded(f"more than {cap} standard monomials")
            return
        for e in range(bounds[i]):
            m[i] = e
            t = tuple(m)
            if any(mono_divides(h, t) for h in mons):
                break
            walk(i + 1)
        m[i] = 0

    walk(0)
    return count


# ---------------------------------------------------------------------------
# univariate real roots


def univariate_coefficients(f: Polynomial, var) -> list:
    """Dense coefficients (lowest degree first) of a polynomial in one variable."""
    i = var if isinstance(var, int) else f.table.index(var)
    for m in f.as_dict():
        if any(e for k, e in enumerate(m) if k != i):
            raise ValueError(f"{f} involves variables other than {f.table.names[i]}")
    deg = max((m[i] for m in f.as_dict()), default=0)
    out = [Fraction(0)] * (deg + 1)
    for c, m in f.terms:
        out[m[i]] = Fraction(c)
    return out


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _rem(a, b):
    a = list(a)
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for k, c in enumerate(b):
            a[shift + k] -= q * c
        a.pop()
        _trim(a)
    return a


def _eval_sign(a, x):
    v = Fraction(0)
    for c in reversed(a):
        v = v * x + c
    return (v > 0) - (v < 0)


def _sign_changes(signs):
    s = [x for x in signs if x]
    return sum(1 for u, v in zip(s, s[1:]) if u != v)


def real_root_count(coeffs) -> int:
    """Number of distinct real roots of a nonzero univariate polynomial (Sturm)."""
    a = _trim([Fraction(c) for c in coeffs])
    if not a:
        raise ValueError("zero polynomial has infinitely many roots")
    if len(a) == 1:
        return 0
    seq = [a, _trim([k * c for k, c in enumerate(a)][1:])]
    while len(seq[-1]) > 1:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    # signs at -inf and +inf come from the leading coefficients
    at_pos = [(s[-1] > 0) - (s[-1] < 0) for s in seq]
    at_neg = [v if (len(s) - 1) % 2 == 0 else -v for v, s in zip(at_pos, seq)]
    return _sign_changes(at_neg) - _sign_changes(at_pos)
