"""Sparse multivariate polynomials over Q or Z_p on a declared variable table.

Monomials are plain exponent tuples, one entry per table variable.  A
polynomial keeps its terms in a dict and exposes them sorted descending in
graded-reverse-lexicographic order (the canonical printed order) regardless
of the term order an algorithm happens to run under.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadReduction,
    NonDivisible,
    NotPrime,
    NotBihomogeneous,
    TableMismatch,
    ZeroDivisor,
    ZeroPolynomial,
)
from .scalars import FpElement, inv_mod, is_prime, reduce_int_mod_p

Monomial = tuple


# ---------------------------------------------------------------------------
# variable tables


@dataclass(frozen=True)
class VariableTable:
    """Ordered variable names with an optional conjugation involution and
    optional per-variable (pi, pi-bar) bidegree weights."""

    names: tuple
    conj: tuple | None = None
    weights: tuple | None = None

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if self.conj is not None:
            conj = tuple(self.conj)
            if len(conj) != len(names) or any(conj[conj[i]] != i for i in range(len(names))):
                raise ValueError("conjugation pairing must be an involution on the table")
            object.__setattr__(self, "conj", conj)
        if self.weights is not None:
            weights = tuple(tuple(w) for w in self.weights)
            if len(weights) != len(names):
                raise ValueError("weights must cover every variable")
            if any(len(w) != 2 or min(w) < 0 for w in weights):
                raise ValueError("weights are non-negative pairs")
            object.__setattr__(self, "weights", weights)

    @classmethod
    def from_pairs(cls, names, pairs=None, weights=None):
        """Build from name pairs ``[("x1", "xc1"), ...]`` and a name->weight map.

        Variables absent from ``pairs`` are self-paired whenever any pairing
        is given."""
        names = tuple(names)
        conj = None
        if pairs is not None:
            idx = {n: i for i, n in enumerate(names)}
            c = list(range(len(names)))
            for u, v in pairs:
                c[idx[u]], c[idx[v]] = idx[v], idx[u]
            conj = tuple(c)
        w = None
        if weights is not None:
            w = tuple(tuple(weights[n]) for n in names)
        return cls(names, conj, w)

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def fresh_name(self, stem: str = "z") -> str:
        name, k = stem, 0
        while name in self.names:
            k += 1
            name = f"{stem}{k}"
        return name

    def extend(self, name: str, weight=(0, 0)) -> VariableTable:
        """A new table with one extra self-conjugate variable appended."""
        if name in self.names:
            raise ValueError(f"variable {name!r} already declared")
        conj = None if self.conj is None else self.conj + (len(self.names),)
        weights = None if self.weights is None else self.weights + (tuple(weight),)
        return VariableTable(self.names + (name,), conj, weights)

    def restrict(self, names: Sequence[str]) -> VariableTable:
        idx = [self.index(n) for n in names]
        conj = None
        if self.conj is not None:
            pos = {old: new for new, old in enumerate(idx)}
            conj = tuple(pos.get(self.conj[i], k) for k, i in enumerate(idx))
        weights = None if self.weights is None else tuple(self.weights[i] for i in idx)
        return VariableTable(tuple(names), conj, weights)

    def monomial(self, **exps) -> Monomial:
        m = [0] * len(self.names)
        for name, e in exps.items():
            m[self.index(name)] = e
        return tuple(m)


def spin_table() -> VariableTable:
    """The spin-coefficient alphabet with its (pi, pi-bar) weights."""
    return VariableTable.from_pairs(
        ("a", "ac", "b", "bc", "p", "pc", "Phi11"),
        [("a", "ac"), ("b", "bc"), ("p", "pc")],
        {"a": (1, 0), "ac": (0, 1), "b": (0, 1), "bc": (1, 0),
         "p": (1, 0), "pc": (0, 1), "Phi11": (1, 1)},
    )


def reduced_table() -> VariableTable:
    """The dehomogenized alphabet x1 = a/p, x2 = b/pc, phi11 = Phi11/(p pc), plus z."""
    return VariableTable.from_pairs(
        ("x1", "xc1", "x2", "xc2", "phi11", "z"),
        [("x1", "xc1"), ("x2", "xc2")],
    )


# spin-coefficient name -> reduced name; names mapped to None are divided out
DEHOM_MAP = {
    "a": "x1", "ac": "xc1", "b": "x2", "bc": "xc2",
    "p": None, "pc": None, "Phi11": "phi11",
}


# ---------------------------------------------------------------------------
# term orders

_ORDER_KINDS = ("lex", "grlex", "grevlex")


@dataclass(frozen=True)
class TermOrder:
    """Admissible monomial order.  ``priority[0]`` is the largest variable."""

    kind: str
    priority: tuple
    key: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        kind = self.kind.lower()
        if kind not in _ORDER_KINDS:
            raise ValueError(f"unknown term order {self.kind!r}")
        prio = tuple(self.priority)
        if sorted(prio) != list(range(len(prio))):
            raise ValueError("priority must be a permutation of variable indices")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "priority", prio)
        object.__setattr__(self, "key", _make_key(kind, prio))

    @classmethod
    def make(cls, kind: str, table: VariableTable, priority: Sequence[str] | None = None):
        """Order on ``table``; ``priority`` lists variable names largest first.

        Names left out keep their table order after the listed ones."""
        if priority is None:
            return cls(kind, tuple(range(len(table))))
        idx = [table.index(n) for n in priority]
        rest = [i for i in range(len(table)) if i not in idx]
        return cls(kind, tuple(idx + rest))

    def __reduce__(self):
        # the comparison key is a closure; rebuild it in worker processes
        return (TermOrder, (self.kind, self.priority))

    def extended(self, n_new: int = 1, *, largest: bool = False) -> TermOrder:
        """The same order on a table with ``n_new`` variables appended."""
        n = len(self.priority)
        new = tuple(range(n, n + n_new))
        prio = new + self.priority if largest else self.priority + new
        return TermOrder(self.kind, prio)

    def max(self, monos: Iterable[Monomial]) -> Monomial:
        return max(monos, key=self.key)


def _make_key(kind, prio):
    if kind == "lex":
        def key(m):
            return tuple([m[i] for i in prio])
    elif kind == "grlex":
        def key(m):
            return (sum(m), tuple([m[i] for i in prio]))
    else:
        rev = prio[::-1]

        def key(m):
            return (sum(m), tuple([-m[i] for i in rev]))
    return key


def grevlex(table: VariableTable) -> TermOrder:
    return TermOrder("grevlex", tuple(range(len(table))))


# ---------------------------------------------------------------------------
# monomial helpers


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x + y for x, y in zip(a, b)])


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x - y for x, y in zip(a, b)])


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x < y else y for x, y in zip(a, b)])


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial.

    ``modulus`` is 0 for rational coefficients (stored as ``Fraction``) or a
    prime p (coefficients stored as ints in ``[0, p)``).
    """

    __slots__ = ("table", "modulus", "_d", "_sorted", "_hash")

    def __init__(self, table: VariableTable, terms: Mapping | None = None, modulus: int = 0,
                 *, _trusted: bool = False):
        self.table = table
        self.modulus = modulus
        self._sorted = None
        self._hash = None
        if _trusted:
            self._d = terms
            return
        n = len(table)
        d = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"monomial {m} does not match a table of {n} variables")
            if modulus:
                c = _to_fp(c, modulus)
            else:
                c = Fraction(c)
            if c:
                d[m] = c
        self._d = d

    # constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, table, modulus=0):
        return cls(table, {}, modulus, _trusted=True)

    @classmethod
    def constant(cls, table, c, modulus=0):
        return cls(table, {(0,) * len(table): c}, modulus)

    @classmethod
    def var(cls, table, name, modulus=0):
        m = [0] * len(table)
        m[table.index(name)] = 1
        return cls(table, {tuple(m): 1}, modulus)

    @classmethod
    def from_terms(cls, table, terms: Iterable, modulus=0):
        """Sum of ``(coefficient, monomial)`` pairs; repeated monomials add up."""
        d = {}
        for c, m in terms:
            m = tuple(m)
            d[m] = d.get(m, 0) + c
        return cls(table, d, modulus)

    def _new(self, d):
        return Polynomial(self.table, d, self.modulus, _trusted=True)

    # basic protocol --------------------------------------------------------

    def as_dict(self) -> dict:
        return dict(self._d)

    @property
    def terms(self) -> list:
        """``[(coefficient, monomial), ...]`` sorted descending in grevlex."""
        if self._sorted is None:
            key = grevlex(self.table).key
            self._sorted = [(self._d[m], m) for m in sorted(self._d, key=key, reverse=True)]
        return self._sorted

    def monomials(self) -> list:
        return [m for _, m in self.terms]

    def coefficient(self, mono: Monomial):
        return self._d.get(tuple(mono), 0)

    def __len__(self):
        return len(self._d)

    def __bool__(self):
        return bool(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._d)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.table == other.table and self.modulus == other.modulus
                    and self._d == other._d)
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.table, other, self.modulus)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table.names, self.modulus, frozenset(self._d.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        from .parse import print_poly
        return print_poly(self)

    # arithmetic ------------------------------------------------------------

    def _check(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.table, other, self.modulus)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.table != self.table:
            raise TableMismatch("polynomials live on different variable tables")
        if other.modulus != self.modulus:
            raise TableMismatch("polynomials have different coefficient domains")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        d = dict(self._d)
        p = self.modulus
        for m, c in other._d.items():
            v = d.get(m, 0) + c
            if p:
                v %= p
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return self._new(d)

    __radd__ = __add__

    def __neg__(self):
        p = self.modulus
        if p:
            return self._new({m: (-c) % p for m, c in self._d.items()})
        return self._new({m: -c for m, c in self._d.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.modulus
        d = {}
        for m1, c1 in self._d.items():
            for m2, c2 in other._d.items():
                m = tuple([x + y for x, y in zip(m1, m2)])
                d[m] = d.get(m, 0) + c1 * c2
        if p:
            d = {m: c % p for m, c in d.items() if c % p}
        else:
            d = {m: c for m, c in d.items() if c}
        return self._new(d)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.table, 1, self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        p = self.modulus
        if p:
            c = _to_fp(c, p)
            if not c:
                return self.zero(self.table, p)
            return self._new({m: v * c % p for m, v in self._d.items()})
        c = Fraction(c)
        if not c:
            return self.zero(self.table)
        return self._new({m: v * c for m, v in self._d.items()})

    def mul_term(self, c, mono: Monomial) -> Polynomial:
        p = self.modulus
        out = self.scale(c)._d
        return self._new({mono_mul(m, mono): v for m, v in out.items()})

    # structure -------------------------------------------------------------

    def total_degree(self) -> int:
        if not self._d:
            return -1
        return max(sum(m) for m in self._d)

    def degree_in(self, var) -> int:
        i = var if isinstance(var, int) else self.table.index(var)
        if not self._d:
            return -1
        return max(m[i] for m in self._d)

    def coeff_in(self, var, k: int) -> Polynomial:
        """Coefficient of ``var**k`` as a polynomial free of ``var``."""
        i = var if isinstance(var, int) else self.table.index(var)
        d = {}
        for m, c in self._d.items():
            if m[i] == k:
                mm = list(m)
                mm[i] = 0
                d[tuple(mm)] = c
        return self._new(d)

    def used_variables(self) -> list:
        used = set()
        for m in self._d:
            used.update(i for i, e in enumerate(m) if e)
        return [self.table.names[i] for i in sorted(used)]

    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term (all zeros for the zero polynomial)."""
        if not self._d:
            return (0,) * len(self.table)
        it = iter(self._d)
        g = next(it)
        for m in it:
            g = mono_gcd(g, m)
        return g

    def lc(self):
        """Leading coefficient in the canonical (grevlex) order."""
        if not self._d:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.terms[0][0]

    def monic(self) -> Polynomial:
        """Divide by the grevlex leading coefficient; zero stays zero."""
        if not self._d:
            return self
        return self.scale(_inverse(self.lc(), self.modulus))

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if self.modulus:
            raise ValueError("content is defined over Q only")
        if not self._d:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._d.values():
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> Polynomial:
        """Integer-coefficient associate with content 1 and positive leading coefficient."""
        if not self._d:
            return self
        out = self.scale(1 / self.content())
        if out.lc() < 0:
            out = -out
        return out

    def to_field(self, p: int) -> Polynomial:
        """Image mod p; ``BadReduction`` if p divides a coefficient denominator."""
        if self.modulus:
            if self.modulus != p:
                raise TableMismatch("already reduced modulo a different prime")
            return self
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        d = {}
        for m, c in self._d.items():
            v = reduce_int_mod_p(c, p)
            if v:
                d[m] = v
        return Polynomial(self.table, d, p, _trusted=True)

    def retable(self, table: VariableTable) -> Polynomial:
        """Move onto another table, matching variables by name."""
        if table == self.table:
            return self
        src = self.table.names
        used = set(self.used_variables())
        missing = [n for n in used if n not in table.names]
        if missing:
            raise TableMismatch(f"variables {missing} are absent from the target table")
        pos = [table.names.index(n) if n in table.names else None for n in src]
        d = {}
        for m, c in self._d.items():
            mm = [0] * len(table)
            for i, e in enumerate(m):
                if e:
                    mm[pos[i]] = e
            d[tuple(mm)] = c
        return Polynomial(table, d, self.modulus, _trusted=True)


def _to_fp(c, p):
    if isinstance(c, FpElement):
        if c.modulus != p:
            raise TableMismatch("coefficient modulus differs")
        return c.value
    if isinstance(c, int):
        return c % p
    return reduce_int_mod_p(Fraction(c), p)


def _inverse(c, p):
    if p:
        return inv_mod(c, p)
    return 1 / Fraction(c)


# ---------------------------------------------------------------------------
# operations


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if f.table != g.table:
        raise TableMismatch("polynomials live on different variable tables")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def leading_term(f: Polynomial, order: TermOrder):
    """``(coefficient, monomial)`` of the largest term under ``order``."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no leading term")
    m = max(f._d, key=order.key)
    return f._d[m], m


def conjugate(f: Polynomial) -> Polynomial:
    """Swap every variable with its conjugate partner; coefficients are kept
    (all coefficients in play are real rationals)."""
    conj = f.table.conj
    if conj is None:
        raise ValueError("variable table has no conjugation pairing")
    d = {}
    for m, c in f._d.items():
        mm = [0] * len(m)
        for i, e in enumerate(m):
            mm[conj[i]] = e
        d[tuple(mm)] = c
    return f._new(d)


def term_bidegree(table: VariableTable, mono: Monomial) -> tuple:
    a = b = 0
    for e, (wa, wb) in zip(mono, table.weights):
        a += e * wa
        b += e * wb
    return a, b


def bidegree(f: Polynomial) -> tuple:
    """Common (pi, pi-bar) bidegree of all terms.

    Raises ``NotBihomogeneous`` with the terms that disagree with the
    majority bidegree, which makes it a cheap transcription check.
    """
    table = f.table
    if table.weights is None:
        raise ValueError("variable table carries no weights")
    if f.is_zero():
        raise NotBihomogeneous("zero polynomial has no bidegree")
    groups = {}
    for c, m in f.terms:
        groups.setdefault(term_bidegree(table, m), []).append((c, m))
    if len(groups) == 1:
        return next(iter(groups))
    common = max(groups, key=lambda k: len(groups[k]))
    offending = [(k, c, m) for k, ts in groups.items() if k != common for c, m in ts]
    raise NotBihomogeneous(
        f"terms have bidegrees {sorted(groups)}; majority {common}", offending
    )


def dehomogenize(f: Polynomial, target: VariableTable | None = None,
                 mapping: Mapping[str, str | None] | None = None) -> Polynomial:
    """Apply x1 = a/p, x2 = b/pc, phi11 = Phi11/(p pc) to a bihomogeneous polynomial.

    Variables mapped to ``None`` are divided out; the bidegree check makes
    that division exact.
    """
    bidegree(f)
    target = reduced_table() if target is None else target
    mapping = DEHOM_MAP if mapping is None else mapping
    src = f.table.names
    unknown = [n for n in src if n not in mapping]
    used = set(f.used_variables())
    if any(n in used for n in unknown):
        raise TableMismatch(f"no dehomogenization image for {sorted(used & set(unknown))}")
    pos = [None if mapping.get(n) is None else target.index(mapping[n]) for n in src]
    d = {}
    for m, c in f._d.items():
        mm = [0] * len(target)
        for i, e in enumerate(m):
            if e and pos[i] is not None:
                mm[pos[i]] += e
        mm = tuple(mm)
        d[mm] = d.get(mm, 0) + c
    return Polynomial(target, d, f.modulus)


def specialize(f: Polynomial, bindings: Mapping) -> Polynomial:
    """Substitute constants for some variables; the result stays on f's table."""
    if not bindings:
        return f
    vals = {}
    for k, v in bindings.items():
        i = k if isinstance(k, int) else f.table.index(k)
        vals[i] = _to_fp(v, f.modulus) if f.modulus else Fraction(v)
    p = f.modulus
    d = {}
    for m, c in f._d.items():
        mm = list(m)
        for i, v in vals.items():
            e = mm[i]
            if e:
                c = c * (pow(v, e, p) if p else v ** e)
                mm[i] = 0
        if p:
            c %= p
        if c:
            mm = tuple(mm)
            d[mm] = d.get(mm, 0) + c
    if p:
        d = {m: c % p for m, c in d.items()}
    return Polynomial(f.table, d, p)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient q with f = q*g, by repeated grevlex leading-term division."""
    if g.table != f.table or g.modulus != f.modulus:
        raise TableMismatch("polynomials live on different variable tables")
    if g.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    key = grevlex(f.table).key
    gc, gm = leading_term(g, grevlex(g.table))
    ginv = _inverse(gc, f.modulus)
    p = f.modulus
    rem = dict(f._d)
    q = {}
    gitems = list(g._d.items())
    while rem:
        m = max(rem, key=key)
        if not mono_divides(gm, m):
            raise NonDivisible("a remainder term is not divisible by the divisor's leading term")
        c = rem[m] * ginv
        if p:
            c %= p
        t = mono_div(m, gm)
        q[t] = c
        for gm2, gc2 in gitems:
            mm = mono_mul(gm2, t)
            v = rem.get(mm, 0) - c * gc2
            if p:
                v %= p
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return Polynomial(f.table, q, p)


def eval_fp(f: Polynomial, point: Sequence, p: int) -> FpElement:
    """Value of the mod-p image of f at ``point`` (ints or ``FpElement``)."""
    vals = [v.value if isinstance(v, FpElement) else v % p for v in point]
    if len(vals) != len(f.table):
        raise ValueError("point dimension does not match the variable table")
    if f.modulus and f.modulus != p:
        raise TableMismatch("polynomial is reduced modulo a different prime")
    total = 0
    for m, c in f._d.items():
        v = c if f.modulus else reduce_int_mod_p(c, p)
        for x, e in zip(vals, m):
            if e:
                v = v * pow(x, e, p) % p
        total += v
    return FpElement(total, p, check=False)


def ratio_if_proportional(f: Polynomial, g: Polynomial):
    """Return c with f == c*g, or None.  Both must be nonzero."""
    if f.is_zero() or g.is_zero() or len(f) != len(g):
        return None
    c = f.lc() * _inverse(g.lc(), f.modulus)
    if f.modulus:
        c %= f.modulus
    return c if g.scale(c) == f else None
