"""Exhaustive zero sets over small prime fields: an oracle independent of the
Groebner engine."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import CapExceeded, NotPrime, TableMismatch
from .poly import Polynomial, VariableTable
from .scalars import is_prime

DEFAULT_CAP = 10**7
_CHUNK = 1 << 18


@dataclass
class FpVariety:
    prime: int
    table: VariableTable
    points: list

    def __len__(self):
        return len(self.points)

    def __contains__(self, pt):
        return tuple(pt) in set(self.points)


@dataclass
class CoverageReport:
    prime: int
    variety: list
    union: list
    per_component: list
    missing: list = field(default_factory=list)   # in V(F) but in no component
    extra: list = field(default_factory=list)     # in a component but not in V(F)

    @property
    def covered(self) -> bool:
        return not self.missing

    @property
    def sound(self) -> bool:
        return not self.extra

    @property
    def symmetric_difference(self) -> list:
        return sorted(set(self.missing) | set(self.extra))


def _compile(F, p):
    """Per polynomial: integer coefficients mod p and exponent rows."""
    out = []
    maxdeg = 0
    for f in F:
        g = f.to_field(p)
        terms = [(c, m) for c, m in g.terms]
        for _, m in terms:
            maxdeg = max(maxdeg, max(m, default=0))
        out.append(terms)
    return out, maxdeg


def _power_table(p, maxdeg):
    base = np.arange(p, dtype=np.int64)
    pw = np.ones((maxdeg + 1, p), dtype=np.int64)
    for e in range(1, maxdeg + 1):
        pw[e] = pw[e - 1] * base % p
    return pw


def _scan(args):
    """Zeros of all compiled polynomials among grid indices [lo, hi)."""
    compiled, maxdeg, p, n, lo, hi = args
    pw = _power_table(p, maxdeg)
    found = []
    for start in range(lo, hi, _CHUNK):
        stop = min(hi, start + _CHUNK)
        idx = np.arange(start, stop, dtype=np.int64)
        coords = []
        for k in range(n):
            coords.append(idx // (p ** (n - 1 - k)) % p)
        keep = np.ones(stop - start, dtype=bool)
        for terms in compiled:
            alive = np.nonzero(keep)[0]
            if alive.size == 0:
                break
            sub = [c[alive] for c in coords]
            val = np.zeros(alive.size, dtype=np.int64)
            for c, m in terms:
                t = np.full(alive.size, c, dtype=np.int64)
                for k, e in enumerate(m):
                    if e:
                        t = t * pw[e][sub[k]] % p
                val = (val + t) % p
            keep[alive[val != 0]] = False
        for i in np.nonzero(keep)[0]:
            found.append(tuple(int(c[i]) for c in coords))
    return found


def brute_force(F: Sequence[Polynomial], p: int, cap: int = DEFAULT_CAP,
                workers: int = 1) -> FpVariety:
    """All common zeros of F in Z_p^n by evaluating at every grid point."""
    if not F:
        raise ValueError("need at least one polynomial")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    table = F[0].table
    if any(f.table != table for f in F):
        raise TableMismatch("polynomials live on different variable tables")
    n = len(table)
    total = p ** n
    if total > cap:
        raise CapExceeded(f"{p}^{n} = {total} evaluations exceed the cap {cap}")
    compiled, maxdeg = _compile(F, p)
    if workers > 1:
        step = -(-total // workers)
        jobs = [(compiled, maxdeg, p, n, lo, min(total, lo + step))
                for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan, jobs))
        points = [pt for part in parts for pt in part]
    else:
        points = _scan((compiled, maxdeg, p, n, 0, total))
    return FpVariety(p, table, sorted(set(points)))


def variety_covered(F: Sequence[Polynomial], components: Sequence[Sequence[Polynomial]],
                    p: int, cap: int = DEFAULT_CAP, workers: int = 1) -> CoverageReport:
    """Compare V(F) with the union of the component varieties mod p."""
    if any(g.table != F[0].table for G in components for g in G):
        raise TableMismatch("components live on a different variable table")
    V = set(brute_force(F, p, cap, workers).points)
    per = [brute_force(list(G), p, cap, workers).points for G in components]
    union = set().union(*map(set, per)) if per else set()
    return CoverageReport(p, sorted(V), sorted(union), per,
                          sorted(V - union), sorted(union - V))
