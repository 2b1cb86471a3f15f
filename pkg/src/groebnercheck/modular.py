"""Prime-field Groebner bases and multi-prime structural sampling."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BadReduction, ResourceLimit
from .groebner import GroebnerBasis, Limits, buchberger
from .poly import Polynomial, TermOrder
from .scalars import PRIME_WINDOW, primes_in_window

OK, BAD_REDUCTION, RESOURCE_LIMIT = "Ok", "BadReduction", "ResourceLimit"


def gb_mod_p(F: Sequence[Polynomial], order: TermOrder | None, p: int,
             limits: Limits = Limits()) -> GroebnerBasis:
    """Reduced monic basis of the mod-p image of F."""
    return buchberger([f.to_field(p) for f in F], order, limits)


def skeleton(G: GroebnerBasis) -> tuple:
    """Coefficient-free shape: each generator's monomials, generators sorted."""
    return tuple(sorted(tuple(g.monomials()) for g in G.generators))


@dataclass
class PrimeSample:
    prime: int
    skeleton: tuple | None
    status: str = OK
    detail: str = ""


@dataclass
class SampleReport:
    samples: list
    majority_skeleton: tuple | None
    agreeing: int
    dissenting: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def unanimous(self) -> bool:
        return not self.dissenting and not self.failures and self.agreeing == len(self.samples)


def _one_sample(args):
    F, order, p, limits = args
    try:
        G = gb_mod_p(F, order, p, limits)
    except BadReduction as exc:
        return PrimeSample(p, None, BAD_REDUCTION, str(exc))
    except ResourceLimit as exc:
        return PrimeSample(p, None, RESOURCE_LIMIT, str(exc))
    return PrimeSample(p, skeleton(G))


def default_primes(count: int = 20, window=PRIME_WINDOW) -> list:
    return primes_in_window(count, *window)


def sample_structure(F: Sequence[Polynomial], order: TermOrder | None, primes: Sequence[int],
                     limits: Limits = Limits(), workers: int = 1) -> SampleReport:
    """Basis skeleton per prime, the majority skeleton and the dissenting primes.

    The result depends only on the set of primes, never on scheduling.
    """
    primes = list(primes)
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    jobs = [(list(F), order, p, limits) for p in primes]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            samples = list(ex.map(_one_sample, jobs))
    else:
        samples = [_one_sample(j) for j in jobs]
    samples.sort(key=lambda s: s.prime)
    ok = [s for s in samples if s.status == OK]
    failures = [s.prime for s in samples if s.status != OK]
    if not ok:
        return SampleReport(samples, None, 0, [], failures)
    counts = Counter(s.skeleton for s in ok)
    # ties go to the skeleton seen at the smallest prime
    first = {}
    for s in ok:
        first.setdefault(s.skeleton, s.prime)
    majority = max(counts, key=lambda k: (counts[k], -first[k]))
    dissenting = [s.prime for s in ok if s.skeleton != majority]
    return SampleReport(samples, majority, counts[majority], dissenting, failures)
