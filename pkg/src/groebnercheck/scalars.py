"""Exact coefficient domains: rationals (``fractions.Fraction``) and prime fields."""

from __future__ import annotations

import math
import operator
from fractions import Fraction

from .errors import BadReduction, DivisionByZero, NotPrime

Rational = Fraction

# Default window for modular sampling; products of two residues fit in 32 bits.
PRIME_WINDOW = (2**15, 2**16)

_RAT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a, b, op: str) -> Fraction:
    a, b = Fraction(a), Fraction(b)
    if op == "div" and b == 0:
        raise DivisionByZero("rational division by zero")
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for desk-scale moduli."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    for d in range(5, math.isqrt(n) + 1, 6):
        if n % d == 0 or n % (d + 2) == 0:
            return False
    return True


def primes_in_window(count: int, lo: int = PRIME_WINDOW[0], hi: int = PRIME_WINDOW[1]) -> list[int]:
    """The first ``count`` primes strictly between ``lo`` and ``hi``, ascending."""
    out = []
    n = lo + 1
    while len(out) < count:
        if n >= hi:
            raise ValueError(f"only {len(out)} primes in ({lo}, {hi})")
        if is_prime(n):
            out.append(n)
        n += 1
    return out


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise DivisionByZero(f"0 has no inverse mod {p}")
    # extended Euclid
    r0, r1, s0, s1 = p, a, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


class FpElement:
    """An element of Z/pZ for prime ``p``.  Immutable."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int, *, check: bool = True):
        if check and not is_prime(modulus):
            raise NotPrime(f"{modulus} is not prime")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", value % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("FpElement is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ValueError("moduli differ")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return reduce_mod_p(other, self.modulus).value
        return NotImplemented

    def _new(self, v: int) -> FpElement:
        return FpElement(v, self.modulus, check=False)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * fp_inv(self._new(o))

    def __pow__(self, e: int):
        if e < 0:
            return fp_inv(self) ** (-e)
        return self._new(pow(self.value, e, self.modulus))

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElement({self.value}, {self.modulus})"

    def __str__(self):
        return f"{self.value} mod {self.modulus}"


def fp_inv(a: FpElement) -> FpElement:
    return FpElement(inv_mod(a.value, a.modulus), a.modulus, check=False)


def reduce_mod_p(a, p: int) -> FpElement:
    """Image of a rational in Z_p; raises ``BadReduction`` when p | denominator."""
    a = Fraction(a)
    if a.denominator % p == 0:
        raise BadReduction(f"{p} divides the denominator of {a}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return FpElement(a.numerator * inv_mod(a.denominator, p), p, check=False)


def reduce_int_mod_p(a: Fraction, p: int) -> int:
    # hot path of the modular engine; the caller has already checked primality
    if a.denominator == 1:
        return a.numerator % p
    if a.denominator % p == 0:
        raise BadReduction(f"{p} divides the denominator of {a}")
    return a.numerator * pow(a.denominator, -1, p) % p
