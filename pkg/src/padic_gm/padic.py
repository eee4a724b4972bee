"""Exact fixed-precision arithmetic in Z/p^N and in the family ring.

The family ring models a closed disk in weight space: elements are
polynomials in the disk coordinate ``u`` with coefficients in Z/p^N and
degree below ``profile.M``.  Every element carries an absolute precision
``prec <= profile.N``; binary operations work modulo ``p**min(prec)``.

A product whose ``u**M`` (or higher) coefficient is nonzero raises
:class:`PrecisionError` rather than being silently truncated, so evaluation
at any point ``u0`` of the disk is a ring homomorphism.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import sympy

from .errors import DomainError, PrecisionError

__all__ = [
    "PrecisionProfile",
    "PadicInt",
    "FamilyElement",
    "valuation",
    "teichmueller",
    "plog",
    "pexp",
    "binom_series",
    "specialize_family",
]


@dataclass(frozen=True)
class PrecisionProfile:
    """Working precisions.

    p : prime >= 5
    N : coefficients live in Z/p^N
    M : family elements have u-degree < M
    Q : q-expansions keep a_0 .. a_{Q-1}
    """

    p: int = 5
    N: int = 6
    M: int = 16
    Q: int = 64

    def __post_init__(self):
        if not sympy.isprime(self.p) or self.p < 5:
            raise DomainError(f"p must be a prime >= 5, got {self.p}")
        if self.N < 1 or self.M < 1 or self.Q < 2:
            raise DomainError(f"need N >= 1, M >= 1, Q >= 2; got {self}")

    @property
    def modulus(self):
        return self.p**self.N

    def same_ring(self, other):
        """True when ``other`` has the same coefficient ring (Q may differ)."""
        return (self.p, self.N, self.M) == (other.p, other.N, other.M)


def valuation(n, p, cap=None):
    """p-adic valuation of the integer ``n``; ``cap`` is returned for zero."""
    if n == 0:
        if cap is None:
            raise DomainError("valuation of zero needs a cap")
        return cap
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v if cap is None else min(v, cap)


def _ilog(i, p):
    # floor(log_p(i)) for i >= 1
    e = 0
    while i >= p:
        i //= p
        e += 1
    return e


def _fact_val(i, p):
    # Legendre: v_p(i!)
    e, q = 0, p
    while q <= i:
        e += i // q
        q *= p
    return e


# -- integer polynomial kernels ------------------------------------------------
# Scalars are length-1 lists; all lists are little-endian in u.


def _trim(cs):
    cs = list(cs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return cs or [0]


def _poly_add(a, b, mod):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % mod for i in range(n)]


def _poly_mul(a, b, mod):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % mod for c in out]


def _poly_val(cs, p, cap):
    return min(valuation(c, p, cap) for c in cs)


def _log_kernel(t, p, prec):
    """log(1 + t) mod p^prec for t with every coefficient divisible by p."""
    v = _poly_val(t, p, prec)
    if v >= prec:
        return [0]
    if v < 1:
        raise DomainError("plog needs x = 1 (mod p)")
    i_max = 1
    while (i_max + 1) * v - _ilog(i_max + 1, p) < prec:
        i_max += 1
    mod = p**prec
    work = p ** (prec + _ilog(i_max, p))
    result, power = [0], [1]
    for i in range(1, i_max + 1):
        power = _poly_mul(power, t, work)
        e = valuation(i, p)
        scale = pow(i // p**e, -1, mod) * (1 if i % 2 else -1)
        result = _poly_add(result, [(c // p**e) * scale for c in power], mod)
    return _trim(result)


def _exp_kernel(x, p, prec):
    """exp(x) mod p^prec for x with every coefficient divisible by p."""
    v = _poly_val(x, p, prec)
    if v >= prec:
        return [1]
    if v < 1:
        raise DomainError("pexp needs v(x) >= 1")
    i_max = 0
    while (i_max + 1) * v - i_max // (p - 1) < prec:
        i_max += 1
    mod = p**prec
    work = p ** (prec + _fact_val(i_max, p))
    result, power, fact = [1], [1], 1
    for i in range(1, i_max + 1):
        power = _poly_mul(power, x, work)
        fact *= i
        e = _fact_val(i, p)
        scale = pow(fact // p**e, -1, mod)
        result = _poly_add(result, [(c // p**e) * scale for c in power], mod)
    return _trim(result)


def _log_residue(x, p, prec):
    return _log_kernel([(x - 1) % p**prec], p, prec)[0]


def _exp_residue(x, p, prec):
    return _exp_kernel([x % p**prec], p, prec)[0]


# -- ring elements ----------------------------------------------------------------


class PadicInt:
    """An element of Z/p^prec, ``prec <= profile.N``."""

    __slots__ = ("residue", "profile", "prec")

    def __init__(self, value, profile, prec=None):
        prec = profile.N if prec is None else min(prec, profile.N)
        if prec < 1:
            raise PrecisionError("no p-adic digits left", deficit=1 - prec)
        self.profile = profile
        self.prec = prec
        self.residue = int(value) % profile.p**prec

    @property
    def modulus(self):
        return self.profile.p**self.prec

    def valuation(self):
        return valuation(self.residue, self.profile.p, self.prec)

    def is_unit(self):
        return self.residue % self.profile.p != 0

    def _coerce(self, other):
        if isinstance(other, PadicInt):
            if other.profile.p != self.profile.p:
                raise DomainError("mixing different primes")
            return other
        if isinstance(other, int):
            return PadicInt(other, self.profile)
        return None

    def _binop(self, other, fn):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = min(self.prec, o.prec)
        return PadicInt(fn(self.residue, o.residue), self.profile, prec)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return PadicInt(-self.residue, self.profile, self.prec)

    def inverse(self):
        if not self.is_unit():
            raise DomainError(f"{self} is not a unit")
        return PadicInt(pow(self.residue, -1, self.modulus), self.profile, self.prec)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return PadicInt(pow(self.residue, e, self.modulus), self.profile, self.prec)

    def divide_p(self, e=1):
        """Exact division by p**e; the result has precision ``prec - e``."""
        if e == 0:
            return self
        if self.valuation() < e:
            raise PrecisionError(f"{self} is not divisible by p^{e}", deficit=e - self.valuation())
        return PadicInt(self.residue // self.profile.p**e, self.profile, self.prec - e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        mod = self.profile.p ** min(self.prec, o.prec)
        return (self.residue - o.residue) % mod == 0

    __hash__ = None

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"{self.residue} + O({self.profile.p}^{self.prec})"


class FamilyElement:
    """A polynomial in the disk coordinate ``u`` over Z/p^prec."""

    __slots__ = ("coeffs", "profile", "prec")

    def __init__(self, coeffs, profile, prec=None):
        prec = profile.N if prec is None else min(prec, profile.N)
        if prec < 1:
            raise PrecisionError("no p-adic digits left", deficit=1 - prec)
        mod = profile.p**prec
        cs = _trim([int(c) % mod for c in coeffs])
        if len(cs) > profile.M:
            raise PrecisionError(
                f"family element of u-degree {len(cs) - 1} exceeds M = {profile.M}",
                deficit=len(cs) - profile.M,
            )
        self.coeffs = tuple(cs)
        self.profile = profile
        self.prec = prec

    @classmethod
    def u(cls, profile):
        return cls([0, 1], profile)

    @classmethod
    def constant(cls, c, profile):
        if isinstance(c, PadicInt):
            return cls([c.residue], profile, c.prec)
        return cls([c], profile)

    @property
    def modulus(self):
        return self.profile.p**self.prec

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def valuation(self):
        return _poly_val(self.coeffs, self.profile.p, self.prec)

    def is_unit(self):
        return self.coeffs[0] % self.profile.p != 0 and all(
            c % self.profile.p == 0 for c in self.coeffs[1:]
        )

    def _coerce(self, other):
        if isinstance(other, FamilyElement):
            if not other.profile.same_ring(self.profile):
                raise DomainError("mixing different family rings")
            return other
        if isinstance(other, (int, PadicInt)):
            return FamilyElement.constant(other, self.profile)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = min(self.prec, o.prec)
        return FamilyElement(_poly_add(self.coeffs, o.coeffs, self.profile.p**prec), self.profile, prec)

    __radd__ = __add__

    def __neg__(self):
        return FamilyElement([-c for c in self.coeffs], self.profile, self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = min(self.prec, o.prec)
        return FamilyElement(_poly_mul(self.coeffs, o.coeffs, self.profile.p**prec), self.profile, prec)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise DomainError("negative powers of family elements are not supported")
        out = FamilyElement([1], self.profile, self.prec)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def divide_p(self, e=1):
        """Exact division by p**e, coefficient-wise; precision drops by e."""
        if e == 0:
            return self
        v = self.valuation()
        if v < e:
            raise PrecisionError(f"family element not divisible by p^{e}", deficit=e - v)
        q = self.profile.p**e
        return FamilyElement([c // q for c in self.coeffs], self.profile, self.prec - e)

    def specialize(self, u0):
        """Evaluate at ``u = u0``; returns a :class:`PadicInt`."""
        return specialize_family(self, u0)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        mod = self.profile.p ** min(self.prec, o.prec)
        n = max(len(self.coeffs), len(o.coeffs))
        return all((self[i] - o[i]) % mod == 0 for i in range(n))

    __hash__ = None

    def __repr__(self):
        terms = [f"{c}*u^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c or i == 0]
        return f"({' + '.join(terms)}) + O({self.profile.p}^{self.prec})"


def _as_lists(x):
    if isinstance(x, PadicInt):
        return [x.residue]
    return list(x.coeffs)


def _rewrap(x, cs, prec):
    if isinstance(x, PadicInt):
        return PadicInt(cs[0], x.profile, prec)
    return FamilyElement(cs, x.profile, prec)


# -- operations -------------------------------------------------------------------


def teichmueller(a, profile):
    """The (p-1)-th root of unity congruent to ``a`` mod p, as a PadicInt."""
    p, mod = profile.p, profile.modulus
    if gcd(a, p) != 1:
        raise DomainError(f"teichmueller needs a prime to p, got {a}")
    x = a % mod
    while True:
        y = pow(x, p, mod)
        if y == x:
            return PadicInt(x, profile)
        x = y


def plog(x):
    """p-adic logarithm on 1 + pZ/p^N (or its family analogue)."""
    cs = _as_lists(x)
    cs[0] -= 1
    if _poly_val(cs, x.profile.p, x.prec) < 1:
        raise DomainError(f"plog needs x = 1 (mod p), got {x}")
    return _rewrap(x, _log_kernel(cs, x.profile.p, x.prec), x.prec)


def pexp(x):
    """p-adic exponential, defined for v(x) >= 1 (p >= 5)."""
    cs = _as_lists(x)
    if _poly_val(cs, x.profile.p, x.prec) < 1:
        raise DomainError(f"pexp needs v(x) >= 1, got {x}")
    return _rewrap(x, _exp_kernel(cs, x.profile.p, x.prec), x.prec)


def binom_series(s, i):
    """Generalized binomial coefficient s(s-1)...(s-i+1)/i!.

    The prime-to-p part of i! is inverted; the p-part must divide the
    numerator exactly or :class:`PrecisionError` reports the deficit.
    The result loses v_p(i!) digits of precision.
    """
    if i < 0:
        raise DomainError("binomial index must be non-negative")
    p, prec = s.profile.p, s.prec
    mod = p**prec
    cs = _as_lists(s)
    num = [1]
    for j in range(i):
        num = _poly_mul(num, _poly_add(cs, [-j], mod), mod)
    e = _fact_val(i, p)
    if e:
        v = _poly_val(num, p, prec)
        if v < e:
            raise PrecisionError(
                f"binomial coefficient of index {i} needs division by p^{e}; numerator has v = {v}",
                deficit=e - v,
            )
        num = [c // p**e for c in num]
        prec -= e
        mod = p**prec
    unit = 1
    for j in range(1, i + 1):
        unit *= j
    unit //= p**e
    inv = pow(unit, -1, mod)
    return _rewrap(s, [c * inv for c in num], prec)


def specialize_family(x, u0):
    """Evaluate a family element at ``u = u0`` (int or PadicInt)."""
    if isinstance(x, PadicInt):
        return x
    prec = x.prec
    if isinstance(u0, PadicInt):
        prec = min(prec, u0.prec)
        u0 = u0.residue
    mod = x.profile.p**prec
    acc = 0
    for c in reversed(x.coeffs):
        acc = (acc * u0 + c) % mod
    return PadicInt(acc, x.profile, prec)
