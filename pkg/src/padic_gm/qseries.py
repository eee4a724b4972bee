"""Truncated q-expansions over Z, Z/p^N or the family ring.

Coefficients are stored in an object-dtype array of shape ``(Q, D)``: row n
holds a_n, column j the coefficient of u^j (D = 1 outside the family ring).
Object dtype keeps every integer exact; the working ring is determined by
``profile`` (None means exact integers) and ``family``.
"""
from __future__ import annotations

import numpy as np
import sympy

from .errors import DomainError, PrecisionError
from .padic import FamilyElement, PadicInt

__all__ = [
    "QSeries",
    "theta",
    "sigma",
    "eisenstein_e2",
    "eisenstein_classical",
    "eisenstein_preset",
    "delta",
    "E4_PAPER",
    "E4_STD",
    "E6_STD",
]

# (weight, normalizing constant c) for 1 + c * sum sigma_{k-1}(n) q^n
E4_PAPER = (4, 120)
E4_STD = (4, 240)
E6_STD = (6, -504)
_PRESETS = {"E4_PAPER": E4_PAPER, "E4_STD": E4_STD, "E6_STD": E6_STD}


class QSeries:
    """a_0 + a_1 q + ... + a_{Q-1} q^{Q-1} + O(q^Q)."""

    __slots__ = ("coeffs", "profile", "family", "prec")

    def __init__(self, coeffs, profile=None, *, family=False, prec=None):
        arr = np.array(coeffs, dtype=object)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise DomainError("q-series needs a non-empty (Q,) or (Q, D) coefficient array")
        if profile is None:
            if family or arr.shape[1] != 1:
                raise DomainError("integer series cannot be family-valued")
            prec = None
        else:
            prec = profile.N if prec is None else min(prec, profile.N)
            if prec < 1:
                raise PrecisionError("no p-adic digits left", deficit=1 - prec)
            arr = arr % profile.p**prec
            d = arr.shape[1]
            while d > 1 and not arr[:, d - 1].any():
                d -= 1
            arr = arr[:, :d]
            if d > 1 and not family:
                raise DomainError("u-dependent coefficients need family=True")
            if d > profile.M:
                raise PrecisionError(
                    f"u-degree {d - 1} exceeds family precision M = {profile.M}", deficit=d - profile.M
                )
        self.coeffs = arr
        self.profile = profile
        self.family = bool(family)
        self.prec = prec

    # -- construction helpers ----------------------------------------------------

    @classmethod
    def zero(cls, length, profile=None, family=False):
        return cls(np.zeros(length, dtype=object), profile, family=family)

    @classmethod
    def one(cls, length, profile=None):
        a = np.zeros(length, dtype=object)
        a[0] = 1
        return cls(a, profile)

    def reduce(self, profile):
        """Map an integer series into Z/p^N (profile's ring)."""
        if self.profile is not None:
            raise DomainError("series is already in a p-adic ring")
        return QSeries(self.coeffs, profile)

    def like(self, coeffs, family=None, prec=None):
        return QSeries(
            coeffs,
            self.profile,
            family=self.family if family is None else family,
            prec=self.prec if prec is None else prec,
        )

    # -- basic protocol -------------------------------------------------------------

    def __len__(self):
        return self.coeffs.shape[0]

    @property
    def depth(self):
        return self.coeffs.shape[1]

    @property
    def modulus(self):
        return None if self.profile is None else self.profile.p**self.prec

    def __getitem__(self, n):
        row = self.coeffs[n]
        if isinstance(n, slice):
            return self.like(row)
        if self.profile is None:
            return int(row[0])
        if self.family:
            return FamilyElement(list(row), self.profile, self.prec)
        return PadicInt(row[0], self.profile, self.prec)

    def ints(self):
        """Coefficients as a list of ints (rows as lists for family series)."""
        if self.family:
            return [[int(x) for x in row] for row in self.coeffs]
        return [int(x) for x in self.coeffs[:, 0]]

    def truncate(self, length):
        return self.like(self.coeffs[:length])

    def valuation(self):
        """Order of vanishing in q (len(self) if zero to stored precision)."""
        nz = np.nonzero(self.coeffs.any(axis=1))[0]
        return int(nz[0]) if len(nz) else len(self)

    def is_zero(self):
        return not self.coeffs.any()

    # -- ring structure -------------------------------------------------------------

    def _check(self, other):
        if (self.profile is None) != (other.profile is None):
            raise DomainError("cannot mix integer and p-adic q-series")
        if self.profile is not None and not self.profile.same_ring(other.profile):
            raise DomainError("q-series over different rings")
        n = min(len(self), len(other))
        prec = None if self.profile is None else min(self.prec, other.prec)
        return n, prec, self.family or other.family

    @staticmethod
    def _pad(arr, n, d):
        out = np.zeros((n, d), dtype=object)
        out[:, : arr.shape[1]] = arr[:n]
        return out

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = _const_series(other, len(self), self.profile, self.family)
        n, prec, fam = self._check(other)
        d = max(self.depth, other.depth)
        return QSeries(self._pad(self.coeffs, n, d) + self._pad(other.coeffs, n, d), self.profile, family=fam, prec=prec)

    __radd__ = __add__

    def __neg__(self):
        return self.like(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        """Multiply by a ring element (int, PadicInt or FamilyElement)."""
        if isinstance(c, int):
            return self.like(self.coeffs * c)
        if isinstance(c, PadicInt):
            if self.profile is None or c.profile.p != self.profile.p:
                raise DomainError("scalar from a different ring")
            return self.like(self.coeffs * c.residue, prec=min(self.prec, c.prec))
        if isinstance(c, FamilyElement):
            if self.profile is None or not c.profile.same_ring(self.profile):
                raise DomainError("scalar from a different ring")
            d = self.depth + len(c.coeffs) - 1
            out = np.zeros((len(self), d), dtype=object)
            for j, cj in enumerate(c.coeffs):
                if cj:
                    out[:, j : j + self.depth] += self.coeffs * cj
            return QSeries(out, self.profile, family=True, prec=min(self.prec, c.prec))
        raise TypeError(f"cannot scale a q-series by {type(c).__name__}")

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        n, prec, fam = self._check(other)
        out = np.zeros((n, self.depth + other.depth - 1), dtype=object)
        for i in range(self.depth):
            a = self.coeffs[:n, i]
            if not a.any():
                continue
            for j in range(other.depth):
                b = other.coeffs[:n, j]
                if b.any():
                    out[:, i + j] += np.convolve(a, b)[:n]
        return QSeries(out, self.profile, family=fam, prec=prec)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e):
        if e < 0:
            raise DomainError("negative powers of q-series are not supported")
        out = _const_series(1, len(self), self.profile, self.family)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        if len(self) != len(other):
            return False
        try:
            n, prec, _ = self._check(other)
        except DomainError:
            return False
        d = max(self.depth, other.depth)
        diff = self._pad(self.coeffs, n, d) - self._pad(other.coeffs, n, d)
        if prec is not None:
            diff = diff % self.profile.p**prec
        return not diff.any()

    __hash__ = None

    # -- operators ------------------------------------------------------------------

    def theta(self):
        """q d/dq: a_n -> n a_n."""
        n = np.arange(len(self), dtype=object).reshape(-1, 1)
        return self.like(self.coeffs * n)

    def specialize(self, u0):
        """Evaluate a family series at u = u0 (coefficient-wise)."""
        if not self.family:
            return self
        prec = self.prec
        if isinstance(u0, PadicInt):
            prec = min(prec, u0.prec)
            u0 = u0.residue
        mod = self.profile.p**prec
        acc = np.zeros(len(self), dtype=object)
        for j in reversed(range(self.depth)):
            acc = (acc * u0 + self.coeffs[:, j]) % mod
        return QSeries(acc, self.profile, prec=prec)

    def __repr__(self):
        head = self.ints()[:6]
        ring = "Z" if self.profile is None else f"Z/{self.profile.p}^{self.prec}" + ("[u]" if self.family else "")
        return f"QSeries({head}{'...' if len(self) > 6 else ''} + O(q^{len(self)}) over {ring})"


def _const_series(c, length, profile, family=False):
    one = np.zeros(length, dtype=object)
    one[0] = 1
    return QSeries(one, profile, family=family).scale(c)


def theta(f):
    return f.theta()


def sigma(n, k):
    """Divisor power sum sigma_k(n) = sum_{d | n} d^k."""
    if n < 1:
        raise DomainError("sigma needs n >= 1")
    return int(sympy.divisor_sigma(n, k))


def _length(profile, terms):
    if terms is not None:
        return terms
    if profile is None:
        raise DomainError("integer series need an explicit number of terms")
    return profile.Q


def _finish(ints, profile):
    s = QSeries(np.array(ints, dtype=object))
    return s if profile is None else s.reduce(profile)


def eisenstein_e2(profile=None, terms=None):
    """E_2 = 1 - 24 sum sigma_1(n) q^n (exact integers when profile is None)."""
    Q = _length(profile, terms)
    return _finish([1] + [-24 * sigma(n, 1) for n in range(1, Q)], profile)


def eisenstein_classical(k, c, profile=None, terms=None):
    """1 + c sum sigma_{k-1}(n) q^n for even k >= 4."""
    if k % 2 or k < 4:
        raise DomainError(f"Eisenstein series need even k >= 4, got {k}")
    Q = _length(profile, terms)
    return _finish([1] + [c * sigma(n, k - 1) for n in range(1, Q)], profile)


def eisenstein_preset(name, profile=None, terms=None):
    """One of E4_PAPER, E4_STD, E6_STD."""
    try:
        k, c = _PRESETS[name]
    except KeyError:
        raise DomainError(f"unknown Eisenstein preset {name!r}") from None
    return eisenstein_classical(k, c, profile, terms)


def _euler_product(Q):
    # prod_{n>=1} (1 - q^n) = sum_j (-1)^j q^{j(3j-1)/2}, j over all integers
    out = [0] * Q
    j = 0
    while True:
        hit = False
        for m in (j, -j) if j else (0,):
            e = m * (3 * m - 1) // 2
            if e < Q:
                out[e] += -1 if m % 2 else 1
                hit = True
        if not hit:
            break
        j += 1
    return out


def delta(profile=None, terms=None):
    """Delta = q prod (1 - q^n)^24, via the pentagonal-number expansion."""
    Q = _length(profile, terms)
    if Q < 2:
        raise DomainError("Delta needs at least two coefficients")
    eta = QSeries(np.array(_euler_product(Q), dtype=object))
    e24 = eta**24
    return _finish([0] + e24.ints()[: Q - 1], profile)
