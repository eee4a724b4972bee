"""Weight-space characters of Z_p^x.

A character is stored as the pair (tame exponent, lambda) where the tame
exponent acts through the Teichmueller character and ``lambda`` is the value
at exp(p).  The universal character of the modeled disk has lambda = 1 + p*u.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb

from .errors import DomainError, UnsupportedError
from .padic import (
    FamilyElement,
    PadicInt,
    _log_residue,
    _exp_residue,
    _poly_add,
    _poly_mul,
    _poly_val,
    _as_lists,
    _rewrap,
    binom_series,
    pexp,
    plog,
    teichmueller,
)

__all__ = [
    "Character",
    "CharacterSection",
    "classical_char",
    "universal_char",
    "wt",
    "eval_char",
    "weight_point",
    "analytic_level",
    "char_section_series",
    "conductor",
]


@dataclass(frozen=True, eq=False)
class Character:
    """chi: Z_p^x -> A^x as (tame exponent mod p-1, lambda = chi(exp(p))).

    ``k`` records the integer weight of a classical character and is None
    for family characters and for specializations of them.
    """

    tame: int
    lam: PadicInt | FamilyElement
    k: int | None = None

    def __post_init__(self):
        p = self.lam.profile.p
        object.__setattr__(self, "tame", self.tame % (p - 1))
        one = _as_lists(self.lam)
        one[0] -= 1
        if _poly_val(one, p, self.lam.prec) < 1:
            raise DomainError("lambda must be = 1 (mod p)")

    @property
    def profile(self):
        return self.lam.profile

    @property
    def is_family(self):
        return isinstance(self.lam, FamilyElement)

    def __mul__(self, other):
        k = self.k + other.k if self.k is not None and other.k is not None else None
        return Character(self.tame + other.tame, self.lam * other.lam, k)

    def twist(self, m):
        """Multiply by the m-th power of the cyclotomic character."""
        return self * classical_char(m, self.profile)

    def specialize(self, u0):
        if not self.is_family:
            return self
        return Character(self.tame, self.lam.specialize(u0))

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.tame == other.tame and self.lam == other.lam

    __hash__ = None

    def __repr__(self):
        if self.k is not None:
            return f"Character(k={self.k}, tame={self.tame})"
        return f"Character(tame={self.tame}, lam={self.lam!r})"


def classical_char(k, profile, tame_twist=0):
    """epsilon * chi_cycl^k with epsilon = omega^tame_twist."""
    return Character(k + tame_twist, pexp(PadicInt(profile.p * k, profile)), k)


def universal_char(profile):
    """The family character of the disk: tame 0, lambda = 1 + p*u."""
    return Character(0, FamilyElement([1, profile.p], profile))


def wt(chi):
    """The p-adic weight log(lambda)/p.  Loses one digit: precision N - 1."""
    return plog(chi.lam).divide_p(1)


def weight_point(k, profile):
    """The disk coordinate u_k = (exp(pk) - 1)/p of the integer weight k.

    Computed at one extra digit so the result carries full precision N.
    """
    p, N = profile.p, profile.N
    lam = _exp_residue(p * k, p, N + 1)
    return PadicInt((lam - 1) // p, profile)


def _teich_residue(a, p, prec):
    mod = p**prec
    x = a % mod
    while True:
        y = pow(x, p, mod)
        if y == x:
            return x
        x = y


def _power_series(lam, s):
    # lam**s = sum_i binom(s, i) (lam - 1)^i for an exact integer exponent s >= 0
    p, prec = lam.profile.p, lam.prec
    mod = p**prec
    t = _as_lists(lam)
    t[0] -= 1
    v = _poly_val(t, p, prec)
    out, power, i = [1], [1], 0
    while True:
        i += 1
        # binom(s, i) is integral, so the i-th term has v >= i*v
        if i * v >= prec:
            break
        power = _poly_mul(power, t, mod)
        c = comb(s, i) % mod
        if c:
            out = _poly_add(out, [c * x for x in power], mod)
    return _rewrap(lam, out, prec)


def eval_char(chi, a):
    """chi(a) = omega(a)^tame * lambda^(log<a>/p) for a prime to p."""
    profile = chi.profile
    p, N = profile.p, profile.N
    if a % p == 0:
        raise DomainError(f"characters are evaluated on Z_p^x; {a} is divisible by p")
    tame_part = teichmueller(a, profile) ** chi.tame
    # <a> = a / omega(a) at one extra digit, so that log<a>/p is exact mod p^N
    mod1 = p ** (N + 1)
    br = a * pow(_teich_residue(a, p, N + 1), -1, mod1) % mod1
    s = _log_residue(br, p, N + 1) // p
    return _power_series(chi.lam, s) * tame_part


def analytic_level(chi, max_level=64):
    """Least n >= 2 with chi(exp(p^(n-1))) = 1 (mod p) coefficient-wise."""
    lam_n = chi.lam
    for n in range(2, max_level + 1):
        t = _as_lists(lam_n)
        t[0] -= 1
        if _poly_val(t, chi.profile.p, lam_n.prec) >= 1:
            return n
        lam_n = lam_n ** chi.profile.p
    raise DomainError("character is not locally analytic at any tested level")


class CharacterSection:
    """Truncated expansion z^s = sum_i binom(s, i) (z - 1)^i on |z - 1| <= p^-n."""

    def __init__(self, coeffs, n):
        self.coeffs = list(coeffs)
        self.n = n

    def __len__(self):
        return len(self.coeffs)

    def __call__(self, z):
        if not isinstance(z, PadicInt):
            z = PadicInt(z, self.coeffs[0].profile)
        h = z - 1
        if h.valuation() < self.n:
            raise DomainError(f"z must satisfy v(z - 1) >= {self.n}")
        acc, power = self.coeffs[0], PadicInt(1, z.profile)
        for c in self.coeffs[1:]:
            power = power * h
            acc = acc + c * power
        return acc

    def __repr__(self):
        return f"CharacterSection(n={self.n}, terms={len(self.coeffs)})"


def char_section_series(chi, n, terms=None):
    """The section z^(log(chi(exp(p^n)))/p^n) as a polynomial in z - 1.

    The exponent log(chi(exp(p^n)))/p^n equals wt(chi); it is taken from
    ``wt`` directly so only one digit of precision is spent.  The default
    term count drops only terms that vanish on the disk |z - 1| <= p^-n.
    """
    if n < analytic_level(chi):
        raise DomainError(f"level {n} is below the analytic level of {chi}")
    s = wt(chi)
    if terms is None:
        terms = max(1, ceil(s.prec / n))
    return CharacterSection([binom_series(s, i) for i in range(terms)], n)


def conductor(tame_twist, wild_level=0):
    """p-conductor exponent n(epsilon) of a finite-order character.

    Tame characters factor through (Z/pZ)^x, so n = 1.  Characters of wild
    conductor need cyclotomic coefficient fields and are not modeled.
    """
    if wild_level:
        raise UnsupportedError("characters of nontrivial wild conductor are not modeled")
    return 1
