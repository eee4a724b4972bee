"""Z/p^N and family-ring arithmetic against Fraction and brute-force oracles."""
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_gm import (
    DomainError,
    FamilyElement,
    PadicInt,
    PrecisionError,
    PrecisionProfile,
    binom_series,
    pexp,
    plog,
    teichmueller,
)
from padic_gm.padic import specialize_family, valuation

from oracles import log_one_plus_pu, padic_exp, padic_log, teichmueller_bruteforce

P5 = PrecisionProfile(p=5, N=6, M=16, Q=16)
P7 = PrecisionProfile(p=7, N=4, M=8, Q=16)
PROFILES = st.sampled_from([P5, P7])


def test_profile_validation():
    with pytest.raises(DomainError):
        PrecisionProfile(p=3)
    with pytest.raises(DomainError):
        PrecisionProfile(p=9)
    with pytest.raises(DomainError):
        PrecisionProfile(N=0)
    assert P5.modulus == 5**6


def test_valuation_basics():
    assert valuation(0, 5, cap=6) == 6
    assert valuation(250, 5) == 3
    assert valuation(7, 5) == 0


def test_residues_are_canonical():
    x = PadicInt(-1, P5)
    assert x.residue == 5**6 - 1
    assert x == -1
    assert PadicInt(5**6 + 3, P5) == 3


def test_precision_is_min_of_operands():
    a = PadicInt(7, P5, prec=3)
    b = PadicInt(7 + 5**3, P5)
    assert (a + b).prec == 3
    assert a == b  # compared modulo p^3 only


def test_divide_p_drops_precision():
    x = PadicInt(250, P5)
    y = x.divide_p(2)
    assert y.residue == 10 and y.prec == 4
    with pytest.raises(PrecisionError) as info:
        PadicInt(26, P5).divide_p(1)
    assert info.value.deficit == 1


def test_inverse_and_negative_powers():
    x = PadicInt(2, P5)
    assert x * x.inverse() == 1
    assert x**-3 * x**3 == 1
    with pytest.raises(DomainError):
        PadicInt(10, P5).inverse()


# -- teichmueller -----------------------------------------------------------------


def test_teichmueller_small_values():
    P = PrecisionProfile(p=5, N=2)
    assert teichmueller(2, P).residue == 7
    assert teichmueller(7, P).residue == 7


@pytest.mark.parametrize("a", [1, 2, 3, 4, 6, 13, 24])
def test_teichmueller_matches_bruteforce(a):
    assert teichmueller(a, P5).residue == teichmueller_bruteforce(a, 5, 6)


def test_teichmueller_rejects_multiples_of_p():
    with pytest.raises(DomainError):
        teichmueller(10, P5)


# -- log / exp ------------------------------------------------------------------


def test_log_exp_reference_values():
    P = PrecisionProfile(p=5, N=3)
    assert plog(PadicInt(6, P)).residue == 55
    assert pexp(PadicInt(5, P)).residue == 81


@given(PROFILES, st.integers(0, 10**6))
def test_plog_matches_fraction_series(P, m):
    x = 1 + P.p * m
    assert plog(PadicInt(x, P)) == padic_log(x, P.p, P.N)


@given(PROFILES, st.integers(0, 10**6))
def test_pexp_matches_fraction_series(P, m):
    x = P.p * m
    assert pexp(PadicInt(x, P)) == padic_exp(x, P.p, P.N)


@given(PROFILES, st.integers(0, 10**6))
def test_exp_log_round_trip(P, m):
    x = PadicInt(1 + P.p * m, P)
    assert pexp(plog(x)) == x
    y = PadicInt(P.p * m, P)
    assert plog(pexp(y)) == y


@given(PROFILES, st.integers(0, 10**4), st.integers(0, 10**4))
def test_log_is_a_homomorphism(P, a, b):
    x, y = PadicInt(1 + P.p * a, P), PadicInt(1 + P.p * b, P)
    assert plog(x * y) == plog(x) + plog(y)


def test_log_exp_domain_errors():
    with pytest.raises(DomainError):
        plog(PadicInt(2, P5))
    with pytest.raises(DomainError):
        pexp(PadicInt(1, P5))


def test_family_log_matches_series_coefficients():
    u = FamilyElement.u(P5)
    got = plog(1 + u * 5)
    want = log_one_plus_pu(5, 6, P5.M - 1)
    assert got == FamilyElement(want, P5)
    assert got.coeffs[:3] == (0, 5, 7800)


# -- family ring ------------------------------------------------------------------


def test_family_degree_overflow_is_loud():
    P = PrecisionProfile(M=3)
    u = FamilyElement.u(P)
    assert (u * u).degree == 2
    with pytest.raises(PrecisionError):
        u * u * u


@given(st.lists(st.integers(0, 5**6 - 1), min_size=1, max_size=4),
       st.lists(st.integers(0, 5**6 - 1), min_size=1, max_size=4),
       st.integers(0, 5**6 - 1))
def test_specialization_is_a_ring_homomorphism(a, b, u0):
    x, y = FamilyElement(a, P5), FamilyElement(b, P5)
    s = lambda z: specialize_family(z, u0)
    assert s(x * y) == s(x) * s(y)
    assert s(x + y) == s(x) + s(y)


# -- binomial series ------------------------------------------------------------


def test_binom_series_family_value():
    P = PrecisionProfile(p=5, N=3)
    assert binom_series(FamilyElement.u(P), 2) == FamilyElement([0, 62, 63], P)


@given(st.integers(-500, 500), st.integers(0, 12))
def test_binom_series_matches_integer_binomials(s, i):
    got = binom_series(PadicInt(s, P5), i)
    mod = 5**got.prec
    want = comb(s, i) if s >= 0 else (-1) ** i * comb(i - s - 1, i)
    assert got.residue == want % mod
    assert got.prec == 6 - (i // 5 + i // 25)


def test_binom_series_precision_loss_is_reported():
    # 5 digits are known; index 25 would need v(25!) = 6 digits
    with pytest.raises(PrecisionError):
        binom_series(PadicInt(1, P5, prec=5), 25)
