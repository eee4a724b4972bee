#!/usr/bin/env python3
"""
Characters of Z_p^x: classical weights, the universal character of the disk,
and the weight functional wt = log(lambda)/p.
"""

from padic_gm import (
    PadicInt,
    PrecisionProfile,
    char_section_series,
    classical_char,
    eval_char,
    pexp,
    universal_char,
    weight_point,
    wt,
)

P = PrecisionProfile(p=5, N=6)

# a classical weight k is the character a -> a^k; its lambda is exp(p k)
for k in (0, 1, 4, 12):
    chi = classical_char(k, P)
    print(f"k = {k:2d}: lambda = {chi.lam}, wt = {wt(chi)}")  # wt loses one digit

# evaluation on Z_p^x agrees with plain integer powers
chi = classical_char(12, P)
print(f"chi_12(2) = {eval_char(chi, 2)}  vs 2^12 mod 5^6 = {pow(2, 12, 5**6)}")

# the universal character has lambda = 1 + p u; its weight is a power series in u
U = universal_char(P)
print(f"universal lambda = {U.lam}")
print(f"wt(universal)    = {wt(U)}")

# u_k is the point of the disk where the universal character becomes weight k
for k in (4, 12):
    uk = weight_point(k, P)
    got = eval_char(U, 2).specialize(uk)
    want = eval_char(classical_char(k, P, tame_twist=-k), 2)
    print(f"u_{k} = {uk}: universal(2) at u_{k} = {got}, chi_cycl^{k} omega^-{k}(2) = {want}")

# the analytic extension z -> z^wt on the disk |z - 1| <= p^-2
section = char_section_series(U, 2)
for t in (0, 1, 2):
    z = pexp(PadicInt(25 * t, P))
    print(f"t = {t}: section(exp(25 t)) == lambda^(5 t): {section(z) == U.lam ** (5 * t)}")
