#!/usr/bin/env python3
"""
The family Gauss-Manin connection on nearly overconvergent forms.

A form of type r is f_0 + f_1 Y + ... + f_r Y^r.  We apply nabla over the
whole weight disk, specialize at classical weights, and compare with the
classical connection computed without any logarithms.
"""

from padic_gm import (
    DIAGONAL,
    KATZ,
    NearlyOCForm,
    PrecisionProfile,
    change_coordinates,
    classical_char,
    delta,
    katz_splitting,
    nabla,
    nabla_classical,
    specialize_form,
    splitting_update,
    universal_char,
    weight_point,
)
from padic_gm.sampling import default_rng, random_form, random_series

P = PrecisionProfile(p=5, N=6, M=16, Q=16)
K = katz_splitting(P)

print("nabla Delta in Katz coordinates: (theta Delta + E2 Delta, 12 Delta)")
F = NearlyOCForm(classical_char(12, P), (delta(P),), KATZ)
G = nabla_classical(F, K)
print("  Y^0:", G[0].ints()[:6])
print("  Y^1:", G[1].ints()[:6])

print("\nmoving to diagonal coordinates removes the E2 term")
Gd = change_coordinates(G, K.alpha0, to=DIAGONAL, direction=-1)
print("  Y^0:", Gd[0].ints()[:6], "(= theta Delta)")

print("\ninterpolation: specialize(nabla F) == nabla_classical(specialize F)")
rng = default_rng(0)
U = universal_char(P)
for r in (0, 1, 2):
    F = random_form(U, r, KATZ, rng)
    NF = nabla(F, K)
    for k in (4, 12):
        uk = weight_point(k, P)
        ok = specialize_form(NF, uk) == nabla_classical(specialize_form(F, uk), K, k=k)
        print(f"  r = {r}, k = {k:2d}: {ok}")

print("\nindependence of the splitting")
alpha = random_series(P, rng)
s2 = splitting_update(K, alpha)
F = random_form(U, 2, KATZ, rng)
lhs = change_coordinates(nabla(F, K), alpha, to=s2)
rhs = nabla(change_coordinates(F, alpha, to=s2), s2)
print("  change_coordinates o nabla == nabla' o change_coordinates:", lhs == rhs)
