#!/usr/bin/env python3
"""
Hecke operators in diagonal coordinates and the lambda calibration search.
"""

from padic_gm import (
    DIAGONAL,
    HeckeOp,
    NearlyOCForm,
    PrecisionProfile,
    calibrate_lambda,
    classical_char,
    delta,
    diagonal_splitting,
    eigenvalue,
    eisenstein_preset,
    nabla_classical,
    serre_splitting,
)


def main():
    P = PrecisionProfile(p=5, N=6, M=16, Q=64)
    T2 = HeckeOp("tl", 2)
    D = diagonal_splitting(P)

    print("classical eigenvalues of T_2")
    e4 = NearlyOCForm(classical_char(4, P), (eisenstein_preset("E4_STD", P),), DIAGONAL)
    dl = NearlyOCForm(classical_char(12, P), (delta(P),), DIAGONAL)
    print(f"  E4   : {eigenvalue(e4, T2)}")
    print(f"  Delta: {eigenvalue(dl, T2)}  (tau(2) = -24)\n")

    print("nabla multiplies eigenvalues by l")
    G = nabla_classical(dl, D)
    H = nabla_classical(G, D)
    print(f"  nabla Delta  : {eigenvalue(G, T2)}  (2 * -24)")
    print(f"  nabla^2 Delta: {eigenvalue(H, T2)}  (4 * -24)\n")

    print("lambda calibration over (c1 E4 + c2 E2^2)/144, |c1|, |c2| <= 12")
    cal = calibrate_lambda(P)
    print(f"  unique candidate: (c1, c2) = {cal.coefficients}")
    print(f"  Katz-coordinate lambda starts {cal.lambda_katz.ints()[:4]}")
    e4s = eisenstein_preset("E4_STD", P)
    print(f"  multiple of E4? {cal.lambda_katz == e4s.scale(cal.lambda_katz[0])}")
    print("  (it equals (E4 - 2 E2^2)/144; with alpha0 = -E2/12 instead one gets -E4/144:)")
    S = serre_splitting(P)
    print(f"  Serre lambda multiple of E4? {S.lam == e4s.scale(S.lam[0])}")


if __name__ == "__main__":
    main()
