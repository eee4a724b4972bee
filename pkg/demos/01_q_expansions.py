#!/usr/bin/env python3
"""
Truncated q-expansions: Delta, Eisenstein series, theta and the Ramanujan identities
"""

from padic_gm import PrecisionProfile, delta, eisenstein_e2, eisenstein_preset


def main():
    Q = 12
    print("Delta = q prod (1 - q^n)^24 over the integers")
    dl = delta(terms=Q)
    print(f"tau(1..{Q - 1}) = {dl.ints()[1:]}")
    tau = dl.ints()
    print(f"tau(6) = tau(2) tau(3): {tau[6]} = {tau[2] * tau[3]}\n")

    print("Eisenstein series (E4 with the standard constant 240)")
    e2, e4, e6 = eisenstein_e2(terms=Q), eisenstein_preset("E4_STD", terms=Q), eisenstein_preset("E6_STD", terms=Q)
    print(f"E2 = {e2.ints()[:5]} ...")
    print(f"E4 = {e4.ints()[:5]} ...")
    print(f"E6 = {e6.ints()[:5]} ...\n")

    print("theta = q d/dq; Ramanujan's identities hold exactly")
    print(f"12 theta E2 == E2^2 - E4  : {e2.theta() * 12 == e2 * e2 - e4}")
    print(f" 3 theta E4 == E2 E4 - E6 : {e4.theta() * 3 == e2 * e4 - e6}")
    print(f" 2 theta E6 == E2 E6 - E4^2: {e6.theta() * 2 == e2 * e6 - e4 * e4}")
    print(f"theta Delta == E2 Delta   : {dl.theta() == e2 * dl}\n")

    print("the same series reduced into Z/5^6")
    P = PrecisionProfile(p=5, N=6, Q=Q)
    dl5 = delta(P)
    print(f"{dl5}")
    print(f"least residues: {dl5.ints()}")


if __name__ == "__main__":
    main()
