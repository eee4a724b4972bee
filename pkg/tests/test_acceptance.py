"""The ten acceptance criteria, each exact (tolerance zero) at the default profile.

Each test prints one PASS/FAIL line; the lines are also collected into the
"acceptance criteria" section of the pytest terminal summary.
"""
import subprocess
import sys

import pytest

from padic_gm import (
    CalibrationError,
    DIAGONAL,
    KATZ,
    HeckeOp,
    NearlyOCForm,
    NotEigenError,
    PadicInt,
    PrecisionProfile,
    QSeries,
    SplittingModel,
    calibrate_lambda,
    change_coordinates,
    char_section_series,
    classical_char,
    delta,
    eigenvalue,
    eisenstein_e2,
    eisenstein_preset,
    katz_splitting,
    matrix_identity_check,
    nabla,
    nabla_classical,
    partial_chi,
    pexp,
    specialize_form,
    splitting_update,
    t_ell,
    u_p,
    universal_char,
    v_p,
    weight_point,
    wt,
)
from padic_gm.sampling import default_rng, random_form, random_series

from oracles import delta_ints, e2_ints, eisenstein_ints, mul_ints, theta_ints

P = PrecisionProfile()  # p = 5, N = 6, M = 16, Q = 64
T2 = HeckeOp("tl", 2)


def is_eigen(F, op, mu):
    try:
        return eigenvalue(F, op) == mu
    except NotEigenError:
        return False


def test_criterion_01_weight_functional(acceptance_report):
    results = {k: wt(classical_char(k, P)) for k in (0, 1, 3, 4, 12)}
    passed = all(w == k and w.prec == P.N - 1 for k, w in results.items())
    acceptance_report(1, passed, "wt(classical_char(k)) = k mod p^(N-1), k in {0,1,3,4,12}")
    assert passed


def test_criterion_02_ramanujan(acceptance_report):
    Q = 64
    e2, e4, e6 = e2_ints(Q), eisenstein_ints(240, 4, Q), eisenstein_ints(-504, 6, Q)
    # the oracle identities on brute-force integer lists
    oracle = (
        [12 * x for x in theta_ints(e2)] == [a - b for a, b in zip(mul_ints(e2, e2), e4)]
        and [3 * x for x in theta_ints(e4)] == [a - b for a, b in zip(mul_ints(e2, e4), e6)]
        and [2 * x for x in theta_ints(e6)] == [a - b for a, b in zip(mul_ints(e2, e6), mul_ints(e4, e4))]
    )
    E2, E4, E6 = eisenstein_e2(terms=Q), eisenstein_preset("E4_STD", terms=Q), eisenstein_preset("E6_STD", terms=Q)
    engine = (
        E2.theta() * 12 == E2 * E2 - E4
        and E4.theta() * 3 == E2 * E4 - E6
        and E6.theta() * 2 == E2 * E6 - E4 * E4
        and E2.ints() == e2 and E4.ints() == e4 and E6.ints() == e6
    )
    passed = oracle and engine
    acceptance_report(2, passed, "Ramanujan identities for E2, E4, E6 over Z to q^64")
    assert passed


def test_criterion_03_interpolation(acceptance_report):
    rng = default_rng(2024)
    U = universal_char(P)
    K = katz_splitting(P)
    failures = []
    for r in (0, 1, 2):
        for k in (4, 6, 8, 12):
            uk = weight_point(k, P)
            for i in range(20):
                F = random_form(U, r, KATZ, rng)
                lhs = specialize_form(nabla(F, K), uk)
                rhs = nabla_classical(specialize_form(F, uk), K, k=k)
                if not (lhs == rhs and min(c.prec for c in lhs.components) == P.N - 1):
                    failures.append((r, k, i))
    passed = not failures
    acceptance_report(3, passed, "specialize(nabla F) = nabla_classical(specialize F), 240 cases, mod p^(N-1)")
    assert passed, failures


def test_criterion_04_independence(acceptance_report):
    rng = default_rng(7)
    U = universal_char(P)
    K = katz_splitting(P)
    failures = []
    for i in range(10):
        alpha = random_series(P, rng)
        s2 = splitting_update(K, alpha)
        for r in (0, 1, 2):
            F = random_form(U, r, KATZ, rng)
            lhs = change_coordinates(nabla(F, K), alpha, to=s2)
            rhs = nabla(change_coordinates(F, alpha, to=s2), s2)
            if not lhs == rhs:
                failures.append((i, r))
    passed = not failures
    acceptance_report(4, passed, "change_coordinates o nabla_s = nabla_s' o change_coordinates, 10 alphas x r in {0,1,2}")
    assert passed, failures


def test_criterion_05_change_of_splitting(acceptance_report):
    rng = default_rng(11)
    K = katz_splitting(P)
    U = universal_char(P)
    w = wt(U)
    matrix_ok = all(matrix_identity_check(K, random_series(P, rng), pairs=3, seed=i) for i in range(10))
    family_ok = True
    for _ in range(10):
        alpha = random_series(P, rng)
        f = random_series(P, rng, family=True)
        lhs = partial_chi(f, U, splitting_update(K, alpha))
        family_ok &= lhs == partial_chi(f, U, K) + (alpha * f).scale(w)
    passed = matrix_ok and family_ok
    acceptance_report(5, passed, "matrix identity for 10 alphas; d'^chi = d^chi + wt(chi) alpha (universal)")
    assert passed


def test_criterion_06_family_operator_q_expansion(acceptance_report):
    rng = default_rng(13)
    K = katz_splitting(P)
    e2 = QSeries(e2_ints(P.Q), P)  # oracle E2, not the engine's generator
    inv12 = PadicInt(12, P).inverse()
    ok = True
    for chi in (universal_char(P), classical_char(12, P), classical_char(3, P)):
        for _ in range(10):
            f = random_series(P, rng, family=chi.is_family)
            ok &= partial_chi(f, chi, K) == f.theta() + (e2 * f).scale(wt(chi) * inv12)
    d = partial_chi(delta(P), classical_char(12, P), K)
    anchors = d[1] == 2 and d[2] == -96
    passed = ok and anchors
    acceptance_report(6, passed, "partial_chi (Katz) = q d/dq f + wt E2 f / 12 coefficient-wise")
    assert passed


def test_criterion_07_hecke(acceptance_report):
    e4 = QSeries(eisenstein_ints(240, 4, P.Q), P)
    dl = QSeries(delta_ints(P.Q), P)
    F12 = NearlyOCForm(classical_char(12, P), (dl,), DIAGONAL)
    K = katz_splitting(P)
    G = nabla_classical(NearlyOCForm(classical_char(12, P), (dl,), KATZ), K)
    G = change_coordinates(G, K.alpha0, to=DIAGONAL, direction=-1)
    TG = t_ell(G, 2)[0]
    checks = {
        "T2 E4 = 9 E4": is_eigen(NearlyOCForm(classical_char(4, P), (e4,), DIAGONAL), T2, 9),
        "T2 Delta = -24 Delta": is_eigen(F12, T2, -24) and delta_ints(3)[2] == -24,
        "U_p V_p = id": u_p(v_p(F12)) == F12,
        "T2 nabla Delta = -48 nabla Delta": is_eigen(G, T2, -48),
        "anchors": TG[1] == -48 and G[0][4] + 8192 == 2304 and TG[2] == 2304,
    }
    passed = all(checks.values())
    acceptance_report(7, passed, "T2 E4 = 9 E4, T2 Delta = -24 Delta, U_p V_p = id, nabla Delta T2-eigen at -48")
    assert passed, checks


def test_criterion_08_lambda_calibration(acceptance_report):
    try:
        cal = calibrate_lambda(P)
    except CalibrationError as exc:
        acceptance_report(8, False, f"lambda calibration: {exc}")
        raise
    unique = len(cal.residuals) == 25 * 25 - 1
    diag = SplittingModel(QSeries.zero(P.Q, P), cal.lambda_diag, DIAGONAL)
    katz = splitting_update(diag, eisenstein_e2(P).scale(PadicInt(12, P).inverse()), KATZ)
    H = nabla_classical(nabla_classical(NearlyOCForm(classical_char(12, P), (delta(P),), KATZ), katz), katz)
    H = change_coordinates(H, katz.alpha0, to=DIAGONAL, direction=-1)
    eigen = is_eigen(H, T2, -96)
    rng = default_rng(17)
    commute = True
    for k in (4, 8, 12):
        F = random_form(classical_char(k, P), 2, DIAGONAL, rng)
        commute &= t_ell(nabla_classical(F, diag), 2) == nabla_classical(t_ell(F, 2), diag).scale(2)
    lam = cal.lambda_katz
    e4 = eisenstein_preset("E4_STD", P)
    classical = lam == e4.scale(lam[0])
    passed = unique and eigen and commute and classical
    detail = f"unique={unique} eigen(-96)={eigen} r2-commute={commute} katz-lambda-classical={classical}"
    acceptance_report(8, passed, f"lambda calibration: {detail}")
    assert passed, (
        f"{detail}; calibrated lambda_diag coefficients {cal.coefficients}, "
        f"Katz lambda starts {lam.ints()[:4]} = (E4 - 2 E2^2)/144, not a multiple of E4"
    )


@pytest.mark.parametrize("label", ["classical", "universal"])
def test_criterion_09_character_extension(acceptance_report, label):
    chi = classical_char(4, P) if label == "classical" else universal_char(P)
    section = char_section_series(chi, 2)
    p = P.p
    ok = all(section(pexp(PadicInt(p * p * t, P))) == chi.lam ** (p * t) for t in (0, 1, 2))
    acceptance_report(9, ok, f"char_section_series(exp(p^2 t)) = lambda^(p t), t in {{0,1,2}} ({label})")
    assert ok


def test_criterion_10_determinism(acceptance_report):
    cmd = [sys.executable, "-m", "padic_gm", "verify", "--suite", "all"]
    runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
    passed = runs[0].stdout == runs[1].stdout and len(runs[0].stdout) > 0 and runs[0].returncode == runs[1].returncode
    acceptance_report(10, passed, f"verify --suite all twice: byte-identical ({len(runs[0].stdout)} bytes)")
    assert passed
