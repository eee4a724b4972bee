"""Named verification suites.

Each suite returns a JSON-ready dict ``{"suite", "passed", "checks"}``; every
check is ``{"criterion", "name", "passed", "detail"}``.  All randomness comes
from fixed seeds, and nothing time- or platform-dependent enters a record,
so transcripts are byte-for-byte reproducible.
"""
from __future__ import annotations

from .connection import (
    DIAGONAL,
    KATZ,
    NearlyOCForm,
    SplittingModel,
    change_coordinates,
    diagonal_splitting,
    katz_splitting,
    matrix_identity_check,
    nabla,
    nabla_classical,
    partial_chi,
    serre_splitting,
    specialize_form,
    splitting_update,
)
from .errors import CalibrationError, NotEigenError
from .hecke import HeckeOp, calibrate_lambda, eigenvalue, t_ell, u_p, v_p
from .padic import PadicInt, pexp
from .qseries import QSeries, delta, eisenstein_e2, eisenstein_preset
from .sampling import default_rng, random_form, random_series
from .weights import char_section_series, classical_char, universal_char, weight_point, wt

__all__ = ["SUITES", "run_suite", "run_all"]


def _check(criterion, name, passed, **detail):
    return {"criterion": criterion, "name": name, "passed": bool(passed), "detail": detail}


def _suite(name, checks):
    return {"suite": name, "passed": all(c["passed"] for c in checks), "checks": checks}


def _inv(n, profile):
    return PadicInt(n, profile).inverse()


# -- criterion 2 -------------------------------------------------------------------


def suite_ramanujan(profile, seed=0):
    Q = profile.Q
    e2 = eisenstein_e2(terms=Q)
    e4 = eisenstein_preset("E4_STD", terms=Q)
    e6 = eisenstein_preset("E6_STD", terms=Q)
    checks = [
        _check(2, "12 theta E2 = E2^2 - E4", (e2.theta() * 12) == e2 * e2 - e4, terms=Q),
        _check(2, "3 theta E4 = E2 E4 - E6", (e4.theta() * 3) == e2 * e4 - e6, terms=Q),
        _check(2, "2 theta E6 = E2 E6 - E4^2", (e6.theta() * 2) == e2 * e6 - e4 * e4, terms=Q),
    ]
    return _suite("ramanujan", checks)


# -- criteria 1, 3, 9 --------------------------------------------------------------


def suite_interpolation(profile, seed=0):
    checks = []
    for k in (0, 1, 3, 4, 12):
        w = wt(classical_char(k, profile))
        checks.append(_check(1, f"wt(classical_char({k})) = {k}", w == k, value=w.residue, prec=w.prec))

    rng = default_rng(seed)
    U = universal_char(profile)
    K = katz_splitting(profile)
    for r in (0, 1, 2):
        for k in (4, 6, 8, 12):
            uk = weight_point(k, profile)
            bad = []
            for i in range(20):
                F = random_form(U, r, KATZ, rng)
                lhs = specialize_form(nabla(F, K), uk)
                rhs = nabla_classical(specialize_form(F, uk), K, k=k)
                if not lhs == rhs:
                    bad.append(i)
            checks.append(_check(3, f"specialize o nabla = nabla_classical o specialize (r={r}, k={k})", not bad,
                                 samples=20, failures=bad, prec=profile.N - 1))

    p = profile.p
    for label, chi in (("classical k=4", classical_char(4, profile)), ("universal", U)):
        section = char_section_series(chi, 2)
        for t in (0, 1, 2):
            z = pexp(PadicInt(p * p * t, profile))
            ok = section(z) == chi.lam ** (p * t)
            checks.append(_check(9, f"section(exp(p^2 t)) = lambda^(p t) ({label}, t={t})", ok, terms=len(section)))
    return _suite("interpolation", checks)


# -- criterion 4 -------------------------------------------------------------------


def _independence_holds(F, s, alpha, direction):
    s2 = splitting_update(s, alpha)
    lhs = change_coordinates(nabla(F, s), alpha, to=s2, direction=direction)
    rhs = nabla(change_coordinates(F, alpha, to=s2, direction=direction), s2)
    return lhs == rhs


def suite_independence(profile, seed=0):
    rng = default_rng(seed)
    U = universal_char(profile)
    K = katz_splitting(profile)
    checks = []
    for r in (0, 1, 2):
        bad = []
        for i in range(10):
            alpha = random_series(profile, rng)
            F = random_form(U, r, KATZ, rng)
            if not _independence_holds(F, K, alpha, 1):
                bad.append(i)
        checks.append(_check(4, f"change_coordinates o nabla = nabla' o change_coordinates (r={r})", not bad,
                             samples=10, failures=bad))
    # the opposite substitution sign must fail: this pins the convention
    alpha = random_series(profile, rng)
    F = random_form(U, 1, KATZ, rng)
    checks.append(_check(4, "opposite coordinate sign breaks independence (control)",
                         not _independence_holds(F, K, alpha, -1)))
    return _suite("independence", checks)


# -- criteria 5, 6 -----------------------------------------------------------------


def suite_change_of_splitting(profile, seed=0):
    rng = default_rng(seed)
    U = universal_char(profile)
    K = katz_splitting(profile)
    checks = []
    bad = [i for i in range(10) if not matrix_identity_check(K, random_series(profile, rng), pairs=3, seed=seed + i)]
    checks.append(_check(5, "matrix identity for d' = d + alpha", not bad, samples=10, failures=bad))
    alpha = random_series(profile, rng)
    wrong = eisenstein_preset("E4_PAPER", profile)
    checks.append(_check(5, "matrix identity rejects a wrong lambda' (control)",
                         not matrix_identity_check(K, alpha, pairs=3, seed=seed, lam_prime=wrong)))

    w = wt(U)
    bad = []
    for i in range(10):
        alpha = random_series(profile, rng)
        f = random_series(profile, rng, family=True)
        s2 = splitting_update(K, alpha)
        if not partial_chi(f, U, s2) == partial_chi(f, U, K) + (alpha * f).scale(w):
            bad.append(i)
    checks.append(_check(5, "family d'^chi = d^chi + wt(chi) alpha (universal)", not bad, samples=10, failures=bad))

    e2_12 = eisenstein_e2(profile).scale(_inv(12, profile))
    bad = []
    for i in range(10):
        for chi in (U, classical_char(12, profile)):
            f = random_series(profile, rng, family=chi.is_family)
            expected = f.theta() + (e2_12 * f).scale(wt(chi))
            if not partial_chi(f, chi, K) == expected:
                bad.append(i)
    checks.append(_check(6, "partial_chi (Katz) = q d/dq f + wt E2 f / 12", not bad, samples=20, failures=bad))
    d = partial_chi(delta(profile), classical_char(12, profile), K)
    checks.append(_check(6, "partial_chi(Delta, k=12) starts 0, 2, -96", d[0] == 0 and d[1] == 2 and d[2] == -96))
    return _suite("change-of-splitting", checks)


# -- criterion 7 -------------------------------------------------------------------


def _eigen_is(F, op, mu):
    try:
        return eigenvalue(F, op) == mu
    except NotEigenError:
        return False


def suite_hecke(profile, seed=0):
    T2 = HeckeOp("tl", 2)
    e4 = eisenstein_preset("E4_STD", profile)
    dl = delta(profile)
    F4 = NearlyOCForm(classical_char(4, profile), (e4,), DIAGONAL)
    F12 = NearlyOCForm(classical_char(12, profile), (dl,), DIAGONAL)
    checks = [
        _check(7, "T_2 E4 = 9 E4", _eigen_is(F4, T2, 9)),
        _check(7, "T_2 Delta = -24 Delta", _eigen_is(F12, T2, -24)),
        _check(7, "U_p V_p = id on Delta", u_p(v_p(F12)) == F12),
    ]
    K = katz_splitting(profile)
    G = nabla_classical(NearlyOCForm(classical_char(12, profile), (dl,), KATZ), K)
    G = change_coordinates(G, K.alpha0, to=DIAGONAL, direction=-1)
    e2d = G.components[0]
    anchors = e2d[1] == 1 and e2d[2] == -48 and e2d[4] + 8192 == 2304 and e2d[6] == -48 * 756
    checks.append(_check(7, "nabla Delta in diagonal coordinates is (E2 Delta, 12 Delta)",
                         anchors and G.components[1] == dl.scale(12)))
    checks.append(_check(7, "T_2 nabla Delta = -48 nabla Delta", _eigen_is(G, T2, -48)))

    rng = default_rng(seed)
    D = diagonal_splitting(profile)
    for r in (0, 1):
        bad = []
        for i in range(5):
            k = (4, 6, 8, 12, 16)[i]
            F = random_form(classical_char(k, profile), r, DIAGONAL, rng)
            if not t_ell(nabla_classical(F, D), 2) == nabla_classical(t_ell(F, 2), D).scale(2):
                bad.append(i)
        checks.append(_check(7, f"T_2 o nabla = 2 nabla o T_2 (r={r})", not bad, samples=5, failures=bad))
    return _suite("hecke", checks)


# -- criterion 8 -------------------------------------------------------------------


def suite_calibrate_lambda(profile, seed=0):
    checks = []
    try:
        cal = calibrate_lambda(profile)
    except CalibrationError as exc:
        return _suite("calibrate-lambda", [_check(8, "calibrate_lambda finds exactly one candidate", False, error=str(exc))])
    checks.append(_check(8, "calibrate_lambda finds exactly one candidate", True,
                         coefficients=list(cal.coefficients), rejected=len(cal.residuals)))
    checks.append(_check(8, "lambda = E4_STD / 144 is rejected (control)", (1, 0) in cal.residuals))

    zero = QSeries.zero(profile.Q, profile)
    diag = SplittingModel(zero, cal.lambda_diag, DIAGONAL)
    katz = splitting_update(diag, eisenstein_e2(profile).scale(_inv(12, profile)), KATZ)
    G = nabla_classical(nabla_classical(NearlyOCForm(classical_char(12, profile), (delta(profile),), KATZ), katz), katz)
    G = change_coordinates(G, katz.alpha0, to=DIAGONAL, direction=-1)
    checks.append(_check(8, "T_2 nabla^2 Delta = -96 nabla^2 Delta", _eigen_is(G, HeckeOp("tl", 2), -96)))

    rng = default_rng(seed)
    bad = []
    for i, k in enumerate((4, 8, 12)):
        F = random_form(classical_char(k, profile), 2, DIAGONAL, rng)
        if not t_ell(nabla_classical(F, diag), 2) == nabla_classical(t_ell(F, 2), diag).scale(2):
            bad.append(i)
    checks.append(_check(8, "T_2 o nabla = 2 nabla o T_2 (r=2, calibrated lambda)", not bad, samples=3, failures=bad))

    lam_k = cal.lambda_katz
    c = lam_k[0]
    e4 = eisenstein_preset("E4_STD", profile)
    classical = lam_k == e4.scale(c)
    mismatch = next((n for n in range(len(lam_k)) if not lam_k[n] == e4[n] * c), None)
    checks.append(_check(8, "Katz-coordinate lambda is a multiple of E4_STD", classical,
                         lambda_katz_head=lam_k.ints()[:6], first_mismatch=mismatch))
    serre = serre_splitting(profile)
    checks.append(_check(8, "Serre splitting lambda = -E4_STD / 144 (reference)",
                         serre.lam == e4.scale(-_inv(144, profile))))
    return _suite("calibrate-lambda", checks)


SUITES = {
    "ramanujan": suite_ramanujan,
    "interpolation": suite_interpolation,
    "independence": suite_independence,
    "change-of-splitting": suite_change_of_splitting,
    "hecke": suite_hecke,
    "calibrate-lambda": suite_calibrate_lambda,
}


def run_suite(name, profile, seed=0):
    return SUITES[name](profile, seed)


def run_all(profile, seed=0):
    suites = [fn(profile, seed) for fn in SUITES.values()]
    return {"suite": "all", "passed": all(s["passed"] for s in suites), "suites": suites}
