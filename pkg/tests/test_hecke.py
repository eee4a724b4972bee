import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_gm import (
    DIAGONAL,
    KATZ,
    CoordinateError,
    DomainError,
    HeckeOp,
    NearlyOCForm,
    NotEigenError,
    PadicInt,
    PrecisionProfile,
    QSeries,
    SplittingModel,
    UnsupportedError,
    calibrate_lambda,
    change_coordinates,
    classical_char,
    delta,
    diagonal_splitting,
    eigenvalue,
    eisenstein_e2,
    eisenstein_preset,
    nabla_classical,
    t_ell,
    u_p,
    universal_char,
    splitting_update,
    v_p,
)
from padic_gm.hecke import lambda_candidate
from padic_gm.sampling import default_rng, random_form

from oracles import delta_ints, eisenstein_ints, hecke_ints

P = PrecisionProfile(p=5, N=6, M=16, Q=64)
T2 = HeckeOp("tl", 2)


def form(f, k, r=0):
    return NearlyOCForm.from_series(f, classical_char(k, P), r, DIAGONAL)


def test_hecke_op_validation():
    with pytest.raises(DomainError):
        HeckeOp("tx")
    with pytest.raises(DomainError):
        HeckeOp("tl", 4)
    assert str(HeckeOp("tl", 3)) == "T_3"


@pytest.mark.parametrize("ell", [2, 3, 7])
def test_t_ell_matches_classical_formula(ell):
    e4 = eisenstein_ints(240, 4, 64)
    got = t_ell(form(eisenstein_preset("E4_STD", P), 4), ell)[0]
    assert got.ints() == [x % P.modulus for x in hecke_ints(e4, ell, 4)]
    dl = delta_ints(64)
    got = t_ell(form(delta(P), 12), ell)[0]
    assert got.ints() == [x % P.modulus for x in hecke_ints(dl, ell, 12)]


def test_eigenvalues_of_classical_forms():
    assert eigenvalue(form(eisenstein_preset("E4_STD", P), 4), T2) == 9
    assert eigenvalue(form(delta(P), 12), T2) == -24
    assert eigenvalue(form(delta(P), 12), HeckeOp("tl", 3)) == 252
    assert eigenvalue(form(delta(P), 12), HeckeOp("tl", 7)) == -16744
    assert eigenvalue(form(delta(P), 12), HeckeOp("up")) == 4830


def test_weight_16_cusp_form_eigenvalue():
    # S_16 is spanned by E4 Delta; its T_2 eigenvalue is 216 (not -96)
    f = eisenstein_preset("E4_STD", P) * delta(P)
    assert eigenvalue(form(f, 16), T2) == 216


def test_not_eigen():
    f = eisenstein_preset("E4_STD", P) + delta(P)
    with pytest.raises(NotEigenError) as info:
        eigenvalue(form(f, 4), T2)
    assert info.value.index[0] == 0
    with pytest.raises(DomainError):
        eigenvalue(form(QSeries.zero(64, P), 4), T2)
    with pytest.raises(UnsupportedError):
        eigenvalue(NearlyOCForm(universal_char(P), (delta(P),), DIAGONAL), T2)


def test_coordinates_and_domains():
    F = NearlyOCForm(classical_char(12, P), (delta(P),), KATZ)
    for op in (u_p, v_p, lambda G: t_ell(G, 2)):
        with pytest.raises(CoordinateError):
            op(F)
    with pytest.raises(DomainError):
        t_ell(form(delta(P), 12), 5)
    with pytest.raises(UnsupportedError):
        v_p(form(delta(P), 12, r=1))


def test_u_p_v_p():
    F = form(delta(P), 12)
    assert len(v_p(F)) == 64 * 5 and len(u_p(F)) == 13
    assert u_p(v_p(F)) == F
    one = form(QSeries.one(64, P), 0)
    assert v_p(one).truncate(64) == one


def test_u_p_picks_p_power_on_upper_components():
    rng = default_rng(0)
    F = random_form(classical_char(4, P), 2, DIAGONAL, rng)
    G = u_p(F)
    for a in range(3):
        assert G[a].ints() == [x * 5**a % P.modulus for x in F[a].ints()[::5]]


@given(st.integers(0, 2**32))
def test_hecke_operators_commute(seed):
    F = random_form(classical_char(6, P), 0, DIAGONAL, default_rng(seed))
    n = 64 // 6
    assert t_ell(t_ell(F, 2), 3).truncate(n) == t_ell(t_ell(F, 3), 2).truncate(n)


@given(st.integers(0, 2**32), st.sampled_from([0, 1, 2]), st.sampled_from([4, 10, 12]), st.sampled_from([2, 3]))
def test_nabla_commutes_with_t_ell(seed, r, k, ell):
    D = diagonal_splitting(P)
    F = random_form(classical_char(k, P), r, DIAGONAL, default_rng(seed))
    assert t_ell(nabla_classical(F, D), ell) == nabla_classical(t_ell(F, ell), D).scale(ell)


def test_nabla_delta_eigenvalue_anchors():
    D = diagonal_splitting(P)
    G = nabla_classical(form(delta(P), 12), D)
    assert eigenvalue(G, T2) == -48
    e2d = G[0]
    assert e2d[2] == -48 and e2d[4] + 8192 == 2304 and e2d[6] == -48 * 756


@pytest.fixture(scope="module")
def calibration():
    return calibrate_lambda(P)


def test_calibration_is_unique_and_zero(calibration):
    assert calibration.coefficients == (0, 0)
    assert calibration.lambda_diag.is_zero()
    assert len(calibration.residuals) == 25 * 25 - 1


def test_calibrated_katz_lambda_value(calibration):
    e2, e4 = eisenstein_e2(P), eisenstein_preset("E4_STD", P)
    inv144 = PadicInt(144, P).inverse()
    assert calibration.lambda_katz == (e4 - (e2 * e2).scale(2)).scale(inv144)
    # not a multiple of E4: its q^1 coefficient would be 240 times the constant term
    c = calibration.lambda_katz[0]
    assert not calibration.lambda_katz[1] == c * 240


def test_calibration_controls(calibration):
    assert (1, 0) in calibration.residuals  # lambda_diag = E4/144
    # lambda_diag = E4 itself: nabla^2 Delta picks up 12 E4 Delta, an eigenform of eigenvalue 216
    s = SplittingModel(QSeries.zero(64, P), eisenstein_preset("E4_STD", P), DIAGONAL)
    H = nabla_classical(nabla_classical(form(delta(P), 12), s), s)
    with pytest.raises(NotEigenError):
        eigenvalue(H, T2)


def test_lambda_candidate():
    e2, e4 = eisenstein_e2(P), eisenstein_preset("E4_STD", P)
    assert lambda_candidate(144, 0, P) == e4
    assert lambda_candidate(0, 144, P) == e2 * e2


def test_off_grid_lambda_trades_commutation_for_classicality():
    # lambda_diag = (26 E2^2 - 2 E4) / (13 * 144) keeps nabla^2 Delta T_2-eigen and makes the
    # Katz lambda a multiple of E4, but breaks T_2 o nabla = 2 nabla o T_2 on generic forms
    lam = lambda_candidate(-2, 26, P).scale(PadicInt(13, P).inverse())
    diag = SplittingModel(QSeries.zero(64, P), lam, DIAGONAL)
    katz = splitting_update(diag, eisenstein_e2(P).scale(PadicInt(12, P).inverse()), KATZ)
    H = nabla_classical(nabla_classical(NearlyOCForm(classical_char(12, P), (delta(P),), KATZ), katz), katz)
    H = change_coordinates(H, katz.alpha0, to=DIAGONAL, direction=-1)
    assert eigenvalue(H, T2) == -96
    assert katz.lam == eisenstein_preset("E4_STD", P).scale(katz.lam[0])
    F = random_form(classical_char(4, P), 2, DIAGONAL, default_rng(0))
    assert not t_ell(nabla_classical(F, diag), 2) == nabla_classical(t_ell(F, 2), diag).scale(2)
