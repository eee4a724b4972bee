"""Hecke operators on nearly overconvergent forms in diagonal coordinates.

In the splitting with alpha0 = 0 the Y-direction rescales by the isogeny
degree without mixing, so every operator acts component-wise:

    U_p  : component a, a_n -> p^a a_{np}
    V_p  : a_n -> a_{n/p}                      (type 0 only)
    T_l  : component a, a_n -> l^a a_{nl} + chi(l) l^(-1-a) a_{n/l}

With these normalizations T_l o nabla = l * nabla o T_l.  Katz coordinates
are reached by conjugating with ``change_coordinates``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np
import sympy

from .connection import (
    DIAGONAL,
    KATZ,
    NearlyOCForm,
    SplittingModel,
    change_coordinates,
    nabla_classical,
    splitting_update,
)
from .errors import CalibrationError, CoordinateError, DomainError, NotEigenError, UnsupportedError
from .padic import PadicInt
from .qseries import QSeries, delta, eisenstein_e2, eisenstein_preset
from .weights import classical_char, eval_char

__all__ = [
    "HeckeOp",
    "u_p",
    "v_p",
    "t_ell",
    "apply",
    "eigenvalue",
    "Calibration",
    "calibrate_lambda",
    "lambda_candidate",
]


@dataclass(frozen=True)
class HeckeOp:
    kind: str  # "up", "vp" or "tl"
    ell: int | None = None

    def __post_init__(self):
        if self.kind not in ("up", "vp", "tl"):
            raise DomainError(f"unknown Hecke operator {self.kind!r}")
        if self.kind == "tl" and (self.ell is None or not sympy.isprime(self.ell)):
            raise DomainError(f"T_l needs a prime l, got {self.ell!r}")

    def __call__(self, F):
        return apply(self, F)

    def __str__(self):
        return f"T_{self.ell}" if self.kind == "tl" else {"up": "U_p", "vp": "V_p"}[self.kind]


def _require_diagonal(F):
    if F.splitting != DIAGONAL:
        raise CoordinateError(
            f"Hecke operators act in diagonal coordinates; form is in {F.splitting!r} "
            "(use change_coordinates first)"
        )


def _rows(f, idx):
    """Rows of f at the integer indices idx (entries >= len(f) must not occur)."""
    return f.coeffs[idx]


def u_p(F):
    _require_diagonal(F)
    p = F.profile.p
    n_out = -(-len(F) // p)
    idx = np.arange(n_out) * p
    comps = tuple(f.like(_rows(f, idx) * p**a) for a, f in enumerate(F.components))
    return NearlyOCForm(F.weight, comps, F.splitting)


def v_p(F):
    _require_diagonal(F)
    if F.r:
        raise UnsupportedError("V_p on type r >= 1 needs division by p^a; only r = 0 is supported")
    p = F.profile.p
    f = F.components[0]
    out = np.zeros((len(f) * p, f.depth), dtype=object)
    out[::p] = f.coeffs
    return NearlyOCForm(F.weight, (f.like(out),), F.splitting)


def t_ell(F, ell):
    _require_diagonal(F)
    profile = F.profile
    if ell % profile.p == 0:
        raise DomainError("T_l needs l prime to p; use U_p at p")
    chi_l = eval_char(F.weight, ell)
    inv_l = PadicInt(ell, profile).inverse()
    n_out = -(-len(F) // ell)
    up_idx = np.arange(n_out) * ell
    comps = []
    for a, f in enumerate(F.components):
        head = f.like(_rows(f, up_idx) * ell**a)
        low = np.zeros((n_out, f.depth), dtype=object)
        low[::ell] = f.coeffs[: -(-n_out // ell)]
        tail = f.like(low).scale(chi_l * inv_l ** (1 + a))
        comps.append(head + tail)
    return NearlyOCForm(F.weight, tuple(comps), F.splitting)


def apply(op, F):
    if op.kind == "up":
        return u_p(F)
    if op.kind == "vp":
        return v_p(F)
    return t_ell(F, op.ell)


def eigenvalue(F, op):
    """mu with op(F) = mu F on every stored coefficient, or NotEigenError.

    mu is read off the coefficient of least valuation and is known modulo
    p^(prec - v); for a unit coefficient that is full precision.
    """
    if F.family or F.weight.is_family:
        raise UnsupportedError("eigenvalues are extracted for scalar forms only")
    G = op(F)
    n = len(G)
    profile = F.profile
    prec = min(min(c.prec for c in F.components), min(c.prec for c in G.components))
    best = None
    for a, f in enumerate(F.components):
        for i, x in enumerate(f.coeffs[:n, 0]):
            if x % profile.p**prec:
                v = PadicInt(x, profile, prec).valuation()
                if best is None or v < best[0]:
                    best = (v, a, i)
                if v == 0:
                    break
        if best is not None and best[0] == 0:
            break
    if best is None:
        raise DomainError("the zero form has no eigenvalue")
    v, a, i = best
    prec_mu = prec - v
    num = PadicInt(G.components[a].coeffs[i, 0], profile, prec)
    den = PadicInt(F.components[a].coeffs[i, 0], profile, prec)
    if num.valuation() < v:
        raise NotEigenError(f"{op} does not preserve the line of F at component {a}, q^{i}", index=(a, i))
    mu = PadicInt(num.divide_p(v).residue * den.divide_p(v).inverse().residue, profile, prec_mu)
    mod = profile.p**prec_mu
    for b, (f, g) in enumerate(zip(F.components, G.components)):
        diff = (g.coeffs[:n, 0] - mu.residue * f.coeffs[:n, 0]) % mod
        bad = np.nonzero(diff)[0]
        if len(bad):
            raise NotEigenError(f"{op}(F) != {mu.residue} F at component {b}, q^{int(bad[0])}", index=(b, int(bad[0])))
    return mu


# -- lambda calibration ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Calibration:
    coefficients: tuple  # (c1, c2) with lambda_diag = (c1 E4_STD + c2 E2^2) / 144
    lambda_diag: QSeries
    lambda_katz: QSeries
    residuals: dict


def lambda_candidate(c1, c2, profile):
    """(c1 E4_STD + c2 E2^2) / 144."""
    e2 = eisenstein_e2(profile)
    e4 = eisenstein_preset("E4_STD", profile)
    inv144 = PadicInt(144, profile).inverse()
    return (e4.scale(c1) + (e2 * e2).scale(c2)).scale(inv144)


def _e2_over_12(profile):
    return eisenstein_e2(profile).scale(PadicInt(12, profile).inverse())


def _residual(G, mu):
    """Index of the first q-coefficient where G fails to be T_2-eigen at mu (None if eigen)."""
    try:
        got = eigenvalue(G, HeckeOp("tl", 2))
    except NotEigenError as exc:
        return exc.index
    return None if got == mu else ("eigenvalue", got.residue)


def calibrate_lambda(profile, bound=12):
    """Search lambda_diag in inv(144) * {-bound..bound}^2 span(E4_STD, E2^2).

    The unique candidate making nabla^2(Delta), computed in Katz coordinates
    and moved to diagonal ones, a T_2-eigenvector with eigenvalue 4 tau(2) = -96.
    """
    alpha = _e2_over_12(profile)
    dl = delta(profile)
    chi = classical_char(12, profile)
    mu = PadicInt(-96, profile)
    hits, residuals = [], {}
    for c1, c2 in product(range(-bound, bound + 1), repeat=2):
        lam = lambda_candidate(c1, c2, profile)
        diag = SplittingModel(QSeries.zero(profile.Q, profile), lam, DIAGONAL)
        katz = splitting_update(diag, alpha, KATZ)
        F = NearlyOCForm(chi, (dl,), KATZ)
        G = nabla_classical(nabla_classical(F, katz), katz)
        G = change_coordinates(G, alpha, to=DIAGONAL, direction=-1)
        res = _residual(G, mu)
        if res is None:
            hits.append((c1, c2, lam, katz.lam))
        else:
            residuals[(c1, c2)] = res
    if len(hits) != 1:
        raise CalibrationError(
            f"expected exactly one calibrated lambda, found {len(hits)}",
            residuals={k: v for k, v in list(residuals.items())[:8]},
        )
    c1, c2, lam_diag, lam_katz = hits[0]
    return Calibration((c1, c2), lam_diag, lam_katz, residuals)
