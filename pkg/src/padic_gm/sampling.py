"""Seeded random q-series and forms for property checks."""
from __future__ import annotations

import numpy as np

from .qseries import QSeries

__all__ = ["random_series", "random_form"]


def random_series(profile, rng, length=None, *, family=False, u_degree=3):
    """Uniform coefficients in Z/p^N; family series get u-degree <= u_degree."""
    length = profile.Q if length is None else length
    depth = min(u_degree + 1, profile.M) if family else 1
    raw = rng.integers(0, profile.modulus, size=(length, depth))
    return QSeries(raw.astype(object), profile, family=family)


def random_form(weight, r, splitting, rng, length=None, *, u_degree=3):
    """A random type-r form of the given weight in the named coordinates."""
    from .connection import NearlyOCForm

    profile = weight.profile
    comps = tuple(
        random_series(profile, rng, length, family=weight.is_family, u_degree=u_degree) for _ in range(r + 1)
    )
    return NearlyOCForm(weight, comps, splitting)


def default_rng(seed):
    return np.random.default_rng(seed)
