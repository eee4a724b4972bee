"""Nearly overconvergent forms in the q-expansion model and their connections.

A form of type r and weight chi is a polynomial f_0 + f_1 Y + ... + f_r Y^r
whose coefficient f_a has weight chi * chi_cycl^(-2a); Y marks the
complement direction of the chosen splitting of the Hodge filtration.

A splitting is encoded by ``(alpha0, lam)``: the weight-k connection on
omega^k is theta + k*alpha0 and lam is the weight-4 section by which the
complement maps into omega.  The Gauss-Manin connection then sends f_a to
    Y^a     : theta(f_a) + (wt - 2a) alpha0 f_a
    Y^(a+1) : (wt - a) f_a
    Y^(a-1) : a lam f_a
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import CoordinateError, DomainError
from .padic import PadicInt, pexp
from .qseries import QSeries, eisenstein_e2, eisenstein_preset
from .sampling import default_rng, random_series
from .weights import Character, wt

__all__ = [
    "DIAGONAL",
    "KATZ",
    "KATZ_PAPER",
    "SERRE",
    "SplittingModel",
    "NearlyOCForm",
    "diagonal_splitting",
    "katz_splitting",
    "katz_paper_splitting",
    "serre_splitting",
    "get_splitting",
    "partial_chi",
    "partial_pow",
    "nabla",
    "nabla_classical",
    "splitting_update",
    "change_coordinates",
    "specialize_form",
    "matrix_identity_check",
]

DIAGONAL = "diagonal"
KATZ = "katz"
KATZ_PAPER = "katz-paper"
SERRE = "serre"


@dataclass(frozen=True, eq=False)
class SplittingModel:
    alpha0: QSeries
    lam: QSeries
    name: str

    @property
    def profile(self):
        return self.alpha0.profile

    def __repr__(self):
        return f"SplittingModel({self.name!r})"


def _e2_over_12(profile):
    return eisenstein_e2(profile).scale(PadicInt(12, profile).inverse())


def diagonal_splitting(profile):
    """alpha0 = 0, lam = 0: the coordinates in which Hecke operators act diagonally."""
    zero = QSeries.zero(profile.Q, profile)
    return SplittingModel(zero, zero, DIAGONAL)


def katz_splitting(profile):
    """alpha0 = E2/12, the splitting behind theta(f) + k E2 f / 12.

    lam is the calibrated value (see ``hecke.calibrate_lambda``): the image of
    lam = 0 in diagonal coordinates, i.e. (E4 - 2 E2^2)/144.
    """
    return splitting_update(diagonal_splitting(profile), _e2_over_12(profile), KATZ)


def katz_paper_splitting(profile):
    """alpha0 = E2/12 with the printed lam = 1 + 120 sum sigma_3(n) q^n (uncalibrated)."""
    return SplittingModel(_e2_over_12(profile), eisenstein_preset("E4_PAPER", profile), KATZ_PAPER)


def serre_splitting(profile):
    """alpha0 = -E2/12 (Serre derivative); lam works out to -E4/144."""
    return splitting_update(diagonal_splitting(profile), -_e2_over_12(profile), SERRE)


_FACTORIES = {
    DIAGONAL: diagonal_splitting,
    KATZ: katz_splitting,
    KATZ_PAPER: katz_paper_splitting,
    SERRE: serre_splitting,
}


def get_splitting(name, profile):
    try:
        return _FACTORIES[name](profile)
    except KeyError:
        raise DomainError(f"unknown splitting {name!r}; choose from {sorted(_FACTORIES)}") from None


@dataclass(frozen=True, eq=False)
class NearlyOCForm:
    """f_0 + f_1 Y + ... + f_r Y^r of weight ``weight`` in ``splitting`` coordinates."""

    weight: Character
    components: tuple
    splitting: str = KATZ

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise DomainError("a form needs at least one component")
        n = min(len(c) for c in comps)
        comps = tuple(c if len(c) == n else c.truncate(n) for c in comps)
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_series(cls, f, weight, r=0, splitting=KATZ):
        return cls(weight, (f,), splitting).include(r)

    @property
    def r(self):
        return len(self.components) - 1

    @property
    def profile(self):
        return self.weight.profile

    @property
    def family(self):
        return any(c.family for c in self.components)

    def __len__(self):
        return len(self.components[0])

    def __getitem__(self, a):
        return self.components[a]

    def include(self, r):
        """Zero-pad into type r >= self.r."""
        if r < self.r:
            raise DomainError(f"cannot include type {self.r} into type {r}; use truncate_type")
        zero = QSeries.zero(len(self), self.profile, family=self.family)
        return NearlyOCForm(self.weight, self.components + (zero,) * (r - self.r), self.splitting)

    def truncate_type(self, r):
        """Left inverse of ``include``: drop components above r (they must vanish)."""
        if any(not c.is_zero() for c in self.components[r + 1 :]):
            raise DomainError(f"components above {r} are nonzero")
        return NearlyOCForm(self.weight, self.components[: r + 1], self.splitting)

    def _same_space(self, other):
        if self.splitting != other.splitting or not self.weight == other.weight:
            raise DomainError("forms live in different spaces")

    def __add__(self, other):
        self._same_space(other)
        r = max(self.r, other.r)
        a, b = self.include(r), other.include(r)
        return NearlyOCForm(self.weight, tuple(x + y for x, y in zip(a.components, b.components)), self.splitting)

    def __neg__(self):
        return NearlyOCForm(self.weight, tuple(-c for c in self.components), self.splitting)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return NearlyOCForm(self.weight, tuple(x.scale(c) for x in self.components), self.splitting)

    def truncate(self, length):
        return NearlyOCForm(self.weight, tuple(c.truncate(length) for c in self.components), self.splitting)

    def __eq__(self, other):
        if not isinstance(other, NearlyOCForm):
            return NotImplemented
        return (
            self.splitting == other.splitting
            and self.r == other.r
            and self.weight == other.weight
            and all(x == y for x, y in zip(self.components, other.components))
        )

    __hash__ = None

    def __repr__(self):
        return f"NearlyOCForm(r={self.r}, weight={self.weight!r}, splitting={self.splitting!r}, Q={len(self)})"


# -- connections ------------------------------------------------------------------


def partial_chi(f, chi, s):
    """The weight-chi connection theta(f) + wt(chi) alpha0 f."""
    return f.theta() + (s.alpha0 * f).scale(wt(chi))


def partial_pow(f, k, s):
    """The connection on omega^k, k any integer: theta(f) + k alpha0 f."""
    return f.theta() + (s.alpha0 * f).scale(k)


def _check_coords(F, s):
    if F.splitting != s.name:
        raise CoordinateError(f"form is in {F.splitting!r} coordinates, splitting is {s.name!r}")


def _collect(terms, size):
    out = [None] * size
    for i, x in terms:
        out[i] = x if out[i] is None else out[i] + x
    return tuple(out)


def nabla(F, s):
    """Family Gauss-Manin connection: type r, weight chi -> type r+1, weight chi chi_cycl^2."""
    _check_coords(F, s)
    chi = F.weight
    w = wt(chi)
    terms = []
    for a, f in enumerate(F.components):
        terms.append((a, partial_chi(f, chi.twist(-2 * a), s)))
        terms.append((a + 1, f.scale(w - a)))
        if a:
            terms.append((a - 1, (s.lam * f).scale(a)))
    return NearlyOCForm(chi.twist(2), _collect(terms, F.r + 2), F.splitting)


def nabla_classical(F, s, k=None):
    """Classical Gauss-Manin connection at integer weight k (no logarithms involved)."""
    _check_coords(F, s)
    k = F.weight.k if k is None else k
    if k is None:
        raise DomainError("nabla_classical needs an integer weight")
    profile = F.profile
    if F.weight.is_family or not F.weight.lam == pexp(PadicInt(profile.p * k, profile)):
        raise DomainError(f"form weight {F.weight!r} is not classical of weight {k}")
    terms = []
    for a, f in enumerate(F.components):
        terms.append((a, f.theta() + (s.alpha0 * f).scale(k - 2 * a)))
        terms.append((a + 1, f.scale(k - a)))
        if a:
            terms.append((a - 1, (s.lam * f).scale(a)))
    return NearlyOCForm(F.weight.twist(2), _collect(terms, F.r + 2), F.splitting)


# -- change of splitting -----------------------------------------------------------


def splitting_update(s, alpha, name=None):
    """Splitting with connection shifted by the weight-2 series alpha.

    alpha0' = alpha0 + alpha,  lam' = lam - alpha^2 - (theta + 2 alpha0)(alpha).
    """
    return SplittingModel(
        s.alpha0 + alpha,
        s.lam - alpha * alpha - partial_pow(alpha, 2, s),
        name if name is not None else f"{s.name}'",
    )


def change_coordinates(F, alpha, to=None, direction=1):
    """Re-express F in the coordinates of ``splitting_update(s, alpha)``.

    The new complement is eta' = eta - alpha*omega, so Y = Y' + alpha and
    f'_b = sum_{a >= b} binom(a, b) alpha^(a-b) f_a.  ``direction=-1``
    applies the inverse substitution (back from s' to s).
    """
    if direction not in (1, -1):
        raise DomainError("direction must be +1 or -1")
    a_ = alpha if direction == 1 else -alpha
    if isinstance(to, SplittingModel):
        to = to.name
    name = to if to is not None else f"{F.splitting}'"
    powers = [None, a_]
    for _ in range(2, F.r + 1):
        powers.append(powers[-1] * a_)
    comps = []
    for b in range(F.r + 1):
        acc = F.components[b]
        for a in range(b + 1, F.r + 1):
            acc = acc + (powers[a - b] * F.components[a]).scale(comb(a, b))
        comps.append(acc)
    return NearlyOCForm(F.weight, tuple(comps), name)


def specialize_form(F, u0):
    """Evaluate a family form at the disk point u = u0."""
    return NearlyOCForm(F.weight.specialize(u0), tuple(c.specialize(u0) for c in F.components), F.splitting)


def matrix_identity_check(s, alpha, *, pairs=10, seed=0, lam_prime=None):
    """Check (1 a; 0 1)(d lam; 1 d^-1)(1 -a; 0 1) = (d' lam'; 1 d'^-1) on random pairs.

    x is acted on as a weight-1 section, y as weight -1.  ``lam_prime``
    overrides the updated lam (negative controls).
    """
    s2 = splitting_update(s, alpha)
    lam2 = s2.lam if lam_prime is None else lam_prime
    rng = default_rng(seed)
    profile = s.profile
    n = min(len(alpha), len(s.alpha0))
    for _ in range(pairs):
        x = random_series(profile, rng, n)
        y = random_series(profile, rng, n)
        # right-to-left: (1 -alpha; 0 1), then the connection matrix, then (1 alpha; 0 1)
        x1 = x - alpha * y
        x2 = partial_pow(x1, 1, s) + s.lam * y
        y2 = x1 + partial_pow(y, -1, s)
        lhs = (x2 + alpha * y2, y2)
        rhs = (partial_pow(x, 1, s2) + lam2 * y, x + partial_pow(y, -1, s2))
        if not (lhs[0] == rhs[0] and lhs[1] == rhs[1]):
            return False
    return True
