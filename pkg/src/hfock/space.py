"""The weighted Fock-type space of entire functions with norm
(1/pi) integral of |g|^2 (1+|z|^2)^{-2} exp(-|z|^2).

Monomials are orthogonal with ||z^n||^2 = eta_n, so every norm, inner
product and kernel here reduces to the moment sequence.  The reciprocal
moment series efun(z) = sum z^n / eta_n is entire, squeezed between e^r and
8 e^{2r} on the positive axis, and K(z, w) = efun(z * conj(w)) reproduces
point evaluation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import moments
from .errors import AccuracyError, ConfigurationError
from .numerics import csum, min_eig_hermitian

_LOG8 = math.log(8.0)
_TRUNC_CAP = 4000


@dataclass(frozen=True)
class EntireSeries:
    """Finitely supported coefficient sequence of an entire function."""

    coeffs: tuple[complex, ...]
    label: str = ""

    def __post_init__(self):
        if len(self.coeffs) - 1 > moments.N_MAX:
            raise ConfigurationError(f"EntireSeries: degree capped at {moments.N_MAX}")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    @staticmethod
    def monomial(n: int, scale: complex = 1.0, label: str = "") -> "EntireSeries":
        return EntireSeries((0j,) * n + (complex(scale),), label=label)

    @staticmethod
    def basis_element(n: int) -> "EntireSeries":
        """e_n = z^n / sqrt(eta_n), a unit vector of the space."""
        scale = math.exp(-0.5 * moments.log_eta(n))
        return EntireSeries.monomial(n, scale, label=f"e_{n}")

    @staticmethod
    def exponential(w: complex, degree: int) -> "EntireSeries":
        """Truncation of z -> exp(z * conj(w)) at the given degree."""
        wc = complex(w).conjugate()
        coeffs, c = [], 1.0 + 0j
        for j in range(degree + 1):
            coeffs.append(c)
            c = c * wc / (j + 1)
        return EntireSeries(tuple(coeffs), label=f"exp({w} z), deg {degree}")


def _trunc_index(abs_z: float, tol: float) -> int:
    # tail of sum z^n/eta_n after N is below 8 (2|z|)^{N+1}/(N+1)! e^{2|z|}
    if abs_z == 0.0:
        return 0
    target = math.log(tol)
    l2z = math.log(2.0 * abs_z)
    for n in range(_TRUNC_CAP):
        if _LOG8 + (n + 1) * l2z - math.lgamma(n + 2) + 2.0 * abs_z < target:
            return n
    raise AccuracyError(f"efun: truncation bound not reached for |z|={abs_z}")


def efun(z: complex, tol: float = 1e-12) -> complex:
    """The entire function sum_n z^n / eta_n with a certified truncation tail."""
    if tol <= 0.0:
        raise ConfigurationError(f"efun: tol must be > 0, got {tol}")
    z = complex(z)
    n_trunc = _trunc_index(abs(z), tol)
    logs = moments.log_eta_sequence(max(n_trunc, 1))
    terms = [math.exp(-logs[0]) + 0j]
    for n in range(1, n_trunc + 1):
        terms.append(terms[-1] * z * math.exp(logs[n - 1] - logs[n]))
    val = csum(terms)
    return val if isinstance(val, complex) else complex(val)


def kernel(z: complex, w: complex, tol: float = 1e-12, ml_normalized: bool = False) -> complex:
    """Reproducing kernel K(z, w) = efun(z * conj(w)).

    With ``ml_normalized`` the value is scaled by eta_0 so that the section
    w -> eta_0 K(., w) takes the value 1 at the origin.
    """
    val = efun(complex(z) * complex(w).conjugate(), tol)
    if ml_normalized:
        val *= moments.eta_closed_form(0)
    return val


def _eta_weighted_terms(pairs, log_weights):
    # pairs: iterable of (n, complex product); weight exp(log_weights[n])
    terms = []
    for n, p in pairs:
        if p == 0:
            continue
        lw = log_weights[n]
        if lw < 700.0 and abs(p) < 1e290:
            terms.append(math.exp(lw) * p)
        else:
            ltot = lw + math.log(abs(p))
            terms.append(cmath.exp(ltot) * (p / abs(p)))
    return terms


def h_inner(f: EntireSeries, g: EntireSeries) -> complex:
    """Inner product sum_n eta_n a_n conj(b_n)."""
    deg = min(f.degree, g.degree)
    logs = moments.log_eta_sequence(max(deg, 1))
    pairs = ((n, f.coeffs[n] * g.coeffs[n].conjugate()) for n in range(deg + 1))
    terms = _eta_weighted_terms(pairs, logs)
    val = csum(terms) if terms else 0.0
    return complex(val)


def h_norm(f: EntireSeries) -> float:
    return math.sqrt(max(h_inner(f, f).real, 0.0))


def fock_norm(f: EntireSeries) -> float:
    """Norm with weights n! instead of eta_n (the containing Gaussian space)."""
    logs = [math.lgamma(n + 1) for n in range(f.degree + 1)]
    pairs = ((n, f.coeffs[n] * f.coeffs[n].conjugate()) for n in range(f.degree + 1))
    val = csum(_eta_weighted_terms(pairs, logs)) or 0.0
    return math.sqrt(max(complex(val).real, 0.0))


@dataclass(frozen=True)
class HNorms:
    """Both norms of a series; h_norm <= fock_norm always."""

    h_norm: float
    fock_norm: float

    def pointwise_bound(self, abs_z: float) -> float:
        """sqrt(efun(|z|^2)) * h_norm, an upper bound for |f(z)|."""
        return math.sqrt(efun(abs_z * abs_z).real) * self.h_norm


def norms(f: EntireSeries) -> HNorms:
    return HNorms(h_norm=h_norm(f), fock_norm=fock_norm(f))


def norm_sq_by_quadrature(f: EntireSeries, tol: float = 1e-11) -> float:
    """||f||^2 by per-monomial quadrature; the independent witness for h_inner.

    Cross terms vanish exactly (the angular integral of e^{i(n-m)theta} is
    zero), so the norm reduces to sum |a_n|^2 * integral of
    t^n exp(-t)/(1+t)^2, with each integral evaluated afresh rather than
    taken from the moment table.
    """
    if f.degree > 50:
        raise ConfigurationError(f"norm_sq_by_quadrature: degree capped at 50, got {f.degree}")
    total = 0.0
    for n, a in enumerate(f.coeffs):
        if a == 0:
            continue
        total += abs(a) ** 2 * moments.eta_quadrature(n, tol)
    return total


def reproducing_check(f: EntireSeries, z: complex) -> tuple[complex, complex]:
    """(<f, K_z>, f(z)); the two agree to rounding by the reproducing property."""
    if f.degree > 1000:
        raise ConfigurationError("reproducing_check: degree capped at 1000")
    z = complex(z)
    logs = moments.log_eta_sequence(max(f.degree, 1))
    # coefficients of K_z: conj(z)^n / eta_n, built by stable ratio updates
    kz = [math.exp(-logs[0]) + 0j]
    for n in range(1, f.degree + 1):
        kz.append(kz[-1] * z.conjugate() * math.exp(logs[n - 1] - logs[n]))
    kz_series = EntireSeries(tuple(kz), label=f"K_{z}")
    return h_inner(f, kz_series), f(z)


@dataclass(frozen=True)
class BoundReport:
    value: float
    bound: float
    ok: bool


def pointwise_bound_check(f: EntireSeries, z: complex, slack: float = 1e-10) -> BoundReport:
    """Check |f(z)| <= sqrt(efun(|z|^2)) * h_norm(f), with rounding slack."""
    z = complex(z)
    value = abs(f(z))
    bound = norms(f).pointwise_bound(abs(z))
    return BoundReport(value=value, bound=bound, ok=value <= bound * (1.0 + slack))


@dataclass(frozen=True)
class GramMatrix:
    """Hermitian kernel matrix over a point set with PSD diagnostics."""

    points: tuple[complex, ...]
    entries: np.ndarray = field(repr=False)
    min_eig: float
    trace: float

    def is_psd(self, tol_factor: float = 1e-8) -> bool:
        return self.min_eig >= -tol_factor * max(self.trace, 0.0) - 1e-300

    def as_json_obj(self) -> dict:
        return {
            "points": [[p.real, p.imag] for p in self.points],
            "matrix": [[[v.real, v.imag] for v in row] for row in self.entries.tolist()],
            "min_eig": self.min_eig,
            "trace": self.trace,
            "verdict": "psd" if self.is_psd() else "indefinite",
        }


def build_gram(points, entry_fn, max_points: int = 200) -> GramMatrix:
    points = tuple(complex(p) for p in points)
    if not points:
        raise ConfigurationError("build_gram: need at least one point")
    if len(points) > max_points:
        raise ConfigurationError(f"build_gram: at most {max_points} points, got {len(points)}")
    m = len(points)
    M = np.zeros((m, m), dtype=complex)
    for i in range(m):
        for j in range(i, m):
            v = entry_fn(points[i], points[j])
            M[i, j] = v
            M[j, i] = v.conjugate()
    return GramMatrix(points=points, entries=M,
                      min_eig=min_eig_hermitian(M), trace=float(M.trace().real))


def gram_kernel(points, tol: float = 1e-12) -> GramMatrix:
    """Gram matrix of the reproducing kernel on a point set (PSD by theory)."""
    return build_gram(points, lambda zi, zj: kernel(zi, zj, tol))


@dataclass(frozen=True)
class MembershipReport:
    h_norm: float
    fock_norm: float
    ratio: float
    term_contributions: tuple[float, ...]


def membership(f: EntireSeries) -> MembershipReport:
    """Norm data for a finite series (always a member of the space).

    The Fock-to-space norm ratio is reported because the two spaces differ:
    the space here is strictly larger than the Gaussian one.
    """
    logs = moments.log_eta_sequence(max(f.degree, 1))
    terms = tuple(abs(a) ** 2 * math.exp(logs[n]) if logs[n] < 700.0 else math.inf
                  for n, a in enumerate(f.coeffs))
    hn = h_norm(f)
    fn = fock_norm(f)
    return MembershipReport(h_norm=hn, fock_norm=fn,
                            ratio=fn / hn if hn > 0 else math.nan,
                            term_contributions=terms)


def classify_tail_growth(coeff_fn, n_from: int, n_to: int) -> dict:
    """Evidence-only growth classification for streamed coefficients.

    Fits log(eta_n |a_n|^2) ~ -p log n over the window and reports whether
    the membership series looks summable (p > 1), divergent (p < 1), or
    inconclusive near the boundary.  The sequential criterion is exact only
    in the limit, so this is a diagnosis, not a decision.
    """
    if not 2 <= n_from < n_to <= moments.N_MAX:
        raise ConfigurationError("classify_tail_growth: need 2 <= n_from < n_to <= 1e4")
    logs = moments.log_eta_sequence(n_to)
    ns, lt = [], []
    for n in range(n_from, n_to + 1):
        a = complex(coeff_fn(n))
        if a == 0:
            continue
        ns.append(math.log(n))
        lt.append(logs[n] + 2.0 * math.log(abs(a)))
    if len(ns) < 8:
        return {"classification": "inconclusive", "exponent": math.nan}
    slope = float(np.polyfit(np.asarray(ns), np.asarray(lt), 1)[0])
    p = -slope
    if p > 1.2:
        label = "summable-evidence"
    elif p < 0.8:
        label = "divergent-evidence"
    else:
        label = "inconclusive"
    return {"classification": label, "exponent": p}
