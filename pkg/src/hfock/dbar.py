"""Polyanalytic series, the order-n Gaussian-space kernels, assembly of
order-2 solutions u = conj(z) f + u0 of du/d(conj z) = f, and residual
verification of candidate solutions.

Solutions are verified, never synthesized: given an analytic datum f and an
analytic u0, the assembled u solves the equation identically, and the
finite-difference residual measures only stencil error.  Any mismatch in the
conj(z) row shows up as a residual of the size of the perturbation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import space
from .errors import ConfigurationError
from .numerics import wirtinger_fd

PI = math.pi


@dataclass(frozen=True)
class PolyanalyticSeries:
    """Coefficient grid rows[k][j] of sum_k sum_j conj(z)^k z^j a_{k,j}."""

    rows: tuple[tuple[complex, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise ConfigurationError("PolyanalyticSeries: need at least one row")
        object.__setattr__(
            self, "rows", tuple(tuple(complex(c) for c in row) for row in self.rows))

    @property
    def order(self) -> int:
        return len(self.rows)

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        zc = z.conjugate()
        acc = 0j
        zck = 1.0 + 0j
        for row in self.rows:
            inner = 0j
            for c in reversed(row):
                inner = inner * z + c
            acc += zck * inner
            zck *= zc
        return acc


def poly_fock_kernel(n: int, z: complex, w: complex) -> complex:
    """Reproducing kernel of the order-n polyanalytic Gaussian space:
    exp(z conj(w)) sum_{k<n} ((-1)^k / k!) C(n, k+1) |z - w|^{2k}.
    """
    if not 1 <= n <= 20:
        raise ConfigurationError(f"poly_fock_kernel: order must be in [1, 20], got {n}")
    z, w = complex(z), complex(w)
    d2 = abs(z - w) ** 2
    poly = math.fsum((-1.0) ** k / math.factorial(k) * math.comb(n, k + 1) * d2 ** k
                     for k in range(n))
    return cmath.exp(z * w.conjugate()) * poly


def assemble_solution(f: space.EntireSeries, u0: space.EntireSeries) -> PolyanalyticSeries:
    """Order-2 solution u = conj(z) f(z) + u0(z) of du/d(conj z) = f."""
    width = max(f.degree, u0.degree) + 1
    row0 = tuple(u0.coeffs) + (0j,) * (width - len(u0.coeffs))
    row1 = tuple(f.coeffs) + (0j,) * (width - len(f.coeffs))
    return PolyanalyticSeries((row0, row1))


@dataclass(frozen=True)
class ResidualReport:
    max_residual: float
    residuals: tuple[float, ...]
    symbolic_zero: bool

    def flagged(self, tol: float = 1e-6) -> bool:
        return self.max_residual > tol

    def as_json_obj(self) -> dict:
        return {"max_residual": self.max_residual,
                "residuals": list(self.residuals),
                "symbolic_zero": self.symbolic_zero}


def dbar_residual(u: PolyanalyticSeries, f: space.EntireSeries,
                  samples, h: float = 1e-5) -> ResidualReport:
    """max |d u / d(conj z) - f| over the samples, by central differences.

    For u assembled from (f, u0) the symbolic residual is zero and the
    numeric one reflects the O(h^2) stencil; the report carries both views.
    """
    pts = [complex(zs) for zs in samples]
    if not pts:
        raise ConfigurationError("dbar_residual: need at least one sample")
    if any(abs(p) > 3.0 for p in pts):
        raise ConfigurationError("dbar_residual: samples must satisfy |z| <= 3")
    residuals = tuple(abs(wirtinger_fd(u, zs, h) - f(zs)) for zs in pts)
    symbolic = False
    if u.order == 2:
        width = max(len(u.rows[1]), len(f.coeffs))
        fc = tuple(f.coeffs) + (0j,) * (width - len(f.coeffs))
        ur = u.rows[1] + (0j,) * (width - len(u.rows[1]))
        symbolic = fc == ur
    return ResidualReport(max_residual=max(residuals), residuals=residuals,
                          symbolic_zero=symbolic)


def weight_mass(f: space.EntireSeries, include_pi: bool = True) -> float:
    """M(f) = integral of |f|^2 exp(-|z|^2) over the plane = pi sum n! |a_n|^2.

    ``include_pi=False`` gives the Gaussian-normalized value sum n! |a_n|^2
    (the squared norm in the normalized convention); both appear in the
    literature and the budget check below keeps the un-normalized one on
    both sides so the constant 3 is meaningful.
    """
    val = _factorial_mass(f)
    return PI * val if include_pi else val


def log_weight_mass(f: space.EntireSeries, include_pi: bool = True) -> float:
    """log of weight_mass, usable past the degree-170 overflow point."""
    terms = []
    for n, a in enumerate(f.coeffs):
        if a == 0:
            continue
        terms.append(math.lgamma(n + 1) + 2.0 * math.log(abs(a)))
    if not terms:
        return -math.inf
    m = max(terms)
    s = m + math.log(math.fsum(math.exp(t - m) for t in terms))
    return s + (math.log(PI) if include_pi else 0.0)


def _factorial_mass(f: space.EntireSeries) -> float:
    terms = []
    for n, a in enumerate(f.coeffs):
        if a == 0:
            continue
        lg = math.lgamma(n + 1)
        if lg > 700.0:
            return math.inf
        terms.append(math.gamma(n + 1) * abs(a) ** 2)
    return math.fsum(terms) if terms else 0.0


@dataclass(frozen=True)
class BudgetReport:
    lhs: float
    budget: float
    ratio: float
    ok: bool


def weighted_budget_check(u0: space.EntireSeries, f: space.EntireSeries) -> BudgetReport:
    """Check integral of |u0|^2 (1+|z|^2)^{-2} exp(-|z|^2) <= 3 M(f).

    Left side is pi times the squared space norm (both sides un-normalized);
    the ratio is exposed so any other threshold can be applied downstream.
    """
    lhs = PI * h_norm_sq(u0)
    budget = 3.0 * weight_mass(f, include_pi=True)
    ratio = lhs / budget if budget > 0 else math.inf
    return BudgetReport(lhs=lhs, budget=budget, ratio=ratio, ok=lhs <= budget)


def h_norm_sq(f: space.EntireSeries) -> float:
    return space.h_inner(f, f).real
