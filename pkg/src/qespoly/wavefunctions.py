"""Closed-form QES eigenfunctions.

Pöschl–Teller::

    ψ(x) = cosh^p(αx) sinh^{1+L}(αx) exp(-qA² cosh(2αx)/4) ℜ(-sinh²αx),
    p = qA² - B - L - 4j - 2,  ℜ(z) = Σ a_m z^m,  a_m/a_0 = Q_m(λ)/(m! (L+3/2)_m)

The generalized and Scarf states are ψ_pt(x/2) and ψ_pt(x/2 + iπ/(4α)).
Sextic: ψ = x^{1+L} exp(-bx²/2 - qa²x⁴/4) ℜ(x²) with a_m/a_0 = (-1)^m Q_m/(m! (L+3/2)_m). PT-anharmonic: ψ = exp(-iℓx - bx²/2 - iqa²x³/3) Σ r_n x^n.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import mpmath
import numpy as np
from scipy.integrate import simpson

from .errors import GammaPoleError, NonNormalizableError, OffShellWarning, ParameterError
from .params import PoschlTellerParams, PTAnharmonicParams, SexticParams
from .polynomials import critical_polynomial, eval_polynomial, generate_polynomials, normalization_factors
from .potentials import Family, PotentialFamily, family_for
from .spectra import map_energy

OFF_SHELL_TOL = 1e-8


@dataclass(frozen=True)
class EigenfunctionSpec:
    """A QES state. ``rj_coefficients`` are in ascending powers of the series variable.

    For the PT-anharmonic family the series variable is x itself and the
    coefficients are complex with the top one fixed to 1.
    """

    family: Family
    params: object
    lam: float
    level_index: int = 0
    rj_coefficients: tuple = ()

    @property
    def potential(self) -> PotentialFamily:
        return PotentialFamily(self.family, self.params)

    @property
    def energy(self):
        return map_energy(self.potential, self.lam, self.level_index)

    def __call__(self, x):
        return eval_wavefunction(self, x)


def _check_shell(params, lam):
    crit = critical_polynomial(params)
    val = abs(eval_polynomial(crit, lam))
    scale = sum(abs(c) * abs(lam) ** k for k, c in enumerate(crit.coefficients))
    if val > OFF_SHELL_TOL * max(scale, 1.0):
        warnings.warn(f"λ = {lam!r} is not a root of P_{params.twoj + 1} (|P| = {val:.3e})", OffShellWarning, stacklevel=3)


def _half_shift_pole(L):
    z = L + 1.5
    return z <= 0 and z == int(z)


def rj_coefficients(params, lam) -> list:
    """Series coefficients of ℜ_j at λ (ε for the sextic), normalized to a_0 = 1.

    a_m = Q_m(λ) / (m! (L+3/2)_m), with an extra (-1)^m for the sextic.
    Off-shell λ is allowed and only warned about.
    """
    if isinstance(params, PTAnharmonicParams):
        return ptanh_coefficients(params, lam)
    if not isinstance(params, (PoschlTellerParams, SexticParams)):
        raise ParameterError(f"unsupported parameter record {type(params).__name__}")
    if _half_shift_pole(params.L):
        raise GammaPoleError(f"(L+3/2)_m vanishes for L = {params.L}")
    if params.twoj == 0:
        return [1.0]
    _check_shell(params, lam)
    Q = generate_polynomials(params, params.twoj)
    sign = -1.0 if isinstance(params, SexticParams) else 1.0
    out, denom = [], 1.0
    for m, Qm in enumerate(Q):
        if m:
            denom *= m * (params.L + 0.5 + m)
        out.append(sign**m * eval_polynomial(Qm, lam) / denom)
    return out


def _fact(z):
    if z < 0 and z == int(z):
        raise GammaPoleError(f"Gamma pole at factorial argument {z}")
    return mpmath.gamma(z + 1)


def rj_coefficients_factorial(params, lam) -> list:
    """The literal factorial form, unnormalized:

    a_m = (4g)^m (2j)! (2L+1)! (L+m)! / [2 m! (2j-m)! (2L+1+2m)!] · P_m(λ)

    with g = qA² (qa² for the sextic) and the raw (not monic) P_m.
    Any Gamma pole raises :class:`GammaPoleError`.
    """
    if not isinstance(params, (PoschlTellerParams, SexticParams)):
        raise ParameterError("factorial form exists for the Pöschl–Teller and sextic records")
    tj, L = params.twoj, params.L
    g = params.qa2 if isinstance(params, SexticParams) else params.qA2
    Q = generate_polynomials(params, tj)
    D = normalization_factors(params, tj)
    out = []
    with mpmath.workdps(30):
        for m in range(tj + 1):
            raw = eval_polynomial(Q[m], lam) / D[m] if D[m] else 0.0
            num = (4 * g) ** m * _fact(tj) * _fact(2 * L + 1) * _fact(L + m)
            den = 2 * _fact(m) * _fact(tj - m) * _fact(2 * L + 1 + 2 * m)
            out.append(float(num / den * raw))
    return out


def ptanh_coefficients(params: PTAnharmonicParams, eps) -> list:
    """r_0..r_{2j} with r_{2j} = 1, from r_{2j-m} = Q_m(ε) / Π_{k≤m}(-2ik qa²)."""
    tj = params.twoj
    if tj == 0:
        return [1.0 + 0j]
    _check_shell(params, eps)
    Q = generate_polynomials(params, tj)
    D = normalization_factors(params, tj)
    top_down = [eval_polynomial(Q[m], eps) / D[m] for m in range(tj + 1)]
    return [complex(c) for c in reversed(top_down)]


def make_eigenfunction(source, lam, level_index: int = 0) -> EigenfunctionSpec:
    fam = source if isinstance(source, PotentialFamily) else family_for(source)
    if level_index < 0:
        raise ParameterError("level_index must be >= 0")
    return EigenfunctionSpec(fam.tag, fam.params, lam, level_index, tuple(rj_coefficients(fam.params, lam)))


def _series(coeffs, z):
    acc = np.zeros_like(z, dtype=complex) + coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def _log_pt(p: PoschlTellerParams, coeffs, y):
    """log ψ_pt as a function of the dimensionless argument y = αx (complex allowed)."""
    g = p.qA2
    expo = g - p.B - p.L - 2 * p.twoj - 2
    s = np.sinh(y)
    return expo * np.log(np.cosh(y)) + (1 + p.L) * np.log(s) - g * np.cosh(2 * y) / 4 + np.log(_series(coeffs, -(s * s)))


def log_wavefunction(spec: EigenfunctionSpec, x) -> np.ndarray:
    """Complex log ψ (principal branches, continuous on the family's domain)."""
    x = np.asarray(x, dtype=float)
    p, coeffs, tag = spec.params, list(spec.rj_coefficients), spec.family
    with np.errstate(divide="ignore"):
        if tag is Family.POSCHL_TELLER:
            return _log_pt(p, coeffs, (p.alpha * x).astype(complex))
        if tag is Family.GENERALIZED_PT:
            return _log_pt(p, coeffs, (p.alpha * x / 2).astype(complex))
        if tag is Family.SCARF_PT:
            return _log_pt(p, coeffs, p.alpha * x / 2 + 1j * math.pi / 4)
        xc = x.astype(complex)
        if tag is Family.SEXTIC:
            g = p.qa2
            x2 = xc * xc
            return (1 + p.L) * np.log(xc) - p.b * x2 / 2 - g * x2 * x2 / 4 + np.log(_series(coeffs, x2))
        g = p.qa2
        return -1j * p.ell * xc - p.b * xc**2 / 2 - 1j * g * xc**3 / 3 + np.log(_series(coeffs, xc))


def eval_wavefunction(spec: EigenfunctionSpec, x, log: bool = False):
    """ψ(x); with ``log=True`` returns (log|ψ|, arg ψ) to avoid overflow."""
    scalar = np.ndim(x) == 0
    lp = log_wavefunction(spec, x)
    if log:
        out = (np.real(lp), np.imag(lp))
        return (float(out[0]), float(out[1])) if scalar else out
    with np.errstate(over="ignore", under="ignore"):
        psi = np.exp(lp)
    return complex(psi) if scalar else psi


def normalize_numerically(psi, grid, decay_tol: float = 1e-8, open_lower: bool = False) -> float:
    """∫|ψ|² over ``grid`` by Simpson's rule; ψ is a spec or any callable.

    Divide ψ by the square root of the result to normalize it. With
    ``open_lower`` the grid starts at a regular singular point where ψ ~ x^{1+L}
    and only the upper end must show decay.
    """
    grid = np.asarray(grid, dtype=float)
    f = psi if callable(psi) else None
    if f is None:
        raise ParameterError("psi must be an EigenfunctionSpec or a callable")
    vals = np.abs(np.asarray(f(grid), dtype=complex))
    peak = np.max(vals)
    if not np.isfinite(peak) or peak == 0:
        raise NonNormalizableError("ψ is zero or non-finite on the grid")
    edge = vals[-1] if open_lower else max(vals[0], vals[-1])
    if edge > decay_tol * peak:
        raise NonNormalizableError(f"ψ does not decay at the grid ends (|ψ|/max = {edge / peak:.2e})")
    return float(simpson(vals**2, x=grid))


def count_nodes(values, rel_floor: float = 1e-10) -> int:
    """Sign changes of a real sampled function, ignoring samples below the floor."""
    v = np.real(np.asarray(values))
    keep = np.abs(v) > rel_floor * np.max(np.abs(v))
    s = np.sign(v[keep])
    return int(np.count_nonzero(s[1:] != s[:-1]))


def boundary_slope(spec: EigenfunctionSpec, x_lo: float = 1e-4, x_hi: float = 1e-3) -> float:
    """d log|ψ| / d log x between two points near the origin."""
    l1, _ = eval_wavefunction(spec, x_lo, log=True)
    l2, _ = eval_wavefunction(spec, x_hi, log=True)
    return (l2 - l1) / math.log(x_hi / x_lo)


def as_callable(spec: EigenfunctionSpec) -> Callable:
    return lambda x: eval_wavefunction(spec, x)
