"""Quantization: spectral values as roots of P_{2j+1} and as matrix eigenvalues."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import mpmath
import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ComplexRootWarning, DegenerateParameterError, ParameterError
from .params import (
    DOUBLE,
    EXTENDED,
    EXTENDED_DPS,
    PoschlTellerParams,
    PTAnharmonicParams,
    SexticParams,
    check_precision,
)
from .polynomials import critical_polynomial, eval_polynomial, recurrence_coefficients
from .potentials import Family, PotentialFamily, family_for

POLYNOMIAL_ROOTS = "polynomial-roots"
TRIDIAGONAL = "tridiagonal"
COMPLEX_ROOT_TOL = 1e-8


@dataclass(frozen=True)
class SpectralSolution:
    family: Family
    lambda_roots: tuple
    energies: tuple
    method: str
    residuals: tuple
    diagnostics: dict = field(default_factory=dict)


def energy_poschl_teller(lam, params: PoschlTellerParams, m: int = 0):
    """E = [-(L-A+2m+1)² + (L-A+B+4j+2)(2L+4m+3) + 4λ] α².

    With λ a root of the monic critical polynomial the physical level is
    m = 0 for every root; m > 0 adds m(B+4j-m+1) to λ.
    """
    if m < 0:
        raise ParameterError("level index m must be >= 0")
    L, A, B, al = params.L, params.A, params.B, params.alpha
    d = L - A
    return (-(d + 2 * m + 1) ** 2 + (d + B + 2 * params.twoj + 2) * (2 * L + 4 * m + 3) + 4 * lam) * al**2


def energy_generalized(E_pt, params: PoschlTellerParams, m: int = 0):
    """E' = E/4 + m(B+4j-m+1)α²; shared by the generalized and Scarf families."""
    if m < 0:
        raise ParameterError("level index m must be >= 0")
    return E_pt / 4 + m * (params.B + 2 * params.twoj - m + 1) * params.alpha**2


def energy_sextic(epsilon, params: SexticParams):
    """E = 4ε + (2L+3)b."""
    return 4 * epsilon + (2 * params.L + 3) * params.b


def energy_pt_anharmonic(epsilon, params: PTAnharmonicParams):
    """E = ε + b(1+2j) + ℓ²."""
    return epsilon + params.b * (1 + params.twoj) + params.ell**2


def energy_exactly_solvable(params: PoschlTellerParams, n: int):
    """Bound level n of the q = 0 Pöschl–Teller well: -α²(A-L-1-2n)².

    Only levels with A-L-1-2n > 0 are bound; see :func:`bound_level_count`.
    """
    if params.q != 0:
        raise ParameterError("energy_exactly_solvable requires q = 0")
    return -params.alpha**2 * (params.A - params.L - 1 - 2 * n) ** 2


def exactly_solvable_lambda(params: PoschlTellerParams, n: int):
    """λ_n = n(B+4j-n+1) = -n(L-A+n+1) at q = 0."""
    return n * (params.B + 2 * params.twoj - n + 1)


def bound_level_count(params: PoschlTellerParams) -> int:
    s = params.A - params.L - 1
    return 0 if s <= 0 else int(np.ceil(s / 2))


def map_energy(family: PotentialFamily, lam, m: int = 0):
    p = family.params
    if family.tag is Family.POSCHL_TELLER:
        return energy_poschl_teller(lam, p, m)
    if family.tag in (Family.GENERALIZED_PT, Family.SCARF_PT):
        return energy_generalized(energy_poschl_teller(lam, p, 0), p, m)
    if family.tag is Family.SEXTIC:
        return energy_sextic(lam, p)
    return energy_pt_anharmonic(lam, p)


def _as_family(source) -> PotentialFamily:
    if isinstance(source, PotentialFamily):
        return source
    return family_for(source)


def _sort_key(z):
    z = complex(z)
    return (z.real, z.imag)


def _split_real(values, tol=COMPLEX_ROOT_TOL):
    real, cplx = [], []
    for z in values:
        z = complex(z)
        (real if abs(z.imag) <= tol * (1 + abs(z)) else cplx).append(z)
    return real, cplx


def _companion_roots(poly, precision):
    c = poly.coefficients
    n = len(c) - 1
    if n == 0:
        return []
    if precision == EXTENDED:
        C = mpmath.zeros(n, n)
        for i in range(1, n):
            C[i, i - 1] = 1
        for i in range(n):
            C[i, n - 1] = -c[i]
        return list(mpmath.eig(C, left=False, right=False))
    return list(np.linalg.eigvals(np.polynomial.polynomial.polycompanion(np.asarray(c, float))))


def _newton(poly, dpoly, z):
    d = eval_polynomial(dpoly, z)
    if d == 0:
        return z
    return z - eval_polynomial(poly, z) / d


def lambda_spectrum_roots(source, precision: str = DOUBLE) -> SpectralSolution:
    """Spectral values as the real roots of P_{2j+1}.

    Companion-matrix eigenvalues followed by one Newton step per root.
    Complex roots are quarantined into ``diagnostics['complex_roots']``.
    """
    check_precision(precision)
    fam = _as_family(source)
    params = fam.params
    with mpmath.workdps(EXTENDED_DPS):
        poly = critical_polynomial(params, precision)
        dpoly = poly.derivative()
        raw = _companion_roots(poly, precision)
        real, cplx = [], []
        for z in raw:
            zc = complex(z)
            if abs(zc.imag) <= COMPLEX_ROOT_TOL * (1 + abs(zc)):
                x = mpmath.mpf(zc.real) if precision == EXTENDED else zc.real
                x = _newton(poly, dpoly, mpmath.re(z) if precision == EXTENDED else x)
                real.append(x)
            else:
                cplx.append(_newton(poly, dpoly, z))
        real.sort()
        residuals = tuple(float(abs(eval_polynomial(poly, x))) for x in real)
    if cplx:
        warnings.warn(
            f"{len(cplx)} complex root(s) of P_{params.twoj + 1} excluded from the spectrum",
            ComplexRootWarning,
            stacklevel=2,
        )
    cplx = sorted((complex(z) for z in cplx), key=_sort_key)
    roots = tuple(float(x) for x in real)
    return SpectralSolution(
        family=fam.tag,
        lambda_roots=roots,
        energies=tuple(float(map_energy(fam, x)) for x in roots),
        method=POLYNOMIAL_ROOTS,
        residuals=residuals,
        diagnostics={
            "precision": precision,
            "critical_degree": poly.degree,
            "complex_roots": cplx,
            "complex_energies": [complex(map_energy(fam, z)) for z in cplx],
        },
    )


def tridiagonal_matrix(params):
    """(diag, super, sub, scale): eigenvalues of the matrix divided by ``scale`` are the spectrum.

    Pöschl–Teller rows are ``γ_m P_{m-1} + β_m P_m + μ_{2j-m} P_{m+1} = 4λ P_m``.
    Sextic rows are ``-m(2L+2m+1) P_{m-1} + 2bm P_m - 2(2j-m)qa² P_{m+1} = 2ε P_m``.
    """
    n = params.twoj + 1
    if isinstance(params, PoschlTellerParams):
        if params.twoj > 0 and params.qA2 == 0:
            raise DegenerateParameterError("qA^2 = 0: matrix is triangular (exactly solvable case)")
        diag = [recurrence_coefficients(params, m)[2] for m in range(n)]
        sup = [recurrence_coefficients(params, params.twoj - m)[1] for m in range(n - 1)]
        sub = [recurrence_coefficients(params, m + 1)[0] for m in range(n - 1)]
        return np.array(diag), np.array(sup), np.array(sub), 4.0
    if isinstance(params, SexticParams):
        if params.twoj > 0 and params.qa2 == 0:
            raise DegenerateParameterError("qa^2 = 0: matrix is triangular (exactly solvable case)")
        L, b, g, tj = params.L, params.b, params.qa2, params.twoj
        diag = [2 * b * m for m in range(n)]
        sup = [-2 * (tj - m) * g for m in range(n - 1)]
        sub = [-(m + 1) * (2 * L + 2 * m + 3) for m in range(n - 1)]
        return np.array(diag), np.array(sup), np.array(sub), 2.0
    raise ParameterError("tridiagonal route is defined for Pöschl–Teller and sextic parameters")


def lambda_spectrum_tridiagonal(source, precision: str = DOUBLE) -> SpectralSolution:
    """Spectral values as eigenvalues of the (2j+1)×(2j+1) tridiagonal matrix.

    When every off-diagonal product is positive the matrix is diagonally
    similar to a symmetric Jacobi matrix and a symmetric solver is used.
    """
    check_precision(precision)
    fam = _as_family(source)
    diag, sup, sub, scale = tridiagonal_matrix(fam.params)
    prod = sup * sub
    n = len(diag)
    cplx = []
    if np.all(prod > 0):
        off = np.sqrt(prod)
        if precision == EXTENDED:
            with mpmath.workdps(EXTENDED_DPS):
                T = mpmath.zeros(n, n)
                for i in range(n):
                    T[i, i] = mpmath.mpf(diag[i])
                for i in range(n - 1):
                    T[i, i + 1] = T[i + 1, i] = mpmath.sqrt(mpmath.mpf(sup[i]) * mpmath.mpf(sub[i]))
                w, V = mpmath.eigsy(T)
                vals = [w[i] for i in range(n)]
                res = [float(mpmath.norm(T * V[:, i] - w[i] * V[:, i])) for i in range(n)]
                order = sorted(range(n), key=lambda i: vals[i])
                roots = [float(vals[i] / scale) for i in order]
                residuals = [res[i] / scale for i in order]
        else:
            w, V = eigh_tridiagonal(diag, off)
            T = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
            residuals = [float(np.linalg.norm(T @ V[:, i] - w[i] * V[:, i])) / scale for i in range(n)]
            roots = [float(x) / scale for x in w]
    else:
        M = np.diag(diag) + np.diag(sup, 1) + np.diag(sub, -1)
        w, V = np.linalg.eig(M)
        real, cplx = [], []
        residuals = []
        for i, z in enumerate(w):
            if abs(z.imag) <= COMPLEX_ROOT_TOL * (1 + abs(z)):
                real.append((z.real / scale, float(np.linalg.norm(M @ V[:, i] - z * V[:, i])) / scale))
            else:
                cplx.append(complex(z) / scale)
        real.sort()
        roots = [r for r, _ in real]
        residuals = [e for _, e in real]
        if cplx:
            warnings.warn("complex eigenvalues excluded from the spectrum", ComplexRootWarning, stacklevel=2)
    cplx = sorted(cplx, key=_sort_key)
    return SpectralSolution(
        family=fam.tag,
        lambda_roots=tuple(roots),
        energies=tuple(float(map_energy(fam, x)) for x in roots),
        method=TRIDIAGONAL,
        residuals=tuple(residuals),
        diagnostics={
            "precision": precision,
            "symmetrized": bool(np.all(prod > 0)),
            "complex_roots": cplx,
            "complex_energies": [complex(map_energy(fam, z)) for z in cplx],
        },
    )
