"""Bender–Dunne energy polynomials.

All three families are generated in monic normalisation from recurrences
re-derived by substituting a truncated power series into the underlying
differential equation:

Pöschl–Teller (variable λ, g = qA²)::

    Q_{m+1} = (λ - m(B+4j-m+1)) Q_m - (m/2)(2L+2m+1)(2j-m+1) g Q_{m-1}

Sextic (variable ε, g = qa²)::

    Q_{m+1} = (ε - b m) Q_m - (m/2)(2L+2m+1)(2j-m+1) g Q_{m-1}

PT-symmetric anharmonic (variable ε, g = qa²)::

    Q_{m+1} = (ε + 2b(m-j)) Q_m - 4gℓ m(2j-m+1) Q_{m-1}
              - 4g² m(m-1)(2j-m+2)(2j-m+1) Q_{m-2}

The critical member Q_{2j+1} carries the spectrum. The un-normalised
("raw") polynomials that multiply the series coefficients are
``Q_m / normalization_factors(...)[m]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import mpmath

from .errors import DegenerateParameterError, RangeError, ParameterError
from .params import (
    DOUBLE,
    EXTENDED,
    EXTENDED_DPS,
    PoschlTellerParams,
    PTAnharmonicParams,
    SexticParams,
    check_precision,
)


@dataclass(frozen=True)
class EnergyPolynomial:
    """Polynomial in the spectral variable, coefficients in ascending powers."""

    coefficients: tuple
    monic: bool = True

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (0.0,)
        object.__setattr__(self, "coefficients", coeffs)
        if self.monic and coeffs[-1] != 1:
            raise ParameterError("monic polynomial must have leading coefficient 1")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return eval_polynomial(self, x)

    def derivative(self) -> "EnergyPolynomial":
        c = self.coefficients
        if len(c) == 1:
            return EnergyPolynomial((0 * c[0],), monic=False)
        return EnergyPolynomial(tuple(k * c[k] for k in range(1, len(c))), monic=False)

    def as_floats(self) -> tuple:
        return tuple(float(c) for c in self.coefficients)


def eval_polynomial(p: EnergyPolynomial, x):
    """Horner evaluation; works for float, complex, mpf and numpy arrays."""
    c = p.coefficients
    acc = c[-1]
    for k in range(len(c) - 2, -1, -1):
        acc = acc * x + c[k]
    if len(c) == 1:
        # keep the shape/type of x for array input
        return acc + 0 * x
    return acc


def _recur(terms, one, upto):
    """Run Q_{m+1} = (x - d_m) Q_m - Σ_k e_{m,k} Q_{m-k} on coefficient lists.

    ``terms(m)`` returns (d_m, [e_{m,1}, e_{m,2}, ...]).
    """
    zero = one - one
    Q = [[one]]
    for m in range(upto):
        d, es = terms(m)
        prev = Q[m]
        nxt = [zero] + list(prev)  # x * Q_m
        for i, c in enumerate(prev):
            nxt[i] -= d * c
        for k, e in enumerate(es, start=1):
            if m - k < 0 or e == 0:
                continue
            for i, c in enumerate(Q[m - k]):
                nxt[i] -= e * c
        Q.append(nxt)
    return [EnergyPolynomial(tuple(c)) for c in Q]


def _check_upto(twoj, upto):
    if not isinstance(upto, int) or upto < 0 or upto > twoj + 1:
        raise RangeError(f"upto must satisfy 0 <= upto <= 2j+1 = {twoj + 1}, got {upto!r}")


def recurrence_coefficients(params: PoschlTellerParams, m: int):
    """Matrix elements (γ_m, μ_m, β_m) of the tridiagonal spectral problem.

    γ_m = 2m(2L+2m+1), μ_m = 4m qA², β_m = 4m(B+4j-m+1).
    """
    if not isinstance(m, int) or m < 0 or m > params.twoj:
        raise RangeError(f"m must be in [0, 2j={params.twoj}], got {m!r}")
    L, B = params.L, params.B
    gamma = 2 * m * (2 * L + 2 * m + 1)
    mu = 4 * m * params.qA2
    beta = 4 * m * (B + 2 * params.twoj - m + 1)
    return gamma, mu, beta


def _pt_constants(params, precision):
    if precision == EXTENDED:
        L, A, q, _, B = params.extended()
        return L, q * A * A, B, mpmath.mpf(1)
    return params.L, params.qA2, params.B, 1.0


def _sextic_constants(params, precision):
    if precision == EXTENDED:
        L, b, a, q = (mpmath.mpf(v) for v in (params.L, params.b, params.a, params.q))
        return L, b, q * a * a, mpmath.mpf(1)
    return params.L, params.b, params.qa2, 1.0


def _ptanh_constants(params, precision):
    if precision == EXTENDED:
        b, a, q, ell = (mpmath.mpf(v) for v in (params.b, params.a, params.q, params.ell))
        return b, q * a * a, ell, mpmath.mpf(1)
    return params.b, params.qa2, params.ell, 1.0


def _generate(params, upto, precision, g_name, g_of, terms_of):
    check_precision(precision)
    _check_upto(params.twoj, upto)
    if upto > 1 and g_of(params) == 0:
        raise DegenerateParameterError(
            f"{g_name} = 0: the recurrence degenerates beyond P_1 (exactly solvable case)"
        )
    if precision == EXTENDED:
        with mpmath.workdps(EXTENDED_DPS):
            return _recur(*terms_of(params, precision), upto=upto)
    return _recur(*terms_of(params, precision), upto=upto)


def _pt_terms(params, precision):
    L, g, B, one = _pt_constants(params, precision)
    tj = params.twoj

    def terms(m):
        return m * (B + 2 * tj - m + 1), [m * (2 * L + 2 * m + 1) * (tj - m + 1) * g / 2]

    return terms, one


def _sextic_terms(params, precision):
    L, b, g, one = _sextic_constants(params, precision)
    tj = params.twoj

    def terms(m):
        return b * m, [m * (2 * L + 2 * m + 1) * (tj - m + 1) * g / 2]

    return terms, one


def _ptanh_terms(params, precision):
    b, g, ell, one = _ptanh_constants(params, precision)
    tj = params.twoj

    def terms(m):
        # j = tj/2, so 2b(m - j) = b(2m - tj)
        d = -b * (2 * m - tj)
        e1 = 4 * g * ell * m * (tj - m + 1)
        e2 = 4 * g * g * m * (m - 1) * (tj - m + 2) * (tj - m + 1)
        return d, [e1, e2]

    return terms, one


def generate_pt_polynomials(params: PoschlTellerParams, upto: int, precision: str = DOUBLE):
    """Monic P_0..P_upto(λ) for the Pöschl–Teller family."""
    return _generate(params, upto, precision, "qA^2", lambda p: p.qA2, _pt_terms)


def generate_sextic_polynomials(params: SexticParams, upto: int, precision: str = DOUBLE):
    """Monic P_0..P_upto(ε) for the radial sextic oscillator."""
    return _generate(params, upto, precision, "qa^2", lambda p: p.qa2, _sextic_terms)


def generate_ptanh_polynomials(params: PTAnharmonicParams, upto: int, precision: str = DOUBLE):
    """Monic P_0..P_upto(ε) for the PT-symmetric anharmonic oscillator.

    The imaginary units of the series recurrence cancel after monic
    rescaling, so the coefficients are real.
    """
    return _generate(params, upto, precision, "qa^2", lambda p: p.qa2, _ptanh_terms)


def generate_polynomials(params, upto: int, precision: str = DOUBLE):
    if isinstance(params, PoschlTellerParams):
        return generate_pt_polynomials(params, upto, precision)
    if isinstance(params, SexticParams):
        return generate_sextic_polynomials(params, upto, precision)
    if isinstance(params, PTAnharmonicParams):
        return generate_ptanh_polynomials(params, upto, precision)
    raise ParameterError(f"unsupported parameter record {type(params).__name__}")


def critical_polynomial(params, precision: str = DOUBLE) -> EnergyPolynomial:
    """P_{2j+1}, whose roots are the admissible spectral values."""
    return generate_polynomials(params, params.twoj + 1, precision)[-1]


def normalization_factors(params, upto: int) -> list:
    """Factors D_m with raw P_m = Q_m / D_m (raw recurrence, P_0 = 1).

    Pöschl–Teller: D_m = Π_{k<m} (2j-k) qA².
    Sextic: D_m = Π_{k<m} (-(2j-k) qa²).
    PT-anharmonic: D_m = Π_{k=1..m} (-2i k qa²) (complex).
    """
    tj = params.twoj
    D = [1.0]
    for k in range(upto):
        if isinstance(params, PoschlTellerParams):
            D.append(D[-1] * (tj - k) * params.qA2)
        elif isinstance(params, SexticParams):
            D.append(D[-1] * -(tj - k) * params.qa2)
        else:
            D.append(D[-1] * (-2j * (k + 1) * params.qa2))
    return D


def raw_recurrence_residual(params, x, m: int, polys: Sequence[EnergyPolynomial] | None = None):
    """Residual of the un-normalised recurrence at step m, relative to its largest term.

    Pöschl–Teller::  2(2j-m)qA² P_{m+1} + m(2L+2m+1) P_{m-1} - 2(λ - m(B+4j-m+1)) P_m
    Sextic::         2(2j-m)qa² P_{m+1} + 2(ε - bm) P_m + m(2L+2m+1) P_{m-1}
    PT-anharmonic::  -2i(m+1)qa² s_{m+1} - (ε + 2b(m-j)) s_m
                     + 2iℓ(2j-m+1) s_{m-1} - (2j-m+2)(2j-m+1) s_{m-2}
    """
    tj = params.twoj
    if polys is None:
        polys = generate_polynomials(params, min(m + 1, tj + 1))
    D = normalization_factors(params, m + 1)
    # D_{2j+1} vanishes for the three-term families; its coefficient is zero too
    top = m + 1 if (isinstance(params, PTAnharmonicParams) or m < tj) else m
    P = [eval_polynomial(polys[k], x) / D[k] if k <= top else 0.0 for k in range(m + 2)]

    def at(k):
        return P[k] if 0 <= k <= m + 1 else 0.0

    if isinstance(params, PoschlTellerParams):
        g, L, B = params.qA2, params.L, params.B
        terms = [
            2 * (tj - m) * g * at(m + 1),
            m * (2 * L + 2 * m + 1) * at(m - 1),
            -2 * (x - m * (B + tj * 2 - m + 1)) * at(m),
        ]
    elif isinstance(params, SexticParams):
        g, L, b = params.qa2, params.L, params.b
        terms = [
            2 * (tj - m) * g * at(m + 1),
            2 * (x - b * m) * at(m),
            m * (2 * L + 2 * m + 1) * at(m - 1),
        ]
    else:
        g, b, ell = params.qa2, params.b, params.ell
        terms = [
            -2j * (m + 1) * g * at(m + 1),
            -(x + b * (2 * m - tj)) * at(m),
            2j * ell * (tj - m + 1) * at(m - 1),
            -(tj - m + 2) * (tj - m + 1) * at(m - 2),
        ]
    scale = max(abs(t) for t in terms)
    total = abs(sum(terms))
    return total / scale if scale else total
