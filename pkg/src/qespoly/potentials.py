"""The five potential families, their evaluation, and the maps between them.

All potentials use the convention ``-ψ'' + V ψ = E ψ``.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, FitError, ParameterError, SingularityError
from .params import PoschlTellerParams, PTAnharmonicParams, SexticParams, qes_radicand

POLE_GUARD = 1e-8
SQRT17 = math.sqrt(17.0)


class Family(str, enum.Enum):
    POSCHL_TELLER = "poschl-teller"
    GENERALIZED_PT = "generalized-pt"
    SCARF_PT = "scarf-pt"
    SEXTIC = "sextic"
    PT_ANHARMONIC = "pt-anharmonic"

    @property
    def is_real(self) -> bool:
        return self not in (Family.SCARF_PT, Family.PT_ANHARMONIC)

    @property
    def half_line(self) -> bool:
        return self in (Family.POSCHL_TELLER, Family.GENERALIZED_PT, Family.SEXTIC)


_RECORDS = {
    Family.POSCHL_TELLER: PoschlTellerParams,
    Family.GENERALIZED_PT: PoschlTellerParams,
    Family.SCARF_PT: PoschlTellerParams,
    Family.SEXTIC: SexticParams,
    Family.PT_ANHARMONIC: PTAnharmonicParams,
}


@dataclass(frozen=True)
class Domain:
    lower: float
    upper: float
    lower_open: bool = False

    def contains(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        ok = x < self.upper
        return ok & ((x > self.lower) if self.lower_open else (x >= self.lower))


HALF_LINE = Domain(0.0, math.inf, lower_open=True)
REAL_LINE = Domain(-math.inf, math.inf)


@dataclass(frozen=True)
class PotentialFamily:
    tag: Family
    params: object
    domain: Domain = field(default=None)

    def __post_init__(self):
        tag = Family(self.tag)
        object.__setattr__(self, "tag", tag)
        if not isinstance(self.params, _RECORDS[tag]):
            raise ParameterError(f"{tag.value} needs {_RECORDS[tag].__name__}, got {type(self.params).__name__}")
        if self.domain is None:
            object.__setattr__(self, "domain", HALF_LINE if tag.half_line else REAL_LINE)

    @property
    def is_real(self) -> bool:
        return self.tag.is_real or _vanishing_imaginary(self)

    def __call__(self, x):
        return eval_potential(self, x)


def _vanishing_imaginary(fam: PotentialFamily) -> bool:
    p = fam.params
    if fam.tag is Family.PT_ANHARMONIC:
        return p.qa2 == 0 and p.b * p.ell == 0
    return False


def family_for(params) -> PotentialFamily:
    """Default family for a parameter record (Pöschl–Teller for the shared record)."""
    if isinstance(params, PoschlTellerParams):
        return PotentialFamily(Family.POSCHL_TELLER, params)
    if isinstance(params, SexticParams):
        return PotentialFamily(Family.SEXTIC, params)
    if isinstance(params, PTAnharmonicParams):
        return PotentialFamily(Family.PT_ANHARMONIC, params)
    raise ParameterError(f"unsupported parameter record {type(params).__name__}")


def _pt_value(p: PoschlTellerParams, u, B=None):
    """V_pt at argument u (real or complex array); B may be overridden (complex continuation)."""
    B = p.B if B is None else B
    al = p.alpha
    s = np.sinh(al * u)
    c = np.cosh(al * u)
    g = p.qA2
    V = -p.A * (p.A + 1) / c**2
    if p.L * (p.L + 1) != 0:
        V = V + p.L * (p.L + 1) / s**2
    if g != 0:
        V = V + (2 * B * g + g * g * s**2) * s**2 * (s / c) ** 2
    return al**2 * V


def _check_half_line(x, scale):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise DomainError("family is defined on x > 0")
    if np.any(np.abs(scale * x) < POLE_GUARD):
        raise SingularityError("evaluation inside the pole guard band at x = 0")
    return x


def eval_potential(fam: PotentialFamily, x):
    """V(x) as complex values; scalar in, scalar out."""
    scalar = np.ndim(x) == 0
    xa = np.asarray(x, dtype=float)
    p = fam.params
    tag = fam.tag
    if tag is Family.POSCHL_TELLER:
        xa = _check_half_line(xa, p.alpha)
        V = _pt_value(p, xa)
    elif tag is Family.GENERALIZED_PT:
        xa = _check_half_line(xa, p.alpha)
        V = _generalized_value(p, xa)
    elif tag is Family.SCARF_PT:
        V = _scarf_value(p, xa)
    elif tag is Family.SEXTIC:
        if np.any(xa < 0):
            raise DomainError("sextic family is defined on x > 0")
        if p.L * (p.L + 1) != 0 and np.any(np.abs(xa) < POLE_GUARD):
            raise SingularityError("centrifugal pole at x = 0")
        V = _sextic_value(p, xa)
    else:
        V = _ptanh_value(p, xa)
    V = np.asarray(V, dtype=complex)
    return complex(V) if scalar else V


def _generalized_value(p: PoschlTellerParams, x):
    """(α²/2)[(L(L+1)+A(A+1))csch²αx + (L−A)(L+A+1)coth·csch] + (α²/4)q(2BA²s² + qA⁴s⁴)tanh², s = sinh(αx/2)."""
    al, L, A = p.alpha, p.L, p.A
    y = al * x
    cs = 1 / np.sinh(y)
    V = 0.5 * al**2 * ((L * (L + 1) + A * (A + 1)) * cs**2 + (L - A) * (L + A + 1) * cs * cs * np.cosh(y))
    g = p.qA2
    if g != 0:
        s = np.sinh(y / 2)
        V = V + 0.25 * al**2 * (2 * p.B * g * s**2 + g * g * s**4) * np.tanh(y / 2) ** 2
    return V


def _scarf_value(p: PoschlTellerParams, x):
    """-(α²/2)[(L(L+1)+A(A+1))sech²αx + i(L−A)(L+A+1)tanh·sech] + (α²/4)(2qBA²sinh²w + q²A⁴sinh⁴w)tanh²w."""
    al, L, A = p.alpha, p.L, p.A
    y = al * x
    sech = 1 / np.cosh(y)
    V = -0.5 * al**2 * ((L * (L + 1) + A * (A + 1)) * sech**2 + 1j * (L - A) * (L + A + 1) * np.tanh(y) * sech)
    g = p.qA2
    if g != 0:
        w = y / 2 + 1j * math.pi / 4
        s2 = np.sinh(w) ** 2
        V = V + 0.25 * al**2 * (2 * p.B * g * s2 + g * g * s2**2) * np.tanh(w) ** 2
    return V


def _sextic_value(p: SexticParams, x):
    c2, c4, c6 = p.coefficients()
    x2 = x * x
    V = ((c6 * x2 + c4) * x2 + c2) * x2
    if p.L * (p.L + 1) != 0:
        V = V + p.L * (p.L + 1) / x2
    return V


def _ptanh_value(p: PTAnharmonicParams, x):
    g, b, ell = p.qa2, p.b, p.ell
    return (
        2j * (b * ell - (1 + p.twoj) * g) * x
        + (b * b - 2 * ell * g) * x**2
        + 2j * g * b * x**3
        - g * g * x**4
    )


def analytic_continuation_pt(params: PoschlTellerParams, z):
    """Pöschl–Teller potential at complex argument z."""
    scalar = np.ndim(z) == 0
    za = np.asarray(z, dtype=complex)
    y = params.alpha * za
    if params.L * (params.L + 1) != 0 and np.any(np.abs(np.sinh(y)) < POLE_GUARD):
        raise SingularityError("argument at a zero of sinh(αz)")
    if np.any(np.abs(np.cosh(y)) < POLE_GUARD):
        raise SingularityError("argument at a zero of cosh(αz)")
    V = _pt_value(params, za)
    return complex(V) if scalar else V


def transform_half_coordinate(params: PoschlTellerParams) -> PotentialFamily:
    """Generalized Pöschl–Teller family; V_gen(x) = ¼ V_pt(x/2)."""
    return PotentialFamily(Family.GENERALIZED_PT, params)


def transform_scarf(params: PoschlTellerParams) -> PotentialFamily:
    """PT-symmetric Scarf family; V_scarf(x) = ¼ V_pt(x/2 + iπ/(4α))."""
    return PotentialFamily(Family.SCARF_PT, params)


@dataclass(frozen=True)
class ShiftedPotential:
    """x ↦ a² V_pt(a x + i b). Its QES energies are a² times the Pöschl–Teller ones."""

    params: PoschlTellerParams
    a_scale: float
    b_shift: float

    @property
    def energy_scale(self) -> float:
        return self.a_scale**2

    @property
    def pt_symmetric(self) -> bool:
        # V_pt is even and real on the real axis, so Schwarz reflection applies
        return True

    def __call__(self, x):
        scalar = np.ndim(x) == 0
        z = self.a_scale * np.asarray(x, dtype=float) + 1j * self.b_shift
        V = self.energy_scale * analytic_continuation_pt(self.params, z)
        return complex(V) if scalar else np.asarray(V)

    def pt_defect(self, x) -> float:
        """max |V(-x) - conj V(x)| / max(1, |V(x)|) over the samples."""
        x = np.asarray(x, dtype=float)
        v, vm = self(x), self(-x)
        return float(np.max(np.abs(vm - np.conj(v)) / np.maximum(1.0, np.abs(v))))


def transform_general_shift(params: PoschlTellerParams, a_scale: float, b_shift: float) -> ShiftedPotential:
    if a_scale == 0 or not math.isfinite(a_scale) or not math.isfinite(b_shift):
        raise ParameterError("a_scale must be finite and non-zero, b_shift finite")
    return ShiftedPotential(params, float(a_scale), float(b_shift))


def pt_defect(fam: PotentialFamily, x) -> float:
    """max |V(-x) - conj V(x)| / max(1, |V(x)|); zero for a PT-symmetric family."""
    x = np.asarray(x, dtype=float)
    v, vm = eval_potential(fam, x), eval_potential(fam, -x)
    return float(np.max(np.abs(vm - np.conj(v)) / np.maximum(1.0, np.abs(v))))


# -- α → 0 limits ----------------------------------------------------------


def _sextic_k(L, twoj):
    return 2 * L + 4 * twoj + 5


def sextic_limit_params(params: PoschlTellerParams, m: int = 0) -> SexticParams:
    """Target of the α → 0 limit with A = a/α², B = b/α², λ = (ε − m b)/α².

    The limit exists only when B α² → a√(1 + (2L+8j+5)q), so b is fixed by
    (L, a, q, j) rather than read from the finite-α record.
    """
    if m < 0:
        raise ParameterError("m must be >= 0")
    a = params.A * params.alpha**2
    k = _sextic_k(params.L, params.twoj)
    rad = 1 + k * params.q
    if rad < 0:
        raise ParameterError("1 + (2L+8j+5)q < 0: the sextic limit has no real b")
    return SexticParams(L=params.L, b=a * math.sqrt(rad), a=a, q=params.q, twoj=params.twoj)


def sextic_limit_source(target: SexticParams, alpha: float, rtol: float = 1e-9) -> PoschlTellerParams:
    """Pöschl–Teller record at finite α whose α → 0 limit is ``target``."""
    k = _sextic_k(target.L, target.twoj)
    rad = 1 + k * target.q
    if rad < 0 or abs(target.b - target.a * math.sqrt(rad)) > rtol * max(1.0, abs(target.b)):
        raise ParameterError("target is not a sextic limit: need b = a·sqrt(1 + (2L+8j+5)q)")
    return PoschlTellerParams(L=target.L, A=target.a / alpha**2, q=target.q, alpha=alpha, twoj=target.twoj)


def sextic_lambda(epsilon, alpha: float, b: float = 0.0, m: int = 0):
    """λ = (ε − m b)/α²."""
    return (epsilon - m * b) / alpha**2


def sextic_epsilon(lam, alpha: float, b: float = 0.0, m: int = 0):
    return lam * alpha**2 + m * b


def sextic_from_coefficients(c2: float, c4: float, c6: float, L: float, twoj: int, tol: float = 1e-6) -> SexticParams:
    """Invert c6 = (qa²)², c4 = 2b qa², c2 = b² − (2L+8j+5)qa².

    Raises :class:`FitError` carrying the residual of the c2 equation when it
    exceeds ``tol``.
    """
    if not c6 > 0:
        raise ParameterError("c6 must be > 0")
    g = math.sqrt(c6)
    b = c4 / (2 * g)
    residual = b * b - _sextic_k(L, twoj) * g - c2
    if abs(residual) > tol:
        raise FitError(f"inconsistent sextic coefficients (residual {residual:.3e})", residual)
    a = math.sqrt(c2) if c2 > 0 else 1.0
    return SexticParams(L=L, b=b, a=a, q=g / a**2, twoj=twoj)


def sextic_sector_L(c2: float, c4: float, c6: float, twoj: int) -> float:
    """The L that makes (c2, c4, c6) exactly QES in sector j."""
    if not c6 > 0:
        raise ParameterError("c6 must be > 0")
    g = math.sqrt(c6)
    b = c4 / (2 * g)
    k = (b * b - c2) / g
    return (k - 4 * twoj - 5) / 2


# The PT-anharmonic limit: substitutions taken verbatim, evaluated in complex
# arithmetic; the resulting convergence is reported, never asserted.


@dataclass(frozen=True)
class PTAnharmonicSource:
    """Finite-α Scarf data reached from a PT-anharmonic target."""

    alpha: float
    A: complex
    L: complex
    q: complex
    B: complex
    lam: complex
    twoj: int

    def potential(self, x):
        """¼ V_pt(x/2 + iπ/(4α)) with possibly complex parameters."""
        x = np.asarray(x, dtype=float)
        al = self.alpha
        y = al * (x / 2 + 1j * math.pi / (4 * al))
        s, c = np.sinh(y), np.cosh(y)
        A, L, q, B = self.A, self.L, self.q, self.B
        g = q * A * A
        V = L * (L + 1) / s**2 - A * (A + 1) / c**2 + (2 * B * g + g * g * s**2) * s**2 * (s / c) ** 2
        return 0.25 * al**2 * V

    def energy(self) -> complex:
        L, A, B, al = self.L, self.A, self.B, self.alpha
        d = L - A
        E = (-(d + 1) ** 2 + (d + B + 2 * self.twoj + 2) * (2 * L + 3) + 4 * self.lam) * al**2
        return E / 4


def ptanh_limit_params(params: PoschlTellerParams) -> PTAnharmonicParams:
    """(b, qa², ℓ) recovered from (A, L, q, α) by inverting the limit substitutions.

    Returned with a = 1 so that q carries qa².
    """
    al, A, L, q = params.alpha, params.A, params.L, params.q
    r = (2 * L - 3 + SQRT17) / (1 - 7 / SQRT17)  # α b / qa²
    denom = SQRT17 + 7 * r / SQRT17
    if denom == 0:
        raise ParameterError("substitution is singular for this L")
    g = A * al**3 / denom
    if g == 0:
        raise ParameterError("qa² = 0: the PT-anharmonic limit is degenerate")
    b = r * g / al
    c = (1 + 7 / SQRT17) / 17
    ell = ((4 * g / al**3 - q) * g * al / c - 2 * b * b) / (17 * g)
    return PTAnharmonicParams(b=b, a=1.0, q=g, ell=ell, twoj=params.twoj)


def ptanh_substitution(target: PTAnharmonicParams, alpha: float, epsilon: float = 0.0):
    """(A, L, λ, q) at finite α for a given target, before the q and L replacements."""
    g, b, ell, tj = target.qa2, target.b, target.ell, target.twoj
    if g == 0:
        raise ParameterError("qa² = 0: the PT-anharmonic limit is degenerate")
    al = alpha
    A = SQRT17 * g / al**3 + 7 / SQRT17 * b / al**2
    L = 0.5 * (3 - SQRT17 + (1 - 7 / SQRT17) * al * b / g)
    lam = (epsilon + tj * b) / al**2 + 2 * tj * g / al**3
    q = 4 * g / al**3 - (1 + 7 / SQRT17) / 17 * (2 * b * b + 17 * ell * g) / (g * al)
    return A, L, lam, q


def ptanh_source_params(target: PTAnharmonicParams, alpha: float, epsilon: float = 0.0) -> PTAnharmonicSource:
    """Forward chain: substitutions, then the q → q/A² and L replacements, then B."""
    A, L0, lam, q0 = ptanh_substitution(target, alpha, epsilon)
    q = q0 / A**2
    L = (q0 * L0 * L0 + (2 + 4 * A) * L0 - (20 - 16 * target.twoj)) / 8
    rad = qes_radicand(L, A, q, target.twoj)
    k = 2 * L + 4 * target.twoj + 5
    B = -(k - cmath.sqrt(rad)) / 2
    return PTAnharmonicSource(alpha=alpha, A=complex(A), L=complex(L), q=complex(q), B=complex(B), lam=complex(lam), twoj=target.twoj)
