"""Parameter records for the three QES parameterisations.

Half-integer ``j`` is always stored as the integer ``twoj = 2j``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath

from .errors import ParameterError

DOUBLE = "double"
EXTENDED = "extended"
PRECISIONS = (DOUBLE, EXTENDED)
EXTENDED_DPS = 50


def check_precision(precision: str) -> str:
    if precision not in PRECISIONS:
        raise ParameterError(f"precision must be one of {PRECISIONS}, got {precision!r}")
    return precision


def _check_twoj(twoj) -> int:
    if isinstance(twoj, bool) or not isinstance(twoj, int) or twoj < 0:
        raise ParameterError(f"twoj must be a non-negative integer, got {twoj!r}")
    return twoj


def _finite(**values):
    for name, v in values.items():
        if not math.isfinite(v):
            raise ParameterError(f"{name} must be finite, got {v!r}")


def qes_radicand(L, A, q, twoj):
    """``1 + 4A(A + 1 + (2L + 8j + 5) q A)``; must be non-negative."""
    k = 2 * L + 4 * twoj + 5
    return 1 + 4 * A * (A + 1 + k * q * A)


def qes_B(L, A, q, twoj, sqrt=math.sqrt):
    """The value of B that makes the hypergeometric-type equation quasi-exactly solvable."""
    k = 2 * L + 4 * twoj + 5
    return -(k - sqrt(qes_radicand(L, A, q, twoj))) / 2


@dataclass(frozen=True)
class PoschlTellerParams:
    """Shared parameter set of the Pöschl–Teller, generalized and Scarf families.

    ``B`` is derived and cannot be passed in.
    """

    L: float
    A: float
    q: float
    alpha: float = 1.0
    twoj: int = 0
    B: float = field(init=False)

    def __post_init__(self):
        _check_twoj(self.twoj)
        _finite(L=self.L, A=self.A, q=self.q, alpha=self.alpha)
        if not self.alpha > 0:
            raise ParameterError(f"alpha must be > 0, got {self.alpha}")
        rad = qes_radicand(self.L, self.A, self.q, self.twoj)
        if rad < 0:
            raise ParameterError(f"QES radicand is negative ({rad:.6g}); no real B exists")
        object.__setattr__(self, "B", qes_B(self.L, self.A, self.q, self.twoj))

    @property
    def j(self) -> float:
        return self.twoj / 2

    @property
    def qA2(self) -> float:
        return self.q * self.A**2

    def extended(self):
        """(L, A, q, alpha, B) as mpf; call inside an mpmath precision context."""
        L, A, q, al = (mpmath.mpf(v) for v in (self.L, self.A, self.q, self.alpha))
        return L, A, q, al, qes_B(L, A, q, self.twoj, sqrt=mpmath.sqrt)


@dataclass(frozen=True)
class SexticParams:
    """Radial sextic oscillator ``L(L+1)/x² + (b² − (2L+8j+5)qa²)x² + 2bqa²x⁴ + q²a⁴x⁶``."""

    L: float
    b: float
    a: float
    q: float
    twoj: int = 0

    def __post_init__(self):
        _check_twoj(self.twoj)
        _finite(L=self.L, b=self.b, a=self.a, q=self.q)

    @property
    def j(self) -> float:
        return self.twoj / 2

    @property
    def qa2(self) -> float:
        return self.q * self.a**2

    def coefficients(self):
        """Monomial coefficients (c2, c4, c6) of the x², x⁴, x⁶ terms."""
        g = self.qa2
        return (self.b**2 - (2 * self.L + 4 * self.twoj + 5) * g, 2 * self.b * g, g * g)


@dataclass(frozen=True)
class PTAnharmonicParams:
    """PT-symmetric quartic ``2i(bℓ − (1+2j)qa²)x + (b² − 2ℓqa²)x² + 2iqba²x³ − q²a⁴x⁴``."""

    b: float
    a: float
    q: float
    ell: float
    twoj: int = 0

    def __post_init__(self):
        _check_twoj(self.twoj)
        _finite(b=self.b, a=self.a, q=self.q, ell=self.ell)

    @property
    def j(self) -> float:
        return self.twoj / 2

    @property
    def qa2(self) -> float:
        return self.q * self.a**2
