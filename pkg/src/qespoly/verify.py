"""Independent checks: a finite-difference eigensolver, a pointwise residual, limit tables."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import (
    ComplexPotentialError,
    ComplexRootWarning,
    NotConvergedError,
    ParameterError,
    StepUnderflowError,
)
from .params import DOUBLE
from .potentials import (
    Family,
    PotentialFamily,
    eval_potential,
    family_for,
    ptanh_source_params,
    sextic_limit_source,
)
from .spectra import energy_poschl_teller, energy_pt_anharmonic, energy_sextic, lambda_spectrum_roots

PASS, FAIL, INFORMATIVE = "pass", "fail", "informative"


@dataclass(frozen=True)
class GridConfig:
    """Uniform grid with ``n_points`` nodes including both Dirichlet ends.

    The boundary nodes are never evaluated, so ``x_min = 0`` is allowed for
    families with a pole at the origin.
    """

    x_min: float
    x_max: float
    n_points: int = 4001
    boundary: str = "dirichlet"
    precision: str = DOUBLE

    def __post_init__(self):
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max) and self.x_min < self.x_max):
            raise ParameterError("grid needs finite x_min < x_max")
        if not isinstance(self.n_points, int) or self.n_points < 64:
            raise ParameterError("n_points must be an integer >= 64")
        if self.boundary != "dirichlet":
            raise ParameterError("only Dirichlet boundaries are supported")
        if self.precision != DOUBLE:
            raise ParameterError("the FD oracle runs in double precision only")

    @property
    def intervals(self) -> int:
        return self.n_points - 1


@dataclass
class OracleReport:
    energies: list
    richardson_estimate: list = field(default_factory=list)
    residual_table: list = field(default_factory=list)
    verdict: str = INFORMATIVE
    tolerances: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)


def _fd_levels(V: Callable, x_min: float, x_max: float, intervals: int, n_states: int, vectors: bool = False):
    h = (x_max - x_min) / intervals
    x = x_min + h * np.arange(1, intervals)
    v = np.real(np.asarray(V(x), dtype=complex))
    diag = 2.0 / h**2 + v
    off = np.full(intervals - 2, -1.0 / h**2)
    if vectors:
        w, U = eigh_tridiagonal(diag, off, select="i", select_range=(0, n_states - 1))
        return w, x, U / math.sqrt(h)
    return eigh_tridiagonal(diag, off, eigvals_only=True, select="i", select_range=(0, n_states - 1)), x, None


def fd_spectrum(
    fam,
    grid: GridConfig,
    n_states: int = 3,
    tol: float | None = None,
    return_vectors: bool = False,
) -> OracleReport:
    """Lowest ``n_states`` levels of -ψ'' + Vψ = Eψ by second-order central differences.

    ``fam`` is a real :class:`PotentialFamily` or any real callable V(x).
    Levels are computed on N and 2N intervals; the Richardson estimate is
    (4E_fine - E_coarse)/3.
    """
    if isinstance(fam, PotentialFamily):
        if not fam.is_real:
            raise ComplexPotentialError(f"{fam.tag.value} is complex; use residual_check")
        V = lambda x: eval_potential(fam, x)  # noqa: E731
        label = fam.tag.value
    elif callable(fam):
        V, label = fam, "callable"
    else:
        raise ParameterError("fam must be a PotentialFamily or a callable")
    if n_states < 1 or n_states > grid.intervals - 2:
        raise ParameterError("n_states out of range for this grid")
    N = grid.intervals
    coarse, _, _ = _fd_levels(V, grid.x_min, grid.x_max, N, n_states)
    fine, x, U = _fd_levels(V, grid.x_min, grid.x_max, 2 * N, n_states, return_vectors)
    rich = (4 * fine - coarse) / 3
    gap = np.abs(fine - coarse)
    verdict = INFORMATIVE
    if tol is not None:
        if np.max(gap) > tol:
            raise NotConvergedError(f"two-grid levels differ by {np.max(gap):.3e} > {tol:.3e}")
        verdict = PASS
    meta = {
        "family": label,
        "x_min": grid.x_min,
        "x_max": grid.x_max,
        "intervals": [N, 2 * N],
        "coarse": coarse.tolist(),
        "error_estimate": (gap / 3).tolist(),
    }
    if return_vectors:
        meta["x"] = x
        meta["vectors"] = U
    return OracleReport(
        energies=fine.tolist(),
        richardson_estimate=rich.tolist(),
        verdict=verdict,
        tolerances={} if tol is None else {"two_grid": tol},
        metadata=meta,
    )


def _second_derivative(f: Callable, x: float, h0: float, levels: int = 14):
    """Five-point ψ'' with a halving step ladder; returns (value, error estimate)."""
    vals = []
    h = h0
    for _ in range(levels):
        pts = x + h * np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
        fv = np.asarray(f(pts), dtype=complex)
        vals.append((-fv[0] + 16 * fv[1] - 30 * fv[2] + 16 * fv[3] - fv[4]) / (12 * h * h))
        h /= 2
    errs = [abs(vals[k] - vals[k + 1]) for k in range(levels - 1)]
    k = int(np.argmin(errs))
    return vals[k + 1], errs[k]


def residual_check(
    fam: PotentialFamily,
    E,
    psi: Callable,
    samples: Sequence[float],
    tol: float = 1e-6,
    diff_tol: float = 1e-7,
    length_scale: float = 1.0,
) -> OracleReport:
    """Scaled residual max|-ψ'' + (V - E)ψ| / (max|ψ| · max(1, |E|, max|V|)).

    Raises :class:`StepUnderflowError` when the step ladder cannot estimate
    ψ'' to ``diff_tol`` on the same scale.
    """
    xs = np.asarray(samples, dtype=float)
    if xs.size == 0:
        raise ParameterError("need at least one sample")
    V = np.asarray(eval_potential(fam, xs), dtype=complex)
    P = np.asarray(psi(xs), dtype=complex)
    scale = max(1.0, abs(E), float(np.max(np.abs(V))))
    norm = float(np.max(np.abs(P)))
    if not np.isfinite(norm) or norm == 0:
        raise ParameterError("ψ vanishes or overflows on the samples")
    rows, worst_diff = [], 0.0
    for x, v, p in zip(xs, V, P):
        h0 = 0.05 * length_scale
        if fam.domain.lower_open or fam.tag.half_line:
            h0 = min(h0, x / 4)
        d2, err = _second_derivative(psi, x, h0)
        worst_diff = max(worst_diff, err / (norm * scale))
        rows.append((float(x), float(abs(-d2 + (v - E) * p) / (norm * scale))))
    if worst_diff > diff_tol:
        raise StepUnderflowError(f"ψ'' error estimate {worst_diff:.2e} above {diff_tol:.1e}")
    worst = max(r for _, r in rows)
    return OracleReport(
        energies=[E],
        residual_table=rows,
        verdict=PASS if worst < tol else FAIL,
        tolerances={"residual": tol, "differencing": diff_tol},
        metadata={"family": fam.tag.value, "max_scaled_residual": worst, "differencing_error": worst_diff, "scale": scale},
    )


def _default_epsilon(target: PotentialFamily) -> float:
    if target.params.twoj == 0:
        return 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ComplexRootWarning)
        roots = lambda_spectrum_roots(target).lambda_roots
    return roots[0] if roots else 0.0


def limit_convergence(
    target: PotentialFamily,
    alphas: Sequence[float],
    x_samples: Sequence[float],
    epsilon: float | None = None,
) -> OracleReport:
    """max_x |(V_src - E_src) - (V_tgt - E_tgt)| for each α.

    Sextic targets pass iff the deviations decrease strictly. PT-anharmonic
    targets are reported as informative; a failed evaluation is recorded as NaN.
    """
    if not isinstance(target, PotentialFamily):
        target = family_for(target)
    alphas = [float(a) for a in alphas]
    if len(alphas) < 3 or any(b >= a for a, b in zip(alphas, alphas[1:])):
        raise ParameterError("need at least three strictly decreasing α values")
    xs = np.asarray(x_samples, dtype=float)
    eps = _default_epsilon(target) if epsilon is None else epsilon
    tp = target.params
    if target.tag is Family.SEXTIC:
        tgt = eval_potential(target, xs) - energy_sextic(eps, tp)
    elif target.tag is Family.PT_ANHARMONIC:
        tgt = eval_potential(target, xs) - energy_pt_anharmonic(eps, tp)
    else:
        raise ParameterError("limit targets are the sextic and PT-anharmonic families")
    devs = []
    for al in alphas:
        try:
            if target.tag is Family.SEXTIC:
                src = sextic_limit_source(tp, al)
                sv = eval_potential(family_for(src), xs) - energy_poschl_teller(eps / al**2, src)
            else:
                s = ptanh_source_params(tp, al, eps)
                sv = s.potential(xs) - s.energy()
            d = float(np.max(np.abs(sv - tgt)))
            devs.append(d if math.isfinite(d) else math.nan)
        except (ArithmeticError, ValueError):
            devs.append(math.nan)
    if target.tag is Family.SEXTIC:
        ok = all(math.isfinite(d) for d in devs) and all(b < a for a, b in zip(devs, devs[1:]))
        verdict = PASS if ok else FAIL
    else:
        verdict = INFORMATIVE
    return OracleReport(
        energies=[],
        residual_table=list(zip(alphas, devs)),
        verdict=verdict,
        tolerances={"criterion": "strictly decreasing"},
        metadata={"target": target.tag.value, "epsilon": eps, "x_range": [float(xs.min()), float(xs.max())]},
    )
