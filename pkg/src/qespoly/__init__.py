"""Quasi-exactly solvable potentials: energy polynomials, spectra, eigenfunctions, checks."""
from .errors import (
    ComplexRootWarning,
    DegenerateParameterError,
    FitError,
    OffShellWarning,
    ParameterError,
    QESError,
)
from .params import PoschlTellerParams, PTAnharmonicParams, SexticParams
from .polynomials import (
    EnergyPolynomial,
    critical_polynomial,
    eval_polynomial,
    generate_polynomials,
    generate_pt_polynomials,
    generate_ptanh_polynomials,
    generate_sextic_polynomials,
    recurrence_coefficients,
)
from .potentials import (
    Family,
    PotentialFamily,
    analytic_continuation_pt,
    eval_potential,
    ptanh_limit_params,
    sextic_from_coefficients,
    sextic_limit_params,
    transform_general_shift,
    transform_half_coordinate,
    transform_scarf,
)
from .spectra import (
    SpectralSolution,
    energy_generalized,
    energy_poschl_teller,
    energy_pt_anharmonic,
    energy_sextic,
    lambda_spectrum_roots,
    lambda_spectrum_tridiagonal,
)
from .verify import GridConfig, OracleReport, fd_spectrum, limit_convergence, residual_check
from .wavefunctions import EigenfunctionSpec, eval_wavefunction, make_eigenfunction, normalize_numerically, rj_coefficients

__version__ = "0.1.0"
