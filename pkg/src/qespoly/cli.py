"""Command-line frontend: ``qespoly <command> [options]``.

Every command emits ``{command, family, params, results, diagnostics}`` as
JSON (plus ``error`` on failure). ``wavefunction`` can also emit CSV.
Exit status: 0 ok, 1 invalid input, 2 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import enum
import io
import json
import math
import sys
import warnings

import numpy as np

from .errors import ComplexRootWarning, OffShellWarning, ParameterError, QESError
from .params import PRECISIONS, PoschlTellerParams, PTAnharmonicParams, SexticParams
from .polynomials import generate_polynomials
from .potentials import (
    Family,
    PotentialFamily,
    analytic_continuation_pt,
    eval_potential,
    pt_defect,
    sextic_from_coefficients,
    sextic_sector_L,
    transform_general_shift,
    transform_half_coordinate,
    transform_scarf,
)
from .spectra import energy_sextic, lambda_spectrum_roots, lambda_spectrum_tridiagonal
from .verify import GridConfig, fd_spectrum, residual_check
from .wavefunctions import eval_wavefunction, make_eigenfunction, normalize_numerically

# Potentials of the Daniel benchmark: x² + x⁴/(2M^{3/2}) + x⁶/c with ħ = m = 1.
DANIEL = (
    ("V1", 7.625, 7442.0, 2.897143),
    ("V2", 7.375, 6962.0, 5.891677),
    ("V3", 7.125, 6498.0, 8.991223),
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# -- serialization ------------------------------------------------------------


def to_jsonable(obj):
    """Plain JSON types: complex → {re, im}, non-finite → null, enums → value."""
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (bool, str)) or obj is None:
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else None
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": to_jsonable(obj.real), "im": to_jsonable(obj.imag)}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [to_jsonable(v) for v in obj]
    return to_jsonable(float(obj))


def dumps(payload) -> str:
    # shortest round-trip repr: exact and byte-stable across runs
    return json.dumps(to_jsonable(payload), indent=2, allow_nan=False) + "\n"


# -- argument handling ---------------------------------------------------------


def _add_family_args(p, required=True):
    p.add_argument("--family", required=required, choices=[f.value for f in Family])
    for name in ("L", "A", "q", "b", "a", "qa2", "ell"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--twoj", type=int, default=0)
    p.add_argument("--precision", choices=PRECISIONS, default="double")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ParameterError(f"--family {args.family} requires " + ", ".join("--" + n for n in missing))


def _a_q(args):
    if args.qa2 is not None:
        if args.a is not None or args.q is not None:
            raise ParameterError("give either --qa2 or --a/--q, not both")
        return 1.0, args.qa2
    _need(args, "a", "q")
    return args.a, args.q


def build_family(args) -> PotentialFamily:
    tag = Family(args.family)
    if tag in (Family.POSCHL_TELLER, Family.GENERALIZED_PT, Family.SCARF_PT):
        _need(args, "L", "A", "q")
        params = PoschlTellerParams(L=args.L, A=args.A, q=args.q, alpha=args.alpha, twoj=args.twoj)
    elif tag is Family.SEXTIC:
        _need(args, "L", "b")
        a, q = _a_q(args)
        params = SexticParams(L=args.L, b=args.b, a=a, q=q, twoj=args.twoj)
    else:
        _need(args, "b", "ell")
        a, q = _a_q(args)
        params = PTAnharmonicParams(b=args.b, a=a, q=q, ell=args.ell, twoj=args.twoj)
    return PotentialFamily(tag, params)


def _params_dict(params):
    d = to_jsonable(params)
    for extra in ("j", "qA2", "qa2"):
        if hasattr(params, extra):
            d[extra] = to_jsonable(getattr(params, extra))
    return d


def _solution_dict(sol):
    return {
        "method": sol.method,
        "lambda_roots": sol.lambda_roots,
        "energies": sol.energies,
        "residuals": sol.residuals,
    }


# -- commands ------------------------------------------------------------------


def cmd_spectrum(args, fam):
    sols = [lambda_spectrum_roots(fam, args.precision)]
    if args.method in ("tridiagonal", "both"):
        tri = lambda_spectrum_tridiagonal(fam, args.precision)
        sols = [tri] if args.method == "tridiagonal" else sols + [tri]
    results = _solution_dict(sols[0])
    diagnostics = dict(sols[0].diagnostics)
    if len(sols) == 2:
        results["tridiagonal"] = _solution_dict(sols[1])
        a, b = sols[0].lambda_roots, sols[1].lambda_roots
        diagnostics["cross_method_max_diff"] = max((abs(x - y) for x, y in zip(a, b)), default=0.0) if len(a) == len(b) else None
    return results, diagnostics


def cmd_polytable(args, fam):
    polys = generate_polynomials(fam.params, fam.params.twoj + 1, args.precision)
    var = "epsilon" if isinstance(fam.params, (SexticParams, PTAnharmonicParams)) else "lambda"
    rows = [{"m": m, "coefficients": [float(c) for c in p.coefficients]} for m, p in enumerate(polys)]
    return {"variable": var, "order": "ascending", "polynomials": rows}, {"precision": args.precision}


def _default_window(fam):
    p = fam.params
    if fam.tag is Family.POSCHL_TELLER:
        return 0.02 / p.alpha, 4.0 / p.alpha
    if fam.tag is Family.GENERALIZED_PT:
        return 0.04 / p.alpha, 8.0 / p.alpha
    if fam.tag is Family.SCARF_PT:
        return -8.0 / p.alpha, 8.0 / p.alpha
    if fam.tag is Family.SEXTIC:
        return 0.01, 4.0
    return -3.0, 3.0


def cmd_wavefunction(args, fam):
    sol = lambda_spectrum_roots(fam)
    if not sol.lambda_roots:
        raise QESError("no real spectral value to build a state from")
    if not 0 <= args.root_index < len(sol.lambda_roots):
        raise ParameterError(f"--root-index must be in [0, {len(sol.lambda_roots) - 1}]")
    lam = sol.lambda_roots[args.root_index]
    spec = make_eigenfunction(fam, lam)
    lo, hi = _default_window(fam)
    lo = lo if args.x_min is None else args.x_min
    hi = hi if args.x_max is None else args.x_max
    x = np.linspace(lo, hi, args.n)
    psi = eval_wavefunction(spec, x)
    scale = 1.0
    if args.normalize:
        half = fam.tag.half_line
        grid = np.linspace(1e-6 * hi if half else lo, hi, 4001)
        scale = 1 / math.sqrt(normalize_numerically(spec, grid, open_lower=half))
        psi = psi * scale
    V = eval_potential(fam, x)
    rows = [(float(xi), float(p.real), float(p.imag), float(v.real), float(v.imag)) for xi, p, v in zip(x, psi, V)]
    results = {
        "lambda": lam,
        "energy": spec.energy,
        "rj_coefficients": spec.rj_coefficients,
        "normalization": scale,
        "columns": ["x", "re_psi", "im_psi", "v_re", "v_im"],
        "samples": rows,
    }
    return results, {"root_index": args.root_index, "n_roots": len(sol.lambda_roots)}


def cmd_transform_check(args, fam):
    if not isinstance(fam.params, PoschlTellerParams):
        raise ParameterError("transform-check needs a Pöschl–Teller parameter set")
    p = fam.params
    rng = np.random.default_rng(args.seed)
    x = rng.uniform(0.1 / p.alpha, 4.0 / p.alpha, args.samples)
    xs = np.concatenate([x, -x])
    shift = math.pi / (4 * p.alpha)

    def rel(u, v):
        return float(np.max(np.abs(u - v) / np.maximum(1.0, np.abs(v))))

    gen = eval_potential(transform_half_coordinate(p), x)
    scarf = eval_potential(transform_scarf(p), xs)
    rows = [
        {"identity": "V_gen(x) = V_pt(x/2)/4", "residual": rel(gen, 0.25 * analytic_continuation_pt(p, x / 2))},
        {"identity": "V_scarf(x) = V_pt(x/2 + i pi/(4 alpha))/4",
         "residual": rel(scarf, 0.25 * analytic_continuation_pt(p, xs / 2 + 1j * shift))},
        {"identity": "shift(1/2, pi/(4 alpha)) = V_scarf", "residual": rel(transform_general_shift(p, 0.5, shift)(xs), scarf)},
        {"identity": "shift(1/2, 0) = V_gen", "residual": rel(transform_general_shift(p, 0.5, 0.0)(x), gen)},
        {"identity": "shift(1, 0) = V_pt", "residual": rel(transform_general_shift(p, 1.0, 0.0)(x), eval_potential(PotentialFamily(Family.POSCHL_TELLER, p), x))},
        {"identity": "V_scarf(-x) = conj V_scarf(x)", "residual": pt_defect(transform_scarf(p), x)},
        {"identity": f"shift({args.a_scale}, {args.b_shift}) PT symmetry",
         "residual": transform_general_shift(p, args.a_scale, args.b_shift).pt_defect(x)},
    ]
    worst = max(r["residual"] for r in rows)
    return {"rows": rows, "max_residual": worst, "pass": worst < args.tol}, {"samples": args.samples, "seed": args.seed, "tol": args.tol}


def cmd_verify(args, fam):
    sol = lambda_spectrum_roots(fam)
    if fam.is_real:
        lo, hi = _default_window(fam)
        lo = 0.0 if fam.tag.half_line else lo
        hi = hi if args.x_max is None else args.x_max
        n_states = max(len(sol.energies), 1) + args.extra_states
        rep = fd_spectrum(fam, GridConfig(lo, hi, args.n_points), n_states)
        fd = np.array(rep.richardson_estimate)
        matches = [float(np.min(np.abs(fd - e))) for e in sol.energies]
        ok = all(m < args.tol for m in matches)
        results = {
            "mode": "finite-difference",
            "qes_energies": sol.energies,
            "fd_energies": rep.energies,
            "richardson_estimate": rep.richardson_estimate,
            "match_error": matches,
            "verdict": "pass" if ok else "fail",
        }
        meta = {k: v for k, v in rep.metadata.items() if k not in ("x", "vectors")}
        return results, {"oracle": meta, "tol": args.tol}
    lo, hi = _default_window(fam)
    samples = np.linspace(lo / 2, hi / 2, args.samples)
    reports = []
    for lam, E in zip(sol.lambda_roots, sol.energies):
        spec = make_eigenfunction(fam, lam)
        rep = residual_check(fam, E, spec, samples, tol=args.tol)
        reports.append({"lambda": lam, "energy": E, "max_scaled_residual": rep.metadata["max_scaled_residual"], "verdict": rep.verdict})
    ok = all(r["verdict"] == "pass" for r in reports)
    return {"mode": "residual", "states": reports, "verdict": "pass" if ok else "fail"}, {"tol": args.tol}


def daniel_fit(M: float, c: float):
    """QES sextic record for 2·V_Daniel in the sector j = 0 (L solved from the fit)."""
    c2, c4, c6 = 2.0, 1.0 / M**1.5, 2.0 / c
    L = sextic_sector_L(c2, c4, c6, 0)
    return sextic_from_coefficients(c2, c4, c6, L, 0)


def cmd_bench_daniel(args, _fam):
    rows = []
    for name, M, c, E_ref in DANIEL:
        params = daniel_fit(M, c)
        eps = lambda_spectrum_roots(params).lambda_roots[0]
        E_qes = energy_sextic(eps, params) / 2
        L = params.L

        def V(x, M=M, c=c, L=L):
            return 2 * (x**2 + x**4 / (2 * M**1.5) + x**6 / c) + L * (L + 1) / x**2

        rep = fd_spectrum(V, GridConfig(0.0, 10.0, args.n_points), 1)
        E_fd = rep.richardson_estimate[0] / 2
        rows.append({
            "potential": name, "M": M, "c": c, "L": L, "twoj": params.twoj,
            "b": params.b, "qa2": params.qa2,
            "E_reference": E_ref, "E_qes": E_qes, "E_fd": E_fd,
            "dE_qes": abs(E_qes - E_ref), "dE_fd": abs(E_fd - E_ref),
            "pass": abs(E_qes - E_ref) <= 1e-5 and abs(E_fd - E_ref) <= 1e-4,
        })
    return {"rows": rows, "pass": all(r["pass"] for r in rows)}, {
        "units": "hbar = m = 1; fitted as -psi'' + 2V psi, energies halved",
        "fd_intervals": [args.n_points - 1, 2 * (args.n_points - 1)],
    }


COMMANDS = {
    "spectrum": cmd_spectrum,
    "polytable": cmd_polytable,
    "wavefunction": cmd_wavefunction,
    "transform-check": cmd_transform_check,
    "verify": cmd_verify,
    "bench-daniel": cmd_bench_daniel,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qespoly", description="Spectra and eigenfunctions of quasi-exactly solvable potentials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    io_args = _Parser(add_help=False)
    io_args.add_argument("--out", help="output path (default: stdout)")
    io_args.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("spectrum", parents=[io_args])
    _add_family_args(p)
    p.add_argument("--method", choices=("roots", "tridiagonal", "both"), default="roots")

    p = sub.add_parser("polytable", parents=[io_args])
    _add_family_args(p)

    p = sub.add_parser("wavefunction", parents=[io_args])
    _add_family_args(p)
    p.add_argument("--root-index", type=int, default=0)
    p.add_argument("--x-min", type=float)
    p.add_argument("--x-max", type=float)
    p.add_argument("--n", type=int, default=201)
    p.add_argument("--normalize", action="store_true")

    p = sub.add_parser("transform-check", parents=[io_args])
    _add_family_args(p, required=False)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--a-scale", type=float, default=0.5)
    p.add_argument("--b-shift", type=float, default=0.3)
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("verify", parents=[io_args])
    _add_family_args(p)
    p.add_argument("--x-max", type=float)
    p.add_argument("--n-points", type=int, default=4001)
    p.add_argument("--extra-states", type=int, default=2)
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--tol", type=float, default=1e-4)

    p = sub.add_parser("bench-daniel", parents=[io_args])
    p.add_argument("--n-points", type=int, default=4001)
    return parser


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([repr(float(v)) for v in r])
    return buf.getvalue()


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"qespoly: error: {exc}\n")
        return 1
    payload = {"command": args.command, "family": getattr(args, "family", None), "params": {}, "results": {}, "diagnostics": {}}
    status = 0
    try:
        if args.command == "transform-check" and args.family is None:
            args.family = payload["family"] = Family.POSCHL_TELLER.value
        if args.command == "bench-daniel":
            fam = None
            payload["family"] = Family.SEXTIC.value
        else:
            fam = build_family(args)
            payload["params"] = _params_dict(fam.params)
        if args.format == "csv" and args.command != "wavefunction":
            raise ParameterError("--format csv is only available for the wavefunction command")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", ComplexRootWarning)
            warnings.simplefilter("always", OffShellWarning)
            results, diagnostics = COMMANDS[args.command](args, fam)
        diagnostics["warnings"] = [str(w.message) for w in caught if issubclass(w.category, (ComplexRootWarning, OffShellWarning))]
        payload["results"], payload["diagnostics"] = results, diagnostics
    except (ParameterError, UsageError) as exc:
        payload["error"] = {"type": type(exc).__name__, "message": str(exc)}
        status = 1
    except (QESError, ArithmeticError, np.linalg.LinAlgError) as exc:
        payload["error"] = {"type": type(exc).__name__, "message": str(exc)}
        status = 2
    if status == 0 and args.format == "csv":
        _emit(_csv(payload["results"]["samples"], payload["results"]["columns"]), args.out)
    else:
        _emit(dumps(payload), args.out)
    return status


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
