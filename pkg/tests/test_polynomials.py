import math

import mpmath
import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from qespoly.errors import DegenerateParameterError, ParameterError, RangeError
from qespoly.params import PoschlTellerParams, PTAnharmonicParams, SexticParams, qes_B
from qespoly.polynomials import (
    EnergyPolynomial,
    critical_polynomial,
    eval_polynomial,
    generate_polynomials,
    generate_pt_polynomials,
    generate_sextic_polynomials,
    raw_recurrence_residual,
    recurrence_coefficients,
)

from closed_forms import pt_closed_forms


def test_recurrence_coefficients_examples():
    p = PoschlTellerParams(1.0, 1.0, 1.0, 1.0, 2)
    assert recurrence_coefficients(p, 0) == (0, 0, 0)
    g, mu, beta = recurrence_coefficients(p, 1)
    assert (g, mu) == (10, 4)
    assert beta == pytest.approx(4 * (p.B + 4 * p.j))
    p0 = PoschlTellerParams(0.0, 1.0, 0.7, 1.0, 2)
    assert recurrence_coefficients(p0, 2)[0] == 20


def test_recurrence_coefficients_range():
    p = PoschlTellerParams(1.0, 1.0, 1.0, 1.0, 2)
    with pytest.raises(RangeError):
        recurrence_coefficients(p, 3)
    with pytest.raises(RangeError):
        recurrence_coefficients(p, -1)


def test_B_solves_constraint():
    L, A, q, tj = 1.3, 2.2, 0.4, 3
    B = qes_B(L, A, q, tj)
    k = 2 * L + 4 * tj + 5
    # (2B + k)² equals the radicand
    assert (2 * B + k) ** 2 == pytest.approx(1 + 4 * A * (A + 1 + k * q * A))
    with pytest.raises(ParameterError):
        PoschlTellerParams(0.0, -0.5, -1.0, 1.0, 0)


def test_pt_P2_value_example():
    p = PoschlTellerParams(1.0, 1.0, 1.0, 1.0, 2)
    P2 = generate_pt_polynomials(p, 2)[2]
    assert eval_polynomial(P2, 0.0) == pytest.approx(-5.0)
    assert eval_polynomial(P2, 0.0) == pytest.approx(-(p.j * (2 * p.L + 3) * p.qA2))


def test_j0_collapses():
    p = PoschlTellerParams(0.4, 1.0, 0.5)
    polys = generate_pt_polynomials(p, 1)
    assert [q.coefficients for q in polys] == [(1.0,), (0.0, 1.0)]


def test_eval_polynomial_trivial():
    assert eval_polynomial(EnergyPolynomial((1.0,)), 123.0) == 1.0
    assert eval_polynomial(EnergyPolynomial((6.0, -5.0, 1.0)), 2.0) == 0.0
    arr = eval_polynomial(EnergyPolynomial((1.0,)), np.zeros(3))
    assert arr.shape == (3,)


def test_energy_polynomial_invariants():
    p = EnergyPolynomial((1.0, 2.0, 0.0, 0.0), monic=False)
    assert p.degree == 1
    with pytest.raises(ParameterError):
        EnergyPolynomial((1.0, 2.0))
    assert EnergyPolynomial((3.0, 2.0, 1.0)).derivative().coefficients == (2.0, 2.0)


def test_sextic_special_zeros():
    p = SexticParams(-1.5, 0.0, 1.0, 0.7, 2)
    assert generate_sextic_polynomials(p, 2)[2].coefficients == (0.0, 0.0, 1.0)


def test_degenerate_q():
    for p in (PoschlTellerParams(1.0, 2.0, 0.0, 1.0, 2), SexticParams(0.0, 1.0, 1.0, 0.0, 2), PTAnharmonicParams(1.0, 1.0, 0.0, 0.0, 2)):
        with pytest.raises(DegenerateParameterError):
            generate_polynomials(p, 2)
        assert generate_polynomials(p, 1)[1].coefficients == (generate_polynomials(p, 1)[1].coefficients[0], 1.0)
    assert critical_polynomial(PTAnharmonicParams(1.0, 1.0, 0.0, 0.0, 0)).coefficients == (0.0, 1.0)


def test_upto_range():
    p = SexticParams(0.0, 1.0, 1.0, 0.5, 1)
    with pytest.raises(RangeError):
        generate_polynomials(p, 3)


def _det_critical(diag, sup, sub, scale):
    x = sp.Symbol("x")
    n = len(diag)
    M = sp.zeros(n, n)
    for i in range(n):
        M[i, i] = scale * x - sp.nsimplify(diag[i], rational=True)
    for i in range(n - 1):
        M[i, i + 1] = -sp.nsimplify(sup[i], rational=True)
        M[i + 1, i] = -sp.nsimplify(sub[i], rational=True)
    poly = sp.Poly(sp.expand(M.det() / scale**n), x)
    return [float(c) for c in reversed(poly.all_coeffs())]


@pytest.mark.parametrize("twoj", [1, 2, 3, 4])
def test_pt_critical_matches_symbolic_determinant(twoj):
    """det(4λ − T) built literally from γ_m, μ_m, β_m, expanded by sympy."""
    p = PoschlTellerParams(0.7, 1.9, 0.35, 1.0, twoj)
    n = twoj + 1
    g = [2 * m * (2 * p.L + 2 * m + 1) for m in range(n + 1)]
    mu = [4 * m * p.qA2 for m in range(n + 1)]
    beta = [4 * m * (p.B + 4 * p.j - m + 1) for m in range(n)]
    ref = _det_critical(beta, [mu[twoj - m] for m in range(n - 1)], [g[m + 1] for m in range(n - 1)], 4)
    got = critical_polynomial(p).coefficients
    assert np.allclose(got, ref, rtol=1e-10, atol=1e-10)


def test_pt_P3_derived_form():
    rng = np.random.default_rng(11)
    for _ in range(20):
        p = PoschlTellerParams(rng.uniform(-0.4, 4), rng.uniform(0.5, 4), rng.uniform(0.1, 2), 1.0, int(rng.integers(2, 7)))
        P3 = generate_pt_polynomials(p, 3)[3]
        for x in rng.uniform(-5, 5, 4):
            ref = pt_closed_forms(p)[3](x)
            scale = sum(abs(c) * abs(x) ** k for k, c in enumerate(P3.coefficients))
            assert abs(P3(x) - ref) <= 1e-10 * scale


def test_printed_pt_P3_differs():
    """The printed cubic disagrees with the determinant; keep the derived one."""
    p = PoschlTellerParams(1.0, 2.0, 0.5, 1.0, 2)
    B, j = p.B, p.j
    printed_l2 = -(3 * B + 12 * j - 4)
    assert critical_polynomial(p).coefficients[2] != pytest.approx(printed_l2)
    assert critical_polynomial(p).coefficients[2] == pytest.approx(-(3 * B + 12 * j - 2))


def test_sextic_cli_example_constant():
    p = SexticParams(0.0, 1.0, 1.0, 1.0, 3)
    assert critical_polynomial(p).coefficients[0] == pytest.approx(20.25)


def test_ptanh_real_coefficients():
    p = PTAnharmonicParams(0.7, 1.1, 0.4, -0.3, 4)
    for P in generate_polynomials(p, 5):
        assert all(isinstance(c, float) for c in P.coefficients)


@pytest.mark.parametrize(
    "params",
    [
        PoschlTellerParams(1.2, 2.0, 0.6, 1.3, 4),
        SexticParams(0.3, -0.7, 1.2, 0.5, 4),
        PTAnharmonicParams(0.9, 1.0, 0.4, 0.25, 4),
    ],
)
def test_raw_recurrence_residual(params):
    rng = np.random.default_rng(5)
    polys = generate_polynomials(params, params.twoj + 1)
    top = params.twoj + 1 if isinstance(params, PTAnharmonicParams) else params.twoj
    for x in rng.uniform(-3, 3, 5):
        for m in range(top):
            assert raw_recurrence_residual(params, x, m, polys) < 1e-12
    # for three-term families the last row is the quantization condition itself
    if top == params.twoj:
        for r in np.roots(polys[-1].coefficients[::-1]):
            if abs(r.imag) < 1e-9:
                assert raw_recurrence_residual(params, r.real, params.twoj, polys) < 1e-10


def test_extended_precision_agrees():
    p = PoschlTellerParams(0.9, 2.3, 0.45, 1.0, 8)
    lo = critical_polynomial(p).as_floats()
    with mpmath.workdps(50):
        hi = critical_polynomial(p, "extended")
        assert isinstance(hi.coefficients[0], mpmath.mpf)
        assert hi.coefficients[-1] == 1
    assert np.allclose(lo, hi.as_floats(), rtol=1e-9)
    with pytest.raises(ParameterError):
        critical_polynomial(p, "quad")


@settings(max_examples=60, deadline=None)
@given(
    L=st.floats(-0.4, 5),
    A=st.floats(0.5, 5),
    q=st.floats(0.1, 2),
    twoj=st.integers(0, 6),
)
def test_monic_and_degree(L, A, q, twoj):
    polys = generate_pt_polynomials(PoschlTellerParams(L, A, q, 1.0, twoj), twoj + 1)
    for m, P in enumerate(polys):
        assert P.degree == m
        assert P.coefficients[-1] == 1.0
        assert all(math.isfinite(c) for c in P.coefficients)


def test_determinism_bit_identical():
    p = SexticParams(0.37, 0.81, 1.1, 0.29, 5)
    a = [P.coefficients for P in generate_polynomials(p, 6)]
    b = [P.coefficients for P in generate_polynomials(p, 6)]
    assert a == b
