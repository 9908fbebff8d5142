"""Singularity invariants, local indices and the nondegenerate bounds."""

import random

import pytest

from gsvkit.errors import (
    InfiniteDimensionError,
    NotInvariantError,
)
from gsvkit.indices import (
    CurveGerm,
    VectorFieldGerm,
    directional_derivative,
    greuel_tjurina,
    gsv_bounds_nondegenerate,
    gsv_from_rho,
    invariance_certificate,
    is_quasihomogeneous,
    local_gsv_curve,
    local_indices,
    milnor_curve,
    schwartz_curve,
    published_bound_table,
    nondegenerate_bound_constants,
)
from gsvkit.localring import IdealGens, quotient_dim, quotient_dim_macaulay
from gsvkit.poly import Polynomial, parse_polynomial

X3 = ("x1", "x2", "x3")
Y3 = ("y1", "y2", "y3")
XY = ("x", "y")


def P(text, variables=X3):
    return parse_polynomial(text, variables)


def germ(*texts, variables=X3):
    return CurveGerm(tuple(P(t, variables) for t in texts))


def field(*texts, variables=X3):
    return VectorFieldGerm(tuple(P(t, variables) for t in texts))


CUSP_GERM = ("x1 - x2^3", "x3^2 - x1")
CUSP_FIELD = ("6*x1", "2*x2", "3*x3")
CHART1_GERM_CHAIN_ORDER = ("y3^2 - y1", "y1^2 - y2^3")
CHART1_FIELD = ("-6*y1", "-4*y2", "-3*y3")


# ---------------------------------------------------------------------------
# Greuel/Tjurina number

def test_tau_chart0():
    assert greuel_tjurina(germ(*CUSP_GERM)) == 2


def test_tau_chart1():
    assert greuel_tjurina(germ("y1^2 - y2^3", "y3^2 - y1",
                               variables=Y3)) == 6


def test_tau_smooth_germ():
    assert greuel_tjurina(germ("x1", "x2")) == 0


def test_tau_nonisolated_raises():
    with pytest.raises(InfiniteDimensionError):
        greuel_tjurina(germ("x1^2", "x2^2"))


# ---------------------------------------------------------------------------
# invariance certificates

def test_certificate_diagonal():
    h = invariance_certificate(germ(*CUSP_GERM), field(*CUSP_FIELD))
    assert h.rows[0].unit == P("1")
    assert h.rows[0].cofactors == (P("6"), P("0"))
    assert h.rows[1].unit == P("1")
    assert h.rows[1].cofactors == (P("0"), P("6"))
    assert h.verify(germ(*CUSP_GERM), field(*CUSP_FIELD))


def test_certificate_radial_on_axis():
    h = invariance_certificate(germ("x2", "x3"), field("x1", "x2", "x3"))
    assert h.rows[0].cofactors == (P("1"), P("0"))
    assert h.rows[1].cofactors == (P("0"), P("1"))


def test_certificate_not_invariant():
    X2 = ("x1", "x2")
    with pytest.raises(NotInvariantError) as exc:
        invariance_certificate(
            CurveGerm((P("x2", X2),)),
            VectorFieldGerm((P("0", X2), P("x2 + x1^2", X2))))
    assert exc.value.row == 0


def test_directional_derivative():
    got = directional_derivative(P("x1 - x2^3"), field(*CUSP_FIELD))
    assert got == P("6*x1 - 6*x2^3")


# ---------------------------------------------------------------------------
# local GSV

def test_gsv_chart0():
    report = local_gsv_curve(germ(*CUSP_GERM), field(*CUSP_FIELD))
    assert (report.tau, report.dim_vf, report.gsv) == (2, 1, -1)


def test_gsv_chart1():
    report = local_gsv_curve(
        germ("y1^2 - y2^3", "y3^2 - y1", variables=Y3),
        field(*CHART1_FIELD, variables=Y3))
    assert (report.tau, report.dim_vf, report.gsv) == (6, 1, -5)


def test_gsv_smooth_radial():
    report = local_gsv_curve(germ("x2", "x3"), field("x1", "x2", "x3"))
    assert report.gsv == 1
    assert report.tau == 0


def test_gsv_requires_invariance():
    with pytest.raises(NotInvariantError):
        local_gsv_curve(germ("x2", "x3"), field("x1", "x1", "x3"))


def test_gsv_requires_curve_codimension():
    with pytest.raises(ValueError):
        local_gsv_curve(germ("x1"), field("x1", "x2", "x3"))


# ---------------------------------------------------------------------------
# Milnor numbers via the chain

def test_milnor_chart0():
    assert milnor_curve(germ(*CUSP_GERM)) == 2


def test_milnor_chart1_needs_generator_order():
    # natural order fails at step 1 (the first equation alone is not an
    # isolated hypersurface germ); the error names the step
    with pytest.raises(InfiniteDimensionError) as exc:
        milnor_curve(germ("y1^2 - y2^3", "y3^2 - y1", variables=Y3))
    assert exc.value.step == 1
    # the permuted order goes through
    assert milnor_curve(germ(*CHART1_GERM_CHAIN_ORDER, variables=Y3)) == 6


def test_milnor_smooth():
    assert milnor_curve(germ("x2", "x3")) == 0


def test_milnor_plane_curve_oracle_cusps():
    # independent plane oracle: mu(x^p - y^q) = (p-1)(q-1), recovered here
    # through the Jacobian-ideal dimension in two variables
    for p, q in [(2, 3), (4, 3), (2, 5)]:
        f = parse_polynomial(f"x^{p} - y^{q}", XY)
        jac = IdealGens((f.partial_derivative(0), f.partial_derivative(1)))
        assert quotient_dim(jac) == (p - 1) * (q - 1)
        assert quotient_dim_macaulay(jac) == (p - 1) * (q - 1)
        assert milnor_curve(CurveGerm((f,))) == (p - 1) * (q - 1)


# ---------------------------------------------------------------------------
# Schwartz index and quasi-homogeneity

def test_schwartz_worked_example_points():
    assert schwartz_curve(germ(*CUSP_GERM), field(*CUSP_FIELD)) == 1
    assert schwartz_curve(germ(*CHART1_GERM_CHAIN_ORDER, variables=Y3),
                          field(*CHART1_FIELD, variables=Y3)) == 1


def test_schwartz_smooth_radial():
    assert schwartz_curve(germ("x2", "x3"), field("x1", "x2", "x3")) == 1


def test_quasihomogeneous_worked_example():
    assert is_quasihomogeneous(germ(*CUSP_GERM))
    assert is_quasihomogeneous(germ(*CHART1_GERM_CHAIN_ORDER, variables=Y3))
    assert is_quasihomogeneous(germ("x2", "x3"))


def test_non_quasihomogeneous_plane_germ():
    # x^4 + y^5 + x^2*y^3 has mu = 12 and tau = 11 (verified against the
    # Macaulay oracle); its Hamiltonian field is always tangent
    f = parse_polynomial("x^4 + y^5 + x^2*y^3", XY)
    plane_germ = CurveGerm((f,))
    assert milnor_curve(plane_germ) == 12
    assert greuel_tjurina(plane_germ) == 11
    assert not is_quasihomogeneous(plane_germ)
    hamiltonian = VectorFieldGerm((-f.partial_derivative(1),
                                   f.partial_derivative(0)))
    report = local_indices(plane_germ, hamiltonian)
    assert report.gsv == 0
    assert report.schwartz == 12
    assert report.schwartz >= 2
    assert not report.quasihomogeneous
    assert not report.anomalies


def test_full_report_invariants():
    report = local_indices(germ(*CUSP_GERM), field(*CUSP_FIELD))
    assert report.gsv == -report.tau + report.dim_vf
    assert report.schwartz == report.gsv + report.milnor
    assert report.milnor >= report.tau
    assert report.schwartz > 0
    assert not report.anomalies


# ---------------------------------------------------------------------------
# bound constants

def test_constants_curve_row():
    c = nondegenerate_bound_constants(3, 2)
    assert (c.eps_r, c.alpha, c.binom) == (0, 1, 1)


def test_constants_surface_row_even():
    c = nondegenerate_bound_constants(6, 2)
    assert (c.eps_r, c.alpha, c.binom) == (2, -2, 4)


def test_constants_dimension_two_row():
    c = nondegenerate_bound_constants(5, 3)
    assert c.eps_r == 1
    assert c.alpha == -2


def test_constants_range_validation():
    with pytest.raises(ValueError):
        nondegenerate_bound_constants(3, 3)
    with pytest.raises(ValueError):
        nondegenerate_bound_constants(1, 1)


def test_beta_as_stated_differs_from_proved_endpoint():
    # the published closed form for the second constant carries the
    # opposite sign of the proved endpoint whenever the rho range is
    # nontrivial
    for m, r in [(3, 2), (4, 2), (6, 2), (5, 3)]:
        c = nondegenerate_bound_constants(m, r)
        assert c.beta_as_stated == c.alpha + (-1) ** (m - r - 1) * c.binom
        if c.binom:
            assert c.beta_as_stated != c.eps_r


# ---------------------------------------------------------------------------
# bounds and the rho closed form

def test_bounds_contain_worked_example_points():
    assert gsv_bounds_nondegenerate(3, 2, 2) == (-2, -1)
    assert gsv_bounds_nondegenerate(3, 2, 6) == (-6, -5)
    # the computed indices -1 and -5 sit at the upper ends
    assert -2 <= -1 <= -1
    assert -6 <= -5 <= -5


def test_bounds_width_is_rho_range():
    for m, r in [(3, 2), (4, 2), (5, 2), (5, 3), (6, 4)]:
        lo, hi = gsv_bounds_nondegenerate(m, r, 0)
        assert hi - lo == nondegenerate_bound_constants(m, r).binom


def test_rho_closed_form_worked_example():
    # dim O/<v, f> = 1 at the first point pins rho = 1 there, and the
    # formula returns the observed index -1 at the interval's upper end
    gsv, positive = gsv_from_rho(3, 2, 2, 1)
    assert gsv == -1
    assert not positive
    gsv, _ = gsv_from_rho(3, 2, 6, 1)
    assert gsv == -5


def test_rho_even_parity_trivial():
    for m, r in [(4, 2), (6, 2), (5, 1)]:
        c = nondegenerate_bound_constants(m, r)
        assert (m - r) % 2 == 0
        gsv, _ = gsv_from_rho(m, r, 0, 0)
        assert gsv == c.eps_r


def test_rho_even_parity_substitution():
    gsv, positive = gsv_from_rho(4, 2, 3, 2)
    assert gsv == 1 + 3 - 2 == 2
    assert positive == (3 + 1 > 2)


def test_rho_out_of_range():
    with pytest.raises(ValueError):
        gsv_from_rho(3, 2, 2, 2)


def test_rho_endpoints_match_bounds_parity_order():
    for m in range(3, 9):
        for r in range(1, m):
            lo, hi = gsv_bounds_nondegenerate(m, r, 3)
            c = nondegenerate_bound_constants(m, r)
            at_zero, _ = gsv_from_rho(m, r, 3, 0)
            at_max, _ = gsv_from_rho(m, r, 3, c.rho_range_max)
            if (m - r) % 2 == 0:
                assert (at_zero, at_max) == (hi, lo)
            else:
                assert (at_zero, at_max) == (lo, hi)


# ---------------------------------------------------------------------------
# the published bound table

def test_table_rows_match_formula():
    for m in range(3, 9):
        for tau in (0, 1, 2, 5):
            # row "1": curves, r = m-1
            assert published_bound_table(m, "1", tau) \
                == gsv_bounds_nondegenerate(m, m - 1, tau)
            # row "2": surfaces, r = m-2
            assert published_bound_table(m, "2", tau) \
                == gsv_bounds_nondegenerate(m, m - 2, tau)
            # row "m-2": codimension 2
            assert published_bound_table(m, "m-2", tau) \
                == gsv_bounds_nondegenerate(m, 2, tau)


def test_table_row_top_dimension_diverges():
    # the published row for dim V = m-1 contradicts the proved bounds;
    # the formula values are the authoritative ones
    for m in range(3, 9):
        for tau in (0, 2):
            published = published_bound_table(m, "m-1", tau)
            proved = gsv_bounds_nondegenerate(m, 1, tau)
            assert published != proved


# ---------------------------------------------------------------------------
# randomized nondegenerate identity

def test_nondegenerate_axis_curves_gsv_is_one_minus_tau():
    rng = random.Random(77)
    for _ in range(12):
        m = rng.choice([2, 3, 4])
        variables = tuple(f"x{i}" for i in range(1, m + 1))
        # curve = the x_m axis: equations x_1, ..., x_{m-1}
        equations = tuple(Polynomial.variable(variables, i)
                          for i in range(m - 1))
        # invertible block C for rows 1..m-1 (columns 1..m-1 only), any
        # nonzero coefficient for x_m in the last row
        while True:
            block = [[rng.randint(-3, 3) for _ in range(m - 1)]
                     for _ in range(m - 1)]
            det = _det_int(block)
            if det:
                break
        components = []
        for row in block:
            p = Polynomial.zero(variables)
            for j, c in enumerate(row):
                p = p + c * Polynomial.variable(variables, j)
            if rng.random() < 0.5 and m >= 2:
                # quadratic noise inside the curve ideal keeps invariance
                j = rng.randrange(m - 1)
                noise = Polynomial.variable(variables, j) \
                    * Polynomial.variable(variables, rng.randrange(m))
                p = p + rng.randint(-2, 2) * noise
            components.append(p)
        last = rng.choice([-2, -1, 1, 2]) * Polynomial.variable(variables, m - 1)
        for j in range(m - 1):
            last = last + rng.randint(-2, 2) * Polynomial.variable(variables, j)
        components.append(last)
        curve = CurveGerm(equations)
        report = local_gsv_curve(curve, VectorFieldGerm(tuple(components)))
        tau = report.tau
        assert tau == 0
        assert report.gsv == 1 - tau
        assert report.dim_v == 1
        lo, hi = gsv_bounds_nondegenerate(m, m - 1, tau)
        assert lo <= report.gsv <= hi


def _det_int(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * _det_int(minor)
    return total
