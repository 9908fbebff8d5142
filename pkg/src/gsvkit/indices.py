"""Local singularity invariants and foliation indices along curve germs.

All germs live at the origin of C^m with exact rational coefficients.
The central quantities for a complete-intersection curve germ C = {f = 0}
invariant under a vector field v are:

  tau      dim O/<f, maximal Jacobian minors>   (Greuel/Tjurina number)
  mu       Milnor number, via the Le-Greuel chain in the given generator order
  gsv      -tau + dim O/<v, f>
  schwartz gsv + mu

plus the nondegenerate-singularity apparatus: the integer constants
eps_r and alpha, the two-sided bound interval for the index, and the
parity-split closed form in the auxiliary integer rho.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import (
    InfiniteDimensionError,
    InternalCheckError,
    NotInvariantError,
    NotMemberError,
)
from .localring import (
    INFINITE,
    IdealGens,
    membership_with_cofactors,
    quotient_dim,
)
from .poly import Polynomial, jacobian_minors


@dataclass(frozen=True)
class CurveGerm:
    """Complete-intersection germ at the origin: r equations in m variables."""

    equations: tuple[Polynomial, ...]

    def __init__(self, equations):
        equations = tuple(equations)
        if not equations:
            raise ValueError("need at least one equation")
        variables = equations[0].variables
        for f in equations[1:]:
            if f.variables != variables:
                raise ValueError("equations use different variable lists")
        if any(f.is_zero() for f in equations):
            raise ValueError("zero equation in curve germ")
        m, r = len(variables), len(equations)
        if not 1 <= r <= m - 1:
            raise ValueError(f"need 1 <= r <= m-1, got r={r}, m={m}")
        if any(f.constant_term for f in equations):
            raise ValueError("germ equations must vanish at the origin")
        object.__setattr__(self, "equations", equations)

    @property
    def variables(self):
        return self.equations[0].variables

    @property
    def m(self) -> int:
        return len(self.variables)

    @property
    def r(self) -> int:
        return len(self.equations)


@dataclass(frozen=True)
class VectorFieldGerm:
    """Vector field germ at the origin: one component per variable."""

    components: tuple[Polynomial, ...]

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("need at least one component")
        variables = components[0].variables
        for a in components[1:]:
            if a.variables != variables:
                raise ValueError("components use different variable lists")
        if len(components) != len(variables):
            raise ValueError("need exactly one component per variable")
        object.__setattr__(self, "components", components)

    @property
    def variables(self):
        return self.components[0].variables


def directional_derivative(f: Polynomial, v: VectorFieldGerm) -> Polynomial:
    """df(v) = sum_i (df/dx_i) * v_i."""
    if f.variables != v.variables:
        raise ValueError("germ and field use different variable lists")
    out = Polynomial.zero(f.variables)
    for i, comp in enumerate(v.components):
        if comp.is_zero():
            continue
        out = out + f.partial_derivative(i) * comp
    return out


@dataclass(frozen=True)
class MembershipCertificate:
    """unit * target = sum(cofactors_i * generators_i), exactly."""

    unit: Polynomial
    cofactors: tuple[Polynomial, ...]


@dataclass(frozen=True)
class HMatrix:
    """Row-wise certificates that df_i(v) lies in <f_1, ..., f_r>."""

    rows: tuple[MembershipCertificate, ...]

    def verify(self, germ: CurveGerm, v: VectorFieldGerm) -> bool:
        for i, row in enumerate(self.rows):
            acc = row.unit * directional_derivative(germ.equations[i], v)
            for cof, g in zip(row.cofactors, germ.equations):
                acc = acc - cof * g
            if not acc.is_zero() or not row.unit.constant_term:
                return False
        return True


def invariance_certificate(germ: CurveGerm, v: VectorFieldGerm) -> HMatrix:
    """Certify tangency of v to the germ, or raise NotInvariantError.

    Row i certifies unit_i * df_i(v) = sum_j h_ij * f_j; any exactly
    verified certificate is accepted (the matrix is not unique).
    """
    if germ.variables != v.variables:
        raise ValueError("germ and field use different variable lists")
    gens = IdealGens(germ.equations)
    rows = []
    for i, f in enumerate(germ.equations):
        target = directional_derivative(f, v)
        try:
            unit, cofactors = membership_with_cofactors(target, gens)
        except NotMemberError:
            raise NotInvariantError(i) from None
        rows.append(MembershipCertificate(unit, cofactors))
    matrix = HMatrix(tuple(rows))
    if not matrix.verify(germ, v):
        raise InternalCheckError("invariance certificate failed to re-expand")
    return matrix


def greuel_tjurina(germ: CurveGerm) -> int:
    """dim O/<f, all maximal minors of the Jacobian of f>."""
    gens = list(germ.equations) + jacobian_minors(list(germ.equations))
    dim = quotient_dim(IdealGens(tuple(g for g in gens if not g.is_zero())))
    if dim is INFINITE:
        raise InfiniteDimensionError(
            "the singularity is not isolated: <f, minors> is not "
            "zero-dimensional")
    return dim


@dataclass
class LocalIndexReport:
    """Per-point record of the local invariants and their building blocks.

    ``milnor`` and ``schwartz`` stay None until the Milnor-number chain has
    been run (it is sensitive to the equation order, unlike the others).
    """

    tau: int
    dim_vf: int
    dim_v: int
    gsv: int
    milnor: int | None = None
    schwartz: int | None = None
    quasihomogeneous: bool | None = None
    anomalies: list[str] = field(default_factory=list)

    def check(self):
        if self.gsv != -self.tau + self.dim_vf:
            raise InternalCheckError("gsv != -tau + dim O/<v,f>")
        if self.milnor is not None:
            if self.milnor < self.tau:
                raise InternalCheckError("milnor < tau")
            if self.schwartz != self.gsv + self.milnor:
                raise InternalCheckError("schwartz != gsv + milnor")


def local_gsv_curve(germ: CurveGerm, v: VectorFieldGerm) -> LocalIndexReport:
    """GSV index of the field along the curve germ at the origin.

    Requires r = m-1 and an invariant germ; the index is
    -tau + dim O/<v, f> and both intermediate dimensions are reported.
    """
    if germ.r != germ.m - 1:
        raise ValueError("local GSV along a curve needs r = m-1 equations")
    invariance_certificate(germ, v)
    tau = greuel_tjurina(germ)
    nonzero_components = tuple(a for a in v.components if not a.is_zero())
    if not nonzero_components:
        raise InfiniteDimensionError("the vector field is identically zero")
    dim_v = quotient_dim(IdealGens(nonzero_components))
    if dim_v is INFINITE:
        raise InfiniteDimensionError(
            "the vector field does not have an isolated zero: <v> is not "
            "zero-dimensional")
    dim_vf = quotient_dim(IdealGens(nonzero_components + germ.equations))
    if dim_vf is INFINITE:
        raise InfiniteDimensionError("<v, f> is not zero-dimensional")
    report = LocalIndexReport(tau=tau, dim_vf=dim_vf, dim_v=dim_v,
                              gsv=-tau + dim_vf)
    report.check()
    return report


def milnor_curve(germ: CurveGerm) -> int:
    """Milnor number of an ICIS curve germ by the Le-Greuel chain.

    Uses the equations in the order given: step k needs
    dim O/<f_1..f_{k-1}, maximal minors of Jac(f_1..f_k)> finite.  On a
    genericity failure the error names the failing step (1-based) so the
    caller can permute the generators; the chain is never permuted
    silently.
    """
    if germ.r != germ.m - 1:
        raise ValueError("the Milnor chain here is for curve germs (r = m-1)")
    mu = 0
    eqs = list(germ.equations)
    for k in range(1, len(eqs) + 1):
        gens = eqs[:k - 1] + jacobian_minors(eqs[:k])
        gens = tuple(g for g in gens if not g.is_zero())
        if not gens:
            raise InfiniteDimensionError(
                f"Le-Greuel chain step {k}: all minors vanish identically",
                step=k)
        dim = quotient_dim(IdealGens(gens))
        if dim is INFINITE:
            raise InfiniteDimensionError(
                f"Le-Greuel chain step {k} is not zero-dimensional: "
                f"(f_1..f_{k}) is not an ICIS in this generator order",
                step=k)
        mu = dim - mu
    tau = greuel_tjurina(germ)
    if mu < tau:
        raise InternalCheckError(
            f"computed Milnor number {mu} below Tjurina number {tau}")
    return mu


def is_quasihomogeneous(germ: CurveGerm) -> bool:
    """mu == tau test for the germ (curve case)."""
    return milnor_curve(germ) == greuel_tjurina(germ)


def schwartz_curve(germ: CurveGerm, v: VectorFieldGerm) -> int:
    """Schwartz index: gsv + mu.  Positive on every invariant curve germ."""
    return local_indices(germ, v).schwartz


def local_indices(germ: CurveGerm, v: VectorFieldGerm) -> LocalIndexReport:
    """Full per-point report: tau, dims, gsv, milnor, schwartz.

    A non-positive Schwartz index is flagged as an anomaly in the report
    rather than raised: it would falsify the run's assumptions.
    """
    report = local_gsv_curve(germ, v)
    mu = milnor_curve(germ)
    report.milnor = mu
    report.schwartz = report.gsv + mu
    report.quasihomogeneous = (mu == report.tau)
    if report.schwartz <= 0:
        report.anomalies.append(
            f"Schwartz index {report.schwartz} is not positive; this "
            "contradicts the positivity theorem for invariant curve germs")
    if not report.quasihomogeneous and report.schwartz < 2:
        report.anomalies.append(
            f"Schwartz index {report.schwartz} < 2 at a germ that is not "
            "quasi-homogeneous")
    report.check()
    return report


# ---------------------------------------------------------------------------
# nondegenerate bounds

@dataclass(frozen=True)
class BoundConstants:
    """Integer constants controlling the nondegenerate GSV bounds."""

    eps_r: int
    alpha: int
    binom: int
    rho_range_max: int

    @property
    def beta_as_stated(self) -> int:
        """The published closed form alpha + (-1)^(m-r-1) * binom.

        It disagrees with the bound actually proved (which is eps_r);
        surfaced for reports.  Reconstructing needs the parity, so this is
        stored at construction time.
        """
        return self._beta

    _beta: int = 0


def nondegenerate_bound_constants(m: int, r: int) -> BoundConstants:
    """eps_r, alpha and the rho range for ambient dimension m, codimension r.

    eps_r = sum_{j=0}^{m-r-2} (-1)^j C(r-1+j, j)   (empty sum = 0 at r = m-1)
    alpha = sum_{j=0}^{m-r-1} (-1)^j C(r-1+j, j)
    binom = C(m-2, m-r-1)
    """
    if m < 2 or not 1 <= r <= m - 1:
        raise ValueError(f"need m >= 2 and 1 <= r <= m-1, got m={m}, r={r}")
    eps = sum((-1) ** j * comb(r - 1 + j, j) for j in range(m - r - 1))
    alpha = sum((-1) ** j * comb(r - 1 + j, j) for j in range(m - r))
    binom = comb(m - 2, m - r - 1)
    beta = alpha + (-1) ** (m - r - 1) * binom
    constants = BoundConstants(eps_r=eps, alpha=alpha, binom=binom,
                               rho_range_max=binom, _beta=beta)
    if r < m - 1 and alpha - eps != (-1) ** (m - r - 1) * binom:
        raise InternalCheckError("alpha - eps_r parity identity failed")
    return constants


def gsv_bounds_nondegenerate(m: int, r: int, tau: int) -> tuple[int, int]:
    """Sharp integer interval [lo, hi] for the local GSV index at a
    nondegenerate singular point of the foliation on a codimension-r germ
    with Tjurina number tau.

    dim V = m - r even:  [alpha + tau, eps_r + tau]
    dim V = m - r odd:   [eps_r - tau, alpha - tau]
    """
    if tau < 0:
        raise ValueError("tau must be non-negative")
    c = nondegenerate_bound_constants(m, r)
    if (m - r) % 2 == 0:
        lo, hi = c.alpha + tau, c.eps_r + tau
    else:
        lo, hi = c.eps_r - tau, c.alpha - tau
    if lo > hi:
        raise InternalCheckError("bound interval inverted")
    return lo, hi


def gsv_from_rho(m: int, r: int, tau: int, rho: int) -> tuple[int, bool]:
    """Closed form of the nondegenerate local GSV index in the integer rho
    (the number of rows of the final small-Gobelin matrix whose row ideal
    sits inside <v>), plus the positivity predicate.

    dim V even:  gsv = eps_r + tau - rho,  gsv > 0  iff  tau + eps_r > rho
    dim V odd:   gsv = eps_r - tau + rho,  gsv > 0  iff  tau - eps_r < rho

    rho for general codimension is an input, never computed here.
    """
    if tau < 0:
        raise ValueError("tau must be non-negative")
    c = nondegenerate_bound_constants(m, r)
    if not 0 <= rho <= c.rho_range_max:
        raise ValueError(f"rho must lie in [0, {c.rho_range_max}], got {rho}")
    if (m - r) % 2 == 0:
        gsv = c.eps_r + tau - rho
        positive = tau + c.eps_r > rho
    else:
        gsv = c.eps_r - tau + rho
        positive = tau - c.eps_r < rho
    if positive != (gsv > 0):
        raise InternalCheckError("positivity predicate mismatch")
    return gsv, positive


def published_bound_table(m: int, row: str, tau: int) -> tuple[int, int]:
    """The bound table as published, keyed by its row labels
    "1", "2", "m-2", "m-1" (values of dim V = m - r).

    The "m-1" row of the published table disagrees with the bounds the
    proof establishes (see gsv_bounds_nondegenerate); it is kept here
    verbatim so the discrepancy can be asserted and logged.
    """
    even = m % 2 == 0
    if row == "m-1":
        return (m - 1 + tau, m + tau) if even else (m - 2 - tau, m - 1 - tau)
    if row == "m-2":
        if even:
            return (-(m - 2) // 2 + tau, (m - 2) // 2 + tau)
        return (-(m - 1) // 2 + 1 - tau, (m - 1) // 2 - tau)
    if row == "2":
        return (-(m - 3) + tau, 1 + tau)
    if row == "1":
        return (-tau, 1 - tau)
    raise ValueError(f"no published row labelled {row!r}")
