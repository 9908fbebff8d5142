"""Command-line front end.

    gsvkit <mode> --job FILE [--oracle] [--quiet]

The job file is a flat key/value text format with INI-like sections
([job], [foliation], [curve], [points], [parameters]); polynomials are
quoted strings in the library's polynomial grammar.  The report is JSON
on stdout (byte-deterministic for identical inputs, apart from the
isolated "timing" key) and a human-readable table on stderr unless
--quiet.

Exit codes: 0 success with consistent results, 1 input error, 2
mathematical inconsistency (any anomaly, e.g. a total-index mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .cherncalc import (
    ChernVector,
    GradedRing,
    chern_difference_expansion,
    chern_difference_inversion,
    chern_difference_recursion,
    total_gsv_integral_projective,
)
from .errors import GsvkitError, PolynomialSyntaxError, UnknownVariableError
from .indices import (
    CurveGerm,
    gsv_bounds_nondegenerate,
    gsv_from_rho,
    milnor_curve,
    published_bound_table,
    nondegenerate_bound_constants,
)
from .localring import IdealGens, quotient_dim_macaulay
from .poly import Polynomial, jacobian_minors, parse_polynomial
from .projective import (
    PointOnChart,
    ProjectiveCI,
    ProjectiveFoliation,
    closed_form_gsv,
    dehomogenize_ci,
    euler_characteristic_curve,
    germ_at_point,
    poincare_degree_bound,
    projective_variables,
    soares_plane_bound,
    milnor_degree_bound,
    total_gsv_certified,
    total_indices_certified,
)

MODES = ("local-gsv", "total-gsv", "bounds", "poincare", "chern-check",
         "tjurina", "milnor", "schwartz", "euler")

BIGINT_THRESHOLD = 2 ** 53


class JobFileError(GsvkitError):
    """Invalid job file; the message names the offending field or offset."""


# ---------------------------------------------------------------------------
# job-file parsing

@dataclass(frozen=True)
class RawValue:
    text: str
    offset: int  # byte offset of the value within the file


def parse_job_text(text: str) -> dict[str, dict[str, list[RawValue]]]:
    sections: dict[str, dict[str, list[RawValue]]] = {}
    current = None
    offset = 0
    for line in text.splitlines(keepends=True):
        raw = line.rstrip("\r\n")
        stripped = raw.strip()
        if not stripped or stripped.startswith("#") or stripped.startswith(";"):
            offset += len(line)
            continue
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise JobFileError(
                    f"unterminated section header at byte offset {offset}")
            current = stripped[1:-1].strip()
            sections.setdefault(current, {})
            offset += len(line)
            continue
        if "=" not in raw:
            raise JobFileError(
                f"expected 'key = value' at byte offset {offset}: {raw!r}")
        if current is None:
            raise JobFileError(
                f"key/value outside any [section] at byte offset {offset}")
        key, value = raw.split("=", 1)
        value_offset = offset + len(key) + 1 + (len(value) - len(value.lstrip()))
        sections[current].setdefault(key.strip(), []).append(
            RawValue(value.strip(), value_offset))
        offset += len(line)
    return sections


def _single(sections, section, key, required=True) -> RawValue | None:
    values = sections.get(section, {}).get(key, [])
    if not values:
        if required:
            raise JobFileError(f"[{section}] {key}: required field is missing")
        return None
    if len(values) > 1:
        raise JobFileError(f"[{section}] {key}: given more than once")
    return values[0]


def _parse_int(raw: RawValue, field: str) -> int:
    try:
        return int(raw.text)
    except ValueError:
        raise JobFileError(
            f"{field}: expected an integer, got {raw.text!r}") from None


def _parse_int_list(raw: RawValue, field: str) -> list[int]:
    out = []
    for piece in raw.text.split(","):
        piece = piece.strip()
        try:
            out.append(int(piece))
        except ValueError:
            raise JobFileError(
                f"{field}: expected a comma-separated integer list, "
                f"got {piece!r}") from None
    return out


def _parse_quoted_list(raw: RawValue, field: str) -> list[tuple[str, int]]:
    """Comma-separated quoted strings; returns (content, file offset) pairs."""
    out = []
    text = raw.text
    i, n = 0, len(text)
    while True:
        while i < n and text[i].isspace():
            i += 1
        if i >= n or text[i] != '"':
            raise JobFileError(
                f"{field}: expected a double-quoted string at byte offset "
                f"{raw.offset + i}")
        j = text.find('"', i + 1)
        if j < 0:
            raise JobFileError(
                f"{field}: unterminated string at byte offset {raw.offset + i}")
        out.append((text[i + 1:j], raw.offset + i + 1))
        i = j + 1
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            return out
        if text[i] != ",":
            raise JobFileError(
                f"{field}: expected ',' between strings at byte offset "
                f"{raw.offset + i}")
        i += 1


def _parse_rational(piece: str, field: str) -> Fraction:
    try:
        return Fraction(piece.strip())
    except (ValueError, ZeroDivisionError):
        raise JobFileError(
            f"{field}: expected a rational number p or p/q, "
            f"got {piece.strip()!r}") from None


def _parse_point(raw: RawValue, field: str, m: int) -> PointOnChart:
    if ":" not in raw.text:
        raise JobFileError(f"{field}: expected 'chart : a1, ..., a{m}'")
    chart_text, coords_text = raw.text.split(":", 1)
    try:
        chart = int(chart_text.strip())
    except ValueError:
        raise JobFileError(
            f"{field}: chart must be an integer, got {chart_text.strip()!r}"
        ) from None
    if not 0 <= chart <= m:
        raise JobFileError(f"{field}: chart must lie in 0..{m}")
    coords = [_parse_rational(piece, field)
              for piece in coords_text.split(",")]
    if len(coords) != m:
        raise JobFileError(
            f"{field}: expected {m} affine coordinates, got {len(coords)}")
    return PointOnChart(chart, coords)


def _parse_polynomials(raw: RawValue, field: str, variables) -> list[Polynomial]:
    polys = []
    for content, content_offset in _parse_quoted_list(raw, field):
        try:
            polys.append(parse_polynomial(content, variables))
        except (PolynomialSyntaxError, UnknownVariableError) as exc:
            in_string = getattr(exc, "offset", 0)
            raise JobFileError(
                f"{field}: {exc} -- file byte offset "
                f"{content_offset + in_string}") from None
    return polys


_KNOWN_KEYS = {
    "job": {"mode", "ambient"},
    "foliation": {"degree", "components"},
    "curve": {"equations", "multidegree", "order"},
    "points": {"point"},
    "parameters": {"r", "tau", "rho", "milnors", "k", "degree"},
}


@dataclass
class JobSpec:
    mode: str
    ambient: int | None
    foliation: ProjectiveFoliation | None
    foliation_degree: int | None
    curve: ProjectiveCI | None
    milnor_order: tuple[int, ...] | None
    points: list[PointOnChart]
    parameters: dict


def load_job(text: str) -> JobSpec:
    sections = parse_job_text(text)
    for section, keys in sections.items():
        known = _KNOWN_KEYS.get(section)
        if known is None:
            raise JobFileError(f"unknown section [{section}]")
        for key in keys:
            if key not in known:
                raise JobFileError(f"[{section}] {key}: unknown key")

    mode_raw = _single(sections, "job", "mode")
    mode = mode_raw.text
    if mode not in MODES:
        raise JobFileError(
            f"[job] mode: unknown mode {mode!r}; expected one of "
            + ", ".join(MODES))
    ambient_raw = _single(sections, "job", "ambient", required=False)
    ambient = _parse_int(ambient_raw, "[job] ambient") if ambient_raw else None

    foliation = None
    foliation_degree = None
    if "foliation" in sections:
        degree_raw = _single(sections, "foliation", "degree", required=False)
        if degree_raw is not None:
            foliation_degree = _parse_int(degree_raw, "[foliation] degree")
        if "components" in sections["foliation"]:
            if ambient is None:
                raise JobFileError("[job] ambient: required with a foliation")
            if foliation_degree is None:
                raise JobFileError("[foliation] degree: required field is "
                                   "missing")
            comps = _parse_polynomials(
                _single(sections, "foliation", "components"),
                "[foliation] components", projective_variables(ambient))
            try:
                foliation = ProjectiveFoliation(ambient, foliation_degree,
                                                comps)
            except ValueError as exc:
                raise JobFileError(f"[foliation] components: {exc}") from None

    curve = None
    milnor_order = None
    if "curve" in sections and "equations" in sections["curve"]:
        if ambient is None:
            raise JobFileError("[job] ambient: required with a curve")
        eqs = _parse_polynomials(
            _single(sections, "curve", "equations"),
            "[curve] equations", projective_variables(ambient))
        multi_raw = _single(sections, "curve", "multidegree", required=False)
        if multi_raw is not None:
            multi = _parse_int_list(multi_raw, "[curve] multidegree")
        else:
            multi = [f.degree() for f in eqs]
        try:
            curve = ProjectiveCI(ambient, eqs, multi)
        except ValueError as exc:
            raise JobFileError(f"[curve] equations: {exc}") from None
        order_raw = _single(sections, "curve", "order", required=False)
        if order_raw is not None:
            order = _parse_int_list(order_raw, "[curve] order")
            if sorted(order) != list(range(1, len(eqs) + 1)):
                raise JobFileError(
                    "[curve] order: must be a permutation of 1.."
                    + str(len(eqs)))
            milnor_order = tuple(i - 1 for i in order)

    points = []
    if "points" in sections:
        if ambient is None:
            raise JobFileError("[job] ambient: required with points")
        for raw in sections["points"].get("point", []):
            points.append(_parse_point(raw, "[points] point", ambient))

    parameters = {}
    if "parameters" in sections:
        for key in ("r", "tau", "rho", "k", "degree"):
            raw = _single(sections, "parameters", key, required=False)
            if raw is not None:
                parameters[key] = _parse_int(raw, f"[parameters] {key}")
        raw = _single(sections, "parameters", "milnors", required=False)
        if raw is not None:
            parameters["milnors"] = _parse_int_list(raw, "[parameters] milnors")

    return JobSpec(mode=mode, ambient=ambient, foliation=foliation,
                   foliation_degree=foliation_degree, curve=curve,
                   milnor_order=milnor_order, points=points,
                   parameters=parameters)


# ---------------------------------------------------------------------------
# mode runners

def _need(condition, message):
    if not condition:
        raise JobFileError(message)


def _point_echo(point: PointOnChart) -> dict:
    return {"chart": point.chart, "coords": [str(c) for c in point.coords]}


def _echo_inputs(job: JobSpec) -> dict:
    echo: dict = {"mode": job.mode}
    if job.ambient is not None:
        echo["ambient"] = job.ambient
    if job.foliation is not None:
        echo["foliation"] = {
            "degree": job.foliation.d,
            "components": [str(a) for a in job.foliation.components],
        }
    elif job.foliation_degree is not None:
        echo["foliation"] = {"degree": job.foliation_degree}
    if job.curve is not None:
        echo["curve"] = {
            "equations": [str(f) for f in job.curve.equations],
            "multidegree": list(job.curve.multidegree),
        }
        if job.milnor_order is not None:
            echo["curve"]["order"] = [i + 1 for i in job.milnor_order]
    if job.points:
        echo["points"] = [_point_echo(p) for p in job.points]
    if job.parameters:
        echo["parameters"] = {k: v for k, v in sorted(job.parameters.items())}
    return echo


def _local_report_dict(point: PointOnChart, report) -> dict:
    out = {"point": _point_echo(point), "tau": report.tau,
           "dim_v": report.dim_v, "dim_vf": report.dim_vf, "gsv": report.gsv}
    if report.milnor is not None:
        out["milnor"] = report.milnor
        out["schwartz"] = report.schwartz
        out["quasihomogeneous"] = report.quasihomogeneous
    return out


def _curve_germ_at(job: JobSpec, point: PointOnChart) -> CurveGerm:
    affine = dehomogenize_ci(job.curve, point.chart)
    for i, f in enumerate(affine):
        if f.evaluate(point.coords):
            raise JobFileError(
                f"[points] point: equation {i + 1} does not vanish at "
                f"chart {point.chart} point {[str(c) for c in point.coords]}")
    germ = CurveGerm(tuple(f.translate(point.coords) for f in affine))
    if job.milnor_order is not None:
        germ = CurveGerm(tuple(germ.equations[i] for i in job.milnor_order))
    return germ


def _oracle_dims_for_point(job: JobSpec, point: PointOnChart,
                           want_field: bool) -> dict:
    """Recompute the point's quotient dimensions with the Macaulay oracle."""
    out = {}
    germ = _curve_germ_at(job, point)
    eqs = list(germ.equations)
    tau_gens = tuple(g for g in eqs + jacobian_minors(eqs) if not g.is_zero())
    out["tau"] = quotient_dim_macaulay(IdealGens(tau_gens))
    if want_field:
        _, field = germ_at_point(job.foliation, job.curve, point)
        comps = tuple(a for a in field.components if not a.is_zero())
        out["dim_v"] = quotient_dim_macaulay(IdealGens(comps))
        out["dim_vf"] = quotient_dim_macaulay(
            IdealGens(comps + tuple(eqs)))
    return out


def _run_total_or_local(job: JobSpec, oracle: bool, full: bool, total: bool):
    _need(job.foliation is not None, "[foliation] components: required")
    _need(job.curve is not None, "[curve] equations: required")
    _need(bool(job.points), "[points] point: at least one point is required")
    anomalies = []
    if full:
        report = total_indices_certified(job.foliation, job.curve, job.points,
                                         equation_order=job.milnor_order)
    else:
        report = total_gsv_certified(job.foliation, job.curve, job.points)
    results: dict = {
        "per_point": [r.gsv for r in report.per_point],
        "per_point_detail": [
            _local_report_dict(p, r)
            for p, r in zip(job.points, report.per_point)],
    }
    if total:
        results["closed_form"] = report.closed_form
        results["local_sum"] = report.local_sum
        results["consistent"] = report.consistent
        if not report.consistent:
            anomalies.append(
                f"total index mismatch: closed form {report.closed_form} != "
                f"sum of local indices {report.local_sum} (a point of the "
                "singular set is missing or the input is degenerate)")
    for point, rep in zip(job.points, report.per_point):
        anomalies.extend(rep.anomalies)
    oracle_info = None
    if oracle:
        checked = 0
        for point, rep in zip(job.points, report.per_point):
            dims = _oracle_dims_for_point(job, point, want_field=True)
            checked += len(dims)
            if (dims["tau"] != rep.tau or dims["dim_v"] != rep.dim_v
                    or dims["dim_vf"] != rep.dim_vf):
                anomalies.append(
                    f"oracle disagreement at chart {point.chart} point "
                    f"{[str(c) for c in point.coords]}: staircase "
                    f"({rep.tau}, {rep.dim_v}, {rep.dim_vf}) vs Macaulay "
                    f"({dims['tau']}, {dims['dim_v']}, {dims['dim_vf']})")
        oracle_info = {"agreement": not anomalies, "dimensions_checked": checked}
    return results, anomalies, oracle_info


def _run_germ_invariant(job: JobSpec, oracle: bool, which: str):
    _need(job.curve is not None, "[curve] equations: required")
    _need(bool(job.points), "[points] point: at least one point is required")
    anomalies: list[str] = []
    values = []
    detail = []
    for point in job.points:
        germ = _curve_germ_at(job, point)
        if which == "tjurina":
            from .indices import greuel_tjurina
            value = greuel_tjurina(germ)
        else:
            value = milnor_curve(germ)
        values.append(value)
        detail.append({"point": _point_echo(point), which: value})
    results = {"per_point": values, "per_point_detail": detail}
    oracle_info = None
    if oracle:
        checked = 0
        for point, value in zip(job.points, values):
            germ = _curve_germ_at(job, point)
            eqs = list(germ.equations)
            if which == "tjurina":
                gens = tuple(g for g in eqs + jacobian_minors(eqs)
                             if not g.is_zero())
                redone = quotient_dim_macaulay(IdealGens(gens))
                checked += 1
            else:
                redone = 0
                for k in range(1, len(eqs) + 1):
                    gens = tuple(
                        g for g in eqs[:k - 1] + jacobian_minors(eqs[:k])
                        if not g.is_zero())
                    redone = quotient_dim_macaulay(IdealGens(gens)) - redone
                    checked += 1
            if redone != value:
                anomalies.append(
                    f"oracle disagreement at chart {point.chart}: staircase "
                    f"{value} vs Macaulay {redone}")
        oracle_info = {"agreement": not anomalies, "dimensions_checked": checked}
    return results, anomalies, oracle_info


def _run_bounds(job: JobSpec):
    _need(job.ambient is not None, "[job] ambient: required")
    _need("r" in job.parameters, "[parameters] r: required")
    _need("tau" in job.parameters, "[parameters] tau: required")
    m, r, tau = job.ambient, job.parameters["r"], job.parameters["tau"]
    try:
        constants = nondegenerate_bound_constants(m, r)
        lo, hi = gsv_bounds_nondegenerate(m, r, tau)
    except ValueError as exc:
        raise JobFileError(f"[parameters] r: {exc}") from None
    results = {
        "lo": lo, "hi": hi,
        "eps_r": constants.eps_r, "alpha": constants.alpha,
        "beta_as_stated": constants.beta_as_stated,
        "rho_range_max": constants.rho_range_max,
    }
    row = None
    if r == m - 1:
        row = "1"
    elif r == m - 2:
        row = "2"
    elif r == 2:
        row = "m-2"
    elif r == 1:
        row = "m-1"
    if row is not None:
        published = published_bound_table(m, row, tau)
        results["published_row"] = {
            "row": row, "lo": published[0], "hi": published[1],
            "matches_formula": published == (lo, hi),
        }
    if "rho" in job.parameters:
        try:
            gsv, positive = gsv_from_rho(m, r, tau, job.parameters["rho"])
        except ValueError as exc:
            raise JobFileError(f"[parameters] rho: {exc}") from None
        results["gsv_at_rho"] = gsv
        results["positive_at_rho"] = positive
    return results, [], None


def _run_poincare(job: JobSpec):
    _need(job.ambient is not None, "[job] ambient: required")
    m = job.ambient
    ks, d = _grid_inputs(job)
    anomalies = []
    try:
        rep = poincare_degree_bound(m, ks, d)
    except ValueError as exc:
        raise JobFileError(f"[curve] multidegree: {exc}") from None
    results: dict = {
        "gsv": rep.gsv, "degree_sum": rep.degree_sum, "bound": rep.bound,
        "inequality_holds": rep.inequality_holds,
        "gsv_nonnegative": rep.gsv_nonnegative,
        "equivalence_ok": rep.equivalence_ok,
    }
    if not rep.equivalence_ok:
        anomalies.append("degree-bound/index-sign equivalence failed")
    milnors = job.parameters.get("milnors")
    if milnors is not None:
        t4 = milnor_degree_bound(m, ks, d, milnors)
        results["milnor_bound"] = {"lhs": t4.lhs, "rhs": t4.rhs,
                                   "holds": t4.holds}
        if not t4.holds:
            anomalies.append("Milnor-weighted degree bound failed")
    if m == 2:
        s9 = soares_plane_bound(ks[0], d, milnors or [])
        results["plane_bound"] = {"lhs": s9.lhs, "rhs": s9.rhs,
                                  "holds": s9.holds}
        if s9.note:
            anomalies.append(s9.note)
    return results, anomalies, None


def _grid_inputs(job: JobSpec):
    """(multidegree, foliation degree) for the arithmetic-only modes."""
    if job.curve is not None:
        ks = list(job.curve.multidegree)
    elif "k" in job.parameters:
        ks = [job.parameters["k"]]
    else:
        raise JobFileError("[curve] multidegree or [parameters] k: required")
    if job.foliation is not None:
        d = job.foliation.d
    elif job.foliation_degree is not None:
        d = job.foliation_degree
    elif "degree" in job.parameters:
        d = job.parameters["degree"]
    else:
        raise JobFileError(
            "[foliation] degree or [parameters] degree: required")
    return ks, d


def _run_chern_check(job: JobSpec):
    _need(job.ambient is not None, "[job] ambient: required")
    m = job.ambient
    ks, d = _grid_inputs(job)
    r = len(ks)
    _need(1 <= r <= m - 1, "[curve] multidegree: need 1 <= r <= m-1 entries")
    anomalies = []
    names = {f"a{t}": t for t in range(1, m + 1)}
    names.update({f"b{t}": t for t in range(1, m + 1)})
    ring = GradedRing(names, m)
    c_tx = ChernVector(ring, [ring.gen(f"a{t}") for t in range(1, m + 1)])
    c_n = ChernVector(ring, [ring.gen(f"b{t}") for t in range(1, m + 1)])
    triple = all(
        chern_difference_recursion(c_tx, c_n, t)
        == chern_difference_expansion(c_tx, c_n, t)
        == chern_difference_inversion(c_tx, c_n, t)
        for t in range(m + 1))
    if not triple:
        anomalies.append("difference-class identities disagree symbolically")
    try:
        integral = total_gsv_integral_projective(m, ks, d)
        closed = closed_form_gsv(m, ks, d)
    except ValueError as exc:
        raise JobFileError(f"[curve] multidegree: {exc}") from None
    if integral != closed:
        anomalies.append(
            f"integral {integral} != combinatorial closed form {closed}")
    results = {
        "triple_agreement": triple,
        "integral": integral,
        "closed_form": closed,
        "equal": integral == closed,
    }
    return results, anomalies, None


def _run_euler(job: JobSpec, oracle: bool):
    results, anomalies, oracle_info = _run_total_or_local(
        job, oracle, full=True, total=True)
    schwartz = [d["schwartz"] for d in results["per_point_detail"]]
    euler = euler_characteristic_curve(schwartz)
    results["chi"] = euler.chi
    results["l"] = euler.l
    results["chi_at_least_l"] = euler.holds
    if not euler.holds:
        anomalies.append(
            f"Euler characteristic {euler.chi} below the singularity "
            f"count {euler.l}")
    return results, anomalies, oracle_info


def run_job(job: JobSpec, oracle: bool = False):
    """Dispatch a validated job; returns (report dict, exit code)."""
    start = time.perf_counter()
    if job.mode == "total-gsv":
        results, anomalies, oracle_info = _run_total_or_local(
            job, oracle, full=False, total=True)
    elif job.mode == "local-gsv":
        results, anomalies, oracle_info = _run_total_or_local(
            job, oracle, full=False, total=False)
    elif job.mode == "schwartz":
        results, anomalies, oracle_info = _run_total_or_local(
            job, oracle, full=True, total=True)
    elif job.mode == "euler":
        results, anomalies, oracle_info = _run_euler(job, oracle)
    elif job.mode == "tjurina":
        results, anomalies, oracle_info = _run_germ_invariant(
            job, oracle, "tjurina")
    elif job.mode == "milnor":
        results, anomalies, oracle_info = _run_germ_invariant(
            job, oracle, "milnor")
    elif job.mode == "bounds":
        results, anomalies, oracle_info = _run_bounds(job)
    elif job.mode == "poincare":
        results, anomalies, oracle_info = _run_poincare(job)
    elif job.mode == "chern-check":
        results, anomalies, oracle_info = _run_chern_check(job)
    else:  # unreachable: load_job validates the mode
        raise JobFileError(f"unknown mode {job.mode!r}")
    report = {
        "mode": job.mode,
        "inputs": _echo_inputs(job),
        "results": results,
        "anomalies": anomalies,
        "timing": round(time.perf_counter() - start, 6),
    }
    if oracle_info is not None:
        report["oracle"] = oracle_info
    return report, (2 if anomalies else 0)


# ---------------------------------------------------------------------------
# serialization

def _fold_bigints(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        if abs(obj) >= BIGINT_THRESHOLD:
            return {"_bigint": True, "value": str(obj)}
        return obj
    if isinstance(obj, dict):
        out = {}
        for key, value in obj.items():
            if (isinstance(value, int) and not isinstance(value, bool)
                    and abs(value) >= BIGINT_THRESHOLD):
                out[key] = str(value)
                out[key + "_bigint"] = True
            else:
                out[key] = _fold_bigints(value)
        return out
    if isinstance(obj, (list, tuple)):
        return [_fold_bigints(v) for v in obj]
    return obj


def render_report(report: dict) -> str:
    """Canonical JSON: sorted keys, two-space indent, bigints folded to
    decimal strings with a sibling flag.  The timing value sits alone on
    its own line so golden comparisons can drop it.
    """
    return json.dumps(_fold_bigints(report), sort_keys=True, indent=2)


def _flatten(prefix: str, obj, lines: list):
    if isinstance(obj, dict):
        for key in sorted(obj):
            _flatten(f"{prefix}{key}.", obj[key], lines)
    elif isinstance(obj, list):
        for i, value in enumerate(obj):
            _flatten(f"{prefix}{i}.", value, lines)
    else:
        lines.append((prefix[:-1], obj))


def render_table(report: dict) -> str:
    lines: list[tuple[str, object]] = []
    _flatten("", {"results": report["results"],
                  "anomalies": report["anomalies"]}, lines)
    if not lines:
        return ""
    width = max(len(k) for k, _ in lines)
    body = "\n".join(f"  {k.ljust(width)} : {v}" for k, v in lines)
    return f"gsvkit {report['mode']}\n{body}"


# ---------------------------------------------------------------------------
# entry point

class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise JobFileError(message)


def main(argv=None) -> int:
    parser = _ArgumentParser(prog="gsvkit", description=__doc__)
    parser.add_argument("mode", choices=MODES)
    parser.add_argument("--job", required=True, help="path to the job file")
    parser.add_argument("--oracle", action="store_true",
                        help="recompute quotient dimensions with the "
                             "Macaulay-matrix oracle and assert agreement")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress the human-readable table on stderr")
    try:
        args = parser.parse_args(argv)
    except JobFileError as exc:
        print(f"gsvkit: {exc}", file=sys.stderr)
        return 1
    try:
        with open(args.job, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"gsvkit: cannot read job file: {exc}", file=sys.stderr)
        return 1
    try:
        job = load_job(text)
        if job.mode != args.mode:
            raise JobFileError(
                f"[job] mode: file says {job.mode!r} but the command line "
                f"says {args.mode!r}")
        report, code = run_job(job, oracle=args.oracle)
    except GsvkitError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True, indent=2))
        print(f"gsvkit: {exc}", file=sys.stderr)
        return 1
    print(render_report(report))
    if not args.quiet:
        table = render_table(report)
        if table:
            print(table, file=sys.stderr)
    return code


def cli_entry():
    sys.exit(main())
