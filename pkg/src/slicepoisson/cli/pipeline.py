"""Run the requested tasks of a job in dependency order."""

from __future__ import annotations

import time

from ..diracred import (
    c_determinant,
    check_jacobi,
    check_quasihomogeneous,
    numeric_agreement,
    reduce_chart,
    reduce_general_orbit,
)
from ..errors import ConfigError, SliceError
from ..liecore import build_realization
from ..liecore.invariants import chevalley_invariants
from ..orbitkit import build_chart, characteristic_from_labels, complete_sl2, load_chart
from ..orbitkit.fixtures import parse_sparse_vector
from ..subregular import (
    determinantal_bracket,
    proportionality_constant,
    reduce_to_omega,
    restrict_invariants,
    singular_surface,
)
from .config import REQUIRES, JobConfig
from .report import Report, matrix_strings, rational, sparse


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def _build_chart(config: JobConfig) -> tuple:
    """(realization, chart, pinned Casimirs)."""
    if config.complement == "explicit":
        fx = load_chart(config.chart)
        if config.algebra and config.algebra.upper() != fx.realization.name.upper():
            raise ConfigError(f"chart {config.chart} is for {fx.realization.name}, not {config.algebra}")
        return fx.realization, fx.chart, fx.casimirs
    real = build_realization(config.algebra, form_scale=config.form_scale)
    if config.h:
        h = parse_sparse_vector(config.h, real.dim)
    else:
        h = characteristic_from_labels(real, config.orbit)
    hint = parse_sparse_vector(config.hint, real.dim) if config.hint else None
    return real, build_chart(real, complete_sl2(real, h, hint=hint)), ()


def run(config: JobConfig) -> Report:
    """Execute the tasks; a failing task records its error and skips its dependents."""
    report = Report(job=config.as_dict())
    ctx: dict = {}
    failed: set = set()
    needs_chart = [t for t in config.tasks if t != "general-orbit"]
    if needs_chart:
        start = time.perf_counter()
        try:
            ctx["real"], ctx["chart"], ctx["pinned"] = _build_chart(config)
            chart = ctx["chart"]
            report.sections["chart"] = {
                "algebra": ctx["real"].name,
                "dimension": ctx["real"].dim,
                "rank": ctx["real"].rank,
                "h": sparse(chart.h),
                "e": sparse(chart.e),
                "f": sparse(chart.f),
                "coords": list(chart.coords),
                "weights": list(chart.weights.weights),
                "complement": chart.mode,
            }
        except SliceError as err:
            report.errors.append({"task": "chart", "error": type(err).__name__, "message": str(err)})
            failed.update(needs_chart)
            report.skipped.extend(needs_chart)
        report.timings["chart"] = time.perf_counter() - start

    for task in config.tasks:
        if task in failed:
            continue
        if any(dep in failed for dep in REQUIRES[task]):
            failed.add(task)
            report.skipped.append(task)
            continue
        start = time.perf_counter()
        try:
            TASK_RUNNERS[task](config, ctx, report)
        except SliceError as err:
            failed.add(task)
            report.errors.append({"task": task, "error": type(err).__name__, "message": str(err)})
        report.timings[task] = time.perf_counter() - start
    return report


def _reduce(config, ctx, report):
    chart = ctx["chart"]
    P = reduce_chart(chart)
    ctx["P"] = P
    det = c_determinant(chart)
    report.sections["reduce"] = {
        "coords": list(P.coords),
        "weights": list(P.weights.weights),
        "matrix": matrix_strings(P.matrix),
        "det_C": str(det),
        "complement_size": len(chart.X),
    }


def _casimirs(config, ctx, report):
    family = chevalley_invariants(ctx["real"])
    pinned = list(ctx["pinned"]) or None
    chis = ctx["chis"] = restrict_invariants(family, ctx["chart"], ctx["P"], pinned)
    report.sections["casimirs"] = {
        "coords": list(ctx["P"].coords),
        "invariants": [
            {"name": c.name, "poly": str(c.poly), "degree": c.degree, "quasi_degree": c.qdegree} for c in chis
        ],
        "pinned": bool(pinned),
    }


def _determinantal(config, ctx, report):
    P = ctx["P"]
    D = determinantal_bracket(ctx["chis"], P.coords, P.weights)
    c = proportionality_constant(P, D)
    ctx["D"] = D
    report.sections["determinantal"] = {
        "coords": list(D.coords),
        "matrix": matrix_strings(D.matrix),
        "lambda_N_over_det": rational(c),
        "det_over_lambda_N": rational(1 / c),
    }


def _omega(config, ctx, report):
    om = ctx["omega"] = reduce_to_omega(ctx["P"], ctx["chis"])
    report.sections["omega"] = {
        "coords": list(om.coords),
        "eliminated": list(om.eliminated),
        "parameters": list(om.parameters),
        "survivors": list(om.survivors),
        "solution": {k: str(v) for k, v in om.solution.items()},
        "elimination_det": rational(om.elimination_det),
        "chi_top": str(om.chi_top),
        "matrix": matrix_strings(om.omega),
        "c_prime": rational(om.c_prime),
    }


def _singularity(config, ctx, report):
    S = ctx["surface"] = singular_surface(ctx["omega"], ctx["real"].name)
    entry = S.declared_type
    row = None
    if entry is not None:
        row = {"type": entry.lie_type, "equation": entry.equation, "group": entry.group}
        if not entry.homogeneous:
            row.update({"V": entry.V, "F_prime": entry.F_prime, "gamma": entry.gamma, "action": entry.action.text})
    report.sections["singularity"] = {
        "variables": list(S.variables),
        "F0": str(S.F0),
        "surface": str(S.surface),
        "milnor_number": S.milnor_number,
        "milnor_basis": [str(m) for m in S.milnor_basis],
        "standard_monomials": [str(m) for m in S.standard_basis],
        "coefficients": {k: str(v) for k, v in sorted(S.coefficients.items())},
        "higher_order": str(S.higher_order),
        "invariant_basis": [str(m) for m in S.invariant_basis] if S.invariant_basis is not None else None,
        "table": row,
    }


def _checks(config, ctx, report):
    chart, P, real = ctx["chart"], ctx["P"], ctx["real"]
    checks = report.checks
    checks["jacobi"] = _verdict(check_jacobi(P.matrix, P.coords).passed)
    checks["skew"] = _verdict(P.matrix.is_skew)
    checks["quasi_homogeneous"] = _verdict(check_quasihomogeneous(P).passed)
    checks["centralizer_weight_sum"] = _verdict(sum(chart.z_weights) == real.dim - chart.k)
    if all(w is not None for w in chart.x_weights):
        checks["complement_weight_sum"] = _verdict(sum(w + 1 for w in chart.x_weights) == 0)
    checks["det_C_constant"] = _verdict(c_determinant(chart).is_constant)
    checks["generic_rank"] = _verdict(P.generic_rank() == chart.k - real.rank)
    checks["kostant"] = _verdict(2 * sum(real.exponents) == real.dim - real.rank)
    checks["numeric_agreement"] = _verdict(not numeric_agreement(chart, P, samples=5))
    if "chis" in ctx:
        checks["casimirs"] = _verdict(all(P.is_casimir(c.poly) for c in ctx["chis"]))
    if "D" in ctx:
        checks["determinantal_jacobi"] = _verdict(check_jacobi(ctx["D"].matrix, ctx["D"].coords).passed)
    if "omega" in ctx:
        checks["omega_c_prime_nonzero"] = _verdict(ctx["omega"].c_prime != 0)
    if "surface" in ctx:
        checks["milnor_coefficients_in_basis"] = _verdict(ctx["surface"].coefficients_in_basis)


def _general_orbit(config, ctx, report):
    real = build_realization(config.algebra, form_scale=config.form_scale)
    out = []
    for k, text in enumerate(config.elements):
        x = parse_sparse_vector(text, real.dim)
        rep = reduce_general_orbit(real, x)
        out.append({
            "element": text,
            "s": sparse(rep.s),
            "e": sparse(rep.e),
            "coords": list(rep.coords),
            "ambient": matrix_strings(rep.ambient.matrix),
            "centralizer": matrix_strings(rep.centralizer.matrix),
            "diffs": [[i, j, str(d)] for i, j, d in rep.diffs],
        })
        report.checks[f"general_orbit_{k + 1}"] = _verdict(rep.equal)
    report.sections["general-orbit"] = out


TASK_RUNNERS = {
    "reduce": _reduce,
    "casimirs": _casimirs,
    "determinantal": _determinantal,
    "omega": _omega,
    "singularity": _singularity,
    "checks": _checks,
    "general-orbit": _general_orbit,
}
