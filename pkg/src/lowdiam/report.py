"""End-to-end analysis of one graph and deterministic report rendering."""
from __future__ import annotations

import json
import math
from fractions import Fraction

from lowdiam import expansion as ex
from lowdiam.geronimus import default_tol, eigenvalue_bound_check, nb_walk_matrices, positivity_certificate
from lowdiam.graph import Graph, degree_profile, diameter
from lowdiam.moore import moore_bound, profile_params
from lowdiam.spectral import regime_report, spectrum

SNAP = 1e-9
GROUP_TOL = 1e-7
LOWER_SLACK = 1e-9
CHEEGER_SLACK = 1e-6


# -- bound evaluation --------------------------------------------------------

def bound_status(bound: ex.Bound, measured) -> tuple[str, str | None]:
    """``pass``/``fail``/``n/a`` of one bound against a measured value."""
    if not bound.applicable:
        return "n/a", bound.reason
    if bound.kind == "descriptive":
        return "n/a", "descriptive only: " + (bound.reason or "")
    if measured is None:
        return "n/a", "no measured value"
    value = bound.value
    if bound.kind == "upper":
        slack = LOWER_SLACK * max(1.0, abs(float(value)))
        return ("pass" if float(measured) <= float(value) + slack else "fail"), None
    if bound.bound_id == "cheeger_edge":
        return ("pass" if float(measured) >= float(value) - CHEEGER_SLACK else "fail"), None
    if isinstance(value, (int, Fraction)) and isinstance(measured, (int, Fraction)):
        return ("pass" if measured >= value else "fail"), None
    return ("pass" if float(measured) >= float(value) - LOWER_SLACK else "fail"), None


def is_tight(bound: ex.Bound, measured) -> bool:
    if measured is None or bound.value is None:
        return False
    if bound.exact and isinstance(measured, (int, Fraction)):
        return measured == bound.value
    return abs(float(measured) - float(bound.value)) <= 1e-9 * max(1.0, abs(float(measured)))


def group_values(values, tol: float = GROUP_TOL) -> list[dict]:
    groups: list[dict] = []
    for x in values:
        if groups and abs(groups[-1]["value"] - x) <= tol:
            groups[-1]["multiplicity"] += 1
        else:
            groups.append({"value": x, "multiplicity": 1})
    return groups


def _residual_label(res: float) -> str:
    if res == 0:
        return "0"
    return f"<=1e{math.ceil(math.log10(res))}"


def analyze(g: Graph, exact_cap: int = ex.DEFAULT_CAP, force_d: int | None = None,
            tol: float | None = None) -> dict:
    """Instantiate the results table for one graph.

    Every bound row carries its value, the measured quantity and a status.
    Non-regular graphs are analysed with ``d = force_d`` or the maximum degree,
    and a warning records the idealisation.
    """
    warnings: list[str] = []
    prof = degree_profile(g)
    diam = diameter(g)
    report: dict = {
        "graph": {
            "n": g.n,
            "m": g.m,
            "directed": g.directed,
            "degree_profile": {
                "min": prof.min_degree, "max": prof.max_degree, "regular": prof.is_regular, "d": prof.d,
                **({"in_min": prof.in_min, "in_max": prof.in_max, "out_min": prof.out_min,
                    "out_max": prof.out_max} if g.directed else {}),
            },
            "diameter": diam.diameter if diam.finite else "infinite",
            "strongly_connected": diam.strongly_connected,
        },
    }

    d = force_d if force_d is not None else prof.d
    if d is None:
        d = prof.max_degree
        warnings.append(f"regularity idealized: graph has degrees {prof.min_degree}..{prof.max_degree}, using d = {d}")
    elif force_d is not None and force_d != prof.d:
        warnings.append(f"regularity idealized: degree forced to d = {force_d}")
    k = diam.diameter

    moore = None
    if not diam.finite:
        report["moore"] = {"status": "n/a", "reason": "infinite diameter"}
    elif k < 1 or d < (1 if g.directed else 2):
        report["moore"] = {"status": "n/a", "reason": f"needs d >= 2 and k >= 1 (d={d}, k={k})"}
    else:
        moore = profile_params(d, k, g.n, directed=g.directed)
        report["moore"] = {
            "d": moore.d, "k": moore.k, "n": moore.n, "regime": moore.regime, "mu": moore.mu,
            "additive_gap": moore.additive_gap, "alpha": moore.alpha, "epsilon": moore.epsilon,
        }

    spec = None
    if not g.directed:
        spec = spectrum(g)
        tol_res = 1e-9 * (prof.max_degree + 1)
        report["spectral"] = {
            "eigenvalues": group_values(spec.eigenvalues),
            "lambda_G": spec.lambda_G if spec.lambda_G is not None else "undefined",
            "lambda2": spec.lambda2 if spec.lambda2 is not None else "undefined",
            "spectral_gap": spec.spectral_gap if spec.spectral_gap is not None else "undefined",
            "solver_residual": _residual_label(spec.solver_residual),
            "solver_residual_ok": spec.solver_residual < tol_res,
        }
        if prof.is_regular and prof.d >= 2 and spec.lambda2 is not None:
            # one-sided test against the Ramanujan level 2 sqrt(d - 1)
            small = spec.lambda2 > 2 * math.sqrt(prof.d - 1) + SNAP
            report["spectral"]["small_gap"] = small
            if small:
                warnings.append(f"small spectral gap: lambda2 = {_num(spec.lambda2)} exceeds "
                                f"2 sqrt(d - 1) = {_num(2 * math.sqrt(prof.d - 1))}")
        if moore is not None:
            rr = regime_report(moore)
            report["regime"] = {
                "additive_gap": rr.additive_gap, "sqrt_scale": rr.sqrt_scale,
                "within_sqrt_scale": rr.within_sqrt_scale, "epsilon": rr.epsilon,
                "indicative_lambda_scale": rr.indicative_lambda_scale, "label": rr.label,
            }

    measured = None
    if g.n <= exact_cap and g.n >= 2:
        measured = ex.exact_expansion(g, cap=exact_cap)
        report["expansion"] = {
            "h_e": measured.h_e, "h_e_witness": list(measured.h_e_witness),
            "phi_V": measured.phi_V, "phi_V_witness": list(measured.phi_V_witness),
            "method": measured.method, "subset_cap": measured.subset_cap,
        }
    else:
        report["expansion"] = {"status": "n/a", "reason": f"n={g.n} outside exhaustive range [2, {exact_cap}]"}

    rows = []
    if moore is not None:
        lam2 = spec.lambda2 if spec is not None and prof.is_regular else None
        values = {
            "h_e": measured.h_e if measured else None,
            "phi_V": measured.phi_V if measured else None,
            "lambda": spec.lambda_G if spec is not None else None,
        }
        for b in ex.bound_set(d, k, g.n, directed=g.directed, lambda2=lam2):
            status, reason = bound_status(b, values[b.quantity])
            row = {"bound_id": b.bound_id, "quantity": b.quantity, "kind": b.kind,
                   "applicability": b.applicability, "value": b.value,
                   "measured": values[b.quantity], "status": status}
            if reason:
                row["reason"] = reason
            if status == "pass" and is_tight(b, values[b.quantity]):
                row["tight"] = True
            rows.append(row)
    if moore is None:
        report["bounds"] = {"status": "n/a", "reason": report["moore"]["reason"]}
    else:
        report["bounds"] = rows

    if not g.directed and prof.is_regular and (prof.d or 0) >= 2 and diam.finite:
        gap = moore_bound(prof.d, k) - g.n
        t = default_tol(gap) if tol is None else tol
        checks = eigenvalue_bound_check(g, spec.eigenvalues, tol=t)
        grouped = []
        for c in checks:
            if grouped and abs(grouped[-1]["eigenvalue"] - c.eigenvalue) <= GROUP_TOL:
                grouped[-1]["multiplicity"] += 1
                grouped[-1]["passed"] = grouped[-1]["passed"] and c.passed
                continue
            entry = {"eigenvalue": c.eigenvalue, "multiplicity": 1, "lhs": c.lhs, "rhs": c.rhs,
                     "slack": c.slack, "passed": c.passed, "tight": c.tight}
            if c.note:
                entry["note"] = c.note
            grouped.append(entry)
        report["eigenvalue_bound_check"] = {
            "tol": t, "passed": all(c.passed for c in checks), "eigenvalues": grouped,
        }
        cert = positivity_certificate(g, k)
        total = sum(nb_walk_matrices(g, k).matrices)
        report["positivity"] = {
            "horizon": k, "is_positive": cert.is_positive, "min_entry": cert.min_entry,
            "row_sums_equal_moore_bound": bool((total.sum(axis=1) == moore_bound(prof.d, k)).all()),
        }
    else:
        report["eigenvalue_bound_check"] = {"status": "n/a", "reason": "needs an undirected regular graph "
                                            "with d >= 2 and finite diameter"}
    report["warnings"] = warnings
    return report


# -- rendering ---------------------------------------------------------------

def _num(x: float) -> float:
    if abs(x) < SNAP:
        return 0.0
    return float(f"{x:.12g}")


def normalize(obj):
    """Convert a report tree to JSON-compatible, platform-stable values.

    Fractions become ``{"exact": "p/q", "value": decimal}``; floats are
    rounded to 12 significant digits with values below 1e-9 snapped to 0.
    """
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return int(obj.numerator)
        return {"exact": f"{obj.numerator}/{obj.denominator}", "value": _num(float(obj))}
    if isinstance(obj, int):
        return int(obj)
    if isinstance(obj, float):
        return _num(obj) if math.isfinite(obj) else str(obj)
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return normalize(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def _text_lines(obj, indent: int) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        if set(obj) == {"exact", "value"}:
            return [pad + f"{obj['exact']} ({_scalar(obj['value'])})"]
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, dict) and set(val) == {"exact", "value"}:
                lines.append(f"{pad}{key}: {val['exact']} ({_scalar(val['value'])})")
            elif isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(val, indent + 1))
            elif isinstance(val, dict):
                lines.append(f"{pad}{key}: {{}}")
            elif isinstance(val, list):
                lines.append(f"{pad}{key}: []")
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(obj, list):
        if all(not isinstance(v, (dict, list, str)) for v in obj):
            return [pad + "[" + ", ".join(_scalar(v) for v in obj) + "]"]
        for val in obj:
            if isinstance(val, str):
                lines.append(pad + "- " + val)
                continue
            sub = _text_lines(val, indent + 1)
            lines.append(pad + "- " + sub[0].lstrip())
            lines.extend(sub[1:])
    else:
        lines.append(pad + _scalar(obj))
    return lines


def render(tree, fmt: str = "text") -> str:
    data = normalize(tree)
    if fmt == "structured":
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(_text_lines(data, 0)) + "\n"
