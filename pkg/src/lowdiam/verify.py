"""Certification runs: every checkable guarantee against measured values."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from lowdiam import constructions as cons
from lowdiam.expansion import DEFAULT_CAP
from lowdiam.geronimus import coeff_recurrence_check, partial_values, positivity_certificate, trig_closed_form
from lowdiam.graph import Graph
from lowdiam.report import analyze

TRIG_SEED = 20240607


@dataclass(frozen=True)
class CheckResult:
    item: str
    check: str
    status: str  # pass | fail | warn
    detail: str = ""


def trig_identity_check(degrees=range(3, 11), orders=range(1, 13), samples: int = 200,
                        seed: int = TRIG_SEED) -> tuple[bool, float]:
    """Max of |recurrence - closed form| / (d-1)^(t/2) over random angles."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for d in degrees:
        for t in orders:
            theta = rng.uniform(0.0, np.pi, samples)
            x = 2 * np.sqrt(d - 1) * np.cos(theta)
            lhs = partial_values(d, t, x)[t]
            err = np.max(np.abs(lhs - trig_closed_form(d, t, theta))) / (d - 1) ** (t / 2)
            worst = max(worst, float(err))
    return worst < 1e-9, worst


def global_checks() -> list[CheckResult]:
    ok, worst = trig_identity_check()
    out = [CheckResult("geronimus", "trig_identity", "pass" if ok else "fail",
                       f"max scaled deviation {worst:.3e}")]
    for d in range(2, 11):
        res = coeff_recurrence_check(d, 30)
        out.append(CheckResult(f"geronimus d={d}", "coefficient_recurrence",
                               "pass" if res.passed else "fail",
                               "" if res.passed else f"first violation {res.first_violation}"))
    return out


def verify_graph(name: str, g: Graph, exact_cap: int = DEFAULT_CAP, tol: float | None = None,
                 force_d: int | None = None) -> list[CheckResult]:
    """Checks for one graph.

    Failures on graphs analysed under an idealised degree are downgraded to
    warnings: the bounds are only claimed for regular graphs.
    """
    rep = analyze(g, exact_cap=exact_cap, force_d=force_d, tol=tol)
    idealized = any(w.startswith("regularity idealized") for w in rep["warnings"])
    fail = "warn" if idealized else "fail"
    out: list[CheckResult] = []

    rows = rep["bounds"] if isinstance(rep["bounds"], list) else []
    if not rows:
        reason = rep["bounds"].get("reason", "") if isinstance(rep["bounds"], dict) else "no bound rows"
        out.append(CheckResult(name, "bounds", "warn", f"skipped: {reason}"))
    for row in rows:
        if row["status"] == "n/a":
            continue
        tight = " (tight)" if row.get("tight") else ""
        detail = f"bound {float(row['value']):.12g}, measured {float(row['measured']):.12g}{tight}"
        out.append(CheckResult(name, f"bound:{row['bound_id']}",
                               "pass" if row["status"] == "pass" else fail, detail))

    ev = rep["eigenvalue_bound_check"]
    if "passed" in ev:
        worst = min(e["slack"] for e in ev["eigenvalues"]) if ev["eigenvalues"] else 0.0
        tight = [e["eigenvalue"] for e in ev["eigenvalues"] if e["tight"]]
        detail = f"min slack {worst:.6g}" + (f"; tight at {[round(x, 9) for x in tight]}" if tight else "")
        out.append(CheckResult(name, "eigenvalue_bound", "pass" if ev["passed"] else "fail", detail))
        pos = rep["positivity"]
        k = pos["horizon"]
        below = positivity_certificate(g, k - 1).is_positive if k >= 1 else False
        ok = pos["is_positive"] and not below
        out.append(CheckResult(name, "positivity", "pass" if ok else "fail",
                               f"positive at horizon {k}: {pos['is_positive']}, at {k - 1}: {below}"))
        out.append(CheckResult(name, "row_sums", "pass" if pos["row_sums_equal_moore_bound"] else "fail"))

    spec = rep.get("spectral")
    if spec is not None:
        out.append(CheckResult(name, "solver_residual", "pass" if spec["solver_residual_ok"] else "fail",
                               spec["solver_residual"]))
    return out


def standard_suite() -> list[tuple[str, Graph]]:
    graphs = [(f"C_{n}", cons.gen_cycle(n)) for n in range(3, 31)]
    graphs += [(f"K_{m}", cons.gen_complete(m)) for m in range(3, 11)]
    graphs += [(f"K_{d},{d}", cons.gen_complete_bipartite(d)) for d in range(2, 9)]
    graphs.append(("petersen", cons.gen_petersen()))
    graphs += [(f"two_cliques_{n}", cons.gen_two_cliques_bridged(n)) for n in range(6, 25, 2)]
    graphs += [(f"kautz({d},{k})", cons.gen_kautz(d, k)) for d, k in ((2, 2), (2, 3), (3, 2), (2, 4))]
    graphs += [(f"debruijn({b},{k})", cons.gen_debruijn_digraph(b, k)) for b, k in ((2, 2), (2, 3), (3, 2), (2, 4))]
    graphs += [(f"polarity({q})", cons.gen_polarity(q)) for q in (2, 3)]
    return graphs


def run_suite(name: str = "standard", exact_cap: int = DEFAULT_CAP, tol: float | None = None) -> list[CheckResult]:
    if name != "standard":
        raise ValueError(f"unknown suite {name!r}")
    results = global_checks()
    for label, g in standard_suite():
        results.extend(verify_graph(label, g, exact_cap=exact_cap, tol=tol))
    return results


def summary_ok(results: list[CheckResult]) -> bool:
    return all(r.status != "fail" for r in results)

