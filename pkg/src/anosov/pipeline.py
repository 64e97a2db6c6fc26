"""Validate, double and certify pipelines shared by the CLI and the batch report."""

from __future__ import annotations

from typing import Any

from . import catalog
from .algebra import (
    LieAlgebra,
    grading_check,
    has_abelian_factor,
    jacobi_check,
    lower_central_series,
    scale_basis_to_integer,
)
from .doubling import double_construction, min_dimension_lint, quadext_conjugation_check
from .hyperbolicity import AnosovCertificate, certify
from .io import rational_str


def validation_report(alg: LieAlgebra) -> dict[str, Any]:
    rep: dict[str, Any] = {"name": alg.name, "dim": alg.dim}
    jf = jacobi_check(alg)
    rep["jacobi"] = {"pass": jf is None}
    if jf is not None:
        rep["jacobi"]["witness"] = {"i": jf.i, "j": jf.j, "k": jf.k,
                                    "residual": [rational_str(x) for x in jf.residual]}
    if alg.degrees is None:
        rep["grading"] = None
    else:
        gf = grading_check(alg)
        rep["grading"] = {"pass": gf is None}
        if gf is not None:
            rep["grading"]["witness"] = {"i": gf.i, "j": gf.j, "k": gf.k}
    rep["integral_constants"] = alg.is_integral()
    if jf is None:
        series = lower_central_series(alg)
        nilpotent = series[-1] == 0
        rep["lower_central_series"] = series
        rep["nilpotent"] = nilpotent
        rep["step"] = len(series) - 1 if nilpotent else None
        if nilpotent:
            present, witness = has_abelian_factor(alg)
            rep["abelian_factor"] = {"present": present,
                                     "witness": [rational_str(x) for x in witness] if witness else None}
        else:
            rep["abelian_factor"] = None
        rep["lint"] = min_dimension_lint(alg)
    else:
        rep.update(lower_central_series=None, nilpotent=None, step=None, abelian_factor=None, lint=None)
    rep["pass"] = bool(rep["jacobi"]["pass"]
                       and (rep["grading"] is None or rep["grading"]["pass"])
                       and rep["nilpotent"])
    return rep


def format_validation(rep: dict[str, Any]) -> str:
    label = rep["name"] or "algebra"
    lines = []
    if not rep["jacobi"]["pass"]:
        w = rep["jacobi"]["witness"]
        lines.append(f"{label}: FAIL: Jacobi identity fails at ({w['i']}, {w['j']}, {w['k']}), "
                     f"residual [{', '.join(w['residual'])}]")
        return "\n".join(lines)
    if rep["grading"] is not None and not rep["grading"]["pass"]:
        w = rep["grading"]["witness"]
        lines.append(f"{label}: FAIL: grading failure at ({w['i']}, {w['j']}, {w['k']}): "
                     f"[X_{w['i']}, X_{w['j']}] has a component on X_{w['k']} of the wrong degree")
    if not rep["nilpotent"]:
        lines.append(f"{label}: FAIL: not nilpotent (lower central series {rep['lower_central_series']})")
    if rep["pass"]:
        graded = "graded" if rep["grading"] is not None else "no grading given"
        factor = "abelian factor present" if rep["abelian_factor"]["present"] else "no abelian factor"
        lines.append(f"{label}: PASS: dim {rep['dim']}, step {rep['step']}, {graded}, {factor}")
    lines.append(f"  lower central series: {rep['lower_central_series']}")
    if rep["abelian_factor"] and rep["abelian_factor"]["present"]:
        lines.append(f"  central vector outside [n,n]: [{', '.join(rep['abelian_factor']['witness'])}]")
    if not rep["integral_constants"]:
        lines.append("  structure constants are not all integers (see --scale)")
    if rep["lint"]:
        lines.append(f"  warning: {rep['lint']}")
    return "\n".join(lines)


def double_and_certify(alg: LieAlgebra, a: int = 2, scale: bool = False
                       ) -> tuple[LieAlgebra, AnosovCertificate]:
    """Scale if asked, double, and certify. Raises DoublingError on bad input."""
    L = 1
    if scale:
        alg, L = scale_basis_to_integer(alg)
    result = double_construction(alg, a)
    if not quadext_conjugation_check(result):
        raise AssertionError("integer matrix does not match the eigenvalue description")
    params = {
        "a": a,
        "construction": "doubling",
        "catalog_name": alg.name,
        "scale": L,
        "degree_grouped_order": result.degree_grouped_order(),
    }
    return result.doubled, certify(result.doubled, result.matrix, params)


def catalog_batch(a: int = 2) -> list[tuple[str, LieAlgebra, AnosovCertificate]]:
    """Every catalog construction at its default parameter range, in a fixed order."""
    out = []
    base = [catalog.heisenberg3()]
    base += [catalog.filiform(k) for k in range(2, 11)]
    base += [catalog.seven_dim_family(k) for k in range(2, 7)]
    for alg in base:
        doubled, cert = double_and_certify(alg, a, scale=True)
        out.append((f"{alg.name}_double_a{a}", doubled, cert))
    alg, M = catalog.eight_dim_example(a)
    out.append((f"eight_dim_a{a}", alg, certify(alg, M, {"a": a, "construction": "catalog",
                                                         "catalog_name": "eight_dim"})))
    for r in range(1, 5):
        alg, M = catalog.free_two_step_sums(r)
        out.append((alg.name, alg, certify(alg, M, {"a": None, "construction": "catalog",
                                                    "catalog_name": "free_two_step"})))
    return out
