"""Exact certification that a matrix is unimodular and hyperbolic.

Hyperbolicity (no eigenvalue of modulus 1) is decided without floating
point: a root ``mu`` on the unit circle other than +-1 comes in a conjugate
pair ``mu, 1/mu`` with ``mu + 1/mu`` real and inside (-2, 2). The map
``mu -> mu + 1/mu`` is realized by a resultant, and the interval is searched
with Sturm sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Any

import numpy as np

from . import linalg
from .algebra import LieAlgebra
from .doubling import verify_automorphism
from .linalg import Matrix
from .polynomial import (
    IntPolynomial,
    count_real_roots,
    count_real_roots_with_multiplicity,
    divmod_exact,
    integer_nodes,
    interpolate,
    isolate_root,
    resultant,
    squarefree_part,
)

NUMERIC_REL_TOL = 1e-9
NUMERIC_LOG_TOL = 1e-6


class NotIntegralError(ValueError):
    """Characteristic polynomial has a non-integer coefficient."""

    def __init__(self, coeffs):
        super().__init__("characteristic polynomial is not integral: "
                         + ", ".join(str(c) for c in coeffs))
        self.coeffs = coeffs


def rational_char_poly(M: Matrix) -> tuple[Fraction, ...]:
    """Coefficients of ``det(xI - M)``, constant first, by Faddeev-LeVerrier.

    ``M_k = M M_{k-1} + c_{n-k+1} I`` and ``c_{n-k} = -tr(M M_k) / k``.
    Integer matrices run in plain ints; the divisions by k are then exact.
    """
    M = linalg.matrix(M)
    n, m = linalg.shape(M)
    if n != m:
        raise ValueError("characteristic polynomial of a non-square matrix")
    integral = linalg.is_integral(M)
    A = [[int(x) if integral else x for x in row] for row in M]
    zero = 0 if integral else Fraction(0)
    coeffs = [zero] * (n + 1)
    coeffs[n] = 1 if integral else Fraction(1)
    Mk = [[zero] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        prod = _mul(A, Mk, zero)
        for i in range(n):
            prod[i][i] += c_prev
        Mk = prod
        AM = _mul(A, Mk, zero)
        tr = sum(AM[i][i] for i in range(n))
        if integral:
            q, r = divmod(-tr, k)
            assert r == 0
            coeffs[n - k] = q
        else:
            coeffs[n - k] = Fraction(-tr) / k
    return tuple(Fraction(c) for c in coeffs)


def _mul(a, b, zero):
    n = len(a)
    cols = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * col[k] for k, x in nz), zero) for col in cols])
    return out


def char_poly(M: Matrix) -> IntPolynomial:
    """Integer characteristic polynomial; raises NotIntegralError otherwise."""
    coeffs = rational_char_poly(M)
    if any(c.denominator != 1 for c in coeffs):
        raise NotIntegralError(coeffs)
    return IntPolynomial(coeffs)


def clear_denominators(coeffs) -> IntPolynomial:
    L = lcm(1, *(Fraction(c).denominator for c in coeffs))
    return IntPolynomial(Fraction(c) * L for c in coeffs)


def unimodularity_check(p: IntPolynomial) -> bool:
    if not isinstance(p, IntPolynomial):
        raise ValueError("unimodularity is defined for integer polynomials")
    if not p.is_monic():
        raise ValueError("unimodularity check expects a monic polynomial")
    return p[0] in (1, -1)


def pair_transform(p: IntPolynomial) -> IntPolynomial:
    """``r(y) = Res_x(p(x), x^2 - y x + 1)``.

    The roots of r are ``mu + 1/mu`` over the roots mu of p. r has degree
    ``deg p`` in y, so it is recovered from that many plus one integer
    evaluations.
    """
    if p[0] == 0:
        raise ValueError("pair transform needs p(0) != 0")
    n = p.degree
    nodes = integer_nodes(n + 1)
    values = [resultant(p, IntPolynomial([1, -y, 1])) for y in nodes]
    coeffs = interpolate(nodes, values)
    return IntPolynomial(coeffs)


@dataclass(frozen=True)
class UnitCircleResult:
    """Outcome of the unit-circle test.

    ``exact_root`` is +1 or -1 when that is a root. Otherwise, for a positive
    result, ``trace_interval`` isolates one value ``y = 2 cos(theta)`` with
    ``e^{+-i theta}`` roots of p, and ``pair_count`` is the number of distinct
    such values.
    """

    has_root: bool
    exact_root: int | None = None
    trace_interval: tuple[Fraction, Fraction] | None = None
    pair_count: int = 0

    def __bool__(self):
        return self.has_root


def unit_circle_root_test(p: IntPolynomial) -> UnitCircleResult:
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots to test")
    if p[0] == 0:
        raise ValueError("p(0) = 0: zero eigenvalue, matrix is not invertible")
    if p(1) == 0:
        return UnitCircleResult(True, exact_root=1)
    if p(-1) == 0:
        return UnitCircleResult(True, exact_root=-1)
    r = squarefree_part(pair_transform(p))
    lo, hi = Fraction(-2), Fraction(2)
    n = count_real_roots(r, lo, hi)
    if n == 0:
        return UnitCircleResult(False)
    # r(+-2) != 0 here since +-1 are not roots of p
    return UnitCircleResult(True, trace_interval=isolate_root(r, lo, hi), pair_count=n)


@dataclass(frozen=True)
class Splitting:
    expanding: int
    contracting: int
    mode: str  # "exact" or "numeric-fallback"


def classify_splitting(p: IntPolynomial) -> Splitting:
    """Count roots outside and inside the unit disk, with multiplicity.

    Exact when the whole spectrum is real (Sturm counts on (-1, 1)); a flagged
    floating-point fallback otherwise.
    """
    if unit_circle_root_test(p):
        raise ValueError("polynomial has roots on the unit circle")
    n = p.degree
    if count_real_roots_with_multiplicity(p) == n:
        inside = count_real_roots_with_multiplicity(p, -1, 1)
        return Splitting(n - inside, inside, "exact")
    return _numeric_splitting(p)


def _numeric_splitting(p: IntPolynomial) -> Splitting:
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    mods = np.abs(roots)
    if np.any(np.abs(mods - 1.0) <= NUMERIC_REL_TOL):
        raise ArithmeticError("numeric fallback cannot separate a root from the unit circle")
    expanding = int(np.sum(mods > 1.0))
    contracting = int(np.sum(mods < 1.0))
    if expanding + contracting != p.degree:
        raise ArithmeticError("numeric fallback lost roots")
    expected = math.log(abs(p[0]) / abs(p.leading))
    if abs(float(np.sum(np.log(mods))) - expected) > NUMERIC_LOG_TOL * max(1.0, abs(expected)):
        raise ArithmeticError("numeric fallback fails the log-modulus consistency check")
    return Splitting(expanding, contracting, "numeric-fallback")


@dataclass
class AnosovCertificate:
    """Everything needed to re-check an Anosov claim from scratch."""

    algebra: LieAlgebra
    matrix: Matrix
    char_poly: tuple[Fraction, ...]
    automorphism: bool
    integral: bool
    unimodular: bool
    hyperbolic: bool
    expanding_dim: int | None
    contracting_dim: int | None
    classification_mode: str | None
    parameters: dict[str, Any] = field(default_factory=dict)
    failure_witnesses: list[dict[str, Any]] = field(default_factory=list)

    @property
    def anosov(self) -> bool:
        return self.automorphism and self.integral and self.unimodular and self.hyperbolic


def _vec_str(v) -> list[str]:
    return [str(x) for x in v]


def certify(alg: LieAlgebra, M: Matrix, parameters: dict[str, Any] | None = None) -> AnosovCertificate:
    """Run every check on ``(alg, M)``; failures are recorded, never raised."""
    M = linalg.matrix(M)
    if linalg.shape(M) != (alg.dim, alg.dim):
        raise ValueError(f"matrix shape {linalg.shape(M)} does not match dimension {alg.dim}")
    witnesses: list[dict[str, Any]] = []

    fail = verify_automorphism(alg, M)
    automorphism = fail is None
    if fail is not None:
        witnesses.append({"check": "automorphism", "i": fail.i, "j": fail.j,
                          "residual": _vec_str(fail.residual)})
    if linalg.det(M) == 0:
        automorphism = False
        witnesses.append({"check": "automorphism", "reason": "matrix is singular"})

    integral = linalg.is_integral(M)
    if not integral:
        r, c = next((r, c) for r, row in enumerate(M) for c, x in enumerate(row) if x.denominator != 1)
        witnesses.append({"check": "integral", "row": r + 1, "col": c + 1, "entry": str(M[r][c])})

    coeffs = rational_char_poly(M)
    poly_integral = all(c.denominator == 1 for c in coeffs)
    if poly_integral:
        p = IntPolynomial(coeffs)
        unimodular = unimodularity_check(p)
        if not unimodular:
            witnesses.append({"check": "unimodular", "constant_term": str(p[0])})
    else:
        p = clear_denominators(coeffs)
        unimodular = False
        witnesses.append({"check": "unimodular", "reason": "characteristic polynomial is not integral"})

    # zero eigenvalues are off the circle; strip them so the test applies
    q = p
    while q.degree > 0 and q[0] == 0:
        q = divmod_exact(q, IntPolynomial.x())
    expanding = contracting = None
    mode = None
    if q.degree == 0:
        hyperbolic = True
    else:
        uc = unit_circle_root_test(q)
        hyperbolic = not uc.has_root
        if uc.has_root:
            w: dict[str, Any] = {"check": "hyperbolic"}
            if uc.exact_root is not None:
                w["eigenvalue"] = str(uc.exact_root)
            else:
                w["two_cos_theta_interval"] = [str(uc.trace_interval[0]), str(uc.trace_interval[1])]
                w["distinct_pairs"] = uc.pair_count
            witnesses.append(w)
    if hyperbolic and q.degree == p.degree:
        try:
            split = classify_splitting(p)
        except ArithmeticError as exc:
            witnesses.append({"check": "splitting", "reason": str(exc)})
        else:
            expanding, contracting, mode = split.expanding, split.contracting, split.mode

    return AnosovCertificate(
        algebra=alg, matrix=M, char_poly=coeffs, automorphism=automorphism,
        integral=integral, unimodular=unimodular, hyperbolic=hyperbolic,
        expanding_dim=expanding, contracting_dim=contracting, classification_mode=mode,
        parameters=dict(parameters or {}), failure_witnesses=witnesses,
    )
