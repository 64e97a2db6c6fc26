"""Doubling a graded algebra into ``n + n`` with an integer hyperbolic automorphism.

Given structure constants ``m_ij^k`` on a Z-basis ``X_i`` and a copy ``Y_i``,
the basis used here is ``u_i = X_i + Y_i``, ``v_i = sqrt(D) (X_i - Y_i)``
with ``D = a^2 - 1``, interleaved as ``u_1, v_1, u_2, v_2, ...``. In it

    [u_i, u_j] = m u_k      [u_i, v_j] = m v_k
    [v_i, u_j] = m v_k      [v_i, v_j] = D m u_k

and the automorphism ``lambda^deg`` on X, ``lambda^-deg`` on Y becomes the
integer block ``B^deg`` with ``B = [[a, D], [1, a]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import (
    LieAlgebra,
    bracket,
    direct_sum,
    grading_check,
    jacobi_check,
    nilpotency_step,
    permute_basis,
)
from .linalg import Matrix, Vector
from .quadext import QuadExtScalar, larger_root


class DoublingError(ValueError):
    pass


def b_matrix(a: int) -> Matrix:
    """``[[a, a^2 - 1], [1, a]]``, determinant 1."""
    return linalg.matrix([[a, a * a - 1], [1, a]])


def b_power(a: int, e: int) -> Matrix:
    return linalg.matpow(b_matrix(a), e)


@dataclass(frozen=True)
class DoublingResult:
    doubled: LieAlgebra
    matrix: Matrix
    a: int
    block_exponents: tuple[int, ...]

    def degree_grouped_order(self) -> list[int]:
        """1-based basis order grouping the 2x2 blocks by degree.

        With the input basis already sorted by degree this is the identity.
        """
        pairs = sorted(range(len(self.block_exponents)), key=lambda i: (self.block_exponents[i], i))
        return [b for i in pairs for b in (2 * i + 1, 2 * i + 2)]


@dataclass(frozen=True)
class AutomorphismFailure:
    """First pair (1-based) where ``M [e_i, e_j] - [M e_i, M e_j]`` is nonzero."""

    i: int
    j: int
    residual: Vector


def verify_automorphism(alg: LieAlgebra, M: Matrix) -> AutomorphismFailure | None:
    M = linalg.matrix(M)
    if linalg.shape(M) != (alg.dim, alg.dim):
        raise ValueError(f"matrix shape {linalg.shape(M)} does not match dimension {alg.dim}")
    images = linalg.transpose(M)
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            lhs = linalg.matvec(M, alg.basis_bracket(i, j))
            rhs = bracket(alg, images[i], images[j])
            residual = tuple(x - y for x, y in zip(lhs, rhs))
            if any(residual):
                return AutomorphismFailure(i + 1, j + 1, residual)
    return None


def double_construction(alg: LieAlgebra, a: int = 2) -> DoublingResult:
    if not isinstance(a, int) or a < 2:
        raise DoublingError(f"parameter a must be an integer >= 2, got {a!r}")
    if alg.degrees is None:
        raise DoublingError("doubling needs a graded algebra: supply degrees for every basis vector")
    if (fail := jacobi_check(alg)) is not None:
        raise DoublingError(f"Jacobi identity fails at ({fail.i}, {fail.j}, {fail.k})")
    if (gfail := grading_check(alg)) is not None:
        raise DoublingError(f"degrees are not a grading: [X_{gfail.i}, X_{gfail.j}] has a component on X_{gfail.k}")
    if not alg.is_integral():
        raise DoublingError("structure constants are not integers; apply scale_basis_to_integer first")

    D = a * a - 1
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(p, q, k, c):
        brackets.setdefault((p, q), {})[k] = c

    for (i, j), row in alg.brackets.items():
        ui, vi, uj, vj = 2 * i, 2 * i + 1, 2 * j, 2 * j + 1
        for k, m in row.items():
            uk, vk = 2 * k, 2 * k + 1
            put(ui, uj, uk, m)
            put(ui, vj, vk, m)
            put(vi, uj, vk, m)
            put(vi, vj, uk, D * m)
    degrees = tuple(d for d in alg.degrees for _ in range(2))
    name = f"double({alg.name})" if alg.name else None
    doubled = LieAlgebra(2 * alg.dim, brackets, degrees, name)
    exps = tuple(alg.degrees)
    M = linalg.block_diag([b_power(a, e) for e in exps])

    if (fail := verify_automorphism(doubled, M)) is not None:
        raise AssertionError(f"doubled matrix is not an automorphism at ({fail.i}, {fail.j})")
    if linalg.det(M) != 1:
        raise AssertionError("doubled matrix does not have determinant 1")
    return DoublingResult(doubled, M, a, exps)


def beta_basis_matrix(dim: int, D: int) -> Matrix:
    """Columns ``X_i + Y_i`` and ``sqrt(D) (X_i - Y_i)`` in the interleaved ``X_1, Y_1, ...`` basis."""
    zero = QuadExtScalar.rational(0, D)
    one = QuadExtScalar.rational(1, D)
    s = QuadExtScalar.sqrt_d(D)
    rows = [[zero] * (2 * dim) for _ in range(2 * dim)]
    for i in range(dim):
        x, y = 2 * i, 2 * i + 1
        rows[x][2 * i], rows[y][2 * i] = one, one
        rows[x][2 * i + 1], rows[y][2 * i + 1] = s, -s
    return tuple(tuple(r) for r in rows)


def quadext_conjugation_check(result: DoublingResult) -> bool:
    """Check ``P^-1 diag(lambda^e1, lambda^-e1, ...) P`` equals the integer matrix in Q(sqrt D)."""
    a = result.a
    D = a * a - 1
    lam = larger_root(a)
    zero = QuadExtScalar.rational(0, D)
    one = QuadExtScalar.rational(1, D)
    n = len(result.block_exponents)
    P = beta_basis_matrix(n, D)
    diag = []
    for e in result.block_exponents:
        diag += [lam ** e, lam ** (-e)]
    T = linalg.diagonal(diag, zero=zero)
    conj = linalg.matmul(linalg.matmul(linalg.inverse(P, one=one, zero=zero), T), P)
    return all(conj[r][c] == result.matrix[r][c] for r in range(2 * n) for c in range(2 * n))


def rational_structure_in_basis(alg: LieAlgebra, P: Matrix, D: int,
                                degrees: Sequence[int] | None = None,
                                name: str | None = None) -> LieAlgebra:
    """Structure constants of ``alg`` in the basis given by the columns of P over Q(sqrt D).

    Raises DoublingError if a constant is irrational.
    """
    zero = QuadExtScalar.rational(0, D)
    one = QuadExtScalar.rational(1, D)
    Pinv = linalg.inverse(P, one=one, zero=zero)
    cols = linalg.transpose(P)
    n = alg.dim
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for p in range(n):
        for q in range(p + 1, n):
            z = [zero] * n
            for (i, j), row in alg.brackets.items():
                w = cols[p][i] * cols[q][j] - cols[p][j] * cols[q][i]
                if w:
                    for k, c in row.items():
                        z[k] = z[k] + w * c
            if not any(z):
                continue
            coords = linalg.matvec(Pinv, z)
            for k, c in enumerate(coords):
                if not c.is_rational():
                    raise DoublingError(f"constant on ({p + 1}, {q + 1}) -> {k + 1} is irrational: {c}")
                if c.u:
                    brackets.setdefault((p, q), {})[k] = c.u
    return LieAlgebra(n, brackets, tuple(degrees) if degrees is not None else None, name or alg.name)


def interleave_copies(alg: LieAlgebra) -> LieAlgebra:
    """``n + n`` with basis ``X_1, Y_1, X_2, Y_2, ...``."""
    s = direct_sum(alg, alg)
    d = alg.dim
    order = [x for i in range(d) for x in (i, i + d)]
    return permute_basis(s, order)


def min_dimension_lint(alg: LieAlgebra) -> str | None:
    """Warn when no Anosov automorphism can exist for dimensional reasons.

    A k-step nilpotent Anosov algebra with k >= 2 has dimension >= 2k + 2;
    an abelian one needs dimension >= 2.
    """
    k = nilpotency_step(alg)
    if k is None:
        return "algebra is not nilpotent, so it cannot be Anosov"
    if k == 1:
        if alg.dim < 2:
            return "abelian of dimension 1: no hyperbolic unimodular automorphism exists"
        return None
    if alg.dim < 2 * k + 2:
        return f"{k}-step nilpotent of dimension {alg.dim} < {2 * k + 2}: cannot be Anosov"
    return None
