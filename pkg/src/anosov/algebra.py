"""Rational Lie algebras given by structure constants, with optional gradings.

Internally basis indices are 0-based. Everything a user reads (failure
witnesses, files, reports) is 1-based, matching the usual ``X_1, ..., X_d``
labelling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from . import linalg
from .linalg import Matrix, Vector, as_fraction

Brackets = Mapping[tuple[int, int], Mapping[int, Fraction]]


def _normalize_brackets(dim: int, brackets: Brackets) -> dict[tuple[int, int], dict[int, Fraction]]:
    out: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), terms in brackets.items():
        if not (0 <= i < j < dim):
            raise ValueError(f"bracket index pair ({i + 1}, {j + 1}) must satisfy 1 <= i < j <= {dim}")
        row: dict[int, Fraction] = {}
        for k, c in dict(terms).items():
            if not 0 <= k < dim:
                raise ValueError(f"bracket target index {k + 1} out of range 1..{dim}")
            c = as_fraction(c)
            if c:
                row[k] = row.get(k, Fraction(0)) + c
        row = {k: c for k, c in sorted(row.items()) if c}
        if row:
            out[(i, j)] = row
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants ``[e_i, e_j] = sum_k c * e_k`` for ``i < j``.

    Antisymmetry is built in: only pairs with ``i < j`` are stored and the
    rest is synthesized. ``degrees[i]`` is the grading degree of ``e_i``.
    """

    dim: int
    brackets: dict[tuple[int, int], dict[int, Fraction]] = field(default_factory=dict)
    degrees: tuple[int, ...] | None = None
    name: str | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "brackets", _normalize_brackets(self.dim, self.brackets))
        if self.degrees is not None:
            degs = tuple(int(d) for d in self.degrees)
            if len(degs) != self.dim:
                raise ValueError(f"expected {self.dim} degrees, got {len(degs)}")
            object.__setattr__(self, "degrees", degs)

    @classmethod
    def from_table(cls, dim: int, table: Iterable[tuple[int, int, int, object]],
                   degrees: Sequence[int] | None = None, name: str | None = None) -> LieAlgebra:
        """Build from 1-based records ``(i, j, k, c)`` meaning ``[X_i, X_j] += c X_k``."""
        brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i, j, k, c in table:
            row = brackets.setdefault((i - 1, j - 1), {})
            row[k - 1] = row.get(k - 1, Fraction(0)) + as_fraction(c)
        return cls(dim, brackets, tuple(degrees) if degrees is not None else None, name)

    def table(self) -> list[tuple[int, int, int, Fraction]]:
        """1-based ``(i, j, k, c)`` records in canonical order."""
        return [(i + 1, j + 1, k + 1, c) for (i, j), row in self.brackets.items() for k, c in row.items()]

    def structure_constants(self) -> list[Fraction]:
        return [c for row in self.brackets.values() for c in row.values()]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.structure_constants())

    def with_name(self, name: str | None) -> LieAlgebra:
        return LieAlgebra(self.dim, self.brackets, self.degrees, name)

    def with_degrees(self, degrees: Sequence[int] | None) -> LieAlgebra:
        return LieAlgebra(self.dim, self.brackets, tuple(degrees) if degrees is not None else None, self.name)

    def basis_bracket(self, i: int, j: int) -> Vector:
        """``[e_i, e_j]`` for 0-based indices."""
        v = [Fraction(0)] * self.dim
        if i == j:
            return tuple(v)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for k, c in self.brackets.get((i, j), {}).items():
            v[k] = sign * c
        return tuple(v)


def abelian(d: int, name: str | None = None) -> LieAlgebra:
    return LieAlgebra(d, {}, (1,) * d, name or f"abelian{d}")


def _check_vector(alg: LieAlgebra, x: Sequence) -> tuple[Fraction, ...]:
    if len(x) != alg.dim:
        raise ValueError(f"vector of length {len(x)} for an algebra of dimension {alg.dim}")
    return tuple(c if isinstance(c, Fraction) else as_fraction(c) for c in x)


def bracket(alg: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    """Bilinear extension of the structure constants."""
    x = _check_vector(alg, x)
    y = _check_vector(alg, y)
    out = [Fraction(0)] * alg.dim
    xs = [(i, c) for i, c in enumerate(x) if c]
    ys = [(j, c) for j, c in enumerate(y) if c]
    table = alg.brackets
    if len(xs) * len(ys) <= len(table):
        for i, xi in xs:
            for j, yj in ys:
                if i < j:
                    row, w = table.get((i, j)), xi * yj
                elif i > j:
                    row, w = table.get((j, i)), -xi * yj
                else:
                    continue
                if row:
                    for k, c in row.items():
                        out[k] += w * c
    else:
        for (i, j), row in table.items():
            w = x[i] * y[j] - x[j] * y[i]
            if w:
                for k, c in row.items():
                    out[k] += w * c
    return tuple(out)


@dataclass(frozen=True)
class JacobiFailure:
    """First triple (1-based) whose cyclic Jacobi sum is nonzero."""

    i: int
    j: int
    k: int
    residual: Vector


def jacobi_check(alg: LieAlgebra) -> JacobiFailure | None:
    """Return None when the Jacobi identity holds on every basis triple."""
    d = alg.dim
    basis = [linalg.unit_vector(d, i) for i in range(d)]
    # [[e_i,e_j],e_k] only depends on the stored products
    prods = {(i, j): alg.basis_bracket(i, j) for i in range(d) for j in range(d)}
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                r = [a + b + c for a, b, c in zip(bracket(alg, prods[i, j], basis[k]),
                                                  bracket(alg, prods[j, k], basis[i]),
                                                  bracket(alg, prods[k, i], basis[j]))]
                if any(r):
                    return JacobiFailure(i + 1, j + 1, k + 1, tuple(r))
    return None


def _bracket_span(alg: LieAlgebra, left: Sequence[Vector], right: Sequence[Vector]) -> list[list[Fraction]]:
    rows = []
    for x in left:
        for y in right:
            z = bracket(alg, x, y)
            if any(z):
                rows.append(list(z))
    return linalg.rref(rows)


def lower_central_series(alg: LieAlgebra) -> list[int]:
    """Dimensions ``[dim n, dim [n,n], dim [n,[n,n]], ...]``.

    Stops at 0 for nilpotent algebras. Otherwise stops at the first term
    that no longer shrinks, so the last entry is the nonzero stable dimension.
    """
    basis = [linalg.unit_vector(alg.dim, i) for i in range(alg.dim)]
    dims = [alg.dim]
    current: list = basis
    while dims[-1] > 0:
        nxt = _bracket_span(alg, basis, current)
        if len(nxt) == dims[-1]:
            break
        dims.append(len(nxt))
        current = [tuple(r) for r in nxt]
    return dims


def is_nilpotent(alg: LieAlgebra) -> bool:
    return lower_central_series(alg)[-1] == 0


def nilpotency_step(alg: LieAlgebra) -> int | None:
    """Step k of a nilpotent algebra (abelian = 1), or None if not nilpotent."""
    dims = lower_central_series(alg)
    if dims[-1] != 0:
        return None
    return len(dims) - 1


@dataclass(frozen=True)
class GradingFailure:
    i: int
    j: int
    k: int


def grading_check(alg: LieAlgebra) -> GradingFailure | None:
    """Every nonzero constant on ``[X_i, X_j] -> X_k`` needs deg k = deg i + deg j."""
    if alg.degrees is None:
        raise ValueError("algebra has no grading degrees")
    degs = alg.degrees
    for idx, dg in enumerate(degs):
        if dg < 1:
            return GradingFailure(idx + 1, idx + 1, idx + 1)
    for (i, j), row in alg.brackets.items():
        for k in row:
            if degs[k] != degs[i] + degs[j]:
                return GradingFailure(i + 1, j + 1, k + 1)
    return None


def direct_sum(a: LieAlgebra, b: LieAlgebra, name: str | None = None) -> LieAlgebra:
    off = a.dim
    brackets = dict(a.brackets)
    for (i, j), row in b.brackets.items():
        brackets[(i + off, j + off)] = {k + off: c for k, c in row.items()}
    degrees = a.degrees + b.degrees if a.degrees is not None and b.degrees is not None else None
    if name is None and a.name and b.name:
        name = f"{a.name}+{b.name}"
    return LieAlgebra(a.dim + b.dim, brackets, degrees, name)


def change_of_basis(alg: LieAlgebra, P: Matrix, degrees: Sequence[int] | None = None) -> LieAlgebra:
    """Structure constants in the basis given by the columns of ``P``.

    Degrees are dropped unless supplied, since a general basis change does
    not respect the grading.
    """
    P = linalg.matrix(P)
    if linalg.shape(P) != (alg.dim, alg.dim):
        raise ValueError("basis change must be a square matrix of the algebra's size")
    try:
        Pinv = linalg.inverse(P)
    except linalg.SingularMatrixError:
        raise ValueError("basis change matrix is singular") from None
    cols = linalg.transpose(P)
    brackets = {}
    for a in range(alg.dim):
        for b in range(a + 1, alg.dim):
            z = bracket(alg, cols[a], cols[b])
            if any(z):
                coords = linalg.matvec(Pinv, z)
                brackets[(a, b)] = {k: c for k, c in enumerate(coords) if c}
    return LieAlgebra(alg.dim, brackets, tuple(degrees) if degrees is not None else None, alg.name)


def permutation_matrix(order: Sequence[int]) -> Matrix:
    """Matrix whose column ``a`` is ``e_{order[a]}`` (0-based ``order``)."""
    n = len(order)
    if sorted(order) != list(range(n)):
        raise ValueError("not a permutation")
    return tuple(tuple(Fraction(1) if order[c] == r else Fraction(0) for c in range(n)) for r in range(n))


def permute_basis(alg: LieAlgebra, order: Sequence[int]) -> LieAlgebra:
    """Reorder the basis: new ``e_a`` is old ``e_{order[a]}``. Degrees follow."""
    degrees = tuple(alg.degrees[o] for o in order) if alg.degrees is not None else None
    return change_of_basis(alg, permutation_matrix(order), degrees)


def center(alg: LieAlgebra) -> list[Vector]:
    """Basis of ``{z : [z, e_a] = 0 for all a}``."""
    d = alg.dim
    # row (a, k): coefficient of e_k in [z, e_a] as a linear form in z
    rows = []
    for a in range(d):
        for k in range(d):
            rows.append(tuple(alg.basis_bracket(i, a)[k] for i in range(d)))
    return linalg.nullspace(tuple(rows))


def derived_subalgebra(alg: LieAlgebra) -> list[list[Fraction]]:
    basis = [linalg.unit_vector(alg.dim, i) for i in range(alg.dim)]
    return _bracket_span(alg, basis, basis)


def has_abelian_factor(alg: LieAlgebra) -> tuple[bool, Vector | None]:
    """Whether a central vector lies outside ``[n, n]``.

    For nilpotent algebras this is the same as splitting off a 1-dimensional
    abelian ideal: any complement of such a vector containing ``[n, n]`` is
    an ideal. The witness is a central vector not in the derived algebra.
    """
    derived = derived_subalgebra(alg)
    for z in center(alg):
        if not linalg.in_span(z, derived):
            return True, z
    return False, None


def scale_basis_to_integer(alg: LieAlgebra) -> tuple[LieAlgebra, int]:
    """Rescale every basis vector by L = lcm of the constant denominators.

    ``[L X_i, L X_j] = L * c * (L X_k)`` so the new constants are ``L * c``.
    The grading is unchanged.
    """
    L = lcm(1, *(c.denominator for c in alg.structure_constants()))
    if L == 1:
        return alg, 1
    brackets = {ij: {k: L * c for k, c in row.items()} for ij, row in alg.brackets.items()}
    return LieAlgebra(alg.dim, brackets, alg.degrees, alg.name), L
