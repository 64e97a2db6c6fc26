"""Generators for the example families.

Each generator returns a graded ``LieAlgebra``; those that come with a
known automorphism also return its matrix.

The 8-dimensional two-step example is usually printed with the relation
``[Y_1, Y_2] = Z_2`` listed twice. Only ``[Y_1, Y_3] = Z_2`` is compatible
with the weights of the stated automorphism (``Y_1, Y_3`` both have weight
``lambda^-1`` and ``Z_2`` has ``lambda^-2``) and with the pairing of ``X_2``
with ``Y_3`` and ``X_3`` with ``Y_2`` in its Z-basis, so that is what is
built here.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .algebra import LieAlgebra
from .doubling import b_power, rational_structure_in_basis
from .linalg import Matrix
from .quadext import QuadExtScalar

DEFAULT_A3 = ((1, 1, 1), (1, 2, 2), (1, 2, 3))


def heisenberg3() -> LieAlgebra:
    return LieAlgebra.from_table(3, [(1, 2, 3, 1)], (1, 1, 2), "heisenberg3")


def filiform(k: int) -> LieAlgebra:
    """``[X_1, X_i] = X_{i+1}`` for ``2 <= i <= k``: k-step, dimension k + 1."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"filiform needs an integer k >= 2, got {k!r}")
    table = [(1, i, i + 1, 1) for i in range(2, k + 1)]
    degrees = (1, 1) + tuple(range(2, k + 1))
    return LieAlgebra.from_table(k + 1, table, degrees, f"filiform{k}")


def seven_dim_parameter(k: int) -> tuple[Fraction, Fraction, Fraction]:
    """``(t_k, sqrt(t_k), sqrt(1 - t_k))`` with ``t_k = 4k^2 / (k^2 + 1)^2``."""
    t = Fraction(4 * k * k, (k * k + 1) ** 2)
    return t, Fraction(2 * k, k * k + 1), Fraction(k * k - 1, k * k + 1)


def seven_dim_family(k: int) -> LieAlgebra:
    """The 7-dimensional curve ``mu_t`` at ``t = t_k``, graded by ``deg X_i = i``."""
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"seven_dim_family needs an integer k >= 2, got {k!r}")
    _, s, c = seven_dim_parameter(k)
    table = [
        (1, 2, 3, c), (1, 3, 4, 1), (1, 4, 5, s), (1, 5, 6, 1), (1, 6, 7, 1),
        (2, 3, 5, 1), (2, 4, 6, 1), (2, 5, 7, s), (3, 4, 7, c),
    ]
    return LieAlgebra.from_table(7, table, tuple(range(1, 8)), f"seven_dim_family{k}")


def eight_dim_algebra_xyz() -> LieAlgebra:
    """Basis ``X_1, X_2, X_3, Y_1, Y_2, Y_3, Z_1, Z_2``."""
    table = [(1, 2, 7, 1), (1, 3, 8, 1), (4, 5, 7, 1), (4, 6, 8, 1)]
    return LieAlgebra.from_table(8, table, (1, 1, 1, 1, 1, 1, 2, 2), "eight_dim_xyz")


# (first, second) basis indices (0-based, XYZ order) of each sum/difference pair
_EIGHT_DIM_PAIRS = ((0, 3), (1, 5), (2, 4), (6, 7))
# lambda-exponent of the first vector of each pair; the second gets the negative
EIGHT_DIM_EXPONENTS = (1, 1, -3, 2)


def eight_dim_example(a: int = 2) -> tuple[LieAlgebra, Matrix]:
    """The 8-dimensional two-step example in its Z-basis, with ``diag(B, B, B^-3, B^2)``."""
    if a < 2:
        raise ValueError("a must be >= 2")
    D = a * a - 1
    zero = QuadExtScalar.rational(0, D)
    one = QuadExtScalar.rational(1, D)
    s = QuadExtScalar.sqrt_d(D)
    cols = []
    for p, q in _EIGHT_DIM_PAIRS:
        plus = [zero] * 8
        minus = [zero] * 8
        plus[p], plus[q] = one, one
        minus[p], minus[q] = s, -s
        cols += [plus, minus]
    P = linalg.transpose(tuple(tuple(c) for c in cols))
    xyz = eight_dim_algebra_xyz()
    degrees = (1, 1, 1, 1, 1, 1, 2, 2)
    alg = rational_structure_in_basis(xyz, P, D, degrees, "eight_dim")
    M = linalg.block_diag([b_power(a, e) for e in EIGHT_DIM_EXPONENTS])
    return alg, M


def exterior_square(A: Sequence[Sequence]) -> Matrix:
    """Induced map on the wedge square, basis ``e_a ^ e_b`` with ``a < b`` in lex order.

    Entry ``((a, b), (c, d))`` is the minor ``A_ac A_bd - A_ad A_bc``.
    """
    A = linalg.matrix(A)
    n = len(A)
    pairs = list(combinations(range(n), 2))
    return tuple(
        tuple(A[a][c] * A[b][d] - A[a][d] * A[b][c] for (c, d) in pairs)
        for (a, b) in pairs
    )


def free_two_step_sums(r: int = 1, A3: Sequence[Sequence] = DEFAULT_A3) -> tuple[LieAlgebra, Matrix]:
    """``Z^3 + ... + Z^3 + wedge^2 Z^3`` with ``[v_1+..+v_r, w_1+..+w_r] = sum v_s ^ w_s``.

    Returns the algebra (dimension ``3r + 3``) and ``diag(A, ..., A, wedge^2 A)``.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be an integer >= 1, got {r!r}")
    A = linalg.matrix(A3)
    if linalg.shape(A) != (3, 3):
        raise ValueError("A3 must be 3x3")
    if abs(linalg.det(A)) != 1:
        warnings.warn("det(A3) is not +-1; the certificate will fail unimodularity", stacklevel=2)
    dim = 3 * r + 3
    w1, w2, w3 = 3 * r + 1, 3 * r + 2, 3 * r + 3
    table = []
    for s in range(r):
        b = 3 * s
        table += [(b + 1, b + 2, w1, 1), (b + 1, b + 3, w2, 1), (b + 2, b + 3, w3, 1)]
    degrees = (1,) * (3 * r) + (2, 2, 2)
    alg = LieAlgebra.from_table(dim, table, degrees, f"free_two_step{r}")
    M = linalg.block_diag([A] * r + [exterior_square(A)])
    return alg, M


CATALOG = {
    "heisenberg3": {
        "params": {},
        "provides_matrix": False,
        "provenance": "3-dimensional Heisenberg algebra h3, [X1,X2]=X3; doubling gives the minimal dimension 6",
    },
    "filiform": {
        "params": {"k": "integer >= 2"},
        "provides_matrix": False,
        "provenance": "[X1,X2]=X3, ..., [X1,Xk]=X(k+1); doubled it is k-step of dimension 2k+2",
    },
    "seven_dim_family": {
        "params": {"k": "integer >= 2"},
        "provides_matrix": False,
        "provenance": "7-dimensional curve mu_t at t_k = 4k^2/(k^2+1)^2; doubled, infinitely many 14-dimensional examples",
    },
    "eight_dim": {
        "params": {"a": "integer >= 2"},
        "provides_matrix": True,
        "provenance": "8-dimensional two-step example with automorphism diag(B, B, B^-3, B^2) in Sl(8,Z)",
    },
    "free_two_step": {
        "params": {"r": "integer >= 1"},
        "provides_matrix": True,
        "provenance": "Z^3 + ... + Z^3 + wedge^2 Z^3 of dimension 3r+3 with diag(A, ..., A, wedge^2 A), A = [[1,1,1],[1,2,2],[1,2,3]]",
    },
}


def build(name: str, k: int | None = None, r: int | None = None, a: int | None = None
          ) -> tuple[LieAlgebra, Matrix | None]:
    """Catalog entry by name; unused parameters must be left as None."""
    if name not in CATALOG:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG)}")
    allowed = set(CATALOG[name]["params"])
    given = {p for p, v in (("k", k), ("r", r), ("a", a)) if v is not None}
    if given - allowed:
        raise ValueError(f"{name} does not take parameter(s) {', '.join(sorted(given - allowed))}")
    if name == "heisenberg3":
        return heisenberg3(), None
    if name == "filiform":
        return filiform(2 if k is None else k), None
    if name == "seven_dim_family":
        return seven_dim_family(2 if k is None else k), None
    if name == "eight_dim":
        return eight_dim_example(2 if a is None else a)
    return free_two_step_sums(1 if r is None else r)
