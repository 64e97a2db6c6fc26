"""Univariate integer polynomials and exact real-root counting.

Coefficients are stored constant term first. Remainder sequences use
primitive pseudo-remainders so every intermediate stays in Z[x].
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from . import linalg


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        out = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            elif isinstance(c, str):
                c = int(c)
            elif not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"bad coefficient {c!r}")
            out.append(c)
        self.coeffs: tuple[int, ...] = _trim(out)

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> IntPolynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            body = str(a) if (a != 1 or e == 0) else ""
            terms.append((sign, body + mono))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, t in terms[1:]:
            out += f" {s} {t}"
        return out

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        out = IntPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def reverse(self) -> IntPolynomial:
        """``x^deg * p(1/x)``."""
        return IntPolynomial(reversed(self.coeffs))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPolynomial:
        """Divide by the content and make the leading coefficient positive."""
        g = self.content()
        if g == 0:
            return self
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def sign_at(self, x) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def sign_at_infinity(self, positive: bool) -> int:
        if not self.coeffs:
            return 0
        s = 1 if self.leading > 0 else -1
        if not positive and self.degree % 2:
            s = -s
        return s


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """``prem(a, b)``: remainder of ``lc(b)^(deg a - deg b + 1) * a`` by b."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    r = list(a.coeffs)
    db, lb = b.degree, b.leading
    delta = a.degree - db + 1
    if delta <= 0:
        return a
    for _ in range(delta):
        r = [c * lb for c in r]
    while len(r) - 1 >= db and any(r):
        shift = len(r) - 1 - db
        f = r[-1] // lb
        for i, c in enumerate(b.coeffs):
            r[i + shift] -= f * c
        r = list(_trim(r))
    return IntPolynomial(r)


def divmod_exact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Quotient ``a / b`` when it is known to lie in Z[x]; raises otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    r = [Fraction(c) for c in a.coeffs]
    q = [Fraction(0)] * max(a.degree - b.degree + 1, 0)
    lb = b.leading
    while len(r) - 1 >= b.degree and any(r):
        shift = len(r) - 1 - b.degree
        f = r[-1] / lb
        q[shift] = f
        for i, c in enumerate(b.coeffs):
            r[i + shift] -= f * c
        while r and r[-1] == 0:
            r.pop()
    if any(r):
        raise ValueError(f"{b} does not divide {a}")
    if any(x.denominator != 1 for x in q):
        raise ValueError("quotient is not integral")
    return IntPolynomial(int(x) for x in q)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, r.primitive()
    if a.is_zero():
        return a
    return a.primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """``p / gcd(p, p')``: same distinct roots, each simple."""
    if p.degree <= 0:
        return p
    g = poly_gcd(p, p.derivative())
    return divmod_exact(p, g).primitive() if g.degree > 0 else p.primitive()


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: ``p = content * prod f_i ** i`` with squarefree coprime ``f_i``."""
    p = p.primitive()
    if p.degree <= 0:
        return []
    out = []
    a = poly_gcd(p, p.derivative())
    b = divmod_exact(p, a)
    c = divmod_exact(p.derivative(), a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b_next = divmod_exact(b, a)
        c = divmod_exact(d, a)
        if a.degree > 0:
            out.append((a, i))
        b = b_next
        d = c - b.derivative()
        i += 1
    return out


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain with remainders scaled by positive factors only."""
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        a, b = seq[-2], seq[-1]
        r = pseudo_remainder(a, b)
        # prem multiplies by lc(b)^delta; undo a negative factor to keep signs honest
        delta = a.degree - b.degree + 1
        if b.leading < 0 and delta % 2:
            r = -r
        g = r.content()
        r = IntPolynomial(-(c // g) for c in r.coeffs) if g else r
        seq.append(r)
    return [s for s in seq if not s.is_zero()]


def _variations(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for x, y in zip(nz, nz[1:]) if x != y)


def sign_variations(seq: Sequence[IntPolynomial], x) -> int:
    """Sign changes of the chain at x; ``x`` may be ``+inf``/``-inf`` floats."""
    if isinstance(x, float) and x in (float("inf"), float("-inf")):
        return _variations(s.sign_at_infinity(x > 0) for s in seq)
    return _variations(s.sign_at(x) for s in seq)


def count_real_roots(p: IntPolynomial, lo=None, hi=None) -> int:
    """Distinct real roots of p in the open interval (lo, hi).

    ``None`` bounds mean infinity. Roots sitting exactly on a finite
    endpoint are divided out first so Sturm's theorem applies as stated.
    """
    p = squarefree_part(p)
    if p.degree <= 0:
        return 0
    for bound in (lo, hi):
        if bound is not None and p(bound) == 0:
            b = Fraction(bound)
            p = divmod_exact(p, IntPolynomial([-b.numerator, b.denominator])).primitive()
            if p.degree <= 0:
                return 0
    seq = sturm_sequence(p)
    a = float("-inf") if lo is None else lo
    b = float("inf") if hi is None else hi
    return sign_variations(seq, a) - sign_variations(seq, b)


def count_real_roots_with_multiplicity(p: IntPolynomial, lo=None, hi=None) -> int:
    return sum(m * count_real_roots(f, lo, hi) for f, m in squarefree_decomposition(p))


def isolate_root(p: IntPolynomial, lo: Fraction, hi: Fraction,
                 width: Fraction = Fraction(1, 1024)) -> tuple[Fraction, Fraction]:
    """Bisect (lo, hi) down to an interval of at most ``width`` holding a root of p.

    Assumes at least one root in the open interval. A degenerate ``(r, r)``
    is returned when a midpoint hits a root exactly.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    sq = squarefree_part(p)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if sq(mid) == 0:
            return mid, mid
        if count_real_roots(sq, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def sylvester_matrix(p: IntPolynomial, q: IntPolynomial) -> linalg.Matrix:
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append(tuple([0] * i + pc + [0] * (size - m - 1 - i)))
    for i in range(m):
        rows.append(tuple([0] * i + qc + [0] * (size - n - 1 - i)))
    return tuple(rows)


def resultant(p: IntPolynomial, q: IntPolynomial) -> int:
    """``Res(p, q) = lc(p)^deg q * prod_{p(a)=0} q(a)`` via the Sylvester determinant."""
    if p.is_zero() or q.is_zero():
        return 0
    if p.degree == 0:
        return p.leading ** q.degree
    if q.degree == 0:
        return q.leading ** p.degree
    return int(linalg.det(sylvester_matrix(p, q)))


def interpolate(nodes: Sequence[int], values: Sequence[int]) -> list[Fraction]:
    """Coefficients (constant first) of the unique polynomial through the points.

    Newton divided differences, then expansion of the Newton form.
    """
    n = len(nodes)
    dd = [Fraction(v) for v in values]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level])
    coeffs = [Fraction(0)] * n
    coeffs[0] = dd[n - 1]
    # Horner on the Newton form: c = c * (x - x_i) + dd[i]
    deg = 0
    for i in range(n - 2, -1, -1):
        xi = nodes[i]
        deg += 1
        for t in range(deg, 0, -1):
            coeffs[t] = coeffs[t - 1] - xi * coeffs[t]
        coeffs[0] = -xi * coeffs[0] + dd[i]
    return coeffs


def integer_nodes(count: int) -> list[int]:
    """0, 1, -1, 2, -2, ..."""
    out = [0]
    k = 1
    while len(out) < count:
        out.append(k)
        if len(out) < count:
            out.append(-k)
        k += 1
    return out
