"""Two-variable invertible polynomials.

A polynomial ``w = x^{a11} y^{a12} + x^{a21} y^{a22}`` with invertible
exponent matrix and isolated singularities (of itself and of its
transpose) falls, up to permuting variables and monomials, into one of
three atomic shapes:

* loop            ``x^p y + y^q x``      matrix [[p, 1], [1, q]]
* chain           ``x^p y + y^q``        matrix [[p, 1], [0, q]]
* Brieskorn-Pham  ``x^p + y^q``          matrix [[p, 0], [0, q]]

with p, q >= 2 throughout.  Loop and Brieskorn-Pham polynomials are
symmetric under swapping the variables, so they are normalized to
p >= q; a chain is genuinely asymmetric and keeps its (p, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .errors import NotInvertible, NotIsolated, Unrecognized


class Family(str, Enum):
    LOOP = "loop"
    CHAIN = "chain"
    BP = "bp"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ExponentMatrix:
    """2x2 exponent matrix with non-negative integer entries."""

    a11: int
    a12: int
    a21: int
    a22: int

    def __post_init__(self):
        for e in (self.a11, self.a12, self.a21, self.a22):
            if not isinstance(e, int) or e < 0:
                raise ValueError("exponents must be non-negative integers")

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def rows(self):
        return ((self.a11, self.a12), (self.a21, self.a22))

    def transposed(self) -> "ExponentMatrix":
        return ExponentMatrix(self.a11, self.a21, self.a12, self.a22)

    def swap_rows(self) -> "ExponentMatrix":
        return ExponentMatrix(self.a21, self.a22, self.a11, self.a12)

    def swap_cols(self) -> "ExponentMatrix":
        return ExponentMatrix(self.a12, self.a11, self.a22, self.a21)


@dataclass(frozen=True)
class WeightSystem:
    """Weight system (d0, d1, d2; h): w(t^d1 x, t^d2 y) = t^h w(x, y),
    d0 = h - d1 - d2, with gcd(d1, d2, h) = 1."""

    d0: int
    d1: int
    d2: int
    h: int

    def __post_init__(self):
        assert self.d0 == self.h - self.d1 - self.d2
        assert gcd(gcd(self.d1, self.d2), self.h) == 1


@dataclass(frozen=True)
class InvertiblePolynomial:
    family: Family
    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise NotIsolated("exponents must be integers")
        if self.p < 2 or self.q < 2:
            raise NotIsolated(
                "%s polynomial needs p, q >= 2, got (%d, %d)"
                % (self.family, self.p, self.q))
        if self.family in (Family.LOOP, Family.BP) and self.p < self.q:
            # symmetric families are stored with p >= q
            p, q = self.q, self.p
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)

    @property
    def matrix(self) -> ExponentMatrix:
        p, q = self.p, self.q
        if self.family is Family.LOOP:
            return ExponentMatrix(p, 1, 1, q)
        if self.family is Family.CHAIN:
            return ExponentMatrix(p, 1, 0, q)
        return ExponentMatrix(p, 0, 0, q)

    @property
    def monomials(self):
        """Exponent vectors of the two defining monomials."""
        return self.matrix.rows()

    @property
    def log_general_type(self) -> bool:
        """d0 > 0.  Fails only for x^2 + y^2."""
        return not (self.family is Family.BP and self.p == 2 and self.q == 2)

    def display(self) -> str:
        def mono(i, j):
            parts = []
            if i:
                parts.append("x" if i == 1 else "x^%d" % i)
            if j:
                parts.append("y" if j == 1 else "y^%d" % j)
            return "*".join(parts)
        return " + ".join(mono(i, j) for i, j in self.monomials)

    def __str__(self):
        return "%s(%d,%d)" % (self.family, self.p, self.q)


def classify(m) -> InvertiblePolynomial:
    """Classify an exponent matrix into its normalized atomic family.

    Accepts an :class:`ExponentMatrix` or any 2x2 nested sequence.  Row
    swaps (reordering monomials) and simultaneous column swaps (renaming
    variables) are applied to reach a normal form.
    """
    if not isinstance(m, ExponentMatrix):
        (a, b), (c, d) = m
        m = ExponentMatrix(a, b, c, d)
    if m.det() == 0:
        raise NotInvertible("exponent matrix %s is singular" % (m.rows(),))

    candidates = [m, m.swap_rows(), m.swap_cols(), m.swap_rows().swap_cols()]
    for cand in candidates:
        if cand.a12 == 1 and cand.a21 == 1:
            return InvertiblePolynomial(Family.LOOP, cand.a11, cand.a22)
        if cand.a12 == 0 and cand.a21 == 0:
            return InvertiblePolynomial(Family.BP, cand.a11, cand.a22)
        if cand.a12 == 1 and cand.a21 == 0:
            return InvertiblePolynomial(Family.CHAIN, cand.a11, cand.a22)
    raise Unrecognized(
        "matrix %s is not an atomic two-variable shape" % (m.rows(),))


def transpose(w: InvertiblePolynomial) -> InvertiblePolynomial:
    """Transpose: the polynomial of the transposed exponent matrix.

    Loops and Brieskorn-Pham polynomials are self-transpose; the
    transpose of the chain x^p y + y^q is x^p + x y^q, which normalizes
    to the chain x^q y + y^p.
    """
    return classify(w.matrix.transposed())


def weight_system(w: InvertiblePolynomial) -> WeightSystem:
    """Reduced weight system of the polynomial.

    loop:   ((q-1)/d, (p-1)/d; (pq-1)/d)   d = gcd(p-1, q-1)
    chain:  ((q-1)/d, p/d;     pq/d)       d = gcd(p, q-1)
    bp:     (q/d,     p/d;     pq/d)       d = gcd(p, q)
    """
    p, q = w.p, w.q
    if w.family is Family.LOOP:
        d = gcd(p - 1, q - 1)
        d1, d2, h = (q - 1) // d, (p - 1) // d, (p * q - 1) // d
    elif w.family is Family.CHAIN:
        d = gcd(p, q - 1)
        d1, d2, h = (q - 1) // d, p // d, p * q // d
    else:
        d = gcd(p, q)
        d1, d2, h = q // d, p // d, p * q // d
    return WeightSystem(h - d1 - d2, d1, d2, h)


def family_gcd(w: InvertiblePolynomial) -> int:
    """The gcd d by which the naive weights are reduced; it is also the
    order of the torsion part of the character lattice."""
    if w.family is Family.LOOP:
        return gcd(w.p - 1, w.q - 1)
    if w.family is Family.CHAIN:
        return gcd(w.p, w.q - 1)
    return gcd(w.p, w.q)


def milnor_number(w: InvertiblePolynomial) -> int:
    if w.family is Family.LOOP:
        return w.p * w.q
    if w.family is Family.CHAIN:
        return w.p * w.q - w.q + 1
    return (w.p - 1) * (w.q - 1)


def jacobi_basis(w: InvertiblePolynomial):
    """Monomial exponents (i, j) spanning the Jacobi algebra, in
    lexicographic order.

    loop:   x^i y^j,  0 <= i <= p-1, 0 <= j <= q-1
    chain:  x^i y^j,  0 <= i <= p-2, 0 <= j <= q-1,  plus x^{p-1}
    bp:     x^i y^j,  0 <= i <= p-2, 0 <= j <= q-2
    """
    p, q = w.p, w.q
    if w.family is Family.LOOP:
        basis = [(i, j) for i in range(p) for j in range(q)]
    elif w.family is Family.CHAIN:
        basis = [(i, j) for i in range(p - 1) for j in range(q)]
        basis.append((p - 1, 0))
    else:
        basis = [(i, j) for i in range(p - 1) for j in range(q - 1)]
    return sorted(basis)
