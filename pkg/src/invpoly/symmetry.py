"""Maximal symmetry group of a two-variable invertible polynomial.

The group Gamma of diagonal transformations keeping w semi-invariant has
character lattice

    Gamma^ = (Z chi_1 + Z chi_2 + Z chi_3) / (i_k chi_1 + j_k chi_2 - chi_3)

with one relation per defining monomial.  Gamma^ is isomorphic to
Z (+) Z/d where d is the family gcd; elements are represented in Smith
normal form coordinates as a (free, torsion) pair.  The z coordinate of
the ambient threefold carries the character chi_3 - chi_1 - chi_2, so
that the product of all three coordinate characters is chi.

The admissible unfolding directions are the Jacobi monomials x^i y^j
that quasi-homogenise: there must be a positive integer w with
chi^(w-1) = t1^(w-i) t2^(w-j) as characters of Gamma.  The free part of
this equation determines w uniquely (all coordinate weights are
positive); the torsion part is then checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotLogGeneralType
from .exactla import smith_normal_form
from .polynomials import (Family, InvertiblePolynomial, family_gcd,
                          jacobi_basis, weight_system)


@dataclass(frozen=True)
class Character:
    """Element of Z (+) Z/d in canonical coordinates."""

    free: int
    tors: int
    d: int

    def __post_init__(self):
        object.__setattr__(self, "tors", self.tors % self.d if self.d > 1 else 0)

    def __add__(self, other):
        assert self.d == other.d
        return Character(self.free + other.free, self.tors + other.tors, self.d)

    def __sub__(self, other):
        assert self.d == other.d
        return Character(self.free - other.free, self.tors - other.tors, self.d)

    def __rmul__(self, n: int):
        return Character(n * self.free, n * self.tors, self.d)

    def is_zero(self):
        return self.free == 0 and self.tors == 0


@dataclass(frozen=True)
class CharacterGroup:
    """Character lattice Z (+) Z/d with the coordinate characters."""

    d: int
    x: Character
    y: Character
    z: Character
    chi: Character
    relations: tuple          # the two rows (i_k, j_k, -1)
    snf: tuple                # (s, u, v) for the 3x2 presentation matrix

    def monomial(self, a: int, b: int, c: int = 0) -> Character:
        """Character of x^a y^b z^c."""
        return a * self.x + b * self.y + c * self.z


@dataclass(frozen=True)
class KernelElement:
    """gamma = (e^{2 pi i a1}, e^{2 pi i a2}) with both defining
    monomials fixed; a1, a2 are rationals in [0, 1)."""

    a1: Fraction
    a2: Fraction


@dataclass(frozen=True)
class UnfoldingDirection:
    i: int
    j: int
    w: int


def character_group(w: InvertiblePolynomial, relation_mix=None) -> CharacterGroup:
    """Compute the character lattice in Smith normal form coordinates.

    ``relation_mix`` may be a unimodular 2x2 matrix (nested sequence)
    replacing the relation set by an equivalent one; the resulting group
    is the same and downstream results must not depend on the choice.
    """
    (i1, j1), (i2, j2) = w.monomials
    relations = [[i1, j1, -1], [i2, j2, -1]]
    if relation_mix is not None:
        (a, b), (c, d_) = relation_mix
        assert abs(a * d_ - b * c) == 1, "relation mix must be unimodular"
        relations = [
            [a * relations[0][k] + b * relations[1][k] for k in range(3)],
            [c * relations[0][k] + d_ * relations[1][k] for k in range(3)],
        ]
    # presentation matrix of the cokernel: generators chi_1, chi_2, chi_3
    m = [[relations[0][k], relations[1][k]] for k in range(3)]
    s, u, v = smith_normal_form(m)
    assert s[0][0] == 1, "presentation should have a unit invariant factor"
    d = s[1][1]
    if d == 0:
        raise AssertionError("torsion rank overflow: matrix not invertible")

    def coords(vec):
        img = [sum(u[r][k] * vec[k] for k in range(3)) for r in range(3)]
        return Character(img[2], img[1], d if d > 1 else 1)

    cx, cy, cchi = coords([1, 0, 0]), coords([0, 1, 0]), coords([0, 0, 1])
    ws = weight_system(w)
    if cchi.free < 0:
        cx = Character(-cx.free, cx.tors, cx.d)
        cy = Character(-cy.free, cy.tors, cy.d)
        cchi = Character(-cchi.free, cchi.tors, cchi.d)
    cz = cchi - cx - cy
    assert (cx.free, cy.free, cz.free, cchi.free) == (ws.d1, ws.d2, ws.d0, ws.h)
    assert d == family_gcd(w) or (d == 1 and family_gcd(w) == 1)
    return CharacterGroup(d=max(d, 1), x=cx, y=cy, z=cz, chi=cchi,
                          relations=tuple(map(tuple, relations)),
                          snf=(tuple(map(tuple, s)),
                               tuple(map(tuple, u)),
                               tuple(map(tuple, v))))


def ker_chi(w: InvertiblePolynomial):
    """All diagonal symmetries fixing both monomials of w.

    Solves A (a1, a2)^T in Z^2 over rationals in [0, 1); there are
    exactly |det A| solutions.
    """
    m = w.matrix
    det = m.det()
    n = abs(det)
    seen = set()
    out = []
    for uu in range(n):
        for vv in range(n):
            a1 = Fraction(m.a22 * uu - m.a12 * vv, det) % 1
            a2 = Fraction(-m.a21 * uu + m.a11 * vv, det) % 1
            if (a1, a2) not in seen:
                seen.add((a1, a2))
                out.append(KernelElement(a1, a2))
    assert len(out) == n
    return sorted(out, key=lambda g: (g.a1, g.a2))


def fixed_subspace(w: InvertiblePolynomial, gamma: KernelElement) -> frozenset:
    """Coordinates of the ambient (x, y, z)-space fixed by gamma.

    x is fixed iff a1 is integral, y iff a2 is, and z iff a1 + a2 is:
    gamma acts on z through the inverse of its action on xy.
    """
    fixed = set()
    if gamma.a1 == 0:
        fixed.add("x")
    if gamma.a2 == 0:
        fixed.add("y")
    if (gamma.a1 + gamma.a2).denominator == 1:
        fixed.add("z")
    return frozenset(fixed)


def admissible_unfoldings(w: InvertiblePolynomial, cg: CharacterGroup = None):
    """Jacobi directions (i, j) admitting a quasi-homogenisation
    x^i y^j z^w, sorted by (i, j).

    The free part of the character equation gives the candidate
    w = (h - i d1 - j d2) / d0, which must be a positive integer; the
    torsion part (w-1) chi = (w-i) chi_x + (w-j) chi_y is then checked
    in the character lattice.
    """
    ws = weight_system(w)
    if ws.d0 <= 0:
        raise NotLogGeneralType("admissible unfoldings need d0 > 0")
    if cg is None:
        cg = character_group(w)
    out = []
    for (i, j) in jacobi_basis(w):
        num = ws.h - i * ws.d1 - j * ws.d2
        if num <= 0 or num % ws.d0:
            continue
        wij = num // ws.d0
        lhs = (wij - 1) * cg.chi
        rhs = (wij - i) * cg.x + (wij - j) * cg.y
        if lhs == rhs:
            out.append(UnfoldingDirection(i, j, wij))
    return out


def u_plus_dimension(w: InvertiblePolynomial) -> int:
    return len(admissible_unfoldings(w))
