"""Symplectic cohomology of the Milnor fibres and bigraded Hochschild
cohomology of the compactified zero fibre Y_0, by exact sector
enumeration.

Hochschild cohomology splits into sectors indexed by the finite group
ker chi.  With [x], [y], [z], [chi] the coordinate characters in the
lattice Z (+) Z/d (so [x] + [y] + [z] = [chi]) the surviving generators
are, per sector type:

  identity sector (all of x, y, z fixed), Jacobi exponents (i, j):
      even  t = 2u:    x^i y^j z^k        with i[x]+j[y]+k[z] = u[chi],
                       weight k
      odd   t = 2u+1:  z* (x) x^i y^j z^m with i[x]+j[y]+m[z] = u[chi]+[z],
                       weight m-1
  z-axis sector (only z fixed):
      even  t = 2u+2:  z^k  with (k+1)[z] = (u+1)[chi], weight k
      odd   t = 2u+3:  z* (x) z^m with m[z] = (u+1)[chi], weight m-1
  x-axis sector (only x fixed, pure power x^a in w):
      even  t = 2u+2:  x^i, i <= a-2, with (i+1)[x] = (u+1)[chi],
                       weight -1   (and symmetrically for y)
  free sector (nothing fixed):
      one class in t = 1 of weight -1.

Weights are z-weights: a z-exponent counts +1 and the dual generator z*
counts -1.  The free part of each character equation determines the
unknown exponent uniquely (all coordinate weights are positive); the
torsion part is checked exactly, so every count below is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import InsufficientRange, NotAdmissible, NotLogGeneralType
from .exactla import rational_rank
from .polynomials import (Family, InvertiblePolynomial, jacobi_basis,
                          weight_system)
from .surfaces import glue, milnor_fibre_spec
from .symmetry import (CharacterGroup, KernelElement, admissible_unfoldings,
                       character_group, fixed_subspace, ker_chi)


@dataclass
class GradedSeries:
    """Finite map degree -> dimension, complete for degrees <= t_max."""

    dims: dict
    t_max: int

    def dim(self, t):
        return self.dims.get(t, 0)

    def items(self):
        return sorted(self.dims.items())


@dataclass
class BigradedDims:
    """Finite map (degree t, weight s) -> dimension, complete for
    t <= t_max."""

    dims: dict
    t_max: int

    def dim(self, t, s):
        return self.dims.get((t, s), 0)

    def degree_total(self, t):
        return sum(v for (tt, _), v in self.dims.items() if tt == t)

    def degree_slice(self, t):
        return {s: v for (tt, s), v in self.dims.items() if tt == t}

    def items(self):
        return sorted(self.dims.items())


@dataclass(frozen=True)
class SectorContribution:
    t: int
    weight: int
    dim: int
    kind: str         # "jacobian" | "free" | "z-axis" | "x-axis" | "y-axis"
    u: int            # the pairing index: t = 2u (+1) or 2u+2 (+1)
    odd: bool


@dataclass
class SectorReport:
    gamma: KernelElement
    fixed: frozenset
    contributions: list = field(default_factory=list)


def _require_log_general_type(w):
    ws = weight_system(w)
    if ws.d0 <= 0:
        raise NotLogGeneralType("%s has d0 = %d" % (w, ws.d0))
    return ws


# ---------------------------------------------------------------------------
# symplectic cohomology

def sh_dims(w_check: InvertiblePolynomial, t_max: int) -> GradedSeries:
    """Symplectic cohomology dimensions of the Milnor fibre of
    ``w_check`` with its vanishing-cycle grading, for degrees <= t_max.

    SH is the surface cohomology plus, for every boundary component of
    winding wnd and every k >= 1, a circle's worth of classes in
    degrees -k*wnd and -k*wnd + 1.
    """
    _require_log_general_type(w_check)
    surface = glue(milnor_fibre_spec(w_check))
    dims = {}

    def add(t, n=1):
        if 0 <= t <= t_max:
            dims[t] = dims.get(t, 0) + n

    add(0)
    add(1, 2 * surface.genus + len(surface.boundaries) - 1)
    for b in surface.boundaries:
        step = -b.winding
        assert step >= 2
        k = 1
        while k * step <= t_max:
            add(k * step)
            add(k * step + 1)
            k += 1
    return GradedSeries(dims, t_max)


# ---------------------------------------------------------------------------
# Hochschild cohomology of Y_0

def _solve_exponent(cg: CharacterGroup, residual) -> Optional[int]:
    """Solve k >= 0 with k*[z] = residual in the character lattice, or
    None.  The free part pins k since [z] has positive free part."""
    d0 = cg.z.free
    if residual.free < 0 or residual.free % d0:
        return None
    k = residual.free // d0
    return k if (k * cg.z == residual) else None


def _pure_power(w: InvertiblePolynomial, var: str) -> Optional[int]:
    """Exponent a if w contains the pure monomial var^a, else None."""
    for (i, j) in w.monomials:
        if var == "x" and j == 0 and i:
            return i
        if var == "y" and i == 0 and j:
            return j
    return None


def hh_y0(w: InvertiblePolynomial, t_max: int,
          cg: CharacterGroup = None):
    """Bigraded Hochschild cohomology of Y_0 for degrees <= t_max.

    Returns (BigradedDims, [SectorReport]), one report per element of
    ker chi, with each generator tagged by its sector kind and pairing
    index.
    """
    _require_log_general_type(w)
    if cg is None:
        cg = character_group(w)
    basis = jacobi_basis(w)
    dims = {}
    reports = []

    def add(report, t, weight, kind, u, odd):
        if not (0 <= t <= t_max):
            return
        dims[(t, weight)] = dims.get((t, weight), 0) + 1
        report.contributions.append(
            SectorContribution(t, weight, 1, kind, u, odd))

    for gamma in ker_chi(w):
        fixed = fixed_subspace(w, gamma)
        report = SectorReport(gamma, fixed)
        if fixed == frozenset("xyz"):
            for u in range(t_max // 2 + 1):
                target = u * cg.chi
                for (i, j) in basis:
                    res = target - cg.monomial(i, j)
                    k = _solve_exponent(cg, res)
                    if k is not None:
                        add(report, 2 * u, k, "jacobian", u, False)
                    m = _solve_exponent(cg, res + cg.z)
                    if m is not None:
                        add(report, 2 * u + 1, m - 1, "jacobian", u, True)
        elif fixed == frozenset("z"):
            for u in range(-1, (t_max - 1) // 2 + 1):
                k = _solve_exponent(cg, (u + 1) * cg.chi - cg.z)
                if k is not None:
                    add(report, 2 * u + 2, k, "z-axis", u, False)
                m = _solve_exponent(cg, (u + 1) * cg.chi)
                if m is not None:
                    add(report, 2 * u + 3, m - 1, "z-axis", u, True)
        elif fixed == frozenset("x") or fixed == frozenset("y"):
            var = "x" if fixed == frozenset("x") else "y"
            a = _pure_power(w, var)
            cvar = cg.x if var == "x" else cg.y
            for u in range(-1, (t_max - 2) // 2 + 1):
                target = (u + 1) * cg.chi
                if target.free < 0 or target.free % cvar.free:
                    continue
                i = target.free // cvar.free - 1
                if i < 0 or (a is not None and i > a - 2):
                    continue
                if (i + 1) * cvar == target:
                    add(report, 2 * u + 2, -1, var + "-axis", u, False)
        else:
            assert fixed == frozenset()
            add(report, 1, -1, "free", -1, False)
        reports.append(report)
    return BigradedDims(dims, t_max), reports


def periodicity_params(w: InvertiblePolynomial):
    """(P, H): the table repeats as dim(t, s) = dim(t + 2P, s + H) for
    all entries with t + s > 0."""
    p, q = w.p, w.q
    if w.family is Family.LOOP:
        d = gcd(p - 1, q - 1)
        return (p - 1) * (q - 1) // d, (p * q - 1) // d
    if w.family is Family.CHAIN:
        g = gcd(p - 1, q)
        return (p - 1) * (q - 1) // g, p * q // g
    d = gcd(p, q)
    return ((p - 1) * (q - 1) - 1) // d, p * q // d


def hh_periodicity_check(w: InvertiblePolynomial, t_max: int = None) -> bool:
    """Check dim(t, s) == dim(t + 2P, s + H) for every table entry with
    t + s > 0 and both degrees within range."""
    per, shift = periodicity_params(w)
    if t_max is None:
        t_max = 4 * per + 1
    if t_max < 4 * per + 1:
        raise InsufficientRange(
            "need t_max >= %d to cover two periods" % (4 * per + 1))
    table, _ = hh_y0(w, t_max)
    for t in range(0, t_max - 2 * per + 1):
        weights = {s for (tt, s) in table.dims if tt == t}
        weights |= {s - shift for (tt, s) in table.dims if tt == t + 2 * per}
        for s in weights:
            if t + s <= 0:
                continue
            if table.dim(t, s) != table.dim(t + 2 * per, s + shift):
                return False
    return True


def untwisted(w: InvertiblePolynomial) -> bool:
    """True iff every positive-weight class in degree 2 comes from the
    identity sector's Jacobi summand at pairing index u = 1.

    (Positive z-weight k is negative weight for the deformation
    grading, so this is the condition for the degree-2 deformation
    classes to be unfolding directions.)
    """
    _require_log_general_type(w)
    _, reports = hh_y0(w, 2)
    for rep in reports:
        for c in rep.contributions:
            if c.t == 2 and c.weight > 0:
                if not (c.kind == "jacobian" and c.u == 1 and not c.odd):
                    return False
    return True


# ---------------------------------------------------------------------------
# Hochschild cohomology in degree 2 for unfolded potentials

def monomials_with_character(cg: CharacterGroup, target):
    """All (a, b, c) >= 0 with a[x] + b[y] + c[z] = target.  Finite
    because the three free parts are positive."""
    d1, d2, d0 = cg.x.free, cg.y.free, cg.z.free
    out = []
    if target.free < 0:
        return out
    for a in range(target.free // d1 + 1):
        rest1 = target.free - a * d1
        for b in range(rest1 // d2 + 1):
            rest2 = rest1 - b * d2
            if rest2 % d0:
                continue
            c = rest2 // d0
            if cg.monomial(a, b, c) == target:
                out.append((a, b, c))
    return out


def _differentiate(monos, var_idx):
    out = {}
    for exps, coeff in monos.items():
        e = exps[var_idx]
        if e:
            new = list(exps)
            new[var_idx] = e - 1
            out[tuple(new)] = out.get(tuple(new), Fraction(0)) + e * coeff
    return {k: v for k, v in out.items() if v}


def hh2_unfolded(w: InvertiblePolynomial, coefficients) -> int:
    """dim HH^2 of Y_u for the unfolded potential
    W = w + sum u_ij x^i y^j z^(w_ij), as the dimension of the
    chi-graded piece of C[x,y,z] modulo the Jacobian ideal of W.

    ``coefficients`` maps (i, j) to an exact rational; every key must
    be an admissible unfolding direction.
    """
    _require_log_general_type(w)
    cg = character_group(w)
    dirs = {(d.i, d.j): d.w for d in admissible_unfoldings(w)}
    potential = {}
    for (i, j) in w.monomials:
        potential[(i, j, 0)] = Fraction(1)
    for (i, j), coeff in coefficients.items():
        if (i, j) not in dirs:
            raise NotAdmissible("(%d, %d) is not an admissible direction"
                                % (i, j))
        coeff = Fraction(coeff)
        if coeff:
            key = (i, j, dirs[(i, j)])
            potential[key] = potential.get(key, Fraction(0)) + coeff

    targets = monomials_with_character(cg, cg.chi)
    index = {m: n for n, m in enumerate(targets)}
    rows = []
    for var_idx, cvar in ((0, cg.x), (1, cg.y), (2, cg.z)):
        deriv = _differentiate(potential, var_idx)
        if not deriv:
            continue
        for cof in monomials_with_character(cg, cvar):
            row = [Fraction(0)] * len(targets)
            for exps, coeff in deriv.items():
                prod = (exps[0] + cof[0], exps[1] + cof[1], exps[2] + cof[2])
                row[index[prod]] += coeff
            rows.append(row)
    return len(targets) - rational_rank(rows)


# ---------------------------------------------------------------------------
# the distinguished unfolding

@dataclass(frozen=True)
class MirrorUnfolding:
    """The point of the admissible unfolding space whose compactified
    fibre matches the Milnor fibre's Fukaya invariants.

    ``coefficients`` maps (i, j, w) to an integer; it is None for
    x^3 + y^2, whose distinguished point (the nodal-cubic unfolding) has
    non-rational coordinates and is recorded by its normal form only.
    """

    directions: tuple
    coefficients: Optional[tuple]
    display: str


def mirror_unfolding(w: InvertiblePolynomial) -> MirrorUnfolding:
    _require_log_general_type(w)
    dirs = tuple(admissible_unfoldings(w))

    def one_hot(i, j):
        return tuple(1 if (d.i, d.j) == (i, j) else 0 for d in dirs)

    def rewrite(text):
        return MirrorUnfolding(dirs, None, text)

    def assigned(i, j, display=None):
        coeffs = one_hot(i, j)
        assert any(coeffs), "direction (%d, %d) not admissible" % (i, j)
        if display is None:
            wd = next(d.w for d in dirs if (d.i, d.j) == (i, j))
            display = w.display() + " + " + _monomial_str(i, j, wd)
        return MirrorUnfolding(dirs, coeffs, display)

    p, q, fam = w.p, w.q, w.family
    if fam is Family.BP and (p, q) == (3, 2):
        return rewrite("x^3 + y^2 + x*y*z")    # nodal cubic
    if fam is Family.BP and (p, q) == (3, 3):
        return assigned(1, 1)
    if fam is Family.BP and (p, q) == (4, 2):
        return assigned(2, 0, "x^4 + y^2 + x*y*z")
    if fam is Family.LOOP and q == 2:
        return assigned(1, 1)
    if fam is Family.CHAIN and p == 2:
        # unfolding by y z^2; completing the square gives the x*y*z form
        return assigned(0, 1, "x^2*y + y^%d + x*y*z" % q)
    if fam is Family.CHAIN and q == 2:
        return assigned(1, 1)
    if fam is Family.BP and q == 2:
        return assigned(2, 0, "x^%d + y^2 + x*y*z" % p)
    assert len(dirs) == 1, "unexpected multi-dimensional unfolding space"
    d = dirs[0]
    return assigned(d.i, d.j)


def _monomial_str(i, j, k):
    parts = []
    for e, v in ((i, "x"), (j, "y"), (k, "z")):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append("%s^%d" % (v, e))
    return "*".join(parts) if parts else "1"
