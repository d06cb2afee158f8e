"""Line-field invariants of graded surfaces and the graded
symplectomorphism decision.

A line field on a compact surface with boundary is classified up to the
action of the mapping class group by: the winding numbers around the
boundary components, the mod-2 winding class sigma, and -- when sigma
vanishes and every boundary winding is 2 mod 4 -- the Arf invariant of
the induced quadratic form on the capped-off surface.  In genus one the
Arf data is replaced by the gcd invariant

    A~ = gcd{w(alpha), w(beta), w(bd_1) + 2, ..., w(bd_b) + 2}.

The Arf invariant is computed two independent ways: as the sign of the
Gauss sum of the Z/2 quadratic form (brute force), and from an even
integer lift f via det f mod 8 (+-1 -> 0, +-3 -> 3).  The even lifts
for the Milnor fibres of the four matched families are built from
lower-triangular all-ones blocks U_k:

    f_chain  = U_{q-1} (x) U_{qn} + transpose           (x^{qn+1} + x y^q)
    f_loop   = block matrix with corner 2 Id_{n(q-1)}   (x^{(q-1)n+1} y + y^q x)
    f_bp     = U_{p-1} (x) U_{np-2} + transpose         (x^p + y^{np})
    f_chain' = f_loop-style blocks of size n(p-1)-1,
               top/left p-2 rows and columns removed    (x^p + x y^{n(p-1)})
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import DegenerateForm, GenusZero, TooLarge
from .exactla import bareiss_det, kron
from .surfaces import (GluedSurface, bp_fibre_spec, chain_fibre_spec, glue,
                       loop_fibre_spec)


# ---------------------------------------------------------------------------
# even integer lifts

def _u_matrix(n):
    return [[1 if i >= j else 0 for j in range(n)] for i in range(n)]


def _symmetrized(k):
    n = len(k)
    return [[k[i][j] + k[j][i] for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class FMatrix:
    """Symmetric integer matrix with diagonal in {0, 2} and
    off-diagonal entries in {0, 1}: an even lift of a Z/2 quadratic
    form together with its intersection pairing."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for i in range(n):
            if len(rows[i]) != n:
                raise ValueError("matrix must be square")
            if rows[i][i] not in (0, 2):
                raise ValueError("diagonal entries must be 0 or 2")
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix must be symmetric")
                if i != j and rows[i][j] not in (0, 1):
                    raise ValueError("off-diagonal entries must be 0 or 1")

    @property
    def dim(self):
        return len(self.entries)

    def det(self):
        return bareiss_det([list(r) for r in self.entries])


def _block_bordered(corner_size, inner, blocks):
    """Block matrix [[2I, I, ..., I], [I, ..inner..], ...] with
    `blocks` identity blocks of size `corner_size` along the first block
    row and column."""
    n = corner_size + len(inner)
    f = [[0] * n for _ in range(n)]
    for i in range(corner_size):
        f[i][i] = 2
    for b in range(blocks):
        off = corner_size * (1 + b)
        for i in range(corner_size):
            f[i][off + i] = 1
            f[off + i][i] = 1
    for i in range(len(inner)):
        for j in range(len(inner)):
            f[corner_size + i][corner_size + j] = inner[i][j]
    return f


def f_matrix_chain(n, q) -> FMatrix:
    k = kron(_u_matrix(q - 1), _u_matrix(q * n))
    return FMatrix(_symmetrized(k))


def f_matrix_loop(n, q) -> FMatrix:
    s = n * (q - 1)
    inner = _symmetrized(kron(_u_matrix(q - 1), _u_matrix(s)))
    return FMatrix(_block_bordered(s, inner, q - 1))


def f_matrix_bp(n, p) -> FMatrix:
    k = kron(_u_matrix(p - 1), _u_matrix(n * p - 2))
    return FMatrix(_symmetrized(k))


def f_matrix_chain_prime(n, p) -> FMatrix:
    s = n * (p - 1) - 1
    if s < 1:
        return FMatrix(())
    inner = _symmetrized(kron(_u_matrix(p - 1), _u_matrix(s)))
    full = _block_bordered(s, inner, p - 1)
    cut = p - 2
    return FMatrix([row[cut:] for row in full[cut:]])


# ---------------------------------------------------------------------------
# Arf invariant, two routes

def arf_det(f: FMatrix) -> int:
    """Arf invariant from the determinant of the even lift.

    det f mod 8 is +-1 for Arf 0 and +-3 for Arf 1; an even determinant
    means the underlying pairing is degenerate.
    """
    d = f.det() % 8
    if d in (1, 7):
        return 0
    if d in (3, 5):
        return 1
    raise DegenerateForm("det = %d mod 8, form is degenerate" % d)


@dataclass(frozen=True)
class QuadraticFormZ2:
    """Quadratic form on (Z/2)^dim: values on basis vectors plus the
    polar intersection pairing, extended by
    q(a + b) = q(a) + q(b) + (a . b)."""

    diag: tuple               # q(e_i) in {0, 1}
    pairing: tuple            # symmetric 0/1 matrix, zero diagonal

    def __post_init__(self):
        diag = tuple(int(v) % 2 for v in self.diag)
        pairing = tuple(tuple(int(v) % 2 for v in row) for row in self.pairing)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "pairing", pairing)
        n = len(diag)
        assert len(pairing) == n
        for i in range(n):
            assert len(pairing[i]) == n and pairing[i][i] == 0
            for j in range(n):
                assert pairing[i][j] == pairing[j][i]

    @property
    def dim(self):
        return len(self.diag)

    @classmethod
    def from_f_matrix(cls, f: FMatrix):
        n = f.dim
        return cls(tuple(f.entries[i][i] // 2 for i in range(n)),
                   tuple(tuple(f.entries[i][j] % 2 if i != j else 0
                               for j in range(n)) for i in range(n)))

    def value(self, x: int) -> int:
        """q on the vector with bitmask x."""
        v = 0
        bits = [i for i in range(self.dim) if (x >> i) & 1]
        for idx, i in enumerate(bits):
            v ^= self.diag[i]
            for j in bits[idx + 1:]:
                v ^= self.pairing[i][j]
        return v


def arf_gauss_sum(q: QuadraticFormZ2) -> int:
    """Arf invariant as the sign of GS(q) = sum_x (-1)^(q(x)).

    Enumerates all 2^dim vectors by Gray code; refuses dim > 20.  If
    |GS| != 2^(dim/2) the form is degenerate.
    """
    n = q.dim
    if n > 20:
        raise TooLarge("Gauss sum over 2^%d vectors refused" % n)
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if q.pairing[i][j]:
                rows[i] |= 1 << j
    gs = 1          # x = 0 contributes (+1)
    val = 0
    x = 0
    for t in range(1, 1 << n):
        i = (t & -t).bit_length() - 1
        # flipping bit i changes q by diag[i] + <row_i, x>
        val ^= q.diag[i] ^ ((rows[i] & x).bit_count() & 1)
        x ^= 1 << i
        gs += 1 - 2 * val
    if n % 2 or abs(gs) != 1 << (n // 2):
        raise DegenerateForm("Gauss sum %d is not +-2^(dim/2)" % gs)
    return 0 if gs > 0 else 1


# ---------------------------------------------------------------------------
# line-field invariants of the glued fibres

def sigma_invariant(basis_windings) -> int:
    """0 iff the mod-2 winding class vanishes on the given generating
    set of H_1, i.e. iff every winding is even."""
    return 0 if all(v % 2 == 0 for v in basis_windings) else 1


def a_tilde(alpha: int, beta: int, boundary_windings) -> int:
    """Genus-one invariant: gcd of two basis windings and all boundary
    windings shifted by 2.  gcd of all zeros is 0."""
    g = gcd(abs(alpha), abs(beta))
    for wnd in boundary_windings:
        g = gcd(g, abs(wnd + 2))
    return g


def arf_hypothesis(sigma: int, boundary_windings) -> bool:
    """The capped-off spin structure exists iff sigma = 0 and every
    boundary winding is 2 mod 4."""
    return sigma == 0 and all(v % 4 == 2 for v in boundary_windings)


@dataclass(frozen=True)
class LineFieldInvariants:
    genus: int
    boundary_windings: tuple
    sigma: int
    arf: Optional[int] = None
    a_tilde: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "boundary_windings",
                           tuple(sorted(self.boundary_windings)))
        if self.arf is not None:
            assert arf_hypothesis(self.sigma, self.boundary_windings)
        if self.a_tilde is not None:
            assert self.genus == 1


def _fibre_arf(family, p, q, windings):
    """Arf invariant of the fibre's line field, via the explicit even
    lifts of the matched families.  Returns None when the fibre is not
    of a matched shape (no comparison in range ever needs that case)."""
    if not arf_hypothesis(0, windings):
        return None
    try:
        if family == "loop":
            hi, lo = max(p, q), min(p, q)
            if (hi - 1) % (lo - 1) == 0:
                return arf_det(f_matrix_loop((hi - 1) // (lo - 1), lo))
        elif family == "chain":
            if (p - 1) % q == 0:
                return arf_det(f_matrix_chain((p - 1) // q, q))
            if q % (p - 1) == 0:
                return arf_det(f_matrix_chain_prime(q // (p - 1), p))
        elif family == "bp":
            hi, lo = max(p, q), min(p, q)
            if hi % lo == 0:
                return arf_det(f_matrix_bp(hi // lo, lo))
    except DegenerateForm:
        return None
    return None


_FIBRE_SPECS = {"loop": loop_fibre_spec, "chain": chain_fibre_spec,
                "bp": bp_fibre_spec}


def fibre_invariants(family: str, p: int, q: int) -> LineFieldInvariants:
    """Line-field fingerprint of the Milnor fibre of the glued
    polynomial: loop = x^p y + y^q x, chain = x^p + x y^q,
    bp = x^p + y^q.

    The homology basis consists of vanishing cycles, which all wind 0,
    so sigma vanishes and, in genus one, A~ = gcd of the boundary
    windings shifted by 2.
    """
    surface = glue(_FIBRE_SPECS[family](p, q))
    windings = surface.boundary_windings()
    sigma = sigma_invariant([0] * first_homology_rank(surface))
    arf = at = None
    if surface.genus == 1:
        at = a_tilde(0, 0, windings)
    elif surface.genus >= 2:
        arf = _fibre_arf(family, p, q, windings)
    return LineFieldInvariants(surface.genus, windings, sigma, arf, at)


def first_homology_rank(surface: GluedSurface) -> int:
    return 2 * surface.genus + len(surface.boundaries) - 1


def graded_symplectomorphic(inv1: LineFieldInvariants,
                            inv2: LineFieldInvariants) -> bool:
    """Decide whether two graded surfaces admit a symplectomorphism
    matching the line fields.

    Requires equal genus, boundary count, and boundary winding
    multisets; then A~ in genus one, or sigma (and Arf, when the
    capped-off spin structures exist and both values are known) in
    genus at least two.
    """
    if inv1.genus == 0 or inv2.genus == 0:
        raise GenusZero("criteria apply to genus >= 1")
    if inv1.genus != inv2.genus:
        return False
    if inv1.boundary_windings != inv2.boundary_windings:
        return False
    if inv1.genus == 1:
        return inv1.a_tilde == inv2.a_tilde
    if inv1.sigma != inv2.sigma:
        return False
    if (arf_hypothesis(inv1.sigma, inv1.boundary_windings)
            and inv1.arf is not None and inv2.arf is not None):
        return inv1.arf == inv2.arf
    return True
