"""Surfaces glued from columns of cylinders.

A column A(l, r; m) is m disjoint cylinders, each carrying l marked
points on its left boundary and r on its right, indexed globally
0 .. m*r-1 top to bottom.  Columns are arranged in a cycle; the
permutation sigma_i attaches a strip from right mark j of column i to
left mark sigma_i(j) of column i+1 (sizes must agree: r_i m_i =
l_{i+1} m_{i+1}).

Boundary components along a seam are the cycles of

    sigma_i^{-1} tau_l sigma_i tau_r

where tau_r rotates the right marks of each cylinder down by one and
tau_l rotates the left marks of each cylinder of the next column up by
one.  The Euler characteristic is -sum r_i m_i, and the line field
which is horizontal on the cylinders and parallel to the boundary on
the strips winds -2 * (cycle length) around each boundary component, so
that the total boundary winding is 2 * chi (the index formula for line
fields with boundary).

The Milnor fibres of two-variable invertible polynomials are produced
by three fixed recipes:

    loop  x^p y + y^q x : A(p-1,1;q-1), A(q-1,p-1;1), A(1,q-1;p-1)
    chain x^p + x y^q   : A(p-1,1;q-1), A(q-1,(p-1)(q-1);1)
    bp    x^p + y^q     : one self-glued cylinder on (p-1)(q-1)-1 marks

with the gluing permutations implemented below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotLogGeneralType, SpecMismatch
from .polynomials import Family, InvertiblePolynomial


# ---------------------------------------------------------------------------
# permutations as tuples of images on [0, n)

def perm_inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def perm_cycles(p):
    """Cycle decomposition, each cycle starting at its smallest element."""
    seen = [False] * len(p)
    cycles = []
    for s in range(len(p)):
        if seen[s]:
            continue
        c = [s]
        seen[s] = True
        t = p[s]
        while t != s:
            c.append(t)
            seen[t] = True
            t = p[t]
        cycles.append(tuple(c))
    return cycles


def is_permutation(p, n):
    return len(p) == n and sorted(p) == list(range(n))


def block_rotation(blocks, size, shift):
    """Rotate positions within each of `blocks` consecutive blocks."""
    if size == 0:
        return ()
    return tuple(k * size + (pos + shift) % size
                 for k in range(blocks) for pos in range(size))


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CylinderColumn:
    ell: int
    r: int
    m: int

    def __post_init__(self):
        if min(self.ell, self.r, self.m) < 1:
            raise SpecMismatch("column sizes must be positive")


@dataclass(frozen=True)
class GluingSpec:
    columns: tuple
    perms: tuple

    def __post_init__(self):
        cols = tuple(self.columns)
        perms = tuple(tuple(p) for p in self.perms)
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "perms", perms)
        n = len(cols)
        if n == 0 or len(perms) != n:
            raise SpecMismatch("need one permutation per column")
        for i, col in enumerate(cols):
            nxt = cols[(i + 1) % n]
            if col.r * col.m != nxt.ell * nxt.m:
                raise SpecMismatch(
                    "seam %d: r*m = %d does not match next column's l*m = %d"
                    % (i, col.r * col.m, nxt.ell * nxt.m))
            if not is_permutation(perms[i], col.r * col.m):
                raise SpecMismatch("sigma_%d is not a permutation of %d marks"
                                   % (i, col.r * col.m))

    @property
    def n_columns(self):
        return len(self.columns)

    def total_strips(self):
        return sum(c.r * c.m for c in self.columns)


@dataclass(frozen=True)
class BoundaryComponent:
    seam: int
    cycle: tuple
    winding: int


@dataclass(frozen=True)
class GluedSurface:
    spec: GluingSpec
    genus: int
    euler_char: int
    boundaries: tuple

    def boundary_windings(self):
        return tuple(sorted(b.winding for b in self.boundaries))


def _seam_boundary_perm(spec, i):
    col = spec.columns[i]
    nxt = spec.columns[(i + 1) % spec.n_columns]
    sigma = spec.perms[i]
    tau_r = block_rotation(col.m, col.r, -1)
    tau_l = block_rotation(nxt.m, nxt.ell, +1)
    inv = perm_inverse(sigma)
    return tuple(inv[tau_l[sigma[tau_r[x]]]] for x in range(len(sigma)))


def _is_connected(spec):
    # union-find over cylinders, joined by strips
    offsets = []
    total = 0
    for col in spec.columns:
        offsets.append(total)
        total += col.m
    parent = list(range(total))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        parent[ra] = rb

    n = spec.n_columns
    for i, col in enumerate(spec.columns):
        nxt = spec.columns[(i + 1) % n]
        for j, tgt in enumerate(spec.perms[i]):
            union(offsets[i] + j // col.r,
                  offsets[(i + 1) % n] + tgt // nxt.ell)
    return len({find(a) for a in range(total)}) == 1


def glue(spec: GluingSpec) -> GluedSurface:
    """Glue the columns and return the resulting surface.

    Raises SpecMismatch if the size conditions fail or the result is
    disconnected (genus would be meaningless).
    """
    if not _is_connected(spec):
        raise SpecMismatch("glued surface is disconnected")
    boundaries = []
    for i in range(spec.n_columns):
        for cyc in perm_cycles(_seam_boundary_perm(spec, i)):
            boundaries.append(BoundaryComponent(i, cyc, -2 * len(cyc)))
    chi = -spec.total_strips()
    b = len(boundaries)
    assert (2 - b - chi) % 2 == 0
    genus = (2 - b - chi) // 2
    assert genus >= 0
    return GluedSurface(spec, genus, chi, tuple(boundaries))


# ---------------------------------------------------------------------------
# Milnor fibre recipes (parameters are those of the polynomial glued,
# i.e. of the transpose-side polynomial)

def loop_fibre_spec(p, q) -> GluingSpec:
    """Fibre of x^p y + y^q x."""
    cols = (CylinderColumn(p - 1, 1, q - 1),
            CylinderColumn(q - 1, p - 1, 1),
            CylinderColumn(1, q - 1, p - 1))
    s1 = tuple(range(q - 1))
    s2 = tuple(range(p - 1))
    s3 = [0] * ((p - 1) * (q - 1))
    for k3 in range(1, p):
        for i in range(q - 1):
            s3[(q - 1) * (k3 - 1) + i] = (p - 1) * ((-i) % (q - 1)) + (p - 1 - k3)
    return GluingSpec(cols, (s1, s2, tuple(s3)))


def chain_fibre_spec(p, q) -> GluingSpec:
    """Fibre of x^p + x y^q."""
    cols = (CylinderColumn(p - 1, 1, q - 1),
            CylinderColumn(q - 1, (p - 1) * (q - 1), 1))
    s1 = tuple(range(q - 1))
    s2 = tuple((p - 1) * ((-i) % (q - 1)) + p - 2 - i // (q - 1)
               for i in range((p - 1) * (q - 1)))
    return GluingSpec(cols, (s1, s2))


def bp_fibre_spec(p, q) -> GluingSpec:
    """Fibre of x^p + y^q, (p, q) != (2, 2)."""
    n = (p - 1) * (q - 1) - 1
    if n < 1:
        raise NotLogGeneralType("x^2 + y^2 has no cylinder model here")
    cols = (CylinderColumn(n, n, 1),)
    s = tuple((-i * (q - 1)) % n for i in range(n))
    return GluingSpec(cols, (s,))


def milnor_fibre_spec(w_check: InvertiblePolynomial) -> GluingSpec:
    """Gluing data of the Milnor fibre of ``w_check``.

    The argument is interpreted as the polynomial being smoothed (the
    transpose-side polynomial).  A chain stored as x^a y + y^b is the
    same surface as the chain recipe for x^b + x y^a.
    """
    if w_check.family is Family.LOOP:
        return loop_fibre_spec(w_check.p, w_check.q)
    if w_check.family is Family.CHAIN:
        return chain_fibre_spec(w_check.q, w_check.p)
    return bp_fibre_spec(w_check.p, w_check.q)


def first_betti(spec: GluingSpec) -> int:
    """rank H_1 of the glued surface: 1 - chi = 1 + total strips."""
    return 1 + spec.total_strips()


# ---------------------------------------------------------------------------
# ribbon graph

@dataclass(frozen=True)
class RibbonGraph:
    """Deformation retract of a glued surface.

    One vertex per cylinder, one core self-loop per cylinder, one edge
    per strip.  ``rotations`` lists, for each vertex, the half-edge ids
    in their cyclic order around the vertex.  Edges are pairs of
    half-edge ids; ``half_to_edge`` maps a half-edge to its partner.
    """

    vertices: tuple           # (column, cylinder) pairs
    edges: tuple              # (kind, vertex_a, vertex_b, half_a, half_b)
    rotations: tuple          # per-vertex tuple of half-edge ids

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_edges(self):
        return len(self.edges)

    def n_loops(self):
        return sum(1 for e in self.edges if e[0] == "core")

    def n_strips(self):
        return sum(1 for e in self.edges if e[0] == "strip")

    def betti(self):
        return self.n_edges - self.n_vertices + 1

    def cycle_basis(self):
        """Integral cycle basis: one cycle per non-tree edge, given as a
        list of edge indices (tree path closed up by the extra edge)."""
        adj = {v: [] for v in range(self.n_vertices)}
        for idx, (_, a, b, _, _) in enumerate(self.edges):
            adj[a].append((b, idx))
            adj[b].append((a, idx))
        parent = {0: (None, None)}
        order = [0]
        for v in order:
            for (nb, idx) in adj[v]:
                if nb not in parent:
                    parent[nb] = (v, idx)
                    order.append(nb)
        tree_edges = {idx for (v, (pv, idx)) in parent.items() if pv is not None}

        def path_to_root(v):
            out = []
            while parent[v][0] is not None:
                pv, idx = parent[v]
                out.append(idx)
                v = pv
            return out

        basis = []
        for idx, (_, a, b, _, _) in enumerate(self.edges):
            if idx in tree_edges:
                continue
            pa, pb = path_to_root(a), path_to_root(b)
            while pa and pb and pa[-1] == pb[-1]:
                pa.pop()
                pb.pop()
            basis.append([idx] + pa + pb)
        return basis

    def boundary_count(self):
        """Number of boundary components of the thickened graph, from
        the rotation system (orbits of next-after-opposite)."""
        partner = {}
        for (_, _, _, ha, hb) in self.edges:
            partner[ha] = hb
            partner[hb] = ha
        succ = {}
        for rot in self.rotations:
            k = len(rot)
            for idx, h in enumerate(rot):
                succ[h] = rot[(idx + 1) % k]
        seen = set()
        faces = 0
        for h in partner:
            if h in seen:
                continue
            faces += 1
            cur = h
            while cur not in seen:
                seen.add(cur)
                cur = succ[partner[cur]]
        return faces


def ribbon_graph(spec: GluingSpec) -> RibbonGraph:
    if not _is_connected(spec):
        raise SpecMismatch("glued surface is disconnected")
    n = spec.n_columns
    vertices = []
    vindex = {}
    for i, col in enumerate(spec.columns):
        for k in range(col.m):
            vindex[(i, k)] = len(vertices)
            vertices.append((i, k))

    edges = []
    # half-edge ids: place them on the cylinder boundary.
    # For cylinder (i, k): going around the disc, the core loop leaves at
    # the top, the right marks follow top to bottom, the core loop
    # returns at the bottom, then the left marks bottom to top.
    right_half = {}
    left_half = {}
    core_half = {}
    hid = 0
    for i, col in enumerate(spec.columns):
        for k in range(col.m):
            core_half[(i, k)] = (hid, hid + 1)
            hid += 2
            for j in range(col.r):
                right_half[(i, k * col.r + j)] = hid
                hid += 1
            for j in range(col.ell):
                left_half[(i, k * col.ell + j)] = hid
                hid += 1

    for (i, k), (ha, hb) in core_half.items():
        v = vindex[(i, k)]
        edges.append(("core", v, v, ha, hb))
    for i, col in enumerate(spec.columns):
        nxt_i = (i + 1) % n
        nxt = spec.columns[nxt_i]
        for j, tgt in enumerate(spec.perms[i]):
            va = vindex[(i, j // col.r)]
            vb = vindex[(nxt_i, tgt // nxt.ell)]
            edges.append(("strip", va, vb,
                          right_half[(i, j)], left_half[(nxt_i, tgt)]))

    rotations = []
    for i, col in enumerate(spec.columns):
        for k in range(col.m):
            ha, hb = core_half[(i, k)]
            rot = [ha]
            rot += [right_half[(i, k * col.r + j)] for j in range(col.r)]
            rot.append(hb)
            rot += [left_half[(i, k * col.ell + j)]
                    for j in reversed(range(col.ell))]
            rotations.append(tuple(rot))
    return RibbonGraph(tuple(vertices), tuple(edges), tuple(rotations))
