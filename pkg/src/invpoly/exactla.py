"""Small exact linear algebra kernels: integer Smith normal form with
transforms, fraction-free determinants, and rational rank.

Matrices are plain lists of lists.  Everything is exact (Python ints and
fractions); nothing here ever touches a float.
"""

from fractions import Fraction


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rb = len(b)
    cb = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(rb)) for j in range(cb)]
            for row in a]


def smith_normal_form(m):
    """Smith normal form with transforms.

    Returns ``(s, u, v)`` where ``s = u * m * v``, ``u`` and ``v`` are
    unimodular, and ``s`` is diagonal with non-negative entries satisfying
    ``s[0][0] | s[1][1] | ...``.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    s = [row[:] for row in m]
    u = identity(rows)
    v = identity(cols)

    def row_op(i, j, a, b, c, d):
        # (row i, row j) <- (a*ri + b*rj, c*ri + d*rj) on s and u; ad-bc = +-1
        for mat in (s, u):
            ri, rj = mat[i], mat[j]
            for k in range(len(ri)):
                ri[k], rj[k] = a * ri[k] + b * rj[k], c * ri[k] + d * rj[k]

    def col_op(i, j, a, b, c, d):
        for mat in (s, v):
            for row in mat:
                row[i], row[j] = a * row[i] + b * row[j], c * row[i] + d * row[j]

    def diagonalize(start):
        t = start
        while t < min(rows, cols):
            piv = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if s[i][j]:
                        piv = (i, j)
                        break
                if piv:
                    break
            if piv is None:
                return
            i, j = piv
            if i != t:
                row_op(t, i, 0, 1, 1, 0)
            if j != t:
                col_op(t, j, 0, 1, 1, 0)
            while True:
                dirty = False
                for i in range(t + 1, rows):
                    if s[i][t]:
                        if s[i][t] % s[t][t] == 0:
                            # pure elimination keeps row t intact
                            row_op(t, i, 1, 0, -(s[i][t] // s[t][t]), 1)
                        else:
                            g, x, y = xgcd(s[t][t], s[i][t])
                            a, b = s[t][t] // g, s[i][t] // g
                            row_op(t, i, x, y, -b, a)
                            dirty = True
                for j in range(t + 1, cols):
                    if s[t][j]:
                        if s[t][j] % s[t][t] == 0:
                            col_op(t, j, 1, 0, -(s[t][j] // s[t][t]), 1)
                        else:
                            g, x, y = xgcd(s[t][t], s[t][j])
                            a, b = s[t][t] // g, s[t][j] // g
                            col_op(t, j, x, y, -b, a)
                            dirty = True
                if not dirty:
                    break
            t += 1

    diagonalize(0)

    # enforce the divisibility chain: a violation at (i, i+1) is repaired by
    # folding column i+1 into column i and re-diagonalizing from i
    n = min(rows, cols)
    while True:
        bad = None
        for i in range(n - 1):
            a, b = s[i][i], s[i + 1][i + 1]
            if b != 0 and (a == 0 or b % a != 0):
                bad = i
                break
        if bad is None:
            break
        col_op(bad, bad + 1, 1, 0, 1, 1)
        diagonalize(bad)

    for i in range(n):
        if s[i][i] < 0:
            for mat in (s, u):
                mat[i] = [-x for x in mat[i]]
    return s, u, v


def bareiss_det(m):
    """Exact determinant of an integer matrix (fraction-free Bareiss).

    The determinant of the empty matrix is 1.
    """
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai, ak = a[i], a[k]
            for j in range(k + 1, n):
                ai[j] = (akk * ai[j] - aik * ak[j]) // prev
            ai[k] = 0
        prev = akk
    return sign * a[-1][-1]


def rational_rank(m):
    """Rank of a matrix with int/Fraction entries, by exact elimination."""
    if not m:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = len(a), len(a[0])
    rank = 0
    for c in range(cols):
        piv = None
        for r in range(rank, rows):
            if a[r][c]:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][c]
        a[rank] = [x * inv for x in a[rank]]
        for r in range(rows):
            if r != rank and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def kron(a, b):
    """Kronecker product of two integer matrices."""
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    return [[a[i // rb][j // cb] * b[i % rb][j % cb]
             for j in range(ca * cb)] for i in range(ra * rb)]
