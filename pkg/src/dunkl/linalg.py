"""Exact linear algebra over the rationals.

Matrices are lists of lists of Fraction (rows).  Everything here is
small and dense; the nullspace path uses fraction-free (Bareiss)
forward elimination on integer-cleared input to keep intermediate
entries from blowing up.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd, isqrt

Vec = list[Q]
Mat = list[list[Q]]


def identity(n: int) -> Mat:
    return [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]


def mat_mul(a: Mat, b: Mat) -> Mat:
    n, m, p = len(a), len(b), len(b[0])
    assert len(a[0]) == m, "dimension mismatch"
    out = [[Q(0)] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        row = out[i]
        for k in range(m):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(p):
                    if bk[j]:
                        row[j] += c * bk[j]
    return out


def mat_vec(a: Mat, v: Vec) -> Vec:
    return [sum((c * x for c, x in zip(row, v)), Q(0)) for row in a]


def transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)]


def mat_inv(a: Mat) -> Mat:
    """Inverse by Gauss-Jordan; raises ValueError on singular input."""
    n = len(a)
    aug = [list(row) + ident_row for row, ident_row in zip(a, identity(n))]
    col = 0
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = Q(1) / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def rref(a: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column list).

    Columns are processed left to right, so the caller fixes the pivot
    order by ordering the columns.
    """
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv_p = Q(1) / m[r][c]
        m[r] = [x * inv_p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Mat) -> int:
    if not a:
        return 0
    return len(_bareiss_echelon(_clear_denominators(a))[1])


def _clear_denominators(a: Mat) -> list[list[int]]:
    out = []
    for row in a:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in row])
    return out


def _bareiss_echelon(m: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination.  Returns (echelon, pivot cols)."""
    m = [list(row) for row in m]
    rows, cols = len(m), len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(cols):
                if j == c:
                    continue
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(a: Mat) -> list[Vec]:
    """Exact rational kernel basis.

    Pivot order is the given column order (callers pass columns in
    graded-lexicographic monomial order).  Each basis vector is scaled
    to integer entries of content 1 with its free coordinate positive,
    which makes the output reproducible bit-for-bit.
    """
    if not a:
        return []
    cols = len(a[0])
    ech, pivots = _bareiss_echelon(_clear_denominators(a))
    free = [c for c in range(cols) if c not in pivots]
    basis: list[Vec] = []
    for fc in free:
        v: Vec = [Q(0)] * cols
        v[fc] = Q(1)
        # back-substitution over the integer echelon form
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = sum((Q(ech[r][j]) * v[j] for j in range(pc + 1, cols) if v[j]), Q(0))
            v[pc] = -s / Q(ech[r][pc])
        basis.append(_normalize_int_content(v))
    return basis


def _normalize_int_content(v: Vec) -> Vec:
    lcm = 1
    for x in v:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return v
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return [Q(x, g) for x in ints]


def solve(a: Mat, b: Vec) -> Vec | None:
    """One solution of a x = b, or None if inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [list(a[i]) + [b[i]] for i in range(rows)]
    red, pivots = rref(aug)
    for r in range(len(pivots), rows):
        if red[r][cols] != 0:
            return None
    if pivots and pivots[-1] == cols:
        return None
    x: Vec = [Q(0)] * cols
    for r, c in enumerate(pivots):
        x[c] = red[r][cols]
    return x


def charpoly(a: Mat) -> list[Q]:
    """Coefficients [c_0, ..., c_n] of det(t*I - a), c_n = 1 (Faddeev-LeVerrier)."""
    n = len(a)
    m = identity(n)
    coeffs = [Q(1)]
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        c = -sum((m[i][i] for i in range(n)), Q(0)) / k
        coeffs.append(c)
        for i in range(n):
            m[i][i] += c
    return list(reversed(coeffs))


def integer_roots(poly: list[Q], bound: int) -> list[int]:
    """Integer roots of a polynomial with |root| <= bound, by direct scan."""
    roots = []
    for cand in range(-bound, bound + 1):
        acc = Q(0)
        for c in reversed(poly):
            acc = acc * cand + c
        if acc == 0:
            roots.append(cand)
    return roots


def exact_isqrt(n: int) -> int | None:
    r = isqrt(n)
    return r if r * r == n else None
