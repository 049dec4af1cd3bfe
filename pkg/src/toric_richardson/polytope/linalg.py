"""Exact linear algebra over Q and Z: row reduction, kernels, integer solving."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Vec = tuple
Mat = list[list[Fraction]]


def to_frac(rows: Sequence[Sequence]) -> Mat:
    return [[Fraction(x) for x in r] for r in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = to_frac(rows)
    if not m:
        return m, []
    ncol = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncol):
        piv = next((x for x in range(r, len(m)) if m[x][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for x in range(len(m)):
            if x != r and m[x][c] != 0:
                f = m[x][c]
                m[x] = [a - f * b for a, b in zip(m[x], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], ncol: Optional[int] = None) -> list[list[Fraction]]:
    """Basis of {x : rows x = 0}."""
    if not rows:
        n = ncol or 0
        return [[Fraction(int(a == b)) for a in range(n)] for b in range(n)]
    R, piv = rref(rows)
    n = len(rows[0])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r, p in enumerate(piv):
            x[p] = -R[r][f]
        basis.append(x)
    return basis


def primitive(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def inverse(rows: Sequence[Sequence]) -> Mat:
    n = len(rows)
    aug = [list(r) + [int(a == b) for b in range(n)] for a, r in enumerate(rows)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in R]


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def affine_rank(points: Sequence[Sequence]) -> int:
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def solve_rational(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """One solution of A x = b over Q (free variables zero), or None."""
    if not A:
        return None if any(b) else []
    n = len(A[0])
    R, piv = rref([list(r) + [y] for r, y in zip(A, b)])
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for r, p in enumerate(piv):
        x[p] = R[r][n]
    return x


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def column_hermite(A: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Return (H, U) with U unimodular and A U = H in column echelon form."""
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(map(int, r)) for r in A]
    U = [[int(a == b) for b in range(n)] for a in range(n)]

    def col_op(c1: int, c2: int, a: int, b: int, c: int, d: int) -> None:
        # (col c1, col c2) <- (a*c1 + b*c2, c*c1 + d*c2)
        for M in (H, U):
            for row in M:
                x, y = row[c1], row[c2]
                row[c1], row[c2] = a * x + b * y, c * x + d * y

    col = 0
    for r in range(m):
        if col >= n:
            break
        for c in range(col + 1, n):
            if H[r][c] == 0:
                continue
            x, y = H[r][col], H[r][c]
            g, s, t = _ext_gcd(x, y)
            # new col = s*col + t*c has entry g; other = (-y/g)*col + (x/g)*c has entry 0
            col_op(col, c, s, t, -y // g, x // g)
        if H[r][col] != 0:
            if H[r][col] < 0:
                for M in (H, U):
                    for row in M:
                        row[col] = -row[col]
            col += 1
    return H, U


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list[int]]:
    """An integer solution of A x = b, or None if none exists."""
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    H, U = column_hermite(A)
    y = [0] * n
    col = 0
    for r in range(m):
        acc = b[r] - sum(H[r][c] * y[c] for c in range(col))
        if col < n and H[r][col] != 0:
            if acc % H[r][col]:
                return None
            y[col] = acc // H[r][col]
            col += 1
        elif acc != 0:
            return None
    x = [sum(U[i][c] * y[c] for c in range(n)) for i in range(n)]
    return x
