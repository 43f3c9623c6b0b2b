"""Exact small-matrix helpers: xgcd, Hermite forms, integer kernels.

All matrices here are tiny (at most 2 columns, a handful of rows), so the
algorithms favor clarity over asymptotics.  Integer matrices are lists of
row lists; rational ones use Fraction entries.
"""

from __future__ import annotations

from fractions import Fraction


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    # g, s, t with s*a + t*b == g and g >= 0
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        s, t, g = -s, -t, -g
    return g, s, t


def hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Canonical row Hermite normal form.

    Returns an echelon basis with positive pivots, pivot columns strictly
    increasing, and entries above each pivot reduced into [0, pivot).
    The result is the unique canonical basis of the row span.
    """
    basis: list[list[int]] = []  # kept sorted by pivot column
    for vec0 in rows:
        vec = list(vec0)
        while any(vec):
            j = next(i for i, v in enumerate(vec) if v)
            slot = None
            for idx, row in enumerate(basis):
                p = next(i for i, v in enumerate(row) if v)
                if p == j:
                    slot = idx
                    break
                if p > j:
                    break
            if slot is None:
                pos = 0
                while pos < len(basis) and next(i for i, v in enumerate(basis[pos]) if v) < j:
                    pos += 1
                basis.insert(pos, vec)
                break
            row = basis[slot]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [v - q * r for v, r in zip(vec, row)]
            else:
                g, s, t = xgcd(a, b)
                new_row = [s * r + t * v for r, v in zip(row, vec)]
                vec = [(a // g) * v - (b // g) * r for r, v in zip(row, vec)]
                row[:] = new_row
    # positive pivots, then reduce entries above each pivot
    for row in basis:
        j = next(i for i, v in enumerate(row) if v)
        if row[j] < 0:
            row[:] = [-v for v in row]
    for i in range(len(basis) - 1, -1, -1):
        j = next(k for k, v in enumerate(basis[i]) if v)
        p = basis[i][j]
        for up in range(i):
            q = basis[up][j] // p
            if q:
                basis[up] = [a - q * b for a, b in zip(basis[up], basis[i])]
    return [list(r) for r in basis]


def hnf_with_transform(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row echelon form H and unimodular U with U * rows == H (zero rows kept)."""
    m = len(rows)
    work = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    pivot_row = 0
    n = len(rows[0]) if rows else 0
    for col in range(n):
        # find a pivot at or below pivot_row
        pivot = None
        for r in range(pivot_row, m):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        u[pivot_row], u[pivot] = u[pivot], u[pivot_row]
        for r in range(pivot_row + 1, m):
            while work[r][col]:
                a, b = work[pivot_row][col], work[r][col]
                if abs(a) > abs(b):
                    work[pivot_row], work[r] = work[r], work[pivot_row]
                    u[pivot_row], u[r] = u[r], u[pivot_row]
                    continue
                q = work[r][col] // work[pivot_row][col]
                work[r] = [x - q * y for x, y in zip(work[r], work[pivot_row])]
                u[r] = [x - q * y for x, y in zip(u[r], u[pivot_row])]
        pivot_row += 1
    return work, u


def integer_kernel(mat: list[list[int]], width: int | None = None) -> list[list[int]]:
    """Basis of {x in Z^n : mat @ x == 0} for an integer matrix.

    Computed as the rows of the transform that send the transposed matrix
    to echelon form and land on zero rows; the result is saturated.
    """
    if width is None:
        if not mat:
            raise ValueError("width required for an empty constraint matrix")
        width = len(mat[0])
    if not mat:
        return [[1 if i == j else 0 for j in range(width)] for i in range(width)]
    transposed = [[mat[r][c] for r in range(len(mat))] for c in range(width)]
    h, u = hnf_with_transform(transposed)
    basis = [u[i] for i in range(len(h)) if not any(h[i])]
    return hnf_rows(basis)


def rational_rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    work = [[Fraction(v) for v in r] for r in rows]
    m = len(work)
    n = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(m):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return work, pivots


def rational_kernel(rows: list[list[Fraction]], width: int) -> list[list[Fraction]]:
    """Basis of {x : rows @ x == 0} over Q."""
    if not rows:
        return [[Fraction(1 if i == j else 0) for j in range(width)] for i in range(width)]
    rref, pivots = rational_rref(rows)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * width
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rref[i][fc]
        basis.append(vec)
    return basis


def rational_solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """One exact solution of rows @ x == rhs, or None if inconsistent."""
    if not rows:
        return [] if all(v == 0 for v in rhs) else None
    n = len(rows[0])
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    rref, pivots = rational_rref(aug)
    for row in rref:
        if all(v == 0 for v in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(pivots):
        if pc == n:
            return None
        x[pc] = rref[i][-1]
    return x


def primitive_int_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    """Scale each rational row to a primitive integer vector."""
    out = []
    for row in rows:
        denom = 1
        for v in row:
            denom = denom * v.denominator // _gcd(denom, v.denominator)
        ints = [int(v * denom) for v in row]
        g = 0
        for v in ints:
            g = _gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def lattice_member(target: list[Fraction], den: int, rows: list[list[int]]) -> bool:
    """Does target lie in the Z-span of rows/den?"""
    scaled = [v * den for v in target]
    work = list(scaled)
    for row in rows:
        j = next(i for i, v in enumerate(row) if v)
        if work[j] == 0:
            continue
        q = work[j] / Fraction(row[j])
        if q.denominator != 1:
            return False
        work = [w - int(q) * r for w, r in zip(work, row)]
    return all(w == 0 for w in work)
