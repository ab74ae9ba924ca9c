"""
Exact integer/rational linear algebra on small dense matrices.

Matrices are lists of lists of Python ints (or Fractions where noted).
Bareiss fraction-free elimination keeps everything integral for rank and
determinant; solving goes through Fractions and reports non-integral
solutions to the caller.
"""
from __future__ import annotations

from fractions import Fraction


def rank(matrix: list[list[int]]) -> int:
    """Rank over the rationals, by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def det(matrix: list[list[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    m = [row[:] for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(size):
        piv = next((i for i in range(c, size) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for i in range(c + 1, size):
            for j in range(c + 1, size):
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = m[c][c]
    return sign * m[size - 1][size - 1]


def sparse_det(rows: list[dict[int, int]], size: int) -> int:
    """Exact determinant of a square integer matrix given as sparse rows,
    tuned for near-triangular unimodular matrices: peel singleton rows and
    columns, then eliminate on unit pivots, falling back to dense Bareiss on
    whatever dense core remains."""
    if len(rows) != size:
        raise ValueError("matrix is not square")
    rows = [dict(r) for r in rows]
    col_rows: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    alive_rows = set(range(size))
    alive_cols = set(col_rows)
    if len(alive_cols) < size:
        return 0
    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    pivots: list[int] = []

    def eliminate(ri: int, ci: int):
        pval = rows[ri][ci]
        for rj in list(col_rows[ci]):
            if rj == ri or rj not in alive_rows:
                continue
            val = rows[rj][ci]
            if val % pval:
                return False  # non-unit pivot would need fractions
            f = val // pval
            for c, v in rows[ri].items():
                nv = rows[rj].get(c, 0) - f * v
                if nv:
                    rows[rj][c] = nv
                    col_rows.setdefault(c, set()).add(rj)
                else:
                    rows[rj].pop(c, None)
                    col_rows[c].discard(rj)
        pivot_rows.append(ri)
        pivot_cols.append(ci)
        pivots.append(pval)
        alive_rows.discard(ri)
        alive_cols.discard(ci)
        for c in rows[ri]:
            col_rows[c].discard(ri)
        return True

    progress = True
    while alive_rows and progress:
        progress = False
        # singleton rows and columns eliminate with no fill
        for ri in list(alive_rows):
            live = {c: v for c, v in rows[ri].items() if c in alive_cols}
            if len(live) == 1:
                (ci, v), = live.items()
                if v in (1, -1) and eliminate(ri, ci):
                    progress = True
        for ci in list(alive_cols):
            live = [r for r in col_rows.get(ci, ()) if r in alive_rows]
            if len(live) == 1 and rows[live[0]].get(ci, 0) in (1, -1):
                if eliminate(live[0], ci):
                    progress = True
        if progress:
            continue
        # any unit entry, preferring sparse rows
        best = None
        for ri in alive_rows:
            for c, v in rows[ri].items():
                if c in alive_cols and v in (1, -1):
                    cand = (len(rows[ri]), len(col_rows[c]), ri, c)
                    if best is None or cand < best:
                        best = cand
        if best is not None:
            _, _, ri, ci = best
            if eliminate(ri, ci):
                progress = True
    if alive_rows:
        # dense fallback on the remaining core
        rrows = sorted(alive_rows)
        rcols = sorted(alive_cols)
        core = [[rows[r].get(c, 0) for c in rcols] for r in rrows]
        d = det(core)
        if d == 0:
            return 0
        pivot_rows.extend(rrows)
        pivot_cols.extend(rcols)
        pivots.append(d)
    sign = _perm_parity(pivot_rows) * _perm_parity(pivot_cols)
    out = sign
    for p in pivots:
        out *= p
    return out


def _perm_parity(seq: list[int]) -> int:
    index = {v: i for i, v in enumerate(sorted(seq))}
    perm = [index[v] for v in seq]
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


class IntEchelon:
    """Streaming row echelon over the integers (gcd-normalized rows), for
    incremental exact rank of large spanning sets with early exit."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, list[int]] = {}  # lead column -> normalized row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return len(self.rows) == self.ncols

    def add(self, row: list[int]) -> bool:
        """Reduce a row against the echelon; returns True if rank grew."""
        from math import gcd
        row = row[:]
        while True:
            lead = next((j for j, v in enumerate(row) if v != 0), None)
            if lead is None:
                return False
            piv = self.rows.get(lead)
            if piv is None:
                g = 0
                for v in row:
                    g = gcd(g, v)
                if g > 1:
                    row = [v // g for v in row]
                self.rows[lead] = row
                return True
            a, b = piv[lead], row[lead]
            row = [b_i * a - p_i * b for b_i, p_i in zip(row, piv)]


def solve(matrix: list[list[int]], rhs: list) -> list[Fraction] | None:
    """Solve matrix . x = rhs exactly; None if inconsistent.

    The matrix need not be square; a particular solution is returned with
    free variables set to zero.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [a[i][j] - f * a[r][j] for j in range(cols + 1)]
        pivots.append((r, c))
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in pivots:
        x[c] = a[i][cols]
    return x
