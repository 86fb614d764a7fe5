"""Smith normal form over the integers.

Matrices are plain lists of row lists holding Python ints, so all
arithmetic is exact regardless of entry growth.
"""

from typing import NamedTuple


class SNFResult(NamedTuple):
    """``u @ a @ v == d`` with ``u``, ``v`` unimodular and ``d`` diagonal."""

    d: list
    u: list
    v: list

    @property
    def diagonal(self):
        n = min(len(self.d), len(self.d[0]) if self.d else 0)
        return [self.d[i][i] for i in range(n)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for row in a]


def _shape(a):
    rows = len(a)
    cols = len(a[0]) if rows else 0
    for row in a:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def smith_normal_form(a):
    """Return the Smith normal form of the integer matrix ``a``.

    Pivots are chosen as the smallest nonzero entry (in absolute value)
    of the remaining block; a pivot that fails to divide the block is
    repaired by adding the offending row and re-reducing.

    >>> smith_normal_form([[4, 0], [0, 2], [2, 1]]).diagonal
    [1, 4]
    """
    rows, cols = _shape(a)
    d = [[int(x) for x in row] for row in a]
    u = identity(rows)
    v = identity(cols)

    # row op: row_i += q * row_j, mirrored on u
    def add_row(i, j, q):
        d[i] = [x + q * y for x, y in zip(d[i], d[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, q):
        for row in d:
            row[i] += q * row[j]
        for row in v:
            row[i] += q * row[j]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = d[i][j]
                    if x and (pivot is None or abs(x) < abs(d[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return SNFResult(d, u, v)
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = d[t][t]

            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // p))
                    dirty = dirty or d[i][t] != 0
            for j in range(t + 1, cols):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // p))
                    dirty = dirty or d[t][j] != 0
            if dirty:
                continue

            bad = next((i for i in range(t + 1, rows)
                        if any(d[i][j] % p for j in range(t + 1, cols))), None)
            if bad is None:
                break
            add_row(t, bad, 1)

        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return SNFResult(d, u, v)


def invariant_factors(a):
    """Diagonal of the Smith form, zeros included."""
    return smith_normal_form(a).diagonal


def cokernel(relations, ncols):
    """Shape of ``Z^ncols / rowspace(relations)`` as ``(rank, moduli)``.

    Moduli are returned in ascending divisibility order with units dropped.
    """
    if not relations:
        return ncols, []
    diag = invariant_factors(relations)
    diag += [0] * (ncols - len(diag))
    rank = sum(1 for x in diag if x == 0)
    moduli = [x for x in diag if x > 1]
    return rank, moduli
