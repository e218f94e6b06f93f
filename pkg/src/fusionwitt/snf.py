"""Smith normal form over the integers, with transform tracking.

Used to rebase finite abelian group presentations: given a relation
matrix R for generators g_1..g_k, the decomposition S = U R V yields new
generators h_j = sum_i Vinv[j][i] g_i whose only relations are
s_j h_j = 0 with s_1 | s_2 | ... ascending.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


@dataclass(frozen=True)
class SmithForm:
    """S = U @ M @ V with S diagonal, U and V unimodular, v_inv = V**-1.

    diagonal holds min(rows, cols) entries s_0 | s_1 | ..., all >= 0.
    """

    diagonal: tuple[int, ...]
    u: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]
    v_inv: tuple[tuple[int, ...], ...]


def smith_normal_form(mat: list[list[int]]) -> SmithForm:
    """Exact Smith normal form with both transforms.

    >>> f = smith_normal_form([[2, 0], [0, 3]])
    >>> f.diagonal
    (1, 6)
    """
    r = len(mat)
    c = len(mat[0]) if r else 0
    a = [list(row) for row in mat]
    u = _identity(r)
    v = _identity(c)
    vinv = _identity(c)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def add_row(i, j, t):
        # row j += t * row i
        for k in range(c):
            a[j][k] += t * a[i][k]
        for k in range(r):
            u[j][k] += t * u[i][k]

    def neg_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def add_col(i, j, t):
        # col j += t * col i; inverse op on vinv rows: row i -= t * row j
        for row in a:
            row[j] += t * row[i]
        for row in v:
            row[j] += t * row[i]
        for k in range(c):
            vinv[i][k] -= t * vinv[j][k]

    def neg_col(i):
        for row in a:
            row[i] = -row[i]
        for row in v:
            row[i] = -row[i]
        vinv[i] = [-x for x in vinv[i]]

    def min_entry(t):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(r, c):
        pos = min_entry(t)
        if pos is None:
            break
        while True:
            i, j = pos
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            # clear column t below the pivot, then row t to the right;
            # a nonzero remainder becomes the new, strictly smaller pivot
            dirty = False
            for i in range(t + 1, r):
                if a[i][t] != 0:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t] != 0:
                        dirty = True
            for j in range(t + 1, c):
                if a[t][j] != 0:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j] != 0:
                        dirty = True
            if dirty:
                pos = min_entry(t)
                continue
            if a[t][t] < 0:
                neg_row(t)
            # enforce divisibility: pivot must divide every later entry
            fix = next(
                ((i, j) for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % a[t][t] != 0),
                None,
            )
            if fix is None:
                break
            add_row(fix[0], t, 1)
            pos = min_entry(t)
        t += 1

    form = SmithForm(
        diagonal=tuple(a[i][i] for i in range(min(r, c))),
        u=tuple(tuple(row) for row in u),
        v=tuple(tuple(row) for row in v),
        v_inv=tuple(tuple(row) for row in vinv),
    )
    _verify(mat, form)
    return form


def _verify(mat: list[list[int]], form: SmithForm) -> None:
    r = len(mat)
    c = len(mat[0]) if r else 0
    prod = mat_mul(mat_mul([list(x) for x in form.u], mat), [list(x) for x in form.v])
    for i in range(r):
        for j in range(c):
            want = form.diagonal[i] if i == j and i < len(form.diagonal) else 0
            if prod[i][j] != want:
                raise AssertionError("smith normal form verification failed")
    if c:
        iden = mat_mul([list(x) for x in form.v], [list(x) for x in form.v_inv])
        if iden != _identity(c):
            raise AssertionError("column transform inverse verification failed")
    for i in range(len(form.diagonal) - 1):
        d0, d1 = form.diagonal[i], form.diagonal[i + 1]
        if d0 and d1 % d0 != 0 or (d0 == 0 and d1 != 0):
            raise AssertionError("diagonal divisibility chain broken")


def integer_kernel(mat: list[list[int]]) -> list[list[int]]:
    """Basis (as column vectors, returned as lists) of {z : mat @ z = 0}."""
    r = len(mat)
    c = len(mat[0]) if r else 0
    if c == 0:
        return []
    form = smith_normal_form(mat)
    free = [j for j in range(c) if j >= len(form.diagonal) or form.diagonal[j] == 0]
    return [[form.v[i][j] for i in range(c)] for j in free]


def rebase_presentation(relations: list[list[int]], num_gens: int) -> tuple[list[int], list[list[int]]]:
    """Turn a relation matrix into cyclic orders plus a generator change.

    relations: rows of integer coefficients a with sum_i a_i g_i = 0,
    spanning the full relation lattice of generators g_1..g_num_gens of a
    finite abelian group.  Returns (orders, combos): combos[j] gives the
    coefficients of the new generator h_j in terms of the old ones, and
    h_j has order orders[j] (orders ascending, possibly containing 1).
    """
    if num_gens == 0:
        return [], []
    if not relations:
        raise ValueError("no relations: quotient would be infinite")
    form = smith_normal_form(relations)
    if len(form.diagonal) < num_gens or any(d == 0 for d in form.diagonal[:num_gens]):
        raise ValueError("relation matrix does not have full column rank")
    orders = [form.diagonal[j] for j in range(num_gens)]
    combos = [list(form.v_inv[j]) for j in range(num_gens)]
    return orders, combos
