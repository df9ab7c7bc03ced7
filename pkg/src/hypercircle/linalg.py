"""Dense exact linear algebra over any of our coefficient fields.

Matrices are lists of row lists.  Entries support +, -, *, / and boolean
zero tests; the field object supplies zero and one.
"""


def rref(rows, field):
    """Reduced row echelon form.  Returns (new_rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    row = 0
    for col in range(ncols):
        if row >= len(m):
            break
        sel = None
        for i in range(row, len(m)):
            if m[i][col]:
                sel = i
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = field.one / m[row][col]
        m[row] = [inv * v for v in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    m = [r for r in m if any(r)]
    return m, pivots


def solve(A, b, field):
    """One solution of A x = b, or None when inconsistent.

    Free variables are set to zero, which keeps the output deterministic.
    """
    if not A:
        return None if any(b) else []
    n = len(A[0])
    aug = [list(r) + [v] for r, v in zip(A, b)]
    m, pivots = rref(aug, field)
    for r in m:
        if not any(r[:-1]) and r[-1]:
            return None
    x = [field.zero] * n
    for r, c in zip(m, pivots):
        if c == n:
            return None
        x[c] = r[-1]
    return x


def nullspace(A, ncols, field):
    """Basis of the kernel of A, one vector per free column, RREF style."""
    m, pivots = rref(A, field)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for r, pc in zip(m, pivots):
            v[pc] = -r[fc]
        basis.append(v)
    return basis


def solve_unique(A, b, field):
    """Solution of a system known to have exactly one; raises otherwise."""
    if not A:
        raise ValueError("empty system")
    n = len(A[0])
    x = solve(A, b, field)
    if x is None:
        raise ValueError("inconsistent linear system")
    m, pivots = rref(A, field)
    if len(pivots) != n:
        raise ValueError("linear system is underdetermined")
    return x
