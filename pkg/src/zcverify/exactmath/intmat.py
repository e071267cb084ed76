"""Exact integer matrices: Hermite/Smith normal forms and integral solving.

Everything works on arbitrary-precision Python ints. Pivots are chosen by
minimal absolute value to keep intermediate entry growth tame at the sizes
this engine meets (a few hundred rows/columns at most).
"""

from __future__ import annotations


class IntMatrix:
    """Rectangular matrix of exact integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: int | None = None):
        entries = [list(map(int, row)) for row in entries]
        self.rows = len(entries)
        if entries:
            self.cols = len(entries[0])
        else:
            self.cols = 0 if cols is None else cols
        for row in entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
        self.entries = entries

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix([[0] * cols for _ in range(rows)], cols=cols)

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.entries], cols=self.cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"IntMatrix({self.entries!r})"

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            rowi = self.entries[i]
            outi = out[i]
            for k in range(self.cols):
                a = rowi[k]
                if a:
                    rowk = other.entries[k]
                    for j in range(other.cols):
                        outi[j] += a * rowk[j]
        return IntMatrix(out, cols=other.cols)

    def mul_vec(self, v) -> list[int]:
        v = list(v)
        if self.cols != len(v):
            raise ValueError("dimension mismatch")
        return [sum(a * b for a, b in zip(row, v)) for row in self.entries]


def hermite_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style HNF: returns (H, U) with H = U*A, U unimodular.

    Pivots are positive, entries above each pivot are reduced into [0, pivot),
    pivot columns strictly increase.
    """
    h = [row[:] for row in a.entries]
    rows, cols = a.rows, a.cols
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    r = 0
    for col in range(cols):
        piv = None
        for i in range(r, rows):
            if h[i][col] and (piv is None or abs(h[i][col]) < abs(h[piv][col])):
                piv = i
        if piv is None:
            continue
        h[r], h[piv] = h[piv], h[r]
        u[r], u[piv] = u[piv], u[r]
        while True:
            done = True
            for i in range(r + 1, rows):
                if h[i][col] == 0:
                    continue
                done = False
                q = h[i][col] // h[r][col]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                if h[i][col]:
                    h[r], h[i] = h[i], h[r]
                    u[r], u[i] = u[i], u[r]
            if done:
                break
        if h[r][col] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        p = h[r][col]
        for i in range(r):
            q = h[i][col] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
        if r == rows:
            break
    return IntMatrix(h, cols=cols), IntMatrix(u, cols=rows)


def _diagonalize(a: IntMatrix) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Row/column-reduce A to a diagonal matrix D = U A V (no chain condition)."""
    m = [row[:] for row in a.entries]
    rows, cols = a.rows, a.cols
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    t = 0
    while t < min(rows, cols):
        piv = None
        for i in range(t, rows):
            mi = m[i]
            for j in range(t, cols):
                if mi[j] and (piv is None or abs(mi[j]) < abs(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            m[t], m[pi] = m[pi], m[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in m:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        while True:
            moved = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    if q:
                        m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                        u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        u[t], u[i] = u[i], u[t]
                        moved = True
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                        for row in v:
                            row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        for row in v:
                            row[t], row[j] = row[j], row[t]
                        moved = True
            if not moved:
                break
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return m, u, v


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Returns (D, U, V) with D = U A V diagonal and d_i | d_{i+1}."""
    m, u, v = _diagonalize(a)
    n = min(a.rows, a.cols)
    for i in range(n):
        for j in range(i + 1, n):
            di, dj = m[i][i], m[j][j]
            if di and dj % di != 0:
                g, x, y = _xgcd(di, dj)
                # col_i += col_j, then 2x2 row/column surgery -> diag(g, lcm)
                for row in m:
                    row[i] += row[j]
                for row in v:
                    row[i] += row[j]
                ri = [x * p + y * q for p, q in zip(m[i], m[j])]
                rj = [-(dj // g) * p + (di // g) * q for p, q in zip(m[i], m[j])]
                m[i], m[j] = ri, rj
                ui = [x * p + y * q for p, q in zip(u[i], u[j])]
                uj = [-(dj // g) * p + (di // g) * q for p, q in zip(u[i], u[j])]
                u[i], u[j] = ui, uj
                f = m[i][j] // m[i][i]
                if f:
                    for row in m:
                        row[j] -= f * row[i]
                    for row in v:
                        row[j] -= f * row[i]
                if m[j][j] < 0:
                    m[j] = [-q for q in m[j]]
                    u[j] = [-q for q in u[j]]
            elif di == 0 and dj != 0:
                # push zeros to the end of the diagonal
                m[i], m[j] = m[j], m[i]
                u[i], u[j] = u[j], u[i]
                for row in m:
                    row[i], row[j] = row[j], row[i]
                for row in v:
                    row[i], row[j] = row[j], row[i]
    return (
        IntMatrix(m, cols=a.cols),
        IntMatrix(u, cols=a.rows),
        IntMatrix(v, cols=a.cols),
    )


def integer_solve(a: IntMatrix, b):
    """Some integral x with A x = b, or None. Decided exactly via normal forms."""
    x, _cert = integer_solve_certified(a, b)
    return x


_ROWSEL_PRIME = (1 << 61) - 1


def solvable_mod_prime_power(rows, b, p: int, k: int):
    """Decide A x = b (mod p^k); returns (solvable, certificate-or-None).

    Smith-style reduction over Z/p^k with minimal-valuation pivoting; entries
    never leave [0, p^k), so there is no coefficient growth.
    """
    m = p**k
    a = [[x % m for x in row] for row in rows]
    b = [x % m for x in b]
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0

    def val(x: int) -> int:
        if x == 0:
            return k
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v

    t = 0
    pivot_vals = []
    while t < min(n_rows, n_cols):
        best = None
        for i in range(t, n_rows):
            for j in range(t, n_cols):
                if a[i][j]:
                    v = val(a[i][j])
                    if best is None or v < best[0]:
                        best = (v, i, j)
                        if v == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        v, pi, pj = best
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            b[t], b[pi] = b[pi], b[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        unit = a[t][t] // (p**v)
        inv = pow(unit, -1, m)
        a[t] = [x * inv % m for x in a[t]]
        b[t] = b[t] * inv % m
        # rows above t already have zeros in column t (their right entries were
        # cleared by earlier column operations); clear downward only, where
        # minimal-valuation pivoting guarantees exact division
        for i in range(t + 1, n_rows):
            if a[i][t]:
                f = (a[i][t] // (p**v)) % m
                a[i] = [(x - f * y) % m for x, y in zip(a[i], a[t])]
                b[i] = (b[i] - f * b[t]) % m
        for j in range(t + 1, n_cols):
            if a[t][j]:
                f = (a[t][j] // (p**v)) % m
                for row in a:
                    row[j] = (row[j] - f * row[t]) % m
        pivot_vals.append(v)
        t += 1
    for i in range(n_rows):
        need = p ** pivot_vals[i] if i < len(pivot_vals) else m
        if b[i] % need != 0:
            return False, {"prime": p, "power": k, "row": i, "pivot_valuation": val(need), "target": b[i]}
    return True, None


def integer_solve_row_reduced(a: IntMatrix, b):
    """integer_solve for tall low-rank systems.

    Picks a candidate row basis by incremental elimination mod a large prime,
    solves the small subsystem, and verifies the full system exactly. A
    subsystem infeasibility certificate is sound for the full system; a
    subsystem solution that fails full verification falls back to the exact
    path (cannot happen unless the modular rank undershoots the true rank).
    """
    b = list(b)
    if len(b) != a.rows:
        raise ValueError("dimension mismatch")
    p = _ROWSEL_PRIME
    basis_rows: list[int] = []
    echelon: list[tuple[int, list[int]]] = []  # (pivot col, reduced row mod p)
    for i in range(a.rows):
        vec = [x % p for x in a.entries[i]]
        for pc, er in echelon:
            f = vec[pc]
            if f:
                vec = [(x - f * y) % p for x, y in zip(vec, er)]
        pc = next((j for j, x in enumerate(vec) if x), None)
        if pc is None:
            continue
        inv = pow(vec[pc], p - 2, p)
        vec = [x * inv % p for x in vec]
        echelon.append((pc, vec))
        basis_rows.append(i)
        if len(basis_rows) == a.cols:
            break
    sub = IntMatrix([a.entries[i] for i in basis_rows], cols=a.cols)
    x, cert = integer_solve_certified(sub, [b[i] for i in basis_rows])
    if x is None:
        return None, {"basis_rows": basis_rows, **cert}
    if a.mul_vec(x) == b:
        return x, None
    return integer_solve_certified(a, b)


def integer_solve_certified(a: IntMatrix, b):
    """integer_solve plus a certificate for infeasibility.

    Works through the column Hermite form: row-HNF of A^T gives H = U A^T,
    so A W = L with W = U^T unimodular and L = H^T in column echelon form.
    Solve L y = b by forward substitution (pivot divisibility checks), verify
    the non-pivot rows, and return x = W y.
    """
    b = list(b)
    if len(b) != a.rows:
        raise ValueError("dimension mismatch")
    at = IntMatrix([[a.entries[i][j] for i in range(a.rows)] for j in range(a.cols)],
                   cols=a.rows)
    h, u = hermite_normal_form(at)
    # pivot of H row r sits at column c_r (strictly increasing)
    pivots: list[int] = []
    for r in range(h.rows):
        c = next((j for j, x in enumerate(h.entries[r]) if x), None)
        if c is None:
            break
        pivots.append(c)
    rank = len(pivots)
    y = [0] * a.cols
    for r in range(rank):
        cr = pivots[r]
        acc = b[cr]
        for s in range(r):
            acc -= h.entries[s][cr] * y[s]
        piv = h.entries[r][cr]
        if acc % piv != 0:
            return None, {"pivot_row": cr, "pivot": piv, "residual": acc}
        y[r] = acc // piv
    # verify the remaining rows of L y = b
    pivot_set = set(pivots)
    for i in range(a.rows):
        if i in pivot_set:
            continue
        acc = sum(h.entries[s][i] * y[s] for s in range(rank))
        if acc != b[i]:
            return None, {"row": i, "mismatch": acc - b[i]}
    x = [sum(u.entries[s][j] * y[s] for s in range(rank)) for j in range(a.cols)]
    assert a.mul_vec(x) == b
    return x, None
