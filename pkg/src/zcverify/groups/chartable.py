"""Ordinary character tables via the class-algebra eigenvector method.

The table is computed over a prime field F_q with q = 1 (mod exp G) and
q > 2*sqrt(|G|)*exp(G), then lifted to exact cyclotomic values by matching
eigenvalue multiplicities against a fixed primitive root of unity mod q.
Every emitted table is validated by exact row and column orthogonality; a
validation failure aborts instead of returning a bad table.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from ..exactmath.cyclo import Cyclotomic, lcm
from .classes import ClassData, conjugacy_classes
from .perm import GroupData


class TableValidationError(Exception):
    pass


# -- F_q linear algebra helpers -------------------------------------------


def _find_prime(group_order: int, exponent: int) -> int:
    threshold = 2 * isqrt(group_order) * exponent + 1
    q = threshold + ((1 - threshold) % exponent)
    if q <= threshold:
        q += exponent
    while True:
        if q > 2 and _is_prime(q):
            return q
        q += exponent


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primitive_root(q: int) -> int:
    factors = []
    m = q - 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            factors.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        factors.append(m)
    g = 2
    while True:
        if all(pow(g, (q - 1) // f, q) != 1 for f in factors):
            return g
        g += 1


def _sqrt_mod(a: int, q: int) -> int:
    """Tonelli-Shanks; assumes a is a quadratic residue mod prime q."""
    a %= q
    if a == 0:
        return 0
    if q % 4 == 3:
        return pow(a, (q + 1) // 4, q)
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    n = 2
    while pow(n, (q - 1) // 2, q) != q - 1:
        n += 1
    x = pow(a, (s + 1) // 2, q)
    b = pow(a, s, q)
    g = pow(n, s, q)
    r = e
    while True:
        t, m = b, 0
        while t != 1:
            t = t * t % q
            m += 1
        if m == 0:
            return x
        gs = pow(g, 1 << (r - m - 1), q)
        g = gs * gs % q
        x = x * gs % q
        b = b * g % q
        r = m


def _rref(mat: list[list[int]], q: int) -> tuple[list[list[int]], list[int]]:
    """Row-reduced echelon form over F_q; returns (rref, pivot columns)."""
    mat = [row[:] for row in mat]
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if mat[i][c] % q), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], q - 2, q)
        mat[r] = [x * inv % q for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] % q:
                f = mat[i][c] % q
                mat[i] = [(x - f * y) % q for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return mat[:r], pivots


def _nullspace(mat: list[list[int]], q: int) -> list[list[int]]:
    """Basis of the right nullspace over F_q, rows as vectors."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    red, pivots = _rref(mat, q)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * cols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-red[r][fc]) % q
        basis.append(vec)
    return basis


def _charpoly(mat: list[list[int]], q: int) -> list[int]:
    """Characteristic polynomial over F_q via Hessenberg reduction."""
    n = len(mat)
    h = [[x % q for x in row] for row in mat]
    for c in range(n - 2):
        piv = next((r for r in range(c + 1, n) if h[r][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            h[c + 1], h[piv] = h[piv], h[c + 1]
            for row in h:
                row[c + 1], row[piv] = row[piv], row[c + 1]
        inv = pow(h[c + 1][c], q - 2, q)
        for r in range(c + 2, n):
            if h[r][c]:
                f = h[r][c] * inv % q
                h[r] = [(x - f * y) % q for x, y in zip(h[r], h[c + 1])]
                for row in h:
                    row[c + 1] = (row[c + 1] + f * row[r]) % q
    # p_k(x) = charpoly of leading k x k block of the Hessenberg form
    polys = [[1]]
    for k in range(1, n + 1):
        # expand along the last row
        poly = [(-c) % q for c in _poly_scale(polys[k - 1], h[k - 1][k - 1], q)]
        poly = _poly_sub_shift(polys[k - 1], poly, q)
        run = 1
        for i in range(k - 2, -1, -1):
            run = run * h[i + 1][i] % q
            term = _poly_scale(polys[i], run * h[i][k - 1] % q, q)
            poly = _poly_axpy(poly, term, -1, q)
        polys.append(poly)
    return polys[n]


def _poly_scale(p: list[int], s: int, q: int) -> list[int]:
    return [x * s % q for x in p]


def _poly_sub_shift(prev: list[int], scaled_neg: list[int], q: int) -> list[int]:
    # x * prev - h * prev  where scaled_neg = (-h) * prev
    out = [0] + list(prev)
    for i, v in enumerate(scaled_neg):
        out[i] = (out[i] + v) % q
    return [x % q for x in out]


def _poly_axpy(a: list[int], b: list[int], s: int, q: int) -> list[int]:
    out = list(a)
    while len(out) < len(b):
        out.append(0)
    for i, v in enumerate(b):
        out[i] = (out[i] + s * v) % q
    return out


def _poly_roots(poly: list[int], q: int) -> list[int]:
    """All roots in F_q by evaluation (q is small by construction)."""
    roots = []
    for x in range(q):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % q
        if acc == 0:
            roots.append(x)
    return roots


# -- character table -------------------------------------------------------


class CharacterTable:
    """Exact ordinary character table: rows = irreducibles, cols = classes."""

    def __init__(self, group: GroupData, classdata: ClassData, rows: list[list[Cyclotomic]]):
        self.group = group
        self.classes = classdata
        degrees = [r[0].rational_value() for r in rows]
        if any(d.denominator != 1 or d <= 0 for d in degrees):
            raise TableValidationError("bad character degrees")
        order = sorted(
            range(len(rows)),
            key=lambda i: (degrees[i], [v.sort_key() for v in rows[i]]),
        )
        self.rows = [rows[i] for i in order]
        self.degrees = [int(degrees[i]) for i in order]
        self.char_labels = self._label_rows()
        self.label_to_row = {lab: i for i, lab in enumerate(self.char_labels)}

    def _label_rows(self) -> list[str]:
        labels = []
        seen: dict[int, int] = {}
        from .classes import _letters

        for d in self.degrees:
            k = seen.get(d, 0)
            seen[d] = k + 1
            labels.append(f"{d}{_letters(k)}")
        return labels

    def value(self, row: int, class_idx: int) -> Cyclotomic:
        return self.rows[row][class_idx]

    def validate(self) -> None:
        g = self.group
        cd = self.classes
        r = len(self.rows)
        if r != cd.n_classes():
            raise TableValidationError("row count != class count")
        if sum(d * d for d in self.degrees) != g.order:
            raise TableValidationError("sum of squared degrees != |G|")
        inv = cd.inverse_map
        sizes = [c.size for c in cd.classes]
        for i in range(r):
            for j in range(i, r):
                total = Cyclotomic.zero()
                for k in range(cd.n_classes()):
                    total = total + self.rows[i][k] * self.rows[j][inv[k]] * sizes[k]
                expect = g.order if i == j else 0
                if total != Cyclotomic.from_rational(expect):
                    raise TableValidationError(f"row orthogonality fails at ({i},{j})")
        for k in range(cd.n_classes()):
            for m in range(k, cd.n_classes()):
                total = Cyclotomic.zero()
                for i in range(r):
                    total = total + self.rows[i][k] * self.rows[i][inv[m]]
                expect = g.order // sizes[k] if k == m else 0
                if total != Cyclotomic.from_rational(expect):
                    raise TableValidationError(f"column orthogonality fails at ({k},{m})")

    def to_json(self):
        cd = self.classes
        return {
            "classes": [
                {"label": c.label, "size": c.size, "order": c.order} for c in cd.classes
            ],
            "powermaps": {str(p): list(pm) for p, pm in cd.powermaps.items()},
            "inverse_map": list(cd.inverse_map),
            "characters": [
                {"label": self.char_labels[i], "values": [v.to_json() for v in row]}
                for i, row in enumerate(self.rows)
            ],
        }


def _class_matrix(g: GroupData, cd: ClassData, i: int) -> list[list[int]]:
    """M_i with (M_i)[j][k] = #{x in C_i : x^{-1} z_k in C_j}."""
    r = cd.n_classes()
    mt = g.mtable()
    out = [[0] * r for _ in range(r)]
    reps = [c.rep for c in cd.classes]
    for x in cd.classes[i].members:
        xi = g.inv_idx(x)
        row = mt[xi]
        for k in range(r):
            j = cd.class_of[row[reps[k]]]
            out[j][k] += 1
    return out


def dixon_character_table(g: GroupData) -> CharacterTable:
    cd = conjugacy_classes(g)
    r = cd.n_classes()
    e = g.exponent()
    q = _find_prime(g.order, e)
    mats: dict[int, list[list[int]]] = {}

    def mat(i: int) -> list[list[int]]:
        if i not in mats:
            mats[i] = _class_matrix(g, cd, i)
        return mats[i]

    # common eigenvector refinement; spaces are (basis rows B) with the
    # invariant that the column space of B^T is invariant under every M_i.
    spaces = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]

    def refine_with(m: list[list[int]]) -> None:
        nonlocal spaces
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            # rows of `red` span an M-invariant subspace W; with red in rref,
            # the coordinate of v in W w.r.t. basis vector s is v[pivots[s]].
            red, pivots = _rref(basis, q)
            k = len(red)
            mb = [[0] * k for _ in range(r)]
            for i in range(r):
                mi = m[i]
                for l in range(r):
                    a = mi[l]
                    if a:
                        for t in range(k):
                            if red[t][l]:
                                mb[i][t] = (mb[i][t] + a * red[t][l]) % q
            a_small = [[mb[pivots[s]][t] for t in range(k)] for s in range(k)]
            poly = _charpoly(a_small, q)
            for lam in sorted(set(_poly_roots(poly, q))):
                shifted = [
                    [(a_small[i][j] - (lam if i == j else 0)) % q for j in range(k)]
                    for i in range(k)
                ]
                block = []
                for vec in _nullspace(shifted, q):
                    w = [0] * r
                    for t in range(k):
                        if vec[t]:
                            for i in range(r):
                                w[i] = (w[i] + vec[t] * red[t][i]) % q
                    block.append(w)
                if block:
                    new_spaces.append(block)
        spaces = new_spaces

    # a couple of pseudorandom combinations usually split everything
    rng_state = 0x9E3779B97F4A7C15
    combo_tries = 0
    while any(len(b) > 1 for b in spaces) and combo_tries < 3:
        combo = [[0] * r for _ in range(r)]
        coeffs = []
        for i in range(1, r):
            rng_state = (rng_state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
            coeffs.append((i, rng_state % q))
        for i, c in coeffs:
            if c:
                mi = mat(i)
                for a in range(r):
                    ca = combo[a]
                    ra = mi[a]
                    for b in range(r):
                        ca[b] = (ca[b] + c * ra[b]) % q
        refine_with(combo)
        combo_tries += 1
    for i in range(1, r):
        if all(len(b) == 1 for b in spaces):
            break
        refine_with(mat(i))
    if not all(len(b) == 1 for b in spaces):
        raise TableValidationError("failed to split class algebra into eigenvectors")
    assert len(spaces) == r

    # normalize each eigenvector into a central character mod q
    ident = cd.identity_class()
    inv = cd.inverse_map
    sizes = [c.size for c in cd.classes]
    rows_fp = []
    for (w,) in spaces:
        if w[ident] == 0:
            raise TableValidationError("eigenvector vanishes at the identity class")
        scale = pow(w[ident], q - 2, q)
        w = [x * scale % q for x in w]
        s = sum(w[k] * w[inv[k]] % q * pow(sizes[k], q - 2, q) for k in range(r)) % q
        chi1sq = g.order * pow(s, q - 2, q) % q
        chi1 = _sqrt_mod(chi1sq, q)
        if chi1 * chi1 % q != chi1sq:
            raise TableValidationError("degree is not a square mod q")
        if chi1 > q // 2:
            chi1 = q - chi1
        # chi(g_k) = w_k * chi1 / |C_k| mod q
        row = [w[k] * chi1 % q * pow(sizes[k], q - 2, q) % q for k in range(r)]
        rows_fp.append(row)

    # lift to exact cyclotomics using a fixed primitive e-th root mod q
    z = _primitive_root(q)
    w_e = pow(z, (q - 1) // e, q)
    rows: list[list[Cyclotomic]] = []
    inv_mod: dict[int, int] = {}

    def inv_of(n: int) -> int:
        if n not in inv_mod:
            inv_mod[n] = pow(n, q - 2, q)
        return inv_mod[n]

    power_class_cache: dict[tuple[int, int], int] = {}

    def power_class(ci: int, t: int) -> int:
        key = (ci, t)
        if key not in power_class_cache:
            power_class_cache[key] = cd.power_class(ci, t)
        return power_class_cache[key]

    for row_fp in rows_fp:
        chi1 = row_fp[ident]
        if chi1 > q // 2:
            raise TableValidationError("implausible lifted degree")
        out_row = []
        for k in range(r):
            o = cd.classes[k].order
            theta = pow(w_e, e // o, q)
            theta_pow = [1] * o
            for j in range(1, o):
                theta_pow[j] = theta_pow[j - 1] * theta % q
            vals = [row_fp[power_class(k, t)] for t in range(o)]
            total = Cyclotomic.zero()
            io = inv_of(o)
            for i in range(o):
                acc = 0
                for t in range(o):
                    acc = (acc + vals[t] * theta_pow[(-i * t) % o]) % q
                m_i = acc * io % q
                if m_i > q // 2:
                    raise TableValidationError("negative eigenvalue multiplicity in lift")
                if m_i:
                    total = total + Cyclotomic.zeta(o, i) * m_i
            out_row.append(total)
        rows.append(out_row)

    table = CharacterTable(g, cd, rows)
    table.validate()
    return table
