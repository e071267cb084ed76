"""Bounded integer-point enumeration for rational linear systems.

A LinearSystem holds equalities and inequalities (coeff . x >= const) over
integer variables. Enumeration derives per-variable bounds (directly readable
single-variable rows, interval propagation, Fourier-Motzkin projection for
anything still open) and then runs a DFS with exact interval propagation on
the original rows. No floating point, no LP.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class UnboundedSystemError(Exception):
    """The rational relaxation has an unbounded direction."""


class LinearSystem:
    """equalities: coeff . x = const; inequalities: coeff . x >= const."""

    __slots__ = ("n_vars", "equalities", "inequalities")

    def __init__(self, n_vars: int, equalities=(), inequalities=()):
        self.n_vars = n_vars
        self.equalities = [
            (tuple(Fraction(c) for c in coeffs), Fraction(k)) for coeffs, k in equalities
        ]
        self.inequalities = [
            (tuple(Fraction(c) for c in coeffs), Fraction(k)) for coeffs, k in inequalities
        ]
        for coeffs, _ in self.equalities + self.inequalities:
            if len(coeffs) != n_vars:
                raise ValueError("row arity mismatch")

    def add_equality(self, coeffs, const) -> None:
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.n_vars:
            raise ValueError("row arity mismatch")
        self.equalities.append((coeffs, Fraction(const)))

    def add_inequality(self, coeffs, const) -> None:
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.n_vars:
            raise ValueError("row arity mismatch")
        self.inequalities.append((coeffs, Fraction(const)))

    def satisfies(self, point) -> bool:
        """Direct re-evaluation of every constraint at an integer point."""
        point = list(point)
        if len(point) != self.n_vars:
            return False
        for coeffs, k in self.equalities:
            if sum(c * x for c, x in zip(coeffs, point)) != k:
                return False
        for coeffs, k in self.inequalities:
            if sum(c * x for c, x in zip(coeffs, point)) < k:
                return False
        return True


def _int_rows(system: LinearSystem):
    """Scale rows to integer coefficients and constants."""

    def scale(coeffs, k):
        den = k.denominator
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return tuple(int(c * den) for c in coeffs), int(k * den)

    eqs = [scale(c, k) for c, k in system.equalities]
    ineqs = [scale(c, k) for c, k in system.inequalities]
    return eqs, ineqs


def _ceil_div(a: int, b: int) -> int:
    assert b > 0
    return -((-a) // b)


def _floor_div(a: int, b: int) -> int:
    assert b > 0
    return a // b


NEG_INF = object()
POS_INF = object()


def _fm_rows(eqs, ineqs):
    rows = list(ineqs)
    for coeffs, k in eqs:
        rows.append((coeffs, k))
        rows.append((tuple(-c for c in coeffs), -k))
    return rows


def _fm_normalize(rows):
    """Dedup by direction, keeping the strongest constant. Detect 0 >= c."""
    best: dict[tuple[int, ...], Fraction] = {}
    infeasible = False
    for coeffs, k in rows:
        if all(c == 0 for c in coeffs):
            if k > 0:
                infeasible = True
            continue
        g = 0
        for c in coeffs:
            g = gcd(g, abs(c))
        key = tuple(c // g for c in coeffs)
        strength = Fraction(k, g)
        if key not in best or strength > best[key]:
            best[key] = strength
    out = []
    for key, strength in best.items():
        den = strength.denominator
        out.append((tuple(c * den for c in key), int(strength * den)))
    return out, infeasible


def _fm_project_bounds(rows, n_vars: int, target: int):
    """Eliminate every variable except `target`; return (lo, hi) bounds.

    lo/hi are ints (integer rounding of the rational projection interval) or
    the NEG_INF/POS_INF sentinels. Returns "empty" if FM proves infeasibility.
    """
    rows, infeasible = _fm_normalize(rows)
    if infeasible:
        return "empty"
    remaining = [j for j in range(n_vars) if j != target]
    while remaining:
        # choose elimination variable minimizing pos*neg fill-in
        best_j, best_cost = None, None
        for j in remaining:
            pos = sum(1 for c, _ in rows if c[j] > 0)
            neg = sum(1 for c, _ in rows if c[j] < 0)
            cost = pos * neg
            if best_cost is None or cost < best_cost:
                best_j, best_cost = j, cost
        j = best_j
        remaining.remove(j)
        pos = [(c, k) for c, k in rows if c[j] > 0]
        neg = [(c, k) for c, k in rows if c[j] < 0]
        zero = [(c, k) for c, k in rows if c[j] == 0]
        new_rows = list(zero)
        for cp, kp in pos:
            for cn, kn in neg:
                a, b = cp[j], -cn[j]
                # b*row_p + a*row_n eliminates x_j
                coeffs = tuple(b * p + a * q for p, q in zip(cp, cn))
                new_rows.append((coeffs, b * kp + a * kn))
        rows, infeasible = _fm_normalize(new_rows)
        if infeasible:
            return "empty"
    lo, hi = NEG_INF, POS_INF
    for coeffs, k in rows:
        c = coeffs[target]
        if c > 0:
            b = _ceil_div(k, c)
            if lo is NEG_INF or b > lo:
                lo = b
        elif c < 0:
            b = _floor_div(-k, -c)
            if hi is POS_INF or b < hi:
                hi = b
    return lo, hi


def _sparse_rows(eqs, ineqs, n_vars: int):
    """Rows as (var indices, coefficients, const); equalities give two rows."""
    rows = []
    for coeffs, k in ineqs:
        idx = tuple(j for j, c in enumerate(coeffs) if c)
        rows.append((idx, tuple(coeffs[j] for j in idx), k))
    for coeffs, k in eqs:
        idx = tuple(j for j, c in enumerate(coeffs) if c)
        rows.append((idx, tuple(coeffs[j] for j in idx), k))
        rows.append((idx, tuple(-coeffs[j] for j in idx), -k))
    var_rows = [[] for _ in range(n_vars)]
    for rid, (idx, _, _) in enumerate(rows):
        for j in idx:
            var_rows[j].append(rid)
    return rows, var_rows


def _propagate(rows, var_rows, lo, hi, start_rows=None):
    """Tighten integer intervals [lo[j], hi[j]] to a fixpoint via the rows.

    Entries may be NEG_INF/POS_INF. Returns False on proven conflict.
    Mutates lo/hi in place. `start_rows` restricts the initial work queue.
    """
    if start_rows is None:
        queue = list(range(len(rows)))
    else:
        queue = list(start_rows)
    queued = [False] * len(rows)
    for rid in queue:
        queued[rid] = True
    head = 0
    while head < len(queue):
        rid = queue[head]
        head += 1
        queued[rid] = False
        idx, coeffs, k = rows[rid]
        smax = 0
        unbounded = -1
        for j, c in zip(idx, coeffs):
            if c > 0:
                h = hi[j]
                if h is POS_INF:
                    if unbounded >= 0:
                        unbounded = -2
                        break
                    unbounded = j
                else:
                    smax += c * h
            else:
                l = lo[j]
                if l is NEG_INF:
                    if unbounded >= 0:
                        unbounded = -2
                        break
                    unbounded = j
                else:
                    smax += c * l
        if unbounded == -2:
            continue
        if unbounded < 0 and smax < k:
            return False
        for j, c in zip(idx, coeffs):
            if unbounded >= 0 and j != unbounded:
                continue
            if unbounded < 0:
                rest = smax - (c * hi[j] if c > 0 else c * lo[j])
            else:
                rest = smax
            changed = False
            if c > 0:
                b = _ceil_div(k - rest, c)
                if lo[j] is NEG_INF or b > lo[j]:
                    lo[j] = b
                    changed = True
            else:
                b = _floor_div(-(k - rest), -c)
                if hi[j] is POS_INF or b < hi[j]:
                    hi[j] = b
                    changed = True
            if changed:
                if lo[j] is not NEG_INF and hi[j] is not POS_INF and lo[j] > hi[j]:
                    return False
                for rid2 in var_rows[j]:
                    if not queued[rid2]:
                        queued[rid2] = True
                        queue.append(rid2)
    return True


def enumerate_integer_points(
    system: LinearSystem, branch_first=None
) -> list[tuple[int, ...]]:
    """All integer solutions, lexicographically sorted.

    Raises UnboundedSystemError when the rational relaxation is unbounded in
    some coordinate (detected by Fourier-Motzkin projection). `branch_first`
    optionally lists variable indices the DFS should branch on before any
    others (pure heuristic; the result is independent of it).
    """
    n = system.n_vars
    if n == 0:
        ok = all(k == 0 for _, k in system.equalities) and all(
            k <= 0 for _, k in system.inequalities
        )
        return [()] if ok else []
    eqs, ineqs = _int_rows(system)
    rows, var_rows = _sparse_rows(eqs, ineqs, n)
    lo: list = [NEG_INF] * n
    hi: list = [POS_INF] * n
    if not _propagate(rows, var_rows, lo, hi):
        return []
    fm_rows = None
    for j in range(n):
        if lo[j] is NEG_INF or hi[j] is POS_INF:
            if fm_rows is None:
                fm_rows = _fm_rows(eqs, ineqs)
            res = _fm_project_bounds(fm_rows, n, j)
            if res == "empty":
                return []
            fm_lo, fm_hi = res
            if fm_lo is NEG_INF or fm_hi is POS_INF:
                raise UnboundedSystemError(f"variable {j} is unbounded")
            if lo[j] is NEG_INF or fm_lo > lo[j]:
                lo[j] = fm_lo
            if hi[j] is POS_INF or fm_hi < hi[j]:
                hi[j] = fm_hi
            if lo[j] > hi[j]:
                return []
    if not _propagate(rows, var_rows, lo, hi):
        return []

    preferred = list(branch_first) if branch_first else list(range(n))
    others = [j for j in range(n) if j not in set(preferred)]
    solutions: list[tuple[int, ...]] = []

    def pick_var(lo, hi):
        pick, width = -1, None
        for j in preferred:
            w = hi[j] - lo[j]
            if w > 0 and (width is None or w < width):
                pick, width = j, w
        if pick >= 0:
            return pick
        for j in others:
            w = hi[j] - lo[j]
            if w > 0 and (width is None or w < width):
                pick, width = j, w
        return pick

    def dfs(lo, hi):
        pick = pick_var(lo, hi)
        if pick < 0:
            solutions.append(tuple(lo))
            return
        for v in range(lo[pick], hi[pick] + 1):
            nlo, nhi = lo[:], hi[:]
            nlo[pick] = nhi[pick] = v
            if _propagate(rows, var_rows, nlo, nhi, start_rows=var_rows[pick]):
                dfs(nlo, nhi)

    dfs(lo, hi)
    solutions.sort()
    return solutions
