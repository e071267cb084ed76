"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored in the power basis zeta_n^0 .. zeta_n^(phi(n)-1) modulo the
n-th cyclotomic polynomial, with the conductor n always minimal for the value.
That makes equality a plain coefficient comparison, which the rest of the
engine relies on everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Rational = Fraction


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    assert n >= 1
    result = n
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    out = []
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return tuple(out)


@lru_cache(maxsize=None)
def moebius(n: int) -> int:
    if n == 1:
        return 1
    mu, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            mu = -mu
        p += 1
    if m > 1:
        mu = -mu
    return mu


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic up to leading +-1
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        assert r == 0
        out[i - dn] = q
        for j, dj in enumerate(den):
            num[i - dn + j] -= q * dj
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending degree."""
    if n == 1:
        return (-1, 1)
    poly = [0] * n + [1]
    poly[0] = -1  # x^n - 1
    for d in divisors(n):
        if d < n:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[Fraction, ...], ...]:
    # zeta_n^(phi+k) expressed in the power basis, for k = 0 .. n-2-phi... we
    # provide rows up to exponent 2*phi-2 (enough for products) and n-1
    # (enough for exponent folding).
    phi = euler_phi(n)
    top = max(2 * phi - 2, n - 1)
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * phi
    poly = cyclotomic_polynomial(n)
    # basis rows for exponents < phi are unit vectors; start at exponent phi
    prev = [Fraction(0)] * phi
    if phi >= 1:
        prev[phi - 1] = Fraction(1)  # zeta^(phi-1)
    # multiply repeatedly by zeta and reduce using Phi_n (monic)
    for _ in range(phi, top + 1):
        cur = [Fraction(0)] + prev[: phi - 1] if phi > 1 else [Fraction(0)]
        cur = list(cur)
        carry = prev[phi - 1]
        if carry:
            for j in range(phi):
                cur[j] -= carry * poly[j]
        rows.append(tuple(cur))
        prev = cur
    return tuple(rows)


def _reduce_exponent_map(n: int, e: int) -> tuple[Fraction, ...] | int:
    """Return either the basis index e (if e < phi) or the reduction row."""
    phi = euler_phi(n)
    e %= n
    if e < phi:
        return e
    return _reduction_rows(n)[e - phi]


class Cyclotomic:
    """Immutable element of some Q(zeta_n), always canonicalized."""

    __slots__ = ("n", "c", "_key")

    def __init__(self, n: int, coeffs: dict[int, Fraction], *, _canonical: bool = False):
        if _canonical:
            self.n = n
            self.c = coeffs
        else:
            n2, c2 = _canonicalize(n, coeffs)
            self.n = n2
            self.c = c2
        self._key = (self.n, tuple(sorted(self.c.items())))

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Cyclotomic":
        return Cyclotomic(1, {}, _canonical=True)

    @staticmethod
    def from_rational(q) -> "Cyclotomic":
        q = Fraction(q)
        if q == 0:
            return Cyclotomic.zero()
        return Cyclotomic(1, {0: q}, _canonical=True)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        assert n >= 1
        k %= n
        return Cyclotomic(n, {k: Fraction(1)})

    # -- basic queries -------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.n

    def is_zero(self) -> bool:
        return not self.c

    def is_rational(self) -> bool:
        return self.n == 1

    def rational_value(self) -> Fraction:
        if self.n != 1:
            raise ValueError("value is not rational")
        return self.c.get(0, Fraction(0))

    def is_integral(self) -> bool:
        """True iff all power-basis coefficients are integers."""
        return all(v.denominator == 1 for v in self.c.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Cyc(0)"
        if self.n == 1:
            return f"Cyc({self.c[0]})"
        terms = " + ".join(
            (f"{v}*z{self.n}^{e}" if e else str(v)) for e, v in sorted(self.c.items())
        )
        return f"Cyc({terms})"

    def sort_key(self):
        return self._key

    # -- arithmetic ----------------------------------------------------

    def _lift(self, m: int) -> dict[int, Fraction]:
        """Coefficients of self in the power basis of Q(zeta_m); n | m."""
        assert m % self.n == 0
        if m == self.n:
            return dict(self.c)
        step = m // self.n
        out: dict[int, Fraction] = {}
        for e, v in self.c.items():
            _acc_exponent(out, m, e * step, v)
        return out

    def __add__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        m = lcm(self.n, other.n)
        a = self._lift(m)
        for e, v in other._lift(m).items():
            w = a.get(e, Fraction(0)) + v
            if w:
                a[e] = w
            else:
                a.pop(e, None)
        return Cyclotomic(m, a)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.n, {e: -v for e, v in self.c.items()}, _canonical=True)

    def __sub__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return Cyclotomic.zero()
            return Cyclotomic(self.n, {e: v * q for e, v in self.c.items()}, _canonical=True)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Cyclotomic.zero()
        m = lcm(self.n, other.n)
        a = self._lift(m)
        b = other._lift(m)
        out: dict[int, Fraction] = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                _acc_exponent(out, m, e1 + e2, v1 * v2)
        return Cyclotomic(m, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Cyclotomic":
        assert k >= 0
        result = Cyclotomic.from_rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- Galois machinery ------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Image under zeta_n -> zeta_n^k; requires gcd(k, n) = 1."""
        if gcd(k, self.n) != 1:
            raise ValueError(f"galois exponent {k} not coprime to conductor {self.n}")
        if self.n == 1:
            return self
        out: dict[int, Fraction] = {}
        for e, v in self.c.items():
            _acc_exponent(out, self.n, e * k, v)
        return Cyclotomic(self.n, out)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self.n - 1 if self.n > 1 else 1)

    def rational_trace(self) -> Fraction:
        """Trace to Q from the (minimal) field Q(zeta_n) of the value."""
        return self.trace_in(self.n)

    def trace_in(self, m: int) -> Fraction:
        """Trace to Q from Q(zeta_m); the conductor must divide m.

        Tr(zeta_m^e) = mu(m/g) * phi(m) / phi(m/g) with g = gcd(e, m).
        """
        if m % self.n != 0:
            raise ValueError("conductor does not divide trace field")
        total = Fraction(0)
        phim = euler_phi(m)
        step = m // self.n
        for e, v in self.c.items():
            em = e * step
            g = gcd(em, m) if em else m
            total += v * (moebius(m // g) * (phim // euler_phi(m // g)))
        return total

    # -- serialization ---------------------------------------------------

    def to_json(self):
        return {
            "conductor": self.n,
            "terms": [[e, v.numerator, v.denominator] for e, v in sorted(self.c.items())],
        }

    @staticmethod
    def from_json(obj) -> "Cyclotomic":
        n = int(obj["conductor"])
        coeffs: dict[int, Fraction] = {}
        for e, num, den in obj["terms"]:
            e = int(e) % n
            q = Fraction(int(num), int(den))
            if q:
                coeffs[e] = coeffs.get(e, Fraction(0)) + q
        return Cyclotomic(n, coeffs)


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _acc_exponent(acc: dict[int, Fraction], n: int, e: int, v: Fraction) -> None:
    """Accumulate v * zeta_n^e into acc, folding into the power basis."""
    row = _reduce_exponent_map(n, e)
    if isinstance(row, int):
        w = acc.get(row, Fraction(0)) + v
        if w:
            acc[row] = w
        else:
            acc.pop(row, None)
        return
    for j, rj in enumerate(row):
        if rj:
            w = acc.get(j, Fraction(0)) + v * rj
            if w:
                acc[j] = w
            else:
                acc.pop(j, None)


@lru_cache(maxsize=None)
def _subfield_solver(n: int, d: int):
    """Row-reduced data expressing Q(zeta_d) inside Q(zeta_n), d | n.

    Returns (pivots, elim_rows) such that applying the recorded elimination to
    a coefficient vector over Q(zeta_n) either recovers coordinates over the
    zeta_d power basis or proves the value is not in the subfield.
    """
    phin, phid = euler_phi(n), euler_phi(d)
    step = n // d
    cols = []
    for j in range(phid):
        vec: dict[int, Fraction] = {}
        _acc_exponent(vec, n, j * step, Fraction(1))
        cols.append([vec.get(i, Fraction(0)) for i in range(phin)])
    # Gaussian elimination on the phin x phid matrix, recording operations.
    mat = [[cols[j][i] for j in range(phid)] for i in range(phin)]
    ops: list[tuple] = []
    pivots: list[int] = []
    row = 0
    for col in range(phid):
        sel = None
        for r in range(row, phin):
            if mat[r][col]:
                sel = r
                break
        assert sel is not None, "subfield basis must have full column rank"
        if sel != row:
            mat[row], mat[sel] = mat[sel], mat[row]
            ops.append(("swap", row, sel))
        inv = 1 / mat[row][col]
        if inv != 1:
            mat[row] = [x * inv for x in mat[row]]
            ops.append(("scale", row, inv))
        for r in range(phin):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
                ops.append(("axpy", r, row, f))
        pivots.append(col)
        row += 1
        if row == phin:
            break
    assert len(pivots) == phid
    return tuple(ops), phin, phid


def _try_rebase(n: int, coeffs: dict[int, Fraction], d: int) -> dict[int, Fraction] | None:
    """Rewrite coeffs (power basis of zeta_n) over zeta_d, or None if not in Q(zeta_d)."""
    ops, phin, phid = _subfield_solver(n, d)
    vec = [coeffs.get(i, Fraction(0)) for i in range(phin)]
    for op in ops:
        if op[0] == "swap":
            _, a, b = op
            vec[a], vec[b] = vec[b], vec[a]
        elif op[0] == "scale":
            _, r, f = op
            vec[r] *= f
        else:
            _, r, src, f = op
            vec[r] -= f * vec[src]
    # rows beyond phid must vanish for membership
    for i in range(phid, phin):
        if vec[i]:
            return None
    return {j: vec[j] for j in range(phid) if vec[j]}


def _canonicalize(n: int, coeffs: dict[int, Fraction]) -> tuple[int, dict[int, Fraction]]:
    # fold exponents into the power basis first
    folded: dict[int, Fraction] = {}
    for e, v in coeffs.items():
        if v:
            _acc_exponent(folded, n, e, v)
    if not folded:
        return 1, {}
    if set(folded) == {0}:
        return 1, folded
    # drop primes from the conductor while possible
    changed = True
    while changed and n > 1:
        changed = False
        for p in prime_factors(n):
            d = n // p
            reb = _try_rebase(n, folded, d)
            if reb is not None:
                n, folded = d, reb
                changed = True
                break
    return n, folded


# -- spec-facing operation wrappers ---------------------------------------


def cyclo_canonicalize(x: Cyclotomic) -> Cyclotomic:
    """Canonical form; a no-op because construction already canonicalizes."""
    return Cyclotomic(x.n, dict(x.c))


def galois_apply(x: Cyclotomic, k: int) -> Cyclotomic:
    return x.galois(k)


def rational_trace(x: Cyclotomic) -> Fraction:
    return x.rational_trace()
