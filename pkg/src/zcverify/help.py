"""HeLP+ constraint systems for candidate torsion units.

For a unit order n and a fixed power chain, the Luthar-Passi eigenvalue
multiplicities are affine forms in the unknown partial augmentations:

    mu_l(u, chi) = (1/n) * sum_{d | n} Tr_{Q(zeta_{n/d})/Q}( chi(u^d) * zeta_n^{-d*l} )

with chi(u^d) read from the chain for d > 1 and chi(u) = sum_x eps_x chi(x)
linear in the unknowns. The constraint system demands every mu_l to be a
nonnegative integer (one integer slack variable per distinct form), adds the
normalized-augmentation equality, folds the Berman-Higman and order-
divisibility vanishings into the variable choice, applies the same
multiplicity constraints to Brauer characters at primes coprime to n, and
finishes with the power-congruence filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .exactmath import Cyclotomic, LinearSystem, enumerate_integer_points
from .exactmath.cyclo import divisors
from .groups import CharacterTable, GroupData, conjugacy_classes
from .groups.brauer import BrauerData


@dataclass(frozen=True)
class PowerChain:
    """Classes of the proper powers of u: chain[e] holds u^{n/e} (order e)."""

    n: int
    assignment: tuple  # sorted tuple of (order e, class index)

    def as_dict(self) -> dict[int, int]:
        return dict(self.assignment)

    def class_for_power(self, d: int) -> int | None:
        """Class of u^d for a proper divisor d > 1 of n."""
        return self.as_dict().get(self.n // gcd(self.n, d))


@dataclass(frozen=True)
class CandidateSolution:
    group: str
    n: int
    chain: PowerChain
    pa: tuple                 # sorted tuple of (class index, eps) with eps != 0
    profile: tuple            # tuple of per-character mu tuples, row order of the table
    trivial: bool

    def pa_dict(self) -> dict[int, int]:
        return dict(self.pa)

    def support(self) -> frozenset:
        return frozenset(ci for ci, _ in self.pa)

    def to_json(self, table: CharacterTable):
        cd = table.classes
        return {
            "order": self.n,
            "chain": {str(e): cd.classes[ci].label for e, ci in self.chain.assignment},
            "pa": {cd.classes[ci].label: v for ci, v in self.pa},
            "trivial": self.trivial,
            "profile": {
                table.char_labels[i]: list(mus) for i, mus in enumerate(self.profile)
            },
        }


def allowed_classes(table: CharacterTable, n: int) -> list[int]:
    """Nonidentity classes whose element order divides n (Berman-Higman plus
    the order-divisibility criterion fold the other vanishings in)."""
    cd = table.classes
    return [i for i, c in enumerate(cd.classes) if c.order > 1 and n % c.order == 0]


def enumerate_power_chains(g: GroupData, n: int) -> list[PowerChain]:
    """All power-map-consistent assignments of classes to proper divisors."""
    cd = conjugacy_classes(g)
    orders = [e for e in divisors(n) if 1 < e < n]
    by_order: dict[int, list[int]] = {
        e: [i for i, c in enumerate(cd.classes) if c.order == e] for e in orders
    }
    if any(not by_order[e] for e in orders):
        return []
    chains: list[PowerChain] = []
    assignment: dict[int, int] = {}

    def consistent(e: int, ci: int) -> bool:
        for f, cj in assignment.items():
            if e % f == 0 and cd.power_class(ci, e // f) != cj:
                return False
            if f % e == 0 and cd.power_class(cj, f // e) != ci:
                return False
        return True

    def rec(idx: int) -> None:
        if idx == len(orders):
            chains.append(PowerChain(n, tuple(sorted(assignment.items()))))
            return
        e = orders[idx]
        for ci in by_order[e]:
            if consistent(e, ci):
                assignment[e] = ci
                rec(idx + 1)
                del assignment[e]

    rec(0)
    return chains


def _trace_in(value: Cyclotomic, m: int) -> Fraction:
    return value.trace_in(m)


def multiplicity_forms(
    values_at, degree: int, classes_idx: list[int], chain: PowerChain, n: int
):
    """Affine forms n*mu_l = b_l + sum_x a_{l,x} eps_x (integer coefficients).

    `values_at(ci)` returns the character value on class ci; the chain must
    only reference classes in its domain. Returns (coeff rows, consts): row l
    holds the eps coefficients of n*mu_l in the order of classes_idx.
    """
    chain_map = chain.as_dict()
    rows = []
    consts = []
    zcache = {l: Cyclotomic.zeta(n, (-l) % n) for l in range(n)}
    for l in range(n):
        const = Fraction(degree)  # the d = n term: Tr over Q of chi(1)
        for d in divisors(n):
            if d == 1 or d == n:
                continue
            e = n // d
            ci = chain_map[e]
            zl = Cyclotomic.zeta(e, (-l) % e)
            const += _trace_in(values_at(ci) * zl, e)
        coeffs = []
        for ci in classes_idx:
            coeffs.append(_trace_in(values_at(ci) * zcache[l], n))
        rows.append(coeffs)
        consts.append(const)
    # the coefficients are traces of algebraic integers, hence integers
    out_rows = []
    out_consts = []
    for coeffs, const in zip(rows, consts):
        assert const.denominator == 1
        assert all(c.denominator == 1 for c in coeffs)
        out_rows.append([int(c) for c in coeffs])
        out_consts.append(int(const))
    return out_rows, out_consts


@dataclass
class HelpSystem:
    """A built constraint system together with its variable layout."""

    system: LinearSystem
    classes_idx: list[int]          # eps variables, in order
    slack_forms: list[tuple]        # per slack: (coeff tuple over eps, const)
    form_of: dict                   # (source, row, l) -> slack position
    n: int


def build_constraint_system(
    g: GroupData,
    table: CharacterTable,
    chain: PowerChain,
    n: int,
    modular_data: list[BrauerData] | None = None,
) -> HelpSystem:
    cd = table.classes
    classes_idx = allowed_classes(table, n)
    k = len(classes_idx)
    sources = [("ordinary", table)]
    for bd in modular_data or []:
        if gcd(bd.prime, n) == 1:
            sources.append(("brauer", bd))

    slack_forms: list[tuple] = []
    slack_pos: dict[tuple, int] = {}
    form_of: dict = {}
    for tag, src in sources:
        if tag == "ordinary":
            n_rows = len(src.rows)

            def value_fn(ri):
                return lambda ci: src.rows[ri][ci]

            degrees = src.degrees
            label = "ordinary"
        else:
            n_rows = len(src.values)
            col_of = {ci: j for j, ci in enumerate(src.regular_classes)}

            def value_fn(ri, col_of=col_of, src=src):
                return lambda ci: src.values[ri][col_of[ci]]

            degrees = [src.degree(i) for i in range(n_rows)]
            label = f"brauer{src.prime}"
        for ri in range(n_rows):
            rows, consts = multiplicity_forms(
                value_fn(ri), degrees[ri], classes_idx, chain, n
            )
            for l in range(n):
                key = (tuple(rows[l]), consts[l])
                if key not in slack_pos:
                    slack_pos[key] = len(slack_forms)
                    slack_forms.append(key)
                form_of[(label, ri, l)] = slack_pos[key]

    n_vars = k + len(slack_forms)
    sys = LinearSystem(n_vars)
    # normalized augmentation
    sys.add_equality([1] * k + [0] * len(slack_forms), 1)
    # n * s_j - sum a eps = b   (so s_j = mu, integral by construction)
    for j, (coeffs, const) in enumerate(slack_forms):
        row = [-c for c in coeffs] + [0] * len(slack_forms)
        row[k + j] = n
        sys.add_equality(row, const)
        srow = [0] * n_vars
        srow[k + j] = 1
        sys.add_inequality(srow, 0)
    # provable per-class box, keeps bound derivation trivial
    for i, ci in enumerate(classes_idx):
        bound = isqrt(cd.classes[ci].size)
        row = [0] * n_vars
        row[i] = 1
        sys.add_inequality(row, -bound)
        row2 = [0] * n_vars
        row2[i] = -1
        sys.add_inequality(row2, -bound)
    return HelpSystem(
        system=sys, classes_idx=classes_idx, slack_forms=slack_forms, form_of=form_of, n=n
    )


def profile_of(
    table: CharacterTable, chain: PowerChain, n: int, pa: dict[int, int]
) -> tuple:
    """Exact eigenvalue multiplicities per ordinary character."""
    classes_idx = sorted(pa)
    out = []
    for ri in range(len(table.rows)):
        rows, consts = multiplicity_forms(
            lambda ci: table.rows[ri][ci], table.degrees[ri], classes_idx, chain, n
        )
        mus = []
        for l in range(n):
            total = consts[l] + sum(
                c * pa[ci] for c, ci in zip(rows[l], classes_idx)
            )
            q, r = divmod(total, n)
            assert r == 0 and q >= 0, "profile must be nonnegative integers"
            mus.append(q)
        assert sum(mus) == table.degrees[ri]
        out.append(tuple(mus))
    return tuple(out)


def pa_power_congruence(
    table: CharacterTable, chain: PowerChain, n: int, pa: dict[int, int]
) -> bool:
    """Partial-augmentation power congruence for each prime p dividing n:

        eps_x(u^p)  =  sum over classes y with y^p in x of eps_y(u)   (mod p)

    with eps(u^p) read from the chain (delta at the chain class, or at the
    identity class when p = n)."""
    cd = table.classes
    chain_map = chain.as_dict()
    for p in range(2, n + 1):
        if n % p or not _is_prime_small(p):
            continue
        target_class = cd.identity_class() if p == n else chain_map[n // p]
        sums: dict[int, int] = {}
        for ci, v in pa.items():
            x = cd.power_class(ci, p)
            sums[x] = sums.get(x, 0) + v
        for x in set(sums) | {target_class}:
            want = 1 if x == target_class else 0
            if (sums.get(x, 0) - want) % p != 0:
                return False
    return True


def power_congruence_filter(
    table: CharacterTable, chain: PowerChain, n: int, pa: dict[int, int]
) -> bool:
    """Frobenius-type congruence: chi(u)^p - chi(u^p) in p*Z[zeta] for p | n."""
    primes = [p for p in range(2, n + 1) if n % p == 0 and _is_prime_small(p)]
    chain_map = chain.as_dict()
    for ri in range(len(table.rows)):
        chi_u = Cyclotomic.zero()
        for ci, v in pa.items():
            chi_u = chi_u + table.rows[ri][ci] * v
        for p in primes:
            if n == p:
                chi_up = Cyclotomic.from_rational(table.degrees[ri])
            else:
                chi_up = table.rows[ri][chain_map[n // p]]
            w = chi_u**p - chi_up
            if w.is_zero():
                continue
            if not w.is_integral():
                return False
            if any(v.numerator % p for v in w.c.values()):
                return False
    return True


def _is_prime_small(p: int) -> bool:
    return p > 1 and all(p % d for d in range(2, isqrt(p) + 1))


def solve_order(
    g: GroupData,
    table: CharacterTable,
    n: int,
    modular_data: list[BrauerData] | None = None,
) -> list[CandidateSolution]:
    """All HeLP+ candidate solutions of order n, deterministically ordered."""
    solutions = []
    seen = set()
    for chain in enumerate_power_chains(g, n):
        built = build_constraint_system(g, table, chain, n, modular_data)
        eps_vars = list(range(len(built.classes_idx)))
        for point in enumerate_integer_points(built.system, branch_first=eps_vars):
            eps = {
                ci: point[i] for i, ci in enumerate(built.classes_idx) if point[i]
            }
            if not pa_power_congruence(table, chain, n, eps):
                continue
            if not power_congruence_filter(table, chain, n, eps):
                continue
            pa = tuple(sorted(eps.items()))
            key = (chain.assignment, pa)
            if key in seen:
                continue
            seen.add(key)
            profile = profile_of(table, chain, n, eps)
            trivial = len(eps) == 1
            if trivial:
                ((ci, v),) = eps.items()
                assert v == 1
            solutions.append(
                CandidateSolution(
                    group=g.name,
                    n=n,
                    chain=chain,
                    pa=pa,
                    profile=profile,
                    trivial=trivial,
                )
            )
    solutions.sort(key=lambda s: (s.chain.assignment, s.pa))
    return solutions
