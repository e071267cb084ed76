import itertools
import random

import pytest

from zcverify.exactmath import IntMatrix, hermite_normal_form, integer_solve, smith_normal_form
from zcverify.exactmath.intmat import (
    integer_solve_certified,
    integer_solve_row_reduced,
    solvable_mod_prime_power,
)


def test_hnf_identity():
    i3 = IntMatrix.identity(3)
    h, u = hermite_normal_form(i3)
    assert h == i3 and u == i3


def test_hnf_2x2_example():
    a = IntMatrix([[2, 4], [1, 3]])
    h, u = hermite_normal_form(a)
    assert u.mul(a) == h
    assert h.entries[1][0] == 0
    assert h.entries[0][0] > 0 and h.entries[1][1] > 0
    # |det| preserved by the unimodular transform
    assert abs(h.entries[0][0] * h.entries[1][1]) == 2


def test_hnf_zero_matrix():
    z = IntMatrix.zero(3, 2)
    h, u = hermite_normal_form(z)
    assert h == z
    assert u.mul(z) == h


def test_hnf_random_property():
    rng = random.Random(17)
    for _ in range(300):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        a = IntMatrix([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        h, u = hermite_normal_form(a)
        assert u.mul(a) == h
        # pivot structure: pivot columns strictly increase, pivots positive
        last = -1
        for row in h.entries:
            nz = next((j for j, x in enumerate(row) if x), None)
            if nz is None:
                continue
            assert nz > last and row[nz] > 0
            last = nz


def test_smith_normal_form_random():
    rng = random.Random(23)
    for _ in range(200):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        a = IntMatrix([[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)])
        d, u, v = smith_normal_form(a)
        assert u.mul(a).mul(v) == d
        diag = [d.entries[i][i] for i in range(min(r, c))]
        for i in range(min(r, c)):
            for j in range(min(r, c)):
                if i != j:
                    assert d.entries[i][j] == 0
        nz = [x for x in diag if x]
        for x, y in zip(nz, nz[1:]):
            assert y % x == 0


def test_integer_solve_trivial_cases():
    assert integer_solve(IntMatrix([[2]]), [4]) == [2]
    assert integer_solve(IntMatrix([[2]]), [3]) is None


def test_integer_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        integer_solve(IntMatrix([[1, 2]]), [1, 2])


def test_integer_solve_oracle_1000():
    """Agreement with an exhaustive bounding-box oracle.

    Sound directions: any solution the solver returns verifies exactly; when
    the solver says None there is no solution in the box; and systems built
    as b = A x0 (known solvable) are always solved.
    """
    rng = random.Random(41)
    disagreements = 0
    for trial in range(1000):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        a = IntMatrix([[rng.randint(-2, 2) for _ in range(c)] for _ in range(r)])
        if trial % 2 == 0:
            x0 = [rng.randint(-3, 3) for _ in range(c)]
            b = a.mul_vec(x0)
            known_solvable = True
        else:
            b = [rng.randint(-4, 4) for _ in range(r)]
            known_solvable = False
        got = integer_solve(a, b)
        if got is not None:
            if a.mul_vec(got) != b:
                disagreements += 1
        elif known_solvable:
            disagreements += 1
        else:
            for x in itertools.product(range(-6, 7), repeat=c):
                if a.mul_vec(list(x)) == b:
                    disagreements += 1
                    break
    assert disagreements == 0


def test_integer_solve_random_5x7():
    rng = random.Random(59)
    a = IntMatrix([[rng.randint(-3, 3) for _ in range(7)] for _ in range(5)])
    x0 = [rng.randint(-3, 3) for _ in range(7)]
    b = a.mul_vec(x0)
    got = integer_solve(a, b)
    assert got is not None and a.mul_vec(got) == b


def test_row_reduced_solver_agrees():
    rng = random.Random(67)
    for _ in range(200):
        r, c = rng.randint(1, 5), rng.randint(1, 4)
        a = IntMatrix([[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)])
        b = [rng.randint(-5, 5) for _ in range(r)]
        x1, _ = integer_solve_certified(a, b)
        x2, _ = integer_solve_row_reduced(a, b)
        assert (x1 is None) == (x2 is None)
        if x2 is not None:
            assert a.mul_vec(x2) == b


def test_solvable_mod_prime_power_agrees_with_exact():
    rng = random.Random(71)
    for _ in range(300):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        b = [rng.randint(-6, 6) for _ in range(r)]
        p, k = rng.choice([(2, 3), (3, 2), (5, 1)])
        ok, _cert = solvable_mod_prime_power(rows, b, p, k)
        # oracle: exhaustive over (Z/p^k)^c
        m = p**k
        oracle = any(
            all(sum(q * xj for q, xj in zip(row, x)) % m == bi % m for row, bi in zip(rows, b))
            for x in itertools.product(range(m), repeat=c)
        )
        assert ok == oracle
