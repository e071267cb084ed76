"""Permutation constructions for the shipped corpus groups.

Each construction realizes a small group faithfully on few points:
  - affine types act on the vector space itself plus (when the point group is
    not faithful on vectors) a regular block for the point group;
  - others use natural or regular actions.
The corpus generator validates each construction against its reference
fingerprints before shipping it.
"""

from __future__ import annotations


def pt2(a, b, p):
    return (a % p) * p + (b % p)


def affine2_translations(p):
    t1 = tuple(pt2(a + 1, b, p) for a in range(p) for b in range(p))
    t2 = tuple(pt2(a, b + 1, p) for a in range(p) for b in range(p))
    return [t1, t2]


def linear2(mat, p):
    """Permutation of F_p^2 given by an integer 2x2 matrix."""
    (m00, m01), (m10, m11) = mat
    return tuple(
        pt2(m00 * a + m01 * b, m10 * a + m11 * b, p) for a in range(p) for b in range(p)
    )


def block_sum(perm_a, deg_a, perm_b, deg_b):
    """Permutation acting as perm_a on the first block and perm_b on the second."""
    return tuple(perm_a[i] for i in range(deg_a)) + tuple(deg_a + perm_b[i] for i in range(deg_b))


def ident(n):
    return tuple(range(n))


def regular_perms(elements, mul):
    """Left-regular permutations for each element of a finite group given as
    (elements list, multiplication function)."""
    idx = {e: i for i, e in enumerate(elements)}
    return {e: tuple(idx[mul(e, x)] for x in elements) for e in elements}


# -- F16 = F2[x]/(x^4+x+1) machinery --------------------------------------

F16_POLY = 0b10011


def f16_mul(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        if a & 0b10000:
            a ^= F16_POLY
        b >>= 1
    return out


def f16_pow(a, k):
    out = 1
    for _ in range(k):
        out = f16_mul(out, a)
    return out


def f16_perm_mul(c):
    return tuple(f16_mul(c, x) for x in range(16))


def f16_perm_frobenius(times=1):
    def frob(x):
        for _ in range(times):
            x = f16_mul(x, x)
        return x

    return tuple(frob(x) for x in range(16))


def f16_translation(v):
    return tuple(x ^ v for x in range(16))


# -- F4^2 as 16 points (pairs of F4 = F2[y]/(y^2+y+1)) ---------------------


def f4_mul(a, b):
    out = 0
    for i in range(2):
        if (b >> i) & 1:
            out ^= a << i
    # reduce modulo y^2 + y + 1 (bit 2 -> bits 1,0 ... y^2 = y + 1)
    if out & 0b100:
        out ^= 0b111
    if out & 0b100:
        out ^= 0b111
    return out & 0b11


def f4sq_idx(u, v):
    return (u & 3) * 4 + (v & 3)


def f4sq_translation(du, dv):
    return tuple(f4sq_idx(u ^ du, v ^ dv) for u in range(4) for v in range(4))


def f4sq_scalar(c):
    return tuple(f4sq_idx(f4_mul(c, u), f4_mul(c, v)) for u in range(4) for v in range(4))


def f4sq_swap():
    return tuple(f4sq_idx(v, u) for u in range(4) for v in range(4))


def f4sq_frobenius():
    return tuple(f4sq_idx(f4_mul(u, u), f4_mul(v, v)) for u in range(4) for v in range(4))


# -- F8 = F2[x]/(x^3+x+1) ---------------------------------------------------


def f8_mul(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        if a & 0b1000:
            a ^= 0b1011
        b >>= 1
    return out


# -- the constructions ------------------------------------------------------


def corpus_constructions():
    """name -> (degree, generators, description)."""
    out = {}

    # small sanity groups
    from zcverify.groups.perm import from_cycles

    out["S3"] = (3, [from_cycles(3, [(1, 2, 3)]), from_cycles(3, [(1, 2)])], "symmetric group on 3 points")
    out["D8"] = (4, [from_cycles(4, [(1, 2, 3, 4)]), from_cycles(4, [(1, 3)])], "dihedral of order 8")
    out["Q8"] = _quaternion8()
    out["A4"] = (4, [from_cycles(4, [(1, 2, 3)]), from_cycles(4, [(1, 2), (3, 4)])], "alternating group on 4 points")
    out["S4"] = (4, [from_cycles(4, [(1, 2, 3, 4)]), from_cycles(4, [(1, 2)])], "symmetric group on 4 points")
    out["C12"] = (12, [from_cycles(12, [tuple(range(1, 13))])], "cyclic of order 12")
    out["C2xS4"] = (
        6,
        [from_cycles(6, [(1, 2, 3, 4)]), from_cycles(6, [(1, 2)]), from_cycles(6, [(5, 6)])],
        "direct product C2 x S4",
    )

    # SG(48,30) = A4 : C4  (C4 acting through the transposition-conjugation)
    a4_1 = from_cycles(8, [(1, 2, 3)])
    a4_2 = from_cycles(8, [(1, 2), (3, 4)])
    t = from_cycles(8, [(1, 2), (5, 6, 7, 8)])
    out["SG(48,30)"] = (8, [a4_1, a4_2, t], "A4 : C4, order-4 part inducing a transposition")

    # SG(72,40) = S3 wr C2 = (C3 x C3) : D8 with the monomial action
    p = 3
    gens = affine2_translations(p) + [
        linear2(((-1, 0), (0, 1)), p),
        linear2(((0, 1), (1, 0)), p),
    ]
    out["SG(72,40)"] = (9, gens, "(C3 x C3) : D8, monomial action (S3 wr C2)")

    # SG(96,65) = A4 : C8: F4 (as C2^2) : (C3 : C8), C8 inverting C3 and
    # acting on F4 by Frobenius via its order-2 quotient... realized as
    # A4 block (degree 4) + regular C8 block twisted: t acts on A4 by the
    # transposition and cycles the 8-point block.
    a4a = from_cycles(12, [(1, 2, 3)])
    a4b = from_cycles(12, [(1, 2), (3, 4)])
    t8 = from_cycles(12, [(1, 2), (5, 6, 7, 8, 9, 10, 11, 12)])
    out["SG(96,65)"] = (12, [a4a, a4b, t8], "A4 : C8, order-8 part inducing a transposition")

    # SG(96,186) = C4 x S4
    s4a = from_cycles(8, [(1, 2, 3, 4)])
    s4b = from_cycles(8, [(1, 2)])
    c4 = from_cycles(8, [(5, 6, 7, 8)])
    out["SG(96,186)"] = (8, [s4a, s4b, c4], "direct product C4 x S4")

    # SG(96,227) = (C2^4) : S3 on F4^2: scalar C3 and coordinatewise Frobenius
    gens = [f4sq_translation(1, 0), f4sq_translation(0, 1), f4sq_scalar(2), f4sq_frobenius()]
    out["SG(96,227)"] = (16, gens, "C2^4 : S3 via F4-scalars and Frobenius on F4^2")

    # SG(144,117) = (C3^2) : D16, D16 acting through D8 in GL(2,3)
    rot = linear2(((0, -1), (1, 0)), 3)
    ref = linear2(((1, 0), (0, -1)), 3)
    d16 = _dihedral_regular(16)
    gr = block_sum(rot, 9, d16["r"], 16)
    gs = block_sum(ref, 9, d16["s"], 16)
    tr = [block_sum(g, 9, ident(16), 16) for g in affine2_translations(3)]
    out["SG(144,117)"] = (25, tr + [gr, gs], "(C3^2) : D16 through the rotation/reflection D8")

    # SG(144,119) = (C3^2) : Q16, same linear action, Q16 cover
    q16 = _quaternion_regular(16)
    gr = block_sum(rot, 9, q16["r"], 16)
    gs = block_sum(ref, 9, q16["s"], 16)
    out["SG(144,119)"] = (25, tr + [gr, gs], "(C3^2) : Q16 through the rotation/reflection D8")

    # SG(150,5) = (C5^2) : S3
    rot3 = linear2(((0, -1), (1, -1)), 5)
    swap = linear2(((0, 1), (1, 0)), 5)
    out["SG(150,5)"] = (25, affine2_translations(5) + [rot3, swap], "(C5^2) : S3")

    # SG(160,234) = (C2^4) : D10 on F16: multiplicative C5 and double Frobenius
    c5 = f16_perm_mul(f16_pow(2, 3))  # 2 generates F16*, 2^3 has order 5
    frob2 = f16_perm_frobenius(2)
    out["SG(160,234)"] = (16, [f16_translation(1), c5, frob2], "C2^4 : D10 on the field F16")

    # SG(168,43) = AGammaL(1,8): translations, F8*, Frobenius on F8
    t1 = tuple(x ^ 1 for x in range(8))
    mul2 = tuple(f8_mul(2, x) for x in range(8))
    frob = tuple(f8_mul(x, x) for x in range(8))
    out["SG(168,43)"] = (8, [t1, mul2, frob], "AGammaL(1,8)")

    # SG(192,955) = (C2^4) : D12 on F4^2: scalar C3, swap, coordinatewise Frobenius
    gens = [
        f4sq_translation(1, 0),
        f4sq_translation(0, 1),
        f4sq_scalar(2),
        f4sq_swap(),
        f4sq_frobenius(),
    ]
    out["SG(192,955)"] = (16, gens, "C2^4 : D12 via F4-scalars, swap and Frobenius")

    # SG(200,43) = (C5^2) : D8, monomial action
    d = linear2(((-1, 0), (0, 1)), 5)
    w = linear2(((0, 1), (1, 0)), 5)
    out["SG(200,43)"] = (25, affine2_translations(5) + [d, w], "(C5^2) : D8, monomial action")

    # SG(216,153) = (C3^2) : SL(2,3), the special affine group
    m = linear2(((1, 1), (0, 1)), 3)
    n = linear2(((1, 0), (1, 1)), 3)
    out["SG(216,153)"] = (9, affine2_translations(3) + [m, n], "(C3^2) : SL(2,3)")

    # SG(216,161) = (C3^3) : D8 acting as (rotation/reflection) + sign twist:
    # r -> R + 1, s -> S + (-1) on F3^2 + F3
    def lin3(m2, d, p=3):
        (a, b), (c, e) = m2
        def pt3(x, y, z):
            return (x % p) * p * p + (y % p) * p + (z % p)
        return tuple(
            pt3(a * x + b * y, c * x + e * y, d * z)
            for x in range(p)
            for y in range(p)
            for z in range(p)
        )

    tr3 = []
    for vec in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        def pt3(x, y, z, p=3):
            return (x % p) * p * p + (y % p) * p + (z % p)
        dx, dy, dz = vec
        tr3.append(
            tuple(
                pt3(x + dx, y + dy, z + dz)
                for x in range(3)
                for y in range(3)
                for z in range(3)
            )
        )
    r161 = lin3(((0, -1), (1, 0)), 1)
    s161 = lin3(((1, 0), (0, -1)), -1)
    out["SG(216,161)"] = (27, tr3 + [r161, s161], "(C3^3) : D8, reflection acting by -1 on the line")

    # SG(216,33) = (C3^3) : Q8 with the 2-dim symplectic action plus trivial line
    # Q8 in GL(2,3): i = [[0,-1],[1,0]], j = [[1,1],[1,-1]]
    i33 = lin3(((0, -1), (1, 0)), 1)
    j33 = lin3(((1, 1), (1, -1)), 1)
    out["SG(216,33)"] = (27, tr3 + [i33, j33], "(C3^3) : Q8, 2-dim faithful plus trivial line")

    # SG(216,35) = (C3^3) : D8, rotation/reflection plus trivial line
    r35 = lin3(((0, -1), (1, 0)), 1)
    s35 = lin3(((1, 0), (0, -1)), 1)
    out["SG(216,35)"] = (27, tr3 + [r35, s35], "(C3^3) : D8, trivial line")

    # SG(216,37) = (C3^3) : D8, rotation twisted by -1, reflection trivial line
    r37 = lin3(((0, -1), (1, 0)), -1)
    s37 = lin3(((1, 0), (0, -1)), 1)
    out["SG(216,37)"] = (27, tr3 + [r37, s37], "(C3^3) : D8, rotation acting by -1 on the line")

    # SG(240,91) = GL(2,5) / {+-1} acting on the 12 antipodal vector pairs
    out["SG(240,91)"] = _gl25_mod_center()

    return out


def _quaternion8():
    els = list(range(8))  # 1,-1,i,-i,j,-j,k,-k

    def qmul(a, b):
        table = [
            "1 -1 i -i j -j k -k",
        ]
        names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

        def split(x):
            s = names[x]
            if s.startswith("-"):
                return -1, s[1:]
            return 1, s

        sa, na = split(a)
        sb, nb = split(b)
        base = {
            ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
            ("i", "1"): "i", ("j", "1"): "j", ("k", "1"): "k",
            ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
            ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
            ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
        }
        r = base[(na, nb)]
        sign = sa * sb
        if r.startswith("-"):
            sign, r = -sign, r[1:]
        full = r if sign > 0 else "-" + r
        return names.index(full)

    perms = [tuple(qmul(g, x) for x in els) for g in (2, 4)]  # i, j
    return (8, perms, "quaternion group of order 8, regular representation")


def _dihedral_regular(n):
    """Left-regular permutations of r and s in D_n = <r^{n/2}, s>."""
    half = n // 2
    els = [("r", k) for k in range(half)] + [("sr", k) for k in range(half)]
    idx = {e: i for i, e in enumerate(els)}

    def mul(a, b):
        ta, ka = a
        tb, kb = b
        if ta == "r" and tb == "r":
            return ("r", (ka + kb) % half)
        if ta == "r" and tb == "sr":
            return ("sr", (kb - ka) % half)
        if ta == "sr" and tb == "r":
            return ("sr", (ka + kb) % half)
        return ("r", (kb - ka) % half)

    table = regular_perms(els, mul)
    return {"r": table[("r", 1)], "s": table[("sr", 0)]}


def _quaternion_regular(n):
    """Generalized quaternion Q_n = <a, b | a^{n/2}, b^2 = a^{n/4}, bab^-1 = a^-1>."""
    half = n // 2
    els = [("a", k) for k in range(half)] + [("ba", k) for k in range(half)]

    def mul(x, y):
        tx, kx = x
        ty, ky = y
        if tx == "a" and ty == "a":
            return ("a", (kx + ky) % half)
        if tx == "a" and ty == "ba":
            return ("ba", (ky - kx) % half)
        if tx == "ba" and ty == "a":
            return ("ba", (kx + ky) % half)
        return ("a", (ky - kx + half // 2) % half)

    table = regular_perms(els, mul)
    return {"r": table[("a", 1)], "s": table[("ba", 0)]}


def _gl25_mod_center():
    import itertools

    vecs = [(a, b) for a, b in itertools.product(range(5), repeat=2) if (a, b) != (0, 0)]
    pair_of = {}
    pairs = []
    for v in vecs:
        w = ((-v[0]) % 5, (-v[1]) % 5)
        if w in pair_of:
            pair_of[v] = pair_of[w]
        else:
            pair_of[v] = len(pairs)
            pairs.append(v)

    def act(mat):
        (a, b), (c, d) = mat
        images = [0] * len(pairs)
        for i, (x, y) in enumerate(pairs):
            nx, ny = (a * x + b * y) % 5, (c * x + d * y) % 5
            images[i] = pair_of[(nx, ny)]
        return tuple(images)

    g1 = act(((2, 0), (0, 1)))      # det = 2, order 4 scalar-ish part
    g2 = act(((4, 1), (4, 0)))      # standard second generator of GL(2,5)
    return (len(pairs), [g1, g2], "GL(2,5) modulo its central involution, on 12 antipodal pairs")
