#!/usr/bin/env python3
"""Brute-force oracles for the frozen constants in the C++ unit tests.

Everything here is enumeration over tiny finite fields and lattices; nothing
calls into the C++ library. Run it to regenerate the values quoted in
tests/unit/*_test.cpp.
"""
import itertools


def legendre_bruteforce(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if any((x * x) % p == a for x in range(1, p)) else -1


# ---------------------------------------------------------------- F_{p^k}
def poly_mulmod(a, b, mod, p):
    """a, b coefficient lists low->high; mod monic low->high."""
    k = len(mod) - 1
    prod = [0] * (2 * k)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            for j in range(k + 1):
                prod[i - k + j] -= c * mod[j]
    return tuple(x % p for x in prod[:k])


def all_elements(p, k):
    return [tuple(t) for t in itertools.product(range(p), repeat=k)]


def monic_polys(p, deg):
    # lexicographic from the leading coefficient downward
    for tail in itertools.product(range(p), repeat=deg):
        yield list(reversed(tail)) + [1]


def has_root_free_factorization(f, p):
    """Irreducibility by exhaustive trial division (degree <= 4 only)."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for g in monic_polys(p, d):
            if poly_divides(g, f, p):
                return False
    return True


def poly_divides(g, f, p):
    r = list(f)
    dg = len(g) - 1
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i] % p
        if c:
            for j in range(dg + 1):
                r[i - dg + j] -= c * g[j]
    return all(x % p == 0 for x in r[:dg])


def least_irreducible(p, k):
    for f in monic_polys(p, k):
        if k == 1 or has_root_free_factorization(f, p):
            return f


def elem_eval(coeffs, x, mod, p):
    """coeffs: list of field elements (tuples) low->high."""
    k = len(mod) - 1
    acc = tuple([0] * k)
    for c in reversed(coeffs):
        acc = poly_mulmod(acc, x, mod, p)
        acc = tuple((u + v) % p for u, v in zip(acc, c))
    return acc


def embed_int(v, k, p):
    return tuple([v % p] + [0] * (k - 1))


def count_roots(coeffs_int_or_elem, p, k):
    mod = least_irreducible(p, k)
    roots = []
    for x in all_elements(p, k):
        coeffs = [c if isinstance(c, tuple) else embed_int(c, k, p)
                  for c in coeffs_int_or_elem]
        if all(v == 0 for v in elem_eval(coeffs, x, mod, p)):
            roots.append(x)
    return roots


# ------------------------------------------------------- ideals in Z[sqrt m]
def ideal_is_principal(a, b, d):
    """Ideal aZ + ((-b + sqrt d)/2)Z has norm a; principal iff some element
    has norm exactly a.  Elements x*a + y*(-b+sqrt d)/2; norm is the form
    a x^2 - b x y ... ; brute force over a box that covers the reduced
    minimum (|d| small)."""
    c = (b * b - d) // (4 * a)
    # N(x a + y w) / a = a x^2 - b x y + c y^2
    for x in range(-40, 41):
        for y in range(-40, 41):
            if (x, y) != (0, 0) and a * x * x - b * x * y + c * y * y == 1:
                return True
    return False


def ideal_mul_hnf(I, J, d):
    """I, J as (a, b) meaning aZ + ((-b+sqrt d)/2)Z with d = 4m.  Returns
    HNF (A, B, g) of the product: g * (A Z + ((-B + sqrt d)/2) Z)."""
    m = d // 4
    def gens(a, b):
        return [(a, 0), (-b // 2, 1)]  # (u, v) = u + v sqrt m
    prods = []
    for (u1, v1) in gens(*I):
        for (u2, v2) in gens(*J):
            prods.append((u1 * u2 + m * v1 * v2, u1 * v2 + u2 * v1))
    # Z-module HNF of rank-2 lattice in basis (1, sqrt m)
    import math
    g_v = 0
    for _, v in prods:
        g_v = math.gcd(g_v, v)
    # find combination with v = g_v via extended gcd over the list
    vecs = [list(t) for t in prods]
    # simple lattice reduction by repeated gcd steps on second coord
    while sum(1 for v in vecs if v[1] != 0) > 1:
        vecs = [v for v in vecs if v != [0, 0]]
        nz = [v for v in vecs if v[1] != 0]
        piv = min(nz, key=lambda v: abs(v[1]))
        new = []
        for v in vecs:
            if v is piv or v[1] == 0:
                new.append(v)
            else:
                q = v[1] // piv[1]
                new.append([v[0] - q * piv[0], v[1] - q * piv[1]])
        vecs = new
    piv = [v for v in vecs if v[1] != 0][0]
    A = 0
    for v in vecs:
        if v[1] == 0:
            A = math.gcd(A, v[0])
    if piv[1] < 0:
        piv = [-piv[0], -piv[1]]
    gv = piv[1]
    # ideal = A Z + (piv0 + gv sqrt m) Z, content gv
    Ared = A // gv
    u = piv[0] // gv
    # (-B + sqrt d)/2 = -B/2 + sqrt m  => B = -2u, normalise mod 2A
    B = (-2 * u) % (2 * Ared)
    return Ared, B, gv


def classes_of_ideals_d56():
    d = -56
    forms = [(1, 0), (2, 0), (3, 2), (3, -2)]
    def same_class(I, J):
        # I ~ J iff I * conj(J) principal; conj of (a,b) is (a,-b)
        A, B, _ = ideal_mul_hnf(I, (J[0], -J[1]), d)
        Bc = B if B <= A else B - 2 * A
        return ideal_is_principal(A, Bc, d)
    return forms, same_class


def main():
    print("kronecker(-56,137) =", legendre_bruteforce(-56, 137))
    print("x^2+5 over F_3 roots:", count_roots([5, 0, 1], 3, 1))
    print("x^4+4x^2-28 over F_137 roots:", len(count_roots([-28, 0, 4, 0, 1], 137, 1)))
    roots = sorted(x for x in range(137) if (x * x) % 137 == (-14) % 137)
    print("sqrt(-14) mod 137:", roots, "-14 mod 137 =", (-14) % 137)
    print("least irreducible F_3 deg 2:", least_irreducible(3, 2))
    print("least irreducible F_2 deg 4:", least_irreducible(2, 4))
    print("least irreducible F_2 deg 2:", least_irreducible(2, 2))
    print("least irreducible F_5 deg 2:", least_irreducible(5, 2))

    forms, same_class = classes_of_ideals_d56()
    sq = ideal_mul_hnf((3, 2), (3, 2), -56)
    A, B, g = sq
    Bc = B if B <= A else B - 2 * A
    print("(3,2,5)^2 ideal HNF:", (A, Bc, g),
          "~ (2,0,7):", same_class((A, Bc), (2, 0)),
          "~ principal:", ideal_is_principal(A, Bc, -56))
    print("prime above 7 (7,0): principal?", ideal_is_principal(7, 0, -56),
          "~ (2,0,7):", same_class((7, 0), (2, 0)))

    # Splitting of the primes above 3 and 137 in L = K(beta)(sqrt -5).
    m = -14
    for p in (3, 137, 11, 13):
        kr = legendre_bruteforce(4 * m, p)
        if kr == 1:
            r = min(x for x in range(p) if (x * x - 4 * m) % p == 0)
            b1 = r if r % 2 == 0 else r + p
            for label, b in ((1, b1), (2, -b1)):
                s = (b // 2) % p
                level1 = [33 + 44 * s, 22 + 4 * s, 1]
                r1 = count_roots(level1, p, 1)
                data = []
                if len(r1) == 2:
                    for _ in r1:
                        r2 = count_roots([5, 0, 1], p, 1)
                        data += [(1, 1)] * 2 if len(r2) == 2 else [(1, 2)]
                elif len(r1) == 0:
                    # residue field F_{p^2}
                    r2 = count_roots([5, 0, 1], p, 2)
                    data += [(1, 2)] * 2 if len(r2) == 2 else [(1, 4)]
                print(f"p={p} split label {label} b={b}: level1 roots {len(r1)}, splitting {sorted(data)}")
        elif kr == -1:
            k = 2
            mod = least_irreducible(p, k)
            sq = [x for x in all_elements(p, k) if poly_mulmod(x, x, mod, p) == embed_int(m, k, p)]
            s = min(sq)
            coeffs = [tuple((u * (1 if i == 0 else 0) + v * s[i]) % p for i in range(k))
                      for (u, v) in ((33, 44), (22, 4), (1, 0))]
            r1 = count_roots(coeffs, p, 2)
            data = []
            if len(r1) == 2:
                r2 = count_roots([5, 0, 1], p, 2)
                for _ in r1:
                    data += [(1, 1)] * 2 if len(r2) == 2 else [(1, 2)]
            else:
                r2 = count_roots([5, 0, 1], p, 4)
                data += [(1, 2)] * 2 if len(r2) == 2 else [(1, 4)]
            print(f"p={p} inert: level1 roots over F_p^2 {len(r1)}, splitting {sorted(data)}")

    for line in splitting_table():
        print(line)

def splitting_table(p_max=300):
    """Splitting of every good prime of K = Q(sqrt -14) below p_max in the
    tower beta^2 + (22+4s)beta + (33+44s), gamma^2 + 5, with the ideal class
    of the prime.  x^2 + 5 always splits over F_{p^2}, so residue fields
    beyond F_{p^2} never need enumerating."""
    m, d = -14, -56
    forms, same_class = classes_of_ideals_d56()
    names = {(1, 0): "(1,0,14)", (2, 0): "(2,0,7)", (3, 2): "(3,2,5)", (3, -2): "(3,-2,5)"}
    lines = []
    for p in range(3, p_max):
        if any(p % q == 0 for q in range(2, p)) or p in (5, 7):
            continue
        kr = legendre_bruteforce(d, p)
        gamma_split_fp = len(count_roots([5, 0, 1], p, 1)) == 2
        if kr == 1:
            r = min(x for x in range(p) if (x * x - d) % p == 0)
            b1 = r if r % 2 == 0 else r + p
            for label, b in ((1, b1), (2, -b1)):
                s = (b // 2) % p
                r1 = count_roots([33 + 44 * s, 22 + 4 * s, 1], p, 1)
                if len(r1) == 2:
                    data = [(1, 1)] * 4 if gamma_split_fp else [(1, 2)] * 2
                elif len(r1) == 0:
                    data = [(1, 2)] * 2
                else:
                    data = None
                cls = [names[f] for f in forms if same_class((p, b), f)]
                lines.append(f"P({p},{label}) {data} {cls[0]}")
        else:
            k = 2
            mod = least_irreducible(p, k)
            sq = [x for x in all_elements(p, k) if poly_mulmod(x, x, mod, p) == embed_int(m, k, p)]
            s = min(sq)
            coeffs = [tuple((u * (1 if i == 0 else 0) + v * s[i]) % p for i in range(k))
                      for (u, v) in ((33, 44), (22, 4), (1, 0))]
            r1 = count_roots(coeffs, p, 2)
            data = [(1, 1)] * 4 if len(r1) == 2 else [(1, 2)] * 2
            lines.append(f"P({p}) {data} (1,0,14)")
    return lines


if __name__ == "__main__":
    main()
