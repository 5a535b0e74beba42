#!/usr/bin/env python3
"""Regenerates src/sextic_invariants_table.inc.

Each Igusa-Clebsch invariant of f = sum_i a_i t^(6-i) is defined through the
roots r_1..r_6 of f:

  I2  = a0^2  * sum_15 (12)^2 (34)^2 (56)^2
  I4  = a0^4  * sum_10 (12)^2 (23)^2 (31)^2 (45)^2 (56)^2 (64)^2
  I6  = a0^6  * sum_60 (12)^2 (23)^2 (31)^2 (45)^2 (56)^2 (64)^2 (14)^2 (25)^2 (36)^2
  I10 = a0^10 * prod_{i<j} (ij)^2

where (ij) = r_i - r_j. Each is a homogeneous isobaric polynomial in a0..a6
(degree 2k, weight 6k). We fit the coefficients of every admissible monomial
by sampling sextics with integer roots, solving the linear system modulo
several primes, lifting by CRT, and checking the result exactly on fresh
sextics with rational roots.
"""
import itertools
import random
import sys
from fractions import Fraction


def pairings(items):
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for p in pairings(rest):
            yield [(first, items[i])] + p


def triple_splits():
    idx = list(range(6))
    for t in itertools.combinations(idx, 3):
        if 0 in t:
            yield t, tuple(i for i in idx if i not in t)


def d2(r, i, j):
    return (r[i] - r[j]) ** 2


def root_invariants(a0, r):
    i2 = sum(d2(r, *p[0]) * d2(r, *p[1]) * d2(r, *p[2]) for p in pairings(list(range(6))))
    i4 = 0
    i6 = 0
    for t1, t2 in triple_splits():
        tri = (d2(r, t1[0], t1[1]) * d2(r, t1[1], t1[2]) * d2(r, t1[2], t1[0])
               * d2(r, t2[0], t2[1]) * d2(r, t2[1], t2[2]) * d2(r, t2[2], t2[0]))
        i4 += tri
        for perm in itertools.permutations(t2):
            m = 1
            for a, b in zip(t1, perm):
                m *= d2(r, a, b)
            i6 += tri * m
    i10 = 1
    for i, j in itertools.combinations(range(6), 2):
        i10 *= d2(r, i, j)
    return [a0 ** 2 * i2, a0 ** 4 * i4, a0 ** 6 * i6, a0 ** 10 * i10]


def coeffs_from_roots(a0, r):
    # a0 * prod (t - r_i), highest degree first
    poly = [Fraction(a0)]
    for root in r:
        nxt = poly + [Fraction(0)]
        for k in range(len(poly)):
            nxt[k + 1] -= root * poly[k]
        poly = nxt
    return poly


def monomials(degree, weight):
    out = []

    def rec(i, deg_left, w_left, cur):
        if i == 7:
            if deg_left == 0 and w_left == 0:
                out.append(tuple(cur))
            return
        for e in range(deg_left + 1):
            if i * e > w_left:
                break
            rec(i + 1, deg_left - e, w_left - i * e, cur + [e])

    rec(0, degree, weight, [])
    return out


PRIMES = [(1 << 61) - 1, (1 << 31) - 1, 1000000007, 998244353]


def solve_mod(rows, rhs, p):
    n = len(rows[0])
    m = [[x % p for x in row] + [v % p] for row, v in zip(rows, rhs)]
    piv_row = 0
    where = [-1] * n
    for col in range(n):
        sel = next((r for r in range(piv_row, len(m)) if m[r][col]), None)
        if sel is None:
            continue
        m[piv_row], m[sel] = m[sel], m[piv_row]
        inv = pow(m[piv_row][col], p - 2, p)
        m[piv_row] = [x * inv % p for x in m[piv_row]]
        prow = m[piv_row]
        for r in range(len(m)):
            if r != piv_row and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], prow)]
        where[col] = piv_row
        piv_row += 1
    if any(w < 0 for w in where):
        raise RuntimeError("underdetermined system")
    return [m[where[c]][n] for c in range(n)]


def solve(rows, rhs):
    """Integer solution by CRT over several primes; verified exactly afterwards."""
    modulus = 1
    acc = None
    for p in PRIMES:
        sol = solve_mod(rows, rhs, p)
        if acc is None:
            acc = sol
        else:
            acc = [a + modulus * (((s - a) * pow(modulus, -1, p)) % p) for a, s in zip(acc, sol)]
        modulus *= p
    half = modulus // 2
    return [Fraction(a - modulus if a > half else a) for a in acc]


def main():
    rng = random.Random(20240611)
    table = {}
    for k, (deg, wt) in enumerate([(2, 6), (4, 12), (6, 18), (10, 30)]):
        mons = monomials(deg, wt)
        rows, rhs = [], []
        while len(rows) < 2 * len(mons) + 20:
            a0 = rng.choice([1, 2, 3, -1, -2])
            r = [rng.randint(-40, 40) for _ in range(6)]
            a = coeffs_from_roots(a0, r)
            rows.append([eval_mon(a, e) for e in mons])
            rhs.append(root_invariants(a0, r)[k])
        sol = solve([[int(x) for x in row] for row in rows], [int(v) for v in rhs])
        table[k] = [(c, e) for c, e in zip(sol, mons) if c != 0]
        # exact check on fresh samples, including non-integral roots
        for _ in range(30):
            a0 = rng.choice([1, 3, -2])
            r = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(6)]
            a = coeffs_from_roots(a0, r)
            got = sum(c * eval_mon(a, e) for c, e in table[k])
            assert got == root_invariants(a0, r)[k], (k, got)
    names = ["kI2Terms", "kI4Terms", "kI6Terms", "kI10Terms"]
    w = sys.stdout.write
    w("// Generated by tools/gen_sextic_invariants.py; do not edit.\n")
    w("// Each row: coefficient, exponents of a0..a6 for f = sum a_i t^(6-i).\n\n")
    for k, name in enumerate(names):
        w(f"inline constexpr InvariantTerm {name}[] = {{\n")
        for c, e in table[k]:
            w(f"    {{{c.numerator}, {{{', '.join(map(str, e))}}}}},\n")
        w("};\n\n")


def eval_mon(a, e):
    v = Fraction(1)
    for ai, ei in zip(a, e):
        v *= ai ** ei
    return v


if __name__ == "__main__":
    main()
