#!/usr/bin/env python3
"""Regenerate the bundled sequence fixtures under fixtures/.

Each fixture is a b-file: comment lines starting with '#' (the first one
carries 'offset=<k>'), then '<index> <value>' lines. Values come from the
closed forms stated in each file's header, computed here in exact integer
arithmetic, independently of the Rust implementation they test.
"""

from fractions import Fraction
from math import comb, factorial
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def write(name, offset, values, comments):
    path = os.path.join(OUT, name + ".txt")
    with open(path, "w") as f:
        f.write(f"# offset={offset}\n")
        for c in comments:
            f.write(f"# {c}\n")
        for i, v in enumerate(values):
            assert v == int(v), (name, i, v)
            f.write(f"{offset + i} {int(v)}\n")
    print(f"wrote {path} ({len(values)} values)")


def box(t, k, n):
    acc = Fraction(1)
    for i in range(1, t + 1):
        for j in range(1, k + 1):
            acc *= Fraction(i + j + n - 1, i + j - 1)
    assert acc.denominator == 1
    return acc.numerator


def hexagon(k, n):
    acc = Fraction(1)
    for i in range(1, n + 1):
        for t in range(k, 2 * k):
            acc *= i + t
        for j in range(0, k):
            acc /= i + j
    assert acc.denominator == 1
    return acc.numerator


def main():
    os.makedirs(OUT, exist_ok=True)

    write("A000027", 1, list(range(1, 41)), ["A000027: the natural numbers, a(n) = n"])

    write("A000217", 0, [n * (n + 1) // 2 for n in range(41)],
          ["A000217: triangular numbers, a(n) = n(n+1)/2"])

    write("A000292", 0, [n * (n + 1) * (n + 2) // 6 for n in range(41)],
          ["A000292: tetrahedral numbers, a(n) = n(n+1)(n+2)/6"])

    write("A000330", 0, [n * (n + 1) * (2 * n + 1) // 6 for n in range(41)],
          ["A000330: square pyramidal numbers, a(n) = n(n+1)(2n+1)/6"])

    write("A002415", 0, [n * n * (n * n - 1) // 12 for n in range(41)],
          ["A002415: 4-dimensional pyramidal numbers, a(n) = n^2(n^2-1)/12"])

    write("A006542", 0, [comb(n, 3) * comb(n - 1, 3) // 4 if n >= 1 else 0 for n in range(41)],
          ["A006542: a(n) = C(n,3)*C(n-1,3)/4"])

    a006858 = []
    for n in range(31):
        v = Fraction((n + 1) * (n + 2) * (n + 3) * (2 * n + 3) * (2 * n + 4) * (2 * n + 5), 360)
        assert v.denominator == 1
        a006858.append(v.numerator)
    write("A006858", 0, a006858,
          ["A006858: a(n) = (n+1)(n+2)(n+3)(2n+3)(2n+4)(2n+5)/360",
           "plane partitions of staircase shape (3,2,1) with entries <= n"])

    write("A047819", 0, [box(3, 3, n) for n in range(31)],
          ["A047819: plane partitions in a 3x3 box with entries <= n,",
           "a(n) = prod_{i,j=1..3} (i+j+n-1)/(i+j-1)"])

    a140934 = []
    for n in range(26):
        v = Fraction((n + 12) * comb(n + 11, 11) ** 2, 12 * (n + 1))
        assert v.denominator == 1
        a140934.append(v.numerator)
    write("A140934", 0, a140934,
          ["A140934: 2x11 nondecreasing 0..n arrays,",
           "a(n) = (n+12)/(12n+12) * C(n+11,11)^2"])

    write("A101093", 0,
          [sum((n - i + 1) * i ** 6 for i in range(n + 1)) for n in range(31)],
          ["A101093: second partial sums of sixth powers,",
           "a(n) = sum_{i=0..n} (n-i+1)*i^6"])

    narayana = []
    for n in range(1, 13):
        for k in range(1, n + 1):
            v = Fraction(comb(n - 1, k - 1) * comb(n, k - 1), k)
            assert v.denominator == 1
            narayana.append(v.numerator)
    write("A001263", 1, narayana,
          ["A001263: Narayana triangle, T(n,k) = C(n-1,k-1)*C(n,k-1)/k",
           "layout: rows n=1..12, row n has n entries (k=1..n), row-major"])

    sq = []
    for k in range(0, 11):
        for i in range(0, k + 1):
            sq.append(comb(k, i) ** 2)
    write("A008459", 0, sq,
          ["A008459: squared binomial coefficients, T(k,i) = C(k,i)^2",
           "layout: rows k=0..10, row k has k+1 entries (i=0..k), row-major"])

    rows = [[1]]
    for k in range(2, 9):
        prev = rows[-1]
        row = []
        for i in range(1, k + 1):
            v = 0
            if i <= len(prev):
                v += i * prev[i - 1]
            if i >= 2 and i - 1 <= len(prev):
                v += (2 * k - i) * prev[i - 2]
            row.append(v)
        rows.append(row)
    write("A008517", 1, [v for row in rows for v in row],
          ["A008517: second-order Eulerian triangle,",
           "T(k,i) = i*T(k-1,i) + (2k-i)*T(k-1,i-1), T(1,1) = 1",
           "layout: rows k=1..8, row k has k entries (i=1..k), row-major"])

    hexv = []
    for k in range(1, 7):
        for n in range(0, 9):
            hexv.append(hexagon(k, n))
    write("A103905", 0, hexv,
          ["A103905: lozenge tilings of a <k,n,k> hexagon,",
           "T(k,n) = prod_{i=1..n} prod_{t=k..2k-1}(i+t) / prod_{j=0..k-1}(i+j)",
           "layout: rows k=1..6, columns n=0..8, row-major"])

    mk = []
    for k in range(0, 6):
        for n in range(0, 11):
            v = Fraction(
                factorial(n + k + 1) * factorial(2 * n + 2 * k + 1),
                factorial(n + 1) * factorial(2 * n + 1) * factorial(k + 1) * factorial(2 * k + 1),
            )
            assert v.denominator == 1
            mk.append(v.numerator)
    write("A111910", 0, mk,
          ["A111910: T(k,n) = (n+k+1)!(2n+2k+1)!/((n+1)!(2n+1)!(k+1)!(2k+1)!)",
           "layout: rows k=0..5, columns n=0..10, row-major"])


if __name__ == "__main__":
    main()
