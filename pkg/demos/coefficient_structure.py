"""
Anatomy of one rescaling pass
=============================

A pass with merge factor f replaces n segments by floor(n / f) new ones.
New segment k covers the interval [k*f, (k+1)*f] on the chain's index
axis, and its weight on old segment j is the length of overlap with
[j, j+1].  All weights are exact rationals, every row sums to exactly f,
and when n / f is an integer every column sums to exactly 1 (nothing is
lost).  When n / f is not an integer the tail of the chain is dropped.
"""

from fractions import Fraction

from rgsmooth import brute_force_coefficients, overlap_coefficients

# The canonical example: 7 segments merged at factor 4/3.
m = overlap_coefficients(7, Fraction(4, 3))
print(f"7 segments at factor {m.factor}: {m.n_new} new segments")
for k, row in enumerate(m.rows):
    terms = " + ".join(f"{w} * t{j + 1}" for j, w in row.entries)
    print(f"  new t{k + 1} = {terms}    (row sum {row.weight_sum})")
print("column sums:", ", ".join(str(s) for s in m.column_sums()))
print("7 / (4/3) is not an integer, so the last third of t7 is lost.\n")

# Full coverage: 4 segments at the same factor consume everything.
m4 = overlap_coefficients(4, Fraction(4, 3))
print(f"4 segments at factor {m4.factor}: column sums", list(map(str, m4.column_sums())))
print()

# Whatever the factor, the closed-form overlap rule agrees with a plain
# enumeration that walks the chain tick by tick.
for factor in (Fraction(2), Fraction(3, 2), Fraction(13, 12), Fraction(7, 4)):
    for n in range(2, 16):
        if (n * factor.denominator) // factor.numerator < 1:
            continue
        assert overlap_coefficients(n, factor) == brute_force_coefficients(n, factor)
print("closed form == tick enumeration for all factors and sizes tried")

# The dense float view of a matrix, handy for inspection.
print("\ndense matrix for 5 segments at 5/4:")
print(overlap_coefficients(5, Fraction(5, 4)).to_dense())
