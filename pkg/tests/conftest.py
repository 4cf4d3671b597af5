"""Shared helpers: independent oracles and random exact matrix generators.

The cofactor-expansion determinant here is deliberately naive and separate
from the production path; it is the oracle the fast determinant is judged
against (n <= 5 keeps it affordable).
"""

import random
from fractions import Fraction

from tnnlu import IndexSet, Mat


def det_cofactor(rows):
    """Recursive cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        rest = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * det_cofactor(rest)
        total += term if j % 2 == 0 else -term
    return total


def minor_cofactor(A, I, J):
    """Minor of A via the naive oracle; I, J are iterables of 1-based indices."""
    return det_cofactor([[A.entry(i, j) for j in J] for i in I])


def random_rational_matrix(rng, m, n, span=4, denoms=(1, 1, 2, 3)):
    """Dense matrix of small rationals of both signs."""
    return Mat(m, n, [Fraction(rng.randint(-span, span), rng.choice(denoms)) for _ in range(m * n)])


def random_ascending_subset(rng, limit, size):
    return IndexSet(sorted(rng.sample(range(1, limit + 1), size)))


def random_class_L(rng, m, r, starred=False):
    """Random matrix (entries of any sign) in the lower class with leaders r."""
    r = list(r)
    t = len(r)
    entries = []
    for i in range(1, m + 1):
        for j in range(1, t + 1):
            if i < r[j - 1]:
                entries.append(Fraction(0))
            elif i == r[j - 1]:
                entries.append(Fraction(1) if starred else Fraction(rng.choice((-3, -2, -1, 1, 2, 3))))
            else:
                entries.append(Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2))))
    return Mat(m, t, entries)


def random_class_U(rng, n, c):
    """Random matrix (entries of any sign) in the upper class with leaders c."""
    c = list(c)
    t = len(c)
    entries = []
    for i in range(1, t + 1):
        for j in range(1, n + 1):
            if j < c[i - 1]:
                entries.append(Fraction(0))
            elif j == c[i - 1]:
                entries.append(Fraction(rng.choice((-3, -2, -1, 1, 2, 3))))
            else:
                entries.append(Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2))))
    return Mat(t, n, entries)


def seeded(seed):
    return random.Random(seed)
