"""Determinantal identities as callable checks and as term-level objects.

The Laplace relations, the Cauchy-Binet identity, and Sylvester's identity
are exposed as direct evaluators over exact matrices; they double as
oracles in the test suite.  Two-factor homogeneous identities (sums of
products of a pair of minors) are also represented extensionally as
`TermIdentity` values so that new valid identities can be derived from old
ones by adjoining disjoint row and column index sets to every minor.

All sign bookkeeping goes through `inversion_count`; there are no ad-hoc
parity computations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import (
    IndexSet,
    IndexSetLike,
    Mat,
    det,
    inversion_count,
    matmul,
    minor,
    submatrix,
)

IndexPair = tuple[IndexSet, IndexSet]


def _sign(count: int) -> int:
    return -1 if count % 2 else 1


@dataclass(frozen=True)
class MinorTerm:
    """coefficient * [first] * [second], each factor a (rows, cols) minor."""

    coefficient: Fraction
    first: IndexPair
    second: IndexPair

    def __post_init__(self) -> None:
        for rows, cols in (self.first, self.second):
            if len(rows) != len(cols):
                raise ValueError(f"minor needs equal-cardinality index sets: {rows!r}, {cols!r}")


@dataclass(frozen=True)
class TermIdentity:
    """A sum of two-factor minor terms expected to vanish identically."""

    terms: tuple[MinorTerm, ...]


def evaluate_identity(identity: TermIdentity, A: Mat) -> Fraction:
    """Exact value of the term sum on a concrete matrix."""
    total = Fraction(0)
    for term in identity.terms:
        total += (
            term.coefficient
            * minor(A, term.first[0], term.first[1])
            * minor(A, term.second[0], term.second[1])
        )
    return total


def laplace_three_term(i: int, s: int, j: int, k: int) -> TermIdentity:
    """The 3-term relation [i|j][s,s+1|jk] - [s|j][i,s+1|jk] + [s+1|j][i,s|jk].

    Requires i < s and j < k.  It vanishes identically (it is the
    overlapping-column branch of a Laplace relation) and is the usual seed
    for extension by further rows and columns.
    """
    if not i < s:
        raise ValueError(f"need i < s, got i={i}, s={s}")
    if not j < k:
        raise ValueError(f"need j < k, got j={j}, k={k}")
    one = Fraction(1)
    jk = IndexSet((j, k))
    return TermIdentity(
        (
            MinorTerm(one, (IndexSet((i,)), IndexSet((j,))), (IndexSet((s, s + 1)), jk)),
            MinorTerm(-one, (IndexSet((s,)), IndexSet((j,))), (IndexSet((i, s + 1)), jk)),
            MinorTerm(one, (IndexSet((s + 1,)), IndexSet((j,))), (IndexSet((i, s)), jk)),
        )
    )


def muir_extend(identity: TermIdentity, P: IndexSetLike, Q: IndexSetLike) -> TermIdentity:
    """Adjoin rows P and columns Q to every minor of a vanishing identity.

    P must be disjoint from every row set and Q from every column set in
    the identity (|P| = |Q|); the extended identity vanishes identically
    whenever the original does.
    """
    P = IndexSet.coerce(P)
    Q = IndexSet.coerce(Q)
    if len(P) != len(Q):
        raise ValueError(f"|P| must equal |Q|: {P!r}, {Q!r}")
    extended = []
    for term in identity.terms:
        for rows, _ in (term.first, term.second):
            if not P.isdisjoint(rows):
                raise ValueError(f"P = {P!r} overlaps row set {rows!r}")
        for _, cols in (term.first, term.second):
            if not Q.isdisjoint(cols):
                raise ValueError(f"Q = {Q!r} overlaps column set {cols!r}")
        extended.append(
            MinorTerm(
                term.coefficient,
                (term.first[0].disjoint_union(P), term.first[1].disjoint_union(Q)),
                (term.second[0].disjoint_union(P), term.second[1].disjoint_union(Q)),
            )
        )
    return TermIdentity(tuple(extended))


def laplace_sum_rows(A: Mat, I: IndexSetLike, J1: IndexSetLike, J2: IndexSetLike) -> Fraction:
    """Signed sum over all splits I = I1 ⊔ I2 of [I1|J1]·[I2|J2].

    Equals the sign-adjusted minor [I | J1 ⊔ J2] when J1 and J2 are
    disjoint, and exactly 0 when they overlap.
    """
    I = IndexSet.coerce(I)
    J1 = IndexSet.coerce(J1)
    J2 = IndexSet.coerce(J2)
    if len(J1) + len(J2) != len(I):
        raise ValueError(f"|J1| + |J2| must equal |I|: {J1!r}, {J2!r}, {I!r}")
    total = Fraction(0)
    for chosen in combinations(I.indices, len(J1)):
        I1 = IndexSet(chosen)
        I2 = I.difference(I1)
        total += _sign(inversion_count(I1, I2)) * minor(A, I1, J1) * minor(A, I2, J2)
    return total


def laplace_sum_cols(A: Mat, J: IndexSetLike, I1: IndexSetLike, I2: IndexSetLike) -> Fraction:
    """Column dual: signed sum over splits J = J1 ⊔ J2 of [I1|J1]·[I2|J2]."""
    J = IndexSet.coerce(J)
    I1 = IndexSet.coerce(I1)
    I2 = IndexSet.coerce(I2)
    if len(I1) + len(I2) != len(J):
        raise ValueError(f"|I1| + |I2| must equal |J|: {I1!r}, {I2!r}, {J!r}")
    total = Fraction(0)
    for chosen in combinations(J.indices, len(I1)):
        J1 = IndexSet(chosen)
        J2 = J.difference(J1)
        total += _sign(inversion_count(J1, J2)) * minor(A, I1, J1) * minor(A, I2, J2)
    return total


def vanishing_check(A: Mat, I: IndexSetLike, J: IndexSetLike, J1: IndexSetLike) -> bool:
    """Instance check of the vanishing lemma, fixing a column subset.

    If [I1|J1] = 0 for every I1 ⊆ I of matching size, then [I|J] must be 0.
    Returns whether the implication holds here (vacuously true when the
    hypothesis fails); correct arithmetic can never make this false.
    """
    I = IndexSet.coerce(I)
    J = IndexSet.coerce(J)
    J1 = IndexSet.coerce(J1)
    if len(I) != len(J):
        raise ValueError(f"|I| must equal |J|: {I!r}, {J!r}")
    if not J1.issubset(J):
        raise ValueError(f"J1 = {J1!r} must be contained in J = {J!r}")
    hypothesis = all(
        minor(A, IndexSet(sub), J1) == 0 for sub in combinations(I.indices, len(J1))
    )
    if not hypothesis:
        return True
    return minor(A, I, J) == 0


def vanishing_check_dual(A: Mat, I: IndexSetLike, J: IndexSetLike, I1: IndexSetLike) -> bool:
    """Row-fixing dual of `vanishing_check`."""
    I = IndexSet.coerce(I)
    J = IndexSet.coerce(J)
    I1 = IndexSet.coerce(I1)
    if len(I) != len(J):
        raise ValueError(f"|I| must equal |J|: {I!r}, {J!r}")
    if not I1.issubset(I):
        raise ValueError(f"I1 = {I1!r} must be contained in I = {I!r}")
    hypothesis = all(
        minor(A, I1, IndexSet(sub)) == 0 for sub in combinations(J.indices, len(I1))
    )
    if not hypothesis:
        return True
    return minor(A, I, J) == 0


def cauchy_binet_check(A: Mat, B: Mat, I: IndexSetLike, J: IndexSetLike) -> bool:
    """Verify [I|J] of A·B against the sum over inner index sets K of
    [I|K]_A · [K|J]_B.  Always true; exposed for harnessing."""
    if A.ncols != B.nrows:
        raise ValueError(f"cannot multiply {A.nrows}x{A.ncols} by {B.nrows}x{B.ncols}")
    I = IndexSet.coerce(I)
    J = IndexSet.coerce(J)
    if len(I) != len(J):
        raise ValueError(f"|I| must equal |J|: {I!r}, {J!r}")
    if len(I) > A.ncols:
        raise ValueError(f"minor order {len(I)} exceeds inner dimension {A.ncols}")
    left = minor(matmul(A, B), I, J)
    right = Fraction(0)
    for K in combinations(range(1, A.ncols + 1), len(I)):
        right += minor(A, I, K) * minor(B, K, J)
    return left == right


def sylvester_check(A: Mat, m: int) -> bool:
    """Verify Sylvester's identity for the order-m bordered-minor matrix.

    For an n x n matrix, B[i, j] = [1..m, m+i | 1..m, m+j] and det(B) must
    equal det(A) * [1..m | 1..m]^(n-m-1).  Only the multiplicative form is
    ever checked (with 0^0 = 1), so a singular leading block is fine.
    """
    if A.nrows != A.ncols:
        raise ValueError(f"square matrix required, got {A.nrows}x{A.ncols}")
    n = A.nrows
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n = {n}, got m = {m}")
    lead = tuple(range(1, m + 1))
    B = Mat(
        n - m,
        n - m,
        (
            minor(A, lead + (m + i,), lead + (m + j,))
            for i in range(1, n - m + 1)
            for j in range(1, n - m + 1)
        ),
    )
    left = det(B)
    right = det(A) * minor(A, lead, lead) ** (n - m - 1)
    return left == right


def _random_matrix(rng: random.Random, nrows: int, ncols: int) -> Mat:
    entries = [
        Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3)))
        for _ in range(nrows * ncols)
    ]
    return Mat(nrows, ncols, entries)


def _random_subset(rng: random.Random, limit: int, size: int) -> IndexSet:
    return IndexSet(sorted(rng.sample(range(1, limit + 1), size)))


def selftest(seed: int = 0, instances: int = 100, size: int = 5) -> dict[str, dict[str, int]]:
    """Run each identity family on seeded random exact instances.

    Returns, per family, the number of instances run and of failures
    (which should always be 0).  The Laplace families exercise both the
    disjoint and the overlapping branch; the overlapping branch must
    return exactly 0 every time.
    """
    if size < 3:
        raise ValueError("size must be at least 3")
    rng = random.Random(seed)
    results: dict[str, dict[str, int]] = {}

    def run(name: str, attempt) -> None:
        failures = sum(0 if attempt() else 1 for _ in range(instances))
        results[name] = {"instances": instances, "failures": failures}

    def laplace_rows_instance() -> bool:
        n = rng.randint(2, size)
        A = _random_matrix(rng, n, n)
        si = rng.randint(1, n)
        I = _random_subset(rng, n, si)
        s1 = rng.randint(0, si)
        J1 = _random_subset(rng, n, s1)
        if rng.random() < 0.5 and s1 and si - s1:
            J2 = _random_subset(rng, n, si - s1)  # overlap allowed
        else:
            rest = [j for j in range(1, n + 1) if j not in J1]
            if len(rest) < si - s1:
                return True
            J2 = IndexSet(sorted(rng.sample(rest, si - s1)))
        value = laplace_sum_rows(A, I, J1, J2)
        if not J1.isdisjoint(J2):
            return value == 0
        union = J1.disjoint_union(J2)
        return value == _sign(inversion_count(J1, J2)) * minor(A, I, union)

    def laplace_cols_instance() -> bool:
        n = rng.randint(2, size)
        A = _random_matrix(rng, n, n)
        sj = rng.randint(1, n)
        J = _random_subset(rng, n, sj)
        s1 = rng.randint(0, sj)
        I1 = _random_subset(rng, n, s1)
        if rng.random() < 0.5 and s1 and sj - s1:
            I2 = _random_subset(rng, n, sj - s1)
        else:
            rest = [i for i in range(1, n + 1) if i not in I1]
            if len(rest) < sj - s1:
                return True
            I2 = IndexSet(sorted(rng.sample(rest, sj - s1)))
        value = laplace_sum_cols(A, J, I1, I2)
        if not I1.isdisjoint(I2):
            return value == 0
        union = I1.disjoint_union(I2)
        return value == _sign(inversion_count(I1, I2)) * minor(A, union, J)

    def cauchy_binet_instance() -> bool:
        m = rng.randint(1, size)
        t = rng.randint(1, size)
        n = rng.randint(1, size)
        A = _random_matrix(rng, m, t)
        B = _random_matrix(rng, t, n)
        k = rng.randint(0, min(m, t, n))
        I = _random_subset(rng, m, k)
        J = _random_subset(rng, n, k)
        return cauchy_binet_check(A, B, I, J)

    def sylvester_instance() -> bool:
        n = rng.randint(2, size)
        A = _random_matrix(rng, n, n)
        return sylvester_check(A, rng.randint(1, n - 1))

    def muir_instance() -> bool:
        n = size
        A = _random_matrix(rng, n, n)
        i, s = 1, rng.randint(2, n - 2) if n >= 4 else 2
        j, k = 1, rng.randint(2, n)
        base = laplace_three_term(i, s, j, k)
        used_rows = {i, s, s + 1}
        used_cols = {j, k}
        free_rows = [x for x in range(1, n + 1) if x not in used_rows]
        free_cols = [x for x in range(1, n + 1) if x not in used_cols]
        ext = rng.randint(0, min(len(free_rows), len(free_cols)))
        P = IndexSet(sorted(rng.sample(free_rows, ext)))
        Q = IndexSet(sorted(rng.sample(free_cols, ext)))
        return evaluate_identity(muir_extend(base, P, Q), A) == 0

    run("laplace_rows", laplace_rows_instance)
    run("laplace_cols", laplace_cols_instance)
    run("cauchy_binet", cauchy_binet_instance)
    run("sylvester", sylvester_instance)
    run("muir_extended", muir_instance)
    return results
